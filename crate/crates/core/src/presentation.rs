//! Candidate Gröbner bases built from the combinatorics of the diagram.
//!
//! * Interchange binomials `T_a T_b − T_p T_q`, where `p` and `q` swap the
//!   coordinates of `a` and `b` on a subset `H` of the axes.
//! * Linear relations `x[k,k1]·T_(a;i) − x[k,a_k]·T_(b;i)` that lower one
//!   coordinate of `a`.
//!
//! For `r` copies of a diagram `D` the fiber candidate is the set of
//! interchange binomials of `D × [r]`, and the Rees candidate adds the
//! linear relations.

use std::collections::BTreeSet;

use crate::diagram::{generator_monomial, FerrersDiagram};
use crate::error::{Error, Result};
use crate::groebner::BinomialBasis;
use crate::oracle::ToricInstance;
use crate::point::LatticePoint;
use crate::poly::{make_binomial, Binomial, Monomial, MonomialOrder, Universe, VarId, VarKind};

/// The pieces of the Rees candidate for `r` copies of a diagram.
#[derive(Debug, Clone)]
pub struct PresentationCandidate {
    /// Rees instance; its universe names every variable below.
    pub instance: ToricInstance,
    /// Interchange binomials, `SigmaLex`.
    pub fiber_part: BinomialBasis,
    /// Linear relations, `Product`.
    pub linear_part: BinomialBasis,
    /// Union of both parts, `Product`.
    pub rees_candidate: BinomialBasis,
}

/// Resolves points of `d` to `T`-variables. Points of `D × [r]` carry the
/// component as last coordinate; points of `D` itself use component 1.
fn t_lookup<'a>(universe: &'a Universe, d: &FerrersDiagram) -> Result<impl Fn(&LatticePoint) -> Result<VarId> + 'a> {
    let base_dim = universe
        .t_ids()
        .next()
        .and_then(|v| universe.t_entry(v))
        .map(|(p, _)| p.dim())
        .ok_or_else(|| Error::Argument("empty variable universe".into()))?;
    let tuple = if d.dimension() == base_dim + 1 {
        true
    } else if d.dimension() == base_dim {
        false
    } else {
        return Err(Error::Dimension { expected: base_dim, got: d.dimension() });
    };
    Ok(move |p: &LatticePoint| if tuple { universe.t_var_of_tuple(p.coords()) } else { universe.t_var(p, 1) })
}

/// The points `p, q` obtained from `a, b` by swapping the coordinates indexed by `h` (1-based).
pub fn interchange_points(a: &LatticePoint, b: &LatticePoint, h: &BTreeSet<usize>) -> (LatticePoint, LatticePoint) {
    let (mut p, mut q) = (a.coords().to_vec(), b.coords().to_vec());
    for &k in h {
        std::mem::swap(&mut p[k - 1], &mut q[k - 1]);
    }
    (LatticePoint::from_vec_unchecked(p), LatticePoint::from_vec_unchecked(q))
}

fn check_subset(h: &BTreeSet<usize>, dim: usize) -> Result<()> {
    match h.iter().find(|&&k| k == 0 || k > dim) {
        Some(k) => Err(Error::Argument(format!("axis {k} is outside 1..={dim}"))),
        None => Ok(()),
    }
}

/// `T_a T_b − T_p T_q` oriented under `SigmaLex`, or `None` when `p` or `q`
/// leaves `d` or the two monomials coincide.
pub fn interchange(
    universe: &Universe,
    d: &FerrersDiagram,
    a: &LatticePoint,
    b: &LatticePoint,
    h: &BTreeSet<usize>,
) -> Result<Option<Binomial>> {
    for x in [a, b] {
        if !d.contains(x)? {
            return Err(Error::Argument(format!("{x} is not a point of the diagram")));
        }
    }
    check_subset(h, d.dimension())?;
    let t = t_lookup(universe, d)?;
    interchange_with(&t, d, a, b, h)
}

fn interchange_with(
    t: &impl Fn(&LatticePoint) -> Result<VarId>,
    d: &FerrersDiagram,
    a: &LatticePoint,
    b: &LatticePoint,
    h: &BTreeSet<usize>,
) -> Result<Option<Binomial>> {
    let (p, q) = interchange_points(a, b, h);
    if !d.contains_coords(p.coords()) || !d.contains_coords(q.coords()) {
        return Ok(None);
    }
    let lhs = Monomial::from_vars([t(a)?, t(b)?]);
    let rhs = Monomial::from_vars([t(&p)?, t(&q)?]);
    Ok(make_binomial(MonomialOrder::SigmaLex, lhs, rhs))
}

/// Every nonzero interchange binomial of `D × [r]`, deduplicated and sorted.
pub fn fiber_candidate(d: &FerrersDiagram, r: u32) -> Result<BinomialBasis> {
    let inst = ToricInstance::fiber(d, r)?;
    let tilde = d.tilde(r)?;
    let t = t_lookup(inst.universe(), &tilde)?;
    let points: Vec<&LatticePoint> = tilde.points().collect();
    let dim = tilde.dimension();
    // H and its complement give the same binomial, so fixing 1 ∉ H loses nothing.
    let subsets: Vec<BTreeSet<usize>> =
        (0u64..1 << (dim - 1)).map(|mask| (2..=dim).filter(|k| mask >> (k - 2) & 1 == 1).collect()).collect();
    let mut out = Vec::new();
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            for h in &subsets {
                out.extend(interchange_with(&t, &tilde, a, b, h)?);
            }
        }
    }
    Ok(BinomialBasis::new(MonomialOrder::SigmaLex, out))
}

/// `x[k,k1]·T_(a;i) − x[k,a_k]·T_(b;i)` for every `a ∈ D`, axis `k`, `k1 < a_k`
/// and component `i`, where `b` is `a` with `k`-th coordinate `k1`.
pub fn rees_linear_relations(d: &FerrersDiagram, r: u32) -> Result<BinomialBasis> {
    let inst = ToricInstance::rees(d, r)?;
    linear_relations_in(&inst, d, r)
}

fn linear_relations_in(inst: &ToricInstance, d: &FerrersDiagram, r: u32) -> Result<BinomialBasis> {
    let u = inst.universe();
    let mut out = Vec::new();
    for a in d.points() {
        for k in 1..=d.dimension() {
            let ak = a.coords()[k - 1];
            for k1 in 1..ak {
                let mut b = a.coords().to_vec();
                b[k - 1] = k1;
                let b = LatticePoint::from_vec_unchecked(b);
                for i in 1..=r {
                    let lhs = Monomial::from_vars([VarId::x(k as u32, k1), u.t_var(a, i)?]);
                    let rhs = Monomial::from_vars([VarId::x(k as u32, ak), u.t_var(&b, i)?]);
                    out.extend(make_binomial(MonomialOrder::Product, lhs, rhs));
                }
            }
        }
    }
    Ok(BinomialBasis::new(MonomialOrder::Product, out))
}

/// Interchange binomials together with the linear relations, under `Product`.
pub fn rees_candidate(d: &FerrersDiagram, r: u32) -> Result<PresentationCandidate> {
    let instance = ToricInstance::rees(d, r)?;
    let fiber_part = fiber_candidate(d, r)?;
    let linear_part = linear_relations_in(&instance, d, r)?;
    let rees_candidate = fiber_part.union(&linear_part, MonomialOrder::Product);
    Ok(PresentationCandidate { instance, fiber_part, linear_part, rees_candidate })
}

/// Generators of one equigenerated monomial ideal, each paired with its `T`-variable.
#[derive(Debug, Clone)]
pub struct LabelledGenerators(pub Vec<(VarId, Monomial)>);

/// Adds the linear relations to a Gröbner basis of the fiber for arbitrary
/// equigenerated monomial ideals.
///
/// For each generator `f` and each ring variable `x_k1`, the relation
/// `x_k1·T_f − x_k2·T_f'` is emitted for the smallest-ranked `x_k2` (ranked
/// below `x_k1`) with `f' = x_k1·f / x_k2` again a generator of the same ideal.
/// Ring variables are the `x`-variables occurring in some generator.
pub fn generic_rees_from_fiber(components: &[LabelledGenerators], fiber_gb: &BinomialBasis) -> Result<BinomialBasis> {
    let mut ring_vars: BTreeSet<VarId> = BTreeSet::new();
    for comp in components {
        let mut degrees = comp.0.iter().map(|(_, m)| m.degree());
        if let Some(d0) = degrees.next() {
            if degrees.any(|d| d != d0) {
                return Err(Error::Argument("component is not equigenerated".into()));
            }
        }
        for (t, m) in &comp.0 {
            if t.kind() != VarKind::T || m.vars().any(|v| v.kind() != VarKind::X) {
                return Err(Error::Argument("generators must be x-monomials labelled by T-variables".into()));
            }
            ring_vars.extend(m.vars());
        }
    }
    let mut out = Vec::new();
    for comp in components {
        for (tf, f) in &comp.0 {
            for &k1 in &ring_vars {
                // Ranked below x_k1 means a larger id; scan from the lowest-ranked variable.
                let found = f.vars().filter(|&k2| k2 > k1).collect::<Vec<_>>().into_iter().rev().find_map(|k2| {
                    let g = f.mul(&Monomial::var(k1)).div(&Monomial::var(k2)).ok()?;
                    comp.0.iter().find(|(_, m)| *m == g).map(|(tg, _)| (k2, *tg))
                });
                if let Some((k2, tg)) = found {
                    let lhs = Monomial::from_vars([k1, *tf]);
                    let rhs = Monomial::from_vars([k2, tg]);
                    out.extend(make_binomial(MonomialOrder::Product, lhs, rhs));
                }
            }
        }
    }
    Ok(fiber_gb.union(&BinomialBasis::new(MonomialOrder::Product, out), MonomialOrder::Product))
}

/// Ferrers generators labelled by the instance's `T`-variables, one list per component.
pub fn labelled_generators(inst: &ToricInstance) -> Vec<LabelledGenerators> {
    let u = inst.universe();
    inst.diagrams()
        .diagrams()
        .iter()
        .enumerate()
        .map(|(i, d)| {
            LabelledGenerators(
                d.points()
                    .map(|p| (u.t_var(p, i as u32 + 1).expect("universe covers the diagram"), generator_monomial(p)))
                    .collect(),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::is_groebner;
    use crate::oracle::{kernel_binomials, OracleBudget};
    use crate::point::pt;

    fn square() -> FerrersDiagram {
        FerrersDiagram::closure(2, &[pt(&[2, 2])]).unwrap()
    }

    fn staircase() -> FerrersDiagram {
        FerrersDiagram::closure(2, &[pt(&[1, 2]), pt(&[2, 1])]).unwrap()
    }

    fn h(ks: &[usize]) -> BTreeSet<usize> {
        ks.iter().copied().collect()
    }

    #[test]
    fn interchange_examples() {
        let d = square();
        let inst = ToricInstance::fiber(&d, 1).unwrap();
        let u = inst.universe();
        let t = |c: &[u32]| u.t_var(&pt(c), 1).unwrap();
        let b = interchange(u, &d, &pt(&[1, 1]), &pt(&[2, 2]), &h(&[1])).unwrap().unwrap();
        assert_eq!(b.lead, Monomial::from_vars([t(&[1, 1]), t(&[2, 2])]));
        assert_eq!(b.trail, Monomial::from_vars([t(&[2, 1]), t(&[1, 2])]));
        assert_eq!(interchange(u, &d, &pt(&[1, 2]), &pt(&[1, 2]), &h(&[1])).unwrap(), None);
        assert!(interchange(u, &d, &pt(&[1, 3]), &pt(&[1, 1]), &h(&[1])).is_err());
        assert!(interchange(u, &d, &pt(&[1, 1]), &pt(&[2, 2]), &h(&[3])).is_err());

        let s = staircase();
        let inst = ToricInstance::fiber(&s, 1).unwrap();
        assert_eq!(interchange(inst.universe(), &s, &pt(&[1, 2]), &pt(&[2, 1]), &h(&[1])).unwrap(), None);
    }

    #[test]
    fn interchange_symmetry() {
        let d = FerrersDiagram::closure(3, &[pt(&[2, 2, 1]), pt(&[1, 2, 2]), pt(&[3, 1, 1])]).unwrap();
        let inst = ToricInstance::fiber(&d, 1).unwrap();
        let u = inst.universe();
        let pts: Vec<_> = d.points().cloned().collect();
        for a in &pts {
            for b in &pts {
                for mask in 0..8usize {
                    let hs: BTreeSet<usize> = (1..=3).filter(|k| mask >> (k - 1) & 1 == 1).collect();
                    let comp: BTreeSet<usize> = (1..=3).filter(|k| !hs.contains(k)).collect();
                    let x = interchange(u, &d, a, b, &hs).unwrap();
                    assert_eq!(x, interchange(u, &d, b, a, &hs).unwrap());
                    assert_eq!(x, interchange(u, &d, a, b, &comp).unwrap());
                }
            }
        }
    }

    #[test]
    fn fiber_candidate_examples() {
        assert_eq!(fiber_candidate(&square(), 1).unwrap().len(), 1);
        let one = FerrersDiagram::closure(2, &[pt(&[1, 1])]).unwrap();
        for r in 1..=3 {
            assert!(fiber_candidate(&one, r).unwrap().is_empty());
        }
        assert!(fiber_candidate(&staircase(), 1).unwrap().is_empty());
    }

    #[test]
    fn linear_relation_examples() {
        let inst = ToricInstance::rees(&staircase(), 1).unwrap();
        let u = inst.universe();
        let rel = rees_linear_relations(&staircase(), 1).unwrap();
        let rendered: Vec<String> =
            rel.elements().iter().map(|b| u.render_binomial(MonomialOrder::Product, b)).collect();
        assert_eq!(
            rendered,
            ["x[2,1]*T[(1,2);1] - x[2,2]*T[(1,1);1]", "x[1,1]*T[(2,1);1] - x[1,2]*T[(1,1);1]"]
        );
        let one = FerrersDiagram::closure(3, &[pt(&[1, 1, 1])]).unwrap();
        assert!(rees_linear_relations(&one, 2).unwrap().is_empty());
        assert_eq!(rees_linear_relations(&square(), 2).unwrap().len(), 8);
    }

    #[test]
    fn rees_candidate_counts() {
        let c = rees_candidate(&square(), 1).unwrap();
        assert_eq!((c.fiber_part.len(), c.linear_part.len(), c.rees_candidate.len()), (1, 4, 5));
        assert!(is_groebner(&c.rees_candidate).is_groebner);
        let c = rees_candidate(&staircase(), 1).unwrap();
        assert_eq!((c.fiber_part.len(), c.linear_part.len()), (0, 2));
    }

    #[test]
    fn generic_construction_matches_ferrers() {
        for d in [square(), staircase()] {
            for r in 1..=2 {
                let c = rees_candidate(&d, r).unwrap();
                let generic = generic_rees_from_fiber(&labelled_generators(&c.instance), &c.fiber_part).unwrap();
                assert_eq!(generic, c.rees_candidate);
            }
        }
    }

    #[test]
    fn generic_construction_rejects_mixed_degrees() {
        let inst = ToricInstance::rees(&square(), 1).unwrap();
        let mut gens = labelled_generators(&inst);
        gens[0].0[0].1 = Monomial::var(VarId::x(1, 1));
        let empty = BinomialBasis::new(MonomialOrder::SigmaLex, []);
        assert!(generic_rees_from_fiber(&gens, &empty).is_err());
    }

    #[test]
    fn principal_ideal_has_no_linear_relations() {
        let inst = ToricInstance::rees(&FerrersDiagram::closure(2, &[pt(&[1, 1])]).unwrap(), 1).unwrap();
        let empty = BinomialBasis::new(MonomialOrder::SigmaLex, []);
        assert!(generic_rees_from_fiber(&labelled_generators(&inst), &empty).unwrap().is_empty());
    }

    #[test]
    fn linear_relations_are_the_degree_one_kernel() {
        for d in [square(), staircase(), FerrersDiagram::closure(2, &[pt(&[3, 1]), pt(&[1, 2])]).unwrap()] {
            for r in 1..=2 {
                let inst = ToricInstance::rees(&d, r).unwrap();
                let rel = rees_linear_relations(&d, r).unwrap();
                for b in rel.elements() {
                    assert!(inst.in_kernel(b).unwrap());
                }
                // Kernel groups of T-degree one and x-degree one are exactly the relations.
                let k = kernel_binomials(&inst, MonomialOrder::Product, 1, &OracleBudget::default()).unwrap();
                assert_eq!(k, rel);
            }
        }
    }
}
