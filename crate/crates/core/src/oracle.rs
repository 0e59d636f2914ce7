//! Brute-force toric kernels.
//!
//! The presentation ideals are kernels of monomial maps, so in each
//! multidegree they are spanned by differences of monomials with equal image.
//! This module enumerates monomials up to a degree bound, groups them by
//! image, and uses the groups to check candidate bases independently of how
//! the candidates were built.

use std::collections::{BTreeMap, HashMap};

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::Serialize;

use crate::diagram::{generator_monomial, DiagramCollection, FerrersDiagram};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, inter_reduce, is_groebner, BinomialBasis, Budget, Reducer};
use crate::poly::{make_binomial, Binomial, Monomial, MonomialOrder, Universe, VarId, VarKind};

/// Which algebra the kernel presents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MapKind {
    /// Special fiber: `T[(a);i] ↦ x_a · t_i` (or `x_a · x[n+1,i]` for copies of one diagram).
    Fiber,
    /// Multi-Rees algebra: `T[(a);i] ↦ x_a · t_i`, `x ↦ x`.
    Rees,
}

/// A collection of diagrams together with the monomial map whose kernel is studied.
#[derive(Debug, Clone)]
pub struct ToricInstance {
    diagrams: DiagramCollection,
    kind: MapKind,
    universe: Universe,
    images: Vec<Monomial>,
    x_vars: Vec<VarId>,
}

impl ToricInstance {
    pub fn new(diagrams: DiagramCollection, kind: MapKind) -> ToricInstance {
        let universe = Universe::new(
            diagrams
                .diagrams()
                .iter()
                .enumerate()
                .flat_map(|(i, d)| d.points().map(move |p| (p.clone(), i as u32 + 1))),
        );
        // Copies of one diagram use the (n+1)-dimensional product diagram in fiber mode.
        let tilde_block = (kind == MapKind::Fiber && diagrams.all_equal())
            .then(|| diagrams.diagrams()[0].dimension() as u32 + 1);
        let images = universe
            .t_ids()
            .map(|id| {
                let (p, comp) = universe.t_entry(id).expect("interned");
                let tag = match tilde_block {
                    Some(block) => VarId::x(block, comp),
                    None => VarId::u(comp),
                };
                generator_monomial(p).mul(&Monomial::var(tag))
            })
            .collect();
        let n = diagrams.diagrams().iter().map(FerrersDiagram::dimension).max().unwrap_or(1) as u32;
        let m = diagrams.diagrams().iter().map(FerrersDiagram::max_coordinate).max().unwrap_or(1);
        let x_vars = (1..=n).flat_map(|i| (1..=m).map(move |j| VarId::x(i, j))).collect();
        ToricInstance { diagrams, kind, universe, images, x_vars }
    }

    /// Special fiber of `r` copies of `d`, identified with the fiber of `D × [r]`.
    pub fn fiber(d: &FerrersDiagram, r: u32) -> Result<ToricInstance> {
        Ok(ToricInstance::new(DiagramCollection::repeated(d, r)?, MapKind::Fiber))
    }

    /// Multi-Rees algebra of `r` copies of `d`.
    pub fn rees(d: &FerrersDiagram, r: u32) -> Result<ToricInstance> {
        Ok(ToricInstance::new(DiagramCollection::repeated(d, r)?, MapKind::Rees))
    }

    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn diagrams(&self) -> &DiagramCollection {
        &self.diagrams
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// The base-ring variables `x[i,j]`, `i ≤ n`, `j ≤ m`.
    pub fn x_vars(&self) -> &[VarId] {
        &self.x_vars
    }

    /// The order the kernel is oriented for by default.
    pub fn default_order(&self) -> MonomialOrder {
        match self.kind {
            MapKind::Fiber => MonomialOrder::SigmaLex,
            MapKind::Rees => MonomialOrder::Product,
        }
    }

    fn image_of_t(&self, v: VarId) -> Result<&Monomial> {
        v.t_index()
            .and_then(|k| self.images.get(k))
            .ok_or_else(|| Error::Argument(format!("T-variable {} outside the instance", v.0)))
    }

    /// Image of `m` under the instance's monomial map.
    pub fn monomial_map(&self, m: &Monomial) -> Result<Monomial> {
        let mut out = Vec::new();
        for &(v, e) in m.terms() {
            match v.kind() {
                VarKind::T => {
                    let img = self.image_of_t(v)?;
                    out.extend(img.terms().iter().map(|&(w, f)| (w, f * e)));
                }
                VarKind::X if self.kind == MapKind::Rees => out.push((v, e)),
                _ => {
                    return Err(Error::Argument(format!(
                        "variable {} is not in the domain of the {:?} map",
                        self.universe.var_name(v),
                        self.kind
                    )))
                }
            }
        }
        Ok(Monomial::from_terms(out))
    }

    /// Whether both sides of `b` have the same image.
    pub fn in_kernel(&self, b: &Binomial) -> Result<bool> {
        Ok(self.monomial_map(&b.lead)? == self.monomial_map(&b.trail)?)
    }
}

/// Enumeration limits for the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    /// Largest number of monomials enumerated across all degrees.
    pub max_monomials: usize,
    pub groebner: Budget,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_monomials: 20_000_000, groebner: Budget::default() }
    }
}

/// Dense exponent vectors of images, used as hash keys.
struct ImageTable {
    dense: Vec<Vec<u16>>,
    x_dense: Vec<Vec<u16>>,
}

impl ImageTable {
    fn new(inst: &ToricInstance) -> ImageTable {
        let mut slots: BTreeMap<VarId, usize> = BTreeMap::new();
        for img in &inst.images {
            for v in img.vars() {
                slots.entry(v).or_insert(0);
            }
        }
        if inst.kind == MapKind::Rees {
            for &v in &inst.x_vars {
                slots.entry(v).or_insert(0);
            }
        }
        for (k, slot) in slots.values_mut().enumerate() {
            *slot = k;
        }
        let width = slots.len();
        let densify = |m: &Monomial| {
            let mut d = vec![0u16; width];
            for &(v, e) in m.terms() {
                d[slots[&v]] += e as u16;
            }
            d
        };
        ImageTable {
            dense: inst.images.iter().map(densify).collect(),
            x_dense: match inst.kind {
                MapKind::Rees => inst.x_vars.iter().map(|&v| densify(&Monomial::var(v))).collect(),
                MapKind::Fiber => Vec::new(),
            },
        }
    }
}

/// The monomials of one slice of the enumeration, grouped by image.
struct Slice {
    groups: Vec<Vec<Monomial>>,
}

/// Multisets of size `degree` over `0..count`, in lexicographic order.
fn for_each_multiset(count: usize, degree: usize, mut f: impl FnMut(&[usize])) {
    if count == 0 {
        return;
    }
    let mut idx = vec![0usize; degree];
    loop {
        f(&idx);
        let mut k = degree;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            if idx[k] + 1 < count {
                idx[k] += 1;
                let v = idx[k];
                idx[k + 1..].iter_mut().for_each(|x| *x = v);
                break;
            }
        }
    }
}

fn binomial_count(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n + i) / (i + 1))
}

/// The `(T-degree, x-degree)` slices enumerated up to T-degree `d`.
fn slices(kind: MapKind, d: u32) -> Vec<(u32, u32)> {
    match kind {
        MapKind::Fiber => (2..=d).map(|e| (e, 0)).collect(),
        MapKind::Rees => (1..=d).flat_map(|e| [(e, 0), (e, 1)]).filter(|&(e, x)| e >= 2 || x == 1).collect(),
    }
}

fn enumerate_slice(
    inst: &ToricInstance,
    table: &ImageTable,
    order: MonomialOrder,
    t_degree: u32,
    x_degree: u32,
    mut visit: impl FnMut(Monomial, Vec<u16>),
) {
    let t_ids: Vec<VarId> = inst.universe.t_ids().collect();
    let x_choices: Vec<Option<usize>> =
        if x_degree == 0 { vec![None] } else { (0..inst.x_vars.len()).map(Some).collect() };
    for_each_multiset(t_ids.len(), t_degree as usize, |combo| {
        let mut key = vec![0u16; table.dense.first().map_or(0, Vec::len)];
        for &k in combo {
            for (a, b) in key.iter_mut().zip(&table.dense[k]) {
                *a += b;
            }
        }
        let t_part = Monomial::from_vars(combo.iter().map(|&k| t_ids[k]));
        for &xc in &x_choices {
            let (m, k) = match xc {
                None => (t_part.clone(), key.clone()),
                Some(xi) => {
                    let mut k = key.clone();
                    for (a, b) in k.iter_mut().zip(&table.x_dense[xi]) {
                        *a += b;
                    }
                    (t_part.mul(&Monomial::var(inst.x_vars[xi])), k)
                }
            };
            visit(m, k);
        }
    });
    let _ = order;
}

fn slice_size(inst: &ToricInstance, t_degree: u32, x_degree: u32) -> usize {
    let xs = if x_degree == 0 { 1 } else { inst.x_vars.len() };
    binomial_count(inst.universe.t_count(), t_degree as usize).saturating_mul(xs)
}

fn check_budget(inst: &ToricInstance, d: u32, budget: &OracleBudget) -> Result<()> {
    let total: usize = slices(inst.kind, d).iter().map(|&(e, x)| slice_size(inst, e, x)).sum();
    if total > budget.max_monomials {
        return Err(Error::Limit(format!(
            "kernel enumeration up to degree {d} needs {total} monomials (limit {})",
            budget.max_monomials
        )));
    }
    Ok(())
}

fn grouped_slices(inst: &ToricInstance, order: MonomialOrder, d: u32, budget: &OracleBudget) -> Result<Vec<Slice>> {
    check_budget(inst, d, budget)?;
    let table = ImageTable::new(inst);
    let mut out = Vec::new();
    for (e, x) in slices(inst.kind, d) {
        let mut map: HashMap<Vec<u16>, Vec<Monomial>> = HashMap::new();
        enumerate_slice(inst, &table, order, e, x, |m, key| map.entry(key).or_default().push(m));
        let mut groups: Vec<Vec<Monomial>> = map
            .into_values()
            .filter(|g| g.len() > 1)
            .map(|mut g| {
                g.sort_by(|a, b| order.compare(a, b));
                g
            })
            .collect();
        groups.sort_by(|a, b| order.compare(&a[0], &b[0]));
        out.push(Slice { groups });
    }
    Ok(out)
}

/// Spanning binomials of the kernel up to T-degree `d`: each member of an image
/// group minus the group's smallest member in `order`.
///
/// Fiber instances enumerate T-degrees `2..=d`. Rees instances enumerate
/// T-degrees `1..=d` with an `x`-multiplier of degree at most one.
pub fn kernel_binomials(inst: &ToricInstance, order: MonomialOrder, d: u32, budget: &OracleBudget) -> Result<BinomialBasis> {
    let mut out = Vec::new();
    for slice in grouped_slices(inst, order, d, budget)? {
        for g in slice.groups {
            let rep = &g[0];
            out.extend(g[1..].iter().map(|m| Binomial { lead: m.clone(), trail: rep.clone() }));
        }
    }
    Ok(BinomialBasis::new(order, out))
}

/// Reduced Gröbner basis of the ideal spanned by [`kernel_binomials`] at degree `d`,
/// and whether moving to degree `d + 1` leaves it unchanged.
#[derive(Debug, Clone)]
pub struct KernelBasis {
    pub basis: BinomialBasis,
    pub stable: bool,
}

pub fn reduced_kernel_gb(inst: &ToricInstance, order: MonomialOrder, d: u32, budget: &OracleBudget) -> Result<KernelBasis> {
    let gens = kernel_binomials(inst, order, d, budget)?;
    let basis = inter_reduce(&buchberger(&gens, &budget.groebner)?);
    let stable = degree_slice_is_captured(inst, &basis, d + 1, budget)?;
    Ok(KernelBasis { basis, stable })
}

/// True when every kernel binomial of the top slice(s) at T-degree `d` lies in
/// the ideal of the Gröbner basis `gb`.
///
/// With `gb` a Gröbner basis contained in the kernel, every monomial reduces
/// to a standard monomial in its own image group, so the slice is captured
/// exactly when each image group holds exactly one standard monomial. Adding
/// those binomials would then not change the ideal, hence not the reduced basis.
pub fn degree_slice_is_captured(inst: &ToricInstance, gb: &BinomialBasis, d: u32, budget: &OracleBudget) -> Result<bool> {
    let top: Vec<(u32, u32)> = slices(inst.kind, d).into_iter().filter(|&(e, _)| e == d).collect();
    let total: usize = top.iter().map(|&(e, x)| slice_size(inst, e, x)).sum();
    if total > budget.max_monomials {
        return Err(Error::Limit(format!("stability check needs {total} monomials (limit {})", budget.max_monomials)));
    }
    let table = ImageTable::new(inst);
    let reducer = gb.reducer();
    for (e, x) in top {
        let mut standard_per_group: HashMap<Vec<u16>, u32> = HashMap::new();
        enumerate_slice(inst, &table, gb.order(), e, x, |m, key| {
            let c = standard_per_group.entry(key).or_insert(0);
            if !reducer.is_reducible(&m) {
                *c += 1;
            }
        });
        if standard_per_group.values().any(|&c| c != 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of [`verify_candidate`].
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    /// Every candidate element lies in the kernel.
    pub sound: bool,
    /// The candidate passes Buchberger's criterion.
    pub gb_closed: bool,
    /// Every kernel binomial up to the degree bound reduces to zero.
    pub complete_at_degree: bool,
    pub max_degree: u32,
    /// Rendered elements that failed one of the checks (at most a handful per check).
    pub failing_witnesses: Vec<String>,
    pub degree_histogram: BTreeMap<u32, usize>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.sound && self.gb_closed && self.complete_at_degree
    }
}

const WITNESS_CAP: usize = 5;

/// Soundness, Gröbner closure and completeness up to T-degree `d`.
pub fn verify_candidate(
    candidate: &BinomialBasis,
    inst: &ToricInstance,
    d: u32,
    budget: &OracleBudget,
) -> Result<VerificationReport> {
    let order = candidate.order();
    let u = &inst.universe;
    let mut witnesses = Vec::new();

    let mut sound = true;
    for b in candidate.elements() {
        if !inst.in_kernel(b)? {
            sound = false;
            if witnesses.len() < WITNESS_CAP {
                witnesses.push(format!("not in kernel: {}", u.render_binomial(order, b)));
            }
        }
    }

    let report = is_groebner(candidate);
    if let Some(fp) = &report.failing_spair {
        witnesses.push(format!(
            "S-pair ({}, {}) leaves {}",
            u.render_binomial(order, &fp.f),
            u.render_binomial(order, &fp.g),
            u.render_binomial(order, &fp.remainder)
        ));
    }

    let reducer = candidate.reducer();
    let slices = grouped_slices(inst, order, d, budget)?;
    let groups: Vec<&Vec<Monomial>> = slices.iter().flat_map(|s| s.groups.iter()).collect();
    #[cfg(feature = "parallel")]
    let mut survivors: Vec<Binomial> = groups.par_iter().flat_map_iter(|g| surviving_members(&reducer, g)).collect();
    #[cfg(not(feature = "parallel"))]
    let mut survivors: Vec<Binomial> = groups.iter().flat_map(|g| surviving_members(&reducer, g)).collect();
    survivors.sort_by(|a, b| crate::poly::binomial_cmp(order, a, b));
    let complete = survivors.is_empty();
    witnesses.extend(
        survivors.iter().take(WITNESS_CAP).map(|b| format!("kernel element survives: {}", u.render_binomial(order, b))),
    );

    Ok(VerificationReport {
        sound,
        gb_closed: report.is_groebner,
        complete_at_degree: complete,
        max_degree: d,
        failing_witnesses: witnesses,
        degree_histogram: candidate.degree_histogram(),
    })
}

fn surviving_members(reducer: &Reducer, group: &[Monomial]) -> Vec<Binomial> {
    let order_rep = reducer.reduce_monomial(&group[0]);
    group[1..]
        .iter()
        .filter(|m| reducer.reduce_monomial(m) != order_rep)
        .map(|m| Binomial { lead: m.clone(), trail: group[0].clone() })
        .collect()
}

/// Orients a list of binomials for the instance's default order.
pub fn oriented(inst: &ToricInstance, elems: impl IntoIterator<Item = Binomial>) -> BinomialBasis {
    BinomialBasis::new(inst.default_order(), elems.into_iter().filter_map(|b| make_binomial(inst.default_order(), b.lead, b.trail)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::pt;

    fn square() -> FerrersDiagram {
        FerrersDiagram::closure(2, &[pt(&[2, 2])]).unwrap()
    }

    fn t(inst: &ToricInstance, c: &[u32], comp: u32) -> Monomial {
        Monomial::var(inst.universe().t_var(&pt(c), comp).unwrap())
    }

    fn x(i: u32, j: u32) -> Monomial {
        Monomial::var(VarId::x(i, j))
    }

    #[test]
    fn monomial_map_examples() {
        let f = ToricInstance::fiber(&square(), 1).unwrap();
        assert_eq!(f.monomial_map(&t(&f, &[2, 2], 1)).unwrap(), x(1, 2).mul(&x(2, 2)).mul(&x(3, 1)));
        let lhs = f.monomial_map(&t(&f, &[1, 1], 1).mul(&t(&f, &[2, 2], 1))).unwrap();
        let rhs = f.monomial_map(&t(&f, &[1, 2], 1).mul(&t(&f, &[2, 1], 1))).unwrap();
        assert_eq!(lhs, rhs);
        assert!(f.monomial_map(&x(1, 1)).is_err());

        let r = ToricInstance::rees(&square(), 2).unwrap();
        let m = x(1, 1).mul(&t(&r, &[2, 1], 2));
        assert_eq!(
            r.monomial_map(&m).unwrap(),
            x(1, 1).mul(&x(1, 2)).mul(&x(2, 1)).mul(&Monomial::var(VarId::u(2)))
        );
    }

    #[test]
    fn in_kernel_rejects_different_images() {
        let f = ToricInstance::fiber(&square(), 1).unwrap();
        let b = make_binomial(MonomialOrder::SigmaLex, t(&f, &[1, 1], 1), t(&f, &[2, 2], 1)).unwrap();
        assert!(!f.in_kernel(&b).unwrap());
    }

    #[test]
    fn square_fiber_kernel_at_degree_two() {
        let f = ToricInstance::fiber(&square(), 1).unwrap();
        let k = kernel_binomials(&f, MonomialOrder::SigmaLex, 2, &OracleBudget::default()).unwrap();
        let det = make_binomial(
            MonomialOrder::SigmaLex,
            t(&f, &[1, 1], 1).mul(&t(&f, &[2, 2], 1)),
            t(&f, &[1, 2], 1).mul(&t(&f, &[2, 1], 1)),
        )
        .unwrap();
        assert_eq!(k.elements(), std::slice::from_ref(&det));
        let kb = reduced_kernel_gb(&f, MonomialOrder::SigmaLex, 2, &OracleBudget::default()).unwrap();
        assert_eq!(kb.basis.elements(), &[det]);
        assert!(kb.stable);
    }

    #[test]
    fn single_point_kernel_is_empty() {
        let one = FerrersDiagram::closure(2, &[pt(&[1, 1])]).unwrap();
        let f = ToricInstance::fiber(&one, 1).unwrap();
        assert!(kernel_binomials(&f, MonomialOrder::SigmaLex, 3, &OracleBudget::default()).unwrap().is_empty());
    }

    #[test]
    fn enumeration_budget_is_enforced() {
        let f = ToricInstance::fiber(&square(), 2).unwrap();
        let tiny = OracleBudget { max_monomials: 10, ..OracleBudget::default() };
        assert!(matches!(kernel_binomials(&f, MonomialOrder::SigmaLex, 3, &tiny), Err(Error::Limit(_))));
    }

    #[test]
    fn multiset_enumeration_counts() {
        let mut n = 0;
        for_each_multiset(5, 3, |_| n += 1);
        assert_eq!(n, binomial_count(5, 3));
        assert_eq!(binomial_count(95, 3), 147_440);
    }
}
