//! The strong ℓ-exchange property of a collection of equigenerated monomial ideals.
//!
//! Variables are flattened to positions `z_1 > z_2 > … > z_N` (the `x`-variables
//! occurring in some generator, in lex rank). For products `u`, `v` of
//! generators with the same number `w_i` of factors from each ideal `I_i`, let
//! `q` be the first position where their degrees differ and suppose
//! `deg_{z_q} u < deg_{z_q} v`. The property asks for a factor `f` of `u`, from
//! some `I_i`, and a position `q' > q` with `z_q · f / z_{q'} ∈ I_i`.
//!
//! The checker here enumerates all such configurations up to a total weight
//! bound and treats `u` as a factorization, so a witness must be found for
//! every way of writing `u` as a product of generators.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::diagram::{generator_monomial, DiagramCollection};
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, VarId, VarKind};

/// One ideal: its generators in descending lex order, all of degree `degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealComponent {
    pub generators: Vec<Monomial>,
    pub degree: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealCollection {
    components: Vec<IdealComponent>,
    variables: Vec<VarId>,
}

impl IdealCollection {
    pub fn new(components: Vec<Vec<Monomial>>) -> Result<IdealCollection> {
        let mut variables = BTreeSet::new();
        let mut out = Vec::with_capacity(components.len());
        for (i, mut gens) in components.into_iter().enumerate() {
            if gens.is_empty() {
                return Err(Error::Argument(format!("ideal {} has no generators", i + 1)));
            }
            let degree = gens[0].degree();
            if gens.iter().any(|g| g.degree() != degree) {
                return Err(Error::Argument(format!("ideal {} is not equigenerated", i + 1)));
            }
            if gens.iter().flat_map(|g| g.vars()).any(|v| v.kind() != VarKind::X) {
                return Err(Error::Argument("generators must be monomials in x-variables".into()));
            }
            gens.sort_by(|a, b| MonomialOrder::XLex.compare(b, a));
            gens.dedup();
            variables.extend(gens.iter().flat_map(|g| g.vars()));
            out.push(IdealComponent { generators: gens, degree });
        }
        Ok(IdealCollection { components: out, variables: variables.into_iter().collect() })
    }

    /// The ideals `I_D` of a collection of diagrams.
    pub fn from_diagrams(diagrams: &DiagramCollection) -> IdealCollection {
        let comps = diagrams.diagrams().iter().map(|d| d.points().map(generator_monomial).collect()).collect();
        IdealCollection::new(comps).expect("Ferrers ideals are equigenerated")
    }

    pub fn components(&self) -> &[IdealComponent] {
        &self.components
    }

    /// Flattened variables; index `k` is position `k + 1`.
    pub fn variables(&self) -> &[VarId] {
        &self.variables
    }

    /// 1-based position of `v`.
    pub fn position(&self, v: VarId) -> Option<usize> {
        self.variables.binary_search(&v).ok().map(|k| k + 1)
    }

    fn generator_index(&self, comp: usize, m: &Monomial) -> Option<usize> {
        self.components[comp].generators.iter().position(|g| g == m)
    }

    fn dense(&self, m: &Monomial) -> Vec<u32> {
        let mut d = vec![0; self.variables.len()];
        for &(v, e) in m.terms() {
            d[self.position(v).expect("variable of the collection") - 1] += e;
        }
        d
    }
}

/// A factor of a product: generator `index` (0-based, descending lex) of ideal `component` (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Factor {
    pub component: usize,
    pub index: usize,
}

/// A configuration violating the exchange property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExchangeInstance {
    pub weights: Vec<u32>,
    pub u_factors: Vec<Factor>,
    pub v_factors: Vec<Factor>,
    /// 1-based position.
    pub q: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExchangeReport {
    pub holds: bool,
    pub weight_bound: u32,
    /// Number of `(u-factorization, q)` configurations checked.
    pub configurations: usize,
    /// Whether the last position ever qualified as `q`.
    pub last_position_qualified: bool,
    pub counterexample: Option<ExchangeInstance>,
}

/// A successful exchange: `z_q · factor / z_{q'}` lies in the factor's ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExchangeWitness {
    /// Index into the `u`-factorization.
    pub factor: usize,
    /// 1-based position `q'`.
    pub q_prime: usize,
}

/// Weight vectors with `1 ≤ Σ w ≤ bound`, by total then lexicographically.
fn weight_vectors(r: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for total in 1..=bound {
        let mut w = vec![0u32; r];
        fill_weights(&mut w, 0, total, &mut out);
    }
    out
}

fn fill_weights(w: &mut Vec<u32>, k: usize, left: u32, out: &mut Vec<Vec<u32>>) {
    if k + 1 == w.len() {
        w[k] = left;
        out.push(w.clone());
        return;
    }
    for x in 0..=left {
        w[k] = x;
        fill_weights(w, k + 1, left - x, out);
    }
}

/// All factorizations with `w_i` factors from ideal `i`, lexicographic in `(component, index)`.
fn factorizations(ideals: &IdealCollection, w: &[u32]) -> Vec<Vec<Factor>> {
    let mut out = vec![Vec::new()];
    for (c, &wc) in w.iter().enumerate() {
        let count = ideals.components[c].generators.len();
        let mut multisets = Vec::new();
        multisets_rec(count, wc as usize, 0, &mut Vec::new(), &mut multisets);
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Factor>| {
                multisets.iter().map(move |ms: &Vec<usize>| {
                    let mut f = prefix.clone();
                    f.extend(ms.iter().map(|&index| Factor { component: c, index }));
                    f
                })
            })
            .collect();
    }
    out
}

fn multisets_rec(count: usize, left: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if left == 0 {
        out.push(cur.clone());
        return;
    }
    for k in start..count {
        cur.push(k);
        multisets_rec(count, left - 1, k, cur, out);
        cur.pop();
    }
}

fn product(ideals: &IdealCollection, fs: &[Factor]) -> Monomial {
    fs.iter().fold(Monomial::one(), |acc, f| acc.mul(&ideals.components[f.component].generators[f.index]))
}

/// The first factor of `u` and smallest `q' > q` with `z_q · f / z_{q'}` in the factor's ideal.
pub fn find_exchange(ideals: &IdealCollection, u_factors: &[Factor], q: usize) -> Option<ExchangeWitness> {
    let zq = Monomial::var(*ideals.variables.get(q.checked_sub(1)?)?);
    for (k, f) in u_factors.iter().enumerate() {
        let g = &ideals.components[f.component].generators[f.index];
        for (qp, &z) in ideals.variables.iter().enumerate().skip(q) {
            if g.exponent(z) == 0 {
                continue;
            }
            let exchanged = g.mul(&zq).div(&Monomial::var(z)).expect("z divides g");
            if ideals.generator_index(f.component, &exchanged).is_some() {
                return Some(ExchangeWitness { factor: k, q_prime: qp + 1 });
            }
        }
    }
    None
}

/// Checks the exchange property for all weight vectors with total at most `bound`.
/// The reported counterexample is the first in enumeration order: weights by
/// total then lex, `u`-factorizations lex, `q` ascending, and the first `v`
/// producing that `q`.
pub fn check_strong_l_exchange(ideals: &IdealCollection, bound: u32) -> Result<ExchangeReport> {
    if bound == 0 {
        return Err(Error::Argument("weight bound must be at least 1".into()));
    }
    let nvars = ideals.variables.len();
    let mut configurations = 0;
    let mut last_position_qualified = false;
    for w in weight_vectors(ideals.components.len(), bound) {
        let facts = factorizations(ideals, &w);
        // Distinct products, each with its first factorization.
        let mut firsts: Vec<(Vec<u32>, usize)> = Vec::new();
        let mut seen: HashMap<Vec<u32>, usize> = HashMap::new();
        let dense: Vec<Vec<u32>> = facts.iter().map(|f| ideals.dense(&product(ideals, f))).collect();
        for (k, d) in dense.iter().enumerate() {
            seen.entry(d.clone()).or_insert_with(|| {
                firsts.push((d.clone(), k));
                k
            });
        }
        let mut q_cache: HashMap<&Vec<u32>, Vec<(usize, usize)>> = HashMap::new();
        for (uf, ud) in facts.iter().zip(&dense) {
            let qs = q_cache.entry(ud).or_insert_with(|| {
                // q ↦ first v achieving it.
                let mut by_q: Vec<Option<usize>> = vec![None; nvars + 1];
                for (vd, vk) in &firsts {
                    if let Some(t) = ud.iter().zip(vd).position(|(a, b)| a != b) {
                        if ud[t] < vd[t] && by_q[t + 1].is_none() {
                            by_q[t + 1] = Some(*vk);
                        }
                    }
                }
                by_q.iter().enumerate().filter_map(|(q, v)| v.map(|v| (q, v))).collect()
            });
            for &(q, vk) in qs.iter() {
                configurations += 1;
                last_position_qualified |= q == nvars;
                if find_exchange(ideals, uf, q).is_none() {
                    return Ok(ExchangeReport {
                        holds: false,
                        weight_bound: bound,
                        configurations,
                        last_position_qualified,
                        counterexample: Some(ExchangeInstance {
                            weights: w.clone(),
                            u_factors: uf.clone(),
                            v_factors: facts[vk].clone(),
                            q,
                        }),
                    });
                }
            }
        }
    }
    Ok(ExchangeReport { holds: true, weight_bound: bound, configurations, last_position_qualified, counterexample: None })
}

/// The constructive witness for Ferrers ideals: with `z_q = x[i0,j0]`, take the
/// smallest `j1 > j0` such that `x[i0,j1]` divides `u`, the first factor
/// containing it, and `q'` the position of `x[i0,j1]`.
pub fn ferrers_exchange_witness(ideals: &IdealCollection, u_factors: &[Factor], q: usize) -> Result<ExchangeWitness> {
    let zq = q
        .checked_sub(1)
        .and_then(|k| ideals.variables.get(k))
        .ok_or_else(|| Error::Argument(format!("position {q} is out of range")))?;
    let (i0, j0) = zq.x_parts().expect("collection variables are x-variables");
    let u = product(ideals, u_factors);
    let z1 = u
        .vars()
        .filter(|v| v.x_parts().is_some_and(|(i, j)| i == i0 && j > j0))
        .min()
        .ok_or_else(|| Error::Precondition(format!("u has no variable x[{i0},j] with j > {j0}")))?;
    let factor = u_factors
        .iter()
        .position(|f| ideals.components[f.component].generators[f.index].exponent(z1) > 0)
        .expect("some factor contains a variable of u");
    let f = u_factors[factor];
    let g = &ideals.components[f.component].generators[f.index];
    let exchanged = g.mul(&Monomial::var(*zq)).div(&Monomial::var(z1)).expect("z1 divides the factor");
    if ideals.generator_index(f.component, &exchanged).is_none() {
        return Err(Error::Precondition("the exchanged monomial leaves the ideal; input is not Ferrers".into()));
    }
    Ok(ExchangeWitness { factor, q_prime: ideals.position(z1).expect("variable of u") })
}

/// Whether `z_q · f / z_{q'}` is a generator of the factor's ideal.
pub fn witness_is_valid(ideals: &IdealCollection, u_factors: &[Factor], q: usize, w: &ExchangeWitness) -> bool {
    let (Some(f), Some(&zq), Some(&zp)) =
        (u_factors.get(w.factor), ideals.variables.get(q.wrapping_sub(1)), ideals.variables.get(w.q_prime.wrapping_sub(1)))
    else {
        return false;
    };
    let g = &ideals.components[f.component].generators[f.index];
    w.q_prime > q
        && g.mul(&Monomial::var(zq))
            .div(&Monomial::var(zp))
            .is_ok_and(|m| ideals.generator_index(f.component, &m).is_some())
}
