//! Buchberger's algorithm for pure-difference binomial ideals.
//!
//! Reducing a binomial by binomials only ever rewrites one monomial into
//! another, so normal forms are computed monomial by monomial and everything
//! stays a binomial (or zero).

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashMap, HashSet};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::{binomial_cmp, make_binomial, Binomial, Monomial, MonomialOrder, VarId};

/// A canonically sorted, duplicate-free set of nonzero binomials oriented for `order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialBasis {
    order: MonomialOrder,
    elements: Vec<Binomial>,
}

impl BinomialBasis {
    /// Reorients every element for `order`, drops zeros and duplicates, and sorts.
    pub fn new(order: MonomialOrder, elements: impl IntoIterator<Item = Binomial>) -> BinomialBasis {
        let mut elements: Vec<Binomial> =
            elements.into_iter().filter_map(|b| make_binomial(order, b.lead, b.trail)).collect();
        elements.sort_by(|a, b| binomial_cmp(order, a, b));
        elements.dedup();
        BinomialBasis { order, elements }
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn into_elements(self) -> Vec<Binomial> {
        self.elements
    }

    /// Union of two bases under `order`.
    pub fn union(&self, other: &BinomialBasis, order: MonomialOrder) -> BinomialBasis {
        BinomialBasis::new(order, self.elements.iter().chain(&other.elements).cloned())
    }

    /// Number of elements per degree.
    pub fn degree_histogram(&self) -> BTreeMap<u32, usize> {
        let mut h = BTreeMap::new();
        for b in &self.elements {
            *h.entry(b.degree()).or_insert(0) += 1;
        }
        h
    }

    pub fn count_of_degree(&self, degree: u32) -> usize {
        self.elements.iter().filter(|b| b.degree() == degree).count()
    }

    pub fn reducer(&self) -> Reducer {
        Reducer::new(self.order, self.elements.clone())
    }
}

/// Normal-form engine over a fixed list of binomials.
///
/// Leads are indexed by their smallest variable id; a divisor of `m` must have
/// its smallest variable among the variables of `m`.
#[derive(Debug, Clone)]
pub struct Reducer {
    order: MonomialOrder,
    elements: Vec<Binomial>,
    index: HashMap<VarId, Vec<usize>>,
}

impl Reducer {
    pub fn new(order: MonomialOrder, elements: Vec<Binomial>) -> Reducer {
        let mut r = Reducer { order, elements: Vec::new(), index: HashMap::new() };
        for b in elements {
            r.push(b);
        }
        r
    }

    fn push(&mut self, b: Binomial) -> usize {
        let k = self.elements.len();
        if let Some(v) = b.lead.vars().next() {
            self.index.entry(v).or_default().push(k);
        }
        self.elements.push(b);
        k
    }

    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    /// Smallest index whose lead divides `m`.
    pub fn find_divisor(&self, m: &Monomial) -> Option<usize> {
        let mut best: Option<usize> = None;
        for v in m.vars() {
            if let Some(list) = self.index.get(&v) {
                for &k in list {
                    if best.is_some_and(|b| k >= b) {
                        break;
                    }
                    if self.elements[k].lead.divides(m) {
                        best = Some(k);
                        break;
                    }
                }
            }
        }
        best
    }

    /// All indices whose lead divides `m`.
    fn divisors<'a>(&'a self, m: &'a Monomial) -> impl Iterator<Item = usize> + 'a {
        m.vars()
            .filter_map(|v| self.index.get(&v))
            .flatten()
            .copied()
            .filter(move |&k| self.elements[k].lead.divides(m))
    }

    pub fn is_reducible(&self, m: &Monomial) -> bool {
        self.find_divisor(m).is_some()
    }

    /// Rewrites `m` until no lead divides it.
    pub fn reduce_monomial(&self, m: &Monomial) -> Monomial {
        let mut cur = m.clone();
        while let Some(k) = self.find_divisor(&cur) {
            let b = &self.elements[k];
            cur = cur.div(&b.lead).expect("lead divides").mul(&b.trail);
        }
        cur
    }

    /// Normal form of `b`; `None` means zero.
    pub fn normal_form(&self, b: &Binomial) -> Option<Binomial> {
        let lead = self.reduce_monomial(&b.lead);
        let trail = self.reduce_monomial(&b.trail);
        make_binomial(self.order, lead, trail)
    }
}

/// Normal form of a binomial against `basis`; `None` means zero.
pub fn normal_form(b: &Binomial, basis: &BinomialBasis) -> Option<Binomial> {
    basis.reducer().normal_form(b)
}

/// Normal form of a monomial against `basis`.
pub fn normal_form_monomial(m: &Monomial, basis: &BinomialBasis) -> Monomial {
    basis.reducer().reduce_monomial(m)
}

/// The S-polynomial of `f` and `g`; `None` means zero.
pub fn s_polynomial(f: &Binomial, g: &Binomial, order: MonomialOrder) -> Option<Binomial> {
    let l = f.lead.lcm(&g.lead);
    let from_f = l.div(&f.lead).expect("lcm").mul(&f.trail);
    let from_g = l.div(&g.lead).expect("lcm").mul(&g.trail);
    make_binomial(order, from_f, from_g)
}

/// Resource limits for completion. Exceeding any of them aborts with [`Error::Limit`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest degree a new basis element may have.
    pub max_degree: u32,
    /// Largest basis size during completion.
    pub max_basis: usize,
    /// Largest number of S-pairs processed.
    pub max_pairs: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_degree: 10, max_basis: 100_000, max_pairs: 100_000_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Task {
    Generator(usize),
    Pair(u32, u32),
}

/// Completes `gens` to a Gröbner basis under `gens.order()`.
///
/// Normal selection strategy: tasks are processed by degree (the lcm degree
/// for pairs), input generators before pairs of the same degree, ties broken
/// by index. Pairs are pruned by the coprime-lead and chain criteria.
pub fn buchberger(gens: &BinomialBasis, budget: &Budget) -> Result<BinomialBasis> {
    let order = gens.order();
    let mut basis = Reducer::new(order, Vec::new());
    let mut queue: BinaryHeap<Reverse<(u32, Task)>> = BinaryHeap::new();
    let mut pending: HashSet<(u32, u32)> = HashSet::new();
    for (k, g) in gens.elements().iter().enumerate() {
        queue.push(Reverse((g.degree(), Task::Generator(k))));
    }
    let mut pairs_done = 0usize;

    while let Some(Reverse((_, task))) = queue.pop() {
        let candidate = match task {
            Task::Generator(k) => basis.normal_form(&gens.elements()[k]),
            Task::Pair(i, j) => {
                pending.remove(&(i, j));
                pairs_done += 1;
                if pairs_done > budget.max_pairs {
                    return Err(Error::Limit(format!("more than {} S-pairs", budget.max_pairs)));
                }
                let (f, g) = (&basis.elements()[i as usize], &basis.elements()[j as usize]);
                let l = f.lead.lcm(&g.lead);
                let chain = basis.divisors(&l).any(|k| {
                    let k = k as u32;
                    k != i
                        && k != j
                        && !pending.contains(&(i.min(k), i.max(k)))
                        && !pending.contains(&(j.min(k), j.max(k)))
                });
                if chain {
                    continue;
                }
                s_polynomial(f, g, order).and_then(|s| basis.normal_form(&s))
            }
        };
        let Some(h) = candidate else { continue };
        if h.degree() > budget.max_degree {
            return Err(Error::Limit(format!("basis element of degree {} exceeds {}", h.degree(), budget.max_degree)));
        }
        if basis.elements().len() >= budget.max_basis {
            return Err(Error::Limit(format!("basis grew beyond {} elements", budget.max_basis)));
        }
        let j = basis.push(h) as u32;
        let new_lead = &basis.elements()[j as usize].lead;
        for (i, f) in basis.elements()[..j as usize].iter().enumerate() {
            if f.lead.is_coprime(new_lead) {
                continue;
            }
            let deg = f.lead.lcm(new_lead).degree();
            pending.insert((i as u32, j));
            queue.push(Reverse((deg, Task::Pair(i as u32, j))));
        }
    }
    Ok(BinomialBasis::new(order, basis.elements))
}

/// The reduced Gröbner basis of the ideal generated by the Gröbner basis `basis`.
pub fn inter_reduce(basis: &BinomialBasis) -> BinomialBasis {
    let order = basis.order();
    let mut sorted: Vec<&Binomial> = basis.elements().iter().collect();
    sorted.sort_by(|a, b| binomial_cmp(order, a, b));
    let mut minimal = Reducer::new(order, Vec::new());
    for b in sorted {
        if !minimal.is_reducible(&b.lead) {
            minimal.push(b.clone());
        }
    }
    let reduced = minimal
        .elements()
        .iter()
        .map(|b| Binomial { lead: b.lead.clone(), trail: minimal.reduce_monomial(&b.trail) });
    BinomialBasis::new(order, reduced)
}

/// `inter_reduce(buchberger(gens))`.
pub fn reduced_groebner_basis(gens: &BinomialBasis, budget: &Budget) -> Result<BinomialBasis> {
    Ok(inter_reduce(&buchberger(gens, budget)?))
}

/// A failed S-pair check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailingPair {
    pub f: Binomial,
    pub g: Binomial,
    pub remainder: Binomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GBReport {
    pub is_groebner: bool,
    pub failing_spair: Option<FailingPair>,
    pub reduced_basis: Option<BinomialBasis>,
    pub initial_squarefree: bool,
    pub degree_histogram: BTreeMap<u32, usize>,
}

/// Buchberger's criterion: every S-pair with non-coprime leads reduces to zero.
///
/// Pairs are checked in parallel (with the `parallel` feature); the reported failure is the first one in
/// (i, j) order, so the report does not depend on scheduling.
pub fn is_groebner(candidate: &BinomialBasis) -> GBReport {
    let order = candidate.order();
    let reducer = candidate.reducer();
    let elems = candidate.elements();
    let check_row = |i: usize| {
        (i + 1..elems.len()).find_map(|j| {
            let (f, g) = (&elems[i], &elems[j]);
            if f.lead.is_coprime(&g.lead) {
                return None;
            }
            let rem = s_polynomial(f, g, order).and_then(|s| reducer.normal_form(&s))?;
            Some(FailingPair { f: f.clone(), g: g.clone(), remainder: rem })
        })
    };
    #[cfg(feature = "parallel")]
    let failing = (0..elems.len()).into_par_iter().find_map_first(check_row);
    #[cfg(not(feature = "parallel"))]
    let failing = (0..elems.len()).find_map(check_row);
    let is_gb = failing.is_none();
    let reduced = is_gb.then(|| inter_reduce(candidate));
    GBReport {
        is_groebner: is_gb,
        failing_spair: failing,
        initial_squarefree: initial_squarefree(reduced.as_ref().unwrap_or(candidate)),
        reduced_basis: reduced,
        degree_histogram: candidate.degree_histogram(),
    }
}

/// Whether every leading monomial is squarefree.
pub fn initial_squarefree(basis: &BinomialBasis) -> bool {
    basis.elements().iter().all(|b| b.lead.is_squarefree())
}

/// Compares minimal leads of two bases, the generators of their initial ideals.
pub fn same_initial_ideal(a: &BinomialBasis, b: &BinomialBasis) -> bool {
    let leads = |x: &BinomialBasis| {
        let mut v: Vec<Monomial> = inter_reduce(x).elements().iter().map(|b| b.lead.clone()).collect();
        v.sort_by(|p, q| x.order().compare(p, q));
        v
    };
    a.order() == b.order() && leads(a) == leads(b)
}
