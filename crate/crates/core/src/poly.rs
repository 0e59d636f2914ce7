//! Monomials and binomials over the mixed variable universe.
//!
//! Three kinds of variables occur:
//!
//! * `x[i,j]`, the variables of the base ring, one block `i` per coordinate;
//! * `T[(a);i]`, one per generator `x_a` of the `i`-th ideal of a collection;
//! * `t[i]`, the auxiliary Rees variables (they only occur in images of
//!   monomial maps, never in the presentation rings).
//!
//! Variables are identified by a [`VarId`] whose numeric order is the
//! *ranking* used by every monomial order except [`MonomialOrder::PlainLexT`]:
//! a smaller id is a larger variable. `x`-ids come first (block, then index),
//! then `T`-ids in σ order of their extended tuple `(a_1, ..., a_n, i)`, then
//! `t`-ids. With that encoding the product order (lex on `x`, then σ on `T`)
//! is plain lexicographic comparison along the id order.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::point::LatticePoint;

const X_BITS: u32 = 15;
const X_MAX: u32 = (1 << X_BITS) - 1;
const T_BASE: u32 = 1 << 30;
const U_BASE: u32 = 1 << 31;

/// Encoded variable identifier. See the module docs for the encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VarId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarKind {
    X,
    T,
    U,
}

impl VarId {
    /// `x[block, index]`, both 1-based.
    pub fn x(block: u32, index: u32) -> VarId {
        assert!(
            (1..=X_MAX).contains(&block) && (1..=X_MAX).contains(&index),
            "x-variable x[{block},{index}] out of range"
        );
        VarId((block << X_BITS) | index)
    }

    /// `t[i]`, 1-based.
    pub fn u(index: u32) -> VarId {
        assert!((1..T_BASE).contains(&index), "t-variable index out of range");
        VarId(U_BASE + index)
    }

    pub(crate) fn t_slot(slot: usize) -> VarId {
        assert!(slot < (U_BASE - T_BASE) as usize, "too many T-variables");
        VarId(T_BASE + slot as u32)
    }

    pub fn kind(self) -> VarKind {
        if self.0 >= U_BASE {
            VarKind::U
        } else if self.0 >= T_BASE {
            VarKind::T
        } else {
            VarKind::X
        }
    }

    /// `(block, index)` of an `x`-variable.
    pub fn x_parts(self) -> Option<(u32, u32)> {
        (self.kind() == VarKind::X).then_some((self.0 >> X_BITS, self.0 & X_MAX))
    }

    pub(crate) fn t_index(self) -> Option<usize> {
        (self.kind() == VarKind::T).then(|| (self.0 - T_BASE) as usize)
    }

    pub fn u_index(self) -> Option<u32> {
        (self.kind() == VarKind::U).then(|| self.0 - U_BASE)
    }
}

/// A decoded variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Variable {
    X { block: u32, index: u32 },
    /// `T[(point); comp]`. Single diagrams use component 1.
    T { point: LatticePoint, comp: u32 },
    U(u32),
}

/// The `T`-variables of an instance, interned in σ order of `(point, comp)`.
///
/// Two universes built from the same set of `(point, comp)` pairs assign the
/// same ids, so bases built independently for the same diagrams agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    t_vars: Vec<(LatticePoint, u32)>,
    lookup: HashMap<(LatticePoint, u32), VarId>,
}

impl Universe {
    pub fn new(t_vars: impl IntoIterator<Item = (LatticePoint, u32)>) -> Universe {
        let mut t_vars: Vec<_> = t_vars.into_iter().collect();
        t_vars.sort_by(|(a, i), (b, j)| t_key_cmp(a.coords(), *i, b.coords(), *j));
        t_vars.dedup();
        let lookup = t_vars
            .iter()
            .enumerate()
            .map(|(slot, key)| (key.clone(), VarId::t_slot(slot)))
            .collect();
        Universe { t_vars, lookup }
    }

    pub fn t_count(&self) -> usize {
        self.t_vars.len()
    }

    /// All `T`-variables, largest first.
    pub fn t_ids(&self) -> impl Iterator<Item = VarId> + '_ {
        (0..self.t_vars.len()).map(VarId::t_slot)
    }

    pub fn t_var(&self, point: &LatticePoint, comp: u32) -> Result<VarId> {
        self.lookup
            .get(&(point.clone(), comp))
            .copied()
            .ok_or_else(|| Error::Argument(format!("T-variable T[{point};{comp}] is not in the universe")))
    }

    /// The `T`-variable of a point of `D × [r]`: the last coordinate is the component.
    pub fn t_var_of_tuple(&self, tuple: &[u32]) -> Result<VarId> {
        let (comp, point) = tuple
            .split_last()
            .filter(|(_, rest)| !rest.is_empty())
            .ok_or_else(|| Error::Argument("tuple too short to carry a component".into()))?;
        self.t_var(&LatticePoint::from_vec_unchecked(point.to_vec()), *comp)
    }

    pub fn t_entry(&self, id: VarId) -> Option<(&LatticePoint, u32)> {
        id.t_index().and_then(|k| self.t_vars.get(k)).map(|(p, c)| (p, *c))
    }

    pub fn variable(&self, id: VarId) -> Option<Variable> {
        match id.kind() {
            VarKind::X => id.x_parts().map(|(block, index)| Variable::X { block, index }),
            VarKind::T => self.t_entry(id).map(|(p, c)| Variable::T { point: p.clone(), comp: c }),
            VarKind::U => id.u_index().map(Variable::U),
        }
    }

    pub fn var_name(&self, id: VarId) -> String {
        match self.variable(id) {
            Some(Variable::X { block, index }) => format!("x[{block},{index}]"),
            Some(Variable::T { point, comp }) => format!("T[{point};{comp}]"),
            Some(Variable::U(i)) => format!("t[{i}]"),
            None => format!("?{}", id.0),
        }
    }

    /// Canonical text: factors in descending order of `order`, `^e` for powers.
    pub fn render_monomial(&self, order: MonomialOrder, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        let mut out = String::new();
        for (k, (v, e)) in order.ranked_terms(m).into_iter().enumerate() {
            if k > 0 {
                out.push('*');
            }
            out.push_str(&self.var_name(v));
            if e > 1 {
                let _ = write!(out, "^{e}");
            }
        }
        out
    }

    pub fn render_binomial(&self, order: MonomialOrder, b: &Binomial) -> String {
        format!("{} - {}", self.render_monomial(order, &b.lead), self.render_monomial(order, &b.trail))
    }

    /// Exponent map keyed by canonical variable names.
    pub fn exponent_map(&self, m: &Monomial) -> serde_json::Map<String, serde_json::Value> {
        m.terms().iter().map(|(v, e)| (self.var_name(*v), serde_json::Value::from(*e))).collect()
    }
}

/// σ order on extended tuples `(a, i)`, expressed as the order of the ranking keys:
/// `Less` means `(a, i)` is the *larger* variable.
fn t_key_cmp(a: &[u32], i: u32, b: &[u32], j: u32) -> Ordering {
    a.iter().chain(std::iter::once(&i)).cmp(b.iter().chain(std::iter::once(&j)))
}

/// A monomial: variables with positive exponents, sorted by id.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(VarId, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: VarId) -> Monomial {
        Monomial(vec![(v, 1)])
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs; zero exponents are dropped.
    pub fn from_terms(terms: impl IntoIterator<Item = (VarId, u32)>) -> Monomial {
        let mut v: Vec<(VarId, u32)> = terms.into_iter().filter(|(_, e)| *e > 0).collect();
        v.sort_unstable_by_key(|(id, _)| *id);
        let mut out: Vec<(VarId, u32)> = Vec::with_capacity(v.len());
        for (id, e) in v {
            match out.last_mut() {
                Some((last, acc)) if *last == id => *acc += e,
                _ => out.push((id, e)),
            }
        }
        Monomial(out)
    }

    pub fn from_vars(vars: impl IntoIterator<Item = VarId>) -> Monomial {
        Monomial::from_terms(vars.into_iter().map(|v| (v, 1)))
    }

    pub fn terms(&self) -> &[(VarId, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn degree_of_kind(&self, kind: VarKind) -> u32 {
        self.0.iter().filter(|(v, _)| v.kind() == kind).map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.0.binary_search_by_key(&v, |(id, _)| *id).map(|k| self.0[k].1).unwrap_or(0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|(_, e)| *e == 1)
    }

    pub fn vars(&self) -> impl Iterator<Item = VarId> + '_ {
        self.0.iter().map(|(v, _)| *v)
    }

    /// The factor made of the variables of one kind.
    pub fn part(&self, kind: VarKind) -> Monomial {
        Monomial(self.0.iter().copied().filter(|(v, _)| v.kind() == kind).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        let mut it = other.0.iter();
        'outer: for (v, e) in &self.0 {
            for (w, f) in it.by_ref() {
                match w.cmp(v) {
                    Ordering::Less => continue,
                    Ordering::Equal if f >= e => continue 'outer,
                    _ => return false,
                }
            }
            return false;
        }
        true
    }

    /// True when the two monomials share no variable.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }

    fn merge(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let (v, e) = match (a.get(i), b.get(j)) {
                (Some(&(v, x)), Some(&(w, y))) => match v.cmp(&w) {
                    Ordering::Less => {
                        i += 1;
                        (v, f(x, 0))
                    }
                    Ordering::Greater => {
                        j += 1;
                        (w, f(0, y))
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (v, f(x, y))
                    }
                },
                (Some(&(v, x)), None) => {
                    i += 1;
                    (v, f(x, 0))
                }
                (None, Some(&(w, y))) => {
                    j += 1;
                    (w, f(0, y))
                }
                (None, None) => unreachable!(),
            };
            if e > 0 {
                out.push((v, e));
            }
        }
        Monomial(out)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.merge(other, |x, y| x + y)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge(other, u32::max)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.merge(other, u32::min)
    }

    /// Exact quotient `self / other`.
    pub fn div(&self, other: &Monomial) -> Result<Monomial> {
        if !other.divides(self) {
            return Err(Error::Arithmetic("monomial division without divisibility".into()));
        }
        Ok(self.merge(other, |x, y| x - y))
    }
}

/// The monomial orders in play.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonomialOrder {
    /// Lex on `x`-variables, `x[i,j] > x[i',j']` iff `(i,j) <lex (i',j')`.
    XLex,
    /// Lex on `T`-variables ranked by σ on `(a, i)`.
    SigmaLex,
    /// Lex on the `x`-part, ties broken by σ-lex on the `T`-part.
    Product,
    /// Lex on `T`-variables ranked by ordinary lex on `(a, i)`: larger tuple, larger variable.
    PlainLexT,
}

impl MonomialOrder {
    fn accepts(self, kind: VarKind) -> bool {
        matches!(
            (self, kind),
            (MonomialOrder::XLex, VarKind::X)
                | (MonomialOrder::SigmaLex | MonomialOrder::PlainLexT, VarKind::T)
                | (MonomialOrder::Product, VarKind::X | VarKind::T)
        )
    }

    pub fn check(self, m: &Monomial) -> Result<()> {
        match m.vars().find(|v| !self.accepts(v.kind())) {
            None => Ok(()),
            Some(v) => Err(Error::Argument(format!("variable {:?} is not ranked by order {self:?}", v.kind()))),
        }
    }

    /// Compares two monomials, rejecting variables the order does not rank.
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.compare(a, b))
    }

    /// Unchecked comparison; variables outside the order's universe are ranked by id.
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::PlainLexT => {
                let (ax, at) = split_t(a);
                let (bx, bt) = split_t(b);
                lex_forward(ax, bx).then_with(|| lex_backward(at, bt))
            }
            _ => lex_forward(&a.0, &b.0),
        }
    }

    /// Variables of `m` in descending rank.
    pub fn ranked_terms(self, m: &Monomial) -> Vec<(VarId, u32)> {
        let mut terms = m.0.clone();
        if self == MonomialOrder::PlainLexT {
            let cut = terms.iter().position(|(v, _)| v.kind() != VarKind::X).unwrap_or(terms.len());
            let end = terms.iter().position(|(v, _)| v.kind() == VarKind::U).unwrap_or(terms.len());
            terms[cut..end].reverse();
        }
        terms
    }
}

type Terms<'a> = &'a [(VarId, u32)];

fn split_t(m: &Monomial) -> (Terms<'_>, Terms<'_>) {
    let cut = m.0.iter().position(|(v, _)| v.kind() != VarKind::X).unwrap_or(m.0.len());
    m.0.split_at(cut)
}

// Lex along increasing id (= decreasing rank).
fn lex_forward(a: &[(VarId, u32)], b: &[(VarId, u32)]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if x.0 != y.0 {
            // The side holding the higher-ranked (smaller id) variable is larger.
            return if x.0 < y.0 { Ordering::Greater } else { Ordering::Less };
        }
        if x.1 != y.1 {
            return x.1.cmp(&y.1);
        }
    }
    a.len().cmp(&b.len())
}

// Lex along decreasing id (used for the reversed T-ranking).
fn lex_backward(a: &[(VarId, u32)], b: &[(VarId, u32)]) -> Ordering {
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        if x.0 != y.0 {
            return if x.0 > y.0 { Ordering::Greater } else { Ordering::Less };
        }
        if x.1 != y.1 {
            return x.1.cmp(&y.1);
        }
    }
    a.len().cmp(&b.len())
}

/// A pure-difference binomial `lead - trail` with `lead > trail` in the order it was built for.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Binomial {
    pub lead: Monomial,
    pub trail: Monomial,
}

impl Binomial {
    pub fn degree(&self) -> u32 {
        self.lead.degree().max(self.trail.degree())
    }
}

/// `m1 - m2` oriented so that the lead is the larger monomial; `None` when they coincide.
pub fn make_binomial(order: MonomialOrder, m1: Monomial, m2: Monomial) -> Option<Binomial> {
    match order.compare(&m1, &m2) {
        Ordering::Equal => None,
        Ordering::Greater => Some(Binomial { lead: m1, trail: m2 }),
        Ordering::Less => Some(Binomial { lead: m2, trail: m1 }),
    }
}

/// Canonical ordering of binomials: by lead, then trail, both ascending in `order`.
pub fn binomial_cmp(order: MonomialOrder, a: &Binomial, b: &Binomial) -> Ordering {
    order.compare(&a.lead, &b.lead).then_with(|| order.compare(&a.trail, &b.trail))
}
