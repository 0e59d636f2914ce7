//! n-dimensional Ferrers diagrams.
//!
//! A diagram is stored as its explicit, sorted point set. Every constructor
//! goes through [`FerrersDiagram::closure`], so downward closure holds by
//! construction.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::point::LatticePoint;
use crate::poly::{Monomial, VarId};

/// A finite, nonempty, downward-closed set of positive lattice points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FerrersDiagram {
    dimension: usize,
    points: BTreeSet<LatticePoint>,
}

/// One violation of the standardizability condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StandardizabilityWitness {
    pub a: LatticePoint,
    pub b: LatticePoint,
    /// 1-based position of the first coordinate where `a` and `b` differ.
    pub k: usize,
    /// `(a_1, ..., a_k, max(a_{k+1}, b_{k+1}), ..., max(a_n, b_n))`, absent from the diagram.
    pub missing: LatticePoint,
}

/// JSON file format: `{"dimension": n, "generators": [[...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramSpec {
    pub dimension: usize,
    pub generators: Vec<LatticePoint>,
}

impl FerrersDiagram {
    /// The smallest Ferrers diagram containing `generators`.
    pub fn closure(dimension: usize, generators: &[LatticePoint]) -> Result<FerrersDiagram> {
        if dimension == 0 {
            return Err(Error::Argument("dimension must be positive".into()));
        }
        if generators.is_empty() {
            return Err(Error::Argument("a Ferrers diagram needs at least one generator".into()));
        }
        if let Some(g) = generators.iter().find(|g| g.dim() != dimension) {
            return Err(Error::Dimension { expected: dimension, got: g.dim() });
        }
        let mut points = BTreeSet::new();
        for g in generators {
            for_each_in_box(g.coords(), |p| {
                points.insert(LatticePoint::from_vec_unchecked(p.to_vec()));
            });
        }
        Ok(FerrersDiagram { dimension, points })
    }

    pub fn from_spec(spec: &DiagramSpec) -> Result<FerrersDiagram> {
        FerrersDiagram::closure(spec.dimension, &spec.generators)
    }

    pub fn from_json(text: &str) -> Result<FerrersDiagram> {
        let spec: DiagramSpec = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        FerrersDiagram::from_spec(&spec)
    }

    /// Compact description via the maximal points.
    pub fn to_spec(&self) -> DiagramSpec {
        DiagramSpec { dimension: self.dimension, generators: self.maximal_points() }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Points in ascending lexicographic order (descending σ order).
    pub fn points(&self) -> impl Iterator<Item = &LatticePoint> + '_ {
        self.points.iter()
    }

    pub fn contains(&self, p: &LatticePoint) -> Result<bool> {
        if p.dim() != self.dimension {
            return Err(Error::Dimension { expected: self.dimension, got: p.dim() });
        }
        Ok(self.points.contains(p))
    }

    pub(crate) fn contains_coords(&self, c: &[u32]) -> bool {
        c.len() == self.dimension
            && c.iter().all(|&x| x >= 1)
            && self.points.contains(&LatticePoint::from_vec_unchecked(c.to_vec()))
    }

    /// Componentwise maximum over all points (the bounding box corner).
    pub fn bounding_box(&self) -> LatticePoint {
        self.points.iter().skip(1).fold(self.points.first().expect("nonempty").clone(), |acc, p| acc.join(p))
    }

    /// Largest coordinate value appearing in the diagram.
    pub fn max_coordinate(&self) -> u32 {
        self.bounding_box().coords().iter().copied().max().unwrap_or(1)
    }

    pub fn is_rectangular(&self) -> bool {
        let corner = self.bounding_box();
        let volume: u128 = corner.coords().iter().map(|&c| c as u128).product();
        volume == self.points.len() as u128
    }

    /// The antichain of componentwise-maximal points, in lexicographic order.
    pub fn maximal_points(&self) -> Vec<LatticePoint> {
        let mut bump = Vec::with_capacity(self.dimension);
        self.points
            .iter()
            .filter(|p| {
                (0..self.dimension).all(|k| {
                    bump.clear();
                    bump.extend_from_slice(p.coords());
                    bump[k] += 1;
                    !self.points.contains(&LatticePoint::from_vec_unchecked(bump.clone()))
                })
            })
            .cloned()
            .collect()
    }

    /// Checks standardizability; on failure returns the lexicographically first violating pair.
    pub fn standardizability_witness(&self) -> Option<StandardizabilityWitness> {
        let pts: Vec<&LatticePoint> = self.points.iter().collect();
        let mut probe = vec![0u32; self.dimension];
        for a in &pts {
            for b in &pts {
                let (ac, bc) = (a.coords(), b.coords());
                let Some(k) = ac.iter().zip(bc).position(|(x, y)| x != y) else { continue };
                if ac[k] > bc[k] {
                    continue;
                }
                probe[..=k].copy_from_slice(&ac[..=k]);
                for j in k + 1..self.dimension {
                    probe[j] = ac[j].max(bc[j]);
                }
                if !self.contains_coords(&probe) {
                    return Some(StandardizabilityWitness {
                        a: (*a).clone(),
                        b: (*b).clone(),
                        k: k + 1,
                        missing: LatticePoint::from_vec_unchecked(probe.clone()),
                    });
                }
            }
        }
        None
    }

    pub fn is_standardizable(&self) -> bool {
        self.standardizability_witness().is_none()
    }

    /// `D × [r]`, an `(n+1)`-dimensional diagram.
    pub fn tilde(&self, r: u32) -> Result<FerrersDiagram> {
        if r == 0 {
            return Err(Error::Argument("r must be positive".into()));
        }
        let points = self.points.iter().flat_map(|p| (1..=r).map(move |i| p.extended(i))).collect();
        Ok(FerrersDiagram { dimension: self.dimension + 1, points })
    }

    /// The smallest standardizable diagram containing `self`: repeatedly adds missing completion points.
    pub fn standardizable_closure(&self) -> FerrersDiagram {
        let mut d = self.clone();
        while let Some(w) = d.standardizability_witness() {
            let mut gens = d.maximal_points();
            gens.push(w.missing);
            d = FerrersDiagram::closure(d.dimension, &gens).expect("same dimension");
        }
        d
    }
}

/// `x_a = x[1,a_1] x[2,a_2] ... x[n,a_n]`.
pub fn generator_monomial(p: &LatticePoint) -> Monomial {
    Monomial::from_vars(p.coords().iter().enumerate().map(|(i, &c)| VarId::x(i as u32 + 1, c)))
}

/// Visits every point of the box `[1..c_1] × ... × [1..c_n]` in lexicographic order.
pub(crate) fn for_each_in_box(corner: &[u32], mut f: impl FnMut(&[u32])) {
    let n = corner.len();
    let mut cur = vec![1u32; n];
    loop {
        f(&cur);
        let mut k = n;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            if cur[k] < corner[k] {
                cur[k] += 1;
                break;
            }
            cur[k] = 1;
        }
    }
}

/// An ordered list of diagrams `D_1, ..., D_r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramCollection(Vec<FerrersDiagram>);

impl DiagramCollection {
    pub fn new(diagrams: Vec<FerrersDiagram>) -> Result<DiagramCollection> {
        if diagrams.is_empty() {
            return Err(Error::Argument("a collection needs at least one diagram".into()));
        }
        Ok(DiagramCollection(diagrams))
    }

    /// `r` copies of the same diagram.
    pub fn repeated(d: &FerrersDiagram, r: u32) -> Result<DiagramCollection> {
        if r == 0 {
            return Err(Error::Argument("r must be positive".into()));
        }
        Ok(DiagramCollection(vec![d.clone(); r as usize]))
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn diagrams(&self) -> &[FerrersDiagram] {
        &self.0
    }

    pub fn all_equal(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }
}
