//! Lattice points in the positive orthant and the σ total order on them.
//!
//! `a >σ b` holds when the first nonzero entry of `a - b` is negative, so the
//! σ order is the reverse of the usual lexicographic order on tuples.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A tuple of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct LatticePoint(Vec<u32>);

impl LatticePoint {
    pub fn new(coords: Vec<u32>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Argument("lattice point must have at least one coordinate".into()));
        }
        if let Some(pos) = coords.iter().position(|&c| c == 0) {
            return Err(Error::Argument(format!(
                "coordinate {} of {:?} is zero; lattice points are positive",
                pos + 1,
                coords
            )));
        }
        Ok(Self(coords))
    }

    /// Builds a point without validation. Callers guarantee positivity.
    pub(crate) fn from_vec_unchecked(coords: Vec<u32>) -> Self {
        debug_assert!(!coords.is_empty() && coords.iter().all(|&c| c >= 1));
        Self(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    /// The point with `value` appended as a new last coordinate.
    pub fn extended(&self, value: u32) -> LatticePoint {
        let mut c = self.0.clone();
        c.push(value);
        LatticePoint::from_vec_unchecked(c)
    }

    /// Componentwise `self <= other`.
    pub fn is_below(&self, other: &LatticePoint) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise maximum.
    pub fn join(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint::from_vec_unchecked(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }
}

impl TryFrom<Vec<u32>> for LatticePoint {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        LatticePoint::new(v)
    }
}

impl From<LatticePoint> for Vec<u32> {
    fn from(p: LatticePoint) -> Self {
        p.0
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Shorthand used throughout the tests: `pt(&[1, 2])`.
pub fn pt(coords: &[u32]) -> LatticePoint {
    LatticePoint::new(coords.to_vec()).expect("valid lattice point")
}

/// σ comparison of raw coordinate slices of equal length.
#[inline]
pub(crate) fn sigma_cmp_slices(a: &[u32], b: &[u32]) -> Ordering {
    debug_assert_eq!(a.len(), b.len());
    b.cmp(a)
}

/// Compares `a` and `b` in the σ order. `Greater` means `a >σ b`.
pub fn sigma_cmp(a: &LatticePoint, b: &LatticePoint) -> Result<Ordering> {
    if a.dim() != b.dim() {
        return Err(Error::Dimension { expected: a.dim(), got: b.dim() });
    }
    Ok(sigma_cmp_slices(&a.0, &b.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // Direct transcription of the definition: scan a - b for the first nonzero entry.
    fn sigma_by_scan(a: &[u32], b: &[u32]) -> Ordering {
        for (x, y) in a.iter().zip(b) {
            let d = *x as i64 - *y as i64;
            if d < 0 {
                return Ordering::Greater;
            }
            if d > 0 {
                return Ordering::Less;
            }
        }
        Ordering::Equal
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_cmp(&pt(&[1, 2]), &pt(&[2, 1])).unwrap(), Ordering::Greater);
        assert_eq!(sigma_cmp(&pt(&[3, 3, 3]), &pt(&[3, 3, 3])).unwrap(), Ordering::Equal);
        assert_eq!(sigma_by_scan(&[1, 4, 2], &[1, 3, 5]), Ordering::Less);
        assert_eq!(sigma_cmp(&pt(&[1, 4, 2]), &pt(&[1, 3, 5])).unwrap(), Ordering::Less);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        assert!(matches!(
            sigma_cmp(&pt(&[1, 2]), &pt(&[1, 2, 3])),
            Err(Error::Dimension { expected: 2, got: 3 })
        ));
    }

    #[test]
    fn rejects_zero_and_empty() {
        assert!(LatticePoint::new(vec![]).is_err());
        assert!(LatticePoint::new(vec![1, 0]).is_err());
        assert!(serde_json::from_str::<LatticePoint>("[2,0]").is_err());
    }

    fn triple() -> impl Strategy<Value = (Vec<u32>, Vec<u32>, Vec<u32>)> {
        (1usize..=6).prop_flat_map(|n| {
            let v = || proptest::collection::vec(1u32..=9, n);
            (v(), v(), v())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn sigma_is_a_total_order((a, b, c) in triple()) {
            let (pa, pb, pc) = (pt(&a), pt(&b), pt(&c));
            let ab = sigma_cmp(&pa, &pb).unwrap();
            prop_assert_eq!(ab, sigma_by_scan(&a, &b));
            prop_assert_eq!(ab.reverse(), sigma_cmp(&pb, &pa).unwrap());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            let bc = sigma_cmp(&pb, &pc).unwrap();
            if ab != Ordering::Less && bc != Ordering::Less {
                prop_assert_ne!(sigma_cmp(&pa, &pc).unwrap(), Ordering::Less);
            }
        }
    }
}
