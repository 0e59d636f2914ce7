//! Tableaux over the σ order and their standardization.
//!
//! A `p × n` tableau is a list of `p` rows of length `n`. It is semi-standard
//! when its rows are weakly σ-decreasing, and standard when it is the σ-minimum
//! among all semi-standard tableaux with the same column supports.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::point::{sigma_cmp_slices, LatticePoint};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    width: usize,
    rows: Vec<Vec<u32>>,
}

/// Column-wise multisets, each stored sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColumnSupport(pub Vec<Vec<u32>>);

impl Tableau {
    pub fn new(width: usize, rows: Vec<Vec<u32>>) -> Result<Tableau> {
        if width == 0 {
            return Err(Error::Argument("tableau width must be positive".into()));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != width {
                return Err(Error::Dimension { expected: width, got: r.len() });
            }
            if r.contains(&0) {
                return Err(Error::Argument(format!("row {} has a zero entry", i + 1)));
            }
        }
        Ok(Tableau { width, rows })
    }

    pub fn from_points(width: usize, rows: &[LatticePoint]) -> Result<Tableau> {
        Tableau::new(width, rows.iter().map(|p| p.coords().to_vec()).collect())
    }

    /// Parses the text format: one row per line, space-separated positive integers.
    pub fn parse(text: &str) -> Result<Tableau> {
        let mut rows = Vec::new();
        let mut width = None;
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|tok| match tok.parse::<u32>() {
                    Ok(v) if v >= 1 => Ok(v),
                    _ => Err(Error::Parse { line: line_no, message: format!("`{tok}` is not a positive integer") }),
                })
                .collect::<Result<Vec<u32>>>()?;
            match width {
                None => width = Some(row.len()),
                Some(w) if w != row.len() => {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("row has {} entries, expected {w}", row.len()),
                    })
                }
                _ => {}
            }
            rows.push(row);
        }
        let width = width.ok_or(Error::Parse { line: 0, message: "empty tableau".into() })?;
        Ok(Tableau { width, rows })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn row_points(&self) -> Vec<LatticePoint> {
        self.rows.iter().map(|r| LatticePoint::from_vec_unchecked(r.clone())).collect()
    }

    pub fn support(&self) -> ColumnSupport {
        ColumnSupport(
            (0..self.width)
                .map(|j| {
                    let mut col: Vec<u32> = self.rows.iter().map(|r| r[j]).collect();
                    col.sort_unstable();
                    col
                })
                .collect(),
        )
    }

    pub fn is_semi_standard(&self) -> bool {
        self.rows.windows(2).all(|w| sigma_cmp_slices(&w[0], &w[1]) != Ordering::Less)
    }

    /// Stable sort of the rows into weakly σ-decreasing order.
    pub fn sort_rows(&self) -> Tableau {
        let mut rows = self.rows.clone();
        rows.sort_by(|a, b| sigma_cmp_slices(b, a));
        Tableau { width: self.width, rows }
    }

    /// The unique standard tableau with the same support, built column by column.
    pub fn standardize(&self) -> Result<Tableau> {
        if !self.is_semi_standard() {
            return Err(Error::Precondition("standardize expects a semi-standard tableau".into()));
        }
        let p = self.rows.len();
        let mut out = vec![Vec::with_capacity(self.width); p];
        for (i, row) in out.iter_mut().enumerate() {
            row.push(self.rows[i][0]);
        }
        for j in 1..self.width {
            let mut column: Vec<u32> = self.rows.iter().map(|r| r[j]).collect();
            column.sort_unstable_by(|a, b| b.cmp(a));
            // Rows sharing a prefix form consecutive blocks, σ-largest block first.
            // Each block takes the largest remaining values, placed ascending inside it.
            let mut start = 0;
            while start < p {
                let mut end = start + 1;
                while end < p && out[end] == out[start] {
                    end += 1;
                }
                let mut chunk = column[start..end].to_vec();
                chunk.reverse();
                for (row, v) in out[start..end].iter_mut().zip(chunk) {
                    row.push(v);
                }
                start = end;
            }
        }
        Ok(Tableau { width: self.width, rows: out })
    }

    pub fn is_standard(&self) -> Result<bool> {
        if !self.is_semi_standard() {
            return Err(Error::Precondition("is_standard expects a semi-standard tableau".into()));
        }
        for h in 0..self.rows.len() {
            for k in h + 1..self.rows.len() {
                if !standard_pair(&self.rows[h], &self.rows[k]) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Keeps the rows at `keep` (in order) and the first `columns` columns.
    pub fn subtableau(&self, keep: &[usize], columns: usize) -> Result<Tableau> {
        if columns == 0 || columns > self.width {
            return Err(Error::Argument(format!("cannot keep {columns} of {} columns", self.width)));
        }
        let rows = keep
            .iter()
            .map(|&i| {
                self.rows
                    .get(i)
                    .map(|r| r[..columns].to_vec())
                    .ok_or_else(|| Error::Argument(format!("row index {i} out of range")))
            })
            .collect::<Result<_>>()?;
        Ok(Tableau { width: columns, rows })
    }

    /// σ comparison of two semi-standard tableaux of the same shape: the first differing row decides.
    pub fn sigma_cmp(&self, other: &Tableau) -> Ordering {
        for (a, b) in self.rows.iter().zip(&other.rows) {
            match sigma_cmp_slices(a, b) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.rows).finish()
    }
}

/// Text format: rows on separate lines.
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(u32::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

fn standard_pair(a: &[u32], b: &[u32]) -> bool {
    match a.iter().zip(b).position(|(x, y)| x != y) {
        None => true,
        Some(k) => a[k] < b[k] && a[k + 1..].iter().zip(&b[k + 1..]).all(|(x, y)| x >= y),
    }
}

/// Whether the two-row tableau `[a, b]` is standard. Requires `a ≥σ b`.
pub fn is_standard_pair(a: &LatticePoint, b: &LatticePoint) -> Result<bool> {
    if a.dim() != b.dim() {
        return Err(Error::Dimension { expected: a.dim(), got: b.dim() });
    }
    if sigma_cmp_slices(a.coords(), b.coords()) == Ordering::Less {
        return Err(Error::Precondition(format!("{a} <σ {b}: [a, b] is not semi-standard")));
    }
    Ok(standard_pair(a.coords(), b.coords()))
}

/// Test oracles: exhaustive enumeration of semi-standard tableaux with a given support.
#[cfg(test)]
pub mod brute {
    use super::*;
    use std::collections::BTreeSet;

    fn distinct_permutations(values: &[u32]) -> Vec<Vec<u32>> {
        let mut v = values.to_vec();
        v.sort_unstable();
        let mut out = vec![v.clone()];
        // Next lexicographic permutation until exhaustion.
        loop {
            let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else { return out };
            let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
            v.swap(i - 1, j);
            v[i..].reverse();
            out.push(v.clone());
        }
    }

    /// Every semi-standard tableau whose support equals `support`.
    pub fn semi_standard_with_support(support: &ColumnSupport) -> Vec<Tableau> {
        let cols = &support.0;
        let width = cols.len();
        let p = cols.first().map_or(0, Vec::len);
        let perms: Vec<Vec<Vec<u32>>> = cols.iter().map(|c| distinct_permutations(c)).collect();
        let mut seen = BTreeSet::new();
        let mut choice = vec![0usize; width];
        loop {
            let mut rows: Vec<Vec<u32>> = (0..p).map(|i| (0..width).map(|j| perms[j][choice[j]][i]).collect()).collect();
            rows.sort_by(|a, b| sigma_cmp_slices(b, a));
            seen.insert(rows);
            // Column 0 only needs one arrangement: sorting rows absorbs its permutations.
            let mut j = width;
            loop {
                if j <= 1 {
                    return seen.into_iter().map(|rows| Tableau { width, rows }).collect();
                }
                j -= 1;
                choice[j] += 1;
                if choice[j] < perms[j].len() {
                    break;
                }
                choice[j] = 0;
            }
        }
    }

    /// The σ-minimum over all semi-standard tableaux with the same support.
    pub fn sigma_minimum(t: &Tableau) -> Tableau {
        semi_standard_with_support(&t.support())
            .into_iter()
            .min_by(|a, b| a.sigma_cmp(b))
            .expect("the sorted tableau itself is a candidate")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{SEMI_STANDARD_12X5, STANDARD_12X5};
    use crate::point::pt;
    use proptest::prelude::*;

    fn tab(rows: &[&[u32]]) -> Tableau {
        Tableau::new(rows[0].len(), rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn support_examples() {
        let s = tab(&[&[1, 2], &[2, 1]]).support();
        assert_eq!(s.0, vec![vec![1, 2], vec![1, 2]]);
        let a = Tableau::parse(SEMI_STANDARD_12X5).unwrap();
        assert_eq!(a.support().0[4], vec![1, 1, 2, 3, 4, 5, 6, 6, 6, 7, 7, 8]);
        let empty = Tableau::new(3, vec![]).unwrap();
        assert_eq!(empty.support().0, vec![Vec::<u32>::new(); 3]);
    }

    #[test]
    fn semi_standard_examples() {
        assert!(tab(&[&[1, 3], &[2, 1]]).is_semi_standard());
        assert!(!tab(&[&[2, 1], &[1, 3]]).is_semi_standard());
        assert!(Tableau::parse(SEMI_STANDARD_12X5).unwrap().is_semi_standard());
        assert!(Tableau::parse(STANDARD_12X5).unwrap().is_semi_standard());
    }

    #[test]
    fn sort_rows_examples() {
        assert_eq!(tab(&[&[2, 1], &[1, 3]]).sort_rows(), tab(&[&[1, 3], &[2, 1]]));
        let a = Tableau::parse(SEMI_STANDARD_12X5).unwrap();
        assert_eq!(a.sort_rows(), a);
    }

    #[test]
    fn standardizes_the_12x5_tableau() {
        let a = Tableau::parse(SEMI_STANDARD_12X5).unwrap();
        let b = Tableau::parse(STANDARD_12X5).unwrap();
        assert_eq!(a.standardize().unwrap(), b);
        assert!(b.is_standard().unwrap());
        assert!(!a.is_standard().unwrap());
    }

    #[test]
    fn standardize_small_cases() {
        let single = tab(&[&[3, 1, 2]]);
        assert_eq!(single.standardize().unwrap(), single);
        let t = tab(&[&[1, 1], &[2, 3]]);
        assert_eq!(brute::sigma_minimum(&t), tab(&[&[1, 3], &[2, 1]]));
        assert_eq!(t.standardize().unwrap(), tab(&[&[1, 3], &[2, 1]]));
        assert!(matches!(tab(&[&[2, 1], &[1, 3]]).standardize(), Err(Error::Precondition(_))));
    }

    #[test]
    fn standard_pair_examples() {
        assert!(is_standard_pair(&pt(&[2, 2, 2]), &pt(&[2, 2, 2])).unwrap());
        assert!(is_standard_pair(&pt(&[1, 3]), &pt(&[2, 1])).unwrap());
        assert!(!is_standard_pair(&pt(&[1, 1]), &pt(&[2, 3])).unwrap());
        assert!(matches!(is_standard_pair(&pt(&[2, 1]), &pt(&[1, 3])), Err(Error::Precondition(_))));
        // Same answers from brute-force σ-minimality.
        for (a, b) in [([1u32, 3], [2u32, 1]), ([1, 1], [2, 3])] {
            let t = tab(&[&a, &b]);
            assert_eq!(brute::sigma_minimum(&t) == t, is_standard_pair(&pt(&a), &pt(&b)).unwrap());
        }
    }

    #[test]
    fn trivially_standard() {
        assert!(tab(&[&[4, 4]]).is_standard().unwrap());
        assert!(Tableau::new(2, vec![]).unwrap().is_standard().unwrap());
        assert!(Tableau::new(2, vec![]).unwrap().standardize().unwrap().rows().is_empty());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert!(matches!(Tableau::parse("1 2\n3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Tableau::parse("1 2\n\n3 x\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(Tableau::parse("0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(Tableau::parse("\n\n").is_err());
        let t = Tableau::parse(STANDARD_12X5).unwrap();
        assert_eq!(Tableau::parse(&t.to_string()).unwrap(), t);
    }

    fn arb_tableau() -> impl Strategy<Value = Tableau> {
        (1usize..=4, 1usize..=4).prop_flat_map(|(p, n)| {
            proptest::collection::vec(proptest::collection::vec(1u32..=4, n), p)
                .prop_map(move |rows| Tableau::new(n, rows).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn standardize_is_the_sigma_minimum(t in arb_tableau()) {
            let s = t.sort_rows();
            prop_assert!(s.is_semi_standard());
            prop_assert_eq!(s.support(), t.support());
            let b = s.standardize().unwrap();
            prop_assert!(b.is_semi_standard());
            prop_assert_eq!(b.support(), t.support());
            prop_assert_eq!(&b.standardize().unwrap(), &b);
            prop_assert_eq!(&b, &brute::sigma_minimum(&s));
            prop_assert_eq!(s.is_standard().unwrap(), s == b);
            prop_assert!(b.is_standard().unwrap());
        }
    }
}
