//! Independent reference implementations used by the integration tests.
//!
//! Everything here works directly from the definitions with plain vectors,
//! without calling the library routines it is compared against.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use ferrers_core::{pt, FerrersDiagram, LatticePoint};

/// σ by a direct scan: `a` is larger when the first differing entry of `a` is smaller.
pub fn sigma(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return if x < y { Ordering::Greater } else { Ordering::Less };
        }
    }
    Ordering::Equal
}

fn permutations(values: &[u32]) -> BTreeSet<Vec<u32>> {
    if values.len() <= 1 {
        return BTreeSet::from([values.to_vec()]);
    }
    let mut out = BTreeSet::new();
    for i in 0..values.len() {
        let mut rest = values.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.insert(tail);
        }
    }
    out
}

/// Rows sorted σ-descending.
pub fn sorted_rows(rows: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut r = rows.to_vec();
    r.sort_by(|a, b| sigma(b, a));
    r
}

fn tableau_sigma(a: &[Vec<u32>], b: &[Vec<u32>]) -> Ordering {
    a.iter().zip(b).map(|(x, y)| sigma(x, y)).find(|o| *o != Ordering::Equal).unwrap_or(Ordering::Equal)
}

/// σ-minimum over every rearrangement of the entries within each column.
pub fn sigma_minimum(rows: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let p = rows.len();
    if p == 0 {
        return Vec::new();
    }
    let n = rows[0].len();
    let cols: Vec<Vec<Vec<u32>>> = (0..n)
        .map(|j| permutations(&rows.iter().map(|r| r[j]).collect::<Vec<_>>()).into_iter().collect())
        .collect();
    let mut best: Option<Vec<Vec<u32>>> = None;
    let mut choice = vec![0usize; n];
    loop {
        let cand = sorted_rows(&(0..p).map(|i| (0..n).map(|j| cols[j][choice[j]][i]).collect()).collect::<Vec<_>>());
        if best.as_ref().is_none_or(|b| tableau_sigma(&cand, b) == Ordering::Less) {
            best = Some(cand);
        }
        let mut j = n;
        loop {
            if j == 0 {
                return best.unwrap();
            }
            j -= 1;
            choice[j] += 1;
            if choice[j] < cols[j].len() {
                break;
            }
            choice[j] = 0;
        }
    }
}

/// Membership in the downward closure of `gens`.
pub fn below_some(p: &[u32], gens: &[LatticePoint]) -> bool {
    gens.iter().any(|g| p.iter().zip(g.coords()).all(|(a, b)| a <= b))
}

/// Standardizability straight from the definition: the σ-minimal rearrangement
/// of every pair of points stays in the diagram.
pub fn standardizable_by_definition(d: &FerrersDiagram) -> bool {
    let gens = d.maximal_points();
    let pts: Vec<&LatticePoint> = d.points().collect();
    pts.iter().all(|a| {
        pts.iter().all(|b| {
            sigma_minimum(&[a.coords().to_vec(), b.coords().to_vec()]).iter().all(|row| below_some(row, &gens))
        })
    })
}

/// A random diagram: closure of a few random points, then standardizable completion.
pub fn random_standardizable(rng: &mut ChaCha8Rng, max_dim: usize, max_points: usize) -> FerrersDiagram {
    loop {
        let n = rng.gen_range(2..=max_dim);
        let k = rng.gen_range(1..=3);
        let gens: Vec<LatticePoint> =
            (0..k).map(|_| pt(&(0..n).map(|_| rng.gen_range(1..=3)).collect::<Vec<u32>>())).collect();
        let d = FerrersDiagram::closure(n, &gens).unwrap().standardizable_closure();
        if d.len() <= max_points {
            return d;
        }
    }
}

/// A random Ferrers diagram (no standardizability requirement).
pub fn random_diagram(rng: &mut ChaCha8Rng, n: usize, max_points: usize) -> FerrersDiagram {
    loop {
        let k = rng.gen_range(1..=3);
        let gens: Vec<LatticePoint> =
            (0..k).map(|_| pt(&(0..n).map(|_| rng.gen_range(1..=4)).collect::<Vec<u32>>())).collect();
        let d = FerrersDiagram::closure(n, &gens).unwrap();
        if d.len() <= max_points {
            return d;
        }
    }
}

/// All partitions of `k` (weakly decreasing positive parts).
pub fn partitions(k: u32) -> Vec<Vec<u32>> {
    fn rec(left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=left.min(max)).rev() {
            cur.push(part);
            rec(left - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, &mut Vec::new(), &mut out);
    out
}

/// The planar diagram with row `i` of length `parts[i]`.
pub fn young_diagram(parts: &[u32]) -> FerrersDiagram {
    let gens: Vec<LatticePoint> = parts.iter().enumerate().map(|(i, &len)| pt(&[i as u32 + 1, len])).collect();
    FerrersDiagram::closure(2, &gens).unwrap()
}
