//! The generator set: k-tuples of intersection points with one point on
//! every α curve and one on every β curve.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::diagram::{intersection_matrix, SuturedDiagram};

/// One generator. `points` are indices into [`SuturedDiagram::points`],
/// sorted (the canonical identity); `permutation[i] = j` when the chosen
/// point on `α_i` lies on `β_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub points: Vec<usize>,
    pub permutation: Vec<usize>,
}

impl Generator {
    pub fn ids<'a>(&self, d: &'a SuturedDiagram) -> Vec<&'a str> {
        self.points.iter().map(|&p| d.point_id(p)).collect()
    }

    /// `{q1, q4}`-style label.
    pub fn label(&self, d: &SuturedDiagram) -> String {
        format!("{{{}}}", self.ids(d).join(", "))
    }

    pub fn contains(&self, point: usize) -> bool {
        self.points.binary_search(&point).is_ok()
    }
}

/// All generators in canonical order. Points are stored in natural id order,
/// so sorting the index tuples sorts by point ids.
pub fn enumerate_generators(d: &SuturedDiagram) -> Vec<Generator> {
    let k = d.alpha_count();
    if k != d.beta_count() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(k);
    let mut used = vec![false; k];
    backtrack(d, 0, &mut chosen, &mut used, &mut out);
    out.sort();
    out
}

fn backtrack(d: &SuturedDiagram, i: usize, chosen: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Generator>) {
    if i == d.alpha_count() {
        let permutation = chosen.iter().map(|&p| d.points()[p].beta.expect("point on a β curve")).collect();
        let mut points = chosen.clone();
        points.sort_unstable();
        out.push(Generator { points, permutation });
        return;
    }
    for &p in d.alpha(i) {
        let Some(j) = d.points()[p].beta else { continue };
        if used[j] {
            continue;
        }
        used[j] = true;
        chosen.push(p);
        backtrack(d, i + 1, chosen, used, out);
        chosen.pop();
        used[j] = false;
    }
}

/// Permanent of a square matrix by Ryser's inclusion–exclusion formula.
pub fn permanent(m: &[Vec<u64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(n < 64, "permanent of a {n}x{n} matrix is out of reach");
    let mut total = BigInt::zero();
    for subset in 1u64..(1u64 << n) {
        let mut prod = BigInt::one();
        for row in m {
            let s: u64 = (0..n).filter(|&j| subset >> j & 1 == 1).map(|j| row[j]).sum();
            if s == 0 {
                prod = BigInt::zero();
                break;
            }
            prod *= s;
        }
        if (n - subset.count_ones() as usize).is_multiple_of(2) {
            total += prod;
        } else {
            total -= prod;
        }
    }
    total
}

/// |generators| as the permanent of the unsigned intersection matrix.
pub fn count_generators_permanent(d: &SuturedDiagram) -> BigInt {
    permanent(&intersection_matrix(d).unsigned)
}
