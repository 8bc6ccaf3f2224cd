//! Independent oracles shared by the integration tests. None of these call
//! the library routine they are used to check.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::Zero;
use rand::Rng;

use shd_core::diagram::{Side, SuturedDiagram};
use shd_core::generators::Generator;
use shd_core::DomainVector;

/// Permanent as the sum over all n! permutations.
pub fn permutation_sum(m: &[Vec<u64>]) -> BigInt {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = BigInt::from(0);
    loop {
        let term: BigInt = (0..n).map(|i| BigInt::from(m[i][perm[i]])).product();
        total += term;
        // Next permutation in lexicographic order.
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else { break };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    total
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(lo..=hi)).collect()).collect()
}

/// Boundary of the α part of ∂D at every point, read from the region sides:
/// an arc side with orientation `o` of a region of multiplicity `c`
/// contributes `c·o` to its arc.
pub fn alpha_boundary(d: &SuturedDiagram, dom: &DomainVector) -> Vec<i64> {
    let mut jump = vec![0i64; d.points().len()];
    for (o, &r) in d.interior_regions().iter().enumerate() {
        let c = dom.0[o];
        for side in &d.regions()[r].sides {
            if let Side::Arc { curve, from, to, orient } = *side {
                if curve.kind == shd_core::diagram::CurveKind::Alpha {
                    jump[to] += c * orient.value();
                    jump[from] -= c * orient.value();
                }
            }
        }
    }
    jump
}

/// Index of a domain in a diagram whose interior regions are disks, with
/// point measures counted from region corners.
pub fn index_by_corners(d: &SuturedDiagram, dom: &DomainVector, x: &[usize], y: &[usize]) -> Rational64 {
    let mut mu = Rational64::from_integer(0);
    for (o, &r) in d.interior_regions().iter().enumerate() {
        let c = dom.0[o];
        let region = &d.regions()[r];
        assert_eq!(region.cycles.len(), 1, "oracle assumes disk regions");
        mu += Rational64::from_integer(c) * (Rational64::from_integer(1) - Rational64::new(region.corners.len() as i64, 4));
        for corner in &region.corners {
            let hits = x.contains(&corner.point) as i64 + y.contains(&corner.point) as i64;
            mu += Rational64::new(c * hits, 4);
        }
    }
    mu
}

/// Every 0/1 domain of index one out of `x`, by exhaustive subset search.
pub fn brute_force_domains(d: &SuturedDiagram, x: &Generator, gens: &[Generator]) -> Vec<(Generator, DomainVector)> {
    let n = d.interior_regions().len();
    assert!(n <= 20);
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << n) {
        let dom = DomainVector((0..n).map(|i| (mask >> i & 1) as i64).collect());
        let jump = alpha_boundary(d, &dom);
        let target: Vec<usize> = (0..d.points().len())
            .filter(|&p| jump[p] + x.points.contains(&p) as i64 == 1)
            .collect();
        let consistent = (0..d.points().len()).all(|p| matches!(jump[p] + x.points.contains(&p) as i64, 0 | 1));
        if !consistent {
            continue;
        }
        let Some(y) = gens.iter().find(|g| g.points == target) else { continue };
        if index_by_corners(d, &dom, &x.points, &y.points) == Rational64::from_integer(1) {
            out.push((y.clone(), dom));
        }
    }
    out.sort();
    out
}

/// Rational coefficients expressing `v` in the rows of `basis`, if any.
pub fn combination(basis: &[Vec<BigInt>], v: &[BigInt]) -> Option<Vec<BigRational>> {
    let r = basis.len();
    let n = v.len();
    // Augmented system with one equation per coordinate, unknowns per row.
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = basis.iter().map(|b| BigRational::from_integer(b[i].clone())).collect();
            row.push(BigRational::from_integer(v[i].clone()));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..r {
        let Some(p) = (rank..n).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && !row[c].is_zero() {
                let f = &row[c] / &pivot[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    if m[rank..].iter().any(|row| !row[r].is_zero()) {
        return None;
    }
    let mut lambda = vec![BigRational::zero(); r];
    for (i, &c) in pivots.iter().enumerate() {
        lambda[c] = &m[i][r] / &m[i][c];
    }
    Some(lambda)
}

