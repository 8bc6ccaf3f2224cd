//! Exact two-phase simplex over ℚ with Bland's rule.
//!
//! Problems are in standard form: minimise `cᵀx` subject to `Ax = b`,
//! `x ≥ 0`. When the system is infeasible the solver returns a Farkas ray
//! `y` with `yᵀA ≥ 0` and `yᵀb < 0`, read off the final phase-one tableau.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone)]
pub struct StandardLp {
    pub a: Vec<Vec<BigRational>>,
    pub b: Vec<BigRational>,
    pub c: Vec<BigRational>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { x: Vec<BigRational>, objective: BigRational },
    Infeasible { farkas: Vec<BigRational> },
    Unbounded,
}

struct Tableau {
    /// `m` constraint rows, each with `cols` coefficients followed by the rhs.
    rows: Vec<Vec<BigRational>>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            *x /= &p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Reduced costs `c_j − c_Bᵀ B⁻¹ A_j` for the given cost vector.
    fn reduced_costs(&self, cost: &[BigRational], allowed: &[bool]) -> Vec<BigRational> {
        (0..self.cols)
            .map(|j| {
                if !allowed[j] {
                    return BigRational::zero();
                }
                let mut r = cost[j].clone();
                for (i, row) in self.rows.iter().enumerate() {
                    if !row[j].is_zero() {
                        r -= &cost[self.basis[i]] * &row[j];
                    }
                }
                r
            })
            .collect()
    }

    /// Run Bland's rule to optimality. Returns `false` when unbounded.
    fn optimise(&mut self, cost: &[BigRational], allowed: &[bool]) -> bool {
        loop {
            let reduced = self.reduced_costs(cost, allowed);
            let Some(enter) = (0..self.cols).find(|&j| allowed[j] && reduced[j].is_negative()) else {
                return true;
            };
            let mut leave: Option<(usize, BigRational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[enter].is_positive() {
                    continue;
                }
                let ratio = &row[self.cols] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, _)) = leave else { return false };
            self.pivot(r, enter);
        }
    }

    fn objective(&self, cost: &[BigRational]) -> BigRational {
        self.rows.iter().zip(&self.basis).map(|(row, &b)| &cost[b] * &row[self.cols]).sum()
    }
}

pub fn solve(lp: &StandardLp) -> LpOutcome {
    let m = lp.b.len();
    let n = lp.c.len();
    debug_assert!(lp.a.iter().all(|r| r.len() == n));

    // Rows with negative rhs are negated so that the artificial basis is
    // feasible; `flip` remembers this for the Farkas ray.
    let flip: Vec<bool> = lp.b.iter().map(|x| x.is_negative()).collect();
    let cols = n + m;
    let rows: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            let s = if flip[i] { -BigRational::one() } else { BigRational::one() };
            let mut row: Vec<BigRational> = lp.a[i].iter().map(|x| x * &s).collect();
            row.extend((0..m).map(|k| if k == i { BigRational::one() } else { BigRational::zero() }));
            row.push(&lp.b[i] * &s);
            row
        })
        .collect();
    let mut t = Tableau { rows, basis: (n..n + m).collect(), cols };

    let phase_one_cost: Vec<BigRational> =
        (0..cols).map(|j| if j >= n { BigRational::one() } else { BigRational::zero() }).collect();
    let all = vec![true; cols];
    t.optimise(&phase_one_cost, &all);

    if t.objective(&phase_one_cost).is_positive() {
        // Phase-one duals y satisfy 1 − yᵢ = reduced cost of artificial i.
        let reduced = t.reduced_costs(&phase_one_cost, &all);
        let farkas = (0..m)
            .map(|i| {
                let y = BigRational::one() - &reduced[n + i];
                let z = -y;
                if flip[i] {
                    -z
                } else {
                    z
                }
            })
            .collect();
        return LpOutcome::Infeasible { farkas };
    }

    // Drive remaining artificials out of the basis; rows where that is
    // impossible are redundant and dropped.
    let mut r = 0;
    while r < t.rows.len() {
        if t.basis[r] >= n {
            if let Some(c) = (0..n).find(|&j| !t.rows[r][j].is_zero()) {
                t.pivot(r, c);
            } else {
                t.rows.remove(r);
                t.basis.remove(r);
                continue;
            }
        }
        r += 1;
    }

    let mut cost = lp.c.clone();
    cost.extend((0..m).map(|_| BigRational::zero()));
    let allowed: Vec<bool> = (0..cols).map(|j| j < n).collect();
    if !t.optimise(&cost, &allowed) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![BigRational::zero(); n];
    for (row, &b) in t.rows.iter().zip(&t.basis) {
        if b < n {
            x[b] = row[t.cols].clone();
        }
    }
    let objective = x.iter().zip(&lp.c).map(|(x, c)| x * c).sum();
    LpOutcome::Optimal { x, objective }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn lp(a: &[&[i64]], b: &[i64], c: &[i64]) -> StandardLp {
        StandardLp {
            a: a.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect(),
            b: b.iter().map(|&x| q(x)).collect(),
            c: c.iter().map(|&x| q(x)).collect(),
        }
    }

    fn check_farkas(lp: &StandardLp, y: &[BigRational]) {
        let n = lp.c.len();
        for j in 0..n {
            let v: BigRational = lp.a.iter().zip(y).map(|(row, y)| &row[j] * y).sum();
            assert!(!v.is_negative(), "column {j}: {v}");
        }
        let vb: BigRational = lp.b.iter().zip(y).map(|(b, y)| b * y).sum();
        assert!(vb.is_negative());
    }

    #[test]
    fn small_optimum() {
        // min -x0 - x1, x0 + 2x1 + s0 = 4, 3x0 + x1 + s1 = 6.
        let p = lp(&[&[1, 2, 1, 0], &[3, 1, 0, 1]], &[4, 6], &[-1, -1, 0, 0]);
        match solve(&p) {
            LpOutcome::Optimal { x, objective } => {
                assert_eq!(objective, BigRational::new(BigInt::from(-14), BigInt::from(5)));
                assert_eq!(x[0], BigRational::new(BigInt::from(8), BigInt::from(5)));
                assert_eq!(x[1], BigRational::new(BigInt::from(6), BigInt::from(5)));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn infeasible_gives_valid_farkas_ray() {
        // x0 + x1 = 1 and x0 + x1 = 2.
        let p = lp(&[&[1, 1], &[1, 1]], &[1, 2], &[0, 0]);
        match solve(&p) {
            LpOutcome::Infeasible { farkas } => check_farkas(&p, &farkas),
            other => panic!("{other:?}"),
        }
        // x0 = -1 with a negated row.
        let p = lp(&[&[1]], &[-1], &[0]);
        match solve(&p) {
            LpOutcome::Infeasible { farkas } => check_farkas(&p, &farkas),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unbounded_detected() {
        let p = lp(&[&[1, -1]], &[0], &[-1, 0]);
        assert_eq!(solve(&p), LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_rows_are_dropped() {
        let p = lp(&[&[1, 1], &[2, 2]], &[1, 2], &[1, 2]);
        match solve(&p) {
            LpOutcome::Optimal { objective, .. } => assert_eq!(objective, q(1)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn empty_problem_is_trivially_optimal() {
        let p = StandardLp { a: vec![], b: vec![], c: vec![] };
        assert!(matches!(solve(&p), LpOutcome::Optimal { .. }));
    }
}
