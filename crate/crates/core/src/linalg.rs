//! Exact linear algebra over ℤ, ℚ and F2.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense row-major integer matrix.
pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn to_big(rows: &[Vec<i64>]) -> IntMatrix {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

/// Lattice basis of `{x ∈ ℤ^n : A x = 0}` in row Hermite normal form.
///
/// Column operations reduce `A` to column echelon form while the same
/// operations are applied to an identity matrix `U`; the columns of `U`
/// that end up opposite zero columns span the kernel, and since `U` is
/// unimodular they form a lattice basis. The result is then brought to
/// Hermite normal form so the basis is canonical.
pub fn integer_kernel(a: &IntMatrix, n: usize) -> Vec<Vec<BigInt>> {
    let mut m: IntMatrix = a.to_vec();
    let mut u: IntMatrix = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();

    let col_swap = |mat: &mut IntMatrix, i: usize, j: usize| {
        for row in mat.iter_mut() {
            row.swap(i, j);
        }
    };
    // col_j -= q * col_i
    let col_sub = |mat: &mut IntMatrix, j: usize, i: usize, q: &BigInt| {
        for row in mat.iter_mut() {
            let t = &row[i] * q;
            row[j] -= t;
        }
    };

    let mut pivot = 0;
    for r in 0..m.len() {
        if pivot >= n {
            break;
        }
        loop {
            let best = (pivot..n)
                .filter(|&j| !m[r][j].is_zero())
                .min_by(|&x, &y| m[r][x].abs().cmp(&m[r][y].abs()));
            let Some(best) = best else { break };
            if best != pivot {
                col_swap(&mut m, pivot, best);
                col_swap(&mut u, pivot, best);
            }
            let mut done = true;
            for j in pivot + 1..n {
                if m[r][j].is_zero() {
                    continue;
                }
                let q = m[r][j].div_floor(&m[r][pivot]);
                col_sub(&mut m, j, pivot, &q);
                col_sub(&mut u, j, pivot, &q);
                if !m[r][j].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !m[r][pivot].is_zero() {
            pivot += 1;
        }
    }

    let kernel: Vec<Vec<BigInt>> = (pivot..n).map(|j| u.iter().map(|row| row[j].clone()).collect()).collect();
    hermite_rows(kernel, n)
}

/// Row Hermite normal form of the lattice spanned by `rows`; zero rows are
/// dropped. Pivots are positive and entries above a pivot lie in
/// `[0, pivot)`, which makes the basis unique for the lattice.
pub fn hermite_rows(mut rows: Vec<Vec<BigInt>>, n: usize) -> Vec<Vec<BigInt>> {
    let mut r = 0;
    for c in 0..n {
        if r >= rows.len() {
            break;
        }
        loop {
            let best = (r..rows.len())
                .filter(|&i| !rows[i][c].is_zero())
                .min_by(|&x, &y| rows[x][c].abs().cmp(&rows[y][c].abs()));
            let Some(best) = best else { break };
            rows.swap(r, best);
            let mut done = true;
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                let pivot_row = rows[r].clone();
                for (x, p) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &q * p;
                }
                if !rows[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r < rows.len() && !rows[r][c].is_zero() {
            if rows[r][c].is_negative() {
                for x in rows[r].iter_mut() {
                    *x = -x.clone();
                }
            }
            let pivot_row = rows[r].clone();
            for i in 0..r {
                let q = rows[i][c].div_floor(&pivot_row[c]);
                if !q.is_zero() {
                    for (x, p) in rows[i].iter_mut().zip(&pivot_row) {
                        *x -= &q * p;
                    }
                }
            }
            r += 1;
        }
    }
    rows.truncate(r);
    rows
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(a: &IntMatrix) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Rank over ℚ by Gaussian elimination.
pub fn rational_rank(a: &IntMatrix) -> usize {
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        for i in 0..m.len() {
            if i != rank && !m[i][c].is_zero() {
                let f = &m[i][c] / &pivot[c];
                for (x, y) in m[i].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over F2 of a matrix given as rows of bits.
pub fn f2_rank(rows: &[Vec<bool>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let words = cols.div_ceil(64);
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            let mut w = vec![0u64; words];
            for (j, &b) in r.iter().enumerate() {
                if b {
                    w[j / 64] |= 1 << (j % 64);
                }
            }
            w
        })
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let (w, bit) = (c / 64, 1u64 << (c % 64));
        let Some(p) = (rank..m.len()).find(|&i| m[i][w] & bit != 0) else { continue };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && row[w] & bit != 0 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Least common multiple of denominators.
pub fn common_denominator(v: &[BigRational]) -> BigInt {
    v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Clear denominators and divide by the gcd of the result.
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    let l = common_denominator(v);
    let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> IntMatrix {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn small(rows: &[Vec<BigInt>]) -> Vec<Vec<i64>> {
        use num_traits::ToPrimitive;
        rows.iter().map(|r| r.iter().map(|x| x.to_i64().unwrap()).collect()).collect()
    }

    #[test]
    fn kernel_of_empty_system_is_standard_basis() {
        let k = integer_kernel(&vec![], 3);
        assert_eq!(small(&k), vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn kernel_of_difference_constraint() {
        // x0 + x1 = 0 spans (1, -1).
        let k = integer_kernel(&big(&[&[1, 1]]), 2);
        assert_eq!(small(&k), vec![vec![1, -1]]);
    }

    #[test]
    fn kernel_is_saturated() {
        // 2x0 - 4x1 = 0 has kernel generated by (2, 1), not (4, 2).
        let k = integer_kernel(&big(&[&[2, -4]]), 2);
        assert_eq!(small(&k), vec![vec![2, 1]]);
    }

    #[test]
    fn kernel_of_full_rank_square_is_trivial() {
        assert!(integer_kernel(&big(&[&[2, 1], &[1, 1]]), 2).is_empty());
    }

    #[test]
    fn hermite_is_canonical_for_the_lattice() {
        let a = hermite_rows(small_to_big(&[vec![2, 3], vec![1, 1]]), 2);
        let b = hermite_rows(small_to_big(&[vec![1, 2], vec![0, -1], vec![3, 5]]), 2);
        assert_eq!(a, b);
        assert_eq!(small(&a), vec![vec![1, 0], vec![0, 1]]);
    }

    fn small_to_big(rows: &[Vec<i64>]) -> IntMatrix {
        to_big(rows)
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&vec![]), BigInt::one());
        assert_eq!(determinant(&big(&[&[2]])), BigInt::from(2));
        assert_eq!(determinant(&big(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(determinant(&big(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]])), BigInt::from(-3));
        assert_eq!(determinant(&big(&[&[1, 1], &[1, 1]])), BigInt::zero());
    }

    #[test]
    fn ranks() {
        assert_eq!(rational_rank(&big(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rational_rank(&big(&[&[1, 2], &[2, 5]])), 2);
        assert_eq!(f2_rank(&[vec![true, true], vec![true, true]]), 1);
        assert_eq!(f2_rank(&[vec![true, false], vec![false, true]]), 2);
        assert_eq!(f2_rank(&[]), 0);
    }

    #[test]
    fn primitive_vectors() {
        let v: Vec<BigRational> = [(1, 2), (3, 4), (0, 1)]
            .iter()
            .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
            .collect();
        assert_eq!(small(&[primitive_integer_vector(&v)]), vec![vec![2, 3, 0]]);
    }
}
