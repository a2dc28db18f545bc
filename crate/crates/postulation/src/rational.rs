//! Exact rank over the rationals.
//!
//! The oracle route for characteristic-zero claims: denominators are cleared
//! row by row (which cannot change the rank) and the integer matrix goes
//! through Bareiss fraction-free elimination. Every division is checked to be
//! exact, so a silent truncation is impossible.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Rank of a matrix of exact rational entries. Unbounded integers throughout;
/// overflow cannot occur.
pub fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    let cleared: Vec<Vec<BigInt>> = rows.iter().map(|row| clear_denominators(row)).collect();
    integer_rank(cleared)
}

/// Rank of an integer matrix over the rationals, by Bareiss elimination with
/// first-nonzero pivoting and column skipping.
pub fn integer_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    debug_assert!(m.iter().all(|r| r.len() == cols));
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        let (pivot_rows, lower) = m.split_at_mut(rank + 1);
        let piv = &pivot_rows[rank];
        // every lower row is updated, including those with a zero leading
        // entry: the piv[col]/prev rescaling keeps all entries at the same
        // minor level, which is what makes later divisions exact
        for row in lower.iter_mut() {
            for j in col + 1..cols {
                let num = &piv[col] * &row[j] - &row[col] * &piv[j];
                let (q, r) = num_integer_div_rem(&num, &prev);
                assert!(r.is_zero(), "Bareiss division must be exact");
                row[j] = q;
            }
            row[col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    (a / b, a % b)
}

fn clear_denominators(row: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for v in row {
        let d = v.denom();
        let g = gcd(&lcm, d);
        lcm = &lcm / &g * d;
    }
    row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
}

fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut a, mut b) = (a.abs(), b.abs());
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// Convenience: rank of an i64 matrix over the rationals.
pub fn integer_rank_i64(rows: &[Vec<i64>]) -> usize {
    integer_rank(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    /// Independent reference: textbook Gaussian elimination over BigRational.
    fn gauss_rational_rank(rows: &[Vec<i64>]) -> usize {
        let mut m: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| BigRational::from(BigInt::from(v))).collect())
            .collect();
        let nrows = m.len();
        if nrows == 0 {
            return 0;
        }
        let ncols = m[0].len();
        let mut rank = 0;
        for col in 0..ncols {
            if rank == nrows {
                break;
            }
            let Some(pr) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, pr);
            let piv = m[rank].clone();
            for r in rank + 1..nrows {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] / &piv[col];
                for j in col..ncols {
                    let delta = &factor * &piv[j];
                    m[r][j] -= delta;
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn identity_and_zero() {
        let id = big(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(integer_rank(id), 3);
        assert_eq!(integer_rank(big(&[vec![0, 0], vec![0, 0]])), 0);
        assert_eq!(integer_rank(vec![]), 0);
    }

    #[test]
    fn rational_entries_cleared_correctly() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        // [1/2 1/3; 3 2] is singular
        let rows = vec![
            vec![half.clone(), third.clone()],
            vec![BigRational::from(BigInt::from(3)), BigRational::from(BigInt::from(2))],
        ];
        assert_eq!(rational_rank(&rows), 1);
    }

    #[test]
    fn bareiss_matches_gaussian_reference() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let rows = rng.random_range(1..9usize);
            let cols = rng.random_range(1..9usize);
            let mut m: Vec<Vec<i64>> = (0..rows)
                .map(|_| (0..cols).map(|_| rng.random_range(-10..=10)).collect())
                .collect();
            // often inject dependent rows and zero columns to exercise skips
            if rows > 2 && rng.random_bool(0.5) {
                let (a, b) = (rng.random_range(0..rows), rng.random_range(0..rows));
                m[a] = m[b].clone();
            }
            if cols > 2 && rng.random_bool(0.4) {
                let c = rng.random_range(0..cols);
                for row in m.iter_mut() {
                    row[c] = 0;
                }
            }
            assert_eq!(integer_rank_i64(&m), gauss_rational_rank(&m), "matrix {m:?}");
        }
    }

    #[test]
    fn rank_mod_p_never_exceeds_rational_rank() {
        use crate::{DenseMatrix, PrimeField};
        let f = PrimeField::default_prime();
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let mut agreements = 0;
        let total = 200;
        for _ in 0..total {
            let rows = rng.random_range(1..=12usize);
            let cols = rng.random_range(1..=12usize);
            let m: Vec<Vec<i64>> = (0..rows)
                .map(|_| (0..cols).map(|_| rng.random_range(-10..=10)).collect())
                .collect();
            let rr = integer_rank_i64(&m);
            let data: Vec<u32> = m.iter().flatten().map(|&v| f.reduce_i64(v)).collect();
            let mp = DenseMatrix::from_data(f, rows, cols, data).rank();
            assert!(mp <= rr, "mod-p rank may only drop: {m:?}");
            if mp == rr {
                agreements += 1;
            }
        }
        // reduction mod 31991 of tiny integer matrices essentially never loses rank
        assert!(agreements * 100 >= total * 99, "only {agreements}/{total} agreed");
    }
}
