//! Exact binomial coefficients.
//!
//! All combinatorial bookkeeping in this crate runs on exact integers; the
//! multiplicative formula below divides at every step, so intermediates stay
//! within `u128` for any argument whose result fits a `u64`. Overflow aborts
//! instead of wrapping.

/// `n choose k`, exactly.
///
/// Panics if the result does not fit in a `u64`; with `k <= 3` that needs
/// `n` beyond two million, far outside any degree this crate handles.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc
            .checked_mul((n - k + i) as u128)
            .expect("binomial coefficient exceeds u128");
        acc /= i as u128; // exact: acc is binom(n-k+i, i) after this step
    }
    u64::try_from(acc).expect("binomial coefficient exceeds u64")
}

/// Number of monomials of degree exactly `d` in `n + 1` variables,
/// i.e. `binom(d + n, n)`.
pub fn monomial_count(n: u32, d: u32) -> u64 {
    binomial(d as u64 + n as u64, n as u64)
}
