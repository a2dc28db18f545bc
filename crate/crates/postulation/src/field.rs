//! Arithmetic in GF(p) for a runtime prime p < 2^31.
//!
//! Entries are kept reduced in `[0, p)`. Reduction goes through a Barrett
//! inverse so the elimination kernels never hit a hardware divide.

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
    /// floor(2^64 / p)
    barrett: u64,
}

impl PrimeField {
    /// Checks primality by trial division; rejects composites and p >= 2^31.
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 31 {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p, barrett: (((1u128) << 64) / p as u128) as u64 })
    }

    pub fn default_prime() -> Self {
        Self::new(crate::DEFAULT_PRIME).expect("31991 is prime")
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    /// Reduce any `a < 2^63` to `[0, p)`.
    #[inline]
    pub fn reduce(&self, a: u64) -> u32 {
        let q = ((a as u128 * self.barrett as u128) >> 64) as u64;
        let mut r = a - q * self.p as u64;
        while r >= self.p as u64 {
            r -= self.p as u64;
        }
        r as u32
    }

    /// Canonical representative of a signed integer.
    #[inline]
    pub fn reduce_i64(&self, a: i64) -> u32 {
        a.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.reduce(a as u64 * b as u64)
    }

    /// `acc + a * b` reduced; all inputs reduced.
    #[inline]
    pub fn mul_add(&self, acc: u32, a: u32, b: u32) -> u32 {
        self.reduce(acc as u64 + a as u64 * b as u64)
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1u32;
        base = self.reduce(base as u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of `a != 0` by the extended Euclidean algorithm.
    pub fn inv(&self, a: u32) -> u32 {
        debug_assert!(a != 0 && a < self.p);
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut s0, mut s1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1, "inverse of a noninvertible element");
        s0.rem_euclid(self.p as i64) as u32
    }

    /// How many products of reduced elements fit in a u64 accumulator without
    /// overflow. Governs the blocked elimination width.
    pub(crate) fn lazy_accumulation_limit(&self) -> u64 {
        let sq = (self.p as u64 - 1) * (self.p as u64 - 1);
        (u64::MAX - self.p as u64) / sq
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p as u64 {
        if p as u64 % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(31991).is_ok());
        assert!(PrimeField::new(0).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(31989).is_err()); // 3 * 10663
        assert!(PrimeField::new(1 << 16).is_err());
    }

    #[test]
    fn arithmetic_round_trip() {
        let f = PrimeField::default_prime();
        let p = f.p() as u64;
        for a in [0u64, 1, 2, 31990, 12345, 54321 % p] {
            for b in [1u64, 2, 31990, 9999] {
                let (a, b) = (a as u32, b as u32);
                assert_eq!(f.add(a, b) as u64, (a as u64 + b as u64) % p);
                assert_eq!(f.mul(a, b) as u64, (a as u64 * b as u64) % p);
                assert_eq!(f.sub(a, b) as u64, (a as u64 + p - b as u64) % p);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
            }
        }
    }

    #[test]
    fn barrett_reduces_wide_values() {
        let f = PrimeField::default_prime();
        for a in [0u64, 1, 31991, u32::MAX as u64, (1 << 62) - 1, 31990 * 31990 * 1000] {
            assert_eq!(f.reduce(a) as u64, a % 31991);
        }
        let small = PrimeField::new(2).unwrap();
        assert_eq!(small.reduce((1 << 62) - 1), 1);
    }

    #[test]
    fn lazy_limit_is_generous_for_default_prime() {
        let f = PrimeField::default_prime();
        assert!(f.lazy_accumulation_limit() > (1 << 33));
    }

    #[test]
    fn signed_reduction() {
        let f = PrimeField::default_prime();
        assert_eq!(f.reduce_i64(-1), 31990);
        assert_eq!(f.reduce_i64(-31991), 0);
        assert_eq!(f.reduce_i64(31992), 1);
    }
}
