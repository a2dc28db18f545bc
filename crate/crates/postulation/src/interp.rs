//! Hermite interpolation matrices at fat points and the postulation verdict.
//!
//! A component of multiplicity m contributes one row per derivative
//! multi-index of order exactly m-1; over a field with p > d that captures
//! the full fat-point ideal conditions (the Euler relation recovers the lower
//! orders), and it keeps the row count equal to the scheme degree.
//!
//! The verdict is decided by the maximal rank over a few independent random
//! support draws: rank is lower-semicontinuous under specialization, so the
//! generic rank is the maximum, and retries absorb unlucky draws.

use crate::binom::monomial_count;
use crate::field::PrimeField;
use crate::matrix::DenseMatrix;
use crate::rational::integer_rank;
use crate::scheme::{expected_cohomology, FatPointScheme, Support};
use crate::seed::{component_rng, trial_seed};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Monomials of degree exactly `d` in `n + 1` variables, in graded-lex order
/// (lexicographically decreasing exponent tuples within the single degree).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialBasis {
    n: u32,
    d: u32,
    vars: usize,
    exps: Vec<u32>, // flat, stride n + 1
}

impl MonomialBasis {
    pub fn new(n: u32, d: u32) -> Self {
        let vars = n as usize + 1;
        let mut exps = Vec::with_capacity(monomial_count(n, d) as usize * vars);
        let mut current = vec![0u32; vars];
        fill_compositions(d, 0, &mut current, &mut exps);
        debug_assert_eq!(exps.len(), monomial_count(n, d) as usize * vars);
        Self { n, d, vars, exps }
    }

    pub fn len(&self) -> usize {
        self.exps.len() / self.vars
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, i: usize) -> &[u32] {
        &self.exps[i * self.vars..(i + 1) * self.vars]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u32]> {
        self.exps.chunks_exact(self.vars)
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn ambient_dim(&self) -> u32 {
        self.n
    }
}

// descending lex: the first variable takes the largest remaining exponent
fn fill_compositions(remaining: u32, pos: usize, current: &mut Vec<u32>, out: &mut Vec<u32>) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.extend_from_slice(current);
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill_compositions(remaining - e, pos + 1, current, out);
    }
}

/// Value of `D^alpha(x^beta)` at `point`, over GF(p):
/// the falling factorial `prod_j beta_j (beta_j - 1) ... (beta_j - alpha_j + 1)`
/// times `point^(beta - alpha)`, and 0 unless `beta >= alpha` componentwise.
pub fn derivative_value(field: PrimeField, beta: &[u32], alpha: &[u32], point: &[u32]) -> u32 {
    debug_assert_eq!(beta.len(), alpha.len());
    debug_assert_eq!(beta.len(), point.len());
    let mut acc = 1u32;
    for ((&b, &a), &x) in beta.iter().zip(alpha).zip(point) {
        if a > b {
            return 0;
        }
        for k in 0..a {
            acc = field.mul(acc, field.reduce((b - k) as u64));
        }
        acc = field.mul(acc, field.pow(x, (b - a) as u64));
    }
    acc
}

fn draw_point_mod_p(
    field: PrimeField,
    n: u32,
    support: &Support,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<u32>> {
    let p = field.p();
    let vars = n as usize + 1;
    match support {
        Support::GenericAmbient => loop {
            let v: Vec<u32> = (0..vars).map(|_| rng.random_range(0..p)).collect();
            if v.iter().any(|&c| c != 0) {
                return Ok(v);
            }
        },
        Support::GenericOnHyperplane => loop {
            let mut v: Vec<u32> = (0..vars - 1).map(|_| rng.random_range(0..p)).collect();
            v.push(0);
            if v.iter().any(|&c| c != 0) {
                return Ok(v);
            }
        },
        Support::Explicit(coords) => {
            let v: Vec<u32> = coords.iter().map(|&c| field.reduce_i64(c)).collect();
            if v.iter().all(|&c| c == 0) {
                return Err(Error::ZeroSupport);
            }
            Ok(v)
        }
    }
}

/// Oracle supports: small integer coordinates keep the exact elimination fast
/// while staying generic with overwhelming probability.
const ORACLE_COORD_MAX: i64 = 10_000;

fn draw_point_exact(n: u32, support: &Support, rng: &mut ChaCha8Rng) -> Vec<i64> {
    let vars = n as usize + 1;
    match support {
        Support::GenericAmbient => (0..vars).map(|_| rng.random_range(1..=ORACLE_COORD_MAX)).collect(),
        Support::GenericOnHyperplane => {
            let mut v: Vec<i64> = (0..vars - 1).map(|_| rng.random_range(1..=ORACLE_COORD_MAX)).collect();
            v.push(0);
            v
        }
        Support::Explicit(coords) => coords.clone(),
    }
}

/// Interpolation matrix of `scheme` in degree `d`: one row per derivative
/// condition (components in scheme order, multi-indices in graded-lex order),
/// one column per degree-d monomial. Generic supports are drawn from `seed`,
/// one independent stream per component.
pub fn build_matrix(
    scheme: &FatPointScheme,
    d: u32,
    field: PrimeField,
    seed: u64,
) -> Result<DenseMatrix> {
    let p = field.p();
    if p <= d {
        return Err(Error::PrimeTooSmall { p, bound: d });
    }
    let max_mult = scheme.max_multiplicity();
    if p <= max_mult {
        return Err(Error::PrimeTooSmall { p, bound: max_mult });
    }
    let n = scheme.ambient_dim();
    let vars = n as usize + 1;
    let basis = MonomialBasis::new(n, d);
    let cols = basis.len();
    let rows = scheme.degree() as usize;
    let mut data = Vec::with_capacity(rows * cols);

    // falling factorials ff[b][a] = b (b-1) ... (b-a+1) mod p, zero for a > b
    let amax = max_mult.saturating_sub(1) as usize;
    let mut ff = vec![vec![0u32; amax + 1]; d as usize + 1];
    for b in 0..=d as usize {
        ff[b][0] = 1;
        for a in 1..=amax {
            ff[b][a] = if a > b { 0 } else { field.mul(ff[b][a - 1], (b - a + 1) as u32) };
        }
    }

    for (idx, comp) in scheme.components().iter().enumerate() {
        let mut rng = component_rng(seed, idx);
        let point = draw_point_mod_p(field, n, comp.support(), &mut rng)?;
        // power tables per coordinate
        let mut pows = vec![vec![1u32; d as usize + 1]; vars];
        for (v, &c) in pows.iter_mut().zip(&point) {
            for e in 1..=d as usize {
                v[e] = field.mul(v[e - 1], c);
            }
        }
        let order = comp.multiplicity() - 1;
        let alphas = MonomialBasis::new(n, order);
        for alpha in alphas.iter() {
            for beta in basis.iter() {
                let mut entry = 1u32;
                for j in 0..vars {
                    let (b, a) = (beta[j], alpha[j]);
                    if a > b {
                        entry = 0;
                        break;
                    }
                    entry = field.mul(entry, ff[b as usize][a as usize]);
                    entry = field.mul(entry, pows[j][(b - a) as usize]);
                }
                data.push(entry);
            }
        }
    }
    debug_assert_eq!(data.len(), rows * cols);
    Ok(DenseMatrix::from_data(field, rows, cols, data))
}

/// The same matrix over the integers, for the exact-rational route.
pub fn build_matrix_exact(scheme: &FatPointScheme, d: u32, seed: u64) -> Vec<Vec<BigInt>> {
    let n = scheme.ambient_dim();
    let vars = n as usize + 1;
    let basis = MonomialBasis::new(n, d);
    let mut rows = Vec::with_capacity(scheme.degree() as usize);
    for (idx, comp) in scheme.components().iter().enumerate() {
        let mut rng = component_rng(seed, idx);
        let point = draw_point_exact(n, comp.support(), &mut rng);
        let mut pows: Vec<Vec<BigInt>> = vec![Vec::with_capacity(d as usize + 1); vars];
        for (v, &c) in pows.iter_mut().zip(&point) {
            v.push(BigInt::one());
            for e in 1..=d as usize {
                let next = &v[e - 1] * c;
                v.push(next);
            }
        }
        let order = comp.multiplicity() - 1;
        let alphas = MonomialBasis::new(n, order);
        for alpha in alphas.iter() {
            let mut row = Vec::with_capacity(basis.len());
            for beta in basis.iter() {
                let mut ok = true;
                let mut ff = 1i64;
                for j in 0..vars {
                    let (b, a) = (beta[j], alpha[j]);
                    if a > b {
                        ok = false;
                        break;
                    }
                    for k in 0..a {
                        ff *= (b - k) as i64;
                    }
                }
                if !ok {
                    row.push(BigInt::zero());
                    continue;
                }
                let mut entry = BigInt::from(ff);
                for j in 0..vars {
                    entry *= &pows[j][(beta[j] - alpha[j]) as usize];
                }
                row.push(entry);
            }
            rows.push(row);
        }
    }
    rows
}

/// Good = the conditions are independent (defect zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Good,
    Defective,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        out.write_str(match self {
            Verdict::Good => "Good",
            Verdict::Defective => "Defective",
        })
    }
}

/// Outcome of a postulation check. `prime == 0` marks the exact-rational
/// (characteristic-zero) route.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PostulationReport {
    pub signature: String,
    pub d: u32,
    pub n_forms: u64,
    pub scheme_degree: u64,
    pub rank: u64,
    pub defect: u64,
    pub verdict: Verdict,
    pub trials_used: u32,
    pub base_seed: u64,
    pub prime: u32,
}

impl PostulationReport {
    /// Dimension of degree-d forms through the scheme.
    pub fn h0(&self) -> u64 {
        self.n_forms - self.rank
    }

    /// Failure of the conditions to be independent.
    pub fn h1(&self) -> u64 {
        self.scheme_degree - self.rank
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckConfig {
    pub prime: u32,
    pub trials: u32,
    pub base_seed: u64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self { prime: crate::DEFAULT_PRIME, trials: 3, base_seed: 0 }
    }
}

/// Decide good postulation of `scheme` in degree `d` over GF(p).
///
/// The rank is the maximum over `trials` independent draws; a Defective
/// verdict is only reported when every trial falls short of maximal rank.
/// Deterministic given the configuration.
pub fn check_postulation(
    scheme: &FatPointScheme,
    d: u32,
    cfg: &CheckConfig,
) -> Result<PostulationReport> {
    let field = PrimeField::new(cfg.prime)?;
    let signature = scheme.signature();
    let expect = expected_cohomology(scheme, d);
    let max_rank = expect.n_forms.min(expect.scheme_degree);
    let trials = cfg.trials.max(1);
    let mut rank = 0u64;
    let mut trials_used = 0;
    for trial in 0..trials {
        let seed = trial_seed(cfg.base_seed, trial, &signature, d);
        let m = build_matrix(scheme, d, field, seed)?;
        trials_used = trial + 1;
        rank = rank.max(m.rank() as u64);
        if rank == max_rank {
            break;
        }
    }
    Ok(PostulationReport {
        signature,
        d,
        n_forms: expect.n_forms,
        scheme_degree: expect.scheme_degree,
        rank,
        defect: max_rank - rank,
        verdict: if rank == max_rank { Verdict::Good } else { Verdict::Defective },
        trials_used,
        base_seed: cfg.base_seed,
        prime: cfg.prime,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Maximum number of monomials the exact elimination will accept.
    pub bound: usize,
    pub trials: u32,
    pub base_seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self { bound: 120, trials: 3, base_seed: 0 }
    }
}

/// Characteristic-zero oracle: the same matrix built over the rationals and
/// eliminated exactly. Generic supports are instantiated with small random
/// integer coordinates; explicit supports are used verbatim.
pub fn oracle_check(
    scheme: &FatPointScheme,
    d: u32,
    cfg: &OracleConfig,
) -> Result<PostulationReport> {
    let expect = expected_cohomology(scheme, d);
    if expect.n_forms as usize > cfg.bound {
        return Err(Error::OracleBound { n: expect.n_forms as usize, bound: cfg.bound });
    }
    let signature = scheme.signature();
    let max_rank = expect.n_forms.min(expect.scheme_degree);
    let trials = cfg.trials.max(1);
    let mut rank = 0u64;
    let mut trials_used = 0;
    for trial in 0..trials {
        let seed = trial_seed(cfg.base_seed, trial, &signature, d);
        let rows = build_matrix_exact(scheme, d, seed);
        trials_used = trial + 1;
        rank = rank.max(integer_rank(rows) as u64);
        if rank == max_rank {
            break;
        }
    }
    Ok(PostulationReport {
        signature,
        d,
        n_forms: expect.n_forms,
        scheme_degree: expect.scheme_degree,
        rank,
        defect: max_rank - rank,
        verdict: if rank == max_rank { Verdict::Good } else { Verdict::Defective },
        trials_used,
        base_seed: cfg.base_seed,
        prime: 0,
    })
}
