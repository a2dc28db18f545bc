//! Combinatorial model of fat point schemes: components, degrees and the
//! expected cohomology they force in each degree.

use crate::binom::{binomial, monomial_count};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// Where a component sits. Generic supports are drawn at matrix-build time
/// from a seeded stream; explicit supports are used verbatim.
///
/// Explicit coordinates are homogeneous integers: a rational point can always
/// be scaled to integer coordinates without moving it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Support {
    GenericAmbient,
    GenericOnHyperplane,
    Explicit(Vec<i64>),
}

/// One fat point `mP`: a multiplicity together with its support.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FatPointComponent {
    multiplicity: u32,
    support: Support,
}

impl FatPointComponent {
    pub fn generic(multiplicity: u32) -> Result<Self> {
        Self::new(multiplicity, Support::GenericAmbient)
    }

    pub fn on_hyperplane(multiplicity: u32) -> Result<Self> {
        Self::new(multiplicity, Support::GenericOnHyperplane)
    }

    pub fn explicit(multiplicity: u32, coords: Vec<i64>) -> Result<Self> {
        Self::new(multiplicity, Support::Explicit(coords))
    }

    pub fn new(multiplicity: u32, support: Support) -> Result<Self> {
        if multiplicity == 0 {
            return Err(Error::ZeroMultiplicity);
        }
        if let Support::Explicit(ref coords) = support {
            if coords.iter().all(|&c| c == 0) {
                return Err(Error::ZeroSupport);
            }
        }
        Ok(Self { multiplicity, support })
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    pub fn support(&self) -> &Support {
        &self.support
    }
}

/// A union of fat points of `P^n`, stored with components sorted by
/// decreasing multiplicity (the `m_1 >= ... >= m_k` convention).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FatPointScheme {
    ambient_dim: u32,
    components: Vec<FatPointComponent>,
}

impl FatPointScheme {
    pub fn new(ambient_dim: u32, mut components: Vec<FatPointComponent>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::ZeroDimension);
        }
        for c in &components {
            if let Support::Explicit(ref coords) = c.support {
                if coords.len() != ambient_dim as usize + 1 {
                    return Err(Error::SupportLength {
                        expected: ambient_dim as usize + 1,
                        got: coords.len(),
                    });
                }
            }
        }
        components.sort_by(|a, b| b.multiplicity.cmp(&a.multiplicity));
        Ok(Self { ambient_dim, components })
    }

    /// `count` generic `m`-points of `P^n`.
    pub fn uniform(ambient_dim: u32, multiplicity: u32, count: u32) -> Result<Self> {
        let comps = (0..count)
            .map(|_| FatPointComponent::generic(multiplicity))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ambient_dim, comps)
    }

    /// Build from `(multiplicity, count)` pairs of generic points.
    pub fn from_signature(ambient_dim: u32, signature: &[(u32, u32)]) -> Result<Self> {
        let mut comps = Vec::new();
        for &(m, count) in signature {
            for _ in 0..count {
                comps.push(FatPointComponent::generic(m)?);
            }
        }
        Self::new(ambient_dim, comps)
    }

    pub fn ambient_dim(&self) -> u32 {
        self.ambient_dim
    }

    pub fn components(&self) -> &[FatPointComponent] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.components.first().map_or(0, |c| c.multiplicity)
    }

    /// Total length: the sum of `binom(n + m_i - 1, n)` over the components.
    pub fn degree(&self) -> u64 {
        self.components
            .iter()
            .map(|c| fat_point_length(self.ambient_dim, c.multiplicity).expect("validated"))
            .sum()
    }

    /// Canonical description, stable across runs; feeds seed derivation and
    /// cache keys. Generic components are grouped, explicit ones spelled out.
    pub fn signature(&self) -> String {
        let mut sig = format!("P{}", self.ambient_dim);
        let mut run: Option<(u32, char, u32)> = None;
        let mut flush = |sig: &mut String, run: Option<(u32, char, u32)>| {
            if let Some((m, kind, count)) = run {
                let _ = write!(sig, ";{m}{}x{count}", if kind == 'a' { "" } else { "H" });
            }
        };
        for c in &self.components {
            match c.support {
                Support::Explicit(ref coords) => {
                    flush(&mut sig, run.take());
                    let _ = write!(sig, ";{}@", c.multiplicity);
                    for (i, v) in coords.iter().enumerate() {
                        let _ = write!(sig, "{}{v}", if i == 0 { "" } else { "," });
                    }
                }
                Support::GenericAmbient | Support::GenericOnHyperplane => {
                    let kind = if matches!(c.support, Support::GenericAmbient) { 'a' } else { 'h' };
                    match run {
                        Some((m, k, count)) if m == c.multiplicity && k == kind => {
                            run = Some((m, k, count + 1));
                        }
                        other => {
                            flush(&mut sig, other);
                            run = Some((c.multiplicity, kind, 1));
                        }
                    }
                }
            }
        }
        flush(&mut sig, run);
        sig
    }
}

/// Expected cohomology of a scheme in one degree: exactly one of
/// `expected_h0`, `expected_h1` can be positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PostulationExpectation {
    pub degree_d: u32,
    /// `binom(d + n, n)`, the number of degree-d monomials.
    pub n_forms: u64,
    pub scheme_degree: u64,
    pub expected_h0: u64,
    pub expected_h1: u64,
}

/// Length of an `m`-point of `P^n`: `binom(n + m - 1, n)`.
pub fn fat_point_length(n: u32, m: u32) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    if m == 0 {
        return Err(Error::ZeroMultiplicity);
    }
    Ok(binomial(n as u64 + m as u64 - 1, n as u64))
}

/// Degree count of a scheme against the space of degree-d forms.
pub fn expected_cohomology(scheme: &FatPointScheme, d: u32) -> PostulationExpectation {
    let n_forms = monomial_count(scheme.ambient_dim(), d);
    let scheme_degree = scheme.degree();
    PostulationExpectation {
        degree_d: d,
        n_forms,
        scheme_degree,
        expected_h0: n_forms.saturating_sub(scheme_degree),
        expected_h1: scheme_degree.saturating_sub(n_forms),
    }
}

/// Degree slack of `x` 4-points, `y` 3-points, `z` 2-points in `P^3`:
/// `binom(d+3, 3) - 20x - 10y - 4z`. May be negative.
pub fn epsilon(d: u32, x: u64, y: u64, z: u64) -> i64 {
    let n = binomial(d as u64 + 3, 3) as i128;
    let used = 20 * x as i128 + 10 * y as i128 + 4 * z as i128;
    i64::try_from(n - used).expect("epsilon exceeds i64")
}

/// All `(x, y, z)` with `-19 <= epsilon(d,x,y,z) <= 3` inside the window
/// `x <= ceil(N/20)`, `y <= ceil(N/10)`, `z <= ceil(N/4)`, in lexicographic
/// order. These are exactly the cases that decide good postulation for every
/// signature in degree `d`.
pub fn boundary_triples(d: u32) -> Vec<(u64, u64, u64)> {
    let n = binomial(d as u64 + 3, 3);
    let mut out = Vec::new();
    for x in 0..=n.div_ceil(20) {
        let used_x = 20 * x as i128;
        for y in 0..=n.div_ceil(10) {
            let used_xy = used_x + 10 * y as i128;
            // -19 <= N - used_xy - 4z <= 3
            let lo = (n as i128 - 3 - used_xy).max(0);
            let hi = n as i128 + 19 - used_xy;
            if hi < 0 {
                break;
            }
            let z_min = (lo + 3) / 4; // smallest z with 4z >= lo
            let z_max = hi / 4;
            let z_cap = n.div_ceil(4) as i128;
            for z in z_min..=z_max.min(z_cap) {
                out.push((x, y, z as u64));
            }
        }
    }
    out
}
