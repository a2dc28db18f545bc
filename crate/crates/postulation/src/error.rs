use thiserror::Error;

/// Errors reported by scheme construction, matrix building and the verifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("multiplicity must be at least 1")]
    ZeroMultiplicity,
    #[error("ambient dimension must be at least 1")]
    ZeroDimension,
    #[error("explicit support must have {expected} homogeneous coordinates, got {got}")]
    SupportLength { expected: usize, got: usize },
    #[error("explicit support is the zero vector (not a projective point)")]
    ZeroSupport,
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("prime {p} too small: the rank model needs p > {bound}")]
    PrimeTooSmall { p: u32, bound: u32 },
    #[error("oracle bound exceeded: {n} monomials > limit {bound}")]
    OracleBound { n: usize, bound: usize },
    #[error("virtual component has no layers left")]
    ExhaustedComponent,
    #[error("beta = {0} outside the decomposable range [0, 9]")]
    BetaRange(u64),
    #[error("({0},{1},{2}) is not one of the ten admissible (e,f,g) triples")]
    BadTriple(u32, u32, u32),
    #[error("induction requires degree d >= 41, got {0}")]
    DegreeTooSmall(u32),
    #[error("epsilon({d},{x},{y},{z}) = {eps} outside the boundary window [-19, 3]")]
    EpsilonRange { d: u32, x: u64, y: u64, z: u64, eps: i64 },
    #[error("hyperplane trace degree {trace} exceeds capacity {cap} at t = {t}")]
    TraceOverflow { t: u32, trace: u64, cap: u64 },
}
