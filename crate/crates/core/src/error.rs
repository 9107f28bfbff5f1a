use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
#[non_exhaustive]
pub enum Error {
    #[error("states live in different spaces")]
    SpaceMismatch,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("coefficient list has length {coeffs} but state list has length {states}")]
    LengthMismatch { coeffs: usize, states: usize },
    #[error("unknown sector label `{0}`")]
    UnknownSector(String),
    #[error("basis id `{0}` does not exist in the space")]
    UnknownBasisId(String),
    #[error("duplicate basis id `{0}`")]
    DuplicateBasisId(String),
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    #[error("matrix is not Hermitian: max |M - M^dag| = {max_deviation:e}")]
    NotHermitian { max_deviation: f64 },
    #[error("state is not normalized: norm = {norm}")]
    NotNormalized { norm: f64 },
    #[error("ensemble weight {value} is negative or non-finite")]
    InvalidWeight { value: f64 },
    #[error("ensemble weights sum to {sum}, expected 1")]
    WeightSum { sum: f64 },
    #[error("trace is {trace}, expected 1")]
    TraceNotOne { trace: f64 },
    #[error("matrix is not positive semidefinite: min eigenvalue = {min_eigenvalue:e}")]
    NotPositive { min_eigenvalue: f64 },
    #[error("state is not supported in a single sector")]
    NotPhysical,
    #[error("states belong to the same sector; a cross-sector pair is required")]
    SameSector,
    #[error("observable has cross-sector matrix elements: max = {max_cross:e}")]
    NotSectorCompatible { max_cross: f64 },
    #[error("observable does not commute with the swap operator: max |[O,P]| = {max_commutator:e}")]
    NotSwapInvariant { max_commutator: f64 },
    #[error("state is not an exchange eigenstate of the required {0} type")]
    NotExchangeEigenstate(&'static str),
    #[error("states are not orthogonal: |<a|b>| = {overlap:e}")]
    NotOrthogonal { overlap: f64 },
    #[error("no spin species given for populated sector `{0}`")]
    MissingSpecies(String),
    #[error("mass must be strictly positive, got {mass}")]
    NonPositiveMass { mass: f64 },
    #[error("{name} must be at least {min}, got {got}")]
    QuantumNumberRange {
        name: &'static str,
        min: u32,
        got: u32,
    },
    #[error("evaluation point {x} is too close to the singularity at the origin")]
    TooCloseToSingularity { x: f64 },
    #[error("quadrature did not converge: residual {achieved:e} above tolerance {requested:e}")]
    QuadratureNotConverged { achieved: f64, requested: f64 },
    #[error("energy bracket does not isolate eigenvalue {k}: node counts {lo_count}..{hi_count}")]
    BracketMissesEigenvalue {
        k: u32,
        lo_count: usize,
        hi_count: usize,
    },
    #[error("eigenvalue search did not converge within the iteration budget")]
    SolverDidNotConverge,
    #[error("invalid solver configuration: {0}")]
    InvalidConfig(&'static str),
}
