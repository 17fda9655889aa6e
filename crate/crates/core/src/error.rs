use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("n must be at least 1")]
    ZeroRow,

    #[error("empty input")]
    EmptyInput,

    #[error("index {index} out of range for n = {n}")]
    OutOfRange { n: u32, index: u32 },

    #[error("invalid entry {value}: expected one of {expected}")]
    InvalidEntry { value: i64, expected: &'static str },

    #[error("vector of length {len} does not fit n = {n} (expected {expected})")]
    LengthMismatch { n: u32, len: usize, expected: usize },

    #[error("n = {0} must be odd")]
    RequiresOddRow(u32),

    #[error("vector does not solve its defining equation for n = {n}")]
    NotASolution { n: u32 },

    #[error(
        "frontier of {frontier} partial assignments at step {step} exceeds the limit of {limit} \
         (profile so far: {profile:?})"
    )]
    ResourceLimit {
        step: usize,
        frontier: u64,
        limit: u64,
        profile: Vec<u64>,
    },

    #[error("brute force for n = {n} needs {cost} evaluations, above the cap of {cap}")]
    OracleRefused { n: u32, cost: u128, cap: u128 },

    #[error("row {n} has {count} bisections, more than the {cap} that may be listed")]
    TooManySolutions { n: u32, count: String, cap: u64 },

    #[error("missing solve result for n = {0}")]
    MissingReport(u32),

    #[error("gap not computed for n = {n}: full solution set too large (limit n <= {limit})")]
    GapNotComputed { n: u32, limit: u32 },

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
