use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid beta-set: {0}")]
    InvalidBetaSet(String),
    #[error("malformed symbol: {0}")]
    MalformedSymbol(String),
    #[error("no unitary sector of rank {n} has defect {defect}")]
    InvalidDefect { n: u32, defect: i64 },
    #[error("symbols {0} and {1} lie in different sectors")]
    DifferentSectors(String, String),
    #[error("sector S({n},{defect}) has no target sector in U({n2})")]
    NoTargetSector { n: u32, defect: i64, n2: u32 },
    #[error("tau = {0} is negative for this sector")]
    TauNegative(i64),
    #[error("k = {k} is outside 0..={max}")]
    KOutOfRange { k: u32, max: u32 },
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("the set of unused correspondents of {0} is empty")]
    EmptyFlatSet(String),
    #[error("the pair {0} -> {1} is not in the theta relation")]
    CandidateNotInTheta(String, String),
    #[error("no obstruction found for {0} -> {1}")]
    NoObstruction(String, String),
    #[error("pair ({0}, {1}) is not covered by the window")]
    PairNotInWindow(u32, u32),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
