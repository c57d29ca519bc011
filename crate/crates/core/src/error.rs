use thiserror::Error;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty codeword set")]
    EmptyCodewordSet,

    #[error("empty coalition")]
    EmptyCoalition,

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("codeword index {index} out of range for a code with {size} codewords")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("position {position} out of range for length {length}")]
    PositionOutOfRange { position: usize, length: usize },

    #[error("symbol {symbol} outside the alphabet of size {q}")]
    SymbolOutOfRange { symbol: u32, q: u32 },

    #[error("duplicate codeword at indices {first} and {second}")]
    DuplicateCodeword { first: usize, second: usize },

    #[error("invalid code parameters: {0}")]
    InvalidParameters(String),

    #[error("t must be at least 2, got {0}")]
    StrengthTooSmall(usize),

    #[error("t = {t} exceeds the configured cap of {cap}")]
    StrengthTooLarge { t: usize, cap: usize },

    #[error("instance too large: {count} subsets exceed the cap of {cap}")]
    InstanceTooLarge { count: u128, cap: u128 },

    #[error("oracle bound: descendant intersection of size {size} exceeds {bound}")]
    OracleBound { size: usize, bound: usize },

    #[error("operation requires code length 3, got {0}")]
    RequiresLengthThree(usize),

    #[error("operation requires a binary code or binary feasible set")]
    NotBinary,

    #[error("q-s must be odd (q = {q}, s = {s})")]
    EvenFiniteModulus { q: u32, s: u32 },

    #[error("s out of range: need 0 <= s <= q/2 (q = {q}, s = {s})")]
    InfinityCountOutOfRange { q: u32, s: u32 },

    #[error("q = {0} is too small, need q >= 4")]
    AlphabetTooSmall(u32),

    #[error("construction produced a repeated codeword {0:?}")]
    ConstructionCollision(Vec<u32>),

    #[error("infeasible R: no codeword is consistent with the pinned positions")]
    InfeasibleR,

    #[error("feasible set position {0} is empty")]
    EmptyPosition(usize),

    #[error("signal dimension {dim} is smaller than code length {length}")]
    DimensionTooSmall { dim: usize, length: usize },

    #[error("embedding strength must be positive and finite, got {0}")]
    InvalidStrength(f64),

    #[error("threshold eps must lie in (0, 1/2), got {0}")]
    ThresholdOutOfRange(f64),

    #[error("no signals to average")]
    NoSignals,

    #[error("signal dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
