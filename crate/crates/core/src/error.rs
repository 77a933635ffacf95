use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid marked partition: {0}")]
    InvalidMarkedPartition(String),
    #[error("no preimage for bi-partition {0}")]
    NoPreimage(String),
    #[error("multiple preimages for bi-partition {0}")]
    MultiplePreimages(String),
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("case analysis incomplete for w_lambda at index {index}: {detail}")]
    CaseAnalysis { index: usize, detail: String },
    #[error("weight {0} is outside the ambient weight set")]
    WeightOutsideAmbient(String),
    #[error("matrix is not alternating")]
    NotAlternating,
    #[error("matrix is not square")]
    NotSquare,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("point is not in the exotic nilpotent cone")]
    NotInNilcone,
    #[error("Jordan type {0} lacks even multiplicities")]
    OddMultiplicities(String),
    #[error("no marking candidate passes for Jordan type {0}")]
    NoCandidate(String),
    #[error("multiple marking candidates pass: {0}")]
    MultipleCandidates(String),
    #[error("lowest term of the zero character is undefined")]
    ZeroCharacter,
    #[error("zero weight cannot appear in a K-polynomial factor")]
    ZeroWeight,
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("unsupported field size q = {0} (expected 2 or 4)")]
    UnsupportedField(u32),
    #[error("parse error: {0}")]
    Parse(String),
}
