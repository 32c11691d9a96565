use thiserror::Error;

use crate::partitions::Partition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus h = {0} must be odd and at least 3")]
    InvalidModulus(usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition {partition} is not in DP_{h}")]
    NotInDpH { h: usize, partition: Partition },

    #[error("partition {partition} is not {h}-regular")]
    NotRegular { h: usize, partition: Partition },

    #[error("dominance comparison across degrees {left} and {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("uncovered disorder in wedge word {word:?} at position {position}")]
    UncoveredDisorder { word: Vec<usize>, position: usize },

    #[error("vector mixes weights {first:?} and {second:?}")]
    MixedWeight { first: Vec<usize>, second: Vec<usize> },

    #[error("weight of the zero vector is undefined")]
    ZeroWeight,

    #[error("{dividend} is not divisible by {divisor}")]
    NonDivisible { dividend: String, divisor: String },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("no canonical vector available for {0}")]
    MissingContext(Partition),

    #[error("triangularity violated in column {column}: {detail}")]
    Triangularity { column: Partition, detail: String },

    #[error("negative power of two 2^({exponent}) at row {row}")]
    NegativeTwoPower { row: Partition, exponent: i64 },

    #[error("zero vector has no 2-adic normalization")]
    ZeroVector,

    #[error("inconsistent associate data: {0}")]
    Associates(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
