use thiserror::Error;

use crate::presentation::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid presentation:\n{0}")]
    Invalid(ValidationReport),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("crossing limit exceeded: {crossings} > {limit}")]
    CrossingLimit { crossings: usize, limit: usize },
    #[error("point-count limit exceeded: {n} > {limit}")]
    PointLimit { n: u32, limit: u32 },
    #[error("generator s{index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: u32, strands: u32 },
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(u32, u32),
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("move not applicable: {0}")]
    MoveNotApplicable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
