use thiserror::Error;

/// Errors raised across the crate.
///
/// Variants split into two families: bad input ([`Error::is_falsification`]
/// returns `false`) and structural failures where a computed object violated
/// a property the theory guarantees (`true`). The CLI maps the first family to
/// exit code 1 and the second to exit code 2.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("validation error: {0}")]
    Validation(String),

    #[error("degenerate flat: the chosen hyperplanes {indices:?} intersect only in the origin")]
    DegenerateFlat { indices: Vec<usize> },

    #[error("non-simplicial chamber with signs {signs}: {rays} extreme rays in rank {rank}")]
    NotSimplicial { signs: String, rays: usize, rank: usize },

    #[error("label conflict at chamber {signs}: frame {first:?} via route {first_route:?}, frame {second:?} via route {second_route:?}")]
    LabelConflict {
        signs: String,
        first: Vec<Vec<i64>>,
        first_route: Vec<usize>,
        second: Vec<Vec<i64>>,
        second_route: Vec<usize>,
    },

    #[error("structure error: {0}")]
    Structure(String),

    #[error("point lies on complexified hyperplane {hyperplane}")]
    OnHyperplane { hyperplane: usize },

    #[error("coverage error: no piece contains {point}")]
    Coverage { point: String },

    #[error("overlap error: {point} lies in pieces {chambers:?}")]
    Overlap { point: String, chambers: Vec<usize> },

    #[error("refinement needed on segment {segment}: pieces {from} -> {to} are not adjacent")]
    RefinementNeeded { segment: usize, from: usize, to: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub fn structure(msg: impl Into<String>) -> Self {
        Error::Structure(msg.into())
    }

    /// True when the error reports a failed mathematical property rather
    /// than malformed input.
    pub fn is_falsification(&self) -> bool {
        matches!(
            self,
            Error::LabelConflict { .. }
                | Error::Structure(_)
                | Error::Coverage { .. }
                | Error::Overlap { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
