use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("undefined root set: the zero polynomial has no isolated roots")]
    UndefinedRootSet,
    #[error("curve {index} ({label}): degenerate coefficients, {detail}")]
    DegenerateCoefficients {
        index: usize,
        label: String,
        detail: String,
    },
    #[error("curve {index} ({label}): real locus is empty")]
    EmptyRealLocus { index: usize, label: String },
    #[error("curve {index} ({label}): real locus is a single point")]
    PointLocus { index: usize, label: String },
    #[error("curve {index} ({label}): conic is a double line")]
    DoubleLine { index: usize, label: String },
    #[error(
        "curve {index} ({label}): conic factors into two real lines; enter them as separate lines"
    )]
    ReducibleConic { index: usize, label: String },
    #[error("curves {first} and {second} have the same zero locus")]
    DuplicateCurve { first: usize, second: usize },
    #[error("the two curves have the same zero locus")]
    IdenticalCurves,
    #[error("invalid curve index {0}")]
    InvalidIndex(usize),
    #[error("unknown component {0:?}")]
    UnknownComponent(String),
    #[error("unknown face id {0}")]
    UnknownFace(usize),
    #[error("sign vectors of different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("L0 is not closed under the product: {0}")]
    NotClosed(String),
    #[error("table is not closed: entry ({0}, {1}) is out of range")]
    NonClosedTable(usize, usize),
    #[error("face {0} is not an edge supported on the chosen curve")]
    NotASection(usize),
    #[error("ambiguous tie between faces {0} and {1} could not be certified")]
    AmbiguousTie(usize, usize),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("coordinate law violated at coordinate {coordinate}: {detail}")]
    LawViolation { coordinate: usize, detail: String },
    #[error("arrangement mismatch: {0}")]
    Mismatch(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for errors caused by an invalid arrangement or input file.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::DegenerateCoefficients { .. }
                | Error::EmptyRealLocus { .. }
                | Error::PointLocus { .. }
                | Error::DoubleLine { .. }
                | Error::ReducibleConic { .. }
                | Error::DuplicateCurve { .. }
                | Error::InvalidIndex(_)
                | Error::UnknownComponent(_)
                | Error::UnknownFace(_)
                | Error::Mismatch(_)
                | Error::Io(_)
                | Error::Unsupported(_)
        )
    }
}
