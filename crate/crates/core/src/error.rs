use thiserror::Error;

use crate::shape::Cell;

/// Errors raised by tableau operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter value 0 is not allowed")]
    ZeroLetter,

    #[error("cannot parse letter {0:?}")]
    BadLetter(String),

    #[error("parts {0:?} do not form a strict partition")]
    NotStrict(Vec<usize>),

    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    ShapeNotContained { outer: String, inner: String },

    #[error("cells do not form a skew shifted shape")]
    NotASkewShape,

    #[error("entries do not cover the shape: {0}")]
    EntriesMismatch(String),

    #[error("tableau uses non-positive letters")]
    UnsupportedAlphabet,

    #[error("tableau is not a valid {0}")]
    InvalidTableau(&'static str),

    #[error("layer {0} is not a border strip")]
    LayerNotBorderStrip(i32),

    #[error("{cell} is not an inner corner")]
    NotInnerCorner { cell: Cell },

    #[error("second tableau does not extend the first")]
    NotExtending,

    #[error("pair is not perforated: {0}")]
    NotPerforated(String),

    #[error("carrier is not a double border strip")]
    NotDoubleBorderStrip,

    #[error("no switch matches the configuration at {cell}: {detail}")]
    MalformedPair { cell: Cell, detail: String },

    #[error("switching path from {origin} has an illegal form: {detail}")]
    BadPath { origin: Cell, detail: String },

    #[error("{0}")]
    Precondition(String),

    #[error("{0}")]
    Invariant(String),

    #[error("polynomial is not in the span of the Q-functions: {0}")]
    NotInSpan(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable snake_case name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroLetter => "zero_letter",
            Error::BadLetter(_) => "bad_letter",
            Error::NotStrict(_) => "not_strict",
            Error::ShapeNotContained { .. } => "shape_not_contained",
            Error::NotASkewShape => "not_a_skew_shape",
            Error::EntriesMismatch(_) => "entries_mismatch",
            Error::UnsupportedAlphabet => "unsupported_alphabet",
            Error::InvalidTableau(_) => "invalid_tableau",
            Error::LayerNotBorderStrip(_) => "layer_not_border_strip",
            Error::NotInnerCorner { .. } => "not_inner_corner",
            Error::NotExtending => "not_extending",
            Error::NotPerforated(_) => "not_perforated",
            Error::NotDoubleBorderStrip => "not_double_border_strip",
            Error::MalformedPair { .. } => "malformed_pair",
            Error::BadPath { .. } => "bad_path",
            Error::Precondition(_) => "precondition",
            Error::Invariant(_) => "invariant",
            Error::NotInSpan(_) => "not_in_span",
        }
    }
}
