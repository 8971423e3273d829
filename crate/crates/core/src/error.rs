use thiserror::Error;

/// Errors raised by the library.
///
/// Refusals (`Refused`) are kept apart from input errors: they mean the
/// request was well formed but exceeds an enumeration or search cap.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vector width {0} out of range 1..=62")]
    WidthOutOfRange(u32),

    #[error("vector {bits:#x} does not fit in {width} bits")]
    VectorOutOfRange { width: u32, bits: u64 },

    #[error("mixed vector widths {0} and {1}")]
    WidthMismatch(u32, u32),

    #[error("dimension {0} out of range 2..=62")]
    DimensionOutOfRange(u32),

    #[error("element {0} is not in the ground set")]
    ForeignElement(u64),

    #[error("element {0} appears more than once")]
    DuplicateElement(u64),

    #[error("matroid has a loop at element {0}; no finite coloring exists")]
    Loop(u64),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("refused: {what} is {size}, limit is {limit}")]
    Refused {
        what: &'static str,
        size: String,
        limit: u64,
    },
}

impl Error {
    pub fn is_refusal(&self) -> bool {
        matches!(self, Error::Refused { .. })
    }

    pub(crate) fn refused(what: &'static str, size: impl ToString, limit: u64) -> Self {
        Error::Refused {
            what,
            size: size.to_string(),
            limit,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
