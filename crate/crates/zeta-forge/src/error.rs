//! One error type for the whole crate. The CLI maps variants onto its
//! documented exit codes (argument/domain problems, verification failures,
//! route disagreements, I/O).

use crate::sequences::SequenceKind;
use crate::zeta_engine::ZetaRoute;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Input outside an operation's domain (wrong range, zero order, ...).
    #[error("{op}: {message}")]
    Domain { op: &'static str, message: String },

    /// A series argument within 1e-12 of a pole of its summand.
    #[error("{op}: x = {x} is within 1e-12 of a lattice singularity")]
    SingularInput { op: &'static str, x: f64 },

    /// A sequence table was asked for an index it does not hold.
    #[error("{kind} table has no entry at index {index}")]
    MissingIndex { kind: SequenceKind, index: usize },

    /// Two exact routes produced different coefficients for the same k.
    #[error("routes disagree at k = {k}: {left_route} gives {left}, {right_route} gives {right}")]
    RouteDisagreement {
        k: usize,
        left_route: ZetaRoute,
        left: String,
        right_route: ZetaRoute,
        right: String,
    },

    /// A grid point outside the range an operation supports.
    #[error("{op}: grid point {point} outside [{lo}, {hi}]")]
    GridOutOfRange {
        op: &'static str,
        point: f64,
        lo: f64,
        hi: f64,
    },

    #[error("could not parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(op: &'static str, message: impl Into<String>) -> Self {
        Error::Domain {
            op,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
