use alloc::boxed::Box;
use alloc::string::String;
use core::fmt;

use crate::Rational;

/// Errors raised by the exact computations.
///
/// The variants split into three families that callers (the CLI in
/// particular) treat differently: violated preconditions on integer
/// parameters, structural mismatches between classes, and requests to
/// evaluate a volume formula outside the range where it is known to hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A nonnegative argument was negative.
    NegativeArgument { what: &'static str, value: i64 },
    /// A named precondition on the parameters does not hold.
    Precondition(String),
    /// Classes on different `(g, d)` were combined.
    SpaceMismatch { left: (i64, i64), right: (i64, i64) },
    /// Addition of classes of different codimension, or top-degree
    /// evaluation of a class that is not of codimension `d`.
    CodimMismatch { expected: usize, found: usize },
    /// A product whose codimension exceeds the dimension of `C_d`.
    CodimOverflow { codim: usize, dim: i64 },
    /// A volume formula was asked for a `t` outside its proven interval.
    OutOfProvenDomain {
        t: Box<Rational>,
        lower: Box<Rational>,
        upper: Box<Rational>,
    },
    /// A 2x2 linear system had zero determinant.
    SingularSystem,
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn out_of_domain(t: Rational, lower: Rational, upper: Rational) -> Self {
        Error::OutOfProvenDomain {
            t: Box::new(t),
            lower: Box::new(lower),
            upper: Box::new(upper),
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NegativeArgument { what, value } => {
                write!(f, "{what} must be nonnegative, got {value}")
            }
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::SpaceMismatch { left, right } => write!(
                f,
                "classes live on different spaces: (g={}, d={}) vs (g={}, d={})",
                left.0, left.1, right.0, right.1
            ),
            Error::CodimMismatch { expected, found } => {
                write!(
                    f,
                    "codimension mismatch: expected {expected}, found {found}"
                )
            }
            Error::CodimOverflow { codim, dim } => {
                write!(f, "codimension {codim} exceeds dim C_d = {dim}")
            }
            Error::OutOfProvenDomain { t, lower, upper } => {
                write!(f, "t = {t} is outside the proven domain [{lower}, {upper}]")
            }
            Error::SingularSystem => f.write_str("linear system is singular"),
        }
    }
}

impl core::error::Error for Error {}
