use alloc::string::String;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarError {
    DivisionByZero,
    OrderOfZero,
    InvalidConductor,
    InvalidParameter(String),
    DuplicateParameter(String),
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::DivisionByZero => write!(f, "division by zero"),
            ScalarError::OrderOfZero => write!(f, "order of zero is undefined"),
            ScalarError::InvalidConductor => write!(f, "conductor must be at least 1"),
            ScalarError::InvalidParameter(p) => write!(f, "invalid parameter name `{}`", p),
            ScalarError::DuplicateParameter(p) => write!(f, "parameter `{}` declared twice", p),
        }
    }
}

/// Errors raised by the algebraic layers above the scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    Scalar(ScalarError),
    /// A braiding entry is zero.
    ZeroEntry { row: usize, col: usize },
    /// The braiding matrix is not square of the declared rank.
    Shape { expected: usize, found: usize },
    /// Vector length does not match the rank.
    RankMismatch { expected: usize, found: usize },
    LetterOutOfRange { letter: usize, rank: usize },
    NotLyndon,
    NotHomogeneous,
    /// An element with a nonzero degree-0 part was passed to the Nichols zero test.
    DegreeZeroComponent,
    SameIndex,
    /// The diagram splits into the listed components.
    Disconnected { components: alloc::vec::Vec<alloc::vec::Vec<usize>> },
    InvalidCap,
    /// A lattice coordinate or exponent left the supported integer range.
    Overflow,
}

impl From<ScalarError> for Error {
    fn from(e: ScalarError) -> Self {
        Error::Scalar(e)
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Scalar(e) => write!(f, "{}", e),
            Error::ZeroEntry { row, col } => {
                write!(f, "braiding entry q {} {} is zero", row + 1, col + 1)
            }
            Error::Shape { expected, found } => {
                write!(f, "expected a {0}x{0} braiding matrix, found {1} rows", expected, found)
            }
            Error::RankMismatch { expected, found } => {
                write!(f, "vector of length {} where rank {} was expected", found, expected)
            }
            Error::LetterOutOfRange { letter, rank } => {
                write!(f, "letter x{} outside alphabet of rank {}", letter + 1, rank)
            }
            Error::NotLyndon => write!(f, "word is not a Lyndon word of length at least 2"),
            Error::NotHomogeneous => write!(f, "braided bracket needs homogeneous arguments"),
            Error::DegreeZeroComponent => {
                write!(f, "element has a degree-0 component; test the constant term directly")
            }
            Error::SameIndex => write!(f, "indices i and j must differ"),
            Error::Disconnected { components } => {
                write!(f, "braiding diagram is disconnected; analyze each component separately:")?;
                for c in components {
                    write!(f, " {{")?;
                    for (k, i) in c.iter().enumerate() {
                        if k > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{}", i + 1)?;
                    }
                    write!(f, "}}")?;
                }
                Ok(())
            }
            Error::Overflow => write!(f, "integer overflow in lattice arithmetic"),
            Error::InvalidCap => write!(f, "caps must be at least 1"),
        }
    }
}
