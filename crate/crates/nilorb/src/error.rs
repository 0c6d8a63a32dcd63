use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("bipartitions of different totals ({0} vs {1}) are not comparable")]
    SizeMismatch(u32, u32),

    #[error("symbols live in different algebras: {0} vs {1}")]
    RankMismatch(String, String),

    #[error("invalid orbit symbol: {0}")]
    InvalidSymbol(String),

    #[error("operation not supported for type {0}")]
    UnsupportedType(char),

    #[error("{0} is not in the image of the Springer map")]
    NotInImage(String),

    #[error("{0} lies outside the domain of this map")]
    Domain(String),

    #[error("the zero orbit is a base case of the recursion")]
    BaseCase,

    #[error("form is not nilpotent")]
    NotNilpotent,

    #[error("parameter {0} does not exist over F_{1}")]
    ParameterUnavailable(String, u32),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err($crate::error::Error::Internal(format!($($fmt)+)));
        }
    };
}
pub(crate) use ensure;
