//! Special functions: gamma family, Bessel-type evaluators, polynomial
//! families and the named series constructors.

pub mod bessel;
pub mod families;
pub mod gamma;
pub mod poly;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpecialError {
    #[error("unknown family '{0}'")]
    UnknownFamily(String),
    #[error("pole of {what} at index {index}")]
    Pole { index: usize, what: String },
    #[error("coefficient overflow at index {index}")]
    Overflow { index: usize },
    #[error("{0}")]
    Domain(String),
    #[error("series tail {tail:e} not below {tol:e} at order {order}; raise --order")]
    TailNotConverged { tail: f64, tol: f64, order: usize },
    #[error(transparent)]
    Series(#[from] crate::series::SeriesError),
}
