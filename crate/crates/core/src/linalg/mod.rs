//! Exact integer linear algebra: minors, Smith normal form and solution
//! spaces of homogeneous systems modulo an arbitrary modulus.

mod bareiss;
mod matrix;
mod modular;
mod smith;

use thiserror::Error;

pub use bareiss::{determinant, minor_determinant};
pub use matrix::IntMatrix;
pub use modular::{solution_space_mod, SolutionIter, SolutionSpace, DEFAULT_ENUMERATION_CAP};
pub use smith::{smith_decomposition, smith_normal_form, SmithDecomposition, SmithForm};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("minor ({row}, {col}) out of range for a {rows}x{cols} matrix")]
    IndexOutOfRange { row: usize, col: usize, rows: usize, cols: usize },
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("solution space exceeds the enumeration cap of {cap}")]
    EnumerationTooLarge { cap: u64 },
}
