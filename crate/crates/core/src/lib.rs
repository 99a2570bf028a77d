//! Exact structure theory of Hermitian symmetric spaces of noncompact type.

pub mod bounds;
pub mod error;
pub mod field;
pub mod groupform;
pub mod hermitian;
pub mod lattice;
pub mod linalg;
pub mod matrixreal;
pub mod rootsys;
pub mod tables;

pub use error::{Error, Result};
pub use field::{Gauss, Surd, Q};
