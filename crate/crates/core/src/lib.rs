//! Structure theory of finite-dimensional complex Lie algebras and
//! polynomial-identity condition checks on their matrix representations.

pub mod catalog;
pub mod error;
pub mod exact;
pub mod growth;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod pbw;
pub mod pi;
pub mod rep;
pub mod samples;

pub use error::{Error, Result};
