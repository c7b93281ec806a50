//! Cospan and span categories over finite-dimensional vector spaces, a simplicial
//! homology Brown functor, and its cospanical and spanical extensions.

pub mod error;
pub mod exactlin;
pub mod abcat;
pub mod cospan;
pub mod cw;
pub mod brown;
pub mod generate;
pub mod oracle;
pub mod suites;
pub mod cli;

pub use error::{Error, Result};
