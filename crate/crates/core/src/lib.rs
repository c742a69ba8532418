pub mod bfile;
pub mod cli;
pub mod crank;
pub mod qproducts;
pub mod report;
pub mod series;
pub mod verifier;

pub use series::{Mismatch, Series, SeriesError};
