//! Batch front end for `cuspzeros`: point evaluation, single-pair audits, reproduction of the
//! published zero-count tables, range scans, and plot data.

pub mod config;
pub mod eval;
pub mod output;
pub mod plotdata;
pub mod scan;
pub mod table;

pub use config::{parse_point, Format, RunConfig, WeightRange};
pub use cuspzeros;
