//! IO companion to `plethys-core`: JSON formats for every domain type, the
//! `plethys` command-line front end, and the acceptance / quick suites.

pub mod cli;
pub mod json;
pub mod suite;

pub use plethys_core as core;
