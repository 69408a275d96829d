//! Command-line front end and file formats for `qes-core`.

pub mod cli;
pub mod json;
