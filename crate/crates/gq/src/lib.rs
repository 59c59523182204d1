//! Command-line front end, surface sampling and export for `gq-core`.

pub mod cli;
pub mod export;
pub mod sample;
pub mod suites;
