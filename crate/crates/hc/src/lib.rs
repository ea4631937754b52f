//! Driver for the `hc` command-line tool: configuration, wire formats, the parallel
//! quadrature driver and the verification suites. The mathematics lives in `hc_core`.

pub mod commands;
pub mod config;
pub mod json;
pub mod parallel;
pub mod verify;
