//! Command line, OEIS retrieval and rendering on top of `latrect-core`.

pub mod cli;
pub mod fetch;
pub mod render;
pub mod report;
