//! File formats, reports, and the command-line front end for `roomalloc-core`.

#![forbid(unsafe_code)]

pub mod cli;
pub mod formats;
pub mod manifest;
pub mod presets;
pub mod report;

pub use roomalloc_core as engine;
