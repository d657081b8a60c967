//! File format, command line and invariant battery around `bihom-core`.

pub mod battery;
pub mod cli;
pub mod format;
pub mod random;
pub mod report;
pub mod search;
pub mod fixtures;
