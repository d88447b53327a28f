//! IO, statistics and the command-line front end for `eapdtw-core`.

pub mod cli;
pub mod io;
pub mod stats;
pub mod synth;
pub mod trace;

pub use io::{load_series, parse_series, write_series, LoadError};
pub use stats::{emit_stats, RunStats};
pub use synth::random_walk;
