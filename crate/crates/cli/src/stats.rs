//! Machine-readable per-run statistics.

use std::fs;
use std::path::Path;

use eapdtw_core::search::{BestSoFar, SearchReport};
use serde::{Deserialize, Serialize};

/// Flat record written once per search. `best_location` is 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RunStats {
    pub candidates_total: u64,
    pub pruned_kim: u64,
    pub pruned_keogh_eq: u64,
    pub pruned_keogh_ec: u64,
    pub dtw_calls: u64,
    pub dtw_abandoned: u64,
    pub dp_cells_evaluated: u64,
    pub elapsed_seconds: f64,
    pub best_location: usize,
    pub best_distance_sq: f64,
}

impl RunStats {
    pub fn new(best: &BestSoFar, report: &SearchReport) -> Self {
        Self {
            candidates_total: report.candidates_total,
            pruned_kim: report.pruned_kim,
            pruned_keogh_eq: report.pruned_keogh_eq,
            pruned_keogh_ec: report.pruned_keogh_ec,
            dtw_calls: report.dtw_calls,
            dtw_abandoned: report.dtw_abandoned,
            dp_cells_evaluated: report.dp_cells_evaluated,
            elapsed_seconds: report.elapsed.as_secs_f64(),
            best_location: best.location,
            best_distance_sq: best.distance_sq,
        }
    }

    /// Same record with the timing zeroed, for comparing replays.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_seconds = 0.0;
        self
    }
}

pub fn to_json(stats: &RunStats) -> String {
    serde_json::to_string_pretty(stats).expect("plain numeric record")
}

pub fn emit_stats(best: &BestSoFar, report: &SearchReport, path: impl AsRef<Path>) -> std::io::Result<()> {
    let mut text = to_json(&RunStats::new(best, report));
    text.push('\n');
    fs::write(path, text)
}
