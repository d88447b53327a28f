//! Subsequence nearest neighbour search.
//!
//! Every window of the reference with the query's length is z-normalized
//! (with sliding sums), screened by the lower bound cascade
//! `LB_Kim -> LB_Keogh(EQ) -> LB_Keogh(EC)`, and otherwise compared with the
//! configured DTW kernel using the best distance so far as threshold.
//!
//! Ties go to the earliest location: a candidate only replaces the best so
//! far when its distance is strictly smaller.

mod cascade;
mod stats;

use core::time::Duration;

pub use cascade::{cascade_decision, CascadeDecision, LowerBoundTier};
pub use stats::{znormalize, RunningStats, DEGENERATE_STD};

use cascade::{Cascade, QueryView, Step};
use stats::znormalize_into;

use crate::kernels::{self, tighten, Algorithm, CellCounter, CumulativeBound, RowBuffers, Threshold};
use crate::lower_bounds::{compute_envelope, descending_magnitude_order};
use crate::{Band, Error, Result, Series};

/// Sliding sums are recomputed from scratch after this many slides.
pub const STATS_RESET_INTERVAL: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchConfig {
    pub query_length: usize,
    /// Window as a fraction of the query length, in `[0, 1]`.
    pub window_ratio: f64,
    pub algorithm: Algorithm,
    pub use_lower_bounds: bool,
    /// Tighten the kernel threshold row by row with the `LB_Keogh`
    /// contributions. Needs `use_lower_bounds`.
    pub tighten_ub: bool,
}

impl SearchConfig {
    /// Lower bounds and tightening on.
    pub fn new(query_length: usize, window_ratio: f64, algorithm: Algorithm) -> Self {
        Self {
            query_length,
            window_ratio,
            algorithm,
            use_lower_bounds: true,
            tighten_ub: true,
        }
    }

    /// Turns lower bounds (and therefore tightening) off.
    pub fn without_lower_bounds(mut self) -> Self {
        self.use_lower_bounds = false;
        self.tighten_ub = false;
        self
    }

    pub fn without_tightening(mut self) -> Self {
        self.tighten_ub = false;
        self
    }

    /// `floor(window_ratio * query_length)`.
    pub fn window_cells(&self) -> usize {
        libm::floor(self.window_ratio * self.query_length as f64) as usize
    }

    pub fn band(&self) -> Band {
        Band::Cells(self.window_cells())
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.window_ratio) {
            return Err(Error::InvalidWindowRatio(self.window_ratio));
        }
        if self.tighten_ub && !self.use_lower_bounds {
            return Err(Error::TighteningWithoutLowerBounds);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BestSoFar {
    /// 0-based start of the best window in the reference.
    pub location: usize,
    pub distance_sq: f64,
    pub found: bool,
}

impl Default for BestSoFar {
    fn default() -> Self {
        Self {
            location: 0,
            distance_sq: f64::INFINITY,
            found: false,
        }
    }
}

impl BestSoFar {
    pub fn distance(&self) -> f64 {
        libm::sqrt(self.distance_sq)
    }
}

/// Counters of a scan. Every candidate is either pruned by exactly one tier
/// or handed to the kernel.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchReport {
    pub candidates_total: u64,
    pub pruned_kim: u64,
    pub pruned_keogh_eq: u64,
    pub pruned_keogh_ec: u64,
    pub dtw_calls: u64,
    /// Kernel calls that ended pruned (distance above the best so far).
    pub dtw_abandoned: u64,
    pub dp_cells_evaluated: u64,
    /// Wall-clock time; left at zero here, the caller owns the clock.
    pub elapsed: Duration,
}

impl SearchReport {
    pub fn pruned_total(&self) -> u64 {
        self.pruned_kim + self.pruned_keogh_eq + self.pruned_keogh_ec
    }

    /// `candidates_total == pruned + dtw_calls` and `dtw_abandoned <= dtw_calls`.
    pub fn is_conserved(&self) -> bool {
        self.candidates_total == self.pruned_total() + self.dtw_calls && self.dtw_abandoned <= self.dtw_calls
    }
}

/// Threshold for 1-based kernel `row` under window `window`:
/// `bsf - cb[min(row - 1 + window, last)]`, floored at zero.
pub fn tighten_threshold(bsf: &BestSoFar, cb: &CumulativeBound, row: usize, window: usize) -> Threshold {
    let values = cb.values();
    let k = row.saturating_sub(1).saturating_add(window).min(values.len() - 1);
    Threshold::new(tighten(bsf.distance_sq, values[k])).unwrap_or(Threshold::INFINITE)
}

/// Nearest z-normalized subsequence of `reference` to the first
/// `cfg.query_length` samples of `query`.
pub fn similarity_search(
    reference: &Series,
    query: &Series,
    cfg: &SearchConfig,
) -> Result<(BestSoFar, SearchReport)> {
    similarity_search_with(reference, query, cfg, |_| {})
}

/// [`similarity_search`] calling `on_improvement` each time the best so far
/// changes.
pub fn similarity_search_with<F: FnMut(&BestSoFar)>(
    reference: &Series,
    query: &Series,
    cfg: &SearchConfig,
    mut on_improvement: F,
) -> Result<(BestSoFar, SearchReport)> {
    cfg.validate()?;
    let m = cfg.query_length;
    if m == 0 || m > query.len() || m > reference.len() {
        return Err(Error::InvalidQueryLength {
            query: m,
            reference: reference.len().min(query.len()),
        });
    }

    let q = &query[..m];
    let qn = znormalize(q, &RunningStats::from_window(q));
    let band = cfg.band();
    let q_env = compute_envelope(&qn, band);
    let order = descending_magnitude_order(&qn);
    let view = QueryView {
        normalized: &qn,
        upper: q_env.upper(),
        lower: q_env.lower(),
        order: &order,
        radius: q_env.radius(),
    };
    let tighten = cfg.use_lower_bounds && cfg.tighten_ub;

    let r = reference.as_slice();
    let mut cascade = Cascade::new(m);
    let mut buffers = RowBuffers::default();
    let mut bsf = BestSoFar::default();
    let mut report = SearchReport::default();
    let mut stats = RunningStats::from_window(&r[..m]);
    let mut slides = 0;

    for loc in 0..=r.len() - m {
        if loc > 0 {
            slides += 1;
            if slides == STATS_RESET_INTERVAL {
                stats = RunningStats::from_window(&r[loc..loc + m]);
                slides = 0;
            } else {
                stats.slide(r[loc - 1], r[loc + m - 1]);
            }
        }
        report.candidates_total += 1;
        znormalize_into(&r[loc..loc + m], &stats, &mut cascade.candidate);

        let tightened = match cascade.decide(&view, bsf.distance_sq, cfg.use_lower_bounds, tighten) {
            Step::Prune(LowerBoundTier::Kim) => {
                report.pruned_kim += 1;
                continue;
            }
            Step::Prune(LowerBoundTier::KeoghEq) => {
                report.pruned_keogh_eq += 1;
                continue;
            }
            Step::Prune(LowerBoundTier::KeoghEc) => {
                report.pruned_keogh_ec += 1;
                continue;
            }
            Step::Compute(tightened) => tightened,
        };

        report.dtw_calls += 1;
        let mut counter = CellCounter::default();
        let cb = tightened.then_some(&cascade.cb[..]);
        let d = kernels::run(
            cfg.algorithm,
            &cascade.candidate,
            &qn,
            band,
            bsf.distance_sq,
            cb,
            &mut buffers,
            &mut counter,
        );
        report.dp_cells_evaluated += counter.cells;
        if d == f64::INFINITY {
            report.dtw_abandoned += 1;
        } else if d < bsf.distance_sq {
            bsf = BestSoFar {
                location: loc,
                distance_sq: d,
                found: true,
            };
            on_improvement(&bsf);
        }
    }
    Ok((bsf, report))
}
