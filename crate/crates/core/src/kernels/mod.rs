//! Exact DTW kernels.
//!
//! All kernels compute the classic recurrence with the squared difference as
//! the point cost, scanning the matrix row by row with two buffers sized by
//! the shorter series. The longer series walks the rows (the first argument
//! when both have the same length).
//!
//! * [`dtw_full`] / [`dtw_windowed`]: every cell of the (banded) matrix.
//! * [`dtw_left_prune`]: skips columns under discard points and abandons when
//!   a whole row exceeds the threshold.
//! * [`ea_pruned_dtw`]: additionally prunes each row from the right and
//!   abandons when the left and right borders collide.
//!
//! Thresholds are inclusive: a distance equal to `ub` is always returned.

mod ea_pruned;
mod full;
mod left_prune;
mod trace;

use alloc::vec;
use alloc::vec::Vec;

pub use trace::{CellCounter, KernelTrace, NoTrace, TraceEvent, TraceKind, Tracer};

use crate::{Band, Error, Result, Series};

/// Point cost: squared difference.
#[inline(always)]
pub fn squared_cost(a: f64, b: f64) -> f64 {
    let d = a - b;
    d * d
}

/// `min` for values that are never NaN; compiles to a single instruction,
/// unlike `f64::min`.
#[inline(always)]
pub(crate) fn min2(a: f64, b: f64) -> f64 {
    if b < a {
        b
    } else {
        a
    }
}

/// Upper bound used for early abandoning; `+inf` never abandons.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Threshold(f64);

impl Threshold {
    pub const INFINITE: Threshold = Threshold(f64::INFINITY);

    pub fn new(ub: f64) -> Result<Self> {
        if ub >= 0.0 {
            Ok(Self(ub))
        } else {
            Err(Error::InvalidThreshold(ub))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_infinite(self) -> bool {
        self.0 == f64::INFINITY
    }

    /// `ub - remaining`, floored at zero; an infinite threshold stays infinite.
    pub fn tightened(self, remaining: f64) -> Threshold {
        Threshold(tighten(self.0, remaining))
    }
}

impl TryFrom<f64> for Threshold {
    type Error = Error;

    fn try_from(ub: f64) -> Result<Self> {
        Threshold::new(ub)
    }
}

/// Result of a thresholded kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DtwOutcome {
    Distance(f64),
    /// The distance strictly exceeds the threshold (or no path exists inside
    /// the band).
    Pruned,
}

impl DtwOutcome {
    /// Maps `+inf` to [`DtwOutcome::Pruned`].
    pub fn from_cost(cost: f64) -> Self {
        if cost == f64::INFINITY {
            DtwOutcome::Pruned
        } else {
            DtwOutcome::Distance(cost)
        }
    }

    pub fn distance(self) -> Option<f64> {
        match self {
            DtwOutcome::Distance(d) => Some(d),
            DtwOutcome::Pruned => None,
        }
    }

    pub fn is_pruned(self) -> bool {
        matches!(self, DtwOutcome::Pruned)
    }

    /// The cost with `Pruned` as `+inf`.
    pub fn cost(self) -> f64 {
        self.distance().unwrap_or(f64::INFINITY)
    }
}

/// Kernel tier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Full,
    LeftPrune,
    EaPruned,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Full, Algorithm::LeftPrune, Algorithm::EaPruned];

    /// Short name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Full => "full",
            Algorithm::LeftPrune => "lp",
            Algorithm::EaPruned => "eap",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Algorithm::ALL.into_iter().find(|a| a.name() == name)
    }
}

/// Lower bound on the cost still to be accumulated after each row.
///
/// `values()[k]` bounds the cost of aligning the positions after `k` (0-based)
/// of the series it was built from. Non-increasing, ending in zero.
#[derive(Debug, Clone, PartialEq)]
pub struct CumulativeBound(Vec<f64>);

impl CumulativeBound {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        match values.last() {
            None => return Err(Error::InvalidCumulativeBound("empty")),
            Some(&last) if last != 0.0 => {
                return Err(Error::InvalidCumulativeBound("last element must be zero"))
            }
            _ => {}
        }
        if values.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::InvalidCumulativeBound(
                "values must be finite and non-negative",
            ));
        }
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidCumulativeBound("values must be non-increasing"));
        }
        Ok(Self(values))
    }

    pub fn zeros(len: usize) -> Result<Self> {
        Self::new(vec![0.0; len])
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn from_trusted(values: Vec<f64>) -> Self {
        Self(values)
    }
}

#[inline]
pub(crate) fn tighten(ub: f64, remaining: f64) -> f64 {
    if ub == f64::INFINITY {
        ub
    } else {
        (ub - remaining).max(0.0)
    }
}

/// Threshold for 1-based `row`: cells in this row reach at most column
/// `row + window`, so everything after that position is still to be paid.
///
/// The bound and the path costs are summed in different orders, so the
/// subtraction gets a relative allowance of `slack` on both terms; without
/// it a distance exactly equal to `ub` could be lost to rounding. The final
/// cell is still compared against `ub` itself.
#[inline]
pub(crate) fn row_threshold(ub: f64, cb: Option<&[f64]>, row: usize, window: usize, slack: f64) -> f64 {
    match cb {
        None => ub,
        Some(cb) => {
            let k = (row - 1).saturating_add(window).min(cb.len() - 1);
            if ub == f64::INFINITY {
                ub
            } else {
                (ub * (1.0 + slack) - cb[k] * (1.0 - slack)).max(0.0)
            }
        }
    }
}

/// Relative rounding allowance for tightened thresholds over an `rows x cols`
/// matrix.
#[inline]
pub(crate) fn rounding_slack(rows: usize, cols: usize) -> f64 {
    4.0 * (rows + cols) as f64 * f64::EPSILON
}

/// Reusable pair of row buffers.
#[derive(Debug, Default, Clone)]
pub(crate) struct RowBuffers {
    prev: Vec<f64>,
    curr: Vec<f64>,
}

impl RowBuffers {
    fn reset(&mut self, len: usize) {
        for buf in [&mut self.prev, &mut self.curr] {
            buf.clear();
            buf.resize(len, f64::INFINITY);
        }
    }
}

/// Longer series on rows, shorter on columns; the first argument is the row
/// series on ties.
#[inline]
pub(crate) fn orient<'a>(a: &'a [f64], b: &'a [f64]) -> (&'a [f64], &'a [f64]) {
    if b.len() > a.len() {
        (b, a)
    } else {
        (a, b)
    }
}

/// Runs a kernel on raw, non-empty slices. `cb`, when present, must have the
/// length of the longer slice. Returns `+inf` for pruned.
#[allow(clippy::too_many_arguments)]
pub(crate) fn run<T: Tracer>(
    algorithm: Algorithm,
    a: &[f64],
    b: &[f64],
    band: Band,
    ub: f64,
    cb: Option<&[f64]>,
    buffers: &mut RowBuffers,
    tracer: &mut T,
) -> f64 {
    let (rows, cols) = orient(a, b);
    debug_assert!(!cols.is_empty());
    let window = match band.resolve(rows.len(), cols.len()) {
        None => usize::MAX,
        Some(w) if rows.len() - cols.len() > w => return f64::INFINITY,
        Some(w) => w,
    };
    match algorithm {
        Algorithm::Full => full::full(rows, cols, window, buffers, tracer),
        Algorithm::LeftPrune => left_prune::left_prune(rows, cols, window, ub, cb, buffers, tracer),
        Algorithm::EaPruned => ea_pruned::ea_pruned(rows, cols, window, ub, cb, buffers, tracer),
    }
}

fn check_cb<'a>(cb: Option<&'a CumulativeBound>, a: &Series, b: &Series) -> Result<Option<&'a [f64]>> {
    match cb {
        None => Ok(None),
        Some(cb) => {
            let longer = a.len().max(b.len());
            if cb.len() != longer {
                Err(Error::LengthMismatch {
                    left: cb.len(),
                    right: longer,
                })
            } else {
                Ok(Some(cb.values()))
            }
        }
    }
}

/// Unconstrained DTW.
pub fn dtw_full(s: &Series, t: &Series) -> f64 {
    run(
        Algorithm::Full,
        s,
        t,
        Band::Unbounded,
        f64::INFINITY,
        None,
        &mut RowBuffers::default(),
        &mut NoTrace,
    )
}

/// DTW restricted to `|i - j| <= w`. Pruned when the band holds no path
/// (the lengths differ by more than `w`).
pub fn dtw_windowed(s: &Series, t: &Series, band: Band) -> DtwOutcome {
    DtwOutcome::from_cost(run(
        Algorithm::Full,
        s,
        t,
        band,
        f64::INFINITY,
        None,
        &mut RowBuffers::default(),
        &mut NoTrace,
    ))
}

/// DTW pruned from the left: exact when the distance is at most `ub`.
pub fn dtw_left_prune(s: &Series, t: &Series, ub: Threshold) -> DtwOutcome {
    DtwOutcome::from_cost(run(
        Algorithm::LeftPrune,
        s,
        t,
        Band::Unbounded,
        ub.value(),
        None,
        &mut RowBuffers::default(),
        &mut NoTrace,
    ))
}

/// Windowed [`dtw_left_prune`] with optional threshold tightening.
pub fn dtw_left_prune_windowed(
    s: &Series,
    t: &Series,
    band: Band,
    ub: Threshold,
    cb: Option<&CumulativeBound>,
) -> Result<DtwOutcome> {
    dtw_traced(Algorithm::LeftPrune, s, t, band, ub, cb, &mut NoTrace)
}

/// Early abandoning pruned DTW: exact when the distance is at most `ub`.
pub fn ea_pruned_dtw(s: &Series, t: &Series, ub: Threshold) -> DtwOutcome {
    DtwOutcome::from_cost(run(
        Algorithm::EaPruned,
        s,
        t,
        Band::Unbounded,
        ub.value(),
        None,
        &mut RowBuffers::default(),
        &mut NoTrace,
    ))
}

/// Windowed [`ea_pruned_dtw`]. With a cumulative bound the threshold of row
/// `i` (1-based) becomes `ub - cb[min(i - 1 + w, len - 1)]`.
pub fn ea_pruned_dtw_windowed(
    s: &Series,
    t: &Series,
    band: Band,
    ub: Threshold,
    cb: Option<&CumulativeBound>,
) -> Result<DtwOutcome> {
    dtw_traced(Algorithm::EaPruned, s, t, band, ub, cb, &mut NoTrace)
}

/// Any kernel with a tracer attached. [`Algorithm::Full`] ignores `ub` and
/// `cb` and never abandons.
pub fn dtw_traced<T: Tracer>(
    algorithm: Algorithm,
    s: &Series,
    t: &Series,
    band: Band,
    ub: Threshold,
    cb: Option<&CumulativeBound>,
    tracer: &mut T,
) -> Result<DtwOutcome> {
    let cb = check_cb(cb, s, t)?;
    Ok(DtwOutcome::from_cost(run(
        algorithm,
        s,
        t,
        band,
        ub.value(),
        cb,
        &mut RowBuffers::default(),
        tracer,
    )))
}
