//! Lower bounds on windowed DTW.
//!
//! `LB_Kim` here is the first/last point variant: both extremities are always
//! aligned, so their costs are part of every warping path. It is the variant
//! that stays meaningful on z-normalized data.
//!
//! `LB_Keogh` measures how far a candidate leaves the envelope of the other
//! series; each position contributes independently, which is what makes the
//! reverse cumulative sum of contributions usable as a per-row floor on the
//! remaining DTW cost.

mod envelope;

use alloc::vec;
use alloc::vec::Vec;

pub(crate) use envelope::EnvelopeBuilder;
pub use envelope::{compute_envelope, Envelope};

use crate::kernels::{squared_cost, CumulativeBound};
use crate::{Band, Error, Result};

/// Per-position `LB_Keogh` contributions and their sum.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundResult {
    pub total: f64,
    /// One entry per position, in natural order. Positions not visited before
    /// an abandon are zero.
    pub contributions: Vec<f64>,
    /// Accumulation stopped once the running total exceeded the caller's
    /// limit; `total` is then a partial sum.
    pub abandoned: bool,
}

/// `cost(q[0], c[0]) + cost(q[l-1], c[l-1])`; a single cost for length one.
pub fn lb_kim_fl(query: &[f64], candidate: &[f64]) -> Result<f64> {
    if query.len() != candidate.len() {
        return Err(Error::LengthMismatch {
            left: query.len(),
            right: candidate.len(),
        });
    }
    Ok(kim_fl(query, candidate))
}

#[inline]
pub(crate) fn kim_fl(query: &[f64], candidate: &[f64]) -> f64 {
    let n = query.len();
    if n == 0 {
        return 0.0;
    }
    let first = squared_cost(query[0], candidate[0]);
    if n == 1 {
        first
    } else {
        first + squared_cost(query[n - 1], candidate[n - 1])
    }
}

/// `LB_Keogh` of `candidate` against `envelope`, built for `band`.
pub fn lb_keogh(envelope: &Envelope, candidate: &[f64], band: Band) -> Result<BoundResult> {
    lb_keogh_abandoning(envelope, candidate, band, None, f64::INFINITY)
}

/// `LB_Keogh` that visits positions in `order` (natural order when `None`)
/// and stops as soon as the running total strictly exceeds `abandon_above`.
///
/// A completed run reports the natural-order sum of its contributions, so the
/// visiting order never changes the value of a completed bound.
pub fn lb_keogh_abandoning(
    envelope: &Envelope,
    candidate: &[f64],
    band: Band,
    order: Option<&[usize]>,
    abandon_above: f64,
) -> Result<BoundResult> {
    let n = candidate.len();
    if envelope.len() != n {
        return Err(Error::LengthMismatch {
            left: envelope.len(),
            right: n,
        });
    }
    let requested = band.envelope_radius(n);
    if envelope.radius() != requested {
        return Err(Error::WindowMismatch {
            envelope: envelope.radius(),
            requested,
        });
    }
    if let Some(order) = order {
        check_permutation(order, n)?;
    }
    let mut contributions = vec![0.0; n];
    let (total, abandoned) = keogh_into(
        envelope.upper(),
        envelope.lower(),
        candidate,
        order,
        abandon_above,
        &mut contributions,
    );
    Ok(BoundResult {
        total,
        contributions,
        abandoned,
    })
}

fn check_permutation(order: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if order.len() != n {
        return Err(Error::InvalidOrder { len: n });
    }
    for &k in order {
        match seen.get_mut(k) {
            Some(s) if !*s => *s = true,
            _ => return Err(Error::InvalidOrder { len: n }),
        }
    }
    Ok(())
}

#[inline]
fn contribution(x: f64, upper: f64, lower: f64) -> f64 {
    if x > upper {
        squared_cost(x, upper)
    } else if x < lower {
        squared_cost(lower, x)
    } else {
        0.0
    }
}

/// Fills `out` with contributions; returns `(total, abandoned)`.
pub(crate) fn keogh_into(
    upper: &[f64],
    lower: &[f64],
    candidate: &[f64],
    order: Option<&[usize]>,
    abandon_above: f64,
    out: &mut [f64],
) -> (f64, bool) {
    out.fill(0.0);
    let mut running = 0.0;
    let mut visit = |k: usize| {
        let c = contribution(candidate[k], upper[k], lower[k]);
        out[k] = c;
        running += c;
        running > abandon_above
    };
    let abandoned = match order {
        Some(order) => order.iter().any(|&k| visit(k)),
        None => (0..candidate.len()).any(visit),
    };
    if abandoned {
        (running, true)
    } else {
        (out.iter().sum(), false)
    }
}

/// Reverse cumulative sum excluding the current position:
/// `cb[k] = sum(contributions[k + 1..])`.
pub fn cumulative_bound(contributions: &[f64]) -> Result<CumulativeBound> {
    if contributions.is_empty() {
        return Err(Error::InvalidCumulativeBound("empty"));
    }
    if let Some(index) = contributions.iter().position(|c| !c.is_finite() || *c < 0.0) {
        return Err(Error::InvalidContribution { index });
    }
    let mut cb = vec![0.0; contributions.len()];
    cumulative_into(contributions, &mut cb);
    Ok(CumulativeBound::from_trusted(cb))
}

pub(crate) fn cumulative_into(contributions: &[f64], out: &mut [f64]) {
    let n = contributions.len();
    out[n - 1] = 0.0;
    for k in (0..n - 1).rev() {
        out[k] = out[k + 1] + contributions[k + 1];
    }
}

/// Positions sorted by decreasing magnitude, ties by position. On a
/// z-normalized query these are the positions most likely to produce large
/// contributions first.
pub fn descending_magnitude_order(values: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[b].abs().total_cmp(&values[a].abs()).then(a.cmp(&b)));
    order
}

#[cfg(test)]
mod tests;
