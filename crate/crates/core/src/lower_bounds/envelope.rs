use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::Band;

/// Running max/min of a series over `[j - r, j + r]` (clamped to the series).
#[derive(Debug, Clone, PartialEq)]
pub struct Envelope {
    upper: Vec<f64>,
    lower: Vec<f64>,
    radius: usize,
}

impl Envelope {
    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    /// Radius after clamping to the series length.
    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.upper.len()
    }

    pub fn is_empty(&self) -> bool {
        self.upper.is_empty()
    }
}

/// Builds the envelope of `series` for the given band in `O(l)`.
pub fn compute_envelope(series: &[f64], band: Band) -> Envelope {
    let radius = band.envelope_radius(series.len());
    let mut upper = vec![0.0; series.len()];
    let mut lower = vec![0.0; series.len()];
    EnvelopeBuilder::default().build_into(series, radius, &mut upper, &mut lower);
    Envelope { upper, lower, radius }
}

/// Monotonic deque sweep with reusable queues.
#[derive(Debug, Default, Clone)]
pub(crate) struct EnvelopeBuilder {
    maxq: VecDeque<usize>,
    minq: VecDeque<usize>,
}

impl EnvelopeBuilder {
    pub(crate) fn build_into(&mut self, series: &[f64], radius: usize, upper: &mut [f64], lower: &mut [f64]) {
        let n = series.len();
        debug_assert!(upper.len() == n && lower.len() == n);
        let (maxq, minq) = (&mut self.maxq, &mut self.minq);
        maxq.clear();
        minq.clear();
        let mut next = 0;
        for i in 0..n {
            let hi = i.saturating_add(radius).min(n - 1);
            while next <= hi {
                let x = series[next];
                // front holds the extreme; values strictly ordered behind it
                while maxq.back().is_some_and(|&k| series[k] <= x) {
                    maxq.pop_back();
                }
                maxq.push_back(next);
                while minq.back().is_some_and(|&k| series[k] >= x) {
                    minq.pop_back();
                }
                minq.push_back(next);
                next += 1;
            }
            let lo = i.saturating_sub(radius);
            while maxq.front().is_some_and(|&k| k < lo) {
                maxq.pop_front();
            }
            while minq.front().is_some_and(|&k| k < lo) {
                minq.pop_front();
            }
            upper[i] = series[maxq[0]];
            lower[i] = series[minq[0]];
        }
    }
}
