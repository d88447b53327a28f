use alloc::vec;
use alloc::vec::Vec;

/// Below this standard deviation a window is treated as constant.
pub const DEGENERATE_STD: f64 = 1e-12;

/// Sum and sum of squares over a fixed-length sliding window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunningStats {
    sum: f64,
    sum_sq: f64,
    count: usize,
}

impl RunningStats {
    pub fn from_window(window: &[f64]) -> Self {
        let (sum, sum_sq) = window.iter().fold((0.0, 0.0), |(s, sq), &x| (s + x, sq + x * x));
        Self {
            sum,
            sum_sq,
            count: window.len(),
        }
    }

    /// Moves the window one step: `outgoing` leaves, `incoming` enters.
    #[inline]
    pub fn slide(&mut self, outgoing: f64, incoming: f64) {
        self.sum += incoming - outgoing;
        self.sum_sq += incoming * incoming - outgoing * outgoing;
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn sum(&self) -> f64 {
        self.sum
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.sum_sq
    }

    #[inline]
    pub fn mean(&self) -> f64 {
        self.sum / self.count as f64
    }

    /// Population standard deviation; the variance is floored at zero.
    #[inline]
    pub fn std_dev(&self) -> f64 {
        let mean = self.mean();
        let var = self.sum_sq / self.count as f64 - mean * mean;
        libm::sqrt(var.max(0.0))
    }
}

/// `(x - mean) / std` over the window; all zeros for a constant window.
pub fn znormalize(window: &[f64], stats: &RunningStats) -> Vec<f64> {
    let mut out = vec![0.0; window.len()];
    znormalize_into(window, stats, &mut out);
    out
}

pub(crate) fn znormalize_into(window: &[f64], stats: &RunningStats, out: &mut [f64]) {
    let mean = stats.mean();
    let sd = stats.std_dev();
    if sd < DEGENERATE_STD {
        out.fill(0.0);
    } else {
        for (o, &x) in out.iter_mut().zip(window) {
            *o = (x - mean) / sd;
        }
    }
}
