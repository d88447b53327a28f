use crate::{Error, Result};

/// Sakoe-Chiba warping window: the path may deviate at most `w` cells from
/// the diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Band {
    #[default]
    Unbounded,
    Cells(usize),
}

impl Band {
    /// `floor(ratio * len)` cells.
    pub fn from_ratio(ratio: f64, len: usize) -> Result<Band> {
        if !(0.0..=1.0).contains(&ratio) {
            return Err(Error::InvalidWindowRatio(ratio));
        }
        Ok(Band::Cells(libm::floor(ratio * len as f64) as usize))
    }

    /// Effective radius for a pair of series, `None` meaning no constraint.
    ///
    /// A window at least as wide as the shorter series behaves exactly like an
    /// unbounded one.
    pub(crate) fn resolve(self, len_a: usize, len_b: usize) -> Option<usize> {
        match self {
            Band::Unbounded => None,
            Band::Cells(w) if w >= len_a.min(len_b) => None,
            Band::Cells(w) => Some(w),
        }
    }

    /// Radius of an envelope over a series of length `len`; anything past
    /// `len - 1` covers the whole series.
    pub(crate) fn envelope_radius(self, len: usize) -> usize {
        let full = len.saturating_sub(1);
        match self {
            Band::Unbounded => full,
            Band::Cells(w) => w.min(full),
        }
    }
}
