use alloc::vec::Vec;
use core::ops::Deref;

use crate::{Error, Result};

/// A non-empty sequence of finite samples.
#[derive(Debug, Clone, PartialEq)]
pub struct Series(Vec<f64>);

impl Series {
    pub fn new(samples: Vec<f64>) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::EmptySeries);
        }
        if let Some(index) = samples.iter().position(|x| !x.is_finite()) {
            return Err(Error::NonFiniteSample { index });
        }
        Ok(Self(samples))
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    /// The first `len` samples, or `None` when `len` is zero or too large.
    pub fn prefix(&self, len: usize) -> Option<Series> {
        (len >= 1 && len <= self.0.len()).then(|| Series(self.0[..len].to_vec()))
    }
}

impl Deref for Series {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl AsRef<[f64]> for Series {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

impl TryFrom<Vec<f64>> for Series {
    type Error = Error;

    fn try_from(samples: Vec<f64>) -> Result<Self> {
        Series::new(samples)
    }
}

impl TryFrom<&[f64]> for Series {
    type Error = Error;

    fn try_from(samples: &[f64]) -> Result<Self> {
        Series::new(samples.to_vec())
    }
}
