//! Exact dynamic time warping with pruning and early abandoning.
//!
//! The crate is `no_std` (it needs `alloc`) and contains the whole algorithmic
//! side of the project:
//!
//! * [`kernels`]: three tiers of exact DTW kernels (full scan, pruning from the
//!   left, and early abandoning pruned DTW), all in `O(min(l_S, l_T))` space,
//!   with an optional Sakoe-Chiba band and per-row threshold tightening.
//! * [`lower_bounds`]: `LB_Kim` (first/last), `LB_Keogh` with its envelope, and
//!   the reverse cumulative bound used to tighten a kernel's threshold.
//! * [`search`]: a subsequence nearest neighbour scan in the style of the UCR
//!   suite, with streaming z-normalization and a three tier lower bound
//!   cascade.
//!
//! ```
//! use eapdtw_core::{kernels, Series, Threshold};
//!
//! let s = Series::new(vec![3.0, 1.0, 4.0, 4.0, 1.0, 1.0]).unwrap();
//! let t = Series::new(vec![1.0, 3.0, 2.0, 1.0, 2.0, 2.0]).unwrap();
//! assert_eq!(kernels::dtw_full(&s, &t), 9.0);
//! assert!(kernels::ea_pruned_dtw(&s, &t, Threshold::new(6.0).unwrap()).is_pruned());
//! ```
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod band;
mod error;
mod series;

pub mod kernels;
pub mod lower_bounds;
pub mod search;

pub use band::Band;
pub use error::{Error, Result};
pub use kernels::{Algorithm, CumulativeBound, DtwOutcome, Threshold};
pub use series::Series;
