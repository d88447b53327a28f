use alloc::vec;
use alloc::vec::Vec;

use super::{BestSoFar, RunningStats, SearchConfig};
use crate::kernels::CumulativeBound;
use crate::lower_bounds::{
    cumulative_into, descending_magnitude_order, keogh_into, kim_fl, Envelope, EnvelopeBuilder,
};
use crate::search::stats::znormalize_into;
use crate::{Error, Result};

/// Lower bound tier that rejected a candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LowerBoundTier {
    Kim,
    /// Candidate against the query's envelope.
    KeoghEq,
    /// Query against the candidate's envelope.
    KeoghEc,
}

#[derive(Debug, Clone, PartialEq)]
pub enum CascadeDecision {
    Prune(LowerBoundTier),
    /// Run DTW, tightening the threshold with this bound (all zeros when
    /// tightening is off).
    Compute(CumulativeBound),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Step {
    Prune(LowerBoundTier),
    /// `true` when `Cascade::cb` holds the bound to use.
    Compute(bool),
}

/// Per-candidate scratch space for the lower bound cascade.
#[derive(Debug, Clone)]
pub(crate) struct Cascade {
    pub(crate) candidate: Vec<f64>,
    pub(crate) cb: Vec<f64>,
    upper: Vec<f64>,
    lower: Vec<f64>,
    eq: Vec<f64>,
    ec: Vec<f64>,
    envelopes: EnvelopeBuilder,
}

/// What the cascade needs to know about the query.
pub(crate) struct QueryView<'a> {
    pub normalized: &'a [f64],
    pub upper: &'a [f64],
    pub lower: &'a [f64],
    pub order: &'a [usize],
    pub radius: usize,
}

impl Cascade {
    pub(crate) fn new(m: usize) -> Self {
        Self {
            candidate: vec![0.0; m],
            cb: vec![0.0; m],
            upper: vec![0.0; m],
            lower: vec![0.0; m],
            eq: vec![0.0; m],
            ec: vec![0.0; m],
            envelopes: EnvelopeBuilder::default(),
        }
    }

    /// Decides on the already normalized `self.candidate`. Tiers run in
    /// order; the first bound strictly above `bsf` prunes.
    pub(crate) fn decide(
        &mut self,
        query: &QueryView<'_>,
        bsf: f64,
        use_lower_bounds: bool,
        tighten: bool,
    ) -> Step {
        if !use_lower_bounds {
            return Step::Compute(false);
        }
        let qn = query.normalized;
        if kim_fl(qn, &self.candidate) > bsf {
            return Step::Prune(LowerBoundTier::Kim);
        }
        let (eq_total, _) = keogh_into(
            query.upper,
            query.lower,
            &self.candidate,
            Some(query.order),
            bsf,
            &mut self.eq,
        );
        if eq_total > bsf {
            return Step::Prune(LowerBoundTier::KeoghEq);
        }
        self.envelopes
            .build_into(&self.candidate, query.radius, &mut self.upper, &mut self.lower);
        let (ec_total, _) = keogh_into(&self.upper, &self.lower, qn, Some(query.order), bsf, &mut self.ec);
        if ec_total > bsf {
            return Step::Prune(LowerBoundTier::KeoghEc);
        }
        if !tighten {
            return Step::Compute(false);
        }
        let source = if ec_total >= eq_total { &self.ec } else { &self.eq };
        cumulative_into(source, &mut self.cb);
        Step::Compute(true)
    }
}

/// One cascade step for a raw candidate window.
///
/// `query_normalized` is the z-normalized query and `query_envelope` its
/// envelope for the configured window; `stats` must describe `candidate`.
pub fn cascade_decision(
    query_normalized: &[f64],
    query_envelope: &Envelope,
    candidate: &[f64],
    stats: &RunningStats,
    bsf: &BestSoFar,
    cfg: &SearchConfig,
) -> Result<CascadeDecision> {
    let m = query_normalized.len();
    for len in [candidate.len(), query_envelope.len(), stats.count()] {
        if len != m {
            return Err(Error::LengthMismatch { left: len, right: m });
        }
    }
    let radius = cfg.band().envelope_radius(m);
    if query_envelope.radius() != radius {
        return Err(Error::WindowMismatch {
            envelope: query_envelope.radius(),
            requested: radius,
        });
    }
    let mut cascade = Cascade::new(m);
    znormalize_into(candidate, stats, &mut cascade.candidate);
    let order = descending_magnitude_order(query_normalized);
    let view = QueryView {
        normalized: query_normalized,
        upper: query_envelope.upper(),
        lower: query_envelope.lower(),
        order: &order,
        radius,
    };
    let tighten = cfg.use_lower_bounds && cfg.tighten_ub;
    Ok(
        match cascade.decide(&view, bsf.distance_sq, cfg.use_lower_bounds, tighten) {
            Step::Prune(tier) => CascadeDecision::Prune(tier),
            Step::Compute(true) => CascadeDecision::Compute(CumulativeBound::from_trusted(cascade.cb)),
            Step::Compute(false) => CascadeDecision::Compute(CumulativeBound::from_trusted(vec![0.0; m])),
        },
    )
}
