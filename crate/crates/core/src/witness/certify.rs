//! Independent re-derivation of a witness and its comparison with the
//! classifier's capacity bounds.

use thiserror::Error;

use super::reduce::{reduce_line, ReduceError};
use super::{steady_states_of, Witness};
use crate::classify::classify;
use crate::network::Network;
use crate::poly::RootError;
use crate::rational::sign;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedReport {
    pub steady_states: usize,
    pub nondegenerate: usize,
    pub stable: usize,
    pub continuum: bool,
}

impl CertifiedReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "steady_states": self.steady_states,
            "nondegenerate": self.nondegenerate,
            "stable": self.stable,
            "continuum": self.continuum,
        })
    }
}

#[derive(Debug, Error)]
pub enum CertifyError {
    #[error("recomputing the reduction failed: {0}")]
    Recompute(#[from] ReduceError),
    #[error(transparent)]
    Roots(#[from] RootError),
    #[error("witness disagrees with recomputation: {0}")]
    Mismatch(String),
    #[error("certified counts exceed the classifier's bounds: {0}")]
    ExceedsVerdict(String),
}

/// Recomputes the reduced system from the rates and class, checks it against
/// the full mass-action right-hand side, re-isolates its roots, and checks
/// the counts against the classification.
pub fn certify(net: &Network, w: &Witness) -> Result<CertifiedReport, CertifyError> {
    let mismatch = |m: &str| Err(CertifyError::Mismatch(m.to_string()));
    let red = reduce_line(net, &w.rates, &w.offsets)?;
    if red.domain != w.domain || red.pivot != w.pivot {
        return mismatch("class domain");
    }
    if !red.matches_full_system(net, &w.rates) {
        return mismatch("reduced polynomial is not the restricted mass-action system");
    }
    let (states, continuum) = steady_states_of(&red)?;
    if continuum != w.continuum || states != w.steady_states {
        return mismatch("steady states");
    }
    if continuum && (red.domain.is_empty() || !red.poly.is_zero()) {
        return mismatch("continuum on an empty class");
    }
    // a simple root changes the sign of the polynomial across its interval,
    // and the upper endpoint's sign is the sign of the derivative
    for s in &states {
        let (a, b) = (sign(&red.poly.eval(&s.interval.0)), sign(&red.poly.eval(&s.interval.1)));
        if s.nondegenerate {
            if a == 0 || a != -b {
                return mismatch("simple root without a sign change");
            }
            if s.stable != Some(red.direction_sign * b < 0) {
                return mismatch("stability");
            }
        } else if s.stable.is_some() {
            return mismatch("stability flag on a degenerate steady state");
        }
    }
    let report = CertifiedReport {
        steady_states: states.len(),
        nondegenerate: states.iter().filter(|s| s.nondegenerate).count(),
        stable: states.iter().filter(|s| s.stable == Some(true)).count(),
        continuum,
    };
    let v = classify(net);
    let too_many = |what: &str, n: usize, hi: u64| {
        Err(CertifyError::ExceedsVerdict(format!("{} {} steady states, capacity {}", n, what, hi)))
    };
    if continuum && v.pss_range().hi != u64::MAX {
        return Err(CertifyError::ExceedsVerdict(format!("continuum, but capacity is {}", v.cap_pss)));
    }
    if report.steady_states as u64 > v.pss_range().hi {
        return too_many("positive", report.steady_states, v.pss_range().hi);
    }
    if report.nondegenerate as u64 > v.npss_range().hi {
        return too_many("nondegenerate", report.nondegenerate, v.npss_range().hi);
    }
    if report.stable as u64 > v.stable_range().hi {
        return too_many("stable", report.stable, v.stable_range().hi);
    }
    Ok(report)
}
