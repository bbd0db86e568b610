//! Rate constants and compatibility classes that realize steady-state
//! counts, checked by exact root isolation.

pub mod certify;
pub mod construct;
pub mod reduce;
pub mod sample;

use serde_json::{json, Value};
use thiserror::Error;

use crate::network::Network;
use crate::poly::{isolate_positive_roots, Domain, RootError};
use crate::rational::{fmt_q, Q};

pub use certify::{certify, CertifiedReport, CertifyError};
pub use construct::{
    build_witness, prescribe_roots_one_species, witness_degenerate, witness_lifted, witness_one_species, witness_perturbed,
    witness_two_reaction, Desired,
};
pub use reduce::{reduce_line, reduce_one_species, reduce_two_reaction, ReduceError, ReducedSystem};
pub use sample::{count_steady_states, SteadyStateCount};

pub const DEFAULT_SEARCH_BUDGET: u64 = 100_000;

/// Candidate evaluations allowed per search, from `CRNMS_SEARCH_BUDGET`.
pub fn search_budget() -> u64 {
    std::env::var("CRNMS_SEARCH_BUDGET").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_SEARCH_BUDGET)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteadyState {
    /// Isolating interval of the pivot coordinate.
    pub interval: (Q, Q),
    pub point_intervals: Vec<(Q, Q)>,
    pub multiplicity: usize,
    pub nondegenerate: bool,
    /// `None` for degenerate steady states.
    pub stable: Option<bool>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub rates: Vec<Q>,
    /// Class offsets relative to the pivot species.
    pub offsets: Vec<Q>,
    pub pivot: usize,
    pub domain: Domain,
    pub steady_states: Vec<SteadyState>,
    /// Every point of the domain is a steady state.
    pub continuum: bool,
    pub construction: &'static str,
    /// Conserved quantity for two species, `v_1 x_2 - v_2 x_1`.
    pub invariant: Option<Q>,
}

#[derive(Debug, Error)]
pub enum WitnessError {
    #[error(transparent)]
    Reduce(#[from] ReduceError),
    #[error("refused: {reason} (case {case}, {criterion})")]
    Refused { reason: String, case: String, criterion: String },
    #[error("search budget of {budget} evaluations exhausted: {detail}")]
    BudgetExhausted { budget: u64, detail: String },
    #[error("no sign-feasible coefficient vector for the requested roots")]
    SignInfeasible,
    #[error("network is out of scope for witness construction")]
    OutOfScope,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("certification failed: {0}")]
    Certify(#[from] CertifyError),
}

impl Witness {
    /// Isolates the roots of a reduced system and records them.
    pub fn from_reduction(
        net: &Network,
        rates: Vec<Q>,
        red: &ReducedSystem,
        construction: &'static str,
    ) -> Result<Witness, RootError> {
        let (steady_states, continuum) = steady_states_of(red)?;
        let invariant = (net.num_species() == 2).then(|| {
            let p = red.point_at(&Q::from_integer(0.into()));
            crate::rational::q(red.direction[0]) * &p[1] - crate::rational::q(red.direction[1]) * &p[0]
        });
        Ok(Witness {
            rates,
            offsets: red.offsets.clone(),
            pivot: red.pivot,
            domain: red.domain.clone(),
            steady_states,
            continuum,
            construction,
            invariant,
        })
    }

    pub fn nondegenerate_count(&self) -> usize {
        self.steady_states.iter().filter(|s| s.nondegenerate).count()
    }

    pub fn stable_count(&self) -> usize {
        self.steady_states.iter().filter(|s| s.stable == Some(true)).count()
    }

    pub fn to_json(&self, net: &Network) -> Value {
        let rates: serde_json::Map<String, Value> =
            self.rates.iter().enumerate().map(|(k, r)| (format!("r{}", k), json!(fmt_q(r)))).collect();
        let class = match (net.num_species(), &self.invariant) {
            (1, _) => Value::Null,
            (2, Some(t)) => json!({"T": fmt_q(t)}),
            _ => json!({"c": self.offsets.iter().map(fmt_q).collect::<Vec<_>>()}),
        };
        let pair = |(a, b): &(Q, Q)| json!([fmt_q(a), fmt_q(b)]);
        json!({
            "rates": rates,
            "class": class,
            "pivot": net.species()[self.pivot],
            "domain": [fmt_q(&self.domain.lo), self.domain.hi.as_ref().map_or(json!("inf"), |h| json!(fmt_q(h)))],
            "continuum": self.continuum,
            "construction": self.construction,
            "steady_states": self.steady_states.iter().map(|s| json!({
                "interval": pair(&s.interval),
                "point_intervals": s.point_intervals.iter().map(pair).collect::<Vec<_>>(),
                "multiplicity": s.multiplicity,
                "nondegenerate": s.nondegenerate,
                "stable": s.stable,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn to_human(&self, net: &Network) -> String {
        let mut s = String::new();
        s.push_str(&format!("construction: {}\n", self.construction));
        for (k, r) in self.rates.iter().enumerate() {
            s.push_str(&format!("  k{} = {}    ({})\n", k, fmt_q(r), net.reaction_to_string(k)));
        }
        match (net.num_species(), &self.invariant) {
            (1, _) => {}
            (2, Some(t)) => s.push_str(&format!("class: T = {}\n", fmt_q(t))),
            _ => {
                let p = &net.species()[self.pivot];
                let slopes = reduce::line_frame(net).map(|f| f.slopes).unwrap_or_default();
                for (i, (c, g)) in self.offsets.iter().zip(&slopes).enumerate() {
                    if i != self.pivot {
                        s.push_str(&format!("class: {} = {} + ({}) {}\n", net.species()[i], fmt_q(c), fmt_q(g), p));
                    }
                }
            }
        }
        let hi = self.domain.hi.as_ref().map_or("inf".to_string(), fmt_q);
        s.push_str(&format!("domain of {}: ({}, {})\n", net.species()[self.pivot], fmt_q(&self.domain.lo), hi));
        if self.continuum {
            s.push_str("every point of the domain is a (degenerate) steady state\n");
        }
        for st in &self.steady_states {
            let stab = match st.stable {
                Some(true) => "stable",
                Some(false) => "unstable",
                None => "degenerate",
            };
            s.push_str(&format!(
                "  steady state with {} in ({}, {}): multiplicity {}, {}\n",
                net.species()[self.pivot],
                fmt_q(&st.interval.0),
                fmt_q(&st.interval.1),
                st.multiplicity,
                stab
            ));
        }
        s
    }
}

/// Steady states of a reduced system in its domain; `true` for a continuum.
pub fn steady_states_of(red: &ReducedSystem) -> Result<(Vec<SteadyState>, bool), RootError> {
    if red.domain.is_empty() {
        return Ok((Vec::new(), false));
    }
    if red.poly.is_zero() {
        return Ok((Vec::new(), true));
    }
    let roots = isolate_positive_roots(&red.poly, &red.domain)?;
    let states = roots
        .into_iter()
        .map(|r| {
            let nondegenerate = r.multiplicity == 1;
            SteadyState {
                point_intervals: red.point_intervals(&r.lo, &r.hi),
                interval: (r.lo, r.hi),
                multiplicity: r.multiplicity,
                nondegenerate,
                stable: nondegenerate.then_some(red.direction_sign * r.derivative_sign < 0),
            }
        })
        .collect();
    Ok((states, false))
}
