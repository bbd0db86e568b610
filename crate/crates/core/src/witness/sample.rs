//! Steady-state counts at arbitrary rates and classes.

use super::reduce::line_frame;
use super::{steady_states_of, ReduceError};
use crate::linalg::rank_int;
use crate::network::Network;
use crate::rational::Q;
use crate::structure::is_consistent;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SteadyStateCount {
    Finite { distinct: usize, nondegenerate: usize },
    Continuum,
}

/// Positive steady states in the class through `point` at the given rates.
/// Inconsistent networks have none anywhere; otherwise the stoichiometric
/// subspace must be a line.
pub fn count_steady_states(net: &Network, rates: &[Q], point: &[Q]) -> Result<SteadyStateCount, ReduceError> {
    if !is_consistent(net).consistent {
        return Ok(SteadyStateCount::Finite { distinct: 0, nondegenerate: 0 });
    }
    let dim = rank_int(&net.reaction_vectors());
    if dim != 1 {
        return Err(ReduceError::NotALine(dim));
    }
    let frame = line_frame(net)?;
    let red = super::reduce_line(net, rates, &frame.offsets_through(point))?;
    let (states, continuum) = steady_states_of(&red).expect("zero polynomial is reported as a continuum");
    Ok(if continuum {
        SteadyStateCount::Continuum
    } else {
        SteadyStateCount::Finite {
            distinct: states.len(),
            nondegenerate: states.iter().filter(|s| s.nondegenerate).count(),
        }
    })
}
