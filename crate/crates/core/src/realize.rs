//! Nondegenerately multistationary networks of every size allowed by
//! `r + s >= 4` with `r >= 2`.

use crate::network::{default_names, Network, Reaction};
use crate::witness::{witness_perturbed, witness_two_reaction, Desired, Witness, WitnessError};
use crate::rational::q;

/// Positions of the core two-reaction network.
const CORE: [usize; 2] = [0, 1];

/// `None` when `r < 2` or `r + s < 4`.
///
/// One species: the `(r-1)`-alternating network on levels `0..r`. Otherwise
/// the bistable pair `A -> B`, `2A + B -> 3A`, then reactions parallel to it at
/// higher levels, then the remaining species as catalysts of the first
/// reaction.
pub fn network_of_size(r: usize, s: usize) -> Option<Network> {
    if r < 2 || s == 0 || r + s < 4 {
        return None;
    }
    if s == 1 {
        let reactions = (0..r as u32)
            .map(|m| Reaction::new(vec![m], vec![if m % 2 == 0 { m + 1 } else { m - 1 }]))
            .collect();
        return Network::new(default_names(1), reactions).ok();
    }
    let cplx = |a: u32, b: u32| {
        let mut c = vec![0; s];
        c[0] = a;
        c[1] = b;
        c
    };
    let mut first = Reaction::new(cplx(1, 0), cplx(0, 1));
    for i in 2..s {
        first.reactant.0[i] = 1;
        first.product.0[i] = 1;
    }
    let mut reactions = vec![first, Reaction::new(cplx(2, 1), cplx(3, 0))];
    for k in 1..=(r - 2) as u32 {
        reactions.push(Reaction::new(cplx(k + 2, k), cplx(k + 1, k + 1)));
    }
    Network::new(default_names(s), reactions).ok()
}

/// A certified witness with two nondegenerate steady states for
/// `network_of_size(r, s)`.
pub fn witness_of_size(net: &Network) -> Result<Witness, WitnessError> {
    let s = net.num_species();
    if s == 1 {
        return crate::witness::witness_one_species(net, 2, None);
    }
    let core = network_of_size(2, 2).expect("core pair");
    let base = witness_two_reaction(&core, Desired::TwoNondegenerate)?;
    // a point of the core class; catalysts sit at 1
    let red = crate::witness::reduce_line(&core, &base.rates, &base.offsets)?;
    let root = &base.steady_states[0].interval;
    let mut point = red.point_at(&((&root.0 + &root.1) / q(2)));
    point.resize(s, q(1));
    witness_perturbed(net, &CORE, &base.rates, &point, 2, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;
    use crate::witness::certify;

    #[test]
    fn sizes_below_the_bound_are_rejected() {
        assert!(network_of_size(1, 5).is_none());
        assert!(network_of_size(2, 1).is_none());
        assert!(network_of_size(3, 0).is_none());
    }

    #[test]
    fn small_sizes() {
        for (r, s) in [(3, 1), (2, 2), (2, 3), (3, 2), (4, 4)] {
            let n = network_of_size(r, s).unwrap();
            assert_eq!((n.num_reactions(), n.num_species()), (r, s));
            assert_eq!(classify(&n).nondegenerately_multistationary(), Some(true), "{}", n);
            let w = witness_of_size(&n).unwrap();
            assert!(certify(&n, &w).unwrap().nondegenerate >= 2);
        }
    }
}
