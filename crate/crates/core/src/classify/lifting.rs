//! Lower bounds inherited from smaller networks.

use std::collections::BTreeSet;

use serde_json::json;

use super::one_species::max_alternating;
use super::{detect_shape, Context, Range, Shape, VerdictBuilder};
use crate::linalg::rank_int;
use crate::network::{embedded_network, Removal};

/// Subnetworks with more reactions than this are not searched.
pub const SUBNETWORK_SEARCH_LIMIT: usize = 12;

/// With a one-dimensional stoichiometric subspace, the steady states of the
/// one-species restriction to any species that moves survive in a class
/// where every other species is abundant. Bounds carry over from there.
pub(crate) fn species_lifting(ctx: &Context, mut b: VerdictBuilder) -> VerdictBuilder {
    let net = ctx.net;
    let vectors = net.reaction_vectors();
    let mut best: Option<(usize, u64, u64)> = None;
    for i in 0..net.num_species() {
        if vectors.iter().all(|v| v[i] == 0) {
            continue;
        }
        let removal = Removal { reactions: BTreeSet::new(), species: (0..net.num_species()).filter(|&j| j != i).collect() };
        let Some(restricted) = embedded_network(net, &removal) else {
            continue;
        };
        let alt = max_alternating(&restricted).expect("restriction has one species");
        let (npss, stable) = (alt.t as u64, alt.stable_lower_bound());
        if best.is_none_or(|(_, n, s)| (npss, stable) > (n, s)) {
            best = Some((i, npss, stable));
        }
    }
    if let Some((i, npss, stable)) = best {
        if npss > b.npss.lo || stable > b.stable.lo {
            b = b.with(Range::UNKNOWN, Range::at_least(npss), Range::at_least(stable)).cite(
                "species-lifting",
                json!({"species": net.species()[i], "nondegenerate": npss, "stable": stable}),
            );
        }
    }
    b
}

/// Subnetworks with the same stoichiometric subspace pass their
/// nondegenerate and stable lower bounds to the whole network.
pub(crate) fn subnetwork_lifting(ctx: &Context, mut b: VerdictBuilder) -> VerdictBuilder {
    let net = ctx.net;
    let r = net.num_reactions();
    if r > SUBNETWORK_SEARCH_LIMIT {
        return b;
    }
    let vectors = net.reaction_vectors();
    let full = ctx.structure.subspace_dim;
    let mut best: Option<(Vec<usize>, u64, u64)> = None;
    for mask in 1u32..(1 << r) - 1 {
        let keep: Vec<usize> = (0..r).filter(|k| mask >> k & 1 == 1).collect();
        let vs: Vec<Vec<i64>> = keep.iter().map(|&k| vectors[k].clone()).collect();
        if rank_int(&vs) != full {
            continue;
        }
        let sub = net.subnetwork(&keep).expect("nonempty subnetwork of a valid network");
        if detect_shape(&sub) == Shape::OutOfScope {
            continue;
        }
        let v = super::classify(&sub);
        let (npss, stable) = (v.npss_range().lo, v.stable_range().lo);
        if best.as_ref().is_none_or(|(_, n, s)| (npss, stable) > (*n, *s)) {
            best = Some((keep, npss, stable));
        }
    }
    if let Some((keep, npss, stable)) = best {
        if npss > 0 || stable > 0 {
            b = b.with(Range::UNKNOWN, Range::at_least(npss), Range::at_least(stable)).cite(
                "subnetwork-lifting",
                json!({
                    "subnetwork": keep.iter().map(|&k| net.reaction_to_string(k)).collect::<Vec<_>>(),
                    "nondegenerate": npss,
                    "stable": stable,
                }),
            );
        }
    }
    b
}
