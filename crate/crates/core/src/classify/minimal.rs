//! Embedding-minimal nondegenerately multistationary networks.

use std::fmt;

use super::one_species::is_alternating_network;
use super::two_reaction::{beta, box_geometry, three_species_minimal_form};
use super::{classify, detect_shape, ClassifyError, Shape};
use crate::network::{enumerate_embedded, Network, Removal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MinimalFamily {
    /// One species, three reactions alternating in direction.
    OneSpeciesTwoAlternating,
    /// Two species, two reactions, nondegenerately multistationary.
    TwoSpeciesTwoReactions,
    /// Three species, two reactions, every two-species restriction fails.
    ThreeSpeciesTwoReactions,
}

impl fmt::Display for MinimalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MinimalFamily::OneSpeciesTwoAlternating => "one species, 2-alternating",
            MinimalFamily::TwoSpeciesTwoReactions => "two species, two reactions",
            MinimalFamily::ThreeSpeciesTwoReactions => "three species, two reactions",
        })
    }
}

#[derive(Clone, Debug)]
pub struct MinimalityReport {
    /// Decided by classifying every embedded network.
    pub minimal: bool,
    /// An embedded network that is already nondegenerately multistationary.
    pub smaller: Option<(Network, Removal)>,
    /// Family membership read off the network's own data.
    pub family: Option<MinimalFamily>,
}

/// Which closed-form family the network belongs to, if any.
pub fn closed_form_family(net: &Network) -> Option<MinimalFamily> {
    let (s, r) = (net.num_species(), net.num_reactions());
    if s == 1 {
        return (r == 3 && is_alternating_network(net)).then_some(MinimalFamily::OneSpeciesTwoAlternating);
    }
    if r != 2 {
        return None;
    }
    let b = beta(net).ok()?;
    match s {
        2 => {
            let g = box_geometry(net, 0, 1)?;
            (b.consistent() && g.form.is_zigzag() && !g.slope_minus_one()).then_some(MinimalFamily::TwoSpeciesTwoReactions)
        }
        3 => three_species_minimal_form(&b).then_some(MinimalFamily::ThreeSpeciesTwoReactions),
        _ => None,
    }
}

pub fn is_embedding_minimal(net: &Network) -> Result<MinimalityReport, ClassifyError> {
    if detect_shape(net) == Shape::OutOfScope {
        return Err(ClassifyError::WrongShape("minimality is only decided for in-scope shapes".into()));
    }
    if classify(net).nondegenerately_multistationary() != Some(true) {
        return Err(ClassifyError::NotMultistationary(net.to_string()));
    }
    let mut smaller = None;
    for (sub, removal) in enumerate_embedded(net) {
        match classify(&sub).nondegenerately_multistationary() {
            Some(true) => {
                smaller = Some((sub, removal));
                break;
            }
            Some(false) => {}
            None => {
                return Err(ClassifyError::WrongShape(format!("embedded network {} is undecided", sub)));
            }
        }
    }
    Ok(MinimalityReport { minimal: smaller.is_none(), smaller, family: closed_form_family(net) })
}
