//! One reversible pair plus one irreversible reaction, and two reversible
//! pairs.

use std::collections::BTreeSet;

use serde_json::json;

use super::one_species::is_alternating_network;
use super::{CaseLabel, ClassifyError, Context, Range, Verdict, VerdictBuilder};
use crate::linalg::scalar_multiple;
use crate::network::{embedded_network, Network, Reaction, Removal};

/// Reversible pair `y <-> y'` and irreversible `z -> z'`, with the pair
/// oriented so that `y' - y` is a negative multiple of `z' - z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RevIrrevData {
    pub y: Vec<i64>,
    pub y_prime: Vec<i64>,
    pub z: Vec<i64>,
    pub z_prime: Vec<i64>,
    /// `(y' - y) * (z - y)` after orientation; `None` when inconsistent.
    pub beta: Option<Vec<i64>>,
}

fn as_i64(r: &Reaction) -> (Vec<i64>, Vec<i64>) {
    (r.reactant.0.iter().map(|&x| x as i64).collect(), r.product.0.iter().map(|&x| x as i64).collect())
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn split_rev_irrev(net: &Network) -> Result<(usize, usize), ClassifyError> {
    let pairs = net.pair_list();
    if net.num_reactions() != 3 || pairs.len() != 1 {
        return Err(ClassifyError::WrongShape("expected one reversible pair and one irreversible reaction".into()));
    }
    let (p, _) = pairs[0];
    let k = net.irreversible()[0];
    Ok((p, k))
}

pub fn rev_irrev_data(net: &Network) -> Result<RevIrrevData, ClassifyError> {
    let (p, k) = split_rev_irrev(net)?;
    let (mut y, mut y_prime) = as_i64(&net.reactions()[p]);
    let (z, z_prime) = as_i64(&net.reactions()[k]);
    let w = sub(&z_prime, &z);
    let c = scalar_multiple(&sub(&y_prime, &y), &w);
    let beta = c.map(|c| {
        if c > num_traits::Zero::zero() {
            std::mem::swap(&mut y, &mut y_prime);
        }
        let v = sub(&y_prime, &y);
        let d = sub(&z, &y);
        v.iter().zip(&d).map(|(a, b)| a * b).collect()
    });
    Ok(RevIrrevData { y, y_prime, z, z_prime, beta })
}

/// The irreversible reactant lies strictly beyond both pair complexes in
/// some coordinate, in the direction the irreversible reaction moves.
fn interleaving_condition(d: &RevIrrevData) -> bool {
    (0..d.y.len()).any(|i| {
        let lo = d.y[i].min(d.y_prime[i]);
        let hi = d.y[i].max(d.y_prime[i]);
        (hi < d.z[i] && d.z[i] < d.z_prime[i]) || (d.z_prime[i] < d.z[i] && d.z[i] < lo)
    })
}

fn restriction(net: &Network, i: usize) -> Option<Network> {
    let removal = Removal { reactions: BTreeSet::new(), species: (0..net.num_species()).filter(|&j| j != i).collect() };
    embedded_network(net, &removal)
}

/// Species whose one-species restriction keeps every reaction and
/// alternates `alternations` times.
fn alternating_restrictions(net: &Network, alternations: usize) -> Vec<usize> {
    (0..net.num_species())
        .filter(|&i| {
            restriction(net, i).is_some_and(|n| {
                n.num_reactions() == alternations + 1 && is_alternating_network(&n)
            })
        })
        .collect()
}

pub(crate) fn classify_one_rev_one_irrev_ctx(ctx: &Context) -> VerdictBuilder {
    let d = rev_irrev_data(ctx.net).expect("dispatcher checked the shape");
    let case = CaseLabel::ReversibleIrreversible;
    let Some(beta) = &d.beta else {
        return VerdictBuilder::zero(case).cite("consistency", ctx.consistency.to_json());
    };
    let by_sign = beta.iter().any(|&b| b < 0);
    let by_levels = interleaving_condition(&d);
    let species = alternating_restrictions(ctx.net, 2);
    assert_eq!(by_sign, by_levels, "reversible-irreversible criteria disagree on {}", ctx.net);
    assert_eq!(by_sign, !species.is_empty(), "restriction criterion disagrees on {}", ctx.net);
    let data = json!({
        "beta": beta,
        "negative_entry": by_sign,
        "strict_level_order": by_levels,
        "alternating_species": species.iter().map(|&i| ctx.net.species()[i].clone()).collect::<Vec<_>>(),
    });
    let b = if by_sign {
        VerdictBuilder::new(case).with(Range::at_least(2), Range::at_least(2), Range::UNKNOWN)
    } else {
        VerdictBuilder::new(case).with(Range::at_most(1), Range::UNKNOWN, Range::UNKNOWN)
    };
    b.cite("reversible-irreversible", data)
}

pub fn classify_one_rev_one_irrev(net: &Network) -> Result<Verdict, ClassifyError> {
    split_rev_irrev(net)?;
    Ok(super::classify(net))
}

/// For two reversible pairs: one pair's complexes lie strictly below the
/// other's in some coordinate.
fn separated_pairs(net: &Network) -> Option<Vec<usize>> {
    let pairs = net.pair_list();
    let rs = net.reactions();
    let (a, b) = (&rs[pairs[0].0], &rs[pairs[1].0]);
    let v = a.vector();
    scalar_multiple(&v, &b.vector())?;
    Some(
        (0..net.num_species())
            .filter(|&i| {
                let (a0, a1) = (a.reactant.get(i).min(a.product.get(i)), a.reactant.get(i).max(a.product.get(i)));
                let (b0, b1) = (b.reactant.get(i).min(b.product.get(i)), b.reactant.get(i).max(b.product.get(i)));
                (a0 < a1 && a1 < b0 && b0 < b1) || (b0 < b1 && b1 < a0 && a0 < a1)
            })
            .collect(),
    )
}

pub(crate) fn classify_two_rev_ctx(ctx: &Context) -> VerdictBuilder {
    let case = CaseLabel::TwoReversible;
    let Some(separated) = separated_pairs(ctx.net) else {
        return VerdictBuilder::new(case)
            .with(Range::at_most(1), Range::UNKNOWN, Range::UNKNOWN)
            .cite("two-reversible", json!({"parallel": false}));
    };
    let species = alternating_restrictions(ctx.net, 3);
    assert_eq!(separated, species, "two-reversible criteria disagree on {}", ctx.net);
    let names: Vec<String> = separated.iter().map(|&i| ctx.net.species()[i].clone()).collect();
    let b = if separated.is_empty() {
        VerdictBuilder::new(case).with(Range::at_most(1), Range::UNKNOWN, Range::UNKNOWN)
    } else {
        VerdictBuilder::new(case).with(Range::at_least(2), Range::at_least(2), Range::UNKNOWN)
    };
    b.cite("two-reversible", json!({"parallel": true, "separating_species": names}))
}

pub fn classify_two_rev(net: &Network) -> Result<Verdict, ClassifyError> {
    if net.num_reactions() != 4 || net.pair_list().len() != 2 {
        return Err(ClassifyError::WrongShape("expected two reversible pairs".into()));
    }
    Ok(super::classify(net))
}
