//! Exhaustive enumeration of small networks of a given shape, one
//! representative per species relabeling.

use super::Shape;
use crate::network::{default_names, Network, Reaction};

/// Sorted reaction list, minimized over all relabelings of the species.
pub fn canonical_reactions(reactions: &[Reaction], s: usize) -> Vec<(Vec<u32>, Vec<u32>)> {
    let mut best: Option<Vec<(Vec<u32>, Vec<u32>)>> = None;
    for perm in permutations(s) {
        let mut key: Vec<(Vec<u32>, Vec<u32>)> = reactions
            .iter()
            .map(|r| (perm.iter().map(|&i| r.reactant.get(i)).collect(), perm.iter().map(|&i| r.product.get(i)).collect()))
            .collect();
        key.sort();
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    }
    best.unwrap_or_default()
}

fn sorted_key(reactions: &[Reaction]) -> Vec<(Vec<u32>, Vec<u32>)> {
    let mut key: Vec<_> = reactions.iter().map(|r| (r.reactant.0.clone(), r.product.0.clone())).collect();
    key.sort();
    key
}

/// Same answer as comparing with `canonical_reactions`, but stops at the
/// first relabeling that gives a smaller key.
pub fn is_canonical(reactions: &[Reaction], s: usize) -> bool {
    let own = sorted_key(reactions);
    let mut key = own.clone();
    for_each_permutation(s, &mut |perm| {
        for (slot, r) in key.iter_mut().zip(reactions) {
            slot.0.clear();
            slot.0.extend(perm.iter().map(|&i| r.reactant.get(i)));
            slot.1.clear();
            slot.1.extend(perm.iter().map(|&i| r.product.get(i)));
        }
        key.sort();
        key >= own
    })
}

/// Heap's algorithm; `f` returns false to stop. Returns false if stopped.
fn for_each_permutation(n: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    if !f(&perm) {
        return false;
    }
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            if !f(&perm) {
                return false;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    true
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// All complexes over `s` species with total coefficient at most `max`, in
/// graded lexicographic order.
pub fn complexes(s: usize, max: u32) -> Vec<Vec<u32>> {
    fn rec(s: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == s {
            out.push(cur.clone());
            return;
        }
        for c in 0..=left {
            cur.push(c);
            rec(s, left - c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(s, max, &mut Vec::new(), &mut out);
    out.sort_by_key(|c| (c.iter().sum::<u32>(), c.clone()));
    out
}

/// Enumeration request. `max_reactions` only matters for one species.
#[derive(Clone, Copy, Debug)]
pub struct EnumerationSpec {
    pub shape: Shape,
    pub species: usize,
    pub max_molecularity: u32,
    pub max_reactions: usize,
}

fn uses_all_species(reactions: &[Reaction], s: usize) -> bool {
    (0..s).all(|i| reactions.iter().any(|r| r.reactant.get(i) + r.product.get(i) > 0))
}

/// Calls `visit` on every network of the requested shape with exactly
/// `species` species, once per relabeling class. `prefilter` sees the raw
/// reaction list first and can reject cheaply.
pub fn for_each_network<P, V>(spec: EnumerationSpec, mut prefilter: P, mut visit: V)
where
    P: FnMut(&[Reaction]) -> bool,
    V: FnMut(Network),
{
    let s = spec.species;
    let cs = complexes(s, spec.max_molecularity);
    let mut emit = |reactions: Vec<Reaction>| {
        if !uses_all_species(&reactions, s) || !prefilter(&reactions) {
            return;
        }
        if s > 1 && !is_canonical(&reactions, s) {
            return;
        }
        if let Ok(net) = Network::new(default_names(s), reactions) {
            visit(net);
        }
    };
    let n = cs.len();
    let irreversible: Vec<Reaction> = (0..n)
        .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .map(|(a, b)| Reaction::new(cs[a].clone(), cs[b].clone()))
        .collect();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let pair_reactions = |&(a, b): &(usize, usize)| {
        vec![Reaction::new(cs[a].clone(), cs[b].clone()), Reaction::new(cs[b].clone(), cs[a].clone())]
    };
    match spec.shape {
        Shape::SingleReaction => {
            for r in &irreversible {
                emit(vec![r.clone()]);
            }
        }
        Shape::TwoIrreversible => {
            for i in 0..irreversible.len() {
                for j in i + 1..irreversible.len() {
                    emit(vec![irreversible[i].clone(), irreversible[j].clone()]);
                }
            }
        }
        Shape::ReversibleIrreversible => {
            for p in &pairs {
                for r in &irreversible {
                    let (a, b) = (&cs[p.0], &cs[p.1]);
                    if (r.reactant.0 == *a && r.product.0 == *b) || (r.reactant.0 == *b && r.product.0 == *a) {
                        continue;
                    }
                    let mut rs = pair_reactions(p);
                    rs.push(r.clone());
                    emit(rs);
                }
            }
        }
        Shape::TwoReversible => {
            for i in 0..pairs.len() {
                for j in i + 1..pairs.len() {
                    let mut rs = pair_reactions(&pairs[i]);
                    rs.extend(pair_reactions(&pairs[j]));
                    emit(rs);
                }
            }
        }
        Shape::OneSpecies => {
            assert_eq!(s, 1, "one-species enumeration needs exactly one species");
            let m = irreversible.len();
            let max_r = spec.max_reactions.min(m);
            let mut chosen: Vec<usize> = Vec::new();
            fn rec(start: usize, m: usize, max_r: usize, chosen: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
                if !chosen.is_empty() {
                    f(chosen);
                }
                if chosen.len() == max_r {
                    return;
                }
                for k in start..m {
                    chosen.push(k);
                    rec(k + 1, m, max_r, chosen, f);
                    chosen.pop();
                }
            }
            rec(0, m, max_r, &mut chosen, &mut |ks: &[usize]| {
                emit(ks.iter().map(|&k| irreversible[k].clone()).collect());
            });
        }
        Shape::OutOfScope => panic!("out-of-scope networks are not enumerated"),
    }
}

pub fn enumerate(spec: EnumerationSpec) -> Vec<Network> {
    let mut out = Vec::new();
    for_each_network(spec, |_| true, |n| out.push(n));
    out
}
