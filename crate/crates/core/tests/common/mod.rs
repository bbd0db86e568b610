//! Random network generators shared by the integration tests.
#![allow(dead_code)]

use crnms::classify::enumerate::complexes;
use crnms::network::{default_names, Network, Reaction};
use crnms::rational::Q;
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `a / b` with `a, b` uniform in `1..=100`, so within `[1/100, 100]`.
pub fn rate(rng: &mut impl Rng) -> Q {
    Q::new(BigInt::from(rng.gen_range(1..=100)), BigInt::from(rng.gen_range(1..=100)))
}

pub fn rates(rng: &mut impl Rng, n: usize) -> Vec<Q> {
    (0..n).map(|_| rate(rng)).collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Nonzero primitive integer vector with entries in `-3..=3`.
pub fn direction(rng: &mut impl Rng, s: usize) -> Vec<i64> {
    loop {
        let v: Vec<i64> = (0..s).map(|_| rng.gen_range(-3..=3)).collect();
        let g = v.iter().fold(0, |g, &x| gcd(g, x));
        if g != 0 {
            return v.iter().map(|x| x / g).collect();
        }
    }
}

pub fn complex(rng: &mut impl Rng, s: usize, max_mol: u32) -> Vec<u32> {
    let cs = complexes(s, max_mol);
    cs[rng.gen_range(0..cs.len())].clone()
}

fn shifted(c: &[u32], v: &[i64], by: i64, max_mol: u32) -> Option<Vec<u32>> {
    let out: Option<Vec<u32>> = c.iter().zip(v).map(|(&x, &d)| u32::try_from(x as i64 + by * d).ok()).collect();
    out.filter(|o| o.iter().sum::<u32>() <= max_mol)
}

/// Network over `default_names(s)` that uses every species.
pub fn build(s: usize, reactions: Vec<Reaction>) -> Option<Network> {
    let used = (0..s).all(|i| reactions.iter().any(|r| r.reactant.get(i) + r.product.get(i) > 0));
    if !used {
        return None;
    }
    Network::new(default_names(s), reactions).ok()
}

/// Two reactions whose vectors are negative multiples of each other.
pub fn consistent_two_reaction(rng: &mut impl Rng, s: usize, max_mol: u32) -> Network {
    loop {
        let u = direction(rng, s);
        let y = complex(rng, s, max_mol);
        let z = complex(rng, s, max_mol);
        let (a, b) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let (Some(y2), Some(z2)) = (shifted(&y, &u, a, max_mol), shifted(&z, &u, -b, max_mol)) else {
            continue;
        };
        if let Some(n) = build(s, vec![Reaction::new(y, y2), Reaction::new(z, z2)]) {
            return n;
        }
    }
}

pub fn any_two_reaction(rng: &mut impl Rng, s: usize, max_mol: u32) -> Network {
    loop {
        let rs = (0..2).map(|_| Reaction::new(complex(rng, s, max_mol), complex(rng, s, max_mol))).collect();
        if let Some(n) = build(s, rs) {
            return n;
        }
    }
}

pub fn single_reaction(rng: &mut impl Rng, s: usize, max_mol: u32) -> Network {
    loop {
        if let Some(n) = build(s, vec![Reaction::new(complex(rng, s, max_mol), complex(rng, s, max_mol))]) {
            return n;
        }
    }
}

/// A reversible pair and an irreversible reaction along the same line.
pub fn parallel_rev_irrev(rng: &mut impl Rng, s: usize, max_mol: u32) -> Network {
    loop {
        let u = direction(rng, s);
        let y = complex(rng, s, max_mol);
        let z = complex(rng, s, max_mol);
        let a = rng.gen_range(1..=3);
        let b = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let (Some(y2), Some(z2)) = (shifted(&y, &u, a, max_mol), shifted(&z, &u, b, max_mol)) else {
            continue;
        };
        let rs = vec![Reaction::new(y.clone(), y2.clone()), Reaction::new(y2, y), Reaction::new(z, z2)];
        if let Some(n) = build(s, rs) {
            return n;
        }
    }
}

pub fn any_rev_irrev(rng: &mut impl Rng, s: usize, max_mol: u32) -> Network {
    loop {
        let (y, y2) = (complex(rng, s, max_mol), complex(rng, s, max_mol));
        let rs = vec![
            Reaction::new(y.clone(), y2.clone()),
            Reaction::new(y2, y),
            Reaction::new(complex(rng, s, max_mol), complex(rng, s, max_mol)),
        ];
        if let Some(n) = build(s, rs) {
            return n;
        }
    }
}

/// Two reversible pairs along the same line.
pub fn parallel_two_rev(rng: &mut impl Rng, s: usize, max_mol: u32) -> Network {
    loop {
        let u = direction(rng, s);
        let y = complex(rng, s, max_mol);
        let z = complex(rng, s, max_mol);
        let (a, b) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let (Some(y2), Some(z2)) = (shifted(&y, &u, a, max_mol), shifted(&z, &u, b, max_mol)) else {
            continue;
        };
        let rs = vec![
            Reaction::new(y.clone(), y2.clone()),
            Reaction::new(y2, y),
            Reaction::new(z.clone(), z2.clone()),
            Reaction::new(z2, z),
        ];
        if let Some(n) = build(s, rs) {
            return n;
        }
    }
}

/// One species, `1..=max_r` distinct reactions on levels `0..=max_mol`.
pub fn one_species(rng: &mut impl Rng, max_r: usize, max_mol: u32) -> Network {
    loop {
        let k = rng.gen_range(1..=max_r);
        let rs = (0..k)
            .map(|_| Reaction::new(vec![rng.gen_range(0..=max_mol)], vec![rng.gen_range(0..=max_mol)]))
            .collect();
        if let Some(n) = build(1, rs) {
            return n;
        }
    }
}
