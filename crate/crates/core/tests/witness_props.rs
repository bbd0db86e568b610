mod common;

use crnms::classify::{classify, Capacity, CaseLabel};
use crnms::network::Network;
use crnms::poly::isolate_positive_roots;
use crnms::rational::{q, Q};
use crnms::witness::{
    build_witness, certify, count_steady_states, reduce_line, reduce_one_species, reduce_two_reaction, witness_two_reaction,
    Desired, SteadyStateCount,
};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::Rng;

fn case_3c(seed: u64) -> Network {
    let mut rng = common::rng(seed);
    loop {
        let n = common::consistent_two_reaction(&mut rng, 2, 6);
        if classify(&n).case == CaseLabel::Case3C {
            return n;
        }
    }
}

fn monomial(x: &[Q], exps: &[u32]) -> Q {
    x.iter().zip(exps).fold(Q::one(), |acc, (xi, &e)| acc * num_traits::pow(xi.clone(), e as usize))
}

/// Mass-action right-hand side, written out directly.
fn rhs(net: &Network, rates: &[Q], x: &[Q]) -> Vec<Q> {
    let mut f = vec![Q::zero(); net.num_species()];
    for (r, k) in net.reactions().iter().zip(rates) {
        let flux = k * monomial(x, &r.reactant.0);
        for (fi, v) in f.iter_mut().zip(r.vector()) {
            *fi += &flux * Q::from_integer(BigInt::from(v));
        }
    }
    f
}

fn small_positive(rng: &mut impl Rng) -> Q {
    Q::new(BigInt::from(rng.gen_range(1..=9)), BigInt::from(rng.gen_range(1..=4)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn case_3c_witness_has_one_stable_of_two(seed in any::<u64>()) {
        let n = case_3c(seed);
        for order in [[0, 1], [1, 0]] {
            let m = n.subnetwork(&order).unwrap();
            let w = witness_two_reaction(&m, Desired::TwoNondegenerate).unwrap();
            let rep = certify(&m, &w).unwrap();
            prop_assert_eq!((rep.steady_states, rep.nondegenerate, rep.stable), (2, 2, 1), "{}", m);
            let red = reduce_line(&m, &w.rates, &w.offsets).unwrap();
            prop_assert!(red.matches_full_system(&m, &w.rates));
        }
    }

    /// A point made a steady state by choice of rates is a root of the
    /// reduced polynomial, and moving the rate breaks both at once.
    #[test]
    fn reduced_roots_are_full_steady_states(seed in any::<u64>(), s in 2usize..=3, bump in 1i64..5) {
        let mut rng = common::rng(seed);
        let n = common::consistent_two_reaction(&mut rng, s, 5);
        let x: Vec<Q> = (0..s).map(|_| small_positive(&mut rng)).collect();
        let (v, w) = (n.reactions()[0].vector(), n.reactions()[1].vector());
        let k = v.iter().position(|&c| c != 0).unwrap();
        let lambda = Q::new(BigInt::from(-v[k]), BigInt::from(w[k]));
        prop_assert!(lambda > Q::zero());
        let r = n.reactions();
        let k1 = &lambda * monomial(&x, &r[0].reactant.0) / monomial(&x, &r[1].reactant.0);
        let rates = vec![q(1), k1.clone()];
        prop_assert!(rhs(&n, &rates, &x).iter().all(|c| c.is_zero()));
        let red = reduce_two_reaction(&n, &rates, &x).unwrap();
        let xp = &x[red.pivot];
        prop_assert!(red.domain.contains(xp));
        prop_assert_eq!(red.point_at(xp), x.clone());
        prop_assert!(red.poly.eval(xp).is_zero());

        let moved = vec![q(1), k1 * Q::new(BigInt::from(bump + 1), BigInt::from(bump))];
        let red = reduce_two_reaction(&n, &moved, &x).unwrap();
        prop_assert!(!rhs(&n, &moved, &x).iter().all(|c| c.is_zero()));
        prop_assert!(!red.poly.eval(xp).is_zero());
    }

    #[test]
    fn root_count_respects_sign_variations(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let n = common::one_species(&mut rng, 6, 6);
        let rates = common::rates(&mut rng, n.num_reactions());
        let p = reduce_one_species(&n, &rates).unwrap();
        if !p.is_zero() {
            let roots = isolate_positive_roots(&p, &crnms::poly::Domain::positive()).unwrap();
            let with_multiplicity: usize = roots.iter().map(|r| r.multiplicity).sum();
            prop_assert!(with_multiplicity <= p.sign_variations());
        }
    }

    #[test]
    fn one_species_witness_meets_the_lower_bound(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let n = common::one_species(&mut rng, 5, 5);
        let v = classify(&n);
        if v.nondegenerately_multistationary() == Some(true) {
            let w = build_witness(&n, None, None).unwrap();
            let rep = certify(&n, &w).unwrap();
            prop_assert!(rep.nondegenerate as u64 >= v.npss_range().lo);
            prop_assert!(rep.stable as u64 >= v.stable_range().lo);
        }
    }

    #[test]
    fn single_steady_state_cases_never_sample_two(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let n = common::consistent_two_reaction(&mut rng, 2, 5);
        let v = classify(&n);
        prop_assume!(matches!(v.cap_pss, Capacity::Exact(0) | Capacity::Exact(1)));
        for _ in 0..20 {
            let rates = common::rates(&mut rng, 2);
            let point = common::rates(&mut rng, 2);
            match count_steady_states(&n, &rates, &point).unwrap() {
                SteadyStateCount::Finite { distinct, .. } => prop_assert!(distinct <= 1, "{}", n),
                SteadyStateCount::Continuum => prop_assert!(false, "continuum for {}", n),
            }
        }
    }
}

#[test]
fn double_degenerate_root_is_exact() {
    let n = crnms::network::parse_inline("B -> A; A + 2B -> 3B").unwrap();
    let w = witness_two_reaction(&n, Desired::DoubleDegenerate).unwrap();
    assert_eq!(w.steady_states.len(), 1);
    let s = &w.steady_states[0];
    assert_eq!(s.multiplicity, 2);
    let red = reduce_line(&n, &w.rates, &w.offsets).unwrap();
    // a double root is the root of gcd(P, P')
    let g = crnms::poly::RatPoly::gcd(&red.poly, &red.poly.derivative());
    assert_eq!(g.degree(), Some(1));
    let root = -g.coeff(0) / g.coeff(1);
    assert!(s.interval.0 < root && root < s.interval.1);
    let x = red.point_at(&root);
    assert!(rhs(&n, &w.rates, &x).iter().all(|c| c.is_zero()));
}
