//! Explicit rate constants and classes with prescribed steady-state counts.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::reduce::{line_frame, reduce_line};
use super::{search_budget, Witness, WitnessError};
use crate::classify::one_species::{arrow_diagram, is_alternating_network, max_alternating, Arrow};
use crate::classify::two_reaction::{beta, BetaVector};
use crate::classify::{classify, detect_shape, Shape, Verdict};
use crate::linalg::nullspace;
use crate::network::{Network, Reaction};
use crate::rational::{pow_q, q, qf, sign, Q};

/// Target of a two-reaction construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Desired {
    TwoNondegenerate,
    OneNondegenerate,
    DoubleDegenerate,
    NoSteadyState,
}

struct Budget {
    total: u64,
    used: u64,
}

impl Budget {
    fn new() -> Self {
        Budget { total: search_budget(), used: 0 }
    }

    fn spend(&mut self, detail: impl FnOnce() -> String) -> Result<(), WitnessError> {
        if self.used >= self.total {
            return Err(WitnessError::BudgetExhausted { budget: self.total, detail: detail() });
        }
        self.used += 1;
        Ok(())
    }
}

fn refuse(v: &Verdict, reason: impl Into<String>) -> WitnessError {
    WitnessError::Refused {
        reason: reason.into(),
        case: v.case.as_str().to_string(),
        criterion: v.justification.first().map_or("consistency", |j| j.criterion).to_string(),
    }
}

fn witness(net: &Network, rates: Vec<Q>, offsets: &[Q], construction: &'static str) -> Result<Witness, WitnessError> {
    let red = reduce_line(net, &rates, offsets)?;
    Witness::from_reduction(net, rates, &red, construction)
        .map_err(|e| WitnessError::Unsupported(format!("root isolation failed: {}", e)))
}

/// Smallest positive integer multiple of `v` with coprime entries.
fn primitive(v: &[Q]) -> Vec<Q> {
    let l = v.iter().fold(num_bigint::BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<_> = v.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(num_bigint::BigInt::zero(), |g, x| g.gcd(x));
    ints.into_iter().map(|x| Q::from_integer(x / &g)).collect()
}

/// Rates for a T-alternating one-species network whose positive steady
/// states are exactly `targets`.
///
/// The coefficient vector spans the kernel of the generalized Vandermonde
/// system at the targets. Because the polynomial then has T positive roots
/// and only T+1 terms, its signs alternate, so they agree with the arrow
/// diagram up to one global sign.
pub fn prescribe_roots_one_species(net: &Network, targets: &[Q]) -> Result<Witness, WitnessError> {
    if !is_alternating_network(net) {
        return Err(WitnessError::Unsupported("network is not T-alternating".into()));
    }
    let diag = arrow_diagram(net).expect("alternating networks have one species");
    let t = diag.levels.len() - 1;
    if targets.len() != t {
        return Err(WitnessError::Unsupported(format!("expected {} target roots, got {}", t, targets.len())));
    }
    if targets.iter().any(|x| !x.is_positive()) || targets.windows(2).any(|w| w[0] >= w[1]) {
        return Err(WitnessError::Unsupported("target roots must be strictly increasing and positive".into()));
    }
    let rows: Vec<Vec<Q>> =
        targets.iter().map(|x| diag.levels.iter().map(|&m| pow_q(x, m as i64)).collect()).collect();
    let kernel = nullspace(&rows, t + 1);
    if kernel.len() != 1 {
        return Err(WitnessError::SignInfeasible);
    }
    let mut a = primitive(&kernel[0]);
    let want = |arrow: Arrow| if arrow == Arrow::Right { 1 } else { -1 };
    if sign(&a[0]) != want(diag.arrows[0]) {
        a.iter_mut().for_each(|x| *x = -x.clone());
    }
    if a.iter().zip(&diag.arrows).any(|(x, &arrow)| sign(x) != want(arrow)) {
        return Err(WitnessError::SignInfeasible);
    }
    let mut rates = vec![Q::zero(); net.num_reactions()];
    for (j, ks) in diag.reactions.iter().enumerate() {
        let k = ks[0];
        let r = &net.reactions()[k];
        let jump = q(r.product.get(0) as i64 - r.reactant.get(0) as i64);
        rates[k] = &a[j] / jump;
    }
    let w = witness(net, rates, &[Q::zero()], "prescribed-roots")?;
    let poly = reduce_line(net, &w.rates, &[Q::zero()])?.poly;
    assert!(targets.iter().all(|x| poly.eval(x).is_zero()), "prescribed roots are roots");
    assert_eq!(w.nondegenerate_count(), t, "prescribed roots are all the positive roots");
    Ok(w)
}

/// At least `count` nondegenerate steady states for a one-species network,
/// from its longest alternating subnetwork. Remaining reactions get rates
/// small enough not to disturb the prescribed roots.
pub fn witness_one_species(net: &Network, count: usize, targets: Option<&[Q]>) -> Result<Witness, WitnessError> {
    let alt = max_alternating(net).map_err(|e| WitnessError::Unsupported(e.to_string()))?;
    if count == 0 || count > alt.t {
        let v = classify(net);
        return Err(refuse(&v, format!("{} nondegenerate steady states requested, at most {} possible", count, alt.t)));
    }
    let default: Vec<Q> = (1..=count as i64).map(q).collect();
    let targets = targets.unwrap_or(&default);
    let keep = &alt.reactions[..=count];
    let sub = net.subnetwork(keep).expect("alternating reactions form a network");
    let base = prescribe_roots_one_species(&sub, targets)?;
    if keep.len() == net.num_reactions() {
        let mut rates = vec![Q::zero(); net.num_reactions()];
        for (j, &k) in keep.iter().enumerate() {
            rates[k] = base.rates[j].clone();
        }
        return witness(net, rates, &[Q::zero()], "prescribed-roots");
    }
    witness_perturbed(net, keep, &base.rates, &[Q::zero()], count, base.stable_count())
}

/// Extends rates of the subnetwork `keep` to the whole network by giving the
/// other reactions a common small rate, shrunk until the class through
/// `point` has at least `nondegenerate` nondegenerate and `stable` stable
/// steady states. The stoichiometric subspace must be a line.
pub fn witness_perturbed(
    net: &Network,
    keep: &[usize],
    base_rates: &[Q],
    point: &[Q],
    nondegenerate: usize,
    stable: usize,
) -> Result<Witness, WitnessError> {
    let frame = line_frame(net)?;
    let offsets = if net.num_species() == 1 { vec![Q::zero()] } else { frame.offsets_through(point) };
    let mut eps = base_rates.iter().min().expect("nonempty subnetwork").clone() / q(2);
    let mut budget = Budget::new();
    for _ in 0..64 {
        budget.spend(|| format!("perturbing a subnetwork at eps = {}", eps))?;
        let mut rates = vec![eps.clone(); net.num_reactions()];
        for (j, &k) in keep.iter().enumerate() {
            rates[k] = base_rates[j].clone();
        }
        let w = witness(net, rates, &offsets, "perturbed-subnetwork")?;
        if w.nondegenerate_count() >= nondegenerate && w.stable_count() >= stable {
            return Ok(w);
        }
        eps /= q(4);
    }
    Err(WitnessError::BudgetExhausted { budget: budget.total, detail: "64 perturbation steps".into() })
}

/// Rates and class making every point of a nonempty class a steady state.
pub fn witness_degenerate(net: &Network) -> Result<Witness, WitnessError> {
    let v = classify(net);
    if v.pss_range().hi != u64::MAX {
        return Err(refuse(&v, "the network has finitely many steady states in every class"));
    }
    if net.num_species() == 1 {
        let diag = arrow_diagram(net).expect("one species");
        let mut rates = vec![Q::zero(); net.num_reactions()];
        for ks in &diag.reactions {
            let jump = |k: usize| {
                let r = &net.reactions()[k];
                r.product.get(0) as i64 - r.reactant.get(0) as i64
            };
            let up = ks.iter().filter(|&&k| jump(k) > 0).count() as i64;
            let down = ks.len() as i64 - up;
            for &k in ks {
                let j = jump(k);
                rates[k] = if j > 0 { qf(1, up * j) } else { qf(1, -down * j) };
            }
        }
        let w = witness(net, rates, &[Q::zero()], "balanced-levels")?;
        assert!(w.continuum);
        return Ok(w);
    }
    if net.num_reactions() != 2 {
        return Err(WitnessError::Unsupported("degenerate witnesses cover one species or two reactions".into()));
    }
    let b = beta(net).expect("two reactions");
    let lambda = b.lambda.clone().ok_or_else(|| refuse(&v, "inconsistent"))?;
    let nz = b.nonzero();
    let mut point = vec![Q::one(); net.num_species()];
    if nz.len() >= 2 {
        // slope -1: the ratio of the two moving species is constant along the
        // class through a point on the ray of the reaction vector
        let (i, j) = (nz[0], nz[1]);
        point[j] = Q::new(b.v[j].into(), b.v[i].into());
    }
    let kappa = monomial_value(&point, &b.d, -1);
    let w = witness(net, vec![Q::one(), &lambda * kappa], &line_frame(net)?.offsets_through(&point), "aligned-class")?;
    if !w.continuum {
        return Err(WitnessError::Unsupported("no aligned class gives a continuum".into()));
    }
    Ok(w)
}

/// `prod x_i^(s * d_i)`.
fn monomial_value(x: &[Q], d: &[i64], s: i64) -> Q {
    x.iter().zip(d).fold(Q::one(), |acc, (xi, &di)| acc * pow_q(xi, s * di))
}

/// Odometer over tuples in `1..=k` whose maximum is exactly `k`, for
/// increasing `k`.
struct Weights {
    n: usize,
    k: i64,
    cur: Vec<i64>,
}

impl Weights {
    fn new(n: usize) -> Self {
        Weights { n, k: 0, cur: Vec::new() }
    }
}

impl Iterator for Weights {
    type Item = Vec<i64>;
    fn next(&mut self) -> Option<Vec<i64>> {
        loop {
            if self.cur.is_empty() {
                self.k += 1;
                self.cur = vec![1; self.n];
            } else {
                let mut i = 0;
                while i < self.n && self.cur[i] == self.k {
                    self.cur[i] = 1;
                    i += 1;
                }
                if i == self.n {
                    self.cur.clear();
                    continue;
                }
                self.cur[i] += 1;
            }
            if self.cur.contains(&self.k) {
                return Some(self.cur.clone());
            }
        }
    }
}

/// A point where the log of the steady-state monomial is critical along the
/// class and its second derivative along the class is nonzero. Returns the
/// point and the sign of that second derivative.
fn critical_point(b: &BetaVector, slopes: &[Q], budget: &mut Budget) -> Result<(Vec<Q>, i8), WitnessError> {
    let nz = b.nonzero();
    let (pos, neg): (Vec<usize>, Vec<usize>) = nz.iter().partition(|&&i| b.beta[i] > 0);
    for w in Weights::new(nz.len()) {
        budget.spend(|| format!("searching for a critical point, weights {:?}", w))?;
        let weight = |i: usize| q(w[nz.iter().position(|&j| j == i).unwrap()]);
        let sp: Q = pos.iter().map(|&i| weight(i)).sum();
        let sn: Q = neg.iter().map(|&i| weight(i)).sum();
        let mut x = vec![Q::one(); b.beta.len()];
        for &i in &nz {
            let total = if b.beta[i] > 0 { &sp } else { &sn };
            // reciprocal of w_i / (|beta_i| * total)
            x[i] = q(b.beta[i].abs()) * total / weight(i);
        }
        let second: Q = nz.iter().map(|&i| q(b.d[i]) * &slopes[i] * &slopes[i] / (&x[i] * &x[i])).sum();
        if !second.is_zero() {
            return Ok((x, sign(&second)));
        }
    }
    unreachable!("the weight odometer is infinite")
}

/// Two-reaction witnesses built around a critical point of the steady-state
/// monomial on a class.
pub fn witness_two_reaction(net: &Network, desired: Desired) -> Result<Witness, WitnessError> {
    let v = classify(net);
    let b = beta(net).map_err(|e| WitnessError::Unsupported(e.to_string()))?;
    let Some(lambda) = b.lambda.clone() else {
        return Err(refuse(&v, "inconsistent: no positive steady states"));
    };
    let frame = line_frame(net)?;
    let mut budget = Budget::new();
    let with_kappa = |point: &[Q], kappa: Q, name: &'static str| {
        witness(net, vec![Q::one(), &lambda * kappa], &frame.offsets_through(point), name)
    };
    match desired {
        Desired::OneNondegenerate => {
            let nz = b.nonzero();
            if nz.is_empty() {
                return Err(refuse(&v, "every steady state is degenerate"));
            }
            let mut point = vec![Q::one(); net.num_species()];
            if b.beta.iter().sum::<i64>() == 0 {
                point[nz[0]] = q(2);
            }
            let kappa = monomial_value(&point, &b.d, -1);
            let w = with_kappa(&point, kappa, "transversal-point")?;
            assert!(w.nondegenerate_count() >= 1);
            Ok(w)
        }
        Desired::TwoNondegenerate | Desired::DoubleDegenerate | Desired::NoSteadyState => {
            if !b.mixed() {
                return Err(refuse(&v, "the steady-state monomial is monotone along every class"));
            }
            if v.nondegenerately_multistationary() != Some(true) && desired != Desired::NoSteadyState {
                return Err(refuse(&v, "not nondegenerately multistationary"));
            }
            let (point, sigma) = critical_point(&b, &frame.slopes, &mut budget)?;
            let kappa0 = monomial_value(&point, &b.d, -1);
            if desired == Desired::DoubleDegenerate {
                let w = with_kappa(&point, kappa0, "tangent-class")?;
                assert!(w.steady_states.iter().any(|s| s.multiplicity == 2));
                return Ok(w);
            }
            let sigma = if desired == Desired::TwoNondegenerate { sigma } else { -sigma };
            let mut eps = qf(1, 2);
            for _ in 0..64 {
                budget.spend(|| format!("shifting the rate ratio by eps = {} from {}", eps, kappa0))?;
                let kappa = &kappa0 * (Q::one() + q(sigma as i64) * &eps);
                let w = with_kappa(&point, kappa, "shifted-tangent")?;
                let done = match desired {
                    Desired::TwoNondegenerate => w.nondegenerate_count() >= 2,
                    _ => w.steady_states.is_empty() && !w.continuum,
                };
                if done {
                    return Ok(w);
                }
                eps /= q(2);
            }
            Err(WitnessError::BudgetExhausted {
                budget: budget.total,
                detail: format!("64 halvings around the critical point {:?}", point.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
            })
        }
    }
}

/// The restriction of a network with a one-dimensional stoichiometric
/// subspace to species `i`, with each original reaction mapped to its
/// restricted reaction.
fn restrict_to_species(net: &Network, i: usize) -> Option<(Network, Vec<usize>)> {
    let mut reactions: Vec<Reaction> = Vec::new();
    let mut map = Vec::new();
    for r in net.reactions() {
        let rr = Reaction::new(vec![r.reactant.get(i)], vec![r.product.get(i)]);
        if rr.is_trivial() {
            return None;
        }
        let k = reactions.iter().position(|x| *x == rr).unwrap_or_else(|| {
            reactions.push(rr);
            reactions.len() - 1
        });
        map.push(k);
    }
    Network::new(vec![net.species()[i].clone()], reactions).ok().map(|n| (n, map))
}

/// Steady states of a one-species restriction carried to the whole network:
/// every other species is made abundant along the class, and rates are
/// rescaled so the restricted dynamics is reproduced in the limit.
pub fn witness_lifted(net: &Network, count: usize) -> Result<Witness, WitnessError> {
    let frame = line_frame(net)?;
    let v = classify(net);
    let best = (0..net.num_species())
        .filter(|&i| frame.direction[i] != 0)
        .filter_map(|i| restrict_to_species(net, i).map(|(n, map)| (i, n, map)))
        .filter_map(|(i, n, map)| max_alternating(&n).ok().map(|a| (a.t, i, n, map)))
        .max_by_key(|(t, i, _, _)| (*t, std::cmp::Reverse(*i)));
    let Some((t, i, restricted, map)) = best else {
        return Err(refuse(&v, "no species restriction has alternations"));
    };
    if count == 0 || count > t {
        return Err(refuse(&v, format!("{} nondegenerate steady states requested, restrictions give at most {}", count, t)));
    }
    let base = witness_one_species(&restricted, count, None)?;
    let mut copies = vec![0i64; restricted.num_reactions()];
    map.iter().for_each(|&k| copies[k] += 1);
    let mut budget = Budget::new();
    for n in 1..=64u32 {
        budget.spend(|| format!("abundance 2^{}", n))?;
        let c = pow_q(&q(2), n as i64);
        let rates: Vec<Q> = net
            .reactions()
            .iter()
            .zip(&map)
            .map(|(r, &k)| {
                let others: u32 = (0..net.num_species()).filter(|&j| j != i).map(|j| r.reactant.get(j)).sum();
                &base.rates[k] / q(copies[k]) / pow_q(&c, others as i64)
            })
            .collect();
        let mut point = vec![c.clone(); net.num_species()];
        point[i] = Q::one();
        let w = witness(net, rates, &frame.offsets_through(&point), "abundant-catalysts")?;
        if w.nondegenerate_count() >= count && w.stable_count() >= base.stable_count() {
            return Ok(w);
        }
    }
    Err(WitnessError::BudgetExhausted { budget: budget.total, detail: "abundance up to 2^64".into() })
}

/// Default witness for a network: `count` nondegenerate steady states, or the
/// classifier's guaranteed lower bound when `count` is `None`.
pub fn build_witness(net: &Network, count: Option<usize>, roots: Option<&[Q]>) -> Result<Witness, WitnessError> {
    let shape = detect_shape(net);
    if shape == Shape::OutOfScope {
        return Err(WitnessError::OutOfScope);
    }
    if roots.is_some() && shape != Shape::OneSpecies {
        return Err(WitnessError::Unsupported("prescribed roots apply to one-species networks".into()));
    }
    let v = classify(net);
    let count = roots.map(|r| r.len()).or(count).unwrap_or(v.npss_range().lo as usize);
    if count as u64 > v.npss_range().hi {
        return Err(refuse(&v, format!("{} nondegenerate steady states requested, capacity is {}", count, v.cap_npss)));
    }
    if count == 0 {
        return witness_degenerate(net);
    }
    match shape {
        Shape::OneSpecies => match roots {
            Some(r) if is_alternating_network(net) && r.len() + 1 == net.num_reactions() => {
                prescribe_roots_one_species(net, r)
            }
            _ => witness_one_species(net, count, roots),
        },
        Shape::TwoIrreversible => match count {
            1 => witness_two_reaction(net, Desired::OneNondegenerate),
            2 => witness_two_reaction(net, Desired::TwoNondegenerate),
            _ => Err(WitnessError::Unsupported("two-reaction constructions give at most two steady states".into())),
        },
        Shape::ReversibleIrreversible | Shape::TwoReversible => witness_lifted(net, count),
        Shape::SingleReaction => Err(refuse(&v, "a single reaction has no positive steady states")),
        Shape::OutOfScope => unreachable!(),
    }
}
