//! Restriction of the mass-action system to one compatibility class when the
//! stoichiometric subspace is a line.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::network::Network;
use crate::poly::{Domain, RatPoly};
use crate::rational::{max_q, min_q, q, sign, Q};

/// The class `{x : x_i = c_i + gamma_i * x_p}` parametrized by the pivot
/// coordinate `x_p`, and the steady-state equation on it.
#[derive(Clone, Debug, PartialEq)]
pub struct ReducedSystem {
    /// Cleared steady-state polynomial in the pivot coordinate. Its roots in
    /// `domain` are exactly the positive steady states of the class.
    pub poly: RatPoly,
    pub domain: Domain,
    /// `dx_p/dt = direction_sign * (positive factor) * poly(x_p)`.
    pub direction_sign: i8,
    pub pivot: usize,
    pub slopes: Vec<Q>,
    pub offsets: Vec<Q>,
    /// Primitive integer direction of the stoichiometric line, first nonzero
    /// entry positive.
    pub direction: Vec<i64>,
    /// Reaction `k` has vector `multipliers[k] * direction`.
    pub multipliers: Vec<Q>,
    /// Per-species minimum reactant coefficient, factored out of `poly`.
    pub min_exponents: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ReduceError {
    #[error("stoichiometric subspace has dimension {0}, not 1")]
    NotALine(usize),
    #[error("expected {expected} rate constants, got {got}")]
    RateCount { expected: usize, got: usize },
    #[error("rate constants must be positive")]
    NonPositiveRate,
    #[error("class point must have {0} positive coordinates")]
    BadPoint(usize),
}

/// Primitive direction of the span of the reaction vectors, if it is a line.
pub fn line_direction(net: &Network) -> Result<Vec<i64>, ReduceError> {
    let vs = net.reaction_vectors();
    let dim = crate::linalg::rank_int(&vs);
    if dim != 1 {
        return Err(ReduceError::NotALine(dim));
    }
    let v = vs.iter().find(|v| v.iter().any(|&x| x != 0)).expect("rank one has a nonzero vector");
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    let first = *v.iter().find(|&&x| x != 0).unwrap();
    let s = if first < 0 { -1 } else { 1 };
    Ok(v.iter().map(|&x| s * x / g).collect())
}

fn check_rates(net: &Network, rates: &[Q]) -> Result<(), ReduceError> {
    if rates.len() != net.num_reactions() {
        return Err(ReduceError::RateCount { expected: net.num_reactions(), got: rates.len() });
    }
    if rates.iter().any(|k| !k.is_positive()) {
        return Err(ReduceError::NonPositiveRate);
    }
    Ok(())
}

/// The line structure without a class: pivot, slopes and multipliers.
pub struct LineFrame {
    pub direction: Vec<i64>,
    pub pivot: usize,
    pub slopes: Vec<Q>,
    pub multipliers: Vec<Q>,
}

pub fn line_frame(net: &Network) -> Result<LineFrame, ReduceError> {
    let direction = line_direction(net)?;
    let pivot = direction.iter().position(|&x| x != 0).unwrap();
    let vp = q(direction[pivot]);
    let slopes = direction.iter().map(|&x| q(x) / &vp).collect();
    let multipliers = net
        .reaction_vectors()
        .iter()
        .map(|v| Q::new(v[pivot].into(), direction[pivot].into()))
        .collect();
    Ok(LineFrame { direction, pivot, slopes, multipliers })
}

impl LineFrame {
    /// Offsets of the class through `point`.
    pub fn offsets_through(&self, point: &[Q]) -> Vec<Q> {
        let xp = &point[self.pivot];
        point.iter().zip(&self.slopes).map(|(x, g)| x - g * xp).collect()
    }

    /// The conserved quantity `v_1 x_2 - v_2 x_1` of a two-species line.
    pub fn two_species_invariant(&self, point: &[Q]) -> Q {
        assert_eq!(point.len(), 2);
        q(self.direction[0]) * &point[1] - q(self.direction[1]) * &point[0]
    }
}

/// Reduces the system with the given rates to the class with `offsets`
/// (`offsets[pivot]` is ignored and treated as zero).
pub fn reduce_line(net: &Network, rates: &[Q], offsets: &[Q]) -> Result<ReducedSystem, ReduceError> {
    check_rates(net, rates)?;
    let frame = line_frame(net)?;
    let s = net.num_species();
    let p = frame.pivot;
    let mut offsets = offsets.to_vec();
    offsets[p] = Q::zero();

    let mut lo = Q::zero();
    let mut hi: Option<Q> = None;
    let mut empty = false;
    for i in 0..s {
        if i == p {
            continue;
        }
        let (c, g) = (&offsets[i], &frame.slopes[i]);
        if g.is_zero() {
            if !c.is_positive() {
                empty = true;
            }
        } else if g.is_positive() {
            lo = max_q(&lo, &(-c / g));
        } else {
            let b = -c / g;
            hi = Some(hi.map_or(b.clone(), |h| min_q(&h, &b)));
        }
    }
    let domain = if empty { Domain::new(Q::zero(), Some(Q::zero())) } else { Domain::new(lo, hi) };

    let linear: Vec<RatPoly> = (0..s)
        .map(|i| if i == p { RatPoly::linear(Q::zero(), Q::one()) } else { RatPoly::linear(offsets[i].clone(), frame.slopes[i].clone()) })
        .collect();
    let min_exponents: Vec<u32> =
        (0..s).map(|i| net.reactions().iter().map(|r| r.reactant.get(i)).min().unwrap_or(0)).collect();
    let mut poly = RatPoly::zero();
    for (k, r) in net.reactions().iter().enumerate() {
        let mut term = RatPoly::constant(&rates[k] * &frame.multipliers[k]);
        for i in 0..s {
            let e = r.reactant.get(i) - min_exponents[i];
            if e > 0 {
                term = &term * &linear[i].pow(e);
            }
        }
        poly = &poly + &term;
    }
    Ok(ReducedSystem {
        poly,
        domain,
        direction_sign: sign(&q(frame.direction[p])),
        pivot: p,
        slopes: frame.slopes,
        offsets,
        direction: frame.direction,
        multipliers: frame.multipliers,
        min_exponents,
    })
}

/// `dx/dt` of a one-species network as a polynomial.
pub fn reduce_one_species(net: &Network, rates: &[Q]) -> Result<RatPoly, ReduceError> {
    check_rates(net, rates)?;
    assert_eq!(net.num_species(), 1, "one-species reduction");
    let mut poly = RatPoly::zero();
    for (k, r) in net.reactions().iter().enumerate() {
        let jump = q(r.product.get(0) as i64 - r.reactant.get(0) as i64);
        poly = &poly + &RatPoly::monomial(&rates[k] * jump, r.reactant.get(0) as usize);
    }
    Ok(poly)
}

/// Two-reaction reduction; the class is fixed by a point on it.
pub fn reduce_two_reaction(net: &Network, rates: &[Q], point: &[Q]) -> Result<ReducedSystem, ReduceError> {
    if point.len() != net.num_species() || point.iter().any(|x| !x.is_positive()) {
        return Err(ReduceError::BadPoint(net.num_species()));
    }
    let frame = line_frame(net)?;
    reduce_line(net, rates, &frame.offsets_through(point))
}

impl ReducedSystem {
    /// Coordinates of the class point with pivot coordinate `x`.
    pub fn point_at(&self, x: &Q) -> Vec<Q> {
        self.offsets.iter().zip(&self.slopes).map(|(c, g)| c + g * x).collect()
    }

    /// Per-species intervals for pivot coordinate in `(lo, hi)`.
    pub fn point_intervals(&self, lo: &Q, hi: &Q) -> Vec<(Q, Q)> {
        let a = self.point_at(lo);
        let b = self.point_at(hi);
        a.into_iter().zip(b).map(|(x, y)| if x <= y { (x, y) } else { (y, x) }).collect()
    }

    /// Checks, as a polynomial identity in the pivot coordinate, that the
    /// full mass-action right-hand side restricted to the class equals
    /// `direction * prod(x_i^min_i) * poly`.
    pub fn matches_full_system(&self, net: &Network, rates: &[Q]) -> bool {
        let s = net.num_species();
        let linear: Vec<RatPoly> = (0..s).map(|i| RatPoly::linear(self.offsets[i].clone(), self.slopes[i].clone())).collect();
        let mut common = RatPoly::one();
        for i in 0..s {
            common = &common * &linear[i].pow(self.min_exponents[i]);
        }
        let scaled = &common * &self.poly;
        (0..s).all(|i| {
            let mut rhs = RatPoly::zero();
            for (k, r) in net.reactions().iter().enumerate() {
                let vi = r.product.get(i) as i64 - r.reactant.get(i) as i64;
                if vi == 0 {
                    continue;
                }
                let mut term = RatPoly::constant(&rates[k] * q(vi));
                for (j, l) in linear.iter().enumerate() {
                    term = &term * &l.pow(r.reactant.get(j));
                }
                rhs = &rhs + &term;
            }
            rhs == scaled.scale(&q(self.direction[i]))
        })
    }
}
