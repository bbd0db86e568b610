//! Univariate polynomials over the rationals and exact real-root isolation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::rational::{q, sign, Q};

/// Dense polynomial, coefficients in ascending degree. The zero polynomial
/// has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatPoly {
    coeffs: Vec<Q>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^deg`.
    pub fn monomial(c: Q, deg: usize) -> Self {
        let mut coeffs = vec![Q::zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(coeffs)
    }

    /// `a + b x`.
    pub fn linear(a: Q, b: Q) -> Self {
        Self::from_coeffs(vec![a, b])
    }

    pub fn from_coeffs(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| q(c)).collect())
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Q {
        self.coeffs.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.coeffs.get(i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * q(i as i64))
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lead = self.leading();
        self.scale(&(Q::one() / lead))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap();
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Q::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y);
            x = y;
            y = r.monic();
        }
        x.monic()
    }

    /// Yun's algorithm: returns `(f_k, k)` with `self = c * prod f_k^k`,
    /// each `f_k` monic, square-free and pairwise coprime. Constant factors
    /// are omitted.
    pub fn square_free_decomposition(&self) -> Vec<(RatPoly, usize)> {
        assert!(!self.is_zero());
        let mut out = Vec::new();
        if self.degree() == Some(0) {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = Self::gcd(&f, &df);
        let mut b = f.div_rem(&a0).0;
        let mut c = df.div_rem(&a0).0;
        let mut d = &c - &b.derivative();
        let mut k = 1;
        loop {
            let a = Self::gcd(&b, &d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), k));
            }
            b = b.div_rem(&a).0;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.div_rem(&a).0;
            d = &c - &b.derivative();
            k += 1;
        }
        out
    }

    /// Square-free part (product of the distinct irreducible factors).
    pub fn square_free_part(&self) -> Self {
        let g = Self::gcd(self, &self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Sign changes in the coefficient sequence, zeros skipped.
    pub fn sign_variations(&self) -> usize {
        count_variations(self.coeffs.iter().map(sign))
    }

    /// Canonical Sturm sequence `f, f', -rem(...), ...`.
    pub fn sturm_sequence(&self) -> Vec<RatPoly> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(-&r);
        }
        seq
    }
}

fn count_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut n = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

/// Positive integer multiple of a polynomial. Its sign at a rational point
/// is computed fraction-free, which is much cheaper than rational Horner.
struct SignPoly(Vec<BigInt>);

impl SignPoly {
    fn new(p: &RatPoly) -> Self {
        let l = p.coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        SignPoly(p.coeffs.iter().map(|c| (c * Q::from_integer(l.clone())).to_integer()).collect())
    }

    fn sequence(seq: &[RatPoly]) -> Vec<SignPoly> {
        seq.iter().map(SignPoly::new).collect()
    }

    /// Sign of `p(n/d)`, from `d^deg p(n/d) = sum c_i n^i d^(deg-i)`.
    fn sign_at(&self, x: &Q) -> i8 {
        let Some((top, rest)) = self.0.split_last() else {
            return 0;
        };
        let (n, d) = (x.numer(), x.denom());
        let mut acc = top.clone();
        let mut dpow = BigInt::one();
        for c in rest.iter().rev() {
            dpow *= d;
            acc = acc * n + c * &dpow;
        }
        match acc.sign() {
            num_bigint::Sign::Plus => 1,
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
        }
    }
}

fn sturm_variations_at(seq: &[SignPoly], x: &Q) -> usize {
    count_variations(seq.iter().map(|p| p.sign_at(x)))
}

/// Variations at +infinity read off the leading coefficients.
fn sturm_variations_at_infinity(seq: &[RatPoly]) -> usize {
    count_variations(seq.iter().map(|p| sign(&p.leading())))
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        RatPoly::from_coeffs(coeffs)
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        RatPoly::from_coeffs(coeffs)
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![Q::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(coeffs)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{}", mag)?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{}", i)?,
            }
        }
        Ok(())
    }
}

/// Open interval `(lo, hi)`; `hi = None` means `+infinity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Domain {
    pub lo: Q,
    pub hi: Option<Q>,
}

impl Domain {
    pub fn positive() -> Self {
        Domain { lo: Q::zero(), hi: None }
    }

    pub fn new(lo: Q, hi: Option<Q>) -> Self {
        Domain { lo, hi }
    }

    pub fn is_empty(&self) -> bool {
        matches!(&self.hi, Some(h) if *h <= self.lo)
    }

    pub fn contains(&self, x: &Q) -> bool {
        *x > self.lo && self.hi.as_ref().is_none_or(|h| x < h)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedRoot {
    /// The root lies strictly inside `(lo, hi)`; no other root of the
    /// polynomial lies in `[lo, hi]`.
    pub lo: Q,
    pub hi: Q,
    pub multiplicity: usize,
    /// Sign of the derivative at the root; 0 for multiple roots.
    pub derivative_sign: i8,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootError {
    #[error("the polynomial is identically zero")]
    ZeroPolynomial,
}

/// Upper bound `1 + max |a_i / a_n|` on the absolute value of every root.
pub fn cauchy_bound(p: &RatPoly) -> Q {
    let lead = p.leading().abs();
    let mut m = Q::zero();
    for c in &p.coeffs[..p.coeffs.len() - 1] {
        let r = c.abs() / &lead;
        if r > m {
            m = r;
        }
    }
    m + Q::one()
}

/// Finite bracket for the domain: roots of `p` in the domain lie in
/// `(lo, hi)` with `hi` finite.
fn finite_bracket(p: &RatPoly, dom: &Domain) -> (Q, Q) {
    let hi = match &dom.hi {
        Some(h) => h.clone(),
        None => {
            let b = cauchy_bound(p);
            if b > dom.lo {
                b
            } else {
                dom.lo.clone() + Q::one()
            }
        }
    };
    (dom.lo.clone(), hi)
}

/// Removes the linear factor `(x - r)` from a square-free `f` if `r` is a
/// root.
fn strip_root(f: &RatPoly, r: &Q) -> RatPoly {
    if f.eval(r).is_zero() {
        f.div_rem(&RatPoly::linear(-r.clone(), Q::one())).0
    } else {
        f.clone()
    }
}

/// Number of distinct roots of a square-free `f` in the open interval.
fn sturm_count(seq: &[SignPoly], a: &Q, b: &Q) -> usize {
    let va = sturm_variations_at(seq, a);
    let vb = sturm_variations_at(seq, b);
    va.saturating_sub(vb)
}

/// A point strictly inside `(a, b)` that is not a root of `f`.
fn split_point(f: &SignPoly, a: &Q, b: &Q) -> Q {
    let w = b - a;
    let mut k = 1i64;
    loop {
        // try 1/2, then 1/2 +- k/(2^(k+2)) style offsets
        for cand in [
            a + &w / q(2),
            a + &w * Q::new(k.into(), (2 * k + 1).into()),
            a + &w * Q::new((k + 1).into(), (2 * k + 1).into()),
        ] {
            if cand > *a && cand < *b && f.sign_at(&cand) != 0 {
                return cand;
            }
        }
        k += 1;
    }
}

/// Isolating intervals for the distinct roots of a square-free polynomial
/// in `(lo, hi)`; endpoints are never roots.
fn isolate_square_free(f: &RatPoly, lo: &Q, hi: &Q) -> Vec<(Q, Q)> {
    let mut g = strip_root(f, lo);
    g = strip_root(&g, hi);
    if g.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let seq = SignPoly::sequence(&g.sturm_sequence());
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone())];
    while let Some((a, b)) = stack.pop() {
        let n = sturm_count(&seq, &a, &b);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push((a, b));
            continue;
        }
        let m = split_point(&seq[0], &a, &b);
        stack.push((m.clone(), b));
        stack.push((a, m));
    }
    // `f` may have roots at the endpoints that were stripped; those are
    // outside the open interval and intentionally dropped. Interval
    // endpoints produced here are non-roots of `g` but may be roots of `f`
    // only at `lo`/`hi`.
    out.sort();
    out
}

/// Halves an isolating interval of a simple root of square-free `f`.
fn bisect_once(f: &RatPoly, fs: &SignPoly, lo: &Q, hi: &Q) -> (Q, Q) {
    let m = split_point(fs, lo, hi);
    let sm = fs.sign_at(&m);
    let (sl, sh) = (fs.sign_at(lo), fs.sign_at(hi));
    let left = if sh != 0 {
        sm == sh
    } else if sl != 0 {
        sm != sl
    } else {
        // both ends are roots of `f`; count inside the left half
        let g = strip_root(&strip_root(f, lo), hi);
        sturm_count(&SignPoly::sequence(&g.sturm_sequence()), lo, &m) == 1
    };
    if left {
        (lo.clone(), m)
    } else {
        (m, hi.clone())
    }
}

/// Isolates the roots of `poly` in an open domain, with multiplicities and
/// derivative signs. Intervals are refined to width at most `width`.
pub fn isolate_roots(poly: &RatPoly, dom: &Domain, width: &Q) -> Result<Vec<IsolatedRoot>, RootError> {
    if poly.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    if dom.is_empty() || poly.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let factors = poly.square_free_decomposition();
    let (lo, hi) = finite_bracket(poly, dom);
    // (factor index, lo, hi)
    let mut items: Vec<(usize, Q, Q)> = Vec::new();
    for (idx, (f, _)) in factors.iter().enumerate() {
        for (a, b) in isolate_square_free(f, &lo, &hi) {
            items.push((idx, a, b));
        }
    }
    // Refine until intervals are pairwise disjoint, narrow, and the full
    // polynomial is nonzero at every endpoint. Intervals only shrink, so a
    // finished interval stays finished.
    let signs: Vec<SignPoly> = factors.iter().map(|(f, _)| SignPoly::new(f)).collect();
    let whole = SignPoly::new(poly);
    items.sort_by(|x, y| x.1.cmp(&y.1));
    let mut done = vec![false; items.len()];
    loop {
        let mut changed = false;
        for i in 0..items.len() {
            if done[i] {
                continue;
            }
            let (idx, a, b) = items[i].clone();
            let overlaps = (i + 1 < items.len() && items[i + 1].1 <= b) || (i > 0 && items[i - 1].2 >= a);
            let bad_end = whole.sign_at(&a) == 0 || whole.sign_at(&b) == 0;
            if overlaps || bad_end || &b - &a > *width {
                let (na, nb) = bisect_once(&factors[idx].0, &signs[idx], &a, &b);
                items[i] = (idx, na, nb);
                changed = true;
            } else {
                done[i] = true;
            }
        }
        if !changed {
            break;
        }
        // order by left endpoint; disjoint intervals keep their order
        let mut order: Vec<usize> = (0..items.len()).collect();
        order.sort_by(|&x, &y| items[x].1.cmp(&items[y].1));
        items = order.iter().map(|&k| items[k].clone()).collect();
        done = order.iter().map(|&k| done[k]).collect();
    }
    let mut out = Vec::with_capacity(items.len());
    for (idx, a, b) in items {
        let k = factors[idx].1;
        let ds = if k == 1 { whole.sign_at(&b) } else { 0 };
        debug_assert!(k != 1 || whole.sign_at(&a) == -ds);
        out.push(IsolatedRoot { lo: a, hi: b, multiplicity: k, derivative_sign: ds });
    }
    Ok(out)
}

/// Default refinement width for reported isolating intervals.
pub fn default_width() -> Q {
    Q::new(1.into(), 1024.into())
}

/// Positive-root isolation with the sign-variation bound checked on every
/// call. The domain must lie inside `(0, infinity)`.
pub fn isolate_positive_roots(poly: &RatPoly, dom: &Domain) -> Result<Vec<IsolatedRoot>, RootError> {
    assert!(!dom.lo.is_negative(), "domain must lie in the positive half-line");
    let roots = isolate_roots(poly, dom, &default_width())?;
    let total: usize = roots.iter().map(|r| r.multiplicity).sum();
    assert!(
        total <= poly.sign_variations(),
        "root count {} exceeds the sign-variation bound {} for {}",
        total,
        poly.sign_variations(),
        poly
    );
    Ok(roots)
}

/// Number of distinct roots in the open domain, without isolating them.
pub fn count_distinct_roots(poly: &RatPoly, dom: &Domain) -> Result<usize, RootError> {
    if poly.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    if dom.is_empty() || poly.degree() == Some(0) {
        return Ok(0);
    }
    let g = poly.square_free_part();
    let (lo, hi) = finite_bracket(&g, dom);
    let g = strip_root(&strip_root(&g, &lo), &hi);
    if g.degree().unwrap_or(0) == 0 {
        return Ok(0);
    }
    let seq = SignPoly::sequence(&g.sturm_sequence());
    if dom.hi.is_none() && hi <= lo {
        return Ok(0);
    }
    Ok(sturm_count(&seq, &lo, &hi))
}

/// Real roots counted by Sturm's theorem over the whole positive half-line,
/// used as an independent check in tests.
pub fn count_positive_roots_sturm(poly: &RatPoly) -> usize {
    let g = strip_root(&poly.square_free_part(), &Q::zero());
    if g.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let seq = g.sturm_sequence();
    sturm_variations_at(&SignPoly::sequence(&seq), &Q::zero()).saturating_sub(sturm_variations_at_infinity(&seq))
}
