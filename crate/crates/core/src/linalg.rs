//! Exact linear algebra over the rationals: rank, nullspace, and positive
//! dependency via a small simplex solver.

use num_traits::{One, Signed, Zero};

use crate::rational::{q, Q};

pub fn to_q_matrix(rows: &[Vec<i64>]) -> Vec<Vec<Q>> {
    rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Q::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Q>]) -> usize {
    let mut a = m.to_vec();
    rref(&mut a).len()
}

pub fn rank_int(m: &[Vec<i64>]) -> usize {
    rank(&to_q_matrix(m))
}

/// Basis of `{x : m x = 0}`.
pub fn nullspace(m: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -a[r][f].clone();
            }
            v
        })
        .collect()
}

/// Transpose of a list of column vectors into a row-major matrix.
pub fn columns_to_rows(cols: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cols.first().map_or(0, Vec::len);
    (0..n).map(|i| cols.iter().map(|c| c[i]).collect()).collect()
}

/// Finds `x >= 0` with `a x = b`, or `None` if infeasible. Phase-one simplex
/// with Bland's rule, so it terminates without cycling.
pub fn feasible_nonnegative(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    // tableau columns: n originals, m artificials, then rhs
    let width = n + m + 1;
    let mut t: Vec<Vec<Q>> = Vec::with_capacity(m + 1);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row = vec![Q::zero(); width];
        for j in 0..n {
            row[j] = if flip { -a[i][j].clone() } else { a[i][j].clone() };
        }
        row[n + i] = Q::one();
        row[n + m] = if flip { -b[i].clone() } else { b[i].clone() };
        t.push(row);
    }
    // objective: minimize the artificial sum, kept as reduced costs
    let mut obj = vec![Q::zero(); width];
    for row in &t {
        for j in 0..n {
            obj[j] -= &row[j];
        }
        obj[n + m] -= &row[n + m];
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    loop {
        let Some(enter) = (0..n + m).find(|&j| obj[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Q)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][n + m] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (p, _) = leave.expect("phase-one objective is bounded below");
        let inv = Q::one() / &t[p][enter];
        for x in t[p].iter_mut() {
            *x *= &inv;
        }
        let prow = t[p].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != p && !row[enter].is_zero() {
                let f = row[enter].clone();
                for j in 0..width {
                    row[j] -= &f * &prow[j];
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for j in 0..width {
                obj[j] -= &f * &prow[j];
            }
        }
        basis[p] = enter;
    }
    if !obj[n + m].is_zero() {
        return None;
    }
    let mut x = vec![Q::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i][n + m].clone();
        }
    }
    Some(x)
}

/// A strictly positive `lambda` with `sum lambda_k v_k = 0`, if one exists.
/// Every entry of the returned certificate is at least 1.
pub fn positive_dependency(vectors: &[Vec<i64>]) -> Option<Vec<Q>> {
    if vectors.is_empty() {
        return None;
    }
    // lambda = 1 + mu with mu >= 0:  sum mu_k v_k = -sum v_k
    let rows = columns_to_rows(vectors);
    let a = to_q_matrix(&rows);
    let b: Vec<Q> = rows.iter().map(|r| q(-r.iter().sum::<i64>())).collect();
    let mu = feasible_nonnegative(&a, &b)?;
    Some(mu.into_iter().map(|m| m + Q::one()).collect())
}

/// `Some(lambda)` with `lambda > 0` and `v = -lambda * w`.
pub fn negative_multiple(v: &[i64], w: &[i64]) -> Option<Q> {
    match scalar_multiple(v, w) {
        Some(c) if c.is_negative() => Some(-c),
        _ => None,
    }
}

/// `Some(c)` with `c != 0` and `v = c * w`, for nonzero `v`, `w`.
pub fn scalar_multiple(v: &[i64], w: &[i64]) -> Option<Q> {
    assert_eq!(v.len(), w.len());
    let k = w.iter().position(|&x| x != 0)?;
    let c = Q::new(v[k].into(), w[k].into());
    if c.is_zero() {
        return None;
    }
    let ok = v.iter().zip(w).all(|(&a, &b)| q(a) == &c * q(b));
    ok.then_some(c)
}

pub fn mat_vec(rows: &[Vec<i64>], x: &[Q]) -> Vec<Q> {
    rows.iter()
        .map(|r| r.iter().zip(x).fold(Q::zero(), |acc, (&a, xi)| acc + q(a) * xi))
        .collect()
}
