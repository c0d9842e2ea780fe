//! Exact linear algebra over the rationals.

use crate::lincomb::LinComb;
use crate::polyring::Rational;
use crate::ring::Ring;
use std::collections::BTreeMap;

/// Row-reduces `rows` in place; returns the pivot columns.
pub fn row_reduce(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (v, pv) in rows[i].iter_mut().zip(pivot_row) {
                    *v = &*v - &factor * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    row_reduce(&mut rows).len()
}

/// Solves `A x = b` (`A` given by rows); `None` if inconsistent. Free
/// variables are set to zero.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = aug[i][n].clone();
    }
    Some(x)
}

/// Coordinates of `target` in the span of `basis` (exact), if it lies there.
pub fn solve_in_span<K: Ord + Clone>(
    basis: &[LinComb<K, Rational>],
    target: &LinComb<K, Rational>,
) -> Option<Vec<Rational>> {
    let mut index: BTreeMap<K, usize> = BTreeMap::new();
    for v in basis.iter().chain(std::iter::once(target)) {
        for k in v.keys() {
            let next = index.len();
            index.entry(k.clone()).or_insert(next);
        }
    }
    let mut a = vec![vec![Rational::zero(); basis.len()]; index.len()];
    let mut b = vec![Rational::zero(); index.len()];
    for (j, v) in basis.iter().enumerate() {
        for (k, c) in v.iter() {
            a[index[k]][j] = c.clone();
        }
    }
    for (k, c) in target.iter() {
        b[index[k]] = c.clone();
    }
    solve(&a, &b)
}

/// Inverse of a square matrix, if invertible.
pub fn inverse(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}
