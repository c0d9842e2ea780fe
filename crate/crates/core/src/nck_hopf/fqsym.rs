use super::{x_product, XElem};
use crate::combinat::{all_permutations, Permutation, PlaneForest};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::ring::Ring;
use std::collections::HashMap;

/// Largest permutation size handled by the `FQSym` routines.
pub const FQSYM_LIMIT: usize = 7;

fn guard(n: usize) -> Result<()> {
    if n > FQSYM_LIMIT {
        Err(Error::CostGuard {
            size: n,
            limit: FQSYM_LIMIT,
        })
    } else {
        Ok(())
    }
}

/// `Gamma_F = sum of F_sigma over the linear extensions of F`.
pub fn gamma_fqsym<C: Ring>(f: &PlaneForest) -> LinComb<Permutation, C> {
    f.linear_extensions()
        .into_iter()
        .map(|p| (p, C::one()))
        .collect()
}

fn shuffles(a: &[u32], b: &[u32], out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>) {
    if a.is_empty() && b.is_empty() {
        out.push(cur.clone());
        return;
    }
    if let Some((&x, rest)) = a.split_first() {
        cur.push(x);
        shuffles(rest, b, out, cur);
        cur.pop();
    }
    if let Some((&y, rest)) = b.split_first() {
        cur.push(y);
        shuffles(a, rest, out, cur);
        cur.pop();
    }
}

/// Product of `FQSym` in the `F` basis: shifted shuffle.
pub fn fqsym_product<C: Ring>(
    u: &LinComb<Permutation, C>,
    v: &LinComb<Permutation, C>,
) -> Result<LinComb<Permutation, C>> {
    let mut out = LinComb::zero();
    for (a, ca) in u.iter() {
        for (b, cb) in v.iter() {
            guard(a.len() + b.len())?;
            let shifted = b.shifted(a.len() as u32);
            let mut words = Vec::new();
            shuffles(a.as_slice(), &shifted, &mut words, &mut Vec::new());
            let c = ca.mul(cb);
            for w in words {
                out.add_term(Permutation::from_vec_unchecked(w), c.clone());
            }
        }
    }
    Ok(out)
}

/// Möbius function `mu(rho, sigma)` of the weak order (position-inversion
/// containment) for all `sigma >= rho`.
fn mobius_from(rho: &Permutation, perms: &[Permutation]) -> HashMap<Permutation, i64> {
    let mut above: Vec<&Permutation> = perms
        .iter()
        .filter(|s| rho.position_inversions_within(s))
        .collect();
    above.sort_by_key(|s| s.num_inversions());
    let mut mu: HashMap<Permutation, i64> = HashMap::new();
    for s in above {
        let v = if s == rho {
            1
        } else {
            -mu.iter()
                .filter(|(t, _)| t.position_inversions_within(s))
                .map(|(_, m)| m)
                .sum::<i64>()
        };
        mu.insert(s.clone(), v);
    }
    mu
}

/// Product `M_alpha M_beta` in the basis dual to
/// `S^sigma = sum over tau <= sigma of G_tau` (weak order by
/// position-inversion containment, `G_tau = F_{tau^-1}`), computed by
/// dualizing the coproduct of the `S^gamma`.
pub fn m_product(alpha: &Permutation, beta: &Permutation) -> Result<LinComb<Permutation, i64>> {
    let (k, m) = (alpha.len(), beta.len());
    let n = k + m;
    guard(n)?;
    // G_rho = sum over alpha <= rho of mu(alpha, rho) S^alpha
    let mu_left = mobius_from(alpha, &all_permutations(k));
    let mu_right = mobius_from(beta, &all_permutations(m));
    let all = all_permutations(n);
    let mut out = LinComb::zero();
    for gamma in &all {
        // (k, m) component of Delta S^gamma in G (x) G
        let mut gg: HashMap<(Permutation, Permutation), i64> = HashMap::new();
        for tau in all.iter().filter(|t| t.position_inversions_within(gamma)) {
            let low: Vec<u32> = tau
                .as_slice()
                .iter()
                .copied()
                .filter(|&x| x as usize <= k)
                .collect();
            let high: Vec<u32> = tau
                .as_slice()
                .iter()
                .copied()
                .filter(|&x| x as usize > k)
                .collect();
            *gg.entry((
                Permutation::from_vec_unchecked(low),
                Permutation::standardize(&high),
            ))
            .or_default() += 1;
        }
        let coeff: i64 = gg
            .iter()
            .map(|((r1, r2), c)| {
                c * mu_left.get(r1).copied().unwrap_or(0) * mu_right.get(r2).copied().unwrap_or(0)
            })
            .sum();
        out.add_term(gamma.clone(), coeff);
    }
    Ok(out)
}

/// Result of comparing `M_{s1} M_{s2}` modulo 132-containing permutations
/// with the product of the corresponding `X_F`.
#[derive(Clone, Debug)]
pub struct QuotientCheck {
    pub full: LinComb<Permutation, i64>,
    pub quotient: LinComb<Permutation, i64>,
    /// The quotient read on forests via `M_{sigma_F^-1} <-> X_F`.
    pub as_forests: LinComb<PlaneForest, i64>,
    /// `X_{F1} X_{F2}` when both arguments avoid 132.
    pub x_product: Option<XElem<i64>>,
    pub agrees: bool,
}

fn forest_of(sigma_inv: &Permutation) -> Result<PlaneForest> {
    PlaneForest::from_max_extension(&sigma_inv.inverse())
}

pub fn pattern_quotient_check(s1: &Permutation, s2: &Permutation) -> Result<QuotientCheck> {
    let full = m_product(s1, s2)?;
    let quotient = full.filter(|p| !p.contains_132());
    let mut as_forests = LinComb::zero();
    for (p, c) in quotient.iter() {
        as_forests.add_term(forest_of(p)?, *c);
    }
    let x_product = match (forest_of(s1), forest_of(s2)) {
        (Ok(f1), Ok(f2)) if !s1.contains_132() && !s2.contains_132() => {
            Some(x_product(&LinComb::basis(f1), &LinComb::basis(f2))?)
        }
        _ => None,
    };
    let agrees = x_product.as_ref().is_some_and(|x| *x == as_forests);
    Ok(QuotientCheck {
        full,
        quotient,
        as_forests,
        x_product,
        agrees,
    })
}
