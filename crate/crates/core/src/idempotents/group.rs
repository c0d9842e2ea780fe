use crate::combinat::{all_permutations, Composition, Permutation};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::ncsf_qsym::{NsfBasis, NsfElem};
use crate::polyring::Rational;
use crate::ring::Ring;
use std::collections::HashMap;

/// Largest `n` accepted by the group-algebra computations.
pub const GROUP_LIMIT: usize = 6;

/// An element of `Q[S_n]`. The product is composition of maps,
/// `(σ·τ)(i) = σ(τ(i))`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupAlgebraElem {
    n: usize,
    terms: LinComb<Permutation, Rational>,
}

impl GroupAlgebraElem {
    pub fn new(n: usize, terms: LinComb<Permutation, Rational>) -> Result<Self> {
        if n > GROUP_LIMIT {
            return Err(Error::CostGuard {
                size: n,
                limit: GROUP_LIMIT,
            });
        }
        if let Some(p) = terms.keys().find(|p| p.len() != n) {
            return Err(Error::SizeMismatch(p.len(), n));
        }
        Ok(GroupAlgebraElem { n, terms })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &LinComb<Permutation, Rational> {
        &self.terms
    }

    pub fn scale(&self, c: &Rational) -> Self {
        GroupAlgebraElem {
            n: self.n,
            terms: self.terms.scale(c),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let mut acc: HashMap<Permutation, Rational> = HashMap::new();
        for (a, ca) in self.terms.iter() {
            for (b, cb) in other.terms.iter() {
                acc.entry(a.compose(b))
                    .or_insert_with(Rational::zero)
                    .add_assign(&ca.mul(cb));
            }
        }
        Ok(GroupAlgebraElem {
            n: self.n,
            terms: acc.into_iter().collect(),
        })
    }
}

/// `β(R_I) = Σ_{Des(σ) = D(I)} σ`, for a homogeneous element of degree `n`.
pub fn beta(e: &NsfElem<Rational>, n: usize) -> Result<GroupAlgebraElem> {
    if n > GROUP_LIMIT {
        return Err(Error::CostGuard {
            size: n,
            limit: GROUP_LIMIT,
        });
    }
    let r = e.convert(NsfBasis::R);
    if let Some(i) = r.terms.keys().find(|i| i.weight() as usize != n) {
        return Err(Error::SizeMismatch(i.weight() as usize, n));
    }
    let mut by_shape: HashMap<Composition, Vec<Permutation>> = HashMap::new();
    for s in all_permutations(n) {
        by_shape.entry(s.ribbon_shape()).or_default().push(s);
    }
    let mut terms = LinComb::zero();
    for (i, c) in r.terms.iter() {
        for s in by_shape.get(i).into_iter().flatten() {
            terms.add_term(s.clone(), c.clone());
        }
    }
    GroupAlgebraElem::new(n, terms)
}

/// Whether `β(e)² = c β(e)` for some scalar `c`, and that scalar (`None`
/// when the square is not proportional).
pub fn quasi_idempotent_check(e: &NsfElem<Rational>, n: usize) -> Result<(bool, Option<Rational>)> {
    let b = beta(e, n)?;
    let sq = b.mul(&b)?;
    let Some((k, bk)) = b.terms.iter().next() else {
        return Ok((true, Some(Rational::zero())));
    };
    let c = sq.terms.get(k).mul(&bk.recip());
    let ok = sq.terms == b.terms.scale(&c);
    Ok((ok, ok.then_some(c)))
}
