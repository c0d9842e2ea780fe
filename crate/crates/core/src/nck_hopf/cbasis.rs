use super::{CElem, XElem};
use crate::lincomb::LinComb;
use crate::ring::Ring;
use crate::tamari::UpsetCache;

/// `C_F = sum of X_G over G <= F` in the Tamari order.
pub fn c_to_x<C: Ring>(u: &CElem<C>) -> XElem<C> {
    c_to_x_with(&mut UpsetCache::new(), u)
}

fn c_to_x_with<C: Ring>(cache: &mut UpsetCache, u: &CElem<C>) -> XElem<C> {
    let mut out = LinComb::zero();
    for (f, c) in u.iter() {
        for g in cache.downset(f) {
            out.add_term(g, c.clone());
        }
    }
    out
}

/// Inverse of [`c_to_x`]: peel off Tamari-maximal forests of the support
/// (smallest up-sets first).
pub fn x_to_c<C: Ring>(u: &XElem<C>) -> CElem<C> {
    let mut cache = UpsetCache::new();
    let mut rest = u.clone();
    let mut out = LinComb::zero();
    while let Some(top) = rest
        .keys()
        .min_by_key(|f| (cache.upset(f).len(), (*f).clone()))
        .cloned()
    {
        let c = rest.get(&top);
        let term: CElem<C> = LinComb::term(top, c);
        rest = rest.sub(&c_to_x_with(&mut cache, &term));
        out.add_assign(&term);
    }
    out
}
