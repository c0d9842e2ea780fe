//! The noncommutative Connes-Kreimer Hopf algebra `H_NCK` in the `Y`
//! basis, its graded dual in the `X` basis, the `C` basis, the preLie,
//! brace and dendriform structures, and the realization in `FQSym`.

mod cbasis;
mod fqsym;
mod prelie;

pub use cbasis::{c_to_x, x_to_c};
pub use fqsym::{fqsym_product, gamma_fqsym, m_product, pattern_quotient_check, FQSYM_LIMIT};
pub use prelie::{brace, prelie_graft, x_tau};

use crate::combinat::{enumerate_forests, LabelledForest, PlaneForest};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::ring::Ring;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Element of `H_NCK` in the `Y` basis.
pub type YElem<C> = LinComb<PlaneForest, C>;
/// Element of the dual in the `X` basis.
pub type XElem<C> = LinComb<PlaneForest, C>;
/// Element of the dual in the `C` basis.
pub type CElem<C> = LinComb<PlaneForest, C>;

/// Largest forest size accepted by the product tables.
pub const PRODUCT_LIMIT: usize = 10;

/// Words `u` in `[r]^n` with `u_i <= u_j` whenever `i` is a descendant of
/// `j`, visited with their values in `1..=r`.
fn monotone_words(lf: &LabelledForest, r: u32, mut visit: impl FnMut(&[u32])) {
    let n = lf.size();
    let mut u = vec![0u32; n];
    // postorder labels put parents after children: assign top-down
    fn rec(i: usize, lf: &LabelledForest, r: u32, u: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
        if i == 0 {
            visit(u);
            return;
        }
        let node = i - 1;
        let top = lf.parent(node).map_or(r, |p| u[p]);
        for v in 1..=top {
            u[node] = v;
            rec(i - 1, lf, r, u, visit);
        }
    }
    rec(n, lf, r, &mut u, &mut visit);
}

/// `Delta^r Y_F`: the sum over monotone words `u` in `[r]^n` of
/// `Y_{F(1)} (x) ... (x) Y_{F(r)}`, `F(k)` the restriction to the nodes with
/// `u_i = k`.
pub fn y_coproduct(f: &PlaneForest, r: u32) -> LinComb<Vec<PlaneForest>, i64> {
    assert!(r >= 1, "iterated coproduct needs r >= 1");
    let lf = LabelledForest::new(f);
    let mut out = LinComb::zero();
    monotone_words(&lf, r, |u| {
        let parts = (1..=r)
            .map(|k| lf.restrict(&u.iter().map(|&x| x == k).collect::<Vec<_>>()))
            .collect();
        out.add_term(parts, 1);
    });
    out
}

/// Product in the `Y` basis: concatenation.
pub fn y_product<C: Ring>(u: &YElem<C>, v: &YElem<C>) -> YElem<C> {
    u.bilinear(v, |a, b| LinComb::basis(a.concat(b)))
}

/// Structure constants of `X_{F'} X_{F''}`: for each product term `X_F`,
/// the total coefficient and its split into the `≺` and `≻` halves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductTerm {
    pub forest: PlaneForest,
    pub count: i64,
    pub prec: i64,
    pub succ: i64,
}

type Table = HashMap<(PlaneForest, PlaneForest), Vec<ProductTerm>>;

fn table(n: usize) -> Result<Arc<Table>> {
    if n > PRODUCT_LIMIT {
        return Err(Error::CostGuard {
            size: n,
            limit: PRODUCT_LIMIT,
        });
    }
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Table>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("cache lock").get(&n) {
        return Ok(t.clone());
    }
    // transpose of the Y coproduct
    let mut acc: HashMap<(PlaneForest, PlaneForest), Vec<ProductTerm>> = HashMap::new();
    for f in enumerate_forests(n) {
        let lf = LabelledForest::new(&f);
        let mut local: HashMap<(PlaneForest, PlaneForest), (i64, i64)> = HashMap::new();
        monotone_words(&lf, 2, |u| {
            let a = lf.restrict(&u.iter().map(|&x| x == 1).collect::<Vec<_>>());
            let b = lf.restrict(&u.iter().map(|&x| x == 2).collect::<Vec<_>>());
            let e = local.entry((a, b)).or_default();
            e.0 += 1;
            if u.last() == Some(&1) {
                e.1 += 1;
            }
        });
        for (key, (count, prec)) in local {
            acc.entry(key).or_default().push(ProductTerm {
                forest: f.clone(),
                count,
                prec,
                succ: count - prec,
            });
        }
    }
    let t = Arc::new(acc);
    cache.lock().expect("cache lock").insert(n, t.clone());
    Ok(t)
}

/// `X_{F'} X_{F''}` with its dendriform split.
pub fn x_product_terms(a: &PlaneForest, b: &PlaneForest) -> Result<Vec<ProductTerm>> {
    let t = table(a.size() + b.size())?;
    let mut v = t.get(&(a.clone(), b.clone())).cloned().unwrap_or_default();
    v.sort_by(|x, y| x.forest.cmp(&y.forest));
    Ok(v)
}

fn x_bilinear<C: Ring>(
    u: &XElem<C>,
    v: &XElem<C>,
    pick: impl Fn(&ProductTerm) -> i64,
) -> Result<XElem<C>> {
    let mut out = LinComb::zero();
    for (a, ca) in u.iter() {
        for (b, cb) in v.iter() {
            let c = ca.mul(cb);
            for term in x_product_terms(a, b)? {
                let k = pick(&term);
                if k != 0 {
                    out.add_term(term.forest, c.mul(&C::from_int(k)));
                }
            }
        }
    }
    Ok(out)
}

/// Product in the `X` basis (transpose of the `Y` coproduct).
pub fn x_product<C: Ring>(u: &XElem<C>, v: &XElem<C>) -> Result<XElem<C>> {
    x_bilinear(u, v, |t| t.count)
}

/// Dendriform half-products `(u ≺ v, u ≻ v)`: a labelling counted in
/// `u v` goes to `u ≺ v` when the last node in postorder (the root of the
/// last tree) comes from `u`, and to `u ≻ v` otherwise. This gives
/// `X_T ≺ X_F = X_{FT}` and the unit rules `x ≺ 1 = x`, `1 ≻ x = x`,
/// `1 ≺ x = x ≻ 1 = 0`; `1 · 1` has no splitting.
pub fn dendriform<C: Ring>(u: &XElem<C>, v: &XElem<C>) -> Result<(XElem<C>, XElem<C>)> {
    let empty = PlaneForest::empty();
    if !u.get(&empty).is_zero() && !v.get(&empty).is_zero() {
        return Err(Error::Undefined(
            "dendriform half-products of 1 and 1".to_string(),
        ));
    }
    let prec = x_bilinear(u, v, |t| t.prec)?;
    let succ = x_bilinear(u, v, |t| t.succ)?;
    Ok((prec, succ))
}

/// Coproduct in the `X` basis: deconcatenation.
pub fn x_coproduct<C: Ring>(u: &XElem<C>) -> LinComb<(PlaneForest, PlaneForest), C> {
    let mut out = LinComb::zero();
    for (f, c) in u.iter() {
        for pair in f.deconcatenations() {
            out.add_term(pair, c.clone());
        }
    }
    out
}

/// `Lambda_n = X_{•...•}`.
pub fn lambda_n<C: Ring>(n: usize) -> XElem<C> {
    LinComb::basis(PlaneForest::singletons(n))
}

/// `S_n = sum of X_F over forests with n nodes`.
pub fn s_n<C: Ring>(n: usize) -> XElem<C> {
    enumerate_forests(n)
        .into_iter()
        .map(|f| (f, C::one()))
        .collect()
}

/// `B(X_F) = X_{B+(F)}`.
pub fn graft_x<C: Ring>(u: &XElem<C>) -> XElem<C> {
    u.map_keys(|f| f.graft())
}
