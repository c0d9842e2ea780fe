use super::XElem;
use crate::combinat::{NonPlaneTree, PlaneForest, PlaneTree};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::ring::Ring;

/// All trees obtained by grafting the trees of `seq`, in order, onto nodes
/// of `t` (including positions among existing children), the grafted trees
/// appearing in preorder in their original order.
fn brace_trees(seq: &[PlaneTree], t: &PlaneTree) -> Vec<PlaneTree> {
    // children list: g_0 c_1' g_1 c_2' ... c_k' g_k, with seq split into
    // consecutive blocks g_0, s_1, g_1, ..., s_k, g_k
    fn rec(
        seq: &[PlaneTree],
        kids: &[PlaneTree],
        out: &mut Vec<Vec<PlaneTree>>,
        prefix: Vec<PlaneTree>,
    ) {
        // choose g (grafted at this point) then the next child with its segment
        for g in 0..=seq.len() {
            let mut p = prefix.clone();
            p.extend_from_slice(&seq[..g]);
            let rest = &seq[g..];
            match kids.split_first() {
                None => {
                    if rest.is_empty() {
                        out.push(p);
                    }
                }
                Some((c, more)) => {
                    for s in 0..=rest.len() {
                        for c2 in brace_trees(&rest[..s], c) {
                            let mut q = p.clone();
                            q.push(c2);
                            rec(&rest[s..], more, out, q);
                        }
                    }
                }
            }
        }
    }
    let mut lists = Vec::new();
    rec(seq, &t.children, &mut lists, Vec::new());
    lists
        .into_iter()
        .map(|children| PlaneTree { children })
        .collect()
}

fn tree_of(f: &PlaneForest) -> Result<PlaneTree> {
    f.as_tree().map_err(|_| Error::NotATree(f.code_string()))
}

/// Brace `<X_{T_1...T_r}, X_T>`, extended bilinearly; the right argument
/// must be supported on trees.
pub fn brace<C: Ring>(u: &XElem<C>, v: &XElem<C>) -> Result<XElem<C>> {
    let mut out = LinComb::zero();
    for (t, ct) in v.iter() {
        let tree = tree_of(t)?;
        for (f, cf) in u.iter() {
            let c = cf.mul(ct);
            for g in brace_trees(&f.trees(), &tree) {
                out.add_term(g.to_forest(), c.clone());
            }
        }
    }
    Ok(out)
}

/// Right preLie product `X_{T1} ▷ X_{T2}`: graft `T1` at every position
/// under every node of `T2`.
pub fn prelie_graft<C: Ring>(u: &XElem<C>, v: &XElem<C>) -> Result<XElem<C>> {
    for f in u.keys() {
        tree_of(f)?;
    }
    brace(u, v)
}

/// `x_tau = |Aut tau| * sum of X_T over plane trees T of shape tau`.
pub fn x_tau<C: Ring>(tau: &NonPlaneTree) -> XElem<C> {
    let a = C::from_int(tau.aut_order() as i64);
    tau.plane_embeddings()
        .into_iter()
        .map(|t| (t.to_forest(), a.clone()))
        .collect()
}
