use super::{NsfBasis, NsfElem, QsymBasis, QsymElem};
use crate::combinat::{enumerate_forests, Composition, LabelledForest, PlaneForest};
use crate::lincomb::LinComb;
use crate::nck_hopf::XElem;
use crate::ring::Ring;
use std::collections::BTreeMap;

/// Number of words of evaluation `eval` on the nodes of `lf` whose labels
/// weakly (or strictly) increase from each node to its parent.
fn labelling_count(lf: &LabelledForest, eval: &Composition, strict: bool) -> i64 {
    let n = lf.size();
    let mut left: Vec<u32> = eval.parts().to_vec();
    let mut u = vec![0usize; n];
    // parents come after children in postorder, so fill from the top down
    fn rec(i: usize, lf: &LabelledForest, left: &mut [u32], u: &mut [usize], strict: bool) -> i64 {
        if i == 0 {
            return 1;
        }
        let node = i - 1;
        let bound = lf.parent(node).map(|p| u[p]);
        let mut total = 0;
        for a in 0..left.len() {
            if left[a] == 0 {
                continue;
            }
            if let Some(b) = bound {
                if a > b || (strict && a == b) {
                    continue;
                }
            }
            left[a] -= 1;
            u[node] = a;
            total += rec(i - 1, lf, left, u, strict);
            left[a] += 1;
        }
        total
    }
    rec(n, lf, &mut left, &mut u, strict)
}

/// Ribbon shapes of the linear extensions of `f`, with multiplicity.
fn extension_shapes(f: &PlaneForest) -> BTreeMap<Composition, i64> {
    let mut out = BTreeMap::new();
    for s in f.linear_extensions() {
        *out.entry(s.ribbon_shape()).or_insert(0) += 1;
    }
    out
}

/// Image in the `X` basis. Each basis is embedded by its own combinatorial
/// rule: ribbon shapes of linear extensions for `R`, weakly increasing
/// labellings for `S`, strictly increasing ones for `Λ`.
pub fn embed_x<C: Ring>(e: &NsfElem<C>) -> XElem<C> {
    let mut by_size: BTreeMap<usize, Vec<(Composition, C)>> = BTreeMap::new();
    for (i, c) in e.terms.iter() {
        by_size
            .entry(i.weight() as usize)
            .or_default()
            .push((i.clone(), c.clone()));
    }
    let mut out = LinComb::zero();
    for (n, terms) in by_size {
        for f in enumerate_forests(n) {
            let mut coeff = C::zero();
            match e.basis {
                NsfBasis::R | NsfBasis::SignedR => {
                    let shapes = extension_shapes(&f);
                    for (i, c) in &terms {
                        let mut k = *shapes.get(i).unwrap_or(&0);
                        if e.basis == NsfBasis::SignedR && i.length() % 2 == 0 {
                            k = -k;
                        }
                        coeff.add_assign(&c.mul(&C::from_int(k)));
                    }
                }
                NsfBasis::S | NsfBasis::Lambda => {
                    let lf = LabelledForest::new(&f);
                    let strict = e.basis == NsfBasis::Lambda;
                    for (i, c) in &terms {
                        let k = labelling_count(&lf, i, strict);
                        coeff.add_assign(&c.mul(&C::from_int(k)));
                    }
                }
            }
            out.add_term(f, coeff);
        }
    }
    out
}

/// Commutative image `Γ_F(X)`, from the ribbon shapes of linear extensions.
pub fn gamma_qsym<C: Ring>(f: &PlaneForest) -> QsymElem<C> {
    let terms = extension_shapes(f)
        .into_iter()
        .map(|(i, k)| (i, C::from_int(k)))
        .collect();
    QsymElem::new(QsymBasis::F, terms)
}

/// `B(F_{i_1...i_r}) = F_{i_1,...,i_r + 1}` and `B(1) = F_1`.
pub fn b_operator<C: Ring>(e: &QsymElem<C>) -> QsymElem<C> {
    let f = e.convert(QsymBasis::F);
    let terms = f
        .terms
        .iter()
        .map(|(i, c)| {
            let mut p = i.parts().to_vec();
            match p.last_mut() {
                Some(l) => *l += 1,
                None => p.push(1),
            }
            (Composition::new_unchecked(p), c.clone())
        })
        .collect();
    QsymElem::new(QsymBasis::F, terms)
}

/// `Γ_F(X)` by the recursion `Γ_{B+(T_1...T_k)} = B(Γ_{T_1} ... Γ_{T_k})`.
pub fn gamma_qsym_recursive<C: Ring>(f: &PlaneForest) -> QsymElem<C> {
    let mut acc = QsymElem::one();
    for t in f.trees() {
        let g = b_operator(&gamma_qsym_recursive::<C>(&t.subforest()));
        acc = acc.mul(&g);
    }
    acc
}

/// `χ_F(X)`: coefficient of `M_I` is the number of strictly increasing
/// labellings of evaluation `I`.
pub fn chi_qsym<C: Ring>(f: &PlaneForest) -> QsymElem<C> {
    let lf = LabelledForest::new(f);
    let terms = crate::combinat::all_compositions(f.size())
        .into_iter()
        .map(|i| {
            let k = labelling_count(&lf, &i, true);
            (i, C::from_int(k))
        })
        .collect();
    QsymElem::new(QsymBasis::M, terms)
}
