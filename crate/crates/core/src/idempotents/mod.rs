//! Lie idempotents of the descent algebra and their expansions on the
//! forest basis `X_F`: the two Dynkin elements, the Solomon (first
//! Eulerian) idempotent and the higher Eulerian idempotents, the
//! `q`-interpolating family, and the polynomials `χ_T`.

mod group;

pub use group::{beta, quasi_idempotent_check, GroupAlgebraElem, GROUP_LIMIT};

use crate::combinat::{all_compositions, enumerate_forests, Composition, PlaneForest, PlaneTree};
use crate::lincomb::LinComb;
use crate::nck_hopf::XElem;
use crate::ncsf_qsym::{embed_x, eval_binomial, gamma_qsym, psi, psi_bar, NsfBasis, NsfElem};
use crate::polyring::{
    discrete_integral, gaussian_binomial, int, MultiPoly, Rational, RationalFn, Var,
};
use crate::ring::Ring;

/// The left and right Dynkin elements `(Ψ_n, Ψ̄_n)`, in the `R` basis.
pub fn dynkin(n: u32) -> (NsfElem<Rational>, NsfElem<Rational>) {
    (psi(n), psi_bar(n))
}

/// `(Ψ_n, Ψ̄_n)` on the forest basis: the chain and the sum of all trees.
pub fn dynkin_x(n: u32) -> (XElem<Rational>, XElem<Rational>) {
    let (p, pb) = dynkin(n);
    (embed_x(&p), embed_x(&pb))
}

/// `χ_T(t)`: `t` on every leaf, and at an internal node the discrete
/// integral of the product of its subtrees.
pub fn chi_tree(t: &PlaneTree) -> MultiPoly {
    if t.children.is_empty() {
        return MultiPoly::var(Var::T);
    }
    let prod = t
        .children
        .iter()
        .fold(MultiPoly::one(), |acc, c| acc.mul(&chi_tree(c)));
    discrete_integral(&prod)
}

/// `χ_F(t) = <Y_F, λ_1^t>`, multiplicative over the trees of `F`.
pub fn chi_poly(f: &PlaneForest) -> MultiPoly {
    f.trees()
        .iter()
        .fold(MultiPoly::one(), |acc, t| acc.mul(&chi_tree(t)))
}

/// `Γ_F(α)` on the binomial alphabet.
pub fn gamma_binomial(f: &PlaneForest) -> MultiPoly {
    eval_binomial(&gamma_qsym::<Rational>(f))
}

/// Eulerian idempotent `e_n^{(k)}`: the coefficient of `X_F` is
/// `[α^k] Γ_F(α)`. `k = 0` gives zero for `n > 0`.
pub fn eulerian(n: usize, k: u32) -> XElem<Rational> {
    enumerate_forests(n)
        .into_iter()
        .map(|f| {
            let c = gamma_binomial(&f).coeff_of(Var::Alpha, k);
            (f, c.as_constant().expect("constant coefficient"))
        })
        .collect()
}

/// Degree-`n` part of `log σ_1 = Σ (−1)^{ℓ(I)−1}/ℓ(I) S^I`, in the `S` basis.
pub fn solomon(n: u32) -> NsfElem<Rational> {
    let terms = all_compositions(n as usize)
        .into_iter()
        .map(|i| {
            let l = i.length() as i64;
            let sign = if l % 2 == 1 { 1 } else { -1 };
            (i, Rational::new(sign.into(), l.into()))
        })
        .collect();
    NsfElem::new(NsfBasis::S, terms)
}

pub fn solomon_x(n: u32) -> XElem<Rational> {
    embed_x(&solomon(n))
}

/// `(1/k!) Σ_{ℓ(I)=k} φ^I` computed in `NSym` from products of Solomon
/// elements; its image in the `X` basis is `e_n^{(k)}`.
pub fn eulerian_nsym(n: u32, k: u32) -> NsfElem<Rational> {
    let mut out = NsfElem::zero(NsfBasis::S);
    let mut fact = Rational::one();
    for i in 1..=k {
        fact = fact.mul(&int(i as i64));
    }
    for i in all_compositions(n as usize) {
        if i.length() != k as usize {
            continue;
        }
        let prod = i.parts().iter().fold(
            NsfElem::basis_elem(NsfBasis::S, Composition::empty()),
            |acc, &p| acc.mul(&solomon(p)),
        );
        out = out.add(&prod);
    }
    out.scale(&fact.recip())
}

/// `φ_n(q) = (1/n) Σ_{|I|=n} (−1)^{ℓ(I)−1} q^{maj(I) − C(ℓ(I),2)} /
/// [n−1, ℓ(I)−1]_q · R_I`.
pub fn q_solomon(n: u32) -> NsfElem<RationalFn> {
    let q = MultiPoly::var(Var::Q);
    let terms = all_compositions(n as usize)
        .into_iter()
        .map(|i| {
            let l = i.length() as u32;
            let e = i.maj() as u32 - l * (l - 1) / 2;
            let sign = if l % 2 == 1 { 1 } else { -1 };
            let c = RationalFn::new(
                q.pow(e).scale(&int(sign)),
                gaussian_binomial(n - 1, l - 1).scale(&int(n as i64)),
            );
            (i, c)
        })
        .collect();
    NsfElem::new(NsfBasis::R, terms)
}

/// `q_solomon(n)` at a numeric value of `q`.
pub fn q_solomon_at(n: u32, value: &Rational) -> NsfElem<Rational> {
    let v = RationalFn::constant(value.clone());
    q_solomon(n).map_coeffs(|c| {
        c.substitute(Var::Q, &v)
            .as_poly()
            .and_then(|p| p.as_constant())
            .expect("q-Solomon coefficient has no pole here")
    })
}

/// `ΔS^I` with `ΔS_n = Σ_{i+j=n} S_i ⊗ S_j`.
fn coproduct_s<C: Ring>(e: &NsfElem<C>) -> LinComb<(Composition, Composition), C> {
    let s = e.convert(NsfBasis::S);
    let mut out = LinComb::zero();
    for (i, c) in s.terms.iter() {
        let mut acc: LinComb<(Composition, Composition), C> =
            LinComb::basis((Composition::empty(), Composition::empty()));
        for &p in i.parts() {
            let mut next = LinComb::zero();
            for ((a, b), ca) in acc.iter() {
                for k in 0..=p {
                    let a2 = a.concat(&Composition::row(k));
                    let b2 = b.concat(&Composition::row(p - k));
                    next.add_term((a2, b2), ca.clone());
                }
            }
            acc = next;
        }
        out.add_scaled(&acc, c);
    }
    out
}

/// `Δe = e ⊗ 1 + 1 ⊗ e`.
pub fn is_primitive<C: Ring>(e: &NsfElem<C>) -> bool {
    let s = e.convert(NsfBasis::S);
    let mut d = coproduct_s(&s);
    let empty = Composition::empty();
    for (i, c) in s.terms.iter() {
        d.add_term((i.clone(), empty.clone()), c.neg());
        d.add_term((empty.clone(), i.clone()), c.neg());
    }
    d.is_zero()
}
