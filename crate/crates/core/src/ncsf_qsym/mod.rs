//! Noncommutative symmetric functions (`S`, `Λ`, `R`, signed ribbons) and
//! quasi-symmetric functions (`M`, `F`), their images in the `X` basis and
//! the alphabet transforms.

mod alphabet;
mod embed;

pub use alphabet::{
    eval_binomial, eval_geometric, eval_xqt, eval_xqt_opposite, minus_x, omega, omega_candidate,
    psi, psi_bar, sym_transform, transform_1mq, transform_1pmq, xqt_m, xqt_m_opposite,
    OmegaCandidate,
};
pub use embed::{b_operator, chi_qsym, embed_x, gamma_qsym, gamma_qsym_recursive};

use crate::combinat::{Composition, SignWord};
use crate::lincomb::LinComb;
use crate::ring::Ring;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NsfBasis {
    S,
    Lambda,
    R,
    /// `R_{ε•}`, keyed by the composition whose descents are the minus signs.
    SignedR,
}

impl NsfBasis {
    pub fn symbol(&self) -> &'static str {
        match self {
            NsfBasis::S => "S",
            NsfBasis::Lambda => "Lambda",
            NsfBasis::R => "R",
            NsfBasis::SignedR => "Rs",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "S" => Some(NsfBasis::S),
            "Lambda" | "L" => Some(NsfBasis::Lambda),
            "R" => Some(NsfBasis::R),
            "Rs" | "signedR" => Some(NsfBasis::SignedR),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QsymBasis {
    M,
    F,
}

impl QsymBasis {
    pub fn symbol(&self) -> &'static str {
        match self {
            QsymBasis::M => "M",
            QsymBasis::F => "F",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "M" => Some(QsymBasis::M),
            "F" => Some(QsymBasis::F),
            _ => None,
        }
    }
}

/// Noncommutative symmetric function in one of the four bases.
#[derive(Clone, Debug, PartialEq)]
pub struct NsfElem<C: Ring> {
    pub basis: NsfBasis,
    pub terms: LinComb<Composition, C>,
}

/// Quasi-symmetric function in the monomial or fundamental basis.
#[derive(Clone, Debug, PartialEq)]
pub struct QsymElem<C: Ring> {
    pub basis: QsymBasis,
    pub terms: LinComb<Composition, C>,
}

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Key of `R_ε` for a sign word of length `n - 1`.
pub fn signed_ribbon_key(eps: &SignWord) -> Composition {
    eps.ribbon_composition()
}

// Expansion of one basis element on the ribbon basis.
fn to_ribbon(basis: NsfBasis, i: &Composition) -> Vec<(Composition, i64)> {
    match basis {
        NsfBasis::R => vec![(i.clone(), 1)],
        NsfBasis::SignedR => vec![(i.clone(), sign(i.length().saturating_sub(1)))],
        // S^I = sum of R_J over D(J) ⊆ D(I)
        NsfBasis::S => i.coarsenings().into_iter().map(|j| (j, 1)).collect(),
        // Λ^I = sum of R_J over D(J) ⊇ complement of D(I)
        NsfBasis::Lambda => i
            .complement()
            .refinements()
            .into_iter()
            .map(|j| (j, 1))
            .collect(),
    }
}

// Expansion of `R_J` on another basis.
fn from_ribbon(basis: NsfBasis, j: &Composition) -> Vec<(Composition, i64)> {
    match basis {
        NsfBasis::R => vec![(j.clone(), 1)],
        NsfBasis::SignedR => vec![(j.clone(), sign(j.length().saturating_sub(1)))],
        NsfBasis::S => j
            .coarsenings()
            .into_iter()
            .map(|k| {
                let e = j.length() - k.length();
                (k, sign(e))
            })
            .collect(),
        NsfBasis::Lambda => {
            if j.is_empty() {
                return vec![(j.clone(), 1)];
            }
            let n = j.weight() as usize;
            j.complement()
                .coarsenings()
                .into_iter()
                .map(|i| {
                    let e = n + 1 - i.length() - j.length();
                    (i, sign(e))
                })
                .collect()
        }
    }
}

fn expand<C: Ring>(
    terms: &LinComb<Composition, C>,
    f: impl Fn(&Composition) -> Vec<(Composition, i64)>,
) -> LinComb<Composition, C> {
    let mut out = LinComb::zero();
    for (k, c) in terms.iter() {
        for (j, s) in f(k) {
            out.add_term(j, c.mul(&C::from_int(s)));
        }
    }
    out
}

impl<C: Ring> NsfElem<C> {
    pub fn new(basis: NsfBasis, terms: LinComb<Composition, C>) -> Self {
        NsfElem { basis, terms }
    }

    pub fn basis_elem(basis: NsfBasis, i: Composition) -> Self {
        Self::new(basis, LinComb::basis(i))
    }

    pub fn zero(basis: NsfBasis) -> Self {
        Self::new(basis, LinComb::zero())
    }

    pub fn convert(&self, to: NsfBasis) -> Self {
        if to == self.basis {
            return self.clone();
        }
        let r = expand(&self.terms, |i| to_ribbon(self.basis, i));
        NsfElem::new(to, expand(&r, |j| from_ribbon(to, j)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let o = other.convert(self.basis);
        NsfElem::new(self.basis, self.terms.add(&o.terms))
    }

    pub fn scale(&self, c: &C) -> Self {
        NsfElem::new(self.basis, self.terms.scale(c))
    }

    /// Product, computed by concatenation in the `S` basis; the result is
    /// returned in the basis of `self`.
    pub fn mul(&self, other: &Self) -> Self {
        let a = self.convert(NsfBasis::S);
        let b = other.convert(NsfBasis::S);
        let p = a
            .terms
            .bilinear(&b.terms, |i, j| LinComb::basis(i.concat(j)));
        NsfElem::new(NsfBasis::S, p).convert(self.basis)
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> NsfElem<D> {
        NsfElem::new(self.basis, self.terms.map_coeffs(f))
    }

    /// Equality after conversion to a common basis.
    pub fn same(&self, other: &Self) -> bool {
        self.convert(NsfBasis::R).terms == other.convert(NsfBasis::R).terms
    }
}

pub fn convert<C: Ring>(e: &NsfElem<C>, to: NsfBasis) -> NsfElem<C> {
    e.convert(to)
}

pub fn qsym_convert<C: Ring>(e: &QsymElem<C>, to: QsymBasis) -> QsymElem<C> {
    e.convert(to)
}

/// Quasi-shuffles of two compositions, with multiplicity.
pub fn quasi_shuffle(a: &[u32], b: &[u32]) -> LinComb<Composition, i64> {
    fn rec(a: &[u32], b: &[u32], prefix: &mut Vec<u32>, out: &mut LinComb<Composition, i64>) {
        if a.is_empty() || b.is_empty() {
            let mut w = prefix.clone();
            w.extend_from_slice(a);
            w.extend_from_slice(b);
            out.add_term(Composition::new_unchecked(w), 1);
            return;
        }
        prefix.push(a[0]);
        rec(&a[1..], b, prefix, out);
        prefix.pop();
        prefix.push(b[0]);
        rec(a, &b[1..], prefix, out);
        prefix.pop();
        prefix.push(a[0] + b[0]);
        rec(&a[1..], &b[1..], prefix, out);
        prefix.pop();
    }
    let mut out = LinComb::zero();
    rec(a, b, &mut Vec::new(), &mut out);
    out
}

impl<C: Ring> QsymElem<C> {
    pub fn new(basis: QsymBasis, terms: LinComb<Composition, C>) -> Self {
        QsymElem { basis, terms }
    }

    pub fn basis_elem(basis: QsymBasis, i: Composition) -> Self {
        Self::new(basis, LinComb::basis(i))
    }

    pub fn one() -> Self {
        Self::basis_elem(QsymBasis::F, Composition::empty())
    }

    pub fn convert(&self, to: QsymBasis) -> Self {
        if to == self.basis {
            return self.clone();
        }
        let terms = match to {
            // F_I = sum of M_J over refinements J of I
            QsymBasis::M => expand(&self.terms, |i| {
                i.refinements().into_iter().map(|j| (j, 1)).collect()
            }),
            QsymBasis::F => expand(&self.terms, |i| {
                i.refinements()
                    .into_iter()
                    .map(|j| {
                        let e = j.length() - i.length();
                        (j, sign(e))
                    })
                    .collect()
            }),
        };
        QsymElem::new(to, terms)
    }

    pub fn add(&self, other: &Self) -> Self {
        let o = other.convert(self.basis);
        QsymElem::new(self.basis, self.terms.add(&o.terms))
    }

    pub fn scale(&self, c: &C) -> Self {
        QsymElem::new(self.basis, self.terms.scale(c))
    }

    /// Commutative product via the quasi-shuffle on `M`; returned in the
    /// basis of `self`.
    pub fn mul(&self, other: &Self) -> Self {
        let a = self.convert(QsymBasis::M);
        let b = other.convert(QsymBasis::M);
        let p = a.terms.bilinear(&b.terms, |i, j| {
            quasi_shuffle(i.parts(), j.parts()).map_coeffs(|&c| C::from_int(c))
        });
        QsymElem::new(QsymBasis::M, p).convert(self.basis)
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> QsymElem<D> {
        QsymElem::new(self.basis, self.terms.map_coeffs(f))
    }

    pub fn same(&self, other: &Self) -> bool {
        self.convert(QsymBasis::F).terms == other.convert(QsymBasis::F).terms
    }
}

fn fmt_terms<C: Ring + fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    sym: &str,
    terms: &LinComb<Composition, C>,
) -> fmt::Result {
    if terms.is_zero() {
        return write!(f, "0");
    }
    let mut first = true;
    for (k, c) in terms.iter() {
        if !first {
            write!(f, " + ")?;
        }
        first = false;
        if *c == C::one() {
            write!(f, "{sym}[{k}]")?;
        } else {
            write!(f, "({c})*{sym}[{k}]")?;
        }
    }
    Ok(())
}

impl<C: Ring + fmt::Display> fmt::Display for NsfElem<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.basis.symbol(), &self.terms)
    }
}

impl<C: Ring + fmt::Display> fmt::Display for QsymElem<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.basis.symbol(), &self.terms)
    }
}
