//! Birkhoff factorization `σ_a^+ = σ_a^- σ_a` of the character
//! `φ(M_n) = a^n` for `a(z) = Σ a_k z^{k-1}` and the polar-part projection,
//! the series `C` and `D`, the quasi-idempotents `D_λ`, the iterated
//! projections `P^I_ε` and the word model of the ribbon expansion.

mod words;

pub use words::{
    all_words, catalan_block_count, classify_word, partial_heights, ribbon_from_words,
    word_to_path, words_s, words_w,
};

use crate::combinat::{
    enumerate_forests, enumerate_trees, Composition, PlaneForest, PlaneTree, SignWord,
};
use crate::error::{Error, Result};
use crate::linalg::solve_in_span;
use crate::lincomb::LinComb;
use crate::nck_hopf::{c_to_x, x_to_c, CElem, XElem};
use crate::ncsf_qsym::{embed_x, NsfBasis, NsfElem};
use crate::polyring::{LaurentPoly, MultiPoly, Rational, Var};
use crate::ring::Ring;
use crate::tamari::UpsetCache;
use std::collections::HashMap;
use std::fmt;

/// The series `a(z)`: fully symbolic, or `a/z + b/(1-z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ASpec {
    #[default]
    Generic,
    Ab,
}

impl ASpec {
    /// The coefficient `a_k` of `z^{k-1}`.
    pub fn coeff(&self, k: u32) -> MultiPoly {
        match (self, k) {
            (ASpec::Generic, k) => MultiPoly::var(Var::A(k)),
            (ASpec::Ab, 0) => MultiPoly::var(Var::Ab),
            (ASpec::Ab, _) => MultiPoly::var(Var::B),
        }
    }

    /// Commutative product `a_{c_1} ... a_{c_n}`.
    pub fn monomial(&self, letters: &[u32]) -> MultiPoly {
        letters
            .iter()
            .fold(MultiPoly::one(), |acc, &c| acc.mul(&self.coeff(c)))
    }

    /// `a(z)` truncated to the exponents below `n`.
    pub fn series(&self, n: i32) -> LaurentPoly {
        let mut a = LaurentPoly::zero();
        for k in 0..=n.max(0) {
            if k - 1 < n {
                a.add_term(k - 1, self.coeff(k as u32));
            }
        }
        a
    }
}

/// Weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        parts.shrink_to_fit();
        Ok(Partition(parts))
    }

    /// Parts in any order are sorted.
    pub fn from_parts(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition(Vec::new()));
        }
        let parts: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|p| {
                    p.trim()
                        .parse()
                        .map_err(|_| Error::InvalidPartition(s.into()))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::InvalidPartition(s.into()))
                })
                .collect::<Result<_>>()?
        };
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// The partition of nonzero code entries of a tree.
    pub fn of_tree(t: &PlaneForest) -> Partition {
        let mut parts: Vec<u32> = t.polish_code().iter().copied().filter(|&c| c > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// `a_λ = a_0^{n - ℓ(λ)} a_{λ_1} ... a_{λ_r}` for trees with `n` nodes.
    pub fn monomial(&self, n: usize, spec: ASpec) -> MultiPoly {
        let mut letters = vec![0u32; n - self.0.len()];
        letters.extend_from_slice(&self.0);
        spec.monomial(&letters)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

fn truncate(f: &LaurentPoly, n: i32) -> LaurentPoly {
    f.truncated(n)
}

fn mul_trunc(f: &LaurentPoly, g: &LaurentPoly, n: i32) -> LaurentPoly {
    truncate(&f.mul(g), n)
}

/// The characters `φ^±` on plane trees, memoized.
///
/// Values of `φ^+` are polar and exact. Values of `φ^-` are power series,
/// returned exactly up to (excluding) `z^prec`.
pub struct Birkhoff {
    spec: ASpec,
    prec: i32,
    // internal truncation order
    order: i32,
    a: LaurentPoly,
    plus: HashMap<PlaneTree, LaurentPoly>,
    minus: HashMap<PlaneTree, LaurentPoly>,
}

impl Birkhoff {
    /// Characters valid on forests with at most `max_degree` nodes.
    pub fn new(spec: ASpec, max_degree: usize, prec: i32) -> Self {
        let order = prec.max(0) + max_degree as i32 + 1;
        Birkhoff {
            spec,
            prec: prec.max(0),
            order,
            a: spec.series(order),
            plus: HashMap::new(),
            minus: HashMap::new(),
        }
    }

    pub fn spec(&self) -> ASpec {
        self.spec
    }

    fn check(&self, size: usize) -> Result<()> {
        if size as i32 >= self.order - self.prec {
            return Err(Error::Overflow(self.order));
        }
        Ok(())
    }

    fn tree_values(&mut self, t: &PlaneTree) -> (LaurentPoly, LaurentPoly) {
        if let (Some(p), Some(m)) = (self.plus.get(t), self.minus.get(t)) {
            return (p.clone(), m.clone());
        }
        let below = self.forest_plus_unchecked(&t.subforest());
        let prod = mul_trunc(&below, &self.a, self.order);
        let p = prod.polar_part();
        let m = truncate(&prod.regular_part().neg(), self.prec);
        self.plus.insert(t.clone(), p.clone());
        self.minus.insert(t.clone(), m.clone());
        (p, m)
    }

    fn forest_plus_unchecked(&mut self, f: &PlaneForest) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for t in f.trees() {
            let (p, _) = self.tree_values(&t);
            acc = acc.mul(&p);
        }
        acc
    }

    /// `φ^+(Y_T) = P_+(φ^+(Y_F) a)` for `T = B_+(F)`.
    pub fn phi_plus(&mut self, t: &PlaneTree) -> Result<LaurentPoly> {
        self.check(t.size())?;
        Ok(self.tree_values(t).0)
    }

    /// `φ^-(Y_T) = -P_-(φ^+(Y_F) a)`, up to `z^prec`.
    pub fn phi_minus(&mut self, t: &PlaneTree) -> Result<LaurentPoly> {
        self.check(t.size())?;
        Ok(self.tree_values(t).1)
    }

    /// `φ^+` extended multiplicatively to forests.
    pub fn phi_plus_forest(&mut self, f: &PlaneForest) -> Result<LaurentPoly> {
        self.check(f.size())?;
        Ok(self.forest_plus_unchecked(f))
    }

    pub fn phi_minus_forest(&mut self, f: &PlaneForest) -> Result<LaurentPoly> {
        self.check(f.size())?;
        let mut acc = LaurentPoly::one();
        for t in f.trees() {
            let (_, m) = self.tree_values(&t);
            acc = mul_trunc(&acc, &m, self.prec);
        }
        Ok(acc)
    }

    /// Degree-`n` part of `σ_a^+ = Σ φ^+(Y_F) X_F`.
    pub fn sigma_plus(&mut self, n: usize) -> Result<XElem<LaurentPoly>> {
        let mut out = LinComb::zero();
        for f in enumerate_forests(n) {
            let v = self.phi_plus_forest(&f)?;
            out.add_term(f, v);
        }
        Ok(out)
    }

    /// Degree-`n` part of `σ_a^-`, coefficients up to `z^prec`.
    pub fn sigma_minus(&mut self, n: usize) -> Result<XElem<LaurentPoly>> {
        let mut out = LinComb::zero();
        for f in enumerate_forests(n) {
            let v = self.phi_minus_forest(&f)?;
            out.add_term(f, v);
        }
        Ok(out)
    }
}

/// `φ^+(Y_T)` by the recursion.
pub fn phi_plus(t: &PlaneTree, spec: ASpec) -> Result<LaurentPoly> {
    Birkhoff::new(spec, t.size(), 0).phi_plus(t)
}

/// `φ^-(Y_T)` up to `z^prec`.
pub fn phi_minus(t: &PlaneTree, spec: ASpec, prec: i32) -> Result<LaurentPoly> {
    Birkhoff::new(spec, t.size(), prec).phi_minus(t)
}

/// `φ^+(Y_T) = Σ_{F ≥ T} a_F z^{-r(F)}`, summed over the Tamari upset.
pub fn phi_plus_closed(t: &PlaneTree, spec: ASpec) -> LaurentPoly {
    phi_plus_closed_with(&mut UpsetCache::new(), t, spec)
}

pub fn phi_plus_closed_with(cache: &mut UpsetCache, t: &PlaneTree, spec: ASpec) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for g in cache.upset(&t.to_forest()) {
        out.add_term(
            -(g.num_roots() as i32),
            spec.monomial(&g.reverse_polish_code()),
        );
    }
    out
}

/// Degree-`n` part of `σ_a^+`.
pub fn sigma_plus(n: usize, spec: ASpec) -> Result<XElem<LaurentPoly>> {
    Birkhoff::new(spec, n, 0).sigma_plus(n)
}

/// Degree-`n` part of `σ_a^-`, coefficients up to `z^prec`.
pub fn sigma_minus(n: usize, spec: ASpec, prec: i32) -> Result<XElem<LaurentPoly>> {
    Birkhoff::new(spec, n, prec).sigma_minus(n)
}

/// `C = σ_a^+ |_{z=1}` in degree `n`, in the `C` basis.
pub fn series_c(n: usize, spec: ASpec) -> Result<CElem<MultiPoly>> {
    let s = sigma_plus(n, spec)?;
    Ok(x_to_c(&s.map_coeffs(|v| v.at_one())))
}

/// `D = Res_{z=0} σ_a^+` in degree `n`, in the `C` basis.
pub fn series_d(n: usize, spec: ASpec) -> Result<CElem<MultiPoly>> {
    let s = sigma_plus(n, spec)?;
    Ok(x_to_c(&s.map_coeffs(|v| v.residue())))
}

/// `D_λ = Σ C_T` over trees whose nonzero code entries form `λ ⊢ n-1`.
pub fn d_lambda(n: usize, lambda: &Partition) -> Result<CElem<i64>> {
    if n == 0 || lambda.weight() as usize != n - 1 {
        return Err(Error::InvalidPartition(format!(
            "{lambda} is not a partition of {}",
            n as i64 - 1
        )));
    }
    Ok(enumerate_trees(n)
        .into_iter()
        .filter(|t| Partition::of_tree(t) == *lambda)
        .map(|t| (t, 1))
        .collect())
}

pub fn d_lambda_x(n: usize, lambda: &Partition) -> Result<XElem<i64>> {
    Ok(c_to_x(&d_lambda(n, lambda)?))
}

/// Ribbon expansion of `D_λ`: the preimage under `embed_x`.
pub fn d_lambda_ribbon(n: usize, lambda: &Partition) -> Result<NsfElem<Rational>> {
    let x = d_lambda_x(n, lambda)?.map_coeffs(|&c| Rational::from_int(c));
    ribbon_preimage(&x, n).ok_or_else(|| Error::NotInImage(format!("D_{lambda}")))
}

/// Solves `embed_x(e) = x` for `e` in the ribbon basis of degree `n`.
pub fn ribbon_preimage(x: &XElem<Rational>, n: usize) -> Option<NsfElem<Rational>> {
    let comps = crate::combinat::all_compositions(n);
    let basis: Vec<XElem<Rational>> = comps
        .iter()
        .map(|i| embed_x(&NsfElem::<Rational>::basis_elem(NsfBasis::R, i.clone())))
        .collect();
    let coords = solve_in_span(&basis, x)?;
    let terms = comps.into_iter().zip(coords).collect();
    Some(NsfElem::new(NsfBasis::R, terms))
}

/// `P^I_ε(a) = P_{ε_r}(P^{I'}_{ε'}(a) a^{i_r})`, with `P_+` the polar part
/// and `P_-` the regular part. Regular results are exact up to `z^prec`.
pub fn p_i_epsilon(i: &Composition, eps: &SignWord, spec: ASpec, prec: i32) -> Result<LaurentPoly> {
    if eps.len() != i.length() {
        return Err(Error::SizeMismatch(eps.len(), i.length()));
    }
    let order = prec.max(0) + i.weight() as i32 + 1;
    let a = spec.series(order);
    let mut acc = LaurentPoly::one();
    for (k, &p) in i.parts().iter().enumerate() {
        let mut pw = LaurentPoly::one();
        for _ in 0..p {
            pw = mul_trunc(&pw, &a, order);
        }
        let prod = mul_trunc(&acc, &pw, order);
        acc = if eps.is_minus(k) {
            prod.regular_part()
        } else {
            prod.polar_part()
        };
    }
    Ok(truncate(&acc, prec.max(0)))
}

#[cfg(test)]
mod tests;
