//! Order polytopes of forest posets: integral points, the noncommutative
//! Ehrhart polynomial in `WQSym`, reciprocity and `q`-counting.

use crate::combinat::{LabelledForest, PackedWord, PlaneForest};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::ncsf_qsym::{eval_binomial, gamma_qsym};
use crate::polyring::{binomial, int, MultiPoly, Rational, Var};
use std::fmt;

/// A poset on `{1..n}` (stored 0-based) whose Hasse diagram is a forest and
/// whose labelling is natural: `i <_P j ⇒ i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestPoset {
    parent: Vec<Option<usize>>,
    relations: Vec<(usize, usize)>,
}

impl ForestPoset {
    /// The poset of a forest in its postorder labelling.
    pub fn from_forest(f: &PlaneForest) -> Self {
        let lf = LabelledForest::new(f);
        let parent = (0..lf.size()).map(|i| lf.parent(i)).collect();
        Self::from_parents(parent)
    }

    fn from_parents(parent: Vec<Option<usize>>) -> Self {
        let lf = LabelledForest::from_parents(parent.clone());
        let mut relations = lf.relations();
        relations.sort_unstable();
        ForestPoset { parent, relations }
    }

    /// Builds a poset from covering or arbitrary relations `(i, j)` meaning
    /// `i <_P j`, 1-based. The transitive closure must have a forest as its
    /// Hasse diagram.
    pub fn new(n: usize, less: &[(usize, usize)]) -> Result<Self> {
        let bad =
            |why: &str| Error::Undefined(format!("not a naturally labelled forest poset: {why}"));
        let mut rel = vec![vec![false; n]; n];
        for &(i, j) in less {
            if i == 0 || j == 0 || i > n || j > n {
                return Err(bad("label out of range"));
            }
            if i >= j {
                return Err(bad("relation against the labelling"));
            }
            rel[i - 1][j - 1] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if rel[i][k] && rel[k][j] {
                        rel[i][j] = true;
                    }
                }
            }
        }
        // the parent is the smallest element above; the elements above
        // must form a chain
        let mut parent = vec![None; n];
        for i in 0..n {
            let above: Vec<usize> = (0..n).filter(|&j| rel[i][j]).collect();
            for w in above.windows(2) {
                if !rel[w[0]][w[1]] {
                    return Err(bad("Hasse diagram is not a forest"));
                }
            }
            parent[i] = above.first().copied();
        }
        Ok(Self::from_parents(parent))
    }

    pub fn size(&self) -> usize {
        self.parent.len()
    }

    /// All strict relations `(i, j)`, `i <_P j`, 0-based.
    pub fn relations(&self) -> &[(usize, usize)] {
        &self.relations
    }

    /// The underlying plane forest (children ordered by label).
    pub fn to_forest(&self) -> PlaneForest {
        LabelledForest::from_parents(self.parent.clone()).to_forest()
    }

    fn admits(&self, u: &[u32], strict: bool) -> bool {
        self.relations
            .iter()
            .all(|&(i, j)| if strict { u[i] < u[j] } else { u[i] <= u[j] })
    }
}

impl fmt::Display for ForestPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .parent
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.map(|p| format!("{}<{}", i + 1, p + 1)))
            .collect();
        write!(f, "P{}{{{}}}", self.size(), covers.join(","))
    }
}

/// Element of `WQSym` in the `M` basis.
pub type WqsymElem = LinComb<PackedWord, i64>;

fn all_words(len: usize, lo: u32, hi: u32, mut visit: impl FnMut(&[u32])) {
    fn rec(u: &mut Vec<u32>, len: usize, lo: u32, hi: u32, visit: &mut dyn FnMut(&[u32])) {
        if u.len() == len {
            visit(u);
            return;
        }
        for v in lo..=hi {
            u.push(v);
            rec(u, len, lo, hi, visit);
            u.pop();
        }
    }
    if lo > hi && len > 0 {
        return;
    }
    rec(&mut Vec::with_capacity(len), len, lo, hi, &mut visit);
}

/// Integral points of `nQ_P` (or of its interior), sorted.
pub fn lattice_points(p: &ForestPoset, n: u32, interior: bool) -> Vec<Vec<u32>> {
    let (lo, hi) = if interior {
        (1, n.saturating_sub(1))
    } else {
        (0, n)
    };
    if interior && n < 2 && p.size() > 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    all_words(p.size(), lo, hi, |u| {
        if p.admits(u, interior) {
            out.push(u.to_vec());
        }
    });
    out
}

fn packed_words(len: usize, mut visit: impl FnMut(&[u32])) {
    all_words(len, 1, len.max(1) as u32, |u| {
        let max = u.iter().copied().max().unwrap_or(0);
        if (1..=max).all(|k| u.contains(&k)) {
            visit(u);
        }
    });
}

/// `Σ_{u ∈ C(P)} M_u`, or with `signed` the strict version
/// `(−1)^n Γ_P(−A) = Σ_{u_i < u_j} M_u`.
pub fn gamma_wqsym(p: &ForestPoset, signed: bool) -> WqsymElem {
    let mut out = LinComb::zero();
    packed_words(p.size(), |u| {
        if p.admits(u, signed) {
            out.add_term(PackedWord::pack(u), 1);
        }
    });
    out
}

/// Packed words `v ≤ u`: `v` merges adjacent blocks of `u`.
pub fn coarser_packed_words(u: &PackedWord) -> Vec<PackedWord> {
    let m = u.max_letter();
    if m == 0 {
        return vec![u.clone()];
    }
    // each subset of the m-1 gaps between consecutive letters is merged
    (0..1u64 << (m - 1))
        .map(|mask| {
            let mut block = vec![0u32; m as usize];
            for k in 1..m as usize {
                block[k] = block[k - 1] + u32::from(mask >> (k - 1) & 1 == 0);
            }
            PackedWord::pack(
                &u.as_slice()
                    .iter()
                    .map(|&l| block[l as usize - 1])
                    .collect::<Vec<_>>(),
            )
        })
        .collect()
}

/// `M_u(−A) = (−1)^{max u} Σ_{v ≤ u} M_v`.
pub fn minus_a(e: &WqsymElem) -> WqsymElem {
    let mut out = LinComb::zero();
    for (u, c) in e.iter() {
        let sign = if u.max_letter() % 2 == 0 { 1 } else { -1 };
        for v in coarser_packed_words(u) {
            out.add_term(v, c * sign);
        }
    }
    out
}

/// `(−1)^n Γ_P(−A)` by the refinement-sum formula.
pub fn signed_gamma_by_refinement(p: &ForestPoset) -> WqsymElem {
    let g = minus_a(&gamma_wqsym(p, false));
    if p.size().is_multiple_of(2) {
        g
    } else {
        g.neg()
    }
}

/// `E_{Q_P}(x) = Γ_P(α)` at `α = x + 1`, as a polynomial in `x`.
pub fn ehrhart_polynomial(p: &ForestPoset) -> MultiPoly {
    let g = eval_binomial(&gamma_qsym::<Rational>(&p.to_forest()));
    let x1 = MultiPoly::var(Var::X).add(&MultiPoly::one());
    g.substitute(Var::Alpha, &x1)
}

/// Value of a polynomial in `x` at an integer.
pub fn eval_at(e: &MultiPoly, x: i64) -> Rational {
    e.evaluate(Var::X, &int(x))
        .as_constant()
        .expect("univariate in x")
}

/// Ehrhart reciprocity at `n`: the interior point count equals
/// `(−1)^{|P|} E(−n)` and the signed `WQSym` element evaluated on
/// `n − 1` letters.
pub fn reciprocity_check(p: &ForestPoset, n: u32) -> bool {
    let interior = lattice_points(p, n, true).len() as i64;
    let mut e = eval_at(&ehrhart_polynomial(p), -(n as i64));
    if p.size() % 2 == 1 {
        e = -e;
    }
    let letters = u64::from(n.saturating_sub(1));
    let from_words: num_bigint::BigInt = gamma_wqsym(p, true)
        .iter()
        .map(|(v, &c)| binomial(letters, u64::from(v.max_letter())) * c)
        .sum();
    e == int(interior) && from_words == interior.into()
}

/// Laurent polynomial in `q` with integer coefficients.
pub type QSeries = LinComb<i32, i64>;

pub fn format_qseries(s: &QSeries) -> String {
    if s.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (&e, &c) in s.iter() {
        let mag = c.unsigned_abs();
        out.push_str(match (out.is_empty(), c < 0) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        });
        match (e, mag) {
            (0, m) => out.push_str(&m.to_string()),
            (e, 1) => out.push_str(&qpow(e)),
            (e, m) => out.push_str(&format!("{m}*{}", qpow(e))),
        }
    }
    out
}

fn qpow(e: i32) -> String {
    if e == 1 {
        "q".into()
    } else {
        format!("q^{e}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QCountKind {
    Boundary,
    Interior,
}

/// `q`-count of the integral points of `nQ_P` by sum of coordinates
/// (`Γ_P(X_{q,q^n})`), or for the interior `Γ_P(X_{q,q^{−n}})
/// = (−1)^{|P|} Σ_{interior} q^{−Σ x_i}`.
pub fn q_count(p: &ForestPoset, n: u32, kind: QCountKind) -> QSeries {
    let interior = kind == QCountKind::Interior;
    let sign = if interior && p.size() % 2 == 1 { -1 } else { 1 };
    let mut out = LinComb::zero();
    for x in lattice_points(p, n, interior) {
        let s: i32 = x.iter().map(|&v| v as i32).sum();
        out.add_term(if interior { -s } else { s }, sign);
    }
    out
}
