use super::ASpec;
use crate::combinat::{catalan, Composition};
use crate::lincomb::LinComb;
use crate::ncsf_qsym::{NsfBasis, NsfElem};
use crate::polyring::{LaurentPoly, MultiPoly};

// Words of length n over the nonnegative integers whose partial sums satisfy
// `ok(k, w_{1:k})` for k = 1..n. Every partial sum stays below `n`.
fn words_with(n: usize, ok: impl Fn(usize, usize) -> bool) -> Vec<Vec<u32>> {
    fn rec(
        n: usize,
        sum: usize,
        w: &mut Vec<u32>,
        ok: &dyn Fn(usize, usize) -> bool,
        out: &mut Vec<Vec<u32>>,
    ) {
        if w.len() == n {
            out.push(w.clone());
            return;
        }
        let k = w.len() + 1;
        for x in 0..n - sum {
            if ok(k, sum + x) {
                w.push(x as u32);
                rec(n, sum + x, w, ok, out);
                w.pop();
            }
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
        return out;
    }
    rec(n, 0, &mut Vec::new(), &ok, &mut out);
    out
}

/// All words of length `n` with `w_{1:n} < n`; there are `binomial(2n-1, n)`.
pub fn all_words(n: usize) -> Vec<Vec<u32>> {
    words_with(n, |_, _| true)
}

/// `W(I)`: `w_{1:k} ≥ k` exactly when `k ∈ D(I)`, and `w_{1:n} < n`.
pub fn words_w(i: &Composition) -> Vec<Vec<u32>> {
    let n = i.weight() as usize;
    let d = i.descent_set();
    words_with(n, |k, s| (s >= k) == d.contains(&k))
}

/// `S(I)`: `w_{1:k} ≥ k` for `k ∈ D(I)` and `w_{1:n} < n`.
pub fn words_s(i: &Composition) -> Vec<Vec<u32>> {
    let n = i.weight() as usize;
    let d = i.descent_set();
    words_with(n, |k, s| !d.contains(&k) || s >= k)
}

/// The composition `I` with `w ∈ W(I)`, if `w_{1:n} < n`.
pub fn classify_word(w: &[u32]) -> Option<Composition> {
    let n = w.len();
    let mut sum = 0usize;
    let mut d = Vec::new();
    for (k, &x) in w.iter().enumerate() {
        sum += x as usize;
        if k + 1 < n && sum > k {
            d.push(k + 1);
        }
    }
    (sum < n).then(|| Composition::from_descent_set(n, &d))
}

/// Lattice path of a word: each entry `k` becomes `a^k b`.
pub fn word_to_path(w: &[u32]) -> String {
    let mut s = String::new();
    for &k in w {
        s.extend(std::iter::repeat_n('a', k as usize));
        s.push('b');
    }
    s
}

/// Partial sums of `w_i - 1`: the heights after each down-step.
pub fn partial_heights(w: &[u32]) -> Vec<i64> {
    let mut h = 0i64;
    w.iter()
        .map(|&k| {
            h += k as i64 - 1;
            h
        })
        .collect()
}

/// Product of Catalan numbers of the maximal constant-sign blocks of the
/// sign word of `I`.
pub fn catalan_block_count(i: &Composition) -> u64 {
    i.sign_word()
        .block_lengths()
        .into_iter()
        .map(catalan)
        .product()
}

/// `σ_a^+` in degree `n` assembled from words: each `w ∈ W(I)` contributes
/// `(-1)^{ℓ(I)-1} a_w z^{w_{1:n} - n}` to the coefficient of `R_I`.
pub fn ribbon_from_words(n: usize, spec: ASpec) -> NsfElem<LaurentPoly> {
    let mut terms: LinComb<Composition, LaurentPoly> = LinComb::zero();
    for w in all_words(n) {
        let i = classify_word(&w).expect("total below n");
        let mut c: MultiPoly = spec.monomial(&w);
        if i.length().is_multiple_of(2) {
            c = c.neg();
        }
        let e = w.iter().sum::<u32>() as i32 - n as i32;
        terms.add_term(i, LaurentPoly::term(e, c));
    }
    NsfElem::new(NsfBasis::R, terms)
}
