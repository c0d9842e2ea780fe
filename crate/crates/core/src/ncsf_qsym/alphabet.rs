use super::{NsfBasis, NsfElem, QsymBasis, QsymElem};
use crate::combinat::Composition;
use crate::lincomb::LinComb;
use crate::polyring::{MultiPoly, Rational, RationalFn, Var};
use crate::ring::Ring;

fn q() -> MultiPoly {
    MultiPoly::var(Var::Q)
}

fn q_pow(e: u32) -> MultiPoly {
    q().pow(e)
}

// 1 - q^k
fn one_minus_qk(k: u32) -> MultiPoly {
    MultiPoly::one().sub(&q_pow(k))
}

fn parity(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `e(−X)`: `M_I(−X) = (−1)^{ℓ(I)} Σ_{J ⪰ I} M_J`, the sum running over
/// the coarsenings of `I`.
pub fn minus_x<C: Ring>(e: &QsymElem<C>) -> QsymElem<C> {
    let m = e.convert(QsymBasis::M);
    let mut out = LinComb::zero();
    for (i, c) in m.terms.iter() {
        let s = C::from_int(parity(i.length()));
        for j in i.coarsenings() {
            out.add_term(j, c.mul(&s));
        }
    }
    QsymElem::new(QsymBasis::M, out).convert(e.basis)
}

/// Involutions of the fundamental basis considered for `ω`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OmegaCandidate {
    Reverse,
    Complement,
    Conjugate,
}

pub fn omega_candidate<C: Ring>(e: &QsymElem<C>, cand: OmegaCandidate) -> QsymElem<C> {
    let f = e.convert(QsymBasis::F);
    let terms = f.terms.map_keys(|i| match cand {
        OmegaCandidate::Reverse => i.reverse(),
        OmegaCandidate::Complement => i.complement(),
        OmegaCandidate::Conjugate => i.conjugate(),
    });
    QsymElem::new(QsymBasis::F, terms).convert(e.basis)
}

/// `ω(F_I) = F_{rev(I)}`: the image of `Γ` under the opposite coproduct.
pub fn omega<C: Ring>(e: &QsymElem<C>) -> QsymElem<C> {
    omega_candidate(e, OmegaCandidate::Reverse)
}

/// `binomial(α, k)` as a polynomial in `α`.
fn alpha_binomial(k: usize) -> MultiPoly {
    let a = MultiPoly::var(Var::Alpha);
    let mut p = MultiPoly::one();
    let mut fact = Rational::one();
    for i in 0..k {
        p = p.mul(&a.sub(&MultiPoly::int(i as i64)));
        fact = fact.mul(&Rational::from_int(i as i64 + 1));
    }
    p.scale(&fact.recip())
}

/// Evaluation on the binomial alphabet: `M_I(α) = binomial(α, ℓ(I))`.
pub fn eval_binomial(e: &QsymElem<Rational>) -> MultiPoly {
    let m = e.convert(QsymBasis::M);
    let mut out = MultiPoly::zero();
    for (i, c) in m.terms.iter() {
        out = out.add(&alpha_binomial(i.length()).scale(c));
    }
    out
}

/// Evaluation on the finite alphabet `1 < q < ... < q^n`.
pub fn eval_geometric(e: &QsymElem<Rational>, n: u32) -> MultiPoly {
    fn rec(parts: &[u32], lo: u32, n: u32, acc: &MultiPoly, out: &mut MultiPoly) {
        let Some((&p, rest)) = parts.split_first() else {
            *out = out.add(acc);
            return;
        };
        for e in lo..=n {
            rec(rest, e + 1, n, &acc.mul(&q_pow(e * p)), out);
        }
    }
    let m = e.convert(QsymBasis::M);
    let mut out = MultiPoly::zero();
    for (i, c) in m.terms.iter() {
        let mut v = MultiPoly::zero();
        rec(i.parts(), 0, n, &MultiPoly::one(), &mut v);
        out = out.add(&v.scale(c));
    }
    out
}

// Common denominator prod_{k<=n} (1-q^k)^2 for the X_{q,t} coefficients.
fn common_den(n: u32) -> Vec<u32> {
    (1..=n).flat_map(|k| [k, k]).collect()
}

fn den_poly(factors: &[u32]) -> MultiPoly {
    factors
        .iter()
        .fold(MultiPoly::one(), |acc, &k| acc.mul(&one_minus_qk(k)))
}

// Removes from `den` every factor that divides the numerator exactly.
fn reduce(num: MultiPoly, mut den: Vec<u32>) -> RationalFn {
    let mut num = num;
    if num.is_zero() {
        return RationalFn::zero();
    }
    let mut i = 0;
    while i < den.len() {
        match num.div_exact(&one_minus_qk(den[i])) {
            Some(r) => {
                num = r;
                den.remove(i);
            }
            None => i += 1,
        }
    }
    RationalFn::new(num, den_poly(&den))
}

// Numerator of M_I(X_{q,t}) over `common_den(|I|)`.
//
// The σ-factors `σ_{q^i}` (i ascending) each take one part; the λ-factors
// `λ_{−q^j t}` (j ≥ 1, descending) each take a nonempty block of the
// remaining parts, contributing `(q^j t)^{|block|}` and a sign per part.
fn xqt_numerator(i: &Composition) -> MultiPoly {
    let parts = i.parts();
    let n = i.weight();
    let r = parts.len();
    let den_all = common_den(n);
    let mut out = MultiPoly::zero();
    for p in 0..=r {
        let (head, rest) = parts.split_at(p);
        // ascending exponents e_1 < ... < e_p: suffix sums
        let mut asc_den = Vec::new();
        let mut asc_exp = 0u32;
        let mut s = 0u32;
        for (k, &x) in head.iter().enumerate().rev() {
            s += x;
            asc_den.push(s);
            if k > 0 {
                asc_exp += s;
            }
        }
        let w_rest: u32 = rest.iter().sum();
        let t_part = MultiPoly::var(Var::T)
            .pow(w_rest)
            .mul(&q_pow(w_rest))
            .scale(&Rational::from_int(parity(rest.len())));
        // blocks of `rest`: subsets of the internal cut points
        let cuts = rest.len().saturating_sub(1);
        let block_choices: Vec<u64> = if rest.is_empty() {
            vec![0]
        } else {
            (0..1u64 << cuts).collect()
        };
        for mask in block_choices {
            let mut desc_den = Vec::new();
            let mut desc_exp = 0u32;
            if !rest.is_empty() {
                let mut prefix = 0u32;
                for (k, &x) in rest.iter().enumerate() {
                    prefix += x;
                    let is_end = k + 1 == rest.len() || mask >> k & 1 == 1;
                    if is_end {
                        desc_den.push(prefix);
                        if k + 1 != rest.len() {
                            desc_exp += prefix;
                        }
                    }
                }
            }
            let mut den: Vec<u32> = den_all.clone();
            for k in asc_den.iter().chain(desc_den.iter()) {
                let pos = den
                    .iter()
                    .position(|d| d == k)
                    .expect("denominator factor outside (1-q^k)^2");
                den.remove(pos);
            }
            let term = q_pow(asc_exp + desc_exp).mul(&t_part).mul(&den_poly(&den));
            out = out.add(&term);
        }
    }
    out
}

/// `M_I(X_{q,t})` for the alphabet of `σ_1(X_{q,t}A) = Π→ σ_{q^i} Π← λ_{−q^j t}`.
pub fn xqt_m(i: &Composition) -> RationalFn {
    reduce(xqt_numerator(i), common_den(i.weight()))
}

/// Evaluation on `X_{q,t}`, a rational function in `q` and `t` whose
/// denominator is a product of factors `1 − q^k`.
pub fn eval_xqt(e: &QsymElem<Rational>) -> RationalFn {
    let m = e.convert(QsymBasis::M);
    let n = m.terms.keys().map(|i| i.weight()).max().unwrap_or(0);
    let den = common_den(n);
    let mut num = MultiPoly::zero();
    for (i, c) in m.terms.iter() {
        let mut extra = common_den(n);
        for k in common_den(i.weight()) {
            let pos = extra.iter().position(|&d| d == k).unwrap();
            extra.remove(pos);
        }
        num = num.add(&xqt_numerator(i).mul(&den_poly(&extra)).scale(c));
    }
    reduce(num, den)
}

/// Image of an element of `Sym` under the alphabet transform sending
/// `S_n` to `Σ_{|J|=n} m(J) S^J`; the result is in the `S` basis.
pub fn sym_transform(
    e: &NsfElem<RationalFn>,
    m: impl Fn(&Composition) -> RationalFn,
) -> NsfElem<RationalFn> {
    let s = e.convert(NsfBasis::S);
    let mut out = LinComb::zero();
    for (i, c) in s.terms.iter() {
        // product of the images of S_{i_1}, ..., S_{i_r}
        let mut acc: LinComb<Composition, RationalFn> = LinComb::basis(Composition::empty());
        for &p in i.parts() {
            let img: LinComb<Composition, RationalFn> =
                crate::combinat::all_compositions(p as usize)
                    .into_iter()
                    .map(|j| {
                        let v = m(&j);
                        (j, v)
                    })
                    .collect();
            acc = acc.bilinear(&img, |a, b| LinComb::basis(a.concat(b)));
        }
        out.add_scaled(&acc, c);
    }
    NsfElem::new(NsfBasis::S, out)
}

fn ribbon(parts: Vec<u32>) -> Composition {
    Composition::new(parts).expect("positive parts")
}

fn hook_transform(n: u32, ones_first: bool) -> NsfElem<MultiPoly> {
    let mut terms = LinComb::zero();
    let lead = MultiPoly::one().sub(&q());
    for k in 0..n {
        let mut parts = vec![1; k as usize];
        if ones_first {
            parts.push(n - k);
        } else {
            parts.insert(0, n - k);
        }
        let c = lead.mul(&q().neg().pow(k));
        terms.add_term(ribbon(parts), c);
    }
    NsfElem::new(NsfBasis::R, terms)
}

/// `S_n((1−q)A) = (1−q) Σ_k (−q)^k R_{1^k, n−k}`.
pub fn transform_1mq(n: u32) -> NsfElem<MultiPoly> {
    hook_transform(n, true)
}

/// `S_n((1+(−q))A) = (1−q) Σ_k (−q)^k R_{n−k, 1^k}`.
pub fn transform_1pmq(n: u32) -> NsfElem<MultiPoly> {
    hook_transform(n, false)
}

// Divide by 1 - q exactly, then set q = 1.
fn extract(e: &NsfElem<MultiPoly>) -> NsfElem<Rational> {
    let lead = MultiPoly::one().sub(&q());
    let terms = e
        .terms
        .iter()
        .map(|(i, c)| {
            let d = c.div_exact(&lead).expect("division by 1 - q must be exact");
            let v = d
                .evaluate(Var::Q, &Rational::one())
                .as_constant()
                .expect("constant after q = 1");
            (i.clone(), v)
        })
        .collect();
    NsfElem::new(e.basis, terms)
}

/// Dynkin element `Ψ_n`, extracted from `S_n((1−q)A)`.
pub fn psi(n: u32) -> NsfElem<Rational> {
    extract(&transform_1mq(n))
}

/// `Ψ̄_n`, extracted from `S_n((1+(−q))A)`.
pub fn psi_bar(n: u32) -> NsfElem<Rational> {
    extract(&transform_1pmq(n))
}

/// Evaluation on `(1−qt)/(1−q)` with the opposite ordering of its letters,
/// i.e. `M_I ↦ M_{rev(I)}(X_{q,t})`. At `t = 0` this is the usual `A/(1−q)`.
pub fn eval_xqt_opposite(e: &QsymElem<Rational>) -> RationalFn {
    let m = e.convert(QsymBasis::M);
    eval_xqt(&QsymElem::new(
        QsymBasis::M,
        m.terms.map_keys(|i| i.reverse()),
    ))
}

/// `M_I` of the opposite-order alphabet.
pub fn xqt_m_opposite(i: &Composition) -> RationalFn {
    xqt_m(&i.reverse())
}
