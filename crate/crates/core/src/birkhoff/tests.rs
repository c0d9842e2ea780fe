use super::*;
use crate::combinat::{all_compositions, enumerate_forests, enumerate_trees};
use crate::nck_hopf::{x_product, y_coproduct};
use crate::ncsf_qsym::{psi, psi_bar, signed_ribbon_key};
use crate::polyring::int;
use std::collections::BTreeMap;

fn a(k: u32) -> MultiPoly {
    MultiPoly::var(Var::A(k))
}

fn mono(ks: &[u32]) -> MultiPoly {
    ASpec::Generic.monomial(ks)
}

fn laurent(terms: &[(i32, MultiPoly)]) -> LaurentPoly {
    let mut l = LaurentPoly::zero();
    for (e, c) in terms {
        l.add_term(*e, c.clone());
    }
    l
}

fn tree(s: &str) -> PlaneTree {
    PlaneForest::parse(s).unwrap().as_tree().unwrap()
}

fn comp(s: &str) -> Composition {
    Composition::parse(s).unwrap()
}

#[test]
fn phi_plus_small_trees() {
    let g = ASpec::Generic;
    assert_eq!(phi_plus(&tree("0"), g).unwrap(), laurent(&[(-1, a(0))]));
    let mut b = Birkhoff::new(g, 3, 0);
    let ff = PlaneForest::parse("00").unwrap();
    assert_eq!(
        b.phi_plus_forest(&ff).unwrap(),
        laurent(&[(-2, mono(&[0, 0]))])
    );
    assert_eq!(
        phi_plus(&tree("10"), g).unwrap(),
        laurent(&[(-2, mono(&[0, 0])), (-1, mono(&[0, 1]))])
    );
    assert_eq!(
        phi_plus(&tree("200"), g).unwrap(),
        laurent(&[
            (-3, mono(&[0, 0, 0])),
            (-2, mono(&[0, 1, 0])),
            (-1, mono(&[0, 0, 2]))
        ])
    );
    assert_eq!(
        phi_plus(&tree("110"), g).unwrap(),
        laurent(&[
            (-3, mono(&[0, 0, 0])),
            (-2, mono(&[0, 1, 0]).add(&mono(&[0, 0, 1]))),
            (-1, mono(&[0, 1, 1]).add(&mono(&[0, 0, 2]))),
        ])
    );
    assert_eq!(phi_plus_closed(&tree("0"), g), laurent(&[(-1, a(0))]));
}

#[test]
fn recursion_matches_tamari_closed_form() {
    let mut cache = UpsetCache::new();
    for n in 1..=6 {
        let mut b = Birkhoff::new(ASpec::Generic, n, 0);
        for t in enumerate_trees(n) {
            let t = t.as_tree().unwrap();
            let closed = phi_plus_closed_with(&mut cache, &t, ASpec::Generic);
            assert_eq!(b.phi_plus(&t).unwrap(), closed, "{}", t.to_forest());
        }
    }
}

// Birkhoff recurrence on H_NCK with the Y coproduct, for all forests:
// φ^-(x) = -P_-(φ(x) + Σ' φ^-(x') φ(x'')) and φ^+(x) = P_+(same).
fn hopf_birkhoff(
    f: &PlaneForest,
    apow: &[LaurentPoly],
    order: i32,
    memo: &mut BTreeMap<PlaneForest, (LaurentPoly, LaurentPoly)>,
) -> (LaurentPoly, LaurentPoly) {
    if f.is_empty() {
        return (LaurentPoly::one(), LaurentPoly::one());
    }
    if let Some(v) = memo.get(f) {
        return v.clone();
    }
    let mut inner = apow[f.size()].clone();
    for (parts, c) in y_coproduct(f, 2).iter() {
        let (lo, hi) = (&parts[0], &parts[1]);
        if lo.is_empty() || hi.is_empty() {
            continue;
        }
        let (_, m) = hopf_birkhoff(lo, apow, order, memo);
        let term = truncate(&m.mul(&apow[hi.size()]), order);
        inner = inner.add(&term.scale(&int(*c)));
    }
    let v = (
        inner.polar_part(),
        truncate(&inner.regular_part().neg(), order),
    );
    memo.insert(f.clone(), v.clone());
    v
}

#[test]
fn matches_hopf_birkhoff_recurrence() {
    let order = 7;
    let a = ASpec::Generic.series(order);
    let mut apow = vec![LaurentPoly::one()];
    for k in 1..=5 {
        let next = truncate(&apow[k - 1].mul(&a), order);
        apow.push(next);
    }
    let mut memo = BTreeMap::new();
    for n in 1..=5 {
        let mut b = Birkhoff::new(ASpec::Generic, n, 2);
        for f in enumerate_forests(n) {
            let (p, m) = hopf_birkhoff(&f, &apow, order, &mut memo);
            assert_eq!(b.phi_plus_forest(&f).unwrap(), p, "{f}");
            assert_eq!(b.phi_minus_forest(&f).unwrap(), truncate(&m, 2), "{f}");
        }
    }
}

#[test]
fn factorization_identity() {
    for n in 1..=4 {
        let prec = n as i32 + 2;
        let lhs = sigma_plus(n, ASpec::Generic).unwrap();
        let a = ASpec::Generic.series(prec + n as i32 + 1);
        let mut rhs: XElem<LaurentPoly> = LinComb::zero();
        for k in 0..=n {
            let mut b = Birkhoff::new(ASpec::Generic, n, prec);
            let minus = if k == 0 {
                LinComb::basis(PlaneForest::empty())
            } else {
                b.sigma_minus(k).unwrap()
            };
            let mut ak = LaurentPoly::one();
            for _ in 0..n - k {
                ak = ak.mul(&a);
            }
            let sa: XElem<LaurentPoly> = enumerate_forests(n - k)
                .into_iter()
                .map(|f| (f, ak.clone()))
                .collect();
            rhs.add_assign(&x_product(&minus, &sa).unwrap());
        }
        let bound = prec - n as i32;
        for f in enumerate_forests(n) {
            assert_eq!(
                truncate(&lhs.get(&f), bound),
                truncate(&rhs.get(&f), bound),
                "{f}"
            );
        }
    }
}

#[test]
fn overflow_is_reported() {
    let mut b = Birkhoff::new(ASpec::Generic, 2, 0);
    assert!(matches!(b.phi_plus(&tree("1110")), Err(Error::Overflow(_))));
}

#[test]
fn series_c_and_d() {
    for n in 1..=5 {
        let c = series_c(n, ASpec::Generic).unwrap();
        let want: CElem<MultiPoly> = enumerate_forests(n)
            .into_iter()
            .map(|g| {
                let m = ASpec::Generic.monomial(g.polish_code());
                (g, m)
            })
            .collect();
        assert_eq!(c, want, "C, n={n}");
        let d = series_d(n, ASpec::Generic).unwrap();
        let want: CElem<MultiPoly> = enumerate_trees(n)
            .into_iter()
            .map(|t| {
                let m = ASpec::Generic.monomial(t.polish_code());
                (t, m)
            })
            .collect();
        assert_eq!(d, want, "D, n={n}");
        // trees only in the X basis as well
        assert!(c_to_x(&d).keys().all(|f| f.is_tree()));
        // D reassembled from the D_λ
        let mut sum: CElem<MultiPoly> = LinComb::zero();
        for lambda in Partition::all(n as u32 - 1) {
            let w = lambda.monomial(n, ASpec::Generic);
            sum.add_assign(
                &d_lambda(n, &lambda)
                    .unwrap()
                    .map_coeffs(|&k| MultiPoly::int(k).mul(&w)),
            );
        }
        assert_eq!(sum, d);
    }
    assert_eq!(
        series_d(1, ASpec::Generic).unwrap(),
        LinComb::term(PlaneForest::parse("0").unwrap(), a(0))
    );
}

#[test]
fn two_parameter_specialization() {
    let (sa, sb) = (MultiPoly::var(Var::Ab), MultiPoly::var(Var::B));
    for n in 1..=5 {
        let d = series_d(n, ASpec::Ab).unwrap();
        for (t, c) in d.iter() {
            let zeros = t.polish_code().iter().filter(|&&x| x == 0).count() as u32;
            let want = sa.pow(zeros).mul(&sb.pow(n as u32 - zeros));
            assert_eq!(*c, want, "{t}");
        }
    }
    // substituting a_0 -> a, a_k -> b in the generic D
    let g = series_d(4, ASpec::Generic).unwrap();
    let d = series_d(4, ASpec::Ab).unwrap();
    for (t, c) in g.iter() {
        let mut s = c.substitute(Var::A(0), &sa);
        for k in 1..4 {
            s = s.substitute(Var::A(k), &sb);
        }
        assert_eq!(s, d.get(t));
    }
}

fn ribbons(terms: &[(i64, &str)]) -> NsfElem<Rational> {
    NsfElem::new(
        NsfBasis::R,
        terms.iter().map(|&(c, i)| (comp(i), int(c))).collect(),
    )
}

#[test]
fn d_lambda_examples() {
    let p3 = Partition::parse("3").unwrap();
    assert_eq!(
        d_lambda(4, &p3).unwrap(),
        LinComb::basis(PlaneForest::parse("3000").unwrap())
    );
    assert!(d_lambda_ribbon(4, &p3).unwrap().same(&psi_bar(4)));
    let p111 = Partition::parse("111").unwrap();
    assert!(d_lambda_ribbon(4, &p111).unwrap().same(&psi(4)));
    let p21 = Partition::parse("21").unwrap();
    let want: CElem<i64> = ["2100", "2010", "1200"]
        .iter()
        .map(|c| (PlaneForest::parse(c).unwrap(), 1))
        .collect();
    assert_eq!(d_lambda(4, &p21).unwrap(), want);
    let printed = ribbons(&[(1, "4"), (-1, "22"), (1, "121"), (-1, "1111")])
        .add(&psi(4))
        .add(&psi_bar(4));
    assert!(d_lambda_ribbon(4, &p21).unwrap().same(&printed));
    assert!(matches!(
        d_lambda(4, &Partition::parse("2").unwrap()),
        Err(Error::InvalidPartition(_))
    ));
    // every D_λ lies in the image of Sym
    for n in 1..=5 {
        for l in Partition::all(n as u32 - 1) {
            assert!(d_lambda_ribbon(n, &l).is_ok(), "{l}");
        }
    }
}

fn eps(s: &str) -> SignWord {
    SignWord::parse(s).unwrap()
}

// (-)^k followed by `last`
fn signs(k: usize, minus: bool, last: Option<bool>) -> SignWord {
    let mut v = vec![minus; k];
    if let Some(l) = last {
        v.push(l);
    }
    SignWord::new(v)
}

#[test]
fn iterated_projections() {
    let g = ASpec::Generic;
    assert_eq!(
        p_i_epsilon(&comp("1"), &eps("+"), g, 0).unwrap(),
        laurent(&[(-1, a(0))])
    );
    // φ^+(M_112)
    let v = p_i_epsilon(&comp("112"), &eps("--+"), g, 0).unwrap();
    let want = laurent(&[
        (
            -1,
            mono(&[3, 0, 0, 0])
                .add(&mono(&[2, 1, 0, 0]).scale(&int(4)))
                .add(&mono(&[1, 1, 1, 0]).scale(&int(2))),
        ),
        (-2, mono(&[2, 0, 0, 0]).add(&mono(&[1, 1, 0, 0]))),
    ]);
    assert_eq!(v, want);
    assert_eq!(words_s(&comp("112")).len(), 9);
    // the first Birkhoff identities
    let prec = 6;
    let big = g.series(20);
    let pow = |k: u32| (0..k).fold(LaurentPoly::one(), |p, _| p.mul(&big));
    for n in 1..=3u32 {
        let minus_n = truncate(&pow(n).regular_part(), prec).neg();
        let via = p_i_epsilon(&Composition::row(n), &eps("-"), g, prec)
            .unwrap()
            .neg();
        assert_eq!(via, minus_n);
    }
    for (i, j) in [(1u32, 1u32), (1, 2), (2, 1)] {
        let inner = truncate(&pow(i).regular_part(), 20);
        let want = inner.mul(&pow(j)).polar_part().neg();
        let got = p_i_epsilon(&Composition::new(vec![i, j]).unwrap(), &eps("-+"), g, 0)
            .unwrap()
            .neg();
        assert_eq!(got, want);
    }
    assert!(p_i_epsilon(&comp("12"), &eps("+"), g, 0).is_err());
}

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn lc(c: i64) -> LaurentPoly {
    LaurentPoly::from_int(c)
}

#[test]
fn sigma_plus_expansions() {
    let g = ASpec::Generic;
    for n in 1..=4 {
        let want = sigma_plus(n, g).unwrap();
        let mut s_form: LinComb<Composition, LaurentPoly> = LinComb::zero();
        let mut l_form: LinComb<Composition, LaurentPoly> = LinComb::zero();
        for i in all_compositions(n) {
            let l = i.length();
            let p = p_i_epsilon(&i, &signs(l - 1, true, Some(false)), g, 0).unwrap();
            s_form.add_term(i.clone(), p.mul(&lc(sign(l - 1))));
            let p = p_i_epsilon(&i, &signs(l, false, None), g, 0).unwrap();
            l_form.add_term(i.clone(), p.mul(&lc(sign(n + l))));
        }
        let mut r_form: LinComb<Composition, LaurentPoly> = LinComb::zero();
        for e in SignWord::all(n - 1) {
            let mut full = e.clone();
            full.push(false);
            let p = p_i_epsilon(&Composition::column(n as u32), &full, g, 0).unwrap();
            r_form.add_term(signed_ribbon_key(&e), p);
        }
        assert_eq!(
            embed_x(&NsfElem::new(NsfBasis::S, s_form)),
            want,
            "S, n={n}"
        );
        assert_eq!(
            embed_x(&NsfElem::new(NsfBasis::Lambda, l_form)),
            want,
            "Λ, n={n}"
        );
        assert_eq!(
            embed_x(&NsfElem::new(NsfBasis::SignedR, r_form)),
            want,
            "R, n={n}"
        );
        assert_eq!(embed_x(&ribbon_from_words(n, g)), want, "words, n={n}");
    }
}

#[test]
fn sigma_minus_expansions() {
    let g = ASpec::Generic;
    let prec = 3;
    for n in 1..=4 {
        let want = sigma_minus(n, g, prec).unwrap();
        let mut s_form: LinComb<Composition, LaurentPoly> = LinComb::zero();
        let mut l_form: LinComb<Composition, LaurentPoly> = LinComb::zero();
        for i in all_compositions(n) {
            let l = i.length();
            let p = p_i_epsilon(&i, &signs(l, true, None), g, prec).unwrap();
            s_form.add_term(i.clone(), p.mul(&lc(sign(l))));
            let p = p_i_epsilon(&i, &signs(l - 1, false, Some(true)), g, prec).unwrap();
            l_form.add_term(i.clone(), p.mul(&lc(sign(n + l - 1))));
        }
        let mut r_form: LinComb<Composition, LaurentPoly> = LinComb::zero();
        for e in SignWord::all(n - 1) {
            let mut full = e.clone();
            full.push(true);
            let p = p_i_epsilon(&Composition::column(n as u32), &full, g, prec).unwrap();
            r_form.add_term(signed_ribbon_key(&e), p.neg());
        }
        assert_eq!(
            embed_x(&NsfElem::new(NsfBasis::S, s_form)),
            want,
            "S, n={n}"
        );
        assert_eq!(
            embed_x(&NsfElem::new(NsfBasis::Lambda, l_form)),
            want,
            "Λ, n={n}"
        );
        assert_eq!(
            embed_x(&NsfElem::new(NsfBasis::SignedR, r_form)),
            want,
            "R, n={n}"
        );
    }
}

fn ws(list: &str) -> Vec<Vec<u32>> {
    let mut v: Vec<Vec<u32>> = list
        .split_whitespace()
        .map(|w| w.chars().map(|c| c.to_digit(10).unwrap()).collect())
        .collect();
    v.sort();
    v
}

#[test]
fn word_classification() {
    let table = [
        ("000", "3"),
        ("001", "3"),
        ("010", "3"),
        ("100", "12"),
        ("002", "3"),
        ("020", "21"),
        ("200", "111"),
        ("011", "3"),
        ("101", "12"),
        ("110", "111"),
    ];
    for (w, i) in table {
        let w: Vec<u32> = w.chars().map(|c| c.to_digit(10).unwrap()).collect();
        assert_eq!(classify_word(&w), Some(comp(i)));
    }
    assert_eq!(all_words(3).len(), 10);
    let listing = [
        (
            "4",
            "0000 0100 0010 0001 0110 0101 0020 0011 0002 0111 0102 0021 0012 0003",
        ),
        ("31", "0120 0030"),
        ("22", "0200 0201"),
        ("13", "1000 1010 1001 1011 1002"),
        ("211", "0300 0210"),
        ("121", "1020"),
        ("112", "2000 1100 2001 1101"),
        ("1111", "3000 2100 2010 1200 1110"),
    ];
    let mut total = 0;
    for (i, list) in listing {
        let mut got = words_w(&comp(i));
        got.sort();
        assert_eq!(got, ws(list), "W({i})");
        total += got.len();
    }
    assert_eq!(total, 35);
    assert_eq!(all_words(4).len(), 35);
    assert_eq!(all_words(1), vec![vec![0]]);
    let mut s112 = words_s(&comp("112"));
    s112.sort();
    assert_eq!(s112, ws("3000 2100 2010 2001 1200 1110 1101 2000 1100"));
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn word_counts() {
    for n in 1..=7usize {
        assert_eq!(all_words(n).len() as u64, binom(2 * n as u64 - 1, n as u64));
        for i in all_compositions(n) {
            let w = words_w(&i);
            assert_eq!(w.len() as u64, catalan_block_count(&i), "{i}");
            assert!(w.iter().all(|x| classify_word(x) == Some(i.clone())));
            if n <= 5 {
                let mut s = words_s(&i);
                s.sort();
                let mut u: Vec<Vec<u32>> = i.refinements().iter().flat_map(words_w).collect();
                u.sort();
                assert_eq!(s, u, "S({i})");
            }
        }
    }
    assert_eq!(catalan_block_count(&comp("312")), 8);
    assert_eq!(catalan_block_count(&comp("3111")), 10);
    assert_eq!(words_w(&comp("312")).len(), 8);
    assert_eq!(words_w(&comp("3111")).len(), 10);
}

#[test]
fn w4111_listing() {
    let w = words_w(&comp("4111"));
    assert_eq!(w.len(), 25);
    let printed = ws(
        "0006000 0015000 0105000 0024000 0114000 0005100 0014100 0104100 0023100 0113100 \
         0005010 0014010 0104010 0023010 0113010 0004200 0013200 0103200 0022200 0112200 \
         0004110 0013110 0103100 0022110 0112110",
    );
    let typo = vec![0, 1, 0, 3, 1, 0, 0];
    for p in &printed {
        assert_eq!(w.contains(p), *p != typo, "{p:?}");
    }
    assert!(w.contains(&vec![0, 1, 0, 3, 1, 1, 0]));
}

#[test]
fn lattice_paths() {
    let w = [4, 0, 2, 0, 1, 2, 0, 0, 0, 1, 0];
    assert_eq!(partial_heights(&w), vec![3, 2, 3, 2, 2, 3, 2, 1, 0, 0, -1]);
    assert_eq!(word_to_path(&w), "aaaabbaabbabaabbbbabb");
    assert_eq!(word_to_path(&[0, 0, 0]), "bbb");
    assert_eq!(partial_heights(&[0, 0, 0]), vec![-1, -2, -3]);
    assert_eq!(word_to_path(&[0, 0, 0, 4, 2, 0, 0]), "bbbaaaabaabbb");
}
