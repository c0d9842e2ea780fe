//! Named invariant suites. Each suite runs a family of exact checks up to
//! a size bound and reports, per check, whether it held and the first
//! counterexample found.

use crate::birkhoff::{
    catalan_block_count, d_lambda_ribbon, ribbon_from_words, sigma_plus, words_w, ASpec, Birkhoff,
    Partition,
};
use crate::combinat::Composition;
use crate::combinat::{
    all_compositions, all_permutations, enumerate_forests, enumerate_trees, non_plane_class,
    LabelledForest, Permutation, PlaneForest,
};
use crate::ehrhart::{ehrhart_polynomial, eval_at, lattice_points, reciprocity_check, ForestPoset};
use crate::error::{Error, Result};
use crate::idempotents::{
    dynkin, eulerian, is_primitive, q_solomon, q_solomon_at, quasi_idempotent_check, solomon,
};
use crate::linalg::solve_in_span;
use crate::lincomb::LinComb;
use crate::nck_hopf::{
    dendriform, lambda_n, m_product, pattern_quotient_check, prelie_graft, s_n, x_coproduct,
    x_product, x_tau, y_coproduct, XElem,
};
use crate::ncsf_qsym::{embed_x, psi, sym_transform, xqt_m, xqt_m_opposite, NsfBasis, NsfElem};
use crate::polyring::{int, rat, LaurentPoly, MultiPoly, Rational, RationalFn, Var};
use crate::ring::Ring;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Hopf,
    Birkhoff,
    Dendriform,
    Prelie,
    SeriesInverse,
    Pattern132,
    Idempotents,
    QSeries,
    Ehrhart,
    Words,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Hopf,
        Suite::Birkhoff,
        Suite::Dendriform,
        Suite::Prelie,
        Suite::SeriesInverse,
        Suite::Pattern132,
        Suite::Idempotents,
        Suite::QSeries,
        Suite::Ehrhart,
        Suite::Words,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Hopf => "hopf",
            Suite::Birkhoff => "birkhoff",
            Suite::Dendriform => "dendriform",
            Suite::Prelie => "prelie",
            Suite::SeriesInverse => "series-inverse",
            Suite::Pattern132 => "pattern132",
            Suite::Idempotents => "idempotents",
            Suite::QSeries => "qseries",
            Suite::Ehrhart => "ehrhart",
            Suite::Words => "words",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }

    /// Size bound used when none is given.
    pub fn default_bound(&self) -> usize {
        match self {
            Suite::Hopf | Suite::Birkhoff | Suite::Idempotents | Suite::Ehrhart => 5,
            Suite::Dendriform | Suite::SeriesInverse | Suite::Pattern132 => 6,
            Suite::Prelie | Suite::QSeries => 4,
            Suite::Words => 7,
        }
    }

    /// Largest bound accepted.
    pub fn max_bound(&self) -> usize {
        match self {
            Suite::Hopf | Suite::Birkhoff | Suite::Idempotents => 6,
            Suite::Prelie | Suite::Ehrhart | Suite::QSeries => 6,
            Suite::Dendriform | Suite::SeriesInverse | Suite::Pattern132 => 7,
            Suite::Words => 9,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub counterexample: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub bound: usize,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

// Collects cases of one check, keeping the first failure.
struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    fn new() -> Self {
        Recorder { checks: Vec::new() }
    }

    fn check(&mut self, name: &str, cases: impl IntoIterator<Item = (String, bool)>) {
        let mut count = 0;
        let mut counterexample = None;
        for (label, ok) in cases {
            count += 1;
            if !ok {
                counterexample = Some(label);
                break;
            }
        }
        self.checks.push(Check {
            name: name.to_string(),
            cases: count,
            counterexample,
        });
    }
}

/// Runs a suite up to size `bound` (the suite default when `None`).
pub fn run(suite: Suite, bound: Option<usize>) -> Result<SuiteReport> {
    let n = bound.unwrap_or(suite.default_bound());
    if n > suite.max_bound() {
        return Err(Error::CostGuard {
            size: n,
            limit: suite.max_bound(),
        });
    }
    let mut r = Recorder::new();
    match suite {
        Suite::Hopf => hopf(&mut r, n)?,
        Suite::Birkhoff => birkhoff(&mut r, n)?,
        Suite::Dendriform => dendriform_suite(&mut r, n)?,
        Suite::Prelie => prelie(&mut r, n)?,
        Suite::SeriesInverse => series_inverse(&mut r, n)?,
        Suite::Pattern132 => pattern132(&mut r, n)?,
        Suite::Idempotents => idempotents(&mut r, n)?,
        Suite::QSeries => qseries(&mut r, n),
        Suite::Ehrhart => ehrhart(&mut r, n),
        Suite::Words => words(&mut r, n),
    }
    Ok(SuiteReport {
        suite,
        bound: n,
        checks: r.checks,
    })
}

fn xb(f: &PlaneForest) -> XElem<i64> {
    LinComb::basis(f.clone())
}

fn forests_upto(n: usize) -> Vec<PlaneForest> {
    (0..=n).flat_map(enumerate_forests).collect()
}

fn hopf(r: &mut Recorder, n: usize) -> Result<()> {
    let all = forests_upto(n);
    let mut assoc = Vec::new();
    let mut bialg = Vec::new();
    for a in &all {
        for b in all.iter().filter(|b| a.size() + b.size() <= n) {
            let ab = x_product(&xb(a), &xb(b))?;
            for c in all.iter().filter(|c| a.size() + b.size() + c.size() <= n) {
                let left = x_product(&ab, &xb(c))?;
                let right = x_product(&xb(a), &x_product(&xb(b), &xb(c))?)?;
                assoc.push((format!("({a})({b})({c})"), left == right));
            }
            let mut rhs = LinComb::zero();
            for ((a1, a2), c1) in x_coproduct(&xb(a)).iter() {
                for ((b1, b2), c2) in x_coproduct(&xb(b)).iter() {
                    let p1 = x_product(&xb(a1), &xb(b1))?;
                    let p2 = x_product(&xb(a2), &xb(b2))?;
                    for (g1, k1) in p1.iter() {
                        for (g2, k2) in p2.iter() {
                            rhs.add_term((g1.clone(), g2.clone()), c1 * c2 * k1 * k2);
                        }
                    }
                }
            }
            bialg.push((format!("Δ(X_{a} X_{b})"), x_coproduct(&ab) == rhs));
        }
    }
    r.check("x-product-associative", assoc);
    r.check("x-bialgebra-compatibility", bialg);

    let mut ymul = Vec::new();
    for a in &all {
        for b in all.iter().filter(|b| a.size() + b.size() <= n) {
            let mut rhs = LinComb::zero();
            for (p, c1) in y_coproduct(a, 2).iter() {
                for (q, c2) in y_coproduct(b, 2).iter() {
                    rhs.add_term(vec![p[0].concat(&q[0]), p[1].concat(&q[1])], c1 * c2);
                }
            }
            ymul.push((
                format!("Δ(Y_{a} Y_{b})"),
                y_coproduct(&a.concat(b), 2) == rhs,
            ));
        }
    }
    r.check("y-coproduct-multiplicative", ymul);

    let mut coassoc = Vec::new();
    for g in &all {
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for (p, c) in y_coproduct(g, 2).iter() {
            for (q, d) in y_coproduct(&p[0], 2).iter() {
                left.add_term(vec![q[0].clone(), q[1].clone(), p[1].clone()], c * d);
            }
            for (q, d) in y_coproduct(&p[1], 2).iter() {
                right.add_term(vec![p[0].clone(), q[0].clone(), q[1].clone()], c * d);
            }
        }
        coassoc.push((format!("Y_{g}"), left == right && left == y_coproduct(g, 3)));
    }
    r.check("y-coproduct-coassociative", coassoc);

    // <X_a X_b, Y_g> = <X_a ⊗ X_b, ΔY_g>, with ΔY_g counted from
    // admissible cuts (downward-closed subsets) rather than from words
    let mut dual = Vec::new();
    for g in &all {
        let lf = LabelledForest::new(g);
        let k = g.size();
        let mut counts: BTreeMap<(PlaneForest, PlaneForest), i64> = BTreeMap::new();
        for mask in 0..1u32 << k {
            let top: Vec<bool> = (0..k).map(|i| mask >> i & 1 == 1).collect();
            if lf.relations().iter().all(|&(i, j)| !top[i] || top[j]) {
                let low: Vec<bool> = top.iter().map(|b| !b).collect();
                *counts
                    .entry((lf.restrict(&low), lf.restrict(&top)))
                    .or_default() += 1;
            }
        }
        for ((a, b), c) in counts {
            let p = x_product(&xb(&a), &xb(&b))?;
            dual.push((format!("<X_{a} X_{b}, Y_{g}>"), p.get(g) == c));
        }
    }
    r.check("y-x-duality", dual);

    let trees: Vec<PlaneForest> = (1..=n).flat_map(enumerate_trees).collect();
    r.check(
        "trees-primitive",
        trees
            .iter()
            .map(|t| (format!("X_{t}"), x_coproduct(&xb(t)).len() == 2)),
    );
    Ok(())
}

fn birkhoff(r: &mut Recorder, n: usize) -> Result<()> {
    let mut cases = Vec::new();
    for m in 1..=n {
        let prec = m as i32 + 2;
        let lhs = sigma_plus(m, ASpec::Generic)?;
        let a = ASpec::Generic.series(prec + m as i32 + 1);
        let mut b = Birkhoff::new(ASpec::Generic, m, prec);
        let mut rhs: XElem<LaurentPoly> = LinComb::zero();
        let mut ak = LaurentPoly::one();
        for k in (0..=m).rev() {
            // ak = a^{m-k}
            let minus = if k == 0 {
                LinComb::basis(PlaneForest::empty())
            } else {
                b.sigma_minus(k)?
            };
            let sa: XElem<LaurentPoly> = enumerate_forests(m - k)
                .into_iter()
                .map(|f| (f, ak.clone()))
                .collect();
            rhs.add_assign(&x_product(&minus, &sa)?);
            ak = ak.mul(&a);
        }
        let bound = prec - m as i32;
        for f in enumerate_forests(m) {
            let ok = lhs.get(&f).truncated(bound) == rhs.get(&f).truncated(bound);
            cases.push((format!("σ⁺ = σ⁻σ_a at X_{f}"), ok));
        }
    }
    r.check("birkhoff-factorization", cases);
    Ok(())
}

fn dendriform_suite(r: &mut Recorder, n: usize) -> Result<()> {
    let all = forests_upto(n);
    let mut split = Vec::new();
    for a in all.iter().filter(|a| !a.is_empty()) {
        for b in all.iter().filter(|b| a.size() + b.size() <= n) {
            let (p, s) = dendriform(&xb(a), &xb(b))?;
            split.push((
                format!("X_{a} ≺ + ≻ X_{b}"),
                p.add(&s) == x_product(&xb(a), &xb(b))?,
            ));
        }
    }
    r.check("half-products-sum-to-product", split);

    let small = forests_upto(n.min(5));
    let mut axioms = Vec::new();
    for a in small.iter().filter(|f| !f.is_empty()) {
        for b in small
            .iter()
            .filter(|f| !f.is_empty() && a.size() + f.size() < n.min(5))
        {
            for c in small
                .iter()
                .filter(|f| !f.is_empty() && a.size() + b.size() + f.size() <= n.min(5))
            {
                let (xa, xb_, xc) = (xb(a), xb(b), xb(c));
                let prec = |u: &XElem<i64>, v: &XElem<i64>| dendriform(u, v).map(|d| d.0);
                let succ = |u: &XElem<i64>, v: &XElem<i64>| dendriform(u, v).map(|d| d.1);
                let bc = x_product(&xb_, &xc)?;
                let ab = x_product(&xa, &xb_)?;
                let ok = prec(&prec(&xa, &xb_)?, &xc)? == prec(&xa, &bc)?
                    && prec(&succ(&xa, &xb_)?, &xc)? == succ(&xa, &prec(&xb_, &xc)?)?
                    && succ(&ab, &xc)? == succ(&xa, &succ(&xb_, &xc)?)?;
                axioms.push((format!("({a}, {b}, {c})"), ok));
            }
        }
    }
    r.check("dendriform-axioms", axioms);

    let dot = xb(&PlaneForest::singletons(1));
    let mut rec = Vec::new();
    for m in 2..=n {
        let (_, succ) = dendriform(&s_n::<i64>(m - 1), &dot)?;
        let (prec, _) = dendriform(&dot, &lambda_n::<i64>(m - 1))?;
        rec.push((format!("S_{m} = S_{} ≻ X_•", m - 1), succ == s_n(m)));
        rec.push((format!("Λ_{m} = X_• ≺ Λ_{}", m - 1), prec == lambda_n(m)));
    }
    r.check("lambda-s-recursions", rec);
    Ok(())
}

fn prelie(r: &mut Recorder, n: usize) -> Result<()> {
    let trees: Vec<PlaneForest> = (1..=n).flat_map(enumerate_trees).collect();
    let mut comm = Vec::new();
    for s in &trees {
        for t in trees.iter().filter(|t| s.size() + t.size() <= n) {
            let (u, v) = (xb(s), xb(t));
            let lhs = prelie_graft(&u, &v)?.sub(&prelie_graft(&v, &u)?);
            let rhs = x_product(&u, &v)?.sub(&x_product(&v, &u)?);
            let (_, succ) = dendriform(&u, &v)?;
            let (prec, _) = dendriform(&v, &u)?;
            let ok = lhs == rhs && prelie_graft(&u, &v)? == succ.sub(&prec);
            comm.push((format!("[X_{s}, X_{t}]"), ok));
        }
    }
    r.check("commutator-is-grafting-difference", comm);

    let classes = |m: usize| {
        let mut v: Vec<_> = enumerate_trees(m)
            .into_iter()
            .map(|t| non_plane_class(&t.as_tree().expect("tree")).0)
            .collect();
        v.sort();
        v.dedup();
        v
    };
    let dot = classes(1).pop().expect("one-node tree");
    let mut closure = Vec::new();
    for m in 1..n {
        let basis: Vec<XElem<Rational>> = classes(m + 1).iter().map(x_tau).collect();
        for tau in classes(m) {
            let v: XElem<Rational> = prelie_graft(&x_tau(&dot), &x_tau(&tau))?;
            let ok = solve_in_span(&basis, &v).is_some_and(|c| c.iter().all(|x| x.is_integer()));
            closure.push((format!("x_• ▷ x_{tau}"), ok));
        }
    }
    r.check("x-tau-closure", closure);
    Ok(())
}

fn series_inverse(r: &mut Recorder, n: usize) -> Result<()> {
    let mut cases = Vec::new();
    for m in 1..=n {
        let mut total: XElem<i64> = LinComb::zero();
        for k in 0..=m {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            total.add_scaled(&x_product(&lambda_n::<i64>(k), &s_n::<i64>(m - k))?, &sign);
        }
        cases.push((format!("degree {m}"), total.is_zero()));
    }
    r.check("lambda-s-inverse", cases);
    Ok(())
}

fn pattern132(r: &mut Recorder, n: usize) -> Result<()> {
    let p12 = Permutation::parse("12")?;
    let check = pattern_quotient_check(&p12, &p12)?;
    let lc = |pairs: &[(&str, i64)]| -> Result<LinComb<Permutation, i64>> {
        pairs
            .iter()
            .map(|(s, c)| Ok((Permutation::parse(s)?, *c)))
            .collect()
    };
    let full = lc(&[
        ("1234", 1),
        ("1324", 2),
        ("1342", 1),
        ("1423", 1),
        ("2314", 1),
        ("2413", 1),
        ("3124", 1),
        ("3142", 1),
        ("3412", 2),
    ])?;
    let quotient = lc(&[("3412", 2), ("3124", 1), ("2314", 1), ("1234", 1)])?;
    r.check(
        "m12-m12-fixture",
        [
            ("full product".to_string(), check.full == full),
            ("quotient".to_string(), check.quotient == quotient),
            ("agrees with X product".to_string(), check.agrees),
        ],
    );

    let mut avoiders = Vec::new();
    for m in 0..=n {
        let mut inv: Vec<Permutation> = enumerate_forests(m)
            .iter()
            .map(|g| g.max_linear_extension().inverse())
            .collect();
        inv.sort();
        let mut want: Vec<Permutation> = all_permutations(m)
            .into_iter()
            .filter(|p| !p.contains_132())
            .collect();
        want.sort();
        avoiders.push((format!("n = {m}"), inv == want));
    }
    r.check("sigma-inverses-avoid-132", avoiders);

    let mut agree = Vec::new();
    for a in 1..=2 {
        for b in (1..=2).filter(|b| a + b <= n) {
            for fa in enumerate_forests(a) {
                for fb in enumerate_forests(b) {
                    let s1 = fa.max_linear_extension().inverse();
                    let s2 = fb.max_linear_extension().inverse();
                    agree.push((
                        format!("{fa} · {fb}"),
                        pattern_quotient_check(&s1, &s2)?.agrees,
                    ));
                }
            }
        }
    }
    let e = Permutation::identity(0);
    let u = Permutation::parse("231")?;
    agree.push(("unit".into(), m_product(&e, &u)? == LinComb::basis(u)));
    r.check("quotient-agrees-with-x-product", agree);
    Ok(())
}

fn idempotents(r: &mut Recorder, n: usize) -> Result<()> {
    let mut prim = Vec::new();
    let mut quasi = Vec::new();
    for m in 1..=n as u32 {
        let (p, pb) = dynkin(m);
        let mut elems = vec![
            (format!("Ψ_{m}"), p, Some(int(m as i64))),
            (format!("Ψ̄_{m}"), pb, Some(int(m as i64))),
            (format!("φ_{m}"), solomon(m), Some(int(1))),
        ];
        for l in Partition::all(m - 1) {
            elems.push((
                format!("D_{l} (n = {m})"),
                d_lambda_ribbon(m as usize, &l)?,
                None,
            ));
        }
        for (name, e, scalar) in elems {
            prim.push((name.clone(), is_primitive(&e)));
            let (ok, c) = quasi_idempotent_check(&e, m as usize)?;
            let ok = ok
                && match (&scalar, &c) {
                    (Some(want), Some(got)) => want == got,
                    (None, Some(got)) => !got.is_zero(),
                    _ => false,
                };
            quasi.push((name, ok));
        }
    }
    r.check("primitive", prim);
    r.check("group-algebra-quasi-idempotent", quasi);
    let mut sums = Vec::new();
    for m in 1..=n {
        let mut sum: XElem<Rational> = LinComb::zero();
        for k in 1..=m as u32 {
            sum.add_assign(&eulerian(m, k));
        }
        let s_m = embed_x(&NsfElem::basis_elem(
            NsfBasis::S,
            Composition::row(m as u32),
        ));
        sums.push((format!("Σ_k e_{m}^(k) = S_{m}"), sum == s_m));
    }
    r.check("eulerian-sum", sums);
    Ok(())
}

fn qseries(r: &mut Recorder, n: usize) {
    let q = MultiPoly::var(Var::Q);
    let qt = q.mul(&MultiPoly::var(Var::T));
    let mut feq = Vec::new();
    for m in 1..=n {
        for i in all_compositions(m) {
            // M_I(qt) = M_I(t) + M_{I'}(t) (qt)^{i_last}
            let lhs = xqt_m(&i).substitute_poly(Var::T, &qt);
            let (head, last) = i.split_last().expect("nonempty composition");
            let rhs = xqt_m(&i).add(&xqt_m(&head).mul(&RationalFn::from_poly(qt.pow(last))));
            feq.push((format!("M_{i}"), lhs == rhs));
        }
    }
    r.check("functional-equation", feq);
    let mut spec = Vec::new();
    let mut transform = Vec::new();
    for m in 1..=n as u32 {
        let at1 = q_solomon_at(m, &int(1)).same(&solomon(m).convert(NsfBasis::R));
        spec.push((format!("φ_{m}(1) = φ_{m}"), at1));
        let at0 = q_solomon_at(m, &int(0)).same(&psi(m).scale(&rat(1, m as i64)));
        spec.push((format!("φ_{m}(0) = Ψ_{m}/{m}"), at0));
        // (1 − q^m)/m · Ψ_m(A/(1 − q)), alphabet in the opposite order
        let p = psi(m).map_coeffs(|c| RationalFn::constant(c.clone()));
        let img = sym_transform(&p, |j| {
            xqt_m_opposite(j).substitute_poly(Var::T, &MultiPoly::zero())
        });
        let scale = RationalFn::new(MultiPoly::one().sub(&q.pow(m)), MultiPoly::int(m as i64));
        transform.push((format!("n = {m}"), img.scale(&scale).same(&q_solomon(m))));
    }
    r.check("q-solomon-specializations", spec);
    r.check("q-solomon-from-dynkin", transform);
}

fn ehrhart(r: &mut Recorder, n: usize) {
    let mut counts = Vec::new();
    let mut recip = Vec::new();
    for m in 1..=n {
        for f in enumerate_forests(m) {
            let p = ForestPoset::from_forest(&f);
            let e = ehrhart_polynomial(&p);
            for k in 0..=4u32 {
                let c = lattice_points(&p, k, false).len() as i64;
                counts.push((format!("E_{f}({k})"), eval_at(&e, k as i64) == int(c)));
                if k >= 1 {
                    recip.push((format!("{f}, n = {k}"), reciprocity_check(&p, k)));
                }
            }
        }
    }
    r.check("polynomial-counts-points", counts);
    r.check("reciprocity", recip);
}

fn words(r: &mut Recorder, n: usize) {
    let mut counts = Vec::new();
    for m in 1..=n {
        for i in all_compositions(m) {
            counts.push((
                format!("|W({i})|"),
                words_w(&i).len() as u64 == catalan_block_count(&i),
            ));
        }
    }
    r.check("catalan-block-product", counts);
    let mut ribbons = Vec::new();
    for m in 1..=n.min(5) {
        let ok = sigma_plus(m, ASpec::Generic)
            .map(|want| embed_x(&ribbon_from_words(m, ASpec::Generic)) == want)
            .unwrap_or(false);
        ribbons.push((format!("n = {m}"), ok));
    }
    r.check("ribbon-from-words", ribbons);
}
