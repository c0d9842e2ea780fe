use crate::render::{element, sum_text, Output};
use crate::*;
use nck_core::birkhoff::{self as bk, ASpec, Birkhoff, Partition};
use nck_core::combinat::{enumerate_forests, enumerate_trees, Composition, PlaneForest};
use nck_core::ehrhart::{self as eh, ForestPoset, QCountKind};
use nck_core::idempotents as idem;
use nck_core::json::{lincomb, JsonCoeff};
use nck_core::nck_hopf::{c_to_x, dendriform, x_product, y_coproduct, XElem};
use nck_core::ncsf_qsym::{self as ns, NsfBasis, NsfElem, QsymBasis};
use nck_core::polyring::{parse_rational, MultiPoly, Rational, Var};
use nck_core::verify::{self, Suite};
use nck_core::{tamari, Error, LinComb, Result};
use serde_json::{json, Value};

pub fn run(cli: &Cli) -> Result<Output> {
    let g = Guard(cli.max_n);
    match &cli.command {
        Command::Forest(c) => forest(c, g),
        Command::Tamari(c) => tamari_cmd(c, g),
        Command::Hopf(c) => hopf(c, g),
        Command::Nsym(c) => nsym(c, g),
        Command::Birkhoff(c) => birkhoff(c, g),
        Command::Idem(c) => idem_cmd(c, g),
        Command::Ehrhart(c) => ehrhart(c, g),
        Command::Verify(a) => verify_cmd(a),
    }
}

#[derive(Clone, Copy)]
struct Guard(usize);

impl Guard {
    fn check(self, n: usize) -> Result<()> {
        if n > self.0 {
            return Err(Error::CostGuard {
                size: n,
                limit: self.0,
            });
        }
        Ok(())
    }

    fn forest(self, code: &str, reverse: bool) -> Result<PlaneForest> {
        let f = if reverse {
            PlaneForest::parse_reverse(code)?
        } else {
            PlaneForest::parse(code)?
        };
        self.check(f.size())?;
        Ok(f)
    }
}

fn seq(v: &[u32]) -> String {
    if v.iter().all(|&x| x < 10) {
        v.iter().map(|x| x.to_string()).collect()
    } else {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn code(f: &PlaneForest, reverse: bool) -> String {
    if reverse {
        seq(&f.reverse_polish_code())
    } else {
        f.code_string()
    }
}

fn codes<'a>(fs: impl IntoIterator<Item = &'a PlaneForest>, reverse: bool) -> Vec<String> {
    fs.into_iter().map(|f| code(f, reverse)).collect()
}

fn lines(v: &[String]) -> String {
    v.join("\n")
}

fn forest(c: &ForestCmd, g: Guard) -> Result<Output> {
    match c {
        ForestCmd::Parse(a) => {
            let f = g.forest(&a.code, a.reverse)?;
            let trees: Vec<String> = f.tree_forests().iter().map(|t| t.code_string()).collect();
            let sigma = f.max_linear_extension().to_string();
            let json = json!({
                "code": f.code_string(),
                "reverse_code": seq(&f.reverse_polish_code()),
                "size": f.size(),
                "trees": trees,
                "is_tree": f.is_tree(),
                "max_linear_extension": sigma,
            });
            let text = format!(
                "code {}\nreverse code {}\nsize {}\ntrees [{}]\nmax linear extension {}",
                f.code_string(),
                seq(&f.reverse_polish_code()),
                f.size(),
                trees.join(" "),
                sigma
            );
            Ok(Output::new(text, json))
        }
        ForestCmd::List { n, trees } => {
            g.check(*n)?;
            let fs = if *trees {
                enumerate_trees(*n)
            } else {
                enumerate_forests(*n)
            };
            let cs = codes(&fs, false);
            Ok(Output::new(
                lines(&cs),
                json!({ "n": n, "count": cs.len(), "forests": cs }),
            ))
        }
        ForestCmd::Extensions(a) => {
            let f = g.forest(&a.code, a.reverse)?;
            let ext: Vec<(String, String)> = f
                .linear_extensions()
                .iter()
                .map(|s| (s.to_string(), s.ribbon_shape().to_string()))
                .collect();
            let text = lines(
                &ext.iter()
                    .map(|(s, i)| format!("{s} R[{i}]"))
                    .collect::<Vec<_>>(),
            );
            let json = json!({
                "code": f.code_string(),
                "extensions": ext.iter().map(|(s, i)| json!({"permutation": s, "shape": i})).collect::<Vec<_>>(),
            });
            Ok(Output::new(text, json))
        }
    }
}

fn tamari_cmd(c: &TamariCmd, g: Guard) -> Result<Output> {
    let set = |base: &PlaneForest, elems: Vec<PlaneForest>, reverse: bool| {
        let cs = codes(&elems, reverse);
        let json = json!({ "base": code(base, reverse), "count": cs.len(), "elements": cs });
        Output::new(lines(&cs), json)
    };
    match c {
        TamariCmd::Up(a) => {
            let f = g.forest(&a.code, a.reverse)?;
            let up = tamari::upset(&f).elements.into_iter().collect();
            Ok(set(&f, up, a.reverse))
        }
        TamariCmd::Down(a) => {
            let f = g.forest(&a.code, a.reverse)?;
            let down = tamari::downset(&f).into_iter().collect();
            Ok(set(&f, down, a.reverse))
        }
        TamariCmd::Leq { a, b, reverse } => {
            let fa = g.forest(a, *reverse)?;
            let fb = g.forest(b, *reverse)?;
            let leq = tamari::leq(&fa, &fb)?;
            Ok(Output::new(
                leq.to_string(),
                json!({ "a": a, "b": b, "leq": leq }),
            ))
        }
    }
}

fn hopf(c: &HopfCmd, g: Guard) -> Result<Output> {
    match c {
        HopfCmd::Coproduct(a) => {
            let f = g.forest(&a.code, a.reverse)?;
            let d = y_coproduct(&f, 2);
            let side = |f: &PlaneForest| {
                if f.size() == 0 {
                    "∅".to_string()
                } else {
                    code(f, a.reverse)
                }
            };
            let text = sum_text("Y", &d, |p| format!("{} ⊗ {}", side(&p[0]), side(&p[1])));
            let terms: Vec<Value> = d
                .iter()
                .map(|(p, c)| {
                    json!({ "left": code(&p[0], a.reverse), "right": code(&p[1], a.reverse), "coeff": c.to_json() })
                })
                .collect();
            Ok(Output::new(text, json!({ "basis": "Y⊗Y", "terms": terms })))
        }
        HopfCmd::Product { a, b, split } => {
            let fa = g.forest(a, false)?;
            let fb = g.forest(b, false)?;
            g.check(fa.size() + fb.size())?;
            let (xa, xb): (XElem<i64>, XElem<i64>) = (LinComb::basis(fa), LinComb::basis(fb));
            let p = x_product(&xa, &xb)?;
            if !split {
                return Ok(element("X", &p));
            }
            let (prec, succ) = dendriform(&xa, &xb)?;
            let text = format!(
                "product {}\nprec {}\nsucc {}",
                sum_text("X", &p, |f| f.code_string()),
                sum_text("X", &prec, |f| f.code_string()),
                sum_text("X", &succ, |f| f.code_string())
            );
            let json = json!({
                "product": lincomb("X", &p),
                "prec": lincomb("X", &prec),
                "succ": lincomb("X", &succ),
            });
            Ok(Output::new(text, json))
        }
        HopfCmd::Cbasis(a) => {
            let f = g.forest(&a.code, a.reverse)?;
            Ok(element("X", &c_to_x(&LinComb::<_, i64>::basis(f))))
        }
    }
}

fn nsym_basis(b: NsymBasisArg) -> NsfBasis {
    match b {
        NsymBasisArg::S => NsfBasis::S,
        NsymBasisArg::Lambda => NsfBasis::Lambda,
        NsymBasisArg::R => NsfBasis::R,
        NsymBasisArg::SignedR => NsfBasis::SignedR,
    }
}

fn nsym(c: &NsymCmd, g: Guard) -> Result<Output> {
    match c {
        NsymCmd::Embed { basis, i } => {
            let i = Composition::parse(i)?;
            g.check(i.weight() as usize)?;
            let e = NsfElem::<i64>::basis_elem(nsym_basis(*basis), i.clone());
            Ok(element("X", &ns::embed_x(&e)))
        }
        NsymCmd::Convert { basis, i, to } => {
            let i = Composition::parse(i)?;
            g.check(i.weight() as usize)?;
            let e = NsfElem::<i64>::basis_elem(nsym_basis(*basis), i).convert(nsym_basis(*to));
            Ok(element(e.basis.symbol(), &e.terms))
        }
        NsymCmd::Gamma {
            forest,
            alphabet,
            monomial,
            opposite,
            n,
        } => {
            let f = g.forest(forest, false)?;
            let mut e = ns::gamma_qsym::<Rational>(&f);
            if *opposite {
                e = ns::omega(&e);
            }
            let qsym = |e: ns::QsymElem<Rational>| {
                let e = if *monomial {
                    e.convert(QsymBasis::M)
                } else {
                    e
                };
                element(e.basis.symbol(), &e.terms)
            };
            let poly = |p: MultiPoly| Output::new(p.to_string(), p.to_json());
            Ok(match alphabet {
                Alphabet::None => qsym(e),
                Alphabet::Minus => qsym(ns::minus_x(&e)),
                Alphabet::Binomial => poly(ns::eval_binomial(&e)),
                Alphabet::Geometric => poly(ns::eval_geometric(&e, *n)),
                Alphabet::Xqt => {
                    let r = if *opposite {
                        ns::eval_xqt_opposite(&e)
                    } else {
                        ns::eval_xqt(&e)
                    };
                    Output::new(r.to_string(), r.to_json())
                }
                Alphabet::Chapoton => {
                    let t = MultiPoly::one().add(
                        &MultiPoly::var(Var::Q)
                            .sub(&MultiPoly::one())
                            .mul(&MultiPoly::var(Var::X)),
                    );
                    let r = if *opposite {
                        ns::eval_xqt_opposite(&e)
                    } else {
                        ns::eval_xqt(&e)
                    };
                    let r = r.substitute_poly(Var::T, &t);
                    Output::new(r.to_string(), r.to_json())
                }
            })
        }
    }
}

fn spec(s: SpecArg) -> ASpec {
    match s {
        SpecArg::Generic => ASpec::Generic,
        SpecArg::Ab => ASpec::Ab,
    }
}

fn word_text(w: &[u32]) -> String {
    seq(w)
}

fn birkhoff(c: &BirkhoffCmd, g: Guard) -> Result<Output> {
    match c {
        BirkhoffCmd::PhiPlus { forest, spec: s } => {
            let f = g.forest(forest, false)?;
            let v = Birkhoff::new(spec(*s), f.size(), 0).phi_plus_forest(&f)?;
            Ok(Output::new(v.to_string(), v.to_json()))
        }
        BirkhoffCmd::PhiMinus {
            forest,
            spec: s,
            prec,
        } => {
            let f = g.forest(forest, false)?;
            let v = Birkhoff::new(spec(*s), f.size(), *prec).phi_minus_forest(&f)?;
            Ok(Output::new(v.to_string(), v.to_json()))
        }
        BirkhoffCmd::SigmaPlus { n, spec: s } => {
            g.check(*n)?;
            Ok(element("X", &bk::sigma_plus(*n, spec(*s))?))
        }
        BirkhoffCmd::SigmaMinus { n, spec: s, prec } => {
            g.check(*n)?;
            Ok(element("X", &bk::sigma_minus(*n, spec(*s), *prec)?))
        }
        BirkhoffCmd::Series { which, n, spec: s } => {
            g.check(*n)?;
            let e = if which == "C" {
                bk::series_c(*n, spec(*s))?
            } else {
                bk::series_d(*n, spec(*s))?
            };
            Ok(element("C", &e))
        }
        BirkhoffCmd::DLambda { n, lambda, basis } => {
            g.check(*n)?;
            let l = Partition::parse(lambda)?;
            let out = match basis {
                DBasis::C => element("C", &bk::d_lambda(*n, &l)?),
                DBasis::X => element("X", &bk::d_lambda_x(*n, &l)?),
                DBasis::R => element("R", &bk::d_lambda_ribbon(*n, &l)?.terms),
            };
            Ok(out)
        }
        BirkhoffCmd::ClosedForm { n, spec: s } => {
            g.check(*n)?;
            let mut b = Birkhoff::new(spec(*s), *n, 0);
            let mut cache = tamari::UpsetCache::new();
            let mut rows = Vec::new();
            let mut text = Vec::new();
            let mut failed = false;
            for t in enumerate_trees(*n) {
                let tree = t.as_tree()?;
                let ok =
                    b.phi_plus(&tree)? == bk::phi_plus_closed_with(&mut cache, &tree, spec(*s));
                failed |= !ok;
                text.push(format!(
                    "{} {}",
                    if ok { "PASS" } else { "FAIL" },
                    t.code_string()
                ));
                rows.push(json!({ "tree": t.code_string(), "agrees": ok }));
            }
            let mut out = Output::new(lines(&text), json!({ "n": n, "trees": rows }));
            out.failed = failed;
            Ok(out)
        }
        BirkhoffCmd::Words { i, refinements } => {
            let i = Composition::parse(i)?;
            g.check(i.weight() as usize)?;
            let ws = if *refinements {
                bk::words_s(&i)
            } else {
                bk::words_w(&i)
            };
            let ws: Vec<String> = ws.iter().map(|w| word_text(w)).collect();
            let json = json!({
                "I": i.to_string(),
                "set": if *refinements { "S" } else { "W" },
                "count": ws.len(),
                "catalan_block_product": bk::catalan_block_count(&i),
                "words": ws,
            });
            Ok(Output::new(lines(&ws), json))
        }
    }
}

fn nsym_out(e: &NsfElem<Rational>, basis: IdemBasis) -> Output {
    match basis {
        IdemBasis::S => {
            let s = e.convert(NsfBasis::S);
            element("S", &s.terms)
        }
        IdemBasis::R => {
            let r = e.convert(NsfBasis::R);
            element("R", &r.terms)
        }
        IdemBasis::X => element("X", &ns::embed_x(e)),
    }
}

fn idem_cmd(c: &IdemCmd, g: Guard) -> Result<Output> {
    match c {
        IdemCmd::Dynkin { n, bar, basis } => {
            g.check(*n as usize)?;
            let (p, pb) = idem::dynkin(*n);
            Ok(nsym_out(if *bar { &pb } else { &p }, *basis))
        }
        IdemCmd::Solomon { n, basis } => {
            g.check(*n as usize)?;
            Ok(nsym_out(&idem::solomon(*n), *basis))
        }
        IdemCmd::Eulerian { n, k, basis } => {
            g.check(*n as usize)?;
            if *k == 0 || k > n {
                return Err(Error::Undefined(format!(
                    "e_n^(k) needs 1 <= k <= n, got n = {n}, k = {k}"
                )));
            }
            let out = match basis {
                IdemBasis::X => element("X", &idem::eulerian(*n as usize, *k)),
                b => nsym_out(&idem::eulerian_nsym(*n, *k), *b),
            };
            Ok(out)
        }
        IdemCmd::Qsolomon { n, q } => {
            g.check(*n as usize)?;
            match q {
                None => Ok(element("R", &idem::q_solomon(*n).terms)),
                Some(v) => {
                    let v = parse_rational(v)
                        .ok_or_else(|| Error::Undefined(format!("not a rational number: {v}")))?;
                    Ok(element("R", &idem::q_solomon_at(*n, &v).terms))
                }
            }
        }
        IdemCmd::Chi { forest } => {
            let f = g.forest(forest, false)?;
            let p = idem::chi_poly(&f);
            Ok(Output::new(p.to_string(), p.to_json()))
        }
        IdemCmd::Verify { what, n } => {
            g.check(*n as usize)?;
            let (p, pb) = idem::dynkin(*n);
            let mut elems = vec![
                (format!("Psi_{n}"), p),
                (format!("Psibar_{n}"), pb),
                (format!("phi_{n}"), idem::solomon(*n)),
            ];
            if *n >= 1 {
                for l in Partition::all(*n - 1) {
                    elems.push((format!("D_{l}"), bk::d_lambda_ribbon(*n as usize, &l)?));
                }
            }
            let mut rows = Vec::new();
            let mut text = Vec::new();
            let mut failed = false;
            for (name, e) in elems {
                let (ok, scalar) = match what {
                    IdemCheck::Primitive => (idem::is_primitive(&e), None),
                    IdemCheck::Quasi => idem::quasi_idempotent_check(&e, *n as usize)?,
                };
                failed |= !ok;
                let sc = scalar.as_ref().map(|c| c.to_json()).unwrap_or(Value::Null);
                text.push(match &scalar {
                    Some(c) => format!("{name} {ok} c = {c}"),
                    None => format!("{name} {ok}"),
                });
                rows.push(json!({ "element": name, "ok": ok, "scalar": sc }));
            }
            let mut out = Output::new(
                lines(&text),
                json!({ "n": n, "check": format!("{what:?}").to_lowercase(), "results": rows }),
            );
            out.failed = failed;
            Ok(out)
        }
    }
}

fn ehrhart(c: &EhrhartCmd, g: Guard) -> Result<Output> {
    let poset =
        |s: &str| -> Result<ForestPoset> { Ok(ForestPoset::from_forest(&g.forest(s, false)?)) };
    match c {
        EhrhartCmd::Poly { forest } => {
            let p = poset(forest)?;
            let e = eh::ehrhart_polynomial(&p);
            Ok(Output::new(
                e.to_string(),
                json!({ "poset": p.to_string(), "polynomial": e.to_json() }),
            ))
        }
        EhrhartCmd::Points {
            forest,
            n,
            interior,
        } => {
            let p = poset(forest)?;
            let pts: Vec<String> = eh::lattice_points(&p, *n, *interior)
                .iter()
                .map(|x| seq(x))
                .collect();
            let json = json!({ "poset": p.to_string(), "n": n, "interior": interior, "count": pts.len(), "points": pts });
            Ok(Output::new(
                format!("{} points\n{}", pts.len(), lines(&pts)),
                json,
            ))
        }
        EhrhartCmd::Qcount {
            forest,
            n,
            interior,
        } => {
            let p = poset(forest)?;
            let kind = if *interior {
                QCountKind::Interior
            } else {
                QCountKind::Boundary
            };
            let s = eh::q_count(&p, *n, kind);
            let abs: LinComb<i32, i64> = s.map_coeffs(|c| c.abs());
            let json = json!({
                "poset": p.to_string(),
                "n": n,
                "interior": interior,
                "value": eh::format_qseries(&s),
                "abs": eh::format_qseries(&abs),
                "terms": lincomb("q", &s),
            });
            let text = format!(
                "{}\n|value| = {}",
                eh::format_qseries(&s),
                eh::format_qseries(&abs)
            );
            Ok(Output::new(text, json))
        }
        EhrhartCmd::Wqsym { forest, signed } => {
            let p = poset(forest)?;
            Ok(element("M", &eh::gamma_wqsym(&p, *signed)))
        }
    }
}

fn verify_cmd(a: &VerifyArgs) -> Result<Output> {
    let suites: Vec<Suite> = if a.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![Suite::parse(&a.suite)
            .ok_or_else(|| Error::Undefined(format!("unknown suite {}", a.suite)))?]
    };
    let mut text = Vec::new();
    let mut reports = Vec::new();
    let mut failed = false;
    for s in suites {
        let r = verify::run(s, a.n)?;
        failed |= !r.passed();
        let checks: Vec<Value> = r
            .checks
            .iter()
            .map(|c| {
                text.push(format!(
                    "{} {}/{} {} ({} cases){}",
                    if c.passed() { "PASS" } else { "FAIL" },
                    s,
                    c.name,
                    r.bound,
                    c.cases,
                    c.counterexample.as_ref().map(|x| format!(": counterexample {x}")).unwrap_or_default()
                ));
                json!({ "name": c.name, "cases": c.cases, "passed": c.passed(), "counterexample": c.counterexample })
            })
            .collect();
        reports.push(
            json!({ "suite": s.name(), "bound": r.bound, "passed": r.passed(), "checks": checks }),
        );
    }
    let mut out = Output::new(
        lines(&text),
        json!({ "passed": !failed, "suites": reports }),
    );
    out.failed = failed;
    Ok(out)
}
