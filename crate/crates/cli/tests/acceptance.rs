//! Acceptance suite: one PASS/FAIL line per criterion.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};
use serde_json::Value;

use ramify::construct::{self, fu, fu_pair, phi};
use ramify::enumerate::{self, NegativeKind};
use ramify::{
    Error, Exec, Field, FieldElement, MobiusTransformation, Poly, ProjectivePoint,
    RamificationProfile, RationalFunction, StandardForm,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn fld(p: u64, n: u32) -> Field {
    Field::new(p, n).unwrap()
}

fn el(f: &Field, v: i64) -> FieldElement {
    f.element(f.from_int(v))
}

fn cli(args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["ramify"];
    argv.extend_from_slice(args);
    argv.push("--json");
    let out = ramify_cli::run(argv);
    let v = serde_json::from_str(&out.stdout).unwrap_or(Value::Null);
    (out.code, v)
}

fn e<T: std::fmt::Debug>(r: ramify::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn char3_simple() -> Outcome {
    let mut parts = Vec::new();
    for (field, d) in [("3^2", "2"), ("3^3", "2"), ("3^2", "3"), ("3^3", "3")] {
        let (code, v) = cli(&[
            "verify",
            "--mode",
            "char3-simple",
            "--field",
            field,
            "--degree",
            d,
            "--sub",
            "1",
        ]);
        let viol = &v["result"]["violations"];
        ensure!(
            code == 0 && viol == 0,
            "F_{field} d={d}: exit {code}, violations {viol}"
        );
        parts.push(format!(
            "F_{field} d={d}: {} classes of {} scanned",
            v["result"]["classes"], v["result"]["scanned"]
        ));
    }
    Ok(parts.join("; "))
}

fn conjugate(s: &StandardForm) -> Result<RationalFunction, String> {
    let k = s.field();
    let frob = |p: &Poly| {
        e(Poly::new(
            k,
            &p.coeffs().map(|c| c.frobenius(1)).collect::<Vec<_>>(),
        ))
    };
    e(RationalFunction::new(&frob(s.g())?, &frob(s.h())?))
}

fn counterexamples() -> Outcome {
    let mut parts = Vec::new();
    for p in [5u64, 7, 11, 13] {
        let k = fld(p, 1);
        let (code, v) = cli(&["search-cex", "--field", &p.to_string()]);
        ensure!(code == 0, "search-cex F_{p} exited {code}");
        ensure!(
            v["result"]["descends"] == false,
            "F_{p}: CLI witness descends"
        );
        let w = e(construct::search_counterexample(&k, 0))?;
        e(w.verify())?;
        ensure!(e(w.function.is_simply_ramified())?, "F_{p}: not simple");
        ensure!(
            e(w.function.ramification_points_rational_over(1))?,
            "F_{p}: irrational ramification"
        );
        ensure!(!e(w.function.descends_to(1))?, "F_{p}: descends");
        ensure!(
            v["result"]["c"] == w.c.to_string(),
            "F_{p}: CLI and library disagree on c"
        );
        let mut detail = format!("F_{p}: c={}", w.c);
        if p <= 7 {
            let pts = |f: &Field| {
                vec![
                    (ProjectivePoint::Affine(f.zero()), 1),
                    (ProjectivePoint::Affine(f.one()), 1),
                    (ProjectivePoint::Affine(w.c.embed(f).unwrap()), 1),
                    (ProjectivePoint::Infinity, 1),
                ]
            };
            let div = e(RamificationProfile::new(&k, 3, pts(&k)))?;
            let base = e(enumerate::fiber_by_ramification(&k, &div, Exec::default()))?;
            ensure!(
                base.classes.is_empty(),
                "F_{p}: {} classes over k",
                base.classes.len()
            );
            let ext = &w.extension;
            let div = e(RamificationProfile::new(ext, 3, pts(ext)))?;
            let up = e(enumerate::fiber_by_ramification(ext, &div, Exec::default()))?;
            let got: HashSet<StandardForm> = up.forms().cloned().collect();
            let sf = w.function.standard_form();
            let want: HashSet<StandardForm> = [sf.clone(), conjugate(&sf)?.standard_form()]
                .into_iter()
                .collect();
            ensure!(want.len() == 2, "F_{p}: witness equals its conjugate");
            ensure!(
                got == want,
                "F_{p}: fiber over F_{p}^2 has {} classes",
                got.len()
            );
            detail.push_str(", fiber 0 over k / 2 over k^2");
        }
        parts.push(detail);
    }
    Ok(parts.join("; "))
}

fn char2_families() -> Outcome {
    let k = fld(2, 1);
    let (code, v) = cli(&[
        "verify",
        "--mode",
        "char2-all",
        "--field",
        "2",
        "--degree",
        "2",
        "--ext",
        "4",
        "--count",
        "14",
    ]);
    ensure!(code == 0, "CLI char2-all exited {code}: {v}");
    let classes = e(enumerate::enumerate_classes(
        &k,
        2,
        "all",
        |_| true,
        Exec::default(),
    ))?;
    ensure!(
        classes.classes.len() == 3,
        "{} base classes",
        classes.classes.len()
    );
    let mut degenerate_checked = 0;
    for base in classes.forms() {
        let fam = e(enumerate::low_char_family(
            NegativeKind::Char2All,
            &base.to_ratfunc(),
            4,
            Some(14),
            Exec::default(),
        ))?;
        ensure!(
            fam.members.len() == 14,
            "{base}: {} members",
            fam.members.len()
        );
        ensure!(
            fam.non_descending() == 14,
            "{base}: {} non-descending",
            fam.non_descending()
        );
        ensure!(
            fam.members[0].parameter.field().order() == 16,
            "{base}: wrong extension"
        );
        let forms: HashSet<&StandardForm> = fam.members.iter().map(|w| &w.standard_form).collect();
        ensure!(
            forms.len() == 14,
            "{base}: members not pairwise inequivalent"
        );
        let wr: HashSet<Poly> = fam
            .members
            .iter()
            .map(|w| w.member.wronskian_monic().map(|(m, _)| m))
            .collect::<ramify::Result<_>>()
            .map_err(|e| e.to_string())?;
        ensure!(
            wr.len() == 1,
            "{base}: {} distinct monic Wronskians",
            wr.len()
        );
        let h_deg = fam.moved.h().degree().unwrap();
        let t1 = construct::constant_wronskian_family(&fam.moved, &k.one());
        if h_deg + 2 == fam.moved.degree() {
            ensure!(
                matches!(t1, Err(Error::DegenerateParameter(_))),
                "{base}: t = 1 not rejected"
            );
            degenerate_checked += 1;
        } else {
            ensure!(t1.is_ok(), "{base}: t = 1 rejected although deg h != d - p");
        }
    }
    Ok(format!(
        "3 bases x 14 members over F_16, t=1 degenerate for {degenerate_checked} bases"
    ))
}

fn char3_nonsimple() -> Outcome {
    let (code, v) = cli(&[
        "verify",
        "--mode",
        "char3-nonsimple",
        "--field",
        "3",
        "--fn",
        "x^3+x",
        "--ext",
        "2",
    ]);
    ensure!(code == 0, "CLI exited {code}");
    ensure!(
        v["result"]["non_descending"] == 6,
        "CLI reports {}",
        v["result"]["non_descending"]
    );
    let k = fld(3, 1);
    let f = RationalFunction::polynomial(&Poly::from_ints(&k, &[0, 1, 0, 1])).unwrap();
    let fam = e(enumerate::low_char_family(
        NegativeKind::Char3NonSimple,
        &f,
        2,
        None,
        Exec::default(),
    ))?;
    ensure!(
        fam.members.len() == 6 && fam.non_descending() == 6,
        "{} members",
        fam.members.len()
    );
    for w in &fam.members {
        let (m, _) = e(w.member.wronskian_monic())?;
        ensure!(
            m == Poly::one(m.field()),
            "t = {}: monic Wr {m}",
            w.parameter
        );
        ensure!(w.parameter.field().order() == 9, "parameter outside F_9");
    }
    Ok("6 members over F_9, monic Wr = 1".into())
}

fn primes(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi)
        .filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
        .collect()
}

fn phi_anchors() -> Outcome {
    let ps = primes(5, 97);
    for &p in &ps {
        let k = fld(p, 1);
        let one = ProjectivePoint::Affine(k.one());
        let zero = ProjectivePoint::Affine(k.zero());
        ensure!(
            phi(&el(&k, -3)) == one && phi(&el(&k, -1)) == one,
            "F_{p}: phi(-3), phi(-1)"
        );
        ensure!(
            phi(&el(&k, 0)) == zero && phi(&el(&k, -2)) == zero,
            "F_{p}: phi(0), phi(-2)"
        );
        for u in k.elements() {
            let bad = u == el(&k, -1) || u == el(&k, -2);
            match fu(&u) {
                Err(Error::DegenerateParameter(_)) => {
                    ensure!(bad, "F_{p}: f_u degenerate at u={u}")
                }
                Ok(f) => ensure!(!bad && f.degree() == 3, "F_{p}: f_u fine at u={u}"),
                Err(other) => return Err(format!("F_{p}, u={u}: {other}")),
            }
            let (g, h) = fu_pair(&u);
            if h.degree() == Some(1) {
                let res = e(h.resultant(&g))?;
                let up2 = e(u.add(&el(&k, 2)))?;
                let up1 = e(u.add(&el(&k, 1)))?;
                let want = el(&k, 2).mul(&up2.pow(2)).and_then(|a| a.mul(&up1.pow(2)));
                ensure!(Ok(res.clone()) == want, "F_{p}, u={u}: Res(h, g) = {res}");
            }
        }
    }
    Ok(format!("{} primes in [5, 97]", ps.len()))
}

fn faber_thompson() -> Outcome {
    let mut parts = Vec::new();
    for q in [5u64, 7] {
        let (code, v) = cli(&["verify", "--mode", "ft-classify", "--field", &q.to_string()]);
        ensure!(code == 0, "CLI ft-classify F_{q} exited {code}");
        let k = fld(q, 1);
        let rep = e(enumerate::classify_faber_thompson(&k, Exec::default()))?;
        let n = q as usize - 2;
        ensure!(rep.is_verified(), "F_{q}: {:?}", rep.violations);
        ensure!(
            rep.classes.len() == n && rep.matches.len() == n,
            "F_{q}: {} classes",
            rep.classes.len()
        );
        ensure!(
            v["witnesses"].as_array().map(|a| a.len()) == Some(n),
            "F_{q}: CLI matches"
        );
        let claimed: HashSet<&FieldElement> = rep.matches.iter().map(|m| &m.u).collect();
        ensure!(
            !claimed.contains(&el(&k, -1)) && !claimed.contains(&el(&k, -2)),
            "F_{q}: degenerate u claimed"
        );
        parts.push(format!("F_{q}: {n} classes <-> {n} parameters"));
    }
    Ok(parts.join("; "))
}

const FIELDS: [(u64, u32); 8] = [
    (2, 1),
    (2, 2),
    (3, 1),
    (3, 2),
    (5, 1),
    (5, 2),
    (7, 1),
    (7, 2),
];

fn runner(salt: u8) -> TestRunner {
    let config = Config {
        cases: 1000,
        failure_persistence: None,
        max_global_rejects: 100_000,
        ..Config::default()
    };
    TestRunner::new_with_rng(
        config,
        TestRng::from_seed(RngAlgorithm::ChaCha, &[salt; 32]),
    )
}

#[derive(Clone, Debug)]
struct Case {
    field: usize,
    degree: usize,
    coeffs: Vec<u64>,
    mobius: [u64; 4],
}

fn cases() -> impl Strategy<Value = Case> {
    (
        0..FIELDS.len(),
        1usize..=4,
        prop::collection::vec(any::<u64>(), 10),
        any::<[u64; 4]>(),
    )
        .prop_map(|(field, degree, coeffs, mobius)| Case {
            field,
            degree,
            coeffs,
            mobius,
        })
}

impl Case {
    fn field(&self) -> Field {
        let (p, n) = FIELDS[self.field];
        fld(p, n)
    }

    fn function(&self) -> Option<RationalFunction> {
        let k = self.field();
        let q = k.order();
        let d = self.degree;
        let c = &self.coeffs;
        let mut g: Vec<u64> = c[..d].iter().map(|v| v % q).collect();
        g.push(1 + c[d] % (q - 1));
        let e = (c[9] as usize) % (d + 1);
        let h: Vec<u64> = c[5..5 + e]
            .iter()
            .chain(std::iter::once(&1))
            .map(|v| v % q)
            .collect();
        let h = if e == 0 { vec![1 + c[5] % (q - 1)] } else { h };
        let (g, h) = if c[8].is_multiple_of(2) {
            (g, h)
        } else {
            (h, g)
        };
        let f = RationalFunction::new(&Poly::from_raw(k.clone(), g), &Poly::from_raw(k, h)).ok()?;
        f.is_separable().then_some(f)
    }

    fn sigma(&self) -> Option<MobiusTransformation> {
        let k = self.field();
        let m = self.mobius.map(|v| v % k.order());
        MobiusTransformation::from_raw(&k, m).ok()
    }
}

fn property<F>(salt: u8, check: F) -> Result<usize, String>
where
    F: Fn(RationalFunction, MobiusTransformation) -> Result<(), String>,
{
    let mut r = runner(salt);
    let count = std::cell::Cell::new(0usize);
    r.run(&cases(), |case| {
        let (Some(f), Some(s)) = (case.function(), case.sigma()) else {
            return Err(TestCaseError::reject("degenerate sample"));
        };
        count.set(count.get() + 1);
        check(f, s).map_err(TestCaseError::fail)
    })
    .map_err(|e| e.to_string())?;
    Ok(count.get())
}

fn property_suites() -> Outcome {
    let mut counts = Vec::new();
    counts.push((
        "std-form invariance",
        property(1, |f, s| {
            let g = e(f.post_compose(&s))?;
            ensure!(g.standard_form() == f.standard_form(), "{f} vs {g}");
            Ok(())
        })?,
    ));
    counts.push((
        "monic Wronskian invariance",
        property(2, |f, s| {
            let g = e(f.post_compose(&s))?;
            ensure!(
                e(g.wronskian_monic())?.0 == e(f.wronskian_monic())?.0,
                "{f} vs {g}"
            );
            Ok(())
        })?,
    ));
    counts.push((
        "Riemann-Hurwitz",
        property(3, |f, _| {
            let p = e(f.ramification_profile())?;
            ensure!(p.total_length() as usize == 2 * f.degree() - 2, "{f}: {p}");
            Ok(())
        })?,
    ));
    counts.push((
        "tame/wild",
        property(4, |f, _| {
            let prof = e(f.ramification_profile())?;
            let up = e(f.embed(prof.field()))?;
            let p = f.field().characteristic() as u32;
            for (pt, l) in prof.entries() {
                let idx = e(up.ramification_index(pt))?;
                if idx % p == 0 {
                    ensure!(*l >= idx, "{f}: wild at {pt} with l={l}, e={idx}");
                } else {
                    ensure!(*l + 1 == idx, "{f}: tame at {pt} with l={l}, e={idx}");
                }
            }
            Ok(())
        })?,
    ));
    counts.push((
        "pre-composition equivariance",
        property(5, |f, s| {
            let g = e(f.pre_compose(&s))?;
            let want = e(e(f.ramification_profile())?.map_points(&s.inverse()))?;
            ensure!(e(g.ramification_profile())? == want, "{f} after {s:?}");
            Ok(())
        })?,
    ));
    counts.push((
        "factorization round trip",
        property(6, |f, _| {
            for p in [f.numerator(), f.denominator(), &e(f.wronskian())?] {
                let fac = e(p.factor(11))?;
                ensure!(fac.expand() == *p, "{p}: expand mismatch");
                for (b, _) in &fac.factors {
                    ensure!(b.is_monic() && e(b.is_irreducible())?, "{p}: factor {b}");
                }
            }
            Ok(())
        })?,
    ));
    for (name, n) in &counts {
        ensure!(*n >= 1000, "{name}: only {n} cases");
    }
    Ok(counts
        .iter()
        .map(|(n, c)| format!("{n} {c}"))
        .collect::<Vec<_>>()
        .join(", "))
}

/// Classes by brute-force orbit computation under post-composition.
fn orbit_count(k: &Field, d: usize) -> usize {
    let q = k.order();
    let polys: Vec<Poly> = (0..q.pow(d as u32 + 1))
        .map(|mut i| {
            let c: Vec<u64> = (0..=d)
                .map(|_| {
                    let v = i % q;
                    i /= q;
                    v
                })
                .collect();
            Poly::from_raw(k.clone(), c)
        })
        .collect();
    let sigmas: Vec<[FieldElement; 4]> = (0..q.pow(4))
        .filter_map(|mut i| {
            let m: [u64; 4] = std::array::from_fn(|_| {
                let v = i % q;
                i /= q;
                v
            });
            MobiusTransformation::from_raw(k, m)
                .ok()
                .map(|s| s.coefficients())
        })
        .collect();
    let key = |g: &Poly, h: &Poly| -> (Vec<u64>, Vec<u64>) {
        let (lc, hm) = h.monic().unwrap();
        let gm = g.scale(&lc.inv().unwrap()).unwrap();
        (gm.raw().to_vec(), hm.raw().to_vec())
    };
    let mut seen = HashSet::new();
    for g in &polys {
        for h in &polys {
            let Ok(f) = RationalFunction::new(g, h) else {
                continue;
            };
            if f.degree() != d || !f.is_separable() || f.numerator() != g || f.denominator() != h {
                continue;
            }
            let canon = sigmas
                .iter()
                .map(|[a, b, c, dd]| {
                    let num = g.scale(a).unwrap().add(&h.scale(b).unwrap()).unwrap();
                    let den = g.scale(c).unwrap().add(&h.scale(dd).unwrap()).unwrap();
                    key(&num, &den)
                })
                .min()
                .unwrap();
            seen.insert(canon);
        }
    }
    seen.len()
}

fn baselines() -> Outcome {
    let f2 = fld(2, 1);
    let f3 = fld(3, 1);
    let r2 = e(enumerate::enumerate_classes(
        &f2,
        2,
        "all",
        |_| true,
        Exec::default(),
    ))?;
    let r3 = e(enumerate::enumerate_classes(
        &f3,
        2,
        "all",
        |_| true,
        Exec::default(),
    ))?;
    ensure!(r2.classes.len() == 3, "F_2: {} classes", r2.classes.len());
    ensure!(r3.classes.len() == 9, "F_3: {} classes", r3.classes.len());
    let got: HashSet<String> = r2.forms().map(|s| s.to_string()).collect();
    let want: HashSet<String> = ["x^2+x", "(x^2+1)/x", "x^2/(x+1)"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    ensure!(got == want, "F_2 classes {got:?}");
    let o2 = orbit_count(&f2, 2);
    let o3 = orbit_count(&f3, 2);
    ensure!(o2 == 3 && o3 == 9, "orbit oracle: {o2}, {o3}");
    Ok("F_2: 3 classes, F_3: 9 classes (orbit oracle agrees)".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        (
            "1 char-3 simply ramified descent",
            Duration::from_secs(60),
            char3_simple,
        ),
        (
            "2 counterexamples in characteristic > 3",
            Duration::from_secs(30),
            counterexamples,
        ),
        (
            "3 char-2 constant-Wronskian families",
            Duration::from_secs(10),
            char2_families,
        ),
        (
            "4 char-3 non-simple family",
            Duration::from_secs(10),
            char3_nonsimple,
        ),
        (
            "5 phi anchors and degeneracy",
            Duration::from_secs(5),
            phi_anchors,
        ),
        (
            "6 Faber-Thompson classification",
            Duration::from_secs(30),
            faber_thompson,
        ),
        (
            "7 property suites",
            Duration::from_secs(60),
            property_suites,
        ),
        ("8 enumeration baselines", Duration::from_secs(5), baselines),
    ];
    let mut failed = 0;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        match outcome {
            Ok(detail) if took <= limit => {
                println!(
                    "PASS [{name}] {detail} ({:.2}s, limit {}s)",
                    took.as_secs_f64(),
                    limit.as_secs()
                );
            }
            Ok(detail) => {
                failed += 1;
                println!(
                    "FAIL [{name}] over time limit: {:.2}s > {}s ({detail})",
                    took.as_secs_f64(),
                    limit.as_secs()
                );
            }
            Err(why) => {
                failed += 1;
                println!("FAIL [{name}] {why} ({:.2}s)", took.as_secs_f64());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
