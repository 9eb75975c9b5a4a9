use std::collections::HashMap;

use ramify::construct::{fu, search_counterexample};
use ramify::enumerate::{self, fiber_by_ramification};
use ramify::{Error, Exec, Field, ProjectivePoint, RamificationProfile, StandardForm};

fn fld(p: u64, n: u32) -> Field {
    Field::new(p, n).unwrap()
}

fn all(f: &Field, d: usize) -> Vec<enumerate::ClassRecord> {
    enumerate::enumerate_classes(f, d, "all", |_| true, Exec::default())
        .unwrap()
        .classes
}

#[test]
fn tame_and_wild_lengths() {
    for (p, n, d) in [
        (2, 1, 3),
        (2, 2, 3),
        (3, 1, 3),
        (3, 2, 2),
        (5, 1, 3),
        (7, 1, 2),
        (2, 3, 2),
    ] {
        let k = fld(p, n);
        for c in all(&k, d) {
            let up = c.form.to_ratfunc().embed(c.profile.field()).unwrap();
            assert_eq!(c.profile.total_length() as usize, 2 * d - 2);
            for (pt, l) in c.profile.entries() {
                let e = up.ramification_index(pt).unwrap();
                if (e as u64).is_multiple_of(p) {
                    assert!(*l >= e, "{} at {pt}: l={l} e={e}", c.form);
                } else {
                    assert_eq!(*l + 1, e, "{} at {pt}", c.form);
                }
            }
        }
    }
}

#[test]
fn fibers_partition_the_rational_classes() {
    for (p, n, d) in [
        (2, 1, 2),
        (2, 1, 3),
        (3, 1, 2),
        (3, 1, 3),
        (2, 2, 2),
        (2, 2, 3),
        (3, 2, 2),
        (5, 1, 2),
    ] {
        let k = fld(p, n);
        let mut groups: HashMap<RamificationProfile, Vec<StandardForm>> = HashMap::new();
        for c in all(&k, d) {
            if c.profile.field() == &k {
                groups.entry(c.profile).or_default().push(c.form);
            }
        }
        for (div, forms) in groups {
            let got: Vec<StandardForm> = fiber_by_ramification(&k, &div, Exec::default())
                .unwrap()
                .forms()
                .cloned()
                .collect();
            assert_eq!(got, forms, "{k} d={d} divisor {div}");
        }
    }
}

#[test]
fn char3_quadratics_are_forced() {
    // over F_9 every simply ramified quadratic with ramification in P^1(F_3)
    // already has coefficients in F_3
    let k = fld(3, 2);
    let r = enumerate::verify_char3_simple(&k, 2, 1, Exec::default()).unwrap();
    assert!(r.is_verified());
    let base: Vec<String> = enumerate::verify_char3_simple(&fld(3, 1), 2, 1, Exec::default())
        .unwrap()
        .forms()
        .map(|s| s.to_string())
        .collect();
    let up: Vec<String> = r.forms().map(|s| s.to_string()).collect();
    assert_eq!(base.len(), up.len());
    assert_eq!(base.len(), 6);
}

#[test]
fn fu_ramification_support() {
    for p in [5u64, 7, 11, 13] {
        let k = fld(p, 1);
        for u in k.elements() {
            let Ok(f) = fu(&u) else { continue };
            let prof = f.ramification_profile().unwrap();
            let pts: Vec<ProjectivePoint> = prof.points().cloned().collect();
            for want in [
                ProjectivePoint::Affine(k.zero()),
                ProjectivePoint::Affine(k.one()),
                ProjectivePoint::Infinity,
            ] {
                assert!(pts.contains(&want), "p={p} u={u}: {prof}");
            }
            assert!(
                pts.contains(&ramify::construct::phi(&u)),
                "p={p} u={u}: {prof}"
            );
        }
    }
}

#[test]
fn counterexample_fields_beyond_primes() {
    for (p, n) in [(5u64, 2u32), (7, 2), (17, 1), (19, 1)] {
        let w = search_counterexample(&fld(p, n), 0).unwrap();
        w.verify().unwrap();
        assert_eq!(w.extension.extension_degree(), 2 * n);
    }
    assert_eq!(
        search_counterexample(&fld(2, 3), 0).unwrap_err(),
        Error::UnsupportedCharacteristic(2)
    );
}

#[test]
fn generic_fiber_over_f27() {
    let k = fld(3, 3);
    let pts = vec![
        (ProjectivePoint::Affine(k.zero()), 1),
        (ProjectivePoint::Affine(k.one()), 1),
        (ProjectivePoint::Affine(k.element(2)), 1),
        (ProjectivePoint::Infinity, 1),
    ];
    let div = RamificationProfile::new(&k, 3, pts).unwrap();
    let r = fiber_by_ramification(&k, &div, Exec::default()).unwrap();
    println!("F_27, d = 3, divisor {div}: {} classes", r.fibers[0].count);
    for s in r.forms() {
        assert!(s.descends_to(1).unwrap(), "{s}");
    }
}

#[test]
fn invalid_divisors() {
    let k = fld(5, 1);
    let one = |v: u64| (ProjectivePoint::Affine(k.element(v)), 1);
    assert!(matches!(
        RamificationProfile::new(&k, 3, vec![one(0), one(1)]),
        Err(Error::InvalidDivisor(_))
    ));
    assert!(matches!(
        RamificationProfile::new(&k, 2, vec![one(0), one(0)]),
        Err(Error::InvalidDivisor(_))
    ));
    let other = fld(5, 2);
    let div = RamificationProfile::new(&other, 2, vec![(ProjectivePoint::Infinity, 2)]).unwrap();
    assert_eq!(
        fiber_by_ramification(&k, &div, Exec::default()).unwrap_err(),
        Error::FieldMismatch
    );
}

#[test]
fn exec_strategies_agree_on_reports() {
    let k = fld(5, 1);
    let a = enumerate::classify_faber_thompson(&k, Exec::Sequential).unwrap();
    let b = enumerate::classify_faber_thompson(&k, Exec::Parallel).unwrap();
    let fa: Vec<_> = a.forms().collect();
    let fb: Vec<_> = b.forms().collect();
    assert_eq!(fa, fb);
}
