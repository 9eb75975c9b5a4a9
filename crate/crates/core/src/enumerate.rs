//! Exhaustive scans over standard forms.
//!
//! For each `e` in `0..d` the candidates are `g` monic of degree `d` with no
//! `x^e` term and `h` monic of degree `e`, the free coefficients read as the
//! base-`q` digits of an index (constant terms of `g` least significant, then
//! the coefficients of `h`). Keeping only coprime separable pairs visits every
//! separable class exactly once.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::construct::{self, FamilyWitness};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::gf::{Field, FieldElement, Gf};
use crate::poly::{dense, Poly};
use crate::ratfunc::{ProjectivePoint, RamificationProfile, RationalFunction, StandardForm};

/// Default cap on the number of candidates.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug)]
pub struct ClassRecord {
    pub form: StandardForm,
    pub profile: RamificationProfile,
}

#[derive(Clone, Debug)]
pub struct Violation {
    pub form: StandardForm,
    pub diagnostic: String,
}

#[derive(Clone, Debug)]
pub struct FiberCount {
    pub divisor: RamificationProfile,
    pub count: usize,
}

/// A constant-Wronskian family grown from one base class.
#[derive(Clone, Debug)]
pub struct FamilySummary {
    pub base: StandardForm,
    /// Rational point of index at least `p` sent to infinity.
    pub point: ProjectivePoint,
    pub moved: StandardForm,
    pub wronskian: Poly,
    pub members: Vec<FamilyWitness>,
}

impl FamilySummary {
    pub fn non_descending(&self) -> usize {
        self.members.iter().filter(|w| !w.descends).count()
    }
}

#[derive(Clone, Debug)]
pub struct ParameterMatch {
    pub u: FieldElement,
    pub form: StandardForm,
}

#[derive(Clone, Debug)]
pub struct EnumerationReport {
    pub field: Field,
    pub degree: usize,
    pub filter: String,
    pub scanned: u64,
    pub classes: Vec<ClassRecord>,
    pub violations: Vec<Violation>,
    pub fibers: Vec<FiberCount>,
    pub families: Vec<FamilySummary>,
    pub matches: Vec<ParameterMatch>,
}

impl EnumerationReport {
    fn new(field: &Field, degree: usize, filter: impl Into<String>) -> EnumerationReport {
        EnumerationReport {
            field: field.clone(),
            degree,
            filter: filter.into(),
            scanned: 0,
            classes: Vec::new(),
            violations: Vec::new(),
            fibers: Vec::new(),
            families: Vec::new(),
            matches: Vec::new(),
        }
    }

    pub fn is_verified(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn forms(&self) -> impl Iterator<Item = &StandardForm> {
        self.classes.iter().map(|c| &c.form)
    }

    fn violate(&mut self, form: &StandardForm, diagnostic: impl Into<String>) {
        self.violations.push(Violation {
            form: form.clone(),
            diagnostic: diagnostic.into(),
        });
    }
}

impl fmt::Display for EnumerationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} d={} [{}]: {} scanned, {} classes, {} violations",
            self.field,
            self.degree,
            self.filter,
            self.scanned,
            self.classes.len(),
            self.violations.len()
        )
    }
}

/// Number of standard-form candidates of degree `d` over `F_q`, or `None` on
/// overflow.
pub fn candidate_count(q: u64, d: usize) -> Option<u64> {
    (0..d).try_fold(0u64, |acc, e| {
        let k = u32::try_from(d - 1 + e).ok()?;
        acc.checked_add(q.checked_pow(k)?)
    })
}

fn check_budget(field: &Field, d: usize, budget: u64) -> Result<u64> {
    match candidate_count(field.order(), d) {
        Some(n) if n <= budget => Ok(n),
        Some(n) => Err(Error::BudgetExceeded { needed: n, budget }),
        None => Err(Error::BudgetExceeded {
            needed: u64::MAX,
            budget,
        }),
    }
}

fn decode(field: &Field, d: usize, e: usize, mut idx: u64) -> (Vec<Gf>, Vec<Gf>) {
    let q = field.order();
    let mut g = vec![0; d + 1];
    g[d] = 1;
    for (i, c) in g.iter_mut().enumerate().take(d) {
        if i != e {
            *c = idx % q;
            idx /= q;
        }
    }
    let mut h = vec![0; e + 1];
    h[e] = 1;
    for c in h.iter_mut().take(e) {
        *c = idx % q;
        idx /= q;
    }
    (g, h)
}

fn is_class(field: &Field, g: &[Gf], h: &[Gf]) -> bool {
    let w = dense::sub(
        field,
        &dense::mul(field, h, &dense::derivative(field, g)),
        &dense::mul(field, g, &dense::derivative(field, h)),
    );
    !w.is_empty() && (h.len() == 1 || dense::is_one(&dense::gcd(field, g, h)))
}

/// Standard forms of every separable class of degree `d` accepted by
/// `predicate`, in enumeration order, plus the number of candidates scanned.
pub fn scan_classes<P>(
    field: &Field,
    d: usize,
    budget: u64,
    exec: Exec,
    predicate: P,
) -> Result<(u64, Vec<StandardForm>)>
where
    P: Fn(&StandardForm) -> bool + Sync + Send,
{
    if d == 0 {
        return Err(Error::ConstantFunction);
    }
    let total = check_budget(field, d, budget)?;
    let q = field.order();
    let mut out = Vec::new();
    for e in 0..d {
        let len = q.pow((d - 1 + e) as u32) as usize;
        out.extend(exec.filter_map(len, |i| {
            let (g, h) = decode(field, d, e, i as u64);
            if !is_class(field, &g, &h) {
                return None;
            }
            let sf = StandardForm::from_raw(field, g, h);
            predicate(&sf).then_some(sf)
        }));
    }
    Ok((total, out))
}

fn records(forms: Vec<StandardForm>, exec: Exec) -> Result<Vec<ClassRecord>> {
    exec.map(&forms, |form| {
        let profile = form.to_ratfunc().ramification_profile()?;
        Ok(ClassRecord {
            form: form.clone(),
            profile,
        })
    })
    .into_iter()
    .collect()
}

/// Every separable class of degree `d` over `field` satisfying `predicate`,
/// each with its ramification profile.
pub fn enumerate_classes<P>(
    field: &Field,
    d: usize,
    filter: &str,
    predicate: P,
    exec: Exec,
) -> Result<EnumerationReport>
where
    P: Fn(&StandardForm) -> bool + Sync + Send,
{
    let (scanned, forms) = scan_classes(field, d, DEFAULT_BUDGET, exec, predicate)?;
    let mut report = EnumerationReport::new(field, d, filter);
    report.scanned = scanned;
    report.classes = records(forms, exec)?;
    let distinct: HashSet<&StandardForm> = report.forms().collect();
    if distinct.len() != report.classes.len() {
        return Err(Error::InvariantViolation(
            "a class was emitted twice".into(),
        ));
    }
    Ok(report)
}

/// Classes of degree `d` over `field` whose profile equals `divisor`.
///
/// The test compares the monic Wronskian with the affine part of the divisor
/// and the Wronskian degree with the length at infinity.
pub fn fiber_by_ramification(
    field: &Field,
    divisor: &RamificationProfile,
    exec: Exec,
) -> Result<EnumerationReport> {
    if divisor.field() != field {
        return Err(Error::FieldMismatch);
    }
    let d = divisor.degree();
    let target = divisor.affine_polynomial();
    let expected_len = target.raw().len();
    let report_filter = format!("profile = {divisor}");
    let mut report = enumerate_classes(
        field,
        d,
        &report_filter,
        |sf| {
            let raw = sf
                .to_ratfunc()
                .wronskian()
                .expect("separable by construction");
            raw.raw().len() == expected_len
                && raw.monic().map(|(_, m)| m == target).unwrap_or(false)
        },
        exec,
    )?;
    for c in &report.classes {
        if &c.profile != divisor {
            return Err(Error::InvariantViolation(format!(
                "fiber member {} has profile {}",
                c.form, c.profile
            )));
        }
    }
    report.fibers.push(FiberCount {
        divisor: divisor.clone(),
        count: report.classes.len(),
    });
    Ok(report)
}

/// Simply ramified classes over `F_{3^n}` with ramification defined over
/// `F_{3^m}`; a violation is such a class that does not descend to `F_{3^m}`.
pub fn verify_char3_simple(
    field: &Field,
    d: usize,
    m: u32,
    exec: Exec,
) -> Result<EnumerationReport> {
    if field.characteristic() != 3 {
        return Err(Error::UnsupportedCharacteristic(field.characteristic()));
    }
    if !field.has_subfield(m) {
        return Err(Error::NotASubfield {
            p: 3,
            m,
            n: field.extension_degree(),
        });
    }
    let mut report = enumerate_classes(
        field,
        d,
        &format!("simply ramified, ramification over F_{}", 3u64.pow(m)),
        |sf| {
            let f = sf.to_ratfunc();
            f.is_simply_ramified().unwrap_or(false)
                && f.ramification_points_rational_over(m).unwrap_or(false)
        },
        exec,
    )?;
    let checks: Vec<Vec<String>> = exec.map(&report.classes, |c| {
        tame_check(c).unwrap_or_else(|e| vec![e.to_string()])
    });
    let classes = report.classes.clone();
    for (c, problems) in classes.iter().zip(checks) {
        for why in problems {
            report.violate(&c.form, why);
        }
        if !c.form.descends_to(m)? {
            report.violate(&c.form, format!("does not descend to F_{}", 3u64.pow(m)));
        }
    }
    Ok(report)
}

fn tame_check(c: &ClassRecord) -> Result<Vec<String>> {
    let f = c.form.to_ratfunc().embed(c.profile.field())?;
    let mut out = Vec::new();
    for (pt, l) in c.profile.entries() {
        let e = f.ramification_index(pt)?;
        if *l + 1 != e {
            out.push(format!("at {pt}: length {l} but index {e}"));
        }
    }
    Ok(out)
}

/// Which low-characteristic family to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NegativeKind {
    /// Characteristic 2, any separable base class.
    Char2All,
    /// Characteristic 3, base classes that are not simply ramified.
    Char3NonSimple,
}

impl NegativeKind {
    fn characteristic(self) -> u64 {
        match self {
            NegativeKind::Char2All => 2,
            NegativeKind::Char3NonSimple => 3,
        }
    }
}

/// Builds the constant-Wronskian family over `F_{q^r}` for one base class.
/// `count` defaults to every usable parameter.
pub fn low_char_family(
    kind: NegativeKind,
    f: &RationalFunction,
    r: u32,
    count: Option<usize>,
    exec: Exec,
) -> Result<FamilySummary> {
    let p = f.field().characteristic();
    if p != kind.characteristic() {
        return Err(Error::UnsupportedCharacteristic(p));
    }
    if kind == NegativeKind::Char3NonSimple && f.is_simply_ramified()? {
        return Err(Error::HypothesisNotMet(
            "the base is simply ramified".into(),
        ));
    }
    let (point, moved) = construct::family_base(f)?;
    let requested = match count {
        Some(c) => c,
        None => construct::usable_parameters(&moved, r)?,
    };
    let members = construct::family_witness_batch(&moved, r, requested, exec)?;
    let (wronskian, _) = moved.to_ratfunc().wronskian_monic()?;
    Ok(FamilySummary {
        base: f.standard_form(),
        point,
        moved,
        wronskian,
        members,
    })
}

/// Families over `F_{q^r}` for every base class of degree `d` over `field`
/// that meets the hypothesis of `kind`.
///
/// A violation is a base whose batch has fewer non-descending members than
/// requested.
pub fn verify_low_char_negative(
    kind: NegativeKind,
    field: &Field,
    d: usize,
    r: u32,
    count: Option<usize>,
    exec: Exec,
) -> Result<EnumerationReport> {
    let p = field.characteristic();
    if p != kind.characteristic() {
        return Err(Error::UnsupportedCharacteristic(p));
    }
    let filter = match kind {
        NegativeKind::Char2All => "rational point of index >= 2",
        NegativeKind::Char3NonSimple => "not simply ramified, rational point of index >= 3",
    };
    let mut report = enumerate_classes(
        field,
        d,
        filter,
        |sf| {
            let f = sf.to_ratfunc();
            if kind == NegativeKind::Char3NonSimple && f.is_simply_ramified().unwrap_or(true) {
                return false;
            }
            matches!(construct::wild_rational_point(&f), Ok(Some(_)))
        },
        exec,
    )?;
    let forms: Vec<StandardForm> = report.forms().cloned().collect();
    for form in forms {
        let summary = low_char_family(kind, &form.to_ratfunc(), r, count, exec)?;
        let want = count.unwrap_or(summary.members.len());
        if summary.non_descending() < want {
            report.violate(
                &form,
                format!(
                    "{} of {want} members fail to descend",
                    summary.non_descending()
                ),
            );
        }
        report.families.push(summary);
    }
    Ok(report)
}

/// Matches the classes of degree 3 over `field` ramified at `0`, `1` and
/// infinity against `f_u` for `u ∉ {-1, -2}`.
pub fn classify_faber_thompson(field: &Field, exec: Exec) -> Result<EnumerationReport> {
    let p = field.characteristic();
    if p <= 3 {
        return Err(Error::UnsupportedCharacteristic(p));
    }
    let mut report = enumerate_classes(
        field,
        3,
        "ramified at 0, 1, inf",
        |sf| {
            let w = sf
                .to_ratfunc()
                .wronskian()
                .expect("separable by construction");
            sf.pole_order_at_infinity() >= 2
                && w.eval(&field.zero()).map(|v| v.is_zero()).unwrap_or(false)
                && w.eval(&field.one()).map(|v| v.is_zero()).unwrap_or(false)
        },
        exec,
    )?;
    let index: HashMap<StandardForm, usize> = report
        .forms()
        .cloned()
        .enumerate()
        .map(|(i, f)| (f, i))
        .collect();
    let mut claimed = vec![false; report.classes.len()];
    let minus = [field.from_int(-1), field.from_int(-2)];
    for u in field.elements() {
        if minus.contains(&u.value()) {
            continue;
        }
        let form = construct::fu(&u)?.standard_form();
        match index.get(&form) {
            Some(&i) if claimed[i] => {
                report.violate(&form, format!("u = {u} claims a class twice"))
            }
            Some(&i) => {
                claimed[i] = true;
                report.matches.push(ParameterMatch { u, form });
            }
            None => report.violate(&form, format!("f_u for u = {u} is not in the scan")),
        }
    }
    let unclaimed: Vec<StandardForm> = report
        .forms()
        .zip(&claimed)
        .filter(|(_, c)| !**c)
        .map(|(f, _)| f.clone())
        .collect();
    for form in unclaimed {
        report.violate(&form, "no parameter u gives this class");
    }
    Ok(report)
}
