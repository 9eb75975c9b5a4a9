//! Explicit constructions.
//!
//! * The degree-3 family `f_u = (x^3 + u x^2) / ((2u + 3) x - (u + 2))`,
//!   ramified at `0, 1, ∞` and `φ(u) = -(u^2 + 2u)/(2u + 3)`.
//! * A search over a finite field `k` of characteristic `p > 3` for a value
//!   `c ∉ φ(k) ∪ {0, 1}`; solving `φ(u) = c` in the quadratic extension
//!   yields a simply ramified cubic with `k`-rational ramification that is
//!   not equivalent to anything defined over `k`.
//! * The family `f_t = g/h + t x^p`, whose Wronskian does not depend on `t`
//!   when the pole order at infinity is at least `p`.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::gf::{Field, FieldElement};
use crate::poly::{dense, Poly};
use crate::ratfunc::{
    MobiusTransformation, ProjectivePoint, RamificationProfile, RationalFunction, StandardForm,
};

fn require_char_above_3(field: &Field) -> Result<()> {
    match field.characteristic() {
        p if p <= 3 => Err(Error::UnsupportedCharacteristic(p)),
        _ => Ok(()),
    }
}

/// Numerator and denominator of `f_u` before any cancellation.
pub fn fu_pair(u: &FieldElement) -> (Poly, Poly) {
    let f = u.field();
    let u = u.value();
    let g = Poly::from_raw(f.clone(), vec![0, 0, u, 1]);
    let lin = f.add(f.add(u, u), f.from_int(3));
    let cst = f.neg(f.add(u, f.from_int(2)));
    (g, Poly::from_raw(f.clone(), vec![cst, lin]))
}

/// `f_u`, rejecting the parameters where it drops below degree 3.
///
/// Available in every characteristic except 3. In characteristic 2 the pair
/// always shares a factor, so every `u` is rejected there.
pub fn fu(u: &FieldElement) -> Result<RationalFunction> {
    let f = u.field();
    if f.characteristic() == 3 {
        return Err(Error::UnsupportedCharacteristic(3));
    }
    let v = u.value();
    if v == f.from_int(-1) || v == f.from_int(-2) {
        return Err(Error::DegenerateParameter(format!(
            "u = {u} makes f_u degenerate"
        )));
    }
    let (g, h) = fu_pair(u);
    let r = RationalFunction::new(&g, &h)?;
    if r.degree() < 3 {
        return Err(Error::DegenerateParameter(format!(
            "f_u has degree {} at u = {u}",
            r.degree()
        )));
    }
    Ok(r)
}

/// The fourth ramification point of `f_u`; infinity when `2u + 3 = 0`.
pub fn phi(u: &FieldElement) -> ProjectivePoint {
    let f = u.field();
    let v = u.value();
    let num = f.neg(f.add(f.mul(v, v), f.add(v, v)));
    let den = f.add(f.add(v, v), f.from_int(3));
    match f.div(num, den) {
        Some(c) => ProjectivePoint::Affine(f.element(c)),
        None => ProjectivePoint::Infinity,
    }
}

/// `{φ(u) : u ∈ k, 2u + 3 ≠ 0}`, in enumeration order.
pub fn phi_image(k: &Field) -> Result<Vec<FieldElement>> {
    require_char_above_3(k)?;
    let set: BTreeSet<FieldElement> = k
        .elements()
        .filter_map(|u| match phi(&u) {
            ProjectivePoint::Affine(c) => Some(c),
            ProjectivePoint::Infinity => None,
        })
        .collect();
    Ok(set.into_iter().collect())
}

/// `u^2 + (2 + 2c) u + 3c`, whose roots are the solutions of `φ(u) = c`.
pub fn phi_fiber_quadratic(c: &FieldElement) -> Poly {
    let f = c.field();
    let v = c.value();
    let lin = f.add(f.from_int(2), f.add(v, v));
    let cst = f.mul(f.from_int(3), v);
    Poly::from_raw(f.clone(), vec![cst, lin, 1])
}

/// A simply ramified cubic over `F_{q^2}` with ramification in `P^1(F_q)`
/// that does not descend to `F_q`.
#[derive(Clone, Debug)]
pub struct CounterexampleWitness {
    pub base: Field,
    pub c: FieldElement,
    pub extension: Field,
    pub u: FieldElement,
    pub function: RationalFunction,
    pub profile: RamificationProfile,
    pub descends: bool,
}

impl CounterexampleWitness {
    /// Re-checks every invariant of the witness.
    pub fn verify(&self) -> Result<()> {
        let fail = |why: &str| Err(Error::InvariantViolation(format!("counterexample: {why}")));
        let n = self.base.extension_degree();
        let c_ext = self.c.embed(&self.extension)?;
        if phi(&self.u) != ProjectivePoint::Affine(c_ext.clone()) {
            return fail("phi(u) != c");
        }
        if self.c.is_zero() || self.c == self.base.one() {
            return fail("c in {0, 1}");
        }
        if self.u.is_in_subfield(n)? {
            return fail("u lies in the base field");
        }
        let expected = RamificationProfile::new(
            &self.extension,
            3,
            vec![
                (ProjectivePoint::Affine(self.extension.zero()), 1),
                (ProjectivePoint::Affine(self.extension.one()), 1),
                (ProjectivePoint::Affine(c_ext), 1),
                (ProjectivePoint::Infinity, 1),
            ],
        )?;
        if self.profile != expected || self.function.ramification_profile()? != expected {
            return fail("unexpected ramification profile");
        }
        if !self.function.is_simply_ramified()? {
            return fail("not simply ramified");
        }
        if !self.function.ramification_points_rational_over(n)? {
            return fail("ramification not rational over the base");
        }
        if self.descends || self.function.descends_to(n)? {
            return fail("function descends to the base field");
        }
        Ok(())
    }
}

/// Takes the first `c ∈ k ∖ {0, 1}` outside `φ(k)`, solves `φ(u) = c` in the
/// quadratic extension, picks the least root and returns the verified witness.
pub fn search_counterexample(k: &Field, seed: u64) -> Result<CounterexampleWitness> {
    require_char_above_3(k)?;
    let image: HashSet<FieldElement> = phi_image(k)?.into_iter().collect();
    let n = k.extension_degree();
    let ext = Field::new(k.characteristic(), 2 * n)?;
    for c in k.elements().skip(2) {
        if image.contains(&c) {
            continue;
        }
        let quad = phi_fiber_quadratic(&c);
        let fac = quad.factor(seed)?;
        if fac.factors.iter().any(|(b, _)| b.degree() == Some(1)) {
            continue;
        }
        let roots = quad.embed(&ext)?.roots_in_field()?;
        let Some(u) = roots.into_iter().min() else {
            continue;
        };
        let function = fu(&u)?;
        let profile = function.ramification_profile()?;
        let descends = function.descends_to(n)?;
        let witness = CounterexampleWitness {
            base: k.clone(),
            c,
            extension: ext.clone(),
            u,
            function,
            profile,
            descends,
        };
        witness.verify()?;
        return Ok(witness);
    }
    Err(Error::SearchExhausted(format!(
        "every c in {k} lies in φ(k) ∪ {{0, 1}}"
    )))
}

/// One member `f_t = (g + t x^p h) / h` of the constant-Wronskian family.
#[derive(Clone, Debug)]
pub struct FamilyWitness {
    pub base: StandardForm,
    pub parameter: FieldElement,
    pub member: RationalFunction,
    pub standard_form: StandardForm,
    /// Monic Wronskian shared with the base.
    pub wronskian: Poly,
    /// Whether the member's class descends to the base's field.
    pub descends: bool,
}

/// Builds `f_t` for `t` in the base field or an extension of it.
pub fn constant_wronskian_family(base: &StandardForm, t: &FieldElement) -> Result<FamilyWitness> {
    let bf = base.field();
    let p = bf.characteristic();
    let pole = base.pole_order_at_infinity();
    if (pole as u64) < p {
        return Err(Error::HypothesisNotMet(format!(
            "ramification index at infinity is {pole}, needs at least {p}"
        )));
    }
    let kf = t.field();
    let g = base.g().embed(kf)?;
    let h = base.h().embed(kf)?;
    let shifted = dense::shift(&dense::scale(kf, h.raw(), t.value()), p as usize);
    let num = Poly::from_raw(kf.clone(), dense::add(kf, g.raw(), &shifted));
    let member = RationalFunction::new(&num, &h)?;
    if member.degree() != base.degree() {
        return Err(Error::DegenerateParameter(format!(
            "t = {t} lowers the degree to {}",
            member.degree()
        )));
    }
    let (wronskian, _) = member.wronskian_monic()?;
    let (base_wr, _) = base.to_ratfunc().embed(kf)?.wronskian_monic()?;
    if wronskian != base_wr {
        return Err(Error::InvariantViolation(format!(
            "Wronskian changed at t = {t}"
        )));
    }
    let standard_form = member.standard_form();
    let descends = standard_form.descends_to(bf.extension_degree())?;
    Ok(FamilyWitness {
        base: base.clone(),
        parameter: t.clone(),
        member,
        standard_form,
        wronskian,
        descends,
    })
}

/// Parameters for a batch over `F_{q^r}`: the elements outside `F_q` when
/// `r > 1`, all of `F_q` when `r = 1`, in enumeration order.
pub fn batch_parameters(base: &Field, r: u32) -> Result<Vec<FieldElement>> {
    let n = base.extension_degree();
    let ext = Field::new(base.characteristic(), n * r)?;
    if r == 1 {
        return Ok(ext.elements().collect());
    }
    Ok(ext
        .elements()
        .filter(|t| !t.is_in_subfield(n).expect("n divides n r"))
        .collect())
}

/// `count` family members with distinct parameters, skipping degenerate
/// ones, checked pairwise inequivalent.
pub fn family_witness_batch(
    base: &StandardForm,
    r: u32,
    count: usize,
    exec: Exec,
) -> Result<Vec<FamilyWitness>> {
    let params = batch_parameters(base.field(), r)?;
    let built = exec.map(&params, |t| constant_wronskian_family(base, t));
    let mut out = Vec::with_capacity(count);
    for w in built {
        match w {
            Ok(w) => out.push(w),
            Err(Error::DegenerateParameter(_)) => continue,
            Err(e) => return Err(e),
        }
        if out.len() == count {
            break;
        }
    }
    if out.len() < count {
        return Err(Error::InsufficientParameters {
            available: out.len(),
            requested: count,
        });
    }
    let distinct: HashSet<&StandardForm> = out.iter().map(|w| &w.standard_form).collect();
    if distinct.len() != out.len() {
        return Err(Error::InvariantViolation(
            "two family members are equivalent".into(),
        ));
    }
    Ok(out)
}

/// Standard form of `f ∘ σ` where `σ(∞) = point`, so that `point` becomes
/// the ramification point at infinity.
pub fn move_to_infinity(f: &RationalFunction, point: &ProjectivePoint) -> Result<StandardForm> {
    match point {
        ProjectivePoint::Infinity => Ok(f.standard_form()),
        ProjectivePoint::Affine(c) => {
            let fld = f.field();
            let sigma = MobiusTransformation::from_raw(fld, [c.value(), 1, 1, 0])?;
            Ok(f.pre_compose(&sigma)?.standard_form())
        }
    }
}

/// A rational ramification point of index at least `p`, preferring infinity.
pub fn wild_rational_point(f: &RationalFunction) -> Result<Option<ProjectivePoint>> {
    let p = f.field().characteristic() as u32;
    let (w, _) = f.wronskian_monic()?;
    let inf = ProjectivePoint::Infinity;
    if w.degree() < Some(2 * f.degree() - 2) && f.ramification_index(&inf)? >= p {
        return Ok(Some(inf));
    }
    let mut roots = w.roots_in_field()?;
    roots.dedup();
    for c in roots {
        let pt = ProjectivePoint::Affine(c);
        if f.ramification_index(&pt)? >= p {
            return Ok(Some(pt));
        }
    }
    Ok(None)
}

/// Moves a rational point of index at least `p` to infinity, giving a valid
/// base for [`constant_wronskian_family`].
pub fn family_base(f: &RationalFunction) -> Result<(ProjectivePoint, StandardForm)> {
    let p = f.field().characteristic();
    let point = wild_rational_point(f)?.ok_or_else(|| {
        Error::HypothesisNotMet(format!(
            "no rational point of ramification index at least {p}"
        ))
    })?;
    let moved = move_to_infinity(f, &point)?;
    Ok((point, moved))
}

/// Number of non-degenerate parameters available to [`family_witness_batch`].
pub fn usable_parameters(base: &StandardForm, r: u32) -> Result<usize> {
    let params = batch_parameters(base.field(), r)?;
    let mut n = 0;
    for t in &params {
        match constant_wronskian_family(base, t) {
            Ok(_) => n += 1,
            Err(Error::DegenerateParameter(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(n)
}
