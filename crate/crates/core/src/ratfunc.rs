//! Rational functions on the projective line over a finite field.
//!
//! A [`RationalFunction`] is stored as a coprime pair `g/h` with `h` monic.
//! Its Wronskian `h g' - g h'` determines the ramification profile: the
//! affine ramification points are the Wronskian's roots, each root's
//! multiplicity is the differential length there, and the length at
//! infinity is `2d - 2 - deg Wr`.
//!
//! Equivalence is post-composition by a Möbius transformation. Every class
//! has exactly one [`StandardForm`], which makes both equality of classes and
//! descent to a subfield coefficient checks.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement, Gf};
use crate::poly::{dense, Poly};

/// A point of `P^1`: an element of the field or infinity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum ProjectivePoint {
    Affine(FieldElement),
    Infinity,
}

impl ProjectivePoint {
    pub fn field(&self) -> Option<&Field> {
        match self {
            ProjectivePoint::Affine(a) => Some(a.field()),
            ProjectivePoint::Infinity => None,
        }
    }

    pub fn embed(&self, target: &Field) -> Result<ProjectivePoint> {
        Ok(match self {
            ProjectivePoint::Affine(a) => ProjectivePoint::Affine(a.embed(target)?),
            ProjectivePoint::Infinity => ProjectivePoint::Infinity,
        })
    }

    /// Whether the point is defined over `F_{p^m}`; infinity always is.
    pub fn is_rational_over(&self, m: u32) -> Result<bool> {
        match self {
            ProjectivePoint::Affine(a) => a.is_in_subfield(m),
            ProjectivePoint::Infinity => Ok(true),
        }
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjectivePoint::Affine(a) => write!(f, "{a}"),
            ProjectivePoint::Infinity => f.write_str("inf"),
        }
    }
}

/// `x -> (a x + b) / (c x + d)` with `ad - bc != 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MobiusTransformation {
    field: Field,
    coeffs: [Gf; 4],
}

impl MobiusTransformation {
    pub fn new(
        a: &FieldElement,
        b: &FieldElement,
        c: &FieldElement,
        d: &FieldElement,
    ) -> Result<MobiusTransformation> {
        let field = a.field();
        if [b, c, d].iter().any(|e| e.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Self::from_raw(field, [a.value(), b.value(), c.value(), d.value()])
    }

    pub fn from_raw(field: &Field, coeffs: [Gf; 4]) -> Result<MobiusTransformation> {
        let [a, b, c, d] = coeffs;
        if field.sub(field.mul(a, d), field.mul(b, c)) == 0 {
            return Err(Error::DegenerateTransformation);
        }
        Ok(MobiusTransformation {
            field: field.clone(),
            coeffs,
        })
    }

    pub fn identity(field: &Field) -> MobiusTransformation {
        Self::from_raw(field, [1, 0, 0, 1]).unwrap()
    }

    /// `x -> 1/x`.
    pub fn inversion(field: &Field) -> MobiusTransformation {
        Self::from_raw(field, [0, 1, 1, 0]).unwrap()
    }

    /// `x -> x + c`.
    pub fn translation(c: &FieldElement) -> MobiusTransformation {
        Self::from_raw(c.field(), [1, c.value(), 0, 1]).unwrap()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// `[a, b, c, d]` as field elements.
    pub fn coefficients(&self) -> [FieldElement; 4] {
        self.coeffs.map(|v| self.field.element(v))
    }

    pub fn determinant(&self) -> FieldElement {
        let f = &self.field;
        let [a, b, c, d] = self.coeffs;
        f.element(f.sub(f.mul(a, d), f.mul(b, c)))
    }

    pub fn inverse(&self) -> MobiusTransformation {
        let f = &self.field;
        let [a, b, c, d] = self.coeffs;
        MobiusTransformation {
            field: f.clone(),
            coeffs: [d, f.neg(b), f.neg(c), a],
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MobiusTransformation) -> Result<MobiusTransformation> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let [a, b, c, d] = self.coeffs;
        let [e, g, h, k] = other.coeffs;
        let dot = |x: Gf, y: Gf, z: Gf, w: Gf| f.add(f.mul(x, y), f.mul(z, w));
        Self::from_raw(
            f,
            [
                dot(a, e, b, h),
                dot(a, g, b, k),
                dot(c, e, d, h),
                dot(c, g, d, k),
            ],
        )
    }

    pub fn apply(&self, point: &ProjectivePoint) -> Result<ProjectivePoint> {
        let f = &self.field;
        let [a, b, c, d] = self.coeffs;
        let (num, den) = match point {
            ProjectivePoint::Infinity => (a, c),
            ProjectivePoint::Affine(x) => {
                if x.field() != f {
                    return Err(Error::FieldMismatch);
                }
                let x = x.value();
                (f.add(f.mul(a, x), b), f.add(f.mul(c, x), d))
            }
        };
        Ok(match f.div(num, den) {
            Some(v) => ProjectivePoint::Affine(f.element(v)),
            None => ProjectivePoint::Infinity,
        })
    }

    pub fn embed(&self, target: &Field) -> Result<MobiusTransformation> {
        let e = self.field.embedding(target)?;
        Ok(MobiusTransformation {
            field: target.clone(),
            coeffs: self.coeffs.map(|v| e.apply(v)),
        })
    }
}

impl fmt::Debug for MobiusTransformation {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.coefficients();
        write!(fm, "({a}*x+{b})/({c}*x+{d}) over {}", self.field)
    }
}

/// Coprime pair `g/h` with `h` monic and degree `max(deg g, deg h) >= 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
    degree: usize,
}

impl RationalFunction {
    /// Cancels the gcd and makes the denominator monic.
    pub fn new(g: &Poly, h: &Poly) -> Result<RationalFunction> {
        if g.field() != h.field() {
            return Err(Error::FieldMismatch);
        }
        if h.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let field = g.field();
        let common = dense::gcd(field, g.raw(), h.raw());
        let mut gr = dense::divmod(field, g.raw(), &common).0;
        let mut hr = dense::divmod(field, h.raw(), &common).0;
        let lc = *hr.last().expect("nonzero denominator");
        if lc != 1 {
            let inv = field.inv(lc).expect("nonzero");
            gr = dense::scale(field, &gr, inv);
            hr = dense::scale(field, &hr, inv);
        }
        Self::from_coprime(field, gr, hr)
    }

    /// `gr/hr` already coprime with `hr` monic.
    fn from_coprime(field: &Field, gr: Vec<Gf>, hr: Vec<Gf>) -> Result<RationalFunction> {
        let degree = dense::degree(&gr)
            .unwrap_or(0)
            .max(dense::degree(&hr).unwrap_or(0));
        if degree == 0 {
            return Err(Error::ConstantFunction);
        }
        Ok(RationalFunction {
            num: Poly::from_raw(field.clone(), gr),
            den: Poly::from_raw(field.clone(), hr),
            degree,
        })
    }

    /// The polynomial `g` viewed as `g/1`.
    pub fn polynomial(g: &Poly) -> Result<RationalFunction> {
        Self::new(g, &Poly::one(g.field()))
    }

    pub fn field(&self) -> &Field {
        self.num.field()
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn raw_wronskian(&self) -> Vec<Gf> {
        let f = self.field();
        let (g, h) = (self.num.raw(), self.den.raw());
        dense::sub(
            f,
            &dense::mul(f, h, &dense::derivative(f, g)),
            &dense::mul(f, g, &dense::derivative(f, h)),
        )
    }

    /// `h g' - g h'` for the stored pair.
    pub fn wronskian(&self) -> Result<Poly> {
        let w = self.raw_wronskian();
        if w.is_empty() {
            return Err(Error::Inseparable);
        }
        Ok(Poly::from_raw(self.field().clone(), w))
    }

    /// Monic Wronskian and its leading coefficient `α`.
    pub fn wronskian_monic(&self) -> Result<(Poly, FieldElement)> {
        let (lc, m) = self.wronskian()?.monic()?;
        Ok((m, lc))
    }

    pub fn is_separable(&self) -> bool {
        !self.raw_wronskian().is_empty()
    }

    fn length_at_infinity(&self, w: &Poly) -> u32 {
        (2 * self.degree - 2 - w.degree().expect("nonzero Wronskian")) as u32
    }

    /// Ramification points with differential lengths, over the smallest
    /// extension containing every Wronskian root.
    pub fn ramification_profile(&self) -> Result<RamificationProfile> {
        let (w, _) = self.wronskian_monic()?;
        let fac = w.factor(0)?;
        let r = fac
            .factors
            .iter()
            .filter_map(|(b, _)| b.degree())
            .fold(1usize, lcm);
        let base = self.field();
        let split = Field::new(base.characteristic(), base.extension_degree() * r as u32)?;
        let mut entries = Vec::new();
        for (b, mult) in &fac.factors {
            for root in b.embed(&split)?.roots_in_field()? {
                entries.push((ProjectivePoint::Affine(root), *mult));
            }
        }
        entries.sort();
        let at_inf = self.length_at_infinity(&w);
        if at_inf > 0 {
            entries.push((ProjectivePoint::Infinity, at_inf));
        }
        Ok(RamificationProfile {
            field: split,
            degree: self.degree,
            entries,
        })
    }

    /// Multiset of differential lengths, largest first, read off the
    /// squarefree decomposition of the Wronskian (no splitting field needed).
    pub fn differential_lengths(&self) -> Result<Vec<u32>> {
        let (w, _) = self.wronskian_monic()?;
        let mut out = Vec::new();
        if w.degree() != Some(0) {
            for (part, mult) in w.squarefree_decomposition()? {
                out.extend(std::iter::repeat_n(mult, part.degree().unwrap_or(0)));
            }
        }
        let at_inf = self.length_at_infinity(&w);
        if at_inf > 0 {
            out.push(at_inf);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        Ok(out)
    }

    /// Every differential length equals one.
    pub fn is_simply_ramified(&self) -> Result<bool> {
        Ok(self.differential_lengths()?.iter().all(|&l| l == 1))
    }

    /// Ramification index at `point`, from the order of vanishing of
    /// `f - f(P)` after moving `P` to `0`. Does not use the Wronskian.
    pub fn ramification_index(&self, point: &ProjectivePoint) -> Result<u32> {
        let field = self.field();
        let moved = match point {
            ProjectivePoint::Affine(c) => {
                if c.field() != field {
                    return Err(Error::FieldMismatch);
                }
                self.pre_compose(&MobiusTransformation::translation(c))?
            }
            ProjectivePoint::Infinity => {
                self.pre_compose(&MobiusTransformation::inversion(field))?
            }
        };
        let (g, h) = (moved.num.raw(), moved.den.raw());
        let h0 = h.first().copied().unwrap_or(0);
        let order = if h0 == 0 {
            lowest_order(h)
        } else {
            let v = field
                .div(g.first().copied().unwrap_or(0), h0)
                .expect("h(0) != 0");
            lowest_order(&dense::sub(field, g, &dense::scale(field, h, v)))
        };
        Ok(order as u32)
    }

    /// `σ ∘ f = (a g + b h) / (c g + d h)`.
    pub fn post_compose(&self, sigma: &MobiusTransformation) -> Result<RationalFunction> {
        if sigma.field() != self.field() {
            return Err(Error::FieldMismatch);
        }
        let f = self.field();
        let [a, b, c, d] = sigma.coeffs;
        let (g, h) = (self.num.raw(), self.den.raw());
        let lin = |x: Gf, y: Gf| dense::add(f, &dense::scale(f, g, x), &dense::scale(f, h, y));
        let (ng, nh) = (lin(a, b), lin(c, d));
        RationalFunction::new(
            &Poly::from_raw(f.clone(), ng),
            &Poly::from_raw(f.clone(), nh),
        )
    }

    /// `f ∘ σ`, clearing denominators homogeneously in degree `d`.
    pub fn pre_compose(&self, sigma: &MobiusTransformation) -> Result<RationalFunction> {
        if sigma.field() != self.field() {
            return Err(Error::FieldMismatch);
        }
        let f = self.field();
        let [a, b, c, d] = sigma.coeffs;
        let top = [b, a];
        let bottom = [d, c];
        let n = self.degree;
        let mut top_pows = vec![vec![1]];
        let mut bottom_pows = vec![vec![1]];
        for i in 0..n {
            top_pows.push(dense::mul(f, &top_pows[i], &top));
            bottom_pows.push(dense::mul(f, &bottom_pows[i], &bottom));
        }
        let homogenize = |p: &[Gf]| {
            p.iter().enumerate().fold(Vec::new(), |acc, (i, &ci)| {
                let term = dense::mul(f, &top_pows[i], &bottom_pows[n - i]);
                dense::add(f, &acc, &dense::scale(f, &term, ci))
            })
        };
        let ng = homogenize(self.num.raw());
        let nh = homogenize(self.den.raw());
        RationalFunction::new(
            &Poly::from_raw(f.clone(), ng),
            &Poly::from_raw(f.clone(), nh),
        )
    }

    /// The unique standard-form representative of the post-composition class.
    pub fn standard_form(&self) -> StandardForm {
        let f = self.field();
        let mut g = self.num.raw().to_vec();
        let mut h = self.den.raw().to_vec();
        let dg = dense::degree(&g);
        let dh = dense::degree(&h).expect("nonzero denominator");
        if dg.is_none_or(|dg| dg <= dh) {
            // f(∞) = v is finite; σ = 1/(x - v) sends it to ∞
            let v = if dg == Some(dh) {
                *g.last().unwrap()
            } else {
                0
            };
            let shifted = dense::sub(f, &g, &dense::scale(f, &h, v));
            (g, h) = (h, shifted);
            let (lc, hm) = dense::monic(f, &h);
            h = hm;
            g = dense::scale(f, &g, f.inv(lc).expect("nonzero"));
        }
        // x -> x/a makes g monic
        g = dense::monic(f, &g).1;
        // x -> x - b removes the x^e term
        let e = dense::degree(&h).expect("nonzero denominator");
        let b = g[e];
        if b != 0 {
            g = dense::sub(f, &g, &dense::scale(f, &h, b));
        }
        StandardForm {
            g: Poly::from_raw(f.clone(), g),
            h: Poly::from_raw(f.clone(), h),
        }
    }

    pub fn is_equivalent(&self, other: &RationalFunction) -> Result<bool> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(self.degree == other.degree && self.standard_form() == other.standard_form())
    }

    /// Whether the class has a representative over `F_{p^m}`.
    pub fn descends_to(&self, m: u32) -> Result<bool> {
        self.standard_form().descends_to(m)
    }

    /// Whether every ramification point is defined over `F_{p^m}`.
    pub fn ramification_points_rational_over(&self, m: u32) -> Result<bool> {
        let f = self.field();
        if !f.has_subfield(m) {
            return Err(Error::NotASubfield {
                p: f.characteristic(),
                m,
                n: f.extension_degree(),
            });
        }
        let w = self.wronskian()?;
        let radical = w.radical()?;
        if radical.degree() == Some(0) {
            return Ok(true);
        }
        let sub_order = f.characteristic().pow(m);
        let x = dense::rem(f, &[0, 1], radical.raw());
        Ok(dense::powmod(f, &[0, 1], sub_order, radical.raw()) == x)
    }

    /// Coefficient-wise image in an extension field.
    pub fn embed(&self, target: &Field) -> Result<RationalFunction> {
        Ok(RationalFunction {
            num: self.num.embed(target)?,
            den: self.den.embed(target)?,
            degree: self.degree,
        })
    }
}

fn lowest_order(p: &[Gf]) -> usize {
    p.iter().position(|&c| c != 0).expect("nonzero polynomial")
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

fn paren(p: &Poly) -> String {
    let s = p.to_string();
    if p.coeffs().filter(|c| !c.is_zero()).count() > 1 || s.contains('+') {
        format!("({s})")
    } else {
        s
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", paren(&self.num), paren(&self.den))
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.field())
    }
}

/// Points of `P^1` with differential lengths summing to `2d - 2`.
///
/// Entries are sorted: affine points in enumeration order, then infinity.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RamificationProfile {
    field: Field,
    degree: usize,
    entries: Vec<(ProjectivePoint, u32)>,
}

impl RamificationProfile {
    /// Validates a divisor: lengths positive, points distinct and in `field`,
    /// total `2d - 2`.
    pub fn new(
        field: &Field,
        degree: usize,
        mut entries: Vec<(ProjectivePoint, u32)>,
    ) -> Result<RamificationProfile> {
        if degree == 0 {
            return Err(Error::InvalidDivisor("degree must be positive".into()));
        }
        if entries.iter().any(|(_, l)| *l == 0) {
            return Err(Error::InvalidDivisor("lengths must be positive".into()));
        }
        if entries
            .iter()
            .any(|(p, _)| p.field().is_some_and(|f| f != field))
        {
            return Err(Error::FieldMismatch);
        }
        entries.sort();
        if entries.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidDivisor("points must be distinct".into()));
        }
        let total: u32 = entries.iter().map(|(_, l)| l).sum();
        if total as usize != 2 * degree - 2 {
            return Err(Error::InvalidDivisor(format!(
                "lengths sum to {total}, expected {}",
                2 * degree - 2
            )));
        }
        Ok(RamificationProfile {
            field: field.clone(),
            degree,
            entries,
        })
    }

    /// Field containing every point.
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn entries(&self) -> &[(ProjectivePoint, u32)] {
        &self.entries
    }

    pub fn points(&self) -> impl Iterator<Item = &ProjectivePoint> {
        self.entries.iter().map(|(p, _)| p)
    }

    pub fn length_at(&self, point: &ProjectivePoint) -> u32 {
        self.entries
            .iter()
            .find(|(p, _)| p == point)
            .map_or(0, |(_, l)| *l)
    }

    pub fn total_length(&self) -> u32 {
        self.entries.iter().map(|(_, l)| l).sum()
    }

    /// The type tuple: lengths, largest first.
    pub fn type_tuple(&self) -> Vec<u32> {
        let mut t: Vec<u32> = self.entries.iter().map(|(_, l)| *l).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn is_simple(&self) -> bool {
        self.entries.iter().all(|(_, l)| *l == 1)
    }

    /// Whether every point is defined over `F_{p^m}`.
    pub fn is_rational_over(&self, m: u32) -> Result<bool> {
        for p in self.points() {
            if !p.is_rational_over(m)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The monic polynomial `prod (x - c)^l` over the affine entries.
    pub fn affine_polynomial(&self) -> Poly {
        let f = &self.field;
        let mut acc = vec![1];
        for (p, l) in &self.entries {
            if let ProjectivePoint::Affine(c) = p {
                for _ in 0..*l {
                    acc = dense::mul(f, &acc, &[f.neg(c.value()), 1]);
                }
            }
        }
        Poly::from_raw(f.clone(), acc)
    }

    /// Image of every point under `sigma`, lengths unchanged. `sigma` may be
    /// defined over a subfield.
    pub fn map_points(&self, sigma: &MobiusTransformation) -> Result<RamificationProfile> {
        let sigma = &sigma.embed(&self.field)?;
        let entries = self
            .entries
            .iter()
            .map(|(p, l)| Ok((sigma.apply(p)?, *l)))
            .collect::<Result<Vec<_>>>()?;
        RamificationProfile::new(&self.field, self.degree, entries)
    }
}

impl fmt::Display for RamificationProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(p, l)| format!("{p}:{l}"))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `g/h` with `g` monic of degree `d`, `h` monic of degree `e < d`, no `x^e`
/// term in `g`, and `gcd(g, h) = 1`.
///
/// The free coefficients are coordinates on an affine chart of dimension
/// `2d - 2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StandardForm {
    g: Poly,
    h: Poly,
}

impl StandardForm {
    /// Checks the defining conditions.
    pub fn from_parts(g: &Poly, h: &Poly) -> Result<StandardForm> {
        if g.field() != h.field() {
            return Err(Error::FieldMismatch);
        }
        let bad = |why: &str| {
            Err(Error::InvariantViolation(format!(
                "not a standard form: {why}"
            )))
        };
        let (Some(d), Some(e)) = (g.degree(), h.degree()) else {
            return bad("zero polynomial");
        };
        if !g.is_monic() || !h.is_monic() {
            return bad("not monic");
        }
        if e >= d {
            return bad("deg h >= deg g");
        }
        if !g.coeff(e).is_zero() {
            return bad("g has an x^deg(h) term");
        }
        if g.gcd(h)?.degree() != Some(0) {
            return bad("g and h share a factor");
        }
        Ok(StandardForm {
            g: g.clone(),
            h: h.clone(),
        })
    }

    /// Unchecked constructor for callers that build valid pairs by design.
    pub(crate) fn from_raw(field: &Field, g: Vec<Gf>, h: Vec<Gf>) -> StandardForm {
        StandardForm {
            g: Poly::from_raw(field.clone(), g),
            h: Poly::from_raw(field.clone(), h),
        }
    }

    pub fn g(&self) -> &Poly {
        &self.g
    }

    pub fn h(&self) -> &Poly {
        &self.h
    }

    pub fn field(&self) -> &Field {
        self.g.field()
    }

    pub fn degree(&self) -> usize {
        self.g.degree().expect("nonzero")
    }

    /// Pole order at infinity, `deg g - deg h`.
    pub fn pole_order_at_infinity(&self) -> usize {
        self.degree() - self.h.degree().expect("nonzero")
    }

    pub fn to_ratfunc(&self) -> RationalFunction {
        RationalFunction {
            num: self.g.clone(),
            den: self.h.clone(),
            degree: self.degree(),
        }
    }

    /// The `2d - 2` free coefficients: `g` without its leading and `x^e`
    /// terms, then `h` without its leading term, constant terms first.
    pub fn chart_coordinates(&self) -> Vec<FieldElement> {
        let d = self.degree();
        let e = self.h.degree().expect("nonzero");
        (0..d)
            .filter(|&i| i != e)
            .map(|i| self.g.coeff(i))
            .chain((0..e).map(|i| self.h.coeff(i)))
            .collect()
    }

    /// All coefficients lie in `F_{p^m}`.
    pub fn descends_to(&self, m: u32) -> Result<bool> {
        Ok(self.g.coefficients_in_subfield(m)? && self.h.coefficients_in_subfield(m)?)
    }
}

impl fmt::Display for StandardForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ratfunc())
    }
}

impl fmt::Debug for StandardForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.field())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fld(p: u64, n: u32) -> Field {
        Field::new(p, n).unwrap()
    }

    fn rf(f: &Field, g: &[i64], h: &[i64]) -> RationalFunction {
        RationalFunction::new(&Poly::from_ints(f, g), &Poly::from_ints(f, h)).unwrap()
    }

    fn aff(f: &Field, v: i64) -> ProjectivePoint {
        ProjectivePoint::Affine(f.element(f.from_int(v)))
    }

    #[test]
    fn construction_cancels_and_normalizes() {
        let f2 = fld(2, 1);
        let r = rf(&f2, &[0, 0, 1, 1], &[1, 1]);
        assert_eq!(r, rf(&f2, &[0, 0, 1], &[1]));
        assert_eq!(r.degree(), 2);
        let f7 = fld(7, 1);
        let r = rf(&f7, &[0, 0, 1, 1], &[-3, 5]);
        assert!(r.denominator().is_monic());
        assert_eq!(
            RationalFunction::new(&Poly::one(&f2), &Poly::zero(&f2)).unwrap_err(),
            Error::ZeroDenominator
        );
        assert_eq!(
            RationalFunction::new(
                &Poly::from_ints(&f2, &[1, 1]),
                &Poly::from_ints(&f2, &[1, 1])
            )
            .unwrap_err(),
            Error::ConstantFunction
        );
    }

    #[test]
    fn wronskians() {
        let f3 = fld(3, 1);
        assert_eq!(
            rf(&f3, &[0, 0, 1], &[1]).wronskian().unwrap(),
            Poly::from_ints(&f3, &[0, 2])
        );
        assert_eq!(
            rf(&f3, &[0, 0, 0, 1], &[1]).wronskian().unwrap_err(),
            Error::Inseparable
        );
        let f7 = fld(7, 1);
        let (w, _) = rf(&f7, &[0, 0, 1, 1], &[-3, 5]).wronskian_monic().unwrap();
        assert_eq!(w, Poly::from_ints(&f7, &[0, 5, 1, 1]));
    }

    #[test]
    fn profiles() {
        let f2 = fld(2, 1);
        let p = rf(&f2, &[0, 1, 1], &[1]).ramification_profile().unwrap();
        assert_eq!(p.entries(), &[(ProjectivePoint::Infinity, 2)]);
        let p = rf(&f2, &[0, 0, 1, 1], &[1]).ramification_profile().unwrap();
        assert_eq!(
            p.entries(),
            &[(aff(&f2, 0), 2), (ProjectivePoint::Infinity, 2)]
        );
        let f5 = fld(5, 1);
        let p = rf(&f5, &[0, 0, 0, 1], &[-2, 3])
            .ramification_profile()
            .unwrap();
        assert_eq!(
            p.entries(),
            &[
                (aff(&f5, 0), 2),
                (aff(&f5, 1), 1),
                (ProjectivePoint::Infinity, 1)
            ]
        );
        // Wr = x^2 + 1 over F_3 needs F_9
        let f3 = fld(3, 1);
        let r = rf(&f3, &[2, 0, 1], &[0, 1]);
        let (w, _) = r.wronskian_monic().unwrap();
        assert_eq!(w, Poly::from_ints(&f3, &[1, 0, 1]));
        let p = r.ramification_profile().unwrap();
        assert_eq!(p.field(), &fld(3, 2));
        assert_eq!(p.type_tuple(), vec![1, 1]);
        assert!(!r.ramification_points_rational_over(1).unwrap());
    }

    #[test]
    fn ramification_indices() {
        let f2 = fld(2, 1);
        assert_eq!(
            rf(&f2, &[0, 1, 1], &[1])
                .ramification_index(&ProjectivePoint::Infinity)
                .unwrap(),
            2
        );
        assert_eq!(
            rf(&f2, &[0, 0, 1, 1], &[1])
                .ramification_index(&aff(&f2, 0))
                .unwrap(),
            2
        );
        let f3 = fld(3, 1);
        assert_eq!(
            rf(&f3, &[0, 0, 1], &[1])
                .ramification_index(&aff(&f3, 1))
                .unwrap(),
            1
        );
        // pole of order 2 at x = 1
        let f5 = fld(5, 1);
        assert_eq!(
            rf(&f5, &[1], &[1, -2, 1])
                .ramification_index(&aff(&f5, 1))
                .unwrap(),
            2
        );
        assert_eq!(
            rf(&f5, &[1], &[1, -2, 1])
                .ramification_index(&ProjectivePoint::Infinity)
                .unwrap(),
            2
        );
    }

    #[test]
    fn simple_ramification() {
        let f3 = fld(3, 1);
        assert!(rf(&f3, &[0, 0, 1], &[1]).is_simply_ramified().unwrap());
        assert!(!rf(&fld(2, 1), &[0, 1, 1], &[1])
            .is_simply_ramified()
            .unwrap());
        assert!(!rf(&fld(5, 1), &[0, 0, 0, 1], &[-2, 3])
            .is_simply_ramified()
            .unwrap());
    }

    #[test]
    fn compositions() {
        let f3 = fld(3, 1);
        let sq = rf(&f3, &[0, 0, 1], &[1]);
        assert_eq!(
            sq.post_compose(&MobiusTransformation::identity(&f3))
                .unwrap(),
            sq
        );
        let inv = MobiusTransformation::inversion(&f3);
        let x = rf(&f3, &[0, 1], &[1]);
        let back = x.post_compose(&inv).unwrap().post_compose(&inv).unwrap();
        assert_eq!(back, x);
        let moved = sq
            .pre_compose(&MobiusTransformation::translation(&f3.one()))
            .unwrap();
        assert_eq!(moved, rf(&f3, &[1, 2, 1], &[1]));
        let p = moved.ramification_profile().unwrap();
        assert_eq!(p.entries()[0], (aff(&f3, -1), 1));
        assert!(MobiusTransformation::from_raw(&f3, [1, 2, 2, 1]).is_err());
    }

    #[test]
    fn standard_forms() {
        let f5 = fld(5, 1);
        assert_eq!(
            rf(&f5, &[1], &[0, 1]).standard_form().to_ratfunc(),
            rf(&f5, &[0, 1], &[1])
        );
        let f7 = fld(7, 1);
        assert_eq!(
            rf(&f7, &[6, 4, 2], &[1]).standard_form().to_ratfunc(),
            rf(&f7, &[0, 2, 1], &[1])
        );
        assert_eq!(
            rf(&f5, &[1, 3], &[0, 1]).standard_form().to_ratfunc(),
            rf(&f5, &[0, 1], &[1])
        );
        let s = rf(&f7, &[3, 1, 0, 5], &[2, 0, 1]).standard_form();
        assert_eq!(s, s.to_ratfunc().standard_form());
        assert!(StandardForm::from_parts(s.g(), s.h()).is_ok());
    }

    #[test]
    fn equivalence_and_descent() {
        let f3 = fld(3, 1);
        assert!(!rf(&f3, &[0, 0, 1], &[1])
            .is_equivalent(&rf(&f3, &[0, 1, 1], &[1]))
            .unwrap());
        let f4 = fld(2, 2);
        let t = f4.generator().unwrap();
        let r = RationalFunction::polynomial(&Poly::new(&f4, &[f4.zero(), t, f4.one()]).unwrap())
            .unwrap();
        assert!(!r.descends_to(1).unwrap());
        assert!(r.descends_to(2).unwrap());
        let lifted = rf(&f3, &[1, 2, 0, 1], &[1, 1]).embed(&fld(3, 2)).unwrap();
        assert!(lifted.descends_to(1).unwrap());
        assert!(matches!(
            lifted.descends_to(3),
            Err(Error::NotASubfield { .. })
        ));
    }

    #[test]
    fn rationality_of_ramification() {
        let f9 = fld(3, 2);
        let sq = RationalFunction::polynomial(&Poly::from_ints(&f9, &[0, 0, 1])).unwrap();
        assert!(sq.ramification_points_rational_over(1).unwrap());
    }

    #[test]
    fn profile_validation() {
        let f5 = fld(5, 1);
        let ok = RamificationProfile::new(
            &f5,
            2,
            vec![(ProjectivePoint::Infinity, 1), (aff(&f5, 0), 1)],
        )
        .unwrap();
        assert_eq!(ok.entries()[0].0, aff(&f5, 0));
        assert!(RamificationProfile::new(&f5, 2, vec![(aff(&f5, 0), 1)]).is_err());
        assert!(
            RamificationProfile::new(&f5, 2, vec![(aff(&f5, 0), 1), (aff(&f5, 0), 1)]).is_err()
        );
    }
}
