//! Univariate polynomials over a [`Field`].

pub(crate) mod dense;

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement, Gf};

/// Dense polynomial, constant term first, always normalized.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Gf>,
}

/// `leading * prod base^mult` with monic irreducible, pairwise distinct bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub leading: FieldElement,
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn expand(&self) -> Poly {
        let field = self.leading.field().clone();
        let mut acc = vec![self.leading.value()];
        for (base, mult) in &self.factors {
            for _ in 0..*mult {
                acc = dense::mul(&field, &acc, &base.coeffs);
            }
        }
        Poly::from_raw(field, acc)
    }

    /// Largest degree among the irreducible factors.
    pub fn max_factor_degree(&self) -> usize {
        self.factors
            .iter()
            .filter_map(|(b, _)| b.degree())
            .max()
            .unwrap_or(0)
    }
}

impl Poly {
    /// Builds a polynomial from raw element indices, normalizing trailing zeros.
    pub fn from_raw(field: Field, mut coeffs: Vec<Gf>) -> Poly {
        debug_assert!(coeffs.iter().all(|&c| c < field.order()));
        dense::normalize(&mut coeffs);
        Poly { field, coeffs }
    }

    pub fn new(field: &Field, coeffs: &[FieldElement]) -> Result<Poly> {
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Poly::from_raw(
            field.clone(),
            coeffs.iter().map(|c| c.value()).collect(),
        ))
    }

    /// Polynomial with integer coefficients reduced into the prime field.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Poly {
        Poly::from_raw(
            field.clone(),
            coeffs.iter().map(|&c| field.from_int(c)).collect(),
        )
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::from_raw(field.clone(), Vec::new())
    }

    pub fn one(field: &Field) -> Poly {
        Poly::from_raw(field.clone(), vec![1])
    }

    pub fn x(field: &Field) -> Poly {
        Poly::from_raw(field.clone(), vec![0, 1])
    }

    pub fn constant(c: &FieldElement) -> Poly {
        Poly::from_raw(c.field().clone(), vec![c.value()])
    }

    /// `c * x^k`.
    pub fn monomial(c: &FieldElement, k: usize) -> Poly {
        Poly::from_raw(c.field().clone(), dense::shift(&[c.value()], k))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn raw(&self) -> &[Gf] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    /// Degree, with `None` standing in for the zero polynomial's `-inf`.
    pub fn degree(&self) -> Option<usize> {
        dense::degree(&self.coeffs)
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.field.element(self.coeffs.get(i).copied().unwrap_or(0))
    }

    pub fn coeffs(&self) -> impl Iterator<Item = FieldElement> + '_ {
        self.coeffs.iter().map(|&c| self.field.element(c))
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().map(|&c| self.field.element(c))
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn wrap(&self, coeffs: Vec<Gf>) -> Poly {
        Poly {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.wrap(dense::add(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.wrap(dense::sub(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.wrap(dense::mul(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn neg(&self) -> Poly {
        self.wrap(self.coeffs.iter().map(|&c| self.field.neg(c)).collect())
    }

    pub fn scale(&self, c: &FieldElement) -> Result<Poly> {
        if c.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        Ok(self.wrap(dense::scale(&self.field, &self.coeffs, c.value())))
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = vec![1];
        for _ in 0..e {
            acc = dense::mul(&self.field, &acc, &self.coeffs);
        }
        self.wrap(acc)
    }

    /// `(q, r)` with `self = q * divisor + r` and `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = dense::divmod(&self.field, &self.coeffs, &divisor.coeffs);
        Ok((self.wrap(q), self.wrap(r)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.wrap(dense::gcd(&self.field, &self.coeffs, &other.coeffs)))
    }

    /// Splits into leading coefficient and monic part. Errors on zero.
    pub fn monic(&self) -> Result<(FieldElement, Poly)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (lc, m) = dense::monic(&self.field, &self.coeffs);
        Ok((self.field.element(lc), self.wrap(m)))
    }

    pub fn derivative(&self) -> Poly {
        self.wrap(dense::derivative(&self.field, &self.coeffs))
    }

    pub fn eval(&self, x: &FieldElement) -> Result<FieldElement> {
        if x.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        Ok(self
            .field
            .element(dense::eval(&self.field, &self.coeffs, x.value())))
    }

    /// Coefficient-wise image under the fixed embedding into `target`.
    pub fn embed(&self, target: &Field) -> Result<Poly> {
        if &self.field == target {
            return Ok(self.clone());
        }
        let e = self.field.embedding(target)?;
        Ok(Poly::from_raw(
            target.clone(),
            self.coeffs.iter().map(|&c| e.apply(c)).collect(),
        ))
    }

    /// Whether every coefficient lies in the subfield `F_{p^m}`.
    pub fn coefficients_in_subfield(&self, m: u32) -> Result<bool> {
        for &c in &self.coeffs {
            if !self.field.in_subfield(c, m)? {
                return Ok(false);
            }
        }
        // m must divide n even for the zero polynomial
        self.field.in_subfield(0, m)
    }

    /// `(part, multiplicity)` pairs: monic, squarefree, pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Poly, u32)>> {
        let (_, m) = self.monic()?;
        Ok(dense::squarefree(&self.field, &m.coeffs)
            .into_iter()
            .map(|(c, k)| (self.wrap(c), k))
            .collect())
    }

    /// Squarefree part of the monic associate.
    pub fn radical(&self) -> Result<Poly> {
        let parts = self.squarefree_decomposition()?;
        Ok(self.wrap(parts.iter().fold(vec![1], |acc, (c, _)| {
            dense::mul(&self.field, &acc, &c.coeffs)
        })))
    }

    /// Complete factorization; `seed` only drives the randomized splitting.
    pub fn factor(&self, seed: u64) -> Result<Factorization> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (lc, fs) = dense::factor(&self.field, &self.coeffs, seed);
        Ok(Factorization {
            leading: self.field.element(lc),
            factors: fs.into_iter().map(|(c, k)| (self.wrap(c), k)).collect(),
        })
    }

    /// Roots in the coefficient field, repeated by multiplicity, in enumeration order.
    pub fn roots_in_field(&self) -> Result<Vec<FieldElement>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(dense::roots(&self.field, &self.coeffs, 0)
            .into_iter()
            .map(|r| self.field.element(r))
            .collect())
    }

    /// Rabin's test. Constants are neither units nor irreducibles here and error out.
    pub fn is_irreducible(&self) -> Result<bool> {
        match self.degree() {
            None | Some(0) => Err(Error::ZeroPolynomial),
            Some(_) => Ok(dense::is_irreducible(&self.field, &self.coeffs)),
        }
    }

    /// Draws monic polynomials from a seeded generator until one is irreducible.
    pub fn random_irreducible(field: &Field, degree: usize, seed: u64) -> Result<Poly> {
        if degree == 0 {
            return Err(Error::ZeroPolynomial);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = field.order();
        loop {
            let mut c: Vec<Gf> = (0..degree).map(|_| rng.random_range(0..q)).collect();
            c.push(1);
            if dense::is_irreducible(field, &c) {
                return Ok(Poly::from_raw(field.clone(), c));
            }
        }
    }

    pub fn resultant(&self, other: &Poly) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self
            .field
            .element(dense::resultant(&self.field, &self.coeffs, &other.coeffs)))
    }

    /// Renders with variable `var`; coefficients print as in [`Field::format`].
    pub fn format_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let cs = self.field.format(c);
            let compound = cs.contains('+');
            terms.push(match (i, c) {
                (0, _) if compound => format!("({cs})"),
                (0, _) => cs,
                (_, 1) => mono,
                _ if compound => format!("({cs})*{mono}"),
                _ => format!("{cs}*{mono}"),
            });
        }
        terms.join("+")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with("x"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.field)
    }
}
