//! Prime fields `F_p` and their explicit extensions `F_{p^n}`.
//!
//! A field is described by its characteristic, its extension degree and a
//! canonical modulus: the lexicographically least monic irreducible
//! polynomial of degree `n` over `F_p`, coefficients compared from `c_{n-1}`
//! down to `c_0`. Elements are stored as raw `u64` indices: the element
//! `c_0 + c_1 t + ... + c_{n-1} t^{n-1}` has index `sum c_i p^i`. Numeric
//! order on indices is therefore the lexicographic order on
//! `(c_{n-1}, ..., c_0)`, which is the enumeration order used everywhere.
//!
//! Hot paths go through [`Field`] methods on raw indices. [`FieldElement`]
//! is the checked owner-carrying wrapper.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::poly::dense;

/// Largest supported element count.
pub const MAX_ORDER: u64 = 1 << 62;

/// Extension fields up to this size get log/exp/Zech tables.
const TABLE_LIMIT: u64 = 1 << 20;

const NO_LOG: u32 = u32::MAX;

/// Raw element index inside a [`Field`].
pub type Gf = u64;

/// A finite field `F_{p^n}` with its canonical modulus.
///
/// Cheap to clone; construction through [`Field::new`] is memoized so two
/// requests for the same `(p, n)` share one descriptor.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

struct FieldInner {
    p: u64,
    n: u32,
    order: u64,
    /// `c_0 .. c_{n-1}` of the monic modulus. Empty for prime fields.
    modulus: Vec<u64>,
    arith: Arith,
}

enum Arith {
    Prime,
    Table(Tables),
    Generic,
}

struct Tables {
    /// `exp[i] = g^i` for `i < 2(q-1)`.
    exp: Vec<u32>,
    log: Vec<u32>,
    /// `zech[k] = log(1 + g^k)`, or `NO_LOG` when `1 + g^k = 0`.
    zech: Vec<u32>,
}

fn cache() -> &'static Mutex<HashMap<(u64, u32), Field>> {
    static FIELDS: OnceLock<Mutex<HashMap<(u64, u32), Field>>> = OnceLock::new();
    FIELDS.get_or_init(|| Mutex::new(HashMap::new()))
}

impl Field {
    /// Returns the canonical `F_{p^n}`.
    pub fn new(p: u64, n: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::Overflow { p, n });
        }
        let order = checked_order(p, n).ok_or(Error::Overflow { p, n })?;
        if let Some(f) = cache().lock().unwrap().get(&(p, n)) {
            return Ok(f.clone());
        }
        let field = if n == 1 {
            Field(Arc::new(FieldInner {
                p,
                n,
                order,
                modulus: Vec::new(),
                arith: Arith::Prime,
            }))
        } else {
            let base = Field::new(p, 1)?;
            let modulus = least_irreducible(&base, n);
            let mut inner = FieldInner {
                p,
                n,
                order,
                modulus,
                arith: Arith::Generic,
            };
            if order <= TABLE_LIMIT {
                inner.arith = Arith::Table(Tables::build(&inner));
            }
            Field(Arc::new(inner))
        };
        let mut guard = cache().lock().unwrap();
        Ok(guard.entry((p, n)).or_insert(field).clone())
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.0.n
    }

    /// Number of elements `p^n`.
    pub fn order(&self) -> u64 {
        self.0.order
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.n == 1
    }

    /// Coefficients `c_0 .. c_n` of the monic modulus, or `None` for a prime field.
    pub fn modulus(&self) -> Option<Vec<u64>> {
        if self.is_prime_field() {
            None
        } else {
            let mut m = self.0.modulus.clone();
            m.push(1);
            Some(m)
        }
    }

    pub fn prime_field(&self) -> Field {
        Field::new(self.0.p, 1).expect("prime subfield of a valid field")
    }

    pub fn zero(&self) -> FieldElement {
        self.element(0)
    }

    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    /// The generator `t = y mod modulus`; `None` for prime fields.
    pub fn generator(&self) -> Option<FieldElement> {
        (!self.is_prime_field()).then(|| self.element(self.0.p))
    }

    /// Wraps a raw index. Panics if the index is out of range.
    pub fn element(&self, value: Gf) -> FieldElement {
        assert!(value < self.0.order, "element index out of range");
        FieldElement {
            field: self.clone(),
            value,
        }
    }

    /// Image of an integer under `Z -> F_p -> F`.
    pub fn from_int(&self, v: i64) -> Gf {
        v.rem_euclid(self.0.p as i64) as u64
    }

    /// Element from power-basis coordinates (constant term first).
    pub fn from_coords(&self, coords: &[u64]) -> Result<FieldElement> {
        if coords.len() > self.0.n as usize || coords.iter().any(|&c| c >= self.0.p) {
            return Err(Error::FieldMismatch);
        }
        let mut digits = [0u64; 64];
        digits[..coords.len()].copy_from_slice(coords);
        Ok(self.element(self.encode(&digits)))
    }

    /// All elements in enumeration order, starting at zero.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.order).map(move |v| self.element(v))
    }

    /// Power-basis coordinates of a raw element, constant term first.
    pub fn coords(&self, a: Gf) -> Vec<u64> {
        self.decode(a)[..self.0.n as usize].to_vec()
    }

    /// Whether `F_{p^m}` is a subfield of this field.
    pub fn has_subfield(&self, m: u32) -> bool {
        m >= 1 && self.0.n.is_multiple_of(m)
    }

    fn require_subfield(&self, m: u32) -> Result<()> {
        if self.has_subfield(m) {
            Ok(())
        } else {
            Err(Error::NotASubfield {
                p: self.0.p,
                m,
                n: self.0.n,
            })
        }
    }

    fn decode(&self, mut a: Gf) -> [u64; 64] {
        let mut d = [0u64; 64];
        let p = self.0.p;
        for slot in d.iter_mut().take(self.0.n as usize) {
            *slot = a % p;
            a /= p;
        }
        d
    }

    fn encode(&self, d: &[u64]) -> Gf {
        let p = self.0.p;
        d[..self.0.n as usize]
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * p + c)
    }

    #[inline]
    fn prime_mul(&self, a: u64, b: u64) -> u64 {
        let p = self.0.p;
        if p < (1 << 32) {
            a * b % p
        } else {
            ((a as u128 * b as u128) % p as u128) as u64
        }
    }

    #[inline]
    pub fn add(&self, a: Gf, b: Gf) -> Gf {
        let inner = &*self.0;
        if inner.p == 2 {
            return a ^ b;
        }
        match &inner.arith {
            Arith::Prime => {
                let s = a + b;
                if s >= inner.p {
                    s - inner.p
                } else {
                    s
                }
            }
            Arith::Table(t) => {
                if a == 0 {
                    return b;
                }
                if b == 0 {
                    return a;
                }
                let q1 = inner.order - 1;
                let la = t.log[a as usize] as u64;
                let lb = t.log[b as usize] as u64;
                let k = (lb + q1 - la) % q1;
                let z = t.zech[k as usize];
                if z == NO_LOG {
                    0
                } else {
                    t.exp[(la + z as u64) as usize] as u64
                }
            }
            Arith::Generic => {
                let (x, y) = (self.decode(a), self.decode(b));
                let mut s = [0u64; 64];
                for i in 0..inner.n as usize {
                    s[i] = (x[i] + y[i]) % inner.p;
                }
                self.encode(&s)
            }
        }
    }

    #[inline]
    pub fn neg(&self, a: Gf) -> Gf {
        let inner = &*self.0;
        if inner.p == 2 || a == 0 {
            return a;
        }
        match &inner.arith {
            Arith::Prime => inner.p - a,
            Arith::Table(t) => {
                let half = (inner.order - 1) / 2;
                t.exp[(t.log[a as usize] as u64 + half) as usize] as u64
            }
            Arith::Generic => {
                let mut x = self.decode(a);
                for c in x.iter_mut().take(inner.n as usize) {
                    *c = (inner.p - *c) % inner.p;
                }
                self.encode(&x)
            }
        }
    }

    #[inline]
    pub fn sub(&self, a: Gf, b: Gf) -> Gf {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Gf, b: Gf) -> Gf {
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.0.arith {
            Arith::Prime => self.prime_mul(a, b),
            Arith::Table(t) => t.exp[(t.log[a as usize] + t.log[b as usize]) as usize] as u64,
            Arith::Generic => self.generic_mul(a, b),
        }
    }

    fn generic_mul(&self, a: Gf, b: Gf) -> Gf {
        let inner = &*self.0;
        let n = inner.n as usize;
        let p = inner.p;
        let (x, y) = (self.decode(a), self.decode(b));
        let mut prod = [0u64; 128];
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                prod[i + j] = (prod[i + j] + x[i] * y[j] % p) % p;
            }
        }
        reduce_by_modulus(&mut prod, &inner.modulus, n, p);
        self.encode(&prod[..n])
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Gf) -> Option<Gf> {
        if a == 0 {
            return None;
        }
        let inner = &*self.0;
        Some(match &inner.arith {
            Arith::Prime => prime_inverse(a, inner.p),
            Arith::Table(t) => {
                let q1 = inner.order - 1;
                t.exp[((q1 - t.log[a as usize] as u64) % q1) as usize] as u64
            }
            Arith::Generic => self.pow(a, inner.order - 2),
        })
    }

    pub fn div(&self, a: Gf, b: Gf) -> Option<Gf> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: Gf, mut e: u64) -> Gf {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        if let Arith::Table(t) = &self.0.arith {
            let q1 = (self.0.order - 1) as u128;
            let l = (t.log[a as usize] as u128 * (e as u128 % q1)) % q1;
            return t.exp[l as usize] as u64;
        }
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base, base);
            }
        }
        acc
    }

    /// `a^(p^m)`.
    pub fn frobenius(&self, a: Gf, m: u32) -> Gf {
        let m = m % self.0.n;
        (0..m).fold(a, |acc, _| self.pow(acc, self.0.p))
    }

    /// Whether `a` is fixed by `x -> x^(p^m)`.
    pub fn in_subfield(&self, a: Gf, m: u32) -> Result<bool> {
        self.require_subfield(m)?;
        Ok(self.frobenius(a, m) == a)
    }

    /// The fixed embedding of this field into `target`.
    pub fn embedding(&self, target: &Field) -> Result<Arc<Embedding>> {
        Embedding::get(self, target)
    }

    /// Human-readable element: an integer for prime fields, a polynomial in `t` otherwise.
    pub fn format(&self, a: Gf) -> String {
        if self.is_prime_field() {
            return a.to_string();
        }
        format_poly_in(&self.coords(a), "t")
    }
}

/// `a^{-1} mod p` for `0 < a < p`, by the extended Euclidean algorithm.
fn prime_inverse(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    s0.rem_euclid(p as i128) as u64
}

/// Reduces a product of length `< 2n` in place; `y^n = -sum low[j] y^j`.
fn reduce_by_modulus(prod: &mut [u64], low: &[u64], n: usize, p: u64) {
    for i in (n..2 * n - 1).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        for (j, &m) in low.iter().enumerate() {
            if m != 0 {
                prod[i - n + j] = (prod[i - n + j] + c * ((p - m) % p) % p) % p;
            }
        }
    }
}

fn format_poly_in(coeffs: &[u64], var: &str) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        terms.push(match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}*{mono}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

fn checked_order(p: u64, n: u32) -> Option<u64> {
    let q = p.checked_pow(n)?;
    (q <= MAX_ORDER).then_some(q)
}

/// Scans monic degree-`n` polynomials over `base` in lex order of
/// `(c_{n-1}, ..., c_0)` and returns the low coefficients of the first
/// irreducible one.
fn least_irreducible(base: &Field, n: u32) -> Vec<u64> {
    let p = base.characteristic();
    let count = p.pow(n);
    for k in 0..count {
        if k % p == 0 {
            // nonzero constant term is necessary for n >= 2
            continue;
        }
        let mut coeffs = Vec::with_capacity(n as usize + 1);
        let mut rest = k;
        for _ in 0..n {
            coeffs.push(rest % p);
            rest /= p;
        }
        coeffs.push(1);
        if dense::is_irreducible(base, &coeffs) {
            coeffs.pop();
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}

impl Tables {
    fn build(inner: &FieldInner) -> Tables {
        let q = inner.order;
        let q1 = q - 1;
        let n = inner.n as usize;
        let p = inner.p;
        let factors = prime_factors(q1);
        let decode = |mut a: u64| {
            let mut d = [0u64; 64];
            for slot in d.iter_mut().take(n) {
                *slot = a % p;
                a /= p;
            }
            d
        };
        let encode = |d: &[u64]| d[..n].iter().rev().fold(0u64, |acc, &c| acc * p + c);
        let mul = |a: u64, b: u64| {
            let (x, y) = (decode(a), decode(b));
            let mut prod = [0u64; 128];
            for i in 0..n {
                for j in 0..n {
                    prod[i + j] = (prod[i + j] + x[i] * y[j] % p) % p;
                }
            }
            reduce_by_modulus(&mut prod, &inner.modulus, n, p);
            encode(&prod[..n])
        };
        let pow = |a: u64, mut e: u64| {
            let (mut base, mut acc) = (a, 1u64);
            while e > 0 {
                if e & 1 == 1 {
                    acc = mul(acc, base);
                }
                base = mul(base, base);
                e >>= 1;
            }
            acc
        };
        let is_primitive = |g: u64| factors.iter().all(|&r| pow(g, q1 / r) != 1);
        // Try g = t + c first: multiplying by such g costs O(n).
        let shifted = (0..p).map(|c| p + c).find(|&g| is_primitive(g));
        let generator = shifted.unwrap_or_else(|| {
            (2..q)
                .find(|&g| is_primitive(g))
                .expect("multiplicative group is cyclic")
        });
        let times_g: Box<dyn Fn(u64) -> u64> = match shifted {
            Some(g) => {
                let c = g - p;
                Box::new(move |a: u64| {
                    let x = decode(a);
                    let mut prod = [0u64; 128];
                    for i in 0..n {
                        prod[i + 1] = (prod[i + 1] + x[i]) % p;
                        prod[i] = (prod[i] + c * x[i]) % p;
                    }
                    reduce_by_modulus(&mut prod, &inner.modulus, n, p);
                    encode(&prod[..n])
                })
            }
            None => Box::new(move |a| mul(a, generator)),
        };
        let mut exp = vec![0u32; 2 * q1 as usize];
        let mut log = vec![NO_LOG; q as usize];
        let mut cur = 1u64;
        for i in 0..q1 as usize {
            exp[i] = cur as u32;
            exp[i + q1 as usize] = cur as u32;
            log[cur as usize] = i as u32;
            cur = times_g(cur);
        }
        let zech = (0..q1 as usize)
            .map(|k| {
                let mut d = decode(exp[k] as u64);
                d[0] = (d[0] + 1) % p;
                let s = encode(&d);
                if s == 0 {
                    NO_LOG
                } else {
                    log[s as usize]
                }
            })
            .collect();
        Tables { exp, log, zech }
    }
}

fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n == b {
            return true;
        }
        if n.is_multiple_of(b) {
            return false;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        acc
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'outer: for &a in &BASES {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

impl PartialEq for Field {
    fn eq(&self, other: &Field) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.n == other.0.n)
    }
}

impl Eq for Field {}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.n.hash(state);
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_prime_field() {
            write!(f, "F_{}", self.0.p)
        } else {
            write!(f, "F_{}^{}", self.0.p, self.0.n)
        }
    }
}

/// Embedding `F_{p^m} -> F_{p^n}` sending the small generator to the least
/// root of the small modulus in the target.
///
/// Fixed per ordered pair. Compatibility along towers of three or more
/// fields is not guaranteed.
pub struct Embedding {
    source: Field,
    target: Field,
    /// Images of `1, t, ..., t^{m-1}`.
    basis_images: Vec<Gf>,
}

type EmbeddingKey = (u64, u32, u32);

fn embedding_cache() -> &'static Mutex<HashMap<EmbeddingKey, Arc<Embedding>>> {
    static EMB: OnceLock<Mutex<HashMap<EmbeddingKey, Arc<Embedding>>>> = OnceLock::new();
    EMB.get_or_init(|| Mutex::new(HashMap::new()))
}

impl Embedding {
    fn get(source: &Field, target: &Field) -> Result<Arc<Embedding>> {
        let (p, m, n) = (
            source.characteristic(),
            source.extension_degree(),
            target.extension_degree(),
        );
        if p != target.characteristic() || !target.has_subfield(m) {
            return Err(Error::NotASubfield { p, m, n });
        }
        let key = (p, m, n);
        if let Some(e) = embedding_cache().lock().unwrap().get(&key) {
            return Ok(e.clone());
        }
        let basis_images = if m == 1 {
            vec![1]
        } else if m == n {
            (0..m as u64).map(|i| source.pow(p, i)).collect()
        } else {
            // The small modulus has F_p coefficients, which are constants in the target.
            let modulus = source.modulus().expect("extension field has a modulus");
            let roots = dense::roots(target, &modulus, 0);
            let root = *roots
                .iter()
                .min()
                .expect("subfield modulus splits in the target");
            let mut imgs = Vec::with_capacity(m as usize);
            let mut cur = 1;
            for _ in 0..m {
                imgs.push(cur);
                cur = target.mul(cur, root);
            }
            imgs
        };
        let e = Arc::new(Embedding {
            source: source.clone(),
            target: target.clone(),
            basis_images,
        });
        let mut guard = embedding_cache().lock().unwrap();
        Ok(guard.entry(key).or_insert(e).clone())
    }

    pub fn source(&self) -> &Field {
        &self.source
    }

    pub fn target(&self) -> &Field {
        &self.target
    }

    pub fn apply(&self, a: Gf) -> Gf {
        self.source
            .coords(a)
            .iter()
            .zip(&self.basis_images)
            .fold(0, |acc, (&c, &img)| {
                self.target.add(acc, self.target.mul(c, img))
            })
    }
}

/// An element together with the field that owns it.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    value: Gf,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// The raw index; also the element's position in enumeration order.
    pub fn value(&self) -> Gf {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn coords(&self) -> Vec<u64> {
        self.field.coords(self.value)
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn with(&self, value: Gf) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            value,
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn neg(&self) -> FieldElement {
        self.with(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        self.field
            .inv(self.value)
            .map(|v| self.with(v))
            .ok_or(Error::DivisionByZero)
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        self.mul(&other.inv()?)
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.with(self.field.pow(self.value, e))
    }

    /// `a^(p^m)`.
    pub fn frobenius(&self, m: u32) -> FieldElement {
        self.with(self.field.frobenius(self.value, m))
    }

    /// Membership in the unique subfield `F_{p^m}`.
    pub fn is_in_subfield(&self, m: u32) -> Result<bool> {
        self.field.in_subfield(self.value, m)
    }

    /// Image under the fixed embedding into `target`.
    pub fn embed(&self, target: &Field) -> Result<FieldElement> {
        let e = self.field.embedding(target)?;
        Ok(target.element(e.apply(self.value)))
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &FieldElement) -> bool {
        self.value == other.value && self.field == other.field
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.hash(state);
        self.value.hash(state);
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Enumeration order; elements of different fields order by `(p, n)` first.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (
            self.field.characteristic(),
            self.field.extension_degree(),
            self.value,
        )
            .cmp(&(
                other.field.characteristic(),
                other.field.extension_degree(),
                other.value,
            ))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format(self.value))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.field)
    }
}
