//! Slice-level polynomial kernels over a [`Field`].
//!
//! Coefficients run from the constant term upward. Every function returns
//! normalized vectors (no trailing zeros; the zero polynomial is empty).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gf::{Field, Gf};

pub fn normalize(v: &mut Vec<Gf>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub fn degree(a: &[Gf]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn add(f: &Field, a: &[Gf], b: &[Gf]) -> Vec<Gf> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, &s) in out.iter_mut().zip(short) {
        *o = f.add(*o, s);
    }
    normalize(&mut out);
    out
}

pub fn sub(f: &Field, a: &[Gf], b: &[Gf]) -> Vec<Gf> {
    let mut out = a.to_vec();
    if b.len() > out.len() {
        out.resize(b.len(), 0);
    }
    for (o, &s) in out.iter_mut().zip(b) {
        *o = f.sub(*o, s);
    }
    normalize(&mut out);
    out
}

pub fn scale(f: &Field, a: &[Gf], c: Gf) -> Vec<Gf> {
    if c == 0 {
        return Vec::new();
    }
    a.iter().map(|&x| f.mul(x, c)).collect()
}

pub fn mul(f: &Field, a: &[Gf], b: &[Gf]) -> Vec<Gf> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    normalize(&mut out);
    out
}

/// `x^k * a`.
pub fn shift(a: &[Gf], k: usize) -> Vec<Gf> {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; k];
    out.extend_from_slice(a);
    out
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divmod(f: &Field, a: &[Gf], b: &[Gf]) -> (Vec<Gf>, Vec<Gf>) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = f
        .inv(b[db])
        .expect("normalized leading coefficient is nonzero");
    let mut r = a.to_vec();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![0; r.len() - db];
    for i in (db..r.len()).rev() {
        let c = r[i];
        if c == 0 {
            continue;
        }
        let coef = f.mul(c, lead_inv);
        q[i - db] = coef;
        for (j, &bj) in b.iter().enumerate() {
            r[i - db + j] = f.sub(r[i - db + j], f.mul(coef, bj));
        }
    }
    r.truncate(db);
    normalize(&mut r);
    normalize(&mut q);
    (q, r)
}

pub fn rem(f: &Field, a: &[Gf], b: &[Gf]) -> Vec<Gf> {
    if a.len() < b.len() {
        return a.to_vec();
    }
    divmod(f, a, b).1
}

/// Splits off the leading coefficient: returns `(lc, a / lc)`. Zero maps to `(0, [])`.
pub fn monic(f: &Field, a: &[Gf]) -> (Gf, Vec<Gf>) {
    match a.last() {
        None => (0, Vec::new()),
        Some(&1) => (1, a.to_vec()),
        Some(&lc) => {
            let inv = f.inv(lc).expect("nonzero leading coefficient");
            (lc, scale(f, a, inv))
        }
    }
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub fn gcd(f: &Field, a: &[Gf], b: &[Gf]) -> Vec<Gf> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, &x).1
}

pub fn is_one(a: &[Gf]) -> bool {
    a == [1]
}

pub fn derivative(f: &Field, a: &[Gf]) -> Vec<Gf> {
    let p = f.characteristic();
    let mut out: Vec<Gf> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| f.mul(c, (i as u64) % p))
        .collect();
    normalize(&mut out);
    out
}

pub fn eval(f: &Field, a: &[Gf], x: Gf) -> Gf {
    a.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

pub fn mulmod(f: &Field, a: &[Gf], b: &[Gf], m: &[Gf]) -> Vec<Gf> {
    rem(f, &mul(f, a, b), m)
}

/// `base^e mod m`.
pub fn powmod(f: &Field, base: &[Gf], mut e: u64, m: &[Gf]) -> Vec<Gf> {
    let mut acc = rem(f, &[1], m);
    let mut b = rem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(f, &acc, &b, m);
        }
        e >>= 1;
        if e > 0 {
            b = mulmod(f, &b, &b, m);
        }
    }
    acc
}

/// `x^(q^k) mod m` by `k` successive `q`-th powers.
pub fn x_pow_q_iter(f: &Field, k: u32, m: &[Gf]) -> Vec<Gf> {
    let q = f.order();
    let mut h = rem(f, &[0, 1], m);
    for _ in 0..k {
        h = powmod(f, &h, q, m);
    }
    h
}

/// Rabin's irreducibility test. `a` must have degree at least 1.
pub fn is_irreducible(f: &Field, a: &[Gf]) -> bool {
    let n = degree(a).expect("nonzero polynomial");
    assert!(n >= 1);
    if n == 1 {
        return true;
    }
    let (_, m) = monic(f, a);
    let x = rem(f, &[0, 1], &m);
    if x_pow_q_iter(f, n as u32, &m) != x {
        return false;
    }
    for r in distinct_prime_divisors(n) {
        let h = x_pow_q_iter(f, (n / r) as u32, &m);
        if !is_one(&gcd(f, &sub(f, &h, &x), &m)) {
            return false;
        }
    }
    true
}

fn distinct_prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Replaces `sum c_{ip} x^{ip}` by `sum c_{ip}^{1/p} x^i`.
fn pth_root(f: &Field, a: &[Gf]) -> Vec<Gf> {
    let p = f.characteristic() as usize;
    let n = f.extension_degree();
    debug_assert!(a.iter().enumerate().all(|(i, &c)| i % p == 0 || c == 0));
    // c^(1/p) = c^(p^(n-1))
    a.iter()
        .step_by(p)
        .map(|&c| f.frobenius(c, n - 1))
        .collect()
}

/// Squarefree decomposition of a monic nonzero polynomial: pairwise coprime
/// squarefree monic parts with their multiplicities, sorted by multiplicity.
pub fn squarefree(f: &Field, a: &[Gf]) -> Vec<(Vec<Gf>, u32)> {
    let mut out = Vec::new();
    squarefree_into(f, a, 1, &mut out);
    out.sort_by_key(|(_, m)| *m);
    out
}

fn squarefree_into(f: &Field, a: &[Gf], mult: u32, out: &mut Vec<(Vec<Gf>, u32)>) {
    if degree(a).unwrap_or(0) == 0 {
        return;
    }
    let da = derivative(f, a);
    let mut c = gcd(f, a, &da);
    let mut w = divmod(f, a, &c).0;
    let mut i = 1;
    while degree(&w).unwrap_or(0) > 0 {
        let y = gcd(f, &w, &c);
        let fac = divmod(f, &w, &y).0;
        if degree(&fac).unwrap_or(0) > 0 {
            out.push((fac, i * mult));
        }
        c = divmod(f, &c, &y).0;
        w = y;
        i += 1;
    }
    if degree(&c).unwrap_or(0) > 0 {
        let root = pth_root(f, &c);
        squarefree_into(f, &root, mult * f.characteristic() as u32, out);
    }
}

/// Distinct-degree factorization of a monic squarefree polynomial.
pub fn distinct_degree(f: &Field, a: &[Gf]) -> Vec<(Vec<Gf>, usize)> {
    let mut out = Vec::new();
    let mut rest = a.to_vec();
    let q = f.order();
    let mut h = rem(f, &[0, 1], &rest);
    let mut k = 0;
    while degree(&rest).unwrap_or(0) >= 2 * (k + 1) {
        k += 1;
        h = powmod(f, &h, q, &rest);
        let g = gcd(f, &sub(f, &h, &[0, 1]), &rest);
        if !is_one(&g) {
            rest = divmod(f, &rest, &g).0;
            h = rem(f, &h, &rest);
            out.push((g, k));
        }
    }
    if let Some(d) = degree(&rest) {
        if d > 0 {
            out.push((rest, d));
        }
    }
    out
}

fn random_poly(f: &Field, below_degree: usize, rng: &mut ChaCha8Rng) -> Vec<Gf> {
    let q = f.order();
    let mut v: Vec<Gf> = (0..below_degree).map(|_| rng.random_range(0..q)).collect();
    normalize(&mut v);
    v
}

/// Equal-degree splitting (Cantor-Zassenhaus) of a monic squarefree product
/// of irreducibles of degree `k`.
pub fn equal_degree(f: &Field, a: &[Gf], k: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<Gf>> {
    let d = degree(a).expect("nonzero");
    if d == k {
        return vec![a.to_vec()];
    }
    let q = f.order();
    loop {
        let r = random_poly(f, d, rng);
        if degree(&r).unwrap_or(0) == 0 {
            continue;
        }
        let candidate = if f.characteristic() == 2 {
            // absolute trace to F_2 of the residue in F_{q^k}
            let steps = f.extension_degree() as usize * k;
            let mut acc = r.clone();
            let mut cur = r.clone();
            for _ in 1..steps {
                cur = mulmod(f, &cur, &cur, a);
                acc = add(f, &acc, &cur);
            }
            acc
        } else {
            // r^((q^k - 1)/2) = (r^(1 + q + ... + q^(k-1)))^((q - 1)/2)
            let mut norm = r.clone();
            let mut cur = r.clone();
            for _ in 1..k {
                cur = powmod(f, &cur, q, a);
                norm = mulmod(f, &norm, &cur, a);
            }
            let s = powmod(f, &norm, (q - 1) / 2, a);
            sub(f, &s, &[1])
        };
        let g = gcd(f, &candidate, a);
        let dg = degree(&g).unwrap_or(0);
        if dg > 0 && dg < d {
            let other = divmod(f, a, &g).0;
            let mut out = equal_degree(f, &g, k, rng);
            out.extend(equal_degree(f, &other, k, rng));
            return out;
        }
    }
}

/// Ordering used for factor lists: degree, then coefficients from the top down.
pub fn lex_key(a: &[Gf]) -> (usize, Vec<Gf>) {
    (a.len(), a.iter().rev().copied().collect())
}

/// Complete factorization of a nonzero polynomial into monic irreducibles.
pub fn factor(f: &Field, a: &[Gf], seed: u64) -> (Gf, Vec<(Vec<Gf>, u32)>) {
    let (lc, m) = monic(f, a);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (part, mult) in squarefree(f, &m) {
        for (block, k) in distinct_degree(f, &part) {
            for irr in equal_degree(f, &block, k, &mut rng) {
                out.push((irr, mult));
            }
        }
    }
    out.sort_by_key(|x| lex_key(&x.0));
    (lc, out)
}

/// Multiplicity of `r` as a root of nonzero `a`.
pub fn root_multiplicity(f: &Field, a: &[Gf], r: Gf) -> u32 {
    let lin = [f.neg(r), 1];
    let mut cur = a.to_vec();
    let mut mult = 0;
    loop {
        let (q, rest) = divmod(f, &cur, &lin);
        if !rest.is_empty() {
            return mult;
        }
        mult += 1;
        cur = q;
    }
}

/// Roots of nonzero `a` in its coefficient field with multiplicity, sorted.
pub fn roots(f: &Field, a: &[Gf], seed: u64) -> Vec<Gf> {
    let (_, m) = monic(f, a);
    if degree(&m).unwrap_or(0) == 0 {
        return Vec::new();
    }
    let distinct: Vec<Gf> = if f.order() <= 256 {
        (0..f.order()).filter(|&x| eval(f, &m, x) == 0).collect()
    } else {
        let xq = x_pow_q_iter(f, 1, &m);
        let g = gcd(f, &sub(f, &xq, &[0, 1]), &m);
        if degree(&g).unwrap_or(0) == 0 {
            Vec::new()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut rs: Vec<Gf> = equal_degree(f, &g, 1, &mut rng)
                .into_iter()
                .map(|lin| f.neg(lin[0]))
                .collect();
            rs.sort_unstable();
            rs
        }
    };
    let mut out = Vec::new();
    for r in distinct {
        let mult = root_multiplicity(f, &m, r);
        out.extend(std::iter::repeat_n(r, mult as usize));
    }
    out
}

/// Resultant by the Euclidean recurrence
/// `Res(a, b) = (-1)^(deg a deg b) lc(b)^(deg a - deg r) Res(b, r)`, `r = a mod b`.
pub fn resultant(f: &Field, a: &[Gf], b: &[Gf]) -> Gf {
    let (Some(mut da), Some(mut db)) = (degree(a), degree(b)) else {
        return 0;
    };
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    let mut acc: Gf = 1;
    loop {
        if db == 0 {
            return f.mul(acc, f.pow(y[0], da as u64));
        }
        let r = rem(f, &x, &y);
        let Some(dr) = degree(&r) else {
            return 0;
        };
        if (da * db) % 2 == 1 {
            acc = f.neg(acc);
        }
        acc = f.mul(acc, f.pow(y[db], (da - dr) as u64));
        x = y;
        y = r;
        da = db;
        db = dr;
    }
}
