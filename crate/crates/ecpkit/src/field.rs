//! Arithmetic in GF(p^e) for prime p, with p^e bounded by 2^32.
//!
//! A [`FieldSpec`] owns the characteristic, extension degree, and a monic
//! irreducible modulus over GF(p). Elements are plain `u64` values in radix-p
//! encoding: the element with coefficient vector (c_0, ..., c_{e-1}), low
//! degree first, is encoded as sum of c_i * p^i. For prime fields this is the
//! usual residue. All arithmetic goes through `FieldSpec` methods, so values
//! from different fields never mix silently; aggregate types compare specs
//! before combining.
//!
//! Fields of order at most 2^16 get log/antilog tables at construction time;
//! larger fields fall back to direct modular or polynomial arithmetic.

use crate::error::{Error, Result};
use std::fmt;
use std::sync::Arc;

const TABLE_LIMIT: u64 = 1 << 16;
const ROOT_SEARCH_LIMIT: u64 = 1 << 22;

#[derive(Debug)]
struct Inner {
    p: u64,
    e: usize,
    q: u64,
    /// Coefficients c_0..c_{e-1} of the monic modulus x^e + sum c_i x^i.
    /// Empty exactly when e == 1.
    modulus: Vec<u64>,
    log: Vec<u32>,
    exp: Vec<u32>,
}

/// A concrete finite field GF(p^e). Cheap to clone; equality compares
/// (p, e, modulus), so two specs with the same parameters are the same field.
#[derive(Debug, Clone)]
pub struct FieldSpec {
    inner: Arc<Inner>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.inner.p == other.inner.p
            && self.inner.e == other.inner.e
            && self.inner.modulus == other.inner.modulus
    }
}

impl Eq for FieldSpec {}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.inner.p, self.inner.e)?;
        if self.inner.e > 1 {
            // the serialized modulus carries the leading monic coefficient
            let mut parts: Vec<String> = self.inner.modulus.iter().map(|c| c.to_string()).collect();
            parts.push("1".into());
            write!(f, ":{}", parts.join(","))?;
        }
        Ok(())
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn digits(mut x: u64, p: u64, e: usize) -> Vec<u64> {
    let mut out = vec![0u64; e];
    for slot in out.iter_mut() {
        *slot = x % p;
        x /= p;
    }
    out
}

fn undigits(d: &[u64], p: u64) -> u64 {
    let mut v = 0u64;
    for &c in d.iter().rev() {
        v = v * p + c;
    }
    v
}

/// Polynomial helpers over GF(p), little-endian coefficient vectors.
mod gfp_poly {
    pub fn trim(a: &mut Vec<u64>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut r: Vec<u64> = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        let lead_inv = super::mod_inverse(m[dm], p);
        while r.len() > dm {
            let dr = r.len() - 1;
            let c = r[dr] * lead_inv % p;
            if c != 0 {
                for i in 0..=dm {
                    let idx = dr - dm + i;
                    r[idx] = (r[idx] + c * (p - m[i] % p)) % p;
                }
            }
            r.pop();
            trim(&mut r);
        }
        r
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        out
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        x
    }

    /// x^(p^reps) mod m, by repeated Frobenius steps.
    pub fn frobenius_power(m: &[u64], p: u64, reps: usize) -> Vec<u64> {
        let mut g = vec![0, 1];
        for _ in 0..reps {
            let mut acc = vec![1];
            let mut base = g.clone();
            let mut k = p;
            while k > 0 {
                if k & 1 == 1 {
                    acc = rem(&mul(&acc, &base, p), m, p);
                }
                base = rem(&mul(&base, &base, p), m, p);
                k >>= 1;
            }
            g = acc;
        }
        g
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Extended Euclid on (a, p) with p prime and a != 0 mod p.
    let (mut r0, mut r1) = (a as i128 % p as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let qt = r0 / r1;
        (r0, r1) = (r1, r0 - qt * r1);
        (s0, s1) = (s1, s0 - qt * s1);
    }
    debug_assert_eq!(r0, 1);
    (s0.rem_euclid(p as i128)) as u64
}

/// Irreducibility of the monic polynomial x^e + sum c_i x^i over GF(p):
/// root check for degree at most 3, Frobenius gcd test otherwise.
fn is_irreducible(coeffs: &[u64], p: u64) -> bool {
    let e = coeffs.len();
    let mut full: Vec<u64> = coeffs.to_vec();
    full.push(1);
    if e <= 3 {
        for z in 0..p {
            let mut acc = 0u64;
            for &c in full.iter().rev() {
                acc = (acc * z + c) % p;
            }
            if acc == 0 {
                return false;
            }
        }
        true
    } else {
        for i in 1..=e / 2 {
            let mut xq = gfp_poly::frobenius_power(&full, p, i);
            // gcd(f, x^(p^i) - x) must be 1
            if xq.len() < 2 {
                xq.resize(2, 0);
            }
            xq[1] = (xq[1] + p - 1) % p;
            gfp_poly::trim(&mut xq);
            let g = gfp_poly::gcd(&full, &xq, p);
            if g.len() != 1 {
                return false;
            }
        }
        true
    }
}

impl FieldSpec {
    /// Builds GF(p^e) with an explicit modulus (empty slice for e == 1).
    pub fn new(p: u64, e: usize, modulus: &[u64]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::InvalidParameter("extension degree must be >= 1".into()));
        }
        let q128 = (p as u128).pow(e as u32);
        if q128 > 1 << 32 {
            return Err(Error::FieldTooLarge(q128));
        }
        let q = q128 as u64;
        if e == 1 {
            if !modulus.is_empty() {
                return Err(Error::ModulusDegree { got: modulus.len(), want: 0 });
            }
            return Ok(Self::from_inner(p, e, q, vec![]));
        }
        if modulus.len() != e {
            return Err(Error::ModulusDegree { got: modulus.len(), want: e });
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidParameter("modulus coefficient out of range".into()));
        }
        if !is_irreducible(modulus, p) {
            return Err(Error::ReducibleModulus(p));
        }
        Ok(Self::from_inner(p, e, q, modulus.to_vec()))
    }

    /// Builds GF(p^e) with the default modulus: the lexicographically smallest
    /// monic irreducible of degree e over GF(p), coefficients compared from
    /// the highest degree down, found by deterministic enumeration.
    pub fn with_default_modulus(p: u64, e: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::InvalidParameter("extension degree must be >= 1".into()));
        }
        let q128 = (p as u128).pow(e as u32);
        if q128 > 1 << 32 {
            return Err(Error::FieldTooLarge(q128));
        }
        if e == 1 {
            return Self::new(p, 1, &[]);
        }
        let q = q128 as u64;
        for v in 0..q {
            let coeffs = digits(v, p, e);
            if is_irreducible(&coeffs, p) {
                return Self::new(p, e, &coeffs);
            }
        }
        unreachable!("an irreducible of every degree exists over GF(p)")
    }

    fn from_inner(p: u64, e: usize, q: u64, modulus: Vec<u64>) -> Self {
        let mut inner = Inner { p, e, q, modulus, log: vec![], exp: vec![] };
        if e > 1 && q <= TABLE_LIMIT {
            build_tables(&mut inner);
        }
        FieldSpec { inner: Arc::new(inner) }
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    pub fn e(&self) -> usize {
        self.inner.e
    }

    pub fn q(&self) -> u64 {
        self.inner.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    /// All field elements in canonical encoding order.
    pub fn els(&self) -> impl Iterator<Item = u64> {
        0..self.inner.q
    }

    pub fn coeffs(&self, x: u64) -> Vec<u64> {
        digits(x, self.inner.p, self.inner.e)
    }

    pub fn from_coeffs(&self, c: &[u64]) -> Result<u64> {
        if c.len() != self.inner.e {
            return Err(Error::Parse(format!(
                "expected {} coefficients, got {}",
                self.inner.e,
                c.len()
            )));
        }
        if c.iter().any(|&v| v >= self.inner.p) {
            return Err(Error::Parse("coefficient out of range".into()));
        }
        Ok(undigits(c, self.inner.p))
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let inner = &*self.inner;
        if inner.e == 1 {
            return (a + b) % inner.p;
        }
        if inner.p == 2 {
            return a ^ b;
        }
        let (mut out, mut mult, mut x, mut y) = (0u64, 1u64, a, b);
        for _ in 0..inner.e {
            out += (x % inner.p + y % inner.p) % inner.p * mult;
            x /= inner.p;
            y /= inner.p;
            mult *= inner.p;
        }
        out
    }

    pub fn neg(&self, a: u64) -> u64 {
        let inner = &*self.inner;
        if inner.e == 1 {
            return (inner.p - a) % inner.p;
        }
        if inner.p == 2 {
            return a;
        }
        let (mut out, mut mult, mut x) = (0u64, 1u64, a);
        for _ in 0..inner.e {
            out += (inner.p - x % inner.p) % inner.p * mult;
            x /= inner.p;
            mult *= inner.p;
        }
        out
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let inner = &*self.inner;
        if !inner.log.is_empty() {
            if a == 0 || b == 0 {
                return 0;
            }
            return inner.exp[(inner.log[a as usize] + inner.log[b as usize]) as usize] as u64;
        }
        self.mul_slow(a, b)
    }

    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        let inner = &*self.inner;
        if inner.e == 1 {
            return a * b % inner.p;
        }
        let e = inner.e;
        let p = inner.p;
        let ad = digits(a, p, e);
        let bd = digits(b, p, e);
        // Convolution terms stay below 2^37: p <= 2^16 whenever e >= 2.
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &x) in ad.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in bd.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        for d in (e..2 * e - 1).rev() {
            let c = prod[d] % p;
            if c != 0 {
                for i in 0..e {
                    prod[d - e + i] = (prod[d - e + i] + c * ((p - inner.modulus[i]) % p)) % p;
                }
            }
        }
        for slot in prod.iter_mut().take(e) {
            *slot %= p;
        }
        undigits(&prod[..e], p)
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::InvalidParameter("zero has no inverse".into()));
        }
        let inner = &*self.inner;
        if !inner.log.is_empty() {
            let order = inner.q - 1;
            let idx = (order - inner.log[a as usize] as u64) % order;
            return Ok(inner.exp[idx as usize] as u64);
        }
        if inner.e == 1 {
            return Ok(mod_inverse(a, inner.p));
        }
        Ok(self.pow(a, inner.q - 2))
    }

    pub fn div(&self, a: u64, b: u64) -> Result<u64> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, x: u64, mut k: u64) -> u64 {
        let mut base = x;
        let mut acc = 1u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Sum of products, the inner-product workhorse.
    pub fn dot(&self, u: &[u64], v: &[u64]) -> u64 {
        debug_assert_eq!(u.len(), v.len());
        let mut acc = 0u64;
        for (&a, &b) in u.iter().zip(v) {
            acc = self.add(acc, self.mul(a, b));
        }
        acc
    }
}

fn build_tables(inner: &mut Inner) {
    let q = inner.q;
    let order = q - 1;
    let mut factors = vec![];
    let mut n = order;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            factors.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    let probe = FieldSpec { inner: Arc::new(clone_basics(inner)) };
    let mut g = 2;
    while !factors.iter().all(|&f| probe.pow(g, order / f) != 1) {
        g += 1;
        assert!(g < q, "no primitive element found");
    }
    let mut exp = vec![0u32; 2 * order as usize];
    let mut log = vec![0u32; q as usize];
    let mut acc = 1u64;
    for i in 0..order as usize {
        exp[i] = acc as u32;
        exp[i + order as usize] = acc as u32;
        log[acc as usize] = i as u32;
        acc = probe.mul_slow(acc, g);
    }
    assert_eq!(acc, 1, "candidate generator has wrong order");
    log[0] = u32::MAX;
    inner.exp = exp;
    inner.log = log;
}

fn clone_basics(inner: &Inner) -> Inner {
    Inner {
        p: inner.p,
        e: inner.e,
        q: inner.q,
        modulus: inner.modulus.clone(),
        log: vec![],
        exp: vec![],
    }
}

/// A field embedding GF(p^e) -> GF(p^E) with e dividing E, realized by
/// mapping the source generator to the lexicographically smallest root of the
/// source modulus in the target. The full value map is precomputed for small
/// sources so application is a table lookup.
#[derive(Debug, Clone, PartialEq)]
pub struct Embedding {
    source: FieldSpec,
    target: FieldSpec,
    root: u64,
    map: Vec<u64>,
}

impl Embedding {
    pub fn new(source: &FieldSpec, target: &FieldSpec) -> Result<Self> {
        if source.p() != target.p() || target.e() % source.e() != 0 {
            return Err(Error::IncompatibleTower);
        }
        if source.e() > 1 && target.q() > ROOT_SEARCH_LIMIT {
            return Err(Error::EnumerationGuard(format!(
                "root search over {} elements",
                target.q()
            )));
        }
        let root = if source.e() == 1 {
            1
        } else {
            let mut full: Vec<u64> = source.modulus().to_vec();
            full.push(1);
            let mut found = None;
            for z in target.els() {
                let mut acc = 0u64;
                for &c in full.iter().rev() {
                    acc = target.add(target.mul(acc, z), c);
                }
                if acc == 0 {
                    found = Some(z);
                    break;
                }
            }
            found.expect("source modulus splits in any compatible target")
        };
        let map = (0..source.q())
            .map(|x| {
                let d = source.coeffs(x);
                let mut acc = 0u64;
                for &c in d.iter().rev() {
                    acc = target.add(target.mul(acc, root), c);
                }
                acc
            })
            .collect();
        Ok(Embedding { source: source.clone(), target: target.clone(), root, map })
    }

    pub fn source(&self) -> &FieldSpec {
        &self.source
    }

    pub fn target(&self) -> &FieldSpec {
        &self.target
    }

    /// Image of the source generator (the chosen root of the source modulus).
    pub fn root(&self) -> u64 {
        self.root
    }

    pub fn apply(&self, x: u64) -> u64 {
        self.map[x as usize]
    }

    pub fn apply_vec(&self, v: &[u64]) -> Vec<u64> {
        v.iter().map(|&x| self.apply(x)).collect()
    }

    /// Preimage lookup; `None` for target values outside the embedded subfield.
    pub fn preimage(&self, y: u64) -> Option<u64> {
        self.map.iter().position(|&img| img == y).map(|i| i as u64)
    }
}
