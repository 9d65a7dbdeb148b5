//! Exact arithmetic in GF(p^m).
//!
//! A [`FieldSpec`] fixes the prime `p`, the extension degree `m` and a monic
//! irreducible modulus of degree `m` over GF(p). Elements are stored by their
//! integer index: the polynomial `a_0 + a_1 x + ... + a_{m-1} x^{m-1}` is
//! encoded as `a_0 + a_1 p + ... + a_{m-1} p^{m-1}`. Extension-field
//! multiplication runs over precomputed log/antilog tables, which caps the
//! field order at 2^16.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Shared handle to a field; all carriers (matrices, subspaces, codes) hold one.
pub type FieldRef = Arc<FieldSpec>;

/// An element of a finite field, stored as its integer index in `[0, q)`.
///
/// Index 0 is the additive identity and index 1 the multiplicative identity.
/// Elements carry no field pointer; the [`FieldSpec`] they belong to supplies
/// every operation and validates the index range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(pub(crate) u16);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn index(self) -> u32 {
        self.0 as u32
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A field automorphism `x -> x^(p^j)`.
///
/// Exponents compose additively mod `m`; `j = 0` is the identity. The full
/// automorphism group of GF(p^m) has exactly `m` of these.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Frobenius {
    j: u32,
}

impl Frobenius {
    pub const IDENTITY: Frobenius = Frobenius { j: 0 };

    pub fn exponent(self) -> u32 {
        self.j
    }

    pub fn is_identity(self) -> bool {
        self.j == 0
    }

    pub fn compose(self, other: Frobenius, spec: &FieldSpec) -> Frobenius {
        Frobenius {
            j: (self.j + other.j) % spec.m,
        }
    }

    pub fn inverse(self, spec: &FieldSpec) -> Frobenius {
        Frobenius {
            j: (spec.m - self.j) % spec.m,
        }
    }
}

#[derive(Debug)]
struct Tables {
    /// exp[i] = g^i for a fixed generator g, i in [0, q-1).
    exp: Vec<u16>,
    /// log[a] defined for a in [1, q); log[0] is unused.
    log: Vec<u16>,
}

/// A finite field GF(p^m) with a fixed modulus polynomial.
#[derive(Debug)]
pub struct FieldSpec {
    p: u32,
    m: u32,
    q: u32,
    /// Modulus coefficients c_0..c_{m-1} over GF(p); the x^m coefficient is
    /// an implicit 1. Empty exactly when m = 1.
    modulus: Vec<u16>,
    tables: Option<Tables>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

impl std::hash::Hash for FieldSpec {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.p.hash(state);
        self.m.hash(state);
        self.modulus.hash(state);
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{})", self.p, self.m)
        }
    }
}

impl FieldSpec {
    /// Builds GF(p^m). With `modulus = None` the lexicographically smallest
    /// monic irreducible of degree `m` (by coefficient tuple `c_0..c_{m-1}`)
    /// is chosen, so identical inputs always produce the identical field.
    pub fn make(p: u32, m: u32, modulus: Option<&[u16]>) -> Result<FieldRef> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let q128 = (p as u128).pow(m);
        if q128 > 1 << 16 {
            return Err(Error::FieldTooLarge(q128));
        }
        let q = q128 as u32;

        let modulus: Vec<u16> = if m == 1 {
            match modulus {
                None => Vec::new(),
                Some([]) => Vec::new(),
                Some(c) => {
                    return Err(Error::ModulusDegree {
                        got: c.len(),
                        want: 0,
                    })
                }
            }
        } else {
            match modulus {
                Some(c) => {
                    if c.len() != m as usize {
                        return Err(Error::ModulusDegree {
                            got: c.len(),
                            want: m as usize,
                        });
                    }
                    if c.iter().any(|&x| x as u32 >= p) {
                        return Err(Error::ElementOutOfRange {
                            index: *c.iter().find(|&&x| x as u32 >= p).unwrap() as u32,
                            q: p,
                        });
                    }
                    if !poly_is_irreducible(p, c) {
                        return Err(Error::ReduciblePolynomial);
                    }
                    c.to_vec()
                }
                None => default_modulus(p, m)?,
            }
        };

        let tables = if m > 1 {
            Some(build_tables(p, m, q, &modulus))
        } else {
            None
        };

        Ok(Arc::new(FieldSpec {
            p,
            m,
            q,
            modulus,
            tables,
        }))
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Modulus coefficients c_0..c_{m-1}; empty for prime fields.
    pub fn modulus(&self) -> &[u16] {
        &self.modulus
    }

    /// Validates an element index against the field order.
    pub fn element(&self, index: u32) -> Result<FieldElement> {
        if index < self.q {
            Ok(FieldElement(index as u16))
        } else {
            Err(Error::ElementOutOfRange { index, q: self.q })
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q as u16).map(FieldElement)
    }

    /// Packs coefficients (c_0, c_1, ...) into an element index; missing
    /// trailing coefficients are zero.
    pub fn encode(&self, coeffs: &[u16]) -> Result<FieldElement> {
        if coeffs.len() > self.m as usize {
            return Err(Error::ModulusDegree {
                got: coeffs.len(),
                want: self.m as usize,
            });
        }
        let mut index: u32 = 0;
        for &c in coeffs.iter().rev() {
            if c as u32 >= self.p {
                return Err(Error::ElementOutOfRange {
                    index: c as u32,
                    q: self.p,
                });
            }
            index = index * self.p + c as u32;
        }
        Ok(FieldElement(index as u16))
    }

    /// Unpacks an element into its m base-p digits (c_0 first).
    pub fn decode(&self, a: FieldElement) -> Vec<u16> {
        let mut digits = Vec::with_capacity(self.m as usize);
        let mut rest = a.0 as u32;
        for _ in 0..self.m {
            digits.push((rest % self.p) as u16);
            rest /= self.p;
        }
        digits
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!((a.0 as u32) < self.q && (b.0 as u32) < self.q);
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if self.m == 1 {
            return FieldElement(((a.0 as u32 + b.0 as u32) % self.p) as u16);
        }
        self.digitwise(a, b, |x, y, p| (x + y) % p)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if self.m == 1 {
            return FieldElement(((a.0 as u32 + self.p - b.0 as u32) % self.p) as u16);
        }
        self.digitwise(a, b, |x, y, p| (x + p - y) % p)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.sub(FieldElement::ZERO, a)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!((a.0 as u32) < self.q && (b.0 as u32) < self.q);
        if self.m == 1 {
            return FieldElement(((a.0 as u32 * b.0 as u32) % self.p) as u16);
        }
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        let t = self.tables.as_ref().unwrap();
        let e = (t.log[a.0 as usize] as u32 + t.log[b.0 as usize] as u32) % (self.q - 1);
        FieldElement(t.exp[e as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        if self.m == 1 {
            return Ok(FieldElement(
                pow_mod(a.0 as u64, self.p as u64 - 2, self.p as u64) as u16,
            ));
        }
        let t = self.tables.as_ref().unwrap();
        let e = (self.q - 1 - t.log[a.0 as usize] as u32) % (self.q - 1);
        Ok(FieldElement(t.exp[e as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if a.0 == 0 {
            return if e == 0 {
                FieldElement::ONE
            } else {
                FieldElement::ZERO
            };
        }
        if self.m == 1 {
            return FieldElement(pow_mod(a.0 as u64, e, self.p as u64) as u16);
        }
        let t = self.tables.as_ref().unwrap();
        let e = (t.log[a.0 as usize] as u64 * (e % (self.q as u64 - 1))) % (self.q as u64 - 1);
        FieldElement(t.exp[e as usize])
    }

    /// The automorphism `x -> x^(p^j)`; the exponent is reduced mod m.
    pub fn frobenius(&self, j: u32) -> Frobenius {
        Frobenius { j: j % self.m }
    }

    /// All m automorphisms of the field, identity first.
    pub fn frobenius_orbit(&self) -> impl Iterator<Item = Frobenius> {
        (0..self.m).map(|j| Frobenius { j })
    }

    pub fn frobenius_apply(&self, phi: Frobenius, a: FieldElement) -> FieldElement {
        if phi.j == 0 {
            return a;
        }
        self.pow(a, (self.p as u64).pow(phi.j))
    }

    fn digitwise(
        &self,
        a: FieldElement,
        b: FieldElement,
        op: impl Fn(u32, u32, u32) -> u32,
    ) -> FieldElement {
        let mut out: u32 = 0;
        let mut pw: u32 = 1;
        let mut x = a.0 as u32;
        let mut y = b.0 as u32;
        for _ in 0..self.m {
            out += op(x % self.p, y % self.p, self.p) * pw;
            pw *= self.p;
            x /= self.p;
            y /= self.p;
        }
        FieldElement(out as u16)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut base: u64, mut e: u64, modulus: u64) -> u64 {
    let mut acc = 1u64 % modulus;
    base %= modulus;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        e >>= 1;
    }
    acc
}

// ---------------------------------------------------------------------------
// Raw polynomial arithmetic over GF(p), used only to validate moduli and
// build the extension-field tables. Polynomials are dense coefficient
// vectors (constant term first) that always carry their full length.

/// Multiplies two coefficient vectors and reduces mod the monic modulus of
/// degree m (coefficients `modulus`, leading 1 implicit).
fn poly_mul_mod(p: u32, m: usize, modulus: &[u16], a: &[u16], b: &[u16]) -> Vec<u16> {
    let mut prod = vec![0u32; 2 * m];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai as u32 * bj as u32) % p;
        }
    }
    // Reduce x^(m+t) = -modulus(x) * x^t, highest degree first.
    for d in (m..2 * m).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for (i, &mi) in modulus.iter().enumerate() {
            let idx = d - m + i;
            prod[idx] = (prod[idx] + c * (p - mi as u32) % p) % p;
        }
    }
    prod[..m].iter().map(|&x| x as u16).collect()
}

/// Remainder of `a` divided by monic `b` over GF(p); both dense, constant
/// term first, possibly with trailing zeros.
fn poly_rem(p: u32, a: &[u16], b: &[u16]) -> Vec<u16> {
    let deg = |v: &[u16]| v.iter().rposition(|&c| c != 0);
    let db = deg(b).expect("divisor must be nonzero");
    let lead_inv = pow_mod(b[db] as u64, p as u64 - 2, p as u64) as u32;
    let mut r: Vec<u32> = a.iter().map(|&c| c as u32).collect();
    while let Some(dr) = r.iter().rposition(|&c| c != 0) {
        if dr < db {
            break;
        }
        let factor = r[dr] * lead_inv % p;
        let shift = dr - db;
        for i in 0..=db {
            r[shift + i] = (r[shift + i] + factor * (p - b[i] as u32) % p) % p;
        }
    }
    r.iter().map(|&c| c as u16).collect()
}

/// Irreducibility of the monic degree-m polynomial with coefficient list `c`
/// (x^m implicit), by trial division against every monic polynomial of
/// degree 1..=m/2.
fn poly_is_irreducible(p: u32, c: &[u16]) -> bool {
    let m = c.len();
    let mut full: Vec<u16> = c.to_vec();
    full.push(1); // the implicit x^m
    for d in 1..=m / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut divisor = vec![0u16; d + 1];
            let mut rest = idx;
            for slot in divisor.iter_mut().take(d) {
                *slot = (rest % p as u64) as u16;
                rest /= p as u64;
            }
            divisor[d] = 1;
            let r = poly_rem(p, &full, &divisor);
            if r.iter().all(|&x| x == 0) {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest (by coefficient tuple c_0..c_{m-1}) monic
/// irreducible of degree m over GF(p).
fn default_modulus(p: u32, m: u32) -> Result<Vec<u16>> {
    let m = m as usize;
    let count = (p as u64).pow(m as u32);
    for idx in 0..count {
        // Lex order on (c_0, ..., c_{m-1}): last coordinate varies fastest.
        let mut c = vec![0u16; m];
        let mut rest = idx;
        for slot in c.iter_mut().rev() {
            *slot = (rest % p as u64) as u16;
            rest /= p as u64;
        }
        if poly_is_irreducible(p, &c) {
            return Ok(c);
        }
    }
    Err(Error::NoIrreducible(m))
}

fn build_tables(p: u32, m: u32, q: u32, modulus: &[u16]) -> Tables {
    let m = m as usize;
    let decode = |index: u32| -> Vec<u16> {
        let mut digits = vec![0u16; m];
        let mut rest = index;
        for d in digits.iter_mut() {
            *d = (rest % p) as u16;
            rest /= p;
        }
        digits
    };
    let encode =
        |digits: &[u16]| -> u32 { digits.iter().rev().fold(0u32, |acc, &d| acc * p + d as u32) };

    // Multiplicative order of q - 1 factored by trial division.
    let mut prime_factors = Vec::new();
    let mut rest = q - 1;
    let mut d = 2;
    while d * d <= rest {
        if rest.is_multiple_of(d) {
            prime_factors.push(d);
            while rest.is_multiple_of(d) {
                rest /= d;
            }
        }
        d += 1;
    }
    if rest > 1 {
        prime_factors.push(rest);
    }

    let pow_idx = |base: u32, mut e: u32| -> u32 {
        let mut acc = vec![0u16; m];
        acc[0] = 1;
        let mut b = decode(base);
        while e > 0 {
            if e & 1 == 1 {
                acc = poly_mul_mod(p, m, modulus, &acc, &b);
            }
            b = poly_mul_mod(p, m, modulus, &b, &b);
            e >>= 1;
        }
        encode(&acc)
    };

    let generator = (2..q)
        .find(|&g| prime_factors.iter().all(|&f| pow_idx(g, (q - 1) / f) != 1))
        .expect("every finite field has a primitive element");

    let mut exp = vec![0u16; (q - 1) as usize];
    let mut log = vec![0u16; q as usize];
    let g = decode(generator);
    let mut acc = vec![0u16; m];
    acc[0] = 1;
    for (i, slot) in exp.iter_mut().enumerate() {
        let index = encode(&acc);
        *slot = index as u16;
        log[index as usize] = i as u16;
        acc = poly_mul_mod(p, m, modulus, &acc, &g);
    }
    Tables { exp, log }
}
