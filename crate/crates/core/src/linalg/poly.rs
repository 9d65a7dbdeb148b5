//! Univariate polynomials over a finite field: the carrier for spread
//! moduli, characteristic polynomials and invariant factors.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldRef};

/// A dense polynomial, constant term first, normalized so the coefficient
/// vector never has trailing zeros. The zero polynomial has no coefficients.
#[derive(Clone)]
pub struct PolyGF {
    spec: FieldRef,
    coeffs: Vec<FieldElement>,
}

impl PartialEq for PolyGF {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
            && (std::sync::Arc::ptr_eq(&self.spec, &other.spec) || self.spec == other.spec)
    }
}

impl Eq for PolyGF {}

impl Hash for PolyGF {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
        self.spec.hash(state);
    }
}

impl PartialOrd for PolyGF {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PolyGF {
    /// Degree first, then coefficient tuple; a deterministic order for
    /// reporting factorizations.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl fmt::Debug for PolyGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyGF({self})")
    }
}

impl fmt::Display for PolyGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{c}")?,
                _ => {
                    if c != FieldElement::ONE {
                        write!(f, "{c}")?;
                    }
                    if d == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl PolyGF {
    pub fn zero(spec: &FieldRef) -> Self {
        PolyGF {
            spec: spec.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(spec: &FieldRef) -> Self {
        PolyGF {
            spec: spec.clone(),
            coeffs: vec![FieldElement::ONE],
        }
    }

    pub fn constant(spec: &FieldRef, c: FieldElement) -> Self {
        Self::from_coeffs(spec, vec![c])
    }

    /// The monomial x.
    pub fn x(spec: &FieldRef) -> Self {
        PolyGF {
            spec: spec.clone(),
            coeffs: vec![FieldElement::ZERO, FieldElement::ONE],
        }
    }

    pub fn from_coeffs(spec: &FieldRef, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyGF {
            spec: spec.clone(),
            coeffs,
        }
    }

    /// Builds a polynomial from element indices, constant term first.
    pub fn from_indices(spec: &FieldRef, indices: &[u32]) -> Result<Self> {
        let coeffs = indices
            .iter()
            .map(|&i| spec.element(i))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(spec, coeffs))
    }

    pub fn spec(&self) -> &FieldRef {
        &self.spec
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, d: usize) -> FieldElement {
        self.coeffs.get(d).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn leading(&self) -> FieldElement {
        self.coeffs.last().copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == FieldElement::ONE
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.spec.add(self.coeff(i), other.coeff(i)))
            .collect();
        Self::from_coeffs(&self.spec, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.spec.sub(self.coeff(i), other.coeff(i)))
            .collect();
        Self::from_coeffs(&self.spec, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.spec);
        }
        let mut coeffs = vec![FieldElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = self.spec.add(coeffs[i + j], self.spec.mul(a, b));
            }
        }
        Self::from_coeffs(&self.spec, coeffs)
    }

    pub fn scalar_mul(&self, c: FieldElement) -> Self {
        let coeffs = self.coeffs.iter().map(|&a| self.spec.mul(a, c)).collect();
        Self::from_coeffs(&self.spec, coeffs)
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|&a| self.spec.neg(a)).collect();
        Self::from_coeffs(&self.spec, coeffs)
    }

    /// Quotient and remainder; errors on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = divisor.degree().unwrap();
        let lead_inv = self.spec.inv(divisor.leading())?;
        let mut rem = self.coeffs.clone();
        let mut quo = vec![FieldElement::ZERO; self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let dr = rem.len() - 1;
            let factor = self.spec.mul(rem[dr], lead_inv);
            if !factor.is_zero() {
                quo[dr - dd] = factor;
                for (i, &c) in divisor.coeffs.iter().enumerate() {
                    let t = self.spec.mul(factor, c);
                    rem[dr - dd + i] = self.spec.sub(rem[dr - dd + i], t);
                }
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        Ok((
            Self::from_coeffs(&self.spec, quo),
            Self::from_coeffs(&self.spec, rem),
        ))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Scales to leading coefficient 1; errors on the zero polynomial.
    pub fn monic(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.scalar_mul(self.spec.inv(self.leading())?))
    }

    pub fn eval(&self, at: FieldElement) -> FieldElement {
        let mut acc = FieldElement::ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = self.spec.add(self.spec.mul(acc, at), c);
        }
        acc
    }

    /// `self^e mod modulus` by square-and-multiply.
    pub fn pow_mod(&self, mut e: u64, modulus: &Self) -> Result<Self> {
        let mut acc = Self::one(&self.spec).rem(modulus)?;
        let mut base = self.rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus)?;
            }
            base = base.mul(&base).rem(modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Trial division against every monic polynomial of degree up to half of
    /// this one's. Degree-0 and zero polynomials are not irreducible.
    pub fn is_irreducible(&self) -> bool {
        let Some(d) = self.degree() else { return false };
        if d == 0 {
            return false;
        }
        for dd in 1..=d / 2 {
            for candidate in monic_polys(&self.spec, dd) {
                if candidate.divides(self) {
                    return false;
                }
            }
        }
        true
    }

    /// Prime-power factorization of a nonzero polynomial, by exhaustive
    /// trial division over monic polynomials in (degree, lex) order. The
    /// leading coefficient is normalized away, so the result multiplies back
    /// to the monic associate. Pairs are (irreducible, exponent), sorted.
    pub fn factor(&self) -> Result<Vec<(PolyGF, u32)>> {
        let mut rest = self.monic()?;
        let mut out: Vec<(PolyGF, u32)> = Vec::new();
        let mut d = 1;
        while rest.degree() != Some(0) {
            let remaining = rest.degree().unwrap();
            if d > remaining {
                unreachable!("a nonconstant polynomial has a factor of degree <= its own");
            }
            for candidate in monic_polys(&self.spec, d) {
                if candidate.degree().unwrap() > rest.degree().unwrap() {
                    break;
                }
                let mut count = 0u32;
                loop {
                    let (q, r) = rest.div_rem(&candidate)?;
                    if !r.is_zero() {
                        break;
                    }
                    rest = q;
                    count += 1;
                }
                if count > 0 {
                    out.push((candidate, count));
                }
                if rest.degree() == Some(0) {
                    break;
                }
            }
            d += 1;
        }
        Ok(out)
    }
}

/// All monic polynomials of exactly the given degree, in lex order on the
/// coefficient tuple (c_0, ..., c_{d-1}) with the last coordinate varying
/// fastest.
pub fn monic_polys(spec: &FieldRef, degree: usize) -> impl Iterator<Item = PolyGF> + '_ {
    let q = spec.order() as u64;
    let count = q.pow(degree as u32);
    let spec = spec.clone();
    (0..count).map(move |idx| {
        let mut coeffs = vec![FieldElement::ZERO; degree + 1];
        let mut rest = idx;
        for slot in coeffs[..degree].iter_mut().rev() {
            *slot = spec.element((rest % q) as u32).unwrap();
            rest /= q;
        }
        coeffs[degree] = FieldElement::ONE;
        PolyGF {
            spec: spec.clone(),
            coeffs,
        }
    })
}
