//! Arithmetic in GF(p^e).
//!
//! Elements are polynomials of degree < e over Z_p, reduced modulo a fixed monic
//! irreducible polynomial. The modulus is the lexicographically smallest one when
//! coefficient vectors are compared from the constant term upward, so every
//! `(p, e)` pair names exactly one field.

use std::fmt;

use thiserror::Error;

use crate::arith::is_prime;

/// Default upper limit on `q = p^e`.
pub const DEFAULT_ORDER_CAP: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{e} exceeds cap {cap}")]
    CapExceeded { p: u64, e: u32, cap: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("element does not belong to GF({p}^{e})")]
    FieldMismatch { p: u32, e: u32 },
}

/// An element of GF(p^e): `coeffs[i]` is the coefficient of `x^i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    p: u32,
    coeffs: Vec<u32>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "x".to_string(),
                (1, c) => format!("{c}x"),
                (i, 1) => format!("x^{i}"),
                (i, c) => format!("{c}x^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field {
    p: u32,
    e: u32,
    q: u64,
    /// Monic modulus, constant term first, length `e + 1`.
    modulus: Vec<u32>,
}

impl Field {
    pub fn new(p: u64, e: u32) -> Result<Self, GfError> {
        Self::with_cap(p, e, DEFAULT_ORDER_CAP)
    }

    pub fn with_cap(p: u64, e: u32, cap: u64) -> Result<Self, GfError> {
        if !is_prime(p) {
            return Err(GfError::NonPrimeCharacteristic(p));
        }
        if e == 0 {
            return Err(GfError::ZeroDegree);
        }
        let q = p
            .checked_pow(e)
            .filter(|&q| q <= cap)
            .ok_or(GfError::CapExceeded { p, e, cap })?;
        let p = p as u32;
        let modulus = smallest_irreducible(p, e as usize);
        Ok(Field { p, e, q, modulus })
    }

    pub fn characteristic(&self) -> u64 {
        self.p as u64
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { p: self.p, coeffs: vec![0; self.e as usize] }
    }

    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    /// The element whose coefficients are the base-p digits of `index`
    /// (constant term least significant). `index` must be `< q`.
    pub fn element(&self, index: u64) -> FieldElement {
        assert!(index < self.q, "element index {index} out of range for GF({})", self.q);
        let mut rest = index;
        let coeffs = (0..self.e)
            .map(|_| {
                let c = (rest % self.p as u64) as u32;
                rest /= self.p as u64;
                c
            })
            .collect();
        FieldElement { p: self.p, coeffs }
    }

    pub fn index_of(&self, a: &FieldElement) -> Result<u64, GfError> {
        self.check(a)?;
        Ok(a.coeffs.iter().rev().fold(0u64, |acc, &c| acc * self.p as u64 + c as u64))
    }

    /// All `q` elements: 0, 1, then increasing base-p value.
    pub fn elements(&self) -> Vec<FieldElement> {
        (0..self.q).map(|i| self.element(i)).collect()
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement, GfError> {
        let a = FieldElement { p: self.p, coeffs: coeffs.to_vec() };
        self.check(&a)?;
        Ok(a)
    }

    fn check(&self, a: &FieldElement) -> Result<(), GfError> {
        if a.p != self.p
            || a.coeffs.len() != self.e as usize
            || a.coeffs.iter().any(|&c| c >= self.p)
        {
            return Err(GfError::FieldMismatch { p: self.p, e: self.e });
        }
        Ok(())
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, GfError> {
        self.check(a)?;
        self.check(b)?;
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| (x + y) % self.p).collect();
        Ok(FieldElement { p: self.p, coeffs })
    }

    pub fn neg(&self, a: &FieldElement) -> Result<FieldElement, GfError> {
        self.check(a)?;
        let coeffs = a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect();
        Ok(FieldElement { p: self.p, coeffs })
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, GfError> {
        self.add(a, &self.neg(b)?)
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, GfError> {
        self.check(a)?;
        self.check(b)?;
        let p = self.p as u64;
        let e = self.e as usize;
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // Reduce using x^e = -(m_0 + m_1 x + ... + m_{e-1} x^{e-1}).
        for top in (e..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (i, &m) in self.modulus[..e].iter().enumerate() {
                let idx = top - e + i;
                prod[idx] = (prod[idx] + (p - c) * m as u64) % p;
            }
        }
        let coeffs = prod[..e].iter().map(|&c| c as u32).collect();
        Ok(FieldElement { p: self.p, coeffs })
    }

    pub fn pow(&self, a: &FieldElement, mut exp: u64) -> Result<FieldElement, GfError> {
        self.check(a)?;
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base)?;
            }
            base = self.mul(&base, &base)?;
            exp >>= 1;
        }
        Ok(acc)
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement, GfError> {
        self.check(a)?;
        if a.is_zero() {
            return Err(GfError::DivisionByZero);
        }
        self.pow(a, self.q - 2)
    }

    /// Index-based addition and multiplication tables, for hot loops.
    pub fn tables(&self) -> FieldTables {
        let q = self.q as usize;
        let elems = self.elements();
        let mut add = vec![0u32; q * q];
        let mut mul = vec![0u32; q * q];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate().skip(i) {
                let s = self.index_of(&self.add(a, b).unwrap()).unwrap() as u32;
                let m = self.index_of(&self.mul(a, b).unwrap()).unwrap() as u32;
                add[i * q + j] = s;
                add[j * q + i] = s;
                mul[i * q + j] = m;
                mul[j * q + i] = m;
            }
        }
        FieldTables { q, add, mul }
    }
}

/// Dense operation tables over element indices `0..q`.
#[derive(Clone, Debug)]
pub struct FieldTables {
    q: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
}

impl FieldTables {
    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.q + b as usize]
    }

    pub fn order(&self) -> usize {
        self.q
    }
}

// Polynomials below are coefficient vectors over Z_p, constant term first.

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let lead_inv = mod_inv(*b.last().expect("nonzero divisor"), p);
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let factor = (*r.last().unwrap() as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &bc) in b.iter().enumerate() {
            let sub = (factor as u64 * bc as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        r = trim(r);
    }
    r
}

fn mod_inv(a: u32, p: u32) -> u32 {
    let mut acc = 1u64;
    let mut base = a as u64 % p as u64;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

/// Monic polynomials of the given degree, in the order used for modulus selection.
fn monic_candidates(p: u32, degree: usize) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(degree as u32);
    (0..count).map(move |mut idx| {
        let mut poly = vec![0u32; degree + 1];
        poly[degree] = 1;
        // c_0 is the most significant digit of idx.
        for i in (0..degree).rev() {
            poly[i] = (idx % p as u64) as u32;
            idx /= p as u64;
        }
        poly
    })
}

pub(crate) fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let degree = poly.len() - 1;
    (1..=degree / 2).all(|d| monic_candidates(p, d).all(|div| !poly_rem(poly, &div, p).is_empty()))
}

fn smallest_irreducible(p: u32, e: usize) -> Vec<u32> {
    if e == 1 {
        return vec![0, 1];
    }
    monic_candidates(p, e)
        .find(|poly| is_irreducible(poly, p))
        .expect("an irreducible polynomial exists in every degree")
}
