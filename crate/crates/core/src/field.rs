//! Finite fields `F_q`, `q = p^ν`, in the polynomial basis.
//!
//! An element is stored as its integer code: the base-`p` number whose digits
//! (least significant first) are the coordinates with respect to
//! `1, u, u^2, …, u^{ν-1}` where `u` is a root of the field modulus. Code
//! order is therefore the odometer order on coordinates, and code `0` is the
//! zero element.
//!
//! Fields with `q ≤ 256` carry full addition and multiplication tables; larger
//! prime fields use direct modular arithmetic and larger extension fields fall
//! back to coordinate arithmetic.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest order for which operation tables are precomputed.
const TABLE_LIMIT: u64 = 256;
/// Largest supported field order.
const ORDER_LIMIT: u64 = 1 << 32;

/// An element of a finite field, identified by its integer code in `[0, q)`.
///
/// Elements do not carry their field; all arithmetic goes through
/// [`FieldSpec`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn code(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub(crate) fn from_code_unchecked(code: u64) -> Self {
        FieldElement(code)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Arithmetic operations exposed through [`FieldSpec::apply`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
    Pow(u64),
}

struct Tables {
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

enum Kind {
    Table(Tables),
    Prime,
    Extension,
}

struct Inner {
    p: u64,
    ext: u32,
    q: u64,
    /// Ascending coefficients of the monic modulus (length `ext + 1`).
    modulus: Vec<u64>,
    kind: Kind,
}

/// A finite field `F_q` together with its polynomial-basis model.
///
/// Cloning is cheap (shared). Two specs are equal iff they have the same
/// characteristic, degree and modulus.
#[derive(Clone)]
pub struct FieldSpec(Arc<Inner>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.0.p)
            .field("ext", &self.0.ext)
            .field("modulus", &self.0.modulus)
            .finish()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.ext == 1 {
            write!(f, "F_{}", self.0.q)
        } else {
            write!(
                f,
                "F_{} = F_{}[u]/({})",
                self.0.q,
                self.0.p,
                self.modulus_literal()
            )
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn checked_order(p: u64, ext: u32) -> Result<u64> {
    p.checked_pow(ext)
        .filter(|&q| q <= ORDER_LIMIT)
        .ok_or(Error::FieldTooLarge { p, ext })
}

impl FieldSpec {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        checked_order(p, 1)?;
        Ok(Self::build(p, 1, vec![0, 1]))
    }

    /// `F_{p^ext}` modelled with the default modulus: the lexicographically
    /// smallest monic irreducible of degree `ext`, comparing coefficients
    /// from the highest degree down.
    pub fn new(p: u64, ext: u32) -> Result<Self> {
        if ext == 0 {
            return Err(Error::ZeroExtension);
        }
        if ext == 1 {
            return Self::prime(p);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let q = checked_order(p, ext)?;
        let base = Self::prime(p)?;
        // Tail code k has base-p digits equal to the ascending coefficients
        // c_0..c_{ext-1}, so increasing k is high-degree-first lexicographic.
        for k in 0..q {
            let mut coeffs = digits(k, p, ext as usize);
            coeffs.push(1);
            if base_is_irreducible(&base, &coeffs) {
                return Ok(Self::build(p, ext, coeffs));
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    /// `F_{p^ν}` with a caller-supplied modulus (ascending coefficients in
    /// `[0, p)`, monic, `ν = modulus.len() - 1`).
    pub fn with_modulus(p: u64, modulus: &[u64]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut m = modulus.to_vec();
        while m.last() == Some(&0) {
            m.pop();
        }
        if m.len() < 2 {
            return Err(Error::ZeroExtension);
        }
        let ext = (m.len() - 1) as u32;
        checked_order(p, ext)?;
        let bad = Error::BadModulus { p, expected: ext };
        if m.iter().any(|&c| c >= p) || *m.last().unwrap() != 1 {
            return Err(bad);
        }
        if ext == 1 {
            return Self::prime(p);
        }
        let base = Self::prime(p)?;
        if !base_is_irreducible(&base, &m) {
            return Err(bad);
        }
        Ok(Self::build(p, ext, m))
    }

    /// Builds `F_q` from its order, splitting `q` as `p^ν`.
    pub fn from_order(q: u64) -> Result<Self> {
        let (p, ext) = prime_power(q)
            .ok_or_else(|| Error::InvalidArgument(format!("{q} is not a prime power")))?;
        Self::new(p, ext)
    }

    fn build(p: u64, ext: u32, modulus: Vec<u64>) -> Self {
        let q = p.pow(ext);
        let mut inner = Inner {
            p,
            ext,
            q,
            modulus,
            kind: if ext == 1 {
                Kind::Prime
            } else {
                Kind::Extension
            },
        };
        if q <= TABLE_LIMIT {
            inner.kind = Kind::Table(inner.build_tables());
        }
        FieldSpec(Arc::new(inner))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.0.ext
    }

    /// The field order `q = p^ν`.
    pub fn order(&self) -> u64 {
        self.0.q
    }

    pub fn is_odd(&self) -> bool {
        self.0.p != 2
    }

    /// Ascending modulus coefficients; `[0, 1]` for a prime field.
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn modulus_literal(&self) -> String {
        let parts: Vec<String> = self.0.modulus.iter().map(|c| c.to_string()).collect();
        parts.join(",")
    }

    /// Decodes an integer in `[0, q)`.
    pub fn element(&self, code: u64) -> Result<FieldElement> {
        if code < self.0.q {
            Ok(FieldElement(code))
        } else {
            Err(Error::CodeOutOfRange { code, q: self.0.q })
        }
    }

    /// Embeds an integer through the prime subfield (reduced mod `p`).
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.0.p as i64) as u64)
    }

    pub fn encode(&self, a: FieldElement) -> u64 {
        a.0
    }

    /// Polynomial-basis coordinates, least significant first.
    pub fn coords(&self, a: FieldElement) -> Vec<u64> {
        digits(a.0, self.0.p, self.0.ext as usize)
    }

    pub fn from_coords(&self, coords: &[u64]) -> Result<FieldElement> {
        if coords.len() != self.0.ext as usize {
            return Err(Error::InvalidArgument(format!(
                "expected {} coordinates, got {}",
                self.0.ext,
                coords.len()
            )));
        }
        if let Some(&c) = coords.iter().find(|&&c| c >= self.0.p) {
            return Err(Error::CodeOutOfRange {
                code: c,
                q: self.0.p,
            });
        }
        Ok(FieldElement(undigits(coords, self.0.p)))
    }

    /// All `q` elements in code (odometer) order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.0.q).map(FieldElement)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.0.kind {
            Kind::Table(t) => FieldElement(t.add[a.0 as usize * t.q + b.0 as usize] as u64),
            Kind::Prime => {
                let s = a.0 + b.0;
                FieldElement(if s >= self.0.p { s - self.0.p } else { s })
            }
            Kind::Extension => self.0.slow_add(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        match &self.0.kind {
            Kind::Table(t) => FieldElement(t.neg[a.0 as usize] as u64),
            Kind::Prime => FieldElement(if a.0 == 0 { 0 } else { self.0.p - a.0 }),
            Kind::Extension => self.0.slow_neg(a),
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.0.kind {
            Kind::Table(t) => FieldElement(t.mul[a.0 as usize * t.q + b.0 as usize] as u64),
            Kind::Prime => FieldElement(a.0 * b.0 % self.0.p),
            Kind::Extension => self.0.slow_mul(a, b),
        }
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0.kind {
            Kind::Table(t) => FieldElement(t.inv[a.0 as usize] as u64),
            _ => self.pow(a, self.0.q - 2),
        })
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Square-and-multiply exponentiation; `pow(0, 0) = 1`.
    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The unique `p`-th root, `a^{p^{ν-1}}`.
    pub fn pth_root(&self, a: FieldElement) -> FieldElement {
        let mut r = a;
        for _ in 1..self.0.ext {
            r = self.pow(r, self.0.p);
        }
        r
    }

    /// Checked entry point: validates every operand's code, then applies `op`.
    pub fn apply(&self, op: FieldOp, operands: &[FieldElement]) -> Result<FieldElement> {
        for a in operands {
            if a.0 >= self.0.q {
                return Err(Error::FieldMismatch);
            }
        }
        let arity = match op {
            FieldOp::Add | FieldOp::Sub | FieldOp::Mul | FieldOp::Div => 2,
            FieldOp::Neg | FieldOp::Inv | FieldOp::Pow(_) => 1,
        };
        if operands.len() != arity {
            return Err(Error::InvalidArgument(format!(
                "{op:?} takes {arity} operand(s), got {}",
                operands.len()
            )));
        }
        let a = operands[0];
        Ok(match op {
            FieldOp::Add => self.add(a, operands[1]),
            FieldOp::Sub => self.sub(a, operands[1]),
            FieldOp::Mul => self.mul(a, operands[1]),
            FieldOp::Div => self.div(a, operands[1])?,
            FieldOp::Neg => self.neg(a),
            FieldOp::Inv => self.inv(a)?,
            FieldOp::Pow(e) => self.pow(a, e),
        })
    }

    /// The quadratic character: `0` at zero, `1` on nonzero squares, `-1`
    /// otherwise.
    pub fn quadratic_character(&self, a: FieldElement) -> Result<i8> {
        if !self.is_odd() {
            return Err(Error::EvenCharacteristic);
        }
        if a.is_zero() {
            return Ok(0);
        }
        let r = self.pow(a, (self.0.q - 1) / 2);
        Ok(if r == FieldElement::ONE { 1 } else { -1 })
    }

    pub fn is_square(&self, a: FieldElement) -> bool {
        if !self.is_odd() || a.is_zero() {
            return true;
        }
        self.pow(a, (self.0.q - 1) / 2) == FieldElement::ONE
    }
}

impl Inner {
    fn build_tables(&self) -> Tables {
        let q = self.q as usize;
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        let mut neg = vec![0u8; q];
        let mut inv = vec![0u8; q];
        for a in 0..q {
            let ea = FieldElement(a as u64);
            neg[a] = self.slow_neg(ea).0 as u8;
            for b in 0..q {
                let eb = FieldElement(b as u64);
                add[a * q + b] = self.slow_add(ea, eb).0 as u8;
                let prod = self.slow_mul(ea, eb);
                mul[a * q + b] = prod.0 as u8;
                if prod == FieldElement::ONE {
                    inv[a] = b as u8;
                }
            }
        }
        Tables {
            q,
            add,
            mul,
            neg,
            inv,
        }
    }

    fn slow_add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.p;
        if self.ext == 1 {
            return FieldElement((a.0 + b.0) % p);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0;
        let mut scale = 1;
        for _ in 0..self.ext {
            out += ((x % p + y % p) % p) * scale;
            x /= p;
            y /= p;
            scale *= p;
        }
        FieldElement(out)
    }

    fn slow_neg(&self, a: FieldElement) -> FieldElement {
        let p = self.p;
        let mut x = a.0;
        let mut out = 0;
        let mut scale = 1;
        for _ in 0..self.ext {
            out += ((p - x % p) % p) * scale;
            x /= p;
            scale *= p;
        }
        FieldElement(out)
    }

    fn slow_mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.p;
        if self.ext == 1 {
            return FieldElement(a.0 * b.0 % p);
        }
        let n = self.ext as usize;
        let x = digits(a.0, p, n);
        let y = digits(b.0, p, n);
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + xi * yj) % p;
            }
        }
        let m = &self.modulus;
        for k in (n..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            // subtract c * m_i * u^{k-n+i}
            for (i, &mi) in m[..n].iter().enumerate() {
                let idx = k - n + i;
                prod[idx] = (prod[idx] + (p - c) * mi % p) % p;
            }
        }
        FieldElement(undigits(&prod[..n], p))
    }
}

fn digits(mut k: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(k % p);
        k /= p;
    }
    out
}

fn undigits(d: &[u64], p: u64) -> u64 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// Splits `q` as `p^ν` when `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut ext = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        ext += 1;
    }
    (rest == 1).then_some((p, ext))
}

fn base_is_irreducible(base: &FieldSpec, coeffs: &[u64]) -> bool {
    let poly =
        crate::poly::Polynomial::from_codes(base, coeffs).expect("coefficients are reduced mod p");
    crate::factor::is_irreducible(&poly).unwrap_or(false)
}
