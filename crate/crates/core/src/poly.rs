//! Dense univariate polynomials over `F_q`.
//!
//! Coefficients are stored in ascending degree with no trailing zeros, so the
//! zero polynomial is the empty vector and has no degree ([`Polynomial::degree`]
//! returns `None`).

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: FieldSpec,
    coeffs: Vec<FieldElement>,
}

/// Which notion of "square" [`Polynomial::is_square`] tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Squareness {
    /// `f = H²` with `H ∈ F_q[t]`.
    Exact,
    /// `f = c·H²` for some nonzero constant `c`.
    UpToConstant,
}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

pub(crate) fn trim(v: &mut Vec<FieldElement>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

pub(crate) fn add_slices(
    f: &FieldSpec,
    a: &[FieldElement],
    b: &[FieldElement],
) -> Vec<FieldElement> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, &s) in out.iter_mut().zip(short) {
        *o = f.add(*o, s);
    }
    trim(&mut out);
    out
}

pub(crate) fn sub_slices(
    f: &FieldSpec,
    a: &[FieldElement],
    b: &[FieldElement],
) -> Vec<FieldElement> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), FieldElement::ZERO);
    }
    for (o, &s) in out.iter_mut().zip(b) {
        *o = f.sub(*o, s);
    }
    trim(&mut out);
    out
}

pub(crate) fn mul_slices(
    f: &FieldSpec,
    a: &[FieldElement],
    b: &[FieldElement],
) -> Vec<FieldElement> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![FieldElement::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(&mut out);
    out
}

/// Reduces `a` modulo the nonzero `m` in place, optionally collecting the
/// quotient. `lead_inv` is the inverse of `m`'s leading coefficient.
pub(crate) fn rem_in_place(
    f: &FieldSpec,
    a: &mut Vec<FieldElement>,
    m: &[FieldElement],
    lead_inv: FieldElement,
    mut quotient: Option<&mut Vec<FieldElement>>,
) {
    let dm = m.len() - 1;
    if let Some(q) = quotient.as_deref_mut() {
        q.clear();
        if a.len() > dm {
            q.resize(a.len() - dm, FieldElement::ZERO);
        }
    }
    while a.len() > dm {
        let k = a.len() - 1;
        let c = f.mul(a[k], lead_inv);
        let shift = k - dm;
        if let Some(q) = quotient.as_deref_mut() {
            q[shift] = c;
        }
        if !c.is_zero() {
            for (i, &mi) in m.iter().enumerate() {
                a[shift + i] = f.sub(a[shift + i], f.mul(c, mi));
            }
        }
        a.pop();
    }
    trim(a);
}

/// `(a · b) mod m` for reduced `a`, `b`.
pub(crate) fn mulmod(
    f: &FieldSpec,
    a: &[FieldElement],
    b: &[FieldElement],
    m: &[FieldElement],
    lead_inv: FieldElement,
) -> Vec<FieldElement> {
    let mut prod = mul_slices(f, a, b);
    rem_in_place(f, &mut prod, m, lead_inv, None);
    prod
}

/// `base^e mod m`.
pub(crate) fn powmod(
    f: &FieldSpec,
    base: &[FieldElement],
    mut e: u128,
    m: &[FieldElement],
    lead_inv: FieldElement,
) -> Vec<FieldElement> {
    let mut acc = vec![FieldElement::ONE];
    rem_in_place(f, &mut acc, m, lead_inv, None);
    let mut b = base.to_vec();
    rem_in_place(f, &mut b, m, lead_inv, None);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(f, &acc, &b, m, lead_inv);
        }
        e >>= 1;
        if e > 0 {
            b = mulmod(f, &b, &b, m, lead_inv);
        }
    }
    acc
}

/// Monic gcd of two coefficient slices; empty when both are zero.
pub(crate) fn gcd_slices(
    f: &FieldSpec,
    a: &[FieldElement],
    b: &[FieldElement],
) -> Vec<FieldElement> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        let inv = f
            .inv(*y.last().unwrap())
            .expect("nonzero leading coefficient");
        rem_in_place(f, &mut x, &y, inv, None);
        std::mem::swap(&mut x, &mut y);
    }
    make_monic(f, &mut x);
    x
}

pub(crate) fn make_monic(f: &FieldSpec, a: &mut [FieldElement]) {
    if let Some(&lc) = a.last() {
        if lc != FieldElement::ONE {
            let inv = f.inv(lc).expect("nonzero leading coefficient");
            for c in a.iter_mut() {
                *c = f.mul(*c, inv);
            }
        }
    }
}

impl Polynomial {
    pub fn zero(field: &FieldSpec) -> Self {
        Self {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &FieldSpec) -> Self {
        Self::constant(field, FieldElement::ONE)
    }

    pub fn constant(field: &FieldSpec, c: FieldElement) -> Self {
        Self::from_raw(field, vec![c])
    }

    /// `c·t^k`.
    pub fn monomial(field: &FieldSpec, c: FieldElement, k: usize) -> Self {
        let mut coeffs = vec![FieldElement::ZERO; k + 1];
        coeffs[k] = c;
        Self::from_raw(field, coeffs)
    }

    /// The indeterminate `t`.
    pub fn t(field: &FieldSpec) -> Self {
        Self::monomial(field, FieldElement::ONE, 1)
    }

    /// Builds from ascending coefficients, validating each against `field`.
    pub fn from_coeffs(field: &FieldSpec, coeffs: Vec<FieldElement>) -> Result<Self> {
        for c in &coeffs {
            field.element(c.code()).map_err(|_| Error::FieldMismatch)?;
        }
        Ok(Self::from_raw(field, coeffs))
    }

    /// Builds from ascending integer codes.
    pub fn from_codes(field: &FieldSpec, codes: &[u64]) -> Result<Self> {
        let coeffs = codes
            .iter()
            .map(|&c| field.element(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_raw(field, coeffs))
    }

    pub(crate) fn from_raw(field: &FieldSpec, mut coeffs: Vec<FieldElement>) -> Self {
        trim(&mut coeffs);
        Self {
            field: field.clone(),
            coeffs,
        }
    }

    /// Parses the literal format: comma-separated element codes, constant
    /// term first. The empty string is the zero polynomial.
    pub fn parse(field: &FieldSpec, literal: &str) -> Result<Self> {
        let literal = literal.trim();
        if literal.is_empty() {
            return Ok(Self::zero(field));
        }
        let mut coeffs = Vec::new();
        for (position, token) in literal.split(',').enumerate() {
            let tok = token.trim();
            let code: u64 = tok.parse().map_err(|_| Error::BadLiteral {
                position,
                token: tok.to_string(),
                reason: "is not a non-negative integer",
            })?;
            let c = field.element(code).map_err(|_| Error::BadLiteral {
                position,
                token: tok.to_string(),
                reason: "is not below the field order",
            })?;
            coeffs.push(c);
        }
        Ok(Self::from_raw(field, coeffs))
    }

    /// The literal form accepted by [`Polynomial::parse`].
    pub fn to_literal(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.code().to_string()).collect();
        parts.join(",")
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Ascending coefficients; empty for zero.
    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn codes(&self) -> Vec<u64> {
        self.coeffs.iter().map(|c| c.code()).collect()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&FieldElement::ONE)
    }

    pub fn leading_coefficient(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    pub fn coeff(&self, k: usize) -> FieldElement {
        self.coeffs.get(k).copied().unwrap_or(FieldElement::ZERO)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self::from_raw(
            &self.field,
            add_slices(&self.field, &self.coeffs, &other.coeffs),
        ))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self::from_raw(
            &self.field,
            sub_slices(&self.field, &self.coeffs, &other.coeffs),
        ))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self::from_raw(
            &self.field,
            mul_slices(&self.field, &self.coeffs, &other.coeffs),
        ))
    }

    pub fn scalar_mul(&self, c: FieldElement) -> Self {
        let f = &self.field;
        Self::from_raw(f, self.coeffs.iter().map(|&x| f.mul(x, c)).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one(&self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division: `self = quotient·divisor + remainder` with
    /// `deg remainder < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check_same(divisor)?;
        let lc = divisor.leading_coefficient().ok_or(Error::DivisionByZero)?;
        let inv = self.field.inv(lc)?;
        let mut r = self.coeffs.clone();
        let mut q = Vec::new();
        rem_in_place(&self.field, &mut r, &divisor.coeffs, inv, Some(&mut q));
        Ok((
            Self::from_raw(&self.field, q),
            Self::from_raw(&self.field, r),
        ))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Exact division, failing when the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InvalidArgument("division is not exact".into()))
        }
    }

    pub fn divides(&self, other: &Self) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Self {
        let mut c = self.coeffs.clone();
        make_monic(&self.field, &mut c);
        Self::from_raw(&self.field, c)
    }

    /// Monic greatest common divisor; `gcd(a, 0) = monic(a)`.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Self::from_raw(
            &self.field,
            gcd_slices(&self.field, &self.coeffs, &other.coeffs),
        ))
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(f.from_int((i as u64 % f.characteristic()) as i64), c))
            .collect();
        Self::from_raw(f, coeffs)
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: FieldElement) -> FieldElement {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `‖f‖ = q^{deg f}`.
    pub fn norm(&self) -> Result<u128> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        (self.field.order() as u128)
            .checked_pow(d as u32)
            .ok_or(Error::Overflow("polynomial norm"))
    }

    /// The Sylvester resultant, evaluated through the Euclidean remainder
    /// chain. `Res(f, 0) = 0` for nonzero `f`.
    pub fn resultant(&self, other: &Self) -> Result<FieldElement> {
        self.check_same(other)?;
        let f = &self.field;
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_zero() || other.is_zero() {
            return Ok(FieldElement::ZERO);
        }
        let mut a = self.coeffs.clone();
        let mut b = other.coeffs.clone();
        let mut acc = FieldElement::ONE;
        loop {
            let da = a.len() - 1;
            let db = b.len() - 1;
            if db == 0 {
                return Ok(f.mul(acc, f.pow(b[0], da as u64)));
            }
            if da == 0 {
                return Ok(f.mul(acc, f.pow(a[0], db as u64)));
            }
            // Res(a, b) = (-1)^{da·db} Res(b, a), and with a = Q·b + r,
            // Res(b, a) = lc(b)^{da - deg r} Res(b, r).
            let lb = b[db];
            let mut r = a;
            rem_in_place(f, &mut r, &b, f.inv(lb)?, None);
            if r.is_empty() {
                return Ok(FieldElement::ZERO);
            }
            let dr = r.len() - 1;
            if da * db % 2 == 1 {
                acc = f.neg(acc);
            }
            acc = f.mul(acc, f.pow(lb, (da - dr) as u64));
            a = b;
            b = r;
        }
    }

    /// `disc(f) = (-1)^{n(n-1)/2} Res_{n,n-1}(f, f′) / lc(f)`, where the
    /// resultant treats `f′` as having formal degree `n - 1`. Zero when
    /// `f′ = 0`.
    pub fn discriminant(&self) -> Result<FieldElement> {
        let n = self.degree().ok_or(Error::ConstantPolynomial)?;
        if n == 0 {
            return Err(Error::ConstantPolynomial);
        }
        let f = &self.field;
        let d = self.derivative();
        let Some(dd) = d.degree() else {
            return Ok(FieldElement::ZERO);
        };
        let lc = self.leading_coefficient().unwrap();
        let res = self.resultant(&d)?;
        // Res_{n,n-1}(f, f′) = lc^{(n-1) - deg f′} · Res(f, f′)
        let mut value = f.mul(res, f.pow(lc, (n - 1 - dd) as u64));
        value = f.div(value, lc)?;
        if (n * (n - 1) / 2) % 2 == 1 {
            value = f.neg(value);
        }
        Ok(value)
    }

    /// Whether `f` is a square (or a constant times a square), decided from
    /// the squarefree decomposition.
    pub fn is_square(&self, mode: Squareness) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let parts = crate::factor::squarefree_decomposition(self)?;
        if parts.iter().any(|(_, m)| m % 2 == 1) {
            return Ok(false);
        }
        Ok(match mode {
            Squareness::UpToConstant => true,
            Squareness::Exact => self.field.is_square(self.leading_coefficient().unwrap()),
        })
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.field.order(), self)
    }
}

/// Human-readable form with coefficient codes, e.g. `t^5 + 2t^3 + 1`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coef = if c.code() == 1 && k > 0 {
                String::new()
            } else {
                c.code().to_string()
            };
            match k {
                0 => write!(f, "{coef}")?,
                1 => write!(f, "{coef}t")?,
                _ => write!(f, "{coef}t^{k}")?,
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        /// Panics when the operands live in different fields.
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs)
                    .expect("polynomials over different fields")
            }
        }

        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let f = &self.field;
        Polynomial::from_raw(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn poly(field: &FieldSpec, codes: &[u64]) -> Polynomial {
        Polynomial::from_codes(field, codes).unwrap()
    }

    #[test]
    fn product_and_division() {
        let f3 = f(3);
        assert_eq!(
            &poly(&f3, &[1, 1]) * &poly(&f3, &[2, 1]),
            poly(&f3, &[2, 0, 1])
        );
        let (q, r) = poly(&f3, &[1, 0, 0, 0, 0, 1])
            .div_rem(&poly(&f3, &[1, 1]))
            .unwrap();
        assert_eq!(q, poly(&f3, &[1, 2, 1, 2, 1]));
        assert!(r.is_zero());
        let a = poly(&f3, &[2, 1]);
        assert_eq!(&a + &Polynomial::zero(&f3), a);
        assert_eq!(
            a.div_rem(&Polynomial::zero(&f3)).unwrap_err(),
            Error::DivisionByZero
        );
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = poly(&f(3), &[1, 1]);
        let b = poly(&f(5), &[1, 1]);
        assert_eq!(a.try_add(&b).unwrap_err(), Error::FieldMismatch);
        assert_eq!(a.gcd(&b).unwrap_err(), Error::FieldMismatch);
        assert_eq!(a.resultant(&b).unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn gcds() {
        let f5 = f(5);
        let g = poly(&f5, &[4, 0, 1]).gcd(&poly(&f5, &[4, 1])).unwrap();
        assert_eq!(g, poly(&f5, &[4, 1]));
        let f3 = f(3);
        let h = poly(&f3, &[1, 0, 0, 0, 0, 1]);
        assert_eq!(h.gcd(&h.derivative()).unwrap(), Polynomial::one(&f3));
        let k = poly(&f3, &[1, 2, 2]);
        assert_eq!(k.gcd(&k).unwrap(), k.monic());
        assert_eq!(k.gcd(&Polynomial::zero(&f3)).unwrap(), k.monic());
        assert_eq!(
            Polynomial::zero(&f3)
                .gcd(&Polynomial::zero(&f3))
                .unwrap_err(),
            Error::ZeroPolynomial
        );
    }

    #[test]
    fn derivatives() {
        let f3 = f(3);
        assert_eq!(
            poly(&f3, &[1, 0, 0, 0, 0, 1]).derivative(),
            poly(&f3, &[0, 0, 0, 0, 2])
        );
        assert!(poly(&f3, &[0, 0, 0, 1]).derivative().is_zero());
        assert!(poly(&f3, &[2]).derivative().is_zero());
    }

    #[test]
    fn evaluation() {
        let f3 = f(3);
        let h = poly(&f3, &[1, 0, 0, 0, 0, 1]);
        assert_eq!(h.evaluate(f3.element(2).unwrap()), FieldElement::ZERO);
        assert_eq!(h.evaluate(FieldElement::ZERO), FieldElement::ONE);
        assert_eq!(
            Polynomial::zero(&f3).evaluate(FieldElement::ONE),
            FieldElement::ZERO
        );
    }

    #[test]
    fn norms() {
        assert_eq!(poly(&f(3), &[1, 0, 1]).norm().unwrap(), 9);
        assert_eq!(poly(&f(3), &[2]).norm().unwrap(), 1);
        assert_eq!(poly(&f(5), &[1, 0, 0, 0, 0, 1]).norm().unwrap(), 3125);
        assert_eq!(
            Polynomial::zero(&f(3)).norm().unwrap_err(),
            Error::ZeroPolynomial
        );
    }

    #[test]
    fn resultants() {
        let f5 = f(5);
        // Sylvester matrix of (t^2+1, 2t): [[1,0,1],[2,0,0],[0,2,0]] has det 4
        assert_eq!(
            poly(&f5, &[1, 0, 1])
                .resultant(&poly(&f5, &[0, 2]))
                .unwrap()
                .code(),
            4
        );
        // det [[1, -a], [1, -b]] = a - b
        for a in 0..5 {
            for b in 0..5 {
                let ta = poly(&f5, &[(5 - a) % 5, 1]);
                let tb = poly(&f5, &[(5 - b) % 5, 1]);
                assert_eq!(ta.resultant(&tb).unwrap().code(), (a + 5 - b) % 5);
            }
        }
        let g = poly(&f5, &[4, 1]);
        assert!((&g * &poly(&f5, &[1, 1, 1]))
            .resultant(&(&g * &poly(&f5, &[3, 1])))
            .unwrap()
            .is_zero());
        let z = Polynomial::zero(&f5);
        assert_eq!(z.resultant(&z).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn discriminants() {
        assert_eq!(poly(&f(5), &[1, 0, 1]).discriminant().unwrap().code(), 1);
        assert_eq!(poly(&f(3), &[1, 0, 1]).discriminant().unwrap().code(), 2);
        for p in [3, 5, 7] {
            assert!(poly(&f(p), &[1, 2, 1]).discriminant().unwrap().is_zero());
        }
        assert_eq!(
            poly(&f(3), &[2]).discriminant().unwrap_err(),
            Error::ConstantPolynomial
        );
        assert!(poly(&f(3), &[1, 0, 0, 1]).discriminant().unwrap().is_zero());
    }

    #[test]
    fn quadratic_discriminant_is_b2_minus_4c() {
        let f5 = f(5);
        for b in 0..5u64 {
            for c in 0..5u64 {
                let d = poly(&f5, &[c, b, 1]).discriminant().unwrap().code();
                assert_eq!(d, (b * b + 5 * 4 - 4 * c) % 5, "b={b} c={c}");
            }
        }
    }

    #[test]
    fn squareness() {
        let f3 = f(3);
        let t2 = poly(&f3, &[0, 0, 1]);
        assert!(t2.is_square(Squareness::Exact).unwrap());
        assert!(t2.is_square(Squareness::UpToConstant).unwrap());
        let two_t2 = poly(&f3, &[0, 0, 2]);
        assert!(!two_t2.is_square(Squareness::Exact).unwrap());
        assert!(two_t2.is_square(Squareness::UpToConstant).unwrap());
        for p in [3, 5, 7] {
            let t = poly(&f(p), &[0, 1]);
            assert!(!t.is_square(Squareness::Exact).unwrap());
            assert!(!t.is_square(Squareness::UpToConstant).unwrap());
        }
        assert!(Polynomial::zero(&f3).is_square(Squareness::Exact).is_err());
        // (t+1)^3 has odd multiplicity
        assert!(!poly(&f3, &[1, 0, 0, 1])
            .is_square(Squareness::UpToConstant)
            .unwrap());
    }

    #[test]
    fn literals() {
        let f3 = f(3);
        assert_eq!(
            Polynomial::parse(&f3, "1,0,2").unwrap(),
            poly(&f3, &[1, 0, 2])
        );
        assert_eq!(Polynomial::parse(&f3, "0,0,1").unwrap().to_string(), "t^2");
        assert!(Polynomial::parse(&f3, "").unwrap().is_zero());
        assert_eq!(Polynomial::parse(&f3, "1,0,0").unwrap().degree(), Some(0));
        assert_eq!(
            Polynomial::parse(&f(5), "7").unwrap_err(),
            Error::BadLiteral {
                position: 0,
                token: "7".into(),
                reason: "is not below the field order"
            }
        );
        assert!(matches!(
            Polynomial::parse(&f3, "1,x"),
            Err(Error::BadLiteral { position: 1, .. })
        ));
        assert_eq!(poly(&f3, &[1, 0, 2]).to_literal(), "1,0,2");
        assert_eq!(poly(&f3, &[1, 0, 2]).to_string(), "2t^2 + 1");
    }
}
