//! Squarefree decomposition, distinct- and equal-degree factorization, and
//! the arithmetic functions built on them (Möbius, factorization types,
//! polynomial totient).
//!
//! Everything that only needs the *degrees* of the irreducible factors
//! (Möbius, factorization type, `Φ`) goes through the deterministic
//! squarefree + distinct-degree pipeline. Only [`factor`] needs the
//! randomized equal-degree splitting.

use std::cmp::Ordering;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::poly::{
    gcd_slices, make_monic, mul_slices, mulmod, powmod, rem_in_place, sub_slices, Polynomial,
};
use crate::Rational;

type Coeffs = Vec<FieldElement>;

const T: [FieldElement; 2] = [FieldElement::ZERO, FieldElement::ONE];

/// Exact quotient of monic-divisor division.
fn divide_exact(f: &FieldSpec, a: &[FieldElement], b: &[FieldElement]) -> Coeffs {
    let mut r = a.to_vec();
    let mut q = Vec::new();
    let inv = f.inv(*b.last().unwrap()).expect("nonzero divisor");
    rem_in_place(f, &mut r, b, inv, Some(&mut q));
    debug_assert!(r.is_empty(), "inexact division");
    q
}

fn derivative_slice(f: &FieldSpec, a: &[FieldElement]) -> Coeffs {
    let p = f.characteristic();
    let mut out: Coeffs = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| f.mul(f.from_int((i as u64 % p) as i64), c))
        .collect();
    crate::poly::trim(&mut out);
    out
}

/// `t^q mod m`, reduced.
fn frobenius_of_t(f: &FieldSpec, m: &[FieldElement]) -> Coeffs {
    powmod(f, &T, f.order() as u128, m, FieldElement::ONE)
}

/// Squarefree decomposition of a monic polynomial: pairwise coprime monic
/// squarefree parts with distinct multiplicities, sorted by multiplicity.
pub(crate) fn squarefree_monic(f: &FieldSpec, a: &[FieldElement]) -> Vec<(Coeffs, u32)> {
    let mut out = Vec::new();
    sqf_rec(f, a.to_vec(), 1, &mut out);
    out.sort_by_key(|(_, m)| *m);
    // one part per multiplicity
    let mut merged: Vec<(Coeffs, u32)> = Vec::with_capacity(out.len());
    for (g, m) in out {
        match merged.last_mut() {
            Some((h, mm)) if *mm == m => *h = mul_slices(f, h, &g),
            _ => merged.push((g, m)),
        }
    }
    merged
}

fn sqf_rec(f: &FieldSpec, a: Coeffs, scale: u32, out: &mut Vec<(Coeffs, u32)>) {
    if a.len() <= 1 {
        return;
    }
    let p = f.characteristic() as u32;
    let d = derivative_slice(f, &a);
    if d.is_empty() {
        sqf_rec(f, pth_root(f, &a), scale * p, out);
        return;
    }
    let mut c = gcd_slices(f, &a, &d);
    let mut w = divide_exact(f, &a, &c);
    let mut i = 1;
    while w.len() > 1 {
        let y = gcd_slices(f, &w, &c);
        let part = divide_exact(f, &w, &y);
        if part.len() > 1 {
            out.push((part, i * scale));
        }
        c = divide_exact(f, &c, &y);
        w = y;
        i += 1;
    }
    if c.len() > 1 {
        sqf_rec(f, pth_root(f, &c), scale * p, out);
    }
}

/// `a(t)^{1/p}` for `a` with vanishing derivative.
fn pth_root(f: &FieldSpec, a: &[FieldElement]) -> Coeffs {
    let p = f.characteristic() as usize;
    a.iter().step_by(p).map(|&c| f.pth_root(c)).collect()
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// `(product of all irreducible factors of degree d, d)`.
pub(crate) fn distinct_degree(f: &FieldSpec, a: &[FieldElement]) -> Vec<(Coeffs, usize)> {
    let mut out = Vec::new();
    let mut rest = a.to_vec();
    let mut h = T.to_vec();
    rem_in_place(f, &mut h, &rest, FieldElement::ONE, None);
    let mut d = 0;
    let q = f.order() as u128;
    while rest.len() > 2 * (d + 1) {
        d += 1;
        h = powmod(f, &h, q, &rest, FieldElement::ONE);
        let g = gcd_slices(f, &rest, &sub_slices(f, &h, &T));
        if g.len() > 1 {
            rest = divide_exact(f, &rest, &g);
            out.push((g, d));
            rem_in_place(f, &mut h, &rest, FieldElement::ONE, None);
        }
    }
    if rest.len() > 1 {
        let deg = rest.len() - 1;
        out.push((rest, deg));
    }
    out
}

/// Irreducibility of a monic polynomial of degree ≥ 1 (Rabin's test).
pub(crate) fn irreducible_monic(f: &FieldSpec, a: &[FieldElement]) -> bool {
    let n = a.len() - 1;
    if n == 1 {
        return true;
    }
    let q = f.order() as u128;
    // powers[k] = t^{q^k} mod a
    let mut powers = Vec::with_capacity(n + 1);
    powers.push(T.to_vec());
    let mut h = frobenius_of_t(f, a);
    powers.push(h.clone());
    for _ in 2..=n {
        h = powmod(f, &h, q, a, FieldElement::ONE);
        powers.push(h.clone());
    }
    if powers[n] != T {
        return false;
    }
    prime_divisors(n).into_iter().all(|l| {
        let diff = sub_slices(f, &powers[n / l], &T);
        gcd_slices(f, a, &diff).len() == 1
    })
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
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

fn monic_coeffs(poly: &Polynomial) -> Coeffs {
    let mut c = poly.coeffs().to_vec();
    make_monic(poly.field(), &mut c);
    c
}

/// Squarefree decomposition `f = unit · Π g_i^{m_i}`.
pub fn squarefree_decomposition(poly: &Polynomial) -> Result<Vec<(Polynomial, u32)>> {
    if poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = poly.field();
    Ok(squarefree_monic(f, &monic_coeffs(poly))
        .into_iter()
        .map(|(g, m)| (Polynomial::from_raw(f, g), m))
        .collect())
}

/// Deterministic irreducibility test: `t^{q^n} ≡ t (mod f)` and
/// `gcd(t^{q^{n/ℓ}} - t, f) = 1` for every prime `ℓ | n`.
pub fn is_irreducible(poly: &Polynomial) -> Result<bool> {
    match poly.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantPolynomial),
        Some(_) => Ok(irreducible_monic(poly.field(), &monic_coeffs(poly))),
    }
}

/// Degrees and multiplicities of the irreducible factors, without splitting
/// equal-degree products: `(degree, multiplicity, number of such factors)`.
pub(crate) fn degree_profile(f: &FieldSpec, monic: &[FieldElement]) -> Vec<(usize, u32, usize)> {
    let mut out = Vec::new();
    for (part, m) in squarefree_monic(f, monic) {
        for (g, d) in distinct_degree(f, &part) {
            out.push((d, m, (g.len() - 1) / d));
        }
    }
    out
}

/// The multiplicity-expanded factorization type of a monic polynomial.
pub(crate) fn type_of_monic(f: &FieldSpec, monic: &[FieldElement]) -> FactorizationType {
    let mut parts = Vec::with_capacity(monic.len());
    for (d, m, count) in degree_profile(f, monic) {
        parts.extend(std::iter::repeat_n(d, count * m as usize));
    }
    FactorizationType::from_unsorted(parts)
}

/// `None` when the monic polynomial is not squarefree.
pub(crate) fn class_of_monic(f: &FieldSpec, monic: &[FieldElement]) -> Option<FactorizationType> {
    let d = derivative_slice(f, monic);
    if d.is_empty() || gcd_slices(f, monic, &d).len() > 1 {
        return None;
    }
    let parts = distinct_degree(f, monic)
        .into_iter()
        .flat_map(|(g, d)| std::iter::repeat_n(d, (g.len() - 1) / d))
        .collect();
    Some(FactorizationType::from_unsorted(parts))
}

pub(crate) fn mobius_of_monic(f: &FieldSpec, monic: &[FieldElement]) -> i8 {
    if monic.len() <= 1 {
        return 1;
    }
    match class_of_monic(f, monic) {
        None => 0,
        Some(tau) if tau.parts().len() % 2 == 0 => 1,
        Some(_) => -1,
    }
}

/// A complete factorization `unit · Π P^e` into distinct monic irreducibles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FieldElement,
    /// Sorted by degree, then by ascending coefficient codes.
    pub factors: Vec<(Polynomial, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn expand(&self, field: &FieldSpec) -> Polynomial {
        self.factors
            .iter()
            .fold(Polynomial::constant(field, self.unit), |acc, (p, e)| {
                &acc * &p.pow(*e)
            })
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    pub fn factorization_type(&self) -> FactorizationType {
        let mut parts = Vec::new();
        for (p, e) in &self.factors {
            let d = p.degree().unwrap_or(0);
            parts.extend(std::iter::repeat_n(d, *e as usize));
        }
        FactorizationType::from_unsorted(parts)
    }
}

/// Serializes as `{"unit": code, "factors": [[literal, multiplicity], …]}`.
impl Serialize for Factorization {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        struct Factors<'a>(&'a [(Polynomial, u32)]);
        impl Serialize for Factors<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for (p, e) in self.0 {
                    seq.serialize_element(&(p.to_literal(), e))?;
                }
                seq.end()
            }
        }
        let mut st = s.serialize_struct("Factorization", 2)?;
        st.serialize_field("unit", &self.unit.code())?;
        st.serialize_field("factors", &Factors(&self.factors))?;
        st.end()
    }
}

fn canonical_order(a: &Polynomial, b: &Polynomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.coeffs().cmp(b.coeffs()))
}

/// FNV-1a over the coefficient codes; mixes the caller's seed per polynomial.
fn coefficient_hash(coeffs: &[FieldElement]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for c in coeffs {
        for b in c.code().to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
    h
}

/// Complete factorization: squarefree decomposition, distinct-degree
/// splitting, then randomized equal-degree splitting. The output is
/// canonically ordered and does not depend on `seed`.
pub fn factor(poly: &Polynomial, seed: u64) -> Result<Factorization> {
    let unit = poly.leading_coefficient().ok_or(Error::ZeroPolynomial)?;
    let f = poly.field();
    let monic = monic_coeffs(poly);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ coefficient_hash(&monic));
    let mut factors = Vec::new();
    for (part, m) in squarefree_monic(f, &monic) {
        for (g, d) in distinct_degree(f, &part) {
            let mut pieces = Vec::new();
            equal_degree(f, g, d, &mut rng, &mut pieces);
            factors.extend(pieces.into_iter().map(|p| (Polynomial::from_raw(f, p), m)));
        }
    }
    factors.sort_by(|a, b| canonical_order(&a.0, &b.0));
    Ok(Factorization { unit, factors })
}

/// Cantor–Zassenhaus splitting of a product of irreducibles of degree `d`.
fn equal_degree(f: &FieldSpec, g: Coeffs, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Coeffs>) {
    let n = g.len() - 1;
    if n == d {
        out.push(g);
        return;
    }
    loop {
        let a: Coeffs = {
            let mut v: Coeffs = (0..n)
                .map(|_| FieldElement::from_code_unchecked(rng.gen_range(0..f.order())))
                .collect();
            crate::poly::trim(&mut v);
            v
        };
        if a.len() <= 1 {
            continue;
        }
        let b = splitting_element(f, &a, d, &g);
        let h = gcd_slices(f, &g, &b);
        if h.len() <= 1 || h.len() == g.len() {
            continue;
        }
        let other = divide_exact(f, &g, &h);
        equal_degree(f, h, d, rng, out);
        equal_degree(f, other, d, rng, out);
        return;
    }
}

/// Odd `q`: `a^{(q^d - 1)/2} - 1`. Even `q = 2^k`: the trace
/// `a + a^2 + … + a^{2^{kd-1}}`. Both reduced mod `g`.
fn splitting_element(f: &FieldSpec, a: &[FieldElement], d: usize, g: &[FieldElement]) -> Coeffs {
    let q = f.order() as u128;
    if f.is_odd() {
        // a^{1 + q + … + q^{d-1}} then raise to (q - 1)/2
        let mut s = a.to_vec();
        let mut acc = a.to_vec();
        for _ in 1..d {
            s = powmod(f, &s, q, g, FieldElement::ONE);
            acc = mulmod(f, &acc, &s, g, FieldElement::ONE);
        }
        let b = powmod(f, &acc, (q - 1) / 2, g, FieldElement::ONE);
        sub_slices(f, &b, &[FieldElement::ONE])
    } else {
        let k = f.extension_degree() as usize;
        let mut term = a.to_vec();
        rem_in_place(f, &mut term, g, FieldElement::ONE, None);
        let mut acc = term.clone();
        for _ in 1..k * d {
            term = mulmod(f, &term, &term, g, FieldElement::ONE);
            acc = crate::poly::add_slices(f, &acc, &term);
        }
        acc
    }
}

/// `μ(f)`: `0` if a square divides `f`, else `(-1)^r` for `r` distinct
/// irreducible factors. Nonzero constants have `μ = 1`.
pub fn mobius(poly: &Polynomial) -> Result<i8> {
    if poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(mobius_of_monic(poly.field(), &monic_coeffs(poly)))
}

/// `μ(f) = (-1)^{deg f} χ₂(disc f)` (Pellet–Stickelberger); needs odd `q`
/// and `f′ ≠ 0`. Never factors.
pub fn mobius_via_discriminant(poly: &Polynomial) -> Result<i8> {
    let f = poly.field();
    if !f.is_odd() {
        return Err(Error::EvenCharacteristic);
    }
    let n = match poly.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(n) => n,
    };
    if poly.derivative().is_zero() {
        return Err(Error::Inseparable);
    }
    let chi = f.quadratic_character(poly.discriminant()?)?;
    Ok(if n % 2 == 0 { chi } else { -chi })
}

/// Multiplicity-expanded factorization type `τ_f`.
pub fn factorization_type(poly: &Polynomial) -> Result<FactorizationType> {
    match poly.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantPolynomial),
        Some(_) => Ok(type_of_monic(poly.field(), &monic_coeffs(poly))),
    }
}

/// Conjugacy class `Θ(f)` of the Frobenius permutation of the roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FrobeniusClass {
    Class(FactorizationType),
    /// `Θ` is undefined for inseparable `f`.
    NotSquarefree,
}

impl fmt::Display for FrobeniusClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrobeniusClass::Class(tau) => tau.fmt(f),
            FrobeniusClass::NotSquarefree => f.write_str("not-squarefree"),
        }
    }
}

pub fn frobenius_class(poly: &Polynomial) -> Result<FrobeniusClass> {
    match poly.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantPolynomial),
        Some(_) => Ok(match class_of_monic(poly.field(), &monic_coeffs(poly)) {
            Some(tau) => FrobeniusClass::Class(tau),
            None => FrobeniusClass::NotSquarefree,
        }),
    }
}

/// `Φ(Q) = Π (q^{de} - q^{d(e-1)})` over irreducible factors of degree `d`
/// and multiplicity `e`.
pub fn euler_phi(modulus: &Polynomial) -> Result<u128> {
    match modulus.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(_) => {}
    }
    let f = modulus.field();
    let q = f.order() as u128;
    let overflow = Error::Overflow("Euler phi");
    let mut phi: u128 = 1;
    for (d, e, count) in degree_profile(f, &monic_coeffs(modulus)) {
        let hi = q.checked_pow((d as u32) * e).ok_or(overflow.clone())?;
        let lo = q
            .checked_pow((d as u32) * (e - 1))
            .ok_or(overflow.clone())?;
        for _ in 0..count {
            phi = phi.checked_mul(hi - lo).ok_or(overflow.clone())?;
        }
    }
    Ok(phi)
}

/// A partition of `n`, stored non-increasing. Labels factorization types,
/// cycle types and conjugacy classes of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactorizationType(Vec<usize>);

impl FactorizationType {
    /// Validates positivity; sorts into non-increasing order.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(
                "partition parts must be positive".into(),
            ));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self(parts))
    }

    fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// The full-cycle class `(n)`.
    pub fn is_full_cycle(&self) -> bool {
        self.0.len() == 1
    }
}

impl fmt::Display for FactorizationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for FactorizationType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// All partitions of `n`, in reverse lexicographic order starting at `(n)`.
pub fn partitions(n: usize) -> Vec<FactorizationType> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<FactorizationType>) {
        if rest == 0 {
            out.push(FactorizationType(cur.clone()));
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            cur.push(k);
            rec(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Cauchy's formula: the probability that a uniform permutation of `S_n`
/// has cycle type `tau`, `Π_j 1/(j^{c_j} c_j!)`.
pub fn cauchy_probability(tau: &FactorizationType, n: usize) -> Result<Rational> {
    if tau.total() != n {
        return Err(Error::InvalidPartition {
            parts: tau.0.clone(),
            n,
        });
    }
    let overflow = Error::Overflow("cycle-type denominator");
    let mut den: i128 = 1;
    let mut i = 0;
    while i < tau.0.len() {
        let j = tau.0[i];
        let c = tau.0[i..].iter().take_while(|&&x| x == j).count();
        for k in 1..=c {
            den = den
                .checked_mul(j as i128)
                .and_then(|x| x.checked_mul(k as i128))
                .ok_or(overflow.clone())?;
        }
        i += c;
    }
    Ok(Rational::new(1, den))
}
