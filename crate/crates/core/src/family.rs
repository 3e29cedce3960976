//! Short intervals `I(p, m)` and the quadratic families
//! `F(A, t) = f + g·(p + Σ A_j t^j)²` evaluated over them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::poly::{Polynomial, Squareness};

/// `I(p, m) = { p + Σ_{j ≤ m} A_j t^j }` around a monic center of degree > m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortInterval {
    center: Polynomial,
    radius: usize,
}

impl ShortInterval {
    pub fn new(center: Polynomial, radius: usize) -> Result<Self> {
        if !center.is_monic() {
            return Err(Error::InvalidArgument(
                "interval center must be monic".into(),
            ));
        }
        if center.degree().unwrap() <= radius {
            return Err(Error::InvalidArgument(format!(
                "interval center degree must exceed the radius {radius}"
            )));
        }
        Ok(Self { center, radius })
    }

    pub fn center(&self) -> &Polynomial {
        &self.center
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn field(&self) -> &FieldSpec {
        self.center.field()
    }

    /// `#I(p, m) = q^{m+1}`, if it fits.
    pub fn size(&self) -> Option<u128> {
        (self.field().order() as u128).checked_pow(self.radius as u32 + 1)
    }

    /// The member `p + Σ A_j t^j`.
    pub fn member(&self, a: &[FieldElement]) -> Result<Polynomial> {
        self.check_tuple(a)?;
        Ok(Polynomial::from_raw(self.field(), self.shift(a)))
    }

    fn shift(&self, a: &[FieldElement]) -> Vec<FieldElement> {
        let f = self.field();
        let mut h = self.center.coeffs().to_vec();
        for (hj, &aj) in h.iter_mut().zip(a) {
            *hj = f.add(*hj, aj);
        }
        h
    }

    fn check_tuple(&self, a: &[FieldElement]) -> Result<()> {
        if a.len() != self.radius + 1 {
            return Err(Error::InvalidArgument(format!(
                "expected a tuple of {} elements, got {}",
                self.radius + 1,
                a.len()
            )));
        }
        let q = self.field().order();
        if a.iter().any(|x| x.code() >= q) {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    /// All tuples `(A_0, …, A_m)` in odometer order, `A_0` fastest.
    pub fn tuples(&self) -> Odometer {
        Odometer::new(self.field().order(), self.radius + 1, None)
    }

    /// The block of tuples with `A_m` fixed to `top`; the `q` blocks
    /// partition [`ShortInterval::tuples`] and concatenate back in order.
    pub fn block(&self, top: FieldElement) -> Odometer {
        Odometer::new(self.field().order(), self.radius + 1, Some(top))
    }

    /// Members in odometer order.
    pub fn members(&self) -> impl Iterator<Item = Polynomial> + '_ {
        self.tuples()
            .map(move |a| Polynomial::from_raw(self.field(), self.shift(&a)))
    }
}

/// Odometer over `F_q^len` (least significant coordinate first), optionally
/// with the last coordinate pinned.
#[derive(Clone, Debug)]
pub struct Odometer {
    q: u64,
    digits: Vec<FieldElement>,
    pinned: bool,
    started: bool,
    done: bool,
}

impl Odometer {
    pub fn new(q: u64, len: usize, top: Option<FieldElement>) -> Self {
        let mut digits = vec![FieldElement::ZERO; len];
        if let (Some(t), Some(last)) = (top, digits.last_mut()) {
            *last = t;
        }
        Self {
            q,
            digits,
            pinned: top.is_some(),
            started: false,
            done: false,
        }
    }

    /// Advances and borrows the next tuple without allocating.
    pub fn advance(&mut self) -> Option<&[FieldElement]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.digits);
        }
        let free = self.digits.len() - usize::from(self.pinned && !self.digits.is_empty());
        for d in self.digits[..free].iter_mut() {
            let next = d.code() + 1;
            if next < self.q {
                *d = FieldElement::from_code_unchecked(next);
                return Some(&self.digits);
            }
            *d = FieldElement::ZERO;
        }
        self.done = true;
        None
    }
}

impl Iterator for Odometer {
    type Item = Vec<FieldElement>;

    fn next(&mut self) -> Option<Self::Item> {
        self.advance().map(<[FieldElement]>::to_vec)
    }
}

/// Conditions a quadratic family must meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Violation {
    FZero,
    GZero,
    NotCoprime,
    GNotMonic,
    /// `deg f ≥ deg g`.
    DegOrder,
    /// `f·g` is an exact square.
    FgSquare,
    /// `deg p ≤ m`.
    PDegree,
    PNotMonic,
    QEven,
    FieldMismatch,
}

impl Violation {
    pub fn label(self) -> &'static str {
        match self {
            Violation::FZero => "f_zero",
            Violation::GZero => "g_zero",
            Violation::NotCoprime => "not_coprime",
            Violation::GNotMonic => "g_not_monic",
            Violation::DegOrder => "deg_order",
            Violation::FgSquare => "fg_square",
            Violation::PDegree => "p_degree",
            Violation::PNotMonic => "p_not_monic",
            Violation::QEven => "q_even",
            Violation::FieldMismatch => "field_mismatch",
        }
    }
}

/// Every violated admissibility condition for `(f, g, p, m)`; empty iff a
/// [`QuadraticFamily`] can be built from them.
pub fn check_admissible(
    f: &Polynomial,
    g: &Polynomial,
    p: &Polynomial,
    m: usize,
) -> Vec<Violation> {
    if f.field() != g.field() || f.field() != p.field() {
        return vec![Violation::FieldMismatch];
    }
    let mut out = Vec::new();
    if f.is_zero() {
        out.push(Violation::FZero);
    }
    if g.is_zero() {
        out.push(Violation::GZero);
    }
    if !(f.is_zero() && g.is_zero()) && !f.gcd(g).expect("not both zero").is_constant() {
        out.push(Violation::NotCoprime);
    }
    if !g.is_zero() && !g.is_monic() {
        out.push(Violation::GNotMonic);
    }
    if !f.is_zero() && !g.is_zero() {
        if f.degree() >= g.degree() {
            out.push(Violation::DegOrder);
        }
        if (f * g)
            .is_square(Squareness::Exact)
            .expect("nonzero product")
        {
            out.push(Violation::FgSquare);
        }
    }
    if p.degree().is_none_or(|d| d <= m) {
        out.push(Violation::PDegree);
    }
    if !p.is_zero() && !p.is_monic() {
        out.push(Violation::PNotMonic);
    }
    if !f.field().is_odd() {
        out.push(Violation::QEven);
    }
    out
}

/// An admissible family `F(A, t) = f + g·h²`, `h ∈ I(p, m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticFamily {
    f: Polynomial,
    g: Polynomial,
    interval: ShortInterval,
    f_tilde: Polynomial,
    degree: usize,
}

impl QuadraticFamily {
    pub fn new(f: Polynomial, g: Polynomial, center: Polynomial, radius: usize) -> Result<Self> {
        let violations = check_admissible(&f, &g, &center, radius);
        if !violations.is_empty() {
            return Err(Error::Inadmissible(violations));
        }
        let interval = ShortInterval::new(center, radius)?;
        let p = interval.center();
        let f_tilde = &f + &(&g * &(p * p));
        let degree = g.degree().unwrap() + 2 * p.degree().unwrap();
        Ok(Self {
            f,
            g,
            interval,
            f_tilde,
            degree,
        })
    }

    /// Parses the four literals over `field`.
    pub fn parse(field: &FieldSpec, f: &str, g: &str, center: &str, radius: usize) -> Result<Self> {
        Self::new(
            Polynomial::parse(field, f)?,
            Polynomial::parse(field, g)?,
            Polynomial::parse(field, center)?,
            radius,
        )
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn g(&self) -> &Polynomial {
        &self.g
    }

    pub fn interval(&self) -> &ShortInterval {
        &self.interval
    }

    pub fn field(&self) -> &FieldSpec {
        self.f.field()
    }

    /// `f̃ = f + g·p²`, the specialization at `A = 0`.
    pub fn f_tilde(&self) -> &Polynomial {
        &self.f_tilde
    }

    /// `n = deg g + 2·deg p`, the degree of every specialization.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `F(A, t) = f + g·h²` with `h = p + Σ A_j t^j`.
    pub fn specialize(&self, a: &[FieldElement]) -> Result<Polynomial> {
        self.interval.check_tuple(a)?;
        Ok(Polynomial::from_raw(
            self.field(),
            self.specialize_coeffs(a),
        ))
    }

    /// Unchecked coefficient form of [`QuadraticFamily::specialize`]; monic of
    /// degree `n`.
    pub(crate) fn specialize_coeffs(&self, a: &[FieldElement]) -> Vec<FieldElement> {
        use crate::poly::{add_slices, mul_slices};
        let fld = self.field();
        let h = self.interval.shift(a);
        let h2 = mul_slices(fld, &h, &h);
        add_slices(fld, self.f.coeffs(), &mul_slices(fld, self.g.coeffs(), &h2))
    }

    /// The same specialization through the expansion
    /// `f̃ + g·(ℓ² + 2pℓ)`, `ℓ = Σ A_j t^j`.
    pub fn specialize_expanded(&self, a: &[FieldElement]) -> Result<Polynomial> {
        self.interval.check_tuple(a)?;
        let fld = self.field();
        let ell = Polynomial::from_raw(fld, a.to_vec());
        let two = Polynomial::constant(fld, fld.from_int(2));
        let inner = &(&ell * &ell) + &(&(&two * self.interval.center()) * &ell);
        Ok(&self.f_tilde + &(&self.g * &inner))
    }

    /// Treats `F` as a quadratic `α·A_0² + β·A_0 + γ` in `A_0` with
    /// `A_1..A_m` fixed to `partial`, and checks `β² - 4αγ = -4·f·g`.
    pub fn verify_discriminant_identity(&self, partial: &[FieldElement]) -> Result<bool> {
        let m = self.interval.radius();
        if partial.len() != m {
            return Err(Error::InvalidArgument(format!(
                "expected {m} fixed coordinates, got {}",
                partial.len()
            )));
        }
        let fld = self.field();
        let mut ell1 = vec![FieldElement::ZERO];
        ell1.extend_from_slice(partial);
        let ell1 = Polynomial::from_coeffs(fld, ell1).map_err(|_| Error::FieldMismatch)?;
        let p = self.interval.center();
        let c = |k: i64| Polynomial::constant(fld, fld.from_int(k));
        let alpha = self.g.clone();
        let beta = &(&c(2) * &self.g) * &(&ell1 + p);
        let gamma = &self.f_tilde + &(&self.g * &(&(&ell1 * &ell1) + &(&(&c(2) * p) * &ell1)));
        let lhs = &(&beta * &beta) - &(&(&c(4) * &alpha) * &gamma);
        let rhs = &(&c(-4) * &self.f) * &self.g;
        Ok(lhs == rhs)
    }

    /// Associated families (`f_i g_j = f_j g_i`) define the same curve up to
    /// scaling.
    pub fn is_associate(&self, other: &Self) -> bool {
        &self.f * &other.g == &other.f * &self.g
    }

    /// Whether `f·g` is a square up to a constant; the weaker notion the
    /// character-sum bounds rely on.
    pub fn fg_square_up_to_constant(&self) -> bool {
        (&self.f * &self.g)
            .is_square(Squareness::UpToConstant)
            .expect("nonzero product")
    }
}
