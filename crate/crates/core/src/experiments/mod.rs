//! Exhaustive experiments over `M_n` and over short intervals, with exact
//! counts, exact main terms and squared-integer bound checks.
//!
//! Every enumeration is split into `q` blocks by its last coordinate and the
//! blocks are reduced on the current rayon pool. Aggregation is integer
//! addition, so results never depend on the schedule.

mod report;
mod sweep;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::factor::{
    cauchy_probability, class_of_monic, euler_phi, factor, irreducible_monic, mobius_of_monic,
    partitions, type_of_monic, FactorizationType,
};
use crate::family::{Odometer, QuadraticFamily};
use crate::field::{FieldElement, FieldSpec};
use crate::poly::{add_slices, Polynomial, Squareness};
use crate::Rational;

pub use report::{Assertion, Bound, ClassRow, ClassTable, ExperimentReport, FieldInfo};
pub use sweep::{parse_q_grid, sweep, Experiment, FamilyLiterals, SweepFailure, SweepOutcome};

/// Default cap on the number of polynomials an experiment may visit.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunOptions {
    /// Seeds the randomized splitting used by cross-check factorizations.
    pub seed: u64,
    pub budget: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            budget: DEFAULT_BUDGET,
        }
    }
}

fn guard(q: u64, len: usize, opts: &RunOptions) -> Result<u64> {
    let requested = (q as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
    if requested > opts.budget as u128 {
        return Err(Error::BudgetExceeded {
            requested,
            cap: opts.budget,
        });
    }
    Ok(requested as u64)
}

/// Folds `step` over all of `F_q^len` in parallel blocks and merges the block
/// results in block order.
fn fold_tuples<A, S, M>(q: u64, len: usize, step: S, merge: M) -> A
where
    A: Default + Send,
    S: Fn(&mut A, &[FieldElement]) + Sync,
    M: Fn(&mut A, A),
{
    let run = |mut od: Odometer| {
        let mut acc = A::default();
        while let Some(a) = od.advance() {
            step(&mut acc, a);
        }
        acc
    };
    if len == 0 {
        return run(Odometer::new(q, 0, None));
    }
    let blocks: Vec<A> = (0..q)
        .into_par_iter()
        .map(|top| {
            run(Odometer::new(
                q,
                len,
                Some(FieldElement::from_code_unchecked(top)),
            ))
        })
        .collect();
    let mut total = A::default();
    for b in blocks {
        merge(&mut total, b);
    }
    total
}

/// Folds over every monic polynomial of degree `n` (coefficients ascending,
/// trailing 1 included).
fn fold_monic<A, S, M>(field: &FieldSpec, n: usize, step: S, merge: M) -> A
where
    A: Default + Send,
    S: Fn(&mut A, &[FieldElement]) + Sync,
    M: Fn(&mut A, A),
{
    fold_tuples(
        field.order(),
        n,
        |acc, a| {
            let mut monic = Vec::with_capacity(n + 1);
            monic.extend_from_slice(a);
            monic.push(FieldElement::ONE);
            step(acc, &monic);
        },
        merge,
    )
}

fn sum_i128(a: &mut i128, b: i128) {
    *a += b;
}

fn sum_u64(a: &mut u64, b: u64) {
    *a += b;
}

fn merge_counts(a: &mut BTreeMap<FactorizationType, u64>, b: BTreeMap<FactorizationType, u64>) {
    for (k, v) in b {
        *a.entry(k).or_default() += v;
    }
}

fn elapsed_ms(start: Instant) -> Option<u64> {
    Some(start.elapsed().as_millis() as u64)
}

fn ratio(num: i128, den: i128) -> Rational {
    Rational::new(num, den)
}

fn pow_i128(q: u64, e: usize) -> Result<i128> {
    (q as i128)
        .checked_pow(e as u32)
        .ok_or(Error::Overflow("power of q"))
}

fn integer_mobius(mut n: usize) -> i128 {
    let mut r = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            r = -r;
        }
        d += 1;
    }
    if n > 1 {
        r = -r;
    }
    r
}

/// The necklace count `(1/n) Σ_{d | n} μ(d) q^{n/d}` of monic irreducibles
/// of degree `n ≥ 1`.
pub fn necklace_count(q: u64, n: usize) -> Result<i128> {
    if n == 0 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    let mut s = 0i128;
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        s += integer_mobius(d) * pow_i128(q, n / d)?;
    }
    Ok(s / n as i128)
}

fn class_table(
    counts: &BTreeMap<FactorizationType, u64>,
    not_squarefree: Option<u64>,
    n: usize,
    total: u64,
) -> Result<ClassTable> {
    let total_r = Rational::from_integer(total as i128);
    let mut rows = Vec::new();
    let mut tv = Rational::from_integer(0);
    for tau in partitions(n) {
        let p = cauchy_probability(&tau, n)?;
        let count = counts.get(&tau).copied().unwrap_or(0);
        let d = ratio(count as i128, total as i128) - p;
        tv += if d < Rational::from_integer(0) { -d } else { d };
        rows.push(ClassRow {
            class: tau,
            count,
            expected_frequency: p,
            expected_count: p * total_r,
        });
    }
    if let Some(ns) = not_squarefree {
        tv += ratio(ns as i128, total as i128);
    }
    tv /= Rational::from_integer(2);
    Ok(ClassTable {
        rows,
        not_squarefree,
        total_variation_display: report::to_f64(&tv),
        total_variation: tv,
    })
}

/// `π_q(n)` by exhaustive irreducibility testing over `M_n`.
pub fn prime_count_total(
    field: &FieldSpec,
    n: usize,
    opts: &RunOptions,
) -> Result<ExperimentReport> {
    let start = Instant::now();
    let necklace = necklace_count(field.order(), n)?;
    let enumerated = guard(field.order(), n, opts)?;
    let observed: u64 = fold_monic(
        field,
        n,
        |acc, f| *acc += u64::from(irreducible_monic(field, f)),
        sum_u64,
    );
    let q_n = pow_i128(field.order(), n)?;
    let mut r = ExperimentReport::new(
        "prime_count_total",
        field,
        observed as i128,
        ratio(q_n, n as i128),
        opts.seed,
        enumerated,
    )
    .param("n", n)
    .detail("necklace", necklace as i64)
    .assert("necklace_agreement", observed as i128 == necklace);
    r.elapsed_ms = elapsed_ms(start);
    Ok(r)
}

/// `π_q(n; Q, A)`: monic irreducibles of degree `n` congruent to `A` mod `Q`.
pub fn prime_count_ap(
    field: &FieldSpec,
    n: usize,
    modulus: &Polynomial,
    residue: &Polynomial,
    opts: &RunOptions,
) -> Result<ExperimentReport> {
    let start = Instant::now();
    if modulus.field() != field || residue.field() != field {
        return Err(Error::FieldMismatch);
    }
    if modulus.degree().is_none_or(|d| d == 0) {
        return Err(Error::InvalidArgument(
            "modulus Q must have degree at least 1".into(),
        ));
    }
    let a = residue.rem(modulus)?;
    if !a.gcd(modulus)?.is_constant() {
        return Err(Error::InvalidArgument(format!(
            "A = {} is not coprime to Q = {}",
            residue.to_literal(),
            modulus.to_literal()
        )));
    }
    let pi = necklace_count(field.order(), n)?;
    let phi = euler_phi(modulus)?;
    let enumerated = guard(field.order(), n, opts)?;
    let observed: u64 = fold_monic(
        field,
        n,
        |acc, f| {
            if irreducible_monic(field, f) {
                let p = Polynomial::from_raw(field, f.to_vec());
                if p.rem(modulus).expect("nonzero modulus") == a {
                    *acc += 1;
                }
            }
        },
        sum_u64,
    );
    let phi = i128::try_from(phi).map_err(|_| Error::Overflow("Euler phi"))?;
    let mut r = ExperimentReport::new(
        "prime_count_ap",
        field,
        observed as i128,
        ratio(pi, phi),
        opts.seed,
        enumerated,
    )
    .param("n", n)
    .param("Q", modulus.to_literal())
    .param("A", a.to_literal())
    .detail("prime_count", pi as i64)
    .detail("euler_phi", phi as i64);
    r.elapsed_ms = elapsed_ms(start);
    Ok(r)
}

fn family_params(r: ExperimentReport, fam: &QuadraticFamily) -> ExperimentReport {
    r.param("f", fam.f().to_literal())
        .param("g", fam.g().to_literal())
        .param("center", fam.interval().center().to_literal())
        .param("m", fam.interval().radius())
        .param("n", fam.degree())
}

fn interval_guard(fam: &QuadraticFamily, opts: &RunOptions) -> Result<u64> {
    guard(fam.field().order(), fam.interval().radius() + 1, opts)
}

/// `π_q(I(p, m))`: irreducible specializations over the interval, with the
/// count recomputed through full factorization.
pub fn count_primes_interval(fam: &QuadraticFamily, opts: &RunOptions) -> Result<ExperimentReport> {
    let start = Instant::now();
    let field = fam.field();
    let enumerated = interval_guard(fam, opts)?;
    let len = fam.interval().radius() + 1;
    let seed = opts.seed;
    let (observed, via_factor): (u64, u64) = fold_tuples(
        field.order(),
        len,
        |acc: &mut (u64, u64), a| {
            let coeffs = fam.specialize_coeffs(a);
            acc.0 += u64::from(irreducible_monic(field, &coeffs));
            let poly = Polynomial::from_raw(field, coeffs);
            acc.1 += u64::from(factor(&poly, seed).expect("nonzero").is_irreducible());
        },
        |t, b| {
            t.0 += b.0;
            t.1 += b.1;
        },
    );
    let size = pow_i128(field.order(), len)?;
    let mut r = ExperimentReport::new(
        "count_primes_interval",
        field,
        observed as i128,
        ratio(size, fam.degree() as i128),
        seed,
        enumerated,
    );
    r = family_params(r, fam)
        .detail("observed_via_factor", via_factor)
        .assert("factorization_agreement", observed == via_factor);
    r.elapsed_ms = elapsed_ms(start);
    Ok(r)
}

/// Frobenius classes of the specializations against Cauchy's formula;
/// inseparable specializations are counted separately.
pub fn frobenius_distribution(
    fam: &QuadraticFamily,
    opts: &RunOptions,
) -> Result<ExperimentReport> {
    let start = Instant::now();
    let field = fam.field();
    let enumerated = interval_guard(fam, opts)?;
    let len = fam.interval().radius() + 1;
    let n = fam.degree();
    let (counts, not_sqf): (BTreeMap<FactorizationType, u64>, u64) = fold_tuples(
        field.order(),
        len,
        |acc: &mut (BTreeMap<_, u64>, u64), a| match class_of_monic(
            field,
            &fam.specialize_coeffs(a),
        ) {
            Some(tau) => *acc.0.entry(tau).or_default() += 1,
            None => acc.1 += 1,
        },
        |t, b| {
            merge_counts(&mut t.0, b.0);
            t.1 += b.1;
        },
    );
    let table = class_table(&counts, Some(not_sqf), n, enumerated)?;
    let full = table.count(&FactorizationType::new(vec![n])?).unwrap_or(0);
    let size = pow_i128(field.order(), len)?;
    let mut r = ExperimentReport::new(
        "frobenius_distribution",
        field,
        full as i128,
        ratio(size, n as i128),
        opts.seed,
        enumerated,
    );
    r = family_params(r, fam).assert("counts_total", table.total() == enumerated);
    r.table = Some(table);
    r.elapsed_ms = elapsed_ms(start);
    Ok(r)
}

/// Distribution of the factorization type `τ_f` over `M_n`.
pub fn type_distribution_mn(
    field: &FieldSpec,
    n: usize,
    opts: &RunOptions,
) -> Result<ExperimentReport> {
    let start = Instant::now();
    if n == 0 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    let enumerated = guard(field.order(), n, opts)?;
    let counts = fold_monic(
        field,
        n,
        |acc: &mut BTreeMap<FactorizationType, u64>, f| {
            *acc.entry(type_of_monic(field, f)).or_default() += 1
        },
        merge_counts,
    );
    let table = class_table(&counts, None, n, enumerated)?;
    let full = table.count(&FactorizationType::new(vec![n])?).unwrap_or(0);
    let q_n = pow_i128(field.order(), n)?;
    let mut r = ExperimentReport::new(
        "type_distribution_mn",
        field,
        full as i128,
        ratio(q_n, n as i128),
        opts.seed,
        enumerated,
    )
    .param("n", n)
    .assert("counts_total", table.total() == enumerated);
    r.table = Some(table);
    r.elapsed_ms = elapsed_ms(start);
    Ok(r)
}

/// `Σ_{f ∈ M_n} μ(f)`, which is `1`, `-q`, `0` for `n = 0`, `1`, `n ≥ 2`.
pub fn mobius_full_sum(field: &FieldSpec, n: usize, opts: &RunOptions) -> Result<ExperimentReport> {
    let start = Instant::now();
    let enumerated = guard(field.order(), n, opts)?;
    let observed: i128 = fold_monic(
        field,
        n,
        |acc, f| *acc += i128::from(mobius_of_monic(field, f)),
        sum_i128,
    );
    let expected = match n {
        0 => 1,
        1 => -(field.order() as i128),
        _ => 0,
    };
    let mut r = ExperimentReport::new(
        "mobius_full_sum",
        field,
        observed,
        Rational::from_integer(expected),
        opts.seed,
        enumerated,
    )
    .param("n", n)
    .assert("closed_form", observed == expected);
    r.elapsed_ms = elapsed_ms(start);
    Ok(r)
}

/// `S_μ(p; m) = Σ_{h ∈ I(p,m)} μ(f + g h²)` against `(n-2) q^{m+1/2}`.
pub fn mobius_interval_sum(fam: &QuadraticFamily, opts: &RunOptions) -> Result<ExperimentReport> {
    let start = Instant::now();
    let field = fam.field();
    let enumerated = interval_guard(fam, opts)?;
    let m = fam.interval().radius();
    let observed: i128 = fold_tuples(
        field.order(),
        m + 1,
        |acc, a| *acc += i128::from(mobius_of_monic(field, &fam.specialize_coeffs(a))),
        sum_i128,
    );
    let k = fam.degree() as i128 - 2;
    let bound = Bound::new(
        k * k * pow_i128(field.order(), 2 * m + 1)?,
        "(n-2)^2 q^(2m+1)",
    );
    let mut r = ExperimentReport::new(
        "mobius_interval_sum",
        field,
        observed,
        Rational::from_integer(0),
        opts.seed,
        enumerated,
    );
    r = family_params(r, fam).with_bound(bound);
    r.elapsed_ms = elapsed_ms(start);
    Ok(r)
}

fn check_eps(eps: &[u8], r: usize) -> Result<()> {
    if eps.len() != r {
        return Err(Error::InvalidArgument(format!(
            "expected {r} exponents, got {}",
            eps.len()
        )));
    }
    if let Some(e) = eps.iter().find(|&&e| e != 1 && e != 2) {
        return Err(Error::InvalidArgument(format!(
            "exponent {e} is not 1 or 2"
        )));
    }
    if eps.iter().all(|&e| e == 2) {
        return Err(Error::AllEvenExponents);
    }
    Ok(())
}

fn check_families(families: &[QuadraticFamily]) -> Result<()> {
    let first = families
        .first()
        .ok_or_else(|| Error::InvalidArgument("at least one family is required".into()))?;
    for fam in &families[1..] {
        if fam.field() != first.field() {
            return Err(Error::FieldMismatch);
        }
        if fam.interval() != first.interval() {
            return Err(Error::InvalidArgument(
                "families must share one interval (center and m)".into(),
            ));
        }
    }
    for i in 0..families.len() {
        for j in i + 1..families.len() {
            if families[i].is_associate(&families[j]) {
                return Err(Error::AssociatedFamilies(i, j));
            }
        }
    }
    Ok(())
}

fn powered(mu: i8, e: u8) -> i128 {
    if e.is_multiple_of(2) {
        i128::from(mu * mu)
    } else {
        i128::from(mu)
    }
}

fn join_literals<'a>(it: impl Iterator<Item = &'a Polynomial>) -> String {
    it.map(Polynomial::to_literal).collect::<Vec<_>>().join(";")
}

fn join_eps(eps: &[u8]) -> String {
    eps.iter().map(u8::to_string).collect::<Vec<_>>().join(",")
}

/// `Σ_h Π_i μ(F_i(h))^{ε_i}` over a shared interval, against
/// `(2 Σ (n_i - 1) - 1) q^{m+1/2}`.
pub fn chowla_interval(
    families: &[QuadraticFamily],
    eps: &[u8],
    opts: &RunOptions,
) -> Result<ExperimentReport> {
    let start = Instant::now();
    check_families(families)?;
    check_eps(eps, families.len())?;
    let fam0 = &families[0];
    let field = fam0.field();
    let enumerated = interval_guard(fam0, opts)?;
    let m = fam0.interval().radius();
    let observed: i128 = fold_tuples(
        field.order(),
        m + 1,
        |acc, a| {
            let mut prod = 1i128;
            for (fam, &e) in families.iter().zip(eps) {
                prod *= powered(mobius_of_monic(field, &fam.specialize_coeffs(a)), e);
                if prod == 0 {
                    break;
                }
            }
            *acc += prod;
        },
        sum_i128,
    );
    let k: i128 = 2 * families
        .iter()
        .map(|f| f.degree() as i128 - 1)
        .sum::<i128>()
        - 1;
    let bound = Bound::new(
        k * k * pow_i128(field.order(), 2 * m + 1)?,
        "(2 sum(n_i-1) - 1)^2 q^(2m+1)",
    );
    let mut r = ExperimentReport::new(
        "chowla_interval",
        field,
        observed,
        Rational::from_integer(0),
        opts.seed,
        enumerated,
    )
    .param("f", join_literals(families.iter().map(QuadraticFamily::f)))
    .param("g", join_literals(families.iter().map(QuadraticFamily::g)))
    .param("center", fam0.interval().center().to_literal())
    .param("m", m)
    .param("eps", join_eps(eps))
    .with_bound(bound);
    r.elapsed_ms = elapsed_ms(start);
    Ok(r)
}

/// `Σ_{F ∈ M_n} Π_i μ(F + α_i)^{ε_i}`; the implied constant is not explicit,
/// so only the normalized ratio `|S| / (r n q^{n-1/2})` is reported.
pub fn chowla_classical(
    field: &FieldSpec,
    n: usize,
    shifts: &[Polynomial],
    eps: &[u8],
    opts: &RunOptions,
) -> Result<ExperimentReport> {
    let start = Instant::now();
    if n == 0 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    if shifts.is_empty() {
        return Err(Error::InvalidArgument(
            "at least one shift is required".into(),
        ));
    }
    for (i, s) in shifts.iter().enumerate() {
        if s.field() != field {
            return Err(Error::FieldMismatch);
        }
        if s.degree().is_some_and(|d| d >= n) {
            return Err(Error::InvalidArgument(format!(
                "shift {} has degree ≥ n = {n}",
                s.to_literal()
            )));
        }
        if shifts[..i].contains(s) {
            return Err(Error::InvalidArgument(format!(
                "duplicate shift {}",
                s.to_literal()
            )));
        }
    }
    check_eps(eps, shifts.len())?;
    let enumerated = guard(field.order(), n, opts)?;
    let observed: i128 = fold_monic(
        field,
        n,
        |acc, f| {
            let mut prod = 1i128;
            for (s, &e) in shifts.iter().zip(eps) {
                prod *= powered(mobius_of_monic(field, &add_slices(field, f, s.coeffs())), e);
                if prod == 0 {
                    break;
                }
            }
            *acc += prod;
        },
        sum_i128,
    );
    let scale = (shifts.len() * n) as f64 * (field.order() as f64).powf(n as f64 - 0.5);
    let mut r = ExperimentReport::new(
        "chowla_classical",
        field,
        observed,
        Rational::from_integer(0),
        opts.seed,
        enumerated,
    )
    .param("n", n)
    .param("shifts", join_literals(shifts.iter()))
    .param("eps", join_eps(eps))
    .detail("ratio", observed.unsigned_abs() as f64 / scale);
    r.elapsed_ms = elapsed_ms(start);
    Ok(r)
}

/// Simultaneous irreducibility of several non-associate families over one
/// interval; main term `q^{m+1} Π 1/n_i`.
pub fn bateman_horn_count(
    families: &[QuadraticFamily],
    opts: &RunOptions,
) -> Result<ExperimentReport> {
    let start = Instant::now();
    check_families(families)?;
    let fam0 = &families[0];
    let field = fam0.field();
    let enumerated = interval_guard(fam0, opts)?;
    let m = fam0.interval().radius();
    let r_len = families.len();
    let (joint, individual): (u64, Vec<u64>) = fold_tuples(
        field.order(),
        m + 1,
        |acc: &mut (u64, Vec<u64>), a| {
            if acc.1.is_empty() {
                acc.1 = vec![0; r_len];
            }
            let mut all = true;
            for (i, fam) in families.iter().enumerate() {
                if irreducible_monic(field, &fam.specialize_coeffs(a)) {
                    acc.1[i] += 1;
                } else {
                    all = false;
                }
            }
            acc.0 += u64::from(all);
        },
        |t, b| {
            t.0 += b.0;
            if t.1.is_empty() {
                t.1 = vec![0; r_len];
            }
            for (x, y) in t.1.iter_mut().zip(b.1) {
                *x += y;
            }
        },
    );
    let individual = if individual.is_empty() {
        vec![0; r_len]
    } else {
        individual
    };
    let mut main = Rational::from_integer(pow_i128(field.order(), m + 1)?);
    for fam in families {
        main /= Rational::from_integer(fam.degree() as i128);
    }
    let min = individual.iter().copied().min().unwrap_or(0);
    let mut r = ExperimentReport::new(
        "bateman_horn_count",
        field,
        joint as i128,
        main,
        opts.seed,
        enumerated,
    )
    .param("f", join_literals(families.iter().map(QuadraticFamily::f)))
    .param("g", join_literals(families.iter().map(QuadraticFamily::g)))
    .param("center", fam0.interval().center().to_literal())
    .param("m", m)
    .detail("individual", individual.clone())
    .assert("joint_at_most_individual", joint <= min);
    if r_len == 1 {
        r = r.assert("single_family_agreement", joint == individual[0]);
    }
    r.elapsed_ms = elapsed_ms(start);
    Ok(r)
}

/// `Σ_{b ∈ F_q} χ₂(P(b))` against the Weil bound `(deg P - 1) √q`.
pub fn weil_character_sum(
    field: &FieldSpec,
    poly: &Polynomial,
    opts: &RunOptions,
) -> Result<ExperimentReport> {
    let start = Instant::now();
    if poly.field() != field {
        return Err(Error::FieldMismatch);
    }
    if !field.is_odd() {
        return Err(Error::EvenCharacteristic);
    }
    let d = match poly.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(d) => d as i128,
    };
    if poly.is_square(Squareness::UpToConstant)? {
        return Err(Error::SquareArgument);
    }
    let enumerated = guard(field.order(), 1, opts)?;
    let observed: i128 = field
        .elements()
        .map(|b| i128::from(field.quadratic_character(poly.evaluate(b)).expect("odd q")))
        .sum();
    let bound = Bound::new((d - 1) * (d - 1) * field.order() as i128, "(deg P - 1)^2 q");
    let mut r = ExperimentReport::new(
        "weil_character_sum",
        field,
        observed,
        Rational::from_integer(0),
        opts.seed,
        enumerated,
    )
    .param("P", poly.to_literal())
    .with_bound(bound);
    r.elapsed_ms = elapsed_ms(start);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(q: u64) -> FieldSpec {
        FieldSpec::from_order(q).unwrap()
    }

    fn opts() -> RunOptions {
        RunOptions::default()
    }

    fn worked(q: u64) -> QuadraticFamily {
        QuadraticFamily::parse(&f(q), "1", "0,1", "0,0,1", 0).unwrap()
    }

    #[test]
    fn necklace_small() {
        assert_eq!(necklace_count(3, 2).unwrap(), 3);
        assert_eq!(necklace_count(5, 3).unwrap(), 40);
        assert_eq!(necklace_count(2, 4).unwrap(), 3);
    }

    #[test]
    fn prime_counts() {
        let r = prime_count_total(&f(3), 2, &opts()).unwrap();
        assert_eq!(r.observed, 3);
        assert!(r.passed());
        assert_eq!(prime_count_total(&f(3), 1, &opts()).unwrap().observed, 3);
        let r = prime_count_total(&f(5), 3, &opts()).unwrap();
        assert_eq!(r.observed, 40);
        assert_eq!(r.enumerated, 125);
    }

    #[test]
    fn budget_refuses() {
        let o = RunOptions {
            seed: 0,
            budget: 100,
        };
        assert_eq!(
            prime_count_total(&f(5), 3, &o).unwrap_err(),
            Error::BudgetExceeded {
                requested: 125,
                cap: 100
            }
        );
    }

    #[test]
    fn arithmetic_progressions() {
        let fl = f(3);
        let q = Polynomial::parse(&fl, "0,1").unwrap();
        let r = prime_count_ap(&fl, 1, &q, &Polynomial::parse(&fl, "1").unwrap(), &opts()).unwrap();
        assert_eq!(r.observed, 1);
        let fl = f(5);
        let q = Polynomial::parse(&fl, "0,1").unwrap();
        let r = prime_count_ap(&fl, 2, &q, &Polynomial::parse(&fl, "2").unwrap(), &opts()).unwrap();
        assert_eq!(r.main_term, Rational::new(10, 4));
        assert_eq!(r.observed, 3);
        let zero = Polynomial::parse(&fl, "0,2").unwrap();
        assert!(prime_count_ap(&fl, 2, &q, &zero, &opts()).is_err());
    }

    #[test]
    fn ap_residues_partition_primes() {
        let fl = f(3);
        let q = Polynomial::parse(&fl, "1,0,1").unwrap();
        let mut total = 0;
        for c0 in 0..3 {
            for c1 in 0..3 {
                let a = Polynomial::from_codes(&fl, &[c0, c1]).unwrap();
                if let Ok(r) = prime_count_ap(&fl, 3, &q, &a, &opts()) {
                    total += r.observed;
                }
            }
        }
        assert_eq!(total, 8);
    }

    #[test]
    fn worked_family_f3() {
        let fam = worked(3);
        let r = count_primes_interval(&fam, &opts()).unwrap();
        assert_eq!(r.observed, 1);
        assert_eq!(r.main_term, Rational::new(3, 5));
        assert!(r.passed());

        let r = frobenius_distribution(&fam, &opts()).unwrap();
        let t = r.table.as_ref().unwrap();
        assert_eq!(t.count(&FactorizationType::new(vec![5]).unwrap()), Some(1));
        assert_eq!(
            t.count(&FactorizationType::new(vec![4, 1]).unwrap()),
            Some(1)
        );
        assert_eq!(t.not_squarefree, Some(1));
        assert_eq!(t.total(), 3);

        let r = mobius_interval_sum(&fam, &opts()).unwrap();
        assert_eq!(r.observed, 0);
        assert_eq!(r.bound.as_ref().unwrap().squared, 27);
        assert!(r.passed());
    }

    #[test]
    fn type_distribution_quadratics() {
        let r = type_distribution_mn(&f(3), 2, &opts()).unwrap();
        let t = r.table.unwrap();
        assert_eq!(t.count(&FactorizationType::new(vec![2]).unwrap()), Some(3));
        assert_eq!(
            t.count(&FactorizationType::new(vec![1, 1]).unwrap()),
            Some(6)
        );
    }

    #[test]
    fn full_sums() {
        assert_eq!(mobius_full_sum(&f(3), 1, &opts()).unwrap().observed, -3);
        assert_eq!(mobius_full_sum(&f(3), 0, &opts()).unwrap().observed, 1);
        assert_eq!(mobius_full_sum(&f(5), 3, &opts()).unwrap().observed, 0);
    }

    #[test]
    fn chowla_and_bateman_horn() {
        let fl = f(3);
        let a = worked(3);
        let b = QuadraticFamily::parse(&fl, "2", "0,1", "0,0,1", 0).unwrap();
        let fams = [a.clone(), b];
        let r = chowla_interval(&fams, &[1, 1], &opts()).unwrap();
        assert_eq!(r.bound.as_ref().unwrap().squared, 675);
        assert_eq!(r.observed, 2);
        assert_eq!(
            chowla_interval(&fams, &[2, 2], &opts()).unwrap_err(),
            Error::AllEvenExponents
        );
        let single = chowla_interval(&fams[..1], &[1], &opts()).unwrap();
        assert_eq!(
            single.observed,
            mobius_interval_sum(&a, &opts()).unwrap().observed
        );

        let r = bateman_horn_count(&fams, &opts()).unwrap();
        assert_eq!(r.observed, 1);
        assert_eq!(r.main_term, Rational::new(3, 25));
        assert!(r.passed());
        assert_eq!(
            chowla_interval(&[a.clone(), a], &[1, 1], &opts()).unwrap_err(),
            Error::AssociatedFamilies(0, 1)
        );
    }

    #[test]
    fn classical_chowla() {
        let fl = f(3);
        let shifts = [Polynomial::zero(&fl), Polynomial::one(&fl)];
        let r = chowla_classical(&fl, 2, &shifts, &[1, 1], &opts()).unwrap();
        assert_eq!(r.observed, -3);
        let r = chowla_classical(&fl, 2, &shifts[..1], &[1], &opts()).unwrap();
        assert_eq!(r.observed, 0);
        assert!(chowla_classical(
            &fl,
            2,
            &[shifts[0].clone(), shifts[0].clone()],
            &[1, 1],
            &opts()
        )
        .is_err());
    }

    #[test]
    fn weil_sums() {
        let r = weil_character_sum(&f(5), &Polynomial::t(&f(5)), &opts()).unwrap();
        assert_eq!(r.observed, 0);
        assert_eq!(r.bound.as_ref().unwrap().squared, 0);
        assert!(r.passed());
        let p = Polynomial::parse(&f(3), "1,0,1").unwrap();
        let r = weil_character_sum(&f(3), &p, &opts()).unwrap();
        assert_eq!(r.observed, -1);
        assert_eq!(r.bound.as_ref().unwrap().squared, 3);
        let sq = Polynomial::parse(&f(5), "0,0,1").unwrap();
        assert_eq!(
            weil_character_sum(&f(5), &sq, &opts()).unwrap_err(),
            Error::SquareArgument
        );
    }
}
