//! Exact arithmetic in `F_q[t]` and exhaustive experiments on prime
//! polynomials, Frobenius classes and Möbius sums for quadratic families
//! `f + g·h²` with `h` ranging over a short interval.
//!
//! The layers build on each other:
//!
//! * [`field`]: `F_q` for `q = p^ν` with a fixed polynomial-basis model.
//! * [`poly`]: dense polynomials, gcd, resultant, discriminant.
//! * [`factor`]: squarefree/distinct-degree/equal-degree factorization,
//!   Möbius function, factorization types, Cauchy's formula.
//! * [`family`]: short intervals and admissible quadratic families.
//! * [`experiments`]: exhaustive counts and sums with exact bound checks.

pub mod error;
pub mod experiments;
pub mod factor;
pub mod family;
pub mod field;
pub mod poly;

/// Exact rationals used for main terms, probabilities and deviations.
pub type Rational = num_rational::Ratio<i128>;

pub use error::{Error, Result};
pub use experiments::{
    necklace_count, sweep, Experiment, ExperimentReport, FamilyLiterals, RunOptions, SweepOutcome,
};
pub use factor::{
    cauchy_probability, euler_phi, factor, factorization_type, frobenius_class, is_irreducible,
    mobius, mobius_via_discriminant, partitions, squarefree_decomposition, Factorization,
    FactorizationType, FrobeniusClass,
};
pub use family::{check_admissible, QuadraticFamily, ShortInterval, Violation};
pub use field::{FieldElement, FieldOp, FieldSpec};
pub use poly::{Polynomial, Squareness};
