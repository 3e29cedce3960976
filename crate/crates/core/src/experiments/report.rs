use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::factor::FactorizationType;
use crate::field::FieldSpec;
use crate::Rational;

fn ser_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Frac {
        num: i128,
        den: i128,
    }
    Frac {
        num: *r.numer(),
        den: *r.denom(),
    }
    .serialize(s)
}

pub(crate) fn to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FieldInfo {
    pub p: u64,
    pub ext: u32,
    pub q: u64,
    /// Modulus literal (ascending coefficients over `F_p`).
    pub modulus: String,
}

impl From<&FieldSpec> for FieldInfo {
    fn from(f: &FieldSpec) -> Self {
        Self {
            p: f.characteristic(),
            ext: f.extension_degree(),
            q: f.order(),
            modulus: f.modulus_literal(),
        }
    }
}

/// An explicit error bound, compared in squared form: the run satisfies it
/// iff `observed² ≤ squared`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Bound {
    pub squared: i128,
    /// `sqrt(squared)`, for display only.
    pub value: f64,
    pub formula: &'static str,
}

impl Bound {
    pub fn new(squared: i128, formula: &'static str) -> Self {
        Self {
            squared,
            value: (squared as f64).sqrt(),
            formula,
        }
    }

    pub fn holds(&self, observed: i128) -> bool {
        observed
            .checked_mul(observed)
            .is_some_and(|sq| sq <= self.squared)
    }
}

/// A hard, exactly-checked property of a run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Assertion {
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassRow {
    pub class: FactorizationType,
    pub count: u64,
    #[serde(serialize_with = "ser_rational")]
    pub expected_frequency: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub expected_count: Rational,
}

/// Per-class counts against Cauchy's cycle-type probabilities.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassTable {
    pub rows: Vec<ClassRow>,
    /// Only present for interval sweeps, where `Θ` is refused for
    /// inseparable specializations.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub not_squarefree: Option<u64>,
    /// `½ Σ |count/total - P(τ)|` over the classes (and the not-squarefree
    /// bucket, whose expected frequency is zero).
    #[serde(serialize_with = "ser_rational")]
    pub total_variation: Rational,
    pub total_variation_display: f64,
}

impl ClassTable {
    pub fn count(&self, class: &FactorizationType) -> Option<u64> {
        self.rows
            .iter()
            .find(|r| &r.class == class)
            .map(|r| r.count)
    }

    pub fn total(&self) -> u64 {
        self.rows.iter().map(|r| r.count).sum::<u64>() + self.not_squarefree.unwrap_or(0)
    }
}

/// The outcome of one experiment at one field.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub experiment: &'static str,
    pub field: FieldInfo,
    /// Input parameters as literals.
    pub params: BTreeMap<&'static str, String>,
    pub observed: i128,
    #[serde(serialize_with = "ser_rational")]
    pub main_term: Rational,
    pub bound: Option<Bound>,
    /// `observed - main_term`.
    #[serde(serialize_with = "ser_rational")]
    pub deviation: Rational,
    /// `observed / main_term - 1`; absent when the main term is zero.
    pub normalized_deviation: Option<f64>,
    pub elapsed_ms: Option<u64>,
    pub seed: u64,
    pub enumerated: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<ClassTable>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<&'static str, serde_json::Value>,
    pub assertions: Vec<Assertion>,
}

impl ExperimentReport {
    pub(crate) fn new(
        experiment: &'static str,
        field: &FieldSpec,
        observed: i128,
        main_term: Rational,
        seed: u64,
        enumerated: u64,
    ) -> Self {
        let deviation = Rational::from_integer(observed) - main_term;
        let normalized_deviation =
            (*main_term.numer() != 0).then(|| to_f64(&(deviation / main_term)));
        Self {
            experiment,
            field: field.into(),
            params: BTreeMap::new(),
            observed,
            main_term,
            bound: None,
            deviation,
            normalized_deviation,
            elapsed_ms: None,
            seed,
            enumerated,
            table: None,
            details: BTreeMap::new(),
            assertions: Vec::new(),
        }
    }

    pub(crate) fn param(mut self, key: &'static str, value: impl ToString) -> Self {
        self.params.insert(key, value.to_string());
        self
    }

    pub(crate) fn detail(mut self, key: &'static str, value: impl Into<serde_json::Value>) -> Self {
        self.details.insert(key, value.into());
        self
    }

    pub(crate) fn assert(mut self, name: &'static str, holds: bool) -> Self {
        self.assertions.push(Assertion { name, holds });
        self
    }

    /// Attaches a bound and records whether the observation satisfies it.
    pub(crate) fn with_bound(mut self, bound: Bound) -> Self {
        let holds = bound.holds(self.observed);
        self.bound = Some(bound);
        self.assert("bound", holds)
    }

    /// All hard assertions hold.
    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.holds)
    }

    pub fn failed_assertions(&self) -> Vec<&'static str> {
        self.assertions
            .iter()
            .filter(|a| !a.holds)
            .map(|a| a.name)
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    pub const CSV_HEADER: &'static str =
        "experiment,q,observed,main_term_num,main_term_den,bound,deviation,elapsed_ms";

    /// One row of the CSV projection under [`ExperimentReport::CSV_HEADER`].
    /// `bound` is the squared bound.
    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.experiment,
            self.field.q,
            self.observed,
            self.main_term.numer(),
            self.main_term.denom(),
            self.bound
                .as_ref()
                .map(|b| b.squared.to_string())
                .unwrap_or_default(),
            self.deviation,
            self.elapsed_ms.map(|t| t.to_string()).unwrap_or_default(),
        )
    }
}
