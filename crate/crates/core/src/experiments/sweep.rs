use rayon::ThreadPoolBuilder;

use super::*;

/// Literal form of a quadratic family, re-parsed at every field of a sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyLiterals {
    pub f: String,
    pub g: String,
    pub center: String,
    pub m: usize,
}

impl FamilyLiterals {
    pub fn new(f: &str, g: &str, center: &str, m: usize) -> Self {
        Self {
            f: f.into(),
            g: g.into(),
            center: center.into(),
            m,
        }
    }

    pub fn build(&self, field: &FieldSpec) -> Result<QuadraticFamily> {
        QuadraticFamily::parse(field, &self.f, &self.g, &self.center, self.m)
    }
}

/// A field-independent experiment description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Experiment {
    PrimeCountTotal {
        n: usize,
    },
    PrimeCountAp {
        n: usize,
        modulus: String,
        residue: String,
    },
    CountPrimesInterval(FamilyLiterals),
    FrobeniusDistribution(FamilyLiterals),
    TypeDistribution {
        n: usize,
    },
    MobiusFullSum {
        n: usize,
    },
    MobiusIntervalSum(FamilyLiterals),
    ChowlaInterval {
        families: Vec<FamilyLiterals>,
        eps: Vec<u8>,
    },
    ChowlaClassical {
        n: usize,
        shifts: Vec<String>,
        eps: Vec<u8>,
    },
    BatemanHorn {
        families: Vec<FamilyLiterals>,
    },
    WeilSum {
        poly: String,
    },
}

impl Experiment {
    pub fn name(&self) -> &'static str {
        match self {
            Experiment::PrimeCountTotal { .. } => "prime_count_total",
            Experiment::PrimeCountAp { .. } => "prime_count_ap",
            Experiment::CountPrimesInterval(_) => "count_primes_interval",
            Experiment::FrobeniusDistribution(_) => "frobenius_distribution",
            Experiment::TypeDistribution { .. } => "type_distribution_mn",
            Experiment::MobiusFullSum { .. } => "mobius_full_sum",
            Experiment::MobiusIntervalSum(_) => "mobius_interval_sum",
            Experiment::ChowlaInterval { .. } => "chowla_interval",
            Experiment::ChowlaClassical { .. } => "chowla_classical",
            Experiment::BatemanHorn { .. } => "bateman_horn_count",
            Experiment::WeilSum { .. } => "weil_character_sum",
        }
    }

    /// Builds the inputs over `field` and runs on the current rayon pool.
    pub fn run(&self, field: &FieldSpec, opts: &RunOptions) -> Result<ExperimentReport> {
        let poly = |s: &str| Polynomial::parse(field, s);
        let fams =
            |v: &[FamilyLiterals]| v.iter().map(|l| l.build(field)).collect::<Result<Vec<_>>>();
        match self {
            Experiment::PrimeCountTotal { n } => prime_count_total(field, *n, opts),
            Experiment::PrimeCountAp {
                n,
                modulus,
                residue,
            } => prime_count_ap(field, *n, &poly(modulus)?, &poly(residue)?, opts),
            Experiment::CountPrimesInterval(l) => count_primes_interval(&l.build(field)?, opts),
            Experiment::FrobeniusDistribution(l) => frobenius_distribution(&l.build(field)?, opts),
            Experiment::TypeDistribution { n } => type_distribution_mn(field, *n, opts),
            Experiment::MobiusFullSum { n } => mobius_full_sum(field, *n, opts),
            Experiment::MobiusIntervalSum(l) => mobius_interval_sum(&l.build(field)?, opts),
            Experiment::ChowlaInterval { families, eps } => {
                chowla_interval(&fams(families)?, eps, opts)
            }
            Experiment::ChowlaClassical { n, shifts, eps } => {
                let shifts = shifts.iter().map(|s| poly(s)).collect::<Result<Vec<_>>>()?;
                chowla_classical(field, *n, &shifts, eps, opts)
            }
            Experiment::BatemanHorn { families } => bateman_horn_count(&fams(families)?, opts),
            Experiment::WeilSum { poly: p } => weil_character_sum(field, &poly(p)?, opts),
        }
    }
}

/// Parses a grid such as `"3,5,7,9"` (each entry a prime power).
pub fn parse_q_grid(grid: &str) -> Result<Vec<FieldSpec>> {
    grid.split(',')
        .enumerate()
        .map(|(position, tok)| {
            let tok = tok.trim();
            let q: u64 = tok.parse().map_err(|_| Error::BadLiteral {
                position,
                token: tok.to_string(),
                reason: "not an integer",
            })?;
            FieldSpec::from_order(q)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepFailure {
    /// Index of the failing grid point.
    pub index: usize,
    pub q: u64,
    pub error: Error,
}

/// Reports in grid order; `failure` marks a sweep cut short, in which case
/// `reports` holds only the points before it.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepOutcome {
    pub reports: Vec<ExperimentReport>,
    pub failure: Option<SweepFailure>,
}

impl SweepOutcome {
    pub fn is_partial(&self) -> bool {
        self.failure.is_some()
    }
}

/// Runs `experiment` at every field of `grid` on a dedicated pool of
/// `threads` workers. Output is independent of `threads`.
pub fn sweep(
    experiment: &Experiment,
    grid: &[FieldSpec],
    threads: usize,
    opts: &RunOptions,
) -> Result<SweepOutcome> {
    if threads == 0 {
        return Err(Error::InvalidArgument(
            "thread count must be positive".into(),
        ));
    }
    let pool = ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot build thread pool: {e}")))?;
    pool.install(|| {
        let mut reports = Vec::with_capacity(grid.len());
        for (index, field) in grid.iter().enumerate() {
            match experiment.run(field, opts) {
                Ok(r) => reports.push(r),
                Err(error) => {
                    return Ok(SweepOutcome {
                        reports,
                        failure: Some(SweepFailure {
                            index,
                            q: field.order(),
                            error,
                        }),
                    })
                }
            }
        }
        Ok(SweepOutcome {
            reports,
            failure: None,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_sum_sweep() {
        let grid = parse_q_grid("3,5,7").unwrap();
        let out = sweep(
            &Experiment::MobiusFullSum { n: 2 },
            &grid,
            2,
            &RunOptions::default(),
        )
        .unwrap();
        assert!(!out.is_partial());
        let obs: Vec<i128> = out.reports.iter().map(|r| r.observed).collect();
        assert_eq!(obs, [0, 0, 0]);
    }

    #[test]
    fn thread_count_independent() {
        let grid = parse_q_grid("3,5,7").unwrap();
        let exp = Experiment::FrobeniusDistribution(FamilyLiterals::new("1", "0,1", "0,0,1", 1));
        let run = |t| {
            let mut out = sweep(&exp, &grid, t, &RunOptions::default()).unwrap();
            for r in &mut out.reports {
                r.elapsed_ms = None;
            }
            out.reports.iter().map(|r| r.to_json()).collect::<Vec<_>>()
        };
        assert_eq!(run(1), run(4));
    }

    #[test]
    fn partial_on_failure() {
        let grid = parse_q_grid("3,4,5").unwrap();
        let exp = Experiment::MobiusIntervalSum(FamilyLiterals::new("1", "0,1", "0,0,1", 0));
        let out = sweep(&exp, &grid, 1, &RunOptions::default()).unwrap();
        assert_eq!(out.reports.len(), 1);
        assert_eq!(out.failure.as_ref().unwrap().q, 4);
    }

    #[test]
    fn grid_literals() {
        assert!(parse_q_grid("3,x").is_err());
        assert!(parse_q_grid("6").is_err());
        assert_eq!(parse_q_grid("9").unwrap()[0].order(), 9);
    }
}
