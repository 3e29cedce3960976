//! The `fqlab` command line: one subcommand per operation or experiment.
//!
//! Polynomial literals are comma-separated coefficient codes in ascending
//! degree (`"1,0,2"` is `2t² + 1`). Lists of polynomials are separated by `;`.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use fqlab_core::experiments::{parse_q_grid, sweep, Experiment, FamilyLiterals, DEFAULT_BUDGET};
use fqlab_core::{
    factor, mobius, ExperimentReport, FieldSpec, Polynomial, QuadraticFamily, RunOptions,
};
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_BOUND: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "fqlab",
    version,
    about = "Exact experiments on prime polynomials over finite fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Describe F_q (order, modulus, character availability).
    FieldInfo,
    /// Factor --poly into monic irreducibles.
    Factor,
    /// Print μ(--poly).
    Mobius,
    /// Print the discriminant code of --poly.
    Disc,
    /// π_q(n): monic irreducibles of degree --n.
    CountPrimes,
    /// π_q(n; Q, A) with --ap-modulus Q and --ap-residue A.
    CountPrimesAp,
    /// Irreducible specializations of the family over its interval.
    IntervalPrimes,
    /// Frobenius class table of the family's specializations.
    FrobeniusDist,
    /// Factorization types over all monic polynomials of degree --n.
    TypeDist,
    /// Σ μ(f + g h²) over the interval, with its explicit bound.
    MobiusSum,
    /// Σ μ over all monic polynomials of degree --n.
    MobiusFullSum,
    /// Correlation of μ over several families sharing one interval.
    Chowla,
    /// Σ Π μ(F + α_i)^ε_i over monic F of degree --n.
    ChowlaClassical,
    /// Simultaneous irreducibility of several families.
    BatemanHorn,
    /// Σ_b χ₂(P(b)) for P = --poly, with the Weil bound.
    WeilSum,
    /// Check the quadratic-in-A₀ discriminant identity on every partial tuple.
    VerifyIdentity,
    /// Run one experiment over --q-grid.
    Sweep {
        #[arg(value_enum)]
        experiment: Option<SweepKind>,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepKind {
    CountPrimes,
    CountPrimesAp,
    IntervalPrimes,
    FrobeniusDist,
    TypeDist,
    MobiusSum,
    MobiusFullSum,
    Chowla,
    ChowlaClassical,
    BatemanHorn,
    WeilSum,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Output {
    Json,
    Csv,
}

#[derive(clap::Args, Debug, Default, Clone)]
pub struct Flags {
    #[arg(long, global = true)]
    pub p: Option<u64>,
    #[arg(long, global = true)]
    pub ext: Option<u32>,
    /// Monic irreducible modulus over F_p for the extension.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub modulus: Option<String>,
    /// `;`-separated when several families are given.
    #[arg(long, global = true)]
    pub f: Option<String>,
    #[arg(long, global = true)]
    pub g: Option<String>,
    #[arg(long, global = true)]
    pub center: Option<String>,
    #[arg(long, global = true)]
    pub m: Option<usize>,
    #[arg(long, global = true)]
    pub n: Option<usize>,
    #[arg(long, global = true)]
    pub poly: Option<String>,
    #[arg(long, global = true)]
    pub ap_modulus: Option<String>,
    #[arg(long, global = true)]
    pub ap_residue: Option<String>,
    /// Comma list of prime powers, e.g. `3,5,7,9`.
    #[arg(long, global = true)]
    pub q_grid: Option<String>,
    /// `;`-separated shift literals.
    #[arg(long, global = true)]
    pub shifts: Option<String>,
    /// Comma list of exponents in {1, 2}.
    #[arg(long, global = true)]
    pub eps: Option<String>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub output: Option<Output>,
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Flat `key = value` file mirroring the flags; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

/// A usage or precondition failure (exit 1).
#[derive(Debug)]
pub struct Failure(pub String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Res<T> = Result<T, Failure>;

fn fail<T>(msg: impl Into<String>) -> Res<T> {
    Err(Failure(msg.into()))
}

impl Flags {
    /// Fills unset flags from a `key = value` config text.
    pub fn merge_config(&mut self, text: &str) -> Res<()> {
        let mut map = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return fail(format!("config line {}: expected key = value", lineno + 1));
            };
            let v = v.trim().trim_matches('"').to_string();
            map.insert(k.trim().trim_start_matches("--").replace('_', "-"), v);
        }
        fn num<T: std::str::FromStr>(k: &str, v: &str) -> Res<T> {
            v.parse()
                .map_err(|_| Failure(format!("config key {k}: invalid value {v:?}")))
        }
        for (k, v) in map {
            match k.as_str() {
                "p" => {
                    self.p.get_or_insert(num(&k, &v)?);
                }
                "ext" => {
                    self.ext.get_or_insert(num(&k, &v)?);
                }
                "m" => {
                    self.m.get_or_insert(num(&k, &v)?);
                }
                "n" => {
                    self.n.get_or_insert(num(&k, &v)?);
                }
                "seed" => {
                    self.seed.get_or_insert(num(&k, &v)?);
                }
                "threads" => {
                    self.threads.get_or_insert(num(&k, &v)?);
                }
                "budget" => {
                    self.budget.get_or_insert(num(&k, &v)?);
                }
                "modulus" => {
                    self.modulus.get_or_insert(v);
                }
                "f" => {
                    self.f.get_or_insert(v);
                }
                "g" => {
                    self.g.get_or_insert(v);
                }
                "center" => {
                    self.center.get_or_insert(v);
                }
                "poly" => {
                    self.poly.get_or_insert(v);
                }
                "ap-modulus" => {
                    self.ap_modulus.get_or_insert(v);
                }
                "ap-residue" => {
                    self.ap_residue.get_or_insert(v);
                }
                "q-grid" => {
                    self.q_grid.get_or_insert(v);
                }
                "shifts" => {
                    self.shifts.get_or_insert(v);
                }
                "eps" => {
                    self.eps.get_or_insert(v);
                }
                "output" => {
                    let o = Output::from_str(&v, true).map_err(Failure)?;
                    self.output.get_or_insert(o);
                }
                other => return fail(format!("unknown config key {other:?}")),
            }
        }
        Ok(())
    }

    fn need<'a, T>(&'a self, v: &'a Option<T>, flag: &str) -> Res<&'a T> {
        v.as_ref()
            .ok_or_else(|| Failure(format!("missing required flag --{flag}")))
    }

    fn field(&self) -> Res<FieldSpec> {
        let p = *self.need(&self.p, "p")?;
        Ok(match (&self.modulus, self.ext) {
            (Some(lit), _) => {
                let codes = parse_codes(lit)?;
                let f = FieldSpec::with_modulus(p, &codes)?;
                if self.ext.is_some_and(|e| e != f.extension_degree()) {
                    return fail("--ext disagrees with the degree of --modulus");
                }
                f
            }
            (None, ext) => FieldSpec::new(p, ext.unwrap_or(1))?,
        })
    }

    fn opts(&self) -> RunOptions {
        RunOptions {
            seed: self.seed.unwrap_or(0),
            budget: self.budget.unwrap_or(DEFAULT_BUDGET),
        }
    }

    fn threads(&self) -> Res<usize> {
        match self.threads {
            Some(0) => fail("--threads must be positive"),
            Some(t) => Ok(t),
            None => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
        }
    }

    fn families(&self) -> Res<Vec<FamilyLiterals>> {
        let f = self.need(&self.f, "f")?;
        let g = self.need(&self.g, "g")?;
        let center = self.need(&self.center, "center")?;
        let m = *self.need(&self.m, "m")?;
        let fs: Vec<&str> = f.split(';').map(str::trim).collect();
        let gs: Vec<&str> = g.split(';').map(str::trim).collect();
        if fs.len() != gs.len() {
            return fail(format!(
                "--f lists {} families but --g lists {}",
                fs.len(),
                gs.len()
            ));
        }
        Ok(fs
            .iter()
            .zip(&gs)
            .map(|(f, g)| FamilyLiterals::new(f, g, center.trim(), m))
            .collect())
    }

    fn single_family(&self) -> Res<FamilyLiterals> {
        let mut fams = self.families()?;
        if fams.len() != 1 {
            return fail("this subcommand takes exactly one family");
        }
        Ok(fams.remove(0))
    }

    fn eps(&self, r: usize) -> Res<Vec<u8>> {
        match &self.eps {
            None => Ok(vec![1; r]),
            Some(s) => s
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u8>()
                        .map_err(|_| Failure(format!("invalid exponent {t:?}")))
                })
                .collect(),
        }
    }

    fn experiment(&self, kind: SweepKind) -> Res<Experiment> {
        let n = || self.need(&self.n, "n").copied();
        Ok(match kind {
            SweepKind::CountPrimes => Experiment::PrimeCountTotal { n: n()? },
            SweepKind::CountPrimesAp => Experiment::PrimeCountAp {
                n: n()?,
                modulus: self.need(&self.ap_modulus, "ap-modulus")?.clone(),
                residue: self.need(&self.ap_residue, "ap-residue")?.clone(),
            },
            SweepKind::IntervalPrimes => Experiment::CountPrimesInterval(self.single_family()?),
            SweepKind::FrobeniusDist => Experiment::FrobeniusDistribution(self.single_family()?),
            SweepKind::TypeDist => Experiment::TypeDistribution { n: n()? },
            SweepKind::MobiusSum => Experiment::MobiusIntervalSum(self.single_family()?),
            SweepKind::MobiusFullSum => Experiment::MobiusFullSum { n: n()? },
            SweepKind::Chowla => {
                let families = self.families()?;
                let eps = self.eps(families.len())?;
                Experiment::ChowlaInterval { families, eps }
            }
            SweepKind::ChowlaClassical => {
                let shifts: Vec<String> = self
                    .need(&self.shifts, "shifts")?
                    .split(';')
                    .map(|s| s.trim().to_string())
                    .collect();
                let eps = self.eps(shifts.len())?;
                Experiment::ChowlaClassical {
                    n: n()?,
                    shifts,
                    eps,
                }
            }
            SweepKind::BatemanHorn => Experiment::BatemanHorn {
                families: self.families()?,
            },
            SweepKind::WeilSum => Experiment::WeilSum {
                poly: self.need(&self.poly, "poly")?.clone(),
            },
        })
    }
}

fn parse_codes(lit: &str) -> Res<Vec<u64>> {
    if lit.trim().is_empty() {
        return Ok(vec![]);
    }
    lit.split(',')
        .enumerate()
        .map(|(i, t)| {
            t.trim().parse().map_err(|_| {
                Failure(format!(
                    "invalid literal: token {i} ({:?}) is not an integer",
                    t.trim()
                ))
            })
        })
        .collect()
}

fn sweep_kind(cmd: Command) -> Option<SweepKind> {
    Some(match cmd {
        Command::CountPrimes => SweepKind::CountPrimes,
        Command::CountPrimesAp => SweepKind::CountPrimesAp,
        Command::IntervalPrimes => SweepKind::IntervalPrimes,
        Command::FrobeniusDist => SweepKind::FrobeniusDist,
        Command::TypeDist => SweepKind::TypeDist,
        Command::MobiusSum => SweepKind::MobiusSum,
        Command::MobiusFullSum => SweepKind::MobiusFullSum,
        Command::Chowla => SweepKind::Chowla,
        Command::ChowlaClassical => SweepKind::ChowlaClassical,
        Command::BatemanHorn => SweepKind::BatemanHorn,
        Command::WeilSum => SweepKind::WeilSum,
        _ => return None,
    })
}

fn emit(out: &mut dyn Write, reports: &[ExperimentReport], format: Output) -> Res<()> {
    match format {
        Output::Json => {
            for r in reports {
                writeln!(out, "{}", r.to_json())?;
            }
        }
        Output::Csv => {
            writeln!(out, "{}", ExperimentReport::CSV_HEADER)?;
            for r in reports {
                writeln!(out, "{}", r.to_csv_row())?;
            }
        }
    }
    Ok(())
}

fn bound_status(reports: &[ExperimentReport], err: &mut dyn Write) -> i32 {
    let mut code = EXIT_OK;
    for r in reports {
        let failed = r.failed_assertions();
        if !failed.is_empty() {
            let _ = writeln!(
                err,
                "assertion failed: {} at q={}: {}",
                r.experiment,
                r.field.q,
                failed.join(", ")
            );
            code = EXIT_BOUND;
        }
    }
    code
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Res<i32> {
    let mut flags = cli.flags;
    if let Some(path) = flags.config.clone() {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Failure(format!("cannot read config {}: {e}", path.display())))?;
        flags.merge_config(&text)?;
    }
    let format = flags.output.unwrap_or(Output::Json);
    let poly = |field: &FieldSpec| -> Res<Polynomial> {
        Ok(Polynomial::parse(field, flags.need(&flags.poly, "poly")?)?)
    };

    match cli.command {
        Command::FieldInfo => {
            let f = flags.field()?;
            let v = json!({
                "p": f.characteristic(),
                "ext": f.extension_degree(),
                "q": f.order(),
                "modulus": f.modulus_literal(),
                "odd": f.is_odd(),
                "display": f.to_string(),
            });
            writeln!(out, "{v}")?;
            Ok(EXIT_OK)
        }
        Command::Factor => {
            let f = flags.field()?;
            let fac = factor(&poly(&f)?, flags.opts().seed)?;
            writeln!(out, "{}", serde_json::to_string(&fac)?)?;
            Ok(EXIT_OK)
        }
        Command::Mobius => {
            let f = flags.field()?;
            writeln!(out, "{}", mobius(&poly(&f)?)?)?;
            Ok(EXIT_OK)
        }
        Command::Disc => {
            let f = flags.field()?;
            writeln!(out, "{}", poly(&f)?.discriminant()?)?;
            Ok(EXIT_OK)
        }
        Command::VerifyIdentity => {
            let field = flags.field()?;
            let fams: Vec<QuadraticFamily> = flags
                .families()?
                .iter()
                .map(|l| l.build(&field))
                .collect::<Result<_, _>>()?;
            let mut code = EXIT_OK;
            for fam in &fams {
                let m = fam.interval().radius();
                let (checked, holds) = verify_all(fam, m, flags.opts().budget)?;
                writeln!(
                    out,
                    "{}",
                    json!({
                        "f": fam.f().to_literal(),
                        "g": fam.g().to_literal(),
                        "center": fam.interval().center().to_literal(),
                        "m": m,
                        "q": field.order(),
                        "checked": checked,
                        "holds": holds,
                    })
                )?;
                if !holds {
                    let _ = writeln!(err, "assertion failed: discriminant identity");
                    code = EXIT_BOUND;
                }
            }
            Ok(code)
        }
        Command::Sweep { experiment } => {
            let kind =
                experiment.ok_or_else(|| Failure("sweep needs an experiment name".into()))?;
            let exp = flags.experiment(kind)?;
            let grid = parse_q_grid(flags.need(&flags.q_grid, "q-grid")?)?;
            let outcome = sweep(&exp, &grid, flags.threads()?, &flags.opts())?;
            let mut reports = outcome.reports.clone();
            for r in &mut reports {
                let _ = writeln!(
                    err,
                    "q={} elapsed_ms={}",
                    r.field.q,
                    r.elapsed_ms.unwrap_or(0)
                );
                r.elapsed_ms = None;
            }
            emit(out, &reports, format)?;
            let code = bound_status(&reports, err);
            if let Some(fail) = outcome.failure {
                let _ = writeln!(
                    err,
                    "error: sweep stopped at q={} (grid index {}): {}; {} partial report(s) emitted",
                    fail.q,
                    fail.index,
                    fail.error,
                    reports.len()
                );
                return Ok(if code == EXIT_OK { EXIT_USAGE } else { code });
            }
            Ok(code)
        }
        cmd => {
            let kind = sweep_kind(cmd).expect("experiment subcommand");
            let exp = flags.experiment(kind)?;
            let field = flags.field()?;
            let outcome = sweep(
                &exp,
                std::slice::from_ref(&field),
                flags.threads()?,
                &flags.opts(),
            )?;
            if let Some(f) = outcome.failure {
                return Err(Failure(f.error.to_string()));
            }
            emit(out, &outcome.reports, format)?;
            Ok(bound_status(&outcome.reports, err))
        }
    }
}

/// Checks the identity on all `q^m` partial tuples `(A_1, …, A_m)`.
fn verify_all(fam: &QuadraticFamily, m: usize, budget: u64) -> Res<(u64, bool)> {
    let field = fam.field();
    let q = field.order();
    let total = (q as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if total > budget as u128 {
        return Err(fqlab_core::Error::BudgetExceeded {
            requested: total,
            cap: budget,
        }
        .into());
    }
    let mut holds = true;
    for k in 0..total as u64 {
        let mut rest = k;
        let partial: Vec<_> = (0..m)
            .map(|_| {
                let c = rest % q;
                rest /= q;
                field.element(c).expect("in range")
            })
            .collect();
        holds &= fam.verify_discriminant_identity(&partial)?;
    }
    Ok((total as u64, holds))
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}
