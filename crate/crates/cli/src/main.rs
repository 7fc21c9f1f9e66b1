//! Command-line driver for the Ramsey formula evaluators.
//!
//! Every subcommand maps to one library operation, runs it under an
//! explicit term budget on a caller-owned worker pool, and emits exactly
//! one JSON object (or, for polynomials, optionally CSV) on standard
//! output.  Exit codes: 0 computed, 2 precondition failed (divisibility
//! hypothesis or residue class), 3 budget exceeded, 1 anything else.

mod report;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use ramsey_formulas::combinatorics::{count_ramsey_graphs, divisibility_check, Graph};
use ramsey_formulas::exact::Rational;
use ramsey_formulas::pnk::{
    count_homogeneous_subsets, count_homogeneous_subsets_by_sieve, edge_assignment_polynomial,
    edge_assignment_polynomial_naive, involution_check, ramsey_probability_from_assignment,
};
use ramsey_formulas::qnk::{
    parity_polynomial, parity_polynomial_naive, ramsey_probability_via_parity, ParitySystem,
};
use ramsey_formulas::trig::{
    compute_bivariate, eval_general_incidence, eval_general_incidence_float, eval_general_mult,
    eval_general_mult_float, eval_restricted_incidence, eval_restricted_mult, sin_product_sum,
    FormulaResult, RamseyImplication,
};
use ramsey_formulas::{Budget, Error, WorkerPool};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use report::Report;

/// Default seed for the sampling commands; fixed so runs reproduce.
const DEFAULT_SEED: u64 = 1729;

#[derive(Parser)]
#[command(
    name = "ramsey",
    version,
    about = "Exact evaluators for combinatorial sums that detect the diagonal Ramsey property"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Maximum number of terms any single enumeration may visit
    /// (default per command; RAMSEY_BUDGET overrides the default).
    #[arg(long, global = true)]
    budget: Option<u64>,

    /// Worker threads (default: available cores, capped at 8).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Seed for the sampling commands.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Output format; csv is available for polynomial results only.
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,

    /// Write shard partial sums of an exact formula evaluation here.
    #[arg(long, global = true)]
    checkpoint: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum Mode {
    #[default]
    Exact,
    Float,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum VerifyLevel {
    #[default]
    Desk,
    Extended,
}

#[derive(Subcommand)]
enum Command {
    /// Count graphs on n labeled vertices with no k-clique and no
    /// k-independent set, by exhaustive scan.
    RamseyCount {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// Signed cosine-product sum over families of k-subsets.
    FormulaMult {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Rational p/r in exact mode, decimal in float mode.
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, value_enum, default_value_t)]
        mode: Mode,
    },
    /// Signed cosine sum over graph/family pairs weighted by incidences.
    FormulaIncidence {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Rational p/r in exact mode, decimal in float mode.
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, value_enum, default_value_t)]
        mode: Mode,
    },
    /// Restricted family sum; requires (n-2)!/(k!(n-k)!) to be an integer.
    Thm21 {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// Restricted pair sum; requires (n-2)!/(k!(n-k)!) to be an integer.
    Thm22 {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// Nonnegative sine-product sum supported exactly on Ramsey graphs.
    SinProduct {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// Signed polynomial of column-strict edge assignments.
    Pnk {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Use the assignment-walking reference instead of the transform.
        #[arg(long)]
        naive: bool,
        /// Evaluate at t = 1/2 and report the Ramsey probability.
        #[arg(long)]
        probability: bool,
    },
    /// Kernel polynomial of the even-selection parity system.
    Qnk {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Enumerate the full variable cube instead of the kernel walk.
        #[arg(long)]
        naive: bool,
        /// Evaluate at tau = 1 - 2^(C(k,2)-1) and report the probability.
        #[arg(long)]
        probability: bool,
    },
    /// Compare the homogeneous-subset sieve against direct counting on
    /// seeded random graphs.
    PhiCheck {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Number of random graphs to draw.
        #[arg(long, default_value_t = 100)]
        graphs: u32,
    },
    /// Sample doubly strict assignments and test the complement involution.
    InvolutionCheck {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Report whether (n-2)!/(k!(n-k)!) is an integer, and its value.
    Divisibility {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// Joint distribution of family size and incidence count over all
    /// graph/family pairs.
    Bivariate {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// Re-derive every frozen desk-scale result and report pass/fail.
    VerifyAll {
        #[arg(long, value_enum, default_value_t)]
        level: VerifyLevel,
    },
}

/// Flags and environment resolved to concrete run settings.
struct Settings {
    budget_flag: Option<u64>,
    budget_env: Option<u64>,
    threads: usize,
    seed: u64,
    output: Output,
    checkpoint: Option<PathBuf>,
    pool: WorkerPool,
}

impl Settings {
    fn resolve(cli: &Cli) -> Result<Self, Error> {
        let budget_env = match std::env::var("RAMSEY_BUDGET") {
            Ok(s) => Some(s.parse::<u64>().map_err(|_| {
                Error::InvalidParameter(format!("RAMSEY_BUDGET is not an integer: {s:?}"))
            })?),
            Err(_) => None,
        };
        let threads = cli.threads.unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|p| p.get())
                .unwrap_or(1)
                .min(8)
        });
        if threads == 0 {
            return Err(Error::InvalidParameter("--threads must be positive".into()));
        }
        Ok(Settings {
            budget_flag: cli.budget,
            budget_env,
            threads,
            seed: cli.seed.unwrap_or(DEFAULT_SEED),
            output: cli.output,
            checkpoint: cli.checkpoint.clone(),
            pool: WorkerPool::new(threads),
        })
    }

    /// Explicit flag beats the environment override beats the command's
    /// own default.
    fn budget(&self, default: Budget) -> Result<Budget, Error> {
        match self.budget_flag.or(self.budget_env) {
            Some(terms) => Budget::new(terms),
            None => Ok(default),
        }
    }

    /// The budget actually in force for a command defaulting to `default`.
    fn budget_terms(&self, default: Budget) -> u64 {
        self.budget_flag
            .or(self.budget_env)
            .unwrap_or(default.max_terms())
    }

    fn config_json(&self, default: Budget, mode: &str) -> Value {
        json!({
            "budget": self.budget_terms(default).to_string(),
            "threads": self.threads,
            "seed": self.seed.to_string(),
            "mode": mode,
            "output": match self.output {
                Output::Json => "json",
                Output::Csv => "csv",
            },
            "checkpoint": self
                .checkpoint
                .as_ref()
                .map(|p| p.display().to_string()),
        })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let settings = match Settings::resolve(&cli) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let start = Instant::now();
    match execute(&cli.command, &settings) {
        Ok((report, default_budget, all_passed)) => {
            let elapsed = start.elapsed().as_millis();
            if settings.output == Output::Csv {
                match &report.csv {
                    Some(body) => print!("{body}"),
                    None => {
                        eprintln!("error: csv output is only available for polynomial results");
                        return ExitCode::from(1);
                    }
                }
            } else {
                let config = settings.config_json(default_budget, report.mode);
                let value = report.to_json(&config, elapsed);
                println!(
                    "{}",
                    serde_json::to_string_pretty(&value).expect("report serializes")
                );
            }
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let code = match &e {
                Error::DivisibilityHypothesis { .. } | Error::WrongResidueClass { .. } => 2,
                Error::BudgetExceeded { .. } => 3,
                _ => 1,
            };
            eprintln!("error: {e}");
            let object = json!({
                "command": command_name(&cli.command),
                "error": e.to_string(),
                "error_kind": match code {
                    2 => "precondition",
                    3 => "budget",
                    _ => "internal",
                },
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&object).expect("error serializes")
            );
            ExitCode::from(code)
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::RamseyCount { .. } => "ramsey-count",
        Command::FormulaMult { .. } => "formula-mult",
        Command::FormulaIncidence { .. } => "formula-incidence",
        Command::Thm21 { .. } => "thm21",
        Command::Thm22 { .. } => "thm22",
        Command::SinProduct { .. } => "sin-product",
        Command::Pnk { .. } => "pnk",
        Command::Qnk { .. } => "qnk",
        Command::PhiCheck { .. } => "phi-check",
        Command::InvolutionCheck { .. } => "involution-check",
        Command::Divisibility { .. } => "divisibility",
        Command::Bivariate { .. } => "bivariate",
        Command::VerifyAll { .. } => "verify-all",
    }
}

/// Parses `--q` according to the mode: `p/r` (or a plain integer) in
/// exact mode, a decimal float in float mode.  Mixing forms is an error.
fn parse_q_exact(s: &str) -> Result<Rational, Error> {
    if s.contains('.') || s.contains('e') || s.contains('E') {
        return Err(Error::InvalidParameter(format!(
            "exact mode needs --q as a rational p/r, got the decimal {s:?}; \
             use --mode float for decimals"
        )));
    }
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let parse = |part: &str| {
        part.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::InvalidParameter(format!("cannot parse {part:?} in --q {s:?}")))
    };
    let d = parse(den)?;
    if d.is_zero() {
        return Err(Error::InvalidParameter("--q has denominator zero".into()));
    }
    Ok(Rational::new(parse(num)?, d))
}

fn parse_q_float(s: &str) -> Result<f64, Error> {
    if s.contains('/') {
        return Err(Error::InvalidParameter(format!(
            "float mode needs --q as a decimal, got the rational {s:?}; \
             use --mode exact for rationals"
        )));
    }
    s.trim()
        .parse::<f64>()
        .map_err(|_| Error::InvalidParameter(format!("cannot parse --q {s:?} as a decimal")))
}

fn write_checkpoint(
    settings: &Settings,
    command: &'static str,
    n: u32,
    k: u32,
    result: &FormulaResult,
) -> Result<(), Error> {
    if let Some(path) = &settings.checkpoint {
        let payload = report::checkpoint_json(command, n, k, result);
        let mut body = serde_json::to_string_pretty(&payload).expect("checkpoint serializes");
        body.push('\n');
        std::fs::write(path, body)?;
    }
    Ok(())
}

fn implication_of(count_is_zero: bool) -> String {
    if count_is_zero {
        RamseyImplication::AtLeast.to_string()
    } else {
        RamseyImplication::Below.to_string()
    }
}

type Outcome = (Report, Budget, bool);

fn execute(command: &Command, settings: &Settings) -> Result<Outcome, Error> {
    match command {
        Command::RamseyCount { n, k } => {
            let default = Budget::count_default();
            let count = count_ramsey_graphs(*n, *k, settings.budget(default)?, &settings.pool)?;
            let report = Report {
                command: "ramsey-count",
                n: Some(*n),
                k: Some(*k),
                params: json!({}),
                result: json!({ "kind": "integer", "value": count.to_string() }),
                is_zero: Some(count == 0),
                implies: Some(implication_of(count == 0)),
                terms: Some(1u64 << (*n * (*n - 1) / 2)),
                mode: "exact",
                csv: None,
            };
            Ok((report, default, true))
        }
        Command::FormulaMult { n, k, q, m, mode } => {
            let default = Budget::trig_default();
            let budget = settings.budget(default)?;
            let (result, mode_name) = match mode {
                Mode::Exact => (
                    eval_general_mult(*n, *k, &parse_q_exact(q)?, *m, budget, &settings.pool)?,
                    "exact",
                ),
                Mode::Float => (
                    eval_general_mult_float(*n, *k, parse_q_float(q)?, *m, budget, &settings.pool)?,
                    "float",
                ),
            };
            write_checkpoint(settings, "formula-mult", *n, *k, &result)?;
            let report = Report {
                command: "formula-mult",
                n: Some(*n),
                k: Some(*k),
                params: json!({ "q": q, "m": m }),
                result: report::formula_json(&result),
                is_zero: Some(result.is_zero),
                implies: Some(result.implied.to_string()),
                terms: Some(result.terms_evaluated),
                mode: mode_name,
                csv: None,
            };
            Ok((report, default, true))
        }
        Command::FormulaIncidence { n, k, q, m, mode } => {
            let default = Budget::trig_default();
            let budget = settings.budget(default)?;
            let (result, mode_name) = match mode {
                Mode::Exact => (
                    eval_general_incidence(*n, *k, &parse_q_exact(q)?, *m, budget, &settings.pool)?,
                    "exact",
                ),
                Mode::Float => (
                    eval_general_incidence_float(
                        *n,
                        *k,
                        parse_q_float(q)?,
                        *m,
                        budget,
                        &settings.pool,
                    )?,
                    "float",
                ),
            };
            write_checkpoint(settings, "formula-incidence", *n, *k, &result)?;
            let report = Report {
                command: "formula-incidence",
                n: Some(*n),
                k: Some(*k),
                params: json!({ "q": q, "m": m }),
                result: report::formula_json(&result),
                is_zero: Some(result.is_zero),
                implies: Some(result.implied.to_string()),
                terms: Some(result.terms_evaluated),
                mode: mode_name,
                csv: None,
            };
            Ok((report, default, true))
        }
        Command::Thm21 { n, k } => {
            let default = Budget::trig_default();
            let restricted =
                eval_restricted_mult(*n, *k, settings.budget(default)?, &settings.pool)?;
            write_checkpoint(settings, "thm21", *n, *k, &restricted.formula)?;
            let report = Report {
                command: "thm21",
                n: Some(*n),
                k: Some(*k),
                params: json!({ "q": "-1/2", "m": 1 }),
                result: report::restricted_json(&restricted),
                is_zero: Some(restricted.formula.is_zero),
                implies: Some(restricted.formula.implied.to_string()),
                terms: Some(restricted.formula.terms_evaluated),
                mode: "exact",
                csv: None,
            };
            Ok((report, default, true))
        }
        Command::Thm22 { n, k } => {
            let default = Budget::trig_default();
            let restricted =
                eval_restricted_incidence(*n, *k, settings.budget(default)?, &settings.pool)?;
            write_checkpoint(settings, "thm22", *n, *k, &restricted.formula)?;
            let report = Report {
                command: "thm22",
                n: Some(*n),
                k: Some(*k),
                params: json!({ "q": "-1/2", "m": 1 }),
                result: report::restricted_json(&restricted),
                is_zero: Some(restricted.formula.is_zero),
                implies: Some(restricted.formula.implied.to_string()),
                terms: Some(restricted.formula.terms_evaluated),
                mode: "exact",
                csv: None,
            };
            Ok((report, default, true))
        }
        Command::SinProduct { n, k } => {
            let default = Budget::trig_default();
            let result = sin_product_sum(*n, *k, settings.budget(default)?, &settings.pool)?;
            write_checkpoint(settings, "sin-product", *n, *k, &result)?;
            let report = Report {
                command: "sin-product",
                n: Some(*n),
                k: Some(*k),
                params: json!({}),
                result: report::formula_json(&result),
                is_zero: Some(result.is_zero),
                implies: Some(result.implied.to_string()),
                terms: Some(result.terms_evaluated),
                mode: "exact",
                csv: None,
            };
            Ok((report, default, true))
        }
        Command::Pnk {
            n,
            k,
            naive,
            probability,
        } => {
            let default = Budget::count_default();
            if *probability {
                let prob = ramsey_probability_from_assignment(
                    *n,
                    *k,
                    settings.budget(default)?,
                    &settings.pool,
                )?;
                let is_zero = prob.numer().is_zero();
                let report = Report {
                    command: "pnk",
                    n: Some(*n),
                    k: Some(*k),
                    params: json!({ "naive": naive, "probability": true }),
                    result: report::rational_json(&prob),
                    is_zero: Some(is_zero),
                    implies: Some(implication_of(is_zero)),
                    terms: None,
                    mode: "exact",
                    csv: None,
                };
                return Ok((report, default, true));
            }
            let poly = if *naive {
                edge_assignment_polynomial_naive(*n, *k)?
            } else {
                edge_assignment_polynomial(*n, *k, settings.budget(default)?, &settings.pool)?
            };
            let is_zero = poly.is_zero();
            let report = Report {
                command: "pnk",
                n: Some(*n),
                k: Some(*k),
                params: json!({ "naive": naive, "probability": false }),
                result: report::polynomial_json(&poly),
                is_zero: Some(is_zero),
                implies: is_zero.then(|| RamseyImplication::AtLeast.to_string()),
                terms: None,
                mode: "exact",
                csv: Some(report::polynomial_csv(&poly)),
            };
            Ok((report, default, true))
        }
        Command::Qnk {
            n,
            k,
            naive,
            probability,
        } => {
            let default = Budget::walk_default();
            if *probability {
                let prob = ramsey_probability_via_parity(
                    *n,
                    *k,
                    settings.budget(default)?,
                    &settings.pool,
                )?;
                let is_zero = prob.numer().is_zero();
                let report = Report {
                    command: "qnk",
                    n: Some(*n),
                    k: Some(*k),
                    params: json!({ "naive": naive, "probability": true }),
                    result: report::rational_json(&prob),
                    is_zero: Some(is_zero),
                    implies: Some(implication_of(is_zero)),
                    terms: None,
                    mode: "exact",
                    csv: None,
                };
                return Ok((report, default, true));
            }
            let poly = if *naive {
                parity_polynomial_naive(*n, *k)?
            } else {
                parity_polynomial(*n, *k, settings.budget(default)?, &settings.pool)?
            };
            let sys = ParitySystem::new(*n, *k)?;
            let mut result = report::polynomial_json(&poly);
            let object = result.as_object_mut().expect("polynomial object");
            object.insert("kernel_dimension".into(), json!(sys.nullity()));
            object.insert("rank".into(), json!(sys.rank()));
            object.insert("variables".into(), json!(sys.vars()));
            let report = Report {
                command: "qnk",
                n: Some(*n),
                k: Some(*k),
                params: json!({ "naive": naive, "probability": false }),
                result,
                is_zero: Some(poly.is_zero()),
                implies: None,
                terms: Some(1u64 << sys.nullity()),
                mode: "exact",
                csv: Some(report::polynomial_csv(&poly)),
            };
            Ok((report, default, true))
        }
        Command::PhiCheck { n, k, graphs } => {
            let default = Budget::count_default();
            let mut rng = ChaCha8Rng::seed_from_u64(settings.seed);
            let mut first_mismatch = None;
            let mut checked = 0u32;
            for _ in 0..*graphs {
                let g = Graph::random(*n, &mut rng);
                let direct = count_homogeneous_subsets(&g, *k)?;
                let sieve = count_homogeneous_subsets_by_sieve(&g, *k)?;
                checked += 1;
                if sieve != direct as i64 && first_mismatch.is_none() {
                    first_mismatch = Some(json!({
                        "graph_code": g.code().map(|c| c.to_string()),
                        "direct": direct.to_string(),
                        "sieve": sieve.to_string(),
                    }));
                }
            }
            let all_match = first_mismatch.is_none();
            let report = Report {
                command: "phi-check",
                n: Some(*n),
                k: Some(*k),
                params: json!({ "graphs": graphs, "seed": settings.seed.to_string() }),
                result: json!({
                    "kind": "agreement",
                    "checked": checked,
                    "all_match": all_match,
                    "first_mismatch": first_mismatch,
                }),
                is_zero: None,
                implies: None,
                terms: None,
                mode: "exact",
                csv: None,
            };
            Ok((report, default, all_match))
        }
        Command::InvolutionCheck { n, k, samples } => {
            let default = Budget::count_default();
            let r = involution_check(*n, *k, *samples, settings.seed)?;
            let healthy = r.closed_under_complement && r.involutive;
            let report = Report {
                command: "involution-check",
                n: Some(*n),
                k: Some(*k),
                params: json!({ "samples": samples, "seed": settings.seed.to_string() }),
                result: json!({
                    "kind": "involution",
                    "samples": r.samples,
                    "total_slots": r.total_slots,
                    "closed_under_complement": r.closed_under_complement,
                    "involutive": r.involutive,
                    "all_signs_reversed": r.all_signs_reversed,
                    "all_signs_preserved": r.all_signs_preserved,
                }),
                is_zero: None,
                implies: None,
                terms: None,
                mode: "exact",
                csv: None,
            };
            Ok((report, default, healthy))
        }
        Command::Divisibility { n, k } => {
            let default = Budget::count_default();
            let r = divisibility_check(*n, *k)?;
            let report = Report {
                command: "divisibility",
                n: Some(*n),
                k: Some(*k),
                params: json!({}),
                result: json!({
                    "kind": "divisibility",
                    "divisible": r.divisible,
                    "quotient": r.quotient.as_ref().map(|q| q.to_string()),
                }),
                is_zero: None,
                implies: None,
                terms: None,
                mode: "exact",
                csv: None,
            };
            Ok((report, default, true))
        }
        Command::Bivariate { n, k } => {
            let default = Budget::trig_default();
            let poly = compute_bivariate(*n, *k, settings.budget(default)?, &settings.pool)?;
            let report = Report {
                command: "bivariate",
                n: Some(*n),
                k: Some(*k),
                params: json!({}),
                result: report::bivariate_json(&poly),
                is_zero: Some(poly.is_zero()),
                implies: None,
                terms: None,
                mode: "exact",
                csv: Some(report::bivariate_csv(&poly)),
            };
            Ok((report, default, true))
        }
        Command::VerifyAll { level } => {
            let default = Budget::count_default();
            let verify_level = match level {
                VerifyLevel::Desk => verify::Level::Desk,
                VerifyLevel::Extended => verify::Level::Extended,
            };
            let budget_override = match settings.budget_flag.or(settings.budget_env) {
                Some(terms) => Some(Budget::new(terms)?),
                None => None,
            };
            let items = verify::run_suite(
                verify_level,
                budget_override,
                settings.pool,
                settings.seed,
            );
            let all_passed = items.iter().all(|c| c.passed);
            let width = items.iter().map(|c| c.name.len()).max().unwrap_or(0);
            eprintln!("{:<width$}  result", "criterion");
            for c in &items {
                eprintln!("{:<width$}  {}", c.name, if c.passed { "pass" } else { "FAIL" });
            }
            let criteria: Vec<Value> = items
                .iter()
                .map(|c| {
                    json!({
                        "name": c.name,
                        "passed": c.passed,
                        "details": c.details,
                    })
                })
                .collect();
            let report = Report {
                command: "verify-all",
                n: None,
                k: None,
                params: json!({
                    "level": match level {
                        VerifyLevel::Desk => "desk",
                        VerifyLevel::Extended => "extended",
                    }
                }),
                result: json!({
                    "kind": "verification",
                    "all_passed": all_passed,
                    "criteria": criteria,
                }),
                is_zero: None,
                implies: None,
                terms: None,
                mode: "exact",
                csv: None,
            };
            Ok((report, default, all_passed))
        }
    }
}
