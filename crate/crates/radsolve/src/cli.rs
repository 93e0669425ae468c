//! The `radsolve` command line: solve single equations, sweep a parameter
//! over a rational grid, and cross-check the solver against the numeric
//! oracle.
//!
//! Exit codes: 0 success, 1 internal failure, 2 syntax error, 3 unsupported
//! equation form, 4 oracle/solver disagreement.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{AlgebraicReal, Rational, Sign};
use crate::equation::{bind_parameters, normalize, parse, Bindings, RadicalEquation};
use crate::oracle::{self, OracleVerdict};
use crate::realset::RealSet;
use crate::report::{self, Mode};
use crate::solver::{analyze, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_SYNTAX: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_DISAGREEMENT: i32 = 4;

#[derive(Parser)]
#[command(
    name = "radsolve",
    version,
    about = "Exact solver for radical equations of depth <= 2 over the rationals",
    long_about = "Solves radical equations such as sqrt(x+1)+sqrt(x-1)=sqrt(x+2) exactly.\n\
                  Extraneous candidates are rejected by inequality restrictions rather than\n\
                  substitution; strong solutions (all radicands nonnegative) are\n\
                  distinguished from formal solutions (radicals of negative reals allowed\n\
                  to be imaginary)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Strong,
    Formal,
    Both,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Strong => Mode::Strong,
            ModeArg::Formal => Mode::Formal,
            ModeArg::Both => Mode::Both,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveFormat {
    Json,
    Text,
    Steps,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a single radical equation.
    Solve {
        /// Equation text, e.g. "sqrt(x+1)+sqrt(x-1)=sqrt(x+2)"
        equation: String,
        /// Which solution sets to report.
        #[arg(long, value_enum, default_value = "both")]
        mode: ModeArg,
        /// Output format.
        #[arg(long, value_enum, default_value = "text")]
        format: SolveFormat,
    },
    /// Instantiate a parametric template over a rational grid and classify
    /// every grid point.
    Sweep {
        /// Equation template with parameter identifiers, e.g.
        /// "sqrt(x+a)+sqrt(x-a)=sqrt(x+b)"
        #[arg(long)]
        template: String,
        /// Fixed parameter bindings, e.g. --bind a=1 (repeatable).
        #[arg(long = "bind", value_name = "NAME=VALUE", allow_hyphen_values = true)]
        bindings: Vec<String>,
        /// Name of the swept parameter.
        #[arg(long = "sweep", value_name = "NAME")]
        sweep_param: String,
        /// Grid start (rational, e.g. -3 or 1/20).
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        /// Grid end (inclusive).
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        /// Grid step (positive rational).
        #[arg(long)]
        step: String,
        #[arg(long, value_enum, default_value = "json")]
        format: SweepFormat,
    },
    /// Solve, then cross-check every verdict against the numeric oracle.
    Verify {
        equation: String,
        /// Number of grid points for the residual scan over [-50, 50].
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        /// Seed for sampling interval components.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Inject a bogus candidate before verification (regression hook for
        /// the disagreement path).
        #[arg(long, hide = true)]
        corrupt_report: bool,
    },
}

/// Entry point; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match cli.command {
        Command::Solve {
            equation,
            mode,
            format,
        } => cmd_solve(&equation, mode.into(), format),
        Command::Sweep {
            template,
            bindings,
            sweep_param,
            from,
            to,
            step,
            format,
        } => cmd_sweep(
            &template,
            &bindings,
            &sweep_param,
            &from,
            &to,
            &step,
            format,
        ),
        Command::Verify {
            equation,
            samples,
            seed,
            corrupt_report,
        } => cmd_verify(&equation, samples, seed, corrupt_report),
    }
}

fn parse_and_normalize(equation: &str) -> Result<RadicalEquation, i32> {
    let (lhs, rhs) = match parse(equation) {
        Ok(sides) => sides,
        Err(e) => {
            eprintln!("{e}");
            return Err(EXIT_SYNTAX);
        }
    };
    match normalize(&lhs, &rhs) {
        Ok(eq) => Ok(eq),
        Err(e) => {
            eprintln!("{e}");
            Err(EXIT_UNSUPPORTED)
        }
    }
}

fn cmd_solve(equation: &str, mode: Mode, format: SolveFormat) -> i32 {
    let eq = match parse_and_normalize(equation) {
        Ok(eq) => eq,
        Err(code) => return code,
    };
    let analysis = analyze(&eq);
    let out = match format {
        SolveFormat::Json => report::render_json(&analysis.report, mode),
        SolveFormat::Text => report::render_text(&analysis, mode),
        SolveFormat::Steps => report::render_steps(&analysis, mode),
    };
    print!("{out}");
    EXIT_OK
}

/// Parses a rational literal: integer, `p/q`, or decimal, optionally signed.
pub fn parse_rational_literal(text: &str) -> Result<Rational, String> {
    let expr = crate::equation::parse_expr(text.trim()).map_err(|e| e.to_string())?;
    fn fold(e: &crate::equation::Expr) -> Option<Rational> {
        match e {
            crate::equation::Expr::Number(n) => Some(n.clone()),
            crate::equation::Expr::Neg(inner) => fold(inner).map(|v| -v),
            _ => None,
        }
    }
    fold(&expr).ok_or_else(|| format!("`{text}` is not a rational literal"))
}

#[derive(Debug, Clone, Serialize)]
struct SweepCandidate {
    approx: String,
    verdict: &'static str,
}

#[derive(Debug, Clone, Serialize)]
struct SweepRow {
    param: String,
    degenerate: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    candidates: Vec<SweepCandidate>,
    strong_count: usize,
    formal_only_count: usize,
    strong_has_intervals: bool,
    formal_has_intervals: bool,
}

impl SweepRow {
    /// Classification signature used to group rows into regions.
    fn signature(&self) -> String {
        if self.degenerate {
            return "degenerate".to_string();
        }
        let verdicts: Vec<&str> = self.candidates.iter().map(|c| c.verdict).collect();
        let mut sig = if verdicts.is_empty() {
            "no-candidates".to_string()
        } else {
            verdicts.join("+")
        };
        if self.strong_has_intervals {
            sig.push_str(";strong-intervals");
        }
        if self.formal_has_intervals {
            sig.push_str(";formal-intervals");
        }
        sig
    }
}

#[derive(Debug, Clone, Serialize)]
struct SweepRegion {
    from: String,
    to: String,
    rows: usize,
    signature: String,
}

#[derive(Debug, Clone, Serialize)]
struct SweepOutput {
    template: String,
    bindings: std::collections::BTreeMap<String, String>,
    sweep_param: String,
    from: String,
    to: String,
    step: String,
    rows: Vec<SweepRow>,
    regions: Vec<SweepRegion>,
}

fn sweep_row(
    lhs: &crate::equation::Expr,
    rhs: &crate::equation::Expr,
    bindings: &Bindings,
    sweep_param: &str,
    value: &Rational,
) -> SweepRow {
    let mut all = bindings.clone();
    all.insert(sweep_param.to_string(), value.clone());
    let param = value.to_string();
    let instantiate = || -> Result<RadicalEquation, String> {
        let lhs = bind_parameters(lhs, &all).map_err(|e| e.to_string())?;
        let rhs = bind_parameters(rhs, &all).map_err(|e| e.to_string())?;
        normalize(&lhs, &rhs).map_err(|e| e.to_string())
    };
    match instantiate() {
        Err(reason) => SweepRow {
            param,
            degenerate: true,
            reason: Some(reason),
            candidates: vec![],
            strong_count: 0,
            formal_only_count: 0,
            strong_has_intervals: false,
            formal_has_intervals: false,
        },
        Ok(eq) => {
            let report = crate::solver::solve(&eq);
            let candidates: Vec<SweepCandidate> = report
                .candidates
                .iter()
                .map(|c| SweepCandidate {
                    approx: c.approx.clone(),
                    verdict: c.verdict.id(),
                })
                .collect();
            SweepRow {
                param,
                degenerate: false,
                reason: None,
                strong_count: report
                    .candidates
                    .iter()
                    .filter(|c| c.verdict == Verdict::Strong)
                    .count(),
                formal_only_count: report
                    .candidates
                    .iter()
                    .filter(|c| c.verdict == Verdict::FormalOnly)
                    .count(),
                strong_has_intervals: report.strong.has_interval_component(),
                formal_has_intervals: report.formal.has_interval_component(),
                candidates,
            }
        }
    }
}

fn sweep_threads(rows: usize) -> usize {
    let cap = std::env::var("RADSOLVE_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n >= 1);
    let available = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    cap.unwrap_or_else(|| available.min(8)).min(rows.max(1))
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    template: &str,
    binding_args: &[String],
    sweep_param: &str,
    from: &str,
    to: &str,
    step: &str,
    format: SweepFormat,
) -> i32 {
    let (lhs, rhs) = match parse(template) {
        Ok(sides) => sides,
        Err(e) => {
            eprintln!("{e}");
            return EXIT_SYNTAX;
        }
    };
    let mut bindings = Bindings::new();
    for b in binding_args {
        let Some((name, value)) = b.split_once('=') else {
            eprintln!("invalid binding `{b}`: expected NAME=VALUE");
            return EXIT_SYNTAX;
        };
        match parse_rational_literal(value) {
            Ok(v) => {
                bindings.insert(name.trim().to_string(), v);
            }
            Err(e) => {
                eprintln!("invalid binding `{b}`: {e}");
                return EXIT_SYNTAX;
            }
        }
    }
    let (from_r, to_r, step_r) = match (
        parse_rational_literal(from),
        parse_rational_literal(to),
        parse_rational_literal(step),
    ) {
        (Ok(a), Ok(b), Ok(c)) => (a, b, c),
        (a, b, c) => {
            for e in [a.err(), b.err(), c.err()].into_iter().flatten() {
                eprintln!("{e}");
            }
            return EXIT_SYNTAX;
        }
    };
    if Sign::of_rational(&step_r) != Sign::Positive || from_r > to_r {
        eprintln!("sweep grid requires step > 0 and from <= to");
        return EXIT_SYNTAX;
    }
    // check all template parameters are bound or swept
    let mut params: Vec<String> = lhs.parameters();
    params.extend(rhs.parameters());
    params.sort();
    params.dedup();
    for p in &params {
        if p != sweep_param && !bindings.contains_key(p) {
            eprintln!("unbound parameter `{p}`; supply --bind {p}=VALUE");
            return EXIT_UNSUPPORTED;
        }
    }

    // grid values from..=to
    let mut grid: Vec<Rational> = Vec::new();
    let mut v = from_r.clone();
    while v <= to_r {
        grid.push(v.clone());
        v += &step_r;
    }

    let threads = sweep_threads(grid.len());
    let rows: Vec<SweepRow> = if threads <= 1 {
        grid.iter()
            .map(|value| sweep_row(&lhs, &rhs, &bindings, sweep_param, value))
            .collect()
    } else {
        let chunk = grid.len().div_ceil(threads);
        let mut rows: Vec<Option<SweepRow>> = vec![None; grid.len()];
        let slots: Vec<(usize, &[Rational])> = grid
            .chunks(chunk)
            .enumerate()
            .map(|(i, c)| (i * chunk, c))
            .collect();
        std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for (start, values) in slots {
                let lhs = &lhs;
                let rhs = &rhs;
                let bindings = &bindings;
                handles.push(scope.spawn(move || {
                    values
                        .iter()
                        .enumerate()
                        .map(|(k, value)| {
                            (start + k, sweep_row(lhs, rhs, bindings, sweep_param, value))
                        })
                        .collect::<Vec<_>>()
                }));
            }
            for h in handles {
                for (idx, row) in h.join().expect("sweep worker panicked") {
                    rows[idx] = Some(row);
                }
            }
        });
        rows.into_iter()
            .map(|r| r.expect("all rows computed"))
            .collect()
    };

    // maximal runs of equal signatures
    let mut regions: Vec<SweepRegion> = Vec::new();
    for row in &rows {
        let sig = row.signature();
        match regions.last_mut() {
            Some(last) if last.signature == sig => {
                last.to = row.param.clone();
                last.rows += 1;
            }
            _ => regions.push(SweepRegion {
                from: row.param.clone(),
                to: row.param.clone(),
                rows: 1,
                signature: sig,
            }),
        }
    }

    let output = SweepOutput {
        template: template.to_string(),
        bindings: bindings
            .iter()
            .map(|(k, v)| (k.clone(), v.to_string()))
            .collect(),
        sweep_param: sweep_param.to_string(),
        from: from_r.to_string(),
        to: to_r.to_string(),
        step: step_r.to_string(),
        rows,
        regions,
    };
    match format {
        SweepFormat::Json => {
            let mut s = serde_json::to_string_pretty(&output).expect("sweep serialization");
            s.push('\n');
            print!("{s}");
        }
        SweepFormat::Csv => print!("{}", sweep_csv(&output)),
    }
    EXIT_OK
}

fn sweep_csv(out: &SweepOutput) -> String {
    let mut s = String::new();
    s.push_str("param,degenerate,candidates,verdicts,strong_count,formal_only_count,strong_has_intervals,formal_has_intervals\n");
    for row in &out.rows {
        let approxes: Vec<&str> = row.candidates.iter().map(|c| c.approx.as_str()).collect();
        let verdicts: Vec<&str> = row.candidates.iter().map(|c| c.verdict).collect();
        s.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            row.param,
            row.degenerate,
            approxes.join(" "),
            verdicts.join(" "),
            row.strong_count,
            row.formal_only_count,
            row.strong_has_intervals,
            row.formal_has_intervals,
        ));
    }
    s.push_str("region_from,region_to,rows,signature\n");
    for r in &out.regions {
        s.push_str(&format!("{},{},{},{}\n", r.from, r.to, r.rows, r.signature));
    }
    s
}

/// Approximate containment of `x` in a set, with tolerance.
fn set_contains_f64(set: &RealSet, x: f64, tol: f64) -> bool {
    set.components().iter().any(|c| {
        let lo_ok = match c.lo() {
            None => true,
            Some(v) => x >= v.approx_f64() - tol,
        };
        let hi_ok = match c.hi() {
            None => true,
            Some(v) => x <= v.approx_f64() + tol,
        };
        lo_ok && hi_ok
    })
}

fn cmd_verify(equation: &str, samples: u64, seed: u64, corrupt_report: bool) -> i32 {
    let eq = match parse_and_normalize(equation) {
        Ok(eq) => eq,
        Err(code) => return code,
    };
    let analysis = analyze(&eq);
    let mut report = analysis.report.clone();
    if corrupt_report {
        // regression hook: inject a candidate the solver never produced
        let bogus = AlgebraicReal::from_rational(crate::algebra::rat(1_234_567, 10));
        report.candidates.push(crate::solver::Candidate {
            approx: report::approx_string(&bogus),
            value: bogus,
            verdict: Verdict::Strong,
            failed: vec![],
        });
    }
    let mut mismatches: Vec<String> = Vec::new();

    // 1. oracle verdict per isolated candidate
    for c in &report.candidates {
        let oracle_verdict = oracle::verify(&eq, &c.value, 1e-9);
        let agrees = matches!(
            (c.verdict, oracle_verdict),
            (Verdict::Strong, OracleVerdict::Strong)
                | (Verdict::FormalOnly, OracleVerdict::FormalOnly)
                | (Verdict::Rejected, OracleVerdict::Neither)
        );
        if !agrees {
            mismatches.push(format!(
                "candidate x ~ {}: solver says {}, oracle says {:?}",
                c.approx,
                c.verdict.id(),
                oracle_verdict
            ));
        }
    }

    // 2. residual scan over [-50, 50]: every found solution must lie in the
    // solver's strong set
    let step = 100.0 / samples.max(1) as f64;
    let scan = oracle::scan(&eq, -50.0, 50.0, step);
    for p in &scan.points {
        if !set_contains_f64(&report.strong, *p, 1e-6) {
            mismatches.push(format!("scan found x ~ {p:.9} outside the strong set"));
        }
    }
    for (a, b) in &scan.intervals {
        for t in [*a, 0.5 * (a + b), *b] {
            if !set_contains_f64(&report.strong, t, 1e-6) {
                mismatches.push(format!(
                    "scan interval [{a:.6}, {b:.6}] not inside the strong set near {t:.6}"
                ));
            }
        }
    }

    // 3. sample interval components of the strong set and check residuals
    let compiled = oracle::CompiledEquation::new(&eq);
    let mut rng = oracle::SplitMix64::new(seed);
    let mut sampled_intervals = 0usize;
    for comp in report.strong.components() {
        if comp.is_point() {
            continue;
        }
        sampled_intervals += 1;
        let lo = comp
            .lo()
            .map(|v| v.approx_f64())
            .unwrap_or(-50.0)
            .max(-50.0);
        let hi = comp.hi().map(|v| v.approx_f64()).unwrap_or(50.0).min(50.0);
        if hi <= lo {
            continue;
        }
        for _ in 0..20 {
            let t = lo + (hi - lo) * (rng.below(1 << 20) as f64) / (1u64 << 20) as f64;
            match compiled.residual_real(t) {
                Some(r) if r.abs() < 1e-6 => {}
                Some(r) => {
                    mismatches.push(format!("interval sample x ~ {t:.6} has residual {r:.3e}"));
                }
                None => {
                    // boundary effects from f64 rounding are tolerated near
                    // component endpoints
                    let margin = (hi - lo) * 1e-9 + 1e-9;
                    if t > lo + margin && t < hi - margin {
                        mismatches.push(format!(
                            "interval sample x ~ {t:.6} infeasible under real evaluation"
                        ));
                    }
                }
            }
        }
    }

    println!("equation: {eq}");
    println!("candidates checked: {}", report.candidates.len());
    println!(
        "scan solutions: {} point(s), {} interval(s)",
        scan.points.len(),
        scan.intervals.len()
    );
    if sampled_intervals > 0 {
        println!("interval solutions verified by sampling ({sampled_intervals} component(s))");
    }
    if mismatches.is_empty() {
        println!("oracle agreement: ok");
        EXIT_OK
    } else {
        for m in &mismatches {
            println!("MISMATCH: {m}");
        }
        EXIT_DISAGREEMENT
    }
}
