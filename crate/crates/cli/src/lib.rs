//! `jordan-rep`: build, export and verify representations of the Jordanian
//! quantum algebras.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage or I/O
//! errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use jordan_core::exact::Rational;
use jordan_core::export::{
    irrep_to_json, irrep_to_latex, parse_irrep, singular_vector_to_json, table_to_json, table_to_latex, SCHEMA,
};
use jordan_core::hopf::verify_hopf;
use jordan_core::irrep::{irrep, irrep_checks, singular_vector, sweep_sl2, Basis};
use jordan_core::ncseries::{momentum_spectrum, parse_grid, suite_e2, suite_e3, suite_qe3, SpectrumScan, DEFAULT_ORDER};
use jordan_core::oracle::{compare_with_table, direct_action};
use jordan_core::selftest::selftest;
use jordan_core::so4::{default_pairs, verify_so4_suite};
use jordan_core::verma::{build_table, verify_closed_forms};
use jordan_core::{par, Execution, HalfInt, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "jordan-rep", version, about = "Exact representations of the Jordanian algebra U_h(sl(2)) and its relatives")]
pub struct Cli {
    /// Run data-parallel kernels on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Matrices X, Y, H of the (2j+1)-dimensional irrep.
    Irrep {
        /// Spin, as an integer or odd/2 (e.g. 7/2).
        #[arg(long)]
        j: HalfInt,
        #[arg(long, value_enum, default_value_t = BasisArg::Verma)]
        basis: BasisArg,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Json)]
        format: MatrixFormat,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Verma-module matrix elements H_n^m and X_n^m up to a level.
    Elements {
        #[arg(long)]
        max_level: usize,
        /// Specialize the highest weight to this rational value.
        #[arg(long, value_parser = parse_rational_arg)]
        lambda: Option<Rational>,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Json)]
        format: MatrixFormat,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Singular vector of the Verma module with highest weight lambda.
    Singvec {
        /// Nonnegative integer highest weight (lambda = 2j).
        #[arg(long)]
        lambda: u32,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Run verification suites.
    Verify {
        #[command(subcommand)]
        suite: Suite,
        #[arg(long, global = true, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Evaluate the momentum map on a grid of Pi_+ eigenvalues.
    Spectrum {
        #[arg(long, allow_hyphen_values = true)]
        omega: f64,
        /// a:b:step
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        pi0: f64,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        pim: f64,
        #[arg(long, value_enum, default_value_t = SpectrumFormat::Csv)]
        out: SpectrumFormat,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Randomized confluence and matrix-function checks.
    Selftest {
        /// Seed; a fresh one is drawn and printed when omitted.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum Suite {
    /// sl(2) relations, traces and Casimir in both bases.
    Sl2 {
        #[arg(long, default_value = "6")]
        j_max: HalfInt,
        /// Check a single irrep read from a JSON file instead.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Coproduct, counit and antipode on V_j1 (x) V_j2.
    Hopf {
        #[arg(long, default_value = "1/2")]
        j1: HalfInt,
        #[arg(long, default_value = "1/2")]
        j2: HalfInt,
    },
    /// so(4) relations and coproducts; all default pairs when j1, j2 are omitted.
    So4 {
        #[arg(long, requires = "j2")]
        j1: Option<HalfInt>,
        #[arg(long, requires = "j1")]
        j2: Option<HalfInt>,
    },
    /// Closed forms of the O(h^2) and O(h^4) elements against the recursion.
    ClosedForms {
        #[arg(long, default_value_t = 12)]
        n_max: usize,
    },
    /// Brute-force Verma action against the recursion.
    Direct {
        #[arg(long, default_value = "5/2")]
        j_max: HalfInt,
    },
    E2 {
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    E3 {
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    Qe3 {
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// Every suite at its default parameters.
    All,
}

#[derive(Debug, Args)]
pub struct OutputArg {
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum BasisArg {
    Verma,
    Diagonal,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Self {
        match b {
            BasisArg::Verma => Basis::Verma,
            BasisArg::Diagonal => Basis::Diagonal,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixFormat {
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpectrumFormat {
    Csv,
    Json,
}

fn parse_rational_arg(s: &str) -> Result<Rational, String> {
    jordan_core::exact::parse_rational(s).map_err(|e| e.to_string())
}

/// A failure that maps to an exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification,
}

type Outcome = Result<(), Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn emit(out: &mut dyn Write, target: &OutputArg, text: &str) -> Outcome {
    match &target.output {
        Some(path) => fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display()))),
        None => out.write_all(text.as_bytes()).map_err(usage),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

/// Parses `argv` (including the program name) and runs it, writing results
/// to `out` and diagnostics to `err`.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let exec = if cli.sequential { Execution::Sequential } else { Execution::default() };
    match dispatch(cli.command, exec, out, err) {
        Ok(()) => EXIT_OK,
        Err(Failure::Verification) => EXIT_FAIL,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

/// [`run_with`] on the process's stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

fn dispatch(cmd: Command, exec: Execution, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Irrep { j, basis, format, output } => {
            let r = irrep(j, basis.into()).map_err(usage)?;
            let text = match format {
                MatrixFormat::Json => pretty(&irrep_to_json(&r)),
                MatrixFormat::Latex => irrep_to_latex(&r),
            };
            emit(out, &output, &text)
        }
        Command::Elements { max_level, lambda, format, output } => {
            let mut table = build_table(max_level);
            if let Some(l) = &lambda {
                table = table.specialize(l);
            }
            let text = match format {
                MatrixFormat::Json => pretty(&table_to_json(&table, lambda.as_ref())),
                MatrixFormat::Latex => table_to_latex(&table),
            };
            emit(out, &output, &text)
        }
        Command::Singvec { lambda, output } => {
            let sv = singular_vector(HalfInt::from_twice(lambda)).map_err(usage)?;
            emit(out, &output, &pretty(&singular_vector_to_json(&sv)))
        }
        Command::Verify { suite, format } => verify(suite, format, exec, out, err),
        Command::Spectrum { omega, grid, pi0, pim, out: fmt, output } => {
            let grid = parse_grid(&grid).map_err(usage)?;
            let scan = momentum_spectrum(omega, &grid, pim, pi0).map_err(usage)?;
            let text = match fmt {
                SpectrumFormat::Csv => spectrum_csv(&scan),
                SpectrumFormat::Json => {
                    let mut v = serde_json::to_value(&scan).expect("scan serializes");
                    v["schema"] = SCHEMA.into();
                    v["kind"] = "spectrum".into();
                    pretty(&v)
                }
            };
            emit(out, &output, &text)
        }
        Command::Selftest { seed, cases } => {
            let seed = seed.unwrap_or_else(fresh_seed);
            let _ = writeln!(out, "seed: {seed}");
            finish(vec![selftest(seed, cases)], ReportFormat::Text, out)
        }
    }
}

fn fresh_seed() -> u64 {
    use std::time::{SystemTime, UNIX_EPOCH};
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_nanos() as u64).unwrap_or(0)
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn spectrum_csv(scan: &SpectrumScan) -> String {
    let mut s = String::from("input_pi_plus,class,re_p_plus,im_p_plus,p_minus,p_zero\n");
    for p in &scan.points {
        s.push_str(&format!(
            "{},{},{},{},{},{}\n",
            p.input_pi_plus,
            p.class.as_str(),
            fmt_opt(p.re_p_plus),
            fmt_opt(p.im_p_plus),
            fmt_opt(p.p_minus),
            fmt_opt(p.p_zero)
        ));
    }
    s
}

fn sl2_from_file(path: &Path) -> Result<VerificationReport, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    Ok(match parse_irrep(&text) {
        Ok(r) => {
            let mut report = VerificationReport::new(format!("sl2 relations, {}", path.display()));
            report.absorb(&format!("j={}/{}", r.j, r.basis), irrep_checks(&r));
            report
        }
        Err(e) => {
            let mut report = VerificationReport::new(format!("sl2 relations, {}", path.display()));
            report.push("input decodes as an irrep", false, e.to_string(), None);
            report
        }
    })
}

fn direct_report(j_max: HalfInt) -> VerificationReport {
    let level = j_max.twice() as usize + 1;
    compare_with_table(&direct_action(level), &build_table(level))
}

type Job = Box<dyn Fn(Execution) -> Result<VerificationReport, String> + Send + Sync>;

fn all_jobs() -> Vec<Job> {
    let six = HalfInt::from_twice(12);
    let half = HalfInt::from_twice(1);
    let one = HalfInt::from_twice(2);
    vec![
        Box::new(move |_| Ok(verify_closed_forms(12, Execution::Sequential))),
        Box::new(move |_| Ok(direct_report(HalfInt::from_twice(5)))),
        Box::new(move |e| sweep_sl2(six, e).map_err(|x| x.to_string())),
        Box::new(move |_| verify_hopf(half, half).map_err(|x| x.to_string())),
        Box::new(move |_| verify_hopf(one, half).map_err(|x| x.to_string())),
        Box::new(move |e| verify_so4_suite(&default_pairs(), e).map_err(|x| x.to_string())),
        Box::new(|_| suite_e2(DEFAULT_ORDER).map_err(|x| x.to_string())),
        Box::new(|_| suite_e3(DEFAULT_ORDER).map_err(|x| x.to_string())),
        Box::new(|_| suite_qe3(DEFAULT_ORDER).map_err(|x| x.to_string())),
    ]
}

fn verify(suite: Suite, format: ReportFormat, exec: Execution, out: &mut dyn Write, _err: &mut dyn Write) -> Outcome {
    let reports = match suite {
        Suite::Sl2 { input: Some(path), .. } => vec![sl2_from_file(&path)?],
        Suite::Sl2 { j_max, input: None } => vec![sweep_sl2(j_max, exec).map_err(usage)?],
        Suite::Hopf { j1, j2 } => vec![verify_hopf(j1, j2).map_err(usage)?],
        Suite::So4 { j1: Some(a), j2: Some(b) } => vec![verify_so4_suite(&[(a, b)], exec).map_err(usage)?],
        Suite::So4 { .. } => vec![verify_so4_suite(&default_pairs(), exec).map_err(usage)?],
        Suite::ClosedForms { n_max } => vec![verify_closed_forms(n_max, exec)],
        Suite::Direct { j_max } => vec![direct_report(j_max)],
        Suite::E2 { order } => vec![suite_e2(order).map_err(usage)?],
        Suite::E3 { order } => vec![suite_e3(order).map_err(usage)?],
        Suite::Qe3 { order } => vec![suite_qe3(order).map_err(usage)?],
        Suite::All => {
            // Suites run concurrently; results come back in job order.
            let jobs = all_jobs();
            par::map(exec, &jobs, |job| job(exec))
                .into_iter()
                .collect::<Result<Vec<_>, _>>()
                .map_err(usage)?
        }
    };
    finish(reports, format, out)
}

fn finish(reports: Vec<VerificationReport>, format: ReportFormat, out: &mut dyn Write) -> Outcome {
    let passed = reports.iter().all(VerificationReport::passed);
    let text = match format {
        ReportFormat::Json if reports.len() == 1 => pretty(&reports[0].to_json()),
        ReportFormat::Json => pretty(&json!({
            "schema": SCHEMA,
            "status": if passed { "pass" } else { "fail" },
            "reports": reports.iter().map(VerificationReport::to_json).collect::<Vec<_>>(),
        })),
        ReportFormat::Text => {
            let mut s = String::new();
            for r in &reports {
                for line in r.summary_lines() {
                    s.push_str(&line);
                    s.push('\n');
                }
                let fails = r.failures().count();
                let verdict = if fails == 0 { "PASS" } else { "FAIL" };
                s.push_str(&format!("{verdict} {}: {} checks, {fails} failed\n", r.suite, r.entries.len()));
            }
            s
        }
    };
    out.write_all(text.as_bytes()).map_err(usage)?;
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
