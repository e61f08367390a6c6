//! The `virmod` command line.
//!
//! Every subcommand prints an aligned text table on stdout and can also
//! write a JSON (`--json PATH`) or CSV (`--csv PATH`) report. Exit codes:
//! 0 when every check passes, 1 when a check fails, 2 on usage or contract
//! errors.

mod checks;
mod fixtures;
mod report;

pub use report::{CheckResult, Discrepancy, Note, ReportEnvelope, Status};

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::exact::{format_rational, parse_rational, DenseMatrix, Field};
use crate::virasoro::{irreducibility_probe, VermaModule, VermaParams, Verdict, DEFAULT_MAX_LEVEL};
use crate::weights::{
    b_set_bruteforce, b_set_intervals, canonicalize, classify_prime, d_matrix, g_set, g_union,
    IntervalSet,
};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "virmod", version, about = "Exact checks for Virasoro minimal series modulo p")]
struct Cli {
    /// Write a JSON report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,

    /// Write a CSV report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    csv: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the bad primes for central charge c_l.
    BadPrimes {
        #[arg(long)]
        ell: u64,
    },
    /// Classify one prime as good or bad for c_l.
    Classify {
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        prime: u64,
    },
    /// Show the collision set B_l.
    Bset {
        #[arg(long)]
        ell: u64,
        /// Only the enumerated set.
        #[arg(long, conflicts_with = "intervals")]
        bruteforce: bool,
        /// Only the interval form.
        #[arg(long)]
        intervals: bool,
    },
    /// Show the gap set G_l.
    Gset {
        #[arg(long)]
        ell: u64,
        /// Use the range [1, 2l^2+2l-3] on which the block decomposition holds.
        #[arg(long)]
        corrected: bool,
    },
    /// Print the difference table D for level l.
    Dmatrix {
        #[arg(long)]
        ell: u64,
    },
    /// Run one verification suite.
    Verify(VerifyArgs),
    /// Gram matrix of the Verma module M(c, h) at one level.
    Gram {
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, allow_hyphen_values = true)]
        h: String,
        #[arg(long)]
        level: usize,
        /// Work over F_p instead of Q.
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Compare graded ranks of a minimal-series module over Q and F_p.
    Probe {
        #[arg(long)]
        ell: u64,
        /// Label as M,N.
        #[arg(long)]
        label: String,
        #[arg(long)]
        prime: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_LEVEL)]
        max_level: usize,
    },
    /// Run the full reference fixture suite and emit one report.
    ReproducePaper,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    suite: Suite,
    /// A single level.
    #[arg(long, conflicts_with = "ell_max")]
    ell: Option<u64>,
    /// All levels 2..=L.
    #[arg(long)]
    ell_max: Option<u64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Suite {
    PropH,
    PropX,
    Gko,
    GIdentity,
    Table1,
}

impl Suite {
    fn default_ell_max(self) -> u64 {
        match self {
            Suite::PropH => 30,
            Suite::PropX | Suite::GIdentity => 100,
            Suite::Gko => 20,
            Suite::Table1 => 8,
        }
    }
}

/// Parses `argv` (including the program name), runs, and writes the text
/// report to `out`. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let (body, env) = match execute(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let _ = write!(out, "{body}");
    let _ = write!(out, "{}", env.render_table());
    if let Some(path) = &cli.json {
        if let Err(e) = env.write_json(path) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return EXIT_USAGE;
        }
    }
    if let Some(path) = &cli.csv {
        if let Err(e) = env.write_csv(path) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return EXIT_USAGE;
        }
    }
    if env.failed() {
        EXIT_FAILED
    } else {
        EXIT_OK
    }
}

fn levels(suite: Suite, ell: Option<u64>, ell_max: Option<u64>) -> Result<Vec<u64>> {
    let v: Vec<u64> = match (ell, ell_max) {
        (Some(l), _) => vec![l],
        (None, Some(max)) => (2..=max).collect(),
        (None, None) => (2..=suite.default_ell_max()).collect(),
    };
    if v.is_empty() || v[0] < 2 {
        return Err(Error::Contract("levels must be at least 2".into()));
    }
    Ok(v)
}

fn execute(command: &Command) -> Result<(String, ReportEnvelope)> {
    let mut body = String::new();
    let env = match command {
        Command::BadPrimes { ell } => {
            let mut env = ReportEnvelope::new("bad-primes");
            env.param("ell", ell);
            let primes = checks::bad_primes_check(&mut env, *ell)?;
            let _ = writeln!(body, "bad primes for c_{ell}: {}", checks::format_set(&primes));
            env
        }
        Command::Classify { ell, prime } => classify(*ell, *prime, &mut body)?,
        Command::Bset { ell, bruteforce, intervals } => bset(*ell, *bruteforce, *intervals, &mut body)?,
        Command::Gset { ell, corrected } => gset(*ell, *corrected, &mut body)?,
        Command::Dmatrix { ell } => dmatrix(*ell, &mut body)?,
        Command::Verify(args) => verify(args)?,
        Command::Gram { c, h, level, prime } => gram(c, h, *level, *prime, &mut body)?,
        Command::Probe { ell, label, prime, max_level } => probe(*ell, label, *prime, *max_level, &mut body)?,
        Command::ReproducePaper => reproduce()?,
    };
    Ok((body, env))
}

fn classify(ell: u64, prime: u64, body: &mut String) -> Result<ReportEnvelope> {
    let mut env = ReportEnvelope::new("classify");
    env.param("ell", ell).param("prime", prime);
    let c = classify_prime(ell, prime)?;
    let pairs: Vec<String> = c.collisions.iter().map(|(a, b)| format!("{a}~{b}")).collect();
    let degenerate: Vec<String> = c.degenerate.iter().map(|l| l.to_string()).collect();
    let _ = writeln!(body, "p = {prime} is {} for c_{ell}", c.status);
    if !pairs.is_empty() {
        let _ = writeln!(body, "collisions: {}", pairs.join(" "));
    }
    if !degenerate.is_empty() {
        let _ = writeln!(body, "undefined mod p: {}", degenerate.join(" "));
    }
    let _ = writeln!(body, "c_{ell} defined mod p: {}", c.central_charge_defined);
    let summary = format!(
        "{} ({} collisions, {} degenerate)",
        c.status,
        c.collisions.len(),
        c.degenerate.len()
    );
    env.push(CheckResult::new("classification", Status::Info, summary).with_detail(&c));
    if c.even_prime_convention {
        env.note(Discrepancy::EvenPrime);
    }
    if !c.degenerate.is_empty() {
        env.note(Discrepancy::DegenerateWeights);
    }
    Ok(env)
}

fn bset(ell: u64, only_brute: bool, only_intervals: bool, body: &mut String) -> Result<ReportEnvelope> {
    let mut env = ReportEnvelope::new("bset");
    env.param("ell", ell);
    let brute = b_set_bruteforce(ell)?;
    let intervals = b_set_intervals(ell)?;
    if !only_intervals {
        let v: Vec<u64> = brute.iter().copied().collect();
        let _ = writeln!(body, "B_{ell} (enumerated): {}", IntervalSet::from_values(v.iter().copied()));
        env.push(CheckResult::new("bruteforce", Status::Info, format!("{} values", v.len())).with_detail(&v));
        env.param("mode", if only_brute { "bruteforce" } else { "both" });
    }
    if !only_brute {
        let _ = writeln!(body, "B_{ell} (interval form): {intervals}");
        env.push(CheckResult::new("intervals", Status::Info, intervals.to_string()).with_detail(&intervals));
        if only_intervals {
            env.param("mode", "intervals");
        }
    }
    if !only_brute && !only_intervals {
        env.push(CheckResult::new(
            "interval-form-equality",
            Status::from_bool(intervals.expand() == brute),
            "enumerated set equals interval form",
        ));
    }
    Ok(env)
}

fn gset(ell: u64, corrected: bool, body: &mut String) -> Result<ReportEnvelope> {
    let mut env = ReportEnvelope::new("gset");
    env.param("ell", ell).param("corrected", corrected);
    let g = g_set(ell, corrected)?;
    let union = g_union(ell)?;
    let _ = writeln!(body, "G_{ell}: {g}");
    let _ = writeln!(body, "union of G_{ell}(a): {union}");
    env.push(CheckResult::new("g-set", Status::Info, g.to_string()).with_detail(&g));
    let equal = g == union;
    if corrected {
        env.push(CheckResult::new("block-decomposition", Status::from_bool(equal), "G_l equals union of G_l(a)"));
    } else {
        env.push(CheckResult::new(
            "block-decomposition",
            Status::Info,
            if equal { "G_l equals union of G_l(a)" } else { "G_l differs from union of G_l(a)" },
        ));
        if !equal {
            env.note(Discrepancy::GRange);
        }
    }
    Ok(env)
}

fn dmatrix(ell: u64, body: &mut String) -> Result<ReportEnvelope> {
    let mut env = ReportEnvelope::new("dmatrix");
    env.param("ell", ell);
    let d = d_matrix(ell)?;
    let width = d.entries.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1)
        .max(d.col_labels.iter().map(|x| x.to_string().len()).max().unwrap_or(1));
    let row_w = d.row_labels.iter().map(|x| x.to_string().len()).max().unwrap_or(1);
    let _ = write!(body, "{:>row_w$} |", "");
    for c in &d.col_labels {
        let _ = write!(body, " {c:>width$}");
    }
    let _ = writeln!(body);
    for (label, row) in d.row_labels.iter().zip(&d.entries) {
        let _ = write!(body, "{label:>row_w$} |");
        for x in row {
            let _ = write!(body, " {x:>width$}");
        }
        let _ = writeln!(body);
    }
    env.push(
        CheckResult::new("d-matrix", Status::Info, format!("{}x{}", d.entries.len(), d.col_labels.len()))
            .with_detail(&d),
    );
    if ell == 5 {
        checks::d_matrix_reference_check(&mut env)?;
    }
    Ok(env)
}

fn verify(args: &VerifyArgs) -> Result<ReportEnvelope> {
    let name = match args.suite {
        Suite::PropH => "prop-h",
        Suite::PropX => "prop-x",
        Suite::Gko => "gko",
        Suite::GIdentity => "g-identity",
        Suite::Table1 => "table1",
    };
    let mut env = ReportEnvelope::new(&format!("verify {name}"));
    if matches!(args.suite, Suite::Table1) {
        checks::table1_audit(&mut env);
        return Ok(env);
    }
    let ells = levels(args.suite, args.ell, args.ell_max)?;
    env.param("ell_min", ells[0]).param("ell_max", ells[ells.len() - 1]);
    match args.suite {
        Suite::PropH => checks::prop_h_check(&mut env, &ells)?,
        Suite::PropX => checks::prop_x_check(&mut env, &ells)?,
        Suite::Gko => checks::gko_check(&mut env, &ells)?,
        Suite::GIdentity => checks::g_identity_check(&mut env, &ells)?,
        Suite::Table1 => unreachable!(),
    }
    Ok(env)
}

fn render_matrix<F: Field>(m: &DenseMatrix<F>, body: &mut String) {
    let cells: Vec<Vec<String>> = m.to_rows().iter().map(|r| r.iter().map(|x| m.field().format_elem(x)).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    for row in &cells {
        let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
        let _ = writeln!(body, "  [{}]", line.join(" "));
    }
}

fn gram(c: &str, h: &str, level: usize, prime: Option<u64>, body: &mut String) -> Result<ReportEnvelope> {
    let mut env = ReportEnvelope::new("gram");
    let (cq, hq) = (parse_rational(c)?, parse_rational(h)?);
    env.param("c", format_rational(&cq)).param("h", format_rational(&hq)).param("level", level);
    match prime {
        None => {
            let mut module = VermaModule::new(VermaParams::rational(cq, hq));
            let g = module.gram_matrix(level);
            let det = g.determinant()?;
            let _ = writeln!(body, "Gram matrix at level {level} over Q:");
            render_matrix(&g, body);
            env.push(CheckResult::new("rank", Status::Info, format!("{} of {}", g.rank(), g.rows())));
            env.push(CheckResult::new("determinant", Status::Info, format_rational(&det)));
            env.push(CheckResult::new("symmetric", Status::from_bool(g.is_symmetric()), "Gram matrix is symmetric"));
        }
        Some(p) => {
            env.param("prime", p);
            let params = match VermaParams::reduced(&cq, &hq, p) {
                Ok(params) => params,
                Err(e @ Error::DegenerateParams { .. }) => {
                    env.push(CheckResult::new("degenerate-params", Status::Info, e.to_string()));
                    return Ok(env);
                }
                Err(e) => return Err(e),
            };
            let mut module = VermaModule::new(params);
            let g = module.gram_matrix(level);
            let _ = writeln!(body, "Gram matrix at level {level} over F_{p}:");
            render_matrix(&g, body);
            env.push(CheckResult::new("rank", Status::Info, format!("{} of {}", g.rank(), g.rows())));
            env.push(CheckResult::new("determinant", Status::Info, g.determinant()?.to_string()));
            env.push(CheckResult::new("symmetric", Status::from_bool(g.is_symmetric()), "Gram matrix is symmetric"));
        }
    }
    Ok(env)
}

fn parse_label(s: &str) -> Result<(u64, u64)> {
    let bad = || Error::Contract(format!("label {s:?} is not of the form M,N"));
    let (m, n) = s.split_once(',').ok_or_else(bad)?;
    Ok((m.trim().parse().map_err(|_| bad())?, n.trim().parse().map_err(|_| bad())?))
}

fn probe(ell: u64, label: &str, prime: u64, max_level: usize, body: &mut String) -> Result<ReportEnvelope> {
    let mut env = ReportEnvelope::new("probe");
    let (m, n) = parse_label(label)?;
    let label = canonicalize(ell, m, n)?;
    env.param("ell", ell)
        .param("label", label)
        .param("prime", prime)
        .param("max_level", max_level);
    env.note(Discrepancy::IntegralForm);
    let verdict = match irreducibility_probe(label, prime, max_level) {
        Ok(v) => v,
        Err(e @ Error::DegenerateParams { .. }) => {
            let _ = writeln!(body, "{e}: the minimal-series module has no naive reduction mod {prime}");
            env.push(CheckResult::new("degenerate-params", Status::Info, e.to_string()));
            return Ok(env);
        }
        Err(e) => return Err(e),
    };
    let _ = writeln!(body, "{:>5}  {:>6}  {:>6}", "level", "rank_Q", format!("rank_F{prime}"));
    for l in &verdict.levels {
        let _ = writeln!(body, "{:>5}  {:>6}  {:>6}", l.level, l.rank_q, l.rank_fp);
    }
    let bounded = verdict.levels.iter().all(|l| l.rank_fp <= l.rank_q);
    env.push(CheckResult::new("rank-bound", Status::from_bool(bounded), "rank over F_p <= rank over Q at every level"));
    let summary = match verdict.verdict {
        Verdict::Consistent => format!("consistent up to level {max_level}"),
        Verdict::RankDropAtLevel(k) => format!("rank drop at level {k}"),
    };
    env.push(CheckResult::new("verdict", Status::Info, summary).with_detail(&verdict));
    Ok(env)
}

fn reproduce() -> Result<ReportEnvelope> {
    let mut env = ReportEnvelope::new("reproduce-paper");
    for ell in 2..=6 {
        checks::bad_primes_check(&mut env, ell)?;
    }
    let upto_100: Vec<u64> = (2..=100).collect();
    checks::prop_x_check(&mut env, &upto_100)?;
    checks::prop_h_check(&mut env, &(2..=30).collect::<Vec<_>>())?;
    checks::d_matrix_reference_check(&mut env)?;
    checks::g_identity_check(&mut env, &upto_100)?;
    checks::exceptional_check(&mut env, &upto_100)?;
    checks::gram_closed_form_check(&mut env)?;
    checks::kac_check(&mut env, &[2, 3], 8)?;
    checks::probe_evidence_check(&mut env, DEFAULT_MAX_LEVEL)?;
    checks::gko_check(&mut env, &(2..=20).collect::<Vec<_>>())?;
    checks::table1_audit(&mut env);
    Ok(env)
}
