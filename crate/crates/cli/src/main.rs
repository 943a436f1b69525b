//! Command-line interface: enumeration dumps, generating-function queries,
//! and the verification suites with machine-readable reports.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use planepart_core::closedform::{f_closed, g_closed};
use planepart_core::exactq::{LaurentPolynomial, RationalFunction};
use planepart_core::genfun::{f_brute, g_brute, g_recursion, TopRowFunction};
use planepart_core::parallel::Jobs;
use planepart_core::patterns::{gt_enumerate, spp_enumerate, GtPattern, StrictPlanePartition};
use planepart_core::qsymb::quasi_eval;
use planepart_core::verify::{run_each, Suite, SuiteOptions};

#[derive(Parser)]
#[command(
    name = "planepart",
    version,
    about = "Exact enumeration and verification of refined strict plane partition generating functions"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Dump combinatorial objects with their statistics in a deterministic order.
    Enumerate {
        #[command(subcommand)]
        kind: EnumerateKind,
    },
    /// Print a generating function (F-query with --k, G-query without).
    Genfun(GenfunArgs),
    /// Run identity verification suites over a parameter grid.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DumpFormat {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum EnumerateKind {
    /// Strict plane partitions with parts in {1..n} and at most c columns.
    ///
    /// CSV columns: norm, odd_rows, count_n, rows (rows are |-separated,
    /// entries space-separated).
    Spp {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        c: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: DumpFormat,
    },
    /// Generalized (r,n,c) Gelfand-Tsetlin patterns with the given top row.
    ///
    /// CSV columns: inversions, sign, norm, rows (full rows bottom-up,
    /// |-separated, boundary entries included).
    Gt {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c: i64,
        /// Comma-separated top-row interior (n-r integers); omit when r = n.
        #[arg(long, allow_hyphen_values = true)]
        top: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: DumpFormat,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenfunSource {
    Brute,
    Closed,
    Recursion,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyFormat {
    Text,
    Json,
}

#[derive(Args)]
struct GenfunArgs {
    #[arg(long, value_enum)]
    source: GenfunSource,
    #[arg(long)]
    n: i64,
    #[arg(long)]
    c: i64,
    #[arg(long)]
    p: i64,
    /// Number of maximal parts; selects the F-query. Without it the G-query
    /// (sum over k in 0..=c) is printed.
    #[arg(long, allow_negative_numbers = true)]
    k: Option<i64>,
    #[arg(long, value_enum, default_value = "text")]
    format: PolyFormat,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name or "all".
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 3)]
    max_n: i64,
    #[arg(long, default_value_t = 4)]
    max_c: i64,
    /// Worker threads (0 = library default). Falls back to PLANEPART_JOBS.
    #[arg(long)]
    jobs: Option<usize>,
    /// Force the random-rational pre-check on or off; by default it is on
    /// for the suites dominated by large rational-function arithmetic
    /// (theorem1, qsums) and off elsewhere.
    #[arg(long)]
    fast_filter: Option<bool>,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<String>,
    /// Include wall-clock timings in the report (makes output non-reproducible).
    #[arg(long, default_value_t = false)]
    timings: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.cmd {
        Cmd::Enumerate { kind } => {
            cmd_enumerate(kind)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Genfun(args) => {
            cmd_genfun(&args)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify(args) => cmd_verify(&args),
    }
}

// ---------------------------------------------------------------------------

fn join_rows(rows: &[Vec<i64>]) -> String {
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("|")
}

fn dump_spp(
    p: &StrictPlanePartition,
    n: i64,
    format: DumpFormat,
    out: &mut impl Write,
) -> io::Result<()> {
    match format {
        DumpFormat::Json => writeln!(out, "{}", p.to_json(n)),
        DumpFormat::Csv => writeln!(
            out,
            "{},{},{},{}",
            p.norm(),
            p.odd_rows(),
            p.count_eq(n),
            join_rows(p.rows())
        ),
        DumpFormat::Text => {
            if p.rows().is_empty() {
                writeln!(out, "(empty)")?;
            }
            for row in p.rows() {
                let line = row
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                writeln!(out, "{line}")?;
            }
            writeln!(out)
        }
    }
}

fn dump_gt(g: &GtPattern, format: DumpFormat, out: &mut impl Write) -> io::Result<()> {
    match format {
        DumpFormat::Json => writeln!(out, "{}", g.to_json()),
        DumpFormat::Csv => writeln!(
            out,
            "{},{},{},{}",
            g.inversions(),
            g.sign(),
            g.norm(),
            join_rows(g.rows())
        ),
        DumpFormat::Text => {
            // top row first, as conventionally displayed
            for row in g.rows().iter().rev() {
                let line = row
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                writeln!(out, "{line}")?;
            }
            writeln!(out)
        }
    }
}

fn cmd_enumerate(kind: EnumerateKind) -> Result<(), String> {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    match kind {
        EnumerateKind::Spp { n, c, format } => {
            if n < 0 || c < 0 {
                return Err("need n >= 0 and c >= 0".into());
            }
            if format == DumpFormat::Csv {
                writeln!(out, "norm,odd_rows,count_n,rows").map_err(|e| e.to_string())?;
            }
            for p in spp_enumerate(n, c) {
                dump_spp(&p, n, format, &mut out).map_err(|e| e.to_string())?;
            }
        }
        EnumerateKind::Gt {
            r,
            n,
            c,
            top,
            format,
        } => {
            if r > n {
                return Err(format!("need r <= n, got r = {r}, n = {n}"));
            }
            let top: Vec<i64> = match top.as_deref() {
                None | Some("") => Vec::new(),
                Some(s) => s
                    .split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<i64>()
                            .map_err(|_| format!("bad top entry {t:?}"))
                    })
                    .collect::<Result<_, _>>()?,
            };
            if top.len() != n - r {
                return Err(format!("top row needs {} entries, got {}", n - r, top.len()));
            }
            if format == DumpFormat::Csv {
                writeln!(out, "inversions,sign,norm,rows").map_err(|e| e.to_string())?;
            }
            for g in gt_enumerate(r, n, c, &top) {
                dump_gt(&g, format, &mut out).map_err(|e| e.to_string())?;
            }
        }
    }
    out.flush().map_err(|e| e.to_string())
}

// ---------------------------------------------------------------------------

fn cmd_genfun(args: &GenfunArgs) -> Result<(), String> {
    let (n, c, p) = (args.n, args.c, args.p);
    if n < 1 || c < 0 {
        return Err("need n >= 1 and c >= 0".into());
    }
    if let Some(k) = args.k {
        if k.abs() > c + 3 * n {
            eprintln!(
                "warning: k = {k} is far outside [-n, c+n]; enumeration cost grows quickly out here"
            );
        }
    }
    let value: RationalFunction = match (args.source, args.k) {
        (GenfunSource::Brute, Some(k)) => f_brute(n as usize, c, p, k),
        (GenfunSource::Brute, None) => g_brute(n as usize, c, p).map_err(|e| e.to_string())?,
        (GenfunSource::Closed, Some(k)) => quasi_eval(&f_closed(n, c, p), k),
        (GenfunSource::Closed, None) => g_closed(n, c, p),
        (GenfunSource::Recursion, Some(k)) => {
            let base = TopRowFunction::parity_indicator(n as usize, p);
            g_recursion(n as usize - 1, n as usize, c, &base, &[k])
        }
        (GenfunSource::Recursion, None) => {
            let base = TopRowFunction::parity_indicator(n as usize, p);
            let mut acc = LaurentPolynomial::zero();
            for k in 0..=c {
                let f = g_recursion(n as usize - 1, n as usize, c, &base, &[k]);
                let poly = f
                    .as_laurent()
                    .ok_or_else(|| "recursion value is not polynomial".to_string())?;
                acc = &acc + &poly.shifted(k);
            }
            RationalFunction::from_laurent(acc)
        }
    };
    match args.format {
        PolyFormat::Text => println!("{value}"),
        PolyFormat::Json => println!("{}", value.to_json()),
    }
    Ok(())
}

// ---------------------------------------------------------------------------

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode, String> {
    if args.max_n < 1 {
        return Err("need --max-n >= 1".into());
    }
    if args.max_c < 0 {
        return Err("need --max-c >= 0".into());
    }
    let suites = Suite::parse(&args.suite).map_err(|e| e.to_string())?;
    let jobs = match args.jobs {
        Some(j) => Jobs::from_count(j),
        None => match std::env::var("PLANEPART_JOBS") {
            Ok(v) => Jobs::from_count(
                v.parse::<usize>()
                    .map_err(|_| format!("bad PLANEPART_JOBS value {v:?}"))?,
            ),
            Err(_) => Jobs::Default,
        },
    };
    let configs: Vec<(Suite, SuiteOptions)> = suites
        .iter()
        .map(|&suite| {
            let fast_default = matches!(suite, Suite::Theorem1 | Suite::Qsums);
            (
                suite,
                SuiteOptions {
                    max_n: args.max_n,
                    max_c: args.max_c,
                    jobs,
                    fast_filter: args.fast_filter.unwrap_or(fast_default),
                },
            )
        })
        .collect();

    let reports = run_each(jobs, &configs);

    let mut passed = 0usize;
    let mut failed = 0usize;
    for report in &reports {
        passed += report.passed();
        failed += report.failed();
        eprintln!(
            "{}: {} passed, {} failed ({} instances)",
            report.suite,
            report.passed(),
            report.failed(),
            report.instances.len()
        );
    }
    let document = json!({
        "max_n": args.max_n,
        "max_c": args.max_c,
        "passed": passed,
        "failed": failed,
        "status": if failed == 0 { "pass" } else { "fail" },
        "reports": reports.iter().map(|r| r.to_json(args.timings)).collect::<Vec<Value>>(),
    });
    let rendered = serde_json::to_string_pretty(&document).map_err(|e| e.to_string())? + "\n";
    match &args.out {
        Some(path) => fs::write(path, rendered).map_err(|e| e.to_string())?,
        None => {
            io::stdout()
                .write_all(rendered.as_bytes())
                .map_err(|e| e.to_string())?;
        }
    }
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
