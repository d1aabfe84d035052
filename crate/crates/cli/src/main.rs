use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ordsum::groupspec::parse_group;
use ordsum::registry::Registry;
use ordsum::report::{write_reports, Format};
use ordsum::{approx, par_sweep, parse_range};
use ordsum_core::bounds::{extremal, main_bound, summarize, CheckId, Verdict};
use ordsum_core::numtheory::{factorize, two_adic_split};
use ordsum_core::ordersum::{m_bruteforce, m_cyclic, m_group, order_distribution, psi_group};
use ordsum_core::{enumerate_abelian_groups, Error, Limits, Rational};
use rayon::prelude::*;
use serde::Serialize;

const EXIT_UNEXPECTED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(name = "ordsum", version, about = "Exact element-order sums of finite abelian groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute m(G), ψ(G) and the order distribution of one group
    Compute {
        /// `cyclic:N`, a factor list such as `6,2` or `Z6xZ2`, or a signature
        group: String,
        /// Largest order the brute-force cross-check will walk (0 disables it)
        #[arg(long, default_value_t = Limits::DEFAULT_ELEMENT_CAP)]
        oracle_cap: u64,
    },
    /// Run checks over a range of n and write a report
    Verify {
        /// Comma-separated check ids, or `all`
        #[arg(long, default_value = "all")]
        checks: String,
        /// Inclusive range `A..B`
        #[arg(long)]
        range: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Output file (standard output if omitted)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Maximum number of isomorphism classes per order
        #[arg(long, default_value_t = Limits::DEFAULT_CLASS_CAP)]
        cap: u64,
        /// Expected-failure registry (JSON); defaults to the built-in one
        #[arg(long)]
        expected_failures: Option<PathBuf>,
    },
    /// List the abelian groups of order N
    Enumerate {
        n: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
        #[arg(long, default_value_t = Limits::DEFAULT_CLASS_CAP)]
        cap: u64,
    },
    /// Tabulate the non-cyclic group of least m for each n in a range
    Extremal {
        /// Inclusive range `A..B`
        range: String,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
        #[arg(long, default_value_t = Limits::DEFAULT_CLASS_CAP)]
        cap: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
    Json,
}

/// A failed command and the exit status it maps to.
struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Failure {
        Failure { code: EXIT_USAGE, msg: msg.into() }
    }

    fn resource(msg: impl std::fmt::Display) -> Failure {
        Failure { code: EXIT_RESOURCE, msg: msg.to_string() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Zero | Error::Parse { .. } | Error::NotApplicable { .. } => Failure::usage(e.to_string()),
            _ => Failure::resource(e),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::resource(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute { group, oracle_cap } => compute(&group, oracle_cap),
        Command::Verify { checks, range, format, out, cap, expected_failures } => {
            verify(&checks, &range, format, out, cap, expected_failures)
        }
        Command::Enumerate { n, format, cap } => enumerate(n, format, cap),
        Command::Extremal { range, format, cap } => extremal_table(&range, format, cap),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure { code, msg }) => {
            eprintln!("ordsum: {msg}");
            ExitCode::from(code)
        }
    }
}

fn compute(spec: &str, oracle_cap: u64) -> Result<u8, Failure> {
    let group = parse_group(spec).map_err(|e| Failure::usage(e.to_string()))?;
    let m = m_group(&group);
    let mut out = io::stdout().lock();
    writeln!(out, "group: {}", group.signature())?;
    writeln!(out, "structure: {}", group.invariant_form())?;
    writeln!(out, "order: {}", group.order())?;
    writeln!(out, "cyclic: {}", group.is_cyclic())?;
    writeln!(out, "m={m} ({})", approx(m.to_f64()))?;
    writeln!(out, "psi={}", psi_group(&group))?;
    writeln!(out, "distribution: {}", order_distribution(&group))?;
    if oracle_cap == 0 || group.order() > oracle_cap {
        writeln!(out, "oracle: skipped (order above {oracle_cap})")?;
        return Ok(0);
    }
    let brute = m_bruteforce(&group, oracle_cap)?;
    if brute == m {
        writeln!(out, "oracle: agrees")?;
        Ok(0)
    } else {
        writeln!(out, "oracle: DISAGREES, brute force gives {brute}")?;
        Ok(EXIT_UNEXPECTED)
    }
}

fn parse_checks(list: &str) -> Result<Vec<CheckId>, Failure> {
    if list.trim().eq_ignore_ascii_case("all") {
        return Ok(CheckId::ALL.to_vec());
    }
    let mut checks = list
        .split(',')
        .map(|s| s.parse::<CheckId>().map_err(|e| Failure::usage(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    checks.sort_unstable();
    checks.dedup();
    Ok(checks)
}

fn open_output(path: Option<&PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn verify(
    checks: &str,
    range: &str,
    format: Format,
    out: Option<PathBuf>,
    cap: u64,
    expected_failures: Option<PathBuf>,
) -> Result<u8, Failure> {
    let checks = parse_checks(checks)?;
    let range = parse_range(range).map_err(Failure::usage)?;
    let floor = checks.iter().map(|c| c.min_n()).min().unwrap_or(1);
    if *range.start() < floor {
        return Err(Failure::usage(format!(
            "range must start at n >= {floor} for the selected checks"
        )));
    }
    let registry = match expected_failures {
        Some(path) => Registry::load(&path).map_err(|e| Failure::usage(e.to_string()))?,
        None => Registry::builtin(),
    };
    let limits = Limits { class_cap: cap, ..Limits::default() };

    let reports = par_sweep(range, &checks, &limits);
    let mut w = open_output(out.as_ref())?;
    write_reports(&mut w, format, &reports).map_err(Failure::resource)?;
    w.flush()?;

    let unexpected = registry.unexpected(&reports);
    let tallies = summarize(&reports);
    for check in &checks {
        let t = tallies.get(check).copied().unwrap_or_default();
        let surprises = unexpected.iter().filter(|r| r.check == *check).count();
        eprintln!(
            "{check}: holds={} fails={} vacuous={} errors={} unexpected={surprises}",
            t.holds, t.fails, t.vacuous, t.errors
        );
    }
    let errors = reports.iter().filter(|r| matches!(r.verdict, Verdict::Error(_))).count();
    Ok(if errors > 0 {
        EXIT_RESOURCE
    } else if !unexpected.is_empty() {
        EXIT_UNEXPECTED
    } else {
        0
    })
}

#[derive(Serialize)]
struct GroupRow {
    signature: String,
    structure: String,
    m: [String; 2],
    cyclic: bool,
}

#[derive(Serialize)]
struct ExtremalRow {
    n: u64,
    t: u32,
    l: u64,
    witness: Option<String>,
    m: Option<[String; 2]>,
    ratio: Option<[String; 2]>,
    bound: [String; 2],
    tight: bool,
}

fn pair(x: &Rational) -> [String; 2] {
    [x.numer().to_string(), x.denom().to_string()]
}

fn frac(x: &Option<[String; 2]>) -> String {
    x.as_ref().map(|[a, b]| format!("{a}/{b}")).unwrap_or_default()
}

fn write_csv_rows<S: Serialize>(rows: &[S], header: &[&str]) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(io::stdout().lock());
    w.write_record(header).map_err(Failure::resource)?;
    for row in rows {
        w.serialize(row).map_err(Failure::resource)?;
    }
    w.flush()?;
    Ok(())
}

fn write_json_rows<S: Serialize>(rows: &[S]) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, rows).map_err(Failure::resource)?;
    writeln!(out)?;
    Ok(())
}

fn enumerate(n: u64, format: TableFormat, cap: u64) -> Result<u8, Failure> {
    let rows: Vec<GroupRow> = enumerate_abelian_groups(n, cap)?
        .iter()
        .map(|g| GroupRow {
            signature: g.signature(),
            structure: g.invariant_form(),
            m: pair(&m_group(g)),
            cyclic: g.is_cyclic(),
        })
        .collect();
    match format {
        TableFormat::Text => {
            let mut out = io::stdout().lock();
            for r in &rows {
                let kind = if r.cyclic { "cyclic" } else { "non-cyclic" };
                writeln!(out, "{}\t{}\tm={}/{}\t{kind}", r.signature, r.structure, r.m[0], r.m[1])?;
            }
        }
        TableFormat::Csv => {
            let flat: Vec<_> = rows
                .iter()
                .map(|r| (&r.signature, &r.structure, frac(&Some(r.m.clone())), r.cyclic))
                .collect();
            write_csv_rows(&flat, &["signature", "structure", "m", "cyclic"])?;
        }
        TableFormat::Json => write_json_rows(&rows)?,
    }
    Ok(0)
}

fn extremal_row(n: u64, limits: &Limits) -> Result<ExtremalRow, Error> {
    let split = two_adic_split(n);
    let bound = main_bound(split.t);
    let mut row = ExtremalRow {
        n,
        t: split.t,
        l: split.l,
        witness: None,
        m: None,
        ratio: None,
        bound: pair(&bound),
        tight: false,
    };
    match extremal(n, limits) {
        Ok((group, m)) => {
            let ratio = &m / &m_cyclic(&factorize(n)?);
            row.tight = ratio == bound;
            row.witness = Some(group.signature());
            row.m = Some(pair(&m));
            row.ratio = Some(pair(&ratio));
            Ok(row)
        }
        Err(Error::NoNonCyclicClass { .. }) => Ok(row),
        Err(e) => Err(e),
    }
}

fn extremal_table(range: &str, format: TableFormat, cap: u64) -> Result<u8, Failure> {
    let range = parse_range(range).map_err(Failure::usage)?;
    if *range.start() == 0 {
        return Err(Failure::usage("range must start at n >= 1"));
    }
    let limits = Limits { class_cap: cap, ..Limits::default() };
    let rows = range
        .into_par_iter()
        .map(|n| extremal_row(n, &limits))
        .collect::<Result<Vec<_>, _>>()?;
    match format {
        TableFormat::Text => {
            let mut out = io::stdout().lock();
            for r in &rows {
                match &r.witness {
                    Some(w) => writeln!(
                        out,
                        "{}\t{w}\tm={}\tratio={}\tbound={}\t{}",
                        r.n,
                        frac(&r.m),
                        frac(&r.ratio),
                        frac(&Some(r.bound.clone())),
                        if r.tight { "tight" } else { "not tight" }
                    )?,
                    None => writeln!(out, "{}\tvacuous (every abelian group of this order is cyclic)", r.n)?,
                }
            }
        }
        TableFormat::Csv => {
            let flat: Vec<_> = rows
                .iter()
                .map(|r| {
                    (
                        r.n,
                        r.t,
                        r.l,
                        r.witness.clone().unwrap_or_default(),
                        frac(&r.m),
                        frac(&r.ratio),
                        frac(&Some(r.bound.clone())),
                        r.tight,
                    )
                })
                .collect();
            write_csv_rows(&flat, &["n", "t", "l", "witness", "m", "ratio", "bound", "tight"])?;
        }
        TableFormat::Json => write_json_rows(&rows)?,
    }
    Ok(0)
}
