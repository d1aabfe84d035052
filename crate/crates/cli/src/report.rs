//! CSV and JSON encodings of [`BoundReport`] lists.
//!
//! Both formats carry the columns `n,t,l,check_id,lhs,rhs,holds,tight,witness,gap`.
//! CSV writes fractions as `a/b` and absent values as empty fields; JSON
//! writes fractions as `["a","b"]` and absent values as `null`. The verdict
//! is not a column of its own: a row without `lhs` is vacuous when `holds`
//! is true and an error otherwise, with the message in `witness` behind an
//! `error: ` prefix.

use std::io::{Read, Write};

use ordsum_core::bounds::{BoundReport, CheckId, Verdict};
use ordsum_core::Rational;
use serde::{Deserialize, Serialize};

const ERROR_PREFIX: &str = "error: ";

#[derive(Debug)]
pub enum FormatError {
    Csv(csv::Error),
    Json(serde_json::Error),
    Field { row: usize, msg: String },
}

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FormatError::Csv(e) => write!(f, "csv: {e}"),
            FormatError::Json(e) => write!(f, "json: {e}"),
            FormatError::Field { row, msg } => write!(f, "record {row}: {msg}"),
        }
    }
}

impl std::error::Error for FormatError {}

impl From<csv::Error> for FormatError {
    fn from(e: csv::Error) -> Self {
        FormatError::Csv(e)
    }
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Json(e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
struct CsvRecord {
    n: u64,
    t: u32,
    l: u64,
    check_id: String,
    lhs: String,
    rhs: String,
    holds: bool,
    tight: bool,
    witness: String,
    gap: String,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
struct JsonRecord {
    n: u64,
    t: u32,
    l: u64,
    check_id: String,
    lhs: Option<[String; 2]>,
    rhs: Option<[String; 2]>,
    holds: bool,
    tight: bool,
    witness: Option<String>,
    gap: Option<[String; 2]>,
}

fn witness_field(r: &BoundReport) -> Option<String> {
    match &r.verdict {
        Verdict::Error(msg) => Some(format!("{ERROR_PREFIX}{msg}")),
        _ => r.witness.clone(),
    }
}

fn pair(x: &Rational) -> [String; 2] {
    [x.numer().to_string(), x.denom().to_string()]
}

/// Shared decoding of the flattened fields back into a report.
struct Flat {
    n: u64,
    t: u32,
    l: u64,
    check_id: String,
    lhs: Option<Rational>,
    rhs: Option<Rational>,
    holds: bool,
    tight: bool,
    witness: Option<String>,
    gap: Option<Rational>,
}

impl Flat {
    fn into_report(self, row: usize) -> Result<BoundReport, FormatError> {
        let field = |msg: String| FormatError::Field { row, msg };
        let check: CheckId = self.check_id.parse().map_err(|e| field(format!("{e}")))?;
        let (verdict, witness) = match (&self.lhs, self.holds) {
            (Some(_), true) => (Verdict::Holds, self.witness),
            (Some(_), false) => (Verdict::Fails, self.witness),
            (None, true) => (Verdict::Vacuous, self.witness),
            (None, false) => {
                let w = self.witness.unwrap_or_default();
                let msg = w
                    .strip_prefix(ERROR_PREFIX)
                    .ok_or_else(|| field("row without lhs is neither vacuous nor an error".into()))?;
                (Verdict::Error(msg.to_string()), None)
            }
        };
        Ok(BoundReport {
            n: self.n,
            t: self.t,
            l: self.l,
            check,
            lhs: self.lhs,
            rhs: self.rhs,
            verdict,
            tight: self.tight,
            witness,
            gap: self.gap,
        })
    }
}

pub fn write_csv<W: Write>(out: W, reports: &[BoundReport]) -> Result<(), FormatError> {
    let mut w = csv::Writer::from_writer(out);
    let frac = |x: &Option<Rational>| x.as_ref().map(Rational::to_fraction_string).unwrap_or_default();
    for r in reports {
        w.serialize(CsvRecord {
            n: r.n,
            t: r.t,
            l: r.l,
            check_id: r.check.as_str().to_string(),
            lhs: frac(&r.lhs),
            rhs: frac(&r.rhs),
            holds: r.holds(),
            tight: r.tight,
            witness: witness_field(r).unwrap_or_default(),
            gap: frac(&r.gap),
        })?;
    }
    if reports.is_empty() {
        w.write_record(["n", "t", "l", "check_id", "lhs", "rhs", "holds", "tight", "witness", "gap"])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<BoundReport>, FormatError> {
    let mut rd = csv::Reader::from_reader(input);
    let mut out = Vec::new();
    for (row, rec) in rd.deserialize::<CsvRecord>().enumerate() {
        let rec = rec?;
        let frac = |s: &str, name: &str| -> Result<Option<Rational>, FormatError> {
            if s.is_empty() {
                return Ok(None);
            }
            Rational::parse_fraction(s)
                .map(Some)
                .ok_or_else(|| FormatError::Field { row, msg: format!("bad fraction in {name}: `{s}`") })
        };
        out.push(
            Flat {
                n: rec.n,
                t: rec.t,
                l: rec.l,
                lhs: frac(&rec.lhs, "lhs")?,
                rhs: frac(&rec.rhs, "rhs")?,
                gap: frac(&rec.gap, "gap")?,
                holds: rec.holds,
                tight: rec.tight,
                witness: Some(rec.witness).filter(|w| !w.is_empty()),
                check_id: rec.check_id,
            }
            .into_report(row)?,
        );
    }
    Ok(out)
}

pub fn write_json<W: Write>(mut out: W, reports: &[BoundReport]) -> Result<(), FormatError> {
    let records: Vec<JsonRecord> = reports
        .iter()
        .map(|r| JsonRecord {
            n: r.n,
            t: r.t,
            l: r.l,
            check_id: r.check.as_str().to_string(),
            lhs: r.lhs.as_ref().map(pair),
            rhs: r.rhs.as_ref().map(pair),
            holds: r.holds(),
            tight: r.tight,
            witness: witness_field(r),
            gap: r.gap.as_ref().map(pair),
        })
        .collect();
    serde_json::to_writer_pretty(&mut out, &records)?;
    out.write_all(b"\n").map_err(serde_json::Error::io)?;
    Ok(())
}

pub fn read_json<R: Read>(input: R) -> Result<Vec<BoundReport>, FormatError> {
    let records: Vec<JsonRecord> = serde_json::from_reader(input)?;
    records
        .into_iter()
        .enumerate()
        .map(|(row, rec)| {
            let frac = |p: Option<[String; 2]>| -> Result<Option<Rational>, FormatError> {
                p.map(|[a, b]| {
                    Rational::parse_fraction(&format!("{a}/{b}")).ok_or_else(|| FormatError::Field {
                        row,
                        msg: format!("bad fraction [{a:?}, {b:?}]"),
                    })
                })
                .transpose()
            };
            Flat {
                n: rec.n,
                t: rec.t,
                l: rec.l,
                lhs: frac(rec.lhs)?,
                rhs: frac(rec.rhs)?,
                gap: frac(rec.gap)?,
                holds: rec.holds,
                tight: rec.tight,
                witness: rec.witness,
                check_id: rec.check_id,
            }
            .into_report(row)
        })
        .collect()
}

pub fn write_reports<W: Write>(out: W, format: Format, reports: &[BoundReport]) -> Result<(), FormatError> {
    match format {
        Format::Csv => write_csv(out, reports),
        Format::Json => write_json(out, reports),
    }
}
