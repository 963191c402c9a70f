//! On-disk formats.
//!
//! Configurations are written either as line-oriented text,
//!
//! ```text
//! incidence-config v1 elekes k=5 m=4
//! p <x> <y>
//! l <a> <b> <c>
//! ```
//!
//! with one `p` record per point and one `l` record per canonical line, or
//! as JSON `{"points": [[x, y], ...], "lines": [[a, b, c], ...]}` with
//! integer entries only. Sweeps are CSV with the fixed column set
//! `construction,k,m,n,l,I,constant,regime_ok,limit_constant,error`.
//! All numeric output uses `.` as the decimal separator and floats round
//! trip at full precision, so identical inputs produce byte-identical
//! files.

use std::io::Write;

use serde::{Deserialize, Serialize};

use incidence::analysis::SweepRow;
use incidence::{canonicalize_line, CanonicalLine, Configuration, LatticePoint, Provenance};

use crate::{CliError, CliResult};

pub const TEXT_HEADER_PREFIX: &str = "incidence-config v1";

pub const CSV_HEADER: [&str; 10] = [
    "construction",
    "k",
    "m",
    "n",
    "l",
    "I",
    "constant",
    "regime_ok",
    "limit_constant",
    "error",
];

/// Renders `x` with the given number of significant digits, plain decimal
/// notation.
pub fn significant(x: f64, digits: u32) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exponent = x.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - exponent).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Writes the line-oriented text format.
pub fn write_text(config: &Configuration, mut out: impl Write) -> CliResult<()> {
    let provenance = config.provenance.ok_or_else(|| {
        CliError::Validation("cannot serialize a configuration without provenance".into())
    })?;
    writeln!(
        out,
        "{TEXT_HEADER_PREFIX} {} k={} m={}",
        provenance.construction, provenance.k, provenance.m
    )?;
    for p in &config.points {
        writeln!(out, "p {} {}", p.x, p.y)?;
    }
    for l in &config.lines {
        writeln!(out, "l {} {} {}", l.a(), l.b(), l.c())?;
    }
    Ok(())
}

/// Parses the line-oriented text format back into a configuration.
pub fn parse_text(input: &str) -> CliResult<Configuration> {
    let mut lines = input.lines();
    let header = lines
        .next()
        .ok_or_else(|| CliError::Validation("empty configuration file".into()))?;
    let rest = header.strip_prefix(TEXT_HEADER_PREFIX).ok_or_else(|| {
        CliError::Validation(format!(
            "bad header '{header}', expected '{TEXT_HEADER_PREFIX} ...'"
        ))
    })?;
    let fields: Vec<&str> = rest.split_whitespace().collect();
    let [construction, k, m] = fields[..] else {
        return Err(CliError::Validation(format!("bad header '{header}'")));
    };
    let provenance = Provenance {
        construction: construction
            .parse()
            .map_err(|e: incidence::Error| CliError::Validation(e.to_string()))?,
        k: parse_header_field(k, "k")?,
        m: parse_header_field(m, "m")?,
    };

    let mut points = Vec::new();
    let mut config_lines: Vec<CanonicalLine> = Vec::new();
    for (index, line) in lines.enumerate() {
        let record = index + 2;
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            ["p", x, y] => points.push(LatticePoint::new(
                parse_int(x, record)?,
                parse_int(y, record)?,
            )),
            ["l", a, b, c] => {
                let line = canonicalize_line(
                    parse_int(a, record)?,
                    parse_int(b, record)?,
                    parse_int(c, record)?,
                )
                .map_err(|e| CliError::Validation(format!("line {record}: {e}")))?;
                config_lines.push(line);
            }
            _ => {
                return Err(CliError::Validation(format!(
                    "line {record}: expected 'p <x> <y>' or 'l <a> <b> <c>', got '{line}'"
                )))
            }
        }
    }
    Ok(Configuration::new(points, config_lines, provenance))
}

fn parse_header_field(field: &str, name: &str) -> CliResult<u64> {
    field
        .strip_prefix(&format!("{name}="))
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| CliError::Validation(format!("bad header field '{field}'")))
}

fn parse_int(token: &str, record: usize) -> CliResult<i64> {
    token
        .parse()
        .map_err(|_| CliError::Validation(format!("line {record}: bad integer '{token}'")))
}

#[derive(Serialize, Deserialize)]
struct JsonConfig {
    points: Vec<[i64; 2]>,
    lines: Vec<[i64; 3]>,
}

/// Writes the JSON format: integer point pairs and line triples only.
pub fn write_json(config: &Configuration, mut out: impl Write) -> CliResult<()> {
    let json = JsonConfig {
        points: config.points.iter().map(|p| [p.x, p.y]).collect(),
        lines: config.lines.iter().map(|l| [l.a(), l.b(), l.c()]).collect(),
    };
    serde_json::to_writer(&mut out, &json).map_err(|e| CliError::Io(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

#[derive(Debug, Serialize, Deserialize)]
struct CsvRow {
    construction: String,
    k: u64,
    m: u64,
    n: u64,
    l: u64,
    #[serde(rename = "I")]
    incidences: u64,
    constant: f64,
    regime_ok: bool,
    limit_constant: Option<f64>,
    error: Option<String>,
}

impl From<&SweepRow> for CsvRow {
    fn from(row: &SweepRow) -> Self {
        CsvRow {
            construction: row.construction.to_string(),
            k: row.k,
            m: row.m,
            n: row.n,
            l: row.l,
            incidences: row.incidences,
            constant: row.constant,
            regime_ok: row.regime_ok,
            limit_constant: row.limit_constant,
            error: row.error.clone(),
        }
    }
}

impl TryFrom<CsvRow> for SweepRow {
    type Error = CliError;

    fn try_from(row: CsvRow) -> CliResult<SweepRow> {
        Ok(SweepRow {
            construction: row
                .construction
                .parse()
                .map_err(|e: incidence::Error| CliError::Validation(e.to_string()))?,
            k: row.k,
            m: row.m,
            n: row.n,
            l: row.l,
            incidences: row.incidences,
            constant: row.constant,
            regime_ok: row.regime_ok,
            limit_constant: row.limit_constant,
            error: row.error,
        })
    }
}

/// Writes sweep rows as CSV. The header is always present, so an empty
/// sweep produces a header-only file.
pub fn write_sweep_csv(rows: &[SweepRow], out: impl Write) -> CliResult<()> {
    let mut writer = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    writer.write_record(CSV_HEADER)?;
    for row in rows {
        writer.serialize(CsvRow::from(row))?;
    }
    writer.flush().map_err(CliError::from)?;
    Ok(())
}

/// Parses sweep CSV produced by [`write_sweep_csv`] back into rows.
pub fn parse_sweep_csv(input: &str) -> CliResult<Vec<SweepRow>> {
    let mut reader = csv::Reader::from_reader(input.as_bytes());
    let mut rows = Vec::new();
    for record in reader.deserialize::<CsvRow>() {
        rows.push(SweepRow::try_from(record?)?);
    }
    Ok(rows)
}
