//! The four subcommands. Each returns `Ok(())` or a [`CliError`] carrying
//! its exit code; all output is deterministic for fixed arguments.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use incidence::analysis::{check_st_ceiling, sweep_pairs};
use incidence::counting::{
    all_lines_through_pairs, count_incidences_bruteforce, count_incidences_bucketed,
};
use incidence::elekes::{
    classic_elekes_stats, elekes_stats, generate_classic_elekes, generate_elekes, ElekesParams,
};
use incidence::erdos::{exact_erdos_counts, generate_erdos, limit_constant, ErdosParams};
use incidence::{CanonicalLine, Configuration, Construction, IncidenceStats};

use crate::format::{significant, write_json, write_sweep_csv, write_text};
use crate::rangespec::RangeSpec;
use crate::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

fn build_configuration(construction: Construction, k: u64, m: u64) -> CliResult<Configuration> {
    let config = match construction {
        Construction::Elekes => generate_elekes(&ElekesParams::new(k, m)?)?,
        Construction::ClassicElekes => generate_classic_elekes(k, m)?,
        Construction::Erdos => generate_erdos(&ErdosParams::new(k, m)?)?,
    };
    Ok(config)
}

fn formula_stats(construction: Construction, k: u64, m: u64) -> CliResult<IncidenceStats> {
    let stats = match construction {
        Construction::Elekes => elekes_stats(&ElekesParams::new(k, m)?)?,
        Construction::ClassicElekes => classic_elekes_stats(k, m)?,
        Construction::Erdos => exact_erdos_counts(&ErdosParams::new(k, m)?)?,
    };
    Ok(stats)
}

/// `generate`: construct a configuration and write it in the chosen
/// format. With `--out` the file is written and `n=<n> l=<l>` goes to
/// stdout; without it the configuration streams to stdout and the summary
/// to stderr.
pub fn cmd_generate(
    construction: Construction,
    k: u64,
    m: u64,
    format: OutputFormat,
    out: Option<&Path>,
    stdout: &mut impl Write,
    stderr: &mut impl Write,
) -> CliResult<()> {
    let config = build_configuration(construction, k, m)?;
    let render = |sink: &mut dyn Write| -> CliResult<()> {
        match format {
            OutputFormat::Text => write_text(&config, sink),
            OutputFormat::Json => write_json(&config, sink),
            OutputFormat::Csv => Err(CliError::Validation(
                "generate supports --format text or json".into(),
            )),
        }
    };
    match out {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            render(&mut file)?;
            file.flush()?;
            writeln!(
                stdout,
                "n={} l={} -> {}",
                config.n(),
                config.l(),
                path.display()
            )?;
        }
        None => {
            render(stdout)?;
            writeln!(stderr, "n={} l={}", config.n(), config.l())?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct StatsReport {
    construction: String,
    k: u64,
    m: u64,
    n: u64,
    l: u64,
    #[serde(rename = "I")]
    incidences: u64,
    constant: f64,
    regime_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    limit_constant: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
}

/// `stats`: exact n, l, I, constant and regime flag from closed forms.
/// With `--verify`, the configuration is materialized and I is recomputed
/// by both counting engines; any disagreement is a mismatch (exit 2).
pub fn cmd_stats(
    construction: Construction,
    k: u64,
    m: u64,
    verify: bool,
    format: OutputFormat,
    stdout: &mut impl Write,
) -> CliResult<()> {
    let stats = formula_stats(construction, k, m)?;
    let limit = match construction {
        Construction::Erdos => Some(limit_constant(m)?),
        _ => None,
    };

    let mut verified = None;
    let mut engine_counts = None;
    if verify {
        let config = build_configuration(construction, k, m)?;
        if config.n() != stats.n || config.l() != stats.l {
            return Err(CliError::Mismatch(format!(
                "generated n={} l={} but formulas give n={} l={}",
                config.n(),
                config.l(),
                stats.n,
                stats.l
            )));
        }
        let bucketed = count_incidences_bucketed(&config)?;
        let brute = count_incidences_bruteforce(&config)?;
        if bucketed != stats.incidences || brute != stats.incidences {
            return Err(CliError::Mismatch(format!(
                "I: formula={} bucketed={bucketed} brute-force={brute}",
                stats.incidences
            )));
        }
        verified = Some(true);
        engine_counts = Some((bucketed, brute));
    }

    match format {
        OutputFormat::Json => {
            let report = StatsReport {
                construction: construction.to_string(),
                k,
                m,
                n: stats.n,
                l: stats.l,
                incidences: stats.incidences,
                constant: stats.constant,
                regime_ok: stats.regime_ok,
                limit_constant: limit,
                verified,
            };
            serde_json::to_writer(&mut *stdout, &report)
                .map_err(|e| CliError::Io(e.to_string()))?;
            writeln!(stdout)?;
        }
        OutputFormat::Text => {
            writeln!(stdout, "construction={construction} k={k} m={m}")?;
            writeln!(stdout, "n={} l={} I={}", stats.n, stats.l, stats.incidences)?;
            let mut tail = format!(
                "constant={} regime_ok={}",
                significant(stats.constant, 6),
                stats.regime_ok
            );
            if let Some(limit) = limit {
                tail.push_str(&format!(" limit_constant={}", significant(limit, 6)));
            }
            writeln!(stdout, "{tail}")?;
            if let Some((bucketed, brute)) = engine_counts {
                writeln!(
                    stdout,
                    "verify: formula={} bucketed={bucketed} brute-force={brute} ok",
                    stats.incidences
                )?;
            }
        }
        OutputFormat::Csv => {
            return Err(CliError::Validation(
                "stats supports --format text or json".into(),
            ))
        }
    }
    Ok(())
}

/// Expands the sweep parameter specifications into (k, m) pairs.
/// `--m diag` pairs each k with m = k - 1.
pub fn sweep_pairs_from_specs(
    k_spec: &RangeSpec,
    m_spec: &RangeSpec,
) -> CliResult<Vec<(u64, u64)>> {
    let k_values = k_spec
        .values()
        .ok_or_else(|| CliError::Validation("'diag' is only valid for --m".into()))?;
    Ok(match m_spec {
        RangeSpec::Diag => k_values.iter().map(|&k| (k, k.saturating_sub(1))).collect(),
        RangeSpec::Values(m_values) => k_values
            .iter()
            .flat_map(|&k| m_values.iter().map(move |&m| (k, m)))
            .collect(),
    })
}

/// `sweep`: one CSV row per (k, m) from exact formulas, with the
/// Szemeredi-Trotter ceiling report on stderr. A ceiling violation exits
/// with the verification-mismatch code.
pub fn cmd_sweep(
    construction: Construction,
    k_spec: &RangeSpec,
    m_spec: &RangeSpec,
    out: Option<&Path>,
    stdout: &mut impl Write,
    stderr: &mut impl Write,
) -> CliResult<()> {
    let pairs = sweep_pairs_from_specs(k_spec, m_spec)?;
    let rows = sweep_pairs(construction, &pairs);

    match out {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            write_sweep_csv(&rows, &mut file)?;
            file.flush()?;
        }
        None => write_sweep_csv(&rows, &mut *stdout)?,
    }

    let report = check_st_ceiling(&rows);
    writeln!(stderr, "{report}")?;
    if !report.is_clean() {
        return Err(CliError::Mismatch(format!(
            "{} sweep row(s) exceed the ST ceiling",
            report.violations.len()
        )));
    }
    Ok(())
}

fn verify_elekes_cell(k: u64, m: u64) -> Result<(), String> {
    let params = ElekesParams::new(k, m).map_err(|e| e.to_string())?;
    let stats = elekes_stats(&params).map_err(|e| e.to_string())?;
    let config = generate_elekes(&params).map_err(|e| e.to_string())?;
    if config.n() != stats.n || config.l() != stats.l {
        return Err(format!(
            "generated n={} l={} but formulas give n={} l={}",
            config.n(),
            config.l(),
            stats.n,
            stats.l
        ));
    }
    let brute = count_incidences_bruteforce(&config).map_err(|e| e.to_string())?;
    if brute != stats.incidences {
        return Err(format!(
            "I formula={} brute-force={brute}",
            stats.incidences
        ));
    }

    let mut generated = config.lines.clone();
    generated.sort_unstable();
    let oracle: Vec<CanonicalLine> = all_lines_through_pairs(&config.points)
        .map_err(|e| e.to_string())?
        .into_iter()
        .filter(|p| p.count == k && !p.line.is_vertical())
        .map(|p| p.line)
        .collect();
    if generated != oracle {
        let missing = oracle.iter().find(|l| !generated.contains(l));
        let extra = generated.iter().find(|l| !oracle.contains(l));
        return Err(format!(
            "line sets differ (oracle {} vs generated {}; missing {missing:?}, extra {extra:?})",
            oracle.len(),
            generated.len()
        ));
    }
    Ok(())
}

fn verify_erdos_cell(k: u64, m: u64) -> Result<(), String> {
    let params = ErdosParams::new(k, m).map_err(|e| e.to_string())?;
    let stats = exact_erdos_counts(&params).map_err(|e| e.to_string())?;
    let config = generate_erdos(&params).map_err(|e| e.to_string())?;
    if config.n() != stats.n || config.l() != stats.l {
        return Err(format!(
            "generated n={} l={} but formulas give n={} l={}",
            config.n(),
            config.l(),
            stats.n,
            stats.l
        ));
    }
    let brute = count_incidences_bruteforce(&config).map_err(|e| e.to_string())?;
    if brute != stats.incidences {
        return Err(format!(
            "I formula={} brute-force={brute}",
            stats.incidences
        ));
    }
    Ok(())
}

fn verify_classic_cell(k: u64, m: u64) -> Result<(), String> {
    let stats = classic_elekes_stats(k, m).map_err(|e| e.to_string())?;
    let config = generate_classic_elekes(k, m).map_err(|e| e.to_string())?;
    if config.n() != stats.n || config.l() != stats.l {
        return Err(format!(
            "generated n={} l={} but formulas give n={} l={}",
            config.n(),
            config.l(),
            stats.n,
            stats.l
        ));
    }
    let brute = count_incidences_bruteforce(&config).map_err(|e| e.to_string())?;
    if brute != stats.incidences {
        return Err(format!(
            "I formula={} brute-force={brute}",
            stats.incidences
        ));
    }
    Ok(())
}

/// `oracle-verify`: cross-check every (k, m) up to the given maxima. For
/// the Elekes construction the generated line set must equal the oracle's
/// exactly-k-point non-vertical lines; for all constructions the formula
/// incidence count must match brute force. Prints a pass/fail matrix and
/// exits with the mismatch code unless every cell passes.
pub fn cmd_oracle_verify(
    construction: Construction,
    k_max: u64,
    m_max: u64,
    stdout: &mut impl Write,
) -> CliResult<()> {
    let (k_min, m_min) = match construction {
        Construction::Elekes => (2u64, 1u64),
        Construction::ClassicElekes => (1, 2),
        Construction::Erdos => (1, 1),
    };
    if k_max < k_min || m_max < m_min {
        return Err(CliError::Validation(format!(
            "{construction} verification needs k_max >= {k_min} and m_max >= {m_min}"
        )));
    }

    let pairs: Vec<(u64, u64)> = (k_min..=k_max)
        .flat_map(|k| (m_min..=m_max).map(move |m| (k, m)))
        .collect();
    let results: Vec<((u64, u64), Result<(), String>)> = pairs
        .par_iter()
        .map(|&(k, m)| {
            let outcome = match construction {
                Construction::Elekes => verify_elekes_cell(k, m),
                Construction::ClassicElekes => verify_classic_cell(k, m),
                Construction::Erdos => verify_erdos_cell(k, m),
            };
            ((k, m), outcome)
        })
        .collect();

    writeln!(
        stdout,
        "{construction} oracle verification, k in {k_min}..={k_max}, m in {m_min}..={m_max}"
    )?;
    write!(stdout, "k\\m")?;
    for m in m_min..=m_max {
        write!(stdout, " {m:>4}")?;
    }
    writeln!(stdout)?;
    let columns = (m_max - m_min + 1) as usize;
    let mut failures = Vec::new();
    for k in k_min..=k_max {
        write!(stdout, "{k:>3}")?;
        for m in m_min..=m_max {
            let index = (k - k_min) as usize * columns + (m - m_min) as usize;
            debug_assert_eq!(results[index].0, (k, m));
            let cell = &results[index].1;
            match cell {
                Ok(()) => write!(stdout, "   ok")?,
                Err(reason) => {
                    failures.push((k, m, reason.clone()));
                    write!(stdout, " FAIL")?;
                }
            }
        }
        writeln!(stdout)?;
    }

    if failures.is_empty() {
        writeln!(stdout, "all {} cases pass", results.len())?;
        Ok(())
    } else {
        for (k, m, reason) in &failures {
            writeln!(stdout, "FAIL k={k} m={m}: {reason}")?;
        }
        Err(CliError::Mismatch(format!(
            "{} of {} cases failed",
            failures.len(),
            results.len()
        )))
    }
}
