//! CSV and manifest writers for benchmark output.
//!
//! Floating-point fields are serialized in scientific notation with 17
//! significant digits, so parsing them back reproduces the exact bits.

use crate::harness::{StepRecord, SummaryStats};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
#[error("{path}: {source}")]
pub struct CsvError {
    pub path: PathBuf,
    #[source]
    pub source: io::Error,
}

fn write_file(path: &Path, content: &str) -> Result<(), CsvError> {
    fs::write(path, content).map_err(|source| CsvError {
        path: path.to_path_buf(),
        source,
    })
}

/// Bit-stable float rendering: 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// One output file with its data row count, as listed in the manifest.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FileEntry {
    pub name: String,
    pub rows: u64,
}

/// Provenance record written next to the CSV output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    /// Config echo in the key-value format; parses back to the config that
    /// produced this run.
    pub config: String,
    pub master_seed: u64,
    pub version: String,
    pub duration_secs: f64,
    pub files: Vec<FileEntry>,
}

impl RunManifest {
    pub fn new(config_echo: String, master_seed: u64) -> Self {
        RunManifest {
            config: config_echo,
            master_seed,
            version: env!("CARGO_PKG_VERSION").to_string(),
            duration_secs: 0.0,
            files: Vec::new(),
        }
    }
}

/// Write per-step records; returns the manifest entry.
pub fn write_steps(path: &Path, records: &[StepRecord]) -> Result<FileEntry, CsvError> {
    let mut out = String::from(
        "rep,policy,t,arm,reward,mu_chosen,mu_opt,regret_inst,regret_cum,correct\n",
    );
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            r.rep,
            r.policy,
            r.t,
            r.arm,
            fmt_f64(r.reward),
            fmt_f64(r.mu_chosen),
            fmt_f64(r.mu_opt),
            fmt_f64(r.regret_inst),
            fmt_f64(r.regret_cum),
            r.correct as u8,
        );
    }
    write_file(path, &out)?;
    Ok(entry(path, records.len() as u64))
}

/// Write the cross-replication five-number summaries.
pub fn write_summary(path: &Path, summaries: &[SummaryStats]) -> Result<FileEntry, CsvError> {
    let mut out = String::from("policy,reps,mean_total_regret,min,q1,median,q3,max\n");
    for s in summaries {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            s.label,
            s.total_regrets.len(),
            fmt_f64(s.mean_total_regret),
            fmt_f64(s.min),
            fmt_f64(s.q1),
            fmt_f64(s.median),
            fmt_f64(s.q3),
            fmt_f64(s.max),
        );
    }
    write_file(path, &out)?;
    Ok(entry(path, summaries.len() as u64))
}

/// Write the per-step mean regret curve and correct-selection percentage of
/// every policy.
pub fn write_curves(path: &Path, summaries: &[SummaryStats]) -> Result<FileEntry, CsvError> {
    let mut out = String::from("policy,t,mean_cum_regret,pct_correct\n");
    let mut rows = 0u64;
    for s in summaries {
        for (i, (&cum, &pct)) in s.mean_cum_regret.iter().zip(&s.pct_correct).enumerate() {
            let _ = writeln!(out, "{},{},{},{}", s.label, i + 1, fmt_f64(cum), fmt_f64(pct));
            rows += 1;
        }
    }
    write_file(path, &out)?;
    Ok(entry(path, rows))
}

pub fn write_manifest(path: &Path, manifest: &RunManifest) -> Result<(), CsvError> {
    let json = serde_json::to_string_pretty(manifest).expect("manifest serializes");
    write_file(path, &json)
}

fn entry(path: &Path, rows: u64) -> FileEntry {
    FileEntry {
        name: path
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_default(),
        rows,
    }
}
