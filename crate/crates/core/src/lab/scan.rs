use std::collections::BTreeMap;
use std::io::Write;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;

use super::{full_check, random_algebra, AlgebraReport, LabError, ScanConfig, PRNG_ID};
use crate::exact_linalg::{Field, FieldSpec, PrimeField, Rationals};
use crate::resolution::ResolutionLimits;

/// One line of the results file.
#[derive(Clone, Debug, Serialize)]
pub struct ScanRecord {
    pub seed: u64,
    pub sample: usize,
    pub timestamp: Option<u64>,
    pub prng: &'static str,
    /// `"ok"` or `"over_budget"`
    pub status: &'static str,
    pub degenerate_redraws: usize,
    pub oversize_redraws: usize,
    pub report: Option<AlgebraReport>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub prng: String,
    pub seed: u64,
    pub nilpotency: u32,
    pub exploratory: bool,
    pub samples: usize,
    pub completed: usize,
    pub over_budget: usize,
    pub degenerate_redraws: usize,
    pub oversize_redraws: usize,
    pub classifications: BTreeMap<String, usize>,
    pub flags: BTreeMap<String, usize>,
    pub violations: usize,
}

impl ScanSummary {
    /// Exit status of a scan: nonzero iff a violation flag was raised.
    pub fn has_violations(&self) -> bool {
        self.violations > 0
    }
}

fn timestamp() -> u64 {
    if let Some(t) = std::env::var("SOURCE_DATE_EPOCH").ok().and_then(|s| s.parse().ok()) {
        return t;
    }
    SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs())
}

/// Runs `cfg.count` samples, writing one JSON record per line to `out`.
/// Violations are recorded, never fatal.
pub fn scan<W: Write>(cfg: &ScanConfig, out: &mut W) -> Result<ScanSummary, LabError> {
    match cfg.validate()? {
        FieldSpec::Prime(p) => scan_over(&PrimeField::new(p).map_err(|e| LabError::Config(e.to_string()))?, cfg, out),
        FieldSpec::Rationals => scan_over(&Rationals, cfg, out),
    }
}

fn scan_over<F: Field, W: Write>(field: &F, cfg: &ScanConfig, out: &mut W) -> Result<ScanSummary, LabError> {
    let limits = ResolutionLimits {
        max_entries: cfg.max_entries,
    };
    let mut summary = ScanSummary {
        prng: PRNG_ID.into(),
        seed: cfg.seed,
        nilpotency: cfg.nilpotency,
        exploratory: cfg.exploratory(),
        ..ScanSummary::default()
    };
    for (name, _) in super::Flags::default().named() {
        summary.flags.insert(name.into(), 0);
    }
    for index in 0..cfg.count {
        let sample = random_algebra(field, cfg, index)?;
        summary.samples += 1;
        summary.degenerate_redraws += sample.degenerate_redraws;
        summary.oversize_redraws += sample.oversize_redraws;
        let mut record = ScanRecord {
            seed: cfg.seed,
            sample: index,
            timestamp: cfg.timestamp.then(timestamp),
            prng: PRNG_ID,
            status: "ok",
            degenerate_redraws: sample.degenerate_redraws,
            oversize_redraws: sample.oversize_redraws,
            report: None,
            error: None,
        };
        match full_check(&sample.algebra, Some(&sample.presentation), cfg.horizon, &limits) {
            Ok(report) => {
                summary.completed += 1;
                *summary.classifications.entry(report.classification.to_string()).or_default() += 1;
                for (name, on) in report.flags.named() {
                    if on {
                        *summary.flags.entry(name.into()).or_default() += 1;
                    }
                }
                if report.flags.any_violation() {
                    summary.violations += 1;
                    log::warn!("sample {index}: {}", report.notes.join("; "));
                }
                record.report = Some(report);
            }
            Err(e) if e.is_over_budget() => {
                log::info!("sample {index}: {e}");
                summary.over_budget += 1;
                record.status = "over_budget";
                record.error = Some(e.to_string());
            }
            Err(e) => return Err(e),
        }
        serde_json::to_writer(&mut *out, &record).map_err(std::io::Error::from)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(summary)
}
