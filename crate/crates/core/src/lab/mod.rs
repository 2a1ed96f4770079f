//! Random local algebras with `m^c = 0`, the batch of consistency checks run
//! on each of them, and JSONL scans.

mod check;
mod sample;
mod scan;

pub use check::{defect_profile, full_check, AlgebraReport, Flags};
pub use sample::{random_algebra, random_presentation, Sample, ScanConfig, PRNG_ID};
pub use scan::{scan, ScanRecord, ScanSummary};

use thiserror::Error;

use crate::linear_part::LinearPartError;
use crate::presentation::PresentationError;
use crate::resolution::ResolutionError;
use crate::tor_ladder::TorError;

#[derive(Debug, Error)]
pub enum LabError {
    #[error("invalid scan configuration: {0}")]
    Config(String),
    #[error("no admissible sample after {attempts} attempts")]
    SamplingFailed { attempts: usize },
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Resolution(#[from] ResolutionError),
    #[error(transparent)]
    LinearPart(#[from] LinearPartError),
    #[error(transparent)]
    Tor(#[from] TorError),
    #[error("writing results: {0}")]
    Io(#[from] std::io::Error),
}

impl LabError {
    /// True for failures caused by the size caps rather than by bad input.
    pub fn is_over_budget(&self) -> bool {
        matches!(
            self,
            LabError::Resolution(ResolutionError::ResourceCap { .. })
                | LabError::Tor(TorError::ResourceCap { .. })
                | LabError::Presentation(PresentationError::ResourceCap(_))
        )
    }
}
