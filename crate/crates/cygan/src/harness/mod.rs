//! Seeded verification campaigns: random samplers plus the suites that
//! exercise the Ptolemaean inequality, the equality cases on R-circles,
//! the triangle inequality and its equality locus, the invariance of the
//! cross-ratio pair, and the Hermitian-form oracles.
//!
//! Campaigns are deterministic: every sample index derives an independent
//! RNG substream, so identical configurations produce identical reports
//! (apart from the elapsed-time field) regardless of evaluation order.

pub mod report;
pub mod sampler;
pub mod suites;

pub use report::{CampaignReport, SampleRow, ViolationRecord};
pub use sampler::{sample_point, substream, Region};
pub use suites::{
    check_equivalent_ptolemaean_form, check_inequality_suite, check_invariance_suite,
    check_oracle_suite, check_ptolemaean_inequality, check_ptolemaeus_suite, check_triangle_suite,
    CampaignOutput,
};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Inequality,
    Equality,
    Triangle,
    Invariance,
    Oracle,
    All,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Inequality => "inequality",
            Self::Equality => "equality",
            Self::Triangle => "triangle",
            Self::Invariance => "invariance",
            Self::Oracle => "oracle",
            Self::All => "all",
        }
    }
}

impl std::fmt::Display for Suite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inequality" => Ok(Self::Inequality),
            "equality" => Ok(Self::Equality),
            "triangle" => Ok(Self::Triangle),
            "invariance" => Ok(Self::Invariance),
            "oracle" => Ok(Self::Oracle),
            "all" => Ok(Self::All),
            _ => Err(Error::Parse(format!("unknown suite `{s}`"))),
        }
    }
}

/// Configuration of a campaign run.
#[derive(Debug, Clone)]
pub struct CampaignConfig {
    pub seed: u64,
    pub samples: usize,
    /// Relative tolerance of the theorem suites (the oracle suite is pinned
    /// at 1e-12).
    pub tolerance: f64,
    pub suite: Suite,
    /// Half-width of the sampling box for coordinates.
    pub coordinate_scale: f64,
    /// Collect one row per sample for CSV output.
    pub collect_rows: bool,
}

impl CampaignConfig {
    pub fn new(suite: Suite) -> Self {
        Self {
            seed: 0,
            samples: 10_000,
            tolerance: 1e-9,
            suite,
            coordinate_scale: 10.0,
            collect_rows: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::Parse("samples must be at least 1".into()));
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(Error::Parse("tolerance must be positive".into()));
        }
        if self.coordinate_scale.is_nan() || self.coordinate_scale <= 0.0 {
            return Err(Error::Parse("coordinate scale must be positive".into()));
        }
        Ok(())
    }
}

/// Run the configured suite (or all five, in a fixed order).
pub fn run_campaign(cfg: &CampaignConfig) -> Result<Vec<CampaignOutput>> {
    cfg.validate()?;
    let outputs = match cfg.suite {
        Suite::Inequality => vec![check_inequality_suite(cfg)],
        Suite::Equality => vec![check_ptolemaeus_suite(cfg)],
        Suite::Triangle => vec![check_triangle_suite(cfg)],
        Suite::Invariance => vec![check_invariance_suite(cfg)],
        Suite::Oracle => vec![check_oracle_suite(cfg)],
        Suite::All => vec![
            check_inequality_suite(cfg),
            check_ptolemaeus_suite(cfg),
            check_triangle_suite(cfg),
            check_invariance_suite(cfg),
            check_oracle_suite(cfg),
        ],
    };
    Ok(outputs)
}
