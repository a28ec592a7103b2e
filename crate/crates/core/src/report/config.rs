use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Table,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "table" | "text" => Ok(Format::Table),
            other => Err(Error::Config(format!("unknown format {other:?}, expected json, csv or table"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeChoice {
    Exact,
    Sampled,
    #[default]
    Both,
}

impl FromStr for ModeChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(ModeChoice::Exact),
            "sampled" => Ok(ModeChoice::Sampled),
            "both" => Ok(ModeChoice::Both),
            other => Err(Error::Config(format!("unknown mode {other:?}, expected exact, sampled or both"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    PowersConstruct,
    PowersVerify,
    Norm,
    RadialNorm,
    AveragingCheck,
    InvertCert,
    KestenCheck,
    CoxeterClassify,
    Icc,
    SimplicityReport,
}

impl Command {
    pub const ALL: [Command; 10] = [
        Command::PowersConstruct,
        Command::PowersVerify,
        Command::Norm,
        Command::RadialNorm,
        Command::AveragingCheck,
        Command::InvertCert,
        Command::KestenCheck,
        Command::CoxeterClassify,
        Command::Icc,
        Command::SimplicityReport,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::PowersConstruct => "powers-construct",
            Command::PowersVerify => "powers-verify",
            Command::Norm => "norm",
            Command::RadialNorm => "radial-norm",
            Command::AveragingCheck => "averaging-check",
            Command::InvertCert => "invert-cert",
            Command::KestenCheck => "kesten-check",
            Command::CoxeterClassify => "coxeter-classify",
            Command::Icc => "icc",
            Command::SimplicityReport => "simplicity-report",
        }
    }

    fn default_radius(self) -> usize {
        match self {
            Command::KestenCheck => 3,
            Command::InvertCert => 4,
            _ => 6,
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Command::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| Error::Config(format!("unknown command {s:?}")))
    }
}

/// Everything a run depends on. Echoed in full into every report.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    /// Group description file (TOML).
    pub spec: Option<PathBuf>,
    pub radius: Option<usize>,
    #[serde(rename = "N")]
    pub n: Option<usize>,
    pub epsilon: Option<f64>,
    /// Truncation size of the radial reduction.
    pub trunc: Option<usize>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub seed: Option<u64>,
    /// Powers data file (JSON), read by verification and written by construction.
    pub cert: Option<PathBuf>,
    /// Group-algebra element file (JSON map word to `[re, im]`).
    pub element: Option<PathBuf>,
    /// Comma-separated words for the finite set `F`.
    pub f: Option<String>,
    pub mode: ModeChoice,
    /// Number of random unit vectors in the Kesten sweep.
    pub samples: Option<usize>,
    /// Eigenvalue tolerance for Coxeter classification.
    pub tol: Option<f64>,
    /// Element cap for balls and supports.
    pub ball_cap: Option<u64>,
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read config {}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    /// Fills every unset field from `other`.
    pub fn or(mut self, other: RunConfig) -> Self {
        macro_rules! fill {
            ($($f:ident),*) => { $( if self.$f.is_none() { self.$f = other.$f; } )* };
        }
        fill!(spec, radius, n, epsilon, trunc, out, seed, cert, element, f, samples, tol, ball_cap);
        if self.format == Format::default() {
            self.format = other.format;
        }
        if self.mode == ModeChoice::default() {
            self.mode = other.mode;
        }
        self
    }

    pub fn validate(&self, command: Command) -> Result<()> {
        if let Some(e) = self.epsilon {
            if !(e > 0.0 && e < 1.0) {
                return Err(Error::Config(format!("epsilon must lie in (0, 1), got {e}")));
            }
        }
        if let Some(t) = self.tol {
            if !(t > 0.0) {
                return Err(Error::Config(format!("tolerance must be positive, got {t}")));
            }
        }
        if self.trunc == Some(0) {
            return Err(Error::Config("truncation size must be at least 1".into()));
        }
        if self.n == Some(0) {
            return Err(Error::Config("N must be at least 1".into()));
        }
        if self.ball_cap == Some(0) {
            return Err(Error::Config("ball cap must be positive".into()));
        }
        for (flag, path) in [("--spec", &self.spec), ("--element", &self.element)] {
            if let Some(p) = path {
                if !p.exists() {
                    return Err(Error::Config(format!("{flag} {} does not exist", p.display())));
                }
            }
        }
        if command != Command::PowersConstruct {
            if let Some(p) = &self.cert {
                if !p.exists() {
                    return Err(Error::Config(format!("--cert {} does not exist", p.display())));
                }
            }
        }
        Ok(())
    }

    pub fn radius_for(&self, command: Command) -> usize {
        self.radius.unwrap_or_else(|| command.default_radius())
    }

    pub fn require_spec(&self) -> Result<&Path> {
        self.spec.as_deref().ok_or_else(|| Error::Config("--spec is required".into()))
    }

    pub fn require_cert(&self) -> Result<&Path> {
        self.cert.as_deref().ok_or_else(|| Error::Config("--cert is required".into()))
    }
}
