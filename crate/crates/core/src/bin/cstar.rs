use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cstar::report::{exit_code, run, Command, Format, ModeChoice, RunConfig};

#[derive(Parser)]
#[command(name = "cstar", version, about = "Certificates and numerical checks for C*-simplicity of discrete groups")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build Powers data for (F, N) and verify it
    PowersConstruct(Flags),
    /// Verify Powers data read from --cert
    PowersVerify(Flags),
    /// Lower and upper bounds for the norm of a group-algebra element
    Norm(Flags),
    /// Norm of the F_k Markov operator from its radial reduction
    RadialNorm(Flags),
    /// Check the averaging inequality on a certificate
    AveragingCheck(Flags),
    /// Invertibility certificate for U = 1 + X
    InvertCert(Flags),
    /// Kesten bound for diagonal coefficients of unit vectors
    KestenCheck(Flags),
    /// Tits-form classification and C*-simplicity verdict of a Coxeter system
    CoxeterClassify(Flags),
    /// Infinite-conjugacy-class verdict
    Icc(Flags),
    /// Aggregate evidence and conclusion for a group
    SimplicityReport(Flags),
}

#[derive(Args)]
struct Flags {
    /// Group description (TOML)
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Run configuration (TOML); flags override it
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    radius: Option<usize>,
    #[arg(long = "n")]
    n: Option<usize>,
    #[arg(long)]
    epsilon: Option<f64>,
    /// Truncation size of the radial reduction
    #[arg(long)]
    trunc: Option<usize>,
    /// json, csv or table
    #[arg(long)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    /// Powers data (JSON): read by verification, written by construction
    #[arg(long)]
    cert: Option<PathBuf>,
    /// Group-algebra element (JSON map word -> [re, im])
    #[arg(long)]
    element: Option<PathBuf>,
    /// Comma-separated words for F
    #[arg(long = "f")]
    f: Option<String>,
    /// exact, sampled or both
    #[arg(long)]
    mode: Option<ModeChoice>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    ball_cap: Option<u64>,
}

impl Flags {
    fn into_config(self) -> cstar::Result<RunConfig> {
        let cli = RunConfig {
            spec: self.spec,
            radius: self.radius,
            n: self.n,
            epsilon: self.epsilon,
            trunc: self.trunc,
            format: self.format.unwrap_or_default(),
            out: self.out,
            seed: self.seed,
            cert: self.cert,
            element: self.element,
            f: self.f,
            mode: self.mode.unwrap_or_default(),
            samples: self.samples,
            tol: self.tol,
            ball_cap: self.ball_cap,
        };
        match self.config {
            Some(path) => Ok(cli.or(RunConfig::load(path)?)),
            None => Ok(cli),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, flags) = match cli.command {
        Cmd::PowersConstruct(f) => (Command::PowersConstruct, f),
        Cmd::PowersVerify(f) => (Command::PowersVerify, f),
        Cmd::Norm(f) => (Command::Norm, f),
        Cmd::RadialNorm(f) => (Command::RadialNorm, f),
        Cmd::AveragingCheck(f) => (Command::AveragingCheck, f),
        Cmd::InvertCert(f) => (Command::InvertCert, f),
        Cmd::KestenCheck(f) => (Command::KestenCheck, f),
        Cmd::CoxeterClassify(f) => (Command::CoxeterClassify, f),
        Cmd::Icc(f) => (Command::Icc, f),
        Cmd::SimplicityReport(f) => (Command::SimplicityReport, f),
    };
    let result = flags.into_config().and_then(|config| {
        let report = run(command, &config)?;
        if config.out.is_none() {
            print!("{}", report.render(config.format)?);
        }
        eprintln!("{command}: {} in {:.3}s", if report.pass { "pass" } else { "FAIL" }, report.elapsed.as_secs_f64());
        Ok(report)
    });
    if let Err(e) = &result {
        eprintln!("cstar {command}: {e}");
    }
    ExitCode::from(exit_code(&result) as u8)
}
