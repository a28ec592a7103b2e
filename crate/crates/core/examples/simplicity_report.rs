//! Drive the report layer directly, as the CLI does.

use cstar::report::{run, Command, Format, RunConfig};
use cstar::Result;

fn main() -> Result<()> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/specs");
    for spec in ["f2", "z2_z2", "z2_z3", "affine_a2", "triangle_237"] {
        let config = RunConfig {
            spec: Some(format!("{dir}/{spec}.toml").into()),
            radius: Some(4),
            format: Format::Table,
            ..Default::default()
        };
        let report = run(Command::SimplicityReport, &config)?;
        println!("{spec:14} {}", report.results["conclusion"].as_str().unwrap_or("?"));
    }
    Ok(())
}
