//! Build Powers data for a finite set F, check it exactly and on a ball, and
//! save it as JSON.

use cstar::boundary::{construct_powers_data, verify_powers_data, SearchBounds, VerifyMode};
use cstar::{Group, Result};

fn main() -> Result<()> {
    let g = Group::free(2)?;
    let f = vec![g.parse("a")?, g.parse("a*b^-1")?, g.parse("b^2*a")?];
    let data = construct_powers_data(&g, &f, 4, &SearchBounds::default())?;
    println!("{}", data.to_json());

    for mode in [VerifyMode::Exact, VerifyMode::Sampled] {
        let report = verify_powers_data(&g, &data, 8, mode)?;
        for c in &report.checks {
            println!("{mode:?}: {} -> {}", c.condition, if c.pass { "ok" } else { "FAILED" });
        }
    }

    let p = Group::cyclic_product(&[2, 3])?;
    let data = construct_powers_data(&p, &[p.parse("a")?, p.parse("b")?], 3, &SearchBounds::default())?;
    let gammas: Vec<String> = data.gammas.iter().map(|x| x.to_string()).collect();
    println!("Z/2*Z/3, C = {:?}, gammas = {gammas:?}", data.to_doc().cylinder_prefixes);
    Ok(())
}
