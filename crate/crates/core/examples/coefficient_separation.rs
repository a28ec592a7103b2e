//! The diagonal coefficient of xi = (delta_e + i delta_a)/sqrt 2 separates a from e.

use cstar::spectral::{separation_check, separation_value};
use cstar::{Group, Result};

fn main() -> Result<()> {
    let g = Group::free(2)?;
    let ball = g.enumerate_ball(6)?;
    let worst = ball
        .iter()
        .skip(1)
        .map(|a| separation_check(&g, a).map(|r| r.distance_from_one))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(f64::INFINITY, f64::min);
    println!("F_2, B(6) \\ {{e}}: min |phi(a) - 1| = {worst}");

    let d = Group::cyclic_product(&[2, 2])?;
    let a = d.parse("a")?;
    println!("Z/2*Z/2, a^2 = e: phi(a) = {}", separation_value(&d, &a)?);
    println!("F_2, a: phi(a) = {}", separation_value(&g, &g.parse("a")?)?);
    Ok(())
}
