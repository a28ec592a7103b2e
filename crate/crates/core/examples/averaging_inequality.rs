//! Averaging an element over Powers translates shrinks its norm by 2/sqrt(N).

use cstar::boundary::{construct_powers_data, SearchBounds};
use cstar::spectral::{averaging_inequality_check, coeff, rational, AlgebraElement};
use cstar::{Group, Result};

fn main() -> Result<()> {
    let g = Group::free(2)?;
    let f = vec![g.parse("a")?, g.parse("b*a")?];
    let x = AlgebraElement::from_terms([
        (f[0].clone(), coeff(rational(1, 2), rational(0, 1))),
        (f[1].clone(), coeff(rational(0, 1), rational(-1, 3))),
    ]);
    for n in [2, 4, 16] {
        let data = construct_powers_data(&g, &f, n, &SearchBounds::default())?;
        let rep = averaging_inequality_check(&g, &x, &data, 6)?;
        println!(
            "N={n:2}: compressed ||Y'|| = {:.6} <= ceiling {:.6}; ranges disjoint over {} points: {}",
            rep.norm.lower, rep.ceiling, rep.range_points, rep.ranges_disjoint
        );
    }
    Ok(())
}
