//! Three views of the norm of the simple random walk operator on F_k.

use cstar::spectral::{markov_moment, norm_bounds, radial_norm, AlgebraElement, DEFAULT_TRUNCATION};
use cstar::{Group, Result};
use num::ToPrimitive;

fn main() -> Result<()> {
    for k in 1..=4 {
        let r = radial_norm(k, DEFAULT_TRUNCATION)?;
        let closed = ((2 * k - 1) as f64).sqrt() / k as f64;
        println!("k={k}: radial {r:.10}  sqrt(2k-1)/k {closed:.10}");
    }

    let g = Group::free(2)?;
    let h = AlgebraElement::markov(&g);
    for r in [2, 4, 6, 8] {
        let rep = norm_bounds(&g, &h, r)?;
        println!("R={r}: {:.8} <= ||h|| <= {}  ({} iterations)", rep.lower, rep.upper, rep.iterations);
    }

    for n in [1, 2, 10, 100] {
        let m = markov_moment(2, n)?;
        let root = m.to_f64().unwrap().powf(1.0 / (2 * n) as f64);
        println!("moment(h,{n}) = {}  ^(1/2n) = {root:.6}", if n <= 2 { m.to_string() } else { "...".into() });
    }
    Ok(())
}
