//! Fixed points of hyperbolic elements on the space of ends.

use cstar::boundary::{hyperbolic_data, is_transverse, make_transverse_family, primitive_root, SearchBounds};
use cstar::{Group, Result};

fn main() -> Result<()> {
    let g = Group::free(2)?;
    for w in ["a", "a*b", "b*a^2*b^-1"] {
        let x = g.parse(w)?;
        let fp = hyperbolic_data(&g, &x)?;
        let (root, k) = primitive_root(&g, &x)?;
        println!("{w}: source {}  range {}  root ({root})^{k}", fp.source, fp.range);
    }
    let (a, b) = (g.parse("a")?, g.parse("b")?);
    println!("a, b transverse: {}", is_transverse(&g, &a, &b)?);
    println!("a, a^2 transverse: {}", is_transverse(&g, &a, &g.parse("a^2")?)?);
    let family = make_transverse_family(&g, &a, &b, 4, &SearchBounds::default())?;
    let names: Vec<String> = family.iter().map(|x| x.to_string()).collect();
    println!("pairwise transverse: {}", names.join(", "));

    let p = Group::cyclic_product(&[2, 3])?;
    match hyperbolic_data(&p, &p.parse("b*a*b^2")?) {
        Ok(_) => println!("unexpected"),
        Err(e) => println!("Z/2*Z/3: {e}"),
    }
    Ok(())
}
