//! Enumerate Cayley balls and multiply in normal form.

use cstar::{Group, Result};

fn main() -> Result<()> {
    let f2 = Group::free(2)?;
    let ball = f2.enumerate_ball(2)?;
    println!("F_2: |B(2)| = {}", ball.len());
    for r in 0..=2 {
        let words: Vec<String> = ball.sphere(r).iter().map(|g| g.to_string()).collect();
        println!("  S({r}) = {}", words.join(" "));
    }

    let p = Group::cyclic_product(&[2, 3])?;
    println!("Z/2*Z/3 sphere sizes up to 8: {:?}", p.sphere_sizes(8));
    let x = p.parse("a*b")?;
    let y = p.parse("b*a")?;
    println!("(a*b)(b*a) = {}", p.multiply(&x, &y));
    println!("(a*b)^3 = {}, order of b*a*b^2: {:?}", p.pow(&x, 3), p.order_of(&p.parse("b*a*b^2")?));
    Ok(())
}
