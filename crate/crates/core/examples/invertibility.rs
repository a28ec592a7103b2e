//! Turn U = 1 + X into V = 1 + Y with ||Y|| < 1 by averaging over Powers data.

use cstar::boundary::SearchBounds;
use cstar::spectral::{invertibility_certificate, rational, real, AlgebraElement};
use cstar::{Group, Result};

fn main() -> Result<()> {
    let g = Group::free(2)?;
    let a = g.parse("a")?;
    let u = AlgebraElement::one().add(&AlgebraElement::basis(a).scale(&real(rational(1, 2))));
    println!("U = {u}");
    let cert = invertibility_certificate(&g, &u, 0.1, 4, &SearchBounds::default())?;
    println!("N = {}, ||Y|| <= {:.6} < {}", cert.n, cert.bound, 1.0 - cert.epsilon);
    println!("trace(V) = 1: {}", cert.trace_v_is_one);
    println!("compressed ||Y|| at R = 4: {:.6}", cert.compressed.lower);
    println!("gammas: {:?}", cert.data.gammas);

    match invertibility_certificate(&g, &AlgebraElement::basis(g.parse("a")?), 0.1, 2, &SearchBounds::default()) {
        Ok(_) => println!("unexpected"),
        Err(e) => println!("U = L(a): {e}"),
    }
    Ok(())
}
