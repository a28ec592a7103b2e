//! Tits-form classification and the C*-simplicity verdict for Coxeter systems.

use cstar::coxeter::{classify, cstar_verdict, CoxeterMatrix};
use cstar::{Order, Result};

fn main() -> Result<()> {
    let t237 = || CoxeterMatrix::triangle(Order::Finite(2), Order::Finite(3), Order::Finite(7));
    let cases = [
        ("A_3", CoxeterMatrix::a(3)),
        ("H_3", CoxeterMatrix::h3()),
        ("~A_2", CoxeterMatrix::affine_a(2)),
        ("~G_2", CoxeterMatrix::affine_g2()),
        ("(2,3,7)", t237()),
        ("universal rank 3", CoxeterMatrix::universal(3)),
        ("A_1 + (2,3,7)", CoxeterMatrix::a(1).direct_sum(&t237())),
    ];
    for (name, m) in cases {
        let report = cstar_verdict(&m)?;
        let kinds: Vec<String> =
            report.components.iter().map(|c| format!("{:?}{:?}", c.generators, c.classification.verdict)).collect();
        println!("{name:18} {:16} {}", format!("{:?}", report.verdict), kinds.join(" "));
    }
    let t = classify(&t237())?;
    println!("(2,3,7) eigenvalues: {:?}", t.eigenvalues);
    Ok(())
}
