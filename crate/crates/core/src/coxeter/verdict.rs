use serde::{Deserialize, Serialize};

use super::matrix::CoxeterMatrix;
use super::tits::{classify_with_tol, irreducible_components, TitsClassification, TitsVerdict, DEFAULT_TOL};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CstarVerdict {
    CstarSimple,
    NotCstarSimple,
    /// Empty generating set: the trivial group is flagged, not decided.
    Degenerate,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComponentEvidence {
    pub generators: Vec<usize>,
    pub classification: TitsClassification,
    pub reason: String,
    pub citation: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoxeterReport {
    pub verdict: CstarVerdict,
    pub components: Vec<ComponentEvidence>,
    pub reason: String,
    pub citations: Vec<String>,
    /// Results the verdict relies on without checking them here.
    pub cited_hypotheses: Vec<String>,
}

const CITE_IRREDUCIBLE: &str = "irreducible Coxeter groups that are neither finite nor affine are C*-simple";
const CITE_PRODUCT: &str = "direct products of C*-simple groups are C*-simple";
const CITE_AMENABLE_NORMAL: &str = "a nontrivial amenable normal subgroup obstructs C*-simplicity";
const CITE_TITS: &str =
    "Tits form criterion: finite iff positive definite, affine iff positive semidefinite with nontrivial kernel";

pub fn cstar_verdict(m: &CoxeterMatrix) -> Result<CoxeterReport> {
    cstar_verdict_with_tol(m, DEFAULT_TOL)
}

/// Decides C*-simplicity of a Coxeter group component by component.
pub fn cstar_verdict_with_tol(m: &CoxeterMatrix, tol: f64) -> Result<CoxeterReport> {
    if m.rank() == 0 {
        return Ok(CoxeterReport {
            verdict: CstarVerdict::Degenerate,
            components: Vec::new(),
            reason: "empty generating set: trivial group".into(),
            citations: vec!["plumbing".into()],
            cited_hypotheses: Vec::new(),
        });
    }
    let mut components = Vec::new();
    for gens in irreducible_components(m) {
        let classification = classify_with_tol(&m.restrict(&gens), tol)?;
        let (reason, citation) = match classification.verdict {
            TitsVerdict::Finite => {
                ("finite component: a nontrivial finite normal subgroup (direct factor)", CITE_AMENABLE_NORMAL)
            }
            TitsVerdict::Affine => (
                "affine component: virtually free abelian direct factor, an amenable normal subgroup",
                CITE_AMENABLE_NORMAL,
            ),
            TitsVerdict::Other => ("neither finite nor affine: C*-simple factor", CITE_IRREDUCIBLE),
        };
        components.push(ComponentEvidence {
            generators: gens,
            classification,
            reason: reason.into(),
            citation: citation.into(),
        });
    }

    let all_other = components.iter().all(|c| c.classification.verdict == TitsVerdict::Other);
    let (verdict, reason, citations) = if all_other {
        let reason = if components.len() == 1 {
            "irreducible, neither finite nor affine".to_string()
        } else {
            format!("all {} irreducible factors are neither finite nor affine", components.len())
        };
        (CstarVerdict::CstarSimple, reason, vec![CITE_TITS, CITE_IRREDUCIBLE, CITE_PRODUCT])
    } else {
        let bad = components
            .iter()
            .find(|c| c.classification.verdict != TitsVerdict::Other)
            .expect("some component is finite or affine");
        let kind = match bad.classification.verdict {
            TitsVerdict::Finite => "finite",
            _ => "affine",
        };
        (
            CstarVerdict::NotCstarSimple,
            format!("{kind} component on generators {:?}", bad.generators),
            vec![CITE_TITS, CITE_AMENABLE_NORMAL],
        )
    };
    let cited_hypotheses = if verdict == CstarVerdict::CstarSimple {
        vec!["faithfulness of the quotient geometric representation and Zariski density of its image (cited, not computed)".into()]
    } else {
        Vec::new()
    };
    Ok(CoxeterReport {
        verdict,
        components,
        reason,
        citations: citations.into_iter().map(String::from).collect(),
        cited_hypotheses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Order;

    fn t237() -> CoxeterMatrix {
        CoxeterMatrix::triangle(Order::Finite(2), Order::Finite(3), Order::Finite(7))
    }

    #[test]
    fn examples() {
        assert_eq!(cstar_verdict(&t237()).unwrap().verdict, CstarVerdict::CstarSimple);
        assert_eq!(cstar_verdict(&CoxeterMatrix::affine_a(2)).unwrap().verdict, CstarVerdict::NotCstarSimple);
        let r = cstar_verdict(&CoxeterMatrix::a(1).direct_sum(&t237())).unwrap();
        assert_eq!(r.verdict, CstarVerdict::NotCstarSimple);
        assert_eq!(r.components.len(), 2);
        assert_eq!(r.components[0].classification.verdict, TitsVerdict::Finite);
    }

    #[test]
    fn product_of_hyperbolic_components() {
        let m = t237().direct_sum(&CoxeterMatrix::universal(3));
        let r = cstar_verdict(&m).unwrap();
        assert_eq!(r.verdict, CstarVerdict::CstarSimple);
        assert!(r.citations.iter().any(|c| c == CITE_PRODUCT));
    }

    #[test]
    fn empty_is_degenerate() {
        let m = CoxeterMatrix::new(vec![]).unwrap();
        assert_eq!(cstar_verdict(&m).unwrap().verdict, CstarVerdict::Degenerate);
    }
}
