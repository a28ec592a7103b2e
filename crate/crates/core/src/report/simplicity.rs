use serde::Serialize;

use super::config::RunConfig;
use super::run::{make_group, CITE_KESTEN, CITE_NORM};
use super::Claim;
use crate::boundary::{
    construct_powers_data, supports_powers_construction, verify_powers_data, PowersDoc, SearchBounds,
    VerificationReport, VerifyMode,
};
use crate::coxeter::{cstar_verdict, CoxeterReport, CstarVerdict, TitsVerdict};
use crate::error::Result;
use crate::group::{is_icc, GroupSpec, IccVerdict, Order};
use crate::spectral::{norm_bounds, radial_norm, AlgebraElement, NormReport, DEFAULT_TRUNCATION};

const CITE_POWERS_SIMPLE: &str = "Powers groups are C*-simple";
const CITE_AMENABLE: &str = "amenable groups other than {1} are not C*-simple";
const CITE_SIMPLE_IFF: &str = "C*-simple iff the reduced C*-algebra is simple";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    CstarSimple,
    NotCstarSimple,
    Degenerate,
    Unknown,
}

#[derive(Clone, Debug, Serialize)]
pub struct PowersEvidence {
    pub certificate: PowersDoc,
    pub verification: Vec<VerificationReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SimplicityEvidence {
    pub icc: IccVerdict,
    pub powers: Option<PowersEvidence>,
    pub coxeter: Option<CoxeterReport>,
    pub markov_norm: Option<NormReport>,
    pub radial_norm: Option<f64>,
    pub status: Status,
    pub conclusion: String,
    pub citations: Vec<String>,
    pub claims: Vec<Claim>,
}

/// Collects the evidence available for a group and states a conclusion.
pub fn simplicity_report(spec: &GroupSpec, config: &RunConfig, radius: usize) -> Result<SimplicityEvidence> {
    let icc = is_icc(spec);
    let mut claims = Vec::new();
    let mut ev = SimplicityEvidence {
        icc: icc.clone(),
        powers: None,
        coxeter: None,
        markov_norm: None,
        radial_norm: None,
        status: Status::Unknown,
        conclusion: "unknown".into(),
        citations: vec![CITE_SIMPLE_IFF.into()],
        claims: Vec::new(),
    };
    claims.push(Claim::new(format!("icc verdict {:?}", icc.verdict), true, icc.citation.clone()));

    if let GroupSpec::Coxeter { coxeter_matrix } = spec {
        let rep = cstar_verdict(coxeter_matrix)?;
        let affine = rep.components.iter().any(|c| c.classification.verdict == TitsVerdict::Affine);
        (ev.status, ev.conclusion) = match rep.verdict {
            CstarVerdict::CstarSimple => (Status::CstarSimple, "C*-simple (Coxeter, neither finite nor affine)".into()),
            CstarVerdict::NotCstarSimple if affine => (Status::NotCstarSimple, "not C*-simple (affine)".into()),
            CstarVerdict::NotCstarSimple => (Status::NotCstarSimple, "not C*-simple (finite component)".into()),
            CstarVerdict::Degenerate => (Status::Degenerate, "degenerate (trivial group)".into()),
        };
        claims.push(Claim::new(
            format!("Coxeter verdict {:?}", rep.verdict),
            true,
            rep.citations.first().cloned().unwrap_or_else(|| "plumbing".into()),
        ));
        ev.citations.extend(rep.citations.iter().cloned());
        ev.coxeter = Some(rep);
        ev.claims = claims;
        return Ok(ev);
    }

    let group = make_group(spec, config)?;
    let h = AlgebraElement::markov(&group);
    let norm = norm_bounds(&group, &h, radius)?;
    claims.push(Claim::new(
        "Markov operator: compressed lower bound <= l1 upper bound",
        norm.lower <= norm.upper + 1e-9,
        CITE_NORM,
    ));
    ev.markov_norm = Some(norm);
    if let GroupSpec::Free { rank } = spec {
        ev.radial_norm = Some(radial_norm(*rank, config.trunc.unwrap_or(DEFAULT_TRUNCATION))?);
        ev.citations.push(CITE_KESTEN.into());
    }

    if supports_powers_construction(spec) {
        let ball = group.enumerate_ball(1)?;
        let f: Vec<_> = ball.iter().skip(1).cloned().collect();
        let data = construct_powers_data(&group, &f, config.n.unwrap_or(2), &SearchBounds::default())?;
        let verification = vec![
            verify_powers_data(&group, &data, radius, VerifyMode::Exact)?,
            verify_powers_data(&group, &data, radius, VerifyMode::Sampled)?,
        ];
        let ok = verification.iter().all(|r| r.pass);
        claims.push(Claim::new("Powers certificate for F = B(1) \\ {e} verifies", ok, CITE_POWERS_SIMPLE));
        ev.powers = Some(PowersEvidence { certificate: data.to_doc(), verification });
        if ok {
            ev.status = Status::CstarSimple;
            ev.conclusion = "C*-simple (Powers)".into();
            ev.citations.push(CITE_POWERS_SIMPLE.into());
        }
    } else {
        let amenable = match spec {
            GroupSpec::Free { rank: 1 } => Some("infinite cyclic"),
            GroupSpec::FreeProduct { orders } if orders[..] == [Order::Finite(2), Order::Finite(2)] => {
                Some("infinite dihedral")
            }
            _ => None,
        };
        if let Some(which) = amenable {
            ev.status = Status::NotCstarSimple;
            ev.conclusion = format!("not C*-simple (amenable, {which})");
            ev.citations.push(CITE_AMENABLE.into());
            claims.push(Claim::new(format!("{which} group is amenable and nontrivial"), true, CITE_AMENABLE));
        }
    }
    ev.claims = claims;
    Ok(ev)
}
