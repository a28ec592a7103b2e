use std::path::Path;
use std::time::Instant;

use num::complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::config::{Command, ModeChoice, RunConfig};
use super::simplicity::simplicity_report;
use super::{Claim, CsvRow, Report};
use crate::boundary::{
    construct_powers_data, verify_powers_data, PowersData, SearchBounds, VerificationReport, VerifyMode,
};
use crate::coxeter::{cstar_verdict_with_tol, CstarVerdict, TitsVerdict, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::group::{ball_cap_from_env, is_icc, Element, Group, GroupSpec};
use crate::spectral::{
    averaging_inequality_check, invertibility_certificate, kesten_bound_check, norm_bounds, radial_norm, rational,
    real, uniform_unit_vector, AlgebraElement, L2Vector, DEFAULT_TRUNCATION,
};

pub(super) const CITE_NORM: &str = "compression to l2(B(R)) bounds the norm from below, l1 from above";
pub(super) const CITE_KESTEN: &str = "Kesten: the Markov operator of F_k has norm sqrt(2k-1)/k";
const CITE_AVERAGE: &str = "averaging over Powers translates: ||Y'|| <= (2/sqrt N) ||X'||";
const CITE_ORTHOGONAL: &str = "averaging over Powers translates: pairwise orthogonal ranges";
const CITE_TRACE: &str = "canonical trace is invariant under conjugation: tr(V) = tr(U) = 1";
const CITE_INVERTIBLE: &str = "||V - 1|| < 1 makes V invertible";

pub(super) fn load_spec(config: &RunConfig) -> Result<GroupSpec> {
    GroupSpec::load(config.require_spec()?)
}

pub(super) fn make_group(spec: &GroupSpec, config: &RunConfig) -> Result<Group> {
    Ok(Group::new(spec)?.with_ball_cap(config.ball_cap.unwrap_or_else(ball_cap_from_env)))
}

fn parse_f(group: &Group, config: &RunConfig) -> Result<Vec<Element>> {
    match &config.f {
        Some(list) => list.split(',').map(str::trim).filter(|w| !w.is_empty()).map(|w| group.parse(w)).collect(),
        None => Ok((0..group.factors().len()).map(|i| group.generator(i)).collect()),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))
}

fn load_element(group: &Group, path: &Path) -> Result<AlgebraElement> {
    AlgebraElement::from_json(group, &read(path)?)
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display())))
}

fn modes(choice: ModeChoice) -> Vec<VerifyMode> {
    match choice {
        ModeChoice::Exact => vec![VerifyMode::Exact],
        ModeChoice::Sampled => vec![VerifyMode::Sampled],
        ModeChoice::Both => vec![VerifyMode::Exact, VerifyMode::Sampled],
    }
}

fn verification_claims(reports: &[VerificationReport]) -> Vec<Claim> {
    reports
        .iter()
        .flat_map(|r| {
            let mode = match r.mode {
                VerifyMode::Exact => "exact".to_string(),
                VerifyMode::Sampled => format!("sampled R={}", r.radius.unwrap_or(0)),
            };
            r.checks.iter().map(move |c| Claim::new(format!("{mode}: {}", c.condition), c.pass, c.citation.clone()))
        })
        .collect()
}

fn verify_all(group: &Group, data: &PowersData, radius: usize, choice: ModeChoice) -> Result<Vec<VerificationReport>> {
    modes(choice).into_iter().map(|m| verify_powers_data(group, data, radius, m)).collect()
}

fn powers_report(
    command: Command,
    config: &RunConfig,
    group: &Group,
    data: &PowersData,
    extra: Value,
) -> Result<Report> {
    let radius = config.radius_for(command);
    let reports = verify_all(group, data, radius, config.mode)?;
    let claims = verification_claims(&reports);
    let pass = claims.iter().all(|c| c.pass);
    let mut results = json!({
        "certificate": data.to_doc(),
        "verification": reports,
    });
    if let (Value::Object(m), Value::Object(e)) = (&mut results, extra) {
        m.extend(e);
    }
    let row = CsvRow {
        group: group.spec().name(),
        operator: "powers-data".into(),
        radius: Some(radius),
        n: Some(data.n),
        pass,
        ..Default::default()
    };
    Ok(Report::new(command, config, Some(group.spec().name()), results, claims).with_rows(vec![row]))
}

fn free_rank(spec: &GroupSpec) -> Result<usize> {
    match spec {
        GroupSpec::Free { rank } => Ok(*rank),
        other => Err(Error::domain(format!("{other} is not a free group"))),
    }
}

/// Runs one command. Timing is recorded in the report but not serialized.
pub fn run(command: Command, config: &RunConfig) -> Result<Report> {
    config.validate(command)?;
    let start = Instant::now();
    let mut report = dispatch(command, config)?;
    report.elapsed = start.elapsed();
    if let Some(out) = &config.out {
        write(out, &report.render(config.format)?)?;
    }
    Ok(report)
}

fn dispatch(command: Command, config: &RunConfig) -> Result<Report> {
    let spec = load_spec(config)?;
    let name = spec.name();
    let radius = config.radius_for(command);
    match command {
        Command::PowersConstruct => {
            let group = make_group(&spec, config)?;
            let f = parse_f(&group, config)?;
            let n = config.n.unwrap_or(2);
            let bounds = SearchBounds::default();
            let data = construct_powers_data(&group, &f, n, &bounds)?;
            if let Some(path) = &config.cert {
                write(path, &data.to_json())?;
            }
            powers_report(command, config, &group, &data, json!({ "search_bounds": bounds }))
        }
        Command::PowersVerify => {
            let group = make_group(&spec, config)?;
            let data = PowersData::from_json(&group, &read(config.require_cert()?)?)?;
            powers_report(command, config, &group, &data, json!({}))
        }
        Command::Norm => {
            let group = make_group(&spec, config)?;
            let (label, x) = match &config.element {
                Some(p) => ("X".to_string(), load_element(&group, p)?),
                None => ("markov".to_string(), AlgebraElement::markov(&group)),
            };
            let rep = norm_bounds(&group, &x, radius)?;
            let pass = rep.lower <= rep.upper + 1e-9;
            let row = CsvRow {
                group: name.clone(),
                operator: label.clone(),
                radius: Some(radius),
                lower: Some(rep.lower),
                upper: Some(rep.upper),
                pass,
                ..Default::default()
            };
            let claims = vec![Claim::new("compressed lower bound <= l1 upper bound", pass, CITE_NORM)];
            let results = json!({ "operator": label, "element": x.to_doc(), "norm": rep });
            Ok(Report::new(command, config, Some(name), results, claims).with_rows(vec![row]))
        }
        Command::RadialNorm => {
            let k = free_rank(&spec)?;
            let trunc = config.trunc.unwrap_or(DEFAULT_TRUNCATION);
            let value = radial_norm(k, trunc)?;
            let closed = ((2 * k - 1) as f64).sqrt() / k as f64;
            let pass = (value - closed).abs() <= 1e-6;
            let claims = vec![Claim::new("radial norm within 1e-6 of sqrt(2k-1)/k", pass, CITE_KESTEN)];
            let results = json!({ "rank": k, "truncation": trunc, "radial_norm": value, "closed_form": closed });
            let row = CsvRow {
                group: name.clone(),
                operator: "markov-radial".into(),
                lower: Some(value),
                upper: Some(1.0),
                pass,
                ..Default::default()
            };
            Ok(Report::new(command, config, Some(name), results, claims).with_rows(vec![row]))
        }
        Command::AveragingCheck => {
            let group = make_group(&spec, config)?;
            let data = PowersData::from_json(&group, &read(config.require_cert()?)?)?;
            let x = match &config.element {
                Some(p) => load_element(&group, p)?,
                None => {
                    let w = real(rational(1, data.f_set.len().max(1) as i64));
                    AlgebraElement::from_terms(data.f_set.iter().map(|f| (f.clone(), w.clone())))
                }
            };
            let rep = averaging_inequality_check(&group, &x, &data, radius)?;
            let claims = vec![
                Claim::new("compressed ||Y'|| <= (2/sqrt N) l1(X') + 1e-9", rep.inequality_holds, CITE_AVERAGE),
                Claim::new(
                    "ranges of P_j lambda(gamma_j) X' lambda(gamma_j)^-1 disjoint",
                    rep.ranges_disjoint,
                    CITE_ORTHOGONAL,
                ),
            ];
            let row = CsvRow {
                group: name.clone(),
                operator: "Y'".into(),
                radius: Some(radius),
                lower: Some(rep.norm.lower),
                upper: Some(rep.norm.upper),
                n: Some(rep.n),
                ceiling: Some(rep.ceiling),
                pass: rep.pass,
            };
            let results = json!({ "element": x.to_doc(), "averaging": rep });
            Ok(Report::new(command, config, Some(name), results, claims).with_rows(vec![row]))
        }
        Command::InvertCert => {
            let group = make_group(&spec, config)?;
            let u = match &config.element {
                Some(p) => load_element(&group, p)?,
                None => {
                    AlgebraElement::one().add(&AlgebraElement::basis(group.generator(0)).scale(&real(rational(1, 2))))
                }
            };
            let epsilon = config.epsilon.unwrap_or(0.1);
            let cert = invertibility_certificate(&group, &u, epsilon, radius, &SearchBounds::default())?;
            if let Some(path) = &config.cert {
                write(path, &serde_json::to_string_pretty(&cert.data)?)?;
            }
            let claims = vec![
                Claim::new("trace(V) = 1 exactly", cert.trace_v_is_one, CITE_TRACE),
                Claim::new("(2/sqrt N) l1(X) < 1 - epsilon", cert.bound < 1.0 - epsilon, CITE_INVERTIBLE),
                Claim::new(
                    "compressed ||Y|| <= (2/sqrt N) l1(X) + 1e-9",
                    cert.compressed.lower <= cert.bound + 1e-9,
                    CITE_AVERAGE,
                ),
            ];
            let row = CsvRow {
                group: name.clone(),
                operator: "Y".into(),
                radius: Some(radius),
                lower: Some(cert.compressed.lower),
                upper: Some(cert.compressed.upper),
                n: Some(cert.n),
                ceiling: Some(cert.bound),
                pass: cert.pass,
            };
            let results = json!({ "U": u.to_doc(), "certificate": cert });
            Ok(Report::new(command, config, Some(name), results, claims).with_rows(vec![row]))
        }
        Command::KestenCheck => {
            let group = make_group(&spec, config)?;
            let ball = group.enumerate_ball(radius)?;
            let samples = config.samples.unwrap_or(100);
            let seed = config.seed.unwrap_or(0);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut vectors = vec![L2Vector::<f64>::delta(Element::identity()), uniform_unit_vector(ball.elements())];
            for _ in 0..samples {
                let v = L2Vector::from_entries(
                    ball.iter()
                        .map(|g| (g.clone(), Complex::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))),
                );
                vectors.push(v.normalized());
            }
            let reports = vectors.iter().map(|v| kesten_bound_check(&group, v)).collect::<Result<Vec<_>>>()?;
            let worst = reports.iter().map(|r| r.average).fold(f64::NEG_INFINITY, f64::max);
            let pass = reports.iter().all(|r| r.pass);
            let norm = reports[0].radial_norm;
            let claims = vec![Claim::new(
                format!("(1/2k) sum_s Re phi(s) <= ||h|| for {} unit vectors", reports.len()),
                pass,
                CITE_KESTEN,
            )];
            let results = json!({
                "vectors": reports.len(),
                "delta_e_average": reports[0].average,
                "uniform_ball_average": reports[1].average,
                "max_average": worst,
                "radial_norm": norm,
                "epsilon": 1.0 - norm,
            });
            let row = CsvRow {
                group: name.clone(),
                operator: "kesten-average".into(),
                radius: Some(radius),
                lower: Some(worst),
                upper: Some(norm),
                pass,
                ..Default::default()
            };
            Ok(Report::new(command, config, Some(name), results, claims).with_rows(vec![row]))
        }
        Command::CoxeterClassify => {
            let GroupSpec::Coxeter { coxeter_matrix } = &spec else {
                return Err(Error::domain(format!("{name} is not a Coxeter system")));
            };
            let rep = cstar_verdict_with_tol(coxeter_matrix, config.tol.unwrap_or(DEFAULT_TOL))?;
            let consistent = rep.verdict != CstarVerdict::CstarSimple
                || rep.components.iter().all(|c| c.classification.verdict == TitsVerdict::Other);
            let mut claims: Vec<Claim> = rep
                .components
                .iter()
                .map(|c| {
                    Claim::new(
                        format!("component {:?}: {:?}", c.generators, c.classification.verdict),
                        true,
                        c.citation.clone(),
                    )
                })
                .collect();
            claims.push(Claim::new(
                format!("verdict {:?} consistent with components", rep.verdict),
                consistent,
                rep.citations.first().cloned().unwrap_or_else(|| "plumbing".into()),
            ));
            Ok(Report::new(command, config, Some(name), serde_json::to_value(&rep)?, claims))
        }
        Command::Icc => {
            let v = is_icc(&spec);
            let claims = vec![Claim::new(format!("icc verdict {:?}", v.verdict), true, v.citation.clone())];
            Ok(Report::new(command, config, Some(name), serde_json::to_value(&v)?, claims))
        }
        Command::SimplicityReport => {
            let evidence = simplicity_report(&spec, config, radius)?;
            let claims = evidence.claims.clone();
            Ok(Report::new(command, config, Some(name), serde_json::to_value(&evidence)?, claims))
        }
    }
}

/// Process exit status: 0 pass, 1 failed assertion, 2 usage or config error, 3 resource cap.
pub fn exit_code(result: &Result<Report>) -> i32 {
    match result {
        Ok(r) if r.pass => 0,
        Ok(_) => 1,
        Err(Error::ResourceCap { .. }) => 3,
        Err(
            Error::Config(_) | Error::Malformed(_) | Error::Io(_) | Error::Json(_) | Error::Toml(_) | Error::Csv(_),
        ) => 2,
        Err(_) => 1,
    }
}
