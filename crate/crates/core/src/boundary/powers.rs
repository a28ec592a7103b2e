use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::hyperbolic::{hyperbolic_data, is_transverse, make_transverse_family, FixedPoints, SearchBounds};
use super::point::BoundaryPoint;
use super::prefix_set::PrefixSet;
use crate::error::{Error, Result};
use crate::group::{Element, Group, GroupSpec, Order};

/// Finite set of nonempty, pairwise non-nested prefixes. An element lies in the
/// cylinder when its reduced word begins with one of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cylinder {
    prefixes: Vec<Element>,
}

impl Cylinder {
    pub fn new(mut prefixes: Vec<Element>) -> Result<Self> {
        prefixes.sort();
        prefixes.dedup();
        if prefixes.iter().any(Element::is_identity) {
            return Err(Error::domain("cylinder prefixes must be nonempty"));
        }
        for (i, p) in prefixes.iter().enumerate() {
            for q in &prefixes[i + 1..] {
                if q.starts_with(p) {
                    return Err(Error::domain(format!("cylinder prefixes {p} and {q} are nested")));
                }
            }
        }
        Ok(Cylinder { prefixes })
    }

    pub fn prefixes(&self) -> &[Element] {
        &self.prefixes
    }

    pub fn contains(&self, g: &Element) -> bool {
        self.prefixes.iter().any(|p| g.starts_with(p))
    }

    pub fn contains_point(&self, x: &BoundaryPoint) -> bool {
        self.prefixes.iter().any(|p| x.starts_with(p))
    }

    pub fn to_set(&self, group: &Group) -> PrefixSet {
        PrefixSet::cylinders(group, &self.prefixes)
    }
}

/// Certificate for the Powers partition condition at `(F, N)`:
/// `fC` misses `C` for every `f` in `F`, and the translates `gamma_j D` of
/// `D = G \ C` are pairwise disjoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowersData {
    pub f_set: Vec<Element>,
    pub n: usize,
    pub cylinder: Cylinder,
    pub gammas: Vec<Element>,
}

impl PowersData {
    pub fn new(f_set: Vec<Element>, cylinder: Cylinder, gammas: Vec<Element>) -> Result<Self> {
        let mut f_set = f_set;
        f_set.sort();
        f_set.dedup();
        if f_set.iter().any(Element::is_identity) {
            return Err(Error::domain("F must not contain the identity"));
        }
        if gammas.is_empty() {
            return Err(Error::domain("N must be at least 1"));
        }
        for (i, g) in gammas.iter().enumerate() {
            if gammas[..i].contains(g) {
                return Err(Error::domain(format!("gamma {g} repeated")));
            }
        }
        Ok(PowersData { n: gammas.len(), f_set, cylinder, gammas })
    }

    pub fn to_doc(&self) -> PowersDoc {
        let s = |v: &[Element]| v.iter().map(ToString::to_string).collect();
        PowersDoc {
            f_set: s(&self.f_set),
            n: self.n,
            cylinder_prefixes: s(self.cylinder.prefixes()),
            gammas: s(&self.gammas),
        }
    }

    pub fn from_doc(group: &Group, doc: &PowersDoc) -> Result<Self> {
        let p = |v: &[String]| v.iter().map(|s| group.parse(s)).collect::<Result<Vec<_>>>();
        let data = PowersData::new(p(&doc.f_set)?, Cylinder::new(p(&doc.cylinder_prefixes)?)?, p(&doc.gammas)?)?;
        if data.n != doc.n {
            return Err(Error::malformed(format!("N = {} but {} gammas given", doc.n, data.gammas.len())));
        }
        Ok(data)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("serializable")
    }

    pub fn from_json(group: &Group, text: &str) -> Result<Self> {
        Self::from_doc(group, &serde_json::from_str(text)?)
    }
}

/// JSON form of [`PowersData`] with words spelled like `"a*b^-1"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowersDoc {
    #[serde(rename = "F")]
    pub f_set: Vec<String>,
    #[serde(rename = "N")]
    pub n: usize,
    pub cylinder_prefixes: Vec<String>,
    pub gammas: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerifyMode {
    Exact,
    Sampled,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// The offending element of `C` (first condition) or `D` (second).
    pub element: String,
    /// `f` for the first condition, `gamma_j` / `gamma_k` indices for the second.
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionCheck {
    pub condition: String,
    pub pass: bool,
    pub checked: usize,
    pub witness: Option<Witness>,
    pub citation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub mode: VerifyMode,
    pub radius: Option<usize>,
    pub checks: Vec<ConditionCheck>,
    pub pass: bool,
}

const COND_F: &str = "fC and C are disjoint for every f in F";
const COND_D: &str = "gamma_j D and gamma_k D are disjoint for j != k";
const CITE_POWERS: &str = "Powers property: partition G = C u D with translates";

/// Checks both Powers conditions, exactly over the whole group or by brute
/// force over the ball of radius `radius`.
pub fn verify_powers_data(
    group: &Group,
    data: &PowersData,
    radius: usize,
    mode: VerifyMode,
) -> Result<VerificationReport> {
    let checks = match mode {
        VerifyMode::Exact => verify_exact(group, data),
        VerifyMode::Sampled => verify_sampled(group, data, radius)?,
    };
    let pass = checks.iter().all(|c| c.pass);
    Ok(VerificationReport { mode, radius: (mode == VerifyMode::Sampled).then_some(radius), checks, pass })
}

fn verify_exact(group: &Group, data: &PowersData) -> Vec<ConditionCheck> {
    let c = data.cylinder.to_set(group);
    let d = c.complement(group);

    let mut first = ConditionCheck {
        condition: COND_F.into(),
        pass: true,
        checked: data.f_set.len(),
        witness: None,
        citation: CITE_POWERS.into(),
    };
    for f in &data.f_set {
        let overlap = c.translate(group, f).intersection(group, &c);
        if let Some(x) = overlap.witness() {
            first.pass = false;
            let pre = group.multiply(&group.invert(f), &x);
            first.witness = Some(Witness { element: pre.to_string(), detail: format!("f = {f}, f*c = {x}") });
            break;
        }
    }

    let translates: Vec<PrefixSet> = data.gammas.par_iter().map(|g| d.translate(group, g)).collect();
    let mut second = ConditionCheck {
        condition: COND_D.into(),
        pass: true,
        checked: data.n * (data.n - 1) / 2,
        witness: None,
        citation: CITE_POWERS.into(),
    };
    'outer: for j in 0..data.n {
        for k in j + 1..data.n {
            if let Some(x) = translates[j].intersection(group, &translates[k]).witness() {
                second.pass = false;
                let pre = group.multiply(&group.invert(&data.gammas[j]), &x);
                second.witness = Some(Witness {
                    element: pre.to_string(),
                    detail: format!("j = {}, k = {}, common point {x}", j + 1, k + 1),
                });
                break 'outer;
            }
        }
    }
    vec![first, second]
}

fn verify_sampled(group: &Group, data: &PowersData, radius: usize) -> Result<Vec<ConditionCheck>> {
    let ball = group.enumerate_ball(radius)?;
    let cyl = &data.cylinder;

    let bad_c = ball
        .elements()
        .par_iter()
        .find_first(|c| cyl.contains(c) && data.f_set.iter().any(|f| cyl.contains(&group.multiply(f, c))));
    let first = ConditionCheck {
        condition: COND_F.into(),
        pass: bad_c.is_none(),
        checked: ball.len(),
        witness: bad_c.map(|c| {
            let f = data.f_set.iter().find(|f| cyl.contains(&group.multiply(f, c))).unwrap();
            Witness { element: c.to_string(), detail: format!("f = {f}, f*c = {}", group.multiply(f, c)) }
        }),
        citation: CITE_POWERS.into(),
    };

    // x lies in gamma_j D iff gamma_j^-1 x lies outside C
    let inverses: Vec<Element> = data.gammas.iter().map(|g| group.invert(g)).collect();
    let owners = |x: &Element| -> Vec<usize> {
        (0..data.n).filter(|&j| !cyl.contains(&group.multiply(&inverses[j], x))).take(2).collect()
    };
    let bad_x = ball.elements().par_iter().find_first(|x| owners(x).len() > 1);
    let second = ConditionCheck {
        condition: COND_D.into(),
        pass: bad_x.is_none(),
        checked: ball.len(),
        witness: bad_x.map(|x| {
            let js = owners(x);
            let d = group.multiply(&inverses[js[0]], x);
            Witness {
                element: d.to_string(),
                detail: format!("j = {}, k = {}, common point {x}", js[0] + 1, js[1] + 1),
            }
        }),
        citation: CITE_POWERS.into(),
    };
    Ok(vec![first, second])
}

/// Whether the free product satisfies `(|G_1| - 1)(|G_2| - 1) >= 2`, or has
/// at least three factors, or is a non-abelian free group.
pub fn supports_powers_construction(spec: &GroupSpec) -> bool {
    match spec {
        GroupSpec::Free { rank } => *rank >= 2,
        GroupSpec::FreeProduct { orders } if orders.len() >= 3 => true,
        GroupSpec::FreeProduct { orders } => {
            let weight = |o: &Order| match o {
                Order::Infinite => u64::MAX,
                Order::Finite(n) => *n as u64 - 1,
            };
            weight(&orders[0]).saturating_mul(weight(&orders[1])) >= 2
        }
        GroupSpec::Coxeter { .. } => false,
    }
}

/// Smallest prefix `p` (by length, then lex) with `f Cyl(p)` disjoint from `Cyl(p)` for all `f`.
fn find_separating_prefix(group: &Group, f_set: &[Element], bounds: &SearchBounds) -> Result<Element> {
    let mut level = vec![Element::identity()];
    for _ in 1..=bounds.max_prefix_len {
        let mut next = Vec::with_capacity(level.len() * group.atoms().len());
        for w in &level {
            for &a in group.atoms() {
                if w.last().is_none_or(|l| group.compatible(l, a)) {
                    let mut atoms = w.atoms().to_vec();
                    atoms.push(a);
                    next.push(Element::from_reduced(atoms));
                }
            }
        }
        let found = next.par_iter().find_first(|p| {
            let c = PrefixSet::cylinders(group, [*p]);
            f_set.iter().all(|f| c.translate(group, f).is_disjoint(group, &c))
        });
        if let Some(p) = found {
            return Ok(p.clone());
        }
        level = next;
    }
    Err(Error::ConstructionFailed {
        bound: bounds.max_prefix_len,
        reason: "no cylinder prefix is moved off itself by every element of F".into(),
    })
}

/// First transverse pair of cyclically reduced hyperbolic elements in B(3).
fn transverse_pair(group: &Group) -> Result<(Element, Element)> {
    let ball = group.enumerate_ball(3)?;
    let hyper: Vec<&Element> =
        ball.iter().filter(|g| group.cyclic_core(g).len() == g.len() && hyperbolic_data(group, g).is_ok()).collect();
    for (i, h1) in hyper.iter().enumerate() {
        for h2 in &hyper[i + 1..] {
            if is_transverse(group, h1, h2)? {
                return Ok(((*h1).clone(), (*h2).clone()));
            }
        }
    }
    Err(Error::domain(format!("{} has no transverse pair of hyperbolic elements", group.spec())))
}

fn first_separating_depth(points: &[BoundaryPoint], at_least: usize) -> usize {
    let mut depth = at_least;
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            if let Some(l) = p.common_prefix_len(q) {
                depth = depth.max(l + 1);
            }
        }
    }
    depth
}

/// Builds Powers data for `(F, N)` by the ping-pong argument on the space of ends.
///
/// 1. a cylinder `C = Cyl(p)` with `fC` disjoint from `C` for all `f` in `F`;
/// 2. `N + 1` pairwise transverse hyperbolic elements, the first one (`gamma`)
///    conjugated so that its range lies in `C`;
/// 3. the other `N` conjugated by a power of `gamma` until all their fixed
///    points lie in `C`;
/// 4. each raised to a power that maps `D` into a small cylinder around its
///    range, these cylinders being pairwise disjoint.
///
/// The result is re-verified exactly before it is returned.
pub fn construct_powers_data(group: &Group, f_set: &[Element], n: usize, bounds: &SearchBounds) -> Result<PowersData> {
    if !supports_powers_construction(group.spec()) {
        return Err(Error::domain(format!(
            "{} is not a non-abelian free group or a free product with (|G1|-1)(|G2|-1) >= 2",
            group.spec()
        )));
    }
    if n == 0 {
        return Err(Error::domain("N must be at least 1"));
    }
    if f_set.iter().any(Element::is_identity) {
        return Err(Error::domain("F must not contain the identity"));
    }
    if let Some(bad) = f_set.iter().find(|f| !group.is_reduced(f.atoms())) {
        return Err(Error::malformed(format!("{bad:?} is not a reduced word of {}", group.spec())));
    }

    let p = find_separating_prefix(group, f_set, bounds)?;
    let cylinder = Cylinder::new(vec![p.clone()])?;
    let c_set = cylinder.to_set(group);
    let d_set = c_set.complement(group);

    let (h1, h2) = transverse_pair(group)?;
    let mut family = make_transverse_family(group, &h1, &h2, n + 1, bounds)?;

    // Move the range of the auxiliary element into C, conjugating the whole
    // family so transversality is kept.
    let range0 = hyperbolic_data(group, &family[0])?.range;
    let ball = group.enumerate_ball(p.len() + 2)?;
    let t = ball
        .iter()
        .find(|t| cylinder.contains_point(&range0.translate(group, t)))
        .ok_or_else(|| Error::ConstructionFailed {
            bound: p.len() + 2,
            reason: "no short element moves the auxiliary range into C".into(),
        })?
        .clone();
    for g in family.iter_mut() {
        *g = group.conjugate(g, &t);
    }
    let aux = family.remove(0);

    let fixed: Vec<FixedPoints> = family.iter().map(|g| hyperbolic_data(group, g)).collect::<Result<_>>()?;
    let m = (0..=bounds.max_exponent)
        .find(|&m| {
            let push = group.pow(&aux, m as i64);
            fixed.iter().all(|f| {
                cylinder.contains_point(&f.source.translate(group, &push))
                    && cylinder.contains_point(&f.range.translate(group, &push))
            })
        })
        .ok_or_else(|| Error::ConstructionFailed {
            bound: bounds.max_exponent,
            reason: "conjugating by powers of the auxiliary element did not bring all fixed points into C".into(),
        })?;
    let push = group.pow(&aux, m as i64);
    let family: Vec<Element> = family.iter().map(|g| group.conjugate(g, &push)).collect();
    let fixed: Vec<FixedPoints> = family.iter().map(|g| hyperbolic_data(group, g)).collect::<Result<_>>()?;

    let points: Vec<BoundaryPoint> = fixed.iter().flat_map(|f| [f.source.clone(), f.range.clone()]).collect();
    let depth = first_separating_depth(&points, p.len());

    // each power gains at least one atom of the range, so the needed exponent
    // grows with the target depth and the prefix length
    let max_power = bounds.max_exponent + depth + p.len();
    let gammas = family
        .par_iter()
        .zip(fixed.par_iter())
        .map(|(g, f)| {
            let target = PrefixSet::cylinders(group, [&f.range.truncate(depth)]);
            let mut power = g.clone();
            for _ in 1..=max_power {
                if d_set.translate(group, &power).is_subset(group, &target) {
                    return Ok(power);
                }
                power = group.multiply(&power, g);
            }
            Err(Error::ConstructionFailed {
                bound: max_power,
                reason: format!("no power of {g} maps D into the cylinder around its range"),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let data = PowersData::new(f_set.to_vec(), cylinder, gammas)?;
    let report = verify_powers_data(group, &data, 0, VerifyMode::Exact)?;
    if !report.pass {
        return Err(Error::ConstructionFailed {
            bound: bounds.max_exponent,
            reason: format!("constructed data failed exact verification: {:?}", report.checks),
        });
    }
    Ok(data)
}
