mod common;

use cstar::boundary::{construct_powers_data, BoundaryPoint, Cylinder, PowersData, PrefixSet, SearchBounds};
use cstar::coxeter::{classify, cstar_verdict, tits_form, CoxeterMatrix, CstarVerdict, TitsVerdict};
use cstar::report::RunConfig;
use cstar::spectral::{
    apply, averaging_inequality_check, coeff, kesten_bound_check, markov_moment, powers_average, radial_norm, rational,
    AlgebraElement, L2Vector,
};
use cstar::{Element, Group, GroupSpec, Order};
use num::complex::Complex64;
use num::{BigRational, ToPrimitive};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn groups() -> Vec<Group> {
    vec![
        Group::free(2).unwrap(),
        Group::cyclic_product(&[2, 3]).unwrap(),
        Group::new(&GroupSpec::free_product(vec![Order::Finite(3), Order::Infinite]).unwrap()).unwrap(),
    ]
}

fn raw_word(max_len: usize) -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..2, -3i64..=3), 0..max_len)
}

fn element(group: &Group, raw: &[(usize, i64)]) -> Element {
    group.reduce(raw).unwrap()
}

fn algebra(group: &Group, terms: &[(Vec<(usize, i64)>, i64, i64, i64)]) -> AlgebraElement {
    AlgebraElement::from_terms(
        terms.iter().map(|(w, re, im, d)| (element(group, w), coeff(rational(*re, *d), rational(*im, *d)))),
    )
}

fn terms() -> impl Strategy<Value = Vec<(Vec<(usize, i64)>, i64, i64, i64)>> {
    prop::collection::vec((raw_word(4), -4i64..=4, -4i64..=4, 1i64..=3), 1..5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn group_axioms(gi in 0usize..3, a in raw_word(8), b in raw_word(8), c in raw_word(8)) {
        let group = &groups()[gi];
        let (x, y, z) = (element(group, &a), element(group, &b), element(group, &c));
        let e = group.identity();
        prop_assert_eq!(group.multiply(&group.multiply(&x, &y), &z), group.multiply(&x, &group.multiply(&y, &z)));
        prop_assert_eq!(group.multiply(&x, &e), x.clone());
        prop_assert_eq!(group.multiply(&e, &x), x.clone());
        prop_assert!(group.multiply(&x, &group.invert(&x)).is_identity());
        prop_assert!(group.is_reduced(x.atoms()));
        prop_assert_eq!(group.parse(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn free_multiplication_matches_letter_arithmetic(a in raw_word(8), b in raw_word(8)) {
        let group = Group::free(2).unwrap();
        let (x, y) = (element(&group, &a), element(&group, &b));
        let product = common::letters(&group.multiply(&x, &y));
        prop_assert_eq!(product, common::mul(&common::letters(&x), &common::letters(&y)));
    }

    #[test]
    fn prefix_set_algebra(
        gi in 0usize..3,
        pa in prop::collection::vec(raw_word(3), 0..4),
        pb in prop::collection::vec(raw_word(3), 0..4),
        g in raw_word(4),
    ) {
        let group = &groups()[gi];
        let ca: Vec<Element> = pa.iter().map(|w| element(group, w)).collect();
        let cb: Vec<Element> = pb.iter().map(|w| element(group, w)).collect();
        let a = PrefixSet::cylinders(group, &ca);
        let b = PrefixSet::cylinders(group, &cb);
        let g = element(group, &g);
        let union = a.union(group, &b);
        let meet = a.intersection(group, &b);
        let comp = a.complement(group);
        let moved = a.translate(group, &g);
        let g_inv = group.invert(&g);
        for x in group.enumerate_ball(5).unwrap().iter() {
            let (ia, ib) = (a.contains(x), b.contains(x));
            prop_assert_eq!(ia, ca.iter().any(|p| x.starts_with(p)));
            prop_assert_eq!(union.contains(x), ia || ib);
            prop_assert_eq!(meet.contains(x), ia && ib);
            prop_assert_eq!(comp.contains(x), !ia);
            prop_assert_eq!(moved.contains(x), a.contains(&group.multiply(&g_inv, x)));
        }
        prop_assert_eq!(a.is_subset(group, &union), true);
        prop_assert_eq!(meet.is_disjoint(group, &a.difference(group, &b)), true);
    }

    #[test]
    fn boundary_translation(gi in 0usize..3, p in raw_word(4), q in raw_word(5), g in raw_word(6)) {
        let group = &groups()[gi];
        let period = group.cyclic_core(&element(group, &q));
        prop_assume!(!period.is_identity());
        let point = BoundaryPoint::new(group, element(group, &p), period.atoms());
        prop_assume!(point.is_ok());
        let point = point.unwrap();
        let g = element(group, &g);
        let moved = point.translate(group, &g);
        for n in [1, 5, 12] {
            let finite = group.multiply(&g, &point.truncate(n + g.len() + 2));
            prop_assert_eq!(moved.truncate(n), finite.prefix(n));
        }
        prop_assert_eq!(moved.translate(group, &group.invert(&g)), point);
    }

    #[test]
    fn translation_is_unitary(gi in 0usize..3, t in terms(), g in raw_word(6)) {
        let group = &groups()[gi];
        let xi: L2Vector = L2Vector::from_entries(algebra(group, &t).terms().map(|(g, z)| (g.clone(), z.clone())));
        let shift = AlgebraElement::basis(element(group, &g));
        let moved = apply(group, &shift, &xi);
        prop_assert_eq!(moved.norm_sqr(), xi.norm_sqr());
        prop_assert_eq!(moved.inner(&moved), xi.inner(&xi));
    }

    #[test]
    fn adjoint_and_trace(gi in 0usize..3, a in terms(), b in terms()) {
        let group = &groups()[gi];
        let (x, y) = (algebra(group, &a), algebra(group, &b));
        prop_assert_eq!(x.adjoint(group).adjoint(group), x.clone());
        prop_assert_eq!(x.mul(group, &y).adjoint(group), y.adjoint(group).mul(group, &x.adjoint(group)));
        let gram = x.adjoint(group).mul(group, &x).trace();
        prop_assert_eq!(gram.re, x.l2_norm_sqr());
        prop_assert_eq!(gram.im, BigRational::from_integer(0.into()));
        prop_assert_eq!(x.mul(group, &y).trace(), y.mul(group, &x).trace());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn tits_form_is_symmetric_with_unit_diagonal(rank in 1usize..6, labels in prop::collection::vec(0u32..9, 15)) {
        let m = random_coxeter(rank, &labels);
        let b = tits_form(&m);
        for i in 0..rank {
            prop_assert_eq!(b[(i, i)], 1.0);
            for j in 0..rank {
                prop_assert_eq!(b[(i, j)], b[(j, i)]);
                prop_assert!(b[(i, j)] >= -1.0 && b[(i, j)] <= 1.0);
            }
        }
    }
}

fn random_coxeter(rank: usize, labels: &[u32]) -> CoxeterMatrix {
    let mut rows = vec![vec![1u32; rank]; rank];
    let mut k = 0;
    for i in 0..rank {
        for j in i + 1..rank {
            let m = match labels[k] {
                0 => 0,
                1 => 2,
                l => l,
            };
            rows[i][j] = m;
            rows[j][i] = m;
            k += 1;
        }
    }
    CoxeterMatrix::from_integers(&rows).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn coxeter_classification_is_permutation_invariant(
        rank in 1usize..6,
        labels in prop::collection::vec(0u32..9, 15),
        perm in Just((0..5).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let m = random_coxeter(rank, &labels);
        let perm: Vec<usize> = perm.into_iter().filter(|&i| i < rank).collect();
        let p = m.permuted(&perm);
        let (c, d) = (classify(&m), classify(&p));
        prop_assume!(c.is_ok() && d.is_ok());
        let (c, d) = (c.unwrap(), d.unwrap());
        prop_assert_eq!(c.verdict, d.verdict);
        prop_assert_eq!(c.kernel_dim, d.kernel_dim);
        for (x, y) in c.eigenvalues.iter().zip(&d.eigenvalues) {
            prop_assert!((x - y).abs() < 1e-9);
        }
        let v = cstar_verdict(&m).unwrap();
        prop_assert_eq!(v.verdict, cstar_verdict(&p).unwrap().verdict);
        if v.verdict == CstarVerdict::CstarSimple {
            prop_assert!(v.components.iter().all(|c| c.classification.verdict == TitsVerdict::Other));
        }
    }

    #[test]
    fn spec_toml_round_trip(kind in 0usize..3, orders in prop::collection::vec(0u32..6, 2..5), rank in 1usize..6) {
        let spec = match kind {
            0 => GroupSpec::free(rank).unwrap(),
            1 => GroupSpec::free_product(
                orders.iter().map(|&o| if o < 2 { Order::Infinite } else { Order::Finite(o) }).collect(),
            ).unwrap(),
            _ => GroupSpec::coxeter(random_coxeter(rank, &[3, 0, 4, 2, 7, 5, 3, 2, 0, 6, 3, 2, 2, 4, 3])),
        };
        prop_assert_eq!(GroupSpec::from_toml(&spec.to_toml()).unwrap(), spec);
    }

    #[test]
    fn algebra_json_round_trip(gi in 0usize..3, t in terms()) {
        let group = &groups()[gi];
        let x = algebra(group, &t);
        prop_assert_eq!(AlgebraElement::from_json(group, &x.to_json()).unwrap(), x);
    }

    #[test]
    fn moments_stay_below_the_radial_norm(k in 2usize..5, n in 1usize..40) {
        let root = markov_moment(k, n).unwrap().to_f64().unwrap().powf(1.0 / (2 * n) as f64);
        prop_assert!(root <= radial_norm(k, 10_000).unwrap() + 1e-9);
    }
}

fn small_f(group: &Group, picks: &[usize]) -> Vec<Element> {
    let pool: Vec<Element> = group.enumerate_ball(2).unwrap().iter().skip(1).cloned().collect();
    let mut f: Vec<Element> = picks.iter().map(|&i| pool[i % pool.len()].clone()).collect();
    f.sort();
    f.dedup();
    f
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn powers_average_keeps_the_trace(gi in 0usize..3, picks in prop::collection::vec(0usize..64, 1..3), n in 2usize..6, t in terms()) {
        let group = &groups()[gi];
        let f = small_f(group, &picks);
        let data = construct_powers_data(group, &f, n, &SearchBounds::default()).unwrap();
        let u = algebra(group, &t);
        prop_assert_eq!(powers_average(group, &u, &data).trace(), u.trace());
        prop_assert_eq!(PowersData::from_json(group, &data.to_json()).unwrap(), data);
    }

    #[test]
    fn averaging_inequality_holds(
        picks in prop::collection::vec(0usize..16, 1..4),
        ni in 0usize..4,
        coeffs in prop::collection::vec((-4i64..=4, -4i64..=4), 3),
    ) {
        let group = Group::free(2).unwrap();
        let f = small_f(&group, &picks);
        let n = [2, 4, 16, 64][ni];
        let mut x = AlgebraElement::zero();
        for (g, &(re, im)) in f.iter().zip(&coeffs) {
            x.add_term(g.clone(), coeff(rational(re, 2), rational(im, 2)));
        }
        prop_assume!(!x.is_zero());
        let x_f: Vec<Element> = x.support();
        let data = construct_powers_data(&group, &x_f, n, &SearchBounds::default()).unwrap();
        let report = averaging_inequality_check(&group, &x, &data, 4).unwrap();
        prop_assert!(report.norm.lower <= 2.0 / (n as f64).sqrt() * x.l1_norm() + 1e-9);
        prop_assert!(report.ranges_disjoint);
    }
}

#[test]
fn hand_built_certificate_round_trips() {
    let group = Group::free(2).unwrap();
    let w = |s| group.parse(s).unwrap();
    let data =
        PowersData::new(vec![w("a")], Cylinder::new(vec![w("b"), w("b^-1")]).unwrap(), vec![w("b"), w("b^2")]).unwrap();
    assert_eq!(PowersData::from_json(&group, &data.to_json()).unwrap(), data);
}

#[test]
fn run_config_toml_round_trip() {
    let config = RunConfig::from_toml(
        "spec = \"specs/f2.toml\"\nradius = 8\nN = 16\nepsilon = 0.1\nformat = \"csv\"\nmode = \"sampled\"\nseed = 7",
    )
    .unwrap();
    let text = toml::to_string(&config).unwrap();
    assert_eq!(RunConfig::from_toml(&text).unwrap(), config);
}

#[test]
fn kesten_bound_for_random_unit_vectors() {
    let group = Group::free(2).unwrap();
    let ball = group.enumerate_ball(4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let xi = L2Vector::<f64>::from_entries(
            ball.iter().map(|g| (g.clone(), Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))),
        )
        .normalized();
        let report = kesten_bound_check(&group, &xi).unwrap();
        assert!(report.pass, "{report:?}");
        assert!(report.average <= 3f64.sqrt() / 2.0 + 1e-12);
    }
}
