use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn specs(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("specs").join(name)
}

fn cstar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cstar")).args(args).env_remove("CSTAR_BALL_CAP").output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn path(p: &PathBuf) -> &str {
    p.to_str().unwrap()
}

#[test]
fn verifies_the_hand_built_certificate() {
    let out = cstar(&[
        "powers-verify",
        "--spec",
        path(&specs("f2.toml")),
        "--cert",
        path(&specs("hand_built_f2.json")),
        "--radius",
        "6",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report = json(&out);
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["pass"], true);
}

#[test]
fn rejects_a_broken_certificate_with_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("bad.json");
    std::fs::write(&cert, r#"{"F": ["a"], "N": 2, "cylinder_prefixes": ["a"], "gammas": ["b", "b^2"]}"#).unwrap();
    let out = cstar(&["powers-verify", "--spec", path(&specs("f2.toml")), "--cert", cert.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("\"witness\""), "{text}");
}

#[test]
fn triangle_group_is_cstar_simple() {
    let out = cstar(&["coxeter-classify", "--spec", path(&specs("triangle_237.toml"))]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("CstarSimple"));
}

#[test]
fn bad_arguments_exit_with_config_code() {
    let out = cstar(&["norm", "--spec", path(&specs("f2.toml")), "--radius", "-3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = cstar(&["invert-cert", "--spec", path(&specs("f2.toml")), "--epsilon", "1.5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = cstar(&["icc", "--spec", "/nonexistent/spec.toml"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ball_cap_exit_code() {
    let out = Command::new(env!("CARGO_BIN_EXE_cstar"))
        .args(["norm", "--spec", path(&specs("f2.toml")), "--radius", "6"])
        .env("CSTAR_BALL_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let mut texts = Vec::new();
    for run in 0..2 {
        let out_path = dir.path().join(format!("report{run}.json"));
        let cert_path = dir.path().join(format!("cert{run}.json"));
        let out = cstar(&[
            "powers-construct",
            "--spec",
            path(&specs("f2.toml")),
            "--f",
            "a,b*a",
            "--n",
            "4",
            "--radius",
            "5",
            "--out",
            out_path.to_str().unwrap(),
            "--cert",
            cert_path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
        let cert = std::fs::read_to_string(&cert_path).unwrap();
        texts.push((
            std::fs::read_to_string(&out_path)
                .unwrap()
                .replace(&format!("cert{run}"), "cert")
                .replace(&format!("report{run}"), "report"),
            cert,
        ));
    }
    assert_eq!(texts[0], texts[1]);

    let verify = cstar(&[
        "powers-verify",
        "--spec",
        path(&specs("f2.toml")),
        "--cert",
        dir.path().join("cert0.json").to_str().unwrap(),
    ]);
    assert_eq!(verify.status.code(), Some(0));
}

#[test]
fn every_claim_cites_a_result() {
    let runs: Vec<Vec<String>> = vec![
        vec!["icc".into(), "--spec".into(), path(&specs("z2_z3.toml")).into()],
        vec!["radial-norm".into(), "--spec".into(), path(&specs("f3.toml")).into()],
        vec!["simplicity-report".into(), "--spec".into(), path(&specs("affine_a2.toml")).into()],
        vec![
            "simplicity-report".into(),
            "--spec".into(),
            path(&specs("z2_z2.toml")).into(),
            "--radius".into(),
            "4".into(),
        ],
        vec![
            "invert-cert".into(),
            "--spec".into(),
            path(&specs("f2.toml")).into(),
            "--element".into(),
            path(&specs("half_a.json")).into(),
        ],
        vec!["kesten-check".into(), "--spec".into(), path(&specs("f2.toml")).into(), "--samples".into(), "20".into()],
    ];
    for args in runs {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = cstar(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        let report = json(&out);
        let claims = report["claims"].as_array().unwrap();
        assert!(!claims.is_empty(), "{args:?}");
        for claim in claims {
            assert!(!claim["citation"].as_str().unwrap().is_empty(), "{args:?}: {claim}");
        }
    }
}

#[test]
fn csv_columns() {
    let out = cstar(&["norm", "--spec", path(&specs("f2.toml")), "--radius", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("group,operator,R,lower,upper,N,ceiling,pass"));
    assert!(lines.next().unwrap().starts_with("F_2,"), "{text}");
}

#[test]
fn config_file_supplies_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("run.toml");
    std::fs::write(&config, format!("spec = {:?}\nradius = 2\nformat = \"table\"\n", path(&specs("f2.toml")))).unwrap();
    let out = cstar(&["norm", "--config", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("norm  group: F_2  PASS"));
}
