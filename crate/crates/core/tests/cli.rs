use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn menger(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_menger"))
        .current_dir(dir)
        .env_remove("MENGER_CONFIG")
        .env_remove("MENGER_SEED")
        .env_remove("MENGER_SAMPLES")
        .env_remove("MENGER_OUT")
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(dir: &Path, out: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(dir.join(out).join("report.json")).unwrap()).unwrap()
}

#[test]
fn reproduce_writes_both_reports() {
    let tmp = TempDir::new().unwrap();
    for fixture in ["linf-box", "l1-aij", "ex1-betweenness", "L1-ha", "Linf-hp"] {
        let o = menger(tmp.path(), &["--out", fixture, "reproduce", fixture]);
        assert_eq!(o.status.code(), Some(0), "{fixture}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(tmp.path().join(fixture).join("report.md").exists());
        assert_eq!(report(tmp.path(), fixture)["exit_code"], 0);
    }
}

#[test]
fn usage_errors_exit_two() {
    let tmp = TempDir::new().unwrap();
    assert_eq!(menger(tmp.path(), &["reproduce", "no-such-fixture"]).status.code(), Some(2));
    assert_eq!(menger(tmp.path(), &["check", "--space", "l7:q", "--props", "A"]).status.code(), Some(2));
    assert_eq!(menger(tmp.path(), &["check", "--space", "l2:2"]).status.code(), Some(2));
    assert_eq!(menger(tmp.path(), &["--exact", "--float", "reproduce", "l1-aij"]).status.code(), Some(2));
    assert_eq!(menger(tmp.path(), &["--help"]).status.code(), Some(0));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let tmp = TempDir::new().unwrap();
    let args = |out: &'static str| ["--out", out, "--samples", "200", "check", "--space", "l1:3", "--props", "A,B,C"];
    let a = menger(tmp.path(), &args("a"));
    let b = menger(tmp.path(), &args("b"));
    assert_eq!(a.status.code(), b.status.code());
    assert_eq!(a.stdout, b.stdout);
    for file in ["report.json", "report.md"] {
        let ra = std::fs::read(tmp.path().join("a").join(file)).unwrap();
        let rb = std::fs::read(tmp.path().join("b").join(file)).unwrap();
        assert_eq!(ra, rb, "{file}");
    }
}

#[test]
fn seed_comes_from_the_environment() {
    let tmp = TempDir::new().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_menger"))
        .current_dir(tmp.path())
        .env("MENGER_SEED", "42")
        .env("MENGER_OUT", "env")
        .args(["--samples", "50", "check", "--space", "l2:2", "--props", "A"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(report(tmp.path(), "env")["config"]["rng"]["seed"], 42);
}

#[test]
fn euclidean_suite_holds_and_wrong_expectation_fails() {
    let tmp = TempDir::new().unwrap();
    let props = "MengerConvex,A,B,Bprime,Bdoubleprime,C,Homogeneity";
    let ok = menger(tmp.path(), &["--out", "ok", "--samples", "200", "check", "--space", "l2:2", "--props", props]);
    assert_eq!(ok.status.code(), Some(0), "{}", String::from_utf8_lossy(&ok.stdout));
    let bad = menger(tmp.path(), &["--out", "bad", "--samples", "200", "check", "--space", "l2:2", "--props", "A", "--expect", "A=fails"]);
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(report(tmp.path(), "bad")["exit_code"], 1);
}

#[test]
fn linf_suite_with_config_expectations() {
    let tmp = TempDir::new().unwrap();
    std::fs::write(
        tmp.path().join("linf.toml"),
        "[grid]\nsamples = 500\n\n[expect]\nA = \"fails\"\nC = \"fails\"\n",
    )
    .unwrap();
    let o = menger(tmp.path(), &["--config", "linf.toml", "check", "--space", "linf:3", "--props", "A,C"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
    let r = report(tmp.path(), "menger-report");
    assert_eq!(r["config"]["grid"]["samples"], 500);
    let md = std::fs::read_to_string(tmp.path().join("menger-report").join("report.md")).unwrap();
    assert!(md.contains("| A | "));
    assert!(md.contains("fails"));
}

#[test]
fn unknown_config_keys_are_usage_errors() {
    let tmp = TempDir::new().unwrap();
    std::fs::write(tmp.path().join("bad.toml"), "[grid]\nsamplez = 5\n").unwrap();
    let o = menger(tmp.path(), &["--config", "bad.toml", "reproduce", "l1-aij"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn fixedpoint_subcommand() {
    let tmp = TempDir::new().unwrap();
    let write = |name: &str, body: &str| std::fs::write(tmp.path().join(name), body).unwrap();
    write(
        "rot.json",
        r#"{"kind":"rotation","parameters":{"angle":0.8975979010256552,"center":[0,0]},"domain":{"type":"ball","center":[0,0],"radius":1},"x0":[1,0]}"#,
    );
    write("dbl.json", r#"{"kind":"affine","parameters":{"matrix":[[2,0],[0,2]],"offset":[0,0]},"x0":[1,0]}"#);
    write("tr.json", r#"{"kind":"affine","parameters":{"matrix":[[1,0],[0,1]],"offset":[1,0]}}"#);
    write("broken.json", r#"{"kind":"spin"}"#);

    let o = menger(tmp.path(), &["--out", "rot", "fixedpoint", "rot.json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = report(tmp.path(), "rot");
    let u0: Vec<f64> = serde_json::from_value(r["result"]["u0"].clone()).unwrap();
    assert!(u0.iter().all(|c| c.abs() <= 1e-6), "{u0:?}");
    assert!(r["result"]["residual"].as_f64().unwrap() <= 1e-6);

    assert_eq!(menger(tmp.path(), &["--out", "dbl", "fixedpoint", "dbl.json"]).status.code(), Some(1));
    let r = report(tmp.path(), "dbl");
    assert_eq!(r["result"]["kind"], "not_hybrid");
    assert_eq!(r["result"]["witness"]["property"], "Hybrid");

    assert_eq!(menger(tmp.path(), &["--out", "tr", "fixedpoint", "tr.json"]).status.code(), Some(1));
    assert_eq!(report(tmp.path(), "tr")["result"]["kind"], "unbounded_orbit");

    assert_eq!(menger(tmp.path(), &["fixedpoint", "broken.json"]).status.code(), Some(2));
    assert_eq!(menger(tmp.path(), &["fixedpoint", "missing.json"]).status.code(), Some(2));
}

#[test]
fn nested_subcommand() {
    let tmp = TempDir::new().unwrap();
    let balls: Vec<String> = (1..=40)
        .map(|k| {
            let r = 0.5f64.powi(k);
            format!(r#"[{{"center":[{},0],"radius":{}}}]"#, 1.0 - r, r)
        })
        .collect();
    std::fs::write(tmp.path().join("cantor.json"), format!("[{}]", balls.join(","))).unwrap();
    std::fs::write(tmp.path().join("disjoint.json"), r#"[[{"center":[0,0],"radius":1},{"center":[5,0],"radius":1}]]"#)
        .unwrap();
    let o = menger(tmp.path(), &["--out", "c", "nested", "cantor.json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
    let text = report(tmp.path(), "c")["result"].to_string();
    assert!(text.contains("cantor"), "{text}");
    assert_eq!(menger(tmp.path(), &["--out", "d", "nested", "disjoint.json"]).status.code(), Some(1));
}
