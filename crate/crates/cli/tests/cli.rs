//! End-to-end tests of the command-line surface: subcommands, output
//! formats, exit codes, and the expansion cache.

use std::process::{Command, Output};

fn jacklab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jacklab"))
        .args(args)
        .env_remove("JACKLAB_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn coeff_a_table() {
    let out = jacklab(&["coeff", "--mu", "2", "--lambda", "2", "--basis", "a"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "0, 2, 0");
}

#[test]
fn coeff_b_table_and_poly() {
    let out = jacklab(&["coeff", "--mu", "2", "--lambda", "2", "--basis", "b"]);
    assert_eq!(stdout(&out).trim(), "2, 1");
    let out = jacklab(&["coeff", "--mu", "2", "--lambda", "1,1", "--basis", "poly"]);
    assert_eq!(stdout(&out).trim(), "α^2 - α");
}

#[test]
fn coeff_json() {
    let out = jacklab(&["coeff", "--mu", "2", "--lambda", "2", "--basis", "a", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["coeffs"], serde_json::json!(["0", "2", "0"]));
    assert_eq!(v["mu"], serde_json::json!([2]));
}

#[test]
fn expand_tilde_monomial() {
    let out = jacklab(&["expand", "--mu", "1,1", "--basis", "m", "--tilde"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("2α^2"), "got: {text}");
    assert!(text.contains("m_(1,1)"), "got: {text}");
}

#[test]
fn expand_schur_and_qsym() {
    let out = jacklab(&["expand", "--mu", "2", "--basis", "s", "--tilde"]);
    let text = stdout(&out);
    assert!(text.contains("α^2 + α"), "got: {text}");
    assert!(text.contains("α^2 - α"), "got: {text}");

    let out = jacklab(&["expand", "--mu", "2", "--basis", "qsym", "--tilde"]);
    let text = stdout(&out);
    assert!(text.contains("Q_{}"), "got: {text}");
    assert!(text.contains("Q_{1}"), "got: {text}");
}

#[test]
fn verify_pass_and_exit_codes() {
    let out = jacklab(&["verify", "prop4", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("PASS"));

    // unknown check and out-of-bounds degree are usage errors
    let out = jacklab(&["verify", "no_such_check", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = jacklab(&["verify", "conj1", "--n", "99"]);
    assert_eq!(out.status.code(), Some(2));
    // bad flags exit 2 via clap
    let out = jacklab(&["verify", "conj1", "--n"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_json_schema() {
    let out = jacklab(&["verify", "thm5", "--n", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let report = &v[0];
    assert_eq!(report["check"], "thm5");
    assert_eq!(report["n"], 3);
    assert_eq!(report["passed"], true);
    assert!(report["cases"].is_array());
    assert!(report["witness"].is_null());
}

#[test]
fn verify_csv_mode() {
    let out = jacklab(&["verify", "lem3", "--n", "3", "--csv"]);
    let text = stdout(&out);
    assert!(text.starts_with("check,n,case,verdict,witness"));
    assert!(text.contains("lem3,3,"));
    assert!(text.contains("pass"));
}

#[test]
fn verify_all_small() {
    // clamping keeps `verify all --n 2` within every bound
    let out = jacklab(&["verify", "all", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for id in ["conj1", "conj2", "prop4", "thm16", "gjw", "diag"] {
        assert!(text.contains(id), "missing {id} in: {text}");
    }
}

#[test]
fn verify_list_registry() {
    let out = jacklab(&["verify", "all", "--list"]);
    let text = stdout(&out);
    assert!(text.contains("conj1"));
    assert!(text.contains("thm16"));
}

#[test]
fn enumerate_counters() {
    let out = jacklab(&["enumerate", "qyt", "--shape", "2,2,1", "--max", "3"]);
    assert_eq!(stdout(&out).trim(), "3");
    let out = jacklab(&["enumerate", "qyt", "--shape", "2,2,1", "--max", "4"]);
    assert_eq!(stdout(&out).trim(), "2");
    let out = jacklab(&["enumerate", "syt", "--shape", "2,2,1"]);
    assert_eq!(stdout(&out).trim(), "5");
    let out = jacklab(&["enumerate", "boards", "--size", "2"]);
    assert_eq!(stdout(&out).trim(), "6");
    let out = jacklab(&["enumerate", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cache_flag_persists_expansions() {
    let dir = std::env::temp_dir().join(format!("jacklab-cli-cache-{}", std::process::id()));
    let dirs = dir.to_str().unwrap();
    let out = jacklab(&["--cache", dirs, "expand", "--mu", "2,1", "--basis", "m"]);
    assert!(out.status.success());
    assert!(dir.join("jack_n3_mu2-1.json").exists());
    assert!(dir.join("jack_n3_mu1-1-1.json").exists());
    // warm rerun gives identical output
    let again = jacklab(&["--cache", dirs, "expand", "--mu", "2,1", "--basis", "m"]);
    assert_eq!(stdout(&out), stdout(&again));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn cache_env_var_is_honored() {
    let dir = std::env::temp_dir().join(format!("jacklab-env-cache-{}", std::process::id()));
    let out = Command::new(env!("CARGO_BIN_EXE_jacklab"))
        .args(["expand", "--mu", "2", "--basis", "m"])
        .env("JACKLAB_CACHE", &dir)
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    assert!(dir.join("jack_n2_mu2.json").exists());
    assert!(dir.join("jack_n2_mu1-1.json").exists());
    std::fs::remove_dir_all(&dir).ok();
}
