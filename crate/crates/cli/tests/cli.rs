use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn symrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symrep"))
        .args(args)
        .env_remove("SYMREP_P")
        .env_remove("SYMREP_D")
        .env_remove("SYMREP_SEED")
        .env_remove("SYMREP_CACHE_DIR")
        .env_remove("SYMREP_FORMAT")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

/// Report text with the timing line removed.
fn stable(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).lines().filter(|l| !l.contains("wall_time_ms")).collect::<Vec<_>>().join("\n")
}

const UU: &str = "tensor(heller^2(simple-restricted:21^3), heller^2(simple-restricted:21^3))";

#[test]
fn verify_section_four_passes() {
    let out = symrep(&["verify-paper", "--section", "4", "--p", "5", "--d", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["passed"], true);
    assert_eq!(r["config"]["seed"], 0);
    assert!(r["modules"][0]["hash"].as_str().unwrap().len() == 64);
}

#[test]
fn criteria_beyond_regular_limit_is_a_usage_error() {
    let out = symrep(&["criteria", "specht:31^2", "--p", "5", "--d", "10"]);
    assert_eq!(out.status.code(), Some(2));
    let r = json(&out);
    assert!(r["error"].as_str().unwrap().contains("regular module exceeds configured limit"));
}

#[test]
fn tensor_square_of_u_has_no_specht_filtration() {
    let out = symrep(&["filtration", UU, "--kind", "specht"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["result"]["status"], "no filtration (exhaustive)");
    let out = symrep(&["filtration", UU, "--kind", "dual", "--format", "table"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("no filtration (exhaustive)"));
}

#[test]
fn filtration_of_u_is_certified() {
    let out = symrep(&["filtration", "heller^2(simple-restricted:21^3)", "--kind", "dual"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["result"]["verified"], true);
    assert_eq!(r["result"]["labels"], serde_json::json!(["S_41", "S_21^3"]));
}

#[test]
fn constructor_verbs() {
    for args in [
        vec!["specht", "31^2"],
        vec!["perm", "41"],
        vec!["simple", "21^3", "--labeling", "restricted"],
        vec!["simple", "311"],
        vec!["signed-perm", "21|2"],
        vec!["specht", "3,1,1"],
    ] {
        let out = symrep(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert_eq!(json(&out)["degree"], 5);
    }
    let r = json(&symrep(&["simple", "21^3", "--labeling", "restricted"]));
    assert_eq!(r["result"]["module"]["dim"], 3);
    assert_eq!(r["result"]["composition_factors"][0]["regular"], "31^2");
}

#[test]
fn constructors_work_in_small_characteristic_but_theory_does_not() {
    assert_eq!(symrep(&["specht", "21", "--p", "2"]).status.code(), Some(0));
    assert_eq!(symrep(&["criteria", "perm:31", "--p", "3"]).status.code(), Some(2));
    assert_eq!(symrep(&["filtration", "perm:31", "--p", "3"]).status.code(), Some(2));
    assert_eq!(symrep(&["young", "31", "--p", "3"]).status.code(), Some(2));
}

#[test]
fn usage_errors() {
    for args in [
        vec!["specht", "3x1"],
        vec!["frobnicate"],
        vec!["specht", "31", "--p", "6"],
        vec!["specht", "31", "--d", "5"],
        vec!["criteria", "tensor(specht:31,"],
        vec!["criteria", "summand(perm:41,9)"],
        vec!["verify-paper", "--section", "4", "--d", "6"],
        vec!["filtration", "perm:41", "--kind", "sideways"],
    ] {
        assert_eq!(symrep(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn criteria_report_and_requirements() {
    let out = symrep(&["criteria", "young:31^2", "--require", "i,ii,iii,iv"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    let rows = r["result"]["criteria"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|c| c["passes"] == true));
    let out = symrep(&["criteria", "heller^2(simple-restricted:21^3)", "--require", "ii"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json(&out)["result"]["criteria"][1]["witness"].is_string());
}

#[test]
fn young_and_sweep() {
    let out = symrep(&["young", "2^21"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["self_dual"], true);
    let out = symrep(&["sweep-signed", "--d", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["result"]["summands"].as_array().unwrap().len() > 5);
}

#[test]
fn reports_are_deterministic() {
    let a = symrep(&["criteria", "summand(perm:31^2,1)", "--seed", "7"]);
    let b = symrep(&["criteria", "summand(perm:31^2,1)", "--seed", "7"]);
    assert_eq!(stable(&a), stable(&b));
}

#[test]
fn environment_overrides_with_flag_precedence() {
    let run = |flag: Option<&str>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_symrep"));
        c.args(["specht", "21"]).env("SYMREP_P", "7").env_remove("SYMREP_FORMAT");
        if let Some(p) = flag {
            c.args(["--p", p]);
        }
        json(&c.output().unwrap())["config"]["p"].clone()
    };
    assert_eq!(run(None), 7);
    assert_eq!(run(Some("11")), 11);
}

fn cached(dir: &Path, args: &[&str]) -> Output {
    let mut v = args.to_vec();
    v.extend(["--cache-dir", dir.to_str().unwrap()]);
    symrep(&v)
}

#[test]
fn cold_and_warm_runs_agree() {
    let dir = tempfile::tempdir().unwrap();
    let cold = cached(dir.path(), &["verify-paper", "--section", "4"]);
    let warm = cached(dir.path(), &["verify-paper", "--section", "4"]);
    assert_eq!(cold.status.code(), Some(0));
    assert_eq!(stable(&cold), stable(&warm));

    let first = cached(dir.path(), &["specht", "31^2"]);
    assert!(!String::from_utf8_lossy(&first.stderr).contains("cache hit"));
    let second = cached(dir.path(), &["specht", "31^2"]);
    assert!(String::from_utf8_lossy(&second.stderr).contains("cache hit: specht:31^2"));
    assert_eq!(stable(&first), stable(&second));
}

#[test]
fn damaged_entries_are_rebuilt() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["filtration", "heller^2(simple-restricted:21^3)", "--kind", "specht"];
    let clean = cached(dir.path(), &args);
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        let path = entry.unwrap().path();
        let mut bytes = std::fs::read(&path).unwrap();
        let last = bytes.len() - 1;
        bytes[last] ^= 1;
        std::fs::write(&path, bytes).unwrap();
    }
    let again = cached(dir.path(), &args);
    assert!(String::from_utf8_lossy(&again.stderr).contains("damaged"));
    assert_eq!(stable(&clean), stable(&again));
    let third = cached(dir.path(), &args);
    assert!(String::from_utf8_lossy(&third.stderr).contains("cache hit"));
}

#[test]
fn unwritable_cache_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("not-a-dir");
    std::fs::write(&file, b"x").unwrap();
    let out = cached(&file, &["specht", "31^2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(json(&out)["error"].as_str().unwrap().starts_with("cache:"));
}
