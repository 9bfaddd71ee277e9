use std::process::{Command, Output};

fn semiprim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semiprim"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn check_sp_exit_codes() {
    let ok = semiprim(&["check-sp", "--construct", "inversion", "--q", "5", "--p-shape", "c5"]);
    assert_eq!(ok.status.code(), Some(0));
    let d4 = semiprim(&["check-sp", "--group", &fixture("d4.json"), "--json"]);
    assert_eq!(d4.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&d4.stdout).unwrap();
    assert_eq!(report["entries"][0]["status"], "fail");
    assert!(report["entries"][0]["witness"]["generators"].is_array());

    let dir = std::env::temp_dir().join(format!("semiprim-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("malformed.json");
    std::fs::write(&bad, r#"{"degree": 3, "generators": [[0, 0, 1]]}"#).unwrap();
    let out = semiprim(&["check-sp", "--group", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::write(&bad, "not json").unwrap();
    assert_eq!(semiprim(&["check-sp", "--group", bad.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn local_commands() {
    let out = semiprim(&["local", "--fixture", "heawood", "--edge", "0,1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["summary"]["fail"], 0);
    let t2 = report["entries"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["check_id"] == "thompson-module-decomposition")
        .unwrap();
    assert_eq!(t2["data"]["p"], 2);
    assert_eq!(t2["data"]["r"], 1);

    let f16 = semiprim(&["local", "--fixture", "f16", "--theorem1", "--json"]);
    assert_eq!(f16.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&f16.stdout).unwrap();
    assert_eq!(report["entries"][0]["data"]["bound"], "2880");

    let h = semiprim(&["local", "--fixture", "heawood", "--theorem1", "--json"]);
    let report: serde_json::Value = serde_json::from_slice(&h.stdout).unwrap();
    assert_eq!(report["entries"][0]["status"], "skip");

    let files = semiprim(&[
        "local",
        "--graph",
        &fixture("petersen.edges"),
        "--group",
        &fixture("petersen.json"),
    ]);
    assert_eq!(files.status.code(), Some(0));
    assert_eq!(semiprim(&["local", "--fixture", "heawood", "--edge", "0,2"]).status.code(), Some(2));
}

#[test]
fn construct_prints_a_group_file() {
    let out = semiprim(&["construct", "vector", "--q", "2", "--a", "1", "--n", "2", "--m", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let g = semiprim::io::read_group(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(g.order(), 24);
}

#[test]
fn verify_all_is_byte_identical_across_jobs() {
    let args = ["verify-all", "--json", "--max-order", "2000", "--filter", "engine", "--filter", "semiprim"];
    let serial = semiprim(&[&args[..], &["--jobs", "1"]].concat());
    let parallel = semiprim(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(serial.status.code(), Some(0));
    assert_eq!(serial.stdout, parallel.stdout);
    let report: serde_json::Value = serde_json::from_slice(&serial.stdout).unwrap();
    let entries = report["entries"].as_array().unwrap();
    assert!(entries.iter().all(|e| e["category"].is_null() && e.get("millis").is_none()));
    let only = semiprim(&["verify-all", "--json", "--filter", "semiprim", "--max-order", "100"]);
    let report: serde_json::Value = serde_json::from_slice(&only.stdout).unwrap();
    let engine = report["entries"]
        .as_array()
        .unwrap()
        .iter()
        .any(|e| e["check_id"] == "engine-matches-naive-closure");
    assert!(!engine);
}

#[test]
fn bad_arguments_and_caps() {
    assert_eq!(semiprim(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(semiprim(&["verify-all", "--jobs", "many"]).status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_semiprim"))
        .args(["verify-all", "--filter", "D4"])
        .env("SEMIPRIM_CAPS", "stream=ten")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // A tight cap turns the affected checks into skips, not failures.
    let out = Command::new(env!("CARGO_BIN_EXE_semiprim"))
        .args(["verify-all", "--json", "--filter", "structure-matches-subgroup-enumeration:S5"])
        .env("SEMIPRIM_CAPS", "classes=2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["summary"]["skip"], 1);
}
