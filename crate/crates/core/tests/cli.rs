use std::path::PathBuf;
use std::process::{Command, Output};

fn crnms(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crnms")).args(args).output().expect("binary runs")
}

fn networks(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("networks").join(name).to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_json_file() {
    let o = crnms(&["classify", &networks("bistable_switch.crn"), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["case"], "CASE_3C");
    assert_eq!(v["nondegenerately_multistationary"], true);
    assert_eq!(v["multistable"], false);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    assert_eq!(
        keys,
        ["multistationary", "nondegenerately_multistationary", "multistable", "cap_pss", "cap_npss", "cap_stable", "case", "justification"]
    );
    for j in v["justification"].as_array().unwrap() {
        assert!(j["theorem"].is_string() && j.get("data").is_some());
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["classify", "--net", "A <-> B; 2A + B -> 3A", "--json"];
    assert_eq!(crnms(&args).stdout, crnms(&args).stdout);
    let args = ["witness", &networks("bistable_switch.crn"), "--json"];
    let a = crnms(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, crnms(&args).stdout);
}

#[test]
fn witness_for_an_alternating_network() {
    let o = crnms(&["witness", &networks("alt2.crn"), "--count", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("certified: 2 steady states, 2 nondegenerate, 1 stable"), "{}", stdout(&o));

    let o = crnms(&["witness", "--net", "0 -> A; 2A -> A; 3A -> 4A", "--roots", "1,2", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rates"], serde_json::json!({"r0": "4", "r1": "7", "r2": "3"}));
}

#[test]
fn enumerate_bimolecular_two_irreversible() {
    let o = crnms(&["enumerate", "--shape", "two-irrev", "--max-molecularity", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let line = out.lines().find(|l| l.trim_start().starts_with("nondegenerately multistationary")).unwrap();
    assert_eq!(line.split_whitespace().last(), Some("0"));
}

#[test]
fn exit_codes() {
    assert_eq!(crnms(&["classify", "--net", "A -> -> B"]).status.code(), Some(1));
    assert_eq!(crnms(&["classify", "--net", "A -> B; B -> C; C -> A"]).status.code(), Some(2));
    assert_eq!(crnms(&["witness", &networks("monotone.crn"), "--count", "2"]).status.code(), Some(3));
    assert_eq!(crnms(&["classify", "/nonexistent/network.crn"]).status.code(), Some(1));
}

#[test]
fn box_diagram_file() {
    let dir = std::env::temp_dir().join(format!("crnms-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let svg = dir.join("box.svg");
    let o = crnms(&["boxdiagram", &networks("bistable_switch.crn"), "--svg", svg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches(r#"class="arrow""#).count(), 2);
    assert_eq!(text.matches(r#"class="diagonal""#).count(), 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn minimal_reports_family() {
    let o = crnms(&["minimal", "--net", "A + B + C -> 0; 2A -> 3A + B + C", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["minimal"], true);
    assert_eq!(v["family"], "three species, two reactions");

    // B and C always move together, so dropping B loses nothing
    let o = crnms(&["minimal", &networks("three_species.crn"), "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["minimal"], false);
    assert_eq!(v["embedded"]["removal"], "remove species [B]");
}
