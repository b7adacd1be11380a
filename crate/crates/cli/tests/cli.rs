use assert_cmd::Command;
use predicates::str::contains;
use serde_json::Value;

fn sphquad() -> Command {
    Command::cargo_bin("sphquad").unwrap()
}

fn json_out(args: &[&str]) -> Value {
    let out = sphquad().args(args).assert().success().get_output().stdout.clone();
    serde_json::from_slice(&out).unwrap()
}

#[test]
fn enumerate_bound_one_lists_seven_nets() {
    let out = sphquad().args(["enumerate", "--bound", "1"]).assert().success().get_output().stdout.clone();
    let labels: Vec<String> = String::from_utf8(out).unwrap().lines().map(str::to_string).collect();
    assert_eq!(labels.len(), 7);
    assert!(labels.contains(&"P0".to_string()));
    assert!(labels.contains(&"X'bar[0,0]".to_string()));
}

#[test]
fn x_chain_for_n_two() {
    let v = json_out(&["chains", "--angles", "0.3,0.8,0.5,2.45", "--scope", "X"]);
    let chains = v["chains"].as_array().unwrap();
    assert_eq!(chains.len(), 1);
    assert_eq!(chains[0]["nets"].as_array().unwrap().len(), 5);
    assert_eq!(chains[0]["length"], 4);
    assert_eq!(chains[0]["transitions"].as_array().unwrap().len(), 4);
    assert_eq!(v["bounds"]["per_modulus"]["lo"], 1);
}

#[test]
fn explain_lists_gates() {
    let v = json_out(&["chains", "--exact", "3/10,4/5,1/2,49/20", "--scope", "X", "--explain"]);
    let lines = v["chains"][0]["explain"].as_array().unwrap();
    assert!(lines.iter().any(|l| l.as_str().unwrap().contains("-right->")));
}

#[test]
fn feasible_x01() {
    let v = json_out(&["feasible", "--label", "X[0,1]", "--angles", "0.3,0.8,0.5,1.45"]);
    assert_eq!(v["feasible"], true);
    assert_eq!(v["inequalities"].as_array().unwrap().len(), 5);
    assert!(v["inequalities"].as_array().unwrap().iter().all(|i| i["holds"] == true));
}

#[test]
fn infeasible_exits_two() {
    // X[1,0] needs 1-α+β+γ+δ > 2.
    sphquad()
        .args(["feasible", "--label", "X[1,0]", "--exact", "9/10,1/10,1/10,3/2"])
        .assert()
        .code(2)
        .stdout(contains("\"feasible\": false"));
}

#[test]
fn bad_input_exits_two() {
    sphquad().args(["chains", "--angles", "0.3,0.8"]).assert().code(2).stderr(contains("four angles"));
    sphquad().args(["feasible", "--label", "Q[1,1]", "--angles", "0.3,0.8,0.5,1.45"]).assert().code(2);
    sphquad().args(["chains", "--angles", "0.3,0.8,0.5,2.45", "--scope", "Q"]).assert().code(2);
}

#[test]
fn angle_flags_are_exclusive() {
    sphquad().args(["chains", "--angles", "0.3,0.8,0.5,2.45", "--exact", "3/10,4/5,1/2,49/20"]).assert().failure();
}

#[test]
fn seeded_realize_is_reproducible() {
    let run = || {
        sphquad()
            .args(["realize", "--angles", "0.9,0.9,0.9,0.9", "--seed", "11"])
            .assert()
            .success()
            .get_output()
            .stdout
            .clone()
    };
    let (a, b) = (run(), run());
    assert_eq!(a, b);
    let v: Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["normals"].as_array().unwrap().len(), 4);
}

#[test]
fn realize_render_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    let svg = dir.path().join("cfg.svg");
    sphquad().args(["realize", "--angles", "0.7,0.8,0.6,0.9", "--seed", "5", "--out"]).arg(&cfg).assert().success();
    sphquad().args(["render", "--config"]).arg(&cfg).arg("--out").arg(&svg).assert().success();
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.contains("<svg") && text.contains("version=\"1.1\""));
}

#[test]
fn realize_rejects_infeasible_angles() {
    sphquad().args(["realize", "--angles", "0.1,0.1,0.1,0.1", "--t", "0.5"]).assert().code(2);
}

#[test]
fn validate_and_classify_enumerated_net() {
    let out = sphquad().args(["enumerate", "--bound", "1", "--json"]).assert().success().get_output().stdout.clone();
    let text = String::from_utf8(out).unwrap();
    let dir = tempfile::tempdir().unwrap();
    for line in text.lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        let path = dir.path().join("net.json");
        std::fs::write(&path, v["net"].to_string()).unwrap();
        sphquad().arg("validate").arg(&path).assert().success().stdout(contains("\"valid\": true"));
        let got = sphquad().arg("classify").arg(&path).assert().success().get_output().stdout.clone();
        let got = String::from_utf8(got).unwrap();
        assert_eq!(got.trim(), v["label"].as_str().unwrap());
    }
}

#[test]
fn render_label_svg() {
    sphquad().args(["render", "--label", "Z'[0,0]"]).assert().success().stdout(contains("<svg"));
}

#[test]
fn missing_file_exits_two() {
    sphquad().args(["validate", "/nonexistent/net.json"]).assert().code(2);
}
