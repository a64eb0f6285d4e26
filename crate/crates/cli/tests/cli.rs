use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use serde_json::{json, Value};

struct Run {
    code: i32,
    doc: Value,
    stdout: String,
    stderr: String,
}

fn flagtract(args: &[&str], stdin: Option<&str>) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_flagtract"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    Run {
        code: out.status.code().unwrap(),
        doc: serde_json::from_str(&stdout).unwrap_or(Value::Null),
        stdout,
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn temp_file(name: &str, v: &Value) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("flagtract-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, v.to_string()).unwrap();
    p
}

fn krasner(n: usize, r: usize, keys: &[&str]) -> Value {
    let values: serde_json::Map<String, Value> = keys.iter().map(|k| (k.to_string(), json!({"v": 1}))).collect();
    json!({"n": n, "r": r, "tract": {"kind": "krasner"}, "values": values})
}

fn fixture(name: &str) -> Value {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/scenarios").join(name);
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn quotient_on_krasner_example() {
    let n = temp_file("n.json", &krasner(2, 2, &["1,2"]));
    let m = temp_file("m.json", &krasner(2, 1, &["1"]));
    let r = flagtract(&["quotient", "--n", n.to_str().unwrap(), "--m", m.to_str().unwrap()], None);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout.trim(), r#"{"ok":true,"result":true}"#);
}

#[test]
fn failed_quotient_exits_one_with_witness() {
    let fx = fixture("phase-counterexample.json");
    let n = temp_file("m3.json", &fx["matroids"]["M3"]);
    let m = temp_file("m1.json", &fx["matroids"]["M1"]);
    let r = flagtract(&["quotient", "--n", n.to_str().unwrap(), "--m", m.to_str().unwrap()], None);
    assert_eq!(r.code, 1);
    assert_eq!(r.doc["result"], json!(false));
    assert_eq!(r.doc["witness"], json!({"kind": "relation", "x": [], "y": [1, 2, 3, 4]}));
}

#[test]
fn rank_order_is_an_input_error() {
    let n = temp_file("small.json", &krasner(2, 1, &["1"]));
    let m = temp_file("big.json", &krasner(2, 2, &["1,2"]));
    let r = flagtract(&["quotient", "--n", n.to_str().unwrap(), "--m", m.to_str().unwrap()], None);
    assert_eq!(r.code, 2);
    assert!(r.doc["error"].as_str().unwrap().contains("rank order"));
}

#[test]
fn malformed_json_reports_position() {
    let r = flagtract(&["dual", "-"], Some("{\"n\": 2,\n \"r\": 1 \"tract\": {}}"));
    assert_eq!(r.code, 2);
    let err = r.doc["error"].as_str().unwrap();
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn bad_keys_are_reported_with_their_path() {
    let g = json!({"n": 3, "r": 2, "tract": {"kind": "sign"}, "values": {"1,4": {"v": 1}}});
    let r = flagtract(&["validate", "-"], Some(&g.to_string()));
    assert_eq!(r.code, 2);
    assert!(r.doc["error"].as_str().unwrap().contains("1,4"));
}

#[test]
fn tract_mismatch_is_an_input_error() {
    let n = temp_file("sign.json", &json!({"n": 2, "r": 1, "tract": {"kind": "sign"}, "values": {"1": {"v": 1}}}));
    let m = temp_file("k.json", &krasner(2, 1, &["1"]));
    let r = flagtract(&["quotient", "--n", n.to_str().unwrap(), "--m", m.to_str().unwrap()], None);
    assert_eq!(r.code, 2);
    assert!(r.doc["error"].as_str().unwrap().contains("mismatch"));
}

#[test]
fn unknown_verb_prints_usage() {
    let r = flagtract(&["frobnicate"], None);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("Usage"));
}

#[test]
fn validate_modes() {
    let all_ones = json!({"n": 4, "r": 2, "tract": "sign", "values": {
        "1,2": 1, "1,3": 1, "1,4": 1, "2,3": 1, "2,4": 1, "3,4": 1}});
    let r = flagtract(&["validate", "-", "--mode", "three-term"], Some(&all_ones.to_string()));
    assert_eq!((r.code, r.doc["result"].clone()), (0, json!(true)));
    let broken = json!({"n": 4, "r": 2, "tract": "sign", "values": {
        "1,2": 1, "1,3": -1, "1,4": 1, "2,3": 1, "2,4": 1, "3,4": 1}});
    let r = flagtract(&["validate", "-"], Some(&broken.to_string()));
    assert_eq!(r.code, 1);
    assert_eq!(r.doc["witness"]["kind"], "relation");
    let zero = json!({"n": 2, "r": 1, "tract": "krasner", "values": {}});
    let r = flagtract(&["validate", "-"], Some(&zero.to_string()));
    assert_eq!(r.code, 1);
    assert_eq!(r.doc["witness"], json!({"kind": "all_zero"}));
    let fx = fixture("phase-counterexample.json");
    let r = flagtract(&["validate", "-", "--mode", "three-term"], Some(&fx["matroids"]["M2"].to_string()));
    assert_eq!(r.code, 2);
}

#[test]
fn dual_circuits_and_minors() {
    let u = json!({"n": 2, "r": 1, "tract": {"kind": "sign"}, "values": {"1": {"v": 1}, "2": {"v": 1}}});
    let r = flagtract(&["dual", "-"], Some(&u.to_string()));
    assert_eq!(r.doc["result"]["values"], json!({"1": {"v": 1}, "2": {"v": -1}}));
    let back = flagtract(&["dual", "-"], Some(&r.doc["result"].to_string()));
    assert_eq!(back.doc["result"], u);
    let c = flagtract(&["circuits", "-"], Some(&u.to_string()));
    assert_eq!(c.doc["result"]["representatives"][0]["coords"], json!([{"v": 1}, {"v": -1}]));
    let u23 = krasner(3, 2, &["1,2", "1,3", "2,3"]);
    let m = flagtract(&["minor", "-", "--contract", "3"], Some(&u23.to_string()));
    assert_eq!(m.doc["result"], krasner(2, 1, &["1", "2"]));
    let cc = flagtract(&["cocircuits", "-"], Some(&krasner(2, 1, &["1", "2"]).to_string()));
    assert_eq!(cc.doc["result"]["representatives"].as_array().unwrap().len(), 1);
}

#[test]
fn flag_commands() {
    let fx = fixture("k-rank-1-2.json");
    let flag = fx["flag"].to_string();
    let r = flagtract(&["flag-validate", "-", "--mode", "adjacent"], Some(&flag));
    assert_eq!(r.code, 0);
    assert_eq!(flagtract(&["crypto-check", "-"], Some(&flag)).code, 0);
    let d = flagtract(&["flag-dual", "-"], Some(&flag));
    assert_eq!(d.doc["result"]["components"][0]["r"], 0);
    let m = flagtract(&["flag-minor", "-", "--delete", "2"], Some(&flag));
    assert_eq!(m.doc["result"]["components"][1]["r"], 1);
    let s = flagtract(&["subflag", "-", "--indices", "2"], Some(&flag));
    assert_eq!(s.doc["result"]["components"].as_array().unwrap().len(), 1);
    assert_eq!(flagtract(&["subflag", "-", "--indices", "2,1"], Some(&flag)).code, 2);
    let lift = flagtract(&["lift", "-"], Some(&flag));
    assert_eq!(lift.doc["result"]["values"], json!({"1,2": {"v": 1}, "1,3": {"v": 1}}));

    let phase = fixture("phase-counterexample.json");
    let triple = json!({"tract": "phase", "n": 4, "components": [
        phase["matroids"]["M1"], phase["matroids"]["M2"], phase["matroids"]["M3"]]});
    let r = flagtract(&["flag-validate", "-"], Some(&triple.to_string()));
    assert_eq!(r.code, 1);
    assert_eq!(r.doc["witness"]["kind"], "pair");
    assert_eq!((r.doc["witness"]["i"].clone(), r.doc["witness"]["j"].clone()), (json!(1), json!(3)));
    assert_eq!(flagtract(&["flag-validate", "-", "--mode", "adjacent"], Some(&triple.to_string())).code, 2);
    assert_eq!(flagtract(&["crypto-check", "-"], Some(&triple.to_string())).code, 1);
}

#[test]
fn flags_of_minors_and_pushforward() {
    let u23 = krasner(3, 2, &["1,2", "1,3", "2,3"]);
    let r = flagtract(&["flags-of-minors", "-", "--n", "2", "--cuts", "1,0"], Some(&u23.to_string()));
    assert_eq!(r.code, 0);
    assert_eq!(r.doc["result"], fixture("flags-of-minors-u23.json")["expected_flag"]);
    let reg = json!({"n": 2, "r": 1, "tract": "regular_partial", "values": {"1": 1, "2": -1}});
    let p = flagtract(&["pushforward", "-", "--morphism", "regular", "--target", "sign"], Some(&reg.to_string()));
    assert_eq!(p.doc["result"]["values"], json!({"1": {"v": 1}, "2": {"v": -1}}));
    let p = flagtract(&["pushforward", "-", "--morphism", "terminal"], Some(&reg.to_string()));
    assert_eq!(p.doc["result"], krasner(2, 1, &["1", "2"]));
    let q = json!({"n": 2, "r": 1, "tract": "rationals", "values": {"1": "12", "2": "1/3"}});
    let p = flagtract(&["pushforward", "-", "--morphism", "rationals_to_tropical(2)"], Some(&q.to_string()));
    assert_eq!(p.doc["result"]["values"], json!({"1": {"v": "1"}, "2": {"v": "4"}}));
}

#[test]
fn enumeration_output_is_stable_across_thread_counts() {
    let args = ["enumerate", "--tract", "sign", "--ranks", "1,2", "--n", "4", "--items"];
    let one = flagtract(&[&["--jobs", "1"], &args[..]].concat(), None);
    let many = flagtract(&[&["--jobs", "4"], &args[..]].concat(), None);
    assert_eq!(one.code, 0);
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(one.doc["result"]["count"].as_u64().unwrap() as usize, one.doc["result"]["items"].as_array().unwrap().len());
    let r = flagtract(&["enumerate", "--tract", "krasner", "--ranks", "1", "--n", "3"], None);
    assert_eq!(r.doc["result"]["count"], 7);
    assert_eq!(flagtract(&["enumerate", "--tract", "phase", "--ranks", "1", "--n", "3"], None).code, 2);
    assert_eq!(flagtract(&["enumerate", "--tract", "sign", "--ranks", "1", "--n", "7"], None).code, 2);
}

#[test]
fn enumeration_streams_items() {
    let dir = std::env::temp_dir().join(format!("flagtract-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("items.jsonl");
    let r = flagtract(
        &["enumerate", "--tract", "finite_field(3)", "--ranks", "2", "--n", "4", "--stream", path.to_str().unwrap()],
        None,
    );
    let lines = std::fs::read_to_string(&path).unwrap();
    assert_eq!(lines.lines().count() as u64, r.doc["result"]["count"].as_u64().unwrap());
    assert!(r.doc["result"].get("items").is_none());
}

#[test]
fn poset_and_searches() {
    let r = flagtract(&["poset", "--ranks", "1", "--n", "2"], None);
    assert_eq!(r.doc["result"]["nodes"].as_array().unwrap().len(), 3);
    assert_eq!(r.doc["result"]["covers"].as_array().unwrap().len(), 2);
    let top = r.doc["result"]["top"].as_u64().unwrap() as usize;
    assert_eq!(r.doc["result"]["nodes"][top]["components"][0], krasner(2, 1, &["1", "2"]));

    let u24 = json!({"tract": "krasner", "n": 4, "components": [krasner(4, 2, &["1,2", "1,3", "1,4", "2,3", "2,4", "3,4"])]});
    let s = flagtract(&["repr-search", "-", "--tract", "finite_field(2)"], Some(&u24.to_string()));
    assert_eq!((s.code, s.doc["result"].clone()), (1, json!([])));

    let regular = json!({"tract": "krasner", "n": 3, "components": [
        krasner(3, 1, &["1", "2"]), krasner(3, 2, &["1,2", "1,3", "2,3"])]});
    let r = flagtract(&["regularity", "-"], Some(&regular.to_string()));
    assert_eq!(r.code, 0);
    assert_eq!(r.doc["result"]["regular"]["tract"], json!({"kind": "regular_partial"}));

    let not_binary = json!({"tract": "krasner", "n": 4, "components": [
        krasner(4, 1, &["1", "2", "3", "4"]), krasner(4, 2, &["1,2", "1,3", "1,4", "2,3", "2,4", "3,4"])]});
    let r = flagtract(&["regularity", "-"], Some(&not_binary.to_string()));
    assert_eq!(r.code, 1);
    assert_eq!(r.doc["witness"]["reason"], "no GF(2) representation");
}

#[test]
fn scenarios_pass() {
    for name in ["phase-counterexample", "k-rank-1-2", "flags-of-minors-u23", "lift-roundtrip"] {
        let r = flagtract(&["scenario", name], None);
        assert_eq!(r.code, 0, "{name}: {}", r.stdout);
        assert_eq!(r.doc["result"]["failed"], 0);
    }
    let r = flagtract(&["scenario", "phase-counterexample"], None);
    let v = &r.doc["result"]["verdicts"];
    assert_eq!(
        (v["M2↠M1"].clone(), v["M3↠M2"].clone(), v["M3↠M1"].clone(), v["w_covector_M3"].clone()),
        (json!(true), json!(true), json!(false), json!(false))
    );
    assert_eq!(flagtract(&["scenario", "nope"], None).code, 2);
}
