use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn dehnfill(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dehnfill")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    let out = dehnfill(&full);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

#[test]
fn family_reports() {
    let r = json(&["family", "xe", "--e", "4"]);
    assert_eq!(r["schema"], "dehnfill.report/1");
    assert_eq!(r["input"]["e"], 4);
    let chars = &r["result"]["pair"]["chars"];
    assert_eq!((chars["chi"].as_i64(), chars["tau"].as_i64()), (Some(4), Some(-4)));
    assert_eq!(r["result"]["cusped"]["cusps"], serde_json::json!([4, 4, 4, 4]));
    assert_eq!(r["result"]["log_bmy"]["status"], "EQUALITY");

    let r = json(&["family", "ye", "--e", "2"]);
    assert_eq!(r["result"]["cusped"]["cusps"], serde_json::json!([2, 2, 2, 1, 1]));
    assert_eq!(r["result"]["cusped"]["tau"], 3);
    assert_eq!(r["result"]["cover_viewpoint"]["consistent"], true);

    let r = json(&["family", "hirzebruch"]);
    assert_eq!(r["input"]["e"], 1);
    assert_eq!(r["result"]["configuration"]["incidences"].as_array().unwrap().len(), 1);
}

#[test]
fn fill_reports() {
    let r = json(&["fill", "ye", "--e", "3", "euler=3"]);
    let after = &r["result"]["after"];
    assert_eq!((after["chi"].as_i64(), after["tau"].as_i64()), (Some(3), Some(0)));
    assert_eq!(after["cusps"], serde_json::json!([1, 1, 1]));
    assert_eq!(r["result"]["verdict"]["status"], "EQUALITY");
    assert_eq!(r["result"]["splitting"]["obstructed"], true);

    let r = json(&["fill", "xe", "--e", "2", "all"]);
    assert_eq!(r["result"]["after"]["tau"], -2);
    assert_eq!(r["result"]["test"], "hitchin_thorpe");
    assert_eq!(r["result"]["verdict"]["status"], "VIOLATED");

    let r = json(&["fill", "ye", "--e", "2", "none"]);
    assert_eq!(r["result"]["verdict"]["status"], "STRICT");
    assert_eq!(r["result"]["verdict"]["margin"], serde_json::json!({"num": 1, "den": 1}));
    assert_eq!(r["result"]["l2_signature"], serde_json::json!({"num": 2, "den": 3}));

    let r = json(&["fill", "ye", "--e", "1", "0,1,2"]);
    assert_eq!(r["result"]["splitting"]["outcome"], "negative_constant_only");
}

#[test]
fn check_reports() {
    let r = json(&["check", "--chi", "5", "--tau", "-5"]);
    assert_eq!(r["result"]["hitchin_thorpe"]["margin"], serde_json::json!({"num": -5, "den": 2}));
    let r = json(&["check", "--chi", "10", "--tau", "0", "--cusps", "3,3"]);
    assert_eq!(r["result"]["dai_wei"]["status"], "STRICT");
    assert_eq!(r["result"]["splitting"]["outcome"], "no_obstruction");
    let r = json(&["check", "--chi", "1", "--tau", "-1", "--c1sq", "-1"]);
    assert_eq!(r["result"]["noether"], true);
    let r = json(&["check", "--chi", "5", "--tau", "-4", "--c1sq", "-2"]);
    assert_eq!(r["result"]["noether"], false);
}

#[test]
fn cover_search_reports() {
    let r = json(&["cover-search", "census", "--p", "5"]);
    assert_eq!(r["result"]["census"]["total"], 156);
    assert_eq!(r["result"]["census"]["bad"], 24);
    assert_eq!(r["result"]["bound_positive"], true);

    let r = json(&["cover-search", "cyclic", "--e", "6"]);
    for plane in r["result"]["planes"].as_array().unwrap() {
        assert_eq!(plane["components"], 1);
    }
    let r = json(&["cover-search", "prime", "--p", "2"]);
    assert_eq!(r["result"]["cover"]["n"], 2);
}

#[test]
fn seed_plane_files_in_both_layouts() {
    let dir = std::env::temp_dir().join(format!("dehnfill-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let flat = dir.join("flat.json");
    let paired = dir.join("paired.json");
    std::fs::write(
        &flat,
        "[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1],[1,0,1,0],[0,1,0,1],[1,0,0,1],[0,1,-1,1]]",
    )
    .unwrap();
    std::fs::write(
        &paired,
        "[[[1,0,0,0],[0,1,0,0]],[[0,0,1,0],[0,0,0,1]],[[1,0,1,0],[0,1,0,1]],[[1,0,0,1],[0,1,-1,1]]]",
    )
    .unwrap();
    let a = json(&["cover-search", "prime", "--p", "3", "--seed-planes", flat.to_str().unwrap()]);
    let b = json(&["cover-search", "prime", "--p", "3", "--seed-planes", paired.to_str().unwrap()]);
    let default = json(&["cover-search", "prime", "--p", "3"]);
    assert_eq!(a["result"], b["result"]);
    assert_eq!(a["result"], default["result"]);

    std::fs::write(&flat, "[[1,0,0,0],[0,1,0,0]]").unwrap();
    let out = dehnfill(&["cover-search", "prime", "--p", "3", "--seed-planes", flat.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn points_listing() {
    let r = json(&["points", "ye", "--e", "3"]);
    assert_eq!(r["result"]["count"], 3);
    for p in r["result"]["points"].as_array().unwrap() {
        assert_eq!(p["curves"].as_array().unwrap().len(), 4);
    }
    let r = json(&["points", "xe", "--e", "5"]);
    assert_eq!(r["result"]["count"], 5);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["family", "ye", "--e", "3"][..],
        &["fill", "xe", "--e", "6", "all", "--json"][..],
        &["cover-search", "census", "--p", "7", "--json"][..],
    ] {
        let (a, b) = (dehnfill(args), dehnfill(args));
        assert_eq!(a.stdout, b.stdout);
        assert!(!a.stdout.is_empty());
    }
}

#[test]
fn golden_reports() {
    for (file, args) in [
        ("family_hirzebruch.json", &["family", "hirzebruch", "--json"][..]),
        ("fill_ye_3.json", &["fill", "ye", "--e", "3", "euler=3", "--json"][..]),
        ("census_5.json", &["cover-search", "census", "--p", "5", "--json"][..]),
    ] {
        let out = dehnfill(args);
        let expected = std::fs::read_to_string(golden(file)).unwrap();
        assert_eq!(String::from_utf8(out.stdout).unwrap(), expected, "{file}");
    }
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| dehnfill(args).status.code();
    // verdicts never fail the run
    assert_eq!(code(&["check", "--chi", "1", "--tau", "-5"]), Some(0));
    assert_eq!(code(&["fill", "xe", "--e", "3"]), Some(0));
    // usage
    assert_eq!(code(&["family", "klein"]), Some(2));
    assert_eq!(code(&["family", "xe"]), Some(2));
    assert_eq!(code(&["family", "xe", "--e", "0"]), Some(2));
    assert_eq!(code(&["family", "hirzebruch", "--e", "2"]), Some(2));
    assert_eq!(code(&["fill", "ye", "--e", "2", "euler=9"]), Some(2));
    assert_eq!(code(&["fill", "ye", "--e", "2", "7"]), Some(2));
    assert_eq!(code(&["cover-search", "prime", "--p", "6"]), Some(2));
    assert_eq!(code(&["cover-search", "census"]), Some(2));
    assert_eq!(code(&["check", "--chi", "1", "--tau", "0", "--cusps", "0"]), Some(2));
    assert_eq!(code(&["check", "--chi", "1", "--tau", "0", "--c1sq", "5"]), Some(2));
    assert_eq!(code(&["--help"]), Some(0));
    // computation: the last plane shares a line with the first
    let dir = std::env::temp_dir().join(format!("dehnfill-exit-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("planes.json");
    std::fs::write(&f, "[[[1,0,0,0],[0,1,0,0]],[[0,0,1,0],[0,0,0,1]],[[1,0,1,0],[0,1,0,1]],[[1,0,0,0],[0,0,0,1]]]").unwrap();
    let out = dehnfill(&["cover-search", "cyclic", "--e", "2", "--seed-planes", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}
