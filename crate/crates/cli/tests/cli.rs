use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rankbrittle"))
        .args(args)
        .env_remove("RANKBRITTLE_CAPS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .trim()
        .to_string()
}

#[test]
fn param_values_with_witnesses() {
    let out = run(&["param", "lrw", "Bg"]);
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["value"], 1);
    assert_eq!(doc["witness"]["order"].as_array().unwrap().len(), 3);

    let doc = json(&run(&[
        "param", "rbrit", "--depth", "2", "--family", "path:4",
    ]));
    assert_eq!(doc["value"], 1);
    let widths: Vec<u64> = doc["witness"]["node_widths"]
        .as_array()
        .unwrap()
        .iter()
        .map(|w| w.as_u64().unwrap())
        .collect();
    assert_eq!(widths.into_iter().max(), Some(1));

    let doc = json(&run(&[
        "param", "cutrank", "--set", "0,2", "--family", "path:4",
    ]));
    assert_eq!(doc["value"], 2);
    assert_eq!(
        doc["witness"]["independent_rows"],
        serde_json::json!([0, 2])
    );

    let doc = json(&run(&["param", "betark", "--k", "2", "--family", "path:4"]));
    assert_eq!(doc["value"], 1);
    let doc = json(&run(&["param", "rankdepth", "--family", "cycle:5"]));
    assert!(doc["witness"]["decomposition"].is_array());
}

#[test]
fn graph_from_file() {
    let dir = std::env::temp_dir().join(format!("rankbrittle-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let g6 = dir.join("p3.g6");
    std::fs::write(&g6, "Bg\n").unwrap();
    let edges = dir.join("p3.txt");
    std::fs::write(&edges, "3\n0 1\n1 2\n").unwrap();
    for f in [g6, edges] {
        let arg = format!("@{}", f.display());
        let doc = json(&run(&["param", "lrw", &arg]));
        assert_eq!(doc["input"]["graph6"], "Bg");
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn construct_outputs_graph6() {
    assert_eq!(stdout(&run(&["construct", "path:3"])), "Bg");
    let t = stdout(&run(&["construct", "subdiv_star:3"]));
    assert_eq!(t.len(), 5);
    // half graph on two edgeless pairs is P_4 with edges 0-2, 1-2, 1-3
    assert_eq!(
        stdout(&run(&["construct", "prod(half, edgeless:2, edgeless:2)"])),
        "CY"
    );
    let bad = run(&["construct", "prod(half, edgeless:2"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["param", "rbrit", "Bg"]).status.code(), Some(2));
    assert_eq!(run(&["param", "betark", "Bg"]).status.code(), Some(2));
    assert_eq!(run(&["param", "cutrank", "Bg"]).status.code(), Some(2));
    assert_eq!(
        run(&["param", "cutrank", "--set", "7", "Bg"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["param", "lrw", "B"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "L9.9"]).status.code(), Some(2));
    let big = run(&["param", "rbrit", "--depth", "2", "--family", "path:12"]);
    assert_eq!(big.status.code(), Some(3));
    assert_eq!(json(&big)["error"]["kind"], "resource");
}

#[test]
fn caps_env_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_rankbrittle"))
        .args(["param", "rbrit", "--depth", "2", "--family", "path:12"])
        .env("RANKBRITTLE_CAPS", "rbrit2=12")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(json(&out)["caps"]["rbrit2_max_n"], 12);
    let out = Command::new(env!("CARGO_BIN_EXE_rankbrittle"))
        .args(["construct", "path:3"])
        .env("RANKBRITTLE_CAPS", "nonsense")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reports() {
    for args in [
        &["verify", "L4.6-1", "--n", "2"][..],
        &["verify", "P6.1", "--n", "6", "--samples", "100"],
        &["verify", "S5-lower", "--n", "2"],
    ] {
        let out = run(args);
        assert!(out.status.success(), "{args:?}");
        let doc = json(&out);
        assert_eq!(doc["pass"], true);
        assert!(doc["checks"]
            .as_array()
            .unwrap()
            .iter()
            .all(|c| c["pass"] == true));
    }
    let table = stdout(&run(&["verify", "L4.3", "--n", "3", "--format", "table"]));
    assert!(table.lines().any(|l| l.starts_with("PASS")));
    assert!(!table.contains("FAIL"));
}

#[test]
fn reports_identical_modulo_timing() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("timing");
        v
    };
    let args = [
        "verify",
        "L4.1",
        "--n",
        "6",
        "--samples",
        "20",
        "--seed",
        "9",
    ];
    let a = strip(json(&run(&args)));
    let b = strip(json(&run(&args)));
    assert_eq!(a, b);
    let one = strip(json(&run(&[
        "--threads",
        "1",
        "param",
        "rbrit",
        "--depth",
        "2",
        "--family",
        "cycle:7",
    ])));
    let many = strip(json(&run(&[
        "--threads",
        "4",
        "param",
        "rbrit",
        "--depth",
        "2",
        "--family",
        "cycle:7",
    ])));
    assert_eq!(one, many);
}
