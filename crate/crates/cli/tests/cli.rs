//! End-to-end checks of the `blocksys` verbs. Golden outputs live in
//! `tests/golden`; run with `BLESS=1` to regenerate them.

use std::path::Path;

use blocksys_cli::run;
use serde_json::Value;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn blocksys(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("blocksys").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Run { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn machine(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "machine"];
    full.extend_from_slice(args);
    let r = blocksys(&full);
    (r.code, serde_json::from_str(&r.out).unwrap_or_else(|e| panic!("{e}: {}", r.out)))
}

const GOLDEN: &[(&str, &[&str])] = &[
    ("validate_sweedler", &["validate", "tests/data/sweedler.json"]),
    ("validate_broken", &["validate", "tests/data/broken_delta.json"]),
    ("analyze_sweedler", &["analyze", "tests/data/sweedler.json"]),
    ("analyze_taft3", &["analyze", "tests/data/taft3.json"]),
    ("analyze_dual_s3", &["analyze", "tests/data/dual_s3.json"]),
    ("analyze_dual_s3_machine", &["--format", "machine", "analyze", "tests/data/dual_s3.json"]),
    ("rules_taft3", &["verify-rules", "tests/data/taft3.json"]),
    ("rules_dual_s3_machine", &["--format", "machine", "verify-rules", "tests/data/dual_s3.json"]),
    ("bound_3", &["bound", "--r", "3"]),
    ("feasible_20_2", &["feasible", "--dim", "20", "--group-order", "2"]),
    ("feasible_22_2", &["feasible", "--dim", "22", "--group-order", "2", "--trace-cap", "8"]),
    ("feasible_95_5_machine", &["--format", "machine", "feasible", "--dim", "95", "--group-order", "5"]),
    ("sweep_2", &["sweep", "--group-order", "2", "--t-max", "15"]),
    ("sweep_3_strict", &["sweep", "--group-order", "3", "--t-max", "19", "--strict-level1-divisibility"]),
];

#[test]
fn golden_outputs() {
    let bless = std::env::var_os("BLESS").is_some();
    let mut stale = Vec::new();
    for (name, args) in GOLDEN {
        let r = blocksys(args);
        let got = format!("{}exit: {}\n", r.out, r.code);
        let path = Path::new("tests/golden").join(format!("{name}.txt"));
        if bless {
            std::fs::write(&path, &got).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        if got != want {
            stale.push(format!("--- {name}\n{got}"));
        }
    }
    assert!(stale.is_empty(), "golden mismatch (BLESS=1 to update):\n{}", stale.join("\n"));
}

#[test]
fn corpus_then_analyze_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[&[&str]] = &[
        &["sweedler"],
        &["taft", "--n", "3"],
        &["taft", "--n", "4"],
        &["group-algebra", "--group", "s3"],
        &["dual-group-algebra", "--group", "c3", "--field", "zeta3"],
        &["dual-group-algebra", "--group", "s3"],
    ];
    for (i, case) in cases.iter().enumerate() {
        let mut outputs = Vec::new();
        for round in 0..2 {
            let file = dir.path().join(format!("{i}-{round}.json"));
            let file = file.to_str().unwrap();
            let mut args = vec!["corpus"];
            args.extend_from_slice(case);
            args.extend_from_slice(&["--out", file]);
            assert_eq!(blocksys(&args).code, 0, "{case:?}");
            let analysis = blocksys(&["analyze", file]);
            assert_eq!(analysis.code, 0, "{}", analysis.err);
            outputs.push((std::fs::read(file).unwrap(), analysis.out));
        }
        assert_eq!(outputs[0], outputs[1], "{case:?}");
    }
}

#[test]
fn text_and_machine_agree_on_analysis() {
    for file in ["tests/data/sweedler.json", "tests/data/taft3.json", "tests/data/dual_s3.json"] {
        let text = blocksys(&["analyze", file]).out;
        let (_, doc) = machine(&["analyze", file]);
        let p = &doc["payload"];
        assert_eq!(doc["verb"], "analyze");
        assert_eq!(doc["input"]["file"], file);
        assert!(text.contains(&format!("dimension: {}\n", p["dim"])));
        for b in p["block_system"]["blocks"].as_array().unwrap() {
            let line = format!("  B({},{},{}) = {}\n", b["level"], b["d1"], b["d2"], b["dim"]);
            assert!(text.contains(&line), "{file}: missing {line:?}");
        }
        let dims: Vec<String> = p["coradical_dims"].as_array().unwrap().iter().map(|v| v.to_string()).collect();
        assert!(text.contains(&format!("coradical filtration dims: {}\n", dims.join(" "))));
    }
}

#[test]
fn text_and_machine_agree_on_feasibility() {
    for (n, r) in [(20, 2), (22, 2), (95, 5)] {
        let (ns, rs) = (n.to_string(), r.to_string());
        let args = ["feasible", "--dim", ns.as_str(), "--group-order", rs.as_str()];
        let text = blocksys(&args);
        let (code, doc) = machine(&args);
        assert_eq!(code, text.code);
        let v = &doc["payload"]["verdict"];
        let sat = v["sat"].as_bool().unwrap();
        assert_eq!(doc["result"], if sat { "sat" } else { "unsat" });
        assert!(text.out.contains(if sat { ": SAT\n" } else { ": UNSAT\n" }));
        if let Some(cert) = v["certificate"].as_array() {
            for e in cert {
                let line = format!("  B({},{},{}) = {}\n", e["level"], e["d1"], e["d2"], e["dim"]);
                assert!(text.out.contains(&line), "missing {line:?}");
            }
        }
    }
}

#[test]
fn sweep_r2_unsat_rows() {
    let (code, doc) = machine(&["sweep", "--group-order", "2", "--t-max", "15", "--jobs", "2"]);
    assert_eq!(code, 0);
    let unsat: Vec<u64> = doc["payload"]["unsat"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect();
    assert_eq!(unsat, [1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 13, 15]);
    let text = blocksys(&["sweep", "--group-order", "2", "--t-max", "15"]).out;
    assert!(text.ends_with("r = 2: UNSAT at t = 1,2,3,4,5,6,7,8,9,11,13,15\n"));
}

#[test]
fn bound_for_r3() {
    let (code, doc) = machine(&["bound", "--r", "3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["payload"]["value"], 42);
    assert_eq!(doc["payload"]["argmin_d"], 2);
    assert_eq!(doc["payload"]["ties"], serde_json::json!([2, 3]));
}

#[test]
fn exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (&["validate", "tests/data/sweedler.json"], 0),
        (&["validate", "tests/data/coalgebra_only.json"], 0),
        (&["validate", "tests/data/broken_delta.json"], 1),
        (&["validate", "tests/data/malformed.json"], 3),
        (&["validate", "tests/data/does_not_exist.json"], 3),
        (&["analyze", "tests/data/dual_c4_q.json"], 3),
        (&["analyze", "tests/data/broken_delta.json"], 3),
        (&["verify-rules", "tests/data/coalgebra_only.json"], 3),
        (&["verify-rules", "tests/data/sweedler.json"], 0),
        (&["feasible", "--dim", "20", "--group-order", "2"], 0),
        (&["feasible", "--dim", "22", "--group-order", "2"], 1),
        (&["feasible", "--dim", "21", "--group-order", "2"], 2),
        (&["feasible", "--dim", "0", "--group-order", "2"], 2),
        (&["bound", "--r", "0"], 2),
        (&["sweep", "--group-order", "2", "--t-max", "3", "--jobs", "0"], 2),
        (&["corpus", "taft", "--n", "7", "--out", "/dev/null"], 2),
        (&["corpus", "group-algebra", "--out", "/dev/null"], 2),
        (&["frobnicate"], 2),
        (&["feasible", "--dim", "20"], 2),
    ];
    for (args, want) in cases {
        let r = blocksys(args);
        assert_eq!(r.code, *want, "{args:?}: {}", r.err);
        if *want >= 2 {
            assert!(!r.err.is_empty(), "{args:?} gave no diagnostic");
        }
    }
}

#[test]
fn errors_are_typed() {
    let r = blocksys(&["analyze", "tests/data/dual_c4_q.json"]);
    assert!(r.err.starts_with("error[non-split-component]"), "{}", r.err);
    let (code, doc) = machine(&["verify-rules", "tests/data/coalgebra_only.json"]);
    assert_eq!(code, 3);
    assert_eq!(doc["result"], "error");
    assert_eq!(doc["payload"]["kind"], "data");
    let (_, doc) = machine(&["feasible", "--dim", "21", "--group-order", "2"]);
    assert_eq!(doc["payload"]["kind"], "invalid-input");
}
