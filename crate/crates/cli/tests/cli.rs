//! Command-level tests: the documented examples, exit codes, byte-level
//! determinism and the golden JSON fixture snapshots.

use dsblock_cli::commands::run_args;

fn run(args: &[&str]) -> (String, i32) {
    let mut argv = vec!["dsblock"];
    argv.extend_from_slice(args);
    let out = run_args(argv);
    (out.text, out.code)
}

#[test]
fn diag_weight_of_the_osp32_ground_is_zero() {
    let (text, code) = run(&["diag", "weight", "--t", "1", "--k", "1", "--diagram", "-x"]);
    assert_eq!(code, 0);
    assert!(
        text.contains("eps=[\"0\"]") && text.contains("delta=[\"0\"]"),
        "{text}"
    );
}

#[test]
fn diag_parse_render_roundtrip_via_json() {
    let (json, code) = run(&[
        "diag",
        "parse",
        "--t",
        "0",
        "--k",
        "2",
        "--diagram",
        "+o;x;x",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let (text, code) = run(&["diag", "render", "--json", json.trim()]);
    assert_eq!(code, 0);
    assert_eq!(text.trim(), "+o;x;x");
}

#[test]
fn diag_stat_commands() {
    let (text, _) = run(&["diag", "tail", "--t", "1", "--k", "3", "--diagram", "+x3"]);
    assert_eq!(text.trim(), "2");
    let (text, _) = run(&[
        "diag",
        "norm",
        "--t",
        "0",
        "--k",
        "2",
        "--diagram",
        "+o;x;x",
    ]);
    assert_eq!(text.trim(), "3");
    let (text, _) = run(&[
        "diag",
        "pari",
        "--t",
        "0",
        "--k",
        "2",
        "--diagram",
        "+o;x;x",
    ]);
    assert_eq!(text.trim(), "-1");
    let (text, _) = run(&["diag", "tau", "--t", "2", "--k", "2", "--diagram", ">x;o;x"]);
    assert_eq!(text.trim(), "-x;x");
}

#[test]
fn graph_build_dot_matches_the_fork_figure() {
    let (dot, code) = run(&[
        "graph", "build", "--t", "1", "--k", "1", "--bound", "4", "--format", "dot",
    ]);
    assert_eq!(code, 0);
    assert!(dot.contains("\"-x\" -> \"+x\" [label=\"(1;2)\"]"), "{dot}");
    assert!(dot.contains("\"-x\" -> \"o;x\" [label=\"(1;1)\"]"));
    assert!(dot.contains("\"o;x\" -> \"o;o;x\" [label=\"(1;1)\"]"));
    assert!(!dot.contains("-> \"-x\""), "no edge may enter the ground");
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    for args in [
        vec![
            "graph", "build", "--t", "0", "--k", "2", "--bound", "4", "--format", "json",
        ],
        vec![
            "graph",
            "golden",
            "--name",
            "osp32_tilde",
            "--size",
            "5",
            "--format",
            "dot",
        ],
        vec![
            "char", "simple", "--family", "osp32", "--index", "2", "--depth", "14", "--format",
            "json",
        ],
        vec![
            "moves",
            "list",
            "--t",
            "0",
            "--k",
            "2",
            "--diagram",
            "x2",
            "--bound",
            "3",
            "--format",
            "json",
        ],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn usage_errors_exit_2() {
    let (_, code) = run(&["diag", "weight", "--t", "9", "--k", "1", "--diagram", "x"]);
    assert_eq!(code, 2);
    let (_, code) = run(&["graph", "golden", "--name", "nope"]);
    assert_eq!(code, 2);
    let (_, code) = run(&["nonsense"]);
    assert_eq!(code, 2);
    // k mismatch in the diagram text
    let (_, code) = run(&["diag", "tail", "--t", "0", "--k", "2", "--diagram", "x"]);
    assert_eq!(code, 2);
}

#[test]
fn graph_check_passes_and_ds_verify_reports_the_known_defect() {
    let (text, code) = run(&["graph", "check", "--t", "2", "--k", "2", "--bound", "5"]);
    assert_eq!(code, 0, "{text}");
    assert!(text.lines().all(|l| l.is_empty() || l.ends_with("PASS")));

    let (text, code) = run(&["ds", "verify", "--shape", "dinf"]);
    assert_eq!(code, 0, "{text}");
    let (text, code) = run(&["ds", "verify", "--shape", "ainf"]);
    assert_eq!(code, 1, "{text}");
    assert!(text.contains("index 1"));
}

#[test]
fn ds_block_lookup() {
    let (text, code) = run(&[
        "ds",
        "block",
        "--algebra",
        "F4",
        "--block",
        "2,2",
        "--index",
        "3",
    ]);
    assert_eq!(code, 0);
    assert!(text.contains("L_sl3(2w1+2w2)"), "{text}");
    assert!(text.contains("copies 2"), "{text}");
    let (text, code) = run(&["ds", "shape", "--shape", "ainfinf", "--index", "-3"]);
    assert_eq!(code, 0);
    assert!(text.contains("copies=1 pi_power=1"));
}

#[test]
fn char_commands() {
    let (text, code) = run(&["char", "sdim", "--family", "osp32", "--index", "2"]);
    assert_eq!(code, 0);
    assert_eq!(text.trim(), "-2");
    let (text, code) = run(&["char", "coeffs", "--family", "osp32", "--index", "3"]);
    assert_eq!(code, 0);
    let map: std::collections::BTreeMap<String, i64> = serde_json::from_str(&text).unwrap();
    assert_eq!(map["-x"], 2);
    assert_eq!(map["o;o;x"], 1);
    let (text, code) = run(&[
        "char", "euler", "--family", "osp22", "--index", "0", "--depth", "20", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let dto: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(dto["terms"].as_array().unwrap().len(), 1);
    assert_eq!(dto["terms"][0]["coeff"], 1);
}

/// The shipped golden-graph JSON files are exactly what the CLI emits.
#[test]
fn golden_fixture_snapshots() {
    let fixtures = [
        ("gl11", "4"),
        ("osp22", "4"),
        ("osp22_tilde", "4"),
        ("osp32", "5"),
        ("osp32_tilde", "5"),
        ("D21a_principal", "6"),
        ("G3_principal", "6"),
        ("F4_principal", "6"),
    ];
    for (name, size) in fixtures {
        let (text, code) = run(&[
            "graph", "golden", "--name", name, "--size", size, "--format", "json",
        ]);
        assert_eq!(code, 0);
        let path = format!("{}/fixtures/v1/{name}.json", env!("CARGO_MANIFEST_DIR"));
        let expected = std::fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("missing fixture {path}: {e}"));
        assert_eq!(text, expected, "fixture drift for {name}");
    }
}

#[test]
fn verify_all_json_shape_and_determinism() {
    let (text, code) = run(&["verify", "all", "--format", "json"]);
    // the documented red criterion makes the driver exit 1
    assert_eq!(code, 1);
    let lines: serde_json::Value = serde_json::from_str(&text).unwrap();
    let arr = lines.as_array().unwrap();
    assert_eq!(arr.len(), 13);
    let failing: Vec<u64> = arr
        .iter()
        .filter(|l| !l["pass"].as_bool().unwrap())
        .map(|l| l["id"].as_u64().unwrap())
        .collect();
    assert_eq!(failing, [10]);
    // without --timings the report is byte-identical across runs
    let again = run(&["verify", "all", "--format", "json"]);
    assert_eq!((text, code), again);
}
