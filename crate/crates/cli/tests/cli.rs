use std::path::PathBuf;

use rootloop_cli::{run, Output};
use rootloop_core::{
    classify_finite_type, compute_rooted_group, coset_set, enumerate_cluster_pattern, fixtures,
    isomorphic, quiver_dot, CosetReport, EqualityMode, GroupCaps, GroupReport, PatternReport, Seed,
    TraceReport, DEFAULT_PATTERN_CAP,
};
use serde_json::Value;

fn cli(args: &str) -> Output {
    run(std::iter::once("rootloop").chain(args.split_whitespace()))
}

fn json(args: &str) -> Value {
    let out = cli(&format!("{args} --format json"));
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{args}: {e}\n{}", out.stderr))
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn mutate_a2_pentagon() {
    let out = cli("mutate --quiver a2 --word 1,2,1,2,1");
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, golden("mutate_a2.txt"));
    assert!(out.stdout.contains("final: ((x2, x1), [2->1 (1,1)])"));
}

#[test]
fn group_a2_symmetric() {
    let out = cli("group --quiver a2 --mode symmetric");
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, golden("group_a2.txt"));
    assert!(out.stdout.contains("order: 2\n"));
}

#[test]
fn finite_w4_is_infinite() {
    let out = cli("finite --quiver w4");
    assert_eq!(out.code, 4);
    assert_eq!(out.stdout, golden("finite_w4.txt"));
    assert_eq!(json("finite --quiver w4")["verdict"], "infinite");
}

#[test]
fn exit_codes() {
    assert_eq!(cli("mutate --quiver a2 --word 1,x").code, 2);
    assert_eq!(cli("mutate --quiver nope --word 1").code, 2);
    assert_eq!(cli("group --quiver a2 --mode sideways").code, 2);
    assert_eq!(cli("frobnicate").code, 2);
    assert_eq!(cli("mutate --quiver a2 --word 3").code, 3);
    assert_eq!(cli("mutate --quiver a3 --mutable 1,2 --word 3").code, 3);
    assert_eq!(cli("group --quiver w4").code, 4);
    assert_eq!(cli("classify --quiver w4").code, 4);
    assert_eq!(cli("iso --quiver a3 --other w4").code, 4);
    assert_eq!(cli("cosets --quiver w4").code, 4);
    assert_eq!(cli("explore --quiver markov").code, 4);
    assert_eq!(cli("export-dot --quiver w4 --pattern").code, 4);
    assert_eq!(cli("export-dot --quiver w4").code, 0);
    assert_eq!(cli("finite --quiver a3 --cap 3").code, 5);
    assert_eq!(cli("explore --quiver a3 --cap 3").code, 5);
    assert_eq!(cli("group --quiver a3 --max-elements 2").code, 5);
    assert_eq!(cli("--help").code, 0);
}

#[test]
fn quiver_files_are_read() {
    let dir = std::env::temp_dir().join(format!("rootloop-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let b2 = dir.join("b2.json");
    std::fs::write(
        &b2,
        r#"{"n": 2, "edges": [{"from": 1, "to": 2, "val": [1, 2]}]}"#,
    )
    .unwrap();
    let v = json(&format!("classify --quiver {}", b2.display()));
    assert_eq!(v["dynkin_label"], "B_2");
    let loop_edge = dir.join("loop.json");
    std::fs::write(
        &loop_edge,
        r#"{"n": 2, "edges": [{"from": 1, "to": 1, "val": [1, 1]}]}"#,
    )
    .unwrap();
    assert_eq!(
        cli(&format!("finite --quiver {}", loop_edge.display())).code,
        3
    );
    let broken = dir.join("broken.json");
    std::fs::write(&broken, "{\"n\": ").unwrap();
    assert_eq!(
        cli(&format!("finite --quiver {}", broken.display())).code,
        2
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn parity_with_the_engine() {
    let mode = EqualityMode::default();
    let a2 = Seed::initial(&fixtures::a2());
    let trace = a2.apply_word(&"1,2,1,2,1".parse().unwrap()).unwrap();
    assert_eq!(
        json("mutate --quiver a2 --word 1,2,1,2,1"),
        serde_json::to_value(TraceReport::new(&trace, mode)).unwrap()
    );

    for name in ["a2", "b2", "g2", "a3"] {
        let root = Seed::initial(&fixtures::builtin(name).unwrap());
        let g = compute_rooted_group(&root, mode, GroupCaps::default()).unwrap();
        assert_eq!(
            json(&format!("group --quiver {name}")),
            serde_json::to_value(GroupReport::from(&g)).unwrap()
        );
        let p =
            enumerate_cluster_pattern(&root, EqualityMode::Strict, DEFAULT_PATTERN_CAP).unwrap();
        assert_eq!(
            json(&format!("explore --quiver {name} --mode strict")),
            serde_json::to_value(PatternReport::from(&p)).unwrap()
        );
        let c = coset_set(&root, mode, DEFAULT_PATTERN_CAP).unwrap();
        assert_eq!(
            json(&format!("cosets --quiver {name}")),
            serde_json::to_value(CosetReport::new(mode, &c)).unwrap()
        );
        let r = classify_finite_type(&root, DEFAULT_PATTERN_CAP).unwrap();
        assert_eq!(
            json(&format!("classify --quiver {name}")),
            serde_json::to_value(r).unwrap()
        );
    }

    let r = isomorphic(
        &Seed::initial(&fixtures::a3()),
        &Seed::initial(&fixtures::b3()),
        DEFAULT_PATTERN_CAP,
    )
    .unwrap();
    assert_eq!(
        json("iso --quiver a3 --other b3"),
        serde_json::to_value(r).unwrap()
    );
    assert_eq!(
        cli("export-dot --quiver b3").stdout,
        quiver_dot(&fixtures::b3())
    );
}

#[test]
fn json_reports_round_trip() {
    let v = json("group --quiver b2");
    let back: GroupReport = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(serde_json::to_value(back).unwrap(), v);
    let v = json("explore --quiver a2");
    let back: PatternReport = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(serde_json::to_value(back).unwrap(), v);
}

#[test]
fn output_is_deterministic() {
    for args in [
        "loops --quiver a3 --max-len 8",
        "group --quiver a3",
        "explore --quiver b3 --dot",
        "cosets --quiver d4",
    ] {
        assert_eq!(cli(args), cli(args), "{args}");
    }
}

#[test]
fn loops_and_dot() {
    let v = json("loops --quiver a2 --max-len 10");
    let words: Vec<&Value> = v["loops"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| &l["word"])
        .collect();
    assert!(words.contains(&&serde_json::json!([1, 2, 1, 2, 1])));
    assert!(words.contains(&&serde_json::json!([2, 1, 2, 1, 2])));
    let dot = cli("explore --quiver a2 --mode strict --dot").stdout;
    assert!(dot.starts_with("digraph pattern {"));
    assert_eq!(dot.matches("->").count(), 20);
    assert_eq!(
        cli("export-dot --quiver a2 --pattern --mode strict").stdout,
        dot
    );
}
