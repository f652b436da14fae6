use std::process::{Command, Output};

use serde_json::Value;

use setdev::abgroup::GroupHom;
use setdev::finset::{Deviation, Mapping};
use setdev::verifier::{Record, REPORT_SCHEMA};

fn setdev(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_setdev"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn machine(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "machine"]);
    let o = setdev(&all);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["schema"], REPORT_SCHEMA);
    v
}

const SMALL: &[&str] = &[
    "--max-size",
    "2",
    "--max-group-order",
    "4",
    "--max-pair-group-order",
    "4",
    "--max-oracle-group-order",
    "4",
    "--max-embed-group-order",
    "8",
];

#[test]
fn dev_example() {
    let v = machine(&["dev", r#"{"dom":3,"cod":2,"table":[0,0,1]}"#]);
    let d: Deviation = serde_json::from_value(v["deviation"].clone()).unwrap();
    assert_eq!(serde_json::to_string(&d.part).unwrap(), "[[0,1],[2]]");
    assert!(d.missed.is_empty());
    assert_eq!(v["classification"]["surjective"], true);
    assert_eq!(v["classification"]["injective"], false);
    let f: Mapping = serde_json::from_value(v["mapping"].clone()).unwrap();
    assert_eq!(f.table(), &[0, 0, 1]);
    for key in ["proj", "mid", "incl"] {
        serde_json::from_value::<Mapping>(v["factorization"][key].clone()).unwrap();
    }

    let text = stdout(&setdev(&["dev", r#"{"dom":3,"cod":2,"table":[0,0,1]}"#]));
    assert!(text.contains("[[0,1],[2]]"), "{text}");
}

#[test]
fn factor_and_dot() {
    let v = machine(&["factor", r#"{"dom":2,"cod":3,"table":[2,2]}"#]);
    let mid: Mapping = serde_json::from_value(v["mid"].clone()).unwrap();
    assert!(mid.is_bijective());
    let dot = stdout(&setdev(&[
        "dev",
        "--dot",
        r#"{"dom":2,"cod":3,"table":[2,2]}"#,
    ]));
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("style=dashed"));
}

#[test]
fn group_example() {
    let v = machine(&["group", r#"{"dom":[4],"cod":[4],"matrix":[[2]]}"#]);
    assert_eq!(v["devg"]["first"], serde_json::json!([2]));
    assert_eq!(v["devg"]["second"], serde_json::json!([2]));
    serde_json::from_value::<GroupHom>(v["hom"].clone()).unwrap();

    let o = setdev(&["group", r#"{"dom":[2],"cod":[3],"matrix":[[1]]}"#]);
    assert_eq!(o.status.code(), Some(2));
    assert!(
        stderr(&o).contains("3 does not divide 2·1"),
        "{}",
        stderr(&o)
    );
}

#[test]
fn chu_examples() {
    let v = machine(&["chu", r#"{"dom":2,"cod":2,"table":[0,0]}"#]);
    assert_eq!(v["valid"], true);
    assert_eq!(
        v["morphism"]["backward"]["table"],
        serde_json::json!([0, 3, 0, 3])
    );
    let v = machine(&["chu", "--e-deviation", "3"]);
    let d: Deviation = serde_json::from_value(v["deviation"].clone()).unwrap();
    assert_eq!(
        d.part.blocks().iter().map(Vec::len).collect::<Vec<_>>(),
        [12, 12]
    );
    assert_eq!(
        setdev(&["chu", "--e-deviation", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(setdev(&["chu"]).status.code(), Some(2));
}

#[test]
fn input_errors_exit_two() {
    let o = setdev(&["dev", r#"{"dom":2,"cod":2,"table":[0,7]}"#]);
    assert_eq!(o.status.code(), Some(2));
    let o = setdev(&["dev", r#"{"dom":2,"cod":2,"table":[0,"#]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 1 column"), "{}", stderr(&o));
    assert_eq!(
        setdev(&["verify", "--claims", "NOPE"]).status.code(),
        Some(2)
    );
    assert_eq!(
        setdev(&["verify", "--max-size", "9"]).status.code(),
        Some(2)
    );
    assert_eq!(setdev(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_records_round_trip() {
    let mut args = vec!["verify", "--format", "machine"];
    args.extend(SMALL);
    let o = setdev(&args);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    for line in text.lines() {
        let rec: Record = serde_json::from_str(line).unwrap();
        assert!(rec.matches, "{line}");
        assert_eq!(serde_json::to_string(&rec).unwrap(), line);
    }
    assert_eq!(text, stdout(&setdev(&args)));
}

#[test]
fn verify_selection_list_and_timings() {
    let o = setdev(&[
        "verify",
        "--claims",
        "T1.1,0.3",
        "--format",
        "machine",
        "--timings",
        "--max-size",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let recs: Vec<Record> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(
        recs.iter().map(|r| r.id.as_str()).collect::<Vec<_>>(),
        ["T1.1", "0.3"]
    );
    assert!(recs.iter().all(|r| r.millis.is_some()));

    let list = stdout(&setdev(&["verify", "--list"]));
    assert_eq!(list.lines().count(), setdev::verifier::claims().len());
}

#[test]
fn text_report_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let mut args = vec!["counterexamples", "--output", path.to_str().unwrap()];
    args.extend(SMALL);
    let o = setdev(&args);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("T1.2-counterexample"), "{text}");
    assert!(!text.contains("MISMATCH"));
}

#[test]
fn universe_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("u.json");
    std::fs::write(
        &path,
        r#"{"max_set_size": 2, "max_triple_size": 2, "max_powerset_base": 2}"#,
    )
    .unwrap();
    let o = setdev(&[
        "verify",
        "--claims",
        "L1.1",
        "--universe",
        path.to_str().unwrap(),
        "--format",
        "machine",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    std::fs::write(&path, r#"{"max_sets": 2}"#).unwrap();
    let o = setdev(&["verify", "--universe", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}
