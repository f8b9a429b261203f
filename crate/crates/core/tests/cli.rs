use std::process::{Command, Output};

use dehn_core::bounds::SurgeryClass;
use dehn_core::seifert::AbelianGroup;
use serde_json::Value;

fn dehn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dehn")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_trefoil_band() {
    let o = dehn(&["seminorm", "--functionals", r#"[{"c1":1,"c2":-6}]"#, "--classify"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "Indefinite kernel 6/1, s=1");
}

#[test]
fn example_catalog() {
    let o = dehn(&["examples", "trefoil-reducible"]);
    assert!(stdout(&o).contains("L(3,1)#L(2,1)"));
    let o = dehn(&["examples", "cable-toroidal", "--k", "5", "--m", "1", "--n", "2"]);
    assert!(stdout(&o).contains("Δ(r1, r2) = 5"));
    let o = dehn(&["--format", "json", "examples", "trefoil-reducible"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let class: SurgeryClass = serde_json::from_value(v["result"].clone()).unwrap();
    assert_eq!(class, SurgeryClass::Reducible { p: 3, q: 2 });
    let o = dehn(&["examples", "pretzel-family"]);
    assert!(stdout(&o).contains("211/3"));
    assert_eq!(dehn(&["examples", "9.99"]).status.code(), Some(2));
}

#[test]
fn torus_knot_table_finite_rows() {
    let o = dehn(&["--format", "json", "bounds", "torus-knot", "3", "2", "--grid", "100", "10", "--finite-only"]);
    let rows: Vec<Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rows.len(), 71);
    for row in rows {
        let d: i64 = row["distance_to_fiber"].as_str().unwrap().parse().unwrap();
        assert!((1..=5).contains(&d));
    }
}

#[test]
fn seifert_json_roundtrip() {
    let input = r#"{"base":{"orientable":true,"genus":0},"gamma":-1,"fibers":[[2,1],[3,1],[5,1]]}"#;
    let o = dehn(&["--format", "json", "seifert", "--json", input]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let h1: AbelianGroup = serde_json::from_value(v["h1"].clone()).unwrap();
    assert!(h1.is_trivial());
    assert_eq!(v["geometry"], "spherical");
    let bad = r#"{"base":{"orientable":true,"genus":0},"gamma":0,"fibers":[[2,4]]}"#;
    assert_eq!(dehn(&["seifert", "--json", bad]).status.code(), Some(2));
    assert_eq!(dehn(&["seifert", "--json", "{"]).status.code(), Some(2));
}

#[test]
fn csv_and_output_file() {
    let o = dehn(&["--format", "csv", "cable", "klein", "--k-min", "0", "--k-max", "2"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].starts_with("k,"));
    let dir = std::env::temp_dir().join(format!("dehn-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ball.svg");
    let o = dehn(&[
        "--format",
        "svg",
        "--output",
        path.to_str().unwrap(),
        "seminorm",
        "--functionals",
        r#"[[1,0],[0,1],[1,1]]"#,
        "--ball",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(o.stdout.is_empty());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("polygon"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn precondition_exit_code() {
    let o = dehn(&["bounds", "triangle", "0", "3", "5"]);
    assert_eq!(o.status.code(), Some(3), "{}", String::from_utf8_lossy(&o.stderr));
    let o = dehn(&["pretzel", "boundary", "5"]);
    assert_eq!(o.status.code(), Some(3));
    let o = dehn(&["charvar", "sample", "2", "3", "0", "1"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn charvar_sample_is_seeded() {
    let a = dehn(&["--seed", "7", "--format", "csv", "charvar", "sample", "3", "5", "1", "2", "--points", "4"]);
    let b = dehn(&["--seed", "7", "--format", "csv", "charvar", "sample", "3", "5", "1", "2", "--points", "4"]);
    assert_eq!(a.stdout, b.stdout);
    // 4 random rows, 2 reducible parameters, the g1 critical point
    assert_eq!(stdout(&a).lines().count(), 1 + 7);
    let reducible_rows = stdout(&a).lines().filter(|l| l.contains(",true,")).count();
    assert_eq!(reducible_rows, 2);
}
