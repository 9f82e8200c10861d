use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn foldsig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_foldsig")).args(args).output().expect("binary runs")
}

fn fixture(name: &str) -> String {
    let p: PathBuf = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    p.to_str().unwrap().to_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn signature_of_the_hexagon() {
    let o = foldsig(&["signature", &fixture("hexagon_fig1.json")]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("signature (triangles): 1"));
    assert!(s.contains("boundary X : 3/2 (black/white), signature 1"), "{s}");
    assert!(s.contains("boundary XY: 2/1 (black/white), signature 1"), "{s}");
    assert!(s.contains("methods agree: yes"));

    let o = foldsig(&["signature", "--json", &fixture("hexagon_fig1.json")]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["signature_via_triangles"], 1);
    assert_eq!(v["boundary_profile"]["XY"]["black"], 2);
    assert_eq!(v["agree"], true);
}

#[test]
fn bound_of_the_unit_triangle() {
    let o = foldsig(&["--json", "bound", &fixture("unit_triangle.json")]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pick"]["boundary_count"], 3);
    assert_eq!(v["signature_upper_bound"], 1);
}

#[test]
fn solve_the_example_system() {
    let o = foldsig(&["wronski", "solve", "--json", &fixture("eqwronski.json")]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["report"]["torus_solution_count"], 4);
    assert_eq!(v["report"]["real_count"], 2);
    assert_eq!(v["report"]["generic"], true);
    assert_eq!(v["f"], "1 - x + 2*y + 2*x^2 + x*y - y^2");
    let boxes = v["report"]["distinct_real_solutions"].as_array().unwrap();
    assert!(boxes[0]["x"][0].is_string());
}

#[test]
fn non_generic_system_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let sys = dir.path().join("same.json");
    std::fs::write(&sys, r#"{"triangulation": "tri.json", "gamma_a": ["1","2","3"], "gamma_b": ["2","4","6"]}"#).unwrap();
    let tri = dir.path().join("tri.json");
    let o = foldsig(&["gen", "staircase", "2", "-o", tri.to_str().unwrap()]);
    assert!(o.status.success());
    let o = foldsig(&["wronski", "solve", sys.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn wronski_build_prints_polynomial() {
    let dir = tempfile::tempdir().unwrap();
    let tri = dir.path().join("tri.json");
    assert!(foldsig(&["gen", "staircase", "2", "-o", tri.to_str().unwrap()]).status.success());
    let o = foldsig(&["wronski", "build", tri.to_str().unwrap(), "--gamma", "1,2,-1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1 - x + 2*y + 2*x^2 + x*y - y^2");
    let o = foldsig(&["wronski", "build", tri.to_str().unwrap(), "--gamma", "1,0,2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn not_foldable_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let tri = dir.path().join("odd.json");
    std::fs::write(
        &tri,
        r#"{"points": [[0,0],[1,0],[2,0],[0,1],[1,1],[2,1],[0,2],[1,2],[2,2]],
            "triangles": [[0,1,3],[1,4,3],[1,5,4],[1,2,5],[4,5,8],[4,8,7],[3,4,7],[3,7,6]]}"#,
    )
    .unwrap();
    let o = foldsig(&["check", tri.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("foldable: no"));
    assert_eq!(foldsig(&["signature", tri.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn parse_and_usage_errors_exit_2() {
    assert_eq!(foldsig(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(foldsig(&["check", "/nonexistent/tri.json"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    assert_eq!(foldsig(&["check", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(foldsig(&["gen", "rectangle", "2"]).status.code(), Some(2));
}

#[test]
fn enumerate_streams_and_honours_limit() {
    let dir = tempfile::tempdir().unwrap();
    let poly = dir.path().join("sq.json");
    std::fs::write(&poly, r#"{"points": [[0,0],[2,0],[2,1],[0,1]]}"#).unwrap();
    let o = foldsig(&["enumerate", "--json", poly.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[6]["report"]["total_dense_count"], 6);

    let o = foldsig(&["enumerate", poly.to_str().unwrap(), "--limit", "4"]);
    assert_eq!(o.status.code(), Some(1));
    let o = Command::new(env!("CARGO_BIN_EXE_foldsig"))
        .args(["enumerate", poly.to_str().unwrap()])
        .env("FOLDSIG_LIMIT", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn generated_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    assert!(foldsig(&["gen", "hexagon-fig1", "-o", a.to_str().unwrap()]).status.success());
    let text = std::fs::read_to_string(&a).unwrap();
    let file = foldsig_core::TriangulationFile::from_json(&text).unwrap();
    assert_eq!(file.to_json() + "\n", text);
    let o = foldsig(&["gen", "hexagon-fig1"]);
    assert_eq!(stdout(&o), text);
}
