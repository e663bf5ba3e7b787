use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use lamkit::render::count_class;
use lamkit::report::Report;
use lamkit::scenario::{run_scenario, Scenario};

fn lamkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lamkit")).args(args).output().expect("binary runs")
}

fn scenarios() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../scenarios")
}

fn scenario(name: &str) -> String {
    scenarios().join(name).to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn every_scenario_file_runs_with_its_exit_code() {
    let expected = [
        ("convergence.json", 0),
        ("denjoy.json", 0),
        ("empty.json", 0),
        ("farey.json", 0),
        ("limit_set.json", 0),
        ("pa_like.json", 0),
        ("punctured_torus.json", 0),
        ("rotation.json", 1),
        ("sanov_pants.json", 1),
    ];
    let mut listed: Vec<String> = std::fs::read_dir(scenarios())
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .filter(|n| n.ends_with(".json"))
        .collect();
    listed.sort();
    assert_eq!(listed, expected.iter().map(|(n, _)| n.to_string()).collect::<Vec<_>>());

    let dir = tempfile::tempdir().unwrap();
    for (name, code) in expected {
        let out = dir.path().join(format!("{name}.report.json"));
        let o = lamkit(&["run", &scenario(name), "--report", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(code), "{name}: {}", stdout(&o));
        let report = Report::from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
        assert!(report.revalidate().unwrap(), "{name}: witness does not revalidate");
        assert_eq!(report.exit_code(), code);
    }
}

#[test]
fn reports_are_deterministic_apart_from_timings() {
    let text = std::fs::read_to_string(scenario("farey.json")).unwrap();
    let a = run_scenario(Scenario::from_json(&text).unwrap()).unwrap();
    let b = run_scenario(Scenario::from_json(&text).unwrap()).unwrap();
    assert_eq!(a.body(), b.body());
    let reread = Report::from_json(&a.to_json()).unwrap();
    assert_eq!(reread.body(), a.body());
}

#[test]
fn scenarios_round_trip() {
    for e in std::fs::read_dir(scenarios()).unwrap() {
        let text = std::fs::read_to_string(e.unwrap().path()).unwrap();
        let s = Scenario::from_json(&text).unwrap();
        assert_eq!(Scenario::from_json(&s.to_json()).unwrap(), s);
    }
}

#[test]
fn farey_with_svg_draws_every_leaf() {
    let dir = tempfile::tempdir().unwrap();
    let (svg, rep) = (dir.path().join("f.svg"), dir.path().join("f.json"));
    let o = lamkit(&["farey", "--qmax", "6", "--window", "-1", "1", "--svg", svg.to_str().unwrap(), "--report", rep.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let report = Report::from_json(&std::fs::read_to_string(&rep).unwrap()).unwrap();
    let leaves = report.laminations["farey"].leaves.len();
    assert!(leaves > 0);
    assert_eq!(count_class(&std::fs::read_to_string(&svg).unwrap(), "leaf"), leaves);

    let again = dir.path().join("g.svg");
    let o = lamkit(&["render", "--in", rep.to_str().unwrap(), "--out", again.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&again).unwrap(), std::fs::read_to_string(&svg).unwrap());
}

#[test]
fn farey_coverage_uses_epsilon() {
    let o = lamkit(&["farey", "--qmax", "10", "--epsilon", "1/5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("coverage"));
    // the shortest leaf at 0 is (0, 1/10), not shorter than 1/10
    let o = lamkit(&["farey", "--qmax", "10", "--epsilon", "1/10"]);
    assert_eq!(o.status.code(), Some(2), "{}", stdout(&o));
}

#[test]
fn classify_prints_the_class() {
    let o = lamkit(&["classify", "--matrix", "2,1,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("hyperbolic"), "{}", stdout(&o));
    let o = lamkit(&["classify", "--matrix", "0,-1,1,1"]);
    assert!(stdout(&o).contains("torsion"), "{}", stdout(&o));
}

#[test]
fn rainbow_denjoy_and_moore_subcommands() {
    let o = lamkit(&["rainbow", "--point", "3/7", "--scenario", &scenario("farey.json")]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = lamkit(&["denjoy", "--alpha", "golden", "--J", "3", "--depth", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("leaves=49"), "{}", stdout(&o));
    let o = lamkit(&["moore", "--scenario", &scenario("pa_like.json")]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn bad_input_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"version": 1, "name": "x", "model": "angle", "checks": [], "extra": 1}"#).unwrap();
    assert_eq!(lamkit(&["run", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(lamkit(&["run", "/nonexistent.json"]).status.code(), Some(2));
    std::fs::write(&bad, r#"{"version": 2, "name": "x", "model": "angle", "checks": []}"#).unwrap();
    assert_eq!(lamkit(&["run", bad.to_str().unwrap()]).status.code(), Some(2));
    let out = dir.path().join("x.svg");
    assert_eq!(lamkit(&["render", "--in", bad.to_str().unwrap(), "--out", out.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(lamkit(&["classify", "--matrix", "1,2,3"]).status.code(), Some(2));
}
