//! Build a scenario in code, run it, and print the report.

use lamkit::scenario::{run_scenario, Scenario};

const SCENARIO: &str = r#"{
  "version": 1,
  "name": "farey and a rainbow",
  "model": "projective_line",
  "checks": [
    {"check": "farey", "qmax": 12, "store_as": "F"},
    {"check": "gaps", "lamination": "F"},
    {"check": "rainbow", "lamination": "F", "point": "golden", "min_chain": 3}
  ]
}"#;

fn main() {
    let s = Scenario::from_json(SCENARIO).unwrap();
    let report = run_scenario(s).unwrap();
    println!("{}", serde_json::to_string_pretty(&report.body()).unwrap());
    println!("exit code {}", report.exit_code());
}
