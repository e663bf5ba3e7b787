use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use lamkit::certificate::Verdict;
use lamkit::circle::Model;
use lamkit::error::{Error, Result};
use lamkit::render::{render_svg, ChordStyle, Payload, RenderOptions};
use lamkit::report::Report;
use lamkit::scenario::{run_scenario, CheckSpec, GeneratorSpec, Scenario, SCENARIO_VERSION};

#[derive(Parser)]
#[command(name = "lamkit", version, about = "Exact laminations of circle actions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Override the materialization depth.
    #[arg(long, global = true)]
    depth: Option<u32>,
    /// Override epsilon in coverage, limit-set and north-south checks.
    #[arg(long, global = true)]
    epsilon: Option<String>,
    /// Write the JSON report here.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    /// Draw the stored laminations here.
    #[arg(long, global = true)]
    svg: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario file.
    Run { scenario: PathBuf },
    /// Farey edges with bounded denominators.
    Farey {
        #[arg(long)]
        qmax: u32,
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_hyphen_values = true)]
        window: Option<Vec<String>>,
    },
    /// Classify a Möbius map.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, default_value_t = 12)]
        power_bound: u32,
    },
    /// Endpoint certificate or rainbow at a point of a scenario lamination.
    Rainbow {
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long)]
        scenario: PathBuf,
        /// Stored lamination to probe; defaults to the last one stored.
        #[arg(long)]
        lamination: Option<String>,
        #[arg(long, default_value_t = 1)]
        min_chain: u32,
    },
    /// Denjoy blow-up of a rotation and its tessellation.
    Denjoy {
        #[arg(long, default_value = "golden")]
        alpha: String,
        #[arg(long = "J", default_value_t = 3)]
        truncation: u32,
    },
    /// Moore quotient of a scenario's first two stored laminations.
    Moore {
        #[arg(long)]
        scenario: PathBuf,
    },
    /// Draw a lamination or report as SVG.
    Render {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "out")]
        output: PathBuf,
        #[arg(long)]
        straight: bool,
    },
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Scenario> {
    Scenario::from_json(&read(path)?)
}

fn scenario(model: Model, name: &str, generators: Vec<GeneratorSpec>, checks: Vec<CheckSpec>) -> Scenario {
    Scenario {
        version: SCENARIO_VERSION,
        name: name.into(),
        model,
        radicand: None,
        generators,
        assume_free: false,
        seeds: vec![],
        depth: 3,
        cusp_oracle: Default::default(),
        include_laminations: false,
        checks,
    }
}

fn last_stored(s: &Scenario) -> Option<String> {
    s.checks.iter().flat_map(CheckSpec::writes).last()
}

fn apply_common(s: &mut Scenario, c: &Common) {
    if let Some(d) = c.depth {
        s.depth = d;
        for check in &mut s.checks {
            match check {
                CheckSpec::Materialize { depth, .. } => *depth = Some(d),
                CheckSpec::GeodesicLift { radius, .. } => *radius = Some(d),
                CheckSpec::Tessellation { depth, .. } => *depth = d,
                _ => {}
            }
        }
    }
    if let Some(e) = &c.epsilon {
        for check in &mut s.checks {
            match check {
                CheckSpec::Coverage { epsilon, .. } | CheckSpec::NorthSouth { epsilon, .. } => *epsilon = json!(e),
                CheckSpec::LimitSet { epsilon, .. } => *epsilon = Some(json!(e)),
                _ => {}
            }
        }
    }
    if c.svg.is_some() {
        s.include_laminations = true;
    }
}

fn build(cmd: &Command, common: &Common) -> Result<Option<Scenario>> {
    Ok(Some(match cmd {
        Command::Run { scenario } => load(scenario)?,
        Command::Farey { qmax, window } => {
            let window = window.as_ref().map(|w| [json!(w[0]), json!(w[1])]);
            let mut checks = vec![
                CheckSpec::Farey { qmax: *qmax, window: window.clone(), store_as: Some("farey".into()) },
                CheckSpec::Gaps { lamination: "farey".into() },
            ];
            if let Some(e) = &common.epsilon {
                checks.push(CheckSpec::Coverage {
                    lamination: "farey".into(),
                    epsilon: json!(e),
                    window: window.unwrap_or([json!(0), json!(1)]),
                });
            }
            scenario(Model::ProjectiveLine, &format!("farey {qmax}"), vec![], checks)
        }
        Command::Classify { matrix, power_bound } => {
            let parts: Vec<Value> = matrix.split(',').map(|s| json!(s.trim())).collect();
            let matrix: [Value; 4] =
                parts.try_into().map_err(|_| Error::Parse("--matrix takes four comma-separated entries".into()))?;
            scenario(
                Model::ProjectiveLine,
                "classify",
                vec![GeneratorSpec::Moebius { name: "M".into(), matrix }],
                vec![CheckSpec::Classify { word: "M".into(), power_bound: *power_bound }],
            )
        }
        Command::Rainbow { point, scenario, lamination, min_chain } => {
            let mut s = load(scenario)?;
            let lam = lamination
                .clone()
                .or_else(|| last_stored(&s))
                .ok_or_else(|| Error::Invalid("the scenario stores no lamination".into()))?;
            let point: Value = serde_json::from_str(point).unwrap_or_else(|_| json!(point));
            s.checks.push(CheckSpec::Rainbow { lamination: lam, point, min_chain: *min_chain });
            s
        }
        Command::Denjoy { alpha, truncation } => {
            let depth = common.depth.unwrap_or(2);
            let a = json!(alpha);
            scenario(
                Model::BlownUp,
                "denjoy",
                vec![GeneratorSpec::BlowupRotation { name: "R".into(), alpha: a.clone(), base: json!(0), truncation: *truncation }],
                vec![
                    CheckSpec::Denjoy { alpha: a.clone(), base: json!(0), truncation: *truncation, store_as: Some("boundary".into()) },
                    CheckSpec::RotationNumber { word: "R".into(), iterations: 10_000, contains: Some(a.clone()) },
                    CheckSpec::Tessellation {
                        alpha: a,
                        base: json!(0),
                        truncation: *truncation,
                        depth,
                        only_side: None,
                        store_as: Some("tessellation".into()),
                    },
                ],
            )
        }
        Command::Moore { scenario } => {
            let mut s = load(scenario)?;
            if !s.checks.iter().any(|c| matches!(c, CheckSpec::Moore { .. })) {
                let stored: Vec<String> = s.checks.iter().flat_map(CheckSpec::writes).collect();
                let [a, b] = stored
                    .get(..2)
                    .and_then(|v| <[String; 2]>::try_from(v.to_vec()).ok())
                    .ok_or_else(|| Error::Invalid("moore needs a scenario storing two laminations".into()))?;
                let word = s
                    .generators
                    .first()
                    .map(|g| g.name().to_owned())
                    .ok_or_else(|| Error::Invalid("moore needs a generator".into()))?;
                s.checks.push(CheckSpec::Moore { laminations: [a, b], word });
            }
            s
        }
        Command::Render { input, output, straight } => {
            let payload = Payload::from_json(&read(input)?)?;
            let style = if *straight { ChordStyle::Straight } else { ChordStyle::Geodesic };
            let svg = render_svg(&payload, &RenderOptions { style, ..Default::default() })?;
            write(output, &svg)?;
            println!("wrote {}", output.display());
            return Ok(None);
        }
    }))
}

fn print(report: &Report) {
    for c in &report.checks {
        let status = match &c.certificate.verdict {
            Verdict::Proven => "proven".to_owned(),
            Verdict::Refuted { .. } => "refuted".to_owned(),
            Verdict::UnknownAtDepth { depth } => format!("unknown@{depth}"),
        };
        let mut counts: Vec<String> = c.counts.iter().map(|(k, v)| format!("{k}={v}")).collect();
        if let Some(class) = c.certificate.detail.get("class") {
            counts.push(format!("class={class}"));
        }
        println!("{:>3} {:<16} {:<12} {}", c.index, c.check, status, counts.join(" "));
        if let Some(w) = c.certificate.witness() {
            println!("    witness: {}", serde_json::to_string(w).unwrap_or_default());
        }
        if let Some(e) = c.certificate.detail.get("error") {
            println!("    error: {e}");
        }
    }
    let s = &report.summary;
    println!("proven {} refuted {} unknown {}", s.proven, s.refuted, s.unknown);
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = (|| -> Result<i32> {
        let Some(mut s) = build(&cli.command, &cli.common)? else {
            return Ok(0);
        };
        apply_common(&mut s, &cli.common);
        let report = run_scenario(s)?;
        print(&report);
        if let Some(p) = &cli.common.report {
            write(p, &report.to_json())?;
        }
        if let Some(p) = &cli.common.svg {
            write(p, &render_svg(&Payload::Report(Box::new(report.clone())), &RenderOptions::default())?)?;
        }
        Ok(report.exit_code())
    })();
    match outcome {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
