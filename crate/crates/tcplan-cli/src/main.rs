//! `tcplan`: plan scenarios, verify planner properties, render SVG plots.
//!
//! Exit codes: 0 success, 1 failed verification check, 2 invalid input,
//! 3 no applicable rule for the pair.

mod render;
mod scenario;
mod verify_cmd;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use tcplan::{sample_path, Error};

use scenario::{BuiltScenario, Geometry};

#[derive(Parser)]
#[command(
    name = "tcplan",
    about = "Motion planners with minimal rule counts: plan, verify, render",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Plan a scenario and write the sampled path with dispatch metadata.
    Plan {
        #[arg(long)]
        scenario: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run the verification suite for a scenario's space, or for a broken
    /// fixture (expected to fail).
    Verify {
        #[arg(long)]
        scenario: Option<PathBuf>,
        #[arg(long)]
        fixture: Option<String>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        n: usize,
        /// Write the reports as a JSON document.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Render a planar scenario as a static SVG.
    Render {
        #[arg(long)]
        scenario: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Serialize)]
struct PlanOutput {
    planner: String,
    rule_index: usize,
    rule_label: String,
    rule_count: usize,
    samples: Vec<SampleRow>,
}

#[derive(Serialize)]
struct SampleRow {
    t: f64,
    coords: Vec<f64>,
}

fn plan_scenario(built: &BuiltScenario) -> Result<tcplan::PlannedPath, i32> {
    match built.planner.plan(&built.start, &built.goal) {
        Ok(planned) => Ok(planned),
        Err(e @ Error::NoApplicableRule { .. }) => {
            eprintln!("error: {e}");
            Err(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            Err(2)
        }
    }
}

fn cmd_plan(scenario_path: &Path, out: &Path, format: Format) -> Result<i32> {
    let built = match scenario::load(scenario_path).and_then(|s| scenario::build(&s)) {
        Ok(built) => built,
        Err(e) => {
            eprintln!("error: {e:#}");
            return Ok(2);
        }
    };
    let planned = match plan_scenario(&built) {
        Ok(planned) => planned,
        Err(code) => return Ok(code),
    };

    let samples = sample_path(&planned.path, built.samples);
    let last = (built.samples - 1) as f64;
    let text = match format {
        Format::Csv => {
            let mut csv = String::new();
            let _ = writeln!(csv, "# planner: {}", built.planner.space_name());
            let _ = writeln!(
                csv,
                "# rule: {} (index {} of {})",
                planned.rule_label,
                planned.rule_index,
                built.planner.rule_count()
            );
            let header: Vec<String> = (1..=built.start.dim()).map(|i| format!("x{i}")).collect();
            let _ = writeln!(csv, "t,{}", header.join(","));
            for (i, point) in samples.iter().enumerate() {
                let coords: Vec<String> =
                    point.coords().iter().map(|c| format!("{c}")).collect();
                let _ = writeln!(csv, "{},{}", i as f64 / last, coords.join(","));
            }
            csv
        }
        Format::Json => {
            let output = PlanOutput {
                planner: built.planner.space_name().to_string(),
                rule_index: planned.rule_index,
                rule_label: planned.rule_label.clone(),
                rule_count: built.planner.rule_count(),
                samples: samples
                    .iter()
                    .enumerate()
                    .map(|(i, point)| SampleRow {
                        t: i as f64 / last,
                        coords: point.coords().to_vec(),
                    })
                    .collect(),
            };
            let mut text = serde_json::to_string_pretty(&output)?;
            text.push('\n');
            text
        }
    };
    std::fs::write(out, text)?;
    println!(
        "planned {} -> {} with rule {} ({} of {}), {} samples -> {}",
        built.start,
        built.goal,
        planned.rule_label,
        planned.rule_index,
        built.planner.rule_count(),
        built.samples,
        out.display()
    );
    Ok(0)
}

fn cmd_render(scenario_path: &Path, out: &Path) -> Result<i32> {
    let built = match scenario::load(scenario_path).and_then(|s| scenario::build(&s)) {
        Ok(built) => built,
        Err(e) => {
            eprintln!("error: {e:#}");
            return Ok(2);
        }
    };
    if let Geometry::NotPlanar { ambient_dim } = built.geometry {
        eprintln!("error: cannot render ambient dimension {ambient_dim}, only planar scenarios");
        return Ok(2);
    }
    let planned = match plan_scenario(&built) {
        Ok(planned) => planned,
        Err(code) => return Ok(code),
    };
    let svg = render::render(&built, &planned.path);
    std::fs::write(out, svg)?;
    println!("rendered {} -> {}", scenario_path.display(), out.display());
    Ok(0)
}

fn cmd_verify(
    scenario_path: Option<PathBuf>,
    fixture: Option<String>,
    seed: u64,
    n: usize,
    report: Option<PathBuf>,
) -> Result<i32> {
    let space = match scenario_path {
        Some(path) => match scenario::load(&path) {
            Ok(s) => Some(s.space),
            Err(e) => {
                eprintln!("error: {e:#}");
                return Ok(2);
            }
        },
        None => None,
    };
    match verify_cmd::run(space, fixture, seed, n, report.as_deref()) {
        Ok(code) => Ok(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            Ok(2)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Plan {
            scenario,
            out,
            format,
        } => cmd_plan(&scenario, &out, format),
        Command::Verify {
            scenario,
            fixture,
            seed,
            n,
            report,
        } => cmd_verify(scenario, fixture, seed, n, report),
        Command::Render { scenario, out } => cmd_render(&scenario, &out),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
