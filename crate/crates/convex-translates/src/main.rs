//! Thin command-line front end over the library: strict theorem
//! verification, fuzz campaigns, the counterexample gallery, chord-function
//! profiles and arrangement figures.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use convex_translates::body::Angle;
use convex_translates::chords::max_chord;
use convex_translates::fuzz::{run_campaign, FuzzConfig};
use convex_translates::gallery;
use convex_translates::intersection::IntersectError;
use convex_translates::io::{ArrangementFile, BodyFile};
use convex_translates::svg;

#[derive(Parser)]
#[command(
    name = "convex-translates",
    version,
    about = "Intersections of convex planar translates and their boundary singularities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Strict-mode theorem check of an arrangement JSON file.
    Verify { arrangement: PathBuf },
    /// Seeded verification campaign over random arrangements; prints the
    /// JSON report.
    Fuzz {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        /// Also write the report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run all sharpness scenarios, write one SVG each plus a JSON summary.
    Gallery {
        #[arg(long, default_value = "gallery-out")]
        out: PathBuf,
    },
    /// Chord-function profile of a body perpendicular to a direction.
    Chords {
        body: PathBuf,
        /// Direction angle w in radians.
        #[arg(long)]
        w: f64,
        #[arg(long, default_value_t = 1001)]
        samples: usize,
        #[arg(long, default_value = "chords.svg")]
        svg: PathBuf,
    },
    /// Figure of an arrangement: bodies, intersection, singular points.
    Plot {
        arrangement: PathBuf,
        #[arg(long, default_value = "plot.svg")]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Verify { arrangement } => {
            let file: ArrangementFile = read_json(&arrangement)?;
            let arr = file
                .to_arrangement()
                .map_err(|e| format!("{}: {e}", arrangement.display()))?;
            match arr.verify_theorem(true) {
                Ok(report) => {
                    println!("{}", to_json(&report)?);
                    Ok(report.pass)
                }
                Err(IntersectError::HypothesisViolated(h)) => {
                    println!(
                        "{}",
                        to_json(&serde_json::json!({
                            "pass": false,
                            "hypothesis_violated": format!("{h}"),
                        }))?
                    );
                    Ok(false)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Fuzz {
            seed,
            trials,
            n_min,
            n_max,
            out,
        } => {
            let cfg = FuzzConfig {
                seed,
                trials,
                n_range: (n_min, n_max),
                ..FuzzConfig::default()
            };
            let report = run_campaign(&cfg).map_err(|e| e.to_string())?;
            let json = to_json(&report)?;
            println!("{json}");
            if let Some(path) = out {
                fs::write(&path, format!("{json}\n"))
                    .map_err(|e| format!("{}: {e}", path.display()))?;
            }
            Ok(report.all_pass())
        }
        Command::Gallery { out } => {
            fs::create_dir_all(&out).map_err(|e| format!("{}: {e}", out.display()))?;
            let mut summaries = Vec::new();
            let mut all_pass = true;
            for name in gallery::SCENARIO_NAMES {
                let scenario = gallery::scenario(name).map_err(|e| e.to_string())?;
                let outcome = gallery::run_scenario(&scenario).map_err(|e| e.to_string())?;
                let figure = svg::render_scenario(&scenario, &outcome);
                let path = out.join(format!("{name}.svg"));
                fs::write(&path, figure).map_err(|e| format!("{}: {e}", path.display()))?;
                all_pass &= outcome.pass;
                summaries.push(serde_json::json!({
                    "scenario": outcome.scenario,
                    "expected": outcome.expected,
                    "actual": outcome.actual,
                    "pass": outcome.pass,
                }));
            }
            let summary = to_json(&summaries)?;
            println!("{summary}");
            let path = out.join("summary.json");
            fs::write(&path, format!("{summary}\n"))
                .map_err(|e| format!("{}: {e}", path.display()))?;
            Ok(all_pass)
        }
        Command::Chords {
            body,
            w,
            samples,
            svg: svg_path,
        } => {
            let file: BodyFile = read_json(&body)?;
            let b = file
                .to_body()
                .map_err(|e| format!("{}: {e}", body.display()))?;
            let profile = max_chord(&b, Angle::new(w));
            let sampled = profile.samples(samples.max(2));
            println!(
                "{}",
                to_json(&serde_json::json!({
                    "w": w,
                    "t_max": profile.t_max(),
                    "eta": profile.eta(),
                    "samples": sampled,
                }))?
            );
            let figure = svg::render_chord_profile(&sampled, profile.t_max(), profile.eta());
            fs::write(&svg_path, figure).map_err(|e| format!("{}: {e}", svg_path.display()))?;
            Ok(true)
        }
        Command::Plot { arrangement, out } => {
            let file: ArrangementFile = read_json(&arrangement)?;
            let arr = file
                .to_arrangement()
                .map_err(|e| format!("{}: {e}", arrangement.display()))?;
            let shape = arr.intersect();
            let figure = svg::render_arrangement(&arr, &shape);
            fs::write(&out, figure).map_err(|e| format!("{}: {e}", out.display()))?;
            Ok(true)
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string_pretty(value).map_err(|e| e.to_string())
}
