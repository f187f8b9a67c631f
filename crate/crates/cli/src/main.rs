//! Command-line front end: spline construction, boundary-sensitivity
//! certification, monotonicity reports and convergence studies.
//!
//! Exit codes: 0 on success (including informational "hypotheses not met"
//! outcomes), 1 when a certification or verification fails, 2 on usage,
//! file or parse errors.

mod data;

use std::fs;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use clampline::bounds::{certify_pair_bound, convergence_study, ConvergenceConfig};
use clampline::monotonicity::{
    fritsch_carlson_necessary, obstruction_hypotheses, obstruction_sweep, piece_is_monotone,
    search_obstruction, spline_is_monotone, Direction, ObstructionReport, SearchOutcome,
};
use clampline::{CubicSpline, SplineInput};
use data::DataFile;

/// Environment variable holding the default sample resolution for
/// `--samples-per-piece`.
const SAMPLES_ENV: &str = "CLAMPLINE_SAMPLES";
const DEFAULT_SAMPLES: usize = 1000;

#[derive(Parser)]
#[command(name = "clampline", version, about = "C2 cubic splines with prescribed endpoint derivatives: construction, boundary-sensitivity bounds, monotonicity analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a spline from a data file and emit it as JSON (optionally
    /// with sampled values as CSV).
    Build {
        /// CSV file of x,f rows; `-` reads stdin.
        data: String,
        /// Prescribed first derivative at the left endpoint.
        #[arg(allow_negative_numbers = true, long = "left-deriv")]
        left_deriv: f64,
        /// Prescribed first derivative at the right endpoint.
        #[arg(allow_negative_numbers = true, long = "right-deriv")]
        right_deriv: f64,
        /// Write the spline JSON here instead of stdout.
        #[arg(long)]
        out: Option<String>,
        /// Also emit this many equispaced sample rows
        /// (x, value, derivative, second_derivative) as CSV.
        #[arg(long)]
        samples: Option<usize>,
        /// Write the sample CSV here instead of stdout.
        #[arg(long = "samples-out")]
        samples_out: Option<String>,
    },
    /// Build two splines differing only in their endpoint derivatives and
    /// compare the measured per-piece distance against the decay bound.
    Compare {
        data: String,
        #[arg(allow_negative_numbers = true, long)]
        left1: f64,
        #[arg(allow_negative_numbers = true, long)]
        right1: f64,
        #[arg(allow_negative_numbers = true, long)]
        left2: f64,
        #[arg(allow_negative_numbers = true, long)]
        right2: f64,
        /// Sample points per piece (default: CLAMPLINE_SAMPLES or 1000).
        #[arg(long = "samples-per-piece")]
        samples_per_piece: Option<usize>,
    },
    /// Per-piece monotonicity report: sign conditions and exact verdicts.
    Mono {
        data: String,
        #[arg(allow_negative_numbers = true, long = "left-deriv")]
        left_deriv: f64,
        #[arg(allow_negative_numbers = true, long = "right-deriv")]
        right_deriv: f64,
    },
    /// Check the endpoint-derivative obstruction on given data, or search
    /// for a qualifying instance, and sweep the admissible box.
    Obstruction {
        /// CSV file of x,f rows; omit when using --search.
        data: Option<String>,
        /// Search for a qualifying instance with this many knots (odd, >= 7).
        #[arg(long)]
        search: Option<usize>,
        /// Seed for the randomized search.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Attempt budget for the search.
        #[arg(long, default_value_t = 10_000)]
        attempts: usize,
        /// Endpoint derivatives of the data-file spline.
        #[arg(allow_negative_numbers = true, long = "left-deriv", default_value_t = 0.0)]
        left_deriv: f64,
        #[arg(allow_negative_numbers = true, long = "right-deriv", default_value_t = 0.0)]
        right_deriv: f64,
        /// Interior piece to test (1-based); scans all candidates if omitted.
        #[arg(long)]
        i0: Option<usize>,
        /// Sweep grid resolution per axis.
        #[arg(long, default_value_t = 101)]
        resolution: usize,
    },
    /// Grid-refinement study of the interior error of a perturbed-clamp
    /// spline; emits CSV rows.
    Converge {
        /// Test function: sin, exp, or poly (with --coeffs).
        #[arg(long, default_value = "sin")]
        function: String,
        /// Polynomial coefficients a0,a1,... (lowest degree first).
        #[arg(allow_negative_numbers = true, long, value_delimiter = ',')]
        coeffs: Vec<f64>,
        /// Interval endpoints.
        #[arg(allow_negative_numbers = true, long, num_args = 2, default_values_t = [0.0, 3.0])]
        interval: Vec<f64>,
        /// Number of dyadic levels.
        #[arg(long, default_value_t = 6)]
        levels: usize,
        /// Decay exponent of the interior window.
        #[arg(allow_negative_numbers = true, long, default_value_t = 1.0)]
        p: f64,
        /// Perturbation added to the exact left endpoint derivative.
        #[arg(allow_negative_numbers = true, long, default_value_t = 0.0)]
        perturb: f64,
        /// Perturbation added to the exact right endpoint derivative.
        #[arg(allow_negative_numbers = true, long = "perturb-right", default_value_t = 0.0)]
        perturb_right: f64,
        /// Intervals on the coarsest level.
        #[arg(long = "base-intervals", default_value_t = 10)]
        base_intervals: usize,
        #[arg(long = "samples-per-piece")]
        samples_per_piece: Option<usize>,
    },
}

#[derive(Serialize, Deserialize)]
struct PieceDocument {
    left_knot: f64,
    right_knot: f64,
    c1: f64,
    c2: f64,
    c3: f64,
    c4: f64,
}

#[derive(Serialize, Deserialize)]
struct SplineDocument {
    knots: Vec<f64>,
    values: Vec<f64>,
    left_derivative: f64,
    right_derivative: f64,
    derivatives: Vec<f64>,
    pieces: Vec<PieceDocument>,
}

impl SplineDocument {
    fn from_spline(input: &SplineInput, spline: &CubicSpline) -> Self {
        Self {
            knots: spline.knots().to_vec(),
            values: spline.values().to_vec(),
            left_derivative: input.left_derivative(),
            right_derivative: input.right_derivative(),
            derivatives: spline.derivatives().to_vec(),
            pieces: spline
                .pieces()
                .iter()
                .map(|p| {
                    let [c1, c2, c3, c4] = *p.coefficients();
                    PieceDocument {
                        left_knot: p.left_knot(),
                        right_knot: p.right_knot(),
                        c1,
                        c2,
                        c3,
                        c4,
                    }
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
struct DataDocument {
    knots: Vec<f64>,
    values: Vec<f64>,
    left_derivative: f64,
    right_derivative: f64,
}

#[derive(Serialize)]
struct ObstructionDocument {
    status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    piece: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    data: Option<DataDocument>,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<ObstructionReport>,
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn samples_per_piece(flag: Option<usize>) -> Result<usize> {
    if let Some(v) = flag {
        return Ok(v);
    }
    match std::env::var(SAMPLES_ENV) {
        Ok(raw) => raw
            .parse::<usize>()
            .with_context(|| format!("parsing {SAMPLES_ENV}={raw}")),
        Err(_) => Ok(DEFAULT_SAMPLES),
    }
}

fn run() -> Result<ExitCode> {
    match Cli::parse().command {
        Command::Build {
            data,
            left_deriv,
            right_deriv,
            out,
            samples,
            samples_out,
        } => cmd_build(&data, left_deriv, right_deriv, out, samples, samples_out),
        Command::Compare {
            data,
            left1,
            right1,
            left2,
            right2,
            samples_per_piece: spp,
        } => cmd_compare(&data, left1, right1, left2, right2, samples_per_piece(spp)?),
        Command::Mono {
            data,
            left_deriv,
            right_deriv,
        } => cmd_mono(&data, left_deriv, right_deriv),
        Command::Obstruction {
            data,
            search,
            seed,
            attempts,
            left_deriv,
            right_deriv,
            i0,
            resolution,
        } => cmd_obstruction(data, search, seed, attempts, left_deriv, right_deriv, i0, resolution),
        Command::Converge {
            function,
            coeffs,
            interval,
            levels,
            p,
            perturb,
            perturb_right,
            base_intervals,
            samples_per_piece: spp,
        } => cmd_converge(
            &function,
            &coeffs,
            (interval[0], interval[1]),
            levels,
            p,
            perturb,
            perturb_right,
            base_intervals,
            samples_per_piece(spp)?,
        ),
    }
}

fn cmd_build(
    data: &str,
    left_deriv: f64,
    right_deriv: f64,
    out: Option<String>,
    samples: Option<usize>,
    samples_out: Option<String>,
) -> Result<ExitCode> {
    if samples.is_some() && samples_out.is_none() && out.is_none() {
        bail!("--samples without --samples-out needs --out so the JSON and CSV streams do not mix");
    }
    let input = DataFile::read(data)?.into_input(left_deriv, right_deriv)?;
    let spline = CubicSpline::build(&input);
    let json = serde_json::to_string_pretty(&SplineDocument::from_spline(&input, &spline))?;
    match &out {
        Some(path) => fs::write(path, json + "\n").with_context(|| format!("writing {path}"))?,
        None => println!("{json}"),
    }
    if let Some(count) = samples {
        let count = count.max(2);
        let (lo, hi) = spline.domain();
        let mut csv = String::from("x,value,derivative,second_derivative\n");
        for k in 0..count {
            let x = (lo + (hi - lo) * k as f64 / (count - 1) as f64).clamp(lo, hi);
            csv.push_str(&format!(
                "{x},{},{},{}\n",
                spline.evaluate(x).expect("in domain"),
                spline.evaluate_derivative(x).expect("in domain"),
                spline.evaluate_second_derivative(x).expect("in domain"),
            ));
        }
        match &samples_out {
            Some(path) => fs::write(path, csv).with_context(|| format!("writing {path}"))?,
            None => print!("{csv}"),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_compare(
    data: &str,
    left1: f64,
    right1: f64,
    left2: f64,
    right2: f64,
    samples_per_piece: usize,
) -> Result<ExitCode> {
    let input = DataFile::read(data)?.into_input(left1, right1)?;
    let report = certify_pair_bound(&input, left2 - left1, right2 - right1, samples_per_piece)?;

    // The first and last pieces carry no claim; measure them anyway.
    let original = CubicSpline::build(&input);
    let changed = CubicSpline::build(&input.with_endpoint_derivatives(left2, right2)?);
    let measure = |piece: usize| -> f64 {
        let a = &original.pieces()[piece - 1];
        let b = &changed.pieces()[piece - 1];
        let mut worst = 0.0f64;
        for k in 0..samples_per_piece.max(2) {
            let x = a.left_knot()
                + a.width() * k as f64 / (samples_per_piece.max(2) - 1) as f64;
            worst = worst.max((a.value_at(x) - b.value_at(x)).abs());
        }
        worst
    };

    println!("piece,bound,measured,status");
    let last_piece = original.piece_count();
    println!("1,n/a (bound not claimed),{},n/a", measure(1));
    for row in &report.rows {
        let status = if row.measured <= row.bound { "ok" } else { "VIOLATED" };
        println!("{},{},{},{status}", row.piece, row.bound, row.measured);
    }
    if last_piece > 1 {
        println!(
            "{last_piece},n/a (bound not claimed),{},n/a",
            measure(last_piece)
        );
    }
    if report.passed {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("bound violated on at least one interior piece");
        Ok(ExitCode::from(1))
    }
}

fn cmd_mono(data: &str, left_deriv: f64, right_deriv: f64) -> Result<ExitCode> {
    let input = DataFile::read(data)?.into_input(left_deriv, right_deriv)?;
    let nondecreasing = input.values().windows(2).all(|w| w[1] >= w[0]);
    let nonincreasing = input.values().windows(2).all(|w| w[1] <= w[0]);
    let direction = if nondecreasing {
        Direction::NonDecreasing
    } else {
        Direction::NonIncreasing
    };
    if !nondecreasing && !nonincreasing {
        println!("data: not monotone (reporting against the nondecreasing convention)");
    } else {
        println!(
            "data: {}",
            if nondecreasing { "nondecreasing" } else { "nonincreasing" }
        );
    }
    let spline = CubicSpline::build(&input);
    println!("piece,interval,slope,sign_condition,exact");
    for (i, piece) in spline.pieces().iter().enumerate() {
        let sign_ok =
            fritsch_carlson_necessary(piece.deriv_left(), piece.deriv_right(), piece.slope());
        let exact = piece_is_monotone(piece, direction);
        println!(
            "{},[{}, {}],{},{},{}",
            i + 1,
            piece.left_knot(),
            piece.right_knot(),
            piece.slope(),
            if sign_ok { "pass" } else { "fail" },
            if exact { "monotone" } else { "not monotone" },
        );
    }
    let verdict = spline_is_monotone(&spline, direction);
    match verdict.first_offending_piece {
        None => println!("spline: monotone"),
        Some(k) => println!("spline: not monotone (first offending piece {k})"),
    }
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn cmd_obstruction(
    data: Option<String>,
    search: Option<usize>,
    seed: u64,
    attempts: usize,
    left_deriv: f64,
    right_deriv: f64,
    i0: Option<usize>,
    resolution: usize,
) -> Result<ExitCode> {
    let (input, piece) = match (data, search) {
        (Some(_), Some(_)) => bail!("give either a data file or --search, not both"),
        (None, None) => bail!("give a data file or --search <knots>"),
        (Some(path), None) => {
            let input = DataFile::read(&path)?.into_input(left_deriv, right_deriv)?;
            let piece = match i0 {
                Some(p) => Some(p),
                None => {
                    let n = input.len();
                    (1..=n.saturating_sub(3))
                        .find(|&p| {
                            obstruction_hypotheses(&input, p)
                                .map(|h| h.all_met)
                                .unwrap_or(false)
                        })
                }
            };
            match piece {
                Some(p) => (input, p),
                None => {
                    let doc = ObstructionDocument {
                        status: "hypotheses_not_met".into(),
                        reason: Some("no interior piece satisfies the hypotheses".into()),
                        piece: None,
                        data: None,
                        report: None,
                    };
                    println!("{}", serde_json::to_string_pretty(&doc)?);
                    return Ok(ExitCode::SUCCESS);
                }
            }
        }
        (None, Some(n)) => match search_obstruction(n, seed, attempts)? {
            SearchOutcome::Found { input, piece, .. } => (input, piece),
            SearchOutcome::Exhausted { attempts } => {
                let doc = ObstructionDocument {
                    status: "search_exhausted".into(),
                    reason: Some(format!("no qualifying instance in {attempts} attempts")),
                    piece: None,
                    data: None,
                    report: None,
                };
                println!("{}", serde_json::to_string_pretty(&doc)?);
                return Ok(ExitCode::SUCCESS);
            }
        },
    };

    let data_doc = DataDocument {
        knots: input.partition().knots().to_vec(),
        values: input.values().to_vec(),
        left_derivative: input.left_derivative(),
        right_derivative: input.right_derivative(),
    };
    match obstruction_sweep(&input, piece, resolution) {
        Ok(report) => {
            let verified = report.verified;
            let doc = ObstructionDocument {
                status: if verified { "verified" } else { "sweep_failed" }.into(),
                reason: None,
                piece: Some(piece),
                data: Some(data_doc),
                report: Some(report),
            };
            println!("{}", serde_json::to_string_pretty(&doc)?);
            if verified {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("sweep contradicts the obstruction; this indicates a bug");
                Ok(ExitCode::from(1))
            }
        }
        Err(clampline::Error::HypothesesNotMet { reason }) => {
            let doc = ObstructionDocument {
                status: "hypotheses_not_met".into(),
                reason: Some(reason),
                piece: Some(piece),
                data: Some(data_doc),
                report: None,
            };
            println!("{}", serde_json::to_string_pretty(&doc)?);
            Ok(ExitCode::SUCCESS)
        }
        Err(other) => Err(other.into()),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_converge(
    function: &str,
    coeffs: &[f64],
    interval: (f64, f64),
    levels: usize,
    p: f64,
    perturb: f64,
    perturb_right: f64,
    base_intervals: usize,
    samples_per_piece: usize,
) -> Result<ExitCode> {
    let config = ConvergenceConfig {
        interval,
        base_intervals,
        levels,
        p,
        left_perturbation: perturb,
        right_perturbation: perturb_right,
        samples_per_piece,
    };
    let rows = match function {
        "sin" => convergence_study(f64::sin, f64::cos, &config)?,
        "exp" => convergence_study(f64::exp, f64::exp, &config)?,
        "poly" => {
            if coeffs.is_empty() {
                bail!("--function poly needs --coeffs a0,a1,...");
            }
            let c = coeffs.to_vec();
            let value = {
                let c = c.clone();
                move |x: f64| c.iter().rev().fold(0.0, |acc, &a| acc * x + a)
            };
            let derivative = move |x: f64| {
                c.iter()
                    .enumerate()
                    .skip(1)
                    .rev()
                    .fold(0.0, |acc, (k, &a)| acc * x + k as f64 * a)
            };
            convergence_study(value, derivative, &config)?
        }
        other => bail!("unknown function {other:?}; choose sin, exp or poly"),
    };
    println!("level,hhat,omega_min,omega_max,max_error,observed_order");
    for row in rows {
        let (omega_min, omega_max) = match row.window {
            Some((lo, hi)) => (lo.to_string(), hi.to_string()),
            None => (String::new(), String::new()),
        };
        let max_error = match row.max_error {
            Some(e) => e.to_string(),
            None => "skipped".into(),
        };
        let order = row
            .observed_order
            .map(|o| o.to_string())
            .unwrap_or_default();
        println!(
            "{},{},{omega_min},{omega_max},{max_error},{order}",
            row.level, row.max_spacing
        );
    }
    Ok(ExitCode::SUCCESS)
}
