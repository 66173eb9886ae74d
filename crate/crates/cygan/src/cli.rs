//! Command-line surface: distances, cross-ratios, reduction to the
//! infinity-based form, R-circle sampling and verification campaigns.
//!
//! Exit codes: 0 on success, 1 on a mathematical violation or degenerate
//! input, 2 on a usage error. All floating output is shortest-round-trip
//! decimal, so reports are diffable across runs.

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::cross_ratio::x1_x2;
use crate::error::Error;
use crate::harness::report::{reports_to_json, rows_to_csv};
use crate::harness::sampler::{min_pairwise_distance, NEAR_DEGENERATE};
use crate::harness::{run_campaign, CampaignConfig, Suite};
use crate::metric::rho;
use crate::normalize::reduce_to_infinity_form;
use crate::point::ClosurePoint;
use crate::quadruple::Quadruple;
use crate::rcircle::{ptolemaeus_case, quadruple_on_circle, CircleParam, RCircle, CASE_TOLERANCE};
use crate::transform::GeneratorWord;

#[derive(Parser)]
#[command(
    name = "cygan",
    about = "Cygan-metric geometry on the closure of the complex hyperbolic plane",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cygan distance between two points (`inf` or `zre,zim,v,u`).
    Dist { p: String, q: String },
    /// Cross-ratio pair (X1, X2) of four pairwise distinct points.
    Cr {
        p1: String,
        p2: String,
        p3: String,
        p4: String,
    },
    /// Reduce a quadruple to the form (p, q, r, inf) preserving (X1, X2).
    Reduce {
        p1: String,
        p2: String,
        p3: String,
        p4: String,
    },
    /// Sample an R-circle as CSV, or classify a parameter quadruple on it.
    Rcircle {
        /// Height of the circle.
        #[arg(long, default_value_t = 0.0)]
        height: f64,
        /// Generator word (`T:re,im,v`, `R:theta`, `D:delta`, `J`, `Iu`;
        /// semicolon-separated). The closure inversion `I` is not allowed.
        #[arg(long, default_value = "")]
        word: String,
        /// Four comma-separated circle parameters (`inf` allowed).
        #[arg(long)]
        params: Option<String>,
        /// Emit this many evenly spaced sample points instead.
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Run a verification campaign and write a machine-readable report.
    Campaign {
        /// One of inequality, equality, triangle, invariance, oracle, all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, env = "CYGAN_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        /// Relative tolerance of the theorem suites.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Half-width of the coordinate sampling box.
        #[arg(long, default_value_t = 10.0)]
        scale: f64,
        /// Report format: json or csv.
        #[arg(long, default_value = "json")]
        format: String,
        /// Write the report here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

/// Parse the arguments and run; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return 2;
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Parse(_) | Error::ForbiddenGenerator => 2,
                _ => 1,
            }
        }
    }
}

fn parse_point(s: &str) -> Result<ClosurePoint, Error> {
    s.parse()
}

fn parse_quadruple(texts: [&str; 4]) -> Result<Quadruple, Error> {
    let p1 = parse_point(texts[0])?;
    let p2 = parse_point(texts[1])?;
    let p3 = parse_point(texts[2])?;
    let p4 = parse_point(texts[3])?;
    Quadruple::new(p1, p2, p3, p4)
}

fn warn_if_near_degenerate(q: &Quadruple) {
    let min = min_pairwise_distance(q.points());
    if min < NEAR_DEGENERATE {
        eprintln!("warning: near-degenerate quadruple (minimum pairwise distance {min:e})");
    }
}

fn execute(cmd: Command) -> Result<i32, Error> {
    match cmd {
        Command::Dist { p, q } => {
            let p = parse_point(&p)?;
            let q = parse_point(&q)?;
            println!("{}", rho(&p, &q));
            Ok(0)
        }

        Command::Cr { p1, p2, p3, p4 } => {
            let q = match parse_quadruple([&p1, &p2, &p3, &p4]) {
                Ok(q) => q,
                Err(Error::DegenerateQuadruple(i, j)) => {
                    println!("DEGENERATE");
                    eprintln!("points {i} and {j} coincide");
                    return Ok(1);
                }
                Err(e) => return Err(e),
            };
            warn_if_near_degenerate(&q);
            let (x1, x2) = x1_x2(&q)?.as_f64();
            println!("X1={x1} X2={x2}");
            let scale = x1.max(x2).max(1.0);
            if (x1 - x2 - 1.0).abs() <= CASE_TOLERANCE * scale {
                println!("X1-X2=1 (tight)");
            } else if (x2 - x1 - 1.0).abs() <= CASE_TOLERANCE * scale {
                println!("X2-X1=1 (tight)");
            } else if (x1 + x2 - 1.0).abs() <= CASE_TOLERANCE * scale {
                println!("X1+X2=1 (tight)");
            } else {
                println!("no tight bound");
            }
            Ok(0)
        }

        Command::Reduce { p1, p2, p3, p4 } => {
            let q = match parse_quadruple([&p1, &p2, &p3, &p4]) {
                Ok(q) => q,
                Err(Error::DegenerateQuadruple(i, j)) => {
                    println!("DEGENERATE");
                    eprintln!("points {i} and {j} coincide");
                    return Ok(1);
                }
                Err(e) => return Err(e),
            };
            warn_if_near_degenerate(&q);
            let (bx1, bx2) = x1_x2(&q)?.as_f64();
            let red = reduce_to_infinity_form(&q)?;
            let pts = red.quadruple.points();
            println!("reduced: {} {} {} {}", pts[0], pts[1], pts[2], pts[3]);
            let word = red.word.to_string();
            println!(
                "word: {}",
                if word.is_empty() { "(identity)" } else { &word }
            );
            println!(
                "permutation: {},{},{},{}",
                red.permutation[0] + 1,
                red.permutation[1] + 1,
                red.permutation[2] + 1,
                red.permutation[3] + 1
            );
            println!("height_shift: {}", red.height_shift);
            let (ax1, ax2) = x1_x2(&red.quadruple)?.as_f64();
            println!("before: X1={bx1} X2={bx2}");
            println!("after:  X1={ax1} X2={ax2}");
            Ok(0)
        }

        Command::Rcircle {
            height,
            word,
            params,
            samples,
        } => {
            let word: GeneratorWord = word.parse()?;
            let circle = RCircle::new(height, word)?;
            match (params, samples) {
                (Some(params), _) => {
                    let parts: Vec<&str> = params.split(',').collect();
                    if parts.len() != 4 {
                        return Err(Error::Parse(format!(
                            "expected four circle parameters, got `{params}`"
                        )));
                    }
                    let ts: Vec<CircleParam> =
                        parts.iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
                    let (q, pattern) = quadruple_on_circle(&circle, ts[0], ts[1], ts[2], ts[3])?;
                    println!("t,zre,zim,v,u");
                    for (t, p) in ts.iter().zip(q.points()) {
                        println!("{t},{}", point_csv(p));
                    }
                    println!("# separation: {pattern}");
                    match ptolemaeus_case(&q, pattern, CASE_TOLERANCE) {
                        Ok(rep) => {
                            println!(
                                "# case: {} (X1={} X2={} residual={:e})",
                                rep.case,
                                rep.x1,
                                rep.x2,
                                rep.residual()
                            );
                            Ok(0)
                        }
                        Err(Error::NoEqualityHolds { r1, r2, r3 }) => {
                            println!("# case: none (residuals {r1:e} {r2:e} {r3:e})");
                            Ok(1)
                        }
                        Err(e) => Err(e),
                    }
                }
                (None, Some(n)) => {
                    if n == 0 {
                        return Err(Error::Parse("samples must be at least 1".into()));
                    }
                    println!("t,zre,zim,v,u");
                    for k in 0..n {
                        // even grid over [-10, 10]
                        let t = if n == 1 {
                            0.0
                        } else {
                            -10.0 + 20.0 * (k as f64) / ((n - 1) as f64)
                        };
                        let p = crate::rcircle::circle_point(&circle, CircleParam::Finite(t))?;
                        println!("{t},{}", point_csv(&p));
                    }
                    Ok(0)
                }
                (None, None) => Err(Error::Parse(
                    "provide either --params t1,t2,t3,t4 or --samples N".into(),
                )),
            }
        }

        Command::Campaign {
            suite,
            seed,
            samples,
            tol,
            scale,
            format,
            output,
        } => {
            let suite: Suite = suite.parse()?;
            if format != "json" && format != "csv" {
                return Err(Error::Parse(format!(
                    "format must be json or csv, got `{format}`"
                )));
            }
            let cfg = CampaignConfig {
                seed,
                samples,
                tolerance: tol,
                suite,
                coordinate_scale: scale,
                collect_rows: format == "csv",
            };
            let outputs = run_campaign(&cfg)?;
            let all_passed = outputs.iter().all(|o| o.report.passed());
            for o in &outputs {
                eprintln!(
                    "suite {}: {} samples, {} violations, {} rejections, {} ms",
                    o.report.suite,
                    o.report.samples,
                    o.report.violations.len(),
                    o.report.rejections,
                    o.report.elapsed_ms
                );
            }
            let text = if format == "json" {
                let reports: Vec<_> = outputs.iter().map(|o| o.report.clone()).collect();
                reports_to_json(&reports)
            } else {
                let rows: Vec<_> = outputs.iter().flat_map(|o| o.rows.clone()).collect();
                rows_to_csv(&rows)
            };
            match output {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            Ok(if all_passed { 0 } else { 1 })
        }
    }
}

fn point_csv(p: &ClosurePoint) -> String {
    match p {
        ClosurePoint::Finite { zeta, v, u } => {
            format!("{},{},{},{}", zeta.re, zeta.im, v, u)
        }
        ClosurePoint::Infinity => "inf,inf,inf,inf".to_string(),
    }
}
