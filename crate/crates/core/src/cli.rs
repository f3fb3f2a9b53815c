//! The `fagnano` command line tool.
//!
//! Exit codes: 0 success, 1 parse or configuration error, 2 precondition
//! (non-acute or degenerate input), 3 non-convergence, 4 counterexample or
//! failed check, 5 I/O error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::geometry::Triangle;
use crate::golden;
use crate::json::{Json, ToJson};
use crate::optimizer::{self, InscribedConfig};
use crate::render::{self, RenderSpec};
use crate::theorem;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_NOT_CONVERGED: i32 = 3;
pub const EXIT_COUNTEREXAMPLE: i32 = 4;
pub const EXIT_IO: i32 = 5;

/// Residual bound for the golden-rectangle report.
pub const GOLDEN_RESIDUAL_BOUND: f64 = 1e-12;

#[derive(Debug, Parser)]
#[command(
    name = "fagnano",
    version,
    about = "Orthic triangles and Fagnano's minimal inscribed triangle"
)]
pub struct Cli {
    /// Tolerance: convergence tolerance for `minimize`, angle tolerance for
    /// `scan` and `orthic`, residual bound for `golden`.
    #[arg(long, global = true)]
    pub tol: Option<f64>,

    /// Write the report (JSON, or SVG for `render`) to this file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Also print the JSON report to stdout when --output is given.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Orthic triangle (altitude feet, angles, perimeter) of an acute triangle.
    Orthic {
        /// "ax,ay,bx,by,cx,cy", or a preset: equilateral, golden-bfc.
        #[arg(allow_hyphen_values = true)]
        triangle: String,
    },
    /// Numerically minimize the perimeter of an inscribed triangle.
    Minimize {
        #[arg(allow_hyphen_values = true)]
        triangle: String,
        #[arg(long, value_enum, default_value_t = Method::GridSimplex)]
        method: Method,
        #[arg(long, default_value_t = optimizer::DEFAULT_GRID_N)]
        grid_n: usize,
        #[arg(long, default_value_t = optimizer::DEFAULT_MAX_ITER)]
        max_iter: usize,
        /// Starting side parameters "t_bc,t_ca,t_ab" for the reflection method.
        #[arg(long, default_value = "0.5,0.5,0.5")]
        start: String,
    },
    /// Scan acute-triangle shape space for counterexamples.
    Scan {
        #[arg(long, default_value_t = theorem::DEFAULT_GRID_RESOLUTION)]
        resolution: usize,
        #[arg(long, default_value_t = theorem::DEFAULT_BOUNDARY_BAND)]
        band: f64,
        /// Run on one thread.
        #[arg(long)]
        serial: bool,
    },
    /// Reproduce the golden-rectangle example.
    Golden,
    /// Render an SVG figure.
    Render {
        /// A triangle as for `orthic`, or `golden-figure` for the full rectangle figure.
        #[arg(allow_hyphen_values = true)]
        triangle: String,
        #[arg(long, default_value_t = 640)]
        width: u32,
        #[arg(long, default_value_t = 480)]
        height: u32,
        #[arg(long, default_value_t = 40)]
        margin: u32,
        #[arg(long)]
        no_altitudes: bool,
        #[arg(long)]
        no_orthic: bool,
        #[arg(long)]
        no_labels: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    GridSimplex,
    Reflection,
}

#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::NotAcute { .. } | Error::Degenerate { .. } => EXIT_PRECONDITION,
            Error::NonFinite(_)
            | Error::InvalidAngles { .. }
            | Error::ParameterOutOfRange { .. }
            | Error::InvalidArgument(_) => EXIT_USAGE,
        };
        Failure::new(code, err.to_string())
    }
}

fn parse_reals<const N: usize>(text: &str, what: &str) -> Result<[f64; N], Failure> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(Failure::new(
            EXIT_USAGE,
            format!(
                "{what}: expected {N} comma-separated numbers, got {}",
                parts.len()
            ),
        ));
    }
    let mut out = [0.0; N];
    for (slot, part) in out.iter_mut().zip(&parts) {
        let value: f64 = part.parse().map_err(|_| {
            Failure::new(
                EXIT_USAGE,
                format!("{what}: cannot parse {part:?} as a number"),
            )
        })?;
        if !value.is_finite() {
            return Err(Failure::new(
                EXIT_USAGE,
                format!("{what}: {part:?} is not finite"),
            ));
        }
        *slot = value;
    }
    Ok(out)
}

/// Parses "ax,ay,bx,by,cx,cy" or one of the presets `equilateral`, `golden-bfc`.
pub fn parse_triangle(text: &str) -> Result<Triangle, Failure> {
    let coords = match text {
        "equilateral" => [0.0, 0.0, 1.0, 0.0, 0.5, 3f64.sqrt() / 2.0],
        "golden-bfc" => {
            let phi = golden::golden_ratio();
            [1.0, 0.0, 0.0, 1.0, 1.0, phi]
        }
        _ => parse_reals::<6>(text, "triangle")?,
    };
    Ok(Triangle::from_coords(coords)?)
}

fn triangle_json(t: &Triangle) -> Json {
    let class = t.classify();
    Json::obj([
        ("a", t.a().to_json()),
        ("b", t.b().to_json()),
        ("c", t.c().to_json()),
        ("reoriented", t.was_reoriented().to_json()),
        ("kind", Json::str(class.kind.name())),
        ("margin", class.margin.to_json()),
        ("angles", t.angles().to_json()),
    ])
}

struct Outcome {
    code: i32,
    body: String,
    summary: String,
}

fn emit(cli: &Cli, outcome: &Outcome, stdout: &mut dyn Write) -> Result<(), Failure> {
    match &cli.output {
        Some(path) => {
            std::fs::write(path, &outcome.body).map_err(|e| {
                Failure::new(EXIT_IO, format!("cannot write {}: {e}", path.display()))
            })?;
            let text = if cli.json {
                &outcome.body
            } else {
                &outcome.summary
            };
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::new(EXIT_IO, e.to_string()))
        }
        None => stdout
            .write_all(outcome.body.as_bytes())
            .map_err(|e| Failure::new(EXIT_IO, e.to_string())),
    }
}

fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Orthic { triangle } => {
            let t = parse_triangle(triangle)?;
            let tol = cli.tol.unwrap_or(theorem::DEFAULT_TOL_ANGLE);
            let orthic = t.orthic()?;
            let verdict = theorem::verdict(&t, tol)?;
            let doc = Json::obj([
                ("triangle", triangle_json(&t)),
                ("orthic", orthic.to_json()),
                ("verdict", verdict.to_json()),
            ]);
            Ok(Outcome {
                code: EXIT_OK,
                body: doc.render(),
                summary: format!("orthic perimeter {}\n", orthic.perimeter),
            })
        }
        Command::Minimize {
            triangle,
            method,
            grid_n,
            max_iter,
            start,
        } => {
            let t = parse_triangle(triangle)?;
            let result = match method {
                Method::GridSimplex => {
                    let tol = cli.tol.unwrap_or(optimizer::DEFAULT_SIMPLEX_TOL);
                    optimizer::minimize_grid_then_simplex(&t, *grid_n, *max_iter, tol)?
                }
                Method::Reflection => {
                    let tol = cli.tol.unwrap_or(optimizer::DEFAULT_DESCENT_TOL);
                    let [p, q, r] = parse_reals::<3>(start, "start")?;
                    let start = InscribedConfig::new(p, q, r)?;
                    optimizer::minimize_reflection_descent(&t, start, *max_iter, tol)?
                }
            };
            let closed_form = optimizer::min_perimeter_closed_form(&t)?;
            let method_name = match method {
                Method::GridSimplex => "grid-simplex",
                Method::Reflection => "reflection",
            };
            let doc = Json::obj([
                ("method", Json::str(method_name)),
                ("triangle", triangle_json(&t)),
                ("closed_form_perimeter", closed_form.to_json()),
                ("result", result.to_json()),
            ]);
            Ok(Outcome {
                code: if result.converged {
                    EXIT_OK
                } else {
                    EXIT_NOT_CONVERGED
                },
                body: doc.render(),
                summary: format!(
                    "perimeter {} after {} iterations (converged: {})\n",
                    result.perimeter, result.iterations, result.converged
                ),
            })
        }
        Command::Scan {
            resolution,
            band,
            serial,
        } => {
            let tol = cli.tol.unwrap_or(theorem::DEFAULT_TOL_ANGLE);
            let report = if *serial {
                theorem::scan_angle_space_serial(*resolution, tol, *band)?
            } else {
                theorem::scan_angle_space(*resolution, tol, *band)?
            };
            Ok(Outcome {
                code: if report.passed() {
                    EXIT_OK
                } else {
                    EXIT_COUNTEREXAMPLE
                },
                body: report.to_json().render(),
                summary: format!(
                    "{} samples tested, {} skipped, {} counterexamples\n",
                    report.samples_tested,
                    report.samples_skipped,
                    report.counterexamples.len()
                ),
            })
        }
        Command::Golden => {
            let bound = cli.tol.unwrap_or(GOLDEN_RESIDUAL_BOUND);
            let fig = golden::build();
            let values = golden::reproduce_reference_values(&fig);
            let structure: Vec<Json> = fig
                .structure_residuals()
                .into_iter()
                .map(|(name, r)| Json::obj([("name", Json::str(name)), ("residual", r.to_json())]))
                .collect();
            let max_residual = values
                .iter()
                .map(|v| v.residual)
                .chain(fig.structure_residuals().into_iter().map(|(_, r)| r))
                .fold(0.0, f64::max);
            let passed = max_residual <= bound;
            let doc = Json::obj([
                ("figure", fig.to_json()),
                ("values", values.to_json()),
                ("structure", Json::Arr(structure)),
                ("residual_bound", bound.to_json()),
                ("max_residual", max_residual.to_json()),
                ("passed", passed.to_json()),
            ]);
            Ok(Outcome {
                code: if passed { EXIT_OK } else { EXIT_COUNTEREXAMPLE },
                body: doc.render(),
                summary: format!("max residual {max_residual:e}\n"),
            })
        }
        Command::Render {
            triangle,
            width,
            height,
            margin,
            no_altitudes,
            no_orthic,
            no_labels,
        } => {
            let spec = RenderSpec {
                width_px: *width,
                height_px: *height,
                margin_px: *margin,
                show_altitudes: !no_altitudes,
                show_orthic: !no_orthic,
                show_labels: !no_labels,
            };
            let svg = if triangle == "golden-figure" {
                render::render_golden(&golden::build(), &spec)?
            } else {
                render::render_triangle(&parse_triangle(triangle)?, &spec)?
            };
            Ok(Outcome {
                code: EXIT_OK,
                summary: format!("{} bytes of SVG\n", svg.len()),
                body: svg,
            })
        }
    }
}

/// Runs the tool with `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            if err.use_stderr() {
                let _ = write!(stderr, "{err}");
                return EXIT_USAGE;
            }
            let _ = write!(stdout, "{err}");
            return EXIT_OK;
        }
    };
    let result = execute(&cli).and_then(|outcome| {
        emit(&cli, &outcome, stdout)?;
        Ok(outcome.code)
    });
    match result {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message);
            failure.code
        }
    }
}
