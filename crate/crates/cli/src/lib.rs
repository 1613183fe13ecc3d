//! Command-line surface: apply/convert/median/shape/orbit/verify/figure.
//!
//! Every run is deterministic given its flags; randomized suites take
//! `--seed`. Exit codes: 0 success, 1 verification failure, 2 usage error.

pub mod figures;
pub mod svg;

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use triorbit::median::{
    canonical_label, fixed_point_op, fixed_point_pq_solutions, identity_suite, table1_pq,
    table1_suite, MedianLabel,
};
use triorbit::operator::{CircOp, EtaPair, PQPair};
use triorbit::orbit::{
    collision_report, sample, shape_trace, tracing_class, tracing_law_suite, verify_tracing,
    Direction, OrbitFamily, TracingClass,
};
use triorbit::parse::{self, OpLiteral, OpParams};
use triorbit::report::Report;
use triorbit::scalar::Scalar;
use triorbit::shape::{bclift_suite, fourier, shape, shape_cubed};
use triorbit::triangle::TriangleTriple;
use triorbit::{Complex64, Cyc12, Error};

#[derive(Parser, Debug)]
#[command(
    name = "triorbit",
    version,
    about = "Exact and numeric engine for circulant triangle operators and tracing orbits"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Exact Q(zeta_12) backend (default).
    #[arg(long, global = true, conflicts_with = "approx")]
    pub exact: bool,
    /// Double-precision backend.
    #[arg(long, global = true)]
    pub approx: bool,
}

impl Cli {
    fn mode(&self) -> Mode {
        if self.approx {
            Mode::Approx
        } else {
            Mode::Exact
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Approx,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TextFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DataFormat {
    Csv,
    Svg,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identities,
    Table1,
    Fixedpoints,
    Bclift,
    Tracing,
    All,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Apply an operator literal to a triangle triple.
    Apply {
        /// Operator: "S[p=..,q=..]", "S[eta=..,eta'=..]", "S[a=..,b=..,g=..]"
        /// or "M[wx/yz][..]".
        #[arg(long, allow_hyphen_values = true)]
        op: String,
        /// Triple literal "(a, b, c)" or JSON [[re,im],...].
        #[arg(long, allow_hyphen_values = true)]
        triple: String,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
    /// Print an operator in all three coordinate systems.
    Convert {
        #[arg(long, allow_hyphen_values = true)]
        op: String,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
    /// Inspect a median label: canonical reduction, fixed point and its
    /// (p, q) solutions; with --p/--q also the composite cevian parameters.
    Median {
        /// Label in the "wx/yz" form.
        #[arg(long)]
        label: String,
        #[arg(long, allow_hyphen_values = true)]
        p: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
    /// Shape of a triple: psi, psi^3, degeneracy class, orientation.
    Shape {
        #[arg(long, allow_hyphen_values = true)]
        triple: String,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
    /// Sample a periodic operator family and emit CSV/SVG/JSON, or certify
    /// its tracing class.
    Orbit {
        /// eta trig polynomial as "freq:coeff,..." entries.
        #[arg(long, allow_hyphen_values = true)]
        eta: String,
        #[arg(long = "eta-prime", allow_hyphen_values = true)]
        eta_prime: String,
        /// Base triple literal.
        #[arg(long, allow_hyphen_values = true)]
        base: String,
        /// Median label; the family is cevian when omitted.
        #[arg(long = "median-label")]
        median_label: Option<String>,
        #[arg(long, default_value_t = 300)]
        samples: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: DataFormat,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print a JSON tracing certificate instead of sample data.
        #[arg(long)]
        certify: bool,
        /// Emit the psi^3 shape trace as CSV (t, re, im) instead of vertex
        /// data.
        #[arg(long, conflicts_with = "certify")]
        trace: bool,
    },
    /// Run a verification suite; exits 1 when any check fails.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
    /// Reproduce a named figure (fig1..fig11) as CSV + SVG files.
    Figure {
        name: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 300)]
        samples: usize,
    },
}

/// Execute a parsed command line; returns the process exit code.
pub fn run(cli: &Cli) -> anyhow::Result<i32> {
    match &cli.command {
        Command::Apply { op, triple, format } => {
            println!("{}", apply_output(cli.mode(), op, triple, *format)?);
            Ok(0)
        }
        Command::Convert { op, format } => {
            println!("{}", convert_output(cli.mode(), op, *format)?);
            Ok(0)
        }
        Command::Median {
            label,
            p,
            q,
            format,
        } => {
            println!(
                "{}",
                median_output(label, p.as_deref(), q.as_deref(), *format)?
            );
            Ok(0)
        }
        Command::Shape { triple, format } => {
            println!("{}", shape_output(cli.mode(), triple, *format)?);
            Ok(0)
        }
        Command::Orbit {
            eta,
            eta_prime,
            base,
            median_label,
            samples,
            format,
            out,
            certify,
            trace,
        } => {
            let family = build_family(eta, eta_prime, base, median_label.as_deref())?;
            let data = if *certify {
                orbit_certificate(&family, *samples)?
            } else if *trace {
                orbit_trace_csv(&family, *samples)?
            } else {
                orbit_output(&family, *samples, *format)?
            };
            match out {
                Some(path) => fs::write(path, data)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => print!("{data}"),
            }
            Ok(0)
        }
        Command::Verify {
            suite,
            seed,
            count,
            format,
        } => {
            let reports = run_suites(*suite, *seed, *count);
            let ok = reports.iter().all(Report::passed);
            println!("{}", verify_output(&reports, *format));
            Ok(if ok { 0 } else { 1 })
        }
        Command::Figure { name, out, samples } => {
            let output = figures::render(name, *samples)?;
            fs::create_dir_all(out)
                .with_context(|| format!("creating {}", out.display()))?;
            let csv_path = out.join(format!("{name}.csv"));
            let svg_path = out.join(format!("{name}.svg"));
            fs::write(&csv_path, &output.csv)?;
            fs::write(&svg_path, &output.svg)?;
            println!("{}", csv_path.display());
            println!("{}", svg_path.display());
            Ok(0)
        }
    }
}

fn exact_op(lit: &OpLiteral) -> Result<CircOp<Cyc12>, Error> {
    op_from_literal(lit, Clone::clone)
}

fn approx_op(lit: &OpLiteral) -> Result<CircOp<Complex64>, Error> {
    op_from_literal(lit, Cyc12::to_complex)
}

/// Materialize an operator literal in a scalar backend; parameters are
/// parsed exactly and converted through `conv`.
fn op_from_literal<S: Scalar>(
    lit: &OpLiteral,
    conv: impl Fn(&Cyc12) -> S,
) -> Result<CircOp<S>, Error> {
    let eta_of = |params: &OpParams| -> Result<EtaPair<S>, Error> {
        match params {
            OpParams::PQ(p, q) => Ok(EtaPair::from_pq(&PQPair::new(conv(p), conv(q))?)),
            OpParams::Eta(e, ep) => Ok(EtaPair::new(conv(e), conv(ep))),
            OpParams::Coeffs(a, b, g) => {
                Ok(CircOp::new(conv(a), conv(b), conv(g))?.to_eta())
            }
        }
    };
    match lit {
        OpLiteral::Cevian(params) => Ok(CircOp::from_eta(&eta_of(params)?)),
        OpLiteral::Median(label, params) => {
            Ok(triorbit::median::median_op(*label, &eta_of(params)?))
        }
    }
}

pub fn apply_output(
    mode: Mode,
    op: &str,
    triple: &str,
    format: TextFormat,
) -> anyhow::Result<String> {
    let lit = parse::parse_op_literal(op)?;
    match mode {
        Mode::Exact => {
            let image = exact_op(&lit)?.apply(&parse::parse_exact_triple(triple)?);
            Ok(match format {
                TextFormat::Text => image.to_string(),
                TextFormat::Json => serde_json::to_string(&json!(image
                    .vertices()
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()))?,
            })
        }
        Mode::Approx => {
            let image = approx_op(&lit)?.apply(&parse::parse_approx_triple(triple)?);
            Ok(match format {
                TextFormat::Text => image.to_string(),
                TextFormat::Json => serde_json::to_string(&json!(image
                    .vertices()
                    .iter()
                    .map(|v| vec![v.re, v.im])
                    .collect::<Vec<_>>()))?,
            })
        }
    }
}

pub fn convert_output(mode: Mode, op: &str, format: TextFormat) -> anyhow::Result<String> {
    let lit = parse::parse_op_literal(op)?;
    match mode {
        Mode::Exact => {
            let circ = exact_op(&lit)?;
            let e = circ.to_eta();
            let (a, b, g) = circ.coeffs();
            let pq = circ.to_pq();
            Ok(match format {
                TextFormat::Text => {
                    let mut out = String::new();
                    writeln!(out, "coeffs: a={a}, b={b}, g={g}")?;
                    writeln!(out, "fourier: eta={}, eta'={}", e.eta, e.eta_prime)?;
                    match pq {
                        Ok(pq) => write!(out, "cevian: p={}, q={}", pq.p(), pq.q())?,
                        Err(err) => write!(out, "cevian: unavailable ({err})")?,
                    }
                    out
                }
                TextFormat::Json => serde_json::to_string_pretty(&json!({
                    "coeffs": [a.to_string(), b.to_string(), g.to_string()],
                    "eta": [e.eta.to_string(), e.eta_prime.to_string()],
                    "pq": match pq {
                        Ok(pq) => json!([pq.p().to_string(), pq.q().to_string()]),
                        Err(err) => json!({ "error": err.to_string() }),
                    },
                }))?,
            })
        }
        Mode::Approx => {
            let circ = approx_op(&lit)?;
            let e = circ.to_eta();
            let (a, b, g) = circ.coeffs();
            let pq = circ.to_pq();
            Ok(match format {
                TextFormat::Text => {
                    let mut out = String::new();
                    writeln!(out, "coeffs: a={a}, b={b}, g={g}")?;
                    writeln!(out, "fourier: eta={}, eta'={}", e.eta, e.eta_prime)?;
                    match pq {
                        Ok(pq) => write!(out, "cevian: p={}, q={}", pq.p(), pq.q())?,
                        Err(err) => write!(out, "cevian: unavailable ({err})")?,
                    }
                    out
                }
                TextFormat::Json => serde_json::to_string_pretty(&json!({
                    "coeffs": [[a.re, a.im], [b.re, b.im], [g.re, g.im]],
                    "eta": [[e.eta.re, e.eta.im], [e.eta_prime.re, e.eta_prime.im]],
                    "pq": match pq {
                        Ok(pq) => json!([[pq.p().re, pq.p().im], [pq.q().re, pq.q().im]]),
                        Err(err) => json!({ "error": err.to_string() }),
                    },
                }))?,
            })
        }
    }
}

pub fn median_output(
    label: &str,
    p: Option<&str>,
    q: Option<&str>,
    format: TextFormat,
) -> anyhow::Result<String> {
    let label = MedianLabel::parse(label)?;
    let (canonical, transform) = canonical_label(label);
    let fixed = fixed_point_op::<Cyc12>(label);
    let (a, b, g) = fixed.coeffs();
    let solutions = fixed_point_pq_solutions::<Cyc12>(label);
    let composite = match (p, q) {
        (Some(p), Some(q)) => {
            let pq = PQPair::new(parse::parse_exact(p)?, parse::parse_exact(q)?)?;
            Some(table1_pq(label, &pq))
        }
        _ => None,
    };
    match format {
        TextFormat::Text => {
            let mut out = String::new();
            writeln!(
                out,
                "canonical: {canonical} (J^{}{})",
                transform.j_power,
                if transform.point_symmetric {
                    ", point symmetry"
                } else {
                    ""
                }
            )?;
            writeln!(out, "fixed point: a={a}, b={b}, g={g}")?;
            if solutions.is_empty() {
                writeln!(out, "fixed-point pq: none")?;
            } else {
                let list = solutions
                    .iter()
                    .map(|pq| format!("({}, {})", pq.p(), pq.q()))
                    .collect::<Vec<_>>()
                    .join(", ");
                writeln!(out, "fixed-point pq: {list}")?;
            }
            match composite {
                Some(Ok(pq)) => write!(out, "composite: p1={}, q1={}", pq.p(), pq.q())?,
                Some(Err(err)) => write!(out, "composite: unavailable ({err})")?,
                None => {
                    out.pop();
                }
            }
            Ok(out)
        }
        TextFormat::Json => Ok(serde_json::to_string_pretty(&json!({
            "label": label.to_string(),
            "canonical": canonical.to_string(),
            "j_power": transform.j_power.value(),
            "point_symmetric": transform.point_symmetric,
            "fixed_point": [a.to_string(), b.to_string(), g.to_string()],
            "fixed_point_pq": solutions
                .iter()
                .map(|pq| vec![pq.p().to_string(), pq.q().to_string()])
                .collect::<Vec<_>>(),
            "composite": composite.map(|c| match c {
                Ok(pq) => json!([pq.p().to_string(), pq.q().to_string()]),
                Err(err) => json!({ "error": err.to_string() }),
            }),
        }))?),
    }
}

pub fn shape_output(mode: Mode, triple: &str, format: TextFormat) -> anyhow::Result<String> {
    match mode {
        Mode::Exact => {
            let d = parse::parse_exact_triple(triple)?;
            shape_report(&d, format)
        }
        Mode::Approx => {
            let d = parse::parse_approx_triple(triple)?;
            shape_report(&d, format)
        }
    }
}

fn shape_report<S: Scalar>(
    d: &TriangleTriple<S>,
    format: TextFormat,
) -> anyhow::Result<String> {
    let class = d.classify();
    let psi = shape(d);
    let cubed = shape_cubed(d);
    let orientation = d.orientation_positive();
    let f = fourier(d);
    match format {
        TextFormat::Text => {
            let mut out = String::new();
            writeln!(out, "class: {class:?}")?;
            writeln!(out, "centroid: {}", f.psi0)?;
            match (&psi, &cubed) {
                (Ok(p), Ok(c)) => {
                    writeln!(out, "psi: {p}")?;
                    writeln!(out, "psi^3: {c}")?;
                }
                _ => writeln!(out, "psi: undefined (triple collision)")?,
            }
            match orientation {
                Ok(positive) => write!(out, "orientation: {}", if positive { "positive" } else { "negative" })?,
                Err(_) => write!(out, "orientation: undefined (degenerate)")?,
            }
            Ok(out)
        }
        TextFormat::Json => Ok(serde_json::to_string_pretty(&json!({
            "class": format!("{class:?}"),
            "centroid": f.psi0.to_string(),
            "psi": psi.as_ref().map(|p| p.to_string()).ok(),
            "psi_cubed": cubed.as_ref().map(|c| c.to_string()).ok(),
            "orientation_positive": orientation.ok(),
        }))?),
    }
}

pub fn build_family(
    eta: &str,
    eta_prime: &str,
    base: &str,
    median_label: Option<&str>,
) -> anyhow::Result<OrbitFamily> {
    let eta = parse::parse_trig_poly(eta)?;
    let eta_prime = parse::parse_trig_poly(eta_prime)?;
    let base = parse::parse_approx_triple(base)?;
    Ok(match median_label {
        Some(label) => OrbitFamily::median(MedianLabel::parse(label)?, eta, eta_prime, base),
        None => OrbitFamily::cevian(eta, eta_prime, base),
    })
}

pub fn orbit_output(
    family: &OrbitFamily,
    samples: usize,
    format: DataFormat,
) -> anyhow::Result<String> {
    if samples < 3 {
        bail!("--samples must be at least 3");
    }
    let data = sample(family, samples);
    Ok(match format {
        DataFormat::Csv => figures::orbit_csv(&data),
        DataFormat::Svg => figures::orbit_svg(&data),
        DataFormat::Json => {
            let rows: Vec<_> = data
                .iter()
                .map(|s| {
                    json!({
                        "t": s.t,
                        "vertices": s.triple.vertices().iter()
                            .map(|v| vec![v.re, v.im]).collect::<Vec<_>>(),
                    })
                })
                .collect();
            serde_json::to_string_pretty(&rows)? + "\n"
        }
    })
}

/// psi^3 shape trace in the CSV form `t,re,im`; points at infinity print as
/// `inf,inf`.
pub fn orbit_trace_csv(family: &OrbitFamily, samples: usize) -> anyhow::Result<String> {
    if samples < 3 {
        bail!("--samples must be at least 3");
    }
    let data = sample(family, samples);
    let trace = shape_trace(&data)?;
    let mut csv = String::from("t,re,im\n");
    for p in &trace {
        match p.cubed.to_complex() {
            Some(v) => writeln!(csv, "{},{},{}", p.t, v.re, v.im)?,
            None => writeln!(csv, "{},inf,inf", p.t)?,
        }
    }
    Ok(csv)
}

pub fn orbit_certificate(family: &OrbitFamily, samples: usize) -> anyhow::Result<String> {
    // Align the certification grid to thirds.
    let n = samples.max(3).div_ceil(3) * 3;
    let data = sample(family, n);
    let class = tracing_class(family);
    let residual = match class {
        TracingClass::Ascending => Some(verify_tracing(&data, Direction::Ascending)?),
        TracingClass::Descending => Some(verify_tracing(&data, Direction::Descending)?),
        TracingClass::NotTracing => None,
    };
    let trace = shape_trace(&data).ok().map(|points| {
        points
            .iter()
            .map(|p| {
                json!({
                    "t": p.t,
                    "psi_cubed": p.cubed.to_complex().map(|v| vec![v.re, v.im]),
                })
            })
            .collect::<Vec<_>>()
    });
    Ok(serde_json::to_string_pretty(&json!({
        "class": format!("{class:?}"),
        "samples": n,
        "tracing_residual": residual,
        "certified": residual.map(|r| r <= 1e-10),
        "min_vertex_gap": collision_report(&data),
        "shape_trace": trace,
    }))? + "\n")
}

pub fn run_suites(suite: Suite, seed: u64, count: usize) -> Vec<Report> {
    let mut out = Vec::new();
    let pick = |s: Suite| suite == Suite::All || suite == s;
    if pick(Suite::Identities) {
        out.push(identity_suite(seed, count));
    }
    if pick(Suite::Table1) {
        out.push(table1_suite(seed, 20));
    }
    if pick(Suite::Fixedpoints) {
        out.push(triorbit::median::fixed_point_suite());
    }
    if pick(Suite::Bclift) {
        out.push(bclift_suite(seed, count.min(60)));
    }
    if pick(Suite::Tracing) {
        out.push(tracing_law_suite(10, 300));
    }
    out
}

pub fn verify_output(reports: &[Report], format: TextFormat) -> String {
    match format {
        TextFormat::Text => {
            let mut out = String::new();
            for report in reports {
                for check in &report.checks {
                    writeln!(
                        out,
                        "{} {} ({})",
                        if check.passed { "PASS" } else { "FAIL" },
                        check.name,
                        check.detail
                    )
                    .unwrap();
                }
            }
            let total: usize = reports.iter().map(|r| r.checks.len()).sum();
            let failed: usize = reports
                .iter()
                .flat_map(|r| &r.checks)
                .filter(|c| !c.passed)
                .count();
            write!(out, "{} checks, {} failed", total, failed).unwrap();
            out
        }
        TextFormat::Json => serde_json::to_string_pretty(reports).expect("reports serialize"),
    }
}
