//! Command definitions and their execution.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};

use qutrit_bloch::atlas::errata::Verdict as ErrataVerdict;
use qutrit_bloch::atlas::{ClusterId, Verdict};
use qutrit_bloch::scene::SceneDocument;
use qutrit_bloch::{evaluate, Execution, Param, ParamVector, SampleMethod, SamplerConfig};

use crate::api::{self, ScanRequest};

pub const EXIT_PHYSICAL: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_UNPHYSICAL: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "qutrit",
    version,
    about = "Qutrit states, physicality and Bloch vectors u, v, w"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one state; exit 0 if physical, 3 if not.
    Eval(EvalArgs),
    /// Print physical/unphysical only; exit 0 if physical, 3 if not.
    Check(ParamArgs),
    /// Scan a cluster case over a square grid and write CSV.
    Scan(ScanArgs),
    /// Draw reproducible random states.
    Sample(SampleArgs),
    /// List the cluster catalog.
    Clusters(JsonFlag),
    /// Compare printed special-case forms with the matrix computation.
    Errata(JsonFlag),
    /// Run the JSON service.
    Serve(ServeArgs),
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    /// Parameter assignment `name=value`; repeatable, unset names are 0.
    #[arg(long = "set", value_name = "NAME=VALUE", allow_hyphen_values = true)]
    pub sets: Vec<String>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Emit the scene document as JSON.
    #[arg(long, conflicts_with = "text")]
    pub json: bool,
    /// Emit a human-readable summary (default).
    #[arg(long)]
    pub text: bool,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Cluster id: I..VII or 4var.
    #[arg(long)]
    pub cluster: String,
    /// Sub-case such as "(a,alpha2)"; defaults to the cluster's first.
    #[arg(long)]
    pub sub: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    pub min: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub max: f64,
    #[arg(long)]
    pub step: f64,
    /// Fixed `p`, `q` values for four-variable cases; repeatable.
    #[arg(long = "fix", allow_negative_numbers = true)]
    pub fix: Vec<f64>,
    /// CSV destination; stdout if omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write an SVG region map.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// Pixel size of one SVG cell.
    #[arg(long, default_value_t = 8)]
    pub cell_px: u32,
    /// Evaluate cells on one thread.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    /// rejection, pure or hilbert_schmidt.
    #[arg(long)]
    pub method: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    /// Emit records with full scene documents as JSON.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct JsonFlag {
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ServeArgs {
    #[arg(long, default_value_t = 8080)]
    pub port: u16,
    #[arg(long, default_value = "127.0.0.1")]
    pub host: String,
}

/// A failure tagged with the exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
}

fn usage(error: impl Into<anyhow::Error>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        error: error.into(),
    }
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        Failure {
            code: EXIT_FAILURE,
            error,
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(error: std::io::Error) -> Self {
        anyhow::Error::from(error).into()
    }
}

/// Parses one `name=value` assignment.
pub fn parse_set(s: &str) -> anyhow::Result<(Param, f64)> {
    let (name, value) = s
        .split_once('=')
        .with_context(|| format!("expected NAME=VALUE, got {s:?}"))?;
    let param = Param::from_name(name.trim()).with_context(|| {
        let names: Vec<_> = Param::ALL.iter().map(|p| p.name()).collect();
        format!(
            "unknown parameter {name:?}; expected one of {}",
            names.join(", ")
        )
    })?;
    let value: f64 = value
        .trim()
        .parse()
        .with_context(|| format!("cannot parse {value:?} as a number"))?;
    anyhow::ensure!(value.is_finite(), "{name} must be finite");
    Ok((param, value))
}

pub fn params_from_sets(sets: &[String]) -> anyhow::Result<ParamVector> {
    let mut p = ParamVector::zero();
    for s in sets {
        let (param, value) = parse_set(s)?;
        p.set(param, value);
    }
    Ok(p)
}

fn fmt3(v: [f64; 3]) -> String {
    format!("[{:.10}, {:.10}, {:.10}]", v[0], v[1], v[2])
}

pub fn scene_text(doc: &SceneDocument) -> String {
    let inv = &doc.invariants_block;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "physical     {}",
        if inv.physical { "yes" } else { "no" }
    );
    let _ = writeln!(out, "lhs1         {:.12}", inv.lhs1);
    let _ = writeln!(out, "lhs2         {:.12}", inv.lhs2);
    let _ = writeln!(out, "purity       {:.12}", inv.purity);
    let _ = writeln!(out, "eigenvalues  {}", fmt3(inv.eigenvalues));
    let _ = writeln!(out, "e2, e3       {:.12}, {:.12}", inv.e2, inv.e3);
    for (name, v) in [
        ("u", &doc.bloch.u),
        ("v", &doc.bloch.v),
        ("w", &doc.bloch.w),
    ] {
        let flags: Vec<_> = (0..3)
            .filter(|&i| v.negative_components[i])
            .map(|i| format!("{name}{}^2 < 0", i + 1))
            .collect();
        let _ = write!(
            out,
            "{name}^2          {}  |{name}| = {:.10}",
            fmt3(v.squares),
            v.length
        );
        if !flags.is_empty() {
            let _ = write!(out, "  ({})", flags.join(", "));
        }
        out.push('\n');
    }
    out
}

fn json<T: serde::Serialize>(value: &T) -> anyhow::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn exit_for(doc: &SceneDocument) -> u8 {
    if doc.invariants_block.physical {
        EXIT_PHYSICAL
    } else {
        EXIT_UNPHYSICAL
    }
}

/// Runs a non-serving command, writing results to `out`. Returns the exit code.
pub fn run(command: Command, out: &mut dyn Write) -> Result<u8, Failure> {
    match command {
        Command::Eval(args) => {
            let params = params_from_sets(&args.params.sets).map_err(usage)?;
            let doc = evaluate(&params).map_err(usage)?;
            if args.json {
                out.write_all(json(&doc)?.as_bytes())?;
            } else {
                out.write_all(scene_text(&doc).as_bytes())?;
            }
            Ok(exit_for(&doc))
        }
        Command::Check(args) => {
            let params = params_from_sets(&args.sets).map_err(usage)?;
            let doc = evaluate(&params).map_err(usage)?;
            let word = if doc.invariants_block.physical {
                "physical"
            } else {
                "unphysical"
            };
            writeln!(out, "{word}")?;
            Ok(exit_for(&doc))
        }
        Command::Scan(args) => scan(args, out),
        Command::Sample(args) => {
            let method: SampleMethod = args.method.parse().map_err(usage)?;
            let config = SamplerConfig {
                method,
                seed: args.seed,
                count: args.count,
            };
            let response = api::sample_response(&config).map_err(usage)?;
            if args.json {
                out.write_all(json(&response)?.as_bytes())?;
            } else {
                writeln!(out, "x,y,a,b,alpha1,beta1,alpha2,beta2,purity,physical")?;
                for rec in &response.records {
                    let mut line = String::new();
                    for v in rec.params.to_array() {
                        let _ = write!(line, "{v:.16e},");
                    }
                    let inv = &rec.scene.invariants_block;
                    let _ = write!(line, "{:.16e},{}", inv.purity, u8::from(inv.physical));
                    writeln!(out, "{line}")?;
                }
            }
            Ok(EXIT_PHYSICAL)
        }
        Command::Clusters(flag) => {
            let r = api::clusters_response();
            if flag.json {
                out.write_all(json(&r)?.as_bytes())?;
            } else {
                for c in r
                    .clusters
                    .iter()
                    .map(|c| (c.id, &c.cases))
                    .chain([(ClusterId::FourVariable, &r.four_variable_cases)])
                {
                    let subs: Vec<_> = c.1.iter().map(|k| k.sub_case.as_str()).collect();
                    writeln!(out, "{:<5} {}", c.0.label(), subs.join(" "))?;
                }
            }
            Ok(EXIT_PHYSICAL)
        }
        Command::Errata(flag) => {
            let r = api::errata_response();
            if flag.json {
                out.write_all(json(&r)?.as_bytes())?;
            } else {
                for e in &r.entries {
                    let verdict = match e.verdict {
                        ErrataVerdict::Match => "match",
                        ErrataVerdict::Mismatch => "MISMATCH",
                    };
                    writeln!(
                        out,
                        "{:<5} {:<36} {:<16} {:<8} {:.3e}  {}",
                        e.table, e.row, e.quantity, verdict, e.discrepancy, e.printed_expression
                    )?;
                }
                for note in &r.notes {
                    writeln!(out, "note: {note}")?;
                }
            }
            Ok(EXIT_PHYSICAL)
        }
        Command::Serve(_) => Err(anyhow::anyhow!("serve is handled by the binary").into()),
    }
}

fn scan(args: ScanArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    let request = ScanRequest {
        cluster: args.cluster,
        sub: args.sub,
        min: args.min,
        max: args.max,
        step: args.step,
        fixed: args.fix,
    };
    let (case, spec) = request.resolve().map_err(usage)?;
    let mode = if args.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    let grid = qutrit_bloch::atlas::scan_region(&case, &spec, mode).map_err(usage)?;
    let csv = grid.to_csv();
    match &args.out {
        Some(path) => {
            std::fs::write(path, &csv).with_context(|| format!("writing {}", path.display()))?
        }
        None => out.write_all(csv.as_bytes())?,
    }
    if let Some(path) = &args.svg {
        std::fs::write(path, grid.to_svg(args.cell_px.max(1)))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let count = |v: Verdict| grid.cells.iter().filter(|c| c.verdict == v).count();
    eprintln!(
        "{}: {} cells, {} physical, {} fail the cubic inequality only, {} fail the purity inequality",
        case,
        grid.cells.len(),
        count(Verdict::Physical),
        count(Verdict::FailsIneq2Only),
        count(Verdict::FailsIneq1)
    );
    Ok(EXIT_PHYSICAL)
}
