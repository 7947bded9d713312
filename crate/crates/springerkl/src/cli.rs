//! Command-line front end: tableau listings, IP polynomials, Gram
//! matrices by any method, finite-field verification, and the full
//! selftest, with deterministic text or JSON output.
//!
//! Exit codes: 0 = success / all checks pass, 1 = usage error,
//! 2 = verification mismatch.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::cupdiag::tableau_to_cups;
use crate::error::{Error, Result};
use crate::fqspringer::verify_shape;
use crate::gram::{cross_check, gram_by_diagrams, gram_by_equations, gram_by_geometry, GramMatrix};
use crate::poincare::{hook_component_ip, hook_intersection_ip, two_row_component_ip, two_row_intersection_ip, IpValue};
use crate::selftest::run_all;
use crate::tableaux::{enumerate_standard, StandardTableau, YoungShape};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "springerkl",
    about = "Exact Springer fiber Poincaré polynomials, Kazhdan-Lusztig Gram matrices, and GF(p) point-count verification for hook and two-row shapes",
    disable_help_flag = false
)]
struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Suppress per-item output; keep only summaries and failures.
    #[arg(long, global = true)]
    quiet: bool,

    /// Worker threads for flag enumeration (0 = automatic). Counts are
    /// identical regardless of the thread count.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the standard tableaux of a shape with descents and cup diagrams.
    Tableaux {
        #[arg(long)]
        shape: String,
    },
    /// Intersection homology Poincaré polynomials.
    Ip {
        #[command(subcommand)]
        which: IpCommand,
    },
    /// Compute the Gram matrix by one method, or by all with cross-checking.
    Gram {
        #[arg(long)]
        shape: String,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
    },
    /// Count GF(p) flags for every component and intersection and
    /// compare against the predicted polynomials.
    Verify {
        #[arg(long)]
        shape: String,
        /// Comma-separated primes, each one of 2, 3, 5.
        #[arg(long, default_value = "2,3")]
        primes: String,
    },
    /// Run the full acceptance checks up to the given size.
    Selftest {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
}

#[derive(Subcommand, Debug)]
enum IpCommand {
    /// IP of one component.
    Component(IpComponentArgs),
    /// IP of a pairwise intersection ("empty" when the intersection is).
    Intersection(IpIntersectionArgs),
}

#[derive(Args, Debug)]
struct IpComponentArgs {
    #[arg(long)]
    shape: String,
    /// Rows joined by "/", entries space-separated: "5 2 1 / 4 / 3".
    #[arg(long)]
    tableau: String,
}

#[derive(Args, Debug)]
struct IpIntersectionArgs {
    #[arg(long)]
    shape: String,
    #[arg(long)]
    a: String,
    #[arg(long)]
    b: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Equations,
    Diagrams,
    Geometry,
    All,
}

fn parse_shape(s: &str) -> Result<YoungShape> {
    let shape = YoungShape::parse(s)?;
    if !shape.supported() {
        return Err(Error::UnsupportedShape {
            shape: shape.to_string(),
            reason: "only hook and two-row shapes are supported".into(),
        });
    }
    Ok(shape)
}

fn parse_tableau(s: &str, shape: &YoungShape) -> Result<StandardTableau> {
    let t = StandardTableau::parse(s)?;
    if t.shape() != shape {
        return Err(Error::Mismatch(format!(
            "tableau {t} has shape {} but --shape is {shape}",
            t.shape()
        )));
    }
    Ok(t)
}

fn parse_primes(s: &str) -> Result<Vec<u8>> {
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u8>()
                .map_err(|_| Error::Parse(format!("bad prime {tok:?}")))
        })
        .collect()
}

/// Run the CLI on explicit arguments, writing results to `out` and
/// diagnostics to `err`; returns the process exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders --help/--version as "errors" with success status
            return if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            };
        }
    };
    if cli.threads > 0 {
        // a global pool can only be installed once; later calls keep the first
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global();
    }
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Tableaux { shape } => cmd_tableaux(cli, shape, out),
        Command::Ip { which } => match which {
            IpCommand::Component(args) => cmd_ip_component(cli, args, out),
            IpCommand::Intersection(args) => cmd_ip_intersection(cli, args, out),
        },
        Command::Gram { shape, method } => cmd_gram(cli, shape, *method, out),
        Command::Verify { shape, primes } => cmd_verify(cli, shape, primes, out),
        Command::Selftest { max_n } => cmd_selftest(cli, *max_n, out),
    }
}

fn wr(out: &mut dyn Write, s: String) -> Result<()> {
    out.write_all(s.as_bytes())
        .and_then(|_| out.write_all(b"\n"))
        .map_err(|e| Error::Parse(format!("write failed: {e}")))
}

fn cmd_tableaux(cli: &Cli, shape: &str, out: &mut dyn Write) -> Result<i32> {
    let shape = parse_shape(shape)?;
    let tabs = enumerate_standard(&shape)?;
    if cli.json {
        let items: Vec<serde_json::Value> = tabs
            .iter()
            .enumerate()
            .map(|(i, t)| -> Result<serde_json::Value> {
                let mut obj = serde_json::json!({
                    "index": i,
                    "tableau": t.to_string(),
                    "rows": t.to_json(),
                    "descents": t.descent_set(),
                });
                if shape.is_two_row() {
                    obj["cups"] = tableau_to_cups(t)?.to_json();
                }
                Ok(obj)
            })
            .collect::<Result<_>>()?;
        wr(out, serde_json::json!({"shape": shape.rows(), "tableaux": items}).to_string())?;
        return Ok(EXIT_OK);
    }
    wr(out, format!("shape {shape}: {} standard tableaux", tabs.len()))?;
    if cli.quiet {
        return Ok(EXIT_OK);
    }
    for (i, t) in tabs.iter().enumerate() {
        wr(out, format!("[{i}] {t}"))?;
        let desc = t
            .descent_set()
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(",");
        wr(out, format!("    descents: {{{desc}}}"))?;
        if shape.is_two_row() {
            let cups = tableau_to_cups(t)?;
            for line in cups.render().lines() {
                wr(out, format!("    {line}"))?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_ip_component(cli: &Cli, args: &IpComponentArgs, out: &mut dyn Write) -> Result<i32> {
    let shape = parse_shape(&args.shape)?;
    let t = parse_tableau(&args.tableau, &shape)?;
    let ip = if shape.is_hook() {
        hook_component_ip(&t)?
    } else {
        two_row_component_ip(&t)?
    };
    if cli.json {
        wr(
            out,
            serde_json::json!({
                "shape": shape.rows(),
                "tableau": t.to_string(),
                "ip": ip.to_json(),
                "ip_string": ip.to_string(),
            })
            .to_string(),
        )?;
    } else {
        wr(out, ip.to_string())?;
    }
    Ok(EXIT_OK)
}

fn cmd_ip_intersection(cli: &Cli, args: &IpIntersectionArgs, out: &mut dyn Write) -> Result<i32> {
    let shape = parse_shape(&args.shape)?;
    let a = parse_tableau(&args.a, &shape)?;
    let b = parse_tableau(&args.b, &shape)?;
    let ip = if shape.is_hook() {
        hook_intersection_ip(&a, &b)?
    } else {
        two_row_intersection_ip(&a, &b)?
    };
    if cli.json {
        let value = match &ip {
            IpValue::Empty => serde_json::Value::Null,
            IpValue::Poly(p) => p.to_json(),
        };
        wr(
            out,
            serde_json::json!({
                "shape": shape.rows(),
                "a": a.to_string(),
                "b": b.to_string(),
                "ip": value,
            })
            .to_string(),
        )?;
    } else {
        match &ip {
            IpValue::Empty => wr(out, "empty".to_string())?,
            IpValue::Poly(p) => wr(out, p.to_string())?,
        }
    }
    Ok(EXIT_OK)
}

fn print_gram(cli: &Cli, g: &GramMatrix, out: &mut dyn Write) -> Result<()> {
    if cli.json {
        wr(out, g.to_json().to_string())
    } else if cli.quiet {
        wr(out, format!("shape {} ({} tableaux)", g.shape(), g.dim()))
    } else {
        out.write_all(g.render_text().as_bytes())
            .map_err(|e| Error::Parse(format!("write failed: {e}")))
    }
}

fn cmd_gram(cli: &Cli, shape: &str, method: Method, out: &mut dyn Write) -> Result<i32> {
    let shape = parse_shape(shape)?;
    match method {
        Method::Equations => print_gram(cli, &gram_by_equations(&shape)?, out)?,
        Method::Diagrams => print_gram(cli, &gram_by_diagrams(&shape)?, out)?,
        Method::Geometry => print_gram(cli, &gram_by_geometry(&shape)?, out)?,
        Method::All => {
            let report = cross_check(&shape)?;
            let g = gram_by_equations(&shape)?;
            if cli.json {
                let mut v = g.to_json();
                v["cross_check"] = serde_json::json!({
                    "comparisons": report.comparisons_run,
                    "entry_mismatches": report.entry_mismatches,
                    "saturation_failures": report.saturation_failures,
                    "passed": report.passed(),
                });
                wr(out, v.to_string())?;
            } else {
                print_gram(cli, &g, out)?;
                for m in &report.entry_mismatches {
                    wr(out, format!("MISMATCH: {m}"))?;
                }
                for m in &report.saturation_failures {
                    wr(out, format!("SATURATION FAILURE: {m}"))?;
                }
                wr(
                    out,
                    format!(
                        "cross-check [{}]: {}",
                        report.comparisons_run.join(", "),
                        if report.passed() { "ok" } else { "MISMATCH" }
                    ),
                )?;
            }
            if !report.passed() {
                return Ok(EXIT_MISMATCH);
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(cli: &Cli, shape: &str, primes: &str, out: &mut dyn Write) -> Result<i32> {
    let shape = parse_shape(shape)?;
    let primes = parse_primes(primes)?;
    let report = verify_shape(&shape, &primes)?;
    if cli.json {
        wr(out, report.to_json().to_string())?;
    } else {
        let mut pass = 0usize;
        for c in &report.cases {
            let ok = c.status == crate::fqspringer::CaseStatus::Pass;
            if ok {
                pass += 1;
            }
            if !cli.quiet || !ok {
                wr(
                    out,
                    format!(
                        "{:<28} p={} {:<28} expected {:>12} actual {:>12} {}",
                        c.case,
                        c.prime,
                        c.tableaux.join(" | "),
                        c.expected,
                        c.actual,
                        c.status.as_str()
                    ),
                )?;
            }
        }
        wr(
            out,
            format!("verify shape {shape}: {pass}/{} cases pass", report.cases.len()),
        )?;
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_MISMATCH })
}

fn cmd_selftest(cli: &Cli, max_n: usize, out: &mut dyn Write) -> Result<i32> {
    let results = run_all(max_n);
    if cli.json {
        let items: Vec<serde_json::Value> = results
            .iter()
            .map(|r| {
                serde_json::json!({
                    "id": r.id,
                    "name": r.name,
                    "passed": r.passed,
                    "detail": r.detail,
                })
            })
            .collect();
        wr(out, serde_json::Value::from(items).to_string())?;
    } else {
        for r in &results {
            wr(out, r.line())?;
        }
    }
    Ok(if results.iter().all(|r| r.passed) {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}
