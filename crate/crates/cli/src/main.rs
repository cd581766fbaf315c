mod input;

use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use qwalk_core::formulas::{complement_qpoly_regular, corona_qpoly, edge_corona_qpoly, join_qpoly};
use qwalk_core::spectral::q_spectrum;
use qwalk_core::verify::{self, Identity, SweepConfig};
use qwalk_core::walks::{
    enumerate_semi_edge_walks, q_coronal, q_generating_function, q_polynomials,
    walk_counts_via_power,
};
use qwalk_core::{char_poly, Graph, Polynomial, RegularGraphStats};

use input::{parse_spec, GraphSource};

const LAMBDA: &str = "lambda";

#[derive(Parser, Debug)]
#[command(
    name = "qwalk",
    version,
    about = "Signless-Laplacian polynomials, semi-edge walks and graph-operation identities"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Characteristic polynomial of Q.
    Poly {
        #[command(flatten)]
        source: GraphSource,
        /// Also print the Q-polynomial of the complement.
        #[arg(long)]
        complement: bool,
    },
    /// Eigenvalues of Q with walk weights γ.
    Spectrum {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Exact semi-edge walk counts N_0..N_K.
    Walks {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value_t = 12)]
        max_k: usize,
        /// Count by explicit enumeration instead of matrix powers.
        #[arg(long)]
        enumerate: bool,
    },
    /// Q-generating function W(t) of the walk counts.
    Genfun {
        #[command(flatten)]
        source: GraphSource,
        /// Also print the series up to t^K.
        #[arg(long, value_name = "K")]
        order: Option<usize>,
        /// Print the series at the default order 12.
        #[arg(long)]
        series: bool,
    },
    /// Q-coronal Γ(λ).
    Coronal {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Build a graph by an operation and compare its direct Q-polynomial with
    /// the closed form.
    Op {
        operation: Operation,
        /// First graph: `g6:<str>`, `file:<path>`, `gen:<spec>` or bare graph6.
        a: String,
        /// Second graph (not used by `complement`).
        b: Option<String>,
    },
    /// Run an identity sweep; exit status 0 iff every case passes.
    Verify {
        /// prop2.1, prop2.10, thm2.2, thm2.3, cor2.4, thm2.5, thm2.6, thm2.7,
        /// thm2.8, thm2.9, prop2.13, thm2.14, ex2.16 or walks.
        identity: Identity,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Series order / largest walk length for exact checks.
        #[arg(long, default_value_t = 12)]
        order: usize,
        /// Relative tolerance for floating checks.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Operation {
    Complement,
    Union,
    Join,
    Corona,
    EdgeCorona,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Sizes the rayon pool from `QWALK_THREADS` when set.
fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var("QWALK_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .with_context(|| format!("QWALK_THREADS must be a positive integer, got {value:?}"))?;
    if threads == 0 {
        bail!("QWALK_THREADS must be a positive integer, got 0");
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()?;
    Ok(())
}

fn emit_json(value: &impl Serialize) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

/// Returns `Ok(false)` when a check ran but did not pass.
fn run(cli: Cli) -> Result<bool> {
    let json = cli.format == Format::Json;
    match cli.command {
        Command::Poly { source, complement } => {
            let g = source.load()?;
            let (f, f_bar) = q_polynomials(&g);
            if json {
                let mut doc = json!({ "graph6": g.to_graph6(), "f_q": f.to_json(LAMBDA) });
                if complement {
                    doc["f_qbar"] = serde_json::to_value(f_bar.to_json(LAMBDA))?;
                }
                emit_json(&doc)?;
            } else {
                println!("f_Q(λ) = {}", f.display("λ"));
                println!("coeffs = [{}]", join_coeffs(&f));
                if complement {
                    println!("f_Q̄(λ) = {}", f_bar.display("λ"));
                    println!("complement coeffs = [{}]", join_coeffs(&f_bar));
                }
            }
        }
        Command::Spectrum { source } => {
            let spec = q_spectrum(&source.load()?);
            if json {
                emit_json(&spec)?;
            } else {
                println!("{:>22} {:>22}", "q", "gamma");
                for (q, g) in spec.eigenvalues.iter().zip(&spec.gammas) {
                    println!("{q:>22.15} {g:>22.15}");
                }
            }
        }
        Command::Walks {
            source,
            max_k,
            enumerate,
        } => {
            let g = source.load()?;
            let counts: Vec<String> = if enumerate {
                (0..=max_k)
                    .map(|k| enumerate_semi_edge_walks(&g, k).to_string())
                    .collect()
            } else {
                walk_counts_via_power(&g, max_k).to_json().counts
            };
            if json {
                emit_json(&json!({ "n": g.order(), "counts": counts }))?;
            } else {
                for (k, c) in counts.iter().enumerate() {
                    println!("N_{k} = {c}");
                }
            }
        }
        Command::Genfun {
            source,
            order,
            series,
        } => {
            let w = q_generating_function(&source.load()?);
            let order = order.or(series.then_some(12));
            let expansion = order.map(|k| w.series(k)).transpose()?;
            if json {
                let mut doc = json!({ "genfun": w.to_json("t") });
                if let Some(s) = &expansion {
                    doc["series"] = serde_json::to_value(s)?;
                }
                emit_json(&doc)?;
            } else {
                println!("W(t) = {}", w.display("t"));
                if let Some(s) = expansion {
                    println!("series = [{}]", s.to_strings().join(", "));
                }
            }
        }
        Command::Coronal { source } => {
            let gamma = q_coronal(&source.load()?);
            if json {
                emit_json(&gamma.to_json(LAMBDA))?;
            } else {
                println!("Γ(λ) = {}", gamma.display("λ"));
            }
        }
        Command::Op { operation, a, b } => return run_op(operation, &a, b.as_deref(), json),
        Command::Verify {
            identity,
            max_n,
            seed,
            samples,
            order,
            tol,
        } => {
            let cfg = SweepConfig {
                max_n,
                seed,
                samples,
                order,
                tol,
            };
            let report = verify::run(identity, &cfg);
            if json {
                emit_json(&json!({
                    "identity": report.identity,
                    "passed": report.passed(),
                    "checked": report.checked,
                    "failures": report.failures,
                    "notes": report.notes,
                }))?;
            } else {
                let status = if report.passed() { "PASS" } else { "FAIL" };
                println!(
                    "{} {status}: {} checked, {} failed",
                    report.identity,
                    report.checked,
                    report.failures.len()
                );
                for note in &report.notes {
                    println!("note: {note}");
                }
                for f in &report.failures {
                    println!("failure {}: {}", f.graph6, f.detail);
                }
            }
            return Ok(report.passed());
        }
    }
    Ok(true)
}

fn join_coeffs(p: &Polynomial) -> String {
    p.coeffs()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn run_op(operation: Operation, a: &str, b: Option<&str>, json: bool) -> Result<bool> {
    let g1 = parse_spec(a).with_context(|| format!("first graph {a:?}"))?;
    let g2 = match (operation, b) {
        (Operation::Complement, None) => None,
        (Operation::Complement, Some(_)) => bail!("complement takes a single graph"),
        (_, None) => bail!("{operation:?} needs a second graph"),
        (_, Some(b)) => Some(parse_spec(b).with_context(|| format!("second graph {b:?}"))?),
    };
    let built = build(operation, &g1, g2.as_ref())?;
    let direct = char_poly(&built.signless_laplacian());
    let formula = formula_poly(operation, &g1, g2.as_ref());
    let matches = matches!(&formula, Ok(p) if *p == direct);
    let ok = formula.is_err() || matches;
    if json {
        let doc = json!({
            "operation": format!("{operation:?}").to_lowercase(),
            "graph6": built.to_graph6(),
            "n": built.order(),
            "m": built.size(),
            "direct": direct.to_json(LAMBDA),
            "formula": formula.as_ref().ok().map(|p| p.to_json(LAMBDA)),
            "formula_error": formula.as_ref().err().map(|e| e.to_string()),
            "match": formula.is_ok().then_some(matches),
        });
        emit_json(&doc)?;
    } else {
        println!("graph  = {}", built);
        println!("direct = {}", direct.display("λ"));
        match &formula {
            Ok(p) => {
                println!("formula = {}", p.display("λ"));
                println!("{}", if matches { "match" } else { "MISMATCH" });
            }
            Err(e) => println!("formula unavailable: {e}"),
        }
    }
    Ok(ok)
}

fn build(operation: Operation, g1: &Graph, g2: Option<&Graph>) -> Result<Graph> {
    Ok(match (operation, g2) {
        (Operation::Complement, _) => g1.complement(),
        (Operation::Union, Some(g2)) => g1.disjoint_union(g2),
        (Operation::Join, Some(g2)) => g1.join(g2),
        (Operation::Corona, Some(g2)) => g1.corona(g2)?,
        (Operation::EdgeCorona, Some(g2)) => g1.edge_corona(g2)?,
        (_, None) => unreachable!("second graph checked by caller"),
    })
}

fn formula_poly(
    operation: Operation,
    g1: &Graph,
    g2: Option<&Graph>,
) -> qwalk_core::Result<Polynomial> {
    let (f1, fbar1) = q_polynomials(g1);
    match (operation, g2) {
        (Operation::Complement, _) => {
            let stats = RegularGraphStats::from_graph(g1)?;
            complement_qpoly_regular(&f1, stats).into_polynomial()
        }
        (Operation::Union, Some(g2)) => Ok(&f1 * &char_poly(&g2.signless_laplacian())),
        (Operation::Join, Some(g2)) => {
            let (f2, fbar2) = q_polynomials(g2);
            Ok(join_qpoly(&f1, &fbar1, &f2, &fbar2, g1.order(), g2.order()))
        }
        (Operation::Corona, Some(g2)) => corona_qpoly(&f1, g1.order(), g2),
        (Operation::EdgeCorona, Some(g2)) => {
            edge_corona_qpoly(&f1, RegularGraphStats::from_graph(g1)?, g2)
        }
        (_, None) => unreachable!("second graph checked by caller"),
    }
}
