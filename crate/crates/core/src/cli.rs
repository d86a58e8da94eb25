//! Command-line front end. Every subcommand is a thin adapter over the
//! library; reports are JSON unless `--human` is given.
//!
//! Exit codes: 0 on success, 1 on usage or domain errors, 2 on infeasible
//! parameters or exhausted resources.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::constructions::{full_codim_family, large_n_family, mixed_partite_family, partite_family, partition_family};
use crate::error::{Error, Result};
use crate::export::{from_graph6, to_dimacs, to_graph6};
use crate::family::CubeFamily;
use crate::graph::{Graph, IntersectionGraph};
use crate::groundset::{mols_family, pair_cover_family, pair_packing_family, SetFamily};
use crate::optimizer::optimal_partite_profile;
use crate::ramsey::{catalog_entry, lower_bound_blowup, ramsey_exact, upper_bound_eval, verify_witness, RamseyConfig};
use crate::random::{sample_family, sample_family_codim, RandomModelParams};
use crate::report::analyze;

/// Default directory for `ramsey exact` checkpoints.
pub const CHECKPOINT_DIR_ENV: &str = "SUBCUBE_CHECKPOINT_DIR";

#[derive(Parser, Debug)]
#[command(name = "subcube", version, about = "Subcube intersection graphs of {0,1}^d")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build an extremal K_{r+1}-free family.
    #[command(subcommand)]
    Construct(Construct),
    /// Report edges, clique number (with a common point), independence
    /// number and clique counts of a family file.
    Analyze {
        file: PathBuf,
        /// Comma-separated clique sizes to count.
        #[arg(long, value_delimiter = ',')]
        clique_sizes: Vec<usize>,
        #[arg(long)]
        human: bool,
    },
    /// Subcube Ramsey numbers.
    #[command(subcommand)]
    Ramsey(Ramsey),
    /// Set-system constructions over a finite ground set.
    #[command(subcommand)]
    Groundset(Groundset),
    /// Sample a random family.
    Sample(SampleArgs),
    /// Write the intersection graph of a family file.
    Export {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: GraphFormat,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum Construct {
    /// Turán graph T_k(n) from k disjoint coordinate blocks.
    Partite {
        #[arg(short)]
        n: u64,
        #[arg(short)]
        d: usize,
        #[arg(short)]
        k: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// All subcubes with fixed set [d] minus one of r disjoint blocks.
    FullCodim {
        #[arg(short)]
        d: usize,
        #[arg(short)]
        r: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// n subcubes, K_{k+1}-free, with C(k,2) 2^d edges.
    LargeN {
        #[arg(short)]
        n: u64,
        #[arg(short)]
        d: usize,
        #[arg(short)]
        k: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// One class per fixed set, e.g. `--sets 0,1:2:` for {0,1}, {2} and {}.
    Mixed {
        #[arg(short)]
        d: usize,
        #[arg(long)]
        sets: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Classes on consecutive disjoint blocks of the given sizes.
    Partition {
        #[arg(short)]
        d: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Optimal block sizes for an r-partite family of n subcubes.
    Optimal {
        #[arg(short)]
        n: u64,
        #[arg(short)]
        d: usize,
        #[arg(short)]
        r: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum Ramsey {
    /// Exact R_d(k,l) by exhaustive search; always writes the witness.
    Exact {
        #[arg(short)]
        d: usize,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        l: usize,
        #[arg(long)]
        workers: Option<usize>,
        /// Checkpoint file; defaults to a file in $SUBCUBE_CHECKPOINT_DIR.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Witness file; defaults to ramsey-d<d>-k<k>-l<l>.txt.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        no_symmetry: bool,
        #[arg(long)]
        max_branches: Option<usize>,
        #[arg(long, default_value_t = crate::ramsey::MAX_SEARCH_DIMENSION)]
        cap: usize,
    },
    /// Closed-form upper bound.
    Bound {
        #[arg(short)]
        d: usize,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        l: usize,
        #[arg(long)]
        alpha: Option<f64>,
    },
    /// Lower bound from blowing up a graph with no K_x and no independent l-set.
    Blowup {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        l: usize,
        #[arg(short)]
        x: usize,
        /// Catalog name (k1, c5, r43) or a graph6 string.
        #[arg(long)]
        graph: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check that a family has no K_k and no independent l-set.
    Verify {
        file: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        l: usize,
    },
}

#[derive(Subcommand, Debug)]
enum Groundset {
    /// Rows, columns and Latin-square classes of the q x q grid.
    Mols {
        #[arg(short)]
        q: usize,
        #[arg(short)]
        r: usize,
        #[command(flatten)]
        out: SetOutput,
    },
    /// Dual of a pair cover of [n] by r-sets.
    Cover {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        r: usize,
        #[command(flatten)]
        out: SetOutput,
    },
    /// Dual of a pair packing of [n] by r-sets.
    Packing {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        r: usize,
        #[command(flatten)]
        out: SetOutput,
    },
}

#[derive(Args, Debug)]
struct SetOutput {
    #[arg(long, value_enum, default_value_t = SetFormat::Json)]
    format: SetFormat,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SampleArgs {
    #[arg(short)]
    n: usize,
    #[arg(short)]
    d: usize,
    #[arg(short, default_value_t = 0.25)]
    p: f64,
    /// Generated and recorded in the output when omitted.
    #[arg(long)]
    seed: Option<u64>,
    /// Comma-separated probabilities of codimension 0..=d.
    #[arg(long, value_delimiter = ',')]
    codim_dist: Option<Vec<f64>>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphFormat {
    Graph6,
    Dimacs,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SetFormat {
    Json,
    Graph6,
    Dimacs,
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// As [`run`], writing to the given streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::Construct(c) => construct(c, out),
        Command::Analyze {
            file,
            clique_sizes,
            human,
        } => {
            let family = CubeFamily::read(&file)?;
            let report = analyze(&family, &clique_sizes);
            if human {
                write!(out, "{}", report.to_table())?;
            } else {
                writeln!(out, "{}", report.to_json())?;
            }
            Ok(())
        }
        Command::Ramsey(r) => ramsey(r, out),
        Command::Groundset(g) => groundset(g, out),
        Command::Sample(s) => sample(s, out),
        Command::Export { file, format, output } => {
            let family = CubeFamily::read(&file)?;
            let graph = IntersectionGraph::build(&family);
            emit(&graph_text(graph.graph(), format), output.as_deref(), out)
        }
    }
}

fn graph_text(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Graph6 => format!("{}\n", to_graph6(g)),
        GraphFormat::Dimacs => to_dimacs(g),
    }
}

/// Writes `text` to `path`, or to `out` when no path is given.
fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Writes a family file, or the family text to `out`, and for files prints
/// a JSON summary.
fn emit_family(family: &CubeFamily, comment: String, path: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    let text = family.to_text_with_comments(&[comment]);
    match path {
        None => out.write_all(text.as_bytes())?,
        Some(p) => {
            std::fs::write(p, text)?;
            let g = IntersectionGraph::build(family);
            let summary = json!({
                "file": p.display().to_string(),
                "n": family.len(),
                "d": family.width(),
                "edges": g.edge_count(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&summary)?)?;
        }
    }
    Ok(())
}

fn parse_sets(spec: &str) -> Result<Vec<Vec<usize>>> {
    spec.split(':')
        .map(|part| {
            part.split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::InvalidArgument(format!("bad coordinate {s:?} in --sets")))
                })
                .collect()
        })
        .collect()
}

fn construct(c: Construct, out: &mut dyn Write) -> Result<()> {
    match c {
        Construct::Partite { n, d, k, output } => {
            let f = partite_family(n, d, k)?;
            emit_family(&f, format!("partite n={n} d={d} k={k}"), output.as_deref(), out)
        }
        Construct::FullCodim { d, r, output } => {
            let f = full_codim_family(d, r)?;
            emit_family(&f, format!("full-codim d={d} r={r}"), output.as_deref(), out)
        }
        Construct::LargeN { n, d, k, output } => {
            let f = large_n_family(n, d, k)?;
            emit_family(&f, format!("large-n n={n} d={d} k={k}"), output.as_deref(), out)
        }
        Construct::Mixed { d, sets, output } => {
            let f = mixed_partite_family(d, &parse_sets(&sets)?)?;
            emit_family(&f, format!("mixed d={d} sets={sets}"), output.as_deref(), out)
        }
        Construct::Partition { d, sizes, output } => {
            let f = partition_family(d, &sizes)?;
            emit_family(&f, format!("partition d={d} sizes={sizes:?}"), output.as_deref(), out)
        }
        Construct::Optimal { n, d, r, output } => {
            let solution = optimal_partite_profile(n, d, r)?;
            if let Some(path) = output {
                let f = solution.profile.realize(d)?;
                f.write(&path, &[format!("optimal n={n} d={d} r={r}")])?;
            }
            writeln!(out, "{}", solution.to_json())?;
            Ok(())
        }
    }
}

fn default_checkpoint(d: usize, k: usize, l: usize) -> Option<PathBuf> {
    std::env::var_os(CHECKPOINT_DIR_ENV).map(|dir| PathBuf::from(dir).join(format!("ramsey-d{d}-k{k}-l{l}.json")))
}

fn ramsey(r: Ramsey, out: &mut dyn Write) -> Result<()> {
    match r {
        Ramsey::Exact {
            d,
            k,
            l,
            workers,
            checkpoint,
            output,
            no_symmetry,
            max_branches,
            cap,
        } => {
            let config = RamseyConfig {
                workers,
                checkpoint: checkpoint.or_else(|| default_checkpoint(d, k, l)),
                dimension_cap: cap,
                symmetry: !no_symmetry,
                max_branches,
                ..Default::default()
            };
            let result = ramsey_exact(d, k, l, &config)?;
            let path = output.unwrap_or_else(|| PathBuf::from(format!("ramsey-d{d}-k{k}-l{l}.txt")));
            result.witness.write(
                &path,
                &[format!(
                    "witness for R_{d}({k},{l}) = {}: no K_{k}, no independent {l}-set",
                    result.value
                )],
            )?;
            let mut record = serde_json::to_value(&result)?;
            record["witness_file"] = json!(path.display().to_string());
            writeln!(out, "{}", serde_json::to_string_pretty(&record)?)?;
            Ok(())
        }
        Ramsey::Bound { d, k, l, alpha } => {
            let b = upper_bound_eval(d, k, l, alpha)?;
            let record = json!({ "d": d, "k": k, "l": l, "upper_bound": b.value, "formula": b.formula });
            writeln!(out, "{}", serde_json::to_string_pretty(&record)?)?;
            Ok(())
        }
        Ramsey::Blowup {
            k,
            l,
            x,
            graph,
            output,
        } => {
            let g = match catalog_entry(&graph) {
                Ok(e) => e.graph,
                Err(_) => from_graph6(&graph)?,
            };
            let d = g.vertex_count();
            let (bound, family) = lower_bound_blowup(d, k, l, &g, x)?;
            if let Some(path) = &output {
                family.write(path, &[format!("blow-up of {graph} with k={k} l={l} x={x}")])?;
            }
            let record = json!({
                "d": d, "k": k, "l": l, "x": x,
                "lower_bound": bound,
                "statement": format!("R_{d}({k},{l}) > {bound}"),
                "family": family.members().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&record)?)?;
            Ok(())
        }
        Ramsey::Verify { file, k, l } => {
            let family = CubeFamily::read(&file)?;
            let valid = verify_witness(&family, k, l)?;
            let record = json!({ "n": family.len(), "d": family.width(), "k": k, "l": l, "valid": valid });
            writeln!(out, "{}", serde_json::to_string_pretty(&record)?)?;
            Ok(())
        }
    }
}

fn emit_sets(family: &SetFamily, opts: &SetOutput, out: &mut dyn Write) -> Result<()> {
    let text = match opts.format {
        SetFormat::Json => format!("{}\n", family.to_json()),
        SetFormat::Graph6 => graph_text(&family.intersection_graph(), GraphFormat::Graph6),
        SetFormat::Dimacs => graph_text(&family.intersection_graph(), GraphFormat::Dimacs),
    };
    emit(&text, opts.output.as_deref(), out)
}

fn groundset(g: Groundset, out: &mut dyn Write) -> Result<()> {
    match g {
        Groundset::Mols { q, r, out: opts } => emit_sets(&mols_family(q, r)?, &opts, out),
        Groundset::Cover { n, r, out: opts } => emit_sets(&pair_cover_family(n, r)?, &opts, out),
        Groundset::Packing { n, r, out: opts } => emit_sets(&pair_packing_family(n, r)?, &opts, out),
    }
}

fn sample(s: SampleArgs, out: &mut dyn Write) -> Result<()> {
    let seed = s.seed.unwrap_or_else(rand::random);
    let mut params = RandomModelParams::new(s.n, s.d, s.p, seed);
    let family = match s.codim_dist {
        Some(dist) => {
            params = params.with_codim_distribution(dist);
            sample_family_codim(&params)?
        }
        None => sample_family(&params)?,
    };
    emit_family(&family, params.provenance(), s.output.as_deref(), out)
}
