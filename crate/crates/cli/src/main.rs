//! `oneext`: command-line front end. Reports go to stdout as JSON (CSV for
//! `sweep`), graphs go to the file named by `--output`, notes go to stderr.
//!
//! Exit status: 0 success, 1 negative answer from a decision command
//! (`check-1ext`, `check-param`, `verify-disks`), 2 bad input or usage,
//! 3 search budget exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use oneext::csma::{self, parse_rational};
use oneext::extend::{is_one_extendable_with, param_one_extendability_with, CheckOptions};
use oneext::kernel::{kernelize, FriendlyOracle};
use oneext::mis::{Budget, Solver};
use oneext::reduce3sat::{build_g_phi, RectilinearFormula};
use oneext::transforms::{self, CrossingSpec, TransformCertificate};
use oneext::unitdisk::{to_unit_disk, verify_disks, DiskLayout, OrthogonalEmbedding};
use oneext::{Error, Graph};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "oneext", version, about = "Exact 1-extendability tools for graphs")]
struct Cli {
    /// Stop after this many search nodes (exit status 3).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Worker threads for per-vertex checks; 0 uses all cores.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Out {
    /// Where to write the resulting graph (edge-list format).
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Independence number and one maximum independent set.
    Alpha { graph: PathBuf },
    /// Does every vertex lie in a maximum independent set?
    #[command(name = "check-1ext")]
    CheckOneExt { graph: PathBuf },
    /// Does every vertex lie in an independent set of size k?
    CheckParam {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Apply a graph construction.
    Transform {
        #[command(subcommand)]
        which: Transform,
    },
    /// The 22-vertex crossover gadget.
    Gadget {
        #[command(subcommand)]
        which: GadgetCmd,
    },
    /// Replace edge crossings by gadgets.
    ReplaceCrossings {
        graph: PathBuf,
        /// JSON list of `{"through": [u, u'], "crossed": [[v, v'], ...]}`.
        #[arg(long)]
        crossings: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// Build the graph of a planar monotone rectilinear 3SAT formula.
    #[command(name = "reduce-3sat")]
    Reduce3Sat {
        formula: PathBuf,
        /// Also reduce the maximum degree to 3.
        #[arg(long)]
        t3: bool,
        #[command(flatten)]
        out: Out,
    },
    /// Shrink an instance of the parameterized problem.
    Kernelize {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        oracle: OracleKind,
        /// Forbidden clique size for `--oracle krfree`.
        #[arg(long, required_if_eq("oracle", "krfree"))]
        r: Option<usize>,
        #[command(flatten)]
        out: Out,
    },
    /// Exact per-node CSMA throughput at one activity rate.
    Throughput {
        graph: PathBuf,
        /// Rational, e.g. `20`, `5/2` or `0.25`.
        #[arg(long)]
        theta: String,
    },
    /// Throughput table over several activity rates, as CSV.
    Sweep {
        graph: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        thetas: Vec<String>,
        /// Digits after the decimal point.
        #[arg(long, default_value_t = 6)]
        precision: usize,
    },
    /// Per-node throughput as the activity rate grows without bound.
    Limit { graph: PathBuf },
    /// Nodes whose throughput tends to zero.
    Starvation { graph: PathBuf },
    /// Realize an even subdivision of an orthogonal drawing by unit disks.
    Unitdisk {
        graph: PathBuf,
        /// JSON drawing `{"vertices":[{id,x,y}],"edges":[{u,v,bends}]}`.
        embedding: PathBuf,
        /// Where to write the disk centers.
        #[arg(long)]
        layout: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// Check that disks realize a graph.
    VerifyDisks { graph: PathBuf, layout: PathBuf },
}

#[derive(Subcommand)]
enum Transform {
    /// Pendant vertex on every vertex.
    T1 {
        graph: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// Subdivide every edge with 2s new vertices.
    T2 {
        graph: PathBuf,
        #[arg(long, default_value_t = 1)]
        s: usize,
        #[command(flatten)]
        out: Out,
    },
    /// Replace every vertex by a path, reaching maximum degree 3.
    T3 {
        graph: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// Pendants plus an independent set of n - r vertices.
    Gplus {
        graph: PathBuf,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        out: Out,
    },
    /// Two copies and two clique-selector layers.
    Gap {
        graph: PathBuf,
        /// JSON list of cliques partitioning the vertices.
        #[arg(long)]
        parts: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// One selector per clique plus a hub.
    W1 {
        graph: PathBuf,
        #[arg(long)]
        parts: PathBuf,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Subcommand)]
enum GadgetCmd {
    /// Write the gadget as an edge list.
    Emit {
        #[command(flatten)]
        out: Out,
    },
    /// Recompute α and the 3×3 constrained table by exhaustive search.
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleKind {
    Degen,
    Krfree,
}

enum Failure {
    Input(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded(_) => Failure::Budget(e.to_string()),
            e => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    Graph::parse_edge_list(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    serde_json::from_str(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn report<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
}

fn emit(g: &Graph, cert: &impl Serialize, out: &Out) -> Outcome {
    write(&out.output, &g.to_edge_list())?;
    eprintln!("wrote {} vertices, {} edges to {}", g.n(), g.m(), out.output.display());
    report(cert);
    Ok(true)
}

fn emit_transform(result: oneext::Result<(Graph, TransformCertificate)>, out: &Out) -> Outcome {
    let (g, cert) = result?;
    emit(&g, &cert, out)
}

fn run(cli: Cli) -> Outcome {
    let opts = CheckOptions { budget: cli.budget.map_or_else(Budget::unlimited, Budget::nodes), jobs: cli.jobs };
    match cli.command {
        Command::Alpha { graph } => {
            let g = load_graph(&graph)?;
            report(&Solver::new(&g, &opts.budget).max_independent_set()?);
            Ok(true)
        }
        Command::CheckOneExt { graph } => {
            let r = is_one_extendable_with(&load_graph(&graph)?, &opts)?;
            report(&r);
            Ok(r.one_extendable)
        }
        Command::CheckParam { graph, k } => {
            let r = param_one_extendability_with(&load_graph(&graph)?, k, &opts)?;
            report(&r);
            Ok(r.holds)
        }
        Command::Transform { which } => match which {
            Transform::T1 { graph, out } => emit_transform(transforms::t1_pendant(&load_graph(&graph)?), &out),
            Transform::T2 { graph, s, out } => emit_transform(transforms::t2_subdivide(&load_graph(&graph)?, s), &out),
            Transform::T3 { graph, out } => {
                emit_transform(transforms::t3_degree_reduce(&load_graph(&graph)?, None), &out)
            }
            Transform::Gplus { graph, r, out } => emit_transform(transforms::g_plus(&load_graph(&graph)?, r), &out),
            Transform::Gap { graph, parts, out } => {
                let parts: Vec<Vec<usize>> = load_json(&parts)?;
                emit_transform(transforms::gap_construction(&load_graph(&graph)?, &parts), &out)
            }
            Transform::W1 { graph, parts, out } => {
                let parts: Vec<Vec<usize>> = load_json(&parts)?;
                emit_transform(transforms::w1_construction(&load_graph(&graph)?, &parts), &out)
            }
        },
        Command::Gadget { which } => {
            let gadget = transforms::gjs_gadget();
            match which {
                GadgetCmd::Emit { out } => {
                    write(&out.output, &gadget.graph.to_edge_list())?;
                    eprintln!("wrote {} vertices to {}", gadget.graph.n(), out.output.display());
                    Ok(true)
                }
                GadgetCmd::Table => {
                    #[derive(Serialize)]
                    struct Table {
                        alpha: usize,
                        /// Row = |S ∩ Y|, column = |S ∩ X|.
                        table: [[Option<usize>; 3]; 3],
                    }
                    let alpha = Solver::new(&gadget.graph, &opts.budget).max_independent_set()?.alpha;
                    report(&Table { alpha, table: gadget.constrained_table()? });
                    Ok(true)
                }
            }
        }
        Command::ReplaceCrossings { graph, crossings, out } => {
            let specs: Vec<CrossingSpec> = load_json(&crossings)?;
            emit_transform(transforms::replace_crossings(&load_graph(&graph)?, &specs), &out)
        }
        Command::Reduce3Sat { formula, t3, out } => {
            let phi = RectilinearFormula::parse(&read(&formula)?)?;
            emit_transform(build_g_phi(&phi, t3), &out)
        }
        Command::Kernelize { graph, k, oracle, r, out } => {
            let g = load_graph(&graph)?;
            let oracle = match oracle {
                OracleKind::Degen => FriendlyOracle::degenerate(&g),
                OracleKind::Krfree => FriendlyOracle::kr_free(&g, r.expect("clap requires --r"))?,
            };
            let (kernel, trace) = kernelize(&g, k, &oracle)?;
            emit(&kernel, &trace, &out)
        }
        Command::Throughput { graph, theta } => {
            let theta = parse_rational(&theta)?;
            report(&csma::throughput_with(&load_graph(&graph)?, &theta, &opts.budget)?);
            Ok(true)
        }
        Command::Sweep { graph, thetas, precision } => {
            let thetas = thetas.iter().map(|t| parse_rational(t)).collect::<oneext::Result<Vec<_>>>()?;
            print!("{}", csma::theta_sweep_with(&load_graph(&graph)?, &thetas, precision, &opts.budget)?);
            Ok(true)
        }
        Command::Limit { graph } => {
            report(&csma::throughput_limit_with(&load_graph(&graph)?, &opts.budget)?);
            Ok(true)
        }
        Command::Starvation { graph } => {
            #[derive(Serialize)]
            struct Starving {
                starving: Vec<usize>,
            }
            report(&Starving { starving: csma::starvation_report_with(&load_graph(&graph)?, &opts)? });
            Ok(true)
        }
        Command::Unitdisk { graph, embedding, layout, out } => {
            let g = load_graph(&graph)?;
            let emb = OrthogonalEmbedding::parse(&read(&embedding)?)?;
            let (sub, disks, cert) = to_unit_disk(&g, &emb)?;
            write(&layout, &serde_json::to_string_pretty(&disks).expect("layout serializes"))?;
            emit(&sub, &cert, &out)
        }
        Command::VerifyDisks { graph, layout } => {
            #[derive(Serialize)]
            struct Verified {
                realized: bool,
            }
            let g = load_graph(&graph)?;
            let disks: DiskLayout = load_json(&layout)?;
            let realized = verify_disks(&g, &disks);
            report(&Verified { realized });
            Ok(realized)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
