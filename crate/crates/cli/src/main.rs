//! `rankbrittle`: width parameters, constructions and claim verification
//! for small graphs. One JSON document per invocation on standard output.

mod graph_input;
mod output;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rankbrittle::graph::graph6;
use rankbrittle::graph::spec::parse_graph_spec;
use rankbrittle::rank::{
    beta_rho_k, cut_rank, cut_rank_basis, decomposition::node_widths, lrw_exact, rank_depth_exact,
    rbrit_exact,
};
use rankbrittle::verify::{verify, VerifyParams};
use rankbrittle::{Error, SolverCaps, VertexSet};
use serde_json::{json, Value};

use crate::graph_input::GraphArgs;
use crate::output::{print_error, print_report, Format};

#[derive(Parser)]
#[command(
    name = "rankbrittle",
    version,
    about = "Rank-width style parameters and vertex-minor certificates for small graphs"
)]
struct Cli {
    /// worker threads for the parallel solvers (results do not depend on it)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Param {
    Cutrank,
    Rbrit,
    Rankdepth,
    Lrw,
    Betark,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a parameter together with its witness.
    Param {
        #[arg(value_enum)]
        which: Param,
        #[command(flatten)]
        graph: GraphArgs,
        /// decomposition radius for `rbrit`
        #[arg(long)]
        depth: Option<usize>,
        /// part size bound for `betark`
        #[arg(long)]
        k: Option<usize>,
        /// comma-separated vertex set for `cutrank`
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<usize>>,
    },
    /// Print the graph6 encoding of a family or product spec.
    Construct {
        /// e.g. `path:4`, `prod(half, edgeless:2, edgeless:2)`, `blown(match, complete:2, edgeless:2, 3, 0,1,0,1)`
        spec: String,
    },
    /// Re-check one of the catalogued constructions.
    Verify {
        /// claim id, e.g. `L4.6-1` or `S5-lower`
        id: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = match SolverCaps::from_env() {
        Ok(c) => c,
        Err(e) => return print_error("startup", &e, None, cli.format),
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build_global()
        {
            eprintln!("could not configure {t} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match cli.command {
        Command::Param {
            which,
            graph,
            depth,
            k,
            set,
        } => {
            let command = format!("param {}", format!("{which:?}").to_lowercase());
            match run_param(which, &graph, depth, k, set.as_deref(), &caps) {
                Ok((input, report)) => {
                    let mut doc = json!({ "command": command, "input": input });
                    merge(&mut doc, report);
                    doc["caps"] = json!(caps);
                    print_report(&doc, cli.format);
                    ExitCode::SUCCESS
                }
                Err(e) => print_error(&command, &e, Some(&caps), cli.format),
            }
        }
        Command::Construct { spec } => {
            match parse_graph_spec(&spec).and_then(|g| graph6::encode(&g)) {
                Ok(code) => {
                    let _ = writeln!(std::io::stdout().lock(), "{code}");
                    ExitCode::SUCCESS
                }
                Err(e) => print_error("construct", &e, None, cli.format),
            }
        }
        Command::Verify {
            id,
            n,
            samples,
            seed,
        } => {
            let command = format!("verify {id}");
            let params = VerifyParams { n, samples, seed };
            let start = Instant::now();
            match verify(&id, &params, &caps) {
                Ok(report) => {
                    let pass = report.passed();
                    let mut doc = json!({ "command": command, "pass": pass });
                    merge(
                        &mut doc,
                        serde_json::to_value(&report).expect("report serializes"),
                    );
                    doc["timing"] = json!({ "seconds": start.elapsed().as_secs_f64() });
                    doc["caps"] = json!(caps);
                    print_report(&doc, cli.format);
                    if pass {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => print_error(&command, &e, Some(&caps), cli.format),
            }
        }
    }
}

fn merge(doc: &mut Value, extra: Value) {
    if let (Value::Object(d), Value::Object(e)) = (doc, extra) {
        d.extend(e);
    }
}

fn run_param(
    which: Param,
    graph: &GraphArgs,
    depth: Option<usize>,
    k: Option<usize>,
    set: Option<&[usize]>,
    caps: &SolverCaps,
) -> Result<(Value, Value), Error> {
    let (g, input) = graph.load()?;
    let start = Instant::now();
    let mut out = match which {
        Param::Cutrank => {
            let set = set.ok_or_else(|| Error::Input("cutrank needs --set".into()))?;
            if let Some(&v) = set.iter().find(|&&v| v >= g.n()) {
                return Err(Error::Input(format!("vertex {v} is not in 0..{}", g.n())));
            }
            let s: VertexSet = set.iter().copied().collect();
            let value = cut_rank(&g, s)?;
            let basis = cut_rank_basis(&g, s)?;
            json!({ "value": value, "witness": { "set": s.to_vec(), "independent_rows": basis } })
        }
        Param::Rbrit => {
            let d = depth.ok_or_else(|| Error::Input("rbrit needs --depth".into()))?;
            let (value, dec) = rbrit_exact(&g, d, caps)?;
            let widths = dec.as_ref().map(|dec| node_widths(&g, dec)).transpose()?;
            json!({ "value": value, "witness": { "decomposition": dec, "node_widths": widths } })
        }
        Param::Rankdepth => {
            let (value, dec) = rank_depth_exact(&g, caps)?;
            let widths = dec.as_ref().map(|dec| node_widths(&g, dec)).transpose()?;
            json!({ "value": value, "witness": { "decomposition": dec, "node_widths": widths } })
        }
        Param::Lrw => {
            let (value, layout) = lrw_exact(&g, caps)?;
            json!({ "value": value, "witness": { "order": layout.order } })
        }
        Param::Betark => {
            let k = k.ok_or_else(|| Error::Input("betark needs --k".into()))?;
            let (value, partition) = beta_rho_k(&g, k, caps)?;
            json!({ "value": value, "witness": { "partition": partition } })
        }
    };
    out["timing"] = json!({ "seconds": start.elapsed().as_secs_f64() });
    Ok((input, out))
}
