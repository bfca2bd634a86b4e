use std::fs;

use clap::Args;
use rankbrittle::graph::graph6;
use rankbrittle::graph::spec::parse_graph_spec;
use rankbrittle::{Error, Graph};
use serde_json::{json, Value};

#[derive(Args, Debug)]
pub struct GraphArgs {
    /// graph6 literal, or `@path` to a file holding graph6 or an edge list
    graph: Option<String>,
    /// family or product spec instead of a literal, e.g. `path:4`
    #[arg(long, conflicts_with = "graph")]
    family: Option<String>,
}

impl GraphArgs {
    /// The graph plus an echo of how it was given.
    pub fn load(&self) -> Result<(Graph, Value), Error> {
        let (g, mut echo) = match (&self.graph, &self.family) {
            (_, Some(spec)) => (parse_graph_spec(spec)?, json!({ "family": spec })),
            (Some(arg), None) => match arg.strip_prefix('@') {
                Some(path) => {
                    let text = fs::read_to_string(path)
                        .map_err(|e| Error::Input(format!("cannot read {path}: {e}")))?;
                    (read_graph_file(&text)?, json!({ "file": path }))
                }
                None => (graph6::decode(arg)?, json!({})),
            },
            (None, None) => {
                return Err(Error::Input(
                    "give a graph6 string, @file or --family".into(),
                ))
            }
        };
        echo["graph6"] = json!(graph6::encode(&g)?);
        echo["n"] = json!(g.n());
        Ok((g, echo))
    }
}

/// A file holds one graph6 line, or an edge list.
fn read_graph_file(text: &str) -> Result<Graph, Error> {
    let trimmed = text.trim();
    if !trimmed.contains(char::is_whitespace) {
        return graph6::decode(trimmed);
    }
    Graph::parse_edge_list(text)
}
