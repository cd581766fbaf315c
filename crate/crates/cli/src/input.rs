//! Graph ingestion: graph6 strings, edge-list files, generator specs, stdin.

use std::io::Read;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::Args;
use qwalk_core::{Family, Graph};

/// Exactly one source for a single graph. With none given the graph is read
/// from stdin.
#[derive(Args, Debug, Default)]
pub struct GraphSource {
    /// Graph in graph6 format.
    #[arg(short = 'g', long = "graph6", value_name = "G6", group = "source")]
    pub graph6: Option<String>,
    /// Edge-list file: first line `n`, then one `u v` pair per line.
    #[arg(short = 'e', long = "edge-list", value_name = "FILE", group = "source")]
    pub edge_list: Option<PathBuf>,
    /// Generator such as `complete:4`, `cycle:6`, `multipartite:2,3`.
    #[arg(long = "gen", value_name = "SPEC", group = "source")]
    pub generator: Option<String>,
}

impl GraphSource {
    pub fn load(&self) -> Result<Graph> {
        if let Some(s) = &self.graph6 {
            return Ok(Graph::from_graph6(s)?);
        }
        if let Some(path) = &self.edge_list {
            return read_edge_list(path);
        }
        if let Some(spec) = &self.generator {
            return Ok(spec.parse::<Family>()?.build()?);
        }
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .context("reading graph from stdin")?;
        parse_text(&text)
    }
}

fn read_edge_list(path: &PathBuf) -> Result<Graph> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(Graph::from_edge_list(&text)?)
}

/// Stdin holds either a graph6 line or an edge list. graph6 never starts with
/// a digit, so a leading digit selects the edge-list reader.
fn parse_text(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        None => bail!("no graph given (use -g, -e, --gen or pipe one on stdin)"),
        Some(line) if line.starts_with(|c: char| c.is_ascii_digit()) => {
            Ok(Graph::from_edge_list(text)?)
        }
        Some(line) => Ok(Graph::from_graph6(line)?),
    }
}

/// Positional graph argument: `g6:<str>`, `file:<path>`, `gen:<spec>`, or a
/// bare graph6 string.
pub fn parse_spec(spec: &str) -> Result<Graph> {
    let graph = if let Some(s) = spec.strip_prefix("g6:") {
        Graph::from_graph6(s)?
    } else if let Some(path) = spec.strip_prefix("file:") {
        read_edge_list(&PathBuf::from(path))?
    } else if let Some(s) = spec.strip_prefix("gen:") {
        s.parse::<Family>()?.build()?
    } else {
        Graph::from_graph6(spec)?
    };
    Ok(graph)
}
