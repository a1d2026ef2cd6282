use std::fs;
use std::io::{BufReader, Read};
use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use zagreb::families::FamilyRef;
use zagreb::io::{parse_edge_list, Graph6Reader};
use zagreb::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// graph6 if the extension is .g6 or the first line is not "n m"
    Auto,
    EdgeList,
    Graph6,
}

#[derive(Debug, Args)]
pub struct GraphInput {
    /// Graph file (`-` for stdin). graph6 files may hold one graph per line.
    #[arg(conflicts_with = "family", required_unless_present = "family")]
    pub path: Option<String>,
    /// Named graph: star:N, cycle:N, path:N, complete:N, cab:A,B or s6k3
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    pub input_format: InputFormat,
}

/// A graph plus the identifier echoed in output records.
pub struct Labeled {
    pub id: String,
    pub graph: Graph,
}

fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .is_some_and(|first| {
            let toks: Vec<&str> = first.split_whitespace().collect();
            toks.len() == 2 && toks.iter().all(|t| t.parse::<usize>().is_ok())
        })
}

impl GraphInput {
    pub fn load(&self) -> Result<Vec<Labeled>> {
        if let Some(spec) = &self.family {
            let family: FamilyRef = spec.parse()?;
            return Ok(vec![Labeled { id: family.to_string(), graph: family.build()? }]);
        }
        let path = self.path.as_deref().expect("clap enforces path or family");
        let text = if path == "-" {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).context("reading stdin")?;
            buf
        } else {
            fs::read_to_string(path).with_context(|| format!("reading {path}"))?
        };
        let graph6 = match self.input_format {
            InputFormat::Graph6 => true,
            InputFormat::EdgeList => false,
            InputFormat::Auto => {
                Path::new(path).extension().is_some_and(|e| e == "g6") || !looks_like_edge_list(&text)
            }
        };
        if graph6 {
            let mut out = Vec::new();
            for rec in Graph6Reader::new(BufReader::new(text.as_bytes())) {
                let rec = rec.with_context(|| format!("parsing {path}"))?;
                out.push(Labeled { id: format!("{path}:{}", rec.line_no), graph: rec.graph });
            }
            if out.is_empty() {
                bail!("{path} holds no graphs");
            }
            Ok(out)
        } else {
            let graph = parse_edge_list(&text).with_context(|| format!("parsing {path}"))?;
            Ok(vec![Labeled { id: path.to_string(), graph }])
        }
    }
}
