use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use pdt_core::{builtin_graph, parse_edge_list, parse_graph6, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Auto,
    Graph6,
    Edgelist,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Graph file (graph6 or edge list)
    #[arg(required_unless_present = "builtin", conflicts_with = "builtin")]
    pub path: Option<PathBuf>,

    /// Use a bundled network: tadpole, zim, mutated_zim, fig3, ieee39
    #[arg(long, value_name = "NAME")]
    pub builtin: Option<String>,

    #[arg(long, value_enum, default_value_t = Format::Auto)]
    pub format: Format,
}

impl InputArgs {
    pub fn load(&self) -> Result<Graph> {
        if let Some(name) = &self.builtin {
            return Ok(builtin_graph(name)?);
        }
        let path = self.path.as_ref().expect("clap requires a path or --builtin");
        let bytes = fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
        parse(&bytes, self.format).with_context(|| format!("cannot parse {}", path.display()))
    }
}

pub fn parse(bytes: &[u8], format: Format) -> Result<Graph> {
    let format = match format {
        Format::Auto => detect(bytes),
        f => f,
    };
    match format {
        Format::Graph6 => Ok(parse_graph6(bytes)?),
        _ => {
            let Ok(text) = std::str::from_utf8(bytes) else {
                bail!("edge list is not valid UTF-8");
            };
            Ok(parse_edge_list(text)?)
        }
    }
}

/// graph6 when the header is present or the content is one line without
/// inner whitespace; edge list otherwise.
pub fn detect(bytes: &[u8]) -> Format {
    if bytes.starts_with(b">>graph6<<") {
        return Format::Graph6;
    }
    let mut lines = bytes
        .split(|&b| b == b'\n')
        .map(<[u8]>::trim_ascii)
        .filter(|l| !l.is_empty());
    match (lines.next(), lines.next()) {
        (Some(line), None) if !line.iter().any(u8::is_ascii_whitespace) && line[0] != b'#' => Format::Graph6,
        _ => Format::Edgelist,
    }
}
