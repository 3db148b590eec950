//! Catalog files: a header line `t=<level> minimal=<0|1>` followed by one
//! graph6 string per line.

use super::{AtomCatalog, AtomError, AtomLimits};
use crate::graph::{parse_graph6, write_graph6};

pub fn write_catalog(catalog: &AtomCatalog) -> String {
    let mut out = format!("t={} minimal={}\n", catalog.t, u8::from(catalog.minimal));
    for g in catalog.atoms() {
        out.push_str(&write_graph6(g));
        out.push('\n');
    }
    out
}

fn parse_err(line: usize, reason: impl Into<String>) -> AtomError {
    AtomError::Parse {
        line,
        reason: reason.into(),
    }
}

pub fn read_catalog(text: &str) -> Result<AtomCatalog, AtomError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let mut t = None;
    let mut minimal = None;
    for field in header.split_whitespace() {
        match field.split_once('=') {
            Some(("t", v)) => t = v.parse::<usize>().ok(),
            Some(("minimal", "0")) => minimal = Some(false),
            Some(("minimal", "1")) => minimal = Some(true),
            _ => return Err(parse_err(1, format!("unexpected header field `{field}`"))),
        }
    }
    let (Some(t), Some(minimal)) = (t, minimal) else {
        return Err(parse_err(1, "header must be `t=<level> minimal=<0|1>`"));
    };
    let mut graphs = Vec::new();
    for (i, line) in lines {
        let g = parse_graph6(line.trim()).map_err(|e| parse_err(i + 1, e.to_string()))?;
        graphs.push(g);
    }
    AtomCatalog::from_graphs(t, minimal, AtomLimits::default(), graphs)
}
