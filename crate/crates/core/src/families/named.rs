//! Named graphs with fixed vertex labelings.
//!
//! Labelings:
//! - `Pn`: path 0-1-...-(n-1).
//! - `Cn`: cycle, i ~ i+1 mod n.
//! - `Kn`: complete graph. `In`: n isolated vertices.
//! - `Ka,b,...`: complete multipartite, parts are consecutive index ranges.
//! - `K*3,3`: ends 0 and 5 have degree 2; the middle is the 4-cycle
//!   1-4-2-3-1 with chords 1-3 and 2-4 drawn crossed, 0 ~ {1,2}, 5 ~ {3,4}.
//!   Joining 0 and 5 gives K3,3 with sides {0,3,4} and {1,2,5}.
//! - `petersen`: outer cycle 0..4, inner pentagram i+5 ~ (i+2 mod 5)+5,
//!   spokes i ~ i+5.
//! - `prism`/`prismN`: cycles 0..N-1 and N..2N-1, rungs i ~ i+N (N=3 default).

use std::fmt;
use std::str::FromStr;

use crate::graph::{Graph, GraphError, MAX_ORDER};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    CompleteMultipartite(Vec<usize>),
    KStar33,
    Petersen,
    Prism(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum NameError {
    #[error("unknown graph name `{0}`")]
    Unknown(String),
    #[error("bad parameters for `{name}`: {reason}")]
    BadParameters { name: String, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn bad(name: &str, reason: impl Into<String>) -> NameError {
    NameError::BadParameters {
        name: name.to_string(),
        reason: reason.into(),
    }
}

fn parse_count(name: &str, digits: &str) -> Result<usize, NameError> {
    digits
        .parse::<usize>()
        .map_err(|_| bad(name, format!("`{digits}` is not a vertex count")))
}

impl FromStr for NamedGraph {
    type Err = NameError;

    fn from_str(s: &str) -> Result<Self, NameError> {
        let name = s.trim();
        match name.to_ascii_lowercase().as_str() {
            "petersen" => return Ok(NamedGraph::Petersen),
            "prism" => return Ok(NamedGraph::Prism(3)),
            "k*3,3" | "kstar3,3" | "k*33" => return Ok(NamedGraph::KStar33),
            _ => {}
        }
        if let Some(rest) = name.strip_prefix("prism") {
            return Ok(NamedGraph::Prism(parse_count(name, rest)?));
        }
        let mut chars = name.chars();
        let head = chars.next().ok_or_else(|| NameError::Unknown(String::new()))?;
        let rest = chars.as_str();
        if rest.is_empty() || !rest.starts_with(|c: char| c.is_ascii_digit()) {
            return Err(NameError::Unknown(name.to_string()));
        }
        match head {
            'P' => Ok(NamedGraph::Path(parse_count(name, rest)?)),
            'C' => Ok(NamedGraph::Cycle(parse_count(name, rest)?)),
            'I' => Ok(NamedGraph::Empty(parse_count(name, rest)?)),
            'K' if rest.contains(',') => {
                let parts = rest
                    .split(',')
                    .map(|p| parse_count(name, p))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(NamedGraph::CompleteMultipartite(parts))
            }
            'K' => Ok(NamedGraph::Complete(parse_count(name, rest)?)),
            _ => Err(NameError::Unknown(name.to_string())),
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::Path(n) => write!(f, "P{n}"),
            NamedGraph::Cycle(n) => write!(f, "C{n}"),
            NamedGraph::Complete(n) => write!(f, "K{n}"),
            NamedGraph::Empty(n) => write!(f, "I{n}"),
            NamedGraph::CompleteMultipartite(parts) => {
                let p: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "K{}", p.join(","))
            }
            NamedGraph::KStar33 => f.write_str("K*3,3"),
            NamedGraph::Petersen => f.write_str("petersen"),
            NamedGraph::Prism(3) => f.write_str("prism"),
            NamedGraph::Prism(n) => write!(f, "prism{n}"),
        }
    }
}

/// Builds a named graph.
pub fn build_named(name: &NamedGraph) -> Result<Graph, NameError> {
    let label = name.to_string();
    let check = |n: usize| -> Result<(), NameError> {
        if n > MAX_ORDER {
            return Err(NameError::Graph(GraphError::TooLarge(n)));
        }
        Ok(())
    };
    let g = match name {
        NamedGraph::Path(n) => {
            check(*n)?;
            let edges: Vec<_> = (1..*n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(*n, &edges)?
        }
        NamedGraph::Cycle(n) => {
            if *n < 3 {
                return Err(bad(&label, "a cycle needs at least 3 vertices"));
            }
            check(*n)?;
            let edges: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(*n, &edges)?
        }
        NamedGraph::Complete(n) => {
            check(*n)?;
            Graph::empty(*n)?.complement()
        }
        NamedGraph::Empty(n) => {
            check(*n)?;
            Graph::empty(*n)?
        }
        NamedGraph::CompleteMultipartite(parts) => {
            if parts.is_empty() || parts.contains(&0) {
                return Err(bad(&label, "parts must be positive"));
            }
            let n: usize = parts.iter().sum();
            check(n)?;
            let mut part_of = Vec::with_capacity(n);
            for (p, &size) in parts.iter().enumerate() {
                part_of.extend(std::iter::repeat_n(p, size));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if part_of[u] != part_of[v] {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges)?
        }
        NamedGraph::KStar33 => Graph::from_edges(
            6,
            &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)],
        )?,
        NamedGraph::Petersen => {
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((i + 5, (i + 2) % 5 + 5));
                edges.push((i, i + 5));
            }
            Graph::from_edges(10, &edges)?
        }
        NamedGraph::Prism(k) => {
            if *k < 3 {
                return Err(bad(&label, "a prism needs cycles of length at least 3"));
            }
            check(2 * k)?;
            let mut edges = Vec::new();
            for i in 0..*k {
                edges.push((i, (i + 1) % k));
                edges.push((k + i, k + (i + 1) % k));
                edges.push((i, k + i));
            }
            Graph::from_edges(2 * k, &edges)?
        }
    };
    Ok(g)
}

/// Parses and builds in one step.
pub fn named(name: &str) -> Result<Graph, NameError> {
    build_named(&name.parse()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_form;

    fn sorted_degrees(g: &Graph) -> Vec<usize> {
        let mut d = g.degree_sequence();
        d.sort_unstable();
        d
    }

    #[test]
    fn kstar33_shape() {
        let g = named("K*3,3").unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(sorted_degrees(&g), vec![2, 2, 3, 3, 3, 3]);
        let closed = g.with_edge(0, 5).unwrap();
        let k33 = named("K3,3").unwrap();
        assert_eq!(canonical_form(&closed).unwrap(), canonical_form(&k33).unwrap());
    }

    #[test]
    fn k23_shape() {
        let g = named("K2,3").unwrap();
        assert_eq!(sorted_degrees(&g), vec![2, 2, 2, 3, 3]);
    }

    #[test]
    fn petersen_is_cubic_girth_five() {
        let g = named("petersen").unwrap();
        assert_eq!(g.regularity(), Some(3));
        assert_eq!(g.edge_count(), 15);
        assert_eq!(crate::graph::girth(&g).finite(), Some(5));
    }

    #[test]
    fn names_round_trip() {
        for s in ["P4", "C7", "K5", "I3", "K2,3", "K1,2,3", "K*3,3", "petersen", "prism", "prism5"] {
            let n: NamedGraph = s.parse().unwrap();
            assert_eq!(n.to_string(), s);
        }
    }

    #[test]
    fn rejects_bad_names() {
        assert!(matches!("Q5".parse::<NamedGraph>(), Err(NameError::Unknown(_))));
        assert!(named("C2").is_err());
        assert!(named("K0,3").is_err());
        assert!(named("K65").is_err());
        assert!("Px".parse::<NamedGraph>().is_err());
    }
}
