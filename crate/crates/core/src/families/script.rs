//! Build scripts for the recursively defined families F3* and G*_r.
//!
//! A script starts from a base graph and applies unions, edge additions and
//! vertex additions. Degree limits are checked against the graph as it
//! stands when each step is applied.
//!
//! Text format, one step per line (`#` starts a comment):
//!
//! ```text
//! script half        # optional named section, usable by later `union`s
//! base K2,3
//! script main        # the last section is the script that runs
//! base K2,3
//! union half         # a named section or a named graph
//! edge 2 7
//! vertex 3 8 9
//! ```

use std::fmt;

use super::named::{build_named, NameError, NamedGraph};
use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Base(NamedGraph),
    /// Disjoint union with another script's graph; its vertices are
    /// relabeled after the current ones.
    Union(BuildScript),
    AddEdge(usize, usize),
    AddVertex(Vec<usize>),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BuildScript {
    pub steps: Vec<Step>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Cubic family: bases K2,3 and K*3,3, new vertices of degree 3.
    F3Star,
    /// r-regular family: bases K_{r-k,k+2} for 0 <= k <= (r-2)/2.
    GStar(usize),
}

impl Family {
    pub fn r(self) -> usize {
        match self {
            Family::F3Star => 3,
            Family::GStar(r) => r,
        }
    }

    pub fn bases(self) -> Vec<NamedGraph> {
        match self {
            Family::F3Star => vec![NamedGraph::CompleteMultipartite(vec![2, 3]), NamedGraph::KStar33],
            Family::GStar(r) => (0..=r.saturating_sub(2) / 2)
                .map(|k| NamedGraph::CompleteMultipartite(vec![r - k, k + 2]))
                .collect(),
        }
    }

    fn allows_base(self, name: &NamedGraph) -> Result<bool, NameError> {
        let g = build_named(name)?;
        let key = crate::graph::canonical_form(&g)?;
        for b in self.bases() {
            if crate::graph::canonical_form(&build_named(&b)?)? == key {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::F3Star => f.write_str("F3STAR"),
            Family::GStar(r) => write!(f, "GSTAR({r})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ScriptError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("script is empty")]
    Empty,
    #[error("step {index}: {reason}")]
    Step {
        index: usize,
        reason: String,
        /// `(vertex, degree)` for the vertices involved, where known.
        degrees: Vec<(usize, usize)>,
    },
    #[error(transparent)]
    Name(#[from] NameError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Graph produced by a script, and whether it is r-regular (so it lies in
/// F3 or G_r rather than only in the starred family).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScriptOutput {
    pub graph: Graph,
    pub regular: bool,
}

fn step_err(index: usize, reason: impl Into<String>, g: &Graph, vertices: &[usize]) -> ScriptError {
    ScriptError::Step {
        index,
        reason: reason.into(),
        degrees: vertices
            .iter()
            .filter(|&&v| v < g.n())
            .map(|&v| (v, g.degree(v)))
            .collect(),
    }
}

/// Runs `script`, enforcing the degree rules of `family`. Step indices in
/// errors are 1-based within the script where the violation happened.
pub fn run_script(script: &BuildScript, family: Family) -> Result<ScriptOutput, ScriptError> {
    let graph = run_inner(script, family)?;
    let regular = graph.regularity() == Some(family.r());
    Ok(ScriptOutput { graph, regular })
}

fn run_inner(script: &BuildScript, family: Family) -> Result<Graph, ScriptError> {
    let limit = family.r() - 1;
    let mut g: Option<Graph> = None;
    for (i, step) in script.steps.iter().enumerate() {
        let index = i + 1;
        let current = match (step, g.take()) {
            (Step::Base(name), None) => {
                if !family.allows_base(name)? {
                    return Err(ScriptError::Step {
                        index,
                        reason: format!("{name} is not a base graph of {family}"),
                        degrees: Vec::new(),
                    });
                }
                build_named(name)?
            }
            (Step::Base(_), Some(_)) => {
                return Err(ScriptError::Step {
                    index,
                    reason: "base must be the first step; use union to add components".into(),
                    degrees: Vec::new(),
                })
            }
            (_, None) => {
                return Err(ScriptError::Step {
                    index,
                    reason: "script must start with a base".into(),
                    degrees: Vec::new(),
                })
            }
            (Step::Union(other), Some(cur)) => {
                let h = run_inner(other, family).map_err(|e| match e {
                    ScriptError::Step { index: inner, reason, degrees } => ScriptError::Step {
                        index,
                        reason: format!("in united script, step {inner}: {reason}"),
                        degrees,
                    },
                    other => other,
                })?;
                cur.disjoint_union(&h)?
            }
            (Step::AddEdge(u, v), Some(cur)) => {
                let (u, v) = (*u, *v);
                if u >= cur.n() || v >= cur.n() || u == v {
                    return Err(step_err(index, format!("bad edge {u} {v}"), &cur, &[u, v]));
                }
                if cur.has_edge(u, v) {
                    return Err(step_err(index, format!("edge {u} {v} already present"), &cur, &[u, v]));
                }
                if cur.degree(u) > limit || cur.degree(v) > limit {
                    return Err(step_err(
                        index,
                        format!("edge endpoints must have degree at most {limit}"),
                        &cur,
                        &[u, v],
                    ));
                }
                cur.with_edge(u, v)?
            }
            (Step::AddVertex(nbrs), Some(cur)) => {
                let set: VertexSet = nbrs.iter().copied().filter(|&v| v < cur.n()).collect();
                if set.len() != nbrs.len() || nbrs.len() != family.r() {
                    return Err(step_err(
                        index,
                        format!("new vertex needs {} distinct existing neighbors", family.r()),
                        &cur,
                        nbrs,
                    ));
                }
                if nbrs.iter().any(|&v| cur.degree(v) > limit) {
                    return Err(step_err(
                        index,
                        format!("new vertex neighbors must have degree at most {limit}"),
                        &cur,
                        nbrs,
                    ));
                }
                cur.with_vertex(set)?
            }
        };
        g = Some(current);
    }
    g.ok_or(ScriptError::Empty)
}

fn parse_err(line: usize, reason: impl Into<String>) -> ScriptError {
    ScriptError::Parse {
        line,
        reason: reason.into(),
    }
}

/// Parses the text format; the last section is returned with earlier named
/// sections inlined where referenced.
pub fn parse_script(text: &str) -> Result<BuildScript, ScriptError> {
    let mut sections: Vec<(String, BuildScript)> = Vec::new();
    let mut current: Option<(String, BuildScript)> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (word, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        if word == "script" {
            if rest.is_empty() {
                return Err(parse_err(line_no, "script needs a name"));
            }
            if let Some(done) = current.take() {
                sections.push(done);
            }
            current = Some((rest.to_string(), BuildScript::default()));
            continue;
        }
        let target = &mut current.get_or_insert_with(|| ("main".to_string(), BuildScript::default())).1;
        let numbers = || -> Result<Vec<usize>, ScriptError> {
            rest.split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| parse_err(line_no, format!("`{t}` is not a vertex"))))
                .collect()
        };
        let step = match word {
            "base" => Step::Base(rest.parse().map_err(|e: NameError| parse_err(line_no, e.to_string()))?),
            "union" => match sections.iter().find(|(name, _)| name == rest) {
                Some((_, s)) => Step::Union(s.clone()),
                None => {
                    let name: NamedGraph = rest
                        .parse()
                        .map_err(|_| parse_err(line_no, format!("unknown script or graph `{rest}`")))?;
                    Step::Union(BuildScript {
                        steps: vec![Step::Base(name)],
                    })
                }
            },
            "edge" => match numbers()?.as_slice() {
                [u, v] => Step::AddEdge(*u, *v),
                _ => return Err(parse_err(line_no, "edge takes two vertices")),
            },
            "vertex" => {
                let nbrs = numbers()?;
                if nbrs.is_empty() {
                    return Err(parse_err(line_no, "vertex takes a neighbor list"));
                }
                Step::AddVertex(nbrs)
            }
            other => return Err(parse_err(line_no, format!("unknown step `{other}`"))),
        };
        target.steps.push(step);
    }
    match current {
        Some((_, s)) if !s.steps.is_empty() => Ok(s),
        _ => Err(ScriptError::Empty),
    }
}

/// Serializes a script; nested unions become named sections `s1`, `s2`, ...
pub fn write_script(script: &BuildScript) -> String {
    let mut sections = Vec::new();
    let mut counter = 0;
    let main = write_section(script, &mut sections, &mut counter);
    let mut out = String::new();
    for (name, body) in sections {
        out.push_str(&format!("script {name}\n{body}"));
    }
    out.push_str(&format!("script main\n{main}"));
    out
}

fn write_section(script: &BuildScript, sections: &mut Vec<(String, String)>, counter: &mut usize) -> String {
    let mut body = String::new();
    for step in &script.steps {
        match step {
            Step::Base(name) => body.push_str(&format!("base {name}\n")),
            Step::Union(inner) => {
                if let [Step::Base(name)] = inner.steps.as_slice() {
                    body.push_str(&format!("union {name}\n"));
                } else {
                    let inner_body = write_section(inner, sections, counter);
                    *counter += 1;
                    let name = format!("s{counter}");
                    sections.push((name.clone(), inner_body));
                    body.push_str(&format!("union {name}\n"));
                }
            }
            Step::AddEdge(u, v) => body.push_str(&format!("edge {u} {v}\n")),
            Step::AddVertex(nbrs) => {
                let list: Vec<String> = nbrs.iter().map(ToString::to_string).collect();
                body.push_str(&format!("vertex {}\n", list.join(" ")));
            }
        }
    }
    body
}
