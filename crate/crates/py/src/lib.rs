//! Python bindings: the graph type, exact solvers, twin bounds, atoms,
//! family constructions and verification campaigns.

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use grundy_core::atoms::{enumerate_minimal_atoms, has_induced_minimal_atom, AtomLimits};
use grundy_core::families::{build_g_rki, named, parse_script, run_script, Family};
use grundy_core::graph::{self, enumerate_regular_graphs, parse_graph6, write_graph6, SparseGraph, VertexSet};
use grundy_core::harness::{run_campaign, write_jsonl, CampaignConfig, Claim, Source};
use grundy_core::solver::{self, SolveOptions, SolverError, DEFAULT_BUDGET};
use grundy_core::twins;

create_exception!(grundylab, BudgetExceeded, PyRuntimeError);

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn solver_err(e: SolverError) -> PyErr {
    match e {
        SolverError::BudgetExceeded { .. } => BudgetExceeded::new_err(e.to_string()),
        other => value_err(other),
    }
}

#[pyclass(name = "Graph", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq, Eq)]
struct PyGraph(graph::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        graph::Graph::from_edges(n, &edges).map(PyGraph).map_err(value_err)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        parse_graph6(text.trim()).map(PyGraph).map_err(value_err)
    }

    /// Builds a graph by name: `P5`, `C7`, `K4`, `K3,3`, `K*3,3`, `petersen`, ...
    #[staticmethod]
    fn named(name: &str) -> PyResult<Self> {
        named(name).map(PyGraph).map_err(value_err)
    }

    fn graph6(&self) -> String {
        write_graph6(&self.0)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.0.n() {
            return Err(value_err(format!("vertex {v} out of range")));
        }
        Ok(self.0.neighbors(v).to_vec())
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        Ok(self.neighbors(v)?.len())
    }

    fn regularity(&self) -> Option<usize> {
        self.0.regularity()
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn induced_subgraph(&self, vertices: Vec<usize>) -> PyResult<Self> {
        if let Some(&v) = vertices.iter().find(|&&v| v >= self.0.n()) {
            return Err(value_err(format!("vertex {v} out of range")));
        }
        Ok(PyGraph(self.0.induced_subgraph(vertices.into_iter().collect::<VertexSet>())))
    }

    fn canonical_key(&self) -> PyResult<Vec<u8>> {
        graph::canonical_form(&self.0).map(|k| k.as_bytes().to_vec()).map_err(value_err)
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph.from_graph6({:?})", write_graph6(&self.0))
    }
}

/// Grundy number and an ordering on which first-fit attains it.
#[pyfunction]
#[pyo3(signature = (g, budget = DEFAULT_BUDGET))]
fn grundy_number(g: &PyGraph, budget: u64) -> PyResult<(usize, Vec<usize>)> {
    let sol = solver::grundy_exact_with(&g.0, &SolveOptions { budget }).map_err(solver_err)?;
    Ok((sol.value, sol.ordering.as_slice().to_vec()))
}

/// Partial Grundy number and a coloring (colors from 1) that attains it.
#[pyfunction]
#[pyo3(signature = (g, budget = DEFAULT_BUDGET))]
fn partial_grundy_number(g: &PyGraph, budget: u64) -> PyResult<(usize, Vec<usize>)> {
    let sol = solver::partial_grundy_exact_with(&g.0, &SolveOptions { budget }).map_err(solver_err)?;
    Ok((sol.value, sol.coloring.colors().to_vec()))
}

/// Reference Grundy number by trying every ordering (small graphs only).
#[pyfunction]
fn grundy_oracle(g: &PyGraph) -> PyResult<usize> {
    solver::grundy_oracle(&g.0).map_err(solver_err)
}

/// First-fit coloring along `ordering`.
#[pyfunction]
fn greedy_color(g: &PyGraph, ordering: Vec<usize>) -> PyResult<Vec<usize>> {
    let order = solver::Ordering::new(ordering).map_err(solver_err)?;
    let coloring = solver::greedy_color(&g.0, &order).map_err(solver_err)?;
    Ok(coloring.colors().to_vec())
}

#[pyfunction]
#[pyo3(signature = (g, colors, subset = false))]
fn is_grundy_coloring(g: &PyGraph, colors: Vec<usize>, subset: bool) -> PyResult<bool> {
    let coloring = solver::Coloring::new(colors).map_err(solver_err)?;
    Ok(solver::validate_grundy(&g.0, &coloring, subset))
}

#[pyfunction]
fn twin_levels(g: &PyGraph) -> Vec<usize> {
    twins::twin_levels(&g.0)
}

#[pyfunction]
fn twin_grundy_upper_bound(g: &PyGraph) -> usize {
    twins::twin_grundy_upper_bound(&g.0)
}

/// Grundy number of a connected cubic graph in linear time.
#[pyfunction]
fn cubic_grundy(g: &PyGraph) -> PyResult<u8> {
    twins::cubic_grundy_linear(&SparseGraph::from(&g.0)).map_err(value_err)
}

#[pyfunction]
fn has_induced_minimal_atom_py(g: &PyGraph, t: usize) -> PyResult<bool> {
    has_induced_minimal_atom(&g.0, t).map_err(value_err)
}

/// Minimal t-atoms under optional degree/order/forest limits.
#[pyfunction]
#[pyo3(signature = (t, max_degree = None, max_order = None, forest = false))]
fn minimal_atoms(t: usize, max_degree: Option<usize>, max_order: Option<usize>, forest: bool) -> PyResult<Vec<PyGraph>> {
    let limits = AtomLimits {
        max_degree,
        max_order,
        forest,
    };
    let catalog = enumerate_minimal_atoms(t, limits).map_err(value_err)?;
    Ok(catalog.atoms().cloned().map(PyGraph).collect())
}

#[pyfunction]
fn g_rki(r: usize, k: usize, parts: Vec<usize>, i: usize) -> PyResult<PyGraph> {
    build_g_rki(r, k, &parts, i).map(PyGraph).map_err(value_err)
}

/// Runs a build script; `family` is `"f3"` or `"gstar"` (with `r`).
/// Returns the graph and whether it is regular.
#[pyfunction]
#[pyo3(signature = (text, family = "f3", r = None))]
fn build_script(text: &str, family: &str, r: Option<usize>) -> PyResult<(PyGraph, bool)> {
    let family = match (family, r) {
        ("f3", None | Some(3)) => Family::F3Star,
        ("gstar", Some(r)) => Family::GStar(r),
        _ => return Err(value_err("family must be \"f3\" or \"gstar\" with r")),
    };
    let script = parse_script(text).map_err(value_err)?;
    let out = run_script(&script, family).map_err(value_err)?;
    Ok((PyGraph(out.graph), out.regular))
}

#[pyfunction]
#[pyo3(signature = (r, n, connected = true))]
fn regular_graphs(r: usize, n: usize, connected: bool) -> PyResult<Vec<PyGraph>> {
    Ok(enumerate_regular_graphs(r, n, connected)
        .map_err(value_err)?
        .into_iter()
        .map(PyGraph)
        .collect())
}

/// Runs a verification campaign and returns the JSON-lines report.
#[pyfunction]
#[pyo3(signature = (claim, max_n, r = None, graphs = None, budget = DEFAULT_BUDGET, threads = None))]
fn verify(
    claim: &str,
    max_n: usize,
    r: Option<usize>,
    graphs: Option<Vec<PyGraph>>,
    budget: u64,
    threads: Option<usize>,
) -> PyResult<String> {
    let claim: Claim = claim.parse().map_err(value_err)?;
    let source = match graphs {
        Some(gs) => Source::Graphs(gs.into_iter().map(|g| g.0).collect()),
        None => Source::Enumerate,
    };
    let cfg = CampaignConfig {
        budget,
        threads,
        ..CampaignConfig::new(claim, r, max_n)
    };
    let report = run_campaign(&cfg, &source).map_err(value_err)?;
    let mut buf = Vec::new();
    write_jsonl(&report, &mut buf).map_err(value_err)?;
    String::from_utf8(buf).map_err(value_err)
}

#[pymodule]
fn grundylab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add("BudgetExceeded", m.py().get_type::<BudgetExceeded>())?;
    m.add_function(wrap_pyfunction!(grundy_number, m)?)?;
    m.add_function(wrap_pyfunction!(partial_grundy_number, m)?)?;
    m.add_function(wrap_pyfunction!(grundy_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(greedy_color, m)?)?;
    m.add_function(wrap_pyfunction!(is_grundy_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(twin_levels, m)?)?;
    m.add_function(wrap_pyfunction!(twin_grundy_upper_bound, m)?)?;
    m.add_function(wrap_pyfunction!(cubic_grundy, m)?)?;
    m.add("has_induced_minimal_atom", wrap_pyfunction!(has_induced_minimal_atom_py, m)?)?;
    m.add_function(wrap_pyfunction!(minimal_atoms, m)?)?;
    m.add_function(wrap_pyfunction!(g_rki, m)?)?;
    m.add_function(wrap_pyfunction!(build_script, m)?)?;
    m.add_function(wrap_pyfunction!(regular_graphs, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
