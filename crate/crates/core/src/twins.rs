//! Twin-vertex predicates, the Grundy upper bounds they imply, and the
//! linear-time classifier for connected cubic graphs.
//!
//! A vertex is a `(0,ℓ)`-twin (regular graphs only) when it lies in an
//! independent module of size `r+2-ℓ`; a `(1,ℓ)`-twin when its neighborhood
//! splits into at most `ℓ-1` independent modules; a `(2,ℓ)`-twin when its
//! neighborhood is independent and made of `(1,ℓ)`-twins. In each case the
//! vertex's color is at most `ℓ` in every Grundy coloring.

use crate::graph::{maximal_independent_module_partition, Graph, SparseGraph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TwinError {
    #[error("(0,l)-twin vertices are only defined for regular graphs")]
    NotRegular,
    #[error("twin kind must be 0, 1 or 2, got {0}")]
    BadKind(u8),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is not cubic (vertex {vertex} has degree {degree})")]
    NotCubic { vertex: usize, degree: usize },
    #[error("graph is not connected")]
    NotConnected,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwinEvidence {
    /// An independent module containing the vertex.
    Module(VertexSet),
    /// A partition of the neighborhood into independent modules.
    Partition(Vec<VertexSet>),
    /// For each neighbor, a partition of its neighborhood.
    NeighborPartitions(Vec<(usize, Vec<VertexSet>)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinWitness {
    pub kind: u8,
    pub level: usize,
    pub evidence: TwinEvidence,
}

/// Vertices of `s` share one open neighborhood and are pairwise non-adjacent.
fn is_independent_module(g: &Graph, s: VertexSet) -> bool {
    let Some(first) = s.first() else {
        return true;
    };
    g.is_independent(s) && s.iter().all(|u| g.neighbors(u) == g.neighbors(first))
}

fn is_module_partition(g: &Graph, whole: VertexSet, blocks: &[VertexSet]) -> bool {
    let mut seen = VertexSet::EMPTY;
    for &b in blocks {
        if b.is_empty() || !seen.intersection(b).is_empty() || !is_independent_module(g, b) {
            return false;
        }
        seen = seen.union(b);
    }
    seen == whole
}

fn kind1_partition(g: &Graph, v: usize) -> Vec<VertexSet> {
    maximal_independent_module_partition(g, g.neighbors(v))
}

impl TwinWitness {
    /// Re-checks the evidence against the definition for vertex `v`.
    pub fn validate(&self, g: &Graph, v: usize) -> bool {
        if v >= g.n() {
            return false;
        }
        match (&self.kind, &self.evidence) {
            (0, TwinEvidence::Module(m)) => match g.regularity() {
                Some(r) => {
                    m.contains(v) && is_independent_module(g, *m) && m.len() + self.level == r + 2
                }
                None => false,
            },
            (1, TwinEvidence::Partition(blocks)) => {
                is_module_partition(g, g.neighbors(v), blocks) && blocks.len() < self.level
            }
            (2, TwinEvidence::NeighborPartitions(parts)) => {
                let nv = g.neighbors(v);
                g.is_independent(nv)
                    && parts.len() == nv.len()
                    && parts.iter().all(|(u, blocks)| {
                        nv.contains(*u)
                            && is_module_partition(g, g.neighbors(*u), blocks)
                            && blocks.len() < self.level
                    })
                    && parts.iter().map(|(u, _)| *u).collect::<VertexSet>() == nv
            }
            _ => false,
        }
    }
}

/// Tests whether `v` is a `(kind, level)`-twin vertex, returning evidence.
pub fn is_twin_vertex(g: &Graph, v: usize, kind: u8, level: usize) -> Result<Option<TwinWitness>, TwinError> {
    if v >= g.n() {
        return Err(TwinError::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let witness = match kind {
        0 => {
            let r = g.regularity().ok_or(TwinError::NotRegular)?;
            let Some(size) = (r + 2).checked_sub(level).filter(|&s| s >= 1) else {
                return Ok(None);
            };
            let class = module_class(g, v);
            if class.len() < size {
                return Ok(None);
            }
            let mut module = VertexSet::singleton(v);
            for u in class.iter().filter(|&u| u != v).take(size - 1) {
                module.insert(u);
            }
            Some(TwinEvidence::Module(module))
        }
        1 => {
            let blocks = kind1_partition(g, v);
            (blocks.len() < level).then_some(TwinEvidence::Partition(blocks))
        }
        2 => {
            let nv = g.neighbors(v);
            if !g.is_independent(nv) {
                return Ok(None);
            }
            let mut parts = Vec::with_capacity(nv.len());
            for u in nv {
                let blocks = kind1_partition(g, u);
                if blocks.len() >= level {
                    return Ok(None);
                }
                parts.push((u, blocks));
            }
            Some(TwinEvidence::NeighborPartitions(parts))
        }
        k => return Err(TwinError::BadKind(k)),
    };
    Ok(witness.map(|evidence| TwinWitness { kind, level, evidence }))
}

/// The equal-neighborhood class of `v`. Vertices with equal open
/// neighborhoods are never adjacent, so the class is an independent module.
fn module_class(g: &Graph, v: usize) -> VertexSet {
    let nv = g.neighbors(v);
    g.vertices().iter().filter(|&u| g.neighbors(u) == nv).collect()
}

/// Least `ℓ` for which `v` is an `(i,ℓ)`-twin for some admissible kind
/// (kind 0 only when `g` is regular), never below 1.
pub fn twin_level(g: &Graph, v: usize) -> usize {
    twin_levels(g)[v]
}

/// [`twin_level`] for every vertex, sharing the per-vertex kind-1 work.
pub fn twin_levels(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let blocks: Vec<usize> = (0..n).map(|v| kind1_partition(g, v).len()).collect();
    let regular = g.regularity();
    (0..n)
        .map(|v| {
            let mut best = blocks[v] + 1;
            if let Some(r) = regular {
                let class = module_class(g, v).len();
                best = best.min((r + 2).saturating_sub(class));
            }
            let nv = g.neighbors(v);
            if g.is_independent(nv) {
                let l2 = nv.iter().map(|u| blocks[u] + 1).max().unwrap_or(1);
                best = best.min(l2);
            }
            best.max(1)
        })
        .collect()
}

/// Least `ℓ` such that every vertex is an `(i,ℓ)`-twin vertex, capped at
/// `Δ+1`. An upper bound on the Grundy number.
pub fn twin_grundy_upper_bound(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let worst = twin_levels(g).into_iter().max().unwrap_or(1);
    worst.min(g.max_degree() + 1)
}

fn check_cubic(g: &SparseGraph) -> Result<(), TwinError> {
    for v in 0..g.n() {
        if g.degree(v) != 3 {
            return Err(TwinError::NotCubic { vertex: v, degree: g.degree(v) });
        }
    }
    Ok(())
}

fn same_list(a: &[usize], b: &[usize]) -> bool {
    let mut a = [a[0], a[1], a[2]];
    let mut b = [b[0], b[1], b[2]];
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

/// Constant-time kind-1 test for a cubic vertex: two neighbors share their
/// adjacency list.
fn cubic_kind1(g: &SparseGraph, v: usize) -> bool {
    let n = g.neighbors(v);
    let (a, b, c) = (g.neighbors(n[0]), g.neighbors(n[1]), g.neighbors(n[2]));
    same_list(a, b) || same_list(a, c) || same_list(b, c)
}

/// Constant-time per-vertex test: `v` is an `(i,3)`-twin for some i.
fn cubic_is_3_twin(g: &SparseGraph, v: usize) -> bool {
    let n = g.neighbors(v);
    // Kind 0: a vertex other than v adjacent to all three neighbors.
    let common = g
        .neighbors(n[0])
        .iter()
        .any(|&w| w != v && g.neighbors(n[1]).contains(&w) && g.neighbors(n[2]).contains(&w));
    if common || cubic_kind1(g, v) {
        return true;
    }
    let independent = !g.neighbors(n[0]).contains(&n[1])
        && !g.neighbors(n[0]).contains(&n[2])
        && !g.neighbors(n[1]).contains(&n[2]);
    independent && n.iter().all(|&u| cubic_kind1(g, u))
}

fn is_k33(g: &SparseGraph) -> bool {
    if g.n() != 6 {
        return false;
    }
    let side = g.neighbors(0);
    // Every vertex outside N(0) must see exactly N(0).
    (0..6)
        .filter(|v| !side.contains(v))
        .all(|v| same_list(g.neighbors(v), side))
}

/// Grundy number of a connected cubic graph in linear time: 2 for K3,3, 3
/// when every vertex is an `(i,3)`-twin, 4 otherwise.
pub fn cubic_grundy_linear(g: &SparseGraph) -> Result<u8, TwinError> {
    check_cubic(g)?;
    if !g.is_connected() {
        return Err(TwinError::NotConnected);
    }
    if is_k33(g) {
        return Ok(2);
    }
    Ok(if (0..g.n()).all(|v| cubic_is_3_twin(g, v)) { 3 } else { 4 })
}

/// Whether every vertex of a cubic graph (possibly disconnected) is an
/// `(i,3)`-twin vertex, which characterizes the family F3.
pub fn f3_membership(g: &Graph) -> Result<bool, TwinError> {
    let s = SparseGraph::from(g);
    check_cubic(&s)?;
    Ok((0..s.n()).all(|v| cubic_is_3_twin(&s, v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::named;
    use crate::graph::enumerate_graphs;

    /// Builds K2,3 twice and matches the six degree-2 vertices across copies.
    fn double_k23() -> Graph {
        let k = named("K2,3").unwrap();
        let g = k.disjoint_union(&k).unwrap();
        // In K2,3 the degree-2 side is {2,3,4}; second copy is offset by 5.
        g.with_edge(2, 7).unwrap().with_edge(3, 8).unwrap().with_edge(4, 9).unwrap()
    }

    #[test]
    fn kind0_examples() {
        let k33 = named("K3,3").unwrap();
        for v in 0..6 {
            let w = is_twin_vertex(&k33, v, 0, 3).unwrap().unwrap();
            assert!(matches!(w.evidence, TwinEvidence::Module(m) if m.len() == 2));
            assert!(w.validate(&k33, v));
        }
        let p4 = named("P4").unwrap();
        assert_eq!(is_twin_vertex(&p4, 0, 0, 3), Err(TwinError::NotRegular));
    }

    #[test]
    fn kind1_examples() {
        let k4 = named("K4").unwrap();
        for v in 0..4 {
            let w = is_twin_vertex(&k4, v, 1, 4).unwrap().unwrap();
            assert!(matches!(&w.evidence, TwinEvidence::Partition(b) if b.len() == 3));
            assert!(w.validate(&k4, v));
            assert!(is_twin_vertex(&k4, v, 1, 3).unwrap().is_none());
        }
    }

    #[test]
    fn petersen_has_no_level_three_twins() {
        let g = named("petersen").unwrap();
        for v in 0..10 {
            for kind in 0..3 {
                assert!(is_twin_vertex(&g, v, kind, 3).unwrap().is_none());
            }
        }
        assert!(matches!(is_twin_vertex(&g, 0, 3, 3), Err(TwinError::BadKind(3))));
    }

    #[test]
    fn kind2_witness_validates() {
        let g = double_k23();
        // Vertex 0 (degree-3 side of the first copy) sees the independent
        // set {2,3,4}; each of those has neighborhood {0,1,x} with 0,1 twins.
        let w = is_twin_vertex(&g, 0, 2, 3).unwrap().unwrap();
        assert!(w.validate(&g, 0));
        let mut forged = w.clone();
        forged.level = 2;
        assert!(!forged.validate(&g, 0));
    }

    #[test]
    fn upper_bound_examples() {
        assert_eq!(twin_grundy_upper_bound(&named("K3,3").unwrap()), 2);
        assert_eq!(twin_grundy_upper_bound(&named("C4").unwrap()), 2);
        assert_eq!(twin_grundy_upper_bound(&named("K4").unwrap()), 4);
        assert_eq!(twin_grundy_upper_bound(&named("I3").unwrap()), 1);
        assert_eq!(twin_grundy_upper_bound(&Graph::empty(0).unwrap()), 0);
        assert_eq!(twin_grundy_upper_bound(&named("petersen").unwrap()), 4);
    }

    /// Brute-force least level per vertex straight from the predicates.
    fn brute_level(g: &Graph, v: usize) -> usize {
        let kinds: &[u8] = if g.regularity().is_some() { &[0, 1, 2] } else { &[1, 2] };
        (1..=g.n() + 2)
            .find(|&l| kinds.iter().any(|&k| is_twin_vertex(g, v, k, l).unwrap().is_some()))
            .unwrap()
    }

    #[test]
    fn levels_match_predicates() {
        for n in 1..=6 {
            for g in enumerate_graphs(n, false).unwrap() {
                let levels = twin_levels(&g);
                for (v, &level) in levels.iter().enumerate() {
                    assert_eq!(level, brute_level(&g, v), "{g} v={v}");
                }
            }
        }
    }

    #[test]
    fn cubic_classifier_examples() {
        let sparse = |name: &str| SparseGraph::from(&named(name).unwrap());
        assert_eq!(cubic_grundy_linear(&sparse("K3,3")), Ok(2));
        assert_eq!(cubic_grundy_linear(&sparse("petersen")), Ok(4));
        assert_eq!(cubic_grundy_linear(&sparse("K4")), Ok(4));
        assert_eq!(cubic_grundy_linear(&sparse("prism")), Ok(4));
        assert_eq!(cubic_grundy_linear(&SparseGraph::from(&double_k23())), Ok(3));
        assert!(matches!(cubic_grundy_linear(&sparse("C5")), Err(TwinError::NotCubic { .. })));
        let two_k4 = named("K4").unwrap().disjoint_union(&named("K4").unwrap()).unwrap();
        assert_eq!(cubic_grundy_linear(&SparseGraph::from(&two_k4)), Err(TwinError::NotConnected));
    }

    #[test]
    fn f3_membership_examples() {
        assert_eq!(f3_membership(&named("K3,3").unwrap()), Ok(true));
        assert_eq!(f3_membership(&named("prism").unwrap()), Ok(false));
        assert_eq!(f3_membership(&double_k23()), Ok(true));
        let k33 = named("K3,3").unwrap();
        assert_eq!(f3_membership(&k33.disjoint_union(&double_k23()).unwrap()), Ok(true));
        assert!(f3_membership(&named("P3").unwrap()).is_err());
    }

    #[test]
    fn linear_test_agrees_with_general_predicates() {
        for n in [4, 6, 8, 10] {
            for g in crate::graph::enumerate_regular_graphs(3, n, false).unwrap() {
                let levels = twin_levels(&g);
                let s = SparseGraph::from(&g);
                for (v, &level) in levels.iter().enumerate() {
                    assert_eq!(cubic_is_3_twin(&s, v), level <= 3, "{g} v={v}");
                }
            }
        }
    }
}
