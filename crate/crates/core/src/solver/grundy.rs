//! Exact Grundy number.
//!
//! `Γ(G) ≥ k` iff some vertex subset carries a Grundy k-coloring: ordering
//! that subset by color and running first-fit over it followed by the rest
//! reproduces its colors. The solver grows such a witness top-down from a
//! vertex colored `k`, repeatedly picking the colored vertex and missing
//! smaller color with the fewest candidate neighbors. Every witness colors
//! vertices as some full Grundy coloring does, so per-vertex color caps from
//! the twin bounds and `deg+1` apply. Twins are interchangeable while
//! uncolored, so only one per twin class is branched on.

use super::{greedy_color, Budget, Coloring, Ordering, SolveOptions, SolverError, EXACT_MAX_ORDER};
use crate::graph::{automorphism_orbits, Graph, VertexSet, CANONICAL_MAX_ORDER};
use crate::twins::twin_levels;

/// Result of [`grundy_exact_with`]: the value with a certifying ordering and
/// the full Grundy coloring it produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrundySolution {
    pub value: usize,
    pub ordering: Ordering,
    pub coloring: Coloring,
    /// Search nodes spent.
    pub nodes: u64,
}

pub fn grundy_exact(g: &Graph) -> Result<usize, SolverError> {
    Ok(grundy_exact_with(g, &SolveOptions::default())?.value)
}

pub fn grundy_exact_with(g: &Graph, opts: &SolveOptions) -> Result<GrundySolution, SolverError> {
    check_order(g)?;
    let mut budget = Budget::new(opts.budget);
    let ctx = Context::new(g);
    let (mut ordering, mut coloring) = heuristic(g)?;
    let ceiling = ctx.cap.iter().copied().max().unwrap_or(0);
    while coloring.k() < ceiling {
        match ctx.find_witness(coloring.k() + 1, &mut budget)? {
            Some(witness) => {
                ordering = ordering_from_witness(g.n(), &witness);
                coloring = greedy_color(g, &ordering)?;
            }
            None => break,
        }
    }
    Ok(GrundySolution {
        value: coloring.k(),
        ordering,
        coloring,
        nodes: budget.used,
    })
}

/// A Grundy k-coloring of some vertex subset (uncolored vertices are 0), or
/// `None` when `Γ(g) < k`.
pub fn has_grundy_witness(g: &Graph, k: usize, opts: &SolveOptions) -> Result<Option<Coloring>, SolverError> {
    check_order(g)?;
    if k == 0 {
        return Ok(Some(Coloring::new(vec![0; g.n()])?));
    }
    let mut budget = Budget::new(opts.budget);
    let ctx = Context::new(g);
    ctx.find_witness(k, &mut budget)?
        .map(Coloring::new)
        .transpose()
}

fn check_order(g: &Graph) -> Result<(), SolverError> {
    if g.n() > EXACT_MAX_ORDER {
        return Err(SolverError::TooLarge {
            op: "grundy_exact",
            n: g.n(),
            max: EXACT_MAX_ORDER,
        });
    }
    Ok(())
}

/// Best of a few cheap first-fit orderings.
fn heuristic(g: &Graph) -> Result<(Ordering, Coloring), SolverError> {
    let n = g.n();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (g.degree(v), v));
    let mut candidates = vec![Ordering::identity(n)];
    candidates.push(Ordering::new(by_degree.clone())?);
    by_degree.reverse();
    candidates.push(Ordering::new(by_degree)?);
    let mut best: Option<(Ordering, Coloring)> = None;
    for order in candidates {
        let c = greedy_color(g, &order)?;
        if best.as_ref().is_none_or(|(_, b)| c.k() > b.k()) {
            best = Some((order, c));
        }
    }
    Ok(best.expect("at least one ordering"))
}

/// Witness vertices by increasing color, then everything else by index.
fn ordering_from_witness(n: usize, colors: &[usize]) -> Ordering {
    let mut colored: Vec<usize> = (0..n).filter(|&v| colors[v] > 0).collect();
    colored.sort_by_key(|&v| (colors[v], v));
    colored.extend((0..n).filter(|&v| colors[v] == 0));
    Ordering::new(colored).expect("distinct vertices")
}

pub(crate) struct Context {
    n: usize,
    rows: Vec<u64>,
    /// Largest color any Grundy coloring can give each vertex.
    pub(crate) cap: Vec<usize>,
    /// Smallest vertex with the same open or closed neighborhood.
    pub(crate) twin_rep: Vec<usize>,
    /// Vertices sharing the open neighborhood (excluding the vertex itself).
    false_twins: Vec<u64>,
    /// One vertex per automorphism orbit (or per twin class when large).
    pub(crate) roots: Vec<usize>,
}

impl Context {
    pub(crate) fn new(g: &Graph) -> Self {
        let n = g.n();
        let rows = g.rows().to_vec();
        let levels = twin_levels(g);
        let cap: Vec<usize> = (0..n).map(|v| levels[v].min(g.degree(v) + 1)).collect();
        let mut twin_rep: Vec<usize> = (0..n).collect();
        let mut false_twins = vec![0u64; n];
        for v in 0..n {
            for u in 0..n {
                if u == v {
                    continue;
                }
                let open = rows[u] == rows[v];
                let closed = rows[u] | 1 << u == rows[v] | 1 << v;
                if open {
                    false_twins[v] |= 1 << u;
                }
                if (open || closed) && u < twin_rep[v] {
                    twin_rep[v] = u;
                }
            }
        }
        let roots = if n <= CANONICAL_MAX_ORDER {
            automorphism_orbits(g)
                .expect("order checked")
                .into_iter()
                .filter_map(VertexSet::first)
                .collect()
        } else {
            (0..n).filter(|&v| twin_rep[v] == v).collect()
        };
        Context {
            n,
            rows,
            cap,
            twin_rep,
            false_twins,
            roots,
        }
    }

    fn find_witness(&self, k: usize, budget: &mut Budget) -> Result<Option<Vec<usize>>, SolverError> {
        let mut s = State::new(self.n, k);
        for &root in &self.roots {
            if self.cap[root] < k {
                continue;
            }
            s.assign(&self.rows, root, k);
            let found = self.extend(&mut s, budget)?;
            if found {
                return Ok(Some(s.color.iter().map(|&c| c as usize).collect()));
            }
            s.unassign(&self.rows, root);
        }
        Ok(None)
    }

    /// Whether `u` may take color `j` in the current partial witness.
    fn admissible(&self, s: &State, u: usize, j: usize) -> bool {
        if self.cap[u] < j || s.mask[u] >> j & 1 == 1 {
            return false;
        }
        let present = (s.mask[u] & ((1u64 << j) - 2)).count_ones() as usize;
        let open = (self.rows[u] & !s.colored).count_ones() as usize;
        if present + open + 1 < j {
            return false;
        }
        // Equal-neighborhood vertices always share a color.
        VertexSet(self.false_twins[u] & s.colored)
            .iter()
            .all(|w| s.color[w] as usize == j)
    }

    fn extend(&self, s: &mut State, budget: &mut Budget) -> Result<bool, SolverError> {
        budget.tick()?;
        let mut pick: Option<(usize, u64, u32)> = None;
        for v in VertexSet(s.colored) {
            let c = s.color[v] as usize;
            let missing = ((1u64 << c) - 2) & !s.mask[v];
            if missing == 0 {
                continue;
            }
            let free = self.rows[v] & !s.colored;
            if missing.count_ones() > free.count_ones() {
                return Ok(false);
            }
            for j in VertexSet(missing) {
                let mut cands = 0u64;
                for u in VertexSet(free) {
                    if self.admissible(s, u, j) {
                        cands |= 1 << u;
                    }
                }
                let count = cands.count_ones();
                if count == 0 {
                    return Ok(false);
                }
                if pick.is_none_or(|(_, _, best)| count < best) {
                    pick = Some((j, cands, count));
                }
            }
        }
        let Some((j, cands, _)) = pick else {
            return Ok(true);
        };
        let mut tried_reps = 0u64;
        for u in VertexSet(cands) {
            let rep = self.twin_rep[u];
            if tried_reps >> rep & 1 == 1 {
                continue;
            }
            tried_reps |= 1 << rep;
            s.assign(&self.rows, u, j);
            if self.extend(s, budget)? {
                return Ok(true);
            }
            s.unassign(&self.rows, u);
        }
        Ok(false)
    }
}

/// Partial coloring with per-vertex counts of each neighboring color.
pub(crate) struct State {
    pub(crate) color: Vec<u8>,
    pub(crate) colored: u64,
    /// Bit `c` set when some colored neighbor has color `c`.
    pub(crate) mask: Vec<u64>,
    counts: Vec<u8>,
    stride: usize,
}

impl State {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        State {
            color: vec![0; n],
            colored: 0,
            mask: vec![0; n],
            counts: vec![0; n * (k + 1)],
            stride: k + 1,
        }
    }

    pub(crate) fn assign(&mut self, rows: &[u64], u: usize, c: usize) {
        self.color[u] = c as u8;
        self.colored |= 1 << u;
        for w in VertexSet(rows[u]) {
            self.counts[w * self.stride + c] += 1;
            self.mask[w] |= 1 << c;
        }
    }

    pub(crate) fn unassign(&mut self, rows: &[u64], u: usize) {
        let c = self.color[u] as usize;
        self.color[u] = 0;
        self.colored &= !(1 << u);
        for w in VertexSet(rows[u]) {
            let slot = &mut self.counts[w * self.stride + c];
            *slot -= 1;
            if *slot == 0 {
                self.mask[w] &= !(1 << c);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::named;
    use crate::graph::{enumerate_graphs, power_graph};
    use crate::solver::{grundy_oracle, validate_grundy};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn known_values() {
        assert_eq!(grundy_exact(&named("K4").unwrap()), Ok(4));
        assert_eq!(grundy_exact(&named("petersen").unwrap()), Ok(4));
        assert_eq!(grundy_exact(&power_graph(&named("C7").unwrap(), 2)), Ok(4));
        assert_eq!(grundy_exact(&named("K3,3").unwrap()), Ok(2));
        assert_eq!(grundy_exact(&named("C4").unwrap()), Ok(2));
        assert_eq!(grundy_exact(&Graph::empty(0).unwrap()), Ok(0));
        assert_eq!(grundy_exact(&named("I5").unwrap()), Ok(1));
    }

    #[test]
    fn matches_oracle_on_small_graphs() {
        for n in 1..=6 {
            for g in enumerate_graphs(n, false).unwrap() {
                let sol = grundy_exact_with(&g, &SolveOptions::default()).unwrap();
                assert_eq!(sol.value, grundy_oracle(&g).unwrap(), "{g}");
                assert!(validate_grundy(&g, &sol.coloring, false));
                assert_eq!(greedy_color(&g, &sol.ordering).unwrap(), sol.coloring);
            }
        }
    }

    #[test]
    fn matches_oracle_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..150 {
            let n = rng.random_range(7..=8);
            let p = rng.random_range(0.2..0.8);
            let mut edges = vec![];
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            assert_eq!(grundy_exact(&g).unwrap(), grundy_oracle(&g).unwrap(), "{g}");
        }
    }

    #[test]
    fn witness_certifies_lower_bound() {
        let g = named("P4").unwrap();
        let w = has_grundy_witness(&g, 3, &SolveOptions::default()).unwrap().unwrap();
        assert_eq!(w.k(), 3);
        assert!(validate_grundy(&g, &w, true));
        assert!(has_grundy_witness(&g, 4, &SolveOptions::default()).unwrap().is_none());
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let g = named("petersen").unwrap();
        let err = grundy_exact_with(&g, &SolveOptions { budget: 1 }).unwrap_err();
        assert_eq!(err, SolverError::BudgetExceeded { budget: 1 });
    }

    #[test]
    fn rejects_large_graphs() {
        assert!(matches!(grundy_exact(&named("C33").unwrap()), Err(SolverError::TooLarge { .. })));
    }

    #[test]
    fn larger_cycles_and_paths() {
        // Paths and cycles on at least 4 / 5 vertices reach Γ = 3.
        for n in 4..=32 {
            assert_eq!(grundy_exact(&named(&format!("P{n}")).unwrap()), Ok(3));
        }
        for n in 5..=32 {
            assert_eq!(grundy_exact(&named(&format!("C{n}")).unwrap()), Ok(3));
        }
    }
}
