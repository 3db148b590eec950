//! Greedy (first-fit) coloring, Grundy coloring validators, an exhaustive
//! ordering oracle, and exact solvers for the Grundy and partial Grundy
//! numbers.

mod grundy;
mod partial;

pub use grundy::{grundy_exact, grundy_exact_with, has_grundy_witness, GrundySolution};
pub use partial::{partial_grundy_exact, partial_grundy_exact_with, PartialSolution};

use crate::graph::{Graph, VertexSet};

/// Node limit used when callers do not supply one.
pub const DEFAULT_BUDGET: u64 = 50_000_000;
/// Largest order for [`grundy_oracle`].
pub const ORACLE_MAX_ORDER: usize = 9;
/// Largest order for [`grundy_exact`].
pub const EXACT_MAX_ORDER: usize = 32;
/// Largest order for [`partial_grundy_exact`].
pub const PARTIAL_MAX_ORDER: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SolverError {
    #[error("ordering is not a permutation of the {n} vertices")]
    NotAPermutation { n: usize },
    #[error("coloring has {got} entries for a graph on {n} vertices")]
    LengthMismatch { got: usize, n: usize },
    #[error("color {missing} is unused, colorings must be surjective onto 1..={k}")]
    NotSurjective { missing: usize, k: usize },
    #[error("vertex {0} is uncolored")]
    Uncolored(usize),
    #[error("{op} supports at most {max} vertices, got {n}")]
    TooLarge { op: &'static str, n: usize, max: usize },
    #[error("search budget of {budget} nodes exhausted")]
    BudgetExceeded { budget: u64 },
}

/// Search options shared by the exact solvers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Maximum number of search nodes before giving up.
    pub budget: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { budget: DEFAULT_BUDGET }
    }
}

/// Node counter that turns exhaustion into an error.
pub(crate) struct Budget {
    limit: u64,
    pub(crate) used: u64,
}

impl Budget {
    pub(crate) fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), SolverError> {
        self.used += 1;
        if self.used > self.limit {
            return Err(SolverError::BudgetExceeded { budget: self.limit });
        }
        Ok(())
    }
}

/// Vertex colors, 0 meaning uncolored; used colors are exactly `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Result<Self, SolverError> {
        let k = colors.iter().copied().max().unwrap_or(0);
        let mut used = vec![false; k + 1];
        for &c in &colors {
            used[c] = true;
        }
        if let Some(missing) = (1..=k).find(|&c| !used[c]) {
            return Err(SolverError::NotSurjective { missing, k });
        }
        Ok(Coloring { colors, k })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn class(&self, c: usize) -> VertexSet {
        self.colors
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x == c)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn colored(&self) -> VertexSet {
        self.colors
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x != 0)
            .map(|(v, _)| v)
            .collect()
    }
}

/// A sequence of distinct vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ordering {
    perm: Vec<usize>,
}

impl Ordering {
    /// Accepts any sequence of distinct vertex indices.
    pub fn new(perm: Vec<usize>) -> Result<Self, SolverError> {
        let mut seen = VertexSet::EMPTY;
        let n = perm.len();
        for &v in &perm {
            if v >= 64 || seen.contains(v) {
                return Err(SolverError::NotAPermutation { n });
            }
            seen.insert(v);
        }
        Ok(Ordering { perm })
    }

    pub fn identity(n: usize) -> Self {
        Ordering { perm: (0..n).collect() }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }
}

/// Smallest color in 1.. not present in `mask` (bit c = color c present).
#[inline]
pub(crate) fn first_free(mask: u128) -> usize {
    (!(mask | 1)).trailing_zeros() as usize
}

/// First-fit coloring along `order`, which must list every vertex once.
pub fn greedy_color(g: &Graph, order: &Ordering) -> Result<Coloring, SolverError> {
    let n = g.n();
    if order.len() != n || order.as_slice().iter().any(|&v| v >= n) {
        return Err(SolverError::NotAPermutation { n });
    }
    let mut colors = vec![0usize; n];
    let mut seen = vec![0u128; n];
    for &v in order.as_slice() {
        let c = first_free(seen[v]);
        colors[v] = c;
        for w in g.neighbors(v) {
            seen[w] |= 1 << c;
        }
    }
    Coloring::new(colors)
}

/// Proper on colored vertices, and every colored vertex of color `i` sees
/// every color `j < i` among colored neighbors. Outside `subset_mode` every
/// vertex must be colored.
pub fn validate_grundy(g: &Graph, c: &Coloring, subset_mode: bool) -> bool {
    if c.len() != g.n() {
        return false;
    }
    (0..g.n()).all(|v| {
        let cv = c.color(v);
        if cv == 0 {
            return subset_mode;
        }
        let mut seen = 0u128;
        for w in g.neighbors(v) {
            let cw = c.color(w);
            if cw == cv {
                return false;
            }
            seen |= 1 << cw;
        }
        let needed = (1u128 << cv) - 2;
        seen & needed == needed
    })
}

/// Proper total coloring in which each class has a vertex seeing every
/// smaller color.
pub fn validate_partial_grundy(g: &Graph, c: &Coloring) -> Result<bool, SolverError> {
    if c.len() != g.n() {
        return Err(SolverError::LengthMismatch { got: c.len(), n: g.n() });
    }
    if let Some(v) = (0..g.n()).find(|&v| c.color(v) == 0) {
        return Err(SolverError::Uncolored(v));
    }
    let proper = g.edges().iter().all(|&(u, v)| c.color(u) != c.color(v));
    if !proper {
        return Ok(false);
    }
    let mut has_grundy = vec![false; c.k() + 1];
    for v in 0..g.n() {
        let cv = c.color(v);
        let seen = g.neighbors(v).iter().fold(0u128, |m, w| m | 1 << c.color(w));
        let needed = (1u128 << cv) - 2;
        if seen & needed == needed {
            has_grundy[cv] = true;
        }
    }
    Ok(has_grundy[1..].iter().all(|&b| b))
}

/// Grundy number by trying every vertex ordering with first-fit.
pub fn grundy_oracle(g: &Graph) -> Result<usize, SolverError> {
    let n = g.n();
    if n > ORACLE_MAX_ORDER {
        return Err(SolverError::TooLarge {
            op: "grundy_oracle",
            n,
            max: ORACLE_MAX_ORDER,
        });
    }
    let ceiling = if n == 0 { 0 } else { g.max_degree() + 1 };
    let mut best = 0;
    let mut seen = vec![0u128; n];
    oracle_dfs(g, VertexSet::full(n), &mut seen, 0, ceiling, &mut best);
    Ok(best)
}

fn oracle_dfs(g: &Graph, left: VertexSet, seen: &mut [u128], so_far: usize, ceiling: usize, best: &mut usize) {
    if left.is_empty() {
        *best = (*best).max(so_far);
        return;
    }
    for v in left {
        if *best >= ceiling {
            return;
        }
        let c = first_free(seen[v]);
        let nbrs = g.neighbors(v).intersection(left);
        let saved: Vec<u128> = nbrs.iter().map(|w| seen[w]).collect();
        for w in nbrs {
            seen[w] |= 1 << c;
        }
        let mut rest = left;
        rest.remove(v);
        oracle_dfs(g, rest, seen, so_far.max(c), ceiling, best);
        for (w, s) in nbrs.iter().zip(saved) {
            seen[w] = s;
        }
    }
}
