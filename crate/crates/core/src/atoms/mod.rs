//! t-atoms: `K_1` is the only 1-atom, and a (t+1)-atom is a t-atom `G'`
//! together with an independent set of at most `|V(G')|` new vertices such
//! that every vertex of `G'` has a neighbor among them. A graph has Grundy
//! number at least `t` iff it contains an induced minimal t-atom.
//!
//! Two routes build catalogs. [`enumerate_atoms`] follows the definition
//! literally and is exhaustive, which limits it to small levels.
//! [`enumerate_minimal_atoms`] only extends minimal atoms by layers in which
//! each new vertex has a private neighbor: dropping any other layer vertex,
//! or replacing `G'` by a t-atom inside it, would leave a smaller (t+1)-atom
//! inside the result. Candidates are then filtered by induced containment.

mod io;
mod matcher;

pub use io::{read_catalog, write_catalog};
pub use matcher::{find_induced, is_induced_subgraph};

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use crate::graph::{canonical_pair, CanonicalKey, Graph, GraphError, VertexSet, CANONICAL_MAX_ORDER};

/// Highest level accepted by either route.
pub const ATOM_MAX_LEVEL: usize = 6;
/// Upper limit on layer patterns examined by the literal enumeration.
pub const FULL_ENUMERATION_LIMIT: u128 = 20_000_000;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AtomError {
    #[error("level t={t} is outside 1..={max}")]
    BadLevel { t: usize, max: usize },
    #[error("level {t} would examine about {estimate} layer patterns; add a degree or order limit")]
    CatalogTooLarge { t: usize, estimate: u128 },
    #[error("atoms of order up to {order} exceed the canonical labeling bound {max}; set max_order")]
    OrderTooLarge { order: usize, max: usize },
    #[error("catalog line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Restrictions applied while building a catalog.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct AtomLimits {
    pub max_degree: Option<usize>,
    pub max_order: Option<usize>,
    /// Keep only atoms without cycles.
    pub forest: bool,
}

/// t-atoms up to isomorphism, sorted by order then canonical key.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomCatalog {
    pub t: usize,
    /// Whether the catalog holds only minimal atoms.
    pub minimal: bool,
    pub limits: AtomLimits,
    entries: Vec<(CanonicalKey, Graph)>,
}

impl AtomCatalog {
    pub(crate) fn from_graphs(
        t: usize,
        minimal: bool,
        limits: AtomLimits,
        graphs: impl IntoIterator<Item = Graph>,
    ) -> Result<Self, AtomError> {
        let mut seen = HashSet::new();
        let mut entries = Vec::new();
        for g in graphs {
            let (key, canon) = canonical_pair(&g)?;
            if seen.insert(key.clone()) {
                entries.push((key, canon));
            }
        }
        entries.sort_by(|a, b| (a.1.n(), &a.0).cmp(&(b.1.n(), &b.0)));
        Ok(AtomCatalog {
            t,
            minimal,
            limits,
            entries,
        })
    }

    pub fn atoms(&self) -> impl Iterator<Item = &Graph> {
        self.entries.iter().map(|(_, g)| g)
    }

    pub fn keys(&self) -> impl Iterator<Item = &CanonicalKey> {
        self.entries.iter().map(|(k, _)| k)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest atom order present.
    pub fn max_order(&self) -> usize {
        self.atoms().map(Graph::n).max().unwrap_or(0)
    }

    pub fn contains(&self, g: &Graph) -> bool {
        match canonical_pair(g) {
            Ok((key, _)) => self.entries.iter().any(|(k, _)| *k == key),
            Err(_) => false,
        }
    }
}

fn check_level(t: usize) -> Result<(), AtomError> {
    if !(1..=ATOM_MAX_LEVEL).contains(&t) {
        return Err(AtomError::BadLevel { t, max: ATOM_MAX_LEVEL });
    }
    Ok(())
}

/// Largest order reachable at level `t` under `limits`.
fn order_bound(t: usize, limits: &AtomLimits) -> usize {
    let structural = 1usize << (t - 1);
    limits.max_order.map_or(structural, |m| m.min(structural))
}

fn check_order_bound(t: usize, limits: &AtomLimits) -> Result<(), AtomError> {
    let order = order_bound(t, limits);
    if order > CANONICAL_MAX_ORDER {
        return Err(AtomError::OrderTooLarge {
            order,
            max: CANONICAL_MAX_ORDER,
        });
    }
    Ok(())
}

fn k1() -> Graph {
    Graph::empty(1).expect("one vertex")
}

/// All t-atoms, literally from the definition.
pub fn enumerate_atoms(t: usize, max_degree: Option<usize>) -> Result<AtomCatalog, AtomError> {
    enumerate_atoms_with(
        t,
        AtomLimits {
            max_degree,
            ..AtomLimits::default()
        },
    )
}

pub fn enumerate_atoms_with(t: usize, limits: AtomLimits) -> Result<AtomCatalog, AtomError> {
    check_level(t)?;
    check_order_bound(t, &limits)?;
    let mut level = AtomCatalog::from_graphs(1, false, limits, [k1()])?;
    for next in 2..=t {
        let estimate = level
            .atoms()
            .map(|g| layer_estimate(g, &limits))
            .fold(0u128, |a, b| a.saturating_add(b));
        if estimate > FULL_ENUMERATION_LIMIT {
            return Err(AtomError::CatalogTooLarge { t: next, estimate });
        }
        let mut out = Vec::new();
        for g in level.atoms() {
            for_each_layer(g, &limits, false, &mut |h| out.push(h));
        }
        level = AtomCatalog::from_graphs(next, false, limits, out)?;
    }
    Ok(level)
}

/// Atoms of the catalog containing no other catalog atom as an induced
/// subgraph.
///
/// Entries are visited by increasing order, and each is compared only with
/// the minimal atoms accepted so far: a smaller atom inside a candidate
/// always contains a smaller minimal one.
pub fn minimal_atoms(catalog: &AtomCatalog) -> AtomCatalog {
    let mut kept: Vec<(CanonicalKey, Graph)> = Vec::new();
    for (key, a) in &catalog.entries {
        let dominated = kept
            .iter()
            .any(|(_, b)| b.n() < a.n() && is_induced_subgraph(b, a));
        if !dominated {
            kept.push((key.clone(), a.clone()));
        }
    }
    AtomCatalog {
        t: catalog.t,
        minimal: true,
        limits: catalog.limits,
        entries: kept,
    }
}

/// Minimal t-atoms, built only from minimal atoms of the previous level.
pub fn enumerate_minimal_atoms(t: usize, limits: AtomLimits) -> Result<AtomCatalog, AtomError> {
    check_level(t)?;
    check_order_bound(t, &limits)?;
    let mut level = AtomCatalog::from_graphs(1, true, limits, [k1()])?;
    for next in 2..=t {
        let mut out = Vec::new();
        for g in level.atoms() {
            for_each_layer(g, &limits, true, &mut |h| out.push(h));
        }
        let candidates = AtomCatalog::from_graphs(next, false, limits, out)?;
        level = minimal_atoms(&candidates);
    }
    Ok(level)
}

/// Whether `g` contains an induced atom from `catalog`.
pub fn contains_catalog_atom(g: &Graph, catalog: &AtomCatalog) -> bool {
    catalog.atoms().any(|a| is_induced_subgraph(a, g))
}

type CacheKey = (usize, usize, usize);

fn cache() -> &'static Mutex<HashMap<CacheKey, Arc<AtomCatalog>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<AtomCatalog>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Minimal t-atoms that could occur inside a graph with the given maximum
/// degree and order, memoized per process.
pub fn minimal_atoms_for(t: usize, max_degree: usize, order: usize) -> Result<Arc<AtomCatalog>, AtomError> {
    check_level(t)?;
    let order = order.min(1 << (t - 1));
    let key = (t, max_degree, order);
    if let Some(c) = cache().lock().expect("cache lock").get(&key) {
        return Ok(Arc::clone(c));
    }
    let limits = AtomLimits {
        max_degree: Some(max_degree),
        max_order: Some(order),
        forest: false,
    };
    let catalog = Arc::new(enumerate_minimal_atoms(t, limits)?);
    cache()
        .lock()
        .expect("cache lock")
        .insert(key, Arc::clone(&catalog));
    Ok(catalog)
}

/// Whether `g` contains an induced minimal t-atom, which holds iff
/// `Γ(g) >= t`.
pub fn has_induced_minimal_atom(g: &Graph, t: usize) -> Result<bool, AtomError> {
    check_level(t)?;
    if g.n() == 0 {
        return Ok(false);
    }
    let catalog = minimal_atoms_for(t, g.max_degree(), g.n())?;
    Ok(contains_catalog_atom(g, &catalog))
}

/// Number of candidate layers the literal enumeration would try on `g`.
fn layer_estimate(g: &Graph, limits: &AtomLimits) -> u128 {
    let n = g.n();
    let max_m = limits.max_order.map_or(n, |o| o.saturating_sub(n).min(n));
    let subsets = admissible_subsets(g, limits, false).len() as u128;
    (1..=max_m as u128).map(|m| binomial(subsets + m - 1, m)).sum()
}

fn binomial(n: u128, k: u128) -> u128 {
    let mut r: u128 = 1;
    for i in 0..k {
        r = r.saturating_mul(n - i) / (i + 1);
    }
    r
}

/// Neighbor sets a new layer vertex may take.
fn admissible_subsets(g: &Graph, limits: &AtomLimits, nonempty: bool) -> Vec<u64> {
    let n = g.n();
    let cap = limits.max_degree.unwrap_or(usize::MAX);
    let room: Vec<usize> = (0..n).map(|v| cap.saturating_sub(g.degree(v))).collect();
    (u64::from(nonempty)..1u64 << n)
        .filter(|&s| {
            s.count_ones() as usize <= cap && VertexSet(s).iter().all(|v| room[v] >= 1)
        })
        .collect()
}

/// Calls `emit` with every `g + layer` allowed by the limits. Layers are
/// multisets of neighbor sets whose union is `V(g)`; with `irredundant`, each
/// layer vertex must also own a private neighbor.
fn for_each_layer(g: &Graph, limits: &AtomLimits, irredundant: bool, emit: &mut dyn FnMut(Graph)) {
    let n = g.n();
    let max_m = limits.max_order.map_or(n, |o| o.saturating_sub(n).min(n));
    if max_m == 0 {
        return;
    }
    let cap = limits.max_degree.unwrap_or(usize::MAX);
    let subsets = admissible_subsets(g, limits, irredundant);
    let mut st = LayerState {
        g,
        subsets: &subsets,
        room: (0..n).map(|v| cap.saturating_sub(g.degree(v))).collect(),
        chosen: Vec::with_capacity(max_m),
        max_m,
        irredundant,
        forest: limits.forest,
    };
    st.rec(0, emit);
}

struct LayerState<'a> {
    g: &'a Graph,
    subsets: &'a [u64],
    room: Vec<usize>,
    chosen: Vec<u64>,
    max_m: usize,
    irredundant: bool,
    forest: bool,
}

impl LayerState<'_> {
    fn rec(&mut self, from: usize, emit: &mut dyn FnMut(Graph)) {
        let full = VertexSet::full(self.g.n()).0;
        let covered = self.chosen.iter().fold(0u64, |a, &s| a | s);
        if covered == full && !self.chosen.is_empty() && self.layer_ok() {
            emit(self.build());
        }
        if self.chosen.len() == self.max_m {
            return;
        }
        for i in from..self.subsets.len() {
            let s = self.subsets[i];
            if VertexSet(s).iter().any(|v| self.room[v] == 0) {
                continue;
            }
            if self.irredundant && !self.can_stay_private(s) {
                continue;
            }
            for v in VertexSet(s) {
                self.room[v] -= 1;
            }
            self.chosen.push(s);
            if !self.forest || is_forest(&self.build()) {
                self.rec(i, emit);
            }
            self.chosen.pop();
            for v in VertexSet(s) {
                self.room[v] += 1;
            }
        }
    }

    /// Adding `s` must leave it and every chosen set with a private vertex.
    fn can_stay_private(&self, s: u64) -> bool {
        let mut all = self.chosen.clone();
        all.push(s);
        private_everywhere(&all)
    }

    fn build(&self) -> Graph {
        let mut h = self.g.clone();
        for &s in &self.chosen {
            h = h.with_vertex(VertexSet(s)).expect("order stays within limits");
        }
        h
    }

    fn layer_ok(&self) -> bool {
        !self.irredundant || private_everywhere(&self.chosen)
    }
}

fn is_forest(g: &Graph) -> bool {
    g.edge_count() + g.components().len() == g.n()
}

fn private_everywhere(sets: &[u64]) -> bool {
    (0..sets.len()).all(|i| {
        let others = sets
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(0u64, |a, (_, &s)| a | s);
        sets[i] & !others != 0
    })
}
