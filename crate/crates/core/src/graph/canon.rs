//! Canonical labeling by equitable-partition refinement and a search tree of
//! individualizations, pruned with discovered automorphisms.
//!
//! The canonical labeling is the leaf whose relabeled adjacency rows are
//! lexicographically largest. Refinement and cell selection depend only on
//! cell order and neighbor counts, never on vertex labels, so isomorphic
//! inputs produce identical leaf sets.

use std::fmt;

use super::{write_graph6, Graph, GraphError, VertexSet};

/// Largest order accepted by [`canonical_form`].
pub const CANONICAL_MAX_ORDER: usize = 16;

/// graph6 bytes of the canonically relabeled graph. Two graphs have equal
/// keys iff they are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.as_str())
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

struct Leaf {
    cert: Vec<u64>,
    order: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<Leaf>,
    first: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

fn check_order(g: &Graph) -> Result<(), GraphError> {
    if g.n() > CANONICAL_MAX_ORDER {
        return Err(GraphError::Unsupported {
            op: "canonical_form",
            n: g.n(),
            max: CANONICAL_MAX_ORDER,
        });
    }
    Ok(())
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_graph(g: &Graph) -> Result<Graph, GraphError> {
    Ok(canonical_pair(g)?.1)
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalKey, GraphError> {
    Ok(canonical_pair(g)?.0)
}

/// Key and canonical representative from a single search.
pub(crate) fn canonical_pair(g: &Graph) -> Result<(CanonicalKey, Graph), GraphError> {
    check_order(g)?;
    let s = run(g);
    let cert = s.best.map(|l| l.cert).unwrap_or_default();
    let c = Graph::from_rows_unchecked(cert);
    Ok((CanonicalKey(write_graph6(&c).into_bytes()), c))
}

/// Orbits of the automorphism group, ordered by smallest member.
pub fn automorphism_orbits(g: &Graph) -> Result<Vec<VertexSet>, GraphError> {
    check_order(g)?;
    let s = run(g);
    let mut uf = UnionFind::new(g.n());
    for gen in &s.generators {
        for (v, &w) in gen.iter().enumerate() {
            uf.union(v, w);
        }
    }
    let mut orbits: Vec<VertexSet> = Vec::new();
    let mut rep_index = vec![usize::MAX; g.n()];
    for v in 0..g.n() {
        let r = uf.find(v);
        if rep_index[r] == usize::MAX {
            rep_index[r] = orbits.len();
            orbits.push(VertexSet::EMPTY);
        }
        orbits[rep_index[r]].insert(v);
    }
    Ok(orbits)
}

fn run(g: &Graph) -> Search<'_> {
    let mut s = Search {
        g,
        best: None,
        first: None,
        generators: Vec::new(),
    };
    let mut cells = if g.n() == 0 { vec![] } else { vec![g.vertices().0] };
    s.refine(&mut cells);
    let mut prefix = Vec::new();
    s.descend(cells, &mut prefix);
    s
}

impl Search<'_> {
    /// Splits cells by neighbor counts into each cell until equitable.
    fn refine(&self, cells: &mut Vec<u64>) {
        let rows = self.g.rows();
        let mut splitter = 0;
        while splitter < cells.len() {
            let w = cells[splitter];
            let mut next = Vec::with_capacity(cells.len() + 2);
            let mut split_any = false;
            for &cell in cells.iter() {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut groups: Vec<(u32, u64)> = Vec::new();
                for v in VertexSet(cell) {
                    let d = (rows[v] & w).count_ones();
                    match groups.iter_mut().find(|(k, _)| *k == d) {
                        Some((_, m)) => *m |= 1 << v,
                        None => groups.push((d, 1 << v)),
                    }
                }
                if groups.len() > 1 {
                    split_any = true;
                    groups.sort_unstable_by_key(|&(d, _)| d);
                }
                next.extend(groups.into_iter().map(|(_, m)| m));
            }
            *cells = next;
            // A split may invalidate earlier splitters; restart from the front.
            splitter = if split_any { 0 } else { splitter + 1 };
        }
    }

    fn descend(&mut self, cells: Vec<u64>, prefix: &mut Vec<usize>) {
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .map(|(i, _)| i);
        let Some(target) = target else {
            self.leaf(&cells);
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for v in VertexSet(cells[target]) {
            if let Some(&u) = tried.iter().find(|&&u| self.twins(u, v)) {
                // Swapping twins is an automorphism fixing everything else.
                let mut gen: Vec<usize> = (0..self.g.n()).collect();
                gen.swap(u, v);
                self.push_generator(gen);
                continue;
            }
            if self.equivalent_to_tried(prefix, &tried, v) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1 << v);
            child.push(cells[target] & !(1 << v));
            child.extend_from_slice(&cells[target + 1..]);
            self.refine(&mut child);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        let rows = self.g.rows();
        let mask = !((1u64 << u) | (1u64 << v));
        rows[u] & mask == rows[v] & mask
    }

    fn equivalent_to_tried(&self, prefix: &[usize], tried: &[usize], v: usize) -> bool {
        if tried.is_empty() {
            return false;
        }
        let mut uf = UnionFind::new(self.g.n());
        let mut any = false;
        for gen in &self.generators {
            if prefix.iter().all(|&p| gen[p] == p) {
                any = true;
                for (a, &b) in gen.iter().enumerate() {
                    uf.union(a, b);
                }
            }
        }
        any && tried.iter().any(|&u| uf.find(u) == uf.find(v))
    }

    fn push_generator(&mut self, gen: Vec<usize>) {
        if gen.iter().enumerate().any(|(i, &j)| i != j) && !self.generators.contains(&gen) {
            self.generators.push(gen);
        }
    }

    fn leaf(&mut self, cells: &[u64]) {
        let n = self.g.n();
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let cert: Vec<u64> = order
            .iter()
            .map(|&v| {
                self.g
                    .neighbors(v)
                    .iter()
                    .fold(0u64, |acc, w| acc | 1 << pos[w])
            })
            .collect();

        let matched = [&self.first, &self.best]
            .into_iter()
            .flatten()
            .find(|reference| reference.cert == cert)
            .map(|reference| {
                let mut gen = vec![0usize; n];
                for i in 0..n {
                    gen[reference.order[i]] = order[i];
                }
                gen
            });
        if let Some(gen) = matched {
            self.push_generator(gen);
            return;
        }
        let better = match &self.best {
            None => true,
            Some(b) => cert > b.cert,
        };
        if self.first.is_none() {
            self.first = Some(Leaf {
                cert: cert.clone(),
                order: order.clone(),
            });
        }
        if better {
            self.best = Some(Leaf { cert, order });
        }
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.0[v] != v {
            self.0[v] = self.0[self.0[v]];
            v = self.0[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_named, NamedGraph};
    use crate::graph::enumerate_graphs;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    fn named(s: &str) -> Graph {
        build_named(&s.parse::<NamedGraph>().unwrap()).unwrap()
    }

    fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(rng);
        p
    }

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == used.len() {
                out.push(cur.clone());
                return;
            }
            for v in 0..used.len() {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    go(cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = vec![];
        go(&mut vec![], &mut vec![false; n], &mut out);
        out
    }

    #[test]
    fn labelings_of_p3_agree() {
        let a = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, &[(0, 2), (2, 1)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn c4_and_claw_differ() {
        assert_ne!(
            canonical_form(&named("C4")).unwrap(),
            canonical_form(&named("K1,3")).unwrap()
        );
    }

    #[test]
    fn twenty_one_connected_graphs_on_five_vertices() {
        // Brute force over all 2^10 labeled graphs, deduplicated by key.
        let mut keys = HashSet::new();
        for mask in 0u32..1 << 10 {
            let mut edges = vec![];
            let mut k = 0;
            for j in 1..5 {
                for i in 0..j {
                    if mask >> k & 1 == 1 {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            let g = Graph::from_edges(5, &edges).unwrap();
            if g.is_connected() {
                keys.insert(canonical_form(&g).unwrap());
            }
        }
        assert_eq!(keys.len(), 21);
    }

    #[test]
    fn isomorphism_invariance_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..500 {
            let n = rng.random_range(0..=16);
            let p: f64 = rng.random_range(0.05..0.95);
            let mut edges = vec![];
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let h = g.permute(&random_perm(&mut rng, n));
            assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap(), "{g:?}");
        }
    }

    #[test]
    fn symmetric_graphs_are_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for name in ["petersen", "K8,8", "C16", "I16", "K16", "K3,3", "prism", "K2,2,2,2"] {
            let g = named(name);
            let key = canonical_form(&g).unwrap();
            for _ in 0..5 {
                let h = g.permute(&random_perm(&mut rng, g.n()));
                assert_eq!(canonical_form(&h).unwrap(), key, "{name}");
            }
        }
    }

    #[test]
    fn distinct_classes_get_distinct_keys() {
        // Exhaustive graph list from vertex augmentation: keys must be unique.
        for n in 1..=7 {
            let graphs = enumerate_graphs(n, false).unwrap();
            let keys: HashSet<_> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
            assert_eq!(keys.len(), graphs.len());
        }
    }

    #[test]
    fn orbits_match_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..120 {
            let n = rng.random_range(1..=7);
            let mut edges = vec![];
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(0.45) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let mut uf = UnionFind::new(n);
            for p in all_perms(n) {
                if g.permute(&p) == g {
                    for (v, &w) in p.iter().enumerate() {
                        uf.union(v, w);
                    }
                }
            }
            let orbits = automorphism_orbits(&g).unwrap();
            for o in orbits {
                let r = uf.find(o.first().unwrap());
                let expected: VertexSet = (0..n).filter(|&v| uf.find(v) == r).collect();
                assert_eq!(o, expected, "{g:?}");
            }
        }
    }

    #[test]
    fn rejects_large_graphs() {
        assert!(canonical_form(&Graph::empty(17).unwrap()).is_err());
    }
}
