use std::fmt;

use serde::{Serialize, Serializer};

use super::{Graph, VertexSet};

/// Length of a shortest cycle; forests have infinite girth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Shortest cycle length, by BFS from every vertex.
pub fn girth(g: &Graph) -> Girth {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);
    for root in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push(root);
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            if 2 * dist[v] + 1 >= best {
                break;
            }
            for w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push(w);
                } else if parent[v] != w {
                    best = best.min(dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// Calls `visit` once per induced cycle of length `len` with its vertices in
/// cyclic order starting at the smallest vertex. Stops early when `visit`
/// returns `false`.
fn for_each_induced_cycle(g: &Graph, len: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    assert!(len >= 3, "cycles have length at least 3");
    if len > g.n() {
        return;
    }
    let mut path = Vec::with_capacity(len);
    for start in 0..g.n() {
        // Every cycle vertex is larger than `start`.
        let allowed = VertexSet(!0u64 << start << 1).intersection(g.vertices());
        path.clear();
        path.push(start);
        if !extend(g, len, allowed, VertexSet::singleton(start), &mut path, &mut visit) {
            return;
        }
    }
}

fn extend(
    g: &Graph,
    len: usize,
    allowed: VertexSet,
    on_path: VertexSet,
    path: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    let start = path[0];
    let last = *path.last().unwrap();
    if path.len() == len {
        // Orient each cycle once: second vertex below the last.
        if g.has_edge(last, start) && path[1] < last {
            return visit(path);
        }
        return true;
    }
    // Interior path vertices other than `last` must not touch the new vertex;
    // `start` may only touch it when it closes the cycle.
    let interior = on_path.difference(VertexSet::singleton(last));
    for w in g.neighbors(last).intersection(allowed).difference(on_path) {
        let touches = g.neighbors(w).intersection(interior);
        let closes = path.len() + 1 == len;
        let ok = if path.len() == 1 {
            true
        } else if closes {
            touches == VertexSet::singleton(start)
        } else {
            touches.is_empty()
        };
        if !ok {
            continue;
        }
        path.push(w);
        let keep_going = extend(g, len, allowed, on_path.union(VertexSet::singleton(w)), path, visit);
        path.pop();
        if !keep_going {
            return false;
        }
    }
    true
}

/// All induced cycles of length `len`, each as a vertex set.
pub fn induced_cycles(g: &Graph, len: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for_each_induced_cycle(g, len, |c| {
        out.push(c.iter().copied().collect());
        true
    });
    out
}

/// True iff some `len` vertices induce exactly a cycle.
pub fn has_induced_cycle(g: &Graph, len: usize) -> bool {
    let mut found = false;
    for_each_induced_cycle(g, len, |_| {
        found = true;
        false
    });
    found
}

/// Induced `len`-cycles whose set of vertices at distance one is not
/// independent.
pub fn neighbor_connected_induced_cycles(g: &Graph, len: usize) -> Vec<VertexSet> {
    induced_cycles(g, len)
        .into_iter()
        .filter(|&c| {
            let mut ring = VertexSet::EMPTY;
            for v in c {
                ring = ring.union(g.neighbors(v));
            }
            !g.is_independent(ring.difference(c))
        })
        .collect()
}

/// Splits `s` into classes of vertices with identical open neighborhoods in
/// `g`. Each class is an independent module and no two classes can be
/// merged, so the block count is the minimum for such partitions. Blocks are
/// ordered by their smallest vertex.
pub fn maximal_independent_module_partition(g: &Graph, s: VertexSet) -> Vec<VertexSet> {
    let mut blocks: Vec<(u64, VertexSet)> = Vec::new();
    for v in s {
        let nv = g.rows()[v];
        match blocks.iter_mut().find(|(row, _)| *row == nv) {
            Some((_, block)) => block.insert(v),
            None => blocks.push((nv, VertexSet::singleton(v))),
        }
    }
    blocks.into_iter().map(|(_, b)| b).collect()
}

/// `g^k`: same vertices, `u ~ v` iff `1 <= dist(u, v) <= k`.
pub fn power_graph(g: &Graph, k: usize) -> Graph {
    assert!(k >= 1, "power must be at least 1");
    let rows = (0..g.n())
        .map(|v| {
            let mut reach = VertexSet::singleton(v);
            for _ in 0..k {
                let mut next = reach;
                for w in reach {
                    next = next.union(g.neighbors(w));
                }
                if next == reach {
                    break;
                }
                reach = next;
            }
            reach.difference(VertexSet::singleton(v)).0
        })
        .collect();
    Graph::from_rows_unchecked(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_named, NamedGraph};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn named(s: &str) -> Graph {
        build_named(&s.parse::<NamedGraph>().unwrap()).unwrap()
    }

    fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
        let p: f64 = rng.random_range(0.15..0.7);
        let mut edges = vec![];
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Shortest cycle through each root via BFS-tree edge pairs, minimized
    /// over roots, written independently of `girth`.
    fn girth_oracle(g: &Graph) -> Option<usize> {
        let n = g.n();
        let mut best: Option<usize> = None;
        for root in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut par = vec![usize::MAX; n];
            dist[root] = 0;
            let mut q = std::collections::VecDeque::from([root]);
            while let Some(v) = q.pop_front() {
                for w in g.neighbors(v) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        par[w] = v;
                        q.push_back(w);
                    }
                }
            }
            for (u, v) in g.edges() {
                if par[u] != v && par[v] != u && dist[u] != usize::MAX {
                    let c = dist[u] + dist[v] + 1;
                    best = Some(best.map_or(c, |b: usize| b.min(c)));
                }
            }
        }
        best
    }

    fn brute_induced_cycle(g: &Graph, len: usize) -> bool {
        let n = g.n();
        (0u64..1 << n).filter(|m| m.count_ones() as usize == len).any(|m| {
            let h = g.induced_subgraph(VertexSet(m));
            h.regularity() == Some(2) && h.is_connected()
        })
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&named("K4")), Girth::Finite(3));
        assert_eq!(girth(&named("C7")), Girth::Finite(7));
        assert_eq!(girth(&named("petersen")), Girth::Finite(5));
        assert_eq!(girth_oracle(&named("petersen")), Some(5));
        assert_eq!(girth(&named("P5")), Girth::Infinite);
        assert_eq!(girth(&named("K3,3")), Girth::Finite(4));
    }

    #[test]
    fn girth_matches_oracle_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..400 {
            let n = rng.random_range(1..=12);
            let g = random_graph(&mut rng, n);
            assert_eq!(girth(&g).finite(), girth_oracle(&g), "{g:?}");
        }
    }

    #[test]
    fn induced_cycle_examples() {
        assert!(has_induced_cycle(&named("K2,3"), 4));
        assert!(!has_induced_cycle(&named("K5"), 4));
        assert!(!has_induced_cycle(&named("petersen"), 4));
        assert_eq!(induced_cycles(&named("C6"), 6).len(), 1);
        assert_eq!(induced_cycles(&named("K4"), 3).len(), 4);
        // Petersen has twelve 5-cycles, all induced.
        assert_eq!(induced_cycles(&named("petersen"), 5).len(), 12);
    }

    #[test]
    fn induced_cycles_match_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..150 {
            let n = rng.random_range(3..=10);
            let g = random_graph(&mut rng, n);
            for len in 3..=n.min(7) {
                assert_eq!(has_induced_cycle(&g, len), brute_induced_cycle(&g, len), "{g:?} len {len}");
            }
        }
    }

    #[test]
    fn neighbor_connected_examples() {
        assert!(neighbor_connected_induced_cycles(&named("C5"), 5).is_empty());
        let pet = named("petersen");
        let all = induced_cycles(&pet, 5);
        assert_eq!(neighbor_connected_induced_cycles(&pet, 5), all);

        // C6 with a pendant leaf on every cycle vertex.
        let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend((0..6).map(|i| (i, i + 6)));
        let comb = Graph::from_edges(12, &edges).unwrap();
        assert_eq!(induced_cycles(&comb, 6).len(), 1);
        assert!(neighbor_connected_induced_cycles(&comb, 6).is_empty());
    }

    #[test]
    fn module_partition_examples() {
        let k4 = named("K4");
        assert_eq!(maximal_independent_module_partition(&k4, k4.neighbors(0)).len(), 3);
        let k33 = named("K3,3");
        let blocks = maximal_independent_module_partition(&k33, k33.neighbors(0));
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0].len(), 3);
        let star = named("K*3,3");
        let u = (0..6).find(|&v| star.degree(v) == 2).unwrap();
        let blocks = maximal_independent_module_partition(&star, star.neighbors(u));
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0].len(), 2);
    }

    #[test]
    fn module_partition_is_coarsest() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.random_range(1..=10);
            let g = random_graph(&mut rng, n);
            let s = VertexSet(rng.random::<u64>() & g.vertices().0);
            let blocks = maximal_independent_module_partition(&g, s);
            let mut union = VertexSet::EMPTY;
            for b in &blocks {
                assert!(g.is_independent(*b));
                let first = g.neighbors(b.first().unwrap());
                assert!(b.iter().all(|v| g.neighbors(v) == first));
                assert!(union.intersection(*b).is_empty());
                union = union.union(*b);
            }
            assert_eq!(union, s);
            for (i, a) in blocks.iter().enumerate() {
                for b in &blocks[i + 1..] {
                    let merged = a.union(*b);
                    let first = g.neighbors(merged.first().unwrap());
                    let mergeable = g.is_independent(merged) && merged.iter().all(|v| g.neighbors(v) == first);
                    assert!(!mergeable);
                }
            }
        }
    }

    #[test]
    fn power_graph_examples() {
        let c5 = named("C5");
        assert_eq!(power_graph(&c5, 2).edge_count(), 10);
        let c7sq = power_graph(&named("C7"), 2);
        assert_eq!(c7sq.regularity(), Some(4));
        let pet = named("petersen");
        assert_eq!(power_graph(&pet, 1), pet);
        // Petersen has diameter 2.
        assert_eq!(power_graph(&pet, 2).edge_count(), 45);
    }
}
