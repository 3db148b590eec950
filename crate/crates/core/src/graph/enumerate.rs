//! Exhaustive generation of small graphs, one representative per
//! isomorphism class.

use std::collections::HashSet;

use super::canon::canonical_pair;
use super::{CanonicalKey, Graph, GraphError, VertexSet};
#[cfg(test)]
use super::canonical_form;

/// Largest order for [`enumerate_regular_graphs`].
pub const REGULAR_MAX_ORDER: usize = 14;
/// Largest order for [`enumerate_graphs`].
pub const GRAPHS_MAX_ORDER: usize = 9;

fn unsupported(op: &'static str, n: usize, max: usize) -> GraphError {
    GraphError::Unsupported { op, n, max }
}

/// Collects canonical representatives, deduplicated by key, sorted by key.
#[derive(Default)]
struct Dedup {
    seen: HashSet<CanonicalKey>,
    out: Vec<(CanonicalKey, Graph)>,
}

impl Dedup {
    fn offer(&mut self, g: &Graph) -> Result<(), GraphError> {
        let (key, canon) = canonical_pair(g)?;
        if self.seen.insert(key.clone()) {
            self.out.push((key, canon));
        }
        Ok(())
    }

    fn finish(mut self) -> Vec<Graph> {
        self.out.sort_by(|a, b| a.0.cmp(&b.0));
        self.out.into_iter().map(|(_, g)| g).collect()
    }
}

/// All graphs on `n` vertices up to isomorphism, by vertex augmentation.
///
/// Connected graphs always have a vertex whose removal leaves them
/// connected, so the connected variant only extends connected graphs.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>, GraphError> {
    if n > GRAPHS_MAX_ORDER {
        return Err(unsupported("enumerate_graphs", n, GRAPHS_MAX_ORDER));
    }
    if n == 0 {
        return Ok(vec![Graph::empty(0)?]);
    }
    let mut level = vec![Graph::empty(1)?];
    for m in 1..n {
        let mut next = Dedup::default();
        let first_mask = if connected_only { 1u64 } else { 0 };
        for g in &level {
            for mask in first_mask..1u64 << m {
                next.offer(&g.with_vertex(VertexSet(mask))?)?;
            }
        }
        level = next.finish();
    }
    Ok(level)
}

/// All `r`-regular graphs on `n` vertices up to isomorphism.
///
/// Vertices are completed in index order; vertex `v` picks its remaining
/// neighbors among later vertices. Later vertices with identical adjacency
/// rows are interchangeable at that point, so only the lowest-indexed members
/// of each such class are chosen. Survivors are deduplicated by canonical
/// form.
pub fn enumerate_regular_graphs(r: usize, n: usize, connected_only: bool) -> Result<Vec<Graph>, GraphError> {
    if n > REGULAR_MAX_ORDER {
        return Err(unsupported("enumerate_regular_graphs", n, REGULAR_MAX_ORDER));
    }
    if n == 0 || r >= n || (r * n) % 2 == 1 {
        return Ok(Vec::new());
    }
    let mut gen = RegularGen {
        r,
        n,
        rows: vec![0; n],
        connected_only,
        found: Dedup::default(),
    };
    gen.complete_vertex(0)?;
    Ok(gen.found.finish())
}

struct RegularGen {
    r: usize,
    n: usize,
    rows: Vec<u64>,
    connected_only: bool,
    found: Dedup,
}

impl RegularGen {
    fn deg(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    fn complete_vertex(&mut self, v: usize) -> Result<(), GraphError> {
        if v == self.n {
            let g = Graph::from_rows_unchecked(self.rows.clone());
            if !self.connected_only || g.is_connected() {
                self.found.offer(&g)?;
            }
            return Ok(());
        }
        let need = self.r - self.deg(v);
        let open: Vec<usize> = (v + 1..self.n).filter(|&w| self.deg(w) < self.r).collect();
        if open.len() < need {
            return Ok(());
        }
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &w in &open {
            match classes.iter_mut().find(|c| self.rows[c[0]] == self.rows[w]) {
                Some(c) => c.push(w),
                None => classes.push(vec![w]),
            }
        }
        let mut counts = vec![0usize; classes.len()];
        self.choose(v, &classes, &mut counts, 0, need)
    }

    fn choose(
        &mut self,
        v: usize,
        classes: &[Vec<usize>],
        counts: &mut Vec<usize>,
        idx: usize,
        left: usize,
    ) -> Result<(), GraphError> {
        if left == 0 {
            let chosen: Vec<usize> = classes
                .iter()
                .zip(counts.iter())
                .flat_map(|(c, &k)| c[..k].iter().copied())
                .collect();
            for &w in &chosen {
                self.rows[v] |= 1 << w;
                self.rows[w] |= 1 << v;
            }
            if self.feasible_after(v) {
                self.complete_vertex(v + 1)?;
            }
            for &w in &chosen {
                self.rows[v] &= !(1 << w);
                self.rows[w] &= !(1 << v);
            }
            return Ok(());
        }
        if idx == classes.len() {
            return Ok(());
        }
        let remaining_capacity: usize = classes[idx..].iter().map(Vec::len).sum();
        if remaining_capacity < left {
            return Ok(());
        }
        for k in (0..=classes[idx].len().min(left)).rev() {
            counts[idx] = k;
            self.choose(v, classes, counts, idx + 1, left - k)?;
        }
        counts[idx] = 0;
        Ok(())
    }

    /// Every later vertex must still be able to reach degree `r` using the
    /// other unfinished later vertices.
    fn feasible_after(&self, v: usize) -> bool {
        let open: Vec<usize> = (v + 1..self.n).filter(|&w| self.deg(w) < self.r).collect();
        open.iter()
            .all(|&w| self.r - self.deg(w) < open.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts_match_known_values() {
        let all = [1, 1, 2, 4, 11, 34, 156, 1044];
        let connected = [1, 1, 1, 2, 6, 21, 112, 853];
        for n in 0..=7 {
            assert_eq!(enumerate_graphs(n, false).unwrap().len(), all[n], "all n={n}");
            assert_eq!(enumerate_graphs(n, true).unwrap().len(), connected[n], "connected n={n}");
        }
    }

    #[test]
    fn regular_examples() {
        let k4 = enumerate_regular_graphs(3, 4, true).unwrap();
        assert_eq!(k4.len(), 1);
        assert_eq!(k4[0].edge_count(), 6);
        assert!(enumerate_regular_graphs(3, 5, true).unwrap().is_empty());
        let six = enumerate_regular_graphs(3, 6, true).unwrap();
        assert_eq!(six.len(), 2);
        assert!(six.iter().any(|g| g.is_complete_bipartite()));
        assert!(six.iter().any(|g| crate::graph::girth(g) == crate::graph::Girth::Finite(3)));
    }

    #[test]
    fn regular_matches_filtered_exhaustive_list() {
        for n in 1..=8 {
            let all = enumerate_graphs(n, false).unwrap();
            for r in 0..n {
                for connected in [false, true] {
                    let mut expected: Vec<CanonicalKey> = all
                        .iter()
                        .filter(|g| g.regularity() == Some(r) && (!connected || g.is_connected()))
                        .map(|g| canonical_form(g).unwrap())
                        .collect();
                    expected.sort();
                    let got: Vec<CanonicalKey> = enumerate_regular_graphs(r, n, connected)
                        .unwrap()
                        .iter()
                        .map(|g| canonical_form(g).unwrap())
                        .collect();
                    assert_eq!(got, expected, "r={r} n={n} connected={connected}");
                }
            }
        }
    }

    #[test]
    fn rejects_out_of_range_orders() {
        assert!(enumerate_regular_graphs(3, 16, true).is_err());
        assert!(enumerate_graphs(10, true).is_err());
    }
}
