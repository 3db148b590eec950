//! Induced subgraph matching by backtracking over bitset candidate sets.

use crate::graph::{Graph, VertexSet};

/// Pattern vertices in a connected-first order: each next vertex is the one
/// with most already-placed neighbors (ties: higher degree, lower index).
fn match_order(p: &Graph) -> Vec<usize> {
    let n = p.n();
    let mut placed = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| {
                (
                    p.neighbors(v).intersection(placed).len(),
                    p.degree(v),
                    usize::MAX - v,
                )
            })
            .expect("unplaced vertex remains");
        placed.insert(next);
        order.push(next);
    }
    order
}

/// An injective map from pattern vertices to host vertices preserving both
/// adjacency and non-adjacency, if one exists.
pub fn find_induced(pattern: &Graph, host: &Graph) -> Option<Vec<usize>> {
    if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return None;
    }
    let order = match_order(pattern);
    let host_deg: Vec<usize> = (0..host.n()).map(|v| host.degree(v)).collect();
    let mut map = vec![usize::MAX; pattern.n()];
    let mut used = VertexSet::EMPTY;
    if extend(pattern, host, &order, &host_deg, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

pub fn is_induced_subgraph(pattern: &Graph, host: &Graph) -> bool {
    find_induced(pattern, host).is_some()
}

fn extend(
    p: &Graph,
    h: &Graph,
    order: &[usize],
    host_deg: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    let mut cands = h.vertices().difference(*used);
    for &q in &order[..depth] {
        let image = h.neighbors(map[q]);
        cands = if p.has_edge(v, q) {
            cands.intersection(image)
        } else {
            cands.difference(image)
        };
    }
    let need = p.degree(v);
    for c in cands {
        if host_deg[c] < need {
            continue;
        }
        map[v] = c;
        used.insert(c);
        if extend(p, h, order, host_deg, depth + 1, map, used) {
            return true;
        }
        used.remove(c);
    }
    map[v] = usize::MAX;
    false
}
