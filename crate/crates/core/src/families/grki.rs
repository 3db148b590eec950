//! The regular graphs `G_{r,k,i}` built from `2i` copies of a complete
//! multipartite graph, with blocks of neighboring copies joined so that every
//! vertex reaches degree `r`.

use crate::graph::{Graph, GraphError, MAX_ORDER};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GrkiError {
    #[error("need i >= 2, got {0}")]
    TooFewCopies(usize),
    #[error("need 3 <= k <= r+1, got r={r} k={k}")]
    BadK { r: usize, k: usize },
    #[error("expected {expected} positive parts summing to r={r}, got {parts:?}")]
    BadParts { r: usize, expected: usize, parts: Vec<usize> },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Builds `G_{r,k,i}`.
///
/// Copies `H_0..H_{2i-1}` of `K_{r_1,..,r_{k-1}}`. For odd `j`, block 1 of
/// `H_j` is joined to block 1 of `H_{j-1}`, and block `l` (`2 <= l <= k-1`)
/// of `H_j` to block `l` of `H_{j+1}`, copy indices mod `2i`. Vertex
/// `(copy, block, index)` gets label `copy*r + r_1+..+r_{block-1} + index`.
pub fn build_g_rki(r: usize, k: usize, parts: &[usize], i: usize) -> Result<Graph, GrkiError> {
    if i < 2 {
        return Err(GrkiError::TooFewCopies(i));
    }
    if k < 3 || k > r + 1 {
        return Err(GrkiError::BadK { r, k });
    }
    if parts.len() != k - 1 || parts.contains(&0) || parts.iter().sum::<usize>() != r {
        return Err(GrkiError::BadParts {
            r,
            expected: k - 1,
            parts: parts.to_vec(),
        });
    }
    let copies = 2 * i;
    let n = copies * r;
    if n > MAX_ORDER {
        return Err(GraphError::TooLarge(n).into());
    }
    let mut start = vec![0; parts.len()];
    for b in 1..parts.len() {
        start[b] = start[b - 1] + parts[b - 1];
    }
    let block = |copy: usize, b: usize| {
        let base = copy * r + start[b];
        base..base + parts[b]
    };
    let mut edges = Vec::new();
    for copy in 0..copies {
        for b1 in 0..parts.len() {
            for b2 in b1 + 1..parts.len() {
                for u in block(copy, b1) {
                    edges.extend(block(copy, b2).map(|v| (u, v)));
                }
            }
        }
    }
    for j in (1..copies).step_by(2) {
        for b in 0..parts.len() {
            let other = if b == 0 { j - 1 } else { (j + 1) % copies };
            for u in block(j, b) {
                edges.extend(block(other, b).map(|v| (u, v)));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_regularity() {
        for (r, k, parts, i) in [
            (4, 3, vec![2, 2], 2),
            (3, 3, vec![1, 2], 2),
            (5, 6, vec![1; 5], 3),
            (4, 4, vec![1, 1, 2], 4),
        ] {
            let g = build_g_rki(r, k, &parts, i).unwrap();
            assert_eq!(g.n(), 2 * i * r);
            assert_eq!(g.regularity(), Some(r), "{r} {k} {parts:?} {i}");
            assert!(g.is_connected());
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(build_g_rki(4, 3, &[2, 2], 1), Err(GrkiError::TooFewCopies(1))));
        assert!(matches!(build_g_rki(4, 6, &[1; 5], 2), Err(GrkiError::BadK { .. })));
        assert!(matches!(build_g_rki(4, 3, &[1, 2], 2), Err(GrkiError::BadParts { .. })));
        assert!(matches!(build_g_rki(4, 3, &[4, 0], 2), Err(GrkiError::BadParts { .. })));
        assert!(build_g_rki(9, 4, &[3, 3, 3], 4).is_err());
    }
}
