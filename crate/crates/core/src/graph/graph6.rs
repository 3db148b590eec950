//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix in column-major order, six bits per printable byte.

use super::{Graph, GraphError, MAX_ORDER};

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Parses one graph6 line. Surrounding whitespace and the optional
/// `>>graph6<<` header are accepted; padding bits are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let trimmed = text.trim_end_matches(['\n', '\r', ' ', '\t']);
    let (base, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    if body.is_empty() {
        return Err(err(base, "empty input"));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(err(base + i, format!("byte {b:#04x} outside the printable graph6 range")));
        }
    }

    let (n, mut pos) = if body[0] == 126 {
        if body.len() > 1 && body[1] == 126 {
            return Err(err(base + 1, "eight-byte size header not supported (n too large)"));
        }
        if body.len() < 4 {
            return Err(err(base + body.len(), "truncated extended size header"));
        }
        let n = body[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
        (n, 4)
    } else {
        ((body[0] - BIAS) as usize, 1)
    };
    if n > MAX_ORDER {
        return Err(err(base, format!("graph order {n} exceeds {MAX_ORDER}")));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let have = body.len() - pos;
    if have < need {
        return Err(err(
            base + body.len(),
            format!("truncated bit field: expected {need} bytes, found {have}"),
        ));
    }
    if have > need {
        return Err(err(base + pos + need, "trailing bytes after bit field"));
    }

    let mut rows = vec![0u64; n];
    let mut k = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = body[pos + k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
            if k == bits {
                break 'outer;
            }
        }
    }
    pos += need;
    debug_assert_eq!(pos, body.len());
    Ok(Graph::from_rows_unchecked(rows))
}

/// Encodes `g` as graph6 (no header, no trailing newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::with_capacity(4 + n * n / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent decoder: expands every byte into its six bits first, then
    /// walks the column-major upper triangle.
    fn reference_edges(text: &str) -> (usize, Vec<(usize, usize)>) {
        let b = text.as_bytes();
        let n = (b[0] - 63) as usize;
        let bits: Vec<bool> = b[1..]
            .iter()
            .flat_map(|&c| (0..6).rev().map(move |s| ((c - 63) >> s) & 1 == 1))
            .collect();
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bits[k] {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        edges.sort();
        (n, edges)
    }

    #[test]
    fn decodes_small_examples() {
        // 'D' = 68 -> n = 5; '?' = 0b000000, '{' = 60 = 0b111100.
        let g = parse_graph6("D?{").unwrap();
        let (n, edges) = reference_edges("D?{");
        assert_eq!(g.n(), n);
        assert_eq!(g.edges(), edges);
        assert_eq!(edges, vec![(0, 4), (1, 4), (2, 4), (3, 4)]);

        let k1 = parse_graph6("@").unwrap();
        assert_eq!(k1.n(), 1);
        assert_eq!(k1.edge_count(), 0);

        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(k4.n(), 4);
        assert_eq!(k4.edge_count(), 6);
    }

    #[test]
    fn encodes_small_examples() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(write_graph6(&k4), "C~");
        assert_eq!(write_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(write_graph6(&Graph::empty(0).unwrap()), "?");
    }

    #[test]
    fn extended_header_round_trip() {
        let mut edges = vec![];
        for v in 0..63 {
            edges.push((v, v + 1));
        }
        let g = Graph::from_edges(64, &edges).unwrap();
        let s = write_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn reports_errors_with_offsets() {
        match parse_graph6("D?") {
            Err(GraphError::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        match parse_graph6("C~~") {
            Err(GraphError::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        match parse_graph6("C\x01") {
            Err(GraphError::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        // n = 65 through the extended header.
        let too_big = "~?@@";
        match parse_graph6(too_big) {
            Err(GraphError::Graph6 { reason, .. }) => assert!(reason.contains("exceeds")),
            other => panic!("{other:?}"),
        }
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("~~").is_err());
    }

    #[test]
    fn accepts_header_and_newline() {
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap().edge_count(), 6);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=16).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
                let mut edges = vec![];
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn round_trip(g in arb_graph()) {
            let s = write_graph6(&g);
            prop_assert_eq!(parse_graph6(&s).unwrap(), g.clone());
            if g.n() > 0 {
                let (n, edges) = reference_edges(&s);
                prop_assert_eq!(n, g.n());
                prop_assert_eq!(edges, g.edges());
            }
        }
    }
}
