//! graph6, edge-JSON and DOT encodings.
//!
//! graph6 follows the usual nauty layout: `N(n)` followed by the upper
//! triangle of the adjacency matrix, column by column, packed six bits per
//! printable byte (offset 63).

use crate::graph::{Graph, GraphError};
use crate::plan::{Edge, OnePlanarWitness};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeJson,
}

pub fn encode(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => to_graph6(g),
        Format::EdgeJson => to_edge_json(g),
    }
}

pub fn decode(payload: &str, format: Format) -> Result<Graph, GraphError> {
    match format {
        Format::Graph6 => from_graph6(payload),
        Format::EdgeJson => from_edge_json(payload),
    }
}

/// Picks the format from the first non-blank byte: `{` means edge-JSON.
pub fn decode_auto(payload: &str) -> Result<Graph, GraphError> {
    if payload.trim_start().starts_with('{') {
        from_edge_json(payload)
    } else {
        from_graph6(payload)
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
    let err = |offset: usize, message: &str| GraphError::Parse {
        offset,
        message: message.to_string(),
    };
    let mut start = 0;
    let mut bytes = text.as_bytes();
    if bytes.starts_with(HEADER.as_bytes()) {
        start = HEADER.len();
        bytes = &bytes[start..];
    }
    while let Some((&last, rest)) = bytes.split_last() {
        if last.is_ascii_whitespace() {
            bytes = rest;
        } else {
            break;
        }
    }
    if bytes.is_empty() {
        return Err(err(start, "empty graph6 string"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(start + i, "byte outside graph6 range 63..=126"));
        }
    }
    let (n, body_at) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(err(start + bytes.len(), "truncated vertex count"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(err(start + bytes.len(), "truncated vertex count"));
        }
        let n = bytes[2..8]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 8)
    };
    let bit_count = n * n.saturating_sub(1) / 2;
    let needed = bit_count.div_ceil(6);
    let body = &bytes[body_at..];
    if body.len() != needed {
        let at = start + body_at + body.len().min(needed);
        return Err(err(
            at,
            &format!("expected {needed} adjacency bytes, found {}", body.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

pub fn to_edge_json(g: &Graph) -> String {
    serde_json::to_string(g).expect("graph serializes")
}

pub fn from_edge_json(text: &str) -> Result<Graph, GraphError> {
    serde_json::from_str(text).map_err(|e| {
        // serde_json reports line/column; convert to a byte offset.
        let offset = text
            .split_inclusive('\n')
            .take(e.line().saturating_sub(1))
            .map(str::len)
            .sum::<usize>()
            + e.column().saturating_sub(1);
        GraphError::Parse {
            offset,
            message: e.to_string(),
        }
    })
}

/// Graphviz source. With a witness the planarization is drawn: crossings
/// become square vertices `x0, x1, ..` joined to the four endpoints.
pub fn to_dot(g: &Graph, witness: Option<&OnePlanarWitness>) -> String {
    let mut s = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.vertex_count() {
        s += &format!("  {v};\n");
    }
    let pairs = witness.map_or(&[][..], |w| w.plan.pairs());
    let crossed: Vec<Edge> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    for &(u, v) in g.edges() {
        if !crossed.contains(&(u, v)) {
            s += &format!("  {u} -- {v};\n");
        }
    }
    for (i, &((a, b), (c, d))) in pairs.iter().enumerate() {
        s += &format!("  x{i} [shape=square, label=\"\", width=0.15];\n");
        for end in [a, b, c, d] {
            s += &format!("  {end} -- x{i};\n");
        }
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, isomorphism_classes, path};
    use proptest::prelude::*;

    #[test]
    fn dot_draws_crossings_as_squares() {
        let k5 = complete(5);
        let w = crate::solver::is_one_planar(&k5, crate::solver::SearchBudget::default())
            .witness
            .unwrap();
        let dot = to_dot(&k5, Some(&w));
        assert_eq!(dot.matches("shape=square").count(), 1);
        assert_eq!(dot.matches(" -- ").count(), 10 + 2);
        assert_eq!(to_dot(&cycle(4), None).matches(" -- ").count(), 4);
    }

    #[test]
    fn graph6_k2() {
        assert_eq!(to_graph6(&complete(2)), "A_");
        assert_eq!(from_graph6("A_").unwrap(), complete(2));
    }

    #[test]
    fn graph6_known_strings() {
        // K4: all six bits set. C4 (0-1-2-3-0): bits 1,0,1,1,0,1 -> 45 + 63 = 'l'.
        assert_eq!(to_graph6(&complete(4)), "C~");
        assert_eq!(to_graph6(&cycle(4)), "Cl");
        assert_eq!(to_graph6(&path(1)), "@");
        assert_eq!(from_graph6(">>graph6<<C~\n").unwrap(), complete(4));
    }

    #[test]
    fn graph6_errors_carry_offsets() {
        match from_graph6("garbage") {
            Err(GraphError::Parse { offset, .. }) => assert!(offset <= 7),
            other => panic!("expected parse error, got {other:?}"),
        }
        match from_graph6("C~~") {
            Err(GraphError::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        match from_graph6("C\x10") {
            Err(GraphError::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn edge_json_decode() {
        let g = from_edge_json(r#"{"n": 3, "edges": [[0,1],[1,2],[2,0]]}"#).unwrap();
        assert_eq!(g, cycle(3));
        assert!(matches!(
            from_edge_json("garbage"),
            Err(GraphError::Parse { offset: 0, .. })
        ));
        assert!(from_edge_json(r#"{"n": 2, "edges": [[0,2]]}"#).is_err());
        assert_eq!(decode_auto(" {\"n\":2,\"edges\":[[0,1]]}").unwrap(), complete(2));
        assert_eq!(decode_auto("A_\n").unwrap(), complete(2));
    }

    #[test]
    fn round_trip_all_small_classes() {
        for n in 0..=5 {
            let classes = if n == 0 { vec![Graph::empty(0)] } else { isomorphism_classes(n) };
            for g in classes {
                assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
                assert_eq!(from_edge_json(&to_edge_json(&g)).unwrap(), g);
            }
        }
    }

    #[test]
    fn round_trip_every_labelled_graph_up_to_6() {
        for n in 0..=6usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u32..1 << pairs.len() {
                let edges = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]);
                let g = Graph::new(n, edges).unwrap();
                assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
                assert_eq!(from_edge_json(&to_edge_json(&g)).unwrap(), g);
            }
        }
    }

    #[test]
    fn large_vertex_count_header() {
        let g = Graph::new(70, [(0, 69), (3, 4)]).unwrap();
        let s = to_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    proptest! {
        #[test]
        fn round_trip_labelled_up_to_8(n in 0usize..=8, mask in any::<u32>()) {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let edges: Vec<_> = pairs.iter().enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::new(n, edges).unwrap();
            prop_assert_eq!(decode(&encode(&g, Format::Graph6), Format::Graph6).unwrap(), g.clone());
            prop_assert_eq!(decode(&encode(&g, Format::EdgeJson), Format::EdgeJson).unwrap(), g);
        }
    }
}
