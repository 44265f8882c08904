//! Simple undirected graphs and the constructions used throughout the crate.
//!
//! A [`Graph`] is immutable once built. Vertices are `0..vertex_count`, edges
//! are stored canonically (`u < v`, lexicographically sorted) so iteration is
//! deterministic.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("endpoint {vertex} out of range for {vertex_count} vertices")]
    OutOfRange { vertex: usize, vertex_count: usize },
    #[error("cycle needs at least 3 vertices, got {0}")]
    ShortCycle(usize),
    #[error("invalid partition: {0}")]
    Partition(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "EdgeJson", into = "EdgeJson")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

/// Wire form of a graph: `{"n": 3, "edges": [[0,1],[1,2]]}`.
#[derive(Serialize, Deserialize)]
struct EdgeJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<EdgeJson> for Graph {
    type Error = GraphError;

    fn try_from(raw: EdgeJson) -> Result<Self, Self::Error> {
        Graph::new(raw.n, raw.edges.iter().map(|e| (e[0], e[1])))
    }
}

impl From<Graph> for EdgeJson {
    fn from(g: Graph) -> Self {
        EdgeJson {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl Graph {
    /// Builds a graph, collapsing duplicate edges. Loops and out-of-range
    /// endpoints are rejected.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::OutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Self::from_canonical(vertex_count, set.into_iter().collect()))
    }

    fn from_canonical(n: usize, edges: Vec<(usize, usize)>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Graph {
        Self::from_canonical(n, Vec::new())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Number of connected components; isolated vertices count.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for s in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            parent[s] = usize::MAX;
            queue.clear();
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        let len = dist[v] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Graph with one edge removed (by index into [`Graph::edges`]).
    pub fn without_edge(&self, index: usize) -> Graph {
        let mut edges = self.edges.clone();
        edges.remove(index);
        Self::from_canonical(self.n, edges)
    }

    /// Graph with an extra isolated-free apex vertex joined to `targets`.
    pub fn with_apex(&self, targets: &[usize]) -> Graph {
        let apex = self.n;
        let mut g = self
            .edges
            .iter()
            .copied()
            .chain(targets.iter().map(|&t| (t, apex)))
            .collect::<Vec<_>>();
        g.sort_unstable();
        g.dedup();
        Self::from_canonical(self.n + 1, g)
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        Self::from_canonical(self.n, edges)
    }

    /// Subgraph induced by `keep` (vertices renumbered in the order given).
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u].min(index[v]), index[u].max(index[v])))
            .collect();
        edges.sort_unstable();
        Self::from_canonical(keep.len(), edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// `G + H`: disjoint copies plus every edge between them. `G` keeps its labels,
/// `H` is offset by `|V(G)|`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let off = g.n;
    let mut edges = g.edges.clone();
    for u in 0..g.n {
        for v in 0..h.n {
            edges.push((u, off + v));
        }
    }
    edges.extend(h.edges.iter().map(|&(u, v)| (u + off, v + off)));
    edges.sort_unstable();
    Graph::from_canonical(g.n + h.n, edges)
}

/// `G ∪ H` with the same labelling convention as [`join`].
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let off = g.n;
    let mut edges = g.edges.clone();
    edges.extend(h.edges.iter().map(|&(u, v)| (u + off, v + off)));
    Graph::from_canonical(g.n + h.n, edges)
}

/// `kG`.
pub fn disjoint_union_all(parts: &[Graph]) -> Graph {
    parts
        .iter()
        .fold(Graph::empty(0), |acc, p| disjoint_union(&acc, p))
}

pub fn copies(g: &Graph, k: usize) -> Graph {
    (0..k).fold(Graph::empty(0), |acc, _| disjoint_union(&acc, g))
}

/// Part sizes of a complete multipartite graph, kept non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartitionSpec {
    parts: Vec<usize>,
}

impl PartitionSpec {
    /// Sorts the given sizes non-increasingly; zero sizes and empty lists are
    /// rejected.
    pub fn new(parts: &[usize]) -> Result<Self, GraphError> {
        if parts.is_empty() {
            return Err(GraphError::Partition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(GraphError::Partition("zero-sized part".into()));
        }
        let mut parts = parts.to_vec();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(PartitionSpec { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn vertex_count(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for PartitionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "K_{{{}}}", s.join(","))
    }
}

pub fn complete_multipartite(spec: &PartitionSpec) -> Graph {
    let mut part_of = Vec::with_capacity(spec.vertex_count());
    for (i, &size) in spec.parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, size));
    }
    let n = part_of.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_canonical(n, edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StandardKind {
    Cycle,
    Path,
    Complete,
    Empty,
}

pub fn standard_graph(kind: StandardKind, n: usize) -> Result<Graph, GraphError> {
    let edges: Vec<(usize, usize)> = match kind {
        StandardKind::Cycle => {
            if n < 3 {
                return Err(GraphError::ShortCycle(n));
            }
            (0..n).map(|i| (i, (i + 1) % n)).collect()
        }
        StandardKind::Path => (1..n).map(|i| (i - 1, i)).collect(),
        StandardKind::Complete => (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect(),
        StandardKind::Empty => Vec::new(),
    };
    Graph::new(n, edges)
}

pub fn cycle(n: usize) -> Graph {
    standard_graph(StandardKind::Cycle, n).expect("cycle needs n >= 3")
}

pub fn path(n: usize) -> Graph {
    standard_graph(StandardKind::Path, n).expect("path is total")
}

pub fn complete(n: usize) -> Graph {
    standard_graph(StandardKind::Complete, n).expect("complete is total")
}

/// Shorthand for `complete_multipartite` from an unsorted part list.
pub fn multipartite(parts: &[usize]) -> Graph {
    complete_multipartite(&PartitionSpec::new(parts).expect("valid part sizes"))
}

/// True iff `pattern` is a (not necessarily induced) subgraph of `g`.
pub fn contains_subgraph(g: &Graph, pattern: &Graph) -> bool {
    find_subgraph(g, pattern).is_some()
}

/// An injective map `pattern vertex -> g vertex` carrying edges to edges.
pub fn find_subgraph(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    if pattern.n > g.n || pattern.edge_count() > g.edge_count() {
        return None;
    }
    // Match high-degree pattern vertices first, preferring ones adjacent to
    // vertices already placed.
    let mut order = Vec::with_capacity(pattern.n);
    let mut placed = vec![false; pattern.n];
    for _ in 0..pattern.n {
        let next = (0..pattern.n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let linked = pattern.adj[v].iter().filter(|&&w| placed[w]).count();
                (linked, pattern.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    let mut map = vec![usize::MAX; pattern.n];
    let mut used = vec![false; g.n];
    if extend_map(g, pattern, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend_map(
    g: &Graph,
    p: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&pv) = order.get(depth) else {
        return true;
    };
    for c in 0..g.n {
        if used[c] || g.degree(c) < p.degree(pv) {
            continue;
        }
        let fits = p.adj[pv]
            .iter()
            .all(|&pw| map[pw] == usize::MAX || g.has_edge(c, map[pw]));
        if !fits {
            continue;
        }
        map[pv] = c;
        used[c] = true;
        if extend_map(g, p, order, depth + 1, map, used) {
            return true;
        }
        map[pv] = usize::MAX;
        used[c] = false;
    }
    false
}

/// Canonical representative of the isomorphism class, by exhaustive
/// relabelling within degree classes. Meant for graphs of at most ~8 vertices.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.n;
    // Permutations only shuffle vertices within cells of the stable colour
    // refinement; cells are ordered by colour, which is label-independent.
    let colour = refined_colours(g);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| colour[v]);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match blocks.last_mut() {
            Some(b) if colour[b[0]] == colour[v] && g.degree(v) > 0 => b.push(v),
            // Isolated vertices are interchangeable: one singleton block each.
            _ => blocks.push(vec![v]),
        }
    }
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut arrangement = Vec::with_capacity(n);
    canon_rec(g, &blocks, 0, &mut arrangement, &mut best);
    Graph::from_canonical(n, best.unwrap_or_default())
}

/// Stable colour refinement starting from degrees. Colours are ranks of
/// label-free signatures, so isomorphic graphs get matching colourings.
fn refined_colours(g: &Graph) -> Vec<usize> {
    let n = g.n;
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = 0;
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = g.adj[v].iter().map(|&w| colour[w]).collect();
                around.sort_unstable();
                (colour[v], around)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        colour = signatures
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        if distinct.len() == classes {
            return colour;
        }
        classes = distinct.len();
    }
}

fn canon_rec(
    g: &Graph,
    blocks: &[Vec<usize>],
    i: usize,
    arrangement: &mut Vec<usize>,
    best: &mut Option<Vec<(usize, usize)>>,
) {
    if i == blocks.len() {
        let mut perm = vec![0; g.n];
        for (pos, &v) in arrangement.iter().enumerate() {
            perm[v] = pos;
        }
        let mut edges: Vec<_> = g
            .edges
            .iter()
            .map(|&(u, v)| (perm[u].min(perm[v]), perm[u].max(perm[v])))
            .collect();
        edges.sort_unstable();
        if best.as_ref().is_none_or(|b| edges < *b) {
            *best = Some(edges);
        }
        return;
    }
    let mut block = blocks[i].clone();
    permute_all(&mut block, 0, &mut |p| {
        let len = arrangement.len();
        arrangement.extend_from_slice(p);
        canon_rec(g, blocks, i + 1, arrangement, best);
        arrangement.truncate(len);
    });
}

/// Calls `f` on every permutation of `items[k..]` (prefix fixed).
fn permute_all(items: &mut [usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    if k + 1 >= items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_all(items, k + 1, f);
        items.swap(k, i);
    }
}

pub fn isomorphism_classes(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() < 32, "too many vertices for exhaustive enumeration");
    let mut seen = BTreeSet::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        let edges: Vec<_> = (0..pairs.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        let g = Graph::from_canonical(n, edges);
        seen.insert(canonical_form(&g).edges);
    }
    seen.into_iter()
        .map(|edges| Graph::from_canonical(n, edges))
        .collect()
}

/// Isomorphism classes on `n` vertices with at most `max_edges` edges, grown
/// one edge at a time (every class arises from a class with one edge fewer).
pub fn classes_with_edges_at_most(n: usize, max_edges: usize) -> Vec<Graph> {
    let mut all: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
    let mut level: BTreeSet<Vec<(usize, usize)>> = BTreeSet::from([Vec::new()]);
    for _ in 0..max_edges {
        all.extend(level.iter().cloned());
        let mut next = BTreeSet::new();
        for edges in &level {
            let g = Graph::from_canonical(n, edges.clone());
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        let mut grown = edges.clone();
                        grown.push((u, v));
                        grown.sort_unstable();
                        next.insert(canonical_form(&Graph::from_canonical(n, grown)).edges);
                    }
                }
            }
        }
        level = next;
    }
    all.extend(level);
    all.into_iter().map(|e| Graph::from_canonical(n, e)).collect()
}

/// All automorphisms of `g` as vertex permutations, identity first.
pub fn automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; g.n];
    let mut used = vec![false; g.n];
    auto_rec(g, 0, &mut map, &mut used, &mut out);
    out
}

fn auto_rec(
    g: &Graph,
    v: usize,
    map: &mut [usize],
    used: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    if v == g.n {
        out.push(map.to_vec());
        return;
    }
    for c in 0..g.n {
        if used[c] || g.degree(c) != g.degree(v) {
            continue;
        }
        let ok = (0..v).all(|u| g.has_edge(u, v) == g.has_edge(map[u], c));
        if !ok {
            continue;
        }
        map[v] = c;
        used[c] = true;
        auto_rec(g, v + 1, map, used, out);
        used[c] = false;
    }
    map[v] = usize::MAX;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs_brute(n: usize, g: &Graph) -> usize {
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| g.has_edge(u, v))
            .count()
    }

    #[test]
    fn edge_bounded_classes_agree_with_full_enumeration() {
        for n in 1..=5 {
            let full = isomorphism_classes(n);
            assert_eq!(classes_with_edges_at_most(n, n * (n - 1) / 2), full);
            let sparse = classes_with_edges_at_most(n, 3);
            assert_eq!(sparse.len(), full.iter().filter(|g| g.edge_count() <= 3).count());
        }
    }

    #[test]
    fn make_graph_examples() {
        let c3 = Graph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(c3.edge_count(), 3);
        assert_eq!(c3.edges(), &[(0, 1), (0, 2), (1, 2)]);
        let p1 = Graph::new(1, []).unwrap();
        assert_eq!((p1.vertex_count(), p1.edge_count()), (1, 0));
        let dedup = Graph::new(4, [(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(dedup.edge_count(), 1);
    }

    #[test]
    fn make_graph_rejects_bad_input() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::Loop(1)));
        assert!(matches!(
            Graph::new(3, [(0, 3)]),
            Err(GraphError::OutOfRange { vertex: 3, .. })
        ));
    }

    #[test]
    fn join_examples() {
        let k2 = join(&path(1), &path(1));
        assert_eq!(k2, complete(2));
        let k6 = join(&cycle(3), &cycle(3));
        assert_eq!(k6, complete(6));
        assert_eq!(k6.edge_count(), 15);
        let c4c4 = join(&cycle(4), &cycle(4));
        assert_eq!(c4c4.vertex_count(), 8);
        assert_eq!(c4c4.edge_count(), 4 + 4 + 4 * 4);
        assert_eq!(pairs_brute(8, &c4c4), 24);
        // H's labels are offset by |V(G)|.
        let j = join(&path(2), &path(2));
        assert!(j.has_edge(2, 3) && j.has_edge(0, 1));
    }

    #[test]
    fn union_examples() {
        let c3p1 = disjoint_union(&cycle(3), &path(1));
        assert_eq!((c3p1.vertex_count(), c3p1.edge_count()), (4, 3));
        let three_p2 = copies(&path(2), 3);
        assert_eq!((three_p2.vertex_count(), three_p2.edge_count()), (6, 3));
        assert_eq!(disjoint_union(&cycle(5), &Graph::empty(0)), cycle(5));
    }

    #[test]
    fn multipartite_examples() {
        assert_eq!(multipartite(&[1, 1, 1, 1, 1, 1]), complete(6));
        let k53 = multipartite(&[5, 3]);
        assert_eq!(k53.edge_count(), 15);
        let k431 = multipartite(&[1, 3, 4]);
        assert_eq!(k431.vertex_count(), 8);
        assert_eq!(k431.edge_count(), 4 * 3 + 4 + 3);
        assert_eq!(pairs_brute(8, &k431), 19);
        assert!(PartitionSpec::new(&[]).is_err());
        assert!(PartitionSpec::new(&[2, 0]).is_err());
        assert_eq!(PartitionSpec::new(&[1, 3, 2]).unwrap().parts(), &[3, 2, 1]);
    }

    #[test]
    fn standard_examples() {
        assert_eq!(cycle(4).edge_count(), 4);
        assert_eq!(path(3).edge_count(), 2);
        let e4 = standard_graph(StandardKind::Empty, 4).unwrap();
        assert_eq!((e4.vertex_count(), e4.edge_count()), (4, 0));
        assert_eq!(
            standard_graph(StandardKind::Cycle, 2),
            Err(GraphError::ShortCycle(2))
        );
    }

    #[test]
    fn subgraph_examples() {
        assert!(contains_subgraph(&complete(4), &cycle(3)));
        assert!(!contains_subgraph(&cycle(4), &cycle(3)));
        let diamond = multipartite(&[2, 1, 1]);
        let map = find_subgraph(&diamond, &path(3)).unwrap();
        for &(u, v) in path(3).edges() {
            assert!(diamond.has_edge(map[u], map[v]));
        }
    }

    #[test]
    fn girth_and_components() {
        assert_eq!(cycle(5).girth(), Some(5));
        assert_eq!(multipartite(&[3, 3]).girth(), Some(4));
        assert_eq!(path(4).girth(), None);
        assert_eq!(complete(4).girth(), Some(3));
        assert_eq!(copies(&path(2), 3).component_count(), 3);
    }

    #[test]
    fn class_counts_match_known_sequence() {
        // Unlabelled graphs on n vertices: 1, 2, 4, 11, 34.
        let counts: Vec<usize> = (1..=5).map(|n| isomorphism_classes(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn automorphism_group_sizes() {
        assert_eq!(automorphisms(&cycle(5)).len(), 10);
        assert_eq!(automorphisms(&multipartite(&[3, 2])).len(), 12);
        assert_eq!(automorphisms(&complete(4)).len(), 24);
    }
}
