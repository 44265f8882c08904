//! Planarity testing with combinatorial embeddings.
//!
//! [`is_planar`] returns a [`PlaneEmbedding`] (a rotation system) or `None`.
//! The "all of S on one face" and outerplanarity tests reduce to planarity of
//! the graph plus an apex vertex adjacent to S.

mod lr;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

pub use lr::LrPlanarity;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("rotation at vertex {0} is not a permutation of its neighbours")]
    NotAPermutation(usize),
    #[error("rotation is asymmetric: {0} lists {1} but not vice versa")]
    Asymmetric(usize, usize),
    #[error("rotation covers {found} vertices, graph has {expected}")]
    WrongSize { expected: usize, found: usize },
    #[error("outer dart ({0}, {1}) is not an edge side")]
    BadOuterDart(usize, usize),
    #[error("rotation system is not planar (Euler characteristic mismatch)")]
    NotPlanar,
}

/// Cyclic neighbour order per vertex plus a designated outer face (named by
/// one of its darts).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneEmbedding {
    rotation: Vec<Vec<usize>>,
    outer: Option<(usize, usize)>,
}

/// A closed facial walk. `darts[i] = (u, v)` traverses edge `uv` from `u`;
/// consecutive darts chain head to tail. Isolated vertices get a face with a
/// single vertex and no darts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<(usize, usize)>,
    pub isolated: Option<usize>,
}

impl Face {
    /// Vertices in walk order (with repetitions for cut vertices).
    pub fn walk(&self) -> Vec<usize> {
        match self.isolated {
            Some(v) => vec![v],
            None => self.darts.iter().map(|d| d.0).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn contains_dart(&self, dart: (usize, usize)) -> bool {
        self.darts.contains(&dart)
    }

    /// Undirected edges on the boundary, canonical and deduplicated.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = self.darts.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        e.sort_unstable();
        e.dedup();
        e
    }

    pub fn vertices(&self) -> Vec<usize> {
        let mut v = self.walk();
        v.sort_unstable();
        v.dedup();
        v
    }
}

impl PlaneEmbedding {
    /// Wraps a rotation system after checking it is symmetric. Planarity of the
    /// rotation itself is checked by [`PlaneEmbedding::is_plane`].
    pub fn from_rotation(rotation: Vec<Vec<usize>>) -> Result<Self, EmbeddingError> {
        let n = rotation.len();
        for (v, list) in rotation.iter().enumerate() {
            let mut sorted = list.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) || sorted.iter().any(|&w| w >= n || w == v) {
                return Err(EmbeddingError::NotAPermutation(v));
            }
            for &w in list {
                if !rotation[w].contains(&v) {
                    return Err(EmbeddingError::Asymmetric(v, w));
                }
            }
        }
        let mut emb = PlaneEmbedding {
            rotation,
            outer: None,
        };
        emb.outer = emb.default_outer_dart();
        Ok(emb)
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// The underlying graph.
    pub fn to_graph(&self) -> Graph {
        let edges = self
            .rotation
            .iter()
            .enumerate()
            .flat_map(|(v, l)| l.iter().filter(move |&&w| v < w).map(move |&w| (v, w)));
        Graph::new(self.rotation.len(), edges).expect("rotation is a simple graph")
    }

    /// True iff the rotation lists are exactly the neighbourhoods of `g`.
    pub fn matches_graph(&self, g: &Graph) -> bool {
        if self.rotation.len() != g.vertex_count() {
            return false;
        }
        self.rotation.iter().enumerate().all(|(v, list)| {
            let mut s = list.clone();
            s.sort_unstable();
            s.as_slice() == g.neighbors(v)
        })
    }

    /// Neighbour following `u` in the rotation at `v`.
    fn successor(&self, v: usize, u: usize) -> usize {
        let list = &self.rotation[v];
        let i = list.iter().position(|&x| x == u).expect("dart exists");
        list[(i + 1) % list.len()]
    }

    /// Facial walks: dart `(u, v)` is followed by `(v, w)` with `w` the
    /// rotation successor of `u` at `v`.
    pub fn faces(&self) -> Vec<Face> {
        let mut seen: BTreeMap<(usize, usize), bool> = BTreeMap::new();
        for (v, list) in self.rotation.iter().enumerate() {
            for &w in list {
                seen.insert((v, w), false);
            }
        }
        let mut faces = Vec::new();
        for v in 0..self.rotation.len() {
            if self.rotation[v].is_empty() {
                faces.push(Face {
                    darts: Vec::new(),
                    isolated: Some(v),
                });
            }
        }
        let darts: Vec<(usize, usize)> = seen.keys().copied().collect();
        for start in darts {
            if seen[&start] {
                continue;
            }
            let mut walk = Vec::new();
            let mut d = start;
            loop {
                *seen.get_mut(&d).expect("dart") = true;
                walk.push(d);
                let (u, v) = d;
                d = (v, self.successor(v, u));
                if d == start {
                    break;
                }
            }
            faces.push(Face {
                darts: walk,
                isolated: None,
            });
        }
        faces
    }

    /// Connected components of the underlying graph (isolated vertices count).
    pub fn component_count(&self) -> usize {
        self.to_graph().component_count()
    }

    /// Euler's formula `V - E + F = 1 + C`, with `F` counting faces of the
    /// whole plane (each component's outer walk contributes to a single
    /// shared unbounded region).
    pub fn is_plane(&self) -> bool {
        let v = self.vertex_count() as i64;
        let e = self.edge_count() as i64;
        let c = self.component_count() as i64;
        let walks = self.faces().len() as i64;
        let plane_faces = walks - (c - 1);
        v - e + plane_faces == 1 + c
    }

    fn default_outer_dart(&self) -> Option<(usize, usize)> {
        self.rotation
            .iter()
            .enumerate()
            .flat_map(|(v, l)| l.iter().map(move |&w| (v, w)))
            .min()
    }

    pub fn outer_dart(&self) -> Option<(usize, usize)> {
        self.outer
    }

    pub fn set_outer_dart(&mut self, dart: (usize, usize)) -> Result<(), EmbeddingError> {
        if dart.0 >= self.rotation.len() || !self.rotation[dart.0].contains(&dart.1) {
            return Err(EmbeddingError::BadOuterDart(dart.0, dart.1));
        }
        self.outer = Some(dart);
        Ok(())
    }

    pub fn outer_face(&self) -> Option<Face> {
        let dart = self.outer?;
        self.faces().into_iter().find(|f| f.contains_dart(dart))
    }
}

#[derive(Serialize, Deserialize)]
struct EmbeddingJson {
    rotation: BTreeMap<usize, Vec<usize>>,
    outer_face: Option<Vec<usize>>,
}

impl Serialize for PlaneEmbedding {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        EmbeddingJson {
            rotation: self.rotation.iter().cloned().enumerate().collect(),
            outer_face: self.outer_face().map(|f| f.walk()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PlaneEmbedding {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = EmbeddingJson::deserialize(d)?;
        let n = raw.rotation.keys().next_back().map_or(0, |&k| k + 1);
        if raw.rotation.len() != n {
            return Err(D::Error::custom("rotation keys must be 0..n"));
        }
        let rotation: Vec<Vec<usize>> = raw.rotation.into_values().collect();
        let mut emb = PlaneEmbedding::from_rotation(rotation).map_err(D::Error::custom)?;
        if let Some(walk) = raw.outer_face {
            if walk.len() >= 2 {
                emb.set_outer_dart((walk[0], walk[1])).map_err(D::Error::custom)?;
            }
        }
        Ok(emb)
    }
}

/// Planar embedding of `g`, or `None` if `g` is not planar.
pub fn is_planar(g: &Graph) -> Option<PlaneEmbedding> {
    embed_edges(g.vertex_count(), g.edges())
}

/// [`is_planar`] over a raw edge list.
pub fn embed_edges(n: usize, edges: &[(usize, usize)]) -> Option<PlaneEmbedding> {
    let rotation = LrPlanarity::new().embed(n, edges)?;
    Some(PlaneEmbedding::from_rotation(rotation).expect("LR embedding is a rotation system"))
}

/// True iff `g` has a planar embedding with every vertex of `set` on one face.
pub fn common_face_test(g: &Graph, set: &[usize]) -> bool {
    if set.is_empty() {
        return is_planar(g).is_some();
    }
    let with_apex = g.with_apex(set);
    LrPlanarity::new().is_planar(with_apex.vertex_count(), with_apex.edges())
}

pub fn is_outerplanar(g: &Graph) -> bool {
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    common_face_test(g, &all)
}

/// An outerplanar embedding with every vertex on the designated outer face.
pub fn outerplanar_embedding(g: &Graph) -> Option<PlaneEmbedding> {
    let n = g.vertex_count();
    let all: Vec<usize> = (0..n).collect();
    let with_apex = g.with_apex(&all);
    let emb = is_planar(&with_apex)?;
    // Deleting the apex merges its incident faces into one face that sees
    // every vertex.
    let rotation: Vec<Vec<usize>> = emb.rotation()[..n]
        .iter()
        .map(|l| l.iter().copied().filter(|&w| w != n).collect())
        .collect();
    let mut out = PlaneEmbedding::from_rotation(rotation).expect("sub-rotation");
    if let Some(dart) = apex_face_dart(&emb, n) {
        out.set_outer_dart(dart).expect("dart survives apex deletion");
    }
    Some(out)
}

/// A dart of the face left behind after deleting `apex` from `emb`: the face
/// containing the angle between the apex and its rotation successor.
fn apex_face_dart(emb: &PlaneEmbedding, apex: usize) -> Option<(usize, usize)> {
    // Walk (apex -> x) then at x go to successor of apex; that dart lies in the
    // merged face once the apex is gone, unless it points back to the apex.
    let list = &emb.rotation()[apex];
    for &x in list {
        let rot = &emb.rotation()[x];
        let i = rot.iter().position(|&y| y == apex)?;
        for k in 1..rot.len() {
            let y = rot[(i + k) % rot.len()];
            if y != apex {
                return Some((x, y));
            }
        }
    }
    None
}
