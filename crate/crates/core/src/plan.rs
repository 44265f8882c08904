//! Crossing plans and the planarizations they induce.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::planarity::{self, PlaneEmbedding};

/// An undirected edge as a canonical vertex pair.
pub type Edge = (usize, usize);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlanError {
    #[error("edge {0:?} is not in the graph")]
    UnknownEdge(Edge),
    #[error("edges {0:?} and {1:?} share an endpoint")]
    AdjacentPair(Edge, Edge),
    #[error("edge {0:?} is crossed more than once")]
    EdgeReused(Edge),
    #[error("pair {0:?} x {1:?} listed twice")]
    RepeatedPair(Edge, Edge),
    #[error("crossing order for edge {0:?} does not match its crossing partners")]
    BadOrder(Edge),
}

fn canon(e: Edge) -> Edge {
    (e.0.min(e.1), e.0.max(e.1))
}

fn canon_pair(a: Edge, b: Edge) -> (Edge, Edge) {
    let (a, b) = (canon(a), canon(b));
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

pub(crate) fn independent(a: Edge, b: Edge) -> bool {
    a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1
}

/// A set of edge pairs drawn as crossing. Each edge is in at most one pair and
/// paired edges never share an endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CrossingPlan {
    pairs: Vec<(Edge, Edge)>,
}

impl CrossingPlan {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Canonicalizes the pairs (each edge `u < v`, smaller edge first, pairs
    /// sorted). Validity against a graph is checked by [`CrossingPlan::validate`].
    pub fn new<I: IntoIterator<Item = (Edge, Edge)>>(pairs: I) -> Self {
        let mut pairs: Vec<_> = pairs.into_iter().map(|(a, b)| canon_pair(a, b)).collect();
        pairs.sort_unstable();
        CrossingPlan { pairs }
    }

    pub fn pairs(&self) -> &[(Edge, Edge)] {
        &self.pairs
    }

    /// Number of crossings `c`.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn validate(&self, g: &Graph) -> Result<(), PlanError> {
        let mut used = BTreeSet::new();
        for &(a, b) in &self.pairs {
            for e in [a, b] {
                if !g.has_edge(e.0, e.1) {
                    return Err(PlanError::UnknownEdge(e));
                }
            }
            if !independent(a, b) {
                return Err(PlanError::AdjacentPair(a, b));
            }
            for e in [a, b] {
                if !used.insert(e) {
                    return Err(PlanError::EdgeReused(e));
                }
            }
        }
        Ok(())
    }

    /// Edges not in any pair (the uncrossed set).
    pub fn uncrossed_edges(&self, g: &Graph) -> Vec<Edge> {
        let crossed: BTreeSet<Edge> = self.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        g.edges().iter().copied().filter(|e| !crossed.contains(e)).collect()
    }
}

impl fmt::Display for CrossingPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|(a, b)| format!("{}{}x{}{}", a.0, a.1, b.0, b.1))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// The plane graph obtained by turning every crossing into a degree-4 vertex.
/// True vertices keep their labels; false vertex `n + i` stands for the i-th
/// crossing (canonical pair order for [`planarize`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Planarization {
    pub graph: Graph,
    pub true_vertices: usize,
    pub embedding: Option<PlaneEmbedding>,
}

impl Planarization {
    pub fn is_true(&self, v: usize) -> bool {
        v < self.true_vertices
    }

    pub fn false_vertices(&self) -> std::ops::Range<usize> {
        self.true_vertices..self.graph.vertex_count()
    }

    pub fn crossing_count(&self) -> usize {
        self.graph.vertex_count() - self.true_vertices
    }

    /// Every false vertex has degree 4 and no two false vertices are adjacent.
    pub fn false_vertices_well_formed(&self) -> bool {
        self.false_vertices().all(|z| {
            self.graph.degree(z) == 4 && self.graph.neighbors(z).iter().all(|&w| self.is_true(w))
        })
    }

    /// Computes and stores an embedding; returns whether the graph is planar.
    pub fn embed(&mut self) -> bool {
        self.embedding = planarity::is_planar(&self.graph);
        self.embedding.is_some()
    }
}

pub fn planarize(g: &Graph, plan: &CrossingPlan) -> Result<Planarization, PlanError> {
    plan.validate(g)?;
    let n = g.vertex_count();
    let mut edges = plan.uncrossed_edges(g);
    for (i, &(a, b)) in plan.pairs.iter().enumerate() {
        let z = n + i;
        edges.extend([(a.0, z), (a.1, z), (b.0, z), (b.1, z)]);
    }
    let graph = Graph::new(n + plan.len(), edges).expect("planarization edges are valid");
    Ok(Planarization {
        graph,
        true_vertices: n,
        embedding: None,
    })
}

/// A certified 1-planar drawing: the plan plus an embedding of its
/// planarization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OnePlanarWitness {
    pub plan: CrossingPlan,
    pub embedding: PlaneEmbedding,
    pub c: usize,
}

impl OnePlanarWitness {
    pub fn new(plan: CrossingPlan, embedding: PlaneEmbedding) -> Self {
        let c = plan.len();
        OnePlanarWitness { plan, embedding, c }
    }

    /// Planarizes `g` with this plan and embeds it; `None` if not planar.
    pub fn from_plan(g: &Graph, plan: CrossingPlan) -> Option<Self> {
        let mut p = planarize(g, &plan).ok()?;
        if !p.embed() {
            return None;
        }
        Some(Self::new(plan, p.embedding.expect("embedded")))
    }
}

/// Re-checks a witness from scratch: the plan is a valid crossing plan for
/// `g`, and the shipped embedding is a plane rotation system of exactly the
/// planarization.
pub fn validate_witness(g: &Graph, w: &OnePlanarWitness) -> bool {
    let Ok(p) = planarize(g, &w.plan) else {
        return false;
    };
    w.c == w.plan.len()
        && p.false_vertices_well_formed()
        && w.embedding.matches_graph(&p.graph)
        && w.embedding.is_plane()
}

/// [`validate_witness`] plus the outer condition: every true vertex can share
/// one face of the planarization.
pub fn validate_outer_witness(g: &Graph, w: &OnePlanarWitness) -> bool {
    if !validate_witness(g, w) {
        return false;
    }
    let p = planarize(g, &w.plan).expect("validated");
    let trues: Vec<usize> = (0..g.vertex_count()).collect();
    planarity::common_face_test(&p.graph, &trues)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};

    #[test]
    fn empty_plan_is_identity() {
        let p = planarize(&cycle(4), &CrossingPlan::empty()).unwrap();
        assert_eq!(p.graph, cycle(4));
        assert_eq!(p.crossing_count(), 0);
    }

    #[test]
    fn k4_diagonal_pair_counts() {
        let k4 = complete(4);
        let plan = CrossingPlan::new([((0, 1), (2, 3))]);
        let p = planarize(&k4, &plan).unwrap();
        assert_eq!(p.graph.vertex_count(), 5);
        assert_eq!(p.graph.edge_count(), 6 + 2);
        assert_eq!(p.graph.degree(4), 4);
        assert!(p.false_vertices_well_formed());
    }

    #[test]
    fn k5_single_pair_planarizes() {
        let k5 = complete(5);
        let plan = CrossingPlan::new([((0, 2), (1, 3))]);
        let mut p = planarize(&k5, &plan).unwrap();
        assert!(p.embed());
        assert!(!planarize(&k5, &CrossingPlan::empty()).unwrap().embed());
    }

    #[test]
    fn plan_errors() {
        let k4 = complete(4);
        assert_eq!(
            planarize(&cycle(4), &CrossingPlan::new([((0, 2), (1, 3))])).unwrap_err(),
            PlanError::UnknownEdge((0, 2))
        );
        assert!(matches!(
            planarize(&k4, &CrossingPlan::new([((0, 1), (1, 2))])),
            Err(PlanError::AdjacentPair(..))
        ));
        let k6 = complete(6);
        assert!(matches!(
            planarize(&k6, &CrossingPlan::new([((0, 1), (2, 3)), ((0, 1), (4, 5))])),
            Err(PlanError::EdgeReused((0, 1)))
        ));
    }

    #[test]
    fn witness_validation() {
        let c4 = cycle(4);
        let w = OnePlanarWitness::from_plan(&c4, CrossingPlan::empty()).unwrap();
        assert!(validate_witness(&c4, &w));
        let k5 = complete(5);
        assert!(OnePlanarWitness::from_plan(&k5, CrossingPlan::empty()).is_none());
        // A witness for one graph does not validate for another.
        assert!(!validate_witness(&complete(4), &w));
        let mut bad = w.clone();
        bad.c = 3;
        assert!(!validate_witness(&c4, &bad));
    }

    #[test]
    fn witness_json_shape() {
        let k4 = complete(4);
        let w = OnePlanarWitness::from_plan(&k4, CrossingPlan::new([((0, 2), (1, 3))])).unwrap();
        let v: serde_json::Value = serde_json::to_value(&w).unwrap();
        assert_eq!(v["c"], 1);
        assert_eq!(v["plan"][0], serde_json::json!([[0, 2], [1, 3]]));
        assert!(v["embedding"]["rotation"].is_object());
        let back: OnePlanarWitness = serde_json::from_value(v).unwrap();
        assert!(validate_witness(&k4, &back));
    }
}
