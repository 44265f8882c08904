//! Deciding 1-planarity of joins `G + H`.
//!
//! When both factors have at least three vertices the answer is decided by
//! subgraph majorization against four fixed pairs. When one factor has at
//! most two vertices (`P1`, `2P1` or `P2`) a battery of necessary conditions
//! runs first and the exact solver decides the rest.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::graph::{copies, cycle, find_subgraph, join, multipartite, path, Graph};
use crate::plan::{planarize, validate_witness, CrossingPlan, Edge, OnePlanarWitness};
use crate::planarity::{self, Face, PlaneEmbedding};
use crate::solver::{self, Answer, SearchBudget, Verdict};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JoinError {
    #[error("factor has {0} vertices; majorization needs at least 3")]
    FactorTooSmall(usize),
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("construction failed: {0}")]
    Construction(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MajorPair {
    pub name: &'static str,
    pub left: Graph,
    pub right: Graph,
}

/// The four maximal pairs `[A, B]` with `A + B` 1-planar and both sides on at
/// least three vertices.
pub fn major_pairs() -> &'static [MajorPair] {
    static PAIRS: OnceLock<Vec<MajorPair>> = OnceLock::new();
    PAIRS.get_or_init(|| {
        vec![
            MajorPair {
                name: "[C3 u C3, C3]",
                left: copies(&cycle(3), 2),
                right: cycle(3),
            },
            MajorPair {
                name: "[C4, C4]",
                left: cycle(4),
                right: cycle(4),
            },
            MajorPair {
                name: "[C4, C3]",
                left: cycle(4),
                right: cycle(3),
            },
            MajorPair {
                name: "[K_{2,1,1}, P3]",
                left: multipartite(&[2, 1, 1]),
                right: path(3),
            },
        ]
    })
}

/// The first major pair `[A, B]` with `G ⊆ A, H ⊆ B` or `G ⊆ B, H ⊆ A`.
pub fn majorized_by(g: &Graph, h: &Graph) -> Result<Option<&'static MajorPair>, JoinError> {
    for f in [g, h] {
        if f.vertex_count() < 3 {
            return Err(JoinError::FactorTooSmall(f.vertex_count()));
        }
    }
    let within = |x: &Graph, a: &Graph| find_subgraph(a, x).is_some();
    Ok(major_pairs().iter().find(|p| {
        (within(g, &p.left) && within(h, &p.right)) || (within(g, &p.right) && within(h, &p.left))
    }))
}

/// Sizes `(m, n)` of two factors with `m, n >= 3` for which no major pair can
/// fit: `m >= 5, n >= 4` or `m >= 7`.
pub fn size_rule_excludes(m: usize, n: usize) -> bool {
    let (big, small) = (m.max(n), m.min(n));
    small >= 3 && ((big >= 5 && small >= 4) || big >= 7)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum JoinReason {
    MatchedPair { pair: String },
    SizeRule { sizes: (usize, usize) },
    NotMajorized,
    DegreeBound { report: ConditionReport },
    EdgeBound { report: ConditionReport },
    ForbiddenSubgraph { report: ConditionReport },
    Solver { verdict: Verdict },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinDecision {
    pub answer: Answer,
    pub reason: JoinReason,
    pub witness: Option<OnePlanarWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub condition: String,
    pub holds: bool,
    pub detail: Value,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SmallFactor {
    P1,
    #[serde(rename = "2P1")]
    TwoP1,
    P2,
}

impl SmallFactor {
    pub fn graph(self) -> Graph {
        match self {
            SmallFactor::P1 => path(1),
            SmallFactor::TwoP1 => Graph::empty(2),
            SmallFactor::P2 => path(2),
        }
    }

    /// The factor isomorphic to `h`, if `h` has one or two vertices.
    pub fn of(h: &Graph) -> Option<SmallFactor> {
        match (h.vertex_count(), h.edge_count()) {
            (1, _) => Some(SmallFactor::P1),
            (2, 0) => Some(SmallFactor::TwoP1),
            (2, 1) => Some(SmallFactor::P2),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SmallFactor::P1 => "P1",
            SmallFactor::TwoP1 => "2P1",
            SmallFactor::P2 => "P2",
        }
    }
}

/// Largest `|E(G)|` allowed when `G + factor` is 1-planar, from the edge bound
/// of the join. `None` when the join has fewer than three vertices.
pub fn join_edge_bound(factor: SmallFactor, vertices: usize) -> Option<usize> {
    let h = factor.graph();
    let total = vertices + h.vertex_count();
    let join_cap = solver::edge_bound(solver::Mode::OnePlanar, total)?;
    let forced = vertices * h.vertex_count() + h.edge_count();
    Some(join_cap.saturating_sub(forced))
}

fn forbidden_patterns(factor: SmallFactor) -> Vec<(&'static str, Graph)> {
    let mut out = Vec::new();
    if factor != SmallFactor::P1 {
        out.push(("K_{7,1}", multipartite(&[7, 1])));
        out.push(("K_{3,3}", multipartite(&[3, 3])));
    }
    if factor == SmallFactor::P2 {
        out.push(("K_{4,2}", multipartite(&[4, 2])));
        out.push(("K_{3,1,1}", multipartite(&[3, 1, 1])));
    }
    out
}

fn degree_report(g: &Graph) -> ConditionReport {
    let vertex = (0..g.vertex_count()).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)));
    let max = g.max_degree();
    ConditionReport {
        condition: "max_degree <= 6".into(),
        holds: max <= 6,
        detail: json!({ "max_degree": max, "vertex": vertex, "bound": 6 }),
    }
}

fn edge_report(g: &Graph, factor: SmallFactor) -> Option<ConditionReport> {
    let bound = join_edge_bound(factor, g.vertex_count())?;
    let formula = match factor {
        SmallFactor::P1 => "3|V| - 4",
        SmallFactor::TwoP1 => "2|V|",
        SmallFactor::P2 => "2|V| - 1",
    };
    Some(ConditionReport {
        condition: format!("|E| <= {formula}"),
        holds: g.edge_count() <= bound,
        detail: json!({ "edges": g.edge_count(), "vertices": g.vertex_count(), "bound": bound }),
    })
}

fn forbidden_reports(g: &Graph, factor: SmallFactor) -> Vec<ConditionReport> {
    forbidden_patterns(factor)
        .into_iter()
        .map(|(name, pattern)| {
            let map = find_subgraph(g, &pattern);
            ConditionReport {
                condition: format!("no {name} subgraph"),
                holds: map.is_none(),
                detail: json!({ "pattern": name, "map": map }),
            }
        })
        .collect()
}

/// Necessary conditions for `G + factor` to be 1-planar, in battery order:
/// degree bound, edge bound, forbidden subgraphs. A failing report certifies
/// that the join is not 1-planar; `detail` carries the numbers or the
/// subgraph map (pattern vertex `i` goes to `map[i]`).
pub fn necessary_conditions(g: &Graph, factor: SmallFactor) -> Vec<ConditionReport> {
    let mut out = Vec::new();
    if factor != SmallFactor::P1 {
        out.push(degree_report(g));
    }
    out.extend(edge_report(g, factor));
    out.extend(forbidden_reports(g, factor));
    out
}

pub fn decide_join(g: &Graph, h: &Graph, budget: SearchBudget, want_witness: bool) -> JoinDecision {
    let (big, small) = if g.vertex_count() >= h.vertex_count() { (g, h) } else { (h, g) };
    if small.vertex_count() >= 3 {
        let pair = majorized_by(g, h).expect("both factors have at least 3 vertices");
        let (answer, reason) = match pair {
            Some(p) => (Answer::OnePlanar, JoinReason::MatchedPair { pair: p.name.to_string() }),
            None if size_rule_excludes(g.vertex_count(), h.vertex_count()) => (
                Answer::NotOnePlanar,
                JoinReason::SizeRule {
                    sizes: (g.vertex_count(), h.vertex_count()),
                },
            ),
            None => (Answer::NotOnePlanar, JoinReason::NotMajorized),
        };
        let witness = if want_witness && answer == Answer::OnePlanar {
            solver::is_one_planar(&join(g, h), budget).witness
        } else {
            None
        };
        return JoinDecision { answer, reason, witness };
    }
    if let Some(factor) = SmallFactor::of(small) {
        let refuted = |report: ConditionReport, wrap: fn(ConditionReport) -> JoinReason| JoinDecision {
            answer: Answer::NotOnePlanar,
            reason: wrap(report),
            witness: None,
        };
        if factor != SmallFactor::P1 {
            let r = degree_report(big);
            if !r.holds {
                return refuted(r, |report| JoinReason::DegreeBound { report });
            }
        }
        if let Some(r) = edge_report(big, factor) {
            if !r.holds {
                return refuted(r, |report| JoinReason::EdgeBound { report });
            }
        }
        if let Some(r) = forbidden_reports(big, factor).into_iter().find(|r| !r.holds) {
            return refuted(r, |report| JoinReason::ForbiddenSubgraph { report });
        }
    }
    let mut verdict = solver::is_one_planar(&join(g, h), budget);
    let witness = if want_witness { verdict.witness.take() } else { None };
    verdict.witness = None;
    JoinDecision {
        answer: verdict.answer,
        reason: JoinReason::Solver { verdict },
        witness,
    }
}

fn check_embedding(g: &Graph, emb: &PlaneEmbedding) -> Result<Face, JoinError> {
    if !emb.matches_graph(g) {
        return Err(JoinError::InvalidEmbedding("rotation does not match the graph".into()));
    }
    if !emb.is_plane() {
        return Err(JoinError::InvalidEmbedding("rotation system is not plane".into()));
    }
    if g.component_count() > 1 {
        return Err(JoinError::InvalidEmbedding("graph must be connected".into()));
    }
    emb.outer_face()
        .ok_or_else(|| JoinError::InvalidEmbedding("no outer face designated".into()))
}

fn undirected(e: (usize, usize)) -> Edge {
    (e.0.min(e.1), e.0.max(e.1))
}

/// A face is exposed when it shares at least one edge with the outer face.
fn shared_edges(face: &Face, outer_edges: &BTreeSet<Edge>) -> Vec<Edge> {
    let mut out: Vec<Edge> = face
        .darts
        .iter()
        .map(|&d| undirected(d))
        .filter(|e| outer_edges.contains(e))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Per-face data of an embedded (possibly planarized) graph: the outer
/// vertices and, for every exposed inner face, its non-outer true vertices
/// and the uncrossed true edges it shares with the outer face.
struct ExposedFaces {
    outer_vertices: BTreeSet<usize>,
    faces: Vec<(Vec<usize>, Vec<usize>, Vec<Edge>)>,
}

fn exposed_faces(emb: &PlaneEmbedding, outer: &Face, true_vertices: usize) -> ExposedFaces {
    let outer_vertices: BTreeSet<usize> =
        outer.vertices().into_iter().filter(|&v| v < true_vertices).collect();
    let outer_edges: BTreeSet<Edge> = outer
        .darts
        .iter()
        .map(|&d| undirected(d))
        .filter(|e| e.1 < true_vertices)
        .collect();
    let outer_dart = outer.darts.first().copied();
    let mut faces = Vec::new();
    for face in emb.faces() {
        if outer_dart.is_some_and(|d| face.contains_dart(d)) {
            continue;
        }
        let shared = shared_edges(&face, &outer_edges);
        if shared.is_empty() {
            continue;
        }
        let mut inner: Vec<usize> = face
            .vertices()
            .into_iter()
            .filter(|&v| v < true_vertices && !outer_vertices.contains(&v))
            .collect();
        inner.sort_unstable();
        inner.dedup();
        faces.push((face.walk(), inner, shared));
    }
    ExposedFaces { outer_vertices, faces }
}

/// Membership test for the apex-friendly family on one given embedding:
/// deleting the outer vertices leaves an outerplanar graph, and every exposed
/// face has no more non-outer vertices than edges shared with the outer face.
pub fn p_square_check(g: &Graph, emb: &PlaneEmbedding) -> Result<ConditionReport, JoinError> {
    let outer = check_embedding(g, emb)?;
    let data = exposed_faces(emb, &outer, g.vertex_count());
    let keep: Vec<usize> = (0..g.vertex_count())
        .filter(|v| !data.outer_vertices.contains(v))
        .collect();
    let inner_outerplanar = planarity::is_outerplanar(&g.induced(&keep));
    let mut faces_ok = true;
    let faces: Vec<Value> = data
        .faces
        .iter()
        .map(|(walk, inner, shared)| {
            let ok = inner.len() <= shared.len();
            faces_ok &= ok;
            json!({
                "walk": walk,
                "non_outer_vertices": inner,
                "common_edges": shared,
                "ok": ok,
            })
        })
        .collect();
    Ok(ConditionReport {
        condition: "2-outerplanar with exposed-face inequality".into(),
        holds: inner_outerplanar && faces_ok,
        detail: json!({
            "outer_vertices": data.outer_vertices,
            "inner_outerplanar": inner_outerplanar,
            "exposed_faces": faces,
        }),
    })
}

const MAX_ASSIGNMENTS: usize = 100_000;

/// A 1-planar drawing of `G + P1` (apex is vertex `|V(G)|`) from a plane
/// embedding that passes [`p_square_check`].
pub fn construct_apex_drawing(g: &Graph, emb: &PlaneEmbedding) -> Result<OnePlanarWitness, JoinError> {
    let report = p_square_check(g, emb)?;
    if !report.holds {
        return Err(JoinError::Precondition("embedding fails the exposed-face check".into()));
    }
    let outer = emb.outer_face().expect("checked");
    apex_extension(g, &CrossingPlan::empty(), emb, &outer)
}

/// The same construction over a 1-planar drawing of `G`: apex edges to
/// non-outer true vertices cross distinct uncrossed edges shared by an
/// exposed face and the outer face of the planarization.
pub fn construct_apex_drawing_from(
    g: &Graph,
    witness: &OnePlanarWitness,
) -> Result<OnePlanarWitness, JoinError> {
    if !validate_witness(g, witness) {
        return Err(JoinError::Precondition("witness does not validate".into()));
    }
    let p = planarize(g, &witness.plan).expect("validated plan");
    let outer = check_embedding(&p.graph, &witness.embedding)?;
    apex_extension(g, &witness.plan, &witness.embedding, &outer)
}

fn apex_extension(
    g: &Graph,
    base: &CrossingPlan,
    emb: &PlaneEmbedding,
    outer: &Face,
) -> Result<OnePlanarWitness, JoinError> {
    let n = g.vertex_count();
    let data = exposed_faces(emb, outer, n);
    let targets: Vec<usize> = (0..n).filter(|v| !data.outer_vertices.contains(v)).collect();
    // Candidate crossing edges for each non-outer vertex.
    let options: Vec<Vec<Edge>> = targets
        .iter()
        .map(|v| {
            let mut c: Vec<Edge> = data
                .faces
                .iter()
                .filter(|(_, inner, _)| inner.contains(v))
                .flat_map(|(_, _, shared)| shared.iter().copied())
                .collect();
            c.sort_unstable();
            c.dedup();
            c
        })
        .collect();
    if let Some(i) = options.iter().position(Vec::is_empty) {
        return Err(JoinError::Construction(format!(
            "vertex {} lies on no exposed face",
            targets[i]
        )));
    }
    let joined = join(g, &path(1));
    let mut chosen = Vec::with_capacity(targets.len());
    let mut used = BTreeSet::new();
    let mut attempts = 0;
    let found = assign(
        &targets, &options, &mut chosen, &mut used, &mut attempts, &mut |assignment| {
            let pairs = base.pairs().iter().copied().chain(
                targets
                    .iter()
                    .zip(assignment)
                    .map(|(&v, &e)| ((v, n), e)),
            );
            OnePlanarWitness::from_plan(&joined, CrossingPlan::new(pairs))
        },
    );
    found.ok_or_else(|| JoinError::Construction("no edge assignment yields a planar planarization".into()))
}

fn assign(
    targets: &[usize],
    options: &[Vec<Edge>],
    chosen: &mut Vec<Edge>,
    used: &mut BTreeSet<Edge>,
    attempts: &mut usize,
    accept: &mut dyn FnMut(&[Edge]) -> Option<OnePlanarWitness>,
) -> Option<OnePlanarWitness> {
    if chosen.len() == targets.len() {
        *attempts += 1;
        return accept(chosen);
    }
    for &e in &options[chosen.len()] {
        if *attempts >= MAX_ASSIGNMENTS {
            return None;
        }
        if !used.insert(e) {
            continue;
        }
        chosen.push(e);
        let found = assign(targets, options, chosen, used, attempts, accept);
        chosen.pop();
        used.remove(&e);
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Outer-1-planarity of `G` suffices for `G + P1`. When the condition holds
/// the join is cross-checked with the exact solver.
pub fn sufficient_outer1p(g: &Graph, budget: SearchBudget) -> ConditionReport {
    let outer = solver::is_outer_one_planar(g, budget);
    let holds = outer.answer == Answer::OnePlanar;
    let join_answer = holds.then(|| decide_join(g, &path(1), budget, false).answer);
    ConditionReport {
        condition: "outer-1-planar".into(),
        holds,
        detail: json!({
            "outer_answer": outer.answer,
            "outer_crossings": outer.witness.as_ref().map(|w| w.c),
            "join_with_P1": join_answer,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, disjoint_union_all, isomorphism_classes};
    use crate::plan::validate_witness;

    fn budget() -> SearchBudget {
        SearchBudget::nodes(5_000_000)
    }

    fn wheel(rim: usize) -> (Graph, PlaneEmbedding) {
        let hub = rim;
        let mut edges: Vec<Edge> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
        edges.extend((0..rim).map(|i| (i, hub)));
        let g = Graph::new(rim + 1, edges).unwrap();
        let mut rotation: Vec<Vec<usize>> = (0..rim)
            .map(|i| vec![(i + rim - 1) % rim, hub, (i + 1) % rim])
            .collect();
        rotation.push((0..rim).rev().collect());
        let mut emb = PlaneEmbedding::from_rotation(rotation).unwrap();
        // Pick the face that is the rim cycle.
        let rim_face = emb.faces().into_iter().find(|f| f.len() == rim).unwrap();
        emb.set_outer_dart(rim_face.darts[0]).unwrap();
        (g, emb)
    }

    #[test]
    fn majorization_examples() {
        let c3 = cycle(3);
        let c4 = cycle(4);
        assert_eq!(majorized_by(&c4, &c4).unwrap().unwrap().name, "[C4, C4]");
        assert_eq!(
            majorized_by(&copies(&c3, 2), &c3).unwrap().unwrap().name,
            "[C3 u C3, C3]"
        );
        assert!(majorized_by(&complete(4), &Graph::empty(3)).unwrap().is_none());
        assert!(majorized_by(&disjoint_union_all(&[path(4), path(1)]), &c3).unwrap().is_none());
        assert_eq!(majorized_by(&path(2), &c3), Err(JoinError::FactorTooSmall(2)));
    }

    #[test]
    fn size_rule_matches_pair_sizes() {
        for m in 3..10 {
            for n in 3..10 {
                let fits = major_pairs().iter().any(|p| {
                    let (a, b) = (p.left.vertex_count(), p.right.vertex_count());
                    (m <= a && n <= b) || (m <= b && n <= a)
                });
                assert_eq!(!fits, size_rule_excludes(m, n), "{m} {n}");
            }
        }
    }

    #[test]
    fn decide_join_examples() {
        let d = decide_join(&multipartite(&[2, 1, 1]), &path(3), budget(), false);
        assert_eq!(d.answer, Answer::OnePlanar);
        assert!(matches!(d.reason, JoinReason::MatchedPair { .. }));
        assert!(d.witness.is_none());

        let d = decide_join(&copies(&path(2), 3), &Graph::empty(3), budget(), false);
        assert_eq!(d.answer, Answer::NotOnePlanar);
        assert_eq!(d.reason, JoinReason::NotMajorized);

        let d = decide_join(&path(5), &Graph::empty(4), budget(), false);
        assert_eq!(d.answer, Answer::NotOnePlanar);
        assert!(matches!(d.reason, JoinReason::SizeRule { .. }));

        let g = disjoint_union_all(&[cycle(3), path(2)]);
        let d = decide_join(&g, &cycle(3), budget(), true);
        assert_eq!(d.answer, Answer::OnePlanar);
        assert!(validate_witness(&join(&g, &cycle(3)), d.witness.as_ref().unwrap()));

        let d = decide_join(&cycle(5), &path(1), budget(), false);
        assert_eq!(d.answer, Answer::OnePlanar);
        assert!(matches!(d.reason, JoinReason::Solver { .. }));
    }

    #[test]
    fn battery_examples() {
        let r = necessary_conditions(&multipartite(&[3, 3]), SmallFactor::TwoP1);
        assert!(r.iter().any(|c| !c.holds && c.condition == "no K_{3,3} subgraph"));

        assert_eq!(join_edge_bound(SmallFactor::P1, 10), Some(26));
        assert_eq!(join_edge_bound(SmallFactor::TwoP1, 10), Some(20));
        assert_eq!(join_edge_bound(SmallFactor::P2, 10), Some(19));
        assert_eq!(join_edge_bound(SmallFactor::P1, 1), None);

        let r = necessary_conditions(&cycle(5), SmallFactor::P2);
        assert!(r.iter().all(|c| c.holds));
        assert_eq!(r.len(), 1 + 1 + 4);

        let d = decide_join(&multipartite(&[7, 1]), &Graph::empty(2), budget(), false);
        assert!(matches!(d.reason, JoinReason::DegreeBound { .. }));
    }

    #[test]
    fn dense_graph_violates_p1_edge_bound() {
        let g = Graph::new(10, complete(10).edges()[..27].iter().copied()).unwrap();
        let r = necessary_conditions(&g, SmallFactor::P1);
        assert!(!r[0].holds);
        assert_eq!(r[0].detail["edges"], 27);
        assert_eq!(r[0].detail["bound"], 26);
    }

    #[test]
    fn p_square_examples() {
        let c4 = cycle(4);
        let emb = planarity::outerplanar_embedding(&c4).unwrap();
        assert!(p_square_check(&c4, &emb).unwrap().holds);
        let w = construct_apex_drawing(&c4, &emb).unwrap();
        assert_eq!(w.c, 0);

        let (w5, emb) = wheel(4);
        let r = p_square_check(&w5, &emb).unwrap();
        assert!(r.holds, "{r:?}");
        assert_eq!(r.detail["exposed_faces"].as_array().unwrap().len(), 4);
        let w = construct_apex_drawing(&w5, &emb).unwrap();
        assert_eq!(w.c, 1);
        assert!(validate_witness(&join(&w5, &path(1)), &w));

        assert!(matches!(
            p_square_check(&cycle(5), &emb),
            Err(JoinError::InvalidEmbedding(_))
        ));
    }

    #[test]
    fn outer_sufficiency_examples() {
        assert!(sufficient_outer1p(&cycle(4), budget()).holds);
        let r = sufficient_outer1p(&complete(4), budget());
        assert!(r.holds);
        assert_eq!(r.detail["join_with_P1"], "one_planar");
        assert!(!sufficient_outer1p(&complete(5), budget()).holds);
        assert!(decide_join(&complete(5), &path(1), budget(), false).answer == Answer::OnePlanar);
    }

    #[test]
    fn theorem_matches_solver_on_three_vertex_factors() {
        let classes = isomorphism_classes(3);
        for g in &classes {
            for h in &classes {
                let theorem = majorized_by(g, h).unwrap().is_some();
                let v = solver::is_one_planar(&join(g, h), budget());
                assert_eq!(theorem, v.is_one_planar());
            }
        }
    }
}
