//! Named graphs and constructions, each with machine-checkable expected
//! properties.
//!
//! Names are small expressions: `K6`, `C4`, `P3`, `4P1`, `K_{4,3,1}`,
//! unions with `u` (or `∪`), joins with `+`, and parentheses, for example
//! `(C3uP1)+4P1`. The generated families are `ladder-<n>`,
//! `cycle-square-<n>`, `chorded-cycle-<n>` and `G1`..`G6` (the connected
//! graphs on four vertices).

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::graph::{
    complete, cycle, disjoint_union, join, multipartite, path, Graph, PartitionSpec,
};
use crate::join::{construct_apex_drawing_from, decide_join, SmallFactor};
use crate::plan::{planarize, validate_witness, CrossingPlan, OnePlanarWitness};
use crate::solver::{self, Answer, SearchBudget};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("four-vertex graph index must be 1..=6, got {0}")]
    IndexOutOfRange(usize),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("unknown name {0:?}")]
    Unknown(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "property", rename_all = "snake_case")]
pub enum Property {
    VertexCount { value: usize },
    EdgeCount { value: usize },
    OnePlanar { expected: bool },
    /// `G + factor` with `factor` one of `P1`, `2P1`, `P2`.
    JoinOnePlanar { factor: SmallFactor, expected: bool },
    /// The shipped witness extends to a drawing of `G + P1` by the apex
    /// construction.
    ApexExtension,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyOutcome {
    pub property: Property,
    pub status: Status,
    pub computed: Value,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyInstance {
    pub name: String,
    pub graph: Graph,
    pub provenance: String,
    pub witness: Option<OnePlanarWitness>,
    pub expected: Vec<Property>,
}

impl FamilyInstance {
    fn new(name: impl Into<String>, graph: Graph, provenance: impl Into<String>) -> Self {
        let expected = vec![
            Property::VertexCount {
                value: graph.vertex_count(),
            },
            Property::EdgeCount {
                value: graph.edge_count(),
            },
        ];
        FamilyInstance {
            name: name.into(),
            graph,
            provenance: provenance.into(),
            witness: None,
            expected,
        }
    }

    fn expect(mut self, p: Property) -> Self {
        self.expected.push(p);
        self
    }

    /// Evaluates every expected property with the solver and join modules.
    pub fn check(&self, budget: SearchBudget) -> Vec<PropertyOutcome> {
        self.expected
            .iter()
            .map(|p| {
                let (status, computed) = self.evaluate(p, budget);
                PropertyOutcome {
                    property: p.clone(),
                    status,
                    computed,
                }
            })
            .collect()
    }

    fn evaluate(&self, p: &Property, budget: SearchBudget) -> (Status, Value) {
        let g = &self.graph;
        let verdict = |answer: Answer, expected: bool| match answer {
            Answer::Inconclusive => Status::Inconclusive,
            a => pass((a == Answer::OnePlanar) == expected),
        };
        match *p {
            Property::VertexCount { value } => {
                (pass(g.vertex_count() == value), json!(g.vertex_count()))
            }
            Property::EdgeCount { value } => (pass(g.edge_count() == value), json!(g.edge_count())),
            Property::OnePlanar { expected } => {
                let v = solver::is_one_planar(g, budget);
                let witness_ok = v.witness.as_ref().is_none_or(|w| validate_witness(g, w));
                let shipped_ok = self.witness.as_ref().is_none_or(|w| validate_witness(g, w));
                let mut status = verdict(v.answer, expected);
                if !(witness_ok && shipped_ok) {
                    status = Status::Fail;
                }
                (
                    status,
                    json!({ "answer": v.answer, "nodes": v.stats.nodes, "crossings": v.witness.map(|w| w.c) }),
                )
            }
            Property::JoinOnePlanar { factor, expected } => {
                let d = decide_join(g, &factor.graph(), budget, true);
                let joined = join(g, &factor.graph());
                if d.witness.as_ref().is_some_and(|w| !validate_witness(&joined, w)) {
                    return (Status::Fail, json!({ "answer": d.answer, "witness": "invalid" }));
                }
                (verdict(d.answer, expected), json!({ "answer": d.answer, "reason": d.reason }))
            }
            Property::ApexExtension => {
                let Some(w) = &self.witness else {
                    return (Status::Fail, json!("no shipped witness"));
                };
                match construct_apex_drawing_from(g, w) {
                    Ok(apex) => {
                        let ok = validate_witness(&join(g, &path(1)), &apex);
                        (pass(ok), json!({ "crossings": apex.c, "base_crossings": w.c }))
                    }
                    Err(e) => (Status::Fail, json!(e.to_string())),
                }
            }
        }
    }
}

fn pass(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// The connected graphs on four vertices: `G1 = K4`, `G2 = K_{2,1,1}`,
/// `G3` = paw, `G4 = C4`, `G5 = K_{3,1}`, `G6 = P4`.
pub fn four_vertex_graph(i: usize) -> Result<Graph, FamilyError> {
    let edges: &[(usize, usize)] = match i {
        1 => return Ok(complete(4)),
        2 => return Ok(multipartite(&[2, 1, 1])),
        3 => &[(0, 1), (1, 2), (2, 0), (0, 3)],
        4 => return Ok(cycle(4)),
        5 => return Ok(multipartite(&[3, 1])),
        6 => return Ok(path(4)),
        _ => return Err(FamilyError::IndexOutOfRange(i)),
    };
    Ok(Graph::new(4, edges.iter().copied()).expect("valid edges"))
}

/// Ladder `G_n`, `n = 2k` with `k >= 3` odd: paths `a_1..a_k` (vertices
/// `0..k`) and `b_1..b_k` (vertices `k..2k`), rungs `a_i b_i`, both diagonals
/// of every square, and chords `a_j a_{j+2}`, `b_j b_{j+2}` for odd `j <= k-2`.
/// The shipped witness crosses the diagonals of each square; its outer face
/// carries the chords.
pub fn ladder_family(n: usize) -> Result<FamilyInstance, FamilyError> {
    if !n.is_multiple_of(2) || n / 2 < 3 || (n / 2).is_multiple_of(2) {
        return Err(FamilyError::Parameter(format!(
            "ladder needs n = 2k with k odd and k >= 3, got {n}"
        )));
    }
    let k = n / 2;
    let a = |i: usize| i - 1;
    let b = |i: usize| k + i - 1;
    let mut edges = Vec::new();
    for i in 1..k {
        edges.extend([(a(i), a(i + 1)), (b(i), b(i + 1))]);
        edges.extend([(a(i), b(i)), (a(i), b(i + 1)), (a(i + 1), b(i))]);
    }
    edges.push((a(k), b(k)));
    for j in (1..=k - 2).step_by(2) {
        edges.extend([(a(j), a(j + 2)), (b(j), b(j + 2))]);
    }
    let graph = Graph::new(n, edges).expect("valid edges");
    let plan = CrossingPlan::new((1..k).map(|i| ((a(i), b(i + 1)), (a(i + 1), b(i)))));
    // Outer face through a_j, b_j for odd j, so the chords bound it.
    let odd: Vec<usize> = (1..=k).step_by(2).flat_map(|j| [a(j), b(j)]).collect();
    let p = planarize(&graph, &plan).expect("valid plan");
    let embedding = solver::embedding_with_face(&p.graph, &odd).expect("ladder drawing exists");
    let witness = OnePlanarWitness::new(plan, embedding);
    let mut inst = FamilyInstance::new(
        format!("ladder-{n}"),
        graph,
        format!("ladder G_{n} with 3n - 5 edges whose join with P1 is 1-planar"),
    )
    .expect(Property::OnePlanar { expected: true })
    .expect(Property::JoinOnePlanar {
        factor: SmallFactor::P1,
        expected: true,
    })
    .expect(Property::ApexExtension);
    inst.witness = Some(witness);
    Ok(inst)
}

/// Square of the cycle `C_n`, `n` even and at least 6: `2n` edges, and
/// `C_n^2 + 2P1` meets the 1-planar edge bound with equality.
pub fn cycle_square(n: usize) -> Result<FamilyInstance, FamilyError> {
    if n < 6 || !n.is_multiple_of(2) {
        return Err(FamilyError::Parameter(format!(
            "cycle square needs even n >= 6, got {n}"
        )));
    }
    let edges = (0..n).flat_map(|i| [(i, (i + 1) % n), (i, (i + 2) % n)]);
    let graph = Graph::new(n, edges).expect("valid edges");
    Ok(FamilyInstance::new(
        format!("cycle-square-{n}"),
        graph,
        format!("square of C_{n}, sharp for the 2|V| bound of joins with 2P1"),
    )
    .expect(Property::JoinOnePlanar {
        factor: SmallFactor::TwoP1,
        expected: true,
    }))
}

/// `C_n` (`v_1..v_n`) plus chords `v_i v_{i+2}` for odd `i <= 2*floor((n-1)/2) - 1`
/// (outside) and even `i <= 2*floor(n/2) - 2` (inside): `2n - 2` edges, and
/// the join with `P2` is 1-planar.
pub fn chorded_cycle(n: usize) -> Result<FamilyInstance, FamilyError> {
    if n < 5 {
        return Err(FamilyError::Parameter(format!(
            "chorded cycle needs n >= 5, got {n}"
        )));
    }
    let v = |i: usize| i - 1;
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let odd_last = 2 * ((n - 1) / 2) - 1;
    let even_last = 2 * (n / 2) - 2;
    edges.extend((1..=odd_last).step_by(2).map(|i| (v(i), v(i + 2))));
    edges.extend((2..=even_last).step_by(2).map(|i| (v(i), v(i + 2))));
    let graph = Graph::new(n, edges).expect("valid edges");
    Ok(FamilyInstance::new(
        format!("chorded-cycle-{n}"),
        graph,
        format!("C_{n} with alternating chords, 2n - 2 edges, 1-planar join with P2"),
    )
    .expect(Property::JoinOnePlanar {
        factor: SmallFactor::P2,
        expected: true,
    }))
}

/// Whether the complete multipartite graph is 1-planar, by the known
/// classification (parts sorted non-increasing).
pub fn multipartite_is_one_planar(spec: &PartitionSpec) -> bool {
    let p = spec.parts();
    match *p {
        [_] => true,
        [_, 1] | [_, 2] => true,
        [a, 3] => (3..=6).contains(&a),
        [4, 4] => true,
        [_, 1, 1] => true,
        [a, 2, 1] => a <= 6,
        [a, 2, 2] => a <= 4,
        [3, 3, 1] => true,
        [a, 1, 1, 1] => a <= 6,
        [a, 2, 1, 1] => a <= 3,
        [2, 2, 2, 1] | [2, 2, 2, 2] => true,
        [a, _, 1, 1, 1] => a <= 2,
        [1, 1, 1, 1, 1, 1] => true,
        _ => false,
    }
}

/// Maximal 1-planar complete multipartite graphs on at most nine vertices
/// (one per line of the classification) and the non-1-planar boundary cases
/// just above them.
pub const TABLE_POSITIVE: [&str; 10] = [
    "K6",
    "K_{6,3}",
    "K_{4,4}",
    "K_{6,2,1}",
    "K_{4,2,2}",
    "K_{3,3,1}",
    "K_{6,1,1,1}",
    "K_{3,2,1,1}",
    "K_{2,2,2,2}",
    "K_{2,2,1,1,1}",
];

pub const TABLE_NEGATIVE: [&str; 6] = [
    "K_{4,3,1}",
    "K_{3,3,2}",
    "K_{5,2,2}",
    "K_{4,2,1,1}",
    "K_{3,1,1,1,1}",
    "K_{5,4}",
];

/// Joins with a known answer.
pub const JOIN_CLAIMS: [(&str, bool); 10] = [
    ("(C3uP1)+4P1", false),
    ("(P4uP1)+C3", false),
    ("(P4uP1)+P3", false),
    ("(P4uP1)+(P2uP1)", false),
    ("(P4uP1)+3P1", false),
    ("(K_{3,1}uP1)+3P1", false),
    ("3P2+3P1", false),
    ("(C3uP2)+C3", true),
    ("(C3uC3)+C3", true),
    ("(C3uP1)+C3", true),
];

/// Every name the registry documents (generated families take a size suffix).
pub fn registry_names() -> Vec<String> {
    let mut out: Vec<String> = (1..=6).map(|i| format!("G{i}")).collect();
    out.extend(TABLE_POSITIVE.iter().chain(&TABLE_NEGATIVE).map(|s| s.to_string()));
    out.push("K7".into());
    out.extend(JOIN_CLAIMS.iter().map(|(s, _)| s.to_string()));
    out.extend(["ladder-<n>", "cycle-square-<n>", "chorded-cycle-<n>"].map(String::from));
    out
}

/// Looks up a registry entry or generated family.
pub fn named(name: &str) -> Result<FamilyInstance, FamilyError> {
    let key: String = name.chars().filter(|c| !c.is_whitespace()).collect::<String>().replace('∪', "u");
    let sized = |prefix: &str| -> Option<Result<usize, FamilyError>> {
        key.strip_prefix(prefix).map(|s| {
            s.parse()
                .map_err(|_| FamilyError::Parameter(format!("bad size in {name:?}")))
        })
    };
    if let Some(n) = sized("ladder-") {
        return ladder_family(n?);
    }
    if let Some(n) = sized("cycle-square-") {
        return cycle_square(n?);
    }
    if let Some(n) = sized("chorded-cycle-") {
        return chorded_cycle(n?);
    }
    if let Some(i) = key.strip_prefix('G').and_then(|s| s.parse::<usize>().ok()) {
        let graph = four_vertex_graph(i)?;
        return Ok(FamilyInstance::new(
            key.clone(),
            graph,
            format!("connected four-vertex graph G{i}"),
        )
        .expect(Property::OnePlanar { expected: true }));
    }
    let graph = parse_expr(&key).ok_or_else(|| FamilyError::Unknown(name.to_string()))?;
    if let Some(spec) = multipartite_spec(&key) {
        let expected = multipartite_is_one_planar(&spec);
        return Ok(FamilyInstance::new(
            key.clone(),
            graph,
            format!("complete multipartite {spec}, classified {}1-planar", if expected { "" } else { "not " }),
        )
        .expect(Property::OnePlanar { expected }));
    }
    if let Some(&(_, expected)) = JOIN_CLAIMS.iter().find(|(n, _)| *n == key) {
        return Ok(FamilyInstance::new(
            key.clone(),
            graph,
            format!("{key} is {}1-planar", if expected { "" } else { "not " }),
        )
        .expect(Property::OnePlanar { expected }));
    }
    Err(FamilyError::Unknown(name.to_string()))
}

/// `Kn` and `K_{a,b,..}` names as partition specs.
fn multipartite_spec(key: &str) -> Option<PartitionSpec> {
    if let Some(inner) = key.strip_prefix("K_{").and_then(|s| s.strip_suffix('}')) {
        let parts: Option<Vec<usize>> = inner.split(',').map(|x| x.parse().ok()).collect();
        return PartitionSpec::new(&parts?).ok();
    }
    let n: usize = key.strip_prefix('K')?.parse().ok()?;
    PartitionSpec::new(&vec![1; n]).ok()
}

/// Parses a graph expression: joins of unions of atoms.
pub fn parse_expr(text: &str) -> Option<Graph> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;
    let g = parse_join(&chars, &mut pos)?;
    (pos == chars.len()).then_some(g)
}

fn parse_join(s: &[char], pos: &mut usize) -> Option<Graph> {
    let mut g = parse_union(s, pos)?;
    while s.get(*pos) == Some(&'+') {
        *pos += 1;
        g = join(&g, &parse_union(s, pos)?);
    }
    Some(g)
}

fn parse_union(s: &[char], pos: &mut usize) -> Option<Graph> {
    let mut g = parse_atom(s, pos)?;
    while matches!(s.get(*pos), Some('u') | Some('∪')) {
        *pos += 1;
        g = disjoint_union(&g, &parse_atom(s, pos)?);
    }
    Some(g)
}

fn number(s: &[char], pos: &mut usize) -> Option<usize> {
    let start = *pos;
    while s.get(*pos).is_some_and(char::is_ascii_digit) {
        *pos += 1;
    }
    s[start..*pos].iter().collect::<String>().parse().ok()
}

fn parse_atom(s: &[char], pos: &mut usize) -> Option<Graph> {
    let count = number(s, pos).unwrap_or(1);
    let base = match s.get(*pos)? {
        '(' => {
            *pos += 1;
            let g = parse_join(s, pos)?;
            if s.get(*pos) != Some(&')') {
                return None;
            }
            *pos += 1;
            g
        }
        'K' if s.get(*pos + 1) == Some(&'_') => {
            *pos += 2;
            if s.get(*pos) != Some(&'{') {
                return None;
            }
            *pos += 1;
            let mut parts = vec![number(s, pos)?];
            while s.get(*pos) == Some(&',') {
                *pos += 1;
                parts.push(number(s, pos)?);
            }
            if s.get(*pos) != Some(&'}') {
                return None;
            }
            *pos += 1;
            complete_multipartite_checked(&parts)?
        }
        &c @ ('K' | 'C' | 'P') => {
            *pos += 1;
            let n = number(s, pos)?;
            match c {
                'K' => complete(n),
                'C' if n >= 3 => cycle(n),
                'P' if n >= 1 => path(n),
                _ => return None,
            }
        }
        _ => return None,
    };
    Some(crate::graph::copies(&base, count))
}

fn complete_multipartite_checked(parts: &[usize]) -> Option<Graph> {
    PartitionSpec::new(parts)
        .ok()
        .map(|spec| crate::graph::complete_multipartite(&spec))
}
