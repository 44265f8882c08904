//! Exact 1-planarity and outer-1-planarity by branch-and-bound over crossing
//! plans.
//!
//! Edges are decided one at a time in a fixed order: either the edge stays
//! uncrossed, or it is paired with a later, independent, still-undecided edge.
//! The planarization of the decided edges is a subgraph of the planarization
//! of every completion, so a non-planar partial state is pruned.
//!
//! Two further rules never change the answer:
//!
//! * Kite rule. If `ab` crosses `cd`, any edge of the graph among
//!   `ac, cb, bd, da` can be redrawn along the two half-edges meeting at the
//!   crossing without crossing anything. So those edges are fixed uncrossed.
//! * Counting bound. Dropping one edge of every crossing pair leaves a planar
//!   (outerplanar, in outer mode) subgraph of the input, which bounds the
//!   number of crossings from below.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::graph::{automorphisms, Graph};
use crate::plan::{independent, planarize, CrossingPlan, OnePlanarWitness};
use crate::planarity::{self, LrPlanarity, PlaneEmbedding};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_seconds: f64,
}

impl SearchBudget {
    pub fn nodes(max_nodes: u64) -> Self {
        SearchBudget {
            max_nodes,
            max_seconds: f64::INFINITY,
        }
    }

    pub fn unlimited() -> Self {
        Self::nodes(u64::MAX)
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: 50_000_000,
            max_seconds: 600.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Answer {
    OnePlanar,
    NotOnePlanar,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Refutation {
    SearchExhausted,
    EdgeBound { edges: usize, bound: usize },
    ForbiddenSubgraph(String),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub planarity_tests: u64,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub answer: Answer,
    pub witness: Option<OnePlanarWitness>,
    pub refutation: Option<Refutation>,
    pub stats: SearchStats,
}

impl Verdict {
    pub fn is_one_planar(&self) -> bool {
        self.answer == Answer::OnePlanar
    }

    pub fn is_definite(&self) -> bool {
        self.answer != Answer::Inconclusive
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    OnePlanar,
    OuterOnePlanar,
}

/// Switches for the pruning rules. Everything on is the normal solver; the
/// all-off configuration enumerates plans exhaustively and is used to check
/// that pruning is safe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub prune_partial: bool,
    pub kite_rule: bool,
    pub count_bound: bool,
    pub edge_bound: bool,
    pub symmetry: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            prune_partial: true,
            kite_rule: true,
            count_bound: true,
            edge_bound: true,
            symmetry: true,
        }
    }
}

impl SearchOptions {
    pub fn unpruned() -> Self {
        SearchOptions {
            prune_partial: false,
            kite_rule: false,
            count_bound: false,
            edge_bound: false,
            symmetry: false,
        }
    }
}

pub fn is_one_planar(g: &Graph, budget: SearchBudget) -> Verdict {
    solve(g, Mode::OnePlanar, budget, SearchOptions::default())
}

pub fn is_outer_one_planar(g: &Graph, budget: SearchBudget) -> Verdict {
    solve(g, Mode::OuterOnePlanar, budget, SearchOptions::default())
}

/// Largest edge count allowed by the mode's density bound, if it applies.
pub fn edge_bound(mode: Mode, n: usize) -> Option<usize> {
    match mode {
        Mode::OnePlanar if n >= 3 => Some(4 * n - 8),
        // ceil(5n/2) - 4
        Mode::OuterOnePlanar if n >= 2 => Some((5 * n).div_ceil(2) - 4),
        _ => None,
    }
}

pub fn solve(g: &Graph, mode: Mode, budget: SearchBudget, options: SearchOptions) -> Verdict {
    let start = Instant::now();
    let n = g.vertex_count();
    let m = g.edge_count();
    if options.edge_bound {
        if let Some(bound) = edge_bound(mode, n) {
            if m > bound {
                return Verdict {
                    answer: Answer::NotOnePlanar,
                    witness: None,
                    refutation: Some(Refutation::EdgeBound { edges: m, bound }),
                    stats: SearchStats {
                        elapsed_ms: start.elapsed().as_millis() as u64,
                        ..Default::default()
                    },
                };
            }
        }
    }
    let mut search = Search::new(g, mode, budget, options, start);
    let outcome = search.run();
    let mut stats = search.stats;
    stats.elapsed_ms = start.elapsed().as_millis() as u64;
    match outcome {
        Outcome::Found => {
            let plan = search.current_plan();
            let witness = build_witness(g, mode, plan)
                .expect("accepted plan must planarize to a plane graph");
            Verdict {
                answer: Answer::OnePlanar,
                witness: Some(witness),
                refutation: None,
                stats,
            }
        }
        Outcome::Exhausted => Verdict {
            answer: Answer::NotOnePlanar,
            witness: None,
            refutation: Some(Refutation::SearchExhausted),
            stats,
        },
        Outcome::OutOfBudget => Verdict {
            answer: Answer::Inconclusive,
            witness: None,
            refutation: None,
            stats,
        },
    }
}

/// Embeds the canonical planarization; in outer mode the designated outer
/// face carries every true vertex (for connected planarizations).
fn build_witness(g: &Graph, mode: Mode, plan: CrossingPlan) -> Option<OnePlanarWitness> {
    match mode {
        Mode::OnePlanar => OnePlanarWitness::from_plan(g, plan),
        Mode::OuterOnePlanar => {
            let p = planarize(g, &plan).ok()?;
            let trues: Vec<usize> = (0..g.vertex_count()).collect();
            let emb = embedding_with_face(&p.graph, &trues)?;
            Some(OnePlanarWitness::new(plan, emb))
        }
    }
}

/// A planar embedding of `g` whose outer face sees every vertex of `set`.
pub fn embedding_with_face(g: &Graph, set: &[usize]) -> Option<PlaneEmbedding> {
    let n = g.vertex_count();
    let with_apex = g.with_apex(set);
    let emb = planarity::is_planar(&with_apex)?;
    let rotation: Vec<Vec<usize>> = emb.rotation()[..n]
        .iter()
        .map(|l| l.iter().copied().filter(|&w| w != n).collect())
        .collect();
    let mut out = PlaneEmbedding::from_rotation(rotation).ok()?;
    // The dart after an apex edge lies in the face the apex leaves behind.
    if let Some(&x) = set.first() {
        let rot = &emb.rotation()[x];
        let i = rot.iter().position(|&y| y == n)?;
        if rot.len() > 1 {
            let y = rot[(i + 1) % rot.len()];
            out.set_outer_dart((x, y)).ok()?;
        }
    }
    Some(out)
}

enum Outcome {
    Found,
    Exhausted,
    OutOfBudget,
}

const UNDECIDED: u32 = u32::MAX;
const UNCROSSED: u32 = u32::MAX - 1;

struct Search<'a> {
    g: &'a Graph,
    options: SearchOptions,
    budget: SearchBudget,
    start: Instant,
    stats: SearchStats,
    order: Vec<usize>,
    // state[e]: UNDECIDED, UNCROSSED, or the partner edge index.
    state: Vec<u32>,
    undecided: usize,
    crossings: usize,
    min_crossings: usize,
    // Planarization of the decided edges. Vertex layout: true vertices, then
    // the apex in outer mode, then one false vertex per crossing.
    base: usize,
    edges: Vec<(usize, usize)>,
    lr: LrPlanarity,
    // Root partner candidates allowed after symmetry reduction (None = all).
    root_partners: Option<Vec<bool>>,
}

impl<'a> Search<'a> {
    fn new(
        g: &'a Graph,
        mode: Mode,
        budget: SearchBudget,
        options: SearchOptions,
        start: Instant,
    ) -> Self {
        let n = g.vertex_count();
        let m = g.edge_count();
        let order = edge_order(g);

        let mut edges = Vec::with_capacity(m * 2 + n);
        let base = match mode {
            Mode::OnePlanar => n,
            Mode::OuterOnePlanar => {
                edges.extend((0..n).map(|v| (v, n)));
                n + 1
            }
        };
        let min_crossings = if options.count_bound {
            crossing_lower_bound(g, mode)
        } else {
            0
        };
        let mut search = Search {
            g,
            options,
            budget,
            start,
            stats: SearchStats::default(),
            order,
            state: vec![UNDECIDED; m],
            undecided: m,
            crossings: 0,
            min_crossings,
            base,
            edges,
            lr: LrPlanarity::new(),
            root_partners: None,
        };
        if options.symmetry && m > 0 {
            search.root_partners = root_partner_filter(g, search.order[0]);
        }
        search
    }

    fn run(&mut self) -> Outcome {
        if self.options.prune_partial && !self.partial_planar() {
            return Outcome::Exhausted;
        }
        self.dfs(0)
    }

    fn current_plan(&self) -> CrossingPlan {
        let e = self.g.edges();
        CrossingPlan::new(
            (0..self.state.len())
                .filter(|&i| self.state[i] < UNCROSSED && (self.state[i] as usize) > i)
                .map(|i| (e[i], e[self.state[i] as usize])),
        )
    }

    fn partial_planar(&mut self) -> bool {
        self.stats.planarity_tests += 1;
        let vertices = self.base + self.crossings;
        self.lr.is_planar(vertices, &self.edges)
    }

    fn over_budget(&self) -> bool {
        if self.stats.nodes > self.budget.max_nodes {
            return true;
        }
        self.stats.nodes.is_multiple_of(1024)
            && self.budget.max_seconds.is_finite()
            && self.start.elapsed() > Duration::from_secs_f64(self.budget.max_seconds)
    }

    fn dfs(&mut self, mut i: usize) -> Outcome {
        while i < self.order.len() && self.state[self.order[i]] != UNDECIDED {
            i += 1;
        }
        if i == self.order.len() {
            if self.options.prune_partial || self.partial_planar() {
                return Outcome::Found;
            }
            return Outcome::Exhausted;
        }
        self.stats.nodes += 1;
        if self.over_budget() {
            return Outcome::OutOfBudget;
        }
        if self.crossings + self.undecided / 2 < self.min_crossings {
            return Outcome::Exhausted;
        }
        let e = self.order[i];
        let (a, b) = self.g.edges()[e];

        // Leave e uncrossed.
        self.state[e] = UNCROSSED;
        self.undecided -= 1;
        self.edges.push((a, b));
        if !self.options.prune_partial || self.partial_planar() {
            match self.dfs(i + 1) {
                Outcome::Exhausted => {}
                other => return other,
            }
        }
        self.edges.pop();
        self.undecided += 1;
        self.state[e] = UNDECIDED;

        // Cross e with a later undecided edge.
        for j in i + 1..self.order.len() {
            let f = self.order[j];
            if self.state[f] != UNDECIDED {
                continue;
            }
            if i == 0 {
                if let Some(allowed) = &self.root_partners {
                    if !allowed[f] {
                        continue;
                    }
                }
            }
            let (c, d) = self.g.edges()[f];
            if !independent((a, b), (c, d)) {
                continue;
            }
            let Some(kites) = self.kite_edges((a, b), (c, d)) else {
                continue;
            };
            let mark = self.edges.len();
            let z = self.base + self.crossings;
            self.crossings += 1;
            self.state[e] = f as u32;
            self.state[f] = e as u32;
            self.undecided -= 2;
            self.edges.extend([(a, z), (b, z), (c, z), (d, z)]);
            for &k in &kites {
                self.state[k] = UNCROSSED;
                self.edges.push(self.g.edges()[k]);
            }
            self.undecided -= kites.len();
            if !self.options.prune_partial || self.partial_planar() {
                match self.dfs(i + 1) {
                    Outcome::Exhausted => {}
                    other => return other,
                }
            }
            for &k in &kites {
                self.state[k] = UNDECIDED;
            }
            self.undecided += kites.len() + 2;
            self.state[e] = UNDECIDED;
            self.state[f] = UNDECIDED;
            self.crossings -= 1;
            self.edges.truncate(mark);
        }
        Outcome::Exhausted
    }

    /// Undecided kite edges to fix uncrossed, or `None` if some kite edge is
    /// already crossed (the pairing is then dominated by one with fewer
    /// crossings).
    fn kite_edges(&self, (a, b): (usize, usize), (c, d): (usize, usize)) -> Option<Vec<usize>> {
        let mut out = Vec::new();
        if !self.options.kite_rule {
            return Some(out);
        }
        for (x, y) in [(a, c), (a, d), (b, c), (b, d)] {
            if let Some(k) = self.g.edge_index(x, y) {
                match self.state[k] {
                    UNDECIDED => out.push(k),
                    UNCROSSED => {}
                    _ => return None,
                }
            }
        }
        Some(out)
    }
}

/// Edges in processing order: greedily the edge with the most endpoints
/// already touched, then the largest endpoint degree sum, then the index.
fn edge_order(g: &Graph) -> Vec<usize> {
    let m = g.edge_count();
    let deg = |e: usize| {
        let (u, v) = g.edges()[e];
        g.degree(u) + g.degree(v)
    };
    let mut touched = vec![false; g.vertex_count()];
    let mut taken = vec![false; m];
    let mut order = Vec::with_capacity(m);
    for _ in 0..m {
        let e = (0..m)
            .filter(|&e| !taken[e])
            .max_by_key(|&e| {
                let (u, v) = g.edges()[e];
                let seen = touched[u] as usize + touched[v] as usize;
                (seen, deg(e), std::cmp::Reverse(e))
            })
            .expect("an edge remains");
        taken[e] = true;
        let (u, v) = g.edges()[e];
        touched[u] = true;
        touched[v] = true;
        order.push(e);
    }
    order
}

/// Lower bound on the crossings of any plan the mode accepts: one edge per
/// crossing pair can be deleted to leave a planar (outer mode: outerplanar)
/// subgraph, whose size is capped by Euler's formula and the girth.
pub fn crossing_lower_bound(g: &Graph, mode: Mode) -> usize {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n < 3 {
        return 0;
    }
    let cap = match mode {
        Mode::OnePlanar => {
            let mut cap = 3 * n - 6;
            if let Some(girth) = g.girth() {
                if girth > 3 {
                    cap = cap.min((girth * (n - 2) / (girth - 2)).max(n - 1));
                }
            } else {
                cap = n - 1;
            }
            cap
        }
        Mode::OuterOnePlanar => 2 * n - 3,
    };
    m.saturating_sub(cap)
}

/// For the first edge `e0` in the processing order, keep one partner per
/// orbit of the stabilizer of `e0`. Returns `None` when the automorphism group
/// is too large to enumerate or trivial.
fn root_partner_filter(g: &Graph, e0: usize) -> Option<Vec<bool>> {
    const MAX_GROUP: usize = 50_000;
    if group_size_estimate(g) > MAX_GROUP {
        return None;
    }
    let autos = automorphisms(g);
    if autos.len() <= 1 {
        return None;
    }
    let (a, b) = g.edges()[e0];
    let stab: Vec<&Vec<usize>> = autos
        .iter()
        .filter(|p| {
            let (x, y) = (p[a], p[b]);
            (x.min(y), x.max(y)) == (a, b)
        })
        .collect();
    let m = g.edge_count();
    let mut allowed = vec![false; m];
    let mut seen = vec![false; m];
    for f in 0..m {
        if seen[f] {
            continue;
        }
        allowed[f] = true;
        let (c, d) = g.edges()[f];
        for p in &stab {
            let img = g
                .edge_index(p[c], p[d])
                .expect("automorphism maps edges to edges");
            seen[img] = true;
        }
    }
    Some(allowed)
}

/// Product of factorials of degree-class sizes: an upper bound on |Aut(G)|.
fn group_size_estimate(g: &Graph) -> usize {
    let mut counts = std::collections::BTreeMap::new();
    for v in 0..g.vertex_count() {
        *counts.entry(g.degree(v)).or_insert(0usize) += 1;
    }
    counts.values().fold(1usize, |acc, &k| {
        (1..=k).fold(acc, |a, i| a.saturating_mul(i))
    })
}
