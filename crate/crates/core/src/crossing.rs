//! Exact crossing numbers of small graphs.
//!
//! Only good drawings are searched: adjacent edges never cross and two edges
//! cross at most once. A drawing is then described by the set of crossing
//! pairs plus, for every edge crossed at least twice, the order of its
//! crossings. Levels `k = lower, lower + 1, ...` are searched exhaustively;
//! a level without an accepting plan raises the lower bound.
//!
//! Within a level, pairs are chosen in lexicographic order of edge positions.
//! Once the next pair starts at edge `i`, the crossings of all edges before
//! `i` are final, so the planarization of that edge prefix must already be
//! planar for some choice of crossing orders.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::graph::{automorphisms, Graph};
use crate::plan::{independent, Edge, PlanError, Planarization};
use crate::planarity::{self, LrPlanarity, PlaneEmbedding};
use crate::solver::{SearchBudget, SearchStats};

/// Crossing pairs of a good drawing. `orders[e]` lists the partners of `e`
/// in the order met walking from its smaller endpoint; present exactly for
/// edges with two or more crossings.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct MultiCrossingPlan {
    pub pairs: Vec<(Edge, Edge)>,
    pub orders: BTreeMap<String, Vec<Edge>>,
}

fn edge_key(e: Edge) -> String {
    format!("{}-{}", e.0, e.1)
}

impl MultiCrossingPlan {
    /// Canonicalizes pairs; orders are keyed by `"u-v"`.
    pub fn new(pairs: Vec<(Edge, Edge)>, orders: BTreeMap<Edge, Vec<Edge>>) -> Self {
        let canon = |e: Edge| (e.0.min(e.1), e.0.max(e.1));
        let mut pairs: Vec<_> = pairs
            .into_iter()
            .map(|(a, b)| {
                let (a, b) = (canon(a), canon(b));
                (a.min(b), a.max(b))
            })
            .collect();
        pairs.sort_unstable();
        let orders = orders
            .into_iter()
            .map(|(e, list)| (edge_key(canon(e)), list.into_iter().map(canon).collect()))
            .collect();
        MultiCrossingPlan { pairs, orders }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    fn partners(&self) -> BTreeMap<Edge, Vec<Edge>> {
        let mut map: BTreeMap<Edge, Vec<Edge>> = BTreeMap::new();
        for &(a, b) in &self.pairs {
            map.entry(a).or_default().push(b);
            map.entry(b).or_default().push(a);
        }
        map
    }

    pub fn validate(&self, g: &Graph) -> Result<(), PlanError> {
        for w in self.pairs.windows(2) {
            if w[0] == w[1] {
                return Err(PlanError::RepeatedPair(w[0].0, w[0].1));
            }
        }
        for &(a, b) in &self.pairs {
            for e in [a, b] {
                if !g.has_edge(e.0, e.1) {
                    return Err(PlanError::UnknownEdge(e));
                }
            }
            if !independent(a, b) {
                return Err(PlanError::AdjacentPair(a, b));
            }
        }
        let partners = self.partners();
        for (e, list) in &partners {
            let key = edge_key(*e);
            match self.orders.get(&key) {
                None if list.len() < 2 => {}
                Some(order) if list.len() >= 2 => {
                    let mut a = order.clone();
                    let mut b = list.clone();
                    a.sort_unstable();
                    b.sort_unstable();
                    if a != b {
                        return Err(PlanError::BadOrder(*e));
                    }
                }
                _ => return Err(PlanError::BadOrder(*e)),
            }
        }
        for key in self.orders.keys() {
            if !partners.iter().any(|(e, l)| l.len() >= 2 && edge_key(*e) == *key) {
                let e = parse_key(key).unwrap_or((usize::MAX, usize::MAX));
                return Err(PlanError::BadOrder(e));
            }
        }
        Ok(())
    }
}

fn parse_key(key: &str) -> Option<Edge> {
    let (a, b) = key.split_once('-')?;
    Some((a.parse().ok()?, b.parse().ok()?))
}

/// Each edge crossed `t` times becomes a path through `t` false vertices in
/// the plan's order. False vertex `n + i` is the i-th pair.
pub fn planarize_multi(g: &Graph, plan: &MultiCrossingPlan) -> Result<Planarization, PlanError> {
    plan.validate(g)?;
    let n = g.vertex_count();
    let pair_vertex: BTreeMap<(Edge, Edge), usize> =
        plan.pairs.iter().enumerate().map(|(i, &p)| (p, n + i)).collect();
    let vertex_of = |a: Edge, b: Edge| pair_vertex[&(a.min(b), a.max(b))];
    let partners = plan.partners();
    let mut edges = Vec::new();
    for &e in g.edges() {
        let seq: Vec<usize> = match partners.get(&e) {
            None => Vec::new(),
            Some(list) if list.len() == 1 => vec![vertex_of(e, list[0])],
            Some(_) => plan.orders[&edge_key(e)]
                .iter()
                .map(|&f| vertex_of(e, f))
                .collect(),
        };
        let mut prev = e.0;
        for z in seq {
            edges.push((prev, z));
            prev = z;
        }
        edges.push((prev, e.1));
    }
    let graph = Graph::new(n + plan.len(), edges).expect("planarization edges are valid");
    Ok(Planarization {
        graph,
        true_vertices: n,
        embedding: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrResult {
    pub value: Option<usize>,
    pub lower_bound: usize,
    /// `None` stands for an unknown (infinite) upper bound.
    pub upper_bound: Option<usize>,
    pub witness: Option<MultiCrossingPlan>,
    pub embedding: Option<PlaneEmbedding>,
    pub stats: SearchStats,
    /// Set when the node or time budget stopped the search.
    pub budget_exhausted: bool,
}

/// Lower bound from edge density: a planar subgraph remains after deleting
/// one edge per crossing.
pub fn density_lower_bound(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n < 3 {
        return 0;
    }
    let cap = match g.girth() {
        None => n - 1,
        Some(girth) => (3 * n - 6).min((girth * (n - 2) / (girth - 2)).max(n - 1)),
    };
    g.edge_count().saturating_sub(cap)
}

/// Switches for the answer-preserving shortcuts: starting at the density
/// bound instead of level 0, and restricting the first pair to orbit
/// representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrOptions {
    pub density_start: bool,
    pub symmetry: bool,
}

impl Default for CrOptions {
    fn default() -> Self {
        CrOptions {
            density_start: true,
            symmetry: true,
        }
    }
}

pub fn crossing_number(g: &Graph, max_k: usize, budget: SearchBudget) -> CrResult {
    crossing_number_with(g, max_k, budget, CrOptions::default())
}

pub fn crossing_number_with(
    g: &Graph,
    max_k: usize,
    budget: SearchBudget,
    options: CrOptions,
) -> CrResult {
    let start = Instant::now();
    let mut search = CrSearch::new(g, budget, start, options.symmetry);
    let mut lower = if options.density_start {
        density_lower_bound(g)
    } else {
        0
    };
    let mut result = CrResult {
        value: None,
        lower_bound: lower,
        upper_bound: None,
        witness: None,
        embedding: None,
        stats: SearchStats::default(),
        budget_exhausted: false,
    };
    while lower <= max_k {
        match search.level(lower) {
            LevelOutcome::Found(plan, rotation) => {
                result.value = Some(lower);
                result.upper_bound = Some(lower);
                result.embedding = Some(rotation);
                result.witness = Some(plan);
                break;
            }
            LevelOutcome::Exhausted => lower += 1,
            LevelOutcome::OutOfBudget => {
                result.budget_exhausted = true;
                break;
            }
        }
    }
    result.lower_bound = lower;
    result.stats = search.stats;
    result.stats.elapsed_ms = start.elapsed().as_millis() as u64;
    result
}

enum LevelOutcome {
    Found(MultiCrossingPlan, PlaneEmbedding),
    Exhausted,
    OutOfBudget,
}

struct CrSearch<'a> {
    g: &'a Graph,
    budget: SearchBudget,
    start: Instant,
    stats: SearchStats,
    /// Edges in processing order.
    edges: Vec<Edge>,
    /// Independent pairs `(i, j)`, `i < j` positions in `edges`, sorted.
    pairs: Vec<(usize, usize)>,
    /// Pairs allowed as the first (smallest) pair of a plan.
    first_allowed: Vec<bool>,
    chosen: Vec<usize>,
    lr: LrPlanarity,
    stopped: bool,
}

impl<'a> CrSearch<'a> {
    fn new(g: &'a Graph, budget: SearchBudget, start: Instant, symmetry: bool) -> Self {
        let mut edges = g.edges().to_vec();
        let deg = |e: &Edge| g.degree(e.0) + g.degree(e.1);
        edges.sort_by_key(|e| (std::cmp::Reverse(deg(e)), *e));
        let mut pairs = Vec::new();
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                if independent(edges[i], edges[j]) {
                    pairs.push((i, j));
                }
            }
        }
        let first_allowed = if symmetry {
            orbit_minimal_pairs(g, &edges, &pairs)
        } else {
            vec![true; pairs.len()]
        };
        CrSearch {
            g,
            budget,
            start,
            stats: SearchStats::default(),
            edges,
            pairs,
            first_allowed,
            chosen: Vec::new(),
            lr: LrPlanarity::new(),
            stopped: false,
        }
    }

    fn level(&mut self, k: usize) -> LevelOutcome {
        self.chosen.clear();
        let found = self.dfs(k, 0);
        if let Some(found) = found {
            return LevelOutcome::Found(found.0, found.1);
        }
        if self.stopped {
            LevelOutcome::OutOfBudget
        } else {
            LevelOutcome::Exhausted
        }
    }

    fn over_budget(&mut self) -> bool {
        if self.stats.nodes > self.budget.max_nodes
            || (self.stats.nodes.is_multiple_of(256)
                && self.budget.max_seconds.is_finite()
                && self.start.elapsed() > Duration::from_secs_f64(self.budget.max_seconds))
        {
            self.stopped = true;
        }
        self.stopped
    }

    fn dfs(&mut self, k: usize, from: usize) -> Option<(MultiCrossingPlan, PlaneEmbedding)> {
        self.stats.nodes += 1;
        if self.over_budget() {
            return None;
        }
        if self.chosen.len() == k {
            return self.accept(self.edges.len());
        }
        let need = k - self.chosen.len();
        let mut checked_prefix = 0;
        let mut p = from;
        while p + need <= self.pairs.len() {
            if self.chosen.is_empty() && !self.first_allowed[p] {
                p += 1;
                continue;
            }
            let first = self.pairs[p].0;
            if first > checked_prefix {
                // Edges before `first` are finished for every choice from here on.
                self.accept_prefix(first)?;
                checked_prefix = first;
            }
            self.chosen.push(p);
            let found = self.dfs(k, p + 1);
            self.chosen.pop();
            if found.is_some() || self.stopped {
                return found;
            }
            p += 1;
        }
        None
    }

    fn accept_prefix(&mut self, prefix: usize) -> Option<()> {
        self.accept(prefix).map(|_| ())
    }

    /// Tries every crossing order for the edges `0..prefix` under the chosen
    /// pairs (restricted to the prefix). Returns the plan and embedding of the
    /// first planar planarization.
    fn accept(&mut self, prefix: usize) -> Option<(MultiCrossingPlan, PlaneEmbedding)> {
        let n = self.g.vertex_count();
        let active: Vec<(usize, usize)> = self
            .chosen
            .iter()
            .map(|&p| self.pairs[p])
            .filter(|&(_, j)| j < prefix)
            .collect();
        // partners[e] = (partner edge, false vertex)
        let mut partners: Vec<Vec<(usize, usize)>> = vec![Vec::new(); prefix];
        for (idx, &(i, j)) in active.iter().enumerate() {
            partners[i].push((j, n + idx));
            partners[j].push((i, n + idx));
        }
        let multi: Vec<usize> = (0..prefix).filter(|&e| partners[e].len() >= 2).collect();
        let mut perms: Vec<Vec<usize>> = multi.iter().map(|&e| (0..partners[e].len()).collect()).collect();
        let vertices = n + active.len();
        let mut plane_edges = Vec::new();
        loop {
            plane_edges.clear();
            let mut mi = 0;
            for (&(u, v), part) in self.edges[..prefix].iter().zip(&partners) {
                let mut prev = u;
                if part.len() >= 2 {
                    for &slot in &perms[mi] {
                        let z = part[slot].1;
                        plane_edges.push((prev, z));
                        prev = z;
                    }
                    mi += 1;
                } else if let Some(&(_, z)) = part.first() {
                    plane_edges.push((prev, z));
                    prev = z;
                }
                plane_edges.push((prev, v));
            }
            self.stats.planarity_tests += 1;
            if self.lr.is_planar(vertices, &plane_edges) {
                let plan = self.plan_from(&active, &partners, &multi, &perms);
                let emb = planarity::embed_edges(vertices, &plane_edges)
                    .expect("planar edge list embeds");
                return Some((plan, emb));
            }
            if !next_combination(&mut perms) {
                return None;
            }
        }
    }

    fn plan_from(
        &self,
        active: &[(usize, usize)],
        partners: &[Vec<(usize, usize)>],
        multi: &[usize],
        perms: &[Vec<usize>],
    ) -> MultiCrossingPlan {
        let pairs = active
            .iter()
            .map(|&(i, j)| (self.edges[i], self.edges[j]))
            .collect();
        let mut orders = BTreeMap::new();
        for (mi, &e) in multi.iter().enumerate() {
            let seq = perms[mi].iter().map(|&s| self.edges[partners[e][s].0]).collect();
            orders.insert(self.edges[e], seq);
        }
        MultiCrossingPlan::new(pairs, orders)
    }
}

/// Advances a vector of permutations like an odometer. False after the last.
fn next_combination(perms: &mut [Vec<usize>]) -> bool {
    for p in perms.iter_mut() {
        if next_permutation(p) {
            return true;
        }
        p.sort_unstable();
    }
    false
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// A pair may open a plan only if it is the smallest pair of its orbit under
/// the automorphism group: every plan has an image whose first pair is such a
/// representative.
fn orbit_minimal_pairs(g: &Graph, edges: &[Edge], pairs: &[(usize, usize)]) -> Vec<bool> {
    const MAX_GROUP: usize = 50_000;
    let mut allowed = vec![true; pairs.len()];
    let estimate = {
        let mut counts = BTreeMap::new();
        for v in 0..g.vertex_count() {
            *counts.entry(g.degree(v)).or_insert(0usize) += 1;
        }
        counts
            .values()
            .fold(1usize, |acc, &k| (1..=k).fold(acc, |a, i| a.saturating_mul(i)))
    };
    if estimate > MAX_GROUP {
        return allowed;
    }
    let autos = automorphisms(g);
    let position: BTreeMap<Edge, usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let pair_index: BTreeMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let image = |perm: &[usize], e: Edge| {
        let (a, b) = (perm[e.0], perm[e.1]);
        position[&(a.min(b), a.max(b))]
    };
    for (idx, &(i, j)) in pairs.iter().enumerate() {
        for perm in &autos {
            let (x, y) = (image(perm, edges[i]), image(perm, edges[j]));
            if pair_index[&(x.min(y), x.max(y))] < idx {
                allowed[idx] = false;
                break;
            }
        }
    }
    allowed
}
