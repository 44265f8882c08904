//! Reference implementations used as oracles by the integration tests.
//! They share no search code with the solver: every crossing plan is
//! enumerated outright and checked by planarizing and testing planarity.

#![allow(dead_code)]

use onep::graph::Graph;
use onep::plan::{planarize, CrossingPlan, Edge};
use onep::planarity::{common_face_test, is_planar};

fn independent(a: Edge, b: Edge) -> bool {
    a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1
}

/// Calls `visit` on every set of disjoint independent edge pairs; stops early
/// when it returns true.
fn each_plan(g: &Graph, visit: &mut dyn FnMut(&CrossingPlan) -> bool) -> bool {
    let edges = g.edges().to_vec();
    let mut used = vec![false; edges.len()];
    let mut pairs = Vec::new();
    rec(&edges, 0, &mut used, &mut pairs, visit)
}

fn rec(
    edges: &[Edge],
    from: usize,
    used: &mut [bool],
    pairs: &mut Vec<(Edge, Edge)>,
    visit: &mut dyn FnMut(&CrossingPlan) -> bool,
) -> bool {
    let Some(i) = (from..edges.len()).find(|&i| !used[i]) else {
        return visit(&CrossingPlan::new(pairs.iter().copied()));
    };
    used[i] = true;
    if rec(edges, i + 1, used, pairs, visit) {
        return true;
    }
    for j in i + 1..edges.len() {
        if used[j] || !independent(edges[i], edges[j]) {
            continue;
        }
        used[j] = true;
        pairs.push((edges[i], edges[j]));
        let hit = rec(edges, i + 1, used, pairs, visit);
        pairs.pop();
        used[j] = false;
        if hit {
            return true;
        }
    }
    used[i] = false;
    false
}

pub fn naive_one_planar(g: &Graph) -> bool {
    each_plan(g, &mut |plan| {
        let p = planarize(g, plan).expect("enumerated plans are valid");
        is_planar(&p.graph).is_some()
    })
}

pub fn naive_outer_one_planar(g: &Graph) -> bool {
    let trues: Vec<usize> = (0..g.vertex_count()).collect();
    each_plan(g, &mut |plan| {
        let p = planarize(g, plan).expect("enumerated plans are valid");
        common_face_test(&p.graph, &trues)
    })
}

/// Number of plans the naive oracle would visit (for sizing corpora).
pub fn plan_count(g: &Graph) -> u64 {
    let mut count = 0;
    each_plan(g, &mut |_| {
        count += 1;
        false
    });
    count
}
