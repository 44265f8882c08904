//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Runs with `cargo test -p onep-core --test acceptance`. Criteria run
//! concurrently; output order is fixed.

mod common;

use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use onep::crossing::{crossing_number_with, planarize_multi, CrOptions, CrResult};
use onep::families::{
    chorded_cycle, cycle_square, ladder_family, parse_expr, JOIN_CLAIMS, TABLE_NEGATIVE,
    TABLE_POSITIVE,
};
use onep::graph::{classes_with_edges_at_most, isomorphism_classes, join, path, Graph};
use onep::join::{construct_apex_drawing_from, majorized_by, necessary_conditions, SmallFactor};
use onep::plan::{planarize, validate_witness};
use onep::solver::{
    is_one_planar, is_outer_one_planar, solve, Answer, Mode, Refutation, SearchBudget,
    SearchOptions,
};

/// Node cap for every 1-planarity call in this suite.
const SOLVER_NODES: u64 = 50_000_000;
/// Node cap per crossing-number computation.
const CR_NODES: u64 = 100_000_000;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    summary: String,
}

fn budget() -> SearchBudget {
    SearchBudget::nodes(SOLVER_NODES)
}

fn theorem_equivalence() -> Outcome {
    let classes: Vec<Graph> = isomorphism_classes(3)
        .into_iter()
        .chain(isomorphism_classes(4))
        .collect();
    let mut mismatches = Vec::new();
    let mut positives = 0;
    for g in &classes {
        for h in &classes {
            let theorem = majorized_by(g, h).expect("factors have >= 3 vertices").is_some();
            let v = is_one_planar(&join(g, h), budget());
            positives += theorem as usize;
            if !v.is_definite() || theorem != v.is_one_planar() {
                mismatches.push(format!("{:?} + {:?}", g.edges(), h.edges()));
            }
        }
    }
    Outcome {
        pass: mismatches.is_empty() && classes.len() == 15,
        summary: format!(
            "{} ordered pairs, {} majorized, {} mismatches {:?}",
            classes.len() * classes.len(),
            positives,
            mismatches.len(),
            mismatches
        ),
    }
}

fn join_claims() -> Outcome {
    let mut bad = Vec::new();
    for (name, expected) in JOIN_CLAIMS {
        let g = parse_expr(name).expect("registry expression parses");
        let v = is_one_planar(&g, budget());
        let ok = match (expected, v.answer) {
            (true, Answer::OnePlanar) => validate_witness(&g, v.witness.as_ref().expect("witness")),
            (false, Answer::NotOnePlanar) => true,
            _ => false,
        };
        if !ok {
            bad.push(format!("{name}: {:?}", v.answer));
        }
    }
    Outcome {
        pass: bad.is_empty(),
        summary: format!("{} joins, {} wrong {:?}", JOIN_CLAIMS.len(), bad.len(), bad),
    }
}

fn table_entries() -> Outcome {
    let mut bad = Vec::new();
    let mut max_nodes = 0;
    for name in TABLE_POSITIVE {
        let g = parse_expr(name).expect("parses");
        let v = is_one_planar(&g, budget());
        max_nodes = max_nodes.max(v.stats.nodes);
        let ok = v.answer == Answer::OnePlanar
            && validate_witness(&g, v.witness.as_ref().expect("witness"));
        if !ok {
            bad.push(format!("{name}: {:?}", v.answer));
        }
    }
    for name in TABLE_NEGATIVE {
        let g = parse_expr(name).expect("parses");
        let v = is_one_planar(&g, budget());
        max_nodes = max_nodes.max(v.stats.nodes);
        if v.answer != Answer::NotOnePlanar || v.refutation != Some(Refutation::SearchExhausted) {
            bad.push(format!("{name}: {:?} {:?}", v.answer, v.refutation));
        }
    }
    Outcome {
        pass: bad.is_empty(),
        summary: format!(
            "{} positive, {} negative, node cap {SOLVER_NODES}, max nodes used {max_nodes}, wrong {:?}",
            TABLE_POSITIVE.len(),
            TABLE_NEGATIVE.len(),
            bad
        ),
    }
}

fn certified(g: &Graph, r: &CrResult, value: usize) -> bool {
    r.value == Some(value)
        && r.lower_bound == value
        && r.witness.as_ref().is_some_and(|w| {
            w.len() == value && planarize_multi(g, w).is_ok_and(|mut p| p.embed())
        })
}

fn crossing_numbers() -> Outcome {
    let budget = SearchBudget::nodes(CR_NODES);
    // Required claim: every level below 4 is searched exhaustively.
    let k53 = parse_expr("K_{5,3}").expect("parses");
    let from_zero = CrOptions {
        density_start: false,
        ..CrOptions::default()
    };
    let t = Instant::now();
    let r = crossing_number_with(&k53, 6, budget, from_zero);
    let required = certified(&k53, &r, 4);
    let mut summary = format!("cr(K_{{5,3}}) = {:?} [{:.1?}]", r.value, t.elapsed());
    let stretch: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = ["K_{6,3}", "(C3uP1)+4P1"]
            .into_iter()
            .map(|name| {
                s.spawn(move || {
                    let g = parse_expr(name).expect("parses");
                    let t = Instant::now();
                    let r = crossing_number_with(&g, 6, budget, CrOptions::default());
                    (name, certified(&g, &r, 6), r, t.elapsed())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("no panic")).collect()
    });
    let mut stretch_ok = true;
    for (name, ok, r, elapsed) in stretch {
        let state = if ok {
            "certified".to_string()
        } else if r.budget_exhausted {
            format!("inconclusive, bounds [{}, {:?}]", r.lower_bound, r.upper_bound)
        } else {
            stretch_ok = false;
            format!("WRONG value {:?}", r.value)
        };
        summary += &format!("; cr({name}) = {:?} {state} [{elapsed:.1?}]", r.value);
    }
    Outcome {
        pass: required && stretch_ok,
        summary,
    }
}

fn constructions() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;

    let ladder = ladder_family(10).expect("valid size");
    let w = ladder.witness.as_ref().expect("shipped witness");
    let ladder_ok = ladder.graph.edge_count() == 25 && validate_witness(&ladder.graph, w);
    let apex = construct_apex_drawing_from(&ladder.graph, w);
    let apex_ok = apex
        .as_ref()
        .is_ok_and(|a| validate_witness(&join(&ladder.graph, &path(1)), a));
    ok &= ladder_ok && apex_ok;
    notes.push(format!(
        "G_10: 25 edges and witness {ladder_ok}, apex drawing {apex_ok} ({} crossings)",
        apex.map_or(0, |a| a.c)
    ));

    let sq = cycle_square(8).expect("valid size");
    let joined = join(&sq.graph, &Graph::empty(2));
    let v = is_one_planar(&joined, budget());
    let sq_ok = joined.vertex_count() == 10
        && joined.edge_count() == 32
        && v.witness.as_ref().is_some_and(|w| validate_witness(&joined, w));
    ok &= sq_ok;
    notes.push(format!("C8^2 + 2P1 (32 edges): {:?}", v.answer));

    for n in [5, 6] {
        let c = chorded_cycle(n).expect("valid size");
        let joined = join(&c.graph, &path(2));
        let v = is_one_planar(&joined, budget());
        let c_ok = c.graph.edge_count() == 2 * n - 2
            && v.witness.as_ref().is_some_and(|w| validate_witness(&joined, w));
        ok &= c_ok;
        notes.push(format!(
            "chorded C{n} ({} edges) + P2: {:?}",
            c.graph.edge_count(),
            v.answer
        ));
    }
    Outcome {
        pass: ok,
        summary: notes.join("; "),
    }
}

fn necessary_condition_soundness() -> Outcome {
    let mut checked = 0;
    let mut positives = 0;
    let mut counterexamples = Vec::new();
    let mut inconclusive = 0;
    for n in 1..=6 {
        for g in isomorphism_classes(n) {
            for factor in [SmallFactor::P1, SmallFactor::TwoP1, SmallFactor::P2] {
                let v = is_one_planar(&join(&g, &factor.graph()), budget());
                checked += 1;
                match v.answer {
                    Answer::Inconclusive => inconclusive += 1,
                    Answer::OnePlanar => {
                        positives += 1;
                        let failed: Vec<String> = necessary_conditions(&g, factor)
                            .into_iter()
                            .filter(|c| !c.holds)
                            .map(|c| c.condition)
                            .collect();
                        if !failed.is_empty() {
                            counterexamples.push(format!("{:?}+{}: {failed:?}", g.edges(), factor.name()));
                        }
                    }
                    Answer::NotOnePlanar => {}
                }
            }
        }
    }
    Outcome {
        pass: counterexamples.is_empty() && inconclusive == 0,
        summary: format!(
            "{checked} joins, {positives} 1-planar, {} counterexamples {counterexamples:?}, {inconclusive} inconclusive",
            counterexamples.len()
        ),
    }
}

fn oracle_equivalence() -> Outcome {
    let mut graphs = 0;
    let mut disagreements = Vec::new();
    for n in 1..=8 {
        for g in classes_with_edges_at_most(n, 8) {
            graphs += 1;
            let naive = common::naive_one_planar(&g);
            let naive_outer = common::naive_outer_one_planar(&g);
            for (mode, expected) in [(Mode::OnePlanar, naive), (Mode::OuterOnePlanar, naive_outer)] {
                let pruned = solve(&g, mode, budget(), SearchOptions::default());
                let unpruned = solve(&g, mode, budget(), SearchOptions::unpruned());
                let agree = pruned.is_definite()
                    && unpruned.is_definite()
                    && pruned.is_one_planar() == expected
                    && unpruned.is_one_planar() == expected;
                if !agree {
                    disagreements.push(format!("{mode:?} {:?}", g.edges()));
                }
            }
        }
    }
    Outcome {
        pass: disagreements.is_empty(),
        summary: format!(
            "{graphs} graphs on <= 8 vertices with <= 8 edges, both modes, pruned and unpruned; {} disagreements {disagreements:?}",
            disagreements.len()
        ),
    }
}

fn random_graph(rng: &mut StdRng) -> Graph {
    let n = rng.gen_range(4..=8);
    let p: f64 = rng.gen_range(0.35..0.95);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, edges).expect("valid edges")
}

fn witness_integrity() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x1b1a_2024);
    let mut witnesses = 0;
    let mut crossed = 0;
    let mut outer = 0;
    let mut failures = Vec::new();
    while witnesses < 1000 {
        let g = random_graph(&mut rng);
        let use_outer = witnesses % 4 == 3;
        let v = if use_outer {
            is_outer_one_planar(&g, budget())
        } else {
            is_one_planar(&g, budget())
        };
        let Some(w) = v.witness else { continue };
        witnesses += 1;
        outer += use_outer as usize;
        crossed += (w.c > 0) as usize;
        let p = planarize(&g, &w.plan).expect("witness plan is valid");
        let c = w.c;
        let counts = p.graph.vertex_count() == g.vertex_count() + c
            && p.graph.edge_count() == g.edge_count() + 2 * c;
        let falses = p.false_vertices().all(|z| {
            p.graph.degree(z) == 4 && p.graph.neighbors(z).iter().all(|&x| p.is_true(x))
        });
        let planar = w.embedding.matches_graph(&p.graph) && w.embedding.is_plane();
        if !(counts && falses && planar && validate_witness(&g, &w)) {
            failures.push(format!("{:?}", g.edges()));
        }
    }
    Outcome {
        pass: failures.is_empty(),
        summary: format!(
            "{witnesses} witnesses ({crossed} with crossings, {outer} outer), {} failures {failures:?}",
            failures.len()
        ),
    }
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("theorem equivalence for factors on 3-4 vertices", theorem_equivalence),
        ("join lemma suite", join_claims),
        ("complete multipartite table", table_entries),
        ("crossing numbers", crossing_numbers),
        ("constructions", constructions),
        ("necessary-condition soundness", necessary_condition_soundness),
        ("oracle equivalence and pruning safety", oracle_equivalence),
        ("witness integrity", witness_integrity),
    ];
    let start = Instant::now();
    let results: Vec<(Outcome, f64)> = std::thread::scope(|s| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|&(_, run)| {
                s.spawn(move || {
                    let t = Instant::now();
                    let out = run();
                    (out, t.elapsed().as_secs_f64())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("criterion panicked")).collect()
    });
    let mut failed = 0;
    for (i, ((name, _), (out, secs))) in criteria.iter().zip(&results).enumerate() {
        let status = if out.pass { "PASS" } else { "FAIL" };
        failed += !out.pass as usize;
        println!("criterion {} [{name}]: {status} ({secs:.1}s) {}", i + 1, out.summary);
    }
    println!(
        "acceptance: {}/{} criteria passed in {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
