//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! and holding its stated time budget.

mod support;

use igt_core::catalog::{
    classify, default_negative_corpus, theorem_instances, verify_theorem, Expected, Verdict,
};
use igt_core::forbidden::{find_clique, find_complete_bipartite, is_k33_free, validate_witness};
use igt_core::igraph::{build_intersection_graph, IntersectionGraph};
use igt_core::lattice::enumerate_subgroups;
use igt_core::spec::parse;
use igt_core::{Limits, PatternWitness, SubgroupLattice};
use std::time::{Duration, Instant};

fn limits() -> Limits {
    Limits::default()
}

fn lattice_of(text: &str) -> SubgroupLattice {
    let g = parse(text).unwrap().build(&limits()).unwrap();
    enumerate_subgroups(g, &limits()).unwrap()
}

fn graph_of(text: &str) -> IntersectionGraph {
    build_intersection_graph(&lattice_of(text))
}

struct Criterion {
    number: u32,
    name: &'static str,
    budget: Duration,
    start: Instant,
    failures: Vec<String>,
}

impl Criterion {
    fn new(number: u32, name: &'static str, budget: Duration) -> Self {
        Criterion {
            number,
            name,
            budget,
            start: Instant::now(),
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: &str) {
        if !ok {
            self.failures.push(what.to_string());
        }
    }

    fn finish(mut self) {
        let elapsed = self.start.elapsed();
        if elapsed > self.budget {
            self.failures.push(format!(
                "exceeded budget: {elapsed:?} > {:?}",
                self.budget
            ));
        }
        let status = if self.failures.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "acceptance criterion {:>2} ({}): {status} [{elapsed:?}]",
            self.number, self.name
        );
        assert!(
            self.failures.is_empty(),
            "criterion {} failed: {:?}",
            self.number,
            self.failures
        );
    }
}

#[test]
fn criterion_01_z24_graph() {
    let mut c = Criterion::new(1, "Z_24 graph", Duration::from_secs(1));
    let g = graph_of("C(24)");
    c.check(g.vertex_count() == 6, "exactly 6 vertices");
    c.check(find_clique(&g, 5).is_some(), "a 5-clique exists");
    c.check(find_clique(&g, 6).is_none(), "no 6-clique");
    let p3 = g.position_with_order(3).expect("an order-3 vertex");
    let d = g.degree(g.vertex_ids()[p3]).unwrap();
    c.check(d == 2, "order-3 vertex has degree 2");
    c.check(is_k33_free(&g), "K3,3-free");
    c.finish();
}

#[test]
fn criterion_02_z36_contains_k33() {
    let mut c = Criterion::new(2, "Z_36 contains K3,3", Duration::from_secs(1));
    let g = graph_of("C(36)");
    match find_complete_bipartite(&g, 3, 3) {
        Some(w) => c.check(validate_witness(&g, &w), "witness validates"),
        None => c.check(false, "witness exists"),
    }
    c.finish();
}

#[test]
fn criterion_03_rank_three_elementary_abelian() {
    let mut c = Criterion::new(3, "(Z_2)^3 has K7 of maximals", Duration::from_secs(1));
    let l = lattice_of("C(2)*C(2)*C(2)");
    let maximal_ids: Vec<usize> = l.maximal_subgroups().map(|s| s.id).collect();
    c.check(maximal_ids.len() == 7, "seven maximal subgroups");
    let g = build_intersection_graph(&l);
    match find_clique(&g, 7) {
        Some(PatternWitness::Clique { ref members, .. }) => {
            c.check(
                members == &maximal_ids,
                "the 7-clique is exactly the maximal subgroups",
            );
        }
        _ => c.check(false, "a 7-clique exists"),
    }
    c.check(!is_k33_free(&g), "contains K3,3");
    c.finish();
}

#[test]
fn criterion_04_q16_is_k9() {
    let mut c = Criterion::new(4, "Q16 graph is K9", Duration::from_secs(1));
    let g = graph_of("Dic(4)");
    c.check(g.vertex_count() == 9, "exactly 9 vertices");
    c.check(g.edge_count() == 9 * 8 / 2, "all pairs adjacent");
    match find_clique(&g, 9) {
        Some(w) => {
            c.check(validate_witness(&g, &w), "K9 witness validates");
            if let PatternWitness::Clique { members, .. } = &w {
                c.check(members.len() == 9, "witness spans all vertices");
            }
        }
        None => c.check(false, "a 9-clique exists"),
    }
    c.finish();
}

#[test]
fn criterion_05_z9xz3_graph() {
    let mut c = Criterion::new(5, "Z_9 x Z_3 graph", Duration::from_secs(1));
    let g = graph_of("C(9)*C(3)");
    c.check(g.vertex_count() == 8, "8 vertices");
    c.check(find_clique(&g, 5).is_some(), "a K5 exists");
    c.check(is_k33_free(&g), "K3,3-free");
    c.finish();
}

#[test]
fn criterion_06_nonabelian_nilpotent_families() {
    let mut c = Criterion::new(6, "nonabelian nilpotent groups", Duration::from_secs(5));
    for spec in [
        "D(8)",
        "Dic(2)",
        "SDE(3,3,2)",
        "Perm(9;(1 2 3 4 5 6 7 8 9),(2 5 8)(3 9 6))",
    ] {
        let l = lattice_of(spec);
        c.check(
            l.group().is_nilpotent(),
            &format!("{spec} is nilpotent"),
        );
        let g = build_intersection_graph(&l);
        c.check(is_k33_free(&g), &format!("{spec} is K3,3-free"));
    }
    c.finish();
}

#[test]
fn criterion_07_default_verification_run() {
    let mut c = Criterion::new(7, "verify --max-order 100", Duration::from_secs(60));
    let report = verify_theorem(100, &default_negative_corpus(), false, 1, &limits());
    c.check(report.pass, "report passes");
    c.check(
        report.entries.iter().all(|e| e.error.is_none()),
        "no entry errored",
    );

    // named instances the run must include
    let specs: Vec<&str> = report.entries.iter().map(|e| e.spec.as_str()).collect();
    for expect in ["SDC(3,4,2)", "D(18)", "SDE(2,3,1)", "SDC(7,6,3)"] {
        c.check(specs.contains(&expect), &format!("{expect} is in the run"));
    }
    let order42 = report
        .entries
        .iter()
        .find(|e| e.spec == "SDC(7,6,3)")
        .unwrap();
    c.check(order42.item == Some(6), "Z_7 x| Z_6 belongs to item 6");
    c.check(
        order42.stats.as_ref().map(|s| s.order) == Some(42),
        "Z_7 x| Z_6 has order 42",
    );

    // Z_3 x| Z_4: six vertices, the order-3 vertex of degree one
    let g = graph_of("SDC(3,4,2)");
    c.check(g.vertex_count() == 6, "Z_3 x| Z_4 has 6 vertices");
    let p3 = g.position_with_order(3).unwrap();
    c.check(
        g.degree(g.vertex_ids()[p3]).unwrap() == 1,
        "order-3 vertex has degree 1",
    );

    // negatives all classified ContainsK33
    for e in report.entries.iter().filter(|e| e.item.is_none()) {
        c.check(
            e.actual == Some(Expected::ContainsK33),
            &format!("{} contains K3,3", e.spec),
        );
    }
    c.finish();
}

#[test]
fn criterion_08_extended_instances() {
    let mut c = Criterion::new(8, "extended run (orders 136 and 2601)", Duration::from_secs(600));

    let l = lattice_of("SDC(17,8,2)");
    c.check(
        l.proper_nontrivial().count() == 54,
        "54 proper nontrivial subgroups",
    );
    let counts: Vec<(usize, usize)> =
        l.counts_by_order().iter().map(|(&o, &n)| (o, n)).collect();
    c.check(
        counts
            == vec![
                (1, 1),
                (2, 17),
                (4, 17),
                (8, 17),
                (17, 1),
                (34, 1),
                (68, 1),
                (136, 1)
            ],
        "17 Sylow-2 towers of three subgroups each plus N, NA, NB",
    );
    let g = build_intersection_graph(&l);
    c.check(is_k33_free(&g), "order-136 instance is K3,3-free");

    let outcome = classify("SDE(17,9,7)", &limits()).unwrap();
    c.check(
        outcome.verdict == Verdict::K33Free,
        "order-2601 instance is K3,3-free",
    );
    let counts: Vec<(usize, usize)> = outcome
        .stats
        .counts_by_order
        .iter()
        .map(|(&o, &n)| (o, n))
        .collect();
    c.check(
        counts
            == vec![
                (1, 1),
                (3, 289),
                (9, 289),
                (17, 18),
                (289, 1),
                (867, 1),
                (2601, 1)
            ],
        "order-2601 subgroup counts match the by-hand derivation",
    );
    c.finish();
}

#[test]
fn criterion_09_lattice_property_suites() {
    let mut c = Criterion::new(9, "lattice properties over the corpus", Duration::from_secs(120));
    let mut specs: Vec<String> = theorem_instances(100)
        .iter()
        .map(|i| i.spec_text())
        .collect();
    specs.extend(default_negative_corpus().into_iter().map(|e| e.spec));

    let mut product_violations = 0u32;
    let mut sylow_violations = 0u32;
    let mut minimal_normal_violations = 0u32;
    for spec in &specs {
        let l = lattice_of(spec);
        let subs = l.subgroups();
        for (i, x) in subs.iter().enumerate() {
            for y in &subs[i..] {
                if !l.product_formula_check(x, y) {
                    product_violations += 1;
                }
            }
        }
        let n = l.group().order();
        for (p, e) in igt_core::group::factorize(n) {
            for k in 1..=e {
                if !l.sylow_congruence_check(p, k as u32).unwrap() {
                    sylow_violations += 1;
                }
            }
        }
        if l.group().is_solvable() {
            for m in l.minimal_normal_subgroups() {
                if !l.is_elementary_abelian(m) {
                    minimal_normal_violations += 1;
                }
            }
        }
    }
    c.check(product_violations == 0, "product formula holds for all pairs");
    c.check(
        sylow_violations == 0,
        "prime-power subgroup counts are 1 mod p",
    );
    c.check(
        minimal_normal_violations == 0,
        "minimal normal subgroups of solvable groups are elementary abelian",
    );
    c.finish();
}

#[test]
fn criterion_10_oracle_equivalence() {
    let mut c = Criterion::new(10, "oracle equivalence on small graphs", Duration::from_secs(30));
    let mut disagreements = 0u32;
    let mut compared = 0u32;

    let mut check_graph = |g: &IntersectionGraph, label: &str, c: &mut Criterion| {
        let adj = support::adjacency_matrix(g);
        // K3,3 against the subset-enumeration oracle
        let got = find_complete_bipartite(g, 3, 3);
        let expect = support::naive_complete_bipartite(&adj, 3, 3);
        compared += 1;
        match (&got, &expect) {
            (None, None) => {}
            (Some(PatternWitness::CompleteBipartite { side_a, side_b, .. }), Some((ea, eb)))
                if &support::ids_to_positions(g, side_a) == ea
                    && &support::ids_to_positions(g, side_b) == eb => {}
            _ => {
                disagreements += 1;
                c.check(false, &format!("{label}: K3,3 disagreement"));
            }
        }
        // cliques up to K6
        for k in 1..=6 {
            compared += 1;
            let got = find_clique(g, k);
            let expect = support::naive_clique(&adj, k);
            match (&got, &expect) {
                (None, None) => {}
                (Some(PatternWitness::Clique { members, .. }), Some(e))
                    if &support::ids_to_positions(g, members) == e => {}
                _ => {
                    disagreements += 1;
                    c.check(false, &format!("{label}: K{k} disagreement"));
                }
            }
        }
    };

    // 200 random graphs on up to 12 vertices
    let mut rng = support::seeded_rng(0x16c7);
    for round in 0..200u32 {
        let n = (round % 13) as usize;
        let p = [0.15, 0.35, 0.55, 0.8][(round / 13) as usize % 4];
        let g = support::random_graph(&mut rng, n, p);
        check_graph(&g, &format!("random {round}"), &mut c);
    }

    // corpus graphs with at most 12 vertices
    let mut specs: Vec<String> = theorem_instances(100)
        .iter()
        .map(|i| i.spec_text())
        .collect();
    specs.extend(default_negative_corpus().into_iter().map(|e| e.spec));
    let mut corpus_graphs = 0;
    for spec in &specs {
        let g = graph_of(spec);
        if g.vertex_count() <= 12 {
            corpus_graphs += 1;
            check_graph(&g, spec, &mut c);
        }
    }
    c.check(corpus_graphs > 0, "some corpus graphs qualify");
    c.check(
        disagreements == 0,
        &format!("zero disagreements over {compared} comparisons"),
    );
    c.finish();
}
