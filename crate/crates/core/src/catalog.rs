//! Catalog-level verification: generate every family of the K33-free
//! classification up to an order bound, classify each instance, and check a
//! curated corpus of groups expected to contain K3,3.

use crate::arith::{self, find_alpha, find_beta};
use crate::build::build;
use crate::error::Error;
use crate::forbidden::{find_complete_bipartite, PatternWitness};
use crate::group::FiniteGroup;
use crate::igraph::build_intersection_graph;
use crate::iso::are_isomorphic;
use crate::lattice::enumerate_subgroups;
use crate::spec::{parse, GroupSpec};
use crate::Limits;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

pub const REPORT_VERSION: &str = "igt-report/1";

/// One generated member of the classified families, tagged with its item
/// number (1 through 9).
#[derive(Debug, Clone)]
pub struct TheoremInstance {
    pub item: u8,
    pub spec: GroupSpec,
}

impl TheoremInstance {
    pub fn spec_text(&self) -> String {
        self.spec.to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Expected {
    K33Free,
    ContainsK33,
}

/// A corpus entry: a spec, the verdict it must produce, and a short note on
/// why.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub spec: String,
    pub expected: Expected,
    #[serde(default)]
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    K33Free,
    ContainsK33(PatternWitness),
}

impl Verdict {
    pub fn expected(&self) -> Expected {
        match self {
            Verdict::K33Free => Expected::K33Free,
            Verdict::ContainsK33(_) => Expected::ContainsK33,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeStats {
    pub order: usize,
    pub subgroups: usize,
    pub counts_by_order: BTreeMap<usize, usize>,
    pub vertices: usize,
    pub edges: usize,
}

#[derive(Debug, Clone)]
pub struct Classification {
    pub verdict: Verdict,
    pub stats: LatticeStats,
}

/// Full pipeline for one spec: parse, build, enumerate subgroups, build the
/// intersection graph, search for K3,3.
pub fn classify(spec_text: &str, limits: &Limits) -> Result<Classification, Error> {
    let spec = parse(spec_text)?;
    let group = build(&spec, limits)?;
    let lattice = enumerate_subgroups(group, limits)?;
    let graph = build_intersection_graph(&lattice);
    let stats = LatticeStats {
        order: lattice.group().order(),
        subgroups: lattice.len(),
        counts_by_order: lattice.counts_by_order().clone(),
        vertices: graph.vertex_count(),
        edges: graph.edge_count(),
    };
    let verdict = match find_complete_bipartite(&graph, 3, 3) {
        Some(w) => Verdict::ContainsK33(w),
        None => Verdict::K33Free,
    };
    Ok(Classification { verdict, stats })
}

/// All instances of items 1 through 9 with group order at most `max_order`,
/// parameters chosen as the smallest valid values; families with no valid
/// parameter at an order are skipped, never guessed. Sorted by
/// `(order, item, spec text)`.
pub fn theorem_instances(max_order: u64) -> Vec<TheoremInstance> {
    let mut out: Vec<(u64, TheoremInstance)> = Vec::new();
    let mut add = |order: u64, item: u8, spec: GroupSpec| {
        out.push((order, TheoremInstance { item, spec }));
    };
    let primes = arith::primes_upto(max_order);

    // item 1: Z_pqr, Z_p2q, Z_pq, Z_p^i (0 <= i <= 6)
    if max_order >= 1 {
        add(1, 1, GroupSpec::Cyclic(1));
    }
    for &p in &primes {
        let mut v = 1u64;
        for _ in 1..=6 {
            v = match v.checked_mul(p) {
                Some(v) if v <= max_order => v,
                _ => break,
            };
            add(v, 1, GroupSpec::Cyclic(v));
        }
    }
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            if p * q > max_order {
                break;
            }
            add(p * q, 1, GroupSpec::Cyclic(p * q));
        }
    }
    for &p in &primes {
        for &q in &primes {
            if q != p && p * p * q <= max_order {
                add(p * p * q, 1, GroupSpec::Cyclic(p * p * q));
            }
        }
    }
    for (i, &p) in primes.iter().enumerate() {
        for (j, &q) in primes.iter().enumerate().skip(i + 1) {
            for &r in &primes[j + 1..] {
                if p * q * r > max_order {
                    break;
                }
                add(p * q * r, 1, GroupSpec::Cyclic(p * q * r));
            }
        }
    }

    // item 2: Z_4 x Z_2, Z_p x Z_p, Z_2 x Z_2 x Z_p (p odd)
    if max_order >= 8 {
        add(
            8,
            2,
            product(&[GroupSpec::Cyclic(4), GroupSpec::Cyclic(2)]),
        );
    }
    for &p in &primes {
        if p * p <= max_order {
            add(
                p * p,
                2,
                product(&[GroupSpec::Cyclic(p), GroupSpec::Cyclic(p)]),
            );
        }
    }
    for &p in &primes {
        if p != 2 && 4 * p <= max_order {
            add(
                4 * p,
                2,
                product(&[
                    GroupSpec::Cyclic(2),
                    GroupSpec::Cyclic(2),
                    GroupSpec::Cyclic(p),
                ]),
            );
        }
    }

    // item 3: D_8 and Q_8
    if max_order >= 8 {
        add(8, 3, GroupSpec::Dihedral(8));
        add(8, 3, GroupSpec::Dicyclic(2));
    }

    // item 4: Z_q x| Z_p^2 with p^2 | q - 1, and (Z_p x Z_p) x| Z_q with
    // q | p + 1
    for &q in &primes {
        for &p in &primes {
            let m = p * p;
            if (q - 1) % m == 0 && q * m <= max_order {
                if let Some(alpha) = find_alpha(q, m) {
                    add(q * m, 4, GroupSpec::SdCyclic { q, m, alpha });
                }
            }
        }
    }
    for &p in &primes {
        for &q in &primes {
            if q != p && (p + 1) % q == 0 && p * p * q <= max_order {
                if let Some(beta) = find_beta(p, q) {
                    add(p * p * q, 4, GroupSpec::SdElemAb { p, m: q, beta });
                }
            }
        }
    }

    // item 5: (Z_p x Z_p) x| Z_q^2 with q^2 | p + 1; no beta exists for
    // q = 2, so the family is effectively restricted to odd q
    for &p in &primes {
        for &q in &primes {
            let m = q * q;
            if q != p && (p + 1) % m == 0 && p * p * m <= max_order {
                if let Some(beta) = find_beta(p, m) {
                    add(p * p * m, 5, GroupSpec::SdElemAb { p, m, beta });
                }
            }
        }
    }

    // item 6: Z_r x| Z_pq with pq | r - 1
    for &r in &primes {
        for (i, &p) in primes.iter().enumerate() {
            for &q in &primes[i + 1..] {
                let m = p * q;
                if p != r && q != r && (r - 1) % m == 0 && r * m <= max_order {
                    if let Some(alpha) = find_alpha(r, m) {
                        add(r * m, 6, GroupSpec::SdCyclic { q: r, m, alpha });
                    }
                }
            }
        }
    }

    // item 7: Z_p x| Z_q with q | p - 1
    for &p in &primes {
        for &q in &primes {
            if q < p && (p - 1) % q == 0 && p * q <= max_order {
                if let Some(alpha) = find_alpha(p, q) {
                    add(p * q, 7, GroupSpec::SdCyclic { q: p, m: q, alpha });
                }
            }
        }
    }

    // item 8: Z_p^3 x Z_q, Z_9 x Z_3, (Z_3 x Z_3) x| Z_3, Z_9 x| Z_3,
    // Z_3 x| Z_4, and D_18
    for &p in &primes {
        if let Some(p3) = p.checked_mul(p).and_then(|v| v.checked_mul(p)) {
            for &q in &primes {
                if q != p && p3 * q <= max_order {
                    add(
                        p3 * q,
                        8,
                        product(&[GroupSpec::Cyclic(p3), GroupSpec::Cyclic(q)]),
                    );
                }
            }
        }
    }
    if max_order >= 27 {
        add(
            27,
            8,
            product(&[GroupSpec::Cyclic(9), GroupSpec::Cyclic(3)]),
        );
        add(27, 8, GroupSpec::SdElemAb { p: 3, m: 3, beta: 2 });
        add(27, 8, z9_semidirect_z3_spec());
    }
    if max_order >= 12 {
        add(12, 8, GroupSpec::SdCyclic { q: 3, m: 4, alpha: 2 });
    }
    if max_order >= 18 {
        add(18, 8, GroupSpec::Dihedral(18));
    }

    // item 9: Z_q x| Z_p^3 with p^3 | q - 1
    for &q in &primes {
        for &p in &primes {
            let m = p * p * p;
            if (q - 1) % m == 0 && q * m <= max_order {
                if let Some(alpha) = find_alpha(q, m) {
                    add(q * m, 9, GroupSpec::SdCyclic { q, m, alpha });
                }
            }
        }
    }

    out.sort_by(|a, b| {
        (a.0, a.1.item, a.1.spec.to_string()).cmp(&(b.0, b.1.item, b.1.spec.to_string()))
    });
    out.into_iter().map(|(_, inst)| inst).collect()
}

fn product(factors: &[GroupSpec]) -> GroupSpec {
    let mut iter = factors.iter().cloned();
    let first = iter.next().expect("at least one factor");
    iter.fold(first, |acc, f| {
        GroupSpec::DirectProduct(Box::new(acc), Box::new(f))
    })
}

/// The nonabelian order-27 group of exponent 9 as a faithful permutation
/// action on nine points: a nine-cycle together with x -> 4x (mod 9), which
/// conjugates the cycle to its fourth power.
pub fn z9_semidirect_z3_spec() -> GroupSpec {
    GroupSpec::PermClosure {
        degree: 9,
        gens: vec![
            vec![1, 2, 3, 4, 5, 6, 7, 8, 0],
            vec![0, 4, 8, 3, 7, 2, 6, 1, 5],
        ],
    }
}

/// The default corpus of groups expected to contain K3,3.
pub fn default_negative_corpus() -> Vec<CorpusEntry> {
    let entry = |spec: &str, note: &str| CorpusEntry {
        spec: spec.to_string(),
        expected: Expected::ContainsK33,
        note: note.to_string(),
    };
    vec![
        entry("C(128)", "cyclic of order 2^7"),
        entry("C(36)", "cyclic of order 2^2 * 3^2"),
        entry("C(2)*C(2)*C(2)", "elementary abelian of rank 3"),
        entry("C(25)*C(5)", "Z_25 x Z_5, rank-2 5-group"),
        entry("C(27)*C(3)", "Z_27 x Z_3"),
        entry("D(50)", "dihedral of order 2 * 5^2, matches no catalog family"),
        entry("C(3)*C(3)*C(2)", "(Z_3 x Z_3) x Z_2"),
        entry("Perm(4;(1 2),(1 2 3 4))", "symmetric group on 4 points"),
        entry(
            "Perm(5;(1 2 3),(1 2 3 4 5))",
            "alternating group on 5 points, non-solvable",
        ),
        entry(
            "SDE(3,4,0)",
            "(Z_3 x Z_3) x| Z_4 whose square action -I has an eigenvalue",
        ),
    ]
}

/// The two instances beyond the default order window: the smallest item-9
/// group (order 136) and the smallest item-5 group (order 2601, since q must
/// be odd there).
pub fn extended_entries() -> Vec<CorpusEntry> {
    let beta = find_beta(17, 9).expect("an order-9 companion matrix exists over Z_17");
    vec![
        CorpusEntry {
            spec: "SDC(17,8,2)".to_string(),
            expected: Expected::K33Free,
            note: "item 9, smallest instance".to_string(),
        },
        CorpusEntry {
            spec: format!("SDE(17,9,{beta})"),
            expected: Expected::K33Free,
            note: "item 5, smallest instance".to_string(),
        },
    ]
}

pub fn parse_corpus_json(text: &str) -> Result<Vec<CorpusEntry>, Error> {
    serde_json::from_str(text).map_err(|e| Error::Corpus(e.to_string()))
}

#[derive(Debug, Clone, Serialize)]
pub struct EntryReport {
    pub spec: String,
    /// Item number for generated catalog instances, absent for corpus
    /// entries.
    pub item: Option<u8>,
    pub note: String,
    pub expected: Expected,
    pub actual: Option<Expected>,
    pub witness: Option<PatternWitness>,
    pub stats: Option<LatticeStats>,
    pub error: Option<String>,
    pub ms: u128,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub version: String,
    pub max_order: u64,
    pub extended: bool,
    pub notes: Vec<String>,
    pub entries: Vec<EntryReport>,
    pub pass: bool,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn has_guard_errors(&self) -> bool {
        self.entries.iter().any(|e| {
            e.error
                .as_deref()
                .is_some_and(|msg| msg.starts_with("guard: "))
        })
    }

    /// One line per entry plus a final verdict, for terminal output.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        for e in &self.entries {
            let status = if e.pass { "PASS" } else { "FAIL" };
            let actual = match (&e.actual, &e.error) {
                (Some(Expected::K33Free), _) => "K33Free".to_string(),
                (Some(Expected::ContainsK33), _) => "ContainsK33".to_string(),
                (None, Some(err)) => format!("error: {err}"),
                (None, None) => "unknown".to_string(),
            };
            let item = e.item.map(|i| format!(" [item {i}]")).unwrap_or_default();
            out.push_str(&format!(
                "{status} {spec}{item}: {actual} ({ms} ms)\n",
                spec = e.spec,
                ms = e.ms
            ));
        }
        out.push_str(&format!(
            "verified {} entries: {}\n",
            self.entries.len(),
            if self.pass { "PASS" } else { "FAIL" }
        ));
        out
    }
}

struct WorkItem {
    spec: String,
    item: Option<u8>,
    note: String,
    expected: Expected,
}

/// Classify every catalog instance up to `max_order` (each must come out
/// K33-free) and every corpus entry (each must match its expected verdict).
/// Entries run independently across `jobs` workers; the report keeps input
/// order regardless of scheduling.
pub fn verify_theorem(
    max_order: u64,
    corpus: &[CorpusEntry],
    extended: bool,
    jobs: usize,
    limits: &Limits,
) -> Report {
    let mut work: Vec<WorkItem> = Vec::new();
    for inst in theorem_instances(max_order) {
        work.push(WorkItem {
            spec: inst.spec_text(),
            item: Some(inst.item),
            note: String::new(),
            expected: Expected::K33Free,
        });
    }
    if extended {
        for e in extended_entries() {
            work.push(WorkItem {
                spec: e.spec,
                item: None,
                note: e.note,
                expected: e.expected,
            });
        }
    }
    for e in corpus {
        work.push(WorkItem {
            spec: e.spec.clone(),
            item: None,
            note: e.note.clone(),
            expected: e.expected,
        });
    }

    let entries = run_work(&work, jobs, limits);
    let pass = entries.iter().all(|e| e.pass);
    Report {
        version: REPORT_VERSION.to_string(),
        max_order,
        extended,
        notes: vec![
            format!(
                "catalog families are generated exhaustively up to order {max_order}; \
                 the converse direction is checked against a curated corpus, not \
                 against every group of every order"
            ),
            "entries are classified as standalone groups; constraints about \
             embedding one group as a proper subgroup of another are not modeled"
                .to_string(),
        ],
        entries,
        pass,
    }
}

fn run_work(work: &[WorkItem], jobs: usize, limits: &Limits) -> Vec<EntryReport> {
    let jobs = jobs.clamp(1, work.len().max(1));
    if jobs == 1 {
        return work.iter().map(|w| run_one(w, limits)).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<EntryReport>>> =
        work.iter().map(|_| Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= work.len() {
                    break;
                }
                let report = run_one(&work[i], limits);
                *slots[i].lock().expect("result slot") = Some(report);
            });
        }
    });
    slots
        .into_iter()
        .map(|m| m.into_inner().expect("no poisoned slots").expect("slot filled"))
        .collect()
}

fn run_one(w: &WorkItem, limits: &Limits) -> EntryReport {
    let start = Instant::now();
    match classify(&w.spec, limits) {
        Ok(c) => {
            let actual = c.verdict.expected();
            let witness = match c.verdict {
                Verdict::ContainsK33(w) => Some(w),
                Verdict::K33Free => None,
            };
            EntryReport {
                spec: w.spec.clone(),
                item: w.item,
                note: w.note.clone(),
                expected: w.expected,
                actual: Some(actual),
                witness,
                stats: Some(c.stats),
                error: None,
                ms: start.elapsed().as_millis(),
                pass: actual == w.expected,
            }
        }
        Err(e) => EntryReport {
            spec: w.spec.clone(),
            item: w.item,
            note: w.note.clone(),
            expected: w.expected,
            actual: None,
            witness: None,
            stats: None,
            error: Some(if e.is_resource_guard() {
                format!("guard: {e}")
            } else {
                e.to_string()
            }),
            ms: start.elapsed().as_millis(),
            pass: false,
        },
    }
}

/// Map a built group back to a catalog item by isomorphism against the
/// generated instances of the same order, or `None` when it matches no
/// family.
pub fn match_family(group: &FiniteGroup, limits: &Limits) -> Result<Option<u8>, Error> {
    if group.order() > limits.max_iso_order {
        return Err(Error::IsoBound {
            order: group.order(),
            bound: limits.max_iso_order,
        });
    }
    for inst in theorem_instances(group.order() as u64) {
        match inst.spec.known_order() {
            Some(o) if o as usize != group.order() => continue,
            _ => {}
        }
        let candidate = build(&inst.spec, limits)?;
        if candidate.order() != group.order() {
            continue;
        }
        if are_isomorphic(group, &candidate, limits)? {
            return Ok(Some(inst.item));
        }
    }
    Ok(None)
}
