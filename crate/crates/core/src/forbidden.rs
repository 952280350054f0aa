//! Complete bipartite and complete subgraph detection with explicit
//! witnesses. Containment is subgraph containment: the pattern's edges must
//! all be present, nothing is required of the remaining pairs.

use crate::bitset::ElemSet;
use crate::igraph::IntersectionGraph;
use serde::Serialize;

/// An explicit embedding, expressed in vertex ids of the host graph. Sides
/// are sorted ascending; ties between candidate witnesses are broken
/// lexicographically so reports are reproducible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum PatternWitness {
    CompleteBipartite {
        pattern: String,
        side_a: Vec<usize>,
        side_b: Vec<usize>,
    },
    Clique {
        pattern: String,
        members: Vec<usize>,
    },
}

impl PatternWitness {
    fn bipartite(m: usize, n: usize, side_a: Vec<usize>, side_b: Vec<usize>) -> Self {
        PatternWitness::CompleteBipartite {
            pattern: format!("K{m},{n}"),
            side_a,
            side_b,
        }
    }

    fn clique(k: usize, members: Vec<usize>) -> Self {
        PatternWitness::Clique {
            pattern: format!("K{k}"),
            members,
        }
    }

    pub fn pattern(&self) -> &str {
        match self {
            PatternWitness::CompleteBipartite { pattern, .. } => pattern,
            PatternWitness::Clique { pattern, .. } => pattern,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("witness serializes")
    }
}

/// Check a claimed witness against the host graph: sides disjoint and of the
/// right size, every required pair an edge.
pub fn validate_witness(g: &IntersectionGraph, w: &PatternWitness) -> bool {
    let edge = |a: usize, b: usize| g.has_edge_ids(a, b).unwrap_or(false);
    match w {
        PatternWitness::CompleteBipartite { side_a, side_b, .. } => {
            if side_a.iter().any(|v| side_b.contains(v)) {
                return false;
            }
            side_a
                .iter()
                .all(|&a| side_b.iter().all(|&b| edge(a, b)))
        }
        PatternWitness::Clique { members, .. } => {
            for (i, &a) in members.iter().enumerate() {
                for &b in &members[i + 1..] {
                    if a == b || !edge(a, b) {
                        return false;
                    }
                }
            }
            true
        }
    }
}

/// Find a `K_{m,n}` subgraph (`m <= n`), returning the lexicographically
/// smallest witness (by sorted `side_a`, then `side_b`) or `None`.
///
/// Vertices of degree below `min(m, n)` can belong to neither side and are
/// discarded up front; `m`-subsets are then enumerated in lexicographic
/// order, and the first whose common neighborhood still holds `n` vertices
/// wins. A common neighbor is automatically distinct from every member of
/// the `m`-set, so the sides cannot collide.
pub fn find_complete_bipartite(
    g: &IntersectionGraph,
    m: usize,
    n: usize,
) -> Option<PatternWitness> {
    assert!(m >= 1 && m <= n, "requires 1 <= m <= n");
    let v = g.vertex_count();
    if v < m + n {
        return None;
    }
    // side A needs degree >= n, side B only >= m
    let a_pool: Vec<usize> = (0..v).filter(|&p| g.adj_at(p).len() >= n).collect();
    if a_pool.len() < m {
        return None;
    }
    let mut chosen = Vec::with_capacity(m);
    let common = ElemSet::full(v);
    search_bipartite(g, m, n, &a_pool, 0, &mut chosen, &common).map(|(side_a, side_b)| {
        PatternWitness::bipartite(
            m,
            n,
            side_a.into_iter().map(|p| g.id_at(p)).collect(),
            side_b.into_iter().map(|p| g.id_at(p)).collect(),
        )
    })
}

fn search_bipartite(
    g: &IntersectionGraph,
    m: usize,
    n: usize,
    a_pool: &[usize],
    from: usize,
    chosen: &mut Vec<usize>,
    common: &ElemSet,
) -> Option<(Vec<usize>, Vec<usize>)> {
    if chosen.len() == m {
        let side_b: Vec<usize> = common.iter().take(n).collect();
        debug_assert!(side_b.iter().all(|p| !chosen.contains(p)));
        return Some((chosen.clone(), side_b));
    }
    for (k, &cand) in a_pool.iter().enumerate().skip(from) {
        if a_pool.len() - k < m - chosen.len() {
            break;
        }
        let mut next = common.clone();
        next.intersect_with(g.adj_at(cand));
        if next.len() < n {
            continue;
        }
        chosen.push(cand);
        if let Some(found) = search_bipartite(g, m, n, a_pool, k + 1, chosen, &next) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

/// Find a `k`-clique, returning the lexicographically smallest witness or
/// `None`. Depth-first over ascending vertex positions with degree pruning.
pub fn find_clique(g: &IntersectionGraph, k: usize) -> Option<PatternWitness> {
    assert!(k >= 1);
    let v = g.vertex_count();
    if v < k {
        return None;
    }
    let pool = ElemSet::from_iter(v, (0..v).filter(|&p| g.adj_at(p).len() >= k - 1));
    let mut chosen = Vec::with_capacity(k);
    search_clique(g, k, &pool, &mut chosen)
        .map(|members| PatternWitness::clique(k, members.iter().map(|&p| g.id_at(p)).collect()))
}

fn search_clique(
    g: &IntersectionGraph,
    k: usize,
    candidates: &ElemSet,
    chosen: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if chosen.len() == k {
        return Some(chosen.clone());
    }
    let still_needed = k - chosen.len();
    let mut remaining = candidates.len();
    for cand in candidates.iter() {
        if remaining < still_needed {
            break;
        }
        remaining -= 1;
        let mut next = candidates.clone();
        next.intersect_with(g.adj_at(cand));
        for lower in next.clone().iter() {
            if lower <= cand {
                next.remove(lower);
            } else {
                break;
            }
        }
        chosen.push(cand);
        if let Some(found) = search_clique(g, k, &next, chosen) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

/// A graph is K3,3-free when it has no complete bipartite 3-by-3 subgraph.
pub fn is_k33_free(g: &IntersectionGraph) -> bool {
    find_complete_bipartite(g, 3, 3).is_none()
}
