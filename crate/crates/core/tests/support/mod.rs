//! Shared test support: naive subset-enumeration oracles for pattern search
//! and a deterministic random-graph generator. The oracles work on plain
//! adjacency matrices and stay independent of the search implementation.

// not every test target uses every helper
#![allow(dead_code)]

use igt_core::IntersectionGraph;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// First `K_{m,n}` witness in lexicographic order (by side A, then side B),
/// found by enumerating every m-subset and collecting common neighbors.
pub fn naive_complete_bipartite(
    adj: &[Vec<bool>],
    m: usize,
    n: usize,
) -> Option<(Vec<usize>, Vec<usize>)> {
    fn rec(
        adj: &[Vec<bool>],
        m: usize,
        n: usize,
        start: usize,
        side_a: &mut Vec<usize>,
    ) -> Option<(Vec<usize>, Vec<usize>)> {
        if side_a.len() == m {
            let common: Vec<usize> = (0..adj.len())
                .filter(|&x| side_a.iter().all(|&a| adj[a][x]))
                .collect();
            if common.len() >= n {
                return Some((side_a.clone(), common[..n].to_vec()));
            }
            return None;
        }
        for x in start..adj.len() {
            side_a.push(x);
            if let Some(found) = rec(adj, m, n, x + 1, side_a) {
                return Some(found);
            }
            side_a.pop();
        }
        None
    }
    rec(adj, m, n, 0, &mut Vec::new())
}

/// First `k`-clique in lexicographic order, by enumerating every k-subset.
pub fn naive_clique(adj: &[Vec<bool>], k: usize) -> Option<Vec<usize>> {
    fn rec(adj: &[Vec<bool>], k: usize, start: usize, members: &mut Vec<usize>) -> Option<Vec<usize>> {
        if members.len() == k {
            return Some(members.clone());
        }
        for x in start..adj.len() {
            if members.iter().all(|&a| adj[a][x]) {
                members.push(x);
                if let Some(found) = rec(adj, k, x + 1, members) {
                    return Some(found);
                }
                members.pop();
            }
        }
        None
    }
    rec(adj, k, 0, &mut Vec::new())
}

/// Adjacency matrix over vertex positions, rebuilt from the graph's public
/// id-based queries.
pub fn adjacency_matrix(g: &IntersectionGraph) -> Vec<Vec<bool>> {
    let ids = g.vertex_ids();
    let v = ids.len();
    let mut adj = vec![vec![false; v]; v];
    for (i, &a) in ids.iter().enumerate() {
        for (j, &b) in ids.iter().enumerate() {
            if i != j {
                adj[i][j] = g.has_edge_ids(a, b).unwrap();
            }
        }
    }
    adj
}

/// Positions (0-based) of the given vertex ids.
pub fn ids_to_positions(g: &IntersectionGraph, ids: &[usize]) -> Vec<usize> {
    ids.iter()
        .map(|&id| g.vertex_ids().binary_search(&id).unwrap())
        .collect()
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random undirected graph on `n` vertices with ids `0..n` and edge
/// probability `p`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> IntersectionGraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    IntersectionGraph::from_parts("random", 0, (0..n).collect(), vec![2; n], &edges)
        .expect("well-formed random graph")
}
