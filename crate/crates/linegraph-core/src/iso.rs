//! Small-graph isomorphism and exhaustive enumeration.
//!
//! Deliberately exponential, guarded to at most [`SMALL_GRAPH_LIMIT`] nodes;
//! these exist for oracle testing, not production-scale inputs.

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::Graph;

pub const SMALL_GRAPH_LIMIT: usize = 10;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SizeGuardError {
    #[error("graph with {0} nodes exceeds the small-graph guard ({SMALL_GRAPH_LIMIT})")]
    TooLarge(usize),
}

/// Canonical key: node count plus the lexicographically smallest
/// upper-triangle bitstring over all degree-respecting relabelings.
/// Two graphs are isomorphic iff their keys are equal.
pub fn canonical_form(g: &Graph) -> Result<(usize, u64), SizeGuardError> {
    let n = g.node_count();
    if n > SMALL_GRAPH_LIMIT {
        return Err(SizeGuardError::TooLarge(n));
    }
    let mut adj = vec![0u16; n];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    Ok((n, canon_bits(&adj, n)))
}

/// True iff an edge-preserving node bijection exists. Both graphs must be
/// within the small-graph guard.
pub fn isomorphic_small(g1: &Graph, g2: &Graph) -> Result<bool, SizeGuardError> {
    if g1.node_count() != g2.node_count() || g1.edge_count() != g2.edge_count() {
        // still enforce the guard on both inputs
        for g in [g1, g2] {
            if g.node_count() > SMALL_GRAPH_LIMIT {
                return Err(SizeGuardError::TooLarge(g.node_count()));
            }
        }
        return Ok(false);
    }
    let mut d1 = g1.degrees();
    let mut d2 = g2.degrees();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        for g in [g1, g2] {
            if g.node_count() > SMALL_GRAPH_LIMIT {
                return Err(SizeGuardError::TooLarge(g.node_count()));
            }
        }
        return Ok(false);
    }
    Ok(canonical_form(g1)? == canonical_form(g2)?)
}

// Pair (i, j), i < j, has sequence index j*(j-1)/2 + i; earlier pairs sit at
// higher bit positions so u64 comparison is lexicographic on the sequence.
fn canon_bits(adj: &[u16], n: usize) -> u64 {
    if n < 2 {
        return 0;
    }
    let total = n * (n - 1) / 2;
    let mut degs: Vec<usize> = adj.iter().map(|m| m.count_ones() as usize).collect();
    let mut target = degs.clone();
    target.sort_unstable_by(|a, b| b.cmp(a));

    let mut best = u64::MAX;
    let mut perm = vec![0usize; n];
    search(adj, n, total, &degs, &target, &mut perm, 0, 0u16, 0u64, &mut best);
    degs.clear();
    best
}

#[allow(clippy::too_many_arguments)]
fn search(
    adj: &[u16],
    n: usize,
    total: usize,
    degs: &[usize],
    target: &[usize],
    perm: &mut [usize],
    pos: usize,
    used: u16,
    bits: u64,
    best: &mut u64,
) {
    if pos == n {
        if bits < *best {
            *best = bits;
        }
        return;
    }
    let filled_after = (pos + 1) * pos / 2;
    let shift = total - filled_after;
    for v in 0..n {
        if used >> v & 1 == 1 || degs[v] != target[pos] {
            continue;
        }
        let mut nbits = bits;
        for (i, &pv) in perm.iter().enumerate().take(pos) {
            if adj[pv] >> v & 1 == 1 {
                let seq = pos * (pos - 1) / 2 + i;
                nbits |= 1 << (total - 1 - seq);
            }
        }
        // prefix compare against the best-so-far; both are multiples of 2^shift
        if *best != u64::MAX && nbits > (*best >> shift) << shift {
            continue;
        }
        perm[pos] = v;
        search(adj, n, total, degs, target, perm, pos + 1, used | 1 << v, nbits, best);
    }
}

/// One representative per isomorphism class of connected graphs with at most
/// `max_edges` edges and at most `max_nodes` nodes, including the one-node
/// graph. Built by edge augmentation with canonical-form deduplication.
pub fn enumerate_connected(max_nodes: usize, max_edges: usize) -> Vec<Graph> {
    assert!(
        max_nodes <= SMALL_GRAPH_LIMIT,
        "enumeration relies on the small-graph canonical form"
    );
    let k1 = Graph::new(1, Vec::new()).unwrap();
    let mut seen: HashSet<(usize, u64)> = HashSet::new();
    seen.insert(canonical_form(&k1).unwrap());
    let mut out = vec![k1.clone()];
    let mut frontier = vec![k1];
    for _ in 0..max_edges {
        let mut next = Vec::new();
        for g in &frontier {
            let n = g.node_count();
            let adj = g.adjacency_matrix();
            let mut candidates: Vec<Graph> = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if !adj.get(u, v) {
                        let mut edges = g.edges().to_vec();
                        edges.push((u, v));
                        candidates.push(Graph::new(n, edges).unwrap());
                    }
                }
            }
            if n < max_nodes {
                for v in 0..n {
                    let mut edges = g.edges().to_vec();
                    edges.push((v, n));
                    candidates.push(Graph::new(n + 1, edges).unwrap());
                }
            }
            for c in candidates {
                let key = canonical_form(&c).unwrap();
                if seen.insert(key) {
                    out.push(c.clone());
                    next.push(c);
                }
            }
        }
        frontier = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges.to_vec()).unwrap()
    }

    #[test]
    fn k3_isomorphic_under_relabeling() {
        let a = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        let b = graph(3, &[(2, 1), (0, 2), (1, 0)]);
        assert!(isomorphic_small(&a, &b).unwrap());
    }

    #[test]
    fn k3_vs_claw_not_isomorphic() {
        let k3 = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        let claw = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(!isomorphic_small(&k3, &claw).unwrap());
    }

    #[test]
    fn c6_vs_two_triangles_not_isomorphic() {
        let c6 = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]);
        let tt = graph(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        // same degree sequence; only the exhaustive check separates them
        assert!(!isomorphic_small(&c6, &tt).unwrap());
        // oracle: brute-force over all 720 bijections
        assert!(!any_bijection_matches(&c6, &tt));
    }

    fn any_bijection_matches(a: &Graph, b: &Graph) -> bool {
        let n = a.node_count();
        let am = a.adjacency_matrix();
        let bm = b.adjacency_matrix();
        let mut perm: Vec<usize> = (0..n).collect();
        permute(&mut perm, 0, &mut |p| {
            (0..n).all(|i| ((i + 1)..n).all(|j| am.get(i, j) == bm.get(p[i], p[j])))
        })
    }

    fn permute(perm: &mut Vec<usize>, k: usize, check: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if k == perm.len() {
            return check(perm);
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            if permute(perm, k + 1, check) {
                perm.swap(k, i);
                return true;
            }
            perm.swap(k, i);
        }
        false
    }

    #[test]
    fn guard_rejects_large_graphs() {
        let big = graph(11, &[]);
        assert_eq!(
            canonical_form(&big),
            Err(SizeGuardError::TooLarge(11))
        );
    }

    #[test]
    fn enumeration_counts_match_oeis() {
        // connected graphs by edge count (any order): 1, 1, 1, 3, 5, 12, 30
        let graphs = enumerate_connected(8, 6);
        let mut by_edges = vec![0usize; 7];
        for g in &graphs {
            by_edges[g.edge_count()] += 1;
        }
        assert_eq!(by_edges, vec![1, 1, 1, 3, 5, 12, 30]);
    }

    #[test]
    fn enumeration_on_at_most_five_nodes() {
        // connected graphs on exactly 1..=5 nodes: 1, 1, 2, 6, 21
        let graphs = enumerate_connected(5, 10);
        let mut by_nodes = vec![0usize; 6];
        for g in &graphs {
            by_nodes[g.node_count()] += 1;
        }
        assert_eq!(by_nodes[1..], [1, 1, 2, 6, 21]);
    }
}
