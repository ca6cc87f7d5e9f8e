//! Independent recognizers and the benchmark baseline: brute-force root
//! search, the forbidden-induced-subgraph recognizer, the spectral necessary
//! condition, and a Krausz-partition reconstructor.

mod beineke;
mod krausz;
mod spectral;

pub use beineke::{
    beineke_graphs, contains_induced, find_forbidden, is_line_graph_beineke, BEINEKE_DATA,
};
pub use krausz::{krausz_partition, roussopoulos_root, BaselineError, KrauszPartition};
pub use spectral::{smallest_eigenvalue, spectral_reject, DEFAULT_SPECTRAL_TOL};

use thiserror::Error;

use crate::graph::Graph;
use crate::iso::isomorphic_small;
use crate::matrix::SymBitMatrix;

pub const BRUTE_FORCE_LINK_LIMIT: usize = 8;
pub const BEINEKE_NODE_LIMIT: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GuardError {
    #[error("{0} links exceed the brute-force guard ({BRUTE_FORCE_LINK_LIMIT})")]
    TooManyLinks(usize),
    #[error("{0} nodes exceed the induced-subgraph scan guard ({BEINEKE_NODE_LIMIT})")]
    TooManyNodes(usize),
}

/// Exhaustive root search: every simple graph with `L = c.order()` edges on
/// at most `L + 1` nodes, returned when its line graph is isomorphic to the
/// graph of `c`. `None` means no root exists. Desk-scale oracle, guarded to
/// `L <= 8`.
pub fn brute_force_root(c: &SymBitMatrix) -> Result<Option<Graph>, GuardError> {
    let l = c.order();
    if l > BRUTE_FORCE_LINK_LIMIT {
        return Err(GuardError::TooManyLinks(l));
    }
    if l == 0 {
        return Ok(Some(Graph::empty()));
    }
    let target = c.to_graph();
    let mut target_line_degrees: Vec<usize> = target.degrees();
    target_line_degrees.sort_unstable();

    let pool_nodes = l + 1;
    let mut pairs = Vec::new();
    for u in 0..pool_nodes {
        for v in (u + 1)..pool_nodes {
            pairs.push((u, v));
        }
    }
    let mut chosen: Vec<(usize, usize)> = Vec::with_capacity(l);
    let mut degrees = vec![0usize; pool_nodes];
    let found = search_roots(
        &pairs,
        0,
        l,
        &mut chosen,
        &mut degrees,
        &target_line_degrees,
        &target,
    );
    Ok(found)
}

fn search_roots(
    pairs: &[(usize, usize)],
    start: usize,
    remaining: usize,
    chosen: &mut Vec<(usize, usize)>,
    degrees: &mut [usize],
    target_line_degrees: &[usize],
    target: &Graph,
) -> Option<Graph> {
    if remaining == 0 {
        let mut line_degrees: Vec<usize> = chosen
            .iter()
            .map(|&(u, v)| degrees[u] + degrees[v] - 2)
            .collect();
        line_degrees.sort_unstable();
        if line_degrees != target_line_degrees {
            return None;
        }
        let candidate = compact(chosen, degrees.len());
        let line = candidate.line_graph();
        if isomorphic_small(&line, target).expect("both graphs are within the guard") {
            return Some(candidate);
        }
        return None;
    }
    if pairs.len() - start < remaining {
        return None;
    }
    for i in start..pairs.len() {
        let (u, v) = pairs[i];
        chosen.push((u, v));
        degrees[u] += 1;
        degrees[v] += 1;
        if let Some(g) = search_roots(
            pairs,
            i + 1,
            remaining - 1,
            chosen,
            degrees,
            target_line_degrees,
            target,
        ) {
            return Some(g);
        }
        degrees[u] -= 1;
        degrees[v] -= 1;
        chosen.pop();
    }
    None
}

// Strip isolated pool nodes so the returned root is tight.
fn compact(edges: &[(usize, usize)], pool: usize) -> Graph {
    let mut used = vec![false; pool];
    for &(u, v) in edges {
        used[u] = true;
        used[v] = true;
    }
    let mut rename = vec![usize::MAX; pool];
    let mut next = 0;
    for (v, &u) in used.iter().enumerate() {
        if u {
            rename[v] = next;
            next += 1;
        }
    }
    let remapped: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (rename[u], rename[v])).collect();
    Graph::new(next, remapped).expect("combination edges are distinct")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges.to_vec()).unwrap()
    }

    #[test]
    fn brute_force_finds_path_for_k2() {
        let mut c = SymBitMatrix::new(2);
        c.set(0, 1, true);
        let root = brute_force_root(&c).unwrap().unwrap();
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        assert!(isomorphic_small(&root, &p3).unwrap());
    }

    #[test]
    fn brute_force_accepts_either_root_of_k3() {
        let k3 = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        let root = brute_force_root(&k3.adjacency_matrix()).unwrap().unwrap();
        let claw = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        let ok = isomorphic_small(&root, &k3).unwrap() || isomorphic_small(&root, &claw).unwrap();
        assert!(ok, "root must be K3 or K1,3, got {root:?}");
    }

    #[test]
    fn brute_force_rejects_the_claw() {
        let claw = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(brute_force_root(&claw.adjacency_matrix()).unwrap(), None);
    }

    #[test]
    fn brute_force_guard() {
        let c = SymBitMatrix::new(9);
        assert_eq!(brute_force_root(&c), Err(GuardError::TooManyLinks(9)));
    }
}
