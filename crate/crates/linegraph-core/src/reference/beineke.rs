//! The nine minimal forbidden induced subgraphs and the recognizer built on
//! them: a graph is a line graph iff none of the nine occurs as an induced
//! subgraph.

use std::sync::OnceLock;

use crate::graph::Graph;
use crate::io::parse_edge_list;

use super::{GuardError, BEINEKE_NODE_LIMIT};

/// Versioned transcription of the nine forbidden graphs; the test suite
/// re-derives the set from scratch and checks this file against it.
pub const BEINEKE_DATA: &str = include_str!("../../data/beineke.el");

/// The nine forbidden graphs, in file order (the claw first).
pub fn beineke_graphs() -> &'static [Graph] {
    static GRAPHS: OnceLock<Vec<Graph>> = OnceLock::new();
    GRAPHS.get_or_init(|| {
        let graphs: Vec<Graph> = BEINEKE_DATA
            .split("\n\n")
            .filter(|block| block.lines().any(|l| l.trim_start().starts_with("nodes")))
            .map(|block| parse_edge_list(block).expect("shipped pattern data parses"))
            .collect();
        assert_eq!(graphs.len(), 9, "the pattern file must hold nine sections");
        graphs
    })
}

/// True iff `pattern` occurs as an induced subgraph of `g`. Backtracking
/// over vertex images with degree pruning; adjacency and non-adjacency must
/// both be preserved. Guarded to 64-node hosts.
pub fn contains_induced(g: &Graph, pattern: &Graph) -> bool {
    let n = g.node_count();
    let k = pattern.node_count();
    assert!(n <= BEINEKE_NODE_LIMIT, "host graph exceeds the scan guard");
    if k > n || pattern.edge_count() > g.edge_count() {
        return false;
    }
    let mut gadj = vec![0u64; n];
    for &(u, v) in g.edges() {
        gadj[u] |= 1 << v;
        gadj[v] |= 1 << u;
    }
    let gdeg: Vec<usize> = g.degrees();
    let pdeg: Vec<usize> = pattern.degrees();

    // visit pattern vertices so each one after the first touches the part
    // already mapped; patterns here are connected
    let mut padj = vec![0u64; k];
    for &(u, v) in pattern.edges() {
        padj[u] |= 1 << v;
        padj[v] |= 1 << u;
    }
    let mut order = Vec::with_capacity(k);
    let mut in_order = vec![false; k];
    let start = (0..k).max_by_key(|&v| pdeg[v]).unwrap_or(0);
    order.push(start);
    in_order[start] = true;
    while order.len() < k {
        let next = (0..k)
            .filter(|&v| !in_order[v])
            .max_by_key(|&v| order.iter().filter(|&&w| padj[v] >> w & 1 == 1).count())
            .unwrap();
        order.push(next);
        in_order[next] = true;
    }

    let mut image = vec![usize::MAX; k];
    embed(&gadj, &gdeg, &padj, &pdeg, &order, &mut image, 0, 0u64)
}

#[allow(clippy::too_many_arguments)]
fn embed(
    gadj: &[u64],
    gdeg: &[usize],
    padj: &[u64],
    pdeg: &[usize],
    order: &[usize],
    image: &mut [usize],
    depth: usize,
    used: u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    // g-vertices already holding images of v's pattern-neighbors
    let mut want = 0u64;
    let mut mapped = 0u64;
    for &w in &order[..depth] {
        let gw = image[w];
        mapped |= 1 << gw;
        if padj[v] >> w & 1 == 1 {
            want |= 1 << gw;
        }
    }
    for u in 0..gadj.len() {
        if used >> u & 1 == 1 || gdeg[u] < pdeg[v] {
            continue;
        }
        if gadj[u] & mapped != want {
            continue; // adjacency or non-adjacency to the mapped part differs
        }
        image[v] = u;
        if embed(gadj, gdeg, padj, pdeg, order, image, depth + 1, used | 1 << u) {
            return true;
        }
    }
    false
}

/// Index of the first forbidden graph occurring induced in `g`, if any.
pub fn find_forbidden(g: &Graph) -> Result<Option<usize>, GuardError> {
    if g.node_count() > BEINEKE_NODE_LIMIT {
        return Err(GuardError::TooManyNodes(g.node_count()));
    }
    for (idx, pattern) in beineke_graphs().iter().enumerate() {
        if contains_induced(g, pattern) {
            return Ok(Some(idx));
        }
    }
    Ok(None)
}

/// Line-graph test by forbidden induced subgraphs.
pub fn is_line_graph_beineke(g: &Graph) -> Result<bool, GuardError> {
    Ok(find_forbidden(g)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::isomorphic_small;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges.to_vec()).unwrap()
    }

    #[test]
    fn claw_is_forbidden_graph_one() {
        let claw = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(isomorphic_small(&beineke_graphs()[0], &claw).unwrap());
        assert_eq!(is_line_graph_beineke(&claw), Ok(false));
        assert_eq!(find_forbidden(&claw), Ok(Some(0)));
    }

    #[test]
    fn line_graphs_pass() {
        for (n, edges) in [
            (4usize, vec![(0, 1), (1, 2), (2, 3)]),
            (4, vec![(0, 1), (1, 2), (2, 3), (0, 3)]),
            (5, vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)]),
        ] {
            let g = Graph::new(n, edges).unwrap();
            let l = g.line_graph();
            assert_eq!(is_line_graph_beineke(&l), Ok(true), "line graph of {g:?}");
        }
    }

    #[test]
    fn induced_scan_distinguishes_subgraph_from_induced() {
        // K4 contains the claw as a subgraph but not as an induced subgraph
        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let claw = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(!contains_induced(&k4, &claw));
        // the wheel-less star plus one extra node does contain it
        let star5 = graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert!(contains_induced(&star5, &claw));
    }

    #[test]
    fn guard_rejects_oversized_hosts() {
        let big = graph(65, &[]);
        assert_eq!(find_forbidden(&big), Err(GuardError::TooManyNodes(65)));
    }
}
