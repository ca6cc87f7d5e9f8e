//! Pinned graphs used by the documentation walk-through and the test suites.

use crate::graph::Graph;

/// Endnode pairs of the 50-link walk-through root, 1-based node ids, one
/// entry per link in link order. The graph has 30 nodes; its LAM is already
/// in relabeled order, which makes it a fixed point of the relabeling pass.
const WORKED_EXAMPLE_ENDNODES: [(usize, usize); 50] = [
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (1, 6),
    (2, 4),
    (2, 7),
    (2, 5),
    (2, 8),
    (2, 9),
    (3, 10),
    (3, 11),
    (3, 12),
    (3, 9),
    (4, 13),
    (4, 6),
    (4, 14),
    (4, 11),
    (5, 10),
    (6, 8),
    (6, 7),
    (6, 15),
    (6, 16),
    (7, 13),
    (7, 17),
    (9, 18),
    (9, 19),
    (10, 19),
    (10, 20),
    (10, 21),
    (11, 22),
    (11, 23),
    (11, 24),
    (11, 21),
    (11, 16),
    (12, 25),
    (13, 23),
    (14, 26),
    (15, 17),
    (15, 26),
    (16, 24),
    (17, 24),
    (17, 27),
    (17, 28),
    (18, 21),
    (23, 26),
    (23, 25),
    (23, 28),
    (27, 29),
    (27, 30),
];

/// The 30-node, 50-link walk-through root in its published link order.
pub fn worked_example_root() -> Graph {
    let edges: Vec<(usize, usize)> = WORKED_EXAMPLE_ENDNODES
        .iter()
        .map(|&(a, b)| (a - 1, b - 1))
        .collect();
    Graph::new(30, edges).expect("the walk-through root is a valid simple graph")
}

/// The published endnode table of the walk-through, 1-based node ids.
pub fn worked_example_endnodes() -> &'static [(usize, usize); 50] {
    &WORKED_EXAMPLE_ENDNODES
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_shape() {
        let g = worked_example_root();
        assert_eq!(g.node_count(), 30);
        assert_eq!(g.edge_count(), 50);
        assert!(g.is_connected());
    }
}
