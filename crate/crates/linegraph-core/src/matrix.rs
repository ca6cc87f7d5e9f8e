//! Bit-packed symmetric matrices and incidence matrices.

use crate::graph::Graph;

/// Symmetric 0/1 matrix with zero diagonal, stored as the strict upper
/// triangle only. Reads below the diagonal are mirrored; the diagonal always
/// reads 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymBitMatrix {
    order: usize,
    bits: Vec<u64>,
}

impl SymBitMatrix {
    pub fn new(order: usize) -> SymBitMatrix {
        let len = order * order.saturating_sub(1) / 2;
        SymBitMatrix {
            order,
            bits: vec![0u64; len.div_ceil(64)],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    // Strict upper triangle, row-major: entry (i, j) with i < j.
    fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.order);
        i * (self.order - 1) - i * (i + 1) / 2 + j - 1
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(
            i < self.order && j < self.order,
            "entry ({i}, {j}) out of range for order {}",
            self.order
        );
        if i == j {
            return false;
        }
        let idx = if i < j { self.index(i, j) } else { self.index(j, i) };
        self.bits[idx / 64] >> (idx % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(
            i < self.order && j < self.order,
            "entry ({i}, {j}) out of range for order {}",
            self.order
        );
        assert!(i != j, "the diagonal is fixed at zero");
        let idx = if i < j { self.index(i, j) } else { self.index(j, i) };
        if value {
            self.bits[idx / 64] |= 1 << (idx % 64);
        } else {
            self.bits[idx / 64] &= !(1 << (idx % 64));
        }
    }

    /// Number of 1-entries in row `row` over columns `from..to`.
    pub fn row_sum(&self, row: usize, from: usize, to: usize) -> usize {
        let to = to.min(self.order);
        if from >= to {
            return 0;
        }
        (from..to).filter(|&j| self.get(row, j)).count()
    }

    /// The graph whose adjacency matrix this is; edges in lexicographic order.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for i in 0..self.order {
            for j in (i + 1)..self.order {
                if self.get(i, j) {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(self.order, edges).expect("adjacency matrix always yields a simple graph")
    }
}

/// Node-link incidence matrix: entry (i, j) is 1 iff node `i` is an endpoint
/// of link `j`. Every column has exactly two 1-entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix {
    node_count: usize,
    link_count: usize,
    bits: Vec<u64>,
}

impl IncidenceMatrix {
    pub fn from_edges(node_count: usize, edges: &[(usize, usize)]) -> IncidenceMatrix {
        let link_count = edges.len();
        let len = node_count * link_count;
        let mut m = IncidenceMatrix {
            node_count,
            link_count,
            bits: vec![0u64; len.div_ceil(64)],
        };
        for (j, &(u, v)) in edges.iter().enumerate() {
            m.set(u, j);
            m.set(v, j);
        }
        m
    }

    fn set(&mut self, i: usize, j: usize) {
        let idx = i * self.link_count + j;
        self.bits[idx / 64] |= 1 << (idx % 64);
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.node_count && j < self.link_count);
        let idx = i * self.link_count + j;
        self.bits[idx / 64] >> (idx % 64) & 1 == 1
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn link_count(&self) -> usize {
        self.link_count
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn symmetric_reads_and_zero_diagonal() {
        let mut m = SymBitMatrix::new(4);
        m.set(2, 0, true);
        assert!(m.get(0, 2));
        assert!(m.get(2, 0));
        assert!(!m.get(1, 1));
        m.set(0, 2, false);
        assert!(!m.get(2, 0));
    }

    #[test]
    #[should_panic(expected = "diagonal")]
    fn setting_diagonal_panics() {
        let mut m = SymBitMatrix::new(3);
        m.set(1, 1, true);
    }

    #[test]
    fn row_sum_windows() {
        let mut m = SymBitMatrix::new(5);
        m.set(1, 2, true);
        m.set(1, 4, true);
        assert_eq!(m.row_sum(1, 0, 5), 2);
        assert_eq!(m.row_sum(1, 2, 4), 1);
        assert_eq!(m.row_sum(1, 3, 3), 0);
        assert_eq!(m.row_sum(1, 4, 2), 0); // reversed window is empty
    }

    #[test]
    fn incidence_of_single_edge() {
        let g = Graph::new(2, vec![(0, 1)]).unwrap();
        let r = g.incidence_matrix();
        assert_eq!((r.node_count(), r.link_count()), (2, 1));
        assert!(r.get(0, 0) && r.get(1, 0));
    }

    #[test]
    fn incidence_of_path() {
        let g = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let r = g.incidence_matrix();
        assert!(r.get(0, 0) && r.get(1, 0) && !r.get(2, 0));
        assert!(!r.get(0, 1) && r.get(1, 1) && r.get(2, 1));
    }

    #[test]
    fn incidence_of_claw_center_row_all_ones() {
        // hand oracle: center node 0 is incident to every link
        let g = Graph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = g.incidence_matrix();
        for j in 0..3 {
            assert!(r.get(0, j));
            let ones = (0..4).filter(|&i| r.get(i, j)).count();
            assert_eq!(ones, 2);
        }
    }

    #[test]
    fn roundtrip_graph_matrix_graph() {
        let g = Graph::new(5, vec![(0, 3), (1, 2), (2, 4), (0, 1)]).unwrap();
        let m = g.adjacency_matrix();
        let g2 = m.to_graph();
        assert_eq!(g2.adjacency_matrix(), m);
        assert_eq!(g2.node_count(), 5);
        assert_eq!(g2.edge_count(), 4);
    }
}
