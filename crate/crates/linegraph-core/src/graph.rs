//! Simple undirected graphs with an ordered edge sequence.
//!
//! The edge sequence order is load-bearing: edge `i` of a graph is node `i`
//! of its line graph, and every downstream module relies on that
//! correspondence.

use thiserror::Error;

use crate::matrix::{IncidenceMatrix, SymBitMatrix};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at node {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) out of range for node count {2}")]
    EndpointOutOfRange(usize, usize, usize),
}

/// Simple undirected graph: node count plus an ordered sequence of edges.
///
/// Edges are normalized to `u < v` on construction; the sequence order is
/// preserved. No self-loops, no duplicate edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    node_count: usize,
    edges: Vec<(usize, usize)>,
}

/// One connected component of a graph, relabeled to `0..k-1`.
///
/// `node_map[local]` gives the node id in the original graph.
#[derive(Clone, Debug)]
pub struct Component {
    pub graph: Graph,
    pub node_map: Vec<usize>,
}

impl Graph {
    pub fn new(node_count: usize, edges: Vec<(usize, usize)>) -> Result<Graph, GraphError> {
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in &edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            if b >= node_count {
                return Err(GraphError::EndpointOutOfRange(a, b, node_count));
            }
            normalized.push((a, b));
        }
        let mut sorted = normalized.clone();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        Ok(Graph {
            node_count,
            edges: normalized,
        })
    }

    /// Graph with no nodes and no edges.
    pub fn empty() -> Graph {
        Graph {
            node_count: 0,
            edges: Vec::new(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.node_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Node adjacency matrix.
    pub fn adjacency_matrix(&self) -> SymBitMatrix {
        let mut m = SymBitMatrix::new(self.node_count);
        for &(u, v) in &self.edges {
            m.set(u, v, true);
        }
        m
    }

    /// Node-link incidence matrix; column `j` has exactly two 1-entries.
    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        IncidenceMatrix::from_edges(self.node_count, &self.edges)
    }

    /// Line graph: one node per edge of `self` (node `i` is edge `i`),
    /// adjacent iff the edges share an endpoint.
    pub fn line_graph(&self) -> Graph {
        let l = self.edges.len();
        let mut edges = Vec::new();
        for i in 0..l {
            let (a, b) = self.edges[i];
            for j in (i + 1)..l {
                let (c, d) = self.edges[j];
                if a == c || a == d || b == c || b == d {
                    edges.push((i, j));
                }
            }
        }
        Graph {
            node_count: l,
            edges,
        }
    }

    /// Link adjacency matrix; identical to the adjacency matrix of the line
    /// graph, with link `i` meaning edge `i` of the sequence.
    pub fn lam(&self) -> SymBitMatrix {
        let l = self.edges.len();
        let mut m = SymBitMatrix::new(l);
        for i in 0..l {
            let (a, b) = self.edges[i];
            for j in (i + 1)..l {
                let (c, d) = self.edges[j];
                if a == c || a == d || b == c || b == d {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Splits into connected components. Components are ordered by their
    /// smallest original node; within a component, local ids follow ascending
    /// original node order. The node maps together form a bijection onto the
    /// original node set.
    pub fn connected_components(&self) -> Vec<Component> {
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.node_count];
        let mut components = Vec::new();
        for start in 0..self.node_count {
            if seen[start] {
                continue;
            }
            let mut nodes = Vec::new();
            let mut queue = std::collections::VecDeque::new();
            seen[start] = true;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                nodes.push(v);
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            nodes.sort_unstable();
            let mut local = vec![usize::MAX; self.node_count];
            for (i, &v) in nodes.iter().enumerate() {
                local[v] = i;
            }
            let mut edges = Vec::new();
            for i in 0..nodes.len() {
                for &w in &adj[nodes[i]] {
                    if nodes[i] < w {
                        edges.push((i, local[w]));
                    }
                }
            }
            edges.sort_unstable();
            components.push(Component {
                graph: Graph {
                    node_count: nodes.len(),
                    edges,
                },
                node_map: nodes,
            });
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.node_count <= 1 || self.connected_components().len() == 1
    }

    fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.node_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges.to_vec()).unwrap()
    }

    #[test]
    fn constructor_rejects_bad_edges() {
        assert_eq!(
            Graph::new(3, vec![(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
        assert_eq!(
            Graph::new(3, vec![(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::new(2, vec![(0, 2)]),
            Err(GraphError::EndpointOutOfRange(0, 2, 2))
        );
    }

    #[test]
    fn edges_normalized_sequence_preserved() {
        let g = graph(5, &[(3, 1), (0, 4), (2, 0)]);
        assert_eq!(g.edges(), &[(1, 3), (0, 4), (0, 2)]);
    }

    #[test]
    fn line_graph_of_path_is_single_edge() {
        // path a-b-c: two adjacent links
        let g = graph(3, &[(0, 1), (1, 2)]);
        let l = g.line_graph();
        assert_eq!(l.node_count(), 2);
        assert_eq!(l.edges(), &[(0, 1)]);
    }

    #[test]
    fn line_graph_of_claw_is_triangle() {
        let claw = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        let l = claw.line_graph();
        assert_eq!(l.node_count(), 3);
        assert_eq!(l.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn line_graph_degree_law() {
        // deg_l(i) = deg(u) + deg(v) - 2 for edge i = (u, v)
        let g = graph(6, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (2, 5)]);
        let l = g.line_graph();
        let gd = g.degrees();
        let ld = l.degrees();
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            assert_eq!(ld[i], gd[u] + gd[v] - 2);
        }
    }

    #[test]
    fn lam_matches_line_graph_adjacency() {
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        assert_eq!(g.lam(), g.line_graph().adjacency_matrix());
    }

    #[test]
    fn lam_of_claw_is_all_ones() {
        let claw = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        let m = claw.lam();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m.get(i, j), i != j);
            }
        }
    }

    #[test]
    fn lam_of_four_cycle_is_four_cycle() {
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let expected = graph(4, &[(0, 1), (1, 2), (0, 3), (2, 3)]).adjacency_matrix();
        assert_eq!(c4.lam(), expected);
    }

    #[test]
    fn components_of_connected_graph() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let comps = g.connected_components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].graph, g);
        assert_eq!(comps[0].node_map, vec![0, 1, 2, 3]);
    }

    #[test]
    fn components_of_two_triangles() {
        let g = graph(6, &[(0, 2), (2, 4), (0, 4), (1, 3), (3, 5), (1, 5)]);
        let comps = g.connected_components();
        assert_eq!(comps.len(), 2);
        for c in &comps {
            assert_eq!(c.graph.node_count(), 3);
            assert_eq!(c.graph.edge_count(), 3);
        }
        // maps form a bijection onto the original node set
        let mut all: Vec<usize> = comps.iter().flat_map(|c| c.node_map.clone()).collect();
        all.sort_unstable();
        assert_eq!(all, vec![0, 1, 2, 3, 4, 5]);
    }
}
