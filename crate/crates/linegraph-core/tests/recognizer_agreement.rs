//! Oracle triangle: on every connected graph with at most seven nodes the
//! three recognizers must agree — reconstruction succeeds iff the forbidden
//! induced subgraph scan passes iff brute-force root search finds a root —
//! and a spectral rejection must always coincide with reconstruction failure.

use linegraph_core::iso::enumerate_connected;
use linegraph_core::reconstruct::reconstruct;
use linegraph_core::reference::{
    brute_force_root, is_line_graph_beineke, spectral_reject, DEFAULT_SPECTRAL_TOL,
};

#[test]
fn triangle_up_to_six_nodes() {
    let mut line = 0;
    let mut non_line = 0;
    for h in enumerate_connected(6, 15) {
        let a = h.adjacency_matrix();
        let by_reconstruct = reconstruct(&a).map(|r| r.verified).unwrap_or(false);
        let by_beineke = is_line_graph_beineke(&h).unwrap();
        let by_brute = brute_force_root(&a).unwrap().is_some();
        assert_eq!(by_reconstruct, by_beineke, "graph {h:?}");
        assert_eq!(by_reconstruct, by_brute, "graph {h:?}");
        if spectral_reject(&a, DEFAULT_SPECTRAL_TOL) {
            assert!(!by_reconstruct, "spectral rejection contradicted on {h:?}");
        }
        if by_reconstruct {
            line += 1;
        } else {
            non_line += 1;
        }
    }
    println!("six-node sweep: {line} line graphs, {non_line} rejected, zero disagreements");
}

#[test]
fn triangle_on_seven_nodes() {
    let mut checked = 0;
    for h in enumerate_connected(7, 21) {
        if h.node_count() != 7 {
            continue; // smaller orders covered above
        }
        let a = h.adjacency_matrix();
        let by_reconstruct = reconstruct(&a).map(|r| r.verified).unwrap_or(false);
        let by_beineke = is_line_graph_beineke(&h).unwrap();
        let by_brute = brute_force_root(&a).unwrap().is_some();
        assert_eq!(by_reconstruct, by_beineke, "graph {h:?}");
        assert_eq!(by_reconstruct, by_brute, "graph {h:?}");
        if spectral_reject(&a, DEFAULT_SPECTRAL_TOL) {
            assert!(!by_reconstruct, "spectral rejection contradicted on {h:?}");
        }
        checked += 1;
    }
    assert_eq!(checked, 853, "there are 853 connected graphs on 7 nodes");
}
