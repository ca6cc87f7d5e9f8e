//! Walk-through on the 50-link example: the fixture root is pinned from the
//! published endnode table, its LAM is a fixed point of relabeling, and the
//! reconstruction reproduces that table entry for entry.

use linegraph_core::fixtures::{worked_example_endnodes, worked_example_root};
use linegraph_core::reconstruct::{initialization, reconstruct};
use linegraph_core::relabel::matrix_relabeling;

#[test]
fn relabeling_is_a_fixed_point_with_pinned_counters() {
    let root = worked_example_root();
    let lam = root.lam();
    assert_eq!(lam.order(), 50);

    let res = matrix_relabeling(&lam).unwrap();
    assert_eq!(res.s1, 9, "link 1 has nine neighboring links");
    assert_eq!(res.s2, 3);
    // The published table fixes four links at the left endnode of link 1,
    // which pins s3 = 2 (left neighbors are links 2..=s3+3, 1-based).
    assert_eq!(res.s3, 2);
    assert!(res.permutation.is_identity());
    assert_eq!(res.lam, lam);
}

#[test]
fn initialization_splits_left_and_right_neighbors() {
    let root = worked_example_root();
    let lam = root.lam();
    let res = matrix_relabeling(&lam).unwrap();
    let candidates = initialization(&res.lam, res.s1, res.s2, res.s3);
    assert_eq!(candidates.len(), 1, "s3 >= 1 is the theorem-backed case");
    let table = &candidates[0];
    assert_eq!(table.endnodes(0), (1, 2));
    // links 2-5 are the left-neighboring links, links 6-10 the right (1-based)
    for link in 1..=4 {
        assert_eq!(table.endnodes(link), (1, 0), "link {}", link + 1);
    }
    for link in 5..=9 {
        assert_eq!(table.endnodes(link), (2, 0), "link {}", link + 1);
    }
}

#[test]
fn reconstruction_reproduces_the_published_endnode_table() {
    let root = worked_example_root();
    let lam = root.lam();
    let report = reconstruct(&lam).unwrap();
    assert!(report.verified);
    assert_eq!(report.component_count, 1);
    assert_eq!(report.root.node_count(), 30, "30 nodes");
    assert_eq!(report.root.edge_count(), 50, "50 links");

    // entry-for-entry match with the published table (0-based here)
    let expected: Vec<(usize, usize)> = worked_example_endnodes()
        .iter()
        .map(|&(a, b)| (a - 1, b - 1))
        .collect();
    assert_eq!(report.link_to_edge, expected);

    // link 36 (1-based) connects nodes 12 and 25 of the published table
    assert_eq!(report.link_to_edge[35], (11, 24));

    // the induced link adjacency coincides with the given matrix everywhere
    assert_eq!(report.root.lam(), lam);
}
