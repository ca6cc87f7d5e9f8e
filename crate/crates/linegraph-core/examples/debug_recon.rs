use linegraph_core::graph::Graph;
use linegraph_core::relabel::matrix_relabeling;
use linegraph_core::reconstruct::{initialization, construct, verify, reconstruct};
use linegraph_core::io::write_matrix;

fn main() {
    let h = Graph::new(7, vec![(0,1),(0,2),(1,2),(0,3),(1,3),(0,4),(2,4),(3,4),(1,5),(2,5),(5,6)]).unwrap();
    let a = h.adjacency_matrix();
    let res = matrix_relabeling(&a).unwrap();
    println!("s1={} s2={} s3={}", res.s1, res.s2, res.s3);
    println!("relabeled:\n{}", write_matrix(&res.lam));
    let cands = initialization(&res.lam, res.s1, res.s2, res.s3);
    println!("candidates: {}", cands.len());
    for (i, cand) in cands.into_iter().enumerate() {
        println!("cand {i}: init e1/e2:");
        for l in 0..7 { print!(" {:?}", cand.endnodes(l)); }
        println!();
        match construct(&res.lam, cand) {
            Ok(t) => {
                print!("  built:");
                for l in 0..7 { print!(" {:?}", t.endnodes(l)); }
                println!("  verify={:?}", verify(&t, &res.lam));
            }
            Err(e) => println!("  construct failed: {e}"),
        }
    }
    println!("reconstruct: {:?}", reconstruct(&a).map(|r| r.verified));
}
