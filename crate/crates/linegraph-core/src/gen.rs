//! Deterministic random graph generation.
//!
//! The generator is a fixed, fully specified algorithm so that ports in other
//! languages reproduce the same graphs bit for bit from the same seed.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq)]
pub enum GenError {
    #[error("edge probability {0} is outside [0, 1]")]
    InvalidProbability(f64),
}

/// xorshift64* generator.
///
/// State update per draw:
/// ```text
/// x ^= x >> 12;  x ^= x << 25;  x ^= x >> 27;  output = x * 0x2545F4914F6CDD1D
/// ```
/// The state is initialized from the seed by one splitmix64 step:
/// ```text
/// z = seed + 0x9E3779B97F4A7C15
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
/// z = (z ^ (z >> 27)) * 0x94D049BB133111EB
/// state = z ^ (z >> 31)      (0x9E3779B97F4A7C15 if that comes out zero)
/// ```
/// All arithmetic is wrapping 64-bit.
#[derive(Clone, Debug)]
pub struct XorShift64Star {
    state: u64,
}

impl XorShift64Star {
    pub fn new(seed: u64) -> XorShift64Star {
        let mut z = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
        if z == 0 {
            z = 0x9E37_79B9_7F4A_7C15;
        }
        XorShift64Star { state: z }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }
}

/// Erdős–Rényi graph G(n, p): every one of the n(n-1)/2 possible edges is
/// included independently with probability `p`.
///
/// Pairs (u, v), u < v, are visited in lexicographic order; one 53-bit draw
/// (`next_u64() >> 11`) is taken per pair and the edge is included iff the
/// draw is below `floor(p * 2^53)`. Identical (n, p, seed) triples therefore
/// produce identical edge sequences on every platform.
pub fn generate_er(n: usize, p: f64, seed: u64) -> Result<Graph, GenError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GenError::InvalidProbability(p));
    }
    let threshold = (p * (1u64 << 53) as f64) as u64;
    let mut rng = XorShift64Star::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            let draw = rng.next_u64() >> 11;
            if draw < threshold {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(n, edges).expect("generated pairs are distinct and in range"))
}
