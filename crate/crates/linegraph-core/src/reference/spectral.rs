//! Spectral necessary condition: a graph whose adjacency matrix has smallest
//! eigenvalue below -2 cannot be a line graph. The converse does not hold,
//! so a negative answer means "no decision".

use crate::matrix::SymBitMatrix;

pub const DEFAULT_SPECTRAL_TOL: f64 = 1e-9;

/// Off-diagonal Frobenius norm at which the Jacobi sweeps stop.
const CONVERGENCE_THRESHOLD: f64 = 1e-10;
const MAX_SWEEPS: usize = 60;

/// Smallest eigenvalue of the symmetric 0/1 matrix, by cyclic Jacobi sweeps.
/// Deterministic and dependency-free; adequate at the orders the recognizers
/// see.
pub fn smallest_eigenvalue(c: &SymBitMatrix) -> f64 {
    let n = c.order();
    assert!(n >= 1, "eigenvalues need at least order 1");
    let mut a = vec![0.0f64; n * n];
    for i in 0..n {
        for j in 0..n {
            a[i * n + j] = if c.get(i, j) { 1.0 } else { 0.0 };
        }
    }
    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0f64;
        for i in 0..n {
            for j in (i + 1)..n {
                off += a[i * n + j] * a[i * n + j];
            }
        }
        if (2.0 * off).sqrt() < CONVERGENCE_THRESHOLD {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() < CONVERGENCE_THRESHOLD / (n * n) as f64 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let cos = 1.0 / (t * t + 1.0).sqrt();
                let sin = t * cos;
                rotate(&mut a, n, p, q, cos, sin);
            }
        }
    }
    (0..n)
        .map(|i| a[i * n + i])
        .fold(f64::INFINITY, f64::min)
}

fn rotate(a: &mut [f64], n: usize, p: usize, q: usize, cos: f64, sin: f64) {
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        a[k * n + p] = cos * akp - sin * akq;
        a[p * n + k] = a[k * n + p];
        a[k * n + q] = sin * akp + cos * akq;
        a[q * n + k] = a[k * n + q];
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let apq = a[p * n + q];
    a[p * n + p] = cos * cos * app - 2.0 * sin * cos * apq + sin * sin * aqq;
    a[q * n + q] = sin * sin * app + 2.0 * sin * cos * apq + cos * cos * aqq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
}

/// True means certainly not a line graph (smallest eigenvalue below
/// `-2 - tol`); false means no decision.
pub fn spectral_reject(c: &SymBitMatrix, tol: f64) -> bool {
    smallest_eigenvalue(c) < -2.0 - tol
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn cycle_spectrum_is_known() {
        // C5: eigenvalues 2cos(2*pi*k/5); smallest = 2cos(4*pi/5)
        let c5 = Graph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let lam_min = smallest_eigenvalue(&c5.adjacency_matrix());
        let expected = 2.0 * (4.0 * std::f64::consts::PI / 5.0).cos();
        assert!((lam_min - expected).abs() < 1e-9, "{lam_min} vs {expected}");
        assert!(!spectral_reject(&c5.adjacency_matrix(), DEFAULT_SPECTRAL_TOL));
    }

    #[test]
    fn large_star_is_rejected() {
        // K_{1,5}: spectrum contains -sqrt(5) < -2
        let mut edges = Vec::new();
        for leaf in 1..=5 {
            edges.push((0, leaf));
        }
        let star = Graph::new(6, edges).unwrap();
        let lam_min = smallest_eigenvalue(&star.adjacency_matrix());
        assert!((lam_min + 5.0f64.sqrt()).abs() < 1e-9);
        assert!(spectral_reject(&star.adjacency_matrix(), DEFAULT_SPECTRAL_TOL));
    }

    #[test]
    fn line_graph_matrices_never_fire() {
        // RᵀR - 2I is positive semidefinite shifted by -2, so lam_min >= -2
        for seed in 0..200u64 {
            let g = crate::gen::generate_er(9, 0.4, seed).unwrap();
            if g.edge_count() == 0 {
                continue;
            }
            let lam = g.lam();
            assert!(
                !spectral_reject(&lam, DEFAULT_SPECTRAL_TOL),
                "seed {seed} wrongly rejected"
            );
        }
    }
}
