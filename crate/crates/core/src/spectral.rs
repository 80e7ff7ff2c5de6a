//! Adjacency and Laplacian matrices of multigraphs and their indexed
//! eigenvalues.
//!
//! Conventions: adjacency eigenvalues λ₁ ≥ … ≥ λ_n are nonincreasing,
//! Laplacian eigenvalues μ₁ ≤ … ≤ μ_n nondecreasing. For a d-regular graph
//! λ_i = d − μ_i; the Laplacian list here is computed by its own eigensolve
//! so that the identity stays a testable property instead of a definition.

use crate::multigraph::Multigraph;
use crate::numerics::{sym_eigenvalues, EigenList, SymMatrix};
use crate::{Error, Result};

/// Both eigenvalue lists of a graph.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphSpectrum {
    adjacency: EigenList,
    laplacian: Vec<f64>,
}

impl GraphSpectrum {
    /// Adjacency eigenvalues, nonincreasing.
    pub fn adjacency_eigs(&self) -> &EigenList {
        &self.adjacency
    }

    /// Laplacian eigenvalues, nondecreasing.
    pub fn laplacian_eigs(&self) -> &[f64] {
        &self.laplacian
    }

    /// λ₂, the second largest adjacency eigenvalue.
    pub fn lambda2(&self) -> Option<f64> {
        (self.adjacency.len() >= 2).then(|| self.adjacency.get(1))
    }

    /// μ₂, the second smallest Laplacian eigenvalue (algebraic connectivity).
    pub fn mu2(&self) -> Option<f64> {
        (self.laplacian.len() >= 2).then(|| self.laplacian[1])
    }
}

/// The adjacency matrix: entry (i, j) is the edge multiplicity, diagonal
/// zero.
pub fn adjacency_matrix(g: &Multigraph) -> SymMatrix {
    SymMatrix::from_upper(g.n(), |i, j| {
        if i == j {
            0.0
        } else {
            g.multiplicity(i, j) as f64
        }
    })
}

/// The Laplacian matrix D − A, with D the diagonal degree matrix.
pub fn laplacian_matrix(g: &Multigraph) -> SymMatrix {
    SymMatrix::from_upper(g.n(), |i, j| {
        if i == j {
            g.degree(i) as f64
        } else {
            -(g.multiplicity(i, j) as f64)
        }
    })
}

/// Computes both eigenvalue lists.
pub fn spectrum(g: &Multigraph) -> Result<GraphSpectrum> {
    let adjacency = sym_eigenvalues(&adjacency_matrix(g))?;
    let lap = sym_eigenvalues(&laplacian_matrix(g))?;
    let mut laplacian: Vec<f64> = lap.values().to_vec();
    laplacian.reverse();
    Ok(GraphSpectrum {
        adjacency,
        laplacian,
    })
}

/// The second largest adjacency eigenvalue.
pub fn lambda2(g: &Multigraph) -> Result<f64> {
    if g.n() < 2 {
        return Err(Error::TooSmall(format!(
            "lambda2 needs at least 2 vertices, got {}",
            g.n()
        )));
    }
    Ok(spectrum(g)?.lambda2().expect("n >= 2"))
}

/// True iff the sorted eigenvalue multiset equals its own negation, each
/// entry within 1e-8. For loop-free graphs this coincides with
/// bipartiteness of the underlying graph, which the test suite checks
/// combinatorially.
pub fn spectrum_symmetric_about_origin(g: &Multigraph) -> Result<bool> {
    let eigs = sym_eigenvalues(&adjacency_matrix(g))?;
    let v = eigs.values();
    let n = v.len();
    Ok((0..n).all(|i| (v[i] + v[n - 1 - i]).abs() <= 1e-8))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_b1, build_h1};
    use crate::multigraph::Multigraph;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    fn h32() -> Multigraph {
        Multigraph::build(4, &[(0, 1, 2), (2, 3, 2), (0, 2, 1), (1, 3, 1)]).unwrap()
    }

    #[test]
    fn adjacency_of_b31() {
        let m = adjacency_matrix(&build_b1(3).unwrap());
        let expected = [[0.0, 2.0, 1.0], [2.0, 0.0, 1.0], [1.0, 1.0, 0.0]];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m.get(i, j), expected[i][j]);
            }
        }
    }

    #[test]
    fn adjacency_of_edgeless_is_zero() {
        let g = Multigraph::build(3, &[]).unwrap();
        let m = adjacency_matrix(&g);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m.get(i, j), 0.0);
            }
        }
    }

    #[test]
    fn adjacency_of_h1_matches_block_layout() {
        // blocks of (d+1)/2 and (d-1)/2 multiplicities with a single bridge
        let g = build_h1(5).unwrap();
        let m = adjacency_matrix(&g);
        assert_eq!(m.get(0, 1), 3.0);
        assert_eq!(m.get(1, 2), 2.0);
        assert_eq!(m.get(0, 2), 2.0);
        assert_eq!(m.get(2, 5), 1.0);
        assert_eq!(m.get(3, 4), 3.0);
        assert_eq!(m.get(0, 3), 0.0);
    }

    #[test]
    fn laplacian_examples() {
        let triple = Multigraph::build(2, &[(0, 1, 3)]).unwrap();
        let m = laplacian_matrix(&triple);
        assert_eq!(m.get(0, 0), 3.0);
        assert_eq!(m.get(0, 1), -3.0);

        let b31 = build_b1(3).unwrap();
        let l = laplacian_matrix(&b31);
        let expected = [[3.0, -2.0, -1.0], [-2.0, 3.0, -1.0], [-1.0, -1.0, 2.0]];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(l.get(i, j), expected[i][j]);
            }
        }

        let edgeless = Multigraph::build(2, &[]).unwrap();
        let z = laplacian_matrix(&edgeless);
        assert_eq!(z.get(0, 0), 0.0);
        assert_eq!(z.get(0, 1), 0.0);
    }

    #[test]
    fn spectrum_of_h32() {
        let s = spectrum(&h32()).unwrap();
        let expected = [3.0, 1.0, -1.0, -3.0];
        for (got, want) in s.adjacency_eigs().values().iter().zip(expected) {
            assert_close(*got, want, 1e-9);
        }
        assert_close(s.laplacian_eigs()[0], 0.0, 1e-8);
    }

    #[test]
    fn lambda2_examples() {
        assert_close(
            lambda2(&build_h1(3).unwrap()).unwrap(),
            2.5615528128088303,
            1e-9,
        );
        assert_close(
            lambda2(&build_h1(5).unwrap()).unwrap(),
            4.464101615137754,
            1e-9,
        );

        let triple = Multigraph::build(2, &[(0, 1, 5)]).unwrap();
        let s = spectrum(&triple).unwrap();
        assert_close(s.adjacency_eigs().get(0), 5.0, 1e-9);
        assert_close(s.lambda2().unwrap(), -5.0, 1e-9);

        let k3 = Multigraph::build(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap();
        assert_close(lambda2(&k3).unwrap(), -1.0, 1e-9);

        let single = Multigraph::build(1, &[]).unwrap();
        assert!(matches!(lambda2(&single), Err(Error::TooSmall(_))));
    }

    #[test]
    fn regular_identity_lambda_eq_d_minus_mu() {
        for g in [build_h1(3).unwrap(), h32()] {
            let d = g.degree_profile().regular_degree.unwrap() as f64;
            let s = spectrum(&g).unwrap();
            for (i, lam) in s.adjacency_eigs().values().iter().enumerate() {
                assert_close(*lam, d - s.laplacian_eigs()[i], 1e-8);
            }
        }
    }

    #[test]
    fn symmetric_spectrum_examples() {
        assert!(spectrum_symmetric_about_origin(&h32()).unwrap());
        assert!(h32().is_bipartite());
        assert!(!spectrum_symmetric_about_origin(&build_h1(3).unwrap()).unwrap());
        assert!(!build_h1(3).unwrap().is_bipartite());
        let single = Multigraph::build(1, &[]).unwrap();
        assert!(spectrum_symmetric_about_origin(&single).unwrap());
    }
}
