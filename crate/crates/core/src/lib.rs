//! Spectra, exact edge-connectivity, and eigenvalue-based edge-connectivity
//! certificates for regular multigraphs.
//!
//! The crate is built around a dense loop-free [`multigraph::Multigraph`]
//! representation. On top of it sit:
//!
//! - [`numerics`]: a self-contained cyclic-Jacobi eigensolver for small
//!   symmetric matrices and a guaranteed bracketing root finder for cubics;
//! - [`spectral`]: adjacency/Laplacian assembly and the indexed eigenvalues
//!   λ_i (nonincreasing) and μ_i (nondecreasing);
//! - [`partition`]: vertex partitions, quotient matrices, equitable-partition
//!   detection, interlacing checks, and cut witnesses;
//! - [`cuts`]: exact global minimum cut (edge-connectivity) with a witness,
//!   plus brute-force oracles;
//! - [`constructions`]: the extremal families `B_{d,1}`, `H_{d,1}` and
//!   `H_{d,t}` that attain the certification thresholds with equality;
//! - [`certify`]: the spectral threshold catalog and the edge-connectivity
//!   certifier;
//! - [`enumerate`]: exhaustive generation of all connected d-regular
//!   multigraphs on up to 8 vertices (up to isomorphism) and verification
//!   harnesses that check every certification rule against ground truth;
//! - [`cli`]: the `eigencut` command-line front end.
//!
//! ```
//! use eigencut::certify::certify;
//! use eigencut::constructions::build_h1;
//! use eigencut::cuts::edge_connectivity;
//! use eigencut::spectral::lambda2;
//!
//! // the 6-vertex cubic family member with a single bridge: its second
//! // largest eigenvalue sits exactly on the 2-edge-connectivity
//! // threshold, so the strict rule must not fire
//! let g = build_h1(3)?;
//! assert!((lambda2(&g)? - 2.5615528128088303).abs() < 1e-9);
//! assert_eq!(edge_connectivity(&g)?.value, 1);
//!
//! let cert = certify(&g, true)?;
//! assert!(!cert.rule("main1").unwrap().fired);
//! assert_eq!(cert.best_bound, 1);
//! assert_eq!(cert.actual, Some(1));
//! # Ok::<(), eigencut::Error>(())
//! ```

// Indexed loops and explicit parity/halving arithmetic follow the matrix
// and closed-form notation used throughout.
#![allow(clippy::needless_range_loop)]
#![allow(clippy::manual_is_multiple_of)]
#![allow(clippy::manual_div_ceil)]

pub mod certify;
pub mod cli;
pub mod constructions;
pub mod cuts;
pub mod enumerate;
mod error;
pub mod fmt;
pub mod multigraph;
pub mod numerics;
pub mod partition;
pub mod spectral;

pub use error::{Error, Result};
