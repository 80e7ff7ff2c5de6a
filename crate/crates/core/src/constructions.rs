//! The extremal multigraph families that attain the certification
//! thresholds with equality.
//!
//! `B_{d,1}` is the unique 3-vertex multigraph whose degrees are d, d,
//! d − 1 (it exists exactly for odd d). `H_{d,1}` joins two copies of it by
//! one edge between the degree-(d − 1) vertices: the smallest d-regular
//! multigraph with edge-connectivity 1. For even t < d − 1, `H_{d,t}` joins
//! two copies of a 2-vertex block of multiplicity d − t/2 by t/2 edges at
//! each of the two vertex pairs: a smallest d-regular multigraph with
//! edge-connectivity t.
//!
//! Vertex labeling is fixed (copy 1 first, copy 2 shifted, bridge at the
//! lowest-indexed eligible vertices) so serialized outputs are byte-stable.

use crate::multigraph::Multigraph;
use crate::{Error, Result};

/// Parameters selecting a family member: degree `d` and target cut size
/// `t` (1, or an even value below d − 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyParams {
    pub d: u64,
    pub t: u64,
}

impl FamilyParams {
    pub fn new(d: u64, t: u64) -> Result<Self> {
        match t {
            1 => {
                check_odd_d(d)?;
            }
            t if t >= 2 && t % 2 == 0 => {
                if t >= d.saturating_sub(1) {
                    return Err(Error::BadT(format!(
                        "t must satisfy t < d - 1, got t = {t}, d = {d}"
                    )));
                }
            }
            _ => {
                return Err(Error::BadT(format!(
                    "t must be 1 or an even value at least 2, got {t}"
                )))
            }
        }
        Ok(FamilyParams { d, t })
    }

    pub fn build(&self) -> Result<Multigraph> {
        if self.t == 1 {
            build_h1(self.d)
        } else {
            build_ht(self.d, self.t)
        }
    }
}

fn check_odd_d(d: u64) -> Result<()> {
    if d < 3 {
        return Err(Error::TooSmall(format!("d must be at least 3, got {d}")));
    }
    if d % 2 == 0 {
        return Err(Error::BadParity(format!("d must be odd, got {d}")));
    }
    Ok(())
}

/// The 3-vertex block: multiplicity (d+1)/2 between vertices 0 and 1,
/// (d−1)/2 on the other two pairs; degrees d, d, d − 1.
pub fn build_b1(d: u64) -> Result<Multigraph> {
    check_odd_d(d)?;
    let a = (d + 1) / 2;
    let bc = (d - 1) / 2;
    Multigraph::build(3, &[(0, 1, a), (1, 2, bc), (2, 0, bc)])
}

/// Two copies of [`build_b1`] joined by one edge between the two
/// degree-(d − 1) vertices: 6 vertices, d-regular, edge-connectivity 1.
pub fn build_h1(d: u64) -> Result<Multigraph> {
    check_odd_d(d)?;
    let a = (d + 1) / 2;
    let bc = (d - 1) / 2;
    Multigraph::build(
        6,
        &[
            (0, 1, a),
            (1, 2, bc),
            (2, 0, bc),
            (3, 4, a),
            (4, 5, bc),
            (5, 3, bc),
            (2, 5, 1),
        ],
    )
}

/// Two copies of a 2-vertex block of multiplicity d − t/2 joined by t/2
/// edges between the two x's and between the two y's: 4 vertices,
/// d-regular, edge-connectivity t. Requires even t with 2 <= t < d − 1.
pub fn build_ht(d: u64, t: u64) -> Result<Multigraph> {
    if t < 2 {
        return Err(Error::BadT(format!("t must be at least 2, got {t}")));
    }
    if t % 2 != 0 {
        return Err(Error::BadT(format!("t must be even, got {t}")));
    }
    if t >= d.saturating_sub(1) {
        return Err(Error::BadT(format!(
            "t must satisfy t < d - 1, got t = {t}, d = {d}"
        )));
    }
    let inner = d - t / 2;
    let cross = t / 2;
    Multigraph::build(
        4,
        &[(0, 1, inner), (2, 3, inner), (0, 2, cross), (1, 3, cross)],
    )
}

/// The unique 3-vertex multigraph with degree multiset {d, d, d − 1},
/// obtained by exhaustive search over all multiplicity triples in
/// [0, d]^3 rather than the closed form. The search must find exactly one
/// graph up to isomorphism, and it must match [`build_b1`].
pub fn unique_3vertex_degree_profile(d: u64) -> Result<Multigraph> {
    check_odd_d(d)?;
    let mut found: Vec<Multigraph> = Vec::new();
    let mut keys: Vec<Vec<u8>> = Vec::new();
    let mut target = vec![d - 1, d, d];
    target.sort_unstable();
    for a in 0..=d {
        for b in 0..=d {
            for c in 0..=d {
                // degrees of (v0, v1, v2) with a = m01, b = m12, c = m20
                let mut degs = vec![a + c, a + b, b + c];
                degs.sort_unstable();
                if degs != target {
                    continue;
                }
                let g = Multigraph::build(3, &[(0, 1, a), (1, 2, b), (2, 0, c)])?;
                let key = g.canonical_key()?;
                if !keys.contains(&key) {
                    keys.push(key);
                    found.push(g);
                }
            }
        }
    }
    let closed = build_b1(d)?;
    assert_eq!(
        keys.len(),
        1,
        "3-vertex profile search found {} classes for d = {d}",
        keys.len()
    );
    assert_eq!(
        keys[0],
        closed.canonical_key()?,
        "3-vertex profile search disagrees with the closed form at d = {d}"
    );
    Ok(closed)
}
