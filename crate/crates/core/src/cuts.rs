//! Exact edge-connectivity of multigraphs via minimum-cut phases, plus
//! brute-force oracles for cuts and vertex connectivity.
//!
//! Edge multiplicities act as integer weights directly; the graph is never
//! expanded into parallel unit edges. All tie-breaking is by smallest
//! vertex index, so results are deterministic.

use itertools::Itertools;

use crate::multigraph::Multigraph;
use crate::partition::{cut_witness, CutWitness};
use crate::{Error, Result};

/// Vertex cap for the subset-enumeration cut oracle.
pub const BRUTE_FORCE_MAX_N: usize = 16;

/// Vertex cap for the vertex-connectivity search.
pub const VERTEX_CONNECTIVITY_MAX_N: usize = 10;

/// A global minimum cut: its value κ′ and one witness attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutResult {
    pub value: u64,
    pub witness: CutWitness,
}

/// Exact edge-connectivity κ′ by repeated minimum-cut phases
/// (maximum-adjacency orderings with supernode contraction).
///
/// Each phase starts from the smallest active supernode, grows the ordering
/// by the vertex with the largest total weight into the ordered set
/// (smallest index on ties), records the cut separating the last vertex,
/// and contracts the last two. The best phase cut is the global minimum.
pub fn edge_connectivity(g: &Multigraph) -> Result<CutResult> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooSmall(format!(
            "edge connectivity needs at least 2 vertices, got {n}"
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }

    let mut w = vec![0u64; n * n];
    for u in 0..n {
        for v in 0..n {
            w[u * n + v] = g.multiplicity(u, v);
        }
    }
    let mut groups: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut alive = vec![true; n];
    let mut alive_count = n;

    let mut best_value = u64::MAX;
    let mut best_side: Vec<usize> = Vec::new();

    while alive_count > 1 {
        let start = alive.iter().position(|&a| a).expect("at least two alive");
        let mut in_order = vec![false; n];
        in_order[start] = true;
        let mut weight_to_set = vec![0u64; n];
        for v in 0..n {
            if alive[v] && v != start {
                weight_to_set[v] = w[start * n + v];
            }
        }
        let mut prev = start;
        let mut last = start;
        let mut cut_of_phase = 0u64;
        for _ in 1..alive_count {
            let mut pick: Option<usize> = None;
            for v in 0..n {
                if alive[v]
                    && !in_order[v]
                    && pick.is_none_or(|p| weight_to_set[v] > weight_to_set[p])
                {
                    pick = Some(v);
                }
            }
            let v = pick.expect("unordered vertex remains");
            prev = last;
            last = v;
            cut_of_phase = weight_to_set[v];
            in_order[v] = true;
            for u in 0..n {
                if alive[u] && !in_order[u] {
                    weight_to_set[u] += w[v * n + u];
                }
            }
        }
        if cut_of_phase < best_value {
            best_value = cut_of_phase;
            best_side = groups[last].clone();
        }
        // contract `last` into `prev`
        for u in 0..n {
            if alive[u] && u != last && u != prev {
                w[prev * n + u] += w[last * n + u];
                w[u * n + prev] = w[prev * n + u];
            }
        }
        alive[last] = false;
        alive_count -= 1;
        let moved = std::mem::take(&mut groups[last]);
        groups[prev].extend(moved);
    }

    best_side.sort_unstable();
    let witness = cut_witness(g, &best_side)?;
    debug_assert_eq!(witness.l, best_value, "witness must attain the cut value");
    Ok(CutResult {
        value: best_value,
        witness,
    })
}

/// Exact minimum cut by enumerating all `2^(n-1) - 1` proper subsets
/// containing vertex 0. Independent of the contraction algorithm.
pub fn brute_force_min_cut(g: &Multigraph) -> Result<CutResult> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooSmall(format!(
            "minimum cut needs at least 2 vertices, got {n}"
        )));
    }
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::TooLarge(format!(
            "brute-force cut needs n <= {BRUTE_FORCE_MAX_N}, got {n}"
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }

    let full: u64 = (1 << (n - 1)) - 1;
    let mut best_value = u64::MAX;
    let mut best_mask = 0u64;
    for mask in 0..full {
        let mut l = 0u64;
        for u in 0..n {
            let u_in = u == 0 || (mask >> (u - 1)) & 1 == 1;
            if !u_in {
                continue;
            }
            for v in 0..n {
                let v_in = v == 0 || (mask >> (v - 1)) & 1 == 1;
                if !v_in {
                    l += g.multiplicity(u, v);
                }
            }
        }
        if l < best_value {
            best_value = l;
            best_mask = mask;
        }
    }
    let side: Vec<usize> = (0..n)
        .filter(|&v| v == 0 || (best_mask >> (v - 1)) & 1 == 1)
        .collect();
    let witness = cut_witness(g, &side)?;
    Ok(CutResult {
        value: best_value,
        witness,
    })
}

/// Exact vertex connectivity κ of a simple graph by deleting vertex
/// subsets in increasing size order, with the complete-graph convention
/// κ(K_n) = n − 1.
pub fn vertex_connectivity_simple(g: &Multigraph) -> Result<u64> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let n = g.n();
    if n > VERTEX_CONNECTIVITY_MAX_N {
        return Err(Error::TooLarge(format!(
            "vertex connectivity needs n <= {VERTEX_CONNECTIVITY_MAX_N}, got {n}"
        )));
    }
    for k in 0..n.saturating_sub(1) {
        for removed in (0..n).combinations(k) {
            let keep: Vec<usize> = (0..n).filter(|v| !removed.contains(v)).collect();
            if keep.len() >= 2 && !connected_on(g, &keep) {
                return Ok(k as u64);
            }
        }
    }
    Ok(n as u64 - 1)
}

fn connected_on(g: &Multigraph, keep: &[usize]) -> bool {
    let mut seen = vec![false; g.n()];
    let mut in_keep = vec![false; g.n()];
    for &v in keep {
        in_keep[v] = true;
    }
    let mut stack = vec![keep[0]];
    seen[keep[0]] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &v in keep {
            if !seen[v] && g.multiplicity(u, v) > 0 {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count == keep.len()
}
