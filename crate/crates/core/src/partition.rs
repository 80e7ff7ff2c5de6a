//! Vertex partitions, quotient matrices, equitable-partition detection,
//! eigenvalue interlacing, and cut witnesses.
//!
//! The quotient of a partition V = V_1 ∪ … ∪ V_s has entry (i, j) equal to
//! the average number of neighbours in V_j of the vertices in V_i, counting
//! multiplicities. Its eigenvalues interlace the graph's; for an equitable
//! partition they are a subset of the graph's.

use std::collections::HashSet;

use crate::multigraph::Multigraph;
use crate::numerics::{sym_eigenvalues, EigenList, SymMatrix};
use crate::{Error, Result};

/// Disjoint nonempty vertex blocks covering all of `0..n`. Block order is
/// preserved; vertices within a block are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    n: usize,
}

impl Partition {
    pub fn new(blocks: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidPartition("no blocks".to_string()));
        }
        let mut seen = vec![false; n];
        let mut sorted_blocks = Vec::with_capacity(blocks.len());
        for (bi, block) in blocks.into_iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {bi} is empty")));
            }
            let mut b = block;
            b.sort_unstable();
            for &v in &b {
                if v >= n {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} out of range for n = {n}"
                    )));
                }
                if seen[v] {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} appears in more than one block"
                    )));
                }
                seen[v] = true;
            }
            sorted_blocks.push(b);
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPartition(format!(
                "vertex {v} is not covered by any block"
            )));
        }
        Ok(Partition {
            blocks: sorted_blocks,
            n,
        })
    }

    /// Parses the CLI syntax: blocks separated by `|`, vertices by `,`,
    /// e.g. `0,1,2|3|4,5`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut blocks = Vec::new();
        for part in text.split('|') {
            let mut block = Vec::new();
            for tok in part.split(',') {
                let tok = tok.trim();
                if tok.is_empty() {
                    return Err(Error::InvalidPartition(format!(
                        "empty vertex token in `{text}`"
                    )));
                }
                let v: usize = tok
                    .parse()
                    .map_err(|_| Error::InvalidPartition(format!("invalid vertex `{tok}`")))?;
                block.push(v);
            }
            blocks.push(block);
        }
        Partition::new(blocks, n)
    }

    /// The two-block partition {side, complement}.
    pub fn from_cut(side: &[usize], n: usize) -> Result<Self> {
        let in_side: HashSet<usize> = side.iter().copied().collect();
        let complement: Vec<usize> = (0..n).filter(|v| !in_side.contains(v)).collect();
        Partition::new(vec![side.to_vec(), complement], n)
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// The s×s quotient matrix of a partition, together with the block sizes.
/// Generally not symmetric, but always similar to a symmetric matrix via
/// scaling by the square roots of the block sizes.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientMatrix {
    entries: Vec<f64>,
    block_sizes: Vec<usize>,
}

impl QuotientMatrix {
    /// Builds from explicit rows and block sizes, validating the scaled
    /// symmetry `entry(i,j) * size_i = entry(j,i) * size_j` that every
    /// quotient of a symmetric matrix satisfies.
    pub fn new(rows: &[Vec<f64>], block_sizes: Vec<usize>) -> Result<Self> {
        let s = rows.len();
        if s == 0 || block_sizes.len() != s {
            return Err(Error::InvalidPartition(
                "quotient needs matching rows and block sizes".to_string(),
            ));
        }
        for row in rows {
            if row.len() != s {
                return Err(Error::NotSquare {
                    rows: s,
                    cols: row.len(),
                });
            }
        }
        if block_sizes.contains(&0) {
            return Err(Error::InvalidPartition("zero block size".to_string()));
        }
        for i in 0..s {
            for j in 0..s {
                let lhs = rows[i][j] * block_sizes[i] as f64;
                let rhs = rows[j][i] * block_sizes[j] as f64;
                if (lhs - rhs).abs() > 1e-9 * (1.0 + lhs.abs().max(rhs.abs())) {
                    return Err(Error::InvalidPartition(format!(
                        "entries ({i},{j})/({j},{i}) are not a quotient of a symmetric matrix"
                    )));
                }
            }
        }
        Ok(QuotientMatrix {
            entries: rows.iter().flatten().copied().collect(),
            block_sizes,
        })
    }

    pub fn order(&self) -> usize {
        self.block_sizes.len()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        let s = self.order();
        assert!(i < s && j < s, "index out of range");
        self.entries[i * s + j]
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }
}

/// A cut (S, S̄) with side sizes and the crossing multiplicity
/// l = |[S, S̄]|.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutWitness {
    pub side: Vec<usize>,
    pub a: usize,
    pub b: usize,
    pub l: u64,
}

/// The quotient matrix of a partition of `g`.
pub fn quotient_matrix(g: &Multigraph, p: &Partition) -> Result<QuotientMatrix> {
    if p.n() != g.n() {
        return Err(Error::InvalidPartition(format!(
            "partition is over {} vertices, graph has {}",
            p.n(),
            g.n()
        )));
    }
    let s = p.num_blocks();
    let mut rows = vec![vec![0.0; s]; s];
    for i in 0..s {
        for j in 0..s {
            let mut total = 0u64;
            for &v in &p.blocks()[i] {
                for &w in &p.blocks()[j] {
                    if v != w {
                        total += g.multiplicity(v, w);
                    }
                }
            }
            rows[i][j] = total as f64 / p.blocks()[i].len() as f64;
        }
    }
    QuotientMatrix::new(&rows, p.blocks().iter().map(Vec::len).collect())
}

/// True iff every vertex of block i has the same integer number of
/// neighbours in block j, for every ordered pair (i, j). Counts are exact
/// integers, so no tolerance is involved.
pub fn is_equitable(g: &Multigraph, p: &Partition) -> Result<bool> {
    if p.n() != g.n() {
        return Err(Error::InvalidPartition(format!(
            "partition is over {} vertices, graph has {}",
            p.n(),
            g.n()
        )));
    }
    for bi in p.blocks() {
        for bj in p.blocks() {
            let mut expected: Option<u64> = None;
            for &v in bi {
                let count: u64 = bj
                    .iter()
                    .filter(|&&w| w != v)
                    .map(|&w| g.multiplicity(v, w))
                    .sum();
                match expected {
                    None => expected = Some(count),
                    Some(e) if e != count => return Ok(false),
                    Some(_) => {}
                }
            }
        }
    }
    Ok(true)
}

/// Eigenvalues of a quotient matrix, nonincreasing.
///
/// Computed on the symmetric similar matrix
/// `diag(sqrt(size_i)) · B · diag(1/sqrt(size_i))`, which has the same
/// spectrum, so the symmetric eigensolver applies exactly.
pub fn quotient_eigs(q: &QuotientMatrix) -> EigenList {
    let s = q.order();
    let sym = SymMatrix::from_upper(s, |i, j| {
        let scale_ij = (q.block_sizes()[i] as f64 / q.block_sizes()[j] as f64).sqrt();
        let scale_ji = (q.block_sizes()[j] as f64 / q.block_sizes()[i] as f64).sqrt();
        0.5 * (q.get(i, j) * scale_ij + q.get(j, i) * scale_ji)
    });
    sym_eigenvalues(&sym).expect("Jacobi converges on every symmetric matrix here")
}

/// Checks λ_i(G) ≥ λ_i(Q) ≥ λ_{n−s+i}(G) for all i, with 1e-8 slack on
/// each inequality. Returns false when the quotient is larger than the
/// graph spectrum.
pub fn check_interlacing(graph_eigs: &EigenList, quotient_eigs: &EigenList) -> bool {
    let n = graph_eigs.len();
    let s = quotient_eigs.len();
    if s > n {
        return false;
    }
    const SLACK: f64 = 1e-8;
    (0..s).all(|i| {
        graph_eigs.get(i) + SLACK >= quotient_eigs.get(i)
            && quotient_eigs.get(i) + SLACK >= graph_eigs.get(n - s + i)
    })
}

/// The cut witness for a vertex subset: side sizes and crossing
/// multiplicity.
pub fn cut_witness(g: &Multigraph, side: &[usize]) -> Result<CutWitness> {
    let n = g.n();
    let mut in_side = vec![false; n];
    for &v in side {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        in_side[v] = true;
    }
    let side: Vec<usize> = (0..n).filter(|&v| in_side[v]).collect();
    let a = side.len();
    if a == 0 || a == n {
        return Err(Error::EmptySide);
    }
    let mut l = 0u64;
    for &u in &side {
        for v in 0..n {
            if !in_side[v] {
                l += g.multiplicity(u, v);
            }
        }
    }
    Ok(CutWitness {
        side,
        a,
        b: n - a,
        l,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_h1, build_ht};
    use crate::spectral::spectrum;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    fn h32() -> Multigraph {
        Multigraph::build(4, &[(0, 1, 2), (2, 3, 2), (0, 2, 1), (1, 3, 1)]).unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![vec![0, 1], vec![2]], 3).is_ok());
        assert!(matches!(
            Partition::new(vec![vec![0, 1], vec![1, 2]], 3),
            Err(Error::InvalidPartition(_))
        ));
        assert!(matches!(
            Partition::new(vec![vec![0, 1]], 3),
            Err(Error::InvalidPartition(_))
        ));
        assert!(matches!(
            Partition::new(vec![vec![0], vec![]], 1),
            Err(Error::InvalidPartition(_))
        ));
    }

    #[test]
    fn partition_parse_syntax() {
        let p = Partition::parse("0,1,2|3|4,5", 6).unwrap();
        assert_eq!(p.blocks(), &[vec![0, 1, 2], vec![3], vec![4, 5]]);
        assert!(Partition::parse("0,1|", 3).is_err());
        assert!(Partition::parse("0,x|1,2", 3).is_err());
    }

    #[test]
    fn quotient_of_two_copy_partition() {
        // two copies of the 2-vertex block: [[d - t/2, t/2], [t/2, d - t/2]]
        let g = build_ht(5, 2).unwrap();
        let p = Partition::new(vec![vec![0, 1], vec![2, 3]], 4).unwrap();
        let q = quotient_matrix(&g, &p).unwrap();
        assert_close(q.get(0, 0), 4.0, 1e-12);
        assert_close(q.get(0, 1), 1.0, 1e-12);
        assert_close(q.get(1, 0), 1.0, 1e-12);
        assert_close(q.get(1, 1), 4.0, 1e-12);
    }

    #[test]
    fn quotient_of_cut_partition() {
        // cut with witness (a, b, l) gives [[d-l/a, l/a], [l/b, d-l/b]]
        let g = build_h1(3).unwrap();
        let p = Partition::from_cut(&[0, 1, 2], 6).unwrap();
        let q = quotient_matrix(&g, &p).unwrap();
        assert_close(q.get(0, 0), 3.0 - 1.0 / 3.0, 1e-12);
        assert_close(q.get(0, 1), 1.0 / 3.0, 1e-12);
        assert_close(q.get(1, 0), 1.0 / 3.0, 1e-12);
        assert_close(q.get(1, 1), 3.0 - 1.0 / 3.0, 1e-12);
    }

    #[test]
    fn quotient_of_single_block() {
        let g = h32();
        let p = Partition::new(vec![vec![0, 1, 2, 3]], 4).unwrap();
        let q = quotient_matrix(&g, &p).unwrap();
        assert_eq!(q.order(), 1);
        assert_close(q.get(0, 0), 3.0, 1e-12);
        assert_close(quotient_eigs(&q).get(0), 3.0, 1e-12);
    }

    #[test]
    fn equitable_two_copy_partition() {
        let g = build_ht(5, 2).unwrap();
        let p = Partition::new(vec![vec![0, 1], vec![2, 3]], 4).unwrap();
        assert!(is_equitable(&g, &p).unwrap());
    }

    #[test]
    fn three_part_cut_partition_is_not_equitable() {
        // Around the bridge of the 6-vertex family member: one copy, the
        // far bridge endpoint, the rest. Direct neighbour counts inside the
        // copy are 3, 3, 2, so the partition fails equitability even though
        // its quotient matches the closed 3×3 form.
        let g = build_h1(3).unwrap();
        let p = Partition::new(vec![vec![0, 1, 2], vec![5], vec![3, 4]], 6).unwrap();
        assert!(!is_equitable(&g, &p).unwrap());

        let counts: Vec<u64> = [0, 1, 2]
            .iter()
            .map(|&v| {
                [0, 1, 2]
                    .iter()
                    .filter(|&&w| w != v)
                    .map(|&w| g.multiplicity(v, w))
                    .sum()
            })
            .collect();
        assert_eq!(counts, vec![3, 3, 2]);

        // the quotient still has the closed Case-3 shape with c = 1 here
        let q = quotient_matrix(&g, &p).unwrap();
        assert_close(q.get(0, 0), 3.0 - 1.0 / 3.0, 1e-12);
        assert_close(q.get(0, 1), 1.0 / 3.0, 1e-12);
        assert_close(q.get(1, 0), 1.0, 1e-12);
        assert_close(q.get(1, 2), 2.0, 1e-12);
        assert_close(q.get(2, 1), 1.0, 1e-12);
        assert_close(q.get(2, 2), 2.0, 1e-12);
    }

    #[test]
    fn cut_partition_of_copy_is_not_equitable() {
        // inside one copy only the bridge endpoint sees the crossing edge
        let g = build_h1(3).unwrap();
        let p = Partition::from_cut(&[0, 1, 2], 6).unwrap();
        assert!(!is_equitable(&g, &p).unwrap());
    }

    #[test]
    fn quotient_eigs_closed_forms() {
        let g = build_h1(3).unwrap();
        let p = Partition::from_cut(&[0, 1, 2], 6).unwrap();
        let q = quotient_matrix(&g, &p).unwrap();
        let e = quotient_eigs(&q);
        assert_close(e.get(0), 3.0, 1e-9);
        assert_close(e.get(1), 7.0 / 3.0, 1e-9);

        let ht = build_ht(5, 2).unwrap();
        let p = Partition::new(vec![vec![0, 1], vec![2, 3]], 4).unwrap();
        let e = quotient_eigs(&quotient_matrix(&ht, &p).unwrap());
        assert_close(e.get(0), 5.0, 1e-9);
        assert_close(e.get(1), 3.0, 1e-9);
    }

    #[test]
    fn interlacing_examples() {
        let g = h32();
        let s = spectrum(&g).unwrap();
        let p = Partition::new(vec![vec![0, 1], vec![2, 3]], 4).unwrap();
        let q = quotient_eigs(&quotient_matrix(&g, &p).unwrap());
        assert!(check_interlacing(s.adjacency_eigs(), &q));

        let h = build_h1(3).unwrap();
        let sh = spectrum(&h).unwrap();
        let qh = quotient_eigs(
            &quotient_matrix(&h, &Partition::from_cut(&[0, 1, 2], 6).unwrap()).unwrap(),
        );
        assert!(check_interlacing(sh.adjacency_eigs(), &qh));
        assert!(sh.lambda2().unwrap() + 1e-9 >= 7.0 / 3.0);

        // s = n: identical lists interlace
        assert!(check_interlacing(sh.adjacency_eigs(), sh.adjacency_eigs()));
    }

    #[test]
    fn equitable_quotient_eigs_are_graph_eigs() {
        let g = build_ht(4, 2).unwrap();
        let p = Partition::new(vec![vec![0, 1], vec![2, 3]], 4).unwrap();
        assert!(is_equitable(&g, &p).unwrap());
        let q = quotient_eigs(&quotient_matrix(&g, &p).unwrap());
        let s = spectrum(&g).unwrap();
        for &qe in q.values() {
            assert!(
                s.adjacency_eigs()
                    .values()
                    .iter()
                    .any(|&ge| (ge - qe).abs() <= 1e-8),
                "quotient eigenvalue {qe} not in graph spectrum"
            );
        }
    }

    #[test]
    fn cut_witness_examples() {
        let h1 = build_h1(3).unwrap();
        let w = cut_witness(&h1, &[0, 1, 2]).unwrap();
        assert_eq!((w.a, w.b, w.l), (3, 3, 1));

        // one copy of the 2-vertex block of the manually built (3, 2) graph
        let w = cut_witness(&h32(), &[0, 1]).unwrap();
        assert_eq!((w.a, w.b, w.l), (2, 2, 2));

        let triple = Multigraph::build(2, &[(0, 1, 3)]).unwrap();
        let w = cut_witness(&triple, &[0]).unwrap();
        assert_eq!((w.a, w.b, w.l), (1, 1, 3));

        assert!(matches!(cut_witness(&triple, &[]), Err(Error::EmptySide)));
        assert!(matches!(
            cut_witness(&triple, &[0, 1]),
            Err(Error::EmptySide)
        ));
    }

    #[test]
    fn cut_parity_matches_degree_sum() {
        // for a d-regular graph, l = d*a - 2*(edges inside S)
        let g = build_h1(5).unwrap();
        for side in [vec![0], vec![0, 1], vec![0, 1, 2], vec![0, 2, 4]] {
            let w = cut_witness(&g, &side).unwrap();
            assert_eq!(w.l % 2, (5 * w.a as u64) % 2);
        }
    }
}
