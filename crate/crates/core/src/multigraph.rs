//! Loop-free multigraph representation backed by a dense symmetric
//! multiplicity matrix, with validation, text (de)serialization, and basic
//! structure queries.
//!
//! Every graph handled by this crate is small (enumeration caps at 8
//! vertices), so the dense matrix is both the storage format and the
//! adjacency matrix used verbatim by the spectral code. A `Multigraph` is
//! immutable after construction.

use std::collections::HashSet;

use itertools::Itertools;

use crate::{Error, Result};

/// Vertex cap for the factorial-cost canonical form sweep.
pub const CANONICAL_MAX_N: usize = 8;

/// An undirected multigraph without loops: `n` vertices and a symmetric
/// matrix of nonnegative integer edge multiplicities with zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    mult: Vec<u64>,
}

/// Per-vertex degrees of a multigraph, with the common degree when the graph
/// is regular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<u64>,
    pub regular_degree: Option<u64>,
}

impl Multigraph {
    /// Builds a multigraph from `(u, v, multiplicity)` triples. Repeated
    /// `(u, v)` pairs accumulate; triple order is irrelevant to the result.
    pub fn build(n: usize, edges: &[(usize, usize, u64)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let mut mult = vec![0u64; n * n];
        for &(u, v, m) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            mult[u * n + v] += m;
            mult[v * n + u] += m;
        }
        Ok(Multigraph { n, mult })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge multiplicity between `u` and `v`.
    ///
    /// # Panics
    /// Panics if `u` or `v` is out of range.
    pub fn multiplicity(&self, u: usize, v: usize) -> u64 {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.mult[u * self.n + v]
    }

    /// Edges as `(u, v, multiplicity)` with `u < v` and multiplicity >= 1,
    /// sorted by `(u, v)`.
    pub fn edges(&self) -> Vec<(usize, usize, u64)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                let m = self.mult[u * self.n + v];
                if m > 0 {
                    out.push((u, v, m));
                }
            }
        }
        out
    }

    /// Degree of vertex `v`, counting multiplicities.
    pub fn degree(&self, v: usize) -> u64 {
        assert!(v < self.n, "vertex out of range");
        self.mult[v * self.n..(v + 1) * self.n].iter().sum()
    }

    /// All degrees plus the regular degree when the graph is regular.
    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<u64> = (0..self.n).map(|v| self.degree(v)).collect();
        let first = degrees[0];
        let regular_degree = degrees.iter().all(|&d| d == first).then_some(first);
        debug_assert!(degrees.iter().sum::<u64>() % 2 == 0, "degree sum formula");
        DegreeProfile {
            degrees,
            regular_degree,
        }
    }

    /// True iff the underlying simple graph has a single component.
    /// Multiplicities do not affect connectivity.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in 0..self.n {
                if !seen[v] && self.mult[u * self.n + v] > 0 {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// True iff no pair carries more than one edge.
    pub fn is_simple(&self) -> bool {
        self.mult.iter().all(|&m| m <= 1)
    }

    /// True iff the underlying simple graph is complete (every off-diagonal
    /// pair adjacent).
    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|u| (0..self.n).all(|v| u == v || self.mult[u * self.n + v] > 0))
    }

    /// True iff the underlying simple graph is 2-colorable, decided by
    /// breadth-first coloring of each component.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![None::<bool>; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in 0..self.n {
                    if self.mult[u * self.n + v] == 0 {
                        continue;
                    }
                    match color[v] {
                        None => {
                            color[v] = Some(!color[u].unwrap());
                            queue.push_back(v);
                        }
                        Some(c) if c == color[u].unwrap() => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Relabels vertices: in the result, old vertex `u` becomes `perm[u]`.
    ///
    /// # Panics
    /// Panics if `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Multigraph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut seen = vec![false; self.n];
        for &p in perm {
            assert!(p < self.n && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let mut mult = vec![0u64; self.n * self.n];
        for u in 0..self.n {
            for v in 0..self.n {
                mult[perm[u] * self.n + perm[v]] = self.mult[u * self.n + v];
            }
        }
        Multigraph { n: self.n, mult }
    }

    /// Isomorphism-invariant key: the lexicographically least row-major
    /// serialization of the multiplicity matrix over all vertex
    /// permutations, entries encoded as 8-byte big-endian integers.
    ///
    /// Identical for isomorphic multigraphs and distinct otherwise. The
    /// sweep over all `n!` permutations caps at [`CANONICAL_MAX_N`].
    pub fn canonical_key(&self) -> Result<Vec<u8>> {
        if self.n > CANONICAL_MAX_N {
            return Err(Error::TooLarge(format!(
                "canonical form needs n <= {CANONICAL_MAX_N}, got {}",
                self.n
            )));
        }
        let n = self.n;
        let mut best: Option<Vec<u64>> = None;
        let mut candidate = vec![0u64; n * n];
        for perm in (0..n).permutations(n) {
            // candidate[i][j] = mult[perm[i]][perm[j]], compared entrywise
            // against the best so far with early abort.
            let mut verdict = std::cmp::Ordering::Equal;
            'fill: for i in 0..n {
                for j in 0..n {
                    let e = self.mult[perm[i] * n + perm[j]];
                    candidate[i * n + j] = e;
                    if let Some(b) = &best {
                        match e.cmp(&b[i * n + j]) {
                            std::cmp::Ordering::Less => {
                                verdict = std::cmp::Ordering::Less;
                                // Strictly smaller prefix: finish the fill
                                // without further comparisons.
                                for jj in (j + 1)..n {
                                    candidate[i * n + jj] = self.mult[perm[i] * n + perm[jj]];
                                }
                                for ii in (i + 1)..n {
                                    for jj in 0..n {
                                        candidate[ii * n + jj] = self.mult[perm[ii] * n + perm[jj]];
                                    }
                                }
                                break 'fill;
                            }
                            std::cmp::Ordering::Greater => {
                                verdict = std::cmp::Ordering::Greater;
                                break 'fill;
                            }
                            std::cmp::Ordering::Equal => {}
                        }
                    }
                }
            }
            if best.is_none() || verdict == std::cmp::Ordering::Less {
                best = Some(candidate.clone());
            }
        }
        let best = best.expect("n >= 1");
        let mut bytes = Vec::with_capacity(best.len() * 8);
        for e in best {
            bytes.extend_from_slice(&e.to_be_bytes());
        }
        Ok(bytes)
    }

    /// Parses the line-oriented text format:
    ///
    /// ```text
    /// # comment
    /// multigraph <n>
    /// <u> <v> <m>
    /// ```
    ///
    /// Lines starting with `#` and blank lines are ignored. Edge lines
    /// require `u < v`, `m >= 1`, and at most one line per unordered pair.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut edges: Vec<(usize, usize, u64)> = Vec::new();
        let mut seen: HashSet<(usize, usize)> = HashSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let s = raw.trim();
            if s.is_empty() || s.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = s.split_whitespace().collect();
            match n {
                None => {
                    if tokens.len() != 2 || tokens[0] != "multigraph" {
                        return Err(Error::Parse {
                            line,
                            msg: format!("expected `multigraph <n>`, got `{s}`"),
                        });
                    }
                    let parsed: usize = tokens[1].parse().map_err(|_| Error::Parse {
                        line,
                        msg: format!("invalid vertex count `{}`", tokens[1]),
                    })?;
                    if parsed == 0 {
                        return Err(Error::Parse {
                            line,
                            msg: "vertex count must be at least 1".to_string(),
                        });
                    }
                    n = Some(parsed);
                }
                Some(nv) => {
                    if tokens.len() != 3 {
                        return Err(Error::Parse {
                            line,
                            msg: format!("expected `<u> <v> <m>`, got `{s}`"),
                        });
                    }
                    let parse_usize = |t: &str| -> Result<usize> {
                        t.parse().map_err(|_| Error::Parse {
                            line,
                            msg: format!("invalid integer `{t}`"),
                        })
                    };
                    let u = parse_usize(tokens[0])?;
                    let v = parse_usize(tokens[1])?;
                    let m: u64 = tokens[2].parse().map_err(|_| Error::Parse {
                        line,
                        msg: format!("invalid multiplicity `{}`", tokens[2]),
                    })?;
                    if u >= v {
                        return Err(Error::Parse {
                            line,
                            msg: format!("edge lines require u < v, got {u} {v}"),
                        });
                    }
                    if v >= nv {
                        return Err(Error::Parse {
                            line,
                            msg: format!("vertex {v} out of range for n = {nv}"),
                        });
                    }
                    if m == 0 {
                        return Err(Error::Parse {
                            line,
                            msg: "multiplicity must be at least 1".to_string(),
                        });
                    }
                    if !seen.insert((u, v)) {
                        return Err(Error::Parse {
                            line,
                            msg: format!("duplicate edge line for pair ({u}, {v})"),
                        });
                    }
                    edges.push((u, v, m));
                }
            }
        }
        match n {
            Some(n) => Multigraph::build(n, &edges),
            None => Err(Error::Parse {
                line: 0,
                msg: "missing `multigraph <n>` header".to_string(),
            }),
        }
    }

    /// Serializes to the text format: header, then edge lines sorted by
    /// `(u, v)`, single spaces, newline-terminated. Parsing the output
    /// round-trips bit-exactly.
    pub fn serialize(&self) -> String {
        let mut out = format!("multigraph {}\n", self.n);
        for (u, v, m) in self.edges() {
            out.push_str(&format!("{u} {v} {m}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_h1, build_ht};

    fn h32() -> Multigraph {
        // two doubled edges joined by a perfect matching of single edges
        Multigraph::build(4, &[(0, 1, 2), (2, 3, 2), (0, 2, 1), (1, 3, 1)]).unwrap()
    }

    #[test]
    fn build_triple_edge() {
        let g = Multigraph::build(2, &[(0, 1, 3)]).unwrap();
        assert_eq!(g.degree_profile().degrees, vec![3, 3]);
    }

    #[test]
    fn build_b31_shape() {
        let g = Multigraph::build(3, &[(0, 1, 2), (1, 2, 1), (2, 0, 1)]).unwrap();
        assert_eq!(g.degree_profile().degrees, vec![3, 3, 2]);
        assert_eq!(g.multiplicity(0, 1), 2);
        assert_eq!(g.multiplicity(1, 0), 2);
    }

    #[test]
    fn build_rejects_loops_and_bad_vertices() {
        assert_eq!(
            Multigraph::build(2, &[(0, 0, 1)]).unwrap_err(),
            Error::LoopEdge(0)
        );
        assert_eq!(
            Multigraph::build(2, &[(0, 2, 1)]).unwrap_err(),
            Error::VertexOutOfRange { vertex: 2, n: 2 }
        );
        assert_eq!(Multigraph::build(0, &[]).unwrap_err(), Error::NoVertices);
    }

    #[test]
    fn build_accumulates_repeated_pairs() {
        let g = Multigraph::build(2, &[(0, 1, 1), (1, 0, 2)]).unwrap();
        assert_eq!(g.multiplicity(0, 1), 3);
    }

    #[test]
    fn degree_profile_examples() {
        let b31 = Multigraph::build(3, &[(0, 1, 2), (1, 2, 1), (2, 0, 1)]).unwrap();
        assert_eq!(b31.degree_profile().regular_degree, None);

        let p = h32().degree_profile();
        assert_eq!(p.degrees, vec![3, 3, 3, 3]);
        assert_eq!(p.regular_degree, Some(3));

        let single = Multigraph::build(1, &[]).unwrap();
        let p = single.degree_profile();
        assert_eq!(p.degrees, vec![0]);
        assert_eq!(p.regular_degree, Some(0));
    }

    #[test]
    fn connectivity_examples() {
        assert!(build_h1(3).unwrap().is_connected());
        let two_triples = Multigraph::build(4, &[(0, 1, 3), (2, 3, 3)]).unwrap();
        assert!(!two_triples.is_connected());
        assert!(Multigraph::build(1, &[]).unwrap().is_connected());
    }

    #[test]
    fn simplicity_examples() {
        let k4 = Multigraph::build(
            4,
            &[
                (0, 1, 1),
                (0, 2, 1),
                (0, 3, 1),
                (1, 2, 1),
                (1, 3, 1),
                (2, 3, 1),
            ],
        )
        .unwrap();
        assert!(k4.is_simple());
        assert!(k4.is_complete());
        assert!(!build_h1(3).unwrap().is_simple());
        assert!(!Multigraph::build(2, &[(0, 1, 3)]).unwrap().is_simple());
    }

    #[test]
    fn canonical_key_label_invariance() {
        let a = build_ht(4, 2).unwrap();
        // same graph assembled from a different edge ordering and labeling
        let b = Multigraph::build(4, &[(3, 1, 1), (2, 0, 1), (1, 0, 3), (2, 3, 3)]).unwrap();
        assert_eq!(a.canonical_key().unwrap(), b.canonical_key().unwrap());
    }

    #[test]
    fn canonical_key_separates_nonisomorphic() {
        let h31 = build_h1(3).unwrap();
        // 6-cycle with alternate edges doubled: 3-regular and bipartite
        let c6 = Multigraph::build(
            6,
            &[
                (0, 1, 2),
                (1, 2, 1),
                (2, 3, 2),
                (3, 4, 1),
                (4, 5, 2),
                (5, 0, 1),
            ],
        )
        .unwrap();
        assert_eq!(c6.degree_profile().regular_degree, Some(3));

        // Independent invariant: closed walks of length 3 counted by integer
        // matrix arithmetic. A bipartite graph has none; H_{3,1} has some.
        fn closed_walks_3(g: &Multigraph) -> u64 {
            let n = g.n();
            let mut tr = 0u64;
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        tr += g.multiplicity(i, j) * g.multiplicity(j, k) * g.multiplicity(k, i);
                    }
                }
            }
            tr
        }
        assert_eq!(closed_walks_3(&c6), 0);
        assert!(closed_walks_3(&h31) > 0);
        assert_ne!(h31.canonical_key().unwrap(), c6.canonical_key().unwrap());
    }

    #[test]
    fn canonical_key_rejects_large_graphs() {
        let g = Multigraph::build(9, &[(0, 1, 1)]).unwrap();
        assert!(matches!(g.canonical_key(), Err(Error::TooLarge(_))));
    }

    #[test]
    fn canonical_key_invariant_under_all_permutations() {
        use itertools::Itertools;
        let g4 = Multigraph::build(4, &[(0, 1, 2), (1, 2, 1), (2, 3, 3), (0, 3, 1)]).unwrap();
        let g5 =
            Multigraph::build(5, &[(0, 1, 2), (1, 2, 1), (2, 3, 3), (3, 4, 1), (0, 4, 2)]).unwrap();
        for g in [g4, g5] {
            let n = g.n();
            let key = g.canonical_key().unwrap();
            for perm in (0..n).permutations(n) {
                assert_eq!(g.relabel(&perm).canonical_key().unwrap(), key);
            }
        }
    }

    #[test]
    fn serialize_golden_and_round_trip() {
        let b31 = Multigraph::build(3, &[(1, 2, 1), (0, 1, 2), (2, 0, 1)]).unwrap();
        let text = b31.serialize();
        assert_eq!(text, "multigraph 3\n0 1 2\n0 2 1\n1 2 1\n");
        let back = Multigraph::parse(&text).unwrap();
        assert_eq!(back, b31);
        assert_eq!(back.serialize(), text);
    }

    #[test]
    fn parse_handles_comments_and_blanks() {
        let text = "# a comment\n\nmultigraph 2\n\n# another\n0 1 3\n";
        let g = Multigraph::parse(text).unwrap();
        assert_eq!(g.multiplicity(0, 1), 3);
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!(matches!(
            Multigraph::parse("0 1 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            Multigraph::parse("multigraph 2\n1 0 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Multigraph::parse("multigraph 2\n0 1 2\n0 1 1\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            Multigraph::parse("multigraph 2\n0 1 0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Multigraph::parse("# nothing\n"),
            Err(Error::Parse { line: 0, .. })
        ));
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        let g = h32();
        let total: u64 = g.degree_profile().degrees.iter().sum();
        let edge_sum: u64 = g.edges().iter().map(|&(_, _, m)| m).sum();
        assert_eq!(total, 2 * edge_sum);
    }
}
