//! Self-contained dense symmetric eigensolver and real-root finding for the
//! cubic threshold formulas.
//!
//! The eigensolver is cyclic Jacobi on a copy of the input. Every matrix in
//! this crate is tiny (order <= 8 for graphs, <= 3 for quotients), where
//! Jacobi is unconditionally correct for symmetric input, fully
//! deterministic, and more than accurate enough for the 1e-9 comparisons
//! made elsewhere.

use crate::{Error, Result};

/// Global comparison tolerance for eigenvalue-vs-threshold tests.
///
/// "x below T strictly" means `x < T - EPS`; "x equals T" means
/// `|x - T| <= EPS`. Declared once and reused by the certifier and the
/// verification harnesses.
pub const EPS: f64 = 1e-9;

/// Sweep budget for the Jacobi iteration; exhausting it signals a numerics
/// bug, not bad input.
pub const MAX_SWEEPS: usize = 100;

/// `x < threshold` strictly, under the global tolerance.
pub fn strictly_below(x: f64, threshold: f64) -> bool {
    x < threshold - EPS
}

/// `|x - y| <= EPS`.
pub fn within_eps(x: f64, y: f64) -> bool {
    (x - y).abs() <= EPS
}

/// A real symmetric matrix. Symmetry is exact and checked at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl SymMatrix {
    /// Builds from full rows, rejecting non-square or asymmetric input.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::NotSquare { rows: 0, cols: 0 });
        }
        for row in rows {
            if row.len() != order {
                return Err(Error::NotSquare {
                    rows: order,
                    cols: row.len(),
                });
            }
        }
        for i in 0..order {
            for j in (i + 1)..order {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::NotSymmetric { i, j });
                }
            }
        }
        let entries = rows.iter().flatten().copied().collect();
        Ok(SymMatrix { order, entries })
    }

    /// Builds a symmetric matrix from its upper triangle: `f(i, j)` is
    /// evaluated for `i <= j` and mirrored.
    pub fn from_upper(order: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        assert!(order >= 1, "order must be at least 1");
        let mut entries = vec![0.0; order * order];
        for i in 0..order {
            for j in i..order {
                let e = f(i, j);
                entries[i * order + j] = e;
                entries[j * order + i] = e;
            }
        }
        SymMatrix { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        assert!(i < self.order && j < self.order, "index out of range");
        self.entries[i * self.order + j]
    }

    fn frobenius(&self) -> f64 {
        self.entries.iter().map(|e| e * e).sum::<f64>().sqrt()
    }
}

/// Eigenvalues in nonincreasing order.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenList {
    values: Vec<f64>,
}

impl EigenList {
    /// Sorts the given values into nonincreasing order.
    pub fn from_unsorted(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        EigenList { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The i-th largest eigenvalue, 0-based.
    pub fn get(&self, i: usize) -> f64 {
        self.values[i]
    }
}

fn offdiag_frobenius(a: &[f64], s: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..s {
        for q in 0..s {
            if p != q {
                sum += a[p * s + q] * a[p * s + q];
            }
        }
    }
    sum.sqrt()
}

/// All eigenvalues of a symmetric matrix, each within 1e-9 of the true
/// value, sorted nonincreasing. Deterministic for identical input.
pub fn sym_eigenvalues(m: &SymMatrix) -> Result<EigenList> {
    let s = m.order;
    let mut a = m.entries.clone();
    let stop = 1e-13 * (1.0 + m.frobenius());
    for _ in 0..MAX_SWEEPS {
        if offdiag_frobenius(&a, s) <= stop {
            return Ok(collect_diagonal(&a, s));
        }
        for p in 0..s.saturating_sub(1) {
            for q in (p + 1)..s {
                let apq = a[p * s + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * s + p];
                let aqq = a[q * s + q];
                // symmetric Schur rotation annihilating a[p][q]
                let tau = (aqq - app) / (2.0 * apq);
                let t = tau.signum() / (tau.abs() + (tau * tau + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let sn = t * c;
                for k in 0..s {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * s + p];
                    let akq = a[k * s + q];
                    let new_kp = c * akp - sn * akq;
                    let new_kq = sn * akp + c * akq;
                    a[k * s + p] = new_kp;
                    a[p * s + k] = new_kp;
                    a[k * s + q] = new_kq;
                    a[q * s + k] = new_kq;
                }
                a[p * s + p] = app - t * apq;
                a[q * s + q] = aqq + t * apq;
                a[p * s + q] = 0.0;
                a[q * s + p] = 0.0;
            }
        }
    }
    if offdiag_frobenius(&a, s) <= stop {
        return Ok(collect_diagonal(&a, s));
    }
    Err(Error::NonConvergence { sweeps: MAX_SWEEPS })
}

fn collect_diagonal(a: &[f64], s: usize) -> EigenList {
    EigenList::from_unsorted((0..s).map(|i| a[i * s + i]).collect())
}

/// The largest real root of the monic cubic `x^3 + c2 x^2 + c1 x + c0`,
/// accurate to 1e-12: bisection inside a bracket derived from the critical
/// points and a Cauchy bound, followed by a Newton polish.
pub fn largest_real_root_cubic(c2: f64, c1: f64, c0: f64) -> f64 {
    let f = |x: f64| ((x + c2) * x + c1) * x + c0;
    let df = |x: f64| (3.0 * x + 2.0 * c2) * x + c1;
    let bound = 1.0 + c2.abs().max(c1.abs()).max(c0.abs());

    // The derivative's roots split the line into monotone pieces; the
    // largest real root sits either right of the local minimum or left of
    // the local maximum, depending on the sign of f at the minimum.
    let disc = c2 * c2 - 3.0 * c1;
    let (mut lo, mut hi) = if disc > 0.0 {
        let sq = disc.sqrt();
        let x_max = (-c2 - sq) / 3.0;
        let x_min = (-c2 + sq) / 3.0;
        let f_min = f(x_min);
        if f_min > 0.0 {
            (-bound, x_max)
        } else if f_min == 0.0 {
            return x_min;
        } else {
            (x_min, bound)
        }
    } else {
        (-bound, bound)
    };

    debug_assert!(f(lo) <= 0.0 && f(hi) >= 0.0, "root bracket invariant");
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) >= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let mut root = hi;

    // Newton polish, kept inside the bracket.
    for _ in 0..8 {
        let d = df(root);
        if d == 0.0 {
            break;
        }
        let next = root - f(root) / d;
        if !next.is_finite() || next < lo || next > hi {
            break;
        }
        if (next - root).abs() <= f64::EPSILON * root.abs().max(1.0) {
            root = next;
            break;
        }
        root = next;
    }
    if f(root).abs() <= f(hi).abs() {
        root
    } else {
        hi
    }
}
