//! Spectral threshold catalog and the edge-connectivity certifier.
//!
//! Each catalog rule states: if λ₂ of a connected d-regular graph lies
//! below a threshold, then κ′ is at least some bound (or exactly d). The
//! two multigraph rules (`main1`, `main2_*`) apply to every multigraph;
//! the remaining rules are stated for simple graphs only and are gated on
//! simplicity. Hypotheses are strict inequalities except for
//! `krivelevich_sudakov`, which covers equality. Conjecture-status rules
//! are reported but never contribute to the certified bound unless
//! explicitly opted in.
//!
//! Threshold comparisons use the global tolerance from [`crate::numerics`]:
//! sharp examples, which attain a threshold exactly, never fire the strict
//! rules.

use crate::cuts::edge_connectivity;
use crate::fmt::sig12;
use crate::multigraph::Multigraph;
use crate::numerics::{largest_real_root_cubic, strictly_below, EPS};
use crate::spectral::spectrum;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleStatus {
    Theorem,
    Conjecture,
}

impl RuleStatus {
    fn as_str(self) -> &'static str {
        match self {
            RuleStatus::Theorem => "theorem",
            RuleStatus::Conjecture => "conjecture",
        }
    }
}

/// One instantiated certification rule.
#[derive(Debug, Clone, PartialEq)]
pub struct CatalogEntry {
    pub id: String,
    pub threshold: f64,
    /// κ′ lower bound granted when the rule fires.
    pub bound: u64,
    /// True when the conclusion is κ′ = d rather than a lower bound.
    pub exact: bool,
    /// Rule is stated for simple graphs only.
    pub simple_only: bool,
    /// Hypothesis is λ₂ < threshold (strict); otherwise λ₂ <= threshold.
    pub strict: bool,
    pub status: RuleStatus,
}

/// Every rule applicable to one graph, thresholds instantiated.
#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdCatalog {
    pub entries: Vec<CatalogEntry>,
}

/// Evaluation of one rule at a concrete λ₂.
#[derive(Debug, Clone, PartialEq)]
pub struct RuleResult {
    pub id: String,
    pub threshold: f64,
    pub fired: bool,
    pub implied_bound: u64,
    pub exact: bool,
    pub status: RuleStatus,
}

/// Certification outcome for one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub d: u64,
    pub lambda2: f64,
    pub rule_results: Vec<RuleResult>,
    /// Largest κ′ lower bound among fired theorem-status rules (plus
    /// conjecture rules when opted in); at least 1 for a connected graph.
    pub best_bound: u64,
    /// Exact κ′ when requested.
    pub actual: Option<u64>,
}

/// Threshold of the 2-edge-connectivity rule for multigraphs:
/// (d − 1 + sqrt(9d² − 10d + 17)) / 4.
pub fn threshold_main1(d: u64) -> Result<f64> {
    if d < 3 {
        return Err(Error::TooSmall(format!("main1 needs d >= 3, got {d}")));
    }
    let df = d as f64;
    Ok((df - 1.0 + (9.0 * df * df - 10.0 * df + 17.0).sqrt()) / 4.0)
}

/// Threshold of the (t+1)-edge-connectivity rule for multigraphs:
/// d − t for even t, d − t + 1 for odd t. Requires t >= 2.
pub fn threshold_main2(d: u64, t: u64) -> Result<f64> {
    if t < 2 {
        return Err(Error::BadT(format!("main2 needs t >= 2, got {t}")));
    }
    let df = d as f64;
    let tf = t as f64;
    Ok(if t % 2 == 0 { df - tf } else { df - tf + 1.0 })
}

/// Threshold of the simple-graph 2-edge-connectivity rule for odd d:
/// the largest root of x³ − (d−3)x² − (3d−2)x − 2.
pub fn threshold_pi(d: u64) -> Result<f64> {
    if d % 2 == 0 {
        return Err(Error::BadParity(format!("pi(d) needs odd d, got {d}")));
    }
    if d < 3 {
        return Err(Error::TooSmall(format!("pi(d) needs d >= 3, got {d}")));
    }
    let df = d as f64;
    Ok(largest_real_root_cubic(
        -(df - 3.0),
        -(3.0 * df - 2.0),
        -2.0,
    ))
}

/// Threshold of the simple-graph 3-edge-connectivity rule:
/// (d − 3 + sqrt((d+3)² − 16)) / 2.
pub fn threshold_cioaba3(d: u64) -> Result<f64> {
    if d < 3 {
        return Err(Error::TooSmall(format!("cioaba_3 needs d >= 3, got {d}")));
    }
    let df = d as f64;
    Ok((df - 3.0 + ((df + 3.0) * (df + 3.0) - 16.0).sqrt()) / 2.0)
}

/// Threshold of the general simple-graph rule: d − 2t/(d+1), implying
/// κ′ >= t + 1.
pub fn threshold_cioaba_general(d: u64, t: u64) -> Result<f64> {
    if t < 1 {
        return Err(Error::BadT(format!("cioaba_general needs t >= 1, got {t}")));
    }
    if d < 3 {
        return Err(Error::TooSmall(format!(
            "cioaba_general needs d >= 3, got {d}"
        )));
    }
    let df = d as f64;
    Ok(df - 2.0 * t as f64 / (df + 1.0))
}

/// Conjectured simple-graph threshold for κ′ >= t + 1, t >= 3:
/// (d − 4 + sqrt((d+4)² − 8t)) / 2 for odd t,
/// (d − 3 + sqrt((d+3)² − 8t)) / 2 for even t.
pub fn threshold_rho(d: u64, t: u64) -> Result<f64> {
    if t < 3 {
        return Err(Error::BadT(format!("rho needs t >= 3, got {t}")));
    }
    let df = d as f64;
    let tf = t as f64;
    let (shift, base) = if t % 2 == 1 {
        (4.0, df + 4.0)
    } else {
        (3.0, df + 3.0)
    };
    let disc = base * base - 8.0 * tf;
    if disc < 0.0 {
        return Err(Error::NegativeDiscriminant(format!(
            "rho({d}, {t}) discriminant is {disc}"
        )));
    }
    Ok((df - shift + disc.sqrt()) / 2.0)
}

/// Simple-graph threshold implying κ′ = d: d − 1 − d/(n − d).
pub fn threshold_chandran(d: u64, n: usize) -> Result<f64> {
    if n as u64 <= d {
        return Err(Error::BadN(format!(
            "chandran needs n > d, got n = {n}, d = {d}"
        )));
    }
    let df = d as f64;
    Ok(df - 1.0 - df / (n as f64 - df))
}

/// The largest κ′ lower bound provable for a connected d-regular
/// multigraph with the given λ₂ from the two multigraph rules alone;
/// 1 when nothing fires.
pub fn best_multigraph_bound(d: u64, lambda2: f64) -> u64 {
    let mut best = 1u64;
    if d < 3 {
        return best;
    }
    if let Ok(t1) = threshold_main1(d) {
        if strictly_below(lambda2, t1) {
            best = best.max(2);
        }
    }
    for t in 2..=(d - 1) {
        let threshold = threshold_main2(d, t).expect("t >= 2");
        if strictly_below(lambda2, threshold) {
            best = best.max(t + 1);
        }
    }
    best
}

impl ThresholdCatalog {
    /// Instantiates every rule applicable to a connected d-regular graph
    /// on n vertices. `mu2` (algebraic connectivity) feeds the vertex
    /// connectivity rule, whose conclusion depends on the graph itself.
    ///
    /// Rules parametrized by t stop at t = d − 1: a d-regular graph has
    /// κ′ <= d, so larger t cannot hold, and the underlying results
    /// require both cut sides to have at least 2 vertices, which only a
    /// cut of size below d guarantees.
    pub fn assemble(d: u64, n: usize, simple: bool, complete: bool, mu2: f64) -> Self {
        let mut entries = Vec::new();
        if d >= 3 {
            entries.push(CatalogEntry {
                id: "main1".to_string(),
                threshold: threshold_main1(d).expect("d >= 3"),
                bound: 2,
                exact: false,
                simple_only: false,
                strict: true,
                status: RuleStatus::Theorem,
            });
            for t in 2..=(d - 1) {
                let parity = if t % 2 == 0 { "even" } else { "odd" };
                entries.push(CatalogEntry {
                    id: format!("main2_{parity}({t})"),
                    threshold: threshold_main2(d, t).expect("t >= 2"),
                    bound: t + 1,
                    exact: false,
                    simple_only: false,
                    strict: true,
                    status: RuleStatus::Theorem,
                });
            }
        }
        if simple {
            if !complete && n >= 2 {
                let ceil_mu2 = (mu2 - EPS).ceil();
                let bound = if ceil_mu2 > 0.0 { ceil_mu2 as u64 } else { 0 };
                entries.push(CatalogEntry {
                    id: "fiedler".to_string(),
                    threshold: d as f64 - 1.0,
                    bound,
                    exact: false,
                    simple_only: true,
                    strict: true,
                    status: RuleStatus::Theorem,
                });
            }
            if n as u64 > d {
                entries.push(CatalogEntry {
                    id: format!("chandran({n})"),
                    threshold: threshold_chandran(d, n).expect("n > d"),
                    bound: d,
                    exact: true,
                    simple_only: true,
                    strict: true,
                    status: RuleStatus::Theorem,
                });
            }
            if d >= 1 {
                entries.push(CatalogEntry {
                    id: "krivelevich_sudakov".to_string(),
                    threshold: d as f64 - 2.0,
                    bound: d,
                    exact: true,
                    simple_only: true,
                    strict: false,
                    status: RuleStatus::Theorem,
                });
            }
            if d >= 3 {
                if d % 2 == 1 {
                    entries.push(CatalogEntry {
                        id: "cioaba_cubic".to_string(),
                        threshold: threshold_pi(d).expect("odd d >= 3"),
                        bound: 2,
                        exact: false,
                        simple_only: true,
                        strict: true,
                        status: RuleStatus::Theorem,
                    });
                }
                entries.push(CatalogEntry {
                    id: "cioaba_3".to_string(),
                    threshold: threshold_cioaba3(d).expect("d >= 3"),
                    bound: 3,
                    exact: false,
                    simple_only: true,
                    strict: true,
                    status: RuleStatus::Theorem,
                });
                for t in 1..=(d - 1) {
                    entries.push(CatalogEntry {
                        id: format!("cioaba_general({t})"),
                        threshold: threshold_cioaba_general(d, t).expect("valid params"),
                        bound: t + 1,
                        exact: false,
                        simple_only: true,
                        strict: true,
                        status: RuleStatus::Theorem,
                    });
                }
                for t in 3..=(d - 1) {
                    if let Ok(threshold) = threshold_rho(d, t) {
                        entries.push(CatalogEntry {
                            id: format!("rho_conjecture({t})"),
                            threshold,
                            bound: t + 1,
                            exact: false,
                            simple_only: true,
                            strict: true,
                            status: RuleStatus::Conjecture,
                        });
                    }
                }
            }
        }
        ThresholdCatalog { entries }
    }

    /// Evaluates every rule at the given λ₂.
    pub fn evaluate(&self, lambda2: f64) -> Vec<RuleResult> {
        self.entries
            .iter()
            .map(|e| {
                let fired = if e.strict {
                    strictly_below(lambda2, e.threshold)
                } else {
                    lambda2 <= e.threshold + EPS
                };
                RuleResult {
                    id: e.id.clone(),
                    threshold: e.threshold,
                    fired,
                    implied_bound: e.bound,
                    exact: e.exact,
                    status: e.status,
                }
            })
            .collect()
    }
}

/// Certifies a connected regular multigraph: evaluates every applicable
/// rule at its λ₂ and reports the best bound from fired theorem rules.
/// With `compute_actual`, also computes the exact κ′.
pub fn certify(g: &Multigraph, compute_actual: bool) -> Result<Certificate> {
    certify_with(g, compute_actual, false)
}

/// Like [`certify`], optionally letting conjecture-status rules contribute
/// to the certified bound.
pub fn certify_with(
    g: &Multigraph,
    compute_actual: bool,
    use_conjecture: bool,
) -> Result<Certificate> {
    let profile = g.degree_profile();
    let d = profile.regular_degree.ok_or(Error::NotRegular)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() < 2 {
        return Err(Error::TooSmall(
            "certification needs at least 2 vertices".to_string(),
        ));
    }
    let spec = spectrum(g)?;
    let lambda2 = spec.lambda2().expect("n >= 2");
    let mu2 = spec.mu2().expect("n >= 2");
    let catalog = ThresholdCatalog::assemble(d, g.n(), g.is_simple(), g.is_complete(), mu2);
    let rule_results = catalog.evaluate(lambda2);
    let mut best_bound = 1u64;
    for r in &rule_results {
        if r.fired && (r.status == RuleStatus::Theorem || use_conjecture) {
            best_bound = best_bound.max(r.implied_bound);
        }
    }
    let actual = if compute_actual {
        Some(edge_connectivity(g)?.value)
    } else {
        None
    };
    Ok(Certificate {
        d,
        lambda2,
        rule_results,
        best_bound,
        actual,
    })
}

impl Certificate {
    /// True when the certified bound does not exceed the exact κ′; `None`
    /// when the exact value was not computed.
    pub fn soundness_ok(&self) -> Option<bool> {
        self.actual.map(|a| self.best_bound <= a)
    }

    /// Looks up one rule evaluation by id.
    pub fn rule(&self, id: &str) -> Option<&RuleResult> {
        self.rule_results.iter().find(|r| r.id == id)
    }

    /// Machine-readable lines: one per rule
    /// `<rule-id> <threshold> <fired:0|1> <implied-bound> <status>`,
    /// then `best <bound>` and optionally `actual <kappa'>`.
    pub fn render_machine(&self) -> String {
        let mut out = String::new();
        for r in &self.rule_results {
            out.push_str(&format!(
                "{} {} {} {} {}\n",
                r.id,
                sig12(r.threshold),
                u8::from(r.fired),
                r.implied_bound,
                r.status.as_str()
            ));
        }
        out.push_str(&format!("best {}\n", self.best_bound));
        if let Some(a) = self.actual {
            out.push_str(&format!("actual {a}\n"));
        }
        out
    }

    /// Human-readable table.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("d {}\n", self.d));
        out.push_str(&format!("lambda2 {}\n", sig12(self.lambda2)));
        out.push_str(&format!(
            "{:<24} {:>16} {:>6} {:>12} {:>10}\n",
            "rule", "threshold", "fired", "implies", "status"
        ));
        for r in &self.rule_results {
            let implies = if r.exact {
                format!("k' = {}", r.implied_bound)
            } else {
                format!("k' >= {}", r.implied_bound)
            };
            out.push_str(&format!(
                "{:<24} {:>16} {:>6} {:>12} {:>10}\n",
                r.id,
                sig12(r.threshold),
                if r.fired { "yes" } else { "no" },
                implies,
                r.status.as_str()
            ));
        }
        out.push_str(&format!(
            "best certified bound: k' >= {}\n",
            self.best_bound
        ));
        if let Some(a) = self.actual {
            out.push_str(&format!("actual k': {a}\n"));
        }
        out
    }
}
