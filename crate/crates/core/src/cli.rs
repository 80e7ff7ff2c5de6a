//! Command-line front end: generation, spectra, cuts, certification,
//! quotients, and exhaustive verification.
//!
//! Exit codes: 0 on success, 1 on usage errors, 2 on domain errors
//! (e.g. bad parity), 3 when a verification run reports violations.
//! Results go to standard output, diagnostics to standard error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::certify::certify_with;
use crate::constructions::{build_b1, build_h1, build_ht};
use crate::cuts::{brute_force_min_cut, edge_connectivity};
use crate::enumerate::{
    verify_case3, verify_observation_2_1, verify_smallest_claims, verify_theorem_1_4,
    verify_theorem_1_5, EnumSpec, VerificationReport,
};
use crate::fmt::sig12;
use crate::multigraph::Multigraph;
use crate::partition::{
    check_interlacing, is_equitable, quotient_eigs, quotient_matrix, Partition,
};
use crate::spectral::spectrum;
use crate::Result;

#[derive(Parser)]
#[command(
    name = "eigencut",
    version,
    about = "Spectra, cuts, and eigenvalue-based edge-connectivity certificates for regular multigraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Two 3-vertex blocks joined by a single bridge (odd d)
    H1,
    /// Two 2-vertex blocks joined by t/2 + t/2 crossing edges (even t < d-1)
    Ht,
    /// The 3-vertex block with degrees d, d, d-1 (odd d)
    B1,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a built-in family member and print or save it
    Gen {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        t: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print adjacency and Laplacian eigenvalues of a graph file
    Spectrum { file: PathBuf },
    /// Compute the exact edge-connectivity and one minimum-cut witness
    Cut {
        file: PathBuf,
        /// Use the subset-enumeration oracle instead of the contraction
        /// algorithm
        #[arg(long)]
        brute: bool,
    },
    /// Evaluate every applicable spectral threshold rule
    Certify {
        file: PathBuf,
        /// Also compute the exact edge-connectivity
        #[arg(long)]
        actual: bool,
        /// Let conjecture-status rules contribute to the certified bound
        #[arg(long)]
        with_conjecture: bool,
        /// Line-oriented machine-readable output
        #[arg(long)]
        machine: bool,
    },
    /// Quotient matrix of a vertex partition, its eigenvalues, and checks
    Quotient {
        file: PathBuf,
        /// Blocks separated by '|', vertices by ',', e.g. 0,1,2|3|4,5
        #[arg(long)]
        partition: String,
    },
    /// Run the exhaustive verification harnesses
    Verify {
        #[arg(long)]
        d: u64,
        #[arg(long = "max-n")]
        max_n: usize,
        /// Comma-separated subset of: 1.4, 1.5, obs2.1, smallest, case3
        #[arg(long, value_delimiter = ',')]
        theorems: Option<Vec<String>>,
        /// Line-oriented machine-readable output
        #[arg(long)]
        machine: bool,
    },
}

/// Parses `argv` (including the program name) and runs one subcommand.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    1
                }
            };
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn read_graph(path: &PathBuf, err: &mut dyn Write) -> std::result::Result<Multigraph, i32> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
            return Err(2);
        }
    };
    match Multigraph::parse(&text) {
        Ok(g) => Ok(g),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            Err(2)
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Gen {
            family,
            d,
            t,
            out: out_path,
        } => {
            let graph = match family {
                Family::H1 => build_h1(d)?,
                Family::B1 => build_b1(d)?,
                Family::Ht => match t {
                    Some(t) => build_ht(d, t)?,
                    None => {
                        let _ = writeln!(err, "error: `gen ht` requires --t <int>");
                        return Ok(1);
                    }
                },
            };
            let text = graph.serialize();
            match out_path {
                Some(path) => {
                    if let Err(e) = fs::write(&path, &text) {
                        let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                        return Ok(2);
                    }
                }
                None => {
                    let _ = write!(out, "{text}");
                }
            }
            Ok(0)
        }
        Command::Spectrum { file } => {
            let g = match read_graph(&file, err) {
                Ok(g) => g,
                Err(code) => return Ok(code),
            };
            let s = spectrum(&g)?;
            let _ = writeln!(out, "n {}", g.n());
            let adjacency: Vec<String> = s
                .adjacency_eigs()
                .values()
                .iter()
                .map(|&v| sig12(v))
                .collect();
            let _ = writeln!(out, "adjacency {}", adjacency.join(" "));
            let laplacian: Vec<String> = s.laplacian_eigs().iter().map(|&v| sig12(v)).collect();
            let _ = writeln!(out, "laplacian {}", laplacian.join(" "));
            if let (Some(l2), Some(m2)) = (s.lambda2(), s.mu2()) {
                let _ = writeln!(out, "lambda2 {}", sig12(l2));
                let _ = writeln!(out, "mu2 {}", sig12(m2));
            }
            Ok(0)
        }
        Command::Cut { file, brute } => {
            let g = match read_graph(&file, err) {
                Ok(g) => g,
                Err(code) => return Ok(code),
            };
            let result = if brute {
                brute_force_min_cut(&g)?
            } else {
                edge_connectivity(&g)?
            };
            let _ = writeln!(out, "value {}", result.value);
            let _ = writeln!(out, "a {}", result.witness.a);
            let _ = writeln!(out, "b {}", result.witness.b);
            let side: Vec<String> = result.witness.side.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "side {}", side.join(" "));
            Ok(0)
        }
        Command::Certify {
            file,
            actual,
            with_conjecture,
            machine,
        } => {
            let g = match read_graph(&file, err) {
                Ok(g) => g,
                Err(code) => return Ok(code),
            };
            let cert = certify_with(&g, actual, with_conjecture)?;
            if machine {
                let _ = write!(out, "{}", cert.render_machine());
            } else {
                let _ = write!(out, "{}", cert.render_table());
            }
            Ok(0)
        }
        Command::Quotient { file, partition } => {
            let g = match read_graph(&file, err) {
                Ok(g) => g,
                Err(code) => return Ok(code),
            };
            let p = Partition::parse(&partition, g.n())?;
            let q = quotient_matrix(&g, &p)?;
            let blocks: Vec<String> = p
                .blocks()
                .iter()
                .map(|b| {
                    b.iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .collect();
            let _ = writeln!(out, "blocks {}", blocks.join("|"));
            let sizes: Vec<String> = q.block_sizes().iter().map(|s| s.to_string()).collect();
            let _ = writeln!(out, "sizes {}", sizes.join(" "));
            for i in 0..q.order() {
                let row: Vec<String> = (0..q.order()).map(|j| sig12(q.get(i, j))).collect();
                let _ = writeln!(out, "row {}", row.join(" "));
            }
            let eigs = quotient_eigs(&q);
            let eig_strs: Vec<String> = eigs.values().iter().map(|&v| sig12(v)).collect();
            let _ = writeln!(out, "eigs {}", eig_strs.join(" "));
            let _ = writeln!(out, "equitable {}", u8::from(is_equitable(&g, &p)?));
            let s = spectrum(&g)?;
            let _ = writeln!(
                out,
                "interlacing {}",
                u8::from(check_interlacing(s.adjacency_eigs(), &eigs))
            );
            Ok(0)
        }
        Command::Verify {
            d,
            max_n,
            theorems,
            machine,
        } => {
            let spec = EnumSpec::new(d, max_n, true)?;
            let explicit = theorems.is_some();
            let selected = theorems.unwrap_or_else(|| {
                ["1.4", "1.5", "obs2.1", "smallest", "case3"]
                    .iter()
                    .map(|s| s.to_string())
                    .collect()
            });
            let mut reports: Vec<VerificationReport> = Vec::new();
            for name in &selected {
                let report = match name.as_str() {
                    "1.4" => Some(verify_theorem_1_4(&spec)?),
                    "1.5" => {
                        if d >= 3 {
                            Some(verify_theorem_1_5(&spec, d - 1)?)
                        } else if explicit {
                            return Err(crate::Error::TooSmall(format!(
                                "the rule needs d >= 3, got {d}"
                            )));
                        } else {
                            None
                        }
                    }
                    "obs2.1" => {
                        if (d % 2 == 1 && d >= 3) || explicit {
                            Some(verify_observation_2_1(d)?)
                        } else {
                            None
                        }
                    }
                    "smallest" => Some(verify_smallest_claims(d)?),
                    "case3" => {
                        if (d % 2 == 1 && d >= 3) || explicit {
                            Some(verify_case3(d)?)
                        } else {
                            None
                        }
                    }
                    other => {
                        let _ = writeln!(
                            err,
                            "error: unknown theorem `{other}` (expected 1.4, 1.5, obs2.1, smallest, case3)"
                        );
                        return Ok(1);
                    }
                };
                if let Some(report) = report {
                    if machine {
                        let _ = write!(out, "{}", report.render_machine());
                    } else {
                        let _ = write!(out, "{}", report.render_text());
                    }
                    let _ = writeln!(err, "elapsed: {:?}", report.elapsed);
                    reports.push(report);
                }
            }
            let violations: u64 = reports.iter().map(|r| r.total_violations()).sum();
            Ok(if violations > 0 { 3 } else { 0 })
        }
    }
}
