//! `troplift` command-line front end.
//!
//! Exit codes: 0 success, 1 negative verdict (member, verify, lift with no
//! lift, verify-suite disagreement), 2 input error, 3 size limit.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use troplift::config::{Config, OutputFormat, Overrides};
use troplift::fixtures::{fixture, FIXTURE_NAMES};
use troplift::lifts::{lift, verify_lift, LiftCertificate};
use troplift::membership::{member, FieldMode, Variety};
use troplift::newton::{polytope_edges, polytope_vertices, sym_det_monomials, table2_rows};
use troplift::oracle::verify_suite;
use troplift::trees::tree_from_rank2;
use troplift::tropical::det::{sym_trop_det_bounded, trop_det_bounded};
use troplift::tropical::rank::{sym_trop_rank_bounded, trop_rank_bounded};
use troplift::tropical::{barvinok_rank2, sym_barvinok_rank2, TropMatrix};
use troplift::Error;

#[derive(Parser)]
#[command(name = "troplift", version, about = "Tropical rank, membership and lift certificates")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Input JSON file; stdin when absent or `-`.
    #[arg(long = "in", global = true, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Output file; stdout when absent.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Truncation order for Puiseux series, a rational such as `40` or `7/2`.
    #[arg(long, global = true)]
    trunc: Option<String>,
    /// json, dot (trees only) or text.
    #[arg(long, global = true)]
    format: Option<String>,
    /// Largest matrix size for permutation enumeration.
    #[arg(long, global = true)]
    enum_bound: Option<usize>,
    /// Accept an enumeration bound above the safe maximum.
    #[arg(long, global = true)]
    allow_large_bound: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Tropical determinant with its minimizing monomial classes.
    TropDet {
        /// Group permutations into symmetric monomial classes.
        #[arg(long)]
        symmetric: bool,
    },
    /// Tropical rank, symmetric tropical rank and Barvinok rank 2 tests.
    Rank,
    /// Bicolored tree of a matrix of tropical rank at most 2.
    Tree,
    /// Tropicalization membership verdict.
    Member {
        #[arg(long)]
        variety: Variety,
        #[arg(long)]
        mode: FieldMode,
    },
    /// Lift certificate for a member matrix.
    Lift {
        #[arg(long)]
        variety: Variety,
        #[arg(long)]
        mode: FieldMode,
    },
    /// Re-verify a lift certificate.
    Verify,
    /// Newton polytope of the symmetric determinant.
    Polytope {
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Print the five monomial rows for n = 4 instead.
        #[arg(long)]
        table2: bool,
    },
    /// Cross-check fast paths against the brute-force oracles.
    VerifySuite {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
    /// Write a named example input as JSON; lists the names when none given.
    Fixtures {
        name: Option<String>,
        /// Write every fixture as `<name>.json` into this directory.
        #[arg(long, value_name = "DIR", conflicts_with = "name")]
        all: Option<PathBuf>,
    },
}

enum Failure {
    Input(String),
    Size(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SizeLimit { .. } => Failure::Size(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Errors that mean "this matrix has no such lift" rather than bad input.
fn is_negative(e: &Error) -> bool {
    matches!(
        e,
        Error::RankTooHigh(_)
            | Error::NotBarvinok2
            | Error::NotCaterpillar
            | Error::NotRank2
            | Error::SameSigns
            | Error::NoTie
            | Error::MinorSignsOpposed
            | Error::NotOnEdge
    )
}

struct Output {
    text: String,
    success: bool,
}

impl Output {
    fn json(v: &impl Serialize, success: bool) -> Result<Output, Failure> {
        let text = serde_json::to_string_pretty(v).map_err(|e| Failure::Input(e.to_string()))?;
        Ok(Output { text: text + "\n", success })
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => Ok(fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn read_matrix(g: &Global) -> Result<TropMatrix, Failure> {
    serde_json::from_str(&read_input(&g.input)?).map_err(|e| Failure::Input(format!("matrix JSON: {e}")))
}

fn check_size(a: &TropMatrix, bound: usize) -> Result<(), Failure> {
    let size = a.rows().max(a.cols());
    if size > bound {
        return Err(Error::SizeLimit { size, bound }.into());
    }
    Ok(())
}

#[derive(Serialize)]
struct RankReport {
    tropical_rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    symmetric_tropical_rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    barvinok_rank_at_most_2: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    symmetric_barvinok_rank_at_most_2: Option<bool>,
}

#[derive(Serialize)]
struct VerifyReport {
    valid: bool,
    checks: Vec<troplift::lifts::Check>,
}

fn run(cli: &Cli, config: &Config) -> Result<Output, Failure> {
    let g = &cli.global;
    let bound = config.enumeration_bound;
    let text = config.output_format == OutputFormat::Text;
    if config.output_format == OutputFormat::Dot && !matches!(cli.command, Command::Tree) {
        return Err(Failure::Input("dot output is only available for `tree`".into()));
    }
    match &cli.command {
        Command::TropDet { symmetric } => {
            let a = read_matrix(g)?;
            let r = if *symmetric { sym_trop_det_bounded(&a, bound)? } else { trop_det_bounded(&a, bound)? };
            if text {
                return Ok(Output { text: format!("{} ({} minimizing classes)\n", r.min_value, r.argmin.len()), success: true });
            }
            Output::json(&r, true)
        }
        Command::Rank => {
            let a = read_matrix(g)?;
            let tropical_rank = trop_rank_bounded(&a, bound)?;
            let symmetric = a.is_square() && a.is_symmetric_valued();
            let symmetric_tropical_rank = if symmetric { Some(sym_trop_rank_bounded(&a, bound)?) } else { None };
            let barvinok_rank_at_most_2 = if tropical_rank <= 2 { Some(barvinok_rank2(&a)?.barvinok2) } else { None };
            let symmetric_barvinok_rank_at_most_2 = match symmetric_tropical_rank {
                Some(r) if r <= 2 => Some(sym_barvinok_rank2(&a)?.sym_barvinok2),
                _ => None,
            };
            let r = RankReport { tropical_rank, symmetric_tropical_rank, barvinok_rank_at_most_2, symmetric_barvinok_rank_at_most_2 };
            if text {
                return Ok(Output { text: format!("{}\n", r.tropical_rank), success: true });
            }
            Output::json(&r, true)
        }
        Command::Tree => {
            let a = read_matrix(g)?;
            let t = tree_from_rank2(&a)?;
            match config.output_format {
                OutputFormat::Dot => Ok(Output { text: t.to_dot(), success: true }),
                _ => Output::json(&t.to_json(), true),
            }
        }
        Command::Member { variety, mode } => {
            let a = read_matrix(g)?;
            check_size(&a, bound)?;
            let v = member(*variety, &a, *mode)?;
            if text {
                return Ok(Output { text: format!("{} ({:?})\n", v.verdict, v.reason.kind), success: v.verdict });
            }
            Output::json(&v, v.verdict)
        }
        Command::Lift { variety, mode } => {
            let a = read_matrix(g)?;
            check_size(&a, bound)?;
            match lift(*variety, &a, *mode, config.seed, config.truncation_order.clone()) {
                Ok(cert) => Output::json(&cert, cert.valid),
                Err(e) if is_negative(&e) => {
                    Output::json(&serde_json::json!({ "lifted": false, "reason": format!("{e:?}"), "detail": e.to_string() }), false)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Verify => {
            let cert: LiftCertificate =
                serde_json::from_str(&read_input(&g.input)?).map_err(|e| Failure::Input(format!("certificate JSON: {e}")))?;
            let checks = verify_lift(&cert);
            let valid = checks.iter().all(|c| c.passed);
            if text {
                let lines: Vec<String> = checks.iter().map(|c| format!("{} {}: {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail)).collect();
                return Ok(Output { text: lines.join("\n") + "\n", success: valid });
            }
            Output::json(&VerifyReport { valid, checks }, valid)
        }
        Command::Polytope { n, table2 } => {
            if *table2 {
                return Output::json(&table2_rows(), true);
            }
            if *n > bound {
                return Err(Error::SizeLimit { size: *n, bound }.into());
            }
            let v = serde_json::json!({
                "n": n,
                "classes": sym_det_monomials(*n)?,
                "vertices": polytope_vertices(*n)?,
                "edges": polytope_edges(*n)?,
            });
            Output::json(&v, true)
        }
        Command::VerifySuite { max_n } => {
            if *max_n > bound {
                return Err(Error::SizeLimit { size: *max_n, bound }.into());
            }
            let r = verify_suite(config.seed, *max_n)?;
            let ok = r.disagreements == 0;
            Output::json(&r, ok)
        }
        Command::Fixtures { name, all } => {
            if let Some(dir) = all {
                fs::create_dir_all(dir)?;
                for n in FIXTURE_NAMES {
                    let body = serde_json::to_string_pretty(&fixture(n)?).map_err(|e| Failure::Input(e.to_string()))?;
                    fs::write(dir.join(format!("{n}.json")), body + "\n")?;
                }
                return Ok(Output { text: String::new(), success: true });
            }
            match name {
                Some(n) => Output::json(&fixture(n)?, true),
                None => Ok(Output { text: FIXTURE_NAMES.join("\n") + "\n", success: true }),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = &cli.global;
    let flags = Overrides {
        truncation_order: g.trunc.clone(),
        enumeration_bound: g.enum_bound,
        seed: g.seed,
        output_format: g.format.clone(),
        allow_large_bound: g.allow_large_bound,
    };
    let result = Config::from_env(&flags).map_err(Failure::from).and_then(|c| run(&cli, &c));
    let out = match result {
        Ok(out) => out,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Size(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(3);
        }
    };
    let written = match &g.out {
        Some(p) => fs::write(p, &out.text),
        None => io::stdout().write_all(out.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(if out.success { 0 } else { 1 })
}
