//! `grigsum` — word-problem queries for the first Grigorchuk group, the
//! commuting order-8 generator family, reductions from 0/1 equation systems
//! to subset sum (over Z_k^∞ and over the group), and solvers for both.
//!
//! Machine-readable JSON goes to standard output, diagnostics to standard
//! error. Exit codes: 0 = decision true / success, 1 = decision false,
//! 2 = usage, parse, or cap error.

use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{ensure, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use grigsum::grigorchuk::{act_on, is_trivial, order, sections, ElementOrder, Vertex};
use grigsum::lift::{lemma_generators, phi, sigma, KElement};
use grigsum::sspg::{self, verify_witness, SspGrigInstance};
use grigsum::words::GrigWord;
use grigsum::zkinf::{ssp_brute, ssp_gf2, ssp_mitm, SspZkInstance};
use grigsum::zoe::{reduce_to_grig, reduce_to_zk, zoe_brute, ZoeInstance};
use grigsum_cli::{random_zoe, run_selftest, seeded, DEFAULT_SEED};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "grigsum",
    version,
    about = "Subset sum and the word problem in the first Grigorchuk group"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a word is trivial in the group.
    Wp { word: String },
    /// Order of the element, found by repeated squaring (orders are powers
    /// of two). Exits 1 when the order exceeds 2^cap.
    Order {
        word: String,
        #[arg(long, default_value_t = 20)]
        cap: u32,
    },
    /// First-level sections (w₀, w₁) of a level-1 stabilizer element.
    Sections { word: String },
    /// Apply a word to a vertex of the binary tree (a 0/1 string).
    Act { word: String, vertex: String },
    /// The branch substitution σ (a→aca, b→d, c→b, d→c, then reduce).
    Sigma { word: String },
    /// Apply the branch embedding φⱼ to a word in the base subgroup.
    Phi { j: u8, word: String },
    /// Emit n independent commuting order-8 generators, one "tuple word"
    /// line each.
    Gens { n: usize },
    /// 0/1 equation systems.
    Zoe {
        #[command(subcommand)]
        cmd: ZoeCmd,
    },
    /// Reduce a 0/1 system to subset sum over Z_k^∞ (k ≥ 3).
    ReduceZoe {
        #[arg(long)]
        k: u32,
        file: PathBuf,
    },
    /// Reduce a 0/1 system to subset sum over the group.
    ReduceGrig { file: PathBuf },
    /// Subset sum over Z_k^∞.
    SspZk {
        #[command(subcommand)]
        cmd: SspZkCmd,
    },
    /// Subset sum over the group.
    SspGrig {
        #[command(subcommand)]
        cmd: SspGrigCmd,
    },
    /// Replay the 0/1-system → subset-sum reduction on many instances and
    /// count mismatches (exit 1 if any).
    VerifyReduction {
        #[arg(long)]
        n: usize,
        /// Sweep all 2^(n²) systems (n ≤ 3) instead of sampling.
        #[arg(long, conflicts_with = "trials")]
        exhaustive: bool,
        /// Number of sampled systems (default 100).
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Run the seeded self-check suites.
    Selftest {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum ZoeCmd {
    /// Decide a 0/1 system by brute force; prints the least witness.
    Solve { file: PathBuf },
}

#[derive(Subcommand)]
enum SspZkCmd {
    /// Solve a subset-sum instance over Z_k^∞; prints the least witness.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ZkStrategy::Brute)]
        strategy: ZkStrategy,
    },
}

#[derive(Subcommand)]
enum SspGrigCmd {
    /// Solve a subset-sum instance over the group; prints the least witness
    /// and replays it.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = GrigStrategy::Dfs)]
        strategy: GrigStrategy,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ZkStrategy {
    /// Exhaustive search over subsets.
    Brute,
    /// Gaussian elimination; modulus 2 only, decision without witness.
    Gf2,
    /// Meet in the middle.
    Mitm,
}

#[derive(Clone, Copy, ValueEnum)]
enum GrigStrategy {
    /// Depth-first search with portrait memoization.
    Dfs,
    /// Meet in the middle over a portrait index.
    Mitm,
}

/// One-line JSON outputs, field order as documented.
#[derive(Serialize)]
struct WpOut {
    trivial: bool,
}

#[derive(Serialize)]
struct OrderOut {
    order: Option<u64>,
}

#[derive(Serialize)]
struct SectionsOut {
    left: String,
    right: String,
}

#[derive(Serialize)]
struct VertexOut {
    vertex: String,
}

#[derive(Serialize)]
struct WordOut {
    word: String,
}

#[derive(Serialize)]
struct ZoeSolveOut {
    positive: bool,
    x: Option<Vec<u8>>,
}

#[derive(Serialize)]
struct ZkSolveOut {
    positive: bool,
    epsilon: Option<Vec<u8>>,
}

#[derive(Serialize)]
struct GrigSolveOut {
    positive: bool,
    epsilon: Option<Vec<u8>>,
    verified: Option<bool>,
}

#[derive(Serialize)]
struct VerifyOut {
    n: usize,
    mode: &'static str,
    checked: u64,
    mismatches: u64,
}

#[derive(Serialize)]
struct SuiteOut {
    name: &'static str,
    cases: usize,
    failures: usize,
}

#[derive(Serialize)]
struct SelftestOut {
    seed: u64,
    suites: Vec<SuiteOut>,
    failures: usize,
}

fn emit<T: Serialize>(out: &T) {
    println!("{}", serde_json::to_string(out).expect("output serializes"));
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(2);
        }
    }
}

fn run(command: Command) -> Result<i32> {
    match command {
        Command::Wp { word } => {
            let trivial = is_trivial(&parse_word(&word)?);
            emit(&WpOut { trivial });
            Ok(if trivial { 0 } else { 1 })
        }
        Command::Order { word, cap } => {
            ensure!((1..=63).contains(&cap), "--cap must be between 1 and 63");
            match order(&parse_word(&word)?, cap) {
                ElementOrder::Finite(n) => {
                    emit(&OrderOut { order: Some(n) });
                    Ok(0)
                }
                ElementOrder::ExceedsCap => {
                    eprintln!("order exceeds 2^{cap}");
                    emit(&OrderOut { order: None });
                    Ok(1)
                }
            }
        }
        Command::Sections { word } => {
            let (s0, s1) = sections(&parse_word(&word)?)?;
            emit(&SectionsOut { left: s0.to_string(), right: s1.to_string() });
            Ok(0)
        }
        Command::Act { word, vertex } => {
            let v: Vertex = vertex.parse::<Vertex>()?;
            let image = act_on(&parse_word(&word)?, &v);
            emit(&VertexOut { vertex: image.to_string() });
            Ok(0)
        }
        Command::Sigma { word } => {
            emit(&WordOut { word: sigma(&parse_word(&word)?).to_string() });
            Ok(0)
        }
        Command::Phi { j, word } => {
            let x = KElement::from_word(parse_word(&word)?)?;
            let image = phi(j, &x)?;
            emit(&WordOut { word: image.word().to_string() });
            Ok(0)
        }
        Command::Gens { n } => {
            ensure!(
                (1..=256).contains(&n),
                "n must be between 1 and 256 (word lengths double per level)"
            );
            let stdout = std::io::stdout().lock();
            let mut out = std::io::BufWriter::new(stdout);
            for x in lemma_generators(n) {
                let tuple: String = x.tuple().iter().map(|b| char::from(b'0' + b)).collect();
                writeln!(out, "{tuple} {}", x.word())?;
            }
            out.flush()?;
            Ok(0)
        }
        Command::Zoe { cmd: ZoeCmd::Solve { file } } => {
            let inst = ZoeInstance::from_json(&read(&file)?)?;
            let x = zoe_brute(&inst)?;
            let positive = x.is_some();
            emit(&ZoeSolveOut { positive, x });
            Ok(if positive { 0 } else { 1 })
        }
        Command::ReduceZoe { k, file } => {
            let inst = ZoeInstance::from_json(&read(&file)?)?;
            println!("{}", reduce_to_zk(&inst, k)?.to_json());
            Ok(0)
        }
        Command::ReduceGrig { file } => {
            let inst = ZoeInstance::from_json(&read(&file)?)?;
            println!("{}", reduce_to_grig(&inst)?.to_json());
            Ok(0)
        }
        Command::SspZk { cmd: SspZkCmd::Solve { file, strategy } } => {
            let inst = SspZkInstance::from_json(&read(&file)?)?;
            let (positive, eps) = match strategy {
                ZkStrategy::Brute => {
                    let eps = ssp_brute(&inst)?;
                    (eps.is_some(), eps)
                }
                ZkStrategy::Mitm => {
                    let eps = ssp_mitm(&inst)?;
                    (eps.is_some(), eps)
                }
                // Decision procedure only: no witness to report.
                ZkStrategy::Gf2 => (ssp_gf2(&inst)?, None),
            };
            emit(&ZkSolveOut { positive, epsilon: eps });
            Ok(if positive { 0 } else { 1 })
        }
        Command::SspGrig { cmd: SspGrigCmd::Solve { file, strategy } } => {
            let inst = SspGrigInstance::from_json(&read(&file)?)?;
            let strategy = match strategy {
                GrigStrategy::Dfs => sspg::Strategy::Dfs,
                GrigStrategy::Mitm => sspg::Strategy::Mitm,
            };
            let eps = sspg::solve(&inst, strategy)?;
            let positive = eps.is_some();
            let verified = match &eps {
                Some(eps) => Some(verify_witness(&inst, eps)?),
                None => None,
            };
            emit(&GrigSolveOut { positive, epsilon: eps, verified });
            Ok(if positive { 0 } else { 1 })
        }
        Command::VerifyReduction { n, exhaustive, trials, seed } => {
            verify_reduction(n, exhaustive, trials, seed)
        }
        Command::Selftest { seed } => {
            let reports = run_selftest(seed);
            let mut failures = 0;
            for r in &reports {
                failures += r.failures;
                eprintln!("suite {}: {} cases, {} failures", r.name, r.cases, r.failures);
            }
            let suites: Vec<SuiteOut> = reports
                .iter()
                .map(|r| SuiteOut { name: r.name, cases: r.cases, failures: r.failures })
                .collect();
            emit(&SelftestOut { seed, suites, failures });
            Ok(if failures == 0 { 0 } else { 1 })
        }
    }
}

fn parse_word(s: &str) -> Result<GrigWord> {
    Ok(s.parse::<GrigWord>()?)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// Replays the reduction to Z_k^∞ for k ∈ {3, 8} on a set of systems:
/// solvability must transfer exactly, and every subset-sum witness must
/// decode (first n selectors) to a solution of the original system.
fn verify_reduction(n: usize, exhaustive: bool, trials: Option<u64>, seed: u64) -> Result<i32> {
    ensure!(n >= 1, "--n must be at least 1");
    let mut instances: Vec<ZoeInstance> = Vec::new();
    if exhaustive {
        ensure!(
            n <= 3,
            "--exhaustive sweeps 2^(n*n) systems; that is only affordable for n <= 3"
        );
        for mask in 0u64..(1 << (n * n)) {
            let bits: Vec<u8> = (0..n * n).map(|i| (mask >> i & 1) as u8).collect();
            instances.push(
                ZoeInstance::new(bits.chunks(n).map(<[u8]>::to_vec).collect())
                    .expect("0/1 square matrices are always valid"),
            );
        }
    } else {
        ensure!(
            n <= 4,
            "sampled verification brute-forces n*n generators; that is only affordable for n <= 4"
        );
        let mut rng = seeded(seed);
        let trials = trials.unwrap_or(100);
        instances.extend((0..trials).map(|_| random_zoe(&mut rng, n)));
    }

    let mut checked = 0u64;
    let mut mismatches = 0u64;
    for inst in &instances {
        let zoe_positive = zoe_brute(inst)?.is_some();
        for k in [3u32, 8] {
            let reduced = reduce_to_zk(inst, k)?;
            let eps = ssp_brute(&reduced)?;
            checked += 1;
            let ok = match eps {
                Some(eps) => zoe_positive && zoe_witness_ok(inst, &eps[..n]),
                None => !zoe_positive,
            };
            if !ok {
                mismatches += 1;
                eprintln!("mismatch at k = {k}: {}", inst.to_json());
            }
        }
    }
    emit(&VerifyOut {
        n,
        mode: if exhaustive { "exhaustive" } else { "trials" },
        checked,
        mismatches,
    });
    Ok(if mismatches == 0 { 0 } else { 1 })
}

/// Do the selected rows sum to (1, …, 1)?
fn zoe_witness_ok(inst: &ZoeInstance, x: &[u8]) -> bool {
    (0..inst.n()).all(|j| {
        let s: u32 = inst
            .rows()
            .iter()
            .zip(x)
            .map(|(row, &xi)| u32::from(row[j]) * u32::from(xi))
            .sum();
        s == 1
    })
}
