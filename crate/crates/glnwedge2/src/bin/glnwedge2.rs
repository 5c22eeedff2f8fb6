//! Thin command-line front end over the library. Each subcommand maps to one
//! library entry point; see the crate examples for richer programmatic use.

use clap::{Args, Parser, Subcommand};
use glnwedge2::cache::CharDiskCache;
use glnwedge2::error::Error;
use glnwedge2::gram::GramOracle;
use glnwedge2::hyperalgebra::Budget;
use glnwedge2::tensor::tensor_multiplicity;
use glnwedge2::verify::{run_verify, SweepParams, VerifyReport};
use glnwedge2::weights::{cont, is_dominant, linked, removable_indices, removable_pairs, Weight};
use glnwedge2::{multiplicity_main, MultiplicityReport};
use serde::Serialize;
use std::process::ExitCode;

const CACHE_ENV: &str = "GLNWEDGE2_CACHE_DIR";

#[derive(Parser)]
#[command(
    name = "glnwedge2",
    version,
    about = "Composition multiplicities for GL(n) tensor wedge-square products in odd characteristic"
)]
struct Cli {
    /// Emit machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Disable the on-disk character cache.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Character cache directory (default: $GLNWEDGE2_CACHE_DIR if set).
    #[arg(long, global = true)]
    cache_dir: Option<String>,
    /// Maximum Gram matrix dimension before aborting.
    #[arg(long, global = true, default_value_t = 2000)]
    budget: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct WeightArg {
    /// Weight as comma-separated signed integers, e.g. 2,1,0.
    #[arg(long, value_parser = parse_weight)]
    lambda: Weight,
}

#[derive(Subcommand)]
enum Command {
    /// dim L_n(lambda)_mu: the mod-p rank of the Gram matrix.
    Dim {
        #[command(flatten)]
        lambda: WeightArg,
        #[arg(long, value_parser = parse_weight)]
        mu: Weight,
        #[arg(long, value_parser = parse_odd_prime)]
        p: u64,
    },
    /// The full character of the simple module L_n(lambda) mod p.
    Char {
        #[command(flatten)]
        lambda: WeightArg,
        #[arg(long, value_parser = parse_odd_prime)]
        p: u64,
    },
    /// The rank-formula multiplicity report for (lambda, i, p).
    Mult {
        #[command(flatten)]
        lambda: WeightArg,
        #[arg(long)]
        i: usize,
        #[arg(long, value_parser = parse_odd_prime)]
        p: u64,
    },
    /// Sweep the rank formulas against the brute-force oracles.
    Verify {
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long, default_value_t = 6)]
        deg_max: i64,
        /// Comma-separated odd primes.
        #[arg(long, value_parser = parse_primes, default_value = "3,5,7")]
        primes: std::vec::Vec<u64>,
        /// Also write the full JSON report to this path.
        #[arg(long)]
        out: Option<String>,
    },
    /// Residue contents and the linkage test for two dominant weights.
    Linkage {
        #[command(flatten)]
        lambda: WeightArg,
        #[arg(long, value_parser = parse_weight)]
        mu: Weight,
        #[arg(long, value_parser = parse_odd_prime)]
        p: u64,
    },
    /// Removable indices and removable pairs of a dominant weight.
    Removable {
        #[command(flatten)]
        lambda: WeightArg,
    },
    /// Character-oracle composition multiplicity of L(mu) in
    /// L(lambda) tensor wedge^2 V*.
    OracleMult {
        #[command(flatten)]
        lambda: WeightArg,
        #[arg(long, value_parser = parse_weight)]
        mu: Weight,
        #[arg(long, value_parser = parse_odd_prime)]
        p: u64,
    },
}

fn parse_weight(s: &str) -> Result<Weight, String> {
    let entries: Result<Vec<i64>, _> = s.split(',').map(|t| t.trim().parse::<i64>()).collect();
    match entries {
        Ok(v) if !v.is_empty() => Ok(Weight::new(v)),
        Ok(_) => Err("weight must have at least one entry".into()),
        Err(e) => Err(format!("malformed weight tuple {s:?}: {e}")),
    }
}

fn parse_odd_prime(s: &str) -> Result<u64, String> {
    let p: u64 = s.parse().map_err(|e| format!("{e}"))?;
    if glnwedge2::weights::is_odd_prime(p) {
        Ok(p)
    } else {
        Err(format!("{p} is not an odd prime"))
    }
}

fn parse_primes(s: &str) -> Result<Vec<u64>, String> {
    s.split(',').map(|t| parse_odd_prime(t.trim())).collect()
}

fn exit_code_for(err: &Error) -> ExitCode {
    match err {
        Error::BudgetExceeded { .. } => ExitCode::from(3),
        _ => ExitCode::from(2),
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).unwrap());
}

fn oracle_for(cli: &Cli) -> GramOracle {
    let budget = Budget {
        max_matrix_dim: cli.budget,
        ..Budget::default()
    };
    let dir = if cli.no_cache {
        None
    } else {
        cli.cache_dir
            .clone()
            .or_else(|| std::env::var(CACHE_ENV).ok())
    };
    match dir {
        Some(d) => GramOracle::with_disk_cache(budget, CharDiskCache::new(d)),
        None => GramOracle::new(budget),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn run(cli: &Cli) -> glnwedge2::Result<ExitCode> {
    match &cli.command {
        Command::Dim { lambda, mu, p } => {
            let oracle = oracle_for(cli);
            let d = oracle.dim_simple_weight_space(&lambda.lambda, mu, *p)?;
            if cli.json {
                print_json(&serde_json::json!({
                    "lambda": lambda.lambda,
                    "mu": mu,
                    "p": p,
                    "dim": d,
                }));
            } else {
                println!("{d}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Char { lambda, p } => {
            let oracle = oracle_for(cli);
            let ch = oracle.simple_character(&lambda.lambda, *p)?;
            if cli.json {
                let entries: Vec<_> = ch
                    .mults()
                    .iter()
                    .map(|(w, m)| serde_json::json!({"weight": w, "mult": m}))
                    .collect();
                print_json(&serde_json::json!({
                    "lambda": lambda.lambda,
                    "p": p,
                    "dim": ch.dim(),
                    "weights": entries,
                }));
            } else {
                println!(
                    "character of L{} mod {} (dim {})",
                    lambda.lambda,
                    p,
                    ch.dim()
                );
                for (w, m) in ch.mults() {
                    println!("  {w} : {m}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Mult { lambda, i, p } => {
            let report = multiplicity_main(&lambda.lambda, *i, *p)?;
            if cli.json {
                print_json(&report);
            } else {
                print_mult_report(&report);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            n_max,
            deg_max,
            primes,
            out,
        } => {
            let oracle = oracle_for(cli);
            let params = SweepParams {
                n_max: *n_max,
                deg_max: *deg_max,
                primes: primes.clone(),
            };
            let report = run_verify(&params, &oracle)?;
            if let Some(path) = out {
                std::fs::write(path, serde_json::to_string_pretty(&report).unwrap())
                    .unwrap_or_else(|e| eprintln!("warning: could not write {path}: {e}"));
            }
            if cli.json {
                print_json(&report);
            } else {
                print_verify_report(&report);
            }
            Ok(if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Linkage { lambda, mu, p } => {
            let lam = &lambda.lambda;
            let result = linked(lam, mu, *p)?;
            if cli.json {
                print_json(&serde_json::json!({
                    "lambda": lam,
                    "mu": mu,
                    "p": p,
                    "cont_lambda": cont(lam, *p)?.residue_contents,
                    "cont_mu": cont(mu, *p)?.residue_contents,
                    "linked": result,
                }));
            } else {
                println!("cont{} = {:?}", lam, cont(lam, *p)?.residue_contents);
                println!("cont{} = {:?}", mu, cont(mu, *p)?.residue_contents);
                println!("linked: {result}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Removable { lambda } => {
            let lam = &lambda.lambda;
            let idx = removable_indices(lam)?;
            let pairs = removable_pairs(lam)?;
            if cli.json {
                print_json(&serde_json::json!({
                    "lambda": lam,
                    "removable_indices": idx,
                    "removable_pairs": pairs,
                }));
            } else {
                println!("removable indices of {lam}: {idx:?}");
                println!("removable pairs: {pairs:?}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::OracleMult { lambda, mu, p } => {
            let lam = &lambda.lambda;
            if !is_dominant(mu) {
                return Err(Error::NotDominant(mu.clone()));
            }
            let oracle = oracle_for(cli);
            let m = tensor_multiplicity(&oracle, lam, mu, *p)?;
            if cli.json {
                print_json(&serde_json::json!({
                    "lambda": lam,
                    "mu": mu,
                    "p": p,
                    "multiplicity": m,
                }));
            } else {
                println!("{m}");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_mult_report(r: &MultiplicityReport) {
    println!(
        "lambda = {}, p = {}, s = {}, i = {}",
        r.lambda, r.p, r.s, r.i
    );
    if r.x.is_empty() {
        println!("x ranks: (none needed)");
    } else {
        let xs: Vec<String> =
            r.x.iter()
                .map(|e| format!("x_{{{},{}}} = {}", e.i, e.j, e.rank))
                .collect();
        println!("x ranks: {}", xs.join(", "));
    }
    println!("m_s^i = {}, w_s^i = {}", r.m, r.w);
    let ts: Vec<String> =
        r.t.iter()
            .map(|(q, v)| format!("t_{}^{} = {}", r.s, q, v))
            .collect();
    println!("t values: {}", ts.join(", "));
    println!("hypotheses:");
    let h = &r.hypotheses;
    for (name, ok) in [
        ("p > 2", h.p_odd),
        ("s < n-1", h.s_lt_n_minus_1),
        ("lambda_s = 1 or s < n-2", h.lambda_s_one_or_s_lt_n_minus_2),
        ("s - lambda_s != n (mod p)", h.s_minus_lambda_s_not_n_mod_p),
        ("i - lambda_i != n (mod p)", h.i_minus_lambda_i_not_n_mod_p),
        ("lambda - eps_i - eps_s dominant", h.target_dominant),
    ] {
        println!("  [{}] {}", if ok { "x" } else { " " }, name);
    }
    match r.multiplicity {
        Some(m) => println!(
            "multiplicity [L{} (x) wedge^2 V* : L{}] = {m}",
            r.lambda,
            r.target_weight()
        ),
        None => println!(
            "theorem inapplicable for this (lambda, i, p); t_s^i = {} is reported unproven",
            r.t_value(r.i).unwrap()
        ),
    }
}

fn print_verify_report(r: &VerifyReport) {
    let line = |name: &str, s: &glnwedge2::verify::CheckSection| {
        println!(
            "{} {name}: {} checks, {} mismatches",
            if s.passed() { "PASS" } else { "FAIL" },
            s.checked,
            s.mismatches().count()
        );
        for m in s.mismatches() {
            println!(
                "  lambda={} mu={} i={:?} j={:?} p={}: formula {} != oracle {}",
                m.lambda,
                m.mu.as_ref().map_or("-".into(), ToString::to_string),
                m.i,
                m.j,
                m.p,
                m.formula,
                m.oracle
            );
        }
    };
    line("rank formulas vs gram dims", &r.rank_theorem);
    line("closed form at i = s-1", &r.closed_form);
    line("multiplicity vs tensor oracle", &r.multiplicity_theorem);
    line("tensor vs slice branching", &r.branching_theorem);
    if let Some(c) = &r.counterexample {
        println!(
            "{} counterexample n=5 p=7: tensor={} level={} slice={}",
            if c.passed() { "PASS" } else { "FAIL" },
            c.tensor,
            c.level,
            c.slice
        );
    }
    println!("overall: {}", if r.passed { "PASS" } else { "FAIL" });
}
