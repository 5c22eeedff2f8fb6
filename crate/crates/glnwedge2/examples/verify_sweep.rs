//! Sweep the rank formulas against the brute-force oracles over a bounded
//! family of weights and primes.
//!
//! Run with: cargo run --release --example verify_sweep

use glnwedge2::gram::GramOracle;
use glnwedge2::verify::{run_verify, SweepParams};

fn main() -> glnwedge2::Result<()> {
    let oracle = GramOracle::default();
    let params = SweepParams {
        n_max: 5,
        deg_max: 4,
        primes: vec![3, 5, 7],
    };
    let report = run_verify(&params, &oracle)?;

    let sections = [
        ("rank formulas vs gram dims", &report.rank_theorem),
        ("closed form at i = s-1", &report.closed_form),
        (
            "multiplicity vs tensor oracle",
            &report.multiplicity_theorem,
        ),
        ("tensor vs slice branching", &report.branching_theorem),
    ];
    for (name, s) in sections {
        println!(
            "{} {name}: {} checks",
            if s.passed() { "PASS" } else { "FAIL" },
            s.checked
        );
        for m in s.mismatches() {
            println!("  {m:?}");
        }
    }
    if let Some(c) = &report.counterexample {
        println!(
            "{} counterexample: tensor={} level={} slice={}",
            if c.passed() { "PASS" } else { "FAIL" },
            c.tensor,
            c.level,
            c.slice
        );
    }
    println!("overall: {}", if report.passed { "PASS" } else { "FAIL" });
    std::process::exit(i32::from(!report.passed));
}
