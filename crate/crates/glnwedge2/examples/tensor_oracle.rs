//! Composition multiplicities of L(lambda) tensor wedge^2 V* straight from
//! characters, and the agreement with the rank-formula route.
//!
//! Run with: cargo run --release --example tensor_oracle

use glnwedge2::gram::GramOracle;
use glnwedge2::multiplicity_main;
use glnwedge2::tensor::{multiply_characters, tensor_decomposition, wedge2_dual_character};
use glnwedge2::weights::Weight;

fn main() -> glnwedge2::Result<()> {
    let oracle = GramOracle::default();
    let lam = Weight::new(vec![2, 1, 0, 0]);

    let wedge = wedge2_dual_character(lam.n())?;
    println!(
        "wedge^2 V*_{} has dimension {} with highest weight (0,..,0,-1,-1)",
        lam.n(),
        wedge.dim()
    );

    let lam_char = oracle.simple_character(&lam, 5)?;
    let product = multiply_characters(&lam_char, &wedge)?;
    println!(
        "char L{lam} * char wedge^2 V* has dimension {} over {} weights",
        product.dim(),
        product.mults().len()
    );

    // the interesting target is mu = lambda - eps_1 - eps_s; its multiplicity
    // depends on the prime, and the rank formulas only claim it when their
    // hypotheses hold
    for p in [5u64, 7] {
        println!();
        println!("composition multiplicities mod {p}:");
        for (mu, c) in tensor_decomposition(&oracle, &lam, p)? {
            println!("  [product : L{mu}] = {c}");
        }
        let report = multiplicity_main(&lam, 1, p)?;
        let mu = report.target_weight();
        match report.multiplicity {
            Some(t) => println!("rank formulas: [L{lam} (x) wedge^2 V* : L{mu}] = {t}"),
            None => println!(
                "rank formulas: inapplicable at p = {p} (i - lambda_i = n mod p); the oracle value above is the truth"
            ),
        }
    }
    Ok(())
}
