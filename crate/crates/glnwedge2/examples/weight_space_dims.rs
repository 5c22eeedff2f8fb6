//! Weight-space dimensions of simple GL(n)-modules from Gram-matrix ranks.
//!
//! Run with: cargo run --release --example weight_space_dims

use glnwedge2::gram::{gram_matrix, GramOracle};
use glnwedge2::hyperalgebra::Budget;
use glnwedge2::weights::Weight;

fn main() -> glnwedge2::Result<()> {
    let budget = Budget::default();
    let oracle = GramOracle::default();

    let lam = Weight::new(vec![3, 1, 0]);
    let mu = Weight::new(vec![2, 1, 1]);
    println!("lambda = {lam}, mu = {mu}");

    let g = gram_matrix(&lam, &mu, &budget)?;
    println!("gram matrix over the PBW basis of weight lambda - mu:");
    for r in 0..g.rows {
        let row: Vec<String> = (0..g.cols).map(|c| g.at(r, c).to_string()).collect();
        println!("  {:14} [{}]", g.row_labels[r], row.join(", "));
    }

    println!("rank over Q (Weyl module dimension): {}", g.rank_over_q());
    for p in [3u64, 5, 7] {
        println!(
            "rank mod {p} (simple module dimension): {}",
            oracle.dim_simple_weight_space(&lam, &mu, p)?
        );
    }

    // the zero weight space of the restricted adjoint drops at p = 3
    let lam = Weight::new(vec![2, 1, 0]);
    let mu = Weight::new(vec![1, 1, 1]);
    println!();
    println!("lambda = {lam}, mu = {mu}");
    println!("  char 0 dimension: {}", oracle.weyl_weight_dim(&lam, &mu)?);
    for p in [3u64, 5] {
        println!(
            "  mod {p} dimension: {}",
            oracle.dim_simple_weight_space(&lam, &mu, p)?
        );
    }
    Ok(())
}
