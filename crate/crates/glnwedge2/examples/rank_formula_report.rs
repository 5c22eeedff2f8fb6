//! The rank-formula pipeline: the recursive X/Y/M/W matrices, their mod-p
//! ranks, the t-recursion, and the final multiplicity claim.
//!
//! Run with: cargo run --release --example rank_formula_report

use glnwedge2::weights::Weight;
use glnwedge2::{build_m, build_w, build_x, closed_form_s_minus_1, multiplicity_main};

fn main() -> glnwedge2::Result<()> {
    let lam = Weight::new(vec![3, 2, 1, 0, 0]);
    let p = 5;

    // the X matrix whose mod-p rank is the weight-space dimension at
    // lambda - alpha(1,3)
    let x = build_x(1, 3, 1, 1, &lam)?;
    println!("X_1^{{1,3}}(1) for lambda = {lam}:");
    for r in 0..x.rows {
        let row: Vec<String> = (0..x.cols).map(|c| x.at(r, c).to_string()).collect();
        println!("  {:6} [{}]", x.row_labels[r], row.join(", "));
    }
    println!("rank mod {p} = {}", x.rank_mod_p(p));
    println!();

    for i in [1usize, 2] {
        let m = build_m(i, &lam)?;
        let w = build_w(i, &lam)?;
        println!(
            "i = {i}: M^{i} is {}x{} with rank {} mod {p}; W^{i} is {}x{} with rank {}",
            m.rows,
            m.cols,
            m.rank_mod_p(p),
            w.rows,
            w.cols,
            w.rank_mod_p(p)
        );
    }
    println!();

    let report = multiplicity_main(&lam, 1, p)?;
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    println!();

    // at i = s-1 the whole pipeline collapses to a two-case closed form
    for q in [3u64, 5, 7] {
        println!(
            "closed form at i = s-1, p = {q}: {}",
            closed_form_s_minus_1(&lam, q)?
        );
    }
    Ok(())
}
