//! Symbolic straightening in the hyperalgebra: rewriting words of raising,
//! lowering and torus generators into normal order, and pairing PBW
//! monomials against a highest weight vector.
//!
//! Run with: cargo run --release --example normal_ordering

use glnwedge2::hyperalgebra::{
    enumerate_pbw, normal_order, pairing, transpose, Budget, RootPair, WordSymbol,
};
use glnwedge2::weights::Weight;

fn main() -> glnwedge2::Result<()> {
    let budget = Budget::default();
    let rp = RootPair::new;

    // E_12 F_12^(3) in normal order
    let word = [WordSymbol::E(rp(1, 2), 1), WordSymbol::F(rp(1, 2), 3)];
    let nf = normal_order(&word, 2, &budget)?;
    println!("E(1,2) F(1,2)^(3) =");
    for (term, coef) in &nf.terms {
        println!("  {coef} * {term}");
    }
    println!();

    // all PBW monomials of weight alpha_1 + 2 alpha_2 and a sample pairing
    let monos = enumerate_pbw(&[1, 2])?;
    println!("PBW monomials of weight alpha_1 + 2 alpha_2:");
    for m in &monos {
        println!("  {m}");
    }
    let lam = Weight::new(vec![4, 2, 0]);
    println!();
    println!("pairings against the highest weight vector of weight {lam}:");
    for x in &monos {
        for y in &monos {
            let v = pairing(&transpose(x), y, &lam, &budget)?;
            println!("  <{x}, {y}> = {v}");
        }
    }
    Ok(())
}
