//! Weight combinatorics: residue contents, linkage, removable pairs, and the
//! distinguished weights behind the rank formulas.
//!
//! Run with: cargo run --release --example linkage_and_removable

use glnwedge2::weights::{cont, distinguished, linked, removable_indices, removable_pairs, Weight};

fn main() -> glnwedge2::Result<()> {
    let lam = Weight::new(vec![2, 0, 0, 0, 0]);
    let mu = Weight::new(vec![3, 0, 0, 0, -1]);
    let p = 7;

    println!("cont{lam} mod {p} = {:?}", cont(&lam, p)?.residue_contents);
    println!("cont{mu} mod {p} = {:?}", cont(&mu, p)?.residue_contents);
    println!("linked: {}", linked(&lam, &mu, p)?);
    println!();

    let lam = Weight::new(vec![2, 1, 0]);
    println!("removable indices of {lam}: {:?}", removable_indices(&lam)?);
    println!("removable pairs of {lam}: {:?}", removable_pairs(&lam)?);
    println!();

    // the four distinguished weights for (lambda, i); the up-forms are the
    // dominant-sorted representatives of the same Weyl orbits
    let lam = Weight::new(vec![3, 2, 1, 0, 0]);
    for i in [1usize, 2] {
        let d = distinguished(&lam, i)?;
        println!("lambda = {lam}, i = {i} (s = {}):", d.s);
        println!("  mu_i    = {}   mu^i    = {}", d.mu_i, d.mu_up_i);
        println!("  omega_i = {}   omega^i = {}", d.omega_i, d.omega_up_i);
    }
    Ok(())
}
