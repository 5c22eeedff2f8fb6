//! The boundary instance showing the linkage condition is necessary: at
//! n = 5, p = 7, lambda = (4,0,0,0,0), mu = (2,0,0,0,0), the tensor
//! multiplicity matches the full (1,1)-level but not the (1,1)-cross slice.
//!
//! Run with: cargo run --release --example counterexample

use glnwedge2::gram::GramOracle;
use glnwedge2::tensor::{level_multiplicity_11, slice_multiplicity_11x, tensor_multiplicity};
use glnwedge2::weights::{linked, Weight};

fn main() -> glnwedge2::Result<()> {
    let oracle = GramOracle::default();
    let lam = Weight::new(vec![4, 0, 0, 0, 0]);
    let mu = Weight::new(vec![2, 0, 0, 0, 0]);
    let p = 7;

    // mu is linked to lam - eps_1 - eps_5, so the branching identity's
    // linkage condition fails here
    let v = Weight::new(vec![3, 0, 0, 0, -1]);
    println!("linked({mu}, {v}) mod {p}: {}", linked(&mu, &v, p)?);

    let tensor = tensor_multiplicity(&oracle, &lam, &mu, p)?;
    let mubar = mu.truncate2();
    let level = level_multiplicity_11(&oracle, &lam, &mubar, p)?;
    let slice = slice_multiplicity_11x(&oracle, &lam, &mubar, p)?;

    println!("[L{lam} (x) wedge^2 V* : L{mu}]      = {tensor}");
    println!("[(1,1)-level of L{lam} : L_3{mubar}] = {level}");
    println!("[(1,1)x-slice of L{lam} : L_3{mubar}] = {slice}");
    assert_eq!(tensor, level);
    assert_ne!(level, slice);
    println!("tensor = level != slice, as expected");
    Ok(())
}
