//! Full characters of simple modules in positive characteristic, with the
//! optional on-disk cache.
//!
//! Run with: cargo run --release --example simple_characters

use glnwedge2::cache::CharDiskCache;
use glnwedge2::gram::GramOracle;
use glnwedge2::hyperalgebra::Budget;
use glnwedge2::weights::Weight;

fn main() -> glnwedge2::Result<()> {
    let lam = Weight::new(vec![2, 1, 0]);

    let oracle = GramOracle::default();
    for p in [3u64, 5] {
        let ch = oracle.simple_character(&lam, p)?;
        println!("character of L{lam} mod {p}: dim {}", ch.dim());
        for (w, m) in ch.mults() {
            println!("  {w} : {m}");
        }
        println!();
    }

    // a cache directory makes repeated runs cheap; entries are plain JSON
    let dir = std::env::temp_dir().join("glnwedge2-example-cache");
    let cached = GramOracle::with_disk_cache(Budget::default(), CharDiskCache::new(&dir));
    let ch = cached.simple_character(&Weight::new(vec![3, 2, 1, 0]), 5)?;
    println!(
        "L(3,2,1,0) mod 5 has dimension {} ({} weights); cached under {}",
        ch.dim(),
        ch.mults().len(),
        dir.display()
    );
    Ok(())
}
