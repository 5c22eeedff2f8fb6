//! Persistent on-disk cache of simple characters, one JSON document per
//! (p, lambda) pair. Human-inspectable; corrupt or stale entries are ignored
//! with a warning and recomputed.

use crate::gram::Character;
use crate::weights::Weight;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// One stored character table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CacheEntry {
    pub tool_version: String,
    pub p: u64,
    pub lambda: Weight,
    /// Sorted list of (weight, multiplicity) pairs.
    pub character: Vec<(Weight, u64)>,
}

impl CacheEntry {
    pub fn new(lambda: &Weight, p: u64, ch: &Character) -> Self {
        CacheEntry {
            tool_version: TOOL_VERSION.to_string(),
            p,
            lambda: lambda.clone(),
            character: ch.mults().iter().map(|(w, &m)| (w.clone(), m)).collect(),
        }
    }

    pub fn into_character(self) -> Character {
        let n = self.lambda.n();
        let mults: BTreeMap<Weight, u64> = self.character.into_iter().collect();
        Character::from_mults(n, mults)
    }
}

/// Cache directory handle. The directory is created on first use.
#[derive(Debug, Clone)]
pub struct CharDiskCache {
    dir: PathBuf,
}

/// Filename for the (p, lambda) entry: p and the entries joined by "_",
/// minus signs encoded as "m".
pub fn cache_file_name(lam: &Weight, p: u64) -> String {
    let mut parts = vec![p.to_string()];
    for &x in &lam.0 {
        if x < 0 {
            parts.push(format!("m{}", -x));
        } else {
            parts.push(x.to_string());
        }
    }
    format!("{}.json", parts.join("_"))
}

impl CharDiskCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        CharDiskCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path_for(&self, lam: &Weight, p: u64) -> PathBuf {
        self.dir.join(cache_file_name(lam, p))
    }

    /// Load a character, or None if absent, unreadable, or stale.
    pub fn load(&self, lam: &Weight, p: u64) -> Option<Character> {
        let path = self.path_for(lam, p);
        let data = fs::read_to_string(&path).ok()?;
        let entry: CacheEntry = match serde_json::from_str(&data) {
            Ok(e) => e,
            Err(err) => {
                eprintln!(
                    "warning: ignoring corrupt cache entry {}: {err}",
                    path.display()
                );
                return None;
            }
        };
        if entry.tool_version != TOOL_VERSION || entry.p != p || entry.lambda != *lam {
            eprintln!("warning: invalidating stale cache entry {}", path.display());
            return None;
        }
        Some(entry.into_character())
    }

    /// Store a character with an atomic write-rename. Failures only warn:
    /// the cache never affects results.
    pub fn store(&self, lam: &Weight, p: u64, ch: &Character) {
        let entry = CacheEntry::new(lam, p, ch);
        if let Err(err) = self.try_store(lam, p, &entry) {
            eprintln!("warning: could not write cache entry: {err}");
        }
    }

    fn try_store(&self, lam: &Weight, p: u64, entry: &CacheEntry) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path_for(lam, p);
        let tmp = path.with_extension(format!("tmp.{}", std::process::id()));
        fs::write(&tmp, serde_json::to_string_pretty(entry)?)?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }
}
