//! Root-system and weight combinatorics for GL(n): dominance, linkage,
//! removable pairs, and the distinguished weights feeding the rank formulas.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// An integer weight for GL(n), identified with an n-tuple of integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn new(entries: Vec<i64>) -> Self {
        assert!(!entries.is_empty(), "weight must have length >= 1");
        Weight(entries)
    }

    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    /// Unit weight epsilon_a (1-based index).
    pub fn eps(n: usize, a: usize) -> Self {
        let mut v = vec![0; n];
        v[a - 1] = 1;
        Weight(v)
    }

    /// alpha(a, b) = eps_a - eps_b, the sum of the simple roots alpha_a..alpha_{b-1}.
    pub fn alpha_interval(n: usize, a: usize, b: usize) -> Self {
        assert!(1 <= a && a < b && b <= n);
        let mut v = vec![0; n];
        v[a - 1] = 1;
        v[b - 1] = -1;
        Weight(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// 1-based entry access.
    pub fn entry(&self, a: usize) -> i64 {
        self.0[a - 1]
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn shift(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a + k).collect())
    }

    pub fn scale(&self, c: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * c).collect())
    }

    /// Dominant representative of the Weyl orbit (entries sorted decreasing).
    pub fn sorted_desc(&self) -> Weight {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Weight(v)
    }

    /// 1-based index of the last nonzero entry, or None for the zero weight.
    pub fn last_nonzero(&self) -> Option<usize> {
        (1..=self.n()).rev().find(|&q| self.entry(q) != 0)
    }

    /// Truncation dropping the last two entries.
    pub fn truncate2(&self) -> Weight {
        assert!(self.n() >= 3);
        Weight(self.0[..self.n() - 2].to_vec())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Residue contents of a dominant weight modulo p, the invariant deciding linkage.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkageClass {
    pub p: u64,
    /// `residue_contents[alpha]` = cont_alpha for alpha in 0..p.
    pub residue_contents: Vec<i64>,
}

/// The four distinguished weights attached to (lambda, i) in the rank formulas,
/// together with s, the index of the last nonzero entry of lambda.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinguishedWeights {
    pub s: usize,
    /// lambda - alpha(i, n-1) - alpha(s, n)
    pub mu_i: Weight,
    /// lambda - alpha(i, n-1) - alpha(s, n-1)
    pub omega_i: Weight,
    /// lambda - alpha(i, s+1) - alpha(s, s+2), in the same Weyl orbit as mu_i
    pub mu_up_i: Weight,
    /// lambda - alpha(i, s+1) - alpha(s, s+1), in the same Weyl orbit as omega_i
    pub omega_up_i: Weight,
}

pub fn is_dominant(w: &Weight) -> bool {
    w.0.windows(2).all(|ab| ab[0] >= ab[1])
}

/// mu <= lambda in the dominance order: lambda - mu is a nonnegative integer
/// combination of simple roots.
pub fn dominance_leq(mu: &Weight, lam: &Weight) -> Result<bool> {
    if mu.n() != lam.n() {
        return Err(Error::LengthMismatch {
            left: mu.n(),
            right: lam.n(),
        });
    }
    if mu.degree() != lam.degree() {
        return Ok(false);
    }
    let mut partial = 0i64;
    for k in 0..lam.n() - 1 {
        partial += lam.0[k] - mu.0[k];
        if partial < 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Residue contents cont_alpha(lambda): signed count of cells (a, b) with
/// residue b - a = alpha mod p.
pub fn cont(lam: &Weight, p: u64) -> Result<LinkageClass> {
    if !is_odd_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let pp = p as i64;
    let mut out = vec![0i64; p as usize];
    for a in 1..=lam.n() {
        let la = lam.entry(a);
        if la > 0 {
            for b in 1..=la {
                out[(b - a as i64).rem_euclid(pp) as usize] += 1;
            }
        } else {
            for b in la + 1..=0 {
                out[(b - a as i64).rem_euclid(pp) as usize] -= 1;
            }
        }
    }
    Ok(LinkageClass {
        p,
        residue_contents: out,
    })
}

/// Linkage: equality of all residue contents. Both weights must be dominant.
pub fn linked(lam: &Weight, mu: &Weight, p: u64) -> Result<bool> {
    if lam.n() != mu.n() {
        return Err(Error::LengthMismatch {
            left: lam.n(),
            right: mu.n(),
        });
    }
    for w in [lam, mu] {
        if !is_dominant(w) {
            return Err(Error::NotDominant(w.clone()));
        }
    }
    Ok(cont(lam, p)? == cont(mu, p)?)
}

/// All 1 <= j <= n with lambda - eps_j still dominant, in ascending order.
pub fn removable_indices(lam: &Weight) -> Result<Vec<usize>> {
    if !is_dominant(lam) {
        return Err(Error::NotDominant(lam.clone()));
    }
    let n = lam.n();
    Ok((1..=n)
        .filter(|&j| is_dominant(&lam.sub(&Weight::eps(n, j))))
        .collect())
}

/// All removable pairs (i, j): j is lambda-removable and i is
/// (lambda - eps_j)-removable. Ordered by (j, i).
pub fn removable_pairs(lam: &Weight) -> Result<Vec<(usize, usize)>> {
    if !is_dominant(lam) {
        return Err(Error::NotDominant(lam.clone()));
    }
    let n = lam.n();
    let mut out = Vec::new();
    for j in 1..=n {
        let w = lam.sub(&Weight::eps(n, j));
        if !is_dominant(&w) {
            continue;
        }
        for i in 1..j {
            if is_dominant(&w.sub(&Weight::eps(n, i))) {
                out.push((i, j));
            }
        }
    }
    out.sort_by_key(|&(i, j)| (j, i));
    Ok(out)
}

/// The distinguished weights mu_i, omega_i, mu^i, omega^i for a dominant
/// lambda with two trailing zeros and 1 <= i <= s-1.
pub fn distinguished(lam: &Weight, i: usize) -> Result<DistinguishedWeights> {
    if !is_dominant(lam) {
        return Err(Error::NotDominant(lam.clone()));
    }
    if lam.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let n = lam.n();
    if n < 2 || lam.entry(n) != 0 || lam.entry(n - 1) != 0 {
        return Err(Error::TailNotZero(lam.clone()));
    }
    let s = lam.last_nonzero().expect("nonzero weight");
    if i < 1 || i + 1 > s {
        return Err(Error::IndexOutOfRange {
            name: "i",
            value: i as i64,
            min: 1,
            max: s as i64 - 1,
        });
    }
    let a = |x, y| Weight::alpha_interval(n, x, y);
    Ok(DistinguishedWeights {
        s,
        mu_i: lam.sub(&a(i, n - 1)).sub(&a(s, n)),
        omega_i: lam.sub(&a(i, n - 1)).sub(&a(s, n - 1)),
        mu_up_i: lam.sub(&a(i, s + 1)).sub(&a(s, s + 2)),
        omega_up_i: lam.sub(&a(i, s + 1)).sub(&a(s, s + 1)),
    })
}

/// Dominant weights mu with mu <= lam, for lam dominant with nonnegative
/// entries and lam_n = 0. All such mu have nonnegative entries.
pub fn dominant_weights_below(lam: &Weight) -> Vec<Weight> {
    debug_assert!(is_dominant(lam) && lam.entry(lam.n()) >= 0);
    let n = lam.n();
    let d = lam.degree();
    let lam_partials: Vec<i64> = lam
        .0
        .iter()
        .scan(0, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect();
    let mut out = Vec::new();
    let mut acc: Vec<i64> = Vec::with_capacity(n);
    fn rec(acc: &mut Vec<i64>, rem: i64, n: usize, lam_partials: &[i64], out: &mut Vec<Weight>) {
        let k = acc.len();
        if k == n {
            if rem == 0 {
                out.push(Weight(acc.clone()));
            }
            return;
        }
        let prev = if k == 0 { rem } else { acc[k - 1] };
        let sum_so_far: i64 = acc.iter().sum();
        let mut v = prev.min(rem);
        while v >= 0 {
            // partial sums of mu stay below those of lambda, and the tail
            // must be able to absorb the remaining degree
            if sum_so_far + v <= lam_partials[k] && rem - v <= v * (n - k - 1) as i64 {
                acc.push(v);
                rec(acc, rem - v, n, lam_partials, out);
                acc.pop();
            }
            v -= 1;
        }
    }
    rec(&mut acc, d, n, &lam_partials, &mut out);
    out
}

/// All distinct permutations of a weight's entries.
pub fn weyl_orbit(w: &Weight) -> Vec<Weight> {
    let mut sorted = w.0.clone();
    sorted.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(Weight(sorted.clone()));
        // next_permutation
        let n = sorted.len();
        let Some(k) = (0..n - 1).rev().find(|&k| sorted[k] < sorted[k + 1]) else {
            break;
        };
        let l = (k + 1..n).rev().find(|&l| sorted[l] > sorted[k]).unwrap();
        sorted.swap(k, l);
        sorted[k + 1..].reverse();
    }
    out
}
