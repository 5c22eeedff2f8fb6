//! Exact symbolic computation in the hyperalgebra of GL(n): PBW monomials of
//! divided-power root vectors, normal ordering, and pairings against a highest
//! weight vector.
//!
//! Internally everything is computed over the rationals with plain powers,
//! treating a divided power as X^r / r!; integrality of pairings is asserted
//! at the boundary.

mod normal_order;
mod pairing;

pub use normal_order::{normal_order, HyperElement, NormalTerm, WordSymbol};
pub use pairing::{pairing, pairing_via_normal_order};

use crate::error::{Error, Result};
use crate::weights::Weight;
use std::fmt;

/// Limits on symbolic work. Exceeding a budget is an error, never silent
/// truncation.
#[derive(Debug, Clone)]
pub struct Budget {
    /// Maximum Gram matrix dimension.
    pub max_matrix_dim: usize,
    /// Maximum number of rewrite/expansion steps in one straightening.
    pub max_steps: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_matrix_dim: 2000,
            max_steps: 50_000_000,
        }
    }
}

/// A positive root of GL(n): the index pair of E_{ij} / F_{ij}, 1 <= i < j <= n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootPair {
    pub i: usize,
    pub j: usize,
}

impl RootPair {
    pub fn new(i: usize, j: usize) -> Self {
        assert!(1 <= i && i < j, "root pair needs 1 <= i < j, got ({i},{j})");
        RootPair { i, j }
    }

    /// The root order: (i,j) < (a,b) iff j < b, or j = b and i < a.
    pub fn order_key(&self) -> (usize, usize) {
        (self.j, self.i)
    }

    /// eps_i - eps_j as a length-n weight.
    pub fn weight(&self, n: usize) -> Weight {
        let mut v = vec![0i64; n];
        v[self.i - 1] = 1;
        v[self.j - 1] = -1;
        Weight(v)
    }
}

impl PartialOrd for RootPair {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RootPair {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl fmt::Display for RootPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// An ordered product of divided-power root vectors F_{ij}^{(r)}, strictly
/// sorted by the root order. The empty monomial is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PbwMonomial {
    factors: Vec<(RootPair, u32)>,
}

impl PbwMonomial {
    pub fn identity() -> Self {
        PbwMonomial::default()
    }

    /// Build from factors; they must be strictly sorted with positive exponents.
    pub fn new(factors: Vec<(RootPair, u32)>) -> Self {
        assert!(
            factors.windows(2).all(|w| w[0].0 < w[1].0),
            "factors must be strictly sorted by the root order"
        );
        assert!(factors.iter().all(|&(_, r)| r >= 1));
        PbwMonomial { factors }
    }

    pub fn factors(&self) -> &[(RootPair, u32)] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    /// Total root weight sum r * (eps_i - eps_j) as a length-n weight.
    pub fn weight(&self, n: usize) -> Weight {
        let mut v = vec![0i64; n];
        for &(r, k) in &self.factors {
            v[r.i - 1] += k as i64;
            v[r.j - 1] -= k as i64;
        }
        Weight(v)
    }

    /// Total number of letters counting exponents.
    pub fn length(&self) -> u32 {
        self.factors.iter().map(|&(_, r)| r).sum()
    }
}

fn fmt_factors(sym: &str, factors: &[(RootPair, u32)], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if factors.is_empty() {
        return write!(f, "1");
    }
    for (k, (r, e)) in factors.iter().enumerate() {
        if k > 0 {
            write!(f, " ")?;
        }
        write!(f, "{sym}{r}")?;
        if *e > 1 {
            write!(f, "^({e})")?;
        }
    }
    Ok(())
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_factors("F", &self.factors, f)
    }
}

/// A word in the raising generators: same factor data as a [`PbwMonomial`]
/// but in an arbitrary order, applied left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct EWord {
    pub factors: Vec<(RootPair, u32)>,
}

impl fmt::Display for EWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_factors("E", &self.factors, f)
    }
}

/// The antiautomorphism swapping E and F: same factors, reversed order,
/// reinterpreted as raising generators.
pub fn transpose(m: &PbwMonomial) -> EWord {
    EWord {
        factors: m.factors.iter().rev().copied().collect(),
    }
}

/// All positive roots of GL(n) in the root order.
pub fn positive_roots(n: usize) -> Vec<RootPair> {
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for j in 2..=n {
        for i in 1..j {
            out.push(RootPair::new(i, j));
        }
    }
    out
}

/// All PBW monomials whose total root weight equals the given nonnegative
/// combination of simple roots (`target[k]` is the coefficient of alpha_{k+1}).
///
/// Deterministic order: roots are consumed in the root order, larger
/// exponents first.
pub fn enumerate_pbw(target: &[i64]) -> Result<Vec<PbwMonomial>> {
    if let Some(&bad) = target.iter().find(|&&a| a < 0) {
        return Err(Error::IndexOutOfRange {
            name: "target coefficient",
            value: bad,
            min: 0,
            max: i64::MAX,
        });
    }
    let n = target.len() + 1;
    let roots = positive_roots(n);
    let mut out = Vec::new();
    let mut acc: Vec<(RootPair, u32)> = Vec::new();
    fn rec(
        roots: &[RootPair],
        idx: usize,
        remaining: &mut [i64],
        acc: &mut Vec<(RootPair, u32)>,
        out: &mut Vec<PbwMonomial>,
    ) {
        if remaining.iter().all(|&x| x == 0) {
            out.push(PbwMonomial::new(acc.clone()));
            return;
        }
        if idx == roots.len() {
            return;
        }
        let r = roots[idx];
        // the root alpha(i,j) covers simple-root slots i-1 .. j-2
        let max = remaining[r.i - 1..r.j - 1].iter().copied().min().unwrap();
        for e in (0..=max as u32).rev() {
            if e > 0 {
                acc.push((r, e));
            }
            for slot in &mut remaining[r.i - 1..r.j - 1] {
                *slot -= e as i64;
            }
            rec(roots, idx + 1, remaining, acc, out);
            for slot in &mut remaining[r.i - 1..r.j - 1] {
                *slot += e as i64;
            }
            if e > 0 {
                acc.pop();
            }
        }
    }
    let mut remaining = target.to_vec();
    rec(&roots, 0, &mut remaining, &mut acc, &mut out);
    Ok(out)
}

/// Simple-root coordinates of lam - mu, or None if the difference is not a
/// nonnegative combination of simple roots.
pub fn simple_root_coords(lam: &Weight, mu: &Weight) -> Option<Vec<i64>> {
    if lam.n() != mu.n() || lam.degree() != mu.degree() {
        return None;
    }
    let mut partial = 0i64;
    let mut out = Vec::with_capacity(lam.n() - 1);
    for k in 0..lam.n() - 1 {
        partial += lam.0[k] - mu.0[k];
        if partial < 0 {
            return None;
        }
        out.push(partial);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp(i: usize, j: usize) -> RootPair {
        RootPair::new(i, j)
    }

    #[test]
    fn root_order() {
        assert!(rp(1, 2) < rp(1, 3));
        assert!(rp(1, 3) < rp(2, 3));
        assert!(rp(2, 3) < rp(1, 4));
    }

    #[test]
    fn enumerate_single_root() {
        let ms = enumerate_pbw(&[1]).unwrap();
        assert_eq!(ms, vec![PbwMonomial::new(vec![(rp(1, 2), 1)])]);
    }

    #[test]
    fn enumerate_two_step() {
        let ms = enumerate_pbw(&[1, 1]).unwrap();
        assert_eq!(
            ms,
            vec![
                PbwMonomial::new(vec![(rp(1, 2), 1), (rp(2, 3), 1)]),
                PbwMonomial::new(vec![(rp(1, 3), 1)]),
            ]
        );
    }

    #[test]
    fn enumerate_divided_power() {
        let ms = enumerate_pbw(&[2]).unwrap();
        assert_eq!(ms, vec![PbwMonomial::new(vec![(rp(1, 2), 2)])]);
    }

    #[test]
    fn enumerate_negative_rejected() {
        assert!(enumerate_pbw(&[1, -1]).is_err());
    }

    #[test]
    fn transpose_examples() {
        let m = PbwMonomial::new(vec![(rp(1, 2), 1), (rp(2, 3), 1)]);
        assert_eq!(transpose(&m).factors, vec![(rp(2, 3), 1), (rp(1, 2), 1)]);
        let m = PbwMonomial::new(vec![(rp(1, 3), 2)]);
        assert_eq!(transpose(&m).factors, vec![(rp(1, 3), 2)]);
        assert_eq!(transpose(&PbwMonomial::identity()).factors, vec![]);
    }

    #[test]
    fn monomial_weight() {
        let m = PbwMonomial::new(vec![(rp(1, 2), 2), (rp(2, 3), 1)]);
        assert_eq!(m.weight(3), Weight::new(vec![2, -1, -1]));
        assert_eq!(m.length(), 3);
    }
}
