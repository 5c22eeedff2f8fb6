//! Brute-force ground truth: weight-space dimensions of simple GL(n)-modules
//! via mod-p ranks of contravariant Gram matrices, full simple characters,
//! and level/slice dimensions.

use crate::cache::CharDiskCache;
use crate::error::{Error, Result};
use crate::hyperalgebra::{
    enumerate_pbw, pairing, simple_root_coords, transpose, Budget, PbwMonomial,
};
use crate::matrix::IntMatrix;
use crate::weights::{dominant_weights_below, is_dominant, is_odd_prime, weyl_orbit, Weight};
use num_bigint::BigInt;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::sync::{Arc, RwLock};

/// The formal character of a module: a finite multiset of weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    n: usize,
    mults: BTreeMap<Weight, u64>,
}

impl Character {
    pub fn new(n: usize) -> Self {
        Character {
            n,
            mults: BTreeMap::new(),
        }
    }

    pub fn from_mults(n: usize, mults: BTreeMap<Weight, u64>) -> Self {
        assert!(mults.keys().all(|w| w.n() == n));
        assert!(mults.values().all(|&m| m > 0));
        Character { n, mults }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mult(&self, w: &Weight) -> u64 {
        self.mults.get(w).copied().unwrap_or(0)
    }

    pub fn set_mult(&mut self, w: Weight, m: u64) {
        assert_eq!(w.n(), self.n);
        if m == 0 {
            self.mults.remove(&w);
        } else {
            self.mults.insert(w, m);
        }
    }

    pub fn mults(&self) -> &BTreeMap<Weight, u64> {
        &self.mults
    }

    pub fn dim(&self) -> u64 {
        self.mults.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    /// Shift every weight by k on each entry (determinant twist).
    pub fn shift(&self, k: i64) -> Character {
        if k == 0 {
            return self.clone();
        }
        Character {
            n: self.n,
            mults: self.mults.iter().map(|(w, &m)| (w.shift(k), m)).collect(),
        }
    }
}

/// The contravariant Gram matrix of L_n(lam) at the exact weight mu: rows and
/// columns run over the PBW monomials of weight lam - mu, entry (x, y) is the
/// pairing of the transposed x against y. Empty when lam - mu is not a
/// nonnegative combination of simple roots.
pub fn gram_matrix(lam: &Weight, mu: &Weight, budget: &Budget) -> Result<IntMatrix> {
    let Some(coords) = simple_root_coords(lam, mu) else {
        return Ok(IntMatrix::zeros(0, 0));
    };
    let monos = enumerate_pbw(&coords)?;
    let dim = monos.len();
    if dim > budget.max_matrix_dim {
        return Err(Error::BudgetExceeded {
            what: "gram matrix dimension",
            used: dim as u64,
            limit: budget.max_matrix_dim as u64,
        });
    }
    let upper: Vec<((usize, usize), BigInt)> = (0..dim)
        .flat_map(|x| (x..dim).map(move |y| (x, y)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(x, y)| pairing(&transpose(&monos[x]), &monos[y], lam, budget).map(|v| ((x, y), v)))
        .collect::<Result<_>>()?;
    let mut out = IntMatrix::zeros(dim, dim);
    for ((x, y), v) in upper {
        out.set(y, x, v.clone());
        out.set(x, y, v);
    }
    let labels: Vec<String> = monos.iter().map(PbwMonomial::to_string).collect();
    out.row_labels = labels.clone();
    out.col_labels = labels;
    Ok(out)
}

/// Mod-p rank of the Gram matrix at the exact weight mu (no Weyl sorting).
pub fn gram_rank_mod_p(lam: &Weight, mu: &Weight, p: u64, budget: &Budget) -> Result<usize> {
    if !is_odd_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    Ok(gram_matrix(lam, mu, budget)?.rank_mod_p(p))
}

/// Character-table oracle with an in-memory (and optionally on-disk)
/// simple-character cache.
pub struct GramOracle {
    budget: Budget,
    memo: RwLock<BTreeMap<(Weight, u64), Arc<Character>>>,
    disk: Option<CharDiskCache>,
}

impl GramOracle {
    pub fn new(budget: Budget) -> Self {
        GramOracle {
            budget,
            memo: RwLock::new(BTreeMap::new()),
            disk: None,
        }
    }

    pub fn with_disk_cache(budget: Budget, disk: CharDiskCache) -> Self {
        GramOracle {
            budget,
            memo: RwLock::new(BTreeMap::new()),
            disk: Some(disk),
        }
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    /// dim L_n(lam)_mu as the mod-p Gram rank at the dominant representative
    /// of mu. Orbit-independence of the rank is a tested property, not an
    /// assumption of this entry point.
    pub fn dim_simple_weight_space(&self, lam: &Weight, mu: &Weight, p: u64) -> Result<usize> {
        if !is_dominant(lam) {
            return Err(Error::NotDominant(lam.clone()));
        }
        if lam.n() != mu.n() {
            return Err(Error::LengthMismatch {
                left: lam.n(),
                right: mu.n(),
            });
        }
        gram_rank_mod_p(lam, &mu.sorted_desc(), p, &self.budget)
    }

    /// The complete character of L_n(lam) in characteristic p.
    pub fn simple_character(&self, lam: &Weight, p: u64) -> Result<Arc<Character>> {
        if !is_dominant(lam) {
            return Err(Error::NotDominant(lam.clone()));
        }
        if !is_odd_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        // normalize by a determinant twist so the last entry is zero
        let shift = lam.entry(lam.n());
        let base = lam.shift(-shift);
        let ch = self.base_character(&base, p)?;
        if shift == 0 {
            Ok(ch)
        } else {
            Ok(Arc::new(ch.shift(shift)))
        }
    }

    fn base_character(&self, base: &Weight, p: u64) -> Result<Arc<Character>> {
        let key = (base.clone(), p);
        if let Some(ch) = self.memo.read().unwrap().get(&key) {
            return Ok(ch.clone());
        }
        if let Some(disk) = &self.disk {
            if let Some(ch) = disk.load(base, p) {
                let ch = Arc::new(ch);
                self.memo.write().unwrap().insert(key, ch.clone());
                return Ok(ch);
            }
        }
        let doms = dominant_weights_below(base);
        let dims: Vec<(Weight, usize)> = doms
            .into_par_iter()
            .map(|mu| gram_rank_mod_p(base, &mu, p, &self.budget).map(|d| (mu, d)))
            .collect::<Result<_>>()?;
        let mut mults = BTreeMap::new();
        for (mu, d) in dims {
            if d > 0 {
                for w in weyl_orbit(&mu) {
                    mults.insert(w, d as u64);
                }
            }
        }
        let ch = Arc::new(Character::from_mults(base.n(), mults));
        if let Some(disk) = &self.disk {
            disk.store(base, p, &ch);
        }
        self.memo.write().unwrap().insert(key, ch.clone());
        Ok(ch)
    }

    /// dim of the Weyl module weight space over the rationals: the Q-rank of
    /// the Gram matrix at the exact mu. Equals the Kostka number for
    /// partition-shaped inputs.
    pub fn weyl_weight_dim(&self, lam: &Weight, mu: &Weight) -> Result<usize> {
        if !is_dominant(lam) || lam.entry(lam.n()) < 0 {
            return Err(Error::NotDominant(lam.clone()));
        }
        Ok(gram_matrix(lam, mu, &self.budget)?.rank_over_q())
    }

    /// Dimension of the (1,1)-cross slice of L_n(lam) at the truncated weight
    /// of mu: dim L_mu - dim L_omega with omega = (mu_1,...,mu_{n-2}, 2, 0).
    pub fn slice_dim_11x(&self, lam: &Weight, mu: &Weight, p: u64) -> Result<usize> {
        let n = lam.n();
        self.check_two_zero_tail(lam)?;
        if mu.n() != n || mu.entry(n - 1) != 1 || mu.entry(n) != 1 {
            return Err(Error::NotInLevel(mu.clone()));
        }
        let ch = self.simple_character(lam, p)?;
        let d_mu = ch.mult(mu);
        let mut om = mu.0.clone();
        om[n - 2] = 2;
        om[n - 1] = 0;
        let d_om = ch.mult(&Weight(om));
        assert!(d_mu >= d_om, "slice dimension must be nonnegative");
        Ok((d_mu - d_om) as usize)
    }

    /// Total dimension of the (i,j)-level of L_n(lam): the sum of weight
    /// spaces whose last two entries are (i, j).
    pub fn level_dim(&self, lam: &Weight, i: i64, j: i64, p: u64) -> Result<usize> {
        let n = lam.n();
        self.check_two_zero_tail(lam)?;
        if i < 0 || j < 0 {
            return Ok(0);
        }
        let ch = self.simple_character(lam, p)?;
        Ok(ch
            .mults()
            .iter()
            .filter(|(w, _)| w.entry(n - 1) == i && w.entry(n) == j)
            .map(|(_, &m)| m as usize)
            .sum())
    }

    /// The GL(n-2) character of the (1,1)-cross slice, indexed by truncated
    /// weights.
    pub fn slice_character_11x(&self, lam: &Weight, p: u64) -> Result<Character> {
        let n = lam.n();
        self.check_two_zero_tail(lam)?;
        let ch = self.simple_character(lam, p)?;
        let mut out = Character::new(n - 2);
        for w in ch.mults().keys() {
            if w.entry(n - 1) == 1 && w.entry(n) == 1 {
                let d = self.slice_dim_11x(lam, w, p)?;
                if d > 0 {
                    out.set_mult(w.truncate2(), d as u64);
                }
            }
        }
        Ok(out)
    }

    /// The GL(n-2) character of the full (i,j)-level, indexed by truncated
    /// weights. Truncation is injective on a level, so this is well defined.
    pub fn level_character(&self, lam: &Weight, i: i64, j: i64, p: u64) -> Result<Character> {
        let n = lam.n();
        self.check_two_zero_tail(lam)?;
        let ch = self.simple_character(lam, p)?;
        let mut out = Character::new(n - 2);
        for (w, &m) in ch.mults() {
            if w.entry(n - 1) == i && w.entry(n) == j {
                out.set_mult(w.truncate2(), m);
            }
        }
        Ok(out)
    }

    fn check_two_zero_tail(&self, lam: &Weight) -> Result<()> {
        let n = lam.n();
        if !is_dominant(lam) {
            return Err(Error::NotDominant(lam.clone()));
        }
        if n < 3 || lam.entry(n) != 0 || lam.entry(n - 1) != 0 {
            return Err(Error::TailNotZero(lam.clone()));
        }
        Ok(())
    }
}

impl Default for GramOracle {
    fn default() -> Self {
        GramOracle::new(Budget::default())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    fn budget() -> Budget {
        Budget::default()
    }

    #[test]
    fn gram_at_highest_weight() {
        let g = gram_matrix(&w(&[3, 1, 0]), &w(&[3, 1, 0]), &budget()).unwrap();
        assert_eq!((g.rows, g.cols), (1, 1));
        assert_eq!(*g.at(0, 0), BigInt::from(1));
    }

    #[test]
    fn gram_single_simple_root() {
        // lam = (a, b), mu = lam - alpha_1: 1x1 [lam_1 - lam_2]
        let g = gram_matrix(&w(&[4, 1]), &w(&[3, 2]), &budget()).unwrap();
        assert_eq!(*g.at(0, 0), BigInt::from(3));
    }

    #[test]
    fn gram_two_by_two_symmetric() {
        // contravariant convention: symmetric with the same rank as the
        // one-sided matrix of the rank recursion
        let g = gram_matrix(&w(&[3, 1, 0]), &w(&[2, 1, 1]), &budget()).unwrap();
        assert!(g.is_symmetric());
        assert_eq!(*g.at(0, 0), BigInt::from(3));
        assert_eq!(*g.at(0, 1), BigInt::from(-1));
        assert_eq!(*g.at(1, 1), BigInt::from(3));
        assert_eq!(g.rank_over_q(), 2);
        assert_eq!(g.row_labels, vec!["F(1,2) F(2,3)", "F(1,3)"]);
    }

    #[test]
    fn gram_empty_when_not_subdominant() {
        let g = gram_matrix(&w(&[1, 1, 0]), &w(&[2, 0, 0]), &budget()).unwrap();
        assert!(g.is_empty());
    }

    #[test]
    fn dim_highest_weight_is_one() {
        let o = GramOracle::default();
        for lam in [w(&[3, 1, 0]), w(&[2, 2, 1, 0]), w(&[6, 0, 0, 0, 0])] {
            assert_eq!(o.dim_simple_weight_space(&lam, &lam, 3).unwrap(), 1);
        }
    }

    #[test]
    fn natural_module_dims() {
        let o = GramOracle::default();
        let lam = w(&[1, 0, 0]);
        for mu in [w(&[1, 0, 0]), w(&[0, 1, 0]), w(&[0, 0, 1])] {
            for p in [3, 5, 7] {
                assert_eq!(o.dim_simple_weight_space(&lam, &mu, p).unwrap(), 1);
            }
        }
    }

    #[test]
    fn wedge_square_character() {
        let o = GramOracle::default();
        let ch = o.simple_character(&w(&[1, 1, 0]), 3).unwrap();
        assert_eq!(ch.dim(), 3);
        for mu in [w(&[1, 1, 0]), w(&[1, 0, 1]), w(&[0, 1, 1])] {
            assert_eq!(ch.mult(&mu), 1);
        }
    }

    #[test]
    fn trivial_character() {
        let o = GramOracle::default();
        let ch = o.simple_character(&w(&[0, 0, 0]), 5).unwrap();
        assert_eq!(ch.dim(), 1);
        assert_eq!(ch.mult(&w(&[0, 0, 0])), 1);
    }

    #[test]
    fn truncated_symmetric_square_character() {
        // lam = (2,0), p = 3: (1,1) keeps multiplicity 1 since the Gram
        // matrix [2] has rank 1 mod 3
        let o = GramOracle::default();
        let ch = o.simple_character(&w(&[2, 0]), 3).unwrap();
        assert_eq!(ch.mult(&w(&[1, 1])), 1);
        assert_eq!(ch.mult(&w(&[2, 0])), 1);
        assert_eq!(ch.mult(&w(&[0, 2])), 1);
        assert_eq!(ch.dim(), 3);
    }

    #[test]
    fn weyl_dims_match_frozen_kostka_values() {
        let o = GramOracle::default();
        assert_eq!(
            o.weyl_weight_dim(&w(&[1, 1, 0]), &w(&[1, 1, 0])).unwrap(),
            1
        );
        assert_eq!(
            o.weyl_weight_dim(&w(&[2, 1, 0]), &w(&[1, 1, 1])).unwrap(),
            2
        );
        assert_eq!(
            o.weyl_weight_dim(&w(&[2, 0, 0]), &w(&[1, 1, 0])).unwrap(),
            1
        );
    }

    #[test]
    fn slice_dim_examples() {
        let o = GramOracle::default();
        // counterexample feed: lam = (4,0,0,0,0), p = 7, mu = (2,0,0,1,1)
        let d = o
            .slice_dim_11x(&w(&[4, 0, 0, 0, 0]), &w(&[2, 0, 0, 1, 1]), 7)
            .unwrap();
        let ch = o.simple_character(&w(&[4, 0, 0, 0, 0]), 7).unwrap();
        assert_eq!(
            d as u64,
            ch.mult(&w(&[2, 0, 0, 1, 1])) - ch.mult(&w(&[2, 0, 0, 2, 0]))
        );
        // empty weight space contributes zero
        assert_eq!(
            o.slice_dim_11x(&w(&[1, 1, 0, 0]), &w(&[2, -2, 1, 1]), 3)
                .unwrap(),
            0
        );
        // lam = (1,1,0,0): mu = (0,0,1,1) -> 1, the omega term vanishes
        assert_eq!(
            o.slice_dim_11x(&w(&[1, 1, 0, 0]), &w(&[0, 0, 1, 1]), 3)
                .unwrap(),
            1
        );
        assert!(matches!(
            o.slice_dim_11x(&w(&[1, 1, 0, 0]), &w(&[1, 1, 0, 0]), 3),
            Err(Error::NotInLevel(_))
        ));
    }

    #[test]
    fn level_dim_examples() {
        let o = GramOracle::default();
        assert_eq!(o.level_dim(&w(&[1, 0, 0]), 0, 0, 3).unwrap(), 1);
        assert_eq!(o.level_dim(&w(&[1, 0, 0]), -1, 0, 3).unwrap(), 0);
        assert_eq!(o.level_dim(&w(&[1, 0, 0]), 0, -2, 3).unwrap(), 0);
        assert_eq!(o.level_dim(&w(&[1, 1, 0, 0]), 1, 1, 3).unwrap(), 1);
    }

    #[test]
    fn gram_is_invariant_under_determinant_twist() {
        // every commutator scalar enters as a difference of weight entries,
        // so shifting all entries of lam and mu together changes nothing
        let b = budget();
        for (lam, mu) in [
            (w(&[3, 1, 0]), w(&[2, 1, 1])),
            (w(&[2, 2, 1]), w(&[2, 1, 2])),
            (w(&[4, 2, 0, 0]), w(&[2, 2, 1, 1])),
        ] {
            let base = gram_matrix(&lam, &mu, &b).unwrap();
            for k in [-2i64, 1, 3] {
                let shifted = gram_matrix(&lam.shift(k), &mu.shift(k), &b).unwrap();
                assert_eq!(base, shifted, "lam={lam} mu={mu} k={k}");
            }
        }
    }

    #[test]
    fn weyl_symmetry_of_raw_gram_rank_on_samples() {
        let b = budget();
        for (lam, mu) in [
            (w(&[2, 1, 0]), w(&[1, 2, 0])),
            (w(&[2, 1, 0]), w(&[0, 1, 2])),
            (w(&[3, 1, 0]), w(&[1, 3, 0])),
            (w(&[2, 2, 0, 0]), w(&[0, 2, 2, 0])),
        ] {
            for p in [3u64, 5] {
                let exact = gram_rank_mod_p(&lam, &mu, p, &b).unwrap();
                let sorted = gram_rank_mod_p(&lam, &mu.sorted_desc(), p, &b).unwrap();
                assert_eq!(exact, sorted, "lam={lam} mu={mu} p={p}");
            }
        }
    }

    #[test]
    fn modp_rank_bounded_by_q_rank_on_samples() {
        let o = GramOracle::default();
        for lam in [w(&[2, 1, 0]), w(&[3, 1, 0]), w(&[2, 2, 1])] {
            for mu in dominant_weights_below(&lam.shift(-lam.entry(lam.n()))) {
                let mu = mu.shift(lam.entry(lam.n()));
                let q = o.weyl_weight_dim(&lam, &mu).unwrap();
                for p in [3u64, 5, 7] {
                    let f = o.dim_simple_weight_space(&lam, &mu, p).unwrap();
                    assert!(f <= q, "lam={lam} mu={mu} p={p}");
                }
            }
        }
    }

    #[test]
    fn matrix_dim_budget_enforced() {
        let tight = Budget {
            max_matrix_dim: 1,
            max_steps: 1_000_000,
        };
        assert!(matches!(
            gram_matrix(&w(&[3, 1, 0]), &w(&[2, 1, 1]), &tight),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
