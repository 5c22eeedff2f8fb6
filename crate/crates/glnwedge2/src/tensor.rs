//! Independent end-to-end verification: composition multiplicities of tensor
//! products computed from characters alone, plus the level and slice
//! multiplicities they are compared against.

use crate::error::{Error, Result};
use crate::gram::{Character, GramOracle};
use crate::weights::{dominance_leq, is_dominant, Weight};
use std::collections::BTreeMap;

/// A resolved decomposition of a character into simple characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub input: Character,
    pub parts: BTreeMap<Weight, u64>,
}

/// The character of the wedge square of the dual natural module: weight
/// -eps_i - eps_j with multiplicity 1 for every i < j.
pub fn wedge2_dual_character(n: usize) -> Result<Character> {
    if n < 2 {
        return Err(Error::IndexOutOfRange {
            name: "n",
            value: n as i64,
            min: 2,
            max: i64::MAX,
        });
    }
    let mut ch = Character::new(n);
    for j in 2..=n {
        for i in 1..j {
            let w = Weight::eps(n, i).add(&Weight::eps(n, j)).scale(-1);
            ch.set_mult(w, 1);
        }
    }
    Ok(ch)
}

/// Character of a tensor product: the convolution of the two weight multisets.
pub fn multiply_characters(a: &Character, b: &Character) -> Result<Character> {
    if a.n() != b.n() {
        return Err(Error::LengthMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    let mut out: BTreeMap<Weight, u64> = BTreeMap::new();
    for (wa, &ma) in a.mults() {
        for (wb, &mb) in b.mults() {
            *out.entry(wa.add(wb)).or_insert(0) += ma * mb;
        }
    }
    Ok(Character::from_mults(a.n(), out))
}

/// Decompose a genuine module character into simple characters in
/// characteristic p by peeling dominance-maximal weights. A negative
/// intermediate multiplicity means the input was not a character and is an
/// error. The reconstruction identity is asserted before returning.
pub fn decompose(ch: &Character, p: u64, oracle: &GramOracle) -> Result<Decomposition> {
    let n = ch.n();
    let mut remaining: BTreeMap<Weight, i64> = ch
        .mults()
        .iter()
        .map(|(w, &m)| (w.clone(), m as i64))
        .collect();
    let mut parts: BTreeMap<Weight, u64> = BTreeMap::new();
    while !remaining.is_empty() {
        let support: Vec<Weight> = remaining.keys().cloned().collect();
        let mut maximal: Vec<Weight> = support
            .iter()
            .filter(|w| {
                !support
                    .iter()
                    .any(|v| v != *w && dominance_leq(w, v).unwrap_or(false))
            })
            .cloned()
            .collect();
        // process in reverse lexicographic order for determinism
        maximal.sort_by(|a, b| b.cmp(a));
        assert!(
            !maximal.is_empty(),
            "nonempty character has maximal weights"
        );
        for nu in maximal {
            let Some(&c) = remaining.get(&nu) else {
                continue;
            };
            if c == 0 {
                remaining.remove(&nu);
                continue;
            }
            if c < 0 || !is_dominant(&nu) {
                return Err(Error::NotACharacter(nu));
            }
            *parts.entry(nu.clone()).or_insert(0) += c as u64;
            let simple = oracle.simple_character(&nu, p)?;
            for (w, &m) in simple.mults() {
                let e = remaining.entry(w.clone()).or_insert(0);
                *e -= c * m as i64;
                if *e == 0 {
                    remaining.remove(w);
                } else if *e < 0 {
                    return Err(Error::NotACharacter(w.clone()));
                }
            }
        }
    }
    // reconstruction: the parts rebuild the input exactly
    let mut acc: BTreeMap<Weight, u64> = BTreeMap::new();
    for (nu, &c) in &parts {
        for (w, &m) in oracle.simple_character(nu, p)?.mults() {
            *acc.entry(w.clone()).or_insert(0) += c * m;
        }
    }
    acc.retain(|_, m| *m > 0);
    assert_eq!(
        &acc,
        ch.mults(),
        "decomposition must reconstruct its input exactly"
    );
    Ok(Decomposition {
        input: Character::from_mults(n, ch.mults().clone()),
        parts,
    })
}

/// All composition multiplicities of L(lam) tensor the dual wedge square,
/// keyed by the dominant highest weights. Negative entries are handled by a
/// determinant twist before peeling and shifted back afterwards.
pub fn tensor_decomposition(
    oracle: &GramOracle,
    lam: &Weight,
    p: u64,
) -> Result<BTreeMap<Weight, u64>> {
    if !is_dominant(lam) {
        return Err(Error::NotDominant(lam.clone()));
    }
    let n = lam.n();
    let lam_char = oracle.simple_character(lam, p)?;
    let product = multiply_characters(&lam_char, &wedge2_dual_character(n)?)?;
    let dec = decompose(&product.shift(2), p, oracle)?;
    Ok(dec
        .parts
        .into_iter()
        .map(|(w, c)| (w.shift(-2), c))
        .collect())
}

/// The composition multiplicity of L(mu) in L(lam) tensor the dual wedge
/// square, computed purely from characters.
pub fn tensor_multiplicity(oracle: &GramOracle, lam: &Weight, mu: &Weight, p: u64) -> Result<u64> {
    if !is_dominant(mu) {
        return Err(Error::NotDominant(mu.clone()));
    }
    if mu.n() != lam.n() {
        return Err(Error::LengthMismatch {
            left: lam.n(),
            right: mu.n(),
        });
    }
    if mu.degree() != lam.degree() - 2 {
        return Ok(0);
    }
    Ok(tensor_decomposition(oracle, lam, p)?
        .get(mu)
        .copied()
        .unwrap_or(0))
}

/// GL(n-2) composition multiplicities of the (1,1)-cross slice of L(lam).
pub fn slice_decomposition_11x(
    oracle: &GramOracle,
    lam: &Weight,
    p: u64,
) -> Result<BTreeMap<Weight, u64>> {
    let ch = oracle.slice_character_11x(lam, p)?;
    if ch.is_empty() {
        return Ok(BTreeMap::new());
    }
    Ok(decompose(&ch, p, oracle)?.parts)
}

/// GL(n-2) composition multiplicities of the full (1,1)-level of L(lam).
pub fn level_decomposition_11(
    oracle: &GramOracle,
    lam: &Weight,
    p: u64,
) -> Result<BTreeMap<Weight, u64>> {
    let ch = oracle.level_character(lam, 1, 1, p)?;
    if ch.is_empty() {
        return Ok(BTreeMap::new());
    }
    Ok(decompose(&ch, p, oracle)?.parts)
}

/// [slice : L_{n-2}(mubar)] for the (1,1)-cross slice.
pub fn slice_multiplicity_11x(
    oracle: &GramOracle,
    lam: &Weight,
    mubar: &Weight,
    p: u64,
) -> Result<u64> {
    Ok(slice_decomposition_11x(oracle, lam, p)?
        .get(mubar)
        .copied()
        .unwrap_or(0))
}

/// [level : L_{n-2}(mubar)] for the full (1,1)-level.
pub fn level_multiplicity_11(
    oracle: &GramOracle,
    lam: &Weight,
    mubar: &Weight,
    p: u64,
) -> Result<u64> {
    Ok(level_decomposition_11(oracle, lam, p)?
        .get(mubar)
        .copied()
        .unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    #[test]
    fn wedge_character_small_ranks() {
        let ch = wedge2_dual_character(2).unwrap();
        assert_eq!(ch.dim(), 1);
        assert_eq!(ch.mult(&w(&[-1, -1])), 1);
        let ch = wedge2_dual_character(3).unwrap();
        assert_eq!(ch.dim(), 3);
        for v in [[-1, -1, 0], [-1, 0, -1], [0, -1, -1]] {
            assert_eq!(ch.mult(&w(&v)), 1);
        }
        assert!(wedge2_dual_character(1).is_err());
    }

    #[test]
    fn wedge_highest_weight() {
        let n = 5;
        let ch = wedge2_dual_character(n).unwrap();
        let hw = w(&[0, 0, 0, -1, -1]);
        assert_eq!(ch.mult(&hw), 1);
        // every other weight is subdominant to it
        for v in ch.mults().keys() {
            assert!(dominance_leq(v, &hw).unwrap());
        }
    }

    #[test]
    fn multiply_by_trivial_is_identity() {
        let oracle = GramOracle::default();
        let a = oracle.simple_character(&w(&[2, 1, 0]), 3).unwrap();
        let mut triv = Character::new(3);
        triv.set_mult(w(&[0, 0, 0]), 1);
        let prod = multiply_characters(&a, &triv).unwrap();
        assert_eq!(&prod, a.as_ref());
    }

    #[test]
    fn multiply_degree_and_dimension() {
        let oracle = GramOracle::default();
        let a = oracle.simple_character(&w(&[1, 1, 0, 0]), 3).unwrap();
        let b = wedge2_dual_character(4).unwrap();
        let prod = multiply_characters(&a, &b).unwrap();
        assert_eq!(prod.dim(), a.dim() * b.dim());
        for v in prod.mults().keys() {
            assert_eq!(v.degree(), a.mults().keys().next().unwrap().degree() - 2);
        }
        assert!(multiply_characters(&b, &wedge2_dual_character(3).unwrap()).is_err());
    }

    #[test]
    fn multiply_preserves_weyl_symmetry() {
        let oracle = GramOracle::default();
        let a = oracle.simple_character(&w(&[2, 1, 0]), 3).unwrap();
        let b = wedge2_dual_character(3).unwrap();
        let prod = multiply_characters(&a, &b).unwrap();
        // all weights in one permutation class carry the same multiplicity
        for (v, &m) in prod.mults() {
            for u in crate::weights::weyl_orbit(v) {
                assert_eq!(prod.mult(&u), m, "orbit of {v} not constant");
            }
        }
    }

    #[test]
    fn decompose_single_simple() {
        let oracle = GramOracle::default();
        let ch = oracle.simple_character(&w(&[3, 1, 0]), 3).unwrap();
        let dec = decompose(&ch, 3, &oracle).unwrap();
        assert_eq!(dec.parts.len(), 1);
        assert_eq!(dec.parts[&w(&[3, 1, 0])], 1);
    }

    #[test]
    fn decompose_rank_two_example() {
        // {(1,1), (2,0), (0,2)} at p = 3 is exactly the simple character of
        // (2,0), so L(1,1) does not occur
        let oracle = GramOracle::default();
        let mut ch = Character::new(2);
        ch.set_mult(w(&[1, 1]), 1);
        ch.set_mult(w(&[2, 0]), 1);
        ch.set_mult(w(&[0, 2]), 1);
        let dec = decompose(&ch, 3, &oracle).unwrap();
        assert_eq!(dec.parts[&w(&[2, 0])], 1);
        assert_eq!(dec.parts.get(&w(&[1, 1])), None);
        // the full tensor square V (x) V has (1,1) twice; one copy peels
        // into L(2,0) and the determinant weight survives on its own
        let mut sq = Character::new(2);
        sq.set_mult(w(&[2, 0]), 1);
        sq.set_mult(w(&[1, 1]), 2);
        sq.set_mult(w(&[0, 2]), 1);
        let dec = decompose(&sq, 3, &oracle).unwrap();
        assert_eq!(dec.parts[&w(&[2, 0])], 1);
        assert_eq!(dec.parts[&w(&[1, 1])], 1);
    }

    #[test]
    fn decompose_rejects_non_character() {
        let oracle = GramOracle::default();
        let mut ch = Character::new(2);
        // Weyl-asymmetric: (2,0) without (0,2)
        ch.set_mult(w(&[2, 0]), 1);
        ch.set_mult(w(&[1, 1]), 1);
        assert!(matches!(
            decompose(&ch, 5, &oracle),
            Err(Error::NotACharacter(_))
        ));
    }

    #[test]
    fn triangularity_of_parts() {
        let oracle = GramOracle::default();
        let lam = w(&[2, 1, 0, 0]);
        let prod = multiply_characters(
            &oracle.simple_character(&lam, 3).unwrap(),
            &wedge2_dual_character(4).unwrap(),
        )
        .unwrap()
        .shift(2);
        let maximal: Vec<Weight> = prod
            .mults()
            .keys()
            .filter(|v| {
                !prod
                    .mults()
                    .keys()
                    .any(|u| u != *v && dominance_leq(v, u).unwrap())
            })
            .cloned()
            .collect();
        let dec = decompose(&prod, 3, &oracle).unwrap();
        for nu in dec.parts.keys() {
            assert!(
                maximal.iter().any(|m| dominance_leq(nu, m).unwrap()),
                "{nu} not under any maximal weight"
            );
        }
    }

    #[test]
    fn tensor_degree_grading() {
        let oracle = GramOracle::default();
        let lam = w(&[1, 1, 0, 0]);
        assert_eq!(
            tensor_multiplicity(&oracle, &lam, &w(&[1, 0, 0, 0]), 3).unwrap(),
            0
        );
    }

    #[test]
    fn tensor_wedge_smoke() {
        // lam = (1,1,0,0,0), mu = lam - eps_1 - eps_2 = 0: multiplicity 1
        let oracle = GramOracle::default();
        assert_eq!(
            tensor_multiplicity(&oracle, &w(&[1, 1, 0, 0, 0]), &w(&[0, 0, 0, 0, 0]), 3).unwrap(),
            1
        );
    }

    #[test]
    fn determinant_twist_invariance() {
        let oracle = GramOracle::default();
        for (lam, mu, p) in [
            (w(&[1, 1, 0, 0]), w(&[0, 0, 0, 0]), 3u64),
            (w(&[2, 1, 0, 0]), w(&[1, 0, 0, 0]), 5),
            (w(&[2, 2, 0, 0]), w(&[1, 1, 0, 0]), 3),
        ] {
            let base = tensor_multiplicity(&oracle, &lam, &mu, p).unwrap();
            for k in [-1i64, 1, 2] {
                let shifted = tensor_multiplicity(&oracle, &lam.shift(k), &mu.shift(k), p).unwrap();
                assert_eq!(base, shifted, "lam={lam} mu={mu} p={p} k={k}");
            }
        }
    }

    #[test]
    fn slice_and_level_multiplicities_exist() {
        let oracle = GramOracle::default();
        let lam = w(&[1, 1, 0, 0]);
        // the slice character of L(1,1,0,0) is the trivial GL(2) character
        assert_eq!(
            slice_multiplicity_11x(&oracle, &lam, &w(&[0, 0]), 3).unwrap(),
            1
        );
        assert_eq!(
            level_multiplicity_11(&oracle, &lam, &w(&[0, 0]), 3).unwrap(),
            1
        );
    }
}
