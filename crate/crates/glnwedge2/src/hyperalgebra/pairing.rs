//! Evaluation of E-words against F-monomials on a highest weight vector.
//!
//! The production path keeps the state as an exact-integer combination of
//! lowering monomials applied to v+ and feeds the raising letters through one
//! at a time; every intermediate commutator has integer coefficients, and the
//! divided-power normalization 1/(r! ...) is divided out at the very end with
//! an exactness check.

use super::normal_order::{normal_order, WordSymbol};
use super::{Budget, EWord, PbwMonomial, RootPair};
use crate::error::{Error, Result};
use crate::weights::Weight;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::HashMap;

type FState = HashMap<Vec<RootPair>, BigInt>;

fn root_key(r: RootPair) -> (usize, usize) {
    (r.j, r.i)
}

/// [F_{ij}, F_{kl}] = d_il F_{kj} - d_kj F_{il} (indices as matrix units y_ji, y_lk).
fn comm_ff(x: RootPair, y: RootPair) -> Option<(i8, RootPair)> {
    if x.i == y.j {
        Some((1, RootPair::new(y.i, x.j)))
    } else if y.i == x.j {
        Some((-1, RootPair::new(x.i, y.j)))
    } else {
        None
    }
}

fn add_in(state: &mut FState, key: Vec<RootPair>, c: BigInt) {
    use std::collections::hash_map::Entry;
    if c.is_zero() {
        return;
    }
    match state.entry(key) {
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
        Entry::Vacant(v) => {
            v.insert(c);
        }
    }
}

/// Straighten a sequence of lowering letters into sorted monomials.
fn straighten_f(letters: &[RootPair], steps: &mut u64, budget: &Budget) -> Result<FState> {
    let mut out: FState = HashMap::new();
    let mut pending: Vec<(Vec<RootPair>, BigInt)> = vec![(letters.to_vec(), BigInt::one())];
    while let Some((word, coef)) = pending.pop() {
        if coef.is_zero() {
            continue;
        }
        match word
            .windows(2)
            .position(|w| root_key(w[0]) > root_key(w[1]))
        {
            None => add_in(&mut out, word, coef),
            Some(k) => {
                *steps += 1;
                if *steps > budget.max_steps {
                    return Err(Error::BudgetExceeded {
                        what: "straightening steps",
                        used: *steps,
                        limit: budget.max_steps,
                    });
                }
                let mut swapped = word.clone();
                swapped.swap(k, k + 1);
                if let Some((sign, g)) = comm_ff(word[k], word[k + 1]) {
                    let mut shorter = Vec::with_capacity(word.len() - 1);
                    shorter.extend_from_slice(&word[..k]);
                    shorter.push(g);
                    shorter.extend_from_slice(&word[k + 2..]);
                    let c = if sign > 0 {
                        coef.clone()
                    } else {
                        -coef.clone()
                    };
                    pending.push((shorter, c));
                }
                pending.push((swapped, coef));
            }
        }
    }
    Ok(out)
}

/// The three shapes [E_ab, F_ij] can take.
enum EfComm {
    E(RootPair),
    H(usize),
    F(RootPair),
}

/// [E_{ab}, F_{ij}] = d_bj y_ai - d_ia y_jb as signed letters.
fn comm_ef(e: RootPair, f: RootPair) -> Vec<(i8, EfComm)> {
    let (a, b) = (e.i, e.j);
    let (i, j) = (f.i, f.j);
    let mut out = Vec::with_capacity(2);
    if b == j {
        out.push((
            1,
            match a.cmp(&i) {
                std::cmp::Ordering::Less => EfComm::E(RootPair::new(a, i)),
                std::cmp::Ordering::Equal => EfComm::H(a),
                std::cmp::Ordering::Greater => EfComm::F(RootPair::new(i, a)),
            },
        ));
    }
    if i == a {
        out.push((
            -1,
            match j.cmp(&b) {
                std::cmp::Ordering::Less => EfComm::E(RootPair::new(j, b)),
                std::cmp::Ordering::Equal => EfComm::H(j),
                std::cmp::Ordering::Greater => EfComm::F(RootPair::new(b, j)),
            },
        ));
    }
    out
}

/// Expansion of E_e . (prod letters) v+ as a combination of lowering
/// monomials applied to v+, using E v+ = 0 and the weight action of H.
fn apply_e_to_letters(
    e: RootPair,
    letters: &[RootPair],
    lam: &Weight,
    steps: &mut u64,
    budget: &Budget,
) -> Result<FState> {
    let mut out: FState = HashMap::new();
    for (k, &f) in letters.iter().enumerate() {
        let prefix = &letters[..k];
        let tail = &letters[k + 1..];
        for (sign, g) in comm_ef(e, f) {
            *steps += 1;
            if *steps > budget.max_steps {
                return Err(Error::BudgetExceeded {
                    what: "pairing expansion steps",
                    used: *steps,
                    limit: budget.max_steps,
                });
            }
            let s = BigInt::from(sign);
            match g {
                EfComm::F(r) => {
                    let mut word = Vec::with_capacity(letters.len());
                    word.extend_from_slice(prefix);
                    word.push(r);
                    word.extend_from_slice(tail);
                    for (m, c) in straighten_f(&word, steps, budget)? {
                        add_in(&mut out, m, c * &s);
                    }
                }
                EfComm::H(a) => {
                    // H_a tail v+ = (lam_a - (weight of tail)_a) tail v+
                    let mut shift = 0i64;
                    for t in tail {
                        if t.i == a {
                            shift += 1;
                        }
                        if t.j == a {
                            shift -= 1;
                        }
                    }
                    let scal = BigInt::from(lam.entry(a) - shift);
                    let mut m = Vec::with_capacity(letters.len() - 1);
                    m.extend_from_slice(prefix);
                    m.extend_from_slice(tail);
                    add_in(&mut out, m, scal * &s);
                }
                EfComm::E(r) => {
                    for (m, c) in apply_e_to_letters(r, tail, lam, steps, budget)? {
                        if c.is_zero() {
                            continue;
                        }
                        let mut word = Vec::with_capacity(prefix.len() + m.len());
                        word.extend_from_slice(prefix);
                        word.extend_from_slice(&m);
                        for (m2, c2) in straighten_f(&word, steps, budget)? {
                            add_in(&mut out, m2, c2 * &c * &s);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn expand_letters(factors: &[(RootPair, u32)]) -> Vec<RootPair> {
    let mut out = Vec::new();
    for &(r, e) in factors {
        out.extend(std::iter::repeat_n(r, e as usize));
    }
    out
}

fn factorial_product(factors: &[(RootPair, u32)]) -> BigInt {
    let mut out = BigInt::one();
    for &(_, e) in factors {
        for k in 2..=e as u64 {
            out *= k;
        }
    }
    out
}

/// The coefficient n of v+ in (E-word)(F-monomial) v+ over a highest weight
/// vector of weight lam, as an exact integer. A non-integral result signals a
/// straightening bug and is reported as an error.
pub fn pairing(
    e_word: &EWord,
    f_word: &PbwMonomial,
    lam: &Weight,
    budget: &Budget,
) -> Result<BigInt> {
    let mut steps = 0u64;
    let mut state: FState = HashMap::new();
    state.insert(expand_letters(f_word.factors()), BigInt::one());
    let e_letters = expand_letters(&e_word.factors);
    for &e in e_letters.iter().rev() {
        let mut next: FState = HashMap::new();
        for (m, c) in state {
            if c.is_zero() {
                continue;
            }
            for (m2, c2) in apply_e_to_letters(e, &m, lam, &mut steps, budget)? {
                add_in(&mut next, m2, c2 * &c);
            }
        }
        state = next;
    }
    let num = state.remove(&Vec::new()).unwrap_or_else(BigInt::zero);
    let den = factorial_product(&e_word.factors) * factorial_product(f_word.factors());
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::NotIntegral {
            e: e_word.to_string(),
            f: f_word.to_string(),
            lam: lam.clone(),
            num: num.to_string(),
            den: den.to_string(),
        });
    }
    Ok(q)
}

/// Reference route: normal-order the full E.F word and read off the
/// coefficient of v+. Slower than [`pairing`] but shares no code with it past
/// the commutator table.
pub fn pairing_via_normal_order(
    e_word: &EWord,
    f_word: &PbwMonomial,
    lam: &Weight,
    budget: &Budget,
) -> Result<BigInt> {
    let n = lam.n();
    let mut word: Vec<WordSymbol> = Vec::new();
    for &(r, e) in &e_word.factors {
        word.push(WordSymbol::E(r, e));
    }
    for &(r, e) in f_word.factors() {
        word.push(WordSymbol::F(r, e));
    }
    let el = normal_order(&word, n, budget)?;
    let q = el.highest_weight_eval(lam);
    if !q.denom().is_one() {
        return Err(Error::NotIntegral {
            e: e_word.to_string(),
            f: f_word.to_string(),
            lam: lam.clone(),
            num: q.numer().to_string(),
            den: q.denom().to_string(),
        });
    }
    Ok(q.numer().clone())
}
