//! General straightening of words in the generators into the normal order
//! F-part, H-part, E-part, over exact rationals.
//!
//! Every rewrite is an instance of the single matrix-unit commutator
//! [y_ab, y_cd] = d_bc y_ad - d_da y_cb, of which the listed divided-power
//! relations are consequences.

use super::{Budget, PbwMonomial, RootPair};
use crate::error::{Error, Result};
use crate::weights::Weight;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// One generator symbol of an input word, with divided-power exponent where
/// applicable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordSymbol {
    /// F_{ij}^{(r)}
    F(RootPair, u32),
    /// H_i
    H(usize),
    /// E_{ij}^{(r)}
    E(RootPair, u32),
}

/// A single generator letter. The ordering is the normal order: all F letters
/// below all H letters below all E letters, with the root order inside the F
/// and E families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Letter {
    F(RootPair),
    H(usize),
    E(RootPair),
}

impl Letter {
    fn rank(&self) -> (u8, usize, usize) {
        match *self {
            Letter::F(r) => (0, r.j, r.i),
            Letter::H(a) => (1, a, 0),
            Letter::E(r) => (2, r.j, r.i),
        }
    }

    /// Matrix-unit coordinates (row, col) of the underlying y_{ab}.
    fn matrix_unit(&self) -> (usize, usize) {
        match *self {
            Letter::F(r) => (r.j, r.i),
            Letter::H(a) => (a, a),
            Letter::E(r) => (r.i, r.j),
        }
    }

    fn from_matrix_unit(a: usize, b: usize) -> Letter {
        use std::cmp::Ordering::*;
        match a.cmp(&b) {
            Less => Letter::E(RootPair::new(a, b)),
            Equal => Letter::H(a),
            Greater => Letter::F(RootPair::new(b, a)),
        }
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rank().cmp(&other.rank())
    }
}

/// [y_ab, y_cd] = d_bc y_ad - d_da y_cb as a list of (sign, letter).
fn commutator(x: Letter, y: Letter) -> Vec<(i8, Letter)> {
    let (a, b) = x.matrix_unit();
    let (c, d) = y.matrix_unit();
    let mut out = Vec::with_capacity(2);
    if b == c {
        out.push((1, Letter::from_matrix_unit(a, d)));
    }
    if d == a {
        out.push((-1, Letter::from_matrix_unit(c, b)));
    }
    out
}

/// A normal-ordered basis monomial: F-part and E-part as divided-power PBW
/// monomials, H-part as a plain-power exponent vector indexed by 1..=n.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct NormalTerm {
    pub f_part: Vec<(RootPair, u32)>,
    pub h_part: Vec<u32>,
    pub e_part: Vec<(RootPair, u32)>,
}

impl NormalTerm {
    pub fn f_monomial(&self) -> PbwMonomial {
        PbwMonomial::new(self.f_part.clone())
    }

    /// Net weight of the monomial acting on a weight vector.
    pub fn weight(&self, n: usize) -> Weight {
        let mut v = vec![0i64; n];
        for &(r, k) in &self.f_part {
            v[r.i - 1] -= k as i64;
            v[r.j - 1] += k as i64;
        }
        for &(r, k) in &self.e_part {
            v[r.i - 1] += k as i64;
            v[r.j - 1] -= k as i64;
        }
        Weight(v)
    }
}

impl fmt::Display for NormalTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for &(r, e) in &self.f_part {
            parts.push(if e > 1 {
                format!("F{r}^({e})")
            } else {
                format!("F{r}")
            });
        }
        for (k, &e) in self.h_part.iter().enumerate() {
            if e > 0 {
                parts.push(if e > 1 {
                    format!("H{}^{}", k + 1, e)
                } else {
                    format!("H{}", k + 1)
                });
            }
        }
        for &(r, e) in &self.e_part {
            parts.push(if e > 1 {
                format!("E{r}^({e})")
            } else {
                format!("E{r}")
            });
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// An element of the hyperalgebra over the rationals, stored in normal order
/// with no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperElement {
    pub n: usize,
    pub terms: BTreeMap<NormalTerm, BigRational>,
}

impl HyperElement {
    pub fn zero(n: usize) -> Self {
        HyperElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    fn add_term(&mut self, t: NormalTerm, c: BigRational) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
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

    pub fn add(&self, other: &HyperElement) -> HyperElement {
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &HyperElement) -> HyperElement {
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> HyperElement {
        let mut out = HyperElement::zero(self.n);
        for (t, v) in &self.terms {
            out.add_term(t.clone(), v * c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the highest weight vector in (this element) v+, where
    /// v+ has weight lam: terms with any E or F factor vanish and H_a acts
    /// as lam_a.
    pub fn highest_weight_eval(&self, lam: &Weight) -> BigRational {
        let mut out = BigRational::zero();
        for (t, c) in &self.terms {
            if !t.f_part.is_empty() || !t.e_part.is_empty() {
                continue;
            }
            let mut v = c.clone();
            for (a, &k) in t.h_part.iter().enumerate() {
                for _ in 0..k {
                    v *= BigRational::from_integer(BigInt::from(lam.0[a]));
                }
            }
            out += v;
        }
        out
    }
}

fn factorial(r: u32) -> BigInt {
    let mut out = BigInt::one();
    for k in 2..=r as u64 {
        out *= k;
    }
    out
}

/// Rewrite a word of generator symbols into normal-ordered form over the
/// rationals. `n` is the GL(n) rank; every index in the word must be <= n.
pub fn normal_order(word: &[WordSymbol], n: usize, budget: &Budget) -> Result<HyperElement> {
    // expand divided powers into letters, collecting the 1/r! normalization
    let mut letters: Vec<Letter> = Vec::new();
    let mut denom = BigInt::one();
    for sym in word {
        match *sym {
            WordSymbol::F(r, e) => {
                assert!(r.j <= n);
                denom *= factorial(e);
                letters.extend(std::iter::repeat_n(Letter::F(r), e as usize));
            }
            WordSymbol::H(a) => {
                assert!(1 <= a && a <= n);
                letters.push(Letter::H(a));
            }
            WordSymbol::E(r, e) => {
                assert!(r.j <= n);
                denom *= factorial(e);
                letters.extend(std::iter::repeat_n(Letter::E(r), e as usize));
            }
        }
    }
    let scale = BigRational::new(BigInt::one(), denom);

    let mut pending: HashMap<Vec<Letter>, BigRational> = HashMap::new();
    pending.insert(letters, scale);
    let mut sorted_words: HashMap<Vec<Letter>, BigRational> = HashMap::new();
    let mut steps: u64 = 0;

    while let Some(word) = pending.keys().next().cloned() {
        let coef = pending.remove(&word).unwrap();
        if coef.is_zero() {
            continue;
        }
        match word.windows(2).position(|w| w[0] > w[1]) {
            None => {
                *sorted_words.entry(word).or_insert_with(BigRational::zero) += coef;
            }
            Some(k) => {
                steps += 1;
                if steps > budget.max_steps {
                    return Err(Error::BudgetExceeded {
                        what: "straightening steps",
                        used: steps,
                        limit: budget.max_steps,
                    });
                }
                let mut swapped = word.clone();
                swapped.swap(k, k + 1);
                *pending.entry(swapped).or_insert_with(BigRational::zero) += coef.clone();
                for (sign, g) in commutator(word[k], word[k + 1]) {
                    let mut shorter: Vec<Letter> = Vec::with_capacity(word.len() - 1);
                    shorter.extend_from_slice(&word[..k]);
                    shorter.push(g);
                    shorter.extend_from_slice(&word[k + 2..]);
                    let c = if sign > 0 {
                        coef.clone()
                    } else {
                        -coef.clone()
                    };
                    *pending.entry(shorter).or_insert_with(BigRational::zero) += c;
                }
            }
        }
    }

    // collect sorted letter words into divided-power normal terms
    let mut out = HyperElement::zero(n);
    for (word, coef) in sorted_words {
        if coef.is_zero() {
            continue;
        }
        let mut f_part: Vec<(RootPair, u32)> = Vec::new();
        let mut h_part = vec![0u32; n];
        let mut e_part: Vec<(RootPair, u32)> = Vec::new();
        let mut conversion = BigInt::one();
        for l in word {
            match l {
                Letter::F(r) => match f_part.last_mut() {
                    Some((r0, e)) if *r0 == r => *e += 1,
                    _ => f_part.push((r, 1)),
                },
                Letter::H(a) => h_part[a - 1] += 1,
                Letter::E(r) => match e_part.last_mut() {
                    Some((r0, e)) if *r0 == r => *e += 1,
                    _ => e_part.push((r, 1)),
                },
            }
        }
        // plain powers X^r = r! X^(r)
        for &(_, e) in f_part.iter().chain(e_part.iter()) {
            conversion *= factorial(e);
        }
        out.add_term(
            NormalTerm {
                f_part,
                h_part,
                e_part,
            },
            coef * BigRational::from_integer(conversion),
        );
    }
    Ok(out)
}
