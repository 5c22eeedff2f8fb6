//! The recursive X/Y/M/W matrix constructions, their mod-p ranks, the
//! t-recursion, and the multiplicity pipeline built on them.

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::weights::{is_dominant, Weight};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

fn check_xy_indices(i: usize, j: usize, u: usize, k: usize, lam: &Weight) -> Result<()> {
    let n = lam.n();
    if !(1 <= i && i <= k && k < j && j <= n) {
        return Err(Error::IndexOutOfRange {
            name: "k",
            value: k as i64,
            min: i as i64,
            max: j as i64 - 1,
        });
    }
    if !(i <= u && u < j) {
        return Err(Error::IndexOutOfRange {
            name: "u",
            value: u as i64,
            min: i as i64,
            max: j as i64 - 1,
        });
    }
    Ok(())
}

/// Labels for the recursion's row/column order: subsets of the open interval
/// (i, j), adjoined element by element from i+1 up to j-1.
fn subset_labels(i: usize, j: usize, u: usize) -> Vec<String> {
    let mut sets: Vec<Vec<usize>> = vec![vec![]];
    for m in i + 1..=i + (j - 1 - u) {
        let mut more: Vec<Vec<usize>> = sets
            .iter()
            .map(|s| {
                let mut t = s.clone();
                t.push(m);
                t
            })
            .collect();
        sets.append(&mut more);
    }
    sets.iter()
        .map(|s| {
            format!(
                "{{{}}}",
                s.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect()
}

/// The matrix X_u^{i,j}(k): base X_{j-1}^{i,j}(k) = lam_k - lam_j, doubling in
/// size at each recursion step down from u = j-1.
pub fn build_x(i: usize, j: usize, u: usize, k: usize, lam: &Weight) -> Result<IntMatrix> {
    check_xy_indices(i, j, u, k, lam)?;
    let mut out = build_x_unchecked(i, j, u, k, lam);
    let labels = subset_labels(i, j, u);
    out.row_labels = labels.clone();
    out.col_labels = labels;
    Ok(out)
}

fn build_x_unchecked(i: usize, j: usize, u: usize, k: usize, lam: &Weight) -> IntMatrix {
    if u == j - 1 {
        return IntMatrix::from_rows(vec![vec![lam.entry(k) - lam.entry(j)]]);
    }
    let ustar = j - 1 - u + i;
    let a = build_x_unchecked(i, j, u + 1, k, lam);
    let b = build_y_unchecked(i, j, u + 1, ustar, lam);
    let s = a.add(&b);
    let scalar = lam.entry(ustar) - lam.entry(j); // X_{j-1}^{i,j}(u*)
    let d = s.scale(scalar);
    IntMatrix::from_blocks(&[vec![&a, &b], vec![&s, &d]])
}

/// The matrix Y_u^{i,j}(k): base Y_{j-1}^{i,j}(k) = -(lam_k - lam_j).
pub fn build_y(i: usize, j: usize, u: usize, k: usize, lam: &Weight) -> Result<IntMatrix> {
    check_xy_indices(i, j, u, k, lam)?;
    let mut out = build_y_unchecked(i, j, u, k, lam);
    let labels = subset_labels(i, j, u);
    out.row_labels = labels.clone();
    out.col_labels = labels;
    Ok(out)
}

fn build_y_unchecked(i: usize, j: usize, u: usize, k: usize, lam: &Weight) -> IntMatrix {
    if u == j - 1 {
        return IntMatrix::from_rows(vec![vec![-(lam.entry(k) - lam.entry(j))]]);
    }
    let ustar = j - 1 - u + i;
    let a = build_y_unchecked(i, j, u + 1, k, lam);
    let na = a.neg();
    let xi = build_x_unchecked(i, j, u + 1, i, lam);
    let yus = build_y_unchecked(i, j, u + 1, ustar, lam);
    let s = xi.add(&yus);
    let scalar = -(lam.entry(k) - lam.entry(j)); // Y_{j-1}^{i,j}(k)
    let d = s.scale(scalar);
    let z = IntMatrix::zeros(s.rows, s.cols);
    IntMatrix::from_blocks(&[vec![&a, &na], vec![&z, &d]])
}

fn check_mw_preconditions(i: usize, lam: &Weight) -> Result<usize> {
    let n = lam.n();
    if !is_dominant(lam) {
        return Err(Error::NotDominant(lam.clone()));
    }
    if lam.is_zero() {
        return Err(Error::ZeroWeight);
    }
    if n < 3 || lam.entry(n) != 0 || lam.entry(n - 1) != 0 {
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
    Ok(s)
}

/// The 3x3-block matrix M^i, with X := X_{i+1}^{i,s+1}(i), Y := Y_{i+1}^{i,s+1}(s).
pub fn build_m(i: usize, lam: &Weight) -> Result<IntMatrix> {
    let s = check_mw_preconditions(i, lam)?;
    let ls = lam.entry(s);
    let x = build_x_unchecked(i, s + 1, i + 1, i, lam);
    let y = build_y_unchecked(i, s + 1, i + 1, s, lam);
    let sum = x.add(&y);
    let ls_x = x.scale(ls);
    let l1_y = y.scale(ls - 1);
    let ls_sum = sum.scale(ls);
    let lsl1_sum = sum.scale(ls * (ls - 1));
    let mut out = IntMatrix::from_blocks(&[
        vec![&ls_x, &y, &l1_y],
        vec![&y, &ls_x, &l1_y],
        vec![&ls_sum, &ls_sum, &lsl1_sum],
    ]);
    let labels: Vec<String> = ["x1", "x2", "x3"]
        .iter()
        .flat_map(|part| {
            subset_labels(i, s + 1, i + 1)
                .into_iter()
                .map(move |s| format!("{s}{part}"))
        })
        .collect();
    out.row_labels = labels.clone();
    out.col_labels = labels;
    Ok(out)
}

/// The 2x2-block matrix W^i; the half-entry lam_s (lam_s - 1) / 2 is an exact
/// integer and the division happens before any mod-p reduction.
pub fn build_w(i: usize, lam: &Weight) -> Result<IntMatrix> {
    let s = check_mw_preconditions(i, lam)?;
    let ls = lam.entry(s);
    let x = build_x_unchecked(i, s + 1, i + 1, i, lam);
    let y = build_y_unchecked(i, s + 1, i + 1, s, lam);
    let sum = x.add(&y);
    let a = x.scale(ls).add(&y);
    let b = y.scale(ls - 1);
    let c = sum.scale(ls);
    let d = sum.scale(ls * (ls - 1)).div_exact(2);
    let mut out = IntMatrix::from_blocks(&[vec![&a, &b], vec![&c, &d]]);
    let labels: Vec<String> = ["x1", "x2"]
        .iter()
        .flat_map(|part| {
            subset_labels(i, s + 1, i + 1)
                .into_iter()
                .map(move |s| format!("{s}{part}"))
        })
        .collect();
    out.row_labels = labels.clone();
    out.col_labels = labels;
    Ok(out)
}

/// Parameters of one recursively built matrix, for inspection and snapshots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockMatrixSpec {
    pub kind: BlockKind,
    pub i: usize,
    pub j: Option<usize>,
    pub u: Option<usize>,
    pub k: Option<usize>,
    pub lam: Weight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BlockKind {
    X,
    Y,
    M,
    W,
}

impl BlockMatrixSpec {
    pub fn realize(&self) -> Result<IntMatrix> {
        match self.kind {
            BlockKind::X => build_x(
                self.i,
                self.j.expect("X needs j"),
                self.u.expect("X needs u"),
                self.k.expect("X needs k"),
                &self.lam,
            ),
            BlockKind::Y => build_y(
                self.i,
                self.j.expect("Y needs j"),
                self.u.expect("Y needs u"),
                self.k.expect("Y needs k"),
                &self.lam,
            ),
            BlockKind::M => build_m(self.i, &self.lam),
            BlockKind::W => build_w(self.i, &self.lam),
        }
    }
}

/// One x_{i,j} value: the mod-p rank of X_i^{i,j}(i).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct XRank {
    pub i: usize,
    pub j: usize,
    pub rank: usize,
}

/// x_{i,r} for i < r <= s-1 together with m_s^i and w_s^i.
pub fn ranks(lam: &Weight, p: u64, i: usize) -> Result<(Vec<XRank>, usize, usize)> {
    let s = check_mw_preconditions(i, lam)?;
    let mut xs = Vec::new();
    for r in i + 1..s {
        xs.push(XRank {
            i,
            j: r,
            rank: build_x(i, r, i, i, lam)?.rank_mod_p(p),
        });
    }
    let m = build_m(i, lam)?.rank_mod_p(p);
    let w = build_w(i, lam)?.rank_mod_p(p);
    Ok((xs, m, w))
}

/// The t-recursion: t_s^{s-1} = m - w at the top, and
/// t_s^r = (m_s^r - w_s^r) - sum over q of t_s^q x_{r,q}, computed downward.
pub fn t_values(lam: &Weight, p: u64, i: usize) -> Result<BTreeMap<usize, i64>> {
    let s = check_mw_preconditions(i, lam)?;
    let mut t: BTreeMap<usize, i64> = BTreeMap::new();
    for r in (i..s).rev() {
        let m = build_m(r, lam)?.rank_mod_p(p) as i64;
        let w = build_w(r, lam)?.rank_mod_p(p) as i64;
        let mut acc = m - w;
        for q in r + 1..s {
            let x = build_x(r, q, r, r, lam)?.rank_mod_p(p) as i64;
            acc -= t[&q] * x;
        }
        t.insert(r, acc);
    }
    Ok(t)
}

/// The named hypothesis flags of the multiplicity theorem. The last flag
/// (the target weight lam - eps_i - eps_s must itself be dominant) is
/// implicit in the theorem statement: without it the composition factor does
/// not exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypotheses {
    pub p_odd: bool,
    pub s_lt_n_minus_1: bool,
    pub lambda_s_one_or_s_lt_n_minus_2: bool,
    pub s_minus_lambda_s_not_n_mod_p: bool,
    pub i_minus_lambda_i_not_n_mod_p: bool,
    pub target_dominant: bool,
}

impl Hypotheses {
    pub fn all(&self) -> bool {
        self.p_odd
            && self.s_lt_n_minus_1
            && self.lambda_s_one_or_s_lt_n_minus_2
            && self.s_minus_lambda_s_not_n_mod_p
            && self.i_minus_lambda_i_not_n_mod_p
            && self.target_dominant
    }
}

/// The full outcome of the rank-formula pipeline for one (lambda, i, p).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityReport {
    pub lambda: Weight,
    pub p: u64,
    pub i: usize,
    pub s: usize,
    /// Every x_{r,q} rank consumed by the t-recursion.
    pub x: Vec<XRank>,
    /// m_s^i for the requested i.
    pub m: usize,
    /// w_s^i for the requested i.
    pub w: usize,
    /// t_s^r for i <= r <= s-1, as (r, value) pairs in increasing r.
    pub t: Vec<(usize, i64)>,
    pub hypotheses: Hypotheses,
    /// The multiplicity claim t_s^i, present only when every hypothesis holds.
    pub multiplicity: Option<i64>,
    pub applicable: bool,
}

impl MultiplicityReport {
    pub fn t_value(&self, r: usize) -> Option<i64> {
        self.t.iter().find(|&&(q, _)| q == r).map(|&(_, v)| v)
    }

    /// The weight lam - eps_i - eps_s whose composition multiplicity is
    /// reported.
    pub fn target_weight(&self) -> Weight {
        let n = self.lambda.n();
        self.lambda
            .sub(&Weight::eps(n, self.i))
            .sub(&Weight::eps(n, self.s))
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Run the whole pipeline for (lambda, i, p): all ranks, the t-table, the
/// hypothesis checklist, and the final multiplicity claim when it applies.
pub fn multiplicity_main(lam: &Weight, i: usize, p: u64) -> Result<MultiplicityReport> {
    if !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let s = check_mw_preconditions(i, lam)?;
    let n = lam.n();
    let t_map = t_values(lam, p, i)?;
    let (_, m, w) = ranks(lam, p, i)?;
    let mut x = Vec::new();
    for r in i..s {
        for q in r + 1..s {
            x.push(XRank {
                i: r,
                j: q,
                rank: build_x(r, q, r, r, lam)?.rank_mod_p(p),
            });
        }
    }
    x.sort_by_key(|e| (e.i, e.j));
    x.dedup();
    let target = lam.sub(&Weight::eps(n, i)).sub(&Weight::eps(n, s));
    let modp = |v: i64| v.rem_euclid(p as i64);
    let hypotheses = Hypotheses {
        p_odd: p > 2,
        s_lt_n_minus_1: s < n - 1,
        lambda_s_one_or_s_lt_n_minus_2: lam.entry(s) == 1 || s < n - 2,
        s_minus_lambda_s_not_n_mod_p: modp(s as i64 - lam.entry(s)) != modp(n as i64),
        i_minus_lambda_i_not_n_mod_p: modp(i as i64 - lam.entry(i)) != modp(n as i64),
        target_dominant: is_dominant(&target),
    };
    let applicable = hypotheses.all();
    let t_i = t_map[&i];
    Ok(MultiplicityReport {
        lambda: lam.clone(),
        p,
        i,
        s,
        x,
        m,
        w,
        t: t_map.into_iter().collect(),
        hypotheses,
        multiplicity: applicable.then_some(t_i),
        applicable,
    })
}

/// The closing closed form at i = s-1: the multiplicity is 0 exactly when
/// p divides lam_s or p divides lam_{s-1} + 1, else 1.
pub fn closed_form_s_minus_1(lam: &Weight, p: u64) -> Result<i64> {
    let s = check_mw_preconditions(1, lam)?;
    let ls = lam.entry(s);
    let ls1 = lam.entry(s - 1);
    if ls.rem_euclid(p as i64) == 0 || (ls1 + 1).rem_euclid(p as i64) == 0 {
        Ok(0)
    } else {
        Ok(1)
    }
}
