//! Oracle sweeps: exhaustively compare the rank-formula pipeline against the
//! Gram and character oracles over a bounded family of weights and primes.

use crate::error::Result;
use crate::gram::{gram_rank_mod_p, GramOracle};
use crate::rank_formulas::{
    build_m, build_w, build_x, closed_form_s_minus_1, multiplicity_main, t_values,
};
use crate::tensor::{
    level_multiplicity_11, slice_decomposition_11x, tensor_decomposition, tensor_multiplicity,
};
use crate::weights::{distinguished, is_dominant, linked, Weight};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Bounds of a verification sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepParams {
    pub n_max: usize,
    pub deg_max: i64,
    pub primes: Vec<u64>,
}

impl Default for SweepParams {
    fn default() -> Self {
        SweepParams {
            n_max: 5,
            deg_max: 6,
            primes: vec![3, 5, 7],
        }
    }
}

/// One checked instance: the formula value against the oracle value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub lambda: Weight,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<Weight>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
    pub p: u64,
    pub formula: i64,
    pub oracle: i64,
    pub ok: bool,
}

/// Outcome of one theorem's sweep, with every instance recorded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSection {
    pub checked: usize,
    pub instances: Vec<Instance>,
}

impl CheckSection {
    fn new() -> Self {
        CheckSection {
            checked: 0,
            instances: Vec::new(),
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn record(
        &mut self,
        lambda: &Weight,
        mu: Option<Weight>,
        i: Option<usize>,
        j: Option<usize>,
        p: u64,
        formula: i64,
        oracle: i64,
    ) {
        self.checked += 1;
        self.instances.push(Instance {
            lambda: lambda.clone(),
            mu,
            i,
            j,
            p,
            formula,
            oracle,
            ok: formula == oracle,
        });
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &Instance> {
        self.instances.iter().filter(|x| !x.ok)
    }

    pub fn passed(&self) -> bool {
        self.instances.iter().all(|x| x.ok)
    }
}

/// The recorded values of the rank-5 characteristic-7 boundary instance:
/// the tensor multiplicity agrees with the level multiplicity and differs
/// from the slice multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleCheck {
    pub lambda: Weight,
    pub mu: Weight,
    pub p: u64,
    pub tensor: u64,
    pub level: u64,
    pub slice: u64,
    pub tensor_equals_level: bool,
    pub level_differs_from_slice: bool,
}

impl CounterexampleCheck {
    pub fn passed(&self) -> bool {
        self.tensor_equals_level && self.level_differs_from_slice
    }
}

/// Full report of a verification run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub params: SweepParams,
    pub rank_theorem: CheckSection,
    pub closed_form: CheckSection,
    pub multiplicity_theorem: CheckSection,
    pub branching_theorem: CheckSection,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<CounterexampleCheck>,
    pub passed: bool,
}

/// Weakly decreasing nonnegative tuples with the given number of parts and
/// degree, largest first.
fn partition_shapes(parts: usize, d: i64) -> Vec<Vec<i64>> {
    fn rec(acc: &mut Vec<i64>, parts: usize, rem: i64, out: &mut Vec<Vec<i64>>) {
        if acc.len() == parts {
            if rem == 0 {
                out.push(acc.clone());
            }
            return;
        }
        let hi = if acc.is_empty() {
            rem
        } else {
            acc[acc.len() - 1].min(rem)
        };
        for v in (0..=hi).rev() {
            acc.push(v);
            rec(acc, parts, rem - v, out);
            acc.pop();
        }
    }
    if parts == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), parts, d, &mut out);
    out
}

/// Dominant weights of length n with the last two entries zero and degree in
/// 1..=deg_max.
pub fn sweep_lambdas(n: usize, deg_max: i64) -> Vec<Weight> {
    assert!(n >= 3);
    let mut out = Vec::new();
    for d in 1..=deg_max {
        for mut shape in partition_shapes(n - 2, d) {
            shape.extend([0, 0]);
            out.push(Weight::new(shape));
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Dominant weights of length n, degree d, whose last three entries are zero.
fn mu_candidates(n: usize, d: i64) -> Vec<Weight> {
    if d < 0 || n < 3 {
        return Vec::new();
    }
    partition_shapes(n - 3, d)
        .into_iter()
        .map(|mut s| {
            s.extend([0, 0, 0]);
            Weight::new(s)
        })
        .collect()
}

/// Run every sweep. The oracle's character cache carries all the heavy work
/// across instances.
pub fn run_verify(params: &SweepParams, oracle: &GramOracle) -> Result<VerifyReport> {
    let mut rank_theorem = CheckSection::new();
    let mut closed_form = CheckSection::new();
    let mut multiplicity_theorem = CheckSection::new();
    let mut branching_theorem = CheckSection::new();

    for n in 3..=params.n_max {
        for lam in sweep_lambdas(n, params.deg_max) {
            let s = lam.last_nonzero().expect("sweep weights are nonzero");
            for &p in &params.primes {
                check_rank_theorem(&lam, s, p, oracle, &mut rank_theorem)?;
                if s >= 2 {
                    check_closed_form(&lam, s, p, &mut closed_form)?;
                }
                // composition multiplicities, computed lazily once per (lam, p)
                let mut tensor_parts: Option<BTreeMap<Weight, u64>> = None;
                if s >= 2 {
                    check_multiplicity_theorem(
                        &lam,
                        s,
                        p,
                        oracle,
                        &mut tensor_parts,
                        &mut multiplicity_theorem,
                    )?;
                }
                check_branching_theorem(
                    &lam,
                    p,
                    oracle,
                    &mut tensor_parts,
                    &mut branching_theorem,
                )?;
            }
        }
    }

    let counterexample = if params.n_max >= 5 && params.deg_max >= 4 && params.primes.contains(&7) {
        Some(run_counterexample(oracle)?)
    } else {
        None
    };

    let passed = rank_theorem.passed()
        && closed_form.passed()
        && multiplicity_theorem.passed()
        && branching_theorem.passed()
        && counterexample
            .as_ref()
            .is_none_or(CounterexampleCheck::passed);
    Ok(VerifyReport {
        params: params.clone(),
        rank_theorem,
        closed_form,
        multiplicity_theorem,
        branching_theorem,
        counterexample,
        passed,
    })
}

/// Rank formulas against Gram ranks at the exact (unsorted) weights.
fn check_rank_theorem(
    lam: &Weight,
    s: usize,
    p: u64,
    oracle: &GramOracle,
    section: &mut CheckSection,
) -> Result<()> {
    let n = lam.n();
    let budget = oracle.budget();
    for i in 1..=s {
        for j in i + 1..=s + 1 {
            let formula = build_x(i, j, i, i, lam)?.rank_mod_p(p);
            let mu = lam.sub(&Weight::alpha_interval(n, i, j));
            let dim = gram_rank_mod_p(lam, &mu, p, budget)?;
            section.record(
                lam,
                Some(mu),
                Some(i),
                Some(j),
                p,
                formula as i64,
                dim as i64,
            );
        }
    }
    for i in 1..s {
        let d = distinguished(lam, i)?;
        let m = build_m(i, lam)?.rank_mod_p(p);
        let dim_mu = gram_rank_mod_p(lam, &d.mu_up_i, p, budget)?;
        section.record(
            lam,
            Some(d.mu_up_i.clone()),
            Some(i),
            None,
            p,
            m as i64,
            dim_mu as i64,
        );
        let w = build_w(i, lam)?.rank_mod_p(p);
        let dim_om = gram_rank_mod_p(lam, &d.omega_up_i, p, budget)?;
        section.record(
            lam,
            Some(d.omega_up_i.clone()),
            Some(i),
            None,
            p,
            w as i64,
            dim_om as i64,
        );
    }
    Ok(())
}

fn check_closed_form(lam: &Weight, s: usize, p: u64, section: &mut CheckSection) -> Result<()> {
    let t = t_values(lam, p, s - 1)?[&(s - 1)];
    let cf = closed_form_s_minus_1(lam, p)?;
    section.record(lam, None, Some(s - 1), None, p, t, cf);
    Ok(())
}

fn check_multiplicity_theorem(
    lam: &Weight,
    s: usize,
    p: u64,
    oracle: &GramOracle,
    tensor_parts: &mut Option<BTreeMap<Weight, u64>>,
    section: &mut CheckSection,
) -> Result<()> {
    let n = lam.n();
    for i in 1..s {
        let report = multiplicity_main(lam, i, p)?;
        let Some(formula) = report.multiplicity else {
            continue;
        };
        let mu = lam.sub(&Weight::eps(n, i)).sub(&Weight::eps(n, s));
        if tensor_parts.is_none() {
            *tensor_parts = Some(tensor_decomposition(oracle, lam, p)?);
        }
        let observed = tensor_parts
            .as_ref()
            .unwrap()
            .get(&mu)
            .copied()
            .unwrap_or(0) as i64;
        if formula == observed {
            assert!(formula >= 0, "multiplicities are nonnegative");
        }
        section.record(lam, Some(mu), Some(i), None, p, formula, observed);
    }
    Ok(())
}

fn check_branching_theorem(
    lam: &Weight,
    p: u64,
    oracle: &GramOracle,
    tensor_parts: &mut Option<BTreeMap<Weight, u64>>,
    section: &mut CheckSection,
) -> Result<()> {
    let n = lam.n();
    let mut slice_parts: Option<BTreeMap<Weight, u64>> = None;
    for mu in mu_candidates(n, lam.degree() - 2) {
        // the linkage condition: mu not linked to any lam - eps_i - eps_n
        let mut excluded = false;
        for i in 1..n {
            let v = lam.sub(&Weight::eps(n, i)).sub(&Weight::eps(n, n));
            if is_dominant(&v) && linked(&mu, &v, p)? {
                excluded = true;
                break;
            }
        }
        if excluded {
            continue;
        }
        if tensor_parts.is_none() {
            *tensor_parts = Some(tensor_decomposition(oracle, lam, p)?);
        }
        if slice_parts.is_none() {
            slice_parts = Some(slice_decomposition_11x(oracle, lam, p)?);
        }
        let lhs = tensor_parts
            .as_ref()
            .unwrap()
            .get(&mu)
            .copied()
            .unwrap_or(0);
        let rhs = slice_parts
            .as_ref()
            .unwrap()
            .get(&mu.truncate2())
            .copied()
            .unwrap_or(0);
        section.record(lam, Some(mu), None, None, p, lhs as i64, rhs as i64);
    }
    Ok(())
}

/// The boundary instance where the linkage condition fails: n = 5, p = 7,
/// lambda = (4,0,0,0,0), mu = (2,0,0,0,0).
pub fn run_counterexample(oracle: &GramOracle) -> Result<CounterexampleCheck> {
    let lam = Weight::new(vec![4, 0, 0, 0, 0]);
    let mu = Weight::new(vec![2, 0, 0, 0, 0]);
    let p = 7;
    let tensor = tensor_multiplicity(oracle, &lam, &mu, p)?;
    let mubar = mu.truncate2();
    let level = level_multiplicity_11(oracle, &lam, &mubar, p)?;
    let slice = crate::tensor::slice_multiplicity_11x(oracle, &lam, &mubar, p)?;
    Ok(CounterexampleCheck {
        lambda: lam,
        mu,
        p,
        tensor,
        level,
        slice,
        tensor_equals_level: tensor == level,
        level_differs_from_slice: level != slice,
    })
}
