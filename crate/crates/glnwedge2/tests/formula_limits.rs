//! Executable record of the known limit of the fast route just beyond the
//! default sweep bounds (see the README section "Known limits of the fast
//! route"). The oracle values here are ground truth; if a future change makes
//! these instances agree, the README and this test should both be revisited.

use glnwedge2::gram::GramOracle;
use glnwedge2::tensor::slice_multiplicity_11x;
use glnwedge2::weights::Weight;
use glnwedge2::{build_x, multiplicity_main};

fn w(v: &[i64]) -> Weight {
    Weight::new(v.to_vec())
}

#[test]
fn t_recursion_disagrees_with_oracle_outside_default_bounds() {
    let oracle = GramOracle::default();

    // lambda = (5,1,1,0,0), i = 1, p = 5: every hypothesis holds...
    let lam = w(&[5, 1, 1, 0, 0]);
    let report = multiplicity_main(&lam, 1, 5).unwrap();
    assert!(report.applicable);
    assert_eq!(report.multiplicity, Some(1));

    // ...but the slice oracle (equal to the tensor multiplicity by the
    // branching identity, which holds at this instance) gives 2
    let mubar = w(&[4, 1, 0]);
    assert_eq!(slice_multiplicity_11x(&oracle, &lam, &mubar, 5).unwrap(), 2);

    // the mechanism: the correction term x_{1,2} is the rank of the X matrix
    // built from lambda itself, but the composition factor it counts lives at
    // the decremented highest weight (5,0,0), one off in the only entry that
    // matters mod 5
    let x12 = build_x(1, 2, 1, 1, &lam).unwrap().rank_mod_p(5);
    assert_eq!(x12, 1); // rank(5 - 1 mod 5)
    let inner = oracle
        .dim_simple_weight_space(&w(&[5, 0, 0]), &w(&[4, 1, 0]), 5)
        .unwrap();
    assert_eq!(inner, 0); // rank(5 - 0 mod 5)
}

#[test]
fn corrected_inner_multiplicities_close_the_gap() {
    // substituting the true inner weight multiplicities for the x ranks in
    // the downward recursion reproduces the oracle value at the boundary
    // instance
    let oracle = GramOracle::default();
    let lam = w(&[5, 1, 1, 0, 0]);
    let p = 5;
    let s = lam.last_nonzero().unwrap();
    let n = lam.n();
    let mubar = |j: usize| {
        lam.sub(&Weight::eps(n, j))
            .sub(&Weight::eps(n, s))
            .truncate2()
    };

    let mw = |i: usize| {
        let m = glnwedge2::build_m(i, &lam).unwrap().rank_mod_p(p) as i64;
        let w = glnwedge2::build_w(i, &lam).unwrap().rank_mod_p(p) as i64;
        m - w
    };
    let t2 = mw(2);
    let inner = oracle
        .dim_simple_weight_space(&mubar(2), &mubar(1), p)
        .unwrap() as i64;
    let corrected_t1 = mw(1) - t2 * inner;
    assert_eq!(
        corrected_t1 as u64,
        slice_multiplicity_11x(&oracle, &lam, &mubar(1), p).unwrap()
    );
}
