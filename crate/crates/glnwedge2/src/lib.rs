//! Exact composition multiplicities for GL(n) tensor products with the wedge
//! square of the dual natural module, in odd characteristic.
//!
//! The crate has two independent computation routes and exists to check one
//! against the other:
//!
//! * [`rank_formulas`] builds small integer matrices by a recursion in the
//!   entries of lambda and reads composition multiplicities off their mod-p
//!   ranks (the t-values).
//! * [`gram`] and [`tensor`] provide the brute-force ground truth: weight
//!   space dimensions as mod-p ranks of hyperalgebra Gram matrices, full
//!   simple characters, and tensor-product decompositions obtained by
//!   peeling characters.
//!
//! [`verify`] sweeps both routes over all small lambdas and primes and
//! reports any disagreement. Start with the `examples/` directory: each file
//! is a runnable tour of one capability. A thin `glnwedge2` binary exposes
//! the same entry points as subcommands.

pub mod cache;
pub mod error;
pub mod gram;
pub mod hyperalgebra;
pub mod matrix;
pub mod rank_formulas;
pub mod tensor;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use gram::{gram_matrix, gram_rank_mod_p, Character, GramOracle};
pub use hyperalgebra::{
    enumerate_pbw, normal_order, pairing, transpose, Budget, EWord, PbwMonomial, RootPair,
};
pub use matrix::IntMatrix;
pub use rank_formulas::{
    build_m, build_w, build_x, build_y, closed_form_s_minus_1, multiplicity_main, ranks, t_values,
    MultiplicityReport,
};
pub use tensor::{
    decompose, level_multiplicity_11, multiply_characters, slice_multiplicity_11x,
    tensor_multiplicity, wedge2_dual_character, Decomposition,
};
pub use verify::{run_verify, SweepParams, VerifyReport};
pub use weights::{
    cont, distinguished, dominance_leq, is_dominant, linked, removable_indices, removable_pairs,
    LinkageClass, Weight,
};
