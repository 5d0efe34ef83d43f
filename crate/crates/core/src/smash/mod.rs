//! Smash products, the L-R-smash product, the diagonal crossed product and
//! modules over twisted products.

pub mod diagonal;
pub mod lr_smash;
pub mod modules;
#[allow(clippy::module_inception)]
pub mod smash;

pub use diagonal::{
    diagonal_crossed_product, diagonal_report, diagonal_twisting_map, diagonal_twisting_principle,
    lr_smash_twisting_principle, DiagonalProduct,
};
pub use lr_smash::{
    invert_q, invert_q_report, lr_smash, lr_smash_data, lr_smash_direct, lr_smash_report, q_inverse_closed_form,
    unit_action_report,
};
pub use modules::{decompose, induce_module_over_twisted, induce_report, module_over_diagonal};
pub use smash::{
    left_smash_twisting, right_smash_product, right_smash_twisting, smash_product, two_sided_report, two_sided_smash,
    two_sided_twisting,
};

/// An `H`-bimodule Hom-algebra.
pub type BimoduleHomAlgebra = crate::modules::BimoduleAlgebra;
