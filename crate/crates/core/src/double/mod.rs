//! The dual `H*_{p,q}`, module/comodule duality, the Drinfeld double and the
//! functors relating its modules to Yetter-Drinfeld modules.

pub mod drinfeld;
pub mod dual;
pub mod duality;
pub mod functors;

pub use drinfeld::{
    double_antipode, double_counit, double_delta, double_product_direct, double_report, drinfeld_double,
    drinfeld_double_with_limit, r_matrix, r_matrix_in_basis, DrinfeldDouble, DEFAULT_DIMENSION_LIMIT,
};
pub use dual::{beta, dual_algebra, dual_mu, dual_report, DualAlgebra};
pub use duality::{comodule_to_module, module_to_comodule, module_to_comodule_in_basis};
pub use functors::{functor_f, functor_f_morphism_report, functor_f_report, functor_g, functor_g_report};
