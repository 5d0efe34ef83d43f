//! Twisted tensor products: twisting maps, `L-R` data, twistors and
//! iterated products. All identities are checked on basis tuples.

pub mod iterated;
pub mod lr;
pub mod twisting;
pub mod twistor;

pub use iterated::{iterated_report, iterated_twisted_product, p1_map, p2_map, Bracketings};
pub use lr::{
    check_lr_data, factor_through_q, factorization_report, lr_endomorphism_report, lr_twisted_tensor_product,
    regroup_ac, regroup_report, twist_lr_coincidence, twist_lr_product, LRData, Regrouping,
};
pub use twisting::{abtwist_report, check_twisting_map, flip_map, twisted_tensor_product, TwistingMap};
pub use twistor::{apply_twistor, check_twistor, lr_twistor_report, lr_twistors, TwistorMap};
