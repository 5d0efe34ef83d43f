//! Modules, bimodules, comodules, module Hom-algebras, Yetter-Drinfeld
//! modules and braidings.

mod braiding;
mod comodule;
mod module;
mod module_algebra;
mod yd;

pub use braiding::{
    associator, braiding_naturality, braiding_report, left_unitor, qt_braiding_report, qt_module_braiding, right_unitor,
    yd_braiding, Braiding,
};
pub use comodule::{check_comodule, comodule_morphism_report, trivial_coaction, RightComodule};
pub use module::{
    bimodule_report, check_bimodule, check_module, module_morphism_report, split_null_extension, tensor_of_modules,
    trivial_module, Bimodule, LeftModule, ModuleAxioms, RightModule,
};
pub use module_algebra::{
    bimodule_algebra_report, check_bimodule_hom_algebra, check_module_hom_algebra, check_right_module_hom_algebra,
    trivial_left_action, trivial_right_action, twist_bimodule, twist_bimodule_algebra, twist_left_module_algebra,
    twist_right_module_algebra, unit_compatibility_report, BimoduleAlgebra, LeftModuleAlgebra, RightModuleAlgebra,
};
pub use yd::{check_yetter_drinfeld, unit_object, yd_morphism_report, yd_report, yd_tensor, YDModule};
