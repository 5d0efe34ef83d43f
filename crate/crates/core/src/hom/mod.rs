//! Hom-associative algebras, Hom-coalgebras, Hom-bialgebras and Hom-Hopf
//! algebras, their axiom checks, Yau twisting and quasitriangularity.

mod algebra;
mod bialgebra;
mod coalgebra;
mod hopf;
mod quasitriangular;
mod twist;

pub use algebra::{check_four_element, check_hom_algebra, HomAlgebra};
pub use bialgebra::{bialgebra_report, check_hom_bialgebra, check_reindexing, HomBialgebra};
pub use coalgebra::{check_hom_coalgebra, HomCoalgebra};
pub use hopf::{check_hom_hopf, hopf_report, HomHopfAlgebra};
pub use quasitriangular::check_quasitriangular;
pub use twist::{yau_twist, YauTwist};

pub(crate) use algebra::check_endo_shape;
