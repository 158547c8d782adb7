pub mod graded;
pub mod lattice;
pub mod lucas;

pub use graded::{basis, ideal_equal, Certificate, DegreeSlice, GradedIdeal};
pub use lattice::{Echelon, EchelonRing};
pub use lucas::binomial_gcd;

use crate::coeff::{Int, Rat};

pub type ZIdeal = GradedIdeal<Int>;
pub type QIdeal = GradedIdeal<Rat>;
