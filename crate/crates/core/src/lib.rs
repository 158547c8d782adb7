//! Exact computation of the relations `alpha_{i,k}^{r,d}` in the integral
//! Chow ring of the stack of degree-`d` maps `P^1 -> P^r` (odd `d`), and of
//! the ideals they generate.

pub mod coeff;
pub mod error;
pub mod ideal;
pub mod paths;
pub mod poly;
pub mod relations;
pub mod verify;
pub mod weight;
pub mod z1;
pub mod zi;

pub use coeff::{Coeff, Int, Rat};
pub use error::{Error, Result};
pub use poly::{Chern, Poly, QChern, WeightPoly, Weights, ZChern};
