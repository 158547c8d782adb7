//! Variable sets. Each polynomial type is tagged with the set of variables
//! it lives over; the grading weights come from the set.

use std::fmt::Debug;
use std::hash::Hash;

/// Maximum number of variables in any set.
pub const MAX_VARS: usize = 4;

pub trait Vars: Copy + Clone + Eq + Hash + Debug + Default + Send + Sync + 'static {
    const NAMES: &'static [&'static str];
    const LATEX: &'static [&'static str];
    const WEIGHTS: &'static [u32];

    fn arity() -> usize {
        Self::NAMES.len()
    }
}

/// Chern classes `c1` (degree 1) and `c2` (degree 2).
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Chern;

impl Chern {
    pub const C1: usize = 0;
    pub const C2: usize = 1;
}

impl Vars for Chern {
    const NAMES: &'static [&'static str] = &["c1", "c2"];
    const LATEX: &'static [&'static str] = &["c_1", "c_2"];
    const WEIGHTS: &'static [u32] = &[1, 2];
}

/// Torus-equivariant workspace: hyperplane class `H`, left-factor class `h`,
/// torus weights `l1`, `l2`. All of degree 1.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Weights;

impl Weights {
    pub const H: usize = 0;
    pub const SMALL_H: usize = 1;
    pub const L1: usize = 2;
    pub const L2: usize = 3;
}

impl Vars for Weights {
    const NAMES: &'static [&'static str] = &["H", "h", "l1", "l2"];
    const LATEX: &'static [&'static str] = &["H", "h", "l_1", "l_2"];
    const WEIGHTS: &'static [u32] = &[1, 1, 1, 1];
}

/// `c1` together with the weight difference `delta = l2 - l1`; the
/// symmetric part is recovered from `delta^2 = c1^2 - 4 c2`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Delta;

impl Delta {
    pub const C1: usize = 0;
    pub const DELTA: usize = 1;
}

impl Vars for Delta {
    const NAMES: &'static [&'static str] = &["c1", "delta"];
    const LATEX: &'static [&'static str] = &["c_1", "\\delta"];
    const WEIGHTS: &'static [u32] = &[1, 1];
}

/// The degree `d` as a formal symbol, for polynomial-in-d checks.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct DegreeSymbol;

impl Vars for DegreeSymbol {
    const NAMES: &'static [&'static str] = &["d"];
    const LATEX: &'static [&'static str] = &["d"];
    const WEIGHTS: &'static [u32] = &[1];
}
