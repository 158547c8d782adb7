//! Comparison with the degree-one presentation over `Q`.
//!
//! Pulling back along the rescaling `c1 -> d c1`, `c2 -> c2 + (d^2-1)/4 c1^2`
//! should carry the degree-`d` relation ideal onto the degree-one relation
//! ideal after tensoring with `Q`. The report also records the outcome for
//! the opposite substitution `c1 -> c1/d`, `c2 -> c2 - (d^2-1)/(4d^2) c1^2`.

use crate::coeff::rat;
use crate::error::{require_odd, Result};
use crate::ideal::QIdeal;
use crate::paths::PathRegistry;
use crate::poly::QChern;
use crate::relations::RelationSet;

use super::genfun_alpha1;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `c1 -> d c1`, `c2 -> c2 + (d^2-1)/4 c1^2`.
    Forward,
    /// `c1 -> c1/d`, `c2 -> c2 - (d^2-1)/(4d^2) c1^2`.
    Inverse,
}

pub fn phi_substitute(p: &QChern, d: u32, dir: Direction) -> QChern {
    let d = d as i64;
    let (s1, s2) = match dir {
        Direction::Forward => (rat(d, 1), rat(d * d - 1, 4)),
        Direction::Inverse => (rat(1, d), rat(1 - d * d, 4 * d * d)),
    };
    let images = [
        QChern::c1().scale(&s1),
        &QChern::c2() + &QChern::chern_term(s2, 2, 0),
    ];
    p.eval_into(&images)
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct PullbackReport {
    pub r: u32,
    pub d: u32,
    /// Forward substitution: ideals agree in every degree checked.
    pub equal_over_q: bool,
    pub inverse_equal_over_q: bool,
    pub degree_checked: u32,
    /// Lowest degree where the forward comparison first differs.
    pub first_mismatch: Option<u32>,
}

fn degree_one_ideal(r: u32) -> Result<QIdeal> {
    QIdeal::new(vec![genfun_alpha1(0, r, 1)?.to_rational(), genfun_alpha1(1, r, 1)?.to_rational()])
}

fn pulled_back(set: &RelationSet, dir: Direction) -> Result<QIdeal> {
    let gens: Vec<QChern> = set.polys().iter().map(|p| phi_substitute(&p.to_rational(), set.d, dir)).collect();
    QIdeal::new(gens)
}

pub fn phi_pullback_check(r: u32, d: u32) -> Result<PullbackReport> {
    require_odd(d)?;
    let set = RelationSet::full(&PathRegistry::default(), r, d, false)?;
    let target = degree_one_ideal(r)?;
    let degree_checked = d * r + d;
    let forward = pulled_back(&set, Direction::Forward)?;
    let inverse = pulled_back(&set, Direction::Inverse)?;
    forward.precompute(0..=degree_checked);
    inverse.precompute(0..=degree_checked);
    target.precompute(0..=degree_checked);
    let first_mismatch = (0..=degree_checked).find(|&deg| !forward.slice(deg).echelon.same_span(&target.slice(deg).echelon));
    Ok(PullbackReport {
        r,
        d,
        equal_over_q: first_mismatch.is_none(),
        inverse_equal_over_q: inverse.slices_equal(&target, degree_checked),
        degree_checked,
        first_mismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substitutions_are_inverse() {
        let p = QChern::parse("9c1^2 - 27c2").unwrap();
        let there = phi_substitute(&p, 3, Direction::Forward);
        assert_eq!(there, QChern::parse("27c1^2 - 27c2").unwrap());
        assert_eq!(phi_substitute(&there, 3, Direction::Inverse), p);
    }

    #[test]
    fn identity_at_degree_one() {
        let rep = phi_pullback_check(1, 1).unwrap();
        assert!(rep.equal_over_q && rep.inverse_equal_over_q);
        assert_eq!(rep.degree_checked, 2);
    }

    #[test]
    fn unit_ideals_at_r_zero() {
        assert!(phi_pullback_check(0, 5).unwrap().equal_over_q);
    }

    #[test]
    fn twisted_cubic_forward_matches() {
        let rep = phi_pullback_check(2, 3).unwrap();
        assert!(rep.equal_over_q);
        assert_eq!(rep.degree_checked, 9);
        assert!(!rep.inverse_equal_over_q);
    }
}
