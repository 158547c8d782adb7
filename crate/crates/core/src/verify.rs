//! Ideal-level verification runs and their reports, plus a registry of the
//! named checks the command line exposes.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::coeff::Int;
use crate::error::{require_odd, Error, Result};
use crate::ideal::{EchelonRing, GradedIdeal, QIdeal, ZIdeal};
use crate::paths::PathRegistry;
use crate::poly::{Chern, Poly, ZChern};
use crate::relations::{all_indices, conjectural_indices, reduced_indices, RelationSet};
use crate::weight::{edge_factor, p_d, p_rd_chern};
use crate::z1::{remainder_quotients, functional_equation_holds, phi_pullback_check, PullbackReport};
use crate::zi::poly_in_d_check;

pub fn label(i: u32, k: u32) -> String {
    format!("alpha_{{{i},{k}}}")
}

fn labels(idx: &[(u32, u32)]) -> Vec<String> {
    idx.iter().map(|&(i, k)| label(i, k)).collect()
}

/// One membership query: `{query, ring, member, certificate}`. The
/// certificate lists one cofactor per generator, in generator order.
#[derive(Clone, Debug, Serialize)]
pub struct MembershipRecord {
    pub label: String,
    pub query: Value,
    pub ring: &'static str,
    pub member: bool,
    pub certificate: Option<Vec<Value>>,
}

pub fn membership_record<C: EchelonRing>(
    label: String,
    ideal: &GradedIdeal<C>,
    p: &Poly<C, Chern>,
) -> Result<MembershipRecord> {
    let cert = ideal.membership(p)?;
    let certificate = cert.map(|c| {
        let mut cofactors = vec![Poly::<C, Chern>::zero(); ideal.generators().len()];
        for (j, m) in c.multipliers {
            cofactors[j] += &m;
        }
        cofactors.iter().map(|q| serde_json::to_value(q).unwrap()).collect()
    });
    Ok(MembershipRecord {
        label,
        query: serde_json::to_value(p).unwrap(),
        ring: C::RING,
        member: certificate.is_some(),
        certificate,
    })
}

/// Generators of a hand-simplified presentation, where one is tabulated.
pub fn known_presentation(r: u32, d: u32) -> Option<Vec<ZChern>> {
    match (r, d) {
        (2, 3) => Some(
            ["9c1^2 - 27c2", "c1^3", "6c1^2c2^2 + 9c2^3"]
                .iter()
                .map(|s| ZChern::parse(s).unwrap())
                .collect(),
        ),
        _ => None,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionReport {
    pub r: u32,
    pub d: u32,
    pub generators: Vec<String>,
    pub classes: Vec<MembershipRecord>,
    /// `P_{r,d}` at `H = (d+1)/2 c1` lies in the reduced ideal.
    pub p_rd_member: bool,
    pub matches_known_presentation: Option<bool>,
    pub passed: bool,
}

/// Every `alpha_{i,k}` lies in the ideal over `Z` of `alpha_{1,0}`,
/// `alpha_{1,1}` and the `alpha_{q,0}` with `q` a prime power.
pub fn reduction_verify(r: u32, d: u32) -> Result<ReductionReport> {
    require_odd(d)?;
    let set = RelationSet::full(&PathRegistry::default(), r, d, false)?;
    let gens_idx = reduced_indices(d);
    let ideal = ZIdeal::new(set.select(&gens_idx))?;
    ideal.precompute(set.relations.iter().map(|rel| rel.degree(r)));
    let classes = set
        .relations
        .par_iter()
        .map(|rel| membership_record(rel.label(), &ideal, &rel.poly))
        .collect::<Result<Vec<_>>>()?;
    let p_rd_member = ideal.contains(&p_rd_chern(r, d)?)?;
    let matches_known_presentation = match known_presentation(r, d) {
        Some(gens) => Some(crate::ideal::ideal_equal(&ZIdeal::new(set.polys())?, &ZIdeal::new(gens)?)?),
        None => None,
    };
    let passed = classes.iter().all(|c| c.member) && p_rd_member && matches_known_presentation.unwrap_or(true);
    Ok(ReductionReport {
        r,
        d,
        generators: labels(&gens_idx),
        classes,
        p_rd_member,
        matches_known_presentation,
        passed,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub r: u32,
    pub d: u32,
    pub candidate: Vec<String>,
    pub generated: bool,
    pub non_members: Vec<String>,
    /// `None` in weak mode.
    pub minimal: Option<bool>,
    pub redundant: Vec<String>,
    pub passed: bool,
}

/// The candidate set `alpha_{1,0}`, `alpha_{1,1}`, `alpha_{p,0}` (`p | d`
/// prime) generates every `alpha_{i,k}` over `Z`, and, unless `weak`, none
/// of its members is redundant.
pub fn conjecture_verify(r: u32, d: u32, weak: bool) -> Result<ConjectureReport> {
    require_odd(d)?;
    let set = RelationSet::full(&PathRegistry::default(), r, d, false)?;
    let cand_idx = conjectural_indices(d);
    let ideal = ZIdeal::new(set.select(&cand_idx))?;
    ideal.precompute(set.relations.iter().map(|rel| rel.degree(r)));
    let found = set
        .relations
        .par_iter()
        .map(|rel| ideal.contains(&rel.poly))
        .collect::<Result<Vec<_>>>()?;
    let non_members: Vec<String> = set
        .relations
        .iter()
        .zip(&found)
        .filter(|(_, m)| !**m)
        .map(|(rel, _)| rel.label())
        .collect();
    let generated = non_members.is_empty();

    let (minimal, redundant) = if weak {
        (None, Vec::new())
    } else {
        // index by candidate slot; the ideal itself drops zero generators
        let gens = set.select(&cand_idx);
        let flags = (0..gens.len())
            .into_par_iter()
            .map(|j| {
                let rest: Vec<_> = gens.iter().enumerate().filter(|(n, _)| *n != j).map(|(_, g)| g.clone()).collect();
                ZIdeal::new(rest)?.contains(&gens[j])
            })
            .collect::<Result<Vec<_>>>()?;
        let redundant: Vec<String> = cand_idx
            .iter()
            .zip(&flags)
            .filter(|(_, f)| **f)
            .map(|(&(i, k), _)| label(i, k))
            .collect();
        (Some(redundant.is_empty()), redundant)
    };
    Ok(ConjectureReport {
        r,
        d,
        candidate: labels(&cand_idx),
        generated,
        non_members,
        minimal,
        redundant,
        passed: generated && minimal.unwrap_or(true),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CollapseRecord {
    pub label: String,
    pub member_q: bool,
    pub member_z: bool,
    /// `i * alpha_{i,0}` lies in the integral ideal.
    pub multiple_member_z: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RationalReport {
    pub r: u32,
    pub d: u32,
    pub classes: Vec<CollapseRecord>,
    /// Every `alpha_{i,0}`, `i > 1`, lies in the rational ideal of the
    /// `i = 1` relations.
    pub collapse_holds: bool,
    pub pullback: PullbackReport,
    pub passed: bool,
}

/// Rational collapse onto `(alpha_{1,0}, alpha_{1,1})`, the integral
/// membership of `i * alpha_{i,0}`, and the comparison with the degree-one
/// presentation. Only the collapse decides `passed`; the rest is recorded.
pub fn rational_verify(r: u32, d: u32) -> Result<RationalReport> {
    require_odd(d)?;
    let idx: Vec<(u32, u32)> = (1..=d).map(|i| (i, 0)).chain([(1, 1)]).collect();
    let set = RelationSet::compute_indices(&PathRegistry::default(), r, d, &idx, false)?;
    let base = set.select(&[(1, 0), (1, 1)]);
    let z_ideal = ZIdeal::new(base.clone())?;
    let q_ideal = QIdeal::new(base.iter().map(|p| p.to_rational()).collect())?;
    let classes = (2..=d)
        .into_par_iter()
        .map(|i| {
            let a = &set.get(i, 0).unwrap().poly;
            Ok(CollapseRecord {
                label: label(i, 0),
                member_q: q_ideal.contains(&a.to_rational())?,
                member_z: z_ideal.contains(a)?,
                multiple_member_z: z_ideal.contains(&a.scale(&Int::from(i)))?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let collapse_holds = classes.iter().all(|c| c.member_q);
    Ok(RationalReport {
        r,
        d,
        classes,
        collapse_holds,
        pullback: phi_pullback_check(r, d)?,
        passed: collapse_holds,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossRecord {
    pub i: u32,
    pub k: u32,
    pub r: u32,
    pub d: u32,
    pub paths: Vec<&'static str>,
    pub agree: bool,
    pub value: ZChern,
}

/// Every registered path that supports `(i, k)` gives the same value.
pub fn cross_verify(reg: &PathRegistry, r: u32, d: u32) -> Result<Vec<CrossRecord>> {
    require_odd(d)?;
    all_indices(d)
        .into_par_iter()
        .map(|(i, k)| {
            let paths: Vec<_> = reg.names().into_iter().filter_map(|n| reg.get(n)).filter(|p| p.supports(i, k)).collect();
            let values = paths.iter().map(|p| p.compute(i, k, r, d)).collect::<Result<Vec<_>>>()?;
            Ok(CrossRecord {
                i,
                k,
                r,
                d,
                paths: paths.iter().map(|p| p.name()).collect(),
                agree: values.windows(2).all(|w| w[0] == w[1]),
                value: values.into_iter().next().unwrap(),
            })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityRecord {
    pub d: u32,
    pub remainder_identities: bool,
    pub edge_factorization: bool,
    pub functional_equations: bool,
    pub passed: bool,
}

/// Bound used for the functional-equation check.
pub const FUNCTIONAL_EQUATION_BOUND: u32 = 10;

/// The remainder identities, `P_d = edge(d) P_{d-2}`, and the functional
/// equations of the two series, at one odd `d`.
pub fn identities_verify(d: u32) -> Result<IdentityRecord> {
    require_odd(d)?;
    let remainder_identities = match remainder_quotients(d) {
        Ok(_) => true,
        Err(Error::IdentityViolated { .. }) => false,
        Err(e) => return Err(e),
    };
    let edge_factorization = p_d(d as i64)? == &edge_factor(d)? * &p_d(d as i64 - 2)?;
    let functional_equations = functional_equation_holds(d, FUNCTIONAL_EQUATION_BOUND)?;
    Ok(IdentityRecord {
        d,
        remainder_identities,
        edge_factorization,
        functional_equations,
        passed: remainder_identities && edge_factorization && functional_equations,
    })
}

// -- registry ------------------------------------------------------------

#[derive(Clone, Debug, Default)]
pub struct CheckParams {
    pub r: Vec<u32>,
    pub d: Vec<u32>,
    /// Envelope indices for the polynomiality-in-`d` part of `identities`.
    pub i: Vec<u32>,
    pub weak: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub kind: &'static str,
    pub passed: bool,
    /// Labels of the failing cells.
    pub failures: Vec<String>,
    pub cells: Vec<Value>,
}

impl CheckReport {
    fn from_cells(kind: &'static str, cells: Vec<(String, bool, Value)>) -> Self {
        let failures: Vec<String> = cells.iter().filter(|(_, ok, _)| !ok).map(|(l, _, _)| l.clone()).collect();
        CheckReport {
            kind,
            passed: failures.is_empty(),
            failures,
            cells: cells.into_iter().map(|(_, _, v)| v).collect(),
        }
    }
}

pub trait Check: Send + Sync {
    fn name(&self) -> &'static str;
    fn run(&self, params: &CheckParams) -> Result<CheckReport>;
}

fn grid(params: &CheckParams) -> Result<Vec<(u32, u32)>> {
    for &d in &params.d {
        require_odd(d)?;
    }
    Ok(params.r.iter().flat_map(|&r| params.d.iter().map(move |&d| (r, d))).collect())
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report serializes")
}

pub struct CrossCheck;
pub struct IdentitiesCheck;
pub struct ReductionCheck;
pub struct ConjectureCheck;
pub struct RationalCheck;

impl Check for CrossCheck {
    fn name(&self) -> &'static str {
        "cross"
    }
    fn run(&self, params: &CheckParams) -> Result<CheckReport> {
        let reg = PathRegistry::default();
        let mut cells = Vec::new();
        for (r, d) in grid(params)? {
            for rec in cross_verify(&reg, r, d)? {
                let l = format!("{} r={} d={}", label(rec.i, rec.k), r, d);
                cells.push((l, rec.agree, to_value(&rec)));
            }
        }
        Ok(CheckReport::from_cells("cross", cells))
    }
}

impl Check for IdentitiesCheck {
    fn name(&self) -> &'static str {
        "identities"
    }
    fn run(&self, params: &CheckParams) -> Result<CheckReport> {
        for &d in &params.d {
            require_odd(d)?;
        }
        let mut cells: Vec<(String, bool, Value)> = params
            .d
            .par_iter()
            .map(|&d| identities_verify(d).map(|rec| (format!("identities d={d}"), rec.passed, to_value(&rec))))
            .collect::<Result<_>>()?;
        for &i in &params.i {
            for &r in &params.r {
                let rep = poly_in_d_check(i, r)?;
                let v = json!({
                    "i": i,
                    "r": r,
                    "degree_bound": rep.degree_bound,
                    "max_degree": rep.max_degree,
                    "nodes": rep.nodes,
                    "test_points": rep.test_points,
                    "extra_points_match": rep.holds,
                });
                cells.push((format!("polynomial in d i={i} r={r}"), rep.holds, v));
            }
        }
        Ok(CheckReport::from_cells("identities", cells))
    }
}

impl Check for ReductionCheck {
    fn name(&self) -> &'static str {
        "reduction"
    }
    fn run(&self, params: &CheckParams) -> Result<CheckReport> {
        let mut cells = Vec::new();
        for (r, d) in grid(params)? {
            let rep = reduction_verify(r, d)?;
            for c in rep.classes.iter().filter(|c| !c.member) {
                cells.push((format!("{} r={r} d={d}", c.label), false, to_value(c)));
            }
            cells.push((format!("reduction r={r} d={d}"), rep.passed, to_value(&rep)));
        }
        Ok(CheckReport::from_cells("reduction", cells))
    }
}

impl Check for ConjectureCheck {
    fn name(&self) -> &'static str {
        "conjecture"
    }
    fn run(&self, params: &CheckParams) -> Result<CheckReport> {
        let mut cells = Vec::new();
        for (r, d) in grid(params)? {
            let rep = conjecture_verify(r, d, params.weak)?;
            cells.push((format!("conjecture r={r} d={d}"), rep.passed, to_value(&rep)));
        }
        Ok(CheckReport::from_cells("conjecture", cells))
    }
}

impl Check for RationalCheck {
    fn name(&self) -> &'static str {
        "rational"
    }
    fn run(&self, params: &CheckParams) -> Result<CheckReport> {
        let mut cells = Vec::new();
        for (r, d) in grid(params)? {
            let rep = rational_verify(r, d)?;
            cells.push((format!("rational r={r} d={d}"), rep.passed, to_value(&rep)));
        }
        Ok(CheckReport::from_cells("rational", cells))
    }
}

pub struct CheckRegistry {
    checks: Vec<Box<dyn Check>>,
}

impl Default for CheckRegistry {
    fn default() -> Self {
        CheckRegistry {
            checks: vec![
                Box::new(CrossCheck),
                Box::new(IdentitiesCheck),
                Box::new(ReductionCheck),
                Box::new(ConjectureCheck),
                Box::new(RationalCheck),
            ],
        }
    }
}

impl CheckRegistry {
    pub fn register(&mut self, check: Box<dyn Check>) {
        self.checks.retain(|c| c.name() != check.name());
        self.checks.push(check);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Check> {
        self.checks.iter().find(|c| c.name() == name).map(|c| c.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.checks.iter().map(|c| c.name()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twisted_cubic_reduction() {
        let rep = reduction_verify(2, 3).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.classes.len(), 9);
        assert_eq!(rep.matches_known_presentation, Some(true));
        assert!(rep.p_rd_member);
    }

    #[test]
    fn twisted_cubic_conjecture() {
        let rep = conjecture_verify(2, 3, false).unwrap();
        assert!(rep.generated);
        assert_eq!(rep.minimal, Some(true));
        assert_eq!(rep.candidate, vec!["alpha_{1,0}", "alpha_{1,1}", "alpha_{3,0}"]);
        let weak = conjecture_verify(2, 3, true).unwrap();
        assert_eq!(weak.minimal, None);
    }

    #[test]
    fn grassmannian_candidate() {
        let rep = conjecture_verify(2, 1, false).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.candidate.len(), 2);
    }

    #[test]
    fn torsion_witness_recorded() {
        let rep = rational_verify(2, 3).unwrap();
        assert!(rep.passed);
        let a30 = rep.classes.iter().find(|c| c.label == "alpha_{3,0}").unwrap();
        assert!(a30.member_q && !a30.member_z);
        let a20 = rep.classes.iter().find(|c| c.label == "alpha_{2,0}").unwrap();
        assert!(a20.member_z);
    }

    #[test]
    fn membership_record_layout() {
        let ideal = ZIdeal::new(vec![ZChern::parse("9c1^2 - 27c2").unwrap(), ZChern::parse("27c1c2").unwrap()]).unwrap();
        let rec = membership_record("x".into(), &ideal, &ZChern::parse("18c1^2c2^2 + 27c2^3").unwrap()).unwrap();
        assert!(rec.member);
        assert_eq!(rec.ring, "Z");
        assert_eq!(rec.certificate.as_ref().unwrap().len(), 2);
    }

    #[test]
    fn registry_runs_by_name() {
        let reg = CheckRegistry::default();
        assert_eq!(reg.names(), vec!["cross", "identities", "reduction", "conjecture", "rational"]);
        let params = CheckParams { r: vec![1], d: vec![3], i: vec![1], weak: false };
        for name in reg.names() {
            let rep = reg.get(name).unwrap().run(&params).unwrap();
            assert!(rep.passed, "{name}: {:?}", rep.failures);
        }
        let bad = CheckParams { r: vec![1], d: vec![2], i: vec![], weak: false };
        assert_eq!(reg.get("identities").unwrap().run(&bad).unwrap_err(), Error::EvenDegree(2));
    }
}
