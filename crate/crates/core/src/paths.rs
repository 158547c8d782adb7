//! Interchangeable algorithms for `alpha_{i,k}^{r,d}`, registered by name.

use crate::error::{Error, Result};
use crate::poly::ZChern;
use crate::{z1, zi};

pub trait RelationPath: Send + Sync {
    fn name(&self) -> &'static str;
    fn supports(&self, i: u32, k: u32) -> bool;
    fn compute(&self, i: u32, k: u32, r: u32, d: u32) -> Result<ZChern>;
}

pub struct GenFun;
pub struct Recursion;
pub struct Localization;
pub struct Hadamard;

impl RelationPath for GenFun {
    fn name(&self) -> &'static str {
        "genfun"
    }
    fn supports(&self, i: u32, k: u32) -> bool {
        i == 1 && k <= 1
    }
    fn compute(&self, _i: u32, k: u32, r: u32, d: u32) -> Result<ZChern> {
        z1::genfun_alpha1(k, r, d)
    }
}

impl RelationPath for Recursion {
    fn name(&self) -> &'static str {
        "recursion"
    }
    fn supports(&self, i: u32, k: u32) -> bool {
        i == 1 && k <= 1
    }
    fn compute(&self, _i: u32, k: u32, r: u32, d: u32) -> Result<ZChern> {
        z1::recursion_alpha1(k, r, d)
    }
}

impl RelationPath for Localization {
    fn name(&self) -> &'static str {
        "localization"
    }
    fn supports(&self, i: u32, k: u32) -> bool {
        i >= 1 && k <= i
    }
    fn compute(&self, i: u32, k: u32, r: u32, d: u32) -> Result<ZChern> {
        zi::alpha_ik(i, k, r, d)
    }
}

impl RelationPath for Hadamard {
    fn name(&self) -> &'static str {
        "hadamard"
    }
    fn supports(&self, i: u32, k: u32) -> bool {
        i >= 1 && k == 0
    }
    fn compute(&self, i: u32, _k: u32, r: u32, d: u32) -> Result<ZChern> {
        if i > d {
            return Err(Error::IndexError(format!("i = {i} exceeds d = {d}")));
        }
        Ok(zi::hadamard_alpha0(r, d)?.swap_remove(i as usize))
    }
}

pub struct PathRegistry {
    paths: Vec<Box<dyn RelationPath>>,
}

impl Default for PathRegistry {
    fn default() -> Self {
        let mut reg = PathRegistry::empty();
        reg.register(Box::new(GenFun));
        reg.register(Box::new(Recursion));
        reg.register(Box::new(Localization));
        reg.register(Box::new(Hadamard));
        reg
    }
}

impl PathRegistry {
    pub fn empty() -> Self {
        PathRegistry { paths: Vec::new() }
    }

    /// Adds a path, replacing any registered under the same name.
    pub fn register(&mut self, path: Box<dyn RelationPath>) {
        self.paths.retain(|p| p.name() != path.name());
        self.paths.push(path);
    }

    pub fn get(&self, name: &str) -> Option<&dyn RelationPath> {
        self.paths.iter().find(|p| p.name() == name).map(|p| p.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.paths.iter().map(|p| p.name()).collect()
    }

    fn first_of(&self, names: &[&str], i: u32, k: u32) -> Option<&dyn RelationPath> {
        names.iter().filter_map(|n| self.get(n)).find(|p| p.supports(i, k))
    }

    /// Generating function for `i = 1`, localization otherwise.
    pub fn production_for(&self, i: u32, k: u32) -> Result<&dyn RelationPath> {
        self.first_of(&["genfun", "localization"], i, k)
            .ok_or_else(|| Error::IndexError(format!("no path computes alpha_{{{i},{k}}}")))
    }

    /// The independent path used to check the production value, if any.
    pub fn oracle_for(&self, i: u32, k: u32) -> Option<&dyn RelationPath> {
        let prod = self.production_for(i, k).ok()?.name();
        self.first_of(&["recursion", "hadamard"], i, k).filter(|p| p.name() != prod)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn routing() {
        let reg = PathRegistry::default();
        assert_eq!(reg.production_for(1, 0).unwrap().name(), "genfun");
        assert_eq!(reg.production_for(3, 2).unwrap().name(), "localization");
        assert_eq!(reg.oracle_for(1, 1).unwrap().name(), "recursion");
        assert_eq!(reg.oracle_for(2, 0).unwrap().name(), "hadamard");
        assert!(reg.oracle_for(2, 1).is_none());
        assert_eq!(reg.names(), vec!["genfun", "recursion", "localization", "hadamard"]);
    }

    #[test]
    fn every_path_agrees_where_supported() {
        let reg = PathRegistry::default();
        for i in 1..=3 {
            for k in 0..=i {
                let vals: Vec<_> = reg
                    .names()
                    .into_iter()
                    .filter_map(|n| reg.get(n))
                    .filter(|p| p.supports(i, k))
                    .map(|p| p.compute(i, k, 2, 3).unwrap())
                    .collect();
                assert!(vals.windows(2).all(|w| w[0] == w[1]), "i={i} k={k}");
            }
        }
    }

    #[test]
    fn registering_replaces_by_name() {
        let mut reg = PathRegistry::empty();
        reg.register(Box::new(Localization));
        assert_eq!(reg.production_for(1, 0).unwrap().name(), "localization");
        assert!(reg.oracle_for(1, 0).is_none());
        reg.register(Box::new(Localization));
        assert_eq!(reg.names().len(), 1);
    }
}
