use serde::Serialize;

use crate::combinat::{partitions_of, Partition};
use crate::error::{Error, Result};
use crate::modrep::GroupModule;
use crate::specht::permutation_module;

use super::Analyzer;

/// Restricted `M^λ` above this dimension are not decomposed directly; the
/// candidate `P(D_λ)` is checked to be a summand instead.
const DECOMPOSE_LIMIT: usize = 200;

/// Which Young modules, and which sign twists of Young modules, a module
/// is isomorphic to.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct YoungClass {
    pub young: Vec<Partition>,
    pub twisted: Vec<Partition>,
}

impl YoungClass {
    pub fn is_young(&self) -> bool {
        !self.young.is_empty()
    }

    pub fn is_twisted_young(&self) -> bool {
        !self.twisted.is_empty()
    }
}

impl Analyzer {
    /// `Y^λ`: the summand of `M^λ` that is not `Y^μ` for any `μ ▷ λ`.
    pub fn young_module(&self, lambda: &Partition) -> Result<GroupModule> {
        let e = self.engine();
        if lambda.size() != e.d() {
            return Err(Error::SizeMismatch(lambda.size(), e.d()));
        }
        if let Some(y) = self.young.lock().expect("young cache").get(lambda) {
            return Ok(y.clone());
        }
        let mut above = Vec::new();
        for mu in partitions_of(e.d()) {
            if mu.strictly_dominates(lambda)? {
                above.push(self.young_module(&mu)?);
            }
        }
        let perm = permutation_module(lambda, e.field());
        let y = if lambda.is_p_restricted(e.p()) && perm.dim() > DECOMPOSE_LIMIT {
            self.young_from_pim(lambda, &perm, &above)?
        } else {
            let dec = e.decompose(&perm)?;
            let mut fresh = Vec::new();
            for (rep, _) in dec.summands() {
                if !self.matches_any(rep, &above)? {
                    fresh.push(rep.clone());
                }
            }
            if fresh.len() != 1 {
                return Err(Error::Identification(format!(
                    "{} summands of M^{lambda} are new, expected exactly one",
                    fresh.len()
                )));
            }
            fresh.pop().expect("one summand")
        };
        let y = y.labeled(format!("Y^{lambda}"));
        self.young.lock().expect("young cache").insert(lambda.clone(), y.clone());
        Ok(y)
    }

    fn matches_any(&self, x: &GroupModule, known: &[GroupModule]) -> Result<bool> {
        for y in known {
            if self.engine().local_isomorphism(y, x)?.is_some() {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// `P(D_λ)` once it is shown to be a summand of `M^λ` distinct from the
    /// Young modules above `λ`.
    fn young_from_pim(&self, lambda: &Partition, perm: &GroupModule, above: &[GroupModule]) -> Result<GroupModule> {
        let e = self.engine();
        let idx = e
            .simples()?
            .iter()
            .position(|s| &s.restricted == lambda)
            .ok_or_else(|| Error::NotRestricted(lambda.to_string(), e.p()))?;
        let pim = e.pims()?[idx].clone();
        if !self.is_summand(&pim, perm)? {
            return Err(Error::Identification(format!("P(D_{lambda}) is not a summand of M^{lambda}")));
        }
        if self.matches_any(&pim, above)? {
            return Err(Error::Identification(format!("P(D_{lambda}) is already a Young module above {lambda}")));
        }
        Ok(pim)
    }

    /// For indecomposable `x`: some `x → m → x` is invertible.
    pub fn is_summand(&self, x: &GroupModule, m: &GroupModule) -> Result<bool> {
        let e = self.engine();
        let into = e.hom(x, m)?.basis;
        if into.is_empty() {
            return Ok(false);
        }
        // Hom(m, x) is the transpose of Hom(x*, m*)
        let back: Vec<_> = e.hom(&x.dual(), &m.dual())?.basis.iter().map(|b| b.transpose()).collect();
        for phi in &into {
            for psi in &back {
                if phi.mul(psi).is_invertible() {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// Compares an indecomposable module with every `Y^λ` and `Y^λ ⊗ sgn`.
    pub fn is_young_or_twisted(&self, m: &GroupModule) -> Result<YoungClass> {
        let e = self.engine();
        let mut out = YoungClass::default();
        for lambda in partitions_of(e.d()) {
            let y = self.young_module(&lambda)?;
            if e.local_isomorphism(&y, m)?.is_some() {
                out.young.push(lambda.clone());
            }
            if e.local_isomorphism(&y.sign_twist(), m)?.is_some() {
                out.twisted.push(lambda);
            }
        }
        Ok(out)
    }
}
