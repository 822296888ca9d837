//! Specht and dual Specht filtrations: the Ext criteria, certified
//! filtrations, Young modules and the worked examples at `Σ_5`.

mod certificate;
mod criteria;
mod examples;
mod young;

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use crate::combinat::Partition;
use crate::error::{Error, Result};
use crate::modrep::GroupModule;
use crate::structure::Engine;

pub use certificate::{CrossCheck, FiltrationCertificate, Formula, Kind, Step};
pub use criteria::{CriteriaReport, Criterion, CriterionResult};
pub use examples::{
    neither_regular_nor_restricted, Check, ExampleReport, IrreducibleSpecht, SignedSummand, SpechtClass, SpechtReport,
};
pub use young::YoungClass;

/// Label multiplicities keyed by partition, most dominant first.
pub type Multiplicities = BTreeMap<Partition, usize>;

/// An [`Engine`] plus the catalogues that only make sense for `p > 3`.
pub struct Analyzer {
    engine: Engine,
    young: Mutex<HashMap<Partition, GroupModule>>,
    specht_factors: Mutex<Option<Vec<Vec<usize>>>>,
}

impl Analyzer {
    pub fn new(engine: Engine) -> Self {
        Analyzer { engine, young: Mutex::new(HashMap::new()), specht_factors: Mutex::new(None) }
    }

    pub fn engine(&self) -> &Engine {
        &self.engine
    }

    /// Refuses characteristics 2 and 3.
    pub fn gate(&self) -> Result<()> {
        if self.engine.p() <= 3 {
            return Err(Error::SmallCharacteristic(self.engine.p()));
        }
        Ok(())
    }

    /// Composition multiplicities of every `S^λ`, in partition order.
    /// `S_λ` has the same factors since simple modules are self-dual.
    fn specht_factors(&self) -> Result<Vec<Vec<usize>>> {
        if let Some(v) = self.specht_factors.lock().expect("factor cache").as_ref() {
            return Ok(v.clone());
        }
        let v = self
            .engine
            .spechts()
            .iter()
            .map(|s| self.engine.composition_multiplicities(&s.specht))
            .collect::<Result<Vec<_>>>()?;
        *self.specht_factors.lock().expect("factor cache") = Some(v.clone());
        Ok(v)
    }
}
