use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinat::Partition;
use crate::error::Result;
use crate::modrep::GroupModule;

use super::{Analyzer, Kind, Multiplicities};

/// The four Ext-vanishing conditions, each quantified over all `λ ⊢ d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Criterion {
    /// `Ext¹(M, S^λ) = 0`
    I,
    /// `Ext¹(S^λ, M) = 0`
    II,
    /// `Ext¹(M, S_λ) = 0`
    III,
    /// `Ext¹(S_λ, M) = 0`
    IV,
}

impl Criterion {
    pub const ALL: [Criterion; 4] = [Criterion::I, Criterion::II, Criterion::III, Criterion::IV];

    /// Kind of filtration the criterion guarantees.
    pub fn kind(self) -> Kind {
        match self {
            Criterion::I | Criterion::II => Kind::DualSpecht,
            Criterion::III | Criterion::IV => Kind::Specht,
        }
    }

    /// Which family `S^λ` or `S_λ` appears, and whether `M` is the first argument.
    fn family(self) -> (Kind, bool) {
        match self {
            Criterion::I => (Kind::Specht, true),
            Criterion::II => (Kind::Specht, false),
            Criterion::III => (Kind::DualSpecht, true),
            Criterion::IV => (Kind::DualSpecht, false),
        }
    }

    pub fn ext_expression(self) -> &'static str {
        match self {
            Criterion::I => "Ext¹(M, S^λ)",
            Criterion::II => "Ext¹(S^λ, M)",
            Criterion::III => "Ext¹(M, S_λ)",
            Criterion::IV => "Ext¹(S_λ, M)",
        }
    }

    pub fn hom_expression(self) -> &'static str {
        match self {
            Criterion::I => "dim Hom(M, S^μ)",
            Criterion::II => "dim Hom(S^μ, M)",
            Criterion::III => "dim Hom(M, S_μ)",
            Criterion::IV => "dim Hom(S_μ, M)",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Criterion::I => "(i)",
            Criterion::II => "(ii)",
            Criterion::III => "(iii)",
            Criterion::IV => "(iv)",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub criterion: Criterion,
    pub passes: bool,
    /// Most dominant `λ` with nonzero Ext, when the criterion fails.
    pub witness: Option<Partition>,
    /// `dim Ext¹` for every `λ`, in partition order.
    pub ext: Vec<(Partition, usize)>,
    /// Predicted filtration multiplicities; empty when the criterion fails.
    pub predicted: Multiplicities,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriteriaReport {
    pub module: String,
    pub dim: usize,
    pub hash: String,
    pub results: Vec<CriterionResult>,
}

impl CriteriaReport {
    pub fn result(&self, c: Criterion) -> &CriterionResult {
        self.results.iter().find(|r| r.criterion == c).expect("all four criteria are evaluated")
    }

    pub fn passes(&self, c: Criterion) -> bool {
        self.result(c).passes
    }
}

impl Analyzer {
    pub fn check_criteria(&self, m: &GroupModule) -> Result<CriteriaReport> {
        self.gate()?;
        let e = self.engine();
        e.check_regular_limit()?;
        let spechts = e.spechts();
        let jobs: Vec<(Criterion, usize)> =
            Criterion::ALL.iter().flat_map(|&c| (0..spechts.len()).map(move |i| (c, i))).collect();
        let values: Vec<(usize, usize)> = jobs
            .par_iter()
            .map(|&(c, i)| {
                let (k, first) = c.family();
                let s = k.module(&spechts[i]);
                let ext = if first { e.ext1(m, s)? } else { e.ext1(s, m)? };
                let hom = if first { e.hom_dim(m, s)? } else { e.hom_dim(s, m)? };
                Ok((ext, hom))
            })
            .collect::<Result<_>>()?;
        let mut results = Vec::new();
        for (ci, &c) in Criterion::ALL.iter().enumerate() {
            let row = &values[ci * spechts.len()..(ci + 1) * spechts.len()];
            let ext: Vec<(Partition, usize)> = spechts.iter().zip(row).map(|(s, v)| (s.shape.clone(), v.0)).collect();
            let witness = ext.iter().find(|(_, x)| *x > 0).map(|(l, _)| l.clone());
            let passes = witness.is_none();
            let predicted = match passes {
                true => spechts.iter().zip(row).filter(|(_, v)| v.1 > 0).map(|(s, v)| (s.shape.clone(), v.1)).collect(),
                false => Multiplicities::new(),
            };
            results.push(CriterionResult { criterion: c, passes, witness, ext, predicted });
        }
        Ok(CriteriaReport { module: m.label().to_string(), dim: m.dim(), hash: m.content_hash(), results })
    }
}
