use serde::Serialize;

use crate::error::Result;
use crate::ffield::Matrix;
use crate::modrep::{GroupModule, Part, SubmoduleBasis};

use super::engine::{Engine, SimpleLabel};

/// Radical layers from the top, each a list of `(simple index, multiplicity)`.
#[derive(Clone, Debug)]
pub struct Loewy {
    /// `rad^0 M ⊃ rad^1 M ⊃ … ⊃ 0`.
    pub radical_series: Vec<SubmoduleBasis>,
    /// `0 = soc^0 ⊂ soc^1 ⊂ … ⊂ M`.
    pub socle_series: Vec<SubmoduleBasis>,
    pub layers: Vec<Vec<(usize, usize)>>,
    pub socle_layers: Vec<Vec<(usize, usize)>>,
}

impl Loewy {
    pub fn length(&self) -> usize {
        self.layers.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledLayer(pub Vec<(SimpleLabel, usize)>);

impl Engine {
    /// `rad M`, the intersection of kernels of all maps to simples.
    pub fn radical(&self, m: &GroupModule) -> Result<SubmoduleBasis> {
        let f = m.field();
        let mut maps: Vec<Matrix> = Vec::new();
        for s in self.simples()? {
            maps.extend(self.hom(m, &s.module)?.basis);
        }
        if maps.is_empty() {
            return Ok(SubmoduleBasis::full(m));
        }
        let mut all = Matrix::zeros(f, m.dim(), 0);
        for phi in &maps {
            all = all.hstack(phi);
        }
        SubmoduleBasis::new(m, &all.left_kernel())
    }

    /// `soc M`, the sum of images of all maps from simples.
    pub fn socle(&self, m: &GroupModule) -> Result<SubmoduleBasis> {
        let f = m.field();
        let mut rows = Matrix::zeros(f, 0, m.dim());
        for s in self.simples()? {
            for psi in self.hom(&s.module, m)?.basis {
                rows = rows.vstack(&psi);
            }
        }
        SubmoduleBasis::new(m, &rows)
    }

    pub fn head_multiplicities(&self, m: &GroupModule) -> Result<Vec<usize>> {
        self.simples()?.iter().map(|s| self.hom_dim(m, &s.module)).collect()
    }

    pub fn socle_multiplicities(&self, m: &GroupModule) -> Result<Vec<usize>> {
        self.simples()?.iter().map(|s| self.hom_dim(&s.module, m)).collect()
    }

    pub fn loewy(&self, m: &GroupModule) -> Result<Loewy> {
        self.check(m)?;
        let mut radical_series = vec![SubmoduleBasis::full(m)];
        let mut layers = Vec::new();
        let mut cur = m.clone();
        while cur.dim() > 0 {
            layers.push(nonzero(self.head_multiplicities(&cur)?));
            let r = self.radical(&cur)?;
            let next = cur.sub_quotient(&r, Part::Sub)?;
            // back to coordinates of m
            let prev = radical_series.last().expect("nonempty");
            let rows = r.rows().mul(prev.rows());
            radical_series.push(SubmoduleBasis::new(m, &rows)?);
            cur = next;
        }
        let mut socle_series = vec![SubmoduleBasis::zero(m)];
        let mut socle_layers = Vec::new();
        while socle_series.last().expect("nonempty").dim() < m.dim() {
            let s = socle_series.last().expect("nonempty").clone();
            let q = m.sub_quotient(&s, Part::Quotient)?;
            socle_layers.push(nonzero(self.socle_multiplicities(&q)?));
            let soc = self.socle(&q)?;
            socle_series.push(s.lift(Part::Quotient, soc.rows()));
        }
        Ok(Loewy { radical_series, socle_series, layers, socle_layers })
    }

    pub fn label_layers(&self, layers: &[Vec<(usize, usize)>]) -> Result<Vec<LabeledLayer>> {
        layers
            .iter()
            .map(|l| Ok(LabeledLayer(l.iter().map(|&(i, k)| Ok((self.label(i)?, k))).collect::<Result<_>>()?)))
            .collect()
    }

    /// Composition multiplicities read off the socle series, a second route
    /// independent of the MeatAxe recursion.
    pub fn composition_by_socle(&self, m: &GroupModule) -> Result<Vec<usize>> {
        let mut counts = vec![0; self.simples()?.len()];
        for layer in self.loewy(m)?.socle_layers {
            for (i, k) in layer {
                counts[i] += k;
            }
        }
        Ok(counts)
    }
}

fn nonzero(v: Vec<usize>) -> Vec<(usize, usize)> {
    v.into_iter().enumerate().filter(|&(_, k)| k > 0).collect()
}
