use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::ffield::{subspace, Matrix};
use crate::modrep::{GroupModule, Part, SubmoduleBasis};

use super::engine::Engine;

/// A projective cover `p0 → M` with its kernel.
#[derive(Clone, Debug)]
pub struct ProjectivePresentation {
    pub p0: GroupModule,
    /// Catalogue index of the head of each summand of `p0`, in block order.
    pub heads: Vec<usize>,
    /// `dim p0 × dim M`, surjective.
    pub cover: Matrix,
    pub kernel: SubmoduleBasis,
    /// The kernel as a module: `Ω(M)`.
    pub omega: GroupModule,
}

impl Engine {
    /// Minimal projective cover assembled from PIMs, one copy of `P(D)` per
    /// copy of `D` in the head.
    pub fn projective_cover(&self, m: &GroupModule) -> Result<ProjectivePresentation> {
        self.check(m)?;
        let f = m.field();
        let pims = self.pims()?;
        let head = self.head_multiplicities(m)?;
        let rad = self.radical(m)?;
        let mut span = rad.rows().clone();
        let mut parts: Vec<&GroupModule> = Vec::new();
        let mut heads = Vec::new();
        let mut maps: Vec<Matrix> = Vec::new();
        let mut rng = self.rng("cover", m);
        for (i, &k) in head.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let hs = self.hom(&pims[i], m)?;
            let step = self.simples()?[i].module.dim();
            for _ in 0..k {
                let base = subspace::dim(&span);
                let grows = |phi: &Matrix, span: &Matrix| subspace::dim(&span.vstack(phi)) == base + step;
                let mut chosen = hs.basis.iter().find(|phi| grows(phi, &span)).cloned();
                for _ in 0..self.config().random_trials {
                    if chosen.is_some() {
                        break;
                    }
                    let c: Vec<u32> = (0..hs.dim()).map(|_| rng.gen_range(0..f.p())).collect();
                    let phi = hs.combination(f, &c);
                    if grows(&phi, &span) {
                        chosen = Some(phi);
                    }
                }
                let phi = chosen.ok_or_else(|| {
                    Error::SearchExhausted(format!("no map from P({}) covering the head", self.label(i).unwrap()))
                })?;
                span = subspace::sum(&span, &phi);
                parts.push(&pims[i]);
                heads.push(i);
                maps.push(phi);
            }
        }
        let p0 = GroupModule::direct_sum(self.d(), f, &parts)?.labeled(format!("P({})", m.label()));
        let cover = Matrix::vstack_all(f, m.dim(), &maps.iter().collect::<Vec<_>>());
        if cover.rank() != m.dim() {
            return Err(Error::InvalidModule("projective cover is not surjective".into()));
        }
        let kernel = SubmoduleBasis::new(&p0, &cover.left_kernel())?;
        let omega = p0.sub_quotient(&kernel, Part::Sub)?.labeled(format!("Ω({})", m.label()));
        Ok(ProjectivePresentation { p0, heads, cover, kernel, omega })
    }

    /// [`projective_cover`](Self::projective_cover), memoized by content hash.
    pub fn cached_cover(&self, m: &GroupModule) -> Result<Arc<ProjectivePresentation>> {
        let key = m.content_hash();
        if let Some(c) = self.covers.lock().expect("cover cache").get(&key) {
            return Ok(c.clone());
        }
        let c = Arc::new(self.projective_cover(m)?);
        self.covers.lock().expect("cover cache").insert(key, c.clone());
        Ok(c)
    }

    /// Whether an indecomposable module is projective: a simple head `D`
    /// and the dimension of `P(D)`.
    pub fn is_projective_indecomposable(&self, x: &GroupModule) -> Result<bool> {
        let head = self.head_multiplicities(x)?;
        let nonzero: Vec<usize> = (0..head.len()).filter(|&i| head[i] > 0).collect();
        if nonzero.len() != 1 || head[nonzero[0]] != 1 {
            return Ok(false);
        }
        Ok(self.pims()?[nonzero[0]].dim() == x.dim())
    }

    pub fn is_projective(&self, m: &GroupModule) -> Result<bool> {
        for p in self.decompose(m)?.pieces {
            if !self.is_projective_indecomposable(&p.module)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `M` with its projective summands removed.
    pub fn strip_projectives(&self, m: &GroupModule) -> Result<GroupModule> {
        let dec = self.decompose(m)?;
        let mut keep = Vec::new();
        for p in &dec.pieces {
            if !self.is_projective_indecomposable(&p.module)? {
                keep.push(p.basis.clone());
            }
        }
        if keep.len() == dec.pieces.len() {
            return Ok(m.clone());
        }
        let rows = Matrix::vstack_all(m.field(), m.dim(), &keep.iter().collect::<Vec<_>>());
        let sub = SubmoduleBasis::new(m, &rows)?;
        Ok(m.sub_quotient(&sub, Part::Sub)?.labeled(format!("{}/proj", m.label())))
    }

    /// `Ω^k(M)` in the stable category; negative `k` goes through duals.
    /// The kernel of a minimal cover has no projective summands, so only
    /// `k = 0` needs an explicit strip.
    pub fn heller(&self, m: &GroupModule, k: i32) -> Result<GroupModule> {
        self.check(m)?;
        self.check_regular_limit()?;
        let label = format!("Ω^{k}({})", m.label());
        if k < 0 {
            return Ok(self.heller(&m.dual(), -k)?.dual().labeled(label));
        }
        if k == 0 {
            return Ok(self.strip_projectives(m)?.labeled(label));
        }
        let mut cur = m.clone();
        for _ in 0..k {
            if cur.dim() == 0 {
                break;
            }
            cur = self.projective_cover(&cur)?.omega;
        }
        Ok(cur.labeled(label))
    }
}
