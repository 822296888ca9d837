use crate::combinat::Partition;
use crate::error::Result;
use crate::ffield::Matrix;
use crate::modrep::{GroupModule, Part, SubmoduleBasis};
use crate::specht::permutation_module;

use super::engine::Engine;

/// Which projective presentation `ext1` goes through.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtRoute {
    /// Minimal cover built from PIMs.
    Cover,
    /// `M ⊗ M^λ0 → M` for a Young subgroup of order prime to `p`; the
    /// source is induced from a semisimple group algebra, hence projective.
    Young,
}

/// Most dominant partition of `d` with all parts below `p`.
pub fn p_prime_young(d: usize, p: u32) -> Partition {
    let top = (p as usize - 1).max(1);
    let mut parts = vec![top; d / top];
    if d % top > 0 {
        parts.push(d % top);
    }
    Partition::of(&parts)
}

/// A projective module mapping onto `M`, with its kernel.
struct Surjection {
    q: GroupModule,
    cover: Matrix,
    kernel: SubmoduleBasis,
}

impl Engine {
    pub fn ext_route(&self) -> ExtRoute {
        if self.d() <= self.config().pim_limit {
            ExtRoute::Cover
        } else {
            ExtRoute::Young
        }
    }

    pub fn ext1(&self, m: &GroupModule, n: &GroupModule) -> Result<usize> {
        self.ext1_via(m, n, self.ext_route())
    }

    pub fn ext1_via(&self, m: &GroupModule, n: &GroupModule, route: ExtRoute) -> Result<usize> {
        self.check(m)?;
        self.check(n)?;
        self.check_regular_limit()?;
        let s = match route {
            ExtRoute::Cover => {
                let pp = self.cached_cover(m)?;
                Surjection { q: pp.p0.clone(), cover: pp.cover.clone(), kernel: pp.kernel.clone() }
            }
            ExtRoute::Young => self.young_surjection(m)?,
        };
        self.ext_from(m, n, &s)
    }

    fn young_surjection(&self, m: &GroupModule) -> Result<Surjection> {
        let f = m.field();
        let lambda = p_prime_young(self.d(), self.p());
        let perm = permutation_module(&lambda, f);
        let k = perm.dim();
        let q = m.tensor(&perm)?.labeled(format!("{}⊗M^{lambda}", m.label()));
        let mut cover = Matrix::zeros(f, q.dim(), m.dim());
        for a in 0..m.dim() {
            for t in 0..k {
                cover.set(a * k + t, a, 1);
            }
        }
        // v⊗T − v⊗T0 spans the kernel
        let mut rows = Matrix::zeros(f, m.dim() * (k - 1), q.dim());
        for a in 0..m.dim() {
            for t in 1..k {
                let r = a * (k - 1) + t - 1;
                rows.set(r, a * k + t, 1);
                rows.set(r, a * k, f.neg(1));
            }
        }
        let kernel = SubmoduleBasis::new(&q, &rows)?;
        Ok(Surjection { q, cover, kernel })
    }

    /// `Ext¹(M, N) = Hom(K, N) / restrictions of Hom(Q, N)`, cross-checked
    /// against `dim Hom(K,N) − dim Hom(Q,N) + dim Hom(M,N)`.
    fn ext_from(&self, m: &GroupModule, n: &GroupModule, s: &Surjection) -> Result<usize> {
        let f = m.field();
        let kmod = s.q.sub_quotient(&s.kernel, Part::Sub)?;
        let hk = self.hom_dim(&kmod, n)?;
        let hq = self.hom(&s.q, n)?;
        let kr = s.kernel.rows();
        let mut stacked = Matrix::zeros(f, hq.dim(), kr.rows() * n.dim());
        for (j, psi) in hq.basis.iter().enumerate() {
            stacked.row_mut(j).copy_from_slice(kr.mul(psi).data());
        }
        let restricted = stacked.rank();
        let hm = self.hom_dim(m, n)?;
        let by_image = hk - restricted;
        let by_count = hk + hm - hq.dim();
        assert_eq!(by_image, by_count, "Ext¹ formulas disagree for {} and {}", m.label(), n.label());
        debug_assert!(s.cover.rank() == m.dim());
        Ok(by_image)
    }
}
