use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::combinat::{partitions_of, Partition};
use crate::error::{Error, Result};
use crate::ffield::{Fp, Matrix};
use crate::modrep::GroupModule;
use crate::specht::{simple_module, specht_module};

use super::algebra::GroupAlgebra;
use super::hom::{HomSpace, Presentation};
use super::projective::ProjectivePresentation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    pub seed: u64,
    /// Largest degree for which regular-module scale work (projective
    /// covers, Ext) is attempted.
    pub regular_limit: usize,
    /// Largest degree for which PIMs are cut out of the group algebra.
    pub pim_limit: usize,
    /// Exhaustive isomorphism search is allowed when `p^dim Hom` is at most this.
    pub iso_exhaustive_bound: u64,
    pub random_trials: usize,
    /// Step budget for filtration searches.
    pub budget: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config { seed: 0, regular_limit: 7, pim_limit: 6, iso_exhaustive_bound: 1 << 16, random_trials: 64, budget: 1_000_000 }
    }
}

#[derive(Clone, Debug)]
pub struct SpechtPair {
    pub shape: Partition,
    pub specht: GroupModule,
    pub dual: GroupModule,
}

/// A simple module with both of its names: `D^μ` for `μ` regular and
/// `D_λ` for `λ` restricted.
#[derive(Clone, Debug)]
pub struct Simple {
    pub regular: Partition,
    pub restricted: Partition,
    pub module: GroupModule,
}

impl Simple {
    pub fn label(&self) -> SimpleLabel {
        SimpleLabel { regular: self.regular.clone(), restricted: self.restricted.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleLabel {
    pub regular: Partition,
    pub restricted: Partition,
}

impl fmt::Display for SimpleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D_{} [D^{}]", self.restricted, self.regular)
    }
}

/// Analysis context for one `(d, p)`: configuration, memoized catalogues
/// and cached presentations.
pub struct Engine {
    d: usize,
    f: Fp,
    config: Config,
    simples: OnceLock<Result<Vec<Simple>>>,
    pub(super) algebra: OnceLock<GroupAlgebra>,
    pub(super) pims: OnceLock<Result<Vec<GroupModule>>>,
    spechts: OnceLock<Vec<SpechtPair>>,
    presentations: Mutex<HashMap<String, Arc<Presentation>>>,
    pub(super) covers: Mutex<HashMap<String, Arc<ProjectivePresentation>>>,
}

impl Engine {
    pub fn new(d: usize, f: Fp, config: Config) -> Self {
        Engine {
            d,
            f,
            config,
            simples: OnceLock::new(),
            algebra: OnceLock::new(),
            pims: OnceLock::new(),
            spechts: OnceLock::new(),
            presentations: Mutex::new(HashMap::new()),
            covers: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_defaults(d: usize, p: u32) -> Result<Self> {
        Ok(Self::new(d, Fp::new(p)?, Config::default()))
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn field(&self) -> Fp {
        self.f
    }

    pub fn p(&self) -> u32 {
        self.f.p()
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    /// Deterministic generator for one task, independent of scheduling.
    pub fn rng(&self, tag: &str, m: &GroupModule) -> ChaCha8Rng {
        let mut h = Sha256::new();
        h.update(self.config.seed.to_le_bytes());
        h.update(tag.as_bytes());
        h.update(m.content_hash().as_bytes());
        ChaCha8Rng::from_seed(h.finalize().into())
    }

    pub(super) fn check(&self, m: &GroupModule) -> Result<()> {
        if m.d() != self.d || m.p() != self.f.p() {
            return Err(Error::ModuleMismatch(format!(
                "engine is for d={} p={}, module has d={} p={}",
                self.d,
                self.f.p(),
                m.d(),
                m.p()
            )));
        }
        Ok(())
    }

    pub fn check_regular_limit(&self) -> Result<()> {
        if self.d > self.config.regular_limit {
            return Err(Error::RegularLimit { d: self.d, limit: self.config.regular_limit });
        }
        Ok(())
    }

    pub fn presentation(&self, m: &GroupModule) -> Arc<Presentation> {
        let key = m.content_hash();
        if let Some(p) = self.presentations.lock().expect("presentation cache").get(&key) {
            return p.clone();
        }
        let p = Arc::new(Presentation::new(m));
        self.presentations.lock().expect("presentation cache").insert(key, p.clone());
        p
    }

    pub fn hom(&self, m: &GroupModule, n: &GroupModule) -> Result<HomSpace> {
        m.check_compatible(n)?;
        if m.is_monomial() && n.is_monomial() {
            return super::hom::hom_space(m, n);
        }
        Ok(self.presentation(m).hom_space(n))
    }

    pub fn hom_dim(&self, m: &GroupModule, n: &GroupModule) -> Result<usize> {
        m.check_compatible(n)?;
        if m.is_monomial() && n.is_monomial() {
            return super::hom::hom_dim(m, n);
        }
        Ok(self.presentation(m).hom_dim(n))
    }

    /// `S^λ` and `S_λ` for every `λ ⊢ d`, in partition order.
    pub fn spechts(&self) -> &[SpechtPair] {
        self.spechts.get_or_init(|| {
            partitions_of(self.d)
                .into_iter()
                .map(|l| {
                    let (s, _) = specht_module(&l, self.f);
                    let dual = s.dual().labeled(format!("S_{l}"));
                    SpechtPair { shape: l, specht: s, dual }
                })
                .collect()
        })
    }

    pub fn specht_pair(&self, lambda: &Partition) -> Result<&SpechtPair> {
        self.spechts()
            .iter()
            .find(|s| &s.shape == lambda)
            .ok_or_else(|| Error::SizeMismatch(lambda.size(), self.d))
    }

    /// The simple modules `D^μ`, `μ` regular, in partition order.
    pub fn simples(&self) -> Result<&[Simple]> {
        self.simples.get_or_init(|| self.build_simples()).as_ref().map(Vec::as_slice).map_err(Clone::clone)
    }

    fn build_simples(&self) -> Result<Vec<Simple>> {
        let p = self.f.p();
        let regular: Vec<Partition> = partitions_of(self.d).into_iter().filter(|l| l.is_p_regular(p)).collect();
        let mods: Vec<GroupModule> = regular.iter().map(|mu| simple_module(mu, self.f)).collect::<Result<_>>()?;
        let mut out = Vec::new();
        for (mu, m) in regular.iter().zip(&mods) {
            let tw = m.sign_twist();
            let mut nu = None;
            for (cand, c) in regular.iter().zip(&mods) {
                if c.dim() == tw.dim() && self.hom_dim(&tw, c)? > 0 {
                    nu = Some(cand.clone());
                    break;
                }
            }
            let nu = nu.ok_or_else(|| Error::Identification(format!("no regular label for the twist of D^{mu}")))?;
            out.push(Simple { regular: mu.clone(), restricted: nu.conjugate(), module: m.clone() });
        }
        Ok(out)
    }

    pub fn simple_by_regular(&self, mu: &Partition) -> Result<&Simple> {
        self.simples()?
            .iter()
            .find(|s| &s.regular == mu)
            .ok_or_else(|| Error::NotRegular(mu.to_string(), self.p()))
    }

    pub fn simple_by_restricted(&self, lambda: &Partition) -> Result<&Simple> {
        self.simples()?
            .iter()
            .find(|s| &s.restricted == lambda)
            .ok_or_else(|| Error::NotRestricted(lambda.to_string(), self.p()))
    }

    /// Index in the catalogue of a module known to be simple.
    pub fn identify_simple(&self, m: &GroupModule) -> Result<usize> {
        for (i, s) in self.simples()?.iter().enumerate() {
            if s.module.dim() == m.dim() && self.hom_dim(m, &s.module)? > 0 {
                return Ok(i);
            }
        }
        Err(Error::Identification(format!("{} is not isomorphic to any catalogued simple", m.label())))
    }

    pub fn label(&self, i: usize) -> Result<SimpleLabel> {
        Ok(self.simples()?[i].label())
    }
}

/// A random element of the image of the group algebra, as a sum of random
/// words in the generators with random coefficients.
pub(super) fn random_algebra_element(m: &GroupModule, rng: &mut ChaCha8Rng) -> Matrix {
    let f = m.field();
    let n = m.dim();
    let k = m.gens().len();
    let mut acc = Matrix::zeros(f, n, n);
    if k == 0 {
        return Matrix::identity(f, n);
    }
    let mut x = Matrix::identity(f, n);
    for step in 0..8 {
        x = x.mul(m.gen(rng.gen_range(0..k)));
        if step % 3 == 1 {
            x.add_scaled(m.gen(rng.gen_range(0..k)), rng.gen_range(0..f.p()));
        }
        acc.add_scaled(&x, rng.gen_range(0..f.p()));
    }
    acc
}

/// Minimal polynomial of `a` relative to `v` (lowest degree first, monic).
pub(super) fn krylov_poly(a: &Matrix, v: &[u32]) -> Vec<u32> {
    use crate::ffield::echelon::{Echelon, Insert};
    let f = a.field();
    let mut e = Echelon::tracking(f, a.cols());
    let mut w = v.to_vec();
    loop {
        match e.insert(&w) {
            Insert::New(_) => w = a.vec_mul(&w),
            Insert::Dependent(c) => {
                let mut poly: Vec<u32> = c.iter().map(|&x| f.neg(x)).collect();
                poly.push(1);
                return poly;
            }
        }
    }
}

pub(super) fn random_vector(f: Fp, n: usize, rng: &mut ChaCha8Rng) -> Vec<u32> {
    (0..n).map(|_| rng.gen_range(0..f.p())).collect()
}

/// Eigenvalues in GF(p) found from a few Krylov sequences.
pub(super) fn eigenvalues(a: &Matrix, rng: &mut ChaCha8Rng, tries: usize) -> Vec<u32> {
    let f = a.field();
    let mut roots = Vec::new();
    for _ in 0..tries {
        let v = random_vector(f, a.rows(), rng);
        for r in crate::ffield::poly::roots(f, &krylov_poly(a, &v)) {
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
    }
    roots.sort_unstable();
    roots
}
