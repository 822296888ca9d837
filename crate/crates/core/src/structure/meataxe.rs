use crate::error::{Error, Result};
use crate::ffield::Matrix;
use crate::modrep::{GroupModule, Part, SubmoduleBasis};

use super::engine::{eigenvalues, random_algebra_element, random_vector, Engine, SimpleLabel};

/// Result of one MeatAxe run.
pub enum Split {
    Proper(SubmoduleBasis),
    Simple,
}

impl Engine {
    /// Finds a proper nonzero submodule or certifies simplicity with the
    /// Norton test on a one-dimensional null space.
    pub fn meataxe(&self, m: &GroupModule) -> Result<Split> {
        let f = m.field();
        let n = m.dim();
        if n <= 1 {
            return Ok(Split::Simple);
        }
        if m.gens().is_empty() {
            return Ok(Split::Proper(SubmoduleBasis::spin(m, &Matrix::row_vector(f, unit(n, 0)))));
        }
        let mut rng = self.rng("meataxe", m);
        let dual = m.dual();
        for _ in 0..self.config().random_trials.max(8) {
            let a = random_algebra_element(m, &mut rng);
            for lambda in eigenvalues(&a, &mut rng, 2) {
                let shifted = a.sub(&Matrix::scalar(f, n, lambda));
                let null = shifted.left_kernel();
                if null.rows() == 0 {
                    continue;
                }
                let v = if null.rows() == 1 {
                    null.row(0).to_vec()
                } else {
                    let c = random_vector(f, null.rows(), &mut rng);
                    null.vec_mul(&c)
                };
                if v.iter().all(|&x| x == 0) {
                    continue;
                }
                let s = SubmoduleBasis::spin(m, &Matrix::row_vector(f, v));
                if s.dim() < n {
                    return Ok(Split::Proper(s));
                }
                if null.rows() != 1 {
                    continue;
                }
                let w = shifted.kernel_basis();
                let t = SubmoduleBasis::spin(&dual, &w.row_range(0, 1));
                if t.dim() < n {
                    // annihilator of a proper submodule of the dual
                    let ann = t.rows().kernel_basis();
                    return Ok(Split::Proper(SubmoduleBasis::new(m, &ann)?));
                }
                return Ok(Split::Simple);
            }
        }
        Err(Error::SplittingField(format!(
            "no certificate for {} (dim {n}) after {} random elements",
            m.label(),
            self.config().random_trials
        )))
    }

    pub fn is_simple(&self, m: &GroupModule) -> Result<bool> {
        self.check(m)?;
        if m.dim() == 0 {
            return Ok(false);
        }
        Ok(matches!(self.meataxe(m)?, Split::Simple))
    }

    /// Composition factors from the top down, as catalogue indices.
    pub fn composition_series(&self, m: &GroupModule) -> Result<Vec<usize>> {
        self.check(m)?;
        let mut out = Vec::new();
        self.factors_into(m, &mut out)?;
        Ok(out)
    }

    fn factors_into(&self, m: &GroupModule, out: &mut Vec<usize>) -> Result<()> {
        if m.dim() == 0 {
            return Ok(());
        }
        match self.meataxe(m)? {
            Split::Simple => out.push(self.identify_simple(m)?),
            Split::Proper(s) => {
                self.factors_into(&m.sub_quotient(&s, Part::Quotient)?, out)?;
                self.factors_into(&m.sub_quotient(&s, Part::Sub)?, out)?;
            }
        }
        Ok(())
    }

    pub fn composition_labels(&self, m: &GroupModule) -> Result<Vec<SimpleLabel>> {
        self.composition_series(m)?.into_iter().map(|i| self.label(i)).collect()
    }

    /// Composition multiplicities per catalogue entry.
    pub fn composition_multiplicities(&self, m: &GroupModule) -> Result<Vec<usize>> {
        let mut counts = vec![0; self.simples()?.len()];
        for i in self.composition_series(m)? {
            counts[i] += 1;
        }
        Ok(counts)
    }
}

fn unit(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}
