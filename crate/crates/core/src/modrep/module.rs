use std::fmt;

use sha2::{Digest, Sha256};

use crate::combinat::Permutation;
use crate::error::{Error, Result};
use crate::ffield::echelon::{Echelon, Insert};
use crate::ffield::{serial, Fp, Matrix};

/// A kΣ_d-module: the matrices of the adjacent transpositions
/// `s_1, …, s_{d-1}` acting on row vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupModule {
    d: usize,
    f: Fp,
    dim: usize,
    gens: Vec<Matrix>,
    label: Option<String>,
}

impl GroupModule {
    /// Checks shapes only; the group relations are checked by [`validate`](Self::validate).
    pub fn new(d: usize, f: Fp, gens: Vec<Matrix>) -> Result<Self> {
        if gens.len() != d.saturating_sub(1) {
            return Err(Error::InvalidModule(format!("{} generators for degree {d}", gens.len())));
        }
        let dim = gens.first().map_or(0, Matrix::rows);
        for g in &gens {
            if g.rows() != dim || g.cols() != dim || g.p() != f.p() {
                return Err(Error::InvalidModule("generator shapes or fields disagree".into()));
            }
        }
        Ok(GroupModule { d, f, dim, gens, label: None })
    }

    /// As [`new`](Self::new) but with an explicit dimension, needed when d ≤ 1.
    pub fn with_dim(d: usize, f: Fp, dim: usize, gens: Vec<Matrix>) -> Result<Self> {
        let mut m = Self::new(d, f, gens)?;
        if d > 1 && m.dim != dim {
            return Err(Error::InvalidModule(format!("dimension {dim} does not match generators")));
        }
        m.dim = dim;
        Ok(m)
    }

    pub fn trivial(d: usize, f: Fp) -> Self {
        Self::scalar_module(d, f, 1).labeled("trivial")
    }

    pub fn sign(d: usize, f: Fp) -> Self {
        Self::scalar_module(d, f, f.neg(1)).labeled("sign")
    }

    pub fn zero(d: usize, f: Fp) -> Self {
        let gens = vec![Matrix::zeros(f, 0, 0); d.saturating_sub(1)];
        GroupModule { d, f, dim: 0, gens, label: Some("0".into()) }
    }

    fn scalar_module(d: usize, f: Fp, c: u32) -> Self {
        let gens = vec![Matrix::scalar(f, 1, c); d.saturating_sub(1)];
        GroupModule { d, f, dim: 1, gens, label: None }
    }

    pub fn labeled(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> &str {
        self.label.as_deref().unwrap_or("?")
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

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[Matrix] {
        &self.gens
    }

    pub fn gen(&self, i: usize) -> &Matrix {
        &self.gens[i]
    }

    /// True iff every generator is an involution and the braid relations hold.
    pub fn validate(&self) -> bool {
        let n = self.gens.len();
        let id = Matrix::identity(self.f, self.dim);
        for i in 0..n {
            let g = &self.gens[i];
            if g.mul(g) != id {
                return false;
            }
            if i + 1 < n {
                let h = &self.gens[i + 1];
                if g.mul(h).mul(g) != h.mul(g).mul(h) {
                    return false;
                }
            }
            for j in i + 2..n {
                let h = &self.gens[j];
                if g.mul(h) != h.mul(g) {
                    return false;
                }
            }
        }
        true
    }

    pub fn check_compatible(&self, other: &GroupModule) -> Result<()> {
        if self.d != other.d || self.p() != other.p() {
            return Err(Error::ModuleMismatch(format!(
                "Σ_{} over GF({}) vs Σ_{} over GF({})",
                self.d,
                self.p(),
                other.d,
                other.p()
            )));
        }
        Ok(())
    }

    /// Contragredient module. Generators are involutions, so the inverse
    /// transpose is the transpose.
    pub fn dual(&self) -> GroupModule {
        GroupModule {
            gens: self.gens.iter().map(Matrix::transpose).collect(),
            label: Some(format!("dual({})", self.label())),
            ..self.clone()
        }
    }

    pub fn sign_twist(&self) -> GroupModule {
        GroupModule {
            gens: self.gens.iter().map(Matrix::neg).collect(),
            label: Some(format!("sgn*({})", self.label())),
            ..self.clone()
        }
    }

    pub fn tensor(&self, other: &GroupModule) -> Result<GroupModule> {
        self.check_compatible(other)?;
        let gens = self.gens.iter().zip(&other.gens).map(|(a, b)| a.kronecker(b)).collect();
        Ok(GroupModule {
            d: self.d,
            f: self.f,
            dim: self.dim * other.dim,
            gens,
            label: Some(format!("tensor({},{})", self.label(), other.label())),
        })
    }

    pub fn direct_sum(d: usize, f: Fp, parts: &[&GroupModule]) -> Result<GroupModule> {
        for m in parts {
            if m.d != d || m.p() != f.p() {
                return Err(Error::ModuleMismatch("direct sum of modules over different groups".into()));
            }
        }
        let dim = parts.iter().map(|m| m.dim).sum();
        let gens = (0..d.saturating_sub(1))
            .map(|i| Matrix::block_diagonal(f, &parts.iter().map(|m| &m.gens[i]).collect::<Vec<_>>()))
            .collect();
        let label = parts.iter().map(|m| m.label()).collect::<Vec<_>>().join(" + ");
        Ok(GroupModule { d, f, dim, gens, label: Some(label) })
    }

    /// Conjugates by an invertible change of basis: the new basis vectors
    /// are the rows of `p`.
    pub fn change_basis(&self, p: &Matrix) -> Result<GroupModule> {
        let inv = p
            .inverse()
            .ok_or_else(|| Error::DimensionMismatch("change of basis is not invertible".into()))?;
        let gens = self.gens.iter().map(|g| p.mul(g).mul(&inv)).collect();
        Ok(GroupModule { gens, ..self.clone() })
    }

    pub fn sub_quotient(&self, sub: &SubmoduleBasis, part: Part) -> Result<GroupModule> {
        sub.check_stable(self)?;
        let gens: Vec<Matrix> = match part {
            Part::Sub => self.gens.iter().map(|g| sub.coords(&sub.rows.mul(g))).collect(),
            Part::Quotient => {
                let free = sub.non_pivots();
                self.gens.iter().map(|g| sub.quotient_coords(&g.select_rows(&free))).collect()
            }
        };
        let dim = match part {
            Part::Sub => sub.dim(),
            Part::Quotient => self.dim - sub.dim(),
        };
        let label = match part {
            Part::Sub => format!("sub({})", self.label()),
            Part::Quotient => format!("quot({})", self.label()),
        };
        Ok(GroupModule { d: self.d, f: self.f, dim, gens, label: Some(label) })
    }

    /// Matrix by which `g` acts.
    pub fn act(&self, g: &Permutation) -> Matrix {
        g.reduced_word()
            .into_iter()
            .fold(Matrix::identity(self.f, self.dim), |acc, i| acc.mul(&self.gens[i]))
    }

    /// Every generator has exactly one nonzero entry in each row and column.
    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| {
            let mut col_seen = vec![false; self.dim];
            (0..self.dim).all(|i| {
                let nz: Vec<usize> = (0..self.dim).filter(|&j| g.get(i, j) != 0).collect();
                nz.len() == 1 && !std::mem::replace(&mut col_seen[nz[0]], true)
            })
        })
    }

    /// SHA-256 over degree, modulus, dimension and the serialized generators.
    pub fn content_hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(b"symrep-module");
        h.update((self.d as u32).to_le_bytes());
        h.update(self.p().to_le_bytes());
        h.update((self.dim as u32).to_le_bytes());
        for g in &self.gens {
            h.update(serial::to_bytes(g));
        }
        hex::encode(h.finalize())
    }
}

impl fmt::Debug for GroupModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupModule({}, d={}, p={}, dim={})", self.label(), self.d, self.p(), self.dim)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    Sub,
    Quotient,
}

/// A subspace in RREF, with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmoduleBasis {
    rows: Matrix,
    pivots: Vec<usize>,
}

impl SubmoduleBasis {
    /// Canonicalizes `rows` and checks stability under `m`.
    pub fn new(m: &GroupModule, rows: &Matrix) -> Result<Self> {
        if rows.cols() != m.dim() {
            return Err(Error::DimensionMismatch(format!("{} columns in a {}-dimensional module", rows.cols(), m.dim())));
        }
        let s = Self::from_rows_unchecked(rows);
        s.check_stable(m)?;
        Ok(s)
    }

    pub(crate) fn from_rows_unchecked(rows: &Matrix) -> Self {
        let r = rows.rref();
        SubmoduleBasis { rows: r.matrix.row_range(0, r.rank), pivots: r.pivots }
    }

    pub fn zero(m: &GroupModule) -> Self {
        SubmoduleBasis { rows: Matrix::zeros(m.field(), 0, m.dim()), pivots: Vec::new() }
    }

    pub fn full(m: &GroupModule) -> Self {
        SubmoduleBasis { rows: Matrix::identity(m.field(), m.dim()), pivots: (0..m.dim()).collect() }
    }

    /// The submodule generated by the rows of `seeds`.
    pub fn spin(m: &GroupModule, seeds: &Matrix) -> Self {
        let mut e = Echelon::new(m.field(), m.dim());
        let mut queue = Vec::new();
        for i in 0..seeds.rows() {
            if let Insert::New(_) = e.insert(seeds.row(i)) {
                queue.push(seeds.row(i).to_vec());
            }
        }
        let mut next = 0;
        while next < queue.len() && e.len() < m.dim() {
            let v = queue[next].clone();
            next += 1;
            for g in m.gens() {
                let w = g.vec_mul(&v);
                if let Insert::New(_) = e.insert(&w) {
                    queue.push(w);
                }
            }
        }
        Self::from_rows_unchecked(&e.to_matrix())
    }

    pub fn rows(&self) -> &Matrix {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn dim(&self) -> usize {
        self.rows.rows()
    }

    pub fn ambient(&self) -> usize {
        self.rows.cols()
    }

    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_piv = vec![false; self.ambient()];
        for &c in &self.pivots {
            is_piv[c] = true;
        }
        (0..self.ambient()).filter(|&c| !is_piv[c]).collect()
    }

    /// `v − Σ v[p_k]·row_k` for each row `v`; zero exactly on the span.
    pub fn reduce(&self, v: &Matrix) -> Matrix {
        if self.dim() == 0 {
            return v.clone();
        }
        v.sub(&v.select_cols(&self.pivots).mul(&self.rows))
    }

    /// Coordinates of rows lying in the span, read off the pivot columns.
    pub fn coords(&self, v: &Matrix) -> Matrix {
        v.select_cols(&self.pivots)
    }

    /// Coordinates in the quotient (entries at non-pivot columns after reduction).
    pub fn quotient_coords(&self, v: &Matrix) -> Matrix {
        self.reduce(v).select_cols(&self.non_pivots())
    }

    /// Inverse of [`quotient_coords`](Self::quotient_coords): places quotient
    /// coordinates at the non-pivot columns.
    pub fn lift_quotient(&self, q: &Matrix) -> Matrix {
        let free = self.non_pivots();
        let mut out = Matrix::zeros(self.rows.field(), q.rows(), self.ambient());
        for i in 0..q.rows() {
            for (j, &c) in free.iter().enumerate() {
                out.set(i, c, q.get(i, j));
            }
        }
        out
    }

    pub fn contains(&self, v: &Matrix) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains_sub(&self, other: &SubmoduleBasis) -> bool {
        self.contains(&other.rows)
    }

    pub fn check_stable(&self, m: &GroupModule) -> Result<()> {
        if self.ambient() != m.dim() {
            return Err(Error::DimensionMismatch("submodule lives in a different module".into()));
        }
        for g in m.gens() {
            if !self.contains(&self.rows.mul(g)) {
                return Err(Error::NotStable);
            }
        }
        Ok(())
    }

    pub fn sum(&self, other: &SubmoduleBasis) -> SubmoduleBasis {
        Self::from_rows_unchecked(&self.rows.vstack(&other.rows))
    }

    pub fn intersection(&self, other: &SubmoduleBasis) -> SubmoduleBasis {
        let rows = crate::ffield::subspace::intersection(&self.rows, &other.rows);
        SubmoduleBasis { pivots: rows.rref().pivots, rows }
    }

    /// Image of a submodule of a sub- or quotient module back in the
    /// ambient coordinates: `rows` given in the coordinates of `part`.
    pub fn lift(&self, part: Part, rows: &Matrix) -> SubmoduleBasis {
        match part {
            Part::Sub => Self::from_rows_unchecked(&rows.mul(&self.rows)),
            Part::Quotient => Self::from_rows_unchecked(&self.lift_quotient(rows).vstack(&self.rows)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Fp {
        Fp::new(5).unwrap()
    }

    fn perm_matrix(f: Fp, images: &[usize]) -> Matrix {
        Matrix::from_fn(f, images.len(), images.len(), |i, j| (images[i] == j) as u32)
    }

    /// Natural 3-dimensional permutation module of Σ_3.
    fn natural(f: Fp) -> GroupModule {
        GroupModule::new(3, f, vec![perm_matrix(f, &[1, 0, 2]), perm_matrix(f, &[0, 2, 1])]).unwrap()
    }

    #[test]
    fn validation_examples() {
        let f = f5();
        assert!(GroupModule::trivial(4, f).validate());
        assert!(GroupModule::sign(4, f).validate());
        assert!(natural(f).validate());
        let bad = GroupModule::new(2, f, vec![Matrix::scalar(f, 1, 2)]).unwrap();
        assert!(!bad.validate());
        let no_braid = GroupModule::new(3, f, vec![perm_matrix(f, &[1, 0, 2]), perm_matrix(f, &[1, 0, 2]).neg()]).unwrap();
        assert!(!no_braid.validate());
    }

    #[test]
    fn functor_identities() {
        let f = f5();
        let m = natural(f);
        assert_eq!(m.sign_twist().sign_twist().gens(), m.gens());
        assert_eq!(m.dual().dual().gens(), m.gens());
        let s = GroupModule::sign(3, f);
        let twice = m.tensor(&s).unwrap().tensor(&s).unwrap();
        assert_eq!(twice.gens(), m.gens());
        assert_eq!(GroupModule::trivial(3, f).sign_twist().gens(), s.gens());
        let sum = GroupModule::direct_sum(3, f, &[&m, &s]).unwrap();
        assert_eq!(sum.dim(), 4);
        assert!(sum.validate());
        assert_eq!(GroupModule::direct_sum(3, f, &[]).unwrap().dim(), 0);
        assert_eq!(GroupModule::direct_sum(3, f, &[&m]).unwrap().gens(), m.gens());
        assert!(m.tensor(&GroupModule::trivial(4, f)).is_err());
    }

    #[test]
    fn sub_and_quotient_of_natural_module() {
        let f = f5();
        let m = natural(f);
        let ones = SubmoduleBasis::new(&m, &Matrix::from_rows(f, &[[1, 1, 1]])).unwrap();
        let sub = m.sub_quotient(&ones, Part::Sub).unwrap();
        assert_eq!(sub.dim(), 1);
        assert!(sub.gens().iter().all(|g| g.is_identity()));
        let q = m.sub_quotient(&ones, Part::Quotient).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.validate());
        assert_eq!(m.sub_quotient(&SubmoduleBasis::zero(&m), Part::Quotient).unwrap().gens(), m.gens());
        assert_eq!(m.sub_quotient(&SubmoduleBasis::full(&m), Part::Sub).unwrap().gens(), m.gens());
        assert_eq!(
            SubmoduleBasis::new(&m, &Matrix::from_rows(f, &[[1, 0, 0]])).unwrap_err(),
            Error::NotStable
        );
        let spun = SubmoduleBasis::spin(&m, &Matrix::from_rows(f, &[[1, 4, 0]]));
        assert_eq!(spun.dim(), 2);
        assert!(spun.check_stable(&m).is_ok());
    }

    #[test]
    fn action_of_words() {
        let f = f5();
        let m = natural(f);
        let c = Permutation::cycle(3, &[0, 1, 2]);
        assert_eq!(m.act(&c), perm_matrix(f, &[1, 2, 0]));
        assert!(m.is_monomial());
        assert_ne!(m.content_hash(), m.sign_twist().content_hash());
    }
}
