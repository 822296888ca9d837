use rand::Rng;

use crate::combinat::{all_permutations, Permutation};
use crate::error::{Error, Result};
use crate::ffield::echelon::{Echelon, Insert};
use crate::ffield::{poly, Fp, Matrix};
use crate::modrep::GroupModule;

use super::engine::Engine;

/// `kΣ_d` with elements in lexicographic order; an element is a coefficient
/// vector indexed by lex rank.
pub struct GroupAlgebra {
    f: Fp,
    n: usize,
    elems: Vec<Permutation>,
    table: Vec<u16>,
    /// `right[i][x]` is the index of `x·s_i`.
    right: Vec<Vec<u16>>,
}

impl GroupAlgebra {
    pub fn new(d: usize, f: Fp) -> Self {
        let elems = all_permutations(d);
        let n = elems.len();
        assert!(n <= u16::MAX as usize + 1, "group too large for the multiplication table");
        let mut table = vec![0u16; n * n];
        for (i, x) in elems.iter().enumerate() {
            for (j, y) in elems.iter().enumerate() {
                table[i * n + j] = x.then(y).lex_rank() as u16;
            }
        }
        let right = (0..d.saturating_sub(1))
            .map(|i| {
                let s = Permutation::adjacent(d, i).lex_rank();
                (0..n).map(|x| table[x * n + s]).collect()
            })
            .collect();
        GroupAlgebra { f, n, elems, table, right }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn one(&self) -> Vec<u32> {
        let mut v = vec![0; self.n];
        v[0] = 1;
        v
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let f = self.f;
        let n = self.n;
        let mut acc = vec![0u64; n];
        let nzb: Vec<(usize, u64)> = b.iter().enumerate().filter(|(_, &y)| y != 0).map(|(j, &y)| (j, y as u64)).collect();
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let row = &self.table[i * n..(i + 1) * n];
            for &(j, y) in &nzb {
                let k = row[j] as usize;
                acc[k] = (acc[k] + x as u64 * y) % f.p() as u64;
            }
        }
        acc.into_iter().map(|x| x as u32).collect()
    }

    /// `ρ(g)` for every group element, from the generator matrices.
    pub fn representation(&self, m: &GroupModule) -> Vec<Matrix> {
        let mut out: Vec<Option<Matrix>> = vec![None; self.n];
        out[0] = Some(Matrix::identity(self.f, m.dim()));
        let mut queue = vec![0usize];
        let mut next = 0;
        while next < queue.len() {
            let x = queue[next];
            next += 1;
            for (i, r) in self.right.iter().enumerate() {
                let y = r[x] as usize;
                if out[y].is_none() {
                    out[y] = Some(out[x].as_ref().expect("visited").mul(m.gen(i)));
                    queue.push(y);
                }
            }
        }
        out.into_iter().map(|m| m.expect("generators generate")).collect()
    }

    pub fn apply(&self, rho: &[Matrix], a: &[u32]) -> Matrix {
        let dim = rho[0].rows();
        let mut out = Matrix::zeros(self.f, dim, dim);
        for (g, &c) in a.iter().enumerate() {
            if c != 0 {
                out.add_scaled(&rho[g], c);
            }
        }
        out
    }

    /// The right ideal `eA` as a module.
    pub fn right_ideal(&self, d: usize, e: &[u32]) -> GroupModule {
        let f = self.f;
        let mut ech = Echelon::new(f, self.n);
        let mut queue = vec![e.to_vec()];
        ech.insert(e);
        let mut next = 0;
        while next < queue.len() {
            let v = queue[next].clone();
            next += 1;
            for r in &self.right {
                let mut w = vec![0u32; self.n];
                for (x, &c) in v.iter().enumerate() {
                    w[r[x] as usize] = c;
                }
                if let Insert::New(_) = ech.insert(&w) {
                    queue.push(w);
                }
            }
        }
        let rref = ech.to_matrix().rref();
        let basis = rref.matrix.row_range(0, rref.rank);
        let piv = rref.pivots;
        let gens = self
            .right
            .iter()
            .map(|r| {
                let mut moved = Matrix::zeros(f, basis.rows(), self.n);
                for i in 0..basis.rows() {
                    for (x, &c) in basis.row(i).iter().enumerate() {
                        moved.set(i, r[x] as usize, c);
                    }
                }
                moved.select_cols(&piv)
            })
            .collect();
        GroupModule::with_dim(d, f, basis.rows(), gens).expect("ideal shapes agree")
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elems[i]
    }
}

/// Sum over `λ` of the generalized `λ`-eigenspace dimension of `c` on `V`,
/// where `V` is the row space of `e`.
fn generalized_dims(f: Fp, c: &Matrix, e: &Matrix) -> Vec<usize> {
    let r = e.rref();
    let basis = r.matrix.row_range(0, r.rank);
    let mut out = vec![0; f.p() as usize];
    if basis.rows() == 0 {
        return out;
    }
    let restricted = basis.mul(c).select_cols(&r.pivots);
    let k = restricted.rows();
    for (lambda, slot) in out.iter_mut().enumerate() {
        let mut u = restricted.sub(&Matrix::scalar(f, k, lambda as u32));
        // k-th power kills the generalized eigenspace
        let mut p = 1;
        while p < k {
            u = u.mul(&u);
            p *= 2;
        }
        *slot = k - u.rank();
    }
    out
}

impl Engine {
    pub fn group_algebra(&self) -> &GroupAlgebra {
        self.algebra.get_or_init(|| GroupAlgebra::new(self.d(), self.field()))
    }

    /// Projective indecomposables `P(D)`, indexed like [`simples`](Self::simples).
    pub fn pims(&self) -> Result<&[GroupModule]> {
        self.pims.get_or_init(|| self.build_pims()).as_ref().map(Vec::as_slice).map_err(Clone::clone)
    }

    fn build_pims(&self) -> Result<Vec<GroupModule>> {
        self.check_regular_limit()?;
        if self.d() > self.config().pim_limit {
            return Err(Error::RegularLimit { d: self.d(), limit: self.config().pim_limit });
        }
        let f = self.field();
        let simples = self.simples()?;
        let alg = self.group_algebra();
        let rhos: Vec<Vec<Matrix>> = simples.iter().map(|s| alg.representation(&s.module)).collect();
        let ranks = |e: &[u32]| -> Vec<usize> { rhos.iter().map(|r| alg.apply(r, e).rank()).collect() };
        let mut found: Vec<Option<Vec<u32>>> = vec![None; simples.len()];
        let mut stack = vec![alg.one()];
        let mut rng = self.rng("pims", &GroupModule::trivial(self.d(), f));
        while let Some(e) = stack.pop() {
            let rk = ranks(&e);
            if rk.iter().enumerate().all(|(i, &r)| r == 0 || found[i].is_some()) {
                continue;
            }
            if rk.iter().sum::<usize>() == 1 {
                let i = rk.iter().position(|&r| r == 1).expect("one simple");
                found[i] = Some(e);
                continue;
            }
            let (a, b) = self.split_idempotent(alg, &rhos, &e, &mut rng)?;
            stack.push(a);
            stack.push(b);
        }
        let mut out = Vec::new();
        for (s, e) in simples.iter().zip(found) {
            let e = e.ok_or_else(|| Error::Identification(format!("no primitive idempotent for {}", s.label())))?;
            out.push(alg.right_ideal(self.d(), &e).labeled(format!("P({})", s.label())));
        }
        Ok(out)
    }

    /// Splits a non-primitive idempotent into two orthogonal nonzero ones.
    fn split_idempotent(
        &self,
        alg: &GroupAlgebra,
        rhos: &[Vec<Matrix>],
        e: &[u32],
        rng: &mut rand_chacha::ChaCha8Rng,
    ) -> Result<(Vec<u32>, Vec<u32>)> {
        let f = self.field();
        let n = alg.order();
        let total: usize = rhos.iter().map(|r| alg.apply(r, e).rank()).sum();
        for _ in 0..self.config().random_trials {
            let a: Vec<u32> = (0..n).map(|_| rng.gen_range(0..f.p())).collect();
            let c = alg.mul(&alg.mul(e, &a), e);
            let mut dims = vec![0usize; f.p() as usize];
            for r in rhos {
                let rc = alg.apply(r, &c);
                let re = alg.apply(r, e);
                for (k, v) in generalized_dims(f, &rc, &re).into_iter().enumerate() {
                    dims[k] += v;
                }
            }
            let Some(lambda) = dims.iter().position(|&s| s > 0 && s < total) else { continue };
            // u = c − λe inside eAe, whose unit is e
            let u: Vec<u32> = c.iter().zip(e).map(|(&x, &y)| f.sub(x, f.mul(lambda as u32, y))).collect();
            let mut ech = Echelon::tracking(f, n);
            let mut powers = vec![e.to_vec()];
            let minpoly = loop {
                let last = powers.last().expect("nonempty").clone();
                match ech.insert(&last) {
                    Insert::New(_) => powers.push(alg.mul(&last, &u)),
                    Insert::Dependent(coeffs) => {
                        let mut m: Vec<u32> = coeffs.iter().map(|&x| f.neg(x)).collect();
                        m.push(1);
                        break m;
                    }
                }
            };
            let s = minpoly.iter().take_while(|&&x| x == 0).count();
            let g = minpoly[s..].to_vec();
            if s == 0 || poly::degree(&g).unwrap_or(0) == 0 {
                continue;
            }
            let mut ts = vec![0u32; s];
            ts.push(1);
            let (one, _alpha, beta) = poly::ext_gcd(f, &ts, &g);
            debug_assert_eq!(one, vec![1]);
            let (_, q) = poly::divmod(f, &poly::mul(f, &beta, &g), &minpoly);
            let mut e0 = vec![0u32; n];
            for (k, &c) in q.iter().enumerate() {
                crate::ffield::echelon::axpy(f, &mut e0, &powers[k], c);
            }
            if alg.mul(&e0, &e0) != e0 {
                return Err(Error::SplittingField("Fitting idempotent failed to be idempotent".into()));
            }
            let e1: Vec<u32> = e.iter().zip(&e0).map(|(&x, &y)| f.sub(x, y)).collect();
            if e0.iter().all(|&x| x == 0) || e1.iter().all(|&x| x == 0) {
                continue;
            }
            return Ok((e0, e1));
        }
        Err(Error::SearchExhausted("no element of eAe splits the idempotent".into()))
    }
}
