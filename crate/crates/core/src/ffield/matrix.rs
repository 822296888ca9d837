use std::fmt;

use rayon::prelude::*;

use super::field::Fp;
use crate::error::{Error, Result};

/// Work (rows × inner × cols) above which products and eliminations fan out
/// over the rayon pool. Row partitioning keeps results bit-identical.
const PAR_WORK: usize = 1 << 21;

/// Dense row-major matrix over GF(p).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    f: Fp,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn zeros(f: Fp, rows: usize, cols: usize) -> Self {
        Matrix { f, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(f: Fp, n: usize) -> Self {
        let mut m = Self::zeros(f, n, n);
        let one = 1 % f.p();
        for i in 0..n {
            m.data[i * n + i] = one;
        }
        m
    }

    pub fn scalar(f: Fp, n: usize, c: u32) -> Self {
        let mut m = Self::zeros(f, n, n);
        for i in 0..n {
            m.data[i * n + i] = c;
        }
        m
    }

    pub fn from_vec(f: Fp, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|&&x| x >= f.p()) {
            return Err(Error::DimensionMismatch(format!("entry {bad} not reduced mod {}", f.p())));
        }
        Ok(Matrix { f, rows, cols, data })
    }

    /// Builds a matrix from signed integer rows, reducing mod p.
    pub fn from_rows<R: AsRef<[i64]>>(f: Fp, rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.as_ref().len(), cols, "ragged rows");
            data.extend(r.as_ref().iter().map(|&x| f.from_i64(x)));
        }
        Matrix { f, rows: rows.len(), cols, data }
    }

    pub fn from_fn(f: Fp, rows: usize, cols: usize, mut g: impl FnMut(usize, usize) -> u32) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f.reduce(g(i, j)));
            }
        }
        Matrix { f, rows, cols, data }
    }

    #[inline]
    pub fn field(&self) -> Fp {
        self.f
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.f.p()
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        debug_assert!(v < self.f.p());
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [u32] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                self.row(i).iter().enumerate().all(|(j, &x)| x == if i == j { 1 } else { 0 })
            })
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|&&x| x != 0).count()
    }

    pub fn row_vector(f: Fp, v: Vec<u32>) -> Self {
        Matrix { f, rows: 1, cols: v.len(), data: v }
    }

    fn check_same_field(&self, other: &Matrix) {
        assert_eq!(self.f.p(), other.f.p(), "matrices over different fields");
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.f, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.check_same_field(other);
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        let f = self.f;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { f, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.check_same_field(other);
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sub");
        let f = self.f;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Matrix { f, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: u32) -> Matrix {
        let f = self.f;
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        Matrix { f, rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(self.f.neg(1))
    }

    /// `self += c * other`, in place.
    pub fn add_scaled(&mut self, other: &Matrix, c: u32) {
        self.check_same_field(other);
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c == 0 {
            return;
        }
        let f = self.f;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.reduce(*a + c * b);
        }
    }

    /// Matrix product. Dot products are accumulated in `u64` and reduced
    /// once, which is exact for every inner dimension below 2^32.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.check_same_field(other);
        assert_eq!(self.cols, other.rows, "shape mismatch in mul: {}x{} * {}x{}", self.rows, self.cols, other.rows, other.cols);
        let (n, k, m) = (self.rows, self.cols, other.cols);
        let mut out = Matrix::zeros(self.f, n, m);
        if n == 0 || m == 0 || k == 0 {
            return out;
        }
        let sparse_right = other.nnz() * 8 < k * m;
        let csr = if sparse_right { Some(Csr::new(other)) } else { None };
        let f = self.f;
        let kernel = |i: usize, out_row: &mut [u32]| {
            let a_row = &self.data[i * k..(i + 1) * k];
            let mut acc = vec![0u64; m];
            match &csr {
                Some(csr) => {
                    for (t, &a) in a_row.iter().enumerate() {
                        if a == 0 {
                            continue;
                        }
                        for &(j, b) in csr.row(t) {
                            acc[j as usize] += (a * b) as u64;
                        }
                    }
                }
                None => {
                    for (t, &a) in a_row.iter().enumerate() {
                        if a == 0 {
                            continue;
                        }
                        let a = a as u64;
                        let b_row = &other.data[t * m..(t + 1) * m];
                        for (x, &b) in acc.iter_mut().zip(b_row) {
                            *x += a * b as u64;
                        }
                    }
                }
            }
            for (o, x) in out_row.iter_mut().zip(acc) {
                *o = f.reduce64(x);
            }
        };
        if n * k * m >= PAR_WORK && n > 1 {
            out.data.par_chunks_mut(m).enumerate().for_each(|(i, r)| kernel(i, r));
        } else {
            out.data.chunks_mut(m).enumerate().for_each(|(i, r)| kernel(i, r));
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.f, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        self.check_same_field(other);
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(self.f, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    let base = (i * other.rows + k) * c + j * other.cols;
                    for l in 0..other.cols {
                        out.data[base + l] = self.f.mul(a, other.get(k, l));
                    }
                }
            }
        }
        out
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        self.check_same_field(other);
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { f: self.f, rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn vstack_all(f: Fp, cols: usize, parts: &[&Matrix]) -> Matrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for m in parts {
            assert_eq!(m.cols, cols);
            data.extend_from_slice(&m.data);
            rows += m.rows;
        }
        Matrix { f, rows, cols, data }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        self.check_same_field(other);
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Matrix { f: self.f, rows: self.rows, cols, data }
    }

    pub fn block_diagonal(f: Fp, blocks: &[&Matrix]) -> Matrix {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(f, r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                out.data[(r0 + i) * c + c0..(r0 + i) * c + c0 + b.cols].copy_from_slice(b.row(i));
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Matrix { f: self.f, rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.rows);
        for i in 0..self.rows {
            let r = self.row(i);
            data.extend(idx.iter().map(|&j| r[j]));
        }
        Matrix { f: self.f, rows: self.rows, cols: idx.len(), data }
    }

    pub fn row_range(&self, start: usize, end: usize) -> Matrix {
        Matrix {
            f: self.f,
            rows: end - start,
            cols: self.cols,
            data: self.data[start * self.cols..end * self.cols].to_vec(),
        }
    }

    pub fn col_range(&self, start: usize, end: usize) -> Matrix {
        let idx: Vec<usize> = (start..end).collect();
        self.select_cols(&idx)
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.rows);
        let mut acc = vec![0u64; self.cols];
        for (t, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let a = a as u64;
            for (x, &b) in acc.iter_mut().zip(self.row(t)) {
                *x += a * b as u64;
            }
        }
        acc.into_iter().map(|x| self.f.reduce64(x)).collect()
    }

    /// Reduced row echelon form, computed by Gauss–Jordan elimination.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place(self.cols);
        let rank = pivots.len();
        Rref { matrix: m, pivots, rank }
    }

    /// Row-reduces in place, choosing pivots only among the first
    /// `pivot_limit` columns. Returns the pivot columns.
    fn rref_in_place(&mut self, pivot_limit: usize) -> Vec<usize> {
        let f = self.f;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..pivot_limit.min(cols) {
            if r == self.rows {
                break;
            }
            let Some(piv) = (r..self.rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if piv != r {
                for j in c..cols {
                    self.data.swap(piv * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.data[r * cols + c]);
            if inv != 1 {
                for x in &mut self.data[r * cols + c..(r + 1) * cols] {
                    *x = f.mul(*x, inv);
                }
            }
            let pivot_row: Vec<u32> = self.data[r * cols + c..(r + 1) * cols].to_vec();
            let p = f.p();
            let eliminate = |i: usize, row: &mut [u32]| {
                if i == r {
                    return;
                }
                let factor = row[c];
                if factor == 0 {
                    return;
                }
                let neg = p - factor;
                for (x, &b) in row[c..].iter_mut().zip(&pivot_row) {
                    *x = f.reduce(*x + neg * b);
                }
            };
            let work = self.rows * (cols - c);
            if work >= PAR_WORK / 8 && self.rows > 64 {
                self.data.par_chunks_mut(cols).enumerate().for_each(|(i, row)| eliminate(i, row));
            } else {
                self.data.chunks_mut(cols).enumerate().for_each(|(i, row)| eliminate(i, row));
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Nonzero rows of the RREF: the canonical basis of the row space.
    pub fn row_space(&self) -> Matrix {
        let r = self.rref();
        r.matrix.row_range(0, r.rank)
    }

    /// Basis (as rows) of the right null space `{v : self · vᵀ = 0}`.
    pub fn kernel_basis(&self) -> Matrix {
        let r = self.rref();
        let free: Vec<usize> = {
            let mut is_piv = vec![false; self.cols];
            for &c in &r.pivots {
                is_piv[c] = true;
            }
            (0..self.cols).filter(|&c| !is_piv[c]).collect()
        };
        let mut k = Matrix::zeros(self.f, free.len(), self.cols);
        for (t, &fc) in free.iter().enumerate() {
            k.set(t, fc, 1);
            for (ri, &pc) in r.pivots.iter().enumerate() {
                let v = r.matrix.get(ri, fc);
                if v != 0 {
                    k.set(t, pc, self.f.neg(v));
                }
            }
        }
        k
    }

    /// Basis (as rows) of the left null space `{x : x · self = 0}`.
    pub fn left_kernel(&self) -> Matrix {
        self.transpose().kernel_basis()
    }

    /// Solves `self · x = b`; `None` when inconsistent.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>> {
        if self.rows != b.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve: {} equations but right side has {} rows",
                self.rows, b.rows
            )));
        }
        let mut aug = self.hstack(b);
        let pivots = aug.rref_in_place(self.cols);
        // inconsistent iff a zero row of the left block has nonzero right side
        for i in pivots.len()..aug.rows {
            if aug.row(i)[self.cols..].iter().any(|&x| x != 0) {
                return Ok(None);
            }
        }
        let mut x = Matrix::zeros(self.f, self.cols, b.cols);
        for (ri, &pc) in pivots.iter().enumerate() {
            x.row_mut(pc).copy_from_slice(&aug.row(ri)[self.cols..]);
        }
        Ok(Some(x))
    }

    /// Solves `x · self = b`; `None` when inconsistent.
    pub fn solve_left(&self, b: &Matrix) -> Result<Option<Matrix>> {
        Ok(self.transpose().solve(&b.transpose())?.map(|x| x.transpose()))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = self.hstack(&Matrix::identity(self.f, n));
        let pivots = aug.rref_in_place(n);
        if pivots.len() < n {
            return None;
        }
        Some(aug.col_range(n, 2 * n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn trace(&self) -> u32 {
        assert!(self.is_square());
        (0..self.rows).fold(0, |acc, i| self.f.add(acc, self.get(i, i)))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over GF({})", self.rows, self.cols, self.f.p())?;
        for i in 0..self.rows.min(24) {
            writeln!(f, "  {:?}", &self.row(i)[..self.cols.min(24)])?;
        }
        Ok(())
    }
}

/// Compressed rows for products with sparse right factors (permutation-like
/// generators).
struct Csr {
    offsets: Vec<usize>,
    entries: Vec<(u32, u32)>,
}

impl Csr {
    fn new(m: &Matrix) -> Self {
        let mut offsets = Vec::with_capacity(m.rows + 1);
        let mut entries = Vec::new();
        offsets.push(0);
        for i in 0..m.rows {
            for (j, &x) in m.row(i).iter().enumerate() {
                if x != 0 {
                    entries.push((j as u32, x));
                }
            }
            offsets.push(entries.len());
        }
        Csr { offsets, entries }
    }

    #[inline]
    fn row(&self, i: usize) -> &[(u32, u32)] {
        &self.entries[self.offsets[i]..self.offsets[i + 1]]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f5() -> Fp {
        Fp::new(5).unwrap()
    }

    #[test]
    fn empty_matrix_has_rank_zero() {
        let m = Matrix::zeros(f5(), 0, 0);
        let r = m.rref();
        assert_eq!(r.rank, 0);
        assert!(r.pivots.is_empty());
    }

    #[test]
    fn identity_rref() {
        let r = Matrix::identity(f5(), 3).rref();
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivots, vec![0, 1, 2]);
        assert!(r.matrix.is_identity());
    }

    #[test]
    fn dependent_rows() {
        let m = Matrix::from_rows(f5(), &[[1, 2], [2, 4]]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert_eq!(k.rows(), 1);
        // (3,1) up to scalar
        let v = k.row(0);
        assert_eq!(f5().mul(v[0], f5().inv(v[1])), 3);
        assert!(m.mul(&k.transpose()).is_zero());
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        assert_eq!(Matrix::identity(f5(), 4).kernel_basis().rows(), 0);
        let z = Matrix::zeros(f5(), 2, 3).kernel_basis();
        assert_eq!(z.rows(), 3);
        assert_eq!(z.rank(), 3);
    }

    #[test]
    fn solve_examples() {
        let f = f5();
        let b = Matrix::from_rows(f, &[[1, 4], [0, 2], [3, 3]]);
        assert_eq!(Matrix::identity(f, 3).solve(&b).unwrap().unwrap(), b);
        let a = Matrix::from_rows(f, &[[1, 2], [2, 4]]);
        assert_eq!(a.solve(&Matrix::from_rows(f, &[[1], [3]])).unwrap(), None);
        let x = Matrix::from_rows(f, &[[2]]).solve(&Matrix::from_rows(f, &[[1]])).unwrap().unwrap();
        assert_eq!(x, Matrix::from_rows(f, &[[3]]));
        assert!(a.solve(&Matrix::zeros(f, 3, 1)).is_err());
    }

    #[test]
    fn kronecker_examples() {
        let f = f5();
        let a = Matrix::from_rows(f, &[[1, 2], [3, 4]]);
        assert_eq!(a.kronecker(&Matrix::identity(f, 1)), a);
        assert_eq!(Matrix::identity(f, 2).kronecker(&Matrix::identity(f, 3)), Matrix::identity(f, 6));
        let row = Matrix::from_rows(f, &[[1, 1]]);
        let col = Matrix::from_rows(f, &[[1], [1]]);
        assert_eq!(row.kronecker(&col), Matrix::from_rows(f, &[[1, 1], [1, 1]]));
    }

    #[test]
    fn sparse_and_dense_products_agree() {
        let f = Fp::new(7).unwrap();
        let a = Matrix::from_fn(f, 9, 12, |i, j| ((i * 31 + j * 17) % 7) as u32);
        let mut perm = Matrix::zeros(f, 12, 12);
        for i in 0..12 {
            perm.set(i, (i * 5) % 12, 3);
        }
        let dense = a.mul(&perm);
        for i in 0..9 {
            for j in 0..12 {
                let naive = (0..12).fold(0, |acc, t| f.add(acc, f.mul(a.get(i, t), perm.get(t, j))));
                assert_eq!(dense.get(i, j), naive);
            }
        }
    }

    #[test]
    fn inverse_round_trip() {
        let f = Fp::new(7).unwrap();
        let a = Matrix::from_rows(f, &[[1, 2, 0], [0, 1, 3], [4, 0, 1]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert!(Matrix::from_rows(f, &[[1, 2], [2, 4]]).inverse().is_none());
    }

    fn matrix(p: u32, max: usize) -> impl Strategy<Value = Matrix> {
        (0..=max, 0..=max).prop_flat_map(move |(r, c)| {
            prop::collection::vec(0..p, r * c)
                .prop_map(move |v| Matrix::from_vec(Fp::new(p).unwrap(), r, c, v).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rank_of_transpose(m in matrix(5, 7)) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rank_nullity(m in matrix(3, 8)) {
            let k = m.kernel_basis();
            prop_assert_eq!(k.rows() + m.rank(), m.cols());
            if k.rows() > 0 && m.rows() > 0 {
                prop_assert!(m.mul(&k.transpose()).is_zero());
            }
        }

        #[test]
        fn rref_is_idempotent_and_canonical(m in matrix(7, 6), mix in prop::collection::vec(0u32..7, 36)) {
            let r = m.rref();
            prop_assert_eq!(&r.matrix.rref().matrix, &r.matrix);
            // a random change of rows preserves the row space
            let n = m.rows();
            let g = Matrix::from_fn(m.field(), n, n, |i, j| mix[(i * 6 + j) % 36]);
            if g.is_invertible() {
                prop_assert_eq!(g.mul(&m).rref().matrix, r.matrix);
            }
        }

        #[test]
        fn solve_is_exact(a in matrix(5, 6), cols in 0usize..3, seed in prop::collection::vec(0u32..5, 18)) {
            let b = Matrix::from_fn(a.field(), a.rows(), cols, |i, j| seed[(i * 3 + j) % 18]);
            if let Some(x) = a.solve(&b).unwrap() {
                prop_assert_eq!(a.mul(&x), b);
            }
        }

        #[test]
        fn kronecker_mixed_product(s in prop::collection::vec(0u32..5, 64)) {
            let f = Fp::new(5).unwrap();
            let a = Matrix::from_fn(f, 2, 3, |i, j| s[i * 3 + j]);
            let b = Matrix::from_fn(f, 3, 2, |i, j| s[6 + i * 2 + j]);
            let c = Matrix::from_fn(f, 3, 2, |i, j| s[12 + i * 2 + j]);
            let d = Matrix::from_fn(f, 2, 4, |i, j| s[18 + i * 4 + j]);
            prop_assert_eq!(a.kronecker(&b).mul(&c.kronecker(&d)), a.mul(&c).kronecker(&b.mul(&d)));
        }
    }
}
