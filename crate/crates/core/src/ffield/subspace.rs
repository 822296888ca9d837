//! Row-space lattice operations. Every result is returned as the nonzero
//! rows of an RREF, so equal subspaces compare equal bit for bit.

use super::matrix::Matrix;

/// Canonical basis of the row space of `m`.
pub fn span(m: &Matrix) -> Matrix {
    m.row_space()
}

pub fn sum(u: &Matrix, w: &Matrix) -> Matrix {
    assert_eq!(u.cols(), w.cols(), "ambient dimension mismatch");
    u.vstack(w).row_space()
}

pub fn intersection(u: &Matrix, w: &Matrix) -> Matrix {
    assert_eq!(u.cols(), w.cols(), "ambient dimension mismatch");
    let u = u.row_space();
    let w = w.row_space();
    if u.rows() == 0 || w.rows() == 0 {
        return Matrix::zeros(u.field(), 0, u.cols());
    }
    // x·U = y·W  ⇔  (x, -y) in the left kernel of [U; W]
    let k = u.vstack(&w).left_kernel();
    if k.rows() == 0 {
        return Matrix::zeros(u.field(), 0, u.cols());
    }
    k.col_range(0, u.rows()).mul(&u).row_space()
}

/// Image of the row space of `m` under right multiplication by `n`.
pub fn image(m: &Matrix, n: &Matrix) -> Matrix {
    m.mul(n).row_space()
}

pub fn contains(space: &Matrix, vectors: &Matrix) -> bool {
    let base = space.rank();
    space.vstack(vectors).rank() == base
}

pub fn dim(m: &Matrix) -> usize {
    m.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::Fp;

    #[test]
    fn lattice_examples() {
        let f = Fp::new(5).unwrap();
        let v = Matrix::from_rows(f, &[[1, 2, 0], [0, 3, 1]]);
        assert_eq!(intersection(&v, &v), span(&v));
        assert_eq!(sum(&v, &Matrix::zeros(f, 0, 3)), span(&v));
        let e1 = Matrix::from_rows(f, &[[1, 0]]);
        let e2 = Matrix::from_rows(f, &[[0, 1]]);
        assert_eq!(intersection(&e1, &e2).rows(), 0);
        assert_eq!(sum(&e1, &e2), Matrix::identity(f, 2));
    }

    #[test]
    fn intersection_of_planes() {
        let f = Fp::new(7).unwrap();
        let u = Matrix::from_rows(f, &[[1, 0, 0], [0, 1, 0]]);
        let w = Matrix::from_rows(f, &[[0, 1, 0], [0, 0, 1]]);
        assert_eq!(intersection(&u, &w), Matrix::from_rows(f, &[[0, 1, 0]]));
        let img = image(&u, &Matrix::from_rows(f, &[[0, 1, 0], [0, 2, 0], [1, 1, 1]]));
        assert_eq!(img, Matrix::from_rows(f, &[[0, 1, 0]]));
        assert!(contains(&u, &Matrix::from_rows(f, &[[3, 4, 0]])));
        assert!(!contains(&u, &Matrix::from_rows(f, &[[3, 4, 1]])));
    }
}
