//! Incremental semi-echelon basis, the workhorse of vector spinning.

use super::field::Fp;
use super::matrix::Matrix;

/// `dst += c · src` over GF(p).
#[inline]
pub fn axpy(f: Fp, dst: &mut [u32], src: &[u32], c: u32) {
    if c == 0 {
        return;
    }
    for (x, &y) in dst.iter_mut().zip(src) {
        *x = f.reduce(*x + c * y);
    }
}

/// Rows kept with a leading 1 at their pivot and zeros at the pivots of
/// all earlier rows. Optionally tracks each row as a combination of the
/// independent vectors inserted so far.
#[derive(Clone, Debug)]
pub struct Echelon {
    f: Fp,
    cols: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
    track: Option<Vec<Vec<u32>>>,
}

pub enum Insert {
    /// The vector extended the span; its index among inserted vectors.
    New(usize),
    /// The vector was already in the span; coefficients over the inserted
    /// vectors when tracking is on, else empty.
    Dependent(Vec<u32>),
}

impl Echelon {
    pub fn new(f: Fp, cols: usize) -> Self {
        Echelon { f, cols, rows: Vec::new(), pivots: Vec::new(), track: None }
    }

    pub fn tracking(f: Fp, cols: usize) -> Self {
        Echelon { track: Some(Vec::new()), ..Self::new(f, cols) }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` in place, returning the multiplier used for each row.
    pub fn reduce(&self, v: &mut [u32]) -> Vec<u32> {
        let p = self.f.p();
        let mut coeffs = vec![0; self.rows.len()];
        for (k, (row, &pc)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let c = v[pc];
            if c != 0 {
                coeffs[k] = c;
                axpy(self.f, v, row, p - c);
            }
        }
        coeffs
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    pub fn insert(&mut self, v: &[u32]) -> Insert {
        let f = self.f;
        let mut w = v.to_vec();
        let coeffs = self.reduce(&mut w);
        let Some(pc) = w.iter().position(|&x| x != 0) else {
            let combo = match &self.track {
                Some(track) => {
                    let mut out = vec![0; self.rows.len()];
                    for (k, &c) in coeffs.iter().enumerate() {
                        axpy(f, &mut out, &track[k], c);
                    }
                    out
                }
                None => Vec::new(),
            };
            return Insert::Dependent(combo);
        };
        let inv = f.inv(w[pc]);
        for x in &mut w {
            *x = f.mul(*x, inv);
        }
        let idx = self.rows.len();
        if let Some(track) = &mut self.track {
            // new row = (v - Σ c_k row_k) / lead
            let mut t = vec![0; idx + 1];
            for (k, &c) in coeffs.iter().enumerate() {
                axpy(f, &mut t, &track[k], f.p() - c);
            }
            t[idx] = 1;
            for x in &mut t {
                *x = f.mul(*x, inv);
            }
            for old in track.iter_mut() {
                old.push(0);
            }
            track.push(t);
        }
        self.rows.push(w);
        self.pivots.push(pc);
        Insert::New(idx)
    }

    /// The rows as a matrix (not fully reduced).
    pub fn to_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.f, self.rows.len(), self.cols);
        for (i, r) in self.rows.iter().enumerate() {
            m.row_mut(i).copy_from_slice(r);
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tracked_coefficients_reconstruct() {
        let f = Fp::new(7).unwrap();
        let vs = [[1u32, 2, 3, 0], [0, 1, 1, 1], [2, 0, 5, 3]];
        let mut e = Echelon::tracking(f, 4);
        for v in &vs {
            assert!(matches!(e.insert(v), Insert::New(_)));
        }
        // 3·v0 + 2·v1 + v2
        let mut target = vec![0u32; 4];
        for (v, c) in vs.iter().zip([3, 2, 1]) {
            axpy(f, &mut target, v, c);
        }
        match e.insert(&target) {
            Insert::Dependent(c) => assert_eq!(c, vec![3, 2, 1]),
            Insert::New(_) => panic!("should be dependent"),
        }
        assert_eq!(e.to_matrix().rank(), 3);
    }
}
