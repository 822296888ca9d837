//! Univariate polynomials over GF(p), coefficients lowest degree first.

use super::field::Fp;

pub type Poly = Vec<u32>;

pub fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Degree, with the zero polynomial reported as `None`.
pub fn degree(a: &[u32]) -> Option<usize> {
    a.iter().rposition(|&x| x != 0)
}

pub fn add(f: Fp, a: &[u32], b: &[u32]) -> Poly {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| f.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0))).collect())
}

pub fn sub(f: Fp, a: &[u32], b: &[u32]) -> Poly {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| f.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0))).collect())
}

pub fn mul(f: Fp, a: &[u32], b: &[u32]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

/// Quotient and remainder; panics on division by zero.
pub fn divmod(f: Fp, a: &[u32], b: &[u32]) -> (Poly, Poly) {
    let db = degree(b).expect("division by the zero polynomial");
    let inv_lead = f.inv(b[db]);
    let mut r = trim(a.to_vec());
    let mut q = vec![0u32; r.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = f.mul(r[dr], inv_lead);
        q[dr - db] = c;
        for (i, &y) in b.iter().enumerate().take(db + 1) {
            r[dr - db + i] = f.sub(r[dr - db + i], f.mul(c, y));
        }
        r = trim(r);
    }
    (trim(q), r)
}

/// `(g, s, t)` with `s·a + t·b = g`, `g` monic.
pub fn ext_gcd(f: Fp, a: &[u32], b: &[u32]) -> (Poly, Poly, Poly) {
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
    let (mut s0, mut s1): (Poly, Poly) = (vec![1], Vec::new());
    let (mut t0, mut t1): (Poly, Poly) = (Vec::new(), vec![1]);
    while degree(&r1).is_some() {
        let (q, r) = divmod(f, &r0, &r1);
        let s2 = sub(f, &s0, &mul(f, &q, &s1));
        let t2 = sub(f, &t0, &mul(f, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if let Some(d) = degree(&r0) {
        let inv = f.inv(r0[d]);
        let scale = |v: &Poly| trim(v.iter().map(|&x| f.mul(x, inv)).collect());
        return (scale(&r0), scale(&s0), scale(&t0));
    }
    (r0, s0, t0)
}

pub fn eval(f: Fp, a: &[u32], x: u32) -> u32 {
    a.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// Roots in GF(p) by exhaustive evaluation.
pub fn roots(f: Fp, a: &[u32]) -> Vec<u32> {
    if degree(a).map_or(true, |d| d == 0) {
        return Vec::new();
    }
    (0..f.p()).filter(|&x| eval(f, a, x) == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bezout_identity() {
        let f = Fp::new(5).unwrap();
        // t^2 and t^2 + 1 are coprime
        let a = vec![0, 0, 1];
        let b = vec![1, 0, 1];
        let (g, s, t) = ext_gcd(f, &a, &b);
        assert_eq!(g, vec![1]);
        assert_eq!(add(f, &mul(f, &s, &a), &mul(f, &t, &b)), vec![1]);
        let (q, r) = divmod(f, &mul(f, &a, &b), &b);
        assert_eq!(q, a);
        assert!(r.is_empty());
        assert_eq!(roots(f, &[4, 0, 1]), vec![1, 4]);
    }
}
