use crate::error::Result;
use crate::ffield::echelon::{Echelon, Insert};
use crate::ffield::{Fp, Matrix};
use crate::modrep::GroupModule;

/// A basis of `Hom(M, N)`, each element a `dim M × dim N` matrix `φ` with
/// `g·φ = φ·g` for every generator.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source_dim: usize,
    pub target_dim: usize,
    pub basis: Vec<Matrix>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// `Σ c_i φ_i`.
    pub fn combination(&self, f: Fp, coeffs: &[u32]) -> Matrix {
        let mut out = Matrix::zeros(f, self.source_dim, self.target_dim);
        for (phi, &c) in self.basis.iter().zip(coeffs) {
            out.add_scaled(phi, c);
        }
        out
    }
}

pub fn is_homomorphism(m: &GroupModule, n: &GroupModule, phi: &Matrix) -> bool {
    phi.rows() == m.dim()
        && phi.cols() == n.dim()
        && m.gens().iter().zip(n.gens()).all(|(a, b)| a.mul(phi) == phi.mul(b))
}

#[derive(Clone, Debug)]
enum Event {
    Seed,
    Tree { parent: usize, gen: usize },
    Relation { parent: usize, gen: usize, coeffs: Vec<u32> },
}

/// A spun basis of a module together with the relations among images of
/// basis vectors. Homomorphisms out of the module are determined by the
/// images of the seeds subject to the relations, so one presentation
/// serves every target.
#[derive(Clone, Debug)]
pub struct Presentation {
    f: Fp,
    dim: usize,
    events: Vec<Event>,
    basis_inv: Matrix,
}

impl Presentation {
    pub fn new(m: &GroupModule) -> Self {
        let f = m.field();
        let n = m.dim();
        let mut ech = Echelon::tracking(f, n);
        let mut events = Vec::new();
        let mut vecs: Vec<Vec<u32>> = Vec::new();
        let mut next = 0;
        let mut unit = 0;
        while vecs.len() < n {
            if next == vecs.len() {
                while ech.contains(&basis_vector(n, unit)) {
                    unit += 1;
                }
                let v = basis_vector(n, unit);
                ech.insert(&v);
                vecs.push(v);
                events.push(Event::Seed);
            }
            let v = vecs[next].clone();
            for (i, g) in m.gens().iter().enumerate() {
                let w = g.vec_mul(&v);
                match ech.insert(&w) {
                    Insert::New(_) => {
                        vecs.push(w);
                        events.push(Event::Tree { parent: next, gen: i });
                    }
                    Insert::Dependent(coeffs) => {
                        events.push(Event::Relation { parent: next, gen: i, coeffs });
                    }
                }
            }
            next += 1;
        }
        // remaining products of the last vectors
        while next < vecs.len() {
            let v = vecs[next].clone();
            for (i, g) in m.gens().iter().enumerate() {
                match ech.insert(&g.vec_mul(&v)) {
                    Insert::Dependent(coeffs) => events.push(Event::Relation { parent: next, gen: i, coeffs }),
                    Insert::New(_) => unreachable!("span is already full"),
                }
            }
            next += 1;
        }
        let mut b = Matrix::zeros(f, n, n);
        for (i, v) in vecs.iter().enumerate() {
            b.row_mut(i).copy_from_slice(v);
        }
        let basis_inv = b.inverse().expect("spun vectors form a basis");
        Presentation { f, dim: n, events, basis_inv }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn seeds(&self) -> usize {
        self.events.iter().filter(|e| matches!(e, Event::Seed)).count()
    }

    /// Solves for `Hom(M, N)`; returns the images of the spun basis for
    /// each parameter, as `h` matrices of shape `dim M × dim N`.
    fn solve(&self, n: &GroupModule) -> Vec<Matrix> {
        let f = self.f;
        let nd = n.dim();
        let mut h = 0usize;
        let mut kw: Vec<Matrix> = Vec::with_capacity(self.dim);
        let mut pending: Vec<Matrix> = Vec::new();
        let mut pending_cols = 0usize;

        fn flush(kw: &mut [Matrix], pending: &mut Vec<Matrix>, pending_cols: &mut usize, h: &mut usize, f: Fp) {
            if pending.is_empty() {
                return;
            }
            let mut r = Matrix::zeros(f, *h, *pending_cols);
            let mut c0 = 0;
            for p in pending.iter() {
                for i in 0..*h {
                    r.row_mut(i)[c0..c0 + p.cols()].copy_from_slice(p.row(i));
                }
                c0 += p.cols();
            }
            pending.clear();
            *pending_cols = 0;
            let y = r.left_kernel();
            if y.rows() == *h {
                return;
            }
            for k in kw.iter_mut() {
                *k = y.mul(k);
            }
            *h = y.rows();
        }

        for ev in &self.events {
            match ev {
                Event::Seed => {
                    flush(&mut kw, &mut pending, &mut pending_cols, &mut h, f);
                    for k in kw.iter_mut() {
                        *k = k.vstack(&Matrix::zeros(f, nd, nd));
                    }
                    kw.push(Matrix::zeros(f, h, nd).vstack(&Matrix::identity(f, nd)));
                    h += nd;
                }
                Event::Tree { parent, gen } => {
                    let next = kw[*parent].mul(n.gen(*gen));
                    kw.push(next);
                }
                Event::Relation { parent, gen, coeffs } => {
                    if h == 0 {
                        continue;
                    }
                    let mut r = kw[*parent].mul(n.gen(*gen));
                    for (l, &c) in coeffs.iter().enumerate() {
                        if c != 0 {
                            r.add_scaled(&kw[l], f.neg(c));
                        }
                    }
                    if !r.is_zero() {
                        pending_cols += r.cols();
                        pending.push(r);
                        if pending_cols >= h {
                            flush(&mut kw, &mut pending, &mut pending_cols, &mut h, f);
                        }
                    }
                }
            }
        }
        flush(&mut kw, &mut pending, &mut pending_cols, &mut h, f);
        (0..h)
            .map(|a| {
                let mut img = Matrix::zeros(f, self.dim, nd);
                for (k, m) in kw.iter().enumerate() {
                    img.row_mut(k).copy_from_slice(m.row(a));
                }
                img
            })
            .collect()
    }

    pub fn hom_space(&self, n: &GroupModule) -> HomSpace {
        let basis = self.solve(n).iter().map(|img| self.basis_inv.mul(img)).collect();
        HomSpace { source_dim: self.dim, target_dim: n.dim(), basis }
    }

    pub fn hom_dim(&self, n: &GroupModule) -> usize {
        self.solve(n).len()
    }
}

fn basis_vector(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Weighted union-find over pairs `(a, b)` for two monomial modules, where
/// each generator forces `φ[σa, τb] = (β_b / α_a)·φ[a, b]`.
fn monomial_orbits(m: &GroupModule, n: &GroupModule) -> (Vec<usize>, Vec<u32>, Vec<bool>) {
    let f = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    let size = dm * dn;
    let mut parent: Vec<usize> = (0..size).collect();
    let mut weight = vec![1u32; size];
    let mut bad = vec![false; size];

    fn find(parent: &mut [usize], weight: &mut [u32], f: Fp, x: usize) -> (usize, u32) {
        let mut path = Vec::new();
        let mut r = x;
        while parent[r] != r {
            path.push(r);
            r = parent[r];
        }
        // compress from the top down
        for &y in path.iter().rev() {
            let py = parent[y];
            if py != r {
                weight[y] = f.mul(weight[y], weight[py]);
                parent[y] = r;
            }
        }
        (r, weight[x])
    }

    let mono = |g: &Matrix| -> Vec<(usize, u32)> {
        (0..g.rows())
            .map(|i| {
                let j = (0..g.cols()).find(|&j| g.get(i, j) != 0).expect("monomial row");
                (j, g.get(i, j))
            })
            .collect()
    };
    for (gm, gn) in m.gens().iter().zip(n.gens()) {
        let sm = mono(gm);
        let sn = mono(gn);
        for a in 0..dm {
            let (sa, alpha) = sm[a];
            let inv_alpha = f.inv(alpha);
            for (b, &(tb, beta)) in sn.iter().enumerate() {
                let x = a * dn + b;
                let y = sa * dn + tb;
                let c = f.mul(beta, inv_alpha);
                let (rx, wx) = find(&mut parent, &mut weight, f, x);
                let (ry, wy) = find(&mut parent, &mut weight, f, y);
                if rx == ry {
                    if wy != f.mul(c, wx) {
                        bad[rx] = true;
                    }
                } else {
                    parent[ry] = rx;
                    weight[ry] = f.mul(f.mul(c, wx), f.inv(wy));
                    bad[rx] |= bad[ry];
                }
            }
        }
    }
    for x in 0..size {
        find(&mut parent, &mut weight, f, x);
    }
    (parent, weight, bad)
}

fn monomial_hom(m: &GroupModule, n: &GroupModule) -> HomSpace {
    let f = m.field();
    let dn = n.dim();
    let (parent, weight, bad) = monomial_orbits(m, n);
    let mut index = std::collections::HashMap::new();
    let mut basis: Vec<Matrix> = Vec::new();
    for x in 0..parent.len() {
        let r = parent[x];
        if bad[r] {
            continue;
        }
        let k = *index.entry(r).or_insert_with(|| {
            basis.push(Matrix::zeros(f, m.dim(), dn));
            basis.len() - 1
        });
        basis[k].set(x / dn, x % dn, weight[x]);
    }
    HomSpace { source_dim: m.dim(), target_dim: dn, basis }
}

fn monomial_hom_dim(m: &GroupModule, n: &GroupModule) -> usize {
    let (parent, _, bad) = monomial_orbits(m, n);
    (0..parent.len()).filter(|&x| parent[x] == x && !bad[x]).count()
}

fn use_monomial(m: &GroupModule, n: &GroupModule) -> bool {
    m.dim() * n.dim() > 0 && m.d() > 1 && m.is_monomial() && n.is_monomial()
}

pub fn hom_space(m: &GroupModule, n: &GroupModule) -> Result<HomSpace> {
    m.check_compatible(n)?;
    if use_monomial(m, n) {
        return Ok(monomial_hom(m, n));
    }
    Ok(Presentation::new(m).hom_space(n))
}

pub fn hom_dim(m: &GroupModule, n: &GroupModule) -> Result<usize> {
    m.check_compatible(n)?;
    if use_monomial(m, n) {
        return Ok(monomial_hom_dim(m, n));
    }
    Ok(Presentation::new(m).hom_dim(n))
}
