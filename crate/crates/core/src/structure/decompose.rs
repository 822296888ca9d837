use rand::Rng;

use crate::error::{Error, Result};
use crate::ffield::{Fp, Matrix};
use crate::modrep::GroupModule;

use super::engine::{eigenvalues, Engine};

/// A direct summand of some ambient module `M`: rows of `basis` span it
/// inside `M`, and `proj` is the projection `M → piece` along the other
/// summands, so `basis · proj = I`.
#[derive(Clone, Debug)]
pub struct Piece {
    pub module: GroupModule,
    pub basis: Matrix,
    pub proj: Matrix,
}

impl Piece {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }
}

/// `M ≅ ⊕ pieces`, grouped into isomorphism classes.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub pieces: Vec<Piece>,
    /// `classes[c]` lists indices into `pieces`; all members are isomorphic.
    pub classes: Vec<Vec<usize>>,
}

impl Decomposition {
    /// One representative and its multiplicity per class.
    pub fn summands(&self) -> Vec<(&GroupModule, usize)> {
        self.classes.iter().map(|c| (&self.pieces[c[0]].module, c.len())).collect()
    }

    /// Rows are the stacked summand bases; conjugating by it makes the
    /// action block diagonal.
    pub fn change_of_basis(&self, f: Fp, dim: usize) -> Matrix {
        Matrix::vstack_all(f, dim, &self.pieces.iter().map(|p| &p.basis).collect::<Vec<_>>())
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }
}

enum Analysis {
    Split(Matrix, Matrix),
    /// `c − λ` is nilpotent.
    Primary(u32),
    Unknown,
}

/// Fitting decomposition of a piece along a non-nilpotent, non-invertible
/// shift of `c`, if there is one.
fn analyze(c: &Matrix, rng: &mut rand_chacha::ChaCha8Rng) -> Analysis {
    let f = c.field();
    let x = c.rows();
    let roots = eigenvalues(c, rng, 2);
    for &lambda in &roots {
        let u = stable_power(&c.sub(&Matrix::scalar(f, x, lambda)));
        let r = u.rank();
        if r == 0 {
            return Analysis::Primary(lambda);
        }
        if r < x {
            return Analysis::Split(u.left_kernel(), u.row_space());
        }
    }
    Analysis::Unknown
}

/// `a^(2^s)` once the rank stops dropping.
fn stable_power(a: &Matrix) -> Matrix {
    let mut u = a.clone();
    let mut r = u.rank();
    loop {
        if r == 0 {
            return u;
        }
        let v = u.mul(&u);
        let rv = v.rank();
        if rv == r {
            return v;
        }
        u = v;
        r = rv;
    }
}

/// Row-reduced independent subset of a spanning list of same-shape matrices.
fn independent(f: Fp, mats: Vec<Matrix>) -> Vec<Matrix> {
    use crate::ffield::echelon::{Echelon, Insert};
    let Some(first) = mats.first() else { return mats };
    let mut e = Echelon::new(f, first.rows() * first.cols());
    mats.into_iter().filter(|m| matches!(e.insert(m.data()), Insert::New(_))).collect()
}

impl Engine {
    /// Krull–Schmidt decomposition with certified local endomorphism rings.
    pub fn decompose(&self, m: &GroupModule) -> Result<Decomposition> {
        self.check(m)?;
        let f = m.field();
        let n = m.dim();
        if n == 0 {
            return Ok(Decomposition { pieces: Vec::new(), classes: Vec::new() });
        }
        let end_m = self.hom(m, m)?.basis;
        let mut rng = self.rng("decompose", m);
        let mut todo = vec![Piece { module: m.clone(), basis: Matrix::identity(f, n), proj: Matrix::identity(f, n) }];
        let mut done = Vec::new();
        while let Some(piece) = todo.pop() {
            let ends = independent(f, end_m.iter().map(|e| piece.basis.mul(e).mul(&piece.proj)).collect());
            match self.split_or_certify(&piece, &ends, &mut rng)? {
                Some((k, i)) => {
                    let (a, b) = split_piece(&piece, &k, &i);
                    todo.push(a);
                    todo.push(b);
                }
                None => done.push(piece),
            }
        }
        done.sort_by(|a, b| b.dim().cmp(&a.dim()).then_with(|| a.basis.data().cmp(b.basis.data())));
        for (i, p) in done.iter_mut().enumerate() {
            p.module = p.module.clone().labeled(format!("summand({}, {i})", m.label()));
        }
        let classes = self.group_isomorphic(&done)?;
        Ok(Decomposition { pieces: done, classes })
    }

    /// Either a Fitting split of the piece or a proof that `End` is local.
    fn split_or_certify(
        &self,
        piece: &Piece,
        ends: &[Matrix],
        rng: &mut rand_chacha::ChaCha8Rng,
    ) -> Result<Option<(Matrix, Matrix)>> {
        let f = piece.module.field();
        let x = piece.dim();
        if ends.len() <= 1 {
            return Ok(None);
        }
        let mut nils: Vec<Matrix> = Vec::new();
        let mut all_primary = true;
        for e in ends {
            match analyze(e, rng) {
                Analysis::Split(k, i) => return Ok(Some((k, i))),
                Analysis::Primary(l) => nils.push(e.sub(&Matrix::scalar(f, x, l))),
                Analysis::Unknown => all_primary = false,
            }
        }
        if all_primary {
            let span = independent(f, nils.clone());
            if span.len() + 1 == ends.len() {
                let mut closed = true;
                let mut ech = crate::ffield::echelon::Echelon::new(f, x * x);
                for s in &span {
                    ech.insert(s.data());
                }
                'outer: for a in &span {
                    for b in &span {
                        let ab = a.mul(b);
                        if !ech.contains(ab.data()) {
                            closed = false;
                            if let Analysis::Split(k, i) = analyze(&ab, rng) {
                                return Ok(Some((k, i)));
                            }
                            break 'outer;
                        }
                    }
                }
                if closed {
                    return Ok(None);
                }
            }
        }
        for _ in 0..self.config().random_trials {
            let coeffs: Vec<u32> = (0..ends.len()).map(|_| rng.gen_range(0..f.p())).collect();
            let mut c = Matrix::zeros(f, x, x);
            for (e, &a) in ends.iter().zip(&coeffs) {
                c.add_scaled(e, a);
            }
            if let Analysis::Split(k, i) = analyze(&c, rng) {
                return Ok(Some((k, i)));
            }
        }
        Err(Error::SearchExhausted(format!(
            "no splitting endomorphism or locality certificate for a {x}-dimensional summand of {} (dim End = {})",
            piece.module.label(),
            ends.len()
        )))
    }

    /// Partitions indecomposable pieces into isomorphism classes.
    fn group_isomorphic(&self, pieces: &[Piece]) -> Result<Vec<Vec<usize>>> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (i, p) in pieces.iter().enumerate() {
            let mut placed = false;
            for c in classes.iter_mut() {
                if self.local_isomorphism(&pieces[c[0]].module, &p.module)?.is_some() {
                    c.push(i);
                    placed = true;
                    break;
                }
            }
            if !placed {
                classes.push(vec![i]);
            }
        }
        Ok(classes)
    }

    /// For indecomposable `x` and `y`: an isomorphism `x → y` or `None`.
    /// Decisive because some `φ·ψ` is invertible exactly when the ideal
    /// `Hom(y,x)∘Hom(x,y)` is not inside the radical of `End(x)`.
    pub fn local_isomorphism(&self, x: &GroupModule, y: &GroupModule) -> Result<Option<Matrix>> {
        if x.dim() != y.dim() {
            return Ok(None);
        }
        if x.dim() == 0 {
            return Ok(Some(Matrix::zeros(x.field(), 0, 0)));
        }
        let there = self.hom(x, y)?.basis;
        if there.is_empty() {
            return Ok(None);
        }
        if let Some(phi) = there.iter().find(|phi| phi.is_invertible()) {
            return Ok(Some(phi.clone()));
        }
        let back = self.hom(y, x)?.basis;
        for phi in &there {
            for psi in &back {
                if phi.mul(psi).is_invertible() {
                    return Ok(Some(phi.clone()));
                }
            }
        }
        Ok(None)
    }

    /// An explicit isomorphism `m → n`, or `None` when there is none.
    pub fn are_isomorphic(&self, m: &GroupModule, n: &GroupModule) -> Result<Option<Matrix>> {
        self.check(m)?;
        self.check(n)?;
        let f = m.field();
        if m.dim() != n.dim() {
            return Ok(None);
        }
        if m.dim() == 0 {
            return Ok(Some(Matrix::zeros(f, 0, 0)));
        }
        let hs = self.hom(m, n)?;
        if hs.is_zero() {
            return Ok(None);
        }
        if let Some(phi) = hs.basis.iter().find(|phi| phi.is_invertible()) {
            return Ok(Some(phi.clone()));
        }
        let mut rng = self.rng("isomorphism", m);
        for _ in 0..self.config().random_trials {
            let coeffs: Vec<u32> = (0..hs.dim()).map(|_| rng.gen_range(0..f.p())).collect();
            let phi = hs.combination(f, &coeffs);
            if phi.is_invertible() {
                return Ok(Some(phi));
            }
        }
        let space = (f.p() as u64).checked_pow(hs.dim() as u32);
        if space.is_some_and(|s| s <= self.config().iso_exhaustive_bound) {
            return Ok(exhaustive(f, &hs));
        }
        // Krull–Schmidt: match indecomposable summands.
        let dm = self.decompose(m)?;
        let dn = self.decompose(n)?;
        let mut used = vec![false; dn.pieces.len()];
        let mut total = Matrix::zeros(f, m.dim(), n.dim());
        for a in &dm.pieces {
            let mut found = false;
            for (j, b) in dn.pieces.iter().enumerate() {
                if used[j] {
                    continue;
                }
                if let Some(phi) = self.local_isomorphism(&a.module, &b.module)? {
                    used[j] = true;
                    found = true;
                    total = total.add(&a.proj.mul(&phi).mul(&b.basis));
                    break;
                }
            }
            if !found {
                return Ok(None);
            }
        }
        if total.is_invertible() && super::hom::is_homomorphism(m, n, &total) {
            Ok(Some(total))
        } else {
            Err(Error::Inconclusive("summand matching did not assemble an isomorphism".into()))
        }
    }
}

fn exhaustive(f: Fp, hs: &super::hom::HomSpace) -> Option<Matrix> {
    let h = hs.dim();
    let p = f.p();
    // leading coefficient 1 at the first nonzero position
    for lead in 0..h {
        let free = h - lead - 1;
        let count = (p as u64).pow(free as u32);
        for code in 0..count {
            let mut coeffs = vec![0u32; h];
            coeffs[lead] = 1;
            let mut c = code;
            for slot in coeffs.iter_mut().skip(lead + 1) {
                *slot = (c % p as u64) as u32;
                c /= p as u64;
            }
            let phi = hs.combination(f, &coeffs);
            if phi.is_invertible() {
                return Some(phi);
            }
        }
    }
    None
}

fn split_piece(piece: &Piece, k: &Matrix, i: &Matrix) -> (Piece, Piece) {
    let stack = k.vstack(i);
    let inv = stack.inverse().expect("kernel and image of a stable power are complementary");
    let kc = inv.col_range(0, k.rows());
    let ic = inv.col_range(k.rows(), stack.rows());
    let make = |rows: &Matrix, cols: &Matrix| {
        let gens: Vec<Matrix> = piece.module.gens().iter().map(|g| rows.mul(g).mul(cols)).collect();
        let module = GroupModule::with_dim(piece.module.d(), piece.module.field(), rows.rows(), gens)
            .expect("summand shapes agree");
        Piece { module, basis: rows.mul(&piece.basis), proj: piece.proj.mul(cols) }
    };
    (make(k, &kc), make(i, &ic))
}
