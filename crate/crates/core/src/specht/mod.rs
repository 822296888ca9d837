//! Permutation, Specht, simple and signed permutation modules.

use crate::combinat::{
    composition_generators, composition_transversal, standard_tableaux, tabloids, Partition, Permutation, StandardTableau,
    TabloidIndex,
};
use crate::error::{Error, Result};
use crate::ffield::{Fp, Matrix};
use crate::modrep::{induce, GroupModule, Part, SubgroupAction, SubmoduleBasis};

/// Standard polytabloids of a Specht module and its invariant form.
#[derive(Clone, Debug)]
pub struct SpechtBasisData {
    pub shape: Partition,
    pub tableaux: Vec<StandardTableau>,
    /// One row per standard tableau, in the tabloid basis of `M^λ`.
    pub polytabloids: Matrix,
    pub gram: Matrix,
}

/// `M^λ` on the tabloid basis.
pub fn permutation_module(lambda: &Partition, f: Fp) -> GroupModule {
    let d = lambda.size();
    let idx = TabloidIndex::new(lambda);
    let n = idx.len();
    let gens = (0..d.saturating_sub(1))
        .map(|i| {
            let mut g = Matrix::zeros(f, n, n);
            for (j, t) in idx.list.iter().enumerate() {
                g.set(j, idx.position(&t.act_adjacent(i)), 1);
            }
            g
        })
        .collect();
    GroupModule::with_dim(d, f, n, gens)
        .expect("tabloid action has consistent shapes")
        .labeled(format!("M^{lambda}"))
}

fn column_group(t: &StandardTableau) -> Vec<(Permutation, bool)> {
    let d = t.rows().iter().map(Vec::len).sum();
    let mut out = vec![(Permutation::identity(d), true)];
    for col in t.columns() {
        if col.len() < 2 {
            continue;
        }
        let pts: Vec<usize> = col.iter().map(|&x| x as usize).collect();
        let local = crate::combinat::all_permutations(pts.len());
        let mut next = Vec::with_capacity(out.len() * local.len());
        for (g, even) in &out {
            for s in &local {
                let mut images: Vec<u8> = g.images().to_vec();
                for (a, &x) in pts.iter().enumerate() {
                    images[x] = g.images()[pts[s.apply(a)]];
                }
                let h = Permutation::from_images(images).expect("column permutation");
                next.push((h, *even == s.is_even()));
            }
        }
        out = next;
    }
    out
}

/// Polytabloid matrix and Gram form for `S^λ`.
pub fn specht_basis(lambda: &Partition, f: Fp) -> SpechtBasisData {
    let idx = TabloidIndex::new(lambda);
    let tableaux = standard_tableaux(lambda);
    let mut e = Matrix::zeros(f, tableaux.len(), idx.len());
    let minus = f.neg(1);
    for (r, t) in tableaux.iter().enumerate() {
        let base = t.tabloid();
        for (sigma, even) in column_group(t) {
            let c = idx.position(&base.act(&sigma));
            let v = if even { 1 } else { minus };
            e.set(r, c, f.add(e.get(r, c), v));
        }
    }
    let gram = e.mul(&e.transpose());
    SpechtBasisData { shape: lambda.clone(), tableaux, polytabloids: e, gram }
}

/// `S^λ` with the action on standard polytabloids.
pub fn specht_module(lambda: &Partition, f: Fp) -> (GroupModule, SpechtBasisData) {
    let data = specht_basis(lambda, f);
    let d = lambda.size();
    let e = &data.polytabloids;
    let piv = e.rref().pivots;
    let inv = e.select_cols(&piv).inverse().expect("standard polytabloids are independent");
    let perm = permutation_module(lambda, f);
    let gens = perm.gens().iter().map(|g| e.mul(g).select_cols(&piv).mul(&inv)).collect();
    let m = GroupModule::with_dim(d, f, e.rows(), gens)
        .expect("shapes agree")
        .labeled(format!("S^{lambda}"));
    (m, data)
}

/// `S_λ`, the dual of `S^λ`.
pub fn dual_specht_module(lambda: &Partition, f: Fp) -> GroupModule {
    specht_module(lambda, f).0.dual().labeled(format!("S_{lambda}"))
}

/// `D^μ = S^μ / rad`, the radical of the Gram form.
pub fn simple_module(mu: &Partition, f: Fp) -> Result<GroupModule> {
    if !mu.is_p_regular(f.p()) {
        return Err(Error::NotRegular(mu.to_string(), f.p()));
    }
    let (s, data) = specht_module(mu, f);
    let rad = SubmoduleBasis::new(&s, &data.gram.left_kernel())?;
    Ok(s.sub_quotient(&rad, Part::Quotient)?.labeled(format!("D^{mu}")))
}

/// `D_λ = D^{λ′} ⊗ sgn` for restricted `λ`.
pub fn simple_restricted(lambda: &Partition, f: Fp) -> Result<GroupModule> {
    if !lambda.is_p_restricted(f.p()) {
        return Err(Error::NotRestricted(lambda.to_string(), f.p()));
    }
    Ok(simple_module(&lambda.conjugate(), f)?.sign_twist().labeled(format!("D_{lambda}")))
}

/// `M^(λ|μ)`: induced from trivial on `Σ_λ` times sign on `Σ_μ`, with the
/// blocks of `λ` placed before those of `μ`.
pub fn signed_permutation_module(lambda: &Partition, mu: &Partition, f: Fp) -> Result<GroupModule> {
    let d = lambda.size() + mu.size();
    let rows: Vec<usize> = lambda.parts().iter().chain(mu.parts()).copied().collect();
    let split = lambda.size();
    let gens: Vec<(Permutation, Matrix)> = composition_generators(&rows)
        .into_iter()
        .map(|i| {
            let c = if i < split { 1 } else { f.neg(1) };
            (Permutation::adjacent(d, i), Matrix::scalar(f, 1, c))
        })
        .collect();
    let h = SubgroupAction::generate(d, f, 1, &gens)?;
    Ok(induce(&h, f, &composition_transversal(&rows))?.labeled(format!("M^({lambda}|{mu})")))
}

/// Number of tabloids of shape `λ`, the dimension of `M^λ`.
pub fn permutation_dim(lambda: &Partition) -> usize {
    tabloids(lambda).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partitions_of;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn dimensions_at_five() {
        let f = Fp::new(5).unwrap();
        let dims = [("5", 1), ("41", 4), ("32", 5), ("31^2", 6), ("2^21", 5), ("21^3", 4), ("1^5", 1)];
        for (l, n) in dims {
            let (s, data) = specht_module(&p(l), f);
            assert_eq!(s.dim(), n, "{l}");
            assert!(s.validate());
            assert_eq!(data.gram, data.gram.transpose());
        }
        assert_eq!(permutation_module(&p("41"), f).dim(), 5);
        assert_eq!(permutation_module(&p("31^2"), f).dim(), 20);
        assert!(permutation_module(&p("5"), f).gens().iter().all(Matrix::is_identity));
        assert_eq!(specht_module(&p("1^5"), f).0.gens(), GroupModule::sign(5, f).gens());
    }

    #[test]
    fn gram_is_invariant() {
        let f = Fp::new(5).unwrap();
        for l in partitions_of(5) {
            let (s, data) = specht_module(&l, f);
            for g in s.gens() {
                assert_eq!(g.mul(&data.gram).mul(&g.transpose()), data.gram);
            }
        }
    }

    #[test]
    fn simple_dimensions_at_five() {
        let f = Fp::new(5).unwrap();
        let dims = [("41", 1), ("31^2", 3), ("21^3", 3), ("1^5", 1), ("32", 5)];
        for (l, n) in dims {
            let dl = simple_restricted(&p(l), f).unwrap();
            assert_eq!(dl.dim(), n, "D_{l}");
            assert!(dl.validate());
        }
        assert_eq!(simple_module(&p("41"), f).unwrap().dim(), 3);
        assert!(matches!(simple_module(&p("1^5"), f), Err(Error::NotRegular(..))));
        assert!(matches!(simple_restricted(&p("5"), f), Err(Error::NotRestricted(..))));
    }

    #[test]
    fn quotient_by_gram_radical_of_41() {
        let f = Fp::new(5).unwrap();
        let (_, data) = specht_module(&p("41"), f);
        assert_eq!(data.gram.rank(), 3);
    }

    #[test]
    fn induced_trivial_is_permutation_module() {
        let f = Fp::new(5).unwrap();
        for d in 1..=5 {
            for l in partitions_of(d) {
                let perm = permutation_module(&l, f);
                let signed = signed_permutation_module(&l, &Partition::empty(), f).unwrap();
                assert_eq!(perm.gens(), signed.gens(), "{l}");
            }
        }
    }

    #[test]
    fn signed_extremes() {
        let f = Fp::new(5).unwrap();
        let m = signed_permutation_module(&Partition::empty(), &p("1^4"), f).unwrap();
        assert_eq!(m.dim(), 24);
        assert!(m.validate());
        // regular: only the identity has nonzero trace
        for g in crate::combinat::all_permutations(4) {
            assert_eq!(m.act(&g).trace() != 0, g.is_identity());
        }
        let s = signed_permutation_module(&Partition::empty(), &p("31"), f).unwrap();
        // equal to the twisted permutation module after rescaling t_j by its sign
        let signs: Vec<Matrix> = crate::combinat::young_subgroup_transversal(&p("31"))
            .iter()
            .map(|t| Matrix::scalar(f, 1, if t.is_even() { 1 } else { f.neg(1) }))
            .collect();
        let dm = Matrix::block_diagonal(f, &signs.iter().collect::<Vec<_>>());
        assert_eq!(s.change_basis(&dm).unwrap().gens(), permutation_module(&p("31"), f).sign_twist().gens());
        let mixed = signed_permutation_module(&p("3"), &p("2"), f).unwrap();
        assert_eq!(mixed.dim(), 10);
        assert!(mixed.validate());
    }
}
