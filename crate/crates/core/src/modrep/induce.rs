use std::collections::{HashMap, VecDeque};

use crate::combinat::{all_permutations, Permutation};
use crate::error::{Error, Result};
use crate::ffield::{Fp, Matrix};

use super::module::GroupModule;

/// A subgroup `H ≤ Σ_d` together with matrices of a representation on some
/// space `W`, tabulated for every element. The table doubles as the
/// factorization oracle for induction.
#[derive(Clone, Debug)]
pub struct SubgroupAction {
    d: usize,
    dim: usize,
    table: HashMap<Permutation, Matrix>,
}

impl SubgroupAction {
    /// Closes the generators under multiplication. Two words for the same
    /// element giving different matrices means the data is not a
    /// representation.
    pub fn generate(d: usize, f: Fp, dim: usize, gens: &[(Permutation, Matrix)]) -> Result<Self> {
        for (g, m) in gens {
            if g.degree() != d || m.rows() != dim || m.cols() != dim {
                return Err(Error::InvalidModule("subgroup generator has the wrong shape".into()));
            }
        }
        let mut table = HashMap::new();
        table.insert(Permutation::identity(d), Matrix::identity(f, dim));
        let mut queue = VecDeque::from([Permutation::identity(d)]);
        while let Some(h) = queue.pop_front() {
            let mh = table[&h].clone();
            for (g, mg) in gens {
                let x = h.then(g);
                let mx = mh.mul(mg);
                match table.get(&x) {
                    Some(old) if *old != mx => {
                        return Err(Error::InvalidModule(format!("inconsistent matrices for {x:?}")));
                    }
                    Some(_) => {}
                    None => {
                        table.insert(x.clone(), mx);
                        queue.push_back(x);
                    }
                }
            }
        }
        Ok(SubgroupAction { d, dim, table })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.table.contains_key(g)
    }

    pub fn matrix(&self, h: &Permutation) -> Option<&Matrix> {
        self.table.get(h)
    }

    pub fn elements(&self) -> Vec<Permutation> {
        let mut v: Vec<Permutation> = self.table.keys().cloned().collect();
        v.sort();
        v
    }

    /// Canonical representative of the right coset `H·x`.
    pub fn coset_key(&self, x: &Permutation) -> Permutation {
        self.table.keys().map(|h| h.then(x)).min().expect("subgroup contains the identity")
    }

    /// Lexicographically least representative of each right coset, in order.
    pub fn right_transversal(&self) -> Vec<Permutation> {
        let mut seen = std::collections::HashSet::new();
        all_permutations(self.d).into_iter().filter(|g| seen.insert(self.coset_key(g))).collect()
    }
}

/// Induced module `W ⊗_{kH} kΣ_d` on the basis `w_a ⊗ t_j`, coset-major.
/// For `t_j·g = h·t_k` the block `(j, k)` of the action of `g` is the
/// matrix of `h` on `W`.
pub fn induce(h: &SubgroupAction, f: Fp, transversal: &[Permutation]) -> Result<GroupModule> {
    let d = h.d;
    let w = h.dim;
    let mut index = HashMap::new();
    for (j, t) in transversal.iter().enumerate() {
        if t.degree() != d {
            return Err(Error::InvalidTransversal(format!("{t:?} has the wrong degree")));
        }
        if index.insert(h.coset_key(t), j).is_some() {
            return Err(Error::InvalidTransversal(format!("{t:?} repeats a coset")));
        }
    }
    let order: u128 = (1..=d as u128).product();
    if (transversal.len() * h.order()) as u128 != order {
        return Err(Error::InvalidTransversal(format!(
            "{} cosets of a subgroup of order {} do not cover Σ_{d}",
            transversal.len(),
            h.order()
        )));
    }
    let n = transversal.len() * w;
    let mut gens = Vec::with_capacity(d.saturating_sub(1));
    for i in 0..d.saturating_sub(1) {
        let s = Permutation::adjacent(d, i);
        let mut g = Matrix::zeros(f, n, n);
        for (j, t) in transversal.iter().enumerate() {
            let x = t.then(&s);
            let k = index[&h.coset_key(&x)];
            let hx = x.then(&transversal[k].inverse());
            let mh = h.matrix(&hx).ok_or_else(|| Error::InvalidTransversal("coset lookup left the subgroup".into()))?;
            for a in 0..w {
                for b in 0..w {
                    g.set(j * w + a, k * w + b, mh.get(a, b));
                }
            }
        }
        gens.push(g);
    }
    Ok(GroupModule::with_dim(d, f, n, gens)?.labeled("induced"))
}

/// The right regular module on the group elements in lexicographic order.
pub fn regular_module(d: usize, f: Fp, limit: usize) -> Result<GroupModule> {
    if d > limit {
        return Err(Error::RegularLimit { d, limit });
    }
    let elems = all_permutations(d);
    let n = elems.len();
    let gens = (0..d.saturating_sub(1))
        .map(|i| {
            let s = Permutation::adjacent(d, i);
            let mut g = Matrix::zeros(f, n, n);
            for (j, x) in elems.iter().enumerate() {
                g.set(j, x.then(&s).lex_rank(), 1);
            }
            g
        })
        .collect();
    Ok(GroupModule::with_dim(d, f, n, gens)?.labeled("regular"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_module_examples() {
        let f = Fp::new(5).unwrap();
        let r2 = regular_module(2, f, 7).unwrap();
        assert_eq!(r2.dim(), 2);
        assert_eq!(r2.gen(0), &Matrix::from_rows(f, &[[0, 1], [1, 0]]));
        let r5 = regular_module(5, f, 7).unwrap();
        assert_eq!(r5.dim(), 120);
        assert!(r5.validate());
        let err = regular_module(10, f, 7).unwrap_err();
        assert!(err.to_string().contains("regular module exceeds configured limit"));
    }

    #[test]
    fn induction_from_whole_group_is_trivial() {
        let f = Fp::new(5).unwrap();
        let gens: Vec<_> = (0..3).map(|i| (Permutation::adjacent(4, i), Matrix::identity(f, 1))).collect();
        let h = SubgroupAction::generate(4, f, 1, &gens).unwrap();
        assert_eq!(h.order(), 24);
        let m = induce(&h, f, &h.right_transversal()).unwrap();
        assert_eq!(m.dim(), 1);
        assert!(m.gens().iter().all(|g| g.is_identity()));
    }

    #[test]
    fn rejects_bad_transversals_and_actions() {
        let f = Fp::new(5).unwrap();
        let h = SubgroupAction::generate(3, f, 1, &[(Permutation::adjacent(3, 0), Matrix::identity(f, 1))]).unwrap();
        let t = h.right_transversal();
        assert_eq!(t.len(), 3);
        let dup = vec![t[0].clone(), t[0].clone(), t[1].clone()];
        assert!(matches!(induce(&h, f, &dup), Err(Error::InvalidTransversal(_))));
        assert!(matches!(induce(&h, f, &t[..2]), Err(Error::InvalidTransversal(_))));
        // an order-2 element acting by an element of order 4
        let bad = SubgroupAction::generate(3, f, 1, &[(Permutation::adjacent(3, 0), Matrix::scalar(f, 1, 2))]);
        assert!(bad.is_err());
    }
}
