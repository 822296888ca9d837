use std::fmt;

use super::partition::Partition;
use super::tableau::{composition_tabloids, Tabloid};

/// A permutation of `{0, …, d-1}` acting on the right: `i ↦ images[i]`.
///
/// Products compose left to right, `(σ·τ)(i) = τ(σ(i))`, matching the
/// right action of group elements on row vectors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(d: usize) -> Self {
        Permutation { images: (0..d as u8).collect() }
    }

    pub fn from_images(images: Vec<u8>) -> Option<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &x in &images {
            if x as usize >= d || std::mem::replace(&mut seen[x as usize], true) {
                return None;
            }
        }
        Some(Permutation { images })
    }

    /// The adjacent transposition `s_i = (i, i+1)`, 0-based.
    pub fn adjacent(d: usize, i: usize) -> Self {
        let mut p = Self::identity(d);
        p.images.swap(i, i + 1);
        p
    }

    /// The cycle `(a_0 a_1 … a_k)` on `d` points.
    pub fn cycle(d: usize, points: &[usize]) -> Self {
        let mut p = Self::identity(d);
        for w in 0..points.len() {
            p.images[points[w]] = points[(w + 1) % points.len()] as u8;
        }
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation { images: self.images.iter().map(|&i| other.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// Position in the lexicographic list of all permutations of this degree.
    pub fn lex_rank(&self) -> usize {
        let n = self.degree();
        let mut used = 0u64;
        let mut rank = 0;
        for (i, &x) in self.images.iter().enumerate() {
            let smaller = (0..x).filter(|&y| used & (1 << y) == 0).count();
            rank = rank * (n - i) + smaller;
            used |= 1 << x;
        }
        rank
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn inversions(&self) -> usize {
        let n = self.degree();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| self.images[i] > self.images[j]).count()
    }

    /// `true` for even permutations.
    pub fn is_even(&self) -> bool {
        self.inversions() % 2 == 0
    }

    /// Word in adjacent transpositions (indices) whose left-to-right
    /// product is `self`.
    pub fn reduced_word(&self) -> Vec<usize> {
        // bubble sort the image sequence; each swap is a right factor
        let mut seq: Vec<u8> = self.inverse().images.clone();
        let mut word = Vec::new();
        let n = seq.len();
        for pass in 0..n {
            for j in 0..n.saturating_sub(1 + pass) {
                if seq[j] > seq[j + 1] {
                    seq.swap(j, j + 1);
                    word.push(j);
                }
            }
        }
        word.reverse();
        word
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_based: Vec<u8> = self.images.iter().map(|x| x + 1).collect();
        write!(f, "Perm{one_based:?}")
    }
}

/// All permutations of `d` points in lexicographic order of image sequences.
pub fn all_permutations(d: usize) -> Vec<Permutation> {
    let mut cur: Vec<u8> = (0..d as u8).collect();
    let mut out = vec![Permutation { images: cur.clone() }];
    loop {
        // next lexicographic permutation
        let Some(i) = (0..d.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..d).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(Permutation { images: cur.clone() });
    }
    out
}

/// Row blocks of the Young subgroup Σ_λ as consecutive point ranges.
pub fn young_blocks(lambda: &Partition) -> Vec<std::ops::Range<usize>> {
    composition_blocks(lambda.parts())
}

pub fn composition_blocks(rows: &[usize]) -> Vec<std::ops::Range<usize>> {
    let mut start = 0;
    rows
        .iter()
        .map(|&len| {
            let r = start..start + len;
            start += len;
            r
        })
        .collect()
}

/// Adjacent transpositions generating the Young subgroup Σ_λ.
pub fn young_subgroup_generators(lambda: &Partition) -> Vec<usize> {
    composition_generators(lambda.parts())
}

pub fn composition_generators(rows: &[usize]) -> Vec<usize> {
    composition_blocks(rows).into_iter().flat_map(|r| r.start..r.end.saturating_sub(1)).collect()
}

/// Right coset representatives `t` of Σ_λ in Σ_d, one per tabloid, in
/// tabloid order. Each `t` is the minimal-length element carrying the
/// initial tabloid to the given one (order-preserving on each row).
pub fn young_subgroup_transversal(lambda: &Partition) -> Vec<Permutation> {
    composition_transversal(lambda.parts())
}

/// As [`young_subgroup_transversal`] for the subgroup stabilizing
/// consecutive blocks of the given lengths.
pub fn composition_transversal(rows: &[usize]) -> Vec<Permutation> {
    let d = rows.iter().sum();
    let blocks = composition_blocks(rows);
    composition_tabloids(rows)
        .into_iter()
        .map(|t: Tabloid| {
            let mut images = vec![0u8; d];
            for (r, block) in blocks.iter().enumerate() {
                let targets = t.row_entries(r as u8);
                for (src, tgt) in block.clone().zip(targets) {
                    images[src] = tgt as u8;
                }
            }
            Permutation { images }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partition::factorial;

    #[test]
    fn coxeter_relations() {
        let d = 6;
        let s: Vec<Permutation> = (0..d - 1).map(|i| Permutation::adjacent(d, i)).collect();
        for i in 0..d - 1 {
            assert!(s[i].then(&s[i]).is_identity());
            for j in 0..d - 1 {
                if i.abs_diff(j) >= 2 {
                    assert_eq!(s[i].then(&s[j]), s[j].then(&s[i]));
                }
            }
            if i + 1 < d - 1 {
                assert_eq!(s[i].then(&s[i + 1]).then(&s[i]), s[i + 1].then(&s[i]).then(&s[i + 1]));
            }
        }
    }

    #[test]
    fn composition_is_associative_and_inverse_works() {
        let all = all_permutations(4);
        assert_eq!(all.len(), 24);
        for a in all.iter().step_by(5) {
            assert!(a.then(&a.inverse()).is_identity());
            for b in all.iter().step_by(7) {
                for c in all.iter().step_by(3) {
                    assert_eq!(a.then(b).then(c), a.then(&b.then(c)));
                }
            }
        }
    }

    #[test]
    fn reduced_words_multiply_back() {
        for g in all_permutations(5) {
            let w = g.reduced_word();
            assert_eq!(w.len(), g.inversions());
            let prod = w.iter().fold(Permutation::identity(5), |acc, &i| acc.then(&Permutation::adjacent(5, i)));
            assert_eq!(prod, g);
        }
    }

    #[test]
    fn transversal_sizes() {
        assert_eq!(young_subgroup_transversal(&Partition::of(&[5])), vec![Permutation::identity(5)]);
        assert_eq!(young_subgroup_transversal(&Partition::of(&[1, 1, 1, 1])).len(), 24);
        assert_eq!(young_subgroup_transversal(&Partition::of(&[4, 1])).len(), 5);
        for l in crate::combinat::partitions_of(5) {
            let t = young_subgroup_transversal(&l);
            assert_eq!(t.len() as u128, factorial(5) / l.parts().iter().map(|&x| factorial(x)).product::<u128>());
        }
    }

    #[test]
    fn lex_rank_matches_enumeration() {
        for (i, g) in all_permutations(5).iter().enumerate() {
            assert_eq!(g.lex_rank(), i);
        }
    }

    #[test]
    fn cycle_has_order_five() {
        let c = Permutation::cycle(5, &[0, 1, 2, 3, 4]);
        let mut g = c.clone();
        for _ in 0..4 {
            assert!(!g.is_identity());
            g = g.then(&c);
        }
        assert!(g.is_identity());
    }
}
