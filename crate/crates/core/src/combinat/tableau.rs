use std::collections::HashMap;

use super::partition::Partition;
use super::perm::Permutation;

/// A standard Young tableau; entries are 0-based points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    rows: Vec<Vec<u8>>,
}

impl StandardTableau {
    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::of(&self.rows.iter().map(Vec::len).collect::<Vec<_>>())
    }

    pub fn columns(&self) -> Vec<Vec<u8>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width).map(|c| self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect()).collect()
    }

    /// The tabloid of this tableau.
    pub fn tabloid(&self) -> Tabloid {
        let d = self.rows.iter().map(Vec::len).sum();
        let mut row_of = vec![0u8; d];
        for (r, row) in self.rows.iter().enumerate() {
            for &x in row {
                row_of[x as usize] = r as u8;
            }
        }
        Tabloid { row_of }
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self.columns().iter().all(|c| c.windows(2).all(|w| w[0] < w[1]));
        rows_ok && cols_ok
    }
}

/// All standard tableaux of shape `lambda`, ordered by the sequence of rows
/// receiving 0, 1, 2, … (lexicographic).
pub fn standard_tableaux(lambda: &Partition) -> Vec<StandardTableau> {
    fn go(shape: &[usize], next: u8, d: u8, rows: &mut Vec<Vec<u8>>, out: &mut Vec<StandardTableau>) {
        if next == d {
            out.push(StandardTableau { rows: rows.clone() });
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(next);
                go(shape, next + 1, d, rows, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); lambda.len()];
    go(lambda.parts(), 0, lambda.size() as u8, &mut rows, &mut out);
    out
}

/// A row-equivalence class of tableaux, stored as the row index of each point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tabloid {
    row_of: Vec<u8>,
}

impl Tabloid {
    pub fn from_row_of(row_of: Vec<u8>) -> Self {
        Tabloid { row_of }
    }

    pub fn row_of(&self) -> &[u8] {
        &self.row_of
    }

    /// Points in row `r`, ascending.
    pub fn row_entries(&self, r: u8) -> Vec<usize> {
        self.row_of.iter().enumerate().filter(|&(_, &x)| x == r).map(|(i, _)| i).collect()
    }

    /// Right action: point `i` moves to `g(i)` keeping its row.
    pub fn act(&self, g: &Permutation) -> Tabloid {
        let mut row_of = vec![0u8; self.row_of.len()];
        for (i, &r) in self.row_of.iter().enumerate() {
            row_of[g.apply(i)] = r;
        }
        Tabloid { row_of }
    }

    /// Swap the rows of points `i` and `i+1`.
    pub fn act_adjacent(&self, i: usize) -> Tabloid {
        let mut row_of = self.row_of.clone();
        row_of.swap(i, i + 1);
        Tabloid { row_of }
    }
}

/// All λ-tabloids in lexicographic order of their row vectors. This order
/// fixes the standard basis of the permutation module.
pub fn tabloids(lambda: &Partition) -> Vec<Tabloid> {
    composition_tabloids(lambda.parts())
}

/// Tabloids for an arbitrary sequence of row lengths.
pub fn composition_tabloids(rows: &[usize]) -> Vec<Tabloid> {
    fn go(left: &mut [usize], cur: &mut Vec<u8>, d: usize, out: &mut Vec<Tabloid>) {
        if cur.len() == d {
            out.push(Tabloid { row_of: cur.clone() });
            return;
        }
        for r in 0..left.len() {
            if left[r] > 0 {
                left[r] -= 1;
                cur.push(r as u8);
                go(left, cur, d, out);
                cur.pop();
                left[r] += 1;
            }
        }
    }
    let mut out = Vec::new();
    let mut left = rows.to_vec();
    go(&mut left, &mut Vec::new(), rows.iter().sum(), &mut out);
    out
}

/// Tabloid list together with a reverse lookup.
#[derive(Clone, Debug)]
pub struct TabloidIndex {
    pub list: Vec<Tabloid>,
    index: HashMap<Tabloid, usize>,
}

impl TabloidIndex {
    pub fn new(lambda: &Partition) -> Self {
        let list = tabloids(lambda);
        let index = list.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        TabloidIndex { list, index }
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn position(&self, t: &Tabloid) -> usize {
        self.index[t]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partition::{factorial, partitions_of};

    #[test]
    fn counts_match_examples() {
        assert_eq!(standard_tableaux(&Partition::of(&[5])).len(), 1);
        assert_eq!(standard_tableaux(&Partition::of(&[3, 2])).len(), 5);
        assert_eq!(standard_tableaux(&Partition::of(&[3, 1, 1])).len(), 6);
    }

    #[test]
    fn all_standard_and_distinct() {
        for l in partitions_of(6) {
            let ts = standard_tableaux(&l);
            assert!(ts.iter().all(|t| t.is_standard() && t.shape() == l));
            let set: std::collections::HashSet<_> = ts.iter().collect();
            assert_eq!(set.len(), ts.len());
            assert_eq!(ts.len() as u128, l.hook_dimension());
        }
    }

    #[test]
    fn sum_of_squares_is_order() {
        for d in 0..=8 {
            let s: u128 = partitions_of(d).iter().map(|l| (standard_tableaux(l).len() as u128).pow(2)).sum();
            assert_eq!(s, factorial(d), "d = {d}");
        }
    }

    #[test]
    fn tabloid_enumeration() {
        let l = Partition::of(&[3, 1, 1]);
        let ts = tabloids(&l);
        assert_eq!(ts.len(), 20);
        assert!(ts.windows(2).all(|w| w[0] < w[1]));
        let idx = TabloidIndex::new(&l);
        for (i, t) in ts.iter().enumerate() {
            assert_eq!(idx.position(t), i);
            assert_eq!(t.act_adjacent(1).act_adjacent(1), *t);
            assert_eq!(t.act(&Permutation::adjacent(5, 2)), t.act_adjacent(2));
        }
    }

    #[test]
    fn transversal_carries_initial_tabloid() {
        let l = Partition::of(&[2, 2, 1]);
        let ts = tabloids(&l);
        let t0 = ts[0].clone();
        for (t, g) in ts.iter().zip(crate::combinat::young_subgroup_transversal(&l)) {
            assert_eq!(&t0.act(&g), t);
        }
    }
}
