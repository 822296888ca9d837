use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::MalformedPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Shorthand for tests and literals; panics on malformed input.
    pub fn of(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("malformed partition literal")
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (0..first).map(|j| self.parts.iter().filter(|&&x| x > j).count()).collect();
        Partition { parts }
    }

    /// Dominance order: every partial sum of `self` is at least the
    /// corresponding partial sum of `other`.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(self.size(), other.size()));
        }
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..n {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Strict dominance `self ▷ other`.
    pub fn strictly_dominates(&self, other: &Partition) -> Result<bool> {
        Ok(self != other && self.dominates(other)?)
    }

    /// Successive differences (with a trailing zero part) all below `p`.
    pub fn is_p_restricted(&self, p: u32) -> bool {
        let p = p as usize;
        (0..self.len()).all(|i| self.part(i) - self.part(i + 1) < p)
    }

    /// No part repeated `p` or more times.
    pub fn is_p_regular(&self, p: u32) -> bool {
        let p = p as usize;
        let mut i = 0;
        while i < self.len() {
            let j = (i..self.len()).find(|&j| self.parts[j] != self.parts[i]).unwrap_or(self.len());
            if j - i >= p {
                return false;
            }
            i = j;
        }
        true
    }

    /// Number of standard tableaux by the hook length formula.
    pub fn hook_dimension(&self) -> u128 {
        let conj = self.conjugate();
        let mut hooks: u128 = 1;
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                hooks *= ((row - j - 1) + (conj.part(j) - i - 1) + 1) as u128;
            }
        }
        factorial(self.size()) / hooks
    }

    /// `d! / ∏ λ_i!`, the dimension of the permutation module.
    pub fn multinomial(&self) -> u128 {
        self.parts.iter().fold(factorial(self.size()), |acc, &x| acc / factorial(x))
    }

    /// Comma-free exponent notation, e.g. `531^2`; falls back to commas
    /// when a part or a repeat count exceeds 9.
    pub fn exponent_notation(&self) -> String {
        if self.is_empty() {
            return "∅".into();
        }
        let max_run = self.parts.iter().map(|&x| self.parts.iter().filter(|&&y| y == x).count()).max().unwrap_or(0);
        if self.part(0) > 9 || max_run > 9 {
            return self.parts.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        }
        let mut out = String::new();
        let mut i = 0;
        while i < self.len() {
            let j = (i..self.len()).find(|&j| self.parts[j] != self.parts[i]).unwrap_or(self.len());
            out.push_str(&self.parts[i].to_string());
            if j - i > 1 {
                out.push('^');
                out.push_str(&(j - i).to_string());
            }
            i = j;
        }
        out
    }
}

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Reverse-lexicographic comparison: the most dominant partition first.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.exponent_notation())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.exponent_notation())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `5,3,1,1`, `(5,3,1,1)` and exponent form `531^2`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedPartition(s.to_string());
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() || t == "∅" || t == "0" || t == "-" {
            return Ok(Partition::empty());
        }
        let parts: Vec<usize> = if t.contains(',') {
            t.split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            let chars: Vec<char> = t.chars().collect();
            let mut parts = Vec::new();
            let mut i = 0;
            while i < chars.len() {
                let part = chars[i].to_digit(10).ok_or_else(bad)? as usize;
                i += 1;
                let mut reps = 1;
                if i < chars.len() && chars[i] == '^' {
                    // single-digit exponents, so "2^21" is (2,2,1)
                    reps = chars.get(i + 1).and_then(|c| c.to_digit(10)).ok_or_else(bad)? as usize;
                    i += 2;
                }
                parts.extend(std::iter::repeat(part).take(reps));
            }
            parts
        };
        if parts.contains(&0) {
            return Err(bad());
        }
        Partition::new(parts).map_err(|_| bad())
    }
}

impl TryFrom<String> for Partition {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.exponent_notation()
    }
}

/// All partitions of `d`, most dominant first (reverse lexicographic).
pub fn partitions_of(d: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for k in (1..=rem.min(max)).rev() {
            cur.push(k);
            rec(rem - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, &mut Vec::new(), &mut out);
    out
}

/// Number of Σ_λ\Σ_d/Σ_μ double cosets: nonnegative integer matrices with
/// row sums λ and column sums μ.
pub fn double_coset_count(lambda: &Partition, mu: &Partition) -> Result<u128> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    fn fill_row(row: usize, col: usize, left: usize, rows: &[usize], cols: &mut Vec<usize>) -> u128 {
        if row == rows.len() {
            return cols.iter().all(|&c| c == 0) as u128;
        }
        if col == cols.len() {
            return if left == 0 {
                let next = rows.get(row + 1).copied().unwrap_or(0);
                fill_row(row + 1, 0, next, rows, cols)
            } else {
                0
            };
        }
        let mut total = 0;
        for x in 0..=left.min(cols[col]) {
            cols[col] -= x;
            total += fill_row(row, col + 1, left - x, rows, cols);
            cols[col] += x;
        }
        total
    }
    let mut cols = mu.parts().to_vec();
    let first = lambda.part(0);
    if lambda.is_empty() {
        return Ok(1);
    }
    Ok(fill_row(0, 0, first, lambda.parts(), &mut cols))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        let four: Vec<String> = partitions_of(4).iter().map(|x| x.to_string()).collect();
        assert_eq!(four, ["4", "31", "2^2", "21^2", "1^4"]);
        assert_eq!(partitions_of(10).len(), 42);
    }

    #[test]
    fn partition_count_matches_brute_force() {
        // independent count: compositions filtered to weakly decreasing
        fn brute(d: usize) -> usize {
            (0u32..1 << d.saturating_sub(1))
                .filter(|mask| {
                    let mut parts = vec![1usize];
                    for i in 0..d - 1 {
                        if mask >> i & 1 == 1 {
                            parts.push(1);
                        } else {
                            *parts.last_mut().unwrap() += 1;
                        }
                    }
                    parts.windows(2).all(|w| w[0] >= w[1])
                })
                .count()
        }
        for d in 1..=12 {
            assert_eq!(partitions_of(d).len(), brute(d), "d={d}");
        }
    }

    #[test]
    fn dominance_examples() {
        let l = p("32");
        assert!(l.dominates(&l).unwrap());
        assert!(p("32").dominates(&p("2^21")).unwrap());
        assert!(p("31^2").dominates(&p("2^21")).unwrap());
        assert!(!p("2^21").dominates(&p("31^2")).unwrap());
        assert!(!p("33").dominates(&p("411")).unwrap());
        assert!(!p("411").dominates(&p("33")).unwrap());
        assert_eq!(p("5").dominates(&p("4")), Err(Error::SizeMismatch(5, 4)));
    }

    #[test]
    fn regularity_examples() {
        assert!(!p("55").is_p_restricted(5));
        assert!(p("55").is_p_regular(5));
        assert!(!p("1^5").is_p_regular(5));
        assert!(p("21^3").is_p_regular(5));
        assert!(p("21^3").is_p_restricted(5));
        assert!(!p("5").is_p_restricted(5));
        assert!(p("41").is_p_restricted(5));
    }

    #[test]
    fn notation_round_trip() {
        for s in ["531^2", "21^3", "1^5", "5", "32", "2^21"] {
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(p("5,3,1,1"), p("531^2"));
        assert_eq!(p("(3,1,1)"), p("31^2"));
        assert_eq!(p("12,3").to_string(), "12,3");
        assert!("13".parse::<Partition>().is_err());
        assert!("3,0,1".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(p("32").hook_dimension(), 5);
        assert_eq!(p("31^2").hook_dimension(), 6);
        assert_eq!(p("41").multinomial(), 5);
        assert_eq!(p("31^2").multinomial(), 20);
    }

    #[test]
    fn double_coset_examples() {
        assert_eq!(double_coset_count(&p("5"), &p("5")).unwrap(), 1);
        assert_eq!(double_coset_count(&p("41"), &p("41")).unwrap(), 2);
        for mu in partitions_of(5) {
            assert_eq!(double_coset_count(&p("1^5"), &mu).unwrap(), mu.multinomial());
        }
        assert!(double_coset_count(&p("4"), &p("5")).is_err());
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for d in 1..=7 {
            let ps = partitions_of(d);
            for a in &ps {
                for b in &ps {
                    let ab = a.dominates(b).unwrap();
                    if ab && b.dominates(a).unwrap() {
                        assert_eq!(a, b);
                    }
                    // reverse-lex is a linear extension
                    if ab && a != b {
                        assert!(a < b);
                    }
                    for c in &ps {
                        if ab && b.dominates(c).unwrap() {
                            assert!(a.dominates(c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn regular_iff_conjugate_restricted() {
        for d in 0..=10 {
            for l in partitions_of(d) {
                assert_eq!(l.conjugate().conjugate(), l);
                for q in [5, 7] {
                    assert_eq!(l.is_p_regular(q), l.conjugate().is_p_restricted(q), "{l} p={q}");
                }
            }
        }
    }

    #[test]
    fn double_coset_symmetry() {
        for d in 1..=7 {
            let ps = partitions_of(d);
            for a in &ps {
                for b in &ps {
                    assert_eq!(double_coset_count(a, b).unwrap(), double_coset_count(b, a).unwrap());
                }
            }
        }
    }
}
