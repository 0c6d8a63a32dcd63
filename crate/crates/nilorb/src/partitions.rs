//! Partitions, bipartitions and the dominance order on pairs of partitions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are stripped on construction, so two partitions are equal
/// exactly when their nonzero parts agree. Indexing past the end reads 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts first; zeros are dropped.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The `i`-th part, 1-based; 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn largest(&self) -> u32 {
        self.part(1)
    }

    /// Number of parts equal to `j`.
    pub fn multiplicity(&self, j: u32) -> u32 {
        if j == 0 {
            return 0;
        }
        self.0.iter().filter(|&&p| p == j).count() as u32
    }

    /// `λ*_j`, the number of parts `≥ j`.
    pub fn conjugate_part(&self, j: u32) -> u32 {
        self.0.iter().filter(|&&p| p >= j).count() as u32
    }

    /// Distinct parts, largest first.
    pub fn distinct_parts(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.0.clone();
        out.dedup();
        out
    }

    /// All partitions of `n`, reverse-lexicographic: `(n)` first, `(1^n)` last.
    pub fn all(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(n, n, &mut cur, &mut out);
        out
    }
}

fn fill(rest: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=cap.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "(0)");
        }
        let body: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

/// An ordered pair of partitions `(μ)(ν)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bipartition {
    pub mu: Partition,
    pub nu: Partition,
}

/// The bipartition families that show up as images of Springer maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `ν_i ≤ μ_i + 1`
    XC2,
    /// `ν_i ≥ μ_{i+1}`
    XB2,
    /// `μ_{i+1} − 1 ≤ ν_i ≤ μ_i + 1`
    XC1,
    /// `μ_{i+1} ≤ ν_i ≤ μ_i + 2`
    XB1,
}

impl Bipartition {
    pub fn new(mu: Partition, nu: Partition) -> Self {
        Bipartition { mu, nu }
    }

    pub fn from_parts(mu: Vec<u32>, nu: Vec<u32>) -> Result<Self> {
        Ok(Bipartition { mu: Partition::new(mu)?, nu: Partition::new(nu)? })
    }

    pub fn total(&self) -> u32 {
        self.mu.size() + self.nu.size()
    }

    /// One past the last index at which either side is nonzero.
    fn span(&self) -> usize {
        self.mu.len().max(self.nu.len()) + 1
    }

    /// Dominance order. Errors when the totals differ.
    pub fn leq(&self, other: &Bipartition) -> Result<bool> {
        let (a, b) = (self.total(), other.total());
        if a != b {
            return Err(Error::SizeMismatch(a, b));
        }
        let span = self.span().max(other.span());
        let (mut s, mut t) = (0i64, 0i64);
        for j in 1..=span {
            if s + self.mu.part(j) as i64 > t + other.mu.part(j) as i64 {
                return Ok(false);
            }
            s += (self.mu.part(j) + self.nu.part(j)) as i64;
            t += (other.mu.part(j) + other.nu.part(j)) as i64;
            if s > t {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `j_k`: adds one to the first `⌊(k+1)/2⌋` parts of μ and the first `⌊k/2⌋` of ν.
    pub fn j_induct(&self, k: u32) -> Bipartition {
        let bump = |p: &Partition, upto: usize| {
            let len = p.len().max(upto);
            let parts = (1..=len).map(|i| p.part(i) + u32::from(i <= upto)).collect();
            Partition::new(parts).expect("bumping leading parts keeps a partition")
        };
        Bipartition {
            mu: bump(&self.mu, (k as usize).div_ceil(2)),
            nu: bump(&self.nu, k as usize / 2),
        }
    }

    pub fn in_family(&self, family: Family) -> bool {
        (1..=self.span()).all(|i| {
            let (mi, mn, ni) = (
                self.mu.part(i) as i64,
                self.mu.part(i + 1) as i64,
                self.nu.part(i) as i64,
            );
            match family {
                Family::XC2 => ni <= mi + 1,
                Family::XB2 => ni >= mn,
                Family::XC1 => mn - 1 <= ni && ni <= mi + 1,
                Family::XB1 => mn <= ni && ni <= mi + 2,
            }
        })
    }

    /// Normal form used for type D: at the first index where μ and ν differ, ν is smaller.
    pub fn normalize_d(&self) -> Bipartition {
        for i in 1..=self.span() {
            let (m, n) = (self.mu.part(i), self.nu.part(i));
            if m != n {
                return if n < m {
                    self.clone()
                } else {
                    Bipartition { mu: self.nu.clone(), nu: self.mu.clone() }
                };
            }
        }
        self.clone()
    }

    /// All of `P₂(n)`, reverse-lexicographic on the pair `(μ, ν)`.
    pub fn all(n: u32) -> Vec<Bipartition> {
        let mut out = Vec::new();
        for k in (0..=n).rev() {
            for mu in Partition::all(k) {
                for nu in Partition::all(n - k) {
                    out.push(Bipartition { mu: mu.clone(), nu });
                }
            }
        }
        out.sort_by(|a, b| (b.mu.parts(), b.nu.parts()).cmp(&(a.mu.parts(), a.nu.parts())));
        out
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.mu, self.nu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(mu: &[u32], nu: &[u32]) -> Bipartition {
        Bipartition::from_parts(mu.to_vec(), nu.to_vec()).unwrap()
    }

    #[test]
    fn multiplicities() {
        assert_eq!(Partition::new(vec![2, 2]).unwrap().multiplicity(2), 2);
        assert_eq!(Partition::empty().multiplicity(1), 0);
        assert_eq!(Partition::new(vec![3, 1, 1]).unwrap().multiplicity(1), 2);
    }

    #[test]
    fn rejects_increasing() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap().parts(), &[2, 1]);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(Partition::all(3)[0].parts(), &[3]);
        assert_eq!(Partition::all(3)[2].parts(), &[1, 1, 1]);
    }

    #[test]
    fn dominance_examples() {
        assert!(bp(&[0], &[1]).leq(&bp(&[1], &[0])).unwrap());
        assert!(!bp(&[1], &[0]).leq(&bp(&[0], &[1])).unwrap());
        assert!(bp(&[1], &[1]).leq(&bp(&[1], &[1])).unwrap());
        assert!(bp(&[1, 1], &[0]).leq(&bp(&[1], &[1])).unwrap());
        assert_eq!(bp(&[1], &[]).leq(&bp(&[2], &[])), Err(Error::SizeMismatch(1, 2)));
    }

    #[test]
    fn j_induction() {
        assert_eq!(bp(&[], &[]).j_induct(1), bp(&[1], &[]));
        assert_eq!(bp(&[1], &[]).j_induct(2), bp(&[2], &[1]));
        let t = bp(&[1], &[1]);
        assert_eq!(t.j_induct(2).j_induct(1), t.j_induct(1).j_induct(2));
    }

    #[test]
    fn families() {
        assert!(!bp(&[1], &[3]).in_family(Family::XC2));
        assert!(bp(&[1], &[2]).in_family(Family::XC2));
        for f in [Family::XC2, Family::XB2, Family::XC1, Family::XB1] {
            assert!(bp(&[], &[]).in_family(f));
        }
        assert!(!bp(&[3, 3], &[]).in_family(Family::XC1));
    }

    #[test]
    fn bipartition_counts() {
        // Number of irreducible characters of W(B_n).
        let counts: Vec<usize> = (0..=5).map(|n| Bipartition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 10, 20, 36]);
        assert_eq!(Bipartition::all(2)[0], bp(&[2], &[]));
        assert_eq!(*Bipartition::all(2).last().unwrap(), bp(&[], &[1, 1]));
    }
}
