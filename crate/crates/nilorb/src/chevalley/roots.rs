//! Root systems of G2 and F4, with roots written in the basis of simple roots.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Group {
    G2,
    F4,
}

impl Group {
    /// The bad prime the tables are written for.
    pub fn characteristic(self) -> u32 {
        match self {
            Group::G2 => 3,
            Group::F4 => 2,
        }
    }

    pub fn rank(self) -> usize {
        match self {
            Group::G2 => 2,
            Group::F4 => 4,
        }
    }

    /// Letters naming the simple roots; a root `Σ c_i α_i` is written `c_1 x_1 c_2 x_2 …`.
    pub fn letters(self) -> &'static [char] {
        match self {
            Group::G2 => &['a', 'b'],
            Group::F4 => &['p', 'q', 'r', 's'],
        }
    }

    /// Inner products of simple roots. G2: a short, b long. F4: p, q long; r, s short.
    fn gram(self) -> Vec<Vec<i64>> {
        match self {
            Group::G2 => vec![vec![2, -3], vec![-3, 6]],
            Group::F4 => vec![vec![4, -2, 0, 0], vec![-2, 4, -2, 0], vec![0, -2, 2, -1], vec![0, 0, -1, 2]],
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::G2 => "G2",
            Group::F4 => "F4",
        })
    }
}

impl FromStr for Group {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "G2" => Ok(Group::G2),
            "F4" => Ok(Group::F4),
            _ => Err(Error::Domain(format!("unknown group {s}; expected G2 or F4"))),
        }
    }
}

pub type Root = Vec<i64>;

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub group: Group,
    pub rank: usize,
    gram: Vec<Vec<i64>>,
    /// Positive roots by height, then their negatives in the same order.
    pub roots: Vec<Root>,
    pub n_pos: usize,
    index: HashMap<Root, usize>,
}

impl RootSystem {
    pub fn new(group: Group) -> Self {
        let rank = group.rank();
        let gram = group.gram();
        let mut rs = RootSystem { group, rank, gram, roots: Vec::new(), n_pos: 0, index: HashMap::new() };
        let mut level: Vec<Root> = (0..rank).map(|i| unit(rank, i)).collect();
        let mut pos: Vec<Root> = Vec::new();
        while !level.is_empty() {
            pos.extend(level.iter().cloned());
            let known: std::collections::HashSet<Root> = pos.iter().cloned().collect();
            let mut next: Vec<Root> = Vec::new();
            for b in &level {
                for i in 0..rank {
                    let ai = unit(rank, i);
                    if *b == ai {
                        continue;
                    }
                    // α_i-string through β: β − pα_i, …, β + qα_i
                    let mut p = 0;
                    while known.contains(&sub_k(b, &ai, p + 1)) {
                        p += 1;
                    }
                    let q = p - rs.cartan(b, i);
                    let c = add(b, &ai);
                    if q > 0 && !next.contains(&c) {
                        next.push(c);
                    }
                }
            }
            next.sort();
            level = next;
        }
        let n_pos = pos.len();
        let negs: Vec<Root> = pos.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        rs.roots = pos.into_iter().chain(negs).collect();
        rs.n_pos = n_pos;
        rs.index = rs.roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        rs
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        (0..self.rank).map(|i| (0..self.rank).map(|j| a[i] * self.gram[i][j] * b[j]).sum::<i64>()).sum()
    }

    pub fn norm(&self, a: &[i64]) -> i64 {
        self.inner(a, a)
    }

    /// `⟨β, α_i^∨⟩ = 2(β, α_i)/(α_i, α_i)`.
    pub fn cartan(&self, b: &[i64], i: usize) -> i64 {
        2 * self.inner(b, &unit(self.rank, i)) / self.gram[i][i]
    }

    pub fn simple_norm(&self, i: usize) -> i64 {
        self.gram[i][i]
    }

    pub fn find(&self, r: &[i64]) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_positive(&self, idx: usize) -> bool {
        idx < self.n_pos
    }

    pub fn neg(&self, idx: usize) -> usize {
        if idx < self.n_pos {
            idx + self.n_pos
        } else {
            idx - self.n_pos
        }
    }

    pub fn height(&self, idx: usize) -> i64 {
        self.roots[idx].iter().sum()
    }

    /// Index of the sum of two roots, if it is a root.
    pub fn sum(&self, a: usize, b: usize) -> Option<usize> {
        self.find(&add(&self.roots[a], &self.roots[b]))
    }

    pub fn name(&self, idx: usize) -> String {
        let r = &self.roots[idx];
        let sign = if r.iter().any(|&c| c < 0) { "-" } else { "" };
        let body: String = r
            .iter()
            .zip(self.group.letters())
            .filter(|(c, _)| **c != 0)
            .map(|(c, l)| if c.abs() == 1 { l.to_string() } else { format!("{}{l}", c.abs()) })
            .collect();
        format!("{sign}{body}")
    }

    /// Parses names such as `q2r`, `2p3q4r2s`, `3a2b` or `-ab`.
    pub fn parse(&self, name: &str) -> Result<usize> {
        let bad = || Error::Domain(format!("{name} is not a root of {}", self.group));
        let (neg, body) = match name.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, name),
        };
        let mut r = vec![0i64; self.rank];
        let mut coef = String::new();
        for ch in body.chars() {
            if ch.is_ascii_digit() {
                coef.push(ch);
                continue;
            }
            let i = self.group.letters().iter().position(|&l| l == ch).ok_or_else(bad)?;
            r[i] = if coef.is_empty() { 1 } else { coef.parse().map_err(|_| bad())? };
            coef.clear();
        }
        if !coef.is_empty() {
            return Err(bad());
        }
        if neg {
            r.iter_mut().for_each(|x| *x = -*x);
        }
        self.find(&r).ok_or_else(bad)
    }
}

pub fn unit(rank: usize, i: usize) -> Root {
    let mut r = vec![0; rank];
    r[i] = 1;
    r
}

pub fn add(a: &[i64], b: &[i64]) -> Root {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_k(a: &[i64], b: &[i64], k: i64) -> Root {
    a.iter().zip(b).map(|(x, y)| x - k * y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_highest_roots() {
        let g2 = RootSystem::new(Group::G2);
        assert_eq!(g2.n_pos, 6);
        assert_eq!(g2.name(5), "3a2b");
        let f4 = RootSystem::new(Group::F4);
        assert_eq!(f4.n_pos, 24);
        assert_eq!(f4.name(23), "2p3q4r2s");
    }

    #[test]
    fn names_round_trip() {
        for g in [Group::G2, Group::F4] {
            let rs = RootSystem::new(g);
            for i in 0..rs.roots.len() {
                assert_eq!(rs.parse(&rs.name(i)).unwrap(), i);
            }
        }
        let f4 = RootSystem::new(Group::F4);
        assert_eq!(f4.roots[f4.parse("p2q4r2s").unwrap()], vec![1, 2, 4, 2]);
        assert!(f4.parse("p2q").is_err());
    }

    #[test]
    fn norms() {
        let g2 = RootSystem::new(Group::G2);
        let long = (0..6).filter(|&i| g2.norm(&g2.roots[i]) == 6).count();
        assert_eq!(long, 3);
        assert_eq!(g2.cartan(&g2.roots[0], 0), 2);
    }
}
