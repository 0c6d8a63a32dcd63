//! Chevalley bases over ℤ.
//!
//! The basis is `h_1..h_r` followed by `e_γ` for every root γ in
//! [`RootSystem::roots`] order. Structure constants for positive pairs are
//! fixed height by height: one reference pair per sum (a listed constant when
//! there is one) and the rest from the four-term relation. Every listed
//! constant is then re-checked, so the published table is the authority.

use std::collections::HashMap;

use num_rational::Ratio;

use super::roots::{add, Group, RootSystem};
use super::tables;
use crate::error::{Error, Result};

type Q = Ratio<i64>;

/// Sparse vector: (basis index, coefficient).
pub type Sparse = Vec<(usize, i64)>;

#[derive(Clone, Debug)]
pub struct ChevalleyAlgebra {
    pub rs: RootSystem,
    /// `N_{a,b}` for positive `a, b` with `a + b` a root.
    pos: HashMap<(usize, usize), i64>,
}

impl ChevalleyAlgebra {
    pub fn build(group: Group) -> Result<Self> {
        let rs = RootSystem::new(group);
        let data = tables::group_data(group)?;
        let mut listed = Vec::new();
        for (a, b, v) in &data.constants {
            let (ia, ib) = (rs.parse(a)?, rs.parse(b)?);
            if !rs.is_positive(ia) || !rs.is_positive(ib) || rs.sum(ia, ib).is_none() {
                return Err(Error::Construction(format!("listed N_{{{a},{b}}} does not attach to a root pair")));
            }
            listed.push((ia, ib, *v));
        }
        let mut alg = ChevalleyAlgebra { rs, pos: HashMap::new() };
        alg.complete(&listed)?;
        for &(a, b, v) in &listed {
            let got = alg.n(a, b);
            if got != v {
                return Err(Error::Construction(format!(
                    "N_{{{},{}}} = {got} but the table lists {v}",
                    alg.rs.name(a),
                    alg.rs.name(b)
                )));
            }
        }
        alg.check_jacobi()?;
        Ok(alg)
    }

    pub fn group(&self) -> Group {
        self.rs.group
    }

    pub fn rank(&self) -> usize {
        self.rs.rank
    }

    pub fn dim(&self) -> usize {
        self.rs.rank + self.rs.roots.len()
    }

    /// Basis index of `e_γ`.
    pub fn e(&self, root: usize) -> usize {
        self.rs.rank + root
    }

    /// `p + 1` where `p` is largest with `b − p·a` a root.
    fn string_bound(&self, a: usize, b: usize) -> i64 {
        let (ra, rb) = (&self.rs.roots[a], &self.rs.roots[b]);
        let mut p = 0;
        loop {
            let c: Vec<i64> = rb.iter().zip(ra).map(|(y, x)| y - (p + 1) * x).collect();
            if self.rs.find(&c).is_none() {
                return p + 1;
            }
            p += 1;
        }
    }

    fn complete(&mut self, listed: &[(usize, usize, i64)]) -> Result<()> {
        let rs = self.rs.clone();
        for xi in 0..rs.n_pos {
            let mut pairs: Vec<(usize, usize)> = (0..rs.n_pos)
                .flat_map(|a| (a + 1..rs.n_pos).map(move |b| (a, b)))
                .filter(|&(a, b)| rs.sum(a, b) == Some(xi))
                .collect();
            if pairs.is_empty() {
                continue;
            }
            let reference = listed
                .iter()
                .find(|&&(a, b, _)| rs.sum(a, b) == Some(xi))
                .map(|&(a, b, v)| if a < b { (a, b, v) } else { (b, a, -v) })
                .unwrap_or_else(|| (pairs[0].0, pairs[0].1, self.string_bound(pairs[0].0, pairs[0].1)));
            let (ra, rb, rv) = reference;
            if rv.abs() != self.string_bound(ra, rb) {
                return Err(Error::Construction(format!(
                    "|N_{{{},{}}}| = {} contradicts the root string",
                    rs.name(ra),
                    rs.name(rb),
                    rv.abs()
                )));
            }
            self.pos.insert((ra, rb), rv);
            self.pos.insert((rb, ra), -rv);
            pairs.retain(|&p| p != (ra, rb));
            let xi_norm = Q::from_integer(rs.norm(&rs.roots[xi]));
            for (a, b) in pairs {
                let norm_of = |x: usize, y: usize| -> Option<Q> {
                    let s = add(&rs.roots[x], &rs.roots[y]);
                    rs.find(&s).map(|_| Q::from_integer(rs.norm(&s)))
                };
                // N_{a,b} N_{a',b'} / (ξ,ξ) = N_{b,−a'} N_{a,−b'} / |b−a'|² + N_{−a',a} N_{b,−b'} / |a−a'|²
                let (na, nb) = (rs.neg(ra), rs.neg(rb));
                let mut rhs = Q::from_integer(0);
                if let Some(n2) = norm_of(b, na) {
                    rhs += self.n_q(b, na)? * self.n_q(a, nb)? / n2;
                }
                if let Some(n2) = norm_of(a, na) {
                    rhs += self.n_q(na, a)? * self.n_q(b, nb)? / n2;
                }
                let v = xi_norm / Q::from_integer(rv) * rhs;
                if !v.is_integer() || v.to_integer().abs() != self.string_bound(a, b) {
                    return Err(Error::Construction(format!(
                        "N_{{{},{}}} came out as {v}",
                        rs.name(a),
                        rs.name(b)
                    )));
                }
                let v = v.to_integer();
                self.pos.insert((a, b), v);
                self.pos.insert((b, a), -v);
            }
        }
        Ok(())
    }

    /// `N_{a,b}` reduced to positive pairs that are already known.
    fn n_q(&self, a: usize, b: usize) -> Result<Q> {
        let rs = &self.rs;
        let Some(c) = rs.sum(a, b) else { return Ok(Q::from_integer(0)) };
        let norm = |x: usize| Q::from_integer(rs.norm(&rs.roots[x]));
        let pa = rs.is_positive(a);
        let pb = rs.is_positive(b);
        Ok(match (pa, pb) {
            (true, true) => Q::from_integer(
                *self
                    .pos
                    .get(&(a, b))
                    .ok_or_else(|| Error::Internal(format!("N_{{{},{}}} needed too early", rs.name(a), rs.name(b))))?,
            ),
            (false, false) => -self.n_q(rs.neg(a), rs.neg(b))?,
            (false, true) => -self.n_q(b, a)?,
            (true, false) => {
                if rs.is_positive(c) {
                    -(norm(c) / norm(a)) * self.n_q(rs.neg(b), c)?
                } else {
                    norm(c) / norm(b) * self.n_q(rs.neg(c), a)?
                }
            }
        })
    }

    /// `N_{a,b}` for any two roots; 0 when `a + b` is not a root.
    pub fn n(&self, a: usize, b: usize) -> i64 {
        let v = self.n_q(a, b).expect("table is complete after construction");
        debug_assert!(v.is_integer());
        v.to_integer()
    }

    /// `[x, y]` for basis indices.
    pub fn bracket(&self, x: usize, y: usize) -> Sparse {
        let r = self.rs.rank;
        match (x < r, y < r) {
            (true, true) => Vec::new(),
            (true, false) => vec![(y, self.rs.cartan(&self.rs.roots[y - r], x))],
            (false, true) => vec![(x, -self.rs.cartan(&self.rs.roots[x - r], y))],
            (false, false) => {
                let (a, b) = (x - r, y - r);
                if self.rs.neg(a) == b {
                    self.coroot(a)
                } else {
                    match self.rs.sum(a, b) {
                        Some(c) => vec![(r + c, self.n(a, b))],
                        None => Vec::new(),
                    }
                }
            }
        }
    }

    /// `h_α = [e_α, e_{−α}]` in terms of `h_1..h_r`.
    pub fn coroot(&self, a: usize) -> Sparse {
        let root = &self.rs.roots[a];
        let n = self.rs.norm(root);
        (0..self.rs.rank)
            .filter(|&i| root[i] != 0)
            .map(|i| (i, root[i] * self.rs.simple_norm(i) / n))
            .collect()
    }

    fn bracket_sparse(&self, x: usize, v: &Sparse) -> Sparse {
        let mut acc: HashMap<usize, i64> = HashMap::new();
        for &(y, c) in v {
            for (z, d) in self.bracket(x, y) {
                *acc.entry(z).or_insert(0) += c * d;
            }
        }
        let mut out: Sparse = acc.into_iter().filter(|&(_, c)| c != 0).collect();
        out.sort_unstable();
        out
    }

    /// Antisymmetry and the Jacobi identity on every basis triple.
    #[allow(clippy::needless_range_loop)]
    pub fn check_jacobi(&self) -> Result<()> {
        let d = self.dim();
        let table: Vec<Vec<Sparse>> = (0..d).map(|x| (0..d).map(|y| self.bracket(x, y)).collect()).collect();
        for x in 0..d {
            for y in 0..d {
                let neg: Sparse = table[y][x].iter().map(|&(z, c)| (z, -c)).collect();
                if table[x][y] != neg {
                    return Err(Error::Construction(format!("[{x},{y}] is not antisymmetric")));
                }
            }
        }
        for x in 0..d {
            for y in x + 1..d {
                for z in y + 1..d {
                    let mut acc: HashMap<usize, i64> = HashMap::new();
                    for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
                        for (k, v) in self.bracket_sparse(a, &table[b][c]) {
                            *acc.entry(k).or_insert(0) += v;
                        }
                    }
                    if acc.values().any(|&v| v != 0) {
                        return Err(Error::Construction(format!(
                            "Jacobi fails on ({}, {}, {})",
                            self.basis_name(x),
                            self.basis_name(y),
                            self.basis_name(z)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn basis_name(&self, x: usize) -> String {
        if x < self.rs.rank {
            format!("h_{}", self.rs.group.letters()[x])
        } else {
            format!("e_{}", self.rs.name(x - self.rs.rank))
        }
    }

    /// `ad e_γ` as a dense integer matrix, `m[row][col]` = coefficient of
    /// basis `row` in `[e_γ, basis col]`.
    #[allow(clippy::needless_range_loop)]
    pub fn ad(&self, root: usize) -> Vec<Vec<i64>> {
        let d = self.dim();
        let mut m = vec![vec![0; d]; d];
        for col in 0..d {
            for (row, c) in self.bracket(self.e(root), col) {
                m[row][col] += c;
            }
        }
        m
    }

    /// `(ad e_γ)^i / i!` for `i = 0, 1, …` until the power vanishes.
    pub fn divided_powers(&self, root: usize) -> Result<Vec<Vec<Vec<i64>>>> {
        let d = self.dim();
        let ad = self.ad(root);
        let id: Vec<Vec<i64>> = (0..d).map(|i| (0..d).map(|j| i64::from(i == j)).collect()).collect();
        let mut out = vec![id];
        for i in 1.. {
            let prev = out.last().unwrap();
            let mut next = vec![vec![0i64; d]; d];
            for r in 0..d {
                for k in 0..d {
                    if ad[r][k] == 0 {
                        continue;
                    }
                    for c in 0..d {
                        next[r][c] += ad[r][k] * prev[k][c];
                    }
                }
            }
            if next.iter().flatten().all(|&x| x == 0) {
                break;
            }
            for x in next.iter_mut().flatten() {
                if *x % i != 0 {
                    return Err(Error::Construction(format!("divided power {i} of ad e_{} is not integral", self.rs.name(root))));
                }
                *x /= i;
            }
            out.push(next);
        }
        Ok(out)
    }

    /// `M_{α,β,i} = (1/i!) Π_{k<i} N_{α, β + kα}`.
    pub fn m_const(&self, a: usize, b: usize, i: u32) -> Result<i64> {
        let rs = &self.rs;
        let mut prod = 1i64;
        let mut cur = rs.roots[b].clone();
        for _ in 0..i {
            let Some(ci) = rs.find(&cur) else { return Ok(0) };
            prod *= self.n(a, ci);
            cur = add(&cur, &rs.roots[a]);
        }
        let fact: i64 = (1..=i as i64).product();
        if prod % fact != 0 {
            return Err(Error::Construction(format!("M_{{{},{},{i}}} is not integral", rs.name(a), rs.name(b))));
        }
        Ok(prod / fact)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g2_constants() {
        let g = ChevalleyAlgebra::build(Group::G2).unwrap();
        assert_eq!(g.dim(), 14);
        let (a, b) = (g.rs.parse("a").unwrap(), g.rs.parse("b").unwrap());
        assert_eq!(g.bracket(g.e(a), g.e(b)), vec![(g.e(g.rs.parse("ab").unwrap()), 1)]);
        assert_eq!(g.bracket(0, g.e(a)), vec![(g.e(a), 2)]);
    }

    #[test]
    fn f4_constants() {
        let g = ChevalleyAlgebra::build(Group::F4).unwrap();
        assert_eq!(g.dim(), 52);
        let r = g.rs.parse("r").unwrap();
        let pqr = g.rs.parse("pqr").unwrap();
        let pq2r = g.rs.parse("pq2r").unwrap();
        assert_eq!(g.bracket(g.e(r), g.e(pqr)), vec![(g.e(pq2r), -2)]);
        for i in 0..4 {
            assert_eq!(g.bracket(i, g.e(i)), vec![(g.e(i), 2)]);
        }
    }
}
