//! Orbit invariants of a functional, computed straight from their definitions.

use std::collections::BTreeMap;

use super::forms::{gram, OrthSpace, Quadratic, SpSpace};
use super::linalg::{combine, BitMatrix, Basis};
use crate::error::{ensure, Error, Result};
use crate::orbits::{LieType, OrbitSymbol, SplitLabel};
use crate::partitions::Partition;

/// Jordan type of a nilpotent operator, read off the ranks of its powers.
pub fn jordan_type(t: &BitMatrix) -> Result<Partition> {
    let d = t.cols;
    let mut ranks = vec![d];
    let mut p = BitMatrix::identity(d);
    while *ranks.last().unwrap() > 0 {
        p = p.mul(t);
        let r = p.rank();
        if r == *ranks.last().unwrap() {
            return Err(Error::NotNilpotent);
        }
        ranks.push(r);
    }
    // at_least[k-1] = number of blocks of size ≥ k
    let at_least: Vec<u32> = ranks.windows(2).map(|w| (w[0] - w[1]) as u32).collect();
    let parts = (1..=at_least.first().copied().unwrap_or(0))
        .map(|i| at_least.iter().filter(|&&c| c >= i).count() as u32)
        .collect();
    Partition::new(parts)
}

/// `min { l : T^k v = 0 ⇒ Q(T^l v) = 0 }`.
pub fn chi_value(t: &BitMatrix, q: &Quadratic, k: u32) -> u32 {
    let kernel = t.pow(k).kernel();
    (0..=k)
        .find(|&l| {
            let tl = t.pow(l);
            let imgs: Vec<u64> = kernel.iter().map(|&v| tl.apply(v)).collect();
            q.vanishes_on(&imgs)
        })
        .unwrap_or(k)
}

fn chi_map(t: &BitMatrix, q: &Quadratic, lambda: &Partition) -> BTreeMap<u32, u32> {
    lambda.distinct_parts().into_iter().map(|k| (k, chi_value(t, q, k))).collect()
}

fn checked(s: OrbitSymbol) -> Result<OrbitSymbol> {
    let probe = if s.is_degenerate_d() { OrbitSymbol { label: Some(SplitLabel::I), ..s.clone() } } else { s.clone() };
    probe.check().map_err(|e| Error::Internal(format!("oracle produced {s}: {e}")))?;
    Ok(s)
}

/// `T` with `⟨Tv, w⟩ = β_ξ(v, w)`.
pub fn sp_operator(sp: &SpSpace) -> Result<BitMatrix> {
    let inv = sp.symp.inverse().ok_or_else(|| Error::Construction("symplectic form is degenerate".into()))?;
    Ok(inv.mul(&sp.alpha.polar))
}

pub fn invariants_sp(sp: &SpSpace) -> Result<OrbitSymbol> {
    ensure!(sp.symp.is_alternating(), "symplectic form is not alternating");
    let t = sp_operator(sp)?;
    let lambda = jordan_type(&t)?;
    let chi = chi_map(&t, &sp.alpha, &lambda);
    checked(OrbitSymbol { ty: LieType::C, n: (sp.dim() / 2) as u32, m: 0, lambda, chi, label: None })
}

/// The O-orbit datum of a functional on an even orthogonal space; no I/II label.
pub fn invariants_so_even(o: &OrthSpace) -> Result<OrbitSymbol> {
    ensure!(o.xi.is_alternating(), "β_ξ is not alternating");
    let inv = o.q.polar.inverse().ok_or_else(|| Error::Construction("quadratic form is degenerate".into()))?;
    let t = inv.mul(&o.xi);
    let lambda = jordan_type(&t)?;
    let chi = chi_map(&t, &o.q, &lambda);
    checked(OrbitSymbol { ty: LieType::D, n: (o.dim() / 2) as u32, m: 0, lambda, chi, label: None })
}

/// How free choices are resolved when building the odd-orthogonal structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pivot {
    /// Free variables zero, lowest pivot bit.
    First,
    /// Free variables one, highest pivot bit.
    Alt,
}

/// The decomposition `V = span{v_i, u_i} ⊕ W` attached to a functional on an
/// odd-dimensional orthogonal space.
#[derive(Clone, Debug)]
pub struct OddStructure {
    pub m: usize,
    /// `v_0, …, v_m`; `v_m` spans the radical of β.
    pub v: Vec<u64>,
    /// `u_0, …, u_{m−1}`.
    pub u: Vec<u64>,
    pub w: Vec<u64>,
    /// `T|_W` in the coordinates of `w`.
    pub t_w: BitMatrix,
    /// `Q|_W` in the coordinates of `w`.
    pub q_w: Quadratic,
}

impl OddStructure {
    pub fn ambient(&self, c: u64) -> u64 {
        combine(&self.w, c)
    }
}

pub fn odd_structure(o: &OrthSpace, pivot: Pivot) -> Result<OddStructure> {
    let dim = o.dim();
    ensure!(dim % 2 == 1, "odd structure on even dimension {dim}");
    ensure!(o.xi.is_alternating(), "β_ξ is not alternating");
    let bq = &o.q.polar;
    let rad = bq.kernel();
    if rad.len() != 1 || !o.q.eval(rad[0]) {
        return Err(Error::Construction("radical of β must be a line on which Q is nonzero".into()));
    }
    let r = rad[0];
    let fix = |w: u64| if o.q.eval(w) { w ^ r } else { w };

    // v_m = r, then β(v_{i−1}, ·) = β_ξ(v_i, ·), Q(v_{i−1}) = 0
    let mut chain = vec![r];
    loop {
        let y = o.xi.apply(*chain.last().unwrap());
        if y == 0 {
            break;
        }
        let w = bq.solve(y).ok_or(Error::NotNilpotent)?;
        chain.push(fix(w));
        if chain.len() > dim {
            return Err(Error::NotNilpotent);
        }
    }
    let m = chain.len() - 1;
    chain.reverse();
    let v = chain;

    let mut u = Vec::with_capacity(m);
    let w_basis = if m == 0 {
        let k = match pivot {
            Pivot::First => v[0].trailing_zeros(),
            Pivot::Alt => 63 - v[0].leading_zeros(),
        };
        BitMatrix::from_rows(dim, vec![1 << k]).kernel()
    } else {
        // β(u_0, v_j) = δ_{j0}
        let a = BitMatrix::from_rows(dim, v.iter().map(|&x| bq.apply(x)).collect());
        let mut u0 = a.solve(1).ok_or_else(|| Error::Internal("no u_0".into()))?;
        if pivot == Pivot::Alt {
            u0 ^= a.kernel().iter().fold(0, |s, &k| s ^ k);
        }
        u.push(fix(u0));
        for i in 1..m {
            let y = o.xi.apply(u[i - 1]);
            let ui = bq.solve(y).ok_or_else(|| Error::Internal(format!("no u_{i}")))?;
            u.push(fix(ui));
        }
        let mut rows: Vec<u64> = u.iter().chain(&v).map(|&x| bq.apply(x)).collect();
        // β_ξ(u_0, ·) = β(u_1, ·) once m ≥ 2, so the chain is closed off at u_{m−1}
        rows.push(o.xi.apply(u[m - 1]));
        BitMatrix::from_rows(dim, rows).kernel()
    };
    ensure!(w_basis.len() == dim - 2 * m - 1, "dim W = {} but expected {}", w_basis.len(), dim - 2 * m - 1);
    let mut all = Basis::of(&v);
    for &x in u.iter().chain(&w_basis) {
        ensure!(all.insert(x), "v, u and W are not independent");
    }

    let g = gram(&w_basis, |a, b| o.q.bilinear(a, b));
    let ginv = g.inverse().ok_or_else(|| Error::Internal("β is degenerate on W".into()))?;
    let x = gram(&w_basis, |a, b| super::linalg::dot(a, o.xi.apply(b)));
    let t_w = ginv.mul(&x);
    let q_w = o.q.restrict(&w_basis);
    Ok(OddStructure { m, v, u, w: w_basis, t_w, q_w })
}

pub fn invariants_so_odd(o: &OrthSpace) -> Result<OrbitSymbol> {
    invariants_so_odd_with(o, Pivot::First)
}

pub fn invariants_so_odd_with(o: &OrthSpace, pivot: Pivot) -> Result<OrbitSymbol> {
    let st = odd_structure(o, pivot)?;
    let lambda = jordan_type(&st.t_w)?;
    let m = st.m as u32;
    let chi = lambda
        .distinct_parts()
        .into_iter()
        .map(|k| (k, k.saturating_sub(m).max(chi_value(&st.t_w, &st.q_w, k))))
        .collect();
    checked(OrbitSymbol { ty: LieType::B, n: (o.dim() / 2) as u32, m, lambda, chi, label: None })
}

#[cfg(test)]
mod tests {
    use super::super::forms::{standard_quadratic, standard_symplectic};
    use super::*;

    #[test]
    fn sp_dim_two() {
        let symp = standard_symplectic(1);
        let zero = SpSpace { symp: symp.clone(), alpha: Quadratic::zero(2) };
        assert_eq!(invariants_sp(&zero).unwrap(), OrbitSymbol::zero(LieType::C, 1));
        let sq = SpSpace { symp, alpha: Quadratic { diag: 1, polar: BitMatrix::zero(2, 2) } };
        assert_eq!(invariants_sp(&sq).unwrap(), OrbitSymbol::c(vec![1, 1], &[1]).unwrap());
    }

    #[test]
    fn so_odd_dim_three() {
        let q = standard_quadratic(1, true);
        let zero = OrthSpace { q: q.clone(), xi: BitMatrix::zero(3, 3) };
        assert_eq!(invariants_so_odd(&zero).unwrap(), OrbitSymbol::zero(LieType::B, 1));
        // β_ξ pairs the radical e_2 with e_0
        let mut xi = BitMatrix::zero(3, 3);
        xi.set(0, 2, true);
        xi.set(2, 0, true);
        let o = OrthSpace { q, xi };
        assert_eq!(invariants_so_odd(&o).unwrap(), OrbitSymbol::b(1, vec![], &[]).unwrap());
    }

    #[test]
    fn so_even_zero() {
        let o = OrthSpace { q: standard_quadratic(1, false), xi: BitMatrix::zero(2, 2) };
        let s = invariants_so_even(&o).unwrap();
        assert_eq!(s, OrbitSymbol::zero(LieType::D, 1));
    }

    #[test]
    fn non_nilpotent() {
        // T = identity on F2^2
        let symp = standard_symplectic(1);
        let sp = SpSpace { symp: symp.clone(), alpha: Quadratic { diag: 0, polar: symp } };
        assert_eq!(invariants_sp(&sp), Err(Error::NotNilpotent));
    }
}
