//! The coadjoint action of root subgroups on `g*` over `F_q`.
//!
//! `Ad(x_γ(t)) = Σ_i t^i (ad e_γ)^i / i!` with the divided powers taken over ℤ
//! and reduced mod p. On coordinates `ξ_j = ξ(b_j)` the element `g` acts by
//! `Ad(g^{-1})^T`. The dual vector `e'_β` is the coordinate at `e_{−β}`.

use super::field::Gf;
use super::lie::ChevalleyAlgebra;
use super::tables::{Coef, RationalClassRow};
use crate::error::{Error, Result};

/// Dense square matrix over `F_q`, row-major.
pub type FqMatrix = Vec<Vec<u8>>;

pub fn mat_vec(gf: &Gf, m: &FqMatrix, v: &[u8]) -> Vec<u8> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(0, |acc, (&a, &b)| if a == 0 || b == 0 { acc } else { gf.add(acc, gf.mul(a, b)) }))
        .collect()
}

pub fn mat_mul(gf: &Gf, a: &FqMatrix, b: &FqMatrix) -> FqMatrix {
    let d = b.len();
    a.iter()
        .map(|row| {
            (0..d).map(|c| (0..d).fold(0, |acc, k| gf.add(acc, gf.mul(row[k], b[k][c])))).collect()
        })
        .collect()
}

pub fn identity(d: usize) -> FqMatrix {
    (0..d).map(|i| (0..d).map(|j| u8::from(i == j)).collect()).collect()
}

/// Index of the coordinate carrying `e'_β`.
pub fn dual_index(alg: &ChevalleyAlgebra, root: usize) -> usize {
    alg.e(alg.rs.neg(root))
}

/// `Ad(x_γ(t))` over `F_q`.
pub fn adjoint_generator(alg: &ChevalleyAlgebra, gf: &Gf, root: usize, t: u8) -> Result<FqMatrix> {
    let d = alg.dim();
    let mut m = vec![vec![0u8; d]; d];
    for (i, dp) in alg.divided_powers(root)?.iter().enumerate() {
        let ti = gf.pow(t, i as u32);
        if ti == 0 {
            continue;
        }
        for r in 0..d {
            for c in 0..d {
                if dp[r][c] != 0 {
                    m[r][c] = gf.add(m[r][c], gf.mul(ti, gf.from_int(dp[r][c])));
                }
            }
        }
    }
    Ok(m)
}

/// The action of `x_γ(t)` on `g*` in dual coordinates. Any characteristic;
/// only the class tables are tied to one.
pub fn coadjoint_generator(alg: &ChevalleyAlgebra, gf: &Gf, root: usize, t: u8) -> Result<FqMatrix> {
    let a = adjoint_generator(alg, gf, root, gf.neg(t))?;
    let d = a.len();
    Ok((0..d).map(|r| (0..d).map(|c| a[c][r]).collect()).collect())
}

/// Checks `x_α(t).e'_β = Σ_i (−1)^i t^i M_{α,−iα−β,i} e'_{iα+β}` for all
/// positive α, β and all `t ∈ F_q`.
pub fn check_formula_a(alg: &ChevalleyAlgebra, gf: &Gf) -> Result<usize> {
    let rs = &alg.rs;
    let d = alg.dim();
    let mut checked = 0;
    for a in 0..rs.n_pos {
        for t in gf.elements() {
            let c = coadjoint_generator(alg, gf, a, t)?;
            for b in 0..rs.n_pos {
                let mut unit = vec![0u8; d];
                unit[dual_index(alg, b)] = 1;
                let got = mat_vec(gf, &c, &unit);
                let mut want = vec![0u8; d];
                let mut target = rs.roots[b].clone();
                for i in 0u32.. {
                    let Some(ti) = rs.find(&target) else { break };
                    let neg_start = rs.neg(ti);
                    let m = alg.m_const(a, neg_start, i)?;
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    let coef = gf.mul(gf.pow(t, i), gf.from_int(sign * m));
                    let k = dual_index(alg, ti);
                    want[k] = gf.add(want[k], coef);
                    target = super::roots::add(&target, &rs.roots[a]);
                }
                if got != want {
                    return Err(Error::Construction(format!(
                        "x_{}({t}).e'_{} disagrees with the closed formula over F_{}",
                        rs.name(a),
                        rs.name(b),
                        gf.q
                    )));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// `x_γ(0) = 1` and `x_γ(t) x_γ(s) = x_γ(t+s)` for every root γ.
pub fn check_additivity(alg: &ChevalleyAlgebra, gf: &Gf) -> Result<()> {
    let d = alg.dim();
    for root in 0..alg.rs.roots.len() {
        let mats: Vec<FqMatrix> = gf.elements().map(|t| coadjoint_generator(alg, gf, root, t)).collect::<Result<_>>()?;
        if mats[0] != identity(d) {
            return Err(Error::Construction(format!("x_{}(0) is not the identity", alg.rs.name(root))));
        }
        for t in gf.elements() {
            for s in gf.elements() {
                if mat_mul(gf, &mats[t as usize], &mats[s as usize]) != mats[gf.add(t, s) as usize] {
                    return Err(Error::Construction(format!(
                        "x_{r}({t}) x_{r}({s}) ≠ x_{r}({t}+{s})",
                        r = alg.rs.name(root)
                    )));
                }
            }
        }
    }
    Ok(())
}

/// The table representative as a coordinate vector over `F_q`.
pub fn materialize_rep(alg: &ChevalleyAlgebra, row: &RationalClassRow, gf: &Gf) -> Result<Vec<u8>> {
    if gf.p != alg.group().characteristic() {
        return Err(Error::Domain(format!("{} tables need characteristic {}", alg.group(), alg.group().characteristic())));
    }
    let missing = |name: &str| Error::ParameterUnavailable(name.to_string(), gf.q);
    let mut v = vec![0u8; alg.dim()];
    for &(coef, root) in &row.rep {
        let x = match coef {
            Coef::One => 1,
            Coef::MinusOne => gf.neg(1),
            Coef::Eta => gf.eta().ok_or_else(|| missing("eta"))?,
            Coef::MinusZeta => gf.neg(gf.zeta().ok_or_else(|| missing("zeta"))?),
            Coef::Varpi => gf.varpi().ok_or_else(|| missing("varpi"))?,
            Coef::MinusVarpi => gf.neg(gf.varpi().ok_or_else(|| missing("varpi"))?),
        };
        let k = dual_index(alg, root);
        v[k] = gf.add(v[k], x);
    }
    Ok(v)
}
