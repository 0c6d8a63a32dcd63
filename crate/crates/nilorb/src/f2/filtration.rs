//! The canonical filtration `V_{≥a}` of a nilpotent functional, built one
//! outer layer at a time on explicit subspaces.
//!
//! Each step finds `V_{≥−N+1}` from a case table, takes `V_{≥N}` as a
//! suitable perp, and recurses on the quotient `V_{≥−N+1}/V_{≥N}` (realised by
//! a complement basis). Every containment the construction relies on is
//! asserted, so a wrong case table fails loudly instead of producing numbers.

use super::forms::{gram, OrthSpace, Quadratic, SpSpace};
use super::invariants::{chi_value, odd_structure, sp_operator, Pivot};
use super::linalg::{complement, dot, kernel_on, BitMatrix, Basis};
use crate::error::{ensure, Error, Result};
use crate::pieces::UpsilonSeq;

/// Smallest `e` with `T^e = 0`.
fn nil_index(t: &BitMatrix) -> Result<u32> {
    let mut p = BitMatrix::identity(t.cols);
    for e in 0..=t.cols as u32 {
        if p.is_zero() {
            return Ok(e);
        }
        p = p.mul(t);
    }
    Err(Error::NotNilpotent)
}

/// The zero set of a quadratic function on `span(basis)`, which must be linear there.
fn linear_zero_set(basis: &[u64], f: impl Fn(u64) -> bool) -> Result<Vec<u64>> {
    for a in 0..basis.len() {
        for b in a + 1..basis.len() {
            ensure!(
                f(basis[a] ^ basis[b]) == (f(basis[a]) ^ f(basis[b])),
                "functional expected to be linear is not"
            );
        }
    }
    Ok(kernel_on(basis, |v| u64::from(f(v))))
}

fn unit_basis(d: usize) -> Vec<u64> {
    (0..d).map(|i| 1 << i).collect()
}

/// Puts the inner sequence below the new outer layer.
fn assemble(inner: UpsilonSeq, n: u32, f_top: usize, dim: usize) -> Result<UpsilonSeq> {
    let n = n as usize;
    ensure!(inner.0.len() <= n, "inner layers {inner} reach index N={n}");
    let mut f = inner.0;
    f.resize(n, 0);
    f.push(f_top as u32);
    let out = UpsilonSeq::new(f);
    ensure!(out.dim() as usize == dim, "layers {out} do not add up to dim {dim}");
    Ok(out)
}

pub fn filtration_sp(sp: &SpSpace) -> Result<UpsilonSeq> {
    let dim = sp.dim();
    if sp.alpha.is_zero() {
        return Ok(UpsilonSeq::new(vec![dim as u32]));
    }
    let t = sp_operator(sp)?;
    let e = nil_index(&t)?;
    let all = unit_basis(dim);
    let f = chi_value(&t, &sp.alpha, e);
    ensure!(f >= 1 && e <= 2 * f + 1, "e={e}, f={f} out of range");
    let n = (e - 1).max(2 * f - 1);
    let tf1 = t.pow(f - 1);
    let rho = |v: u64| sp.alpha.eval(tf1.apply(v));

    let low = if e == 2 * f + 1 {
        t.pow(e - 1).kernel()
    } else if e == 2 * f {
        linear_zero_set(&t.pow(e - 1).kernel(), rho)?
    } else {
        linear_zero_set(&all, rho)?
    };
    let perp = BitMatrix::from_rows(dim, low.iter().map(|&v| sp.symp.apply(v)).collect());
    let top = perp.kernel();
    ensure!(top.len() + low.len() == dim, "V≥N and V≥−N+1 have dims {} + {} ≠ {dim}", top.len(), low.len());
    ensure!(Basis::of(&low).contains_all(&top), "V≥N ⊄ V≥−N+1");
    ensure!(sp.alpha.vanishes_on(&top), "α does not vanish on V≥N");
    ensure!(
        top.iter().all(|&x| low.iter().all(|&y| !sp.alpha.bilinear(x, y))),
        "β_ξ(V≥N, V≥−N+1) ≠ 0"
    );

    let comp = complement(&top, &low);
    let next = SpSpace { symp: gram(&comp, |a, b| dot(a, sp.symp.apply(b))), alpha: sp.alpha.restrict(&comp) };
    let inner = filtration_sp(&next)?;
    assemble(inner, n, top.len(), dim)
}

pub fn filtration_so(o: &OrthSpace) -> Result<UpsilonSeq> {
    let dim = o.dim();
    if o.xi.is_zero() {
        return Ok(UpsilonSeq::new(vec![dim as u32]));
    }
    let st = odd_structure(o, Pivot::First)?;
    let m = st.m as u32;
    let tw = &st.t_w;
    let qw: &Quadratic = &st.q_w;
    let e = nil_index(tw)?;
    let f = e.saturating_sub(m).max(chi_value(tw, qw, e));
    let n = (2 * m).max((m + f).saturating_sub(1));
    ensure!(n >= 1, "N = 0 for a nonzero functional");
    ensure!(m + f >= e, "m < e − f");

    let amb = |cs: &[u64]| cs.iter().map(|&c| st.ambient(c)).collect::<Vec<u64>>();
    let mut skeleton = st.v.clone();
    skeleton.extend(st.u.iter().skip(1));
    let ker_w = if e >= 1 { tw.pow(e - 1).kernel() } else { Vec::new() };
    let tf1 = tw.pow(f.saturating_sub(1));
    let rho = |c: u64| qw.eval(tf1.apply(c));

    let low: Vec<u64> = if m == 0 {
        let mut l = vec![st.v[0]];
        l.extend(amb(&ker_w));
        l
    } else if m >= f {
        skeleton.iter().copied().chain(st.w.iter().copied()).collect()
    } else if m + f > e {
        let zs = linear_zero_set(&unit_basis(st.w.len()), rho)?;
        skeleton.iter().copied().chain(amb(&zs)).collect()
    } else {
        let images: Vec<u64> = ker_w.iter().map(|&c| tf1.apply(c)).collect();
        let rho_nonzero = !qw.vanishes_on(&images);
        if m + 1 == f || rho_nonzero {
            let zs = linear_zero_set(&ker_w, rho)?;
            skeleton.iter().copied().chain(amb(&zs)).collect()
        } else {
            // w** with β(T^{e−1} w**, w) = Q(T^{f−1} w) on W
            let wb = unit_basis(st.w.len());
            linear_zero_set(&wb, rho)?;
            let y = wb.iter().enumerate().fold(0u64, |acc, (b, &c)| acc | u64::from(rho(c)) << b);
            let lhs = qw.polar.mul(&tw.pow(e - 1));
            let wss = lhs.solve(y).ok_or_else(|| Error::Internal("no w** solves the defining equation".into()))?;
            let mut l = skeleton.clone();
            l.push(st.u[0] ^ st.ambient(wss));
            l.extend(amb(&ker_w));
            l
        }
    };

    let perp = BitMatrix::from_rows(dim, low.iter().map(|&v| o.q.polar.apply(v)).collect()).kernel();
    let pb = Basis::of(&perp);
    let zeros: Vec<u64> = pb.elements().into_iter().filter(|&x| !o.q.eval(x)).collect();
    let top = Basis::of(&zeros);
    ensure!(zeros.len() == 1 << top.dim(), "isotropic part of the perp is not a subspace");
    let top = top.vectors;
    ensure!(Basis::of(&low).contains_all(&top), "V≥N ⊄ V≥−N+1");
    ensure!(
        top.iter().all(|&x| low.iter().all(|&y| !dot(x, o.xi.apply(y)))),
        "β_ξ(V≥N, V≥−N+1) ≠ 0"
    );

    let comp = complement(&top, &low);
    let next = OrthSpace { q: o.q.restrict(&comp), xi: gram(&comp, |a, b| dot(a, o.xi.apply(b))) };
    let inner = filtration_so(&next)?;
    assemble(inner, n, top.len(), dim)
}
