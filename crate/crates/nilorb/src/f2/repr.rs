//! Explicit forms realising a given orbit symbol.
//!
//! Each pair of equal parts `s = λ_{2a−1} = λ_{2a}` contributes a block with
//! basis `T^i v, T^i w` (`0 ≤ i < s`) where `⟨T^i v, T^j w⟩ = δ_{i+j,s−1}` and
//! the quadratic form is 1 only on `T^{l−1} v`, `l = χ(s)`. Type B adds the
//! skeleton `span{v_0..v_m, u_0..u_{m−1}}` in front.

use super::forms::{FormSpace, OrthSpace, Quadratic, SpSpace};
use super::invariants::{invariants_so_even, invariants_so_odd, invariants_sp};
use super::linalg::BitMatrix;
use crate::error::{Error, Result};
use crate::orbits::{LieType, OrbitSymbol};

fn link(m: &mut BitMatrix, a: usize, b: usize) {
    m.set(a, b, true);
    m.set(b, a, true);
}

/// Adds the blocks for λ starting at coordinate `off`. `pair` is the ambient
/// pairing, `shifted` the pairing `(x, y) ↦ ⟨Tx, y⟩`.
fn add_blocks(s: &OrbitSymbol, off: usize, pair: &mut BitMatrix, shifted: &mut BitMatrix, diag: &mut u64) {
    let mut at = off;
    for pair_idx in 0..s.lambda.len() / 2 {
        let size = s.lambda.part(2 * pair_idx + 1) as usize;
        let l = s.chi(size as u32) as usize;
        let (v, w) = (at, at + size);
        for i in 0..size {
            link(pair, v + i, w + size - 1 - i);
            if i + 1 < size {
                link(shifted, v + i, w + size - 2 - i);
            }
        }
        if l >= 1 {
            *diag |= 1 << (v + l - 1);
        }
        at += 2 * size;
    }
}

fn build(s: &OrbitSymbol) -> FormSpace {
    let dim = s.ty.natural_dim(s.n) as usize;
    let mut pair = BitMatrix::zero(dim, dim);
    let mut shifted = BitMatrix::zero(dim, dim);
    let mut diag = 0u64;
    match s.ty {
        LieType::C => {
            add_blocks(s, 0, &mut pair, &mut shifted, &mut diag);
            FormSpace::Sp(SpSpace { symp: pair, alpha: Quadratic { diag, polar: shifted } })
        }
        LieType::D => {
            add_blocks(s, 0, &mut pair, &mut shifted, &mut diag);
            FormSpace::Orth(OrthSpace { q: Quadratic { diag, polar: pair }, xi: shifted })
        }
        LieType::B => {
            let m = s.m as usize;
            // v_i at i, u_i at m + 1 + i
            diag |= 1 << m;
            for i in 0..m {
                link(&mut pair, m + 1 + i, i);
                link(&mut shifted, i + 1, m + 1 + i);
            }
            add_blocks(s, 2 * m + 1, &mut pair, &mut shifted, &mut diag);
            FormSpace::Orth(OrthSpace { q: Quadratic { diag, polar: pair }, xi: shifted })
        }
    }
}

/// Invariants of any of the three kinds of space.
pub fn invariants(space: &FormSpace) -> Result<OrbitSymbol> {
    match space {
        FormSpace::Sp(sp) => invariants_sp(sp),
        FormSpace::Orth(o) if o.dim() % 2 == 1 => invariants_so_odd(o),
        FormSpace::Orth(o) => invariants_so_even(o),
    }
}

/// A form in the orbit of `s`, certified by recomputing its invariants.
pub fn representative_from_symbol(s: &OrbitSymbol) -> Result<FormSpace> {
    s.check()?;
    let space = build(s);
    let back = invariants(&space)?;
    if back != s.without_label() {
        return Err(Error::Construction(format!("representative of {s} has invariants {back}")));
    }
    Ok(space)
}
