//! Brute-force ground truth over F2.
//!
//! Every quadratic (type C) or alternating (types B, D) form on a small
//! F2-space is a functional; the nilpotent ones are classified here from the
//! definitions of λ, χ and m, independently of the combinatorics in
//! [`crate::orbits`]. The canonical filtration is likewise run on actual
//! subspaces and compared against [`crate::pieces::upsilon`].

pub mod filtration;
pub mod forms;
pub mod invariants;
pub mod linalg;
pub mod repr;

use std::collections::BTreeMap;

use rayon::prelude::*;

pub use filtration::{filtration_so, filtration_sp};
pub use forms::{FormSpace, OrthSpace, Quadratic, SpSpace};
pub use invariants::{invariants_so_even, invariants_so_odd, invariants_so_odd_with, invariants_sp, Pivot};
pub use repr::{invariants, representative_from_symbol};

use crate::error::{Error, Result};
use crate::orbits::{LieType, OrbitSymbol};
use crate::pieces::UpsilonSeq;

/// Largest ambient dimension the exhaustive sweep accepts.
pub const MAX_SWEEP_DIM: usize = 7;

/// `Υ` of the functional, from the filtration built on subspaces.
pub fn canonical_filtration(space: &FormSpace) -> Result<UpsilonSeq> {
    match space {
        FormSpace::Sp(sp) => filtration_sp(sp),
        FormSpace::Orth(o) if o.dim() % 2 == 1 => filtration_so(o),
        FormSpace::Orth(_) => Err(Error::UnsupportedType('D')),
    }
}

/// Number of forms `classify_all` runs through.
pub fn form_count(ty: LieType, n: u32) -> u64 {
    let dim = ty.natural_dim(n) as usize;
    let bits = match ty {
        LieType::C => forms::quadratic_bits(dim),
        _ => forms::alternating_bits(dim),
    };
    1 << bits
}

/// The functional with the given index: a quadratic form against the
/// standard symplectic form (C), or an alternating form against the standard
/// split quadratic form (B, D).
pub fn form_at(ty: LieType, n: u32, idx: u64) -> FormSpace {
    let n = n as usize;
    match ty {
        LieType::C => FormSpace::Sp(SpSpace {
            symp: forms::standard_symplectic(n),
            alpha: forms::quadratic_from_index(2 * n, idx),
        }),
        LieType::B | LieType::D => {
            let odd = ty == LieType::B;
            let dim = 2 * n + usize::from(odd);
            FormSpace::Orth(OrthSpace {
                q: forms::standard_quadratic(n, odd),
                xi: forms::alternating_from_index(dim, idx),
            })
        }
    }
}

/// Invariants of form number `idx`, or `None` when it is not nilpotent.
pub fn form_invariant(ty: LieType, n: u32, idx: u64) -> Result<Option<OrbitSymbol>> {
    match invariants(&form_at(ty, n, idx)) {
        Ok(s) => Ok(Some(s)),
        Err(Error::NotNilpotent) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Tally of the invariants of every nilpotent form. Type D symbols carry no label.
pub fn classify_all(ty: LieType, n: u32) -> Result<BTreeMap<OrbitSymbol, u64>> {
    let dim = ty.natural_dim(n) as usize;
    if dim > MAX_SWEEP_DIM {
        return Err(Error::Domain(format!("exhaustive sweep limited to dimension {MAX_SWEEP_DIM}, got {dim}")));
    }
    (0..form_count(ty, n))
        .into_par_iter()
        .try_fold(BTreeMap::new, |mut acc, idx| {
            if let Some(s) = form_invariant(ty, n, idx)? {
                *acc.entry(s).or_insert(0u64) += 1;
            }
            Ok(acc)
        })
        .try_reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            Ok(a)
        })
}

/// Recomputes type-B invariants with the alternative pivot order and reports
/// whether they agree.
pub fn pivot_invariant(o: &OrthSpace) -> Result<bool> {
    Ok(invariants_so_odd_with(o, Pivot::First)? == invariants_so_odd_with(o, Pivot::Alt)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_c1() {
        let t = classify_all(LieType::C, 1).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t[&OrbitSymbol::zero(LieType::C, 1)], 1);
        assert_eq!(t[&OrbitSymbol::c(vec![1, 1], &[1]).unwrap()], 3);
    }

    #[test]
    fn classify_b1() {
        let t = classify_all(LieType::B, 1).unwrap();
        assert_eq!(t[&OrbitSymbol::zero(LieType::B, 1)], 1);
        assert_eq!(t[&OrbitSymbol::b(1, vec![], &[]).unwrap()], 3);
    }

    #[test]
    fn filtration_examples() {
        let s = OrbitSymbol::c(vec![2, 2], &[2]).unwrap();
        let rep = representative_from_symbol(&s).unwrap();
        assert_eq!(canonical_filtration(&rep).unwrap().0, vec![0, 1, 0, 1]);
        let b = OrbitSymbol::b(1, vec![], &[]).unwrap();
        assert_eq!(canonical_filtration(&representative_from_symbol(&b).unwrap()).unwrap().0, vec![1, 0, 1]);
        let z = representative_from_symbol(&OrbitSymbol::zero(LieType::C, 2)).unwrap();
        assert_eq!(canonical_filtration(&z).unwrap().0, vec![4]);
    }

    #[test]
    fn round_trip_b3_witness() {
        let s = OrbitSymbol::b(1, vec![2, 2], &[2]).unwrap();
        let rep = representative_from_symbol(&s).unwrap();
        assert_eq!(rep.dim(), 7);
        assert_eq!(canonical_filtration(&rep).unwrap().0, vec![3, 0, 2]);
    }
}
