//! Invariant suites shared by the command line `--verify` flag and the
//! acceptance run. Each returns a [`Check`] rather than panicking.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::chevalley::{self, coadjoint, ChevalleyAlgebra, Gf, Group};
use crate::f2;
use crate::orbits::{LieType, OrbitSymbol};
use crate::partitions::{Bipartition, Family};
use crate::pieces;
use crate::springer;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), ok, detail: detail.into() }
    }

    fn from_result(name: impl Into<String>, r: crate::Result<String>) -> Self {
        match r {
            Ok(d) => Check::new(name, true, d),
            Err(e) => Check::new(name, false, e.to_string()),
        }
    }

    fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check::new(name, false, detail)
    }
}

fn tag(ty: LieType, n: u32) -> String {
    format!("{}{n}", ty.letter())
}

/// The brute-force classification over F2 yields exactly the catalogue
/// (type D compared without the I/II split), and the nilpotent forms number
/// `2^{2N}`.
pub fn oracle_census(ty: LieType, n: u32) -> Check {
    let name = format!("oracle census {}", tag(ty, n));
    let found = match f2::classify_all(ty, n) {
        Ok(f) => f,
        Err(e) => return Check::fail(name, e.to_string()),
    };
    let strip = |s: &OrbitSymbol| s.without_label();
    let got: BTreeSet<OrbitSymbol> = found.keys().map(strip).collect();
    let want: BTreeSet<OrbitSymbol> = OrbitSymbol::enumerate(ty, n).iter().map(strip).collect();
    let total: u64 = found.values().sum();
    let positive_roots = match ty {
        LieType::B | LieType::C => n * n,
        LieType::D => n * n.saturating_sub(1),
    };
    let expected = 1u64 << (2 * positive_roots);
    if got != want {
        let missing = want.difference(&got).count();
        let extra = got.difference(&want).count();
        return Check::fail(name, format!("{missing} catalogue symbols never seen, {extra} unexpected"));
    }
    if total != expected {
        return Check::fail(name, format!("{total} nilpotent forms, expected {expected}"));
    }
    Check::new(name, true, format!("{} orbits, {total} nilpotent forms", got.len()))
}

/// γ* is injective on the catalogue with image the Springer family of total n.
pub fn springer_bijection(ty: LieType, n: u32) -> Check {
    let name = format!("springer bijection {}", tag(ty, n));
    let family = match ty {
        LieType::B => Family::XB2,
        LieType::C => Family::XC2,
        LieType::D => return Check::fail(name, "type D has no Springer family here"),
    };
    let image: BTreeSet<Bipartition> = OrbitSymbol::enumerate(ty, n).iter().map(springer::gamma_star).collect();
    let orbits = OrbitSymbol::enumerate(ty, n).len();
    let target: BTreeSet<Bipartition> = Bipartition::all(n).into_iter().filter(|t| t.in_family(family)).collect();
    let ok = image.len() == orbits && image == target;
    Check::new(name, ok, format!("{orbits} orbits, {} images, {} in {family:?}", image.len(), target.len()))
}

/// Closure order is a partial order with the zero orbit as unique minimum, and
/// (B, C) centralizer dimension drops strictly along covers.
pub fn closure_sanity(ty: LieType, n: u32) -> Check {
    let name = format!("closure order {}", tag(ty, n));
    Check::from_result(name, closure_sanity_inner(ty, n))
}

fn closure_sanity_inner(ty: LieType, n: u32) -> crate::Result<String> {
    let orbits = OrbitSymbol::enumerate(ty, n);
    let k = orbits.len();
    let mut leq = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            leq[i][j] = orbits[i].closure_leq(&orbits[j])?;
        }
    }
    let bad = |msg: String| Err(crate::Error::Internal(msg));
    for i in 0..k {
        if !leq[i][i] {
            return bad(format!("{} is not ≤ itself", orbits[i]));
        }
        for j in 0..k {
            if i != j && leq[i][j] && leq[j][i] {
                return bad(format!("{} and {} are mutually ≤", orbits[i], orbits[j]));
            }
            if !leq[i][j] {
                continue;
            }
            for l in 0..k {
                if leq[j][l] && !leq[i][l] {
                    return bad(format!("{} ≤ {} ≤ {} but not transitively", orbits[i], orbits[j], orbits[l]));
                }
            }
        }
    }
    let minima: Vec<usize> = (0..k).filter(|&i| (0..k).all(|j| leq[i][j])).collect();
    if minima.len() != 1 || !orbits[minima[0]].is_zero() {
        return bad(format!("{} least elements, expected only the zero orbit", minima.len()));
    }
    let covers = crate::orbits::hasse_indices(&orbits)?;
    if ty != LieType::D {
        for &(a, b) in &covers {
            if orbits[a].centralizer_dim()? <= orbits[b].centralizer_dim()? {
                return bad(format!("centralizer does not shrink from {} to {}", orbits[a], orbits[b]));
            }
        }
    }
    Ok(format!("{k} orbits, {} covers", covers.len()))
}

/// Ψ*-fibres, MS-pieces and Υ-classes coincide.
pub fn pieces_coincide(ty: LieType, n: u32) -> Check {
    let name = format!("pieces {}", tag(ty, n));
    match pieces::piece_report(ty, n) {
        Ok(r) if r.agree => Check::new(name, true, format!("{} pieces", r.pieces.len())),
        Ok(r) => Check::fail(name, r.discrepancies.join("; ")),
        Err(e) => Check::fail(name, e.to_string()),
    }
}

/// The filtration computed on subspaces of a representative matches Υ.
pub fn filtration_agrees(ty: LieType, n: u32) -> Check {
    let name = format!("filtration {}", tag(ty, n));
    let run = || -> crate::Result<String> {
        let orbits = OrbitSymbol::enumerate(ty, n);
        for s in &orbits {
            let rep = f2::representative_from_symbol(s)?;
            let got = f2::canonical_filtration(&rep)?;
            let want = pieces::upsilon(s)?;
            if got != want {
                return Err(crate::Error::Internal(format!("{s}: subspaces give {got}, recursion gives {want}")));
            }
        }
        Ok(format!("{} orbits", orbits.len()))
    };
    Check::from_result(name, run())
}

pub fn mass(group: Group) -> Check {
    let name = format!("mass {group}");
    match chevalley::mass_check(group) {
        Ok(r) => Check::new(name, r.ok, format!("{} rows, sum {} (want {})", r.rows, r.sum, r.expected)),
        Err(e) => Check::fail(name, e.to_string()),
    }
}

/// Structure constants satisfy Jacobi, the coadjoint matrices match the closed
/// formula, and root subgroups are one-parameter subgroups.
pub fn chevalley_self(group: Group, qs: &[u32]) -> Check {
    let name = format!("chevalley {group}");
    let run = || -> crate::Result<String> {
        let alg = ChevalleyAlgebra::build(group)?;
        alg.check_jacobi()?;
        let mut pairs = 0;
        for &q in qs {
            let gf = Gf::new(q)?;
            pairs += coadjoint::check_formula_a(&alg, &gf)?;
            coadjoint::check_additivity(&alg, &gf)?;
        }
        Ok(format!("dim {}, {pairs} (α, β, t) cases", alg.dim()))
    };
    Check::from_result(name, run())
}

/// Every classical suite for one type and rank, within the usual bounds.
pub fn classical_suite(ty: LieType, n: u32) -> Vec<Check> {
    let mut out = vec![closure_sanity(ty, n)];
    if ty != LieType::D {
        out.push(springer_bijection(ty, n));
        out.push(pieces_coincide(ty, n));
        if n <= 3 {
            out.push(filtration_agrees(ty, n));
        }
    }
    if (1..=3).contains(&n) {
        out.push(oracle_census(ty, n));
    }
    out
}
