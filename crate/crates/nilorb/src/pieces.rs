//! Nilpotent pieces for types B and C.
//!
//! A piece can be described three ways: as a fibre of Ψ*, through the
//! closure order and the complex Springer image (MS-pieces), or as a level
//! set of the Υ-sequence of the canonical filtration. Υ is computed here by
//! a purely combinatorial recursion on symbols that mirrors one step of the
//! filtration; [`crate::f2`] runs the same step on actual vector spaces.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{ensure, Error, Result};
use crate::orbits::{LieType, OrbitSymbol};
use crate::partitions::{Family, Partition};
use crate::springer::{self, UnipotentClass};

/// `(f_0, f_1, …, f_N)` with `f_a = dim V_{≥a}/V_{≥a+1}`; negative indices by symmetry.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct UpsilonSeq(pub Vec<u32>);

impl UpsilonSeq {
    /// Trims trailing zeros, keeping at least `f_0`.
    pub fn new(mut f: Vec<u32>) -> Self {
        while f.len() > 1 && f.last() == Some(&0) {
            f.pop();
        }
        if f.is_empty() {
            f.push(0);
        }
        UpsilonSeq(f)
    }

    /// `f_0 + 2 Σ_{a≥1} f_a`.
    pub fn dim(&self) -> u32 {
        self.0.iter().enumerate().map(|(a, &x)| if a == 0 { x } else { 2 * x }).sum()
    }

    /// Highest index carrying a nonzero entry.
    pub fn top(&self) -> usize {
        self.0.len() - 1
    }
}

impl fmt::Display for UpsilonSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

/// Υ of a unipotent class: `f_a = Σ_i m(a + 2i + 1)`.
pub fn upsilon_from_unipotent(c: &UnipotentClass) -> UpsilonSeq {
    let top = c.parts.largest();
    let f = (0..top)
        .map(|a| (0..).map(|i| a + 2 * i + 1).take_while(|&k| k <= top).map(|k| c.parts.multiplicity(k)).sum())
        .collect();
    UpsilonSeq::new(f)
}

/// One step of the orbit recursion: the outermost layer `(N, f_N)` and the
/// symbol of the induced form on `V_{≥−N+1}/V_{≥N}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecursionStep {
    pub n_top: u32,
    pub f_top: u32,
    pub derived: OrbitSymbol,
    /// Which case of the recursion fired, for diagnostics.
    pub case: &'static str,
}

/// Multiplicities of λ with the two moves the recursion needs.
struct Parts(BTreeMap<u32, u32>);

impl Parts {
    fn of(p: &Partition) -> Self {
        let mut m = BTreeMap::new();
        for &x in p.parts() {
            *m.entry(x).or_insert(0) += 1;
        }
        Parts(m)
    }

    fn count(&self, k: u32) -> u32 {
        self.0.get(&k).copied().unwrap_or(0)
    }

    fn take(&mut self, k: u32, c: u32) -> Result<()> {
        let have = self.count(k);
        ensure!(have >= c, "need {c} parts of size {k}, have {have}");
        if have == c {
            self.0.remove(&k);
        } else {
            self.0.insert(k, have - c);
        }
        Ok(())
    }

    fn give(&mut self, k: u32, c: u32) {
        if k > 0 && c > 0 {
            *self.0.entry(k).or_insert(0) += c;
        }
    }

    /// Every part of size `from` becomes a part of size `to`.
    fn move_all(&mut self, from: u32, to: u32) -> Result<()> {
        let c = self.count(from);
        self.take(from, c)?;
        self.give(to, c);
        Ok(())
    }

    /// Two parts of size `from` become two of size `from − 1`.
    fn shrink_two(&mut self, from: u32) -> Result<()> {
        self.take(from, 2)?;
        self.give(from - 1, 2);
        Ok(())
    }

    fn into_symbol(
        self,
        old: &OrbitSymbol,
        n: u32,
        m: u32,
        chi_rule: impl Fn(u32) -> Option<u32>,
    ) -> Result<OrbitSymbol> {
        let parts: Vec<u32> = self.0.iter().rev().flat_map(|(&k, &c)| std::iter::repeat_n(k, c as usize)).collect();
        let lambda = Partition::new(parts)?;
        let chi = lambda
            .distinct_parts()
            .into_iter()
            .map(|k| (k, chi_rule(k).unwrap_or_else(|| old.chi_extend(k))))
            .collect();
        let s = OrbitSymbol { ty: old.ty, n, m, lambda, chi, label: None };
        s.check().map_err(|e| Error::Internal(format!("recursion from {old} produced {s}: {e}")))?;
        Ok(s)
    }
}

/// The unique `j ≥ 0` with `χ(e−j) = f` and `χ(e−j−1) < f`.
fn find_j(s: &OrbitSymbol, e: u32, f: u32) -> Result<u32> {
    (0..e)
        .find(|&j| s.chi_extend(e - j) == f && s.chi_extend(e - j - 1) < f)
        .ok_or_else(|| Error::Internal(format!("no j for {s} at e={e}, f={f}")))
}

/// One recursion step for a type-C symbol.
pub fn recursion_step_c(s: &OrbitSymbol) -> Result<RecursionStep> {
    ensure!(s.ty == LieType::C, "recursion_step_c on a type-{} symbol", s.ty.letter());
    if s.is_zero() {
        return Err(Error::BaseCase);
    }
    let e = s.lambda.largest();
    let f = s.chi_extend(e);
    ensure!(e <= 2 * f + 1, "e={e} exceeds 2f+1 for {s}");
    let n_top = (e - 1).max(2 * f - 1);
    let me = s.lambda.multiplicity(e);
    let chi_e1 = s.chi_extend(e - 1);
    let mut parts = Parts::of(&s.lambda);

    let (f_top, case) = if e == 2 * f + 1 || (e == 2 * f && chi_e1 + 1 == f) {
        (me, "i")
    } else if e == 2 * f {
        ensure!(chi_e1 == f, "χ(e−1) must be f−1 or f when e = 2f");
        (me + 1, "ii")
    } else {
        (1, "iii")
    };
    let n = s.n.checked_sub(f_top).ok_or_else(|| Error::Internal(format!("f_N too large for {s}")))?;

    let derived = match case {
        "i" => {
            parts.move_all(e, e - 2)?;
            let c2 = s.chi_extend(e.saturating_sub(2));
            parts.into_symbol(s, n, 0, |k| (k + 2 == e).then(|| if c2 < f { f - 1 } else { f }))?
        }
        "ii" => {
            let j = find_j(s, e, f)?;
            ensure!(j >= 1, "case (ii) needs j ≥ 1 for {s}");
            parts.move_all(e, e - 2)?;
            parts.shrink_two(e - j)?;
            parts.into_symbol(s, n, 0, |k| (k >= e - j && k < e).then_some(f - 1))?
        }
        _ => {
            let j = find_j(s, e, f)?;
            parts.shrink_two(e - j)?;
            parts.into_symbol(s, n, 0, |k| (k >= e - j).then_some(f - 1))?
        }
    };
    Ok(RecursionStep { n_top, f_top, derived, case })
}

/// One recursion step for a type-B symbol. `ρ ≠ 0` is read off as `χ(e−1) = f`.
pub fn recursion_step_b(s: &OrbitSymbol) -> Result<RecursionStep> {
    ensure!(s.ty == LieType::B, "recursion_step_b on a type-{} symbol", s.ty.letter());
    if s.is_zero() {
        return Err(Error::BaseCase);
    }
    let m = s.m;
    let e = s.lambda.largest();
    let f = s.chi_extend(e);
    ensure!(m + f >= e, "m < e − f for {s}");
    let n_top = (2 * m).max((m + f).saturating_sub(1));
    let me = s.lambda.multiplicity(e);
    let rho = e > 0 && s.chi_extend(e - 1) == f;
    let mut parts = Parts::of(&s.lambda);

    let (f_top, case) = if m == 0 {
        (me, "i")
    } else if m >= f {
        (1, "ii")
    } else if e - f < m {
        (2, "iii")
    } else if rho {
        (me + 2, "iv")
    } else if m + 1 < f {
        (me, "i")
    } else {
        (me + 1, "v")
    };
    let n = s.n.checked_sub(f_top).ok_or_else(|| Error::Internal(format!("f_N too large for {s}")))?;

    let derived = match case {
        "i" => {
            parts.move_all(e, e.saturating_sub(2))?;
            parts.into_symbol(s, n, m, |_| None)?
        }
        "ii" => {
            let top = if m + f == e { f + 1 } else { f };
            parts.into_symbol(s, n, m - 1, |k| (k == e).then_some(top))?
        }
        "iii" => {
            let j = find_j(s, e, f)?;
            parts.shrink_two(e - j)?;
            let top = if m >= e - f + 2 { f - 1 } else { f };
            parts.into_symbol(s, n, m - 1, |k| {
                if k == e {
                    Some(top)
                } else {
                    (k >= e - j).then_some(f - 1)
                }
            })?
        }
        "iv" => {
            let j = find_j(s, e, f)?;
            ensure!(j >= 1, "case (iv) needs j ≥ 1 for {s}");
            parts.move_all(e, e - 2)?;
            parts.shrink_two(e - j)?;
            parts.into_symbol(s, n, m - 1, |k| {
                if k + 1 == e {
                    Some(f)
                } else {
                    (k >= e - j && k + 2 <= e).then_some(f - 1)
                }
            })?
        }
        _ => {
            parts.move_all(e, e - 2)?;
            parts.into_symbol(s, n, m - 1, |k| {
                if k + 1 == e {
                    Some(f)
                } else {
                    (k + 2 == e).then_some(f - 1)
                }
            })?
        }
    };
    Ok(RecursionStep { n_top, f_top, derived, case })
}

pub fn recursion_step(s: &OrbitSymbol) -> Result<RecursionStep> {
    match s.ty {
        LieType::C => recursion_step_c(s),
        LieType::B => recursion_step_b(s),
        LieType::D => Err(Error::UnsupportedType('D')),
    }
}

/// Υ of an orbit through the combinatorial recursion.
pub fn upsilon(s: &OrbitSymbol) -> Result<UpsilonSeq> {
    let dim = s.ty.natural_dim(s.n);
    let step = match recursion_step(s) {
        Err(Error::BaseCase) => return Ok(UpsilonSeq::new(vec![dim])),
        other => other?,
    };
    let inner = upsilon(&step.derived)?;
    let n = step.n_top as usize;
    ensure!(n >= 1, "N = 0 for nonzero {s}");
    ensure!(inner.0.len() <= n, "inner sequence {inner} of {} reaches index N={n}", step.derived);
    let mut f = inner.0.clone();
    f.resize(n, 0);
    f.push(step.f_top);
    let out = UpsilonSeq::new(f);
    ensure!(out.dim() == dim, "Υ({s}) = {out} does not add up to {dim}");
    Ok(out)
}

/// A block of orbits labelled by a complex unipotent class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Piece {
    pub label: UnipotentClass,
    pub members: Vec<OrbitSymbol>,
}

/// MS-pieces: for each orbit `c` with `γ*(c)` in the complex image, everything
/// below `c` that is not below a smaller such orbit.
pub fn ms_pieces(ty: LieType, n: u32) -> Result<Vec<Piece>> {
    let orbits = OrbitSymbol::enumerate(ty, n);
    let (_, family) = match ty {
        LieType::B => (Family::XB2, Family::XB1),
        LieType::C => (Family::XC2, Family::XC1),
        LieType::D => return Err(Error::UnsupportedType('D')),
    };
    let gammas: Vec<_> = orbits.iter().map(springer::gamma_star).collect();
    let k = orbits.len();
    let words = k.div_ceil(64);
    // below[c] = bitset of c' ≤ c
    let mut below = vec![vec![0u64; words]; k];
    for c in 0..k {
        for c2 in 0..k {
            if gammas[c2].leq(&gammas[c])? {
                below[c][c2 / 64] |= 1 << (c2 % 64);
            }
        }
    }
    let special: Vec<bool> = gammas.iter().map(|g| g.in_family(family)).collect();
    let mut out = Vec::new();
    for c in (0..k).filter(|&c| special[c]) {
        let mut set = below[c].clone();
        for c2 in (0..k).filter(|&c2| c2 != c && special[c2]) {
            if below[c][c2 / 64] >> (c2 % 64) & 1 == 1 {
                for (w, b) in set.iter_mut().zip(&below[c2]) {
                    *w &= !b;
                }
            }
        }
        let members = (0..k).filter(|&i| set[i / 64] >> (i % 64) & 1 == 1).map(|i| orbits[i].clone()).collect();
        out.push(Piece { label: springer::unip_from_symbol(&gammas[c], ty)?, members });
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct PieceEntry {
    pub label: UnipotentClass,
    pub members: Vec<OrbitSymbol>,
    pub upsilon: UpsilonSeq,
}

/// The three descriptions of the pieces of one algebra side by side.
#[derive(Clone, Debug, Serialize)]
pub struct PieceReport {
    #[serde(rename = "type")]
    pub ty: LieType,
    pub n: u32,
    pub pieces: Vec<PieceEntry>,
    pub agree: bool,
    pub discrepancies: Vec<String>,
}

type Blocks = Vec<Vec<usize>>;

fn canonical(mut blocks: Blocks) -> Blocks {
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.sort();
    blocks
}

pub fn piece_report(ty: LieType, n: u32) -> Result<PieceReport> {
    if ty == LieType::D {
        return Err(Error::UnsupportedType('D'));
    }
    let orbits = OrbitSymbol::enumerate(ty, n);
    let index: BTreeMap<&OrbitSymbol, usize> = orbits.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut discrepancies = Vec::new();

    let psis: Vec<UnipotentClass> = orbits.iter().map(springer::psi_star).collect::<Result<_>>()?;
    let ups: Vec<UpsilonSeq> = orbits.iter().map(upsilon).collect::<Result<_>>()?;

    let mut by_psi: BTreeMap<&UnipotentClass, Vec<usize>> = BTreeMap::new();
    let mut by_ups: BTreeMap<&UpsilonSeq, Vec<usize>> = BTreeMap::new();
    for i in 0..orbits.len() {
        by_psi.entry(&psis[i]).or_default().push(i);
        by_ups.entry(&ups[i]).or_default().push(i);
    }
    let psi_blocks = canonical(by_psi.values().cloned().collect());
    let ups_blocks = canonical(by_ups.values().cloned().collect());

    let ms = ms_pieces(ty, n)?;
    let mut ms_blocks = Vec::new();
    for p in &ms {
        let ids: Vec<usize> = p.members.iter().map(|s| index[s]).collect();
        for &i in &ids {
            if psis[i] != p.label {
                discrepancies.push(format!("{} lies in the MS-piece of {} but Ψ* gives {}", orbits[i], p.label, psis[i]));
            }
        }
        ms_blocks.push(ids);
    }
    let ms_blocks = canonical(ms_blocks);
    let covered: usize = ms_blocks.iter().map(Vec::len).sum();
    if covered != orbits.len() {
        discrepancies.push(format!("MS-pieces cover {covered} memberships for {} orbits", orbits.len()));
    }
    if psi_blocks != ms_blocks {
        discrepancies.push("Ψ*-fibres and MS-pieces differ".into());
    }
    if psi_blocks != ups_blocks {
        discrepancies.push("Ψ*-fibres and Υ-classes differ".into());
    }
    let mut pieces = Vec::new();
    for (label, ids) in &by_psi {
        let expected = upsilon_from_unipotent(label);
        for &i in ids {
            if ups[i] != expected {
                discrepancies.push(format!("Υ({}) = {} but Υ({label}) = {expected}", orbits[i], ups[i]));
            }
        }
        pieces.push(PieceEntry {
            label: (*label).clone(),
            members: ids.iter().map(|&i| orbits[i].clone()).collect(),
            upsilon: ups[ids[0]].clone(),
        });
    }
    Ok(PieceReport { ty, n, pieces, agree: discrepancies.is_empty(), discrepancies })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(ty: LieType, parts: &[u32]) -> UnipotentClass {
        UnipotentClass::new(ty, Partition::new(parts.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn upsilon_of_classes() {
        assert_eq!(upsilon_from_unipotent(&class(LieType::C, &[4])).0, vec![0, 1, 0, 1]);
        assert_eq!(upsilon_from_unipotent(&class(LieType::C, &[1, 1])).0, vec![2]);
        assert_eq!(upsilon_from_unipotent(&class(LieType::C, &[2, 2])).0, vec![0, 2]);
        assert_eq!(upsilon_from_unipotent(&class(LieType::B, &[3, 3, 1])).0, vec![3, 0, 2]);
    }

    #[test]
    fn c_steps() {
        let s = OrbitSymbol::c(vec![2, 2], &[2]).unwrap();
        let st = recursion_step_c(&s).unwrap();
        assert_eq!((st.n_top, st.f_top), (3, 1));
        assert_eq!(st.derived, OrbitSymbol::c(vec![1, 1], &[1]).unwrap());
        let st2 = recursion_step_c(&st.derived).unwrap();
        assert_eq!((st2.n_top, st2.f_top), (1, 1));
        assert_eq!(st2.derived, OrbitSymbol::zero(LieType::C, 0));
        let s = OrbitSymbol::c(vec![2, 2], &[1]).unwrap();
        let st = recursion_step_c(&s).unwrap();
        assert_eq!((st.n_top, st.f_top, st.case), (1, 2, "i"));
    }

    #[test]
    fn b_steps() {
        for m in 1..4 {
            let s = OrbitSymbol::b(m, vec![], &[]).unwrap();
            let st = recursion_step_b(&s).unwrap();
            assert_eq!((st.n_top, st.f_top), (2 * m, 1));
            assert_eq!(st.derived, OrbitSymbol::b(m - 1, vec![], &[]).unwrap());
        }
        let s = OrbitSymbol::b(1, vec![2, 2], &[2]).unwrap();
        let st = recursion_step_b(&s).unwrap();
        assert_eq!((st.n_top, st.f_top, st.case), (2, 2, "iii"));
        assert_eq!(st.derived, OrbitSymbol::zero(LieType::B, 1));
        assert_eq!(recursion_step_b(&OrbitSymbol::zero(LieType::B, 1)), Err(Error::BaseCase));
    }

    #[test]
    fn upsilon_examples() {
        assert_eq!(upsilon(&OrbitSymbol::c(vec![2, 2], &[2]).unwrap()).unwrap().0, vec![0, 1, 0, 1]);
        for n in 0..4 {
            assert_eq!(upsilon(&OrbitSymbol::zero(LieType::C, n)).unwrap().0, vec![2 * n]);
        }
        assert_eq!(upsilon(&OrbitSymbol::b(1, vec![2, 2], &[2]).unwrap()).unwrap().0, vec![3, 0, 2]);
        assert_eq!(upsilon(&OrbitSymbol::b(1, vec![], &[]).unwrap()).unwrap().0, vec![1, 0, 1]);
    }

    #[test]
    fn ms_examples() {
        let c2 = ms_pieces(LieType::C, 2).unwrap();
        assert_eq!(c2.len(), 4);
        assert!(c2.iter().all(|p| p.members.len() == 1));
        let b1 = ms_pieces(LieType::B, 1).unwrap();
        assert_eq!(b1.len(), 2);
        let b3 = ms_pieces(LieType::B, 3).unwrap();
        assert_eq!(b3.len(), 7);
        let big = b3.iter().find(|p| p.label.parts.parts() == [3, 3, 1]).unwrap();
        let mut want = vec![OrbitSymbol::b(1, vec![2, 2], &[2]).unwrap(), OrbitSymbol::b(0, vec![3, 3], &[3]).unwrap()];
        let mut got = big.members.clone();
        want.sort();
        got.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn reports_agree_small() {
        for (ty, n, count) in [(LieType::C, 3, 8), (LieType::B, 3, 7), (LieType::C, 0, 1)] {
            let r = piece_report(ty, n).unwrap();
            assert!(r.agree, "{:?}", r.discrepancies);
            assert_eq!(r.pieces.len(), count);
        }
    }
}
