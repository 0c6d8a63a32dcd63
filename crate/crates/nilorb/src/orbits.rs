//! Orbit symbols for nilpotent coadjoint orbits of `Sp(2n)`, `SO(2n+1)` and
//! `SO(2n)` in characteristic 2.
//!
//! Type C and D orbits are labelled by `(λ, χ)`, type B by `(m; (λ, χ))`,
//! where λ is the Jordan type of the associated operator and χ records where
//! the quadratic form dies along each Jordan block. χ is stored on distinct
//! parts only; [`OrbitSymbol::chi_extend`] supplies every other value.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Bipartition, Partition};
use crate::springer;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LieType {
    B,
    C,
    D,
}

impl LieType {
    pub fn letter(self) -> char {
        match self {
            LieType::B => 'B',
            LieType::C => 'C',
            LieType::D => 'D',
        }
    }

    /// Dimension of the natural module.
    pub fn natural_dim(self, n: u32) -> u32 {
        match self {
            LieType::B => 2 * n + 1,
            LieType::C | LieType::D => 2 * n,
        }
    }

    /// Dimension of the group.
    pub fn group_dim(self, n: u32) -> u32 {
        match self {
            LieType::B | LieType::C => n * (2 * n + 1),
            LieType::D => n * (2 * n).saturating_sub(1),
        }
    }
}

impl std::str::FromStr for LieType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B" | "b" => Ok(LieType::B),
            "C" | "c" => Ok(LieType::C),
            "D" | "d" => Ok(LieType::D),
            _ => Err(Error::InvalidSymbol(format!("unknown type {s:?}"))),
        }
    }
}

/// Which of the two `SO(2n)`-orbits inside a split `O(2n)`-orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SplitLabel {
    I,
    II,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "SymbolRepr", try_from = "SymbolRepr")]
pub struct OrbitSymbol {
    pub ty: LieType,
    pub n: u32,
    /// Only meaningful for type B; always 0 otherwise.
    pub m: u32,
    pub lambda: Partition,
    pub chi: BTreeMap<u32, u32>,
    pub label: Option<SplitLabel>,
}

#[derive(Serialize, Deserialize)]
struct SymbolRepr {
    #[serde(rename = "type")]
    ty: LieType,
    n: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    m: Option<u32>,
    lambda: Partition,
    chi: BTreeMap<u32, u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<SplitLabel>,
}

impl From<OrbitSymbol> for SymbolRepr {
    fn from(s: OrbitSymbol) -> Self {
        SymbolRepr {
            ty: s.ty,
            n: s.n,
            m: (s.ty == LieType::B).then_some(s.m),
            lambda: s.lambda,
            chi: s.chi,
            label: s.label,
        }
    }
}

impl TryFrom<SymbolRepr> for OrbitSymbol {
    type Error = Error;
    fn try_from(r: SymbolRepr) -> Result<Self> {
        let s = OrbitSymbol {
            ty: r.ty,
            n: r.n,
            m: r.m.unwrap_or(0),
            lambda: r.lambda,
            chi: r.chi,
            label: r.label,
        };
        s.check()?;
        Ok(s)
    }
}

impl OrbitSymbol {
    /// Builds and validates a symbol. `chi` lists the value on each distinct part, largest first.
    pub fn new(
        ty: LieType,
        n: u32,
        m: u32,
        lambda: Vec<u32>,
        chi: &[u32],
        label: Option<SplitLabel>,
    ) -> Result<Self> {
        let lambda = Partition::new(lambda)?;
        let distinct = lambda.distinct_parts();
        if distinct.len() != chi.len() {
            return Err(Error::InvalidSymbol(format!(
                "{} distinct parts but {} chi values",
                distinct.len(),
                chi.len()
            )));
        }
        let chi = distinct.into_iter().zip(chi.iter().copied()).collect();
        let s = OrbitSymbol { ty, n, m, lambda, chi, label };
        s.check()?;
        Ok(s)
    }

    pub fn c(lambda: Vec<u32>, chi: &[u32]) -> Result<Self> {
        let n = lambda.iter().sum::<u32>() / 2;
        Self::new(LieType::C, n, 0, lambda, chi, None)
    }

    pub fn b(m: u32, lambda: Vec<u32>, chi: &[u32]) -> Result<Self> {
        let n = m + lambda.iter().sum::<u32>() / 2;
        Self::new(LieType::B, n, m, lambda, chi, None)
    }

    pub fn d(lambda: Vec<u32>, chi: &[u32], label: Option<SplitLabel>) -> Result<Self> {
        let n = lambda.iter().sum::<u32>() / 2;
        Self::new(LieType::D, n, 0, lambda, chi, label)
    }

    /// The orbit of 0.
    pub fn zero(ty: LieType, n: u32) -> Self {
        let lambda = Partition::new(vec![1; 2 * n as usize]).expect("all ones");
        let mut chi = BTreeMap::new();
        if n > 0 {
            chi.insert(1, u32::from(ty != LieType::C));
        }
        OrbitSymbol { ty, n, m: 0, lambda, chi, label: None }
    }

    pub fn is_zero(&self) -> bool {
        self.m == 0 && self.lambda.parts().iter().all(|&p| p == 1) && {
            let want = u32::from(self.ty != LieType::C);
            self.chi.values().all(|&c| c == want)
        }
    }

    /// χ on a part of λ. Panics if `part` is not a part.
    pub fn chi(&self, part: u32) -> u32 {
        self.chi[&part]
    }

    /// χ at an arbitrary integer, extended from the block decomposition.
    pub fn chi_extend(&self, k: u32) -> u32 {
        let k = k as i64;
        let mut best = 0i64;
        for (&s, &l) in &self.chi {
            let (s, l) = (s as i64, l as i64);
            best = best.max((k - s + l).min(l));
        }
        if self.ty == LieType::B {
            best = best.max(k - self.m as i64);
        }
        best.max(0) as u32
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_ok()
    }

    /// Checks every constraint on the symbol, reporting the first violation.
    pub fn check(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSymbol(msg));
        let distinct = self.lambda.distinct_parts();
        if self.chi.len() != distinct.len() || distinct.iter().any(|d| !self.chi.contains_key(d)) {
            return bad(format!("chi must be given exactly on the parts of {}", self.lambda));
        }
        if self.ty != LieType::B && self.m != 0 {
            return bad("m is only used in type B".into());
        }
        let want = match self.ty {
            LieType::B => {
                if self.m > self.n {
                    return bad(format!("m={} exceeds n={}", self.m, self.n));
                }
                2 * (self.n - self.m)
            }
            _ => 2 * self.n,
        };
        if self.lambda.size() != want {
            return bad(format!("|λ|={} but expected {want}", self.lambda.size()));
        }
        for &d in &distinct {
            if !self.lambda.multiplicity(d).is_multiple_of(2) {
                return bad(format!("part {d} has odd multiplicity"));
            }
            let c = self.chi(d);
            let lower = match self.ty {
                LieType::C => d / 2,
                LieType::B | LieType::D => d.div_ceil(2),
            };
            if c < lower || c > d {
                return bad(format!("χ({d})={c} outside [{lower},{d}]"));
            }
        }
        for w in distinct.windows(2) {
            let (a, b) = (w[0], w[1]);
            if self.chi(a) < self.chi(b) || a - self.chi(a) < b - self.chi(b) {
                return bad(format!("χ not monotone between parts {a} and {b}"));
            }
        }
        if self.ty == LieType::B {
            if let Some(&top) = distinct.first() {
                if top - self.chi(top) > self.m {
                    return bad(format!("m={} < λ₁-χ(λ₁)={}", self.m, top - self.chi(top)));
                }
            }
        }
        match self.ty {
            LieType::D => {
                if self.is_degenerate_d() != self.label.is_some() {
                    return bad("label must be present exactly when χ = λ/2 on every part".into());
                }
            }
            _ => {
                if self.label.is_some() {
                    return bad("labels only exist in type D".into());
                }
            }
        }
        Ok(())
    }

    /// χ(λ_i) = λ_i/2 for every part; such O(2n)-orbits split in two. The
    /// zero-dimensional case is excluded (there is only one orbit there).
    pub fn is_degenerate_d(&self) -> bool {
        self.ty == LieType::D && self.n > 0 && self.chi.iter().all(|(&d, &c)| 2 * c == d)
    }

    /// Drops the I/II label, giving the O(2n)-orbit datum.
    pub fn without_label(&self) -> OrbitSymbol {
        OrbitSymbol { label: None, ..self.clone() }
    }

    /// Every valid symbol of the given type and rank, in a fixed order.
    pub fn enumerate(ty: LieType, n: u32) -> Vec<OrbitSymbol> {
        let mut out = Vec::new();
        let ms: Vec<u32> = match ty {
            LieType::B => (0..=n).rev().collect(),
            _ => vec![0],
        };
        for m in ms {
            for half in Partition::all(n - m) {
                let lambda: Vec<u32> = half.parts().iter().flat_map(|&p| [p, p]).collect();
                let lambda = Partition::new(lambda).expect("doubling keeps order");
                let distinct = lambda.distinct_parts();
                let mut chi = Vec::new();
                assign_chi(ty, m, &distinct, &mut chi, &mut |vals| {
                    let chi: BTreeMap<u32, u32> =
                        distinct.iter().copied().zip(vals.iter().copied()).collect();
                    let base = OrbitSymbol { ty, n, m, lambda: lambda.clone(), chi, label: None };
                    if base.is_degenerate_d() {
                        for l in [SplitLabel::I, SplitLabel::II] {
                            out.push(OrbitSymbol { label: Some(l), ..base.clone() });
                        }
                    } else {
                        out.push(base);
                    }
                });
            }
        }
        debug_assert!(out.iter().all(OrbitSymbol::is_valid));
        out
    }

    /// `dim Z_G(ξ)`; there is no formula for type D.
    pub fn centralizer_dim(&self) -> Result<u32> {
        let shift = match self.ty {
            LieType::C => 0,
            LieType::B => 1,
            LieType::D => return Err(Error::UnsupportedType('D')),
        };
        let mut total = self.m as i64;
        for (i, &p) in self.lambda.parts().iter().enumerate() {
            total += (i as i64 + 1 + shift) * p as i64 - self.chi(p) as i64;
        }
        Ok(total as u32)
    }

    /// `dim Z_G(ξ) − rank`, halved.
    pub fn springer_fiber_dim(&self) -> Result<u32> {
        let c = self.centralizer_dim()? as i64;
        let diff = c - self.n as i64;
        if diff < 0 || diff % 2 != 0 {
            return Err(Error::Internal(format!(
                "centralizer dimension {c} of {self} is incompatible with rank {}",
                self.n
            )));
        }
        Ok((diff / 2) as u32)
    }

    /// `dim` of the orbit itself.
    pub fn orbit_dim(&self) -> Result<u32> {
        Ok(self.ty.group_dim(self.n) - self.centralizer_dim()?)
    }

    fn same_algebra(&self, other: &OrbitSymbol) -> Result<()> {
        if self.ty != other.ty || self.n != other.n {
            return Err(Error::RankMismatch(
                format!("{}{}", self.ty.letter(), self.n),
                format!("{}{}", other.ty.letter(), other.n),
            ));
        }
        Ok(())
    }

    /// Closure order: `self ⊆ closure(other)`.
    pub fn closure_leq(&self, other: &OrbitSymbol) -> Result<bool> {
        self.same_algebra(other)?;
        if self == other {
            return Ok(true);
        }
        let (a, b) = (springer::gamma_star(self), springer::gamma_star(other));
        if self.ty == LieType::D {
            if self.without_label() == other.without_label() {
                return Ok(false);
            }
            return a.normalize_d().leq(&b.normalize_d());
        }
        a.leq(&b)
    }

    /// Covering pairs `(lower, upper)` of the closure order.
    pub fn hasse(ty: LieType, n: u32) -> Result<Vec<(OrbitSymbol, OrbitSymbol)>> {
        let orbits = OrbitSymbol::enumerate(ty, n);
        Ok(hasse_indices(&orbits)?
            .into_iter()
            .map(|(a, b)| (orbits[a].clone(), orbits[b].clone()))
            .collect())
    }

    /// Induction from a Levi factor `L × GL(k)` with the zero orbit on `GL(k)`.
    pub fn induce(&self, k: u32) -> Result<OrbitSymbol> {
        if self.ty == LieType::D {
            return Err(Error::UnsupportedType('D'));
        }
        let tau = springer::gamma_star(self).j_induct(k);
        springer::gamma_star_inv(&tau, self.ty, self.n + k)
            .map_err(|e| Error::Internal(format!("induced bipartition {tau} not invertible: {e}")))
    }
}

/// Recursively assigns χ on distinct parts (largest first) under the bounds
/// and monotonicity constraints, calling `emit` once per complete choice.
fn assign_chi(ty: LieType, m: u32, parts: &[u32], cur: &mut Vec<u32>, emit: &mut dyn FnMut(&[u32])) {
    let i = cur.len();
    if i == parts.len() {
        emit(cur);
        return;
    }
    let d = parts[i];
    let mut lo = match ty {
        LieType::C => d / 2,
        _ => d.div_ceil(2),
    };
    let mut hi = d;
    if ty == LieType::B {
        lo = lo.max(d.saturating_sub(m));
    }
    if i > 0 {
        let (pd, pc) = (parts[i - 1], cur[i - 1]);
        hi = hi.min(pc);
        // d − χ ≤ pd − pc
        lo = lo.max(d.saturating_sub(pd - pc));
    }
    for c in (lo..=hi).rev() {
        cur.push(c);
        assign_chi(ty, m, parts, cur, emit);
        cur.pop();
    }
}

/// Transitive reduction of the closure order on `orbits`, as index pairs.
pub fn hasse_indices(orbits: &[OrbitSymbol]) -> Result<Vec<(usize, usize)>> {
    let n = orbits.len();
    let mut lt = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            lt[i][j] = i != j && orbits[i].closure_leq(&orbits[j])?;
        }
    }
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if lt[i][j] && !(0..n).any(|k| lt[i][k] && lt[k][j]) {
                out.push((i, j));
            }
        }
    }
    Ok(out)
}

impl fmt::Display for OrbitSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let chi: Vec<String> = self.chi.iter().rev().map(|(_, c)| c.to_string()).collect();
        let core = format!("({},χ=[{}])", self.lambda, chi.join(","));
        match (self.ty, self.label) {
            (LieType::B, _) => write!(f, "({};{})", self.m, core),
            (_, Some(l)) => write!(f, "{core}{l:?}"),
            _ => write!(f, "{core}"),
        }
    }
}

impl OrbitSymbol {
    /// Canonical one-line JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("symbols always serialize")
    }

    pub fn gamma_star(&self) -> Bipartition {
        springer::gamma_star(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_examples() {
        assert!(OrbitSymbol::c(vec![2, 2], &[2]).is_ok());
        assert!(OrbitSymbol::c(vec![2, 1, 1], &[1, 1]).is_err());
        assert!(OrbitSymbol::b(0, vec![3, 3], &[2]).is_err());
        assert!(OrbitSymbol::b(1, vec![3, 3], &[2]).is_ok());
    }

    #[test]
    fn small_counts() {
        let count = |ty, n| OrbitSymbol::enumerate(ty, n).len();
        assert_eq!(count(LieType::C, 0), 1);
        assert_eq!(count(LieType::C, 1), 2);
        assert_eq!(count(LieType::B, 1), 2);
        assert_eq!(count(LieType::B, 2), 4);
        assert_eq!(count(LieType::B, 3), 8);
        assert_eq!(count(LieType::C, 3), 8);
        let c1 = OrbitSymbol::enumerate(LieType::C, 1);
        assert!(c1.contains(&OrbitSymbol::c(vec![1, 1], &[0]).unwrap()));
        assert!(c1.contains(&OrbitSymbol::c(vec![1, 1], &[1]).unwrap()));
    }

    #[test]
    fn dimensions() {
        let reg = OrbitSymbol::c(vec![2, 2], &[2]).unwrap();
        assert_eq!(reg.centralizer_dim().unwrap(), 2);
        assert_eq!(reg.springer_fiber_dim().unwrap(), 0);
        for n in 0..5 {
            let z = OrbitSymbol::zero(LieType::C, n);
            assert_eq!(z.centralizer_dim().unwrap(), n * (2 * n + 1));
            assert_eq!(z.springer_fiber_dim().unwrap(), n * n);
        }
        let b = OrbitSymbol::b(3, vec![], &[]).unwrap();
        assert_eq!(b.centralizer_dim().unwrap(), 3);
        assert_eq!(b.springer_fiber_dim().unwrap(), 0);
        let d = OrbitSymbol::d(vec![2, 2], &[2], None).unwrap();
        assert_eq!(d.centralizer_dim(), Err(Error::UnsupportedType('D')));
    }

    #[test]
    fn chi_extension() {
        let s = OrbitSymbol::c(vec![2, 2], &[2]).unwrap();
        assert_eq!(s.chi_extend(1), 1);
        assert_eq!(s.chi_extend(0), 0);
        let b = OrbitSymbol::b(1, vec![2, 2], &[1]).unwrap();
        assert_eq!(b.chi_extend(3), 2);
    }

    #[test]
    fn closure_examples() {
        let lo = OrbitSymbol::c(vec![1, 1], &[0]).unwrap();
        let hi = OrbitSymbol::c(vec![1, 1], &[1]).unwrap();
        assert!(lo.closure_leq(&hi).unwrap());
        assert!(!hi.closure_leq(&lo).unwrap());
        let i = OrbitSymbol::d(vec![2, 2], &[1], Some(SplitLabel::I)).unwrap();
        let ii = OrbitSymbol::d(vec![2, 2], &[1], Some(SplitLabel::II)).unwrap();
        assert!(!i.closure_leq(&ii).unwrap() && !ii.closure_leq(&i).unwrap());
        let other = OrbitSymbol::zero(LieType::B, 2);
        assert!(matches!(lo.closure_leq(&other), Err(Error::RankMismatch(..))));
    }

    #[test]
    fn hasse_examples() {
        let h1 = OrbitSymbol::hasse(LieType::C, 1).unwrap();
        assert_eq!(h1.len(), 1);
        assert!(h1[0].0.is_zero());
        assert!(OrbitSymbol::hasse(LieType::C, 0).unwrap().is_empty());
        // B2 is a chain of four orbits: three covering edges.
        assert_eq!(OrbitSymbol::hasse(LieType::B, 2).unwrap().len(), 3);
    }

    #[test]
    fn json_shape() {
        let s = OrbitSymbol::c(vec![2, 2], &[2]).unwrap();
        assert_eq!(s.to_json(), r#"{"type":"C","n":2,"lambda":[2,2],"chi":{"2":2}}"#);
        let b = OrbitSymbol::b(1, vec![2, 2], &[2]).unwrap();
        assert_eq!(b.to_json(), r#"{"type":"B","n":3,"m":1,"lambda":[2,2],"chi":{"2":2}}"#);
        let back: OrbitSymbol = serde_json::from_str(&b.to_json()).unwrap();
        assert_eq!(back, b);
        assert!(serde_json::from_str::<OrbitSymbol>(r#"{"type":"C","n":2,"lambda":[2,1,1],"chi":{"2":1,"1":1}}"#).is_err());
    }

    #[test]
    fn induction_examples() {
        let e = OrbitSymbol::zero(LieType::C, 0);
        let up = e.induce(2).unwrap();
        assert_eq!(up.gamma_star(), Bipartition::from_parts(vec![1], vec![1]).unwrap());
        assert_eq!(up, OrbitSymbol::c(vec![2, 2], &[1]).unwrap());
        let z = OrbitSymbol::zero(LieType::B, 1);
        let up = z.induce(1).unwrap();
        assert_eq!(up.gamma_star(), Bipartition::from_parts(vec![1], vec![1]).unwrap());
    }
}
