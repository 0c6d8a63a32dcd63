//! Springer maps from orbit symbols to bipartitions, the hull map Φ onto the
//! image of the complex Springer correspondence, and the piece map Ψ* to
//! complex unipotent classes.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{ensure, Error, Result};
use crate::orbits::{LieType, OrbitSymbol, SplitLabel};
use crate::partitions::{Bipartition, Family, Partition};

/// A unipotent class of the complex group `Sp(2n)` or `SO(2n+1)`, by Jordan type.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct UnipotentClass {
    #[serde(rename = "type")]
    pub ty: LieType,
    pub parts: Partition,
}

impl UnipotentClass {
    pub fn new(ty: LieType, parts: Partition) -> Result<Self> {
        let c = UnipotentClass { ty, parts };
        c.check()?;
        Ok(c)
    }

    /// Type C: odd parts have even multiplicity. Type B: even parts do, and the size is odd.
    pub fn check(&self) -> Result<()> {
        let bad_parity = match self.ty {
            LieType::C => 1,
            LieType::B => 0,
            LieType::D => return Err(Error::UnsupportedType('D')),
        };
        if self.ty == LieType::B && self.parts.size().is_multiple_of(2) {
            return Err(Error::InvalidSymbol(format!("{} has even size", self.parts)));
        }
        if self.ty == LieType::C && self.parts.size() % 2 == 1 {
            return Err(Error::InvalidSymbol(format!("{} has odd size", self.parts)));
        }
        for d in self.parts.distinct_parts() {
            if d % 2 == bad_parity && self.parts.multiplicity(d) % 2 == 1 {
                return Err(Error::InvalidSymbol(format!(
                    "part {d} of {} needs even multiplicity",
                    self.parts
                )));
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> u32 {
        self.parts.size() / 2
    }

    /// All classes of the given rank, reverse-lexicographic.
    pub fn enumerate(ty: LieType, n: u32) -> Vec<UnipotentClass> {
        let size = ty.natural_dim(n);
        Partition::all(size)
            .into_iter()
            .map(|parts| UnipotentClass { ty, parts })
            .filter(|c| c.check().is_ok())
            .collect()
    }
}

impl fmt::Display for UnipotentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parts)
    }
}

fn image_family(ty: LieType) -> Result<(Family, Family)> {
    match ty {
        LieType::B => Ok((Family::XB2, Family::XB1)),
        LieType::C => Ok((Family::XC2, Family::XC1)),
        LieType::D => Err(Error::UnsupportedType('D')),
    }
}

/// γ*: orbit symbol to bipartition.
pub fn gamma_star(s: &OrbitSymbol) -> Bipartition {
    let odd: Vec<u32> = s.lambda.parts().iter().copied().step_by(2).collect();
    let (mut mu, mut nu) = (Vec::new(), Vec::new());
    if s.ty == LieType::B {
        mu.push(s.m);
        for &p in &odd {
            mu.push(p - s.chi(p));
            nu.push(s.chi(p));
        }
    } else {
        for &p in &odd {
            mu.push(s.chi(p));
            nu.push(p - s.chi(p));
        }
    }
    Bipartition::from_parts(mu, nu).expect("valid symbols give partitions")
}

/// The symbols mapping to `tau` (one, or two labelled ones in the split type-D case).
pub fn gamma_star_preimages(tau: &Bipartition, ty: LieType, n: u32) -> Result<Vec<OrbitSymbol>> {
    let not_in = || Error::NotInImage(format!("{tau} for {}{n}", ty.letter()));
    if tau.total() != n {
        return Err(not_in());
    }
    let mut lambda = Vec::new();
    let mut chi = BTreeMap::new();
    let mut put = |part: u32, c: u32, lambda: &mut Vec<u32>| -> bool {
        if part == 0 {
            return c == 0;
        }
        lambda.extend([part, part]);
        *chi.entry(part).or_insert(c) == c
    };
    let m;
    let len = tau.mu.len().max(tau.nu.len()) + 1;
    if ty == LieType::B {
        m = tau.mu.part(1);
        for i in 1..=len {
            let (hi, lo) = (tau.mu.part(i + 1), tau.nu.part(i));
            if !put(hi + lo, lo, &mut lambda) {
                return Err(not_in());
            }
        }
    } else {
        m = 0;
        for i in 1..=len {
            let (a, b) = (tau.mu.part(i), tau.nu.part(i));
            if !put(a + b, a, &mut lambda) {
                return Err(not_in());
            }
        }
    }
    let lambda = Partition::new(lambda).map_err(|_| not_in())?;
    let base = OrbitSymbol { ty, n, m, lambda, chi, label: None };
    let out = if base.is_degenerate_d() {
        [SplitLabel::I, SplitLabel::II]
            .into_iter()
            .map(|l| OrbitSymbol { label: Some(l), ..base.clone() })
            .collect()
    } else {
        vec![base]
    };
    for s in &out {
        s.check().map_err(|_| not_in())?;
    }
    Ok(out)
}

/// Inverse of γ*. In the split type-D case the label-I symbol is returned.
pub fn gamma_star_inv(tau: &Bipartition, ty: LieType, n: u32) -> Result<OrbitSymbol> {
    Ok(gamma_star_preimages(tau, ty, n)?.remove(0))
}

/// Φ: the smallest member of the complex Springer image above `tau`.
pub fn phi(tau: &Bipartition, ty: LieType) -> Result<Bipartition> {
    let (domain, _) = image_family(ty)?;
    if !tau.in_family(domain) {
        return Err(Error::Domain(format!("{tau} is not in {domain:?}")));
    }
    let len = tau.mu.len().max(tau.nu.len()) + 1;
    let (mut mu, mut nu) = (Vec::new(), Vec::new());
    match ty {
        LieType::B => {
            for i in 1..=len {
                let (m, v) = (tau.mu.part(i), tau.nu.part(i));
                if v > m + 2 {
                    mu.push((m + v - 1) / 2);
                    nu.push((m + v + 2) / 2);
                } else {
                    mu.push(m);
                    nu.push(v);
                }
            }
        }
        _ => {
            mu.push(tau.mu.part(1));
            for i in 1..=len {
                let (m, v) = (tau.mu.part(i + 1), tau.nu.part(i));
                if v + 1 < m {
                    mu.push((m + v).div_ceil(2));
                    nu.push((m + v) / 2);
                } else {
                    mu.push(m);
                    nu.push(v);
                }
            }
        }
    }
    let out = Bipartition::from_parts(mu, nu)
        .map_err(|e| Error::Internal(format!("Φ({tau}) is not a bipartition: {e}")))?;
    ensure!(out.in_family(image_family(ty)?.1), "Φ({tau}) = {out} misses the image family");
    Ok(out)
}

/// Ψ*: the complex unipotent class indexing the piece containing `s`.
pub fn psi_star(s: &OrbitSymbol) -> Result<UnipotentClass> {
    let lam = |i: usize| s.lambda.part(i) as i64;
    // χ on λ_i, with χ(0) = 0.
    let chi = |i: usize| {
        let p = s.lambda.part(i);
        if p == 0 {
            0
        } else {
            s.chi(p) as i64
        }
    };
    let len = s.lambda.len() + 3;
    let mut out: Vec<i64> = Vec::new();
    match s.ty {
        LieType::C => {
            // 1-based; index 0 unused.
            let mut t: Vec<i64> = (0..=len).map(lam).collect();
            if 2 * chi(1) > lam(1) {
                t[1] = 2 * chi(1);
            }
            let mut i = 1;
            while 2 * i < len {
                let (a, b) = (2 * i, 2 * i + 1);
                let c = chi(a) - lam(a) + chi(b);
                if 2 * chi(a) > lam(a) && chi(a) > chi(b) {
                    t[a] = if c >= 1 { lam(a) - chi(a) + chi(b) } else { 2 * (lam(a) - chi(a)) };
                }
                if 2 * chi(b) > lam(b) && lam(b) - chi(b) < lam(a) - chi(a) {
                    t[b] = if c >= 1 { lam(a) - chi(a) + chi(b) } else { 2 * chi(b) };
                }
                i += 1;
            }
            out.extend(&t[1..]);
        }
        LieType::B => {
            let m = s.m as i64;
            let mut t = vec![0i64; len + 3];
            let (l1, c1) = (lam(1), chi(1));
            t[1] = if c1 >= m + 2 { m + c1 } else { 2 * m + 1 };
            t[2] = if c1 >= m + 2 {
                m + c1
            } else if (l1 + 1) / 2 < c1 {
                2 * c1 - 1
            } else {
                l1
            };
            let mut i = 1;
            while 2 * i + 2 < t.len() {
                let (a, b) = (2 * i, 2 * i + 1);
                let c = chi(a) - lam(a) + chi(b);
                t[a + 1] = if 2 * chi(a) > lam(a) && chi(a) > chi(b) {
                    if c >= 2 { lam(a) - chi(a) + chi(b) } else { 2 * (lam(a) - chi(a)) + 1 }
                } else {
                    lam(a)
                };
                t[b + 1] = if 2 * chi(b) > lam(b) && lam(b) - chi(b) < lam(a) - chi(a) {
                    if c >= 2 { lam(a) - chi(a) + chi(b) } else { 2 * chi(b) - 1 }
                } else {
                    lam(b)
                };
                i += 1;
            }
            out.extend(&t[1..]);
        }
        LieType::D => return Err(Error::UnsupportedType('D')),
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    ensure!(
        out.windows(2).all(|w| w[0] >= w[1]) && out.iter().all(|&x| x > 0),
        "Ψ*({s}) produced a non-partition {out:?}"
    );
    let parts = Partition::new(out.into_iter().map(|x| x as u32).collect())?;
    let class = UnipotentClass { ty: s.ty, parts };
    class
        .check()
        .map_err(|e| Error::Internal(format!("Ψ*({s}) = {class} is not a unipotent class: {e}")))?;
    ensure!(class.rank() == s.n, "Ψ*({s}) = {class} has the wrong rank");
    Ok(class)
}

/// The complex Springer correspondence, inverted: a member of the image family
/// to the unipotent class it comes from.
pub fn unip_from_symbol(tau: &Bipartition, ty: LieType) -> Result<UnipotentClass> {
    let (_, family) = image_family(ty)?;
    if !tau.in_family(family) {
        return Err(Error::Domain(format!("{tau} is not in {family:?}")));
    }
    const INF: i64 = i64::MAX / 4;
    let mu = |i: usize| tau.mu.part(i) as i64;
    let nu = |i: usize| if i == 0 { INF } else { tau.nu.part(i) as i64 };
    let len = tau.mu.len().max(tau.nu.len()) + 1;
    let mut out = Vec::new();
    for i in 1..=len {
        let (odd, even) = match ty {
            LieType::B => {
                let odd = if mu(i) + 2 <= nu(i) {
                    mu(i) + nu(i)
                } else if mu(i) < nu(i - 1) {
                    2 * mu(i) + 1
                } else {
                    2 * mu(i)
                };
                let even = if nu(i) >= mu(i) + 2 {
                    mu(i) + nu(i)
                } else if mu(i + 1) < nu(i) {
                    2 * nu(i) - 1
                } else {
                    2 * nu(i)
                };
                (odd, even)
            }
            _ => {
                let odd = if mu(i) > nu(i - 1) {
                    mu(i) + nu(i - 1)
                } else if nu(i) <= mu(i) {
                    2 * mu(i)
                } else {
                    2 * mu(i) + 1
                };
                let even = if nu(i) < mu(i + 1) {
                    mu(i + 1) + nu(i)
                } else if nu(i) <= mu(i) {
                    2 * nu(i)
                } else {
                    2 * nu(i) - 1
                };
                (odd, even)
            }
        };
        out.push(odd);
        out.push(even);
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    ensure!(
        out.windows(2).all(|w| w[0] >= w[1]) && out.iter().all(|&x| x > 0),
        "class built from {tau} is not a partition: {out:?}"
    );
    let parts = Partition::new(out.into_iter().map(|x| x as u32).collect())?;
    let class = UnipotentClass { ty, parts };
    class.check().map_err(|e| Error::Internal(format!("{tau} gives {class}: {e}")))?;
    Ok(class)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(mu: &[u32], nu: &[u32]) -> Bipartition {
        Bipartition::from_parts(mu.to_vec(), nu.to_vec()).unwrap()
    }

    fn parts(c: &UnipotentClass) -> Vec<u32> {
        c.parts.parts().to_vec()
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_star(&OrbitSymbol::c(vec![2, 2], &[1]).unwrap()), bp(&[1], &[1]));
        for n in 1..5 {
            assert_eq!(gamma_star(&OrbitSymbol::zero(LieType::C, n)), bp(&[], &vec![1; n as usize]));
            assert_eq!(gamma_star(&OrbitSymbol::zero(LieType::B, n)), bp(&[], &vec![1; n as usize]));
        }
        assert_eq!(gamma_star(&OrbitSymbol::b(3, vec![], &[]).unwrap()), bp(&[3], &[]));
    }

    #[test]
    fn gamma_inverse_examples() {
        let s = gamma_star_inv(&bp(&[1], &[1]), LieType::C, 2).unwrap();
        assert_eq!(s, OrbitSymbol::c(vec![2, 2], &[1]).unwrap());
        assert_eq!(gamma_star_inv(&bp(&[], &[]), LieType::C, 0).unwrap(), OrbitSymbol::zero(LieType::C, 0));
        let b = gamma_star_inv(&bp(&[1], &[2]), LieType::B, 3).unwrap();
        assert_eq!(gamma_star(&b), bp(&[1], &[2]));
        assert!(matches!(gamma_star_inv(&bp(&[1], &[3]), LieType::C, 4), Err(Error::NotInImage(_))));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&bp(&[1], &[4]), LieType::B).unwrap(), bp(&[2], &[3]));
        assert_eq!(phi(&bp(&[3, 3], &[]), LieType::C).unwrap(), bp(&[3, 2], &[1]));
        assert_eq!(phi(&bp(&[2], &[1]), LieType::C).unwrap(), bp(&[2], &[1]));
        assert!(matches!(phi(&bp(&[], &[2]), LieType::C), Err(Error::Domain(_))));
    }

    #[test]
    fn psi_examples() {
        let c = psi_star(&OrbitSymbol::c(vec![2, 2], &[2]).unwrap()).unwrap();
        assert_eq!(parts(&c), vec![4]);
        let b = psi_star(&OrbitSymbol::b(1, vec![2, 2], &[2]).unwrap()).unwrap();
        assert_eq!(parts(&b), vec![3, 3, 1]);
        let b = psi_star(&OrbitSymbol::b(0, vec![3, 3], &[3]).unwrap()).unwrap();
        assert_eq!(parts(&b), vec![3, 3, 1]);
        let reg = psi_star(&OrbitSymbol::b(2, vec![], &[]).unwrap()).unwrap();
        assert_eq!(parts(&reg), vec![5]);
    }

    #[test]
    fn unip_examples() {
        assert_eq!(parts(&unip_from_symbol(&bp(&[2], &[]), LieType::C).unwrap()), vec![4]);
        for n in 1..5 {
            let z = unip_from_symbol(&bp(&[], &vec![1; n]), LieType::C).unwrap();
            assert_eq!(parts(&z), vec![1; 2 * n]);
        }
        let b = unip_from_symbol(&bp(&[1], &[1, 1]), LieType::B).unwrap();
        assert_eq!(b.parts.size(), 7);
    }

    #[test]
    fn unipotent_enumeration() {
        let c2: Vec<Vec<u32>> = UnipotentClass::enumerate(LieType::C, 2).iter().map(parts).collect();
        assert_eq!(c2, vec![vec![4], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
        let b1: Vec<Vec<u32>> = UnipotentClass::enumerate(LieType::B, 1).iter().map(parts).collect();
        assert_eq!(b1, vec![vec![3], vec![1, 1, 1]]);
        assert_eq!(UnipotentClass::enumerate(LieType::C, 0).len(), 1);
        assert_eq!(UnipotentClass::enumerate(LieType::B, 3).len(), 7);
    }
}
