//! Orbit enumeration on packed coadjoint states.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use super::coadjoint::{coadjoint_generator, dual_index, mat_vec, FqMatrix};
use super::field::Gf;
use super::lie::ChevalleyAlgebra;
use crate::error::{Error, Result};

/// The generators `x_{±α_i}(c)`, `c ≠ 0`, acting on states packed base q.
pub struct CoadjointAction {
    pub gf: Gf,
    pub dim: usize,
    gens: Vec<FqMatrix>,
    /// For q = 2: per generator, per byte of the state, the image of that byte.
    byte_tables: Option<Vec<Vec<[u64; 256]>>>,
}

impl CoadjointAction {
    pub fn new(alg: &ChevalleyAlgebra, q: u32) -> Result<Self> {
        let gf = Gf::new(q)?;
        let dim = alg.dim();
        if (dim as f64) * f64::from(q).log2() > 63.0 {
            return Err(Error::Domain(format!("states of {} over F_{q} do not fit in a word", alg.group())));
        }
        let mut gens = Vec::new();
        for i in 0..alg.rank() {
            for root in [i, alg.rs.neg(i)] {
                for c in gf.nonzero() {
                    gens.push(coadjoint_generator(alg, &gf, root, c)?);
                }
            }
        }
        let byte_tables = (q == 2).then(|| {
            gens.iter()
                .map(|g| {
                    (0..dim.div_ceil(8))
                        .map(|chunk| {
                            let mut t = [0u64; 256];
                            for (byte, slot) in t.iter_mut().enumerate() {
                                let mut v = vec![0u8; dim];
                                for b in 0..8 {
                                    let j = chunk * 8 + b;
                                    if j < dim && byte >> b & 1 == 1 {
                                        v[j] = 1;
                                    }
                                }
                                *slot = pack_digits(&mat_vec(&gf, g, &v), 2);
                            }
                            t
                        })
                        .collect()
                })
                .collect()
        });
        Ok(CoadjointAction { gf, dim, gens, byte_tables })
    }

    pub fn q(&self) -> u32 {
        self.gf.q
    }

    pub fn generator_count(&self) -> usize {
        self.gens.len()
    }

    pub fn pack(&self, v: &[u8]) -> u64 {
        pack_digits(v, self.gf.q)
    }

    pub fn unpack(&self, s: u64) -> Vec<u8> {
        let q = u64::from(self.gf.q);
        let mut s = s;
        (0..self.dim)
            .map(|_| {
                let d = (s % q) as u8;
                s /= q;
                d
            })
            .collect()
    }

    pub fn apply(&self, g: usize, s: u64) -> u64 {
        match &self.byte_tables {
            Some(tables) => tables[g].iter().enumerate().fold(0, |acc, (k, t)| acc ^ t[(s >> (8 * k) & 0xff) as usize]),
            None => self.pack(&mat_vec(&self.gf, &self.gens[g], &self.unpack(s))),
        }
    }

    /// `q^dim`, when it fits comfortably in a bitmap.
    fn dense_size(&self) -> Option<u64> {
        let total = u64::from(self.gf.q).checked_pow(self.dim as u32)?;
        (total <= 1 << 32).then_some(total)
    }

    pub fn visited_set(&self) -> Visited {
        match self.dense_size() {
            Some(n) => Visited::Bitmap(vec![0; n.div_ceil(64) as usize]),
            None => Visited::Hash(HashSet::new()),
        }
    }
}

fn pack_digits(v: &[u8], q: u32) -> u64 {
    v.iter().rev().fold(0u64, |acc, &d| acc * u64::from(q) + u64::from(d))
}

pub enum Visited {
    Bitmap(Vec<u64>),
    Hash(HashSet<u64>),
}

impl Visited {
    /// Inserts `s`; true when it was new.
    pub fn insert(&mut self, s: u64) -> bool {
        match self {
            Visited::Bitmap(b) => {
                let (w, bit) = ((s / 64) as usize, s % 64);
                let new = b[w] >> bit & 1 == 0;
                b[w] |= 1 << bit;
                new
            }
            Visited::Hash(h) => h.insert(s),
        }
    }

    pub fn contains(&self, s: u64) -> bool {
        match self {
            Visited::Bitmap(b) => b[(s / 64) as usize] >> (s % 64) & 1 == 1,
            Visited::Hash(h) => h.contains(&s),
        }
    }

    pub fn reserve(&mut self, n: usize) {
        if let Visited::Hash(h) = self {
            h.reserve(n);
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BfsResult {
    pub size: u64,
    /// False when the cap stopped the search early.
    pub complete: bool,
}

/// Breadth-first search from `start`, marking states in `visited`.
pub fn orbit_bfs_into(action: &CoadjointAction, start: u64, cap: u64, visited: &mut Visited) -> BfsResult {
    if !visited.insert(start) {
        return BfsResult { size: 0, complete: true };
    }
    let mut frontier = vec![start];
    let mut size = 1u64;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &s in &frontier {
            for g in 0..action.generator_count() {
                let t = action.apply(g, s);
                if visited.insert(t) {
                    size += 1;
                    if size > cap {
                        return BfsResult { size, complete: false };
                    }
                    next.push(t);
                }
            }
        }
        frontier = next;
    }
    BfsResult { size, complete: true }
}

/// Size of the orbit of `start`, giving up past `cap` states.
pub fn orbit_bfs(action: &CoadjointAction, start: &[u8], cap: u64, expected: Option<u64>) -> BfsResult {
    let mut visited = action.visited_set();
    if let Some(n) = expected {
        visited.reserve(n.min(cap) as usize);
    }
    orbit_bfs_into(action, action.pack(start), cap, &mut visited)
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusOrbit {
    pub size: u64,
    /// First seed (in packed order) that reached this orbit.
    pub seed: Vec<u8>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Census {
    pub q: u32,
    pub orbits: Vec<CensusOrbit>,
    pub total: u64,
}

impl Census {
    /// `{orbit_size: multiplicity}`.
    pub fn histogram(&self) -> BTreeMap<u64, u64> {
        let mut h = BTreeMap::new();
        for o in &self.orbits {
            *h.entry(o.size).or_insert(0) += 1;
        }
        h
    }
}

/// Every orbit meeting the span of the positive-root duals, found by seeding a
/// BFS from each such vector not yet visited.
pub fn nilpotent_sweep(alg: &ChevalleyAlgebra, q: u32, cap: u64) -> Result<Census> {
    let action = CoadjointAction::new(alg, q)?;
    let mut visited = action.visited_set();
    let npos = alg.rs.n_pos;
    let coords: Vec<usize> = (0..npos).map(|b| dual_index(alg, b)).collect();
    let seeds = u64::from(q).checked_pow(npos as u32).ok_or_else(|| Error::Domain("too many seeds".into()))?;
    let mut orbits = Vec::new();
    let mut total = 0;
    for k in 0..seeds {
        let mut v = vec![0u8; alg.dim()];
        let mut r = k;
        for &c in &coords {
            v[c] = (r % u64::from(q)) as u8;
            r /= u64::from(q);
        }
        let s = action.pack(&v);
        if visited.contains(s) {
            continue;
        }
        let res = orbit_bfs_into(&action, s, cap.saturating_sub(total), &mut visited);
        if !res.complete {
            return Err(Error::Domain(format!("sweep exceeded the cap of {cap} states")));
        }
        total += res.size;
        orbits.push(CensusOrbit { size: res.size, seed: v });
    }
    Ok(Census { q, orbits, total })
}

/// The G2 census over `F_3`.
pub fn nilpotent_sweep_g2(q: u32) -> Result<Census> {
    let alg = ChevalleyAlgebra::build(super::roots::Group::G2)?;
    nilpotent_sweep(&alg, q, 1 << 26)
}

#[derive(Clone, Debug, Serialize)]
pub struct RepOrbit {
    pub name: String,
    pub size: u64,
    pub expected: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct DisjointnessReport {
    pub q: u32,
    pub orbits: Vec<RepOrbit>,
    /// Rows whose representatives are the same vector over `F_q`.
    pub coincident: Vec<(String, String)>,
    /// Rows whose parameters do not exist over `F_q`.
    pub unavailable: Vec<String>,
    /// Pairs of distinct representatives found in one orbit.
    pub overlaps: Vec<(String, String)>,
}

impl DisjointnessReport {
    pub fn disjoint(&self) -> bool {
        self.overlaps.is_empty()
    }
}

/// BFS from each named table representative and check that no orbit contains
/// another representative. One visited set is alive at a time.
pub fn rep_orbits_disjoint(alg: &ChevalleyAlgebra, q: u32, names: &[&str], cap: u64) -> Result<DisjointnessReport> {
    let action = CoadjointAction::new(alg, q)?;
    let rows = super::tables::table(alg.group())?;
    let zero = rows.iter().find(|r| r.rep.is_empty()).ok_or_else(|| Error::Internal("no zero row".into()))?;
    let mut reps: Vec<(String, u64, u64)> = Vec::new();
    let mut report = DisjointnessReport { q, orbits: vec![], coincident: vec![], unavailable: vec![], overlaps: vec![] };
    for &n in names {
        let row = super::tables::row(alg.group(), n)?;
        let v = match super::coadjoint::materialize_rep(alg, &row, &action.gf) {
            Ok(v) => v,
            Err(Error::ParameterUnavailable(..)) => {
                report.unavailable.push(row.name);
                continue;
            }
            Err(e) => return Err(e),
        };
        let s = action.pack(&v);
        if let Some((first, ..)) = reps.iter().find(|r| r.1 == s) {
            report.coincident.push((first.clone(), row.name));
            continue;
        }
        let expected = zero
            .centralizer
            .div_exact(&row.centralizer)?
            .eval_u64(i64::from(q))
            .ok_or_else(|| Error::Internal(format!("|G|/|Z| of {} is not a word at q={q}", row.name)))?;
        reps.push((row.name, s, expected));
    }
    for (i, (name, s, expected)) in reps.iter().enumerate() {
        let mut visited = action.visited_set();
        visited.reserve((*expected).min(cap) as usize);
        let res = orbit_bfs_into(&action, *s, cap, &mut visited);
        if !res.complete {
            return Err(Error::Domain(format!("orbit of {name} exceeds the cap of {cap} states")));
        }
        report.orbits.push(RepOrbit { name: name.clone(), size: res.size, expected: *expected });
        for (other, t, _) in reps.iter().skip(i + 1) {
            if visited.contains(*t) {
                report.overlaps.push((name.clone(), other.clone()));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::coadjoint::{check_additivity, check_formula_a, materialize_rep};
    use crate::chevalley::roots::Group;
    use crate::chevalley::tables::row;

    #[test]
    fn coadjoint_closed_form() {
        for (g, qs) in [(Group::G2, &[2u32, 3, 4, 9][..]), (Group::F4, &[2, 3, 4][..])] {
            let alg = ChevalleyAlgebra::build(g).unwrap();
            for &q in qs {
                let gf = Gf::new(q).unwrap();
                assert!(check_formula_a(&alg, &gf).unwrap() > 0);
                check_additivity(&alg, &gf).unwrap();
            }
        }
    }

    #[test]
    fn g2_census() {
        let c = nilpotent_sweep_g2(3).unwrap();
        let sizes: Vec<u64> = c.histogram().into_keys().collect();
        assert_eq!(sizes, vec![1, 728, 6552, 8736, 17472, 26208, 471744]);
        assert!(c.histogram().values().all(|&m| m == 1));
        assert_eq!(c.total, 3u64.pow(12));
    }

    #[test]
    fn f4_small_orbit() {
        let alg = ChevalleyAlgebra::build(Group::F4).unwrap();
        let act = CoadjointAction::new(&alg, 2).unwrap();
        let v = materialize_rep(&alg, &row(Group::F4, "17").unwrap(), &act.gf).unwrap();
        assert_eq!(orbit_bfs(&act, &v, 1 << 20, None), BfsResult { size: 69615, complete: true });
        assert!(!orbit_bfs(&act, &v, 1000, None).complete);
    }

    #[test]
    fn g2_reps_at_three() {
        let alg = ChevalleyAlgebra::build(Group::G2).unwrap();
        let r = rep_orbits_disjoint(&alg, 3, &["1", "2,1", "2,2", "2,3", "3", "4", "5"], 1 << 24).unwrap();
        assert!(r.disjoint());
        assert_eq!(r.unavailable, vec!["xi_2,2".to_string()]);
        // −ζ = 1 over F_3, so the two rows give the same vector.
        assert_eq!(r.coincident, vec![("xi_2,1".to_string(), "xi_2,3".to_string())]);
        let sizes: Vec<u64> = r.orbits.iter().map(|o| o.size).collect();
        assert_eq!(sizes, vec![471744, 26208, 6552, 728, 1]);
        // That shared vector sits in the 2q^4 class; e'_b - e'_2ab gives the 6q^4 one.
        let act = CoadjointAction::new(&alg, 3).unwrap();
        let mut v = vec![0u8; 14];
        v[dual_index(&alg, alg.rs.parse("b").unwrap())] = 1;
        v[dual_index(&alg, alg.rs.parse("2ab").unwrap())] = 2;
        assert_eq!(orbit_bfs(&act, &v, 1 << 20, None).size, 8736);
    }
}
