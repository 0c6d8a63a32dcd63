//! Small finite fields `F_q`, `q = p^k`, as addition and multiplication tables.
//!
//! An element is the integer `Σ c_i p^i` for the polynomial `Σ c_i x^i`
//! modulo a fixed irreducible polynomial, so the prime field sits at `0..p`.

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Gf {
    pub q: u32,
    pub p: u32,
    add: Vec<u8>,
    mul: Vec<u8>,
}

fn smallest_prime_factor(q: u32) -> u32 {
    (2..=q).find(|d| q.is_multiple_of(*d)).unwrap_or(q)
}

fn digits(x: u32, p: u32, k: usize) -> Vec<u32> {
    (0..k).map(|i| x / p.pow(i as u32) % p).collect()
}

fn undigits(c: &[u32], p: u32) -> u32 {
    c.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Remainder of `a` by the monic polynomial `f` over `F_p` (coefficients low first).
fn poly_rem(a: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    let mut a = a.to_vec();
    let k = f.len() - 1;
    while a.len() > k {
        let lead = a.pop().unwrap();
        if lead != 0 {
            let shift = a.len() - k;
            for (i, &fc) in f[..k].iter().enumerate() {
                a[shift + i] = (a[shift + i] + (p - lead) * fc % p) % p;
            }
        }
    }
    a.resize(k, 0);
    a
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let k = f.len() - 1;
    for d in 1..=k / 2 {
        for low in 0..p.pow(d as u32) {
            let mut g = digits(low, p, d);
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl Gf {
    pub fn new(q: u32) -> Result<Self> {
        if !(2..=64).contains(&q) {
            return Err(Error::Domain(format!("field size {q} not supported")));
        }
        let p = smallest_prime_factor(q);
        let mut k = 0;
        let mut r = q;
        while r.is_multiple_of(p) {
            r /= p;
            k += 1;
        }
        if r != 1 {
            return Err(Error::Domain(format!("{q} is not a prime power")));
        }
        let f = if k == 1 {
            vec![0, 1]
        } else {
            (0..q)
                .map(|low| {
                    let mut f = digits(low, p, k);
                    f.push(1);
                    f
                })
                .find(|f| is_irreducible(f, p))
                .expect("irreducible polynomials exist in every degree")
        };
        let n = q as usize;
        let mut add = vec![0u8; n * n];
        let mut mul = vec![0u8; n * n];
        for a in 0..q {
            let da = digits(a, p, k);
            for b in 0..q {
                let db = digits(b, p, k);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = undigits(&s, p) as u8;
                let m = if k == 1 { vec![a * b % p] } else { poly_rem(&poly_mul(&da, &db, p), &f, p) };
                mul[(a * q + b) as usize] = undigits(&m, p) as u8;
            }
        }
        Ok(Gf { q, p, add, mul })
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        (0..self.q as u8).find(|&b| self.add(a, b) == 0).unwrap()
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: u8, e: u32) -> u8 {
        (0..e).fold(1, |acc, _| self.mul(acc, a))
    }

    /// The image of an integer.
    pub fn from_int(&self, k: i64) -> u8 {
        k.rem_euclid(self.p as i64) as u8
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.q as u8
    }

    pub fn nonzero(&self) -> impl Iterator<Item = u8> {
        1..self.q as u8
    }

    /// Smallest element outside the image of `f`.
    fn outside(&self, f: impl Fn(u8) -> u8) -> Option<u8> {
        let image: Vec<u8> = self.elements().map(f).collect();
        self.elements().find(|x| !image.contains(x))
    }

    /// `η ∉ {x² + x}`.
    pub fn eta(&self) -> Option<u8> {
        self.outside(|x| self.add(self.mul(x, x), x))
    }

    /// `ζ ∉ {x²}`.
    pub fn zeta(&self) -> Option<u8> {
        self.outside(|x| self.mul(x, x))
    }

    /// `ϖ ∉ {x³ + x}`.
    pub fn varpi(&self) -> Option<u8> {
        self.outside(|x| self.add(self.pow(x, 3), x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_small() {
        for q in [2, 3, 4, 8, 9] {
            let f = Gf::new(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                if a != 0 {
                    assert_eq!(f.nonzero().filter(|&b| f.mul(a, b) == 1).count(), 1, "q={q} a={a}");
                }
                for b in f.elements() {
                    for c in f.elements() {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
        assert!(Gf::new(6).is_err());
    }

    #[test]
    fn parameters() {
        let f2 = Gf::new(2).unwrap();
        assert_eq!(f2.eta(), Some(1));
        let f3 = Gf::new(3).unwrap();
        assert_eq!(f3.zeta(), Some(2));
        assert_eq!(f3.varpi(), None);
        let f4 = Gf::new(4).unwrap();
        assert!(f4.eta().is_some());
    }
}
