//! Polynomials in `q` with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Coefficients low degree first; no trailing zeros, so zero is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QPoly(Vec<BigRational>);

impl QPoly {
    pub fn new(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        QPoly(c)
    }

    pub fn zero() -> Self {
        QPoly(Vec::new())
    }

    pub fn constant(c: i64) -> Self {
        QPoly::new(vec![BigRational::from_integer(c.into())])
    }

    /// `c q^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut v = vec![BigRational::zero(); k + 1];
        v[k] = BigRational::from_integer(c.into());
        QPoly::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(QPoly::constant(1), |acc, _| &acc * self)
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &QPoly) -> Result<(QPoly, QPoly)> {
        let dd = d.degree().ok_or_else(|| Error::Domain("division by the zero polynomial".into()))?;
        let lead = d.0[dd].clone();
        let mut r = self.0.clone();
        let mut quot = vec![BigRational::zero(); r.len().saturating_sub(dd).max(1)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = r.last().unwrap() / &lead;
            for (i, dc) in d.0.iter().enumerate() {
                r[k + i] = &r[k + i] - &c * dc;
            }
            quot[k] = c;
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Ok((QPoly::new(quot), QPoly::new(r)))
    }

    /// `self / d` when the division is exact.
    pub fn div_exact(&self, d: &QPoly) -> Result<QPoly> {
        let (quot, rem) = self.div_rem(d)?;
        if !rem.is_zero() {
            return Err(Error::Domain(format!("{d} does not divide {self}")));
        }
        Ok(quot)
    }

    pub fn eval(&self, q: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * q + c)
    }

    /// Value at an integer, when that value is an integer.
    pub fn eval_int(&self, q: i64) -> Option<BigInt> {
        let v = self.eval(&BigRational::from_integer(q.into()));
        v.is_integer().then(|| v.to_integer())
    }

    pub fn eval_u64(&self, q: i64) -> Option<u64> {
        self.eval_int(q)?.to_u64()
    }

    /// Parses expressions built from integers, `q`, `+ - *`, `^` with a
    /// nonnegative integer exponent, and parentheses.
    pub fn parse(s: &str) -> Result<QPoly> {
        let toks: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser { toks: &toks, at: 0, src: s };
        let out = p.expr()?;
        if p.at != toks.len() {
            return Err(p.err());
        }
        Ok(out)
    }
}

struct Parser<'a> {
    toks: &'a [char],
    at: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn err(&self) -> Error {
        Error::Domain(format!("cannot parse polynomial {:?} at position {}", self.src, self.at))
    }

    fn peek(&self) -> Option<char> {
        self.toks.get(self.at).copied()
    }

    fn expr(&mut self) -> Result<QPoly> {
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.at += 1;
            let t = self.term()?;
            acc = if c == '+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<QPoly> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.at += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<QPoly> {
        if self.peek() == Some('-') {
            self.at += 1;
            return Ok(-&self.factor()?);
        }
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.at += 1;
            let e = self.integer()?;
            return Ok(base.pow(e.try_into().map_err(|_| self.err())?));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.at;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.at += 1;
        }
        let s: String = self.toks[start..self.at].iter().collect();
        s.parse().map_err(|_| self.err())
    }

    fn atom(&mut self) -> Result<QPoly> {
        match self.peek() {
            Some('q') => {
                self.at += 1;
                Ok(QPoly::monomial(1, 1))
            }
            Some('(') => {
                self.at += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err());
                }
                self.at += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(QPoly::constant(self.integer()?)),
            _ => Err(self.err()),
        }
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, o: &QPoly) -> QPoly {
        let n = self.0.len().max(o.0.len());
        let z = BigRational::zero();
        QPoly::new((0..n).map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, o: &QPoly) -> QPoly {
        self + &(-o)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let mono = match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{k}"),
            };
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{a}*{mono}")?;
            }
        }
        Ok(())
    }
}
