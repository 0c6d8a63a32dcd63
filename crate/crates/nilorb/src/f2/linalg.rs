//! Linear algebra over F2 with vectors packed into `u64` (at most 64 coordinates).

/// Parity of `a · b`.
#[inline]
pub fn dot(a: u64, b: u64) -> bool {
    (a & b).count_ones() & 1 == 1
}

/// Indices of the set bits of `v`, lowest first.
pub fn bits(mut v: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if v == 0 {
            return None;
        }
        let i = v.trailing_zeros() as usize;
        v &= v - 1;
        Some(i)
    })
}

/// Row-major bit matrix; row `i` is a `u64` whose bit `j` is entry `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    pub cols: usize,
    pub rows: Vec<u64>,
}

impl BitMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        BitMatrix { cols, rows: vec![0; rows] }
    }

    pub fn identity(n: usize) -> Self {
        BitMatrix { cols: n, rows: (0..n).map(|i| 1 << i).collect() }
    }

    pub fn from_rows(cols: usize, rows: Vec<u64>) -> Self {
        BitMatrix { cols, rows }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        if v {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.nrows()).all(|i| (0..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_alternating(&self) -> bool {
        self.is_symmetric() && (0..self.nrows()).all(|i| !self.get(i, i))
    }

    /// `A v`, with `v` read as a column.
    pub fn apply(&self, v: u64) -> u64 {
        self.rows.iter().enumerate().fold(0, |acc, (i, &r)| acc | (u64::from(dot(r, v)) << i))
    }

    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        let rows = self.rows.iter().map(|&r| bits(r).fold(0, |acc, k| acc ^ other.rows[k])).collect();
        BitMatrix { cols: other.cols, rows }
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zero(self.cols, self.nrows());
        for (i, &r) in self.rows.iter().enumerate() {
            for j in bits(r) {
                t.rows[j] |= 1 << i;
            }
        }
        t
    }

    /// `A^k`; square matrices only.
    pub fn pow(&self, k: u32) -> BitMatrix {
        (0..k).fold(BitMatrix::identity(self.cols), |acc, _| acc.mul(self))
    }

    pub fn rank(&self) -> usize {
        echelon(self.rows.clone()).len()
    }

    pub fn inverse(&self) -> Option<BitMatrix> {
        let n = self.nrows();
        if n != self.cols {
            return None;
        }
        let mut a = self.rows.clone();
        let mut inv: Vec<u64> = (0..n).map(|i| 1 << i).collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| a[r] >> col & 1 == 1)?;
            a.swap(col, piv);
            inv.swap(col, piv);
            for r in 0..n {
                if r != col && a[r] >> col & 1 == 1 {
                    a[r] ^= a[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        Some(BitMatrix { cols: n, rows: inv })
    }

    /// Basis of `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<u64> {
        let (red, pivots) = rref(self.rows.clone(), self.cols);
        let pivot_mask = pivots.iter().fold(0u64, |m, &p| m | 1 << p);
        (0..self.cols)
            .filter(|&c| pivot_mask >> c & 1 == 0)
            .map(|free| {
                let mut v = 1u64 << free;
                for (r, &p) in pivots.iter().enumerate() {
                    if red[r] >> free & 1 == 1 {
                        v |= 1 << p;
                    }
                }
                v
            })
            .collect()
    }

    /// A solution of `A x = b` with every free variable set to zero.
    pub fn solve(&self, b: u64) -> Option<u64> {
        let n = self.nrows();
        let mut a = self.rows.clone();
        let mut rhs: Vec<bool> = (0..n).map(|i| b >> i & 1 == 1).collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(piv) = (row..n).find(|&r| a[r] >> col & 1 == 1) else { continue };
            a.swap(row, piv);
            rhs.swap(row, piv);
            for r in 0..n {
                if r != row && a[r] >> col & 1 == 1 {
                    a[r] ^= a[row];
                    rhs[r] ^= rhs[row];
                }
            }
            pivots.push(col);
            row += 1;
        }
        if rhs[row..].iter().any(|&x| x) {
            return None;
        }
        Some(pivots.iter().enumerate().fold(0, |x, (r, &p)| if rhs[r] { x | 1 << p } else { x }))
    }
}

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
fn rref(mut a: Vec<u64>, cols: usize) -> (Vec<u64>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(piv) = (row..a.len()).find(|&r| a[r] >> col & 1 == 1) else { continue };
        a.swap(row, piv);
        for r in 0..a.len() {
            if r != row && a[r] >> col & 1 == 1 {
                a[r] ^= a[row];
            }
        }
        pivots.push(col);
        row += 1;
    }
    a.truncate(row);
    (a, pivots)
}

/// An independent spanning set of the given vectors.
pub fn echelon(vs: Vec<u64>) -> Vec<u64> {
    let mut b = Basis::default();
    for v in vs {
        b.insert(v);
    }
    b.vectors
}

/// Incrementally built subspace with a reduction table for membership tests.
#[derive(Clone, Debug, Default)]
pub struct Basis {
    /// Original (unreduced) vectors, in insertion order.
    pub vectors: Vec<u64>,
    reduced: Vec<(u32, u64)>,
}

impl Basis {
    pub fn of(vs: &[u64]) -> Self {
        let mut b = Basis::default();
        for &v in vs {
            b.insert(v);
        }
        b
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn reduce(&self, mut v: u64) -> u64 {
        for &(p, r) in &self.reduced {
            if v >> p & 1 == 1 {
                v ^= r;
            }
        }
        v
    }

    pub fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }

    /// Adds `v` if it is independent of what is there; reports whether it was.
    pub fn insert(&mut self, v: u64) -> bool {
        let r = self.reduce(v);
        if r == 0 {
            return false;
        }
        let p = 63 - r.leading_zeros();
        for e in &mut self.reduced {
            if e.1 >> p & 1 == 1 {
                e.1 ^= r;
            }
        }
        self.reduced.push((p, r));
        self.vectors.push(v);
        true
    }

    pub fn contains_all(&self, vs: &[u64]) -> bool {
        vs.iter().all(|&v| self.contains(v))
    }

    /// Every element of the span; only for small dimensions.
    pub fn elements(&self) -> Vec<u64> {
        let k = self.dim();
        (0u64..1 << k).map(|c| combine(&self.vectors, c)).collect()
    }
}

/// `Σ_{a ∈ c} basis[a]`.
pub fn combine(basis: &[u64], c: u64) -> u64 {
    bits(c).fold(0, |acc, a| acc ^ basis[a])
}

/// Vectors from `sup` completing a basis of `sub` to one of `span(sub ∪ sup)`.
pub fn complement(sub: &[u64], sup: &[u64]) -> Vec<u64> {
    let mut b = Basis::of(sub);
    sup.iter().copied().filter(|&v| b.insert(v)).collect()
}

/// Basis of `{x ∈ span(basis) : f(x) = 0}` for a linear `f` into bit vectors.
pub fn kernel_on(basis: &[u64], f: impl Fn(u64) -> u64) -> Vec<u64> {
    // images paired with the coefficient vector that produced them
    let mut table: Vec<(u32, u64, u64)> = Vec::new();
    let mut out = Vec::new();
    for (a, &b) in basis.iter().enumerate() {
        let (mut y, mut c) = (f(b), 1u64 << a);
        for &(p, ty, tc) in &table {
            if y >> p & 1 == 1 {
                y ^= ty;
                c ^= tc;
            }
        }
        if y == 0 {
            out.push(combine(basis, c));
        } else {
            table.push((63 - y.leading_zeros(), y, c));
        }
    }
    out
}
