//! Quadratic and bilinear forms on small F2-spaces.

use super::linalg::{bits, dot, BitMatrix};

/// `Q(x) = Σ d_i x_i + Σ_{i<j} c_ij x_i x_j`, stored as the diagonal `d` and the
/// symmetric polar matrix `c` (zero diagonal).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quadratic {
    pub diag: u64,
    pub polar: BitMatrix,
}

impl Quadratic {
    pub fn zero(dim: usize) -> Self {
        Quadratic { diag: 0, polar: BitMatrix::zero(dim, dim) }
    }

    pub fn dim(&self) -> usize {
        self.polar.cols
    }

    pub fn is_zero(&self) -> bool {
        self.diag == 0 && self.polar.is_zero()
    }

    pub fn eval(&self, x: u64) -> bool {
        let mut acc = (self.diag & x).count_ones();
        for i in bits(x) {
            // pairs i < j
            acc += (self.polar.rows[i] & x & !((2u64 << i) - 1)).count_ones();
        }
        acc & 1 == 1
    }

    /// The polar form `Q(x+y) − Q(x) − Q(y)`.
    pub fn bilinear(&self, x: u64, y: u64) -> bool {
        dot(x, self.polar.apply(y))
    }

    /// The form pulled back along `x ↦ Σ_a x_a basis[a]`.
    pub fn restrict(&self, basis: &[u64]) -> Quadratic {
        let k = basis.len();
        let mut polar = BitMatrix::zero(k, k);
        let mut diag = 0;
        for a in 0..k {
            if self.eval(basis[a]) {
                diag |= 1 << a;
            }
            for b in 0..k {
                if a != b && self.bilinear(basis[a], basis[b]) {
                    polar.rows[a] |= 1 << b;
                }
            }
        }
        Quadratic { diag, polar }
    }

    /// Whether `Q` vanishes on the span of `vs`.
    pub fn vanishes_on(&self, vs: &[u64]) -> bool {
        vs.iter().all(|&v| !self.eval(v))
            && (0..vs.len()).all(|a| (a + 1..vs.len()).all(|b| !self.bilinear(vs[a], vs[b])))
    }
}

/// Gram matrix of a bilinear form given as a closure.
pub fn gram(basis: &[u64], form: impl Fn(u64, u64) -> bool) -> BitMatrix {
    let k = basis.len();
    let mut g = BitMatrix::zero(k, k);
    for a in 0..k {
        for b in 0..k {
            if form(basis[a], basis[b]) {
                g.rows[a] |= 1 << b;
            }
        }
    }
    g
}

/// A symplectic space `(V, ⟨,⟩)` with a quadratic form `α`, the functional's
/// `α_ξ(v) = ⟨v, Xv⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpSpace {
    pub symp: BitMatrix,
    pub alpha: Quadratic,
}

/// An orthogonal space `(V, Q)` with the alternating form `β_ξ` of the functional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthSpace {
    pub q: Quadratic,
    pub xi: BitMatrix,
}

/// Either kind of space, as produced by [`super::representative_from_symbol`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormSpace {
    Sp(SpSpace),
    Orth(OrthSpace),
}

impl SpSpace {
    pub fn dim(&self) -> usize {
        self.symp.cols
    }
}

impl OrthSpace {
    pub fn dim(&self) -> usize {
        self.xi.cols
    }
}

impl FormSpace {
    pub fn dim(&self) -> usize {
        match self {
            FormSpace::Sp(s) => s.dim(),
            FormSpace::Orth(o) => o.dim(),
        }
    }
}

/// `⟨e_i, e_{i+n}⟩ = 1` on `F2^{2n}`.
pub fn standard_symplectic(n: usize) -> BitMatrix {
    let mut j = BitMatrix::zero(2 * n, 2 * n);
    for i in 0..n {
        j.set(i, i + n, true);
        j.set(i + n, i, true);
    }
    j
}

/// `Q = Σ x_i x_{i+n}` on `F2^{2n}`, plus `x_{2n}²` when `odd`.
pub fn standard_quadratic(n: usize, odd: bool) -> Quadratic {
    let dim = 2 * n + usize::from(odd);
    let mut q = Quadratic::zero(dim);
    for i in 0..n {
        q.polar.set(i, i + n, true);
        q.polar.set(i + n, i, true);
    }
    if odd {
        q.diag |= 1 << (2 * n);
    }
    q
}

/// Number of bits needed to encode an arbitrary quadratic form on `F2^dim`.
pub fn quadratic_bits(dim: usize) -> u32 {
    (dim * (dim + 1) / 2) as u32
}

/// Number of bits needed to encode an alternating form on `F2^dim`.
pub fn alternating_bits(dim: usize) -> u32 {
    (dim * dim.saturating_sub(1) / 2) as u32
}

/// Decodes a form index: the first `dim` bits are the diagonal, the rest fill
/// the strict upper triangle row by row.
pub fn quadratic_from_index(dim: usize, idx: u64) -> Quadratic {
    let diag = idx & ((1u64 << dim) - 1);
    let polar = alternating_from_index(dim, idx >> dim);
    Quadratic { diag, polar }
}

pub fn alternating_from_index(dim: usize, idx: u64) -> BitMatrix {
    let mut m = BitMatrix::zero(dim, dim);
    let mut k = 0;
    for i in 0..dim {
        for j in i + 1..dim {
            if idx >> k & 1 == 1 {
                m.set(i, j, true);
                m.set(j, i, true);
            }
            k += 1;
        }
    }
    m
}
