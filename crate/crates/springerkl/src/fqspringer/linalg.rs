//! Exact linear algebra over the prime fields GF(p), p in {2, 3, 5}:
//! subspaces in canonical reduced row echelon form, Jordan-form
//! nilpotents, image and kernel filtrations, preimages, and quotient
//! maps.

use crate::error::{Error, Result};
use crate::tableaux::YoungShape;

/// Hard cap on the ambient dimension; vectors and matrices are fixed
/// arrays so subspaces stay `Copy` and cheap during enumeration.
pub const MAX_N: usize = 10;

pub const SUPPORTED_PRIMES: [u8; 3] = [2, 3, 5];

pub type FqVector = [u8; MAX_N];

#[inline]
fn fq_inv(p: u8, a: u8) -> u8 {
    debug_assert!(a != 0);
    (1..p).find(|&x| (x as u16 * a as u16) % p as u16 == 1).unwrap()
}

/// A square matrix over GF(p); only the leading `n x n` block is used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FqMatrix {
    pub p: u8,
    pub n: usize,
    pub rows: [[u8; MAX_N]; MAX_N],
}

impl FqMatrix {
    pub fn zero(p: u8, n: usize) -> Self {
        FqMatrix {
            p,
            n,
            rows: [[0; MAX_N]; MAX_N],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(|&x| x == 0))
    }

    /// Column vector action `w = M v`.
    pub fn apply(&self, v: &FqVector) -> FqVector {
        let mut out = [0u8; MAX_N];
        for i in 0..self.n {
            let mut acc: u16 = 0;
            for j in 0..self.n {
                acc += self.rows[i][j] as u16 * v[j] as u16;
            }
            out[i] = (acc % self.p as u16) as u8;
        }
        out
    }

    /// Row vector action `a M` (used for annihilator transport).
    pub fn apply_left(&self, a: &FqVector) -> FqVector {
        let mut out = [0u8; MAX_N];
        for j in 0..self.n {
            let mut acc: u16 = 0;
            for i in 0..self.n {
                acc += a[i] as u16 * self.rows[i][j] as u16;
            }
            out[j] = (acc % self.p as u16) as u8;
        }
        out
    }

    pub fn matmul(&self, rhs: &FqMatrix) -> FqMatrix {
        let mut out = FqMatrix::zero(self.p, self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let mut acc: u16 = 0;
                for k in 0..self.n {
                    acc += self.rows[i][k] as u16 * rhs.rows[k][j] as u16;
                }
                out.rows[i][j] = (acc % self.p as u16) as u8;
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> FqMatrix {
        let mut out = FqMatrix::zero(self.p, self.n);
        for i in 0..self.n {
            out.rows[i][i] = 1;
        }
        for _ in 0..k {
            out = out.matmul(self);
        }
        out
    }
}

/// A subspace of GF(p)^n stored as a reduced-row-echelon basis; the
/// representation is canonical, so equal subspaces compare equal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FqSubspace {
    pub p: u8,
    pub n: usize,
    dim: usize,
    rows: [[u8; MAX_N]; MAX_N],
}

impl FqSubspace {
    pub fn zero(p: u8, n: usize) -> Self {
        FqSubspace {
            p,
            n,
            dim: 0,
            rows: [[0; MAX_N]; MAX_N],
        }
    }

    pub fn full(p: u8, n: usize) -> Self {
        let mut s = Self::zero(p, n);
        for i in 0..n {
            s.rows[i][i] = 1;
            s.dim = n;
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[[u8; MAX_N]] {
        &self.rows[..self.dim]
    }

    fn pivot(row: &FqVector, n: usize) -> Option<usize> {
        (0..n).find(|&j| row[j] != 0)
    }

    /// Canonical coset representative: `v` reduced by the basis.
    pub fn reduce(&self, v: &FqVector) -> FqVector {
        let p = self.p as u16;
        let mut v = *v;
        for r in 0..self.dim {
            let pc = Self::pivot(&self.rows[r], self.n).unwrap();
            if v[pc] != 0 {
                let f = v[pc] as u16;
                for j in 0..self.n {
                    let sub = (f * self.rows[r][j] as u16) % p;
                    v[j] = ((v[j] as u16 + p - sub) % p) as u8;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &FqVector) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains_subspace(&self, other: &FqSubspace) -> bool {
        other.basis().iter().all(|r| self.contains(r))
    }

    /// Insert a vector, keeping RREF; returns the reduced row actually
    /// added, or `None` if `v` was already in the span.
    pub fn insert(&mut self, v: &FqVector) -> Option<FqVector> {
        let p = self.p;
        let mut v = self.reduce(v);
        let pc = Self::pivot(&v, self.n)?;
        // normalize leading coefficient to 1
        let inv = fq_inv(p, v[pc]) as u16;
        for x in v.iter_mut().take(self.n) {
            *x = ((*x as u16 * inv) % p as u16) as u8;
        }
        // eliminate the new pivot from existing rows
        for r in 0..self.dim {
            let f = self.rows[r][pc] as u16;
            if f != 0 {
                for j in 0..self.n {
                    let sub = (f * v[j] as u16) % p as u16;
                    self.rows[r][j] =
                        ((self.rows[r][j] as u16 + p as u16 - sub) % p as u16) as u8;
                }
            }
        }
        // insert keeping rows ordered by pivot column
        let pos = (0..self.dim)
            .find(|&r| Self::pivot(&self.rows[r], self.n).unwrap() > pc)
            .unwrap_or(self.dim);
        for r in (pos..self.dim).rev() {
            self.rows[r + 1] = self.rows[r];
        }
        self.rows[pos] = v;
        self.dim += 1;
        Some(v)
    }

    pub fn sum(&self, other: &FqSubspace) -> FqSubspace {
        let mut out = *self;
        for r in other.basis() {
            out.insert(r);
        }
        out
    }

    /// All `x` with `x . w = 0` for every `w` in the subspace.
    pub fn annihilator(&self) -> FqSubspace {
        let p = self.p as u16;
        let n = self.n;
        let pivots: Vec<usize> = (0..self.dim)
            .map(|r| Self::pivot(&self.rows[r], n).unwrap())
            .collect();
        let mut out = FqSubspace::zero(self.p, n);
        for f in 0..n {
            if pivots.contains(&f) {
                continue;
            }
            let mut v = [0u8; MAX_N];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                // x_pc = -row_r[f]
                v[pc] = ((p - self.rows[r][f] as u16) % p) as u8;
            }
            out.insert(&v);
        }
        out
    }

    pub fn intersect(&self, other: &FqSubspace) -> FqSubspace {
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    /// Image of the subspace under the matrix.
    pub fn map_by(&self, m: &FqMatrix) -> FqSubspace {
        let mut out = FqSubspace::zero(self.p, self.n);
        for r in self.basis() {
            out.insert(&m.apply(r));
        }
        out
    }
}

/// `{v : M v in W}`, computed through annihilators.
pub fn preimage(m: &FqMatrix, w: &FqSubspace) -> FqSubspace {
    let ann = w.annihilator();
    let mut moved = FqSubspace::zero(w.p, w.n);
    for a in ann.basis() {
        moved.insert(&m.apply_left(a));
    }
    moved.annihilator()
}

/// `{v : M v = 0}`.
pub fn kernel(m: &FqMatrix) -> FqSubspace {
    let mut rowspace = FqSubspace::zero(m.p, m.n);
    for i in 0..m.n {
        rowspace.insert(&m.rows[i]);
    }
    rowspace.annihilator()
}

/// A nilpotent map in Jordan form with block sizes equal to the row
/// lengths of the shape, so `N^b = 0` and `N^{b-1} != 0` with `b` the
/// number of columns.
#[derive(Clone, Debug)]
pub struct NilpotentMap {
    shape: YoungShape,
    matrix: FqMatrix,
    b: usize,
}

impl NilpotentMap {
    pub fn new(shape: &YoungShape, p: u8) -> Result<Self> {
        if !SUPPORTED_PRIMES.contains(&p) {
            return Err(Error::Domain(format!(
                "prime {p} not supported (use one of {SUPPORTED_PRIMES:?})"
            )));
        }
        let n = shape.n();
        if n > MAX_N {
            return Err(Error::SizeLimit(format!("n = {n} exceeds hard cap {MAX_N}")));
        }
        let mut matrix = FqMatrix::zero(p, n);
        let mut offset = 0;
        for &len in shape.rows() {
            // within a block, e_{k} -> e_{k-1} and the first basis vector
            // dies
            for k in 1..len {
                matrix.rows[offset + k - 1][offset + k] = 1;
            }
            offset += len;
        }
        let b = shape.num_cols();
        let nm = NilpotentMap {
            shape: shape.clone(),
            matrix,
            b,
        };
        debug_assert!(nm.power(b).is_zero());
        debug_assert!(b == 0 || !nm.power(b - 1).is_zero() || n == 0);
        Ok(nm)
    }

    pub fn shape(&self) -> &YoungShape {
        &self.shape
    }

    pub fn p(&self) -> u8 {
        self.matrix.p
    }

    pub fn n(&self) -> usize {
        self.matrix.n
    }

    /// Least positive integer with `N^b = 0`.
    pub fn b(&self) -> usize {
        self.b
    }

    pub fn matrix(&self) -> &FqMatrix {
        &self.matrix
    }

    pub fn power(&self, k: usize) -> FqMatrix {
        self.matrix.pow(k)
    }

    /// `im N^k` as a canonical subspace.
    pub fn image_power(&self, k: usize) -> FqSubspace {
        let m = self.power(k);
        let mut out = FqSubspace::zero(self.p(), self.n());
        for j in 0..self.n() {
            let mut e = [0u8; MAX_N];
            e[j] = 1;
            out.insert(&m.apply(&e));
        }
        out
    }

    /// `ker N^k`.
    pub fn kernel_power(&self, k: usize) -> FqSubspace {
        kernel(&self.power(k))
    }

    pub fn preimage(&self, w: &FqSubspace) -> FqSubspace {
        preimage(&self.matrix, w)
    }

    pub fn preimage_power(&self, d: usize, w: &FqSubspace) -> FqSubspace {
        let mut out = *w;
        for _ in 0..d {
            out = self.preimage(&out);
        }
        out
    }
}

/// The quotient space `V / F` in the coordinates of the non-pivot
/// columns of `F`, with the induced map of an `F`-invariant operator.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    base: FqSubspace,
    free_cols: Vec<usize>,
}

impl QuotientSpace {
    pub fn new(base: FqSubspace) -> Self {
        let pivots: Vec<usize> = base
            .basis()
            .iter()
            .map(|r| (0..base.n).find(|&j| r[j] != 0).unwrap())
            .collect();
        let free_cols = (0..base.n).filter(|j| !pivots.contains(j)).collect();
        QuotientSpace { base, free_cols }
    }

    pub fn dim(&self) -> usize {
        self.free_cols.len()
    }

    /// Coset of `v` in quotient coordinates.
    pub fn project(&self, v: &FqVector) -> FqVector {
        let reduced = self.base.reduce(v);
        let mut out = [0u8; MAX_N];
        for (k, &j) in self.free_cols.iter().enumerate() {
            out[k] = reduced[j];
        }
        out
    }

    /// Lift of quotient coordinates back to the canonical coset
    /// representative in `V`.
    pub fn lift(&self, q: &FqVector) -> FqVector {
        let mut out = [0u8; MAX_N];
        for (k, &j) in self.free_cols.iter().enumerate() {
            out[j] = q[k];
        }
        out
    }

    /// The induced map on the quotient; requires `M(base) <= base`.
    pub fn quotient_map(&self, m: &FqMatrix) -> FqMatrix {
        for r in self.base.basis() {
            debug_assert!(self.base.contains(&m.apply(r)), "operator must fix the subspace");
        }
        let d = self.dim();
        let mut out = FqMatrix::zero(self.base.p, d);
        for (k, &j) in self.free_cols.iter().enumerate() {
            let mut e = [0u8; MAX_N];
            e[j] = 1;
            let img = self.project(&m.apply(&e));
            for i in 0..d {
                out.rows[i][k] = img[i];
            }
        }
        out
    }

    /// Image of a subspace of `V` in the quotient, i.e. `(W + F) / F`.
    pub fn project_subspace(&self, w: &FqSubspace) -> FqSubspace {
        let mut out = FqSubspace::zero(self.base.p, self.dim());
        for r in w.basis() {
            out.insert(&self.project(r));
        }
        out
    }
}
