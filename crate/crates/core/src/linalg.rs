//! Exact dense linear algebra over a prime field F_p.
//!
//! Everything downstream (Hom spaces, resolutions, homology dimensions)
//! reduces to rank/kernel/solve computations done here. All pivoting is
//! first-nonzero so that bases are deterministic given entry order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A prime modulus. `2 <= p < 2^31`, so products of two reduced elements
/// fit in a `u64` without overflow.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct FieldSpec {
    p: u64,
}

pub const DEFAULT_P: u64 = 101;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    pub fn new(p: u64) -> Result<Self> {
        if p >= (1 << 31) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec { p })
    }

    pub fn default_field() -> Self {
        FieldSpec { p: DEFAULT_P }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a % self.p) % self.p
    }

    /// Multiplicative inverse by Fermat's little theorem.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }

    pub fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % self.p;
            }
            b = b * b % self.p;
            e >>= 1;
        }
        acc
    }
}

/// Dense matrix over F_p, row-major entries, always reduced.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl Mat {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Mat { field, rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            for &v in row {
                entries.push(field.reduce(v));
            }
        }
        Mat { field, rows: r, cols: c, entries }
    }

    pub fn from_fn(field: FieldSpec, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u64) -> Self {
        let mut m = Mat::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.entries[r * self.cols + c] = v % self.field.p();
    }

    /// Row-by-row entries, for report rendering.
    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|r| self.entries[r * self.cols..(r + 1) * self.cols].to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |i, j| self.at(j, i))
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "mul shape");
        assert_eq!(self.field, other.field, "mul field");
        let p = self.field.p();
        let mut out = Mat::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = (out.at(i, j) + a * other.at(k, j)) % p;
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "add shape");
        Mat::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.field.add(self.at(i, j), other.at(i, j))
        })
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "sub shape");
        Mat::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.field.sub(self.at(i, j), other.at(i, j))
        })
    }

    pub fn neg(&self) -> Mat {
        Mat::from_fn(self.field, self.rows, self.cols, |i, j| self.field.neg(self.at(i, j)))
    }

    pub fn scale(&self, s: u64) -> Mat {
        Mat::from_fn(self.field, self.rows, self.cols, |i, j| self.field.mul(self.at(i, j), s))
    }

    /// Stack columns of `self` then `other` side by side.
    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows, "hstack rows");
        Mat::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols { self.at(i, j) } else { other.at(i, j - self.cols) }
        })
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "vstack cols");
        Mat::from_fn(self.field, self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows { self.at(i, j) } else { other.at(i - self.rows, j) }
        })
    }

    pub fn column(&self, c: usize) -> Mat {
        Mat::from_fn(self.field, self.rows, 1, |i, _| self.at(i, c))
    }

    /// Entries read off row-major into a single column vector.
    pub fn vectorize(&self) -> Mat {
        Mat { field: self.field, rows: self.rows * self.cols, cols: 1, entries: self.entries.clone() }
    }

    /// Inverse of `vectorize`.
    pub fn from_column(col: &Mat, rows: usize, cols: usize) -> Mat {
        assert_eq!(col.cols, 1);
        assert_eq!(col.rows, rows * cols);
        Mat { field: col.field, rows, cols, entries: col.entries.clone() }
    }

    /// Copy of the block with rows `r0..r1` and columns `c0..c1`.
    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Mat {
        assert!(r0 <= r1 && r1 <= self.rows && c0 <= c1 && c1 <= self.cols);
        Mat::from_fn(self.field, r1 - r0, c1 - c0, |r, c| self.at(r0 + r, c0 + c))
    }

    /// Reduced row echelon form together with the pivot columns,
    /// first-nonzero pivoting.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let f = m.field;
        let p = f.p;
        let cols = m.cols;
        let mut pivots = Vec::new();
        let mut prow = vec![0u64; cols];
        let mut r = 0;
        for c in 0..cols {
            if r == m.rows {
                break;
            }
            let piv = (r..m.rows).find(|&i| m.entries[i * cols + c] != 0);
            let Some(piv) = piv else { continue };
            if piv != r {
                let (lo, hi) = m.entries.split_at_mut(piv * cols);
                lo[r * cols..r * cols + cols].swap_with_slice(&mut hi[..cols]);
            }
            let inv = f.inv(m.entries[r * cols + c]);
            if inv != 1 {
                for v in &mut m.entries[r * cols + c..(r + 1) * cols] {
                    *v = *v * inv % p;
                }
            }
            // entries of row r left of c are already zero
            prow[c..].copy_from_slice(&m.entries[r * cols + c..(r + 1) * cols]);
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.entries[i * cols + c];
                if factor == 0 {
                    continue;
                }
                let neg = p - factor;
                let row = &mut m.entries[i * cols + c..(i + 1) * cols];
                for (v, &w) in row.iter_mut().zip(&prow[c..]) {
                    *v = (*v + neg * w) % p;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Forward elimination only; cheaper than `rref` when only the rank is
    /// needed.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let f = m.field;
        let p = f.p;
        let cols = m.cols;
        let mut prow = vec![0u64; cols];
        let mut r = 0;
        for c in 0..cols {
            if r == m.rows {
                break;
            }
            let piv = (r..m.rows).find(|&i| m.entries[i * cols + c] != 0);
            let Some(piv) = piv else { continue };
            if piv != r {
                let (lo, hi) = m.entries.split_at_mut(piv * cols);
                lo[r * cols..r * cols + cols].swap_with_slice(&mut hi[..cols]);
            }
            let inv = f.inv(m.entries[r * cols + c]);
            prow[c..].copy_from_slice(&m.entries[r * cols + c..(r + 1) * cols]);
            if inv != 1 {
                for v in &mut prow[c..] {
                    *v = *v * inv % p;
                }
            }
            for i in r + 1..m.rows {
                let factor = m.entries[i * cols + c];
                if factor == 0 {
                    continue;
                }
                let neg = p - factor;
                let row = &mut m.entries[i * cols + c..(i + 1) * cols];
                for (v, &w) in row.iter_mut().zip(&prow[c..]) {
                    *v = (*v + neg * w) % p;
                }
            }
            r += 1;
        }
        r
    }

    /// Basis of the right kernel, as columns. Canonical: one column per
    /// free variable, in increasing column order.
    pub fn kernel_basis(&self) -> Mat {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let f = self.field;
        let mut out = Mat::zeros(f, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, 1);
            for (row, &pc) in pivots.iter().enumerate() {
                out.set(pc, k, f.neg(r.at(row, fc)));
            }
        }
        out
    }

    /// Particular solution of `self * X = b` with free variables set to
    /// zero, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &Mat) -> Result<Option<Mat>> {
        if self.rows != b.rows {
            return Err(Error::DimMismatch(format!(
                "solve: lhs has {} rows, rhs has {}",
                self.rows, b.rows
            )));
        }
        let aug = self.hstack(b);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = Mat::zeros(self.field, self.cols, b.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.at(row, self.cols + j));
            }
        }
        Ok(Some(x))
    }

    /// Dimension of ambient / column span of `sub`.
    pub fn quotient_dim(sub: &Mat, ambient_dim: usize) -> usize {
        assert_eq!(sub.rows, ambient_dim, "quotient_dim: ambient mismatch");
        ambient_dim - sub.rank()
    }
}

/// Indices of standard basis vectors whose cosets extend the column span
/// of `sub` to a basis of the ambient space, in increasing order.
pub fn complement_indices(sub: &Mat, ambient_dim: usize) -> Vec<usize> {
    let field = sub.field();
    let mut acc = sub.clone();
    let mut picked = Vec::new();
    let mut rank = acc.rank();
    for i in 0..ambient_dim {
        let mut e = Mat::zeros(field, ambient_dim, 1);
        e.set(i, 0, 1);
        let cand = acc.hstack(&e);
        let r = cand.rank();
        if r > rank {
            picked.push(i);
            acc = cand;
            rank = r;
        }
    }
    picked
}
