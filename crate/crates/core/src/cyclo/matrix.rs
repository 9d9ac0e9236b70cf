use std::fmt;
use std::sync::Arc;

use num::integer::lcm;

use super::field::CycField;
use super::number::CycNum;
use crate::error::{Error, Result};

/// Dense row-major matrix over a cyclotomic field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycMatrix {
    field: Arc<CycField>,
    rows: usize,
    cols: usize,
    entries: Vec<CycNum>,
}

/// Result of exact row reduction: rank, pivot columns and a reduced-echelon
/// kernel basis.
///
/// Each basis vector has a 1 in exactly one free column and 0 in every other
/// free column, so a vector known to lie in the kernel is expressed in this
/// basis by reading off its free coordinates.
#[derive(Clone, Debug)]
pub struct Kernel {
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub free: Vec<usize>,
    pub basis: Vec<Vec<CycNum>>,
}

impl Kernel {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

impl CycMatrix {
    pub fn from_entries(field: &Arc<CycField>, rows: usize, cols: usize, entries: Vec<CycNum>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count does not match shape");
        assert!(
            entries.iter().all(|e| e.conductor() == field.conductor()),
            "matrix entries must share the matrix field"
        );
        CycMatrix { field: field.clone(), rows, cols, entries }
    }

    pub fn zero(field: &Arc<CycField>, rows: usize, cols: usize) -> Self {
        CycMatrix { field: field.clone(), rows, cols, entries: vec![CycNum::zero(field); rows * cols] }
    }

    pub fn identity(field: &Arc<CycField>, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = CycNum::one(field);
        }
        m
    }

    pub fn diagonal(field: &Arc<CycField>, diag: Vec<CycNum>) -> Self {
        let n = diag.len();
        let mut m = Self::zero(field, n, n);
        for (i, d) in diag.into_iter().enumerate() {
            m.entries[i * n + i] = d;
        }
        m
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(field: &Arc<CycField>, rows: usize, columns: &[Vec<CycNum>]) -> Self {
        let cols = columns.len();
        let mut m = Self::zero(field, rows, cols);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, x) in col.iter().enumerate() {
                m.entries[i * cols + j] = x.clone();
            }
        }
        m
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(field: &Arc<CycField>, cols: usize, blocks: &[CycMatrix]) -> Self {
        let mut entries = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            rows += b.rows;
            entries.extend(b.entries.iter().cloned());
        }
        CycMatrix { field: field.clone(), rows, cols, entries }
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[CycNum] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNum {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycNum) {
        assert_eq!(v.conductor(), self.field.conductor());
        self.entries[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<CycNum> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j { e.is_one() } else { e.is_zero() }
                })
            })
    }

    pub fn mul(&self, rhs: &CycMatrix) -> CycMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix shapes do not compose");
        let mut out = CycMatrix::zero(&self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * rhs.cols + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[CycNum]) -> Vec<CycNum> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(CycNum::zero(&self.field), |acc, j| &acc + &(self.get(i, j) * &v[j]))
            })
            .collect()
    }

    pub fn sub(&self, rhs: &CycMatrix) -> CycMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect();
        CycMatrix { field: self.field.clone(), rows: self.rows, cols: self.cols, entries }
    }

    /// `self − λ·I`.
    pub fn minus_scalar(&self, lambda: &CycNum) -> CycMatrix {
        assert!(self.is_square());
        let mut out = self.clone();
        for i in 0..self.rows {
            let idx = i * self.cols + i;
            out.entries[idx] = &out.entries[idx] - lambda;
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> CycMatrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = CycMatrix::identity(&self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> CycNum {
        assert!(self.is_square());
        (0..self.rows).fold(CycNum::zero(&self.field), |acc, i| &acc + self.get(i, i))
    }

    /// Entrywise image in Q(ζ_L).
    pub fn embed(&self, target: u64) -> Result<CycMatrix> {
        let field = CycField::new(target);
        let entries = self.entries.iter().map(|e| e.embed(target)).collect::<Result<Vec<_>>>()?;
        Ok(CycMatrix { field, rows: self.rows, cols: self.cols, entries })
    }

    /// Reduced row echelon form, with the pivot columns.
    fn rref(&self) -> (Vec<Vec<CycNum>>, Vec<usize>) {
        let mut a: Vec<Vec<CycNum>> =
            (0..self.rows).map(|i| self.entries[i * self.cols..(i + 1) * self.cols].to_vec()).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let inv = a[r][c].inv().expect("pivot is nonzero");
            for j in c..self.cols {
                a[r][j] = &a[r][j] * &inv;
            }
            for i in 0..self.rows {
                if i == r || a[i][c].is_zero() {
                    continue;
                }
                let f = a[i][c].clone();
                for j in c..self.cols {
                    let t = &f * &a[r][j];
                    a[i][j] = &a[i][j] - &t;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    /// Exact kernel (null space) with rank.
    pub fn kernel(&self) -> Kernel {
        let (a, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let basis = free
            .iter()
            .map(|&f| {
                let mut v = vec![CycNum::zero(&self.field); self.cols];
                v[f] = CycNum::one(&self.field);
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -&a[row][f];
                }
                v
            })
            .collect();
        Kernel { rank: pivots.len(), pivots, free, basis }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Determinant by Gaussian elimination over the field.
    pub fn determinant(&self) -> CycNum {
        assert!(self.is_square());
        let n = self.rows;
        let mut a: Vec<Vec<CycNum>> =
            (0..n).map(|i| self.entries[i * n..(i + 1) * n].to_vec()).collect();
        let mut det = CycNum::one(&self.field);
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
                return CycNum::zero(&self.field);
            };
            if p != c {
                a.swap(p, c);
                det = -&det;
            }
            det = &det * &a[c][c];
            let inv = a[c][c].inv().expect("pivot is nonzero");
            for i in c + 1..n {
                if a[i][c].is_zero() {
                    continue;
                }
                let f = &a[i][c] * &inv;
                for j in c..n {
                    let t = &f * &a[c][j];
                    a[i][j] = &a[i][j] - &t;
                }
            }
        }
        det
    }

    /// Multiplicity of ζ_m^j among the eigenvalues, for j = 0..m−1.
    ///
    /// Requires `M^m = I`; each multiplicity is dim ker(M − ζ_m^j I) computed
    /// over Q(ζ_lcm(N, m)). Finite-order matrices are diagonalizable, so the
    /// multiplicities sum to n.
    pub fn eigenvalue_multiplicities(&self, m: u64) -> Result<Vec<usize>> {
        assert!(self.is_square());
        if m == 0 || !self.pow(m).is_identity() {
            return Err(Error::NotFiniteOrder { order: m as usize });
        }
        let big = lcm(self.field.conductor(), m);
        let lifted = self.embed(big)?;
        let field = lifted.field().clone();
        let step = (big / m) as i64;
        let mults: Vec<usize> = (0..m as i64)
            .map(|j| lifted.minus_scalar(&CycNum::zeta_pow(&field, j * step)).kernel().dim())
            .collect();
        let total: usize = mults.iter().sum();
        if total != self.rows {
            return Err(Error::InternalInconsistency(format!(
                "eigenvalue multiplicities sum to {total}, expected {}",
                self.rows
            )));
        }
        Ok(mults)
    }
}

impl fmt::Debug for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            write!(f, "{}", row.join(", "))?;
        }
        write!(f, "]")
    }
}
