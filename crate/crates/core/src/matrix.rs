//! Dense exact matrices over GF(p) and Gaussian elimination.
//!
//! Matrices act on column vectors: an m-by-n matrix is a homomorphism
//! GF(p)^n -> GF(p)^m. Zero-sized shapes are legal everywhere.

use crate::error::{Error, Result};
use crate::field::{check_prime, inv_mod, neg_mod};

#[derive(Clone, PartialEq, Eq)]
pub struct PrimeFieldMatrix {
    rows: usize,
    cols: usize,
    modulus: u64,
    data: Vec<u64>,
}

impl std::fmt::Debug for PrimeFieldMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "{}x{} mod {}", self.rows, self.cols, self.modulus)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        Ok(())
    }
}

impl PrimeFieldMatrix {
    pub fn zero(rows: usize, cols: usize, modulus: u64) -> Result<Self> {
        check_prime(modulus)?;
        Ok(PrimeFieldMatrix { rows, cols, modulus, data: vec![0; rows * cols] })
    }

    pub fn identity(n: usize, modulus: u64) -> Result<Self> {
        let mut m = Self::zero(n, n, modulus)?;
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        Ok(m)
    }

    pub fn from_rows(rows: &[Vec<u64>], cols: usize, modulus: u64) -> Result<Self> {
        check_prime(modulus)?;
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in matrix with {} columns",
                    row.len(),
                    cols
                )));
            }
            data.extend(row.iter().map(|&x| x % modulus));
        }
        Ok(PrimeFieldMatrix { rows: rows.len(), cols, modulus, data })
    }

    /// Matrix with the given vectors as columns.
    pub fn from_columns(columns: &[Vec<u64>], rows: usize, modulus: u64) -> Result<Self> {
        let mut m = Self::zero(rows, columns.len(), modulus)?;
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch(format!(
                    "column of length {} in matrix with {} rows",
                    col.len(),
                    rows
                )));
            }
            for (i, &x) in col.iter().enumerate() {
                m.data[i * m.cols + j] = x % modulus;
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: u64) {
        self.data[i * self.cols + j] = value % self.modulus;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = PrimeFieldMatrix {
            rows: self.cols,
            cols: self.rows,
            modulus: self.modulus,
            data: vec![0; self.data.len()],
        };
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    /// `self * rhs`, composing homomorphisms right to left.
    pub fn mul(&self, rhs: &PrimeFieldMatrix) -> Result<PrimeFieldMatrix> {
        if self.modulus != rhs.modulus {
            return Err(Error::ModulusMismatch(self.modulus, rhs.modulus));
        }
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose {}x{} with {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let p = self.modulus;
        let mut out = PrimeFieldMatrix {
            rows: self.rows,
            cols: rhs.cols,
            modulus: p,
            data: vec![0; self.rows * rhs.cols],
        };
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let cell = &mut out.data[i * rhs.cols + j];
                    *cell = (*cell + a * rhs.get(k, j)) % p;
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[u64]) -> Result<Vec<u64>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} applied to {}x{}",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        let p = self.modulus;
        let mut out = vec![0u64; self.rows];
        for i in 0..self.rows {
            let mut acc = 0u64;
            for j in 0..self.cols {
                acc = (acc + self.get(i, j) * (v[j] % p)) % p;
            }
            out[i] = acc;
        }
        Ok(out)
    }

    pub fn scale_row_vec(v: &[u64], c: u64, p: u64) -> Vec<u64> {
        v.iter().map(|&x| x * c % p).collect()
    }

    /// Stack the rows of `other` below the rows of `self`.
    pub fn stack(&self, other: &PrimeFieldMatrix) -> Result<PrimeFieldMatrix> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot stack {} columns on {} columns",
                other.cols, self.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(PrimeFieldMatrix { rows: self.rows + other.rows, cols: self.cols, modulus: self.modulus, data })
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (PrimeFieldMatrix, Vec<usize>) {
        let p = self.modulus;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let Some(row) = (pivot_row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            if row != pivot_row {
                for j in 0..m.cols {
                    m.data.swap(row * m.cols + j, pivot_row * m.cols + j);
                }
            }
            let inv = inv_mod(m.get(pivot_row, col), p);
            for j in 0..m.cols {
                let x = m.get(pivot_row, j);
                m.data[pivot_row * m.cols + j] = x * inv % p;
            }
            for r in 0..m.rows {
                if r == pivot_row {
                    continue;
                }
                let factor = m.get(r, col);
                if factor == 0 {
                    continue;
                }
                for j in 0..m.cols {
                    let x = m.get(r, j);
                    let sub = factor * m.get(pivot_row, j) % p;
                    m.data[r * m.cols + j] = (x + neg_mod(sub, p)) % p;
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    /// Dimension of the row space (equals the dimension of the column space).
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Rows spanning the null space `{x : self * x = 0}`, in RREF.
    pub fn null_space_rows(&self) -> PrimeFieldMatrix {
        let p = self.modulus;
        let (r, pivots) = self.rref();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|&c| !pivot_set[c]).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![0u64; self.cols];
            v[f] = 1;
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = neg_mod(r.get(i, f), p);
            }
            rows.push(v);
        }
        let basis = PrimeFieldMatrix::from_rows(&rows, self.cols, p).expect("null space rows");
        // Canonicalize: the raw basis need not be in RREF.
        basis.rref().0.drop_zero_rows()
    }

    /// Drop all-zero rows, keeping the rest in order.
    pub fn drop_zero_rows(&self) -> PrimeFieldMatrix {
        let rows: Vec<Vec<u64>> = (0..self.rows)
            .filter(|&i| self.row(i).iter().any(|&x| x != 0))
            .map(|i| self.row(i).to_vec())
            .collect();
        PrimeFieldMatrix::from_rows(&rows, self.cols, self.modulus).expect("drop rows")
    }
}
