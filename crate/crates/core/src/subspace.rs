//! Subspaces of GF(p)^n with canonical RREF bases, quotient projections,
//! and exhaustive enumeration of all d-dimensional subspaces.

use crate::error::{Error, Result};
use crate::matrix::PrimeFieldMatrix;

/// A linear subspace of GF(p)^n. The basis rows are kept in reduced row
/// echelon form, so two subspaces are equal iff their representations are.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: PrimeFieldMatrix,
}

impl Subspace {
    pub fn zero(ambient: usize, modulus: u64) -> Result<Self> {
        Ok(Subspace { ambient, basis: PrimeFieldMatrix::zero(0, ambient, modulus)? })
    }

    pub fn full(ambient: usize, modulus: u64) -> Result<Self> {
        Ok(Subspace { ambient, basis: PrimeFieldMatrix::identity(ambient, modulus)? })
    }

    /// Span of the given vectors.
    pub fn from_rows(rows: &[Vec<u64>], ambient: usize, modulus: u64) -> Result<Self> {
        let m = PrimeFieldMatrix::from_rows(rows, ambient, modulus)?;
        Ok(Subspace { ambient, basis: m.rref().0.drop_zero_rows() })
    }

    /// Wrap a matrix whose row space is the subspace.
    pub fn from_row_space(m: &PrimeFieldMatrix) -> Self {
        Subspace { ambient: m.cols(), basis: m.rref().0.drop_zero_rows() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn modulus(&self) -> u64 {
        self.basis.modulus()
    }

    pub fn basis(&self) -> &PrimeFieldMatrix {
        &self.basis
    }

    pub fn contains_vector(&self, v: &[u64]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in ambient dimension {}",
                v.len(),
                self.ambient
            )));
        }
        let stacked = self.basis.stack(&PrimeFieldMatrix::from_rows(
            &[v.to_vec()],
            self.ambient,
            self.modulus(),
        )?)?;
        Ok(stacked.rank() == self.dim())
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        if other.ambient != self.ambient {
            return Err(Error::DimensionMismatch("subspace ambient dimensions differ".into()));
        }
        Ok(self.basis.stack(&other.basis)?.rank() == self.dim())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if other.ambient != self.ambient {
            return Err(Error::DimensionMismatch("subspace ambient dimensions differ".into()));
        }
        Ok(Subspace::from_row_space(&self.basis.stack(&other.basis)?))
    }

    /// Express each of the given vectors in this basis: returns the
    /// coefficient matrix C with basis^T * C = vectors-as-columns, or None
    /// when some vector lies outside the subspace.
    ///
    /// Because the basis is in RREF, the coefficient of a vector on basis
    /// row i is just its entry at the i-th pivot column.
    pub fn express_columns(&self, vectors: &[Vec<u64>]) -> Result<Option<PrimeFieldMatrix>> {
        let p = self.modulus();
        let (_, pivots) = self.basis.rref();
        let mut coeff_cols = Vec::with_capacity(vectors.len());
        for v in vectors {
            if v.len() != self.ambient {
                return Err(Error::DimensionMismatch("vector length differs from ambient".into()));
            }
            let coeffs: Vec<u64> = pivots.iter().map(|&c| v[c] % p).collect();
            // verify v = sum coeffs_i * basis_i
            for j in 0..self.ambient {
                let mut acc = 0u64;
                for (i, &c) in coeffs.iter().enumerate() {
                    acc = (acc + c * self.basis.get(i, j)) % p;
                }
                if acc != v[j] % p {
                    return Ok(None);
                }
            }
            coeff_cols.push(coeffs);
        }
        Ok(Some(PrimeFieldMatrix::from_columns(&coeff_cols, self.dim(), p)?))
    }
}

/// Kernel of a matrix, as a subspace of the source.
pub fn kernel(m: &PrimeFieldMatrix) -> Subspace {
    Subspace { ambient: m.cols(), basis: m.null_space_rows() }
}

/// Image (column space) of a matrix, as a subspace of the target.
pub fn image(m: &PrimeFieldMatrix) -> Subspace {
    Subspace::from_row_space(&m.transpose())
}

/// Surjection GF(p)^n -> GF(p)^(n-k) whose kernel is the given subspace,
/// together with a right inverse section. Coset representatives are read
/// off the non-pivot coordinates of the RREF basis.
pub fn quotient_projection(sub: &Subspace) -> Result<(PrimeFieldMatrix, PrimeFieldMatrix)> {
    let n = sub.ambient_dim();
    let p = sub.modulus();
    let (basis, pivots) = sub.basis.rref();
    let pivot_set: Vec<bool> = {
        let mut v = vec![false; n];
        for &c in &pivots {
            v[c] = true;
        }
        v
    };
    let non_pivots: Vec<usize> = (0..n).filter(|&c| !pivot_set[c]).collect();
    let q_dim = non_pivots.len();
    // Column j of Q is the reduction of e_j modulo the basis, restricted to
    // the non-pivot coordinates.
    let mut q = PrimeFieldMatrix::zero(q_dim, n, p)?;
    for j in 0..n {
        let mut v = vec![0u64; n];
        v[j] = 1;
        for (i, &c) in pivots.iter().enumerate() {
            let factor = v[c];
            if factor == 0 {
                continue;
            }
            for t in 0..n {
                let sub_val = factor * basis.get(i, t) % p;
                v[t] = (v[t] + crate::field::neg_mod(sub_val, p)) % p;
            }
        }
        for (out_row, &c) in non_pivots.iter().enumerate() {
            q.set(out_row, j, v[c]);
        }
    }
    let mut section = PrimeFieldMatrix::zero(n, q_dim, p)?;
    for (j, &c) in non_pivots.iter().enumerate() {
        section.set(c, j, 1);
    }
    Ok((q, section))
}

/// Surjection with kernel equal to the image of `m`.
pub fn cokernel_projection(m: &PrimeFieldMatrix) -> Result<PrimeFieldMatrix> {
    Ok(quotient_projection(&image(m))?.0)
}

/// Whether `x` lies in the subspace sum `l + l_s`.
pub fn sum_contains(l: &Subspace, l_s: &Subspace, x: &[u64]) -> Result<bool> {
    if l.ambient_dim() != l_s.ambient_dim() || x.len() != l.ambient_dim() {
        return Err(Error::DimensionMismatch("sum_contains ambient dimensions differ".into()));
    }
    let stacked = l.basis.stack(&l_s.basis)?;
    let base_rank = stacked.rank();
    let with_x =
        stacked.stack(&PrimeFieldMatrix::from_rows(&[x.to_vec()], x.len(), l.modulus())?)?;
    Ok(with_x.rank() == base_rank)
}

/// Gaussian binomial coefficient: the number of d-dimensional subspaces of
/// GF(p)^n, via the q-Pascal recurrence. Errors if the value overflows u128.
pub fn gaussian_binomial(n: usize, d: usize, p: u64) -> Result<u128> {
    if d > n {
        return Ok(0);
    }
    let overflow = || Error::Precondition("gaussian binomial overflow".into());
    let mut row: Vec<u128> = vec![1];
    for _ in 1..=n {
        let mut next = vec![1u128; row.len() + 1];
        for k in 1..row.len() {
            // [m choose k] = [m-1 choose k-1] + p^k [m-1 choose k]
            let mut power: u128 = 1;
            for _ in 0..k {
                power = power.checked_mul(p as u128).ok_or_else(overflow)?;
            }
            let scaled = row[k].checked_mul(power).ok_or_else(overflow)?;
            next[k] = row[k - 1].checked_add(scaled).ok_or_else(overflow)?;
        }
        row = next;
    }
    Ok(row[d])
}

/// Deterministic stream of all d-dimensional subspaces of GF(p)^n, ordered
/// lexicographically by RREF pivot pattern and then by the free entries.
pub fn enumerate_subspaces(
    ambient: usize,
    dim: usize,
    modulus: u64,
    budget: u128,
) -> Result<SubspaceIter> {
    crate::field::check_prime(modulus)?;
    if dim > ambient {
        return Err(Error::Precondition(format!(
            "subspace dimension {dim} exceeds ambient dimension {ambient}"
        )));
    }
    let count = gaussian_binomial(ambient, dim, modulus)?;
    if count > budget {
        return Err(Error::BudgetExceeded { needed: count, budget });
    }
    Ok(SubspaceIter::new(ambient, dim, modulus))
}

#[derive(Debug)]
pub struct SubspaceIter {
    ambient: usize,
    dim: usize,
    modulus: u64,
    pivots: Vec<usize>,
    free_positions: Vec<(usize, usize)>,
    free_values: Vec<u64>,
    exhausted: bool,
    fresh_pattern: bool,
}

impl SubspaceIter {
    fn new(ambient: usize, dim: usize, modulus: u64) -> Self {
        let pivots: Vec<usize> = (0..dim).collect();
        let mut it = SubspaceIter {
            ambient,
            dim,
            modulus,
            pivots,
            free_positions: Vec::new(),
            free_values: Vec::new(),
            exhausted: false,
            fresh_pattern: true,
        };
        it.reset_free_positions();
        it
    }

    fn reset_free_positions(&mut self) {
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.ambient];
            for &c in &self.pivots {
                v[c] = true;
            }
            v
        };
        self.free_positions.clear();
        for i in 0..self.dim {
            for j in (self.pivots[i] + 1)..self.ambient {
                if !pivot_set[j] {
                    self.free_positions.push((i, j));
                }
            }
        }
        self.free_values = vec![0; self.free_positions.len()];
        self.fresh_pattern = true;
    }

    fn advance_pattern(&mut self) -> bool {
        // next d-subset of {0..ambient-1} in lexicographic order
        let n = self.ambient;
        let d = self.dim;
        if d == 0 {
            return false;
        }
        let mut i = d;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if self.pivots[i] + 1 <= n - (d - i) {
                self.pivots[i] += 1;
                for k in i + 1..d {
                    self.pivots[k] = self.pivots[k - 1] + 1;
                }
                if self.pivots[d - 1] < n {
                    return true;
                }
            }
        }
    }

    fn current(&self) -> Subspace {
        let p = self.modulus;
        let mut basis = PrimeFieldMatrix::zero(self.dim, self.ambient, p).expect("basis");
        for (i, &c) in self.pivots.iter().enumerate() {
            basis.set(i, c, 1);
        }
        for (k, &(i, j)) in self.free_positions.iter().enumerate() {
            basis.set(i, j, self.free_values[k]);
        }
        Subspace { ambient: self.ambient, basis }
    }

    fn advance_values(&mut self) -> bool {
        // odometer with the first position most significant
        let p = self.modulus;
        let mut k = self.free_values.len();
        while k > 0 {
            k -= 1;
            self.free_values[k] += 1;
            if self.free_values[k] < p {
                return true;
            }
            self.free_values[k] = 0;
        }
        false
    }
}

impl Iterator for SubspaceIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.exhausted {
            return None;
        }
        if self.dim == 0 {
            self.exhausted = true;
            return Some(Subspace::zero(self.ambient, self.modulus).expect("zero subspace"));
        }
        if self.fresh_pattern {
            self.fresh_pattern = false;
            return Some(self.current());
        }
        if self.advance_values() {
            return Some(self.current());
        }
        if self.advance_pattern() {
            self.reset_free_positions();
            self.fresh_pattern = false;
            return Some(self.current());
        }
        self.exhausted = true;
        None
    }
}
