//! Dense complex vectors and matrices sized for small gate problems.
//!
//! Everything is stored row-major over `num_complex::Complex64`. The types are
//! immutable values in practice: operations return fresh allocations, nothing
//! here holds shared mutable state.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A complex column vector (quantum state vector when unit norm).
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexVector {
    data: Vec<Complex64>,
}

impl ComplexVector {
    pub fn new(data: Vec<Complex64>) -> Self {
        Self { data }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            data: vec![Complex64::ZERO; dim],
        }
    }

    /// Computational basis state |index⟩ in `dim` dimensions.
    pub fn basis_state(dim: usize, index: usize) -> Self {
        assert!(index < dim, "basis index out of range");
        let mut data = vec![Complex64::ZERO; dim];
        data[index] = Complex64::ONE;
        Self { data }
    }

    pub fn from_real(reals: &[f64]) -> Self {
        Self {
            data: reals.iter().map(|&r| Complex64::new(r, 0.0)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.data.len()
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn get(&self, i: usize) -> Complex64 {
        self.data[i]
    }

    pub fn set(&mut self, i: usize, value: Complex64) {
        self.data[i] = value;
    }

    pub fn norm(&self) -> f64 {
        self.data.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm();
        assert!(n > 0.0, "cannot normalize the zero vector");
        self.scale(Complex64::new(1.0 / n, 0.0))
    }

    /// Inner product ⟨self|other⟩ (conjugate-linear in `self`).
    pub fn inner(&self, other: &ComplexVector) -> Complex64 {
        assert_eq!(self.dim(), other.dim(), "inner product dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            data: self.data.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn add(&self, other: &ComplexVector) -> Self {
        assert_eq!(self.dim(), other.dim(), "addition dimension mismatch");
        Self {
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &ComplexVector) -> Self {
        assert_eq!(self.dim(), other.dim(), "subtraction dimension mismatch");
        Self {
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Tensor product |self⟩ ⊗ |other⟩.
    pub fn tensor(&self, other: &ComplexVector) -> Self {
        let mut data = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.data {
            for b in &other.data {
                data.push(a * b);
            }
        }
        Self { data }
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &ComplexVector) -> f64 {
        assert_eq!(self.dim(), other.dim(), "comparison dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Rotate `self` by the global phase that maximizes |⟨target|self⟩| overlap
    /// alignment, so the two can be compared entrywise.
    pub fn phase_aligned_to(&self, target: &ComplexVector) -> Self {
        let overlap = self.inner(target);
        if overlap.norm() == 0.0 {
            return self.clone();
        }
        self.scale(overlap / overlap.norm())
    }

    /// Entrywise distance after optimal global-phase alignment.
    pub fn distance_up_to_phase(&self, other: &ComplexVector) -> f64 {
        self.phase_aligned_to(other).max_abs_diff(other)
    }

    /// Fix the global phase so the largest-magnitude entry is real positive.
    /// Ties within a small relative window resolve to the earliest index.
    pub fn canonicalized(&self) -> Self {
        let max = self.max_abs();
        if max == 0.0 {
            return self.clone();
        }
        let idx = self
            .data
            .iter()
            .position(|c| c.norm() >= max * (1.0 - 1e-6))
            .unwrap();
        let pivot = self.data[idx];
        self.scale(pivot.conj() / pivot.norm())
    }
}

/// Dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix must be at least 1x1");
        assert_eq!(data.len(), rows * cols, "data length must match dimensions");
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![Complex64::ZERO; rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Complex64::ONE);
        }
        m
    }

    pub fn diagonal(diag: &[Complex64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, &v) in diag.iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    /// Build from nested rows; every row must have the same length.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        let r = rows.len();
        assert!(r >= 1, "need at least one row");
        let c = rows[0].len();
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        Self::new(r, c, data)
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Self {
        let converted: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|row| row.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&converted)
    }

    pub fn from_columns(cols: &[ComplexVector]) -> Self {
        assert!(!cols.is_empty(), "need at least one column");
        let n = cols[0].dim();
        let mut m = Self::zeros(n, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.dim(), n, "ragged columns");
            for i in 0..n {
                m.set(i, j, col.get(i));
            }
        }
        m
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

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        self.data[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        self.data[row * self.cols + col] = value;
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn column(&self, j: usize) -> ComplexVector {
        assert!(j < self.cols, "column out of bounds");
        ComplexVector::new((0..self.rows).map(|i| self.get(i, j)).collect())
    }

    pub fn columns(&self) -> Vec<ComplexVector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).conj());
            }
        }
        m
    }

    pub fn matmul(&self, other: &ComplexMatrix) -> Self {
        assert_eq!(self.cols, other.rows, "matmul dimension mismatch");
        let mut m = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == Complex64::ZERO {
                    continue;
                }
                for j in 0..other.cols {
                    let v = m.get(i, j) + a * other.get(k, j);
                    m.set(i, j, v);
                }
            }
        }
        m
    }

    pub fn matvec(&self, v: &ComplexVector) -> ComplexVector {
        assert_eq!(self.cols, v.dim(), "matvec dimension mismatch");
        let mut out = ComplexVector::zeros(self.rows);
        for i in 0..self.rows {
            let mut sum = Complex64::ZERO;
            for j in 0..self.cols {
                sum += self.get(i, j) * v.get(j);
            }
            out.set(i, sum);
        }
        out
    }

    pub fn add(&self, other: &ComplexMatrix) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "addition dimension mismatch"
        );
        Self::new(
            self.rows,
            self.cols,
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &ComplexMatrix) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "subtraction dimension mismatch"
        );
        Self::new(
            self.rows,
            self.cols,
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self::new(
            self.rows,
            self.cols,
            self.data.iter().map(|c| c * factor).collect(),
        )
    }

    /// Kronecker product self ⊗ other.
    pub fn tensor(&self, other: &ComplexMatrix) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut m = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        m.set(i * other.rows + k, j * other.cols + l, a * other.get(k, l));
                    }
                }
            }
        }
        m
    }

    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square(), "trace requires a square matrix");
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    /// Entrywise max-modulus norm.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        self.sub(other).max_abs()
    }

    /// ‖M†M − I‖_max.
    pub fn unitarity_error(&self) -> f64 {
        let n = self.rows;
        self.adjoint()
            .matmul(self)
            .max_abs_diff(&ComplexMatrix::identity(n))
    }

    /// True iff the matrix is unitary: ‖M†M − I‖_max ≤ tol.
    pub fn is_unitary(&self, tol: f64) -> Result<bool> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "unitarity check requires a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(self.unitarity_error() <= tol)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        if !self.is_square() {
            return false;
        }
        self.max_abs_diff(&self.adjoint()) <= tol
    }

    /// ‖AB − BA‖_max.
    pub fn commutator_norm(&self, other: &ComplexMatrix) -> f64 {
        self.matmul(other).max_abs_diff(&other.matmul(self))
    }

    /// Assemble V·diag(values)·V† from an orthonormal column basis.
    pub fn from_eigen(vectors: &ComplexMatrix, values: &[Complex64]) -> Self {
        assert_eq!(vectors.cols(), values.len(), "eigenpair count mismatch");
        vectors
            .matmul(&ComplexMatrix::diagonal(values))
            .matmul(&vectors.adjoint())
    }
}

/// Gram matrix G[r][s] = ⟨state_r|state_s⟩ of a family of equal-length vectors.
pub fn gram(states: &[ComplexVector]) -> Result<ComplexMatrix> {
    if states.is_empty() {
        return Err(Error::Dimension("gram of an empty family".into()));
    }
    let dim = states[0].dim();
    for (i, s) in states.iter().enumerate() {
        if s.dim() != dim {
            return Err(Error::Dimension(format!(
                "state {} has dimension {}, expected {}",
                i,
                s.dim(),
                dim
            )));
        }
    }
    let k = states.len();
    let mut g = ComplexMatrix::zeros(k, k);
    for r in 0..k {
        for s in 0..k {
            g.set(r, s, states[r].inner(&states[s]));
        }
    }
    Ok(g)
}
