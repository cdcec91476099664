//! Dense complex matrices and vectors sized for small systems (dimension <= 16).
//!
//! Everything is stored row-major over `num_complex::Complex64`. Values are
//! immutable after construction and every operation returns a fresh value, so
//! the whole module is safe to use from concurrent callers.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Relative pivot cutoff for Gaussian elimination: a pivot below
/// `SINGULARITY_CUTOFF * max |entry|` classifies the matrix as singular.
pub const SINGULARITY_CUTOFF: f64 = 1e-12;

const MAX_JACOBI_SWEEPS: usize = 64;

/// Dense complex vector.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexVector {
    data: Vec<Complex64>,
}

impl ComplexVector {
    /// Builds a vector, rejecting empty or non-finite input.
    pub fn new(data: Vec<Complex64>) -> Result<Self> {
        if data.is_empty() {
            return Err(Error::LengthMismatch {
                what: "vector entries",
                len: 0,
                expected: 1,
            });
        }
        if !data.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::NonFinite { what: "vector" });
        }
        Ok(Self { data })
    }

    pub fn from_real(entries: &[f64]) -> Result<Self> {
        Self::new(entries.iter().map(|&r| Complex64::new(r, 0.0)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            data: vec![Complex64::new(0.0, 0.0); dim],
        }
    }

    /// Computational basis vector with a single unit entry at `index`.
    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::Domain(format!(
                "basis index {index} out of range for dimension {dim}"
            )));
        }
        let mut v = Self::zeros(dim);
        v.data[index] = Complex64::new(1.0, 0.0);
        Ok(v)
    }

    pub fn dim(&self) -> usize {
        self.data.len()
    }

    pub fn get(&self, i: usize) -> Complex64 {
        self.data[i]
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn norm_sqr(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Inner product `<self|other>`, conjugate-linear in `self`.
    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(Error::ShapeMismatch {
                op: "inner product",
                lhs_rows: self.dim(),
                lhs_cols: 1,
                rhs_rows: other.dim(),
                rhs_cols: 1,
            });
        }
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn conjugate(&self) -> Self {
        Self {
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::ShapeMismatch {
                op: "vector addition",
                lhs_rows: self.dim(),
                lhs_cols: 1,
                rhs_rows: other.dim(),
                rhs_cols: 1,
            });
        }
        Ok(Self {
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::ShapeMismatch {
                op: "vector subtraction",
                lhs_rows: self.dim(),
                lhs_cols: 1,
                rhs_rows: other.dim(),
                rhs_cols: 1,
            });
        }
        Ok(Self {
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Unit-norm copy; errors on the zero vector.
    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n <= 0.0 {
            return Err(Error::NotNormalized {
                what: "vector (zero norm)",
                value: 0.0,
            });
        }
        Ok(self.scale(Complex64::new(1.0 / n, 0.0)))
    }

    /// Largest elementwise distance to `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.dim() == other.dim() && self.max_abs_diff(other) <= tol
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
    /// Builds a matrix from row-major data, rejecting shape/finiteness violations.
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Domain(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::LengthMismatch {
                what: "matrix entries",
                len: data.len(),
                expected: rows * cols,
            });
        }
        if !data.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::NonFinite { what: "matrix" });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Domain("ragged rows in matrix literal".into()));
        }
        Self::new(r, c, rows.concat())
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let lifted: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|row| row.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&lifted)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..m.rows {
            m.data[i * m.cols + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn diag(entries: &[Complex64]) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::Domain("empty diagonal".into()));
        }
        let mut m = Self::zeros(n, n);
        for (i, &z) in entries.iter().enumerate() {
            m.set(i, i, z);
        }
        Ok(m)
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
        debug_assert!(row < self.rows && col < self.cols);
        self.data[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        debug_assert!(row < self.rows && col < self.cols);
        self.data[row * self.cols + col] = value;
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch {
                op: "matrix product",
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: rhs.rows,
                rhs_cols: rhs.cols,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..self.cols {
                    acc += self.get(i, k) * rhs.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Matrix-vector product `self * v`.
    pub fn matvec(&self, v: &ComplexVector) -> Result<ComplexVector> {
        if self.cols != v.dim() {
            return Err(Error::ShapeMismatch {
                op: "matrix-vector product",
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: v.dim(),
                rhs_cols: 1,
            });
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.rows];
        for (i, out_i) in out.iter_mut().enumerate() {
            for k in 0..self.cols {
                *out_i += self.get(i, k) * v.get(k);
            }
        }
        Ok(ComplexVector { data: out })
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, "matrix addition", |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, "matrix subtraction", |a, b| a - b)
    }

    fn zip_with(
        &self,
        rhs: &Self,
        op: &'static str,
        f: impl Fn(Complex64, Complex64) -> Complex64,
    ) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::ShapeMismatch {
                op,
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: rhs.rows,
                rhs_cols: rhs.cols,
            });
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn conjugate(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        self.transpose().conjugate()
    }

    /// Kronecker product: the block at `(i, j)` with offset `(k, l)` is
    /// `self[i, j] * rhs[k, l]`.
    pub fn kron(&self, rhs: &Self) -> Self {
        let mut out = Self::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        out.set(i * rhs.rows + k, j * rhs.cols + l, a * rhs.get(k, l));
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Result<Complex64> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok((0..self.rows).map(|i| self.get(i, i)).sum())
    }

    /// Hilbert-Schmidt inner product `Tr(self† * rhs)`.
    pub fn hs_inner(&self, rhs: &Self) -> Result<Complex64> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::ShapeMismatch {
                op: "Hilbert-Schmidt inner product",
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: rhs.rows,
                rhs_cols: rhs.cols,
            });
        }
        Ok(self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Frobenius norm (equals the Hilbert-Schmidt norm).
    pub fn frobenius_norm(&self) -> f64 {
        self.data
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.max_abs_diff(other) <= tol
    }

    /// Inverse by Gauss-Jordan elimination with partial pivoting.
    ///
    /// A pivot magnitude at or below `SINGULARITY_CUTOFF * max |entry|` raises
    /// [`Error::Singular`] carrying the offending (smallest) pivot magnitude.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let threshold = SINGULARITY_CUTOFF * self.max_abs();
        let mut work = self.clone();
        let mut inv = Self::identity(n);

        for col in 0..n {
            let pivot_row = (col..n)
                .max_by(|&a, &b| {
                    work.get(a, col)
                        .norm()
                        .partial_cmp(&work.get(b, col).norm())
                        .unwrap()
                })
                .unwrap();
            let pivot = work.get(pivot_row, col);
            let pivot_mag = pivot.norm();
            if pivot_mag <= threshold {
                return Err(Error::Singular {
                    pivot: pivot_mag,
                    threshold,
                });
            }
            if pivot_row != col {
                work.swap_rows(pivot_row, col);
                inv.swap_rows(pivot_row, col);
            }
            let inv_pivot = Complex64::new(1.0, 0.0) / pivot;
            for j in 0..n {
                let w = work.get(col, j) * inv_pivot;
                work.set(col, j, w);
                let v = inv.get(col, j) * inv_pivot;
                inv.set(col, j, v);
            }
            for row in 0..n {
                if row == col {
                    continue;
                }
                let factor = work.get(row, col);
                if factor.norm() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    let w = work.get(row, j) - factor * work.get(col, j);
                    work.set(row, j, w);
                    let v = inv.get(row, j) - factor * inv.get(col, j);
                    inv.set(row, j, v);
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations, sorted
    /// descending. The input is symmetrized first, so small Hermiticity
    /// violations from rounding are tolerated.
    pub fn hermitian_eigenvalues(&self) -> Result<Vec<f64>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut h = self.add(&self.adjoint())?.scale(Complex64::new(0.5, 0.0));
        if n == 1 {
            return Ok(vec![h.get(0, 0).re]);
        }

        let scale = h.frobenius_norm();
        let off_target = (1e-14 * scale).max(f64::MIN_POSITIVE);

        for sweep in 0..MAX_JACOBI_SWEEPS {
            let off: f64 = (0..n)
                .flat_map(|p| (0..n).filter(move |&q| q != p).map(move |q| (p, q)))
                .map(|(p, q)| h.get(p, q).norm_sqr())
                .sum::<f64>()
                .sqrt();
            if off <= off_target {
                let mut eigs: Vec<f64> = (0..n).map(|i| h.get(i, i).re).collect();
                eigs.sort_by(|a, b| b.partial_cmp(a).unwrap());
                return Ok(eigs);
            }
            if sweep == MAX_JACOBI_SWEEPS - 1 {
                break;
            }
            for p in 0..n - 1 {
                for q in p + 1..n {
                    jacobi_rotate(&mut h, p, q);
                }
            }
        }
        Err(Error::NoConvergence {
            sweeps: MAX_JACOBI_SWEEPS,
        })
    }

    /// Singular values, sorted descending: square roots of the eigenvalues of
    /// `self† * self` (cyclic Jacobi on the Hermitian form).
    pub fn singular_values(&self) -> Result<Vec<f64>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let gram = self.adjoint().mul(self)?;
        let eigs = gram.hermitian_eigenvalues()?;
        Ok(eigs.into_iter().map(|e| e.max(0.0).sqrt()).collect())
    }

    /// True iff `‖self† self − I‖_F <= tol`.
    pub fn is_unitary(&self, tol: f64) -> bool {
        if !self.is_square() {
            return false;
        }
        let gram = self.adjoint().mul(self).expect("square product");
        let residual = gram
            .sub(&Self::identity(self.rows))
            .expect("same shape")
            .frobenius_norm();
        residual <= tol
    }

    /// Orthonormalizes the columns by modified Gram-Schmidt. A unitary input
    /// is returned unchanged up to rounding. Errors on (numerically)
    /// rank-deficient columns.
    pub fn orthonormalized_columns(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut cols: Vec<ComplexVector> = (0..n)
            .map(|j| ComplexVector {
                data: (0..n).map(|i| self.get(i, j)).collect(),
            })
            .collect();
        let floor = 1e-10 * self.max_abs().max(1.0);
        for j in 0..n {
            for k in 0..j {
                let overlap = cols[k].inner(&cols[j])?;
                cols[j] = cols[j].sub(&cols[k].scale(overlap))?;
            }
            let norm = cols[j].norm();
            if norm <= floor {
                return Err(Error::Singular {
                    pivot: norm,
                    threshold: floor,
                });
            }
            cols[j] = cols[j].scale(Complex64::new(1.0 / norm, 0.0));
        }
        let mut out = Self::zeros(n, n);
        for (j, col) in cols.iter().enumerate() {
            for i in 0..n {
                out.set(i, j, col.get(i));
            }
        }
        Ok(out)
    }
}

/// One Jacobi rotation zeroing `h[p][q]` of a Hermitian matrix via the
/// unitary similarity `h <- V† h V`, where `V` embeds the 2x2 eigenbasis of
/// the `(p, q)` subproblem.
fn jacobi_rotate(h: &mut ComplexMatrix, p: usize, q: usize) {
    let g = h.get(p, q);
    let d = g.norm();
    if d == 0.0 {
        return;
    }
    let phase = g / d; // e^{i arg(g)}
    let a = h.get(p, p).re;
    let b = h.get(q, q).re;
    let tau = (b - a) / (2.0 * d);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    let n = h.rows();
    // Column update: K = h * V.
    for i in 0..n {
        let hp = h.get(i, p);
        let hq = h.get(i, q) * phase.conj();
        h.set(i, p, hp * c - hq * s);
        h.set(i, q, hp * s + hq * c);
    }
    // Row update: h = V† * K.
    for j in 0..n {
        let hp = h.get(p, j);
        let hq = h.get(q, j) * phase;
        h.set(p, j, hp * c - hq * s);
        h.set(q, j, hp * s + hq * c);
    }
    // The rotated pair is real by construction; clear rounding residue.
    let hpp = h.get(p, p);
    h.set(p, p, Complex64::new(hpp.re, 0.0));
    let hqq = h.get(q, q);
    h.set(q, q, Complex64::new(hqq.re, 0.0));
    h.set(p, q, Complex64::new(0.0, 0.0));
    h.set(q, p, Complex64::new(0.0, 0.0));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn mat2(a: f64, b: f64, cc: f64, d: f64) -> ComplexMatrix {
        ComplexMatrix::from_real_rows(&[vec![a, b], vec![cc, d]]).unwrap()
    }

    #[test]
    fn matmul_reproduces_bell_products() {
        let y = mat2(0.0, -1.0, 1.0, 0.0);
        let id = ComplexMatrix::identity(2);
        assert!(y.mul(&id).unwrap().approx_eq(&y, 0.0));

        let x = mat2(0.0, 1.0, 1.0, 0.0);
        assert!(x.mul(&x).unwrap().approx_eq(&id, 0.0));

        let minus_id = id.scale(c(-1.0, 0.0));
        assert!(y.mul(&y).unwrap().approx_eq(&minus_id, 0.0));
    }

    #[test]
    fn matmul_rejects_shape_mismatch() {
        let a = ComplexMatrix::zeros(2, 3);
        let b = ComplexMatrix::zeros(2, 3);
        match a.mul(&b) {
            Err(Error::ShapeMismatch {
                lhs_rows: 2,
                lhs_cols: 3,
                rhs_rows: 2,
                rhs_cols: 3,
                ..
            }) => {}
            other => panic!("expected shape mismatch, got {other:?}"),
        }
    }

    #[test]
    fn constructors_reject_non_finite() {
        let err = ComplexMatrix::new(1, 1, vec![c(f64::NAN, 0.0)]).unwrap_err();
        assert!(matches!(err, Error::NonFinite { .. }));
        let err = ComplexVector::new(vec![c(0.0, f64::INFINITY)]).unwrap_err();
        assert!(matches!(err, Error::NonFinite { .. }));
    }

    #[test]
    fn inverse_of_quarter_turns() {
        let id = ComplexMatrix::identity(3);
        assert!(id.inverse().unwrap().approx_eq(&id, 0.0));

        let m = mat2(0.0, 1.0, -1.0, 0.0);
        let expected = mat2(0.0, -1.0, 1.0, 0.0);
        assert!(m.inverse().unwrap().approx_eq(&expected, 1e-15));
    }

    #[test]
    fn inverse_multiplies_back_to_identity() {
        let m = ComplexMatrix::from_rows(&[
            vec![c(1.0, 0.5), c(2.0, -1.0), c(0.0, 0.3)],
            vec![c(-1.0, 0.0), c(1.5, 0.7), c(2.0, 0.0)],
            vec![c(0.4, -0.2), c(0.0, 1.0), c(1.0, 1.0)],
        ])
        .unwrap();
        let inv = m.inverse().unwrap();
        let product = m.mul(&inv).unwrap();
        let residual = product
            .sub(&ComplexMatrix::identity(3))
            .unwrap()
            .frobenius_norm();
        assert!(residual <= 3.0 * 1e-12, "residual {residual}");
    }

    #[test]
    fn inverse_reports_failing_pivot() {
        let m = mat2(1.0, 2.0, 2.0, 4.0);
        match m.inverse() {
            Err(Error::Singular { pivot, threshold }) => {
                assert!(pivot <= threshold);
            }
            other => panic!("expected singularity, got {other:?}"),
        }
    }

    #[test]
    fn adjoint_transpose_conjugate_agree() {
        let m = ComplexMatrix::from_rows(&[
            vec![c(1.0, 2.0), c(0.0, -1.0)],
            vec![c(3.0, 0.0), c(-2.0, 5.0)],
        ])
        .unwrap();
        assert_eq!(m.adjoint(), m.transpose().conjugate());
        assert_eq!(m.adjoint().adjoint(), m);

        let y_complex =
            ComplexMatrix::from_rows(&[vec![c(0.0, 0.0), c(0.0, -1.0)], vec![c(0.0, 1.0), c(0.0, 0.0)]])
                .unwrap();
        let conj = y_complex.conjugate();
        assert_eq!(conj.get(0, 1), c(0.0, 1.0));
        assert_eq!(conj.get(1, 0), c(0.0, -1.0));

        let y = mat2(0.0, -1.0, 1.0, 0.0);
        assert!(y.transpose().approx_eq(&mat2(0.0, 1.0, -1.0, 0.0), 0.0));
    }

    #[test]
    fn kron_places_blocks_and_dimensions() {
        let id2 = ComplexMatrix::identity(2);
        assert!(id2.kron(&id2).approx_eq(&ComplexMatrix::identity(4), 0.0));

        // Basis column tensor: e_i (x) e_j lands at index i*N + j.
        let e0 = ComplexMatrix::new(2, 1, vec![c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        let e1 = ComplexMatrix::new(2, 1, vec![c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        let t = e0.kron(&e1);
        assert_eq!(t.rows(), 4);
        assert_eq!(t.get(1, 0), c(1.0, 0.0));

        let a = ComplexMatrix::zeros(2, 3);
        let b = ComplexMatrix::zeros(4, 5);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (8, 15));
    }

    #[test]
    fn singular_values_of_diagonal_and_bell_composition() {
        let half = mat2(0.5, 0.0, 0.0, 0.5);
        let sv = half.singular_values().unwrap();
        assert!((sv[0] - 0.5).abs() < 1e-14 && (sv[1] - 0.5).abs() < 1e-14);

        let d = mat2(0.8, 0.0, 0.0, 0.2);
        let sv = d.singular_values().unwrap();
        assert!((sv[0] - 0.8).abs() < 1e-14 && (sv[1] - 0.2).abs() < 1e-14);

        // Bell measurement against Bell channel: both singular values 1/2.
        let inv_sqrt2 = 1.0 / 2.0_f64.sqrt();
        let bell = ComplexMatrix::identity(2).scale(c(inv_sqrt2, 0.0));
        let m = bell.conjugate().mul(&bell).unwrap();
        let sv = m.singular_values().unwrap();
        assert!((sv[0] - 0.5).abs() < 1e-12 && (sv[1] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn unitarity_predicate() {
        assert!(ComplexMatrix::identity(4).is_unitary(1e-12));
        let theta: f64 = 0.7;
        let reflection = mat2(theta.cos(), theta.sin(), theta.sin(), -theta.cos());
        assert!(reflection.is_unitary(1e-9));
        assert!(!mat2(0.8, 0.0, 0.0, 0.2).is_unitary(1e-9));
    }

    #[test]
    fn gram_schmidt_fixes_unitary_input() {
        let theta: f64 = 1.2;
        let rotation = mat2(theta.cos(), -theta.sin(), theta.sin(), theta.cos());
        let q = rotation.orthonormalized_columns().unwrap();
        assert!(q.approx_eq(&rotation, 1e-14));
        assert!(q.is_unitary(1e-12));
    }

    #[test]
    fn hermitian_eigenvalues_of_known_matrix() {
        // [[2, i], [-i, 2]] has eigenvalues 3 and 1.
        let h = ComplexMatrix::from_rows(&[
            vec![c(2.0, 0.0), c(0.0, 1.0)],
            vec![c(0.0, -1.0), c(2.0, 0.0)],
        ])
        .unwrap();
        let eigs = h.hermitian_eigenvalues().unwrap();
        assert!((eigs[0] - 3.0).abs() < 1e-12);
        assert!((eigs[1] - 1.0).abs() < 1e-12);
    }
}
