use alloc::vec::Vec;
use core::fmt;

use super::{Ring, Scalar};

/// Which space a canonical form preserves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CanonicalMode {
    /// Reduced row echelon form, zero rows dropped.
    Row,
    /// Reduced column echelon form, zero columns dropped.
    Column,
}

/// Dense row-major matrix over a [`Ring`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(ring: Ring, rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        Matrix {
            ring,
            rows,
            cols,
            data,
        }
    }

    pub fn zeros(ring: Ring, rows: usize, cols: usize) -> Self {
        Matrix {
            ring,
            rows,
            cols,
            data: alloc::vec![ring.zero(); rows * cols],
        }
    }

    pub fn identity(ring: Ring, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.data[i * n + i] = ring.one();
        }
        m
    }

    pub fn from_ints(ring: Ring, rows: usize, cols: usize, xs: &[i64]) -> Self {
        Self::new(ring, rows, cols, xs.iter().map(|&x| ring.int(x)).collect())
    }

    pub fn from_rows(ring: Ring, cols: usize, rows: &[Vec<Scalar>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row has wrong length");
            data.extend_from_slice(r);
        }
        Matrix {
            ring,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_cols(ring: Ring, rows: usize, cols: &[Vec<Scalar>]) -> Self {
        Self::from_rows(ring, rows, cols).transpose()
    }

    pub fn diagonal(ring: Ring, diag: &[Scalar]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(ring, n, n);
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * n + i] = d;
        }
        m
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Scalar> {
        self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.ring, self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j));
            }
        }
        Matrix {
            ring: self.ring,
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.ring.zero();
                for (a, &b) in self.row(i).iter().zip(v) {
                    if !b.is_zero() {
                        acc += *a * b;
                    }
                }
                acc
            })
            .collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.rows, v.len(), "vector-matrix shape mismatch");
        let mut out = alloc::vec![self.ring.zero(); self.cols];
        for (i, &c) in v.iter().enumerate() {
            super::vector::axpy(&mut out, c, self.row(i));
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| a + b)
            .collect();
        Matrix {
            ring: self.ring,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| a - b)
            .collect();
        Matrix {
            ring: self.ring,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: Scalar) -> Matrix {
        let data = self.data.iter().map(|&a| c * a).collect();
        Matrix {
            ring: self.ring,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Commutator `AB - BA`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Matrix {
            ring: self.ring,
            rows: self.rows,
            cols,
            data,
        }
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            ring: self.ring,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Matrix {
            ring: self.ring,
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.rows);
        for i in 0..self.rows {
            for &j in idx {
                data.push(self.get(i, j));
            }
        }
        Matrix {
            ring: self.ring,
            rows: self.rows,
            cols: idx.len(),
            data,
        }
    }

    /// Gauss-Jordan elimination. Returns the reduced row echelon form (same
    /// shape, zero rows at the bottom) and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place(self.cols);
        (m, pivots)
    }

    /// Reduces using only the first `limit` columns as pivot candidates.
    fn rref_in_place(&mut self, limit: usize) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..limit {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self.data[i * cols + c].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = self.data[r * cols + c].inv().expect("nonzero pivot");
            if !inv.is_one() {
                for j in c..cols {
                    let v = self.data[r * cols + j];
                    self.data[r * cols + j] = v * inv;
                }
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self.data[i * cols + c];
                if f.is_zero() {
                    continue;
                }
                for j in c..cols {
                    let v = self.data[r * cols + j];
                    if !v.is_zero() {
                        self.data[i * cols + j] -= f * v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn canonical_form(&self, mode: CanonicalMode) -> Matrix {
        match mode {
            CanonicalMode::Row => {
                let (m, piv) = self.rref();
                m.select_rows(&(0..piv.len()).collect::<Vec<_>>())
            }
            CanonicalMode::Column => self
                .transpose()
                .canonical_form(CanonicalMode::Row)
                .transpose(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn det(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.data.clone();
        let mut det = self.ring.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[i * n + c].is_zero()) else {
                return self.ring.zero();
            };
            if p != c {
                for j in 0..n {
                    m.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let pivot = m[c * n + c];
            det *= pivot;
            let inv = pivot.inv().unwrap();
            for i in c + 1..n {
                let f = m[i * n + c] * inv;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = m[c * n + j];
                    m[i * n + j] -= f * v;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = self.hstack(&Matrix::identity(self.ring, n));
        let piv = aug.rref_in_place(n);
        if piv.len() < n {
            return None;
        }
        Some(aug.select_cols(&(n..2 * n).collect::<Vec<_>>()))
    }

    /// Particular solution of `self · x = b` with free variables set to zero.
    pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows, "solve shape mismatch");
        let n = self.cols;
        let mut aug = self.hstack(b);
        let piv = aug.rref_in_place(n);
        // Inconsistent iff a zero row of the coefficient block has a nonzero
        // right-hand side.
        for i in piv.len()..aug.rows {
            if aug.row(i)[n..].iter().any(|x| !x.is_zero()) {
                return None;
            }
        }
        let mut x = Matrix::zeros(self.ring, n, b.cols);
        for (r, &c) in piv.iter().enumerate() {
            for j in 0..b.cols {
                x.set(c, j, aug.get(r, n + j));
            }
        }
        Some(x)
    }

    pub fn solve_vec(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        let bm = Matrix::new(self.ring, b.len(), 1, b.to_vec());
        self.solve(&bm).map(|x| x.data)
    }

    /// Basis of the right kernel as the rows of the result, one row per free
    /// column in increasing order.
    pub fn kernel(&self) -> Matrix {
        let (r, piv) = self.rref();
        let n = self.cols;
        let free: Vec<usize> = (0..n).filter(|c| !piv.contains(c)).collect();
        let mut out = Matrix::zeros(self.ring, free.len(), n);
        for (k, &f) in free.iter().enumerate() {
            out.set(k, f, self.ring.one());
            for (i, &p) in piv.iter().enumerate() {
                out.set(k, p, -r.get(i, f));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Matrix {
        let mut acc = Matrix::identity(self.ring, self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Ring {
        Ring::Prime(5)
    }

    #[test]
    fn zero_matrix_reduces_to_nothing() {
        let m = Matrix::zeros(Ring::Rational, 2, 2);
        let c = m.canonical_form(CanonicalMode::Row);
        assert_eq!(c.rows(), 0);
    }

    #[test]
    fn scaling_to_pivot_one() {
        let q = Ring::Rational;
        let c = Matrix::from_ints(q, 1, 2, &[2, 4]).canonical_form(CanonicalMode::Row);
        assert_eq!(c, Matrix::from_ints(q, 1, 2, &[1, 2]));
    }

    #[test]
    fn small_f5_reduction() {
        let c = Matrix::from_ints(f5(), 2, 2, &[1, 1, 1, 2]).canonical_form(CanonicalMode::Row);
        assert_eq!(c, Matrix::identity(f5(), 2));
    }

    #[test]
    fn column_form() {
        let q = Ring::Rational;
        let c = Matrix::from_ints(q, 2, 1, &[2, 2]).canonical_form(CanonicalMode::Column);
        assert_eq!(c, Matrix::from_ints(q, 2, 1, &[1, 1]));
    }

    #[test]
    fn solve_examples() {
        let q = Ring::Rational;
        let b = Matrix::from_ints(q, 2, 1, &[3, 4]);
        assert_eq!(Matrix::identity(q, 2).solve(&b).unwrap(), b);
        let x = Matrix::from_ints(q, 1, 1, &[2])
            .solve(&Matrix::from_ints(q, 1, 1, &[1]))
            .unwrap();
        assert_eq!(x.get(0, 0), q.ratio(1, 2));
        let a = Matrix::from_ints(q, 2, 2, &[1, 0, 0, 0]);
        assert!(a.solve(&Matrix::from_ints(q, 2, 1, &[0, 1])).is_none());
        // free variable set to zero
        let a = Matrix::from_ints(q, 1, 2, &[1, 1]);
        let x = a.solve(&Matrix::from_ints(q, 1, 1, &[3])).unwrap();
        assert_eq!(x, Matrix::from_ints(q, 2, 1, &[3, 0]));
    }

    #[test]
    fn det_and_inverse() {
        let q = Ring::Rational;
        let a = Matrix::from_ints(q, 3, 3, &[2, 0, 1, 1, 3, 2, 1, 1, 1]);
        // cofactor expansion along the first row: 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(a.det(), q.zero());
        assert!(a.inverse().is_none());
        let b = Matrix::from_ints(q, 2, 2, &[1, 2, 3, 4]);
        assert_eq!(b.det(), q.int(-2));
        let bi = b.inverse().unwrap();
        assert!(b.mul(&bi).is_identity());
        assert_eq!(bi.get(0, 0), q.int(-2));
        assert_eq!(bi.get(1, 0), q.ratio(3, 2));
    }

    #[test]
    fn kernel_basis() {
        let q = Ring::Rational;
        let a = Matrix::from_ints(q, 2, 3, &[1, 1, 0, 0, 0, 1]);
        let k = a.kernel();
        assert_eq!(k, Matrix::from_ints(q, 1, 3, &[-1, 1, 0]));
        assert!(a.mul(&k.transpose()).is_zero());
    }
}
