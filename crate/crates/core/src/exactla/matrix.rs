use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::Poly;
use super::scalar::{format_scalar, int, Scalar};
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Dense rational matrix, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn scalar_identity(n: usize, c: &Scalar) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    /// Builds a matrix from rows; panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged matrix rows");
            data.extend(row);
        }
        Self {
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    /// Builds a `rows × columns.len()` matrix whose `j`th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, x) in col.iter().enumerate() {
                if !x.is_zero() {
                    m[(i, j)] = x.clone();
                }
            }
        }
        m
    }

    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&x| int(x)).collect())
                .collect(),
        )
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
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

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Row-major flattening.
    pub fn as_slice(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        if c.is_zero() {
            return Matrix::zeros(self.rows, self.cols);
        }
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|x| if x.is_zero() { x.clone() } else { x * c })
                .collect(),
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c.is_zero() {
            return;
        }
        for (x, y) in self.data.iter_mut().zip(&other.data) {
            if !y.is_zero() {
                *x += c * y;
            }
        }
    }

    /// Linear combination `Σ coeffs[i] * mats[i]`; `shape` is used when all
    /// coefficients vanish.
    pub fn combination(coeffs: &[Scalar], mats: &[Matrix], shape: (usize, usize)) -> Matrix {
        let mut acc = Matrix::zeros(shape.0, shape.1);
        for (c, m) in coeffs.iter().zip(mats) {
            acc.add_scaled(c, m);
        }
        acc
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let mut out = vec![Scalar::zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self.data[i * self.cols + j];
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .fold(Scalar::zero(), |a, b| a + b)
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows = self.row_vectors();
        let pivots = rref_rows(&mut rows, self.cols);
        let mut out = Matrix::zeros(self.rows, self.cols);
        for (i, r) in rows.into_iter().enumerate() {
            out.data[i * self.cols..(i + 1) * self.cols].clone_from_slice(&r);
        }
        (out, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.row_vectors();
        rref_rows(&mut rows, self.cols).len()
    }

    pub fn kernel(&self) -> Subspace {
        let mut rows = self.row_vectors();
        let pivots = rref_rows(&mut rows, self.cols);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut vectors = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (r, &p) in pivots.iter().enumerate() {
                let x = &rows[r][free];
                if !x.is_zero() {
                    v[p] = -x.clone();
                }
            }
            vectors.push(v);
        }
        Subspace::span(self.cols, vectors)
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        Subspace::span(self.rows, self.columns())
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut rows: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| {
                    if i == j {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    }
                }));
                r
            })
            .collect();
        let pivots = rref_rows(&mut rows, 2 * n);
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_rows(
            rows.into_iter().map(|r| r[n..].to_vec()).collect(),
        ))
    }

    /// Kronecker product; `(a ⊗ b)[(i*p + k, j*q + l)] = a[(i, j)] * b[(k, l)]`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (p, q) = (other.rows, other.cols);
        let mut out = Matrix::zeros(self.rows * p, self.cols * q);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..p {
                    for l in 0..q {
                        let b = &other[(k, l)];
                        if !b.is_zero() {
                            out[(i * p + k, j * q + l)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    /// Characteristic polynomial `det(T·I − self)` (Faddeev–LeVerrier).
    pub fn char_poly(&self) -> Poly {
        assert!(
            self.is_square(),
            "characteristic polynomial of a non-square matrix"
        );
        let n = self.rows;
        let mut coeffs = vec![Scalar::zero(); n + 1];
        coeffs[n] = Scalar::one();
        let mut m = Matrix::zeros(n, n);
        for k in 1..=n {
            let mut next = self * &m;
            let c = coeffs[n - k + 1].clone();
            for i in 0..n {
                next[(i, i)] += &c;
            }
            m = next;
            let t = (self * &m).trace();
            coeffs[n - k] = -t / int(k as i64);
        }
        Poly::new(coeffs)
    }

    /// Monic polynomial of least degree annihilating `self`.
    pub fn min_poly(&self) -> Poly {
        assert!(
            self.is_square(),
            "minimal polynomial of a non-square matrix"
        );
        let n = self.rows;
        let mut span = Subspace::zero(n * n);
        let mut powers: Vec<Vec<Scalar>> = Vec::new();
        let mut current = Matrix::identity(n);
        loop {
            let v = current.data.clone();
            if span.contains(&v) {
                // Solve Σ c_i powers[i] = v.
                let k = powers.len();
                let mut cols = powers.clone();
                cols.push(v);
                let system = Matrix::from_columns(n * n, &cols);
                let ker = system.kernel();
                let w = ker
                    .basis()
                    .iter()
                    .find(|w| !w[k].is_zero())
                    .expect("dependency must involve the newest power")
                    .clone();
                let lead = w[k].clone();
                let coeffs: Vec<Scalar> = w.iter().map(|c| c / &lead).collect();
                return Poly::new(coeffs);
            }
            span.insert(&v);
            powers.push(v);
            current = &current * self;
        }
    }

    /// Distinct rational eigenvalues in increasing order.
    pub fn rational_eigenvalues(&self) -> Vec<Scalar> {
        self.char_poly().rational_roots()
    }

    /// One eigenvector for each distinct rational eigenvalue, taken as the
    /// first vector of the canonical basis of the eigenspace.
    pub fn rational_eigenvectors(&self) -> Vec<(Scalar, Vec<Scalar>)> {
        self.rational_eigenvalues()
            .into_iter()
            .map(|lambda| {
                let shifted = self - &Matrix::scalar_identity(self.rows, &lambda);
                let v = shifted.kernel().basis()[0].clone();
                (lambda, v)
            })
            .collect()
    }
}

/// In-place Gauss–Jordan elimination on `rows` (each of length `ncols`).
/// Returns the pivot columns; rows past the rank end up zero.
pub(crate) fn rref_rows(rows: &mut [Vec<Scalar>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let pivot_row = rows[r].clone();
        let support: Vec<usize> = (c..ncols).filter(|&j| !pivot_row[j].is_zero()).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for &j in &support {
                let delta = &factor * &pivot_row[j];
                row[j] -= delta;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;

    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let brow = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                let orow = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (o, b) in orow.iter_mut().zip(brow) {
                    if !b.is_zero() {
                        *o += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), rhs);
        out
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), rhs);
        out
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        self.scale(&-Scalar::one())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(format_scalar).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::scalar::frac;

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(2).kernel().is_zero());
        let k = Matrix::from_ints(&[[1, 1], [1, 1]]).kernel();
        assert_eq!(k.basis(), &[vec![int(1), int(-1)]]);
        assert_eq!(Matrix::zeros(3, 3).kernel(), Subspace::full(3));
    }

    #[test]
    fn inverse_and_singular() {
        let m = Matrix::from_ints(&[[2, 1], [1, 1]]);
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert!(matches!(
            Matrix::from_ints(&[[1, 2], [2, 4]]).inverse(),
            Err(Error::Singular)
        ));
    }

    #[test]
    fn eigenvectors() {
        let d = Matrix::diagonal(&[int(2), int(3)]);
        assert_eq!(
            d.rational_eigenvectors(),
            vec![
                (int(2), vec![int(1), int(0)]),
                (int(3), vec![int(0), int(1)])
            ]
        );
        let swap = Matrix::from_ints(&[[0, 1], [1, 0]]);
        assert_eq!(
            swap.rational_eigenvectors(),
            vec![
                (int(-1), vec![int(1), int(-1)]),
                (int(1), vec![int(1), int(1)])
            ]
        );
        let rot = Matrix::from_ints(&[[0, -1], [1, 0]]);
        assert!(rot.rational_eigenvectors().is_empty());
    }

    #[test]
    fn kron_of_nilpotent_units() {
        let n = Matrix::from_ints(&[[0, 1], [0, 0]]);
        let k = n.kron(&n);
        let mut expected = Matrix::zeros(4, 4);
        expected[(0, 3)] = int(1);
        assert_eq!(k, expected);
    }

    #[test]
    fn polynomials_of_a_jordan_block() {
        let j = Matrix::from_rows(vec![
            vec![frac(1, 2), int(1), int(0)],
            vec![int(0), frac(1, 2), int(0)],
            vec![int(0), int(0), frac(1, 2)],
        ]);
        let cp = j.char_poly();
        let mp = j.min_poly();
        assert_eq!(cp.degree(), Some(3));
        assert_eq!(mp.degree(), Some(2));
        assert!(mp.eval_matrix(&j).is_zero());
        assert!(cp.rem(&mp).is_zero());
        assert_eq!(j.rational_eigenvalues(), vec![frac(1, 2)]);
    }
}
