use std::fmt;

use num_traits::Zero;

use super::sparse::{self, SparseVec};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar};

/// Which identity the product is meant to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Lie,
    Associative,
    Plain,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::Lie => "lie",
            Flavor::Associative => "assoc",
            Flavor::Plain => "plain",
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A finite-dimensional algebra `(A, ·, α)` given by structure constants
/// `e_i · e_j = Σ_k c[i][j][k] e_k` and a twist matrix.
///
/// Products of basis elements are stored sparsely, indexed `i * dim + j`.
#[derive(Clone, PartialEq, Eq)]
pub struct HomAlgebra {
    dim: usize,
    flavor: Flavor,
    products: Vec<SparseVec>,
    twist: Matrix,
    twist_cols: Vec<SparseVec>,
}

impl HomAlgebra {
    /// Builds an algebra from basis products. For `Flavor::Lie` the table
    /// must already be anticommutative.
    pub fn from_sparse(
        flavor: Flavor,
        dim: usize,
        products: Vec<SparseVec>,
        twist: Matrix,
    ) -> Result<Self> {
        if products.len() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "expected {} basis products, got {}",
                dim * dim,
                products.len()
            )));
        }
        if twist.rows() != dim || twist.cols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "twist is {}x{}, algebra has dimension {dim}",
                twist.rows(),
                twist.cols()
            )));
        }
        let products: Vec<SparseVec> = products.into_iter().map(sparse::normalize).collect();
        if products.iter().flatten().any(|(k, _)| *k >= dim) {
            return Err(Error::DimensionMismatch(
                "product has a coordinate outside the algebra".into(),
            ));
        }
        if flavor == Flavor::Lie {
            for i in 0..dim {
                for j in i..dim {
                    let a = &products[i * dim + j];
                    let b = &products[j * dim + i];
                    if !sparse::add_all([a, b]).is_empty() {
                        return Err(Error::NotAnticommutative(i, j));
                    }
                }
            }
        }
        let twist_cols = (0..dim)
            .map(|j| sparse::from_dense(&twist.column(j)))
            .collect();
        Ok(Self {
            dim,
            flavor,
            products,
            twist,
            twist_cols,
        })
    }

    /// Builds an algebra from a function returning the dense product
    /// `e_i · e_j`.
    pub fn from_fn(
        flavor: Flavor,
        dim: usize,
        twist: Matrix,
        mut f: impl FnMut(usize, usize) -> Vec<Scalar>,
    ) -> Result<Self> {
        let mut products = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                products.push(sparse::from_dense(&f(i, j)));
            }
        }
        Self::from_sparse(flavor, dim, products, twist)
    }

    /// Builds an algebra from a full tensor `c[i][j][k]`.
    pub fn from_structure(
        flavor: Flavor,
        structure: &[Vec<Vec<Scalar>>],
        twist: Matrix,
    ) -> Result<Self> {
        let dim = structure.len();
        for row in structure {
            if row.len() != dim || row.iter().any(|v| v.len() != dim) {
                return Err(Error::DimensionMismatch(
                    "structure tensor is not cubic".into(),
                ));
            }
        }
        Self::from_fn(flavor, dim, twist, |i, j| structure[i][j].clone())
    }

    /// Hom-Lie algebra from the brackets `[e_i, e_j]` with `i < j` (the rest
    /// is filled in by antisymmetry). A repeated pair is rejected.
    pub fn lie_from_brackets(
        dim: usize,
        brackets: &[(usize, usize, SparseVec)],
        twist: Matrix,
    ) -> Result<Self> {
        let mut products: Vec<SparseVec> = vec![Vec::new(); dim * dim];
        let mut seen = vec![false; dim * dim];
        for (i, j, v) in brackets {
            let (i, j) = (*i, *j);
            if i >= dim || j >= dim {
                return Err(Error::DimensionMismatch(format!(
                    "bracket ({i}, {j}) outside dimension {dim}"
                )));
            }
            let v = sparse::normalize(v.clone());
            if i == j {
                if !v.is_empty() {
                    return Err(Error::NotAnticommutative(i, i));
                }
                continue;
            }
            if seen[i * dim + j] {
                return Err(Error::NotAnticommutative(i, j));
            }
            seen[i * dim + j] = true;
            seen[j * dim + i] = true;
            products[j * dim + i] = sparse::scale(&v, &-Scalar::from_integer(1.into()));
            products[i * dim + j] = v;
        }
        Self::from_sparse(Flavor::Lie, dim, products, twist)
    }

    pub fn abelian(dim: usize, twist: Matrix) -> Result<Self> {
        Self::from_sparse(Flavor::Lie, dim, vec![Vec::new(); dim * dim], twist)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn twist(&self) -> &Matrix {
        &self.twist
    }

    /// Same product, different twist.
    pub fn with_twist(&self, twist: Matrix) -> Result<Self> {
        Self::from_sparse(self.flavor, self.dim, self.products.clone(), twist)
    }

    pub fn with_flavor(&self, flavor: Flavor) -> Result<Self> {
        Self::from_sparse(flavor, self.dim, self.products.clone(), self.twist.clone())
    }

    /// `e_i · e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.products[i * self.dim + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.basis_product(i, j)
            .iter()
            .find(|(m, _)| *m == k)
            .map_or_else(Scalar::zero, |(_, c)| c.clone())
    }

    /// Full tensor `c[i][j][k]`.
    pub fn structure_tensor(&self) -> Vec<Vec<Vec<Scalar>>> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| sparse::to_dense(self.basis_product(i, j), self.dim))
                    .collect()
            })
            .collect()
    }

    /// True when every basis product vanishes.
    pub fn has_zero_product(&self) -> bool {
        self.products.iter().all(Vec::is_empty)
    }

    /// `α(e_j)` as a sparse vector.
    pub fn twist_column(&self, j: usize) -> &SparseVec {
        &self.twist_cols[j]
    }

    pub fn twist_sparse(&self, x: &[(usize, Scalar)]) -> SparseVec {
        let mut terms = Vec::new();
        for (j, c) in x {
            terms.extend(self.twist_cols[*j].iter().map(|(k, a)| (*k, a * c)));
        }
        sparse::normalize(terms)
    }

    pub fn apply_twist(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.twist.mul_vec(x)
    }

    /// Product of sparse vectors.
    pub fn mul_sparse(&self, x: &[(usize, Scalar)], y: &[(usize, Scalar)]) -> SparseVec {
        let mut terms = Vec::new();
        for (i, a) in x {
            for (j, b) in y {
                let p = &self.products[i * self.dim + j];
                if p.is_empty() {
                    continue;
                }
                let ab = a * b;
                terms.extend(p.iter().map(|(k, c)| (*k, c * &ab)));
            }
        }
        sparse::normalize(terms)
    }

    /// Product of dense vectors.
    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let p = self.mul_sparse(&sparse::from_dense(x), &sparse::from_dense(y));
        sparse::to_dense(&p, self.dim)
    }

    /// Matrix of `y ↦ x · y` (the adjoint map for a Lie bracket).
    pub fn left_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let xs = sparse::from_dense(x);
        let cols: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|j| sparse::to_dense(&self.mul_sparse(&xs, &[(j, one())]), self.dim))
            .collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// Matrix of `y ↦ y · x`.
    pub fn right_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let xs = sparse::from_dense(x);
        let cols: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|j| sparse::to_dense(&self.mul_sparse(&[(j, one())], &xs), self.dim))
            .collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// Matrix of `y ↦ e_i · y`.
    pub fn left_mult_basis(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in self.basis_product(i, j) {
                m[(*k, j)] = c.clone();
            }
        }
        m
    }

    /// Matrix of `y ↦ y · e_i`.
    pub fn right_mult_basis(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in self.basis_product(j, i) {
                m[(*k, j)] = c.clone();
            }
        }
        m
    }
}

fn one() -> Scalar {
    Scalar::from_integer(1.into())
}

impl fmt::Debug for HomAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HomAlgebra")
            .field("dim", &self.dim)
            .field("flavor", &self.flavor)
            .field("products", &self.products)
            .field("twist", &self.twist)
            .finish()
    }
}
