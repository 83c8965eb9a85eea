use num_traits::{One, Zero};

use super::matrix::{rref_rows, Matrix};
use super::scalar::{is_zero_vector, unit_vector, zero_vector, Scalar};

/// Subspace of `K^n` stored by its reduced row echelon basis.
///
/// The basis is canonical, so two subspaces are equal exactly when their
/// stored bases are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: (0..ambient).map(|i| unit_vector(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span<I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let mut rows: Vec<Vec<Scalar>> = vectors
            .into_iter()
            .inspect(|v| assert_eq!(v.len(), ambient, "vector length mismatch"))
            .collect();
        let pivots = rref_rows(&mut rows, ambient);
        rows.truncate(pivots.len());
        Self {
            ambient,
            basis: rows,
            pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// Reduced row echelon basis.
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Matrix whose columns are the basis vectors.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.ambient, &self.basis)
    }

    /// Residue of `v` after eliminating the pivot coordinates; zero exactly
    /// when `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let c = out[p].clone();
            for (o, r) in out.iter_mut().zip(row).skip(p) {
                if !r.is_zero() {
                    *o -= &c * r;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vector(&self.reduce(v))
    }

    /// Adds `v` to the subspace; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        if !inv.is_one() {
            for x in r.iter_mut().skip(p) {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        for row in self.basis.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r).skip(p) {
                if !y.is_zero() {
                    *x -= &c * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, r);
        true
    }

    /// Coordinates of `v` with respect to [`Self::basis`], or `None` if `v` is
    /// not in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Vector with the given coordinates.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim(), "coordinate length mismatch");
        let mut out = zero_vector(self.ambient);
        for (c, row) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o += c * r;
                }
            }
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.dim() <= other.dim() && self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut out = self.clone();
        for v in &other.basis {
            out.insert(v);
        }
        out
    }

    /// Linear functionals vanishing on the subspace, as vectors.
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.ambient);
        }
        Matrix::from_rows(self.basis.clone()).kernel()
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        let mut rows = self.annihilator();
        for v in other.annihilator().basis() {
            rows.insert(v);
        }
        if rows.is_zero() {
            return Subspace::full(self.ambient);
        }
        Matrix::from_rows(rows.basis).kernel()
    }

    pub fn image_under(&self, m: &Matrix) -> Subspace {
        Subspace::span(m.rows(), self.basis.iter().map(|v| m.mul_vec(v)))
    }

    pub fn is_invariant_under(&self, m: &Matrix) -> bool {
        self.basis.iter().all(|v| self.contains(&m.mul_vec(v)))
    }

    /// Matrix of `m` restricted to an invariant subspace, in basis
    /// coordinates. `None` if the subspace is not invariant.
    pub fn restrict_map(&self, m: &Matrix) -> Option<Matrix> {
        let cols: Option<Vec<Vec<Scalar>>> = self
            .basis
            .iter()
            .map(|v| self.coordinates(&m.mul_vec(v)))
            .collect();
        Some(Matrix::from_columns(self.dim(), &cols?))
    }

    /// Standard basis vectors at the non-pivot coordinates; they span a
    /// complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }
}

/// Quotient `outer / inner` of nested subspaces of `K^n`, with a fixed
/// complement of `inner` inside `outer` giving coordinates on the quotient.
#[derive(Clone, Debug)]
pub struct Quotient {
    outer: Subspace,
    inner: Subspace,
    /// `inner` expressed in coordinates of `outer`.
    inner_coords: Subspace,
    /// Positions (in `outer` coordinates) spanning the complement.
    complement: Vec<usize>,
}

impl Quotient {
    /// `None` if `inner` is not contained in `outer`.
    pub fn new(outer: Subspace, inner: Subspace) -> Option<Self> {
        let coords: Option<Vec<Vec<Scalar>>> =
            inner.basis().iter().map(|v| outer.coordinates(v)).collect();
        let inner_coords = Subspace::span(outer.dim(), coords?);
        let complement = inner_coords.complement_indices();
        Some(Self {
            outer,
            inner,
            inner_coords,
            complement,
        })
    }

    /// `K^n / inner`.
    pub fn of_ambient(inner: Subspace) -> Self {
        let outer = Subspace::full(inner.ambient());
        Self::new(outer, inner).expect("every subspace lies in the ambient space")
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    pub fn outer(&self) -> &Subspace {
        &self.outer
    }

    pub fn inner(&self) -> &Subspace {
        &self.inner
    }

    /// Class of `v`; panics if `v` is not in the outer subspace.
    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let c = self
            .outer
            .coordinates(v)
            .expect("vector outside the outer subspace");
        let r = self.inner_coords.reduce(&c);
        self.complement.iter().map(|&j| r[j].clone()).collect()
    }

    /// Representative of a class in the fixed complement.
    pub fn lift(&self, q: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(q.len(), self.dim(), "quotient coordinate length mismatch");
        let mut c = zero_vector(self.outer.dim());
        for (x, &j) in q.iter().zip(&self.complement) {
            c[j] = x.clone();
        }
        self.outer.combine(&c)
    }

    /// Matrix of the map induced by `m` on the quotient. `m` must preserve
    /// both subspaces.
    pub fn induced_map(&self, m: &Matrix) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|k| self.project(&m.mul_vec(&self.lift(&unit_vector(self.dim(), k)))))
            .collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    /// Matrix (`dim × n`) of the projection when the outer subspace is the
    /// whole ambient space.
    pub fn projection_matrix(&self) -> Matrix {
        assert!(
            self.outer.is_full(),
            "projection needs the full ambient space"
        );
        let n = self.outer.ambient();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|i| self.project(&unit_vector(n, i))).collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    /// Matrix (`n × dim`) of [`Self::lift`].
    pub fn section_matrix(&self) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|k| self.lift(&unit_vector(self.dim(), k)))
            .collect();
        Matrix::from_columns(self.outer.ambient(), &cols)
    }

    /// Preimage in `K^n` of a subspace of the quotient (given in quotient
    /// coordinates): the span of its lifts together with `inner`.
    pub fn preimage(&self, sub: &Subspace) -> Subspace {
        let mut out = self.inner.clone();
        for v in sub.basis() {
            out.insert(&self.lift(v));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::scalar::int;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn insert_keeps_canonical_form() {
        let mut s = Subspace::zero(3);
        assert!(s.insert(&v(&[0, 2, 2])));
        assert!(s.insert(&v(&[1, 1, 0])));
        assert!(!s.insert(&v(&[1, 3, 2])));
        assert_eq!(s, Subspace::span(3, vec![v(&[1, 0, -1]), v(&[0, 1, 1])]));
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::span(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(a.intersection(&b), Subspace::span(3, vec![v(&[0, 1, 0])]));
        assert!(a.sum(&b).is_full());
        assert!(a.intersection(&Subspace::zero(3)).is_zero());
    }

    #[test]
    fn quotient_round_trip() {
        let outer = Subspace::span(3, vec![v(&[1, 0, 0]), v(&[0, 1, 1])]);
        let inner = Subspace::span(3, vec![v(&[1, 1, 1])]);
        let q = Quotient::new(outer, inner.clone()).unwrap();
        assert_eq!(q.dim(), 1);
        let x = v(&[2, 1, 1]);
        let back = q.lift(&q.project(&x));
        let diff: Vec<Scalar> = x.iter().zip(&back).map(|(a, b)| a - b).collect();
        assert!(inner.contains(&diff));
        assert!(Quotient::new(Subspace::zero(3), inner).is_none());
    }
}
