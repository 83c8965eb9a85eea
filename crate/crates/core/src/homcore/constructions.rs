use super::algebra::{Flavor, HomAlgebra};
use super::checks::{check_homomorphism, check_jacobi, check_multiplicative};
use super::sparse::{self, SparseVec};
use super::structure::is_ideal;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Quotient, Subspace};

fn require_lie(l: &HomAlgebra) -> Result<()> {
    if l.flavor() != Flavor::Lie {
        return Err(Error::PreconditionFailed(format!(
            "expected a lie algebra, got flavor {}",
            l.flavor()
        )));
    }
    Ok(())
}

/// `(L, φ∘[·,·], φ)` for a Lie algebra `L` (identity twist) and an
/// endomorphism `φ` of it.
pub fn yau_twist(l: &HomAlgebra, phi: &Matrix) -> Result<HomAlgebra> {
    require_lie(l)?;
    if !l.twist().is_identity() {
        return Err(Error::PreconditionFailed(
            "yau twist needs an identity twist".into(),
        ));
    }
    if phi.rows() != l.dim() || phi.cols() != l.dim() {
        return Err(Error::DimensionMismatch(format!(
            "endomorphism is {}x{}, algebra has dimension {}",
            phi.rows(),
            phi.cols(),
            l.dim()
        )));
    }
    check_jacobi(l).into_result(|v| Error::PreconditionFailed(v.to_string()))?;
    check_homomorphism(l, l, phi).into_result(Error::NotAHomomorphism)?;
    let d = l.dim();
    let products = (0..d * d)
        .map(|ij| {
            let p = sparse::to_dense(l.basis_product(ij / d, ij % d), d);
            sparse::from_dense(&phi.mul_vec(&p))
        })
        .collect();
    HomAlgebra::from_sparse(Flavor::Lie, d, products, phi.clone())
}

/// `(L, α⁻¹∘[·,·], id)` for a multiplicative nondegenerate Hom-Lie algebra.
pub fn untwist(l: &HomAlgebra) -> Result<HomAlgebra> {
    require_lie(l)?;
    let inv = l.twist().inverse().map_err(|_| Error::DegenerateTwist)?;
    check_multiplicative(l).into_result(|v| Error::PreconditionFailed(v.to_string()))?;
    let d = l.dim();
    let products = (0..d * d)
        .map(|ij| {
            let p = sparse::to_dense(l.basis_product(ij / d, ij % d), d);
            sparse::from_dense(&inv.mul_vec(&p))
        })
        .collect();
    HomAlgebra::from_sparse(Flavor::Lie, d, products, Matrix::identity(d))
}

/// Index of `e_i ⊗ t^p` in the current algebra over an algebra of
/// dimension `dim` (`1 ≤ p`).
pub fn current_index(dim: usize, p: usize, i: usize) -> usize {
    (p - 1) * dim + i
}

/// `L ⊗ tK[t]/(tⁿ)` with basis `e_i ⊗ t^p`, `1 ≤ p < n`, bracket
/// `[x⊗tᵖ, y⊗t^q] = [x,y]⊗t^{p+q}` and twist `α ⊗ id`.
pub fn current_algebra(l: &HomAlgebra, n: usize) -> Result<HomAlgebra> {
    if n < 2 {
        return Err(Error::PreconditionFailed(format!(
            "current algebra needs n >= 2, got {n}"
        )));
    }
    let d = l.dim();
    let big = d * (n - 1);
    let mut products: Vec<SparseVec> = vec![Vec::new(); big * big];
    let mut twist = Matrix::zeros(big, big);
    for p in 1..n {
        for i in 0..d {
            let a = current_index(d, p, i);
            for (k, c) in l.twist_column(i) {
                twist[(current_index(d, p, *k), a)] = c.clone();
            }
            for q in 1..n - p {
                for j in 0..d {
                    let b = current_index(d, q, j);
                    products[a * big + b] = l
                        .basis_product(i, j)
                        .iter()
                        .map(|(k, c)| (current_index(d, p + q, *k), c.clone()))
                        .collect();
                }
            }
        }
    }
    HomAlgebra::from_sparse(l.flavor(), big, products, twist)
}

/// `L / I` on the complement spanned by the non-pivot basis vectors of `I`.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    pub algebra: HomAlgebra,
    pub quotient: Quotient,
    /// `dim(L/I) × dim(L)` projection matrix.
    pub projection: Matrix,
}

pub fn quotient_algebra(l: &HomAlgebra, ideal: &Subspace) -> Result<QuotientAlgebra> {
    if ideal.ambient() != l.dim() {
        return Err(Error::DimensionMismatch(
            "ideal lives in another space".into(),
        ));
    }
    if !is_ideal(l, ideal) {
        return Err(Error::NotAnIdeal);
    }
    let quotient = Quotient::of_ambient(ideal.clone());
    let reps = ideal.complement_indices();
    let q = reps.len();
    let d = l.dim();
    let project = |v: &SparseVec| sparse::from_dense(&quotient.project(&sparse::to_dense(v, d)));
    let mut products = Vec::with_capacity(q * q);
    for &a in &reps {
        for &b in &reps {
            products.push(project(l.basis_product(a, b)));
        }
    }
    let twist_cols: Vec<_> = reps
        .iter()
        .map(|&a| quotient.project(&l.twist().column(a)))
        .collect();
    let twist = Matrix::from_columns(q, &twist_cols);
    let algebra = HomAlgebra::from_sparse(l.flavor(), q, products, twist)?;
    let projection = quotient.projection_matrix();
    check_homomorphism(l, &algebra, &projection).into_result(Error::NotAHomomorphism)?;
    Ok(QuotientAlgebra {
        algebra,
        quotient,
        projection,
    })
}

/// The Hom-subalgebra `S` in the coordinates of its canonical basis; the
/// inclusion is `sub.basis_matrix()`.
pub fn restrict_to_subalgebra(l: &HomAlgebra, sub: &Subspace) -> Result<HomAlgebra> {
    let d = l.dim();
    let s = sub.dim();
    let basis: Vec<SparseVec> = sub.basis().iter().map(|v| sparse::from_dense(v)).collect();
    let coords = |v: SparseVec| -> Result<SparseVec> {
        let dense = sparse::to_dense(&v, d);
        sub.coordinates(&dense)
            .map(|c| sparse::from_dense(&c))
            .ok_or_else(|| Error::PreconditionFailed("subspace is not a hom-subalgebra".into()))
    };
    let mut products = Vec::with_capacity(s * s);
    for a in &basis {
        for b in &basis {
            products.push(coords(l.mul_sparse(a, b))?);
        }
    }
    let mut twist = Matrix::zeros(s, s);
    for (j, a) in basis.iter().enumerate() {
        for (i, c) in coords(l.twist_sparse(a))? {
            twist[(i, j)] = c;
        }
    }
    HomAlgebra::from_sparse(l.flavor(), s, products, twist)
}

#[cfg(test)]
/// Basis vectors `e_i` for `i` in `indices`, as a subspace.
pub(crate) fn coordinate_span(dim: usize, indices: &[usize]) -> Subspace {
    Subspace::span(
        dim,
        indices.iter().map(|&i| crate::exactla::unit_vector(dim, i)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;
    use crate::fixtures;
    use crate::homcore::{check_hom_lie, check_nondegenerate, nilindex};

    #[test]
    fn yau_twist_of_heisenberg() {
        let h3 = fixtures::h3();
        let t = yau_twist(&h3, &Matrix::diagonal(&[int(2), int(3), int(6)])).unwrap();
        assert_eq!(t.structure_constant(0, 1, 2), int(6));
        assert!(check_hom_lie(&t).holds());
        assert!(check_multiplicative(&t).holds());
        assert_eq!(yau_twist(&h3, &Matrix::identity(3)).unwrap(), h3);
        let z = yau_twist(&h3, &Matrix::zeros(3, 3)).unwrap();
        assert!(z.has_zero_product());
        assert!(!check_nondegenerate(&z).holds());
        let bad = yau_twist(&h3, &Matrix::diagonal(&[int(1), int(1), int(2)]));
        assert!(matches!(bad, Err(Error::NotAHomomorphism(_))));
    }

    #[test]
    fn untwist_inverts_yau_twist() {
        assert_eq!(untwist(&fixtures::h3_lambda()).unwrap(), fixtures::h3());
        let deg = fixtures::h3().with_twist(Matrix::zeros(3, 3)).unwrap();
        assert!(matches!(untwist(&deg), Err(Error::DegenerateTwist)));
    }

    #[test]
    fn current_algebras() {
        let c = current_algebra(&fixtures::h3(), 3).unwrap();
        assert_eq!(c.dim(), 6);
        assert_eq!(c.structure_constant(0, 1, 5), int(1));
        assert!(check_hom_lie(&c).holds());
        assert!(current_algebra(&fixtures::h3(), 2)
            .unwrap()
            .has_zero_product());
        let cl = current_algebra(&fixtures::h3_lambda(), 3).unwrap();
        assert!(check_multiplicative(&cl).holds());
        assert_eq!(nilindex(&cl), Some(3));
    }

    #[test]
    fn quotients() {
        let h3 = fixtures::h3();
        let same = quotient_algebra(&h3, &Subspace::zero(3)).unwrap();
        assert_eq!(same.algebra, h3);
        let ab = quotient_algebra(&h3, &coordinate_span(3, &[2])).unwrap();
        assert_eq!(ab.algebra.dim(), 2);
        assert!(ab.algebra.has_zero_product());
        assert_eq!(
            quotient_algebra(&h3, &Subspace::full(3))
                .unwrap()
                .algebra
                .dim(),
            0
        );
        assert!(matches!(
            quotient_algebra(&h3, &coordinate_span(3, &[0])),
            Err(Error::NotAnIdeal)
        ));
    }
}
