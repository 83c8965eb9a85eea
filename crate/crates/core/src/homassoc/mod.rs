//! Hom-associative algebras `(x·y)·α(z) = α(x)·(y·z)`, their
//! representations, and the passage between faithful representations of a
//! Hom-Lie algebra and embeddings into commutator algebras.
//!
//! Action matrices act on column vectors and compose in the usual order.
//! In that convention the right and compatibility laws read
//! `ρ_R(x·y)∘β = ρ_R(α(y))∘ρ_R(x)` and `ρ_L(α(x))∘ρ_R(y) = ρ_R(α(y))∘ρ_L(x)`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar, Subspace};
use crate::homcore::{
    check_homomorphism, check_multiplicative, check_nondegenerate, sparse, Flavor, HomAlgebra,
    SparseVec,
};
use crate::homrep::{
    check_rep, check_rep_multiplicative, check_rep_nondegenerate, is_faithful, HomRepresentation,
    Orientation,
};
use crate::verdict::{Verdict, Violation};

/// `(eᵢ·eⱼ)·α(eₖ) = α(eᵢ)·(eⱼ·eₖ)` on all basis triples.
pub fn check_hom_associative(a: &HomAlgebra) -> Verdict {
    let d = a.dim();
    for i in 0..d {
        for j in 0..d {
            let left = a.basis_product(i, j);
            for k in 0..d {
                let right = a.basis_product(j, k);
                if left.is_empty() && right.is_empty() {
                    continue;
                }
                let lhs = a.mul_sparse(left, a.twist_column(k));
                let rhs = a.mul_sparse(a.twist_column(i), right);
                if lhs != rhs {
                    return Verdict::Fails(Violation::new(
                        "hom-associative",
                        vec![i, j, k],
                        sparse::to_dense(&sparse::sub(&lhs, &rhs), d),
                    ));
                }
            }
        }
    }
    Verdict::Holds
}

/// `[x, y] = x·y − y·x` with the same twist.
pub fn commutator_algebra(a: &HomAlgebra) -> HomAlgebra {
    let d = a.dim();
    let products = (0..d * d)
        .map(|ij| {
            sparse::sub(
                a.basis_product(ij / d, ij % d),
                a.basis_product(ij % d, ij / d),
            )
        })
        .collect();
    HomAlgebra::from_sparse(Flavor::Lie, d, products, a.twist().clone())
        .expect("commutators are antisymmetric")
}

fn require(v: Verdict, what: &str) -> Result<()> {
    v.into_result(|w| Error::PreconditionFailed(format!("{what}: {w}")))
}

fn require_good_assoc(a: &HomAlgebra) -> Result<()> {
    require(check_multiplicative(a), "multiplicative")?;
    require(check_nondegenerate(a), "nondegenerate")?;
    require(check_hom_associative(a), "hom-associative")
}

/// `A ⊕ K·1` with `x·1 = 1·x = α(x)` and `α(1) = 1`; the unit gets the last
/// index.
pub fn adjoin_unit(a: &HomAlgebra) -> Result<HomAlgebra> {
    require_good_assoc(a)?;
    Ok(adjoin_unit_unchecked(a))
}

fn adjoin_unit_unchecked(a: &HomAlgebra) -> HomAlgebra {
    let d = a.dim();
    let big = d + 1;
    let mut products: Vec<SparseVec> = vec![Vec::new(); big * big];
    for i in 0..d {
        for j in 0..d {
            products[i * big + j] = a.basis_product(i, j).clone();
        }
        products[i * big + d] = a.twist_column(i).clone();
        products[d * big + i] = a.twist_column(i).clone();
    }
    products[d * big + d] = vec![(d, Scalar::one())];
    let twist = a.twist().block_diag(&Matrix::identity(1));
    HomAlgebra::from_sparse(a.flavor(), big, products, twist).expect("shapes agree")
}

/// `End(V)` on the matrix units `E_ab` (index `a·m + b`) with
/// `x·y = βxβ⁻¹yβ⁻¹` and twist `Ad_β(x) = βxβ⁻¹`.
pub fn endomorphism_hom_algebra(beta: &Matrix) -> Result<HomAlgebra> {
    let inv = beta.inverse().map_err(|_| Error::DegenerateTwist)?;
    let m = beta.rows();
    let d = m * m;
    let support = |mat: &Matrix, col: bool, k: usize| -> Vec<(usize, Scalar)> {
        (0..m)
            .map(|t| {
                if col {
                    (t, mat[(t, k)].clone())
                } else {
                    (t, mat[(k, t)].clone())
                }
            })
            .filter(|(_, x)| !x.is_zero())
            .collect()
    };
    // β e_a as a column, e_b^T β⁻¹ as a row.
    let beta_cols: Vec<_> = (0..m).map(|a| support(beta, true, a)).collect();
    let inv_rows: Vec<_> = (0..m).map(|b| support(&inv, false, b)).collect();
    let outer = |col: &[(usize, Scalar)], row: &[(usize, Scalar)], c: &Scalar| -> SparseVec {
        let mut out = Vec::with_capacity(col.len() * row.len());
        for (p, x) in col {
            for (q, y) in row {
                out.push((p * m + q, x * y * c));
            }
        }
        sparse::normalize(out)
    };
    let one = Scalar::one();
    let mut products = Vec::with_capacity(d * d);
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                let link = &inv[(b, c)];
                for dd in 0..m {
                    products.push(if link.is_zero() {
                        Vec::new()
                    } else {
                        outer(&beta_cols[a], &inv_rows[dd], link)
                    });
                }
            }
        }
    }
    let mut twist = Matrix::zeros(d, d);
    for a in 0..m {
        for b in 0..m {
            for (k, x) in outer(&beta_cols[a], &inv_rows[b], &one) {
                twist[(k, a * m + b)] = x;
            }
        }
    }
    HomAlgebra::from_sparse(Flavor::Associative, d, products, twist)
}

fn flat(a: &Matrix, b: &Matrix) -> Vec<Scalar> {
    a.as_slice()
        .iter()
        .zip(b.as_slice())
        .map(|(x, y)| x - y)
        .collect()
}

/// `ρ_L(x·y)∘β = ρ_L(α(x))∘ρ_L(y)`.
pub fn check_left_rep(rho: &HomRepresentation) -> Verdict {
    let a = rho.algebra();
    let d = a.dim();
    let twisted = rho.twisted_actions();
    for i in 0..d {
        for j in 0..d {
            let lhs = &rho.action(&sparse::to_dense(a.basis_product(i, j), d)) * rho.beta();
            let rhs = &twisted[i] * &rho.actions()[j];
            if lhs != rhs {
                return Verdict::Fails(Violation::new(
                    "left-representation",
                    vec![i, j],
                    flat(&lhs, &rhs),
                ));
            }
        }
    }
    Verdict::Holds
}

/// `ρ_R(x·y)∘β = ρ_R(α(y))∘ρ_R(x)`.
pub fn check_right_rep(rho: &HomRepresentation) -> Verdict {
    let a = rho.algebra();
    let d = a.dim();
    let twisted = rho.twisted_actions();
    for i in 0..d {
        for j in 0..d {
            let lhs = &rho.action(&sparse::to_dense(a.basis_product(i, j), d)) * rho.beta();
            let rhs = &twisted[j] * &rho.actions()[i];
            if lhs != rhs {
                return Verdict::Fails(Violation::new(
                    "right-representation",
                    vec![i, j],
                    flat(&lhs, &rhs),
                ));
            }
        }
    }
    Verdict::Holds
}

/// Left law, right law and `ρ_L(α(x))∘ρ_R(y) = ρ_R(α(y))∘ρ_L(x)`.
pub fn check_birep(left: &HomRepresentation, right: &HomRepresentation) -> Verdict {
    if left.algebra() != right.algebra() || left.beta() != right.beta() {
        return Verdict::Fails(Violation::new("same-module", vec![], vec![]));
    }
    check_left_rep(left)
        .and_then(|| check_right_rep(right))
        .and_then(|| {
            let d = left.algebra().dim();
            let lt = left.twisted_actions();
            let rt = right.twisted_actions();
            for i in 0..d {
                for j in 0..d {
                    let lhs = &lt[i] * &right.actions()[j];
                    let rhs = &rt[j] * &left.actions()[i];
                    if lhs != rhs {
                        return Verdict::Fails(Violation::new(
                            "compatibility",
                            vec![i, j],
                            flat(&lhs, &rhs),
                        ));
                    }
                }
            }
            Verdict::Holds
        })
}

/// Left multiplications `x ↦ (y ↦ x·y)` with `β = α`.
pub fn left_regular_rep(a: &HomAlgebra) -> HomRepresentation {
    let actions = (0..a.dim()).map(|i| a.left_mult_basis(i)).collect();
    HomRepresentation::new(a.clone(), actions, a.twist().clone()).expect("square")
}

/// Right multiplications `x ↦ (y ↦ y·x)` with `β = α`.
pub fn right_regular_rep(a: &HomAlgebra) -> HomRepresentation {
    let actions = (0..a.dim()).map(|i| a.right_mult_basis(i)).collect();
    HomRepresentation::with_orientation(a.clone(), actions, a.twist().clone(), Orientation::Right)
        .expect("square")
}

/// `{x : x·A = 0}`.
pub fn left_annihilator(a: &HomAlgebra) -> Subspace {
    crate::homcore::center(a)
}

/// Left multiplication of `A` on `A ⊕ K·1`; faithful because `x·1 = α(x)`.
pub fn faithful_assoc_rep(a: &HomAlgebra) -> Result<HomRepresentation> {
    require_good_assoc(a)?;
    let hat = adjoin_unit_unchecked(a);
    let actions = (0..a.dim()).map(|i| hat.left_mult_basis(i)).collect();
    HomRepresentation::new(a.clone(), actions, hat.twist().clone())
}

/// Embedding of `L` into `(End(V), x·y = βxβ⁻¹yβ⁻¹, Ad_β)⁽⁻⁾` given by a
/// representation.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub target: HomAlgebra,
    /// `dim(target) × dim(L)`; column `i` is `ρ(eᵢ)` flattened row-major.
    pub map: Matrix,
}

/// Checks that `x ↦ ρ(x)` is an injective homomorphism into the commutator
/// algebra of `endomorphism_hom_algebra(β)`.
pub fn theorem_a_forward(rho: &HomRepresentation) -> Result<Embedding> {
    if !is_faithful(rho) {
        return Err(Error::PreconditionFailed(
            "representation is not faithful".into(),
        ));
    }
    require(check_rep(rho), "representation")?;
    require(check_rep_multiplicative(rho), "multiplicative")?;
    require(check_rep_nondegenerate(rho), "nondegenerate")?;
    let target = commutator_algebra(&endomorphism_hom_algebra(rho.beta())?);
    let m = rho.module_dim();
    let cols: Vec<Vec<Scalar>> = rho
        .actions()
        .iter()
        .map(|a| a.as_slice().to_vec())
        .collect();
    let map = Matrix::from_columns(m * m, &cols);
    require(
        check_homomorphism(rho.algebra(), &target, &map),
        "embedding",
    )?;
    Ok(Embedding { target, map })
}

/// Given a multiplicative nondegenerate Hom-associative `A` and an injective
/// homomorphism `ι: L → A⁽⁻⁾` (a `dim(A) × dim(L)` matrix), returns the
/// representation `x ↦ (y ↦ ι(x)·y)` of `L` on `A ⊕ K·1`.
pub fn theorem_a_backward(
    l: &HomAlgebra,
    a: &HomAlgebra,
    iota: &Matrix,
) -> Result<HomRepresentation> {
    require_good_assoc(a)?;
    if iota.rows() != a.dim() || iota.cols() != l.dim() {
        return Err(Error::DimensionMismatch(
            "embedding has the wrong shape".into(),
        ));
    }
    if iota.rank() != l.dim() {
        return Err(Error::PreconditionFailed(
            "embedding is not injective".into(),
        ));
    }
    require(
        check_homomorphism(l, &commutator_algebra(a), iota),
        "embedding",
    )?;
    let hat = adjoin_unit_unchecked(a);
    let n = hat.dim();
    let actions = (0..l.dim())
        .map(|i| {
            let x = sparse::from_dense(&iota.column(i));
            let mut m = Matrix::zeros(n, n);
            for j in 0..n {
                for (k, c) in hat.mul_sparse(&x, &[(j, Scalar::one())]) {
                    m[(k, j)] = c;
                }
            }
            m
        })
        .collect();
    HomRepresentation::new(l.clone(), actions, hat.twist().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;
    use crate::fixtures;
    use crate::homcore::check_hom_lie;
    use crate::homrep::rep_kernel;

    fn matrices_2x2() -> HomAlgebra {
        endomorphism_hom_algebra(&Matrix::identity(2)).unwrap()
    }

    /// Strictly upper-triangular 3×3 matrices under composition.
    fn upper_nilpotent() -> HomAlgebra {
        // Basis E12, E13, E23; E12·E23 = E13.
        let mut products = vec![Vec::new(); 9];
        products[2] = vec![(1, int(1))];
        HomAlgebra::from_sparse(Flavor::Associative, 3, products, Matrix::identity(3)).unwrap()
    }

    #[test]
    fn associativity_examples() {
        assert!(check_hom_associative(&matrices_2x2()).holds());
        let mut products = vec![Vec::new(); 4];
        products[0] = vec![(1, int(1))];
        products[1] = vec![(0, int(1))];
        let bad = HomAlgebra::from_sparse(Flavor::Plain, 2, products, Matrix::identity(2)).unwrap();
        assert_eq!(
            check_hom_associative(&bad).witness().unwrap().indices,
            vec![0, 0, 0]
        );
        let e = endomorphism_hom_algebra(&Matrix::diagonal(&[int(1), int(2)])).unwrap();
        assert!(check_hom_associative(&e).holds());
        assert!(check_multiplicative(&e).holds());
        assert!(check_hom_lie(&commutator_algebra(&e)).holds());
        assert!(matches!(
            endomorphism_hom_algebra(&Matrix::zeros(2, 2)),
            Err(Error::DegenerateTwist)
        ));
    }

    #[test]
    fn commutators() {
        let comm = commutator_algebra(
            &fixtures::abelian(2)
                .with_flavor(Flavor::Associative)
                .unwrap(),
        );
        assert!(comm.has_zero_product());
        let gl2 = commutator_algebra(&matrices_2x2());
        // [E11, E12] = E12.
        assert_eq!(gl2.basis_product(0, 1), &vec![(1, int(1))]);
    }

    #[test]
    fn unit_and_faithfulness() {
        let zero1 = HomAlgebra::from_sparse(
            Flavor::Associative,
            1,
            vec![Vec::new()],
            Matrix::identity(1),
        )
        .unwrap();
        assert_eq!(adjoin_unit(&zero1).unwrap().dim(), 2);
        let rho = faithful_assoc_rep(&zero1).unwrap();
        assert_eq!(rho.module_dim(), 2);
        assert_eq!(rho.actions()[0][(0, 1)], int(1));
        assert!(is_faithful(&rho));

        let u = upper_nilpotent();
        let hat = adjoin_unit(&u).unwrap();
        assert_eq!(hat.dim(), 4);
        assert_eq!(
            hat.left_mult_basis(3).as_slice()[..],
            hat.twist().as_slice()[..]
        );
        assert!(check_hom_associative(&hat).holds());
        let rho = faithful_assoc_rep(&u).unwrap();
        assert!(rep_kernel(&rho).is_zero());
        assert!(check_left_rep(&rho).holds());

        let degenerate = u.with_twist(Matrix::zeros(3, 3)).unwrap();
        assert!(matches!(
            adjoin_unit(&degenerate),
            Err(Error::PreconditionFailed(_))
        ));
        assert!(faithful_assoc_rep(&degenerate).is_err());
    }

    #[test]
    fn regular_birepresentation() {
        for a in [
            upper_nilpotent(),
            endomorphism_hom_algebra(&Matrix::diagonal(&[int(1), int(2)])).unwrap(),
        ] {
            let l = left_regular_rep(&a);
            let r = right_regular_rep(&a);
            assert!(check_birep(&l, &r).holds());
            assert_eq!(rep_kernel(&l), left_annihilator(&a));
        }
        let zero = HomAlgebra::from_sparse(
            Flavor::Associative,
            2,
            vec![Vec::new(); 4],
            Matrix::identity(2),
        )
        .unwrap();
        let z = HomRepresentation::zero(zero.clone(), Matrix::identity(3));
        assert!(check_birep(&z, &z).holds());
    }

    #[test]
    fn round_trip_on_the_associated_lie_algebra() {
        let a = endomorphism_hom_algebra(&Matrix::diagonal(&[int(1), int(2)])).unwrap();
        let l = commutator_algebra(&a);
        let rho = theorem_a_backward(&l, &a, &Matrix::identity(4)).unwrap();
        assert_eq!(rho.module_dim(), 5);
        assert!(is_faithful(&rho));
        assert!(check_rep(&rho).holds());
        assert!(check_rep_multiplicative(&rho).holds());
        let emb = theorem_a_forward(&rho).unwrap();
        assert_eq!(emb.target.dim(), 25);

        let not_hom = Matrix::from_ints(&[[1, 0, 0, 0], [0, 2, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
        let err = theorem_a_backward(&l, &a, &not_hom);
        assert!(matches!(err, Err(Error::PreconditionFailed(_))));
    }
}
