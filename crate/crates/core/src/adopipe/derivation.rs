use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar};
use crate::homcore::{check_multiplicative, sparse, Flavor, HomAlgebra};
use crate::homrep::HomRepresentation;
use crate::verdict::{Verdict, Violation};

/// `D([x,y]) = [D(x), α(y)] + [α(x), D(y)]` on basis pairs, plus `Dα = αD`
/// when the algebra is multiplicative.
pub fn check_alpha_derivation(l: &HomAlgebra, d: &Matrix) -> Verdict {
    let n = l.dim();
    if d.rows() != n || d.cols() != n {
        return Verdict::Fails(Violation::new("derivation-shape", vec![], vec![]));
    }
    let images: Vec<_> = (0..n).map(|i| sparse::from_dense(&d.column(i))).collect();
    let anti = l.flavor() == Flavor::Lie;
    for i in 0..n {
        let start = if anti { i + 1 } else { 0 };
        for j in start..n {
            let lhs = sparse::from_dense(&d.mul_vec(&sparse::to_dense(l.basis_product(i, j), n)));
            let rhs = sparse::add_all(&[
                l.mul_sparse(&images[i], l.twist_column(j)),
                l.mul_sparse(l.twist_column(i), &images[j]),
            ]);
            if lhs != rhs {
                let residual = sparse::to_dense(&sparse::sub(&lhs, &rhs), n);
                return Verdict::Fails(Violation::new("alpha-derivation", vec![i, j], residual));
            }
        }
    }
    if check_multiplicative(l).holds() {
        let lhs = d * l.twist();
        let rhs = l.twist() * d;
        if lhs != rhs {
            let residual = lhs
                .as_slice()
                .iter()
                .zip(rhs.as_slice())
                .map(|(a, b)| a - b)
                .collect();
            return Verdict::Fails(Violation::new(
                "derivation-commutes-with-twist",
                vec![],
                residual,
            ));
        }
    }
    Verdict::Holds
}

/// `L ⊕ KD` with `[D, x] = D(x)` and `α(D) = D` (the new basis vector is
/// last), together with the action of `L` on it: `ρ(x)(y + cD) = [x,y] − c·D(x)`,
/// `β = α ⊕ 1`.
pub fn extend_by_derivation(l: &HomAlgebra, d: &Matrix) -> Result<(HomAlgebra, HomRepresentation)> {
    check_alpha_derivation(l, d).into_result(Error::NotADerivation)?;
    let n = l.dim();
    let big = n + 1;
    let mut products = vec![Vec::new(); big * big];
    for i in 0..n {
        for j in 0..n {
            products[i * big + j] = l.basis_product(i, j).clone();
        }
        let image = sparse::from_dense(&d.column(i));
        products[i * big + n] = sparse::scale(&image, &-Scalar::from_integer(1.into()));
        products[n * big + i] = image;
    }
    let twist = l.twist().block_diag(&Matrix::identity(1));
    let ext = HomAlgebra::from_sparse(l.flavor(), big, products, twist)?;
    let actions = (0..n).map(|i| ext.left_mult_basis(i)).collect();
    let rho = HomRepresentation::new(l.clone(), actions, ext.twist().clone())?;
    Ok((ext, rho))
}

/// `D(x ⊗ tᵖ) = p·α(x) ⊗ tᵖ` on `L ⊗ tK[t]/(tⁿ)`.
pub fn euler_derivation(l: &HomAlgebra, n: usize) -> Matrix {
    let d = l.dim();
    let mut out = Matrix::zeros(d * (n - 1), d * (n - 1));
    for p in 1..n {
        let block = l.twist().scale(&Scalar::from_integer((p as i64).into()));
        for i in 0..d {
            for j in 0..d {
                out[((p - 1) * d + i, (p - 1) * d + j)] = block[(i, j)].clone();
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::homcore::{center, check_hom_lie, current_algebra};
    use crate::homrep::{check_rep, check_rep_multiplicative, is_faithful, rep_kernel};

    #[test]
    fn zero_and_euler_derivations() {
        let h3 = fixtures::h3();
        assert!(check_alpha_derivation(&h3, &Matrix::zeros(3, 3)).holds());
        let (ext, rho) = extend_by_derivation(&h3, &Matrix::zeros(3, 3)).unwrap();
        assert!(check_hom_lie(&ext).holds());
        assert_eq!(rep_kernel(&rho), center(&h3));

        let cur = current_algebra(&h3, 3).unwrap();
        let d = euler_derivation(&h3, 3);
        assert!(check_alpha_derivation(&cur, &d).holds());
        assert_eq!(d.rank(), 6);
        let (ext, rho) = extend_by_derivation(&cur, &d).unwrap();
        assert!(check_hom_lie(&ext).holds());
        assert_eq!(rho.module_dim(), 7);
        assert!(is_faithful(&rho));
        assert!(check_rep(&rho).holds());
    }

    #[test]
    fn twisted_extension_is_multiplicative() {
        let lam = fixtures::h3_lambda();
        let cur = current_algebra(&lam, 3).unwrap();
        let (ext, rho) = extend_by_derivation(&cur, &euler_derivation(&lam, 3)).unwrap();
        assert!(check_multiplicative(&ext).holds());
        assert!(check_rep_multiplicative(&rho).holds());
        assert!(check_rep(&rho).holds());
    }

    #[test]
    fn identity_is_not_a_derivation_of_h3() {
        let h3 = fixtures::h3();
        let v = check_alpha_derivation(&h3, &Matrix::identity(3));
        assert_eq!(v.witness().unwrap().indices, vec![0, 1]);
        assert!(matches!(
            extend_by_derivation(&h3, &Matrix::identity(3)),
            Err(Error::NotADerivation(_))
        ));
    }
}
