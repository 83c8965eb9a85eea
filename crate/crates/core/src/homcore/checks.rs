//! Brute-force predicates over basis elements. Each returns the first
//! failing instance as a witness.

use super::algebra::HomAlgebra;
use super::sparse::{self, SparseVec};
use crate::exactla::{is_zero_vector, Matrix, Scalar};
use crate::verdict::{Verdict, Violation};

pub fn check_anticommutative(a: &HomAlgebra) -> Verdict {
    let d = a.dim();
    for i in 0..d {
        for j in i..d {
            let s = sparse::add_all([a.basis_product(i, j), a.basis_product(j, i)]);
            if !s.is_empty() {
                let residual = if i == j {
                    sparse::to_dense(a.basis_product(i, i), d)
                } else {
                    sparse::to_dense(&s, d)
                };
                return Verdict::Fails(Violation::new("anticommutativity", vec![i, j], residual));
            }
        }
    }
    Verdict::Holds
}

/// `[[x,y],t(z)] + [[z,x],t(y)] + [[y,z],t(x)]` on basis elements, where `t`
/// is given by its columns.
fn cyclic_sum(a: &HomAlgebra, t: &[SparseVec], i: usize, j: usize, k: usize) -> SparseVec {
    let parts = [
        a.mul_sparse(a.basis_product(i, j), &t[k]),
        a.mul_sparse(a.basis_product(k, i), &t[j]),
        a.mul_sparse(a.basis_product(j, k), &t[i]),
    ];
    sparse::add_all(&parts)
}

fn jacobi_with(a: &HomAlgebra, t: &[SparseVec], law: &'static str) -> Verdict {
    if let Verdict::Fails(v) = check_anticommutative(a) {
        return Verdict::Fails(v);
    }
    // For an anticommutative product the cyclic sum is alternating in its
    // arguments, so strictly increasing triples cover everything.
    let d = a.dim();
    for i in 0..d {
        for j in i + 1..d {
            for k in j + 1..d {
                let s = cyclic_sum(a, t, i, j, k);
                if !s.is_empty() {
                    return Verdict::Fails(Violation::new(
                        law,
                        vec![i, j, k],
                        sparse::to_dense(&s, d),
                    ));
                }
            }
        }
    }
    Verdict::Holds
}

/// Anticommutativity plus the Hom-Jacobi identity
/// `[[x,y],α(z)] + [[z,x],α(y)] + [[y,z],α(x)] = 0`.
pub fn check_hom_lie(a: &HomAlgebra) -> Verdict {
    let t: Vec<SparseVec> = (0..a.dim()).map(|j| a.twist_column(j).clone()).collect();
    jacobi_with(a, &t, "hom-jacobi")
}

/// Anticommutativity plus the classical Jacobi identity (the twist is
/// ignored).
pub fn check_jacobi(a: &HomAlgebra) -> Verdict {
    let one = Scalar::from_integer(1.into());
    let t: Vec<SparseVec> = (0..a.dim()).map(|j| vec![(j, one.clone())]).collect();
    jacobi_with(a, &t, "jacobi")
}

/// `α(x·y) = α(x)·α(y)` on all basis pairs.
pub fn check_multiplicative(a: &HomAlgebra) -> Verdict {
    let d = a.dim();
    for i in 0..d {
        for j in 0..d {
            let lhs = a.twist_sparse(a.basis_product(i, j));
            let rhs = a.mul_sparse(a.twist_column(i), a.twist_column(j));
            let diff = sparse::sub(&lhs, &rhs);
            if !diff.is_empty() {
                return Verdict::Fails(Violation::new(
                    "multiplicative",
                    vec![i, j],
                    sparse::to_dense(&diff, d),
                ));
            }
        }
    }
    Verdict::Holds
}

/// The twist has zero kernel; the witness is a kernel vector.
pub fn check_nondegenerate(a: &HomAlgebra) -> Verdict {
    let ker = a.twist().kernel();
    match ker.basis().first() {
        None => Verdict::Holds,
        Some(v) => Verdict::Fails(Violation::new("nondegenerate", vec![], v.clone())),
    }
}

/// `map` (a `dim(dst) × dim(src)` matrix) preserves products and intertwines
/// the twists.
pub fn check_homomorphism(src: &HomAlgebra, dst: &HomAlgebra, map: &Matrix) -> Verdict {
    if map.rows() != dst.dim() || map.cols() != src.dim() {
        return Verdict::Fails(Violation::new(
            "shape",
            vec![map.rows(), map.cols()],
            vec![],
        ));
    }
    let images: Vec<SparseVec> = (0..src.dim())
        .map(|i| sparse::from_dense(&map.column(i)))
        .collect();
    for i in 0..src.dim() {
        for j in 0..src.dim() {
            let lhs = sparse::from_dense(
                &map.mul_vec(&sparse::to_dense(src.basis_product(i, j), src.dim())),
            );
            let rhs = dst.mul_sparse(&images[i], &images[j]);
            let diff = sparse::sub(&lhs, &rhs);
            if !diff.is_empty() {
                return Verdict::Fails(Violation::new(
                    "homomorphism",
                    vec![i, j],
                    sparse::to_dense(&diff, dst.dim()),
                ));
            }
        }
    }
    let lhs = map * src.twist();
    let rhs = dst.twist() * map;
    for i in 0..src.dim() {
        let diff: Vec<Scalar> = lhs
            .column(i)
            .iter()
            .zip(rhs.column(i))
            .map(|(a, b)| a - b)
            .collect();
        if !is_zero_vector(&diff) {
            return Verdict::Fails(Violation::new("twist-compatibility", vec![i], diff));
        }
    }
    Verdict::Holds
}
