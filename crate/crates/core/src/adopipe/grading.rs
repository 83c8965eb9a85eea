use num_traits::Zero;

use super::certificate::{certify, AdoCertificate, TraceStep};
use super::derivation::{euler_derivation, extend_by_derivation};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar, Subspace};
use crate::homcore::{
    bracket_span, check_homomorphism, check_multiplicative, check_nondegenerate, current_algebra,
    current_index, lower_central_series, HomAlgebra,
};
use crate::homrep::pullback;

/// `L = ⊕ C_d`: column `k` of `basis` spans part of `C_{degrees[k]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    pub degrees: Vec<usize>,
    pub basis: Matrix,
}

impl Grading {
    /// A grading in which every standard basis vector is homogeneous.
    pub fn standard(degrees: Vec<usize>) -> Self {
        let n = degrees.len();
        Self {
            degrees,
            basis: Matrix::identity(n),
        }
    }

    pub fn top_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    /// Checks that the columns form a basis, every degree is positive, the
    /// twist preserves degrees and brackets add them.
    pub fn validate(&self, l: &HomAlgebra) -> Result<()> {
        let n = l.dim();
        if self.degrees.len() != n || self.basis.rows() != n || self.basis.cols() != n {
            return Err(Error::InvalidGrading(format!(
                "{} degrees for an algebra of dimension {n}",
                self.degrees.len()
            )));
        }
        if self.degrees.contains(&0) {
            return Err(Error::InvalidGrading("degrees must be positive".into()));
        }
        let inverse = self
            .basis
            .inverse()
            .map_err(|_| Error::InvalidGrading("homogeneous vectors are not a basis".into()))?;
        let columns = self.basis.columns();
        let homogeneous = |v: &[Scalar], deg: usize| {
            inverse
                .mul_vec(v)
                .iter()
                .zip(&self.degrees)
                .all(|(c, &d)| c.is_zero() || d == deg)
        };
        for (k, v) in columns.iter().enumerate() {
            if !homogeneous(&l.apply_twist(v), self.degrees[k]) {
                return Err(Error::InvalidGrading(format!(
                    "twist moves homogeneous vector {} out of its degree",
                    k + 1
                )));
            }
            for (m, w) in columns.iter().enumerate() {
                if !homogeneous(&l.mul(v, w), self.degrees[k] + self.degrees[m]) {
                    return Err(Error::InvalidGrading(format!(
                        "bracket of homogeneous vectors {} and {} is not homogeneous",
                        k + 1,
                        m + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

/// A twist-stable complement of the twist-stable subspace `u`, if one exists.
fn stable_complement(alpha: &Matrix, u: &Subspace) -> Option<Subspace> {
    let n = u.ambient();
    let comp = u.complement_indices();
    let (r, s) = (u.dim(), comp.len());
    // Split w = v0 + Σ a_k u_k with v0 supported off the pivots of u.
    let split = |w: &[Scalar]| -> (Vec<Scalar>, Vec<Scalar>) {
        let a: Vec<Scalar> = u.pivots().iter().map(|&p| w[p].clone()).collect();
        let rest = u.reduce(w);
        (comp.iter().map(|&c| rest[c].clone()).collect(), a)
    };
    // The complement is spanned by e_c + Σ_k T[k][c] u_k; stability is the
    // Sylvester equation U(α e_c) + Σ_k T[k][c] U(α u_k) = Σ_c' T[·][c'] V(α e_c)_c'.
    let alpha_u: Vec<Vec<Scalar>> = u
        .basis()
        .iter()
        .map(|b| split(&alpha.mul_vec(b)).1)
        .collect();
    let unknowns = r * s;
    let var = |k: usize, c: usize| k * s + c;
    let mut rows = Vec::with_capacity(unknowns);
    for (ci, &c) in comp.iter().enumerate() {
        let (v0, a0) = split(&alpha.column(c));
        for (row_k, a0k) in a0.iter().enumerate() {
            let mut row = vec![Scalar::zero(); unknowns + 1];
            for (k, au) in alpha_u.iter().enumerate() {
                row[var(k, ci)] += &au[row_k];
            }
            for (cj, v) in v0.iter().enumerate() {
                row[var(row_k, cj)] -= v;
            }
            row[unknowns] = a0k.clone();
            rows.push(row);
        }
    }
    let t = if unknowns == 0 {
        Vec::new()
    } else {
        solve_augmented(rows, unknowns)?
    };
    let vectors = comp.iter().enumerate().map(|(ci, &c)| {
        let mut v = crate::exactla::unit_vector(n, c);
        for (k, b) in u.basis().iter().enumerate() {
            let coef = &t[var(k, ci)];
            if !coef.is_zero() {
                for (x, y) in v.iter_mut().zip(b) {
                    *x += coef * y;
                }
            }
        }
        v
    });
    Some(Subspace::span(n, vectors))
}

/// Solves `A t + b = 0` given rows `[A | b]`.
fn solve_augmented(rows: Vec<Vec<Scalar>>, unknowns: usize) -> Option<Vec<Scalar>> {
    if rows.is_empty() {
        return Some(vec![Scalar::zero(); unknowns]);
    }
    let kernel = Matrix::from_rows(rows).kernel();
    let v = kernel.basis().iter().find(|v| !v[unknowns].is_zero())?;
    let last = v[unknowns].clone();
    Some(v[..unknowns].iter().map(|x| x / &last).collect())
}

/// Looks for homogeneous components `C_1, C_2, …` with `C_1` a twist-stable
/// complement of `[L, L]` and `C_d = Σ_{a+b=d} [C_a, C_b]`. Returns `None`
/// when the construction does not yield a grading.
pub fn find_grading(l: &HomAlgebra) -> Option<Grading> {
    let n = l.dim();
    let series = lower_central_series(l);
    if !series.last().is_some_and(Subspace::is_zero) {
        return None;
    }
    let derived = series.get(1).cloned().unwrap_or_else(|| Subspace::zero(n));
    let mut components = vec![stable_complement(l.twist(), &derived)?];
    loop {
        let d = components.len() + 1;
        let mut next = Subspace::zero(n);
        for a in 1..d {
            next = next.sum(&bracket_span(l, &components[a - 1], &components[d - a - 1]));
        }
        if next.is_zero() {
            break;
        }
        if components.len() > n {
            return None;
        }
        components.push(next);
    }
    let mut degrees = Vec::with_capacity(n);
    let mut columns = Vec::with_capacity(n);
    for (i, c) in components.iter().enumerate() {
        for v in c.basis() {
            degrees.push(i + 1);
            columns.push(v.clone());
        }
    }
    if columns.len() != n {
        return None;
    }
    let grading = Grading {
        degrees,
        basis: Matrix::from_columns(n, &columns),
    };
    grading.validate(l).ok().map(|_| grading)
}

/// Embeds `L` into `L ⊗ tK[t]/(t^{p+1})` by `x ↦ x ⊗ t^d` for `x ∈ C_d` and
/// lets it act on the extension of the current algebra by the Euler
/// derivation. The module has dimension `dim(L)·p + 1`.
pub fn graded_faithful_rep(l: &HomAlgebra, grading: &Grading) -> Result<AdoCertificate> {
    check_nondegenerate(l).into_result(|_| Error::DegenerateTwist)?;
    check_multiplicative(l).into_result(|v| Error::PreconditionFailed(v.to_string()))?;
    grading.validate(l)?;
    let n = l.dim();
    let p = grading.top_degree();
    let cur = current_algebra(l, p + 1)?;
    let mut spread = Matrix::zeros(cur.dim(), n);
    for (k, &d) in grading.degrees.iter().enumerate() {
        for i in 0..n {
            spread[(current_index(n, d, i), k)] = grading.basis[(i, k)].clone();
        }
    }
    let embedding = &spread * &grading.basis.inverse()?;
    check_homomorphism(l, &cur, &embedding).into_result(|v| {
        Error::InvalidGrading(format!("embedding into the current algebra: {v}"))
    })?;
    let (_, rho) = extend_by_derivation(&cur, &euler_derivation(l, p + 1))?;
    let rep = pullback(&rho, l, &embedding)?;
    let trace = vec![
        TraceStep::new("grading-top-degree", p),
        TraceStep::new("current-algebra", cur.dim()),
        TraceStep::new("derivation-extension", rho.module_dim()),
    ];
    Ok(certify(rep, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;
    use crate::fixtures;

    #[test]
    fn gradings_of_fixtures() {
        assert_eq!(
            find_grading(&fixtures::abelian(3)).unwrap().degrees,
            vec![1, 1, 1]
        );
        assert_eq!(
            find_grading(&fixtures::h3()).unwrap().degrees,
            vec![1, 1, 2]
        );
        assert_eq!(
            find_grading(&fixtures::n4()).unwrap().degrees,
            vec![1, 1, 2, 3]
        );
        assert_eq!(
            find_grading(&fixtures::n4_twisted()).unwrap().degrees,
            vec![1, 1, 2, 3]
        );
    }

    #[test]
    fn complement_follows_the_twist() {
        // α = [[1,0],[1,1]] fixes span{e2}; its only stable complement would
        // be another eigenline, and there is none.
        let jordan = Matrix::from_ints(&[[1, 0], [1, 1]]);
        let u = Subspace::span(2, vec![vec![int(0), int(1)]]);
        assert!(stable_complement(&jordan, &u).is_none());
        // α = [[1,0],[1,2]] has the eigenline (1,-1) for eigenvalue 1.
        let alpha = Matrix::from_ints(&[[1, 0], [1, 2]]);
        let c = stable_complement(&alpha, &u).unwrap();
        assert!(c.contains(&[int(1), int(-1)]));
    }

    #[test]
    fn graded_representations() {
        let h3 = fixtures::h3();
        let cert = graded_faithful_rep(&h3, &Grading::standard(vec![1, 1, 2])).unwrap();
        assert_eq!(cert.representation.module_dim(), 7);
        assert!(cert.is_valid());
        let ab = fixtures::abelian(2);
        let cert = graded_faithful_rep(&ab, &Grading::standard(vec![1, 1])).unwrap();
        assert_eq!(cert.representation.module_dim(), 3);
        assert!(cert.is_valid());
        let lam = fixtures::h3_lambda();
        let cert = graded_faithful_rep(&lam, &Grading::standard(vec![1, 1, 2])).unwrap();
        assert!(cert.is_valid());
    }

    #[test]
    fn bad_gradings_are_rejected() {
        let h3 = fixtures::h3();
        assert!(matches!(
            graded_faithful_rep(&h3, &Grading::standard(vec![1, 1, 1])),
            Err(Error::InvalidGrading(_))
        ));
        let degenerate = fixtures::abelian_with_twist(Matrix::zeros(1, 1));
        assert!(matches!(
            graded_faithful_rep(&degenerate, &Grading::standard(vec![1])),
            Err(Error::DegenerateTwist)
        ));
    }
}
