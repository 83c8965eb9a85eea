use num_traits::Zero;

use super::tensor::{find_witness, generated, LazyTensor};
use crate::error::{Error, Result};
use crate::exactla::{is_zero_vector, Matrix, Scalar, Subspace};
use crate::homcore::HomAlgebra;
use crate::homrep::{subrepresentation, HomRepresentation};

/// Candidates larger than this are skipped by [`distinguishing_rep`].
pub const DEFAULT_MAX_MODULE_DIM: usize = 5000;

/// Eigenvalue of the twist on the central line spanned by `z`.
fn central_eigenvalue(l: &HomAlgebra, z: &[Scalar]) -> Result<Scalar> {
    let n = l.dim();
    if z.len() != n || is_zero_vector(z) {
        return Err(Error::PreconditionFailed(
            "central element must be a nonzero vector".into(),
        ));
    }
    for i in 0..n {
        if !is_zero_vector(&l.mul(z, &crate::exactla::unit_vector(n, i))) {
            return Err(Error::PreconditionFailed("element is not central".into()));
        }
    }
    let image = l.apply_twist(z);
    let k = z.iter().position(|c| !c.is_zero()).expect("z is nonzero");
    let lambda = &image[k] / &z[k];
    if image.iter().zip(z).any(|(a, b)| a != &(&lambda * b)) {
        return Err(Error::PreconditionFailed(
            "central line is not twist-stable".into(),
        ));
    }
    if lambda.is_zero() {
        return Err(Error::PreconditionFailed(
            "twist kills the central line".into(),
        ));
    }
    Ok(lambda)
}

fn multisets(t: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<usize>> = (0..t).map(|i| vec![i]).collect();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for m in &frontier {
            let last = *m.last().expect("nonempty");
            for i in last..t {
                let mut e = m.clone();
                e.push(i);
                next.push(e);
            }
        }
        out.append(&mut frontier);
        frontier = next;
    }
    out
}

/// A representation `ρ` of `L̃` with `Ker ρ(z) ⊄ Ker ρ(x)`.
///
/// `summands` are the direct summands of a faithful nilpotent multiplicative
/// nondegenerate representation. The search runs over tensor products of at
/// most `bound` summands, smallest module first; direct sums need not be
/// searched since a direct sum qualifies exactly when one of its summands
/// does. The result is the submodule of the first qualifying tensor product
/// generated by a witness `v` with `ρ(z)v = 0`, `ρ(x)v ≠ 0`.
pub fn distinguishing_rep(
    ltilde: &HomAlgebra,
    z: &[Scalar],
    x: &[Scalar],
    summands: &[HomRepresentation],
    bound: usize,
) -> Result<HomRepresentation> {
    distinguishing_rep_capped(ltilde, z, x, summands, bound, DEFAULT_MAX_MODULE_DIM)
}

pub fn distinguishing_rep_capped(
    ltilde: &HomAlgebra,
    z: &[Scalar],
    x: &[Scalar],
    summands: &[HomRepresentation],
    bound: usize,
    max_module_dim: usize,
) -> Result<HomRepresentation> {
    central_eigenvalue(ltilde, z)?;
    if x.len() != ltilde.dim() || Subspace::span(ltilde.dim(), [z.to_vec(), x.to_vec()]).dim() != 2
    {
        return Err(Error::PreconditionFailed(
            "x and z must be linearly independent".into(),
        ));
    }
    if summands.iter().any(|s| s.algebra() != ltilde) {
        return Err(Error::BaseMismatch);
    }
    let dims: Vec<usize> = summands.iter().map(HomRepresentation::module_dim).collect();
    let mut candidates: Vec<(usize, Vec<usize>)> = multisets(summands.len(), bound)
        .into_iter()
        .filter_map(|m| {
            let d = m
                .iter()
                .try_fold(1usize, |acc, &i| acc.checked_mul(dims[i]))?;
            (d <= max_module_dim).then_some((d, m))
        })
        .collect();
    candidates.sort();
    for (_, m) in candidates {
        let t = LazyTensor::new(m.iter().map(|&i| &summands[i]).collect());
        if let Some(v) = find_witness(&t, z, x) {
            return generated(&t, ltilde, v);
        }
    }
    Err(Error::SearchExhausted(bound))
}

/// Right inverse of a surjective matrix, supported on its pivot columns.
pub(crate) fn right_inverse(m: &Matrix) -> Result<Matrix> {
    let (_, pivots) = m.rref();
    if pivots.len() != m.rows() {
        return Err(Error::PreconditionFailed(
            "projection is not surjective".into(),
        ));
    }
    let square = Matrix::from_fn(m.rows(), m.rows(), |i, j| m[(i, pivots[j])].clone());
    let inv = square.inverse()?;
    let mut out = Matrix::zeros(m.cols(), m.rows());
    for (j, &p) in pivots.iter().enumerate() {
        for c in 0..m.rows() {
            out[(p, c)] = inv[(j, c)].clone();
        }
    }
    Ok(out)
}

/// The action of `L = L̃/⟨z⟩` on `Ker ρ(z)`; `projection` is the
/// `dim(L) × dim(L̃)` quotient map.
pub fn restrict_to_z_kernel(
    ltilde: &HomAlgebra,
    rho: &HomRepresentation,
    z: &[Scalar],
    l: &HomAlgebra,
    projection: &Matrix,
) -> Result<HomRepresentation> {
    central_eigenvalue(ltilde, z)?;
    if rho.algebra() != ltilde {
        return Err(Error::BaseMismatch);
    }
    if projection.rows() != l.dim() || projection.cols() != ltilde.dim() {
        return Err(Error::DimensionMismatch(
            "projection has the wrong shape".into(),
        ));
    }
    if !is_zero_vector(&projection.mul_vec(z)) {
        return Err(Error::PreconditionFailed(
            "projection does not kill z".into(),
        ));
    }
    let w = rho.action(z).kernel();
    let sub = subrepresentation(rho, &w)?;
    let section = right_inverse(projection)?;
    let m = w.dim();
    let actions = (0..l.dim())
        .map(|i| Matrix::combination(&section.column(i), sub.actions(), (m, m)))
        .collect();
    HomRepresentation::new(l.clone(), actions, sub.beta().clone())
}

/// Smallest subspace containing `seed` and stable under every action and
/// the module twist.
pub fn generated_submodule(rho: &HomRepresentation, seed: &[Vec<Scalar>]) -> Subspace {
    let m = rho.module_dim();
    let mut span = Subspace::zero(m);
    let mut queue: Vec<Vec<Scalar>> = Vec::new();
    for v in seed {
        if span.insert(v) {
            queue.push(v.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for a in rho.actions().iter().chain(std::iter::once(rho.beta())) {
            let image = a.mul_vec(&v);
            if span.insert(&image) {
                queue.push(image);
            }
        }
    }
    span
}

/// Shrinks `tau` to a submodule on which `x` still acts nontrivially,
/// generated by a single vector.
pub(crate) fn cyclic_shrink(tau: &HomRepresentation, x: &[Scalar]) -> Result<HomRepresentation> {
    let m = tau.module_dim();
    let tx = tau.action(x);
    let best = (0..m)
        .map(|k| crate::exactla::unit_vector(m, k))
        .filter(|v| !is_zero_vector(&tx.mul_vec(v)))
        .take(6)
        .map(|v| generated_submodule(tau, &[v]))
        .min_by_key(Subspace::dim)
        .ok_or_else(|| Error::PreconditionFailed("element acts trivially".into()))?;
    subrepresentation(tau, &best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adopipe::{graded_faithful_rep, Grading};
    use crate::exactla::{int, unit_vector};
    use crate::fixtures;
    use crate::homrep::{check_rep, check_rep_multiplicative, rep_nilindex};

    fn extension_setup() -> (HomAlgebra, HomRepresentation) {
        let lt = fixtures::abelian(2);
        let base = graded_faithful_rep(&lt, &Grading::standard(vec![1, 1]))
            .unwrap()
            .representation;
        (lt, base)
    }

    #[test]
    fn central_extension_of_the_line() {
        let (lt, base) = extension_setup();
        let (z, x) = (unit_vector(2, 1), unit_vector(2, 0));
        let rho = distinguishing_rep(&lt, &z, &x, &[base], 4).unwrap();
        let kz = rho.action(&z).kernel();
        assert!(!kz.is_subspace_of(&rho.action(&x).kernel()));
        let l = fixtures::abelian(1);
        let projection = Matrix::from_ints(&[[1, 0]]);
        let tau = restrict_to_z_kernel(&lt, &rho, &z, &l, &projection).unwrap();
        assert!(!tau.actions()[0].is_zero());
        assert!(check_rep(&tau).holds());
        assert!(check_rep_multiplicative(&tau).holds());
        assert!(rep_nilindex(&tau) <= rep_nilindex(&rho));
    }

    #[test]
    fn search_limits() {
        let (lt, base) = extension_setup();
        let (z, x) = (unit_vector(2, 1), unit_vector(2, 0));
        assert!(matches!(
            distinguishing_rep(&lt, &z, &x, std::slice::from_ref(&base), 0),
            Err(Error::SearchExhausted(0))
        ));
        assert!(matches!(
            distinguishing_rep(&lt, &z, &z, std::slice::from_ref(&base), 4),
            Err(Error::PreconditionFailed(_))
        ));
        let twice = vec![int(2), int(0)];
        assert!(matches!(
            distinguishing_rep(&lt, &twice, &[int(1), int(0)], &[base], 4),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn zero_action_of_z_keeps_everything() {
        let lt = fixtures::abelian(2);
        // Pull back along the projection onto e1, so that e2 acts by zero.
        let l = fixtures::abelian(1);
        let from_line = graded_faithful_rep(&l, &Grading::standard(vec![1]))
            .unwrap()
            .representation;
        let rho = crate::homrep::pullback(&from_line, &lt, &Matrix::from_ints(&[[1, 0]])).unwrap();
        let z = unit_vector(2, 1);
        let tau = restrict_to_z_kernel(&lt, &rho, &z, &l, &Matrix::from_ints(&[[1, 0]])).unwrap();
        assert_eq!(tau.module_dim(), rho.module_dim());
        assert_eq!(tau.actions()[0], from_line.actions()[0]);
    }

    #[test]
    fn right_inverses() {
        let p = Matrix::from_ints(&[[0, 2, 1], [1, 0, 0]]);
        let s = right_inverse(&p).unwrap();
        assert!((&p * &s).is_identity());
    }
}
