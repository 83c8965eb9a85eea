use super::certificate::{certify, AdoCertificate, TraceStep};
use super::distinguish::{
    cyclic_shrink, distinguishing_rep_capped, restrict_to_z_kernel, DEFAULT_MAX_MODULE_DIM,
};
use super::grading::{find_grading, graded_faithful_rep, Grading};
use crate::error::{Error, Result};
use crate::exactla::{unit_vector, Matrix, Subspace};
use crate::freehl::present_as_quotient_capped;
use crate::homcore::{
    chain_below_ideal, check_homomorphism, check_multiplicative, check_nondegenerate, nilindex,
    quotient_algebra, Flavor, HomAlgebra,
};
use crate::homrep::{direct_sum, pullback, rep_kernel, HomRepresentation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum AdoPath {
    /// Graded construction when a grading is found, general otherwise.
    #[default]
    Auto,
    GradedOnly,
    GeneralOnly,
}

pub const DEFAULT_MAX_FREE_DIM: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdoOptions {
    /// Largest number of tensor factors tried when separating an element.
    pub tensor_bound: usize,
    pub path: AdoPath,
    /// Tensor candidates with larger modules are not tried.
    pub max_module_dim: usize,
    /// The general path gives up when the free algebra it presents `L`
    /// through is larger than this.
    pub max_free_dim: usize,
}

impl Default for AdoOptions {
    fn default() -> Self {
        Self {
            tensor_bound: 4,
            path: AdoPath::Auto,
            max_module_dim: DEFAULT_MAX_MODULE_DIM,
            max_free_dim: DEFAULT_MAX_FREE_DIM,
        }
    }
}

/// A faithful nilpotent multiplicative nondegenerate representation of a
/// nilpotent multiplicative nondegenerate Hom-Lie algebra.
pub fn ado(l: &HomAlgebra, options: &AdoOptions) -> Result<AdoCertificate> {
    if l.flavor() != Flavor::Lie {
        return Err(Error::PreconditionFailed(format!(
            "expected a lie algebra, got {}",
            l.flavor()
        )));
    }
    check_multiplicative(l).into_result(|v| Error::PreconditionFailed(v.to_string()))?;
    check_nondegenerate(l).into_result(|v| Error::PreconditionFailed(v.to_string()))?;
    if nilindex(l).is_none() {
        return Err(Error::PreconditionFailed("algebra is not nilpotent".into()));
    }
    if l.dim() == 0 {
        let rep = HomRepresentation::zero(l.clone(), Matrix::identity(1));
        return Ok(certify(rep, vec![TraceStep::new("trivial", 1)]));
    }
    let graded = match options.path {
        AdoPath::GeneralOnly => None,
        _ => find_grading(l),
    };
    match (graded, options.path) {
        (Some(grading), _) => graded_faithful_rep(l, &grading),
        (None, AdoPath::GradedOnly) => {
            Err(Error::InvalidGrading("no compatible grading found".into()))
        }
        (None, _) => general_path(l, options),
    }
}

fn assemble(summands: &[HomRepresentation]) -> Result<HomRepresentation> {
    let mut iter = summands.iter();
    let first = iter.next().expect("at least one summand").clone();
    iter.try_fold(first, |acc, s| direct_sum(&acc, s))
}

/// Drops summands whose kernels are already covered by the others.
fn prune(summands: Vec<HomRepresentation>) -> Vec<HomRepresentation> {
    let kernels: Vec<Subspace> = summands.iter().map(rep_kernel).collect();
    let mut keep = vec![true; summands.len()];
    for i in 0..summands.len() {
        keep[i] = false;
        let joint = kernels
            .iter()
            .zip(&keep)
            .filter(|(_, k)| **k)
            .map(|(s, _)| s.clone())
            .reduce(|a, b| a.intersection(&b));
        if !joint.is_some_and(|s| s.is_zero()) {
            keep[i] = true;
        }
    }
    summands
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(s, _)| s)
        .collect()
}

/// Present `L = M/I`, start from the graded representation of `M` and
/// descend along `I = I₀ ⊃ I₁ ⊃ … ⊃ I_r = 0`, separating every direction of
/// `M/Iⱼ` by representations living on kernels of the central element.
fn general_path(l: &HomAlgebra, options: &AdoOptions) -> Result<AdoCertificate> {
    let presentation = present_as_quotient_capped(l, options.max_free_dim)?;
    let free = &presentation.free;
    let m = &free.algebra;
    let mut trace = vec![
        TraceStep::new("free-algebra", m.dim()),
        TraceStep::new("presentation-kernel", presentation.kernel.dim()),
    ];
    let base = graded_faithful_rep(m, &Grading::standard(free.grading.clone()))?;
    trace.push(TraceStep::new(
        "free-algebra-rep",
        base.representation.module_dim(),
    ));
    let chain = chain_below_ideal(m, &presentation.kernel)?;
    let r = chain.len() - 1;
    let mut summands = vec![base.representation];
    let mut tilde = quotient_algebra(m, &chain[r])?;
    for j in (0..r).rev() {
        let q = quotient_algebra(m, &chain[j])?;
        let projection = &q.projection * &tilde.quotient.section_matrix();
        let lifted = chain[j]
            .basis()
            .iter()
            .find(|v| !chain[j + 1].contains(v))
            .expect("chain descends strictly");
        let z = tilde.quotient.project(lifted);
        let section = super::distinguish::right_inverse(&projection)?;

        let mut next: Vec<HomRepresentation> = Vec::new();
        let mut unseparated = Subspace::full(q.algebra.dim());
        while let Some(x) = unseparated.basis().first().cloned() {
            let x_lift = section.mul_vec(&x);
            let rho = distinguishing_rep_capped(
                &tilde.algebra,
                &z,
                &x_lift,
                &summands,
                options.tensor_bound,
                options.max_module_dim,
            )?;
            let tau = restrict_to_z_kernel(&tilde.algebra, &rho, &z, &q.algebra, &projection)?;
            let tau = cyclic_shrink(&tau, &x)?;
            unseparated = unseparated.intersection(&rep_kernel(&tau));
            next.push(tau);
        }
        summands = prune(next);
        let total: usize = summands.iter().map(HomRepresentation::module_dim).sum();
        trace.push(TraceStep::new(
            format!("quotient-{}", q.algebra.dim()),
            total,
        ));
        tilde = q;
    }

    // `tilde` is now M/I; identify it with L through the generators.
    let deg = free.poly.degree().unwrap_or(1);
    let columns: Vec<_> = (0..l.dim())
        .map(|i| tilde.projection.mul_vec(&unit_vector(m.dim(), i * deg)))
        .collect();
    let iso = Matrix::from_columns(tilde.algebra.dim(), &columns);
    check_homomorphism(l, &tilde.algebra, &iso).into_result(Error::NotAHomomorphism)?;
    let rep = pullback(&assemble(&summands)?, l, &iso)?;
    trace.push(TraceStep::new("assembled", rep.module_dim()));
    Ok(certify(rep, trace))
}
