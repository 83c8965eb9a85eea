use std::collections::VecDeque;

use super::algebra::{Flavor, HomAlgebra};
use super::sparse;
use crate::exactla::{Matrix, Scalar, Subspace};

/// Span of all products `a · b` with `a ∈ left`, `b ∈ right`.
pub fn bracket_span(l: &HomAlgebra, left: &Subspace, right: &Subspace) -> Subspace {
    let rs: Vec<_> = right
        .basis()
        .iter()
        .map(|v| sparse::from_dense(v))
        .collect();
    let mut out = Subspace::zero(l.dim());
    for a in left.basis() {
        let a = sparse::from_dense(a);
        for b in &rs {
            let p = l.mul_sparse(&a, b);
            if !p.is_empty() {
                out.insert(&sparse::to_dense(&p, l.dim()));
            }
        }
    }
    out
}

/// `{z : z · e_j = 0 for all j}`.
pub fn center(l: &HomAlgebra) -> Subspace {
    let d = l.dim();
    let mut m = Matrix::zeros(d * d, d);
    for i in 0..d {
        for j in 0..d {
            for (k, c) in l.basis_product(i, j) {
                m[(j * d + k, i)] = c.clone();
            }
        }
    }
    m.kernel()
}

/// `L¹ = L`, `Lⁿ = [Lⁿ⁻¹, L]`, computed until a term repeats. The last entry
/// is the zero subspace exactly when the algebra is nilpotent.
pub fn lower_central_series(l: &HomAlgebra) -> Vec<Subspace> {
    let full = Subspace::full(l.dim());
    let mut series = vec![full.clone()];
    loop {
        let last = series.last().unwrap();
        if last.is_zero() {
            return series;
        }
        let next = bracket_span(l, last, &full);
        if &next == last {
            return series;
        }
        series.push(next);
    }
}

/// First `n` with `Lⁿ = 0`, or `None` when the series stabilizes above zero.
pub fn nilindex(l: &HomAlgebra) -> Option<usize> {
    let series = lower_central_series(l);
    series.last().unwrap().is_zero().then_some(series.len())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureMode {
    Subalgebra,
    Ideal,
}

/// Least subspace containing `seed` that is stable under the twist and
/// closed under products (with itself, or with the whole algebra).
pub fn hom_closure(l: &HomAlgebra, seed: &Subspace, mode: ClosureMode) -> Subspace {
    let d = l.dim();
    let mut span = Subspace::zero(d);
    let mut queue: VecDeque<Vec<Scalar>> = VecDeque::new();
    for v in seed.basis() {
        if span.insert(v) {
            queue.push_back(v.clone());
        }
    }
    let two_sided = l.flavor() != Flavor::Lie;
    while let Some(v) = queue.pop_front() {
        let vs = sparse::from_dense(&v);
        let mut fresh = vec![sparse::to_dense(&l.twist_sparse(&vs), d)];
        let partners: Vec<Vec<Scalar>> = match mode {
            ClosureMode::Ideal => (0..d).map(|j| crate::exactla::unit_vector(d, j)).collect(),
            ClosureMode::Subalgebra => span.basis().to_vec(),
        };
        for w in partners {
            let ws = sparse::from_dense(&w);
            fresh.push(sparse::to_dense(&l.mul_sparse(&ws, &vs), d));
            if two_sided || mode == ClosureMode::Subalgebra {
                fresh.push(sparse::to_dense(&l.mul_sparse(&vs, &ws), d));
            }
        }
        for u in fresh {
            if span.insert(&u) {
                queue.push_back(u);
            }
        }
    }
    span
}

/// Twist-stable two-sided ideal test.
pub fn is_ideal(l: &HomAlgebra, sub: &Subspace) -> bool {
    hom_closure(l, sub, ClosureMode::Ideal) == *sub
}
