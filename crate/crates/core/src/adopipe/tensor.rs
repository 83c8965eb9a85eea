//! Tensor products of representations, applied factor by factor to sparse
//! vectors instead of being expanded into Kronecker matrices.

use std::collections::HashMap;

use num_traits::One;

use crate::error::Result;
use crate::exactla::{unit_vector, Matrix, Scalar};
use crate::homcore::{sparse, HomAlgebra, SparseVec};
use crate::homrep::HomRepresentation;

fn sparse_columns(m: &Matrix) -> Vec<SparseVec> {
    (0..m.cols())
        .map(|j| sparse::from_dense(&m.column(j)))
        .collect()
}

/// `ρ₁ ⊗ … ⊗ ρ_k`; `e_{i₁} ⊗ … ⊗ e_{i_k}` has the row-major index, as for
/// repeated Kronecker products.
pub(crate) struct LazyTensor<'a> {
    factors: Vec<&'a HomRepresentation>,
    dims: Vec<usize>,
    strides: Vec<usize>,
    betas: Vec<Vec<SparseVec>>,
}

type FactorColumns = Vec<Vec<SparseVec>>;

impl<'a> LazyTensor<'a> {
    pub(crate) fn new(factors: Vec<&'a HomRepresentation>) -> Self {
        let dims: Vec<usize> = factors.iter().map(|f| f.module_dim()).collect();
        let mut strides = vec![1; dims.len()];
        for i in (0..dims.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * dims[i + 1];
        }
        let betas = factors.iter().map(|f| sparse_columns(f.beta())).collect();
        Self {
            factors,
            dims,
            strides,
            betas,
        }
    }

    pub(crate) fn size(&self) -> usize {
        self.dims.iter().product()
    }

    pub(crate) fn action_columns(&self, x: &[Scalar]) -> FactorColumns {
        self.factors
            .iter()
            .map(|f| sparse_columns(&f.action(x)))
            .collect()
    }

    fn apply_mode(&self, mode: usize, cols: &[SparseVec], v: &SparseVec) -> SparseVec {
        let (stride, dim) = (self.strides[mode], self.dims[mode]);
        let mut terms = Vec::new();
        for (idx, c) in v {
            let digit = (idx / stride) % dim;
            let base = idx - digit * stride;
            terms.extend(cols[digit].iter().map(|(r, a)| (base + r * stride, a * c)));
        }
        sparse::normalize(terms)
    }

    /// `Σᵢ β ⊗ … ⊗ ρᵢ(x) ⊗ … ⊗ β` applied to `v`.
    pub(crate) fn apply(&self, action: &FactorColumns, v: &SparseVec) -> SparseVec {
        let k = self.factors.len();
        let parts: Vec<SparseVec> = (0..k)
            .map(|i| {
                let mut w = self.apply_mode(i, &action[i], v);
                for j in (0..k).filter(|&j| j != i) {
                    w = self.apply_mode(j, &self.betas[j], &w);
                }
                w
            })
            .collect();
        sparse::add_all(&parts)
    }

    pub(crate) fn apply_beta(&self, v: &SparseVec) -> SparseVec {
        (0..self.factors.len()).fold(v.clone(), |w, j| self.apply_mode(j, &self.betas[j], &w))
    }
}

/// Sparse vectors in echelon form by leading index, each optionally carrying
/// the combination of inputs it came from.
#[derive(Default)]
struct Echelon {
    rows: Vec<SparseVec>,
    combos: Vec<SparseVec>,
    lead: HashMap<usize, usize>,
}

impl Echelon {
    /// Eliminates leading entries; returns the residual (empty when `v` lies
    /// in the span), the coefficients used and the matching combination.
    fn reduce(
        &self,
        mut v: SparseVec,
        mut combo: SparseVec,
    ) -> (SparseVec, Vec<(usize, Scalar)>, SparseVec) {
        let mut used = Vec::new();
        while let Some((i, c)) = v.first().cloned() {
            let Some(&r) = self.lead.get(&i) else { break };
            let coef = &c / &self.rows[r][0].1;
            v = sparse::sub(&v, &sparse::scale(&self.rows[r], &coef));
            if !self.combos.is_empty() {
                combo = sparse::sub(&combo, &sparse::scale(&self.combos[r], &coef));
            }
            used.push((r, coef));
        }
        (v, used, combo)
    }

    fn push(&mut self, v: SparseVec, combo: Option<SparseVec>) {
        self.lead.insert(v[0].0, self.rows.len());
        self.rows.push(v);
        if let Some(c) = combo {
            self.combos.push(c);
        }
    }

    fn insert(&mut self, v: SparseVec) -> bool {
        let (rest, _, _) = self.reduce(v, Vec::new());
        if rest.is_empty() {
            return false;
        }
        self.push(rest, None);
        true
    }
}

/// A vector `v` of the tensor product with `ρ(z)v = 0` and `ρ(x)v ≠ 0`, found
/// by column reduction of `ρ(z)`, which yields a kernel basis one vector at
/// a time.
pub(crate) fn find_witness(t: &LazyTensor, z: &[Scalar], x: &[Scalar]) -> Option<SparseVec> {
    let zc = t.action_columns(z);
    let xc = t.action_columns(x);
    let mut ech = Echelon::default();
    for c in 0..t.size() {
        let e: SparseVec = vec![(c, Scalar::one())];
        let (rest, _, combo) = ech.reduce(t.apply(&zc, &e), e);
        if rest.is_empty() {
            if !t.apply(&xc, &combo).is_empty() {
                return Some(combo);
            }
        } else {
            ech.push(rest, Some(combo));
        }
    }
    None
}

/// The submodule generated by `seed`, as a representation in the basis of
/// its echelon rows.
pub(crate) fn generated(
    t: &LazyTensor,
    algebra: &HomAlgebra,
    seed: SparseVec,
) -> Result<HomRepresentation> {
    let n = algebra.dim();
    let actions: Vec<FactorColumns> = (0..n)
        .map(|a| t.action_columns(&unit_vector(n, a)))
        .collect();
    let mut ech = Echelon::default();
    let mut queue = Vec::new();
    if ech.insert(seed.clone()) {
        queue.push(seed);
    }
    while let Some(v) = queue.pop() {
        let images = actions
            .iter()
            .map(|a| t.apply(a, &v))
            .chain(std::iter::once(t.apply_beta(&v)));
        for w in images {
            if ech.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    let m = ech.rows.len();
    let restrict = |f: &dyn Fn(&SparseVec) -> SparseVec| -> Matrix {
        let mut out = Matrix::zeros(m, m);
        for (j, row) in ech.rows.iter().enumerate() {
            let (rest, used, _) = ech.reduce(f(row), Vec::new());
            debug_assert!(rest.is_empty(), "generated subspace is stable");
            for (i, c) in used {
                out[(i, j)] = c;
            }
        }
        out
    };
    let matrices = actions
        .iter()
        .map(|a| restrict(&|v| t.apply(a, v)))
        .collect();
    let beta = restrict(&|v| t.apply_beta(v));
    HomRepresentation::new(algebra.clone(), matrices, beta)
}
