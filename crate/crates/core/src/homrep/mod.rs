//! Representations of Hom-Lie algebras: `ρ([x,y])∘β = ρ(α(x))∘ρ(y) − ρ(α(y))∘ρ(x)`.

use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar, Subspace};
use crate::homcore::{sparse, Flavor, HomAlgebra};
use crate::verdict::{Verdict, Violation};

/// Side on which the algebra acts; Hom-Lie representations are left ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Orientation {
    #[default]
    Left,
    Right,
}

impl Orientation {
    pub fn name(self) -> &'static str {
        match self {
            Orientation::Left => "left",
            Orientation::Right => "right",
        }
    }
}

/// A representation stored by the action matrices of the basis elements
/// together with the module twist `β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomRepresentation {
    algebra: HomAlgebra,
    actions: Vec<Matrix>,
    beta: Matrix,
    orientation: Orientation,
}

impl HomRepresentation {
    pub fn new(algebra: HomAlgebra, actions: Vec<Matrix>, beta: Matrix) -> Result<Self> {
        Self::with_orientation(algebra, actions, beta, Orientation::Left)
    }

    pub fn with_orientation(
        algebra: HomAlgebra,
        actions: Vec<Matrix>,
        beta: Matrix,
        orientation: Orientation,
    ) -> Result<Self> {
        if actions.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for an algebra of dimension {}",
                actions.len(),
                algebra.dim()
            )));
        }
        let m = beta.rows();
        if beta.cols() != m {
            return Err(Error::DimensionMismatch(
                "module twist is not square".into(),
            ));
        }
        if let Some(i) = actions.iter().position(|a| a.rows() != m || a.cols() != m) {
            return Err(Error::DimensionMismatch(format!(
                "action of e{} is {}x{}, module has dimension {m}",
                i + 1,
                actions[i].rows(),
                actions[i].cols()
            )));
        }
        Ok(Self {
            algebra,
            actions,
            beta,
            orientation,
        })
    }

    /// The representation where everything acts by zero.
    pub fn zero(algebra: HomAlgebra, beta: Matrix) -> Self {
        let m = beta.rows();
        let actions = vec![Matrix::zeros(m, m); algebra.dim()];
        Self::new(algebra, actions, beta).expect("shapes agree by construction")
    }

    pub fn algebra(&self) -> &HomAlgebra {
        &self.algebra
    }

    pub fn module_dim(&self) -> usize {
        self.beta.rows()
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// `ρ(x)` for a coordinate vector `x`.
    pub fn action(&self, x: &[Scalar]) -> Matrix {
        let m = self.module_dim();
        Matrix::combination(x, &self.actions, (m, m))
    }

    /// `ρ(α(e_i))` for every basis element.
    pub fn twisted_actions(&self) -> Vec<Matrix> {
        (0..self.algebra.dim())
            .map(|i| self.action(&self.algebra.twist().column(i)))
            .collect()
    }
}

fn flatten_difference(a: &Matrix, b: &Matrix) -> Vec<Scalar> {
    a.as_slice()
        .iter()
        .zip(b.as_slice())
        .map(|(x, y)| x - y)
        .collect()
}

/// `ρ([eᵢ,eⱼ])∘β = ρ(α(eᵢ))∘ρ(eⱼ) − ρ(α(eⱼ))∘ρ(eᵢ)` on all basis pairs.
pub fn check_rep(rho: &HomRepresentation) -> Verdict {
    let l = rho.algebra();
    let d = l.dim();
    let twisted = rho.twisted_actions();
    let anti = l.flavor() == Flavor::Lie;
    for i in 0..d {
        // Both sides are antisymmetric in (i, j) for a Lie bracket.
        let start = if anti { i + 1 } else { 0 };
        for j in start..d {
            let bracket = sparse::to_dense(l.basis_product(i, j), d);
            let lhs = &rho.action(&bracket) * rho.beta();
            let rhs = &(&twisted[i] * &rho.actions[j]) - &(&twisted[j] * &rho.actions[i]);
            if lhs != rhs {
                return Verdict::Fails(Violation::new(
                    "representation",
                    vec![i, j],
                    flatten_difference(&lhs, &rhs),
                ));
            }
        }
    }
    Verdict::Holds
}

/// `ρ(α(eᵢ))∘β = β∘ρ(eᵢ)` for all `i`.
pub fn check_rep_multiplicative(rho: &HomRepresentation) -> Verdict {
    for (i, t) in rho.twisted_actions().iter().enumerate() {
        let lhs = t * rho.beta();
        let rhs = rho.beta() * &rho.actions[i];
        if lhs != rhs {
            return Verdict::Fails(Violation::new(
                "rep-multiplicative",
                vec![i],
                flatten_difference(&lhs, &rhs),
            ));
        }
    }
    Verdict::Holds
}

/// `β` has zero kernel.
pub fn check_rep_nondegenerate(rho: &HomRepresentation) -> Verdict {
    match rho.beta().kernel().basis().first() {
        None => Verdict::Holds,
        Some(v) => Verdict::Fails(Violation::new("nondegenerate", vec![], v.clone())),
    }
}

/// `ρ(x) = [x, ·]` on `L` itself with `β = α`.
pub fn adjoint_rep(l: &HomAlgebra) -> HomRepresentation {
    let actions = (0..l.dim()).map(|i| l.left_mult_basis(i)).collect();
    HomRepresentation::new(l.clone(), actions, l.twist().clone()).expect("square by construction")
}

/// `L ⊕ V` with `[x, v] = ρ(x)(v)`, `[V, V] = 0` and twist `α ⊕ β`.
pub fn semidirect_sum(rho: &HomRepresentation) -> Result<HomAlgebra> {
    check_rep(rho).into_result(Error::NotARepresentation)?;
    Ok(semidirect_sum_unchecked(rho))
}

pub(crate) fn semidirect_sum_unchecked(rho: &HomRepresentation) -> HomAlgebra {
    let l = rho.algebra();
    let (n, m) = (l.dim(), rho.module_dim());
    let big = n + m;
    let mut products = vec![Vec::new(); big * big];
    for i in 0..n {
        for j in 0..n {
            products[i * big + j] = l.basis_product(i, j).clone();
        }
        for k in 0..m {
            let image: Vec<(usize, Scalar)> = (0..m)
                .filter(|&r| !num_traits::Zero::is_zero(&rho.actions[i][(r, k)]))
                .map(|r| (n + r, rho.actions[i][(r, k)].clone()))
                .collect();
            products[(n + k) * big + i] = sparse::scale(&image, &-Scalar::from_integer(1.into()));
            products[i * big + n + k] = image;
        }
    }
    let twist = l.twist().block_diag(rho.beta());
    HomAlgebra::from_sparse(l.flavor(), big, products, twist)
        .expect("antisymmetric by construction")
}

/// Block-diagonal direct sum.
pub fn direct_sum(rho: &HomRepresentation, tau: &HomRepresentation) -> Result<HomRepresentation> {
    if rho.algebra() != tau.algebra() {
        return Err(Error::BaseMismatch);
    }
    let actions = rho
        .actions
        .iter()
        .zip(&tau.actions)
        .map(|(a, b)| a.block_diag(b))
        .collect();
    HomRepresentation::new(rho.algebra.clone(), actions, rho.beta.block_diag(&tau.beta))
}

/// `(ρ⊗τ)(x) = ρ(x)⊗γ + β⊗τ(x)` with module twist `β⊗γ`; both factors must
/// be multiplicative.
pub fn tensor_rep(rho: &HomRepresentation, tau: &HomRepresentation) -> Result<HomRepresentation> {
    if rho.algebra() != tau.algebra() {
        return Err(Error::BaseMismatch);
    }
    check_rep_multiplicative(rho).into_result(Error::NotMultiplicative)?;
    check_rep_multiplicative(tau).into_result(Error::NotMultiplicative)?;
    Ok(tensor_rep_unchecked(rho, tau))
}

pub(crate) fn tensor_rep_unchecked(
    rho: &HomRepresentation,
    tau: &HomRepresentation,
) -> HomRepresentation {
    let actions = rho
        .actions
        .iter()
        .zip(&tau.actions)
        .map(|(a, b)| &a.kron(&tau.beta) + &rho.beta.kron(b))
        .collect();
    HomRepresentation::new(rho.algebra.clone(), actions, rho.beta.kron(&tau.beta))
        .expect("shapes agree by construction")
}

/// Least `n` such that every product of `n` action matrices vanishes, or
/// `None` if the action matrices do not generate a nilpotent algebra.
pub fn rep_nilindex(rho: &HomRepresentation) -> Option<usize> {
    let m = rho.module_dim();
    let flat = |a: &Matrix| a.as_slice().to_vec();
    let mut span = Subspace::span(m * m, rho.actions.iter().map(flat));
    let mut k = 1;
    // A nilpotent algebra of m×m matrices has all m-fold products zero.
    while !span.is_zero() {
        if k > m {
            return None;
        }
        let mut next = Subspace::zero(m * m);
        for v in span.basis() {
            let a = Matrix::from_rows(v.chunks(m.max(1)).map(<[Scalar]>::to_vec).collect());
            for b in &rho.actions {
                let p = &a * b;
                if !p.is_zero() {
                    next.insert(p.as_slice());
                }
            }
        }
        span = next;
        k += 1;
    }
    Some(k)
}

/// `{x : ρ(x) = 0}`.
pub fn rep_kernel(rho: &HomRepresentation) -> Subspace {
    let m = rho.module_dim();
    let cols: Vec<Vec<Scalar>> = rho.actions.iter().map(|a| a.as_slice().to_vec()).collect();
    Matrix::from_columns(m * m, &cols).kernel()
}

pub fn is_faithful(rho: &HomRepresentation) -> bool {
    let m = rho.module_dim();
    let mut span = Subspace::zero(m * m);
    rho.actions.iter().all(|a| span.insert(a.as_slice()))
}

/// Representation of `src` with `e_i ↦ ρ(map e_i)`; `map` is a
/// `dim(ρ.algebra) × dim(src)` matrix. Laws are not rechecked.
pub fn pullback(
    rho: &HomRepresentation,
    src: &HomAlgebra,
    map: &Matrix,
) -> Result<HomRepresentation> {
    if map.rows() != rho.algebra.dim() || map.cols() != src.dim() {
        return Err(Error::DimensionMismatch(
            "pullback map has the wrong shape".into(),
        ));
    }
    let actions = (0..src.dim()).map(|i| rho.action(&map.column(i))).collect();
    HomRepresentation::new(src.clone(), actions, rho.beta.clone())
}

/// Restriction to a subspace invariant under every action and under `β`,
/// in the coordinates of its canonical basis.
pub fn subrepresentation(rho: &HomRepresentation, w: &Subspace) -> Result<HomRepresentation> {
    let restrict = |a: &Matrix, what: &str| {
        w.restrict_map(a)
            .ok_or_else(|| Error::NotInvariant(format!("subspace is not stable under {what}")))
    };
    let actions = rho
        .actions
        .iter()
        .enumerate()
        .map(|(i, a)| restrict(a, &format!("the action of e{}", i + 1)))
        .collect::<Result<Vec<_>>>()?;
    let beta = restrict(&rho.beta, "the module twist")?;
    HomRepresentation::with_orientation(rho.algebra.clone(), actions, beta, rho.orientation)
}
