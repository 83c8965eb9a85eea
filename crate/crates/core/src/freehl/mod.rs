//! Free multiplicative nilpotent Hom-Lie algebras `M_{k,n,f}` and
//! presentations of algebras as their quotients.
//!
//! The twist of a multiplicative algebra can be pushed onto the leaves of a
//! bracket word, so words are binary trees whose leaves are `αˡ(xᵢ)` with
//! `l < deg f`. Degree `d` is built from brackets `[u, v]` of basis words
//! `u < v` with `deg u + deg v = d`, modulo the Hom-Jacobi identities and
//! `f(α) = 0`; brackets of total degree `≥ n` vanish.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactla::{Matrix, Poly, Scalar, Subspace};
use crate::homcore::{
    check_homomorphism, check_multiplicative, check_nondegenerate, is_ideal, nilindex, sparse,
    Flavor, HomAlgebra, SparseVec,
};

/// Labeled binary tree: leaves are `αˡ(x_i)`, nodes are brackets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BracketWord {
    Leaf { generator: usize, power: usize },
    Bracket(Box<BracketWord>, Box<BracketWord>),
}

impl BracketWord {
    pub fn degree(&self) -> usize {
        match self {
            BracketWord::Leaf { .. } => 1,
            BracketWord::Bracket(a, b) => a.degree() + b.degree(),
        }
    }
}

impl fmt::Display for BracketWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketWord::Leaf {
                generator,
                power: 0,
            } => write!(f, "x{}", generator + 1),
            BracketWord::Leaf {
                generator,
                power: 1,
            } => write!(f, "a(x{})", generator + 1),
            BracketWord::Leaf { generator, power } => write!(f, "a^{power}(x{})", generator + 1),
            BracketWord::Bracket(a, b) => write!(f, "[{a}, {b}]"),
        }
    }
}

/// One homogeneous component of degree `d ≥ 2`.
#[derive(Clone, Debug)]
pub struct DegreeData {
    /// Spanning brackets `(u, v)`, `u < v`, as global basis indices.
    pub pairs: Vec<(usize, usize)>,
    /// Relations among the spanning brackets, in pair coordinates.
    pub relations: Subspace,
}

/// `M_{k,n,f}` with its graded basis of bracket words.
#[derive(Clone, Debug)]
pub struct GradedPresentation {
    pub generators: usize,
    pub class: usize,
    pub poly: Poly,
    pub algebra: HomAlgebra,
    /// Basis words, in basis order.
    pub words: Vec<BracketWord>,
    /// Degree of each basis element.
    pub grading: Vec<usize>,
    /// For degree ≥ 2 basis elements, the bracket `(u, v)` they stand for.
    pub factors: Vec<Option<(usize, usize)>>,
    /// Component data for degrees `2..n`, indexed by `d - 2`.
    pub components: Vec<DegreeData>,
}

impl GradedPresentation {
    /// Basis indices of degree `d`.
    pub fn degree_range(&self, d: usize) -> std::ops::Range<usize> {
        let start = self.grading.partition_point(|&g| g < d);
        let end = self.grading.partition_point(|&g| g <= d);
        start..end
    }
}

/// Builds `M_{k,n,f}` for `k ≥ 1` generators, nilindex bound `n ≥ 2` and a
/// monic `f` of degree `≥ 1`.
pub fn free_multiplicative_nilpotent(k: usize, n: usize, f: &Poly) -> Result<GradedPresentation> {
    build_free(k, n, f, usize::MAX)
}

/// As [`free_multiplicative_nilpotent`], giving up with `SizeLimitExceeded`
/// once the degrees built so far have more than `max_dim` basis elements.
pub fn free_multiplicative_nilpotent_capped(
    k: usize,
    n: usize,
    f: &Poly,
    max_dim: usize,
) -> Result<GradedPresentation> {
    build_free(k, n, f, max_dim)
}

fn build_free(k: usize, n: usize, f: &Poly, max_dim: usize) -> Result<GradedPresentation> {
    if k == 0 || n < 2 {
        return Err(Error::PreconditionFailed(format!(
            "need at least one generator and class >= 2, got k={k}, n={n}"
        )));
    }
    let deg = match f.degree() {
        Some(d) if d >= 1 && f.is_monic() => d,
        _ => {
            return Err(Error::PreconditionFailed(format!(
                "twist polynomial must be monic of degree >= 1, got {f}"
            )))
        }
    };

    // Degree 1: leaves αˡ(x_i) at index i·deg + l, twist = companion of f.
    let mut words: Vec<BracketWord> = Vec::new();
    let mut grading = Vec::new();
    let mut factors = Vec::new();
    let mut twist_cols: Vec<SparseVec> = Vec::new();
    for i in 0..k {
        for l in 0..deg {
            words.push(BracketWord::Leaf {
                generator: i,
                power: l,
            });
            grading.push(1);
            factors.push(None);
            twist_cols.push(if l + 1 < deg {
                vec![(i * deg + l + 1, Scalar::one())]
            } else {
                (0..deg)
                    .filter(|&t| !f.coeff(t).is_zero())
                    .map(|t| (i * deg + t, -f.coeff(t)))
                    .collect()
            });
        }
    }
    // Brackets of basis elements, keyed by (u, v) with u < v.
    let mut table: HashMap<(usize, usize), SparseVec> = HashMap::new();
    let mut starts = vec![0, 0, words.len()]; // starts[d] = first index of degree d
    let mut components = Vec::new();

    for d in 2..n {
        if words.len() > max_dim {
            return Err(size_limit(words.len(), d - 1, max_dim));
        }
        let range = |deg_a: usize| starts[deg_a]..starts[deg_a + 1];
        let mut pairs = Vec::new();
        for a in 1..=d / 2 {
            let b = d - a;
            for u in range(a) {
                for v in range(b) {
                    if u < v {
                        pairs.push((u, v));
                    }
                }
            }
        }
        pairs.sort_unstable();
        let index: HashMap<(usize, usize), usize> =
            pairs.iter().enumerate().map(|(i, p)| (*p, i)).collect();
        let np = pairs.len();
        // Pair coordinates are stored reversed so that elimination pivots on
        // the largest brackets and the smallest ones survive as the basis.
        let rev = |i: usize| np - 1 - i;
        let bracket_w = |x: &SparseVec, y: &SparseVec| -> SparseVec {
            let mut terms = Vec::new();
            for (u, a) in x {
                for (v, b) in y {
                    match u.cmp(v) {
                        std::cmp::Ordering::Less => terms.push((index[&(*u, *v)], a * b)),
                        std::cmp::Ordering::Greater => terms.push((index[&(*v, *u)], -(a * b))),
                        std::cmp::Ordering::Equal => {}
                    }
                }
            }
            sparse::normalize(terms)
        };
        let lower_bracket = |u: usize, v: usize| -> SparseVec {
            match u.cmp(&v) {
                std::cmp::Ordering::Less => table.get(&(u, v)).cloned().unwrap_or_default(),
                std::cmp::Ordering::Greater => sparse::scale(
                    &table.get(&(v, u)).cloned().unwrap_or_default(),
                    &-Scalar::one(),
                ),
                std::cmp::Ordering::Equal => Vec::new(),
            }
        };
        let mut relations = Subspace::zero(np);
        let add_relation = |v: &SparseVec, rel: &mut Subspace| {
            if v.is_empty() {
                return;
            }
            let mut dense = vec![Scalar::zero(); np];
            for (i, c) in v {
                dense[rev(*i)] = c.clone();
            }
            rel.insert(&dense);
        };

        // Hom-Jacobi on strictly increasing triples; the cyclic sum is
        // alternating modulo anticommutativity.
        let total = starts[d];
        for u in 0..total {
            for v in u + 1..total {
                let duv = grading[u] + grading[v];
                if duv >= d {
                    continue;
                }
                for w in v + 1..total {
                    if duv + grading[w] != d {
                        continue;
                    }
                    let parts = [
                        bracket_w(&lower_bracket(u, v), &twist_cols[w]),
                        bracket_w(&lower_bracket(w, u), &twist_cols[v]),
                        bracket_w(&lower_bracket(v, w), &twist_cols[u]),
                    ];
                    add_relation(&sparse::add_all(&parts), &mut relations);
                }
            }
        }

        // f(α) = 0, with α([u, v]) = [α(u), α(v)].
        let alpha_pair: Vec<SparseVec> = pairs
            .iter()
            .map(|&(u, v)| bracket_w(&twist_cols[u], &twist_cols[v]))
            .collect();
        let apply_alpha = |x: &SparseVec| -> SparseVec {
            let mut terms = Vec::new();
            for (p, c) in x {
                terms.extend(alpha_pair[*p].iter().map(|(q, a)| (*q, a * c)));
            }
            sparse::normalize(terms)
        };
        for p in 0..np {
            let mut power: SparseVec = vec![(p, Scalar::one())];
            let mut acc: Vec<SparseVec> = Vec::with_capacity(deg + 1);
            for t in 0..=deg {
                let c = f.coeff(t);
                if !c.is_zero() {
                    acc.push(sparse::scale(&power, &c));
                }
                if t < deg {
                    power = apply_alpha(&power);
                }
            }
            add_relation(&sparse::add_all(&acc), &mut relations);
        }

        // Surviving brackets form the basis; eliminated ones are rewritten.
        let mut is_pivot = vec![false; np];
        for &c in relations.pivots() {
            is_pivot[rev(c)] = true;
        }
        let basis_pairs: Vec<usize> = (0..np).filter(|&p| !is_pivot[p]).collect();
        let offset = words.len();
        let local: HashMap<usize, usize> = basis_pairs
            .iter()
            .enumerate()
            .map(|(i, &p)| (p, offset + i))
            .collect();
        let mut projection: Vec<SparseVec> = vec![Vec::new(); np];
        for &p in &basis_pairs {
            projection[p] = vec![(local[&p], Scalar::one())];
        }
        for (row, &c) in relations.basis().iter().zip(relations.pivots()) {
            let p = rev(c);
            projection[p] = row
                .iter()
                .enumerate()
                .filter(|(j, x)| *j != c && !x.is_zero())
                .map(|(j, x)| (local[&rev(j)], -x.clone()))
                .collect();
            projection[p] = sparse::normalize(std::mem::take(&mut projection[p]));
        }

        for &p in &basis_pairs {
            let (u, v) = pairs[p];
            words.push(BracketWord::Bracket(
                Box::new(words[u].clone()),
                Box::new(words[v].clone()),
            ));
            grading.push(d);
            factors.push(Some((u, v)));
        }
        for (p, &(u, v)) in pairs.iter().enumerate() {
            table.insert((u, v), projection[p].clone());
        }
        for p in &basis_pairs {
            let mut terms = Vec::new();
            for (q, c) in &alpha_pair[*p] {
                terms.extend(projection[*q].iter().map(|(i, a)| (*i, a * c)));
            }
            twist_cols.push(sparse::normalize(terms));
        }
        starts.push(words.len());
        components.push(DegreeData { pairs, relations });
    }

    let dim = words.len();
    if dim > max_dim {
        return Err(size_limit(dim, n - 1, max_dim));
    }
    let mut products = vec![Vec::new(); dim * dim];
    for (&(u, v), val) in &table {
        products[u * dim + v] = val.clone();
        products[v * dim + u] = sparse::scale(val, &-Scalar::one());
    }
    let mut twist = Matrix::zeros(dim, dim);
    for (j, col) in twist_cols.iter().enumerate() {
        for (i, c) in col {
            twist[(*i, j)] = c.clone();
        }
    }
    let algebra = HomAlgebra::from_sparse(Flavor::Lie, dim, products, twist)?;
    Ok(GradedPresentation {
        generators: k,
        class: n,
        poly: f.clone(),
        algebra,
        words,
        grading,
        factors,
        components,
    })
}

/// The homomorphism `M → L` sending `αˡ(x_i)` to `α_Lˡ(targets[i])`, as a
/// `dim(L) × dim(M)` matrix.
pub fn universal_map(
    m: &GradedPresentation,
    l: &HomAlgebra,
    targets: &[Vec<Scalar>],
) -> Result<Matrix> {
    if targets.len() != m.generators || targets.iter().any(|t| t.len() != l.dim()) {
        return Err(Error::DimensionMismatch(format!(
            "need {} targets of length {}",
            m.generators,
            l.dim()
        )));
    }
    check_multiplicative(l).into_result(|v| Error::PreconditionFailed(v.to_string()))?;
    if !m.poly.eval_matrix(l.twist()).is_zero() {
        return Err(Error::PolynomialNotSatisfied(m.poly.to_string()));
    }
    match nilindex(l) {
        None => return Err(Error::NotNilpotent),
        Some(c) if c > m.class => {
            return Err(Error::NilindexExceeded {
                nilindex: c,
                class: m.class,
            })
        }
        Some(_) => {}
    }
    let deg = m.poly.degree().unwrap_or(0);
    let mut images: Vec<Vec<Scalar>> = Vec::with_capacity(m.words.len());
    for (idx, factor) in m.factors.iter().enumerate() {
        let image = match factor {
            None => {
                let (i, p) = (idx / deg, idx % deg);
                let mut v = targets[i].clone();
                for _ in 0..p {
                    v = l.apply_twist(&v);
                }
                v
            }
            Some((u, v)) => l.mul(&images[*u], &images[*v]),
        };
        images.push(image);
    }
    let map = Matrix::from_columns(l.dim(), &images);
    check_homomorphism(&m.algebra, l, &map).into_result(Error::NotAHomomorphism)?;
    Ok(map)
}

/// `L ≅ M_{k,n,f} / I` with `k = dim L`, `n = max(nilindex, 2)` and `f` the
/// minimal polynomial of the twist.
#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    pub free: GradedPresentation,
    /// `dim(L) × dim(M)`.
    pub surjection: Matrix,
    pub kernel: Subspace,
}

fn size_limit(dim: usize, degree: usize, max_dim: usize) -> Error {
    Error::SizeLimitExceeded(format!(
        "free algebra reaches dimension {dim} by degree {degree}, limit {max_dim}"
    ))
}

pub fn present_as_quotient(l: &HomAlgebra) -> Result<QuotientPresentation> {
    present_as_quotient_capped(l, usize::MAX)
}

/// As [`present_as_quotient`] with a limit on the free algebra's dimension.
pub fn present_as_quotient_capped(
    l: &HomAlgebra,
    max_free_dim: usize,
) -> Result<QuotientPresentation> {
    check_multiplicative(l).into_result(|v| Error::PreconditionFailed(v.to_string()))?;
    check_nondegenerate(l).into_result(|v| Error::PreconditionFailed(v.to_string()))?;
    let class = nilindex(l).ok_or(Error::NotNilpotent)?.max(2);
    let f = l.twist().min_poly();
    let free = build_free(l.dim().max(1), class, &f, max_free_dim)?;
    let targets: Vec<Vec<Scalar>> = (0..l.dim())
        .map(|i| crate::exactla::unit_vector(l.dim(), i))
        .collect();
    let targets = if l.dim() == 0 {
        vec![Vec::new()]
    } else {
        targets
    };
    let surjection = universal_map(&free, l, &targets)?;
    let kernel = surjection.kernel();
    if !is_ideal(&free.algebra, &kernel) {
        return Err(Error::NotAnIdeal);
    }
    Ok(QuotientPresentation {
        free,
        surjection,
        kernel,
    })
}
