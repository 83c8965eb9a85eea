//! Sparse coordinate vectors: sorted `(index, value)` pairs with no zeros.

use num_traits::Zero;

use crate::exactla::Scalar;

pub type SparseVec = Vec<(usize, Scalar)>;

pub fn from_dense(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn to_dense(v: &[(usize, Scalar)], dim: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); dim];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// Sorts, merges equal indices and drops zero coefficients.
pub fn normalize(mut terms: Vec<(usize, Scalar)>) -> SparseVec {
    if terms.len() <= 1 {
        terms.retain(|(_, x)| !x.is_zero());
        return terms;
    }
    terms.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec = Vec::with_capacity(terms.len());
    for (i, x) in terms {
        match out.last_mut() {
            Some((j, y)) if *j == i => *y += x,
            _ => {
                if let Some((_, y)) = out.last() {
                    if y.is_zero() {
                        out.pop();
                    }
                }
                out.push((i, x));
            }
        }
    }
    if out.last().is_some_and(|(_, y)| y.is_zero()) {
        out.pop();
    }
    out
}

pub fn scale(v: &[(usize, Scalar)], c: &Scalar) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x * c)).collect()
}

/// `a - b`.
pub fn sub(a: &[(usize, Scalar)], b: &[(usize, Scalar)]) -> SparseVec {
    let mut terms: Vec<(usize, Scalar)> = a.to_vec();
    terms.extend(b.iter().map(|(i, x)| (*i, -x.clone())));
    normalize(terms)
}

pub fn add_all<'a, I>(parts: I) -> SparseVec
where
    I: IntoIterator<Item = &'a SparseVec>,
{
    let mut terms = Vec::new();
    for p in parts {
        terms.extend(p.iter().cloned());
    }
    normalize(terms)
}
