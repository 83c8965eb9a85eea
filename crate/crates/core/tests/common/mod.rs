//! Random algebras and representations shared by the integration tests.
#![allow(dead_code)]

use homlie::exactla::{frac, int};
use homlie::homcore::yau_twist;
use homlie::{HomAlgebra, HomRepresentation, Matrix, Scalar};
use rand::rngs::StdRng;
use rand::Rng;

pub fn rational(rng: &mut StdRng) -> Scalar {
    let n = rng.gen_range(-4..=4);
    if rng.gen_bool(0.25) {
        frac(n, rng.gen_range(2..=3))
    } else {
        int(n)
    }
}

pub fn nonzero_rational(rng: &mut StdRng) -> Scalar {
    loop {
        let x = rational(rng);
        if x != int(0) {
            return x;
        }
    }
}

pub fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| rational(rng))
}

pub fn random_invertible(rng: &mut StdRng, n: usize) -> Matrix {
    loop {
        let m = random_matrix(rng, n, n);
        if m.rank() == n {
            return m;
        }
    }
}

/// Upper triangular with nonzero diagonal.
pub fn random_upper_unit(rng: &mut StdRng, n: usize) -> Matrix {
    Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Less => rational(rng),
        std::cmp::Ordering::Equal => nonzero_rational(rng),
        std::cmp::Ordering::Greater => int(0),
    })
}

/// `(i, j, terms)` for `[e_i, e_j] = Σ c e_k`.
pub type Bracket<'a> = (usize, usize, &'a [(usize, i64)]);

/// Lie algebra with identity twist and brackets `[e_i, e_j] = Σ c e_k`.
pub fn lie(dim: usize, brackets: &[Bracket]) -> HomAlgebra {
    let brackets: Vec<_> = brackets
        .iter()
        .map(|&(i, j, terms)| (i, j, terms.iter().map(|&(k, c)| (k, int(c))).collect()))
        .collect();
    HomAlgebra::lie_from_brackets(dim, &brackets, Matrix::identity(dim)).unwrap()
}

/// The same algebra in the basis given by the columns of `p`.
pub fn rebase(l: &HomAlgebra, p: &Matrix) -> HomAlgebra {
    let inv = p.inverse().unwrap();
    let twist = &(&inv * l.twist()) * p;
    HomAlgebra::from_fn(l.flavor(), l.dim(), twist, |i, j| {
        inv.mul_vec(&l.mul(&p.column(i), &p.column(j)))
    })
    .unwrap()
}

/// `exp(N)` for nilpotent `N`.
pub fn exp_nilpotent(n: &Matrix) -> Matrix {
    let d = n.rows();
    let mut out = Matrix::identity(d);
    let mut term = Matrix::identity(d);
    for k in 1..=d {
        term = (&term * n).scale(&frac(1, k as i64));
        out = &out + &term;
    }
    out
}

pub fn random_vector(rng: &mut StdRng, n: usize) -> Vec<Scalar> {
    (0..n).map(|_| rational(rng)).collect()
}

/// `Σ cᵢ Nⁱ` for random `cᵢ`, `i < d`.
pub fn random_polynomial_in(rng: &mut StdRng, n: &Matrix) -> Matrix {
    let d = n.rows();
    let mut out = Matrix::zeros(d, d);
    let mut power = Matrix::identity(d);
    for _ in 0..d {
        out.add_scaled(&rational(rng), &power);
        power = &power * n;
    }
    out
}

/// Representation `x ↦ β π(x)` from matrices with `π(αx) = β π(x) β⁻¹`.
pub fn twisted_rep(l: &HomAlgebra, pis: &[Matrix], beta: Matrix) -> HomRepresentation {
    let actions = pis.iter().map(|p| &beta * p).collect();
    HomRepresentation::new(l.clone(), actions, beta).unwrap()
}

pub fn conjugate(rho: &HomRepresentation, p: &Matrix) -> HomRepresentation {
    let inv = p.inverse().unwrap();
    let conj = |m: &Matrix| &(p * m) * &inv;
    HomRepresentation::new(
        rho.algebra().clone(),
        rho.actions().iter().map(conj).collect(),
        conj(rho.beta()),
    )
    .unwrap()
}

pub fn scale_rep(rho: &HomRepresentation, c: &Scalar) -> HomRepresentation {
    HomRepresentation::new(
        rho.algebra().clone(),
        rho.actions().iter().map(|m| m.scale(c)).collect(),
        rho.beta().scale(c),
    )
    .unwrap()
}

pub fn matrix_unit(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m[(i, j)] = int(1);
    m
}

pub fn abelian_with(twist: Matrix) -> HomAlgebra {
    HomAlgebra::abelian(twist.rows(), twist).unwrap()
}

pub fn yau(l: &HomAlgebra, phi: &Matrix) -> HomAlgebra {
    yau_twist(l, phi).unwrap()
}
