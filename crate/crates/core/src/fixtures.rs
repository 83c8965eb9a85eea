//! Small named algebras used by tests, examples and the CLI documentation.

use crate::exactla::{int, Matrix};
use crate::homcore::{yau_twist, HomAlgebra};

fn diag(entries: &[i64]) -> Matrix {
    Matrix::diagonal(&entries.iter().map(|&x| int(x)).collect::<Vec<_>>())
}

/// Abelian algebra of dimension `k` with identity twist.
pub fn abelian(k: usize) -> HomAlgebra {
    HomAlgebra::abelian(k, Matrix::identity(k)).unwrap()
}

pub fn abelian_with_twist(twist: Matrix) -> HomAlgebra {
    HomAlgebra::abelian(twist.rows(), twist).unwrap()
}

/// 2-dimensional abelian algebra whose twist swaps the basis vectors.
pub fn abelian_swap() -> HomAlgebra {
    abelian_with_twist(Matrix::from_ints(&[[0, 1], [1, 0]]))
}

/// Heisenberg algebra `[e1, e2] = e3`, identity twist.
pub fn h3() -> HomAlgebra {
    HomAlgebra::lie_from_brackets(3, &[(0, 1, vec![(2, int(1))])], Matrix::identity(3)).unwrap()
}

/// Yau twist of [`h3`] by `diag(2, 3, 6)`: `[e1, e2] = 6 e3`.
pub fn h3_lambda() -> HomAlgebra {
    yau_twist(&h3(), &diag(&[2, 3, 6])).unwrap()
}

/// Filiform algebra `[e1, e2] = e3`, `[e1, e3] = e4`, identity twist.
pub fn n4() -> HomAlgebra {
    HomAlgebra::lie_from_brackets(
        4,
        &[(0, 1, vec![(2, int(1))]), (0, 2, vec![(3, int(1))])],
        Matrix::identity(4),
    )
    .unwrap()
}

/// Yau twist of [`n4`] by `diag(2, 3, 6, 12)`.
pub fn n4_twisted() -> HomAlgebra {
    yau_twist(&n4(), &diag(&[2, 3, 6, 12])).unwrap()
}

/// Anticommutative algebra violating Jacobi: `[e1,e2] = e3`, `[e3,e1] = e1`,
/// `[e2,e3] = e1`.
pub fn l_bad() -> HomAlgebra {
    HomAlgebra::lie_from_brackets(
        3,
        &[
            (0, 1, vec![(2, int(1))]),
            (2, 0, vec![(0, int(1))]),
            (1, 2, vec![(0, int(1))]),
        ],
        Matrix::identity(3),
    )
    .unwrap()
}

/// Nilpotent multiplicative nondegenerate algebras with rational twist
/// spectra, each paired with a short name.
pub fn catalog() -> Vec<(&'static str, HomAlgebra)> {
    vec![
        ("abelian1", abelian(1)),
        ("abelian1-diag", abelian_with_twist(diag(&[3]))),
        ("abelian2", abelian(2)),
        ("abelian2-swap", abelian_swap()),
        ("abelian2-diag", abelian_with_twist(diag(&[2, 3]))),
        ("abelian3", abelian(3)),
        (
            "abelian3-swap",
            abelian_with_twist(Matrix::from_ints(&[[0, 1, 0], [1, 0, 0], [0, 0, 1]])),
        ),
        ("abelian3-diag", abelian_with_twist(diag(&[2, 3, 5]))),
        ("h3", h3()),
        ("h3-lambda", h3_lambda()),
        ("n4", n4()),
        ("n4-twisted", n4_twisted()),
    ]
}
