//! Hom-algebras: the data model, axiom predicates and structural constructions.

mod algebra;
mod chain;
mod checks;
mod constructions;
pub mod sparse;
mod structure;

pub use algebra::{Flavor, HomAlgebra};
pub use chain::{chain_below_ideal, strong_nilpotency_chain, IdealChain};
pub use checks::{
    check_anticommutative, check_hom_lie, check_homomorphism, check_jacobi, check_multiplicative,
    check_nondegenerate,
};
pub use constructions::{
    current_algebra, current_index, quotient_algebra, restrict_to_subalgebra, untwist, yau_twist,
    QuotientAlgebra,
};
pub use sparse::SparseVec;
pub use structure::{
    bracket_span, center, hom_closure, is_ideal, lower_central_series, nilindex, ClosureMode,
};
