//! Exact computer algebra for finite-dimensional Hom-Lie and Hom-associative
//! algebras over the rationals.
//!
//! The crate is organised bottom-up:
//!
//! - [`exactla`]: rational matrices, canonical subspaces, quotients, Kronecker
//!   products and polynomial utilities.
//! - [`homcore`]: the [`HomAlgebra`] data model, axiom predicates, Yau twists,
//!   current algebras, centers, lower central series, ideals and
//!   strong-nilpotency chains.
//! - [`homassoc`]: Hom-associative algebras, (bi)representations and the
//!   equivalence between faithful representations and embeddings into
//!   commutator algebras.
//! - [`homrep`]: representations of Hom-Lie algebras (adjoint, semidirect
//!   sums, direct sums, tensor products, nilpotency).
//! - [`freehl`]: free multiplicative nilpotent Hom-Lie algebras with graded
//!   bases, and presentations of algebras as their quotients.
//! - [`adopipe`]: construction and independent verification of faithful
//!   nilpotent multiplicative nondegenerate representations.
//! - [`hlcli`]: text formats and the command-line front end.

#![allow(clippy::needless_range_loop)]

pub mod adopipe;
pub mod error;
pub mod exactla;
pub mod fixtures;
pub mod freehl;
pub mod hlcli;
pub mod homassoc;
pub mod homcore;
pub mod homrep;
pub mod verdict;

pub use error::{Error, Result};
pub use exactla::{Matrix, Poly, Quotient, Scalar, Subspace};
pub use homcore::{Flavor, HomAlgebra, IdealChain};
pub use homrep::{HomRepresentation, Orientation};
pub use verdict::{Verdict, Violation};
