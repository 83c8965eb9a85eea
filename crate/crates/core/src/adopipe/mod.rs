//! Faithful representations of nilpotent multiplicative nondegenerate
//! Hom-Lie algebras, with independently checkable certificates.
//!
//! Graded algebras embed into a current algebra, which acts faithfully on
//! its extension by the Euler derivation. Everything else is presented as a
//! quotient `M/I` of a free algebra and handled one central line of `I` at a
//! time.

mod certificate;
mod derivation;
mod distinguish;
mod grading;
mod pipeline;
mod tensor;

pub use certificate::{
    certify, verify_certificate, verify_representation, AdoCertificate, CertificateVerdicts,
    TraceStep, VerificationReport,
};
pub use derivation::{check_alpha_derivation, euler_derivation, extend_by_derivation};
pub use distinguish::{
    distinguishing_rep, distinguishing_rep_capped, generated_submodule, restrict_to_z_kernel,
    DEFAULT_MAX_MODULE_DIM,
};
pub use grading::{find_grading, graded_faithful_rep, Grading};
pub use pipeline::{ado, AdoOptions, AdoPath, DEFAULT_MAX_FREE_DIM};
