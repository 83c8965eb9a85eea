use std::fmt;

use crate::homcore::HomAlgebra;
use crate::homrep::{
    check_rep, check_rep_multiplicative, check_rep_nondegenerate, rep_kernel, rep_nilindex,
    HomRepresentation,
};
use crate::verdict::{Verdict, Violation};

/// One step of the pipeline with the dimension it produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub label: String,
    pub dimension: usize,
}

impl TraceStep {
    pub fn new(label: impl Into<String>, dimension: usize) -> Self {
        Self {
            label: label.into(),
            dimension,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateVerdicts {
    pub faithful: bool,
    pub nilindex: Option<usize>,
    pub multiplicative: bool,
    pub nondegenerate: bool,
}

/// A representation together with the verdicts computed for it and the
/// steps that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdoCertificate {
    pub representation: HomRepresentation,
    pub verdicts: CertificateVerdicts,
    pub trace: Vec<TraceStep>,
}

impl AdoCertificate {
    pub fn is_valid(&self) -> bool {
        let v = &self.verdicts;
        v.faithful && v.nilindex.is_some() && v.multiplicative && v.nondegenerate
    }
}

/// Computes the verdicts of `rep` from scratch.
pub fn certify(rep: HomRepresentation, trace: Vec<TraceStep>) -> AdoCertificate {
    let verdicts = CertificateVerdicts {
        faithful: rep_kernel(&rep).is_zero(),
        nilindex: rep_nilindex(&rep),
        multiplicative: check_rep(&rep)
            .and_then(|| check_rep_multiplicative(&rep))
            .holds(),
        nondegenerate: check_rep_nondegenerate(&rep).holds(),
    };
    AdoCertificate {
        representation: rep,
        verdicts,
        trace,
    }
}

/// Independent recomputation of every law a certificate claims.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub laws: Vec<(&'static str, Verdict)>,
    pub nilindex: Option<usize>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.laws.iter().all(|(_, v)| v.holds())
    }

    pub fn law(&self, name: &str) -> Option<&Verdict> {
        self.laws.iter().find(|(n, _)| *n == name).map(|(_, v)| v)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, verdict) in &self.laws {
            match verdict {
                Verdict::Holds => writeln!(f, "{name}: pass")?,
                Verdict::Fails(w) => writeln!(f, "{name}: FAIL ({w})")?,
            }
        }
        match self.nilindex {
            Some(n) => write!(f, "nilindex: {n}"),
            None => write!(f, "nilindex: none"),
        }
    }
}

/// Checks a representation against `l` without trusting anything recorded
/// alongside it.
pub fn verify_representation(l: &HomAlgebra, rep: &HomRepresentation) -> VerificationReport {
    let base = if rep.algebra() == l {
        Verdict::Holds
    } else {
        Verdict::Fails(Violation::new("same-algebra", vec![], vec![]))
    };
    let kernel = rep_kernel(rep);
    let faithful = match kernel.basis().first() {
        None => Verdict::Holds,
        Some(v) => Verdict::Fails(Violation::new("faithful", vec![], v.clone())),
    };
    let nilindex = rep_nilindex(rep);
    let nilpotent = match nilindex {
        Some(_) => Verdict::Holds,
        None => Verdict::Fails(Violation::new("nilpotent", vec![], vec![])),
    };
    VerificationReport {
        laws: vec![
            ("same-algebra", base),
            ("representation", check_rep(rep)),
            ("faithful", faithful),
            ("nilpotent", nilpotent),
            ("multiplicative", check_rep_multiplicative(rep)),
            ("nondegenerate", check_rep_nondegenerate(rep)),
        ],
        nilindex,
    }
}

pub fn verify_certificate(l: &HomAlgebra, cert: &AdoCertificate) -> VerificationReport {
    verify_representation(l, &cert.representation)
}
