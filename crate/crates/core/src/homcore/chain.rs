use super::algebra::HomAlgebra;
use super::checks::check_multiplicative;
use super::structure::{bracket_span, is_ideal, nilindex};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Quotient, Subspace};
use crate::verdict::{Verdict, Violation};

/// Descending chain of ideals `L = I₁ ⊃ I₂ ⊃ … ⊃ Iₙ = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealChain {
    pub links: Vec<Subspace>,
}

impl IdealChain {
    pub fn len(&self) -> usize {
        self.links.len()
    }

    pub fn is_empty(&self) -> bool {
        self.links.is_empty()
    }

    /// Checks the strong-nilpotency conditions: ends are `L` and `0`, every
    /// link is a twist-stable ideal, links descend, interior steps have
    /// codimension 1, and `[L, Iᵢ] ⊆ Iᵢ₊₁`.
    pub fn validate(&self, l: &HomAlgebra) -> Verdict {
        let fail =
            |what: &'static str, i: usize| Verdict::Fails(Violation::new(what, vec![i], vec![]));
        let n = self.links.len();
        if n == 0 || !self.links[0].is_full() || self.links[0].ambient() != l.dim() {
            return fail("chain-starts-at-algebra", 0);
        }
        if !self.links[n - 1].is_zero() {
            return fail("chain-ends-at-zero", n - 1);
        }
        let full = Subspace::full(l.dim());
        for (i, link) in self.links.iter().enumerate() {
            if !is_ideal(l, link) {
                return fail("chain-link-is-ideal", i);
            }
            if i + 1 < n {
                let next = &self.links[i + 1];
                if !next.is_subspace_of(link) || next == link {
                    return fail("chain-descends", i);
                }
                if i > 0 && link.dim() - next.dim() != 1 {
                    return fail("chain-codimension-one", i);
                }
                if !bracket_span(l, &full, link).is_subspace_of(next) {
                    return fail("chain-central-steps", i);
                }
            }
        }
        Verdict::Holds
    }
}

/// Refines a twist-stable ideal `I` down to `0` through twist-stable ideals
/// with one-dimensional steps and `[L, Iᵢ] ⊆ Iᵢ₊₁`. Returns the links from
/// `I` to `0` inclusive.
///
/// Each step passes from `I` to a hyperplane `C` with `[L, I] ⊆ C ⊂ I`. Any
/// such `C` is an ideal; it is twist-stable exactly when its annihilator in
/// `(I/[L,I])*` is spanned by an eigenvector of the transposed induced twist.
pub fn chain_below_ideal(l: &HomAlgebra, ideal: &Subspace) -> Result<Vec<Subspace>> {
    if !is_ideal(l, ideal) {
        return Err(Error::NotAnIdeal);
    }
    let full = Subspace::full(l.dim());
    let mut links = vec![ideal.clone()];
    let mut current = ideal.clone();
    while !current.is_zero() {
        let lower = bracket_span(l, &full, &current);
        if lower == current {
            return Err(Error::NotNilpotent);
        }
        let q = Quotient::new(current.clone(), lower.clone())
            .expect("[L, I] lies inside I for an ideal I");
        let induced = q.induced_map(l.twist());
        let pairs = induced.transpose().rational_eigenvectors();
        let Some((_, w)) = pairs.into_iter().next() else {
            return Err(Error::FieldExtensionNeeded(format!(
                "induced twist on a quotient of dimension {} has characteristic polynomial {}",
                q.dim(),
                induced.char_poly()
            )));
        };
        let hyperplane = Matrix::from_rows(vec![w]).kernel();
        let next = q.preimage(&hyperplane);
        links.push(next.clone());
        current = next;
    }
    Ok(links)
}

/// A strong-nilpotency chain for a multiplicative nilpotent algebra.
pub fn strong_nilpotency_chain(l: &HomAlgebra) -> Result<IdealChain> {
    check_multiplicative(l).into_result(|v| Error::PreconditionFailed(v.to_string()))?;
    if nilindex(l).is_none() {
        return Err(Error::NotNilpotent);
    }
    let links = chain_below_ideal(l, &Subspace::full(l.dim()))?;
    let chain = IdealChain { links };
    debug_assert!(chain.validate(l).holds());
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int, unit_vector};
    use crate::fixtures;

    #[test]
    fn heisenberg_chain() {
        let h3 = fixtures::h3();
        let chain = strong_nilpotency_chain(&h3).unwrap();
        assert_eq!(chain.len(), 4);
        assert!(chain.validate(&h3).holds());
        assert_eq!(chain.links[2], Subspace::span(3, vec![unit_vector(3, 2)]));
    }

    #[test]
    fn swap_twist_picks_an_eigenline() {
        let a = fixtures::abelian_swap();
        let chain = strong_nilpotency_chain(&a).unwrap();
        assert!(chain.validate(&a).holds());
        let line = &chain.links[1];
        let plus = vec![int(1), int(1)];
        let minus = vec![int(1), int(-1)];
        assert!(line.contains(&plus) || line.contains(&minus));
    }

    #[test]
    fn rotation_needs_a_field_extension() {
        let a = fixtures::abelian(2)
            .with_twist(Matrix::from_ints(&[[0, -1], [1, 0]]))
            .unwrap();
        assert!(matches!(
            strong_nilpotency_chain(&a),
            Err(Error::FieldExtensionNeeded(_))
        ));
    }

    #[test]
    fn other_chains_are_judged_by_the_invariants() {
        let h3 = fixtures::h3();
        let other = IdealChain {
            links: vec![
                Subspace::full(3),
                Subspace::span(3, vec![unit_vector(3, 0), unit_vector(3, 2)]),
                Subspace::span(3, vec![unit_vector(3, 2)]),
                Subspace::zero(3),
            ],
        };
        assert!(other.validate(&h3).holds());
        let skip = IdealChain {
            links: vec![
                Subspace::full(3),
                Subspace::span(3, vec![unit_vector(3, 0)]),
                Subspace::zero(3),
            ],
        };
        assert!(!skip.validate(&h3).holds());
    }
}
