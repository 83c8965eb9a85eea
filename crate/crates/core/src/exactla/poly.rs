use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::Matrix;
use super::scalar::{format_scalar, parse_scalar, Scalar};
use crate::error::{Error, Result};

/// Univariate polynomial over ℚ; `coeffs[i]` is the coefficient of `T^i`.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(vec![c])
    }

    /// `T^n`.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); n + 1];
        coeffs[n] = Scalar::one();
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    /// `f(m)` by Horner's rule.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        assert!(m.is_square());
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &acc * m;
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        acc
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// Quotient and remainder of polynomial long division.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.coeffs.len() - 1;
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Scalar::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.div_rem(divisor).1
    }

    /// Distinct rational roots in increasing order.
    pub fn rational_roots(&self) -> Vec<Scalar> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut roots = Vec::new();
        // Strip factors of T.
        let shift = self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
        if shift > 0 {
            roots.push(Scalar::zero());
        }
        let trimmed = Poly::new(self.coeffs[shift..].to_vec());
        if trimmed.degree().unwrap_or(0) == 0 {
            return roots;
        }
        // Clear denominators to get integer coefficients.
        let lcm = trimmed
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = trimmed
            .coeffs
            .iter()
            .map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer())
            .collect();
        let p_divs = divisors(ints.first().unwrap());
        let q_divs = divisors(ints.last().unwrap());
        for p in &p_divs {
            for q in &q_divs {
                for sign in [1, -1] {
                    let cand = Scalar::new(p * BigInt::from(sign), q.clone());
                    if !roots.contains(&cand) && trimmed.eval(&cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        roots
    }

    /// Parses expressions like `T^2-2`, `T - 1`, `3/2*T^3 + T`, `1`.
    pub fn parse(text: &str) -> Result<Poly> {
        let err = |msg: String| Error::Parse {
            line: 1,
            column: 1,
            message: msg,
        };
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        let mut coeffs: Vec<Scalar> = Vec::new();
        for term in terms {
            let (neg, body) = match term.as_bytes().first() {
                Some(b'+') => (false, &term[1..]),
                Some(b'-') => (true, &term[1..]),
                _ => (false, term),
            };
            if body.is_empty() {
                return Err(err(format!("malformed term `{term}`")));
            }
            let (coef, power) = match body.find(['T', 'x', 't', 'X']) {
                None => (
                    parse_scalar(body).ok_or_else(|| err(format!("bad number `{body}`")))?,
                    0,
                ),
                Some(pos) => {
                    let head = body[..pos].trim_end_matches('*');
                    let coef = if head.is_empty() {
                        Scalar::one()
                    } else {
                        parse_scalar(head)
                            .ok_or_else(|| err(format!("bad coefficient `{head}`")))?
                    };
                    let tail = &body[pos + 1..];
                    let power = if tail.is_empty() {
                        1
                    } else if let Some(exp) = tail.strip_prefix('^') {
                        exp.parse::<usize>()
                            .map_err(|_| err(format!("bad exponent `{exp}`")))?
                    } else {
                        return Err(err(format!("unexpected `{tail}`")));
                    };
                    (coef, power)
                }
            };
            if coeffs.len() <= power {
                coeffs.resize(power + 1, Scalar::zero());
            }
            coeffs[power] += if neg { -coef } else { coef };
        }
        Ok(Poly::new(coeffs))
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coef = i == 0 || !abs.is_one();
            if show_coef {
                write!(f, "{}", format_scalar(&abs))?;
                if i > 0 {
                    write!(f, "*")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "T")?,
                _ => write!(f, "T^{i}")?,
            }
        }
        Ok(())
    }
}
