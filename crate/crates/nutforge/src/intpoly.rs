//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, One, Zero};
use thiserror::Error;

/// Polynomial over the integers, coefficients stored lowest power first.
///
/// The coefficient vector carries no trailing zeros: the zero polynomial is
/// the empty vector, and `degree()` is `None` for it.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

/// A single nonzero term, the sparse view used for exponent-set queries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseTerm {
    pub power: usize,
    pub coefficient: BigInt,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("divisor must be monic, leading coefficient is {0}")]
    NonMonicDivisor(BigInt),
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("malformed term `{0}`, expected coeff^power")]
    MalformedTerm(String),
    #[error("duplicate power {0} in polynomial literal")]
    DuplicatePower(usize),
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * x^power`; the zero polynomial when `c` is zero.
    pub fn monomial(coefficient: impl Into<BigInt>, power: usize) -> Self {
        let c: BigInt = coefficient.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); power + 1];
        coeffs[power] = c;
        Self { coeffs }
    }

    /// Builds from a lowest-first coefficient sequence, dropping trailing zeros.
    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut p = Self {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient at `power` (zero beyond the stored length).
    pub fn coeff(&self, power: usize) -> BigInt {
        self.coeffs.get(power).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient().is_some_and(One::is_one)
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Nonzero terms with strictly increasing powers.
    pub fn terms(&self) -> Vec<SparseTerm> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(power, c)| SparseTerm {
                power,
                coefficient: c.clone(),
            })
            .collect()
    }

    /// Powers of the nonzero terms, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(power, _)| power)
            .collect()
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Quotient and remainder by a monic divisor; both stay over the integers.
    pub fn divrem_monic(&self, modulus: &Self) -> Result<(Self, Self), PolyError> {
        let Some(md) = modulus.degree() else {
            return Err(PolyError::ZeroDivisor);
        };
        if !modulus.is_monic() {
            return Err(PolyError::NonMonicDivisor(
                modulus.leading_coefficient().cloned().unwrap(),
            ));
        }
        if self.coeffs.len() <= md {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - md;
        let mut q = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = std::mem::take(&mut rem[k + md]);
            if c.is_zero() {
                continue;
            }
            for (j, m) in modulus.coeffs.iter().enumerate().take(md) {
                if !m.is_zero() {
                    rem[k + j] -= &c * m;
                }
            }
            q[k] = c;
        }
        rem.truncate(md);
        Ok((Self::from_coeffs(q), Self::from_coeffs(rem)))
    }

    /// Splits into (even-power terms, odd-power terms); the parts sum to `self`.
    pub fn split_even_odd(&self) -> (Self, Self) {
        let mut even = vec![BigInt::zero(); self.coeffs.len()];
        let mut odd = vec![BigInt::zero(); self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % 2 == 0 {
                even[i] = c.clone();
            } else {
                odd[i] = c.clone();
            }
        }
        (Self::from_coeffs(even), Self::from_coeffs(odd))
    }

    /// Substitutes `x -> x^k`, i.e. multiplies every power by `k`.
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k >= 1, "compose_power requires a positive exponent");
        if self.is_zero() || k == 1 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[i * k] = c.clone();
            }
        }
        Self { coeffs }
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            if let Some(b) = rhs.coeffs.get(i) {
                c += b;
            }
            coeffs.push(c);
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            if let Some(b) = rhs.coeffs.get(i) {
                c -= b;
            }
            coeffs.push(c);
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    /// Schoolbook product; degrees in this crate stay small enough that no
    /// asymptotically faster multiplication is warranted.
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        IntPolynomial { coeffs }
    }
}

/// Textual form: space-separated `coeff^power` terms, lowest power first,
/// e.g. `-2^0 2^2 -2^3`. The zero polynomial prints as `0`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for term in self.terms() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}^{}", term.coefficient, term.power)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl FromStr for IntPolynomial {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Self::zero());
        }
        let mut seen = std::collections::HashSet::new();
        let mut poly = Self::zero();
        for token in s.split_whitespace() {
            let (c, p) = token
                .split_once('^')
                .ok_or_else(|| PolyError::MalformedTerm(token.to_string()))?;
            let coefficient: BigInt = c
                .parse()
                .map_err(|_| PolyError::MalformedTerm(token.to_string()))?;
            let power: usize = p
                .parse()
                .map_err(|_| PolyError::MalformedTerm(token.to_string()))?;
            if !seen.insert(power) {
                return Err(PolyError::DuplicatePower(power));
            }
            poly = &poly + &Self::monomial(coefficient, power);
        }
        Ok(poly)
    }
}
