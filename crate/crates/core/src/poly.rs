//! Dense univariate polynomials over the integers, and rational functions of
//! the shape numerator / (1-t)^e in reduced form. All coefficient arithmetic
//! is checked; overflow is an error, never a wrap.

use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("coefficient overflow in polynomial arithmetic")]
    Overflow,
}

/// Polynomial in one variable t with i64 coefficients; coeffs[k] multiplies
/// t^k and the representation never has trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![1] }
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// c * t^k.
    pub fn monomial(c: i64, k: usize) -> Self {
        if c == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        IntPolynomial { coeffs }
    }

    /// 1 - t.
    pub fn one_minus_t() -> Self {
        IntPolynomial { coeffs: vec![1, -1] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(self.coeff(k).checked_add(other.coeff(k)).ok_or(PolyError::Overflow)?);
        }
        Ok(Self::from_coeffs(out))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(self.coeff(k).checked_sub(other.coeff(k)).ok_or(PolyError::Overflow)?);
        }
        Ok(Self::from_coeffs(out))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut out = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let prod = (a as i128).checked_mul(b as i128).ok_or(PolyError::Overflow)?;
                out[i + j] = out[i + j].checked_add(prod).ok_or(PolyError::Overflow)?;
            }
        }
        let coeffs = out
            .into_iter()
            .map(|c| i64::try_from(c).map_err(|_| PolyError::Overflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_coeffs(coeffs))
    }

    pub fn pow(&self, e: u32) -> Result<Self, PolyError> {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Exact division: returns q with self = q * other, or `InexactDivision`.
    pub fn exact_divide(&self, other: &Self) -> Result<Self, PolyError> {
        if other.is_zero() {
            return Err(PolyError::InexactDivision);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (n, m) = (self.coeffs.len(), other.coeffs.len());
        if n < m {
            return Err(PolyError::InexactDivision);
        }
        let lead = other.coeffs[m - 1];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0i64; n - m + 1];
        for k in (0..quot.len()).rev() {
            let top = rem[k + m - 1];
            if top % lead != 0 {
                return Err(PolyError::InexactDivision);
            }
            let q = top / lead;
            quot[k] = q;
            for (j, &b) in other.coeffs.iter().enumerate() {
                let sub = q.checked_mul(b).ok_or(PolyError::Overflow)?;
                rem[k + j] = rem[k + j].checked_sub(sub).ok_or(PolyError::Overflow)?;
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(PolyError::InexactDivision);
        }
        Ok(Self::from_coeffs(quot))
    }

    /// Value at t = 1.
    pub fn eval_at_one(&self) -> Result<i64, PolyError> {
        self.coeffs.iter().try_fold(0i64, |acc, &c| acc.checked_add(c).ok_or(PolyError::Overflow))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (k, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "t")?,
                (1, m) => write!(f, "{m}t")?,
                (k, 1) => write!(f, "t^{k}")?,
                (k, m) => write!(f, "{m}t^{k}")?,
            }
        }
        Ok(())
    }
}

/// A rational function numerator / (1-t)^e, kept in reduced canonical form:
/// either the numerator is not divisible by 1-t, or the exponent is zero.
/// Equality of reduced forms is equality of the rational functions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    numerator: IntPolynomial,
    denom_exponent: u32,
}

impl HilbertSeries {
    /// Builds the series and cancels every common factor of 1-t. The zero
    /// numerator reduces to 0 / (1-t)^0.
    pub fn new(numerator: IntPolynomial, denom_exponent: u32) -> Self {
        let mut num = numerator;
        let mut e = denom_exponent;
        if num.is_zero() {
            return HilbertSeries { numerator: num, denom_exponent: 0 };
        }
        let one_minus_t = IntPolynomial::one_minus_t();
        while e > 0 {
            match num.exact_divide(&one_minus_t) {
                Ok(q) => {
                    num = q;
                    e -= 1;
                }
                Err(_) => break,
            }
        }
        HilbertSeries { numerator: num, denom_exponent: e }
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denom_exponent(&self) -> u32 {
        self.denom_exponent
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.combine(other, IntPolynomial::add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.combine(other, IntPolynomial::sub)
    }

    fn combine(
        &self,
        other: &Self,
        op: fn(&IntPolynomial, &IntPolynomial) -> Result<IntPolynomial, PolyError>,
    ) -> Result<Self, PolyError> {
        let e = self.denom_exponent.max(other.denom_exponent);
        let one_minus_t = IntPolynomial::one_minus_t();
        let a = self.numerator.mul(&one_minus_t.pow(e - self.denom_exponent)?)?;
        let b = other.numerator.mul(&one_minus_t.pow(e - other.denom_exponent)?)?;
        Ok(HilbertSeries::new(op(&a, &b)?, e))
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.denom_exponent {
            0 => write!(f, "{}", self.numerator),
            1 => write!(f, "({}) / (1 - t)", self.numerator),
            e => write!(f, "({}) / (1 - t)^{e}", self.numerator),
        }
    }
}
