use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::numbers::{divisors, mobius};

/// Dense integer polynomial, coefficients from the constant term up.
/// Trailing zeros are always trimmed; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = vec![BigInt::zero(); n + 1];
        c[0] = BigInt::from(-1);
        c[n] = BigInt::one();
        Self::new(c)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::new(c)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    /// Quotient and remainder by a monic divisor.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (IntPoly::zero(), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let lead = std::mem::take(&mut rem[i + dd]);
            if lead.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs[..dd].iter().enumerate() {
                rem[i + j] -= &lead * d;
            }
            quot[i] = lead;
        }
        rem.truncate(dd);
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    pub fn rem_monic(&self, divisor: &IntPoly) -> IntPoly {
        self.div_rem_monic(divisor).1
    }

    /// Exact division; `None` if the remainder is non-zero.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let (q, r) = self.div_rem_monic(divisor);
        r.is_zero().then_some(q)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + bigint_to_f64(c))
    }

    /// Discriminant `b^2 - 4ac` of a quadratic.
    pub fn quadratic_discriminant(&self) -> Option<BigInt> {
        (self.degree() == Some(2)).then(|| {
            let (c, b, a) = (&self.coeffs[0], &self.coeffs[1], &self.coeffs[2]);
            b * b - BigInt::from(4) * a * c
        })
    }
}

pub(crate) fn bigint_to_f64(c: &BigInt) -> f64 {
    num_traits::ToPrimitive::to_f64(c).unwrap_or(f64::NAN)
}

/// `Φ_k = ∏_{d | k} (x^d - 1)^{μ(k/d)}`: multiply the positive factors,
/// then divide out the negative ones.
pub fn cyclotomic_polynomial(k: u64) -> IntPoly {
    assert!(k >= 1, "conductor must be positive");
    let mut num = IntPoly::one();
    let mut den = Vec::new();
    for d in divisors(k) {
        match mobius(k / d) {
            1 => num = num.mul(&IntPoly::x_pow_minus_one(d as usize)),
            -1 => den.push(d),
            _ => {}
        }
    }
    for d in den {
        num = num
            .div_exact(&IntPoly::x_pow_minus_one(d as usize))
            .expect("x^d - 1 divides the Möbius numerator");
    }
    num
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let show_coeff = !a.is_one() || i == 0;
            if show_coeff {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::euler_phi;

    // Oracle: Φ_k = (x^k - 1) / ∏_{d | k, d < k} Φ_d, recursively.
    fn cyclotomic_recursive(k: u64) -> IntPoly {
        let mut p = IntPoly::x_pow_minus_one(k as usize);
        for d in divisors(k) {
            if d < k {
                p = p.div_exact(&cyclotomic_recursive(d)).unwrap();
            }
        }
        p
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(8), IntPoly::from_i64(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), IntPoly::from_i64(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12).to_string(), "x^4 - x^2 + 1");
    }

    #[test]
    fn mobius_product_matches_recursion() {
        for k in 1..=60 {
            let p = cyclotomic_polynomial(k);
            assert_eq!(p, cyclotomic_recursive(k), "k = {k}");
            assert!(p.is_monic());
            assert_eq!(p.degree(), Some(euler_phi(k) as usize));
            assert!(IntPoly::x_pow_minus_one(k as usize).div_exact(&p).is_some());
        }
        // First cyclotomic polynomial with a coefficient outside {-1, 0, 1}.
        assert!(cyclotomic_polynomial(105).coeffs().iter().any(|c| c == &BigInt::from(-2)));
    }

    #[test]
    fn division_with_remainder() {
        let p = IntPoly::from_i64(&[3, 0, 1, 2]);
        let d = IntPoly::from_i64(&[1, 1]);
        let (q, r) = p.div_rem_monic(&d);
        assert_eq!(q.mul(&d).sub(&p.sub(&r)), IntPoly::zero());
        assert_eq!(r.degree(), Some(0));
        assert!(p.div_exact(&d).is_none());
    }

    #[test]
    fn display_and_discriminant() {
        let p = IntPoly::from_i64(&[2, 1, 1]);
        assert_eq!(p.to_string(), "x^2 + x + 2");
        assert_eq!(p.quadratic_discriminant(), Some(BigInt::from(-7)));
        assert_eq!(IntPoly::from_i64(&[-1, 0, -3]).to_string(), "-3x^2 - 1");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }
}
