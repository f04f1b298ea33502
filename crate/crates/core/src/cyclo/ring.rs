use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::{cyclotomic_polynomial, IntPoly};

/// `Z[ζ_k] = Z[x]/Φ_k`, shared by the elements built from it.
#[derive(Clone, Debug)]
pub struct CyclotomicRing {
    k: u64,
    modulus: Arc<IntPoly>,
}

impl CyclotomicRing {
    pub fn new(k: u64) -> Self {
        CyclotomicRing { k, modulus: Arc::new(cyclotomic_polynomial(k)) }
    }

    pub fn conductor(&self) -> u64 {
        self.k
    }

    pub fn modulus(&self) -> &IntPoly {
        &self.modulus
    }

    pub fn element(&self, poly: IntPoly) -> CyclotomicInteger {
        CyclotomicInteger { k: self.k, poly: poly.rem_monic(&self.modulus), modulus: self.modulus.clone() }
    }

    pub fn integer(&self, n: i64) -> CyclotomicInteger {
        self.element(IntPoly::from_i64(&[n]))
    }

    /// `ζ_k^e` for any integer exponent.
    pub fn zeta_pow(&self, e: i64) -> CyclotomicInteger {
        let e = e.rem_euclid(self.k as i64) as usize;
        let mut c = vec![BigInt::zero(); e + 1];
        c[e] = BigInt::from(1);
        self.element(IntPoly::new(c))
    }

    /// `Σ_{e ∈ exponents} ζ_k^e`.
    pub fn sum_of_powers(&self, exponents: impl IntoIterator<Item = i64>) -> CyclotomicInteger {
        let k = self.k as i64;
        let mut c = vec![BigInt::zero(); self.k as usize];
        for e in exponents {
            c[e.rem_euclid(k) as usize] += 1;
        }
        self.element(IntPoly::new(c))
    }
}

/// An element of `Z[ζ_k]`, kept reduced modulo `Φ_k`.
#[derive(Clone)]
pub struct CyclotomicInteger {
    k: u64,
    poly: IntPoly,
    modulus: Arc<IntPoly>,
}

impl CyclotomicInteger {
    pub fn conductor(&self) -> u64 {
        self.k
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    /// The rational integer this element equals, if it lies in `Z`.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.poly.degree() {
            None => Some(BigInt::zero()),
            Some(0) => Some(self.poly.coeff(0)),
            Some(_) => None,
        }
    }

    fn with_poly(&self, poly: IntPoly) -> Self {
        CyclotomicInteger { k: self.k, poly: poly.rem_monic(&self.modulus), modulus: self.modulus.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.k, other.k, "conductor mismatch");
        self.with_poly(self.poly.add(&other.poly))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.k, other.k, "conductor mismatch");
        self.with_poly(self.poly.sub(&other.poly))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.k, other.k, "conductor mismatch");
        self.with_poly(self.poly.mul(&other.poly))
    }

    /// Numerical value under `ζ_k ↦ e^{2πi/k}`.
    pub fn to_complex(&self) -> (f64, f64) {
        let theta = 2.0 * std::f64::consts::PI / self.k as f64;
        self.poly.coeffs().iter().enumerate().fold((0.0, 0.0), |(re, im), (i, c)| {
            let c = super::poly::bigint_to_f64(c);
            let a = theta * i as f64;
            (re + c * a.cos(), im + c * a.sin())
        })
    }
}

impl PartialEq for CyclotomicInteger {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.poly == other.poly
    }
}

impl Eq for CyclotomicInteger {}

impl fmt::Debug for CyclotomicInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] mod Φ_{}", self.poly, self.k)
    }
}

/// Expands `∏ (x - r)` over the given roots; coefficients low to high.
pub fn poly_from_roots(ring: &CyclotomicRing, roots: &[CyclotomicInteger]) -> Vec<CyclotomicInteger> {
    let mut coeffs = vec![ring.integer(1)];
    for r in roots {
        let mut next = vec![ring.integer(0); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] = next[i + 1].add(c);
            next[i] = next[i].sub(&c.mul(r));
        }
        coeffs = next;
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_has_order_k() {
        for k in [1u64, 2, 3, 4, 5, 8, 9, 12, 15] {
            let ring = CyclotomicRing::new(k);
            let z = ring.zeta_pow(1);
            let mut p = ring.integer(1);
            for _ in 0..k {
                p = p.mul(&z);
            }
            assert_eq!(p, ring.integer(1));
            assert_eq!(ring.zeta_pow(k as i64 + 1), z);
            assert_eq!(ring.zeta_pow(-1).mul(&z), ring.integer(1));
        }
    }

    #[test]
    fn primitive_roots_sum() {
        // Sum of all k-th roots of unity vanishes for k > 1.
        let ring = CyclotomicRing::new(12);
        assert_eq!(ring.sum_of_powers(0..12).as_integer(), Some(BigInt::zero()));
        let ring = CyclotomicRing::new(3);
        let w = ring.zeta_pow(1);
        assert_eq!(w.add(&ring.zeta_pow(2)).as_integer(), Some(BigInt::from(-1)));
    }

    #[test]
    fn gauss_sum_squares() {
        // (ζ + ζ^2 + ζ^4 - ζ^3 - ζ^5 - ζ^6)^2 = -7 in Z[ζ_7].
        let ring = CyclotomicRing::new(7);
        let g = ring.sum_of_powers([1, 2, 4]).sub(&ring.sum_of_powers([3, 5, 6]));
        assert_eq!(g.mul(&g).as_integer(), Some(BigInt::from(-7)));
        let (re, im) = g.to_complex();
        assert!(re.abs() < 1e-9 && (im - 7f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn expansion_from_roots() {
        let ring = CyclotomicRing::new(4);
        let i = ring.zeta_pow(1);
        let c = poly_from_roots(&ring, &[i.clone(), ring.zeta_pow(3)]);
        let ints: Vec<_> = c.iter().map(|x| x.as_integer().unwrap()).collect();
        assert_eq!(ints, vec![BigInt::from(1), BigInt::zero(), BigInt::from(1)]);
    }
}
