//! Exact elements of the rational group algebra `Q[G]`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ShodaError;
use crate::group::{Elem, FiniteGroup, Subgroup};

/// `Σ c_g g` with exact rational coefficients, indexed by group element.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    group: FiniteGroup,
    coeffs: Vec<BigRational>,
}

impl GroupAlgebraElement {
    pub fn zero(group: &FiniteGroup) -> Self {
        GroupAlgebraElement { group: group.clone(), coeffs: vec![BigRational::zero(); group.order()] }
    }

    pub fn one(group: &FiniteGroup) -> Self {
        Self::basis(group, group.identity())
    }

    pub fn basis(group: &FiniteGroup, g: Elem) -> Self {
        let mut out = Self::zero(group);
        out.coeffs[g] = BigRational::one();
        out
    }

    pub fn from_coeffs(group: &FiniteGroup, coeffs: Vec<BigRational>) -> Self {
        assert_eq!(coeffs.len(), group.order());
        GroupAlgebraElement { group: group.clone(), coeffs }
    }

    /// `Ĥ = (1/|H|) Σ_{h ∈ H} h`.
    pub fn hat(h: &Subgroup) -> Self {
        let mut out = Self::zero(h.group());
        let c = BigRational::new(BigInt::one(), BigInt::from(h.order()));
        for &x in h.elements() {
            out.coeffs[x] = c.clone();
        }
        out
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coefficient(&self, g: Elem) -> &BigRational {
        &self.coeffs[g]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn support(&self) -> Vec<Elem> {
        (0..self.coeffs.len()).filter(|&g| !self.coeffs[g].is_zero()).collect()
    }

    fn check_parent(&self, other: &Self) -> Result<(), ShodaError> {
        if self.group == other.group {
            Ok(())
        } else {
            Err(ShodaError::ParentMismatch)
        }
    }

    /// Convolution product `(Σ u_g g)(Σ v_h h) = Σ u_g v_h gh`.
    pub fn multiply(&self, other: &Self) -> Result<Self, ShodaError> {
        self.check_parent(other)?;
        if let Some(fast) = self.multiply_scaled(other) {
            return Ok(fast);
        }
        let g = &self.group;
        let mut out = Self::zero(g);
        let rhs = other.support();
        for x in self.support() {
            for &y in &rhs {
                out.coeffs[g.mul(x, y)] += &self.coeffs[x] * &other.coeffs[y];
            }
        }
        Ok(out)
    }

    /// Integer convolution after clearing denominators. Returns `None` when
    /// the scaled coefficients would not fit machine integers, in which case
    /// the caller falls back to rational arithmetic.
    fn multiply_scaled(&self, other: &Self) -> Option<Self> {
        let (du, u) = self.scaled()?;
        let (dv, v) = other.scaled()?;
        let max_u = u.iter().map(|&(_, c)| c.unsigned_abs()).max().unwrap_or(0) as u128;
        let max_v = v.iter().map(|&(_, c)| c.unsigned_abs()).max().unwrap_or(0) as u128;
        let terms = (u.len().min(v.len()).max(1)) as u128;
        if max_u.checked_mul(max_v)?.checked_mul(terms)? >= (1u128 << 126) {
            return None;
        }
        let g = &self.group;
        let mut acc = vec![0i128; g.order()];
        for &(x, cx) in &u {
            for &(y, cy) in &v {
                acc[g.mul(x, y)] += cx as i128 * cy as i128;
            }
        }
        let den = BigInt::from(du) * BigInt::from(dv);
        let coeffs = acc
            .into_iter()
            .map(|n| if n == 0 { BigRational::zero() } else { BigRational::new(BigInt::from(n), den.clone()) })
            .collect();
        Some(GroupAlgebraElement { group: g.clone(), coeffs })
    }

    /// Common denominator and integer numerators of the non-zero coefficients.
    fn scaled(&self) -> Option<(i64, Vec<(Elem, i64)>)> {
        let mut den = BigInt::one();
        for c in &self.coeffs {
            if !c.is_zero() {
                den = den.lcm(c.denom());
            }
        }
        let d = den.to_i64()?;
        let mut out = Vec::new();
        for (g, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let n = c.numer() * (&den / c.denom());
                out.push((g, n.to_i64()?));
            }
        }
        Some((d, out))
    }

    /// `g u g^{-1}`: the coefficient of `x` moves to `g x g^{-1}`.
    pub fn conjugate_by(&self, g: Elem) -> Self {
        let grp = &self.group;
        let mut out = Self::zero(grp);
        for x in self.support() {
            out.coeffs[grp.conjugate(x, g)] = self.coeffs[x].clone();
        }
        out
    }

    /// Central iff the coefficient function is constant on conjugacy classes.
    pub fn is_central(&self) -> bool {
        let cls = self.group.conjugacy_classes();
        self.group
            .elements()
            .all(|x| self.coeffs[x] == self.coeffs[cls.representatives[cls.class_of[x]]])
    }

    pub fn is_idempotent(&self) -> bool {
        self.multiply(self).map(|sq| sq == *self).unwrap_or(false)
    }

    /// `Σ |c_g|`, handy for asserting exact zero in tests.
    pub fn l1_norm(&self) -> BigRational {
        self.coeffs.iter().map(|c| c.abs()).fold(BigRational::zero(), |a, b| a + b)
    }
}

impl Add for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn add(self, rhs: Self) -> GroupAlgebraElement {
        assert!(self.group == rhs.group, "parent mismatch");
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        GroupAlgebraElement { group: self.group.clone(), coeffs }
    }
}

impl Sub for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn sub(self, rhs: Self) -> GroupAlgebraElement {
        assert!(self.group == rhs.group, "parent mismatch");
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        GroupAlgebraElement { group: self.group.clone(), coeffs }
    }
}

impl Neg for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn neg(self) -> GroupAlgebraElement {
        GroupAlgebraElement { group: self.group.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> =
            self.support().iter().map(|&g| format!("{}*{}", self.coeffs[g], self.group.label(g))).collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral, make_abelian};

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    // Rational-only convolution, independent of the integer fast path.
    fn slow_multiply(u: &GroupAlgebraElement, v: &GroupAlgebraElement) -> GroupAlgebraElement {
        let g = u.group();
        let mut out = GroupAlgebraElement::zero(g);
        for x in g.elements() {
            for y in g.elements() {
                out.coeffs[g.mul(x, y)] += &u.coeffs[x] * &v.coeffs[y];
            }
        }
        out
    }

    #[test]
    fn basis_products() {
        let g = dihedral(3);
        for x in g.elements() {
            for y in g.elements() {
                let p = GroupAlgebraElement::basis(&g, x).multiply(&GroupAlgebraElement::basis(&g, y)).unwrap();
                assert_eq!(p, GroupAlgebraElement::basis(&g, g.mul(x, y)));
            }
        }
    }

    #[test]
    fn hats_are_idempotent_and_absorb() {
        let g = dihedral(4);
        let h = Subgroup::generated(&g, &[1]);
        let hh = GroupAlgebraElement::hat(&h);
        assert!(hh.is_idempotent());
        for &x in h.elements() {
            assert_eq!(GroupAlgebraElement::basis(&g, x).multiply(&hh).unwrap(), hh);
        }
        assert_eq!(GroupAlgebraElement::hat(&Subgroup::trivial(&g)), GroupAlgebraElement::one(&g));
        assert!(GroupAlgebraElement::hat(&Subgroup::whole(&g)).is_idempotent());
    }

    #[test]
    fn hat_of_square_in_c4() {
        let c4 = cyclic(4);
        let h = Subgroup::generated(&c4, &[2]);
        let hat = GroupAlgebraElement::hat(&h);
        assert_eq!(hat.coefficient(0), &q(1, 2));
        assert_eq!(hat.coefficient(2), &q(1, 2));
        assert!(hat.coefficient(1).is_zero());
    }

    #[test]
    fn fast_path_matches_rational_convolution() {
        let g = make_abelian(&[2, 6]);
        let mut u = GroupAlgebraElement::zero(&g);
        let mut v = GroupAlgebraElement::zero(&g);
        for x in g.elements() {
            u.coeffs[x] = q(x as i64 - 5, (x % 4 + 1) as i64);
            v.coeffs[x] = q(3 - 2 * x as i64, (x % 3 + 2) as i64);
        }
        assert_eq!(u.multiply(&v).unwrap(), slow_multiply(&u, &v));
    }

    #[test]
    fn huge_coefficients_fall_back_to_rationals() {
        let g = cyclic(3);
        let big = BigRational::from_integer(BigInt::from(1u64) << 200);
        let u = GroupAlgebraElement::from_coeffs(&g, vec![big.clone(), q(1, 3), q(-2, 7)]);
        assert!(u.multiply_scaled(&u).is_none());
        assert_eq!(u.multiply(&u).unwrap(), slow_multiply(&u, &u));
    }

    #[test]
    fn conjugation() {
        let g = dihedral(3);
        let u = GroupAlgebraElement::basis(&g, 1);
        assert_eq!(u.conjugate_by(0), u);
        let b = Subgroup::generated(&g, &[3]);
        let hat = GroupAlgebraElement::hat(&b);
        assert_eq!(hat.conjugate_by(1), GroupAlgebraElement::hat(&b.conjugate(1)));
        let whole = GroupAlgebraElement::hat(&Subgroup::whole(&g));
        assert!(whole.is_central());
        assert!(g.elements().all(|x| whole.conjugate_by(x) == whole));
    }

    #[test]
    fn parent_mismatch() {
        let u = GroupAlgebraElement::one(&cyclic(2));
        let v = GroupAlgebraElement::one(&cyclic(3));
        assert!(matches!(u.multiply(&v), Err(ShodaError::ParentMismatch)));
    }
}
