//! Concrete group constructions.

use serde::{Deserialize, Serialize};

use super::{FiniteGroup, GroupError, DEFAULT_PRODUCT_CAP};
use crate::numbers::{gcd, multiplicative_order_unchecked};

/// Parameters of `⟨a, b | a^n = 1, b^t = a^ℓ, b^{-1} a b = a^r⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MetacyclicPresentation {
    pub n: u64,
    pub t: u64,
    pub r: u64,
    #[serde(rename = "l")]
    pub ell: u64,
}

impl MetacyclicPresentation {
    pub fn new(n: u64, t: u64, r: u64, ell: u64) -> Result<Self, GroupError> {
        let p = MetacyclicPresentation { n, t, r, ell };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), GroupError> {
        let &MetacyclicPresentation { n, t, r, ell } = self;
        let bad = |msg: String| Err(GroupError::InvalidPresentation(msg));
        if n == 0 || t == 0 || r == 0 || ell == 0 {
            return bad(format!("parameters must be positive (n={n}, t={t}, r={r}, l={ell})"));
        }
        if r > n {
            return bad(format!("r={r} exceeds n={n}"));
        }
        if ell > n || n % ell != 0 {
            return bad(format!("l={ell} does not divide n={n}"));
        }
        if crate::numbers::pow_mod(r, t, n) != 1 % n {
            return bad(format!("r^t = {r}^{t} is not 1 mod {n}"));
        }
        if (ell as u128 * (r as u128 + n as u128 - 1)) % n as u128 != 0 {
            return bad(format!("l*(r-1) = {ell}*({r}-1) is not 0 mod {n}"));
        }
        Ok(())
    }

    pub fn order(&self) -> u64 {
        self.n * self.t
    }

    /// Multiplicative order of r modulo n.
    pub fn d(&self) -> u64 {
        multiplicative_order_unchecked(self.r, self.n)
    }

    /// Greatest divisor of n coprime to t/d.
    pub fn m(&self) -> Option<u64> {
        let d = self.d();
        if self.t % d != 0 {
            return None;
        }
        let q = self.t / d;
        let mut m = self.n;
        loop {
            let g = gcd(m, q);
            if g == 1 {
                break;
            }
            m /= g;
        }
        Some(m)
    }

    pub fn is_abelian(&self) -> bool {
        self.r % self.n == 1 % self.n
    }

    /// Element index of `a^i b^j` in [`make_metacyclic`]'s group.
    pub fn index_of(&self, i: u64, j: u64) -> usize {
        (i % self.n + self.n * (j % self.t)) as usize
    }

    /// Index of the word `a^i b^j` for arbitrary (possibly large) exponents,
    /// reducing `b^t = a^ℓ`.
    pub fn word(&self, i: i64, j: i64) -> usize {
        let (n, t, ell) = (self.n as i64, self.t as i64, self.ell as i64);
        let carry = j.div_euclid(t);
        let jj = j.rem_euclid(t);
        let ii = (i + carry * ell).rem_euclid(n);
        (ii + n * jj) as usize
    }
}

impl std::fmt::Display for MetacyclicPresentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.t, self.r, self.ell)
    }
}

fn word_label(i: u64, j: u64) -> String {
    let part = |sym: &str, e: u64| match e {
        0 => String::new(),
        1 => sym.to_string(),
        e => format!("{sym}^{e}"),
    };
    let s = format!("{}{}", part("a", i), part("b", j));
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

/// The group of a metacyclic presentation, on normal forms `a^i b^j`
/// (`0 <= i < n`, `0 <= j < t`) with element index `i + n*j`.
///
/// From `b^{-1} a b = a^r` we get `b^j a^k = a^{k r^{-j}} b^j`, so
/// `(a^i b^j)(a^k b^l) = a^{i + k r^{-j}} b^{j+l}`, reducing `b^t = a^ℓ`.
pub fn make_metacyclic(p: &MetacyclicPresentation) -> FiniteGroup {
    let (n, t, ell) = (p.n as usize, p.t as usize, p.ell as usize);
    let order = n * t;
    let r_inv = if n == 1 { 0 } else { crate::numbers::inverse_mod(p.r, p.n).expect("r is a unit") as usize };
    let mut inv_pows = vec![1 % n.max(1); t];
    for j in 1..t {
        inv_pows[j] = inv_pows[j - 1] * r_inv % n;
    }
    let mut table = vec![0u32; order * order];
    for j in 0..t {
        for i in 0..n {
            let row = (i + n * j) * order;
            for l in 0..t {
                let (jl, extra) = if j + l >= t { (j + l - t, ell) } else { (j + l, 0) };
                // a = (i + k r^{-j} + extra) mod n, stepped without division.
                let step = inv_pows[j];
                let mut a = (i + extra) % n;
                let base = row + n * l;
                for k in 0..n {
                    table[base + k] = (a + n * jl) as u32;
                    a += step;
                    if a >= n {
                        a -= n;
                    }
                }
            }
        }
    }
    let labels = (0..order).map(|x| word_label((x % n) as u64, (x / n) as u64)).collect();
    FiniteGroup::from_trusted(order, table, Some(labels))
}

pub fn cyclic(n: usize) -> FiniteGroup {
    make_abelian(&[n])
}

/// Direct product of cyclic groups of the given orders; element index is
/// the mixed-radix number with the first factor least significant.
pub fn make_abelian(factors: &[usize]) -> FiniteGroup {
    assert!(factors.iter().all(|&f| f >= 1), "invariant factors must be positive");
    let order: usize = factors.iter().product();
    let digits = |mut x: usize| {
        factors
            .iter()
            .map(|&f| {
                let d = x % f;
                x /= f;
                d
            })
            .collect::<Vec<_>>()
    };
    let all: Vec<Vec<usize>> = (0..order).map(digits).collect();
    let mut table = vec![0u32; order * order];
    for g in 0..order {
        for h in 0..order {
            let mut idx = 0;
            for (pos, &f) in factors.iter().enumerate().rev() {
                idx = idx * f + (all[g][pos] + all[h][pos]) % f;
            }
            table[g * order + h] = idx as u32;
        }
    }
    let labels = all
        .iter()
        .map(|d| {
            let parts: Vec<String> = d.iter().map(|x| x.to_string()).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    FiniteGroup::from_trusted(order, table, Some(labels))
}

/// `G × H` with `(g, h)` at index `g + |G|·h`, capped at the default order.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    direct_product_capped(g, h, DEFAULT_PRODUCT_CAP)
}

pub fn direct_product_capped(g: &FiniteGroup, h: &FiniteGroup, cap: usize) -> Result<FiniteGroup, GroupError> {
    let (m, k) = (g.order(), h.order());
    let order = m * k;
    if order > cap {
        return Err(GroupError::SizeLimit { order, cap });
    }
    let mut table = vec![0u32; order * order];
    for x in 0..order {
        let (x1, x2) = (x % m, x / m);
        for y in 0..order {
            let (y1, y2) = (y % m, y / m);
            table[x * order + y] = (g.mul(x1, y1) + m * h.mul(x2, y2)) as u32;
        }
    }
    let labels = (0..order).map(|x| format!("({},{})", g.label(x % m), h.label(x / m))).collect();
    Ok(FiniteGroup::from_trusted(order, table, Some(labels)))
}

/// Dihedral group of order `2m`: `⟨a, b | a^m, b^2, b^{-1}ab = a^{-1}⟩`.
pub fn dihedral(m: u64) -> FiniteGroup {
    make_metacyclic(&MetacyclicPresentation::new(m, 2, m - 1, m).expect("dihedral"))
}

/// Dicyclic group of order `4m`: `⟨a, b | a^{2m}, b^2 = a^m, b^{-1}ab = a^{-1}⟩`.
pub fn dicyclic(m: u64) -> FiniteGroup {
    make_metacyclic(&MetacyclicPresentation::new(2 * m, 2, 2 * m - 1, m).expect("dicyclic"))
}

/// Generalized quaternion group of order `2^k`, `k >= 3`.
pub fn quaternion(k: u32) -> FiniteGroup {
    assert!(k >= 3);
    dicyclic(1 << (k - 2))
}

/// Semidihedral group of order `2^k`, `k >= 4`.
pub fn semidihedral(k: u32) -> FiniteGroup {
    assert!(k >= 4);
    let n = 1u64 << (k - 1);
    make_metacyclic(&MetacyclicPresentation::new(n, 2, n / 2 - 1, n).expect("semidihedral"))
}

/// Heisenberg-type group of order `p^{2m+1}` on triples `(x, y, z)` with
/// `x, y ∈ (Z/p)^m`, `z ∈ Z/p` and product
/// `(x, y, z)(x', y', z') = (x + x', y + y', z + z' + x·y')`.
///
/// For odd `p` this is the extraspecial group of exponent `p`; for `p = 2`
/// and `m = 1` it is the dihedral group of order 8.
pub fn heisenberg(p: usize, m: usize) -> FiniteGroup {
    let len = 2 * m + 1;
    let order = p.pow(len as u32);
    let digits = |mut v: usize| {
        let mut d = vec![0; len];
        for slot in d.iter_mut() {
            *slot = v % p;
            v /= p;
        }
        d
    };
    let encode = |d: &[usize]| d.iter().rev().fold(0, |acc, &x| acc * p + x);
    let all: Vec<Vec<usize>> = (0..order).map(digits).collect();
    let mut table = vec![0u32; order * order];
    let mut out = vec![0; len];
    for g in 0..order {
        for h in 0..order {
            let (a, b) = (&all[g], &all[h]);
            for i in 0..2 * m {
                out[i] = (a[i] + b[i]) % p;
            }
            let dot: usize = (0..m).map(|i| a[i] * b[m + i]).sum();
            out[2 * m] = (a[2 * m] + b[2 * m] + dot) % p;
            table[g * order + h] = encode(&out) as u32;
        }
    }
    FiniteGroup::from_trusted(order, table, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn metacyclic_s3() {
        let p = MetacyclicPresentation::new(3, 2, 2, 3).unwrap();
        let g = make_metacyclic(&p);
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        g.verify_axioms().unwrap();
    }

    #[test]
    fn metacyclic_quaternion_relation() {
        let p = MetacyclicPresentation::new(4, 2, 3, 2).unwrap();
        let g = make_metacyclic(&p);
        assert_eq!(g.order(), 8);
        let b = p.index_of(0, 1);
        let a = p.index_of(1, 0);
        assert_eq!(g.mul(b, b), g.mul(a, a));
        g.verify_axioms().unwrap();
    }

    #[test]
    fn invalid_presentations() {
        assert!(matches!(
            MetacyclicPresentation::new(4, 2, 3, 3),
            Err(GroupError::InvalidPresentation(_))
        ));
        assert!(MetacyclicPresentation::new(0, 2, 1, 1).is_err());
        assert!(MetacyclicPresentation::new(5, 2, 2, 5).is_err()); // 2^2 = 4 mod 5
        assert!(MetacyclicPresentation::new(8, 2, 3, 2).is_err()); // 2*(3-1) = 4 mod 8
    }

    #[test]
    fn derived_quantities() {
        let p = MetacyclicPresentation::new(12, 6, 7, 2).unwrap();
        assert_eq!(p.d(), 2);
        assert_eq!(p.m(), Some(4));
        let p = MetacyclicPresentation::new(8, 2, 3, 8).unwrap();
        assert_eq!((p.d(), p.m()), (2, Some(8)));
    }

    #[test]
    fn conjugation_by_b_raises_to_r() {
        let p = MetacyclicPresentation::new(9, 6, 2, 9).unwrap();
        let g = make_metacyclic(&p);
        let b = p.index_of(0, 1);
        for i in 0..9 {
            let ai = p.index_of(i, 0);
            let conj = g.mul(g.mul(g.inv(b), ai), b);
            assert_eq!(conj, p.index_of(i * 2 % 9, 0));
        }
        assert_eq!(g.element_order(p.index_of(1, 0)), 9);
    }

    #[test]
    fn abelian_examples() {
        let g = make_abelian(&[2, 4]);
        assert_eq!((g.order(), g.exponent()), (8, 4));
        let g = make_abelian(&[3, 3]);
        assert_eq!((g.order(), g.exponent()), (9, 3));
        let g = make_abelian(&[]);
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn product_order_and_cap() {
        let g = direct_product(&cyclic(2), &cyclic(3)).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.is_abelian());
        let big = cyclic(100);
        assert!(matches!(direct_product(&big, &big), Err(GroupError::SizeLimit { .. })));
    }

    #[test]
    fn families_satisfy_axioms() {
        for g in [dihedral(5), quaternion(4), semidihedral(4), heisenberg(3, 1), heisenberg(2, 1)] {
            g.verify_axioms().unwrap();
            assert!(!g.is_abelian());
        }
        assert_eq!(heisenberg(3, 1).exponent(), 3);
        assert_eq!(heisenberg(2, 2).order(), 32);
    }
}
