//! Cyclotomic arithmetic and the centres of the simple components of `Q[G]`.
//!
//! A strong Shoda pair `(H, K)` with `[H:K] = k` gives a component whose
//! centre is the fixed field `Q(ζ_k)^S`, where `S ≤ U(Z/kZ)` is the image of
//! `N_G(K)/H` acting on `H/K`. The cut-property holds iff every such centre
//! is `Q` or imaginary quadratic.

mod poly;
mod ring;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use poly::{cyclotomic_polynomial, IntPoly};
pub use ring::{poly_from_roots, CyclotomicInteger, CyclotomicRing};

use crate::cut::{CutMethod, CutVerdict};
use crate::group::FiniteGroup;
use crate::numbers::{euler_phi, gcd, multiplicative_order_unchecked, squarefree_part};
use crate::shoda::{find_strong_shoda_pairs_capped, ShodaError, StrongShodaPair};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycloError {
    #[error("{r} is not a unit modulo {n}")]
    NotCoprime { r: u64, n: u64 },
    #[error("invalid residue subgroup modulo {modulus}: {reason}")]
    InvalidResidueSubgroup { modulus: u64, reason: String },
    #[error("period polynomial for k = {k}, S = {members:?} has a non-integral coefficient")]
    NonIntegralCoefficient { k: u64, members: Vec<u64> },
    #[error("strong Shoda pairs of a group of order {order} do not give a complete set of idempotents")]
    NotStronglyMonomialVerified { order: usize },
    #[error(transparent)]
    Shoda(#[from] ShodaError),
}

/// `o_n(r)`: least `d ≥ 1` with `r^d ≡ 1 (mod n)`.
pub fn multiplicative_order(r: u64, n: u64) -> Result<u64, CycloError> {
    if n == 0 || gcd(r % n.max(1), n) != 1 {
        return Err(CycloError::NotCoprime { r, n });
    }
    Ok(multiplicative_order_unchecked(r, n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UnitGroupInfo {
    pub order: u64,
    pub is_cyclic: bool,
    /// Least positive generator of `U(Z/nZ)` when it is cyclic.
    pub least_generator: Option<u64>,
}

pub fn unit_group_info(n: u64) -> UnitGroupInfo {
    assert!(n >= 1, "modulus must be positive");
    let order = euler_phi(n);
    if n <= 2 {
        return UnitGroupInfo { order, is_cyclic: true, least_generator: Some(1) };
    }
    let least_generator = (1..n).find(|&u| gcd(u, n) == 1 && multiplicative_order_unchecked(u, n) == order);
    UnitGroupInfo { order, is_cyclic: least_generator.is_some(), least_generator }
}

/// A subgroup `S` of `U(Z/kZ)`, members reduced mod `k` and sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ResidueSubgroup {
    modulus: u64,
    members: Vec<u64>,
}

impl ResidueSubgroup {
    /// Validates an explicit member set (duplicates allowed).
    pub fn new(modulus: u64, members: &[u64]) -> Result<Self, CycloError> {
        let bad = |reason: String| CycloError::InvalidResidueSubgroup { modulus, reason };
        if modulus == 0 {
            return Err(bad("modulus must be positive".into()));
        }
        let mut m: Vec<u64> = members.iter().map(|&x| x % modulus).collect();
        m.sort_unstable();
        m.dedup();
        if !m.contains(&(1 % modulus)) {
            return Err(bad("does not contain 1".into()));
        }
        if let Some(&x) = m.iter().find(|&&x| gcd(x, modulus) != 1 && modulus > 1) {
            return Err(bad(format!("{x} is not a unit")));
        }
        for &x in &m {
            for &y in &m {
                let p = x * y % modulus;
                if m.binary_search(&p).is_err() {
                    return Err(bad(format!("{x} * {y} = {p} is missing")));
                }
            }
        }
        Ok(ResidueSubgroup { modulus, members: m })
    }

    /// The subgroup generated by `gens`.
    pub fn generated(modulus: u64, gens: &[u64]) -> Result<Self, CycloError> {
        for &g in gens {
            if modulus > 1 && gcd(g % modulus, modulus) != 1 {
                return Err(CycloError::NotCoprime { r: g, n: modulus });
            }
        }
        let mut members = vec![1 % modulus];
        let mut i = 0;
        while i < members.len() {
            for &g in gens {
                let p = members[i] * (g % modulus) % modulus;
                if !members.contains(&p) {
                    members.push(p);
                }
            }
            i += 1;
        }
        Self::new(modulus, &members)
    }

    pub fn full(modulus: u64) -> Self {
        let members: Vec<u64> = (0..modulus).filter(|&x| modulus == 1 || gcd(x, modulus) == 1).collect();
        ResidueSubgroup { modulus, members }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn order(&self) -> u64 {
        self.members.len() as u64
    }

    pub fn contains(&self, x: u64) -> bool {
        self.members.binary_search(&(x % self.modulus)).is_ok()
    }

    /// `[U(Z/kZ) : S]`.
    pub fn index(&self) -> u64 {
        euler_phi(self.modulus) / self.order()
    }

    pub fn contains_minus_one(&self) -> bool {
        self.contains(self.modulus - 1)
    }

    /// Least representative of each coset `cS`, in increasing order.
    pub fn coset_representatives(&self) -> Vec<u64> {
        let k = self.modulus;
        let mut covered = vec![false; k as usize];
        let mut reps = Vec::new();
        for c in 0..k {
            if covered[c as usize] || (k > 1 && gcd(c, k) != 1) {
                continue;
            }
            for &s in &self.members {
                covered[(c * s % k) as usize] = true;
            }
            reps.push(c);
        }
        reps
    }
}

/// `Σ_{s ∈ S} ζ_k^{j c s}`, the image of the trace element `Σ_s ζ^{js}` under `ζ ↦ ζ^c`.
fn trace_conjugate(ring: &CyclotomicRing, s: &ResidueSubgroup, j: u64, c: u64) -> CyclotomicInteger {
    let k = s.modulus();
    ring.sum_of_powers(s.members().iter().map(|&m| (j * c % k * m % k) as i64))
}

/// The Gaussian periods `η_c = Σ_{s ∈ S} ζ_k^{cs}`, one per coset.
pub fn gaussian_periods(k: u64, s: &ResidueSubgroup) -> Vec<CyclotomicInteger> {
    let ring = CyclotomicRing::new(k);
    s.coset_representatives().iter().map(|&c| trace_conjugate(&ring, s, 1, c)).collect()
}

/// `∏_c (x - η_c)` over the cosets of `S`, expanded exactly. This is the
/// minimal polynomial of the period whenever the periods are distinct.
pub fn period_minimal_polynomial(k: u64, s: &ResidueSubgroup) -> Result<IntPoly, CycloError> {
    check_modulus(k, s)?;
    let ring = CyclotomicRing::new(k);
    let coeffs = poly_from_roots(&ring, &gaussian_periods(k, s));
    let ints: Option<Vec<BigInt>> = coeffs.iter().map(CyclotomicInteger::as_integer).collect();
    ints.map(IntPoly::new)
        .ok_or_else(|| CycloError::NonIntegralCoefficient { k, members: s.members().to_vec() })
}

fn check_modulus(k: u64, s: &ResidueSubgroup) -> Result<(), CycloError> {
    if s.modulus() != k {
        return Err(CycloError::InvalidResidueSubgroup {
            modulus: s.modulus(),
            reason: format!("expected modulus {k}"),
        });
    }
    Ok(())
}

/// Discriminant of a quadratic fixed field `Q(ζ_k)^S`, as `(θ - θ')^2` for the
/// first trace element `θ = Σ_{s ∈ S} ζ^{js}` that is not rational. The plain
/// period (`j = 1`) can be rational, e.g. `k = 9` with `|S| = 3`.
fn quadratic_discriminant(k: u64, s: &ResidueSubgroup) -> Result<BigInt, CycloError> {
    let ring = CyclotomicRing::new(k);
    let reps = s.coset_representatives();
    debug_assert_eq!(reps.len(), 2);
    let non_integral = || CycloError::NonIntegralCoefficient { k, members: s.members().to_vec() };
    for j in 1..k {
        let a = trace_conjugate(&ring, s, j, reps[0]);
        let b = trace_conjugate(&ring, s, j, reps[1]);
        if a != b {
            let diff = a.sub(&b);
            return diff.mul(&diff).as_integer().ok_or_else(non_integral);
        }
    }
    Err(non_integral())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CenterKind {
    Rational,
    ImaginaryQuadratic,
    RealQuadratic,
    OtherTotallyReal,
    OtherComplex,
}

/// The isomorphism type of a component centre, as far as the cut-property cares.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CenterClass {
    pub kind: CenterKind,
    pub degree: u64,
    /// Squarefree `d` with centre `Q(√d)` or `Q(√-d)`; only for degree 2.
    pub d: Option<u64>,
}

impl CenterClass {
    pub const RATIONAL: CenterClass = CenterClass { kind: CenterKind::Rational, degree: 1, d: None };

    pub fn is_cut_admissible(&self) -> bool {
        matches!(self.kind, CenterKind::Rational | CenterKind::ImaginaryQuadratic)
    }

    pub fn is_totally_real(&self) -> bool {
        matches!(self.kind, CenterKind::Rational | CenterKind::RealQuadratic | CenterKind::OtherTotallyReal)
    }
}

impl std::fmt::Display for CenterClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.kind, self.d) {
            (CenterKind::Rational, _) => write!(f, "Q"),
            (CenterKind::ImaginaryQuadratic, Some(d)) => write!(f, "Q(sqrt(-{d}))"),
            (CenterKind::RealQuadratic, Some(d)) => write!(f, "Q(sqrt({d}))"),
            (CenterKind::OtherTotallyReal, _) => write!(f, "totally real field of degree {}", self.degree),
            (_, _) => write!(f, "non-real field of degree {}", self.degree),
        }
    }
}

/// Classifies `Q(ζ_k)^S`.
pub fn classify_fixed_field(k: u64, s: &ResidueSubgroup) -> Result<CenterClass, CycloError> {
    check_modulus(k, s)?;
    let degree = s.index();
    let real = k <= 2 || s.contains_minus_one();
    let kind = match degree {
        1 => return Ok(CenterClass::RATIONAL),
        2 => {
            let disc = quadratic_discriminant(k, s)?;
            let d = squarefree_part(disc.abs().to_u64().expect("discriminant divides a power of k"));
            let kind = if disc.is_negative() { CenterKind::ImaginaryQuadratic } else { CenterKind::RealQuadratic };
            debug_assert_eq!(kind == CenterKind::RealQuadratic, real);
            return Ok(CenterClass { kind, degree, d: Some(d) });
        }
        _ if real => CenterKind::OtherTotallyReal,
        _ => CenterKind::OtherComplex,
    };
    Ok(CenterClass { kind, degree, d: None })
}

pub fn component_center(p: &StrongShodaPair) -> Result<CenterClass, CycloError> {
    classify_fixed_field(p.index, &p.action_image)
}

/// A simple component of `Q[G]` described by its strong Shoda pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentDescriptor {
    pub h_generators: Vec<String>,
    pub k_generators: Vec<String>,
    pub h_order: usize,
    pub k_order: usize,
    /// `[H : K]`.
    pub index: u64,
    pub matrix_size: usize,
    pub action_image: Vec<u64>,
    pub center: CenterClass,
    /// `n^2 · φ(k) · [N : H]`.
    pub dimension: u64,
}

impl ComponentDescriptor {
    pub fn of(p: &StrongShodaPair) -> Result<Self, CycloError> {
        let g = p.group();
        let labels = |gens: &[usize]| gens.iter().map(|&x| g.label(x)).collect();
        Ok(ComponentDescriptor {
            h_generators: labels(p.h.generators()),
            k_generators: labels(p.k.generators()),
            h_order: p.h.order(),
            k_order: p.k.order(),
            index: p.index,
            matrix_size: p.matrix_size,
            action_image: p.action_image.members().to_vec(),
            center: component_center(p)?,
            dimension: p.dimension(),
        })
    }
}

/// All components of `Q[G]`, provided the strong Shoda pairs give a complete
/// set of orthogonal central idempotents.
pub fn wedderburn_components(g: &FiniteGroup, cap: usize) -> Result<Vec<ComponentDescriptor>, CycloError> {
    let search = find_strong_shoda_pairs_capped(g, cap)?;
    if !search.is_complete() {
        return Err(CycloError::NotStronglyMonomialVerified { order: g.order() });
    }
    search.pairs.iter().map(ComponentDescriptor::of).collect()
}

/// Cut iff every component centre is `Q` or imaginary quadratic.
pub fn is_cut_wedderburn(g: &FiniteGroup) -> Result<CutVerdict, CycloError> {
    is_cut_wedderburn_capped(g, crate::group::DEFAULT_LATTICE_CAP)
}

pub fn is_cut_wedderburn_capped(g: &FiniteGroup, cap: usize) -> Result<CutVerdict, CycloError> {
    let components = wedderburn_components(g, cap)?;
    let offending = components.into_iter().find(|c| !c.center.is_cut_admissible());
    Ok(CutVerdict { is_cut: offending.is_none(), method: CutMethod::Wedderburn, witness: None, offending_component: offending })
}
