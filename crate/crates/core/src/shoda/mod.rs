//! Strong Shoda pairs and the primitive central idempotents they produce.
//!
//! For `K ⊴ H ≤ G`, `ε(H, K)` is `Ĥ` when `H = K` and otherwise the product
//! of `K̂ - L̂` over the normal subgroups `L` of `H` that are minimal among
//! those properly containing `K`. `e(G, H, K)` is the sum of the distinct
//! `G`-conjugates of `ε(H, K)`.

mod algebra;

use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use serde::Serialize;
use thiserror::Error;

pub use algebra::GroupAlgebraElement;

use crate::cyclo::ResidueSubgroup;
use crate::group::{
    all_subgroups_capped, make_metacyclic, Elem, FiniteGroup, GroupError, MetacyclicPresentation, Subgroup,
    DEFAULT_LATTICE_CAP,
};
use crate::numbers::gcd;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShodaError {
    #[error("K is not a normal subgroup of H")]
    NotNormalInH,
    #[error("algebra elements belong to different groups")]
    ParentMismatch,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("no metacyclic recipe applies to {presentation}: {reason}")]
    RecipeInapplicable { presentation: String, reason: String },
}

/// Which defining condition of a strong Shoda pair fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SspFailure {
    /// `K ⊴ H ⊴ N_G(K)` fails.
    NormalityAxiom,
    /// `H/K` is not cyclic, or not maximal abelian in `N_G(K)/K`.
    MaximalAbelianAxiom,
    /// Two distinct conjugates of `ε(H, K)` have non-zero product.
    OrthogonalityAxiom,
}

fn is_normal_in(k: &Subgroup, h: &Subgroup) -> bool {
    k.is_subgroup_of(h) && k.is_normalized_by(h)
}

/// The normal closure in `H` of `⟨K, x⟩`.
fn normal_closure_in(h: &Subgroup, k: &Subgroup, x: Elem) -> Subgroup {
    let g = h.group();
    let mut s = k.join_element(x);
    loop {
        let missing = h
            .generators()
            .iter()
            .flat_map(|&y| s.generators().iter().map(move |&z| (y, z)))
            .map(|(y, z)| g.conjugate(z, y))
            .find(|&c| !s.contains(c));
        match missing {
            Some(c) => s = s.join_element(c),
            None => return s,
        }
    }
}

/// Normal subgroups of `H` minimal among those properly containing `K`.
pub fn minimal_normal_over(h: &Subgroup, k: &Subgroup) -> Vec<Subgroup> {
    let g = h.group();
    let mut candidates: Vec<Subgroup> = Vec::new();
    // The closure only depends on the coset xK.
    let mut covered = FixedBitSet::with_capacity(g.order());
    for &x in h.elements() {
        if k.contains(x) || covered.contains(x) {
            continue;
        }
        for &y in k.elements() {
            covered.insert(g.mul(x, y));
        }
        let l = normal_closure_in(h, k, x);
        if !candidates.contains(&l) {
            candidates.push(l);
        }
    }
    candidates
        .iter()
        .filter(|l| !candidates.iter().any(|m| m.order() < l.order() && m.is_subgroup_of(l)))
        .cloned()
        .collect()
}

pub fn hat(h: &Subgroup) -> GroupAlgebraElement {
    GroupAlgebraElement::hat(h)
}

pub fn multiply(u: &GroupAlgebraElement, v: &GroupAlgebraElement) -> Result<GroupAlgebraElement, ShodaError> {
    u.multiply(v)
}

pub fn conjugate_by(u: &GroupAlgebraElement, g: Elem) -> GroupAlgebraElement {
    u.conjugate_by(g)
}

pub fn epsilon(h: &Subgroup, k: &Subgroup) -> Result<GroupAlgebraElement, ShodaError> {
    if !is_normal_in(k, h) {
        return Err(ShodaError::NotNormalInH);
    }
    let k_hat = hat(k);
    if h == k {
        return Ok(k_hat);
    }
    let mut eps: Option<GroupAlgebraElement> = None;
    for l in minimal_normal_over(h, k) {
        let factor = &k_hat - &hat(&l);
        eps = Some(match eps {
            None => factor,
            Some(acc) => acc.multiply(&factor)?,
        });
    }
    Ok(eps.expect("H properly contains K"))
}

/// Distinct conjugates of `ε(H, K)`, starting with `ε` itself.
fn distinct_conjugates(g: &FiniteGroup, h: &Subgroup, k: &Subgroup, eps: &GroupAlgebraElement) -> Vec<GroupAlgebraElement> {
    // ε is fixed by N_G(H) ∩ N_G(K), so one conjugate per left coset suffices.
    let stab = g.normalizer(h).intersection(&g.normalizer(k));
    let mut covered = FixedBitSet::with_capacity(g.order());
    let mut out: Vec<GroupAlgebraElement> = Vec::new();
    for x in g.elements() {
        if covered.contains(x) {
            continue;
        }
        for &s in stab.elements() {
            covered.insert(g.mul(x, s));
        }
        let c = eps.conjugate_by(x);
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

pub fn e_idempotent(g: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> Result<GroupAlgebraElement, ShodaError> {
    let eps = epsilon(h, k)?;
    Ok(sum(g, &distinct_conjugates(g, h, k, &eps)))
}

fn sum(g: &FiniteGroup, items: &[GroupAlgebraElement]) -> GroupAlgebraElement {
    items.iter().fold(GroupAlgebraElement::zero(g), |acc, x| &acc + x)
}

/// A verified strong Shoda pair `(H, K)` with the data describing its
/// simple component `M_n(Q(ζ_k) * N/H)` of `Q[G]`.
#[derive(Clone, Debug)]
pub struct StrongShodaPair {
    pub h: Subgroup,
    pub k: Subgroup,
    pub epsilon: GroupAlgebraElement,
    pub e: GroupAlgebraElement,
    /// `N = N_G(K)`.
    pub normalizer: Subgroup,
    /// `[H : K]`.
    pub index: u64,
    /// `[G : N]`, the matrix size of the component.
    pub matrix_size: usize,
    /// Fixed generator of `H` modulo `K`.
    pub generator: Elem,
    /// Image of `N/H` in `U(Z/kZ)`, acting on `H/K` by conjugation.
    pub action_image: ResidueSubgroup,
}

impl StrongShodaPair {
    /// Verifies all three defining conditions literally.
    pub fn new(h: &Subgroup, k: &Subgroup) -> Result<Self, SspFailure> {
        let g = h.group();
        let (n, generator) = check_structural_axioms(h, k)?;
        let eps = epsilon(h, k).map_err(|_| SspFailure::NormalityAxiom)?;
        let conjugates = distinct_conjugates(g, h, k, &eps);
        // Conjugation permutes the conjugates, so pairwise orthogonality
        // reduces to ε·ε^x = 0 for every other distinct conjugate.
        for c in &conjugates[1..] {
            if !eps.multiply(c).expect("same parent").is_zero() {
                return Err(SspFailure::OrthogonalityAxiom);
            }
        }
        let e = sum(g, &conjugates);
        let index = (h.order() / k.order()) as u64;
        let action_image = action_image(&n, h, k, generator, index);
        Ok(StrongShodaPair {
            h: h.clone(),
            k: k.clone(),
            epsilon: eps,
            e,
            matrix_size: n.index(),
            normalizer: n,
            index,
            generator,
            action_image,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        self.h.group()
    }

    /// `[N : H]`.
    pub fn action_order(&self) -> usize {
        self.normalizer.order() / self.h.order()
    }

    /// `n^2 · φ(k) · [N : H]`, the Q-dimension of the component.
    pub fn dimension(&self) -> u64 {
        let n = self.matrix_size as u64;
        n * n * crate::numbers::euler_phi(self.index) * self.action_order() as u64
    }
}

/// Axioms (i) and (ii); returns `N_G(K)` and a generator of `H/K`.
fn check_structural_axioms(h: &Subgroup, k: &Subgroup) -> Result<(Subgroup, Elem), SspFailure> {
    let g = h.group();
    if !is_normal_in(k, h) {
        return Err(SspFailure::NormalityAxiom);
    }
    let n = g.normalizer(k);
    if !is_normal_in(h, &n) {
        return Err(SspFailure::NormalityAxiom);
    }
    let x = h.cyclic_generator_mod(k).ok_or(SspFailure::MaximalAbelianAxiom)?;
    // H/K is cyclic, so it is maximal abelian in N/K iff it is its own
    // centralizer there: no y ∈ N \ H commutes with x modulo K.
    let self_centralizing = n
        .elements()
        .iter()
        .all(|&y| h.contains(y) || !k.contains(g.commutator(x, y)));
    if !self_centralizing {
        return Err(SspFailure::MaximalAbelianAxiom);
    }
    Ok((n, x))
}

/// `{ i mod k : y x y^{-1} ≡ x^i (mod K), y ∈ N }`.
fn action_image(n: &Subgroup, h: &Subgroup, k: &Subgroup, x: Elem, index: u64) -> ResidueSubgroup {
    let g = h.group();
    let powers: Vec<Elem> = (0..index).map(|i| g.pow(x, i as i64)).collect();
    let mut residues = Vec::new();
    let mut covered = FixedBitSet::with_capacity(g.order());
    for &y in n.elements() {
        if covered.contains(y) {
            continue;
        }
        for &z in h.elements() {
            covered.insert(g.mul(y, z));
        }
        let c = g.conjugate(x, y);
        let i = (0..index as usize)
            .find(|&i| k.contains(g.mul(g.inv(powers[i]), c)))
            .expect("H/K is normal in N/K");
        residues.push(i as u64);
    }
    ResidueSubgroup::new(index, &residues).expect("action image is a subgroup of units")
}

pub fn is_strong_shoda_pair(h: &Subgroup, k: &Subgroup) -> bool {
    StrongShodaPair::new(h, k).is_ok()
}

pub fn check_strong_shoda_pair(h: &Subgroup, k: &Subgroup) -> Result<(), SspFailure> {
    StrongShodaPair::new(h, k).map(|_| ())
}

/// Outcome of the exhaustive strong Shoda pair search.
#[derive(Clone, Debug)]
pub struct SspSearch {
    /// One pair per distinct idempotent.
    pub pairs: Vec<StrongShodaPair>,
    pub pairwise_orthogonal: bool,
    pub sums_to_one: bool,
}

impl SspSearch {
    /// The idempotents are a complete set of orthogonal central idempotents.
    pub fn is_complete(&self) -> bool {
        self.pairwise_orthogonal && self.sums_to_one
    }
}

pub fn find_strong_shoda_pairs(g: &FiniteGroup) -> Result<SspSearch, ShodaError> {
    find_strong_shoda_pairs_capped(g, DEFAULT_LATTICE_CAP)
}

pub fn find_strong_shoda_pairs_capped(g: &FiniteGroup, cap: usize) -> Result<SspSearch, ShodaError> {
    let lattice: Vec<Subgroup> = all_subgroups_capped(g, cap)?.into_iter().map(|e| e.subgroup).collect();
    // Conjugate pairs give the same idempotent, so K runs over conjugacy
    // class representatives and H over N_G(K)-classes of H = ⟨K, x⟩.
    let mut k_seen: HashSet<FixedBitSet> = HashSet::new();
    let mut pairs: Vec<StrongShodaPair> = Vec::new();
    for k in &lattice {
        if k_seen.contains(k.bits()) {
            continue;
        }
        for x in g.elements() {
            k_seen.insert(k.conjugate(x).bits().clone());
        }
        let n = g.normalizer(k);
        let mut h_seen: HashSet<FixedBitSet> = HashSet::new();
        for &x in n.elements() {
            let h = k.join_element(x);
            if h_seen.contains(h.bits()) {
                continue;
            }
            for &y in n.elements() {
                h_seen.insert(h.conjugate(y).bits().clone());
            }
            if check_structural_axioms(&h, k).is_err() {
                continue;
            }
            if let Ok(pair) = StrongShodaPair::new(&h, k) {
                if !pairs.iter().any(|p| p.e == pair.e) {
                    pairs.push(pair);
                }
            }
        }
    }
    pairs.sort_by(|a, b| {
        b.h.order()
            .cmp(&a.h.order())
            .then(a.k.order().cmp(&b.k.order()))
            .then_with(|| a.h.elements().cmp(b.h.elements()))
            .then_with(|| a.k.elements().cmp(b.k.elements()))
    });
    let total = sum(g, &pairs.iter().map(|p| p.e.clone()).collect::<Vec<_>>());
    let sums_to_one = total == GroupAlgebraElement::one(g);
    let pairwise_orthogonal = pairs.iter().enumerate().all(|(i, p)| {
        pairs[i + 1..].iter().all(|q| p.e.multiply(&q.e).expect("same parent").is_zero())
    });
    Ok(SspSearch { pairs, pairwise_orthogonal, sums_to_one })
}

/// Which rule picked `α` in [`metacyclic_ssp`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AlphaRule {
    /// `t = d`: `α = n - ℓ`.
    TEqualsD,
    /// `t ≠ d`, `ℓ = n`: `α = n`.
    LEqualsN,
    /// `gcd(t/d, n) | ℓ`: `α` solves `(t/d)·α ≡ -ℓ (mod n)`.
    Congruence,
    /// Remaining cases, from `m`, the largest divisor of `n` prime to `t/d`.
    FromM,
}

/// The pair `(⟨a, b^d⟩, ⟨a^α b^d⟩)` of a metacyclic group, `d = o_n(r)`.
pub fn metacyclic_ssp(p: &MetacyclicPresentation) -> Result<(StrongShodaPair, AlphaRule, i64), ShodaError> {
    let g = make_metacyclic(p);
    let (n, t, ell) = (p.n as i64, p.t as i64, p.ell as i64);
    let d = p.d() as i64;
    let q = t / d;
    let inapplicable = |reason: String| ShodaError::RecipeInapplicable { presentation: p.to_string(), reason };
    let (rule, alphas): (AlphaRule, Vec<i64>) = if t == d {
        (AlphaRule::TEqualsD, vec![n - ell])
    } else if ell == n {
        (AlphaRule::LEqualsN, vec![n])
    } else if ell % gcd(q as u64, n as u64) as i64 == 0 {
        let x = (0..n).find(|&x| (q * x + ell).rem_euclid(n) == 0).expect("solvable congruence");
        (AlphaRule::Congruence, vec![x])
    } else {
        let m = p.m().expect("d divides t") as i64;
        let numerators = match q {
            2 => vec![m - ell],
            3 => vec![m - ell, 2 * m - ell],
            _ => return Err(inapplicable(format!("t/d = {q} has no rule"))),
        };
        let alphas = numerators.into_iter().filter(|v| v % q == 0).map(|v| v / q).collect();
        (AlphaRule::FromM, alphas)
    };
    if alphas.is_empty() {
        return Err(inapplicable("no integral choice of alpha".into()));
    }
    let h = Subgroup::generated(&g, &[p.word(1, 0), p.word(0, d)]);
    for &alpha in &alphas {
        let k = Subgroup::generated(&g, &[p.word(alpha, d)]);
        if let Ok(pair) = StrongShodaPair::new(&h, &k) {
            return Ok((pair, rule, alpha));
        }
    }
    Err(inapplicable(format!("alpha candidates {alphas:?} ({rule:?}) do not give a strong Shoda pair")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral, quaternion};
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn literal_product(h: &Subgroup, k: &Subgroup) -> GroupAlgebraElement {
        // Oracle for ε: multiply the factors in the order the minimal L are found.
        let mut acc = GroupAlgebraElement::one(h.group());
        for l in minimal_normal_over(h, k) {
            acc = acc.multiply(&(&hat(k) - &hat(&l))).unwrap();
        }
        acc
    }

    #[test]
    fn epsilon_examples() {
        let g = dihedral(3);
        let whole = Subgroup::whole(&g);
        assert_eq!(epsilon(&whole, &whole).unwrap(), hat(&whole));

        let c5 = cyclic(5);
        let eps = epsilon(&Subgroup::whole(&c5), &Subgroup::trivial(&c5)).unwrap();
        assert_eq!(eps, &GroupAlgebraElement::one(&c5) - &hat(&Subgroup::whole(&c5)));

        let c4 = cyclic(4);
        let eps = epsilon(&Subgroup::whole(&c4), &Subgroup::trivial(&c4)).unwrap();
        assert_eq!(eps.coeffs(), &[q(1, 2), q(0, 1), q(-1, 2), q(0, 1)]);
        assert!(eps.is_idempotent());
    }

    #[test]
    fn epsilon_requires_normality() {
        let g = dihedral(3);
        let b = Subgroup::generated(&g, &[3]);
        let a = Subgroup::generated(&g, &[1]);
        assert_eq!(epsilon(&a, &b).unwrap_err(), ShodaError::NotNormalInH);
        assert_eq!(epsilon(&Subgroup::whole(&g), &b).unwrap_err(), ShodaError::NotNormalInH);
    }

    #[test]
    fn minimal_normal_subgroups_of_cyclic_quotients() {
        // C12 over 1: one minimal subgroup per prime dividing 12.
        let c12 = cyclic(12);
        let mins = minimal_normal_over(&Subgroup::whole(&c12), &Subgroup::trivial(&c12));
        let mut orders: Vec<_> = mins.iter().map(|l| l.order()).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![2, 3]);
        // C2 x C2 over 1: three minimal subgroups.
        let v4 = crate::group::make_abelian(&[2, 2]);
        assert_eq!(minimal_normal_over(&Subgroup::whole(&v4), &Subgroup::trivial(&v4)).len(), 3);
    }

    #[test]
    fn e_examples() {
        let g = dihedral(3);
        let whole = Subgroup::whole(&g);
        assert_eq!(e_idempotent(&g, &whole, &whole).unwrap(), hat(&whole));
        let a = Subgroup::generated(&g, &[1]);
        let e = e_idempotent(&g, &a, &Subgroup::trivial(&g)).unwrap();
        assert_eq!(e, &GroupAlgebraElement::one(&g) - &hat(&a));

        let d8 = dihedral(4);
        let a = Subgroup::generated(&d8, &[1]);
        let e = e_idempotent(&d8, &a, &Subgroup::trivial(&d8)).unwrap();
        assert_eq!(e.coefficient(0), &q(1, 2));
        assert!(e.is_central());
    }

    #[test]
    fn ssp_examples() {
        let g = dihedral(3);
        let whole = Subgroup::whole(&g);
        let trivial = Subgroup::trivial(&g);
        assert!(is_strong_shoda_pair(&whole, &whole));
        let a = Subgroup::generated(&g, &[1]);
        assert!(is_strong_shoda_pair(&a, &trivial));
        let b = Subgroup::generated(&g, &[3]);
        assert_eq!(check_strong_shoda_pair(&b, &trivial), Err(SspFailure::NormalityAxiom));
        // S3/1 is not cyclic.
        assert_eq!(check_strong_shoda_pair(&whole, &trivial), Err(SspFailure::MaximalAbelianAxiom));
    }

    #[test]
    fn case_two_pair_in_order_twenty_group() {
        let p = MetacyclicPresentation::new(5, 4, 4, 5).unwrap();
        let g = make_metacyclic(&p);
        let h = Subgroup::generated(&g, &[p.word(1, 0), p.word(0, 2)]);
        let k = Subgroup::generated(&g, &[p.word(0, 2)]);
        let pair = StrongShodaPair::new(&h, &k).unwrap();
        assert_eq!(pair.index, 5);
        assert_eq!(pair.action_image.members(), &[1, 4]);
    }

    #[test]
    fn search_counts() {
        let check = |g: &FiniteGroup, expected: usize| {
            let s = find_strong_shoda_pairs(g).unwrap();
            assert_eq!(s.pairs.len(), expected);
            assert!(s.is_complete());
            let dims: u64 = s.pairs.iter().map(|p| p.dimension()).sum();
            assert_eq!(dims, g.order() as u64);
        };
        check(&dihedral(3), 3);
        check(&cyclic(4), 3);
        check(&dihedral(4), 5);
        check(&quaternion(3), 5);
    }

    #[test]
    fn idempotent_properties_on_search_results() {
        for g in [dihedral(4), dihedral(6), quaternion(4), cyclic(12)] {
            let s = find_strong_shoda_pairs(&g).unwrap();
            for p in &s.pairs {
                assert!(p.epsilon.is_idempotent());
                if p.h != p.k {
                    assert_eq!(p.epsilon, literal_product(&p.h, &p.k));
                }
                assert!(p.e.is_central());
                assert!(p.e.is_idempotent());
                let coeff = p.e.coefficient(0) * BigRational::from_integer(g.order().into());
                assert_eq!(coeff, BigRational::from_integer(p.dimension().into()));
            }
            let total = s.pairs.iter().fold(GroupAlgebraElement::zero(&g), |a, p| &a + &p.e);
            assert_eq!(total, GroupAlgebraElement::one(&g));
            assert!(!total.coefficient(0).is_zero() && total.coefficient(0).is_one());
        }
    }

    #[test]
    fn metacyclic_recipe_examples() {
        let p = MetacyclicPresentation::new(8, 2, 3, 8).unwrap();
        let (pair, rule, alpha) = metacyclic_ssp(&p).unwrap();
        assert_eq!((rule, alpha), (AlphaRule::TEqualsD, 0));
        assert_eq!(pair.h.order(), 8);
        assert!(pair.k.is_trivial());

        let p = MetacyclicPresentation::new(5, 4, 4, 5).unwrap();
        let (pair, rule, alpha) = metacyclic_ssp(&p).unwrap();
        assert_eq!((rule, alpha), (AlphaRule::LEqualsN, 5));
        assert_eq!(pair.k, Subgroup::generated(pair.group(), &[p.word(0, 2)]));

        let p = MetacyclicPresentation::new(12, 6, 7, 2).unwrap();
        let (pair, rule, alpha) = metacyclic_ssp(&p).unwrap();
        assert_eq!((rule, alpha), (AlphaRule::FromM, 2));
        assert_eq!(pair.k, Subgroup::generated(pair.group(), &[p.word(2, 2)]));
        assert_eq!(pair.h, Subgroup::generated(pair.group(), &[p.word(1, 0), p.word(0, 2)]));
        assert!(!pair.e.is_zero());
        assert!(pair.e.coefficient(0) > &BigRational::zero());
    }
}
