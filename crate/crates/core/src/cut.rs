//! The cut-property via conjugacy: a finite group has only trivial central
//! units in `Z[G]` iff for every `x` and every `j` coprime to `|G|`, `x^j` is
//! conjugate to `x` or to `x^{-1}`. Also the 2- and 3-group specializations,
//! Camina groups and pairs, and the `{2, 3}` order filter.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cyclo::ComponentDescriptor;
use crate::group::{Elem, FiniteGroup, Subgroup};
use crate::numbers::{gcd, is_prime_power_of};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CutError {
    #[error("group of order {0} is not a 2-group")]
    NotA2Group(usize),
    #[error("group of order {0} is not a 3-group")]
    NotA3Group(usize),
    #[error("the trivial group has no prime divisors")]
    TrivialGroup,
    #[error("subgroup is not normal")]
    NotNormal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CutMethod {
    General,
    TwoGroup,
    ThreeGroup,
    Wedderburn,
}

/// An element `x` and exponent `j` with `gcd(j, |G|) = 1` such that `x^j`
/// is conjugate to neither `x` nor `x^{-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutWitness {
    pub element: Elem,
    pub exponent: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CutVerdict {
    pub is_cut: bool,
    pub method: CutMethod,
    /// Present iff the verdict is negative and the method is conjugacy-based.
    pub witness: Option<CutWitness>,
    /// For the Wedderburn method: the first component whose centre is
    /// neither `Q` nor imaginary quadratic.
    pub offending_component: Option<ComponentDescriptor>,
}

impl CutVerdict {
    fn conjugacy(method: CutMethod, witness: Option<CutWitness>) -> Self {
        CutVerdict { is_cut: witness.is_none(), method, witness, offending_component: None }
    }
}

/// Walks class representatives in increasing index order, computing each
/// class only when it is reached, and returns the first failure of `test`.
fn first_failure(
    g: &FiniteGroup,
    mut test: impl FnMut(Elem, &FixedBitSet) -> Option<u64>,
) -> Option<CutWitness> {
    let mut covered = FixedBitSet::with_capacity(g.order());
    for x in g.elements() {
        if covered.contains(x) {
            continue;
        }
        let class = g.class_bits(x);
        covered.union_with(&class);
        if let Some(j) = test(x, &class) {
            return Some(CutWitness { element: x, exponent: j });
        }
    }
    None
}

/// `y` lies in `class(x) ∪ class(x^{-1})`, given the class of `x`.
fn conj_to_x_or_inverse(g: &FiniteGroup, class_of_x: &FixedBitSet, y: Elem) -> bool {
    class_of_x.contains(y) || class_of_x.contains(g.inv(y))
}

/// The general conjugacy criterion.
///
/// `j` runs over `1..=|G|` coprime to `|G|` but each residue modulo
/// `ord(x)` is tested once; the reported exponent is the least such `j`.
pub fn is_cut_ritter_sehgal(g: &FiniteGroup) -> CutVerdict {
    let n = g.order() as u64;
    let witness = first_failure(g, |x, class| {
        let ord = g.element_order(x) as u64;
        let mut tried = vec![false; ord as usize];
        for j in (1..=n).filter(|&j| gcd(j, n) == 1) {
            let res = (j % ord) as usize;
            if std::mem::replace(&mut tried[res], true) {
                continue;
            }
            if !conj_to_x_or_inverse(g, class, g.pow(x, res as i64)) {
                return Some(j);
            }
        }
        None
    });
    CutVerdict::conjugacy(CutMethod::General, witness)
}

pub fn is_cut(g: &FiniteGroup) -> bool {
    is_cut_ritter_sehgal(g).is_cut
}

/// For 3-groups: cut iff `x^2` is conjugate to `x^{-1}` for all `x`.
pub fn is_cut_3group(g: &FiniteGroup) -> Result<CutVerdict, CutError> {
    if !is_prime_power_of(g.order() as u64, 3) {
        return Err(CutError::NotA3Group(g.order()));
    }
    let witness = first_failure(g, |x, class| {
        let sq = g.mul(x, x);
        (!class.contains(g.inv(sq))).then_some(2)
    });
    Ok(CutVerdict::conjugacy(CutMethod::ThreeGroup, witness))
}

/// For 2-groups: cut iff `x^3` is conjugate to `x` or `x^{-1}` for all `x`.
pub fn is_cut_2group(g: &FiniteGroup) -> Result<CutVerdict, CutError> {
    if !is_prime_power_of(g.order() as u64, 2) {
        return Err(CutError::NotA2Group(g.order()));
    }
    let witness = first_failure(g, |x, class| {
        let cube = g.pow(x, 3);
        (!conj_to_x_or_inverse(g, class, cube)).then_some(3)
    });
    Ok(CutVerdict::conjugacy(CutMethod::TwoGroup, witness))
}

/// Every `g ∉ N` is conjugate to every element of `gN`.
pub fn is_camina_pair(g: &FiniteGroup, n: &Subgroup) -> Result<bool, CutError> {
    if !n.is_normal() {
        return Err(CutError::NotNormal);
    }
    Ok(camina_pair_unchecked(g, n))
}

fn camina_pair_unchecked(g: &FiniteGroup, n: &Subgroup) -> bool {
    let mut covered = FixedBitSet::with_capacity(g.order());
    for x in g.elements() {
        if n.contains(x) || covered.contains(x) {
            continue;
        }
        let class = g.class_bits(x);
        if !n.elements().iter().all(|&k| class.contains(g.mul(x, k))) {
            return false;
        }
        covered.union_with(&class);
    }
    true
}

/// `G' ≠ G` and every coset `gG'` with `g ∉ G'` is a single conjugacy class.
///
/// Abelian groups other than the trivial group pass vacuously; see
/// [`is_nonabelian_camina`].
pub fn is_camina(g: &FiniteGroup) -> bool {
    let derived = g.derived_subgroup();
    if derived.is_whole() {
        return false;
    }
    // class(x) ⊆ xG' always, so inclusion of the coset gives equality.
    camina_pair_unchecked(g, &derived)
}

pub fn is_nonabelian_camina(g: &FiniteGroup) -> bool {
    !g.is_abelian() && is_camina(g)
}

/// Necessary condition for the cut-property: `2` or `3` divides `|G|`.
pub fn pi_condition(g: &FiniteGroup) -> Result<bool, CutError> {
    match g.order() {
        1 => Err(CutError::TrivialGroup),
        n => Ok(n % 2 == 0 || n % 3 == 0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{
        cyclic, dihedral, direct_product, heisenberg, make_abelian, make_metacyclic, quaternion,
        MetacyclicPresentation,
    };

    fn c8_by_c2() -> FiniteGroup {
        make_metacyclic(&MetacyclicPresentation::new(8, 2, 3, 8).unwrap())
    }

    #[test]
    fn ritter_sehgal_examples() {
        assert!(is_cut(&dihedral(3)));
        assert!(is_cut(&cyclic(6)));
        assert!(is_cut(&cyclic(1)));
        let v = is_cut_ritter_sehgal(&cyclic(5));
        assert!(!v.is_cut);
        assert_eq!(v.witness, Some(CutWitness { element: 1, exponent: 2 }));
    }

    #[test]
    fn cut_factors_with_non_cut_product() {
        let h = c8_by_c2();
        let k = cyclic(4);
        assert!(is_cut(&h));
        assert!(is_cut(&k));
        let g = direct_product(&h, &k).unwrap();
        assert_eq!(g.order(), 64);
        let v = is_cut_ritter_sehgal(&g);
        assert!(!v.is_cut);
        let w = v.witness.unwrap();
        // (a, x) sits at index 1 + 16*1.
        assert_eq!(w, CutWitness { element: 17, exponent: 3 });
        assert_eq!(g.label(w.element), "(a,(1))");
    }

    #[test]
    fn witness_satisfies_its_contract() {
        let g = direct_product(&c8_by_c2(), &cyclic(4)).unwrap();
        let w = is_cut_ritter_sehgal(&g).witness.unwrap();
        assert_eq!(gcd(w.exponent, g.order() as u64), 1);
        let y = g.pow(w.element, w.exponent as i64);
        let cls = g.conjugacy_classes();
        assert!(!cls.same_class(y, w.element));
        assert!(!cls.same_class(y, g.inv(w.element)));
    }

    #[test]
    fn three_group_examples() {
        assert!(is_cut_3group(&cyclic(3)).unwrap().is_cut);
        assert!(!is_cut_3group(&cyclic(9)).unwrap().is_cut);
        assert!(is_cut_3group(&heisenberg(3, 1)).unwrap().is_cut);
        assert_eq!(is_cut_3group(&cyclic(2)).unwrap_err(), CutError::NotA3Group(2));
    }

    #[test]
    fn two_group_examples() {
        assert!(is_cut_2group(&dihedral(4)).unwrap().is_cut);
        assert!(is_cut_2group(&quaternion(3)).unwrap().is_cut);
        assert!(!is_cut_2group(&cyclic(8)).unwrap().is_cut);
        assert_eq!(is_cut_2group(&cyclic(3)).unwrap_err(), CutError::NotA2Group(3));
    }

    // Oracle: compare every coset xG' with the orbit of x element by element.
    fn camina_brute(g: &FiniteGroup) -> bool {
        let d = g.derived_subgroup();
        if d.is_whole() {
            return false;
        }
        g.elements().filter(|&x| !d.contains(x)).all(|x| {
            let mut coset: Vec<_> = d.elements().iter().map(|&k| g.mul(x, k)).collect();
            let mut class: Vec<_> = g.class_bits(x).ones().collect();
            coset.sort_unstable();
            class.sort_unstable();
            coset == class
        })
    }

    #[test]
    fn camina_examples() {
        for g in [dihedral(4), dihedral(3), quaternion(3), heisenberg(3, 1), cyclic(4)] {
            assert!(is_camina(&g));
            assert_eq!(is_camina(&g), camina_brute(&g));
        }
        assert!(!is_nonabelian_camina(&cyclic(4)));
        assert!(!is_camina(&dihedral(6)));
        assert_eq!(is_camina(&dihedral(6)), camina_brute(&dihedral(6)));
        let d8 = dihedral(4);
        assert!(is_camina_pair(&d8, &d8.center()).unwrap());
        let q8 = quaternion(3);
        assert!(is_camina_pair(&q8, &q8.center()).unwrap());
        let d = d8.derived_subgroup();
        assert_eq!(is_camina_pair(&d8, &d).unwrap(), is_camina(&d8));
        let s3 = dihedral(3);
        let b = Subgroup::generated(&s3, &[3]);
        assert_eq!(is_camina_pair(&s3, &b).unwrap_err(), CutError::NotNormal);
    }

    #[test]
    fn pi_condition_examples() {
        assert!(!pi_condition(&make_abelian(&[35])).unwrap());
        assert!(pi_condition(&dihedral(3)).unwrap());
        assert_eq!(pi_condition(&cyclic(1)).unwrap_err(), CutError::TrivialGroup);
    }
}
