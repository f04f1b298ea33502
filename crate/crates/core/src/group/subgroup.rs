use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use super::{Elem, FiniteGroup};

/// A subgroup of a [`FiniteGroup`], stored as a membership bitset plus a
/// sorted element list and a (small, not necessarily minimal) generating set.
#[derive(Clone)]
pub struct Subgroup {
    group: FiniteGroup,
    bits: FixedBitSet,
    elements: Vec<Elem>,
    gens: Vec<Elem>,
}

impl Subgroup {
    /// The subgroup generated by `gens`.
    pub fn generated(group: &FiniteGroup, gens: &[Elem]) -> Self {
        let mut sub = Self::trivial(group);
        for &g in gens {
            if !sub.contains(g) {
                sub = sub.join_element(g);
            }
        }
        sub
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        let mut bits = FixedBitSet::with_capacity(group.order());
        bits.insert(0);
        Subgroup { group: group.clone(), bits, elements: vec![0], gens: Vec::new() }
    }

    pub fn whole(group: &FiniteGroup) -> Self {
        // Greedy generating set, so conjugation checks stay cheap.
        let mut sub = Self::trivial(group);
        for g in group.elements() {
            if !sub.contains(g) {
                sub = sub.join_element(g);
            }
            if sub.order() == group.order() {
                break;
            }
        }
        sub
    }

    /// Validates an explicit member set; `None` if it is not a subgroup.
    pub fn from_elements(group: &FiniteGroup, members: &[Elem]) -> Option<Self> {
        let n = group.order();
        let mut bits = FixedBitSet::with_capacity(n);
        for &m in members {
            if m >= n {
                return None;
            }
            bits.insert(m);
        }
        if !bits.contains(0) {
            return None;
        }
        let elements: Vec<Elem> = bits.ones().collect();
        for &x in &elements {
            if !bits.contains(group.inv(x)) {
                return None;
            }
            for &y in &elements {
                if !bits.contains(group.mul(x, y)) {
                    return None;
                }
            }
        }
        if n % elements.len() != 0 {
            return None;
        }
        let gens = Self::generated(group, &elements).gens;
        Some(Subgroup { group: group.clone(), bits, elements, gens })
    }

    /// Builds a subgroup from a bitset already known to be closed.
    pub(crate) fn from_closed_bits(group: &FiniteGroup, bits: FixedBitSet, gens: Vec<Elem>) -> Self {
        let elements = bits.ones().collect();
        Subgroup { group: group.clone(), bits, elements, gens }
    }

    /// `⟨self, g⟩`, by closing under right multiplication with the generators.
    pub fn join_element(&self, g: Elem) -> Self {
        if self.contains(g) {
            return self.clone();
        }
        let mut gens = self.gens.clone();
        gens.push(g);
        let (bits, elements) = close(&self.group, &gens, &self.bits, &self.elements);
        Subgroup { group: self.group.clone(), bits, elements, gens }
    }

    pub fn join(&self, other: &Subgroup) -> Self {
        let mut out = self.clone();
        for &g in &other.gens {
            if !out.contains(g) {
                out = out.join_element(g);
            }
        }
        out
    }

    pub fn intersection(&self, other: &Subgroup) -> Self {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        let elements: Vec<Elem> = bits.ones().collect();
        let gens = Self::generated(&self.group, &elements).gens;
        Subgroup { group: self.group.clone(), bits, elements, gens }
    }

    #[inline]
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.group.order() / self.order()
    }

    #[inline]
    pub fn contains(&self, g: Elem) -> bool {
        self.bits.contains(g)
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.group.order()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order() <= other.order() && self.bits.is_subset(&other.bits)
    }

    /// Normal in the parent group.
    pub fn is_normal(&self) -> bool {
        let g = &self.group;
        let whole = Subgroup::whole(g);
        self.is_normalized_by(&whole)
    }

    /// Every element of `by` conjugates `self` into itself.
    pub fn is_normalized_by(&self, by: &Subgroup) -> bool {
        let g = &self.group;
        by.gens.iter().all(|&x| self.gens.iter().all(|&k| self.contains(g.conjugate(k, x))))
    }

    /// `x self x^{-1}`.
    pub fn conjugate(&self, x: Elem) -> Subgroup {
        let g = &self.group;
        let mut bits = FixedBitSet::with_capacity(g.order());
        for &k in &self.elements {
            bits.insert(g.conjugate(k, x));
        }
        let gens = self.gens.iter().map(|&k| g.conjugate(k, x)).collect();
        Subgroup::from_closed_bits(g, bits, gens)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.group;
        self.gens
            .iter()
            .enumerate()
            .all(|(i, &x)| self.gens[i + 1..].iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
    }

    pub fn is_cyclic(&self) -> bool {
        let ord = self.order();
        self.elements.iter().any(|&x| self.group.element_order(x) == ord)
    }

    pub fn exponent(&self) -> usize {
        self.elements
            .iter()
            .fold(1, |acc, &x| num_integer::lcm(acc, self.group.element_order(x)))
    }

    /// The least element generating `self` modulo the normal subgroup `k`,
    /// if `self / k` is cyclic.
    pub fn cyclic_generator_mod(&self, k: &Subgroup) -> Option<Elem> {
        let target = self.order() / k.order();
        self.elements.iter().copied().find(|&h| order_mod(&self.group, h, k) == target)
    }
}

/// Order of `hK` in `N/K` for any `N` normalizing `K`.
pub(crate) fn order_mod(g: &FiniteGroup, h: Elem, k: &Subgroup) -> usize {
    let mut x = h;
    let mut n = 1;
    while !k.contains(x) {
        x = g.mul(x, h);
        n += 1;
    }
    n
}

fn close(g: &FiniteGroup, gens: &[Elem], start_bits: &FixedBitSet, start: &[Elem]) -> (FixedBitSet, Vec<Elem>) {
    let mut bits = start_bits.clone();
    let mut elements = start.to_vec();
    let mut i = 0;
    while i < elements.len() {
        let x = elements[i];
        for &s in gens {
            let y = g.mul(x, s);
            if !bits.contains(y) {
                bits.insert(y);
                elements.push(y);
            }
        }
        i += 1;
    }
    elements.sort_unstable();
    (bits, elements)
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order={}, gens={:?})", self.order(), self.gens)
    }
}
