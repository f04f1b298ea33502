//! Isomorphism testing for small groups: invariant fingerprints, then a
//! backtracking search over generator images.

use super::{Elem, FiniteGroup, GroupError, Subgroup, DEFAULT_LATTICE_CAP};

/// Isomorphism invariants used to reject most non-isomorphic pairs cheaply.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub order: usize,
    pub center_order: usize,
    pub derived_order: usize,
    pub element_orders: Vec<usize>,
    pub class_sizes: Vec<usize>,
    /// Sorted `(element order, class size)` pairs over all elements.
    pub order_class_profile: Vec<(usize, usize)>,
}

impl Fingerprint {
    pub fn of(g: &FiniteGroup) -> Self {
        let classes = g.conjugacy_classes();
        let mut element_orders = g.element_orders().to_vec();
        element_orders.sort_unstable();
        let mut class_sizes = classes.sizes.clone();
        class_sizes.sort_unstable();
        let mut order_class_profile: Vec<(usize, usize)> = g
            .elements()
            .map(|x| (g.element_order(x), classes.sizes[classes.class_of[x]]))
            .collect();
        order_class_profile.sort_unstable();
        Fingerprint {
            order: g.order(),
            center_order: g.center().order(),
            derived_order: g.derived_subgroup().order(),
            element_orders,
            class_sizes,
            order_class_profile,
        }
    }
}

pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Result<bool, GroupError> {
    is_isomorphic_capped(g, h, DEFAULT_LATTICE_CAP)
}

pub fn is_isomorphic_capped(g: &FiniteGroup, h: &FiniteGroup, cap: usize) -> Result<bool, GroupError> {
    for grp in [g, h] {
        if grp.order() > cap {
            return Err(GroupError::SizeLimit { order: grp.order(), cap });
        }
    }
    if Fingerprint::of(g) != Fingerprint::of(h) {
        return Ok(false);
    }
    Ok(find_isomorphism(g, h).is_some())
}

/// Greedy generating set: repeatedly add an element of largest order not
/// yet in the span.
fn greedy_generators(g: &FiniteGroup) -> Vec<Elem> {
    let mut by_order: Vec<Elem> = g.elements().collect();
    by_order.sort_by(|&x, &y| g.element_order(y).cmp(&g.element_order(x)).then(x.cmp(&y)));
    let mut span = Subgroup::trivial(g);
    let mut gens = Vec::new();
    for x in by_order {
        if span.is_whole() {
            break;
        }
        if !span.contains(x) {
            span = span.join_element(x);
            gens.push(x);
        }
    }
    gens
}

/// Returns an isomorphism `G -> H` as an image table, if one exists.
pub(crate) fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<Vec<Elem>> {
    if g.order() != h.order() {
        return None;
    }
    let gens = greedy_generators(g);
    if gens.is_empty() {
        return Some(vec![0]);
    }
    let gc = g.conjugacy_classes();
    let hc = h.conjugacy_classes();
    let signature = |grp: &FiniteGroup, cls: &super::ConjugacyTable, x: Elem| {
        (grp.element_order(x), cls.sizes[cls.class_of[x]])
    };
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let sig = signature(g, gc, x);
            h.elements()
                .filter(|&y| signature(h, hc, y) == sig)
                // Inner automorphisms of H let the first image be a class representative.
                .filter(|&y| i > 0 || hc.representatives[hc.class_of[y]] == y)
                .collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    search(g, h, &gens, &candidates, &mut images)
}

fn search(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[Elem],
    candidates: &[Vec<Elem>],
    images: &mut Vec<Elem>,
) -> Option<Vec<Elem>> {
    let depth = images.len();
    if depth == gens.len() {
        return extend(g, h, gens, images);
    }
    for &y in &candidates[depth] {
        images.push(y);
        if let Some(map) = extend(g, h, &gens[..=depth], images) {
            if depth + 1 == gens.len() {
                return Some(map);
            }
            if let Some(found) = search(g, h, gens, candidates, images) {
                return Some(found);
            }
        }
        images.pop();
    }
    None
}

/// Extends `gens[i] -> images[i]` to a homomorphism on `⟨gens⟩` by walking
/// the Cayley graph, returning `None` on any inconsistency or collision.
fn extend(g: &FiniteGroup, h: &FiniteGroup, gens: &[Elem], images: &[Elem]) -> Option<Vec<Elem>> {
    const UNSET: usize = usize::MAX;
    let mut map = vec![UNSET; g.order()];
    let mut used = vec![false; h.order()];
    map[0] = 0;
    used[0] = true;
    let mut queue = vec![0];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let v = h.mul(map[x], t);
            if map[y] == UNSET {
                if used[v] {
                    return None;
                }
                used[v] = true;
                map[y] = v;
                queue.push(y);
            } else if map[y] != v {
                return None;
            }
        }
    }
    Some(map)
}
