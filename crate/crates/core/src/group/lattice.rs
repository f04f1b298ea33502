use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use super::{FiniteGroup, GroupError, Subgroup, DEFAULT_LATTICE_CAP};

/// A subgroup together with its normality flag.
#[derive(Clone, Debug)]
pub struct LatticeEntry {
    pub subgroup: Subgroup,
    pub normal: bool,
}

pub fn all_subgroups(g: &FiniteGroup) -> Result<Vec<LatticeEntry>, GroupError> {
    all_subgroups_capped(g, DEFAULT_LATTICE_CAP)
}

/// Every subgroup exactly once, by closing the set of cyclic subgroups under
/// joins with cyclic subgroups. Sorted by order, then by least elements.
pub fn all_subgroups_capped(g: &FiniteGroup, cap: usize) -> Result<Vec<LatticeEntry>, GroupError> {
    if g.order() > cap {
        return Err(GroupError::SizeLimit { order: g.order(), cap });
    }
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut cyclic_gens = Vec::new();
    let mut found = Vec::new();
    for x in g.elements() {
        let c = Subgroup::generated(g, &[x]);
        if seen.insert(c.bits().clone()) {
            cyclic_gens.push(x);
            found.push(c);
        }
    }
    let mut frontier: Vec<usize> = (0..found.len()).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for idx in frontier {
            for &c in &cyclic_gens {
                if found[idx].contains(c) {
                    continue;
                }
                let joined = found[idx].join_element(c);
                if seen.insert(joined.bits().clone()) {
                    next.push(found.len());
                    found.push(joined);
                }
            }
        }
        frontier = next;
    }
    found.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements().cmp(b.elements())));
    let whole = Subgroup::whole(g);
    Ok(found
        .into_iter()
        .map(|s| {
            let normal = s.is_normalized_by(&whole);
            LatticeEntry { subgroup: s, normal }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral};

    // Oracle: test every subset containing the identity for closure.
    fn brute_count(g: &FiniteGroup) -> usize {
        let n = g.order();
        let rest = n - 1;
        (0u32..(1 << rest))
            .filter(|mask| {
                let members: Vec<usize> =
                    std::iter::once(0).chain((0..rest).filter(|i| mask >> i & 1 == 1).map(|i| i + 1)).collect();
                Subgroup::from_elements(g, &members).is_some()
            })
            .count()
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(all_subgroups(&cyclic(6)).unwrap().len(), 4);
        let d8 = dihedral(4);
        assert_eq!(brute_count(&d8), 10);
        assert_eq!(all_subgroups(&d8).unwrap().len(), 10);
        let s3 = dihedral(3);
        assert_eq!(brute_count(&s3), 6);
        let lattice = all_subgroups(&s3).unwrap();
        assert_eq!(lattice.len(), 6);
        assert_eq!(lattice.iter().filter(|e| e.normal).count(), 3);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(all_subgroups_capped(&cyclic(10), 8), Err(GroupError::SizeLimit { .. })));
    }

    #[test]
    fn closed_under_conjugation() {
        let g = dihedral(6);
        let lattice = all_subgroups(&g).unwrap();
        let set: HashSet<Subgroup> = lattice.iter().map(|e| e.subgroup.clone()).collect();
        for e in &lattice {
            for x in g.elements() {
                assert!(set.contains(&e.subgroup.conjugate(x)));
            }
            if e.normal {
                assert!(g.normalizer(&e.subgroup).is_whole());
            }
        }
    }
}
