use serde::Serialize;

use crate::cut::is_cut;
use crate::group::{Elem, FiniteGroup, GroupError, Subgroup, DEFAULT_PRODUCT_CAP};

/// Every subgroup of index 2, as kernels of the non-zero maps `G -> C2`.
pub fn index_two_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    // Index-2 subgroups contain every square, and G / ⟨squares⟩ is an
    // elementary abelian 2-group; pick a basis of it and label each element
    // with its coordinate vector.
    let squares: Vec<Elem> = g.elements().map(|x| g.mul(x, x)).collect();
    let base = Subgroup::generated(g, &squares);
    let mut mask = vec![u64::MAX; g.order()];
    for &x in base.elements() {
        mask[x] = 0;
    }
    let mut span = base.clone();
    let mut dims = 0u32;
    for x in g.elements() {
        if span.contains(x) {
            continue;
        }
        assert!(dims < 63, "too many independent classes modulo squares");
        let labelled: Vec<Elem> = span.elements().to_vec();
        for y in labelled {
            mask[g.mul(y, x)] = mask[y] | (1 << dims);
        }
        span = span.join_element(x);
        dims += 1;
    }
    (1u64..(1 << dims))
        .map(|f| {
            let members: Vec<Elem> = g.elements().filter(|&x| (mask[x] & f).count_ones() % 2 == 0).collect();
            Subgroup::from_elements(g, &members).expect("kernel of a map to C2")
        })
        .collect()
}

/// `G` has an abelian index-2 subgroup `H` and an element `x` of order 4
/// with `G = ⟨H, x⟩`, `x^-1 h x = h^-1` on `H`, `x^2 = y^2` for some
/// `y ∈ H`, and `H` not an elementary abelian 2-group.
pub fn is_qstar(g: &FiniteGroup) -> Result<bool, GroupError> {
    is_qstar_capped(g, DEFAULT_PRODUCT_CAP)
}

pub fn is_qstar_capped(g: &FiniteGroup, cap: usize) -> Result<bool, GroupError> {
    if g.order() > cap {
        return Err(GroupError::SizeLimit { order: g.order(), cap });
    }
    if g.order() % 2 != 0 {
        return Ok(false);
    }
    for h in index_two_subgroups(g) {
        if !h.is_abelian() || h.exponent() <= 2 {
            continue;
        }
        let squares: Vec<bool> = {
            let mut s = vec![false; g.order()];
            for &y in h.elements() {
                s[g.mul(y, y)] = true;
            }
            s
        };
        let found = g.elements().filter(|&x| !h.contains(x) && g.element_order(x) == 4).any(|x| {
            let xi = g.inv(x);
            // Inversion is a homomorphism on abelian H, so generators suffice.
            squares[g.mul(x, x)] && h.generators().iter().all(|&y| g.mul(g.mul(xi, y), x) == g.inv(y))
        });
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HeightReason {
    CutAndTrivialCenter,
    Qstar,
    Otherwise,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HeightVerdict {
    pub height: u8,
    pub reason: HeightReason,
}

/// Central height of `V(Z[G])` for metacyclic `G`: 0 for cut groups with
/// trivial centre, 2 for Q*-groups, 1 otherwise. The input is assumed to
/// be metacyclic; this is not checked.
pub fn central_height(g: &FiniteGroup) -> Result<HeightVerdict, GroupError> {
    if g.center().is_trivial() && is_cut(g) {
        return Ok(HeightVerdict { height: 0, reason: HeightReason::CutAndTrivialCenter });
    }
    if is_qstar(g)? {
        return Ok(HeightVerdict { height: 2, reason: HeightReason::Qstar });
    }
    Ok(HeightVerdict { height: 1, reason: HeightReason::Otherwise })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral, make_abelian, quaternion};

    // Oracle: index-2 members of the full subgroup lattice.
    fn index_two_brute(g: &FiniteGroup) -> usize {
        crate::group::all_subgroups(g).unwrap().iter().filter(|e| e.subgroup.index() == 2).count()
    }

    #[test]
    fn index_two_counts() {
        for g in [dihedral(4), quaternion(3), cyclic(6), make_abelian(&[2, 2, 2]), dihedral(3), cyclic(5)] {
            let subs = index_two_subgroups(&g);
            assert_eq!(subs.len(), index_two_brute(&g));
            assert!(subs.iter().all(|h| h.index() == 2));
        }
    }

    #[test]
    fn qstar_examples() {
        assert!(is_qstar(&quaternion(3)).unwrap());
        assert!(!is_qstar(&dihedral(4)).unwrap());
        assert!(!is_qstar(&cyclic(4)).unwrap());
        assert!(!is_qstar(&dihedral(3)).unwrap());
        assert!(is_qstar(&quaternion(4)).unwrap());
        assert!(matches!(is_qstar_capped(&cyclic(8), 4), Err(GroupError::SizeLimit { .. })));
    }

    #[test]
    fn height_examples() {
        assert_eq!(central_height(&dihedral(3)).unwrap().height, 0);
        assert_eq!(central_height(&quaternion(3)).unwrap().height, 2);
        assert_eq!(central_height(&dihedral(4)).unwrap().height, 1);
        assert_eq!(central_height(&cyclic(2)).unwrap(), HeightVerdict { height: 1, reason: HeightReason::Otherwise });
    }
}
