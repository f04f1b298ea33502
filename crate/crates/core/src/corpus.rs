//! Named test groups: small 2-groups, 3-groups and a few mixed orders.

use crate::group::{
    cyclic, dicyclic, dihedral, direct_product, heisenberg, make_abelian, make_metacyclic, quaternion, semidihedral,
    FiniteGroup, MetacyclicPresentation, Subgroup,
};
use crate::numbers::divisors;

#[derive(Clone, Debug)]
pub struct NamedGroup {
    pub name: String,
    pub group: FiniteGroup,
}

impl NamedGroup {
    fn new(name: impl Into<String>, group: FiniteGroup) -> Self {
        NamedGroup { name: name.into(), group }
    }
}

fn meta(n: u64, t: u64, r: u64, ell: u64) -> NamedGroup {
    let p = MetacyclicPresentation::new(n, t, r, ell).expect("corpus presentation");
    NamedGroup::new(format!("M{p}"), make_metacyclic(&p))
}

fn product(a: &NamedGroup, b: &NamedGroup) -> NamedGroup {
    let g = direct_product(&a.group, &b.group).expect("corpus product within cap");
    NamedGroup::new(format!("{}x{}", a.name, b.name), g)
}

fn abelian(factors: &[usize]) -> NamedGroup {
    let parts: Vec<String> = factors.iter().map(|f| f.to_string()).collect();
    let name = if factors.len() == 1 { format!("C{}", factors[0]) } else { format!("C[{}]", parts.join(",")) };
    NamedGroup::new(name, make_abelian(factors))
}

/// `(G × H) / ⟨(z, w^-1)⟩` for central `z ∈ G`, `w ∈ H` of equal order.
pub fn central_product(g: &FiniteGroup, h: &FiniteGroup, z: usize, w: usize) -> FiniteGroup {
    assert!(g.center().contains(z) && h.center().contains(w), "identified elements must be central");
    assert_eq!(g.element_order(z), h.element_order(w));
    let gh = direct_product(g, h).expect("central product within cap");
    let diag = Subgroup::generated(&gh, &[z + g.order() * h.inv(w)]);
    gh.quotient(&diag).expect("central subgroup is normal").group
}

/// Partitions of `k` into parts, each listed in non-increasing order.
fn partitions(k: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

/// Every abelian `p`-group of order `p^k`, `1 ≤ k ≤ max_k`, as invariant
/// factors in increasing order.
pub fn abelian_p_groups(p: usize, max_k: u32) -> Vec<Vec<usize>> {
    (1..=max_k)
        .flat_map(partitions)
        .map(|parts| parts.iter().rev().map(|&e| p.pow(e)).collect())
        .collect()
}

/// Every chain `d_1 | d_2 | ... | d_s` with `d_1 > 1` and product `n`; the
/// empty chain for `n = 1`.
pub fn invariant_factor_decompositions(n: u64) -> Vec<Vec<u64>> {
    fn go(rest: u64, last: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 1 {
            out.push(cur.clone());
            return;
        }
        for d in divisors(rest) {
            // Remaining factors are multiples of d, so d must divide rest / d
            // unless d is the last factor.
            if d > 1 && d % last == 0 && (d == rest || (rest / d) % d == 0) {
                cur.push(d);
                go(rest / d, d, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, 1, &mut Vec::new(), &mut out);
    out
}

/// 2-groups of order at most 64.
pub fn two_groups() -> Vec<NamedGroup> {
    let mut out: Vec<NamedGroup> = abelian_p_groups(2, 6).iter().map(|f| abelian(f)).collect();
    for k in 3..=6 {
        out.push(NamedGroup::new(format!("D{}", 1 << k), dihedral(1 << (k - 1))));
        out.push(NamedGroup::new(format!("Q{}", 1 << k), quaternion(k)));
        if k >= 4 {
            out.push(NamedGroup::new(format!("SD{}", 1 << k), semidihedral(k)));
        }
    }
    let d8 = NamedGroup::new("D8", dihedral(4));
    let q8 = NamedGroup::new("Q8", quaternion(3));
    let c2 = abelian(&[2]);
    let c4 = abelian(&[4]);
    let c2c2 = abelian(&[2, 2]);
    let c8 = abelian(&[8]);
    let extraspecial_plus = NamedGroup::new("2^(1+4)+", heisenberg(2, 2));
    let extraspecial_minus = NamedGroup::new("Q8*D8", central_product(&q8.group, &d8.group, 2, 2));
    let m16 = meta(8, 2, 3, 8);
    for (a, b) in [
        (&d8, &c2),
        (&q8, &c2),
        (&d8, &c4),
        (&q8, &c4),
        (&d8, &c2c2),
        (&q8, &c2c2),
        (&d8, &c8),
        (&q8, &c8),
        (&d8, &d8),
        (&q8, &q8),
        (&d8, &q8),
        (&extraspecial_plus, &c2),
        (&extraspecial_minus, &c2),
        (&m16, &c2),
        (&m16, &c4),
    ] {
        out.push(product(a, b));
    }
    out.push(extraspecial_plus);
    out.push(extraspecial_minus);
    for (n, t, r, l) in [
        (4, 4, 3, 4),
        (4, 4, 3, 2),
        (8, 2, 3, 8),
        (8, 2, 5, 8),
        (8, 4, 3, 8),
        (8, 4, 5, 8),
        (8, 4, 7, 8),
        (8, 4, 3, 4),
        (16, 2, 9, 16),
        (16, 4, 3, 16),
        (16, 4, 5, 16),
        (16, 4, 7, 16),
        (8, 8, 3, 8),
        (8, 8, 5, 8),
        (32, 2, 17, 32),
    ] {
        out.push(meta(n, t, r, l));
    }
    out
}

/// 3-groups of order at most 243.
pub fn three_groups() -> Vec<NamedGroup> {
    let mut out: Vec<NamedGroup> = abelian_p_groups(3, 5).iter().map(|f| abelian(f)).collect();
    let heis = NamedGroup::new("3^(1+2)+", heisenberg(3, 1));
    let m27 = meta(9, 3, 4, 9);
    let c3 = abelian(&[3]);
    let c9 = abelian(&[9]);
    let c3c3 = abelian(&[3, 3]);
    let z_heis = 9;
    let z_m27 = MetacyclicPresentation::new(9, 3, 4, 9).unwrap().word(3, 0);
    let extraspecial_exp9 =
        NamedGroup::new("3^(1+4)-", central_product(&heis.group, &m27.group, z_heis, z_m27));
    for (a, b) in [(&heis, &c3), (&heis, &c9), (&heis, &c3c3), (&m27, &c3), (&m27, &c9), (&m27, &c3c3)] {
        out.push(product(a, b));
    }
    out.push(NamedGroup::new("3^(1+4)+", heisenberg(3, 2)));
    out.push(extraspecial_exp9);
    out.push(heis);
    out.push(m27);
    for (n, t, r, l) in [(27, 3, 10, 27), (9, 9, 4, 9), (9, 9, 4, 3), (27, 9, 4, 27), (27, 9, 10, 27), (81, 3, 28, 81)] {
        out.push(meta(n, t, r, l));
    }
    out
}

/// Groups whose order has more than one prime divisor.
pub fn mixed_groups() -> Vec<NamedGroup> {
    let mut out = vec![
        NamedGroup::new("S3", dihedral(3)),
        NamedGroup::new("D10", dihedral(5)),
        NamedGroup::new("D12", dihedral(6)),
        NamedGroup::new("Dic3", dicyclic(3)),
        NamedGroup::new("Dic5", dicyclic(5)),
        abelian(&[6]),
        abelian(&[10]),
        abelian(&[2, 6]),
        abelian(&[12]),
        NamedGroup::new("C5", cyclic(5)),
        NamedGroup::new("C7", cyclic(7)),
    ];
    for (n, t, r, l) in [(5, 4, 2, 5), (7, 3, 2, 7), (7, 6, 3, 7), (9, 6, 2, 9), (12, 2, 7, 6), (15, 4, 2, 15), (21, 6, 2, 21)] {
        out.push(meta(n, t, r, l));
    }
    let s3 = NamedGroup::new("S3", dihedral(3));
    out.push(product(&s3, &abelian(&[2])));
    out.push(product(&s3, &abelian(&[3])));
    out.push(product(&s3, &s3));
    out
}

pub fn corpus() -> Vec<NamedGroup> {
    let mut out = two_groups();
    out.extend(three_groups());
    out.extend(mixed_groups());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::is_prime_power_of;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=6).map(|k| partitions(k).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11]);
        assert_eq!(abelian_p_groups(2, 6).len(), 29);
    }

    // Oracle: the number of abelian groups of order n is multiplicative,
    // with p^k contributing the partition count of k.
    #[test]
    fn invariant_factor_counts() {
        let part = |k: u32| partitions(k).len();
        for n in 1..=200u64 {
            let expected: usize = crate::numbers::factorize(n).iter().map(|&(_, k)| part(k)).product();
            let got = invariant_factor_decompositions(n);
            assert_eq!(got.len(), expected, "n = {n}");
            for chain in &got {
                assert_eq!(chain.iter().product::<u64>(), n);
                assert!(chain.windows(2).all(|w| w[1] % w[0] == 0));
            }
        }
    }

    #[test]
    fn corpus_orders() {
        for g in two_groups() {
            assert!(g.group.order() <= 64 && is_prime_power_of(g.group.order() as u64, 2), "{}", g.name);
        }
        for g in three_groups() {
            assert!(g.group.order() <= 243 && is_prime_power_of(g.group.order() as u64, 3), "{}", g.name);
        }
    }

    #[test]
    fn extraspecial_products() {
        let minus = central_product(&quaternion(3), &dihedral(4), 2, 2);
        assert_eq!(minus.order(), 32);
        assert_eq!(minus.center().order(), 2);
        assert_eq!(minus.derived_subgroup().order(), 2);
        // 2^(1+4)- has 11 involutions, 2^(1+4)+ has 19.
        let involutions = |g: &FiniteGroup| g.elements().filter(|&x| g.element_order(x) == 2).count();
        assert_eq!(involutions(&minus), 11);
        assert_eq!(involutions(&heisenberg(2, 2)), 19);
        let g = three_groups().into_iter().find(|g| g.name == "3^(1+4)-").unwrap().group;
        assert_eq!(g.order(), 243);
        assert_eq!(g.center().order(), 3);
        assert_eq!(g.exponent(), 9);
    }
}
