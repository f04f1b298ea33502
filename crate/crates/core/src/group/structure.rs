//! Conjugacy, centres, central series, normalizers and quotients.

use fixedbitset::FixedBitSet;

use super::{Elem, FiniteGroup, GroupError, Subgroup};

/// Partition of a group into conjugacy classes. Classes are numbered in
/// order of their least element, which is also their representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyTable {
    pub class_of: Vec<usize>,
    pub representatives: Vec<Elem>,
    pub sizes: Vec<usize>,
}

impl ConjugacyTable {
    pub fn num_classes(&self) -> usize {
        self.representatives.len()
    }

    pub fn same_class(&self, x: Elem, y: Elem) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    pub fn members(&self, class: usize) -> Vec<Elem> {
        (0..self.class_of.len()).filter(|&x| self.class_of[x] == class).collect()
    }
}

/// Result of [`FiniteGroup::quotient`]: the coset group and the projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// `projection[g]` is the index of the coset `gN` in `group`.
    pub projection: Vec<Elem>,
    /// Least element of each coset.
    pub representatives: Vec<Elem>,
}

impl FiniteGroup {
    pub fn conjugacy_classes(&self) -> &ConjugacyTable {
        self.cached_classes().get_or_init(|| {
            let n = self.order();
            let mut class_of = vec![usize::MAX; n];
            let mut representatives = Vec::new();
            let mut sizes = Vec::new();
            for x in 0..n {
                if class_of[x] != usize::MAX {
                    continue;
                }
                let c = representatives.len();
                let mut size = 0;
                for g in 0..n {
                    let y = self.conjugate(x, g);
                    if class_of[y] == usize::MAX {
                        class_of[y] = c;
                        size += 1;
                    }
                }
                representatives.push(x);
                sizes.push(size);
            }
            ConjugacyTable { class_of, representatives, sizes }
        })
    }

    /// The conjugacy class of `x` as a bitset, without computing all classes.
    pub fn class_bits(&self, x: Elem) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(self.order());
        for g in self.elements() {
            bits.insert(self.conjugate(x, g));
        }
        bits
    }

    pub fn center(&self) -> Subgroup {
        let whole = Subgroup::whole(self);
        let gens = whole.generators();
        let members: Vec<Elem> = self
            .elements()
            .filter(|&z| gens.iter().all(|&g| self.mul(z, g) == self.mul(g, z)))
            .collect();
        Subgroup::generated(self, &members)
    }

    pub fn centralizer_of(&self, x: Elem) -> Subgroup {
        let members: Vec<Elem> = self.elements().filter(|&g| self.mul(x, g) == self.mul(g, x)).collect();
        Subgroup::generated(self, &members)
    }

    /// `[A, B]`, generated by all commutators `[a, b]`.
    pub fn commutator_subgroup(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut seen = FixedBitSet::with_capacity(self.order());
        let mut sub = Subgroup::trivial(self);
        for &x in a.elements() {
            for &y in b.elements() {
                let c = self.commutator(x, y);
                if !seen.contains(c) {
                    seen.insert(c);
                    if !sub.contains(c) {
                        sub = sub.join_element(c);
                    }
                }
            }
        }
        sub
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let whole = Subgroup::whole(self);
        self.commutator_subgroup(&whole, &whole)
    }

    /// `γ_1 = G, γ_{i+1} = [γ_i, G]`, stopping once a term repeats. The last
    /// term is trivial exactly when the group is nilpotent.
    pub fn lower_central_series(&self) -> Vec<Subgroup> {
        let whole = Subgroup::whole(self);
        let mut series = vec![whole.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.commutator_subgroup(last, &whole);
            if next == *last {
                return series;
            }
            series.push(next);
        }
    }

    /// `Z_0 = 1, Z_{i+1}/Z_i = Z(G/Z_i)`, stopping once a term repeats.
    pub fn upper_central_series(&self) -> Vec<Subgroup> {
        let whole = Subgroup::whole(self);
        let gens = whole.generators().to_vec();
        let mut series = vec![Subgroup::trivial(self)];
        loop {
            let last = series.last().unwrap();
            let members: Vec<Elem> = self
                .elements()
                .filter(|&z| gens.iter().all(|&g| last.contains(self.commutator(z, g))))
                .collect();
            let next = Subgroup::generated(self, &members);
            if next == *last {
                return series;
            }
            series.push(next);
        }
    }

    pub fn normalizer(&self, k: &Subgroup) -> Subgroup {
        let members: Vec<Elem> = self
            .elements()
            .filter(|&g| k.generators().iter().all(|&x| k.contains(self.conjugate(x, g))))
            .collect();
        Subgroup::generated(self, &members)
    }

    pub fn quotient(&self, n: &Subgroup) -> Result<Quotient, GroupError> {
        if !n.is_normal() {
            return Err(GroupError::NotNormal);
        }
        let order = self.order();
        let mut projection = vec![usize::MAX; order];
        let mut representatives = Vec::new();
        for x in 0..order {
            if projection[x] != usize::MAX {
                continue;
            }
            let c = representatives.len();
            for &k in n.elements() {
                projection[self.mul(x, k)] = c;
            }
            representatives.push(x);
        }
        let m = representatives.len();
        let mut table = vec![0u32; m * m];
        for (i, &x) in representatives.iter().enumerate() {
            for (j, &y) in representatives.iter().enumerate() {
                table[i * m + j] = projection[self.mul(x, y)] as u32;
            }
        }
        let group = FiniteGroup::from_trusted(m, table, None);
        Ok(Quotient { group, projection, representatives })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral, make_abelian, quaternion};

    fn sorted_sizes(g: &FiniteGroup) -> Vec<usize> {
        let mut s = g.conjugacy_classes().sizes.clone();
        s.sort_unstable();
        s
    }

    // Brute-force oracle: two elements are conjugate iff some g maps one to the other.
    fn brute_class_sizes(g: &FiniteGroup) -> Vec<usize> {
        let n = g.order();
        let mut sizes: Vec<usize> = (0..n)
            .filter(|&x| (0..x).all(|y| !(0..n).any(|h| g.conjugate(y, h) == x)))
            .map(|x| (0..n).filter(|&y| (0..n).any(|h| g.conjugate(x, h) == y)).count())
            .collect();
        sizes.sort_unstable();
        sizes
    }

    #[test]
    fn class_sizes() {
        let s3 = dihedral(3);
        assert_eq!(sorted_sizes(&s3), vec![1, 2, 3]);
        assert_eq!(sorted_sizes(&s3), brute_class_sizes(&s3));
        let d8 = dihedral(4);
        assert_eq!(sorted_sizes(&d8), vec![1, 1, 2, 2, 2]);
        assert_eq!(sorted_sizes(&d8), brute_class_sizes(&d8));
        let c6 = cyclic(6);
        assert!(c6.conjugacy_classes().sizes.iter().all(|&s| s == 1));
    }

    #[test]
    fn centres_and_derived() {
        assert_eq!(dihedral(4).center().order(), 2);
        assert_eq!(dihedral(3).center().order(), 1);
        assert_eq!(cyclic(5).center().order(), 5);
        assert_eq!(dihedral(3).derived_subgroup().order(), 3);
        assert_eq!(quaternion(3).derived_subgroup().order(), 2);
        assert!(make_abelian(&[2, 2]).derived_subgroup().is_trivial());
    }

    #[test]
    fn central_series() {
        let orders = |v: Vec<Subgroup>| v.iter().map(|s| s.order()).collect::<Vec<_>>();
        assert_eq!(orders(dihedral(4).lower_central_series()), vec![8, 2, 1]);
        assert_eq!(orders(dihedral(3).lower_central_series()), vec![6, 3]);
        assert_eq!(orders(make_abelian(&[2, 3]).lower_central_series()), vec![6, 1]);
        assert_eq!(orders(dihedral(4).upper_central_series()), vec![1, 2, 8]);
        assert_eq!(orders(dihedral(3).upper_central_series()), vec![1]);
        assert_eq!(orders(cyclic(4).upper_central_series()), vec![1, 4]);
    }

    #[test]
    fn normalizers() {
        let s3 = dihedral(3);
        let b = Subgroup::generated(&s3, &[3]);
        assert_eq!(s3.normalizer(&b), b);
        let a = Subgroup::generated(&s3, &[1]);
        assert!(s3.normalizer(&a).is_whole());
        let d8 = dihedral(4);
        assert!(d8.normalizer(&d8.center()).is_whole());
    }

    #[test]
    fn quotients() {
        let s3 = dihedral(3);
        let a3 = Subgroup::generated(&s3, &[1]);
        let q = s3.quotient(&a3).unwrap();
        assert_eq!(q.group.order(), 2);
        let q = s3.quotient(&Subgroup::whole(&s3)).unwrap();
        assert_eq!(q.group.order(), 1);
        let d8 = dihedral(4);
        let q = d8.quotient(&d8.center()).unwrap();
        assert_eq!((q.group.order(), q.group.exponent()), (4, 2));
        q.group.verify_axioms().unwrap();
        let b = Subgroup::generated(&s3, &[3]);
        assert_eq!(s3.quotient(&b).unwrap_err(), GroupError::NotNormal);
    }

    #[test]
    fn projection_is_homomorphism() {
        let g = dihedral(6);
        let q = g.quotient(&g.center()).unwrap();
        for x in g.elements() {
            for y in g.elements() {
                assert_eq!(q.projection[g.mul(x, y)], q.group.mul(q.projection[x], q.projection[y]));
            }
        }
    }
}
