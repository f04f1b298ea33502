//! Finite groups stored as validated Cayley tables.
//!
//! Elements are the indices `0..order`; index 0 is always the identity.
//! Groups are immutable and cheap to clone (the table lives behind an
//! `Arc`), so subgroups and algebra elements carry their parent by value.

mod construct;
mod iso;
mod lattice;
mod structure;
mod subgroup;
mod table_format;

use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

pub use construct::{
    cyclic, dicyclic, dihedral, direct_product, direct_product_capped, heisenberg, make_abelian,
    make_metacyclic, quaternion, semidihedral, MetacyclicPresentation,
};
pub use iso::{is_isomorphic, is_isomorphic_capped, Fingerprint};
pub use lattice::{all_subgroups, all_subgroups_capped, LatticeEntry};
pub use structure::{ConjugacyTable, Quotient};
pub use subgroup::Subgroup;
pub use table_format::{parse_table_text, read_table_file, write_table_text};

/// Default order cap for subgroup lattices and isomorphism testing.
pub const DEFAULT_LATTICE_CAP: usize = 512;
/// Default order cap for direct products.
pub const DEFAULT_PRODUCT_CAP: usize = 4096;
/// Tables up to this order get the full O(n^3) associativity check.
pub const ASSOCIATIVITY_CHECK_CAP: usize = 512;

/// An element of a [`FiniteGroup`], identified by its table index.
pub type Elem = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("table is not closed: {0}")]
    NotClosed(String),
    #[error("element 0 is not an identity (fails against element {0})")]
    NoIdentity(Elem),
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(Elem, Elem, Elem),
    #[error("element {0} has no two-sided inverse")]
    NotInvertible(Elem),
    #[error("invalid metacyclic presentation: {0}")]
    InvalidPresentation(String),
    #[error("group order {order} exceeds the configured cap {cap}")]
    SizeLimit { order: usize, cap: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("malformed table text: {0}")]
    Parse(String),
    #[error("cannot read table file {path}: {reason}")]
    Io { path: String, reason: String },
}

pub(crate) struct GroupData {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    labels: Option<Vec<String>>,
    element_orders: OnceLock<Vec<usize>>,
    classes: OnceLock<ConjugacyTable>,
}

/// A finite group given by its multiplication table.
#[derive(Clone)]
pub struct FiniteGroup(Arc<GroupData>);

impl FiniteGroup {
    /// Validates a user-supplied Cayley table.
    ///
    /// Checks run in this order: shape and range, identity at index 0,
    /// two-sided inverses, Latin-square rows and columns, and associativity
    /// (all triples, for orders up to [`ASSOCIATIVITY_CHECK_CAP`]).
    pub fn from_table(order: usize, rows: &[Vec<usize>]) -> Result<Self, GroupError> {
        if order == 0 {
            return Err(GroupError::NotClosed("order must be at least 1".into()));
        }
        if rows.len() != order {
            return Err(GroupError::NotClosed(format!(
                "expected {order} rows, found {}",
                rows.len()
            )));
        }
        let mut table = Vec::with_capacity(order * order);
        for (g, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::NotClosed(format!(
                    "row {g} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for (h, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(GroupError::NotClosed(format!(
                        "entry {g}*{h} = {v} is outside 0..{order}"
                    )));
                }
                table.push(v as u32);
            }
        }
        let at = |g: usize, h: usize| table[g * order + h] as usize;
        for g in 0..order {
            if at(0, g) != g || at(g, 0) != g {
                return Err(GroupError::NoIdentity(g));
            }
        }
        let mut inverse = vec![0u32; order];
        for g in 0..order {
            match (0..order).find(|&h| at(g, h) == 0) {
                Some(h) if at(h, g) == 0 => inverse[g] = h as u32,
                _ => return Err(GroupError::NotInvertible(g)),
            }
        }
        let mut seen = vec![usize::MAX; order];
        for g in 0..order {
            for h in 0..order {
                let v = at(g, h);
                if seen[v] == g {
                    return Err(GroupError::NotInvertible(g));
                }
                seen[v] = g;
            }
        }
        seen.fill(usize::MAX);
        for h in 0..order {
            for g in 0..order {
                let v = at(g, h);
                if seen[v] == h {
                    return Err(GroupError::NotInvertible(h));
                }
                seen[v] = h;
            }
        }
        if order <= ASSOCIATIVITY_CHECK_CAP {
            for g in 0..order {
                for h in 0..order {
                    let gh = at(g, h);
                    for k in 0..order {
                        if at(gh, k) != at(g, at(h, k)) {
                            return Err(GroupError::NotAssociative(g, h, k));
                        }
                    }
                }
            }
        }
        Ok(Self::from_parts(order, table, inverse, None))
    }

    /// Builds a group from a table known to satisfy the group axioms.
    ///
    /// Used by the internal constructors (presentations, products, quotients)
    /// whose tables are correct by construction.
    pub(crate) fn from_trusted(order: usize, table: Vec<u32>, labels: Option<Vec<String>>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        let mut inverse = vec![0u32; order];
        for g in 0..order {
            let row = &table[g * order..(g + 1) * order];
            let h = row.iter().position(|&v| v == 0).expect("row without identity");
            inverse[g] = h as u32;
        }
        Self::from_parts(order, table, inverse, labels)
    }

    fn from_parts(order: usize, table: Vec<u32>, inverse: Vec<u32>, labels: Option<Vec<String>>) -> Self {
        FiniteGroup(Arc::new(GroupData {
            order,
            table,
            inverse,
            labels,
            element_orders: OnceLock::new(),
            classes: OnceLock::new(),
        }))
    }

    /// Returns a copy of this group carrying display labels.
    pub fn with_labels(&self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order());
        Self::from_parts(self.order(), self.0.table.clone(), self.0.inverse.clone(), Some(labels))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.0.order
    }

    #[inline]
    pub fn identity(&self) -> Elem {
        0
    }

    #[inline]
    pub fn mul(&self, g: Elem, h: Elem) -> Elem {
        self.0.table[g * self.0.order + h] as usize
    }

    #[inline]
    pub fn inv(&self, g: Elem) -> Elem {
        self.0.inverse[g] as usize
    }

    /// `g^k` for any integer exponent.
    pub fn pow(&self, g: Elem, k: i64) -> Elem {
        let ord = self.element_order(g) as i64;
        let mut e = k.rem_euclid(ord);
        let mut base = g;
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `g x g^{-1}`.
    #[inline]
    pub fn conjugate(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `[x, y] = x^{-1} y^{-1} x y`.
    #[inline]
    pub fn commutator(&self, x: Elem, y: Elem) -> Elem {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order()
    }

    pub fn element_order(&self, g: Elem) -> usize {
        self.element_orders()[g]
    }

    pub fn element_orders(&self) -> &[usize] {
        self.0.element_orders.get_or_init(|| {
            (0..self.order())
                .map(|g| {
                    let mut x = g;
                    let mut k = 1;
                    while x != 0 {
                        x = self.mul(x, g);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    /// Row-major multiplication table.
    pub fn table(&self) -> &[u32] {
        &self.0.table
    }

    pub fn row(&self, g: Elem) -> Vec<usize> {
        let n = self.order();
        self.0.table[g * n..(g + 1) * n].iter().map(|&v| v as usize).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.0.labels.as_deref()
    }

    pub fn label(&self, g: Elem) -> String {
        match &self.0.labels {
            Some(l) => l[g].clone(),
            None => g.to_string(),
        }
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|g| (g + 1..n).all(|h| self.mul(g, h) == self.mul(h, g)))
    }

    /// Lowest common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.element_orders()
            .iter()
            .fold(1, |acc, &o| num_integer::lcm(acc, o))
    }

    /// True when the group has identical tables to `other`.
    pub fn same_table(&self, other: &FiniteGroup) -> bool {
        self.order() == other.order() && self.0.table == other.0.table
    }

    /// Re-runs the full axiom check on the stored table, regardless of size.
    pub fn verify_axioms(&self) -> Result<(), GroupError> {
        let n = self.order();
        let rows: Vec<Vec<usize>> = (0..n).map(|g| self.row(g)).collect();
        FiniteGroup::from_table(n, &rows).map(|_| ())?;
        if n > ASSOCIATIVITY_CHECK_CAP {
            for g in 0..n {
                for h in 0..n {
                    let gh = self.mul(g, h);
                    for k in 0..n {
                        if self.mul(gh, k) != self.mul(g, self.mul(h, k)) {
                            return Err(GroupError::NotAssociative(g, h, k));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub(crate) fn cached_classes(&self) -> &OnceLock<ConjugacyTable> {
        &self.0.classes
    }

    pub(crate) fn same_group(&self, other: &FiniteGroup) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order={})", self.order())
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.same_group(other) || self.same_table(other)
    }
}

impl Eq for FiniteGroup {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_two_from_table() {
        let g = FiniteGroup::from_table(2, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.inv(1), 1);
        assert!(g.is_abelian());
    }

    #[test]
    fn rejects_missing_identity() {
        let err = FiniteGroup::from_table(2, &[vec![1, 0], vec![0, 1]]).unwrap_err();
        assert_eq!(err, GroupError::NoIdentity(0));
    }

    #[test]
    fn rejects_out_of_range_entry() {
        let err = FiniteGroup::from_table(2, &[vec![0, 1], vec![1, 2]]).unwrap_err();
        assert!(matches!(err, GroupError::NotClosed(_)));
    }

    #[test]
    fn rejects_wrong_shape() {
        let err = FiniteGroup::from_table(2, &[vec![0, 1]]).unwrap_err();
        assert!(matches!(err, GroupError::NotClosed(_)));
    }

    #[test]
    fn rejects_non_invertible() {
        // 1*1 = 1 and 1 never reaches the identity.
        let err = FiniteGroup::from_table(2, &[vec![0, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(err, GroupError::NotInvertible(1));
    }

    #[test]
    fn rejects_non_associative_with_witness() {
        // A Latin square loop of order 5 with identity 0 that is not a group.
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_table(5, &rows).unwrap_err();
        match err {
            GroupError::NotAssociative(g, h, k) => {
                let at = |x: usize, y: usize| rows[x][y];
                assert_ne!(at(at(g, h), k), at(g, at(h, k)));
            }
            other => panic!("expected NotAssociative, got {other:?}"),
        }
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let g = cyclic(6);
        assert_eq!(g.pow(1, -1), g.inv(1));
        assert_eq!(g.pow(1, 6), 0);
        assert_eq!(g.pow(1, 8), g.pow(1, 2));
    }

    #[test]
    fn exponent_examples() {
        assert_eq!(make_abelian(&[]).exponent(), 1);
        assert_eq!(make_abelian(&[2, 4]).exponent(), 4);
        let s3 = make_metacyclic(&MetacyclicPresentation::new(3, 2, 2, 3).unwrap());
        assert_eq!(s3.exponent(), 6);
    }
}
