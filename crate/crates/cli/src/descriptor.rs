//! Group descriptors as accepted on the command line and in JSON.

use std::path::PathBuf;

use cutgroups::group::{
    direct_product, make_abelian, make_metacyclic, read_table_file, FiniteGroup, GroupError, MetacyclicPresentation,
};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupDescriptor {
    Metacyclic { n: u64, t: u64, r: u64, l: u64 },
    Abelian { factors: Vec<usize> },
    Table { path: PathBuf },
    Product { left: Box<GroupDescriptor>, right: Box<GroupDescriptor> },
}

impl GroupDescriptor {
    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        match self {
            GroupDescriptor::Metacyclic { n, t, r, l } => {
                Ok(make_metacyclic(&MetacyclicPresentation::new(*n, *t, *r, *l)?))
            }
            GroupDescriptor::Abelian { factors } => {
                if factors.contains(&0) {
                    return Err(GroupError::Parse("invariant factors must be positive".into()));
                }
                let order = factors.iter().try_fold(1usize, |acc, &f| acc.checked_mul(f));
                match order {
                    Some(o) if o <= cutgroups::group::DEFAULT_PRODUCT_CAP => Ok(make_abelian(factors)),
                    _ => Err(GroupError::SizeLimit {
                        order: order.unwrap_or(usize::MAX),
                        cap: cutgroups::group::DEFAULT_PRODUCT_CAP,
                    }),
                }
            }
            GroupDescriptor::Table { path } => read_table_file(path),
            GroupDescriptor::Product { left, right } => direct_product(&left.build()?, &right.build()?),
        }
    }

    /// Parses `metacyclic:n,t,r,l`, `abelian:d1,d2,...` or `table:PATH`.
    pub fn parse_short(s: &str) -> Result<Self, GroupError> {
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| GroupError::Parse(format!("expected KIND:ARGS, got {s:?}")))?;
        match kind {
            "metacyclic" => metacyclic_from_list(rest),
            "abelian" => Ok(GroupDescriptor::Abelian { factors: parse_list(rest)? }),
            "table" => Ok(GroupDescriptor::Table { path: rest.into() }),
            other => Err(GroupError::Parse(format!("unknown group kind {other:?}"))),
        }
    }
}

pub fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, GroupError> {
    s.split(',')
        .map(|tok| tok.trim().parse().map_err(|_| GroupError::Parse(format!("bad number {tok:?}"))))
        .collect()
}

pub fn metacyclic_from_list(s: &str) -> Result<GroupDescriptor, GroupError> {
    match parse_list::<u64>(s)?[..] {
        [n, t, r, l] => Ok(GroupDescriptor::Metacyclic { n, t, r, l }),
        _ => Err(GroupError::Parse(format!("expected n,t,r,l, got {s:?}"))),
    }
}
