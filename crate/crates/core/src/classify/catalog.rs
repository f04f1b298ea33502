//! The published list of cut metacyclic groups and the table of strong Shoda
//! pairs used to exclude the remaining index-2 cases.

use serde::{Deserialize, Serialize};

use crate::cyclo::unit_group_info;
use crate::group::MetacyclicPresentation;

/// One presentation from the list of cut metacyclic groups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub presentation: MetacyclicPresentation,
    /// The family line it was expanded from, written as relations.
    #[serde(default)]
    pub source_line: String,
}

/// Least positive generator of `U(Z/nZ)`.
fn lambda(n: u64) -> u64 {
    unit_group_info(n).least_generator.expect("U(Z/nZ) is cyclic for catalog moduli")
}

fn phi(n: u64) -> u64 {
    crate::numbers::euler_phi(n)
}

/// The list with every parameter family expanded, in the order printed.
/// Distinct entries may present isomorphic groups.
pub fn cut_metacyclic_catalog() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    let mut push = |source_line: &'static str, n: u64, t: u64, r: u64, ell: u64| {
        let presentation = MetacyclicPresentation::new(n, t, r % n, ell)
            .unwrap_or_else(|e| panic!("catalog line {source_line:?} gives ({n},{t},{r},{ell}): {e}"));
        out.push(CatalogEntry { presentation, source_line: source_line.to_string() });
    };

    let line = "a^n=1, b^t=1, b^-1ab=a^(n-1); t=2,4,6; n=3,4,6";
    for t in [2, 4, 6] {
        for n in [3, 4, 6] {
            push(line, n, t, n - 1, n);
        }
    }
    let line = "a^4=1, b^t=a^2, b^-1ab=a^3; t=2,4,6";
    for t in [2, 4, 6] {
        push(line, 4, t, 3, 2);
    }
    push("a^6=1, b^2=a^3, b^-1ab=a^5", 6, 2, 5, 3);
    let line = "a^n=1, b^phi(n)=1, b^-1ab=a^lambda_n; n=5,7,9,10,14,18";
    for n in [5, 7, 9, 10, 14, 18] {
        push(line, n, phi(n), lambda(n), n);
    }
    let line = "a^n=1, b^(phi(n)/j)=1, b^-1ab=a^(lambda_n^2); j=1,2; n=7,9,14,18";
    for j in [1, 2] {
        for n in [7, 9, 14, 18] {
            push(line, n, phi(n) / j, lambda(n) * lambda(n), n);
        }
    }
    let line = "a^8=1, b^t=1, b^-1ab=a^r; t=2,4; r=3,5";
    for t in [2, 4] {
        for r in [3, 5] {
            push(line, 8, t, r, 8);
        }
    }
    let line = "a^12=1, b^t=1, b^-1ab=a^5; t=2,4";
    for t in [2, 4] {
        push(line, 12, t, 5, 12);
    }
    let line = "a^12=1, b^t=a^l, b^-1ab=a^7; t=2,6; l=t,12";
    for t in [2, 6] {
        for ell in [t, 12] {
            push(line, 12, t, 7, ell);
        }
    }
    push("a^15=1, b^4=1, b^-1ab=a^2", 15, 4, 2, 15);
    let line = "a^16=1, b^4=1, b^-1ab=a^r; r=3,5";
    for r in [3, 5] {
        push(line, 16, 4, r, 16);
    }
    let line = "a^20=1, b^4=1, b^-1ab=a^r; r=3,13";
    for r in [3, 13] {
        push(line, 20, 4, r, 20);
    }
    push("a^20=1, b^4=a^10, b^-1ab=a^3", 20, 4, 3, 10);
    let line = "a^21=1, b^6=1, b^-1ab=a^r; r=2,10";
    for r in [2, 10] {
        push(line, 21, 6, r, 21);
    }
    let line = "a^28=1, b^6=a^l, b^-1ab=a^11; l=14,28";
    for ell in [14, 28] {
        push(line, 28, 6, 11, ell);
    }
    push("a^30=1, b^4=1, b^-1ab=a^17", 30, 4, 17, 30);
    let line = "a^36=1, b^6=a^l, b^-1ab=a^7; l=6,36";
    for ell in [6, 36] {
        push(line, 36, 6, 7, ell);
    }
    let line = "a^42=1, b^6=1, b^-1ab=a^r; r=11,19";
    for r in [11, 19] {
        push(line, 42, 6, r, 42);
    }
    out
}

/// The seven metacyclic groups for which `V(Z[G])` has central height 0.
pub fn height_zero_list() -> Vec<MetacyclicPresentation> {
    [(3, 2, 2, 3), (5, 4, 2, 5), (7, 6, 3, 7), (9, 6, 2, 9), (7, 3, 2, 7), (15, 4, 2, 15), (21, 6, 2, 21)]
        .into_iter()
        .map(|(n, t, r, l)| MetacyclicPresentation::new(n, t, r, l).expect("valid presentation"))
        .collect()
}

/// `⟨a, b | a^n = 1, b^2 = a^{n/2}, b^-1 a b = a^-1⟩`, `4 | n`.
pub fn generalized_quaternion_presentation(n: u64) -> MetacyclicPresentation {
    assert!(n % 4 == 0, "n must be divisible by 4");
    MetacyclicPresentation::new(n, 2, n - 1, n / 2).expect("valid presentation")
}

/// A word `a^i b^j`.
pub type Word = (i64, i64);

/// A non-cut metacyclic group together with the strong Shoda pair whose
/// component centre rules it out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExclusionRow {
    pub n: u64,
    pub t: u64,
    pub r: u64,
    pub ell: u64,
    pub h: Vec<Word>,
    pub k: Vec<Word>,
}

impl ExclusionRow {
    pub fn presentation(&self) -> Result<MetacyclicPresentation, crate::group::GroupError> {
        MetacyclicPresentation::new(self.n, self.t, self.r, self.ell)
    }
}

const A: Word = (1, 0);
const B: Word = (0, 1);
const B2: Word = (0, 2);

/// Rows with multi-valued `r` or `ℓ` are split, one row per value.
pub fn exclusion_table() -> Vec<ExclusionRow> {
    type Row = (u64, u64, &'static [u64], &'static [u64], &'static [Word], &'static [Word]);
    let rows: &[Row] = &[
        (8, 2, &[7], &[4, 8], &[A], &[]),
        (8, 4, &[3], &[4], &[A, B2], &[(2, 2)]),
        (8, 4, &[5], &[2], &[A, B2], &[(3, 2)]),
        (8, 4, &[7], &[8], &[A, B2], &[B2]),
        (8, 6, &[3, 7], &[8], &[A, B2], &[B2]),
        (8, 6, &[5], &[8], &[A, B], &[(4, 0), (0, 3)]),
        (8, 6, &[5], &[4], &[A, B2], &[(4, 2)]),
        (12, 2, &[5], &[3], &[A, B], &[(4, 0)]),
        (12, 2, &[11], &[6, 12], &[A], &[]),
        (12, 4, &[5], &[3], &[A, B], &[(2, 0)]),
        (12, 4, &[5], &[6], &[A, B], &[(1, 2)]),
        (12, 4, &[7], &[2, 12], &[A, B], &[(3, 0)]),
        (12, 4, &[11], &[12], &[A, B2], &[B2]),
        (12, 4, &[11], &[6], &[A, B2], &[(9, 2)]),
        (12, 6, &[5], &[12], &[A, B], &[(4, 0), (0, 3)]),
        (12, 6, &[5], &[3], &[A, B], &[(2, 0)]),
        (12, 6, &[7], &[2, 4], &[A, B], &[(3, 0)]),
        (12, 6, &[11], &[12], &[A, B2], &[(4, 2)]),
        (12, 6, &[11], &[6], &[A, B2], &[(10, 2)]),
        (15, 4, &[7], &[15], &[A, B], &[(3, 0)]),
        (20, 4, &[13], &[5], &[A, B], &[(2, 0)]),
        (20, 4, &[13], &[10], &[A, B], &[(1, 2), (4, 0)]),
        (30, 4, &[7], &[5, 30], &[A, B], &[(3, 0)]),
        (30, 4, &[17], &[15], &[A, B], &[(2, 0)]),
        (21, 6, &[5], &[21], &[A], &[]),
        (21, 6, &[10], &[7], &[A, B], &[(15, 0)]),
        (28, 6, &[3], &[14, 28], &[A], &[]),
        (28, 6, &[5], &[28], &[A, B], &[(4, 0), (0, 3)]),
        (28, 6, &[5], &[7], &[A, B], &[(2, 0)]),
        (36, 6, &[5], &[36], &[A, B], &[(4, 0), (0, 3)]),
        (36, 6, &[5], &[9], &[A, B], &[(2, 0)]),
        (36, 6, &[11], &[36], &[A, B2], &[(4, 2)]),
        (36, 6, &[11], &[18], &[A, B2], &[(10, 2)]),
        (42, 6, &[5], &[42], &[A], &[]),
        (42, 6, &[5, 11], &[21], &[A, B], &[(2, 0)]),
        (42, 6, &[19], &[7, 21], &[A, B], &[(2, 0)]),
        (42, 6, &[19], &[14], &[A, B], &[(3, 0)]),
    ];
    let mut out = Vec::new();
    for &(n, t, rs, ells, h, k) in rows {
        for &r in rs {
            for &ell in ells {
                out.push(ExclusionRow { n, t, r, ell, h: h.to_vec(), k: k.to_vec() });
            }
        }
    }
    out
}
