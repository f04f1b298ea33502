use rayon::prelude::*;
use serde::Serialize;

use super::catalog::{exclusion_table, CatalogEntry, ExclusionRow};
use super::ClassifyError;
use crate::cut::{is_cut_ritter_sehgal, CutWitness};
use crate::cyclo::{component_center, is_cut_wedderburn, CenterClass};
use crate::group::{
    is_isomorphic_capped, make_metacyclic, Fingerprint, FiniteGroup, MetacyclicPresentation, Subgroup,
    DEFAULT_PRODUCT_CAP,
};
use crate::numbers::{euler_phi, gcd, pow_mod};
use crate::shoda::{check_strong_shoda_pair, SspFailure, StrongShodaPair};

/// All valid `(n, t, r, ℓ)` with `n ≤ max_n` and `t ∈ t_set`, in
/// lexicographic order.
pub fn enumerate_metacyclic(max_n: u64, t_set: &[u64]) -> Vec<MetacyclicPresentation> {
    let mut ts = t_set.to_vec();
    ts.sort_unstable();
    ts.dedup();
    let mut out = Vec::new();
    for n in 1..=max_n {
        for &t in &ts {
            for r in 1..=n {
                if gcd(r, n) != 1 || pow_mod(r, t, n) != 1 % n {
                    continue;
                }
                for ell in (1..=n).filter(|l| n % l == 0) {
                    if ell * (r - 1) % n == 0 {
                        out.push(MetacyclicPresentation { n, t, r, ell });
                    }
                }
            }
        }
    }
    out
}

/// `[U(Z/nZ) : ⟨r⟩]`.
pub fn unit_index(p: &MetacyclicPresentation) -> u64 {
    euler_phi(p.n) / p.d()
}

/// Cut presentations grouped up to isomorphism.
#[derive(Clone, Debug, Serialize)]
pub struct IsoClass {
    pub representative: MetacyclicPresentation,
    pub order: u64,
    pub members: Vec<MetacyclicPresentation>,
    /// Indices into the catalog of the entries presenting this group.
    pub catalog_entries: Vec<usize>,
}

/// A mismatch between the computed classes and the catalog, with both cut
/// verdicts so transcription errors can be told from arithmetic ones.
#[derive(Clone, Debug, Serialize)]
pub struct Discrepancy {
    pub presentation: MetacyclicPresentation,
    pub conjugacy_is_cut: bool,
    pub conjugacy_witness: Option<CutWitness>,
    /// `None` when the component method does not apply.
    pub wedderburn_is_cut: Option<bool>,
    /// A catalog entry of the same order, when one exists.
    pub nearest_catalog_entry: Option<MetacyclicPresentation>,
}

impl Discrepancy {
    /// Both cut tests agree, so the mismatch is genuine.
    pub fn verdicts_agree(&self) -> bool {
        self.wedderburn_is_cut == Some(self.conjugacy_is_cut)
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CatalogDiff {
    /// Catalog entries in range that are not cut or match no computed class.
    pub missing: Vec<Discrepancy>,
    /// Computed classes containing no catalog entry.
    pub extra: Vec<Discrepancy>,
    /// Catalog entries outside the swept `(n, t)` range.
    pub out_of_range: Vec<MetacyclicPresentation>,
}

impl CatalogDiff {
    pub fn is_empty(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub max_n: u64,
    pub t_set: Vec<u64>,
    pub presentations_scanned: usize,
    pub non_abelian_scanned: usize,
    /// Every cut non-abelian presentation, in enumeration order.
    pub cut_presentations: Vec<MetacyclicPresentation>,
    pub classes: Vec<IsoClass>,
    pub catalog_diff: CatalogDiff,
}

impl Classification {
    /// Classes and catalog isomorphism types correspond one to one.
    pub fn is_bijective(&self) -> bool {
        self.catalog_diff.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    pub max_n: u64,
    pub t_set: Vec<u64>,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Largest group order considered.
    pub cap: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { max_n: 42, t_set: vec![2, 3, 4, 6], jobs: None, cap: DEFAULT_PRODUCT_CAP }
    }
}

fn cut_filter(p: &MetacyclicPresentation) -> bool {
    is_cut_ritter_sehgal(&make_metacyclic(p)).is_cut
}

/// Filters the non-abelian presentations by the conjugacy criterion,
/// groups the survivors up to isomorphism and diffs them against `catalog`.
/// The result does not depend on the number of worker threads.
pub fn classify_cut_metacyclic(opts: &ClassifyOptions, catalog: &[CatalogEntry]) -> Result<Classification, ClassifyError> {
    match opts.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| ClassifyError::ThreadPool(e.to_string()))?
            .install(|| classify_inner(opts, catalog)),
        None => classify_inner(opts, catalog),
    }
}

fn classify_inner(opts: &ClassifyOptions, catalog: &[CatalogEntry]) -> Result<Classification, ClassifyError> {
    let all = enumerate_metacyclic(opts.max_n, &opts.t_set);
    let non_abelian: Vec<MetacyclicPresentation> = all.iter().copied().filter(|p| !p.is_abelian()).collect();
    if let Some(p) = non_abelian.iter().find(|p| p.order() as usize > opts.cap) {
        return Err(ClassifyError::SizeLimit { order: p.order() as usize, cap: opts.cap });
    }
    let flags: Vec<bool> = non_abelian.par_iter().map(cut_filter).collect();
    let cut: Vec<MetacyclicPresentation> =
        non_abelian.iter().zip(&flags).filter(|(_, &c)| c).map(|(p, _)| *p).collect();

    let fingerprints: Vec<Fingerprint> = cut.par_iter().map(|p| Fingerprint::of(&make_metacyclic(p))).collect();
    let mut classes: Vec<(IsoClass, FiniteGroup, Fingerprint)> = Vec::new();
    for (p, fp) in cut.iter().zip(fingerprints) {
        let g = make_metacyclic(p);
        let mut home = None;
        for (i, (_, rep, rfp)) in classes.iter().enumerate() {
            if *rfp == fp && is_isomorphic_capped(&g, rep, opts.cap)? {
                home = Some(i);
                break;
            }
        }
        match home {
            Some(i) => classes[i].0.members.push(*p),
            None => classes.push((
                IsoClass { representative: *p, order: p.order(), members: vec![*p], catalog_entries: Vec::new() },
                g,
                fp,
            )),
        }
    }

    let mut ts = opts.t_set.clone();
    ts.sort_unstable();
    ts.dedup();
    let mut diff = CatalogDiff::default();
    for (idx, entry) in catalog.iter().enumerate() {
        let p = entry.presentation;
        if p.n > opts.max_n || !ts.contains(&p.t) {
            diff.out_of_range.push(p);
            continue;
        }
        let g = make_metacyclic(&p);
        let fp = Fingerprint::of(&g);
        let mut home = None;
        for (i, (_, rep, rfp)) in classes.iter().enumerate() {
            if *rfp == fp && is_isomorphic_capped(&g, rep, opts.cap)? {
                home = Some(i);
                break;
            }
        }
        match home {
            Some(i) => classes[i].0.catalog_entries.push(idx),
            None => diff.missing.push(discrepancy(&p, catalog)),
        }
    }
    let mut classes: Vec<IsoClass> = classes.into_iter().map(|(c, _, _)| c).collect();
    classes.sort_by_key(|c| (c.order, c.representative));
    diff.extra = classes
        .iter()
        .filter(|c| c.catalog_entries.is_empty())
        .map(|c| discrepancy(&c.representative, catalog))
        .collect();

    Ok(Classification {
        max_n: opts.max_n,
        t_set: ts,
        presentations_scanned: all.len(),
        non_abelian_scanned: non_abelian.len(),
        cut_presentations: cut,
        classes,
        catalog_diff: diff,
    })
}

fn discrepancy(p: &MetacyclicPresentation, catalog: &[CatalogEntry]) -> Discrepancy {
    let g = make_metacyclic(p);
    let conj = is_cut_ritter_sehgal(&g);
    let wedderburn_is_cut = is_cut_wedderburn(&g).ok().map(|v| v.is_cut);
    let nearest_catalog_entry = catalog
        .iter()
        .map(|e| e.presentation)
        .filter(|c| c != p)
        .min_by_key(|c| (c.order().abs_diff(p.order()), c.n.abs_diff(p.n), *c));
    Discrepancy {
        presentation: *p,
        conjugacy_is_cut: conj.is_cut,
        conjugacy_witness: conj.witness,
        wedderburn_is_cut,
        nearest_catalog_entry,
    }
}

/// Outcome of checking one row of the exclusion table.
#[derive(Clone, Debug, Serialize)]
pub struct ExclusionCheck {
    pub row: ExclusionRow,
    /// Why the printed pair is not a strong Shoda pair, if it is not.
    pub ssp_failure: Option<String>,
    pub center: Option<CenterClass>,
    pub passed: bool,
}

/// Each printed pair must be a strong Shoda pair whose component centre is
/// neither `Q` nor imaginary quadratic.
pub fn verify_exclusion_table() -> Vec<ExclusionCheck> {
    exclusion_table().into_iter().map(check_exclusion_row).collect()
}

pub fn check_exclusion_row(row: ExclusionRow) -> ExclusionCheck {
    let fail = |row: ExclusionRow, why: String| ExclusionCheck { row, ssp_failure: Some(why), center: None, passed: false };
    let p = match row.presentation() {
        Ok(p) => p,
        Err(e) => return fail(row, e.to_string()),
    };
    let g = make_metacyclic(&p);
    let words = |ws: &[(i64, i64)]| ws.iter().map(|&(i, j)| p.word(i, j)).collect::<Vec<_>>();
    let h = Subgroup::generated(&g, &words(&row.h));
    let k = Subgroup::generated(&g, &words(&row.k));
    if let Err(f) = check_strong_shoda_pair(&h, &k) {
        return fail(row, describe_failure(f).into());
    }
    let pair = StrongShodaPair::new(&h, &k).expect("checked above");
    match component_center(&pair) {
        Ok(c) => ExclusionCheck { row, ssp_failure: None, center: Some(c), passed: !c.is_cut_admissible() },
        Err(e) => fail(row, e.to_string()),
    }
}

fn describe_failure(f: SspFailure) -> &'static str {
    match f {
        SspFailure::NormalityAxiom => "normality condition fails",
        SspFailure::MaximalAbelianAxiom => "H/K is not cyclic and maximal abelian in N/K",
        SspFailure::OrthogonalityAxiom => "conjugates of epsilon are not orthogonal",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::CenterKind;

    // Oracle: an independent double loop over (r, ℓ) for each n.
    fn brute_count(max_n: u64, t: u64) -> usize {
        let mut count = 0;
        for n in 1..=max_n {
            for r in 1..=n {
                let mut x = 1 % n;
                for _ in 0..t {
                    x = x * r % n;
                }
                if x != 1 % n {
                    continue;
                }
                for ell in 1..=n {
                    if n % ell == 0 && (ell * r) % n == ell % n {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    #[test]
    fn enumeration() {
        let ps = enumerate_metacyclic(8, &[2]);
        assert_eq!(ps.len(), brute_count(8, 2));
        assert!(ps.contains(&MetacyclicPresentation::new(3, 2, 2, 3).unwrap()));
        assert!(!ps.iter().any(|p| (p.n, p.t, p.r, p.ell) == (4, 2, 3, 3)));
        assert!(ps.iter().all(|p| p.validate().is_ok()));
        assert!(ps.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(enumerate_metacyclic(20, &[3, 6]).len(), brute_count(20, 3) + brute_count(20, 6));
    }

    #[test]
    fn small_classification() {
        let opts = ClassifyOptions { max_n: 8, t_set: vec![2], ..Default::default() };
        let c = classify_cut_metacyclic(&opts, &super::super::cut_metacyclic_catalog()).unwrap();
        let orders: Vec<u64> = c.classes.iter().map(|k| k.order).collect();
        // S3, D8, Q8, D12, Dic3 and the two order-16 groups with r = 3, 5.
        assert_eq!(orders, vec![6, 8, 8, 12, 12, 16, 16]);
        assert!(c.is_bijective(), "{:?}", c.catalog_diff);
        let one = ClassifyOptions { jobs: Some(1), ..opts.clone() };
        let again = classify_cut_metacyclic(&one, &super::super::cut_metacyclic_catalog()).unwrap();
        assert_eq!(serde_json::to_string(&c).unwrap(), serde_json::to_string(&again).unwrap());
    }

    #[test]
    fn exclusion_examples() {
        let rows = exclusion_table();
        let find = |n, t, r, ell| rows.iter().find(|x| (x.n, x.t, x.r, x.ell) == (n, t, r, ell)).unwrap().clone();
        let c = check_exclusion_row(find(8, 2, 7, 4));
        assert!(c.passed);
        let center = c.center.unwrap();
        assert_eq!((center.kind, center.d), (CenterKind::RealQuadratic, Some(2)));
        let c = check_exclusion_row(find(21, 6, 5, 21));
        assert!(c.passed);
        assert_eq!(c.center.unwrap().degree, 2);
        assert!(c.center.unwrap().is_totally_real());
        let c = check_exclusion_row(find(12, 2, 5, 3));
        assert!(c.passed);
        assert_eq!(c.center.unwrap().degree, 4);
    }
}
