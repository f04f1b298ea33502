//! End-to-end checks of the classification results, one report per check.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{
    central_height, classify_cut_metacyclic, enumerate_metacyclic, generalized_quaternion_presentation,
    height_zero_list, unit_index, verify_exclusion_table, CatalogEntry, ClassifyOptions, Discrepancy, ExclusionRow,
};
use crate::corpus::{invariant_factor_decompositions, three_groups, two_groups, NamedGroup};
use crate::cut::{is_camina, is_cut, is_cut_2group, is_cut_3group, is_cut_ritter_sehgal, is_nonabelian_camina, pi_condition};
use crate::cyclo::is_cut_wedderburn;
use crate::group::{
    cyclic, dihedral, direct_product, heisenberg, is_isomorphic, make_abelian, make_metacyclic, quaternion,
    FiniteGroup, MetacyclicPresentation,
};
use crate::numbers::euler_phi;
use crate::shoda::{conjugate_by, find_strong_shoda_pairs, GroupAlgebraElement, StrongShodaPair};

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    /// Number of individual cases examined.
    pub checked: usize,
    pub summary: String,
    pub failures: Vec<String>,
    pub seconds: f64,
}

fn report(id: u8, title: &'static str, checked: usize, summary: String, failures: Vec<String>, start: Instant) -> CriterionReport {
    CriterionReport {
        id,
        title,
        passed: failures.is_empty(),
        checked,
        summary,
        failures,
        seconds: start.elapsed().as_secs_f64(),
    }
}

fn describe(d: &Discrepancy, catalog: &[CatalogEntry]) -> String {
    let p = d.presentation;
    let entry = catalog.iter().position(|e| e.presentation == p);
    let head = match entry {
        Some(i) => format!("catalog entry #{i} {p} [{}]", catalog[i].source_line),
        None => format!("presentation {p}"),
    };
    let conj = match d.conjugacy_witness {
        Some(w) => format!("not cut (x = element {}, j = {})", w.element, w.exponent),
        None => "cut".to_string(),
    };
    let wed = match d.wedderburn_is_cut {
        Some(true) => "cut",
        Some(false) => "not cut",
        None => "unavailable",
    };
    let tag = if d.verdicts_agree() { "both tests agree" } else { "tests disagree" };
    let near = d.nearest_catalog_entry.map(|q| format!(", nearest entry {q}")).unwrap_or_default();
    format!("{head}: conjugacy test {conj}, component test {wed} ({tag}){near}")
}

/// The sweep over `n ≤ 42`, `t ∈ {2,3,4,6}` matches the catalog up to
/// isomorphism.
pub fn catalog_reproduction(catalog: &[CatalogEntry]) -> CriterionReport {
    let start = Instant::now();
    let title = "catalog reproduction";
    let c = match classify_cut_metacyclic(&ClassifyOptions::default(), catalog) {
        Ok(c) => c,
        Err(e) => return report(1, title, 0, String::new(), vec![e.to_string()], start),
    };
    let mut failures: Vec<String> = Vec::new();
    for d in &c.catalog_diff.missing {
        failures.push(format!("missing: {}", describe(d, catalog)));
    }
    for d in &c.catalog_diff.extra {
        failures.push(format!("extra class: {}", describe(d, catalog)));
    }
    for p in &c.catalog_diff.out_of_range {
        failures.push(format!("catalog entry {p} lies outside the swept range"));
    }
    for (i, _) in catalog.iter().enumerate() {
        let homes = c.classes.iter().filter(|k| k.catalog_entries.contains(&i)).count();
        if homes > 1 {
            failures.push(format!("catalog entry #{i} lies in {homes} classes"));
        }
    }
    let summary = format!(
        "{} non-abelian presentations, {} cut, {} classes, {} catalog entries",
        c.non_abelian_scanned,
        c.cut_presentations.len(),
        c.classes.len(),
        catalog.len()
    );
    report(1, title, c.non_abelian_scanned, summary, failures, start)
}

/// The wider sweep `n ≤ 100`, `2 ≤ t ≤ 12` finds nothing new.
pub fn finiteness_probe(catalog: &[CatalogEntry]) -> CriterionReport {
    let start = Instant::now();
    let title = "finiteness probe";
    let opts = ClassifyOptions { max_n: 100, t_set: (2..=12).collect(), ..Default::default() };
    let c = match classify_cut_metacyclic(&opts, catalog) {
        Ok(c) => c,
        Err(e) => return report(2, title, 0, String::new(), vec![e.to_string()], start),
    };
    let mut failures: Vec<String> = c.catalog_diff.extra.iter().map(|d| format!("extra class: {}", describe(d, catalog))).collect();
    for d in &c.catalog_diff.missing {
        failures.push(format!("missing: {}", describe(d, catalog)));
    }
    for p in &c.cut_presentations {
        if ![2, 3, 4, 6].contains(&p.t) {
            failures.push(format!("{p} is cut with t = {}", p.t));
        }
        if unit_index(p) > 2 {
            failures.push(format!("{p} is cut with [U(Z/nZ):<r>] = {}", unit_index(p)));
        }
        if pi_condition(&make_metacyclic(p)) != Ok(true) {
            failures.push(format!("{p} is cut but its order is prime to 6"));
        }
    }
    let summary = format!(
        "{} non-abelian presentations, {} cut, {} classes",
        c.non_abelian_scanned,
        c.cut_presentations.len(),
        c.classes.len()
    );
    report(2, title, c.non_abelian_scanned, summary, failures, start)
}

/// Conjugacy and component tests agree on every non-abelian presentation
/// with `n ≤ 42`, `t ∈ {2,3,4,6}`.
pub fn method_agreement() -> CriterionReport {
    let start = Instant::now();
    let ps: Vec<MetacyclicPresentation> =
        enumerate_metacyclic(42, &[2, 3, 4, 6]).into_iter().filter(|p| !p.is_abelian()).collect();
    let failures: Vec<String> = ps
        .par_iter()
        .filter_map(|p| {
            let g = make_metacyclic(p);
            let conj = is_cut_ritter_sehgal(&g).is_cut;
            match is_cut_wedderburn(&g) {
                Ok(v) if v.is_cut == conj => None,
                Ok(v) => Some(format!("{p}: conjugacy test says {conj}, component test says {}", v.is_cut)),
                Err(e) => Some(format!("{p}: {e}")),
            }
        })
        .collect();
    let summary = format!("{} of {} presentations agree", ps.len() - failures.len(), ps.len());
    report(3, "conjugacy and component tests agree", ps.len(), summary, failures, start)
}

/// Whether the row's group is excluded by some other component.
fn other_witness(row: &ExclusionRow) -> String {
    let Ok(p) = row.presentation() else { return "invalid presentation".to_string() };
    match is_cut_wedderburn(&make_metacyclic(&p)) {
        Ok(v) => match v.offending_component {
            Some(c) => format!(
                "group is still not cut: H=<{}>, K=<{}> gives centre {}",
                c.h_generators.join(","),
                c.k_generators.join(","),
                c.center
            ),
            None => "group is cut".to_string(),
        },
        Err(e) => e.to_string(),
    }
}

/// Every printed pair is a strong Shoda pair with a non-admissible centre.
pub fn exclusion_rows() -> CriterionReport {
    let start = Instant::now();
    let checks = verify_exclusion_table();
    let failures: Vec<String> = checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| {
            let r = &c.row;
            let why = match (&c.ssp_failure, &c.center) {
                (Some(f), _) => f.clone(),
                (None, Some(center)) => format!("centre is {center}"),
                (None, None) => "no centre".to_string(),
            };
            format!("({},{},{},{}) H={:?} K={:?}: {why}; {}", r.n, r.t, r.r, r.ell, r.h, r.k, other_witness(r))
        })
        .collect();
    let summary = format!("{} of {} rows pass", checks.len() - failures.len(), checks.len());
    report(4, "exclusion table", checks.len(), summary, failures, start)
}

/// Abelian groups are cut exactly when their exponent is 1, 2, 3, 4 or 6.
pub fn abelian_exponent() -> CriterionReport {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 1..=72u64 {
        for factors in invariant_factor_decompositions(n) {
            checked += 1;
            let fs: Vec<usize> = factors.iter().map(|&f| f as usize).collect();
            let g = make_abelian(&fs);
            let exp = g.exponent();
            if exp != *fs.last().unwrap_or(&1) {
                failures.push(format!("{fs:?}: exponent {exp} differs from the largest invariant factor"));
            }
            let expected = [1, 2, 3, 4, 6].contains(&exp);
            let verdict = is_cut_ritter_sehgal(&g);
            if verdict.is_cut != expected {
                failures.push(format!("{fs:?}: exponent {exp}, cut test says {}", verdict.is_cut));
            }
        }
    }
    report(5, "abelian groups: cut iff exponent divides 4 or 6", checked, format!("{checked} abelian groups of order <= 72"), failures, start)
}

/// Heights 0, 2 and 1 on the three lists.
pub fn central_heights(catalog: &[CatalogEntry]) -> CriterionReport {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut expect = |name: String, g: &FiniteGroup, height: u8, failures: &mut Vec<String>| {
        checked += 1;
        match central_height(g) {
            Ok(v) if v.height == height => {}
            Ok(v) => failures.push(format!("{name}: height {} ({:?}), expected {height}", v.height, v.reason)),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    };
    let zero: Vec<FiniteGroup> = height_zero_list().iter().map(make_metacyclic).collect();
    for (p, g) in height_zero_list().iter().zip(&zero) {
        expect(format!("{p}"), g, 0, &mut failures);
    }
    let qstar: Vec<FiniteGroup> =
        [4, 8, 12, 16, 20].iter().map(|&n| make_metacyclic(&generalized_quaternion_presentation(n))).collect();
    for (n, g) in [4, 8, 12, 16, 20].iter().zip(&qstar) {
        expect(format!("{}", generalized_quaternion_presentation(*n)), g, 2, &mut failures);
    }
    expect("D8".into(), &dihedral(4), 1, &mut failures);
    expect("C2".into(), &cyclic(2), 1, &mut failures);
    expect("C6".into(), &cyclic(6), 1, &mut failures);
    let mut excluded = 0;
    for entry in catalog {
        let g = make_metacyclic(&entry.presentation);
        let family = |list: &[FiniteGroup]| {
            list.iter().any(|h| h.order() == g.order() && is_isomorphic(&g, h).unwrap_or(false))
        };
        // The quaternion family is open-ended, so compare against the member
        // of the right order directly.
        let quaternion_like = g.order() % 8 == 0
            && is_isomorphic(&g, &make_metacyclic(&generalized_quaternion_presentation(g.order() as u64 / 2)))
                .unwrap_or(false);
        if family(&zero) || quaternion_like {
            excluded += 1;
            continue;
        }
        expect(format!("catalog {}", entry.presentation), &g, 1, &mut failures);
    }
    let summary = format!("{checked} groups, {excluded} catalog entries belong to the height 0 or 2 lists");
    report(6, "central heights", checked, summary, failures, start)
}

/// `H = ⟨a, b | a^8, b^2, a^b = a^3⟩` and `C4` are cut, `H × C4` is not.
pub fn product_counterexample() -> CriterionReport {
    let start = Instant::now();
    let h = make_metacyclic(&MetacyclicPresentation::new(8, 2, 3, 8).expect("valid"));
    let k = cyclic(4);
    let mut failures = Vec::new();
    if !is_cut(&h) {
        failures.push("H is not cut".to_string());
    }
    if !is_cut(&k) {
        failures.push("C4 is not cut".to_string());
    }
    let hk = match direct_product(&h, &k) {
        Ok(g) => g,
        Err(e) => return report(7, "cut is not closed under direct products", 2, String::new(), vec![e.to_string()], start),
    };
    let v = is_cut_ritter_sehgal(&hk);
    let summary = match v.witness {
        Some(w) => format!("H x C4 fails at x = {}, j = {}", hk.label(w.element), w.exponent),
        None => "H x C4 is cut".to_string(),
    };
    match v.witness {
        None => failures.push("H x C4 is cut".to_string()),
        Some(w) if w.exponent != 3 => failures.push(format!("witness exponent {} is not 3", w.exponent)),
        Some(_) => {}
    }
    report(7, "cut is not closed under direct products", 3, summary, failures, start)
}

/// Small Camina groups are recognised, and the Camina 2- and 3-groups of
/// the corpus are cut.
pub fn camina_suite() -> CriterionReport {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (name, g) in [("D8", dihedral(4)), ("Q8", quaternion(3)), ("S3", dihedral(3)), ("3^(1+2)+", heisenberg(3, 1))] {
        if !is_camina(&g) {
            failures.push(format!("{name} is not detected as Camina"));
        }
    }
    let mut camina = Vec::new();
    let pool: Vec<NamedGroup> = two_groups().into_iter().chain(three_groups()).collect();
    for ng in &pool {
        if is_nonabelian_camina(&ng.group) {
            camina.push(ng.name.clone());
            if !is_cut(&ng.group) {
                failures.push(format!("{} is Camina but not cut", ng.name));
            }
        }
    }
    let summary = format!("{} Camina p-groups in the corpus: {}", camina.len(), camina.join(", "));
    report(8, "Camina groups", 4 + pool.len(), summary, failures, start)
}

fn idempotent_failures(name: &str, g: &FiniteGroup) -> (usize, Vec<String>) {
    let search = match find_strong_shoda_pairs(g) {
        Ok(s) => s,
        Err(e) => return (0, vec![format!("{name}: {e}")]),
    };
    let mut failures = Vec::new();
    let one = GroupAlgebraElement::one(g);
    let mut total = GroupAlgebraElement::zero(g);
    for p in &search.pairs {
        let tag = format!("{name} (H order {}, K order {})", p.h.order(), p.k.order());
        failures.extend(pair_failures(&tag, g, p));
        total = &total + &p.e;
    }
    if total != one {
        failures.push(format!("{name}: idempotents do not sum to 1"));
    }
    for (i, p) in search.pairs.iter().enumerate() {
        for q in &search.pairs[i + 1..] {
            if !p.e.multiply(&q.e).map(|x| x.is_zero()).unwrap_or(false) {
                failures.push(format!("{name}: two primitive idempotents are not orthogonal"));
            }
        }
    }
    (search.pairs.len(), failures)
}

fn pair_failures(tag: &str, g: &FiniteGroup, p: &StrongShodaPair) -> Vec<String> {
    let mut out = Vec::new();
    if !p.epsilon.is_idempotent() {
        out.push(format!("{tag}: epsilon is not idempotent"));
    }
    if !p.e.is_central() {
        out.push(format!("{tag}: e is not central"));
    }
    let mut conjugates: Vec<GroupAlgebraElement> = Vec::new();
    for x in g.elements() {
        let c = conjugate_by(&p.epsilon, x);
        if !conjugates.contains(&c) {
            conjugates.push(c);
        }
    }
    for (i, a) in conjugates.iter().enumerate() {
        for b in &conjugates[i + 1..] {
            if !a.multiply(b).map(|x| x.is_zero()).unwrap_or(false) {
                out.push(format!("{tag}: distinct conjugates of epsilon are not orthogonal"));
            }
        }
    }
    let sum = conjugates.iter().fold(GroupAlgebraElement::zero(g), |acc, c| &acc + c);
    if sum != p.e {
        out.push(format!("{tag}: e is not the sum of the conjugates of epsilon"));
    }
    let n = p.matrix_size as u64;
    let lhs = num_rational::BigRational::from_integer((n * n * euler_phi(p.index) * p.action_order() as u64).into());
    let rhs = p.e.coefficient(g.identity()) * num_rational::BigRational::from_integer(g.order().into());
    if lhs != rhs {
        out.push(format!("{tag}: dimension {lhs} differs from |G| * coeff_1(e) = {rhs}"));
    }
    out
}

/// Exact identities for every strong Shoda pair of the corpus groups of
/// order at most 100.
pub fn idempotent_suite(groups: &[NamedGroup]) -> CriterionReport {
    let start = Instant::now();
    let small: Vec<&NamedGroup> = groups.iter().filter(|g| g.group.order() <= 100).collect();
    let results: Vec<(usize, Vec<String>)> = small.par_iter().map(|ng| idempotent_failures(&ng.name, &ng.group)).collect();
    let pairs: usize = results.iter().map(|r| r.0).sum();
    let failures: Vec<String> = results.into_iter().flat_map(|r| r.1).collect();
    let summary = format!("{pairs} strong Shoda pairs in {} groups", small.len());
    report(9, "idempotent identities", pairs, summary, failures, start)
}

/// The 2- and 3-group tests agree with the general test, and no
/// non-identity element of a 3-group is conjugate to its square.
pub fn pgroup_specializations() -> CriterionReport {
    let start = Instant::now();
    let mut failures = Vec::new();
    let twos = two_groups();
    let threes = three_groups();
    for ng in &twos {
        let general = is_cut(&ng.group);
        match is_cut_2group(&ng.group) {
            Ok(v) if v.is_cut == general => {}
            Ok(v) => failures.push(format!("{}: 2-group test {}, general test {general}", ng.name, v.is_cut)),
            Err(e) => failures.push(format!("{}: {e}", ng.name)),
        }
    }
    for ng in &threes {
        let g = &ng.group;
        let general = is_cut(g);
        match is_cut_3group(g) {
            Ok(v) if v.is_cut == general => {}
            Ok(v) => failures.push(format!("{}: 3-group test {}, general test {general}", ng.name, v.is_cut)),
            Err(e) => failures.push(format!("{}: {e}", ng.name)),
        }
        let classes = g.conjugacy_classes();
        if let Some(x) = g.elements().skip(1).find(|&x| classes.same_class(x, g.mul(x, x))) {
            failures.push(format!("{}: element {} is conjugate to its square", ng.name, g.label(x)));
        }
    }
    let checked = twos.len() + threes.len();
    let summary = format!("{} 2-groups and {} 3-groups", twos.len(), threes.len());
    report(10, "p-group specializations", checked, summary, failures, start)
}

pub const CRITERIA: std::ops::RangeInclusive<u8> = 1..=10;

/// Runs one check by number, `None` for an unknown number.
pub fn run_criterion(id: u8, catalog: &[CatalogEntry], groups: &[NamedGroup]) -> Option<CriterionReport> {
    Some(match id {
        1 => catalog_reproduction(catalog),
        2 => finiteness_probe(catalog),
        3 => method_agreement(),
        4 => exclusion_rows(),
        5 => abelian_exponent(),
        6 => central_heights(catalog),
        7 => product_counterexample(),
        8 => camina_suite(),
        9 => idempotent_suite(groups),
        10 => pgroup_specializations(),
        _ => return None,
    })
}

/// All checks in order.
pub fn run_all(catalog: &[CatalogEntry], groups: &[NamedGroup]) -> Vec<CriterionReport> {
    CRITERIA.filter_map(|id| run_criterion(id, catalog, groups)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::cut_metacyclic_catalog;

    #[test]
    fn corrupted_catalog_entry_is_named() {
        let mut catalog = cut_metacyclic_catalog();
        catalog[5].presentation = MetacyclicPresentation::new(5, 2, 4, 5).unwrap();
        let r = catalog_reproduction(&catalog);
        assert!(!r.passed);
        assert!(r.failures.iter().any(|f| f.starts_with("missing: catalog entry #5 (5,2,4,5)")), "{:?}", r.failures);
    }

    #[test]
    fn cheap_checks_pass() {
        for r in [abelian_exponent(), product_counterexample(), pgroup_specializations()] {
            assert!(r.passed, "{}: {:?}", r.title, r.failures);
        }
    }
}
