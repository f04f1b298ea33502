use cutgroups::classify::cut_metacyclic_catalog;
use cutgroups::corpus::corpus;
use cutgroups::verify::{run_all, CriterionReport};

fn line(r: &CriterionReport) -> String {
    let mark = if r.passed { "PASS" } else { "FAIL" };
    format!("[{mark}] criterion {:>2}: {} ({}; {:.1}s)", r.id, r.title, r.summary, r.seconds)
}

#[test]
fn acceptance() {
    let reports = run_all(&cut_metacyclic_catalog(), &corpus());
    for r in &reports {
        println!("{}", line(r));
        for f in &r.failures {
            println!("         {f}");
        }
    }
    assert_eq!(reports.len(), 10);
    let failed: Vec<u8> = reports.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
