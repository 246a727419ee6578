//! Running the registered law suite: sweep every law on a small
//! budget, summarize per module, and re-run one law from a serialized
//! instance.
//!
//! Run with `cargo run --example law_sweep`.

use relkit::generate::Budget;
use relkit::laws::{find_law, laws, recheck, run_laws, summarize};
use relkit::RelFile;
use std::collections::BTreeMap;

fn main() {
    // The smoke budget keeps the sweep quick; the default budget used
    // by the test suite and the CLI runs far more instances.
    let budget = Budget::smoke();
    let reports = run_laws(None, &budget);
    let summaries = summarize(&reports);

    // Aggregate per module for a compact table.
    let mut per_module: BTreeMap<&str, (usize, usize, usize)> = BTreeMap::new();
    for s in &summaries {
        let module = laws()
            .iter()
            .find(|l| l.id == s.law)
            .map(|l| l.module)
            .unwrap_or("?");
        let e = per_module.entry(module).or_default();
        e.0 += 1;
        e.1 += s.instances;
        e.2 += s.failures;
    }
    println!("{:<12} {:>5} {:>10} {:>9}", "module", "laws", "instances", "failures");
    let mut totals = (0usize, 0usize, 0usize);
    for (module, (laws, instances, failures)) in &per_module {
        println!("{module:<12} {laws:>5} {instances:>10} {failures:>9}");
        totals.0 += laws;
        totals.1 += instances;
        totals.2 += failures;
    }
    println!("{:<12} {:>5} {:>10} {:>9}", "total", totals.0, totals.1, totals.2);
    assert!(summaries.iter().all(|s| s.failures == 0), "every registered law must hold");
    assert_eq!(totals.0, laws().len());

    // Each law carries its statement; filters select by substring.
    let law = find_law("cone-rule").expect("the cone rule is registered");
    println!("\ncone-rule: {}", law.statement);
    let filtered = run_laws(Some("cone"), &budget);
    assert!(!filtered.is_empty() && filtered.iter().all(|r| r.law_id.contains("cone")));
    println!("filter \"cone\" re-ran {} instances of it alone.", filtered.len());

    // Any instance can be serialized to the relation-file format and
    // rechecked later — the same round trip the CLI offers for
    // counterexample files.
    let instance = (law.gen)(&budget)
        .into_iter()
        .next()
        .expect("the generator yields at least one instance");
    let mut file = RelFile::new();
    for (i, r) in instance.iter().enumerate() {
        file.push(format!("R{i}"), r.clone());
    }
    let report = recheck("cone-rule", &file.to_text()).unwrap();
    assert!(report.passed);
    println!("one instance serialized to text and rechecked: pass.");
}
