use std::collections::BTreeMap;

use frobrig_paperlab::scenario::BudgetSpec;
use frobrig_paperlab::{run_scenario, scenario_ids, Scenario, Status};

fn run(id: &str, params: &[(&str, i64)]) -> frobrig_paperlab::ScenarioReport {
    let s = Scenario::builtin(id).unwrap();
    let params: BTreeMap<String, i64> = params.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    let rep = run_scenario(&s, &params, &BudgetSpec::default()).unwrap();
    for a in &rep.assertions {
        println!(
            "{id} {:<28} expected {:<20} actual {:<20} {}",
            a.check,
            a.expected,
            a.actual.as_deref().unwrap_or("-"),
            a.status.as_str()
        );
    }
    rep
}

#[test]
fn every_builtin_parses() {
    for id in scenario_ids() {
        let s = Scenario::builtin(id).unwrap();
        assert_eq!(s.id, id);
        assert!(!s.expectations.is_empty());
    }
    assert!(Scenario::builtin("nope").is_err());
}

#[test]
fn lemma_grid() {
    for (p, n) in [(3, 2), (2, 3)] {
        assert_eq!(run("lemma-3.2", &[("p", p), ("n", n)]).status, Status::Pass);
    }
}

#[test]
fn witness_scenario() {
    assert_eq!(run("example-3.6", &[]).status, Status::Pass);
}

#[test]
fn diagonal_scenario() {
    assert_eq!(run("remark-4.6", &[]).status, Status::Pass);
}

#[test]
fn regular_scenario() {
    assert_eq!(run("kunz-regular", &[]).status, Status::Pass);
    assert_eq!(run("kunz-regular", &[("p", 3)]).status, Status::Pass);
}

#[test]
fn hypersurface_scenarios() {
    assert_eq!(run("psh-hypersurface", &[]).status, Status::Pass);
    assert_eq!(run("numerical-ci", &[]).status, Status::Pass);
}

#[test]
fn artinian_scenario() {
    assert_eq!(run("example-2.2", &[]).status, Status::Pass);
    assert_eq!(run("example-2.2", &[("p", 3), ("seeds", 3)]).status, Status::Pass);
}
