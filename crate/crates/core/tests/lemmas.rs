//! The property harness: checked suites hold, controls fail with pinned
//! witnesses, and sampling is deterministic under a seed.

use std::collections::BTreeSet;

use setcodes::lemmas::{find, registry, run_property, run_suite, Bounds, LemmaError, Outcome, Suite};

fn counterexample(id: &str) -> Vec<String> {
    match run_property(id, &Bounds::default()).unwrap().outcome {
        Outcome::Counterexample(w) => w,
        o => panic!("{id} unexpectedly gave {o:?}"),
    }
}

#[test]
fn checked_suites_hold_at_default_bounds() {
    for suite in Suite::CHECKED {
        let r = run_suite(suite, &Bounds::default());
        assert!(!r.results.is_empty(), "{suite} is empty");
        let failed: Vec<String> = r.failures().map(ToString::to_string).collect();
        assert!(failed.is_empty(), "{}", failed.join("\n"));
        for p in &r.results {
            assert!(matches!(p.outcome, Outcome::Pass { cases, .. } if cases > 0), "{} checked nothing", p.id);
        }
    }
}

#[test]
fn controls_fail_with_pinned_witnesses() {
    assert_eq!(counterexample("frame-order-reflexive-misreading"), ["baaab", "a"]);
    assert_eq!(counterexample("single-frame-codes-special"), ["bbaaabb"]);
    let r = run_suite(Suite::Controls, &Bounds::default());
    assert_eq!(r.failures().count(), r.results.len());
}

#[test]
fn registry_ids_are_unique_kebab_case() {
    let ids: BTreeSet<&str> = registry().iter().map(|p| p.id).collect();
    assert_eq!(ids.len(), registry().len());
    for id in ids {
        assert!(id.bytes().all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == b'-'), "{id}");
        assert!(!id.starts_with('-') && !id.ends_with('-') && !id.contains("--"), "{id}");
        assert_eq!(find(id).unwrap().id, id);
    }
}

#[test]
fn every_suite_is_populated() {
    for suite in Suite::CHECKED.into_iter().chain([Suite::Controls]) {
        assert!(registry().iter().any(|p| p.suite == suite), "{suite}");
        assert_eq!(suite.name().parse::<Suite>(), Ok(suite));
    }
    assert!("lemmas".parse::<Suite>().is_err());
}

#[test]
fn unknown_property_is_an_error() {
    assert_eq!(
        run_property("no-such-property", &Bounds::default()).unwrap_err(),
        LemmaError::UnknownProperty("no-such-property".into())
    );
}

#[test]
fn sampling_is_deterministic_under_a_seed() {
    let b = Bounds { sample_threshold: 2_000, samples: 500, ..Bounds::default().with_max_len(5) };
    let first = run_suite(Suite::Order, &b);
    let second = run_suite(Suite::Order, &b);
    assert!(first.all_passed(), "{first}");
    assert!(first.results.iter().any(|p| matches!(p.outcome, Outcome::Pass { sampled: true, .. })));
    let outcomes = |r: &setcodes::lemmas::SuiteSummary| r.results.iter().map(|p| p.outcome.clone()).collect::<Vec<_>>();
    assert_eq!(outcomes(&first), outcomes(&second));
}

#[test]
fn reports_name_the_property_and_reading() {
    let r = run_property("lex-trichotomy", &Bounds::default().with_max_len(4)).unwrap();
    let text = r.to_string();
    assert!(text.starts_with("pass  lex-trichotomy ("), "{text}");
    assert!(text.contains(r.statement) && text.contains(r.reading), "{text}");
}
