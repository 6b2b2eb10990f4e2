//! Canonical codes and their operations against worked values and a naive
//! minimal-marker oracle.

use std::collections::{BTreeMap, BTreeSet};

use setcodes::canonical::{
    adjoin, adjoin_simple, adjoin_traced, canonical_codes, encode_canonical, is_set_star, is_special, remark,
    remark_relation, resolve, subtract, subtract_canonical, uniqueness_census, AdjoinCase, CanonError,
};
use setcodes::frames::{is_member, is_min_set, members, parse};
use setcodes::strings::{all_strings, BinStr};

fn s(x: &str) -> BinStr {
    BinStr::lit(x)
}

fn set(xs: &[&str]) -> BTreeSet<BinStr> {
    xs.iter().map(|x| s(x)).collect()
}

fn canon(xs: &[&str]) -> BinStr {
    encode_canonical(set(xs)).code
}

/// Least opening for each frame by search: longer than every `b`-run of the
/// element and than every earlier opening.
fn oracle_openings(x: &BinStr) -> Vec<usize> {
    let p = parse(x).unwrap();
    let env = p.envelope().map_or(0, |t| t.len);
    let mut out: Vec<usize> = Vec::new();
    for f in p.frames() {
        let e = f.element.as_str();
        let m = (1..=env + 1)
            .find(|&k| !e.contains(&"b".repeat(k)) && out.iter().all(|&prev| prev < k))
            .unwrap();
        out.push(m);
    }
    out
}

#[test]
fn recognizer_values() {
    assert!(is_special(&s("baaab")));
    assert!(!is_special(&s("bbaaabb")));
    assert!(is_special(&s("aa")));
    assert!(is_set_star(&s("baaabbababb")));
    assert!(!is_set_star(&s("bbaaabb")));
    assert!(!is_set_star(&s("aba")));
}

#[test]
fn encoding_values() {
    assert_eq!(canon(&[]), s("aa"));
    assert_eq!(canon(&["a"]), s("baaab"));
    assert_eq!(canon(&["a", "b"]), s("baaabbababb"));
    assert_eq!(canon(&["a", "abba"]), s("baaabbbaabbaabbb"));
    assert_eq!(canon(&["b", "a"]), canon(&["a", "b"]));
}

#[test]
fn canonical_codes_have_least_openings() {
    let codes = canonical_codes(14);
    assert!(codes.len() > 100);
    for x in codes.iter().filter(|x| x.as_str() != "aa") {
        let got: Vec<usize> = parse(x).unwrap().frames().iter().map(|f| f.opening.len).collect();
        assert_eq!(got, oracle_openings(x), "{x}");
    }
}

#[test]
fn canonical_codes_are_complete() {
    for x in canonical_codes(12) {
        assert_eq!(encode_canonical(members(&x).unwrap()).code, x, "{x}");
    }
}

#[test]
fn census_values() {
    let r = uniqueness_census(6);
    let want: BTreeMap<BTreeSet<BinStr>, Vec<BinStr>> = [
        (set(&[]), vec![s("aa")]),
        (set(&["a"]), vec![s("baaab")]),
        (set(&["aa"]), vec![s("baaaab")]),
    ]
    .into();
    assert_eq!(r.classes, want);
    let r = uniqueness_census(2);
    assert_eq!(r.classes, [(set(&[]), vec![s("aa")])].into());
    assert!(uniqueness_census(12).duplicates().is_empty());
}

#[test]
fn adjunction_values() {
    let adj = |x: &str, y: &str| adjoin(&s(x), &s(y)).unwrap().code;
    assert_eq!(adj("aa", "b"), s("bbababb"));
    assert_eq!(adj("bbababb", "a"), s("baaabbababb"));
    assert_eq!(adj("baaab", "b"), s("baaabbababb"));
    assert_eq!(adj("baaabbbaabbaabbb", "b"), s("baaabbababbbaabbaabbb"));
    assert_eq!(adj("baaab", "a"), s("baaab"));
    assert_eq!(adjoin(&s("bbaaabb"), &s("a")), Err(CanonError::NotSetStar));
}

#[test]
fn naive_adjunction_values() {
    assert_eq!(adjoin_simple(&s("aa"), &s("a")), Ok(s("baaab")));
    assert_eq!(adjoin_simple(&s("baaab"), &s("a")), Ok(s("baaab")));
    let z = adjoin_simple(&s("baaab"), &s("b")).unwrap();
    assert_eq!(z, s("baaabbbababbb"));
    assert_eq!(members(&z).unwrap(), set(&["a", "b"]));
    assert!(!is_set_star(&z));
}

#[test]
fn adjunction_matches_encoding_and_reaches_every_branch() {
    let words = all_strings(3);
    let mut bases = vec![BTreeSet::new()];
    for i in 0..words.len() {
        bases.push([words[i].clone()].into());
        for j in i + 1..words.len() {
            bases.push([words[i].clone(), words[j].clone()].into());
            for k in j + 1..words.len() {
                bases.push([words[i].clone(), words[j].clone(), words[k].clone()].into());
            }
        }
    }
    let mut seen = BTreeSet::new();
    for m in bases {
        let x = encode_canonical(m.clone()).code;
        for y in all_strings(5) {
            let (z, case) = adjoin_traced(&x, &y).unwrap();
            let mut want: BTreeSet<BinStr> = m.clone();
            want.insert(y.clone());
            assert_eq!(z.code, encode_canonical(want).code, "{x} {y}");
            assert_eq!(z.code == x, is_member(&y, &x), "{x} {y}");
            seen.insert(case);
        }
    }
    let missing: Vec<AdjoinCase> = ALL_CASES.iter().copied().filter(|c| !seen.contains(c)).collect();
    assert!(missing.is_empty(), "unreached branches {missing:?}");
}

const ALL_CASES: [AdjoinCase; 18] = [
    AdjoinCase::EmptyBase,
    AdjoinCase::AlreadyMember,
    AdjoinCase::AppendGrowEnvelope,
    AdjoinCase::AppendBumpEnvelope,
    AdjoinCase::PrependFresh,
    AdjoinCase::PrependRemark,
    AdjoinCase::AfterFirstFresh,
    AdjoinCase::AfterFirstRemark,
    AdjoinCase::AfterFirstBumpRemark,
    AdjoinCase::AfterFirstBumpFresh,
    AdjoinCase::AfterFirstSameClassRemark,
    AdjoinCase::AfterInternalFresh,
    AdjoinCase::AfterInternalEqualRemark,
    AdjoinCase::AfterInternalEqualFresh,
    AdjoinCase::AfterInternalAboveFresh,
    AdjoinCase::AfterInternalAboveRemark,
    AdjoinCase::AfterInternalNextClassRemark,
    AdjoinCase::AfterInternalSameClassRemark,
];

#[test]
fn subtraction_values() {
    assert_eq!(subtract(&s("baaab"), &s("a")), Ok(s("aa")));
    assert_eq!(subtract(&s("baaab"), &s("b")), Ok(s("baaab")));
    assert_eq!(subtract(&s("baaabbababb"), &s("a")), Ok(s("bbababb")));
    assert_eq!(subtract_canonical(&s("baaabbababb"), &s("a")).unwrap().code, canon(&["b"]));
}

#[test]
fn resolution_values() {
    let (head, tail) = resolve(&s("baaabbababbbabbabbb"), 1).unwrap();
    assert_eq!((head.as_str(), tail.as_str()), ("baaab", "bbababbbabbabbb"));
    assert_eq!(resolve(&s("baaabbababb"), 0), Err(CanonError::NotInternalFrame { index: 0 }));
    assert_eq!(resolve(&s("baaab"), 0), Err(CanonError::NotInternalFrame { index: 0 }));
}

#[test]
fn remark_values() {
    for (z, want) in [
        ("baaab", "bbaaabb"),
        ("baaabbababb", "bbaaabbbababbb"),
        ("baaabbbaabbaabbb", "bbaaabbbaabbaabbb"),
    ] {
        let got = remark(&s(z)).unwrap();
        assert_eq!(got, s(want));
        assert!(remark_relation(&s(z), &got));
        assert!(is_min_set(&got));
    }
}
