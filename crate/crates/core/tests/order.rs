//! Roots, lexical precedence, tally-class precedence and frame order.

use std::cmp::Ordering;

use setcodes::frames::is_set;
use setcodes::order::{
    frame_precedes, is_lex_plus, left_root, lex_precedes, max_below, precedes, precedes_cmp, right_root,
    OrderError, RootWitness, Side,
};
use setcodes::strings::{all_strings, BinStr};

fn s(x: &str) -> BinStr {
    BinStr::lit(x)
}

/// Smallest set code whose frame order disagrees with precedence.
const SMALLEST_OUT_OF_ORDER: &str = "baaaabbaaabb";

/// Lexical precedence from its defining disjunction: a proper prefix, or a
/// common root continued by `a` in `u` and by `b` in `v`.
fn oracle_lex(u: &str, v: &str) -> bool {
    if u.len() < v.len() && v.starts_with(u) {
        return true;
    }
    (0..u.len().min(v.len())).any(|k| u[..k] == v[..k] && u[k..].starts_with('a') && v[k..].starts_with('b'))
}

fn oracle_class(x: &str) -> usize {
    (1..).find(|&k| !x.contains(&"b".repeat(k))).unwrap()
}

#[test]
fn root_values() {
    assert_eq!(left_root(&s("aab"), &s("abb")), Ok(Some(RootWitness { root: s("a"), a_side: Side::First })));
    assert_eq!(left_root(&s("ab"), &s("aba")), Ok(None));
    assert_eq!(left_root(&s("ab"), &s("ba")), Ok(None));
    assert_eq!(left_root(&s("ab"), &s("ab")), Err(OrderError::EqualInputs));
    assert_eq!(right_root(&s("aab"), &s("abb")), Ok(Some(RootWitness { root: s("b"), a_side: Side::First })));
}

#[test]
fn lexical_values() {
    assert!(lex_precedes(&s("a"), &s("b")));
    assert!(lex_precedes(&s("ab"), &s("abb")));
    assert!(lex_precedes(&s("aab"), &s("abb")));
    assert!(precedes(&s("aa"), &s("b")));
    assert!(precedes(&s("a"), &s("aa")));
    assert!(!precedes(&s("b"), &s("aa")));
}

#[test]
fn precedence_matches_oracles() {
    let w = all_strings(6);
    for u in &w {
        for v in &w {
            let (us, vs) = (u.as_str(), v.as_str());
            assert_eq!(lex_precedes(u, v), u != v && oracle_lex(us, vs), "{u} {v}");
            let (cu, cv) = (oracle_class(us), oracle_class(vs));
            let want = cu < cv || (cu == cv && u != v && oracle_lex(us, vs));
            assert_eq!(precedes(u, v), want, "{u} {v}");
            let cmp = if u == v { Ordering::Equal } else if want { Ordering::Less } else { Ordering::Greater };
            assert_eq!(precedes_cmp(u, v), cmp, "{u} {v}");
        }
    }
}

#[test]
fn frame_order_values() {
    let x = s("baaabbababb");
    assert_eq!(frame_precedes(&x, &s("a"), &s("b")), Ok(true));
    assert_eq!(frame_precedes(&x, &s("b"), &s("a")), Ok(false));
    assert_eq!(frame_precedes(&s("baaab"), &s("a"), &s("a")), Ok(false));
}

#[test]
fn lex_plus_values() {
    assert_eq!(is_lex_plus(&s("baaabbababb")), Ok(true));
    assert_eq!(is_lex_plus(&s("aa")), Ok(true));
    assert_eq!(is_lex_plus(&s("bbababbbaaabbb")), Ok(false));
    assert!(is_lex_plus(&s("aba")).is_err());
}

#[test]
fn smallest_out_of_order_code_is_pinned() {
    let found = all_strings(SMALLEST_OUT_OF_ORDER.len())
        .into_iter()
        .find(|x| is_set(x) && is_lex_plus(x) == Ok(false))
        .unwrap();
    assert_eq!(found, s(SMALLEST_OUT_OF_ORDER));
}

#[test]
fn max_below_values() {
    let x = s("baaabbababb");
    assert_eq!(max_below(&x, &s("b")), Ok(Some(s("a"))));
    assert_eq!(max_below(&x, &s("aa")), Ok(Some(s("a"))));
    assert_eq!(max_below(&s("baaab"), &s("a")), Ok(None));
}
