//! Frame parsing against worked codes and the literal predicate reading.

use setcodes::frames::literal::{analyze, frame_predicates, literal_is_min_set, literal_members, FrameFlags};
use setcodes::frames::{
    classify_frames, is_member, is_min_set, is_set, members, occurs_in_frame, parse, serialize_chain,
    set_equiv, ClassKind, Clause, FrameError, FrameKind, ParsedCode,
};
use setcodes::strings::{all_strings, BinStr};
use setcodes::tally::Tally;

fn s(x: &str) -> BinStr {
    BinStr::lit(x)
}

fn set(xs: &[&str]) -> std::collections::BTreeSet<BinStr> {
    xs.iter().map(|x| s(x)).collect()
}

/// Shortest set code that is not minimal, found by ascending search.
const SHORTEST_NON_MINIMAL: &str = "baaabbabbbababbb";

#[test]
fn parses_worked_codes() {
    assert_eq!(parse(&s("aa")), Ok(ParsedCode::Empty));
    let one = parse(&s("baaab")).unwrap();
    assert_eq!(one.envelope(), Some(Tally::b(1)));
    let f = &one.frames()[0];
    assert_eq!((f.opening, f.element.as_str(), f.closing, f.kind), (Tally::b(1), "a", Tally::b(1), FrameKind::First));
    assert_eq!(f.kind_label(5), "first+last");

    let two = parse(&s("baaabbababb")).unwrap();
    assert_eq!(two.envelope(), Some(Tally::b(2)));
    let shape: Vec<_> = two.frames().iter().map(|f| (f.opening.len, f.element.as_str(), f.closing.len, f.kind)).collect();
    assert_eq!(shape, [(1, "a", 2, FrameKind::First), (2, "b", 2, FrameKind::Last)]);
    assert!(matches!(parse(&s("aba")), Err(FrameError::NotASetCode(_))));
}

#[test]
fn rejection_names_a_clause() {
    assert_eq!(parse(&s("aba")), Err(FrameError::NotASetCode(Clause::EnvelopeMissing)));
    assert!(matches!(parse(&s("abaaab")), Err(FrameError::NotASetCode(_))));
}

#[test]
fn membership_values() {
    assert_eq!(members(&s("aa")).unwrap(), set(&[]));
    assert_eq!(members(&s("baaab")).unwrap(), set(&["a"]));
    assert_eq!(members(&s("baaabbababb")).unwrap(), set(&["a", "b"]));
    assert!(is_member(&s("a"), &s("baaab")));
    assert!(!is_member(&s("b"), &s("baaab")));
    assert!(!is_member(&s("a"), &s("aa")));
    assert!(set_equiv(&s("baaab"), &s("bbaaabb")));
    assert!(!set_equiv(&s("aa"), &s("baaab")));
    assert!(set_equiv(&s("aa"), &s("aa")));
}

#[test]
fn frame_predicate_values() {
    let all = |x: &str, t1: usize, u: &str, t2: usize| frame_predicates(&s(x), &Tally::b(t1), &s(u), &Tally::b(t2));
    assert_eq!(all("baaab", 1, "aaa", 1), FrameFlags { firstf: true, intf: false, lastf: true, fr: true });
    assert!(all("baaabbababb", 1, "aaa", 2).firstf);
    assert_eq!(all("baaab", 2, "aaa", 1), FrameFlags::default());
}

#[test]
fn occurrence_witnesses() {
    let w = occurs_in_frame(&s("b"), &s("a"), &s("aab"), &s("baaab")).unwrap();
    assert_eq!(w, Some((Tally::b(1), s("aaa"), Tally::b(1))));
    let w = occurs_in_frame(&s("baaabbab"), &s("a"), &s("bb"), &s("baaabbababb")).unwrap();
    assert_eq!(w, Some((Tally::b(2), s("aba"), Tally::b(2))));
    assert_eq!(occurs_in_frame(&s("b"), &s("b"), &s("aaab"), &s("baaab")), Err(FrameError::DecompositionMismatch));
}

#[test]
fn minimality_values() {
    assert!(is_min_set(&s("baaab")));
    assert!(is_min_set(&s("aa")));
    let w = s(SHORTEST_NON_MINIMAL);
    assert!(is_set(&w) && !is_min_set(&w) && !literal_is_min_set(&w));
    assert!(!parse(&w).unwrap().is_contiguous());
}

#[test]
fn shortest_non_minimal_code_is_pinned() {
    let found = all_strings(SHORTEST_NON_MINIMAL.len())
        .into_iter()
        .find(|x| is_set(x) && !literal_is_min_set(x))
        .unwrap();
    assert_eq!(found, s(SHORTEST_NON_MINIMAL));
}

#[test]
fn classification_values() {
    let kinds = |x: &str| classify_frames(&parse(&s(x)).unwrap()).iter().map(|c| (c.kind, c.free_plus)).collect::<Vec<_>>();
    assert_eq!(kinds("baaabbababb"), [(ClassKind::First, true), (ClassKind::Free, true)]);
    assert_eq!(kinds("baaabbbaabbaabbb"), [(ClassKind::First, true), (ClassKind::Bound, false)]);
    assert_eq!(kinds("baaab"), [(ClassKind::First, true)]);
}

#[test]
fn parser_agrees_with_literal_reading() {
    for x in all_strings(12) {
        let p = parse(&x);
        assert_eq!(p.is_ok(), analyze(&x).is_set, "{x}");
        assert_eq!(p.as_ref().ok().map(ParsedCode::members), literal_members(&x), "{x}");
        if p.is_ok() {
            assert_eq!(is_min_set(&x), literal_is_min_set(&x), "{x}");
        }
    }
}

#[test]
fn minimal_codes_serialize_back() {
    for x in all_strings(14) {
        if let Ok(p) = parse(&x) {
            if is_min_set(&x) {
                assert_eq!(p.serialize(), x, "{x}");
            }
        }
    }
}

#[test]
fn chain_serialization_builds_codes() {
    let (a, b) = (s("a"), s("b"));
    assert_eq!(serialize_chain(&[(1, &a)]), s("baaab"));
    assert_eq!(serialize_chain(&[(1, &a), (2, &b)]), s("baaabbababb"));
}
