//! The property table. Ids are stable kebab-case names; the CLI and the
//! coverage manifest refer to them.

use super::{coding as k, framing as f, ordering as o, words as c, PropertyDef, Suite};

macro_rules! prop {
    ($id:literal, $suite:ident, $rel:literal, $check:path, $stmt:literal) => {
        PropertyDef { id: $id, suite: Suite::$suite, statement: $stmt, relativized: $rel, check: $check }
    };
}

static REGISTRY: &[PropertyDef] = &[
    // Words.
    prop!("digits-irreflexive", Core, false, c::digits_irreflexive, "neither digit is below itself"),
    prop!("a-below-b", Core, false, c::a_below_b, "a is below b"),
    prop!("below-b-iff-a", Core, false, c::below_b_iff_a, "a word is below b exactly when it is a"),
    prop!("a-least", Core, false, c::a_least, "nothing is below a and a is below every other word"),
    prop!("below-or-at-a", Core, false, c::below_or_at_a, "being below or equal to a means being a"),
    prop!("left-compatible", Core, false, c::left_compatible, "for x other than a, x below y implies zx below zy"),
    prop!("below-transitive", Core, false, c::transitive, "the below relation is transitive"),
    prop!("below-successor", Core, true, c::below_successor, "every word is below its successor"),
    prop!("successor-injective", Core, true, c::successor_injective, "equal successors come from equal words"),
    prop!("successor-not-a", Core, true, c::successor_not_a, "no successor equals a"),
    prop!("below-successor-of-a", Core, true, c::below_successor_of_a, "below the successor of a means at most a"),
    prop!("b-extension-bounds", Core, false, c::b_extension_bounds, "xz = yb implies x is at most y"),
    prop!("below-successor-iff", Core, true, c::below_successor_iff, "below Sy exactly when at most y"),
    prop!("at-most-successor-iff", Core, true, c::at_most_successor_iff, "at most Sy exactly when at most y or equal to Sy"),
    prop!("below-irreflexive", Core, false, c::irreflexive, "no word is below itself"),
    prop!("below-asymmetric", Core, false, c::asymmetric, "two words are never below each other"),
    prop!("successor-differs", Core, true, c::successor_differs, "no word is its own successor"),
    prop!("concatenation-associative", Core, true, c::concat_associative, "concatenation is associative"),
    prop!("no-proper-self-affix", Core, true, c::no_self_suffix, "no word is a proper prefix or suffix of itself"),
    prop!("no-self-infix", Core, true, c::no_self_infix, "no word occurs strictly inside itself and xx never occurs in x"),
    prop!("right-cancel", Core, true, c::right_cancel, "xz = yz implies x = y"),
    prop!("left-cancel", Core, true, c::left_cancel, "zx = zy implies x = y"),
    prop!("prefixes-comparable", Core, true, c::prefixes_comparable, "two proper prefixes of a word are equal or nested"),
    prop!("digit-prefixes-exclusive", Core, false, c::digit_prefixes_exclusive, "xa and xb never both start y"),
    prop!("suffixes-comparable", Core, false, c::suffixes_comparable, "two proper suffixes of a word are equal or nested"),
    prop!("substring-antisymmetric", Core, false, c::substring_antisymmetric, "mutual substrings are equal"),
    prop!("no-extension-inside", Core, false, c::no_extension_inside, "neither xy nor yx occurs in x"),
    // Tallies.
    prop!("b-tally-successor", Core, true, c::btally_successor, "the successor of a b-tally is a b-tally"),
    prop!("b-tally-induction", Core, true, c::btally_induction, "b-tallies are b and the successors of b-tallies"),
    prop!("a-tally-shape", Core, false, c::atally_shape, "an a-tally is a, aa, aaa or starts and ends with aaa"),
    prop!("b-tally-has-no-a", Core, false, c::btally_has_no_a, "no substring of a b-tally is an a-tally"),
    prop!("b-tallies-concatenate", Core, true, c::btallies_concat, "b-tallies are closed under concatenation"),
    prop!("b-tallies-comparable", Core, true, c::btallies_comparable, "any two b-tallies are comparable"),
    prop!("b-tally-successor-bound", Core, true, c::btally_successor_bound, "u below a b-tally v implies Su at most v"),
    prop!("b-tally-commutes-with-b", Core, true, c::btally_commutes_with_b, "a b-tally followed by b equals b followed by it"),
    prop!("b-tally-successor-monotone", Core, true, c::btally_successor_monotone, "below a b-tally y exactly when Sx is below Sy"),
    prop!("b-tallies-commute", Core, true, c::btallies_commute, "b-tallies commute under concatenation"),
    prop!("a-tally-extension", Core, true, c::atally_extension, "an a-tally inside another stays inside after appending a to both"),
    prop!("max-a-tally-exists", Core, true, c::max_atally_exists, "every word has a maximal a-tally, occurring in it unless it is a b-tally"),
    prop!("max-plus-a-tally-exists", Core, false, c::max_plus_atally_exists, "every word has a non-occurring maximal a-tally"),
    prop!("leading-a-run-before-b-block", Core, true, c::leading_arun_before_bblock, "a leading a-run never crosses a b-block"),
    prop!("trailing-a-run-after-b-block", Core, true, c::trailing_arun_after_bblock, "a trailing a-run never crosses a b-block"),
    prop!("framed-body-inside-markers", Core, false, c::framed_body_inside_markers, "an a-delimited infix lies inside the part between b-tally ends"),
    prop!("a-run-avoids-b-block", Core, true, c::arun_avoids_bblock, "an a-run lies on one side of any b-block"),
    prop!("marked-splits-agree", Core, false, c::marked_splits_agree, "two splits at non-occurring markers of each other's prefix coincide"),
    prop!("singleton-marker-maximal", Core, false, c::singleton_marker_maximal, "a non-occurring bound of aua bounds all of tauat"),
    prop!("leading-a-run-unique", Core, false, c::leading_arun_unique, "the a-run before the first b is unique"),
    prop!("trailing-a-run-unique", Core, false, c::trailing_arun_unique, "the a-run after the last b is unique"),
    // Orders.
    prop!("left-root-excludes-prefixes", Order, true, o::left_root_excludes_prefixes, "words with a left root are not prefix-nested"),
    prop!("left-root-unique", Order, true, o::left_root_unique, "two words have at most one left root, the one computed"),
    prop!("left-root-dichotomy", Order, false, o::left_root_dichotomy, "distinct words differ in the first digit, are nested or have a left root"),
    prop!("right-root-dichotomy", Order, false, o::right_root_dichotomy, "distinct words differ in the last digit, are nested or have a right root"),
    prop!("lex-trichotomy", Order, true, o::lex_trichotomy, "lexical precedence is total"),
    prop!("lex-transitive", Order, true, o::lex_transitive, "lexical precedence is transitive"),
    prop!("lex-asymmetric", Order, true, o::lex_asymmetric, "lexical precedence is asymmetric"),
    prop!("lex-matches-definition", Order, false, o::lex_matches_definition, "the computed lexical precedence equals its defining disjunction"),
    prop!("tally-class-unique", Order, true, o::tally_class_unique, "each word has exactly one least non-occurring bounding b-tally"),
    prop!("tally-class-one-iff-a-tally", Order, false, o::class_one_iff_atally, "the tally class is b exactly for a-tallies"),
    prop!("class-order-trichotomy", Order, true, o::class_trichotomy, "tally classes are strictly and totally ordered"),
    prop!("precedence-trichotomy", Order, true, o::precedence_trichotomy, "precedence is a strict total order"),
    prop!("precedence-transitive", Order, true, o::precedence_transitive, "precedence is transitive"),
    prop!("precedence-matches-definition", Order, false, o::precedence_matches_definition, "the computed precedence is class first then lexical"),
    // Frames.
    prop!("first-marker-least", Frames, true, f::first_marker_least, "the first frame opens with the strictly shortest marker"),
    prop!("envelope-framing", Frames, true, f::envelope_framing, "an enveloped code is t w t' with b-tallies t, t' and w starting and ending in a and not degenerate"),
    prop!("envelope-b-singleton", Frames, false, f::envelope_b_singleton, "a code enveloped by b is b a u a b with u an a-tally"),
    prop!("ends-unique", Frames, true, f::ends_unique, "first and last frames each hold one element"),
    prop!("empty-iff-no-members", Frames, true, f::empty_iff_no_members, "a set code is aa exactly when it has no members"),
    prop!("markers-determined", Frames, true, f::markers_determined, "an element has one opening and one closing marker"),
    prop!("first-and-last-is-whole", Frames, true, f::first_and_last_is_whole, "a frame both first and last is the whole code"),
    prop!("singleton-shape-iff", Frames, true, f::singleton_shape_iff, "one member exactly when the code is tauat"),
    prop!("ends-not-internal", Frames, true, f::ends_not_internal, "end frames are never internal frames"),
    prop!("internal-after-first", Frames, true, f::internal_after_first, "the first frame closes no later than any internal frame opens"),
    prop!("two-frame-members", Frames, true, f::two_frame_members, "t1 aua t2 ava t2 with bounding markers codes {u, v}"),
    prop!("first-has-no-predecessor", Frames, true, f::first_has_no_predecessor, "nothing precedes the first frame"),
    prop!("last-follows-all", Frames, false, f::last_follows_all, "every other member precedes the last frame"),
    prop!("frame-order-irreflexive", Frames, false, f::frame_order_irreflexive, "no word precedes itself in a code"),
    prop!("last-has-no-successor", Frames, true, f::last_has_no_successor, "the last frame precedes nothing"),
    prop!("frame-order-asymmetric", Frames, true, f::frame_order_asymmetric, "frame order is asymmetric"),
    prop!("frame-order-total", Frames, true, f::frame_order_total, "frame order is total on members"),
    prop!("frame-order-transitive", Frames, true, f::frame_order_transitive, "frame order is transitive"),
    prop!("greatest-is-last", Frames, true, f::greatest_is_last, "the greatest member sits in the last frame"),
    prop!("least-is-first", Frames, true, f::least_is_first, "the least member sits in the first frame"),
    prop!("order-by-opening", Frames, true, f::order_by_opening, "frame order is the order of opening markers"),
    prop!("free-plus-downward", Frames, true, f::free_plus_downward, "frames before a leading-free frame are leading-free"),
    prop!("non-first-free-or-bound", Frames, true, f::non_first_free_or_bound, "every non-first frame is free or bound"),
    prop!("parser-matches-definitions", Frames, false, f::parser_matches_definitions, "the run scanner agrees with the quantified definitions"),
    prop!("lex-codes-same-ends", Frames, true, f::lex_plus_same_ends, "sorted codes of one set share first and last members"),
    prop!("lex-code-iff-same-order", Frames, true, f::lex_plus_iff_same_order, "beside a sorted code, another is sorted exactly when it has the same order"),
    prop!("lex-code-orders-agree", Frames, false, f::lex_plus_orders_agree, "sorted codes order shared members alike"),
    prop!("two-element-lex-code", Frames, true, f::two_element_lex_code, "t' axa t'' aya t'' with x before y is a sorted code of {x, y}"),
    // Codes and operations.
    prop!("naive-adjunction-members", Canonical, true, k::naive_adjunction_members, "appending a frame adds exactly the new element"),
    prop!("subtraction-postconditions", Canonical, true, k::subtraction_postconditions, "excising a frame removes one element, keeps markers, order and minimality"),
    prop!("special-markers-agree", Canonical, true, k::special_markers_agree, "sorted special codes of one set use the same markers"),
    prop!("two-member-minimal-shape", Canonical, true, k::two_member_minimal_shape, "a minimal two-member code is t1 aya t2 ay'a t2"),
    prop!("singleton-shape-minimal", Canonical, true, k::singleton_shape_minimal, "tauat with a bounding marker is minimal"),
    prop!("two-frame-minimal", Canonical, true, k::two_frame_minimal, "a two-frame chain with bounding markers is minimal"),
    prop!("resolve-parts-minimal", Canonical, true, k::resolve_parts_minimal, "splitting a minimal code before an internal frame gives two minimal codes"),
    prop!("singleton-canonical-exists", Canonical, true, k::singleton_canonical_exists, "every singleton has a canonical code opened by its tally class"),
    prop!("special-first-marker-minimal", Canonical, true, k::special_first_marker_minimal, "a special code's first marker is its element's tally class"),
    prop!("pair-canonical-exists", Canonical, true, k::pair_canonical_exists, "u before v gives a canonical two-frame code of {u, v}"),
    prop!("frame-marker-bounds-earlier", Canonical, true, k::frame_marker_bounds_earlier, "each opening bounds its element and exceeds earlier openings"),
    prop!("special-preserved-by-truncation", Canonical, true, k::special_preserved_by_truncation, "cutting a special code after an internal frame stays special"),
    prop!("remark-unique", Canonical, true, k::remark_unique, "each minimal code has exactly one remarked code, the computed one"),
    prop!("special-codes-prefix-free", Canonical, true, k::special_codes_prefix_free, "sorted special codes of one set are not prefix-nested"),
    prop!("canonical-no-root-split", Canonical, true, k::canonical_no_root_split, "canonical codes of one set never diverge at a root"),
    prop!("canonical-unique", Canonical, true, k::canonical_unique, "canonical codes of one set are equal"),
    prop!("max-below-successors-follow", Canonical, true, k::max_below_successors_follow, "members after the greatest one below y follow y"),
    prop!("max-below-unique", Canonical, false, k::max_below_unique, "in a sorted code the greatest member below y is unique"),
    prop!("canonical-adjunction", Canonical, true, k::canonical_adjunction, "adjoining to a canonical code gives the canonical code of the union"),
    // Controls.
    prop!("frame-order-reflexive-misreading", Controls, false, k::reflexive_order_misreading, "no member is at most itself in frame order (false: reflexive reading)"),
    prop!("single-frame-codes-special", Controls, false, k::single_frame_codes_special, "every one-frame code is special (false: wide markers)"),
];

/// Every registered property.
pub fn registry() -> &'static [PropertyDef] {
    REGISTRY
}
