//! Orders on words and on the frames of a set code: roots, lexical
//! precedence, the tally-class-first order, frame order and the
//! greatest-member-below search used by canonical adjunction.

use std::cmp::Ordering;

use thiserror::Error;

use crate::frames::{parse, FrameError, ParsedCode};
use crate::strings::{is_initial, BinStr, Digit};
use crate::tally::tally_class_compare;

/// Which argument continues the root with `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    First,
    Second,
}

/// A root `z` with `z a` and `z b` starting (or ending) the two arguments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootWitness {
    pub root: BinStr,
    pub a_side: Side,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("roots are only defined for distinct words")]
    EqualInputs,
    #[error(transparent)]
    Frame(#[from] FrameError),
}

fn root_from(x: &BinStr, y: &BinStr, mirrored: bool) -> Result<Option<RootWitness>, OrderError> {
    if x == y {
        return Err(OrderError::EqualInputs);
    }
    let (xs, ys): (Vec<u8>, Vec<u8>) = if mirrored {
        (x.as_bytes().iter().rev().copied().collect(), y.as_bytes().iter().rev().copied().collect())
    } else {
        (x.as_bytes().to_vec(), y.as_bytes().to_vec())
    };
    let k = xs.iter().zip(&ys).take_while(|(p, q)| p == q).count();
    if k == 0 || k == xs.len() || k == ys.len() {
        return Ok(None);
    }
    let mut root: Vec<u8> = xs[..k].to_vec();
    if mirrored {
        root.reverse();
    }
    let a_side = if xs[k] == Digit::A.as_byte() { Side::First } else { Side::Second };
    Ok(Some(RootWitness { root: BinStr::from_bytes(&root).expect("nonempty"), a_side }))
}

/// The longest common proper prefix at which `x` and `y` diverge.
pub fn left_root(x: &BinStr, y: &BinStr) -> Result<Option<RootWitness>, OrderError> {
    root_from(x, y, false)
}

/// Mirror of [`left_root`] on suffixes: `a z` and `b z` end the arguments.
pub fn right_root(x: &BinStr, y: &BinStr) -> Result<Option<RootWitness>, OrderError> {
    root_from(x, y, true)
}

/// `u << v`: lexical precedence with `a` before `b` and proper prefixes first.
pub fn lex_precedes(u: &BinStr, v: &BinStr) -> bool {
    let first = u.first() == Digit::A && v.first() == Digit::B;
    if first || is_initial(u, v) {
        return true;
    }
    match left_root(u, v) {
        Ok(Some(w)) => w.a_side == Side::First,
        _ => false,
    }
}

/// Tally class first, lexical precedence within a class.
pub fn precedes(u: &BinStr, v: &BinStr) -> bool {
    match tally_class_compare(u, v) {
        Ordering::Less => true,
        Ordering::Equal => lex_precedes(u, v),
        Ordering::Greater => false,
    }
}

/// Total order induced by [`precedes`], for sorting.
pub fn precedes_cmp(u: &BinStr, v: &BinStr) -> Ordering {
    if u == v {
        Ordering::Equal
    } else if precedes(u, v) {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Both are members of `x` and `u`'s frame comes first.
pub fn frame_precedes(x: &BinStr, u: &BinStr, v: &BinStr) -> Result<bool, OrderError> {
    Ok(frame_precedes_parsed(&parse(x)?, u, v))
}

pub fn frame_precedes_parsed(p: &ParsedCode, u: &BinStr, v: &BinStr) -> bool {
    match (p.index_of(u), p.index_of(v)) {
        (Some(i), Some(j)) => i < j,
        _ => false,
    }
}

/// Members appear in strictly increasing [`precedes`] order.
pub fn is_lex_plus(x: &BinStr) -> Result<bool, OrderError> {
    Ok(is_lex_plus_parsed(&parse(x)?))
}

pub fn is_lex_plus_parsed(p: &ParsedCode) -> bool {
    // Pairwise, as the frame order is total on members.
    let e = p.elements();
    (0..e.len()).all(|i| (i + 1..e.len()).all(|j| precedes(&e[i], &e[j])))
}

/// The frame-order-greatest member `u` of `x` such that every member up to
/// and including `u` precedes `y`; `None` if the first member does not.
pub fn max_below(x: &BinStr, y: &BinStr) -> Result<Option<BinStr>, OrderError> {
    let p = parse(x)?;
    Ok(max_below_parsed(&p, y).map(|i| p.frames()[i].element.clone()))
}

/// Frame index of [`max_below`].
pub fn max_below_parsed(p: &ParsedCode, y: &BinStr) -> Option<usize> {
    let k = p.frames().iter().take_while(|f| precedes(&f.element, y)).count();
    k.checked_sub(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> BinStr {
        BinStr::lit(x)
    }

    #[test]
    fn roots() {
        let w = left_root(&s("aab"), &s("abb")).unwrap().unwrap();
        assert_eq!(w.root.as_str(), "a");
        assert_eq!(w.a_side, Side::First);
        assert_eq!(left_root(&s("ab"), &s("aba")).unwrap(), None);
        assert_eq!(left_root(&s("ab"), &s("ba")).unwrap(), None);
        assert_eq!(left_root(&s("ab"), &s("ab")), Err(OrderError::EqualInputs));
    }

    #[test]
    fn precedence_examples() {
        assert!(lex_precedes(&s("a"), &s("b")));
        assert!(lex_precedes(&s("ab"), &s("abb")));
        assert!(precedes(&s("aa"), &s("b")));
        assert!(precedes(&s("a"), &s("aa")));
        assert!(!precedes(&s("b"), &s("aa")));
    }
}
