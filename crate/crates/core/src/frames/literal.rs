//! Direct evaluation of the quantified frame definitions.
//!
//! Nothing here consults the run scanner in the parent module; the parser is
//! tested against these functions. Quantifiers over markers and wrapped
//! elements are restricted to triples `(t1, u, t2)` whose juxtaposition
//! `t1 u t2` occurs in `x`, since each frame predicate implies that
//! occurrence.

use std::collections::{BTreeMap, BTreeSet};

use crate::strings::{bytes_contain, BinStr, Digit};
use crate::tally::Tally;

/// Truth values of the four frame predicates on one candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FrameFlags {
    pub firstf: bool,
    pub intf: bool,
    pub lastf: bool,
    pub fr: bool,
}

fn is_btally(t: &[u8]) -> bool {
    !t.is_empty() && t.iter().all(|&c| c == b'b')
}

/// Strict order on words: `x = a` and `y != a`, or `x` a proper prefix of `y`.
fn lt(x: &[u8], y: &[u8]) -> bool {
    (x == b"a" && y != b"a") || (x.len() < y.len() && y.starts_with(x))
}

/// Every `b`-tally occurring in `y` occurs in `t`, and `t` is a `b`-tally.
pub fn max_t_b(t: &[u8], y: &[u8]) -> bool {
    if !is_btally(t) {
        return false;
    }
    // The b-tally substrings starting at i are the prefixes of the b-run there.
    for i in 0..y.len() {
        let mut j = i;
        while j < y.len() && y[j] == b'b' {
            j += 1;
            if !bytes_contain(t, &y[i..j]) {
                return false;
            }
        }
    }
    true
}

/// [`max_t_b`] and `t` does not occur in `y`.
pub fn max_plus_t_b(t: &[u8], y: &[u8]) -> bool {
    max_t_b(t, y) && !bytes_contain(y, t)
}

/// `u = a u0 a` with `u0` nonempty and `t` a non-occurring bound for `u`.
pub fn pref(u: &[u8], t: &[u8]) -> bool {
    u.len() >= 3 && u[0] == b'a' && u[u.len() - 1] == b'a' && max_plus_t_b(t, u)
}

fn cat(parts: &[&[u8]]) -> Vec<u8> {
    parts.concat()
}

pub fn firstf(x: &[u8], t1: &[u8], u: &[u8], t2: &[u8]) -> bool {
    if !(pref(u, t1) && is_btally(t2)) {
        return false;
    }
    let whole = cat(&[t1, u, t2]);
    let equal_case = t1 == t2 && x == whole.as_slice();
    let open_case = lt(t1, t2) && {
        let head = cat(&[t1, u, t2, b"a"]);
        head.len() < x.len() && x.starts_with(&head)
    };
    equal_case || open_case
}

/// Internal frame with the given left context `w1`.
pub fn intf_at(x: &[u8], w1: &[u8], t1: &[u8], u: &[u8], t2: &[u8]) -> bool {
    if w1.is_empty() {
        return false;
    }
    let head = cat(&[w1, b"a", t1, u, t2, b"a"]);
    let placed = head.len() < x.len() && x.starts_with(&head);
    placed && pref(u, t1) && is_btally(t2) && lt(t1, t2) && max_plus_t_b(t1, w1)
}

/// Internal frame for some left context.
pub fn intf(x: &[u8], t1: &[u8], u: &[u8], t2: &[u8]) -> bool {
    (1..x.len()).any(|k| intf_at(x, &x[..k], t1, u, t2))
}

pub fn lastf(x: &[u8], t1: &[u8], u: &[u8], t2: &[u8]) -> bool {
    if !(pref(u, t1) && t1 == t2) {
        return false;
    }
    let t = t1;
    let tail = cat(&[t, u, t]);
    if x == tail.as_slice() {
        return true;
    }
    let with_a = cat(&[b"a", t, u, t]);
    x.len() > with_a.len() && x.ends_with(&with_a) && {
        let w = &x[..x.len() - with_a.len()];
        max_plus_t_b(t, w)
    }
}

fn flags_bytes(x: &[u8], t1: &[u8], u: &[u8], t2: &[u8]) -> FrameFlags {
    let firstf = firstf(x, t1, u, t2);
    let intf = intf(x, t1, u, t2);
    let lastf = lastf(x, t1, u, t2);
    FrameFlags { firstf, intf, lastf, fr: firstf || intf || lastf }
}

/// Evaluates Firstf, Intf, Lastf and their disjunction for the wrapped
/// element `u` (that is, `a y a`) between markers `t1` and `t2`.
pub fn frame_predicates(x: &BinStr, t1: &Tally, u: &BinStr, t2: &Tally) -> FrameFlags {
    let t1 = t1.to_binstr();
    let t2 = t2.to_binstr();
    flags_bytes(x.as_bytes(), t1.as_bytes(), u.as_bytes(), t2.as_bytes())
}

/// One candidate frame `(t1, u, t2)` with its predicate values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiteralFrame {
    pub t1: usize,
    /// Wrapped element `a y a`.
    pub u: Vec<u8>,
    pub t2: usize,
    pub flags: FrameFlags,
}

impl LiteralFrame {
    pub fn element(&self) -> BinStr {
        BinStr::from_bytes(&self.u[1..self.u.len() - 1]).expect("wrapped element")
    }
}

/// Every triple `(t1, u, t2)` with `t1 u t2` occurring in `x`, `t1`, `t2`
/// `b`-tallies and `u` starting and ending with `a`, whose `Fr` holds.
pub fn literal_frames(x: &BinStr) -> Vec<LiteralFrame> {
    let x = x.as_bytes();
    let n = x.len();
    let mut seen: BTreeSet<(usize, Vec<u8>, usize)> = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..=n {
            let s = &x[i..j];
            let p = s.iter().take_while(|&&c| c == b'b').count();
            let q = s.iter().rev().take_while(|&&c| c == b'b').count();
            if p == 0 || q == 0 || p + q >= s.len() {
                continue;
            }
            seen.insert((p, s[p..s.len() - q].to_vec(), q));
        }
    }
    let mut out = Vec::new();
    for (p, u, q) in seen {
        let t1 = vec![b'b'; p];
        let t2 = vec![b'b'; q];
        let flags = flags_bytes(x, &t1, &u, &t2);
        if flags.fr {
            out.push(LiteralFrame { t1: p, u, t2: q, flags });
        }
    }
    out
}

/// `Env(t, x)` for the `b`-tally of length `t`, given `x`'s literal frames.
pub fn literal_env_with(t: usize, x: &BinStr, frames: &[LiteralFrame]) -> bool {
    let tb = vec![b'b'; t];
    let xb = x.as_bytes();
    if !max_t_b(&tb, xb) {
        return false;
    }
    if !frames.iter().any(|f| f.flags.firstf) {
        return false;
    }
    if !frames.iter().any(|f| f.flags.lastf && f.t1 == t && f.t2 == t) {
        return false;
    }
    for f in frames {
        for g in frames {
            if f.u == g.u && f.t1 != g.t1 {
                return false;
            }
            if f.t1 == g.t1 && f.u != g.u {
                return false;
            }
        }
    }
    true
}

pub fn literal_env(t: usize, x: &BinStr) -> bool {
    literal_env_with(t, x, &literal_frames(x))
}

/// Full literal reading of a code: its frames and, if enveloped, the envelope.
#[derive(Debug, Clone)]
pub struct LiteralCode {
    pub frames: Vec<LiteralFrame>,
    pub envelope: Option<usize>,
    pub is_set: bool,
}

pub fn analyze(x: &BinStr) -> LiteralCode {
    let frames = literal_frames(x);
    if x.as_bytes() == b"aa" {
        return LiteralCode { frames, envelope: None, is_set: true };
    }
    let xb = x.as_bytes();
    let envelope = (1..=x.len())
        .filter(|&t| bytes_contain(xb, &vec![b'b'; t]))
        .find(|&t| literal_env_with(t, x, &frames));
    LiteralCode { is_set: envelope.is_some(), frames, envelope }
}

/// `x = aa` or some `b`-tally occurring in `x` envelopes it.
pub fn literal_is_set(x: &BinStr) -> bool {
    analyze(x).is_set
}

/// Members per the literal membership definition, or `None` if not a set code.
pub fn literal_members(x: &BinStr) -> Option<BTreeSet<BinStr>> {
    let a = analyze(x);
    if !a.is_set {
        return None;
    }
    if a.envelope.is_none() {
        return Some(BTreeSet::new());
    }
    Some(a.frames.iter().map(LiteralFrame::element).collect())
}

/// Literal `u <_x v` on elements (unwrapped), evaluated over the frames of `x`.
pub fn literal_frame_precedes(frames: &[LiteralFrame], u: &BinStr, v: &BinStr) -> bool {
    let wrap = |y: &BinStr| cat(&[b"a", y.as_bytes(), b"a"]);
    let (wu, wv) = (wrap(u), wrap(v));
    for f in frames.iter().filter(|f| f.u == wu) {
        for g in frames.iter().filter(|g| g.u == wv) {
            let first = f.flags.firstf && f.t1 != g.t1;
            let last = g.flags.lastf && f.t1 != g.t1;
            let inner = f.flags.intf && g.flags.intf && (f.t2 == g.t1 || f.t2 < g.t1);
            if first || last || inner {
                return true;
            }
        }
    }
    false
}

/// Literal frame classes derived from the literal frame order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LiteralClass {
    pub first: bool,
    pub free: bool,
    pub bound: bool,
    pub free_plus: bool,
    pub free_minus: bool,
}

/// Classifies each literal frame of a set code by element.
pub fn literal_classes(frames: &[LiteralFrame]) -> BTreeMap<BinStr, LiteralClass> {
    let elems: Vec<BinStr> = frames.iter().map(LiteralFrame::element).collect();
    let prec = |i: usize, j: usize| literal_frame_precedes(frames, &elems[i], &elems[j]);
    let n = frames.len();
    let immediate = |i: usize, j: usize| prec(i, j) && !(0..n).any(|k| prec(i, k) && prec(k, j));
    let mut free = vec![false; n];
    let mut bound = vec![false; n];
    for j in 0..n {
        if frames[j].flags.firstf {
            continue;
        }
        let preds: Vec<usize> = (0..n).filter(|&i| immediate(i, j)).collect();
        free[j] = preds.iter().all(|&i| frames[i].t1 + 1 == frames[j].t1);
        bound[j] = preds.iter().all(|&i| frames[i].t1 + 1 < frames[j].t1);
    }
    let mut out = BTreeMap::new();
    for j in 0..n {
        let first = frames[j].flags.firstf;
        let free_plus = (0..n)
            .filter(|&i| i == j || prec(i, j))
            .all(|i| frames[i].flags.firstf || free[i]);
        out.insert(
            elems[j].clone(),
            LiteralClass {
                first,
                free: free[j],
                bound: bound[j],
                free_plus,
                free_minus: free[j] && !free_plus,
            },
        );
    }
    out
}

/// A frame covering an occurrence, given as opening, wrapped element, closing.
pub type OccWitness = (Tally, BinStr, Tally);

/// Literal occurrence test: the occurrence of `z` between `w1` and `w2`
/// lies within one frame of `x`. `w1` or `w2` may be empty here, encoding an
/// occurrence at either end. Returns the first covering frame found.
pub fn literal_occ(
    w1: &[u8],
    z: &[u8],
    w2: &[u8],
    x: &[u8],
    frames: &[LiteralFrame],
) -> Option<OccWitness> {
    if cat(&[w1, z, w2]).as_slice() != x {
        return None;
    }
    let w1z = cat(&[w1, z]);
    for f in frames {
        let t1 = vec![b'b'; f.t1];
        let t2 = vec![b'b'; f.t2];
        let v = f.u.as_slice();
        let t1v = cat(&[&t1, v]);
        let witness = || (Tally::b(f.t1), BinStr::from_bytes(v).expect("wrapped"), Tally::b(f.t2));
        if f.flags.firstf {
            let starts = w1 == t1.as_slice();
            let inside = w1z.len() < t1v.len() && t1v.starts_with(&w1z);
            let ends = w1z == t1v;
            if starts || inside || ends {
                return Some(witness());
            }
        }
        for k in 1..x.len() {
            let wp = &x[..k];
            let framed = intf_at(x, wp, &t1, v, &t2)
                || (f.flags.lastf && cat(&[wp, b"a", &t1, v, &t2]).as_slice() == x);
            if !framed {
                continue;
            }
            let pre = cat(&[wp, b"a", &t1]);
            let starts = pre.as_slice() == w1;
            let inside = (1..v.len()).any(|m| cat(&[&pre, &v[..m]]) == w1z);
            let ends = cat(&[&pre, v]) == w1z;
            if starts || inside || ends {
                return Some(witness());
            }
        }
    }
    None
}

/// Literal minimality: a set code in which every occurrence of `a` with
/// nonempty context on both sides lies within some frame.
pub fn literal_is_min_set(x: &BinStr) -> bool {
    let a = analyze(x);
    if !a.is_set {
        return false;
    }
    let xb = x.as_bytes();
    (1..xb.len().saturating_sub(1))
        .filter(|&i| xb[i] == Digit::A.as_byte())
        .all(|i| literal_occ(&xb[..i], b"a", &xb[i + 1..], xb, &a.frames).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> BinStr {
        BinStr::lit(x)
    }

    #[test]
    fn single_frame_is_first_and_last() {
        let f = frame_predicates(&s("baaab"), &Tally::b(1), &s("aaa"), &Tally::b(1));
        assert!(f.firstf && f.lastf && f.fr && !f.intf);
    }

    #[test]
    fn absent_marker_fails_every_predicate() {
        let f = frame_predicates(&s("baaab"), &Tally::b(2), &s("aaa"), &Tally::b(1));
        assert_eq!(f, FrameFlags::default());
    }

    #[test]
    fn two_frame_code() {
        let x = s("baaabbababb");
        assert!(frame_predicates(&x, &Tally::b(1), &s("aaa"), &Tally::b(2)).firstf);
        assert!(frame_predicates(&x, &Tally::b(2), &s("aba"), &Tally::b(2)).lastf);
        assert!(literal_is_set(&x));
        assert!(!literal_is_set(&s("aba")));
    }
}
