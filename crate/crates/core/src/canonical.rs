//! Canonical set codes and the operations on codes.
//!
//! A canonical code is minimal (no junk), lists its members in increasing
//! [`precedes`] order and opens each frame with the shortest admissible
//! marker. Its marker lengths follow
//! `m_i = max(max_b_run(e_i) + 1, m_{i-1} + 1)` with `m_0 = 0`, so every
//! finite set has exactly one canonical code.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::frames::{
    classify_frames, is_min_set, parse, serialize_chain, FrameError, FrameKind, ParsedCode,
};
use crate::order::{is_lex_plus_parsed, max_below_parsed, precedes, precedes_cmp};
use crate::strings::{all_strings, BinStr, Builder, Digit};
use crate::tally::{max_b_run, tally_class};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error("not a minimal set code: some digit lies outside every frame")]
    NotMinSet,
    #[error("not a canonical set code")]
    NotSetStar,
    #[error("frame {index} is not an internal frame")]
    NotInternalFrame { index: usize },
}

/// A code known to be canonical, with its parse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetStarCode {
    pub code: BinStr,
    pub parsed: ParsedCode,
}

impl fmt::Display for SetStarCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.code.fmt(f)
    }
}

/// Every opening marker is the least one exceeding both the element's
/// `b`-runs and all earlier openings. Minimality is checked by search over
/// marker lengths up to the envelope plus one.
pub fn is_special(x: &BinStr) -> bool {
    parse(x).map(|p| is_special_parsed(&p)).unwrap_or(false)
}

pub fn is_special_parsed(p: &ParsedCode) -> bool {
    let Some(env) = p.envelope() else {
        return true;
    };
    let fs = p.frames();
    // Bounds every marker of frames earlier in frame order.
    let max_plus = |t: usize, i: usize| fs[..i].iter().all(|f| f.opening.len < t);
    fs.iter().enumerate().all(|(i, f)| {
        let t = f.opening.len;
        let r = max_b_run(&f.element);
        max_plus(t, i) && (1..=env.len + 1).all(|t2| !(max_plus(t2, i) && t2 > r) || t <= t2)
    })
}

/// Minimal, lexically ordered and special.
pub fn is_set_star(x: &BinStr) -> bool {
    parse(x).map(|p| is_set_star_parsed(&p)).unwrap_or(false)
}

pub fn is_set_star_parsed(p: &ParsedCode) -> bool {
    is_min_set(&p.serialize()) && is_lex_plus_parsed(p) && is_special_parsed(p)
}

/// Marker lengths for elements already sorted by [`precedes`].
pub fn marker_lengths(sorted: &[BinStr]) -> Vec<usize> {
    let mut prev = 0;
    sorted
        .iter()
        .map(|e| {
            prev = tally_class(e).max(prev + 1);
            prev
        })
        .collect()
}

/// The canonical code of a finite set of words.
pub fn encode_canonical<I>(elems: I) -> SetStarCode
where
    I: IntoIterator<Item = BinStr>,
{
    let set: BTreeSet<BinStr> = elems.into_iter().collect();
    let mut sorted: Vec<BinStr> = set.into_iter().collect();
    if sorted.is_empty() {
        return SetStarCode { code: BinStr::empty_code(), parsed: ParsedCode::Empty };
    }
    sorted.sort_by(precedes_cmp);
    let marks = marker_lengths(&sorted);
    let chain: Vec<(usize, &BinStr)> = marks.iter().copied().zip(sorted.iter()).collect();
    let code = serialize_chain(&chain);
    let parsed = parse(&code).expect("canonical chains parse");
    SetStarCode { code, parsed }
}

fn wrap_frame(out: &mut Builder, marker: usize, y: &BinStr) {
    out.push_run(Digit::B, marker).push(Digit::A).push_str(y).push(Digit::A);
}

/// Naive adjunction: appends a frame for `y` behind `x`, lengthening the
/// closing marker. The result is a set code but generally not canonical.
pub fn adjoin_simple(x: &BinStr, y: &BinStr) -> Result<BinStr, CanonError> {
    let p = parse(x)?;
    if p.index_of(y).is_some() {
        return Ok(x.clone());
    }
    let tp = tally_class(y);
    let mut out = Builder::new();
    match p.envelope() {
        None => {
            wrap_frame(&mut out, tp, y);
            out.push_run(Digit::B, tp);
        }
        Some(t) => {
            out.push_str(x).push_run(Digit::B, tp);
            out.push(Digit::A).push_str(y).push(Digit::A);
            out.push_run(Digit::B, t.len + tp);
        }
    }
    Ok(out.finish())
}

fn parse_min_set(x: &BinStr) -> Result<ParsedCode, CanonError> {
    let p = parse(x)?;
    if !is_min_set(x) {
        return Err(CanonError::NotMinSet);
    }
    Ok(p)
}

/// Removes `y` by excising its frame; every other element keeps its opening
/// marker.
pub fn subtract(x: &BinStr, y: &BinStr) -> Result<BinStr, CanonError> {
    let p = parse_min_set(x)?;
    let Some(k) = p.index_of(y) else {
        return Ok(x.clone());
    };
    let fs = p.frames();
    let xb = x.as_bytes();
    let n = fs.len();
    if n == 1 {
        return Ok(BinStr::empty_code());
    }
    let mut out = Builder::new();
    if k == 0 {
        out.push_bytes(&xb[fs[1].span.start..]);
    } else if k + 1 < n {
        out.push_bytes(&xb[..fs[k].span.start]).push_bytes(&xb[fs[k + 1].span.start..]);
    } else {
        out.push_bytes(&xb[..fs[k].span.start]).push_run(Digit::B, fs[k - 1].opening.len);
    }
    Ok(out.finish())
}

/// The canonical code of `members(x)` without `y`.
pub fn subtract_canonical(x: &BinStr, y: &BinStr) -> Result<SetStarCode, CanonError> {
    let mut m = parse(x)?.members();
    m.remove(y);
    Ok(encode_canonical(m))
}

/// Splits a minimal code before internal frame `k`: the head closes with
/// frame `k - 1`'s opening marker, the tail starts at frame `k`'s opening.
pub fn resolve(x: &BinStr, k: usize) -> Result<(BinStr, BinStr), CanonError> {
    let p = parse_min_set(x)?;
    let fs = p.frames();
    if k >= fs.len() || fs[k].kind != FrameKind::Internal {
        return Err(CanonError::NotInternalFrame { index: k });
    }
    let xb = x.as_bytes();
    let split = fs[k].span.start;
    let head = Builder::new().push_bytes(&xb[..split]).push_run(Digit::B, fs[k - 1].opening.len).finish();
    let tail = BinStr::from_bytes(&xb[split..]).expect("nonempty tail");
    Ok((head, tail))
}

/// Lengthens the opening marker of every frame in the leading run of first
/// and free frames by one `b`; later markers stay put.
pub fn remark(z: &BinStr) -> Result<BinStr, CanonError> {
    let p = parse_min_set(z)?;
    Ok(remark_parsed(&p))
}

fn remark_parsed(p: &ParsedCode) -> BinStr {
    if p.is_empty() {
        return BinStr::empty_code();
    }
    let classes = classify_frames(p);
    let chain: Vec<(usize, &BinStr)> = p
        .frames()
        .iter()
        .zip(&classes)
        .map(|(f, c)| (f.opening.len + usize::from(c.free_plus), &f.element))
        .collect();
    serialize_chain(&chain)
}

/// `z2` is a minimal code of the same set as `z`, in the same frame order,
/// with leading first/free markers one longer and every other marker kept.
pub fn remark_relation(z: &BinStr, z2: &BinStr) -> bool {
    let (Ok(p), Ok(q)) = (parse(z), parse(z2)) else {
        return false;
    };
    if !is_min_set(z2) || p.members() != q.members() || p.elements() != q.elements() {
        return false;
    }
    let classes = classify_frames(&p);
    p.frames().iter().zip(&classes).all(|(f, c)| {
        let g = &q.frames()[q.index_of(&f.element).expect("same members")];
        if c.free_plus {
            g.opening.len == f.opening.len + 1
        } else {
            g.opening.len == f.opening.len
        }
    })
}

/// Branch of the canonical adjunction ladder that produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AdjoinCase {
    EmptyBase,
    AlreadyMember,
    /// All members precede `y`; the envelope grows to `y`'s class.
    AppendGrowEnvelope,
    /// All members precede `y`; the envelope grows by one `b`.
    AppendBumpEnvelope,
    /// `y` precedes all members and has a smaller class than the first.
    PrependFresh,
    /// `y` precedes all members within the first member's class.
    PrependRemark,
    /// After the first frame; classes strictly increase around `y`.
    AfterFirstFresh,
    /// After the first frame; `y` shares the next member's class.
    AfterFirstRemark,
    /// After the first frame; `y` shares the first member's class and its
    /// bumped marker collides with the next opening.
    AfterFirstBumpRemark,
    /// As above without collision.
    AfterFirstBumpFresh,
    /// After the first frame; all three share one class.
    AfterFirstSameClassRemark,
    /// After an internal frame opening below `y`'s class.
    AfterInternalFresh,
    /// After an internal frame opening at `y`'s class; collision.
    AfterInternalEqualRemark,
    /// After an internal frame opening at `y`'s class; no collision.
    AfterInternalEqualFresh,
    /// After an internal frame opening above `y`'s class; no collision.
    AfterInternalAboveFresh,
    /// After an internal frame opening above `y`'s class; collision.
    AfterInternalAboveRemark,
    /// After an internal frame; `y` shares the next member's class only.
    AfterInternalNextClassRemark,
    /// After an internal frame; all three share one class.
    AfterInternalSameClassRemark,
}

fn finish(code: BinStr) -> SetStarCode {
    let parsed = parse(&code).expect("adjunction yields a set code");
    SetStarCode { code, parsed }
}

/// Canonical adjunction: the canonical code of `members(x)` plus `y`.
pub fn adjoin(x: &BinStr, y: &BinStr) -> Result<SetStarCode, CanonError> {
    adjoin_traced(x, y).map(|(c, _)| c)
}

/// [`adjoin`] together with the ladder branch taken.
pub fn adjoin_traced(x: &BinStr, y: &BinStr) -> Result<(SetStarCode, AdjoinCase), CanonError> {
    let p = parse(x)?;
    if !is_set_star_parsed(&p) {
        return Err(CanonError::NotSetStar);
    }
    let t0 = tally_class(y);
    let mut out = Builder::new();
    if p.is_empty() {
        wrap_frame(&mut out, t0, y);
        out.push_run(Digit::B, t0);
        return Ok((finish(out.finish()), AdjoinCase::EmptyBase));
    }
    if p.index_of(y).is_some() {
        return Ok((SetStarCode { code: x.clone(), parsed: p }, AdjoinCase::AlreadyMember));
    }
    let fs = p.frames();
    let xb = x.as_bytes();
    let n = fs.len();
    let t = p.envelope().expect("nonempty code").len;

    if fs.iter().all(|f| precedes(&f.element, y)) {
        out.push_str(x);
        let case = if t < t0 {
            out.push_run(Digit::B, t0 - t).push(Digit::A).push_str(y).push(Digit::A);
            out.push_run(Digit::B, t0);
            AdjoinCase::AppendGrowEnvelope
        } else {
            out.push(Digit::B).push(Digit::A).push_str(y).push(Digit::A);
            out.push_run(Digit::B, t + 1);
            AdjoinCase::AppendBumpEnvelope
        };
        return Ok((finish(out.finish()), case));
    }

    let Some(k) = max_below_parsed(&p, y) else {
        // Every member follows y.
        let tpp = tally_class(&fs[0].element);
        wrap_frame(&mut out, t0, y);
        let case = if t0 < tpp {
            out.push_str(x);
            AdjoinCase::PrependFresh
        } else {
            out.push_str(&remark_parsed(&p));
            AdjoinCase::PrependRemark
        };
        return Ok((finish(out.finish()), case));
    };

    let u0 = &fs[k];
    let t1 = u0.opening.len;
    out.push_bytes(&xb[..u0.closing_start()]);
    // A last predecessor means every member precedes y, handled above.
    debug_assert!(k + 1 < n);

    let t2 = u0.closing.len;
    let tpp = tally_class(&fs[k + 1].element);
    let x_minus = BinStr::from_bytes(&xb[fs[k + 1].span.start..]).expect("nonempty suffix");
    let rest_remarked = || remark(&x_minus);
    let u0_below = tally_class(&u0.element) < t0;
    let y_below = t0 < tpp;

    let case = match (u0.kind, u0_below, y_below) {
        (FrameKind::First, true, true) => {
            wrap_frame(&mut out, t0, y);
            out.push_str(&x_minus);
            AdjoinCase::AfterFirstFresh
        }
        (FrameKind::First, true, false) => {
            wrap_frame(&mut out, t0, y);
            out.push_str(&rest_remarked()?);
            AdjoinCase::AfterFirstRemark
        }
        (FrameKind::First, false, true) => {
            if t0 + 1 == tpp {
                let mut inner = Builder::new();
                wrap_frame(&mut inner, t0, y);
                inner.push_str(&x_minus);
                out.push_str(&remark(&inner.finish())?);
                AdjoinCase::AfterFirstBumpRemark
            } else {
                wrap_frame(&mut out, t0 + 1, y);
                out.push_str(&x_minus);
                AdjoinCase::AfterFirstBumpFresh
            }
        }
        (FrameKind::First, false, false) => {
            wrap_frame(&mut out, t1 + 1, y);
            out.push_str(&rest_remarked()?);
            AdjoinCase::AfterFirstSameClassRemark
        }
        (_, _, true) => {
            if t1 < t0 {
                wrap_frame(&mut out, t0, y);
                out.push_str(&x_minus);
                AdjoinCase::AfterInternalFresh
            } else if t1 == t0 {
                if t0 + 1 == tpp {
                    let mut inner = Builder::new();
                    wrap_frame(&mut inner, t0, y);
                    inner.push_str(&x_minus);
                    out.push_str(&remark(&inner.finish())?);
                    AdjoinCase::AfterInternalEqualRemark
                } else {
                    wrap_frame(&mut out, t0 + 1, y);
                    out.push_str(&x_minus);
                    AdjoinCase::AfterInternalEqualFresh
                }
            } else if t1 + 1 < t2 {
                wrap_frame(&mut out, t1 + 1, y);
                out.push_str(&x_minus);
                AdjoinCase::AfterInternalAboveFresh
            } else {
                wrap_frame(&mut out, t1 + 1, y);
                out.push_str(&rest_remarked()?);
                AdjoinCase::AfterInternalAboveRemark
            }
        }
        (_, true, false) => {
            wrap_frame(&mut out, t2, y);
            out.push_str(&rest_remarked()?);
            AdjoinCase::AfterInternalNextClassRemark
        }
        (_, false, false) => {
            wrap_frame(&mut out, t1 + 1, y);
            out.push_str(&rest_remarked()?);
            AdjoinCase::AfterInternalSameClassRemark
        }
    };
    Ok((finish(out.finish()), case))
}

/// Result of partitioning canonical codes by member set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub max_len: usize,
    pub scanned: usize,
    pub set_codes: usize,
    pub canonical_codes: usize,
    /// Canonical codes per member set.
    pub classes: BTreeMap<BTreeSet<BinStr>, Vec<BinStr>>,
}

impl CensusReport {
    /// Member sets with more than one canonical code.
    pub fn duplicates(&self) -> Vec<(&BTreeSet<BinStr>, &Vec<BinStr>)> {
        self.classes.iter().filter(|(_, v)| v.len() > 1).collect()
    }
}

/// Scans every word of length up to `max_len` and groups the canonical
/// codes by the set they encode.
pub fn uniqueness_census(max_len: usize) -> CensusReport {
    let mut report = CensusReport {
        max_len,
        scanned: 0,
        set_codes: 0,
        canonical_codes: 0,
        classes: BTreeMap::new(),
    };
    for x in all_strings(max_len) {
        report.scanned += 1;
        let Ok(p) = parse(&x) else { continue };
        report.set_codes += 1;
        if is_set_star_parsed(&p) {
            report.canonical_codes += 1;
            report.classes.entry(p.members()).or_default().push(x);
        }
    }
    report
}

/// Every canonical code of length up to `max_len`, shortest first.
pub fn canonical_codes(max_len: usize) -> Vec<BinStr> {
    all_strings(max_len).into_iter().filter(is_set_star).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> BinStr {
        BinStr::lit(x)
    }

    #[test]
    fn encodes_small_sets() {
        assert_eq!(encode_canonical([]).code.as_str(), "aa");
        assert_eq!(encode_canonical([s("a")]).code.as_str(), "baaab");
        assert_eq!(encode_canonical([s("b"), s("a")]).code.as_str(), "baaabbababb");
        assert_eq!(encode_canonical([s("a"), s("abba")]).code.as_str(), "baaabbbaabbaabbb");
    }

    #[test]
    fn remark_examples() {
        assert_eq!(remark(&s("baaab")).unwrap().as_str(), "bbaaabb");
        assert_eq!(remark(&s("baaabbababb")).unwrap().as_str(), "bbaaabbbababbb");
        assert_eq!(remark(&s("baaabbbaabbaabbb")).unwrap().as_str(), "bbaaabbbaabbaabbb");
    }
}
