//! Set codes: words cut by a ladder of `b`-tally markers into frames
//! `t1 a y a t2`, each framing one element `y`.
//!
//! [`parse`] scans maximal `b`-runs for candidate frames and confirms every
//! candidate with [`literal::frame_predicates`]. Set codes may carry junk
//! (stretches covered by no frame); [`is_min_set`] rules it out.

pub mod literal;

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Range;

use thiserror::Error;

use crate::strings::{BinStr, Builder, Digit};
use crate::tally::{max_b_run_bytes, Tally};

/// Position of a frame in its code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FrameKind {
    /// Starts the code. A code with a single frame has only a `First` frame.
    First,
    Internal,
    Last,
}

/// One parsed frame `opening a element a closing`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    pub opening: Tally,
    pub element: BinStr,
    pub closing: Tally,
    pub kind: FrameKind,
    /// Byte range from the start of the opening marker to the end of the
    /// closing marker.
    pub span: Range<usize>,
}

impl Frame {
    /// The frame ends the code (a sole frame is both first and last).
    pub fn is_last(&self, code_len: usize) -> bool {
        self.kind == FrameKind::Last || self.span.end == code_len
    }

    /// Byte range of `a element a`.
    pub fn body(&self) -> Range<usize> {
        let start = self.span.start + self.opening.len;
        start..self.span.end - self.closing.len
    }

    /// Byte offset where the closing marker starts.
    pub fn closing_start(&self) -> usize {
        self.span.end - self.closing.len
    }

    pub fn kind_label(&self, code_len: usize) -> &'static str {
        match self.kind {
            FrameKind::First if self.is_last(code_len) => "first+last",
            FrameKind::First => "first",
            FrameKind::Internal => "internal",
            FrameKind::Last => "last",
        }
    }
}

/// A validated set code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedCode {
    /// The literal `aa`.
    Empty,
    Frames {
        source: BinStr,
        /// In order of position.
        frames: Vec<Frame>,
        envelope: Tally,
    },
}

impl ParsedCode {
    pub fn is_empty(&self) -> bool {
        matches!(self, ParsedCode::Empty)
    }

    pub fn frames(&self) -> &[Frame] {
        match self {
            ParsedCode::Empty => &[],
            ParsedCode::Frames { frames, .. } => frames,
        }
    }

    pub fn envelope(&self) -> Option<Tally> {
        match self {
            ParsedCode::Empty => None,
            ParsedCode::Frames { envelope, .. } => Some(*envelope),
        }
    }

    /// The original code, byte for byte.
    pub fn serialize(&self) -> BinStr {
        match self {
            ParsedCode::Empty => BinStr::empty_code(),
            ParsedCode::Frames { source, .. } => source.clone(),
        }
    }

    /// Elements in frame order.
    pub fn elements(&self) -> Vec<BinStr> {
        self.frames().iter().map(|f| f.element.clone()).collect()
    }

    pub fn members(&self) -> BTreeSet<BinStr> {
        self.frames().iter().map(|f| f.element.clone()).collect()
    }

    /// Index of the frame holding `y`.
    pub fn index_of(&self, y: &BinStr) -> Option<usize> {
        self.frames().iter().position(|f| &f.element == y)
    }

    /// Adjacent frames share markers and nothing lies outside the frames.
    pub fn is_contiguous(&self) -> bool {
        let fs = self.frames();
        match self {
            ParsedCode::Empty => true,
            ParsedCode::Frames { source, .. } => {
                fs[0].span.start == 0
                    && fs.last().map(|f| f.span.end) == Some(source.len())
                    && fs.windows(2).all(|w| w[0].closing_start() == w[1].span.start)
            }
        }
    }
}

/// The first Env clause a string violates, in checking order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Clause {
    /// No closing frame ends the code with a marker bounding every `b`-run.
    EnvelopeMissing,
    /// The code starts with `a`: digits precede the first marker.
    DanglingDigits,
    /// The leading run does not open a first frame.
    LadderBroken,
    /// Two frames carry the same element.
    DuplicateElement,
    /// Two frames share an opening marker.
    DuplicateMarker,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Clause::EnvelopeMissing => "no envelope",
            Clause::DanglingDigits => "dangling digits",
            Clause::LadderBroken => "marker ladder broken",
            Clause::DuplicateElement => "duplicate element",
            Clause::DuplicateMarker => "duplicate marker",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrameError {
    #[error("not a set code ({0})")]
    NotASetCode(Clause),
    #[error("decomposition does not reproduce the code")]
    DecompositionMismatch,
}

#[derive(Debug, Clone, Copy)]
struct Run {
    start: usize,
    len: usize,
}

fn b_runs(x: &[u8]) -> Vec<Run> {
    let mut runs = Vec::new();
    let mut i = 0;
    while i < x.len() {
        if x[i] == b'b' {
            let start = i;
            while i < x.len() && x[i] == b'b' {
                i += 1;
            }
            runs.push(Run { start, len: i - start });
        } else {
            i += 1;
        }
    }
    runs
}

/// Frames opened by the leading run or by a run longer than everything before it.
fn candidate_frames(x: &BinStr) -> Vec<Frame> {
    let xb = x.as_bytes();
    let n = xb.len();
    let runs = b_runs(xb);
    let mut out = Vec::new();
    for (i, r) in runs.iter().enumerate() {
        let opens = r.start == 0 || (r.start >= 2 && max_b_run_bytes(&xb[..r.start - 1]) < r.len);
        if !opens {
            continue;
        }
        let Some(next) = runs[i + 1..].iter().find(|s| s.len >= r.len) else {
            continue;
        };
        let body = r.start + r.len..next.start;
        if body.len() < 3 {
            continue;
        }
        let end = next.start + next.len;
        let kind = if next.len > r.len && end < n {
            if r.start == 0 {
                FrameKind::First
            } else {
                FrameKind::Internal
            }
        } else if next.len == r.len && end == n {
            if r.start == 0 {
                FrameKind::First
            } else {
                FrameKind::Last
            }
        } else {
            continue;
        };
        let frame = Frame {
            opening: Tally::b(r.len),
            element: BinStr::from_bytes(&xb[body.start + 1..body.end - 1]).expect("body"),
            closing: Tally::b(next.len),
            kind,
            span: r.start..end,
        };
        let wrapped = BinStr::from_bytes(&xb[body]).expect("body");
        let flags = literal::frame_predicates(x, &frame.opening, &wrapped, &frame.closing);
        let confirmed = match kind {
            FrameKind::First => flags.firstf,
            FrameKind::Internal => flags.intf,
            FrameKind::Last => flags.lastf,
        };
        if confirmed {
            out.push(frame);
        }
    }
    out
}

/// Parses a set code into frames, or names the first violated clause.
pub fn parse(x: &BinStr) -> Result<ParsedCode, FrameError> {
    if x.as_bytes() == b"aa" {
        return Ok(ParsedCode::Empty);
    }
    let frames = candidate_frames(x);
    let n = x.len();
    let envelope = frames
        .iter()
        .find(|f| f.span.end == n && f.opening == f.closing)
        .map(|f| f.closing)
        .filter(|t| t.len >= max_b_run_bytes(x.as_bytes()));
    let Some(envelope) = envelope else {
        return Err(FrameError::NotASetCode(Clause::EnvelopeMissing));
    };
    if x.first() == Digit::A {
        return Err(FrameError::NotASetCode(Clause::DanglingDigits));
    }
    if frames.first().map(|f| f.kind) != Some(FrameKind::First) {
        return Err(FrameError::NotASetCode(Clause::LadderBroken));
    }
    let mut elems = BTreeSet::new();
    let mut markers = BTreeSet::new();
    for f in &frames {
        if !elems.insert(&f.element) {
            return Err(FrameError::NotASetCode(Clause::DuplicateElement));
        }
        if !markers.insert(f.opening.len) {
            return Err(FrameError::NotASetCode(Clause::DuplicateMarker));
        }
    }
    Ok(ParsedCode::Frames { source: x.clone(), frames, envelope })
}

pub fn is_set(x: &BinStr) -> bool {
    parse(x).is_ok()
}

pub fn members(x: &BinStr) -> Result<BTreeSet<BinStr>, FrameError> {
    parse(x).map(|p| p.members())
}

/// `y` is framed in the set code `x`; false on non-codes.
pub fn is_member(y: &BinStr, x: &BinStr) -> bool {
    parse(x).map(|p| p.index_of(y).is_some()).unwrap_or(false)
}

/// Both are set codes with the same members.
pub fn set_equiv(x: &BinStr, y: &BinStr) -> bool {
    match (members(x), members(y)) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    }
}

/// Serializes a contiguous chain of frames from openings and elements; the
/// last frame closes with its own opening.
///
/// # Panics
/// Panics if `frames` is empty.
pub fn serialize_chain(frames: &[(usize, &BinStr)]) -> BinStr {
    assert!(!frames.is_empty(), "a frame chain needs at least one frame");
    let mut out = Builder::new();
    for (m, e) in frames {
        out.push_run(Digit::B, *m).push(Digit::A).push_str(e).push(Digit::A);
    }
    out.push_run(Digit::B, frames.last().expect("nonempty").0);
    out.finish()
}

/// Occurrence witness: the frame of `x` covering the occurrence of `z`
/// between `w1` and `w2`, as opening marker, wrapped element and closing
/// marker.
pub fn occurs_in_frame(
    w1: &BinStr,
    z: &BinStr,
    w2: &BinStr,
    x: &BinStr,
) -> Result<Option<literal::OccWitness>, FrameError> {
    let whole = Builder::new().push_str(w1).push_str(z).push_str(w2).finish();
    if &whole != x {
        return Err(FrameError::DecompositionMismatch);
    }
    let frames = literal::literal_frames(x);
    Ok(literal::literal_occ(w1.as_bytes(), z.as_bytes(), w2.as_bytes(), x.as_bytes(), &frames))
}

/// A set code in which every `a` lies inside some frame.
pub fn is_min_set(x: &BinStr) -> bool {
    match parse(x) {
        Ok(ParsedCode::Empty) => true,
        Ok(p) => {
            let xb = x.as_bytes();
            (0..xb.len())
                .filter(|&i| xb[i] == b'a')
                .all(|i| p.frames().iter().any(|f| f.body().contains(&i)))
        }
        Err(_) => false,
    }
}

/// Position of a frame relative to its predecessor's opening marker.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassKind {
    First,
    /// Opening is the predecessor's opening plus one `b`.
    Free,
    /// Opening exceeds the predecessor's opening by at least two `b`s.
    Bound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FrameClass {
    pub kind: ClassKind,
    /// This frame and every earlier one is first or free.
    pub free_plus: bool,
    /// Free but preceded by a bound frame.
    pub free_minus: bool,
}

impl fmt::Display for FrameClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match self.kind {
            ClassKind::First => "first",
            ClassKind::Free => "free",
            ClassKind::Bound => "bound",
        };
        let flag = if self.free_plus {
            "+"
        } else if self.free_minus {
            "-"
        } else {
            ""
        };
        write!(f, "{base}{flag}")
    }
}

pub fn classify_frames(p: &ParsedCode) -> Vec<FrameClass> {
    let mut out: Vec<FrameClass> = Vec::new();
    let mut prefix_free = true;
    for (i, f) in p.frames().iter().enumerate() {
        let kind = if i == 0 {
            ClassKind::First
        } else if p.frames()[i - 1].opening.len + 1 == f.opening.len {
            ClassKind::Free
        } else {
            ClassKind::Bound
        };
        prefix_free &= kind != ClassKind::Bound;
        out.push(FrameClass {
            kind,
            free_plus: prefix_free,
            free_minus: kind == ClassKind::Free && !prefix_free,
        });
    }
    out
}

/// One line per frame: `opening<TAB>element<TAB>closing<TAB>kind<TAB>class`.
pub fn frame_table(p: &ParsedCode) -> String {
    let n = p.serialize().len();
    let classes = classify_frames(p);
    let mut s = String::new();
    for (f, c) in p.frames().iter().zip(classes) {
        s.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\n",
            f.opening,
            f.element,
            f.closing,
            f.kind_label(n),
            c
        ));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> BinStr {
        BinStr::lit(x)
    }

    #[test]
    fn parses_two_frames() {
        let p = parse(&s("baaabbababb")).unwrap();
        let fs = p.frames();
        assert_eq!(fs.len(), 2);
        assert_eq!((fs[0].opening.len, fs[0].element.as_str(), fs[0].closing.len), (1, "a", 2));
        assert_eq!((fs[1].opening.len, fs[1].element.as_str(), fs[1].closing.len), (2, "b", 2));
        assert_eq!(fs[1].kind, FrameKind::Last);
        assert_eq!(p.envelope(), Some(Tally::b(2)));
    }

    #[test]
    fn rejects_with_clause() {
        assert_eq!(parse(&s("aba")), Err(FrameError::NotASetCode(Clause::EnvelopeMissing)));
        assert_eq!(parse(&s("b")), Err(FrameError::NotASetCode(Clause::EnvelopeMissing)));
    }

    #[test]
    fn chain_serialization() {
        let a = s("a");
        let b = s("b");
        assert_eq!(serialize_chain(&[(1, &a), (2, &b)]).as_str(), "baaabbababb");
    }
}
