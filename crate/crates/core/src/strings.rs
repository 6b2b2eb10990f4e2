//! Nonempty words over the two-letter alphabet `{a, b}` and the
//! concatenation algebra on them: juxtaposition, proper initial and
//! terminal segments, substrings, successor and the prefix order.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use thiserror::Error;

/// One of the two atoms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Digit {
    A,
    B,
}

impl Digit {
    pub fn as_byte(self) -> u8 {
        match self {
            Digit::A => b'a',
            Digit::B => b'b',
        }
    }

    pub fn from_byte(c: u8) -> Option<Digit> {
        match c {
            b'a' => Some(Digit::A),
            b'b' => Some(Digit::B),
            _ => None,
        }
    }
}

impl fmt::Display for Digit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_byte() as char)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrError {
    #[error("empty string: words must have at least one digit")]
    Empty,
    #[error("invalid digit {found:?} at position {pos}: only 'a' and 'b' are allowed")]
    BadDigit { pos: usize, found: char },
}

/// A nonempty word over `{a, b}`.
///
/// The derived `Ord` is plain byte order (a proper prefix sorts first); it
/// exists for use as a map key and coincides with lexical precedence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinStr(Vec<u8>);

impl BinStr {
    /// Parses the `[ab]+` text form.
    pub fn parse(s: &str) -> Result<BinStr, StrError> {
        if s.is_empty() {
            return Err(StrError::Empty);
        }
        for (pos, c) in s.chars().enumerate() {
            if c != 'a' && c != 'b' {
                return Err(StrError::BadDigit { pos, found: c });
            }
        }
        Ok(BinStr(s.as_bytes().to_vec()))
    }

    /// Parses a literal known to be valid.
    ///
    /// # Panics
    /// Panics if `s` is not of the form `[ab]+`.
    pub fn lit(s: &str) -> BinStr {
        match BinStr::parse(s) {
            Ok(x) => x,
            Err(e) => panic!("invalid BinStr literal {s:?}: {e}"),
        }
    }

    /// Builds a word from raw `a`/`b` bytes; `None` if empty or invalid.
    pub fn from_bytes(bytes: &[u8]) -> Option<BinStr> {
        if bytes.is_empty() || bytes.iter().any(|&c| c != b'a' && c != b'b') {
            return None;
        }
        Some(BinStr(bytes.to_vec()))
    }

    pub fn from_digits(digits: &[Digit]) -> Option<BinStr> {
        if digits.is_empty() {
            return None;
        }
        Some(BinStr(digits.iter().map(|d| d.as_byte()).collect()))
    }

    /// `d` repeated `n` times; `None` when `n == 0`.
    pub fn repeat(d: Digit, n: usize) -> Option<BinStr> {
        if n == 0 {
            None
        } else {
            Some(BinStr(vec![d.as_byte(); n]))
        }
    }

    pub fn digit(d: Digit) -> BinStr {
        BinStr(vec![d.as_byte()])
    }

    pub fn a() -> BinStr {
        BinStr::digit(Digit::A)
    }

    pub fn b() -> BinStr {
        BinStr::digit(Digit::B)
    }

    /// The empty-set code `aa`.
    pub fn empty_code() -> BinStr {
        BinStr(b"aa".to_vec())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; present for API symmetry with collections.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        // Invariant: only ASCII 'a' and 'b'.
        std::str::from_utf8(&self.0).expect("ascii")
    }

    pub fn digit_at(&self, i: usize) -> Option<Digit> {
        self.0.get(i).and_then(|&c| Digit::from_byte(c))
    }

    pub fn digits(&self) -> impl Iterator<Item = Digit> + '_ {
        self.0.iter().map(|&c| Digit::from_byte(c).expect("valid digit"))
    }

    pub fn first(&self) -> Digit {
        self.digit_at(0).expect("nonempty")
    }

    pub fn last(&self) -> Digit {
        self.digit_at(self.len() - 1).expect("nonempty")
    }

    /// The segment at `range`; `None` if it is empty or out of bounds.
    pub fn slice(&self, range: Range<usize>) -> Option<BinStr> {
        if range.start >= range.end || range.end > self.len() {
            return None;
        }
        Some(BinStr(self.0[range].to_vec()))
    }

    pub fn concat(&self, other: &BinStr) -> BinStr {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        BinStr(v)
    }

    /// Concatenation of a nonempty list of parts.
    pub fn join(parts: &[&BinStr]) -> Option<BinStr> {
        let mut v = Vec::new();
        for p in parts {
            v.extend_from_slice(&p.0);
        }
        if v.is_empty() {
            None
        } else {
            Some(BinStr(v))
        }
    }

    pub fn push(&mut self, d: Digit) {
        self.0.push(d.as_byte());
    }

    pub fn extend(&mut self, other: &BinStr) {
        self.0.extend_from_slice(&other.0);
    }
}

impl fmt::Display for BinStr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for BinStr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.as_str())
    }
}

impl FromStr for BinStr {
    type Err = StrError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BinStr::parse(s)
    }
}

/// Incremental builder for words assembled from pieces.
#[derive(Debug, Default, Clone)]
pub struct Builder(Vec<u8>);

impl Builder {
    pub fn new() -> Builder {
        Builder(Vec::new())
    }

    pub fn push(&mut self, d: Digit) -> &mut Self {
        self.0.push(d.as_byte());
        self
    }

    pub fn push_str(&mut self, s: &BinStr) -> &mut Self {
        self.0.extend_from_slice(s.as_bytes());
        self
    }

    pub fn push_bytes(&mut self, s: &[u8]) -> &mut Self {
        self.0.extend_from_slice(s);
        self
    }

    pub fn push_run(&mut self, d: Digit, n: usize) -> &mut Self {
        self.0.extend(std::iter::repeat(d.as_byte()).take(n));
        self
    }

    /// # Panics
    /// Panics if nothing was pushed.
    pub fn finish(&self) -> BinStr {
        assert!(!self.0.is_empty(), "builder produced an empty word");
        BinStr(self.0.clone())
    }
}

pub fn concat(x: &BinStr, y: &BinStr) -> BinStr {
    x.concat(y)
}

/// `xBy`: `x` is a proper initial segment of `y`.
pub fn is_initial(x: &BinStr, y: &BinStr) -> bool {
    x.len() < y.len() && y.as_bytes().starts_with(x.as_bytes())
}

/// `xEy`: `x` is a proper terminal segment of `y`.
pub fn is_terminal(x: &BinStr, y: &BinStr) -> bool {
    x.len() < y.len() && y.as_bytes().ends_with(x.as_bytes())
}

/// Reflexive contiguous-occurrence relation.
pub fn is_substring(x: &BinStr, y: &BinStr) -> bool {
    bytes_contain(y.as_bytes(), x.as_bytes())
}

pub(crate) fn bytes_contain(hay: &[u8], needle: &[u8]) -> bool {
    needle.len() <= hay.len() && hay.windows(needle.len()).any(|w| w == needle)
}

/// `S x`: `b` for `a`, otherwise `x` followed by `b`.
pub fn successor(x: &BinStr) -> BinStr {
    if x.as_bytes() == b"a" {
        BinStr::b()
    } else {
        let mut y = x.clone();
        y.push(Digit::B);
        y
    }
}

/// Strict relation `xRy`: `x = a` and `y != a`, or `x` is a proper prefix of `y`.
pub fn lt(x: &BinStr, y: &BinStr) -> bool {
    (x.as_bytes() == b"a" && y.as_bytes() != b"a") || is_initial(x, y)
}

/// `x <= y`: `x = y` or `xRy`.
pub fn leq(x: &BinStr, y: &BinStr) -> bool {
    x == y || lt(x, y)
}

/// Every word of length exactly `n` in lexicographic order.
pub fn strings_of_len(n: usize) -> Vec<BinStr> {
    if n == 0 {
        return Vec::new();
    }
    assert!(n < usize::BITS as usize, "length too large to enumerate");
    (0..(1usize << n))
        .map(|bits| {
            let v = (0..n)
                .map(|i| if bits >> (n - 1 - i) & 1 == 1 { b'b' } else { b'a' })
                .collect();
            BinStr(v)
        })
        .collect()
}

/// Every word of length `1..=max_len`, shortest first, then lexicographic.
pub fn all_strings(max_len: usize) -> Vec<BinStr> {
    (1..=max_len).flat_map(strings_of_len).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rejects_empty_and_foreign_digits() {
        assert_eq!(BinStr::parse(""), Err(StrError::Empty));
        assert_eq!(
            BinStr::parse("abc"),
            Err(StrError::BadDigit { pos: 2, found: 'c' })
        );
        assert_eq!(BinStr::parse("ab").unwrap().as_str(), "ab");
    }

    #[test]
    fn enumeration_counts_and_order() {
        let all = all_strings(3);
        assert_eq!(all.len(), 2 + 4 + 8);
        assert_eq!(all[0].as_str(), "a");
        assert_eq!(all[2].as_str(), "aa");
        assert_eq!(all.last().unwrap().as_str(), "bbb");
    }

    #[test]
    fn successor_cases() {
        assert_eq!(successor(&BinStr::lit("a")).as_str(), "b");
        assert_eq!(successor(&BinStr::lit("b")).as_str(), "bb");
        assert_eq!(successor(&BinStr::lit("ab")).as_str(), "abb");
    }

    #[test]
    fn segment_relations_are_strict() {
        let ab = BinStr::lit("ab");
        assert!(!is_initial(&ab, &ab));
        assert!(!is_terminal(&ab, &ab));
        assert!(is_substring(&ab, &ab));
    }
}
