//! Single-digit runs. Frame markers are `b`-tallies; the shortest
//! `b`-tally that does not occur in a word fixes that word's tally class.

use std::cmp::Ordering;
use std::fmt;

use crate::strings::{BinStr, Digit};

/// A word made of `len >= 1` copies of one digit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tally {
    pub digit: Digit,
    pub len: usize,
}

impl Tally {
    /// A `b`-tally of length `len`.
    ///
    /// # Panics
    /// Panics if `len == 0`.
    pub fn b(len: usize) -> Tally {
        assert!(len >= 1, "tallies are nonempty");
        Tally { digit: Digit::B, len }
    }

    pub fn to_binstr(&self) -> BinStr {
        BinStr::repeat(self.digit, self.len).expect("len >= 1")
    }

    /// Reads `x` as a tally if it is one.
    pub fn of(x: &BinStr) -> Option<Tally> {
        let d = x.first();
        if x.digits().all(|c| c == d) {
            Some(Tally { digit: d, len: x.len() })
        } else {
            None
        }
    }

    /// The tally one digit longer.
    pub fn succ(&self) -> Tally {
        Tally { digit: self.digit, len: self.len + 1 }
    }
}

impl fmt::Display for Tally {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for _ in 0..self.len {
            write!(f, "{}", self.digit)?;
        }
        Ok(())
    }
}

pub fn is_tally(x: &BinStr, d: Digit) -> bool {
    x.digits().all(|c| c == d)
}

/// Length of the longest run of `b` in `x`; 0 when `x` has no `b`.
pub fn max_b_run(x: &BinStr) -> usize {
    max_b_run_bytes(x.as_bytes())
}

pub(crate) fn max_b_run_bytes(x: &[u8]) -> usize {
    let mut best = 0;
    let mut cur = 0;
    for &c in x {
        if c == b'b' {
            cur += 1;
            best = best.max(cur);
        } else {
            cur = 0;
        }
    }
    best
}

/// `t` is a `b`-tally bounding every `b`-run of `u` and not itself in `u`.
pub fn is_max_plus_tally(t: &Tally, u: &BinStr) -> bool {
    t.digit == Digit::B && t.len > max_b_run(u)
}

/// The shortest `b`-tally that does not occur in `y`.
pub fn min_nonoccurring_btally(y: &BinStr) -> Tally {
    Tally::b(max_b_run(y) + 1)
}

/// Length of [`min_nonoccurring_btally`].
pub fn tally_class(y: &BinStr) -> usize {
    max_b_run(y) + 1
}

/// Compares tally classes: `Less` means `u` has the shorter shortest
/// non-occurring `b`-tally.
pub fn tally_class_compare(u: &BinStr, v: &BinStr) -> Ordering {
    tally_class(u).cmp(&tally_class(v))
}

/// Renders an ordering as `below`, `equal` or `above`.
pub fn ordering_word(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "below",
        Ordering::Equal => "equal",
        Ordering::Greater => "above",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn runs() {
        assert_eq!(max_b_run(&BinStr::lit("aa")), 0);
        assert_eq!(max_b_run(&BinStr::lit("abbab")), 2);
        assert_eq!(min_nonoccurring_btally(&BinStr::lit("abba")), Tally::b(3));
        assert_eq!(Tally::b(2).to_string(), "bb");
    }
}
