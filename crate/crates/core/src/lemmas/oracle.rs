//! Brute-force readings of the word predicates, kept independent of the
//! library's scanners so properties compare two evaluations.

use std::collections::BTreeSet;

use crate::strings::{is_initial, is_substring, is_terminal, BinStr, Digit};
use crate::tally::is_tally;

pub fn w(s: &str) -> BinStr {
    BinStr::lit(s)
}

pub fn a() -> BinStr {
    BinStr::a()
}

pub fn b() -> BinStr {
    BinStr::b()
}

pub fn bs(n: usize) -> BinStr {
    BinStr::repeat(Digit::B, n).expect("n >= 1")
}

pub fn cat(parts: &[&BinStr]) -> BinStr {
    BinStr::join(parts).expect("nonempty")
}

pub fn btally(x: &BinStr) -> bool {
    is_tally(x, Digit::B)
}

pub fn atally(x: &BinStr) -> bool {
    is_tally(x, Digit::A)
}

/// `xBy`.
pub fn pre(x: &BinStr, y: &BinStr) -> bool {
    is_initial(x, y)
}

/// `xEy`.
pub fn suf(x: &BinStr, y: &BinStr) -> bool {
    is_terminal(x, y)
}

/// `x ⊆p y`.
pub fn sub(x: &BinStr, y: &BinStr) -> bool {
    is_substring(x, y)
}

pub fn pre_eq(x: &BinStr, y: &BinStr) -> bool {
    x == y || pre(x, y)
}

pub fn suf_eq(x: &BinStr, y: &BinStr) -> bool {
    x == y || suf(x, y)
}

/// Every distinct nonempty substring of `x`.
pub fn substrings(x: &BinStr) -> BTreeSet<BinStr> {
    let n = x.len();
    let mut out = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..=n {
            out.insert(x.slice(i..j).expect("in range"));
        }
    }
    out
}

/// Every split `x = p q` with both parts nonempty.
pub fn splits2(x: &BinStr) -> Vec<(BinStr, BinStr)> {
    (1..x.len())
        .map(|i| (x.slice(0..i).expect("in range"), x.slice(i..x.len()).expect("in range")))
        .collect()
}

/// Every split `x = p q r` with all parts nonempty.
pub fn splits3(x: &BinStr) -> Vec<(BinStr, BinStr, BinStr)> {
    let n = x.len();
    let mut out = Vec::new();
    for i in 1..n {
        for j in i + 1..n {
            out.push((
                x.slice(0..i).expect("in range"),
                x.slice(i..j).expect("in range"),
                x.slice(j..n).expect("in range"),
            ));
        }
    }
    out
}

/// `z` is a `d`-tally containing every `d`-tally substring of `x`.
pub fn max_t(d: Digit, z: &BinStr, x: &BinStr) -> bool {
    is_tally(z, d) && substrings(x).iter().filter(|v| is_tally(v, d)).all(|v| sub(v, z))
}

/// [`max_t`] and `z` does not occur in `x`.
pub fn max_plus_t(d: Digit, z: &BinStr, x: &BinStr) -> bool {
    max_t(d, z, x) && !sub(z, x)
}

/// Every `t` with `MinMax⁺T_b(t, x)`: a non-occurring bound below every other.
/// Candidates run to one past the length of `x`, which is always a bound.
pub fn min_max_plus_b(x: &BinStr) -> Vec<usize> {
    let bounds: Vec<usize> = (1..=x.len() + 1).filter(|&n| max_plus_t(Digit::B, &bs(n), x)).collect();
    bounds.iter().copied().filter(|&n| bounds.iter().all(|&m| n <= m)).collect()
}

/// The unique [`min_max_plus_b`] witness.
pub fn class_of(x: &BinStr) -> usize {
    let v = min_max_plus_b(x);
    assert_eq!(v.len(), 1, "tally class of {x} is not unique");
    v[0]
}

/// Candidate roots: the proper prefixes of `x`.
fn prefixes(x: &BinStr) -> Vec<BinStr> {
    (1..x.len()).map(|i| x.slice(0..i).expect("in range")).collect()
}

fn suffixes(x: &BinStr) -> Vec<BinStr> {
    (1..x.len()).map(|i| x.slice(x.len() - i..x.len()).expect("in range")).collect()
}

/// `Rt_L(z, x, y)`: `za`, `zb` start (or equal) the two words in some order.
pub fn rt_l(z: &BinStr, x: &BinStr, y: &BinStr) -> bool {
    let za = cat(&[z, &a()]);
    let zb = cat(&[z, &b()]);
    (pre_eq(&za, x) && pre_eq(&zb, y)) || (pre_eq(&zb, x) && pre_eq(&za, y))
}

/// Mirror of [`rt_l`] on suffixes.
pub fn rt_r(z: &BinStr, x: &BinStr, y: &BinStr) -> bool {
    let az = cat(&[&a(), z]);
    let bz = cat(&[&b(), z]);
    (suf_eq(&az, x) && suf_eq(&bz, y)) || (suf_eq(&bz, x) && suf_eq(&az, y))
}

/// Every `z` with `Rt_L(z, x, y)`; `za ≤ x` forces `z` to be a proper prefix.
pub fn left_roots(x: &BinStr, y: &BinStr) -> Vec<BinStr> {
    prefixes(x).into_iter().filter(|z| rt_l(z, x, y)).collect()
}

pub fn right_roots(x: &BinStr, y: &BinStr) -> Vec<BinStr> {
    suffixes(x).into_iter().filter(|z| rt_r(z, x, y)).collect()
}

/// `u ≪ v` by its defining disjunction.
pub fn lex(u: &BinStr, v: &BinStr) -> bool {
    let starts = |d: &BinStr, x: &BinStr| x == d || pre(d, x);
    if (starts(&a(), u) && starts(&b(), v)) || pre(u, v) {
        return true;
    }
    prefixes(u).iter().any(|z| {
        rt_l(z, u, v) && starts(&cat(&[z, &a()]), u) && starts(&cat(&[z, &b()]), v)
    })
}

/// Tally class first, then [`lex`].
pub fn prec(u: &BinStr, v: &BinStr) -> bool {
    let (cu, cv) = (class_of(u), class_of(v));
    cu < cv || (cu == cv && lex(u, v))
}
