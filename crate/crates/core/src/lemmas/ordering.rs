//! Roots, lexical precedence and the tally-class-first order.

use super::oracle::*;
use super::{wit, Ctx, Witness};
use crate::order::{left_root, lex_precedes, precedes, right_root};
use crate::tally::tally_class;

type R = Result<(), Witness>;

pub fn left_root_excludes_prefixes(c: &mut Ctx) -> R {
    let d = c.words();
    c.all2(&d, |x, y| left_roots(x, y).is_empty() || (!pre(x, y) && !pre(y, x)))
}

pub fn left_root_unique(c: &mut Ctx) -> R {
    let d = c.words();
    c.all2(&d, |x, y| {
        let roots = left_roots(x, y);
        let lib = if x == y { None } else { left_root(x, y).expect("distinct").map(|r| r.root) };
        roots.len() <= 1 && roots.first() == lib.as_ref()
    })
}

fn root_dichotomy(c: &mut Ctx, mirrored: bool) -> R {
    let d = c.words();
    c.all2(&d, |x, y| {
        if x == y || x.len() < 2 {
            return true;
        }
        let (ax, bx, ay, by) = if mirrored {
            (suf(&a(), x), suf(&b(), x), suf(&a(), y), suf(&b(), y))
        } else {
            (pre(&a(), x), pre(&b(), x), pre(&a(), y), pre(&b(), y))
        };
        let nested = if mirrored { suf(x, y) || suf(y, x) } else { pre(x, y) || pre(y, x) };
        let root = if mirrored { !right_roots(x, y).is_empty() } else { !left_roots(x, y).is_empty() };
        let lib = if mirrored { right_root(x, y) } else { left_root(x, y) };
        let lib_ok = lib.expect("distinct").is_some() == root;
        lib_ok && (y == &a() || y == &b() || (ax && by) || (bx && ay) || nested || root)
    })
}

pub fn left_root_dichotomy(c: &mut Ctx) -> R {
    root_dichotomy(c, false)
}

pub fn right_root_dichotomy(c: &mut Ctx) -> R {
    root_dichotomy(c, true)
}

pub fn lex_trichotomy(c: &mut Ctx) -> R {
    let d = c.words();
    c.all2(&d, |u, v| lex_precedes(u, v) || u == v || lex_precedes(v, u))
}

pub fn lex_transitive(c: &mut Ctx) -> R {
    let d = c.words();
    c.all3(&d, |u, v, w| !(lex_precedes(u, v) && lex_precedes(v, w)) || lex_precedes(u, w))
}

pub fn lex_asymmetric(c: &mut Ctx) -> R {
    let d = c.words();
    c.all2(&d, |u, v| !(lex_precedes(u, v) && lex_precedes(v, u)))
}

pub fn lex_matches_definition(c: &mut Ctx) -> R {
    let d = c.words();
    c.all2(&d, |u, v| lex_precedes(u, v) == lex(u, v))
}

pub fn tally_class_unique(c: &mut Ctx) -> R {
    let d = c.words();
    c.all1(&d, |x| {
        let v = min_max_plus_b(x);
        if v.len() == 1 && v[0] == tally_class(x) {
            None
        } else {
            Some(wit(&[x]))
        }
    })
}

pub fn class_one_iff_atally(c: &mut Ctx) -> R {
    let d = c.words();
    c.all1(&d, |x| {
        let one = min_max_plus_b(x) == [1];
        if one == atally(x) {
            None
        } else {
            Some(wit(&[x]))
        }
    })
}

pub fn class_trichotomy(c: &mut Ctx) -> R {
    let d = c.words();
    c.all2(&d, |u, v| {
        let (cu, cv) = (class_of(u), class_of(v));
        let below = |p: usize, q: usize| p < q;
        (below(cu, cv) || cu == cv || below(cv, cu)) && !(below(cu, cv) && below(cv, cu))
    })
}

pub fn precedence_trichotomy(c: &mut Ctx) -> R {
    let d = c.words();
    c.all2(&d, |u, v| {
        let (p, q) = (precedes(u, v), precedes(v, u));
        (p || u == v || q) && !(p && q)
    })
}

pub fn precedence_transitive(c: &mut Ctx) -> R {
    let d = c.words();
    c.all3(&d, |u, v, w| !(precedes(u, v) && precedes(v, w)) || precedes(u, w))
}

pub fn precedence_matches_definition(c: &mut Ctx) -> R {
    let d = c.words();
    c.all2(&d, |u, v| precedes(u, v) == prec(u, v))
}
