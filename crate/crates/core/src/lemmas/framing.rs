//! Frame predicates, envelopes, membership and frame order, all evaluated
//! from the quantified definitions rather than the run scanner.

use std::collections::{BTreeMap, BTreeSet};

use super::oracle::*;
use super::{wit, Analyzed, Ctx, Witness};
use crate::frames::literal::{analyze, LiteralFrame};
use crate::frames::{classify_frames, parse, ClassKind};
use crate::order::{frame_precedes_parsed, precedes};
use crate::strings::{all_strings, BinStr, Digit};

type R = Result<(), Witness>;

fn set_codes(an: &[Analyzed]) -> Vec<&Analyzed> {
    an.iter().filter(|x| x.is_set()).collect()
}

fn elem(f: &LiteralFrame) -> BinStr {
    f.element()
}

fn whole(t1: usize, u: &BinStr, t2: usize) -> BinStr {
    cat(&[&bs(t1), &a(), u, &a(), &bs(t2)])
}

/// Members in literal frame order; the order is total on set codes.
fn ordered(x: &Analyzed) -> Vec<BinStr> {
    let mut m: Vec<BinStr> = x.members().into_iter().collect();
    m.sort_by(|u, v| {
        if x.lt_x(u, v) {
            std::cmp::Ordering::Less
        } else if x.lt_x(v, u) {
            std::cmp::Ordering::Greater
        } else {
            std::cmp::Ordering::Equal
        }
    });
    m
}

fn lex_plus(x: &Analyzed) -> bool {
    let m = x.members();
    m.iter().all(|u| m.iter().all(|v| !x.lt_x(u, v) || precedes(u, v)))
}

fn check_codes(c: &mut Ctx, mut f: impl FnMut(&Analyzed) -> bool) -> R {
    let an = c.analyzed();
    let codes = set_codes(&an);
    c.all1(&codes, |x| if f(x) { None } else { Some(wit(&[&x.x])) })
}

/// Pairs of set codes with equal member sets.
fn check_equal_pairs(c: &mut Ctx, mut f: impl FnMut(&Analyzed, &Analyzed) -> bool) -> R {
    let an = c.analyzed();
    let mut groups: BTreeMap<BTreeSet<BinStr>, Vec<&Analyzed>> = BTreeMap::new();
    for x in set_codes(&an) {
        groups.entry(x.members()).or_default().push(x);
    }
    let pairs: Vec<(&Analyzed, &Analyzed)> =
        groups.values().flat_map(|g| g.iter().flat_map(move |x| g.iter().map(move |y| (*x, *y)))).collect();
    c.all1(&pairs, |(x, y)| if f(x, y) { None } else { Some(wit(&[&x.x, &y.x])) })
}

pub fn first_marker_least(c: &mut Ctx) -> R {
    check_codes(c, |x| {
        x.frames().iter().filter(|f| f.flags.firstf).all(|f| {
            x.frames()
                .iter()
                .all(|g| elem(g) == elem(f) || f.t1 < g.t1 || (f.t1 == g.t1 && g.flags.firstf))
        })
    })
}

pub fn envelope_framing(c: &mut Ctx) -> R {
    check_codes(c, |x| {
        let Some(_) = x.lit.envelope else { return true };
        let xb = x.x.as_bytes();
        let lead = xb.iter().take_while(|&&d| d == b'b').count();
        let trail = xb.iter().rev().take_while(|&&d| d == b'b').count();
        let core = &xb[lead..xb.len() - trail];
        let degenerate = core == b"a" || core == b"aa";
        lead > 0 && trail > 0 && core.len() >= 2 && core[0] == b'a' && core[core.len() - 1] == b'a' && !degenerate
    })
}

pub fn envelope_b_singleton(c: &mut Ctx) -> R {
    check_codes(c, |x| {
        if x.lit.envelope != Some(1) {
            return true;
        }
        let xb = x.x.as_bytes();
        xb.len() >= 5 && xb[0] == b'b' && xb[xb.len() - 1] == b'b' && xb[1..xb.len() - 1].iter().all(|&d| d == b'a')
    })
}

pub fn ends_unique(c: &mut Ctx) -> R {
    check_codes(c, |x| {
        let firsts: BTreeSet<BinStr> = x.frames().iter().filter(|f| f.flags.firstf).map(elem).collect();
        let lasts: BTreeSet<BinStr> = x.frames().iter().filter(|f| f.flags.lastf).map(elem).collect();
        firsts.len() <= 1 && lasts.len() <= 1
    })
}

pub fn empty_iff_no_members(c: &mut Ctx) -> R {
    check_codes(c, |x| (x.x == w("aa")) != !x.members().is_empty())
}

pub fn markers_determined(c: &mut Ctx) -> R {
    check_codes(c, |x| {
        let fs = x.frames();
        fs.iter().all(|f| fs.iter().filter(|g| g.u == f.u).all(|g| g.t1 == f.t1 && g.t2 == f.t2))
    })
}

pub fn first_and_last_is_whole(c: &mut Ctx) -> R {
    check_codes(c, |x| {
        let fs = x.frames();
        fs.iter().filter(|f| f.flags.firstf).all(|f| {
            let closes = fs.iter().any(|g| g.u == f.u && g.flags.lastf && g.t1 == f.t1 && g.t2 == f.t1);
            !closes || (x.x == whole(f.t1, &elem(f), f.t1) && f.t2 == f.t1)
        })
    })
}

pub fn singleton_shape_iff(c: &mut Ctx) -> R {
    check_codes(c, |x| {
        let Some(t) = x.lit.envelope else { return true };
        let m = x.members();
        let shaped = x.frames().iter().any(|f| {
            let both = x.frames().iter().any(|g| g.u == f.u && g.flags.lastf && g.t1 == t && g.t2 == t);
            f.flags.firstf && f.t1 == t && f.t2 == t && both && x.x == whole(t, &elem(f), t)
        });
        (m.len() == 1) == shaped
    })
}

pub fn ends_not_internal(c: &mut Ctx) -> R {
    check_codes(c, |x| {
        let fs = x.frames();
        fs.iter()
            .filter(|f| f.flags.firstf || f.flags.lastf)
            .all(|f| !fs.iter().any(|g| g.u == f.u && g.flags.intf))
    })
}

pub fn internal_after_first(c: &mut Ctx) -> R {
    check_codes(c, |x| {
        let fs = x.frames();
        fs.iter().filter(|f| f.flags.firstf).all(|f| fs.iter().filter(|g| g.flags.intf).all(|g| f.t2 <= g.t1))
    })
}

pub fn two_frame_members(c: &mut Ctx) -> R {
    let d = all_strings(c.bounds.string_len.min(3));
    let mut cases = Vec::new();
    for u in &d {
        for v in &d {
            if u == v {
                continue;
            }
            let cu = class_of(&cat(&[&a(), u, &a()]));
            let cv = class_of(&cat(&[&a(), v, &a()]));
            for t1 in cu..=cu + 1 {
                for t2 in (t1 + 1).max(cv)..=(t1 + 1).max(cv) + 1 {
                    cases.push((u.clone(), v.clone(), t1, t2));
                }
            }
        }
    }
    c.all1(&cases, |(u, v, t1, t2)| {
        let x = cat(&[&whole(*t1, u, *t2), &a(), v, &a(), &bs(*t2)]);
        let lit = analyze(&x);
        let m: BTreeSet<BinStr> = lit.frames.iter().map(LiteralFrame::element).collect();
        let want: BTreeSet<BinStr> = [u.clone(), v.clone()].into();
        if lit.is_set && lit.envelope.is_some() && m == want {
            None
        } else {
            Some(wit(&[&x]))
        }
    })
}

pub fn first_has_no_predecessor(c: &mut Ctx) -> R {
    check_codes(c, |x| {
        let m = x.members();
        x.frames().iter().filter(|f| f.flags.firstf).all(|f| m.iter().all(|u| !x.lt_x(u, &elem(f))))
    })
}

pub fn last_follows_all(c: &mut Ctx) -> R {
    check_codes(c, |x| {
        let m = x.members();
        x.frames().iter().filter(|f| f.flags.lastf).all(|f| {
            let v = elem(f);
            m.iter().all(|u| u == &v || x.lt_x(u, &v))
        })
    })
}

pub fn frame_order_irreflexive(c: &mut Ctx) -> R {
    let an = c.analyzed();
    let codes = set_codes(&an);
    let words = c.words();
    let pairs: Vec<(&Analyzed, BinStr)> = codes
        .iter()
        .flat_map(|x| x.members().into_iter().chain(words.iter().cloned()).map(move |u| (*x, u)))
        .collect();
    c.all1(&pairs, |(x, u)| if x.lt_x(u, u) { Some(wit(&[&x.x, u])) } else { None })
}

pub fn last_has_no_successor(c: &mut Ctx) -> R {
    check_codes(c, |x| {
        let m = x.members();
        x.frames().iter().filter(|f| f.flags.lastf).all(|f| m.iter().all(|u| !x.lt_x(&elem(f), u)))
    })
}

pub fn frame_order_asymmetric(c: &mut Ctx) -> R {
    check_codes(c, |x| {
        let m = x.members();
        m.iter().all(|u| m.iter().all(|v| !(x.lt_x(u, v) && x.lt_x(v, u))))
    })
}

pub fn frame_order_total(c: &mut Ctx) -> R {
    check_codes(c, |x| {
        let m = x.members();
        m.iter().all(|u| m.iter().all(|v| u == v || x.lt_x(u, v) || x.lt_x(v, u)))
    })
}

pub fn frame_order_transitive(c: &mut Ctx) -> R {
    check_codes(c, |x| {
        let m = x.members();
        m.iter().all(|u| {
            m.iter().all(|v| m.iter().all(|w| !(x.lt_x(u, v) && x.lt_x(v, w)) || x.lt_x(u, w)))
        })
    })
}

pub fn greatest_is_last(c: &mut Ctx) -> R {
    check_codes(c, |x| {
        let m = x.members();
        m.iter().all(|v| {
            let greatest = m.iter().all(|u| u == v || x.lt_x(u, v));
            let last = x.frames().iter().any(|f| f.flags.lastf && &elem(f) == v);
            !greatest || last || m.len() == 1
        })
    })
}

pub fn least_is_first(c: &mut Ctx) -> R {
    check_codes(c, |x| {
        let m = x.members();
        m.iter().all(|v| {
            let least = m.iter().all(|u| u == v || x.lt_x(v, u));
            let first = x.frames().iter().any(|f| f.flags.firstf && &elem(f) == v);
            !least || first
        })
    })
}

pub fn order_by_opening(c: &mut Ctx) -> R {
    check_codes(c, |x| {
        let fs = x.frames();
        fs.iter().all(|f| {
            fs.iter().all(|g| f.u == g.u || x.lt_x(&elem(f), &elem(g)) == (f.t1 < g.t1))
        })
    })
}

pub fn free_plus_downward(c: &mut Ctx) -> R {
    check_codes(c, |x| {
        let cls = x.classes();
        cls.iter().filter(|(_, k)| k.free_plus).all(|(v, _)| {
            cls.iter().filter(|(u, _)| x.lt_x(u, v)).all(|(_, k)| k.free_plus)
        })
    })
}

pub fn non_first_free_or_bound(c: &mut Ctx) -> R {
    check_codes(c, |x| x.classes().values().all(|k| k.first || k.free || k.bound))
}

pub fn parser_matches_definitions(c: &mut Ctx) -> R {
    let an = c.analyzed();
    let all: Vec<&Analyzed> = an.iter().collect();
    c.all1(&all, |x| {
        let ok = match parse(&x.x) {
            Err(_) => !x.is_set(),
            Ok(p) => {
                let m = x.members();
                let cls = x.classes();
                let parsed_cls = classify_frames(&p);
                x.is_set()
                    && p.members() == m
                    && m.iter().all(|u| m.iter().all(|v| frame_precedes_parsed(&p, u, v) == x.lt_x(u, v)))
                    && p.frames().iter().zip(&parsed_cls).all(|(f, k)| {
                        let lk = cls[&f.element];
                        lk.first == (k.kind == ClassKind::First)
                            && lk.free == (k.kind == ClassKind::Free)
                            && lk.bound == (k.kind == ClassKind::Bound)
                            && lk.free_plus == k.free_plus
                            && lk.free_minus == k.free_minus
                    })
            }
        };
        if ok {
            None
        } else {
            Some(wit(&[&x.x]))
        }
    })
}

pub fn lex_plus_same_ends(c: &mut Ctx) -> R {
    check_equal_pairs(c, |x, y| {
        if !lex_plus(x) || !lex_plus(y) {
            return true;
        }
        let (ox, oy) = (ordered(x), ordered(y));
        ox.first() == oy.first() && ox.last() == oy.last()
    })
}

pub fn lex_plus_iff_same_order(c: &mut Ctx) -> R {
    check_equal_pairs(c, |x, y| !lex_plus(x) || lex_plus(y) == (ordered(x) == ordered(y)))
}

pub fn lex_plus_orders_agree(c: &mut Ctx) -> R {
    let an = c.analyzed();
    let lp: Vec<&Analyzed> = set_codes(&an).into_iter().filter(|x| lex_plus(x)).collect();
    let pairs: Vec<(&Analyzed, &Analyzed)> = lp.iter().flat_map(|x| lp.iter().map(move |y| (*x, *y))).collect();
    c.all1(&pairs, |(x, y)| {
        let common: Vec<BinStr> = x.members().intersection(&y.members()).cloned().collect();
        let ok = common.iter().all(|v| common.iter().all(|u| x.lt_x(v, u) == y.lt_x(v, u)));
        if ok {
            None
        } else {
            Some(wit(&[&x.x, &y.x]))
        }
    })
}

pub fn two_element_lex_code(c: &mut Ctx) -> R {
    let d = all_strings(c.bounds.string_len.min(3));
    let mut cases = Vec::new();
    for x in &d {
        for y in &d {
            if !precedes(x, y) {
                continue;
            }
            let (cx, cy) = (class_of(&cat(&[&a(), x, &a()])), class_of(&cat(&[&a(), y, &a()])));
            for t1 in cx..=cx + 1 {
                for t2 in (t1 + 1).max(cy)..=(t1 + 1).max(cy) + 1 {
                    cases.push((x.clone(), y.clone(), t1, t2));
                }
            }
        }
    }
    c.all1(&cases, |(x, y, t1, t2)| {
        debug_assert!(max_plus_t(Digit::B, &bs(*t1), x));
        let z = cat(&[&whole(*t1, x, *t2), &a(), y, &a(), &bs(*t2)]);
        let lit = analyze(&z);
        let zz = Analyzed { x: z.clone(), lit };
        let want: BTreeSet<BinStr> = [x.clone(), y.clone()].into();
        if zz.is_set() && zz.members() == want && lex_plus(&zz) {
            None
        } else {
            Some(wit(&[&z]))
        }
    })
}
