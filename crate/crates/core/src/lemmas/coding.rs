//! Minimal, special and canonical codes, the operations on them, and the
//! negative controls.

use std::collections::{BTreeMap, BTreeSet};

use super::oracle::*;
use super::{wit, Analyzed, Ctx, Witness};
use crate::canonical::{
    adjoin, adjoin_simple, encode_canonical, is_set_star, is_special, remark, remark_relation, resolve,
    subtract,
};
use crate::frames::literal::literal_is_min_set;
use crate::frames::{is_min_set, is_set, parse, serialize_chain, FrameKind, ParsedCode};
use crate::order::{is_lex_plus_parsed, max_below, precedes};
use crate::strings::{all_strings, BinStr, Builder, Digit};
use crate::tally::tally_class;

type R = Result<(), Witness>;

/// Set codes within the code bound, parsed.
fn parsed_codes(c: &mut Ctx) -> Vec<(BinStr, ParsedCode)> {
    let an = c.analyzed();
    an.iter().filter(|x| x.is_set()).map(|x| (x.x.clone(), parse(&x.x).expect("set codes parse"))).collect()
}

fn min_codes(c: &mut Ctx) -> Vec<(BinStr, ParsedCode)> {
    parsed_codes(c).into_iter().filter(|(x, _)| is_min_set(x)).collect()
}

/// Elements for operations: words up to the word bound, capped at 4.
fn elements(c: &Ctx) -> Vec<BinStr> {
    all_strings(c.bounds.string_len.min(4))
}

fn check<T>(c: &mut Ctx, d: &[T], show: impl Fn(&T) -> Witness, mut f: impl FnMut(&T) -> bool) -> R {
    c.all1(d, |t| if f(t) { None } else { Some(show(t)) })
}

fn show_code(t: &(BinStr, ParsedCode)) -> Witness {
    wit(&[&t.0])
}

fn pairs_with<T: Clone, U: Clone>(xs: &[T], ys: &[U]) -> Vec<(T, U)> {
    xs.iter().flat_map(|x| ys.iter().map(move |y| (x.clone(), y.clone()))).collect()
}

pub fn naive_adjunction_members(c: &mut Ctx) -> R {
    let d = pairs_with(&parsed_codes(c), &elements(c));
    check(c, &d, |((x, _), y)| wit(&[x, y]), |((x, p), y)| {
        let Ok(z) = adjoin_simple(x, y) else { return false };
        let mut want = p.members();
        want.insert(y.clone());
        parse(&z).map(|q| q.members() == want).unwrap_or(false)
    })
}

pub fn subtraction_postconditions(c: &mut Ctx) -> R {
    let d = pairs_with(&min_codes(c), &elements(c));
    check(c, &d, |((x, _), y)| wit(&[x, y]), |((x, p), y)| {
        let Ok(z) = subtract(x, y) else { return false };
        let Ok(q) = parse(&z) else { return false };
        let mut want = p.members();
        want.remove(y);
        let kept = q.frames().iter().all(|g| {
            p.frames().iter().any(|f| f.element == g.element && f.opening == g.opening)
        });
        let lex = !is_lex_plus_parsed(p) || is_lex_plus_parsed(&q);
        q.members() == want && kept && lex && is_min_set(&z)
    })
}

fn special_lex(p: &ParsedCode) -> bool {
    is_lex_plus_parsed(p) && is_special(&p.serialize())
}

fn equal_member_pairs(codes: &[(BinStr, ParsedCode)]) -> Vec<((BinStr, ParsedCode), (BinStr, ParsedCode))> {
    let mut groups: BTreeMap<BTreeSet<BinStr>, Vec<&(BinStr, ParsedCode)>> = BTreeMap::new();
    for x in codes {
        groups.entry(x.1.members()).or_default().push(x);
    }
    groups
        .values()
        .flat_map(|g| g.iter().flat_map(move |x| g.iter().map(move |y| ((*x).clone(), (*y).clone()))))
        .collect()
}

pub fn special_markers_agree(c: &mut Ctx) -> R {
    let codes: Vec<_> = parsed_codes(c).into_iter().filter(|(_, p)| special_lex(p)).collect();
    let d = equal_member_pairs(&codes);
    check(c, &d, |(x, y)| wit(&[&x.0, &y.0]), |((_, p), (_, q))| {
        p.frames().iter().all(|f| q.frames().iter().any(|g| g.element == f.element && g.opening == f.opening))
    })
}

pub fn two_member_minimal_shape(c: &mut Ctx) -> R {
    let d: Vec<_> = min_codes(c).into_iter().filter(|(_, p)| p.frames().len() == 2).collect();
    check(c, &d, show_code, |(x, p)| {
        let (f, g) = (&p.frames()[0], &p.frames()[1]);
        let want = Builder::new()
            .push_run(Digit::B, f.opening.len)
            .push(Digit::A)
            .push_str(&f.element)
            .push(Digit::A)
            .push_run(Digit::B, g.opening.len)
            .push(Digit::A)
            .push_str(&g.element)
            .push(Digit::A)
            .push_run(Digit::B, g.opening.len)
            .finish();
        &want == x
    })
}

fn single(t: usize, u: &BinStr) -> BinStr {
    cat(&[&bs(t), &a(), u, &a(), &bs(t)])
}

pub fn singleton_shape_minimal(c: &mut Ctx) -> R {
    let d = pairs_with(&all_strings(c.bounds.string_len), &[0usize, 1, 2]);
    check(c, &d, |(u, k)| wit(&[&single(tally_class(u) + k, u)]), |(u, k)| {
        let x = single(tally_class(u) + k, u);
        is_min_set(&x) && literal_is_min_set(&x)
    })
}

pub fn two_frame_minimal(c: &mut Ctx) -> R {
    let e = elements(c);
    let d: Vec<(BinStr, BinStr)> = pairs_with(&e, &e).into_iter().filter(|(u, v)| u != v).collect();
    check(c, &d, |(u, v)| wit(&[u, v]), |(u, v)| {
        let t1 = tally_class(u);
        (t1..=t1 + 1).all(|t1| {
            let t2 = (t1 + 1).max(tally_class(v));
            let x = cat(&[&bs(t1), &a(), u, &a(), &single(t2, v)]);
            is_min_set(&x) && literal_is_min_set(&x)
        })
    })
}

/// Three-frame chains over words up to length 2 with openings up to 4 that
/// parse as minimal codes. Minimal codes within the code bound have at
/// most two frames, so internal frames need this wider domain.
fn three_frame_codes() -> Vec<(BinStr, ParsedCode)> {
    let w = all_strings(2);
    let mut out = Vec::new();
    for e1 in &w {
        for e2 in w.iter().filter(|e| *e != e1) {
            for e3 in w.iter().filter(|e| *e != e1 && *e != e2) {
                for m in 0..64usize {
                    let ms = [m % 4 + 1, m / 4 % 4 + 1, m / 16 + 1];
                    let x = serialize_chain(&[(ms[0], e1), (ms[1], e2), (ms[2], e3)]);
                    if let Ok(p) = parse(&x) {
                        if is_min_set(&x) {
                            out.push((x, p));
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn resolve_parts_minimal(c: &mut Ctx) -> R {
    let mut codes = min_codes(c);
    codes.extend(three_frame_codes());
    let d: Vec<(BinStr, ParsedCode, usize)> = codes
        .into_iter()
        .flat_map(|(x, p)| {
            let ks: Vec<usize> =
                (0..p.frames().len()).filter(|&k| p.frames()[k].kind == FrameKind::Internal).collect();
            ks.into_iter().map(move |k| (x.clone(), p.clone(), k))
        })
        .collect();
    check(c, &d, |(x, _, k)| wit(&[x, k]), |(x, p, k)| resolve_holds(x, p, *k))
}

/// Head and tail of a split are minimal, partition the members and
/// reassemble `x` once the head's closing marker is dropped.
pub fn resolve_holds(x: &BinStr, p: &ParsedCode, k: usize) -> bool {
    let Ok((head, tail)) = resolve(x, k) else { return false };
    let (Ok(h), Ok(t)) = (parse(&head), parse(&tail)) else { return false };
    let disjoint = h.members().is_disjoint(&t.members());
    let union: BTreeSet<BinStr> = h.members().union(&t.members()).cloned().collect();
    let close = p.frames()[k - 1].opening.len;
    let joined = head.slice(0..head.len() - close).map(|hd| hd.concat(&tail));
    is_min_set(&head) && is_min_set(&tail) && disjoint && union == p.members() && joined.as_ref() == Some(x)
}

pub fn singleton_canonical_exists(c: &mut Ctx) -> R {
    let d = c.words();
    check(c, &d, |y| wit(&[y]), |y| {
        let t0 = class_of(y);
        let z = single(t0, y);
        is_set_star(&z) && parse(&z).map(|p| p.members() == BTreeSet::from([y.clone()])).unwrap_or(false)
    })
}

pub fn special_first_marker_minimal(c: &mut Ctx) -> R {
    let d: Vec<_> = parsed_codes(c).into_iter().filter(|(x, p)| !p.is_empty() && is_special(x)).collect();
    check(c, &d, show_code, |(_, p)| {
        let f = &p.frames()[0];
        min_max_plus_b(&f.element) == [f.opening.len]
    })
}

pub fn pair_canonical_exists(c: &mut Ctx) -> R {
    let e = elements(c);
    let d: Vec<(BinStr, BinStr)> = pairs_with(&e, &e).into_iter().filter(|(u, v)| precedes(u, v)).collect();
    check(c, &d, |(u, v)| wit(&[u, v]), |(u, v)| {
        let want = BTreeSet::from([u.clone(), v.clone()]);
        (1..=u.len() + 2).any(|t1| {
            (1..=u.len() + v.len() + 3).any(|t2| {
                let z = cat(&[&bs(t1), &a(), u, &a(), &single(t2, v)]);
                is_set_star(&z) && parse(&z).map(|p| p.members() == want).unwrap_or(false)
            })
        })
    })
}

pub fn frame_marker_bounds_earlier(c: &mut Ctx) -> R {
    let d = parsed_codes(c);
    check(c, &d, show_code, |(_, p)| {
        let fs = p.frames();
        fs.iter().enumerate().all(|(i, f)| {
            max_plus_t(Digit::B, &bs(f.opening.len), &f.element) && fs[..i].iter().all(|g| g.opening.len < f.opening.len)
        })
    })
}

pub fn special_preserved_by_truncation(c: &mut Ctx) -> R {
    let d: Vec<_> = parsed_codes(c).into_iter().filter(|(x, _)| is_special(x)).collect();
    check(c, &d, show_code, |(x, p)| {
        p.frames().iter().filter(|f| f.kind == FrameKind::Internal).all(|f| {
            let cut = Builder::new()
                .push_bytes(&x.as_bytes()[..f.closing_start()])
                .push_run(Digit::B, f.opening.len)
                .finish();
            is_special(&cut)
        })
    })
}

pub fn remark_unique(c: &mut Ctx) -> R {
    let bound = c.bounds.code_len + 3;
    let mut by_members: BTreeMap<BTreeSet<BinStr>, Vec<BinStr>> = BTreeMap::new();
    for z in all_strings(bound) {
        if let Ok(p) = parse(&z) {
            if is_min_set(&z) {
                by_members.entry(p.members()).or_default().push(z);
            }
        }
    }
    let d: Vec<_> = min_codes(c).into_iter().filter(|(_, p)| !p.is_empty()).collect();
    check(c, &d, show_code, |(z, p)| {
        let found: Vec<&BinStr> =
            by_members[&p.members()].iter().filter(|z2| remark_relation(z, z2)).collect();
        found.len() == 1 && remark(z).ok().as_ref() == Some(found[0])
    })
}

pub fn special_codes_prefix_free(c: &mut Ctx) -> R {
    let codes: Vec<_> = parsed_codes(c).into_iter().filter(|(_, p)| special_lex(p)).collect();
    let d = equal_member_pairs(&codes);
    check(c, &d, |(x, y)| wit(&[&x.0, &y.0]), |((x, _), (y, _))| !pre(x, y) && !pre(y, x))
}

fn canonical(c: &mut Ctx) -> Vec<(BinStr, ParsedCode)> {
    parsed_codes(c).into_iter().filter(|(x, _)| is_set_star(x)).collect()
}

pub fn canonical_no_root_split(c: &mut Ctx) -> R {
    let codes = canonical(c);
    let d = equal_member_pairs(&codes);
    check(c, &d, |(x, y)| wit(&[&x.0, &y.0]), |((x, _), (y, _))| {
        let xb = x.as_bytes();
        !(1..xb.len()).any(|i| {
            let z = x.slice(0..i).expect("in range");
            pre(&cat(&[&z, &a()]), x) && pre_eq(&cat(&[&z, &b()]), y)
        }) || xb.is_empty()
    })
}

pub fn canonical_unique(c: &mut Ctx) -> R {
    let codes = canonical(c);
    let d = equal_member_pairs(&codes);
    check(c, &d, |(x, y)| wit(&[&x.0, &y.0]), |((x, _), (y, _))| x == y)
}

/// `u ≤_x v` read over members: `u <_x v` or `u = v`, both members.
fn le_x(x: &Analyzed, u: &BinStr, v: &BinStr) -> bool {
    let m = x.members();
    m.contains(u) && m.contains(v) && (u == v || x.lt_x(u, v))
}

/// `Max_≤(u, x, y)` by its definition.
fn max_le(x: &Analyzed, u: &BinStr, y: &BinStr) -> bool {
    let m = x.members();
    let below = |z: &BinStr| m.iter().filter(|v| le_x(x, v, z)).all(|v| precedes(v, y));
    m.contains(u) && below(u) && m.iter().all(|z| !below(z) || le_x(x, z, u))
}

fn lex_plus_analyzed(c: &mut Ctx) -> Vec<usize> {
    let an = c.analyzed();
    (0..an.len())
        .filter(|&i| {
            let x = &an[i];
            let m = x.members();
            x.is_set() && m.iter().all(|u| m.iter().all(|v| !x.lt_x(u, v) || precedes(u, v)))
        })
        .collect()
}

pub fn max_below_successors_follow(c: &mut Ctx) -> R {
    let an = c.analyzed();
    let d = pairs_with(&lex_plus_analyzed(c), &c.words().to_vec());
    check(c, &d, |(i, y)| wit(&[&an[*i].x, y]), |(i, y)| {
        let x = &an[*i];
        let m = x.members();
        if m.contains(y) {
            return true;
        }
        m.iter().filter(|u| max_le(x, u, y)).all(|u| m.iter().filter(|v| x.lt_x(u, v)).all(|v| precedes(y, v)))
    })
}

pub fn max_below_unique(c: &mut Ctx) -> R {
    let an = c.analyzed();
    let d = pairs_with(&lex_plus_analyzed(c), &c.words().to_vec());
    check(c, &d, |(i, y)| wit(&[&an[*i].x, y]), |(i, y)| {
        let x = &an[*i];
        let m = x.members();
        if !m.iter().any(|u| precedes(u, y)) {
            return true;
        }
        let found: Vec<&BinStr> = m.iter().filter(|u| max_le(x, u, y)).collect();
        found.len() == 1 && max_below(&x.x, y).ok().flatten().as_ref() == Some(found[0])
    })
}

pub fn canonical_adjunction(c: &mut Ctx) -> R {
    let d = pairs_with(&canonical(c), &elements(c));
    check(c, &d, |((x, _), y)| wit(&[x, y]), |((x, p), y)| {
        let mut want = p.members();
        want.insert(y.clone());
        match adjoin(x, y) {
            Ok(z) => is_set_star(&z.code) && z.parsed.members() == want && z.code == encode_canonical(want).code,
            Err(_) => false,
        }
    })
}

pub fn reflexive_order_misreading(c: &mut Ctx) -> R {
    let an = c.analyzed();
    let d: Vec<usize> = (0..an.len()).filter(|&i| an[i].is_set()).collect();
    c.all1(&d, |&i| {
        let x = &an[i];
        x.members().into_iter().find(|u| le_x(x, u, u)).map(|u| wit(&[&x.x, &u]))
    })
}

pub fn single_frame_codes_special(c: &mut Ctx) -> R {
    let d: Vec<_> = parsed_codes(c).into_iter().filter(|(x, p)| p.frames().len() == 1 && is_set(x)).collect();
    check(c, &d, show_code, |(x, _)| is_special(x))
}
