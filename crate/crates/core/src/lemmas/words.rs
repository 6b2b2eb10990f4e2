//! Words, the prefix relation, successors and tallies.

use super::oracle::*;
use super::{wit, Ctx, Witness};
use crate::strings::{leq, lt, successor, BinStr, Digit};

type R = Result<(), Witness>;

fn fail_unless(ok: bool, w: &[&dyn std::fmt::Display]) -> Option<Witness> {
    if ok {
        None
    } else {
        Some(wit(w))
    }
}

pub fn digits_irreflexive(c: &mut Ctx) -> R {
    c.tick();
    if lt(&a(), &a()) || lt(&b(), &b()) {
        return Err(vec!["a|b".into()]);
    }
    Ok(())
}

pub fn a_below_b(c: &mut Ctx) -> R {
    c.tick();
    if lt(&a(), &b()) { Ok(()) } else { Err(wit(&[&a(), &b()])) }
}

pub fn below_b_iff_a(c: &mut Ctx) -> R {
    let d = c.words();
    c.all1(&d, |x| fail_unless(lt(x, &b()) == (x == &a()), &[x]))
}

pub fn a_least(c: &mut Ctx) -> R {
    let d = c.words();
    c.all1(&d, |x| fail_unless(!lt(x, &a()) && (x == &a() || lt(&a(), x)), &[x]))
}

pub fn below_or_at_a(c: &mut Ctx) -> R {
    let d = c.words();
    c.all1(&d, |x| fail_unless((lt(x, &a()) || x == &a()) == (x == &a()), &[x]))
}

pub fn left_compatible(c: &mut Ctx) -> R {
    let d = c.words();
    c.all3(&d, |x, y, z| x == &a() || !lt(x, y) || lt(&cat(&[z, x]), &cat(&[z, y])))
}

pub fn transitive(c: &mut Ctx) -> R {
    let d = c.words();
    c.all3(&d, |x, y, z| !(lt(x, y) && lt(y, z)) || lt(x, z))
}

pub fn below_successor(c: &mut Ctx) -> R {
    let d = c.words();
    c.all1(&d, |x| fail_unless(lt(x, &successor(x)), &[x]))
}

pub fn successor_injective(c: &mut Ctx) -> R {
    let d = c.words();
    c.all2(&d, |x, y| successor(x) != successor(y) || x == y)
}

pub fn successor_not_a(c: &mut Ctx) -> R {
    let d = c.words();
    c.all1(&d, |x| fail_unless(successor(x) != a(), &[x]))
}

pub fn below_successor_of_a(c: &mut Ctx) -> R {
    let d = c.words();
    let sa = successor(&a());
    c.all1(&d, |x| fail_unless(lt(x, &sa) == (lt(x, &a()) || x == &a()), &[x]))
}

pub fn b_extension_bounds(c: &mut Ctx) -> R {
    let d = c.words();
    c.all3(&d, |x, y, z| cat(&[x, z]) != cat(&[y, &b()]) || leq(x, y))
}

pub fn below_successor_iff(c: &mut Ctx) -> R {
    let d = c.words();
    c.all2(&d, |x, y| lt(x, &successor(y)) == leq(x, y))
}

pub fn at_most_successor_iff(c: &mut Ctx) -> R {
    let d = c.words();
    c.all2(&d, |x, y| {
        let sy = successor(y);
        (lt(x, &sy) || x == &sy) == (leq(x, y) || x == &sy)
    })
}

pub fn irreflexive(c: &mut Ctx) -> R {
    let d = c.words();
    c.all1(&d, |x| fail_unless(!lt(x, x), &[x]))
}

pub fn asymmetric(c: &mut Ctx) -> R {
    let d = c.words();
    c.all2(&d, |x, y| !(lt(x, y) && lt(y, x)))
}

pub fn successor_differs(c: &mut Ctx) -> R {
    let d = c.words();
    c.all1(&d, |x| fail_unless(x != &successor(x), &[x]))
}

pub fn concat_associative(c: &mut Ctx) -> R {
    let d = c.words();
    c.all3(&d, |x, y, z| cat(&[&cat(&[x, y]), z]) == cat(&[x, &cat(&[y, z])]))
}

pub fn no_self_suffix(c: &mut Ctx) -> R {
    let d = c.words();
    c.all1(&d, |x| fail_unless(!suf(x, x) && !pre(x, x), &[x]))
}

pub fn no_self_infix(c: &mut Ctx) -> R {
    let d = c.words();
    c.all1(&d, |x| {
        let hit = splits3(x).iter().any(|(p, q, r)| q == x && !p.is_empty() && !r.is_empty());
        fail_unless(!hit && !sub(&cat(&[x, x]), x), &[x])
    })
}

pub fn right_cancel(c: &mut Ctx) -> R {
    let d = c.words();
    c.all3(&d, |x, y, z| cat(&[x, z]) != cat(&[y, z]) || x == y)
}

pub fn left_cancel(c: &mut Ctx) -> R {
    let d = c.words();
    c.all3(&d, |x, y, z| cat(&[z, x]) != cat(&[z, y]) || x == y)
}

pub fn prefixes_comparable(c: &mut Ctx) -> R {
    let d = c.words();
    c.all3(&d, |x, u, v| !(pre(u, x) && pre(v, x)) || u == v || pre(u, v) || pre(v, u))
}

pub fn digit_prefixes_exclusive(c: &mut Ctx) -> R {
    let d = c.words();
    c.all2(&d, |x, y| !(pre(&cat(&[x, &a()]), y) && pre(&cat(&[x, &b()]), y)))
}

pub fn suffixes_comparable(c: &mut Ctx) -> R {
    let d = c.words();
    c.all3(&d, |x, u, v| !(suf(u, x) && suf(v, x)) || u == v || suf(u, v) || suf(v, u))
}

pub fn substring_antisymmetric(c: &mut Ctx) -> R {
    let d = c.words();
    c.all2(&d, |x, y| !(sub(x, y) && sub(y, x)) || x == y)
}

pub fn no_extension_inside(c: &mut Ctx) -> R {
    let d = c.words();
    c.all2(&d, |x, y| !sub(&cat(&[x, y]), x) && !sub(&cat(&[y, x]), x))
}

fn btallies(c: &Ctx) -> Vec<BinStr> {
    (1..=c.bounds.string_len).map(bs).collect()
}

fn atallies(c: &Ctx) -> Vec<BinStr> {
    (1..=c.bounds.string_len).map(|n| BinStr::repeat(Digit::A, n).expect("n >= 1")).collect()
}

pub fn btally_successor(c: &mut Ctx) -> R {
    let d = c.words();
    c.all1(&d, |y| fail_unless(!btally(y) || btally(&successor(y)), &[y]))
}

pub fn btally_induction(c: &mut Ctx) -> R {
    let d = c.words();
    c.all1(&d, |y| {
        let rhs = y == &b() || d.iter().any(|y1| btally(y1) && &successor(y1) == y);
        fail_unless(btally(y) == rhs, &[y])
    })
}

pub fn atally_shape(c: &mut Ctx) -> R {
    let d = c.words();
    let aaa = w("aaa");
    c.all1(&d, |x| {
        let shape = x == &a() || x == &w("aa") || x == &aaa || (pre(&aaa, x) && suf(&aaa, x));
        fail_unless(!atally(x) || shape, &[x])
    })
}

pub fn btally_has_no_a(c: &mut Ctx) -> R {
    let d = c.words();
    c.all1(&d, |x| {
        let ok = !btally(x) || substrings(x).iter().all(|v| !atally(v));
        fail_unless(ok, &[x])
    })
}

pub fn btallies_concat(c: &mut Ctx) -> R {
    let d = btallies(c);
    c.all2(&d, |y, z| btally(&cat(&[y, z])))
}

pub fn btallies_comparable(c: &mut Ctx) -> R {
    let d = btallies(c);
    c.all2(&d, |x, y| leq(x, y) || leq(y, x))
}

pub fn btally_successor_bound(c: &mut Ctx) -> R {
    let d = c.words();
    let t = btallies(c);
    c.all2(&d, |u, v| !(t.contains(v) && lt(u, v)) || leq(&successor(u), v))
}

pub fn btally_commutes_with_b(c: &mut Ctx) -> R {
    let d = btallies(c);
    c.all1(&d, |u| fail_unless(cat(&[u, &b()]) == cat(&[&b(), u]), &[u]))
}

pub fn btally_successor_monotone(c: &mut Ctx) -> R {
    let d = c.words();
    let t = btallies(c);
    c.all2(&d, |x, y| !t.contains(y) || lt(x, y) == lt(&successor(x), &successor(y)))
}

pub fn btallies_commute(c: &mut Ctx) -> R {
    let d = btallies(c);
    c.all2(&d, |u, v| cat(&[u, v]) == cat(&[v, u]))
}

pub fn atally_extension(c: &mut Ctx) -> R {
    let d = atallies(c);
    c.all2(&d, |x, y| !sub(x, y) || sub(&cat(&[x, &a()]), &cat(&[y, &a()])))
}

pub fn max_atally_exists(c: &mut Ctx) -> R {
    let d = c.words();
    c.all1(&d, |x| {
        let found = (1..=x.len() + 1).any(|n| {
            let z = BinStr::repeat(Digit::A, n).expect("n >= 1");
            max_t(Digit::A, &z, x) && (btally(x) || sub(&z, x))
        });
        fail_unless(found, &[x])
    })
}

pub fn max_plus_atally_exists(c: &mut Ctx) -> R {
    let d = c.words();
    c.all1(&d, |x| {
        let found = (1..=x.len() + 1)
            .any(|n| max_plus_t(Digit::A, &BinStr::repeat(Digit::A, n).expect("n >= 1"), x));
        fail_unless(found, &[x])
    })
}

pub fn leading_arun_before_bblock(c: &mut Ctx) -> R {
    let d = c.words();
    c.all1(&d, |x| {
        for (v, y, wv) in splits3(x) {
            if !btally(&y) {
                continue;
            }
            for z in substrings(x).into_iter().filter(|z| atally(z) && pre(z, x)) {
                if !(z == v || pre(&z, &v)) {
                    return Some(wit(&[x, &v, &y, &wv, &z]));
                }
            }
        }
        None
    })
}

pub fn trailing_arun_after_bblock(c: &mut Ctx) -> R {
    let d = c.words();
    c.all1(&d, |x| {
        for (v, y, wv) in splits3(x) {
            if !btally(&y) {
                continue;
            }
            for z in substrings(x).into_iter().filter(|z| atally(z) && suf(z, x)) {
                if !(z == wv || suf(&z, &wv)) {
                    return Some(wit(&[x, &v, &y, &wv, &z]));
                }
            }
        }
        None
    })
}

pub fn framed_body_inside_markers(c: &mut Ctx) -> R {
    let d = c.words();
    c.all1(&d, |x| {
        // x = t1 v t2 with b-tally ends, x = w1 a w a w2.
        for (t1, v, t2) in splits3(x) {
            if !btally(&t1) || !btally(&t2) {
                continue;
            }
            for (w1, mid, w2) in splits3(x) {
                let m = mid.as_bytes();
                if m.len() < 3 || m[0] != b'a' || m[m.len() - 1] != b'a' {
                    continue;
                }
                let inner = mid.slice(1..m.len() - 1).expect("in range");
                if !sub(&inner, &v) {
                    return Some(wit(&[x, &t1, &v, &t2, &w1, &inner, &w2]));
                }
            }
        }
        None
    })
}

pub fn arun_avoids_bblock(c: &mut Ctx) -> R {
    let d = c.words();
    c.all1(&d, |x| {
        let runs: Vec<BinStr> = substrings(x).into_iter().filter(atally).collect();
        for (wv, y, z) in splits3(x) {
            if !btally(&y) {
                continue;
            }
            if let Some(u) = runs.iter().find(|u| !sub(u, &wv) && !sub(u, &z)) {
                return Some(wit(&[x, &wv, &y, &z, u]));
            }
        }
        None
    })
}

/// Every decomposition `x = w a t y` with `t` a `b`-tally and `w`, `y` nonempty.
fn marked_splits(x: &BinStr) -> Vec<(BinStr, usize)> {
    let xb = x.as_bytes();
    let mut out = Vec::new();
    for i in 1..xb.len() {
        if xb[i] != b'a' {
            continue;
        }
        let mut j = i + 1;
        while j < xb.len() && xb[j] == b'b' {
            j += 1;
            if j < xb.len() {
                out.push((x.slice(0..i).expect("in range"), j - i - 1));
            }
        }
    }
    out
}

pub fn marked_splits_agree(c: &mut Ctx) -> R {
    let d = c.words();
    c.all1(&d, |x| {
        let ms = marked_splits(x);
        for (w1, t1) in &ms {
            for (w2, t2) in &ms {
                let ok = !max_plus_t(Digit::B, &bs(*t1), w2) || !max_plus_t(Digit::B, &bs(*t2), w1) || w1 == w2;
                if !ok {
                    return Some(wit(&[x, w1, &bs(*t1), w2, &bs(*t2)]));
                }
            }
        }
        None
    })
}

pub fn singleton_marker_maximal(c: &mut Ctx) -> R {
    let d = c.words();
    c.all1(&d, |u| {
        let au = cat(&[&a(), u, &a()]);
        for n in 1..=u.len() + 2 {
            let t = bs(n);
            if max_plus_t(Digit::B, &t, &au) && !max_t(Digit::B, &t, &cat(&[&t, &au, &t])) {
                return Some(wit(&[&t, u]));
            }
        }
        None
    })
}

pub fn leading_arun_unique(c: &mut Ctx) -> R {
    let d = c.words();
    c.all1(&d, |x| {
        let heads: BTreeSetLike = splits2(x)
            .into_iter()
            .filter(|(z, rest)| atally(z) && rest.first() == Digit::B)
            .map(|(z, _)| z)
            .collect();
        fail_unless(heads.len() <= 1, &[x])
    })
}

pub fn trailing_arun_unique(c: &mut Ctx) -> R {
    let d = c.words();
    c.all1(&d, |x| {
        let tails: BTreeSetLike = splits2(x)
            .into_iter()
            .filter(|(rest, z)| atally(z) && rest.last() == Digit::B)
            .map(|(_, z)| z)
            .collect();
        fail_unless(tails.len() <= 1, &[x])
    })
}

type BTreeSetLike = std::collections::BTreeSet<BinStr>;
