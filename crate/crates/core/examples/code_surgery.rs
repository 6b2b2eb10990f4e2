//! Subtraction, resolution and remarking on minimal codes.

use setcodes::canonical::{remark, resolve, subtract, subtract_canonical};
use setcodes::strings::BinStr;

fn main() {
    let x = BinStr::lit("baaabbababbbabbabbb");
    println!("{x} minus b: {}", subtract(&x, &BinStr::b()).unwrap());
    println!("{x} minus b, re-encoded: {}", subtract_canonical(&x, &BinStr::b()).unwrap());
    let (head, tail) = resolve(&x, 1).unwrap();
    println!("{x} split before frame 1: {head} and {tail}");
    for z in ["baaab", "baaabbababb", "baaabbbaabbaabbb"] {
        println!("remark {z}: {}", remark(&BinStr::lit(z)).unwrap());
    }
}
