//! Canonical adjunction step by step, with the branch taken each time.

use setcodes::canonical::{adjoin_simple, adjoin_traced, encode_canonical};
use setcodes::strings::BinStr;

fn main() {
    let mut code = encode_canonical(Vec::<BinStr>::new()).code;
    for y in ["b", "a", "abba", "bb", "ab", "a"] {
        let y = BinStr::lit(y);
        let (next, case) = adjoin_traced(&code, &y).expect("canonical input");
        println!("{code} + {y} -> {next} ({case:?})");
        code = next.code;
    }
    let naive = adjoin_simple(&BinStr::lit("baaab"), &BinStr::b()).expect("set code");
    println!("naive append of b to baaab gives {naive}, which is a set code but not canonical");
}
