//! Canonical encoding, recognition and the uniqueness census.

use setcodes::canonical::{encode_canonical, is_set_star, uniqueness_census};
use setcodes::strings::BinStr;

fn main() {
    let sets: [&[&str]; 4] = [&[], &["a"], &["b", "a"], &["a", "abba", "bb"]];
    for elems in sets {
        let code = encode_canonical(elems.iter().map(|e| BinStr::lit(e)));
        println!("{elems:?} -> {code} (canonical: {})", is_set_star(&code.code));
    }
    let r = uniqueness_census(12);
    println!(
        "census to length {}: {} words, {} set codes, {} canonical codes, {} duplicate classes",
        r.max_len,
        r.scanned,
        r.set_codes,
        r.canonical_codes,
        r.duplicates().len()
    );
}
