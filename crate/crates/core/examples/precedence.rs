//! Lexical precedence, tally classes and the combined order on words.

use setcodes::order::{left_root, lex_precedes, precedes};
use setcodes::strings::{all_strings, BinStr};

fn main() {
    let pairs = [("a", "b"), ("aab", "abb"), ("b", "aa"), ("ab", "aba")];
    for (u, v) in pairs {
        let (u, v) = (BinStr::lit(u), BinStr::lit(v));
        let root = left_root(&u, &v).expect("distinct").map(|r| r.root.to_string());
        println!(
            "{u} vs {v}: lexically before {}, before {}, left root {}",
            lex_precedes(&u, &v),
            precedes(&u, &v),
            root.as_deref().unwrap_or("none")
        );
    }
    let mut words = all_strings(3);
    words.sort_by(setcodes::order::precedes_cmp);
    let sorted: Vec<String> = words.iter().map(ToString::to_string).collect();
    println!("words up to length 3 in precedence order: {}", sorted.join(" "));
}
