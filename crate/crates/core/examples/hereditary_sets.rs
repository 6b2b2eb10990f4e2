//! Hereditarily finite sets written as set literals and coded as words.

use setcodes::interp::{hf_decode, hf_encode, parse_hf_literal};

fn main() {
    for lit in ["{}", "{{}}", "{{},{{}}}", "{r:ab, {r:a}}"] {
        let t = parse_hf_literal(lit).expect("literal");
        let code = hf_encode(&t);
        println!("{lit} -> {code} -> {}", hf_decode(&code).expect("set code"));
    }
}
