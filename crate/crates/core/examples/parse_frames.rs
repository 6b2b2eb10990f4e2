//! Parsing set codes into frames, with membership and frame classes.

use setcodes::frames::{frame_table, is_min_set, parse};
use setcodes::strings::BinStr;

fn main() {
    for code in ["aa", "baaab", "baaabbababb", "baaabbbaabbaabbb", "baaabbabbbababbb", "aba"] {
        let x = BinStr::lit(code);
        match parse(&x) {
            Ok(p) => {
                let members: Vec<String> = p.elements().iter().map(ToString::to_string).collect();
                println!("{code}: members {{{}}}, minimal {}", members.join(", "), is_min_set(&x));
                print!("{}", frame_table(&p));
            }
            Err(e) => println!("{code}: {e}"),
        }
    }
}
