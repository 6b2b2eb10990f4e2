//! Word primitives and tally classes.

use setcodes::strings::{concat, is_initial, successor, BinStr};
use setcodes::tally::{max_b_run, min_nonoccurring_btally, tally_class};

fn main() {
    let x = BinStr::lit("abba");
    println!("x = {x}, x*b = {}", concat(&x, &BinStr::b()));
    println!("successor of a = {}, of {x} = {}", successor(&BinStr::a()), successor(&x));
    println!("ab is a proper prefix of abba: {}", is_initial(&BinStr::lit("ab"), &x));
    for w in ["aa", "aba", "abba", "bbabbb"] {
        let w = BinStr::lit(w);
        println!(
            "{w}: longest b-run {}, least absent b-tally {}, tally class {}",
            max_b_run(&w),
            min_nonoccurring_btally(&w),
            tally_class(&w)
        );
    }
}
