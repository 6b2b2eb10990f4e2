//! Running the bounded property suites and the negative controls.

use setcodes::lemmas::{run_suite, Bounds, Suite};

fn main() {
    let bounds = Bounds::default().with_max_len(8);
    for suite in Suite::CHECKED.into_iter().chain([Suite::Controls]) {
        let r = run_suite(suite, &bounds);
        println!("{suite}: {} properties, {} failed", r.results.len(), r.failures().count());
    }
    for f in run_suite(Suite::Controls, &bounds).failures() {
        println!("{f}");
    }
}
