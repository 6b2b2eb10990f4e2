//! Checking weak set theories in the model of canonical codes.

use setcodes::interp::{verify_axioms, Theory, VerifyConfig};

fn main() {
    for theory in Theory::ALL {
        match verify_axioms(theory, VerifyConfig::new(8)) {
            Ok(report) => println!("{report}"),
            Err(e) => println!("{theory}: {e}"),
        }
    }
}
