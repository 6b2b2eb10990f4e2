//! Finite sets coded as words over `{a, b}`.
//!
//! A set code wraps each member `y` as `b^m a y a` and closes with an
//! envelope tally; the markers are `b`-runs longer than any run inside the
//! member they open. The crate parses such codes, orders members, builds
//! the unique canonical code of a set, and checks set-theoretic axioms on
//! bounded universes of codes.

pub mod canonical;
pub mod frames;
pub mod interp;
pub mod lemmas;
pub mod order;
pub mod strings;
pub mod tally;

pub use canonical::{adjoin, encode_canonical, is_set_star, SetStarCode};
pub use frames::{is_set, members, parse, ParsedCode};
pub use strings::{BinStr, Digit};
pub use tally::Tally;
