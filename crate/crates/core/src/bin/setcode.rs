//! Command-line access to set codes. Results go to stdout one per line,
//! diagnostics to stderr. Exit 0 on success, 1 when a demanded verdict is
//! false, 2 on usage or parse errors.

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use setcodes::canonical::{
    adjoin_traced, encode_canonical, is_set_star, is_special, remark, resolve, subtract,
    subtract_canonical, uniqueness_census,
};
use setcodes::frames::{frame_table, is_min_set, parse, ParsedCode};
use setcodes::interp::{hf_decode, hf_encode, parse_hf_literal, verify_axioms, Theory, VerifyConfig};
use setcodes::lemmas::{run_property, run_suite, Bounds, Suite};
use setcodes::order::{is_lex_plus_parsed, lex_precedes};
use setcodes::strings::BinStr;
use setcodes::tally::{ordering_word, tally_class_compare};

#[derive(Parser)]
#[command(name = "setcode", version, about = "Finite sets coded as words over {a, b}")]
struct Cli {
    /// Print the frame table of every code produced.
    #[arg(long, global = true)]
    explain: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

fn word(s: &str) -> Result<BinStr, String> {
    BinStr::parse(s).map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Cmd {
    /// Set, MinSet, Lex+, Special and Set* flags with the frame table.
    Check {
        #[arg(value_parser = word)]
        x: BinStr,
    },
    /// The code read as a hereditarily finite set.
    Decode {
        #[arg(value_parser = word)]
        x: BinStr,
    },
    /// Members in frame order.
    Members {
        #[arg(value_parser = word)]
        x: BinStr,
    },
    /// Canonical code of the given elements.
    Canon {
        #[arg(value_parser = word)]
        elems: Vec<BinStr>,
    },
    /// Canonical code of a set literal such as '{ {}, r:ab }'.
    HfEncode { literal: String },
    /// Canonical adjunction of Y to the canonical code X.
    Adjoin {
        #[arg(value_parser = word)]
        x: BinStr,
        #[arg(value_parser = word)]
        y: BinStr,
    },
    /// Removes Y from the minimal code X by excising its frame.
    Subtract {
        #[arg(value_parser = word)]
        x: BinStr,
        #[arg(value_parser = word)]
        y: BinStr,
        /// Re-encode the remaining members canonically instead.
        #[arg(long)]
        canonical: bool,
    },
    /// Lengthens the leading first and free markers of a minimal code.
    Remark {
        #[arg(value_parser = word)]
        x: BinStr,
    },
    /// Splits a minimal code before internal frame I (0-based).
    Resolve {
        #[arg(value_parser = word)]
        x: BinStr,
        i: usize,
    },
    /// Lexical, tally-class and combined comparison of U with V.
    Order {
        #[arg(value_parser = word)]
        u: BinStr,
        #[arg(value_parser = word)]
        v: BinStr,
    },
    /// Groups canonical codes up to a length by member set.
    Census {
        #[arg(long)]
        max_len: usize,
    },
    /// Checks a theory's axioms over bounded universes of codes.
    VerifyAxioms {
        #[arg(long)]
        theory: Theory,
        #[arg(long)]
        max_len: usize,
    },
    /// Runs a property suite (core, frames, order, canonical, controls or all).
    FuzzLemmas {
        #[arg(long, required_unless_present = "property")]
        suite: Option<String>,
        /// Runs one property by id instead of a suite.
        #[arg(long, conflicts_with = "suite")]
        property: Option<String>,
        /// Bound on code variables.
        #[arg(long)]
        max_len: Option<usize>,
        /// Bound on word variables.
        #[arg(long)]
        word_len: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// Exit status with stdout text and stderr diagnostic.
struct Outcome {
    code: u8,
    out: String,
    err: String,
}

impl Outcome {
    fn ok(out: String) -> Self {
        Outcome { code: 0, out, err: String::new() }
    }

    fn verdict(pass: bool, out: String) -> Self {
        Outcome { code: if pass { 0 } else { 1 }, out, err: String::new() }
    }

    fn usage(err: impl std::fmt::Display) -> Self {
        Outcome { code: 2, out: String::new(), err: format!("error: {err}\n") }
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Result line plus, under `--explain`, its frame table.
fn code_out(code: &BinStr, explain: bool) -> String {
    let mut s = format!("{code}\n");
    if explain {
        if let Ok(p) = parse(code) {
            s.push_str(&frame_table(&p));
        }
    }
    s
}

fn parsed(x: &BinStr) -> Result<ParsedCode, Outcome> {
    parse(x).map_err(Outcome::usage)
}

fn run(cli: Cli) -> Outcome {
    let explain = cli.explain;
    match cli.cmd {
        Cmd::Check { x } => match parse(&x) {
            Err(setcodes::frames::FrameError::NotASetCode(clause)) => {
                Outcome::verdict(false, format!("Set: no ({clause})\n"))
            }
            Err(e) => Outcome::usage(e),
            Ok(p) => {
                let mut s = String::from("Set: yes\n");
                let _ = writeln!(s, "MinSet: {}", yes(is_min_set(&x)));
                let _ = writeln!(s, "Lex+: {}", yes(is_lex_plus_parsed(&p)));
                let _ = writeln!(s, "Special: {}", yes(is_special(&x)));
                let _ = writeln!(s, "Set*: {}", yes(is_set_star(&x)));
                s.push_str(&frame_table(&p));
                Outcome::ok(s)
            }
        },
        Cmd::Decode { x } => match hf_decode(&x) {
            Ok(t) => Outcome::ok(format!("{t}\n")),
            Err(e) => Outcome::usage(e),
        },
        Cmd::Members { x } => match parsed(&x) {
            Ok(p) => {
                let mut s: String = p.elements().iter().map(|e| format!("{e}\n")).collect();
                if explain {
                    s.push_str(&frame_table(&p));
                }
                Outcome::ok(s)
            }
            Err(o) => o,
        },
        Cmd::Canon { elems } => Outcome::ok(code_out(&encode_canonical(elems).code, explain)),
        Cmd::HfEncode { literal } => match parse_hf_literal(&literal) {
            Ok(t) => Outcome::ok(code_out(&hf_encode(&t), explain)),
            Err(e) => Outcome::usage(e),
        },
        Cmd::Adjoin { x, y } => match adjoin_traced(&x, &y) {
            Ok((z, case)) => {
                let mut s = code_out(&z.code, explain);
                if explain {
                    let _ = writeln!(s, "case: {case:?}");
                }
                Outcome::ok(s)
            }
            Err(e) => Outcome::usage(e),
        },
        Cmd::Subtract { x, y, canonical } => {
            let r = if canonical { subtract_canonical(&x, &y).map(|c| c.code) } else { subtract(&x, &y) };
            match r {
                Ok(z) => Outcome::ok(code_out(&z, explain)),
                Err(e) => Outcome::usage(e),
            }
        }
        Cmd::Remark { x } => match remark(&x) {
            Ok(z) => Outcome::ok(code_out(&z, explain)),
            Err(e) => Outcome::usage(e),
        },
        Cmd::Resolve { x, i } => match resolve(&x, i) {
            Ok((head, tail)) => Outcome::ok(code_out(&head, explain) + &code_out(&tail, explain)),
            Err(e) => Outcome::usage(e),
        },
        Cmd::Order { u, v } => {
            let lex = if u == v {
                Ordering::Equal
            } else if lex_precedes(&u, &v) {
                Ordering::Less
            } else {
                Ordering::Greater
            };
            let class = tally_class_compare(&u, &v);
            let combined = if class == Ordering::Equal { lex } else { class };
            Outcome::ok(format!(
                "lex: {}\ntally-class: {}\nprecedence: {}\n",
                ordering_word(lex),
                ordering_word(class),
                ordering_word(combined)
            ))
        }
        Cmd::Census { max_len } => {
            if max_len > 24 {
                return Outcome::usage(format!("max-len {max_len} exceeds the enumeration cutoff 24"));
            }
            let r = uniqueness_census(max_len);
            let dups = r.duplicates().len();
            let mut s = String::new();
            let _ = writeln!(s, "scanned: {}", r.scanned);
            let _ = writeln!(s, "set codes: {}", r.set_codes);
            let _ = writeln!(s, "canonical codes: {}", r.canonical_codes);
            let _ = writeln!(s, "classes: {}", r.classes.len());
            let _ = writeln!(s, "duplicates: {dups}");
            for (m, codes) in &r.classes {
                let set: Vec<&str> = m.iter().map(BinStr::as_str).collect();
                let codes: Vec<&str> = codes.iter().map(BinStr::as_str).collect();
                let _ = writeln!(s, "{{{}}}\t{}", set.join(","), codes.join(" "));
            }
            Outcome::verdict(dups == 0, s)
        }
        Cmd::VerifyAxioms { theory, max_len } => match verify_axioms(theory, VerifyConfig::new(max_len)) {
            Ok(r) => Outcome::verdict(r.passed(), format!("{r}\n")),
            Err(e) => Outcome::usage(e),
        },
        Cmd::FuzzLemmas { suite, property, max_len, word_len, seed } => {
            let mut b = Bounds::default();
            if let Some(n) = max_len {
                b.code_len = n;
            }
            if let Some(n) = word_len {
                b.string_len = n;
            }
            if let Some(s) = seed {
                b.seed = s;
            }
            if b.code_len > 16 || b.string_len > 10 {
                return Outcome::usage("bounds exceed the enumeration cutoffs (max-len 16, word-len 10)");
            }
            if let Some(id) = property {
                return match run_property(&id, &b) {
                    Ok(r) => Outcome::verdict(r.passed(), format!("{r}\n")),
                    Err(e) => Outcome::usage(e),
                };
            }
            let name = suite.expect("clap requires suite or property");
            let suites: Vec<Suite> = if name == "all" {
                Suite::CHECKED.to_vec()
            } else {
                match name.parse() {
                    Ok(s) => vec![s],
                    Err(e) => return Outcome::usage(e),
                }
            };
            let mut s = String::new();
            let mut pass = true;
            for suite in suites {
                let r = run_suite(suite, &b);
                pass &= r.all_passed();
                let _ = writeln!(s, "{r}");
            }
            Outcome::verdict(pass, s)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let o = run(cli);
    print!("{}", o.out);
    eprint!("{}", o.err);
    ExitCode::from(o.code)
}
