//! Replays the command transcript: each block is a `$ setcode ...` line, the
//! expected stdout, stderr lines prefixed with `! `, and `[exit N]`.

use std::process::Command;

const TRANSCRIPT: &str = include_str!("fixtures/cli_transcript.txt");

struct Case<'a> {
    args: Vec<&'a str>,
    expected: String,
}

fn cases() -> Vec<Case<'static>> {
    TRANSCRIPT
        .split("\n\n")
        .filter(|b| !b.trim().is_empty())
        .map(|block| {
            let (cmd, expected) = block.split_once('\n').expect("command line");
            let args = cmd.strip_prefix("$ setcode").expect("block starts with a command").split_whitespace().collect();
            Case { args, expected: format!("{expected}\n") }
        })
        .collect()
}

fn run(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_setcode")).args(args).output().expect("binary runs");
    let mut s = String::from_utf8(out.stdout).expect("utf-8 stdout");
    for line in String::from_utf8(out.stderr).expect("utf-8 stderr").lines() {
        s.push_str(&format!("! {line}\n"));
    }
    s.push_str(&format!("[exit {}]\n", out.status.code().expect("exit code")));
    s
}

#[test]
fn transcript_matches() {
    let cases = cases();
    assert!(cases.len() > 30);
    for c in cases {
        assert_eq!(run(&c.args), c.expected, "setcode {}", c.args.join(" "));
    }
}

#[test]
fn transcript_covers_every_verb() {
    let verbs = [
        "check", "decode", "members", "canon", "hf-encode", "adjoin", "subtract", "remark", "resolve", "order",
        "census", "verify-axioms", "fuzz-lemmas",
    ];
    let cases = cases();
    for v in verbs {
        assert!(cases.iter().any(|c| c.args.contains(&v)), "{v} missing from transcript");
    }
}

#[test]
fn help_lists_every_verb() {
    let help = run(&["--help"]);
    assert!(help.ends_with("[exit 0]\n"));
    for v in ["check", "hf-encode", "verify-axioms", "fuzz-lemmas"] {
        assert!(help.contains(v), "{v}");
    }
}
