//! Set theories interpreted in the string model.
//!
//! Sets are canonical codes, `0` is `"aa"`, membership is frame membership
//! and the adjunction relation `S(x, y, z)` holds when `z` is the canonical
//! adjunction of `y` to `x`. Axioms are checked instance by instance over
//! bounded universes, in length-then-lexicographic order, so the first
//! counterexample reported is the least one.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::canonical::{adjoin, adjoin_simple, canonical_codes, encode_canonical, is_set_star};
use crate::frames::{is_set, members, parse};
use crate::strings::{all_strings, BinStr, StrError};

/// A hereditarily finite set whose leaves may be raw words.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HFTerm {
    Atom(BinStr),
    SetOf(BTreeSet<HFTerm>),
}

impl HFTerm {
    pub fn empty() -> HFTerm {
        HFTerm::SetOf(BTreeSet::new())
    }

    pub fn set<I: IntoIterator<Item = HFTerm>>(items: I) -> HFTerm {
        HFTerm::SetOf(items.into_iter().collect())
    }
}

impl fmt::Display for HFTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HFTerm::Atom(s) => write!(f, "r:{s}"),
            HFTerm::SetOf(items) => {
                f.write_str("{")?;
                for (i, t) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    t.fmt(f)?;
                }
                f.write_str("}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HFParseError {
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected character {found:?} at offset {pos}")]
    Unexpected { pos: usize, found: char },
    #[error("bad raw word at offset {pos}: {source}")]
    BadAtom { pos: usize, source: StrError },
    #[error("trailing input at offset {pos}")]
    Trailing { pos: usize },
}

struct Lexer {
    chars: Vec<(usize, char)>,
    at: usize,
}

impl Lexer {
    fn new(src: &str) -> Self {
        let chars = src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Lexer { chars, at: 0 }
    }

    fn peek(&self) -> Option<(usize, char)> {
        self.chars.get(self.at).copied()
    }

    fn bump(&mut self) -> Result<(usize, char), HFParseError> {
        let c = self.peek().ok_or(HFParseError::UnexpectedEnd)?;
        self.at += 1;
        Ok(c)
    }

    fn expect(&mut self, want: char) -> Result<(), HFParseError> {
        match self.bump()? {
            (_, c) if c == want => Ok(()),
            (pos, found) => Err(HFParseError::Unexpected { pos, found }),
        }
    }

    fn set(&mut self) -> Result<HFTerm, HFParseError> {
        self.expect('{')?;
        let mut items = BTreeSet::new();
        if let Some((_, '}')) = self.peek() {
            self.at += 1;
            return Ok(HFTerm::SetOf(items));
        }
        loop {
            items.insert(self.item()?);
            match self.bump()? {
                (_, ',') => continue,
                (_, '}') => return Ok(HFTerm::SetOf(items)),
                (pos, found) => return Err(HFParseError::Unexpected { pos, found }),
            }
        }
    }

    fn item(&mut self) -> Result<HFTerm, HFParseError> {
        match self.peek() {
            Some((_, '{')) => self.set(),
            Some((pos, 'r')) => {
                self.at += 1;
                self.expect(':')?;
                let mut word = String::new();
                while let Some((_, c @ ('a' | 'b'))) = self.peek() {
                    word.push(c);
                    self.at += 1;
                }
                BinStr::parse(&word)
                    .map(HFTerm::Atom)
                    .map_err(|source| HFParseError::BadAtom { pos, source })
            }
            Some((pos, found)) => Err(HFParseError::Unexpected { pos, found }),
            None => Err(HFParseError::UnexpectedEnd),
        }
    }
}

/// Parses `{item, ...}` where an item is a nested set or `r:` followed by a
/// word over `{a, b}`. Whitespace is ignored.
pub fn parse_hf_literal(src: &str) -> Result<HFTerm, HFParseError> {
    let mut lx = Lexer::new(src);
    let t = lx.set()?;
    match lx.peek() {
        None => Ok(t),
        Some((pos, _)) => Err(HFParseError::Trailing { pos }),
    }
}

impl FromStr for HFTerm {
    type Err = HFParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_hf_literal(s)
    }
}

/// Atoms encode as themselves; a set encodes as the canonical code of its
/// items' encodings.
pub fn hf_encode(t: &HFTerm) -> BinStr {
    match t {
        HFTerm::Atom(s) => s.clone(),
        HFTerm::SetOf(items) => encode_canonical(items.iter().map(hf_encode)).code,
    }
}

/// Reads a set code as a hereditarily finite set: members that are
/// canonical codes decode recursively, all others stay raw words.
///
/// Inverts [`hf_encode`] on terms whose atoms are not canonical codes.
pub fn hf_decode(x: &BinStr) -> Result<HFTerm, crate::frames::FrameError> {
    let p = parse(x)?;
    Ok(HFTerm::set(p.elements().into_iter().map(|e| {
        if is_set_star(&e) {
            hf_decode(&e).expect("canonical codes parse")
        } else {
            HFTerm::Atom(e)
        }
    })))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theory {
    /// Null set and adjunction, over all set codes with naive adjunction.
    Ast,
    /// Null set, weak adjunction and extensionality, over canonical codes.
    Ast1Ext,
    /// The relational adjunction theory.
    Ps0p,
    /// The relational adjunction theory plus extensionality.
    Ps0pExt,
}

impl Theory {
    pub const ALL: [Theory; 4] = [Theory::Ast, Theory::Ps0p, Theory::Ps0pExt, Theory::Ast1Ext];

    pub fn name(self) -> &'static str {
        match self {
            Theory::Ast => "AST",
            Theory::Ast1Ext => "AST1+EXT",
            Theory::Ps0p => "PS0'",
            Theory::Ps0pExt => "PS0'+EXT",
        }
    }

    /// Whether `=` is read as agreement on canonical-code members.
    fn extensional(self) -> bool {
        matches!(self, Theory::Ps0pExt | Theory::Ast1Ext)
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theory {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ast" => Ok(Theory::Ast),
            "ast1-ext" => Ok(Theory::Ast1Ext),
            "ps0" => Ok(Theory::Ps0p),
            "ps0-ext" => Ok(Theory::Ps0pExt),
            _ => Err(format!("unknown theory {s:?}; expected ast, ast1-ext, ps0 or ps0-ext")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Set variables range over codes of at most this length.
    pub max_len: usize,
    /// Element variables of non-extensional theories also range over every
    /// word of at most this length.
    pub elem_len: usize,
    /// Largest accepted `max_len`.
    pub cutoff: usize,
}

impl VerifyConfig {
    pub fn new(max_len: usize) -> Self {
        VerifyConfig { max_len, elem_len: 3, cutoff: 14 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("bound {max_len} exceeds the enumeration cutoff {cutoff}")]
    BoundTooLarge { max_len: usize, cutoff: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Counterexample { axiom: &'static str, witnesses: Vec<BinStr> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub theory: Theory,
    pub bound: usize,
    pub set_universe: usize,
    pub element_universe: usize,
    pub instances: u64,
    pub verdict: Verdict,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} max-len {}: {} sets, {} elements, {} instances: ",
            self.theory, self.bound, self.set_universe, self.element_universe, self.instances
        )?;
        match &self.verdict {
            Verdict::Pass => f.write_str("pass"),
            Verdict::Counterexample { axiom, witnesses } => {
                write!(f, "counterexample to {axiom}:")?;
                for w in witnesses {
                    write!(f, " {w}")?;
                }
                Ok(())
            }
        }
    }
}

/// An adjunction operation under test; `None` when undefined on the input.
pub type AdjoinFn<'a> = &'a dyn Fn(&BinStr, &BinStr) -> Option<BinStr>;

fn canonical_adjoin(x: &BinStr, y: &BinStr) -> Option<BinStr> {
    adjoin(x, y).ok().map(|c| c.code)
}

fn simple_adjoin(x: &BinStr, y: &BinStr) -> Option<BinStr> {
    adjoin_simple(x, y).ok()
}

/// Checks `theory` with its standard adjunction: naive for AST, canonical
/// otherwise.
pub fn verify_axioms(theory: Theory, config: VerifyConfig) -> Result<AxiomReport, VerifyError> {
    match theory {
        Theory::Ast => verify_axioms_with(theory, config, &simple_adjoin),
        _ => verify_axioms_with(theory, config, &canonical_adjoin),
    }
}

struct Model<'a> {
    sets: Vec<BinStr>,
    elems: Vec<BinStr>,
    op: AdjoinFn<'a>,
    instances: u64,
    extensional: bool,
    star_members: BTreeMap<BinStr, Option<BTreeSet<BinStr>>>,
}

type Check = Result<(), (&'static str, Vec<BinStr>)>;

fn fail(axiom: &'static str, w: &[&BinStr]) -> Check {
    Err((axiom, w.iter().map(|s| (*s).clone()).collect()))
}

impl Model<'_> {
    fn s(&mut self, x: &BinStr, y: &BinStr) -> Option<BinStr> {
        self.instances += 1;
        (self.op)(x, y)
    }

    /// Members that are themselves canonical codes; `None` for non-codes.
    fn star_members(&mut self, x: &BinStr) -> Option<BTreeSet<BinStr>> {
        self.star_members
            .entry(x.clone())
            .or_insert_with(|| {
                members(x).ok().map(|m| m.into_iter().filter(is_set_star).collect())
            })
            .clone()
    }

    /// String identity, or agreement on canonical-code members when
    /// extensional.
    fn eq(&mut self, x: &BinStr, y: &BinStr) -> bool {
        if x == y {
            return true;
        }
        if !self.extensional {
            return false;
        }
        match (self.star_members(x), self.star_members(y)) {
            (Some(p), Some(q)) => p == q,
            _ => false,
        }
    }

    fn eq_opt(&mut self, x: &Option<BinStr>, y: &Option<BinStr>) -> bool {
        match (x, y) {
            (Some(x), Some(y)) => self.eq(x, y),
            _ => false,
        }
    }

    /// S(x, y, z) with `z` computed.
    fn rel(&mut self, x: &BinStr, y: &BinStr, z: &BinStr) -> bool {
        let r = self.s(x, y);
        r.is_some_and(|r| self.eq(&r, z))
    }

    fn ps0(&mut self) -> Check {
        let zero = BinStr::empty_code();
        let sets = self.sets.clone();
        let elems = self.elems.clone();
        for y in &elems {
            if self.rel(&zero, y, &zero) {
                return fail("NONEMPTY adjoining to 0 never gives 0", &[y]);
            }
        }
        for x in &sets {
            for y in &elems {
                let z1 = self.s(x, y);
                let Some(z1) = z1 else {
                    return fail("TOTAL adjunction is defined", &[x, y]);
                };
                if !is_set_star(&z1) {
                    return fail("TOTAL adjunction stays in the domain", &[x, y, &z1]);
                }
                let z2 = self.s(&z1, y);
                if !self.eq_opt(&Some(z1.clone()), &z2) {
                    return fail("IDEMPOTENT adjoining twice adds nothing", &[x, y]);
                }
            }
        }
        for x in &sets {
            for y in &elems {
                let Some(z1) = self.s(x, y) else { continue };
                for z in &elems {
                    let z2 = self.s(&z1, z);
                    let z3 = self.s(x, z);
                    let z4 = z3.as_ref().and_then(|z3| self.s(z3, y));
                    if !self.eq_opt(&z2, &z4) {
                        return fail("COMMUTE adjunction order is irrelevant", &[x, y, z]);
                    }
                    // Membership law with w = z.
                    let w = z;
                    if self.rel(&z1, w, &z1) && !(self.rel(x, w, x) || self.eq(w, y)) {
                        return fail("MEMBERSHIP members of an adjunction", &[x, y, w]);
                    }
                }
            }
        }
        // Functionality: every z of the set universe standing in the relation to
        // (x, y) is the computed one.
        let mut by_members: BTreeMap<BTreeSet<BinStr>, Vec<BinStr>> = BTreeMap::new();
        for z in &sets {
            if let Ok(p) = parse(z) {
                by_members.entry(p.members()).or_default().push(z.clone());
            }
        }
        for x in &sets {
            let Ok(mx) = members(x) else { continue };
            for y in &elems {
                let mut m = mx.clone();
                m.insert(y.clone());
                let Some(zs) = by_members.get(&m) else { continue };
                let computed = self.s(x, y);
                for z in zs {
                    if !self.eq_opt(&Some(z.clone()), &computed) {
                        return fail("FUNCTIONAL adjunction has one result", &[x, y, z]);
                    }
                }
            }
        }
        Ok(())
    }

    fn ps0_ext(&mut self) -> Check {
        let sets = self.sets.clone();
        let elems = self.elems.clone();
        let fixes: Vec<Vec<bool>> = sets
            .iter()
            .map(|x| elems.iter().map(|z| self.rel(x, z, x)).collect())
            .collect();
        for (i, x) in sets.iter().enumerate() {
            for (j, y) in sets.iter().enumerate() {
                if fixes[i] == fixes[j] && !self.eq(x, y) {
                    return fail("EXT sets fixed by the same adjunctions are equal", &[x, y]);
                }
            }
        }
        Ok(())
    }

    fn member(&mut self, w: &BinStr, x: &BinStr) -> bool {
        self.instances += 1;
        members(x).is_ok_and(|m| m.contains(w))
    }

    fn null(&mut self) -> Check {
        let zero = BinStr::empty_code();
        let elems = self.elems.clone();
        for y in &elems {
            if self.member(y, &zero) {
                return fail("NULL 0 has no members", &[y]);
            }
        }
        Ok(())
    }

    fn ast(&mut self) -> Check {
        self.null()?;
        let sets = self.sets.clone();
        let elems = self.elems.clone();
        for x in &sets {
            let Ok(mx) = members(x) else { continue };
            for y in &elems {
                let Some(z) = self.s(x, y) else {
                    return fail("ADJ adjunction exists", &[x, y]);
                };
                let ok = is_set(&z) && members(&z).is_ok_and(|mz| {
                    let mut want = mx.clone();
                    want.insert(y.clone());
                    mz == want
                });
                if !ok {
                    return fail("ADJ members of an adjunction", &[x, y, &z]);
                }
            }
        }
        Ok(())
    }

    fn ast1_ext(&mut self) -> Check {
        self.null()?;
        let sets = self.sets.clone();
        let elems = self.elems.clone();
        for x in &sets {
            for y in &elems {
                let Some(z) = self.s(x, y) else {
                    return fail("ADJ1 adjunction exists", &[x, y]);
                };
                if !is_set_star(&z) || !self.member(y, &z) {
                    return fail("ADJ1 the new element is a member", &[x, y, &z]);
                }
                for w in &elems {
                    let in_x = self.member(w, x);
                    let in_z = self.member(w, &z);
                    if in_x && !in_z {
                        return fail("ADJ1 old members survive", &[x, y, w]);
                    }
                    if in_z && !in_x && !self.eq(w, y) {
                        return fail("ADJ1 nothing else is added", &[x, y, w]);
                    }
                }
            }
        }
        for x in &sets {
            for y in &sets {
                let same = elems.iter().all(|z| {
                    members(x).is_ok_and(|m| m.contains(z)) == members(y).is_ok_and(|m| m.contains(z))
                });
                self.instances += 1;
                if same && !self.eq(x, y) {
                    return fail("EXT sets with the same members are equal", &[x, y]);
                }
            }
        }
        Ok(())
    }
}

/// Checks `theory` with a caller-supplied adjunction. Variables bound by
/// the adjunction relation are computed rather than enumerated, so codes
/// longer than the bound still take part as results.
pub fn verify_axioms_with(
    theory: Theory,
    config: VerifyConfig,
    op: AdjoinFn<'_>,
) -> Result<AxiomReport, VerifyError> {
    if config.max_len > config.cutoff {
        return Err(VerifyError::BoundTooLarge { max_len: config.max_len, cutoff: config.cutoff });
    }
    let sets: Vec<BinStr> = match theory {
        Theory::Ast => all_strings(config.max_len).into_iter().filter(is_set).collect(),
        _ => canonical_codes(config.max_len),
    };
    // Under member-set equality a raw word is indistinguishable from the
    // empty set's members, so extensional theories quantify over codes only.
    let elems: Vec<BinStr> = if theory.extensional() {
        sets.clone()
    } else {
        let mut e = all_strings(config.elem_len);
        e.extend(sets.iter().filter(|s| s.len() > config.elem_len).cloned());
        e
    };
    let mut model = Model {
        sets,
        elems,
        op,
        instances: 0,
        extensional: theory.extensional(),
        star_members: BTreeMap::new(),
    };
    let result = match theory {
        Theory::Ast => model.ast(),
        Theory::Ps0p => model.ps0(),
        Theory::Ps0pExt => model.ps0().and_then(|_| model.ps0_ext()),
        Theory::Ast1Ext => model.ast1_ext(),
    };
    let verdict = match result {
        Ok(()) => Verdict::Pass,
        Err((axiom, witnesses)) => Verdict::Counterexample { axiom, witnesses },
    };
    Ok(AxiomReport {
        theory,
        bound: config.max_len,
        set_universe: model.sets.len(),
        element_universe: model.elems.len(),
        instances: model.instances,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hf_literals() {
        let t = parse_hf_literal("{ {}, {{}} }").unwrap();
        assert_eq!(hf_encode(&t).as_str(), "baaaabbabaaaababb");
        assert_eq!(hf_encode(&parse_hf_literal("{r:ab}").unwrap()).as_str(), "bbaababb");
        assert!(parse_hf_literal("{r:}").is_err());
        assert!(parse_hf_literal("{}}").is_err());
    }
}
