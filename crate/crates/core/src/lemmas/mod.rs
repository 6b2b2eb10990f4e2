//! Executable restatements of the structural laws behind set codes.
//!
//! Each registered property is a bounded universal statement over words,
//! `b`-tallies or set codes. Quantifiers are evaluated exhaustively in
//! length-then-lexicographic order, so the first counterexample is the least
//! one; when a domain product exceeds [`Bounds::sample_threshold`] the
//! property is instead evaluated on a seeded pseudo-random sample.

mod coding;
mod framing;
mod oracle;
mod ordering;
mod registry;
mod words;

use std::collections::BTreeSet;
use std::fmt;
use std::rc::Rc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::frames::literal::{self, LiteralClass, LiteralCode, LiteralFrame};
use crate::strings::{all_strings, BinStr};

pub use registry::registry;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    /// Words, the prefix order, successors and tallies.
    Core,
    /// Frame predicates, envelopes, membership and frame order.
    Frames,
    /// Roots, lexical precedence and the tally-class-first order.
    Order,
    /// Minimal, special and canonical codes and the operations on them.
    Canonical,
    /// Deliberately false statements that must produce counterexamples.
    Controls,
}

impl Suite {
    pub const CHECKED: [Suite; 4] = [Suite::Core, Suite::Frames, Suite::Order, Suite::Canonical];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Frames => "frames",
            Suite::Order => "order",
            Suite::Canonical => "canonical",
            Suite::Controls => "controls",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "core" => Ok(Suite::Core),
            "frames" => Ok(Suite::Frames),
            "order" => Ok(Suite::Order),
            "canonical" => Ok(Suite::Canonical),
            "controls" => Ok(Suite::Controls),
            _ => Err(format!(
                "unknown suite {s:?}; expected core, frames, order, canonical or controls"
            )),
        }
    }
}

/// Quantifier bounds shared by every property.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Word variables range over words of at most this length.
    pub string_len: usize,
    /// Code variables range over words of at most this length.
    pub code_len: usize,
    pub seed: u64,
    /// Domain products above this size are sampled.
    pub sample_threshold: u64,
    pub samples: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { string_len: 6, code_len: 12, seed: 0x5eed, sample_threshold: 4_000_000, samples: 250_000 }
    }
}

impl Bounds {
    /// Sets both word and code bounds.
    pub fn with_max_len(mut self, n: usize) -> Self {
        self.string_len = n;
        self.code_len = n;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass { cases: u64, sampled: bool },
    Counterexample(Vec<String>),
}

#[derive(Debug, Clone)]
pub struct PropertyResult {
    pub id: &'static str,
    pub suite: Suite,
    pub statement: &'static str,
    pub reading: &'static str,
    pub outcome: Outcome,
    pub elapsed: Duration,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        matches!(self.outcome, Outcome::Pass { .. })
    }
}

impl fmt::Display for PropertyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Pass { cases, sampled } => {
                let how = if *sampled { "sampled" } else { "exhaustive" };
                write!(f, "pass  {} ({cases} cases, {how})", self.id)?
            }
            Outcome::Counterexample(w) => write!(f, "FAIL  {} counterexample: {}", self.id, w.join(" "))?,
        }
        write!(f, "\n      {} [{}]", self.statement, self.reading)
    }
}

#[derive(Debug, Clone)]
pub struct SuiteSummary {
    pub suite: Suite,
    pub results: Vec<PropertyResult>,
}

impl SuiteSummary {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(PropertyResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyResult> {
        self.results.iter().filter(|r| !r.passed())
    }
}

impl fmt::Display for SuiteSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            writeln!(f, "{r}")?;
        }
        let failed = self.failures().count();
        write!(f, "suite {}: {} properties, {} failed", self.suite, self.results.len(), failed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LemmaError {
    #[error("no property registered under {0:?}")]
    UnknownProperty(String),
}

pub(crate) type Witness = Vec<String>;
pub(crate) type Check = fn(&mut Ctx) -> Result<(), Witness>;

/// A registered property.
pub struct PropertyDef {
    pub id: &'static str,
    pub suite: Suite,
    /// Restatement in plain words.
    pub statement: &'static str,
    /// Whether the original is relativized to a class of words that, in the
    /// standard model, contains every word.
    pub relativized: bool,
    pub(crate) check: Check,
}

impl PropertyDef {
    pub fn reading(&self) -> &'static str {
        if self.relativized {
            "standard-model reading"
        } else {
            "literal"
        }
    }
}

impl fmt::Debug for PropertyDef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PropertyDef").field("id", &self.id).field("suite", &self.suite).finish()
    }
}

/// A word with its literal frame analysis.
pub(crate) struct Analyzed {
    pub x: BinStr,
    pub lit: LiteralCode,
}

impl Analyzed {
    pub fn frames(&self) -> &[LiteralFrame] {
        &self.lit.frames
    }

    pub fn is_set(&self) -> bool {
        self.lit.is_set
    }

    /// Literal members; empty for non-codes and for `aa`.
    pub fn members(&self) -> BTreeSet<BinStr> {
        if self.lit.envelope.is_none() {
            return BTreeSet::new();
        }
        self.lit.frames.iter().map(LiteralFrame::element).collect()
    }

    pub fn lt_x(&self, u: &BinStr, v: &BinStr) -> bool {
        literal::literal_frame_precedes(&self.lit.frames, u, v)
    }

    pub fn classes(&self) -> std::collections::BTreeMap<BinStr, LiteralClass> {
        literal::literal_classes(&self.lit.frames)
    }
}

/// Evaluation state for one property run.
pub struct Ctx {
    pub bounds: Bounds,
    rng: ChaCha8Rng,
    cases: u64,
    sampled: bool,
    words: Rc<Vec<BinStr>>,
    analyzed: Option<Rc<Vec<Analyzed>>>,
}

impl Ctx {
    fn new(bounds: Bounds, cache: &mut Cache) -> Self {
        Ctx {
            bounds,
            rng: ChaCha8Rng::seed_from_u64(bounds.seed),
            cases: 0,
            sampled: false,
            words: cache.words(bounds.string_len),
            analyzed: cache.analyzed.clone(),
        }
    }

    pub(crate) fn tick(&mut self) {
        self.cases += 1;
    }

    /// Every word up to the word bound.
    pub(crate) fn words(&self) -> Rc<Vec<BinStr>> {
        self.words.clone()
    }

    /// Every word up to the code bound with its literal analysis.
    pub(crate) fn analyzed(&mut self) -> Rc<Vec<Analyzed>> {
        if self.analyzed.is_none() {
            let v = all_strings(self.bounds.code_len)
                .into_iter()
                .map(|x| {
                    let lit = literal::analyze(&x);
                    Analyzed { x, lit }
                })
                .collect();
            self.analyzed = Some(Rc::new(v));
        }
        self.analyzed.clone().expect("just filled")
    }

    pub(crate) fn all1<T>(
        &mut self,
        d: &[T],
        mut f: impl FnMut(&T) -> Option<Witness>,
    ) -> Result<(), Witness> {
        for x in d {
            self.cases += 1;
            if let Some(w) = f(x) {
                return Err(w);
            }
        }
        Ok(())
    }

    pub(crate) fn all2(
        &mut self,
        d: &[BinStr],
        mut f: impl FnMut(&BinStr, &BinStr) -> bool,
    ) -> Result<(), Witness> {
        let n = d.len() as u64;
        if n * n > self.bounds.sample_threshold {
            self.sampled = true;
            for _ in 0..self.bounds.samples {
                let (i, j) = (self.pick(d.len()), self.pick(d.len()));
                self.cases += 1;
                if !f(&d[i], &d[j]) {
                    return Err(wit(&[&d[i], &d[j]]));
                }
            }
            return Ok(());
        }
        for x in d {
            for y in d {
                self.cases += 1;
                if !f(x, y) {
                    return Err(wit(&[x, y]));
                }
            }
        }
        Ok(())
    }

    pub(crate) fn all3(
        &mut self,
        d: &[BinStr],
        mut f: impl FnMut(&BinStr, &BinStr, &BinStr) -> bool,
    ) -> Result<(), Witness> {
        let n = d.len() as u64;
        if n * n * n > self.bounds.sample_threshold {
            self.sampled = true;
            for _ in 0..self.bounds.samples {
                let (i, j, k) = (self.pick(d.len()), self.pick(d.len()), self.pick(d.len()));
                self.cases += 1;
                if !f(&d[i], &d[j], &d[k]) {
                    return Err(wit(&[&d[i], &d[j], &d[k]]));
                }
            }
            return Ok(());
        }
        for x in d {
            for y in d {
                for z in d {
                    self.cases += 1;
                    if !f(x, y, z) {
                        return Err(wit(&[x, y, z]));
                    }
                }
            }
        }
        Ok(())
    }

    fn pick(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }
}

pub(crate) fn wit(parts: &[&dyn fmt::Display]) -> Witness {
    parts.iter().map(|p| p.to_string()).collect()
}

/// Shared enumeration results across the properties of one run.
#[derive(Default)]
struct Cache {
    words: Option<(usize, Rc<Vec<BinStr>>)>,
    analyzed: Option<Rc<Vec<Analyzed>>>,
}

impl Cache {
    fn words(&mut self, n: usize) -> Rc<Vec<BinStr>> {
        match &self.words {
            Some((m, w)) if *m == n => w.clone(),
            _ => {
                let w = Rc::new(all_strings(n));
                self.words = Some((n, w.clone()));
                w
            }
        }
    }
}

pub fn find(id: &str) -> Option<&'static PropertyDef> {
    registry().iter().find(|p| p.id == id)
}

fn run_def(def: &PropertyDef, bounds: &Bounds, cache: &mut Cache) -> PropertyResult {
    let mut ctx = Ctx::new(*bounds, cache);
    let start = Instant::now();
    let res = (def.check)(&mut ctx);
    let elapsed = start.elapsed();
    if cache.analyzed.is_none() {
        cache.analyzed = ctx.analyzed.take();
    }
    let outcome = match res {
        Ok(()) => Outcome::Pass { cases: ctx.cases, sampled: ctx.sampled },
        Err(w) => Outcome::Counterexample(w),
    };
    PropertyResult {
        id: def.id,
        suite: def.suite,
        statement: def.statement,
        reading: def.reading(),
        outcome,
        elapsed,
    }
}

/// Evaluates one registered property.
pub fn run_property(id: &str, bounds: &Bounds) -> Result<PropertyResult, LemmaError> {
    let def = find(id).ok_or_else(|| LemmaError::UnknownProperty(id.to_string()))?;
    Ok(run_def(def, bounds, &mut Cache::default()))
}

/// Evaluates every property registered under `suite`.
pub fn run_suite(suite: Suite, bounds: &Bounds) -> SuiteSummary {
    let mut cache = Cache::default();
    let results = registry()
        .iter()
        .filter(|p| p.suite == suite)
        .map(|p| run_def(p, bounds, &mut cache))
        .collect();
    SuiteSummary { suite, results }
}
