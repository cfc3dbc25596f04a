//! Exhaustive extremal search over all words of a fixed length, and the
//! exhaustive coverage verifiers.
//!
//! The search space is a dense range of integer codes so it can be cut into
//! contiguous blocks and reduced in any order: see [`SearchSpace::blocks`],
//! [`search_block`] and [`Partial::merge`]. [`tau_exhaustive`] is the
//! single-threaded driver; the `runforge` crate provides a parallel one that
//! produces the same [`TauRecord`].

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::packed::PackedBinary;
use crate::runs::{coverage_of, find_runs_fast, trl_of, Run};
use crate::word::{Alphabet, Word};
use crate::{Error, Result};

/// Witness lists longer than this collapse to the least witness plus a count.
pub const WITNESS_LIMIT: usize = 64;

/// Longest binary length accepted by the exhaustive search.
pub const MAX_BINARY_LEN: usize = 32;

/// Largest `alpha^n` accepted for alphabets of size three or more
/// (all ternary words of length 14).
pub const MAX_GENERAL_WORDS: u64 = 4_782_969;

/// Maximum total run length of binary words of lengths 1 to 22, with one
/// maximizing word each, as previously tabulated.
pub const KNOWN_BINARY_MAXIMA: [(usize, u64, &str); 22] = [
    (1, 0, "a"),
    (2, 2, "aa"),
    (3, 3, "aaa"),
    (4, 4, "aaaa"),
    (5, 6, "aabab"),
    (6, 10, "aabaab"),
    (7, 12, "aabaabb"),
    (8, 16, "aabbaabb"),
    (9, 19, "abaaabaab"),
    (10, 29, "aababaabab"),
    (11, 32, "abaababaaba"),
    (12, 37, "abaababaabab"),
    (13, 42, "ababbababbaba"),
    (14, 47, "aaabaabaaabaab"),
    (15, 53, "abaabababaababa"),
    (16, 60, "aabaababaabaabab"),
    (17, 70, "ababaabababaababa"),
    (18, 73, "aababaabababaababa"),
    (19, 80, "abaababaabaababaaba"),
    (20, 85, "abaababaabaababaabab"),
    (21, 92, "ababaababababaabababa"),
    (22, 99, "aababaababaaababaababa"),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Max,
    Min,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Max => "max",
            Mode::Min => "min",
        }
    }

    /// Whether `candidate` is strictly better than `current`.
    fn improves(self, candidate: u64, current: u64) -> bool {
        match self {
            Mode::Max => candidate > current,
            Mode::Min => candidate < current,
        }
    }
}

/// All words of length `n` over an alphabet, up to the symmetries used for
/// pruning. Binary words are restricted to those starting with `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchSpace {
    n: usize,
    alphabet: Alphabet,
}

impl SearchSpace {
    pub fn new(n: usize, alphabet: Alphabet) -> Result<Self> {
        let a = alphabet.size();
        if n == 0 {
            return Err(Error::Capacity("word length must be at least 1".into()));
        }
        if a < 2 {
            return Err(Error::Capacity(format!(
                "alphabet size must be at least 2, got {a}"
            )));
        }
        if a == 2 && n > MAX_BINARY_LEN {
            return Err(Error::Capacity(format!(
                "binary search supports n <= {MAX_BINARY_LEN}, got {n}"
            )));
        }
        if a > 2 {
            let words = (a as u64).checked_pow(n as u32);
            if words.is_none_or(|w| w > MAX_GENERAL_WORDS) {
                return Err(Error::Capacity(format!(
                    "alpha^n must not exceed {MAX_GENERAL_WORDS} (e.g. alpha = 3, n <= 14); got alpha = {a}, n = {n}"
                )));
            }
        }
        Ok(SearchSpace { n, alphabet })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    fn is_binary(&self) -> bool {
        self.alphabet.size() == 2
    }

    /// Number of codes enumerated.
    pub fn size(&self) -> u64 {
        if self.is_binary() {
            1u64 << (self.n - 1)
        } else {
            (self.alphabet.size() as u64).pow(self.n as u32)
        }
    }

    /// Splits `0..size()` into at most `count` contiguous, ordered blocks.
    pub fn blocks(&self, count: usize) -> Vec<Range<u64>> {
        let size = self.size();
        let count = (count.max(1) as u64).min(size);
        let step = size / count;
        let extra = size % count;
        let mut out = Vec::with_capacity(count as usize);
        let mut lo = 0;
        for i in 0..count {
            let hi = lo + step + u64::from(i < extra);
            out.push(lo..hi);
            lo = hi;
        }
        out
    }

    /// Word for a code. Codes are ordered like the words they encode.
    pub fn word(&self, code: u64) -> Word {
        if self.is_binary() {
            PackedBinary::new(code, self.n).to_word()
        } else {
            let mut digits = vec![0u8; self.n];
            self.decode(code, &mut digits);
            Word::from_raw(digits, self.alphabet)
        }
    }

    fn decode(&self, mut code: u64, digits: &mut [u8]) {
        let a = self.alphabet.size() as u64;
        for d in digits.iter_mut().rev() {
            *d = (code % a) as u8;
            code /= a;
        }
    }
}

/// Odometer increment; returns `false` on wraparound.
fn increment(digits: &mut [u8], alphabet: u8) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < alphabet {
            return true;
        }
        *d = 0;
    }
    false
}

fn is_reverse_canonical(s: &[u8]) -> bool {
    s.iter().le(s.iter().rev())
}

/// Extremal value over a block of codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partial {
    pub value: Option<u64>,
    /// Distinct canonical classes attaining `value`.
    pub classes: u64,
    /// Least canonical codes attaining `value`, ascending, at most
    /// [`WITNESS_LIMIT`].
    pub witnesses: Vec<u64>,
    pub examined: u64,
}

impl Partial {
    pub fn empty() -> Self {
        Partial {
            value: None,
            classes: 0,
            witnesses: Vec::new(),
            examined: 0,
        }
    }

    #[inline]
    fn offer(&mut self, mode: Mode, value: u64, code: u64, canonical: impl FnOnce() -> bool) {
        match self.value {
            Some(v) if v == value => {}
            Some(v) if !mode.improves(value, v) => return,
            _ => {
                self.value = Some(value);
                self.classes = 0;
                self.witnesses.clear();
            }
        }
        if canonical() {
            self.classes += 1;
            if self.witnesses.len() < WITNESS_LIMIT {
                self.witnesses.push(code);
            }
        }
    }

    /// Combines two partial results. Commutative and associative, so blocks
    /// may be reduced in any order.
    pub fn merge(self, other: Partial, mode: Mode) -> Partial {
        let examined = self.examined + other.examined;
        let (a, b) = match (self.value, other.value) {
            (None, _) => return Partial { examined, ..other },
            (_, None) => return Partial { examined, ..self },
            (Some(x), Some(y)) if mode.improves(y, x) => {
                return Partial { examined, ..other }
            }
            (Some(x), Some(y)) if mode.improves(x, y) => return Partial { examined, ..self },
            _ => (self, other),
        };
        let mut witnesses = Vec::with_capacity(a.witnesses.len() + b.witnesses.len());
        let (mut i, mut j) = (0, 0);
        while witnesses.len() < WITNESS_LIMIT && (i < a.witnesses.len() || j < b.witnesses.len())
        {
            let take_a = j == b.witnesses.len()
                || (i < a.witnesses.len() && a.witnesses[i] <= b.witnesses[j]);
            if take_a {
                witnesses.push(a.witnesses[i]);
                i += 1;
            } else {
                witnesses.push(b.witnesses[j]);
                j += 1;
            }
        }
        witnesses.dedup();
        Partial {
            value: a.value,
            classes: a.classes + b.classes,
            witnesses,
            examined,
        }
    }
}

/// Scans the codes in `range`.
pub fn search_block(space: &SearchSpace, mode: Mode, range: Range<u64>) -> Partial {
    let mut best = Partial::empty();
    if range.is_empty() {
        return best;
    }
    best.examined = range.end - range.start;
    if space.is_binary() {
        for code in range {
            let w = PackedBinary::new(code, space.n);
            let value = w.trl() as u64;
            best.offer(mode, value, code, || w.canonical() == w);
        }
    } else {
        let a = space.alphabet.size();
        let mut digits = vec![0u8; space.n];
        space.decode(range.start, &mut digits);
        for code in range {
            let value = trl_of(&digits);
            best.offer(mode, value, code, || is_reverse_canonical(&digits));
            increment(&mut digits, a);
        }
    }
    best
}

/// Result of an exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauRecord {
    pub n: usize,
    pub alphabet_size: u8,
    pub mode: Mode,
    pub value: u64,
    /// All extremal canonical words when there are at most
    /// [`WITNESS_LIMIT`] of them, otherwise only the least one.
    pub witnesses: Vec<Word>,
    pub witness_classes: u64,
    pub words_examined: u64,
}

impl TauRecord {
    pub fn from_partial(space: &SearchSpace, mode: Mode, partial: Partial) -> Self {
        let keep = if partial.classes as usize > WITNESS_LIMIT {
            1
        } else {
            partial.witnesses.len()
        };
        TauRecord {
            n: space.n,
            alphabet_size: space.alphabet.size(),
            mode,
            value: partial.value.expect("search space is never empty"),
            witnesses: partial.witnesses[..keep]
                .iter()
                .map(|&c| space.word(c))
                .collect(),
            witness_classes: partial.classes,
            words_examined: partial.examined,
        }
    }
}

/// Extremal total run length over all words of length `n`, single-threaded.
pub fn tau_exhaustive(n: usize, alphabet: Alphabet, mode: Mode) -> Result<TauRecord> {
    let space = SearchSpace::new(n, alphabet)?;
    let partial = search_block(&space, mode, 0..space.size());
    Ok(TauRecord::from_partial(&space, mode, partial))
}

/// Every word of length `n` over `alphabet`, in lexicographic order.
pub fn all_words(n: usize, alphabet: Alphabet) -> impl Iterator<Item = Word> {
    let a = alphabet.size();
    let mut next = Some(vec![0u8; n]);
    core::iter::from_fn(move || {
        let cur = next.take()?;
        let mut succ = cur.clone();
        if increment(&mut succ, a) {
            next = Some(succ);
        }
        Some(Word::from_raw(cur, alphabet))
    })
}

/// A position covered by two runs of period `p` and two of period `p + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourRunsViolation {
    pub word: Word,
    pub position: usize,
    pub period: usize,
    pub runs: Vec<Run>,
}

/// A position covered by more than three runs with periods in
/// `{2q - 1, 2q}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCoverageViolation {
    pub word: Word,
    pub position: usize,
    pub q: usize,
    pub runs: Vec<Run>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport<V> {
    pub n_max: usize,
    pub alphabet_size: u8,
    pub words_checked: u64,
    pub violations: Vec<V>,
}

impl<V> VerificationReport<V> {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn period_counts(covering: &[Run], n: usize) -> Vec<usize> {
    let mut counts = vec![0usize; n / 2 + 2];
    for r in covering {
        counts[r.period] += 1;
    }
    counts
}

pub fn four_runs_violations(w: &Word) -> Vec<FourRunsViolation> {
    let runs = find_runs_fast(w);
    let mut out = Vec::new();
    for (i, covering) in coverage_of(w.len(), &runs).into_iter().enumerate() {
        let counts = period_counts(&covering, w.len());
        for p in 1..counts.len() - 1 {
            if counts[p] >= 2 && counts[p + 1] >= 2 {
                out.push(FourRunsViolation {
                    word: w.clone(),
                    position: i + 1,
                    period: p,
                    runs: runs.clone(),
                });
            }
        }
    }
    out
}

pub fn pair_coverage_violations(w: &Word) -> Vec<PairCoverageViolation> {
    let runs = find_runs_fast(w);
    let mut out = Vec::new();
    for (i, covering) in coverage_of(w.len(), &runs).into_iter().enumerate() {
        let counts = period_counts(&covering, w.len());
        for q in 1..=counts.len() / 2 {
            let odd = counts[2 * q - 1];
            let even = counts.get(2 * q).copied().unwrap_or(0);
            if odd + even > 3 {
                out.push(PairCoverageViolation {
                    word: w.clone(),
                    position: i + 1,
                    q,
                    runs: runs.clone(),
                });
            }
        }
    }
    out
}

fn check_all<V>(
    n_max: usize,
    alphabet: Alphabet,
    check: fn(&Word) -> Vec<V>,
) -> Result<VerificationReport<V>> {
    let a = alphabet.size() as u64;
    let total = (1..=n_max as u32).try_fold(0u64, |acc, n| acc.checked_add(a.checked_pow(n)?));
    match total {
        Some(t) if t <= 1 << 28 => {}
        _ => {
            return Err(Error::Capacity(format!(
                "verification over all words up to length {n_max} on {a} letters exceeds 2^28 words"
            )))
        }
    }
    let mut report = VerificationReport {
        n_max,
        alphabet_size: alphabet.size(),
        words_checked: 0,
        violations: Vec::new(),
    };
    for n in 1..=n_max {
        for w in all_words(n, alphabet) {
            report.words_checked += 1;
            report.violations.extend(check(&w));
        }
    }
    Ok(report)
}

/// Checks every word of length at most `n_max` for a letter lying in two
/// runs of period `p` and two runs of period `p + 1`.
pub fn verify_four_runs_theorem(
    n_max: usize,
    alphabet: Alphabet,
) -> Result<VerificationReport<FourRunsViolation>> {
    check_all(n_max, alphabet, four_runs_violations)
}

/// Checks every word of length at most `n_max` for a letter lying in more
/// than three runs whose periods are `2q - 1` or `2q`.
pub fn verify_pair_coverage(
    n_max: usize,
    alphabet: Alphabet,
) -> Result<VerificationReport<PairCoverageViolation>> {
    check_all(n_max, alphabet, pair_coverage_violations)
}
