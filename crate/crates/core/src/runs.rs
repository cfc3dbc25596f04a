//! Run enumeration and per-word statistics.
//!
//! Two independent enumerators are provided. [`find_runs_oracle`] follows the
//! definition directly, computing the least period of every factor from a
//! border table. [`find_runs_fast`] scans, for every candidate period `p`, the
//! blocks of positions where `w[i] == w[i+p]`; a block of length `L >= p`
//! is a run of length `L + p` unless the factor has a smaller period, which
//! must then divide `p`. Binary words of length at most 64 take a
//! bit-parallel path.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_rational::Ratio;

use crate::packed::PackedBinary;
use crate::word::{has_period, Word};

/// A maximal periodicity. `start` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Run {
    pub start: usize,
    pub length: usize,
    pub period: usize,
}

impl Run {
    pub fn new(start: usize, length: usize, period: usize) -> Self {
        Run {
            start,
            length,
            period,
        }
    }

    /// Last position covered, 1-based and inclusive.
    pub fn end(&self) -> usize {
        self.start + self.length - 1
    }

    pub fn contains(&self, position: usize) -> bool {
        self.start <= position && position <= self.end()
    }

    pub fn exponent(&self) -> Ratio<u64> {
        Ratio::new(self.length as u64, self.period as u64)
    }

    /// Number of positions shared with `other`.
    pub fn overlap(&self, other: &Run) -> usize {
        let lo = self.start.max(other.start);
        let hi = self.end().min(other.end());
        (hi + 1).saturating_sub(lo)
    }

    pub fn factor(&self, w: &Word) -> Word {
        w.factor(self.start, self.length)
    }
}

impl Ord for Run {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.start, self.period, self.length).cmp(&(other.start, other.period, other.length))
    }
}

impl PartialOrd for Run {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunStats {
    pub trl: u64,
    pub run_count: u64,
    pub exponent_sum: Ratio<u64>,
}

impl RunStats {
    pub fn from_runs(runs: &[Run]) -> Self {
        RunStats {
            trl: runs.iter().map(|r| r.length as u64).sum(),
            run_count: runs.len() as u64,
            exponent_sum: runs
                .iter()
                .fold(Ratio::from_integer(0), |acc, r| acc + r.exponent()),
        }
    }
}

/// Runs straight from the definition: every factor whose least period `p`
/// fits at least twice and that cannot be extended either way with period
/// `p`. Quadratic in `|w|` via one border table per start position.
pub fn find_runs_oracle(w: &Word) -> Vec<Run> {
    let s = w.symbols();
    let n = s.len();
    let mut runs = Vec::new();
    let mut border = vec![0usize; n + 1];
    for i in 0..n {
        let x = &s[i..];
        // border[m] = longest proper border of x[..m]
        border[1] = 0;
        for m in 2..=x.len() {
            let mut b = border[m - 1];
            while b > 0 && x[b] != x[m - 1] {
                b = border[b];
            }
            border[m] = if x[b] == x[m - 1] { b + 1 } else { 0 };
        }
        for len in 2..=x.len() {
            let p = len - border[len];
            if len < 2 * p {
                continue;
            }
            let j = i + len - 1;
            let left_max = i == 0 || s[i - 1] != s[i - 1 + p];
            let right_max = j + 1 == n || s[j + 1] != s[j + 1 - p];
            if left_max && right_max {
                runs.push(Run::new(i + 1, len, p));
            }
        }
    }
    runs.sort();
    runs
}

/// Calls `f(start, length, period)` (0-based `start`) for every run of `s`.
/// Allocation-free; works for any alphabet.
pub fn for_each_run_in<F: FnMut(usize, usize, usize)>(s: &[u8], mut f: F) {
    let n = s.len();
    for p in 1..=n / 2 {
        let mut i = 0;
        while i + p < n {
            if s[i] != s[i + p] {
                i += 1;
                continue;
            }
            let block_start = i;
            while i + p < n && s[i] == s[i + p] {
                i += 1;
            }
            let block = i - block_start;
            if block >= p {
                let length = block + p;
                let factor = &s[block_start..block_start + length];
                let reducible = (1..=p / 2).any(|d| p % d == 0 && has_period(factor, d));
                if !reducible {
                    f(block_start, length, p);
                }
            }
        }
    }
}

fn for_each_run<F: FnMut(usize, usize, usize)>(s: &[u8], f: F) {
    match PackedBinary::from_symbols(s) {
        Some(packed) => packed.for_each_run(f),
        None => for_each_run_in(s, f),
    }
}

/// Same set as [`find_runs_oracle`], sorted by start then period.
pub fn find_runs_fast(w: &Word) -> Vec<Run> {
    let mut runs = Vec::new();
    for_each_run(w.symbols(), |start, length, period| {
        runs.push(Run::new(start + 1, length, period))
    });
    runs.sort();
    runs
}

/// Total run length without materializing the run set.
pub fn trl_of(s: &[u8]) -> u64 {
    let mut total = 0u64;
    for_each_run(s, |_, len, _| total += len as u64);
    total
}

pub fn trl(w: &Word) -> u64 {
    trl_of(w.symbols())
}

pub fn run_stats(w: &Word) -> RunStats {
    RunStats::from_runs(&find_runs_fast(w))
}

/// For each 1-based position `i` (index `i - 1`), the runs containing it.
pub fn coverage(w: &Word) -> Vec<Vec<Run>> {
    coverage_of(w.len(), &find_runs_fast(w))
}

pub fn coverage_of(n: usize, runs: &[Run]) -> Vec<Vec<Run>> {
    let mut cover = vec![Vec::new(); n];
    for r in runs {
        for slot in &mut cover[r.start - 1..r.end()] {
            slot.push(*r);
        }
    }
    cover
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Alphabet;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn lengths(runs: &[Run]) -> Vec<usize> {
        let mut l: Vec<usize> = runs.iter().map(|r| r.length).collect();
        l.sort();
        l
    }

    #[test]
    fn oracle_on_ababaabaa() {
        let runs = find_runs_oracle(&w("ababaabaa"));
        assert_eq!(
            runs,
            vec![
                Run::new(1, 5, 2),
                Run::new(3, 7, 3),
                Run::new(5, 2, 1),
                Run::new(8, 2, 1)
            ]
        );
    }

    #[test]
    fn oracle_small_cases() {
        assert!(find_runs_oracle(&w("abc")).is_empty());
        assert!(find_runs_oracle(&w("")).is_empty());
        assert_eq!(
            find_runs_oracle(&w("aabaab")),
            vec![Run::new(1, 2, 1), Run::new(1, 6, 3), Run::new(4, 2, 1)]
        );
    }

    #[test]
    fn fast_matches_examples() {
        let runs = find_runs_fast(&w("aababaabab"));
        assert_eq!(lengths(&runs), vec![2, 2, 4, 5, 6, 10]);
        assert_eq!(trl(&w("aababaabab")), 29);

        let u2 = find_runs_fast(&w("ababaababa"));
        assert_eq!(lengths(&u2), vec![2, 5, 5, 6, 10]);
        assert_eq!(trl(&w("ababaababa")), 28);
    }

    #[test]
    fn generic_path_matches_packed_path() {
        let x = w("aababaabab");
        let mut generic = Vec::new();
        for_each_run_in(x.symbols(), |s, l, p| generic.push(Run::new(s + 1, l, p)));
        generic.sort();
        assert_eq!(generic, find_runs_fast(&x));
    }

    #[test]
    fn ternary_words_use_generic_path() {
        let x = w("abcabcaa");
        assert_eq!(
            find_runs_fast(&x),
            vec![Run::new(1, 7, 3), Run::new(7, 2, 1)]
        );
        assert_eq!(find_runs_fast(&x), find_runs_oracle(&x));
    }

    #[test]
    fn stats() {
        let s = run_stats(&w("ababaabaa"));
        assert_eq!(s.trl, 16);
        assert_eq!(s.run_count, 4);
        assert_eq!(s.exponent_sum, Ratio::new(53, 6));

        let one = run_stats(&w("a"));
        assert_eq!((one.trl, one.run_count), (0, 0));
        assert_eq!(one.exponent_sum, Ratio::from_integer(0));

        assert_eq!(run_stats(&w("aabaabb")).trl, 12);
        assert_eq!(run_stats(&w("")).trl, 0);
    }

    #[test]
    fn coverage_lists() {
        let c = coverage(&w("aabaab"));
        assert_eq!(c[0], vec![Run::new(1, 2, 1), Run::new(1, 6, 3)]);
        assert!(coverage(&w("abc")).iter().all(Vec::is_empty));
        for slot in coverage(&w("aaaa")) {
            assert_eq!(slot, vec![Run::new(1, 4, 1)]);
        }
    }

    #[test]
    fn long_binary_words_fall_back_to_generic() {
        let sym: Vec<u8> = (0..100).map(|i| ((i * i) % 7 % 2) as u8).collect();
        let x = Word::new(sym, Alphabet::BINARY).unwrap();
        assert_eq!(find_runs_fast(&x), find_runs_oracle(&x));
    }

    #[test]
    fn run_helpers() {
        let r = Run::new(3, 7, 3);
        assert_eq!(r.end(), 9);
        assert!(r.contains(3) && r.contains(9) && !r.contains(10));
        assert_eq!(r.overlap(&Run::new(8, 2, 1)), 2);
        assert_eq!(r.overlap(&Run::new(1, 2, 1)), 0);
        assert_eq!(r.factor(&w("ababaabaa")), w("abaabaa"));
    }
}
