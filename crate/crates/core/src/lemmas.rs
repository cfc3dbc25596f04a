//! Checkers for the classical periodicity lemmas the coverage bounds rest on,
//! with exhaustive drivers over small binary words.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::gcd;

use crate::packed::PackedBinary;
use crate::word::{has_period, Alphabet, Word};

/// Outcome of an exhaustive lemma check.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LemmaReport {
    /// Instances examined.
    pub cases: u64,
    /// Instances where the lemma's hypothesis held.
    pub hypotheses_met: u64,
    pub counterexamples: Vec<Word>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    fn record(&mut self, hypothesis: bool, conclusion: impl FnOnce() -> bool, w: impl FnOnce() -> Word) {
        self.cases += 1;
        if hypothesis {
            self.hypotheses_met += 1;
            if !conclusion() {
                self.counterexamples.push(w());
            }
        }
    }
}

/// Periods `p, q` of `s` with `|s| >= p + q - gcd(p, q)` for which
/// `gcd(p, q)` is not a period. Always `None` for correct periodicity.
pub fn fine_wilf_violation(s: &[u8]) -> Option<(usize, usize)> {
    let n = s.len();
    let periods: Vec<usize> = (1..=n).filter(|&p| has_period(s, p)).collect();
    for (i, &p) in periods.iter().enumerate() {
        for &q in &periods[i..] {
            let g = gcd(p, q);
            if n + g >= p + q && !has_period(s, g) {
                return Some((p, q));
            }
        }
    }
    None
}

/// For periods `q < p <= |s|`, the prefix and the suffix of length
/// `|s| - q` must both have period `p - q`. Returns the first `(p, q)` that
/// fails.
pub fn period_difference_violation(s: &[u8]) -> Option<(usize, usize)> {
    let n = s.len();
    let periods: Vec<usize> = (1..=n).filter(|&p| has_period(s, p)).collect();
    for (i, &q) in periods.iter().enumerate() {
        for &p in &periods[i + 1..] {
            let m = n - q;
            if !has_period(&s[..m], p - q) || !has_period(&s[q..], p - q) {
                return Some((p, q));
            }
        }
    }
    None
}

/// If `ab` and `bc` both have period `p` and `|b| >= p`, whether `abc` has
/// period `p`. `None` when the hypothesis fails.
pub fn overlap_extension(a: &[u8], b: &[u8], c: &[u8], p: usize) -> Option<bool> {
    let ab: Vec<u8> = a.iter().chain(b).copied().collect();
    let bc: Vec<u8> = b.iter().chain(c).copied().collect();
    if b.len() < p || !has_period(&ab, p) || !has_period(&bc, p) {
        return None;
    }
    let abc: Vec<u8> = ab.iter().chain(c).copied().collect();
    Some(has_period(&abc, p))
}

/// Whether `s[..2p]` has period `p` and `s[k..k+2p+2]` has period `p + 1`.
pub fn square_pair_hypothesis(s: &[u8], p: usize, k: usize) -> bool {
    k <= p
        && s.len() >= k + 2 * p + 2
        && has_period(&s[..2 * p], p)
        && has_period(&s[k..k + 2 * p + 2], p + 1)
}

/// The word `X x^(p-k) X x^(p-k+1) X x` with `|X| = k`.
pub fn square_pair_word(prefix: &[u8], letter: u8, p: usize) -> Vec<u8> {
    let k = prefix.len();
    assert!(k <= p);
    let mut out = Vec::with_capacity(k + 2 * p + 2);
    out.extend_from_slice(prefix);
    out.extend(core::iter::repeat_n(letter, p - k));
    out.extend_from_slice(prefix);
    out.extend(core::iter::repeat_n(letter, p - k + 1));
    out.extend_from_slice(prefix);
    out.push(letter);
    out
}

/// Whether `s` (of length `k + 2p + 2`) is `X x^(p-k) X x^(p-k+1) X x`.
pub fn has_square_pair_structure(s: &[u8], p: usize, k: usize) -> bool {
    if k > p || s.len() != k + 2 * p + 2 {
        return false;
    }
    let letter = s[s.len() - 1];
    s == square_pair_word(&s[..k], letter, p).as_slice()
}

/// Fine and Wilf on every binary word of length at most `max_len`.
pub fn check_fine_wilf(max_len: usize) -> LemmaReport {
    let mut report = LemmaReport::default();
    for_each_binary(max_len, |s| {
        let v = fine_wilf_violation(s);
        report.record(true, || v.is_none(), || binary_word(s));
    });
    report
}

/// The period-difference lemma on every binary word of length at most
/// `max_len`.
pub fn check_period_difference(max_len: usize) -> LemmaReport {
    let mut report = LemmaReport::default();
    for_each_binary(max_len, |s| {
        let v = period_difference_violation(s);
        report.record(true, || v.is_none(), || binary_word(s));
    });
    report
}

/// The overlap-extension lemma for every split `abc` of every binary word of
/// length at most `max_len` and every period `p`.
pub fn check_overlap_extension(max_len: usize) -> LemmaReport {
    let mut report = LemmaReport::default();
    for_each_binary(max_len, |s| {
        let n = s.len();
        for i in 0..=n {
            for j in i..=n {
                for p in 1..=(j - i).max(1) {
                    let outcome = overlap_extension(&s[..i], &s[i..j], &s[j..], p);
                    report.record(outcome.is_some(), || outcome == Some(true), || binary_word(s));
                }
            }
        }
    });
    report
}

/// The square-pair structure lemma for all binary words of length
/// `k + 2p + 2` with `1 <= p <= max_p` and `0 <= k <= p`.
pub fn check_square_pair_structure(max_p: usize) -> LemmaReport {
    let mut report = LemmaReport::default();
    let mut buf = Vec::new();
    for p in 1..=max_p {
        for k in 0..=p {
            let len = k + 2 * p + 2;
            assert!(len <= PackedBinary::MAX_LEN);
            for code in 0..1u64 << len {
                let w = PackedBinary::new(code, len);
                let hypothesis = w.factor_has_period(0, 2 * p, p)
                    && w.factor_has_period(k, 2 * p + 2, p + 1);
                report.cases += 1;
                if hypothesis {
                    report.hypotheses_met += 1;
                    buf.clear();
                    buf.extend((0..len).map(|i| w.symbol(i)));
                    if !has_square_pair_structure(&buf, p, k) {
                        report.counterexamples.push(binary_word(&buf));
                    }
                }
            }
        }
    }
    report
}

/// The most general word of length `len` in which every factor
/// `(start, length, period)` (0-based start) has the given period: positions
/// forced equal share a class, and `letter(class)` picks each class's
/// symbol. Classes are numbered by first occurrence.
pub fn word_with_periods(
    len: usize,
    constraints: &[(usize, usize, usize)],
    alphabet: Alphabet,
    mut letter: impl FnMut(usize) -> u8,
) -> Word {
    let mut parent: Vec<usize> = (0..len).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(start, flen, p) in constraints {
        for i in start..start + flen.saturating_sub(p) {
            let (a, b) = (find(&mut parent, i), find(&mut parent, i + p));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut class_letter = vec![None; len];
    let mut symbols = Vec::with_capacity(len);
    let mut classes = 0;
    for i in 0..len {
        let root = find(&mut parent, i);
        let sym = *class_letter[root].get_or_insert_with(|| {
            let s = letter(classes) % alphabet.size();
            classes += 1;
            s
        });
        symbols.push(sym);
    }
    Word::from_raw(symbols, alphabet)
}

fn binary_word(s: &[u8]) -> Word {
    Word::from_raw(s.to_vec(), Alphabet::BINARY)
}

fn for_each_binary(max_len: usize, mut f: impl FnMut(&[u8])) {
    let mut buf = Vec::with_capacity(max_len);
    for len in 0..=max_len {
        for code in 0..1u64 << len {
            buf.clear();
            buf.extend((0..len).rev().map(|b| ((code >> b) & 1) as u8));
            f(&buf);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fine_wilf_detects_nothing_on_real_words() {
        assert_eq!(fine_wilf_violation(&[0, 1, 0, 0, 1, 0, 1, 0]), None);
        // abaab has periods 3 and 5 and length below 3 + 5 - 1
        assert_eq!(fine_wilf_violation(&[0, 1, 0, 0, 1]), None);
    }

    #[test]
    fn square_pair_word_shape() {
        // X = "b", x = a, p = 3: b aa b aaa b a
        assert_eq!(
            square_pair_word(&[1], 0, 3),
            vec![1, 0, 0, 1, 0, 0, 0, 1, 0]
        );
        let w = square_pair_word(&[1, 0], 0, 4);
        assert!(square_pair_hypothesis(&w, 4, 2));
        assert!(has_square_pair_structure(&w, 4, 2));
        assert!(!has_square_pair_structure(&w, 4, 1));
    }

    #[test]
    fn overlap_extension_cases() {
        assert_eq!(overlap_extension(&[0, 1], &[0, 1], &[0], 2), Some(true));
        assert_eq!(overlap_extension(&[0], &[1], &[0], 2), None);
    }

    #[test]
    fn small_exhaustive_runs() {
        assert!(check_fine_wilf(8).passed());
        assert!(check_period_difference(8).passed());
        assert!(check_overlap_extension(6).passed());
        let r = check_square_pair_structure(3);
        assert!(r.passed());
        assert!(r.hypotheses_met > 0);
    }

    #[test]
    fn word_with_periods_respects_constraints() {
        let w = word_with_periods(10, &[(0, 10, 4), (0, 10, 6)], Alphabet::BINARY, |c| c as u8);
        assert!(has_period(w.symbols(), 4));
        assert!(has_period(w.symbols(), 6));
        assert!(has_period(w.symbols(), 2));
    }
}
