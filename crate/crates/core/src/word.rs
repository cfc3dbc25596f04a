//! Words over small alphabets, periods and the reversal/complement symmetries.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_rational::Ratio;

use crate::{Error, Result};

/// Number of letters in an alphabet. Symbols are `0..size`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alphabet(u8);

impl Alphabet {
    pub const BINARY: Alphabet = Alphabet(2);
    /// Largest size with a lowercase ASCII rendering.
    pub const MAX_SIZE: u8 = 26;

    pub fn new(size: u8) -> Result<Self> {
        if size == 0 || size > Self::MAX_SIZE {
            return Err(Error::InvalidArgument(alloc::format!(
                "alphabet size must be in 1..={}, got {size}",
                Self::MAX_SIZE
            )));
        }
        Ok(Alphabet(size))
    }

    pub fn size(self) -> u8 {
        self.0
    }

    pub fn letter(self, symbol: u8) -> char {
        debug_assert!(symbol < self.0);
        (b'a' + symbol) as char
    }
}

/// A finite word. Every symbol is smaller than the alphabet size.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    symbols: Vec<u8>,
    alphabet: Alphabet,
}

impl Word {
    pub fn new(symbols: Vec<u8>, alphabet: Alphabet) -> Result<Self> {
        if let Some(i) = symbols.iter().position(|&s| s >= alphabet.size()) {
            return Err(Error::InvalidArgument(alloc::format!(
                "symbol {} at position {} is outside an alphabet of size {}",
                symbols[i],
                i + 1,
                alphabet.size()
            )));
        }
        Ok(Word { symbols, alphabet })
    }

    pub(crate) fn from_raw(symbols: Vec<u8>, alphabet: Alphabet) -> Self {
        debug_assert!(symbols.iter().all(|&s| s < alphabet.size()));
        Word { symbols, alphabet }
    }

    /// Parses lowercase letters, inferring the smallest alphabet that holds
    /// them. The empty word gets the unary alphabet.
    pub fn parse(text: &str) -> Result<Self> {
        let symbols = parse_symbols(text)?;
        let size = symbols.iter().max().map_or(1, |&m| m + 1);
        Ok(Word::from_raw(symbols, Alphabet(size)))
    }

    /// Parses lowercase letters over a caller-chosen alphabet.
    pub fn parse_with_alphabet(text: &str, alphabet: Alphabet) -> Result<Self> {
        Word::new(parse_symbols(text)?, alphabet)
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Number of occurrences of `symbol`.
    pub fn count(&self, symbol: u8) -> usize {
        self.symbols.iter().filter(|&&s| s == symbol).count()
    }

    /// The factor `w[start..start+len-1]` with 1-based `start`.
    pub fn factor(&self, start: usize, len: usize) -> Word {
        Word::from_raw(
            self.symbols[start - 1..start - 1 + len].to_vec(),
            self.alphabet,
        )
    }

    pub fn has_period(&self, p: usize) -> Result<bool> {
        if p == 0 {
            return Err(Error::InvalidArgument("period must be at least 1".into()));
        }
        Ok(has_period(&self.symbols, p))
    }

    pub fn minimal_period(&self) -> Result<usize> {
        if self.is_empty() {
            return Err(Error::InvalidArgument(
                "the empty word has no minimal period".into(),
            ));
        }
        Ok(minimal_period(&self.symbols))
    }

    /// `|w| / minimal_period(w)`, in lowest terms.
    pub fn exponent(&self) -> Result<Ratio<u64>> {
        let p = self.minimal_period()?;
        Ok(Ratio::new(self.len() as u64, p as u64))
    }

    pub fn is_primitive(&self) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::InvalidArgument(
                "primitivity is undefined for the empty word".into(),
            ));
        }
        Ok(is_primitive(&self.symbols))
    }

    pub fn is_palindrome(&self) -> bool {
        self.symbols.iter().eq(self.symbols.iter().rev())
    }

    pub fn reverse(&self) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        Word::from_raw(symbols, self.alphabet)
    }

    /// Swaps `a` and `b`. Only defined for binary words.
    pub fn complement(&self) -> Result<Word> {
        if self.alphabet.size() != 2 {
            return Err(Error::UnsupportedAlphabet {
                size: self.alphabet.size(),
            });
        }
        Ok(Word::from_raw(
            self.symbols.iter().map(|&s| 1 - s).collect(),
            self.alphabet,
        ))
    }

    /// Lexicographically least image under reversal, plus complementation
    /// when the alphabet is binary.
    pub fn canonical_form(&self) -> Word {
        let reversed = self.reverse();
        let mut best = if reversed.symbols < self.symbols {
            reversed
        } else {
            self.clone()
        };
        if let Ok(c) = self.complement() {
            let rc = c.reverse();
            for img in [c, rc] {
                if img.symbols < best.symbols {
                    best = img;
                }
            }
        }
        best
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical_form().symbols == self.symbols
    }

    /// Concatenation; the result uses the larger of the two alphabets.
    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        Word::from_raw(symbols, self.alphabet.max(other.alphabet))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use fmt::Write;
        self.symbols
            .iter()
            .try_for_each(|&s| f.write_char(self.alphabet.letter(s)))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

impl From<&Word> for String {
    fn from(w: &Word) -> String {
        alloc::format!("{w}")
    }
}

fn parse_symbols(text: &str) -> Result<Vec<u8>> {
    text.chars()
        .enumerate()
        .map(|(i, c)| match c {
            'a'..='z' => Ok(c as u8 - b'a'),
            _ => Err(Error::Parse {
                position: i + 1,
                found: c,
            }),
        })
        .collect()
}

/// `s[i] == s[i+p]` wherever both exist. Vacuous once `p >= s.len()`.
///
/// Panics if `p == 0`.
pub fn has_period(s: &[u8], p: usize) -> bool {
    assert!(p > 0, "period must be positive");
    p >= s.len() || s[..s.len() - p] == s[p..]
}

/// Least period of a non-empty slice, by direct scan.
pub fn minimal_period(s: &[u8]) -> usize {
    debug_assert!(!s.is_empty());
    (1..=s.len())
        .find(|&p| has_period(s, p))
        .unwrap_or(s.len())
}

/// Not a proper integer power of a shorter word.
pub fn is_primitive(s: &[u8]) -> bool {
    let n = s.len();
    !(1..n).any(|p| n.is_multiple_of(p) && has_period(s, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn parse_maps_letters() {
        assert_eq!(w("aa").symbols(), &[0, 0]);
        assert_eq!(w("ababaabaa").symbols(), &[0, 1, 0, 1, 0, 0, 1, 0, 0]);
        assert!(w("").is_empty());
        assert_eq!(w("abc").alphabet().size(), 3);
        assert_eq!(w("aaa").alphabet().size(), 1);
    }

    #[test]
    fn parse_reports_position() {
        assert_eq!(
            Word::parse("abXa"),
            Err(Error::Parse {
                position: 3,
                found: 'X'
            })
        );
        assert!(Word::parse("ab a").is_err());
    }

    #[test]
    fn parse_with_alphabet_rejects_large_symbols() {
        assert!(Word::parse_with_alphabet("abc", Alphabet::BINARY).is_err());
        let x = Word::parse_with_alphabet("aa", Alphabet::new(3).unwrap()).unwrap();
        assert_eq!(x.alphabet().size(), 3);
    }

    #[test]
    fn periods() {
        assert!(w("ababa").has_period(2).unwrap());
        assert!(w("ababa").has_period(5).unwrap());
        assert!(w("ababa").has_period(9).unwrap());
        assert!(!w("aabaab").has_period(2).unwrap());
        assert!(w("ababa").has_period(0).is_err());
    }

    #[test]
    fn minimal_periods_and_exponents() {
        assert_eq!(w("ababa").minimal_period().unwrap(), 2);
        assert_eq!(w("ababa").exponent().unwrap(), Ratio::new(5, 2));
        assert_eq!(w("aaaa").minimal_period().unwrap(), 1);
        assert_eq!(w("aabaa").minimal_period().unwrap(), 3);
        assert!(w("").minimal_period().is_err());
    }

    #[test]
    fn primitivity() {
        assert!(!w("abab").is_primitive().unwrap());
        assert!(w("aba").is_primitive().unwrap());
        assert!(w("ababa").is_primitive().unwrap());
        assert!(!w("aaa").is_primitive().unwrap());
        assert!(w("").is_primitive().is_err());
    }

    #[test]
    fn reverse_and_complement() {
        assert_eq!(w("aab").reverse().to_string(), "baa");
        assert_eq!(w("aabbaabb").reverse().to_string(), "bbaabbaa");
        assert!(w("aabaa").is_palindrome());
        assert_eq!(w("aab").complement().unwrap().to_string(), "bba");
        assert_eq!(w("ab").complement().unwrap().to_string(), "ba");
        assert_eq!(
            w("abc").complement(),
            Err(Error::UnsupportedAlphabet { size: 3 })
        );
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(w("baa").canonical_form().to_string(), "aab");
        assert_eq!(w("aab").canonical_form().to_string(), "aab");
        assert_eq!(w("bbab").canonical_form().to_string(), "aaba");
        assert_eq!(w("cba").canonical_form().to_string(), "abc");
        assert_eq!(w("").canonical_form().to_string(), "");
        let x = w("aabaa");
        assert_eq!(x.canonical_form(), x);
    }

    #[test]
    fn factor_and_count() {
        let x = w("ababaabaa");
        assert_eq!(x.factor(3, 7).to_string(), "abaabaa");
        assert_eq!(x.count(0), 6);
        assert_eq!(x.count(1), 3);
    }

    #[test]
    fn word_new_validates() {
        assert!(Word::new(vec![0, 2], Alphabet::BINARY).is_err());
        assert!(Alphabet::new(0).is_err());
        assert!(Alphabet::new(27).is_err());
    }
}
