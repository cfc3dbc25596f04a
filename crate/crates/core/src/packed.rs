//! Binary words packed into a single `u64`.
//!
//! Position `i` (0-based, left to right) lives at bit `len - 1 - i`, so the
//! integer order of two packed words of equal length is their lexicographic
//! order. The exhaustive searches iterate over these integers directly.

use crate::word::{Alphabet, Word};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PackedBinary {
    bits: u64,
    len: u32,
}

#[inline]
fn low_mask(k: u32) -> u64 {
    if k >= 64 {
        !0
    } else {
        (1u64 << k) - 1
    }
}

#[inline]
fn span(lo: u32, count: u32) -> u64 {
    low_mask(count) << lo
}

impl PackedBinary {
    pub const MAX_LEN: usize = 64;

    /// Keeps the low `len` bits of `bits`.
    pub fn new(bits: u64, len: usize) -> Self {
        assert!(len <= Self::MAX_LEN, "packed words hold at most 64 letters");
        let len = len as u32;
        PackedBinary {
            bits: bits & low_mask(len),
            len,
        }
    }

    pub fn from_symbols(symbols: &[u8]) -> Option<Self> {
        if symbols.len() > Self::MAX_LEN || symbols.iter().any(|&s| s > 1) {
            return None;
        }
        let bits = symbols.iter().fold(0u64, |acc, &s| (acc << 1) | s as u64);
        Some(PackedBinary {
            bits,
            len: symbols.len() as u32,
        })
    }

    pub fn from_word(w: &Word) -> Result<Self> {
        if w.alphabet().size() > 2 {
            return Err(Error::UnsupportedAlphabet {
                size: w.alphabet().size(),
            });
        }
        Self::from_symbols(w.symbols()).ok_or_else(|| {
            Error::Capacity(alloc::format!(
                "packed words hold at most {} letters, got {}",
                Self::MAX_LEN,
                w.len()
            ))
        })
    }

    pub fn to_word(self) -> Word {
        Word::from_raw(
            (0..self.len()).map(|i| self.symbol(i)).collect(),
            Alphabet::BINARY,
        )
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    /// Symbol at 0-based position `i`.
    #[inline]
    pub fn symbol(self, i: usize) -> u8 {
        ((self.bits >> (self.len as usize - 1 - i)) & 1) as u8
    }

    pub fn flip(self, i: usize) -> Self {
        PackedBinary {
            bits: self.bits ^ (1u64 << (self.len as usize - 1 - i)),
            len: self.len,
        }
    }

    pub fn reverse(self) -> Self {
        if self.len == 0 {
            return self;
        }
        PackedBinary {
            bits: self.bits.reverse_bits() >> (64 - self.len),
            len: self.len,
        }
    }

    pub fn complement(self) -> Self {
        PackedBinary {
            bits: !self.bits & low_mask(self.len),
            len: self.len,
        }
    }

    pub fn canonical(self) -> Self {
        let r = self.reverse();
        let c = self.complement();
        let rc = r.complement();
        self.min(r).min(c).min(rc)
    }

    /// Bit `j` is set iff the letters at positions `len-1-j-p` and
    /// `len-1-j` agree, for `j < len - p`.
    #[inline]
    fn eq_mask(self, p: u32) -> u64 {
        if p >= self.len {
            return 0;
        }
        !(self.bits ^ (self.bits >> p)) & low_mask(self.len - p)
    }

    pub fn has_period(self, p: usize) -> bool {
        assert!(p > 0, "period must be positive");
        let p = p as u32;
        p >= self.len || self.eq_mask(p) == low_mask(self.len - p)
    }

    /// Whether the factor at 0-based `start` of length `len` has period `p`.
    #[inline]
    pub fn factor_has_period(self, start: usize, len: usize, p: usize) -> bool {
        if p >= len {
            return true;
        }
        let (n, s, l, p) = (self.len, start as u32, len as u32, p as u32);
        let want = span(n - s - l, l - p);
        self.eq_mask(p) & want == want
    }

    /// Calls `f(start, length, period)` for every run, with 0-based `start`,
    /// in increasing period order.
    #[inline]
    pub fn for_each_run<F: FnMut(usize, usize, usize)>(self, mut f: F) {
        let n = self.len;
        for p in 1..=n / 2 {
            let mut m = self.eq_mask(p);
            while m != 0 {
                let lo = m.trailing_zeros();
                // m < 2^63, so the shifted complement always has a zero bit.
                let ones = (!(m >> lo)).trailing_zeros();
                m &= !span(lo, ones);
                if ones < p {
                    continue;
                }
                let start = (n - p - lo - ones) as usize;
                let length = (ones + p) as usize;
                let p = p as usize;
                let reducible = (1..=p / 2)
                    .any(|d| p.is_multiple_of(d) && self.factor_has_period(start, length, d));
                if !reducible {
                    f(start, length, p);
                }
            }
        }
    }

    pub fn trl(self) -> u32 {
        let mut total = 0;
        self.for_each_run(|_, len, _| total += len as u32);
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn pk(s: &str) -> PackedBinary {
        PackedBinary::from_word(&Word::parse_with_alphabet(s, Alphabet::BINARY).unwrap()).unwrap()
    }

    #[test]
    fn integer_order_is_lexicographic() {
        assert!(pk("aab") < pk("aba"));
        assert!(pk("abb") < pk("baa"));
        assert_eq!(pk("aab").bits(), 0b001);
    }

    #[test]
    fn roundtrip_and_symmetries() {
        assert_eq!(pk("aabab").to_word().to_string(), "aabab");
        assert_eq!(pk("aab").reverse().to_word().to_string(), "baa");
        assert_eq!(pk("aab").complement().to_word().to_string(), "bba");
        assert_eq!(pk("bbab").canonical().to_word().to_string(), "aaba");
        assert!(pk("").reverse().is_empty());
    }

    #[test]
    fn periods() {
        assert!(pk("ababa").has_period(2));
        assert!(!pk("aabaab").has_period(2));
        assert!(pk("aabaab").has_period(3));
        assert!(pk("aabaab").factor_has_period(1, 4, 3));
        assert!(!pk("aabaab").factor_has_period(0, 3, 1));
    }

    #[test]
    fn trl_of_examples() {
        assert_eq!(pk("ababaabaa").trl(), 16);
        assert_eq!(pk("aabaab").trl(), 10);
        assert_eq!(pk("aababaabab").trl(), 29);
        assert_eq!(pk("a").trl(), 0);
        assert_eq!(pk("").trl(), 0);
    }

    #[test]
    fn full_width_words() {
        let w = PackedBinary::new(!0, 64);
        assert_eq!(w.trl(), 64);
        let alt = PackedBinary::new(0xAAAA_AAAA_AAAA_AAAA, 64);
        assert_eq!(alt.trl(), 64);
        assert!(alt.has_period(2));
        assert!(!alt.has_period(1));
    }

    #[test]
    fn rejects_non_binary() {
        assert!(PackedBinary::from_symbols(&[0, 2]).is_none());
        assert!(PackedBinary::from_symbols(&[0; 65]).is_none());
    }
}
