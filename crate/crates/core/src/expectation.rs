//! Exact expected total run length of a uniformly random word, the limiting
//! run-length density, and primitive-word counting.
//!
//! Expected values are computed as exact rationals. The per-length value is a
//! sum of three parts: runs touching neither end of the word (`s1`), runs
//! that are a proper prefix or suffix (`s2`), and words that are themselves a
//! run (`s3`). For a run of length `k` and primitive root of length `p`, the
//! number of words containing it at a fixed interior position is
//! `(a-1)^2 a^(n-k-2) P(p)`, at an end `(a-1) a^(n-k-1) P(p)`, and `P(p)`
//! when it spans the whole word. Every part is therefore an integer over
//! `a^n`, which is how it is evaluated here.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::runs::trl_of;
use crate::{Error, Result};

/// Default cap on `alpha^n` for [`expected_trl_oracle`].
pub const DEFAULT_ORACLE_BUDGET: u64 = 10_000_000;

/// Value once published for the binary limit of the prefix/suffix part; the
/// series itself evaluates to `4 * density(2)`, about 7.91.
pub const S2_LIMIT_BINARY_CLAIM: u32 = 10;

pub fn mobius(m: u64) -> Result<i8> {
    if m == 0 {
        return Err(Error::InvalidArgument("mobius(0) is undefined".into()));
    }
    let mut m = m;
    let mut sign = 1i8;
    let mut d = 2u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            m /= d;
            if m.is_multiple_of(d) {
                return Ok(0);
            }
            sign = -sign;
        }
        d += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    Ok(sign)
}

/// Number of primitive words of length `p >= 1` over `alpha` letters,
/// `sum over d | p of alpha^d mu(p/d)`.
pub fn primitive_count(p: u32, alpha: u32) -> BigInt {
    assert!(p >= 1, "primitive words have positive length");
    let a = BigInt::from(alpha);
    (1..=p)
        .filter(|d| p.is_multiple_of(*d))
        .map(|d| {
            let mu = mobius((p / d) as u64).expect("p / d >= 1");
            a.pow(d) * mu
        })
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectationReport {
    pub n: u32,
    pub alpha: u32,
    pub s1: BigRational,
    pub s2: BigRational,
    pub s3: BigRational,
    pub total: BigRational,
}

/// Exact expected total run length over all `alpha^n` words of length `n`.
pub fn expected_trl_exact(n: u32, alpha: u32) -> Result<ExpectationReport> {
    if n < 1 || alpha < 2 {
        return Err(Error::InvalidArgument(alloc::format!(
            "need n >= 1 and alpha >= 2, got n = {n}, alpha = {alpha}"
        )));
    }
    let a = BigInt::from(alpha);
    let am1 = BigInt::from(alpha - 1);
    let nn = n as usize;
    let primitive: Vec<BigInt> = (0..=n / 2)
        .map(|p| if p == 0 { BigInt::zero() } else { primitive_count(p, alpha) })
        .collect();
    let pow: Vec<BigInt> = {
        let mut v = vec![BigInt::one(); nn + 1];
        for i in 1..=nn {
            v[i] = &v[i - 1] * &a;
        }
        v
    };

    // Interior runs, scaled by a^n: (a-1)^2 sum_p P(p) sum_i sum_k k a^(n-2-k),
    // with i in 1..=n-2p-1 and k in 2p..=n-i-1.
    let mut s1 = BigInt::zero();
    if nn >= 4 {
        // interior[k] = k a^(n-2-k); prefix[m] = sum_{k<=m}; prefix2[m] = sum_{t<=m} prefix[t]
        let top = nn - 2;
        let mut prefix = vec![BigInt::zero(); top + 1];
        let mut prefix2 = vec![BigInt::zero(); top + 1];
        for k in 0..=top {
            let term = BigInt::from(k) * &pow[top - k];
            prefix[k] = if k == 0 { term.clone() } else { &prefix[k - 1] + term };
            prefix2[k] = if k == 0 {
                prefix[0].clone()
            } else {
                &prefix2[k - 1] + &prefix[k]
            };
        }
        for p in 1..=(nn - 2) / 2 {
            // sum over m = n-i-1 from 2p to n-2 of (prefix[m] - prefix[2p-1])
            let count = BigInt::from(top + 1 - 2 * p);
            let inner = &prefix2[top] - &prefix2[2 * p - 1] - count * &prefix[2 * p - 1];
            s1 += &primitive[p] * inner;
        }
        s1 *= &am1 * &am1;
    }

    // Proper prefix runs, doubled for suffixes: 2 (a-1) sum_p P(p) sum_{k=2p}^{n-1} k a^(n-1-k).
    let mut s2 = BigInt::zero();
    if nn >= 3 {
        let mut tail = vec![BigInt::zero(); nn + 1];
        for k in (0..nn).rev() {
            tail[k] = &tail[k + 1] + BigInt::from(k) * &pow[nn - 1 - k];
        }
        for p in 1..=(nn - 1) / 2 {
            s2 += &primitive[p] * &tail[2 * p];
        }
        s2 *= BigInt::from(2) * &am1;
    }

    // Whole-word runs: n sum_{p <= n/2} P(p).
    let s3: BigInt = BigInt::from(n) * primitive.iter().sum::<BigInt>();

    let denom = pow[nn].clone();
    let s1 = BigRational::new(s1, denom.clone());
    let s2 = BigRational::new(s2, denom.clone());
    let s3 = BigRational::new(s3, denom);
    let total = &s1 + &s2 + &s3;
    Ok(ExpectationReport {
        n,
        alpha,
        s1,
        s2,
        s3,
        total,
    })
}

/// Average total run length by enumerating every word of length `n`.
pub fn expected_trl_oracle(n: u32, alpha: u32, budget: u64) -> Result<BigRational> {
    if !(2..=26).contains(&alpha) {
        return Err(Error::InvalidArgument(alloc::format!(
            "alpha must be in 2..=26, got {alpha}"
        )));
    }
    let words = (alpha as u64)
        .checked_pow(n)
        .filter(|&w| w <= budget)
        .ok_or_else(|| {
            Error::Capacity(alloc::format!(
                "{alpha}^{n} words exceed the enumeration budget of {budget}"
            ))
        })?;
    let mut digits = vec![0u8; n as usize];
    let mut sum: u128 = 0;
    for _ in 0..words {
        sum += trl_of(&digits) as u128;
        for d in digits.iter_mut().rev() {
            *d += 1;
            if (*d as u32) < alpha {
                break;
            }
            *d = 0;
        }
    }
    Ok(BigRational::new(BigInt::from(sum), BigInt::from(words)))
}

/// A truncated series: the limit lies in `[value, value + error_bound]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesEstimate {
    pub value: BigRational,
    pub error_bound: BigRational,
    pub terms: u32,
}

impl SeriesEstimate {
    pub fn upper(&self) -> BigRational {
        &self.value + &self.error_bound
    }
}

/// `sum_{p > N} (2p(a-1) + 1) / a^(p+1)`, which dominates the density tail
/// because `P(p) <= a^p`.
fn density_tail_majorant(alpha: u32, terms: u32) -> BigRational {
    let x = BigRational::new(BigInt::one(), BigInt::from(alpha));
    let one = BigRational::one();
    let n = BigRational::from_integer(BigInt::from(terms));
    let xn1 = num_traits::pow(x.clone(), terms as usize + 1);
    let geometric = &xn1 / (&one - &x);
    let weighted = &xn1 * ((&n + &one) - &n * &x) / num_traits::pow(&one - &x, 2);
    let two_am1 = BigRational::from_integer(BigInt::from(2 * (alpha - 1)));
    x * (two_am1 * weighted + geometric)
}

fn check_series_args(alpha: u32, tolerance: &BigRational) -> Result<()> {
    if alpha < 2 {
        return Err(Error::InvalidArgument("alpha must be at least 2".into()));
    }
    if !tolerance.is_positive() {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    Ok(())
}

/// Limiting expected total run length per letter,
/// `sum_p P(p) (2p(a-1) + 1) / a^(2p+1)`, truncated at the first `N` whose
/// tail majorant is below `tolerance`.
pub fn trl_density(alpha: u32, tolerance: &BigRational) -> Result<SeriesEstimate> {
    check_series_args(alpha, tolerance)?;
    let a = BigInt::from(alpha);
    let mut value = BigRational::zero();
    let mut p = 0u32;
    loop {
        p += 1;
        let weight = BigInt::from(2 * p * (alpha - 1) + 1);
        value += BigRational::new(primitive_count(p, alpha) * weight, a.pow(2 * p + 1));
        let tail = density_tail_majorant(alpha, p);
        if &tail < tolerance {
            return Ok(SeriesEstimate {
                value,
                error_bound: tail,
                terms: p,
            });
        }
    }
}

/// Limit of the prefix/suffix part, `(2/(a-1)) sum_p P(p) (2p(a-1)+1) / a^(2p)`.
/// Term by term this is `2a/(a-1)` times the density series.
pub fn s2_limit(alpha: u32, tolerance: &BigRational) -> Result<SeriesEstimate> {
    check_series_args(alpha, tolerance)?;
    let a = BigInt::from(alpha);
    let scale = BigRational::new(BigInt::from(2 * alpha), BigInt::from(alpha - 1));
    let mut sum = BigRational::zero();
    let mut p = 0u32;
    loop {
        p += 1;
        let weight = BigInt::from(2 * p * (alpha - 1) + 1);
        sum += BigRational::new(primitive_count(p, alpha) * weight, a.pow(2 * p));
        let tail = &scale * density_tail_majorant(alpha, p);
        if &tail < tolerance {
            let value = sum * BigRational::new(BigInt::from(2), BigInt::from(alpha - 1));
            return Ok(SeriesEstimate {
                value,
                error_bound: tail,
                terms: p,
            });
        }
    }
}

/// Density rounded to `digits` decimals, tightening the tolerance (starting
/// from `tolerance`) until both ends of the error interval round the same
/// way.
pub fn trl_density_rounded(alpha: u32, tolerance: &BigRational, digits: u32) -> Result<String> {
    let mut tol = tolerance.clone();
    loop {
        let est = trl_density(alpha, &tol)?;
        let lo = to_decimal(&est.value, digits);
        if lo == to_decimal(&est.upper(), digits) {
            return Ok(lo);
        }
        tol = est.error_bound / BigInt::from(16);
    }
}

/// Decimal rendering with round-half-even at `digits` places.
pub fn to_decimal(r: &BigRational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = r * BigRational::from_integer(scale);
    let (q, rem) = scaled.numer().div_mod_floor(scaled.denom());
    // rem in [0, denom)
    let twice = BigInt::from(2) * &rem;
    let d = scaled.denom();
    let round_up = match twice.cmp(d) {
        core::cmp::Ordering::Greater => true,
        core::cmp::Ordering::Less => false,
        core::cmp::Ordering::Equal => q.is_odd(),
    };
    let q = if round_up { q + 1 } else { q };
    let negative = q.sign() == Sign::Minus;
    let mag: BigUint = q.magnitude().clone();
    let mut s = mag.to_str_radix(10);
    let digits = digits as usize;
    if s.len() <= digits {
        s = "0".repeat(digits + 1 - s.len()) + &s;
    }
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    let split = s.len() - digits;
    out.push_str(&s[..split]);
    if digits > 0 {
        out.push('.');
        out.push_str(&s[split..]);
    }
    out
}

/// Nearest `f64`, for display and loose comparisons only.
pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn mobius_values() {
        assert_eq!(mobius(1).unwrap(), 1);
        assert_eq!(mobius(6).unwrap(), 1);
        assert_eq!(mobius(12).unwrap(), 0);
        assert_eq!(mobius(30).unwrap(), -1);
        assert_eq!(mobius(7).unwrap(), -1);
        assert!(mobius(0).is_err());
    }

    #[test]
    fn primitive_counts() {
        assert_eq!(primitive_count(1, 2), BigInt::from(2));
        assert_eq!(primitive_count(4, 2), BigInt::from(12));
        assert_eq!(primitive_count(6, 2), BigInt::from(54));
    }

    #[test]
    fn exact_small_values() {
        let r = expected_trl_exact(2, 2).unwrap();
        assert_eq!(r.total, q(1, 1));
        assert!(r.s1.is_zero() && r.s2.is_zero());
        let r = expected_trl_exact(3, 2).unwrap();
        assert_eq!(r.total, q(7, 4));
        assert_eq!(r.s2, q(1, 1));
        assert_eq!(r.s3, q(3, 4));
        assert!(expected_trl_exact(1, 2).unwrap().total.is_zero());
        assert!(expected_trl_exact(0, 2).is_err());
        assert!(expected_trl_exact(3, 1).is_err());
    }

    #[test]
    fn oracle_small_values() {
        assert_eq!(expected_trl_oracle(3, 2, DEFAULT_ORACLE_BUDGET).unwrap(), q(7, 4));
        assert_eq!(expected_trl_oracle(2, 3, DEFAULT_ORACLE_BUDGET).unwrap(), q(2, 3));
        assert!(expected_trl_oracle(1, 2, DEFAULT_ORACLE_BUDGET).unwrap().is_zero());
        assert!(matches!(
            expected_trl_oracle(30, 2, DEFAULT_ORACLE_BUDGET),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(to_decimal(&q(7, 4), 2), "1.75");
        assert_eq!(to_decimal(&q(7, 4), 1), "1.8");
        assert_eq!(to_decimal(&q(5, 4), 1), "1.2");
        assert_eq!(to_decimal(&q(1, 3), 4), "0.3333");
        assert_eq!(to_decimal(&q(2, 3), 0), "1");
        assert_eq!(to_decimal(&q(-7, 4), 1), "-1.8");
        assert_eq!(to_decimal(&q(1, 400), 2), "0.00");
        assert_eq!(to_decimal(&q(3, 200), 2), "0.02");
    }

    #[test]
    fn density_and_s2_relation() {
        let tol = q(1, 1_000_000);
        let d = trl_density(2, &tol).unwrap();
        let s2 = s2_limit(2, &(&tol * BigInt::from(4))).unwrap();
        assert_eq!(d.terms, s2.terms);
        assert_eq!(s2.value, &d.value * BigInt::from(4));
        assert_eq!(to_decimal(&d.value, 4), "1.9775");
        assert_eq!(to_decimal(&s2.value, 2), "7.91");
    }

    #[test]
    fn rounded_density() {
        let tol = q(5, 100_000);
        assert_eq!(trl_density_rounded(5, &tol, 4).unwrap(), "0.5208");
        assert_eq!(trl_density_rounded(3, &tol, 4).unwrap(), "1.0290");
        assert!(trl_density(2, &q(0, 1)).is_err());
        assert!(trl_density(1, &tol).is_err());
        let _ = to_f64(&tol).to_string();
    }
}
