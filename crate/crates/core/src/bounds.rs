//! Explicit constructions and the lower/upper bound comparisons for the
//! maximum total run length. All comparisons are exact integer arithmetic.

use alloc::vec::Vec;

use crate::word::{Alphabet, Word};
use crate::{Error, Result};

/// `((ab)^k a)^2`, of length `4k + 2`.
pub fn word_u(k: usize) -> Result<Word> {
    if k < 1 {
        return Err(Error::InvalidArgument("u(k) needs k >= 1".into()));
    }
    let half: Vec<u8> = (0..2 * k + 1).map(|i| (i % 2) as u8).collect();
    let mut symbols = half.clone();
    symbols.extend_from_slice(&half);
    Ok(Word::from_raw(symbols, Alphabet::BINARY))
}

/// `2k^2 + 8k + 4`, the total run length of `u(k)` for `k >= 2`.
///
/// At `k = 1` the two period-2 factors `aba` are too short to be runs and
/// the true value is 8, so the closed form is refused there.
pub fn trl_u_formula(k: u64) -> Result<u64> {
    if k < 2 {
        return Err(Error::FormulaDomain(alloc::format!(
            "2k^2+8k+4 holds for k >= 2 only; TRL(u(1)) = {TRL_U1}"
        )));
    }
    Ok(2 * k * k + 8 * k + 4)
}

/// Total run length of `u(1) = abaaba`.
pub const TRL_U1: u64 = 8;

/// `TRL(u(k))` written in terms of `n = 4k + 2`: `(n^2 + 12n + 4) / 8`.
/// Returns `None` unless `n = 4k + 2` with `k >= 2`.
pub fn trl_u_in_length(n: u64) -> Option<u64> {
    (n >= 10 && n % 4 == 2).then(|| (n * n + 12 * n + 4) / 8)
}

/// `a b a^(n-4) b a`.
pub fn word_min_trl(n: usize) -> Result<Word> {
    if n < 6 {
        return Err(Error::InvalidArgument("a b a^(n-4) b a needs n >= 6".into()));
    }
    let mut symbols = alloc::vec![0u8; n];
    symbols[1] = 1;
    symbols[n - 2] = 1;
    Ok(Word::from_raw(symbols, Alphabet::BINARY))
}

/// `8 * tau > n^2`.
pub fn lower_bound_holds(n: u64, tau: u64) -> bool {
    8 * tau as u128 > (n as u128) * (n as u128)
}

/// `(ceil(n/4) - floor(n/6)) * (n - 3 + 2(ceil(n/4) + floor(n/6) + 1)) + 3n floor(n/6)`.
pub fn upper_bound_expr(n: u64) -> i128 {
    let n = n as i128;
    let c4 = (n + 3) / 4;
    let f6 = n / 6;
    (c4 - f6) * (n - 3 + 2 * (c4 + f6 + 1)) + 3 * n * f6
}

/// `72 * value < 47 n^2 + 144 n`, i.e. `value < 47n^2/72 + 2n`.
pub fn below_quadratic_bound(n: u64, value: i128) -> bool {
    let n = n as i128;
    72 * value < 47 * n * n + 144 * n
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundFailure {
    /// The counting expression is not below `47n^2/72 + 2n`.
    Expression { n: u64, lhs: i128, rhs: i128 },
    /// A tabulated maximum is not below `47n^2/72 + 2n`.
    Tabulated { n: u64, tau: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheckReport {
    pub n_range: (u64, u64),
    pub failures: Vec<BoundFailure>,
    pub all_ok: bool,
}

/// Checks the counting expression against `47n^2/72 + 2n` for
/// `1 <= n <= n_max`, and every `(n, tau)` in `table` against the same bound.
pub fn check_upper_bound(n_max: u64, table: &[(u64, u64)]) -> BoundCheckReport {
    let mut failures = Vec::new();
    for n in 1..=n_max {
        let lhs = upper_bound_expr(n);
        if !below_quadratic_bound(n, lhs) {
            let ni = n as i128;
            failures.push(BoundFailure::Expression {
                n,
                lhs: 72 * lhs,
                rhs: 47 * ni * ni + 144 * ni,
            });
        }
    }
    for &(n, tau) in table {
        if !below_quadratic_bound(n, tau as i128) {
            failures.push(BoundFailure::Tabulated { n, tau });
        }
    }
    BoundCheckReport {
        n_range: (1, n_max),
        all_ok: failures.is_empty(),
        failures,
    }
}
