//! Runs (maximal periodicities) and total run length of words.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function of its inputs; parallel drivers, IO and the command line live in
//! the `runforge` crate.
//!
//! Positions exposed through [`Run`] are 1-based. Symbols are dense integers
//! `0..alphabet`, rendered as `'a'`, `'b'`, ... in text.

#![no_std]

extern crate alloc;
#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod anneal;
pub mod bounds;
mod error;
pub mod expectation;
pub mod extremal;
pub mod lemmas;
pub mod packed;
pub mod runs;
pub mod word;

pub use error::{Error, Result};
pub use packed::PackedBinary;
pub use runs::{coverage, find_runs_fast, find_runs_oracle, run_stats, trl, Run, RunStats};
pub use word::{Alphabet, Word};
