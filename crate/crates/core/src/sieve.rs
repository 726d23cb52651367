//! The Moessner pipeline and the closed-form power it produces.

use alloc::vec::Vec;

use num_traits::One;

use crate::stream::{LazyStream, Stage};
use crate::Nat;

/// The fully sieved stream for one `n`: `1, M(0,n), M(1,n), ..`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SieveResult {
    pub n: u64,
    pub stream: LazyStream,
}

impl SieveResult {
    /// `M(k, n)`, read from position `k + 2`.
    pub fn value(&self, k: u64) -> Nat {
        let position = usize::try_from(k).expect("k fits in usize") + 2;
        self.stream
            .at(position)
            .expect("sieved stream is unbounded")
    }

    /// `M(0, n) ..= M(k_max, n)` from a single pass over the stream.
    pub fn values(&self, k_max: u64) -> Vec<Nat> {
        let count = usize::try_from(k_max).expect("k fits in usize") + 1;
        self.stream.iter().skip(1).take(count).collect()
    }

    /// Number of drop-then-sum rounds the pipeline performs.
    pub fn rounds(&self) -> usize {
        self.stream
            .stages()
            .iter()
            .filter(|s| matches!(s, Stage::DropEvery(_)))
            .count()
    }
}

/// Runs `n + 1` rounds over the naturals; round `j` drops every
/// `(n + 2 - j)`-th element and then takes partial sums, so the last round
/// drops every second element.
pub fn moessner_sieve(n: u64) -> SieveResult {
    let mut stream = LazyStream::naturals();
    for period in (2..=n + 2).rev() {
        stream = stream
            .drop_every(period)
            .expect("periods never go below 2")
            .partial_sums();
    }
    SieveResult { n, stream }
}

/// `M(k, n)` computed by running the sieve. Rebuilds the pipeline on each call;
/// use [`SieveResult::values`] for many `k` at one `n`.
pub fn sieve_value(k: u64, n: u64) -> Nat {
    moessner_sieve(n).value(k)
}

/// `(k + 2)^(n + 2)` by square-and-multiply. Shares nothing with the sieve.
pub fn power_oracle(k: u64, n: u64) -> Nat {
    let mut base = Nat::from(k) + 2u32;
    let mut exp = n + 2;
    let mut acc = Nat::one();
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= &base;
        }
        exp >>= 1;
        if exp > 0 {
            base = &base * &base;
        }
    }
    acc
}
