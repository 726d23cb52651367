//! Moessner's sieve over lazy streams of arbitrary-precision naturals.
//!
//! The crate is `no_std` and needs only `alloc`. It is organised bottom-up:
//!
//! * [`stream`]: lazy, 1-indexed streams with the two sieve combinators
//!   (periodic removal and partial summation).
//! * [`sieve`]: the full Moessner pipeline and the exponentiation oracle it
//!   is checked against.
//! * [`triangle`]: the recursive triangle functions `f`, `g`, `h` and the
//!   staircase/diagonal aggregates built from them.
//! * [`identity`]: a closed registry of the identities relating all of the
//!   above, checked exactly on finite grids.

#![no_std]

extern crate alloc;

mod error;
pub mod identity;
pub mod sieve;
pub mod stream;
pub mod triangle;

pub use error::Error;
pub use identity::{
    verify_grid, verify_identity, Cell, Coord, GridOutcome, GridRange, IdentityId, IdentityReport,
    Skip, Verifier, VerifyOptions,
};
pub use sieve::{moessner_sieve, power_oracle, sieve_value, SieveResult};
pub use stream::{drop_every, naturals, partial_sums, take, LazyStream, StreamExt};
pub use triangle::{a_term, Mutation, Staircase, TriangleKind, TriangleModel};

/// Arbitrary-precision non-negative integer. Every value in the crate is one.
pub use num_bigint::BigUint as Nat;
