//! Recursive triangle functions and the staircase sums built from them.
//!
//! `f_m(x)` is the plain triangle (`f_0(x) = x + 1`, each deeper row a prefix
//! sum of the one above). `g_m^i(x, n)` generalises it to block `i`: the base
//! row is shifted by `i(n + 2)` and every deeper row also carries the sum of
//! the first `n - m + 1` entries of row `m` in all earlier blocks. Block 0 is
//! exactly `f`. `h_m^i(x, n)` is the growth of `g` when `n` increases by one.
//!
//! The staircase for parameter `n` has rows `m = 0..=n` with row `m` holding
//! `x = 0..=n - m`. The `H` staircase is one size larger.
//!
//! Every leaf value is memoised inside a [`TriangleModel`]; aggregates are
//! summed from memoised leaves on each call.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::{Error, Nat};

/// A deliberate corruption of one leaf definition. Used to show that the
/// identity suite actually pins the definitions down.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    /// `f_0(x) = x + 2` instead of `x + 1` (and therefore `g`'s base row).
    ShiftedFBase,
    /// `g_{m+1}^i` loses the contribution of the earlier blocks.
    NoCrossBlockTerm,
}

/// Which staircase a [`Staircase`] lays out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleKind {
    /// `f_m(x)` over the staircase for `n`; sums to `B(n)`.
    F { n: u64 },
    /// `g_m^i(x, n)` over the staircase for `n`; sums to `Δ(i, n)`.
    Delta { i: u64, n: u64 },
    /// `h_m^i(x, n)` over the staircase for `n + 1`; sums to `H(i, n)`.
    H { i: u64, n: u64 },
}

/// An evaluated staircase, rows top to bottom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Staircase {
    pub kind: TriangleKind,
    pub rows: Vec<Vec<Nat>>,
}

impl Staircase {
    pub fn row_sums(&self) -> Vec<Nat> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn total(&self) -> Nat {
        self.rows.iter().flatten().sum()
    }
}

/// `A(k, n) = (k + 1)(n + 2) + 1`, the original stream element that grows
/// into `M(k, n)`.
pub fn a_term(k: u64, n: u64) -> Nat {
    Nat::from(k + 1) * Nat::from(n + 2) + 1u32
}

/// Memoising evaluator for `f`, `g`, `h` and their aggregates.
#[derive(Debug, Clone, Default)]
pub struct TriangleModel {
    mutation: Option<Mutation>,
    f_memo: BTreeMap<(u64, u64), Nat>,
    g_memo: BTreeMap<(u64, u64, u64, u64), Nat>,
}

impl TriangleModel {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn mutated(mutation: Mutation) -> Self {
        Self {
            mutation: Some(mutation),
            ..Self::default()
        }
    }

    pub fn mutation(&self) -> Option<Mutation> {
        self.mutation
    }

    fn f_base(&self, x: u64) -> Nat {
        match self.mutation {
            Some(Mutation::ShiftedFBase) => Nat::from(x) + 2u32,
            _ => Nat::from(x) + 1u32,
        }
    }

    /// `f_0(x) = x + 1`, `f_{m+1}(x) = Σ_{a=0..=x} f_m(a)`.
    pub fn f(&mut self, m: u64, x: u64) -> Nat {
        if m == 0 {
            return self.f_base(x);
        }
        if let Some(v) = self.f_memo.get(&(m, x)) {
            return v.clone();
        }
        let v = (0..=x).map(|a| self.f(m - 1, a)).sum::<Nat>();
        self.f_memo.insert((m, x), v.clone());
        v
    }

    /// `g_0^i(x, n) = i(n + 2) + x + 1`;
    /// `g_{m+1}^i(x, n) = Σ_{a=0..=x} g_m^i(a, n) + Σ_{j<i} Σ_{a=0..=n-m} g_m^j(a, n)`.
    ///
    /// Defined only for `m <= n + 1`: deeper rows would need a negative upper
    /// bound in the cross-block sum.
    pub fn g(&mut self, i: u64, m: u64, x: u64, n: u64) -> Result<Nat, Error> {
        if m > n + 1 {
            return Err(Error::OutsideStaircase { i, m, x, n });
        }
        Ok(self.g_unchecked(i, m, x, n))
    }

    fn g_unchecked(&mut self, i: u64, m: u64, x: u64, n: u64) -> Nat {
        if m == 0 {
            return Nat::from(i) * Nat::from(n + 2) + self.f_base(x);
        }
        if let Some(v) = self.g_memo.get(&(i, m, x, n)) {
            return v.clone();
        }
        let above = m - 1;
        let mut v = (0..=x)
            .map(|a| self.g_unchecked(i, above, a, n))
            .sum::<Nat>();
        if self.mutation != Some(Mutation::NoCrossBlockTerm) {
            for j in 0..i {
                for a in 0..=n - above {
                    v += self.g_unchecked(j, above, a, n);
                }
            }
        }
        self.g_memo.insert((i, m, x, n), v.clone());
        v
    }

    /// `h_m^i(x, n) = g_m^i(x, n + 1) - g_m^i(x, n)`.
    pub fn h(&mut self, i: u64, m: u64, x: u64, n: u64) -> Result<Nat, Error> {
        let lower = self.g(i, m, x, n)?;
        let upper = self.g(i, m, x, n + 1)?;
        Ok(upper - lower)
    }

    /// `B(n)`: the `f` staircase for `n`.
    pub fn b(&mut self, n: u64) -> Nat {
        let mut total = Nat::zero();
        for m in 0..=n {
            for x in 0..=n - m {
                total += self.f(m, x);
            }
        }
        total
    }

    /// `Δ(i, n)`: the `g^i` staircase for `n`.
    pub fn delta(&mut self, i: u64, n: u64) -> Nat {
        let mut total = Nat::zero();
        for m in 0..=n {
            for x in 0..=n - m {
                total += self.g_unchecked(i, m, x, n);
            }
        }
        total
    }

    /// `Σ_{i=0..=k} Δ(i, n)`.
    pub fn b_gen(&mut self, k: u64, n: u64) -> Nat {
        (0..=k).map(|i| self.delta(i, n)).sum()
    }

    /// The anti-diagonal `Σ_{a=0..=n+1} f_a(n + 1 - a)`.
    pub fn v_plain(&mut self, n: u64) -> Nat {
        (0..=n + 1).map(|a| self.f(a, n + 1 - a)).sum()
    }

    /// The anti-diagonal `Σ_{a=0..=n+1} g_a^i(n + 1 - a, n)`, for `i >= 1`.
    pub fn v_gen(&mut self, i: u64, n: u64) -> Result<Nat, Error> {
        if i == 0 {
            return Err(Error::BlockIndex { what: "V_gen" });
        }
        Ok((0..=n + 1)
            .map(|a| self.g_unchecked(i, a, n + 1 - a, n))
            .sum())
    }

    /// `H(i, n)`: the `h^i` staircase for `n + 1`, for `i >= 1`.
    pub fn h_sum(&mut self, i: u64, n: u64) -> Result<Nat, Error> {
        if i == 0 {
            return Err(Error::BlockIndex { what: "H_sum" });
        }
        Ok(self.staircase(TriangleKind::H { i, n })?.total())
    }

    /// Lays out a staircase row by row.
    pub fn staircase(&mut self, kind: TriangleKind) -> Result<Staircase, Error> {
        let rows = match kind {
            TriangleKind::F { n } => (0..=n)
                .map(|m| (0..=n - m).map(|x| self.f(m, x)).collect())
                .collect(),
            TriangleKind::Delta { i, n } => (0..=n)
                .map(|m| (0..=n - m).map(|x| self.g_unchecked(i, m, x, n)).collect())
                .collect(),
            TriangleKind::H { i, n } => {
                let top = n + 1;
                let mut rows = Vec::new();
                for m in 0..=top {
                    let row = (0..=top - m)
                        .map(|x| self.h(i, m, x, n))
                        .collect::<Result<Vec<_>, _>>()?;
                    rows.push(row);
                }
                rows
            }
        };
        Ok(Staircase { kind, rows })
    }
}
