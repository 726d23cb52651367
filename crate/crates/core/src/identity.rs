//! Exact, finite-grid checking of the identities that tie the sieve to the
//! triangle model.
//!
//! The registry is closed: [`IdentityId`] enumerates every identity, and each
//! one knows which coordinates it quantifies over and where it is defined.
//! Both sides of every identity are computed as [`Nat`] and compared with
//! `==`; there are no tolerances. Identities stated as differences are
//! evaluated in the equivalent additive form so that neither side ever needs
//! a subtraction.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::Zero;

use crate::sieve::{moessner_sieve, power_oracle};
use crate::triangle::{a_term, TriangleModel};
use crate::{Error, Nat};

/// A coordinate an identity can quantify over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coord {
    K,
    I,
    M,
    X,
    N,
}

impl Coord {
    pub fn symbol(self) -> char {
        match self {
            Coord::K => 'k',
            Coord::I => 'i',
            Coord::M => 'm',
            Coord::X => 'x',
            Coord::N => 'n',
        }
    }
}

/// The identities in the registry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    /// Moessner's theorem against the exponentiation oracle.
    I1,
    /// `M = A + Σ Δ`.
    I2,
    /// Plain diagonal.
    I3,
    /// Doubling along `k = 0`.
    I4,
    /// Base row `n = 0`.
    I5,
    /// Step in `k`.
    I6,
    /// Step in `n`.
    I7,
    /// Growth of `Δ` in `n` as diagonal plus `H`.
    I8,
    /// Generalised diagonal expansion.
    I9,
    /// Generalised diagonal closed form.
    I10,
    /// `h_{m+1}^i = i · g_m^i`.
    I11,
    /// `H` closed form.
    I12,
    /// Summation-swap lemma.
    I13,
    /// The inductive-step identity.
    I14,
}

use Coord::{I as CI, K as CK, M as CM, N as CN, X as CX};

impl IdentityId {
    pub const ALL: [IdentityId; 14] = [
        IdentityId::I1,
        IdentityId::I2,
        IdentityId::I3,
        IdentityId::I4,
        IdentityId::I5,
        IdentityId::I6,
        IdentityId::I7,
        IdentityId::I8,
        IdentityId::I9,
        IdentityId::I10,
        IdentityId::I11,
        IdentityId::I12,
        IdentityId::I13,
        IdentityId::I14,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::I1 => "I1",
            IdentityId::I2 => "I2",
            IdentityId::I3 => "I3",
            IdentityId::I4 => "I4",
            IdentityId::I5 => "I5",
            IdentityId::I6 => "I6",
            IdentityId::I7 => "I7",
            IdentityId::I8 => "I8",
            IdentityId::I9 => "I9",
            IdentityId::I10 => "I10",
            IdentityId::I11 => "I11",
            IdentityId::I12 => "I12",
            IdentityId::I13 => "I13",
            IdentityId::I14 => "I14",
        }
    }

    /// The identity as checked, `lhs = rhs`.
    pub fn description(self) -> &'static str {
        match self {
            IdentityId::I1 => "M_sieve(k,n) = (k+2)^(n+2)",
            IdentityId::I2 => "M_sieve(k,n) = A(k,n) + sum_{i=0..k} delta(i,n)",
            IdentityId::I3 => "V_plain(n) = f(0,n+1) + B(n)",
            IdentityId::I4 => "M_sieve(0,n+1) = 2 M_sieve(0,n)",
            IdentityId::I5 => "M_sieve(k+1,0) = M_sieve(k,0) + 2(k+2) + 1",
            IdentityId::I6 => "M_sieve(k+1,n) = M_sieve(k,n) + (n+2) + delta(k+1,n)",
            IdentityId::I7 => "M_sieve(k,n+1) = M_sieve(k,n) + M_sieve(k,n)(k+1)",
            IdentityId::I8 => "delta(k+1,n+1) = delta(k+1,n) + V_gen(k+1,n) + H_sum(k+1,n)",
            IdentityId::I9 => "V_gen(k+1,n) = g(k+1,0,n+1,n) + sum_{i=0..k+1} delta(i,n)",
            IdentityId::I10 => "V_gen(k+1,n) + 1 = M_sieve(k+1,n)",
            IdentityId::I11 => "h(i,m+1,x,n) = g(i,m,x,n) i",
            IdentityId::I12 => "H_sum(k+1,n) = ((n+2) + delta(k+1,n)) (k+1)",
            IdentityId::I13 => {
                "sum_{j<i} g(j,m+1,n-m,n) = sum_{a=0..n-m} sum_{u<i} g(u,m,a,n) (i-u)"
            }
            IdentityId::I14 => {
                "(n+3) + delta(k+1,n+1) + M_sieve(k,n)(k+1) \
                 = (n+2) + delta(k+1,n) + M_sieve(k+1,n)(k+2)"
            }
        }
    }

    /// Coordinates the identity quantifies over, in cell order.
    pub fn arity(self) -> &'static [Coord] {
        match self {
            IdentityId::I3 | IdentityId::I4 => &[CN],
            IdentityId::I5 => &[CK],
            IdentityId::I11 => &[CI, CM, CX, CN],
            IdentityId::I13 => &[CI, CM, CN],
            _ => &[CK, CN],
        }
    }

    /// Side condition beyond non-negativity, if any.
    pub fn domain(self) -> Option<&'static str> {
        match self {
            IdentityId::I11 | IdentityId::I13 => Some("m <= n"),
            _ => None,
        }
    }

    fn check_domain(self, cell: &Cell) -> Result<(), Error> {
        for &c in self.arity() {
            if cell.get(c).is_none() {
                return Err(Error::MissingCoordinate {
                    identity: self.name(),
                    coordinate: c.symbol(),
                });
            }
        }
        if let Some(bound) = self.domain() {
            if cell.get(CM) > cell.get(CN) {
                return Err(Error::Domain {
                    identity: self.name(),
                    bound,
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s.trim()))
            .ok_or(Error::UnknownIdentity)
    }
}

/// One point of an identity's index space. Unused coordinates are `None`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub k: Option<u64>,
    pub i: Option<u64>,
    pub m: Option<u64>,
    pub x: Option<u64>,
    pub n: Option<u64>,
}

impl Cell {
    pub fn kn(k: u64, n: u64) -> Self {
        Self {
            k: Some(k),
            n: Some(n),
            ..Self::default()
        }
    }

    pub fn k(k: u64) -> Self {
        Self {
            k: Some(k),
            ..Self::default()
        }
    }

    pub fn n(n: u64) -> Self {
        Self {
            n: Some(n),
            ..Self::default()
        }
    }

    pub fn imxn(i: u64, m: u64, x: u64, n: u64) -> Self {
        Self {
            i: Some(i),
            m: Some(m),
            x: Some(x),
            n: Some(n),
            ..Self::default()
        }
    }

    pub fn imn(i: u64, m: u64, n: u64) -> Self {
        Self {
            i: Some(i),
            m: Some(m),
            n: Some(n),
            ..Self::default()
        }
    }

    pub fn get(&self, c: Coord) -> Option<u64> {
        match c {
            Coord::K => self.k,
            Coord::I => self.i,
            Coord::M => self.m,
            Coord::X => self.x,
            Coord::N => self.n,
        }
    }

    /// `(coordinate, value)` pairs that are set, in `k, i, m, x, n` order.
    pub fn coords(&self) -> impl Iterator<Item = (Coord, u64)> + '_ {
        [CK, CI, CM, CX, CN]
            .into_iter()
            .filter_map(|c| self.get(c).map(|v| (c, v)))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (c, v)) in self.coords().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}={}", c.symbol(), v)?;
        }
        Ok(())
    }
}

/// Inclusive bounds of a verification grid.
///
/// `i_max` defaults to `k_max + 1` and `m_max`, `x_max` to `n_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridRange {
    pub k_max: u64,
    pub n_max: u64,
    pub m_max: Option<u64>,
    pub x_max: Option<u64>,
    pub i_max: Option<u64>,
}

impl GridRange {
    pub fn new(k_max: u64, n_max: u64) -> Self {
        Self {
            k_max,
            n_max,
            m_max: None,
            x_max: None,
            i_max: None,
        }
    }

    /// Default grid for the theorem check against the oracle.
    pub fn theorem_default() -> Self {
        Self::new(50, 10)
    }

    /// Default grid for the triangle identities.
    pub fn triangle_default() -> Self {
        Self::new(8, 8)
    }

    /// The default grid for one identity.
    pub fn default_for(id: IdentityId) -> Self {
        match id {
            IdentityId::I1 => Self::theorem_default(),
            _ => Self::triangle_default(),
        }
    }

    pub fn i_bound(&self) -> u64 {
        self.i_max.unwrap_or(self.k_max + 1)
    }

    pub fn m_bound(&self) -> u64 {
        self.m_max.unwrap_or(self.n_max)
    }

    pub fn x_bound(&self) -> u64 {
        self.x_max.unwrap_or(self.n_max)
    }

    /// Every cell of `id`'s arity inside the bounds, lexicographic in the
    /// arity's coordinate order. Includes cells outside the identity's
    /// domain; those are reported as skipped.
    pub fn cells(&self, id: IdentityId) -> Vec<Cell> {
        let mut out = Vec::new();
        match id.arity() {
            [CN] => out.extend((0..=self.n_max).map(Cell::n)),
            [CK] => out.extend((0..=self.k_max).map(Cell::k)),
            [CK, CN] => {
                for k in 0..=self.k_max {
                    out.extend((0..=self.n_max).map(|n| Cell::kn(k, n)));
                }
            }
            [CI, CM, CX, CN] => {
                for i in 0..=self.i_bound() {
                    for m in 0..=self.m_bound() {
                        for x in 0..=self.x_bound() {
                            out.extend((0..=self.n_max).map(|n| Cell::imxn(i, m, x, n)));
                        }
                    }
                }
            }
            [CI, CM, CN] => {
                for i in 0..=self.i_bound() {
                    for m in 0..=self.m_bound() {
                        out.extend((0..=self.n_max).map(|n| Cell::imn(i, m, n)));
                    }
                }
            }
            other => unreachable!("no identity has arity {other:?}"),
        }
        out
    }
}

impl Default for GridRange {
    fn default() -> Self {
        Self::triangle_default()
    }
}

/// Result of checking one identity at one cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub cell: Cell,
    pub lhs: Nat,
    pub rhs: Nat,
    pub pass: bool,
}

impl IdentityReport {
    fn new(identity: IdentityId, cell: Cell, lhs: Nat, rhs: Nat) -> Self {
        let pass = lhs == rhs;
        Self {
            identity,
            cell,
            lhs,
            rhs,
            pass,
        }
    }
}

/// A grid cell that lies outside the identity's domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Skip {
    pub identity: IdentityId,
    pub cell: Cell,
    pub reason: Error,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GridOutcome {
    Checked(IdentityReport),
    Skipped(Skip),
}

impl GridOutcome {
    pub fn is_failure(&self) -> bool {
        matches!(self, GridOutcome::Checked(r) if !r.pass)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Stop after the first failing report.
    pub fail_fast: bool,
}

/// Evaluates identities, caching sieve prefixes and triangle leaves across
/// cells.
#[derive(Debug, Default)]
pub struct Verifier {
    model: TriangleModel,
    sieved: BTreeMap<u64, Vec<Nat>>,
}

impl Verifier {
    pub fn new() -> Self {
        Self::default()
    }

    /// A verifier whose triangle side uses `model` (the sieve is never
    /// affected by the model).
    pub fn with_model(model: TriangleModel) -> Self {
        Self {
            model,
            sieved: BTreeMap::new(),
        }
    }

    pub fn model(&mut self) -> &mut TriangleModel {
        &mut self.model
    }

    /// `M(k, n)` from the sieve, reusing one pipeline run per `n`.
    pub fn sieve_value(&mut self, k: u64, n: u64) -> Nat {
        let idx = usize::try_from(k).expect("k fits in usize");
        let row = self.sieved.entry(n).or_default();
        if idx >= row.len() {
            let k_max = (k + 1).max(2 * row.len() as u64);
            *row = moessner_sieve(n).values(k_max);
        }
        row[idx].clone()
    }

    pub fn verify_identity(
        &mut self,
        id: IdentityId,
        cell: &Cell,
    ) -> Result<IdentityReport, Error> {
        id.check_domain(cell)?;
        let c = |coord| cell.get(coord).unwrap_or(0);
        let (k, i, m, x, n) = (c(CK), c(CI), c(CM), c(CX), c(CN));
        let (lhs, rhs) = match id {
            IdentityId::I1 => (self.sieve_value(k, n), power_oracle(k, n)),
            IdentityId::I2 => {
                let b = self.model.b_gen(k, n);
                (self.sieve_value(k, n), a_term(k, n) + b)
            }
            IdentityId::I3 => {
                let lhs = self.model.v_plain(n);
                (lhs, self.model.f(0, n + 1) + self.model.b(n))
            }
            IdentityId::I4 => {
                let lhs = self.sieve_value(0, n + 1);
                (lhs, self.sieve_value(0, n) * 2u32)
            }
            IdentityId::I5 => {
                let lhs = self.sieve_value(k + 1, 0);
                let odd = Nat::from(k + 2) * 2u32 + 1u32;
                (lhs, self.sieve_value(k, 0) + odd)
            }
            IdentityId::I6 => {
                let lhs = self.sieve_value(k + 1, n);
                let rhs = self.sieve_value(k, n) + (n + 2) + self.model.delta(k + 1, n);
                (lhs, rhs)
            }
            IdentityId::I7 => {
                let lhs = self.sieve_value(k, n + 1);
                let base = self.sieve_value(k, n);
                let rhs = &base + &base * (k + 1);
                (lhs, rhs)
            }
            IdentityId::I8 => {
                let lhs = self.model.delta(k + 1, n + 1);
                let rhs = self.model.delta(k + 1, n)
                    + self.model.v_gen(k + 1, n)?
                    + self.model.h_sum(k + 1, n)?;
                (lhs, rhs)
            }
            IdentityId::I9 => {
                let lhs = self.model.v_gen(k + 1, n)?;
                let rhs = self.model.g(k + 1, 0, n + 1, n)? + self.model.b_gen(k + 1, n);
                (lhs, rhs)
            }
            IdentityId::I10 => {
                let lhs = self.model.v_gen(k + 1, n)? + 1u32;
                (lhs, self.sieve_value(k + 1, n))
            }
            IdentityId::I11 => {
                let lhs = self.model.h(i, m + 1, x, n)?;
                (lhs, self.model.g(i, m, x, n)? * i)
            }
            IdentityId::I12 => {
                let lhs = self.model.h_sum(k + 1, n)?;
                let rhs = (self.model.delta(k + 1, n) + (n + 2)) * (k + 1);
                (lhs, rhs)
            }
            IdentityId::I13 => {
                let mut lhs = Nat::zero();
                for j in 0..i {
                    lhs += self.model.g(j, m + 1, n - m, n)?;
                }
                let mut rhs = Nat::zero();
                for a in 0..=n - m {
                    for u in 0..i {
                        rhs += self.model.g(u, m, a, n)? * (i - u);
                    }
                }
                (lhs, rhs)
            }
            IdentityId::I14 => {
                let lhs =
                    self.model.delta(k + 1, n + 1) + (n + 3) + self.sieve_value(k, n) * (k + 1);
                let rhs =
                    self.model.delta(k + 1, n) + (n + 2) + self.sieve_value(k + 1, n) * (k + 2);
                (lhs, rhs)
            }
        };
        Ok(IdentityReport::new(id, *cell, lhs, rhs))
    }

    /// Checks each identity over every cell of `grid`, in the order of `ids`
    /// and then lexicographically by cell. Out-of-domain cells become
    /// [`GridOutcome::Skipped`].
    pub fn verify_grid(
        &mut self,
        ids: &[IdentityId],
        grid: &GridRange,
        options: VerifyOptions,
    ) -> Vec<GridOutcome> {
        let mut out = Vec::new();
        for &id in ids {
            for cell in grid.cells(id) {
                let outcome = match self.verify_identity(id, &cell) {
                    Ok(report) => GridOutcome::Checked(report),
                    Err(reason) => GridOutcome::Skipped(Skip {
                        identity: id,
                        cell,
                        reason,
                    }),
                };
                let stop = options.fail_fast && outcome.is_failure();
                out.push(outcome);
                if stop {
                    return out;
                }
            }
        }
        out
    }
}

/// Checks one identity at one cell with a fresh [`Verifier`].
pub fn verify_identity(id: IdentityId, cell: &Cell) -> Result<IdentityReport, Error> {
    Verifier::new().verify_identity(id, cell)
}

/// Checks `ids` over `grid` with a fresh [`Verifier`], without stopping early.
pub fn verify_grid(ids: &[IdentityId], grid: &GridRange) -> Vec<GridOutcome> {
    Verifier::new().verify_grid(ids, grid, VerifyOptions::default())
}
