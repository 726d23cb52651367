//! Lazy unbounded streams of naturals.
//!
//! A [`LazyStream`] is a description of a pipeline: the naturals `1, 2, 3, ..`
//! followed by a list of stages. Nothing is computed until [`LazyStream::iter`]
//! builds a fresh iterator, so the same stream can be read any number of
//! times and always yields the same elements. Positions are 1-indexed.

use alloc::boxed::Box;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::{Error, Nat};

/// One transformation in a stream pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    /// Remove the elements at positions divisible by the period.
    DropEvery(u64),
    /// Replace position `p` with the sum of positions `1..=p`.
    PartialSums,
}

/// A conceptually infinite, 1-indexed stream of [`Nat`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LazyStream {
    stages: Vec<Stage>,
}

impl LazyStream {
    /// The stream `1, 2, 3, ..`.
    pub fn naturals() -> Self {
        Self::default()
    }

    /// Keeps the elements at positions `p` with `p mod period != 0`.
    pub fn drop_every(mut self, period: u64) -> Result<Self, Error> {
        if period < 2 {
            return Err(Error::DropPeriod { period });
        }
        self.stages.push(Stage::DropEvery(period));
        Ok(self)
    }

    pub fn partial_sums(mut self) -> Self {
        self.stages.push(Stage::PartialSums);
        self
    }

    pub fn stages(&self) -> &[Stage] {
        &self.stages
    }

    /// A fresh iterator over the stream, starting at position 1.
    pub fn iter(&self) -> Elements {
        let mut it: Box<dyn Iterator<Item = Nat>> = Box::new(Naturals::new());
        for stage in &self.stages {
            it = match *stage {
                Stage::DropEvery(period) => Box::new(it.drop_every(period)),
                Stage::PartialSums => Box::new(it.partial_sums()),
            };
        }
        Elements { inner: it }
    }

    /// The first `count` elements. Forces exactly that many outputs.
    pub fn take(&self, count: usize) -> Vec<Nat> {
        self.iter().take(count).collect()
    }

    /// The element at 1-indexed `position`; `None` for position 0.
    pub fn at(&self, position: usize) -> Option<Nat> {
        position.checked_sub(1).and_then(|p| self.iter().nth(p))
    }
}

impl IntoIterator for &LazyStream {
    type Item = Nat;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.iter()
    }
}

/// Iterator produced by [`LazyStream::iter`].
pub struct Elements {
    inner: Box<dyn Iterator<Item = Nat>>,
}

impl Iterator for Elements {
    type Item = Nat;

    fn next(&mut self) -> Option<Nat> {
        self.inner.next()
    }
}

/// `1, 2, 3, ..` without bound.
#[derive(Debug, Clone)]
pub struct Naturals {
    next: Nat,
}

impl Naturals {
    pub fn new() -> Self {
        Self { next: Nat::one() }
    }
}

impl Default for Naturals {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for Naturals {
    type Item = Nat;

    fn next(&mut self) -> Option<Nat> {
        let out = self.next.clone();
        self.next += 1u32;
        Some(out)
    }
}

/// Iterator adapter removing every `period`-th element (1-indexed).
#[derive(Debug, Clone)]
pub struct DropEvery<I> {
    src: I,
    period: u64,
    // 1-indexed position of the last element pulled from `src`, modulo period
    phase: u64,
}

impl<I> Iterator for DropEvery<I>
where
    I: Iterator,
{
    type Item = I::Item;

    fn next(&mut self) -> Option<I::Item> {
        loop {
            let item = self.src.next()?;
            self.phase = (self.phase + 1) % self.period;
            if self.phase != 0 {
                return Some(item);
            }
        }
    }
}

/// Inclusive running-sum adapter: the first output is the first input.
#[derive(Debug, Clone)]
pub struct PartialSums<I> {
    src: I,
    sum: Nat,
}

impl<I> Iterator for PartialSums<I>
where
    I: Iterator<Item = Nat>,
{
    type Item = Nat;

    fn next(&mut self) -> Option<Nat> {
        let x = self.src.next()?;
        self.sum += x;
        Some(self.sum.clone())
    }
}

/// The sieve combinators on any iterator of naturals.
pub trait StreamExt: Iterator<Item = Nat> + Sized {
    /// # Panics
    /// If `period < 2`. [`LazyStream::drop_every`] reports this as an error.
    fn drop_every(self, period: u64) -> DropEvery<Self> {
        assert!(period >= 2, "drop period must be at least 2");
        DropEvery {
            src: self,
            period,
            phase: 0,
        }
    }

    fn partial_sums(self) -> PartialSums<Self> {
        PartialSums {
            src: self,
            sum: Nat::zero(),
        }
    }
}

impl<I: Iterator<Item = Nat>> StreamExt for I {}

pub fn naturals() -> LazyStream {
    LazyStream::naturals()
}

pub fn drop_every(s: LazyStream, x: u64) -> Result<LazyStream, Error> {
    s.drop_every(x)
}

pub fn partial_sums(s: LazyStream) -> LazyStream {
    s.partial_sums()
}

pub fn take(s: &LazyStream, count: usize) -> Vec<Nat> {
    s.take(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::cell::Cell;

    fn nats(v: &[u32]) -> Vec<Nat> {
        v.iter().map(|&x| Nat::from(x)).collect()
    }

    #[test]
    fn naturals_prefix() {
        assert_eq!(naturals().take(5), nats(&[1, 2, 3, 4, 5]));
        assert!(naturals().take(0).is_empty());
        assert_eq!(naturals().at(10), Some(Nat::from(10u32)));
        assert_eq!(naturals().at(0), None);
    }

    #[test]
    fn drop_every_second_gives_odds() {
        let s = naturals().drop_every(2).unwrap();
        assert_eq!(s.take(5), nats(&[1, 3, 5, 7, 9]));
        assert_eq!(take(&s, 4), nats(&[1, 3, 5, 7]));
    }

    #[test]
    fn drop_every_third() {
        let s = drop_every(naturals(), 3).unwrap();
        assert_eq!(s.take(6), nats(&[1, 2, 4, 5, 7, 8]));
    }

    #[test]
    fn drop_period_below_two_is_rejected() {
        assert_eq!(
            naturals().drop_every(1),
            Err(Error::DropPeriod { period: 1 })
        );
        assert_eq!(
            naturals().drop_every(0),
            Err(Error::DropPeriod { period: 0 })
        );
    }

    #[test]
    fn partial_sums_examples() {
        let odds = naturals().drop_every(2).unwrap();
        assert_eq!(partial_sums(odds).take(5), nats(&[1, 4, 9, 16, 25]));
        assert_eq!(naturals().partial_sums().take(4), nats(&[1, 3, 6, 10]));
        // 1, 1+3, 1+3+6
        assert_eq!(
            naturals().partial_sums().partial_sums().take(3),
            nats(&[1, 4, 10])
        );
    }

    #[test]
    fn take_forces_only_what_it_needs() {
        let pulled = Cell::new(0usize);
        let src = (1u32..).map(|x| {
            pulled.set(pulled.get() + 1);
            Nat::from(x)
        });
        let out: Vec<Nat> = src.partial_sums().take(4).collect();
        assert_eq!(out, nats(&[1, 3, 6, 10]));
        assert_eq!(pulled.get(), 4);
    }

    #[test]
    fn drop_pulls_only_up_to_last_kept() {
        let pulled = Cell::new(0usize);
        let src = (1u32..).map(|x| {
            pulled.set(pulled.get() + 1);
            Nat::from(x)
        });
        let out: Vec<Nat> = src.drop_every(3).take(4).collect();
        assert_eq!(out, nats(&[1, 2, 4, 5]));
        assert_eq!(pulled.get(), 5);
    }

    #[test]
    fn repeated_reads_agree() {
        let s = naturals()
            .drop_every(4)
            .unwrap()
            .partial_sums()
            .drop_every(3)
            .unwrap()
            .partial_sums();
        assert_eq!(s.take(20), s.take(20));
        assert_eq!(s.clone().take(7), s.take(7));
        assert_eq!(s.stages().len(), 4);
        assert_eq!(s.stages()[0], Stage::DropEvery(4));
    }
}
