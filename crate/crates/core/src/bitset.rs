//! Fixed-capacity vertex sets.

use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::graph::GraphError;

const WORD: usize = 64;

/// A set of vertices drawn from the universe `0..capacity`.
///
/// The cardinality is cached so `len` is O(1). Two sets are only comparable
/// (union, subset, ...) when their capacities agree; mixing capacities is a
/// programming error and panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: Vec<u64>,
    capacity: usize,
    card: usize,
}

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        VertexSet {
            bits: vec![0; capacity.div_ceil(WORD)],
            capacity,
            card: 0,
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut s = Self::new(capacity);
        for v in 0..capacity {
            s.insert(v);
        }
        s
    }

    /// Builds a set from vertex ids, rejecting ids outside the universe.
    pub fn from_vertices<I>(capacity: usize, vertices: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = Self::new(capacity);
        for v in vertices {
            if v >= capacity {
                return Err(GraphError::InvalidVertexId { id: v, n: capacity });
            }
            s.insert(v);
        }
        Ok(s)
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        self.capacity
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.card
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.card == 0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.capacity && self.bits[v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Inserts `v`, returning whether it was newly added.
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.capacity, "vertex {v} outside universe of size {}", self.capacity);
        let (w, b) = (v / WORD, v % WORD);
        let fresh = self.bits[w] >> b & 1 == 0;
        if fresh {
            self.bits[w] |= 1 << b;
            self.card += 1;
        }
        fresh
    }

    /// Removes `v`, returning whether it was present.
    pub fn remove(&mut self, v: usize) -> bool {
        if !self.contains(v) {
            return false;
        }
        self.bits[v / WORD] &= !(1 << (v % WORD));
        self.card -= 1;
        true
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            bits: &self.bits,
            word: 0,
            current: self.bits.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn complement(&self) -> Self {
        let mut out = Self::new(self.capacity);
        for v in 0..self.capacity {
            if !self.contains(v) {
                out.insert(v);
            }
        }
        out
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_capacity(other);
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        self.check_capacity(other);
        let bits: Vec<u64> = self.bits.iter().zip(&other.bits).map(|(&a, &b)| f(a, b)).collect();
        let card = bits.iter().map(|w| w.count_ones() as usize).sum();
        VertexSet {
            bits,
            capacity: self.capacity,
            card,
        }
    }

    fn check_capacity(&self, other: &Self) {
        assert_eq!(
            self.capacity, other.capacity,
            "vertex sets over different universes"
        );
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.card))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

pub struct Iter<'a> {
    bits: &'a [u64],
    word: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let b = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word * WORD + b);
            }
            self.word += 1;
            self.current = *self.bits.get(self.word)?;
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}
