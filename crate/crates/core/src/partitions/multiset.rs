use std::collections::btree_map;
use std::collections::BTreeMap;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

/// Finite multiset with deterministic (sorted) iteration. Zero multiplicities are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiset<T: Ord> {
    counts: BTreeMap<T, u64>,
}

impl<T: Ord> Default for Multiset<T> {
    fn default() -> Self {
        Multiset {
            counts: BTreeMap::new(),
        }
    }
}

impl<T: Ord> Multiset<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, item: T, multiplicity: u64) {
        if multiplicity > 0 {
            *self.counts.entry(item).or_insert(0) += multiplicity;
        }
    }

    pub fn multiplicity(&self, item: &T) -> u64 {
        self.counts.get(item).copied().unwrap_or(0)
    }

    pub fn contains(&self, item: &T) -> bool {
        self.counts.contains_key(item)
    }

    /// Number of distinct members.
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Sum of all multiplicities.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&T, u64)> + '_ {
        self.counts.iter().map(|(k, &v)| (k, v))
    }

    pub fn keys(&self) -> impl Iterator<Item = &T> + '_ {
        self.counts.keys()
    }
}

impl<T: Ord> IntoIterator for Multiset<T> {
    type Item = (T, u64);
    type IntoIter = btree_map::IntoIter<T, u64>;

    fn into_iter(self) -> Self::IntoIter {
        self.counts.into_iter()
    }
}

impl<T: Ord> FromIterator<(T, u64)> for Multiset<T> {
    fn from_iter<I: IntoIterator<Item = (T, u64)>>(iter: I) -> Self {
        let mut m = Multiset::new();
        for (k, v) in iter {
            m.insert(k, v);
        }
        m
    }
}

/// Serialized as a list of `[member, multiplicity]` pairs in sorted order.
impl<T: Ord + Serialize> Serialize for Multiset<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.counts.len()))?;
        for (k, v) in &self.counts {
            seq.serialize_element(&(k, v))?;
        }
        seq.end()
    }
}
