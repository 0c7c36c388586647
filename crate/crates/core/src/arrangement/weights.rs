use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Counts of flats by weight, keyed explicitly by weight.
///
/// Zero counts are never stored, so two vectors are equal exactly when they
/// agree at every weight.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightCounts(BTreeMap<usize, u64>);

impl WeightCounts {
    pub fn new() -> Self {
        Self::default()
    }

    /// Reads a positional list whose first entry is the count at `first_weight`.
    pub fn from_positional(first_weight: usize, counts: &[u64]) -> Self {
        let mut w = Self::new();
        for (i, &c) in counts.iter().enumerate() {
            w.add(first_weight + i, c);
        }
        w
    }

    pub fn add(&mut self, weight: usize, count: u64) {
        if count > 0 {
            *self.0.entry(weight).or_insert(0) += count;
        }
    }

    pub fn get(&self, weight: usize) -> u64 {
        self.0.get(&weight).copied().unwrap_or(0)
    }

    pub fn max_weight(&self) -> Option<usize> {
        self.0.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.0.iter().map(|(&w, &c)| (w, c))
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    /// Positional list from `first_weight` up to the largest stored weight.
    pub fn to_positional(&self, first_weight: usize) -> Vec<u64> {
        match self.max_weight() {
            None => Vec::new(),
            Some(top) if top < first_weight => Vec::new(),
            Some(top) => (first_weight..=top).map(|w| self.get(w)).collect(),
        }
    }

    pub fn as_map(&self) -> &BTreeMap<usize, u64> {
        &self.0
    }
}

impl FromIterator<usize> for WeightCounts {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut w = Self::new();
        for weight in iter {
            w.add(weight, 1);
        }
        w
    }
}

/// Number of lines of each weight `i ≥ 2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HVector(pub WeightCounts);

/// Number of vertices of each weight `j ≥ 3`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TVector(pub WeightCounts);

impl HVector {
    pub const FIRST: usize = 2;

    pub fn from_positional(counts: &[u64]) -> Self {
        Self(WeightCounts::from_positional(Self::FIRST, counts))
    }

    pub fn to_positional(&self) -> Vec<u64> {
        self.0.to_positional(Self::FIRST)
    }

    pub fn get(&self, weight: usize) -> u64 {
        self.0.get(weight)
    }

    /// `Σ (i − 1)·hᵢ`, the second coefficient of the characteristic polynomial.
    pub fn h_sum(&self) -> u64 {
        self.0.iter().map(|(w, c)| (w as u64 - 1) * c).sum()
    }

    /// `Σ_{i=2}^{limit} (i − 1)·hᵢ`.
    pub fn h_sum_upto(&self, limit: usize) -> u64 {
        self.0.iter().filter(|&(w, _)| w <= limit).map(|(w, c)| (w as u64 - 1) * c).sum()
    }

    /// Number of lines, `Σ hᵢ`.
    pub fn line_count(&self) -> u64 {
        self.0.total()
    }

    /// `Σ C(i, 2)·hᵢ`, the number of hyperplane pairs.
    pub fn pair_count(&self) -> u64 {
        self.0.iter().map(|(w, c)| (w as u64) * (w as u64 - 1) / 2 * c).sum()
    }

    /// True when no line has weight four or more.
    pub fn is_simply_laced(&self) -> bool {
        self.0.max_weight().is_none_or(|w| w <= 3)
    }
}

impl TVector {
    pub const FIRST: usize = 3;

    pub fn from_positional(counts: &[u64]) -> Self {
        Self(WeightCounts::from_positional(Self::FIRST, counts))
    }

    pub fn to_positional(&self) -> Vec<u64> {
        self.0.to_positional(Self::FIRST)
    }

    pub fn get(&self, weight: usize) -> u64 {
        self.0.get(weight)
    }

    /// Largest vertex weight that occurs.
    pub fn multiplicity(&self) -> usize {
        self.0.max_weight().unwrap_or(0)
    }

    /// `Σ j·tⱼ`.
    pub fn weighted_sum(&self) -> u64 {
        self.0.iter().map(|(w, c)| w as u64 * c).sum()
    }
}

fn fmt_positional(f: &mut fmt::Formatter<'_>, v: &[u64]) -> fmt::Result {
    let parts: Vec<String> = v.iter().map(u64::to_string).collect();
    write!(f, "({})", parts.join(", "))
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_positional(f, &self.to_positional())
    }
}

impl fmt::Display for TVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_positional(f, &self.to_positional())
    }
}
