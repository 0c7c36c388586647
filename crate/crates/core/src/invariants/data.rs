use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arrangement::{Arrangement, HVector, TVector};

use super::charpoly::f_vector;

/// Cell counts `(f₀, f₁, f₂, f₃)` of the decomposition of P³.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector(pub [u64; 4]);

impl FVector {
    pub fn vertices(&self) -> u64 {
        self.0[0]
    }

    pub fn edges(&self) -> u64 {
        self.0[1]
    }

    pub fn faces(&self) -> u64 {
        self.0[2]
    }

    pub fn chambers(&self) -> u64 {
        self.0[3]
    }

    /// `f₀ − f₁ + f₂ − f₃`.
    pub fn euler_characteristic(&self) -> i64 {
        self.0[0] as i64 - self.0[1] as i64 + self.0[2] as i64 - self.0[3] as i64
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a}, {b}, {c}, {d})")
    }
}

/// The combinatorial record every checker works from: `n` with h-, t- and
/// f-vectors. Catalogue rows without normal vectors supply this directly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementData {
    pub n: u64,
    pub h: HVector,
    pub t: TVector,
    pub f: FVector,
}

impl ArrangementData {
    pub fn new(n: u64, h: HVector, t: TVector, f: FVector) -> Self {
        Self { n, h, t, f }
    }

    pub fn from_arrangement(a: &Arrangement) -> Self {
        Self { n: a.len() as u64, h: a.h_vector(), t: a.t_vector(), f: f_vector(a) }
    }

    /// `h = Σ (i − 1)·hᵢ`.
    pub fn h_sum(&self) -> u64 {
        self.h.h_sum()
    }

    /// `g₁ = Σ hᵢ`, the number of lines.
    pub fn g1(&self) -> u64 {
        self.h.line_count()
    }

    pub fn multiplicity(&self) -> usize {
        self.t.multiplicity()
    }

    pub fn is_simply_laced(&self) -> bool {
        self.h.is_simply_laced()
    }
}

/// Summary numbers derived from an [`ArrangementData`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivedStats {
    pub n: u64,
    /// `Σ (i − 1)·hᵢ`
    pub h: u64,
    /// `Σ hᵢ`
    pub g1: u64,
    pub f: FVector,
    pub multiplicity: usize,
}

impl From<&ArrangementData> for DerivedStats {
    fn from(d: &ArrangementData) -> Self {
        Self { n: d.n, h: d.h_sum(), g1: d.g1(), f: d.f, multiplicity: d.multiplicity() }
    }
}
