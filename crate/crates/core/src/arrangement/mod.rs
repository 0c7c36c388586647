//! Central hyperplane arrangements, their intersection lattices, and the
//! derived rank-3 arrangements (restrictions and parabolic subarrangements).
//!
//! A projective arrangement in P³ is handled as the central arrangement of
//! linear hyperplanes in K⁴ that it comes from; antipodal identification only
//! enters when cells are counted.

use std::collections::HashMap;
use std::sync::OnceLock;

use thiserror::Error;

use crate::algebra::{primitive_integer, projective_normalize, rank_of, Field, Scalar};

mod lattice;
mod reducible;
mod restrict;
mod weights;

pub use lattice::{Flat, Lattice, LineFlat, VertexFlat};
pub use weights::{HVector, TVector, WeightCounts};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ArrangementError {
    #[error("an arrangement needs at least one hyperplane")]
    Empty,
    #[error("normal {index} is the zero vector")]
    ZeroNormal { index: usize },
    #[error("normals {first} and {second} define the same hyperplane")]
    DuplicateHyperplane { first: usize, second: usize },
    #[error("normals span a subspace of rank {rank}, expected {expected}")]
    NotEssential { rank: usize, expected: usize },
    #[error("normal {index} has coordinates outside the {field} field")]
    MixedField { index: usize, field: Field },
}

/// An essential central arrangement of `n` linear hyperplanes in K^D.
///
/// Normals are stored in canonical projective form: over ℚ as primitive
/// integer vectors with a positive leading coordinate, over ℚ(τ) scaled so
/// the leading coordinate is one. Hyperplane indices follow input order.
#[derive(Debug)]
pub struct CentralArrangement<const D: usize> {
    field: Field,
    normals: Vec<[Scalar; D]>,
    lattice: OnceLock<Lattice<D>>,
}

/// An arrangement in P³(ℝ), i.e. a central arrangement in K⁴.
pub type Arrangement = CentralArrangement<4>;

/// An arrangement in P²(ℝ), used for restrictions and parabolic subarrangements.
pub type Rank3Arrangement = CentralArrangement<3>;

impl<const D: usize> Clone for CentralArrangement<D> {
    fn clone(&self) -> Self {
        Self { field: self.field, normals: self.normals.clone(), lattice: OnceLock::new() }
    }
}

impl<const D: usize> PartialEq for CentralArrangement<D> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.normals == other.normals
    }
}

impl<const D: usize> Eq for CentralArrangement<D> {}

/// Canonical projective representative of a normal vector.
pub fn canonical_normal(field: Field, v: &[Scalar]) -> Vec<Scalar> {
    match field {
        Field::Rational => primitive_integer(v),
        Field::QuadraticTau => projective_normalize(v),
    }
}

impl<const D: usize> CentralArrangement<D> {
    /// Builds an arrangement over the smallest field containing all coordinates.
    pub fn new(normals: Vec<[Scalar; D]>) -> Result<Self, ArrangementError> {
        let field = normals.iter().flatten().map(Scalar::field).fold(Field::Rational, Field::join);
        Self::with_field(field, normals)
    }

    /// Builds an arrangement over an explicitly declared field.
    pub fn with_field(field: Field, normals: Vec<[Scalar; D]>) -> Result<Self, ArrangementError> {
        if normals.is_empty() {
            return Err(ArrangementError::Empty);
        }
        let mut seen: HashMap<Vec<Scalar>, usize> = HashMap::with_capacity(normals.len());
        let mut canonical = Vec::with_capacity(normals.len());
        for (index, v) in normals.iter().enumerate() {
            if v.iter().any(|x| x.field() > field) {
                return Err(ArrangementError::MixedField { index, field });
            }
            if v.iter().all(Scalar::is_zero) {
                return Err(ArrangementError::ZeroNormal { index });
            }
            let c = canonical_normal(field, v);
            if let Some(&first) = seen.get(&c) {
                return Err(ArrangementError::DuplicateHyperplane { first, second: index });
            }
            seen.insert(c.clone(), index);
            canonical.push(to_array(c));
        }
        let rank = rank_of(D, &canonical);
        if rank < D {
            return Err(ArrangementError::NotEssential { rank, expected: D });
        }
        Ok(Self { field, normals: canonical, lattice: OnceLock::new() })
    }

    pub fn from_ints(rows: &[[i64; D]]) -> Result<Self, ArrangementError> {
        Self::new(rows.iter().map(|r| r.map(Scalar::from_int)).collect())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }

    pub fn normals(&self) -> &[[Scalar; D]] {
        &self.normals
    }

    pub fn normal(&self, index: usize) -> &[Scalar; D] {
        &self.normals[index]
    }

    /// The intersection lattice, computed on first use.
    pub fn lattice(&self) -> &Lattice<D> {
        self.lattice.get_or_init(|| Lattice::compute(&self.normals))
    }

    /// Same hyperplanes with normals sorted lexicographically.
    pub fn sorted(&self) -> Self {
        let mut normals = self.normals.clone();
        normals.sort();
        Self { field: self.field, normals, lattice: OnceLock::new() }
    }

    /// Drops the hyperplanes at the given indices.
    pub fn without(&self, drop: &[usize]) -> Result<Self, ArrangementError> {
        let normals = self
            .normals
            .iter()
            .enumerate()
            .filter(|(i, _)| !drop.contains(i))
            .map(|(_, v)| v.clone())
            .collect();
        Self::with_field(self.field, normals)
    }

    /// Lines of the arrangement (rank-2 flats).
    pub fn lines(&self) -> &[Flat<D>] {
        &self.lattice().rank2
    }

    /// h-vector: number of rank-2 flats of each weight.
    pub fn h_vector(&self) -> HVector {
        HVector(self.lines().iter().map(Flat::weight).collect())
    }
}

impl Arrangement {
    /// Vertices of the arrangement (rank-3 flats).
    pub fn vertices(&self) -> &[Flat<4>] {
        &self.lattice().rank3
    }

    /// t-vector: number of vertices of each weight.
    pub fn t_vector(&self) -> TVector {
        TVector(self.vertices().iter().map(Flat::weight).collect())
    }

    /// Largest vertex weight.
    pub fn multiplicity(&self) -> usize {
        self.t_vector().multiplicity()
    }
}

pub(crate) fn to_array<const D: usize>(v: Vec<Scalar>) -> [Scalar; D] {
    v.try_into().unwrap_or_else(|v: Vec<Scalar>| panic!("expected {D} coordinates, got {}", v.len()))
}
