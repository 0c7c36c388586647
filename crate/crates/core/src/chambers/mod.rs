//! Chamber enumeration by breadth-first search over sign vectors, walls,
//! Coxeter diagrams and the predicates built from them.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{dot, Scalar};
use crate::arrangement::CentralArrangement;

mod diagram;
mod fm;
mod sign;
mod walls;

pub use diagram::{CoxeterDiagram, DiagramEdge};
pub use fm::strict_homogeneous;
pub use sign::SignVector;
pub use walls::walls_by_elimination;

use walls::RayTable;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ChamberError {
    #[error("no point off all hyperplanes among the first {tried} moment-curve candidates")]
    GenericPointNotFound { tried: usize },
    #[error("sign vector {sign} does not describe a chamber")]
    EmptyChamber { sign: String },
}

/// A projective chamber: canonical sign vector and its walls.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chamber {
    pub sign: SignVector,
    pub walls: Vec<usize>,
}

/// Output of an enumeration; `complete` is false when a chamber limit cut it short.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub chambers: Vec<Chamber>,
    pub complete: bool,
}

/// Precomputed data for chamber queries on one arrangement.
pub struct ChamberEngine<'a, const D: usize> {
    arrangement: &'a CentralArrangement<D>,
    rays: RayTable<D>,
}

fn primes() -> impl Iterator<Item = i64> {
    (2i64..).filter(|&p| (2..).take_while(|d| d * d <= p).all(|d| p % d != 0))
}

impl<'a, const D: usize> ChamberEngine<'a, D> {
    pub fn new(arrangement: &'a CentralArrangement<D>) -> Self {
        Self { arrangement, rays: RayTable::new(arrangement) }
    }

    pub fn arrangement(&self) -> &CentralArrangement<D> {
        self.arrangement
    }

    /// First point `(1, p, p², …)` over increasing primes `p` lying on no
    /// hyperplane. A hyperplane contains at most `D − 1` points of the moment
    /// curve, so `(D − 1)·n + 1` candidates always suffice.
    pub fn generic_point(&self) -> Result<[Scalar; D], ChamberError> {
        let tried = (D - 1) * self.arrangement.len() + 1;
        primes()
            .take(tried)
            .map(|p| {
                let mut x: [Scalar; D] = std::array::from_fn(|_| Scalar::one());
                for i in 1..D {
                    x[i] = &x[i - 1] * &Scalar::from_int(p);
                }
                x
            })
            .find(|x| self.arrangement.normals().iter().all(|v| !dot(v, x).is_zero()))
            .ok_or(ChamberError::GenericPointNotFound { tried })
    }

    /// Canonical sign vector of the chamber containing `x`, which must lie
    /// off every hyperplane.
    pub fn sign_of(&self, x: &[Scalar; D]) -> SignVector {
        let signs: Vec<i8> = self.arrangement.normals().iter().map(|v| dot(v, x).signum()).collect();
        SignVector::from_signs(&signs).canonical()
    }

    pub fn walls(&self, sigma: &SignVector) -> Vec<usize> {
        self.rays.walls(sigma)
    }

    /// Extreme rays of the closed cone, as vectors oriented into it.
    pub fn extreme_rays(&self, sigma: &SignVector) -> Vec<[Scalar; D]> {
        self.rays
            .closure_rays(sigma)
            .into_iter()
            .map(|(r, o)| {
                let p = self.rays.point(r);
                if o > 0 {
                    p.clone()
                } else {
                    std::array::from_fn(|i| -&p[i])
                }
            })
            .collect()
    }

    /// Indices (into the lattice's rank-2 flats) of the two-dimensional
    /// faces of the closed cone: the rank-2 flats holding at least two of its
    /// extreme rays. Only meaningful in K⁴.
    pub fn edges(&self, sigma: &SignVector) -> Vec<usize> {
        let lat = self.arrangement.lattice();
        let rays = self.rays.closure_rays(sigma);
        let mut out = Vec::new();
        for (li, line) in lat.rank2().iter().enumerate() {
            let count = rays
                .iter()
                .filter(|&&(r, _)| line.members().iter().all(|m| self.rays.members(r).binary_search(m).is_ok()))
                .count();
            if count >= 2 {
                out.push(li);
            }
        }
        out
    }

    /// An interior point of the chamber, checked against every sign.
    pub fn witness(&self, sigma: &SignVector) -> Result<[Scalar; D], ChamberError> {
        let x = self.rays.witness(sigma);
        let ok = self
            .arrangement
            .normals()
            .iter()
            .enumerate()
            .all(|(i, v)| dot(v, &x).signum() == sigma.get(i));
        if ok {
            Ok(x)
        } else {
            Err(ChamberError::EmptyChamber { sign: sigma.to_string() })
        }
    }

    pub fn diagram(&self, chamber: &Chamber) -> CoxeterDiagram {
        let lat = self.arrangement.lattice();
        CoxeterDiagram::new(chamber.walls.clone(), |a, b| lat.rank2()[lat.line_of(a, b)].weight())
    }

    /// Breadth-first search from the chamber of the generic point, crossing
    /// one wall at a time. Levels are expanded in parallel; the result is
    /// sorted by sign vector. Stops once more than `limit` chambers are known.
    pub fn enumerate(&self, limit: Option<usize>) -> Result<Enumeration, ChamberError> {
        let seed = self.sign_of(&self.generic_point()?);
        let mut seen: HashSet<SignVector> = HashSet::from([seed.clone()]);
        let mut frontier = vec![seed];
        let mut chambers = Vec::new();
        let mut complete = true;
        while !frontier.is_empty() {
            let expanded: Vec<Chamber> = frontier
                .par_iter()
                .map(|s| Chamber { sign: s.clone(), walls: self.walls(s) })
                .collect();
            let mut next = Vec::new();
            for c in &expanded {
                for &h in &c.walls {
                    let t = c.sign.flipped(h).canonical();
                    if !seen.contains(&t) {
                        seen.insert(t.clone());
                        next.push(t);
                    }
                }
            }
            chambers.extend(expanded);
            if let Some(l) = limit.filter(|&l| seen.len() > l) {
                // fill up to the limit with discovered but unexpanded chambers
                next.sort();
                next.truncate(l.saturating_sub(chambers.len()));
                chambers.extend(next.into_iter().map(|s| Chamber { walls: self.walls(&s), sign: s }));
                complete = false;
                break;
            }
            // the next level is processed in a schedule-independent order
            next.sort();
            frontier = next;
        }
        chambers.sort();
        Ok(Enumeration { chambers, complete })
    }
}

/// Aggregate facts over all chambers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChamberSummary {
    pub count: usize,
    pub complete: bool,
    pub simplicial: bool,
    pub simply_laced: bool,
    pub irreducible: bool,
    /// number of chambers with each wall count
    pub wall_counts: BTreeMap<usize, u64>,
    /// number of chambers with each diagram type
    pub diagram_types: BTreeMap<String, u64>,
}

impl ChamberSummary {
    pub fn from_enumeration<const D: usize>(engine: &ChamberEngine<'_, D>, e: &Enumeration) -> Self {
        let diagrams: Vec<CoxeterDiagram> = e.chambers.par_iter().map(|c| engine.diagram(c)).collect();
        let mut wall_counts = BTreeMap::new();
        for c in &e.chambers {
            *wall_counts.entry(c.walls.len()).or_insert(0) += 1;
        }
        let mut diagram_types = BTreeMap::new();
        for d in &diagrams {
            *diagram_types.entry(d.type_name()).or_insert(0) += 1;
        }
        Self {
            count: e.chambers.len(),
            complete: e.complete,
            simplicial: e.chambers.iter().all(|c| c.walls.len() == D),
            simply_laced: diagrams.iter().all(CoxeterDiagram::is_simply_laced),
            irreducible: diagrams.iter().all(CoxeterDiagram::is_connected),
            wall_counts,
            diagram_types,
        }
    }
}

/// All chambers of `a`, sorted by canonical sign vector.
pub fn enumerate_chambers<const D: usize>(a: &CentralArrangement<D>) -> Result<Vec<Chamber>, ChamberError> {
    Ok(ChamberEngine::new(a).enumerate(None)?.chambers)
}

/// Walls of the chamber `σ`, decided by elimination.
pub fn walls<const D: usize>(a: &CentralArrangement<D>, sigma: &SignVector) -> Result<Vec<usize>, ChamberError> {
    walls_by_elimination(a, sigma)
}

pub fn summarize<const D: usize>(a: &CentralArrangement<D>) -> Result<ChamberSummary, ChamberError> {
    let engine = ChamberEngine::new(a);
    let e = engine.enumerate(None)?;
    Ok(ChamberSummary::from_enumeration(&engine, &e))
}

/// Every chamber has exactly `D` walls.
pub fn is_simplicial<const D: usize>(a: &CentralArrangement<D>) -> Result<bool, ChamberError> {
    Ok(enumerate_chambers(a)?.iter().all(|c| c.walls.len() == D))
}

pub fn coxeter_diagram<const D: usize>(a: &CentralArrangement<D>, chamber: &Chamber) -> CoxeterDiagram {
    ChamberEngine::new(a).diagram(chamber)
}

/// Every chamber's diagram has only weight-3 edges.
pub fn is_simply_laced<const D: usize>(a: &CentralArrangement<D>) -> Result<bool, ChamberError> {
    Ok(summarize(a)?.simply_laced)
}

/// Every chamber's diagram is connected.
pub fn is_irreducible_diagrams<const D: usize>(a: &CentralArrangement<D>) -> Result<bool, ChamberError> {
    Ok(summarize(a)?.irreducible)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{Arrangement, Rank3Arrangement};

    fn boolean() -> Arrangement {
        Arrangement::from_ints(&[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]).unwrap()
    }

    fn generic_five() -> Arrangement {
        Arrangement::from_ints(&[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 2, 3, 5]]).unwrap()
    }

    #[test]
    fn boolean_chambers() {
        let cs = enumerate_chambers(&boolean()).unwrap();
        assert_eq!(cs.len(), 8);
        assert!(cs.iter().all(|c| c.walls == vec![0, 1, 2, 3]));
        let all_plus = SignVector::positive(4);
        assert_eq!(walls(&boolean(), &all_plus).unwrap(), vec![0, 1, 2, 3]);
        let d = coxeter_diagram(&boolean(), &cs[0]);
        assert!(d.edges.is_empty());
        assert!(!is_irreducible_diagrams(&boolean()).unwrap());
    }

    #[test]
    fn generic_fifth_hyperplane_is_not_simplicial() {
        let a = generic_five();
        let engine = ChamberEngine::new(&a);
        // x1, x2, x3 > 0, x4 < 0 and x1 + 2x2 + 3x3 + 5x4 > 0
        let sigma = SignVector::from_signs(&[1, 1, 1, -1, 1]);
        assert_eq!(engine.walls(&sigma), vec![0, 1, 2, 3, 4]);
        assert_eq!(walls(&a, &sigma).unwrap(), vec![0, 1, 2, 3, 4]);
        assert!(!is_simplicial(&a).unwrap());
    }

    #[test]
    fn empty_sign_vector_is_rejected() {
        // x1, x2, x3, x4 > 0 forces x1 + 2x2 + 3x3 + 5x4 > 0
        let sigma = SignVector::from_signs(&[1, 1, 1, 1, -1]);
        assert!(matches!(walls(&generic_five(), &sigma), Err(ChamberError::EmptyChamber { .. })));
    }

    #[test]
    fn ray_walls_match_elimination() {
        let a = generic_five();
        let engine = ChamberEngine::new(&a);
        for c in engine.enumerate(None).unwrap().chambers {
            assert_eq!(c.walls, walls(&a, &c.sign).unwrap(), "{}", c.sign);
            engine.witness(&c.sign).unwrap();
        }
    }

    #[test]
    fn rank3_chambers() {
        // braid arrangement A3 in K³: 6 lines, 12 chambers of the sphere
        let a = Rank3Arrangement::from_ints(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, -1, 0], [0, 1, -1], [1, 0, -1]])
            .unwrap();
        let s = summarize(&a).unwrap();
        assert_eq!(s.count, 12);
        assert!(s.simplicial && s.simply_laced && s.irreducible);
    }

    #[test]
    fn limit_marks_partial_result() {
        let e = ChamberEngine::new(&generic_five()).enumerate(Some(3)).unwrap();
        assert!(!e.complete);
        assert_eq!(e.chambers.len(), 3);
    }
}
