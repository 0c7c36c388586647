use std::collections::BTreeMap;

use crate::algebra::{dot, rank_of, Matrix, Scalar};
use crate::arrangement::CentralArrangement;

use super::fm::strict_homogeneous;
use super::sign::{word_count, SignVector};
use super::ChamberError;

/// Sign patterns of every one-dimensional flat against all hyperplanes.
///
/// The closure of a chamber is a pointed polyhedral cone, so it is generated
/// by the one-dimensional flats it contains; a ray `±p` lies in the closure
/// of `σ` exactly when every nonzero `⟨p, vᵢ⟩` has sign `σᵢ` (resp. `−σᵢ`).
#[derive(Clone, Debug)]
pub(crate) struct RayTable<const D: usize> {
    points: Vec<[Scalar; D]>,
    members: Vec<Vec<usize>>,
    pos: Vec<Vec<u64>>,
    neg: Vec<Vec<u64>>,
}

impl<const D: usize> RayTable<D> {
    pub(crate) fn new(a: &CentralArrangement<D>) -> Self {
        let n = a.len();
        let rays = a.lattice().rays();
        let mut table = Self {
            points: Vec::with_capacity(rays.len()),
            members: Vec::with_capacity(rays.len()),
            pos: Vec::with_capacity(rays.len()),
            neg: Vec::with_capacity(rays.len()),
        };
        for ray in rays {
            let p = ray.point().clone();
            let mut pos = vec![0u64; word_count(n)];
            let mut neg = vec![0u64; word_count(n)];
            for (i, v) in a.normals().iter().enumerate() {
                match dot(v, &p).signum() {
                    1 => pos[i / 64] |= 1 << (i % 64),
                    -1 => neg[i / 64] |= 1 << (i % 64),
                    _ => {}
                }
            }
            table.points.push(p);
            table.members.push(ray.members().to_vec());
            table.pos.push(pos);
            table.neg.push(neg);
        }
        table
    }

    pub(crate) fn point(&self, ray: usize) -> &[Scalar; D] {
        &self.points[ray]
    }

    pub(crate) fn members(&self, ray: usize) -> &[usize] {
        &self.members[ray]
    }

    /// Rays in the closure of `σ`, each with the orientation `±1` that puts
    /// it there.
    pub(crate) fn closure_rays(&self, sigma: &SignVector) -> Vec<(usize, i8)> {
        let s = sigma.words();
        let fits = |a: &[u64], b: &[u64]| {
            // a ⊆ σ and b ∩ σ = ∅
            a.iter().zip(b).zip(s).all(|((a, b), s)| a & !s == 0 && b & s == 0)
        };
        (0..self.points.len())
            .filter_map(|r| {
                if fits(&self.pos[r], &self.neg[r]) {
                    Some((r, 1))
                } else if fits(&self.neg[r], &self.pos[r]) {
                    Some((r, -1))
                } else {
                    None
                }
            })
            .collect()
    }

    /// Walls of `σ`: hyperplanes whose closure rays span a facet.
    pub(crate) fn walls(&self, sigma: &SignVector) -> Vec<usize> {
        let mut on: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (r, _) in self.closure_rays(sigma) {
            for &h in &self.members[r] {
                on.entry(h).or_default().push(r);
            }
        }
        on.into_iter()
            .filter(|(_, rays)| {
                rays.len() >= D - 1
                    && rank_of(D, &rays.iter().map(|&r| &self.points[r][..]).collect::<Vec<_>>()) == D - 1
            })
            .map(|(h, _)| h)
            .collect()
    }

    /// Sum of the oriented closure rays, an interior point of the chamber.
    pub(crate) fn witness(&self, sigma: &SignVector) -> [Scalar; D] {
        let mut x: [Scalar; D] = std::array::from_fn(|_| Scalar::zero());
        for (r, o) in self.closure_rays(sigma) {
            for (xi, pi) in x.iter_mut().zip(&self.points[r]) {
                *xi = if o > 0 { &*xi + pi } else { &*xi - pi };
            }
        }
        x
    }
}

/// Walls of the cone `{x : σᵢ⟨x, vᵢ⟩ > 0}` decided by Fourier–Motzkin: `H` is
/// a wall when the other strict inequalities stay feasible on `H`.
pub fn walls_by_elimination<const D: usize>(
    a: &CentralArrangement<D>,
    sigma: &SignVector,
) -> Result<Vec<usize>, ChamberError> {
    assert_eq!(sigma.len(), a.len(), "sign vector length differs from arrangement size");
    let oriented: Vec<Vec<Scalar>> = a
        .normals()
        .iter()
        .enumerate()
        .map(|(i, v)| v.iter().map(|c| if sigma.is_positive(i) { c.clone() } else { -c }).collect())
        .collect();
    if strict_homogeneous(&oriented).is_none() {
        return Err(ChamberError::EmptyChamber { sign: sigma.to_string() });
    }
    let mut walls = Vec::new();
    for h in 0..a.len() {
        let basis = Matrix::from_rows(D, &[&a.normal(h)[..]]).kernel_basis();
        let restricted: Vec<Vec<Scalar>> = oriented
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != h)
            .map(|(_, row)| basis.iter().map(|b| dot(row, b)).collect())
            .collect();
        if strict_homogeneous(&restricted).is_some() {
            walls.push(h);
        }
    }
    Ok(walls)
}
