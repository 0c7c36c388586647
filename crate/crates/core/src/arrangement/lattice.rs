use std::collections::HashMap;

use rayon::prelude::*;

use crate::algebra::{dot, projective_normalize, Matrix, Scalar};

use super::to_array;

/// An element of the intersection lattice other than the ambient space and
/// the origin.
///
/// `members` lists, in increasing order, every hyperplane containing the
/// flat; `basis` is the canonical kernel basis of those normals, so two flats
/// are the same subspace exactly when their bases agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat<const D: usize> {
    members: Vec<usize>,
    basis: Vec<[Scalar; D]>,
}

/// A rank-2 flat of an arrangement in K⁴: a projective line.
pub type LineFlat = Flat<4>;

/// A rank-3 flat of an arrangement in K⁴: a projective point.
pub type VertexFlat = Flat<4>;

impl<const D: usize> Flat<D> {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// Number of hyperplanes containing the flat.
    pub fn weight(&self) -> usize {
        self.members.len()
    }

    pub fn basis(&self) -> &[[Scalar; D]] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn rank(&self) -> usize {
        D - self.basis.len()
    }

    /// Spanning vector of a one-dimensional flat.
    pub fn point(&self) -> &[Scalar; D] {
        assert_eq!(self.basis.len(), 1, "point() on a flat of dimension {}", self.basis.len());
        &self.basis[0]
    }

    pub fn contains_hyperplane(&self, index: usize) -> bool {
        self.members.binary_search(&index).is_ok()
    }

    /// True when every member of `other` is a member of `self`, i.e. the
    /// subspace `self` lies inside `other`.
    pub fn is_below(&self, other: &Flat<D>) -> bool {
        other.members.iter().all(|m| self.contains_hyperplane(*m))
    }
}

/// Rank-2 and (for K⁴) rank-3 flats with their incidences.
#[derive(Clone, Debug)]
pub struct Lattice<const D: usize> {
    n: usize,
    pub(crate) rank2: Vec<Flat<D>>,
    pub(crate) rank3: Vec<Flat<D>>,
    pair_line: Vec<u32>,
    vertex_lines: Vec<Vec<usize>>,
}

impl<const D: usize> Lattice<D> {
    pub(crate) fn compute(normals: &[[Scalar; D]]) -> Self {
        let n = normals.len();
        let (rank2, pair_line) = rank2_flats(normals);
        let (rank3, vertex_lines) =
            if D == 4 { rank3_flats(normals, &rank2) } else { (Vec::new(), Vec::new()) };
        Self { n, rank2, rank3, pair_line, vertex_lines }
    }

    pub fn hyperplane_count(&self) -> usize {
        self.n
    }

    pub fn rank2(&self) -> &[Flat<D>] {
        &self.rank2
    }

    pub fn rank3(&self) -> &[Flat<D>] {
        &self.rank3
    }

    /// One-dimensional flats: the projective points of the arrangement.
    pub fn rays(&self) -> &[Flat<D>] {
        match D {
            3 => &self.rank2,
            4 => &self.rank3,
            _ => panic!("unsupported ambient dimension {D}"),
        }
    }

    /// Index of the rank-2 flat `H_i ∩ H_j`.
    pub fn line_of(&self, i: usize, j: usize) -> usize {
        assert_ne!(i, j);
        self.pair_line[i * self.n + j] as usize
    }

    /// Indices of the rank-2 flats containing rank-3 flat `vertex`.
    pub fn lines_through(&self, vertex: usize) -> &[usize] {
        &self.vertex_lines[vertex]
    }

    /// Number of rank-3 flats on each rank-2 flat.
    pub fn vertices_per_line(&self) -> Vec<usize> {
        let mut counts = vec![0; self.rank2.len()];
        for lines in &self.vertex_lines {
            for &l in lines {
                counts[l] += 1;
            }
        }
        counts
    }
}

fn members_of<const D: usize>(normals: &[[Scalar; D]], basis: &[[Scalar; D]]) -> Vec<usize> {
    (0..normals.len()).filter(|&k| basis.iter().all(|b| dot(&normals[k], b).is_zero())).collect()
}

fn rank2_flats<const D: usize>(normals: &[[Scalar; D]]) -> (Vec<Flat<D>>, Vec<u32>) {
    let n = normals.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let keys: Vec<Vec<[Scalar; D]>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            Matrix::from_rows(D, &[&normals[i][..], &normals[j][..]])
                .kernel_basis()
                .into_iter()
                .map(to_array)
                .collect()
        })
        .collect();

    let mut index: HashMap<&[[Scalar; D]], usize> = HashMap::new();
    let mut bases: Vec<Vec<[Scalar; D]>> = Vec::new();
    let mut pair_flat = Vec::with_capacity(pairs.len());
    for key in &keys {
        let next = bases.len();
        let id = *index.entry(key.as_slice()).or_insert_with(|| {
            bases.push(key.clone());
            next
        });
        pair_flat.push(id);
    }

    let mut flats: Vec<Flat<D>> = bases
        .into_par_iter()
        .map(|basis| Flat { members: members_of(normals, &basis), basis })
        .collect();
    let order = sort_flats(&mut flats);

    let mut pair_line = vec![u32::MAX; n * n];
    for (&(i, j), &id) in pairs.iter().zip(&pair_flat) {
        let l = order[id] as u32;
        pair_line[i * n + j] = l;
        pair_line[j * n + i] = l;
    }
    (flats, pair_line)
}

/// Sorts flats by member list and returns old index → new index.
fn sort_flats<const D: usize>(flats: &mut Vec<Flat<D>>) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..flats.len()).collect();
    idx.sort_by(|&a, &b| flats[a].members.cmp(&flats[b].members));
    let mut old_to_new = vec![0; flats.len()];
    for (new, &old) in idx.iter().enumerate() {
        old_to_new[old] = new;
    }
    let mut taken: Vec<Option<Flat<D>>> = flats.drain(..).map(Some).collect();
    flats.extend(idx.iter().map(|&old| taken[old].take().expect("each flat moved once")));
    old_to_new
}

fn rank3_flats<const D: usize>(
    normals: &[[Scalar; D]],
    lines: &[Flat<D>],
) -> (Vec<Flat<D>>, Vec<Vec<usize>>) {
    // Each non-member hyperplane cuts a line in one projective point.
    let per_line: Vec<Vec<[Scalar; D]>> = lines
        .par_iter()
        .map(|line| {
            let [d1, d2] = &line.basis[..] else { panic!("rank-2 flat without a 2-vector basis") };
            let mut seen: HashMap<Vec<Scalar>, ()> = HashMap::new();
            let mut points = Vec::new();
            for (k, v) in normals.iter().enumerate() {
                if line.contains_hyperplane(k) {
                    continue;
                }
                let a = dot(v, d1);
                let b = dot(v, d2);
                let ratio = projective_normalize(&[a.clone(), b.clone()]);
                if seen.insert(ratio, ()).is_none() {
                    let p: Vec<Scalar> =
                        d1.iter().zip(d2.iter()).map(|(x, y)| &(&b * x) - &(&a * y)).collect();
                    points.push(to_array(projective_normalize(&p)));
                }
            }
            points
        })
        .collect();

    let mut index: HashMap<&[Scalar; D], usize> = HashMap::new();
    let mut points: Vec<[Scalar; D]> = Vec::new();
    let mut incidence: Vec<Vec<usize>> = Vec::new();
    for (l, pts) in per_line.iter().enumerate() {
        for p in pts {
            let next = points.len();
            let id = *index.entry(p).or_insert_with(|| {
                points.push(p.clone());
                incidence.push(Vec::new());
                next
            });
            incidence[id].push(l);
        }
    }

    let mut flats: Vec<Flat<D>> = points
        .into_par_iter()
        .map(|p| {
            let basis = vec![p];
            Flat { members: members_of(normals, &basis), basis }
        })
        .collect();
    let order = sort_flats(&mut flats);
    let mut vertex_lines = vec![Vec::new(); flats.len()];
    for (old, mut ls) in incidence.into_iter().enumerate() {
        ls.sort_unstable();
        vertex_lines[order[old]] = ls;
    }
    (flats, vertex_lines)
}
