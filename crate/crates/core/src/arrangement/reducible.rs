use crate::algebra::{Matrix, Scalar};

use super::CentralArrangement;

impl<const D: usize> CentralArrangement<D> {
    /// Finest splitting of the hyperplanes such that the normal spans of the
    /// blocks form a direct sum decomposition of K^D.
    ///
    /// These are the connected components of the linear matroid of the
    /// normals: fix a greedy basis, join every other normal to the basis
    /// elements in its fundamental circuit, and take connected components.
    /// Blocks are sorted by smallest member.
    pub fn irreducible_components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut basis: Vec<usize> = Vec::with_capacity(D);
        for i in 0..n {
            let mut rows: Vec<&[Scalar]> = basis.iter().map(|&b| &self.normal(b)[..]).collect();
            rows.push(&self.normal(i)[..]);
            if Matrix::from_rows(D, &rows).rank() == rows.len() {
                basis.push(i);
            }
            if basis.len() == D {
                break;
            }
        }

        // columns of `cols` are the basis normals; invert to get coordinates
        let cols = Matrix::from_rows(D, &basis.iter().map(|&b| &self.normal(b)[..]).collect::<Vec<_>>())
            .transpose();
        let inverse = invert(&cols);

        let mut parent: Vec<usize> = (0..n).collect();
        for i in 0..n {
            if basis.contains(&i) {
                continue;
            }
            let coords = inverse.mul_vec(&self.normal(i)[..]);
            for (slot, c) in coords.iter().enumerate() {
                if !c.is_zero() {
                    union(&mut parent, i, basis[slot]);
                }
            }
        }

        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut root_block: Vec<Option<usize>> = vec![None; n];
        for i in 0..n {
            let r = find(&mut parent, i);
            match root_block[r] {
                Some(b) => blocks[b].push(i),
                None => {
                    root_block[r] = Some(blocks.len());
                    blocks.push(vec![i]);
                }
            }
        }
        blocks
    }

    /// A two-block partition witnessing reducibility (first component versus
    /// the rest), or `None` when the arrangement is irreducible.
    pub fn is_reducible(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let blocks = self.irreducible_components();
        if blocks.len() < 2 {
            return None;
        }
        let first = blocks[0].clone();
        let mut rest: Vec<usize> = blocks[1..].iter().flatten().copied().collect();
        rest.sort_unstable();
        Some((first, rest))
    }
}

fn invert(m: &Matrix) -> Matrix {
    let d = m.rows();
    let mut aug = Matrix::zeros(d, 2 * d);
    for i in 0..d {
        for j in 0..d {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, d + i)] = Scalar::one();
    }
    let (r, pivots) = aug.rref();
    assert_eq!(&pivots[..], &(0..d).collect::<Vec<_>>()[..], "singular basis matrix");
    let mut inv = Matrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            inv[(i, j)] = r[(i, d + j)].clone();
        }
    }
    inv
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}
