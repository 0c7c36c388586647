use crate::algebra::{dot, Matrix, Scalar};

use super::{to_array, Arrangement, Rank3Arrangement};

impl Arrangement {
    /// The restriction `A^H`: lines of the arrangement inside hyperplane
    /// `index`, written in the canonical kernel basis of `H`.
    ///
    /// A line `ℓ = H ∩ H_k` has normal `(⟨v_k, b₁⟩, ⟨v_k, b₂⟩, ⟨v_k, b₃⟩)` in
    /// that basis, using its smallest member `k ≠ H`.
    pub fn restriction(&self, index: usize) -> Rank3Arrangement {
        let basis = Matrix::from_rows(4, &[&self.normal(index)[..]]).kernel_basis();
        let normals = self
            .lines()
            .iter()
            .filter(|l| l.contains_hyperplane(index))
            .map(|l| {
                let k = *l.members().iter().find(|&&m| m != index).expect("line weight >= 2");
                to_array(basis.iter().map(|b| dot(self.normal(k), b)).collect())
            })
            .collect();
        Rank3Arrangement::with_field(self.field(), normals)
            .expect("restriction of an essential arrangement is essential")
    }

    /// Parabolic subarrangement at vertex `vertex`: the hyperplanes through
    /// the vertex, as an arrangement in the quotient `K⁴ / ⟨p⟩`.
    ///
    /// The normals lie in `p^⊥`, whose canonical kernel basis has identity
    /// rows on its free columns, so the quotient coordinates of a normal are
    /// its entries on those columns.
    pub fn parabolic(&self, vertex: usize) -> Rank3Arrangement {
        let v = &self.vertices()[vertex];
        let free = Matrix::from_rows(4, &[&v.point()[..]]).free_columns();
        let normals = v
            .members()
            .iter()
            .map(|&k| to_array(free.iter().map(|&c| self.normal(k)[c].clone()).collect::<Vec<Scalar>>()))
            .collect();
        Rank3Arrangement::with_field(self.field(), normals)
            .expect("parabolic subarrangement at a vertex is essential")
    }
}
