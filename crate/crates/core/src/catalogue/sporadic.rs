use crate::algebra::{Field, Scalar};
use crate::arrangement::Arrangement;

/// Normals `(a₀ + b₀τ, …, a₃ + b₃τ)` as `[(a₀, b₀), …]`.
const VECTORS: [[(i64, i64); 4]; 28] = [
    [(1, 0), (0, 0), (0, 0), (0, 0)],
    [(0, 0), (1, 0), (0, 0), (0, 0)],
    [(0, 0), (1, 0), (1, 0), (0, 0)],
    [(0, 0), (0, 0), (1, 0), (0, 0)],
    [(0, 0), (1, 0), (1, 0), (1, 0)],
    [(0, 0), (0, 0), (1, 0), (1, 0)],
    [(0, 0), (0, 0), (0, 0), (1, 0)],
    [(1, 0), (1, 0), (0, 0), (0, 0)],
    [(1, 0), (1, 0), (1, 0), (1, 0)],
    [(1, 0), (0, 1), (0, 0), (0, 0)],
    [(0, 1), (1, 0), (0, 0), (0, 0)],
    [(1, 0), (0, 1), (0, 1), (0, 1)],
    [(0, 1), (1, 0), (1, 0), (0, 0)],
    [(0, 1), (1, 1), (1, 0), (0, 0)],
    [(0, 1), (1, 0), (1, 0), (1, 0)],
    [(0, 1), (1, 1), (0, 1), (0, 1)],
    [(1, 1), (1, 1), (1, 0), (0, 0)],
    [(0, 1), (1, 1), (1, 0), (1, 0)],
    [(1, 1), (1, 1), (0, 1), (0, 1)],
    [(0, 1), (1, 1), (1, 1), (0, 1)],
    [(1, 1), (1, 1), (1, 0), (1, 0)],
    [(1, 1), (0, 2), (0, 1), (0, 1)],
    [(1, 1), (0, 2), (0, 1), (1, 0)],
    [(0, 1), (0, 1), (0, 1), (1, 0)],
    [(0, 1), (1, 1), (0, 1), (1, 0)],
    [(1, 1), (1, 1), (0, 1), (1, 0)],
    [(0, 1), (2, 0), (3, -1), (1, 0)],
    [(2, 3), (2, 4), (1, 3), (1, 1)],
];

fn normals(count: usize) -> Vec<[Scalar; 4]> {
    VECTORS[..count].iter().map(|v| v.map(|(a, b)| Scalar::quad(a, b))).collect()
}

/// The 28 listed normals, in listing order.
pub fn arrangement_28() -> Arrangement {
    Arrangement::with_field(Field::QuadraticTau, normals(28)).expect("listed normals form an arrangement")
}

/// The first 27 listed normals.
pub fn arrangement_27() -> Arrangement {
    Arrangement::with_field(Field::QuadraticTau, normals(27)).expect("listed normals form an arrangement")
}
