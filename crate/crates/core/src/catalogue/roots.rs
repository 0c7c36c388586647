use std::collections::HashSet;

use crate::algebra::{projective_normalize, Field, Scalar};
use crate::arrangement::Arrangement;

use super::CatalogueError;

/// Root lines beyond this count mean the input generates an infinite group.
pub const CLOSURE_CAP: usize = 10_000;

/// Simple roots of a rank-4 reflection group together with the symmetric
/// bilinear form `G` they are written against.
///
/// The reflection in `α` is `x ↦ x − 2·(xᵀGα)/(αᵀGα)·α`, and the reflecting
/// hyperplane `{x : xᵀGα = 0}` has normal `Gα`. Orthonormal coordinates use
/// `G = I`; simple-root coordinates use the Gram matrix of the group.
#[derive(Clone, Debug)]
pub struct RootSystemSpec {
    pub name: &'static str,
    pub field: Field,
    pub simple_roots: [[Scalar; 4]; 4],
    pub gram: [[Scalar; 4]; 4],
}

fn int_rows(rows: [[i64; 4]; 4]) -> [[Scalar; 4]; 4] {
    rows.map(|r| r.map(Scalar::from_int))
}

fn identity() -> [[Scalar; 4]; 4] {
    int_rows([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
}

impl RootSystemSpec {
    pub fn a4() -> Self {
        Self {
            name: "A4",
            field: Field::Rational,
            simple_roots: identity(),
            gram: int_rows([[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 2]]),
        }
    }

    pub fn b4() -> Self {
        Self {
            name: "B4",
            field: Field::Rational,
            simple_roots: int_rows([[1, -1, 0, 0], [0, 1, -1, 0], [0, 0, 1, -1], [0, 0, 0, 1]]),
            gram: identity(),
        }
    }

    pub fn d4() -> Self {
        Self {
            name: "D4",
            field: Field::Rational,
            simple_roots: int_rows([[1, -1, 0, 0], [0, 1, -1, 0], [0, 0, 1, -1], [0, 0, 1, 1]]),
            gram: identity(),
        }
    }

    pub fn f4() -> Self {
        let half = |x: i64| Scalar::from_ratio(x, 2);
        let mut simple_roots = int_rows([[0, 1, -1, 0], [0, 0, 1, -1], [0, 0, 0, 1], [0, 0, 0, 0]]);
        simple_roots[3] = [half(1), half(-1), half(-1), half(-1)];
        Self { name: "F4", field: Field::Rational, simple_roots, gram: identity() }
    }

    pub fn h4() -> Self {
        let mut gram = int_rows([[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, 0], [0, 0, 0, 2]]);
        gram[2][3] = -Scalar::tau();
        gram[3][2] = -Scalar::tau();
        Self { name: "H4", field: Field::QuadraticTau, simple_roots: identity(), gram }
    }

    pub fn all() -> [Self; 5] {
        [Self::a4(), Self::d4(), Self::b4(), Self::f4(), Self::h4()]
    }

    pub fn by_name(name: &str) -> Option<Self> {
        Self::all().into_iter().find(|s| s.name == name)
    }

    fn form(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (xi, row) in x.iter().zip(&self.gram) {
            if xi.is_zero() {
                continue;
            }
            for (g, yj) in row.iter().zip(y) {
                acc = acc + xi * g * yj;
            }
        }
        acc
    }

    /// `s_α(x)`.
    pub fn reflect(&self, alpha: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        let c = Scalar::from_int(2) * self.form(x, alpha) / self.form(alpha, alpha);
        x.iter().zip(alpha).map(|(xi, ai)| xi - &(&c * ai)).collect()
    }

    /// Normal of the hyperplane orthogonal to `α`, namely `Gα`.
    pub fn normal(&self, alpha: &[Scalar]) -> [Scalar; 4] {
        std::array::from_fn(|i| (0..4).map(|j| &self.gram[i][j] * &alpha[j]).sum())
    }
}

/// Closes the root lines under all reflections found so far and returns the
/// arrangement of reflecting hyperplanes, normals sorted.
pub fn reflection_closure(spec: &RootSystemSpec) -> Result<Arrangement, CatalogueError> {
    let mut roots: Vec<Vec<Scalar>> = Vec::new();
    let mut seen: HashSet<Vec<Scalar>> = HashSet::new();
    let mut add = |r: Vec<Scalar>, roots: &mut Vec<Vec<Scalar>>| -> Result<(), CatalogueError> {
        let key = projective_normalize(&r);
        if seen.insert(key.clone()) {
            roots.push(key);
            if roots.len() > CLOSURE_CAP {
                return Err(CatalogueError::ClosureOverflow { cap: CLOSURE_CAP });
            }
        }
        Ok(())
    };
    for a in &spec.simple_roots {
        add(a.to_vec(), &mut roots)?;
    }
    let mut i = 0;
    while i < roots.len() {
        for j in 0..=i {
            let (r, q) = (roots[i].clone(), roots[j].clone());
            add(spec.reflect(&q, &r), &mut roots)?;
            add(spec.reflect(&r, &q), &mut roots)?;
        }
        i += 1;
    }
    let normals = roots.iter().map(|r| spec.normal(r)).collect();
    Ok(Arrangement::with_field(spec.field, normals)?.sorted())
}
