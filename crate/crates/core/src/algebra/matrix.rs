use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::{Field, Rational, Scalar};

/// Dense matrix over ℚ or ℚ(τ), row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// Builds a matrix from row slices; `cols` is needed for the 0-row case.
    pub fn from_rows<R: AsRef<[Scalar]>>(cols: usize, rows: &[R]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "row length mismatch");
            entries.extend_from_slice(r);
        }
        Self { rows: rows.len(), cols, entries }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<Scalar>> =
            rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect();
        Self::from_rows(cols, &rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn field(&self) -> Field {
        self.entries.iter().map(Scalar::field).fold(Field::Rational, Field::join)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| super::dot(self.row(i), v)).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form and its pivot columns.
    ///
    /// Pivots are chosen as the first nonzero entry found scanning down the
    /// current column, so the result is deterministic. The nonzero rows of
    /// the reduced form depend only on the row space.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    let v = &m[(i, j)] - &(&f * &m[(r, j)]);
                    m[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of the right kernel.
    ///
    /// One vector per free column `f` of the reduced form: coordinate `f` is
    /// one, the other free coordinates are zero, and pivot coordinates are
    /// read off by back-substitution. Any kernel vector `x` equals
    /// `Σ x[f] · basis_f`.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -&r[(row, f)];
                }
                v
            })
            .collect()
    }

    /// Free (non-pivot) columns of the reduced form.
    pub fn free_columns(&self) -> Vec<usize> {
        let (_, pivots) = self.rref();
        (0..self.cols).filter(|c| !pivots.contains(c)).collect()
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub fn rank_of<R: AsRef<[Scalar]>>(cols: usize, rows: &[R]) -> usize {
    Matrix::from_rows(cols, rows).rank()
}

/// Scales `v` so its first nonzero coordinate is one.
pub fn projective_normalize(v: &[Scalar]) -> Vec<Scalar> {
    match v.iter().find(|x| !x.is_zero()) {
        None => v.to_vec(),
        Some(lead) => {
            let inv = lead.inv();
            v.iter().map(|x| x * &inv).collect()
        }
    }
}

/// Primitive integer representative of a rational direction with a positive
/// leading coordinate.
///
/// Panics if some coordinate is not rational.
pub fn primitive_integer(v: &[Scalar]) -> Vec<Scalar> {
    let rats: Vec<&Rational> =
        v.iter().map(|x| x.as_rational().expect("rational coordinate")).collect();
    let lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rats.iter().map(|r| (*r * &lcm).to_integer()).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if gcd.is_zero() {
        return v.to_vec();
    }
    let lead_negative = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    ints.into_iter()
        .map(|x| {
            let q = x / &gcd;
            Scalar::Rational(Rational::from_integer(if lead_negative { -q } else { q }))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(4).rank(), 4);
        let m = Matrix::from_int_rows(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[1, 1, 0, 0]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(Matrix::zeros(0, 4).rank(), 0);
    }

    #[test]
    fn kernel_of_two_unit_rows() {
        let m = Matrix::from_int_rows(&[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let k = m.kernel_basis();
        assert_eq!(k, vec![vec![s(0), s(0), s(1), s(0)], vec![s(0), s(0), s(0), s(1)]]);
    }

    #[test]
    fn kernel_of_full_rank_is_empty() {
        assert!(Matrix::identity(4).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_single_row() {
        let m = Matrix::from_int_rows(&[&[1, 1, 0, 0]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 3);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn kernel_of_empty_matrix_is_standard_basis() {
        let k = Matrix::zeros(0, 4).kernel_basis();
        assert_eq!(k.len(), 4);
        assert_eq!(k[2], vec![s(0), s(0), s(1), s(0)]);
    }

    #[test]
    fn primitive_integer_clears_denominators() {
        let v = vec![Scalar::from_ratio(-1, 2), Scalar::from_ratio(1, 3), s(0), s(1)];
        assert_eq!(primitive_integer(&v), vec![s(3), s(-2), s(0), s(-6)]);
    }

    #[test]
    fn quad_rref_normalizes_pivots() {
        let m = Matrix::from_rows(2, &[vec![Scalar::tau(), Scalar::one()], vec![Scalar::one(), Scalar::quad(-1, 1)]]);
        // second row is first row times τ⁻¹ = τ - 1
        assert_eq!(m.rank(), 1);
    }
}
