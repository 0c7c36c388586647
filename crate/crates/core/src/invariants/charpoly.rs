use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arrangement::{Arrangement, CentralArrangement, Rank3Arrangement};

use super::data::FVector;

/// Monic integer polynomial, coefficients in descending degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `(t − r₁)(t − r₂)…`
    pub fn from_roots(roots: &[i64]) -> Self {
        let mut coeffs = vec![BigInt::one()];
        for &r in roots {
            let mut next = coeffs.clone();
            next.push(BigInt::zero());
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] -= c * r;
            }
            coeffs = next;
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// Synthetic division by `t − r`; returns quotient and remainder.
    pub fn divide_linear(&self, r: &BigInt) -> (CharPoly, BigInt) {
        let mut q = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        let mut acc = BigInt::zero();
        for c in &self.coeffs {
            acc = acc * r + c;
            q.push(acc.clone());
        }
        let rem = q.pop().unwrap_or_default();
        (CharPoly::new(q), rem)
    }

    /// Integer roots with multiplicity, found by trial over divisors of the
    /// constant term, plus the cofactor with no integer roots left.
    pub fn integer_factorization(&self) -> Factorization {
        let mut rest = self.clone();
        let mut roots: Vec<(BigInt, usize)> = Vec::new();
        loop {
            if rest.degree() == 0 {
                break;
            }
            let constant = rest.coeffs.last().cloned().unwrap_or_default();
            let candidate = if constant.is_zero() {
                Some(BigInt::zero())
            } else {
                divisor_candidates(&constant.abs()).into_iter().find(|d| rest.eval(d).is_zero())
            };
            let Some(root) = candidate else { break };
            rest = rest.divide_linear(&root).0;
            match roots.iter_mut().find(|(r, _)| *r == root) {
                Some((_, m)) => *m += 1,
                None => roots.push((root, 1)),
            }
        }
        roots.sort();
        Factorization { roots, cofactor: rest }
    }
}

fn divisor_candidates(c: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let limit = c.sqrt();
    let mut d = BigInt::one();
    while d <= limit {
        if c.is_multiple_of(&d) {
            let e = c / &d;
            out.extend([d.clone(), -d.clone(), e.clone(), -e]);
        }
        d += 1;
    }
    out.sort_by(|a, b| a.abs().cmp(&b.abs()).then(b.cmp(a)));
    out.dedup();
    out
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let deg = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = deg - i;
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let coef = if mag.is_one() && p > 0 { String::new() } else { mag.to_string() };
            let var = match p {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{p}"),
            };
            let sep = if first { "" } else { " " };
            let space = if first { "" } else { " " };
            write!(f, "{sep}{sign}{space}{coef}{var}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub roots: Vec<(BigInt, usize)>,
    pub cofactor: CharPoly,
}

impl Factorization {
    pub fn splits_over_integers(&self) -> bool {
        self.cofactor.degree() == 0
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, m) in &self.roots {
            let lin = if r.is_zero() {
                "t".to_string()
            } else if r.is_negative() {
                format!("(t+{})", r.abs())
            } else {
                format!("(t-{r})")
            };
            if *m > 1 {
                write!(f, "{lin}^{m}")?;
            } else {
                write!(f, "{lin}")?;
            }
        }
        if self.cofactor.degree() > 0 {
            write!(f, "({})", self.cofactor)?;
        }
        Ok(())
    }
}

/// `χ(A, t) / (t − 1) = t³ + p·t² + q·t + r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedCubic {
    pub p: BigInt,
    pub q: BigInt,
    pub r: BigInt,
}

impl ReducedCubic {
    /// `p = 1 − n`, `q = h + 1 − n`, `r = h + 1 − f₃`.
    pub fn from_counts(n: u64, h: u64, f3: u64) -> Self {
        let (n, h, f3) = (BigInt::from(n), BigInt::from(h), BigInt::from(f3));
        Self { p: BigInt::one() - &n, q: &h + 1 - &n, r: h + 1 - f3 }
    }

    /// `Δ = 18pqr − 4p³r + p²q² − 4q³ − 27r²`.
    pub fn discriminant(&self) -> BigInt {
        let (p, q, r) = (&self.p, &self.q, &self.r);
        BigInt::from(18) * p * q * r - BigInt::from(4) * p.pow(3) * r + p * p * q * q
            - BigInt::from(4) * q.pow(3)
            - BigInt::from(27) * r * r
    }

    pub fn to_poly(&self) -> CharPoly {
        CharPoly::new(vec![BigInt::one(), self.p.clone(), self.q.clone(), self.r.clone()])
    }

    /// `(t − 1)·(t³ + p·t² + q·t + r)`.
    pub fn times_t_minus_one(&self) -> CharPoly {
        let c = [BigInt::one(), self.p.clone(), self.q.clone(), self.r.clone()];
        CharPoly::new(vec![
            c[0].clone(),
            &c[1] - &c[0],
            &c[2] - &c[1],
            &c[3] - &c[2],
            -&c[3],
        ])
    }
}

/// χ from the closed form in `n`, `h = Σ(i−1)hᵢ` and the chamber count `f₃`.
pub fn char_poly_formula(n: u64, h: u64, f3: u64) -> CharPoly {
    ReducedCubic::from_counts(n, h, f3).times_t_minus_one()
}

/// χ by the Möbius recursion `μ(V, X) = −Σ_{V ≤ Y < X} μ(V, Y)` over the
/// full intersection lattice.
pub fn char_poly_moebius<const D: usize>(a: &CentralArrangement<D>) -> CharPoly {
    assert!(D == 3 || D == 4, "Möbius route implemented for K³ and K⁴");
    let lat = a.lattice();
    let mu_top = BigInt::one();
    // each hyperplane only lies below the ambient space
    let mu_hyperplane = -&mu_top;
    let mu_rank2: Vec<BigInt> = lat
        .rank2()
        .iter()
        .map(|l| -(&mu_top + &mu_hyperplane * BigInt::from(l.weight())))
        .collect();
    let mu_rank3: Vec<BigInt> = lat
        .rank3()
        .iter()
        .enumerate()
        .map(|(vi, v)| {
            let through: BigInt = lat.lines_through(vi).iter().map(|&l| &mu_rank2[l]).sum();
            -(&mu_top + &mu_hyperplane * BigInt::from(v.weight()) + through)
        })
        .collect();

    let n = BigInt::from(a.len());
    let sum2: BigInt = mu_rank2.iter().sum();
    let sum3: BigInt = mu_rank3.iter().sum();
    let total = &mu_top + &mu_hyperplane * &n + &sum2 + &sum3;
    let mu_origin = -total;

    let mut coeffs = vec![mu_top, mu_hyperplane * n, sum2];
    if D == 4 {
        coeffs.push(sum3);
    }
    coeffs.push(mu_origin);
    CharPoly::new(coeffs)
}

/// Number of projective chambers, `|χ(−1)| / 2` by Zaslavsky's theorem.
pub fn projective_chamber_count<const D: usize>(a: &CentralArrangement<D>) -> u64 {
    let v = char_poly_moebius(a).eval(&BigInt::from(-1)).abs();
    (v / 2u32).to_u64().expect("chamber count fits in u64")
}

/// f-vector of an arrangement in P³.
///
/// `f₀` counts vertices; a projective line carrying `k` vertices is cut into
/// `k` edges; `f₂` sums the chamber counts of all restrictions; `f₃ = χ(−1)/2`.
pub fn f_vector(a: &Arrangement) -> FVector {
    let lat = a.lattice();
    let f0 = lat.rank3().len() as u64;
    let f1 = lat.vertices_per_line().iter().map(|&k| k as u64).sum();
    let f2 = (0..a.len()).into_par_iter().map(|h| restriction_chambers(&a.restriction(h))).sum();
    let f3 = projective_chamber_count(a);
    FVector([f0, f1, f2, f3])
}

fn restriction_chambers(r: &Rank3Arrangement) -> u64 {
    projective_chamber_count(r)
}
