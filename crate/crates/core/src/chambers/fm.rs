//! Strict feasibility of small linear systems by Fourier–Motzkin elimination.

use std::collections::BTreeMap;

use crate::algebra::Scalar;

/// `coeffs · y + constant > 0`.
#[derive(Clone, Debug)]
struct Strict {
    coeffs: Vec<Scalar>,
    constant: Scalar,
}

/// A point `x` with `row · x > 0` for every row, or `None` if there is none.
///
/// By homogeneity a solution can be rescaled so its last coordinate is `1`,
/// `−1` or `0`; the first two cases are affine systems in one variable fewer,
/// the last is a homogeneous one.
pub fn strict_homogeneous(rows: &[Vec<Scalar>]) -> Option<Vec<Scalar>> {
    let Some(k) = rows.first().map(Vec::len) else {
        return Some(Vec::new());
    };
    if k == 0 {
        return None;
    }
    for last in [Scalar::one(), -Scalar::one()] {
        let system: Vec<Strict> = rows
            .iter()
            .map(|r| Strict { coeffs: r[..k - 1].to_vec(), constant: &r[k - 1] * &last })
            .collect();
        if let Some(mut y) = strict_affine(system, k - 1) {
            y.push(last);
            return Some(y);
        }
    }
    let reduced: Vec<Vec<Scalar>> = rows.iter().map(|r| r[..k - 1].to_vec()).collect();
    strict_homogeneous(&reduced).map(|mut y| {
        y.push(Scalar::zero());
        y
    })
}

/// Scales each constraint so its first nonzero coefficient is `±1`, drops
/// constraints without variables (failing if one is violated) and keeps only
/// the tightest constant per coefficient vector.
fn prune(system: Vec<Strict>) -> Option<Vec<Strict>> {
    let mut tightest: BTreeMap<Vec<Scalar>, Scalar> = BTreeMap::new();
    for s in system {
        let Some(lead) = s.coeffs.iter().find(|c| !c.is_zero()) else {
            if !s.constant.is_positive() {
                return None;
            }
            continue;
        };
        let scale = lead.abs().inv();
        let coeffs: Vec<Scalar> = s.coeffs.iter().map(|c| c * &scale).collect();
        let constant = &s.constant * &scale;
        tightest
            .entry(coeffs)
            .and_modify(|c| {
                if constant < *c {
                    *c = constant.clone();
                }
            })
            .or_insert(constant);
    }
    Some(tightest.into_iter().map(|(coeffs, constant)| Strict { coeffs, constant }).collect())
}

fn eval(s: &Strict, y: &[Scalar]) -> Scalar {
    s.coeffs.iter().zip(y).map(|(c, v)| c * v).sum::<Scalar>() + &s.constant
}

fn strict_affine(system: Vec<Strict>, vars: usize) -> Option<Vec<Scalar>> {
    let system = prune(system)?;
    if vars == 0 {
        return Some(Vec::new());
    }
    let j = vars - 1;
    let mut lower = Vec::new(); // y_j > −rest / coef
    let mut upper = Vec::new(); // y_j < rest / |coef|
    let mut next = Vec::new();
    for s in system {
        let c = s.coeffs[j].clone();
        let rest = Strict { coeffs: s.coeffs[..j].to_vec(), constant: s.constant };
        match c.signum() {
            0 => next.push(rest),
            1 => lower.push(scaled(&rest, &c.inv())),
            _ => upper.push(scaled(&rest, &(-c).inv())),
        }
    }
    for l in &lower {
        for u in &upper {
            next.push(Strict {
                coeffs: l.coeffs.iter().zip(&u.coeffs).map(|(a, b)| a + b).collect(),
                constant: &l.constant + &u.constant,
            });
        }
    }
    let mut y = strict_affine(next, j)?;
    // after scaling: y_j + L(y) > 0 and −y_j + U(y) > 0
    let lo = lower.iter().map(|l| -eval(l, &y)).max();
    let hi = upper.iter().map(|u| eval(u, &y)).min();
    let value = match (lo, hi) {
        (Some(lo), Some(hi)) => (lo + hi) / Scalar::from_int(2),
        (Some(lo), None) => lo + Scalar::one(),
        (None, Some(hi)) => hi - Scalar::one(),
        (None, None) => Scalar::zero(),
    };
    y.push(value);
    Some(y)
}

fn scaled(s: &Strict, by: &Scalar) -> Strict {
    Strict { coeffs: s.coeffs.iter().map(|c| c * by).collect(), constant: &s.constant * by }
}
