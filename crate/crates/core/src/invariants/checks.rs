use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::arrangement::{Arrangement, HVector};

use super::charpoly::ReducedCubic;
use super::data::ArrangementData;
use super::exact::Exact;
use super::surd::{ceil_minus_surd, floor_plus_surd};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = ">=")]
    Ge,
}

impl Relation {
    pub fn admits(self, ord: Ordering) -> bool {
        match self {
            Relation::Le => ord != Ordering::Greater,
            Relation::Lt => ord == Ordering::Less,
            Relation::Eq => ord == Ordering::Equal,
            Relation::Gt => ord == Ordering::Greater,
            Relation::Ge => ord != Ordering::Less,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Lt => "<",
            Relation::Eq => "=",
            Relation::Gt => ">",
            Relation::Ge => ">=",
        }
    }
}

/// One evaluated relation `lhs ⋈ rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub holds: bool,
    pub lhs: Exact,
    pub relation: Relation,
    pub rhs: Exact,
    pub tight: bool,
}

impl CheckResult {
    pub fn compare(name: impl Into<String>, lhs: impl Into<Exact>, relation: Relation, rhs: impl Into<Exact>) -> Self {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        let ord = lhs.cmp_value(&rhs);
        Self { name: name.into(), holds: relation.admits(ord), lhs, relation, rhs, tight: ord == Ordering::Equal }
    }
}

impl CheckResult {
    /// The comparison without the name, e.g. `79 <= 79 ok (tight)`.
    pub fn summary(&self) -> String {
        let mark = if self.holds { "ok" } else { "FAILED" };
        let tight = if self.tight && self.relation != Relation::Eq { " (tight)" } else { "" };
        format!("{} {} {} {mark}{tight}", self.lhs, self.relation.symbol(), self.rhs)
    }
}

impl std::fmt::Display for CheckResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.name, self.summary())
    }
}

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

/// `c = n² + n − 2 − 3h`, the quantity under the cube root in the bounds on `f₃`.
pub fn radicand(n: u64, h: u64) -> BigInt {
    let n = big(n);
    &n * &n + &n - 2 - big(h) * 3
}

/// `(9n + 18)h + 20 + 12n − 2n³ − 3n²`.
fn surd_offset(n: u64, h: u64) -> BigInt {
    let (n, h) = (big(n), big(h));
    (&n * 9 + 18) * h + 20 + &n * 12 - n.pow(3) * 2 - &n * &n * 3
}

/// Relations (1)–(3) together with the discriminant verdict of the reduced cubic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealRootsTest {
    pub r1: CheckResult,
    /// `None` when the radicand is negative (relation (1) then fails).
    pub r2: Option<CheckResult>,
    pub r3: Option<CheckResult>,
    pub negative_radicand: bool,
    #[serde(serialize_with = "ser_bigint")]
    pub discriminant: BigInt,
    pub real_rooted: bool,
    pub verdicts_agree: bool,
}

fn ser_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    Exact::int(v.clone()).serialize(s)
}

impl RealRootsTest {
    pub fn relations_hold(&self) -> bool {
        self.r1.holds && self.r2.as_ref().is_some_and(|c| c.holds) && self.r3.as_ref().is_some_and(|c| c.holds)
    }
}

/// Decides whether all roots of `χ` are real, both through relations
/// (1)–(3) and through the sign of the cubic discriminant.
pub fn real_roots_test(n: u64, h: u64, f3: u64) -> RealRootsTest {
    let r1_rhs: BigInt = (big(n) + 2u32) * (big(n) - 1u32);
    let r1 = CheckResult::compare("relation (1)", h, Relation::Le, r1_rhs.div_floor(&big(3)));
    let c = radicand(n, h);
    let d = big(27);
    let (r2, r3) = if c.is_negative() {
        (None, None)
    } else {
        let a = surd_offset(n, h);
        (
            Some(CheckResult::compare("relation (2)", f3, Relation::Le, floor_plus_surd(&a, &c, &d))),
            Some(CheckResult::compare("relation (3)", f3, Relation::Ge, ceil_minus_surd(&a, &c, &d))),
        )
    };
    let discriminant = ReducedCubic::from_counts(n, h, f3).discriminant();
    let real_rooted = !discriminant.is_negative();
    let mut test = RealRootsTest {
        r1,
        r2,
        r3,
        negative_radicand: c.is_negative(),
        discriminant,
        real_rooted,
        verdicts_agree: false,
    };
    test.verdicts_agree = test.relations_hold() == real_rooted;
    test
}

/// `(n + 2)³ / 27`.
pub fn chamber_upper_bound(n: u64) -> Exact {
    Exact::ratio((big(n) + 2u32).pow(3), 27)
}

pub fn check_cor2i(n: u64, f3: u64) -> CheckResult {
    CheckResult::compare("chamber bound", f3, Relation::Le, chamber_upper_bound(n))
}

/// `Σ (i−1)(i−2)·hᵢ ≥ (n−4)(n−1)/3`.
pub fn check_cor2ii(data: &ArrangementData) -> CheckResult {
    let lhs: u64 = data.h.0.iter().map(|(i, c)| (i as u64 - 1) * (i as u64 - 2) * c).sum();
    let n = data.n as i64;
    CheckResult::compare("higher lines bound", lhs, Relation::Ge, Exact::ratio((n - 4) * (n - 1), 3))
}

/// `f₃ ≤ (1 + (n−1)/3)³`; for arrangements in P³ this bound coincides with
/// [`chamber_upper_bound`].
pub fn check_conjecture4(n: u64, f3: u64) -> CheckResult {
    let base = BigRational::one() + BigRational::new(big(n) - 1, big(3));
    let bound = Exact(base.pow(3));
    debug_assert_eq!(bound, chamber_upper_bound(n));
    CheckResult::compare("chamber conjecture", f3, Relation::Le, bound)
}

/// The simplicial forms of the chamber bounds, phrased through `Σ i·tᵢ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cor3Report {
    /// `f₃ + n = Σ i·tᵢ`.
    pub identity: CheckResult,
    pub upper: Option<CheckResult>,
    pub lower: Option<CheckResult>,
    /// `Σ i·tᵢ ≤ (n+2)³/27 + n`.
    pub cubic: CheckResult,
    /// `Σ_{i=2}^{m−1} (i−1)hᵢ`, which is what the bounds use.
    pub truncated_h: u64,
    pub full_h: u64,
    /// Set when lines of weight `≥ m` exist, so `truncated_h ≠ full_h`.
    pub h_differs: bool,
}

pub fn check_cor3(data: &ArrangementData) -> Cor3Report {
    let n = data.n;
    let m = data.multiplicity();
    let sum_it = data.t.weighted_sum();
    let identity = CheckResult::compare("vertex identity", data.f.chambers() + n, Relation::Eq, sum_it);
    let truncated_h = data.h.h_sum_upto(m.saturating_sub(1));
    let full_h = data.h_sum();
    let c = radicand(n, truncated_h);
    let (upper, lower) = if c.is_negative() {
        (None, None)
    } else {
        let a = surd_offset(n, truncated_h) + big(n) * 27;
        let d = big(27);
        (
            Some(CheckResult::compare("vertex upper bound", sum_it, Relation::Le, floor_plus_surd(&a, &c, &d))),
            Some(CheckResult::compare("vertex lower bound", sum_it, Relation::Ge, ceil_minus_surd(&a, &c, &d))),
        )
    };
    let cubic_rhs = Exact(chamber_upper_bound(n).0 + BigRational::from_integer(big(n)));
    let cubic = CheckResult::compare("vertex cubic bound", sum_it, Relation::Le, cubic_rhs);
    Cor3Report { identity, upper, lower, cubic, truncated_h, full_h, h_differs: truncated_h != full_h }
}

/// Bounds for simply laced arrangements; `None` when some line has weight ≥ 4.
pub fn check_simply_laced_bounds(data: &ArrangementData, simplicial: bool) -> Option<Vec<CheckResult>> {
    if !data.is_simply_laced() {
        return None;
    }
    let n = data.n;
    let (h2, h3) = (data.h.get(2), data.h.get(3));
    let mut out = vec![
        CheckResult::compare("double lines bound", h2, Relation::Le, 2 * n - 2),
        CheckResult::compare(
            "triple lines bound",
            h3,
            Relation::Ge,
            Exact::ratio((n as i64 - 4) * (n as i64 - 1), 6),
        ),
        CheckResult::compare("simply laced upper", data.f.chambers(), Relation::Le, chamber_upper_bound(n)),
    ];
    let c: BigInt = big(2 * n) - 2u32 - big(h2);
    if !c.is_negative() {
        let nn = big(n);
        let a = nn.pow(3) + &nn * 6 + 20 + big(h2) * 3 * (&nn + 2);
        out.push(CheckResult::compare(
            "simply laced lower",
            data.f.chambers(),
            Relation::Ge,
            ceil_minus_surd(&a, &c, &big(27)),
        ));
    }
    if simplicial {
        out.push(CheckResult::compare("simplicial size bound", n, Relation::Le, 119u64));
        if check_grunbaum_shephard(&data.h).holds {
            out.push(CheckResult::compare("size bound with few multiple lines", n, Relation::Le, 15u64));
        }
    }
    Some(out)
}

/// `Σ i·tᵢ ≥ n + Σ_{i=2}^{m−1} i(n−i) / (3(m−i)) · hᵢ`.
pub fn check_cor7(data: &ArrangementData) -> CheckResult {
    let n = data.n as i64;
    let m = data.multiplicity() as i64;
    let mut rhs = BigRational::from_integer(BigInt::from(n));
    for (i, h) in data.h.0.iter() {
        let i = i as i64;
        if i < m {
            rhs += BigRational::new(BigInt::from(i * (n - i)) * h, BigInt::from(3 * (m - i)));
        }
    }
    CheckResult::compare("edges per line bound", data.t.weighted_sum(), Relation::Ge, Exact(rhs))
}

/// `h₂ > Σ_{i≥3} hᵢ`.
pub fn check_grunbaum_shephard(h: &HVector) -> CheckResult {
    let h2 = h.get(2);
    CheckResult::compare("few multiple lines", h2, Relation::Gt, h.line_count() - h2)
}

/// Structural flags the checkers cannot derive from counts alone.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub simplicial: bool,
    pub irreducible: bool,
}

pub fn check_multiplicity_window(data: &ArrangementData, flags: Flags) -> Vec<CheckResult> {
    let m = data.multiplicity() as u64;
    let mut out = Vec::new();
    if flags.simplicial && data.is_simply_laced() {
        out.push(CheckResult::compare("multiplicity upper", m, Relation::Le, 7u64));
    }
    if flags.simplicial && flags.irreducible {
        out.push(CheckResult::compare("multiplicity lower", m, Relation::Ge, 6u64));
    }
    out
}

/// `Σ C(i,2)·hᵢ = C(n,2)`.
pub fn check_pair_identity(data: &ArrangementData) -> CheckResult {
    CheckResult::compare("pair identity", data.h.pair_count(), Relation::Eq, data.n * (data.n - 1) / 2)
}

pub fn check_euler(data: &ArrangementData) -> CheckResult {
    CheckResult::compare("euler characteristic", data.f.euler_characteristic(), Relation::Eq, 0i64)
}

/// `f₂ = 2f₃`, the counting form of simpliciality.
pub fn check_face_count(data: &ArrangementData) -> CheckResult {
    CheckResult::compare("faces twice chambers", data.f.faces(), Relation::Eq, 2 * data.f.chambers())
}

/// `h = Σ_H |A^H| − g₁`; needs the restrictions, so only for arrangements
/// with normal vectors.
pub fn check_restriction_sum(a: &Arrangement) -> CheckResult {
    let h = a.h_vector();
    // |A^H| is the number of lines inside H
    let per_hyperplane: u64 = a.lines().iter().map(|l| l.weight() as u64).sum();
    debug_assert!(
        a.len() > 16 || per_hyperplane == (0..a.len()).map(|i| a.restriction(i).len() as u64).sum::<u64>()
    );
    CheckResult::compare("restriction sum", h.h_sum(), Relation::Eq, per_hyperplane - h.line_count())
}

/// Every checker that works from counts alone, evaluated together.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckSuite {
    pub real_roots: RealRootsTest,
    pub pair_identity: CheckResult,
    pub euler: CheckResult,
    pub face_count: CheckResult,
    pub cor2i: CheckResult,
    pub cor2ii: CheckResult,
    pub conjecture4: CheckResult,
    pub cor3: Cor3Report,
    pub cor7: Option<CheckResult>,
    pub gs: CheckResult,
    pub multiplicity: Vec<CheckResult>,
    pub simply_laced: Option<Vec<CheckResult>>,
}

impl CheckSuite {
    pub fn evaluate(data: &ArrangementData, flags: Flags) -> Self {
        let f3 = data.f.chambers();
        Self {
            real_roots: real_roots_test(data.n, data.h_sum(), f3),
            pair_identity: check_pair_identity(data),
            euler: check_euler(data),
            face_count: check_face_count(data),
            cor2i: check_cor2i(data.n, f3),
            cor2ii: check_cor2ii(data),
            conjecture4: check_conjecture4(data.n, f3),
            cor3: check_cor3(data),
            cor7: flags.simplicial.then(|| check_cor7(data)),
            gs: check_grunbaum_shephard(&data.h),
            multiplicity: check_multiplicity_window(data, flags),
            simply_laced: check_simply_laced_bounds(data, flags.simplicial),
        }
    }

    /// All individual results in a fixed order.
    pub fn results(&self) -> Vec<&CheckResult> {
        let rr = &self.real_roots;
        let mut out = vec![&rr.r1];
        out.extend(rr.r2.iter().chain(rr.r3.iter()));
        out.extend([&self.pair_identity, &self.euler, &self.face_count, &self.cor2i, &self.cor2ii, &self.conjecture4]);
        out.push(&self.cor3.identity);
        out.extend(self.cor3.upper.iter().chain(self.cor3.lower.iter()));
        out.push(&self.cor3.cubic);
        out.extend(self.cor7.iter());
        out.push(&self.gs);
        out.extend(self.multiplicity.iter());
        out.extend(self.simply_laced.iter().flatten());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::TVector;
    use crate::invariants::FVector;

    fn data(n: u64, h: &[u64], t: &[u64], f: [u64; 4]) -> ArrangementData {
        ArrangementData::new(n, HVector::from_positional(h), TVector::from_positional(t), FVector(f))
    }

    fn a4() -> ArrangementData {
        data(10, &[15, 10], &[0, 10, 0, 5], [15, 75, 120, 60])
    }

    fn boolean() -> ArrangementData {
        data(4, &[6], &[4], [4, 12, 16, 8])
    }

    #[test]
    fn tight_relations_for_fifteen() {
        let t = real_roots_test(15, 79, 180);
        assert!(t.r1.holds && t.r1.tight);
        let (r2, r3) = (t.r2.unwrap(), t.r3.unwrap());
        assert_eq!(r2.rhs, Exact::int(180));
        assert_eq!(r3.rhs, Exact::int(180));
        assert!(t.real_rooted && t.verdicts_agree);
    }

    #[test]
    fn negative_radicand_is_not_real_rooted() {
        // h too large for n = 4
        let t = real_roots_test(4, 7, 8);
        assert!(t.negative_radicand);
        assert!(!t.r1.holds);
        assert!(!t.real_rooted);
        assert!(t.verdicts_agree);
    }

    #[test]
    fn chamber_bounds() {
        assert!(check_cor2i(10, 60).holds);
        assert_eq!(chamber_upper_bound(15), Exact::ratio(4913, 27));
        assert!(check_cor2i(4, 8).tight);
        assert!(check_conjecture4(60, 7200).holds);
        assert_eq!(check_conjecture4(10, 60).rhs, chamber_upper_bound(10));
    }

    #[test]
    fn higher_lines_bound() {
        let c = check_cor2ii(&a4());
        assert_eq!((c.lhs, c.rhs), (Exact::int(20), Exact::int(18)));
        let h4 = data(60, &[450, 200, 0, 72], &[0; 13], [0; 4]);
        // 2·200 + 12·72
        assert_eq!(check_cor2ii(&h4).lhs, Exact::int(1264));
        assert!(check_cor2ii(&boolean()).tight);
    }

    #[test]
    fn vertex_identity() {
        assert!(check_cor3(&a4()).identity.holds);
        let r28 = data(28, &[90, 76, 0, 6], &[0, 100, 0, 58, 15, 0, 0, 12, 0, 0, 0, 0, 1], [186, 1146, 1920, 960]);
        let c = check_cor3(&r28);
        assert_eq!(c.identity.rhs, Exact::int(988));
        assert!(!c.h_differs);
        assert!(check_cor3(&boolean()).identity.holds);
    }

    #[test]
    fn simply_laced_suite() {
        let d4 = data(12, &[18, 16], &[12, 0, 0, 12], [24, 120, 192, 96]);
        let checks = check_simply_laced_bounds(&d4, true).unwrap();
        assert!(checks.iter().all(|c| c.holds), "{checks:?}");
        assert_eq!(checks.len(), 6);
        let fifteen = data(15, &[27, 26], &[0, 24, 0, 6, 9], [39, 219, 360, 180]);
        let checks = check_simply_laced_bounds(&fifteen, true).unwrap();
        assert!(checks.last().unwrap().tight);
        let b4 = data(16, &[36, 16, 6], &[], [0; 4]);
        assert!(check_simply_laced_bounds(&b4, true).is_none());
    }

    #[test]
    fn edges_per_line() {
        let c = check_cor7(&a4());
        assert_eq!(c.rhs, Exact::ratio(160, 3));
        assert!(c.holds);
        let d4 = data(12, &[18, 16], &[12, 0, 0, 12], [24, 120, 192, 96]);
        assert_eq!(check_cor7(&d4).rhs, Exact::int(90));
        assert!(check_cor7(&boolean()).tight);
    }

    #[test]
    fn few_multiple_lines() {
        assert!(check_grunbaum_shephard(&HVector::from_positional(&[450, 200, 0, 72])).holds);
        assert!(!check_grunbaum_shephard(&HVector::from_positional(&[5, 5])).holds);
    }

    #[test]
    fn multiplicity_window() {
        let flags = Flags { simplicial: true, irreducible: true };
        let w = check_multiplicity_window(&a4(), flags);
        assert_eq!(w.len(), 2);
        assert!(w.iter().all(|c| c.holds));
        let thirteen = data(13, &[21, 19], &[6, 10, 0, 9, 3], [28, 148, 240, 120]);
        assert!(check_multiplicity_window(&thirteen, flags).iter().all(|c| c.holds));
    }

    #[test]
    fn whole_suite_on_boolean() {
        let s = CheckSuite::evaluate(&boolean(), Flags { simplicial: true, irreducible: false });
        assert!(s.results().iter().all(|c| c.holds), "{:#?}", s.results());
        assert_eq!(s.multiplicity.len(), 1);
    }
}
