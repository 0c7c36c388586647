use rayon::prelude::*;
use serde::Serialize;

use crate::invariants::{CheckResult, CheckSuite, Flags};
use crate::report::{analyze, ChamberPolicy};

use super::{builtin, entries, entry, CatalogueEntry, CatalogueError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowCheck {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl RowCheck {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        let status = if pass { Status::Pass } else { Status::Fail };
        Self { name: name.into(), status, detail: detail.into() }
    }

    fn skip(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Self { name: name.into(), status: Status::Skip, detail: reason.into() }
    }

    fn from_result(r: &CheckResult) -> Self {
        Self::new(r.name.clone(), r.holds, r.summary())
    }

    fn equal<T: PartialEq + std::fmt::Display>(name: &str, computed: &T, table: &T) -> Self {
        Self::new(name, computed == table, format!("computed {computed}, table {table}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowReport {
    pub label: &'static str,
    pub n: u64,
    pub has_vectors: bool,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub checks: Vec<RowCheck>,
}

impl RowReport {
    fn new(e: &CatalogueEntry, checks: Vec<RowCheck>) -> Self {
        let count = |s| checks.iter().filter(|c| c.status == s).count();
        Self {
            label: e.label,
            n: e.n,
            has_vectors: e.has_vectors,
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            skipped: count(Status::Skip),
            checks,
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogueVerification {
    pub rows: usize,
    pub failed_rows: usize,
    pub reports: Vec<RowReport>,
}

impl CatalogueVerification {
    pub fn ok(&self) -> bool {
        self.failed_rows == 0
    }
}

/// Checks that only need the counts in the row. Every row is an
/// irreducible simplicial arrangement, which the flags record.
fn data_checks(e: &CatalogueEntry) -> Vec<RowCheck> {
    let data = e.data();
    let suite = CheckSuite::evaluate(&data, Flags { simplicial: true, irreducible: true });
    let rr = &suite.real_roots;
    let mut out = vec![RowCheck::from_result(&rr.r1)];
    for (name, r) in [("relation (2)", &rr.r2), ("relation (3)", &rr.r3)] {
        out.push(match r {
            Some(r) => RowCheck::from_result(r),
            None => RowCheck::new(name, false, "negative radicand"),
        });
    }
    out.push(RowCheck::new("discriminant", rr.real_rooted, format!("Δ = {}", crate::invariants::Exact::from(rr.discriminant.clone()))));
    out.push(RowCheck::new("discriminant agrees", rr.verdicts_agree, "Δ ≥ 0 exactly when relations (1)-(3) hold"));
    for r in [&suite.pair_identity, &suite.euler, &suite.face_count, &suite.cor2i, &suite.cor2ii, &suite.conjecture4] {
        out.push(RowCheck::from_result(r));
    }
    out.push(RowCheck::from_result(&suite.cor3.identity));
    let note = if suite.cor3.h_differs {
        format!(" [truncated h = {}, full h = {}]", suite.cor3.truncated_h, suite.cor3.full_h)
    } else {
        String::new()
    };
    for (name, r) in [("vertex upper bound", &suite.cor3.upper), ("vertex lower bound", &suite.cor3.lower)] {
        out.push(match r {
            Some(r) => RowCheck::new(name, r.holds, format!("{}{note}", r.summary())),
            None => RowCheck::new(name, false, format!("negative radicand{note}")),
        });
    }
    out.push(RowCheck::from_result(&suite.cor3.cubic));
    out.extend(suite.cor7.iter().map(RowCheck::from_result));
    out.push(RowCheck::from_result(&suite.gs));
    out.extend(suite.multiplicity.iter().map(RowCheck::from_result));
    match &suite.simply_laced {
        Some(rs) => out.extend(rs.iter().map(RowCheck::from_result)),
        None => {
            out.push(RowCheck::skip("multiplicity upper", "not simply laced"));
            out.push(RowCheck::skip("simply laced bounds", "not simply laced"));
        }
    }
    out
}

fn geometry_checks(e: &CatalogueEntry, policy: ChamberPolicy) -> Vec<RowCheck> {
    let a = match builtin(e.label) {
        Ok(a) => a,
        Err(err) => return vec![RowCheck::new("build", false, err.to_string())],
    };
    let r = match analyze(&a, policy, None) {
        Ok(r) => r,
        Err(err) => return vec![RowCheck::new("chambers", false, err.to_string())],
    };
    let mut out = vec![
        RowCheck::equal("n", &r.n, &e.n),
        RowCheck::equal("h-vector", &r.h_vector, &e.h),
        RowCheck::equal("t-vector", &r.t_vector, &e.t),
        RowCheck::equal("f-vector", &r.f_vector, &e.f),
        RowCheck::new(
            "characteristic polynomial routes",
            r.identities.char_poly_routes_agree,
            format!("χ = {}", r.char_poly_factored),
        ),
        RowCheck::from_result(&r.identities.restriction_sum),
        RowCheck::new("simplicial", r.simplicial, format!("decided by {}", r.simplicial_source)),
        RowCheck::new("irreducible", r.irreducible, format!("{} direct summand(s)", r.components.len())),
    ];
    match &r.chambers {
        Some(c) => {
            out.push(RowCheck::new("chamber count", c.count as u64 == e.f.chambers(), format!("{} chambers", c.count)));
            out.push(RowCheck::new("four walls", c.simplicial, format!("wall counts {:?}", c.wall_counts)));
            out.push(RowCheck::new(
                "diagram lacing",
                c.simply_laced == e.h.is_simply_laced(),
                format!("diagrams simply laced = {}, h-vector = {}", c.simply_laced, e.h.is_simply_laced()),
            ));
            out.push(RowCheck::new(
                "diagram connectivity",
                c.irreducible == r.irreducible,
                format!("types {:?}", c.diagram_types),
            ));
        }
        None => out.push(RowCheck::skip("chambers", "enumeration not requested for this size")),
    }
    out.push(RowCheck::new("diagnostics", r.diagnostics.is_empty(), r.diagnostics.join("; ")));
    out
}

pub fn verify_entry(e: &CatalogueEntry, policy: ChamberPolicy) -> RowReport {
    let mut checks = data_checks(e);
    if e.has_vectors {
        checks.extend(geometry_checks(e, policy));
    } else {
        checks.push(RowCheck::skip("restriction sum", "restrictions unknown without normal vectors"));
        checks.push(RowCheck::skip("geometry", "no vectors"));
    }
    RowReport::new(e, checks)
}

pub fn verify_row(label: &str, policy: ChamberPolicy) -> Result<RowReport, CatalogueError> {
    Ok(verify_entry(&entry(label)?, policy))
}

/// Verifies every row; rows are processed in parallel, reported in table order.
pub fn verify_all(policy: ChamberPolicy) -> CatalogueVerification {
    let reports: Vec<RowReport> = entries().par_iter().map(|e| verify_entry(e, policy)).collect();
    CatalogueVerification {
        rows: reports.len(),
        failed_rows: reports.iter().filter(|r| !r.ok()).count(),
        reports,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn data_rows_pass() {
        for e in entries().iter().filter(|e| !e.has_vectors) {
            let r = verify_entry(e, ChamberPolicy::Never);
            assert!(r.ok(), "{}: {:#?}", e.label, r.checks.iter().filter(|c| c.status == Status::Fail).collect::<Vec<_>>());
            assert!(r.skipped >= 2);
        }
    }

    #[test]
    fn smallest_reflection_row_passes_with_geometry() {
        let r = verify_row("A^3_1(10)", ChamberPolicy::Auto).unwrap();
        assert!(r.ok(), "{:#?}", r.checks);
        assert!(r.checks.iter().any(|c| c.name == "chamber count" && c.status == Status::Pass));
    }
}
