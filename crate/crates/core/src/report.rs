//! The full invariant report for one arrangement.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::Field;
use crate::arrangement::{Arrangement, HVector, TVector};
use crate::chambers::{ChamberEngine, ChamberError, ChamberSummary};
use crate::invariants::{
    char_poly_formula, char_poly_moebius, check_restriction_sum, ArrangementData, CharPoly, CheckResult,
    CheckSuite, Cor3Report, Exact, FVector, Flags, RealRootsTest,
};

/// Chamber enumeration runs by default up to this many hyperplanes.
pub const DEFAULT_CHAMBER_THRESHOLD: usize = 32;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ChamberPolicy {
    /// Enumerate when `n ≤ DEFAULT_CHAMBER_THRESHOLD`.
    #[default]
    Auto,
    Always,
    Never,
}

impl ChamberPolicy {
    pub fn enumerates(self, n: usize) -> bool {
        match self {
            ChamberPolicy::Auto => n <= DEFAULT_CHAMBER_THRESHOLD,
            ChamberPolicy::Always => true,
            ChamberPolicy::Never => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub cor2i: CheckResult,
    pub cor2ii: CheckResult,
    pub conjecture4: CheckResult,
    /// Present for simply laced arrangements only.
    pub simply_laced: Option<Vec<CheckResult>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Identities {
    pub pair_count: CheckResult,
    pub euler: CheckResult,
    pub face_count: CheckResult,
    pub restriction_sum: CheckResult,
    /// Möbius and closed-form characteristic polynomials coincide.
    pub char_poly_routes_agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChamberSection {
    pub count: usize,
    /// False when `--max-chambers` stopped the search early.
    pub complete: bool,
    pub wall_counts: BTreeMap<usize, u64>,
    pub diagram_types: BTreeMap<String, u64>,
    pub simplicial: bool,
    pub simply_laced: bool,
    pub irreducible: bool,
}

/// Everything computed about one arrangement. Field order is the JSON key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
    pub n: u64,
    pub field: Field,
    pub h_vector: HVector,
    pub t_vector: TVector,
    pub f_vector: FVector,
    pub char_poly: Vec<Exact>,
    pub char_poly_factored: String,
    pub real_rooted: bool,
    pub relations: RealRootsTest,
    pub simplicial: bool,
    /// `"chambers"` when decided by wall counts, `"face-count"` when by `f₂ = 2f₃`.
    pub simplicial_source: &'static str,
    pub simply_laced: bool,
    pub irreducible: bool,
    /// Finest direct-sum splitting of the hyperplanes.
    pub components: Vec<Vec<usize>>,
    pub multiplicity: usize,
    pub gs_conjecture: CheckResult,
    pub cor3: Cor3Report,
    pub cor7: Option<CheckResult>,
    pub bounds: Bounds,
    pub multiplicity_window: Vec<CheckResult>,
    pub identities: Identities,
    pub chambers: Option<ChamberSection>,
    /// Disagreements between routes that should coincide; empty normally.
    pub diagnostics: Vec<String>,
}

impl ReportDocument {
    pub fn data(&self) -> ArrangementData {
        ArrangementData::new(self.n, self.h_vector.clone(), self.t_vector.clone(), self.f_vector)
    }

    /// Every individual relation in the report.
    pub fn checks(&self) -> Vec<&CheckResult> {
        let r = &self.relations;
        let mut out = vec![&r.r1];
        out.extend(r.r2.iter().chain(r.r3.iter()));
        let id = &self.identities;
        out.extend([&id.pair_count, &id.euler, &id.face_count, &id.restriction_sum]);
        out.extend([&self.bounds.cor2i, &self.bounds.cor2ii, &self.bounds.conjecture4]);
        out.extend(self.bounds.simply_laced.iter().flatten());
        out.push(&self.cor3.identity);
        out.extend(self.cor3.upper.iter().chain(self.cor3.lower.iter()));
        out.push(&self.cor3.cubic);
        out.extend(self.cor7.iter());
        out.push(&self.gs_conjecture);
        out.extend(self.multiplicity_window.iter());
        out
    }
}

fn coefficients(p: &CharPoly) -> Vec<Exact> {
    p.coeffs().iter().cloned().map(Exact::from).collect()
}

/// Computes the report. `max_chambers` caps enumeration and marks the
/// chamber section incomplete when reached.
pub fn analyze(a: &Arrangement, policy: ChamberPolicy, max_chambers: Option<usize>) -> Result<ReportDocument, ChamberError> {
    let data = ArrangementData::from_arrangement(a);
    let mut diagnostics = Vec::new();

    let moebius = char_poly_moebius(a);
    let formula = char_poly_formula(data.n, data.h_sum(), data.f.chambers());
    if moebius != formula {
        diagnostics.push(format!("characteristic polynomial routes differ: {moebius} vs {formula}"));
    }

    let chambers = if policy.enumerates(a.len()) {
        let engine = ChamberEngine::new(a);
        let e = engine.enumerate(max_chambers)?;
        let s = ChamberSummary::from_enumeration(&engine, &e);
        Some(ChamberSection {
            count: s.count,
            complete: s.complete,
            wall_counts: s.wall_counts,
            diagram_types: s.diagram_types,
            simplicial: s.simplicial,
            simply_laced: s.simply_laced,
            irreducible: s.irreducible,
        })
    } else {
        None
    };
    let complete = chambers.as_ref().filter(|c| c.complete);

    let face_simplicial = data.f.faces() == 2 * data.f.chambers();
    let (simplicial, simplicial_source) = match complete {
        Some(c) => {
            if c.simplicial != face_simplicial {
                diagnostics.push(format!(
                    "wall counts say simplicial = {}, face count says {face_simplicial}",
                    c.simplicial
                ));
            }
            if c.count as u64 != data.f.chambers() {
                diagnostics.push(format!("enumerated {} chambers, expected {}", c.count, data.f.chambers()));
            }
            (c.simplicial, "chambers")
        }
        None => (face_simplicial, "face-count"),
    };

    let components = a.irreducible_components();
    let irreducible = components.len() == 1;
    let h_simply_laced = data.is_simply_laced();
    let simply_laced = match complete {
        Some(c) => {
            if c.simply_laced != h_simply_laced {
                diagnostics.push(format!(
                    "diagrams say simply laced = {}, h-vector says {h_simply_laced}",
                    c.simply_laced
                ));
            }
            if c.irreducible != irreducible {
                diagnostics.push(format!(
                    "diagrams say irreducible = {}, span decomposition says {irreducible}",
                    c.irreducible
                ));
            }
            c.simply_laced
        }
        None => h_simply_laced,
    };

    let suite = CheckSuite::evaluate(&data, Flags { simplicial, irreducible });
    if !suite.real_roots.verdicts_agree {
        diagnostics.push("discriminant verdict differs from relations (1)-(3)".into());
    }
    let factorization = moebius.integer_factorization();

    Ok(ReportDocument {
        n: data.n,
        field: a.field(),
        h_vector: data.h.clone(),
        t_vector: data.t.clone(),
        f_vector: data.f,
        char_poly: coefficients(&moebius),
        char_poly_factored: factorization.to_string(),
        real_rooted: suite.real_roots.real_rooted,
        relations: suite.real_roots,
        simplicial,
        simplicial_source,
        simply_laced,
        irreducible,
        components,
        multiplicity: data.multiplicity(),
        gs_conjecture: suite.gs,
        cor3: suite.cor3,
        cor7: suite.cor7,
        bounds: Bounds {
            cor2i: suite.cor2i,
            cor2ii: suite.cor2ii,
            conjecture4: suite.conjecture4,
            simply_laced: suite.simply_laced,
        },
        multiplicity_window: suite.multiplicity,
        identities: Identities {
            pair_count: suite.pair_identity,
            euler: suite.euler,
            face_count: suite.face_count,
            restriction_sum: check_restriction_sum(a),
            char_poly_routes_agree: moebius == formula,
        },
        chambers,
        diagnostics,
    })
}
