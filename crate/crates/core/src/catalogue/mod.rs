//! Built-in arrangements and the embedded catalogue of known irreducible
//! simplicial arrangements in P³, with row-by-row verification.

use serde::Serialize;
use thiserror::Error;

use crate::arrangement::{Arrangement, ArrangementError, HVector, TVector, WeightCounts};
use crate::invariants::{ArrangementData, FVector};

mod sporadic;
mod roots;
mod rows;
mod verify;

pub use sporadic::{arrangement_27, arrangement_28};
pub use roots::{reflection_closure, RootSystemSpec, CLOSURE_CAP};
pub use verify::{verify_all, verify_entry, verify_row, CatalogueVerification, RowCheck, RowReport, Status};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CatalogueError {
    #[error("unknown catalogue label `{0}`")]
    UnknownLabel(String),
    #[error("no normal vectors are available for `{0}`")]
    NoVectorsAvailable(String),
    #[error("reflection closure exceeded {cap} root lines")]
    ClosureOverflow { cap: usize },
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
}

/// Labels of rows with normal vectors, with the root system they come from.
pub const BUILTINS: [(&str, Option<&str>); 7] = [
    ("A^3_1(10)", Some("A4")),
    ("A^3_1(12)", Some("D4")),
    ("A^3_1(16)", Some("B4")),
    ("A^3_1(24)", Some("F4")),
    ("A^3_1(60)", Some("H4")),
    ("A^3_1(27)", None),
    ("A^3_1(28)", None),
];

/// A catalogue row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogueEntry {
    pub label: &'static str,
    pub n: u64,
    #[serde(rename = "h_vector")]
    pub h: HVector,
    #[serde(rename = "t_vector")]
    pub t: TVector,
    #[serde(rename = "f_vector")]
    pub f: FVector,
    pub comments: &'static str,
    pub has_vectors: bool,
}

impl CatalogueEntry {
    pub fn data(&self) -> ArrangementData {
        ArrangementData::new(self.n, self.h.clone(), self.t.clone(), self.f)
    }

    /// Root system name for reflection arrangements.
    pub fn root_system(&self) -> Option<&'static str> {
        BUILTINS.iter().find(|(l, _)| *l == self.label).and_then(|(_, r)| *r)
    }
}

/// Number in parentheses at the end of a label, e.g. 28 for `A^3_2(28)`.
pub fn label_size(label: &str) -> Option<u64> {
    label.strip_suffix(')')?.rsplit_once('(')?.1.parse().ok()
}

fn counts(pairs: &[(usize, u64)]) -> WeightCounts {
    let mut w = WeightCounts::new();
    for &(weight, count) in pairs {
        w.add(weight, count);
    }
    w
}

/// All catalogue rows in table order.
pub fn entries() -> Vec<CatalogueEntry> {
    rows::ROWS
        .iter()
        .map(|r| CatalogueEntry {
            label: r.label,
            n: label_size(r.label).expect("embedded labels end in (n)"),
            h: HVector(counts(r.h)),
            t: TVector(counts(r.t)),
            f: FVector(r.f),
            comments: r.comments,
            has_vectors: BUILTINS.iter().any(|(l, _)| *l == r.label),
        })
        .collect()
}

/// Resolves a label or a root-system alias (`A4`, `D4`, `B4`, `F4`, `H4`).
pub fn entry(label: &str) -> Result<CatalogueEntry, CatalogueError> {
    let label = resolve_alias(label);
    entries().into_iter().find(|e| e.label == label).ok_or_else(|| CatalogueError::UnknownLabel(label.to_string()))
}

fn resolve_alias(label: &str) -> &str {
    BUILTINS.iter().find(|(_, r)| *r == Some(label)).map_or(label, |(l, _)| *l)
}

/// Normal vectors for one of the seven rows that have them.
pub fn builtin(label: &str) -> Result<Arrangement, CatalogueError> {
    let e = entry(label)?;
    match (e.label, e.root_system()) {
        (_, Some(name)) => reflection_closure(&RootSystemSpec::by_name(name).expect("known root system")),
        ("A^3_1(27)", None) => Ok(arrangement_27()),
        ("A^3_1(28)", None) => Ok(arrangement_28()),
        _ => Err(CatalogueError::NoVectorsAvailable(e.label.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transcription_matches_positional_table() {
        type Row<'a> = (&'a str, &'a [u64], &'a [u64], [u64; 4]);
        let table: &[Row] = &[
            ("A^3_1(10)", &[15, 10][..], &[0, 10, 0, 5][..], [15, 75, 120, 60]),
            ("A^3_1(12)", &[18, 16][..], &[12, 0, 0, 12][..], [24, 120, 192, 96]),
            ("A^3_1(13)", &[21, 19][..], &[6, 10, 0, 9, 3][..], [28, 148, 240, 120]),
            ("A^3_1(14)", &[25, 20, 1][..], &[2, 16, 2, 8, 2, 2][..], [32, 176, 288, 144]),
            ("A^3_1(15)", &[30, 19, 3][..], &[0, 18, 6, 8, 0, 3, 1][..], [36, 204, 336, 168]),
            ("A^3_2(15)", &[27, 26][..], &[0, 24, 0, 6, 9][..], [39, 219, 360, 180]),
            ("A^3_1(16)", &[36, 16, 6][..], &[0, 16, 12, 8, 0, 0, 4][..], [40, 232, 384, 192]),
            ("A^3_1(17)", &[34, 28, 3][..], &[12, 20, 0, 14, 0, 6, 1][..], [53, 293, 480, 240]),
            ("A^3_1(18)", &[39, 32, 3][..], &[0, 36, 3, 8, 6, 6, 1][..], [60, 348, 576, 288]),
            ("A^3_1(21)", &[51, 41, 6][..], &[12, 38, 6, 21, 3, 6, 0, 4][..], [90, 522, 864, 432]),
            ("A^3_1(22)", &[57, 40, 9][..], &[12, 48, 6, 20, 0, 6, 4, 4][..], [100, 580, 960, 480]),
            ("A^3_1(24)", &[72, 32, 18][..], &[0, 96, 0, 0, 0, 0, 24][..], [120, 696, 1152, 576]),
            ("A^3_1(25)", &[75, 55, 10][..], &[0, 60, 30, 25, 15, 0, 0, 10][..], [140, 860, 1440, 720]),
            ("A^3_1(27)", &[81, 70, 0, 6][..], &[30, 60, 0, 67, 0, 0, 0, 12, 0, 0, 0, 0, 1][..], [170, 1010, 1680, 840]),
            ("A^3_1(28)", &[90, 76, 0, 6][..], &[0, 100, 0, 58, 15, 0, 0, 12, 0, 0, 0, 0, 1][..], [186, 1146, 1920, 960]),
            ("A^3_2(28)", &[90, 64, 16][..], &[24, 84, 18, 40, 0, 18, 3, 0, 6, 0, 1][..], [194, 1154, 1920, 960]),
            ("A^3_1(30)", &[99, 84, 9, 0, 2][..], &[0, 144, 0, 36, 24, 18, 0, 0, 0, 0, 6][..], [228, 1380, 2304, 1152]),
            ("A^3_1(32)", &[120, 76, 18, 4][..], &[24, 120, 24, 68, 0, 6, 10, 8, 0, 0, 6][..], [266, 1610, 2688, 1344]),
            ("A^3_2(32)", &[124, 64, 30][..], &[0, 144, 48, 40, 0, 0, 12, 16, 0, 0, 4][..], [264, 1608, 2688, 1344]),
            ("A^3_1(60)", &[450, 200, 0, 72][..], &[0, 600, 0, 660, 0, 0, 0, 0, 0, 0, 0, 0, 60][..], [1320, 8520, 14400, 7200]),
        ];
        let es = entries();
        assert_eq!(es.len(), table.len());
        for (e, (label, h, t, f)) in es.iter().zip(table) {
            assert_eq!(e.label, *label);
            assert_eq!(e.h.to_positional(), h.to_vec(), "{label}");
            assert_eq!(e.t.to_positional(), t.to_vec(), "{label}");
            assert_eq!(e.f.0, *f, "{label}");
        }
    }

    #[test]
    fn labels_are_unique_and_sized() {
        let es = entries();
        let mut labels: Vec<&str> = es.iter().map(|e| e.label).collect();
        labels.sort();
        labels.dedup();
        assert_eq!(labels.len(), es.len());
        assert_eq!(label_size("A^3_2(32)"), Some(32));
        assert_eq!(es.iter().filter(|e| e.has_vectors).count(), 7);
    }

    #[test]
    fn aliases_and_errors() {
        assert_eq!(entry("D4").unwrap().label, "A^3_1(12)");
        assert_eq!(builtin("A^3_1(12)").unwrap().len(), 12);
        assert_eq!(builtin("A^3_2(15)"), Err(CatalogueError::NoVectorsAvailable("A^3_2(15)".into())));
        assert_eq!(builtin("NOPE"), Err(CatalogueError::UnknownLabel("NOPE".into())));
    }

    #[test]
    fn tau_arrangements_27_and_28() {
        let (a27, a28) = (builtin("A^3_1(27)").unwrap(), builtin("A^3_1(28)").unwrap());
        assert_eq!((a27.len(), a28.len()), (27, 28));
        assert_eq!(a28.without(&[27]).unwrap(), a27);
    }
}
