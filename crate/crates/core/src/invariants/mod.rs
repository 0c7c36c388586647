//! Characteristic polynomial, f-vector and the numeric relations between
//! the counting invariants of an arrangement in P³.

pub mod charpoly;
pub mod checks;
pub mod data;
pub mod exact;
pub mod surd;

pub use charpoly::{
    char_poly_formula, char_poly_moebius, f_vector, projective_chamber_count, CharPoly, Factorization, ReducedCubic,
};
pub use checks::{
    chamber_upper_bound, check_conjecture4, check_cor2i, check_cor2ii, check_cor3, check_cor7, check_euler,
    check_face_count, check_grunbaum_shephard, check_multiplicity_window, check_pair_identity,
    check_restriction_sum, check_simply_laced_bounds, radicand, real_roots_test, CheckResult, CheckSuite, Cor3Report, Flags,
    RealRootsTest, Relation,
};
pub use data::{ArrangementData, DerivedStats, FVector};
pub use exact::Exact;
pub use surd::{ceil_minus_surd, floor_plus_surd, isqrt};
