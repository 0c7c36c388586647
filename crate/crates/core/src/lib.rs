//! Exact combinatorics of hyperplane arrangements in real projective 3-space.
//!
//! Arrangements are given by normal vectors over ℚ or ℚ(τ), τ² = τ + 1, and
//! every computation is exact. From the normals the crate builds the
//! intersection lattice and derives the h-, t- and f-vectors, the
//! characteristic polynomial, and the real-rootedness relations and counting
//! bounds on those numbers. Chambers are enumerated by sign vectors, together
//! with their walls and Coxeter diagrams. An embedded catalogue of the known
//! irreducible simplicial arrangements can be checked row by row.
//!
//! ```
//! use arr4::catalogue::builtin;
//! use arr4::invariants::{char_poly_moebius, ArrangementData};
//!
//! let a = builtin("D4").unwrap();
//! let d = ArrangementData::from_arrangement(&a);
//! assert_eq!(d.f.0, [24, 120, 192, 96]);
//! assert_eq!(char_poly_moebius(&a).integer_factorization().to_string(), "(t-1)(t-3)^2(t-5)");
//! ```

pub mod algebra;
pub mod arrangement;
pub mod catalogue;
pub mod chambers;
pub mod cli;
pub mod invariants;
pub mod io;
pub mod report;
