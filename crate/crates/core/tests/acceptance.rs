//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//!
//! `cargo test --test acceptance`

mod common;

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use arr4::algebra::Scalar;
use arr4::arrangement::Arrangement;
use arr4::catalogue::{builtin, entries, entry, BUILTINS};
use arr4::chambers::{summarize, ChamberEngine};
use arr4::invariants::{
    ceil_minus_surd, char_poly_formula, char_poly_moebius, f_vector, floor_plus_surd, projective_chamber_count,
    radicand, ArrangementData, CharPoly, CheckSuite, Flags,
};
use common::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn boolean() -> Arrangement {
    Arrangement::from_ints(&[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]).unwrap()
}

fn secs(d: Duration) -> String {
    format!("{:.1}s", d.as_secs_f64())
}

/// Exact (n, h, t, f) for all seven arrangements with vectors, within the time budgets.
fn catalogue_geometry() -> Outcome {
    let mut small = Duration::ZERO;
    let mut large = Duration::ZERO;
    for (label, _) in BUILTINS {
        let start = Instant::now();
        let a = builtin(label).map_err(|e| e.to_string())?;
        let d = ArrangementData::from_arrangement(&a);
        let elapsed = start.elapsed();
        if label == "A^3_1(60)" {
            large = elapsed;
        } else {
            small += elapsed;
        }
        let row = entry(label).unwrap();
        ensure(d.n == row.n && d.h == row.h && d.t == row.t && d.f == row.f, || {
            format!("{label}: computed n={} h={} t={} f={}", d.n, d.h, d.t, d.f)
        })?;
    }
    ensure(small < Duration::from_secs(60), || format!("six small built-ins took {}", secs(small)))?;
    ensure(large < Duration::from_secs(120), || format!("H4 lattice + f-vector took {}", secs(large)))?;
    Ok(format!("7 rows exact; six built-ins {}, H4 {}", secs(small), secs(large)))
}

/// χ(A₄) and χ(Boolean) factor as expected; both χ routes agree on all built-ins.
fn char_poly_exactness() -> Outcome {
    let f = char_poly_moebius(&builtin("A4").unwrap()).integer_factorization();
    let expected: Vec<(BigInt, usize)> = (1..=4).map(|r| (BigInt::from(r), 1)).collect();
    ensure(f.roots == expected && f.splits_over_integers(), || format!("χ(A4) = {f}"))?;
    let b = char_poly_moebius(&boolean());
    ensure(b == CharPoly::from_roots(&[1, 1, 1, 1]), || format!("χ(Boolean) = {b}"))?;
    for (label, _) in BUILTINS {
        let a = builtin(label).unwrap();
        let d = ArrangementData::from_arrangement(&a);
        let (m, c) = (char_poly_moebius(&a), char_poly_formula(d.n, d.h_sum(), d.f.chambers()));
        ensure(m == c, || format!("{label}: Möbius {m} vs closed form {c}"))?;
    }
    Ok(format!("χ(A4) = {f}, χ(Boolean) = (t-1)^4, routes agree on 7 built-ins"))
}

/// Relations (1)–(3) are tight on A^3_2(15).
fn tightness() -> Outcome {
    let e = entry("A^3_2(15)").unwrap();
    let rr = CheckSuite::evaluate(&e.data(), Flags { simplicial: true, irreducible: true }).real_roots;
    let r2 = rr.r2.as_ref().ok_or("negative radicand")?;
    let r3 = rr.r3.as_ref().ok_or("negative radicand")?;
    // ⌊17·14/3⌋ = 79
    ensure(rr.r1.lhs.to_i64() == Some(79) && rr.r1.rhs.to_i64() == Some(79), || rr.r1.to_string())?;
    ensure(r2.rhs.to_i64() == Some(180) && r2.tight, || r2.to_string())?;
    ensure(r3.rhs.to_i64() == Some(180) && r3.tight, || r3.to_string())?;
    Ok("h = 79 = ⌊17·14/3⌋, floor bound 180, ceiling bound 180".into())
}

/// Every data-only check on every row, in under a second.
fn data_suite() -> Outcome {
    let start = Instant::now();
    let rows = entries();
    let mut sharp = false;
    for e in &rows {
        let data = e.data();
        let s = CheckSuite::evaluate(&data, Flags { simplicial: true, irreducible: true });
        let label = e.label;
        for r in s.results() {
            ensure(r.holds, || format!("{label}: {r}"))?;
        }
        ensure(s.real_roots.r2.is_some() && s.real_roots.r3.is_some(), || format!("{label}: negative radicand"))?;
        ensure(s.real_roots.real_rooted && s.real_roots.verdicts_agree, || format!("{label}: discriminant verdict"))?;
        ensure(s.cor7.is_some(), || format!("{label}: edge bound not evaluated"))?;
        let m_lower = s.multiplicity.iter().any(|r| r.name == "multiplicity lower");
        ensure(m_lower, || format!("{label}: m ≥ 6 not evaluated"))?;
        if ["A^3_1(10)", "A^3_1(12)"].contains(&label) {
            ensure(s.multiplicity.iter().any(|r| r.name == "multiplicity upper"), || format!("{label}: m ≤ 7 missing"))?;
        }
        if data.is_simply_laced() {
            let bounds = s.simply_laced.as_ref().ok_or_else(|| format!("{label}: simply laced bounds missing"))?;
            let size = bounds.iter().find(|r| r.name == "size bound with few multiple lines");
            ensure(size.is_some(), || format!("{label}: n ≤ 15 not evaluated"))?;
            if label == "A^3_2(15)" {
                sharp = size.unwrap().tight;
            }
        }
    }
    ensure(sharp, || "n ≤ 15 not attained by A^3_2(15)".into())?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {}", secs(elapsed)))?;
    Ok(format!("{} rows, all checks hold, n ≤ 15 sharp at A^3_2(15), {:.0?}", rows.len(), elapsed))
}

/// Chamber counts, four walls, diagram shapes and the two predicate equivalences.
fn chamber_engine() -> Outcome {
    let mut counts = Vec::new();
    for (label, a) in [("Boolean".to_string(), boolean())]
        .into_iter()
        .chain(["A4", "D4", "B4", "F4"].map(|l| (l.to_string(), builtin(l).unwrap())))
    {
        let engine = ChamberEngine::new(&a);
        let e = engine.enumerate(None).map_err(|e| e.to_string())?;
        let expected = projective_chamber_count(&a);
        ensure(e.chambers.len() as u64 == expected, || format!("{label}: {} chambers, χ gives {expected}", e.chambers.len()))?;
        ensure(e.chambers.iter().all(|c| c.walls.len() == 4), || format!("{label}: a chamber without four walls"))?;
        let want = match label.as_str() {
            "A4" => Some("A4"),
            "D4" => Some("D4"),
            _ => None,
        };
        if let Some(want) = want {
            for c in &e.chambers {
                let d = engine.diagram(c);
                ensure(d.type_name() == want && d.edges.iter().all(|e| e.weight == 3), || format!("{label}: diagram {d}"))?;
            }
        }
        counts.push(format!("{label} {}", e.chambers.len()));
    }
    for (label, _) in BUILTINS {
        let a = builtin(label).unwrap();
        let s = summarize(&a).map_err(|e| e.to_string())?;
        let f3 = entry(label).unwrap().f.chambers();
        ensure(s.count as u64 == f3 && s.simplicial, || format!("{label}: {} chambers, walls {:?}", s.count, s.wall_counts))?;
        let h_laced = a.h_vector().is_simply_laced();
        ensure(s.simply_laced == h_laced, || format!("{label}: diagrams {} vs h-vector {h_laced}", s.simply_laced))?;
        let span = a.is_reducible().is_none();
        ensure(s.irreducible == span, || format!("{label}: diagrams {} vs span {span}", s.irreducible))?;
    }
    let s = summarize(&boolean()).map_err(|e| e.to_string())?;
    ensure(!s.irreducible && boolean().is_reducible().is_some(), || "Boolean irreducibility".into())?;
    Ok(format!("chambers {}; all 7 built-ins (H4: 7200) simplicial, lacing and irreducibility agree, + Boolean", counts.join(", ")))
}

fn run_cases<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

/// The randomized suites, at the required case counts.
fn properties() -> Outcome {
    run_cases(10_000, (scalar(), scalar(), scalar()), |(x, y, z)| {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x + &(-&x), Scalar::zero());
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inv(), Scalar::one());
        }
        prop_assert_eq!(x.cmp(&y), sign_oracle(&(&x - &y)));
        prop_assert_eq!((&x + &z).cmp(&(&y + &z)), x.cmp(&y));
        if z.is_positive() {
            prop_assert_eq!((&x * &z).cmp(&(&y * &z)), x.cmp(&y));
        }
        Ok(())
    })?;
    run_cases(1_000, (counts_with_real_surd(), -100_000i64..100_000), |((n, h), a)| {
        let c = radicand(n, h);
        let x = c.pow(3) * 4u32;
        let (a, d) = (BigInt::from(a), BigInt::from(27));
        prop_assert_eq!(floor_plus_surd(&a, &c, &d), surd_by_refinement(&a, &x, &d, true));
        prop_assert_eq!(ceil_minus_surd(&a, &c, &d), surd_by_refinement(&a, &x, &d, false));
        Ok(())
    })?;
    run_cases(1_000, (1usize..150).prop_flat_map(sign_vector), |s| {
        let c = s.clone().canonical();
        prop_assert_eq!(c.clone().canonical(), c.clone());
        prop_assert_eq!(s.negated().canonical(), c);
        Ok(())
    })?;
    run_cases(100, small_arrangement(), |a| {
        let engine = ChamberEngine::new(&a);
        let chambers = engine.enumerate(None).unwrap().chambers;
        let signs: HashSet<_> = chambers.iter().map(|c| c.sign.clone()).collect();
        prop_assert_eq!(chambers.len() as u64, projective_chamber_count(&a));
        for c in &chambers {
            for &w in &c.walls {
                prop_assert!(signs.contains(&c.sign.flipped(w).canonical()));
            }
        }
        Ok(())
    })?;
    // the Boolean f-vector from sign patterns, a last sanity anchor
    ensure(f_vector(&boolean()).0 == [4, 12, 16, 8], || "Boolean f-vector".into())?;
    Ok("field/order 10000 cases, surd rounding 1000, canonical form 1000, BFS closure 100".into())
}

/// `catalogue verify --all --json` is byte-identical across runs and thread counts.
fn determinism() -> Outcome {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_arr4"))
            .args(["catalogue", "verify", "--all", "--json"])
            .env("ARR4_THREADS", threads)
            .output()
            .map_err(|e| e.to_string())
    };
    let (one, eight, again) = (run("1")?, run("8")?, run("8")?);
    ensure(one.status.success(), || format!("exit {:?}", one.status.code()))?;
    ensure(one.stdout == eight.stdout, || "ARR4_THREADS=1 and =8 differ".into())?;
    ensure(eight.stdout == again.stdout, || "two runs differ".into())?;
    Ok(format!("{} identical bytes over three runs", one.stdout.len()))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("catalogue reproduction (geometry)", catalogue_geometry),
        ("characteristic polynomial exactness", char_poly_exactness),
        ("tightness of the real-rootedness relations", tightness),
        ("full data suite", data_suite),
        ("chamber engine properties", chamber_engine),
        ("property-based suites", properties),
        ("determinism", determinism),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let elapsed = secs(start.elapsed());
        match outcome {
            Ok(detail) => println!("PASS {}. {name}: {detail} [{elapsed}]", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL {}. {name}: {detail} [{elapsed}]", i + 1);
            }
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
