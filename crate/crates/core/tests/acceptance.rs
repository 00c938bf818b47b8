//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any failure.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use canal_core::coherent::{
    chord_third_point, coherent_map_elliptic, corresponding_candidates, corresponding_point, cubic_model, EPoint,
};
use canal_core::curvetools::{fiber_degree, genus, hyperelliptic_map};
use canal_core::matrec::{implicitize_canal, mat2_curve_equal, SquaredMAT};
use canal_core::pipeline::{run_pipeline, Config, ExitNode, MapPath, Report, Verdict};
use canal_core::qpoly::factor::is_irreducible;
use canal_core::qpoly::resultant::resultant_upoly;
use canal_core::qpoly::{factor_univariate, rat, Field, MPoly, Rat, Ring, UPoly};
use canal_core::rng::{seeded, small_int, Rng};
use canal_core::sqrtfield::{RatFunc, SqrtElem};
use canal_core::surface::{cyclicity, find_regular_rational_point, plane_section, plane_section_at, random_plane_through, Point, Surface};
use common::*;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn report_has(r: &Report, target: &SquaredMAT) -> bool {
    r.mat2.iter().chain(&r.alternative_mat2).any(|m| mat2_curve_equal(m, target).unwrap_or(false))
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t0 = Instant::now();
    let v = f();
    (v, t0.elapsed())
}

fn reference_point() -> Point {
    [rat(3, 2), rat(0, 1), rat(3, 2)]
}

/// The plane through p and q = (1,0,2).
fn reference_plane() -> MPoly<Rat> {
    poly("x + z - 3")
}

fn criterion_1() -> Outcome {
    let cfg = Config { point: Some(reference_point()), ..Config::default() };
    let (r, dt) = timed(|| run_pipeline(&example1(), &cfg).unwrap());
    ensure!(r.verdict == Verdict::RationalCanal, "verdict {:?}", r.verdict);
    ensure!(report_has(&r, &example1_mat()), "no recovered family is curve-equal to the reference M²");
    ensure!(dt < Duration::from_secs(300), "took {dt:?}");
    Ok(format!("RATIONAL_CANAL, reference family recovered, {} families, {dt:.1?}", 1 + r.alternative_mat2.len()))
}

/// j of y² + x³ + a x + b = 0, computed directly from the coefficients.
fn j_of_negated_weierstrass(a: &Rat, b: &Rat) -> Rat {
    // x ↦ −x gives y² = x³ + a x − b
    let a3 = a * a * a;
    let four_a3 = Rat::from_integer(4.into()) * &a3;
    let disc = &four_a3 + Rat::from_integer(27.into()) * b * b;
    Rat::from_integer(1728.into()) * four_a3 / disc
}

fn criterion_2() -> Outcome {
    let s = Surface::new(&example1()).unwrap();
    let p = reference_point();
    let h = reference_plane();
    let q = corresponding_point(&s, &p, &h).map_err(|e| e.to_string())?.ok_or("no corresponding point")?;
    let q = q.as_rational().ok_or("corresponding point is not rational")?;
    ensure!(q == [rat(1, 1), rat(0, 1), rat(2, 1)], "q = {q:?}");

    let e = |x: Rat| EPoint::Affine(x, rat(0, 1));
    let third = chord_third_point(&rat(-364, 3), &e(rat(22, 3)), &e(rat(16, 3)));
    ensure!(third == e(rat(-38, 3)), "chord third point {third:?}");

    let hc = plane_section_at(&s, &h, Some(&p)).map_err(|e| e.to_string())?;
    let model = cubic_model(&hc, &[rat(0, 1), rat(0, 1)]).map_err(|e| e.to_string())?;
    let j_ref = j_of_negated_weierstrass(&rat(-364, 3), &rat(13376, 27));
    ensure!(model.j_invariant() == Some(j_ref.clone()), "j = {:?}, expected {j_ref}", model.j_invariant());

    let c = cyclicity(&s, 5, &mut seeded(1)).map_err(|e| e.to_string())?;
    ensure!(c == 1, "cyclicity {c}");
    let g = genus(&hc).map_err(|e| e.to_string())?;
    ensure!(g == 1, "genus {g}");

    let cfg = Config { point: Some(p), plane: Some([rat(1, 1), rat(0, 1), rat(1, 1), rat(-3, 1)]), ..Config::default() };
    let r = run_pipeline(&example1(), &cfg).unwrap();
    ensure!(r.mat_rational == Some(true), "mat_rational {:?}", r.mat_rational);
    Ok(format!("q = (1,0,2) on x+z-3, third point (-38/3,0), j = {j_ref}, c = 1, g = 1, MAT rational"))
}

fn criterion_3() -> Outcome {
    let (r, dt) = timed(|| run_pipeline(&example2(), &Config::default()).unwrap());
    ensure!(r.verdict == Verdict::RationalCanal, "verdict {:?}", r.verdict);
    ensure!(report_has(&r, &example2_mat()), "recovered M² is not curve-equal to the reference");
    ensure!(r.cyclicity == 1, "cyclicity {}", r.cyclicity);
    ensure!(r.section_genus == Some(2), "genus {:?}", r.section_genus);
    ensure!(r.path == Some(MapPath::Hyperelliptic), "path {:?}", r.path);
    ensure!(dt < Duration::from_secs(900), "took {dt:?}");
    Ok(format!("RATIONAL_CANAL via hyperelliptic map, c = 1, g = 2, {dt:.1?}"))
}

fn criterion_4() -> Outcome {
    let cylinder = mat2("t", "0", "0", "1");
    let f = implicitize_canal(&cylinder).map_err(|e| e.to_string())?;
    ensure!(f == poly("y^2 + z^2 - 1"), "cylinder implicit form {f}");

    let fixtures = [
        ("cylinder", cylinder),
        ("parabola pipe", mat2("t", "t^2", "0", "1")),
        ("(1,u,u^2,u)", mat2("1", "(2t+1)/(t-3)", "((2t+1)/(t-3))^2", "(2t+1)/(t-3)")),
    ];
    let mut notes = Vec::new();
    for (name, m) in fixtures {
        let f = implicitize_canal(&m).map_err(|e| format!("{name}: {e}"))?;
        let (r, dt) = timed(|| run_pipeline(&f, &Config::default()).unwrap());
        ensure!(r.verdict == Verdict::RationalCanal, "{name}: verdict {:?}", r.verdict);
        ensure!(report_has(&r, &m), "{name}: recovered M² differs from the fixture");
        notes.push(format!("{name} {dt:.1?}"));
    }
    Ok(format!("cylinder is y^2+z^2-1; round trips: {}", notes.join(", ")))
}

fn criterion_5() -> Outcome {
    let (r, dt) = timed(|| run_pipeline(&poly("x^3+y^3+z^3-1"), &Config::default()).unwrap());
    ensure!(r.verdict == Verdict::NotCanal, "Fermat cubic verdict {:?}", r.verdict);
    ensure!(r.exit == ExitNode::Cyclicity && r.cyclicity == 0, "Fermat cubic ended at {:?}, c = {}", r.exit, r.cyclicity);
    ensure!(dt < Duration::from_secs(10), "Fermat cubic took {dt:?}");

    let perturbed = &example1() + &poly("x*y");
    let r = run_pipeline(&perturbed, &Config::default()).unwrap();
    ensure!(
        matches!(r.verdict, Verdict::NotCanal | Verdict::NotRecognizedBudget),
        "perturbed cubic verdict {:?}",
        r.verdict
    );

    let quartic = poly("(x^2+y^2+z^2)(x^2+2y^2+3z^2)+x^3+y^3-z^3+x y+z");
    let (rq, dq) = timed(|| run_pipeline(&quartic, &Config::default()).unwrap());
    ensure!(rq.verdict == Verdict::NotCanal, "quartic verdict {:?}", rq.verdict);
    ensure!(rq.exit == ExitNode::Hyperellipticity, "quartic ended at {:?}", rq.exit);
    ensure!(rq.section_genus == Some(3), "quartic section genus {:?}", rq.section_genus);
    Ok(format!(
        "Fermat NOT_CANAL at cyclicity in {dt:.1?}; perturbed {}; quartic NOT_CANAL (non-hyperelliptic genus 3) in {dq:.1?}",
        r.verdict.as_str()
    ))
}

fn rand_upoly(rng: &mut Rng, max_deg: usize, bound: i64) -> UPoly<Rat> {
    let d = small_int(rng, max_deg as i64).unsigned_abs() as usize;
    let c: Vec<i64> = (0..=d).map(|_| small_int(rng, bound)).collect();
    UPoly::from_ints(&c)
}

fn rand_nonzero(rng: &mut Rng, max_deg: usize, bound: i64) -> UPoly<Rat> {
    loop {
        let p = rand_upoly(rng, max_deg, bound);
        if !p.is_zero() {
            return p;
        }
    }
}

fn rand_elem(rng: &mut Rng, radicand: &Arc<UPoly<Rat>>) -> SqrtElem {
    let mut rf = || RatFunc::new(rand_upoly(rng, 2, 4), rand_nonzero(rng, 1, 3));
    SqrtElem::new(rf(), rf(), radicand)
}

fn criterion_6() -> Outcome {
    const CASES: usize = 1000;
    let mut rng = seeded(2024);
    let radicands = [UPoly::from_ints(&[1, 0, 1]), UPoly::from_ints(&[-2, 0, 0, 1]), UPoly::from_ints(&[3, 2])];
    for i in 0..CASES {
        let p = Arc::new(radicands[i % radicands.len()].clone());
        let (a, b, c) = (rand_elem(&mut rng, &p), rand_elem(&mut rng, &p), rand_elem(&mut rng, &p));
        ensure!(a.times(&b.plus(&c)) == a.times(&b).plus(&a.times(&c)), "distributivity fails at case {i}");
        ensure!(a.times(&b).times(&c) == a.times(&b.times(&c)), "associativity fails at case {i}");
        ensure!(a.times(&b).conjugate() == a.conjugate().times(&b.conjugate()), "conjugation fails at case {i}");
        ensure!(a.times(&a.conjugate()).rational_part() == Some(a.norm()), "norm fails at case {i}");
        if !a.is_zero() {
            ensure!(a.times(&a.inverse().unwrap()).is_one(), "inverse fails at case {i}");
        }
    }
    for i in 0..CASES {
        let (a, b, c) = (rand_nonzero(&mut rng, 4, 6), rand_nonzero(&mut rng, 4, 6), rand_nonzero(&mut rng, 2, 5));
        if a.deg() + b.deg() >= 1 {
            ensure!(resultant_upoly(&a, &b).is_zero() == (a.gcd(&b).deg() >= 1), "resultant/gcd duality fails at case {i}");
        }
        let f = a.mul_ref(&c).mul_ref(&c);
        let fac = factor_univariate(&f).map_err(|e| e.to_string())?;
        ensure!(fac.expand() == f, "factorization of case {i} does not reassemble");
        ensure!(fac.factors.iter().all(|(g, _)| is_irreducible(g)), "reducible factor at case {i}");
    }

    let mut genus_notes = Vec::new();
    for (name, f, expected) in [("Example 1", example1(), 1), ("Example 2", example2(), 2)] {
        let s = Surface::new(&f).unwrap();
        let p = find_regular_rational_point(&s, 20, None).map_err(|e| e.to_string())?;
        let mut rng = seeded(77);
        for _ in 0..3 {
            let h = random_plane_through(&p, &mut rng, 9);
            let hc = plane_section(&s, &h).map_err(|e| e.to_string())?;
            let g = genus(&hc).map_err(|e| e.to_string())?;
            ensure!(g == expected, "{name}: genus {g} on plane {h}");
        }
        genus_notes.push(format!("{name} g = {expected}"));
    }

    let mut maps = 0;
    let s1 = Surface::new(&example1()).unwrap();
    let p = reference_point();
    let mut rng = seeded(5);
    let mut planes = vec![reference_plane()];
    planes.extend((0..3).map(|_| random_plane_through(&p, &mut rng, 9)));
    for h in planes {
        let Ok((cands, _)) = corresponding_candidates(&s1, &p, &h) else { continue };
        let hc = plane_section_at(&s1, &h, Some(&p)).map_err(|e| e.to_string())?;
        for q in cands.iter().filter_map(|c| c.uv_rational()) {
            let m = coherent_map_elliptic(&hc, &[rat(0, 1), rat(0, 1)], &q).map_err(|e| e.to_string())?;
            ensure!(fiber_degree(&m).map_err(|e| e.to_string())? == 2, "elliptic map of degree != 2 on {h}");
            maps += 1;
        }
    }
    let s2 = Surface::new(&example2()).unwrap();
    let hc = plane_section(&s2, &poly("x + 2y - z")).map_err(|e| e.to_string())?;
    let m = hyperelliptic_map(&hc).map_err(|e| e.to_string())?;
    ensure!(fiber_degree(&m).map_err(|e| e.to_string())? == 2, "hyperelliptic map of degree != 2");
    maps += 1;

    let cfg = Config { seed: 11, ..Config::default() };
    let a = run_pipeline(&example1(), &cfg).unwrap().to_json().to_string();
    let b = run_pipeline(&example1(), &cfg).unwrap().to_json().to_string();
    ensure!(a == b, "reports differ under a fixed seed");

    Ok(format!(
        "{CASES} sqrtfield cases, {CASES} qpoly cases, {} on 3 planes each, {maps} maps of degree 2, deterministic",
        genus_notes.join(" and ")
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 6] = [
        ("1 Example 1 end-to-end", criterion_1),
        ("2 Example 1 intermediate anchors", criterion_2),
        ("3 Example 2 end-to-end", criterion_3),
        ("4 implicitize/recognize round trips", criterion_4),
        ("5 negative controls", criterion_5),
        ("6 property suites", criterion_6),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, check) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let (outcome, dt) = timed(|| catch_unwind(AssertUnwindSafe(check)));
        let outcome = outcome.unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{dt:.1?}]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail} [{dt:.1?}]");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
