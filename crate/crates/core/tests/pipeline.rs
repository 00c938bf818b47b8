mod common;

use canal_core::matrec::mat2_curve_equal;
use canal_core::pipeline::{run_pipeline, Config, ExitNode, MapPath, PipelineError, Verdict};
use canal_core::qpoly::rat;
use common::*;

fn cylinder() -> canal_core::qpoly::MPoly<canal_core::qpoly::Rat> {
    poly("y^2 + z^2 - 1")
}

#[test]
fn cylinder_is_recognized_through_conic_sections() {
    let r = run_pipeline(&cylinder(), &Config::default()).unwrap();
    assert_eq!(r.verdict, Verdict::RationalCanal);
    assert_eq!(r.cyclicity, 0);
    assert_eq!(r.section_genus, Some(0));
    assert_eq!(r.path, Some(MapPath::Conic));
    assert!(mat2_curve_equal(r.mat2.as_ref().unwrap(), &mat2("t", "0", "0", "1")).unwrap());
    assert_eq!(r.mat_rational, Some(true));
}

#[test]
fn rotational_flag_stops_cylinder_at_cyclicity() {
    let cfg = Config { assume_not_rotational: true, ..Config::default() };
    let r = run_pipeline(&cylinder(), &cfg).unwrap();
    assert_eq!(r.verdict, Verdict::NotCanal);
    assert_eq!(r.exit, ExitNode::Cyclicity);
}

#[test]
fn sphere_is_referred_as_surface_of_revolution() {
    let r = run_pipeline(&poly("x^2 + y^2 + z^2 - 1"), &Config::default()).unwrap();
    assert_eq!(r.verdict, Verdict::RevolutionReferral);
    assert_eq!(r.verdict.exit_code(), 2);
    assert_eq!(r.exit, ExitNode::RationalSection);
}

#[test]
fn same_seed_gives_identical_reports() {
    for seed in [0, 3, 99] {
        let cfg = Config { seed, ..Config::default() };
        let a = run_pipeline(&cylinder(), &cfg).unwrap();
        let b = run_pipeline(&cylinder(), &cfg).unwrap();
        assert_eq!(a.to_json().to_string(), b.to_json().to_string());
        assert_eq!(a.to_text(), b.to_text());
    }
}

#[test]
fn json_uses_exact_strings() {
    let r = run_pipeline(&cylinder(), &Config::default()).unwrap();
    let j = r.to_json();
    assert_eq!(j["verdict"], "RATIONAL_CANAL");
    assert_eq!(j["exit"], "verification");
    assert_eq!(j["path"], "conic");
    let spine = j["mat2"]["spine"].as_array().unwrap();
    assert_eq!(spine.len(), 3);
    assert!(spine[0]["num"].as_array().unwrap().iter().all(|c| c.is_string()));
    let plane = j["plane"].as_array().unwrap();
    assert!(plane.iter().all(|t| t[0].is_string() && t[1].as_array().unwrap().len() == 3));
}

#[test]
fn budget_exhaustion_is_distinct_from_not_canal() {
    // no real points, hence no rational base point
    let r = run_pipeline(&poly("x^2 + y^2 + z^2 + 1"), &Config::default()).unwrap();
    assert_eq!(r.verdict, Verdict::NotRecognizedBudget);
    assert_eq!(r.exit, ExitNode::Budget);
    assert_eq!(r.verdict.exit_code(), 3);
}

#[test]
fn given_point_and_plane_are_checked() {
    let off = Config { point: Some([rat(0, 1), rat(0, 1), rat(0, 1)]), ..Config::default() };
    assert_eq!(run_pipeline(&example1(), &off).unwrap_err(), PipelineError::BadPoint);
    let p = [rat(3, 2), rat(0, 1), rat(3, 2)];
    let wrong_plane = Config { point: Some(p.clone()), plane: Some([rat(1, 1), rat(0, 1), rat(-1, 1), rat(3, 1)]), ..Config::default() };
    assert_eq!(run_pipeline(&example1(), &wrong_plane).unwrap_err(), PipelineError::BadPlane);
    assert_eq!(run_pipeline(&poly("7"), &Config::default()).unwrap_err(), PipelineError::ConstantInput);
}

#[test]
fn example1_with_the_reference_plane_recovers_the_reference_family() {
    let cfg = Config {
        point: Some([rat(3, 2), rat(0, 1), rat(3, 2)]),
        plane: Some([rat(1, 1), rat(0, 1), rat(1, 1), rat(-3, 1)]),
        ..Config::default()
    };
    let r = run_pipeline(&example1(), &cfg).unwrap();
    assert_eq!(r.verdict, Verdict::RationalCanal);
    assert_eq!(r.path, Some(MapPath::Elliptic));
    assert!(mat2_curve_equal(r.mat2.as_ref().unwrap(), &example1_mat()).unwrap());
}

#[test]
fn every_report_names_its_decision_node() {
    let r = run_pipeline(&poly("x^3+y^3+z^3-1"), &Config::default()).unwrap();
    assert_eq!(r.exit, ExitNode::Cyclicity);
    assert!(r.to_text().contains("decided at: cyclicity"));
}
