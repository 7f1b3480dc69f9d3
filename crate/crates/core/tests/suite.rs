use rodrigues_core::exact::{rat, rint};
use rodrigues_core::verify::{probe_translation, CheckClass, CheckId, GridConfig, GridPoint, Runner, Status};
use rodrigues_core::{run_suite, suite_passed, Error};

#[test]
fn small_grid_passes_and_diagnoses() {
    let reports = run_suite(&CheckId::all(), &GridConfig::small()).unwrap();
    let failed: Vec<_> = reports.iter().filter(|r| r.status == Status::Fail).collect();
    assert!(failed.is_empty(), "{failed:#?}");
    assert!(suite_passed(&reports));
    for id in ["H6", "H7", "H8", "G2", "L9", "G3"] {
        assert!(reports.iter().any(|r| r.id == id && r.status == Status::Residual), "{id}");
        assert!(reports.iter().filter(|r| r.id == id).all(|r| r.class == CheckClass::Diagnose));
    }
}

#[test]
fn reports_are_sorted_and_deterministic() {
    let ids = CheckId::parse_list("C3,L1,H6").unwrap();
    let a = run_suite(&ids, &GridConfig::small()).unwrap();
    let b = run_suite(&ids, &GridConfig::small()).unwrap();
    assert_eq!(a, b);
    assert!(a.windows(2).all(|w| (&w[0].id, &w[0].point) <= (&w[1].id, &w[1].point)));
}

#[test]
fn h6_reports_printed_and_actual_derivatives() {
    let reports = run_suite(&[CheckId::parse("H6").unwrap()], &GridConfig::small()).unwrap();
    let point = GridPoint::new("hypergeometric").param("a", "0").param("b", "0").param("c", "1/2").l(2).nu(1);
    let r = reports.iter().find(|r| r.point == point).unwrap();
    assert_eq!(r.status, Status::Residual);
    assert_eq!(r.details["printed"], "-1");
    assert_eq!(r.details["actual"], "-3");
}

#[test]
fn mutated_recursion_fails_with_witness() {
    let runner = Runner::new(GridConfig::small()).unwrap();
    let c3 = CheckId::parse("C3").unwrap();
    assert!(runner.slots(c3).contains(&"mid"));
    let reports = runner.run_mutated(c3, "mid");
    let failure = reports.iter().find(|r| r.status == Status::Fail).unwrap();
    assert!(failure.witness.as_deref().unwrap().contains("residual"));
}

#[test]
fn small_grid_mutation_audit_catches_everything() {
    let runner = Runner::new(GridConfig::small()).unwrap();
    let outcomes = runner.mutation_audit(&CheckId::all());
    assert!(!outcomes.is_empty());
    let missed: Vec<_> = outcomes.iter().filter(|o| !o.caught).collect();
    assert!(missed.is_empty(), "{missed:#?}");
}

#[test]
fn unknown_ids_and_bad_grids_are_rejected() {
    assert_eq!(CheckId::parse("NOPE"), Err(Error::UnknownCheck("NOPE".into())));
    assert!(run_suite(&[], &GridConfig::small()).is_err());
    let grid = GridConfig { rel_hermite_n: vec![rint(0)], ..GridConfig::small() };
    assert!(matches!(run_suite(&CheckId::all(), &grid), Err(Error::InvalidGrid(_))));
}

#[test]
fn translation_probe_examples() {
    let p = probe_translation(0, &rat(1, 10), &rat(1, 2), 40);
    assert_eq!(p.lhs, "1");
    assert!((p.residual_approx - 0.102).abs() < 1e-3);
    assert_eq!(probe_translation(0, &rint(0), &rat(2, 3), 1).residual, "0");
}
