use lapspec::verify::{
    verify_eq1, verify_eq3, verify_lemma34_reduction, Enumerator, Grid, VerificationReport,
};

#[test]
fn suite_reports_round_trip_through_json() {
    let small = Grid {
        cycle_min: 3,
        cycle_max: 4,
        bridge_max: 1,
        theta_max: 3,
    };
    for report in [
        verify_eq1(10),
        verify_eq3(&small),
        verify_lemma34_reduction(6, &Enumerator::default()),
    ] {
        let back = VerificationReport::from_json(&report.to_json()).unwrap();
        assert_eq!(back, report);
        assert_eq!(report.pass, report.counterexamples.is_empty());
    }
}

#[test]
fn theta_audit_reports_table_findings_without_failing() {
    let grid = Grid {
        cycle_min: 3,
        cycle_max: 3,
        bridge_max: 0,
        theta_max: 2,
    };
    let report = verify_eq3(&grid);
    assert!(report.pass);
    let differing = report
        .findings
        .iter()
        .filter(|f| f.detail.starts_with("table differs"))
        .count();
    assert_eq!(differing, grid.thetas().len());
}
