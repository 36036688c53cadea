use kayles::verify::claim_ids;
use kayles::{run_suite, Bounds, ClaimStatus};

#[test]
fn every_claim_confirmed_on_default_bounds() {
    let reports = run_suite(&["all"], &Bounds::default()).unwrap();
    assert_eq!(reports.len(), claim_ids().len());
    for r in &reports {
        println!("{r}");
        assert_eq!(r.status, ClaimStatus::Confirmed, "{r}");
        assert!(r.instances > 0, "{r}");
    }
}

#[test]
fn reports_are_reproducible() {
    let strip = |rs: Vec<kayles::ClaimReport>| {
        rs.into_iter()
            .map(|mut r| {
                r.millis = 0;
                r
            })
            .collect::<Vec<_>>()
    };
    let bounds = Bounds::new(10, 6);
    let a = strip(run_suite(&["all"], &bounds).unwrap());
    let b = strip(run_suite(&["all"], &bounds).unwrap());
    assert_eq!(a, b);
}

#[test]
fn zero_identity_instance_count() {
    let r = &run_suite(&["cor-zerocor"], &Bounds::default()).unwrap()[0];
    assert!(r.is_confirmed());
    // all X with at most 15 pins: sum of p(m) for m <= 15
    assert_eq!(r.instances, 684);
}
