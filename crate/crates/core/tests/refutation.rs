use threepage::search::refute_t33_at_9;
use threepage::torus::tnn;

#[test]
fn no_nine_point_t33() {
    let r = refute_t33_at_9().unwrap();
    eprintln!("{r}");
    assert!(r.examined > 0);
    assert_eq!(r.examined, r.split_pruned + r.profile_checked);
    assert!(r.witnesses.is_empty());
}

#[test]
fn ten_points_suffice_for_t33() {
    assert_eq!(tnn(3).unwrap().n(), 10);
}
