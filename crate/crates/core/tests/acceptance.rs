//! One line per acceptance criterion.

use bcrystal::verify;

#[test]
fn acceptance() {
    let reports = verify::run_all(verify::DEFAULT_SEED);
    for r in &reports {
        println!("{}", r.line());
    }
    let failed: Vec<u8> = reports.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
