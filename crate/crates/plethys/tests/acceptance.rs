//! The acceptance battery as a test target: one printed line and one
//! assertion per criterion.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the table.

use plethys::suite::run_acceptance;

#[test]
fn acceptance_criteria() {
    let outcomes = run_acceptance();
    let mut all_ok = true;
    for o in &outcomes {
        println!(
            "criterion {:>2} ({}): {} ({} ms, limit {} ms) - {}",
            o.id,
            o.name,
            if o.passed() { "PASS" } else { "FAIL" },
            o.millis,
            o.limit_ms,
            o.detail
        );
        all_ok &= o.passed();
    }
    assert!(all_ok, "at least one acceptance criterion failed; see the table above");
}
