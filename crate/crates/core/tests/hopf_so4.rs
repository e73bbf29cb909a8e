use jordan_core::hopf::verify_hopf;
use jordan_core::so4::{default_pairs, verify_so4_suite};
use jordan_core::{Execution, HalfInt};

fn j(two: u32) -> HalfInt {
    HalfInt::from_twice(two)
}

#[test]
fn hopf_axioms_on_small_products() {
    for (a, b) in [(j(1), j(1)), (j(2), j(1))] {
        let r = verify_hopf(a, b).unwrap();
        let failures: Vec<_> = r.failures().collect();
        assert!(failures.is_empty(), "{a}x{b}: {failures:?}");
    }
}

#[test]
fn so4_default_pairs() {
    let r = verify_so4_suite(&default_pairs(), Execution::default()).unwrap();
    let failures: Vec<_> = r.failures().collect();
    assert!(failures.is_empty(), "{failures:?}");
    assert!(r.entries.len() > 40);
}
