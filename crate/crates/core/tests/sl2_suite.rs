use jordan_core::irrep::{casimir, diagonal_basis_irrep, irrep_checks, sweep_sl2, verma_basis_irrep};
use jordan_core::{Execution, HalfInt};

#[test]
fn relations_hold_through_spin_six() {
    let r = sweep_sl2(HalfInt::from_twice(12), Execution::default()).unwrap();
    let failures: Vec<_> = r.failures().collect();
    assert!(failures.is_empty(), "{failures:?}");
    assert!(r.entry("j=6/verma/casimir c(0) = j(j+1)").is_some());
    assert!(r.entry("j=6/diagonal/[H,Y] = -{Y,cosh(hX)}").is_some());
}

#[test]
fn bases_share_invariants() {
    for two_j in 0..=8 {
        let j = HalfInt::from_twice(two_j);
        let v = verma_basis_irrep(j).unwrap();
        let d = diagonal_basis_irrep(j).unwrap();
        assert_eq!(casimir(&v).unwrap(), casimir(&d).unwrap(), "j={j}");
        for (a, b) in [(&v.x, &d.x), (&v.y, &d.y), (&v.h, &d.h)] {
            assert_eq!(a.charpoly().unwrap(), b.charpoly().unwrap(), "j={j}");
        }
    }
}

#[test]
fn corrupted_irrep_fails() {
    let mut r = diagonal_basis_irrep(HalfInt::from_twice(3)).unwrap();
    let bumped = r.y.get(1, 0) + &jordan_core::exact::BiPoly::one();
    r.y.set(1, 0, bumped);
    assert!(!irrep_checks(&r).passed());
}
