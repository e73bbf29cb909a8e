use jordan_core::exact::{nilpotent_apply, rat, BiPoly, ElementaryFn, PolyMatrix, SeriesScalar};
use jordan_core::ncseries::{normal_order, rewrite_word, NCElement, Presentation, Schedule};
use proptest::prelude::*;

fn bipoly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((-6i64..=6, 1i64..=4, 0u32..3, 0u32..4), 0..4).prop_map(|terms| {
        let mut p = BiPoly::zero();
        for (n, d, l, h) in terms {
            p.add_term(l, h, rat(n, d));
        }
        p
    })
}

fn strictly_upper() -> impl Strategy<Value = PolyMatrix> {
    (1usize..=8).prop_flat_map(|d| {
        prop::collection::vec(bipoly(), d * d).prop_map(move |entries| {
            PolyMatrix::from_fn(d, d, |i, j| if j > i { entries[i * d + j].clone() } else { BiPoly::zero() })
        })
    })
}

fn series() -> impl Strategy<Value = SeriesScalar> {
    prop::collection::vec((-5i64..=5, 1i64..=3), 1..8)
        .prop_map(|c| SeriesScalar::from_coeffs(c.into_iter().map(|(n, d)| rat(n, d)).collect()))
}

proptest! {
    #[test]
    fn bipoly_ring_axioms(a in bipoly(), b in bipoly(), c in bipoly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &BiPoly::one(), a.clone());
    }

    #[test]
    fn exp_inverse_on_nilpotents(m in strictly_upper()) {
        let e = nilpotent_apply(ElementaryFn::Exp, &m, 1).unwrap();
        let f = nilpotent_apply(ElementaryFn::Exp, &-&m, 1).unwrap();
        prop_assert_eq!(&e * &f, PolyMatrix::identity(m.rows()));
    }

    #[test]
    fn cosh_sinh_identity(m in strictly_upper()) {
        let c = nilpotent_apply(ElementaryFn::Cosh, &m, 1).unwrap();
        let s = nilpotent_apply(ElementaryFn::Sinh, &m, 1).unwrap();
        prop_assert_eq!(&(&c * &c) - &(&s * &s), PolyMatrix::identity(m.rows()));
    }

    #[test]
    fn truncation_is_a_ring_map(a in series(), b in series(), k in 0usize..4) {
        let order = a.order().min(b.order());
        let k = k.min(order);
        prop_assert_eq!((&a * &b).truncate(k), &a.truncate(k) * &b.truncate(k));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn confluence_e3(word in prop::collection::vec(0usize..6, 0..=5), seed in any::<u64>()) {
        let pres = Presentation::e3();
        let left = rewrite_word(&pres, &word, Schedule::Leftmost);
        prop_assert_eq!(&rewrite_word(&pres, &word, Schedule::Rightmost), &left);
        prop_assert_eq!(&rewrite_word(&pres, &word, Schedule::Random(seed)), &left);
        prop_assert_eq!(normal_order(&pres, &word, 2), NCElement::from_poly(&pres, &left, 2));
    }

    #[test]
    fn confluence_e2(word in prop::collection::vec(0usize..3, 0..=5), seed in any::<u64>()) {
        let pres = Presentation::e2();
        let left = rewrite_word(&pres, &word, Schedule::Leftmost);
        prop_assert_eq!(&rewrite_word(&pres, &word, Schedule::Random(seed)), &left);
        prop_assert_eq!(normal_order(&pres, &word, 2), NCElement::from_poly(&pres, &left, 2));
    }
}
