//! Seeded randomized checks, reproducible from the seed alone.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{nilpotent_apply, rat, BiPoly, ElementaryFn, PolyMatrix};
use crate::ncseries::{normal_order, rewrite_word, NCElement, Presentation, Schedule};
use crate::report::VerificationReport;

fn random_bipoly(rng: &mut ChaCha8Rng) -> BiPoly {
    let mut p = BiPoly::zero();
    for _ in 0..rng.gen_range(0..3) {
        p.add_term(rng.gen_range(0..2), rng.gen_range(0..3), rat(rng.gen_range(-5..=5), rng.gen_range(1..=3)));
    }
    p
}

/// Confluence of normal ordering across swap schedules, and
/// `exp(hM) exp(-hM) = 1`, `cosh² - sinh² = 1` on random strictly
/// upper-triangular matrices.
pub fn selftest(seed: u64, cases: usize) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = VerificationReport::new(format!("selftest seed={seed}"));

    for pres in [Presentation::e2(), Presentation::e3()] {
        let mut bad: Option<Vec<usize>> = None;
        for _ in 0..cases {
            let len = rng.gen_range(0..=5);
            let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..pres.len())).collect();
            let left = rewrite_word(&pres, &word, Schedule::Leftmost);
            let agree = rewrite_word(&pres, &word, Schedule::Rightmost) == left
                && rewrite_word(&pres, &word, Schedule::Random(rng.gen())) == left
                && normal_order(&pres, &word, 2) == NCElement::from_poly(&pres, &left, 2);
            if !agree {
                bad = Some(word);
                break;
            }
        }
        let label = format!("{} confluence", pres.name());
        match bad {
            None => report.push(label, true, format!("{cases} words of length <= 5"), None),
            Some(w) => report.push(label, false, format!("schedules disagree on word {w:?}"), None),
        }
    }

    let mut bad: Option<String> = None;
    for _ in 0..cases {
        let d = rng.gen_range(1..=8);
        let m = PolyMatrix::from_fn(d, d, |i, j| if j > i { random_bipoly(&mut rng) } else { BiPoly::zero() });
        let id = PolyMatrix::identity(d);
        let e = nilpotent_apply(ElementaryFn::Exp, &m, 1).and_then(|e| Ok((e, nilpotent_apply(ElementaryFn::Exp, &-&m, 1)?)));
        let cs = nilpotent_apply(ElementaryFn::Cosh, &m, 1).and_then(|c| Ok((c, nilpotent_apply(ElementaryFn::Sinh, &m, 1)?)));
        let ok = match (e, cs) {
            (Ok((e, f)), Ok((c, s))) => &e * &f == id && &(&c * &c) - &(&s * &s) == id,
            _ => false,
        };
        if !ok {
            bad = Some(format!("fails on {m:?}"));
            break;
        }
    }
    match bad {
        None => report.push("nilpotent exp/cosh/sinh identities", true, format!("{cases} matrices up to 8x8"), None),
        Some(d) => report.push("nilpotent exp/cosh/sinh identities", false, d, None),
    }
    report
}
