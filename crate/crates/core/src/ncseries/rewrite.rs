//! Independent normal ordering by adjacent swaps on words. Used as an oracle
//! for the memoized engine and to sample confluence across swap schedules.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{int, Rational};

use super::presentation::{poly_add_scaled, Monomial, Poly, Presentation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Schedule {
    /// Always swap the leftmost out-of-order pair.
    Leftmost,
    /// Always swap the rightmost out-of-order pair.
    Rightmost,
    /// Pick uniformly among out-of-order pairs.
    Random(u64),
}

/// Rewrites `word` to PBW normal form with `g_a g_b → g_b g_a + [g_a, g_b]`.
pub fn rewrite_word(pres: &Presentation, word: &[usize], schedule: Schedule) -> Poly {
    let n = pres.len();
    let mut rng = match schedule {
        Schedule::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut pending: Vec<(Rational, Vec<usize>)> = vec![(int(1), word.to_vec())];
    let mut done = Poly::new();
    while let Some((c, w)) = pending.pop() {
        let inversions: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&i| w[i] > w[i + 1]).collect();
        let Some(&first) = inversions.first() else {
            let mut e = vec![0u32; n];
            for &g in &w {
                e[g] += 1;
            }
            poly_add_scaled(&mut done, &Poly::from([(Monomial(e), int(1))]), &c);
            continue;
        };
        let i = match (schedule, rng.as_mut()) {
            (Schedule::Leftmost, _) => first,
            (Schedule::Rightmost, _) => *inversions.last().expect("non-empty"),
            (Schedule::Random(_), Some(r)) => inversions[r.gen_range(0..inversions.len())],
            (Schedule::Random(_), None) => unreachable!(),
        };
        let (a, b) = (w[i], w[i + 1]);
        let mut swapped = w.clone();
        swapped.swap(i, i + 1);
        pending.push((c.clone(), swapped));
        for (m, k) in pres.bracket(a, b) {
            let mut nw = w[..i].to_vec();
            nw.extend(m.word());
            nw.extend_from_slice(&w[i + 2..]);
            pending.push((&c * k, nw));
        }
    }
    done
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schedules_agree_with_engine() {
        let p = Presentation::e3();
        let word = [5, 2, 4, 0, 1];
        let engine = word.iter().skip(1).fold(
            Poly::from([(Monomial::generator(6, word[0]), int(1))]),
            |acc, &g| p.mul_poly(&acc, &Poly::from([(Monomial::generator(6, g), int(1))])),
        );
        for s in [Schedule::Leftmost, Schedule::Rightmost, Schedule::Random(7)] {
            assert_eq!(rewrite_word(&p, &word, s), engine, "{s:?}");
        }
    }
}
