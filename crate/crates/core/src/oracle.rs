//! Brute-force Verma action, independent of the recursion relations.
//!
//! With `w_n = Y^n w_0`, `X w_0 = 0` and `H w_0 = λ w_0`:
//!
//! ```text
//! X w_n = ([X,Y] + YX) w_{n-1} = H w_{n-1} + Y X w_{n-1}
//! H w_n = ([H,Y] + YH) w_{n-1} = -(Y cosh(hX) + cosh(hX) Y) w_{n-1} + Y H w_{n-1}
//! ```
//!
//! `cosh(hX)` terminates because `X` lowers the level.

use crate::exact::{factorial, BiPoly};
use crate::report::VerificationReport;
use crate::verma::ElementTable;

/// Columns of `X` and `H` on `w_0 ..= w_L`: `x[n][m]` is the coefficient of
/// `w_m` in `X w_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectAction {
    pub x: Vec<Vec<BiPoly>>,
    pub h: Vec<Vec<BiPoly>>,
}

impl DirectAction {
    pub fn max_level(&self) -> usize {
        self.x.len() - 1
    }

    /// `X v` for a vector supported on levels `< len(x)`.
    fn apply_x(&self, v: &[BiPoly]) -> Vec<BiPoly> {
        let mut out = vec![BiPoly::zero(); v.len()];
        for (n, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (m, e) in self.x[n].iter().enumerate() {
                if !e.is_zero() {
                    out[m] += &(c * e);
                }
            }
        }
        out
    }

    /// `cosh(hX) v`.
    fn apply_cosh(&self, v: &[BiPoly]) -> Vec<BiPoly> {
        let mut out = v.to_vec();
        let mut power = v.to_vec();
        let mut k = 0u32;
        loop {
            power = self.apply_x(&self.apply_x(&power));
            k += 2;
            if power.iter().all(BiPoly::is_zero) {
                return out;
            }
            let scale = factorial(k).recip();
            for (o, p) in out.iter_mut().zip(&power) {
                *o += &p.scale(&scale).mul_h_pow(k);
            }
        }
    }
}

fn shift_up(v: &[BiPoly], len: usize) -> Vec<BiPoly> {
    let mut out = vec![BiPoly::zero(); len];
    for (n, c) in v.iter().enumerate() {
        if n + 1 < len {
            out[n + 1] = c.clone();
        }
    }
    out
}

/// Builds the action on `w_0 ..= w_L` with symbolic `λ`.
pub fn direct_action(max_level: usize) -> DirectAction {
    let len = max_level + 1;
    let mut act = DirectAction {
        x: Vec::with_capacity(len),
        h: Vec::with_capacity(len),
    };
    let mut h0 = vec![BiPoly::zero(); len];
    h0[0] = BiPoly::lambda();
    act.x.push(vec![BiPoly::zero(); len]);
    act.h.push(h0);
    for n in 1..len {
        let prev = n - 1;
        // X w_n = H w_{n-1} + Y (X w_{n-1})
        let mut xn = act.h[prev].clone();
        for (o, s) in xn.iter_mut().zip(shift_up(&act.x[prev], len)) {
            *o += &s;
        }
        act.x.push(xn);
        // H w_n = -Y cosh(hX) w_{n-1} - cosh(hX) w_n + Y H w_{n-1}
        let mut wn = vec![BiPoly::zero(); len];
        wn[n] = BiPoly::one();
        let mut w_prev = vec![BiPoly::zero(); len];
        w_prev[prev] = BiPoly::one();
        let a = shift_up(&act.apply_cosh(&w_prev), len);
        let b = act.apply_cosh(&wn);
        let c = shift_up(&act.h[prev], len);
        let hn = (0..len).map(|m| &(&c[m] - &a[m]) - &b[m]).collect();
        act.h.push(hn);
    }
    act
}

/// Compares every `X_n^m`, `H_n^m` with `n ≤ L` against the table.
pub fn compare_with_table(act: &DirectAction, table: &ElementTable) -> VerificationReport {
    let mut report = VerificationReport::new(format!("direct action vs recursion, levels <= {}", act.max_level()));
    let mut first_bad: Option<String> = None;
    let mut count = 0usize;
    for n in 0..=act.max_level() {
        for m in 0..=act.max_level() {
            for (kind, col, get) in [
                ('X', &act.x, ElementTable::x_elem as fn(&ElementTable, i64, i64) -> _),
                ('H', &act.h, ElementTable::h_elem),
            ] {
                count += 1;
                let want = match get(table, n as i64, m as i64) {
                    Ok(v) => v,
                    Err(e) => {
                        first_bad.get_or_insert(format!("{kind}_{n}^{m}: {e}"));
                        continue;
                    }
                };
                if col[n][m] != want {
                    first_bad.get_or_insert(format!("{kind}_{n}^{m}: direct {} vs recursion {want}", col[n][m]));
                }
            }
        }
    }
    match first_bad {
        None => report.push("all elements agree", true, format!("{count} elements exact"), None),
        Some(d) => report.push("all elements agree", false, d, None),
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::verma::build_table;

    #[test]
    fn low_levels_by_hand() {
        let a = direct_action(2);
        let l = BiPoly::lambda();
        assert_eq!(a.x[1][0], l);
        assert_eq!(a.h[1][1], &l - &BiPoly::from_int(2));
        // X_2^1 = 2(λ-1)
        assert_eq!(a.x[2][1], (&l - &BiPoly::one()).scale(&int(2)));
    }

    #[test]
    fn agrees_with_recursion() {
        let act = direct_action(8);
        let r = compare_with_table(&act, &build_table(8));
        assert!(r.passed(), "{:?}", r.entries);
    }

    #[test]
    fn detects_a_tampered_table() {
        let act = direct_action(4);
        let mut bad = act.clone();
        bad.h[4][0] = BiPoly::zero();
        assert!(!compare_with_table(&bad, &build_table(4)).passed());
    }
}
