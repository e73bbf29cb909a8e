//! Matrix elements of the `U_h(sl(2))` action on the Verma module with
//! symbolic highest weight `λ`.
//!
//! With `w_n = Y^n w_0`, the action is
//!
//! ```text
//! X w_n = Σ_k X_n^{n-1-2k} w_{n-1-2k}        H w_n = Σ_k H_n^{n-2k} w_{n-2k}
//! ```
//!
//! `H_{m+2n}^m` and `X_{m+2n+1}^m` are homogeneous of degree `2n` in `h`.
//! They are computed degree by degree: the `h`-degree-`2n` layer of `H` is a
//! sum over odd compositions of `2n` of products of lower-degree `X`
//! elements, and each `X` is a partial sum of `H` elements. Elements with a
//! negative lower index are zero.

use std::collections::BTreeMap;

use crate::exact::rational::factorial;
use crate::exact::{int, rat, BiPoly, Rational};
use crate::par::{self, Execution};
use crate::report::VerificationReport;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VermaError {
    #[error("total {total} and part count {parts} must both be even")]
    BadParity { total: u32, parts: u32 },
    #[error("matrix element {kind}_{n}^{m} is not in the table")]
    MissingElement { kind: char, n: usize, m: usize },
}

/// Ordered tuple of positive odd integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OddComposition(Vec<u32>);

impl OddComposition {
    pub fn new(parts: Vec<u32>) -> Option<Self> {
        (!parts.is_empty() && parts.len().is_multiple_of(2) && parts.iter().all(|p| p % 2 == 1)).then_some(Self(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }
}

/// All compositions of `total` into `num_parts` positive odd parts, in
/// lexicographic order.
pub fn odd_compositions(total: u32, num_parts: u32) -> Result<Vec<OddComposition>, VermaError> {
    if total % 2 == 1 || num_parts % 2 == 1 || total == 0 || num_parts == 0 {
        return Err(VermaError::BadParity { total, parts: num_parts });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(num_parts as usize);
    fill(total, num_parts, &mut prefix, &mut out);
    Ok(out.into_iter().map(OddComposition).collect())
}

fn fill(rest: u32, parts_left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if parts_left == 0 {
        if rest == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    // A sum of k odd numbers is at least k and congruent to k mod 2.
    if rest < parts_left || (rest - parts_left) % 2 == 1 {
        return;
    }
    let max_first = rest - (parts_left - 1);
    for first in (1..=max_first).step_by(2) {
        prefix.push(first);
        fill(rest - first, parts_left - 1, prefix, out);
        prefix.pop();
    }
}

/// Memoized `H_n^m` and `X_n^m` for all levels `n ≤ max_level`, optionally
/// only up to a given `h`-degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementTable {
    max_level: usize,
    max_h_degree: usize,
    h: BTreeMap<(usize, usize), BiPoly>,
    x: BTreeMap<(usize, usize), BiPoly>,
}

impl ElementTable {
    fn empty(max_level: usize, max_h_degree: usize) -> Self {
        Self {
            max_level,
            max_h_degree,
            h: BTreeMap::new(),
            x: BTreeMap::new(),
        }
    }

    pub fn max_level(&self) -> usize {
        self.max_level
    }

    /// Highest `h`-degree stored.
    pub fn max_h_degree(&self) -> usize {
        self.max_h_degree
    }

    /// `H_n^m`; zero outside `0 ≤ m ≤ n` with `n - m` even.
    pub fn h_elem(&self, n: i64, m: i64) -> Result<BiPoly, VermaError> {
        if m < 0 || m > n || (n - m) % 2 != 0 {
            return Ok(BiPoly::zero());
        }
        let key = (n as usize, m as usize);
        self.h
            .get(&key)
            .cloned()
            .ok_or(VermaError::MissingElement { kind: 'H', n: key.0, m: key.1 })
    }

    /// `X_n^m`; zero outside `0 ≤ m < n` with `n - m` odd.
    pub fn x_elem(&self, n: i64, m: i64) -> Result<BiPoly, VermaError> {
        if m < 0 || m >= n || (n - m) % 2 == 0 {
            return Ok(BiPoly::zero());
        }
        let key = (n as usize, m as usize);
        self.x
            .get(&key)
            .cloned()
            .ok_or(VermaError::MissingElement { kind: 'X', n: key.0, m: key.1 })
    }

    /// Stored `H` elements keyed by `(n, m)`.
    pub fn h_elements(&self) -> &BTreeMap<(usize, usize), BiPoly> {
        &self.h
    }

    pub fn x_elements(&self) -> &BTreeMap<(usize, usize), BiPoly> {
        &self.x
    }

    /// Stored elements whose `h`-degree differs from the one dictated by their
    /// level gap. Empty for a correct table.
    pub fn homogeneity_violations(&self) -> Vec<(char, usize, usize)> {
        let h = self
            .h
            .iter()
            .filter(|(&(n, m), p)| !p.is_h_homogeneous((n - m) as u32))
            .map(|(&(n, m), _)| ('H', n, m));
        let x = self
            .x
            .iter()
            .filter(|(&(n, m), p)| !p.is_h_homogeneous((n - m - 1) as u32))
            .map(|(&(n, m), _)| ('X', n, m));
        h.chain(x).collect()
    }

    /// Every element with `λ` replaced by `value`.
    pub fn specialize(&self, value: &Rational) -> Self {
        let sp = |m: &BTreeMap<(usize, usize), BiPoly>| {
            m.iter().map(|(k, p)| (*k, p.specialize_lambda(value))).collect()
        };
        Self {
            max_level: self.max_level,
            max_h_degree: self.max_h_degree,
            h: sp(&self.h),
            x: sp(&self.x),
        }
    }
}

/// `Z_{m,2n,δ,Δ}`: the product of the `X` elements along the chain that
/// starts at level `m + 2n - δ` and descends by `Δ_1, Δ_2, …` down to
/// `m - δ`. A chain that would end below `w_0` contributes zero.
pub fn z_product(m: i64, two_n: u32, delta: u8, comp: &OddComposition, table: &ElementTable) -> Result<BiPoly, VermaError> {
    let mut level = m + two_n as i64 - delta as i64;
    if level - comp.total() as i64 != m - delta as i64 {
        // Composition of the wrong total; nothing links the two levels.
        return Ok(BiPoly::zero());
    }
    if m - (delta as i64) < 0 {
        return Ok(BiPoly::zero());
    }
    let mut acc = BiPoly::one();
    for &step in comp.parts() {
        let next = level - step as i64;
        let x = table.x_elem(level, next)?;
        if x.is_zero() {
            return Ok(BiPoly::zero());
        }
        acc = &acc * &x;
        level = next;
    }
    Ok(acc)
}

/// All even-part-count odd compositions of `two_n`, grouped by half the part
/// count `k` and paired with the weight `h^{2k} / (2k)!`.
fn weighted_compositions(two_n: u32) -> Vec<(BiPoly, Vec<OddComposition>)> {
    (1..=two_n / 2)
        .map(|k| {
            let weight = BiPoly::monomial(factorial(2 * k).recip(), 0, 2 * k);
            let comps = odd_compositions(two_n, 2 * k).expect("even arguments");
            (weight, comps)
        })
        .collect()
}

/// `Σ_k h^{2k}/(2k)! Σ_Δ Z_{l,2n,0,Δ}`.
fn weighted_z_sum(l: i64, two_n: u32, groups: &[(BiPoly, Vec<OddComposition>)], table: &ElementTable) -> Result<BiPoly, VermaError> {
    let mut total = BiPoly::zero();
    for (weight, comps) in groups {
        let mut inner = BiPoly::zero();
        for comp in comps {
            inner += &z_product(l, two_n, 0, comp, table)?;
        }
        total += &(&inner * weight);
    }
    Ok(total)
}

/// `H_{m+2n}^m`. For `2n = 0` this is `λ - 2m`; otherwise
///
/// ```text
/// H_{m+2n}^m = -Σ_k h^{2k}/(2k)! Σ_Δ ( 2 Σ_{l<m} Z_{l,2n,0,Δ} + Z_{m,2n,0,Δ} )
/// ```
///
/// with the `h`-weights on the `l < m` and `l = m` terms exactly as above.
pub fn h_element(m: usize, two_n: u32, table: &ElementTable) -> Result<BiPoly, VermaError> {
    if two_n == 0 {
        return Ok(&BiPoly::lambda() - &BiPoly::from_int(2 * m as i64));
    }
    let groups = weighted_compositions(two_n);
    let mut acc = weighted_z_sum(m as i64, two_n, &groups, table)?;
    for l in 0..m {
        acc += &weighted_z_sum(l as i64, two_n, &groups, table)?.scale(&int(2));
    }
    Ok(-acc)
}

/// `X_{m+2n+1}^m = Σ_{k=0}^m H_{k+2n}^k`.
pub fn x_element(m: usize, two_n: u32, table: &ElementTable) -> Result<BiPoly, VermaError> {
    let mut acc = BiPoly::zero();
    for k in 0..=m {
        acc += &table.h_elem((k + two_n as usize) as i64, k as i64)?;
    }
    Ok(acc)
}

/// Builds the full table up to `max_level`.
pub fn build_table(max_level: usize) -> ElementTable {
    build_table_with(max_level, max_level, Execution::default())
}

/// Builds all elements with level `≤ max_level` and `h`-degree
/// `≤ max_h_degree`, one degree layer at a time. Within a layer the
/// composition sums for different lower indices are independent and are
/// computed under `exec`.
pub fn build_table_with(max_level: usize, max_h_degree: usize, exec: Execution) -> ElementTable {
    let max_h_degree = max_h_degree.min(max_level);
    let mut table = ElementTable::empty(max_level, max_h_degree);
    for two_n in (0..=max_h_degree).step_by(2) {
        let count = max_level + 1 - two_n;
        if two_n == 0 {
            for m in 0..count {
                table.h.insert((m, m), h_element(m, 0, &table).expect("base layer"));
            }
        } else {
            let groups = weighted_compositions(two_n as u32);
            let sums = par::map_range(exec, 0..count, |l| {
                weighted_z_sum(l as i64, two_n as u32, &groups, &table).expect("lower layers are complete")
            });
            let mut prefix = BiPoly::zero();
            for (m, w) in sums.iter().enumerate() {
                let value = -(&prefix.scale(&int(2)) + w);
                table.h.insert((m + two_n, m), value);
                prefix += w;
            }
        }
        // X_{m+2n+1}^m as running sums of this layer's H elements.
        let mut running = BiPoly::zero();
        for m in 0..max_level.saturating_sub(two_n) {
            running += &table.h[&(m + two_n, m)];
            table.x.insert((m + two_n + 1, m), running.clone());
        }
    }
    table
}

/// The four closed forms for the `O(h²)` and `O(h⁴)` layers, as polynomials
/// in `λ` without the power of `h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    /// `H_{n+2}^n / h²`
    Rho2,
    /// `X_{n+3}^n / h²`
    Sigma2,
    /// `H_{n+4}^n / h⁴`
    Rho4,
    /// `X_{n+5}^n / h⁴`
    Sigma4,
}

fn lam_minus(k: i64) -> BiPoly {
    &BiPoly::lambda() - &BiPoly::from_int(k)
}

/// `(λ-k)(λ-k-1)…(λ-k-d+1)`.
fn falling(k: i64, d: i64) -> BiPoly {
    (0..d).fold(BiPoly::one(), |acc, i| &acc * &lam_minus(k + i))
}

fn rho2_term(k: i64) -> BiPoly {
    BiPoly::from_int((k + 1) * (k + 2)) * falling(k, 2)
}

fn rho4_term(k: i64) -> BiPoly {
    // 2·4!·C(k+4,4)·C(λ-k,4), the second binomial read as a falling factorial.
    let binom_k = (k + 1) * (k + 2) * (k + 3) * (k + 4) / 24;
    let a = BiPoly::from_int(k + 4) * lam_minus(k + 3) * closed_form_oracle(ClosedForm::Sigma2, k as usize);
    let b = BiPoly::from_int(k + 1) * lam_minus(k) * closed_form_oracle(ClosedForm::Sigma2, k as usize + 1);
    let c = falling(k, 4).scale(&int(2 * binom_k));
    a + b + c
}

pub fn closed_form_oracle(kind: ClosedForm, n: usize) -> BiPoly {
    let n = n as i64;
    let half = rat(1, 2);
    match kind {
        ClosedForm::Rho2 => {
            let sum: BiPoly = (0..n).map(rho2_term).sum();
            -(sum + rho2_term(n).scale(&half))
        }
        ClosedForm::Sigma2 => (0..=n).map(|k| closed_form_oracle(ClosedForm::Rho2, k as usize)).sum(),
        ClosedForm::Rho4 => {
            let sum: BiPoly = (0..n).map(rho4_term).sum();
            -(sum + rho4_term(n).scale(&half))
        }
        ClosedForm::Sigma4 => (0..=n).map(|k| closed_form_oracle(ClosedForm::Rho4, k as usize)).sum(),
    }
}

/// Checks the four closed forms against the recursion for `n ≤ n_max`,
/// with `λ` symbolic. The table is built only through `h⁴`.
pub fn verify_closed_forms(n_max: usize, exec: Execution) -> VerificationReport {
    let table = build_table_with(n_max + 5, 4, exec);
    let mut report = VerificationReport::new(format!("closed forms n<={n_max}"));
    let cases = [
        (ClosedForm::Rho2, "H_{n+2}^n = h^2 rho2(n)", 'H', 2usize, 2u32),
        (ClosedForm::Sigma2, "X_{n+3}^n = h^2 sigma2(n)", 'X', 3, 2),
        (ClosedForm::Rho4, "H_{n+4}^n = h^4 rho4(n)", 'H', 4, 4),
        (ClosedForm::Sigma4, "X_{n+5}^n = h^4 sigma4(n)", 'X', 5, 4),
    ];
    for (kind, label, sym, shift, h_pow) in cases {
        let bad = (0..=n_max).find_map(|n| {
            let elem = match sym {
                'H' => table.h_elem((n + shift) as i64, n as i64),
                _ => table.x_elem((n + shift) as i64, n as i64),
            };
            let want = closed_form_oracle(kind, n).mul_h_pow(h_pow);
            match elem {
                Ok(got) if got == want => None,
                Ok(got) => Some(format!("n={n}: recursion {got}, closed form {want}")),
                Err(e) => Some(format!("n={n}: {e}")),
            }
        });
        match bad {
            None => report.push(label, true, format!("exact for n = 0..={n_max}"), None),
            Some(d) => report.push(label, false, d, None),
        }
    }
    report
}
