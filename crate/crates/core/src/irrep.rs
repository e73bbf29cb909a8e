//! Finite-dimensional irreducible representations of `U_h(sl(2))`.
//!
//! Two constructions are provided:
//!
//! * **Verma basis**: quotient of the Verma module by the submodule generated
//!   by the singular vector at `λ = 2j`. Basis `w_0, …, w_{2j}` indexed by the
//!   power of `Y`.
//! * **Diagonal basis**: the nonlinear map from classical `sl(2)`,
//!   `X = (2/h) arctanh(h J₊/2)`, `Y = S J₋ S` with `S = sqrt(1 - h²J₊²/4)`,
//!   `H = J₀`. Basis ordered by descending weight `2j, 2j-2, …, -2j`.
//!
//! All matrices are exact polynomials in `h`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exact::{int, nilpotent_apply, rat, BiPoly, ElementaryFn, ExactError, PolyMatrix};
use crate::half::HalfInt;
use crate::par::{self, Execution};
use crate::report::VerificationReport;
use crate::verma::{build_table, ElementTable, VermaError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IrrepError {
    #[error("leading coefficient X_{n}^{m} vanishes at λ = {lambda}")]
    SingularLeadingElement { lambda: u32, n: usize, m: usize },
    #[error(transparent)]
    Verma(#[from] VermaError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Verma,
    Diagonal,
}

impl Basis {
    /// Human-readable description of the basis ordering.
    pub fn ordering(self) -> &'static str {
        match self {
            Basis::Verma => "w_0..w_{2j}, w_n = Y^n w_0",
            Basis::Diagonal => "weights descending 2j, 2j-2, ..., -2j",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Verma => "verma",
            Basis::Diagonal => "diagonal",
        })
    }
}

/// `w_s = w_{2j+1} + Σ_{p=1}^{[j]} C_p w_{2j-2p+1}` at `λ = 2j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularVector {
    pub j: HalfInt,
    /// `C_1 ..= C_{[j]}`, polynomials in `h` only.
    pub coeffs: Vec<BiPoly>,
}

impl SingularVector {
    /// Components `(level, coefficient)` in the Verma module, leading term first.
    pub fn components(&self) -> Vec<(usize, BiPoly)> {
        let top = self.j.twice() as usize + 1;
        let mut out = vec![(top, BiPoly::one())];
        for (p, c) in self.coeffs.iter().enumerate() {
            out.push((top - 2 * (p + 1), c.clone()));
        }
        out
    }

    /// `X·w_s` as coefficients of `w_0 ..= w_{2j}`, using a table
    /// already specialized at `λ = 2j`. Zero for a genuine singular vector.
    pub fn x_image(&self, table: &ElementTable) -> Result<Vec<BiPoly>, VermaError> {
        let top = self.j.twice() as usize + 1;
        let mut out = vec![BiPoly::zero(); top];
        for (n, c) in self.components() {
            for (m, slot) in out.iter_mut().enumerate().take(n) {
                *slot += &(&c * &table.x_elem(n as i64, m as i64)?);
            }
        }
        Ok(out)
    }

    /// `H·w_s - (λ - 2(2j+1)) w_s` as coefficients of `w_0 ..= w_{2j+1}`.
    pub fn h_eigen_residual(&self, table: &ElementTable) -> Result<Vec<BiPoly>, VermaError> {
        let top = self.j.twice() as usize + 1;
        let eigen = BiPoly::from_int(self.j.twice() as i64 - 2 * top as i64);
        let mut out = vec![BiPoly::zero(); top + 1];
        for (n, c) in self.components() {
            for (m, slot) in out.iter_mut().enumerate().take(n + 1) {
                *slot += &(&c * &table.h_elem(n as i64, m as i64)?);
            }
            out[n] -= &(&c * &eigen);
        }
        Ok(out)
    }
}

/// Solves the triangular system
/// `X_{2j+1}^{2j-2r} + Σ_{p≤r} C_p X_{2j+1-2p}^{2j-2r} = 0`, `r = 1..[j]`,
/// with all elements taken at `λ = 2j`.
pub fn singular_vector(j: HalfInt) -> Result<SingularVector, IrrepError> {
    singular_vector_from_table(j, &build_table(j.dim()))
}

/// As [`singular_vector`], reusing a table with symbolic `λ` and
/// `max_level ≥ 2j + 1`.
pub fn singular_vector_from_table(j: HalfInt, table: &ElementTable) -> Result<SingularVector, IrrepError> {
    let two_j = j.twice() as i64;
    let lambda = int(two_j);
    let x = |n: i64, m: i64| table.x_elem(n, m).map(|p| p.specialize_lambda(&lambda));
    let mut coeffs: Vec<BiPoly> = Vec::new();
    for r in 1..=j.floor() as i64 {
        let target = two_j - 2 * r;
        let mut rhs = x(two_j + 1, target)?;
        for (p, c) in coeffs.iter().enumerate() {
            let p = p as i64 + 1;
            rhs += &(c * &x(two_j + 1 - 2 * p, target)?);
        }
        let lead = x(two_j + 1 - 2 * r, target)?
            .as_constant()
            .filter(|c| *c != int(0))
            .ok_or(IrrepError::SingularLeadingElement {
                lambda: j.twice(),
                n: (two_j + 1 - 2 * r) as usize,
                m: target as usize,
            })?;
        coeffs.push(rhs.scale(&(-lead.recip())));
    }
    Ok(SingularVector { j, coeffs })
}

/// A `(2j+1)`-dimensional irrep: `[X,Y] = H`, `[H,X] = (2/h) sinh hX`,
/// `[H,Y] = -{Y, cosh hX}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Irrep {
    pub j: HalfInt,
    pub basis: Basis,
    pub x: PolyMatrix,
    pub y: PolyMatrix,
    pub h: PolyMatrix,
}

impl Irrep {
    pub fn dim(&self) -> usize {
        self.j.dim()
    }

    /// Same irrep with deformation parameter `-h`.
    pub fn negate_h(&self) -> Self {
        Self {
            j: self.j,
            basis: self.basis,
            x: self.x.negate_h(),
            y: self.y.negate_h(),
            h: self.h.negate_h(),
        }
    }

    /// `e^{hX}` and `e^{-hX}`.
    pub fn exp_pair(&self) -> Result<(PolyMatrix, PolyMatrix), ExactError> {
        Ok((
            nilpotent_apply(ElementaryFn::Exp, &self.x, 1)?,
            nilpotent_apply(ElementaryFn::Exp, &(-&self.x), 1)?,
        ))
    }
}

pub fn verma_basis_irrep(j: HalfInt) -> Result<Irrep, IrrepError> {
    verma_basis_irrep_from_table(j, &build_table(j.dim()))
}

/// Builds the Verma-basis irrep from a symbolic-`λ` table with
/// `max_level ≥ 2j + 1`.
pub fn verma_basis_irrep_from_table(j: HalfInt, table: &ElementTable) -> Result<Irrep, IrrepError> {
    let sv = singular_vector_from_table(j, table)?;
    let d = j.dim();
    let lambda = int(j.twice() as i64);
    let mut x = PolyMatrix::zeros(d, d);
    let mut h = PolyMatrix::zeros(d, d);
    for n in 0..d {
        for m in 0..=n {
            x.set(m, n, table.x_elem(n as i64, m as i64)?.specialize_lambda(&lambda));
            h.set(m, n, table.h_elem(n as i64, m as i64)?.specialize_lambda(&lambda));
        }
    }
    let mut y = PolyMatrix::zeros(d, d);
    for n in 0..d - 1 {
        y.set(n + 1, n, BiPoly::one());
    }
    // Y w_{2j} = -Σ C_p w_{2j-2p+1}
    for (p, c) in sv.coeffs.iter().enumerate() {
        let row = d - 2 * (p + 1);
        y.set(row, d - 1, -c);
    }
    Ok(Irrep {
        j,
        basis: Basis::Verma,
        x,
        y,
        h,
    })
}

/// Classical `sl(2)` with `[J₀,J±] = ±2J±`, `[J₊,J₋] = J₀`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalRep {
    pub j: HalfInt,
    pub j_plus: PolyMatrix,
    pub j_minus: PolyMatrix,
    pub j_zero: PolyMatrix,
}

/// `J₊ w_m = (j-m)(j+m+1) w_{m+1}`, `J₋ w_m = w_{m-1}`, `J₀ w_m = 2m w_m`,
/// basis ordered `w_j, w_{j-1}, …, w_{-j}`.
pub fn classical_rep(j: HalfInt) -> ClassicalRep {
    let d = j.dim();
    let two_j = j.twice() as i64;
    // Index i carries m = j - i, so (j-m)(j+m+1) = i (2j - i + 1) on column i.
    let j_plus = PolyMatrix::from_fn(d, d, |r, c| {
        if c == r + 1 {
            BiPoly::from_int(c as i64 * (two_j - c as i64 + 1))
        } else {
            BiPoly::zero()
        }
    });
    let j_minus = PolyMatrix::from_fn(d, d, |r, c| if r == c + 1 { BiPoly::one() } else { BiPoly::zero() });
    let j_zero = PolyMatrix::from_fn(d, d, |r, c| {
        if r == c {
            BiPoly::from_int(two_j - 2 * r as i64)
        } else {
            BiPoly::zero()
        }
    });
    ClassicalRep {
        j,
        j_plus,
        j_minus,
        j_zero,
    }
}

/// `X = (2/h) arctanh(hJ₊/2)`, `Y = S J₋ S` with `S = sqrt(1 - h²J₊²/4)`,
/// `H = J₀`. All series terminate because `J₊` is nilpotent.
pub fn map_to_deformed(c: &ClassicalRep) -> Result<Irrep, IrrepError> {
    let half_jp = c.j_plus.scale(&rat(1, 2));
    let x = nilpotent_apply(ElementaryFn::Arctanh, &half_jp, 1)?
        .scale(&int(2))
        .div_h_pow(1)?;
    let quarter_sq = (&c.j_plus * &c.j_plus).scale(&rat(-1, 4));
    let s = nilpotent_apply(ElementaryFn::Sqrt1p, &quarter_sq, 2)?;
    let y = &(&s * &c.j_minus) * &s;
    Ok(Irrep {
        j: c.j,
        basis: Basis::Diagonal,
        x,
        y,
        h: c.j_zero.clone(),
    })
}

pub fn diagonal_basis_irrep(j: HalfInt) -> Result<Irrep, IrrepError> {
    map_to_deformed(&classical_rep(j))
}

pub fn irrep(j: HalfInt, basis: Basis) -> Result<Irrep, IrrepError> {
    match basis {
        Basis::Verma => verma_basis_irrep(j),
        Basis::Diagonal => diagonal_basis_irrep(j),
    }
}

/// `(2/h) sinh(hX)` and `cosh(hX)` for strictly upper-triangular `X`.
pub fn sinh_cosh_terms(x: &PolyMatrix) -> Result<(PolyMatrix, PolyMatrix), ExactError> {
    let sinh = nilpotent_apply(ElementaryFn::Sinh, x, 1)?;
    let two_sinh_over_h = sinh.scale(&int(2)).div_h_pow(1)?;
    let cosh = nilpotent_apply(ElementaryFn::Cosh, x, 1)?;
    Ok((two_sinh_over_h, cosh))
}

/// Adds the three defining relations for a triple `(X, Y, H)` to `report`.
pub fn check_sl2_triple(report: &mut VerificationReport, prefix: &str, x: &PolyMatrix, y: &PolyMatrix, h: &PolyMatrix) {
    let label = |s: &str| if prefix.is_empty() { s.to_string() } else { format!("{prefix}{s}") };
    match sinh_cosh_terms(x) {
        Ok((two_sinh_over_h, cosh)) => {
            report.check_matrices(label("[H,X] = (2/h)sinh(hX)"), &h.commutator(x), &two_sinh_over_h);
            report.check_matrices(label("[H,Y] = -{Y,cosh(hX)}"), &h.commutator(y), &-&y.anticommutator(&cosh));
        }
        Err(e) => report.push(label("[H,X] = (2/h)sinh(hX)"), false, e.to_string(), None),
    }
    report.check_matrices(label("[X,Y] = H"), &x.commutator(y), h);
}

pub fn verify_sl2_relations(r: &Irrep) -> VerificationReport {
    let mut report = VerificationReport::new(format!("sl2 j={} basis={}", r.j, r.basis));
    check_sl2_triple(&mut report, "", &r.x, &r.y, &r.h);
    report
}

/// `C = (1/2h){Y, sinh hX} + H²/4 + (sinh hX)²/4` as a matrix.
pub fn casimir_matrix(r: &Irrep) -> Result<PolyMatrix, ExactError> {
    let sinh_over_h = nilpotent_apply(ElementaryFn::Sinh, &r.x, 1)?.div_h_pow(1)?;
    let quarter = rat(1, 4);
    let a = r.y.anticommutator(&sinh_over_h).scale(&rat(1, 2));
    let b = (&r.h * &r.h).scale(&quarter);
    let c = (&sinh_over_h * &sinh_over_h).mul_h_pow(2).scale(&quarter);
    Ok(&(&a + &b) + &c)
}

/// Whether the Casimir acts as a scalar, and the `(0,0)` entry.
pub fn casimir(r: &Irrep) -> Result<(bool, BiPoly), ExactError> {
    let c = casimir_matrix(r)?;
    let value = c.get(0, 0).clone();
    let scalar = c == PolyMatrix::scalar(r.dim(), &value);
    Ok((scalar, value))
}

/// Coefficients (ascending powers of `x`) of `Π_{n=0}^{2j} (x - (2j - 2n))`.
pub fn weight_polynomial(j: HalfInt) -> Vec<BiPoly> {
    let mut p = vec![BiPoly::one()];
    let two_j = j.twice() as i64;
    for n in 0..=two_j {
        let root = BiPoly::from_int(two_j - 2 * n);
        let mut next = vec![BiPoly::zero(); p.len() + 1];
        for (k, c) in p.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= &(c * &root);
        }
        p = next;
    }
    p
}

/// Relations, traces, `H` spectrum and Casimir for one irrep.
pub fn irrep_checks(r: &Irrep) -> VerificationReport {
    let mut report = verify_sl2_relations(r);
    for (name, m) in [("X", &r.x), ("Y", &r.y), ("H", &r.h)] {
        let t = m.trace();
        report.push(format!("tr {name} = 0"), t.is_zero(), if t.is_zero() { "exact".into() } else { format!("trace {t}") }, None);
    }
    match r.h.charpoly() {
        Ok(cp) => {
            let ok = cp == weight_polynomial(r.j);
            report.push("charpoly(H) = Π(x - (2j-2n))", ok, if ok { "exact" } else { "characteristic polynomial differs" }, None);
        }
        Err(e) => report.push("charpoly(H) = Π(x - (2j-2n))", false, e.to_string(), None),
    }
    match casimir(r) {
        Ok((scalar, value)) => {
            report.push("casimir is scalar", scalar, format!("c = {value}"), None);
            let c0 = value.at_h_zero();
            let want = r.j.casimir();
            report.push("casimir c(0) = j(j+1)", c0 == want, format!("c(0) = {c0}, j(j+1) = {want}"), None);
        }
        Err(e) => report.push("casimir is scalar", false, e.to_string(), None),
    }
    report
}

/// Runs [`irrep_checks`] for every `j ≤ j_max` in both bases. Independent
/// spins are processed under `exec`; the output order is fixed.
pub fn sweep_sl2(j_max: HalfInt, exec: Execution) -> Result<VerificationReport, IrrepError> {
    let table = build_table(j_max.dim());
    let spins: Vec<HalfInt> = j_max.up_to().collect();
    let parts = par::map(exec, &spins, |&j| -> Result<Vec<(String, VerificationReport)>, IrrepError> {
        let verma = verma_basis_irrep_from_table(j, &table)?;
        let diag = diagonal_basis_irrep(j)?;
        Ok(vec![
            (format!("j={j}/verma"), irrep_checks(&verma)),
            (format!("j={j}/diagonal"), irrep_checks(&diag)),
        ])
    });
    let mut report = VerificationReport::new(format!("sl2 relations j<={j_max}"));
    for part in parts {
        for (prefix, r) in part? {
            report.absorb(&prefix, r);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hp(c: i64, d: u32) -> BiPoly {
        BiPoly::monomial(int(c), 0, d)
    }

    fn j(two_j: u32) -> HalfInt {
        HalfInt::from_twice(two_j)
    }

    #[test]
    fn singular_vectors_low_spin() {
        assert!(singular_vector(j(0)).unwrap().coeffs.is_empty());
        assert!(singular_vector(j(1)).unwrap().coeffs.is_empty());
        assert_eq!(singular_vector(j(2)).unwrap().coeffs, vec![hp(1, 2)]);
        assert_eq!(singular_vector(j(4)).unwrap().coeffs, vec![hp(21, 2), hp(36, 4)]);
        assert_eq!(singular_vector(j(7)).unwrap().coeffs, vec![hp(252, 2), hp(14796, 4), hp(166320, 6)]);
    }

    #[test]
    fn spin_half_is_classical() {
        let r = verma_basis_irrep(j(1)).unwrap();
        let c = classical_rep(j(1));
        assert_eq!(r.x, c.j_plus);
        assert_eq!(r.y, c.j_minus);
        assert_eq!(r.h, c.j_zero);
        assert_eq!(diagonal_basis_irrep(j(1)).unwrap().x, c.j_plus);
    }

    #[test]
    fn spin_two_y_last_column() {
        let r = verma_basis_irrep(j(4)).unwrap();
        assert_eq!(r.y.get(3, 4), &hp(-21, 2));
        assert_eq!(r.y.get(1, 4), &hp(-36, 4));
    }

    #[test]
    fn classical_superdiagonals() {
        let c = classical_rep(j(7));
        let sup: Vec<BiPoly> = (0..7).map(|i| c.j_plus.get(i, i + 1).clone()).collect();
        let want: Vec<BiPoly> = [7, 12, 15, 16, 15, 12, 7].iter().map(|&v| BiPoly::from_int(v)).collect();
        assert_eq!(sup, want);
        let c1 = classical_rep(j(2));
        assert_eq!(c1.j_plus.get(0, 1), &BiPoly::from_int(2));
        assert_eq!(c1.j_plus.get(1, 2), &BiPoly::from_int(2));
        assert_eq!(c1.j_minus.get(1, 0), &BiPoly::one());
        let mut rep = VerificationReport::new("classical");
        rep.check_matrices("[J+,J-]", &c.j_plus.commutator(&c.j_minus), &c.j_zero);
        rep.check_matrices("[J0,J+]", &c.j_zero.commutator(&c.j_plus), &c.j_plus.scale(&int(2)));
        rep.check_matrices("[J0,J-]", &c.j_zero.commutator(&c.j_minus), &c.j_minus.scale(&int(-2)));
        assert!(rep.passed());
    }

    #[test]
    fn spin_one_map_by_hand() {
        // J₊³ = 0, so X = J₊ exactly; Y(0,1) = -h²/8 · (J₊²J₋ + J₋J₊²)(0,1).
        let c = classical_rep(j(2));
        let r = map_to_deformed(&c).unwrap();
        assert_eq!(r.x, c.j_plus);
        let jp2 = &c.j_plus * &c.j_plus;
        let s = (&(&jp2 * &c.j_minus) + &(&c.j_minus * &jp2)).get(0, 1).clone();
        assert_eq!(r.y.get(0, 1), &(s * BiPoly::monomial(rat(-1, 8), 0, 2)));
    }

    #[test]
    fn relations_hold_both_bases() {
        for two_j in [1, 4, 6, 7] {
            assert!(verify_sl2_relations(&verma_basis_irrep(j(two_j)).unwrap()).passed());
            assert!(verify_sl2_relations(&diagonal_basis_irrep(j(two_j)).unwrap()).passed());
        }
    }

    #[test]
    fn corrupted_irrep_fails_with_location() {
        let mut r = verma_basis_irrep(j(7)).unwrap();
        let v = r.y.get(6, 7).clone();
        r.y.set(6, 7, -v);
        let rep = verify_sl2_relations(&r);
        assert!(!rep.passed());
        let bad = rep.entry("[X,Y] = H").unwrap();
        assert!(bad.detail.contains("first mismatch"), "{}", bad.detail);
    }

    #[test]
    fn casimir_values() {
        let (scalar, c) = casimir(&verma_basis_irrep(j(1)).unwrap()).unwrap();
        assert!(scalar);
        assert_eq!(c, BiPoly::constant(rat(3, 4)));
        let (s1, c1) = casimir(&verma_basis_irrep(j(7)).unwrap()).unwrap();
        let (s2, c2) = casimir(&diagonal_basis_irrep(j(7)).unwrap()).unwrap();
        assert!(s1 && s2);
        assert_eq!(c1, c2);
        assert_eq!(c1.at_h_zero(), j(7).casimir());
    }

    #[test]
    fn singular_vector_annihilated() {
        let table = build_table(13);
        for two_j in 0..=12u32 {
            let sv = singular_vector_from_table(j(two_j), &table).unwrap();
            let sp = table.specialize(&int(two_j as i64));
            assert!(sv.x_image(&sp).unwrap().iter().all(BiPoly::is_zero), "λ={two_j}");
            assert!(sv.h_eigen_residual(&sp).unwrap().iter().all(BiPoly::is_zero), "λ={two_j}");
        }
    }

    #[test]
    fn sweep_small() {
        let r = sweep_sl2(j(4), Execution::Sequential).unwrap();
        assert!(r.passed(), "{:#?}", r.failures().collect::<Vec<_>>());
    }
}
