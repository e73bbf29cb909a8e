//! `U_h(so(4)) = U_h(sl(2)) ⊕ U_{-h}(sl(2))` on `V_{j1} ⊗ V_{j2}`.
//!
//! Copy 1 carries `h` (θ = +1), copy 2 carries `-h` (θ = -1). The composite
//! generators are
//!
//! ```text
//! J₊ = X₁ + X₂                     K₊ = X₁ - X₂
//! J₋ = Y₁e^{hX₂} + e^{-hX₁}Y₂      K₋ = Y₁e^{hX₂} - e^{-hX₁}Y₂
//! J₀ = H₁e^{hX₂} + e^{-hX₁}H₂      K₀ = H₁e^{hX₂} - e^{-hX₁}H₂
//! ```

use crate::exact::{int, nilpotent_apply, rat, ElementaryFn, ExactError, PolyMatrix, Rational};
use crate::half::HalfInt;
use crate::hopf::{Expr, Gen, Letter, LetterRep, TensorExpr};
use crate::irrep::{casimir_matrix, check_sl2_triple, diagonal_basis_irrep, IrrepError};
use crate::par::{self, Execution};
use crate::report::VerificationReport;

const COPY1: u8 = 1;
const COPY2: u8 = 2;

fn l1(g: Gen) -> Expr {
    Expr::letter(Letter::new(COPY1, 1, g))
}

fn l2(g: Gen) -> Expr {
    Expr::letter(Letter::new(COPY2, -1, g))
}

/// The six composite generators as words in the per-copy letters.
#[derive(Debug, Clone)]
pub struct So4Words {
    pub j_plus: Expr,
    pub j_minus: Expr,
    pub j_zero: Expr,
    pub k_plus: Expr,
    pub k_minus: Expr,
    pub k_zero: Expr,
    pub cosh_j_plus: Expr,
    pub sinh_j_plus: Expr,
    /// `e^{-hK₊}`
    pub exp_neg_k_plus: Expr,
}

impl So4Words {
    pub fn new() -> Self {
        let e2 = l2(Gen::ExpPos);
        let e1n = l1(Gen::ExpNeg);
        let pair = |g: Gen, sign: i64| l1(g).mul(&e2).add(&e1n.mul(&l2(g)).scale(&int(sign)));
        let pp = l1(Gen::ExpPos).mul(&l2(Gen::ExpPos));
        let nn = l1(Gen::ExpNeg).mul(&l2(Gen::ExpNeg));
        Self {
            j_plus: l1(Gen::X).add(&l2(Gen::X)),
            k_plus: l1(Gen::X).sub(&l2(Gen::X)),
            j_minus: pair(Gen::Y, 1),
            k_minus: pair(Gen::Y, -1),
            j_zero: pair(Gen::H, 1),
            k_zero: pair(Gen::H, -1),
            cosh_j_plus: pp.add(&nn).scale(&rat(1, 2)),
            sinh_j_plus: pp.sub(&nn).scale(&rat(1, 2)),
            exp_neg_k_plus: l1(Gen::ExpNeg).mul(&l2(Gen::ExpPos)),
        }
    }

    pub fn generators(&self) -> [(&'static str, &Expr); 6] {
        [
            ("J+", &self.j_plus),
            ("J-", &self.j_minus),
            ("J0", &self.j_zero),
            ("K+", &self.k_plus),
            ("K-", &self.k_minus),
            ("K0", &self.k_zero),
        ]
    }

    /// Coproducts as printed: primitive for `J₊, K₊`, and for the others
    /// `A⊗cosh(hJ₊) + e^{-hK₊}⊗A + B⊗sinh(hJ₊)` with `B` the partner of `A`.
    pub fn printed_coproduct(&self, name: &str) -> TensorExpr {
        let one = Expr::one();
        let prim = |a: &Expr| TensorExpr::tensor(a, &one).add(&TensorExpr::tensor(&one, a));
        let twisted = |a: &Expr, b: &Expr| {
            TensorExpr::tensor(a, &self.cosh_j_plus)
                .add(&TensorExpr::tensor(&self.exp_neg_k_plus, a))
                .add(&TensorExpr::tensor(b, &self.sinh_j_plus))
        };
        match name {
            "J+" => prim(&self.j_plus),
            "K+" => prim(&self.k_plus),
            "J-" => twisted(&self.j_minus, &self.k_minus),
            "K-" => twisted(&self.k_minus, &self.j_minus),
            "J0" => twisted(&self.j_zero, &self.k_zero),
            "K0" => twisted(&self.k_zero, &self.j_zero),
            _ => panic!("unknown so(4) generator {name}"),
        }
    }
}

impl Default for So4Words {
    fn default() -> Self {
        Self::new()
    }
}

#[derive(Debug, Clone)]
pub struct So4Rep {
    pub j1: HalfInt,
    pub j2: HalfInt,
    pub j_plus: PolyMatrix,
    pub j_minus: PolyMatrix,
    pub j_zero: PolyMatrix,
    pub k_plus: PolyMatrix,
    pub k_minus: PolyMatrix,
    pub k_zero: PolyMatrix,
    /// Per-copy letters on the tensor space.
    pub letters: LetterRep,
    /// Per-copy Casimirs `C(h)⊗1` and `1⊗C(-h)`.
    pub casimirs: [PolyMatrix; 2],
}

impl So4Rep {
    pub fn dim(&self) -> usize {
        self.j1.dim() * self.j2.dim()
    }

    pub fn generators(&self) -> [(&'static str, &PolyMatrix); 6] {
        [
            ("J+", &self.j_plus),
            ("J-", &self.j_minus),
            ("J0", &self.j_zero),
            ("K+", &self.k_plus),
            ("K-", &self.k_minus),
            ("K0", &self.k_zero),
        ]
    }

    /// `(cosh hJ₊, sinh hJ₊, e^{-hK₊}, e^{hK₊}, e^{-hJ₊}, e^{hJ₊})`
    fn functions(&self) -> Result<[PolyMatrix; 6], ExactError> {
        let neg_k = -&self.k_plus;
        let neg_j = -&self.j_plus;
        Ok([
            nilpotent_apply(ElementaryFn::Cosh, &self.j_plus, 1)?,
            nilpotent_apply(ElementaryFn::Sinh, &self.j_plus, 1)?,
            nilpotent_apply(ElementaryFn::Exp, &neg_k, 1)?,
            nilpotent_apply(ElementaryFn::Exp, &self.k_plus, 1)?,
            nilpotent_apply(ElementaryFn::Exp, &neg_j, 1)?,
            nilpotent_apply(ElementaryFn::Exp, &self.j_plus, 1)?,
        ])
    }
}

pub fn build_so4(j1: HalfInt, j2: HalfInt) -> Result<So4Rep, IrrepError> {
    let r1 = diagonal_basis_irrep(j1)?;
    let r2 = diagonal_basis_irrep(j2)?.negate_h();
    let (d1, d2) = (r1.dim(), r2.dim());
    let mut letters = LetterRep {
        dim: d1 * d2,
        matrices: Default::default(),
    };
    letters.insert_copy(&r1, COPY1, 1, Some((false, d2)))?;
    letters.insert_copy(&r2, COPY2, -1, Some((true, d1)))?;
    let words = So4Words::new();
    let casimirs = [
        casimir_matrix(&r1)?.kron(&PolyMatrix::identity(d2)),
        PolyMatrix::identity(d1).kron(&casimir_matrix(&r2)?),
    ];
    Ok(So4Rep {
        j1,
        j2,
        j_plus: words.j_plus.eval(&letters)?,
        j_minus: words.j_minus.eval(&letters)?,
        j_zero: words.j_zero.eval(&letters)?,
        k_plus: words.k_plus.eval(&letters)?,
        k_minus: words.k_minus.eval(&letters)?,
        k_zero: words.k_zero.eval(&letters)?,
        letters,
        casimirs,
    })
}

fn two_over_h(m: &PolyMatrix) -> Result<PolyMatrix, ExactError> {
    m.scale(&int(2)).div_h_pow(1)
}

fn h_times(c: Rational, m: &PolyMatrix) -> PolyMatrix {
    m.mul_h_pow(1).scale(&c)
}

/// Every bracket of the `U_h(so(4))` algebra as an exact matrix identity.
pub fn verify_so4_relations(r: &So4Rep) -> VerificationReport {
    let mut report = VerificationReport::new(format!("so4 relations j1={} j2={}", r.j1, r.j2));
    if let Err(e) = so4_relations_into(r, &mut report) {
        report.push("so4 relations", false, e.to_string(), None);
    }
    report
}

fn so4_relations_into(r: &So4Rep, report: &mut VerificationReport) -> Result<(), ExactError> {
    let (jp, jm, j0) = (&r.j_plus, &r.j_minus, &r.j_zero);
    let (kp, km, k0) = (&r.k_plus, &r.k_minus, &r.k_zero);
    let [cosh, sinh, e_nk, _e_k, e_nj, e_j] = r.functions()?;
    let two_sinh_h = two_over_h(&sinh)?;

    report.check_matrices("[J0,J+] = (2/h)sinh(hJ+)", &j0.commutator(jp), &two_sinh_h);
    report.check_matrices("[K0,K+] = (2/h)sinh(hJ+)", &k0.commutator(kp), &two_sinh_h);
    report.check_matrices("[J0,J-] = -{J-,cosh(hJ+)}", &j0.commutator(jm), &-&jm.anticommutator(&cosh));
    report.check_matrices("[J+,J-] = J0", &jp.commutator(jm), j0);
    report.check_matrices("[K+,K-] = J0", &kp.commutator(km), j0);
    report.check_matrices(
        "[K0,K-] = -{J-,e^{-hK+}} - {K-,sinh(hJ+)}",
        &k0.commutator(km),
        &-&(&jm.anticommutator(&e_nk) + &km.anticommutator(&sinh)),
    );
    let c_minus_e = two_over_h(&(&cosh - &e_nk))?;
    report.check_matrices("[J0,K+] = (2/h)(cosh(hJ+) - e^{-hK+})", &j0.commutator(kp), &c_minus_e);
    report.check_matrices("[K0,J+] = (2/h)(cosh(hJ+) - e^{-hK+})", &k0.commutator(jp), &c_minus_e);

    let a = (j0 + k0).anticommutator(&e_nj);
    let j0_minus_k0 = j0 - k0;
    let b = j0_minus_k0.anticommutator(&e_j);
    let ab = &a * &b;
    report.check_matrices(
        "[J0,K-] = -{K-,cosh(hJ+)} - (h/8)AB",
        &j0.commutator(km),
        &(&-&km.anticommutator(&cosh) - &h_times(rat(1, 8), &ab)),
    );
    report.check_matrices(
        "[K0,J-] = -{K-,e^{-hK+}} - {J-,sinh(hJ+)} + (h/8)AB",
        &k0.commutator(jm),
        &(&-&(&km.anticommutator(&e_nk) + &jm.anticommutator(&sinh)) + &h_times(rat(1, 8), &ab)),
    );
    report.check_matrices("[J+,K-] = K0", &jp.commutator(km), k0);
    report.check_matrices("[K+,J-] = K0", &kp.commutator(jm), k0);
    report.check_matrices("[J+,K+] = 0", &jp.commutator(kp), &PolyMatrix::zeros(r.dim(), r.dim()));

    // Printed with the trailing e^{hJ+} on the second group.
    let conj = &(&e_nj * &j0_minus_k0) * &e_j;
    let first = &(jm + km) * &(&conj + &j0_minus_k0);
    let second = &(&a * &(jm - km)) * &e_j;
    report.check_matrices(
        "[J-,K-] = -(h/4)(J-+K-)(e^{-hJ+}(J0-K0)e^{hJ+} + (J0-K0)) - (h/4)A(J--K-)e^{hJ+}",
        &jm.commutator(km),
        &-&h_times(rat(1, 4), &(&first + &second)),
    );
    report.check_matrices(
        "[J0,K0] = 2J0 sinh(hJ+) + 2K0(e^{-hK+} - cosh(hJ+))",
        &j0.commutator(k0),
        &(&(j0 * &sinh).scale(&int(2)) + &(k0 * &(&e_nk - &cosh)).scale(&int(2))),
    );
    Ok(())
}

/// Coproducts built two ways on `V_left ⊗ V_right`: (a) from the printed
/// formulas using matrix functions of `J₊, K₊`; (b) by applying per-copy
/// coproducts to the defining words. Also counit and antipode.
pub fn verify_so4_coalgebra(left: &So4Rep, right: &So4Rep) -> VerificationReport {
    let mut report = VerificationReport::new(format!(
        "so4 coalgebra ({},{})⊗({},{})",
        left.j1, left.j2, right.j1, right.j2
    ));
    if (left.j1, left.j2) != (right.j1, right.j2) {
        report.push("same (j1,j2) on both factors", false, "factors differ", None);
        return report;
    }
    if let Err(e) = so4_coalgebra_into(left, right, &mut report) {
        report.push("so4 coalgebra", false, e.to_string(), None);
    }
    report
}

fn so4_coalgebra_into(left: &So4Rep, right: &So4Rep, report: &mut VerificationReport) -> Result<(), ExactError> {
    let words = So4Words::new();
    let [cosh_l, sinh_l, e_nk_l, e_k_l, ..] = left.functions()?;
    let [cosh_r, sinh_r, ..] = right.functions()?;
    let id_l = PolyMatrix::identity(left.dim());
    let id_r = PolyMatrix::identity(right.dim());
    let partner = |name: &str| match name {
        "J-" => "K-",
        "K-" => "J-",
        "J0" => "K0",
        "K0" => "J0",
        _ => unreachable!(),
    };
    let mat = |r: &So4Rep, name: &str| -> PolyMatrix {
        r.generators().into_iter().find(|(n, _)| *n == name).map(|(_, m)| m.clone()).unwrap()
    };

    for (name, word) in words.generators() {
        // (a) printed formula
        let printed = if name.ends_with('+') {
            &mat(left, name).kron(&id_r) + &id_l.kron(&mat(right, name))
        } else {
            let a = mat(left, name).kron(&cosh_r);
            let b = e_nk_l.kron(&mat(right, name));
            let c = mat(left, partner(name)).kron(&sinh_r);
            &(&a + &b) + &c
        };
        // (b) per-copy coproducts
        let composed = word.coproduct();
        let via_copies = composed.eval(&left.letters, &right.letters)?;
        report.check_matrices(format!("Δ({name}) printed = per-copy"), &printed, &via_copies);

        let eps = word.counit();
        report.push(format!("ε({name}) = 0"), eps == int(0), format!("ε = {eps}"), None);

        let printed_sym = words.printed_coproduct(name);
        let g_left = mat(left, name);
        report.check_matrices(format!("(ε⊗id)Δ({name}) = {name}"), &printed_sym.counit_left().eval(&left.letters)?, &g_left);
        report.check_matrices(format!("(id⊗ε)Δ({name}) = {name}"), &printed_sym.counit_right().eval(&left.letters)?, &g_left);
        let zero = PolyMatrix::zeros(left.dim(), left.dim());
        report.check_matrices(format!("m(S⊗id)Δ({name}) = 0"), &composed.antipode_left().eval(&left.letters)?, &zero);
        report.check_matrices(format!("m(id⊗S)Δ({name}) = 0"), &composed.antipode_right().eval(&left.letters)?, &zero);

        // Printed antipode against the per-copy antipode.
        let printed_s = if name.ends_with('+') {
            -&g_left
        } else {
            let inner = &(&g_left * &cosh_l) - &(&mat(left, partner(name)) * &sinh_l);
            -&(&e_k_l * &inner)
        };
        report.check_matrices(format!("S({name}) printed = per-copy"), &printed_s, &word.antipode().eval(&left.letters)?);
    }
    Ok(())
}

/// The `(J±, J₀)` subalgebra relations and per-copy Casimirs.
pub fn verify_so4_invariants(r: &So4Rep) -> VerificationReport {
    let mut report = VerificationReport::new(format!("so4 invariants j1={} j2={}", r.j1, r.j2));
    check_sl2_triple(&mut report, "(J+,J-,J0): ", &r.j_plus, &r.j_minus, &r.j_zero);
    for (i, c) in r.casimirs.iter().enumerate() {
        let v = c.get(0, 0).clone();
        report.check_matrices(format!("C{} is scalar", i + 1), c, &PolyMatrix::scalar(r.dim(), &v));
        for (name, g) in r.generators() {
            report.check_matrices(
                format!("[C{},{name}] = 0", i + 1),
                &c.commutator(g),
                &PolyMatrix::zeros(r.dim(), r.dim()),
            );
        }
    }
    report
}

/// Relations, coalgebra (on the tensor square) and invariants for each pair.
pub fn verify_so4_suite(pairs: &[(HalfInt, HalfInt)], exec: Execution) -> Result<VerificationReport, IrrepError> {
    let parts = par::map(exec, pairs, |&(j1, j2)| -> Result<_, IrrepError> {
        let r = build_so4(j1, j2)?;
        Ok((
            format!("({j1},{j2})"),
            [verify_so4_relations(&r), verify_so4_coalgebra(&r, &r), verify_so4_invariants(&r)],
        ))
    });
    let mut report = VerificationReport::new("so4");
    for part in parts {
        let (prefix, reports) = part?;
        for r in reports {
            report.absorb(&prefix, r);
        }
    }
    Ok(report)
}

/// `(1/2,1/2), (1,1/2), (1,1)`.
pub fn default_pairs() -> Vec<(HalfInt, HalfInt)> {
    [(1, 1), (2, 1), (2, 2)].iter().map(|&(a, b)| (HalfInt::from_twice(a), HalfInt::from_twice(b))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::BiPoly;

    fn j(t: u32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    fn rank_over_q(m: &PolyMatrix) -> usize {
        // Entries of J+ are constants here, so Gaussian elimination over Q suffices.
        let mut rows: Vec<Vec<Rational>> = m
            .row_vecs()
            .into_iter()
            .map(|r| r.into_iter().map(|p| p.as_constant().unwrap()).collect())
            .collect();
        let mut rank = 0;
        for col in 0..m.cols() {
            let Some(p) = (rank..rows.len()).find(|&i| rows[i][col] != int(0)) else { continue };
            rows.swap(rank, p);
            for i in 0..rows.len() {
                if i != rank && rows[i][col] != int(0) {
                    let f = &rows[i][col] / &rows[rank][col];
                    let pivot = rows[rank].clone();
                    for (x, y) in rows[i].iter_mut().zip(pivot) {
                        *x -= &f * y;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn construction_small() {
        let r = build_so4(j(1), j(1)).unwrap();
        assert_eq!(rank_over_q(&r.j_plus), 2);
        assert!(r.j_plus.is_nilpotent());
        assert!((&r.j_plus + &r.k_plus).is_nilpotent());
        let h1 = diagonal_basis_irrep(j(1)).unwrap().h;
        let expect = &h1.kron(&PolyMatrix::identity(2)) + &PolyMatrix::identity(2).kron(&h1);
        assert_eq!(r.j_zero.at_h_zero(), expect);
    }

    #[test]
    fn relations_hold() {
        for (a, b) in [(1, 1), (2, 1)] {
            let r = build_so4(j(a), j(b)).unwrap();
            let rep = verify_so4_relations(&r);
            assert!(rep.passed(), "{:#?}", rep.failures().collect::<Vec<_>>());
            assert_eq!(rep.entries.len(), 15);
        }
    }

    #[test]
    fn coalgebra_and_invariants_hold() {
        let r = build_so4(j(1), j(1)).unwrap();
        for rep in [verify_so4_coalgebra(&r, &r), verify_so4_invariants(&r)] {
            assert!(rep.passed(), "{:#?}", rep.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn flipped_sign_in_k_minus_is_located() {
        let mut r = build_so4(j(1), j(1)).unwrap();
        let (i, c) = (0..4)
            .flat_map(|i| (0..4).map(move |c| (i, c)))
            .find(|&(i, c)| !r.k_minus.get(i, c).is_zero())
            .unwrap();
        let v: BiPoly = -r.k_minus.get(i, c);
        r.k_minus.set(i, c, v);
        let rep = verify_so4_relations(&r);
        let e = rep.entry("[J+,K-] = K0").unwrap();
        assert_eq!(e.status, crate::report::Status::Fail);
        assert!(e.detail.contains("first mismatch"));
    }

    #[test]
    fn mismatched_factors_are_rejected() {
        let a = build_so4(j(1), j(1)).unwrap();
        let b = build_so4(j(2), j(1)).unwrap();
        assert!(!verify_so4_coalgebra(&a, &b).passed());
    }
}
