//! Series verification of the contracted algebras through their maps onto
//! the classical `e(2)` and `e(3)`.
//!
//! Every computation runs at `N + SLACK` so that the divisions by the
//! deformation parameter still leave residuals known through order `N`.

use std::sync::Arc;

use crate::exact::{int, rat, ElementaryFn, Rational};
use crate::report::VerificationReport;

use super::element::{check_series, NCElement};
use super::presentation::Presentation;
use super::NcError;

const SLACK: usize = 2;

fn ensure_order(n: usize) -> Result<(), NcError> {
    if n < 2 {
        return Err(NcError::OrderTooSmall(n));
    }
    Ok(())
}

struct Ctx {
    pres: Arc<Presentation>,
    work: usize,
    min: usize,
    report: VerificationReport,
}

impl Ctx {
    fn new(pres: Arc<Presentation>, suite: String, n: usize) -> Self {
        Self {
            pres,
            work: n + SLACK,
            min: n,
            report: VerificationReport::new(suite),
        }
    }

    fn g(&self, name: &str) -> NCElement {
        NCElement::gen(&self.pres, name, self.work)
    }

    fn one(&self) -> NCElement {
        NCElement::one(&self.pres, self.work)
    }

    fn zero(&self) -> NCElement {
        NCElement::zero(&self.pres, self.work)
    }

    fn check(&mut self, label: &str, lhs: &NCElement, rhs: &NCElement) {
        check_series(&mut self.report, label, lhs, rhs, self.min);
    }
}

fn apply(f: ElementaryFn, x: &NCElement) -> Result<NCElement, NcError> {
    NCElement::apply(f, x)
}

fn s(x: &NCElement, c: Rational) -> NCElement {
    x.scale(&c)
}

/// `U_h(e(2))` through `χ = (2/h)arctanh(hP₊/2)`, `η = (1 - h²P₊²/4)P₋`,
/// `ζ = 2J`.
pub fn suite_e2(n: usize) -> Result<VerificationReport, NcError> {
    ensure_order(n)?;
    let mut c = Ctx::new(Presentation::e2(), format!("e2 order {n}"), n);
    let (j, pp, pm) = (c.g("J"), c.g("P+"), c.g("P-"));
    let u = s(&pp.mul_t(1), rat(1, 2));
    let u2 = &u * &u;
    let chi = s(&apply(ElementaryFn::Arctanh, &u)?, int(2)).div_t(1)?;
    let eta = &(&c.one() - &u2) * &pm;
    let zeta = s(&j, int(2));

    // tanh(hχ/2) = hP₊/2 gives rational closed forms for sinh and cosh.
    let inv = apply(ElementaryFn::Recip1p, &-&u2)?;
    let sinh_closed = &pp.mul_t(1) * &inv;
    let cosh_closed = &(&c.one() + &u2) * &inv;
    let h_chi = chi.mul_t(1);
    let sinh_direct = apply(ElementaryFn::Sinh, &h_chi)?;
    let cosh_direct = apply(ElementaryFn::Cosh, &h_chi)?;
    c.check("sinh(hχ) closed form = series composition", &sinh_closed, &sinh_direct);
    c.check("cosh(hχ) closed form = series composition", &cosh_closed, &cosh_direct);

    c.check("[ζ,χ] = (2/h)sinh(hχ)", &zeta.commutator(&chi), &s(&sinh_closed, int(2)).div_t(1)?);
    c.check("[ζ,η] = -2η cosh(hχ)", &zeta.commutator(&eta), &s(&(&eta * &cosh_closed), int(-2)));
    c.check("[χ,η] = 0", &chi.commutator(&eta), &c.zero());
    let casimir = (&eta * &sinh_closed).div_t(1)?;
    c.check("P+P- = (η/h)sinh(hχ)", &(&pp * &pm), &casimir);
    c.check("(η/h)sinh(hχ) via composed sinh", &casimir, &(&eta * &sinh_direct).div_t(1)?);
    Ok(c.report)
}

/// `U_h(e(3))` through `P₊ = ln(1+ωΠ₊)/ω`, `P₋ = Π₋ + (ω/4)Π₀²/(1+ωΠ₊)`,
/// `P₀ = Π₀/(1+ωΠ₊)`.
pub fn suite_e3(n: usize) -> Result<VerificationReport, NcError> {
    ensure_order(n)?;
    let mut c = Ctx::new(Presentation::e3(), format!("e3 order {n}"), n);
    let (jp, j0, jm) = (c.g("J+"), c.g("J0"), c.g("J-"));
    let (pip, pi0, pim) = (c.g("Π+"), c.g("Π0"), c.g("Π-"));
    let one = c.one();
    let zero = c.zero();

    let w_pi = pip.mul_t(1);
    let p_plus = apply(ElementaryFn::Ln1p, &w_pi)?.div_t(1)?;
    let recip = apply(ElementaryFn::Recip1p, &w_pi)?;
    let p_minus = &pim + &s(&(&(&pi0 * &pi0) * &recip).mul_t(1), rat(1, 4));
    let p_zero = &pi0 * &recip;
    let e_neg = apply(ElementaryFn::Exp, &-&p_plus.mul_t(1))?;
    let e_pos = apply(ElementaryFn::Exp, &p_plus.mul_t(1))?;
    let p0_sq = &p_zero * &p_zero;

    c.check("[J0,J+] = 2J+", &j0.commutator(&jp), &s(&jp, int(2)));
    c.check("[J0,J-] = -2J-", &j0.commutator(&jm), &s(&jm, int(-2)));
    c.check("[J+,J-] = J0", &jp.commutator(&jm), &j0);
    c.check("[P0,P+] = 0", &p_zero.commutator(&p_plus), &zero);
    c.check("[P0,P-] = 0", &p_zero.commutator(&p_minus), &zero);
    c.check("[P+,P-] = 0", &p_plus.commutator(&p_minus), &zero);
    let two_over = s(&(&one - &e_neg), int(2)).div_t(1)?;
    c.check("[J0,P+] = (2/ω)(1 - e^{-ωP+})", &j0.commutator(&p_plus), &two_over);
    c.check("[P0,J+] = (2/ω)(1 - e^{-ωP+})", &p_zero.commutator(&jp), &two_over);
    c.check(
        "[J0,P-] = -2P- + (ω/2)P0^2",
        &j0.commutator(&p_minus),
        &(&s(&p_minus, int(-2)) + &s(&p0_sq.mul_t(1), rat(1, 2))),
    );
    c.check(
        "[P0,J-] = -2e^{-ωP+}P- - (ω/2)P0^2",
        &p_zero.commutator(&jm),
        &(&s(&(&e_neg * &p_minus), int(-2)) - &s(&p0_sq.mul_t(1), rat(1, 2))),
    );
    c.check("[J+,P-] = P0", &jp.commutator(&p_minus), &p_zero);
    c.check("[P+,J-] = P0", &p_plus.commutator(&jm), &p_zero);
    c.check("[J+,P+] = 0", &jp.commutator(&p_plus), &zero);
    c.check("[J-,P-] = ωP0P-", &jm.commutator(&p_minus), &(&p_zero * &p_minus).mul_t(1));
    c.check("[J0,P0] = -2P0(1 - e^{-ωP+})", &j0.commutator(&p_zero), &s(&(&p_zero * &(&one - &e_neg)), int(-2)));

    let pi_plus_back = (&e_pos - &one).div_t(1)?;
    let pi_minus_back = &p_minus - &s(&(&p0_sq * &e_pos).mul_t(1), rat(1, 4));
    c.check("round trip Π+ = (e^{ωP+} - 1)/ω", &pi_plus_back, &pip);
    c.check("round trip Π- = P- - (ω/4)P0^2 e^{ωP+}", &pi_minus_back, &pim);
    c.check("round trip Π0 = P0 e^{ωP+}", &(&p_zero * &e_pos), &pi0);

    let c1 = &(&pip * &pim) + &s(&(&pi0 * &pi0), rat(1, 4));
    let c1_deformed = &(&pi_plus_back * &pi_minus_back) + &s(&(&p0_sq * &(&e_pos * &e_pos)), rat(1, 4));
    c.check("C1: Π form = P form", &c1, &c1_deformed);
    let c2 = &(&(&jp * &pim) + &(&jm * &pip)) + &s(&(&j0 * &pi0), rat(1, 2));
    let c2_deformed = &(&(&jp * &pi_minus_back) + &(&jm * &pi_plus_back)) + &s(&(&j0 * &(&p_zero * &e_pos)), rat(1, 2));
    c.check("C2: Π form = P form", &c2, &c2_deformed);
    for (name, g) in [("J+", &jp), ("J-", &jm), ("J0", &j0), ("P+", &p_plus), ("P-", &p_minus), ("P0", &p_zero)] {
        c.check(&format!("[C1,{name}] = 0"), &c1_deformed.commutator(g), &zero);
        c.check(&format!("[C2,{name}] = 0"), &c2_deformed.commutator(g), &zero);
    }
    Ok(c.report)
}

/// `U_q(e(3))` through
/// `e^{-ΩP̂₀/2} = 1 + C₁Ω²/2 - (Ω/2)sqrt(1 + C₁Ω²/4) Π̂₀` and
/// `P̂± e^{-ΩP̂₀/2} = sqrt(1 + C₁Ω²/4) Π̂±`.
pub fn suite_qe3(n: usize) -> Result<VerificationReport, NcError> {
    ensure_order(n)?;
    let mut c = Ctx::new(Presentation::e3(), format!("qe3 order {n}"), n);
    let (jp, j0, jm) = (c.g("J+"), c.g("J0"), c.g("J-"));
    let (pip, pi0, pim) = (c.g("Π+"), c.g("Π0"), c.g("Π-"));
    let one = c.one();
    let zero = c.zero();

    let c1 = &(&pip * &pim) + &s(&(&pi0 * &pi0), rat(1, 4));
    let root = apply(ElementaryFn::Sqrt1p, &s(&c1.mul_t(2), rat(1, 4)))?;
    let e_minus_one = &s(&c1.mul_t(2), rat(1, 2)) - &s(&(&root * &pi0).mul_t(1), rat(1, 2));
    let p_zero = s(&apply(ElementaryFn::Ln1p, &e_minus_one)?, int(-2)).div_t(1)?;
    let e_inv = apply(ElementaryFn::Recip1p, &e_minus_one)?;
    let p_plus = &(&root * &pip) * &e_inv;
    let p_minus = &(&root * &pim) * &e_inv;

    let half = p_zero.mul_t(1);
    let e_half_neg = apply(ElementaryFn::Exp, &s(&half, rat(-1, 2)))?;
    let e_half_pos = apply(ElementaryFn::Exp, &s(&half, rat(1, 2)))?;
    let e_full = apply(ElementaryFn::Exp, &half)?;
    c.check("e^{-ΩP0/2} = 1 + C1Ω^2/2 - (Ω/2)sqrt(1+C1Ω^2/4)Π0", &e_half_neg, &(&one + &e_minus_one));
    c.check("P+ e^{-ΩP0/2} = sqrt(1+C1Ω^2/4)Π+", &(&p_plus * &e_half_neg), &(&root * &pip));
    c.check("P- e^{-ΩP0/2} = sqrt(1+C1Ω^2/4)Π-", &(&p_minus * &e_half_neg), &(&root * &pim));

    c.check("[J0,J+] = 2J+", &j0.commutator(&jp), &s(&jp, int(2)));
    c.check("[J0,J-] = -2J-", &j0.commutator(&jm), &s(&jm, int(-2)));
    c.check("[J+,J-] = J0", &jp.commutator(&jm), &j0);
    c.check("[P0,P+] = 0", &p_zero.commutator(&p_plus), &zero);
    c.check("[P0,P-] = 0", &p_zero.commutator(&p_minus), &zero);
    c.check("[P+,P-] = 0", &p_plus.commutator(&p_minus), &zero);
    c.check("[J0,P+] = 2P+", &j0.commutator(&p_plus), &s(&p_plus, int(2)));
    c.check("[J0,P-] = -2P-", &j0.commutator(&p_minus), &s(&p_minus, int(-2)));
    c.check("[P0,J+] = 2P+", &p_zero.commutator(&jp), &s(&p_plus, int(2)));
    c.check("[P0,J-] = -2P-", &p_zero.commutator(&jm), &s(&p_minus, int(-2)));
    c.check("[J0,P0] = 0", &j0.commutator(&p_zero), &zero);
    c.check("[P+,J+] = ΩP+^2", &p_plus.commutator(&jp), &(&p_plus * &p_plus).mul_t(1));
    c.check("[P-,J-] = -ΩP-^2", &p_minus.commutator(&jm), &s(&(&p_minus * &p_minus).mul_t(1), int(-1)));
    let q = (&e_full - &one).div_t(1)?;
    c.check("[J+,P-] = (1/Ω)(e^{ΩP0} - 1)", &jp.commutator(&p_minus), &q);
    c.check("[J-,P+] = -(1/Ω)(e^{ΩP0} - 1)", &jm.commutator(&p_plus), &s(&q, int(-1)));

    let bracket = &(&e_half_pos + &e_half_neg) - &s(&one, int(2));
    let rhs = &(&(&p_plus * &p_minus) * &e_half_neg) + &bracket.div_t(2)?;
    c.check("C1 = P+P- e^{-ΩP0/2} + (e^{ΩP0/2} + e^{-ΩP0/2} - 2)/Ω^2", &c1, &rhs);
    Ok(c.report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_pass(r: &VerificationReport) {
        assert!(r.passed(), "{:#?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn e2_passes() {
        assert_pass(&suite_e2(4).unwrap());
    }

    #[test]
    fn e3_passes() {
        assert_pass(&suite_e3(3).unwrap());
    }

    #[test]
    fn qe3_passes() {
        assert_pass(&suite_qe3(3).unwrap());
    }

    #[test]
    fn dropping_the_quadratic_term_is_detected() {
        let mut c = Ctx::new(Presentation::e3(), "neg".into(), 4);
        let (j0, pi0, pim, pip) = (c.g("J0"), c.g("Π0"), c.g("Π-"), c.g("Π+"));
        let recip = apply(ElementaryFn::Recip1p, &pip.mul_t(1)).unwrap();
        let p_minus = &pim + &s(&(&(&pi0 * &pi0) * &recip).mul_t(1), rat(1, 4));
        c.check("[J0,P-] = -2P-", &j0.commutator(&p_minus), &s(&p_minus, int(-2)));
        let e = &c.report.entries[0];
        assert_eq!(e.status, crate::report::Status::Fail);
        assert_eq!(e.detail, "first nonzero residual at order 1");
    }

    #[test]
    fn order_one_is_rejected() {
        assert!(matches!(suite_e2(1), Err(NcError::OrderTooSmall(1))));
    }
}
