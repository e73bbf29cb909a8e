use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::exact::{int, ElementaryFn, Rational, SeriesScalar};
use crate::report::VerificationReport;

use super::presentation::{Monomial, Poly, Presentation};
use super::NcError;

/// A PBW-ordered polynomial whose coefficients are power series in the
/// deformation parameter `t`, known through `t^order`.
#[derive(Clone)]
pub struct NCElement {
    pres: Arc<Presentation>,
    order: usize,
    terms: BTreeMap<Monomial, SeriesScalar>,
}

impl NCElement {
    pub fn zero(pres: &Arc<Presentation>, order: usize) -> Self {
        Self {
            pres: Arc::clone(pres),
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(pres: &Arc<Presentation>, s: SeriesScalar) -> Self {
        let mut e = Self::zero(pres, s.order());
        e.insert(Monomial::one(pres.len()), s);
        e
    }

    pub fn one(pres: &Arc<Presentation>, order: usize) -> Self {
        Self::scalar(pres, SeriesScalar::one(order))
    }

    /// Generator by name; panics on an unknown name.
    pub fn gen(pres: &Arc<Presentation>, name: &str, order: usize) -> Self {
        let g = pres.index(name).unwrap_or_else(|| panic!("no generator {name} in {}", pres.name()));
        Self::from_poly(pres, &Poly::from([(Monomial::generator(pres.len(), g), int(1))]), order)
    }

    pub fn from_poly(pres: &Arc<Presentation>, p: &Poly, order: usize) -> Self {
        let mut e = Self::zero(pres, order);
        for (m, c) in p {
            e.insert(m.clone(), SeriesScalar::constant(c.clone(), order));
        }
        e
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, SeriesScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, m: Monomial, s: SeriesScalar) {
        if s.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = &*v + &s;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, s.truncate(self.order));
            }
        }
    }

    /// Lowest power of `t` with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.terms.values().filter_map(SeriesScalar::valuation).min()
    }

    /// The lowest-order nonzero coefficient: `(power of t, monomial, value)`.
    pub fn leading_residual(&self) -> Option<(usize, Monomial, Rational)> {
        let v = self.valuation()?;
        self.terms
            .iter()
            .find(|(_, s)| s.valuation() == Some(v))
            .map(|(m, s)| (v, m.clone(), s.coeff(v)))
    }

    /// Coefficient of `t^0` as a classical polynomial.
    pub fn classical_part(&self) -> Poly {
        self.terms
            .iter()
            .map(|(m, s)| (m.clone(), s.coeff(0)))
            .filter(|(_, c)| *c != int(0))
            .collect()
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        let mut e = Self::zero(&self.pres, order);
        for (m, s) in &self.terms {
            e.insert(m.clone(), s.truncate(order));
        }
        e
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut e = Self::zero(&self.pres, self.order);
        for (m, s) in &self.terms {
            e.insert(m.clone(), s.scale(c));
        }
        e
    }

    /// Multiplies by `t^k`; the known order rises by `k`.
    pub fn mul_t(&self, k: usize) -> Self {
        Self {
            pres: Arc::clone(&self.pres),
            order: self.order + k,
            terms: self.terms.iter().map(|(m, s)| (m.clone(), s.mul_t(k))).collect(),
        }
    }

    /// Divides by `t^k`; the known order drops by `k`.
    pub fn div_t(&self, k: usize) -> Result<Self, NcError> {
        if k > self.order {
            return Err(NcError::OrderExhausted { order: self.order, shift: k });
        }
        let mut e = Self::zero(&self.pres, self.order - k);
        for (m, s) in &self.terms {
            let d = s.div_t(k).map_err(|_| NcError::NotDivisible {
                power: k,
                valuation: s.valuation().unwrap_or(0),
            })?;
            e.insert(m.clone(), d);
        }
        Ok(e)
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(&self.pres, self.order), |acc, _| &acc * self)
    }

    /// `Σ f_k x^k` through the known order. Requires `x` to vanish at `t = 0`.
    pub fn apply(f: ElementaryFn, x: &Self) -> Result<Self, NcError> {
        if x.valuation() == Some(0) {
            return Err(NcError::IllFormedComposition {
                function: f.name(),
                detail: "argument has a nonzero t^0 part".into(),
            });
        }
        let n = x.order;
        let coeffs = f.coefficients(n);
        let mut out = Self::scalar(&x.pres, SeriesScalar::constant(coeffs[0].clone(), n));
        let mut power = Self::one(&x.pres, n);
        for c in coeffs.iter().skip(1) {
            power = &power * x;
            if power.is_zero() {
                break;
            }
            out = &out + &power.scale(c);
        }
        Ok(out)
    }

    fn assert_compatible(&self, other: &Self) {
        assert!(Arc::ptr_eq(&self.pres, &other.pres), "elements of different presentations");
    }
}

impl fmt::Debug for NCElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCElement[{} O(t^{})] ", self.pres.name(), self.order + 1)?;
        let mut first = true;
        for (m, s) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({s:?}) {}", self.pres.format_monomial(m))?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl PartialEq for NCElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.pres, &other.pres) && self.order == other.order && self.terms == other.terms
    }
}

impl Add for &NCElement {
    type Output = NCElement;
    fn add(self, rhs: &NCElement) -> NCElement {
        self.assert_compatible(rhs);
        let mut e = self.truncate(rhs.order);
        for (m, s) in &rhs.terms {
            e.insert(m.clone(), s.truncate(e.order));
        }
        e
    }
}

impl Sub for &NCElement {
    type Output = NCElement;
    fn sub(self, rhs: &NCElement) -> NCElement {
        self + &-rhs
    }
}

impl Neg for &NCElement {
    type Output = NCElement;
    fn neg(self) -> NCElement {
        self.scale(&int(-1))
    }
}

impl Mul for &NCElement {
    type Output = NCElement;
    fn mul(self, rhs: &NCElement) -> NCElement {
        self.assert_compatible(rhs);
        let order = self.order.min(rhs.order);
        let mut e = NCElement::zero(&self.pres, order);
        for (a, sa) in &self.terms {
            let va = sa.valuation().unwrap_or(0);
            for (b, sb) in &rhs.terms {
                if va + sb.valuation().unwrap_or(0) > order {
                    continue;
                }
                let s = (sa * sb).truncate(order);
                if s.is_zero() {
                    continue;
                }
                for (m, c) in self.pres.mul_mono(a, b) {
                    e.insert(m, s.scale(&c));
                }
            }
        }
        e
    }
}

/// Records `lhs == rhs` as a series identity: passes iff the residual is
/// zero through at least `min_order`.
pub fn check_series(report: &mut VerificationReport, label: impl Into<String>, lhs: &NCElement, rhs: &NCElement, min_order: usize) -> bool {
    let diff = lhs - rhs;
    let label = label.into();
    match diff.leading_residual() {
        Some((k, m, c)) => {
            let mono = diff.presentation().format_monomial(&m);
            report.push(
                label,
                false,
                format!("first nonzero residual at order {k}"),
                Some(format!("{c} t^{k} {mono}")),
            );
            false
        }
        None if diff.order() < min_order => {
            report.push(label, false, format!("only {} orders available, need {min_order}", diff.order()), None);
            false
        }
        None => {
            report.push(label, true, format!("zero through order {}", diff.order()), None);
            true
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn ln_of_one_plus_omega_pi() {
        let p = Presentation::e3();
        let x = NCElement::gen(&p, "Π+", 3).mul_t(1);
        let ln = NCElement::apply(ElementaryFn::Ln1p, &x).unwrap().truncate(3);
        let pp = |k: u32| NCElement::gen(&p, "Π+", 3).pow(k);
        let want = &(&pp(1).mul_t(1) - &pp(2).mul_t(2).scale(&rat(1, 2))) + &pp(3).mul_t(3).scale(&rat(1, 3));
        assert_eq!(ln, want.truncate(3));
    }

    #[test]
    fn arctanh_map() {
        let p = Presentation::e2();
        let u = NCElement::gen(&p, "P+", 6).mul_t(1).scale(&rat(1, 2));
        let chi = NCElement::apply(ElementaryFn::Arctanh, &u).unwrap().scale(&int(2)).div_t(1).unwrap().truncate(3);
        let pp = NCElement::gen(&p, "P+", 3);
        let want = &pp + &pp.pow(3).mul_t(2).scale(&rat(1, 12));
        assert_eq!(chi, want.truncate(3));
    }

    #[test]
    fn sqrt_of_one() {
        let p = Presentation::e2();
        let zero = NCElement::zero(&p, 4);
        assert_eq!(NCElement::apply(ElementaryFn::Sqrt1p, &zero).unwrap(), NCElement::one(&p, 4));
    }

    #[test]
    fn constant_argument_is_rejected() {
        let p = Presentation::e2();
        let x = NCElement::gen(&p, "J", 4);
        assert!(matches!(NCElement::apply(ElementaryFn::Exp, &x), Err(NcError::IllFormedComposition { .. })));
    }

    #[test]
    fn classical_commutator() {
        let p = Presentation::e3();
        let jp = NCElement::gen(&p, "J+", 2);
        let jm = NCElement::gen(&p, "J-", 2);
        assert_eq!(jp.commutator(&jm), NCElement::gen(&p, "J0", 2));
    }
}
