//! Truncated power series in one formal deformation parameter `t`, and the
//! Taylor coefficient streams of the elementary functions used throughout.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{format_rational, int, Rational};
use super::ExactError;

/// Elementary functions with rational Taylor coefficients at the origin.
///
/// `Ln1p`, `Sqrt1p` and `Recip1p` denote `ln(1+x)`, `sqrt(1+x)` and
/// `1/(1+x)`, so that every variant is applied to an argument with zero
/// constant term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ElementaryFn {
    Exp,
    Sinh,
    Cosh,
    Arctanh,
    Ln1p,
    Sqrt1p,
    Recip1p,
}

impl ElementaryFn {
    /// Coefficients `f_0 ..= f_n`, generated by the usual term recurrences.
    pub fn coefficients(self, n: usize) -> Vec<Rational> {
        let mut out = Vec::with_capacity(n + 1);
        match self {
            Self::Exp | Self::Sinh | Self::Cosh => {
                let mut inv_fact = Rational::one();
                for k in 0..=n {
                    if k > 0 {
                        inv_fact /= int(k as i64);
                    }
                    let keep = match self {
                        Self::Exp => true,
                        Self::Sinh => k % 2 == 1,
                        _ => k % 2 == 0,
                    };
                    out.push(if keep { inv_fact.clone() } else { Rational::zero() });
                }
            }
            Self::Arctanh => {
                for k in 0..=n {
                    out.push(if k % 2 == 1 {
                        Rational::new(1.into(), (k as i64).into())
                    } else {
                        Rational::zero()
                    });
                }
            }
            Self::Ln1p => {
                for k in 0..=n {
                    out.push(match k {
                        0 => Rational::zero(),
                        _ if k % 2 == 1 => Rational::new(1.into(), (k as i64).into()),
                        _ => Rational::new((-1).into(), (k as i64).into()),
                    });
                }
            }
            Self::Sqrt1p => {
                // binom(1/2, k) = binom(1/2, k-1) * (1/2 - (k-1)) / k
                let mut c = Rational::one();
                for k in 0..=n {
                    if k > 0 {
                        let k1 = k as i64;
                        c *= Rational::new((3 - 2 * k1).into(), (2 * k1).into());
                    }
                    out.push(c.clone());
                }
            }
            Self::Recip1p => {
                for k in 0..=n {
                    out.push(if k % 2 == 0 { int(1) } else { int(-1) });
                }
            }
        }
        out
    }

    pub fn coefficient(self, k: usize) -> Rational {
        self.coefficients(k).pop().expect("non-empty")
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Exp => "exp",
            Self::Sinh => "sinh",
            Self::Cosh => "cosh",
            Self::Arctanh => "arctanh",
            Self::Ln1p => "ln1p",
            Self::Sqrt1p => "sqrt1p",
            Self::Recip1p => "recip1p",
        }
    }
}

/// `c_0 + c_1 t + … + c_N t^N + O(t^{N+1})` with exact coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SeriesScalar {
    coeffs: Vec<Rational>,
}

impl SeriesScalar {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// `c t^k` truncated at `order`.
    pub fn monomial(c: Rational, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The formal parameter `t` itself.
    pub fn t(order: usize) -> Self {
        Self::monomial(Rational::one(), 1, order)
    }

    /// Takes the given coefficients; truncation order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least c_0");
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Lowest `k` with `c_k ≠ 0`.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order.min(self.order()) + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplication by `t^k`; the truncation order grows by `k`.
    pub fn mul_t(&self, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Exact division by `t^k`; the truncation order drops by `k`.
    pub fn div_t(&self, k: usize) -> Result<Self, ExactError> {
        if k > self.order() || self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(ExactError::NotDivisible { by: k });
        }
        Ok(Self {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn invert(&self) -> Result<Self, ExactError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(ExactError::NonUnitConstantTerm);
        }
        let n = self.order();
        let inv0 = c0.recip();
        let mut out = vec![Rational::zero(); n + 1];
        out[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = Rational::zero();
            for i in 1..=k {
                acc += &self.coeffs[i] * &out[k - i];
            }
            out[k] = -acc * &inv0;
        }
        Ok(Self { coeffs: out })
    }

    /// `f(self)`, where `self` must have zero constant term.
    pub fn compose(&self, f: ElementaryFn) -> Result<Self, ExactError> {
        if !self.coeffs[0].is_zero() {
            return Err(ExactError::NonZeroConstantTerm);
        }
        let n = self.order();
        let fk = f.coefficients(n);
        let mut acc = Self::zero(n);
        let mut power = Self::one(n);
        for c in &fk {
            if !c.is_zero() {
                acc = &acc + &power.scale(c);
            }
            power = &power * self;
        }
        Ok(acc)
    }
}

impl fmt::Debug for SeriesScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({})t^{k}", format_rational(c))?;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

impl Add for &SeriesScalar {
    type Output = SeriesScalar;
    fn add(self, rhs: &SeriesScalar) -> SeriesScalar {
        let n = self.order().min(rhs.order());
        SeriesScalar {
            coeffs: (0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub for &SeriesScalar {
    type Output = SeriesScalar;
    fn sub(self, rhs: &SeriesScalar) -> SeriesScalar {
        let n = self.order().min(rhs.order());
        SeriesScalar {
            coeffs: (0..=n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl Mul for &SeriesScalar {
    type Output = SeriesScalar;
    fn mul(self, rhs: &SeriesScalar) -> SeriesScalar {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        SeriesScalar { coeffs }
    }
}

impl Neg for &SeriesScalar {
    type Output = SeriesScalar;
    fn neg(self) -> SeriesScalar {
        SeriesScalar {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn ln1p_expansion() {
        let s = SeriesScalar::t(4).compose(ElementaryFn::Ln1p).unwrap();
        assert_eq!(
            s.coeffs(),
            &[int(0), int(1), rat(-1, 2), rat(1, 3), rat(-1, 4)]
        );
    }

    #[test]
    fn inverse_of_one_plus_t() {
        let a = &SeriesScalar::one(6) + &SeriesScalar::t(6);
        let prod = &a * &a.invert().unwrap();
        assert_eq!(prod, SeriesScalar::one(6));
        assert_eq!(
            SeriesScalar::t(3).invert(),
            Err(ExactError::NonUnitConstantTerm)
        );
    }

    #[test]
    fn sinh_over_t() {
        let s = SeriesScalar::t(6).compose(ElementaryFn::Sinh).unwrap();
        let q = s.div_t(1).unwrap();
        assert_eq!(q.order(), 5);
        assert_eq!(q.coeff(0), int(1));
        assert_eq!(q.coeff(1), int(0));
        assert_eq!(q.coeff(2), rat(1, 6));
    }

    #[test]
    fn compose_rejects_constant_term() {
        assert_eq!(
            SeriesScalar::one(3).compose(ElementaryFn::Exp),
            Err(ExactError::NonZeroConstantTerm)
        );
    }

    #[test]
    fn mixed_orders_truncate_to_smaller() {
        let a = SeriesScalar::one(3);
        let b = SeriesScalar::one(5);
        assert_eq!((&a + &b).order(), 3);
        assert_eq!((&a * &b).order(), 3);
    }

    #[test]
    fn coefficient_streams() {
        assert_eq!(ElementaryFn::Sqrt1p.coefficients(3), vec![int(1), rat(1, 2), rat(-1, 8), rat(1, 16)]);
        assert_eq!(ElementaryFn::Cosh.coefficient(4), rat(1, 24));
        assert_eq!(ElementaryFn::Arctanh.coefficient(5), rat(1, 5));
        assert_eq!(ElementaryFn::Recip1p.coefficient(3), int(-1));
    }
}
