//! Polynomials in the highest weight `λ` and the deformation parameter `h`
//! with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, int, latex_rational, Rational};

/// Sparse polynomial `Σ c_{a,b} λ^a h^b`.
///
/// The term map never stores a zero coefficient, so structural equality is
/// polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(int(n))
    }

    /// `c λ^l h^h`.
    pub fn monomial(c: Rational, deg_lambda: u32, deg_h: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((deg_lambda, deg_h), c);
        }
        Self { terms }
    }

    pub fn lambda() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn h() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    /// Builds a polynomial from `(coefficient, deg_lambda, deg_h)` triples,
    /// merging repeated exponents.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, u32, u32)>,
    {
        let mut p = Self::zero();
        for (c, l, h) in terms {
            p.add_term(l, h, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(One::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending `(deg_lambda, deg_h)` order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Rational)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn coeff(&self, deg_lambda: u32, deg_h: u32) -> Rational {
        self.terms
            .get(&(deg_lambda, deg_h))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// The constant term, if the polynomial has no λ or h dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, deg_lambda: u32, deg_h: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (deg_lambda, deg_h);
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn lambda_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn min_h_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).min()
    }

    pub fn max_h_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    /// True if every term has `h`-degree exactly `d` (the zero polynomial
    /// qualifies trivially).
    pub fn is_h_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|k| k.1 == d)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Exact substitution `λ ↦ value`.
    pub fn specialize_lambda(&self, value: &Rational) -> Self {
        let mut out = Self::zero();
        for (&(l, h), c) in &self.terms {
            out.add_term(0, h, c * pow_rational(value, l));
        }
        out
    }

    /// Substitution `h ↦ -h`.
    pub fn negate_h(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(l, h), c)| ((l, h), if h % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// Substitution `h ↦ 0`.
    pub fn at_h_zero(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.1 == 0)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    pub fn mul_h_pow(&self, k: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(l, h), c)| ((l, h + k), c.clone()))
                .collect(),
        }
    }

    /// Exact division by `h^k`; `None` if some term has `h`-degree below `k`.
    pub fn div_h_pow(&self, k: u32) -> Option<Self> {
        if self.terms.keys().any(|t| t.1 < k) {
            return None;
        }
        Some(Self {
            terms: self
                .terms
                .iter()
                .map(|(&(l, h), c)| ((l, h - k), c.clone()))
                .collect(),
        })
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// LaTeX form, e.g. `-\frac{21}{2}h^{2}` or `\lambda^{2} - \lambda`.
    pub fn to_latex(&self) -> String {
        render(self, true)
    }
}

fn pow_rational(x: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

fn render(p: &BiPoly, latex: bool) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    // Highest total degree first reads more naturally.
    for (i, (&(l, h), c)) in p.terms.iter().rev().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let bare = l == 0 && h == 0;
        if !mag.is_one() || bare {
            out.push_str(&if latex {
                latex_rational(&mag)
            } else {
                format_rational(&mag)
            });
        }
        let var = |name: &str, d: u32, out: &mut String| match d {
            0 => {}
            1 => out.push_str(name),
            _ if latex => out.push_str(&format!("{name}^{{{d}}}")),
            _ => out.push_str(&format!("{name}^{d}")),
        };
        var(if latex { "{\\lambda}" } else { "λ" }, l, &mut out);
        var("h", h, &mut out);
    }
    out
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, false))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl From<Rational> for BiPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for BiPoly {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl AddAssign<&BiPoly> for BiPoly {
    fn add_assign(&mut self, rhs: &BiPoly) {
        for (&(l, h), c) in &rhs.terms {
            self.add_term(l, h, c.clone());
        }
    }
}

impl SubAssign<&BiPoly> for BiPoly {
    fn sub_assign(&mut self, rhs: &BiPoly) {
        for (&(l, h), c) in &rhs.terms {
            self.add_term(l, h, -c);
        }
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        let mut out = BiPoly::zero();
        for (&(l1, h1), c1) in &self.terms {
            for (&(l2, h2), c2) in &rhs.terms {
                out.add_term(l1 + l2, h1 + h2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: &BiPoly) -> BiPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<BiPoly> for &BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl std::iter::Sum for BiPoly {
    fn sum<I: Iterator<Item = BiPoly>>(iter: I) -> BiPoly {
        let mut acc = BiPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn lam_minus(n: i64) -> BiPoly {
        &BiPoly::lambda() - &BiPoly::from_int(n)
    }

    #[test]
    fn add_and_mul() {
        let l = BiPoly::lambda();
        assert_eq!(&l + &l, BiPoly::monomial(int(2), 1, 0));
        assert_eq!(&lam_minus(2) * &BiPoly::one(), lam_minus(2));
        assert!((&l - &l).is_zero());
    }

    #[test]
    fn specialize() {
        // -λ(λ-1)h² at λ = 7
        let p = -(&BiPoly::lambda() * &lam_minus(1)) * BiPoly::monomial(int(1), 0, 2);
        assert_eq!(p.specialize_lambda(&int(7)), BiPoly::monomial(int(-42), 0, 2));
        // (n+1)(λ-n) at n = 5, λ = 7
        let q = BiPoly::from_int(6) * lam_minus(5);
        assert_eq!(q.specialize_lambda(&int(7)), BiPoly::from_int(12));
        assert_eq!(lam_minus(0).specialize_lambda(&int(2)), BiPoly::from_int(2));
    }

    #[test]
    fn h_shifts() {
        let p = BiPoly::from_terms([(int(3), 0, 2), (rat(1, 2), 1, 4)]);
        assert_eq!(p.div_h_pow(2).unwrap().mul_h_pow(2), p);
        assert!(p.div_h_pow(3).is_none());
        assert_eq!(p.negate_h(), p);
        assert_eq!(BiPoly::h().negate_h(), -BiPoly::h());
        assert!(!p.is_h_homogeneous(2));
        assert_eq!(p.min_h_degree(), Some(2));
    }

    #[test]
    fn display() {
        let p = BiPoly::from_terms([(rat(-21, 2), 0, 2)]);
        assert_eq!(p.to_string(), "-21/2h^2");
        assert_eq!(p.to_latex(), "-\\frac{21}{2}h^{2}");
        assert_eq!(BiPoly::zero().to_latex(), "0");
        assert_eq!(BiPoly::from_int(-7).to_latex(), "-7");
    }
}
