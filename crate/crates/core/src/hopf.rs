//! Hopf structure of `U_h(sl(2))` copies, applied symbolically to words and
//! evaluated on representations.
//!
//! Per copy with sign `θ = ±1`:
//!
//! ```text
//! Δ(X) = X⊗1 + 1⊗X
//! Δ(Y) = Y⊗e^{θhX} + e^{-θhX}⊗Y        (same for H)
//! ε(X) = ε(Y) = ε(H) = 0,  ε(e^{±hX}) = 1
//! S(X) = -X,  S(Y) = -e^{θhX} Y e^{-θhX}   (same for H),  S(e^{±hX}) = e^{∓hX}
//! ```
//!
//! The exponentials are kept as letters of their own so every map stays a
//! finite sum of words.

use std::collections::HashMap;

use crate::exact::{int, ExactError, PolyMatrix, Rational};
use crate::half::HalfInt;
use crate::irrep::{check_sl2_triple, diagonal_basis_irrep, Irrep, IrrepError};
use crate::report::VerificationReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    X,
    Y,
    H,
    /// `e^{hX}`
    ExpPos,
    /// `e^{-hX}`
    ExpNeg,
}

/// A generator of one `U_{θh}(sl(2))` copy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub copy: u8,
    pub theta: i8,
    pub gen: Gen,
}

impl Letter {
    pub const fn new(copy: u8, theta: i8, gen: Gen) -> Self {
        Self { copy, theta, gen }
    }

    fn with(self, gen: Gen) -> Self {
        Self { gen, ..self }
    }

    /// `e^{θhX}` for this copy.
    fn exp_theta(self) -> Self {
        self.with(if self.theta > 0 { Gen::ExpPos } else { Gen::ExpNeg })
    }

    /// `e^{-θhX}` for this copy.
    fn exp_minus_theta(self) -> Self {
        self.with(if self.theta > 0 { Gen::ExpNeg } else { Gen::ExpPos })
    }

    pub fn counit(self) -> Rational {
        match self.gen {
            Gen::X | Gen::Y | Gen::H => int(0),
            Gen::ExpPos | Gen::ExpNeg => int(1),
        }
    }

    pub fn antipode(self) -> Expr {
        match self.gen {
            Gen::X => Expr::letter(self).scale(&int(-1)),
            Gen::Y | Gen::H => Expr::word(int(-1), vec![self.exp_theta(), self, self.exp_minus_theta()]),
            Gen::ExpPos => Expr::letter(self.with(Gen::ExpNeg)),
            Gen::ExpNeg => Expr::letter(self.with(Gen::ExpPos)),
        }
    }

    pub fn coproduct(self) -> TensorExpr {
        let one = Vec::new;
        match self.gen {
            Gen::X => TensorExpr {
                terms: vec![(int(1), vec![self], one()), (int(1), one(), vec![self])],
            },
            Gen::Y | Gen::H => TensorExpr {
                terms: vec![
                    (int(1), vec![self], vec![self.exp_theta()]),
                    (int(1), vec![self.exp_minus_theta()], vec![self]),
                ],
            },
            Gen::ExpPos | Gen::ExpNeg => TensorExpr {
                terms: vec![(int(1), vec![self], vec![self])],
            },
        }
    }
}

/// A finite linear combination of words in the letters.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Expr {
    pub terms: Vec<(Rational, Vec<Letter>)>,
}

impl Expr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(int(1), Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Self::word(int(1), vec![l])
    }

    pub fn word(c: Rational, w: Vec<Letter>) -> Self {
        Self { terms: vec![(c, w)] }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            terms: self.terms.iter().map(|(a, w)| (a * c, w.clone())).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&int(-1)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, u) in &self.terms {
            for (b, v) in &other.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                terms.push((a * b, w));
            }
        }
        Self { terms }
    }

    pub fn counit(&self) -> Rational {
        self.terms
            .iter()
            .map(|(c, w)| w.iter().fold(c.clone(), |acc, l| acc * l.counit()))
            .sum()
    }

    /// `S` extended anti-multiplicatively.
    pub fn antipode(&self) -> Self {
        let mut out = Self::zero();
        for (c, w) in &self.terms {
            let s = w.iter().rev().fold(Self::one(), |acc, l| acc.mul(&l.antipode()));
            out = out.add(&s.scale(c));
        }
        out
    }

    /// `Δ` extended multiplicatively.
    pub fn coproduct(&self) -> TensorExpr {
        let mut out = TensorExpr::default();
        for (c, w) in &self.terms {
            let d = w.iter().fold(TensorExpr::one(), |acc, l| acc.mul(&l.coproduct()));
            out.terms.extend(d.terms.into_iter().map(|(a, u, v)| (a * c, u, v)));
        }
        out
    }

    pub fn eval(&self, rep: &LetterRep) -> Result<PolyMatrix, ExactError> {
        let mut out = PolyMatrix::zeros(rep.dim, rep.dim);
        for (c, w) in &self.terms {
            out = out.checked_add(&rep.word(w)?.scale(c))?;
        }
        Ok(out)
    }
}

/// `Σ c · u ⊗ v`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorExpr {
    pub terms: Vec<(Rational, Vec<Letter>, Vec<Letter>)>,
}

impl TensorExpr {
    pub fn one() -> Self {
        Self {
            terms: vec![(int(1), Vec::new(), Vec::new())],
        }
    }

    /// `Σ a ⊗ b` over the term products of two expressions.
    pub fn tensor(a: &Expr, b: &Expr) -> Self {
        let mut terms = Vec::new();
        for (x, u) in &a.terms {
            for (y, v) in &b.terms {
                terms.push((x * y, u.clone(), v.clone()));
            }
        }
        Self { terms }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self { terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, u1, v1) in &self.terms {
            for (b, u2, v2) in &other.terms {
                let mut u = u1.clone();
                u.extend_from_slice(u2);
                let mut v = v1.clone();
                v.extend_from_slice(v2);
                terms.push((a * b, u, v));
            }
        }
        Self { terms }
    }

    /// `(ε ⊗ id)`.
    pub fn counit_left(&self) -> Expr {
        Expr {
            terms: self.terms.iter().map(|(c, u, v)| (c * Expr::word(int(1), u.clone()).counit(), v.clone())).collect(),
        }
    }

    /// `(id ⊗ ε)`.
    pub fn counit_right(&self) -> Expr {
        Expr {
            terms: self.terms.iter().map(|(c, u, v)| (c * Expr::word(int(1), v.clone()).counit(), u.clone())).collect(),
        }
    }

    /// `m ∘ (S ⊗ id)`.
    pub fn antipode_left(&self) -> Expr {
        let mut out = Expr::zero();
        for (c, u, v) in &self.terms {
            let s = Expr::word(c.clone(), u.clone()).antipode();
            out = out.add(&s.mul(&Expr::word(int(1), v.clone())));
        }
        out
    }

    /// `m ∘ (id ⊗ S)`.
    pub fn antipode_right(&self) -> Expr {
        let mut out = Expr::zero();
        for (c, u, v) in &self.terms {
            let s = Expr::word(int(1), v.clone()).antipode();
            out = out.add(&Expr::word(c.clone(), u.clone()).mul(&s));
        }
        out
    }

    /// `(Δ ⊗ id)` and `(id ⊗ Δ)` as three-fold tensors.
    pub fn coassoc_pair(&self) -> (Vec<[Expr; 3]>, Vec<[Expr; 3]>) {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (c, u, v) in &self.terms {
            for (a, u1, u2) in Expr::word(int(1), u.clone()).coproduct().terms {
                left.push([Expr::word(c * a, u1), Expr::word(int(1), u2), Expr::word(int(1), v.clone())]);
            }
            for (a, v1, v2) in Expr::word(int(1), v.clone()).coproduct().terms {
                right.push([Expr::word(c * a, u.clone()), Expr::word(int(1), v1), Expr::word(int(1), v2)]);
            }
        }
        (left, right)
    }

    pub fn eval(&self, left: &LetterRep, right: &LetterRep) -> Result<PolyMatrix, ExactError> {
        let d = left.dim * right.dim;
        let mut out = PolyMatrix::zeros(d, d);
        for (c, u, v) in &self.terms {
            out = out.checked_add(&left.word(u)?.kron(&right.word(v)?).scale(c))?;
        }
        Ok(out)
    }
}

/// Matrices for every letter on one representation space.
#[derive(Debug, Clone)]
pub struct LetterRep {
    pub dim: usize,
    pub matrices: HashMap<Letter, PolyMatrix>,
}

impl LetterRep {
    /// A single irrep as copy `copy` with sign `theta`. For `theta = -1` the
    /// irrep is taken at `-h`, and `X` means `X` of that `-h` irrep.
    pub fn single(r: &Irrep, copy: u8, theta: i8) -> Result<Self, ExactError> {
        let mut rep = Self {
            dim: r.dim(),
            matrices: HashMap::new(),
        };
        rep.insert_copy(r, copy, theta, None)?;
        Ok(rep)
    }

    /// Inserts the letters of `r` (already at the right sign of `h`),
    /// optionally embedded as `A⊗I` (`Some(false)`) or `I⊗A` (`Some(true)`)
    /// with identity of dimension `other`.
    pub fn insert_copy(&mut self, r: &Irrep, copy: u8, theta: i8, embed: Option<(bool, usize)>) -> Result<(), ExactError> {
        let (ep, en) = r.exp_pair()?;
        let lift = |m: PolyMatrix| match embed {
            None => m,
            Some((false, n)) => m.kron(&PolyMatrix::identity(n)),
            Some((true, n)) => PolyMatrix::identity(n).kron(&m),
        };
        let l = |gen| Letter::new(copy, theta, gen);
        self.matrices.insert(l(Gen::X), lift(r.x.clone()));
        self.matrices.insert(l(Gen::Y), lift(r.y.clone()));
        self.matrices.insert(l(Gen::H), lift(r.h.clone()));
        self.matrices.insert(l(Gen::ExpPos), lift(ep));
        self.matrices.insert(l(Gen::ExpNeg), lift(en));
        Ok(())
    }

    pub fn get(&self, l: &Letter) -> &PolyMatrix {
        self.matrices
            .get(l)
            .unwrap_or_else(|| panic!("letter {l:?} has no matrix in this representation"))
    }

    pub fn word(&self, w: &[Letter]) -> Result<PolyMatrix, ExactError> {
        let mut it = w.iter();
        let Some(first) = it.next() else {
            return Ok(PolyMatrix::identity(self.dim));
        };
        let mut m = self.get(first).clone();
        for l in it {
            m = m.checked_mul(self.get(l))?;
        }
        Ok(m)
    }
}

fn eval3(terms: &[[Expr; 3]], reps: [&LetterRep; 3]) -> Result<PolyMatrix, ExactError> {
    let d = reps.iter().map(|r| r.dim).product();
    let mut out = PolyMatrix::zeros(d, d);
    for [a, b, c] in terms {
        let m = a.eval(reps[0])?.kron(&b.eval(reps[1])?).kron(&c.eval(reps[2])?);
        out = out.checked_add(&m)?;
    }
    Ok(out)
}

/// Coproduct, counit and antipode identities on `V_{j1} ⊗ V_{j2}` (diagonal
/// basis), plus coassociativity on `V_{j1} ⊗ V_{j2} ⊗ V_{j1}`.
pub fn verify_hopf(j1: HalfInt, j2: HalfInt) -> Result<VerificationReport, IrrepError> {
    let r1 = LetterRep::single(&diagonal_basis_irrep(j1)?, 0, 1)?;
    let r2 = LetterRep::single(&diagonal_basis_irrep(j2)?, 0, 1)?;
    let mut report = VerificationReport::new(format!("hopf j1={j1} j2={j2}"));
    let gens = [("X", Gen::X), ("Y", Gen::Y), ("H", Gen::H)];
    let mut delta = Vec::new();
    for (_, g) in gens {
        delta.push(Letter::new(0, 1, g).coproduct().eval(&r1, &r2)?);
    }
    check_sl2_triple(&mut report, "Δ: ", &delta[0], &delta[1], &delta[2]);

    for (name, g) in gens {
        let l = Letter::new(0, 1, g);
        let e = Expr::letter(l);
        let d = l.coproduct();
        report.push(format!("ε({name}) = 0"), e.counit() == int(0), format!("ε = {}", e.counit()), None);
        for (side, rep) in [("V1", &r1), ("V2", &r2)] {
            let gm = e.eval(rep)?;
            report.check_matrices(format!("(ε⊗id)Δ({name}) = {name} on {side}"), &d.counit_left().eval(rep)?, &gm);
            report.check_matrices(format!("(id⊗ε)Δ({name}) = {name} on {side}"), &d.counit_right().eval(rep)?, &gm);
            let zero = PolyMatrix::zeros(rep.dim, rep.dim);
            report.check_matrices(format!("m(S⊗id)Δ({name}) = ε({name}) on {side}"), &d.antipode_left().eval(rep)?, &zero);
            report.check_matrices(format!("m(id⊗S)Δ({name}) = ε({name}) on {side}"), &d.antipode_right().eval(rep)?, &zero);
        }
        let (left, right) = d.coassoc_pair();
        let reps = [&r1, &r2, &r1];
        report.check_matrices(format!("(Δ⊗id)Δ({name}) = (id⊗Δ)Δ({name})"), &eval3(&left, reps)?, &eval3(&right, reps)?);
    }

    // S is an antihomomorphism, so it must respect [X,Y] = H on each factor.
    let x = Expr::letter(Letter::new(0, 1, Gen::X));
    let y = Expr::letter(Letter::new(0, 1, Gen::Y));
    let h = Expr::letter(Letter::new(0, 1, Gen::H));
    for (side, rep) in [("V1", &r1), ("V2", &r2)] {
        let (sx, sy) = (x.antipode().eval(rep)?, y.antipode().eval(rep)?);
        report.check_matrices(format!("[S(Y),S(X)] = S(H) on {side}"), &sy.commutator(&sx), &h.antipode().eval(rep)?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn j(t: u32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn symbolic_counit_and_antipode() {
        let y = Letter::new(0, 1, Gen::Y);
        assert_eq!(Expr::letter(y).counit(), int(0));
        assert_eq!(Expr::letter(y.with(Gen::ExpPos)).counit(), int(1));
        let s = Expr::letter(y).antipode();
        assert_eq!(s.terms[0].1, vec![y.with(Gen::ExpPos), y, y.with(Gen::ExpNeg)]);
        let y2 = Letter::new(1, -1, Gen::Y);
        assert_eq!(Expr::letter(y2).antipode().terms[0].1[0].gen, Gen::ExpNeg);
    }

    #[test]
    fn counit_axiom_is_symbolic_identity_for_x() {
        let x = Letter::new(0, 1, Gen::X);
        let d = x.coproduct();
        assert_eq!(d.counit_left().counit(), int(0));
        assert_eq!(d.counit_left().terms.iter().filter(|(c, _)| *c != int(0)).count(), 1);
    }

    #[test]
    fn hopf_small_pairs() {
        for (a, b) in [(1, 1), (2, 1)] {
            let r = verify_hopf(j(a), j(b)).unwrap();
            assert!(r.passed(), "{:#?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn wrong_coproduct_is_caught() {
        // Δ(Y) = Y⊗1 + 1⊗Y does not satisfy [H,Y] = -{Y,cosh hX} on V1⊗V1.
        let r = LetterRep::single(&diagonal_basis_irrep(j(2)).unwrap(), 0, 1).unwrap();
        let x = Letter::new(0, 1, Gen::X);
        let y = Letter::new(0, 1, Gen::Y);
        let h = Letter::new(0, 1, Gen::H);
        let prim = |l: Letter| TensorExpr::tensor(&Expr::letter(l), &Expr::one()).add(&TensorExpr::tensor(&Expr::one(), &Expr::letter(l)));
        let mut rep = VerificationReport::new("t");
        check_sl2_triple(
            &mut rep,
            "",
            &prim(x).eval(&r, &r).unwrap(),
            &prim(y).eval(&r, &r).unwrap(),
            &prim(h).eval(&r, &r).unwrap(),
        );
        assert!(!rep.passed());
    }
}
