//! Dense matrices over [`BiPoly`], including terminating power series of
//! nilpotent matrices and division-free characteristic polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::bipoly::BiPoly;
use super::rational::Rational;
use super::series::ElementaryFn;
use super::ExactError;
use crate::par::{self, Execution};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BiPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BiPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BiPoly::one());
        }
        m
    }

    pub fn scalar(n: usize, c: &BiPoly) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BiPoly) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    /// Row-major nested rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<BiPoly>>) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(ExactError::Ragged);
        }
        Ok(Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BiPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BiPoly) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row_vecs(&self) -> Vec<Vec<BiPoly>> {
        self.entries.chunks(self.cols.max(1)).map(<[BiPoly]>::to_vec).collect()
    }

    pub fn map(&self, f: impl Fn(&BiPoly) -> BiPoly) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(BiPoly::is_zero)
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.entries
            .iter()
            .position(|e| !e.is_zero())
            .map(|k| (k / self.cols, k % self.cols))
    }

    pub fn is_strictly_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..=i.min(self.cols.saturating_sub(1))).all(|j| self.get(i, j).is_zero()))
    }

    pub fn trace(&self) -> BiPoly {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|e| e.scale(c))
    }

    pub fn scale_poly(&self, c: &BiPoly) -> Self {
        self.map(|e| e * c)
    }

    pub fn specialize_lambda(&self, value: &Rational) -> Self {
        self.map(|e| e.specialize_lambda(value))
    }

    pub fn negate_h(&self) -> Self {
        self.map(BiPoly::negate_h)
    }

    pub fn at_h_zero(&self) -> Self {
        self.map(BiPoly::at_h_zero)
    }

    pub fn mul_h_pow(&self, k: u32) -> Self {
        self.map(|e| e.mul_h_pow(k))
    }

    /// Exact division of every entry by `h^k`.
    pub fn div_h_pow(&self, k: u32) -> Result<Self, ExactError> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            entries.push(e.div_h_pow(k).ok_or(ExactError::NotDivisible { by: k as usize })?);
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    fn check_same_shape(&self, other: &Self) -> Result<(), ExactError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(ExactError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ExactError> {
        self.mul_with(other, Execution::default())
    }

    /// Product with an explicit execution mode; rows are independent.
    /// Zero entries are skipped, which matters for Kronecker products.
    pub fn mul_with(&self, other: &Self, exec: Execution) -> Result<Self, ExactError> {
        if self.cols != other.rows {
            return Err(ExactError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let n = other.cols;
        // Small products are not worth the fan-out.
        let exec = if self.rows * n < 64 { Execution::Sequential } else { exec };
        let rows = par::map_range(exec, 0..self.rows, |i| {
            let mut row = vec![BiPoly::zero(); n];
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for (j, slot) in row.iter_mut().enumerate() {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        *slot += &(a * b);
                    }
                }
            }
            row
        });
        Ok(Self {
            rows: self.rows,
            cols: n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Kronecker product `self ⊗ other`, with `(i1,i2)` mapped to `i1 * n2 + i2`.
    pub fn kron(&self, other: &Self) -> Self {
        let (r2, c2) = (other.rows, other.cols);
        let mut out = Self::zeros(self.rows * r2, self.cols * c2);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * r2 + k, j * c2 + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// `[A, B] = AB - BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// `{A, B} = AB + BA`.
    pub fn anticommutator(&self, other: &Self) -> Self {
        &(self * other) + &(other * self)
    }

    /// `true` if `self^n = 0` for `n` the dimension.
    pub fn is_nilpotent(&self) -> bool {
        self.is_square() && self.pow(self.rows as u32).is_zero()
    }

    /// Characteristic polynomial `det(x I - A)` by Berkowitz's division-free
    /// algorithm. Returns coefficients `c_0 ..= c_n` of `x^0 ..= x^n`.
    pub fn charpoly(&self) -> Result<Vec<BiPoly>, ExactError> {
        if !self.is_square() {
            return Err(ExactError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        // Descending coefficient vector of the leading r×r block.
        let mut p = vec![BiPoly::one()];
        for r in 0..n {
            // Column above and row left of the new diagonal entry.
            let s: Vec<BiPoly> = (0..r).map(|i| self.get(i, r).clone()).collect();
            let row: Vec<BiPoly> = (0..r).map(|j| self.get(r, j).clone()).collect();
            let mut t = Vec::with_capacity(r + 2);
            t.push(BiPoly::one());
            t.push(-self.get(r, r));
            let mut v = s;
            for _ in 0..r {
                let dot: BiPoly = row.iter().zip(&v).map(|(a, b)| a * b).sum();
                t.push(-dot);
                v = (0..r)
                    .map(|i| (0..r).map(|k| self.get(i, k) * &v[k]).sum())
                    .collect();
            }
            // Lower-triangular Toeplitz product: (r+2)×(r+1) times p.
            let next: Vec<BiPoly> = (0..r + 2)
                .map(|i| {
                    (0..=i.min(r))
                        .filter_map(|j| t.get(i - j).map(|ti| ti * &p[j]))
                        .sum()
                })
                .collect();
            p = next;
        }
        p.reverse();
        Ok(p)
    }
}

/// `Σ_{k<d} f_k (h^{h_scale} M)^k` for nilpotent `M` of dimension `d`.
///
/// The sum is exact because `M^d = 0`; a matrix that is not nilpotent is
/// rejected rather than silently truncated.
pub fn nilpotent_apply(f: ElementaryFn, m: &PolyMatrix, h_scale: u32) -> Result<PolyMatrix, ExactError> {
    if !m.is_square() {
        return Err(ExactError::NotSquare(m.rows, m.cols));
    }
    let d = m.rows;
    let coeffs = f.coefficients(d);
    let scaled = m.mul_h_pow(h_scale);
    let mut acc = PolyMatrix::zeros(d, d);
    let mut power = PolyMatrix::identity(d);
    for c in coeffs.iter().take(d) {
        acc = &acc + &power.scale(c);
        power = &power * &scaled;
    }
    if !power.is_zero() {
        return Err(ExactError::NotNilpotent);
    }
    Ok(acc)
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} [", self.rows, self.cols)?;
        for row in self.row_vecs() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

// Operator forms panic on shape mismatch; the `checked_*` methods report it.
impl Add for &PolyMatrix {
    type Output = PolyMatrix;
    fn add(self, rhs: &PolyMatrix) -> PolyMatrix {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &PolyMatrix {
    type Output = PolyMatrix;
    fn sub(self, rhs: &PolyMatrix) -> PolyMatrix {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &PolyMatrix {
    type Output = PolyMatrix;
    fn neg(self) -> PolyMatrix {
        self.map(|e| -e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn c(n: i64) -> BiPoly {
        BiPoly::from_int(n)
    }

    fn classical_jplus(two_j: usize) -> PolyMatrix {
        let d = two_j + 1;
        PolyMatrix::from_fn(d, d, |i, j| {
            if j == i + 1 {
                c((j * (two_j - j + 1)) as i64)
            } else {
                BiPoly::zero()
            }
        })
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = PolyMatrix::zeros(2, 3);
        let b = PolyMatrix::zeros(2, 3);
        assert!(matches!(a.checked_mul(&b), Err(ExactError::DimensionMismatch { .. })));
        assert!(a.checked_add(&PolyMatrix::zeros(3, 2)).is_err());
        assert!(PolyMatrix::from_rows(vec![vec![c(1)], vec![]]).is_err());
    }

    #[test]
    fn arctanh_of_two_by_two_is_identity_map() {
        let jp = classical_jplus(1);
        let at = nilpotent_apply(ElementaryFn::Arctanh, &jp.scale(&rat(1, 2)), 1).unwrap();
        let x = at.scale(&int(2)).div_h_pow(1).unwrap();
        assert_eq!(x, jp);
    }

    #[test]
    fn arctanh_map_on_eight_dim() {
        let jp = classical_jplus(7);
        let at = nilpotent_apply(ElementaryFn::Arctanh, &jp.scale(&rat(1, 2)), 1).unwrap();
        let x = at.scale(&int(2)).div_h_pow(1).unwrap();
        assert_eq!(x.get(0, 3), &BiPoly::monomial(int(105), 0, 2));
        assert_eq!(x.get(0, 5), &BiPoly::monomial(int(3780), 0, 4));
    }

    #[test]
    fn not_nilpotent_is_rejected() {
        let m = PolyMatrix::identity(3);
        assert_eq!(nilpotent_apply(ElementaryFn::Exp, &m, 1), Err(ExactError::NotNilpotent));
    }

    #[test]
    fn exp_inverse_pair() {
        let jp = classical_jplus(4);
        let a = nilpotent_apply(ElementaryFn::Exp, &jp, 1).unwrap();
        let b = nilpotent_apply(ElementaryFn::Exp, &(-&jp), 1).unwrap();
        assert_eq!(&a * &b, PolyMatrix::identity(5));
    }

    fn det_leibniz(m: &PolyMatrix) -> BiPoly {
        fn perms(n: usize) -> Vec<(Vec<usize>, i64)> {
            if n == 0 {
                return vec![(vec![], 1)];
            }
            let mut out = Vec::new();
            for (p, s) in perms(n - 1) {
                for pos in 0..n {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    let sign = if (n - 1 - pos).is_multiple_of(2) { s } else { -s };
                    out.push((q, sign));
                }
            }
            out
        }
        perms(m.rows())
            .into_iter()
            .map(|(p, s)| {
                let mut acc = BiPoly::from_int(s);
                for (i, &j) in p.iter().enumerate() {
                    acc = &acc * m.get(i, j);
                }
                acc
            })
            .sum()
    }

    #[test]
    fn berkowitz_matches_leibniz_on_symbolic_matrix() {
        // A 4×4 matrix with λ and h entries; compare det(xI - A) at several x.
        let l = BiPoly::lambda();
        let h = BiPoly::h();
        let a = PolyMatrix::from_rows(vec![
            vec![l.clone(), c(2), h.clone(), c(0)],
            vec![c(1), &l - &c(3), c(0), &h * &h],
            vec![c(-2), c(5), c(7), l.clone()],
            vec![h.clone(), c(0), c(1), c(-1)],
        ])
        .unwrap();
        let cp = a.charpoly().unwrap();
        assert_eq!(cp.len(), 5);
        assert!(cp[4].is_one());
        for x in [-2i64, 0, 1, 3, 5] {
            let shifted = &PolyMatrix::scalar(4, &c(x)) - &a;
            let direct = det_leibniz(&shifted);
            let via_cp: BiPoly = cp
                .iter()
                .enumerate()
                .map(|(k, ck)| ck * &c(x.pow(k as u32)))
                .sum();
            assert_eq!(direct, via_cp, "x = {x}");
        }
    }

    #[test]
    fn kron_shape_and_upper_triangularity() {
        let jp = classical_jplus(2);
        let k = jp.kron(&PolyMatrix::identity(2));
        assert_eq!((k.rows(), k.cols()), (6, 6));
        assert!(k.is_strictly_upper_triangular());
        assert!(PolyMatrix::identity(2).kron(&jp).is_strictly_upper_triangular());
    }
}
