use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::exact::{int, Rational};

use super::NcError;

/// Exponent vector over the generators, read in PBW order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn generator(n: usize, g: usize) -> Self {
        let mut e = vec![0; n];
        e[g] = 1;
        Self(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn last(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }

    /// The monomial as a sorted word of generator indices.
    pub fn word(&self) -> Vec<usize> {
        self.0.iter().enumerate().flat_map(|(g, &e)| std::iter::repeat_n(g, e as usize)).collect()
    }
}

/// A noncommutative polynomial in PBW normal form with rational coefficients.
pub type Poly = BTreeMap<Monomial, Rational>;

pub(crate) fn poly_add_scaled(acc: &mut Poly, p: &Poly, c: &Rational) {
    for (m, a) in p {
        let v = acc.entry(m.clone()).or_insert_with(|| int(0));
        *v += a * c;
        if *v == int(0) {
            acc.remove(m);
        }
    }
}

/// `(a, b, [g_a, g_b])` with the bracket as `(coefficient, generator)` pairs.
pub type BracketRule = (usize, usize, Vec<(i64, usize)>);

/// Generators in a fixed PBW order plus the brackets `[g_a, g_b]` of a Lie
/// algebra. Products of normal-ordered monomials are memoized per instance.
pub struct Presentation {
    name: String,
    generators: Vec<String>,
    /// `rules[a][b] = [g_a, g_b]`, antisymmetric.
    rules: Vec<Vec<Poly>>,
    cache: Mutex<HashMap<(Monomial, usize), Arc<Poly>>>,
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Presentation")
            .field("name", &self.name)
            .field("generators", &self.generators)
            .finish()
    }
}

impl Presentation {
    /// `brackets` lists `(a, b, [g_a, g_b])` as linear combinations of
    /// generators; unlisted pairs commute. Rejects presentations that violate
    /// the Jacobi identity.
    pub fn new(name: &str, generators: &[&str], brackets: &[BracketRule]) -> Result<Arc<Self>, NcError> {
        let n = generators.len();
        let mut rules = vec![vec![Poly::new(); n]; n];
        for (a, b, rhs) in brackets {
            let mut p = Poly::new();
            for &(c, g) in rhs {
                poly_add_scaled(&mut p, &Poly::from([(Monomial::generator(n, g), int(1))]), &int(c));
            }
            let mut neg = Poly::new();
            poly_add_scaled(&mut neg, &p, &int(-1));
            rules[*a][*b] = p;
            rules[*b][*a] = neg;
        }
        let pres = Arc::new(Self {
            name: name.to_string(),
            generators: generators.iter().map(|s| s.to_string()).collect(),
            rules,
            cache: Mutex::new(HashMap::new()),
        });
        if let Some(triple) = pres.jacobi_violation() {
            return Err(NcError::Jacobi {
                presentation: name.to_string(),
                triple,
            });
        }
        Ok(pres)
    }

    /// Classical `e(2)`: `[J, P±] = ±P±`, `[P+, P-] = 0`, order `J < P+ < P-`.
    pub fn e2() -> Arc<Self> {
        Self::new("e2", &["J", "P+", "P-"], &[(0, 1, vec![(1, 1)]), (0, 2, vec![(-1, 2)])]).expect("e(2) satisfies Jacobi")
    }

    /// Classical `e(3)` with rotations `J±, J0` and translations `Π±, Π0`,
    /// order `J+ < J0 < J- < Π+ < Π0 < Π-`.
    pub fn e3() -> Arc<Self> {
        const JP: usize = 0;
        const J0: usize = 1;
        const JM: usize = 2;
        const PP: usize = 3;
        const P0: usize = 4;
        const PM: usize = 5;
        Self::new(
            "e3",
            &["J+", "J0", "J-", "Π+", "Π0", "Π-"],
            &[
                (J0, JP, vec![(2, JP)]),
                (J0, JM, vec![(-2, JM)]),
                (JP, JM, vec![(1, J0)]),
                (JP, PM, vec![(1, P0)]),
                (JP, P0, vec![(-2, PP)]),
                (JM, PP, vec![(-1, P0)]),
                (JM, P0, vec![(2, PM)]),
                (J0, PP, vec![(2, PP)]),
                (J0, PM, vec![(-2, PM)]),
            ],
        )
        .expect("e(3) satisfies Jacobi")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// `[g_a, g_b]` in normal form.
    pub fn bracket(&self, a: usize, b: usize) -> &Poly {
        &self.rules[a][b]
    }

    fn commutes(&self, a: usize, b: usize) -> bool {
        self.rules[a][b].is_empty()
    }

    /// `m · g_g` in normal form.
    pub fn mul_gen(&self, m: &Monomial, g: usize) -> Arc<Poly> {
        let key = (m.clone(), g);
        if let Some(p) = self.cache.lock().expect("cache poisoned").get(&key) {
            return Arc::clone(p);
        }
        let result = match m.last() {
            Some(k) if k > g => {
                // m = m'·g_k, so m·g = (m'·g)·g_k + m'·[g_k, g].
                let mut prime = m.clone();
                prime.0[k] -= 1;
                let mut out = Poly::new();
                for (t, c) in self.mul_gen(&prime, g).iter() {
                    poly_add_scaled(&mut out, &self.mul_gen(t, k), c);
                }
                for (t, c) in self.bracket(k, g) {
                    poly_add_scaled(&mut out, &self.mul_mono(&prime, t), c);
                }
                out
            }
            _ => {
                let mut e = m.clone();
                e.0[g] += 1;
                Poly::from([(e, int(1))])
            }
        };
        let result = Arc::new(result);
        self.cache.lock().expect("cache poisoned").insert(key, Arc::clone(&result));
        result
    }

    /// `a · b` in normal form.
    pub fn mul_mono(&self, a: &Monomial, b: &Monomial) -> Poly {
        // No reordering needed when every out-of-order pair commutes.
        let trivial = a.0.iter().enumerate().filter(|(_, &e)| e > 0).all(|(i, _)| {
            b.0.iter().enumerate().filter(|(_, &e)| e > 0).all(|(k, _)| i <= k || self.commutes(i, k))
        });
        if trivial {
            let e = a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect();
            return Poly::from([(Monomial(e), int(1))]);
        }
        let mut acc = Poly::from([(a.clone(), int(1))]);
        for g in b.word() {
            let mut next = Poly::new();
            for (t, c) in &acc {
                poly_add_scaled(&mut next, &self.mul_gen(t, g), c);
            }
            acc = next;
        }
        acc
    }

    pub fn mul_poly(&self, p: &Poly, q: &Poly) -> Poly {
        let mut out = Poly::new();
        for (a, x) in p {
            for (b, y) in q {
                poly_add_scaled(&mut out, &self.mul_mono(a, b), &(x * y));
            }
        }
        out
    }

    fn gen_poly(&self, g: usize) -> Poly {
        Poly::from([(Monomial::generator(self.len(), g), int(1))])
    }

    fn commutator_poly(&self, p: &Poly, q: &Poly) -> Poly {
        let mut out = self.mul_poly(p, q);
        poly_add_scaled(&mut out, &self.mul_poly(q, p), &int(-1));
        out
    }

    /// The first generator triple whose cyclic double-bracket sum does not
    /// normal-order to zero.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let (ga, gb, gc) = (self.gen_poly(a), self.gen_poly(b), self.gen_poly(c));
                    let mut sum = self.commutator_poly(&self.commutator_poly(&ga, &gb), &gc);
                    poly_add_scaled(&mut sum, &self.commutator_poly(&self.commutator_poly(&gb, &gc), &ga), &int(1));
                    poly_add_scaled(&mut sum, &self.commutator_poly(&self.commutator_poly(&gc, &ga), &gb), &int(1));
                    if !sum.is_empty() {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(g, &e)| if e == 1 { self.generators[g].clone() } else { format!("{}^{e}", self.generators[g]) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}
