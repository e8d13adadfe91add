//! Exact sparse multivariate polynomials over the rationals.
//!
//! Besides ordinary arithmetic this module provides the chain product `★`,
//! the monoid and graded actions of local bijections, the derivation
//! `D = Σ ∂_i` and the rational Steenrod operators `S_k = Σ x_i^{k+1} ∂_i`.

mod monomial;
mod order;
mod text;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use monomial::{ChainDecomposition, FineDegree, Monomial};
pub use order::{OrderKind, TermOrder};

use crate::error::{Error, Result};
use crate::groupoid::LocalBijection;
use crate::subset::{self, Mask};

pub type Rational = num_rational::BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(Monomial::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Self::term(m, Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn var(i: usize) -> Self {
        Self::from_monomial(Monomial::var(i))
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Same as [`Polynomial::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Terms in descending order under `order`.
    pub fn sorted_terms(&self, order: &TermOrder) -> Vec<(&Monomial, &Rational)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| order.cmp(b.0, a.0));
        t
    }

    pub fn leading_monomial(&self, order: &TermOrder) -> Option<&Monomial> {
        order.max(self.terms.keys())
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    /// Linear extension of a map on monomials (returning `None` for zero).
    pub fn map_monomials<F: Fn(&Monomial) -> Option<Monomial>>(&self, f: F) -> Polynomial {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if let Some(image) = f(m) {
                out.add_term(image, c.clone());
            }
        }
        out
    }

    /// Chain product `p ★ q`.
    pub fn star(&self, other: &Polynomial) -> Polynomial {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some(m) = star_monomials(a, b) {
                    out.add_term(m, ca * cb);
                }
            }
        }
        out
    }

    /// Monoid action `f.p`: kills monomials whose support is not inside `dom f`.
    pub fn act(&self, f: &LocalBijection) -> Polynomial {
        self.map_monomials(|m| m.act(f))
    }

    /// Graded action `gr f.p`: kills monomials whose support is not exactly `dom f`.
    pub fn act_graded(&self, f: &LocalBijection) -> Polynomial {
        let dom = f.domain();
        self.map_monomials(|m| if m.support() == dom { m.act(f) } else { None })
    }

    /// `D = Σ_i ∂_i`.
    pub fn derivation(&self) -> Polynomial {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let mut v = m.exponents().to_vec();
                v[i] -= 1;
                out.add_term(Monomial::new(v), c * rational(e as i64));
            }
        }
        out
    }

    /// Rational Steenrod operator `S_k = Σ_i x_i^{k+1} ∂_i`.
    pub fn steenrod(&self, k: u32) -> Polynomial {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let mut v = m.exponents().to_vec();
                v[i] += k;
                out.add_term(Monomial::new(v), c * rational(e as i64));
            }
        }
        out
    }

    /// Sets `x_i = 0` for every `i` outside `keep`.
    pub fn kill_outside(&self, keep: Mask) -> Polynomial {
        self.map_monomials(|m| subset::is_subset(m.support(), keep).then(|| m.clone()))
    }

    /// Renames variable `i` to `map[i]`; every variable in the support must be mapped.
    pub fn rename(&self, map: &[usize]) -> Polynomial {
        self.map_monomials(|m| {
            let mut v = Vec::new();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    let j = map[i];
                    if v.len() <= j {
                        v.resize(j + 1, 0);
                    }
                    v[j] = e;
                }
            }
            Some(Monomial::new(v))
        })
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        (0..e).fold(Polynomial::one(), |acc, _| &acc * self)
    }

    pub fn parse(s: &str) -> Result<Polynomial> {
        text::parse(s)
    }
}

fn star_monomials(a: &Monomial, b: &Monomial) -> Option<Monomial> {
    let mut layers = a.chain_decompose().layers;
    layers.extend(b.chain_decompose().layers);
    ChainDecomposition { layers }.is_multichain().then(|| a.mul(b))
}

/// `e_d` on the variables of `set`.
pub fn elementary_symmetric_on(set: Mask, d: usize) -> Polynomial {
    let mut p = Polynomial::zero();
    for s in subset::subsets(set) {
        if subset::size(s) == d {
            p.add_term(Monomial::of_set(s), Rational::one());
        }
    }
    p
}

/// `e_d = Σ_{|S| = d} x_S` on `n` variables.
pub fn elementary_symmetric(d: usize, n: usize) -> Result<Polynomial> {
    if d < 1 || d > n {
        return Err(Error::DegreeOutOfRange { degree: d, max: n });
    }
    Ok(elementary_symmetric_on(subset::full(n), d))
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        Polynomial::from_monomial(m)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::print(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s).unwrap()
    }

    #[test]
    fn star_examples() {
        assert_eq!(p("x1").star(&p("x1")), p("x1^2"));
        assert!(p("x1").star(&p("x2")).is_zero());
        assert_eq!(p("x1*x3^2").star(&p("x1*x2*x3^2")), p("x1^2*x2*x3^4"));
        assert!(p("x1*x3^2").star(&p("x1*x2")).is_zero());
        let q = p("3*x1^2*x2 - x3 + 1/2");
        assert_eq!(Polynomial::one().star(&q), q);
    }

    #[test]
    fn elementary_symmetric_examples() {
        assert_eq!(elementary_symmetric(1, 3).unwrap(), p("x1 + x2 + x3"));
        assert_eq!(elementary_symmetric(3, 3).unwrap(), p("x1*x2*x3"));
        assert!(elementary_symmetric(0, 3).is_err());
        assert!(elementary_symmetric(4, 3).is_err());
        // chain {3} ⊆ {1,3} already has a size-2 layer, which gets replicated
        let chain = p("x1*x3^2");
        let e2 = elementary_symmetric(2, 3).unwrap();
        assert_eq!(chain.star(&e2), p("x1^2*x3^3"));
    }

    #[test]
    fn actions() {
        let f = LocalBijection::new([(0, 1)]).unwrap();
        assert_eq!(p("x1^3").act(&f), p("x2^3"));
        assert!(p("x3").act(&f).is_zero());
        let id12 = LocalBijection::identity(0b011);
        assert!(p("x1").act_graded(&id12).is_zero());
        assert_eq!(p("x1").act(&id12), p("x1"));
        // the graded action is not multiplicative
        assert_eq!(p("x1*x2").act_graded(&id12), p("x1*x2"));
        let q = p("x1^2 - 2*x2*x3 + 5");
        assert_eq!(q.act(&LocalBijection::identity(0b111)), q);
    }

    #[test]
    fn derivations() {
        assert_eq!(p("x1^2*x2").derivation(), p("2*x1*x2 + x1^2"));
        assert!(Polynomial::one().derivation().is_zero());
        assert_eq!(p("x1 + x2").steenrod(1), p("x1^2 + x2^2"));
        assert_eq!(p("x1^3").steenrod(0), p("3*x1^3"));
    }

    #[test]
    fn arithmetic() {
        let a = p("x1 + x2");
        assert_eq!(&a * &a, p("x1^2 + 2*x1*x2 + x2^2"));
        assert!((&a - &a).is_zero());
        assert_eq!(a.pow(0), Polynomial::one());
        assert_eq!(p("x1*x2 + x3").kill_outside(0b011), p("x1*x2"));
    }
}
