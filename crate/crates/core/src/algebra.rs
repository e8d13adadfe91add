//! The groupoid algebra `K.G` in its graded basis `{gr f}` and the monoid
//! algebra in the basis `{f}`, related by Möbius inversion over domains.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groupoid::{LocalBijection, PermutationGroupoid};
use crate::polynomial::{Polynomial, Rational};
use crate::subset;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Basis {
    /// `gr f`: product `gr f · gr g = gr(f∘g)` when `im g = dom f`, else 0.
    Graded,
    /// `f`: product is the extended monoid composition.
    Monoid,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement {
    basis: Basis,
    coeffs: BTreeMap<LocalBijection, Rational>,
}

impl AlgebraElement {
    pub fn zero(basis: Basis) -> Self {
        Self { basis, coeffs: BTreeMap::new() }
    }

    pub fn basis_element(basis: Basis, f: LocalBijection) -> Self {
        let mut a = Self::zero(basis);
        a.add_term(f, Rational::one());
        a
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn add_term(&mut self, f: LocalBijection, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(f) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LocalBijection, &Rational)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, f: &LocalBijection) -> Rational {
        self.coeffs.get(f).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn check_support(&self, g: &PermutationGroupoid) -> Result<()> {
        match self.coeffs.keys().find(|f| !g.contains(f)) {
            Some(f) => Err(Error::NotInGroupoid(f.display(g.labels()).to_string())),
            None => Ok(()),
        }
    }

    /// `f ↦ Σ_{A ⊆ dom f} gr f|_A`.
    pub fn monoid_to_graded(&self, g: &PermutationGroupoid) -> Result<Self> {
        self.expect(Basis::Monoid)?;
        self.check_support(g)?;
        let mut out = Self::zero(Basis::Graded);
        for (f, c) in &self.coeffs {
            for a in subset::subsets(f.domain()) {
                out.add_term(f.restrict(a), c.clone());
            }
        }
        Ok(out)
    }

    /// `gr f ↦ Σ_{A ⊆ dom f} (-1)^{|dom f| - |A|} f|_A`.
    pub fn graded_to_monoid(&self, g: &PermutationGroupoid) -> Result<Self> {
        self.expect(Basis::Graded)?;
        self.check_support(g)?;
        let mut out = Self::zero(Basis::Monoid);
        for (f, c) in &self.coeffs {
            let dom = f.domain();
            for a in subset::subsets(dom) {
                let sign = if (subset::size(dom) - subset::size(a)).is_multiple_of(2) { c.clone() } else { -c.clone() };
                out.add_term(f.restrict(a), sign);
            }
        }
        Ok(out)
    }

    fn expect(&self, basis: Basis) -> Result<()> {
        if self.basis != basis {
            return Err(Error::Invalid(format!("expected an element in the {basis:?} basis")));
        }
        Ok(())
    }

    /// Product in the element's own basis; both factors must share it.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        other.expect(self.basis)?;
        let mut out = Self::zero(self.basis);
        for (f, a) in &self.coeffs {
            for (g, b) in &other.coeffs {
                let h = match self.basis {
                    Basis::Graded => f.compose(g),
                    Basis::Monoid => Some(f.compose_monoid(g)),
                };
                if let Some(h) = h {
                    out.add_term(h, a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        other.expect(self.basis)?;
        let mut out = self.clone();
        for (f, c) in &other.coeffs {
            out.add_term(f.clone(), c.clone());
        }
        Ok(out)
    }

    /// Action on polynomials: monoid elements act by `f.x^d`, graded ones
    /// only on monomials supported exactly on `dom f`.
    pub fn act(&self, p: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (f, c) in &self.coeffs {
            let image = match self.basis {
                Basis::Graded => p.act_graded(f),
                Basis::Monoid => p.act(f),
            };
            out = out + image.scale(c);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::rational;

    fn lb(pairs: &[(usize, usize)]) -> LocalBijection {
        LocalBijection::new(pairs.iter().copied()).unwrap()
    }

    fn noncm() -> PermutationGroupoid {
        PermutationGroupoid::close(3, &[lb(&[(0, 1)])]).unwrap()
    }

    #[test]
    fn mobius_on_a_single_point() {
        let g = noncm();
        let f = AlgebraElement::basis_element(Basis::Monoid, LocalBijection::identity(0b1));
        let graded = f.monoid_to_graded(&g).unwrap();
        assert_eq!(graded.coeff(&LocalBijection::empty()), rational(1));
        assert_eq!(graded.coeff(&LocalBijection::identity(0b1)), rational(1));
        let back = AlgebraElement::basis_element(Basis::Graded, LocalBijection::identity(0b1))
            .graded_to_monoid(&g)
            .unwrap();
        assert_eq!(back.coeff(&LocalBijection::empty()), rational(-1));
        assert_eq!(back.coeff(&LocalBijection::identity(0b1)), rational(1));
    }

    #[test]
    fn mobius_maps_are_inverse_and_multiplicative() {
        let g = noncm();
        let els = g.elements();
        for (i, f) in els.iter().enumerate() {
            for h in els.iter().skip(i % 3) {
                let mut a = AlgebraElement::zero(Basis::Monoid);
                a.add_term(f.clone(), rational(2));
                a.add_term(h.clone(), rational(-3));
                let round = a.monoid_to_graded(&g).unwrap().graded_to_monoid(&g).unwrap();
                assert_eq!(round, a);
                let b = AlgebraElement::basis_element(Basis::Monoid, h.clone());
                let lhs = a.mul(&b).unwrap().monoid_to_graded(&g).unwrap();
                let rhs = a
                    .monoid_to_graded(&g)
                    .unwrap()
                    .mul(&b.monoid_to_graded(&g).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn graded_products_vanish_across_ranks() {
        let g = PermutationGroupoid::symmetric(3).unwrap();
        for f in g.elements() {
            for h in g.elements() {
                let p = AlgebraElement::basis_element(Basis::Graded, f.clone())
                    .mul(&AlgebraElement::basis_element(Basis::Graded, h.clone()))
                    .unwrap();
                if f.rank() != h.rank() {
                    assert!(p.is_zero());
                }
            }
        }
    }

    #[test]
    fn actions_agree_through_mobius() {
        let g = noncm();
        let p = Polynomial::parse("x1^3 + 2*x1*x3 - x2 + 5").unwrap();
        for f in g.elements() {
            let a = AlgebraElement::basis_element(Basis::Monoid, f.clone());
            assert_eq!(a.act(&p), a.monoid_to_graded(&g).unwrap().act(&p));
        }
    }

    #[test]
    fn foreign_support_is_rejected() {
        let g = noncm();
        let a = AlgebraElement::basis_element(Basis::Monoid, lb(&[(2, 0)]));
        assert!(matches!(a.monoid_to_graded(&g), Err(Error::NotInGroupoid(_))));
    }
}
