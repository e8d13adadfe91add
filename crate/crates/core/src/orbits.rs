//! Orbits of monomials under the partial action of a permutation groupoid,
//! orbit sums, and invariance tests.
//!
//! For a closed groupoid `G` the orbit of `x^d` is `{f.x^d : dom f = supp x^d}`:
//! any chain of applications composes to a single element of `G`.

use std::collections::HashSet;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groupoid::PermutationGroupoid;
use crate::polynomial::{Monomial, Polynomial, Rational, TermOrder};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialOrbit {
    members: Vec<Monomial>,
    leading: Monomial,
}

impl MonomialOrbit {
    /// Members in increasing internal order.
    pub fn members(&self) -> &[Monomial] {
        &self.members
    }

    pub fn leading(&self) -> &Monomial {
        &self.leading
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.members.binary_search(m).is_ok()
    }

    pub fn degree(&self) -> u32 {
        self.leading.degree()
    }

    /// `o(x^d)`: the sum of the members with coefficient 1.
    pub fn orbit_sum(&self) -> Polynomial {
        let mut p = Polynomial::zero();
        for m in &self.members {
            p.add_term(m.clone(), Rational::one());
        }
        p
    }

    /// Leading member under another order.
    pub fn leading_under(&self, order: &TermOrder) -> Monomial {
        leading_monomial(self, order)
    }
}

pub fn orbit(g: &PermutationGroupoid, m: &Monomial) -> MonomialOrbit {
    orbit_with_order(g, m, &TermOrder::default())
}

pub fn orbit_with_order(g: &PermutationGroupoid, m: &Monomial, order: &TermOrder) -> MonomialOrbit {
    let mut members: Vec<Monomial> = g.with_domain(m.support()).filter_map(|f| m.act(f)).collect();
    if members.is_empty() {
        // support outside the ground set: only the trivial orbit
        members.push(m.clone());
    }
    members.sort();
    members.dedup();
    let leading = order.max(&members).cloned().expect("orbits are nonempty");
    MonomialOrbit { members, leading }
}

pub fn leading_monomial(o: &MonomialOrbit, order: &TermOrder) -> Monomial {
    order.max(&o.members).cloned().expect("orbits are nonempty")
}

/// One orbit per class of degree-`n` monomials, sorted by decreasing leading
/// monomial under `order`.
pub fn orbits_of_degree_with_order(g: &PermutationGroupoid, n: u32, order: &TermOrder) -> Vec<MonomialOrbit> {
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut out = Vec::new();
    for m in Monomial::all_of_degree(g.size(), n) {
        if seen.contains(&m) {
            continue;
        }
        let o = orbit_with_order(g, &m, order);
        seen.extend(o.members.iter().cloned());
        out.push(o);
    }
    out.sort_by(|a, b| order.cmp(&b.leading, &a.leading));
    out
}

pub fn orbit_sums_of_degree(g: &PermutationGroupoid, n: u32) -> Vec<MonomialOrbit> {
    orbits_of_degree_with_order(g, n, &TermOrder::default())
}

/// `dim K[X]^G_n` without materializing the orbit sums.
pub fn count_orbits(g: &PermutationGroupoid, n: u32) -> usize {
    // each orbit is counted through its members: Σ 1/|orbit| would need
    // rationals, so count the members that are minimal in their orbit
    Monomial::all_of_degree(g.size(), n)
        .into_iter()
        .filter(|m| g.with_domain(m.support()).filter_map(|f| m.act(f)).all(|image| image >= *m))
        .count()
}

/// True when `p` has equal coefficients on each orbit.
pub fn is_invariant(g: &PermutationGroupoid, p: &Polynomial) -> bool {
    p.terms().all(|(m, c)| g.with_domain(m.support()).all(|f| match m.act(f) {
        Some(image) => p.coeff(&image) == *c,
        None => true,
    }))
}

/// Coordinates of an invariant polynomial in the orbit-sum basis.
pub fn expand_in_orbit_basis(g: &PermutationGroupoid, p: &Polynomial) -> Result<Vec<(MonomialOrbit, Rational)>> {
    if !is_invariant(g, p) {
        return Err(Error::NotInvariant);
    }
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut out = Vec::new();
    for (m, c) in p.terms() {
        if seen.contains(m) {
            continue;
        }
        let o = orbit(g, m);
        seen.extend(o.members.iter().cloned());
        out.push((o, c.clone()));
    }
    let order = TermOrder::default();
    out.sort_by(|a, b| order.cmp(&b.0.leading, &a.0.leading));
    Ok(out)
}

/// `a · b` expanded in orbit sums; both factors must be invariant.
pub fn product_in_orbit_basis(
    g: &PermutationGroupoid,
    a: &Polynomial,
    b: &Polynomial,
) -> Result<Vec<(MonomialOrbit, Rational)>> {
    if !is_invariant(g, a) || !is_invariant(g, b) {
        return Err(Error::NotInvariant);
    }
    expand_in_orbit_basis(g, &(a * b))
}

/// Sum of orbit sums with the given coefficients.
pub fn combine(terms: &[(MonomialOrbit, Rational)]) -> Polynomial {
    let mut p = Polynomial::zero();
    for (o, c) in terms {
        if !c.is_zero() {
            p = p + o.orbit_sum().scale(c);
        }
    }
    p
}
