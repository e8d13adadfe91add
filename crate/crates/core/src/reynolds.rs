//! The Reynolds projection of `K[X]` onto `K[X]^G`.

use num_bigint::BigInt;

use crate::algebra::{AlgebraElement, Basis};
use crate::groupoid::PermutationGroupoid;
use crate::polynomial::{elementary_symmetric_on, Monomial, Polynomial, Rational};
use crate::subset;

/// `R = Σ_A (1/|G(A,·)|) Σ_{dom g = A} gr g`.
#[derive(Clone, Debug)]
pub struct ReynoldsOperator {
    element: AlgebraElement,
}

/// Outcome of the search for a failure of `R(e_d p) = e_d R(p)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymMorphismCheck {
    pub holds: bool,
    /// `(d, p)` with `R(e_d p) ≠ e_d R(p)`, the first one in degree order.
    pub witness: Option<(usize, Monomial)>,
}

impl ReynoldsOperator {
    pub fn new(g: &PermutationGroupoid) -> Self {
        let mut element = AlgebraElement::zero(Basis::Graded);
        for a in subset::subsets(g.ground()) {
            let count = g.count_with_domain(a);
            let weight = Rational::new(BigInt::from(1), BigInt::from(count));
            for f in g.with_domain(a) {
                element.add_term(f.clone(), weight.clone());
            }
        }
        Self { element }
    }

    pub fn element(&self) -> &AlgebraElement {
        &self.element
    }

    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        self.element.act(p)
    }
}

pub fn reynolds(g: &PermutationGroupoid) -> ReynoldsOperator {
    ReynoldsOperator::new(g)
}

/// Tests `R(e_d · p) = e_d · R(p)` for every `1 ≤ d ≤ |X|` and every monomial
/// `p` of degree at most `dmax`.
pub fn reynolds_is_sym_morphism(g: &PermutationGroupoid, dmax: u32) -> SymMorphismCheck {
    let r = ReynoldsOperator::new(g);
    let e: Vec<Polynomial> = (1..=g.size()).map(|d| elementary_symmetric_on(g.ground(), d)).collect();
    for n in 0..=dmax {
        for m in Monomial::all_of_degree(g.size(), n) {
            let p = Polynomial::from_monomial(m.clone());
            let rp = r.apply(&p);
            for (i, ed) in e.iter().enumerate() {
                if r.apply(&(ed * &p)) != ed * &rp {
                    return SymMorphismCheck { holds: false, witness: Some((i + 1, m)) };
                }
            }
        }
    }
    SymMorphismCheck { holds: true, witness: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::LocalBijection;
    use crate::linalg;
    use crate::orbits::{count_orbits, is_invariant, orbit_sums_of_degree};

    fn noncm() -> PermutationGroupoid {
        PermutationGroupoid::close(3, &[LocalBijection::new([(0, 1)]).unwrap()]).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s).unwrap()
    }

    #[test]
    fn averages() {
        let s2 = PermutationGroupoid::symmetric(2).unwrap();
        assert_eq!(reynolds(&s2).apply(&p("x1")), p("1/2*x1 + 1/2*x2"));
        assert_eq!(reynolds(&noncm()).apply(&p("x1^3")), p("1/2*x1^3 + 1/2*x2^3"));
        assert_eq!(reynolds(&noncm()).apply(&p("x1*x2")), p("x1*x2"));
        assert_eq!(reynolds(&noncm()).apply(&p("7")), p("7"));
    }

    #[test]
    fn projection_onto_invariants() {
        let groupoids = [
            noncm(),
            PermutationGroupoid::increasing(3).unwrap(),
            PermutationGroupoid::cyclic(3).unwrap(),
            PermutationGroupoid::alternating(3).unwrap(),
        ];
        for g in &groupoids {
            let r = reynolds(g);
            for n in 0..5 {
                let images: Vec<Polynomial> = Monomial::all_of_degree(3, n)
                    .into_iter()
                    .map(|m| r.apply(&Polynomial::from_monomial(m)))
                    .collect();
                for img in &images {
                    assert!(is_invariant(g, img));
                    assert_eq!(&r.apply(img), img);
                }
                assert_eq!(linalg::rank(&images), count_orbits(g, n));
                for o in orbit_sums_of_degree(g, n) {
                    assert_eq!(r.apply(&o.orbit_sum()), o.orbit_sum());
                }
            }
        }
    }

    #[test]
    fn sym_morphism_iff_group() {
        let s2 = PermutationGroupoid::symmetric(2).unwrap();
        assert!(reynolds_is_sym_morphism(&s2, 4).holds);
        let c3 = PermutationGroupoid::cyclic(3).unwrap();
        assert!(reynolds_is_sym_morphism(&c3, 4).holds);
        let check = reynolds_is_sym_morphism(&noncm(), 4);
        assert!(!check.holds);
        assert_eq!(check.witness, Some((1, Monomial::var(0))));
        let q = PermutationGroupoid::increasing(2).unwrap();
        assert!(!reynolds_is_sym_morphism(&q, 4).holds);
    }
}
