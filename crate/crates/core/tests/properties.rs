use num_bigint::BigInt;
use pgroupoid::algebra::{AlgebraElement, Basis};
use pgroupoid::orbits::{count_orbits, is_invariant, orbits_of_degree_with_order};
use pgroupoid::polynomial::rational;
use pgroupoid::relational::{cameron_product, isomorphic, profile, Equivalence, Relation, RelationalStructure, SetFunction};
use pgroupoid::reynolds::reynolds;
use pgroupoid::series::RationalSeries;
use pgroupoid::{subset, LocalBijection, Monomial, PermutationGroupoid, Polynomial, TermOrder};
use proptest::prelude::*;

const VARS: usize = 4;

fn arb_monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..3, VARS).prop_map(Monomial::new)
}

fn arb_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((arb_monomial(), -3i64..4), 0..4).prop_map(|terms| {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, rational(c));
        }
        p
    })
}

fn arb_bijection(n: usize) -> impl Strategy<Value = LocalBijection> {
    (Just((0..n).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), n)).prop_map(|(perm, keep)| {
        LocalBijection::new(perm.into_iter().enumerate().filter(|&(i, _)| keep[i])).unwrap()
    })
}

fn arb_groupoid() -> impl Strategy<Value = PermutationGroupoid> {
    prop::collection::vec(arb_bijection(3), 0..3).prop_map(|gens| PermutationGroupoid::close(3, &gens).unwrap())
}

fn arb_graph(n: usize) -> impl Strategy<Value = RelationalStructure> {
    prop::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
        let tuples = (0..n * n).filter(|&k| bits[k] && k / n != k % n).map(|k| vec![k / n, k % n]);
        RelationalStructure::new(n, vec![Relation::new("edge", 2, tuples)]).unwrap()
    })
}

fn relabel(r: &RelationalStructure, perm: &[usize]) -> RelationalStructure {
    let rels = r
        .relations()
        .iter()
        .map(|rel| Relation::new(&rel.name, rel.arity, rel.tuples.iter().map(|t| t.iter().map(|&p| perm[p]).collect())))
        .collect();
    RelationalStructure::new(r.size(), rels).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn star_is_associative_with_unit(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.star(&b).star(&c), a.star(&b.star(&c)));
        prop_assert_eq!(a.star(&Polynomial::one()), a.clone());
        prop_assert_eq!(Polynomial::one().star(&a), a);
    }

    #[test]
    fn derivation_and_steenrod_obey_leibniz(a in arb_poly(), b in arb_poly(), k in 0u32..3) {
        let ab = &a * &b;
        prop_assert_eq!(ab.derivation(), &(&a.derivation() * &b) + &(&a * &b.derivation()));
        prop_assert_eq!(ab.steenrod(k), &(&a.steenrod(k) * &b) + &(&a * &b.steenrod(k)));
    }

    #[test]
    fn closure_is_an_inverse_monoid_of_partial_maps(g in arb_groupoid()) {
        prop_assert!(g.is_closed());
        for f in g.elements() {
            prop_assert!(g.contains(&f.inverse()));
            for a in subset::subsets(f.domain()) {
                prop_assert!(g.contains(&f.restrict(a)));
            }
        }
    }

    #[test]
    fn monoid_action_is_compatible_with_composition(g in arb_groupoid(), p in arb_poly(), i in 0usize..64, j in 0usize..64) {
        let f = &g.elements()[i % g.len()];
        let h = &g.elements()[j % g.len()];
        let a = AlgebraElement::basis_element(Basis::Monoid, f.clone());
        let b = AlgebraElement::basis_element(Basis::Monoid, h.clone());
        let p = p.kill_outside(subset::full(3));
        prop_assert_eq!(a.mul(&b).unwrap().act(&p), a.act(&b.act(&p)));
        // the change of basis does not change the action
        prop_assert_eq!(a.monoid_to_graded(&g).unwrap().act(&p), a.act(&p));
        prop_assert_eq!(a.monoid_to_graded(&g).unwrap().graded_to_monoid(&g).unwrap(), a);
    }

    #[test]
    fn reynolds_projects_onto_invariants(g in arb_groupoid(), p in arb_poly()) {
        let p = p.kill_outside(subset::full(3));
        let r = reynolds(&g);
        let image = r.apply(&p);
        prop_assert!(is_invariant(&g, &image));
        prop_assert_eq!(r.apply(&image), image);
    }

    #[test]
    fn orbits_partition_the_monomials(g in arb_groupoid(), n in 0u32..5) {
        let orbits = orbits_of_degree_with_order(&g, n, &TermOrder::shape());
        prop_assert_eq!(orbits.len(), count_orbits(&g, n));
        let covered: usize = orbits.iter().map(|o| o.len()).sum();
        prop_assert_eq!(covered, Monomial::all_of_degree(3, n).len());
    }

    #[test]
    fn fitted_series_reproduce_their_values(num in prop::collection::vec(-5i64..6, 1..6), den in prop::collection::vec(1u32..4, 1..4)) {
        let s = RationalSeries::from_i64(&num, &den).unwrap();
        let values = s.expand(40);
        let fitted = RationalSeries::fit(&values, &den, 10).unwrap();
        prop_assert_eq!(fitted.expand(40), values.clone());
        let mut wider = den.clone();
        wider.push(2);
        prop_assert_eq!(s.rewrite_denominator(&wider).unwrap().expand(40), values);
    }

    #[test]
    fn relabelled_graphs_are_isomorphic(r in arb_graph(6), perm in Just((0..6).collect::<Vec<_>>()).prop_shuffle()) {
        let s = relabel(&r, &perm);
        prop_assert!(isomorphic(&r, &s).unwrap());
        for n in 0..=6 {
            prop_assert_eq!(profile(&r, n).unwrap(), profile(&s, n).unwrap());
        }
    }

    #[test]
    fn products_of_invariant_set_functions_stay_invariant(r in arb_graph(5), a in 0u32..32, b in 0u32..32) {
        let eq = Equivalence::isomorphism(&r);
        let ground = r.ground();
        let f = SetFunction::indicator(ground, |m| isomorphic(&r.induced(m), &r.induced(a)).unwrap());
        let g = SetFunction::indicator(ground, |m| isomorphic(&r.induced(m), &r.induced(b)).unwrap());
        prop_assert!(f.is_invariant(&eq, ground));
        // induced substructures are hereditary, so invariants form a ring
        prop_assert!(cameron_product(&f, &g).is_invariant(&eq, ground));
    }
}

#[test]
fn fit_rejects_values_outside_the_denominator() {
    let values: Vec<BigInt> = (0..30).map(|n: i64| BigInt::from(n * n * n)).collect();
    assert!(RationalSeries::fit(&values, &[1, 1], 10).is_err());
    assert!(RationalSeries::fit(&values, &[1, 1, 1, 1], 10).is_ok());
}
