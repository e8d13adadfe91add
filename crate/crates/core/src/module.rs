//! `K[X]^G` as a module over symmetric polynomials: generators coming from
//! chains of subsets, degree-by-degree freeness checks, the flag incidence
//! matrix, and SAGBI diagnostics.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groupoid::{for_each_permutation, PermutationGroupoid};
use crate::linalg::{self, Echelon};
use crate::orbits::{is_invariant, orbit, orbit_sums_of_degree, orbit_with_order, MonomialOrbit};
use crate::polynomial::{elementary_symmetric_on, FineDegree, Monomial, Polynomial, Rational, TermOrder};
use crate::series::{fine_hilbert_table, RationalSeries};
use crate::subset::{self, Mask};

/// The orbit of `x_{S_1} ⋯ x_{S_k}` for a strict chain `S_1 ⊊ … ⊊ S_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChainGenerator {
    /// Chain of the leading monomial, smallest set first.
    pub chain: Vec<Mask>,
    pub orbit: MonomialOrbit,
}

impl ChainGenerator {
    pub fn degree(&self) -> u32 {
        self.orbit.degree()
    }

    pub fn orbit_sum(&self) -> Polynomial {
        self.orbit.orbit_sum()
    }

    /// Sizes `|S_j|` of the layers.
    pub fn layer_sizes(&self) -> Vec<usize> {
        self.chain.iter().map(|&s| subset::size(s)).collect()
    }
}

/// One generator per orbit of strict-chain monomials, by degree then by
/// decreasing leading monomial.
pub fn chain_generators(g: &PermutationGroupoid) -> Vec<ChainGenerator> {
    let ground = g.ground();
    let mut monomials = Vec::new();
    fn rec(last: Mask, ground: Mask, current: Monomial, out: &mut Vec<Monomial>) {
        out.push(current.clone());
        // proper supersets of `last` inside the ground set
        let free = ground & !last;
        for extra in subset::subsets(free).filter(|&e| e != 0) {
            let s = last | extra;
            rec(s, ground, current.mul(&Monomial::of_set(s)), out);
        }
    }
    rec(0, ground, Monomial::one(), &mut monomials);

    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for m in monomials {
        if seen.contains(&m) {
            continue;
        }
        let o = orbit(g, &m);
        seen.extend(o.members().iter().cloned());
        let chain = o.leading().chain_decompose().layers;
        out.push(ChainGenerator { chain, orbit: o });
    }
    let order = TermOrder::default();
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| order.cmp(b.orbit.leading(), a.orbit.leading())));
    out
}

/// Elementary symmetric polynomials of every transitive component, with degrees.
pub fn component_elementary(g: &PermutationGroupoid) -> Vec<(u32, Polynomial)> {
    let mut out = Vec::new();
    for c in g.transitive_components() {
        for d in 1..=subset::size(c) {
            out.push((d as u32, elementary_symmetric_on(c, d)));
        }
    }
    out
}

/// Elementary symmetric polynomials of the whole ground set.
pub fn full_elementary(g: &PermutationGroupoid) -> Vec<(u32, Polynomial)> {
    (1..=g.size()).map(|d| (d as u32, elementary_symmetric_on(g.ground(), d))).collect()
}

/// Exponents `j` with one factor `1/(1 - Z^j)` per generator of the
/// component symmetric ring.
pub fn component_sym_denominator(g: &PermutationGroupoid) -> Vec<u32> {
    let mut den: Vec<u32> = g
        .transitive_components()
        .iter()
        .flat_map(|&c| 1..=subset::size(c) as u32)
        .collect();
    den.sort_unstable();
    den
}

/// `∏_C |C|! / |G(X,X)|`.
pub fn predicted_rank(g: &PermutationGroupoid) -> usize {
    let numerator: usize = g.transitive_components().iter().map(|&c| factorial(subset::size(c))).product();
    numerator / g.underlying_group().len()
}

/// `|X|! / |G(X,X)|`, the rank over the symmetric polynomials in all variables.
pub fn predicted_rank_full(g: &PermutationGroupoid) -> usize {
    factorial(g.size()) / g.underlying_group().len()
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FreenessReport {
    /// Largest degree through which no syzygy was seen.
    pub free_up_to: u32,
    pub generator_degrees: Vec<u32>,
    /// Orbit sums chosen as module generators, in the polynomial text format.
    pub generators: Vec<String>,
    pub first_syzygy_degree: Option<u32>,
    pub predicted_rank: usize,
    pub dmax: u32,
}

impl FreenessReport {
    /// No syzygy up to `dmax` and as many generators as the rank formula predicts.
    pub fn looks_free(&self) -> bool {
        self.first_syzygy_degree.is_none() && self.generator_degrees.len() == self.predicted_rank
    }
}

/// Picks module generators degree by degree over the component symmetric ring
/// and reports the first degree where the generators already found span less
/// than a free module would.
pub fn truncated_freeness(g: &PermutationGroupoid, dmax: u32) -> FreenessReport {
    let sym = component_elementary(g);
    let sym_dims = sym_dimensions(&component_sym_denominator(g), dmax as usize);
    let mut invariants: Vec<Vec<Polynomial>> = Vec::new();
    let mut generators: Vec<(u32, Polynomial)> = Vec::new();
    let mut first_syzygy = None;
    for n in 0..=dmax {
        let mut w = Echelon::new();
        for (j, e) in &sym {
            if *j <= n {
                for b in &invariants[(n - j) as usize] {
                    w.insert(&(e * b));
                }
            }
        }
        let free_prediction: u64 = generators.iter().map(|(d, _)| sym_dims[(n - d) as usize]).sum();
        if first_syzygy.is_none() && (w.rank() as u64) < free_prediction {
            first_syzygy = Some(n);
        }
        let sums: Vec<Polynomial> = orbit_sums_of_degree(g, n).iter().map(MonomialOrbit::orbit_sum).collect();
        for s in &sums {
            if w.insert(s) {
                generators.push((n, s.clone()));
            }
        }
        invariants.push(sums);
    }
    FreenessReport {
        free_up_to: first_syzygy.map_or(dmax, |s| s - 1),
        generator_degrees: generators.iter().map(|(d, _)| *d).collect(),
        generators: generators.iter().map(|(_, p)| p.to_string()).collect(),
        first_syzygy_degree: first_syzygy,
        predicted_rank: predicted_rank(g),
        dmax,
    }
}

fn sym_dimensions(den: &[u32], upto: usize) -> Vec<u64> {
    RationalSeries::new(vec![BigInt::from(1)], den.to_vec())
        .expect("positive exponents")
        .expand(upto)
        .iter()
        .map(|c| c.to_u64().expect("small dimension"))
        .collect()
}

/// Products `e_{j_1} ⋯ e_{j_r}` of the given degree-tagged polynomials with
/// total degree `n`, `j_1 ≤ … ≤ j_r` by position in `sym`.
fn sym_products(sym: &[(u32, Polynomial)], n: u32) -> Vec<Polynomial> {
    let mut out = Vec::new();
    fn rec(sym: &[(u32, Polynomial)], start: usize, left: u32, acc: Polynomial, out: &mut Vec<Polynomial>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for i in start..sym.len() {
            let (d, e) = &sym[i];
            if *d <= left {
                rec(sym, i, left - d, &acc * e, out);
            }
        }
    }
    rec(sym, 0, n, Polynomial::one(), &mut out);
    out
}

/// `dim (Σ_g Sym · g)_n` with `Sym` given by `sym`.
pub fn generated_dimension(sym: &[(u32, Polynomial)], generators: &[Polynomial], n: u32) -> usize {
    let mut w = Echelon::new();
    for gen in generators {
        let Some(d) = gen.degree() else { continue };
        if d <= n {
            for s in sym_products(sym, n - d) {
                w.insert(&(&s * gen));
            }
        }
    }
    w.rank()
}

/// True when `Sym · generators` fills `K[X]^G_n` for every `n ≤ dmax`.
pub fn generates_up_to(g: &PermutationGroupoid, sym: &[(u32, Polynomial)], generators: &[Polynomial], dmax: u32) -> bool {
    (0..=dmax).all(|n| generated_dimension(sym, generators, n) == orbit_sums_of_degree(g, n).len())
}

/// True when `Sym ⊗ span(generators) → K[X]^G` is injective through `dmax`,
/// i.e. the family is a free basis if it also generates.
pub fn is_free_family(sym: &[(u32, Polynomial)], generators: &[Polynomial], dmax: u32) -> bool {
    let den: Vec<u32> = sym.iter().map(|(d, _)| *d).collect();
    let dims = sym_dimensions(&den, dmax as usize);
    (0..=dmax).all(|n| {
        let expected: u64 = generators
            .iter()
            .filter_map(|p| p.degree())
            .filter(|&d| d <= n)
            .map(|d| dims[(n - d) as usize])
            .sum();
        generated_dimension(sym, generators, n) as u64 == expected
    })
}

/// `x_{F_1} ⋯ x_{F_n}` for the flag `F_i = {perm[0], …, perm[i-1]}`.
pub fn flag_monomial(perm: &[usize]) -> Monomial {
    let n = perm.len();
    let mut e = vec![0u32; n];
    for (i, &p) in perm.iter().enumerate() {
        e[p] = (n - i) as u32;
    }
    Monomial::new(e)
}

/// One flag monomial per `G(X,X)`-orbit of flags, in order of first appearance
/// among permutations listed lexicographically.
pub fn flag_orbit_representatives(g: &PermutationGroupoid) -> Vec<Monomial> {
    let group = g.underlying_group();
    let mut perms = Vec::new();
    let mut items: Vec<usize> = (0..g.size()).collect();
    for_each_permutation(&mut items, &mut |p: &[usize]| perms.push(p.to_vec()));
    perms.sort();
    let mut seen = HashSet::new();
    let mut reps = Vec::new();
    for p in perms {
        let m = flag_monomial(&p);
        if seen.contains(&m) {
            continue;
        }
        for h in &group {
            seen.insert(m.act(h).expect("permutations act everywhere"));
        }
        reps.push(m);
    }
    reps
}

/// Row of the incidence matrix: coefficients of the flag representatives in
/// `p ★ ∏ e_j`, `j` running over the layer sizes missing from `chain`.
pub fn incidence_row(g: &PermutationGroupoid, p: &Polynomial, layer_sizes: &[usize], flags: &[Monomial]) -> Vec<Rational> {
    let mut completed = p.clone();
    for j in 1..=g.size() {
        if !layer_sizes.contains(&j) {
            completed = completed.star(&elementary_symmetric_on(g.ground(), j));
        }
    }
    flags.iter().map(|f| completed.coeff(f)).collect()
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IncidenceReport {
    pub matrix: Vec<Vec<Rational>>,
    pub flags: Vec<Monomial>,
    pub determinant: Rational,
    pub invertible: bool,
}

pub fn incidence_matrix_freeness(g: &PermutationGroupoid, family: &[ChainGenerator]) -> Result<IncidenceReport> {
    let expected = predicted_rank_full(g);
    if family.len() != expected {
        return Err(Error::RankMismatch { found: family.len(), expected });
    }
    let flags = flag_orbit_representatives(g);
    let matrix: Vec<Vec<Rational>> = family
        .iter()
        .map(|c| incidence_row(g, &c.orbit_sum(), &c.layer_sizes(), &flags))
        .collect();
    let determinant = linalg::determinant(&matrix);
    let invertible = !determinant.is_zero();
    Ok(IncidenceReport { matrix, flags, determinant, invertible })
}

/// Numerator of the fine Hilbert series of `K[X]^G` over `∏_j 1/(1 - t_j)`,
/// the fine Hilbert series of symmetric polynomials under `★`. Computed for
/// fine degrees with every entry at most `reach`; zero entries are omitted.
pub fn fine_hilbert_numerator(g: &PermutationGroupoid, reach: u32) -> BTreeMap<FineDegree, i64> {
    let n = g.size();
    let table = fine_hilbert_table(g, &FineDegree(vec![reach; n]));
    let mut out = BTreeMap::new();
    for r in table.keys() {
        let positive: Vec<usize> = (0..n).filter(|&j| r.0[j] > 0).collect();
        let mut c = 0i64;
        for mask in 0u32..(1 << positive.len()) {
            let mut shifted = r.0.clone();
            for (bit, &j) in positive.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    shifted[j] -= 1;
                }
            }
            let value = table.get(&FineDegree(shifted)).copied().unwrap_or(0) as i64;
            c += if mask.count_ones() % 2 == 0 { value } else { -value };
        }
        if c != 0 {
            out.insert(r.clone(), c);
        }
    }
    out
}

/// Fine degree of a chain generator: one layer of each listed size.
fn chain_fine_degree(c: &ChainGenerator, n: usize) -> FineDegree {
    c.orbit.leading().fine_degree(n)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FamilySearch {
    Found(Vec<ChainGenerator>),
    /// Every chain-generator family with the required fine degrees was tried.
    Exhausted { families: u64 },
    /// The fine Hilbert numerator is not a sum of distinct-size chain fine
    /// degrees with nonnegative multiplicities, so no basis can exist.
    NoFineBasis { numerator: BTreeMap<FineDegree, i64> },
}

/// Looks for a family of chain generators whose fine degrees are those of the
/// fine Hilbert numerator and whose incidence matrix is invertible.
pub fn search_free_family(g: &PermutationGroupoid) -> FamilySearch {
    let n = g.size();
    let numerator = fine_hilbert_numerator(g, 2);
    let admissible = numerator.iter().all(|(fd, &c)| c > 0 && fd.0.iter().all(|&r| r <= 1));
    let total: i64 = numerator.values().sum();
    if !admissible || total != predicted_rank_full(g) as i64 {
        return FamilySearch::NoFineBasis { numerator };
    }
    let candidates = chain_generators(g);
    let flags = flag_orbit_representatives(g);
    let rows: Vec<Vec<Rational>> = candidates
        .iter()
        .map(|c| incidence_row(g, &c.orbit_sum(), &c.layer_sizes(), &flags))
        .collect();
    let classes: Vec<(usize, Vec<usize>)> = numerator
        .iter()
        .map(|(fd, &c)| {
            let members = (0..candidates.len()).filter(|&i| &chain_fine_degree(&candidates[i], n) == fd).collect();
            (c as usize, members)
        })
        .collect();
    let mut families = 0u64;
    let mut chosen = Vec::new();
    if let Some(pick) = choose(&classes, 0, &mut chosen, &rows, &mut families) {
        return FamilySearch::Found(pick.into_iter().map(|i| candidates[i].clone()).collect());
    }
    FamilySearch::Exhausted { families }
}

fn choose(
    classes: &[(usize, Vec<usize>)],
    class: usize,
    chosen: &mut Vec<usize>,
    rows: &[Vec<Rational>],
    families: &mut u64,
) -> Option<Vec<usize>> {
    if class == classes.len() {
        *families += 1;
        let m: Vec<Vec<Rational>> = chosen.iter().map(|&i| rows[i].clone()).collect();
        return (!linalg::determinant(&m).is_zero()).then(|| chosen.clone());
    }
    let (need, members) = &classes[class];
    combinations(members, *need, &mut |pick| {
        let base = chosen.len();
        chosen.extend_from_slice(pick);
        let found = choose(classes, class + 1, chosen, rows, families);
        chosen.truncate(base);
        found
    })
}

/// Calls `f` on each `k`-subset of `items` in lexicographic order until it
/// returns `Some`.
fn combinations<T: Copy, R>(items: &[T], k: usize, f: &mut impl FnMut(&[T]) -> Option<R>) -> Option<R> {
    fn rec<T: Copy, R>(items: &[T], k: usize, start: usize, cur: &mut Vec<T>, f: &mut impl FnMut(&[T]) -> Option<R>) -> Option<R> {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            if let Some(r) = rec(items, k, i + 1, cur, f) {
                return Some(r);
            }
            cur.pop();
        }
        None
    }
    rec(items, k, 0, &mut Vec::with_capacity(k), f)
}

/// The invariant ring has a finite SAGBI basis for every term order exactly
/// when `G` comes from a permutation group generated by transpositions.
pub fn sagbi_finite(g: &PermutationGroupoid) -> bool {
    g.reflection_criterion()
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExplorerReport {
    /// Initial monomials that are not a product of two nontrivial initial
    /// monomials, by degree. Evidence up to `dmax` only.
    pub generators: Vec<Monomial>,
    pub dmax: u32,
}

fn is_initial(g: &PermutationGroupoid, m: &Monomial, order: &TermOrder) -> bool {
    orbit_with_order(g, m, order).leading() == m
}

pub fn initial_monoid_explorer(g: &PermutationGroupoid, order: &TermOrder, dmax: u32) -> ExplorerReport {
    let mut generators = Vec::new();
    for n in 1..=dmax {
        let mut found: Vec<Monomial> = Vec::new();
        for o in crate::orbits::orbits_of_degree_with_order(g, n, order) {
            let m = o.leading().clone();
            let decomposable = divisors(&m).into_iter().any(|a| {
                !a.is_one() && a != m && is_initial(g, &a, order) && is_initial(g, &a.quotient_of(&m).unwrap(), order)
            });
            if !decomposable {
                found.push(m);
            }
        }
        found.sort_by(|a, b| order.cmp(b, a));
        generators.extend(found);
    }
    ExplorerReport { generators, dmax }
}

fn divisors(m: &Monomial) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    for (i, &e) in m.exponents().iter().enumerate() {
        let mut next = Vec::new();
        for d in &out {
            for k in 0..=e {
                next.push(d.mul(&Monomial::var_pow(i, k)));
            }
        }
        out = next;
    }
    out
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StabilityCheck {
    pub holds: bool,
    /// Leading monomial of an orbit sum whose image is not invariant.
    pub witness: Option<Monomial>,
}

fn stability(g: &PermutationGroupoid, dmax: u32, op: impl Fn(&Polynomial) -> Polynomial) -> StabilityCheck {
    for n in 0..=dmax {
        for o in orbit_sums_of_degree(g, n) {
            if !is_invariant(g, &op(&o.orbit_sum())) {
                return StabilityCheck { holds: false, witness: Some(o.leading().clone()) };
            }
        }
    }
    StabilityCheck { holds: true, witness: None }
}

/// Whether `D = Σ ∂_i` maps `K[X]^G` into itself through degree `dmax`.
pub fn derivation_stable(g: &PermutationGroupoid, dmax: u32) -> StabilityCheck {
    stability(g, dmax, Polynomial::derivation)
}

/// Whether `S_k` maps `K[X]^G` into itself through degree `dmax`.
pub fn steenrod_stable(g: &PermutationGroupoid, k: u32, dmax: u32) -> StabilityCheck {
    stability(g, dmax, |p| p.steenrod(k))
}

/// Generators grouped by degree, for display.
pub fn degree_histogram(degrees: &[u32]) -> BTreeMap<u32, usize> {
    let mut h = BTreeMap::new();
    for &d in degrees {
        *h.entry(d).or_insert(0) += 1;
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::LocalBijection;
    use crate::polynomial::rational;

    fn noncm() -> PermutationGroupoid {
        PermutationGroupoid::close(3, &[LocalBijection::new([(0, 1)]).unwrap()]).unwrap()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn chain_generators_of_small_groupoids() {
        let s2 = PermutationGroupoid::symmetric(2).unwrap();
        let gens = chain_generators(&s2);
        let sums: Vec<String> = gens.iter().map(|c| c.orbit_sum().to_string()).collect();
        assert_eq!(sums, ["1", "x1 + x2", "x1*x2", "x1^2*x2 + x1*x2^2"]);

        let full = PermutationGroupoid::full(3).unwrap();
        // one generator per set of distinct layer sizes
        assert_eq!(chain_generators(&full).len(), 8);

        let stair = PermutationGroupoid::staircase(3).unwrap();
        let leads: HashSet<Monomial> = chain_generators(&stair).iter().map(|c| c.orbit.leading().clone()).collect();
        assert!(leads.contains(&m(&[1, 2, 3])));
        assert!(leads.iter().all(|l| l.degree() <= 6));
        assert!(leads.iter().any(|l| l.degree() == 6));
    }

    #[test]
    fn chain_generators_generate() {
        for g in [noncm(), PermutationGroupoid::increasing(3).unwrap(), PermutationGroupoid::cyclic(3).unwrap()] {
            let gens: Vec<Polynomial> = chain_generators(&g).iter().map(ChainGenerator::orbit_sum).collect();
            assert!(generates_up_to(&g, &full_elementary(&g), &gens, 7));
        }
    }

    #[test]
    fn noncm_is_not_free() {
        let r = truncated_freeness(&noncm(), 8);
        assert_eq!(r.generator_degrees, [0, 2, 3]);
        assert_eq!(r.generators, ["1", "x1*x3", "x1^2*x2"]);
        assert_eq!(r.first_syzygy_degree, Some(4));
        assert_eq!(r.predicted_rank, 2);
        assert!(!r.looks_free());
        // the single relation x3 (x1^2 x2) = (x1 x2)(x1 x3)
        let lhs = Polynomial::parse("x3").unwrap() * Polynomial::parse("x1^2*x2").unwrap();
        let rhs = Polynomial::parse("x1*x2").unwrap() * Polynomial::parse("x1*x3").unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn free_examples() {
        let s2 = PermutationGroupoid::symmetric(2).unwrap();
        let r = truncated_freeness(&s2, 6);
        assert_eq!(r.generator_degrees, [0]);
        assert!(r.looks_free());
        let q = PermutationGroupoid::increasing(2).unwrap();
        let r = truncated_freeness(&q, 8);
        assert_eq!(r.generator_degrees, [0, 3]);
        assert!(r.looks_free());
        assert_eq!(r.predicted_rank, 2);
    }

    #[test]
    fn incidence_matrices() {
        let s2 = PermutationGroupoid::symmetric(2).unwrap();
        let one = chain_generators(&s2).into_iter().take(1).collect::<Vec<_>>();
        let rep = incidence_matrix_freeness(&s2, &one).unwrap();
        assert_eq!(rep.matrix, vec![vec![rational(1)]]);

        let q = PermutationGroupoid::increasing(2).unwrap();
        let gens = chain_generators(&q);
        let family: Vec<ChainGenerator> = gens
            .iter()
            .filter(|c| c.orbit.leading() == &Monomial::one() || c.orbit.leading() == &m(&[1, 2]))
            .cloned()
            .collect();
        let rep = incidence_matrix_freeness(&q, &family).unwrap();
        assert_eq!(rep.matrix, vec![vec![rational(1), rational(1)], vec![rational(0), rational(1)]]);
        assert!(rep.invertible);
        assert!(matches!(
            incidence_matrix_freeness(&q, &family[..1]),
            Err(Error::RankMismatch { found: 1, expected: 2 })
        ));

        let c3 = PermutationGroupoid::cyclic(3).unwrap();
        let FamilySearch::Found(f) = search_free_family(&c3) else { panic!() };
        let rep = incidence_matrix_freeness(&c3, &f).unwrap();
        assert_eq!(rep.matrix, vec![vec![rational(1), rational(1)], vec![rational(1), rational(0)]]);
    }

    #[test]
    fn noncm_has_no_free_family() {
        // the fine numerator has coefficient -1 at fine degree (1,1,1)
        match search_free_family(&noncm()) {
            FamilySearch::NoFineBasis { numerator } => {
                assert_eq!(numerator[&FineDegree(vec![1, 1, 1])], -1);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn fine_numerators() {
        let q = PermutationGroupoid::increasing(2).unwrap();
        let num = fine_hilbert_numerator(&q, 2);
        assert_eq!(num.into_iter().collect::<Vec<_>>(), [(FineDegree(vec![0, 0]), 1), (FineDegree(vec![1, 1]), 1)]);
        let s3 = PermutationGroupoid::symmetric(3).unwrap();
        assert_eq!(fine_hilbert_numerator(&s3, 2).len(), 1);
    }

    #[test]
    fn sagbi() {
        assert!(sagbi_finite(&PermutationGroupoid::symmetric(3).unwrap()));
        assert!(!sagbi_finite(&PermutationGroupoid::alternating(3).unwrap()));
        assert!(!sagbi_finite(&PermutationGroupoid::increasing(2).unwrap()));
        assert!(!sagbi_finite(&noncm()));
        let q = PermutationGroupoid::increasing(2).unwrap();
        let e = initial_monoid_explorer(&q, &TermOrder::lex(), 6);
        let expected: Vec<Monomial> = std::iter::once(m(&[1])).chain((1..=5).map(|b| m(&[1, b]))).collect();
        assert_eq!(e.generators, expected);
        let s3 = PermutationGroupoid::symmetric(3).unwrap();
        let e = initial_monoid_explorer(&s3, &TermOrder::lex(), 6);
        assert_eq!(e.generators, [m(&[1]), m(&[1, 1]), m(&[1, 1, 1])]);
    }

    #[test]
    fn derivations() {
        let q = PermutationGroupoid::increasing(2).unwrap();
        let d = derivation_stable(&q, 6);
        assert!(!d.holds);
        assert!(derivation_stable(&PermutationGroupoid::cyclic(3).unwrap(), 5).holds);
        assert!(!derivation_stable(&noncm(), 5).holds);
        for k in 0..=3 {
            assert!(steenrod_stable(&q, k, 5).holds);
            assert!(steenrod_stable(&noncm(), k, 5).holds);
        }
    }
}
