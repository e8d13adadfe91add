//! The example corpus shipped in `fixtures/` and the acceptance runner that
//! replays it. Both the `fixtures` subcommand and the acceptance test use
//! [`run_criteria`].

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groupoid::PermutationGroupoid;
use crate::io::{parse_groupoid, parse_structure, StructureFile};
use crate::linalg;
use crate::module::{
    component_elementary, derivation_stable, generates_up_to, incidence_matrix_freeness, is_free_family,
    predicted_rank_full, sagbi_finite, search_free_family, steenrod_stable, truncated_freeness, FamilySearch,
};
use crate::orbits::count_orbits;
use crate::polynomial::{rational, Monomial, Polynomial};
use crate::relational::layered::{addlayer_violation, profile_values};
use crate::relational::{
    canonical_decomposition, cameron_product, is_hereditary, is_monomorphic_decomposition, profile_layered,
    profile_series, to_relational_structure, Equivalence, LayeredStructure, MonomorphicDecomposition, Multiplicity,
    RelationalStructure, SetFunction,
};
use crate::reynolds::{reynolds, reynolds_is_sym_morphism};
use crate::series::{hilbert_series, hilbert_series_bounded, nonnegativity_search, orbit_dimensions, NonnegativityOutcome};
use crate::subset::{self, Mask};

macro_rules! corpus {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../fixtures/", $name, ".json")))),*]
    };
}

/// Groupoid files by name.
pub const GROUPOIDS: &[(&str, &str)] = corpus![
    "example.nonCM.groupoid",
    "example.qsym.2",
    "example.qsym.3",
    "sym2",
    "sym2_plus_id",
    "sym3",
    "alt3",
    "staircase.3",
    "empty_gens",
];

/// Structure files by name, layered ones first.
pub const STRUCTURES: &[(&str, &str)] = corpus![
    "chain_intervals",
    "two_cliques",
    "three_cliques",
    "wheel_plus_independent",
    "clique_plus_independent",
    "negative",
    "four_components",
    "single_component",
    "two_cliques_k5",
    "chain5",
    "path_marked",
    "antichain6",
];

fn lookup<'a>(table: &'a [(&str, &str)], name: &str) -> Result<&'a str> {
    table
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
        .ok_or_else(|| Error::Invalid(format!("no fixture named {name:?}")))
}

pub fn groupoid(name: &str) -> Result<PermutationGroupoid> {
    parse_groupoid(lookup(GROUPOIDS, name)?)
}

pub fn structure(name: &str) -> Result<StructureFile> {
    parse_structure(lookup(STRUCTURES, name)?)
}

pub fn layered(name: &str) -> Result<LayeredStructure> {
    match structure(name)? {
        StructureFile::Layered(l) => Ok(l),
        StructureFile::Finite(_) => Err(Error::Invalid(format!("{name} is not layered"))),
    }
}

pub fn finite(name: &str) -> Result<RelationalStructure> {
    match structure(name)? {
        StructureFile::Finite(r) => Ok(r),
        StructureFile::Layered(_) => Err(Error::Invalid(format!("{name} is layered"))),
    }
}

pub fn all_groupoids() -> Vec<(&'static str, PermutationGroupoid)> {
    GROUPOIDS.iter().map(|(n, t)| (*n, parse_groupoid(t).expect("shipped fixtures parse"))).collect()
}

pub fn all_layered() -> Vec<(&'static str, LayeredStructure)> {
    STRUCTURES
        .iter()
        .filter_map(|(n, t)| match parse_structure(t).expect("shipped fixtures parse") {
            StructureFile::Layered(l) => Some((*n, l)),
            StructureFile::Finite(_) => None,
        })
        .collect()
}

pub fn all_finite() -> Vec<(&'static str, RelationalStructure)> {
    STRUCTURES
        .iter()
        .filter_map(|(n, t)| match parse_structure(t).expect("shipped fixtures parse") {
            StructureFile::Finite(r) => Some((*n, r)),
            StructureFile::Layered(_) => None,
        })
        .collect()
}

/// Outcome of one acceptance criterion.
#[derive(Clone, Debug)]
pub struct Criterion {
    pub number: u32,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Option<Duration>,
}

impl Criterion {
    /// Verdict, number, title and detail; identical across runs.
    pub fn line(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        format!("[{verdict}] {:>2}. {}: {}", self.number, self.title, self.detail)
    }

    pub fn line_with_time(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        format!("[{verdict}] {:>2}. {} ({:.2?}): {}", self.number, self.title, self.elapsed, self.detail)
    }
}

type Check = fn() -> Result<(bool, String)>;

const CRITERIA: &[(u32, &str, Option<u64>, Check)] = &[
    (1, "non-CM groupoid series", Some(5), criterion_1),
    (2, "non-freeness detection", Some(30), criterion_2),
    (3, "QSym freeness", Some(60), criterion_3),
    (4, "profiles of groupoid blow-ups equal orbit counts", None, criterion_4),
    (5, "degree bound tightness", None, criterion_5),
    (6, "Reynolds suite", None, criterion_6),
    (7, "derivation and Steenrod stability", None, criterion_7),
    (8, "SAGBI criterion", None, criterion_8),
    (9, "profile fixtures", None, criterion_9),
    (10, "property suites", None, criterion_10),
];

pub fn criterion_count() -> usize {
    CRITERIA.len()
}

pub fn run_criterion(number: u32) -> Result<Criterion> {
    let &(number, title, budget, check) = CRITERIA
        .iter()
        .find(|c| c.0 == number)
        .ok_or_else(|| Error::Invalid(format!("no criterion {number}")))?;
    let start = Instant::now();
    let (ok, detail) = match check() {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    let elapsed = start.elapsed();
    let budget = budget.map(Duration::from_secs);
    let in_time = budget.is_none_or(|b| elapsed < b);
    let detail = if in_time { detail } else { format!("{detail}; over the time budget") };
    Ok(Criterion { number, title, passed: ok && in_time, detail, elapsed, budget })
}

pub fn run_criteria() -> Vec<Criterion> {
    CRITERIA.iter().map(|c| run_criterion(c.0).expect("listed criterion")).collect()
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn ints(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|c| i64::try_from(c).expect("small coefficient")).collect()
}

fn criterion_1() -> Result<(bool, String)> {
    let g = groupoid("example.nonCM.groupoid")?;
    let dims = ints(&orbit_dimensions(&g, 20));
    let dims_ok = dims[0] == 1 && (1..=20).all(|n| dims[n] == binomial(n as u64 + 2, 2) as i64 - 1);
    let s = hilbert_series(&g, &[1, 2, 3], 10)?;
    let num_ok = s.numerator_i64() == [1, 1, 2, 2, 1, 0, -1];
    Ok((dims_ok && num_ok, format!("dims to 20 match C(n+2,2)-1: {dims_ok}; series {s}")))
}

fn criterion_2() -> Result<(bool, String)> {
    let g = groupoid("example.nonCM.groupoid")?;
    let report = truncated_freeness(&g, 8);
    let gens_ok = report.generators == ["1", "x1*x3", "x1^2*x2"] && report.generator_degrees == [0, 2, 3];
    let syz_ok = report.first_syzygy_degree == Some(4);
    let s = hilbert_series(&g, &[1, 2, 3], 10)?;
    let search = nonnegativity_search(&s, 3, 8);
    let exhausted = matches!(search, NonnegativityOutcome::Exhausted { .. });
    let detail = format!(
        "generators {:?} in degrees {:?}, first syzygy {:?}; search {:?}",
        report.generators, report.generator_degrees, report.first_syzygy_degree, search
    );
    Ok((gens_ok && syz_ok && exhausted, detail))
}

/// Compositions of `n` into at most `k` parts.
fn compositions(n: u64, k: u64) -> u64 {
    if n == 0 {
        return 1;
    }
    (1..=k.min(n)).map(|parts| binomial(n - 1, parts - 1)).sum()
}

fn criterion_3() -> Result<(bool, String)> {
    let q2 = groupoid("example.qsym.2")?;
    let dims2 = ints(&orbit_dimensions(&q2, 20));
    let dims2_ok = (0..=20).all(|n| dims2[n] as u64 == compositions(n as u64, 2));
    let s2 = hilbert_series(&q2, &[1, 2], 10)?;
    let num2_ok = s2.numerator_i64() == [1, 0, 0, 1];
    let (matrix_ok, matrix) = match search_free_family(&q2) {
        FamilySearch::Found(family) => {
            let r = incidence_matrix_freeness(&q2, &family)?;
            (r.invertible && r.matrix.len() == 2, format_matrix(&r.matrix))
        }
        other => (false, format!("{other:?}")),
    };
    let rank_ok = predicted_rank_full(&q2) == 2;
    let q3 = groupoid("example.qsym.3")?;
    let s3 = hilbert_series_bounded(&q3, &[1, 2, 3], 6, 10)?;
    let dims3 = ints(&orbit_dimensions(&q3, 16));
    let dims3_ok = (0..=16).all(|n| dims3[n] as u64 == compositions(n as u64, 3));
    let nonneg = s3.is_numerator_nonnegative();
    let ok = dims2_ok && num2_ok && matrix_ok && rank_ok && dims3_ok && nonneg;
    Ok((ok, format!("QSym_2 {s2}, incidence {matrix}, rank 2: {rank_ok}; QSym_3 {s3}")))
}

pub fn format_matrix(m: &[Vec<crate::polynomial::Rational>]) -> String {
    let rows: Vec<String> =
        m.iter().map(|r| format!("[{}]", r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "))).collect();
    format!("[{}]", rows.join(", "))
}

fn criterion_4() -> Result<(bool, String)> {
    let mut lines = Vec::new();
    let mut ok = true;
    for name in ["example.nonCM.groupoid", "sym2_plus_id", "example.qsym.3"] {
        let g = groupoid(name)?;
        let l = LayeredStructure::new(to_relational_structure(&g)?, vec![Multiplicity::Unbounded; g.size()])?;
        let profile: Vec<usize> = (0..=6).map(|n| profile_layered(&l, n)).collect();
        let orbits: Vec<usize> = (0..=6).map(|n| count_orbits(&g, n)).collect();
        ok &= profile == orbits;
        lines.push(format!("{name} {profile:?}"));
    }
    Ok((ok, lines.join("; ")))
}

/// `{1} ∪ {x1^d1 x2^d2 x3^d3 : 1 ≤ d_i ≤ i}`.
pub fn staircase_family() -> Vec<Polynomial> {
    let mut family = vec![Polynomial::one()];
    for d2 in 1..=2 {
        for d3 in 1..=3 {
            family.push(Polynomial::from_monomial(Monomial::new(vec![1, d2, d3])));
        }
    }
    family
}

fn criterion_5() -> Result<(bool, String)> {
    let g = groupoid("staircase.3")?;
    let sym = component_elementary(&g);
    let family = staircase_family();
    let generates = generates_up_to(&g, &sym, &family, 10);
    let free = is_free_family(&sym, &family, 10);
    let top = family.iter().filter_map(Polynomial::degree).max() == Some(6);
    let corrected: Vec<Polynomial> = family.iter().filter(|p| p.to_string() != "x1*x2*x3").cloned().collect();
    let corrected_basis = generates_up_to(&g, &sym, &corrected, 10) && is_free_family(&sym, &corrected, 10);
    let dependency = Polynomial::parse("x1*x2*x3")?;
    let detail = format!(
        "stated family generates to degree 10: {generates}; top degree 6: {top}; stated family free: {free} \
         ({} members against rank {}, x1*x2*x3 = e3*1 is a dependency: {}); without x1*x2*x3 it is a free basis: {corrected_basis}",
        family.len(),
        predicted_rank_full(&g),
        sym.iter().any(|(d, e)| *d == 3 && *e == dependency),
    );
    Ok((generates && top && free, detail))
}

fn criterion_6() -> Result<(bool, String)> {
    let mut ok = true;
    let mut notes = Vec::new();
    for (name, g) in all_groupoids() {
        let r = reynolds(&g);
        for n in 0..=8 {
            let images: Vec<Polynomial> = Monomial::all_of_degree(g.size(), n)
                .into_iter()
                .map(|m| r.apply(&Polynomial::from_monomial(m)))
                .collect();
            let idempotent = images.iter().all(|p| r.apply(p) == *p);
            let rank = linalg::rank(&images) == count_orbits(&g, n);
            if !(idempotent && rank) {
                ok = false;
                notes.push(format!("{name} degree {n}"));
            }
        }
        let morphism = reynolds_is_sym_morphism(&g, 4).holds;
        if morphism != g.comes_from_group() {
            ok = false;
            notes.push(format!("{name}: Sym-morphism {morphism}"));
        }
    }
    let detail = if notes.is_empty() {
        format!("{} groupoids: R^2 = R, ranks match orbit counts to degree 8, Sym-morphism iff group", GROUPOIDS.len())
    } else {
        notes.join("; ")
    };
    Ok((ok, detail))
}

fn criterion_7() -> Result<(bool, String)> {
    let mut ok = true;
    let mut notes = Vec::new();
    for (name, g) in all_groupoids() {
        let d = derivation_stable(&g, 6);
        if d.holds != g.comes_from_group() {
            ok = false;
            notes.push(format!("{name}: D-stable {}", d.holds));
        }
        if let Some(w) = &d.witness {
            notes.push(format!("{name}: D(o({w})) not invariant"));
        }
        for k in 1..=3 {
            if !steenrod_stable(&g, k, 6).holds {
                ok = false;
                notes.push(format!("{name}: S_{k} not stable"));
            }
        }
    }
    Ok((ok, notes.join("; ")))
}

fn criterion_8() -> Result<(bool, String)> {
    let expected = [("sym3", true), ("alt3", false), ("example.qsym.2", false), ("example.nonCM.groupoid", false)];
    let mut ok = true;
    let mut shown = Vec::new();
    for (name, want) in expected {
        let got = sagbi_finite(&groupoid(name)?);
        ok &= got == want;
        shown.push(format!("{name}: {got}"));
    }
    Ok((ok, shown.join(", ")))
}

/// Partitions of `n` into at most `k` parts.
fn partitions(n: usize, k: usize) -> usize {
    fn rec(n: usize, k: usize, max: usize) -> usize {
        if n == 0 {
            return 1;
        }
        if k == 0 {
            return 0;
        }
        (1..=max.min(n)).map(|first| rec(n - first, k - 1, first)).sum()
    }
    rec(n, k, n)
}

fn criterion_9() -> Result<(bool, String)> {
    type Oracle = fn(usize) -> usize;
    let closed_forms: [(&str, Oracle); 6] = [
        ("chain_intervals", |n| binomial(n as u64 + 2, 2) as usize),
        ("two_cliques", |n| n / 2 + 1),
        ("three_cliques", |n| partitions(n, 3)),
        ("wheel_plus_independent", |n| n.max(1)),
        ("clique_plus_independent", |n| n.max(1)),
        ("negative", |n| if n < 3 { 1 } else { n / 2 + 1 }),
    ];
    let mut ok = true;
    let mut notes = Vec::new();
    for (name, oracle) in closed_forms {
        let values = profile_values(&layered(name)?, 20);
        let good = values.iter().enumerate().all(|(n, &v)| v == oracle(n));
        ok &= good;
        notes.push(format!("{name}: {good}"));
    }
    let four = layered("four_components")?;
    let values = profile_values(&four, 20);
    let values_ok = values.iter().enumerate().all(|(n, &v)| v as u64 == binomial(n as u64 + 3, 3) - u64::from(n > 0));
    let s = profile_series(&four, 10)?.rewrite_denominator(&[1, 1, 1, 1])?;
    let num_ok = s.numerator_i64() == [1, -1, 3, -3, 1];
    ok &= values_ok && num_ok;
    notes.push(format!("four_components: {s}"));
    Ok((ok, notes.join("; ")))
}

fn star_associativity(samples: usize, rng: &mut ChaCha8Rng) -> bool {
    let mut random = || {
        let n = rng.gen_range(1..=4);
        Polynomial::from_monomial(Monomial::new((0..n).map(|_| rng.gen_range(0..3)).collect()))
    };
    (0..samples).all(|_| {
        let (a, b, c) = (random(), random(), random());
        a.star(&b).star(&c) == a.star(&b.star(&c))
    })
}

/// Random function constant on equivalence classes, supported on small sets.
fn random_invariant(classes: &[Vec<Mask>], rng: &mut ChaCha8Rng) -> SetFunction {
    let mut f = SetFunction::zero();
    for class in classes {
        if rng.gen_bool(0.5) {
            let v = rational(rng.gen_range(-3..=3));
            for &a in class {
                f.set(a, v.clone());
            }
        }
    }
    f
}

fn hereditary_closure(r: &RelationalStructure, pairs: usize, rng: &mut ChaCha8Rng) -> (bool, bool) {
    let eq = Equivalence::isomorphism(r);
    let hereditary = is_hereditary(&eq, r.ground(), r.size().min(5));
    let support_size = if r.size() >= 8 { 2 } else { 3 };
    let small: Vec<Mask> = subset::subsets(r.ground()).filter(|&a| subset::size(a) <= support_size).collect();
    let test: Vec<Mask> = subset::subsets(r.ground()).filter(|&a| subset::size(a) <= 2 * support_size).collect();
    let small_classes = eq.classes(&small);
    let test_classes = eq.classes(&test);
    let closed = (0..pairs).all(|_| {
        let f = random_invariant(&small_classes, rng);
        let g = random_invariant(&small_classes, rng);
        let fg = cameron_product(&f, &g);
        test_classes.iter().all(|class| class.iter().all(|&a| fg.get(a) == fg.get(class[0])))
    });
    (hereditary, closed)
}

/// Every set partition of `0..n`.
fn set_partitions(n: usize) -> Vec<Vec<Mask>> {
    let mut out = vec![Vec::new()];
    for p in 0..n {
        let mut next = Vec::new();
        for blocks in out {
            for i in 0..blocks.len() {
                let mut b: Vec<Mask> = blocks.clone();
                b[i] |= 1 << p;
                next.push(b);
            }
            let mut b = blocks.clone();
            b.push(1 << p);
            next.push(b);
        }
        out = next;
    }
    out
}

fn coarsest(r: &RelationalStructure) -> Result<bool> {
    let canonical = canonical_decomposition(r)?;
    if !is_monomorphic_decomposition(r, &canonical)? {
        return Ok(false);
    }
    if r.size() <= 6 {
        for blocks in set_partitions(r.size()) {
            let d = MonomorphicDecomposition::new(blocks)?;
            if is_monomorphic_decomposition(r, &d)? && !d.refines(&canonical) {
                return Ok(false);
            }
        }
    } else {
        let b = canonical.blocks();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                let mut merged: Vec<Mask> = b.to_vec();
                merged[i] |= merged[j];
                merged.remove(j);
                if is_monomorphic_decomposition(r, &MonomorphicDecomposition::new(merged)?)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn criterion_10() -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(20061);
    let mut notes = Vec::new();
    let mut ok = true;
    let mut finite = all_finite();
    let truncated = layered("four_components")?.realize(&[2, 2, 2, 2])?;
    finite.push(("four_components truncated", truncated));
    for (name, r) in &finite {
        let (hereditary, closed) = hereditary_closure(r, 200, &mut rng);
        let coarse = coarsest(r)?;
        if !(hereditary && closed && coarse) {
            ok = false;
            notes.push(format!("{name}: hereditary {hereditary}, products invariant {closed}, coarsest {coarse}"));
        }
    }
    let assoc = star_associativity(500, &mut rng);
    ok &= assoc;
    notes.push(format!("star associativity on 500 triples: {assoc}"));
    for (name, l) in all_layered() {
        if let Some((m, s)) = addlayer_violation(&l, 6) {
            ok = false;
            notes.push(format!("{name}: adding layer {s:b} to {m} leaves the leading monomials"));
        }
        if l.unbounded_components() > 0 {
            let v = profile_values(&l, 20);
            if !v.windows(2).all(|w| w[0] <= w[1]) {
                ok = false;
                notes.push(format!("{name}: profile decreases"));
            }
        }
    }
    notes.push(format!("{} finite and {} layered fixtures", finite.len(), all_layered().len()));
    Ok((ok, notes.join("; ")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_parses() {
        assert_eq!(all_groupoids().len(), GROUPOIDS.len());
        assert_eq!(all_layered().len() + all_finite().len(), STRUCTURES.len());
        assert_eq!(groupoid("example.qsym.3").unwrap(), PermutationGroupoid::increasing(3).unwrap());
        assert_eq!(groupoid("staircase.3").unwrap(), PermutationGroupoid::staircase(3).unwrap());
        assert_eq!(groupoid("sym3").unwrap(), PermutationGroupoid::symmetric(3).unwrap());
        assert_eq!(groupoid("alt3").unwrap(), PermutationGroupoid::alternating(3).unwrap());
        assert_eq!(groupoid("empty_gens").unwrap().len(), 8);
    }

    #[test]
    fn oracles() {
        assert_eq!((0..8).map(|n| partitions(n, 3)).collect::<Vec<_>>(), [1, 1, 2, 3, 4, 5, 7, 8]);
        assert_eq!((0..5).map(|n| compositions(n, 2)).collect::<Vec<_>>(), [1, 1, 2, 3, 4]);
        assert_eq!(set_partitions(4).len(), 15);
    }
}
