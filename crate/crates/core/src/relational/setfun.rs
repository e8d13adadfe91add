//! Finitely supported functions on finite subsets, multiplied by splitting
//! the argument into two disjoint pieces, and equivalences on finite subsets.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{RelationalStructure, TwinForm};
use crate::error::{Error, Result};
use crate::groupoid::PermutationGroupoid;
use crate::polynomial::{Monomial, Polynomial, Rational};
use crate::subset::{self, Mask};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SetFunction {
    values: BTreeMap<Mask, Rational>,
}

impl SetFunction {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `δ_∅`, the unit of the product.
    pub fn unit() -> Self {
        let mut f = Self::zero();
        f.set(0, Rational::one());
        f
    }

    /// Indicator of the subsets of `ground` accepted by `pred`.
    pub fn indicator<P: Fn(Mask) -> bool>(ground: Mask, pred: P) -> Self {
        let mut f = Self::zero();
        for a in subset::subsets(ground).filter(|&a| pred(a)) {
            f.set(a, Rational::one());
        }
        f
    }

    pub fn get(&self, a: Mask) -> Rational {
        self.values.get(&a).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, a: Mask, v: Rational) {
        if v.is_zero() {
            self.values.remove(&a);
        } else {
            self.values.insert(a, v);
        }
    }

    pub fn add_at(&mut self, a: Mask, v: &Rational) {
        let cur = self.get(a);
        self.set(a, cur + v);
    }

    pub fn support(&self) -> impl Iterator<Item = (&Mask, &Rational)> {
        self.values.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> SetFunction {
        let mut out = SetFunction::zero();
        for (&a, v) in &self.values {
            out.set(a, v * c);
        }
        out
    }

    pub fn add(&self, other: &SetFunction) -> SetFunction {
        let mut out = self.clone();
        for (&a, v) in &other.values {
            out.add_at(a, v);
        }
        out
    }

    /// Constant on equivalence classes, checked on subsets of `ground`.
    pub fn is_invariant(&self, eq: &Equivalence, ground: Mask) -> bool {
        let sets: Vec<Mask> = subset::subsets(ground).collect();
        let classes = eq.classes(&sets);
        classes.iter().all(|class| class.iter().all(|&a| self.get(a) == self.get(class[0])))
    }
}

impl fmt::Display for SetFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .values
            .iter()
            .map(|(&a, v)| {
                let pts: Vec<String> = subset::points(a).map(|p| p.to_string()).collect();
                format!("{{{}}}: {v}", pts.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// `(fg)(P) = Σ_{M ⊆ P} f(M) g(P \ M)`.
pub fn cameron_product(f: &SetFunction, g: &SetFunction) -> SetFunction {
    let mut out = SetFunction::zero();
    for (&a, u) in &f.values {
        for (&b, v) in &g.values {
            if a & b == 0 {
                out.add_at(a | b, &(u * v));
            }
        }
    }
    out
}

/// A decidable equivalence relation on finite subsets.
pub struct Equivalence {
    test: Box<dyn Fn(Mask, Mask) -> bool + Send + Sync>,
}

impl Equivalence {
    pub fn new<F: Fn(Mask, Mask) -> bool + Send + Sync + 'static>(test: F) -> Self {
        Equivalence { test: Box::new(test) }
    }

    /// Sets of equal size are equivalent.
    pub fn cardinality() -> Self {
        Self::new(|a, b| a.count_ones() == b.count_ones())
    }

    /// Subsets inducing isomorphic substructures of `r`.
    pub fn isomorphism(r: &RelationalStructure) -> Self {
        let forms: HashMap<Mask, TwinForm> =
            subset::subsets(r.ground()).map(|a| (a, TwinForm::of(&r.induced(a)))).collect();
        Self::new(move |a, b| a == b || forms[&a].isomorphic(&forms[&b]))
    }

    pub fn equivalent(&self, a: Mask, b: Mask) -> bool {
        (self.test)(a, b)
    }

    /// Partition of `sets`, each class listed in input order.
    pub fn classes(&self, sets: &[Mask]) -> Vec<Vec<Mask>> {
        let mut classes: Vec<Vec<Mask>> = Vec::new();
        for &a in sets {
            match classes.iter_mut().find(|c| self.equivalent(c[0], a)) {
                Some(c) => c.push(a),
                None => classes.push(vec![a]),
            }
        }
        classes
    }
}

/// Whether any two equivalent sets of size at most `bound` admit a bijection
/// `f` with `D \ {x} ≡ D' \ {f(x)}` for every `x`.
pub fn is_hereditary(eq: &Equivalence, ground: Mask, bound: usize) -> bool {
    let sets: Vec<Mask> = subset::subsets(ground).filter(|&a| subset::size(a) <= bound).collect();
    // transitivity lets every member be compared with one representative
    eq.classes(&sets).iter().all(|class| class.iter().all(|&d| hereditary_pair(eq, class[0], d)))
}

fn hereditary_pair(eq: &Equivalence, d: Mask, e: Mask) -> bool {
    if d.count_ones() != e.count_ones() {
        return false;
    }
    let left: Vec<usize> = subset::points(d).collect();
    let right: Vec<usize> = subset::points(e).collect();
    let ok: Vec<Vec<bool>> = left
        .iter()
        .map(|&x| right.iter().map(|&y| eq.equivalent(d & !(1 << x), e & !(1 << y))).collect())
        .collect();
    perfect_matching(&ok)
}

fn perfect_matching(ok: &[Vec<bool>]) -> bool {
    fn augment(i: usize, ok: &[Vec<bool>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for j in 0..ok[i].len() {
            if ok[i][j] && !seen[j] {
                seen[j] = true;
                if owner[j].is_none_or(|k| augment(k, ok, seen, owner)) {
                    owner[j] = Some(i);
                    return true;
                }
            }
        }
        false
    }
    let mut owner = vec![None; ok.len()];
    (0..ok.len()).all(|i| augment(i, ok, &mut vec![false; ok.len()], &mut owner))
}

/// Number of ordered pairs `(A, B)` of disjoint sets with `A ≡ a`, `B ≡ b`
/// and `A ∪ B ≡ c`, `A ∪ B ⊆ d`.
pub fn chi(eq: &Equivalence, a: Mask, b: Mask, c: Mask, d: Mask) -> usize {
    subset::subsets(d)
        .filter(|&u| eq.equivalent(c, u))
        .map(|u| subset::subsets(u).filter(|&x| eq.equivalent(a, x) && eq.equivalent(b, u & !x)).count())
        .sum()
}

/// Image of `x^m` in the set functions on the blow-up of `G` truncated to
/// `truncation` points per component: `d!` on subsets with trace `d`, where
/// point `j` of component `i` is `i * truncation + j`.
pub fn phi_embedding(g: &PermutationGroupoid, m: &Monomial, truncation: usize) -> Result<SetFunction> {
    let n = g.size();
    if n * truncation > 32 {
        return Err(Error::GuardExceeded { what: "truncated ground set", size: n * truncation, limit: 32 });
    }
    if m.num_vars() > n {
        return Err(Error::PointOutOfRange { point: m.num_vars() - 1, size: n });
    }
    if let Some(&degree) = m.exponents().iter().find(|&&e| e as usize > truncation) {
        return Err(Error::TruncationTooSmall { truncation, degree: degree as usize });
    }
    let weight: BigInt = m.exponents().iter().map(|&e| (1..=e as u64).map(BigInt::from).product::<BigInt>()).product();
    let weight = Rational::from_integer(weight);
    let block = |i: usize| subset::full(truncation) << (i * truncation);
    let mut out = SetFunction::unit();
    for i in 0..n {
        let e = m.exponent(i) as usize;
        let layer = SetFunction::indicator(block(i), |a| subset::size(a) == e);
        out = cameron_product(&out, &layer);
    }
    // the running product already multiplies disjoint blocks, each with value 1
    Ok(out.scale(&weight))
}

/// Linear extension of [`phi_embedding`].
pub fn phi_polynomial(g: &PermutationGroupoid, p: &Polynomial, truncation: usize) -> Result<SetFunction> {
    let mut out = SetFunction::zero();
    for (m, c) in p.terms() {
        out = out.add(&phi_embedding(g, m, truncation)?.scale(c));
    }
    Ok(out)
}

/// First pair of monomials with `φ(pq) ≠ φ(p)φ(q)`, over all pairs with
/// `deg p + deg q ≤ truncation`.
pub fn phi_morphism_violation(g: &PermutationGroupoid, truncation: usize) -> Result<Option<(Monomial, Monomial)>> {
    let n = g.size();
    let t = truncation as u32;
    for dp in 0..=t {
        for dq in 0..=t - dp {
            for p in Monomial::all_of_degree(n, dp) {
                let fp = phi_embedding(g, &p, truncation)?;
                for q in Monomial::all_of_degree(n, dq) {
                    let fq = phi_embedding(g, &q, truncation)?;
                    if cameron_product(&fp, &fq) != phi_embedding(g, &p.mul(&q), truncation)? {
                        return Ok(Some((p, q)));
                    }
                }
            }
        }
    }
    Ok(None)
}
