//! Wreath blow-ups: every point `i` of a finite quotient becomes a block
//! `{i} × {0, .., m_i - 1}` and each quotient tuple is lifted to all tuples of
//! points lying over it.
//!
//! The induced structure on a finite subset only depends on its trace vector
//! `d` (`d_i` points in block `i`), so profiles count classes of trace
//! vectors. Points of one block are twins, and a tuple touches at most
//! `arity` points of a block, so isomorphism is decided on a realization
//! with each block cut down to `arity + 1` points while remembering the real
//! block sizes.

use std::collections::HashSet;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::{classify, Relation, RelationalStructure, TwinForm};
use crate::error::{Error, Result};
use crate::polynomial::{Monomial, TermOrder};
use crate::series::RationalSeries;
use crate::subset;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Multiplicity {
    Finite(usize),
    Unbounded,
}

impl Multiplicity {
    pub fn allows(self, d: usize) -> bool {
        match self {
            Multiplicity::Finite(m) => d <= m,
            Multiplicity::Unbounded => true,
        }
    }
}

/// Name of the block equivalence relation in realizations.
pub const EQUIVALENCE: &str = "equiv";

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LayeredStructure {
    quotient: RelationalStructure,
    multiplicities: Vec<Multiplicity>,
    /// Per quotient relation: keep only lifted tuples with pairwise distinct points.
    distinct: Vec<bool>,
    block_equivalence: bool,
}

impl LayeredStructure {
    /// Blow-up with every relation lifted to all tuples and with the block
    /// equivalence present.
    pub fn new(quotient: RelationalStructure, multiplicities: Vec<Multiplicity>) -> Result<Self> {
        if multiplicities.len() != quotient.size() {
            return Err(Error::Invalid(format!(
                "{} multiplicities for a quotient of size {}",
                multiplicities.len(),
                quotient.size()
            )));
        }
        if multiplicities.contains(&Multiplicity::Finite(0)) {
            return Err(Error::Invalid("multiplicities must be positive".into()));
        }
        let distinct = vec![false; quotient.relations().len()];
        Ok(LayeredStructure { quotient, multiplicities, distinct, block_equivalence: true })
    }

    /// Lift the named relation to tuples of pairwise distinct points only.
    pub fn with_distinct(mut self, relation: &str) -> Result<Self> {
        let i = self
            .quotient
            .relations()
            .iter()
            .position(|r| r.name == relation)
            .ok_or_else(|| Error::Invalid(format!("no relation named {relation:?}")))?;
        self.distinct[i] = true;
        Ok(self)
    }

    pub fn with_block_equivalence(mut self, on: bool) -> Self {
        self.block_equivalence = on;
        self
    }

    pub fn quotient(&self) -> &RelationalStructure {
        &self.quotient
    }

    pub fn multiplicities(&self) -> &[Multiplicity] {
        &self.multiplicities
    }

    pub fn is_distinct(&self, relation: usize) -> bool {
        self.distinct[relation]
    }

    pub fn has_block_equivalence(&self) -> bool {
        self.block_equivalence
    }

    pub fn unbounded_components(&self) -> usize {
        self.multiplicities.iter().filter(|m| **m == Multiplicity::Unbounded).count()
    }

    fn max_arity(&self) -> usize {
        let eq = if self.block_equivalence { 2 } else { 0 };
        self.quotient.signature().into_iter().chain([eq, 1]).max().unwrap_or(1)
    }

    /// The finite structure on `⋃ {i} × {0, .., d_i - 1}`, blocks listed in
    /// order. Labels read `i.m`.
    pub fn realize(&self, d: &[usize]) -> Result<RelationalStructure> {
        self.check_trace(d)?;
        Ok(self.realize_unchecked(d))
    }

    fn check_trace(&self, d: &[usize]) -> Result<()> {
        if d.len() != self.multiplicities.len() {
            return Err(Error::Invalid(format!("trace vector of length {} for {} components", d.len(), self.multiplicities.len())));
        }
        if let Some(i) = (0..d.len()).find(|&i| !self.multiplicities[i].allows(d[i])) {
            return Err(Error::Invalid(format!("component {i} has fewer than {} points", d[i])));
        }
        Ok(())
    }

    fn realize_unchecked(&self, d: &[usize]) -> RelationalStructure {
        let mut offset = Vec::with_capacity(d.len());
        let mut labels = Vec::new();
        for (i, &di) in d.iter().enumerate() {
            offset.push(labels.len());
            labels.extend((0..di).map(|m| format!("{}.{m}", self.quotient.labels()[i])));
        }
        let mut relations: Vec<Relation> = self
            .quotient
            .relations()
            .iter()
            .zip(&self.distinct)
            .map(|(r, &distinct)| {
                let mut tuples = Vec::new();
                for t in &r.tuples {
                    lift(t, d, &offset, distinct, &mut Vec::new(), &mut tuples);
                }
                Relation::new(&r.name, r.arity, tuples)
            })
            .collect();
        if self.block_equivalence {
            let pairs = (0..d.len())
                .flat_map(|i| (0..d[i]).flat_map(move |a| (0..d[i]).map(move |b| (i, a, b))))
                .map(|(i, a, b)| vec![offset[i] + a, offset[i] + b]);
            relations.push(Relation::new(EQUIVALENCE, 2, pairs));
        }
        RelationalStructure::with_labels(labels, relations).expect("lifted tuples are in range")
    }

    /// Isomorphism data for trace vector `d`.
    fn form(&self, d: &[usize]) -> TwinForm {
        let cap = self.max_arity() + 1;
        let capped: Vec<usize> = d.iter().map(|&x| x.min(cap)).collect();
        let s = self.realize_unchecked(&capped);
        let blocks: Vec<usize> = capped.iter().enumerate().flat_map(|(i, &c)| std::iter::repeat_n(i, c)).collect();
        TwinForm::build(&s, &blocks, d)
    }

    fn traces(&self, n: usize) -> Vec<Monomial> {
        let k = self.multiplicities.len();
        Monomial::all_of_degree(k, n as u32)
            .into_iter()
            .filter(|m| (0..k).all(|i| self.multiplicities[i].allows(m.exponent(i) as usize)))
            .collect()
    }
}

fn lift(
    t: &[usize],
    d: &[usize],
    offset: &[usize],
    distinct: bool,
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let pos = cur.len();
    if pos == t.len() {
        out.push(cur.clone());
        return;
    }
    let i = t[pos];
    for m in 0..d[i] {
        let p = offset[i] + m;
        if distinct && cur.contains(&p) {
            continue;
        }
        cur.push(p);
        lift(t, d, offset, distinct, cur, out);
        cur.pop();
    }
}

/// Trace vectors of one size inducing isomorphic structures, as monomials
/// `x^d`. `leading` is the largest member in the shape order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TraceClass {
    pub leading: Monomial,
    pub members: Vec<Monomial>,
}

/// Isomorphism classes of trace vectors of total size `n`, sorted by
/// decreasing leading monomial.
pub fn trace_classes(l: &LayeredStructure, n: usize) -> Vec<TraceClass> {
    let traces = l.traces(n);
    let k = l.multiplicities.len();
    let forms: Vec<TwinForm> = traces.par_iter().map(|m| l.form(&m.dense(k).iter().map(|&e| e as usize).collect::<Vec<_>>())).collect();
    let (class_of, count) = classify(&forms);
    let mut members: Vec<Vec<Monomial>> = vec![Vec::new(); count];
    for (m, c) in traces.into_iter().zip(class_of) {
        members[c].push(m);
    }
    let order = TermOrder::shape();
    let mut out: Vec<TraceClass> = members
        .into_iter()
        .map(|mut ms| {
            ms.sort();
            let leading = order.max(&ms).cloned().expect("classes are nonempty");
            TraceClass { leading, members: ms }
        })
        .collect();
    out.sort_by(|a, b| order.cmp(&b.leading, &a.leading));
    out
}

/// Number of isomorphism classes of `n`-element induced substructures.
pub fn profile_layered(l: &LayeredStructure, n: usize) -> usize {
    trace_classes(l, n).len()
}

pub fn profile_values(l: &LayeredStructure, upto: usize) -> Vec<usize> {
    (0..=upto).map(|n| profile_layered(l, n)).collect()
}

/// Numerator over `(1-Z)(1-Z^2)…(1-Z^k)`, `k` the number of unbounded
/// components. The numerator degree is not known in advance: it is raised
/// until the next `margin` coefficients of the product vanish.
pub fn profile_series(l: &LayeredStructure, margin: usize) -> Result<RationalSeries> {
    let k = l.unbounded_components();
    if k == 0 {
        return Err(Error::Invalid("profile series needs an unbounded component".into()));
    }
    let den: Vec<u32> = (1..=k as u32).collect();
    let den_degree = k * (k + 1) / 2;
    let finite: usize = l
        .multiplicities
        .iter()
        .map(|m| match m {
            Multiplicity::Finite(m) => *m,
            Multiplicity::Unbounded => 0,
        })
        .sum();
    let limit = 2 * (den_degree + finite) + 20;
    let mut values: Vec<BigInt> = Vec::new();
    let mut last = None;
    for bound in den_degree..=limit {
        while values.len() < bound + margin {
            values.push(BigInt::from(profile_layered(l, values.len())));
        }
        match RationalSeries::fit(&values, &den, margin) {
            Ok(s) => return Ok(s),
            Err(e) => last = Some(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

/// Checks that adding a layer to a leading monomial stays leading unless a
/// finite component of that layer is used up. Degrees up to `dmax`.
pub fn check_addlayer(l: &LayeredStructure, dmax: usize) -> bool {
    addlayer_violation(l, dmax).is_none()
}

/// First `(m, S)` with `m` leading, `S` a layer of `m`, no exhausted finite
/// component in `S`, and `m x_S` not leading.
pub fn addlayer_violation(l: &LayeredStructure, dmax: usize) -> Option<(Monomial, u32)> {
    let k = l.multiplicities.len();
    let leading: Vec<HashSet<Monomial>> =
        (0..=dmax + k).map(|n| trace_classes(l, n).into_iter().map(|c| c.leading).collect()).collect();
    for level in leading.iter().take(dmax + 1) {
        let mut sorted: Vec<&Monomial> = level.iter().collect();
        sorted.sort();
        for m in sorted {
            let mut layers = m.chain_decompose().layers;
            layers.dedup();
            for s in layers {
                let exhausted = subset::points(s).any(|i| {
                    matches!(l.multiplicities[i], Multiplicity::Finite(c) if m.exponent(i) as usize == c)
                });
                if exhausted {
                    continue;
                }
                let grown = m.mul(&Monomial::of_set(s));
                if !leading[grown.degree() as usize].contains(&grown) {
                    return Some((m.clone(), s));
                }
            }
        }
    }
    None
}
