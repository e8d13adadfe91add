//! Finite relational structures, their profiles and monomorphic
//! decompositions, wreath blow-ups, and the algebra of set functions.

mod iso;
pub mod layered;
pub mod setfun;

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::groupoid::{LocalBijection, PermutationGroupoid};
use crate::subset::{self, Mask};

pub(crate) use iso::TwinForm;
pub use layered::{check_addlayer, profile_layered, profile_series, trace_classes, LayeredStructure, Multiplicity, TraceClass};
pub use setfun::{cameron_product, chi, is_hereditary, phi_embedding, Equivalence, SetFunction};

/// Largest ground set handled by exhaustive isomorphism search.
pub const DEFAULT_GUARD: usize = 10;
/// Largest ground set for the groupoid bridge.
pub const BRIDGE_GUARD: usize = 7;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation {
    pub name: String,
    pub arity: usize,
    pub tuples: BTreeSet<Vec<usize>>,
}

impl Relation {
    pub fn new<I: IntoIterator<Item = Vec<usize>>>(name: &str, arity: usize, tuples: I) -> Self {
        Relation { name: name.to_string(), arity, tuples: tuples.into_iter().collect() }
    }
}

/// A finite set `{0, .., size-1}` with a list of relations on it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RelationalStructure {
    size: usize,
    labels: Vec<String>,
    pub(crate) relations: Vec<Relation>,
}

impl RelationalStructure {
    pub fn new(size: usize, relations: Vec<Relation>) -> Result<Self> {
        let labels = (0..size).map(|i| i.to_string()).collect();
        Self::with_labels(labels, relations)
    }

    pub fn with_labels(labels: Vec<String>, relations: Vec<Relation>) -> Result<Self> {
        let size = labels.len();
        for r in &relations {
            for t in &r.tuples {
                if t.len() != r.arity {
                    return Err(Error::BadTuple { relation: r.name.clone(), arity: r.arity, tuple: t.clone() });
                }
                if let Some(&point) = t.iter().find(|&&p| p >= size) {
                    return Err(Error::PointOutOfRange { point, size });
                }
            }
        }
        Ok(RelationalStructure { size, labels, relations })
    }

    /// A set with no relations at all.
    pub fn empty(size: usize) -> Self {
        Self::new(size, Vec::new()).expect("no tuples to check")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn ground(&self) -> Mask {
        subset::full(self.size)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn signature(&self) -> Vec<usize> {
        self.relations.iter().map(|r| r.arity).collect()
    }

    pub fn relation(&self, name: &str) -> Option<&Relation> {
        self.relations.iter().find(|r| r.name == name)
    }

    /// The substructure induced on `a`, renumbered in increasing order.
    pub fn induced(&self, a: Mask) -> RelationalStructure {
        let pts: Vec<usize> = subset::points(a).filter(|&p| p < self.size).collect();
        let mut index = vec![usize::MAX; self.size];
        for (i, &p) in pts.iter().enumerate() {
            index[p] = i;
        }
        let relations = self
            .relations
            .iter()
            .map(|r| Relation {
                name: r.name.clone(),
                arity: r.arity,
                tuples: r
                    .tuples
                    .iter()
                    .filter(|t| t.iter().all(|&p| index[p] != usize::MAX))
                    .map(|t| t.iter().map(|&p| index[p]).collect())
                    .collect(),
            })
            .collect();
        RelationalStructure {
            size: pts.len(),
            labels: pts.iter().map(|&p| self.labels[p].clone()).collect(),
            relations,
        }
    }
}

fn guard(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        return Err(Error::GuardExceeded { what, size, limit });
    }
    Ok(())
}

/// Whether two structures are isomorphic, with the default size guard.
pub fn isomorphic(a: &RelationalStructure, b: &RelationalStructure) -> Result<bool> {
    isomorphic_with_guard(a, b, DEFAULT_GUARD)
}

pub fn isomorphic_with_guard(a: &RelationalStructure, b: &RelationalStructure, limit: usize) -> Result<bool> {
    if a.signature() != b.signature() {
        return Err(Error::SignatureMismatch);
    }
    guard("ground set", a.size.max(b.size), limit)?;
    if a.size != b.size {
        return Ok(false);
    }
    Ok(TwinForm::of(a).isomorphic(&TwinForm::of(b)))
}

/// Groups forms into isomorphism classes; returns the class index of each.
pub(crate) fn classify(forms: &[TwinForm]) -> (Vec<usize>, usize) {
    let mut buckets: HashMap<_, Vec<(usize, usize)>> = HashMap::new();
    let mut classes = 0;
    let mut out = Vec::with_capacity(forms.len());
    for (i, f) in forms.iter().enumerate() {
        let bucket = buckets.entry(f.digest()).or_default();
        let class = match bucket.iter().find(|(rep, _)| forms[*rep].isomorphic(f)) {
            Some(&(_, c)) => c,
            None => {
                bucket.push((i, classes));
                classes += 1;
                classes - 1
            }
        };
        out.push(class);
    }
    (out, classes)
}

/// Number of isomorphism classes of `n`-element induced substructures.
pub fn profile(r: &RelationalStructure, n: usize) -> Result<usize> {
    profile_with_guard(r, n, DEFAULT_GUARD)
}

pub fn profile_with_guard(r: &RelationalStructure, n: usize, limit: usize) -> Result<usize> {
    guard("ground set", r.size, limit)?;
    let forms: Vec<TwinForm> =
        subset::subsets(r.ground()).filter(|&a| subset::size(a) == n).map(|a| TwinForm::of(&r.induced(a))).collect();
    Ok(classify(&forms).1)
}

/// Isomorphism forms of every induced substructure, indexed by mask.
struct SubsetForms {
    forms: HashMap<Mask, TwinForm>,
}

impl SubsetForms {
    fn new(r: &RelationalStructure) -> Self {
        let forms = subset::subsets(r.ground()).map(|a| (a, TwinForm::of(&r.induced(a)))).collect();
        SubsetForms { forms }
    }

    fn iso(&self, a: Mask, b: Mask) -> bool {
        a == b || self.forms[&a].isomorphic(&self.forms[&b])
    }

    /// `{x, y}` is a monomorphic part exactly when `C ∪ {x} ≅ C ∪ {y}` for
    /// every `C` avoiding both.
    fn pair_is_part(&self, ground: Mask, x: usize, y: usize) -> bool {
        let rest = ground & !(1 << x) & !(1 << y);
        subset::subsets(rest).all(|c| self.iso(c | 1 << x, c | 1 << y))
    }

    fn is_part(&self, ground: Mask, b: Mask) -> bool {
        let outside = ground & !b;
        let inner: Vec<Mask> = subset::subsets(b).collect();
        subset::subsets(outside).all(|c| {
            (0..=subset::size(b)).all(|k| {
                let mut same = inner.iter().filter(|&&s| subset::size(s) == k);
                let first = match same.next() {
                    Some(&f) => f,
                    None => return true,
                };
                same.all(|&s| self.iso(c | first, c | s))
            })
        })
    }
}

/// Whether `b` is a monomorphic part: induced structures on equally sized
/// sets agreeing outside `b` are isomorphic.
pub fn is_monomorphic_part(r: &RelationalStructure, b: Mask) -> Result<bool> {
    guard("ground set", r.size, DEFAULT_GUARD)?;
    Ok(SubsetForms::new(r).is_part(r.ground(), b & r.ground()))
}

/// The union of all monomorphic parts containing `x`.
pub fn largest_monomorphic_part(r: &RelationalStructure, x: usize) -> Result<Mask> {
    largest_monomorphic_part_with_guard(r, x, DEFAULT_GUARD)
}

pub fn largest_monomorphic_part_with_guard(r: &RelationalStructure, x: usize, limit: usize) -> Result<Mask> {
    guard("ground set", r.size, limit)?;
    if x >= r.size {
        return Err(Error::PointOutOfRange { point: x, size: r.size });
    }
    let forms = SubsetForms::new(r);
    Ok((0..r.size).filter(|&y| y == x || forms.pair_is_part(r.ground(), x, y)).fold(0, |m, y| m | 1 << y))
}

/// A partition of the ground set into blocks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomorphicDecomposition {
    blocks: Vec<Mask>,
}

impl MonomorphicDecomposition {
    /// Blocks are sorted by least element; they must be disjoint and nonempty.
    pub fn new(mut blocks: Vec<Mask>) -> Result<Self> {
        blocks.retain(|&b| b != 0);
        let mut seen = 0;
        for &b in &blocks {
            if b & seen != 0 {
                return Err(Error::Invalid("blocks overlap".into()));
            }
            seen |= b;
        }
        blocks.sort_by_key(|b| b.trailing_zeros());
        Ok(MonomorphicDecomposition { blocks })
    }

    pub fn blocks(&self) -> &[Mask] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    fn covers(&self, ground: Mask) -> bool {
        self.blocks.iter().fold(0, |m, b| m | b) == ground
    }

    fn trace(&self, a: Mask) -> Vec<u32> {
        self.blocks.iter().map(|b| (a & b).count_ones()).collect()
    }

    /// Every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &MonomorphicDecomposition) -> bool {
        self.blocks.iter().all(|b| coarser.blocks.iter().any(|c| subset::is_subset(*b, *c)))
    }
}

/// Partition of `E` into the largest monomorphic parts.
pub fn canonical_decomposition(r: &RelationalStructure) -> Result<MonomorphicDecomposition> {
    canonical_decomposition_with_guard(r, DEFAULT_GUARD)
}

pub fn canonical_decomposition_with_guard(r: &RelationalStructure, limit: usize) -> Result<MonomorphicDecomposition> {
    guard("ground set", r.size, limit)?;
    let forms = SubsetForms::new(r);
    let mut blocks = Vec::new();
    let mut done: Mask = 0;
    for x in 0..r.size {
        if done & 1 << x != 0 {
            continue;
        }
        let block = (x..r.size)
            .filter(|&y| y == x || (done & 1 << y == 0 && forms.pair_is_part(r.ground(), x, y)))
            .fold(0, |m, y| m | 1 << y);
        done |= block;
        blocks.push(block);
    }
    MonomorphicDecomposition::new(blocks)
}

/// Checks the defining property: subsets with equal trace sizes on the
/// blocks induce isomorphic structures.
pub fn is_monomorphic_decomposition(r: &RelationalStructure, d: &MonomorphicDecomposition) -> Result<bool> {
    is_monomorphic_decomposition_with_guard(r, d, DEFAULT_GUARD)
}

pub fn is_monomorphic_decomposition_with_guard(
    r: &RelationalStructure,
    d: &MonomorphicDecomposition,
    limit: usize,
) -> Result<bool> {
    guard("ground set", r.size, limit)?;
    if !d.covers(r.ground()) {
        return Ok(false);
    }
    let mut first: HashMap<Vec<u32>, TwinForm> = HashMap::new();
    for a in subset::subsets(r.ground()) {
        let form = TwinForm::of(&r.induced(a));
        match first.get(&d.trace(a)) {
            Some(rep) if !rep.isomorphic(&form) => return Ok(false),
            Some(_) => {}
            None => {
                first.insert(d.trace(a), form);
            }
        }
    }
    Ok(true)
}

/// All local bijections of `E` that are isomorphisms between the induced
/// substructures on their domain and image.
pub fn local_isomorphisms(r: &RelationalStructure) -> Result<PermutationGroupoid> {
    guard("ground set", r.size, BRIDGE_GUARD)?;
    let sets: Vec<HashSet<&[usize]>> =
        r.relations.iter().map(|rel| rel.tuples.iter().map(Vec::as_slice).collect()).collect();
    let mut found = Vec::new();
    let mut map = vec![None; r.size];
    extend_local(r, &sets, 0, &mut map, 0, &mut found);
    PermutationGroupoid::from_elements(r.size, found)
}

fn extend_local(
    r: &RelationalStructure,
    sets: &[HashSet<&[usize]>],
    x: usize,
    map: &mut [Option<usize>],
    used: Mask,
    found: &mut Vec<LocalBijection>,
) {
    if x == r.size {
        let pairs = map.iter().enumerate().filter_map(|(p, q)| q.map(|q| (p, q)));
        found.push(LocalBijection::new(pairs).expect("injective by construction"));
        return;
    }
    extend_local(r, sets, x + 1, map, used, found);
    for y in 0..r.size {
        if used & 1 << y != 0 {
            continue;
        }
        map[x] = Some(y);
        if respects(r, sets, map, x) {
            extend_local(r, sets, x + 1, map, used | 1 << y, found);
        }
        map[x] = None;
    }
}

/// Tuples over the current domain that involve `x` keep membership both ways.
fn respects(r: &RelationalStructure, sets: &[HashSet<&[usize]>], map: &[Option<usize>], x: usize) -> bool {
    let dom: Vec<usize> = (0..=x).filter(|&p| map[p].is_some()).collect();
    let inverse: HashMap<usize, usize> = dom.iter().map(|&p| (map[p].unwrap(), p)).collect();
    let y = map[x].unwrap();
    r.relations.iter().zip(sets).all(|(rel, set)| {
        let forward = rel.tuples.iter().filter(|t| t.contains(&x)).all(|t| {
            match t.iter().map(|&p| if p <= x { map[p] } else { None }).collect::<Option<Vec<usize>>>() {
                Some(image) => set.contains(image.as_slice()),
                None => true,
            }
        });
        let backward = rel.tuples.iter().filter(|t| t.contains(&y)).all(|t| {
            match t.iter().map(|q| inverse.get(q).copied()).collect::<Option<Vec<usize>>>() {
                Some(pre) => set.contains(pre.as_slice()),
                None => true,
            }
        });
        forward && backward
    })
}

/// One `k`-ary relation per orbit of injective `k`-tuples under `G`.
pub fn to_relational_structure(g: &PermutationGroupoid) -> Result<RelationalStructure> {
    guard("ground set", g.size(), BRIDGE_GUARD)?;
    let n = g.size();
    let mut relations = Vec::new();
    for k in 1..=n {
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut tuple = Vec::with_capacity(k);
        let mut tuples = Vec::new();
        injective_tuples(n, k, &mut tuple, &mut tuples);
        for t in tuples {
            if seen.contains(&t) {
                continue;
            }
            let orbit: BTreeSet<Vec<usize>> =
                g.with_domain(subset::from_points(t.iter().copied())).filter_map(|f| f.apply_tuple(&t)).collect();
            seen.extend(orbit.iter().cloned());
            let name = format!("r{}_{}", k, relations.iter().filter(|r: &&Relation| r.arity == k).count());
            relations.push(Relation { name, arity: k, tuples: orbit });
        }
    }
    RelationalStructure::with_labels(g.labels().to_vec(), relations)
}

fn injective_tuples(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for p in 0..n {
        if !cur.contains(&p) {
            cur.push(p);
            injective_tuples(n, k, cur, out);
            cur.pop();
        }
    }
}
