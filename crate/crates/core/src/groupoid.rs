//! Local bijections of a finite set and permutation groupoids.
//!
//! A permutation groupoid is stored extensionally: every element is kept,
//! sorted in canonical order (rank, then domain, then images).

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::subset::{self, Mask};

/// Largest ground set accepted by the extensional constructors.
pub const MAX_GROUND: usize = 8;

/// A bijection between two subsets of the ground set.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LocalBijection {
    // sorted by source point
    pairs: Vec<(usize, usize)>,
}

impl LocalBijection {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Result<Self> {
        let mut pairs: Vec<(usize, usize)> = pairs.into_iter().collect();
        pairs.sort_unstable();
        for w in pairs.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::DuplicateDomainPoint(w[0].0));
            }
        }
        let mut seen = HashSet::new();
        for &(_, t) in &pairs {
            if !seen.insert(t) {
                return Err(Error::NotInjective { target: t });
            }
        }
        for &(s, t) in &pairs {
            if s >= 32 || t >= 32 {
                return Err(Error::PointOutOfRange { point: s.max(t), size: 32 });
            }
        }
        Ok(Self { pairs })
    }

    pub fn empty() -> Self {
        Self { pairs: Vec::new() }
    }

    pub fn identity(domain: Mask) -> Self {
        Self { pairs: subset::points(domain).map(|p| (p, p)).collect() }
    }

    /// The permutation `i -> perm[i]` of `{0, .., perm.len()-1}`.
    pub fn from_permutation(perm: &[usize]) -> Result<Self> {
        Self::new(perm.iter().copied().enumerate())
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn rank(&self) -> usize {
        self.pairs.len()
    }

    pub fn domain(&self) -> Mask {
        subset::from_points(self.pairs.iter().map(|p| p.0))
    }

    pub fn image(&self) -> Mask {
        subset::from_points(self.pairs.iter().map(|p| p.1))
    }

    pub fn apply(&self, point: usize) -> Option<usize> {
        self.pairs
            .binary_search_by_key(&point, |p| p.0)
            .ok()
            .map(|i| self.pairs[i].1)
    }

    pub fn is_identity(&self) -> bool {
        self.pairs.iter().all(|&(s, t)| s == t)
    }

    pub fn inverse(&self) -> Self {
        let mut pairs: Vec<_> = self.pairs.iter().map(|&(s, t)| (t, s)).collect();
        pairs.sort_unstable();
        Self { pairs }
    }

    /// Restriction to `domain ∩ dom f`.
    pub fn restrict(&self, domain: Mask) -> Self {
        Self {
            pairs: self.pairs.iter().copied().filter(|&(s, _)| domain & (1 << s) != 0).collect(),
        }
    }

    /// Groupoid composition `self ∘ g`, defined only when `im g = dom self`.
    pub fn compose(&self, g: &LocalBijection) -> Option<LocalBijection> {
        if g.image() != self.domain() {
            return None;
        }
        Some(self.compose_monoid(g))
    }

    /// Monoid composition `self ∘ g` on the largest domain where `self(g(x))`
    /// is defined, namely `g⁻¹(im g ∩ dom self)`.
    pub fn compose_monoid(&self, g: &LocalBijection) -> LocalBijection {
        let pairs = g
            .pairs
            .iter()
            .filter_map(|&(s, mid)| self.apply(mid).map(|t| (s, t)))
            .collect();
        LocalBijection { pairs }
    }

    /// Image of a tuple, if every entry lies in the domain.
    pub fn apply_tuple(&self, tuple: &[usize]) -> Option<Vec<usize>> {
        tuple.iter().map(|&p| self.apply(p)).collect()
    }

    pub fn display<'a>(&'a self, labels: &'a [String]) -> LabeledBijection<'a> {
        LabeledBijection { map: self, labels }
    }
}

impl Ord for LocalBijection {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank()
            .cmp(&other.rank())
            .then_with(|| self.pairs.iter().map(|p| p.0).cmp(other.pairs.iter().map(|p| p.0)))
            .then_with(|| self.pairs.iter().map(|p| p.1).cmp(other.pairs.iter().map(|p| p.1)))
    }
}

impl PartialOrd for LocalBijection {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct LabeledBijection<'a> {
    map: &'a LocalBijection,
    labels: &'a [String],
}

impl fmt::Display for LabeledBijection<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.map.pairs.is_empty() {
            return f.write_str("{}");
        }
        let label = |p: usize| self.labels.get(p).cloned().unwrap_or_else(|| (p + 1).to_string());
        for (i, &(s, t)) in self.map.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}->{}", label(s), label(t))?;
        }
        Ok(())
    }
}

pub fn default_labels(size: usize) -> Vec<String> {
    (1..=size).map(|i| i.to_string()).collect()
}

/// A set of local bijections of `{0, .., size-1}` containing the identity and
/// stable under restriction, inverse and composition.
#[derive(Clone, Debug)]
pub struct PermutationGroupoid {
    size: usize,
    labels: Vec<String>,
    elements: Vec<LocalBijection>,
    index: HashMap<LocalBijection, usize>,
    by_domain: HashMap<Mask, Vec<usize>>,
}

impl PartialEq for PermutationGroupoid {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.elements == other.elements
    }
}

impl Eq for PermutationGroupoid {}

fn check_ground(size: usize) -> Result<()> {
    if size > MAX_GROUND {
        return Err(Error::GroundTooLarge { size, limit: MAX_GROUND });
    }
    Ok(())
}

impl PermutationGroupoid {
    /// Smallest permutation groupoid on `size` points containing `generators`.
    pub fn close(size: usize, generators: &[LocalBijection]) -> Result<Self> {
        check_ground(size)?;
        let ground = subset::full(size);
        for g in generators {
            if !subset::is_subset(g.domain() | g.image(), ground) {
                let bad = subset::points((g.domain() | g.image()) & !ground).next().unwrap_or(size);
                return Err(Error::PointOutOfRange { point: bad, size });
            }
        }

        let mut seen: HashSet<LocalBijection> = HashSet::new();
        let mut by_dom: HashMap<Mask, Vec<LocalBijection>> = HashMap::new();
        let mut by_im: HashMap<Mask, Vec<LocalBijection>> = HashMap::new();
        let mut queue = VecDeque::new();

        let push = |f: LocalBijection,
                        seen: &mut HashSet<LocalBijection>,
                        by_dom: &mut HashMap<Mask, Vec<LocalBijection>>,
                        by_im: &mut HashMap<Mask, Vec<LocalBijection>>,
                        queue: &mut VecDeque<LocalBijection>| {
            if seen.insert(f.clone()) {
                by_dom.entry(f.domain()).or_default().push(f.clone());
                by_im.entry(f.image()).or_default().push(f.clone());
                queue.push_back(f);
            }
        };

        push(LocalBijection::identity(ground), &mut seen, &mut by_dom, &mut by_im, &mut queue);
        for g in generators {
            push(g.clone(), &mut seen, &mut by_dom, &mut by_im, &mut queue);
        }

        while let Some(h) = queue.pop_front() {
            let mut fresh = vec![h.inverse()];
            let dom = h.domain();
            for p in subset::points(dom) {
                fresh.push(h.restrict(dom & !(1 << p)));
            }
            if let Some(es) = by_dom.get(&h.image()) {
                fresh.extend(es.iter().map(|e| e.compose_monoid(&h)));
            }
            if let Some(es) = by_im.get(&dom) {
                fresh.extend(es.iter().map(|e| h.compose_monoid(e)));
            }
            for f in fresh {
                push(f, &mut seen, &mut by_dom, &mut by_im, &mut queue);
            }
        }

        Ok(Self::from_sorted(size, default_labels(size), seen.into_iter().collect()))
    }

    fn from_sorted(size: usize, labels: Vec<String>, mut elements: Vec<LocalBijection>) -> Self {
        elements.sort();
        elements.dedup();
        let index = elements.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
        let mut by_domain: HashMap<Mask, Vec<usize>> = HashMap::new();
        for (i, f) in elements.iter().enumerate() {
            by_domain.entry(f.domain()).or_default().push(i);
        }
        Self { size, labels, elements, index, by_domain }
    }

    /// Wraps an explicit element set, checking every groupoid axiom.
    pub fn from_elements(size: usize, elements: Vec<LocalBijection>) -> Result<Self> {
        check_ground(size)?;
        let g = Self::from_sorted(size, default_labels(size), elements);
        if !g.is_closed() {
            return Err(Error::Invalid("element set is not a permutation groupoid".into()));
        }
        Ok(g)
    }

    /// The restriction closure `↓G` of the permutation group generated by `perms`.
    pub fn from_group(size: usize, perms: &[Vec<usize>]) -> Result<Self> {
        let gens = perms
            .iter()
            .map(|p| {
                if p.len() != size {
                    return Err(Error::Invalid(format!("permutation {p:?} has wrong length")));
                }
                LocalBijection::from_permutation(p)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::close(size, &gens)
    }

    /// `↓S_n`.
    pub fn symmetric(size: usize) -> Result<Self> {
        let mut perms = Vec::new();
        if size >= 2 {
            let mut swap: Vec<usize> = (0..size).collect();
            swap.swap(0, 1);
            perms.push(swap);
            let cycle: Vec<usize> = (0..size).map(|i| (i + 1) % size).collect();
            perms.push(cycle);
        }
        Self::from_group(size, &perms)
    }

    /// `↓C_n`, generated by the cycle `i -> i+1 mod n`.
    pub fn cyclic(size: usize) -> Result<Self> {
        let cycle: Vec<usize> = (0..size).map(|i| (i + 1) % size).collect();
        Self::from_group(size, &[cycle])
    }

    /// `↓A_n` for `n >= 3`, generated by the 3-cycles `(0 1 i)`.
    pub fn alternating(size: usize) -> Result<Self> {
        let perms: Vec<Vec<usize>> = (2..size)
            .map(|i| {
                let mut p: Vec<usize> = (0..size).collect();
                p[0] = 1;
                p[1] = i;
                p[i] = 0;
                p
            })
            .collect();
        Self::from_group(size, &perms)
    }

    /// All strictly increasing local bijections; its invariant ring is QSym.
    pub fn increasing(size: usize) -> Result<Self> {
        check_ground(size)?;
        let mut elements = Vec::new();
        let ground = subset::full(size);
        for a in subset::subsets(ground) {
            for b in subset::subsets(ground) {
                if subset::size(a) == subset::size(b) {
                    elements.push(LocalBijection {
                        pairs: subset::points(a).zip(subset::points(b)).collect(),
                    });
                }
            }
        }
        Ok(Self::from_sorted(size, default_labels(size), elements))
    }

    /// Every local bijection of the ground set.
    pub fn full(size: usize) -> Result<Self> {
        check_ground(size)?;
        let ground = subset::full(size);
        let mut elements = Vec::new();
        for a in subset::subsets(ground) {
            let dom: Vec<usize> = subset::points(a).collect();
            for b in subset::subsets(ground) {
                if subset::size(b) != dom.len() {
                    continue;
                }
                let mut img: Vec<usize> = subset::points(b).collect();
                for_each_permutation(&mut img, &mut |perm| {
                    elements.push(LocalBijection {
                        pairs: dom.iter().copied().zip(perm.iter().copied()).collect(),
                    });
                });
            }
        }
        Ok(Self::from_sorted(size, default_labels(size), elements))
    }

    /// The identity together with all local bijections of rank at most `size - 1`.
    pub fn staircase(size: usize) -> Result<Self> {
        let full = Self::full(size)?;
        let elements = full
            .elements
            .into_iter()
            .filter(|f| f.rank() < size || f.is_identity())
            .collect();
        Ok(Self::from_sorted(size, default_labels(size), elements))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.size {
            return Err(Error::Invalid(format!(
                "{} labels given for a ground set of size {}",
                labels.len(),
                self.size
            )));
        }
        self.labels = labels;
        Ok(self)
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

    pub fn elements(&self) -> &[LocalBijection] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, f: &LocalBijection) -> bool {
        self.index.contains_key(f)
    }

    pub fn position(&self, f: &LocalBijection) -> Option<usize> {
        self.index.get(f).copied()
    }

    /// Elements whose domain is exactly `domain`.
    pub fn with_domain(&self, domain: Mask) -> impl Iterator<Item = &LocalBijection> {
        self.by_domain
            .get(&domain)
            .map(|v| v.as_slice())
            .unwrap_or(&[])
            .iter()
            .map(move |&i| &self.elements[i])
    }

    pub fn count_with_domain(&self, domain: Mask) -> usize {
        self.by_domain.get(&domain).map_or(0, Vec::len)
    }

    /// Exhaustive check of the four groupoid axioms.
    pub fn is_closed(&self) -> bool {
        if !self.contains(&LocalBijection::identity(self.ground())) {
            return false;
        }
        for f in &self.elements {
            if !self.contains(&f.inverse()) {
                return false;
            }
            let dom = f.domain();
            if subset::points(dom).any(|p| !self.contains(&f.restrict(dom & !(1 << p)))) {
                return false;
            }
            for g in self.elements.iter().filter(|g| g.image() == dom) {
                if !self.contains(&f.compose_monoid(g)) {
                    return false;
                }
            }
        }
        true
    }

    /// The permutations `G(X, X)`.
    pub fn underlying_group(&self) -> Vec<LocalBijection> {
        self.with_domain(self.ground()).cloned().collect()
    }

    pub fn comes_from_group(&self) -> bool {
        let group = self.underlying_group();
        match Self::close(self.size, &group) {
            Ok(closed) => closed.elements == self.elements,
            Err(_) => false,
        }
    }

    /// Elements with domain and image inside `sub`, as a groupoid on `sub`.
    /// Points of `sub` are re-indexed `0..|sub|` in increasing order and keep
    /// their labels.
    pub fn restrict(&self, sub: Mask) -> PermutationGroupoid {
        let sub = sub & self.ground();
        let points: Vec<usize> = subset::points(sub).collect();
        let mut pos = vec![usize::MAX; self.size];
        for (i, &p) in points.iter().enumerate() {
            pos[p] = i;
        }
        let elements = self
            .elements
            .iter()
            .filter(|f| subset::is_subset(f.domain() | f.image(), sub))
            .map(|f| LocalBijection {
                pairs: f.pairs.iter().map(|&(s, t)| (pos[s], pos[t])).collect(),
            })
            .collect();
        let labels = points.iter().map(|&p| self.labels[p].clone()).collect();
        Self::from_sorted(points.len(), labels, elements)
    }

    /// Orbits of single points under the groupoid.
    pub fn transitive_components(&self) -> Vec<Mask> {
        let mut comps: Vec<Mask> = Vec::new();
        let mut assigned: Mask = 0;
        for p in 0..self.size {
            if assigned & (1 << p) != 0 {
                continue;
            }
            let comp = subset::from_points(self.with_domain(1 << p).filter_map(|f| f.apply(p)));
            assigned |= comp;
            comps.push(comp);
        }
        comps
    }

    /// True iff the groupoid comes from a permutation group generated by the
    /// transpositions it contains.
    pub fn reflection_criterion(&self) -> bool {
        if !self.comes_from_group() {
            return false;
        }
        let group = self.underlying_group();
        let transpositions: Vec<_> = group
            .iter()
            .filter(|f| f.pairs.iter().filter(|(s, t)| s != t).count() == 2)
            .cloned()
            .collect();
        let generated: BTreeSet<_> = closure_under_composition(self.ground(), &transpositions);
        generated.len() == group.len()
    }
}

fn closure_under_composition(ground: Mask, gens: &[LocalBijection]) -> BTreeSet<LocalBijection> {
    let mut set = BTreeSet::new();
    let mut queue = VecDeque::from([LocalBijection::identity(ground)]);
    while let Some(f) = queue.pop_front() {
        if !set.insert(f.clone()) {
            continue;
        }
        for g in gens {
            let h = g.compose_monoid(&f);
            if !set.contains(&h) {
                queue.push_back(h);
            }
        }
    }
    set
}

pub(crate) fn for_each_permutation<F: FnMut(&[usize])>(items: &mut [usize], f: &mut F) {
    fn rec<F: FnMut(&[usize])>(items: &mut [usize], k: usize, f: &mut F) {
        if k == items.len() {
            f(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            rec(items, k + 1, f);
            items.swap(k, i);
        }
    }
    rec(items, 0, f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lb(pairs: &[(usize, usize)]) -> LocalBijection {
        LocalBijection::new(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn close_of_nothing_is_all_identities() {
        let g = PermutationGroupoid::close(3, &[]).unwrap();
        assert_eq!(g.len(), 8);
        assert!(g.elements().iter().all(LocalBijection::is_identity));
    }

    #[test]
    fn close_of_rank_one_map() {
        let g = PermutationGroupoid::close(3, &[lb(&[(0, 1)])]).unwrap();
        assert_eq!(g.len(), 10);
        assert!(g.contains(&lb(&[(1, 0)])));
        assert!(g.is_closed());
    }

    #[test]
    fn close_of_swap_on_two_points() {
        let g = PermutationGroupoid::close(2, &[lb(&[(0, 1), (1, 0)])]).unwrap();
        assert_eq!(g.len(), 7);
        assert_eq!(g.underlying_group().len(), 2);
        assert!(g.comes_from_group());
    }

    #[test]
    fn close_rejects_points_outside_ground() {
        let err = PermutationGroupoid::close(2, &[lb(&[(0, 2)])]).unwrap_err();
        assert!(matches!(err, Error::PointOutOfRange { point: 2, .. }));
    }

    #[test]
    fn non_injective_map_is_rejected() {
        assert!(matches!(
            LocalBijection::new([(0, 1), (1, 1)]),
            Err(Error::NotInjective { target: 1 })
        ));
        assert!(LocalBijection::new([(0, 1), (0, 2)]).is_err());
    }

    #[test]
    fn underlying_groups() {
        let noncm = PermutationGroupoid::close(3, &[lb(&[(0, 1)])]).unwrap();
        assert_eq!(noncm.underlying_group(), vec![LocalBijection::identity(0b111)]);
        assert!(!noncm.comes_from_group());
        let qsym = PermutationGroupoid::increasing(3).unwrap();
        assert_eq!(qsym.underlying_group().len(), 1);
        assert!(!PermutationGroupoid::increasing(2).unwrap().comes_from_group());
        assert!(PermutationGroupoid::symmetric(2).unwrap().comes_from_group());
    }

    #[test]
    fn constructed_groupoids_are_closed() {
        for g in [
            PermutationGroupoid::increasing(3).unwrap(),
            PermutationGroupoid::full(3).unwrap(),
            PermutationGroupoid::staircase(3).unwrap(),
            PermutationGroupoid::symmetric(3).unwrap(),
            PermutationGroupoid::alternating(3).unwrap(),
        ] {
            assert!(g.is_closed());
            let again = PermutationGroupoid::close(g.size(), g.elements()).unwrap();
            assert_eq!(again, g);
        }
        assert_eq!(PermutationGroupoid::full(3).unwrap().len(), 34);
        assert_eq!(PermutationGroupoid::symmetric(3).unwrap().underlying_group().len(), 6);
        assert_eq!(PermutationGroupoid::alternating(3).unwrap().underlying_group().len(), 3);
    }

    #[test]
    fn restriction_of_double_transposition_keeps_the_swap() {
        // (1 2)(3 4) restricted to {1,2} is the swap, so the restriction to
        // {1,2,3} is ↓S_2 ⊕ id rather than the groupoid generated by 1 -> 2
        let g = PermutationGroupoid::from_group(4, &[vec![1, 0, 3, 2]]).unwrap();
        let r = g.restrict(0b0111);
        let expected = PermutationGroupoid::close(3, &[lb(&[(0, 1), (1, 0)])]).unwrap();
        assert_eq!(r, expected);
        assert_eq!(g.restrict(g.ground()), g);
    }

    #[test]
    fn noncm_groupoid_is_a_restriction_of_a_group() {
        // (1 2 4)(3 5 6) on six points
        let g = PermutationGroupoid::from_group(6, &[vec![1, 3, 4, 0, 5, 2]]).unwrap();
        let expected = PermutationGroupoid::close(3, &[lb(&[(0, 1)])]).unwrap();
        assert_eq!(g.restrict(0b000111), expected);
    }

    #[test]
    fn restriction_of_cyclic_group_is_chain_groupoid() {
        let c3 = PermutationGroupoid::cyclic(3).unwrap();
        let r = c3.restrict(0b011);
        // local automorphisms of a < b: identities plus a->b and b->a
        let expected = PermutationGroupoid::close(2, &[lb(&[(0, 1)])]).unwrap();
        assert_eq!(r, expected);
    }

    #[test]
    fn monoid_composition() {
        let f = lb(&[(0, 1)]);
        let g = lb(&[(1, 0)]);
        assert_eq!(f.compose_monoid(&g), lb(&[(1, 1)]));
        let id = LocalBijection::identity(0b111);
        assert_eq!(id.compose_monoid(&f), f);
        assert_eq!(f.compose_monoid(&id), f);
        assert_eq!(f.compose_monoid(&lb(&[(2, 2)])), LocalBijection::empty());
    }

    #[test]
    fn reflection_criterion_cases() {
        assert!(PermutationGroupoid::symmetric(3).unwrap().reflection_criterion());
        assert!(!PermutationGroupoid::alternating(3).unwrap().reflection_criterion());
        assert!(!PermutationGroupoid::increasing(2).unwrap().reflection_criterion());
        let noncm = PermutationGroupoid::close(3, &[lb(&[(0, 1)])]).unwrap();
        assert!(!noncm.reflection_criterion());
    }

    #[test]
    fn canonical_order_is_rank_then_domain_then_image() {
        let g = PermutationGroupoid::close(2, &[lb(&[(0, 1), (1, 0)])]).unwrap();
        let shown: Vec<String> =
            g.elements().iter().map(|f| f.display(g.labels()).to_string()).collect();
        assert_eq!(shown, vec!["{}", "1->1", "1->2", "2->1", "2->2", "1->1 2->2", "1->2 2->1"]);
    }

    #[test]
    fn transitive_components_of_noncm() {
        let g = PermutationGroupoid::close(3, &[lb(&[(0, 1)])]).unwrap();
        assert_eq!(g.transitive_components(), vec![0b011, 0b100]);
    }
}
