//! Isomorphism through twin classes.
//!
//! Two points are twins when swapping them is an automorphism. Twin classes
//! partition the ground set, and membership of a tuple in a relation then only
//! depends on the classes of its entries and on which entries coincide. A
//! structure is therefore determined up to isomorphism by its class sizes and
//! the set of such keys that occur, and isomorphism reduces to matching
//! classes.

use std::collections::{BTreeSet, HashSet};

use super::RelationalStructure;

/// Class of every entry together with the equality pattern of the tuple.
type Key = (Vec<usize>, Vec<u8>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct TwinForm {
    sizes: Vec<usize>,
    keys: Vec<BTreeSet<Key>>,
    invariants: Vec<ClassInvariant>,
}

/// Data preserved by any class bijection realizing an isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct ClassInvariant {
    size: usize,
    /// Per relation and position, how many keys put this class there.
    counts: Vec<Vec<usize>>,
}

fn pattern(tuple: &[usize]) -> Vec<u8> {
    let mut seen: Vec<usize> = Vec::new();
    tuple
        .iter()
        .map(|p| match seen.iter().position(|q| q == p) {
            Some(i) => i as u8,
            None => {
                seen.push(*p);
                (seen.len() - 1) as u8
            }
        })
        .collect()
}

fn swap_is_automorphism(s: &RelationalStructure, sets: &[HashSet<&[usize]>], x: usize, y: usize) -> bool {
    let swap = |p: usize| if p == x { y } else if p == y { x } else { p };
    s.relations.iter().zip(sets).all(|(r, set)| {
        r.tuples.iter().all(|t| {
            if !t.iter().any(|&p| p == x || p == y) {
                return true;
            }
            let image: Vec<usize> = t.iter().map(|&p| swap(p)).collect();
            set.contains(image.as_slice())
        })
    })
}

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut r = i;
    while parent[r] != r {
        r = parent[r];
    }
    parent[i] = r;
    r
}

impl TwinForm {
    /// Form of a finite structure computed from scratch.
    pub(crate) fn of(s: &RelationalStructure) -> Self {
        let n = s.size();
        Self::build(s, &(0..n).collect::<Vec<_>>(), &vec![1; n])
    }

    /// `blocks[p]` names a block of points known to be pairwise twins and
    /// `block_sizes` gives the size each block stands for. Used on truncated
    /// realizations where a block is kept only large enough to exhibit every
    /// equality pattern.
    pub(crate) fn build(s: &RelationalStructure, blocks: &[usize], block_sizes: &[usize]) -> Self {
        let n = s.size();
        let sets: Vec<HashSet<&[usize]>> =
            s.relations.iter().map(|r| r.tuples.iter().map(Vec::as_slice).collect()).collect();
        let mut reps: Vec<usize> = Vec::new();
        let mut rep_of_block = vec![usize::MAX; block_sizes.len()];
        for p in 0..n {
            if rep_of_block[blocks[p]] == usize::MAX {
                rep_of_block[blocks[p]] = p;
                reps.push(p);
            }
        }
        let mut parent: Vec<usize> = (0..reps.len()).collect();
        for i in 0..reps.len() {
            for j in i + 1..reps.len() {
                if find(&mut parent, i) == find(&mut parent, j) {
                    continue;
                }
                if swap_is_automorphism(s, &sets, reps[i], reps[j]) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[b] = a;
                }
            }
        }
        // classes numbered by first appearance
        let mut class_of_rep = vec![usize::MAX; reps.len()];
        let mut sizes = Vec::new();
        let mut root_class: Vec<Option<usize>> = vec![None; reps.len()];
        for i in 0..reps.len() {
            let root = find(&mut parent, i);
            let c = *root_class[root].get_or_insert_with(|| {
                sizes.push(0);
                sizes.len() - 1
            });
            class_of_rep[i] = c;
            sizes[c] += block_sizes[blocks[reps[i]]];
        }
        let rep_index: Vec<usize> = {
            let mut v = vec![0; block_sizes.len()];
            for (i, &p) in reps.iter().enumerate() {
                v[blocks[p]] = i;
            }
            v
        };
        let class = |p: usize| class_of_rep[rep_index[blocks[p]]];
        let keys: Vec<BTreeSet<Key>> = s
            .relations
            .iter()
            .map(|r| r.tuples.iter().map(|t| (t.iter().map(|&p| class(p)).collect(), pattern(t))).collect())
            .collect();
        let invariants = (0..sizes.len())
            .map(|c| ClassInvariant {
                size: sizes[c],
                counts: s
                    .relations
                    .iter()
                    .zip(&keys)
                    .map(|(r, ks)| (0..r.arity).map(|i| ks.iter().filter(|k| k.0[i] == c).count()).collect())
                    .collect(),
            })
            .collect();
        TwinForm { sizes, keys, invariants }
    }

    /// Isomorphism-invariant digest; equal forms have equal digests.
    pub(crate) fn digest(&self) -> (Vec<ClassInvariant>, Vec<usize>) {
        let mut inv = self.invariants.clone();
        inv.sort();
        (inv, self.keys.iter().map(BTreeSet::len).collect())
    }

    pub(crate) fn isomorphic(&self, other: &TwinForm) -> bool {
        if self.sizes.len() != other.sizes.len() || self.digest() != other.digest() {
            return false;
        }
        let mut image = vec![usize::MAX; self.sizes.len()];
        let mut used = vec![false; other.sizes.len()];
        self.extend(other, 0, &mut image, &mut used)
    }

    fn extend(&self, other: &TwinForm, c: usize, image: &mut [usize], used: &mut [bool]) -> bool {
        if c == self.sizes.len() {
            return self.keys.iter().zip(&other.keys).all(|(mine, theirs)| {
                mine.iter().all(|(classes, pat)| {
                    let mapped: Vec<usize> = classes.iter().map(|&k| image[k]).collect();
                    theirs.contains(&(mapped, pat.clone()))
                })
            });
        }
        for d in 0..other.sizes.len() {
            if used[d] || self.invariants[c] != other.invariants[d] {
                continue;
            }
            image[c] = d;
            used[d] = true;
            if self.partial_ok(other, c, image) && self.extend(other, c + 1, image, used) {
                return true;
            }
            used[d] = false;
        }
        image[c] = usize::MAX;
        false
    }

    /// Keys whose classes are all assigned, with `c` among them, must map to keys.
    fn partial_ok(&self, other: &TwinForm, c: usize, image: &[usize]) -> bool {
        self.keys.iter().zip(&other.keys).all(|(mine, theirs)| {
            mine.iter()
                .filter(|(classes, _)| classes.contains(&c) && classes.iter().all(|&k| k <= c))
                .all(|(classes, pat)| {
                    let mapped: Vec<usize> = classes.iter().map(|&k| image[k]).collect();
                    theirs.contains(&(mapped, pat.clone()))
                })
        })
    }
}
