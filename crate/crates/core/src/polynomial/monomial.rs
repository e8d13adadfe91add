use std::fmt;

use crate::groupoid::LocalBijection;
use crate::subset::{self, Mask};

/// A monomial `x^d`, stored as its exponent vector with trailing zeros removed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Monomial(Vec<u32>);

/// A multichain `S_1 ⊆ S_2 ⊆ … ⊆ S_k` of nonempty subsets, smallest layer first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChainDecomposition {
    pub layers: Vec<Mask>,
}

/// `(r_1, …, r_n)` where `r_i` counts the layers of size `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FineDegree(pub Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn new(mut exponents: Vec<u32>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        Self(exponents)
    }

    pub fn var(i: usize) -> Self {
        Self::var_pow(i, 1)
    }

    pub fn var_pow(i: usize, e: u32) -> Self {
        let mut v = vec![0; i + 1];
        v[i] = e;
        Self::new(v)
    }

    /// `x_S = ∏_{i ∈ S} x_i`.
    pub fn of_set(set: Mask) -> Self {
        let mut v = vec![0; 32 - set.leading_zeros() as usize];
        for p in subset::points(set) {
            v[p] = 1;
        }
        Self(v)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Exponent vector padded to `n` variables.
    pub fn dense(&self, n: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn support(&self) -> Mask {
        subset::from_points(self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() { (self, other) } else { (other, self) };
        let mut v = long.0.clone();
        for (a, b) in v.iter_mut().zip(&short.0) {
            *a += b;
        }
        Monomial(v)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut v = other.0.clone();
        for (a, b) in v.iter_mut().zip(&self.0) {
            *a -= b;
        }
        Some(Monomial::new(v))
    }

    /// Partition obtained by sorting the nonzero exponents decreasingly.
    pub fn shape(&self) -> Vec<u32> {
        let mut s: Vec<u32> = self.0.iter().copied().filter(|&e| e > 0).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }

    /// Square-free peeling: layer `t` is `{i : d_i >= t}`.
    pub fn chain_decompose(&self) -> ChainDecomposition {
        let top = self.0.iter().copied().max().unwrap_or(0);
        let layers = (1..=top)
            .rev()
            .map(|t| {
                subset::from_points(self.0.iter().enumerate().filter(|(_, &e)| e >= t).map(|(i, _)| i))
            })
            .collect();
        ChainDecomposition { layers }
    }

    pub fn fine_degree(&self, n: usize) -> FineDegree {
        let mut r = vec![0u32; n.max(self.0.len())];
        for layer in self.chain_decompose().layers {
            r[subset::size(layer) - 1] += 1;
        }
        FineDegree(r)
    }

    /// `f.x^d`, or `None` when the support is not inside `dom f`.
    pub fn act(&self, f: &LocalBijection) -> Option<Monomial> {
        let mut v = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let j = f.apply(i)?;
            if v.len() <= j {
                v.resize(j + 1, 0);
            }
            v[j] = e;
        }
        Some(Monomial::new(v))
    }

    /// All monomials of total degree `degree` in `n` variables.
    pub fn all_of_degree(n: usize, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; n];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.push(Monomial::new(cur.clone()));
                cur[i] = 0;
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        if n == 0 {
            if degree == 0 {
                out.push(Monomial::one());
            }
            return out;
        }
        rec(0, degree, &mut cur, &mut out);
        out
    }
}

impl ChainDecomposition {
    pub fn reconstruct(&self) -> Monomial {
        self.layers.iter().fold(Monomial::one(), |m, &s| m.mul(&Monomial::of_set(s)))
    }

    /// True when the layers are totally ordered by inclusion.
    pub fn is_multichain(&self) -> bool {
        let mut sorted = self.layers.clone();
        sorted.sort_by_key(|&s| subset::size(s));
        sorted.windows(2).all(|w| subset::is_subset(w[0], w[1]))
    }
}

impl FineDegree {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &r)| (i as u32 + 1) * r).sum()
    }

    pub fn le(&self, bound: &FineDegree) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &r)| r <= bound.0.get(i).copied().unwrap_or(0))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn chain_of_x1_x3_squared() {
        let c = m(&[1, 0, 2]).chain_decompose();
        assert_eq!(c.layers, vec![0b100, 0b101]);
        assert_eq!(m(&[1, 0, 2]).fine_degree(3), FineDegree(vec![1, 1, 0]));
    }

    #[test]
    fn square_free_and_pure_power_chains() {
        assert_eq!(m(&[1, 1, 1]).chain_decompose().layers, vec![0b111]);
        assert_eq!(m(&[1, 1, 1]).fine_degree(3), FineDegree(vec![0, 0, 1]));
        assert_eq!(m(&[3]).chain_decompose().layers, vec![1, 1, 1]);
        assert_eq!(m(&[3]).fine_degree(3), FineDegree(vec![3, 0, 0]));
        assert!(Monomial::one().chain_decompose().layers.is_empty());
    }

    #[test]
    fn act_moves_or_kills() {
        let f = LocalBijection::new([(0, 1)]).unwrap();
        assert_eq!(m(&[3]).act(&f), Some(m(&[0, 3])));
        assert_eq!(m(&[0, 0, 1]).act(&f), None);
        assert_eq!(Monomial::one().act(&LocalBijection::empty()), Some(Monomial::one()));
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(m(&[1, 0, 0]), Monomial::var(0));
        assert_eq!(m(&[0, 0]), Monomial::one());
        assert_eq!(m(&[2, 1]).to_string(), "x1^2*x2");
    }

    #[test]
    fn degree_enumeration_counts() {
        assert_eq!(Monomial::all_of_degree(3, 4).len(), 15);
        assert_eq!(Monomial::all_of_degree(1, 0), vec![Monomial::one()]);
    }
}
