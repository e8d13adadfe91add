use std::cmp::Ordering;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Monomial;
use crate::error::Error;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    Degrevlex,
    /// Compare shapes by degree reverse lexicographic order, break ties by lex.
    Shape,
}

impl FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "lex" => Ok(Self::Lex),
            "degrevlex" => Ok(Self::Degrevlex),
            "shape" | "shape-lex" => Ok(Self::Shape),
            other => Err(Error::Invalid(format!("unknown term order {other:?}"))),
        }
    }
}

/// An admissible term order together with a ranking of the variables.
///
/// `ranking[0]` is the largest variable. Variables missing from the ranking
/// come after it in index order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TermOrder {
    pub kind: OrderKind,
    ranking: Vec<usize>,
}

impl TermOrder {
    pub fn new(kind: OrderKind) -> Self {
        Self { kind, ranking: Vec::new() }
    }

    pub fn lex() -> Self {
        Self::new(OrderKind::Lex)
    }

    pub fn degrevlex() -> Self {
        Self::new(OrderKind::Degrevlex)
    }

    pub fn shape() -> Self {
        Self::new(OrderKind::Shape)
    }

    pub fn with_ranking(mut self, ranking: Vec<usize>) -> Self {
        self.ranking = ranking;
        self
    }

    fn ranked_exponents(&self, m: &Monomial, n: usize) -> Vec<u32> {
        let mut out: Vec<u32> = self.ranking.iter().map(|&i| m.exponent(i)).collect();
        for i in 0..n {
            if !self.ranking.contains(&i) {
                out.push(m.exponent(i));
            }
        }
        out
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = a.num_vars().max(b.num_vars()).max(self.ranking.len());
        let ea = self.ranked_exponents(a, n);
        let eb = self.ranked_exponents(b, n);
        match self.kind {
            OrderKind::Lex => ea.cmp(&eb),
            OrderKind::Degrevlex => degrevlex(&ea, &eb),
            OrderKind::Shape => {
                let (mut sa, mut sb) = (a.shape(), b.shape());
                let len = sa.len().max(sb.len());
                sa.resize(len, 0);
                sb.resize(len, 0);
                degrevlex(&sa, &sb).then_with(|| ea.cmp(&eb))
            }
        }
    }

    /// Largest monomial of a nonempty collection.
    pub fn max<'a, I: IntoIterator<Item = &'a Monomial>>(&self, ms: I) -> Option<&'a Monomial> {
        ms.into_iter().max_by(|a, b| self.cmp(a, b))
    }

    pub fn sort_descending(&self, ms: &mut [Monomial]) {
        ms.sort_by(|a, b| self.cmp(b, a));
    }
}

impl Default for TermOrder {
    fn default() -> Self {
        Self::shape()
    }
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                // the smaller exponent on the last differing variable wins
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lex_compares_first_variable_first() {
        let o = TermOrder::lex();
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[3]), &m(&[0, 3])), Ordering::Greater);
        let reversed = TermOrder::lex().with_ranking(vec![1, 0]);
        assert_eq!(reversed.cmp(&m(&[3]), &m(&[0, 3])), Ordering::Less);
    }

    #[test]
    fn degrevlex_orders_degree_then_reverse() {
        let o = TermOrder::degrevlex();
        assert_eq!(o.cmp(&m(&[0, 0, 2]), &m(&[1])), Ordering::Greater);
        // x1 x3 vs x2^2: last variable exponent 1 vs 0, so x2^2 is greater
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2])), Ordering::Less);
    }

    #[test]
    fn shape_order_on_degree_three() {
        let o = TermOrder::shape();
        // shapes (3) > (2,1) > (1,1,1)
        assert_eq!(o.cmp(&m(&[0, 0, 3]), &m(&[2, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 1]), &m(&[1, 1, 1])), Ordering::Greater);
        // equal shapes break ties by lex
        assert_eq!(o.cmp(&m(&[2, 1]), &m(&[0, 2, 1])), Ordering::Greater);
        assert_eq!(o.max([m(&[3]), m(&[0, 3])].iter()), Some(&m(&[3])));
    }
}
