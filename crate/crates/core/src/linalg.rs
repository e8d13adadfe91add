//! Exact incremental row reduction with polynomials as sparse vectors over
//! the monomial basis.

use num_traits::{One, Zero};

use crate::polynomial::{Monomial, Polynomial, Rational};

/// A reduced row echelon basis of a subspace of `K[X]`. Every row has
/// coefficient 1 on its pivot and 0 on every other pivot.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<(Monomial, Polynomial)>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &Monomial> {
        self.rows.iter().map(|(m, _)| m)
    }

    /// Remainder of `p` modulo the span. Zero exactly when `p` is in the span.
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        let mut r = p.clone();
        for (pivot, row) in &self.rows {
            let c = r.coeff(pivot);
            if !c.is_zero() {
                r = &r - &row.scale(&c);
            }
        }
        r
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.reduce(p).is_zero()
    }

    /// Adds `p` to the span; returns false when it was already there.
    /// The pivot is the largest remaining monomial in the internal key order,
    /// so the result does not depend on anything but the insertion sequence.
    pub fn insert(&mut self, p: &Polynomial) -> bool {
        let r = self.reduce(p);
        let Some(pivot) = r.monomials().last().cloned() else {
            return false;
        };
        let inv = Rational::one() / r.coeff(&pivot);
        let row = r.scale(&inv);
        for (_, other) in &mut self.rows {
            let c = other.coeff(&pivot);
            if !c.is_zero() {
                *other = &*other - &row.scale(&c);
            }
        }
        self.rows.push((pivot, row));
        true
    }
}

/// Rank of a family of polynomials.
pub fn rank<'a, I: IntoIterator<Item = &'a Polynomial>>(family: I) -> usize {
    let mut e = Echelon::new();
    for p in family {
        e.insert(p);
    }
    e.rank()
}

/// Determinant of a square rational matrix by Gaussian elimination.
pub fn determinant(matrix: &[Vec<Rational>]) -> Rational {
    let n = matrix.len();
    let mut a: Vec<Vec<Rational>> = matrix.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        det *= a[col][col].clone();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &a[col][col];
            for c in col..n {
                let v = &a[col][c] * &f;
                a[r][c] -= v;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::rational;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s).unwrap()
    }

    #[test]
    fn detects_dependencies() {
        let mut e = Echelon::new();
        assert!(e.insert(&p("x1 + x2")));
        assert!(e.insert(&p("x1 - x2")));
        assert!(!e.insert(&p("x1")));
        assert!(e.contains(&p("3*x2")));
        assert!(!e.contains(&p("x3")));
        assert!(!e.insert(&Polynomial::zero()));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn determinants() {
        let m = vec![vec![rational(1), rational(1)], vec![rational(0), rational(1)]];
        assert_eq!(determinant(&m), rational(1));
        let m = vec![vec![rational(1), rational(1)], vec![rational(1), rational(0)]];
        assert_eq!(determinant(&m), rational(-1));
        let m = vec![vec![rational(2), rational(4)], vec![rational(1), rational(2)]];
        assert_eq!(determinant(&m), rational(0));
        assert_eq!(determinant(&[]), rational(1));
    }
}
