//! Generating series written as `P(Z) / ∏ (1 - Z^{n_i})` with integer `P`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groupoid::PermutationGroupoid;
use crate::orbits::count_orbits;
use crate::polynomial::{FineDegree, Monomial, Rational};

/// Default number of extra coefficients used to confirm a fitted numerator.
pub const DEFAULT_MARGIN: usize = 10;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "SeriesJson", into = "SeriesJson")]
pub struct RationalSeries {
    num: Vec<BigInt>,
    den: Vec<u32>,
}

/// Coefficients outside the `i64` range travel as decimal strings.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Coefficient {
    Small(i64),
    Large(String),
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    num: Vec<Coefficient>,
    den: Vec<u32>,
}

impl From<RationalSeries> for SeriesJson {
    fn from(s: RationalSeries) -> Self {
        let num = s
            .num
            .iter()
            .map(|c| c.to_i64().map_or_else(|| Coefficient::Large(c.to_string()), Coefficient::Small))
            .collect();
        Self { num, den: s.den }
    }
}

impl TryFrom<SeriesJson> for RationalSeries {
    type Error = Error;

    fn try_from(j: SeriesJson) -> Result<Self> {
        let num = j
            .num
            .into_iter()
            .map(|c| match c {
                Coefficient::Small(v) => Ok(BigInt::from(v)),
                Coefficient::Large(t) => t.parse().map_err(|_| Error::Invalid(format!("bad coefficient {t:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        RationalSeries::new(num, j.den)
    }
}

impl RationalSeries {
    /// Exponents must be positive; they are stored sorted.
    pub fn new(mut num: Vec<BigInt>, mut den: Vec<u32>) -> Result<Self> {
        if den.contains(&0) {
            return Err(Error::Invalid("denominator exponents must be positive".into()));
        }
        while num.last().is_some_and(Zero::is_zero) {
            num.pop();
        }
        den.sort_unstable();
        Ok(Self { num, den })
    }

    pub fn from_i64(num: &[i64], den: &[u32]) -> Result<Self> {
        Self::new(num.iter().map(|&c| BigInt::from(c)).collect(), den.to_vec())
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.num
    }

    pub fn numerator_i64(&self) -> Vec<i64> {
        self.num.iter().map(|c| c.to_i64().expect("numerator fits in i64")).collect()
    }

    pub fn denominator(&self) -> &[u32] {
        &self.den
    }

    /// Coefficients `0..=n` of the power-series expansion.
    pub fn expand(&self, n: usize) -> Vec<BigInt> {
        let mut a = vec![BigInt::zero(); n + 1];
        for (i, c) in self.num.iter().enumerate().take(n + 1) {
            a[i] = c.clone();
        }
        for &k in &self.den {
            let k = k as usize;
            for i in k..=n {
                let prev = a[i - k].clone();
                a[i] += prev;
            }
        }
        a
    }

    pub fn coefficient(&self, n: usize) -> BigInt {
        self.expand(n).pop().unwrap()
    }

    /// Exact rewrite over `∏ (1 - Z^{m_j})`.
    pub fn rewrite_denominator(&self, new_den: &[u32]) -> Result<RationalSeries> {
        let product = mul(&self.num, &denominator_polynomial(new_den));
        let num = divide_exact(&product, &denominator_polynomial(&self.den))?;
        RationalSeries::new(num, new_den.to_vec())
    }

    pub fn is_numerator_nonnegative(&self) -> bool {
        self.num.iter().all(|c| !c.is_negative())
    }

    /// Fits `values` (coefficients `0..values.len()`) over `den`. The numerator
    /// may have degree at most `values.len() - margin - 1`; the last `margin`
    /// values confirm it.
    pub fn fit(values: &[BigInt], den: &[u32], margin: usize) -> Result<RationalSeries> {
        if values.len() <= margin {
            return Err(Error::Invalid("not enough values for the requested margin".into()));
        }
        let d = denominator_polynomial(den);
        let mut c = mul(values, &d);
        c.truncate(values.len());
        let bound = values.len() - margin;
        if let Some((degree, found)) = c.iter().enumerate().skip(bound).find(|(_, v)| !v.is_zero()) {
            return Err(Error::FitMismatch { degree, found: found.to_string() });
        }
        c.truncate(bound);
        RationalSeries::new(c, den.to_vec())
    }
}

/// Expanded `∏ (1 - Z^{n_i})`.
pub fn denominator_polynomial(den: &[u32]) -> Vec<BigInt> {
    let mut p = vec![BigInt::one()];
    for &k in den {
        let k = k as usize;
        let mut q = vec![BigInt::zero(); p.len() + k];
        for (i, c) in p.iter().enumerate() {
            q[i] += c;
            q[i + k] -= c;
        }
        p = q;
    }
    p
}

fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `a / b` for integer polynomials with `b(0) = ±1`, failing unless exact.
fn divide_exact(a: &[BigInt], b: &[BigInt]) -> Result<Vec<BigInt>> {
    let mut b = b.to_vec();
    while b.last().is_some_and(Zero::is_zero) {
        b.pop();
    }
    let mut rem = a.to_vec();
    while rem.last().is_some_and(Zero::is_zero) {
        rem.pop();
    }
    if rem.is_empty() {
        return Ok(Vec::new());
    }
    if rem.len() < b.len() {
        return Err(Error::InexactDivision);
    }
    let lead = b.last().unwrap().clone();
    let mut q = vec![BigInt::zero(); rem.len() - b.len() + 1];
    for i in (0..q.len()).rev() {
        let top = rem[i + b.len() - 1].clone();
        if top.is_zero() {
            continue;
        }
        let (quot, r) = top.div_rem(&lead);
        if !r.is_zero() {
            return Err(Error::InexactDivision);
        }
        for (j, c) in b.iter().enumerate() {
            rem[i + j] -= &quot * c;
        }
        q[i] = quot;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(Error::InexactDivision);
    }
    Ok(q)
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_polynomial_in_z(&self.num))?;
        if !self.den.is_empty() {
            f.write_str(" / ")?;
            for &k in &self.den {
                if k == 1 {
                    f.write_str("(1-Z)")?;
                } else {
                    write!(f, "(1-Z^{k})")?;
                }
            }
        }
        Ok(())
    }
}

/// `1+Z+2Z^2-Z^6`, increasing degree.
pub fn format_polynomial_in_z(coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let a = c.abs();
        if i == 0 || !a.is_one() {
            out.push_str(&a.to_string());
        }
        match i {
            0 => {}
            1 => out.push('Z'),
            _ => out.push_str(&format!("Z^{i}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Orbit counts `dim K[X]^G_n` for `n = 0..=upto`.
pub fn orbit_dimensions(g: &PermutationGroupoid, upto: usize) -> Vec<BigInt> {
    (0..=upto).map(|n| BigInt::from(count_orbits(g, n as u32))).collect()
}

/// Hilbert series of `K[X]^G` over `den`, with numerator degree at most
/// `deg ∏(1 - Z^{n_i}) + |X|(|X|+1)/2` and `margin` confirming coefficients.
pub fn hilbert_series(g: &PermutationGroupoid, den: &[u32], margin: usize) -> Result<RationalSeries> {
    let n = g.size();
    let bound = den.iter().sum::<u32>() as usize + n * (n + 1) / 2;
    hilbert_series_bounded(g, den, bound, margin)
}

/// As [`hilbert_series`] with an explicit numerator degree bound.
pub fn hilbert_series_bounded(
    g: &PermutationGroupoid,
    den: &[u32],
    numerator_bound: usize,
    margin: usize,
) -> Result<RationalSeries> {
    if den.is_empty() {
        return Err(Error::Invalid("denominator must be nonempty".into()));
    }
    let values = orbit_dimensions(g, numerator_bound + margin);
    RationalSeries::fit(&values, den, margin)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum NonnegativityOutcome {
    Found(RationalSeries),
    /// Every admissible denominator was tried; `exact` of them divided exactly
    /// and all of those left a negative coefficient.
    Exhausted { tried: usize, exact: usize },
}

/// Denominator multisets containing 1, at most `max_factors` factors and
/// exponents at most `max_exp`, by number of factors, then total exponent,
/// then lexicographically.
pub fn candidate_denominators(max_factors: usize, max_exp: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    fn rec(cur: &mut Vec<u32>, left: usize, min: u32, max: u32, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for e in min..=max {
            cur.push(e);
            rec(cur, left - 1, e, max, out);
            cur.pop();
        }
    }
    for k in 1..=max_factors {
        let mut level = Vec::new();
        rec(&mut vec![1], k - 1, 1, max_exp, &mut level);
        level.sort_by_key(|d| (d.iter().sum::<u32>(), d.clone()));
        out.extend(level);
    }
    out
}

pub fn nonnegativity_search(s: &RationalSeries, max_factors: usize, max_exp: u32) -> NonnegativityOutcome {
    let mut tried = 0;
    let mut exact = 0;
    for den in candidate_denominators(max_factors, max_exp) {
        tried += 1;
        if let Ok(r) = s.rewrite_denominator(&den) {
            exact += 1;
            if r.is_numerator_nonnegative() {
                return NonnegativityOutcome::Found(r);
            }
        }
    }
    NonnegativityOutcome::Exhausted { tried, exact }
}

/// `value(n) = polys[n mod period](n)` for `n ≥ threshold`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuasiPolynomial {
    pub period: usize,
    /// Coefficients in increasing powers of `n`, one polynomial per residue.
    pub polys: Vec<Vec<Rational>>,
    pub threshold: usize,
}

impl QuasiPolynomial {
    pub fn evaluate(&self, n: usize) -> Rational {
        let nn = Rational::from_integer(BigInt::from(n));
        self.polys[n % self.period].iter().rev().fold(Rational::zero(), |acc, c| acc * &nn + c)
    }
}

fn format_in_n(p: &[Rational]) -> String {
    let mut out = String::new();
    for (i, c) in p.iter().enumerate().rev().filter(|(_, c)| !c.is_zero()) {
        let magnitude = c.abs();
        let sign = if c.is_negative() { "-" } else { "+" };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        out.push_str(&match (i, magnitude.is_one()) {
            (0, _) => magnitude.to_string(),
            (1, true) => "n".to_string(),
            (1, false) => format!("{magnitude}*n"),
            (_, true) => format!("n^{i}"),
            (_, false) => format!("{magnitude}*n^{i}"),
        });
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for QuasiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.polys.windows(2).all(|w| w[0] == w[1]) {
            return write!(f, "{} (n ≥ {})", format_in_n(&self.polys[0]), self.threshold);
        }
        for (r, p) in self.polys.iter().enumerate() {
            if r > 0 {
                f.write_str("; ")?;
            }
            write!(f, "n≡{r} (mod {}): {}", self.period, format_in_n(p))?;
        }
        write!(f, " (n ≥ {})", self.threshold)
    }
}

/// Interpolates the coefficients on each residue class modulo the lcm of the
/// denominator exponents with a polynomial of degree `< #factors`, then checks
/// the fit on 50 further values.
pub fn quasi_polynomial(s: &RationalSeries) -> Result<QuasiPolynomial> {
    let period = s.den.iter().fold(1usize, |acc, &k| acc.lcm(&(k as usize)));
    let k = s.den.len().max(1);
    let deg_den: usize = s.den.iter().map(|&x| x as usize).sum();
    let threshold = (s.num.len()).saturating_sub(deg_den);
    let last = threshold + period * (k + 50);
    let values = s.expand(last);
    let mut polys = Vec::with_capacity(period);
    for r in 0..period {
        let start = threshold + (r + period - threshold % period) % period;
        let points: Vec<(Rational, Rational)> = (0..k)
            .map(|j| {
                let n = start + j * period;
                (Rational::from_integer(BigInt::from(n)), Rational::from_integer(values[n].clone()))
            })
            .collect();
        polys.push(interpolate(&points));
    }
    let q = QuasiPolynomial { period, polys, threshold };
    for n in threshold..=last {
        if q.evaluate(n) != Rational::from_integer(values[n].clone()) {
            return Err(Error::FitMismatch { degree: n, found: values[n].to_string() });
        }
    }
    Ok(q)
}

/// Lagrange interpolation, coefficients in increasing degree.
fn interpolate(points: &[(Rational, Rational)]) -> Vec<Rational> {
    let k = points.len();
    let mut out = vec![Rational::zero(); k];
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = vec![Rational::one()];
        let mut scale = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![Rational::zero(); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * xj;
            }
            basis = next;
            scale *= xi - xj;
        }
        let factor = yi / scale;
        for (d, c) in basis.iter().enumerate() {
            out[d] += c * &factor;
        }
    }
    out
}

/// Orbit counts per fine degree, for fine degrees componentwise below `bound`.
pub fn fine_hilbert_table(g: &PermutationGroupoid, bound: &FineDegree) -> BTreeMap<FineDegree, usize> {
    let n = g.size();
    let mut table = BTreeMap::new();
    for d in 0..=bound.total_degree() {
        for m in Monomial::all_of_degree(n, d) {
            let fd = m.fine_degree(n);
            if !fd.le(bound) {
                continue;
            }
            let minimal = g.with_domain(m.support()).filter_map(|f| m.act(f)).all(|image| image >= m);
            let entry = table.entry(fd).or_insert(0);
            if minimal {
                *entry += 1;
            }
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::LocalBijection;
    use crate::polynomial::{ratio, rational};

    fn noncm() -> PermutationGroupoid {
        PermutationGroupoid::close(3, &[LocalBijection::new([(0, 1)]).unwrap()]).unwrap()
    }

    fn series(num: &[i64], den: &[u32]) -> RationalSeries {
        RationalSeries::from_i64(num, den).unwrap()
    }

    #[test]
    fn noncm_hilbert_series() {
        let s = hilbert_series(&noncm(), &[1, 2, 3], DEFAULT_MARGIN).unwrap();
        assert_eq!(s.numerator_i64(), [1, 1, 2, 2, 1, 0, -1]);
        assert_eq!(s.to_string(), "1+Z+2Z^2+2Z^3+Z^4-Z^6 / (1-Z)(1-Z^2)(1-Z^3)");
        let cubic = s.rewrite_denominator(&[1, 1, 1]).unwrap();
        assert_eq!(cubic.numerator_i64(), [1, -1, 2, -1]);
        for n in 1..=20usize {
            assert_eq!(s.coefficient(n), BigInt::from((n + 2) * (n + 1) / 2 - 1));
        }
    }

    #[test]
    fn small_hilbert_series() {
        let s2 = PermutationGroupoid::symmetric(2).unwrap();
        assert_eq!(hilbert_series(&s2, &[1, 2], 10).unwrap().numerator_i64(), [1]);
        let q = PermutationGroupoid::increasing(2).unwrap();
        assert_eq!(hilbert_series(&q, &[1, 2], 10).unwrap().numerator_i64(), [1, 0, 0, 1]);
        let q3 = PermutationGroupoid::increasing(3).unwrap();
        let s = hilbert_series_bounded(&q3, &[1, 2, 3], 6, 10).unwrap();
        assert_eq!(s.numerator_i64(), [1, 0, 0, 1, 2, 2]);
    }

    #[test]
    fn insufficient_denominator_is_reported() {
        assert!(matches!(hilbert_series(&noncm(), &[1], 10), Err(Error::FitMismatch { .. })));
        assert!(hilbert_series(&noncm(), &[], 10).is_err());
    }

    #[test]
    fn coefficients_and_rewrites() {
        let s = series(&[1], &[1, 2]);
        assert_eq!(s.coefficient(4), BigInt::from(3));
        let wheel = series(&[1, -1, 1], &[1, 1]);
        assert_eq!(wheel.rewrite_denominator(&[1, 2]).unwrap().numerator_i64(), [1, 0, 0, 1]);
        assert!(matches!(wheel.rewrite_denominator(&[1]), Err(Error::InexactDivision)));
        assert!(matches!(wheel.rewrite_denominator(&[2]), Err(Error::InexactDivision)));
        let rewritten = wheel.rewrite_denominator(&[1, 4, 6]).unwrap();
        assert_eq!(rewritten.expand(50), wheel.expand(50));
    }

    #[test]
    fn negative_example_keeps_a_negative_top_coefficient() {
        // profile 1, 1, 1, then floor(n/2) + 1
        let values: Vec<BigInt> =
            (0..40usize).map(|n| BigInt::from(if n <= 2 { 1 } else { n / 2 + 1 })).collect();
        let s = RationalSeries::fit(&values, &[1, 2], 10).unwrap();
        for k in (2..=20).step_by(2) {
            let r = s.rewrite_denominator(&[1, k]).unwrap();
            assert_eq!(r.numerator().last().unwrap(), &BigInt::from(-1), "k = {k}");
        }
    }

    #[test]
    fn nonnegativity() {
        let wheel = series(&[1, -1, 1], &[1, 1]);
        match nonnegativity_search(&wheel, 3, 8) {
            NonnegativityOutcome::Found(r) => {
                assert_eq!(r.denominator(), [1, 2]);
                assert_eq!(r.numerator_i64(), [1, 0, 0, 1]);
            }
            other => panic!("{other:?}"),
        }
        let s = hilbert_series(&noncm(), &[1, 2, 3], 10).unwrap();
        assert!(matches!(nonnegativity_search(&s, 3, 8), NonnegativityOutcome::Exhausted { .. }));
        assert!(matches!(nonnegativity_search(&series(&[1], &[1]), 1, 1), NonnegativityOutcome::Found(_)));
    }

    #[test]
    fn candidate_order() {
        let c = candidate_denominators(2, 3);
        assert_eq!(c, vec![vec![1], vec![1, 1], vec![1, 2], vec![1, 3]]);
    }

    #[test]
    fn quasi_polynomials() {
        let q = quasi_polynomial(&series(&[1], &[1, 2])).unwrap();
        assert_eq!(q.period, 2);
        assert_eq!(q.polys[0], vec![rational(1), ratio(1, 2)]);
        assert_eq!(q.polys[1], vec![ratio(1, 2), ratio(1, 2)]);
        let q = quasi_polynomial(&series(&[1], &[1, 1, 1])).unwrap();
        assert_eq!(q.period, 1);
        assert_eq!(q.evaluate(5), rational(21));
        let q = quasi_polynomial(&series(&[1], &[1])).unwrap();
        assert_eq!(q.polys, vec![vec![rational(1)]]);
        let s = hilbert_series(&noncm(), &[1, 2, 3], 10).unwrap();
        let q = quasi_polynomial(&s).unwrap();
        for n in q.threshold..q.threshold + 50 {
            assert_eq!(q.evaluate(n), Rational::from_integer(s.coefficient(n)));
        }
    }

    #[test]
    fn fine_tables() {
        let s2 = PermutationGroupoid::symmetric(2).unwrap();
        let t = fine_hilbert_table(&s2, &FineDegree(vec![3, 3]));
        assert!(t.values().all(|&v| v == 1));
        assert_eq!(t.len(), 16);
        let q = PermutationGroupoid::increasing(2).unwrap();
        let t = fine_hilbert_table(&q, &FineDegree(vec![2, 2]));
        assert_eq!(t[&FineDegree(vec![1, 0])], 1);
        assert_eq!(t[&FineDegree(vec![2, 0])], 1);
        assert_eq!(t[&FineDegree(vec![0, 0])], 1);
        let g = noncm();
        let t = fine_hilbert_table(&g, &FineDegree(vec![4, 4, 4]));
        for d in 0..=4u32 {
            let total: usize = t.iter().filter(|(k, _)| k.total_degree() == d).map(|(_, v)| v).sum();
            assert_eq!(total, count_orbits(&g, d));
        }
    }

    #[test]
    fn json_round_trip() {
        let s = series(&[1, 1, 2, 2, 1, 0, -1], &[3, 1, 2]);
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"num":[1,1,2,2,1,0,-1],"den":[1,2,3]}"#);
        assert_eq!(serde_json::from_str::<RationalSeries>(&text).unwrap(), s);
    }
}
