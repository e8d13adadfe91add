//! Text format: `3/2*x1^2*x2 - x3`. Variables are `x1, x2, …` (1-based),
//! coefficients are integers or `a/b`. Terms print in descending degrevlex.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, Polynomial, Rational, TermOrder};
use crate::error::{Error, Result};

pub fn print(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.sorted_terms(&TermOrder::degrevlex()).into_iter().enumerate() {
        let negative = c.is_negative();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let abs = c.abs();
        if m.is_one() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&m.to_string());
        } else {
            out.push_str(&format!("{abs}*{m}"));
        }
    }
    out
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { position: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    fn coefficient(&mut self) -> Result<Rational> {
        let num = self.number()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den = self.number()?;
            if den.is_zero() {
                return self.err("zero denominator");
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::from_integer(num))
    }

    fn variable(&mut self) -> Result<Monomial> {
        self.pos += 1; // 'x'
        let index = self.number()?;
        let index: usize = match usize::try_from(index) {
            Ok(i) if (1..=32).contains(&i) => i,
            _ => return self.err("variable index must be in 1..=32"),
        };
        let mut e = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            e = match u32::try_from(self.number()?) {
                Ok(e) => e,
                Err(_) => return self.err("exponent too large"),
            };
        }
        Ok(Monomial::var_pow(index - 1, e))
    }

    fn term(&mut self) -> Result<(Monomial, Rational)> {
        let mut coeff = Rational::one();
        let mut mono = Monomial::one();
        loop {
            match self.peek() {
                Some(b'0'..=b'9') => coeff *= self.coefficient()?,
                Some(b'x') => mono = mono.mul(&self.variable()?),
                _ => return self.err("expected a coefficient or a variable"),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
                continue;
            }
            break;
        }
        Ok((mono, coeff))
    }
}

pub fn parse(s: &str) -> Result<Polynomial> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let mut out = Polynomial::zero();
    let mut first = true;
    loop {
        let mut sign = Rational::one();
        match p.peek() {
            None if !first => break,
            None => return p.err("empty polynomial"),
            Some(b'-') => {
                p.pos += 1;
                sign = -sign;
            }
            Some(b'+') if !first => p.pos += 1,
            Some(_) if first => {}
            Some(_) => return p.err("expected '+' or '-'"),
        }
        let (m, c) = p.term()?;
        out.add_term(m, c * sign);
        first = false;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::ratio;
    use proptest::prelude::*;

    #[test]
    fn parses_the_documented_example() {
        let p = parse("3/2*x1^2*x2 - x3").unwrap();
        assert_eq!(p.coeff(&Monomial::new(vec![2, 1])), ratio(3, 2));
        assert_eq!(p.coeff(&Monomial::var(2)), ratio(-1, 1));
        assert_eq!(print(&p), "3/2*x1^2*x2 - x3");
    }

    #[test]
    fn prints_constants_and_zero() {
        assert_eq!(print(&Polynomial::zero()), "0");
        assert_eq!(print(&parse("-7/3").unwrap()), "-7/3");
        assert_eq!(print(&parse("x1 - x1").unwrap()), "0");
        assert_eq!(print(&parse("2 + x2 + x1").unwrap()), "x1 + x2 + 2");
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(parse("x1 + * x2"), Err(Error::Parse { position: 5, .. })));
        assert!(parse("").is_err());
        assert!(parse("x0").is_err());
        assert!(parse("1/0").is_err());
        assert!(parse("x1 x2").is_err());
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(
            (prop::collection::vec(0u32..4, 0..4), -20i64..20, 1i64..6),
            0..6,
        )
        .prop_map(|terms| {
            let mut p = Polynomial::zero();
            for (e, n, d) in terms {
                p.add_term(Monomial::new(e), ratio(n, d));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(p in arb_poly()) {
            let s = print(&p);
            let q = parse(&s).unwrap();
            prop_assert_eq!(&q, &p);
            prop_assert_eq!(print(&q), s);
        }
    }
}
