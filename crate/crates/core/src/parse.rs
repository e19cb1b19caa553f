//! Text grammar for polynomials.
//!
//! ```text
//! poly  := term (('+'|'-') term)*
//! term  := coeff ('*' power)* | power ('*' power)*
//! power := var ('^' nat)?
//! var   := 'x' nat            (1-based)
//! coeff := integer | integer '/' integer
//! ```
//!
//! Whitespace is ignored between tokens and a single leading sign is
//! accepted so that `Display` output of a [`Poly`] always parses back.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::Rational;
use crate::polyring::{Monomial, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
    nvars: usize,
}

impl Cursor {
    fn new(src: &str, nvars: usize) -> Self {
        Cursor {
            chars: src.chars().collect(),
            pos: 0,
            nvars,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn error_at(&self, pos: usize, message: impl Into<String>) -> ParseError {
        let mut line = 1;
        let mut column = 1;
        for &c in &self.chars[..pos.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        self.error_at(self.pos, message)
    }

    fn nat(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn small_nat(&mut self, what: &str) -> Result<u32, ParseError> {
        let start = self.pos;
        let n = self.nat()?;
        u32::try_from(n).map_err(|_| self.error_at(start, format!("{what} is too large")))
    }

    fn coeff(&mut self) -> Result<Rational, ParseError> {
        let num = self.nat()?;
        if self.peek() == Some('/') {
            self.pos += 1;
            let start = self.pos;
            let den = self.nat()?;
            if den.is_zero() {
                return Err(self.error_at(start, "zero denominator"));
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::from_integer(num))
    }

    fn power(&mut self) -> Result<Monomial, ParseError> {
        match self.peek() {
            Some('x') => self.pos += 1,
            _ => return Err(self.error("expected a variable like x1")),
        }
        let idx_pos = self.pos;
        let idx = self.small_nat("variable index")? as usize;
        if idx == 0 || idx > self.nvars {
            return Err(self.error_at(
                idx_pos,
                format!("variable x{idx} out of range 1..={}", self.nvars),
            ));
        }
        let mut exp = 1;
        if self.peek() == Some('^') {
            self.pos += 1;
            exp = self.small_nat("exponent")?;
        }
        let mut e = vec![0; self.nvars];
        e[idx - 1] = exp;
        Ok(Monomial(e))
    }

    fn term(&mut self) -> Result<(Monomial, Rational), ParseError> {
        let mut coeff = Rational::one();
        let mut mono = Monomial::one(self.nvars);
        match self.peek() {
            Some(c) if c.is_ascii_digit() => coeff = self.coeff()?,
            Some('x') => mono = self.power()?,
            Some(c) => return Err(self.error(format!("unexpected '{c}'"))),
            None => return Err(self.error("unexpected end of input")),
        }
        while self.peek() == Some('*') {
            self.pos += 1;
            mono = mono.mul(&self.power()?);
        }
        Ok((mono, coeff))
    }

    fn poly(&mut self) -> Result<Poly, ParseError> {
        let mut p = Poly::zero(self.nvars);
        let mut sign = Rational::one();
        if self.peek() == Some('-') {
            self.pos += 1;
            sign = -sign;
        } else if self.peek() == Some('+') {
            self.pos += 1;
        }
        loop {
            let (m, c) = self.term()?;
            p.add_term(m, c * &sign);
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    sign = Rational::one();
                }
                Some('-') => {
                    self.pos += 1;
                    sign = -Rational::one();
                }
                None => return Ok(p),
                Some(c) => return Err(self.error(format!("unexpected '{c}'"))),
            }
        }
    }
}

/// Parses a polynomial in `nvars` variables.
pub fn parse_poly(text: &str, nvars: usize) -> Result<Poly, ParseError> {
    Cursor::new(text, nvars).poly()
}

/// Largest variable index used in `text`, without validating the rest of
/// the grammar. Handy for checking a weights list against a polynomial.
pub fn max_variable_index(text: &str) -> usize {
    let chars: Vec<char> = text.chars().collect();
    let mut best = 0;
    let mut i = 0;
    while i < chars.len() {
        if chars[i] == 'x' {
            let mut j = i + 1;
            let mut n = 0usize;
            while j < chars.len() && chars[j].is_ascii_digit() {
                n = n.saturating_mul(10).saturating_add(chars[j] as usize - '0' as usize);
                j += 1;
            }
            best = best.max(n);
            i = j;
        } else {
            i += 1;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{q, ratio};

    #[test]
    fn parses_example() {
        let p = parse_poly("x1^2 + x2^2 + x3^3", 3).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.coefficient(&Monomial(vec![0, 0, 3])), q(1));
    }

    #[test]
    fn coefficients_and_products() {
        let p = parse_poly("3/4*x1*x2^2 - 2 + x1*x1", 2).unwrap();
        assert_eq!(p.coefficient(&Monomial(vec![1, 2])), ratio(3, 4));
        assert_eq!(p.coefficient(&Monomial(vec![0, 0])), q(-2));
        assert_eq!(p.coefficient(&Monomial(vec![2, 0])), q(1));
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = parse_poly("x1 - x1", 1).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn reports_position() {
        let err = parse_poly("x1^2 + * x2", 2).unwrap_err();
        assert_eq!((err.line, err.column), (1, 8));
        let err = parse_poly("x1 +\n x3", 2).unwrap_err();
        assert_eq!((err.line, err.column), (2, 3));
        assert!(err.message.contains("out of range"));
        let err = parse_poly("1/0", 1).unwrap_err();
        assert_eq!(err.column, 3);
        let err = parse_poly("x1 +", 1).unwrap_err();
        assert!(err.message.contains("end of input"));
    }

    #[test]
    fn max_index() {
        assert_eq!(max_variable_index("x1^2 + x12*x3"), 12);
        assert_eq!(max_variable_index("7"), 0);
    }
}
