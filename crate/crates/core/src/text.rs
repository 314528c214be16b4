//! Canonical text form for polynomials and polynomial matrices.
//!
//! ```text
//! term    := coeff | coeff "*" factors | factors
//! coeff   := integer | integer "/" positive-integer
//! factors := var ("*" var)*
//! var     := ("x" | "y" | "z") index ("^" exponent)?
//! ```
//!
//! Terms are joined by `" + "` or `" - "`; the first term may carry a leading
//! `-`. Rendering lists terms in descending graded-lex order and never emits a
//! `1*` coefficient or a `^1` exponent. A matrix is one bracketed,
//! comma-separated row per line.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::matrix::PolyMatrix;
use crate::poly::{Family, Monomial, Polynomial, Variable};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms().rev().enumerate() {
            let magnitude = c.abs();
            match (n, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

pub fn render_polynomial(p: &Polynomial) -> String {
    p.to_string()
}

pub fn render_poly_matrix(m: &PolyMatrix) -> String {
    let mut out = String::new();
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(Polynomial::to_string).collect();
        out.push('[');
        out.push_str(&row.join(", "));
        out.push_str("]\n");
    }
    out
}

pub fn parse_polynomial(text: &str) -> Result<Polynomial, ParseError> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        offset: 0,
    };
    let p = parser.polynomial()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(p)
}

pub fn parse_poly_matrix(text: &str) -> Result<PolyMatrix, ParseError> {
    let mut rows = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let line_offset = offset;
        offset += line.len();
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let lead = line.len() - line.trim_start().len();
        let at = |rel: usize, message: &str| ParseError {
            position: line_offset + lead + rel,
            message: message.to_string(),
        };
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| at(0, "matrix row must be enclosed in [ ]"))?;
        let mut row = Vec::new();
        let mut cell_offset = 1;
        for cell in inner.split(',') {
            let mut parser = Parser {
                src: cell.as_bytes(),
                pos: 0,
                offset: line_offset + lead + cell_offset,
            };
            let p = parser.polynomial()?;
            parser.skip_ws();
            if parser.pos < parser.src.len() {
                return Err(parser.error("unexpected trailing input in matrix cell"));
            }
            row.push(p);
            cell_offset += cell.len() + 1;
        }
        rows.push(row);
    }
    PolyMatrix::from_rows(rows).map_err(|e| ParseError {
        position: 0,
        message: e.to_string(),
    })
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    offset: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> ParseError {
        ParseError {
            position: self.offset + self.pos,
            message: message.to_string(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t')) {
            self.pos += 1;
        }
    }

    fn polynomial(&mut self) -> Result<Polynomial, ParseError> {
        let mut p = Polynomial::zero();
        self.skip_ws();
        let mut negative = false;
        if self.peek() == Some(b'-') {
            negative = true;
            self.pos += 1;
            self.skip_ws();
        }
        loop {
            let (c, m) = self.term()?;
            p.add_term(if negative { -c } else { c }, m);
            self.skip_ws();
            match self.peek() {
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                _ => return Ok(p),
            }
            self.pos += 1;
            self.skip_ws();
        }
    }

    fn term(&mut self) -> Result<(Rational, Monomial), ParseError> {
        match self.peek() {
            Some(b'0'..=b'9') => {
                let c = self.coefficient()?;
                self.skip_ws();
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    self.skip_ws();
                    Ok((c, self.factors()?))
                } else {
                    Ok((c, Monomial::one()))
                }
            }
            Some(b'x' | b'y' | b'z') => Ok((Rational::one(), self.factors()?)),
            _ => Err(self.error("expected a coefficient or a variable")),
        }
    }

    fn coefficient(&mut self) -> Result<Rational, ParseError> {
        let numer = self.integer()?;
        self.skip_ws();
        if self.peek() != Some(b'/') {
            return Ok(Rational::from_bigints(numer, BigInt::one()).expect("unit denominator"));
        }
        self.pos += 1;
        self.skip_ws();
        let at = self.pos;
        let denom = self.integer()?;
        if denom.is_zero() {
            return Err(ParseError {
                position: self.offset + at,
                message: "zero denominator".into(),
            });
        }
        Ok(Rational::from_bigints(numer, denom).expect("non-zero denominator"))
    }

    fn digits(&mut self) -> Result<&str, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let digits = self.digits()?;
        Ok(digits.parse().expect("validated digits"))
    }

    fn small(&mut self, what: &str) -> Result<u32, ParseError> {
        let at = self.pos;
        let digits = self.digits()?;
        let value: u32 = digits.parse().map_err(|_| ParseError {
            position: self.offset + at,
            message: format!("{what} too large"),
        })?;
        if value == 0 {
            return Err(ParseError {
                position: self.offset + at,
                message: format!("{what} must be at least 1"),
            });
        }
        Ok(value)
    }

    fn factors(&mut self) -> Result<Monomial, ParseError> {
        let mut factors = Vec::new();
        loop {
            let family = self
                .peek()
                .and_then(|b| Family::from_symbol(b as char))
                .ok_or_else(|| self.error("expected variable x, y or z"))?;
            self.pos += 1;
            let index = self.small("variable index")?;
            let mut exp = 1;
            self.skip_ws();
            if self.peek() == Some(b'^') {
                self.pos += 1;
                self.skip_ws();
                exp = self.small("exponent")?;
            }
            factors.push((Variable::new(family, index), exp));
            self.skip_ws();
            // `*` followed by a digit is not valid grammar; only variables follow.
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
            } else {
                return Ok(Monomial::from_factors(factors));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn two_term_round_trip() {
        let p = parse_polynomial("1/2*x1^2 + 3*x1*x2").unwrap();
        let x1 = Variable::x(1);
        let x2 = Variable::x(2);
        let expected = Polynomial::from_terms([
            (q(1, 2), Monomial::power(x1, 2)),
            (q(3, 1), Monomial::from_factors([(x1, 1), (x2, 1)])),
        ]);
        assert_eq!(p, expected);
        assert_eq!(p.to_string(), "1/2*x1^2 + 3*x1*x2");
    }

    #[test]
    fn zero_round_trip() {
        let p = parse_polynomial("0").unwrap();
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn fractional_entry() {
        let p = parse_polynomial("7/2*x1^2").unwrap();
        assert_eq!(p, Polynomial::term(q(7, 2), Monomial::power(Variable::x(1), 2)));
        assert_eq!(p.to_string(), "7/2*x1^2");
    }

    #[test]
    fn signs_and_units() {
        let p = parse_polynomial("-x1 + 1*x2^1 - 5 - 1/3*y2*z1").unwrap();
        assert_eq!(p.to_string(), "-1/3*y2*z1 - x1 + x2 - 5");
        assert_eq!(parse_polynomial(&p.to_string()).unwrap(), p);
        assert_eq!(parse_polynomial("x1 - x1").unwrap().to_string(), "0");
        assert_eq!(parse_polynomial("x2*x1*x1").unwrap().to_string(), "x1^2*x2");
    }

    #[test]
    fn rejects_bad_input() {
        for (bad, pos) in [
            ("x1^0", 3),
            ("x0", 1),
            ("1/0*x1", 2),
            ("3*", 2),
            ("x1 +", 4),
            ("w1", 0),
            ("x1 x2", 3),
            ("x", 1),
            ("2*3", 2),
        ] {
            let err = parse_polynomial(bad).unwrap_err();
            assert_eq!(err.position, pos, "{bad:?}: {err}");
        }
    }

    #[test]
    fn matrix_round_trip() {
        let text = "[x1^2, 3*x1*x2]\n[3/2*x1^2, 0]\n";
        let m = parse_poly_matrix(text).unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 2));
        assert_eq!(render_poly_matrix(&m), text);
        assert!(parse_poly_matrix("[x1, x2]\n[x1]\n").is_err());
        let err = parse_poly_matrix("[x1, x2]\n[x1, x0]\n").unwrap_err();
        assert_eq!(err.position, 15);
    }
}
