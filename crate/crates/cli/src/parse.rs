//! Expression parser for `x[i,j]`-style polynomials with `ℚ(q)` coefficients.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | atom ('^' '-'? int)?
//! atom   := int | 'q' | ident | ident '[' int ',' int ']' | '(' expr ')'
//! ```
//! Whitespace is ignored. Division and negative powers need a scalar unit.

use num_bigint::BigInt;
use qgrass_core::coeffs::{Laurent, LocScalar, Q};
use qgrass_core::ncalg::{Gen, NCPoly};
use thiserror::Error;

type Poly = NCPoly<LocScalar>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at column {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let (pos, c) = chars[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].1.is_ascii_digit() {
                k += 1;
            }
            let s: String = chars[start..k].iter().map(|&(_, c)| c).collect();
            out.push((pos, Tok::Int(s.parse().expect("digits"))));
        } else if c.is_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].1.is_alphanumeric() || chars[k].1 == '_') {
                k += 1;
            }
            out.push((
                pos,
                Tok::Ident(chars[start..k].iter().map(|&(_, c)| c).collect()),
            ));
        } else if "+-*/^()[],".contains(c) {
            out.push((pos, Tok::Sym(c)));
            k += 1;
        } else {
            return Err(ParseError::SyntaxError {
                pos: pos + 1,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    labels: &'a [String],
}

impl Parser<'_> {
    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0) + 1
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::SyntaxError {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn peek_sym(&self, c: char) -> bool {
        matches!(self.toks.get(self.at), Some((_, Tok::Sym(s))) if *s == c)
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek_sym(c) {
            self.at += 1;
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn int(&mut self) -> Result<BigInt, ParseError> {
        match self.toks.get(self.at) {
            Some((_, Tok::Int(v))) => {
                let v = v.clone();
                self.at += 1;
                Ok(v)
            }
            _ => self.err("expected an integer"),
        }
    }

    fn small_int(&mut self) -> Result<i64, ParseError> {
        let v = self.int()?;
        match i64::try_from(&v) {
            Ok(v) if v <= i32::MAX as i64 => Ok(v),
            _ => self.err("integer too large"),
        }
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.peek_sym('+') {
                self.at += 1;
                acc = acc.plus(&self.term()?);
            } else if self.peek_sym('-') {
                self.at += 1;
                acc = acc.minus(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            if self.peek_sym('*') {
                self.at += 1;
                acc = acc.free_mul(&self.factor()?);
            } else if self.peek_sym('/') {
                self.at += 1;
                let pos = self.pos();
                let d = self.factor()?;
                let inv = scalar_inverse(&d).ok_or(ParseError::SyntaxError {
                    pos,
                    msg: "divisor is not a scalar unit".into(),
                })?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Poly, ParseError> {
        if self.peek_sym('-') {
            self.at += 1;
            return Ok(self.factor()?.negated());
        }
        let base = self.atom()?;
        if !self.peek_sym('^') {
            return Ok(base);
        }
        self.at += 1;
        let neg = self.peek_sym('-');
        if neg {
            self.at += 1;
        }
        let pos = self.pos();
        let k = self.small_int()? as u32;
        let base = if neg {
            NCPoly::constant(scalar_inverse(&base).ok_or(ParseError::SyntaxError {
                pos,
                msg: "negative power of a non-unit".into(),
            })?)
        } else {
            base
        };
        Ok((0..k).fold(NCPoly::one(), |acc, _| acc.free_mul(&base)))
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        let Some((pos, tok)) = self.toks.get(self.at).cloned() else {
            return self.err("unexpected end of input");
        };
        match tok {
            Tok::Int(v) => {
                self.at += 1;
                Ok(NCPoly::constant(LocScalar::from_rational(Q::from_integer(
                    v,
                ))))
            }
            Tok::Sym('(') => {
                self.at += 1;
                let e = self.expr()?;
                self.expect_sym(')')?;
                Ok(e)
            }
            Tok::Ident(name) => {
                self.at += 1;
                if self.peek_sym('[') {
                    self.at += 1;
                    let i = self.small_int()?;
                    self.expect_sym(',')?;
                    let j = self.small_int()?;
                    self.expect_sym(']')?;
                    return self.generator(&format!("{name}[{i},{j}]"));
                }
                if name == "q" {
                    return Ok(NCPoly::constant(LocScalar::from_laurent(Laurent::q())));
                }
                if self
                    .labels
                    .iter()
                    .any(|l| l.starts_with(&format!("{name}[")))
                {
                    return Err(ParseError::SyntaxError {
                        pos: pos + 1,
                        msg: format!("`{name}` needs indices"),
                    });
                }
                self.generator(&name)
            }
            Tok::Sym(c) => self.err(format!("unexpected `{c}`")),
        }
    }

    fn generator(&self, label: &str) -> Result<Poly, ParseError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|g| NCPoly::generator(g as Gen))
            .ok_or_else(|| ParseError::UnknownGenerator(label.to_string()))
    }
}

fn scalar_inverse(p: &Poly) -> Option<LocScalar> {
    if p.terms().any(|(w, _)| !w.is_empty()) {
        return None;
    }
    p.constant_term().inverse().ok()
}

/// Parses into the free algebra on `labels`; no normal form is taken.
pub fn parse_expression(src: &str, labels: &[String]) -> Result<Poly, ParseError> {
    let mut p = Parser {
        toks: tokenize(src)?,
        at: 0,
        end: src.len(),
        labels,
    };
    let e = p.expr()?;
    if p.at < p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Comma-separated index list such as `1,3`.
pub fn parse_indices(src: &str) -> Result<Vec<usize>, ParseError> {
    src.split(',')
        .enumerate()
        .map(|(k, s)| {
            s.trim().parse().map_err(|_| ParseError::SyntaxError {
                pos: k + 1,
                msg: format!("bad index `{}`", s.trim()),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use qgrass_core::coeffs::QConv;
    use qgrass_core::hopf::QuantumMatrix;
    use qgrass_core::ncalg::Word;

    fn labels(n: usize) -> Vec<String> {
        QuantumMatrix::new(n, QConv::Standard)
            .unwrap()
            .pres()
            .labels()
            .to_vec()
    }

    #[test]
    fn word_with_unit_coefficient() {
        let l = labels(2);
        let p = parse_expression("x[1,2]*x[1,1]", &l).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.coeff(&Word::from_slice(&[1, 0])), LocScalar::one());
    }

    #[test]
    fn laurent_coefficient() {
        let l = labels(2);
        let p = parse_expression("(q - q^-1)*x[2,1]*x[1,2]", &l).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(
            p.coeff(&Word::from_slice(&[2, 1])),
            LocScalar::from_laurent(Laurent::q_minus_q_inv())
        );
    }

    #[test]
    fn errors() {
        let l = labels(2);
        assert_eq!(
            parse_expression("x[9,9]", &l),
            Err(ParseError::UnknownGenerator("x[9,9]".into()))
        );
        assert!(matches!(
            parse_expression("x[1,1] * * x[1,2]", &l),
            Err(ParseError::SyntaxError { pos: 10, .. })
        ));
        assert!(matches!(
            parse_expression("x[1,1] / x[1,2]", &l),
            Err(ParseError::SyntaxError { .. })
        ));
    }

    #[test]
    fn localized_scalars() {
        let l = labels(2);
        let p = parse_expression("(q^2 - 1)/(q-1)^1", &l).unwrap();
        assert_eq!(p.constant_term().to_string(), "q + 1");
        let p = parse_expression("1/(q-1)^2 * x[1,1]", &l).unwrap();
        assert_eq!(p.terms().next().unwrap().1.valuation(), Some(-2));
    }
}
