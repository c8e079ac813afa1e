//! Parser for the polynomial grammar used everywhere in the crate:
//!
//! ```text
//! poly     ::= [sign] term (sign term)*
//! term     ::= rational ["*" factors] | factors
//! factors  ::= factor ("*" factor)*
//! factor   ::= var ["^" posint]
//! rational ::= int | int "/" posint
//! ```
//!
//! Whitespace is insignificant; variables must match declared names exactly.
//! `print` followed by `parse` is the identity on canonical form.

use num::{BigInt, BigRational, One};

use super::{Monomial, PolyError, Polynomial, VarSet};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
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

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(PolyError::SyntaxError {
                pos: start,
                msg: "expected a digit".into(),
            });
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse::<BigInt>().map_err(|_| PolyError::SyntaxError {
            pos: start,
            msg: "integer out of range".into(),
        })
    }

    fn identifier(&mut self) -> Option<(usize, String)> {
        self.skip_ws();
        let start = self.pos;
        let first = *self.src.get(self.pos)?;
        if !(first.is_ascii_alphabetic() || first == b'_') {
            return None;
        }
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        Some((
            start,
            std::str::from_utf8(&self.src[start..self.pos]).unwrap().to_string(),
        ))
    }
}

/// Parses `text` into a canonical polynomial over `vars`.
pub fn parse(text: &str, vars: &VarSet) -> Result<Polynomial, PolyError> {
    let mut lx = Lexer::new(text);
    let mut poly = Polynomial::zero(vars);
    let mut first = true;
    loop {
        let sign = match lx.peek() {
            None if first => {
                return Err(PolyError::SyntaxError {
                    pos: lx.pos,
                    msg: "empty input".into(),
                })
            }
            None => break,
            Some(b'+') => {
                lx.bump();
                BigRational::one()
            }
            Some(b'-') => {
                lx.bump();
                -BigRational::one()
            }
            Some(_) if first => BigRational::one(),
            Some(c) => {
                return Err(PolyError::SyntaxError {
                    pos: lx.pos,
                    msg: format!("expected '+' or '-', found '{}'", c as char),
                })
            }
        };
        first = false;
        let (m, c) = parse_term(&mut lx, vars)?;
        poly.add_term(m, sign * c);
        if lx.peek().is_none() {
            break;
        }
    }
    Ok(poly)
}

fn parse_term(lx: &mut Lexer, vars: &VarSet) -> Result<(Monomial, BigRational), PolyError> {
    let mut coef = BigRational::one();
    let mut pairs: Vec<(u32, u32)> = Vec::new();

    // Optional leading rational.
    if let Some(c) = lx.peek() {
        if c.is_ascii_digit() {
            let n = lx.integer()?;
            let den = if lx.peek() == Some(b'/') {
                lx.bump();
                let pos = lx.pos;
                let d = lx.integer()?;
                if d <= BigInt::from(0) {
                    return Err(PolyError::SyntaxError {
                        pos,
                        msg: "denominator must be positive".into(),
                    });
                }
                d
            } else {
                BigInt::one()
            };
            coef = BigRational::new(n, den);
            if lx.peek() == Some(b'*') {
                lx.bump();
            } else {
                return Ok((Monomial::one(), coef));
            }
        }
    }

    // One or more factors separated by '*'.
    loop {
        let pos = lx.pos;
        let Some((id_pos, name)) = lx.identifier() else {
            return Err(PolyError::SyntaxError {
                pos,
                msg: "expected a variable".into(),
            });
        };
        let Some(idx) = vars.index_of(&name) else {
            return Err(PolyError::UnknownVariable { name, pos: id_pos });
        };
        let exp = if lx.peek() == Some(b'^') {
            lx.bump();
            let pos = lx.pos;
            let e = lx.integer()?;
            let e: u32 = e.try_into().map_err(|_| PolyError::SyntaxError {
                pos,
                msg: "exponent too large".into(),
            })?;
            if e == 0 {
                return Err(PolyError::SyntaxError {
                    pos,
                    msg: "exponent must be positive".into(),
                });
            }
            e
        } else {
            1
        };
        pairs.push((idx as u32, exp));
        if lx.peek() == Some(b'*') {
            lx.bump();
        } else {
            break;
        }
    }

    Ok((Monomial::from_pairs(pairs), coef))
}
