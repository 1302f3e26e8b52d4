//! The exact text grammar for classes and product classes.
//!
//! Class: `term (" + " term)*` with `term := coeff "*" "s" partition | "s" partition`,
//! `coeff` a signed decimal integer and `partition := [a,b,...]`.
//! Example: `2*s[3,1] + s[2,2]`. Product classes use `|` to separate slots:
//! `2*(s[2,1]|s[1])`. `0` denotes the zero class. Printing normalizes: terms
//! in lexicographically decreasing key order, unit coefficients dropped.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Error;
use crate::kunneth::{ProductClass, ProductSpec};
use crate::partitions::{GrassmannianSpec, Partition};
use crate::schubert::CohomologyClass;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Star,
    Plus,
    Pipe,
    LParen,
    RParen,
    S,
    LBracket,
    RBracket,
    Comma,
}

struct Lexer {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Lexer {
    fn new(text: &str) -> Result<Self, Error> {
        let bytes = text.as_bytes();
        let mut tokens = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let b = bytes[i];
            match b {
                b' ' | b'\t' | b'\n' | b'\r' => i += 1,
                b'*' => {
                    tokens.push((i, Token::Star));
                    i += 1;
                }
                b'+' => {
                    tokens.push((i, Token::Plus));
                    i += 1;
                }
                b'|' => {
                    tokens.push((i, Token::Pipe));
                    i += 1;
                }
                b'(' => {
                    tokens.push((i, Token::LParen));
                    i += 1;
                }
                b')' => {
                    tokens.push((i, Token::RParen));
                    i += 1;
                }
                b's' => {
                    tokens.push((i, Token::S));
                    i += 1;
                }
                b'[' => {
                    tokens.push((i, Token::LBracket));
                    i += 1;
                }
                b']' => {
                    tokens.push((i, Token::RBracket));
                    i += 1;
                }
                b',' => {
                    tokens.push((i, Token::Comma));
                    i += 1;
                }
                b'-' | b'0'..=b'9' => {
                    let start = i;
                    i += 1;
                    if b == b'-' && (i >= bytes.len() || !bytes[i].is_ascii_digit()) {
                        return Err(Error::Syntax {
                            pos: start,
                            msg: "'-' must prefix a decimal integer".into(),
                        });
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let value: BigInt = text[start..i].parse().map_err(|_| Error::Syntax {
                        pos: start,
                        msg: "bad integer".into(),
                    })?;
                    tokens.push((start, Token::Int(value)));
                }
                _ => {
                    return Err(Error::Syntax {
                        pos: i,
                        msg: format!("unexpected character {:?}", b as char),
                    })
                }
            }
        }
        Ok(Lexer {
            tokens,
            pos: 0,
            end: text.len(),
        })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn next(&mut self) -> Option<(usize, Token)> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: &Token, what: &str) -> Result<usize, Error> {
        match self.next() {
            Some((p, t)) if &t == want => Ok(p),
            Some((p, _)) => Err(Error::Syntax {
                pos: p,
                msg: format!("expected {what}"),
            }),
            None => Err(Error::Syntax {
                pos: self.end,
                msg: format!("expected {what}, found end of input"),
            }),
        }
    }

    fn done(&self) -> bool {
        self.pos >= self.tokens.len()
    }
}

/// Parses `s[a,b,...]`; trailing zeros are normalized away.
fn parse_basis(lx: &mut Lexer) -> Result<(usize, Partition), Error> {
    let at = lx.expect(&Token::S, "'s'")?;
    lx.expect(&Token::LBracket, "'['")?;
    let mut parts: Vec<u32> = Vec::new();
    if lx.peek() == Some(&Token::RBracket) {
        lx.next();
        return Ok((at, Partition::empty()));
    }
    loop {
        let pos = lx.here();
        match lx.next() {
            Some((p, Token::Int(v))) => {
                let part = u32::try_from(&v).map_err(|_| Error::Syntax {
                    pos: p,
                    msg: "partition parts must be nonnegative integers".into(),
                })?;
                parts.push(part);
            }
            _ => {
                return Err(Error::Syntax {
                    pos,
                    msg: "expected a partition part".into(),
                })
            }
        }
        match lx.next() {
            Some((_, Token::Comma)) => continue,
            Some((_, Token::RBracket)) => break,
            Some((p, _)) => {
                return Err(Error::Syntax {
                    pos: p,
                    msg: "expected ',' or ']'".into(),
                })
            }
            None => {
                return Err(Error::Syntax {
                    pos: lx.end,
                    msg: "unterminated partition".into(),
                })
            }
        }
    }
    Ok((at, Partition::new(parts)?))
}

fn parse_class_tokens(lx: &mut Lexer, g: GrassmannianSpec) -> Result<CohomologyClass, Error> {
    // a bare `0` is the zero class
    if let Some(Token::Int(v)) = lx.peek() {
        if v == &BigInt::from(0) && lx.tokens.get(lx.pos + 1).map(|(_, t)| t) != Some(&Token::Star)
        {
            lx.next();
            return Ok(CohomologyClass::zero(g));
        }
    }
    let mut out = CohomologyClass::zero(g);
    loop {
        let coeff = match lx.peek() {
            Some(Token::Int(_)) => {
                let Some((_, Token::Int(v))) = lx.next() else {
                    unreachable!()
                };
                lx.expect(&Token::Star, "'*' after coefficient")?;
                v
            }
            _ => BigInt::one(),
        };
        let (_, lambda) = parse_basis(lx)?;
        let term = CohomologyClass::from_terms(g, [(lambda, coeff)])?;
        out = out.add(&term).expect("same space");
        match lx.peek() {
            Some(Token::Plus) => {
                lx.next();
            }
            _ => break,
        }
    }
    Ok(out)
}

/// Parses a class in the grammar above; `parse ∘ print` is the identity on
/// canonical forms.
pub fn parse_class(text: &str, g: GrassmannianSpec) -> Result<CohomologyClass, Error> {
    let mut lx = Lexer::new(text)?;
    let c = parse_class_tokens(&mut lx, g)?;
    if !lx.done() {
        return Err(Error::Syntax {
            pos: lx.here(),
            msg: "trailing input".into(),
        });
    }
    Ok(c)
}

/// Parses `class ('*' class)*` — the input form of the `mult` command.
pub fn parse_class_product(text: &str, g: GrassmannianSpec) -> Result<Vec<CohomologyClass>, Error> {
    let mut lx = Lexer::new(text)?;
    let mut factors = vec![parse_class_tokens(&mut lx, g)?];
    while lx.peek() == Some(&Token::Star) {
        lx.next();
        factors.push(parse_class_tokens(&mut lx, g)?);
    }
    if !lx.done() {
        return Err(Error::Syntax {
            pos: lx.here(),
            msg: "trailing input".into(),
        });
    }
    Ok(factors)
}

/// Parses a product class: terms like `2*(s[2,1]|s[1])` with one slot per factor.
pub fn parse_product_class(text: &str, spec: &ProductSpec) -> Result<ProductClass, Error> {
    let mut lx = Lexer::new(text)?;
    if let Some(Token::Int(v)) = lx.peek() {
        if v == &BigInt::from(0) && lx.tokens.get(lx.pos + 1).map(|(_, t)| t) != Some(&Token::Star)
        {
            lx.next();
            if lx.done() {
                return Ok(ProductClass::zero(spec.clone()));
            }
        }
    }
    let mut out = ProductClass::zero(spec.clone());
    loop {
        let coeff = match lx.peek() {
            Some(Token::Int(_)) => {
                let Some((_, Token::Int(v))) = lx.next() else {
                    unreachable!()
                };
                lx.expect(&Token::Star, "'*' after coefficient")?;
                v
            }
            _ => BigInt::one(),
        };
        let open = lx.expect(&Token::LParen, "'('")?;
        let mut slots = Vec::new();
        loop {
            let (_, lambda) = parse_basis(&mut lx)?;
            slots.push(lambda);
            match lx.next() {
                Some((_, Token::Pipe)) => continue,
                Some((_, Token::RParen)) => break,
                Some((p, _)) => {
                    return Err(Error::Syntax {
                        pos: p,
                        msg: "expected '|' or ')'".into(),
                    })
                }
                None => {
                    return Err(Error::Syntax {
                        pos: lx.end,
                        msg: "unterminated product term".into(),
                    })
                }
            }
        }
        if slots.len() != spec.len() {
            return Err(Error::Syntax {
                pos: open,
                msg: format!(
                    "term has {} slots, spec has {} factors",
                    slots.len(),
                    spec.len()
                ),
            });
        }
        let term = ProductClass::from_terms(spec.clone(), [(slots, coeff)])?;
        out = out.add(&term)?;
        match lx.peek() {
            Some(Token::Plus) => {
                lx.next();
            }
            _ => break,
        }
    }
    if !lx.done() {
        return Err(Error::Syntax {
            pos: lx.here(),
            msg: "trailing input".into(),
        });
    }
    Ok(out)
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &BigInt) -> fmt::Result {
    if !c.is_one() {
        write!(f, "{c}*")?;
    }
    Ok(())
}

impl fmt::Display for CohomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (lambda, c)) in self.terms().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write_coeff(f, c)?;
            write!(f, "s{lambda}")?;
        }
        Ok(())
    }
}

impl fmt::Display for ProductClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (slots, c)) in self.terms().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write_coeff(f, c)?;
            write!(f, "(")?;
            for (j, lambda) in slots.iter().enumerate() {
                if j > 0 {
                    write!(f, "|")?;
                }
                write!(f, "s{lambda}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}
