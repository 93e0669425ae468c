//! Recursive-descent parser for the equation grammar.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::Rational;

use super::Expr;

/// Syntax error with the byte offset of the offending token and the set of
/// token kinds that would have been accepted there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl std::error::Error for ParseError {}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at byte {}: expected {}, found {}",
            self.offset,
            self.expected.join(" or "),
            self.found
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Decimal(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Equals,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer `{n}`"),
            Tok::Decimal(_) => "decimal number".to_string(),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".to_string(),
            Tok::Minus => "`-`".to_string(),
            Tok::Star => "`*`".to_string(),
            Tok::Slash => "`/`".to_string(),
            Tok::Caret => "`^`".to_string(),
            Tok::LParen => "`(`".to_string(),
            Tok::RParen => "`)`".to_string(),
            Tok::Equals => "`=`".to_string(),
            Tok::End => "end of input".to_string(),
        }
    }
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokenize(src: &'a str) -> Result<Vec<(Tok, usize)>, ParseError> {
        let mut lx = Lexer {
            src: src.as_bytes(),
            pos: 0,
        };
        let mut out = Vec::new();
        loop {
            lx.skip_ws();
            let start = lx.pos;
            if lx.pos >= lx.src.len() {
                out.push((Tok::End, start));
                return Ok(out);
            }
            let c = lx.src[lx.pos];
            let tok = match c {
                b'+' => {
                    lx.pos += 1;
                    Tok::Plus
                }
                b'-' => {
                    lx.pos += 1;
                    Tok::Minus
                }
                b'*' => {
                    lx.pos += 1;
                    Tok::Star
                }
                b'/' => {
                    lx.pos += 1;
                    Tok::Slash
                }
                b'^' => {
                    lx.pos += 1;
                    Tok::Caret
                }
                b'(' => {
                    lx.pos += 1;
                    Tok::LParen
                }
                b')' => {
                    lx.pos += 1;
                    Tok::RParen
                }
                b'=' => {
                    lx.pos += 1;
                    Tok::Equals
                }
                b'0'..=b'9' => lx.lex_number(start)?,
                c if c.is_ascii_alphabetic() || c == b'_' => lx.lex_ident(),
                other => {
                    return Err(ParseError {
                        offset: start,
                        expected: vec!["a token".to_string()],
                        found: format!("`{}`", char::from(other)),
                    });
                }
            };
            out.push((tok, start));
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn lex_number(&mut self, start: usize) -> Result<Tok, ParseError> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos < self.src.len() && self.src[self.pos] == b'.' {
            self.pos += 1;
            let frac_start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if self.pos == frac_start {
                return Err(ParseError {
                    offset: self.pos,
                    expected: vec!["digit after decimal point".to_string()],
                    found: self.describe_at(self.pos),
                });
            }
            let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
            let dot = text.find('.').expect("decimal point");
            let int_part: BigInt = if dot == 0 {
                BigInt::zero()
            } else {
                text[..dot].parse().expect("integer digits")
            };
            let frac = &text[dot + 1..];
            let den = BigInt::from(10u32).pow(frac.len() as u32);
            let num = int_part * &den + frac.parse::<BigInt>().expect("fraction digits");
            return Ok(Tok::Decimal(Rational::new(num, den)));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(Tok::Int(text.parse().expect("integer digits")))
    }

    fn lex_ident(&mut self) -> Tok {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        Tok::Ident(
            std::str::from_utf8(&self.src[start..self.pos])
                .expect("ascii identifier")
                .to_string(),
        )
    }

    fn describe_at(&self, pos: usize) -> String {
        if pos >= self.src.len() {
            "end of input".to_string()
        } else {
            format!("`{}`", char::from(self.src[pos]))
        }
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        ParseError {
            offset: self.offset(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().describe(),
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[what]))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = Expr::Add(Box::new(acc), Box::new(rhs));
                }
                Tok::Minus => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = Expr::Sub(Box::new(acc), Box::new(rhs));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    let rhs = self.factor()?;
                    acc = Expr::Mul(Box::new(acc), Box::new(rhs));
                }
                Tok::Slash => {
                    self.bump();
                    let rhs = self.factor()?;
                    acc = Expr::Div(Box::new(acc), Box::new(rhs));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let mut atom = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let exp = match self.peek().clone() {
                Tok::Int(n) => {
                    self.bump();
                    u32::try_from(&n).map_err(|_| ParseError {
                        offset: self.offset(),
                        expected: vec!["a small nonnegative integer exponent".to_string()],
                        found: format!("integer `{n}`"),
                    })?
                }
                _ => return Err(self.error(&["nonnegative integer exponent"])),
            };
            atom = Expr::Pow(Box::new(atom), exp);
        }
        Ok(if neg { Expr::Neg(Box::new(atom)) } else { atom })
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                // rational literal: integer "/" positive-integer, consumed
                // greedily at the atom level
                if *self.peek() == Tok::Slash {
                    if let Tok::Int(d) = self.toks[self.pos + 1].0.clone() {
                        if d.is_zero() {
                            return Err(ParseError {
                                offset: self.toks[self.pos + 1].1,
                                expected: vec!["positive integer denominator".to_string()],
                                found: "integer `0`".to_string(),
                            });
                        }
                        self.bump();
                        self.bump();
                        return Ok(Expr::Number(Rational::new(n, d)));
                    }
                }
                Ok(Expr::Number(Rational::from(n)))
            }
            Tok::Decimal(r) => {
                self.bump();
                Ok(Expr::Number(r))
            }
            Tok::Ident(name) => {
                self.bump();
                if name == "sqrt" {
                    self.expect(Tok::LParen, "`(`")?;
                    let inner = self.expr()?;
                    self.expect(Tok::RParen, "`)`")?;
                    Ok(Expr::Sqrt(Box::new(inner)))
                } else if name == "x" {
                    Ok(Expr::Var)
                } else {
                    Ok(Expr::Param(name))
                }
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            _ => Err(self.error(&["number", "`x`", "identifier", "`sqrt(`", "`(`"])),
        }
    }
}

/// Parses a single expression (no `=`).
pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let toks = Lexer::tokenize(text)?;
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    p.expect(Tok::End, "end of input")?;
    Ok(e)
}

/// Parses an equation `lhs = rhs` into its two expression trees.
pub fn parse(text: &str) -> Result<(Expr, Expr), ParseError> {
    let toks = Lexer::tokenize(text)?;
    let mut p = Parser { toks, pos: 0 };
    let lhs = p.expr()?;
    p.expect(Tok::Equals, "`=`")?;
    let rhs = p.expr()?;
    p.expect(Tok::End, "end of input")?;
    Ok((lhs, rhs))
}
