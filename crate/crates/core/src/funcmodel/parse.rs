//! Recursive-descent parser for the function language.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := unary (('*' | '/') unary)*
//! unary    := '-' unary | power
//! power    := atom ('^' exponent)?
//! exponent := '-'? number | '(' '-'? number ')'
//! atom     := number | 'x' | 'y' | 'e' | '(' expr ')' | ('exp' | 'log') '(' expr ')'
//! ```

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use thiserror::Error;

use super::Expr;

#[derive(Debug, Clone, PartialEq, Error)]
#[error("{kind} at offset {offset}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ParseErrorKind {
    UnexpectedEnd,
    UnexpectedChar(char),
    UnknownIdentifier(String),
    Expected(&'static str),
    BadNumber(String),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnexpectedEnd => f.write_str("syntax error: unexpected end of input"),
            ParseErrorKind::UnexpectedChar(c) => write!(f, "syntax error: unexpected `{c}`"),
            ParseErrorKind::UnknownIdentifier(id) => write!(f, "unknown identifier `{id}`"),
            ParseErrorKind::Expected(what) => write!(f, "syntax error: expected {what}"),
            ParseErrorKind::BadNumber(s) => write!(f, "syntax error: malformed number `{s}`"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => toks.push((Tok::Plus, start)),
            b'-' => toks.push((Tok::Minus, start)),
            b'*' => toks.push((Tok::Star, start)),
            b'/' => toks.push((Tok::Slash, start)),
            b'^' => toks.push((Tok::Caret, start)),
            b'(' => toks.push((Tok::LParen, start)),
            b')' => toks.push((Tok::RParen, start)),
            b'0'..=b'9' | b'.' => {
                while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                    i += 1;
                }
                let lit = &text[start..i];
                let value = lit.parse::<f64>().map_err(|_| ParseError {
                    offset: start,
                    kind: ParseErrorKind::BadNumber(lit.to_string()),
                })?;
                toks.push((Tok::Num(value), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                toks.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(ParseError {
                    offset: start,
                    kind: ParseErrorKind::UnexpectedChar(ch),
                });
            }
        }
        i += 1;
    }
    toks.push((Tok::End, text.len()));
    Ok(toks)
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

    fn error_here(&self, expected: &'static str) -> ParseError {
        let kind = match self.peek() {
            Tok::End => ParseErrorKind::UnexpectedEnd,
            _ => ParseErrorKind::Expected(expected),
        };
        ParseError {
            offset: self.offset(),
            kind,
        }
    }

    fn expect(&mut self, tok: Tok, what: &'static str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error_here(what))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = lhs.add(self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    lhs = lhs.sub(self.term()?);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = lhs.mul(self.unary()?);
                }
                Tok::Slash => {
                    self.bump();
                    lhs = lhs.div(self.unary()?);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let parenthesized = *self.peek() == Tok::LParen;
        if parenthesized {
            self.bump();
        }
        let negative = *self.peek() == Tok::Minus;
        if negative {
            self.bump();
        }
        let exponent = match self.peek() {
            Tok::Num(v) => {
                let v = *v;
                self.bump();
                v
            }
            _ => return Err(self.error_here("numeric exponent")),
        };
        if parenthesized {
            self.expect(Tok::RParen, "`)`")?;
        }
        Ok(base.powf(if negative { -exponent } else { exponent }))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let offset = self.offset();
        match self.peek().clone() {
            Tok::Num(v) => {
                self.bump();
                Ok(Expr::Const(v))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Tok::Ident(name) => {
                self.bump();
                match name.as_str() {
                    "x" => Ok(Expr::X),
                    "y" => Ok(Expr::Y),
                    "e" => Ok(Expr::Const(std::f64::consts::E)),
                    "exp" | "log" => {
                        self.expect(Tok::LParen, "`(` after function name")?;
                        let arg = self.expr()?;
                        self.expect(Tok::RParen, "`)`")?;
                        Ok(if name == "exp" { arg.exp() } else { arg.ln() })
                    }
                    _ => Err(ParseError {
                        offset,
                        kind: ParseErrorKind::UnknownIdentifier(name),
                    }),
                }
            }
            _ => Err(self.error_here("number, variable, or `(`")),
        }
    }
}

/// Parses `text` into an expression tree.
pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let mut parser = Parser {
        toks: tokenize(text)?,
        pos: 0,
    };
    let expr = parser.expr()?;
    match parser.peek() {
        Tok::End => Ok(expr),
        Tok::RParen => Err(ParseError {
            offset: parser.offset(),
            kind: ParseErrorKind::UnexpectedChar(')'),
        }),
        _ => Err(parser.error_here("operator or end of input")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: f64) -> Expr {
        Expr::Const(v)
    }

    #[test]
    fn parses_exp_of_sum() {
        assert_eq!(parse_expr("exp(x+y)").unwrap(), Expr::X.add(Expr::Y).exp());
    }

    #[test]
    fn power_binds_tighter_than_sum() {
        assert_eq!(
            parse_expr("x^2 + 1").unwrap(),
            Expr::X.powf(2.0).add(c(1.0))
        );
    }

    #[test]
    fn unbalanced_paren_reports_end_offset() {
        let err = parse_expr("log(x").unwrap_err();
        assert_eq!(err.offset, 5);
        assert_eq!(err.kind, ParseErrorKind::UnexpectedEnd);
    }

    #[test]
    fn unary_minus_sits_between_power_and_product() {
        assert_eq!(
            parse_expr("-x^2*3").unwrap(),
            Expr::X.powf(2.0).neg().mul(c(3.0))
        );
        assert_eq!(parse_expr("2--x").unwrap(), c(2.0).sub(Expr::X.neg()));
    }

    #[test]
    fn signed_exponents() {
        assert_eq!(parse_expr("x^-0.5").unwrap(), Expr::X.powf(-0.5));
        assert_eq!(
            parse_expr("(x+1)^(-2)").unwrap(),
            Expr::X.add(c(1.0)).powf(-2.0)
        );
    }

    #[test]
    fn left_associative_operators() {
        assert_eq!(
            parse_expr("8 / 4 / 2").unwrap(),
            c(8.0).div(c(4.0)).div(c(2.0))
        );
        assert_eq!(parse_expr("1-2-3").unwrap(), c(1.0).sub(c(2.0)).sub(c(3.0)));
    }

    #[test]
    fn euler_constant_and_whitespace() {
        assert_eq!(
            parse_expr("  e * x ").unwrap(),
            c(std::f64::consts::E).mul(Expr::X)
        );
    }

    #[test]
    fn unknown_identifier() {
        let err = parse_expr("x + sin(x)").unwrap_err();
        assert_eq!(err.offset, 4);
        assert_eq!(err.kind, ParseErrorKind::UnknownIdentifier("sin".into()));
    }

    #[test]
    fn rejects_trailing_garbage_and_bad_chars() {
        assert_eq!(parse_expr("x)").unwrap_err().offset, 1);
        assert_eq!(parse_expr("x y").unwrap_err().offset, 2);
        assert_eq!(
            parse_expr("x # 2").unwrap_err().kind,
            ParseErrorKind::UnexpectedChar('#')
        );
        assert!(parse_expr("x^y").is_err());
        assert!(parse_expr("1..2").is_err());
        assert!(parse_expr("").is_err());
    }

    #[test]
    fn print_then_parse_is_stable() {
        for text in [
            "x^2 + 1",
            "exp(x + y)",
            "(x*y + 1)^0.5",
            "-x^2 - (y - 1)/2",
            "log(x)*-y",
            "2 - (3 - x)",
            "x/(y/2)",
            "(-x)^2",
            "(x^2)^3",
        ] {
            let e = parse_expr(text).unwrap();
            let printed = e.to_string();
            assert_eq!(parse_expr(&printed).unwrap(), e, "{text} -> {printed}");
        }
    }
}
