use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::algebra::AlgebraKind;

/// Which generator of the active algebra a variable names.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    Left,
    Right,
}

/// Parsed expression. Products keep their written order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Var(Generator),
    Int(BigInt),
    /// The scalar `q`; only parsed for the q-commutative algebra.
    Q,
    Sum(Box<Expr>, Box<Expr>),
    Difference(Box<Expr>, Box<Expr>),
    Product(Box<Expr>, Box<Expr>),
    Power(Box<Expr>, u32),
    Negation(Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at byte {offset}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnknownSymbol(String),
    WrongAlgebra { symbol: String, algebra: AlgebraKind },
    NegativeExponent,
    BadExponent,
    ExponentTooLarge,
    UnexpectedChar(char),
    UnexpectedToken(String),
    UnexpectedEnd,
    UnclosedParen,
    UnmatchedParen,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnknownSymbol(s) => write!(f, "unknown symbol `{s}`"),
            ParseErrorKind::WrongAlgebra { symbol, algebra } => {
                let (a, b) = algebra.generators();
                write!(f, "`{symbol}` is not a generator of the {algebra} algebra (expected {a} or {b})")
            }
            ParseErrorKind::NegativeExponent => f.write_str("negative exponent"),
            ParseErrorKind::BadExponent => f.write_str("exponent must be a nonnegative integer literal"),
            ParseErrorKind::ExponentTooLarge => f.write_str("exponent too large"),
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character `{c}`"),
            ParseErrorKind::UnexpectedToken(t) => write!(f, "unexpected `{t}`"),
            ParseErrorKind::UnexpectedEnd => f.write_str("unexpected end of input"),
            ParseErrorKind::UnclosedParen => f.write_str("unbalanced parentheses: `(` is never closed"),
            ParseErrorKind::UnmatchedParen => f.write_str("unbalanced parentheses: `)` has no opening `(`"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => f.write_str(s),
            Tok::Int(n) => write!(f, "{n}"),
            Tok::Plus => f.write_str("+"),
            Tok::Minus => f.write_str("-"),
            Tok::Star => f.write_str("*"),
            Tok::Caret => f.write_str("^"),
            Tok::LParen => f.write_str("("),
            Tok::RParen => f.write_str(")"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(text[start..i].parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().expect("non-empty");
                return Err(ParseError { offset: start, kind: ParseErrorKind::UnexpectedChar(ch) });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    kind: AlgebraKind,
    // first unresolved symbol; reported only if the syntax is otherwise valid
    symbol_error: Option<ParseError>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn err<T>(&self, kind: ParseErrorKind) -> Result<T, ParseError> {
        Err(ParseError { offset: self.offset(), kind })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    lhs = Expr::Sum(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    lhs = Expr::Difference(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            lhs = Expr::Product(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if let Some(Tok::Minus) = self.peek() {
            self.pos += 1;
            return Ok(Expr::Negation(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let e = self.exponent()?;
            return Ok(Expr::Power(Box::new(base), e));
        }
        Ok(base)
    }

    /// `int ('^' exponent)?`, folded right to left.
    fn exponent(&mut self) -> Result<u32, ParseError> {
        let at = self.offset();
        let value = match self.peek() {
            Some(Tok::Int(n)) => n.to_u32(),
            Some(Tok::Minus) => return self.err(ParseErrorKind::NegativeExponent),
            None => return self.err(ParseErrorKind::UnexpectedEnd),
            Some(_) => return self.err(ParseErrorKind::BadExponent),
        };
        self.pos += 1;
        let Some(value) = value else {
            return Err(ParseError { offset: at, kind: ParseErrorKind::ExponentTooLarge });
        };
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let inner = self.exponent()?;
            return value
                .checked_pow(inner)
                .ok_or(ParseError { offset: at, kind: ParseErrorKind::ExponentTooLarge });
        }
        Ok(value)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let Some((at, tok)) = self.toks.get(self.pos).cloned() else {
            return self.err(ParseErrorKind::UnexpectedEnd);
        };
        match tok {
            Tok::Int(n) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Tok::Ident(name) => {
                self.pos += 1;
                match self.symbol(&name) {
                    Ok(e) => Ok(e),
                    Err(kind) => {
                        self.symbol_error.get_or_insert(ParseError { offset: at, kind });
                        Ok(Expr::Int(BigInt::from(0)))
                    }
                }
            }
            Tok::LParen => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    None => Err(ParseError { offset: at, kind: ParseErrorKind::UnclosedParen }),
                    Some(t) => self.err(ParseErrorKind::UnexpectedToken(t.to_string())),
                }
            }
            Tok::RParen => self.err(ParseErrorKind::UnmatchedParen),
            t => self.err(ParseErrorKind::UnexpectedToken(t.to_string())),
        }
    }

    fn symbol(&self, name: &str) -> Result<Expr, ParseErrorKind> {
        let (left, right) = self.kind.generators();
        if name == left {
            return Ok(Expr::Var(Generator::Left));
        }
        if name == right {
            return Ok(Expr::Var(Generator::Right));
        }
        if name == "q" && self.kind.has_q() {
            return Ok(Expr::Q);
        }
        let known = AlgebraKind::ALL.iter().any(|k| {
            let (a, b) = k.generators();
            name == a || name == b
        }) || name == "q";
        if known {
            Err(ParseErrorKind::WrongAlgebra { symbol: name.to_string(), algebra: self.kind })
        } else {
            Err(ParseErrorKind::UnknownSymbol(name.to_string()))
        }
    }
}

/// Parses an expression over the generators of `kind`.
///
/// ```text
/// expr  := term (('+' | '-') term)*
/// term  := unary ('*' unary)*
/// unary := '-' unary | atom ('^' int)?
/// atom  := generator | 'q' | int | '(' expr ')'
/// ```
///
/// Multiplication must be written with `*`. Syntax errors are reported
/// before unknown or wrong-algebra symbols.
pub fn parse(text: &str, kind: AlgebraKind) -> Result<Expr, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, end: text.len(), kind, symbol_error: None };
    let e = p.expr()?;
    match p.peek() {
        None => p.symbol_error.map_or(Ok(e), Err),
        Some(Tok::RParen) => p.err(ParseErrorKind::UnmatchedParen),
        Some(t) => {
            let t = t.to_string();
            p.err(ParseErrorKind::UnexpectedToken(t))
        }
    }
}
