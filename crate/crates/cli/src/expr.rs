//! Field specs and rational-function expressions.
//!
//! ```text
//! ratexpr := poly ('/' poly)?
//! poly    := term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := atom ('^' nat)?
//! atom    := nat | 'x' | 't' | '(' poly ')' | '-' factor
//! ```
//!
//! `t` is the generator of the field (the class of `t` modulo the canonical
//! modulus). There is no implicit multiplication.

use ramify::{Field, FieldElement, Poly, RationalFunction};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExprError {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("t is not available over the prime field {0}")]
    GeneratorUnavailable(String),
    #[error(transparent)]
    Field(#[from] ramify::Error),
}

fn parse_err<T>(pos: usize, msg: impl Into<String>) -> Result<T, ExprError> {
    Err(ExprError::Parse {
        pos,
        msg: msg.into(),
    })
}

/// `"p"` or `"p^n"`.
pub fn parse_field(spec: &str) -> Result<Field, ExprError> {
    let s = spec.trim();
    let (p, n) = match s.split_once('^') {
        Some((p, n)) => (p.trim(), n.trim()),
        None => (s, "1"),
    };
    let num = |text: &str, at: usize| -> Result<u64, ExprError> {
        if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
            return parse_err(at, format!("expected a decimal integer, found {text:?}"));
        }
        text.parse().or_else(|_| parse_err(at, "integer too large"))
    };
    let p = num(p, 0)?;
    let n = num(n, s.find('^').map_or(0, |i| i + 1))?;
    let n = u32::try_from(n).or_else(|_| parse_err(0, "extension degree too large"))?;
    if n == 0 {
        return parse_err(0, "extension degree must be positive");
    }
    Ok(Field::new(p, n)?)
}

/// Syntax tree of an expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(u64),
    X,
    T,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

/// A parsed `ratexpr`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expression {
    pub numerator: Expr,
    pub denominator: Option<Expr>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    Num(u64),
    X,
    T,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

fn describe(t: Tok) -> String {
    match t {
        Tok::Num(n) => n.to_string(),
        Tok::X => "'x'".into(),
        Tok::T => "'t'".into(),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Caret => "'^'".into(),
        Tok::Slash => "'/'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::End => "end of input".into(),
    }
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                let v = s[start..i]
                    .parse()
                    .or_else(|_| parse_err(start, "integer literal too large"))?;
                out.push((start, Tok::Num(v)));
                continue;
            }
            b'x' => Tok::X,
            b't' => Tok::T,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                let ch = s[i..].chars().next().unwrap_or('?');
                return parse_err(i, format!("unexpected character {ch:?}"));
            }
        };
        out.push((i, tok));
        i += 1;
    }
    out.push((s.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> Tok {
        self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.peek();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), ExprError> {
        if self.peek() == want {
            self.bump();
            Ok(())
        } else {
            parse_err(
                self.pos(),
                format!(
                    "expected {}, found {}",
                    describe(want),
                    describe(self.peek())
                ),
            )
        }
    }

    fn poly(&mut self) -> Result<Expr, ExprError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut acc = self.factor()?;
        while self.peek() == Tok::Star {
            self.bump();
            acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        if self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump() {
            Tok::Num(n) => {
                let e = u32::try_from(n).or_else(|_| parse_err(pos, "exponent too large"))?;
                Ok(Expr::Pow(Box::new(base), e))
            }
            t => parse_err(pos, format!("expected an exponent, found {}", describe(t))),
        }
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        let pos = self.pos();
        match self.bump() {
            Tok::Num(n) => Ok(Expr::Int(n)),
            Tok::X => Ok(Expr::X),
            Tok::T => Ok(Expr::T),
            Tok::Minus => Ok(Expr::Neg(Box::new(self.factor()?))),
            Tok::LParen => {
                let inner = self.poly()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            t => parse_err(pos, format!("unexpected {}", describe(t))),
        }
    }
}

/// Parses a `ratexpr` without evaluating it.
pub fn parse_expression(text: &str) -> Result<Expression, ExprError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
    };
    let numerator = p.poly()?;
    let denominator = if p.peek() == Tok::Slash {
        p.bump();
        Some(p.poly()?)
    } else {
        None
    };
    if p.peek() != Tok::End {
        return parse_err(p.pos(), format!("unexpected {}", describe(p.peek())));
    }
    Ok(Expression {
        numerator,
        denominator,
    })
}

impl Expr {
    /// Evaluates to a polynomial in `x` over `field`.
    pub fn eval(&self, field: &Field) -> Result<Poly, ExprError> {
        Ok(match self {
            Expr::Int(n) => Poly::constant(&field.element(n % field.characteristic())),
            Expr::X => Poly::x(field),
            Expr::T => match field.generator() {
                Some(g) => Poly::constant(&g),
                None => return Err(ExprError::GeneratorUnavailable(field.to_string())),
            },
            Expr::Neg(a) => a.eval(field)?.neg(),
            Expr::Add(a, b) => a.eval(field)?.add(&b.eval(field)?)?,
            Expr::Sub(a, b) => a.eval(field)?.sub(&b.eval(field)?)?,
            Expr::Mul(a, b) => a.eval(field)?.mul(&b.eval(field)?)?,
            Expr::Pow(a, e) => a.eval(field)?.pow(*e),
        })
    }
}

/// Parses and evaluates a rational function; the result is in lowest terms
/// with a monic denominator.
pub fn parse_ratfunc(text: &str, field: &Field) -> Result<RationalFunction, ExprError> {
    let e = parse_expression(text)?;
    let g = e.numerator.eval(field)?;
    let h = match &e.denominator {
        Some(d) => d.eval(field)?,
        None => Poly::one(field),
    };
    Ok(RationalFunction::new(&g, &h)?)
}

/// Parses a polynomial expression in `t` denoting one field element.
pub fn parse_element(text: &str, field: &Field) -> Result<FieldElement, ExprError> {
    let e = parse_expression(text)?;
    if e.denominator.is_some() {
        return parse_err(
            text.find('/').unwrap_or(0),
            "a field element cannot contain '/'",
        );
    }
    let p = e.numerator.eval(field)?;
    match p.degree() {
        None | Some(0) => Ok(p.coeff(0)),
        Some(_) => parse_err(
            text.find('x').unwrap_or(0),
            "a field element cannot contain x",
        ),
    }
}
