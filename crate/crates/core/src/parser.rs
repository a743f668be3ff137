//! Text front-end for forms.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' uint)?
//! base     := 'x' | 'dx' | 'd2x' | 'q' | rational | '(' expr ')'
//! rational := uint ('/' uint)?
//! ```
//!
//! `*` is the noncommutative product of forms, evaluated left to right.
//! Error positions are byte offsets into the source.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::calculus::CalculusConfig;
use crate::cyclotomic::{CycQ, Rational};
use crate::error::{Error, Result};
use crate::forms::Form;
use crate::polynomial::Mode;

/// Exponents above this are rejected rather than expanded.
pub const MAX_EXPONENT: u32 = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    X,
    Dx,
    D2x,
    Q,
    Int(BigInt),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::Slash => "'/'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::X => "'x'".into(),
            Tok::Dx => "'dx'".into(),
            Tok::D2x => "'d2x'".into(),
            Tok::Q => "'q'".into(),
            Tok::Int(n) => format!("number {n}"),
            Tok::End => "end of input".into(),
        }
    }
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { pos, msg: msg.into() }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i];
        let start = i;
        let simple = match ch {
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'^' => Some(Tok::Caret),
            b'/' => Some(Tok::Slash),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push((start, tok));
            i += 1;
        } else if ch.is_ascii_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = src[start..i].parse().expect("ascii digits");
            out.push((start, Tok::Int(n)));
        } else if ch.is_ascii_alphabetic() {
            while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                i += 1;
            }
            let tok = match &src[start..i] {
                "x" => Tok::X,
                "dx" => Tok::Dx,
                "d2x" => Tok::D2x,
                "q" => Tok::Q,
                other => return Err(syntax(start, format!("unknown identifier '{other}'"))),
            };
            out.push((start, tok));
        } else {
            let c = src[start..].chars().next().unwrap_or('?');
            return Err(syntax(start, format!("unexpected character '{c}'")));
        }
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    cfg: &'a CalculusConfig,
    mode: Mode,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Form> {
        let mut acc = if *self.peek() == Tok::Minus {
            self.bump();
            Form::zero(self.mode).sub(&self.term()?)?
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?)?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Form> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let rhs = self.factor()?;
            acc = acc.mul(&rhs, self.cfg)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Form> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let (pos, tok) = self.bump();
        let n = match tok {
            Tok::Int(n) => n,
            Tok::Minus => {
                return Err(Error::Exponent { pos, msg: "negative exponents are not allowed".into() })
            }
            other => return Err(syntax(pos, format!("expected exponent, found {}", other.describe()))),
        };
        let n = u32::try_from(&n)
            .ok()
            .filter(|n| *n <= MAX_EXPONENT)
            .ok_or_else(|| Error::Exponent {
                pos,
                msg: format!("exponent {n} exceeds the limit {MAX_EXPONENT}"),
            })?;
        base.pow(n, self.cfg)
    }

    fn base(&mut self) -> Result<Form> {
        let (pos, tok) = self.bump();
        let mode = self.mode;
        match tok {
            Tok::X => Ok(Form::x(mode)),
            Tok::Dx => Ok(Form::dx(mode)),
            Tok::D2x => Ok(Form::d2x(mode)),
            Tok::Q => Ok(Form::scalar(CycQ::q(), mode)),
            Tok::Int(numer) => {
                let denom = if *self.peek() == Tok::Slash {
                    self.bump();
                    match self.bump() {
                        (_, Tok::Int(d)) if d.is_zero() => {
                            return Err(syntax(pos, "zero denominator"))
                        }
                        (_, Tok::Int(d)) => d,
                        (p, other) => {
                            return Err(syntax(p, format!("expected denominator, found {}", other.describe())))
                        }
                    }
                } else {
                    BigInt::one()
                };
                Ok(Form::scalar(CycQ::from_rational(Rational::new(numer, denom)), mode))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                match self.bump() {
                    (_, Tok::RParen) => Ok(inner),
                    (p, other) => Err(syntax(p, format!("expected ')', found {}", other.describe()))),
                }
            }
            other => Err(syntax(pos, format!("expected a factor, found {}", other.describe()))),
        }
    }
}

/// Parses `src` and reduces it to normal form under `cfg`.
pub fn parse(src: &str, cfg: &CalculusConfig) -> Result<Form> {
    let toks = lex(src)?;
    let mut p = Parser { toks, at: 0, cfg, mode: cfg.mode() };
    let form = p.expr()?;
    match p.peek() {
        Tok::End => Ok(form),
        other => Err(syntax(p.pos(), format!("unexpected {}", other.describe()))),
    }
}

fn rational_text(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Spelling of a nonzero scalar with no sign of its own, e.g. `3`, `2*q`, `q`.
fn unsigned_scalar(mag: &Rational, on_q: bool) -> String {
    match (on_q, mag.is_one()) {
        (false, _) => rational_text(mag),
        (true, true) => "q".to_string(),
        (true, false) => format!("{}*q", rational_text(mag)),
    }
}

/// `(negative, text)` for one summand `c x^deg (dx)^k (d2x)^m`.
fn summand(c: &CycQ, deg: u32, dx: u32, d2x: u32) -> (bool, String) {
    let mut factors: Vec<String> = Vec::new();
    match deg {
        0 => {}
        1 => factors.push("x".into()),
        d => factors.push(format!("x^{d}")),
    }
    match dx {
        0 => {}
        1 => factors.push("dx".into()),
        k => factors.push(format!("dx^{k}")),
    }
    match d2x {
        0 => {}
        1 => factors.push("d2x".into()),
        m => factors.push(format!("d2x^{m}")),
    }
    let (negative, scalar) = match c.simple_sign() {
        Some(negative) => {
            let on_q = c.re().is_zero();
            let mag = if on_q { c.q_part().abs() } else { c.re().abs() };
            let omit = !on_q && mag.is_one() && !factors.is_empty();
            (negative, (!omit).then(|| unsigned_scalar(&mag, on_q)))
        }
        None => {
            let b = c.q_part();
            let sign = if b.is_negative() { '-' } else { '+' };
            let q_text = unsigned_scalar(&b.abs(), true);
            (false, Some(format!("({}{sign}{q_text})", rational_text(c.re()))))
        }
    };
    let mut parts: Vec<String> = scalar.into_iter().collect();
    parts.extend(factors);
    (negative, parts.join("*"))
}

/// Canonical text of a form. Summands follow the normal-form order
/// (`d2x` power, then `dx` power, then `x` degree, all ascending).
pub fn render(u: &Form) -> String {
    let mut out = String::new();
    for (mon, f) in u.terms() {
        for (deg, c) in f.terms() {
            let (negative, text) = summand(c, deg, mon.dx(), mon.d2x());
            match (out.is_empty(), negative) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            out.push_str(&text);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
