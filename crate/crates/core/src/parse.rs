//! Surface syntax for elements and identities.
//!
//! ```text
//! top  := expr ('=' expr)?
//! expr := ('+'|'-')? term (('+'|'-') term)*
//! term := rational '*'? atom ('*' atom)* | atom ('*' atom)* | '0'
//! atom := ident | 'Y[' names '|' names ']' | '(' expr ')'
//!       | '[' expr ',' expr ']' | '{' expr ',' expr '}'
//!       | 'assoc(' expr ',' expr ',' expr ')'
//! ```
//!
//! `*` is left-associative. Juxtaposition is not a product. A number right
//! before an atom is a scalar; a bare nonzero number is rejected because
//! the algebras have no unit.

use std::fmt;

use num_traits::{One, Zero};

use crate::bicom::{BasisWord, BicomElement, Generator};
use crate::error::{Error, Result};
use crate::magma::MagmaPoly;
use crate::operators::BracketOp;
use crate::oracle::defining_monomial;
use crate::rational::{self, int, Rational};
use crate::tree::Tree;

/// Parsed expression, before choosing a target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Zero,
    Var(Generator),
    Word(BasisWord),
    Scaled(Rational, Box<Expr>),
    Sum(Vec<Expr>),
    Mul(BracketOp, Box<Expr>, Box<Expr>),
    /// `(a,b,c) = {a,{b,c}} - {{a,b},c}`.
    Assoc(Box<Expr>, Box<Expr>, Box<Expr>),
}

impl Expr {
    /// Expands brackets in the free bicommutative algebra.
    pub fn to_element(&self) -> BicomElement {
        match self {
            Expr::Zero => BicomElement::zero(),
            Expr::Var(g) => BicomElement::gen(g.clone()),
            Expr::Word(w) => BicomElement::word(w.clone()),
            Expr::Scaled(c, e) => e.to_element().scale(c),
            Expr::Sum(parts) => parts
                .iter()
                .fold(BicomElement::zero(), |acc, e| &acc + &e.to_element()),
            Expr::Mul(op, l, r) => op.apply(&l.to_element(), &r.to_element()),
            Expr::Assoc(a, b, c) => {
                let (a, b, c) = (a.to_element(), b.to_element(), c.to_element());
                let anti = BracketOp::Anti;
                &anti.apply(&a, &anti.apply(&b, &c)) - &anti.apply(&anti.apply(&a, &b), &c)
            }
        }
    }

    /// Reads every product node as the single magma operation.
    pub fn to_poly(&self) -> MagmaPoly {
        let leaf = |t: Tree<Generator>| MagmaPoly::monomial(int(1), t);
        match self {
            Expr::Zero => MagmaPoly::zero(),
            Expr::Var(g) => leaf(Tree::Leaf(g.clone())),
            Expr::Word(w) => leaf(defining_monomial(w)),
            Expr::Scaled(c, e) => {
                let mut out = MagmaPoly::zero();
                out.add_scaled(&e.to_poly(), c);
                out
            }
            Expr::Sum(parts) => {
                let mut out = MagmaPoly::zero();
                for p in parts {
                    out.add_scaled(&p.to_poly(), &int(1));
                }
                out
            }
            Expr::Mul(_, l, r) => l.to_poly().product(&r.to_poly()),
            Expr::Assoc(a, b, c) => {
                let (a, b, c) = (a.to_poly(), b.to_poly(), c.to_poly());
                let mut out = a.product(&b.product(&c));
                out.add_scaled(&a.product(&b).product(&c), &int(-1));
                out
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Zero => f.write_str("0"),
            Expr::Var(g) => write!(f, "{g}"),
            Expr::Word(w) => write!(f, "{w}"),
            Expr::Scaled(c, e) => write!(f, "({}*({e}))", rational::format_rational(c)),
            Expr::Sum(parts) => {
                f.write_str("(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
            Expr::Mul(BracketOp::Plain, l, r) => write!(f, "({l})*({r})"),
            Expr::Mul(BracketOp::Com, l, r) => write!(f, "[{l},{r}]"),
            Expr::Mul(BracketOp::Anti, l, r) => write!(f, "{{{l},{r}}}"),
            Expr::Assoc(a, b, c) => write!(f, "assoc({a},{b},{c})"),
        }
    }
}

/// A parsed `lhs = rhs` (or a single expression, read as `expr = 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parsed {
    pub lhs: Expr,
    pub rhs: Option<Expr>,
    /// Product notation used throughout, if any product occurs.
    pub notation: Option<BracketOp>,
    /// Position of the first product written in a different notation.
    pub mixed_at: Option<(usize, usize)>,
}

impl Parsed {
    /// `lhs - rhs`.
    pub fn difference(&self) -> Expr {
        match &self.rhs {
            None => self.lhs.clone(),
            Some(r) => Expr::Sum(vec![self.lhs.clone(), Expr::Scaled(int(-1), Box::new(r.clone()))]),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(String),
    Sym(char),
    Eof,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_alphabetic() {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            Tok::Num(chars[start..i].iter().collect())
        } else if "+-*/()[]{},|=".contains(c) {
            i += 1;
            Tok::Sym(c)
        } else {
            return Err(syntax(l0, c0, format!("unexpected character {c:?}")));
        };
        col += i - start;
        out.push(Token { tok, line: l0, col: c0 });
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        col,
    });
    Ok(out)
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    notation: Option<BracketOp>,
    mixed_at: Option<(usize, usize)>,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn is_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    fn err_here(&self, message: impl Into<String>) -> Error {
        let t = self.peek();
        syntax(t.line, t.col, message)
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.is_sym(c) {
            self.bump();
            Ok(())
        } else {
            let found = describe(&self.peek().tok);
            Err(self.err_here(format!("expected '{c}', found {found}")))
        }
    }

    fn note_op(&mut self, op: BracketOp, at: &Token) {
        match self.notation {
            None => self.notation = Some(op),
            Some(o) if o != op && self.mixed_at.is_none() => self.mixed_at = Some((at.line, at.col)),
            Some(_) => {}
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut parts = Vec::new();
        let mut sign = int(1);
        if (self.is_sym('+') || self.is_sym('-')) && self.bump().tok == Tok::Sym('-') {
            sign = int(-1);
        }
        loop {
            let t = self.term()?;
            parts.push(if sign.is_one() { t } else { Expr::Scaled(sign.clone(), Box::new(t)) });
            if self.is_sym('+') || self.is_sym('-') {
                sign = if self.bump().tok == Tok::Sym('-') { int(-1) } else { int(1) };
            } else {
                break;
            }
        }
        Ok(if parts.len() == 1 { parts.pop().expect("one part") } else { Expr::Sum(parts) })
    }

    fn rational(&mut self) -> Result<Rational> {
        let num = self.bump();
        let Tok::Num(p) = &num.tok else { unreachable!("caller checked for a number") };
        let mut text = p.clone();
        if self.is_sym('/') {
            self.bump();
            match self.peek().tok.clone() {
                Tok::Num(q) => {
                    self.bump();
                    text = format!("{text}/{q}");
                }
                other => return Err(self.err_here(format!("expected denominator, found {}", describe(&other)))),
            }
        }
        rational::parse_rational(&text).map_err(|e| match e {
            Error::ZeroDenominator => syntax(num.line, num.col, "zero denominator"),
            other => other,
        })
    }

    fn term(&mut self) -> Result<Expr> {
        let mut coeff = None;
        if matches!(self.peek().tok, Tok::Num(_)) {
            let at = self.peek().clone();
            let c = self.rational()?;
            if self.is_sym('*') {
                self.bump();
            } else if !starts_atom(&self.peek().tok) {
                if c.is_zero() {
                    return Ok(Expr::Zero);
                }
                return Err(syntax(at.line, at.col, "a nonzero constant needs a factor"));
            }
            coeff = Some(c);
        }
        let mut acc = self.atom()?;
        while self.is_sym('*') {
            let at = self.bump();
            self.note_op(BracketOp::Plain, &at);
            let rhs = self.atom()?;
            acc = Expr::Mul(BracketOp::Plain, Box::new(acc), Box::new(rhs));
        }
        Ok(match coeff {
            Some(c) => Expr::Scaled(c, Box::new(acc)),
            None => acc,
        })
    }

    fn names_until(&mut self, end: char) -> Result<Vec<Generator>> {
        let mut out = Vec::new();
        loop {
            let t = self.bump();
            match &t.tok {
                Tok::Ident(name) => out.push(Generator::new(name)?),
                other => return Err(syntax(t.line, t.col, format!("expected a name, found {}", describe(other)))),
            }
            if self.is_sym(',') {
                self.bump();
            } else {
                self.expect(end)?;
                return Ok(out);
            }
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Ident(name) if name == "Y" && *self.peek_at(1) == Tok::Sym('[') => {
                self.bump();
                self.bump();
                self.note_op(BracketOp::Plain, &t);
                let col = self.names_until('|')?;
                let row = self.names_until(']')?;
                Ok(Expr::Word(BasisWord::pair(col, row)))
            }
            Tok::Ident(name) if name == "assoc" && *self.peek_at(1) == Tok::Sym('(') => {
                self.bump();
                self.bump();
                self.note_op(BracketOp::Anti, &t);
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(',')?;
                let c = self.expr()?;
                self.expect(')')?;
                Ok(Expr::Assoc(Box::new(a), Box::new(b), Box::new(c)))
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Expr::Var(Generator::new(name)?))
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Sym(open @ ('[' | '{')) => {
                let (op, close) = if *open == '[' { (BracketOp::Com, ']') } else { (BracketOp::Anti, '}') };
                self.bump();
                self.note_op(op, &t);
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(close)?;
                Ok(Expr::Mul(op, Box::new(a), Box::new(b)))
            }
            other => Err(syntax(t.line, t.col, format!("expected an operand, found {}", describe(other)))),
        }
    }
}

fn starts_atom(t: &Tok) -> bool {
    matches!(t, Tok::Ident(_) | Tok::Sym('(' | '[' | '{'))
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("name {s:?}"),
        Tok::Num(s) => format!("number {s}"),
        Tok::Sym(c) => format!("'{c}'"),
        Tok::Eof => "end of input".into(),
    }
}

/// Parses `expr` or `lhs = rhs`.
pub fn parse(text: &str) -> Result<Parsed> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        notation: None,
        mixed_at: None,
    };
    if p.peek().tok == Tok::Eof {
        return Err(p.err_here("empty input"));
    }
    let lhs = p.expr()?;
    let rhs = if p.is_sym('=') {
        p.bump();
        Some(p.expr()?)
    } else {
        None
    };
    if p.peek().tok != Tok::Eof {
        let found = describe(&p.peek().tok);
        return Err(p.err_here(format!("unexpected {found}")));
    }
    Ok(Parsed {
        lhs,
        rhs,
        notation: p.notation,
        mixed_at: p.mixed_at,
    })
}

/// Parses an element of the free bicommutative algebra; `=` is rejected.
pub fn parse_element(text: &str) -> Result<BicomElement> {
    let parsed = parse(text)?;
    if parsed.rhs.is_some() {
        let col = text.find('=').map_or(1, |i| text[..i].chars().count() + 1);
        return Err(syntax(1, col, "an element cannot contain '='"));
    }
    Ok(parsed.lhs.to_element())
}

/// Parses an identity `lhs = rhs` (or `p`, meaning `p = 0`) as `lhs - rhs`
/// over a single operation. All products must use one notation.
pub fn parse_identity(text: &str) -> Result<MagmaPoly> {
    let parsed = parse(text)?;
    if let Some((line, column)) = parsed.mixed_at {
        return Err(syntax(line, column, "mixed product notation"));
    }
    Ok(parsed.difference().to_poly())
}
