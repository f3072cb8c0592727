use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use super::lexer::{tokenize, Spanned, Tok};

/// Deepest nesting of parentheses and calls accepted by [`parse`].
pub const MAX_DEPTH: usize = 128;
/// Tallest syntax tree accepted by [`parse`]; bounds long operator chains
/// so that evaluation and drop stay shallow.
pub const MAX_HEIGHT: usize = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AtomName {
    Point,
    L,
    U,
    W,
    J,
    A,
    Sigma,
    Z,
    KummerK3,
}

impl AtomName {
    pub const ALL: [AtomName; 9] = [
        AtomName::Point,
        AtomName::L,
        AtomName::U,
        AtomName::W,
        AtomName::J,
        AtomName::A,
        AtomName::Sigma,
        AtomName::Z,
        AtomName::KummerK3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            AtomName::Point => "point",
            AtomName::L => "L",
            AtomName::U => "U",
            AtomName::W => "W",
            AtomName::J => "J",
            AtomName::A => "A",
            AtomName::Sigma => "Sigma",
            AtomName::Z => "Z",
            AtomName::KummerK3 => "kummerK3",
        }
    }

    fn lookup(name: &str) -> Option<AtomName> {
        AtomName::ALL.into_iter().find(|a| a.as_str() == name)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Func {
    Ab,
    Curve,
    P,
    Sym,
    Wedge,
    Shift,
    Tate,
    Angle,
    Dual,
    Even,
    Odd,
    Scale,
}

/// Shape of a function's argument list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Signature {
    /// `f(k)`
    Int,
    /// `f(k, expr)`
    IntExpr,
    /// `f(expr)`
    Expr,
}

impl Signature {
    pub fn arity(self) -> usize {
        match self {
            Signature::IntExpr => 2,
            Signature::Int | Signature::Expr => 1,
        }
    }

    fn wants_int(self, position: usize) -> bool {
        position == 0 && self != Signature::Expr
    }

    fn usage(self, name: &str) -> String {
        match self {
            Signature::Int => format!("{name}(k)"),
            Signature::IntExpr => format!("{name}(k, expr)"),
            Signature::Expr => format!("{name}(expr)"),
        }
    }
}

impl Func {
    pub const ALL: [Func; 12] = [
        Func::Ab,
        Func::Curve,
        Func::P,
        Func::Sym,
        Func::Wedge,
        Func::Shift,
        Func::Tate,
        Func::Angle,
        Func::Dual,
        Func::Even,
        Func::Odd,
        Func::Scale,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Func::Ab => "ab",
            Func::Curve => "curve",
            Func::P => "P",
            Func::Sym => "sym",
            Func::Wedge => "wedge",
            Func::Shift => "shift",
            Func::Tate => "tate",
            Func::Angle => "angle",
            Func::Dual => "dual",
            Func::Even => "even",
            Func::Odd => "odd",
            Func::Scale => "scale",
        }
    }

    pub fn signature(self) -> Signature {
        match self {
            Func::Ab | Func::Curve | Func::P => Signature::Int,
            Func::Sym | Func::Wedge | Func::Shift | Func::Tate | Func::Angle | Func::Scale => Signature::IntExpr,
            Func::Dual | Func::Even | Func::Odd => Signature::Expr,
        }
    }

    fn lookup(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.as_str() == name)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    /// Tensor product.
    Mul,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Atom(AtomName),
    IntLit(i64),
    Call(Func, Vec<Expr>),
    BinOp(BinOp, Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn call(f: Func, args: Vec<Expr>) -> Expr {
        Expr::Call(f, args)
    }

    pub fn bin(op: BinOp, lhs: Expr, rhs: Expr) -> Expr {
        Expr::BinOp(op, Box::new(lhs), Box::new(rhs))
    }
}

/// Fully parenthesized form, for diagnostics.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Atom(a) => f.write_str(a.as_str()),
            Expr::IntLit(k) => write!(f, "{k}"),
            Expr::Call(func, args) => {
                write!(f, "{}(", func.as_str())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
            Expr::BinOp(op, l, r) => {
                let sym = match op {
                    BinOp::Add => "+",
                    BinOp::Sub => "-",
                    BinOp::Mul => "*",
                };
                write!(f, "({l} {sym} {r})")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("parse error at offset {offset}: found {found}, expected one of {}", join(expected))]
    Syntax {
        offset: usize,
        found: String,
        expected: BTreeSet<String>,
    },
    #[error("arity error at offset {offset}: {func} takes {expected} argument(s), got {found}; usage {usage}")]
    Arity {
        offset: usize,
        func: &'static str,
        expected: usize,
        found: usize,
        usage: String,
    },
    #[error("unknown identifier '{name}' at offset {offset}")]
    UnknownIdentifier { offset: usize, name: String },
    #[error("expression nested deeper than {MAX_DEPTH}, or taller than {MAX_HEIGHT}, at offset {offset}")]
    TooDeep { offset: usize },
}

fn join(set: &BTreeSet<String>) -> String {
    set.iter().cloned().collect::<Vec<_>>().join(", ")
}

impl ParseError {
    /// 1-based byte offset into the input.
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. }
            | ParseError::Arity { offset, .. }
            | ParseError::UnknownIdentifier { offset, .. }
            | ParseError::TooDeep { offset } => *offset,
        }
    }
}

/// An expression with its tree height.
type Tall<T> = (T, usize);

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    depth: usize,
}

const CONTINUATIONS: [&str; 3] = ["'*'", "'+'", "'-'"];
const FACTOR_START: [&str; 2] = ["'('", "identifier"];

fn expected(extra: &[&str]) -> BTreeSet<String> {
    extra.iter().map(|s| s.to_string()).collect()
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, want: BTreeSet<String>) -> ParseError {
        let t = self.peek();
        ParseError::Syntax {
            offset: t.offset,
            found: t.tok.describe(),
            expected: want,
        }
    }

    /// Consumes `tok` or fails; `also` lists the operators that could have
    /// continued the preceding expression.
    fn expect(&mut self, tok: Tok, also: &[&str]) -> Result<(), ParseError> {
        if self.peek().tok == tok {
            self.bump();
            return Ok(());
        }
        let mut want = expected(also);
        want.insert(tok.describe());
        Err(self.unexpected(want))
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(ParseError::TooDeep {
                offset: self.peek().offset,
            });
        }
        Ok(())
    }

    fn join(&self, op: BinOp, (l, lh): Tall<Expr>, (r, rh): Tall<Expr>) -> Result<Tall<Expr>, ParseError> {
        let h = lh.max(rh) + 1;
        if h > MAX_HEIGHT {
            return Err(ParseError::TooDeep {
                offset: self.peek().offset,
            });
        }
        Ok((Expr::bin(op, l, r), h))
    }

    fn expr(&mut self) -> Result<Tall<Expr>, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek().tok {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            lhs = self.join(op, lhs, rhs)?;
        }
    }

    fn term(&mut self) -> Result<Tall<Expr>, ParseError> {
        let mut lhs = self.factor()?;
        while self.peek().tok == Tok::Star {
            self.bump();
            let rhs = self.factor()?;
            lhs = self.join(BinOp::Mul, lhs, rhs)?;
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Tall<Expr>, ParseError> {
        match self.peek().tok.clone() {
            Tok::LParen => {
                self.enter()?;
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, &CONTINUATIONS)?;
                self.depth -= 1;
                Ok(e)
            }
            Tok::Ident(name) => {
                let offset = self.peek().offset;
                self.bump();
                if self.peek().tok == Tok::LParen {
                    let func = Func::lookup(&name).ok_or(ParseError::UnknownIdentifier { offset, name })?;
                    self.enter()?;
                    let call = self.call(func, offset)?;
                    self.depth -= 1;
                    Ok(call)
                } else if let Some(atom) = AtomName::lookup(&name) {
                    Ok((Expr::Atom(atom), 1))
                } else if Func::lookup(&name).is_some() {
                    Err(self.unexpected(expected(&["'('"])))
                } else {
                    Err(ParseError::UnknownIdentifier { offset, name })
                }
            }
            Tok::Int(_) | Tok::Minus => {
                let t = self.peek();
                Err(ParseError::Syntax {
                    offset: t.offset,
                    found: t.tok.describe(),
                    expected: {
                        let mut s = expected(&FACTOR_START);
                        s.insert("(integers only as the first argument of a function)".into());
                        s
                    },
                })
            }
            _ => Err(self.unexpected(expected(&FACTOR_START))),
        }
    }

    fn int_literal(&mut self) -> Result<i64, ParseError> {
        let start = self.peek().offset;
        let negative = if self.peek().tok == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let Tok::Int(digits) = self.peek().tok.clone() else {
            return Err(self.unexpected(expected(&["integer"])));
        };
        self.bump();
        let text = if negative { format!("-{digits}") } else { digits };
        text.parse().map_err(|_| ParseError::Syntax {
            offset: start,
            found: format!("integer {text}"),
            expected: expected(&["integer within 64 bits"]),
        })
    }

    fn call(&mut self, func: Func, offset: usize) -> Result<Tall<Expr>, ParseError> {
        let sig = func.signature();
        self.expect(Tok::LParen, &[])?;
        let mut args = Vec::new();
        let mut height = 1;
        if self.peek().tok != Tok::RParen {
            loop {
                let position = args.len();
                let is_int = matches!(self.peek().tok, Tok::Int(_) | Tok::Minus);
                let arg = if sig.wants_int(position) {
                    if !is_int {
                        let mut want = expected(&["integer"]);
                        if position >= sig.arity() {
                            want = expected(&["')'"]);
                        }
                        // A missing integer is reported as an arity problem
                        // when the call is otherwise well formed.
                        return match self.count_remaining_args() {
                            Some(n) if n + position != sig.arity() => Err(self.arity(func, offset, n + position)),
                            _ => Err(self.unexpected(want)),
                        };
                    }
                    Expr::IntLit(self.int_literal()?)
                } else {
                    let (e, h) = self.expr()?;
                    height = height.max(h + 1);
                    e
                };
                args.push(arg);
                match self.peek().tok {
                    Tok::Comma => {
                        self.bump();
                    }
                    Tok::RParen => break,
                    _ => {
                        let mut want = expected(&["','", "')'"]);
                        if !matches!(args.last(), Some(Expr::IntLit(_))) {
                            want.extend(CONTINUATIONS.iter().map(|s| s.to_string()));
                        }
                        return Err(self.unexpected(want));
                    }
                }
            }
        }
        self.bump();
        if args.len() != sig.arity() {
            return Err(self.arity(func, offset, args.len()));
        }
        Ok((Expr::Call(func, args), height))
    }

    fn arity(&self, func: Func, offset: usize, found: usize) -> ParseError {
        let sig = func.signature();
        ParseError::Arity {
            offset,
            func: func.as_str(),
            expected: sig.arity(),
            found,
            usage: sig.usage(func.as_str()),
        }
    }

    /// Counts top-level arguments from the cursor to the matching `)`, if
    /// the parentheses balance.
    fn count_remaining_args(&self) -> Option<usize> {
        let mut depth = 0usize;
        let mut count = 1;
        for t in &self.toks[self.pos..] {
            match t.tok {
                Tok::LParen => depth += 1,
                Tok::RParen if depth == 0 => return Some(count),
                Tok::RParen => depth -= 1,
                Tok::Comma if depth == 0 => count += 1,
                Tok::End => return None,
                _ => {}
            }
        }
        None
    }
}

/// Parses `expr := term (('+'|'-') term)*`, `term := factor ('*' factor)*`,
/// `factor := atom | call | '(' expr ')'`.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, depth: 0 };
    let (e, _) = p.expr()?;
    if p.peek().tok != Tok::End {
        let mut want = expected(&CONTINUATIONS);
        want.insert(Tok::End.describe());
        return Err(p.unexpected(want));
    }
    Ok(e)
}
