//! Concrete syntax: an s-expression dialect for expressions and judgements.
//!
//! The surface uses binder names; the core is nameless. Parsing resolves
//! names to indices, printing invents canonical names (`x0`, `x1`, ... by
//! binding depth), so `parse(print(e)) == e` holds structurally. A bare
//! nonnegative integer is always accepted as a raw de Bruijn index, which is
//! how free variables of standalone expressions print.
//!
//! Binding positions are written in one of two shapes:
//!
//! * domain binders carry the name with the domain, as in `(pi (x A) B)`,
//!   `(forall (x A) p)`, `(lam (x A) b)`;
//! * every other bound child is wrapped as `(bind x .. body)` with exactly
//!   as many names as the position binds, as in
//!   `(list-elim (bind z M) s b (bind tail head rec S))`.
//!
//! `_` is a legal binder name that cannot be referenced.
//!
//! Sugar accepted by the parser and never produced by the printer:
//! `(not p)`, `top`, `(iff p q)`, `(arrow A B)`, `(times A B)`, `(pow A)`,
//! `(setof (x A) p)`, `(dc u)`, `(eps a V)`, `(p1 (x A) B p)`,
//! `(p2 (x A) B p)`.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::judgement::Judgement;
use crate::syntax::{self, shift, subst_many_lift, Ctx, Expr, Side};
use crate::theory::Kind;

/// Position inside a source string, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl Pos {
    fn start() -> Pos {
        Pos { line: 1, col: 1 }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("{line}:{col}: {msg}")]
pub struct SurfaceError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

fn err<T>(pos: Pos, msg: impl Into<String>) -> Result<T, SurfaceError> {
    Err(SurfaceError { line: pos.line, col: pos.col, msg: msg.into() })
}

/// One s-expression with source position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sexp {
    pub pos: Pos,
    pub node: SexpNode,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SexpNode {
    Sym(String),
    Int(usize),
    List(Vec<Sexp>),
}

impl Sexp {
    fn sym(s: impl Into<String>) -> Sexp {
        Sexp { pos: Pos::default(), node: SexpNode::Sym(s.into()) }
    }

    fn int(n: usize) -> Sexp {
        Sexp { pos: Pos::default(), node: SexpNode::Int(n) }
    }

    fn list(items: Vec<Sexp>) -> Sexp {
        Sexp { pos: Pos::default(), node: SexpNode::List(items) }
    }

    pub fn as_sym(&self) -> Option<&str> {
        match &self.node {
            SexpNode::Sym(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_int(&self) -> Option<usize> {
        match &self.node {
            SexpNode::Int(n) => Some(*n),
            _ => None,
        }
    }

    pub fn as_list(&self) -> Option<&[Sexp]> {
        match &self.node {
            SexpNode::List(items) => Some(items),
            _ => None,
        }
    }

    /// Head symbol of a nonempty list.
    pub fn head(&self) -> Option<&str> {
        self.as_list().and_then(|l| l.first()).and_then(Sexp::as_sym)
    }
}

impl fmt::Display for Sexp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.node {
            SexpNode::Sym(s) => f.write_str(s),
            SexpNode::Int(n) => write!(f, "{n}"),
            SexpNode::List(items) => {
                f.write_str("(")?;
                for (i, it) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{it}")?;
                }
                f.write_str(")")
            }
        }
    }
}

// Tokenizer and reader.

#[derive(Debug)]
enum Token {
    Open(Pos),
    Close(Pos),
    Atom(String, Pos),
}

fn tokenize(src: &str) -> Result<Vec<Token>, SurfaceError> {
    let mut out = Vec::new();
    let mut pos = Pos::start();
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        let here = pos;
        let bump = |c: char, pos: &mut Pos| {
            if c == '\n' {
                pos.line += 1;
                pos.col = 1;
            } else {
                pos.col += 1;
            }
        };
        match c {
            '(' => {
                out.push(Token::Open(here));
                chars.next();
                bump(c, &mut pos);
            }
            ')' => {
                out.push(Token::Close(here));
                chars.next();
                bump(c, &mut pos);
            }
            ';' => {
                while let Some(&c) = chars.peek() {
                    chars.next();
                    bump(c, &mut pos);
                    if c == '\n' {
                        break;
                    }
                }
            }
            c if c.is_whitespace() => {
                chars.next();
                bump(c, &mut pos);
            }
            _ => {
                let mut atom = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_whitespace() || c == '(' || c == ')' || c == ';' {
                        break;
                    }
                    atom.push(c);
                    chars.next();
                    bump(c, &mut pos);
                }
                out.push(Token::Atom(atom, here));
            }
        }
    }
    Ok(out)
}

fn parse_tokens(tokens: &[Token], at: &mut usize) -> Result<Sexp, SurfaceError> {
    match tokens.get(*at) {
        None => err(Pos::start(), "unexpected end of input"),
        Some(Token::Close(p)) => err(*p, "unexpected ')'"),
        Some(Token::Atom(a, p)) => {
            *at += 1;
            if a.bytes().all(|b| b.is_ascii_digit()) {
                match a.parse::<usize>() {
                    Ok(n) => Ok(Sexp { pos: *p, node: SexpNode::Int(n) }),
                    Err(_) => err(*p, format!("integer out of range: {a}")),
                }
            } else {
                Ok(Sexp { pos: *p, node: SexpNode::Sym(a.clone()) })
            }
        }
        Some(Token::Open(p)) => {
            *at += 1;
            let mut items = Vec::new();
            loop {
                match tokens.get(*at) {
                    None => return err(*p, "unclosed '('"),
                    Some(Token::Close(_)) => {
                        *at += 1;
                        return Ok(Sexp { pos: *p, node: SexpNode::List(items) });
                    }
                    Some(_) => items.push(parse_tokens(tokens, at)?),
                }
            }
        }
    }
}

/// Read every s-expression in the source.
pub fn read_sexps(src: &str) -> Result<Vec<Sexp>, SurfaceError> {
    let tokens = tokenize(src)?;
    let mut at = 0;
    let mut out = Vec::new();
    while at < tokens.len() {
        out.push(parse_tokens(&tokens, &mut at)?);
    }
    Ok(out)
}

/// Read exactly one s-expression.
pub fn read_sexp(src: &str) -> Result<Sexp, SurfaceError> {
    let all = read_sexps(src)?;
    match all.len() {
        1 => Ok(all.into_iter().next().unwrap()),
        0 => err(Pos::start(), "empty input"),
        _ => err(all[1].pos, "trailing content after first expression"),
    }
}

/// Heads and atoms with fixed meanings; none may be used as a binder name.
pub const RESERVED: &[&str] = &[
    "N0", "N1", "P1", "Props", "bot", "star", "lem", "top", "list", "sum", "sigma", "pi",
    "quot", "dec", "and", "imp", "or", "forall", "exists", "eq", "id", "n0-elim", "n1-elim",
    "nil", "cons", "list-elim", "inl", "inr", "sum-elim", "pair", "sig-elim", "lam", "ap",
    "class", "quot-elim", "code", "codes", "truth", "bot-elim", "imp-lam", "imp-ap",
    "and-pair", "and-fst", "and-snd", "or-inl", "or-inr", "or-elim", "all-lam", "all-ap",
    "ex-pair", "ex-elim", "id-refl", "id-elim", "msub", "bind", "not", "iff", "arrow",
    "times", "pow", "setof", "eps", "dc", "p1", "p2", "wf", "kind", "term", "tyeq", "tmeq",
    "props", "prop", "set", "col", "theory", "flags", "def", "derive", "check", "expect",
    "var", "subst", "weaken", "synth-term", "synth-kind", "synth-ctx", "concludes",
];

pub fn is_reserved(name: &str) -> bool {
    RESERVED.contains(&name)
}

fn check_binder_name(s: &Sexp) -> Result<String, SurfaceError> {
    match s.as_sym() {
        Some(name) if name == "_" => Ok(name.to_string()),
        Some(name) if is_reserved(name) => {
            err(s.pos, format!("'{name}' is reserved and cannot name a binder"))
        }
        Some(name) if name.starts_with('?') => {
            err(s.pos, "binder names may not start with '?'")
        }
        Some(name) => Ok(name.to_string()),
        None => err(s.pos, "expected a binder name"),
    }
}

/// Parser state: the binder-name stack plus named closed definitions.
pub struct ExprParser<'d> {
    defs: &'d HashMap<String, Expr>,
    names: Vec<String>,
}

/// Shared empty definition table for standalone parsing.
pub fn no_defs() -> &'static HashMap<String, Expr> {
    use std::sync::OnceLock;
    static MAP: OnceLock<HashMap<String, Expr>> = OnceLock::new();
    MAP.get_or_init(HashMap::new)
}

impl<'d> ExprParser<'d> {
    pub fn new(defs: &'d HashMap<String, Expr>, names: Vec<String>) -> Self {
        ExprParser { defs, names }
    }

    fn lookup(&self, name: &str) -> Option<usize> {
        self.names
            .iter()
            .rev()
            .position(|n| n != "_" && n == name)
    }

    fn under<T>(
        &mut self,
        names: Vec<String>,
        f: impl FnOnce(&mut Self) -> Result<T, SurfaceError>,
    ) -> Result<T, SurfaceError> {
        let k = names.len();
        self.names.extend(names);
        let out = f(self);
        self.names.truncate(self.names.len() - k);
        out
    }

    /// `(name DOM)` pair at a domain-binder position.
    fn binder_pair<'a>(&mut self, s: &'a Sexp) -> Result<(String, Expr, &'a Sexp), SurfaceError> {
        let items = match s.as_list() {
            Some(items) if items.len() == 2 => items,
            _ => return err(s.pos, "expected a (name DOMAIN) binder pair"),
        };
        let name = check_binder_name(&items[0])?;
        let dom = self.expr(&items[1])?;
        Ok((name, dom, &items[1]))
    }

    /// `(bind n1 .. nk BODY)` with exactly `arity` names; returns the body
    /// parsed under those names.
    fn bound(&mut self, s: &Sexp, arity: usize) -> Result<Expr, SurfaceError> {
        let items = match s.as_list() {
            Some(items) if s.head() == Some("bind") => items,
            _ => {
                return err(
                    s.pos,
                    format!("expected (bind {} names.. BODY) here", arity),
                )
            }
        };
        if items.len() != arity + 2 {
            return err(
                s.pos,
                format!("this position binds {} name(s), found {}", arity, items.len() - 2),
            );
        }
        let mut names = Vec::with_capacity(arity);
        for it in &items[1..=arity] {
            names.push(check_binder_name(it)?);
        }
        self.under(names, |p| p.expr(&items[arity + 1]))
    }

    pub fn expr(&mut self, s: &Sexp) -> Result<Expr, SurfaceError> {
        use crate::syntax::build as b;
        match &s.node {
            SexpNode::Int(n) => Ok(Expr::Var(*n)),
            SexpNode::Sym(name) => match name.as_str() {
                "N0" => Ok(Expr::N0),
                "N1" => Ok(Expr::N1),
                "P1" => Ok(Expr::P1),
                "Props" => Ok(Expr::PropS),
                "bot" => Ok(Expr::Bot),
                "star" => Ok(Expr::Star),
                "lem" => Ok(Expr::LemC),
                "top" => Ok(syntax::top()),
                _ if name.starts_with('?') => match name[1..].parse::<u16>() {
                    Ok(m) => Ok(Expr::Meta(m)),
                    Err(_) => err(s.pos, format!("bad metavariable '{name}'")),
                },
                _ => {
                    if let Some(i) = self.lookup(name) {
                        Ok(Expr::Var(i))
                    } else if let Some(e) = self.defs.get(name) {
                        Ok(e.clone())
                    } else {
                        err(s.pos, format!("unbound name '{name}'"))
                    }
                }
            },
            SexpNode::List(items) => {
                let head = match s.head() {
                    Some(h) => h,
                    None => return err(s.pos, "expected an expression"),
                };
                let args = &items[1..];
                let need = |n: usize| -> Result<(), SurfaceError> {
                    if args.len() == n {
                        Ok(())
                    } else {
                        err(
                            s.pos,
                            format!("'{head}' takes {n} argument(s), found {}", args.len()),
                        )
                    }
                };
                match head {
                    "list" => {
                        need(1)?;
                        Ok(b::list(self.expr(&args[0])?))
                    }
                    "sum" => {
                        need(2)?;
                        Ok(b::sum(self.expr(&args[0])?, self.expr(&args[1])?))
                    }
                    "sigma" | "pi" | "forall" | "exists" | "lam" | "imp-lam" | "all-lam"
                    | "setof" => {
                        need(2)?;
                        let (name, dom, _) = self.binder_pair(&args[0])?;
                        let body = self.under(vec![name], |p| p.expr(&args[1]))?;
                        Ok(match head {
                            "sigma" | "setof" => b::sigma(dom, body),
                            "pi" => b::pi(dom, body),
                            "forall" => b::forall(dom, body),
                            "exists" => b::exists(dom, body),
                            "lam" => b::lam(dom, body),
                            "imp-lam" => b::implam(dom, body),
                            _ => b::alllam(dom, body),
                        })
                    }
                    "quot" => {
                        need(2)?;
                        let set = self.expr(&args[0])?;
                        let rel = self.bound(&args[1], 2)?;
                        Ok(b::quot(set, rel))
                    }
                    "dec" => {
                        need(1)?;
                        Ok(b::dec_s(self.expr(&args[0])?))
                    }
                    "and" | "imp" | "or" => {
                        need(2)?;
                        let x = self.expr(&args[0])?;
                        let y = self.expr(&args[1])?;
                        Ok(match head {
                            "and" => b::and(x, y),
                            "imp" => b::imp(x, y),
                            _ => b::or(x, y),
                        })
                    }
                    "eq" | "id" => {
                        need(3)?;
                        let ty = self.expr(&args[0])?;
                        let lhs = self.expr(&args[1])?;
                        let rhs = self.expr(&args[2])?;
                        Ok(if head == "eq" { b::eq(ty, lhs, rhs) } else { b::id(ty, lhs, rhs) })
                    }
                    "n0-elim" => {
                        need(2)?;
                        Ok(b::n0elim(self.bound(&args[0], 1)?, self.expr(&args[1])?))
                    }
                    "n1-elim" => {
                        need(3)?;
                        Ok(b::n1elim(
                            self.bound(&args[0], 1)?,
                            self.expr(&args[1])?,
                            self.expr(&args[2])?,
                        ))
                    }
                    "nil" => {
                        need(1)?;
                        Ok(b::nil(self.expr(&args[0])?))
                    }
                    "cons" => {
                        need(2)?;
                        Ok(b::cons(self.expr(&args[0])?, self.expr(&args[1])?))
                    }
                    "list-elim" => {
                        need(4)?;
                        Ok(b::listelim(
                            self.bound(&args[0], 1)?,
                            self.expr(&args[1])?,
                            self.expr(&args[2])?,
                            self.bound(&args[3], 3)?,
                        ))
                    }
                    "inl" => {
                        need(2)?;
                        Ok(b::inl(self.expr(&args[0])?, self.expr(&args[1])?))
                    }
                    "inr" => {
                        need(2)?;
                        Ok(b::inr(self.expr(&args[0])?, self.expr(&args[1])?))
                    }
                    "sum-elim" => {
                        need(4)?;
                        Ok(b::sumelim(
                            self.bound(&args[0], 1)?,
                            self.expr(&args[1])?,
                            self.bound(&args[2], 1)?,
                            self.bound(&args[3], 1)?,
                        ))
                    }
                    "pair" => {
                        need(4)?;
                        let (name, dom, _) = self.binder_pair(&args[0])?;
                        let cod = self.under(vec![name], |p| p.expr(&args[1]))?;
                        Ok(b::spair(dom, cod, self.expr(&args[2])?, self.expr(&args[3])?))
                    }
                    "sig-elim" => {
                        need(3)?;
                        Ok(b::sigelim(
                            self.bound(&args[0], 1)?,
                            self.expr(&args[1])?,
                            self.bound(&args[2], 2)?,
                        ))
                    }
                    "ap" => {
                        need(2)?;
                        Ok(b::app(self.expr(&args[0])?, self.expr(&args[1])?))
                    }
                    "class" => {
                        need(2)?;
                        Ok(b::qcls(self.expr(&args[0])?, self.expr(&args[1])?))
                    }
                    "quot-elim" => {
                        need(3)?;
                        Ok(b::qelim(
                            self.bound(&args[0], 1)?,
                            self.expr(&args[1])?,
                            self.bound(&args[2], 1)?,
                        ))
                    }
                    "code" => {
                        need(1)?;
                        Ok(b::code_p(self.expr(&args[0])?))
                    }
                    "codes" => {
                        need(1)?;
                        Ok(b::code_s(self.expr(&args[0])?))
                    }
                    "truth" => {
                        need(1)?;
                        Ok(b::truth(self.expr(&args[0])?))
                    }
                    "bot-elim" => {
                        need(2)?;
                        Ok(b::botelim(self.expr(&args[0])?, self.expr(&args[1])?))
                    }
                    "imp-ap" => {
                        need(2)?;
                        Ok(b::impapp(self.expr(&args[0])?, self.expr(&args[1])?))
                    }
                    "and-pair" => {
                        need(2)?;
                        Ok(b::andpair(self.expr(&args[0])?, self.expr(&args[1])?))
                    }
                    "and-fst" => {
                        need(1)?;
                        Ok(b::andproj(Side::L, self.expr(&args[0])?))
                    }
                    "and-snd" => {
                        need(1)?;
                        Ok(b::andproj(Side::R, self.expr(&args[0])?))
                    }
                    "or-inl" => {
                        need(2)?;
                        Ok(b::orinl(self.expr(&args[0])?, self.expr(&args[1])?))
                    }
                    "or-inr" => {
                        need(2)?;
                        Ok(b::orinr(self.expr(&args[0])?, self.expr(&args[1])?))
                    }
                    "or-elim" => {
                        need(4)?;
                        Ok(b::orelim(
                            self.expr(&args[0])?,
                            self.expr(&args[1])?,
                            self.bound(&args[2], 1)?,
                            self.bound(&args[3], 1)?,
                        ))
                    }
                    "all-ap" => {
                        need(2)?;
                        Ok(b::allapp(self.expr(&args[0])?, self.expr(&args[1])?))
                    }
                    "ex-pair" => {
                        need(4)?;
                        let (name, dom, _) = self.binder_pair(&args[0])?;
                        let fam = self.under(vec![name], |p| p.expr(&args[1]))?;
                        Ok(b::expair(dom, fam, self.expr(&args[2])?, self.expr(&args[3])?))
                    }
                    "ex-elim" => {
                        need(3)?;
                        Ok(b::exelim(
                            self.expr(&args[0])?,
                            self.expr(&args[1])?,
                            self.bound(&args[2], 2)?,
                        ))
                    }
                    "id-refl" => {
                        need(2)?;
                        Ok(b::idrefl(self.expr(&args[0])?, self.expr(&args[1])?))
                    }
                    "id-elim" => {
                        need(5)?;
                        Ok(b::idelim(
                            self.bound(&args[0], 1)?,
                            self.expr(&args[1])?,
                            self.expr(&args[2])?,
                            self.expr(&args[3])?,
                            self.expr(&args[4])?,
                        ))
                    }
                    "msub" => {
                        if args.len() < 2 {
                            return err(s.pos, "'msub' takes a body, a lift, then arguments");
                        }
                        let body = self.expr(&args[0])?;
                        let lift = match args[1].as_int() {
                            Some(n) => n,
                            None => return err(args[1].pos, "msub lift must be an integer"),
                        };
                        let mut rest = Vec::new();
                        for a in &args[2..] {
                            rest.push(self.expr(a)?);
                        }
                        Ok(b::msub(body, rest, lift))
                    }

                    // Sugar.
                    "not" => {
                        need(1)?;
                        Ok(syntax::neg(self.expr(&args[0])?))
                    }
                    "iff" => {
                        need(2)?;
                        Ok(syntax::iff(self.expr(&args[0])?, self.expr(&args[1])?))
                    }
                    "arrow" | "times" => {
                        need(2)?;
                        let a = self.expr(&args[0])?;
                        let c = shift(&self.expr(&args[1])?, 1);
                        Ok(if head == "arrow" { b::pi(a, c) } else { b::sigma(a, c) })
                    }
                    "pow" => {
                        need(1)?;
                        Ok(b::pi(self.expr(&args[0])?, Expr::P1))
                    }
                    "dc" => {
                        need(1)?;
                        Ok(syntax::dc(self.expr(&args[0])?))
                    }
                    "eps" => {
                        need(2)?;
                        let a = self.expr(&args[0])?;
                        let v = self.expr(&args[1])?;
                        Ok(syntax::dc(b::app(v, a)))
                    }
                    "p1" | "p2" => {
                        need(3)?;
                        let (name, dom, _) = self.binder_pair(&args[0])?;
                        let cod = self.under(vec![name], |p| p.expr(&args[1]))?;
                        let scrut = self.expr(&args[2])?;
                        Ok(if head == "p1" {
                            proj1(&dom, scrut)
                        } else {
                            proj2(&dom, &cod, scrut)
                        })
                    }
                    _ => err(s.pos, format!("unknown expression head '{head}'")),
                }
            }
        }
    }
}

/// First projection out of `Sigma (x dom) cod`, as an eliminator.
pub fn proj1(dom: &Expr, scrut: Expr) -> Expr {
    use crate::syntax::build as b;
    b::sigelim(shift(dom, 1), scrut, b::var(1))
}

/// Second projection out of `Sigma (x dom) cod`, as an eliminator. The motive
/// substitutes the first projection, so checking it needs the pair beta rule.
pub fn proj2(dom: &Expr, cod: &Expr, scrut: Expr) -> Expr {
    use crate::syntax::build as b;
    let fst_of_var0 = b::sigelim(shift(dom, 2), b::var(0), b::var(1));
    let motive = subst_many_lift(cod, &[fst_of_var0], 1);
    b::sigelim(motive, scrut, b::var(0))
}

/// Parse one expression with no names in scope.
pub fn parse_expr(src: &str) -> Result<Expr, SurfaceError> {
    let s = read_sexp(src)?;
    ExprParser::new(no_defs(), Vec::new()).expr(&s)
}

/// Parse one expression under the given binder names (innermost last).
pub fn parse_expr_named(names: &[String], src: &str) -> Result<Expr, SurfaceError> {
    let s = read_sexp(src)?;
    ExprParser::new(no_defs(), names.to_vec()).expr(&s)
}

// Printing.

struct Printer {
    names: Vec<String>,
}

impl Printer {
    fn fresh(&self) -> String {
        format!("x{}", self.names.len())
    }

    fn var(&self, i: usize) -> Sexp {
        let n = self.names.len();
        if i < n {
            let name = &self.names[n - 1 - i];
            let shadowed =
                name == "_" || self.names[n - i..].iter().any(|m| m == name);
            if !shadowed {
                return Sexp::sym(name.clone());
            }
        }
        Sexp::int(i)
    }

    fn under(&mut self, k: usize, f: impl FnOnce(&mut Self) -> Sexp) -> (Vec<String>, Sexp) {
        let mut fresh = Vec::with_capacity(k);
        for _ in 0..k {
            let name = self.fresh();
            fresh.push(name.clone());
            self.names.push(name);
        }
        let out = f(self);
        self.names.truncate(self.names.len() - k);
        (fresh, out)
    }

    fn bound(&mut self, k: usize, e: &Expr) -> Sexp {
        let (names, body) = self.under(k, |p| p.expr(e));
        let mut items = vec![Sexp::sym("bind")];
        items.extend(names.into_iter().map(Sexp::sym));
        items.push(body);
        Sexp::list(items)
    }

    fn dom_binder(&mut self, head: &str, dom: &Expr, body: &Expr, extra: Vec<Sexp>) -> Sexp {
        let d = self.expr(dom);
        let (names, b) = self.under(1, |p| p.expr(body));
        let pair = Sexp::list(vec![Sexp::sym(names.into_iter().next().unwrap()), d]);
        let mut items = vec![Sexp::sym(head), pair, b];
        items.extend(extra);
        Sexp::list(items)
    }

    fn call(&mut self, head: &str, parts: Vec<Sexp>) -> Sexp {
        let mut items = vec![Sexp::sym(head)];
        items.extend(parts);
        Sexp::list(items)
    }

    fn expr(&mut self, e: &Expr) -> Sexp {
        use Expr::*;
        match e {
            Var(i) => self.var(*i),
            N0 => Sexp::sym("N0"),
            N1 => Sexp::sym("N1"),
            P1 => Sexp::sym("P1"),
            PropS => Sexp::sym("Props"),
            Bot => Sexp::sym("bot"),
            Star => Sexp::sym("star"),
            LemC => Sexp::sym("lem"),
            Meta(m) => Sexp::sym(format!("?{m}")),
            MSub { body, args, lift } => {
                let mut parts = vec![self.expr(body), Sexp::int(*lift)];
                parts.extend(args.iter().map(|a| self.expr(a)));
                self.call("msub", parts)
            }
            List(a) => {
                let a = self.expr(a);
                self.call("list", vec![a])
            }
            Sum(a, c) => {
                let parts = vec![self.expr(a), self.expr(c)];
                self.call("sum", parts)
            }
            Sigma { dom, cod } => self.dom_binder("sigma", dom, cod, vec![]),
            Pi { dom, cod } => self.dom_binder("pi", dom, cod, vec![]),
            Quot { set, rel } => {
                let s = self.expr(set);
                let r = self.bound(2, rel);
                self.call("quot", vec![s, r])
            }
            DecS(c) => {
                let c = self.expr(c);
                self.call("dec", vec![c])
            }
            And(a, c) => {
                let parts = vec![self.expr(a), self.expr(c)];
                self.call("and", parts)
            }
            Imp(a, c) => {
                let parts = vec![self.expr(a), self.expr(c)];
                self.call("imp", parts)
            }
            Or(a, c) => {
                let parts = vec![self.expr(a), self.expr(c)];
                self.call("or", parts)
            }
            Forall { dom, body } => self.dom_binder("forall", dom, body, vec![]),
            Exists { dom, body } => self.dom_binder("exists", dom, body, vec![]),
            Eq { ty, lhs, rhs } => {
                let parts = vec![self.expr(ty), self.expr(lhs), self.expr(rhs)];
                self.call("eq", parts)
            }
            Id { ty, lhs, rhs } => {
                let parts = vec![self.expr(ty), self.expr(lhs), self.expr(rhs)];
                self.call("id", parts)
            }
            N0Elim { motive, scrut } => {
                let m = self.bound(1, motive);
                let s = self.expr(scrut);
                self.call("n0-elim", vec![m, s])
            }
            N1Elim { motive, scrut, base } => {
                let m = self.bound(1, motive);
                let s = self.expr(scrut);
                let b = self.expr(base);
                self.call("n1-elim", vec![m, s, b])
            }
            Nil(a) => {
                let a = self.expr(a);
                self.call("nil", vec![a])
            }
            Cons { list, elem } => {
                let parts = vec![self.expr(list), self.expr(elem)];
                self.call("cons", parts)
            }
            ListElim { motive, scrut, base, step } => {
                let m = self.bound(1, motive);
                let s = self.expr(scrut);
                let b = self.expr(base);
                let st = self.bound(3, step);
                self.call("list-elim", vec![m, s, b, st])
            }
            Inl { other, val } => {
                let parts = vec![self.expr(other), self.expr(val)];
                self.call("inl", parts)
            }
            Inr { other, val } => {
                let parts = vec![self.expr(other), self.expr(val)];
                self.call("inr", parts)
            }
            SumElim { motive, scrut, left, right } => {
                let m = self.bound(1, motive);
                let s = self.expr(scrut);
                let l = self.bound(1, left);
                let r = self.bound(1, right);
                self.call("sum-elim", vec![m, s, l, r])
            }
            SigmaPair { dom, cod, fst, snd } => {
                let f = self.expr(fst);
                let s = self.expr(snd);
                self.dom_binder("pair", dom, cod, vec![f, s])
            }
            SigmaElim { motive, scrut, body } => {
                let m = self.bound(1, motive);
                let s = self.expr(scrut);
                let b = self.bound(2, body);
                self.call("sig-elim", vec![m, s, b])
            }
            Lam { dom, body } => self.dom_binder("lam", dom, body, vec![]),
            App { fun, arg } => {
                let parts = vec![self.expr(fun), self.expr(arg)];
                self.call("ap", parts)
            }
            QCls { quot, val } => {
                let parts = vec![self.expr(quot), self.expr(val)];
                self.call("class", parts)
            }
            QuotElim { motive, scrut, body } => {
                let m = self.bound(1, motive);
                let s = self.expr(scrut);
                let b = self.bound(1, body);
                self.call("quot-elim", vec![m, s, b])
            }
            CodeP(p) => {
                let p = self.expr(p);
                self.call("code", vec![p])
            }
            CodeS(p) => {
                let p = self.expr(p);
                self.call("codes", vec![p])
            }
            Truth(p) => {
                let p = self.expr(p);
                self.call("truth", vec![p])
            }
            BotElim { motive, prf } => {
                let parts = vec![self.expr(motive), self.expr(prf)];
                self.call("bot-elim", parts)
            }
            ImpLam { dom, body } => self.dom_binder("imp-lam", dom, body, vec![]),
            ImpApp { fun, arg } => {
                let parts = vec![self.expr(fun), self.expr(arg)];
                self.call("imp-ap", parts)
            }
            AndPair { left, right } => {
                let parts = vec![self.expr(left), self.expr(right)];
                self.call("and-pair", parts)
            }
            AndProj { side, pair } => {
                let p = self.expr(pair);
                self.call(if *side == Side::L { "and-fst" } else { "and-snd" }, vec![p])
            }
            OrInl { other, prf } => {
                let parts = vec![self.expr(other), self.expr(prf)];
                self.call("or-inl", parts)
            }
            OrInr { other, prf } => {
                let parts = vec![self.expr(other), self.expr(prf)];
                self.call("or-inr", parts)
            }
            OrElim { motive, scrut, left, right } => {
                let m = self.expr(motive);
                let s = self.expr(scrut);
                let l = self.bound(1, left);
                let r = self.bound(1, right);
                self.call("or-elim", vec![m, s, l, r])
            }
            AllLam { dom, body } => self.dom_binder("all-lam", dom, body, vec![]),
            AllApp { fun, arg } => {
                let parts = vec![self.expr(fun), self.expr(arg)];
                self.call("all-ap", parts)
            }
            ExPair { dom, fam, wit, prf } => {
                let w = self.expr(wit);
                let p = self.expr(prf);
                self.dom_binder("ex-pair", dom, fam, vec![w, p])
            }
            ExElim { motive, scrut, body } => {
                let m = self.expr(motive);
                let s = self.expr(scrut);
                let b = self.bound(2, body);
                self.call("ex-elim", vec![m, s, b])
            }
            IdRefl { ty, val } => {
                let parts = vec![self.expr(ty), self.expr(val)];
                self.call("id-refl", parts)
            }
            IdElim { fam, lhs, rhs, prf, base } => {
                let f = self.bound(1, fam);
                let parts = vec![
                    f,
                    self.expr(lhs),
                    self.expr(rhs),
                    self.expr(prf),
                    self.expr(base),
                ];
                self.call("id-elim", parts)
            }
        }
    }
}

/// Print with no names in scope; free indices print as integers.
pub fn print_expr(e: &Expr) -> String {
    Printer { names: Vec::new() }.expr(e).to_string()
}

/// Print under the given binder names (innermost last).
pub fn print_expr_named(names: &[String], e: &Expr) -> String {
    Printer { names: names.to_vec() }.expr(e).to_string()
}

/// Canonical names for the entries of a context: `x0`, `x1`, ...
pub fn ctx_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

fn ctx_sexp(ctx: &Ctx) -> Sexp {
    let mut p = Printer { names: Vec::new() };
    let mut entries = Vec::with_capacity(ctx.len());
    for ty in &ctx.0 {
        let t = p.expr(ty);
        let name = p.fresh();
        entries.push(Sexp::list(vec![Sexp::sym(name.clone()), t]));
        p.names.push(name);
    }
    Sexp::list(entries)
}

/// Print a context as `((x0 A) (x1 B) ...)`.
pub fn print_ctx(ctx: &Ctx) -> String {
    ctx_sexp(ctx).to_string()
}

fn judgement_sexp(j: &Judgement) -> Sexp {
    let ctx = j.ctx();
    let c = ctx_sexp(ctx);
    let mut p = Printer { names: ctx_names(ctx.len()) };
    match j {
        Judgement::CtxWf(_) => Sexp::list(vec![Sexp::sym("wf"), c]),
        Judgement::TypeKind { kind, ty, .. } => Sexp::list(vec![
            Sexp::sym("kind"),
            Sexp::sym(kind.name()),
            p.expr(ty),
            c,
        ]),
        Judgement::Term { term, ty, .. } => {
            Sexp::list(vec![Sexp::sym("term"), p.expr(term), p.expr(ty), c])
        }
        Judgement::TypeEq { kind, lhs, rhs, .. } => Sexp::list(vec![
            Sexp::sym("tyeq"),
            Sexp::sym(kind.name()),
            p.expr(lhs),
            p.expr(rhs),
            c,
        ]),
        Judgement::TermEq { lhs, rhs, ty, .. } => Sexp::list(vec![
            Sexp::sym("tmeq"),
            p.expr(lhs),
            p.expr(rhs),
            p.expr(ty),
            c,
        ]),
    }
}

pub fn print_judgement(j: &Judgement) -> String {
    judgement_sexp(j).to_string()
}

/// Parse a context list `((x A) (y B) ...)`; returns the context together
/// with the entry names for subsequent expression parsing.
pub fn parse_ctx_sexp(
    defs: &HashMap<String, Expr>,
    s: &Sexp,
) -> Result<(Ctx, Vec<String>), SurfaceError> {
    let items = match s.as_list() {
        Some(items) => items,
        None => return err(s.pos, "expected a context list ((x A) ...)"),
    };
    let mut parser = ExprParser::new(defs, Vec::new());
    let mut ctx = Vec::with_capacity(items.len());
    for entry in items {
        let pair = match entry.as_list() {
            Some(pair) if pair.len() == 2 => pair,
            _ => return err(entry.pos, "context entries have the shape (name TYPE)"),
        };
        let name = check_binder_name(&pair[0])?;
        let ty = parser.expr(&pair[1])?;
        ctx.push(ty);
        parser.names.push(name);
    }
    Ok((Ctx(ctx), parser.names))
}

fn parse_kind_sexp(s: &Sexp) -> Result<Kind, SurfaceError> {
    match s.as_sym().and_then(Kind::parse) {
        Some(k) => Ok(k),
        None => err(s.pos, "expected a kind: props, prop, set, or col"),
    }
}

/// Parse a judgement s-expression. The context is written last; entry names
/// are in scope in the expression parts.
pub fn parse_judgement_sexp(
    defs: &HashMap<String, Expr>,
    s: &Sexp,
) -> Result<Judgement, SurfaceError> {
    let items = match s.as_list() {
        Some(items) if !items.is_empty() => items,
        _ => return err(s.pos, "expected a judgement"),
    };
    let head = match items[0].as_sym() {
        Some(h) => h,
        None => return err(items[0].pos, "expected a judgement head"),
    };
    let args = &items[1..];
    let need = |n: usize| -> Result<(), SurfaceError> {
        if args.len() == n {
            Ok(())
        } else {
            err(s.pos, format!("'{head}' takes {n} argument(s), found {}", args.len()))
        }
    };
    let with_ctx =
        |defs: &HashMap<String, Expr>,
         ctx_s: &Sexp,
         parts: &[&Sexp]|
         -> Result<(Ctx, Vec<Expr>), SurfaceError> {
            let (ctx, names) = parse_ctx_sexp(defs, ctx_s)?;
            let mut parser = ExprParser::new(defs, names);
            let mut out = Vec::with_capacity(parts.len());
            for p in parts {
                out.push(parser.expr(p)?);
            }
            Ok((ctx, out))
        };
    match head {
        "wf" => {
            need(1)?;
            let (ctx, _) = parse_ctx_sexp(defs, &args[0])?;
            Ok(Judgement::CtxWf(ctx))
        }
        "kind" => {
            need(3)?;
            let kind = parse_kind_sexp(&args[0])?;
            let (ctx, mut parts) = with_ctx(defs, &args[2], &[&args[1]])?;
            Ok(Judgement::TypeKind { ctx, kind, ty: parts.remove(0) })
        }
        "term" => {
            need(3)?;
            let (ctx, mut parts) = with_ctx(defs, &args[2], &[&args[0], &args[1]])?;
            let term = parts.remove(0);
            let ty = parts.remove(0);
            Ok(Judgement::Term { ctx, term, ty })
        }
        "tyeq" => {
            need(4)?;
            let kind = parse_kind_sexp(&args[0])?;
            let (ctx, mut parts) = with_ctx(defs, &args[3], &[&args[1], &args[2]])?;
            let lhs = parts.remove(0);
            let rhs = parts.remove(0);
            Ok(Judgement::TypeEq { ctx, kind, lhs, rhs })
        }
        "tmeq" => {
            need(4)?;
            let (ctx, mut parts) = with_ctx(defs, &args[3], &[&args[0], &args[1], &args[2]])?;
            let lhs = parts.remove(0);
            let rhs = parts.remove(0);
            let ty = parts.remove(0);
            Ok(Judgement::TermEq { ctx, lhs, rhs, ty })
        }
        _ => err(items[0].pos, format!("unknown judgement head '{head}'")),
    }
}

/// Parse one judgement from source, with no definitions in scope.
pub fn parse_judgement(src: &str) -> Result<Judgement, SurfaceError> {
    let s = read_sexp(src)?;
    parse_judgement_sexp(no_defs(), &s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::build as b;

    fn roundtrip(e: &Expr) {
        let printed = print_expr(e);
        let back = parse_expr(&printed)
            .unwrap_or_else(|err| panic!("reparse of '{printed}' failed: {err}"));
        assert_eq!(&back, e, "round trip through '{printed}'");
    }

    #[test]
    fn atoms_and_vars_roundtrip() {
        for e in [Expr::N0, Expr::N1, Expr::P1, Expr::PropS, Expr::Bot, Expr::Star, Expr::LemC] {
            roundtrip(&e);
        }
        roundtrip(&Expr::Var(3));
    }

    #[test]
    fn binders_roundtrip() {
        let e = b::pi(Expr::N1, b::sigma(Expr::N0, b::eq(Expr::N0, b::var(0), b::var(0))));
        roundtrip(&e);
        let q = b::quot(Expr::N1, b::eq(Expr::N1, b::var(1), b::var(0)));
        roundtrip(&q);
        let le = b::listelim(
            b::list(Expr::N1),
            b::var(0),
            b::nil(Expr::N1),
            b::cons(b::var(0), b::var(1)),
        );
        roundtrip(&le);
        let sp = b::spair(Expr::N1, Expr::N0, Expr::Star, b::var(2));
        roundtrip(&sp);
        let ep = b::expair(Expr::N1, b::eq(Expr::N1, b::var(0), Expr::Star), Expr::Star, b::var(0));
        roundtrip(&ep);
        let ie = b::idelim(
            b::id(Expr::N1, b::var(0), Expr::Star),
            Expr::Star,
            Expr::Star,
            b::idrefl(Expr::N1, Expr::Star),
            b::var(1),
        );
        roundtrip(&ie);
    }

    #[test]
    fn proof_terms_roundtrip() {
        let e = b::orelim(
            Expr::Bot,
            b::var(0),
            b::impapp(b::var(2), b::var(0)),
            b::impapp(b::var(3), b::var(0)),
        );
        roundtrip(&e);
        roundtrip(&b::truth(b::and(Expr::Bot, Expr::Bot)));
        roundtrip(&b::exelim(Expr::Bot, b::var(0), b::impapp(b::var(0), b::var(1))));
    }

    #[test]
    fn schema_nodes_roundtrip() {
        let e = b::msub(b::mv(2), vec![b::var(0), b::mv(1)], 3);
        roundtrip(&e);
    }

    #[test]
    fn named_surface_resolves() {
        let e = parse_expr("(forall (x N1) (eq N1 x star))").unwrap();
        assert_eq!(e, b::forall(Expr::N1, b::eq(Expr::N1, b::var(0), Expr::Star)));
        let nested = parse_expr("(pi (x N1) (pi (y N1) (eq N1 x y)))").unwrap();
        assert_eq!(
            nested,
            b::pi(Expr::N1, b::pi(Expr::N1, b::eq(Expr::N1, b::var(1), b::var(0))))
        );
    }

    #[test]
    fn sugar_elaborates() {
        assert_eq!(parse_expr("top").unwrap(), crate::syntax::top());
        assert_eq!(
            parse_expr("(not bot)").unwrap(),
            crate::syntax::neg(Expr::Bot)
        );
        assert_eq!(
            parse_expr("(arrow N0 N1)").unwrap(),
            b::pi(Expr::N0, Expr::N1)
        );
        assert_eq!(parse_expr("(pow N1)").unwrap(), b::pi(Expr::N1, Expr::P1));
        assert_eq!(
            parse_expr("(dc 0)").unwrap(),
            crate::syntax::dc(b::var(0))
        );
        // eps unfolds through an application.
        assert_eq!(
            parse_expr("(eps star 0)").unwrap(),
            crate::syntax::dc(b::app(b::var(0), Expr::Star))
        );
        let p1 = parse_expr("(p1 (x N1) N0 0)").unwrap();
        assert_eq!(p1, b::sigelim(Expr::N1, b::var(0), b::var(1)));
    }

    #[test]
    fn shadowed_names_print_as_indices() {
        let names = vec!["a".to_string(), "a".to_string()];
        // Var(1) is the outer `a`, shadowed by the inner one.
        assert_eq!(print_expr_named(&names, &b::var(1)), "1");
        assert_eq!(print_expr_named(&names, &b::var(0)), "a");
    }

    #[test]
    fn unbound_name_errors() {
        let e = parse_expr("(eq N1 y star)");
        assert!(e.is_err());
        assert!(e.unwrap_err().msg.contains("unbound"));
    }

    #[test]
    fn reserved_binder_rejected() {
        assert!(parse_expr("(pi (list N1) N1)").is_err());
    }

    #[test]
    fn judgement_roundtrip() {
        let j = Judgement::Term {
            ctx: Ctx(vec![Expr::N1, b::list(Expr::N1)]),
            term: b::cons(b::var(0), b::var(1)),
            ty: b::list(Expr::N1),
        };
        let printed = print_judgement(&j);
        let back = parse_judgement(&printed).unwrap();
        assert_eq!(back, j);

        let wf = Judgement::CtxWf(Ctx(vec![Expr::N1]));
        assert_eq!(parse_judgement(&print_judgement(&wf)).unwrap(), wf);

        let te = Judgement::TypeEq {
            ctx: Ctx::empty(),
            kind: Kind::Set,
            lhs: Expr::N1,
            rhs: Expr::N1,
        };
        assert_eq!(parse_judgement(&print_judgement(&te)).unwrap(), te);
    }

    #[test]
    fn spec_header_judgement_parses() {
        let j = parse_judgement("(kind col Props ())").unwrap();
        assert_eq!(
            j,
            Judgement::TypeKind { ctx: Ctx::empty(), kind: Kind::Col, ty: Expr::PropS }
        );
    }

    #[test]
    fn comments_and_whitespace() {
        let e = parse_expr("; leading note\n(and bot ; inline\n bot)").unwrap();
        assert_eq!(e, b::and(Expr::Bot, Expr::Bot));
    }
}
