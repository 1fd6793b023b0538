//! Expression language shared by every theory in the family.
//!
//! One fully annotated pre-syntax covers both the intensional and the
//! extensional level; which formers are actually legal in a given theory is
//! decided by that theory's rule inventory, not here. Binding is nameless
//! (de Bruijn indices); the surface printer invents names, so structural
//! equality is exactly alpha-equivalence.
//!
//! Binder conventions, by former (the number is how many extra binders the
//! child sits under):
//!
//! | former      | children (depth)                                      |
//! |-------------|-------------------------------------------------------|
//! | Sigma/Pi    | dom (0), cod (1)                                      |
//! | Forall/Exists | dom (0), body (1)                                   |
//! | Quot        | set (0), rel (2): rel binds x (outer), y (inner)      |
//! | N0Elim      | motive (1), scrut (0)                                 |
//! | N1Elim      | motive (1), scrut (0), base (0)                       |
//! | ListElim    | motive (1), scrut (0), base (0), step (3)             |
//! | SumElim     | motive (1), scrut (0), left (1), right (1)            |
//! | SigmaElim   | motive (1), scrut (0), body (2): binds fst, snd       |
//! | QuotElim    | motive (1), scrut (0), body (1)                       |
//! | OrElim      | motive (0), scrut (0), left (1), right (1)            |
//! | ExElim      | motive (0), scrut (0), body (2): binds wit, prf       |
//! | IdElim      | family (1), lhs/rhs/prf/base (0)                      |
//!
//! ListElim's step binds, outermost first: the tail list, the head element,
//! and the recursive value. Lists are built by appending on the right:
//! `Cons(tail, elem)`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Projection side for conjunction proofs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    L,
    R,
}

/// Fully annotated pre-syntax. `Meta` and `MSub` occur only inside rule
/// schemas, never in expressions the kernel stamps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Expr {
    /// de Bruijn index; 0 is the innermost binder.
    Var(usize),

    // Sets.
    N0,
    N1,
    List(Box<Expr>),
    Sum(Box<Expr>, Box<Expr>),
    Sigma { dom: Box<Expr>, cod: Box<Expr> },
    Pi { dom: Box<Expr>, cod: Box<Expr> },
    Quot { set: Box<Expr>, rel: Box<Expr> },

    // Collections beyond the sets.
    P1,
    PropS,
    /// Decoding of a small-proposition code, the intensional level's `T(c)`.
    DecS(Box<Expr>),

    // Propositions.
    Bot,
    And(Box<Expr>, Box<Expr>),
    Imp(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
    Forall { dom: Box<Expr>, body: Box<Expr> },
    Exists { dom: Box<Expr>, body: Box<Expr> },
    /// Extensional propositional equality.
    Eq { ty: Box<Expr>, lhs: Box<Expr>, rhs: Box<Expr> },
    /// Intensional propositional equality.
    Id { ty: Box<Expr>, lhs: Box<Expr>, rhs: Box<Expr> },

    // Set-level terms.
    Star,
    N0Elim { motive: Box<Expr>, scrut: Box<Expr> },
    N1Elim { motive: Box<Expr>, scrut: Box<Expr>, base: Box<Expr> },
    /// Empty list, annotated with the element set.
    Nil(Box<Expr>),
    Cons { list: Box<Expr>, elem: Box<Expr> },
    ListElim { motive: Box<Expr>, scrut: Box<Expr>, base: Box<Expr>, step: Box<Expr> },
    /// Left injection, annotated with the right summand.
    Inl { other: Box<Expr>, val: Box<Expr> },
    /// Right injection, annotated with the left summand.
    Inr { other: Box<Expr>, val: Box<Expr> },
    SumElim { motive: Box<Expr>, scrut: Box<Expr>, left: Box<Expr>, right: Box<Expr> },
    /// Dependent pair, annotated with its Sigma family.
    SigmaPair { dom: Box<Expr>, cod: Box<Expr>, fst: Box<Expr>, snd: Box<Expr> },
    SigmaElim { motive: Box<Expr>, scrut: Box<Expr>, body: Box<Expr> },
    Lam { dom: Box<Expr>, body: Box<Expr> },
    App { fun: Box<Expr>, arg: Box<Expr> },
    /// Equivalence class of `val` in the quotient type `quot`.
    QCls { quot: Box<Expr>, val: Box<Expr> },
    QuotElim { motive: Box<Expr>, scrut: Box<Expr>, body: Box<Expr> },
    /// Code of a small proposition in P(1).
    CodeP(Box<Expr>),
    /// Code of a small proposition in Prop_s (intensional level).
    CodeS(Box<Expr>),

    // Proof terms. The extensional level has exactly one, `Truth`, annotated
    // with its proposition; the intensional level keeps tagged constructors.
    Truth(Box<Expr>),
    BotElim { motive: Box<Expr>, prf: Box<Expr> },
    ImpLam { dom: Box<Expr>, body: Box<Expr> },
    ImpApp { fun: Box<Expr>, arg: Box<Expr> },
    AndPair { left: Box<Expr>, right: Box<Expr> },
    AndProj { side: Side, pair: Box<Expr> },
    /// Left disjunction intro, annotated with the right disjunct.
    OrInl { other: Box<Expr>, prf: Box<Expr> },
    OrInr { other: Box<Expr>, prf: Box<Expr> },
    OrElim { motive: Box<Expr>, scrut: Box<Expr>, left: Box<Expr>, right: Box<Expr> },
    AllLam { dom: Box<Expr>, body: Box<Expr> },
    AllApp { fun: Box<Expr>, arg: Box<Expr> },
    /// Existence intro `<wit, prf>`, annotated with the quantified family.
    ExPair { dom: Box<Expr>, fam: Box<Expr>, wit: Box<Expr>, prf: Box<Expr> },
    ExElim { motive: Box<Expr>, scrut: Box<Expr>, body: Box<Expr> },
    IdRefl { ty: Box<Expr>, val: Box<Expr> },
    IdElim { fam: Box<Expr>, lhs: Box<Expr>, rhs: Box<Expr>, prf: Box<Expr>, base: Box<Expr> },

    /// The classical constant of the impredicative classical theory.
    LemC,

    /// Schema metavariable. Rule schemas only.
    Meta(u16),
    /// Deferred substitution node. Rule schemas only: instantiate `body`,
    /// replace its `args.len()` innermost indices by the instantiated `args`
    /// (listed outermost first), shift the remaining free indices by `lift`.
    MSub { body: Box<Expr>, args: Vec<Expr>, lift: usize },
}

impl Expr {
    /// Immediate children together with the number of binders each sits under.
    pub fn children(&self) -> Vec<(&Expr, usize)> {
        use Expr::*;
        match self {
            Var(_) | N0 | N1 | P1 | PropS | Bot | Star | LemC | Meta(_) => vec![],
            List(a) | DecS(a) | CodeP(a) | CodeS(a) | Truth(a) | Nil(a) => vec![(a, 0)],
            Sum(a, b) | And(a, b) | Imp(a, b) | Or(a, b) => vec![(a, 0), (b, 0)],
            Sigma { dom, cod } | Pi { dom, cod } => vec![(dom, 0), (cod, 1)],
            Forall { dom, body } | Exists { dom, body } => vec![(dom, 0), (body, 1)],
            Quot { set, rel } => vec![(set, 0), (rel, 2)],
            Eq { ty, lhs, rhs } | Id { ty, lhs, rhs } => vec![(ty, 0), (lhs, 0), (rhs, 0)],
            N0Elim { motive, scrut } => vec![(motive, 1), (scrut, 0)],
            N1Elim { motive, scrut, base } => vec![(motive, 1), (scrut, 0), (base, 0)],
            Cons { list, elem } => vec![(list, 0), (elem, 0)],
            ListElim { motive, scrut, base, step } => {
                vec![(motive, 1), (scrut, 0), (base, 0), (step, 3)]
            }
            Inl { other, val } | Inr { other, val } => vec![(other, 0), (val, 0)],
            SumElim { motive, scrut, left, right } => {
                vec![(motive, 1), (scrut, 0), (left, 1), (right, 1)]
            }
            SigmaPair { dom, cod, fst, snd } => {
                vec![(dom, 0), (cod, 1), (fst, 0), (snd, 0)]
            }
            SigmaElim { motive, scrut, body } => vec![(motive, 1), (scrut, 0), (body, 2)],
            Lam { dom, body } | ImpLam { dom, body } | AllLam { dom, body } => {
                vec![(dom, 0), (body, 1)]
            }
            App { fun, arg } | ImpApp { fun, arg } | AllApp { fun, arg } => {
                vec![(fun, 0), (arg, 0)]
            }
            QCls { quot, val } => vec![(quot, 0), (val, 0)],
            QuotElim { motive, scrut, body } => vec![(motive, 1), (scrut, 0), (body, 1)],
            BotElim { motive, prf } => vec![(motive, 0), (prf, 0)],
            AndPair { left, right } => vec![(left, 0), (right, 0)],
            AndProj { pair, .. } => vec![(pair, 0)],
            OrInl { other, prf } | OrInr { other, prf } => vec![(other, 0), (prf, 0)],
            OrElim { motive, scrut, left, right } => {
                vec![(motive, 0), (scrut, 0), (left, 1), (right, 1)]
            }
            ExPair { dom, fam, wit, prf } => vec![(dom, 0), (fam, 1), (wit, 0), (prf, 0)],
            ExElim { motive, scrut, body } => vec![(motive, 0), (scrut, 0), (body, 2)],
            IdRefl { ty, val } => vec![(ty, 0), (val, 0)],
            IdElim { fam, lhs, rhs, prf, base } => {
                vec![(fam, 1), (lhs, 0), (rhs, 0), (prf, 0), (base, 0)]
            }
            MSub { body, args, .. } => {
                let mut v = vec![(&**body, 0)];
                v.extend(args.iter().map(|a| (a, 0)));
                v
            }
        }
    }

    /// Rebuild this node from transformed children, in `children()` order.
    pub fn rebuild(&self, kids: Vec<Expr>) -> Expr {
        use Expr::*;
        let mut it = kids.into_iter();
        let mut next = || Box::new(it.next().expect("rebuild: missing child"));
        match self {
            Var(i) => Var(*i),
            N0 => N0,
            N1 => N1,
            P1 => P1,
            PropS => PropS,
            Bot => Bot,
            Star => Star,
            LemC => LemC,
            Meta(m) => Meta(*m),
            List(_) => List(next()),
            DecS(_) => DecS(next()),
            CodeP(_) => CodeP(next()),
            CodeS(_) => CodeS(next()),
            Truth(_) => Truth(next()),
            Nil(_) => Nil(next()),
            Sum(..) => Sum(next(), next()),
            And(..) => And(next(), next()),
            Imp(..) => Imp(next(), next()),
            Or(..) => Or(next(), next()),
            Sigma { .. } => Sigma { dom: next(), cod: next() },
            Pi { .. } => Pi { dom: next(), cod: next() },
            Forall { .. } => Forall { dom: next(), body: next() },
            Exists { .. } => Exists { dom: next(), body: next() },
            Quot { .. } => Quot { set: next(), rel: next() },
            Eq { .. } => Eq { ty: next(), lhs: next(), rhs: next() },
            Id { .. } => Id { ty: next(), lhs: next(), rhs: next() },
            N0Elim { .. } => N0Elim { motive: next(), scrut: next() },
            N1Elim { .. } => N1Elim { motive: next(), scrut: next(), base: next() },
            Cons { .. } => Cons { list: next(), elem: next() },
            ListElim { .. } => {
                ListElim { motive: next(), scrut: next(), base: next(), step: next() }
            }
            Inl { .. } => Inl { other: next(), val: next() },
            Inr { .. } => Inr { other: next(), val: next() },
            SumElim { .. } => SumElim { motive: next(), scrut: next(), left: next(), right: next() },
            SigmaPair { .. } => {
                SigmaPair { dom: next(), cod: next(), fst: next(), snd: next() }
            }
            SigmaElim { .. } => SigmaElim { motive: next(), scrut: next(), body: next() },
            Lam { .. } => Lam { dom: next(), body: next() },
            ImpLam { .. } => ImpLam { dom: next(), body: next() },
            AllLam { .. } => AllLam { dom: next(), body: next() },
            App { .. } => App { fun: next(), arg: next() },
            ImpApp { .. } => ImpApp { fun: next(), arg: next() },
            AllApp { .. } => AllApp { fun: next(), arg: next() },
            QCls { .. } => QCls { quot: next(), val: next() },
            QuotElim { .. } => QuotElim { motive: next(), scrut: next(), body: next() },
            BotElim { .. } => BotElim { motive: next(), prf: next() },
            AndPair { .. } => AndPair { left: next(), right: next() },
            AndProj { side, .. } => AndProj { side: *side, pair: next() },
            OrInl { .. } => OrInl { other: next(), prf: next() },
            OrInr { .. } => OrInr { other: next(), prf: next() },
            OrElim { .. } => OrElim { motive: next(), scrut: next(), left: next(), right: next() },
            ExPair { .. } => ExPair { dom: next(), fam: next(), wit: next(), prf: next() },
            ExElim { .. } => ExElim { motive: next(), scrut: next(), body: next() },
            IdRefl { .. } => IdRefl { ty: next(), val: next() },
            IdElim { .. } => {
                IdElim { fam: next(), lhs: next(), rhs: next(), prf: next(), base: next() }
            }
            MSub { args, lift, .. } => {
                let body = next();
                let rest: Vec<Expr> = it.by_ref().collect();
                debug_assert_eq!(rest.len(), args.len());
                return MSub { body, args: rest, lift: *lift };
            }
        }
    }

    /// Node count, counting this node.
    pub fn size(&self) -> usize {
        1 + self.children().iter().map(|(c, _)| c.size()).sum::<usize>()
    }

    /// True when some free index `i` with `i >= from` occurs.
    pub fn has_free_at_or_above(&self, from: usize) -> bool {
        match self {
            Expr::Var(i) => *i >= from,
            e => e
                .children()
                .iter()
                .any(|(c, d)| c.has_free_at_or_above(from + d)),
        }
    }

    pub fn is_closed(&self) -> bool {
        !self.has_free_at_or_above(0)
    }

    /// True when the expression contains schema-only nodes.
    pub fn has_pattern_nodes(&self) -> bool {
        matches!(self, Expr::Meta(_) | Expr::MSub { .. })
            || self.children().iter().any(|(c, _)| c.has_pattern_nodes())
    }
}

fn map_expr(e: &Expr, depth: usize, f: &mut impl FnMut(usize, usize) -> Expr) -> Expr {
    match e {
        Expr::Var(i) => f(*i, depth),
        _ => {
            let kids = e
                .children()
                .iter()
                .map(|(c, d)| map_expr(c, depth + d, f))
                .collect();
            e.rebuild(kids)
        }
    }
}

/// Shift free indices `>= cutoff` by `by`.
pub fn shift_above(e: &Expr, cutoff: usize, by: usize) -> Expr {
    map_expr(e, cutoff, &mut |i, depth| {
        if i >= depth {
            Expr::Var(i + by)
        } else {
            Expr::Var(i)
        }
    })
}

/// Shift all free indices by `by`.
pub fn shift(e: &Expr, by: usize) -> Expr {
    shift_above(e, 0, by)
}

/// Simultaneously replace the `args.len()` innermost free indices, then shift
/// what remains by `lift`.
///
/// `args` is listed outermost first: with `args = [a, b]`, free index 1 of `e`
/// becomes `a` and free index 0 becomes `b`. A remaining free index `j` (from
/// outside the replaced block) becomes `j - args.len() + lift`; the `lift`
/// accounts for the replacements living under extra binders.
pub fn subst_many_lift(e: &Expr, args: &[Expr], lift: usize) -> Expr {
    let k = args.len();
    map_expr(e, 0, &mut |i, depth| {
        if i < depth {
            Expr::Var(i)
        } else {
            let j = i - depth;
            if j < k {
                shift(&args[k - 1 - j], depth)
            } else {
                Expr::Var(j - k + lift + depth)
            }
        }
    })
}

/// Simultaneously replace the `args.len()` innermost free indices.
pub fn subst_many(e: &Expr, args: &[Expr]) -> Expr {
    subst_many_lift(e, args, 0)
}

/// Replace free index 0 by `arg` (the usual single substitution).
pub fn subst1(e: &Expr, arg: &Expr) -> Expr {
    subst_many(e, std::slice::from_ref(arg))
}

/// Replace free index `at` by `arg` and close the gap: higher free indices
/// decrease by one. `arg` is scoped outside the `at` binders it is pushed
/// under, so it is shifted on the way in. `subst_at(e, 0, a)` is `subst1`.
pub fn subst_at(e: &Expr, at: usize, arg: &Expr) -> Expr {
    map_expr(e, 0, &mut |i, depth| {
        let target = at + depth;
        if i == target {
            shift(arg, target)
        } else if i > target {
            Expr::Var(i - 1)
        } else {
            Expr::Var(i)
        }
    })
}

/// Remove `n` unused innermost indices; `None` if any of them occurs.
pub fn strengthen(e: &Expr, n: usize) -> Option<Expr> {
    if n == 0 {
        return Some(e.clone());
    }
    fn go(e: &Expr, depth: usize, n: usize) -> Option<Expr> {
        match e {
            Expr::Var(i) => {
                if *i < depth {
                    Some(Expr::Var(*i))
                } else if *i < depth + n {
                    None
                } else {
                    Some(Expr::Var(*i - n))
                }
            }
            _ => {
                let mut kids = Vec::new();
                for (c, d) in e.children() {
                    kids.push(go(c, depth + d, n)?);
                }
                Some(e.rebuild(kids))
            }
        }
    }
    go(e, 0, n)
}

/// A context: entry types listed outermost first. `Var(0)` refers to the last
/// entry; entry `i` (from the front) is scoped over the first `i` entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Ctx(pub Vec<Expr>);

impl Ctx {
    pub fn empty() -> Self {
        Ctx(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Extended context with one more entry (scoped over all of `self`).
    pub fn push(&self, ty: Expr) -> Ctx {
        let mut v = self.0.clone();
        v.push(ty);
        Ctx(v)
    }

    pub fn extend(&self, tys: &[Expr]) -> Ctx {
        let mut v = self.0.clone();
        v.extend_from_slice(tys);
        Ctx(v)
    }

    /// Type of `Var(i)`, shifted so it is well scoped in the whole context.
    pub fn lookup(&self, i: usize) -> Option<Expr> {
        let n = self.0.len();
        if i >= n {
            return None;
        }
        Some(shift(&self.0[n - 1 - i], i + 1))
    }

    /// Split off the last `k` entries; `None` when the context is shorter.
    pub fn split_last(&self, k: usize) -> Option<(Ctx, &[Expr])> {
        if self.0.len() < k {
            return None;
        }
        let cut = self.0.len() - k;
        Some((Ctx(self.0[..cut].to_vec()), &self.0[cut..]))
    }
}

impl fmt::Display for Ctx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", crate::surface::print_expr(e))?;
        }
        write!(f, "]")
    }
}

/// Errors from annotation-driven type reading.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum InferError {
    #[error("unbound variable {0}")]
    Unbound(usize),
    #[error("expression is a type or kind-level former, not a term")]
    NotATerm,
    #[error("{former} expects its {part} to be a {expected}")]
    BadAnnotation { former: &'static str, part: &'static str, expected: &'static str },
    #[error("body type of a non-dependent binder mentions its bound variable")]
    EscapingIndex,
    #[error("schema node in a checked expression")]
    PatternNode,
}

/// The type a well-annotated term wears on its sleeve. Reads annotations only:
/// no conversion, no rule applications, total on well-annotated terms.
pub fn infer_annotation(ctx: &Ctx, e: &Expr) -> Result<Expr, InferError> {
    use Expr::*;
    match e {
        Var(i) => ctx.lookup(*i).ok_or(InferError::Unbound(*i)),
        Star => Ok(N1),
        Truth(p) => Ok((**p).clone()),
        N0Elim { motive, scrut } => Ok(subst1(motive, scrut)),
        N1Elim { motive, scrut, .. } => Ok(subst1(motive, scrut)),
        Nil(a) => Ok(List(a.clone())),
        Cons { list, .. } => {
            let t = infer_annotation(ctx, list)?;
            match t {
                List(_) => Ok(t),
                _ => Err(InferError::BadAnnotation {
                    former: "Cons",
                    part: "list",
                    expected: "List",
                }),
            }
        }
        ListElim { motive, scrut, .. } => Ok(subst1(motive, scrut)),
        Inl { other, val } => Ok(Sum(Box::new(infer_annotation(ctx, val)?), other.clone())),
        Inr { other, val } => Ok(Sum(other.clone(), Box::new(infer_annotation(ctx, val)?))),
        SumElim { motive, scrut, .. } => Ok(subst1(motive, scrut)),
        SigmaPair { dom, cod, .. } => Ok(Sigma { dom: dom.clone(), cod: cod.clone() }),
        SigmaElim { motive, scrut, .. } => Ok(subst1(motive, scrut)),
        Lam { dom, body } => {
            let cod = infer_annotation(&ctx.push((**dom).clone()), body)?;
            Ok(Pi { dom: dom.clone(), cod: Box::new(cod) })
        }
        App { fun, arg } => match infer_annotation(ctx, fun)? {
            Pi { cod, .. } => Ok(subst1(&cod, arg)),
            _ => Err(InferError::BadAnnotation { former: "App", part: "fun", expected: "Pi" }),
        },
        QCls { quot, .. } => Ok((**quot).clone()),
        QuotElim { motive, scrut, .. } => Ok(subst1(motive, scrut)),
        CodeP(_) => Ok(P1),
        CodeS(_) => Ok(PropS),
        BotElim { motive, .. } => Ok((**motive).clone()),
        ImpLam { dom, body } => {
            let cod = infer_annotation(&ctx.push((**dom).clone()), body)?;
            let cod = strengthen(&cod, 1).ok_or(InferError::EscapingIndex)?;
            Ok(Imp(dom.clone(), Box::new(cod)))
        }
        ImpApp { fun, .. } => match infer_annotation(ctx, fun)? {
            Imp(_, b) => Ok(*b),
            _ => Err(InferError::BadAnnotation { former: "ImpApp", part: "fun", expected: "Imp" }),
        },
        AndPair { left, right } => Ok(And(
            Box::new(infer_annotation(ctx, left)?),
            Box::new(infer_annotation(ctx, right)?),
        )),
        AndProj { side, pair } => match infer_annotation(ctx, pair)? {
            And(a, b) => Ok(match side {
                Side::L => *a,
                Side::R => *b,
            }),
            _ => Err(InferError::BadAnnotation { former: "AndProj", part: "pair", expected: "And" }),
        },
        OrInl { other, prf } => Ok(Or(Box::new(infer_annotation(ctx, prf)?), other.clone())),
        OrInr { other, prf } => Ok(Or(other.clone(), Box::new(infer_annotation(ctx, prf)?))),
        OrElim { motive, .. } => Ok((**motive).clone()),
        AllLam { dom, body } => {
            let b = infer_annotation(&ctx.push((**dom).clone()), body)?;
            Ok(Forall { dom: dom.clone(), body: Box::new(b) })
        }
        AllApp { fun, arg } => match infer_annotation(ctx, fun)? {
            Forall { body, .. } => Ok(subst1(&body, arg)),
            _ => Err(InferError::BadAnnotation {
                former: "AllApp",
                part: "fun",
                expected: "Forall",
            }),
        },
        ExPair { dom, fam, .. } => Ok(Exists { dom: dom.clone(), body: fam.clone() }),
        ExElim { motive, .. } => Ok((**motive).clone()),
        IdRefl { ty, val } => Ok(Id { ty: ty.clone(), lhs: val.clone(), rhs: val.clone() }),
        IdElim { fam, rhs, .. } => Ok(subst1(fam, rhs)),
        LemC => Ok(lem_constant_type()),
        Meta(_) | MSub { .. } => Err(InferError::PatternNode),
        N0 | N1 | P1 | PropS | Bot | List(_) | Sum(..) | Sigma { .. } | Pi { .. }
        | Quot { .. } | DecS(_) | And(..) | Imp(..) | Or(..) | Forall { .. } | Exists { .. }
        | Eq { .. } | Id { .. } => Err(InferError::NotATerm),
    }
}

/// `not p` elaborates to `p => Bot`; the checker never sees a negation former.
pub fn neg(p: Expr) -> Expr {
    Expr::Imp(Box::new(p), Box::new(Expr::Bot))
}

/// `top` elaborates to `Bot => Bot`.
pub fn top() -> Expr {
    neg(Expr::Bot)
}

/// `iff p q` elaborates to `(p => q) /\ (q => p)`.
pub fn iff(p: Expr, q: Expr) -> Expr {
    Expr::And(
        Box::new(Expr::Imp(Box::new(p.clone()), Box::new(q.clone()))),
        Box::new(Expr::Imp(Box::new(q), Box::new(p))),
    )
}

/// Decoding of a P(1) code: `Dc(u)` elaborates to `Eq(P(1), u, [top])`.
pub fn dc(u: Expr) -> Expr {
    Expr::Eq {
        ty: Box::new(Expr::P1),
        lhs: Box::new(u),
        rhs: Box::new(Expr::CodeP(Box::new(top()))),
    }
}

/// The closed type of the classical constant: `forall x in Prop_s, T(x) \/ not T(x)`.
pub fn lem_constant_type() -> Expr {
    let dec0 = Expr::DecS(Box::new(Expr::Var(0)));
    Expr::Forall {
        dom: Box::new(Expr::PropS),
        body: Box::new(Expr::Or(Box::new(dec0.clone()), Box::new(neg(dec0)))),
    }
}

/// Short constructors for building expressions programmatically. Rule schemas
/// and derivation templates would drown in `Box::new` otherwise.
pub mod build {
    use super::{Expr, Side};

    fn b(e: Expr) -> Box<Expr> {
        Box::new(e)
    }

    pub fn var(i: usize) -> Expr {
        Expr::Var(i)
    }
    pub fn list(a: Expr) -> Expr {
        Expr::List(b(a))
    }
    pub fn sum(x: Expr, y: Expr) -> Expr {
        Expr::Sum(b(x), b(y))
    }
    pub fn sigma(dom: Expr, cod: Expr) -> Expr {
        Expr::Sigma { dom: b(dom), cod: b(cod) }
    }
    pub fn pi(dom: Expr, cod: Expr) -> Expr {
        Expr::Pi { dom: b(dom), cod: b(cod) }
    }
    pub fn quot(set: Expr, rel: Expr) -> Expr {
        Expr::Quot { set: b(set), rel: b(rel) }
    }
    pub fn dec_s(c: Expr) -> Expr {
        Expr::DecS(b(c))
    }
    pub fn and(x: Expr, y: Expr) -> Expr {
        Expr::And(b(x), b(y))
    }
    pub fn imp(x: Expr, y: Expr) -> Expr {
        Expr::Imp(b(x), b(y))
    }
    pub fn or(x: Expr, y: Expr) -> Expr {
        Expr::Or(b(x), b(y))
    }
    pub fn forall(dom: Expr, body: Expr) -> Expr {
        Expr::Forall { dom: b(dom), body: b(body) }
    }
    pub fn exists(dom: Expr, body: Expr) -> Expr {
        Expr::Exists { dom: b(dom), body: b(body) }
    }
    pub fn eq(ty: Expr, lhs: Expr, rhs: Expr) -> Expr {
        Expr::Eq { ty: b(ty), lhs: b(lhs), rhs: b(rhs) }
    }
    pub fn id(ty: Expr, lhs: Expr, rhs: Expr) -> Expr {
        Expr::Id { ty: b(ty), lhs: b(lhs), rhs: b(rhs) }
    }
    pub fn n0elim(motive: Expr, scrut: Expr) -> Expr {
        Expr::N0Elim { motive: b(motive), scrut: b(scrut) }
    }
    pub fn n1elim(motive: Expr, scrut: Expr, base: Expr) -> Expr {
        Expr::N1Elim { motive: b(motive), scrut: b(scrut), base: b(base) }
    }
    pub fn nil(a: Expr) -> Expr {
        Expr::Nil(b(a))
    }
    pub fn cons(listv: Expr, elem: Expr) -> Expr {
        Expr::Cons { list: b(listv), elem: b(elem) }
    }
    pub fn listelim(motive: Expr, scrut: Expr, base: Expr, step: Expr) -> Expr {
        Expr::ListElim { motive: b(motive), scrut: b(scrut), base: b(base), step: b(step) }
    }
    pub fn inl(other: Expr, val: Expr) -> Expr {
        Expr::Inl { other: b(other), val: b(val) }
    }
    pub fn inr(other: Expr, val: Expr) -> Expr {
        Expr::Inr { other: b(other), val: b(val) }
    }
    pub fn sumelim(motive: Expr, scrut: Expr, left: Expr, right: Expr) -> Expr {
        Expr::SumElim { motive: b(motive), scrut: b(scrut), left: b(left), right: b(right) }
    }
    pub fn spair(dom: Expr, cod: Expr, fst: Expr, snd: Expr) -> Expr {
        Expr::SigmaPair { dom: b(dom), cod: b(cod), fst: b(fst), snd: b(snd) }
    }
    pub fn sigelim(motive: Expr, scrut: Expr, body: Expr) -> Expr {
        Expr::SigmaElim { motive: b(motive), scrut: b(scrut), body: b(body) }
    }
    pub fn lam(dom: Expr, body: Expr) -> Expr {
        Expr::Lam { dom: b(dom), body: b(body) }
    }
    pub fn app(fun: Expr, arg: Expr) -> Expr {
        Expr::App { fun: b(fun), arg: b(arg) }
    }
    pub fn qcls(quotv: Expr, val: Expr) -> Expr {
        Expr::QCls { quot: b(quotv), val: b(val) }
    }
    pub fn qelim(motive: Expr, scrut: Expr, body: Expr) -> Expr {
        Expr::QuotElim { motive: b(motive), scrut: b(scrut), body: b(body) }
    }
    pub fn code_p(p: Expr) -> Expr {
        Expr::CodeP(b(p))
    }
    pub fn code_s(p: Expr) -> Expr {
        Expr::CodeS(b(p))
    }
    pub fn truth(p: Expr) -> Expr {
        Expr::Truth(b(p))
    }
    pub fn botelim(motive: Expr, prf: Expr) -> Expr {
        Expr::BotElim { motive: b(motive), prf: b(prf) }
    }
    pub fn implam(dom: Expr, body: Expr) -> Expr {
        Expr::ImpLam { dom: b(dom), body: b(body) }
    }
    pub fn impapp(fun: Expr, arg: Expr) -> Expr {
        Expr::ImpApp { fun: b(fun), arg: b(arg) }
    }
    pub fn andpair(left: Expr, right: Expr) -> Expr {
        Expr::AndPair { left: b(left), right: b(right) }
    }
    pub fn andproj(side: Side, pair: Expr) -> Expr {
        Expr::AndProj { side, pair: b(pair) }
    }
    pub fn orinl(other: Expr, prf: Expr) -> Expr {
        Expr::OrInl { other: b(other), prf: b(prf) }
    }
    pub fn orinr(other: Expr, prf: Expr) -> Expr {
        Expr::OrInr { other: b(other), prf: b(prf) }
    }
    pub fn orelim(motive: Expr, scrut: Expr, left: Expr, right: Expr) -> Expr {
        Expr::OrElim { motive: b(motive), scrut: b(scrut), left: b(left), right: b(right) }
    }
    pub fn alllam(dom: Expr, body: Expr) -> Expr {
        Expr::AllLam { dom: b(dom), body: b(body) }
    }
    pub fn allapp(fun: Expr, arg: Expr) -> Expr {
        Expr::AllApp { fun: b(fun), arg: b(arg) }
    }
    pub fn expair(dom: Expr, fam: Expr, wit: Expr, prf: Expr) -> Expr {
        Expr::ExPair { dom: b(dom), fam: b(fam), wit: b(wit), prf: b(prf) }
    }
    pub fn exelim(motive: Expr, scrut: Expr, body: Expr) -> Expr {
        Expr::ExElim { motive: b(motive), scrut: b(scrut), body: b(body) }
    }
    pub fn idrefl(ty: Expr, val: Expr) -> Expr {
        Expr::IdRefl { ty: b(ty), val: b(val) }
    }
    pub fn idelim(fam: Expr, lhs: Expr, rhs: Expr, prf: Expr, base: Expr) -> Expr {
        Expr::IdElim { fam: b(fam), lhs: b(lhs), rhs: b(rhs), prf: b(prf), base: b(base) }
    }
    /// Schema metavariable.
    pub fn mv(i: u16) -> Expr {
        Expr::Meta(i)
    }
    /// Deferred-substitution schema node.
    pub fn msub(body: Expr, args: Vec<Expr>, lift: usize) -> Expr {
        Expr::MSub { body: b(body), args, lift }
    }
    /// Shift-only schema node.
    pub fn mshift(body: Expr, lift: usize) -> Expr {
        msub(body, Vec::new(), lift)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Expr::*;

    fn v(i: usize) -> Expr {
        Var(i)
    }

    fn lam(dom: Expr, body: Expr) -> Expr {
        Lam { dom: Box::new(dom), body: Box::new(body) }
    }

    fn app(f: Expr, a: Expr) -> Expr {
        App { fun: Box::new(f), arg: Box::new(a) }
    }

    #[test]
    fn shift_respects_binders() {
        // lam y. (y, x) with x free: shifting the free side only.
        let e = lam(N1, app(v(0), v(1)));
        let s = shift(&e, 2);
        assert_eq!(s, lam(N1, app(v(0), v(3))));
    }

    #[test]
    fn subst_under_binder_shifts_replacement() {
        // (lam y. Ap(x, y))[lam z. z / x] = lam y. Ap(lam z. z, y)
        let e = lam(N1, app(v(1), v(0)));
        let t = lam(N1, v(0));
        assert_eq!(subst1(&e, &t), lam(N1, app(lam(N1, v(0)), v(0))));
    }

    #[test]
    fn subst_many_is_simultaneous() {
        // e = Ap(x1, x0), args [a=Var 5, b=Var 0]: x1 := Var 5, x0 := Var 0,
        // both interpreted in the outer scope.
        let e = app(v(1), v(0));
        let out = subst_many(&e, &[v(5), v(0)]);
        assert_eq!(out, app(v(5), v(0)));
    }

    #[test]
    fn strengthen_detects_occurrence() {
        assert_eq!(strengthen(&app(v(0), v(2)), 1), None);
        assert_eq!(strengthen(&app(v(1), v(2)), 1), Some(app(v(0), v(1))));
        assert_eq!(strengthen(&app(v(1), v(2)), 0), Some(app(v(1), v(2))));
        assert_eq!(strengthen(&lam(N1, app(v(0), v(2))), 1), Some(lam(N1, app(v(0), v(1)))));
    }

    #[test]
    fn ctx_lookup_shifts() {
        let ctx = Ctx(vec![N1, List(Box::new(v(0)))]);
        // Var(0) is the List entry; its stored form mentions Var(0) = the N1
        // entry, so the looked-up type mentions Var(1).
        assert_eq!(ctx.lookup(0), Some(List(Box::new(v(1)))));
        assert_eq!(ctx.lookup(1), Some(N1));
        assert_eq!(ctx.lookup(2), None);
    }

    #[test]
    fn infer_reads_annotations_only() {
        let ctx = Ctx(vec![N1]);
        let e = lam(N1, v(0));
        assert_eq!(
            infer_annotation(&ctx, &e),
            Ok(Pi { dom: Box::new(N1), cod: Box::new(N1) })
        );
        let t = Truth(Box::new(Bot));
        assert_eq!(infer_annotation(&ctx, &t), Ok(Bot));
        assert_eq!(infer_annotation(&ctx, &N1), Err(InferError::NotATerm));
    }

    #[test]
    fn infer_app_substitutes() {
        // f : Pi x in N1 . Eq(N1, x, star) applied to star.
        let fam = Eq { ty: Box::new(N1), lhs: Box::new(v(0)), rhs: Box::new(Star) };
        let ctx = Ctx(vec![Pi { dom: Box::new(N1), cod: Box::new(fam.clone()) }]);
        let e = app(v(0), Star);
        assert_eq!(
            infer_annotation(&ctx, &e),
            Ok(Eq { ty: Box::new(N1), lhs: Box::new(Star), rhs: Box::new(Star) })
        );
    }

    #[test]
    fn imp_lam_rejects_dependent_body() {
        // ImpLam over phi whose body proves a prop mentioning the hypothesis.
        let e = ImpLam {
            dom: Box::new(Bot),
            body: Box::new(Truth(Box::new(Eq {
                ty: Box::new(Bot),
                lhs: Box::new(v(0)),
                rhs: Box::new(v(0)),
            }))),
        };
        assert_eq!(infer_annotation(&Ctx::empty(), &e), Err(InferError::EscapingIndex));
    }
}
