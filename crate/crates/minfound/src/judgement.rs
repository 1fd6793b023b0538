//! The five judgement forms shared by the checker and every translation.
//!
//! A judgement carries its whole context. Contexts are plain entry lists
//! (`syntax::Ctx`), so two judgements are equal exactly when they are
//! alpha-equal as written.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::syntax::{Ctx, Expr};
use crate::theory::Kind;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Judgement {
    /// The context is well formed.
    CtxWf(Ctx),
    /// `ty` is a type of the given kind in `ctx`.
    TypeKind { ctx: Ctx, kind: Kind, ty: Expr },
    /// `term` inhabits `ty` in `ctx`.
    Term { ctx: Ctx, term: Expr, ty: Expr },
    /// `lhs` and `rhs` are equal types of the given kind in `ctx`.
    TypeEq { ctx: Ctx, kind: Kind, lhs: Expr, rhs: Expr },
    /// `lhs` and `rhs` are equal elements of `ty` in `ctx`.
    TermEq { ctx: Ctx, lhs: Expr, rhs: Expr, ty: Expr },
}

impl Judgement {
    pub fn ctx(&self) -> &Ctx {
        match self {
            Judgement::CtxWf(c) => c,
            Judgement::TypeKind { ctx, .. }
            | Judgement::Term { ctx, .. }
            | Judgement::TypeEq { ctx, .. }
            | Judgement::TermEq { ctx, .. } => ctx,
        }
    }

    /// Same judgement with the context replaced.
    pub fn with_ctx(&self, ctx: Ctx) -> Judgement {
        let mut j = self.clone();
        match &mut j {
            Judgement::CtxWf(c) => *c = ctx,
            Judgement::TypeKind { ctx: c, .. }
            | Judgement::Term { ctx: c, .. }
            | Judgement::TypeEq { ctx: c, .. }
            | Judgement::TermEq { ctx: c, .. } => *c = ctx,
        }
        j
    }

    /// The expressions scoped in the full context (context entries excluded).
    pub fn parts(&self) -> Vec<&Expr> {
        match self {
            Judgement::CtxWf(_) => vec![],
            Judgement::TypeKind { ty, .. } => vec![ty],
            Judgement::Term { term, ty, .. } => vec![term, ty],
            Judgement::TypeEq { lhs, rhs, .. } => vec![lhs, rhs],
            Judgement::TermEq { lhs, rhs, ty, .. } => vec![lhs, rhs, ty],
        }
    }

    /// Rebuild from transformed parts, in `parts()` order, with a new context.
    pub fn rebuild(&self, ctx: Ctx, parts: Vec<Expr>) -> Judgement {
        let mut it = parts.into_iter();
        let mut next = || it.next().expect("rebuild: missing part");
        match self {
            Judgement::CtxWf(_) => Judgement::CtxWf(ctx),
            Judgement::TypeKind { kind, .. } => {
                Judgement::TypeKind { ctx, kind: *kind, ty: next() }
            }
            Judgement::Term { .. } => Judgement::Term { ctx, term: next(), ty: next() },
            Judgement::TypeEq { kind, .. } => {
                Judgement::TypeEq { ctx, kind: *kind, lhs: next(), rhs: next() }
            }
            Judgement::TermEq { .. } => {
                Judgement::TermEq { ctx, lhs: next(), rhs: next(), ty: next() }
            }
        }
    }

    /// True when some expression in the judgement (context included) contains
    /// schema-only nodes.
    pub fn has_pattern_nodes(&self) -> bool {
        self.ctx().0.iter().any(Expr::has_pattern_nodes)
            || self.parts().iter().any(|e| e.has_pattern_nodes())
    }
}

impl fmt::Display for Judgement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::surface::print_judgement(self))
    }
}
