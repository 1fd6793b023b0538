//! Weakening and substitution as derivation-to-derivation rewrites.
//!
//! Both operations are admissible: they never appear as rules, yet every
//! judgement derivable before the transformation stays derivable after it.
//! Here they take the stronger, computational form: the whole derivation
//! tree is rewritten, node by node, into a derivation of the transformed
//! judgement, reusing the rule skeleton and remapping every context and
//! expression. Outputs are ordinary untrusted derivations; validity is
//! established by running them through [`crate::kernel::check`] again.
//!
//! Both rewrites share the same traversal shape. Every node visited lives
//! in a context extending the region being changed, so its judgement is
//! mapped pointwise; descent stops at the nodes that form the unchanged
//! context prefix (those concluding `CtxWf` of the boundary length), which
//! are swapped for a formation of the new prefix. Nodes are memoized by
//! identity, so shared subtrees stay shared in the output.

use std::collections::{HashMap, HashSet};

use thiserror::Error;

use crate::judgement::Judgement;
use crate::kernel::{Derivation, VAR_RULE};
use crate::syntax::{shift_above, subst_at, Ctx, Expr};
use crate::theory::Kind;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum TransformError {
    #[error("position {at} exceeds the target context depth {depth}")]
    PositionPastTarget { at: usize, depth: usize },
    #[error("position {at} is not inside the derivation context (depth {depth})")]
    PositionOutOfCtx { at: usize, depth: usize },
    #[error("the derivation context does not extend the preserved prefix")]
    PrefixMismatch,
    #[error("expected a context formation conclusion")]
    NotCtxWf,
    #[error("expected a term conclusion for the substitution argument")]
    NotTerm,
    #[error("argument type differs from the context entry being substituted")]
    ArgTypeMismatch,
    #[error("a context boundary node concluded an unexpected context")]
    BoundaryMismatch,
    #[error("no formation of the preserved context prefix was found to splice in")]
    NoPrefixFormation,
    #[error("variable index remap failed at index {index}")]
    VarRemap { index: usize },
    #[error("expected a type equality for the entry being converted")]
    NotTypeEq,
}

/// Insert the entries of `target_wf` beyond position `at` into the context
/// of `body`, at position `at`.
///
/// `target_wf` must conclude `CtxWf` of a context whose first `at` entries
/// agree with the context of `body`; the remaining entries are the ones
/// inserted. Everything in `body` scoped past the insertion point is
/// shifted accordingly. With `at` equal to the full depth of `body`'s
/// context this is plain weakening by fresh innermost hypotheses.
pub fn weaken_derivation(
    body: &Derivation,
    target_wf: &Derivation,
    at: usize,
) -> Result<Derivation, TransformError> {
    let Judgement::CtxWf(target) = target_wf.concluded() else {
        return Err(TransformError::NotCtxWf);
    };
    if at > target.len() {
        return Err(TransformError::PositionPastTarget { at, depth: target.len() });
    }
    let root_ctx = body.concluded().ctx();
    if at > root_ctx.len() || root_ctx.0[..at] != target.0[..at] {
        return Err(TransformError::PrefixMismatch);
    }
    let inserted = target.len() - at;
    if inserted == 0 {
        return Ok(body.clone());
    }
    let mut w = Weakener {
        target: target.clone(),
        target_wf: target_wf.clone(),
        at,
        inserted,
        memo: HashMap::new(),
    };
    w.go(body)
}

struct Weakener {
    target: Ctx,
    target_wf: Derivation,
    at: usize,
    inserted: usize,
    memo: HashMap<usize, Derivation>,
}

impl Weakener {
    fn go(&mut self, d: &Derivation) -> Result<Derivation, TransformError> {
        if let Some(done) = self.memo.get(&d.addr()) {
            return Ok(done.clone());
        }
        let out = self.node(d)?;
        self.memo.insert(d.addr(), out.clone());
        Ok(out)
    }

    fn node(&mut self, d: &Derivation) -> Result<Derivation, TransformError> {
        if let Judgement::CtxWf(c) = d.concluded() {
            if c.len() == self.at {
                if c.0[..] != self.target.0[..self.at] {
                    return Err(TransformError::BoundaryMismatch);
                }
                return Ok(self.target_wf.clone());
            }
        }
        if d.rule() == VAR_RULE {
            if let (Judgement::Term { ctx, term: Expr::Var(i), .. }, [wf]) =
                (d.concluded(), d.children())
            {
                if ctx.len() < self.at {
                    return Err(TransformError::PrefixMismatch);
                }
                let cutoff = ctx.len() - self.at;
                let index = if *i < cutoff { *i } else { i + self.inserted };
                let wf = self.go(wf)?;
                return Derivation::var(wf, index)
                    .map_err(|_| TransformError::VarRemap { index });
            }
        }
        let children = d
            .children()
            .iter()
            .map(|c| self.go(c))
            .collect::<Result<Vec<_>, _>>()?;
        let j = self.map_judgement(d.concluded())?;
        Ok(Derivation::new(d.rule(), children, j))
    }

    fn map_judgement(&self, j: &Judgement) -> Result<Judgement, TransformError> {
        let ctx = j.ctx();
        if ctx.len() < self.at {
            return Err(TransformError::PrefixMismatch);
        }
        let mut entries = self.target.0.clone();
        for (q, entry) in ctx.0.iter().enumerate().skip(self.at) {
            entries.push(shift_above(entry, q - self.at, self.inserted));
        }
        let cutoff = ctx.len() - self.at;
        let parts = j
            .parts()
            .into_iter()
            .map(|e| shift_above(e, cutoff, self.inserted))
            .collect();
        Ok(j.rebuild(Ctx(entries), parts))
    }
}

/// Substitute `arg` for the context variable at position `at` of `body`.
///
/// `arg` must conclude a term judgement whose context is the first `at`
/// entries of `body`'s context and whose type is the entry at `at`. The
/// entry disappears from the context; every later entry and every
/// judgement expression has the substitution pushed through it, and uses
/// of the substituted variable become the argument derivation, weakened
/// into place.
pub fn subst_derivation(
    body: &Derivation,
    at: usize,
    arg: &Derivation,
) -> Result<Derivation, TransformError> {
    let Judgement::Term { ctx: arg_ctx, term, ty } = arg.concluded() else {
        return Err(TransformError::NotTerm);
    };
    let root_ctx = body.concluded().ctx();
    if at >= root_ctx.len() {
        return Err(TransformError::PositionOutOfCtx { at, depth: root_ctx.len() });
    }
    if arg_ctx.len() != at || arg_ctx.0[..] != root_ctx.0[..at] {
        return Err(TransformError::PrefixMismatch);
    }
    if &root_ctx.0[at] != ty {
        return Err(TransformError::ArgTypeMismatch);
    }
    let boundary = arg_ctx.clone().push(ty.clone());
    let prefix_wf = find_ctx_wf(&[body, arg], arg_ctx)
        .or_else(|| {
            // The empty context needs no premises to form.
            arg_ctx
                .is_empty()
                .then(|| Derivation::new("ctx-emp", vec![], Judgement::CtxWf(Ctx::empty())))
        })
        .ok_or(TransformError::NoPrefixFormation)?;
    let mut s = Substituter {
        at,
        arg: arg.clone(),
        arg_term: term.clone(),
        boundary,
        prefix_wf,
        memo: HashMap::new(),
    };
    s.go(body)
}

/// Substitute for the innermost context entry of `body`.
pub fn subst_innermost(body: &Derivation, arg: &Derivation) -> Result<Derivation, TransformError> {
    let depth = body.concluded().ctx().len();
    if depth == 0 {
        return Err(TransformError::PositionOutOfCtx { at: 0, depth });
    }
    subst_derivation(body, depth - 1, arg)
}

/// Weaken `body` by appending the entries of `target_wf` past its current
/// context depth.
pub fn weaken_append(body: &Derivation, target_wf: &Derivation) -> Result<Derivation, TransformError> {
    weaken_derivation(body, target_wf, body.concluded().ctx().len())
}

struct Substituter {
    at: usize,
    arg: Derivation,
    arg_term: Expr,
    boundary: Ctx,
    prefix_wf: Derivation,
    memo: HashMap<usize, Derivation>,
}

impl Substituter {
    fn go(&mut self, d: &Derivation) -> Result<Derivation, TransformError> {
        if let Some(done) = self.memo.get(&d.addr()) {
            return Ok(done.clone());
        }
        let out = self.node(d)?;
        self.memo.insert(d.addr(), out.clone());
        Ok(out)
    }

    fn node(&mut self, d: &Derivation) -> Result<Derivation, TransformError> {
        if let Judgement::CtxWf(c) = d.concluded() {
            if c.len() == self.at + 1 {
                if c != &self.boundary {
                    return Err(TransformError::BoundaryMismatch);
                }
                return Ok(self.prefix_wf.clone());
            }
        }
        if d.rule() == VAR_RULE {
            if let (Judgement::Term { ctx, term: Expr::Var(i), .. }, [wf]) =
                (d.concluded(), d.children())
            {
                if ctx.len() <= self.at {
                    return Err(TransformError::PositionOutOfCtx { at: self.at, depth: ctx.len() });
                }
                let cutoff = ctx.len() - 1 - self.at;
                if *i == cutoff {
                    // The substituted variable itself: splice the argument,
                    // weakened under the entries that remain inside it.
                    let wf = self.go(wf)?;
                    return weaken_derivation(&self.arg, &wf, self.at);
                }
                let index = if *i < cutoff { *i } else { i - 1 };
                let wf = self.go(wf)?;
                return Derivation::var(wf, index)
                    .map_err(|_| TransformError::VarRemap { index });
            }
        }
        let children = d
            .children()
            .iter()
            .map(|c| self.go(c))
            .collect::<Result<Vec<_>, _>>()?;
        let j = self.map_judgement(d.concluded())?;
        Ok(Derivation::new(d.rule(), children, j))
    }

    fn map_judgement(&self, j: &Judgement) -> Result<Judgement, TransformError> {
        let ctx = j.ctx();
        if ctx.len() <= self.at {
            return Err(TransformError::PositionOutOfCtx { at: self.at, depth: ctx.len() });
        }
        let mut entries = Vec::with_capacity(ctx.len() - 1);
        for (q, entry) in ctx.0.iter().enumerate() {
            match q.cmp(&self.at) {
                std::cmp::Ordering::Less => entries.push(entry.clone()),
                std::cmp::Ordering::Equal => {}
                std::cmp::Ordering::Greater => {
                    entries.push(subst_at(entry, q - 1 - self.at, &self.arg_term))
                }
            }
        }
        let cutoff = ctx.len() - 1 - self.at;
        let parts = j
            .parts()
            .into_iter()
            .map(|e| subst_at(e, cutoff, &self.arg_term))
            .collect();
        Ok(j.rebuild(Ctx(entries), parts))
    }
}

/// Replace the context entry at position `at` of `body` with the right-hand
/// side of `entry_eq`, a type equality derived over the first `at` entries.
///
/// Judgement parts are untouched: only the stored context entry changes.
/// Every use of the converted variable is re-typed by a `conv` step along
/// the weakened, symmetrized equality, so each occurrence keeps the type it
/// had, and no other expression in the derivation mentions the entry.
pub fn convert_entry(
    body: &Derivation,
    at: usize,
    entry_eq: &Derivation,
) -> Result<Derivation, TransformError> {
    let Judgement::TypeEq { ctx: eq_ctx, kind, lhs, rhs } = entry_eq.concluded() else {
        return Err(TransformError::NotTypeEq);
    };
    let root_ctx = body.concluded().ctx();
    if at >= root_ctx.len() {
        return Err(TransformError::PositionOutOfCtx { at, depth: root_ctx.len() });
    }
    if eq_ctx.len() != at || eq_ctx.0[..] != root_ctx.0[..at] {
        return Err(TransformError::PrefixMismatch);
    }
    if &root_ctx.0[at] != lhs {
        return Err(TransformError::ArgTypeMismatch);
    }
    if lhs == rhs {
        return Ok(body.clone());
    }
    let boundary = Ctx(eq_ctx.0.clone()).push(lhs.clone());
    let mut c = Converter {
        at,
        kind: *kind,
        lhs: lhs.clone(),
        rhs: rhs.clone(),
        eq: entry_eq.clone(),
        boundary,
        memo: HashMap::new(),
    };
    c.go(body)
}

struct Converter {
    at: usize,
    kind: Kind,
    lhs: Expr,
    rhs: Expr,
    eq: Derivation,
    boundary: Ctx,
    memo: HashMap<usize, Derivation>,
}

impl Converter {
    fn go(&mut self, d: &Derivation) -> Result<Derivation, TransformError> {
        if let Some(done) = self.memo.get(&d.addr()) {
            return Ok(done.clone());
        }
        let out = self.node(d)?;
        self.memo.insert(d.addr(), out.clone());
        Ok(out)
    }

    fn node(&mut self, d: &Derivation) -> Result<Derivation, TransformError> {
        if let Judgement::CtxWf(c) = d.concluded() {
            if c.len() == self.at + 1 {
                if c != &self.boundary {
                    return Err(TransformError::BoundaryMismatch);
                }
                let prefix = Ctx(self.boundary.0[..self.at].to_vec());
                let form = Derivation::new(
                    "tyeq-wit-r",
                    vec![self.eq.clone()],
                    Judgement::TypeKind {
                        ctx: prefix.clone(),
                        kind: self.kind,
                        ty: self.rhs.clone(),
                    },
                );
                return Ok(Derivation::new(
                    "ctx-ext",
                    vec![form],
                    Judgement::CtxWf(prefix.push(self.rhs.clone())),
                ));
            }
        }
        if d.rule() == VAR_RULE {
            if let (Judgement::Term { ctx, term: Expr::Var(i), .. }, [wf]) =
                (d.concluded(), d.children())
            {
                if ctx.len() <= self.at {
                    return Err(TransformError::PositionOutOfCtx { at: self.at, depth: ctx.len() });
                }
                let cutoff = ctx.len() - 1 - self.at;
                let wf = self.go(wf)?;
                let v = Derivation::var(wf.clone(), *i)
                    .map_err(|_| TransformError::VarRemap { index: *i })?;
                if *i != cutoff {
                    return Ok(v);
                }
                // The converted variable: the rebuilt node types it at the
                // new entry, so convert back along the symmetrized equality.
                let weq = weaken_derivation(&self.eq, &wf, self.at)?;
                let Judgement::TypeEq { ctx: wctx, kind, lhs: wl, rhs: wr } = weq.concluded()
                else {
                    return Err(TransformError::NotTypeEq);
                };
                let sym = Derivation::new(
                    "sym-ty",
                    vec![weq.clone()],
                    Judgement::TypeEq {
                        ctx: wctx.clone(),
                        kind: *kind,
                        lhs: wr.clone(),
                        rhs: wl.clone(),
                    },
                );
                let restored = Judgement::Term {
                    ctx: wctx.clone(),
                    term: Expr::Var(*i),
                    ty: wl.clone(),
                };
                return Ok(Derivation::new("conv", vec![v, sym], restored));
            }
        }
        let children = d
            .children()
            .iter()
            .map(|c| self.go(c))
            .collect::<Result<Vec<_>, _>>()?;
        let j = self.map_judgement(d.concluded())?;
        Ok(Derivation::new(d.rule(), children, j))
    }

    fn map_judgement(&self, j: &Judgement) -> Result<Judgement, TransformError> {
        let ctx = j.ctx();
        if ctx.len() <= self.at {
            return Err(TransformError::PositionOutOfCtx { at: self.at, depth: ctx.len() });
        }
        if ctx.0[self.at] != self.lhs {
            return Err(TransformError::BoundaryMismatch);
        }
        let mut entries = ctx.0.clone();
        entries[self.at] = self.rhs.clone();
        Ok(j.with_ctx(Ctx(entries)))
    }
}

/// Find any node in the given derivations concluding that `ctx` is well
/// formed. Used to splice the preserved prefix at the boundary.
pub(crate) fn find_ctx_wf(roots: &[&Derivation], ctx: &Ctx) -> Option<Derivation> {
    let want = Judgement::CtxWf(ctx.clone());
    let mut seen = HashSet::new();
    let mut stack: Vec<Derivation> = roots.iter().map(|d| (*d).clone()).collect();
    while let Some(d) = stack.pop() {
        if !seen.insert(d.addr()) {
            continue;
        }
        if d.concluded() == &want {
            return Some(d);
        }
        stack.extend(d.children().iter().cloned());
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::check;
    use crate::rules::rules_of;
    use crate::syntax::build::*;
    use crate::theory::TheoryDesc;

    fn step(t: &TheoryDesc, name: &str, children: Vec<Derivation>) -> Derivation {
        Derivation::step(&rules_of(t), name, children).unwrap()
    }

    /// ctx-emp, then alternating formation and extension for each entry
    /// former, returning the final context formation.
    fn wf_chain(t: &TheoryDesc, formers: &[&str]) -> Derivation {
        let mut wf = step(t, "ctx-emp", vec![]);
        for f in formers {
            let ty = step(t, f, vec![wf.clone()]);
            wf = step(t, "ctx-ext", vec![ty]);
        }
        wf
    }

    #[test]
    fn weaken_appends_and_shifts() {
        let t = TheoryDesc::emtt();
        let wf1 = wf_chain(&t, &["F-N1"]);
        let v0 = Derivation::var(wf1.clone(), 0).unwrap();
        let list = step(&t, "F-List", vec![step(&t, "F-N1", vec![wf1])]);
        let wf2 = step(&t, "ctx-ext", vec![list]);
        let out = weaken_append(&v0, &wf2).unwrap();
        assert_eq!(
            out.concluded(),
            &Judgement::Term {
                ctx: Ctx::empty().push(Expr::N1).push(list_e()),
                term: var(1),
                ty: Expr::N1,
            }
        );
        check(&t, &out).unwrap();
    }

    fn list_e() -> Expr {
        list(Expr::N1)
    }

    #[test]
    fn weaken_inserts_mid_context() {
        let t = TheoryDesc::emtt();
        let wf2 = wf_chain(&t, &["F-N1", "F-N1"]);
        let outer = Derivation::var(wf2.clone(), 1).unwrap();
        let inner = Derivation::var(wf2, 0).unwrap();
        let wf1 = wf_chain(&t, &["F-N1"]);
        let target = step(&t, "ctx-ext", vec![
            step(&t, "F-List", vec![step(&t, "F-N1", vec![wf1])]),
        ]);
        let expect_ctx = Ctx::empty().push(Expr::N1).push(list_e()).push(Expr::N1);
        let out = weaken_derivation(&outer, &target, 1).unwrap();
        assert_eq!(
            out.concluded(),
            &Judgement::Term { ctx: expect_ctx.clone(), term: var(2), ty: Expr::N1 }
        );
        check(&t, &out).unwrap();
        let out = weaken_derivation(&inner, &target, 1).unwrap();
        assert_eq!(
            out.concluded(),
            &Judgement::Term { ctx: expect_ctx, term: var(0), ty: Expr::N1 }
        );
        check(&t, &out).unwrap();
    }

    #[test]
    fn subst_replaces_use_sites_with_the_argument() {
        let t = TheoryDesc::emtt();
        let wf1 = wf_chain(&t, &["F-N1"]);
        let v0 = Derivation::var(wf1, 0).unwrap();
        let star = step(&t, "I-N1", vec![step(&t, "ctx-emp", vec![])]);
        let out = subst_innermost(&v0, &star).unwrap();
        assert_eq!(
            out.concluded(),
            &Judgement::Term { ctx: Ctx::empty(), term: Expr::Star, ty: Expr::N1 }
        );
        check(&t, &out).unwrap();
    }

    #[test]
    fn subst_mid_context_keeps_inner_entries() {
        let t = TheoryDesc::emtt();
        // ctx [N1, List N1], substitute star for position 0.
        let wf1 = wf_chain(&t, &["F-N1"]);
        let list = step(&t, "F-List", vec![step(&t, "F-N1", vec![wf1])]);
        let wf2 = step(&t, "ctx-ext", vec![list]);
        let star = step(&t, "I-N1", vec![step(&t, "ctx-emp", vec![])]);

        let keep = Derivation::var(wf2.clone(), 0).unwrap();
        let out = subst_derivation(&keep, 0, &star).unwrap();
        assert_eq!(
            out.concluded(),
            &Judgement::Term {
                ctx: Ctx::empty().push(list_e()),
                term: var(0),
                ty: list_e(),
            }
        );
        check(&t, &out).unwrap();

        let used = Derivation::var(wf2, 1).unwrap();
        let out = subst_derivation(&used, 0, &star).unwrap();
        assert_eq!(
            out.concluded(),
            &Judgement::Term { ctx: Ctx::empty().push(list_e()), term: Expr::Star, ty: Expr::N1 }
        );
        check(&t, &out).unwrap();
    }

    #[test]
    fn subst_pushes_through_dependent_entries() {
        let t = TheoryDesc::mtt();
        // ctx [Prop_s, T(x0)], substitute the code of falsum for x0.
        let props = step(&t, "F-Props", vec![step(&t, "ctx-emp", vec![])]);
        let wf1 = step(&t, "ctx-ext", vec![props]);
        let dec = step(&t, "E-Props", vec![Derivation::var(wf1.clone(), 0).unwrap()]);
        let wf2 = step(&t, "ctx-ext", vec![dec]);
        let v0 = Derivation::var(wf2, 0).unwrap();
        let bot_code = step(&t, "I-Props", vec![step(&t, "F-Bot", vec![
            step(&t, "ctx-emp", vec![]),
        ])]);
        let out = subst_derivation(&v0, 0, &bot_code).unwrap();
        assert_eq!(
            out.concluded(),
            &Judgement::Term {
                ctx: Ctx::empty().push(dec_s(code_s(Expr::Bot))),
                term: var(0),
                ty: dec_s(code_s(Expr::Bot)),
            }
        );
        check(&t, &out).unwrap();
    }

    #[test]
    fn argument_type_mismatch_is_rejected() {
        let t = TheoryDesc::emtt();
        let list = step(&t, "F-List", vec![step(&t, "F-N1", vec![
            step(&t, "ctx-emp", vec![]),
        ])]);
        let wf = step(&t, "ctx-ext", vec![list]);
        let v0 = Derivation::var(wf, 0).unwrap();
        let star = step(&t, "I-N1", vec![step(&t, "ctx-emp", vec![])]);
        assert_eq!(
            subst_innermost(&v0, &star).unwrap_err(),
            TransformError::ArgTypeMismatch
        );
    }

    #[test]
    fn weaken_prefix_mismatch_is_rejected() {
        let t = TheoryDesc::emtt();
        let wf_n1 = wf_chain(&t, &["F-N1"]);
        let wf_n0 = wf_chain(&t, &["F-N0"]);
        let v0 = Derivation::var(wf_n1, 0).unwrap();
        assert_eq!(
            weaken_derivation(&v0, &wf_n0, 1).unwrap_err(),
            TransformError::PrefixMismatch
        );
    }

    #[test]
    fn sharing_survives_transformation() {
        let t = TheoryDesc::emtt();
        let wf1 = wf_chain(&t, &["F-N1"]);
        let n1 = step(&t, "F-N1", vec![wf1.clone()]);
        let mut d = n1.clone();
        for _ in 0..20 {
            let wfx = step(&t, "ctx-ext", vec![d.clone()]);
            let inner = step(&t, "F-N1", vec![wfx]);
            d = step(&t, "F-Sigma", vec![d.clone(), inner]);
        }
        let star = step(&t, "I-N1", vec![step(&t, "ctx-emp", vec![])]);
        let before = d.node_count();
        let out = subst_innermost(&d, &star).unwrap();
        check(&t, &out).unwrap();
        assert!(out.node_count() <= before + star.node_count() + 4);
    }

    #[test]
    fn convert_entry_swaps_the_entry_and_keeps_types() {
        let t = TheoryDesc::emtt();
        let emp = step(&t, "ctx-emp", vec![]);
        let n1 = step(&t, "F-N1", vec![emp.clone()]);
        let star = step(&t, "I-N1", vec![emp]);
        let wf_n1 = step(&t, "ctx-ext", vec![n1.clone()]);
        let motive = step(&t, "F-N1", vec![wf_n1]);
        let elim = step(&t, "E-N1", vec![motive.clone(), star.clone(), star.clone()]);
        let beta = step(&t, "C-N1", vec![motive, star.clone()]);
        // eq(N1, n1elim(N1, star, star), star) = eq(N1, star, star) : props.
        let refl_n1 = step(&t, "refl-ty", vec![n1.clone()]);
        let refl_star = step(&t, "refl-tm", vec![star.clone()]);
        let tyeq = step(&t, "cong-Eq-s", vec![refl_n1, beta, refl_star]);
        let lhs_form = step(&t, "F-Eq-s", vec![n1, elim, star]);
        let body = Derivation::var(step(&t, "ctx-ext", vec![lhs_form]), 0).unwrap();
        let before = body.concluded().clone();
        let out = convert_entry(&body, 0, &tyeq).unwrap();
        let Judgement::TypeEq { lhs, rhs, .. } = tyeq.concluded() else { unreachable!() };
        let Judgement::Term { ctx, term, ty } = out.concluded() else { unreachable!() };
        let Judgement::Term { term: t0, ty: ty0, .. } = &before else { unreachable!() };
        assert_eq!(&ctx.0[0], rhs);
        assert_eq!(term, t0);
        // The use site keeps its original type, converted back via `conv`.
        assert_eq!(ty, ty0);
        assert_eq!(ty, &shift_above(lhs, 0, 1));
        check(&t, &out).unwrap();
    }
}
