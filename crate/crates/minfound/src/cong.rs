//! Substitution congruence: pushing one term equality through a family.
//!
//! Given `G |- a = b : X` and an expression scoped over `G.x : X`, the two
//! instances of the expression at `a` and at `b` are equal, and the proof is
//! a derivation assembled from the per-former congruence rules. [`fam_cong`]
//! produces the type equality for a type family, [`term_fam_cong`] the term
//! equality for a term family. [`iff_of_tyeq`] turns any propositional type
//! equality into a logical equivalence witness, the form the canonical
//! isomorphisms store.
//!
//! The recursion is by expression, not by derivation: at each former the
//! instances of the subterms are compared, equal instances close with
//! reflexivity, and only the spine that actually contains the substituted
//! variable is expanded. Formations and typings for the reflexive leaves
//! come from the synthesizer, so unusual leaves (proof witnesses in
//! particular) must be registered with the [`Taut`] before the call.

use thiserror::Error;

use crate::judgement::Judgement;
use crate::kernel::Derivation;
use crate::syntax::{shift, subst_at, subst_many_lift, Ctx, Expr};
use crate::taut::{Taut, TautError};
use crate::theory::Kind;
use crate::transform::{weaken_append, TransformError};

#[derive(Debug, Error)]
pub enum CongError {
    #[error(transparent)]
    Taut(#[from] TautError),
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error("expected a term equality over the base context")]
    NotTermEq,
    #[error("expected {want}")]
    Shape { want: &'static str },
    #[error("congruence through `{0}` is not supported")]
    Unsupported(&'static str),
}

/// From `eq : G |- a = b : X` and a type `fam` scoped over `G.x : X`,
/// derive `G |- fam[a/x] = fam[b/x]`.
pub fn fam_cong(taut: &mut Taut, fam: &Expr, eq: &Derivation) -> Result<Derivation, CongError> {
    let c = Cong::start(eq)?;
    let base = c.base.clone();
    c.ty(taut, fam, 0, &base)
}

/// From `eq : G |- a = b : X` and a term `fam` scoped over `G.x : X`,
/// derive `G |- fam[a/x] = fam[b/x] : T[a/x]`.
pub fn term_fam_cong(
    taut: &mut Taut,
    fam: &Expr,
    eq: &Derivation,
) -> Result<Derivation, CongError> {
    let c = Cong::start(eq)?;
    let base = c.base.clone();
    c.tm(taut, fam, 0, &base)
}

/// Turn `G |- phi = psi : kind` into a proof of `phi <-> psi`, by converting
/// a hypothetical proof of each side along the equality.
pub fn iff_of_tyeq(taut: &mut Taut, eq: &Derivation) -> Result<Derivation, CongError> {
    let Judgement::TypeEq { ctx, lhs, rhs, .. } = eq.concluded() else {
        return Err(CongError::Shape { want: "a type equality" });
    };
    let (ctx, lhs, rhs) = (ctx.clone(), lhs.clone(), rhs.clone());
    let lf = taut.step("tyeq-wit-l", vec![eq.clone()])?;
    let rf = taut.step("tyeq-wit-r", vec![eq.clone()])?;
    taut.assume(lf.clone());
    taut.assume(rf.clone());
    let fwd = {
        let cl = ctx.clone().push(lhs.clone());
        let h = taut.hyp(&cl, 0)?;
        let wf = taut.wf(&cl)?;
        let weq = weaken_append(eq, &wf)?;
        let body = taut.step("conv", vec![h, weq])?;
        taut.imp_intro(&rf, &body)?
    };
    let bwd = {
        let cr = ctx.push(rhs);
        let h = taut.hyp(&cr, 0)?;
        let wf = taut.wf(&cr)?;
        let sym = taut.step("sym-ty", vec![eq.clone()])?;
        let wsym = weaken_append(&sym, &wf)?;
        let body = taut.step("conv", vec![h, wsym])?;
        taut.imp_intro(&lf, &body)?
    };
    Ok(taut.and_intro(&fwd, &bwd)?)
}

/// Raise a type equality to an including kind along the `incl-*-eq` rules.
pub(crate) fn lift_eq(
    taut: &mut Taut,
    d: Derivation,
    want: Kind,
) -> Result<Derivation, CongError> {
    let found = eq_kind(&d)?;
    if found == want {
        return Ok(d);
    }
    let steps: &[&str] = match (found, want) {
        (Kind::PropS, Kind::Prop) => &["incl-props-prop-eq"],
        (Kind::PropS, Kind::Set) => &["incl-props-set-eq"],
        (Kind::PropS, Kind::Col) => &["incl-props-set-eq", "incl-set-col-eq"],
        (Kind::Prop, Kind::Col) => &["incl-prop-col-eq"],
        (Kind::Set, Kind::Col) => &["incl-set-col-eq"],
        _ => return Err(CongError::Shape { want: "an equality at an includable kind" }),
    };
    let mut d = d;
    for s in steps {
        d = taut.step(s, vec![d])?;
    }
    Ok(d)
}

fn eq_kind(d: &Derivation) -> Result<Kind, CongError> {
    match d.concluded() {
        Judgement::TypeEq { kind, .. } => Ok(*kind),
        _ => Err(CongError::Shape { want: "a type equality" }),
    }
}

fn eq_ty(d: &Derivation) -> Result<&Expr, CongError> {
    match d.concluded() {
        Judgement::TermEq { ty, .. } => Ok(ty),
        _ => Err(CongError::Shape { want: "a term equality" }),
    }
}

/// The type-level kind a component must be raised to so that siblings share
/// one bound class variable: `Set` when possible, `Col` otherwise.
fn join_type_kind(a: Kind, b: Kind) -> Kind {
    let small = |k| matches!(k, Kind::PropS | Kind::Set);
    if small(a) && small(b) {
        Kind::Set
    } else {
        Kind::Col
    }
}

struct Cong {
    base: Ctx,
    a: Expr,
    b: Expr,
    eq: Derivation,
}

impl Cong {
    fn start(eq: &Derivation) -> Result<Cong, CongError> {
        let Judgement::TermEq { ctx, lhs, rhs, .. } = eq.concluded() else {
            return Err(CongError::NotTermEq);
        };
        Ok(Cong {
            base: ctx.clone(),
            a: lhs.clone(),
            b: rhs.clone(),
            eq: eq.clone(),
        })
    }

    fn inst_l(&self, e: &Expr, depth: usize) -> Expr {
        subst_at(e, depth, &self.a)
    }

    fn inst_r(&self, e: &Expr, depth: usize) -> Expr {
        subst_at(e, depth, &self.b)
    }

    /// The base equality weakened into `lctx`, an extension of the base
    /// context by instantiated binder entries.
    fn weak_eq(&self, taut: &mut Taut, lctx: &Ctx) -> Result<Derivation, CongError> {
        if lctx == &self.base {
            return Ok(self.eq.clone());
        }
        let wf = taut.wf(lctx)?;
        Ok(weaken_append(&self.eq, &wf)?)
    }

    fn ty(
        &self,
        taut: &mut Taut,
        e: &Expr,
        depth: usize,
        lctx: &Ctx,
    ) -> Result<Derivation, CongError> {
        let l = self.inst_l(e, depth);
        if l == self.inst_r(e, depth) {
            let f = taut.form(lctx, &l)?;
            return Ok(taut.step("refl-ty", vec![f])?);
        }
        match e {
            Expr::List(el) => {
                let ce = self.ty(taut, el, depth, lctx)?;
                let ce = lift_eq(taut, ce, Kind::Set)?;
                Ok(taut.step("cong-List", vec![ce])?)
            }
            Expr::Sum(sa, sb) => {
                let ae = self.ty(taut, sa, depth, lctx)?;
                let ae = lift_eq(taut, ae, Kind::Set)?;
                let be = self.ty(taut, sb, depth, lctx)?;
                let be = lift_eq(taut, be, Kind::Set)?;
                Ok(taut.step("cong-Sum", vec![ae, be])?)
            }
            Expr::Sigma { dom, cod } => {
                let de = self.ty(taut, dom, depth, lctx)?;
                let lctx2 = lctx.clone().push(self.inst_l(dom, depth));
                let ce = self.ty(taut, cod, depth + 1, &lctx2)?;
                let want = join_type_kind(eq_kind(&de)?, eq_kind(&ce)?);
                let de = lift_eq(taut, de, want)?;
                let ce = lift_eq(taut, ce, want)?;
                Ok(taut.step("cong-Sigma", vec![de, ce])?)
            }
            Expr::Pi { dom, cod } => {
                let de = self.ty(taut, dom, depth, lctx)?;
                let de = lift_eq(taut, de, Kind::Set)?;
                let lctx2 = lctx.clone().push(self.inst_l(dom, depth));
                let ce = self.ty(taut, cod, depth + 1, &lctx2)?;
                let want = join_type_kind(Kind::Set, eq_kind(&ce)?);
                let ce = lift_eq(taut, ce, want)?;
                Ok(taut.step("cong-Pi", vec![de, ce])?)
            }
            Expr::Quot { set, rel } => {
                let de = self.ty(taut, set, depth, lctx)?;
                let de = lift_eq(taut, de, Kind::Set)?;
                let s_l = self.inst_l(set, depth);
                let lctx2 = lctx.clone().push(s_l.clone()).push(shift(&s_l, 1));
                let re = self.ty(taut, rel, depth + 2, &lctx2)?;
                Ok(taut.step("cong-Quot", vec![de, re])?)
            }
            Expr::And(p, q) | Expr::Imp(p, q) | Expr::Or(p, q) => {
                let rule = match e {
                    Expr::And(..) => "cong-And",
                    Expr::Imp(..) => "cong-Imp",
                    _ => "cong-Or",
                };
                let pe = self.ty(taut, p, depth, lctx)?;
                let qe = self.ty(taut, q, depth, lctx)?;
                let want = match (eq_kind(&pe)?, eq_kind(&qe)?) {
                    (Kind::PropS, Kind::PropS) => Kind::PropS,
                    _ => Kind::Prop,
                };
                let pe = lift_eq(taut, pe, want)?;
                let qe = lift_eq(taut, qe, want)?;
                Ok(taut.step(rule, vec![pe, qe])?)
            }
            Expr::Forall { dom, body } | Expr::Exists { dom, body } => {
                let is_all = matches!(e, Expr::Forall { .. });
                let de = self.ty(taut, dom, depth, lctx)?;
                let lctx2 = lctx.clone().push(self.inst_l(dom, depth));
                let be = self.ty(taut, body, depth + 1, &lctx2)?;
                let dk = eq_kind(&de)?;
                let bk = eq_kind(&be)?;
                if bk == Kind::PropS && matches!(dk, Kind::PropS | Kind::Set) {
                    let de = lift_eq(taut, de, Kind::Set)?;
                    let rule = if is_all { "cong-All-s" } else { "cong-Ex-s" };
                    Ok(taut.step(rule, vec![de, be])?)
                } else if bk == Kind::PropS && is_all && taut.has_rule("cong-All-imp") {
                    let de = lift_eq(taut, de, Kind::Col)?;
                    Ok(taut.step("cong-All-imp", vec![de, be])?)
                } else {
                    let de = lift_eq(taut, de, Kind::Col)?;
                    let be = lift_eq(taut, be, Kind::Prop)?;
                    let rule = if is_all { "cong-All" } else { "cong-Ex" };
                    Ok(taut.step(rule, vec![de, be])?)
                }
            }
            Expr::Eq { ty, lhs, rhs } => {
                let le = self.tm(taut, lhs, depth, lctx)?;
                let re = self.tm(taut, rhs, depth, lctx)?;
                if **ty == Expr::P1 {
                    return Ok(taut.step("cong-Eq-P1", vec![le, re])?);
                }
                let te = self.ty(taut, ty, depth, lctx)?;
                if matches!(eq_kind(&te)?, Kind::PropS | Kind::Set) {
                    let te = lift_eq(taut, te, Kind::Set)?;
                    Ok(taut.step("cong-Eq-s", vec![te, le, re])?)
                } else {
                    let te = lift_eq(taut, te, Kind::Col)?;
                    Ok(taut.step("cong-Eq", vec![te, le, re])?)
                }
            }
            _ => Err(CongError::Unsupported(tag(e))),
        }
    }

    fn tm(
        &self,
        taut: &mut Taut,
        e: &Expr,
        depth: usize,
        lctx: &Ctx,
    ) -> Result<Derivation, CongError> {
        let l = self.inst_l(e, depth);
        if l == self.inst_r(e, depth) {
            let d = taut.term(lctx, &l)?;
            return Ok(taut.step("refl-tm", vec![d])?);
        }
        match e {
            Expr::Var(j) => {
                if *j == depth {
                    self.weak_eq(taut, lctx)
                } else {
                    // A variable other than the substituted one; both
                    // instances are the same index, shifted past the hole.
                    let i = if *j < depth { *j } else { *j - 1 };
                    let d = taut.hyp(lctx, i)?;
                    Ok(taut.step("refl-tm", vec![d])?)
                }
            }
            Expr::Nil(set) => {
                let se = self.ty(taut, set, depth, lctx)?;
                let se = lift_eq(taut, se, Kind::Set)?;
                Ok(taut.step("cong-nil", vec![se])?)
            }
            Expr::Cons { list, elem } => {
                let le = self.tm(taut, list, depth, lctx)?;
                let ee = self.tm(taut, elem, depth, lctx)?;
                Ok(taut.step("cong-cons", vec![le, ee])?)
            }
            Expr::Inl { other, val } | Expr::Inr { other, val } => {
                let rule = if matches!(e, Expr::Inl { .. }) { "cong-inl" } else { "cong-inr" };
                let oe = self.ty(taut, other, depth, lctx)?;
                let oe = lift_eq(taut, oe, Kind::Set)?;
                let ve = self.tm(taut, val, depth, lctx)?;
                Ok(taut.step(rule, vec![oe, ve])?)
            }
            Expr::SigmaPair { dom, cod, fst, snd } => {
                let de = self.ty(taut, dom, depth, lctx)?;
                let lctx2 = lctx.clone().push(self.inst_l(dom, depth));
                let ce = self.ty(taut, cod, depth + 1, &lctx2)?;
                let want = join_type_kind(eq_kind(&de)?, eq_kind(&ce)?);
                let de = lift_eq(taut, de, want)?;
                let ce = lift_eq(taut, ce, want)?;
                let fe = self.tm(taut, fst, depth, lctx)?;
                let se = self.tm(taut, snd, depth, lctx)?;
                Ok(taut.step("cong-pair", vec![de, ce, fe, se])?)
            }
            Expr::Lam { dom, body } => {
                let de = self.ty(taut, dom, depth, lctx)?;
                let de = lift_eq(taut, de, Kind::Set)?;
                let lctx2 = lctx.clone().push(self.inst_l(dom, depth));
                let be = self.tm(taut, body, depth + 1, &lctx2)?;
                Ok(taut.step("cong-lam", vec![de, be])?)
            }
            Expr::App { fun, arg } => {
                let fe = self.tm(taut, fun, depth, lctx)?;
                let ae = self.tm(taut, arg, depth, lctx)?;
                Ok(taut.step("cong-ap", vec![fe, ae])?)
            }
            Expr::N0Elim { motive, scrut } => {
                let lctx2 = lctx.clone().push(Expr::N0);
                let me = self.ty(taut, motive, depth + 1, &lctx2)?;
                let se = self.tm(taut, scrut, depth, lctx)?;
                Ok(taut.step("cong-n0elim", vec![me, se])?)
            }
            Expr::N1Elim { motive, scrut, base } => {
                let lctx2 = lctx.clone().push(Expr::N1);
                let me = self.ty(taut, motive, depth + 1, &lctx2)?;
                let se = self.tm(taut, scrut, depth, lctx)?;
                let be = self.tm(taut, base, depth, lctx)?;
                Ok(taut.step("cong-n1elim", vec![me, se, be])?)
            }
            Expr::ListElim { motive, scrut, base, step } => {
                let se = self.tm(taut, scrut, depth, lctx)?;
                let Expr::List(el) = eq_ty(&se)?.clone() else {
                    return Err(CongError::Shape { want: "a list-typed scrutinee" });
                };
                let entry = Expr::List(el.clone());
                let lctx_m = lctx.clone().push(entry.clone());
                let me = self.ty(taut, motive, depth + 1, &lctx_m)?;
                let be = self.tm(taut, base, depth, lctx)?;
                let motive_l = self.inst_l(motive, depth + 1);
                let ih = subst_many_lift(&motive_l, &[Expr::Var(1)], 2);
                let lctx_s = lctx.clone().push(entry).push(shift(&el, 1)).push(ih);
                let pe = self.tm(taut, step, depth + 3, &lctx_s)?;
                Ok(taut.step("cong-listelim", vec![me, se, be, pe])?)
            }
            Expr::SumElim { motive, scrut, left, right } => {
                let se = self.tm(taut, scrut, depth, lctx)?;
                let Expr::Sum(sa, sb) = eq_ty(&se)?.clone() else {
                    return Err(CongError::Shape { want: "a sum-typed scrutinee" });
                };
                let lctx_m = lctx.clone().push(Expr::Sum(sa.clone(), sb.clone()));
                let me = self.ty(taut, motive, depth + 1, &lctx_m)?;
                let lctx_l = lctx.clone().push((*sa).clone());
                let le = self.tm(taut, left, depth + 1, &lctx_l)?;
                let lctx_r = lctx.clone().push((*sb).clone());
                let re = self.tm(taut, right, depth + 1, &lctx_r)?;
                Ok(taut.step("cong-sumelim", vec![me, se, le, re])?)
            }
            Expr::SigmaElim { motive, scrut, body } => {
                let se = self.tm(taut, scrut, depth, lctx)?;
                let Expr::Sigma { dom, cod } = eq_ty(&se)?.clone() else {
                    return Err(CongError::Shape { want: "a pair-typed scrutinee" });
                };
                let lctx_m = lctx
                    .clone()
                    .push(Expr::Sigma { dom: dom.clone(), cod: cod.clone() });
                let me = self.ty(taut, motive, depth + 1, &lctx_m)?;
                let lctx_b = lctx.clone().push((*dom).clone()).push((*cod).clone());
                let be = self.tm(taut, body, depth + 2, &lctx_b)?;
                Ok(taut.step("cong-sigelim", vec![me, se, be])?)
            }
            Expr::QCls { quot, val } => {
                let qe = self.ty(taut, quot, depth, lctx)?;
                let ve = self.tm(taut, val, depth, lctx)?;
                Ok(taut.step("cong-class", vec![qe, ve])?)
            }
            Expr::QuotElim { motive, scrut, body } => {
                let se = self.tm(taut, scrut, depth, lctx)?;
                let Expr::Quot { set, .. } = eq_ty(&se)?.clone() else {
                    return Err(CongError::Shape { want: "a quotient-typed scrutinee" });
                };
                let lctx_m = lctx.clone().push(eq_ty(&se)?.clone());
                let me = self.ty(taut, motive, depth + 1, &lctx_m)?;
                let lctx_b = lctx.clone().push((*set).clone());
                let be = self.tm(taut, body, depth + 1, &lctx_b)?;
                Ok(taut.step("cong-qelim", vec![me, se, be])?)
            }
            Expr::Truth(p) => {
                let tyeq = self.ty(taut, p, depth, lctx)?;
                let p_l = self.inst_l(p, depth);
                let p_r = self.inst_r(p, depth);
                let lt = taut.term(lctx, &Expr::Truth(Box::new(p_l)))?;
                let rt = taut.term(lctx, &Expr::Truth(Box::new(p_r)))?;
                let sym = taut.step("sym-ty", vec![tyeq.clone()])?;
                let rconv = taut.step("conv", vec![rt, sym])?;
                let form = taut.step("tyeq-wit-l", vec![tyeq])?;
                Ok(taut.proofs_equal(&form, &lt, &rconv)?)
            }
            Expr::CodeP(p) => {
                let tyeq = self.ty(taut, p, depth, lctx)?;
                let w = iff_of_tyeq(taut, &tyeq)?;
                let lf = taut.step("tyeq-wit-l", vec![tyeq.clone()])?;
                let rf = taut.step("tyeq-wit-r", vec![tyeq])?;
                Ok(taut.step("eq-P1", vec![lf, rf, w])?)
            }
            _ => Err(CongError::Unsupported(tag(e))),
        }
    }
}

fn tag(e: &Expr) -> &'static str {
    use Expr::*;
    match e {
        Var(_) => "Var",
        N0 => "N0",
        N1 => "N1",
        List(_) => "List",
        Sum(..) => "Sum",
        Sigma { .. } => "Sigma",
        Pi { .. } => "Pi",
        Quot { .. } => "Quot",
        P1 => "P1",
        PropS => "PropS",
        DecS(_) => "DecS",
        Bot => "Bot",
        And(..) => "And",
        Imp(..) => "Imp",
        Or(..) => "Or",
        Forall { .. } => "Forall",
        Exists { .. } => "Exists",
        Eq { .. } => "Eq",
        Id { .. } => "Id",
        Star => "Star",
        N0Elim { .. } => "N0Elim",
        N1Elim { .. } => "N1Elim",
        Nil(_) => "Nil",
        Cons { .. } => "Cons",
        ListElim { .. } => "ListElim",
        Inl { .. } => "Inl",
        Inr { .. } => "Inr",
        SumElim { .. } => "SumElim",
        SigmaPair { .. } => "SigmaPair",
        SigmaElim { .. } => "SigmaElim",
        Lam { .. } => "Lam",
        App { .. } => "App",
        QCls { .. } => "QCls",
        QuotElim { .. } => "QuotElim",
        CodeP(_) => "CodeP",
        CodeS(_) => "CodeS",
        Truth(_) => "Truth",
        BotElim { .. } => "BotElim",
        ImpLam { .. } => "ImpLam",
        ImpApp { .. } => "ImpApp",
        AndPair { .. } => "AndPair",
        AndProj { .. } => "AndProj",
        OrInl { .. } => "OrInl",
        OrInr { .. } => "OrInr",
        OrElim { .. } => "OrElim",
        AllLam { .. } => "AllLam",
        AllApp { .. } => "AllApp",
        ExPair { .. } => "ExPair",
        ExElim { .. } => "ExElim",
        IdRefl { .. } => "IdRefl",
        IdElim { .. } => "IdElim",
        LemC => "LemC",
        Meta(_) => "Meta",
        MSub { .. } => "MSub",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{check, Derivation};
    use crate::rules::rules_of;
    use crate::syntax::build::*;
    use crate::theory::TheoryDesc;

    fn step(t: &TheoryDesc, name: &str, children: Vec<Derivation>) -> Derivation {
        Derivation::step(&rules_of(t), name, children).unwrap()
    }

    /// `[] |- n1elim(N1, star, star) = star : N1`, the running base equality.
    fn beta_eq(t: &TheoryDesc) -> Derivation {
        let emp = step(t, "ctx-emp", vec![]);
        let star = step(t, "I-N1", vec![emp.clone()]);
        let wf_n1 = step(t, "ctx-ext", vec![step(t, "F-N1", vec![emp])]);
        let motive = step(t, "F-N1", vec![wf_n1]);
        step(t, "C-N1", vec![motive, star])
    }

    fn elim_e() -> Expr {
        n1elim(Expr::N1, Expr::Star, Expr::Star)
    }

    #[test]
    fn eq_family_congruence() {
        let t = TheoryDesc::emtt();
        let mut taut = Taut::new(&t);
        let beta = beta_eq(&t);
        let fam = eq(Expr::N1, var(0), Expr::Star);
        let out = fam_cong(&mut taut, &fam, &beta).unwrap();
        assert_eq!(
            out.concluded(),
            &Judgement::TypeEq {
                ctx: Ctx::empty(),
                kind: Kind::PropS,
                lhs: eq(Expr::N1, elim_e(), Expr::Star),
                rhs: eq(Expr::N1, Expr::Star, Expr::Star),
            }
        );
        check(&t, &out).unwrap();
    }

    #[test]
    fn quantified_family_congruence() {
        let t = TheoryDesc::emtt();
        let mut taut = Taut::new(&t);
        let beta = beta_eq(&t);
        // forall y in N1, x = y, with x the substituted variable.
        let fam = forall(Expr::N1, eq(Expr::N1, var(1), var(0)));
        let out = fam_cong(&mut taut, &fam, &beta).unwrap();
        let Judgement::TypeEq { lhs, rhs, .. } = out.concluded() else { unreachable!() };
        assert_eq!(lhs, &forall(Expr::N1, eq(Expr::N1, elim_e(), var(0))));
        assert_eq!(rhs, &forall(Expr::N1, eq(Expr::N1, Expr::Star, var(0))));
        check(&t, &out).unwrap();
    }

    #[test]
    fn term_family_congruence() {
        let t = TheoryDesc::emtt();
        let mut taut = Taut::new(&t);
        let beta = beta_eq(&t);
        let fam = cons(nil(Expr::N1), var(0));
        let out = term_fam_cong(&mut taut, &fam, &beta).unwrap();
        assert_eq!(
            out.concluded(),
            &Judgement::TermEq {
                ctx: Ctx::empty(),
                lhs: cons(nil(Expr::N1), elim_e()),
                rhs: cons(nil(Expr::N1), Expr::Star),
                ty: list(Expr::N1),
            }
        );
        check(&t, &out).unwrap();
    }

    #[test]
    fn truth_family_needs_registered_witnesses() {
        let t = TheoryDesc::emtt();
        let mut taut = Taut::new(&t);
        let beta = beta_eq(&t);
        let fam = truth(eq(Expr::N1, var(0), var(0)));
        // Witnesses for both instances, registered up front.
        let emp = step(&t, "ctx-emp", vec![]);
        let star = step(&t, "I-N1", vec![emp.clone()]);
        let wf_n1 = step(&t, "ctx-ext", vec![step(&t, "F-N1", vec![emp])]);
        let motive = step(&t, "F-N1", vec![wf_n1]);
        let elim = step(&t, "E-N1", vec![motive, star.clone(), star.clone()]);
        let wl = step(&t, "I-Eq", vec![elim]);
        let wr = step(&t, "I-Eq", vec![star]);
        taut.assume(wl);
        taut.assume(wr);
        let out = term_fam_cong(&mut taut, &fam, &beta).unwrap();
        assert_eq!(
            out.concluded(),
            &Judgement::TermEq {
                ctx: Ctx::empty(),
                lhs: truth(eq(Expr::N1, elim_e(), elim_e())),
                rhs: truth(eq(Expr::N1, Expr::Star, Expr::Star)),
                ty: eq(Expr::N1, elim_e(), elim_e()),
            }
        );
        check(&t, &out).unwrap();
    }

    #[test]
    fn iff_witness_from_type_equality() {
        let t = TheoryDesc::emtt();
        let mut taut = Taut::new(&t);
        let beta = beta_eq(&t);
        let fam = eq(Expr::N1, var(0), Expr::Star);
        let tyeq = fam_cong(&mut taut, &fam, &beta).unwrap();
        let w = iff_of_tyeq(&mut taut, &tyeq).unwrap();
        let Judgement::Term { ctx, ty, .. } = w.concluded() else { unreachable!() };
        assert!(ctx.is_empty());
        assert_eq!(
            ty,
            &crate::syntax::iff(
                eq(Expr::N1, elim_e(), Expr::Star),
                eq(Expr::N1, Expr::Star, Expr::Star)
            )
        );
        check(&t, &w).unwrap();
    }
}
