//! Proof builders for the truth-style logic of the extensional level.
//!
//! The translations assemble many small intuitionistic arguments: double
//! negation introductions, excluded-middle under double negation, proof
//! irrelevance, decoding of subset codes. This module packages those as
//! combinators over [`Derivation`]s so each translation states only the
//! interesting steps.
//!
//! Formations are composed, not re-derived: combinators that need the
//! formation of a compound proposition either take the formations of its
//! parts as arguments or consult the synthesizer, and every formation or
//! context built here is registered so later calls can reuse it. Register a
//! formation of an unusual type once (via [`Taut::assume`]) and every
//! compound over it becomes available. As everywhere outside the kernel,
//! the output is untrusted until [`crate::kernel::check`] passes it.

use std::collections::HashMap;

use thiserror::Error;

use crate::judgement::Judgement;
use crate::kernel::{BuildError, Derivation};
use crate::surface::print_judgement;
use crate::synth::{Synth, SynthError};
use crate::syntax::build::*;
use crate::syntax::{top, Ctx, Expr};
use crate::theory::{Kind, TheoryDesc};
use crate::transform::{find_ctx_wf, weaken_append, TransformError};

#[derive(Debug, Error)]
pub enum TautError {
    #[error(transparent)]
    Synth(#[from] SynthError),
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error("rule {rule}: {error}")]
    Rule { rule: String, error: BuildError },
    #[error("expected {want}, found {found}")]
    Shape { want: &'static str, found: String },
}

fn shape(want: &'static str, d: &Derivation) -> TautError {
    TautError::Shape {
        want,
        found: print_judgement(d.concluded()),
    }
}

/// Proof builder for one theory.
pub struct Taut {
    synth: Synth,
    wfs: HashMap<Ctx, Derivation>,
}

impl Taut {
    pub fn new(theory: &TheoryDesc) -> Taut {
        Taut {
            synth: Synth::new(theory),
            wfs: HashMap::new(),
        }
    }

    /// The underlying synthesizer, for direct structural synthesis.
    pub fn has_rule(&mut self, name: &str) -> bool {
        self.synth_mut().rules().get(name).is_some()
    }

    pub fn synth_mut(&mut self) -> &mut Synth {
        &mut self.synth
    }

    /// Register a derivation for reuse as a leaf.
    pub fn assume(&mut self, d: Derivation) {
        self.keep(d);
    }

    fn keep(&mut self, d: Derivation) -> Derivation {
        match d.concluded() {
            Judgement::CtxWf(c) => {
                let c = c.clone();
                self.wfs.entry(c).or_insert_with(|| d.clone());
            }
            _ => self.synth.assume(d.clone()),
        }
        d
    }

    /// Apply a rule by name; the conclusion is computed, then cached when it
    /// is a formation or a context.
    pub fn step(&mut self, rule: &str, children: Vec<Derivation>) -> Result<Derivation, TautError> {
        let d = Derivation::step(self.synth.rules(), rule, children).map_err(|error| {
            TautError::Rule { rule: rule.to_string(), error }
        })?;
        Ok(self.keep(d))
    }

    /// A formation derivation for a whole context, reusing registered ones.
    pub fn wf(&mut self, ctx: &Ctx) -> Result<Derivation, TautError> {
        if let Some(d) = self.wfs.get(ctx) {
            return Ok(d.clone());
        }
        match ctx.0.split_last() {
            None => self.step("ctx-emp", vec![]),
            Some((last, prefix)) => {
                let prefix = Ctx(prefix.to_vec());
                self.wf(&prefix)?;
                let form = self.form(&prefix, last)?;
                self.step("ctx-ext", vec![form])
            }
        }
    }

    /// Extend a context by an already formed entry.
    pub fn wf_push(&mut self, form: &Derivation) -> Result<Derivation, TautError> {
        self.step("ctx-ext", vec![form.clone()])
    }

    /// A context formation for the context `sample` concludes in, looked up
    /// in the cache, then inside `sample` itself, then synthesized.
    pub fn wf_of(&mut self, sample: &Derivation) -> Result<Derivation, TautError> {
        let ctx = sample.concluded().ctx().clone();
        if let Some(d) = self.wfs.get(&ctx) {
            return Ok(d.clone());
        }
        if let Some(d) = find_ctx_wf(&[sample], &ctx) {
            return Ok(self.keep(d));
        }
        self.wf(&ctx)
    }

    /// Formation of `ty` at its principal kind.
    pub fn form(&mut self, ctx: &Ctx, ty: &Expr) -> Result<Derivation, TautError> {
        let wf = self.wf(ctx)?;
        Ok(self.synth.kind(&wf, ty)?)
    }

    /// Formation of `ty` lifted to exactly `k`.
    pub fn form_at(&mut self, ctx: &Ctx, ty: &Expr, k: Kind) -> Result<Derivation, TautError> {
        let wf = self.wf(ctx)?;
        Ok(self.synth.kind_at(&wf, ty, k)?)
    }

    /// Formation of a proposition at the large kind.
    pub fn prop(&mut self, ctx: &Ctx, ty: &Expr) -> Result<Derivation, TautError> {
        self.form_at(ctx, ty, Kind::Prop)
    }

    /// Typing of a term by structural synthesis.
    pub fn term(&mut self, ctx: &Ctx, tm: &Expr) -> Result<Derivation, TautError> {
        let wf = self.wf(ctx)?;
        Ok(self.synth.term(&wf, tm)?)
    }

    pub fn lift(&mut self, form: Derivation, k: Kind) -> Result<Derivation, TautError> {
        Ok(self.synth.lift(form, k)?)
    }

    /// Weaken a derivation into the extended context formed by `wf`.
    pub fn weaken_into(&mut self, d: &Derivation, wf: &Derivation) -> Result<Derivation, TautError> {
        let r = weaken_append(d, wf)?;
        Ok(self.keep(r))
    }

    /// The typed use of hypothesis `i`.
    pub fn hyp(&mut self, ctx: &Ctx, i: usize) -> Result<Derivation, TautError> {
        let wf = self.wf(ctx)?;
        Derivation::var(wf, i).map_err(|error| TautError::Rule {
            rule: "var".to_string(),
            error,
        })
    }

    /// The formation that introduced the innermost entry of `ctx`.
    pub fn entry_form(&mut self, ctx: &Ctx) -> Result<Derivation, TautError> {
        let wf = self.wf(ctx)?;
        if wf.rule() == "ctx-ext" {
            return Ok(wf.children()[0].clone());
        }
        match ctx.0.split_last() {
            None => Err(TautError::Shape {
                want: "a nonempty context",
                found: print_judgement(wf.concluded()),
            }),
            Some((last, prefix)) => self.form(&Ctx(prefix.to_vec()), last),
        }
    }

    // Formation composition from part formations.

    fn join2(
        &mut self,
        rule: &'static str,
        a: &Derivation,
        b: &Derivation,
    ) -> Result<Derivation, TautError> {
        let k = match (form_kind(a)?, form_kind(b)?) {
            (Kind::PropS, Kind::PropS) => Kind::PropS,
            _ => Kind::Prop,
        };
        let a = self.lift(a.clone(), k)?;
        let b = self.lift(b.clone(), k)?;
        self.step(rule, vec![a, b])
    }

    pub fn imp_form(&mut self, a: &Derivation, b: &Derivation) -> Result<Derivation, TautError> {
        self.join2("F-Imp", a, b)
    }

    pub fn and_form(&mut self, a: &Derivation, b: &Derivation) -> Result<Derivation, TautError> {
        self.join2("F-And", a, b)
    }

    pub fn or_form(&mut self, a: &Derivation, b: &Derivation) -> Result<Derivation, TautError> {
        self.join2("F-Or", a, b)
    }

    pub fn neg_form(&mut self, a: &Derivation) -> Result<Derivation, TautError> {
        let wf = self.wf_of(a)?;
        let bot = self.step("F-Bot", vec![wf])?;
        self.imp_form(a, &bot)
    }

    pub fn top_form(&mut self, ctx: &Ctx) -> Result<Derivation, TautError> {
        self.form(ctx, &top())
    }

    /// Universal quantification from part formations, at the smallest
    /// available kind.
    pub fn forall_form(&mut self, dom: &Derivation, body: &Derivation) -> Result<Derivation, TautError> {
        if form_kind(body)? == Kind::PropS && form_kind(dom)?.included_in(Kind::Set) {
            let d = self.lift(dom.clone(), Kind::Set)?;
            self.step("F-All-s", vec![d, body.clone()])
        } else if form_kind(body)? == Kind::PropS
            && self.synth.rules().get("F-All-imp").is_some()
        {
            let d = self.lift(dom.clone(), Kind::Col)?;
            self.step("F-All-imp", vec![d, body.clone()])
        } else {
            let d = self.lift(dom.clone(), Kind::Col)?;
            let b = self.lift(body.clone(), Kind::Prop)?;
            self.step("F-All", vec![d, b])
        }
    }

    /// Existential quantification from part formations.
    pub fn exists_form(&mut self, dom: &Derivation, body: &Derivation) -> Result<Derivation, TautError> {
        if form_kind(body)? == Kind::PropS && form_kind(dom)?.included_in(Kind::Set) {
            let d = self.lift(dom.clone(), Kind::Set)?;
            self.step("F-Ex-s", vec![d, body.clone()])
        } else {
            let d = self.lift(dom.clone(), Kind::Col)?;
            let b = self.lift(body.clone(), Kind::Prop)?;
            self.step("F-Ex", vec![d, b])
        }
    }

    // Introduction and elimination.

    /// Discharge the innermost hypothesis: from `G.phi |- w : psi^` and the
    /// formation of `psi` in `G`, conclude `G |- phi => psi`.
    pub fn imp_intro(&mut self, cod_form: &Derivation, body: &Derivation) -> Result<Derivation, TautError> {
        let ctx = match body.concluded() {
            Judgement::Term { ctx, .. } if !ctx.0.is_empty() => ctx.clone(),
            _ => return Err(shape("a typing in a nonempty context", body)),
        };
        self.keep(cod_form.clone());
        let dom_form = self.entry_form(&ctx)?;
        let f = self.imp_form(&dom_form, cod_form)?;
        let f = self.lift(f, Kind::Prop)?;
        self.step("I-Imp", vec![f, body.clone()])
    }

    pub fn imp_elim(&mut self, f: &Derivation, a: &Derivation) -> Result<Derivation, TautError> {
        self.step("E-Imp", vec![f.clone(), a.clone()])
    }

    pub fn and_intro(&mut self, l: &Derivation, r: &Derivation) -> Result<Derivation, TautError> {
        let (ctx, lty) = proof_parts(l)?;
        let (_, rty) = proof_parts(r)?;
        let f = self.prop(&ctx, &and(lty, rty))?;
        self.step("I-And", vec![f, l.clone(), r.clone()])
    }

    pub fn and_left(&mut self, p: &Derivation) -> Result<Derivation, TautError> {
        self.step("E-And-l", vec![p.clone()])
    }

    pub fn and_right(&mut self, p: &Derivation) -> Result<Derivation, TautError> {
        self.step("E-And-r", vec![p.clone()])
    }

    pub fn or_intro_l(&mut self, p: &Derivation, other: &Expr) -> Result<Derivation, TautError> {
        let (ctx, ty) = proof_parts(p)?;
        let f = self.prop(&ctx, &or(ty, other.clone()))?;
        self.step("I-Or-l", vec![f, p.clone()])
    }

    pub fn or_intro_r(&mut self, other: &Expr, p: &Derivation) -> Result<Derivation, TautError> {
        let (ctx, ty) = proof_parts(p)?;
        let f = self.prop(&ctx, &or(other.clone(), ty))?;
        self.step("I-Or-r", vec![f, p.clone()])
    }

    pub fn or_elim(
        &mut self,
        motive_form: &Derivation,
        scrut: &Derivation,
        left: &Derivation,
        right: &Derivation,
    ) -> Result<Derivation, TautError> {
        let f = self.lift(motive_form.clone(), Kind::Prop)?;
        self.step("E-Or", vec![f, scrut.clone(), left.clone(), right.clone()])
    }

    pub fn bot_elim(&mut self, motive_form: &Derivation, p: &Derivation) -> Result<Derivation, TautError> {
        let f = self.lift(motive_form.clone(), Kind::Prop)?;
        self.step("E-Bot", vec![f, p.clone()])
    }

    pub fn all_intro(&mut self, all_form: &Derivation, body: &Derivation) -> Result<Derivation, TautError> {
        let f = self.lift(all_form.clone(), Kind::Prop)?;
        self.step("I-All", vec![f, body.clone()])
    }

    pub fn all_elim(&mut self, p: &Derivation, arg: &Derivation) -> Result<Derivation, TautError> {
        self.step("E-All", vec![p.clone(), arg.clone()])
    }

    pub fn ex_intro(
        &mut self,
        ex_form: &Derivation,
        wit: &Derivation,
        prf: &Derivation,
    ) -> Result<Derivation, TautError> {
        let f = self.lift(ex_form.clone(), Kind::Prop)?;
        self.step("I-Ex", vec![f, wit.clone(), prf.clone()])
    }

    pub fn ex_elim(
        &mut self,
        motive_form: &Derivation,
        scrut: &Derivation,
        body: &Derivation,
    ) -> Result<Derivation, TautError> {
        let f = self.lift(motive_form.clone(), Kind::Prop)?;
        self.step("E-Ex", vec![f, scrut.clone(), body.clone()])
    }

    /// Reflexivity of propositional equality at a term.
    pub fn eq_intro(&mut self, t: &Derivation) -> Result<Derivation, TautError> {
        self.step("I-Eq", vec![t.clone()])
    }

    /// Reflect a propositional equality proof into judgemental equality.
    pub fn eq_reflect(&mut self, p: &Derivation) -> Result<Derivation, TautError> {
        self.step("refl-Eq", vec![p.clone()])
    }

    /// Replace any witness by the canonical one.
    pub fn canonical(&mut self, p: &Derivation) -> Result<Derivation, TautError> {
        let (ctx, ty) = proof_parts(p)?;
        let f = self.prop(&ctx, &ty)?;
        self.canonical_with(&f, p)
    }

    pub fn canonical_with(&mut self, form: &Derivation, p: &Derivation) -> Result<Derivation, TautError> {
        let f = self.lift(form.clone(), Kind::Prop)?;
        let pm = self.step("prop-mono", vec![f, p.clone()])?;
        self.step("eq-wit-r", vec![pm])
    }

    /// Proof irrelevance: any two proofs of the same proposition are equal.
    pub fn proofs_equal(
        &mut self,
        form: &Derivation,
        p: &Derivation,
        q: &Derivation,
    ) -> Result<Derivation, TautError> {
        let f = self.lift(form.clone(), Kind::Prop)?;
        let a = self.step("prop-mono", vec![f.clone(), p.clone()])?;
        let b = self.step("prop-mono", vec![f, q.clone()])?;
        let bs = self.step("sym-tm", vec![b])?;
        self.step("trans-tm", vec![a, bs])
    }

    // Derived lemmas.

    /// `G |- top`, with `top` the shorthand for `Bot => Bot`.
    pub fn top_true(&mut self, ctx: &Ctx) -> Result<Derivation, TautError> {
        let bf = self.form(ctx, &Expr::Bot)?;
        let ext = ctx.push(Expr::Bot);
        self.wf(&ext)?;
        let h = self.hyp(&ext, 0)?;
        self.imp_intro(&bf, &h)
    }

    /// Double negation introduction: from a proof of `phi`, one of
    /// `not not phi`.
    pub fn nn_intro(&mut self, form: &Derivation, p: &Derivation) -> Result<Derivation, TautError> {
        self.keep(form.clone());
        let (ctx, _) = proof_parts(p)?;
        let nf = self.neg_form(form)?;
        let wf2 = self.wf_push(&nf)?;
        let p2 = self.weaken_into(p, &wf2)?;
        let ext = ctx_of_wf(&wf2)?;
        let h = self.hyp(&ext, 0)?;
        let bot = self.imp_elim(&h, &p2)?;
        let bf = self.form(&ctx, &Expr::Bot)?;
        self.imp_intro(&bf, &bot)
    }

    /// Excluded middle under double negation: `not not (phi \/ not phi)`,
    /// intuitionistically, for any proposition with a formation.
    pub fn nn_lem(&mut self, form: &Derivation) -> Result<Derivation, TautError> {
        self.keep(form.clone());
        let ctx = form.concluded().ctx().clone();
        let nf = self.neg_form(form)?;
        let of = self.or_form(form, &nf)?;
        let nof = self.neg_form(&of)?;

        let wf1 = self.wf_push(&nof)?;
        let ctx1 = ctx_of_wf(&wf1)?;
        let form1 = self.weaken_into(form, &wf1)?;
        let nf1 = self.neg_form(&form1)?;

        let wf2 = self.wf_push(&form1)?;
        let ctx2 = ctx_of_wf(&wf2)?;
        let form2 = self.weaken_into(&form1, &wf2)?;
        let nf2 = self.neg_form(&form2)?;
        let of2 = self.or_form(&form2, &nf2)?;
        let of2 = self.lift(of2, Kind::Prop)?;

        // Under phi, the assumed refutation applied to the left injection.
        let h_phi = self.hyp(&ctx2, 0)?;
        let h_not = self.hyp(&ctx2, 1)?;
        let inl = self.step("I-Or-l", vec![of2, h_phi])?;
        let bot2 = self.imp_elim(&h_not, &inl)?;
        let b1 = {
            let wf = self.wf(&ctx1)?;
            self.step("F-Bot", vec![wf])?
        };
        let not_phi = self.imp_intro(&b1, &bot2)?;

        // Then the refutation again, on the right injection.
        let of1 = self.or_form(&form1, &nf1)?;
        let of1 = self.lift(of1, Kind::Prop)?;
        let inr = self.step("I-Or-r", vec![of1, not_phi])?;
        let h1 = self.hyp(&ctx1, 0)?;
        let bot1 = self.imp_elim(&h1, &inr)?;
        let b0 = self.form(&ctx, &Expr::Bot)?;
        self.imp_intro(&b0, &bot1)
    }

    /// Functoriality of double negation: from `phi => psi` conclude
    /// `not not phi => not not psi`.
    pub fn nn_map(
        &mut self,
        dom_form: &Derivation,
        cod_form: &Derivation,
        pq: &Derivation,
    ) -> Result<Derivation, TautError> {
        self.keep(dom_form.clone());
        self.keep(cod_form.clone());
        let nphi = self.neg_form(dom_form)?;
        let nnphi = self.neg_form(&nphi)?;
        let npsi = self.neg_form(cod_form)?;

        let wf1 = self.wf_push(&nnphi)?;
        let ctx1 = ctx_of_wf(&wf1)?;
        let npsi1 = self.weaken_into(&npsi, &wf1)?;
        let wf2 = self.wf_push(&npsi1)?;
        let ctx2 = ctx_of_wf(&wf2)?;
        let dom2 = {
            let d = self.weaken_into(dom_form, &wf1)?;
            self.weaken_into(&d, &wf2)?
        };
        let wf3 = self.wf_push(&dom2)?;
        let ctx3 = ctx_of_wf(&wf3)?;

        // Under phi: psi from the mapped implication, then the assumed
        // refutation of psi.
        let x = self.hyp(&ctx3, 0)?;
        let pq3 = {
            let a = self.weaken_into(pq, &wf1)?;
            let b = self.weaken_into(&a, &wf2)?;
            self.weaken_into(&b, &wf3)?
        };
        let psi = self.imp_elim(&pq3, &x)?;
        let k = self.hyp(&ctx3, 1)?;
        let bot3 = self.imp_elim(&k, &psi)?;
        let b2 = self.form(&ctx2, &Expr::Bot)?;
        let not_phi = self.imp_intro(&b2, &bot3)?;

        let h = self.hyp(&ctx2, 1)?;
        let bot2 = self.imp_elim(&h, &not_phi)?;
        let b1 = self.form(&ctx1, &Expr::Bot)?;
        let nnpsi = self.imp_intro(&b1, &bot2)?;
        let nnpsi_form = self.neg_form(&npsi)?;
        self.imp_intro(&nnpsi_form, &nnpsi)
    }

    // Subset codes over the singleton.

    /// Equal codes from logically equivalent small propositions.
    pub fn codes_equal(
        &mut self,
        a_form: &Derivation,
        b_form: &Derivation,
        iff_proof: &Derivation,
    ) -> Result<Derivation, TautError> {
        self.step(
            "eq-P1",
            vec![a_form.clone(), b_form.clone(), iff_proof.clone()],
        )
    }

    /// Logical equivalence back out of a code equation.
    pub fn codes_equal_reflect(
        &mut self,
        a_form: &Derivation,
        b_form: &Derivation,
        code_eq: &Derivation,
    ) -> Result<Derivation, TautError> {
        self.step(
            "deq-P1",
            vec![a_form.clone(), b_form.clone(), code_eq.clone()],
        )
    }

    /// From a proof of a small `phi`, a proof that the code of `phi`
    /// decodes: `Dc(code phi)`, i.e. `Eq(P1, code phi, code top)`.
    pub fn dc_intro(&mut self, form: &Derivation, p: &Derivation) -> Result<Derivation, TautError> {
        self.keep(form.clone());
        let ctx = form.concluded().ctx().clone();
        let tf = self.form_at(&ctx, &top(), Kind::PropS)?;

        let wf_phi = self.wf_push(form)?;
        let ctx_phi = ctx_of_wf(&wf_phi)?;
        let tt_under = self.top_true(&ctx_phi)?;
        let fwd = self.imp_intro(&tf, &tt_under)?;

        let wf_top = {
            let f = self.form(&ctx, &top())?;
            self.wf_push(&f)?
        };
        let p_up = self.weaken_into(p, &wf_top)?;
        let bwd = self.imp_intro(form, &p_up)?;

        let iff_proof = self.and_intro(&fwd, &bwd)?;
        let code_eq = self.codes_equal(form, &tf, &iff_proof)?;

        // Convert reflexivity at the code of phi along the code equation.
        let code_tm = self.step("I-P1", vec![form.clone()])?;
        let refl_prop = self.eq_intro(&code_tm)?;
        let refl_tm = self.step("refl-tm", vec![code_tm])?;
        let tyeq = self.step("cong-Eq-P1", vec![refl_tm, code_eq])?;
        self.step("conv", vec![refl_prop, tyeq])
    }

    /// From a proof that the code of a small `phi` decodes, a proof of
    /// `phi` itself.
    pub fn dc_elim(&mut self, form: &Derivation, p: &Derivation) -> Result<Derivation, TautError> {
        self.keep(form.clone());
        let ctx = form.concluded().ctx().clone();
        let tf = self.form_at(&ctx, &top(), Kind::PropS)?;
        let code_eq = self.eq_reflect(p)?;
        let iff_proof = self.codes_equal_reflect(form, &tf, &code_eq)?;
        let use_top = self.and_right(&iff_proof)?;
        let tt = self.top_true(&ctx)?;
        self.imp_elim(&use_top, &tt)
    }
}

fn proof_parts(d: &Derivation) -> Result<(Ctx, Expr), TautError> {
    match d.concluded() {
        Judgement::Term { ctx, ty, .. } => Ok((ctx.clone(), ty.clone())),
        _ => Err(shape("a typing judgement", d)),
    }
}

fn form_kind(d: &Derivation) -> Result<Kind, TautError> {
    match d.concluded() {
        Judgement::TypeKind { kind, .. } => Ok(*kind),
        _ => Err(shape("a formation judgement", d)),
    }
}

fn ctx_of_wf(d: &Derivation) -> Result<Ctx, TautError> {
    match d.concluded() {
        Judgement::CtxWf(c) => Ok(c.clone()),
        _ => Err(shape("a context formation", d)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::check;
    use crate::syntax::{neg, shift};

    fn emtt() -> TheoryDesc {
        TheoryDesc::emtt()
    }

    fn checks(d: &Derivation) {
        if let Err(e) = check(&emtt(), d) {
            panic!("built proof fails to check: {e}");
        }
    }

    fn proved(d: &Derivation) -> &Expr {
        match d.concluded() {
            Judgement::Term { ty, .. } => ty,
            other => panic!("not a proof: {other:?}"),
        }
    }

    #[test]
    fn top_holds() {
        let mut t = Taut::new(&emtt());
        let d = t.top_true(&Ctx::empty()).unwrap();
        assert_eq!(proved(&d), &top());
        checks(&d);
    }

    #[test]
    fn conjunction_commutes() {
        let mut t = Taut::new(&emtt());
        let phi = eq(Expr::N1, Expr::Star, Expr::Star);
        let both = and(phi.clone(), top());
        let ctx = Ctx::empty().push(both.clone());
        let h = t.hyp(&ctx, 0).unwrap();
        let l = t.and_left(&h).unwrap();
        let r = t.and_right(&h).unwrap();
        let swapped = t.and_intro(&r, &l).unwrap();
        let cod_form = t.prop(&Ctx::empty(), &and(top(), phi.clone())).unwrap();
        let out = t.imp_intro(&cod_form, &swapped).unwrap();
        assert_eq!(proved(&out), &imp(both, and(top(), phi)));
        checks(&out);
    }

    #[test]
    fn double_negation_of_excluded_middle() {
        let mut t = Taut::new(&emtt());
        // An open proposition about a variable of N1.
        let ctx = Ctx::empty().push(Expr::N1);
        let phi = eq(Expr::N1, var(0), Expr::Star);
        let form = t.prop(&ctx, &phi).unwrap();
        let d = t.nn_lem(&form).unwrap();
        assert_eq!(
            proved(&d),
            &neg(neg(or(phi.clone(), neg(phi))))
        );
        checks(&d);
    }

    #[test]
    fn double_negation_intro_and_map() {
        let mut t = Taut::new(&emtt());
        let ctx = Ctx::empty();
        let tt = t.top_true(&ctx).unwrap();
        let tf = t.top_form(&ctx).unwrap();
        let nn_top = t.nn_intro(&tf, &tt).unwrap();
        assert_eq!(proved(&nn_top), &neg(neg(top())));
        checks(&nn_top);

        // top => top, mapped under double negation, applied to the above.
        let ext = ctx.push(top());
        t.wf(&ext).unwrap();
        let body = t.hyp(&ext, 0).unwrap();
        let id_imp = t.imp_intro(&tf, &body).unwrap();
        let mapped = t.nn_map(&tf, &tf, &id_imp).unwrap();
        let out = t.imp_elim(&mapped, &nn_top).unwrap();
        assert_eq!(proved(&out), &neg(neg(top())));
        checks(&out);
    }

    #[test]
    fn existential_round_trip() {
        let mut t = Taut::new(&emtt());
        let ctx = Ctx::empty();
        let fam = eq(Expr::N1, var(0), Expr::Star);
        let ex = exists(Expr::N1, fam.clone());
        let ex_form = t.prop(&ctx, &ex).unwrap();
        let wit = t.term(&ctx, &Expr::Star).unwrap();
        let prf = {
            let refl_at_star = t.term(&ctx, &Expr::Star).unwrap();
            t.eq_intro(&refl_at_star).unwrap()
        };
        let packed = t.ex_intro(&ex_form, &wit, &prf).unwrap();
        assert_eq!(proved(&packed), &ex);
        checks(&packed);

        // Eliminate to something not mentioning the witness.
        let motive = t.top_form(&ctx).unwrap();
        let inner = Ctx(vec![Expr::N1, fam]);
        t.wf(&inner).unwrap();
        let body = t.top_true(&inner).unwrap();
        let out = t.ex_elim(&motive, &packed, &body).unwrap();
        assert_eq!(proved(&out), &top());
        checks(&out);
    }

    #[test]
    fn proofs_are_irrelevant() {
        let mut t = Taut::new(&emtt());
        let ctx = Ctx::empty();
        let p = t.top_true(&ctx).unwrap();
        let q = {
            // A differently built proof of the same proposition.
            let pair = t.and_intro(&p, &p).unwrap();
            t.and_left(&pair).unwrap()
        };
        let form = t.top_form(&ctx).unwrap();
        let d = t.proofs_equal(&form, &p, &q).unwrap();
        assert!(matches!(d.concluded(), Judgement::TermEq { .. }));
        checks(&d);

        let cq = t.canonical(&q).unwrap();
        assert_eq!(proved(&cq), &top());
        checks(&cq);
    }

    #[test]
    fn decoding_round_trip() {
        let mut t = Taut::new(&emtt());
        let ctx = Ctx::empty();
        let phi = eq(Expr::N1, Expr::Star, Expr::Star);
        let form = t.form_at(&ctx, &phi, Kind::PropS).unwrap();
        let star = t.term(&ctx, &Expr::Star).unwrap();
        let p = t.eq_intro(&star).unwrap();

        let coded = t.dc_intro(&form, &p).unwrap();
        assert_eq!(
            proved(&coded),
            &crate::syntax::dc(code_p(phi.clone()))
        );
        checks(&coded);

        let back = t.dc_elim(&form, &coded).unwrap();
        assert_eq!(proved(&back), &phi);
        checks(&back);
    }

    #[test]
    fn weakening_respects_hypothesis_types() {
        let mut t = Taut::new(&emtt());
        let ctx = Ctx::empty().push(Expr::N1);
        let phi = eq(Expr::N1, var(0), Expr::Star);
        let form = t.prop(&ctx, &phi).unwrap();
        let ext = ctx.push(phi.clone());
        t.wf(&ext).unwrap();
        let h = t.hyp(&ext, 0).unwrap();
        assert_eq!(proved(&h), &shift(&phi, 1));
        let wf2 = t.wf(&ext).unwrap();
        let lifted = t.weaken_into(&form, &wf2).unwrap();
        // The weakened formation forms shift(phi,1), not phi; the proof of
        // shift(phi,1) is h itself.
        let nn = t.nn_intro(&lifted, &h).unwrap();
        assert_eq!(proved(&nn), &neg(neg(shift(&phi, 1))));
        checks(&nn);
    }
}
