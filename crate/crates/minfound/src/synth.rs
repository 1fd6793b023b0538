//! Bottom-up synthesis of derivations from bare expressions.
//!
//! The syntax is annotated enough that well-formed contexts, type
//! formations, and term typings can usually be rebuilt without search: each
//! node determines its rule, the premises are synthesized recursively, and
//! the conclusion is computed by the schema. The synthesizer picks the
//! principal (smallest) kind for a type and inserts kind inclusion steps
//! where a rule wants a larger one.
//!
//! Synthesis is deliberately partial. Anything that needs real evidence,
//! such as a quotient formation (which carries equivalence proofs), the
//! compatibility equation of a quotient elimination, or a bare `truth`
//! witness, is not invented; it must be supplied up front via
//! [`Synth::assume`], and the error otherwise names the missing judgement.
//! Everything produced here is untrusted and meant to be finished by
//! [`crate::kernel::check`].

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::judgement::Judgement;
use crate::kernel::{BuildError, Derivation};
use crate::rules::{rules_of, RuleSet};
use crate::surface::{print_expr, print_judgement};
use crate::syntax::build::*;
use crate::syntax::{shift, strengthen, subst1, subst_many_lift, Ctx, Expr, Side};
use crate::theory::{Kind, TheoryDesc};

#[derive(Debug, Clone, Error)]
pub enum SynthError {
    #[error("not a type former: {0}")]
    NotAType(String),
    #[error("not a term former: {0}")]
    NotATerm(String),
    #[error("schema metavariables cannot be synthesized")]
    PatternNode,
    #[error("{ty} has kind {found}, which does not include into {want}")]
    KindNotIncluded { ty: String, found: Kind, want: Kind },
    #[error("{term} has type {found}, expected {want}")]
    TypeMismatch { term: String, found: String, want: String },
    #[error("{term} has type {found}, expected {want}")]
    TypeShape { term: String, found: String, want: &'static str },
    #[error("the body type depends on the abstracted assumption; use a universal")]
    BodyDependsOnAssumption,
    #[error("rule {rule} needs evidence that is not synthesized: {judgement}")]
    NeedsEvidence { rule: &'static str, judgement: String },
    #[error("proof witnesses are not synthesized: {0}")]
    BareWitness(String),
    #[error("rule {rule} is not part of this theory")]
    NotInTheory { rule: String },
    #[error("building {expr}: {error}")]
    Step { expr: String, error: BuildError },
    #[error("expected a context formation derivation")]
    NotCtxWf,
}

/// Derivation synthesizer for one theory. Holds the rule set, an evidence
/// store, and memo tables keyed by context-formation identity.
pub struct Synth {
    rules: Arc<RuleSet>,
    hyps: HashMap<Judgement, Derivation>,
    hyp_kinds: HashMap<(Ctx, Expr), Derivation>,
    hyp_terms: HashMap<(Ctx, Expr), Derivation>,
    kinds: HashMap<(usize, Expr), Derivation>,
    terms: HashMap<(usize, Expr), Derivation>,
    exts: HashMap<(usize, usize), Derivation>,
}

impl Synth {
    pub fn new(theory: &TheoryDesc) -> Synth {
        Synth {
            rules: rules_of(theory),
            hyps: HashMap::new(),
            hyp_kinds: HashMap::new(),
            hyp_terms: HashMap::new(),
            kinds: HashMap::new(),
            terms: HashMap::new(),
            exts: HashMap::new(),
        }
    }

    pub fn rules(&self) -> &RuleSet {
        &self.rules
    }

    /// Register a derivation whose conclusion may be used as a leaf. The
    /// derivation is taken on faith here; the final kernel check decides.
    /// The first registration of a judgement wins.
    pub fn assume(&mut self, d: Derivation) {
        match d.concluded() {
            Judgement::TypeKind { ctx, ty, .. } => {
                self.hyp_kinds
                    .entry((ctx.clone(), ty.clone()))
                    .or_insert_with(|| d.clone());
            }
            Judgement::Term { ctx, term, .. } => {
                self.hyp_terms
                    .entry((ctx.clone(), term.clone()))
                    .or_insert_with(|| d.clone());
            }
            _ => {}
        }
        self.hyps.entry(d.concluded().clone()).or_insert(d);
    }

    /// A derivation among the assumptions concluding exactly `j`.
    pub fn find_hyp(&self, j: &Judgement) -> Option<Derivation> {
        self.hyps.get(j).cloned()
    }

    /// Synthesize the formation of a whole context.
    pub fn ctx(&mut self, entries: &Ctx) -> Result<Derivation, SynthError> {
        let mut wf = self.apply("ctx-emp", vec![], &Expr::Star)?;
        for entry in entries.0.clone() {
            let form = self.kind(&wf, &entry)?;
            wf = self.extend(&wf, form)?;
        }
        Ok(wf)
    }

    /// Synthesize `ty`'s formation at its principal kind, in the context
    /// formed by `wf`.
    pub fn kind(&mut self, wf: &Derivation, ty: &Expr) -> Result<Derivation, SynthError> {
        let key = (wf.addr(), ty.clone());
        if let Some(d) = self.kinds.get(&key) {
            return Ok(d.clone());
        }
        let d = self.kind_uncached(wf, ty)?;
        self.kinds.insert(key, d.clone());
        Ok(d)
    }

    /// Formation of `ty` lifted to exactly the wanted kind.
    pub fn kind_at(
        &mut self,
        wf: &Derivation,
        ty: &Expr,
        want: Kind,
    ) -> Result<Derivation, SynthError> {
        let d = self.kind(wf, ty)?;
        self.lift(d, want)
    }

    /// Insert kind inclusion steps until the formation sits at `want`.
    pub fn lift(&mut self, form: Derivation, want: Kind) -> Result<Derivation, SynthError> {
        let found = kind_of(&form)?;
        if found == want {
            return Ok(form);
        }
        let steps: &[&str] = match (found, want) {
            (Kind::PropS, Kind::Prop) => &["incl-props-prop"],
            (Kind::PropS, Kind::Set) => &["incl-props-set"],
            (Kind::PropS, Kind::Col) => &["incl-props-set", "incl-set-col"],
            (Kind::Prop, Kind::Col) => &["incl-prop-col"],
            (Kind::Set, Kind::Col) => &["incl-set-col"],
            _ => {
                let ty = ty_part(&form)?;
                return Err(SynthError::KindNotIncluded {
                    ty: print_expr(ty),
                    found,
                    want,
                });
            }
        };
        let mut d = form;
        for s in steps {
            let at = ty_part(&d)?.clone();
            d = self.apply(s, vec![d], &at)?;
        }
        Ok(d)
    }

    /// Synthesize the typing of `tm` in the context formed by `wf`.
    pub fn term(&mut self, wf: &Derivation, tm: &Expr) -> Result<Derivation, SynthError> {
        let key = (wf.addr(), tm.clone());
        if let Some(d) = self.terms.get(&key) {
            return Ok(d.clone());
        }
        let d = self.term_uncached(wf, tm)?;
        self.terms.insert(key, d.clone());
        Ok(d)
    }

    fn apply(
        &self,
        name: &str,
        children: Vec<Derivation>,
        at: &Expr,
    ) -> Result<Derivation, SynthError> {
        Derivation::step(&self.rules, name, children).map_err(|e| match e {
            BuildError::UnknownRule(rule) => SynthError::NotInTheory { rule },
            error => SynthError::Step { expr: print_expr(at), error },
        })
    }

    /// Extend a context formation by one entry formation, memoized so
    /// repeated extensions share one node.
    fn extend(&mut self, wf: &Derivation, form: Derivation) -> Result<Derivation, SynthError> {
        let key = (wf.addr(), form.addr());
        if let Some(d) = self.exts.get(&key) {
            return Ok(d.clone());
        }
        let at = ty_part(&form)?.clone();
        let d = self.apply("ctx-ext", vec![form], &at)?;
        self.exts.insert(key, d.clone());
        Ok(d)
    }

    fn hyp_kind(&self, ctx: &Ctx, ty: &Expr) -> Option<Derivation> {
        self.hyp_kinds.get(&(ctx.clone(), ty.clone())).cloned()
    }

    fn hyp_term(&self, ctx: &Ctx, tm: &Expr) -> Option<Derivation> {
        self.hyp_terms.get(&(ctx.clone(), tm.clone())).cloned()
    }

    fn kind_uncached(&mut self, wf: &Derivation, ty: &Expr) -> Result<Derivation, SynthError> {
        let ctx = ctx_of(wf)?;
        if ty.has_pattern_nodes() {
            return Err(SynthError::PatternNode);
        }
        if let Some(h) = self.hyp_kind(ctx, ty) {
            return Ok(h);
        }
        match ty {
            Expr::N0 => self.apply("F-N0", vec![wf.clone()], ty),
            Expr::N1 => self.apply("F-N1", vec![wf.clone()], ty),
            Expr::Bot => self.apply("F-Bot", vec![wf.clone()], ty),
            Expr::P1 => self.apply("F-P1", vec![wf.clone()], ty),
            Expr::PropS => self.apply("F-Props", vec![wf.clone()], ty),
            Expr::List(a) => {
                let fa = self.kind_at(wf, a, Kind::Set)?;
                self.apply("F-List", vec![fa], ty)
            }
            Expr::Sum(a, b) => {
                let fa = self.kind_at(wf, a, Kind::Set)?;
                let fb = self.kind_at(wf, b, Kind::Set)?;
                self.apply("F-Sum", vec![fa, fb], ty)
            }
            Expr::DecS(u) => {
                let tu = self.term(wf, u)?;
                self.expect_ty(&tu, &Expr::PropS)?;
                self.apply("E-Props", vec![tu], ty)
            }
            Expr::Sigma { dom, cod } => {
                let fd = self.kind(wf, dom)?;
                let wf2 = self.extend(wf, fd.clone())?;
                let fc = self.kind(&wf2, cod)?;
                let small = kind_of(&fd)?.included_in(Kind::Set)
                    && kind_of(&fc)?.included_in(Kind::Set);
                if small {
                    let fd = self.lift(fd, Kind::Set)?;
                    let fc = self.lift(fc, Kind::Set)?;
                    self.apply("F-Sigma", vec![fd, fc], ty)
                } else {
                    let fd = self.lift(fd, Kind::Col)?;
                    let fc = self.lift(fc, Kind::Col)?;
                    self.apply("F-Sigma-col", vec![fd, fc], ty)
                }
            }
            Expr::Pi { dom, cod } => {
                let fd = self.kind_at(wf, dom, Kind::Set)?;
                let wf2 = self.extend(wf, fd.clone())?;
                let fc = self.kind(&wf2, cod)?;
                if kind_of(&fc)?.included_in(Kind::Set) {
                    let fc = self.lift(fc, Kind::Set)?;
                    self.apply("F-Pi", vec![fd, fc], ty)
                } else {
                    let fc = self.lift(fc, Kind::Col)?;
                    self.apply("F-Pi-col", vec![fd, fc], ty)
                }
            }
            Expr::And(a, b) | Expr::Imp(a, b) | Expr::Or(a, b) => {
                let rule = match ty {
                    Expr::And(..) => "F-And",
                    Expr::Imp(..) => "F-Imp",
                    _ => "F-Or",
                };
                let fa = self.kind(wf, a)?;
                let fb = self.kind(wf, b)?;
                let k = self.prop_lub(&fa, &fb)?;
                let fa = self.lift(fa, k)?;
                let fb = self.lift(fb, k)?;
                self.apply(rule, vec![fa, fb], ty)
            }
            Expr::Forall { dom, body } => {
                let fd = self.kind(wf, dom)?;
                let wf2 = self.extend(wf, fd.clone())?;
                let fb = self.kind(&wf2, body)?;
                self.require_prop(&fb)?;
                if kind_of(&fb)? == Kind::PropS && kind_of(&fd)?.included_in(Kind::Set) {
                    let fd = self.lift(fd, Kind::Set)?;
                    self.apply("F-All-s", vec![fd, fb], ty)
                } else if kind_of(&fb)? == Kind::PropS
                    && self.rules.get("F-All-imp").is_some()
                {
                    let fd = self.lift(fd, Kind::Col)?;
                    self.apply("F-All-imp", vec![fd, fb], ty)
                } else {
                    let fd = self.lift(fd, Kind::Col)?;
                    let fb = self.lift(fb, Kind::Prop)?;
                    self.apply("F-All", vec![fd, fb], ty)
                }
            }
            Expr::Exists { dom, body } => {
                let fd = self.kind(wf, dom)?;
                let wf2 = self.extend(wf, fd.clone())?;
                let fb = self.kind(&wf2, body)?;
                self.require_prop(&fb)?;
                if kind_of(&fb)? == Kind::PropS && kind_of(&fd)?.included_in(Kind::Set) {
                    let fd = self.lift(fd, Kind::Set)?;
                    self.apply("F-Ex-s", vec![fd, fb], ty)
                } else {
                    let fd = self.lift(fd, Kind::Col)?;
                    let fb = self.lift(fb, Kind::Prop)?;
                    self.apply("F-Ex", vec![fd, fb], ty)
                }
            }
            Expr::Eq { ty: a, lhs, rhs } => {
                let tl = self.term(wf, lhs)?;
                let tr = self.term(wf, rhs)?;
                self.expect_ty(&tl, a)?;
                self.expect_ty(&tr, a)?;
                if **a == Expr::P1 {
                    return self.apply("F-Eq-P1", vec![tl, tr], ty);
                }
                let fa = self.kind(wf, a)?;
                if kind_of(&fa)?.included_in(Kind::Set) {
                    let fa = self.lift(fa, Kind::Set)?;
                    self.apply("F-Eq-s", vec![fa, tl, tr], ty)
                } else {
                    let fa = self.lift(fa, Kind::Col)?;
                    self.apply("F-Eq", vec![fa, tl, tr], ty)
                }
            }
            Expr::Id { ty: a, lhs, rhs } => {
                let tl = self.term(wf, lhs)?;
                let tr = self.term(wf, rhs)?;
                self.expect_ty(&tl, a)?;
                self.expect_ty(&tr, a)?;
                let fa = self.kind(wf, a)?;
                if kind_of(&fa)?.included_in(Kind::Set) {
                    let fa = self.lift(fa, Kind::Set)?;
                    self.apply("F-Id-s", vec![fa, tl, tr], ty)
                } else {
                    let fa = self.lift(fa, Kind::Col)?;
                    self.apply("F-Id", vec![fa, tl, tr], ty)
                }
            }
            Expr::Quot { .. } => Err(SynthError::NeedsEvidence {
                rule: "F-Quot",
                judgement: print_judgement(&Judgement::TypeKind {
                    ctx: ctx.clone(),
                    kind: Kind::Set,
                    ty: ty.clone(),
                }),
            }),
            Expr::Meta(_) | Expr::MSub { .. } => Err(SynthError::PatternNode),
            other => Err(SynthError::NotAType(print_expr(other))),
        }
    }

    fn term_uncached(&mut self, wf: &Derivation, tm: &Expr) -> Result<Derivation, SynthError> {
        let ctx = ctx_of(wf)?.clone();
        if tm.has_pattern_nodes() {
            return Err(SynthError::PatternNode);
        }
        if let Some(h) = self.hyp_term(&ctx, tm) {
            return Ok(h);
        }
        match tm {
            Expr::Var(i) => Derivation::var(wf.clone(), *i)
                .map_err(|error| SynthError::Step { expr: print_expr(tm), error }),
            Expr::Star => self.apply("I-N1", vec![wf.clone()], tm),
            Expr::LemC => self.apply("lem-type", vec![wf.clone()], tm),
            Expr::Nil(a) => {
                let fa = self.kind_at(wf, a, Kind::Set)?;
                self.apply("I-List-nil", vec![fa], tm)
            }
            Expr::Cons { list: l, elem } => {
                let tl = self.term(wf, l)?;
                let te = self.term(wf, elem)?;
                let a = match ty_of(&tl)? {
                    Expr::List(a) => (**a).clone(),
                    _ => return Err(self.shape(&tl, "a list type")),
                };
                self.expect_ty(&te, &a)?;
                self.apply("I-List-cons", vec![tl, te], tm)
            }
            Expr::N0Elim { motive, scrut } => {
                let f0 = self.apply("F-N0", vec![wf.clone()], tm)?;
                let wf2 = self.extend(wf, f0)?;
                let fm = self.kind(&wf2, motive)?;
                let ts = self.term(wf, scrut)?;
                self.expect_ty(&ts, &Expr::N0)?;
                self.apply("E-N0", vec![fm, ts], tm)
            }
            Expr::N1Elim { motive, scrut, base } => {
                let f1 = self.apply("F-N1", vec![wf.clone()], tm)?;
                let wf2 = self.extend(wf, f1)?;
                let fm = self.kind(&wf2, motive)?;
                let ts = self.term(wf, scrut)?;
                self.expect_ty(&ts, &Expr::N1)?;
                let tb = self.term(wf, base)?;
                self.expect_ty(&tb, &subst1(motive, &Expr::Star))?;
                self.apply("E-N1", vec![fm, ts, tb], tm)
            }
            Expr::ListElim { motive, scrut, base, step } => {
                let ts = self.term(wf, scrut)?;
                let a = match ty_of(&ts)? {
                    Expr::List(a) => (**a).clone(),
                    _ => return Err(self.shape(&ts, "a list type")),
                };
                let fa = self.kind_at(wf, &a, Kind::Set)?;
                let fl = self.apply("F-List", vec![fa.clone()], tm)?;
                let wf_l = self.extend(wf, fl)?;
                let fm = self.kind(&wf_l, motive)?;
                let tb = self.term(wf, base)?;
                self.expect_ty(&tb, &subst1(motive, &nil(a.clone())))?;
                let fa1 = self.kind_at(&wf_l, &shift(&a, 1), Kind::Set)?;
                let wf_la = self.extend(&wf_l, fa1)?;
                let fmv = self.kind(
                    &wf_la,
                    &subst_many_lift(motive, &[var(1)], 2),
                )?;
                let wf_step = self.extend(&wf_la, fmv)?;
                let tstep = self.term(&wf_step, step)?;
                self.expect_ty(
                    &tstep,
                    &subst_many_lift(motive, &[cons(var(2), var(1))], 3),
                )?;
                self.apply("E-List", vec![fm, ts, tb, tstep], tm)
            }
            Expr::Inl { other, val } => {
                let tv = self.term(wf, val)?;
                let fl = self.kind_at(wf, &ty_of(&tv)?.clone(), Kind::Set)?;
                let fr = self.kind_at(wf, other, Kind::Set)?;
                self.apply("I-Sum-inl", vec![fl, fr, tv], tm)
            }
            Expr::Inr { other, val } => {
                let tv = self.term(wf, val)?;
                let fl = self.kind_at(wf, other, Kind::Set)?;
                let fr = self.kind_at(wf, &ty_of(&tv)?.clone(), Kind::Set)?;
                self.apply("I-Sum-inr", vec![fl, fr, tv], tm)
            }
            Expr::SumElim { motive, scrut, left, right } => {
                let ts = self.term(wf, scrut)?;
                let (a, b) = match ty_of(&ts)? {
                    Expr::Sum(a, b) => ((**a).clone(), (**b).clone()),
                    _ => return Err(self.shape(&ts, "a sum type")),
                };
                let fa = self.kind_at(wf, &a, Kind::Set)?;
                let fb = self.kind_at(wf, &b, Kind::Set)?;
                let fsum = self.apply("F-Sum", vec![fa.clone(), fb.clone()], tm)?;
                let wf2 = self.extend(wf, fsum)?;
                let fm = self.kind(&wf2, motive)?;
                let wfa = self.extend(wf, fa)?;
                let tl = self.term(&wfa, left)?;
                self.expect_ty(
                    &tl,
                    &subst_many_lift(motive, &[inl(shift(&b, 1), var(0))], 1),
                )?;
                let wfb = self.extend(wf, fb)?;
                let tr = self.term(&wfb, right)?;
                self.expect_ty(
                    &tr,
                    &subst_many_lift(motive, &[inr(shift(&a, 1), var(0))], 1),
                )?;
                self.apply("E-Sum", vec![fm, ts, tl, tr], tm)
            }
            Expr::SigmaPair { dom, cod, fst, snd } => {
                let fsig = self.kind(wf, &sigma((**dom).clone(), (**cod).clone()))?;
                let tf = self.term(wf, fst)?;
                self.expect_ty(&tf, dom)?;
                let tsnd = self.term(wf, snd)?;
                self.expect_ty(&tsnd, &subst1(cod, fst))?;
                self.apply("I-Sigma", vec![fsig, tf, tsnd], tm)
            }
            Expr::SigmaElim { motive, scrut, body } => {
                let ts = self.term(wf, scrut)?;
                let (dom, cod) = match ty_of(&ts)? {
                    Expr::Sigma { dom, cod } => ((**dom).clone(), (**cod).clone()),
                    _ => return Err(self.shape(&ts, "a sigma type")),
                };
                let fsig = self.kind(wf, &sigma(dom.clone(), cod.clone()))?;
                let wf2 = self.extend(wf, fsig)?;
                let fm = self.kind(&wf2, motive)?;
                let fdom = self.kind(wf, &dom)?;
                let wfd = self.extend(wf, fdom)?;
                let fcod = self.kind(&wfd, &cod)?;
                let wfdc = self.extend(&wfd, fcod)?;
                let tb = self.term(&wfdc, body)?;
                self.expect_ty(
                    &tb,
                    &subst_many_lift(
                        motive,
                        &[spair(
                            shift(&dom, 2),
                            subst_many_lift(&cod, &[var(0)], 3),
                            var(1),
                            var(0),
                        )],
                        2,
                    ),
                )?;
                self.apply("E-Sigma", vec![fm, ts, tb], tm)
            }
            Expr::Lam { dom, body } => {
                let fd = self.kind(wf, dom)?;
                let wf2 = self.extend(wf, fd)?;
                let tb = self.term(&wf2, body)?;
                let cod = ty_of(&tb)?.clone();
                let fpi = self.kind(wf, &pi((**dom).clone(), cod))?;
                self.apply("I-Pi", vec![fpi, tb], tm)
            }
            Expr::App { fun, arg } => {
                let tf = self.term(wf, fun)?;
                let dom = match ty_of(&tf)? {
                    Expr::Pi { dom, .. } => (**dom).clone(),
                    _ => return Err(self.shape(&tf, "a product type")),
                };
                let ta = self.term(wf, arg)?;
                self.expect_ty(&ta, &dom)?;
                self.apply("E-Pi", vec![tf, ta], tm)
            }
            Expr::QCls { quot: q, val } => {
                let fq = self.kind_at(wf, q, Kind::Set)?;
                let carrier = match &**q {
                    Expr::Quot { set, .. } => (**set).clone(),
                    _ => return Err(SynthError::NotAType(print_expr(q))),
                };
                let tv = self.term(wf, val)?;
                self.expect_ty(&tv, &carrier)?;
                self.apply("I-Q", vec![fq, tv], tm)
            }
            Expr::QuotElim { motive, scrut, body } => {
                let ts = self.term(wf, scrut)?;
                let (a, r) = match ty_of(&ts)? {
                    Expr::Quot { set, rel } => ((**set).clone(), (**rel).clone()),
                    _ => return Err(self.shape(&ts, "a quotient type")),
                };
                let fq = self.kind_at(wf, &quot(a.clone(), r.clone()), Kind::Set)?;
                let wf2 = self.extend(wf, fq)?;
                let fm = self.kind(&wf2, motive)?;
                let fa = self.kind_at(wf, &a, Kind::Set)?;
                let wfa = self.extend(wf, fa.clone())?;
                let tb = self.term(&wfa, body)?;
                let cls1 = qcls(
                    quot(shift(&a, 1), subst_many_lift(&r, &[var(1), var(0)], 3)),
                    var(0),
                );
                self.expect_ty(&tb, &subst_many_lift(motive, &[cls1], 1))?;
                let cls3 = qcls(
                    quot(shift(&a, 3), subst_many_lift(&r, &[var(1), var(0)], 5)),
                    var(2),
                );
                let compat = Judgement::TermEq {
                    ctx: {
                        let mut c = ctx.clone();
                        c.0.push(a.clone());
                        c.0.push(shift(&a, 1));
                        c.0.push(r.clone());
                        c
                    },
                    lhs: subst_many_lift(body, &[var(2)], 3),
                    rhs: subst_many_lift(body, &[var(1)], 3),
                    ty: subst_many_lift(motive, &[cls3], 3),
                };
                let ev = self.find_hyp(&compat).ok_or_else(|| SynthError::NeedsEvidence {
                    rule: "E-Q",
                    judgement: print_judgement(&compat),
                })?;
                self.apply("E-Q", vec![fm, ts, tb, ev], tm)
            }
            Expr::CodeP(p) => {
                let fp = self.kind_at(wf, p, Kind::PropS)?;
                self.apply("I-P1", vec![fp], tm)
            }
            Expr::CodeS(p) => {
                let fp = self.kind_at(wf, p, Kind::PropS)?;
                self.apply("I-Props", vec![fp], tm)
            }
            Expr::Truth(p) => Err(SynthError::BareWitness(print_judgement(&Judgement::Term {
                ctx,
                term: tm.clone(),
                ty: (**p).clone(),
            }))),
            Expr::BotElim { motive, prf } => {
                let fm = self.kind_at(wf, motive, Kind::Prop)?;
                let tp = self.term(wf, prf)?;
                self.expect_ty(&tp, &Expr::Bot)?;
                self.apply("E-Bot", vec![fm, tp], tm)
            }
            Expr::ImpLam { dom, body } => {
                let fd = self.kind(wf, dom)?;
                self.require_prop(&fd)?;
                let wf2 = self.extend(wf, fd)?;
                let tb = self.term(&wf2, body)?;
                let cod = strengthen(ty_of(&tb)?, 1)
                    .ok_or(SynthError::BodyDependsOnAssumption)?;
                let fimp = self.kind_at(wf, &imp((**dom).clone(), cod), Kind::Prop)?;
                self.apply("I-Imp", vec![fimp, tb], tm)
            }
            Expr::ImpApp { fun, arg } => {
                let tf = self.term(wf, fun)?;
                let dom = match ty_of(&tf)? {
                    Expr::Imp(a, _) => (**a).clone(),
                    _ => return Err(self.shape(&tf, "an implication")),
                };
                let ta = self.term(wf, arg)?;
                self.expect_ty(&ta, &dom)?;
                self.apply("E-Imp", vec![tf, ta], tm)
            }
            Expr::AndPair { left, right } => {
                let tl = self.term(wf, left)?;
                let tr = self.term(wf, right)?;
                let fand = self.kind_at(
                    wf,
                    &and(ty_of(&tl)?.clone(), ty_of(&tr)?.clone()),
                    Kind::Prop,
                )?;
                self.apply("I-And", vec![fand, tl, tr], tm)
            }
            Expr::AndProj { side, pair } => {
                let tp = self.term(wf, pair)?;
                if !matches!(ty_of(&tp)?, Expr::And(..)) {
                    return Err(self.shape(&tp, "a conjunction"));
                }
                let rule = match side {
                    Side::L => "E-And-l",
                    Side::R => "E-And-r",
                };
                self.apply(rule, vec![tp], tm)
            }
            Expr::OrInl { other, prf } => {
                let tp = self.term(wf, prf)?;
                let form = self.kind_at(
                    wf,
                    &or(ty_of(&tp)?.clone(), (**other).clone()),
                    Kind::Prop,
                )?;
                self.apply("I-Or-l", vec![form, tp], tm)
            }
            Expr::OrInr { other, prf } => {
                let tp = self.term(wf, prf)?;
                let form = self.kind_at(
                    wf,
                    &or((**other).clone(), ty_of(&tp)?.clone()),
                    Kind::Prop,
                )?;
                self.apply("I-Or-r", vec![form, tp], tm)
            }
            Expr::OrElim { motive, scrut, left, right } => {
                let fm = self.kind_at(wf, motive, Kind::Prop)?;
                let ts = self.term(wf, scrut)?;
                let (a, b) = match ty_of(&ts)? {
                    Expr::Or(a, b) => ((**a).clone(), (**b).clone()),
                    _ => return Err(self.shape(&ts, "a disjunction")),
                };
                let fa = self.kind(wf, &a)?;
                let wfa = self.extend(wf, fa)?;
                let tl = self.term(&wfa, left)?;
                self.expect_ty(&tl, &shift(motive, 1))?;
                let fb = self.kind(wf, &b)?;
                let wfb = self.extend(wf, fb)?;
                let tr = self.term(&wfb, right)?;
                self.expect_ty(&tr, &shift(motive, 1))?;
                self.apply("E-Or", vec![fm, ts, tl, tr], tm)
            }
            Expr::AllLam { dom, body } => {
                let fd = self.kind(wf, dom)?;
                let wf2 = self.extend(wf, fd)?;
                let tb = self.term(&wf2, body)?;
                let fall = self.kind_at(
                    wf,
                    &forall((**dom).clone(), ty_of(&tb)?.clone()),
                    Kind::Prop,
                )?;
                self.apply("I-All", vec![fall, tb], tm)
            }
            Expr::AllApp { fun, arg } => {
                let tf = self.term(wf, fun)?;
                let dom = match ty_of(&tf)? {
                    Expr::Forall { dom, .. } => (**dom).clone(),
                    _ => return Err(self.shape(&tf, "a universal")),
                };
                let ta = self.term(wf, arg)?;
                self.expect_ty(&ta, &dom)?;
                self.apply("E-All", vec![tf, ta], tm)
            }
            Expr::ExPair { dom, fam, wit, prf } => {
                let fex = self.kind_at(
                    wf,
                    &exists((**dom).clone(), (**fam).clone()),
                    Kind::Prop,
                )?;
                let tw = self.term(wf, wit)?;
                self.expect_ty(&tw, dom)?;
                let tp = self.term(wf, prf)?;
                self.expect_ty(&tp, &subst1(fam, wit))?;
                self.apply("I-Ex", vec![fex, tw, tp], tm)
            }
            Expr::ExElim { motive, scrut, body } => {
                let fm = self.kind_at(wf, motive, Kind::Prop)?;
                let ts = self.term(wf, scrut)?;
                let (a, f) = match ty_of(&ts)? {
                    Expr::Exists { dom, body } => ((**dom).clone(), (**body).clone()),
                    _ => return Err(self.shape(&ts, "an existential")),
                };
                let fa = self.kind(wf, &a)?;
                let wfa = self.extend(wf, fa)?;
                let ff = self.kind(&wfa, &f)?;
                let wfaf = self.extend(&wfa, ff)?;
                let tb = self.term(&wfaf, body)?;
                self.expect_ty(&tb, &shift(motive, 2))?;
                self.apply("E-Ex", vec![fm, ts, tb], tm)
            }
            Expr::IdRefl { ty, val } => {
                let tv = self.term(wf, val)?;
                self.expect_ty(&tv, ty)?;
                self.apply("I-Id", vec![tv], tm)
            }
            Expr::IdElim { fam, lhs, rhs, prf, base } => {
                let tp = self.term(wf, prf)?;
                let a = match ty_of(&tp)? {
                    Expr::Id { ty, lhs: l, rhs: r } if **l == **lhs && **r == **rhs => {
                        (**ty).clone()
                    }
                    Expr::Id { .. } => {
                        return Err(self.shape(&tp, "an identification of the annotated pair"))
                    }
                    _ => return Err(self.shape(&tp, "an identification")),
                };
                let fa = self.kind(wf, &a)?;
                let wfa = self.extend(wf, fa)?;
                let ffam = self.kind_at(&wfa, fam, Kind::Prop)?;
                let tb = self.term(wf, base)?;
                self.expect_ty(&tb, &subst1(fam, lhs))?;
                self.apply("E-Id", vec![ffam, tp, tb], tm)
            }
            Expr::Meta(_) | Expr::MSub { .. } => Err(SynthError::PatternNode),
            other => Err(SynthError::NotATerm(print_expr(other))),
        }
    }

    fn prop_lub(&self, a: &Derivation, b: &Derivation) -> Result<Kind, SynthError> {
        self.require_prop(a)?;
        self.require_prop(b)?;
        if kind_of(a)? == Kind::PropS && kind_of(b)? == Kind::PropS {
            Ok(Kind::PropS)
        } else {
            Ok(Kind::Prop)
        }
    }

    fn require_prop(&self, form: &Derivation) -> Result<(), SynthError> {
        let k = kind_of(form)?;
        if k.included_in(Kind::Prop) {
            Ok(())
        } else {
            Err(SynthError::KindNotIncluded {
                ty: print_expr(ty_part(form)?),
                found: k,
                want: Kind::Prop,
            })
        }
    }

    fn expect_ty(&self, term_d: &Derivation, want: &Expr) -> Result<(), SynthError> {
        let (term, found) = match term_d.concluded() {
            Judgement::Term { term, ty, .. } => (term, ty),
            _ => return Err(SynthError::NotCtxWf),
        };
        if found == want {
            Ok(())
        } else {
            Err(SynthError::TypeMismatch {
                term: print_expr(term),
                found: print_expr(found),
                want: print_expr(want),
            })
        }
    }

    fn shape(&self, term_d: &Derivation, want: &'static str) -> SynthError {
        match term_d.concluded() {
            Judgement::Term { term, ty, .. } => SynthError::TypeShape {
                term: print_expr(term),
                found: print_expr(ty),
                want,
            },
            _ => SynthError::NotCtxWf,
        }
    }
}

fn ctx_of(wf: &Derivation) -> Result<&Ctx, SynthError> {
    match wf.concluded() {
        Judgement::CtxWf(c) => Ok(c),
        _ => Err(SynthError::NotCtxWf),
    }
}

fn kind_of(form: &Derivation) -> Result<Kind, SynthError> {
    match form.concluded() {
        Judgement::TypeKind { kind, .. } => Ok(*kind),
        _ => Err(SynthError::NotCtxWf),
    }
}

fn ty_part(form: &Derivation) -> Result<&Expr, SynthError> {
    match form.concluded() {
        Judgement::TypeKind { ty, .. } => Ok(ty),
        _ => Err(SynthError::NotCtxWf),
    }
}

fn ty_of(term_d: &Derivation) -> Result<&Expr, SynthError> {
    match term_d.concluded() {
        Judgement::Term { ty, .. } => Ok(ty),
        _ => Err(SynthError::NotCtxWf),
    }
}

/// One-shot context synthesis.
pub fn synth_ctx(theory: &TheoryDesc, entries: &Ctx) -> Result<Derivation, SynthError> {
    Synth::new(theory).ctx(entries)
}

/// One-shot formation synthesis, context included.
pub fn synth_kind(theory: &TheoryDesc, entries: &Ctx, ty: &Expr) -> Result<Derivation, SynthError> {
    let mut s = Synth::new(theory);
    let wf = s.ctx(entries)?;
    s.kind(&wf, ty)
}

/// One-shot typing synthesis, context included.
pub fn synth_term(theory: &TheoryDesc, entries: &Ctx, tm: &Expr) -> Result<Derivation, SynthError> {
    let mut s = Synth::new(theory);
    let wf = s.ctx(entries)?;
    s.term(&wf, tm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::check;
    use crate::theory::TheoryDesc;

    fn checks(t: &TheoryDesc, d: &Derivation) {
        if let Err(e) = check(t, d) {
            panic!("synthesized derivation fails to check: {e}");
        }
    }

    #[test]
    fn compound_set_formation() {
        let t = TheoryDesc::emtt();
        let ty = pi(Expr::N1, sigma(Expr::N1, sum(Expr::N1, Expr::N0)));
        let d = synth_kind(&t, &Ctx::empty(), &ty).unwrap();
        assert_eq!(
            d.concluded(),
            &Judgement::TypeKind { ctx: Ctx::empty(), kind: Kind::Set, ty }
        );
        checks(&t, &d);
    }

    #[test]
    fn small_existential_is_props() {
        let t = TheoryDesc::emtt();
        let ty = exists(Expr::N1, eq(Expr::N1, var(0), Expr::Star));
        let d = synth_kind(&t, &Ctx::empty(), &ty).unwrap();
        assert!(matches!(
            d.concluded(),
            Judgement::TypeKind { kind: Kind::PropS, .. }
        ));
        checks(&t, &d);
    }

    #[test]
    fn connective_kinds_take_the_join() {
        let t = TheoryDesc::emtt();
        // A small prop or-ed with a large one lands at prop.
        let large = eq(Expr::P1, code_p(Expr::Bot), code_p(Expr::Bot));
        let ty = or(Expr::Bot, forall(Expr::P1, shift(&large, 1)));
        let d = synth_kind(&t, &Ctx::empty(), &ty).unwrap();
        assert!(matches!(
            d.concluded(),
            Judgement::TypeKind { kind: Kind::Prop, .. }
        ));
        checks(&t, &d);
        // Equality of subsets of the singleton is itself small.
        let d = synth_kind(&t, &Ctx::empty(), &large).unwrap();
        assert!(matches!(
            d.concluded(),
            Judgement::TypeKind { kind: Kind::PropS, .. }
        ));
        checks(&t, &d);
    }

    #[test]
    fn impredicativity_changes_the_universal_kind() {
        let ty = forall(Expr::PropS, dec_s(var(0)));
        let base = synth_kind(&TheoryDesc::mtt(), &Ctx::empty(), &ty).unwrap();
        assert!(matches!(
            base.concluded(),
            Judgement::TypeKind { kind: Kind::Prop, .. }
        ));
        checks(&TheoryDesc::mtt(), &base);
        let imp = synth_kind(&TheoryDesc::cc_ml(), &Ctx::empty(), &ty).unwrap();
        assert!(matches!(
            imp.concluded(),
            Judgement::TypeKind { kind: Kind::PropS, .. }
        ));
        checks(&TheoryDesc::cc_ml(), &imp);
    }

    #[test]
    fn lambda_and_application() {
        let t = TheoryDesc::emtt();
        let f = lam(Expr::N1, var(0));
        let d = synth_term(&t, &Ctx::empty(), &app(f, Expr::Star)).unwrap();
        assert!(matches!(
            d.concluded(),
            Judgement::Term { ty: Expr::N1, .. }
        ));
        checks(&t, &d);
    }

    #[test]
    fn list_recursion() {
        let t = TheoryDesc::emtt();
        // Fold a list of units back to a unit; the motive is constant.
        let e = listelim(
            Expr::N1,
            cons(nil(Expr::N1), Expr::Star),
            Expr::Star,
            var(0),
        );
        let d = synth_term(&t, &Ctx::empty(), &e).unwrap();
        assert!(matches!(
            d.concluded(),
            Judgement::Term { ty: Expr::N1, .. }
        ));
        checks(&t, &d);
    }

    #[test]
    fn tagged_proof_terms_synthesize() {
        let t = TheoryDesc::mtt();
        let e = implam(Expr::Bot, var(0));
        let d = synth_term(&t, &Ctx::empty(), &e).unwrap();
        assert_eq!(
            d.concluded(),
            &Judgement::Term {
                ctx: Ctx::empty(),
                term: e,
                ty: imp(Expr::Bot, Expr::Bot),
            }
        );
        checks(&t, &d);
    }

    #[test]
    fn quotients_need_evidence() {
        let t = TheoryDesc::emtt();
        let top = imp(Expr::Bot, Expr::Bot);
        let q = quot(Expr::N1, shift(&top, 2));
        let e = qcls(q.clone(), Expr::Star);
        match synth_term(&t, &Ctx::empty(), &e) {
            Err(SynthError::NeedsEvidence { rule: "F-Quot", .. }) => {}
            other => panic!("expected missing-evidence failure, got {other:?}"),
        }

        // With the formation assumed, the class synthesizes and checks once
        // the assumption itself is a real derivation.
        let mut s = Synth::new(&t);
        let rules = crate::rules::rules_of(&t);
        let step = |name: &str, ch: Vec<Derivation>| Derivation::step(&rules, name, ch).unwrap();
        let wf0 = step("ctx-emp", vec![]);
        let n1 = step("F-N1", vec![wf0.clone()]);
        let wf1 = step("ctx-ext", vec![n1.clone()]);
        let n1b = step("F-N1", vec![wf1.clone()]);
        let wf2 = step("ctx-ext", vec![n1b]);
        let bot2 = step("F-Bot", vec![wf2.clone()]);
        let rel_form = step("F-Imp", vec![bot2.clone(), bot2]);

        // One proof of the closed total relation per equivalence premise.
        let top_at = |wf: &Derivation| {
            let bot = step("F-Bot", vec![wf.clone()]);
            let form = step(
                "F-Imp",
                vec![
                    step("incl-props-prop", vec![bot.clone()]),
                    step("incl-props-prop", vec![bot]),
                ],
            );
            let wfb = step("ctx-ext", vec![step("F-Bot", vec![wf.clone()])]);
            let body = Derivation::var(wfb, 0).unwrap();
            step("I-Imp", vec![form, body])
        };
        let refl = top_at(&wf1);
        let sym = top_at(&step("ctx-ext", vec![rel_form.clone()]));
        let wf3 = step("ctx-ext", vec![step("F-N1", vec![wf2])]);
        let top3 = step("F-Imp", {
            let b = step("F-Bot", vec![wf3.clone()]);
            vec![b.clone(), b]
        });
        let wf4 = step("ctx-ext", vec![top3]);
        let top4 = step("F-Imp", {
            let b = step("F-Bot", vec![wf4.clone()]);
            vec![b.clone(), b]
        });
        let wf5 = step("ctx-ext", vec![top4]);
        let trans = top_at(&wf5);
        let quot_form = step(
            "F-Quot",
            vec![step("F-N1", vec![wf0]), rel_form, refl, sym, trans],
        );
        assert_eq!(
            quot_form.concluded(),
            &Judgement::TypeKind { ctx: Ctx::empty(), kind: Kind::Set, ty: q }
        );
        check(&t, &quot_form).unwrap();

        s.assume(quot_form);
        let wf = s.ctx(&Ctx::empty()).unwrap();
        let d = s.term(&wf, &e).unwrap();
        checks(&t, &d);
    }

    #[test]
    fn witnesses_are_not_invented() {
        let t = TheoryDesc::emtt();
        match synth_term(&t, &Ctx::empty(), &truth(Expr::Bot)) {
            Err(SynthError::BareWitness(_)) => {}
            other => panic!("expected a bare-witness failure, got {other:?}"),
        }
    }

    #[test]
    fn types_are_not_terms_and_back() {
        let t = TheoryDesc::emtt();
        assert!(matches!(
            synth_term(&t, &Ctx::empty(), &Expr::N1),
            Err(SynthError::NotATerm(_))
        ));
        assert!(matches!(
            synth_kind(&t, &Ctx::empty(), &Expr::Star),
            Err(SynthError::NotAType(_))
        ));
        assert!(matches!(
            synth_kind(&t, &Ctx::empty(), &Expr::PropS),
            Err(SynthError::NotInTheory { .. })
        ));
    }

    #[test]
    fn open_types_use_the_context() {
        let t = TheoryDesc::emtt();
        let ctx = Ctx::empty().push(Expr::N1).push(list(Expr::N1));
        let ty = eq(list(Expr::N1), var(0), cons(nil(Expr::N1), var(1)));
        let d = synth_kind(&t, &ctx, &ty).unwrap();
        assert_eq!(
            d.concluded(),
            &Judgement::TypeKind { ctx, kind: Kind::PropS, ty }
        );
        checks(&t, &d);
    }
}
