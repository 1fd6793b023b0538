//! Rule schemas and first-order schema matching.
//!
//! Every inference rule of every theory in the family is a `RuleSchema`:
//! a list of premise judgement patterns, a conclusion pattern, and side
//! conditions. Checking a derivation step is matching the premises against
//! the children's concluded judgements in order, then instantiating the
//! conclusion and comparing it with the claimed one. There is no search and
//! no normalization anywhere; the only computation is the deferred
//! substitution baked into `MSub` pattern nodes.
//!
//! Scoping convention for metavariables: patterns are matched against
//! judgements whose context is `ambient ++ ext`. A metavariable's value is
//! scoped exactly where its first (binding) occurrence sits; any use at a
//! different binder depth must be wrapped in `MSub { body, args, lift }`,
//! which on instantiation replaces the `args.len()` innermost indices of the
//! value and shifts the remaining free indices by `lift`. The schema linter
//! (`lint_schema`) enforces that matching always sees a bare binding
//! occurrence before any `MSub` use and that conclusions are fully
//! determined by premises, which is what lets the checker compute
//! conclusions instead of trusting them.

mod base;
mod congruence;
mod extensional;
mod intensional;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

use crate::judgement::Judgement;
use crate::syntax::{subst_many_lift, Ctx, Expr};
use crate::theory::{Kind, TheoryDesc};

/// Kind position in a pattern: fixed, constrained metavariable, or ignored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KindPat {
    Exact(Kind),
    /// Binds kind metavariable `.0`; the matched kind must be in `.1`.
    MetaIn(u16, &'static [Kind]),
    /// Matches any kind without binding. Premises only.
    Any,
}

pub const ALL_KINDS: &[Kind] = &[Kind::PropS, Kind::Prop, Kind::Set, Kind::Col];
pub const PROP_KINDS: &[Kind] = &[Kind::PropS, Kind::Prop];
pub const TYPE_KINDS: &[Kind] = &[Kind::Set, Kind::Col];

/// Judgement body pattern. The context is handled separately (`PJudgement`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JPat {
    CtxWf,
    TypeKind { kind: KindPat, ty: Expr },
    Term { term: Expr, ty: Expr },
    TypeEq { kind: KindPat, lhs: Expr, rhs: Expr },
    TermEq { lhs: Expr, rhs: Expr, ty: Expr },
}

/// A judgement pattern: context extension entries over the ambient context
/// (entry `i` is scoped over `ambient + i`), plus the judgement body scoped
/// over `ambient + ext.len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PJudgement {
    pub ext: Vec<Expr>,
    pub j: JPat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SideCond {
    /// The ambient context must be empty.
    EmptyAmbient,
}

#[derive(Debug, Clone)]
pub struct RuleSchema {
    pub name: &'static str,
    pub premises: Vec<PJudgement>,
    pub conclusion: PJudgement,
    pub side: Vec<SideCond>,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum MatchError {
    #[error("rule takes {expected} premise(s), {found} given")]
    PremiseCount { expected: usize, found: usize },
    #[error("premise {premise}: context does not extend the ambient context")]
    AmbientMismatch { premise: usize },
    #[error("premise {premise}: context entry {entry} does not match")]
    ExtMismatch { premise: usize, entry: usize },
    #[error("premise {premise}: expected a {expected} judgement")]
    ShapeMismatch { premise: usize, expected: &'static str },
    #[error("premise {premise}: kind {found} not allowed here")]
    KindMismatch { premise: usize, found: Kind },
    #[error("premise {premise}: {part} does not match")]
    PartMismatch { premise: usize, part: &'static str },
    #[error("metavariable ?{0} not determined by the premises")]
    UnboundMeta(u16),
    #[error("kind metavariable not determined by the premises")]
    UnboundKindMeta,
    #[error("rule applies only in the empty context")]
    EmptyAmbientViolated,
    #[error("claimed conclusion differs from the rule's conclusion")]
    ConclusionMismatch,
    #[error("claimed conclusion context is shorter than the rule extends it")]
    ConclusionCtxTooShort,
    #[error("claimed conclusion has the wrong judgement form")]
    ConclusionShape,
    #[error("judgement contains schema-only nodes")]
    PatternNodeInJudgement,
}

/// Metavariable bindings accumulated while matching premises.
#[derive(Debug, Default, Clone)]
pub struct Binding {
    exprs: HashMap<u16, Expr>,
    kinds: HashMap<u16, Kind>,
}

impl Binding {
    pub fn expr(&self, m: u16) -> Option<&Expr> {
        self.exprs.get(&m)
    }

    pub fn kind(&self, m: u16) -> Option<Kind> {
        self.kinds.get(&m).copied()
    }
}

fn heads_agree(p: &Expr, a: &Expr) -> bool {
    if std::mem::discriminant(p) != std::mem::discriminant(a) {
        return false;
    }
    match (p, a) {
        (Expr::Var(i), Expr::Var(j)) => i == j,
        (Expr::AndProj { side: s, .. }, Expr::AndProj { side: t, .. }) => s == t,
        _ => true,
    }
}

/// Instantiate a pattern expression under the bindings, evaluating every
/// `MSub` node. The result contains no schema nodes.
pub fn instantiate_expr(pat: &Expr, bind: &Binding) -> Result<Expr, MatchError> {
    match pat {
        Expr::Meta(m) => bind.exprs.get(m).cloned().ok_or(MatchError::UnboundMeta(*m)),
        Expr::MSub { body, args, lift } => {
            let body = instantiate_expr(body, bind)?;
            let args = args
                .iter()
                .map(|a| instantiate_expr(a, bind))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(subst_many_lift(&body, &args, *lift))
        }
        _ => {
            let kids = pat
                .children()
                .iter()
                .map(|(c, _)| instantiate_expr(c, bind))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(pat.rebuild(kids))
        }
    }
}

/// Match a pattern expression against a concrete expression, extending the
/// bindings at bare metavariable occurrences.
fn match_expr(pat: &Expr, actual: &Expr, bind: &mut Binding) -> bool {
    match pat {
        Expr::Meta(m) => match bind.exprs.get(m) {
            Some(v) => v == actual,
            None => {
                bind.exprs.insert(*m, actual.clone());
                true
            }
        },
        Expr::MSub { .. } => match instantiate_expr(pat, bind) {
            Ok(e) => &e == actual,
            Err(_) => false,
        },
        _ => {
            if !heads_agree(pat, actual) {
                return false;
            }
            let pk = pat.children();
            let ak = actual.children();
            debug_assert_eq!(pk.len(), ak.len());
            pk.iter().zip(ak.iter()).all(|((p, _), (a, _))| match_expr(p, a, bind))
        }
    }
}

fn match_kind(
    pat: &KindPat,
    actual: Kind,
    bind: &mut Binding,
    premise: usize,
) -> Result<(), MatchError> {
    match pat {
        KindPat::Exact(k) => {
            if *k == actual {
                Ok(())
            } else {
                Err(MatchError::KindMismatch { premise, found: actual })
            }
        }
        KindPat::MetaIn(m, allowed) => match bind.kinds.get(m) {
            Some(k) => {
                if *k == actual {
                    Ok(())
                } else {
                    Err(MatchError::KindMismatch { premise, found: actual })
                }
            }
            None => {
                if allowed.contains(&actual) {
                    bind.kinds.insert(*m, actual);
                    Ok(())
                } else {
                    Err(MatchError::KindMismatch { premise, found: actual })
                }
            }
        },
        KindPat::Any => Ok(()),
    }
}

fn instantiate_kind(pat: &KindPat, bind: &Binding) -> Result<Kind, MatchError> {
    match pat {
        KindPat::Exact(k) => Ok(*k),
        KindPat::MetaIn(m, _) => bind.kinds.get(m).copied().ok_or(MatchError::UnboundKindMeta),
        KindPat::Any => Err(MatchError::UnboundKindMeta),
    }
}

fn match_premise(
    ambient: &Ctx,
    pj: &PJudgement,
    actual: &Judgement,
    bind: &mut Binding,
    premise: usize,
) -> Result<(), MatchError> {
    let k = pj.ext.len();
    let (head, ext_actual) = actual
        .ctx()
        .split_last(k)
        .ok_or(MatchError::AmbientMismatch { premise })?;
    if &head != ambient {
        return Err(MatchError::AmbientMismatch { premise });
    }
    for (i, pat) in pj.ext.iter().enumerate() {
        if !match_expr(pat, &ext_actual[i], bind) {
            return Err(MatchError::ExtMismatch { premise, entry: i });
        }
    }
    let fail = |part| Err(MatchError::PartMismatch { premise, part });
    match (&pj.j, actual) {
        (JPat::CtxWf, Judgement::CtxWf(_)) => Ok(()),
        (JPat::TypeKind { kind, ty }, Judgement::TypeKind { kind: ak, ty: at, .. }) => {
            match_kind(kind, *ak, bind, premise)?;
            if !match_expr(ty, at, bind) {
                return fail("type");
            }
            Ok(())
        }
        (JPat::Term { term, ty }, Judgement::Term { term: am, ty: at, .. }) => {
            if !match_expr(term, am, bind) {
                return fail("term");
            }
            if !match_expr(ty, at, bind) {
                return fail("type");
            }
            Ok(())
        }
        (JPat::TypeEq { kind, lhs, rhs }, Judgement::TypeEq { kind: ak, lhs: al, rhs: ar, .. }) => {
            match_kind(kind, *ak, bind, premise)?;
            if !match_expr(lhs, al, bind) {
                return fail("left type");
            }
            if !match_expr(rhs, ar, bind) {
                return fail("right type");
            }
            Ok(())
        }
        (JPat::TermEq { lhs, rhs, ty }, Judgement::TermEq { lhs: al, rhs: ar, ty: at, .. }) => {
            if !match_expr(lhs, al, bind) {
                return fail("left term");
            }
            if !match_expr(rhs, ar, bind) {
                return fail("right term");
            }
            if !match_expr(ty, at, bind) {
                return fail("type");
            }
            Ok(())
        }
        _ => Err(MatchError::ShapeMismatch { premise, expected: pj.j.shape_name() }),
    }
}

impl JPat {
    pub fn shape_name(&self) -> &'static str {
        match self {
            JPat::CtxWf => "context",
            JPat::TypeKind { .. } => "type",
            JPat::Term { .. } => "term",
            JPat::TypeEq { .. } => "type equality",
            JPat::TermEq { .. } => "term equality",
        }
    }
}

fn instantiate_conclusion(
    ambient: &Ctx,
    pj: &PJudgement,
    bind: &Binding,
) -> Result<Judgement, MatchError> {
    let mut ctx = ambient.clone();
    for pat in &pj.ext {
        ctx = ctx.push(instantiate_expr(pat, bind)?);
    }
    Ok(match &pj.j {
        JPat::CtxWf => Judgement::CtxWf(ctx),
        JPat::TypeKind { kind, ty } => Judgement::TypeKind {
            ctx,
            kind: instantiate_kind(kind, bind)?,
            ty: instantiate_expr(ty, bind)?,
        },
        JPat::Term { term, ty } => Judgement::Term {
            ctx,
            term: instantiate_expr(term, bind)?,
            ty: instantiate_expr(ty, bind)?,
        },
        JPat::TypeEq { kind, lhs, rhs } => Judgement::TypeEq {
            ctx,
            kind: instantiate_kind(kind, bind)?,
            lhs: instantiate_expr(lhs, bind)?,
            rhs: instantiate_expr(rhs, bind)?,
        },
        JPat::TermEq { lhs, rhs, ty } => Judgement::TermEq {
            ctx,
            lhs: instantiate_expr(lhs, bind)?,
            rhs: instantiate_expr(rhs, bind)?,
            ty: instantiate_expr(ty, bind)?,
        },
    })
}

impl RuleSchema {
    /// The ambient context for an application whose first premise concluded
    /// `first`: its context stripped of the first premise's extension.
    fn ambient_from(&self, premises: &[&Judgement]) -> Result<Ctx, MatchError> {
        match (self.premises.first(), premises.first()) {
            (Some(pj), Some(j)) => j
                .ctx()
                .split_last(pj.ext.len())
                .map(|(head, _)| head)
                .ok_or(MatchError::AmbientMismatch { premise: 0 }),
            _ => Ok(Ctx::empty()),
        }
    }

    /// Compute the conclusion this rule yields from the given premise
    /// judgements. Fails if the premises do not match the schema.
    pub fn conclude(&self, premises: &[&Judgement]) -> Result<Judgement, MatchError> {
        if premises.len() != self.premises.len() {
            return Err(MatchError::PremiseCount {
                expected: self.premises.len(),
                found: premises.len(),
            });
        }
        for j in premises {
            if j.has_pattern_nodes() {
                return Err(MatchError::PatternNodeInJudgement);
            }
        }
        let ambient = self.ambient_from(premises)?;
        for cond in &self.side {
            match cond {
                SideCond::EmptyAmbient => {
                    if !ambient.is_empty() {
                        return Err(MatchError::EmptyAmbientViolated);
                    }
                }
            }
        }
        let mut bind = Binding::default();
        for (i, (pj, j)) in self.premises.iter().zip(premises.iter()).enumerate() {
            match_premise(&ambient, pj, j, &mut bind, i)?;
        }
        instantiate_conclusion(&ambient, &self.conclusion, &bind)
    }

    /// Verify that applying this rule to `premises` yields exactly `claimed`.
    pub fn check_instance(
        &self,
        premises: &[&Judgement],
        claimed: &Judgement,
    ) -> Result<(), MatchError> {
        if claimed.has_pattern_nodes() {
            return Err(MatchError::PatternNodeInJudgement);
        }
        let computed = self.conclude(premises)?;
        if &computed == claimed {
            Ok(())
        } else {
            Err(MatchError::ConclusionMismatch)
        }
    }
}

/// Schema sanity: every metavariable is bound by a bare occurrence before
/// any deferred-substitution use, and the conclusion (extension, kinds,
/// parts) is fully determined by the premises.
pub fn lint_schema(rule: &RuleSchema) -> Result<(), String> {
    use std::collections::HashSet;

    fn scan(
        e: &Expr,
        bound: &mut HashSet<u16>,
        binding_position: bool,
        rule: &str,
    ) -> Result<(), String> {
        match e {
            Expr::Meta(m) => {
                if !bound.contains(m) {
                    if binding_position {
                        bound.insert(*m);
                    } else {
                        return Err(format!("rule {rule}: ?{m} used before it is bound"));
                    }
                }
                Ok(())
            }
            Expr::MSub { body, args, .. } => {
                scan(body, bound, false, rule)?;
                for a in args {
                    scan(a, bound, false, rule)?;
                }
                Ok(())
            }
            _ => {
                for (c, _) in e.children() {
                    scan(c, bound, binding_position, rule)?;
                }
                Ok(())
            }
        }
    }

    fn scan_kind(
        k: &KindPat,
        bound: &mut HashSet<u16>,
        binding_position: bool,
        rule: &str,
    ) -> Result<(), String> {
        if let KindPat::MetaIn(m, allowed) = k {
            if allowed.is_empty() {
                return Err(format!("rule {rule}: empty kind constraint"));
            }
            if !bound.contains(m) {
                if binding_position {
                    bound.insert(*m);
                } else {
                    return Err(format!("rule {rule}: kind metavariable used before bound"));
                }
            }
        }
        if matches!(k, KindPat::Any) && !binding_position {
            return Err(format!("rule {rule}: kind wildcard in conclusion"));
        }
        Ok(())
    }

    fn scan_pj(
        pj: &PJudgement,
        bound: &mut HashSet<u16>,
        kinds: &mut HashSet<u16>,
        binding_position: bool,
        rule: &str,
    ) -> Result<(), String> {
        for e in &pj.ext {
            scan(e, bound, binding_position, rule)?;
        }
        match &pj.j {
            JPat::CtxWf => Ok(()),
            JPat::TypeKind { kind, ty } => {
                scan_kind(kind, kinds, binding_position, rule)?;
                scan(ty, bound, binding_position, rule)
            }
            JPat::Term { term, ty } => {
                scan(term, bound, binding_position, rule)?;
                scan(ty, bound, binding_position, rule)
            }
            JPat::TypeEq { kind, lhs, rhs } => {
                scan_kind(kind, kinds, binding_position, rule)?;
                scan(lhs, bound, binding_position, rule)?;
                scan(rhs, bound, binding_position, rule)
            }
            JPat::TermEq { lhs, rhs, ty } => {
                scan(lhs, bound, binding_position, rule)?;
                scan(rhs, bound, binding_position, rule)?;
                scan(ty, bound, binding_position, rule)
            }
        }
    }

    let mut bound = HashSet::new();
    let mut kinds = HashSet::new();
    for pj in &rule.premises {
        scan_pj(pj, &mut bound, &mut kinds, true, rule.name)?;
    }
    scan_pj(&rule.conclusion, &mut bound, &mut kinds, false, rule.name)
}

/// The rules of one theory, name-addressable, in a stable listing order.
pub struct RuleSet {
    theory: TheoryDesc,
    order: Vec<RuleSchema>,
    index: HashMap<&'static str, usize>,
}

impl RuleSet {
    fn new(theory: TheoryDesc) -> RuleSet {
        RuleSet { theory, order: Vec::new(), index: HashMap::new() }
    }

    fn add(&mut self, rule: RuleSchema) {
        if let Err(e) = lint_schema(&rule) {
            panic!("bad schema: {e}");
        }
        if self.index.insert(rule.name, self.order.len()).is_some() {
            panic!("duplicate rule name {}", rule.name);
        }
        self.order.push(rule);
    }

    pub fn theory(&self) -> &TheoryDesc {
        &self.theory
    }

    pub fn get(&self, name: &str) -> Option<&RuleSchema> {
        self.index.get(name).map(|&i| &self.order[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = &RuleSchema> {
        self.order.iter()
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// Build (or fetch from the cache) the rule set of a theory.
pub fn rules_of(desc: &TheoryDesc) -> Arc<RuleSet> {
    static CACHE: OnceLock<Mutex<HashMap<TheoryDesc, Arc<RuleSet>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("rule cache poisoned");
    if let Some(rs) = guard.get(desc) {
        return Arc::clone(rs);
    }
    let built = Arc::new(build_rules(desc));
    guard.insert(desc.clone(), Arc::clone(&built));
    built
}

fn build_rules(desc: &TheoryDesc) -> RuleSet {
    desc.validate().expect("invalid theory description");
    let mut rs = RuleSet::new(desc.clone());
    base::add(&mut rs);
    match desc.base {
        crate::theory::TheoryBase::Mtt => intensional::add(&mut rs, desc),
        crate::theory::TheoryBase::Emtt => extensional::add(&mut rs, desc),
    }
    if desc.congruence {
        congruence::add(&mut rs, desc);
    }
    if desc.resizing {
        base::add_impredicative(&mut rs);
    }
    rs
}

/// Shared shorthands for writing schemas.
pub(crate) mod decl {
    use super::*;

    pub use crate::syntax::build::*;

    pub fn wfj(ext: Vec<Expr>) -> PJudgement {
        PJudgement { ext, j: JPat::CtxWf }
    }

    pub fn tyj(ext: Vec<Expr>, kind: KindPat, ty: Expr) -> PJudgement {
        PJudgement { ext, j: JPat::TypeKind { kind, ty } }
    }

    pub fn tmj(ext: Vec<Expr>, term: Expr, ty: Expr) -> PJudgement {
        PJudgement { ext, j: JPat::Term { term, ty } }
    }

    pub fn tyeqj(ext: Vec<Expr>, kind: KindPat, lhs: Expr, rhs: Expr) -> PJudgement {
        PJudgement { ext, j: JPat::TypeEq { kind, lhs, rhs } }
    }

    pub fn tmeqj(ext: Vec<Expr>, lhs: Expr, rhs: Expr, ty: Expr) -> PJudgement {
        PJudgement { ext, j: JPat::TermEq { lhs, rhs, ty } }
    }

    pub fn exact(k: Kind) -> KindPat {
        KindPat::Exact(k)
    }

    /// Kind metavariable ranging over every kind.
    pub fn kany(m: u16) -> KindPat {
        KindPat::MetaIn(m, ALL_KINDS)
    }

    /// Kind metavariable ranging over the proposition kinds.
    pub fn kprop(m: u16) -> KindPat {
        KindPat::MetaIn(m, PROP_KINDS)
    }

    /// Kind metavariable ranging over the type kinds.
    pub fn ktype(m: u16) -> KindPat {
        KindPat::MetaIn(m, TYPE_KINDS)
    }

    pub fn rule(
        name: &'static str,
        premises: Vec<PJudgement>,
        conclusion: PJudgement,
    ) -> RuleSchema {
        RuleSchema { name, premises, conclusion, side: Vec::new() }
    }

    pub fn axiom_rule(name: &'static str, conclusion: PJudgement, side: Vec<SideCond>) -> RuleSchema {
        RuleSchema { name, premises: Vec::new(), conclusion, side }
    }
}

#[cfg(test)]
mod tests {
    use super::decl::*;
    use super::*;
    use crate::theory::TheoryDesc;

    #[test]
    fn all_preset_rule_sets_build_and_lint() {
        for desc in [
            TheoryDesc::mtt(),
            TheoryDesc::emtt(),
            TheoryDesc::emtt_c(),
            TheoryDesc::emtt().with_propext(),
            TheoryDesc::cc_ml(),
            TheoryDesc::cc_ml_c(),
            TheoryDesc::mtt().with_congruence(),
        ] {
            let rs = rules_of(&desc);
            assert!(rs.len() > 50, "{} has too few rules: {}", desc.name(), rs.len());
            for r in rs.iter() {
                lint_schema(r).unwrap();
            }
        }
    }

    #[test]
    fn theory_separation() {
        let emtt = rules_of(&TheoryDesc::emtt());
        let mtt = rules_of(&TheoryDesc::mtt());
        // Extensional apparatus is absent from the intensional theory.
        for name in ["refl-Eq", "F-Quot", "F-P1", "prop-mono", "eta-Pi"] {
            assert!(emtt.get(name).is_some(), "emtt should have {name}");
            assert!(mtt.get(name).is_none(), "mtt should not have {name}");
        }
        // Tagged proof apparatus is absent from the extensional theory;
        // logical beta rules exist only where proofs compute.
        for name in ["F-Props", "I-Id", "E-Id", "C-Imp", "C-All", "C-Ex"] {
            assert!(mtt.get(name).is_some(), "mtt should have {name}");
            assert!(emtt.get(name).is_none(), "emtt should not have {name}");
        }
        // Shared logical rule names resolve to level-specific schemas.
        let emtt_i_imp = emtt.get("I-Imp").unwrap();
        let mtt_i_imp = mtt.get("I-Imp").unwrap();
        assert_ne!(emtt_i_imp.conclusion, mtt_i_imp.conclusion);
        // Classical and impredicative rules appear only with their flags.
        assert!(rules_of(&TheoryDesc::emtt_c()).get("lem").is_some());
        assert!(emtt.get("lem").is_none());
        assert!(rules_of(&TheoryDesc::cc_ml()).get("F-All-imp").is_some());
        assert!(mtt.get("F-All-imp").is_none());
        assert!(rules_of(&TheoryDesc::cc_ml_c()).get("lem-type").is_some());
        assert!(rules_of(&TheoryDesc::emtt().with_propext()).get("propext").is_some());
    }

    #[test]
    fn conclude_computes_formation() {
        use crate::judgement::Judgement as J;
        let rs = rules_of(&TheoryDesc::emtt());
        let wf_empty = J::CtxWf(Ctx::empty());
        let f_n0 = rs.get("F-N0").unwrap();
        let j = f_n0.conclude(&[&wf_empty]).unwrap();
        assert_eq!(
            j,
            J::TypeKind { ctx: Ctx::empty(), kind: Kind::Set, ty: Expr::N0 }
        );

        let f_list = rs.get("F-List").unwrap();
        let out = f_list.conclude(&[&j]).unwrap();
        assert_eq!(
            out,
            J::TypeKind { ctx: Ctx::empty(), kind: Kind::Set, ty: list(Expr::N0) }
        );
    }

    #[test]
    fn conclude_rejects_wrong_premises() {
        use crate::judgement::Judgement as J;
        let rs = rules_of(&TheoryDesc::emtt());
        let f_list = rs.get("F-List").unwrap();
        // A proposition is not a set; List formation must refuse it.
        let bot_wf = J::TypeKind { ctx: Ctx::empty(), kind: Kind::PropS, ty: Expr::Bot };
        assert!(matches!(
            f_list.conclude(&[&bot_wf]),
            Err(MatchError::KindMismatch { .. })
        ));
        assert!(matches!(
            f_list.conclude(&[]),
            Err(MatchError::PremiseCount { .. })
        ));
    }

    #[test]
    fn lint_catches_unbound_conclusion_meta() {
        let bad = rule(
            "bad-rule",
            vec![wfj(vec![])],
            tyj(vec![], exact(Kind::Set), mv(0)),
        );
        assert!(lint_schema(&bad).is_err());
    }

    #[test]
    fn lint_catches_msub_before_binding() {
        let bad = rule(
            "bad-msub",
            vec![tmj(vec![], msub(mv(0), vec![], 1), Expr::N1)],
            tyj(vec![], exact(Kind::Set), Expr::N1),
        );
        assert!(lint_schema(&bad).is_err());
    }
}
