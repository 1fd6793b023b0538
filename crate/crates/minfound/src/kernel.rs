//! The proof checker: derivation trees and their verification against a
//! theory's rule set.
//!
//! A `Derivation` is an explicit tree of rule applications with the claimed
//! conclusion stored at every node. Nodes are reference-counted so large
//! derivations can share subtrees; the checker memoizes on node identity and
//! visits each distinct node once.
//!
//! Everything that constructs derivations, including the builders in this
//! crate, is untrusted. The only way to obtain a [`CheckedJudgement`] is
//! [`check`], which recomputes every conclusion from the children via the
//! rule schemas and compares it with the claim. The one rule that is not a
//! schema is `var`: its conclusion types a variable by looking it up in the
//! context established by its single premise.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::rc::Rc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::judgement::Judgement;
use crate::rules::{rules_of, MatchError, RuleSet};
use crate::syntax::Expr;
use crate::theory::TheoryDesc;

/// Name of the built-in variable rule.
pub const VAR_RULE: &str = "var";

struct DerivInner {
    rule: String,
    children: Vec<Derivation>,
    concluded: Judgement,
}

/// A derivation tree node. Cheap to clone; clones share structure.
#[derive(Clone)]
pub struct Derivation(Rc<DerivInner>);

impl Derivation {
    /// Assemble a node from untrusted parts. The claim is not verified
    /// here; only [`check`] decides validity.
    pub fn new(rule: impl Into<String>, children: Vec<Derivation>, concluded: Judgement) -> Self {
        Derivation(Rc::new(DerivInner { rule: rule.into(), children, concluded }))
    }

    /// Apply a named schema, computing the conclusion from the children.
    /// Convenient for builders; the result still goes through [`check`].
    pub fn step(rules: &RuleSet, name: &str, children: Vec<Derivation>) -> Result<Self, BuildError> {
        let schema = rules
            .get(name)
            .ok_or_else(|| BuildError::UnknownRule(name.to_string()))?;
        let premises: Vec<&Judgement> = children.iter().map(|c| c.concluded()).collect();
        let concluded = schema
            .conclude(&premises)
            .map_err(|e| BuildError::Match { rule: name.to_string(), error: e })?;
        Ok(Derivation::new(name, children, concluded))
    }

    /// The variable rule: from `G ctx` conclude `G |- x_i : G(i)`.
    pub fn var(ctx_wf: Derivation, index: usize) -> Result<Self, BuildError> {
        let Judgement::CtxWf(ctx) = ctx_wf.concluded() else {
            return Err(BuildError::VarPremise);
        };
        let ty = ctx
            .lookup(index)
            .ok_or(BuildError::VarOutOfRange { index, depth: ctx.len() })?;
        let concluded = Judgement::Term { ctx: ctx.clone(), term: Expr::Var(index), ty };
        Ok(Derivation::new(VAR_RULE, vec![ctx_wf], concluded))
    }

    pub fn rule(&self) -> &str {
        &self.0.rule
    }

    pub fn children(&self) -> &[Derivation] {
        &self.0.children
    }

    pub fn concluded(&self) -> &Judgement {
        &self.0.concluded
    }

    /// Identity of the node, the unit of sharing and memoization.
    pub fn addr(&self) -> usize {
        Rc::as_ptr(&self.0) as usize
    }

    /// Number of distinct nodes reachable from this root.
    pub fn node_count(&self) -> usize {
        let mut seen = HashSet::new();
        let mut stack = vec![self.clone()];
        while let Some(d) = stack.pop() {
            if seen.insert(d.addr()) {
                stack.extend(d.children().iter().cloned());
            }
        }
        seen.len()
    }

    /// Number of rule applications counted as a tree, sharing unfolded.
    /// Can be exponentially larger than [`Derivation::node_count`].
    pub fn tree_size(&self) -> u128 {
        fn go(d: &Derivation, memo: &mut std::collections::HashMap<usize, u128>) -> u128 {
            if let Some(&n) = memo.get(&d.addr()) {
                return n;
            }
            let n: u128 = 1 + d.children().iter().map(|c| go(c, memo)).sum::<u128>();
            memo.insert(d.addr(), n);
            n
        }
        go(self, &mut Default::default())
    }
}

impl fmt::Debug for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Derivation")
            .field("rule", &self.0.rule)
            .field("children", &self.0.children.len())
            .field("concluded", &format_args!("{}", self.0.concluded))
            .finish()
    }
}

/// One row of the serialized form: children refer to earlier rows by index.
/// Serializing the node table instead of the tree keeps subtree sharing,
/// which a plain tree dump would unfold, in the worst case exponentially.
#[derive(Serialize, Deserialize)]
struct FlatNode {
    rule: String,
    children: Vec<usize>,
    concluded: Judgement,
}

impl Serialize for Derivation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut index: HashMap<usize, usize> = HashMap::new();
        let mut table: Vec<FlatNode> = Vec::new();
        // Post-order, iterative: children land in the table before parents
        // and deep derivations cannot overflow the call stack.
        let mut stack: Vec<(Derivation, bool)> = vec![(self.clone(), false)];
        while let Some((d, expanded)) = stack.pop() {
            if index.contains_key(&d.addr()) {
                continue;
            }
            if expanded {
                let children = d.children().iter().map(|c| index[&c.addr()]).collect();
                index.insert(d.addr(), table.len());
                table.push(FlatNode {
                    rule: d.rule().to_string(),
                    children,
                    concluded: d.concluded().clone(),
                });
            } else {
                stack.push((d.clone(), true));
                for c in d.children() {
                    stack.push((c.clone(), false));
                }
            }
        }
        table.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Derivation {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let table: Vec<FlatNode> = Vec::deserialize(de)?;
        let mut built: Vec<Derivation> = Vec::with_capacity(table.len());
        for (i, node) in table.into_iter().enumerate() {
            let mut children = Vec::with_capacity(node.children.len());
            for c in node.children {
                if c >= i {
                    return Err(D::Error::custom("derivation node refers forward"));
                }
                children.push(built[c].clone());
            }
            built.push(Derivation::new(node.rule, children, node.concluded));
        }
        built
            .pop()
            .ok_or_else(|| D::Error::custom("empty derivation table"))
    }
}

/// Errors from the untrusted construction helpers.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("unknown rule `{0}`")]
    UnknownRule(String),
    #[error("rule {rule}: {error}")]
    Match { rule: String, error: MatchError },
    #[error("the var rule needs a context premise")]
    VarPremise,
    #[error("variable {index} out of range in a context of depth {depth}")]
    VarOutOfRange { index: usize, depth: usize },
}

/// What went wrong at one node.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CheckErrorKind {
    #[error("unknown rule `{0}` in this theory")]
    UnknownRule(String),
    #[error("the var rule takes exactly one premise, a context formation")]
    VarShape,
    #[error("variable index {index} out of range in a context of depth {depth}")]
    VarOutOfRange { index: usize, depth: usize },
    #[error("var conclusion does not type the variable by its context entry")]
    VarConclusion,
    #[error(transparent)]
    Match(MatchError),
}

/// A check failure, located by the child-index path from the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckError {
    pub rule: String,
    pub path: Vec<usize>,
    pub kind: CheckErrorKind,
}

impl std::error::Error for CheckError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        Some(&self.kind)
    }
}

impl fmt::Display for CheckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rule {} at ", self.rule)?;
        if self.path.is_empty() {
            write!(f, "the root")?;
        } else {
            write!(f, "path ")?;
            for (i, p) in self.path.iter().enumerate() {
                if i > 0 {
                    write!(f, ".")?;
                }
                write!(f, "{p}")?;
            }
        }
        write!(f, ": {}", self.kind)
    }
}

/// A judgement together with the theory whose rules established it. Can
/// only be produced by [`check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckedJudgement {
    theory: TheoryDesc,
    judgement: Judgement,
}

impl CheckedJudgement {
    pub fn theory(&self) -> &TheoryDesc {
        &self.theory
    }

    pub fn judgement(&self) -> &Judgement {
        &self.judgement
    }

    pub fn into_judgement(self) -> Judgement {
        self.judgement
    }
}

impl fmt::Display for CheckedJudgement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.theory.name(), self.judgement)
    }
}

/// Check a derivation against a theory and return its stamped conclusion.
pub fn check(theory: &TheoryDesc, d: &Derivation) -> Result<CheckedJudgement, CheckError> {
    let rules = rules_of(theory);
    let mut checker = Checker { rules: &rules, seen: HashSet::new() };
    let mut path = Vec::new();
    checker.node(d, &mut path)?;
    Ok(CheckedJudgement { theory: *theory, judgement: d.concluded().clone() })
}

struct Checker<'a> {
    rules: &'a RuleSet,
    seen: HashSet<usize>,
}

impl Checker<'_> {
    fn node(&mut self, d: &Derivation, path: &mut Vec<usize>) -> Result<(), CheckError> {
        if self.seen.contains(&d.addr()) {
            return Ok(());
        }
        for (i, c) in d.children().iter().enumerate() {
            path.push(i);
            self.node(c, path)?;
            path.pop();
        }
        let err = |kind| {
            Err(CheckError { rule: d.rule().to_string(), path: path.clone(), kind })
        };
        if d.rule() == VAR_RULE {
            self.var_node(d).map_or_else(|k| err(k), Ok)?;
        } else {
            let Some(schema) = self.rules.get(d.rule()) else {
                return err(CheckErrorKind::UnknownRule(d.rule().to_string()));
            };
            let premises: Vec<&Judgement> = d.children().iter().map(|c| c.concluded()).collect();
            if let Err(e) = schema.check_instance(&premises, d.concluded()) {
                return err(CheckErrorKind::Match(e));
            }
        }
        self.seen.insert(d.addr());
        Ok(())
    }

    fn var_node(&self, d: &Derivation) -> Result<(), CheckErrorKind> {
        let [ctx_wf] = d.children() else {
            return Err(CheckErrorKind::VarShape);
        };
        let Judgement::CtxWf(ctx) = ctx_wf.concluded() else {
            return Err(CheckErrorKind::VarShape);
        };
        let Judgement::Term { ctx: cctx, term: Expr::Var(i), ty } = d.concluded() else {
            return Err(CheckErrorKind::VarConclusion);
        };
        if cctx != ctx {
            return Err(CheckErrorKind::VarConclusion);
        }
        let expected = ctx
            .lookup(*i)
            .ok_or(CheckErrorKind::VarOutOfRange { index: *i, depth: ctx.len() })?;
        if ty != &expected {
            return Err(CheckErrorKind::VarConclusion);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::judgement::Judgement as J;
    use crate::syntax::build::*;
    use crate::syntax::Ctx;
    use crate::theory::Kind;

    fn emtt() -> TheoryDesc {
        TheoryDesc::emtt()
    }

    fn step(t: &TheoryDesc, name: &str, children: Vec<Derivation>) -> Derivation {
        Derivation::step(&rules_of(t), name, children).unwrap()
    }

    #[test]
    fn identity_function_checks() {
        let t = emtt();
        let wf = step(&t, "ctx-emp", vec![]);
        let n1 = step(&t, "F-N1", vec![wf.clone()]);
        let wf_n1 = step(&t, "ctx-ext", vec![n1.clone()]);
        let n1_in_n1 = step(&t, "F-N1", vec![wf_n1.clone()]);
        let pi_form = step(&t, "F-Pi", vec![n1.clone(), n1_in_n1]);
        let body = Derivation::var(wf_n1, 0).unwrap();
        let lam_d = step(&t, "I-Pi", vec![pi_form, body]);
        let got = check(&t, &lam_d).unwrap();
        assert_eq!(
            got.judgement(),
            &J::Term {
                ctx: Ctx::empty(),
                term: lam(Expr::N1, var(0)),
                ty: pi(Expr::N1, Expr::N1),
            }
        );
        assert_eq!(got.theory(), &t);
    }

    #[test]
    fn tampered_conclusion_rejected() {
        let t = emtt();
        let wf = step(&t, "ctx-emp", vec![]);
        let forged = Derivation::new(
            "F-N0",
            vec![wf],
            J::TypeKind { ctx: Ctx::empty(), kind: Kind::Col, ty: Expr::N0 },
        );
        let e = check(&t, &forged).unwrap_err();
        assert!(matches!(e.kind, CheckErrorKind::Match(MatchError::ConclusionMismatch)));
    }

    #[test]
    fn rule_from_wrong_theory_rejected() {
        let t = emtt();
        let wf = step(&TheoryDesc::mtt(), "ctx-emp", vec![]);
        let props = step(&TheoryDesc::mtt(), "F-Props", vec![wf]);
        let e = check(&t, &props).unwrap_err();
        assert!(matches!(e.kind, CheckErrorKind::UnknownRule(_)));
        assert!(check(&TheoryDesc::mtt(), &props).is_ok());
    }

    #[test]
    fn error_paths_locate_the_failure() {
        let t = emtt();
        let wf = step(&t, "ctx-emp", vec![]);
        let n1 = step(&t, "F-N1", vec![wf.clone()]);
        let bad = Derivation::new(
            "F-N1",
            vec![wf],
            J::TypeKind { ctx: Ctx::empty(), kind: Kind::Set, ty: Expr::N0 },
        );
        let sum_d = Derivation::step(&rules_of(&t), "F-Sum", vec![n1, bad]).unwrap();
        let e = check(&t, &sum_d).unwrap_err();
        assert_eq!(e.path, vec![1]);
        assert_eq!(e.rule, "F-N1");
    }

    #[test]
    fn var_rule_types_by_lookup() {
        let t = emtt();
        let wf = step(&t, "ctx-emp", vec![]);
        let n1 = step(&t, "F-N1", vec![wf]);
        let wf1 = step(&t, "ctx-ext", vec![n1]);
        let list_n1 = step(&t, "F-List", vec![step(&t, "F-N1", vec![wf1.clone()])]);
        let wf2 = step(&t, "ctx-ext", vec![list_n1]);
        let v0 = Derivation::var(wf2.clone(), 0).unwrap();
        let v1 = Derivation::var(wf2.clone(), 1).unwrap();
        assert_eq!(
            check(&t, &v0).unwrap().judgement(),
            &J::Term {
                ctx: Ctx::empty().push(Expr::N1).push(list(Expr::N1)),
                term: var(0),
                ty: list(Expr::N1),
            }
        );
        assert_eq!(
            check(&t, &v1).unwrap().judgement(),
            &J::Term {
                ctx: Ctx::empty().push(Expr::N1).push(list(Expr::N1)),
                term: var(1),
                ty: Expr::N1,
            }
        );
        assert!(matches!(
            Derivation::var(wf2, 5),
            Err(BuildError::VarOutOfRange { .. })
        ));
    }

    #[test]
    fn sharing_is_checked_once_and_counted_once() {
        let t = emtt();
        let wf = step(&t, "ctx-emp", vec![]);
        let n1 = step(&t, "F-N1", vec![wf.clone()]);
        // A wide tree of many references to one node.
        let mut d = n1.clone();
        for _ in 0..30 {
            d = step(&t, "F-Sigma", vec![
                d.clone(),
                {
                    let wfx = step(&t, "ctx-ext", vec![d.clone()]);
                    step_under(&t, &wfx)
                },
            ]);
        }
        assert!(check(&t, &d).is_ok());
        assert!(d.node_count() < 200);
        assert!(d.tree_size() > 1_000_000);
    }

    fn step_under(t: &TheoryDesc, wfx: &Derivation) -> Derivation {
        step(t, "F-N1", vec![wfx.clone()])
    }

    #[test]
    fn serialization_round_trips_and_keeps_sharing() {
        let t = emtt();
        let wf = step(&t, "ctx-emp", vec![]);
        let mut d = step(&t, "F-N1", vec![wf]);
        for _ in 0..12 {
            let wfx = step(&t, "ctx-ext", vec![d.clone()]);
            d = step(&t, "F-Sigma", vec![d.clone(), step_under(&t, &wfx)]);
        }
        let json = serde_json::to_string(&d).unwrap();
        let back: Derivation = serde_json::from_str(&json).unwrap();
        assert_eq!(back.concluded(), d.concluded());
        assert_eq!(back.node_count(), d.node_count());
        assert_eq!(back.tree_size(), d.tree_size());
        assert!(check(&t, &back).is_ok());
    }
}
