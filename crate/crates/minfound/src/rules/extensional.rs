//! Rules of the extensional level: propositional equality with reflection,
//! proof irrelevance through the single proof term, true-style logical
//! rules, quotient sets, the power of the singleton, and the eta laws.
//!
//! Logical rules work uniformly at kind `prop`; small instances are reached
//! through the kind inclusion rules. Every logical conclusion is witnessed
//! by the canonical proof term, and `prop-mono` collapses any other witness
//! onto it.

use super::decl::*;
use super::RuleSet;
use crate::syntax::{dc, iff, neg, Expr};
use crate::theory::Kind::{Col, Prop, PropS, Set};
use crate::theory::TheoryDesc;

pub(super) fn add(rs: &mut RuleSet, desc: &TheoryDesc) {
    formations(rs);
    logic(rs);
    equality(rs);
    quotients(rs);
    powerset(rs);
    eta(rs);
    if desc.lem {
        rs.add(rule(
            "lem",
            vec![tyj(vec![], exact(Prop), mv(0))],
            tmj(vec![], truth(or(mv(0), neg(mv(0)))), or(mv(0), neg(mv(0)))),
        ));
    }
    if desc.propext {
        rs.add(rule(
            "propext",
            vec![
                tyj(vec![], exact(Prop), mv(0)),
                tyj(vec![], exact(Prop), mv(1)),
                tmj(vec![], mv(2), imp(mv(0), mv(1))),
                tmj(vec![], mv(3), imp(mv(1), mv(0))),
            ],
            tyeqj(vec![], exact(Prop), mv(0), mv(1)),
        ));
        rs.add(rule(
            "props-ext",
            vec![
                tyj(vec![], exact(PropS), mv(0)),
                tyj(vec![], exact(PropS), mv(1)),
                tmj(vec![], mv(2), imp(mv(0), mv(1))),
                tmj(vec![], mv(3), imp(mv(1), mv(0))),
            ],
            tyeqj(vec![], exact(PropS), mv(0), mv(1)),
        ));
    }
}

fn formations(rs: &mut RuleSet) {
    rs.add(rule(
        "F-Eq",
        vec![
            tyj(vec![], exact(Col), mv(0)),
            tmj(vec![], mv(1), mv(0)),
            tmj(vec![], mv(2), mv(0)),
        ],
        tyj(vec![], exact(Prop), eq(mv(0), mv(1), mv(2))),
    ));
    rs.add(rule(
        "F-Eq-s",
        vec![
            tyj(vec![], exact(Set), mv(0)),
            tmj(vec![], mv(1), mv(0)),
            tmj(vec![], mv(2), mv(0)),
        ],
        tyj(vec![], exact(PropS), eq(mv(0), mv(1), mv(2))),
    ));
    // Equality of subsets of the singleton is small even though their
    // power is a proper collection.
    rs.add(rule(
        "F-Eq-P1",
        vec![tmj(vec![], mv(0), Expr::P1), tmj(vec![], mv(1), Expr::P1)],
        tyj(vec![], exact(PropS), eq(Expr::P1, mv(0), mv(1))),
    ));
    // ?0 carrier, ?1 relation over x y, ?2-?4 witnesses that the relation
    // is reflexive, symmetric, and transitive.
    rs.add(rule(
        "F-Quot",
        vec![
            tyj(vec![], exact(Set), mv(0)),
            tyj(vec![mv(0), mshift(mv(0), 1)], exact(PropS), mv(1)),
            tmj(vec![mv(0)], mv(2), msub(mv(1), vec![var(0), var(0)], 1)),
            tmj(
                vec![mv(0), mshift(mv(0), 1), mv(1)],
                mv(3),
                msub(mv(1), vec![var(1), var(2)], 3),
            ),
            tmj(
                vec![
                    mv(0),
                    mshift(mv(0), 1),
                    mshift(mv(0), 2),
                    msub(mv(1), vec![var(2), var(1)], 3),
                    msub(mv(1), vec![var(2), var(1)], 4),
                ],
                mv(4),
                msub(mv(1), vec![var(4), var(2)], 5),
            ),
        ],
        tyj(vec![], exact(Set), quot(mv(0), mv(1))),
    ));
    rs.add(rule("F-P1", vec![wfj(vec![])], tyj(vec![], exact(Col), Expr::P1)));
}

fn logic(rs: &mut RuleSet) {
    rs.add(rule(
        "I-Imp",
        vec![
            tyj(vec![], exact(Prop), imp(mv(0), mv(1))),
            tmj(vec![mv(0)], mv(2), mshift(mv(1), 1)),
        ],
        tmj(vec![], truth(imp(mv(0), mv(1))), imp(mv(0), mv(1))),
    ));
    rs.add(rule(
        "E-Imp",
        vec![
            tmj(vec![], mv(0), imp(mv(1), mv(2))),
            tmj(vec![], mv(3), mv(1)),
        ],
        tmj(vec![], truth(mv(2)), mv(2)),
    ));
    rs.add(rule(
        "I-And",
        vec![
            tyj(vec![], exact(Prop), and(mv(0), mv(1))),
            tmj(vec![], mv(2), mv(0)),
            tmj(vec![], mv(3), mv(1)),
        ],
        tmj(vec![], truth(and(mv(0), mv(1))), and(mv(0), mv(1))),
    ));
    rs.add(rule(
        "E-And-l",
        vec![tmj(vec![], mv(0), and(mv(1), mv(2)))],
        tmj(vec![], truth(mv(1)), mv(1)),
    ));
    rs.add(rule(
        "E-And-r",
        vec![tmj(vec![], mv(0), and(mv(1), mv(2)))],
        tmj(vec![], truth(mv(2)), mv(2)),
    ));
    rs.add(rule(
        "I-Or-l",
        vec![
            tyj(vec![], exact(Prop), or(mv(0), mv(1))),
            tmj(vec![], mv(2), mv(0)),
        ],
        tmj(vec![], truth(or(mv(0), mv(1))), or(mv(0), mv(1))),
    ));
    rs.add(rule(
        "I-Or-r",
        vec![
            tyj(vec![], exact(Prop), or(mv(0), mv(1))),
            tmj(vec![], mv(2), mv(1)),
        ],
        tmj(vec![], truth(or(mv(0), mv(1))), or(mv(0), mv(1))),
    ));
    // ?0 motive, ?1 disjunction witness, ?4/?5 branch witnesses
    rs.add(rule(
        "E-Or",
        vec![
            tyj(vec![], exact(Prop), mv(0)),
            tmj(vec![], mv(1), or(mv(2), mv(3))),
            tmj(vec![mv(2)], mv(4), mshift(mv(0), 1)),
            tmj(vec![mv(3)], mv(5), mshift(mv(0), 1)),
        ],
        tmj(vec![], truth(mv(0)), mv(0)),
    ));
    rs.add(rule(
        "E-Bot",
        vec![tyj(vec![], exact(Prop), mv(0)), tmj(vec![], mv(1), Expr::Bot)],
        tmj(vec![], truth(mv(0)), mv(0)),
    ));
    rs.add(rule(
        "I-All",
        vec![
            tyj(vec![], exact(Prop), forall(mv(0), mv(1))),
            tmj(vec![mv(0)], mv(2), mv(1)),
        ],
        tmj(vec![], truth(forall(mv(0), mv(1))), forall(mv(0), mv(1))),
    ));
    rs.add(rule(
        "E-All",
        vec![
            tmj(vec![], mv(0), forall(mv(1), mv(2))),
            tmj(vec![], mv(3), mv(1)),
        ],
        tmj(
            vec![],
            truth(msub(mv(2), vec![mv(3)], 0)),
            msub(mv(2), vec![mv(3)], 0),
        ),
    ));
    rs.add(rule(
        "I-Ex",
        vec![
            tyj(vec![], exact(Prop), exists(mv(0), mv(1))),
            tmj(vec![], mv(2), mv(0)),
            tmj(vec![], mv(3), msub(mv(1), vec![mv(2)], 0)),
        ],
        tmj(vec![], truth(exists(mv(0), mv(1))), exists(mv(0), mv(1))),
    ));
    rs.add(rule(
        "E-Ex",
        vec![
            tyj(vec![], exact(Prop), mv(0)),
            tmj(vec![], mv(1), exists(mv(2), mv(3))),
            tmj(vec![mv(2), mv(3)], mv(4), mshift(mv(0), 2)),
        ],
        tmj(vec![], truth(mv(0)), mv(0)),
    ));
}

fn equality(rs: &mut RuleSet) {
    rs.add(rule(
        "I-Eq",
        vec![tmj(vec![], mv(0), mv(1))],
        tmj(
            vec![],
            truth(eq(mv(1), mv(0), mv(0))),
            eq(mv(1), mv(0), mv(0)),
        ),
    ));
    // Reflection: a proof of propositional equality yields the judgement.
    rs.add(rule(
        "refl-Eq",
        vec![tmj(vec![], mv(0), eq(mv(1), mv(2), mv(3)))],
        tmeqj(vec![], mv(2), mv(3), mv(1)),
    ));
    // Proof irrelevance: any witness equals the canonical one.
    rs.add(rule(
        "prop-mono",
        vec![tyj(vec![], exact(Prop), mv(0)), tmj(vec![], mv(1), mv(0))],
        tmeqj(vec![], mv(1), truth(mv(0)), mv(0)),
    ));
}

/// The class of the bound variable, for a body one binder below ambient.
pub(super) fn qcls_under_1(a: Expr, r: Expr) -> Expr {
    qcls(
        quot(mshift(a, 1), msub(r, vec![var(1), var(0)], 3)),
        var(0),
    )
}

/// The class of the first bound variable of the compatibility premise,
/// three binders below ambient.
fn qcls_under_3(a: Expr, r: Expr) -> Expr {
    qcls(
        quot(mshift(a, 3), msub(r, vec![var(1), var(0)], 5)),
        var(2),
    )
}

fn quotients(rs: &mut RuleSet) {
    rs.add(rule(
        "I-Q",
        vec![
            tyj(vec![], exact(Set), quot(mv(0), mv(1))),
            tmj(vec![], mv(2), mv(0)),
        ],
        tmj(vec![], qcls(quot(mv(0), mv(1)), mv(2)), quot(mv(0), mv(1))),
    ));
    rs.add(rule(
        "eq-Q",
        vec![
            tyj(vec![], exact(Set), quot(mv(0), mv(1))),
            tmj(vec![], mv(2), mv(0)),
            tmj(vec![], mv(3), mv(0)),
            tmj(vec![], mv(4), msub(mv(1), vec![mv(2), mv(3)], 0)),
        ],
        tmeqj(
            vec![],
            qcls(quot(mv(0), mv(1)), mv(2)),
            qcls(quot(mv(0), mv(1)), mv(3)),
            quot(mv(0), mv(1)),
        ),
    ));
    // Effectiveness: equal classes yield relatedness.
    rs.add(rule(
        "eff-Q",
        vec![
            tyj(vec![], exact(Set), quot(mv(0), mv(1))),
            tmj(vec![], mv(2), mv(0)),
            tmj(vec![], mv(3), mv(0)),
            tmeqj(
                vec![],
                qcls(quot(mv(0), mv(1)), mv(2)),
                qcls(quot(mv(0), mv(1)), mv(3)),
                quot(mv(0), mv(1)),
            ),
        ],
        tmj(
            vec![],
            truth(msub(mv(1), vec![mv(2), mv(3)], 0)),
            msub(mv(1), vec![mv(2), mv(3)], 0),
        ),
    ));
    // ?2 motive, ?3 scrutinee, ?4 body; the last premise checks that the
    // body respects the relation.
    rs.add(rule(
        "E-Q",
        vec![
            tyj(vec![quot(mv(0), mv(1))], kany(2), mv(2)),
            tmj(vec![], mv(3), quot(mv(0), mv(1))),
            tmj(
                vec![mv(0)],
                mv(4),
                msub(mv(2), vec![qcls_under_1(mv(0), mv(1))], 1),
            ),
            tmeqj(
                vec![mv(0), mshift(mv(0), 1), mv(1)],
                msub(mv(4), vec![var(2)], 3),
                msub(mv(4), vec![var(1)], 3),
                msub(mv(2), vec![qcls_under_3(mv(0), mv(1))], 3),
            ),
        ],
        tmj(
            vec![],
            qelim(mv(2), mv(3), mv(4)),
            msub(mv(2), vec![mv(3)], 0),
        ),
    ));
    rs.add(rule(
        "C-Q",
        vec![
            tyj(vec![quot(mv(0), mv(1))], kany(2), mv(2)),
            tmj(vec![], mv(3), mv(0)),
            tmj(
                vec![mv(0)],
                mv(4),
                msub(mv(2), vec![qcls_under_1(mv(0), mv(1))], 1),
            ),
            tmeqj(
                vec![mv(0), mshift(mv(0), 1), mv(1)],
                msub(mv(4), vec![var(2)], 3),
                msub(mv(4), vec![var(1)], 3),
                msub(mv(2), vec![qcls_under_3(mv(0), mv(1))], 3),
            ),
        ],
        tmeqj(
            vec![],
            qelim(mv(2), qcls(quot(mv(0), mv(1)), mv(3)), mv(4)),
            msub(mv(4), vec![mv(3)], 0),
            msub(mv(2), vec![qcls(quot(mv(0), mv(1)), mv(3))], 0),
        ),
    ));
}

fn powerset(rs: &mut RuleSet) {
    rs.add(rule(
        "I-P1",
        vec![tyj(vec![], exact(PropS), mv(0))],
        tmj(vec![], code_p(mv(0)), Expr::P1),
    ));
    // Logically equivalent small propositions name the same subset.
    rs.add(rule(
        "eq-P1",
        vec![
            tyj(vec![], exact(PropS), mv(0)),
            tyj(vec![], exact(PropS), mv(1)),
            tmj(vec![], mv(2), iff(mv(0), mv(1))),
        ],
        tmeqj(vec![], code_p(mv(0)), code_p(mv(1)), Expr::P1),
    ));
    rs.add(rule(
        "deq-P1",
        vec![
            tyj(vec![], exact(PropS), mv(0)),
            tyj(vec![], exact(PropS), mv(1)),
            tmeqj(vec![], code_p(mv(0)), code_p(mv(1)), Expr::P1),
        ],
        tmj(vec![], truth(iff(mv(0), mv(1))), iff(mv(0), mv(1))),
    ));
    rs.add(rule(
        "eta-P1",
        vec![tmj(vec![], mv(0), Expr::P1)],
        tmeqj(vec![], code_p(dc(mv(0))), mv(0), Expr::P1),
    ));
}

fn eta(rs: &mut RuleSet) {
    rs.add(rule(
        "eta-N1",
        vec![tmj(vec![], mv(0), Expr::N1)],
        tmeqj(
            vec![],
            n1elim(Expr::N1, mv(0), Expr::Star),
            mv(0),
            Expr::N1,
        ),
    ));
    rs.add(rule(
        "eta-List",
        vec![tmj(vec![], mv(0), list(mv(1)))],
        tmeqj(
            vec![],
            listelim(
                list(mshift(mv(1), 1)),
                mv(0),
                nil(mv(1)),
                cons(var(0), var(1)),
            ),
            mv(0),
            list(mv(1)),
        ),
    ));
    rs.add(rule(
        "eta-Sum",
        vec![tmj(vec![], mv(0), sum(mv(1), mv(2)))],
        tmeqj(
            vec![],
            sumelim(
                sum(mshift(mv(1), 1), mshift(mv(2), 1)),
                mv(0),
                inl(mshift(mv(2), 1), var(0)),
                inr(mshift(mv(1), 1), var(0)),
            ),
            mv(0),
            sum(mv(1), mv(2)),
        ),
    ));
    rs.add(rule(
        "eta-Sigma",
        vec![tmj(vec![], mv(0), sigma(mv(1), mv(2)))],
        tmeqj(
            vec![],
            sigelim(
                mshift(sigma(mv(1), mv(2)), 1),
                mv(0),
                spair(
                    mshift(mv(1), 2),
                    msub(mv(2), vec![var(0)], 3),
                    var(1),
                    var(0),
                ),
            ),
            mv(0),
            sigma(mv(1), mv(2)),
        ),
    ));
    rs.add(rule(
        "eta-Pi",
        vec![tmj(vec![], mv(0), pi(mv(1), mv(2)))],
        tmeqj(
            vec![],
            lam(mv(1), app(mshift(mv(0), 1), var(0))),
            mv(0),
            pi(mv(1), mv(2)),
        ),
    ));
    rs.add(rule(
        "eta-Q",
        vec![tmj(vec![], mv(2), quot(mv(0), mv(1)))],
        tmeqj(
            vec![],
            qelim(
                mshift(quot(mv(0), mv(1)), 1),
                mv(2),
                qcls(mshift(quot(mv(0), mv(1)), 1), var(0)),
            ),
            mv(2),
            quot(mv(0), mv(1)),
        ),
    ));
}
