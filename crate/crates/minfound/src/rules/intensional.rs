//! Rules of the intensional level: tagged proof terms with their beta
//! conversions, the intensional identity proposition, and the universe of
//! small propositions with its codes.
//!
//! Logical rule names coincide with the extensional level's; only the
//! schemas differ. Here every introduction and elimination builds a real
//! proof term and the `C-` rules compute with them, while extensionally the
//! same names conclude with the canonical witness.

use super::decl::*;
use super::RuleSet;
use crate::syntax::{lem_constant_type, Expr, Side};
use crate::theory::Kind::{Col, Prop, PropS, Set};
use crate::theory::TheoryDesc;

pub(super) fn add(rs: &mut RuleSet, desc: &TheoryDesc) {
    logic(rs);
    identity(rs);
    universe(rs);
    if desc.lem_constant {
        rs.add(rule(
            "lem-type",
            vec![wfj(vec![])],
            tmj(vec![], Expr::LemC, lem_constant_type()),
        ));
    }
}

fn logic(rs: &mut RuleSet) {
    rs.add(rule(
        "I-Imp",
        vec![
            tyj(vec![], exact(Prop), imp(mv(0), mv(1))),
            tmj(vec![mv(0)], mv(2), mshift(mv(1), 1)),
        ],
        tmj(vec![], implam(mv(0), mv(2)), imp(mv(0), mv(1))),
    ));
    rs.add(rule(
        "E-Imp",
        vec![
            tmj(vec![], mv(0), imp(mv(1), mv(2))),
            tmj(vec![], mv(3), mv(1)),
        ],
        tmj(vec![], impapp(mv(0), mv(3)), mv(2)),
    ));
    rs.add(rule(
        "C-Imp",
        vec![
            tyj(vec![], exact(Prop), imp(mv(0), mv(1))),
            tmj(vec![mv(0)], mv(2), mshift(mv(1), 1)),
            tmj(vec![], mv(3), mv(0)),
        ],
        tmeqj(
            vec![],
            impapp(implam(mv(0), mv(2)), mv(3)),
            msub(mv(2), vec![mv(3)], 0),
            mv(1),
        ),
    ));
    rs.add(rule(
        "I-And",
        vec![
            tyj(vec![], exact(Prop), and(mv(0), mv(1))),
            tmj(vec![], mv(2), mv(0)),
            tmj(vec![], mv(3), mv(1)),
        ],
        tmj(vec![], andpair(mv(2), mv(3)), and(mv(0), mv(1))),
    ));
    rs.add(rule(
        "E-And-l",
        vec![tmj(vec![], mv(0), and(mv(1), mv(2)))],
        tmj(vec![], andproj(Side::L, mv(0)), mv(1)),
    ));
    rs.add(rule(
        "E-And-r",
        vec![tmj(vec![], mv(0), and(mv(1), mv(2)))],
        tmj(vec![], andproj(Side::R, mv(0)), mv(2)),
    ));
    rs.add(rule(
        "C-And-l",
        vec![
            tyj(vec![], exact(Prop), and(mv(0), mv(1))),
            tmj(vec![], mv(2), mv(0)),
            tmj(vec![], mv(3), mv(1)),
        ],
        tmeqj(vec![], andproj(Side::L, andpair(mv(2), mv(3))), mv(2), mv(0)),
    ));
    rs.add(rule(
        "C-And-r",
        vec![
            tyj(vec![], exact(Prop), and(mv(0), mv(1))),
            tmj(vec![], mv(2), mv(0)),
            tmj(vec![], mv(3), mv(1)),
        ],
        tmeqj(vec![], andproj(Side::R, andpair(mv(2), mv(3))), mv(3), mv(1)),
    ));
    rs.add(rule(
        "I-Or-l",
        vec![
            tyj(vec![], exact(Prop), or(mv(0), mv(1))),
            tmj(vec![], mv(2), mv(0)),
        ],
        tmj(vec![], orinl(mv(1), mv(2)), or(mv(0), mv(1))),
    ));
    rs.add(rule(
        "I-Or-r",
        vec![
            tyj(vec![], exact(Prop), or(mv(0), mv(1))),
            tmj(vec![], mv(2), mv(1)),
        ],
        tmj(vec![], orinr(mv(0), mv(2)), or(mv(0), mv(1))),
    ));
    rs.add(rule(
        "E-Or",
        vec![
            tyj(vec![], exact(Prop), mv(0)),
            tmj(vec![], mv(1), or(mv(2), mv(3))),
            tmj(vec![mv(2)], mv(4), mshift(mv(0), 1)),
            tmj(vec![mv(3)], mv(5), mshift(mv(0), 1)),
        ],
        tmj(vec![], orelim(mv(0), mv(1), mv(4), mv(5)), mv(0)),
    ));
    rs.add(rule(
        "C-Or-l",
        vec![
            tyj(vec![], exact(Prop), mv(0)),
            tyj(vec![], exact(Prop), or(mv(1), mv(2))),
            tmj(vec![], mv(3), mv(1)),
            tmj(vec![mv(1)], mv(4), mshift(mv(0), 1)),
            tmj(vec![mv(2)], mv(5), mshift(mv(0), 1)),
        ],
        tmeqj(
            vec![],
            orelim(mv(0), orinl(mv(2), mv(3)), mv(4), mv(5)),
            msub(mv(4), vec![mv(3)], 0),
            mv(0),
        ),
    ));
    rs.add(rule(
        "C-Or-r",
        vec![
            tyj(vec![], exact(Prop), mv(0)),
            tyj(vec![], exact(Prop), or(mv(1), mv(2))),
            tmj(vec![], mv(3), mv(2)),
            tmj(vec![mv(1)], mv(4), mshift(mv(0), 1)),
            tmj(vec![mv(2)], mv(5), mshift(mv(0), 1)),
        ],
        tmeqj(
            vec![],
            orelim(mv(0), orinr(mv(1), mv(3)), mv(4), mv(5)),
            msub(mv(5), vec![mv(3)], 0),
            mv(0),
        ),
    ));
    rs.add(rule(
        "E-Bot",
        vec![tyj(vec![], exact(Prop), mv(0)), tmj(vec![], mv(1), Expr::Bot)],
        tmj(vec![], botelim(mv(0), mv(1)), mv(0)),
    ));
    rs.add(rule(
        "I-All",
        vec![
            tyj(vec![], exact(Prop), forall(mv(0), mv(1))),
            tmj(vec![mv(0)], mv(2), mv(1)),
        ],
        tmj(vec![], alllam(mv(0), mv(2)), forall(mv(0), mv(1))),
    ));
    rs.add(rule(
        "E-All",
        vec![
            tmj(vec![], mv(0), forall(mv(1), mv(2))),
            tmj(vec![], mv(3), mv(1)),
        ],
        tmj(vec![], allapp(mv(0), mv(3)), msub(mv(2), vec![mv(3)], 0)),
    ));
    rs.add(rule(
        "C-All",
        vec![
            tyj(vec![], exact(Prop), forall(mv(0), mv(1))),
            tmj(vec![mv(0)], mv(2), mv(1)),
            tmj(vec![], mv(3), mv(0)),
        ],
        tmeqj(
            vec![],
            allapp(alllam(mv(0), mv(2)), mv(3)),
            msub(mv(2), vec![mv(3)], 0),
            msub(mv(1), vec![mv(3)], 0),
        ),
    ));
    rs.add(rule(
        "I-Ex",
        vec![
            tyj(vec![], exact(Prop), exists(mv(0), mv(1))),
            tmj(vec![], mv(2), mv(0)),
            tmj(vec![], mv(3), msub(mv(1), vec![mv(2)], 0)),
        ],
        tmj(
            vec![],
            expair(mv(0), mv(1), mv(2), mv(3)),
            exists(mv(0), mv(1)),
        ),
    ));
    rs.add(rule(
        "E-Ex",
        vec![
            tyj(vec![], exact(Prop), mv(0)),
            tmj(vec![], mv(1), exists(mv(2), mv(3))),
            tmj(vec![mv(2), mv(3)], mv(4), mshift(mv(0), 2)),
        ],
        tmj(vec![], exelim(mv(0), mv(1), mv(4)), mv(0)),
    ));
    rs.add(rule(
        "C-Ex",
        vec![
            tyj(vec![], exact(Prop), mv(0)),
            tyj(vec![], exact(Prop), exists(mv(1), mv(2))),
            tmj(vec![], mv(3), mv(1)),
            tmj(vec![], mv(4), msub(mv(2), vec![mv(3)], 0)),
            tmj(vec![mv(1), mv(2)], mv(5), mshift(mv(0), 2)),
        ],
        tmeqj(
            vec![],
            exelim(mv(0), expair(mv(1), mv(2), mv(3), mv(4)), mv(5)),
            msub(mv(5), vec![mv(3), mv(4)], 0),
            mv(0),
        ),
    ));
}

fn identity(rs: &mut RuleSet) {
    rs.add(rule(
        "F-Id",
        vec![
            tyj(vec![], exact(Col), mv(0)),
            tmj(vec![], mv(1), mv(0)),
            tmj(vec![], mv(2), mv(0)),
        ],
        tyj(vec![], exact(Prop), id(mv(0), mv(1), mv(2))),
    ));
    rs.add(rule(
        "F-Id-s",
        vec![
            tyj(vec![], exact(Set), mv(0)),
            tmj(vec![], mv(1), mv(0)),
            tmj(vec![], mv(2), mv(0)),
        ],
        tyj(vec![], exact(PropS), id(mv(0), mv(1), mv(2))),
    ));
    rs.add(rule(
        "I-Id",
        vec![tmj(vec![], mv(0), mv(1))],
        tmj(vec![], idrefl(mv(1), mv(0)), id(mv(1), mv(0), mv(0))),
    ));
    // Transport along an identification: ?1 family, ?2 proof, ?5 base.
    rs.add(rule(
        "E-Id",
        vec![
            tyj(vec![mv(0)], exact(Prop), mv(1)),
            tmj(vec![], mv(2), id(mv(0), mv(3), mv(4))),
            tmj(vec![], mv(5), msub(mv(1), vec![mv(3)], 0)),
        ],
        tmj(
            vec![],
            idelim(mv(1), mv(3), mv(4), mv(2), mv(5)),
            msub(mv(1), vec![mv(4)], 0),
        ),
    ));
    rs.add(rule(
        "C-Id",
        vec![
            tyj(vec![mv(0)], exact(Prop), mv(1)),
            tmj(vec![], mv(2), mv(0)),
            tmj(vec![], mv(3), msub(mv(1), vec![mv(2)], 0)),
        ],
        tmeqj(
            vec![],
            idelim(mv(1), mv(2), mv(2), idrefl(mv(0), mv(2)), mv(3)),
            mv(3),
            msub(mv(1), vec![mv(2)], 0),
        ),
    ));
}

fn universe(rs: &mut RuleSet) {
    rs.add(rule("F-Props", vec![wfj(vec![])], tyj(vec![], exact(Col), Expr::PropS)));
    rs.add(rule(
        "I-Props",
        vec![tyj(vec![], exact(PropS), mv(0))],
        tmj(vec![], code_s(mv(0)), Expr::PropS),
    ));
    rs.add(rule(
        "E-Props",
        vec![tmj(vec![], mv(0), Expr::PropS)],
        tyj(vec![], exact(PropS), dec_s(mv(0))),
    ));
    rs.add(rule(
        "C-Props",
        vec![tyj(vec![], exact(PropS), mv(0))],
        tyeqj(vec![], exact(PropS), dec_s(code_s(mv(0))), mv(0)),
    ));
    rs.add(rule(
        "eta-Props",
        vec![tmj(vec![], mv(0), Expr::PropS)],
        tmeqj(vec![], code_s(dec_s(mv(0))), mv(0), Expr::PropS),
    ));
    rs.add(rule(
        "eq-Props",
        vec![tyeqj(vec![], exact(PropS), mv(0), mv(1))],
        tmeqj(vec![], code_s(mv(0)), code_s(mv(1)), Expr::PropS),
    ));
    rs.add(rule(
        "deq-Props",
        vec![tmeqj(vec![], mv(0), mv(1), Expr::PropS)],
        tyeqj(vec![], exact(PropS), dec_s(mv(0)), dec_s(mv(1))),
    ));
}
