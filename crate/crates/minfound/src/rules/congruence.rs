//! Congruence rules: judgemental equality is preserved by every former.
//!
//! Always present on the extensional level. On the intensional level the
//! whole family is gated behind the congruence flag, and it additionally
//! covers the tagged proof formers, which do not exist extensionally.

use super::base::{
    list_step_ext, list_step_ty, sigma_pair_case, sum_left_case, sum_right_case,
};
use super::decl::*;
use super::extensional::qcls_under_1;
use super::RuleSet;
use crate::syntax::{Expr, Side};
use crate::theory::Kind::{Col, Prop, PropS, Set};
use crate::theory::{TheoryBase, TheoryDesc};

pub(super) fn add(rs: &mut RuleSet, desc: &TheoryDesc) {
    type_formers(rs);
    term_formers(rs);
    eliminators(rs);
    match desc.base {
        TheoryBase::Emtt => extensional_formers(rs),
        TheoryBase::Mtt => {
            intensional_identity(rs);
            proof_formers(rs);
        }
    }
    if desc.resizing {
        rs.add(rule(
            "cong-All-imp",
            vec![
                tyeqj(vec![], exact(Col), mv(0), mv(1)),
                tyeqj(vec![mv(0)], exact(PropS), mv(2), mv(3)),
            ],
            tyeqj(vec![], exact(PropS), forall(mv(0), mv(2)), forall(mv(1), mv(3))),
        ));
    }
}

fn type_formers(rs: &mut RuleSet) {
    rs.add(rule(
        "cong-List",
        vec![tyeqj(vec![], exact(Set), mv(0), mv(1))],
        tyeqj(vec![], exact(Set), list(mv(0)), list(mv(1))),
    ));
    rs.add(rule(
        "cong-Sum",
        vec![
            tyeqj(vec![], exact(Set), mv(0), mv(1)),
            tyeqj(vec![], exact(Set), mv(2), mv(3)),
        ],
        tyeqj(vec![], exact(Set), sum(mv(0), mv(2)), sum(mv(1), mv(3))),
    ));
    rs.add(rule(
        "cong-Sigma",
        vec![
            tyeqj(vec![], ktype(0), mv(0), mv(1)),
            tyeqj(vec![mv(0)], ktype(0), mv(2), mv(3)),
        ],
        tyeqj(vec![], ktype(0), sigma(mv(0), mv(2)), sigma(mv(1), mv(3))),
    ));
    rs.add(rule(
        "cong-Pi",
        vec![
            tyeqj(vec![], exact(Set), mv(0), mv(1)),
            tyeqj(vec![mv(0)], ktype(0), mv(2), mv(3)),
        ],
        tyeqj(vec![], ktype(0), pi(mv(0), mv(2)), pi(mv(1), mv(3))),
    ));
    rs.add(rule(
        "cong-And",
        vec![
            tyeqj(vec![], kprop(0), mv(0), mv(1)),
            tyeqj(vec![], kprop(0), mv(2), mv(3)),
        ],
        tyeqj(vec![], kprop(0), and(mv(0), mv(2)), and(mv(1), mv(3))),
    ));
    rs.add(rule(
        "cong-Imp",
        vec![
            tyeqj(vec![], kprop(0), mv(0), mv(1)),
            tyeqj(vec![], kprop(0), mv(2), mv(3)),
        ],
        tyeqj(vec![], kprop(0), imp(mv(0), mv(2)), imp(mv(1), mv(3))),
    ));
    rs.add(rule(
        "cong-Or",
        vec![
            tyeqj(vec![], kprop(0), mv(0), mv(1)),
            tyeqj(vec![], kprop(0), mv(2), mv(3)),
        ],
        tyeqj(vec![], kprop(0), or(mv(0), mv(2)), or(mv(1), mv(3))),
    ));
    rs.add(rule(
        "cong-All",
        vec![
            tyeqj(vec![], exact(Col), mv(0), mv(1)),
            tyeqj(vec![mv(0)], exact(Prop), mv(2), mv(3)),
        ],
        tyeqj(vec![], exact(Prop), forall(mv(0), mv(2)), forall(mv(1), mv(3))),
    ));
    rs.add(rule(
        "cong-All-s",
        vec![
            tyeqj(vec![], exact(Set), mv(0), mv(1)),
            tyeqj(vec![mv(0)], exact(PropS), mv(2), mv(3)),
        ],
        tyeqj(vec![], exact(PropS), forall(mv(0), mv(2)), forall(mv(1), mv(3))),
    ));
    rs.add(rule(
        "cong-Ex",
        vec![
            tyeqj(vec![], exact(Col), mv(0), mv(1)),
            tyeqj(vec![mv(0)], exact(Prop), mv(2), mv(3)),
        ],
        tyeqj(vec![], exact(Prop), exists(mv(0), mv(2)), exists(mv(1), mv(3))),
    ));
    rs.add(rule(
        "cong-Ex-s",
        vec![
            tyeqj(vec![], exact(Set), mv(0), mv(1)),
            tyeqj(vec![mv(0)], exact(PropS), mv(2), mv(3)),
        ],
        tyeqj(vec![], exact(PropS), exists(mv(0), mv(2)), exists(mv(1), mv(3))),
    ));
}

fn term_formers(rs: &mut RuleSet) {
    rs.add(rule(
        "cong-nil",
        vec![tyeqj(vec![], exact(Set), mv(0), mv(1))],
        tmeqj(vec![], nil(mv(0)), nil(mv(1)), list(mv(0))),
    ));
    rs.add(rule(
        "cong-cons",
        vec![
            tmeqj(vec![], mv(0), mv(1), list(mv(2))),
            tmeqj(vec![], mv(3), mv(4), mv(2)),
        ],
        tmeqj(vec![], cons(mv(0), mv(3)), cons(mv(1), mv(4)), list(mv(2))),
    ));
    // ?0/?1 the annotated other summand, ?4 the value's own set.
    rs.add(rule(
        "cong-inl",
        vec![
            tyeqj(vec![], exact(Set), mv(0), mv(1)),
            tmeqj(vec![], mv(2), mv(3), mv(4)),
        ],
        tmeqj(vec![], inl(mv(0), mv(2)), inl(mv(1), mv(3)), sum(mv(4), mv(0))),
    ));
    rs.add(rule(
        "cong-inr",
        vec![
            tyeqj(vec![], exact(Set), mv(0), mv(1)),
            tmeqj(vec![], mv(2), mv(3), mv(4)),
        ],
        tmeqj(vec![], inr(mv(0), mv(2)), inr(mv(1), mv(3)), sum(mv(0), mv(4))),
    ));
    rs.add(rule(
        "cong-pair",
        vec![
            tyeqj(vec![], ktype(0), mv(0), mv(1)),
            tyeqj(vec![mv(0)], ktype(0), mv(2), mv(3)),
            tmeqj(vec![], mv(4), mv(5), mv(0)),
            tmeqj(vec![], mv(6), mv(7), msub(mv(2), vec![mv(4)], 0)),
        ],
        tmeqj(
            vec![],
            spair(mv(0), mv(2), mv(4), mv(6)),
            spair(mv(1), mv(3), mv(5), mv(7)),
            sigma(mv(0), mv(2)),
        ),
    ));
    rs.add(rule(
        "cong-lam",
        vec![
            tyeqj(vec![], exact(Set), mv(0), mv(1)),
            tmeqj(vec![mv(0)], mv(2), mv(3), mv(4)),
        ],
        tmeqj(vec![], lam(mv(0), mv(2)), lam(mv(1), mv(3)), pi(mv(0), mv(4))),
    ));
    rs.add(rule(
        "cong-ap",
        vec![
            tmeqj(vec![], mv(0), mv(1), pi(mv(2), mv(3))),
            tmeqj(vec![], mv(4), mv(5), mv(2)),
        ],
        tmeqj(
            vec![],
            app(mv(0), mv(4)),
            app(mv(1), mv(5)),
            msub(mv(3), vec![mv(4)], 0),
        ),
    ));
}

fn eliminators(rs: &mut RuleSet) {
    rs.add(rule(
        "cong-n0elim",
        vec![
            tyeqj(vec![Expr::N0], kany(0), mv(0), mv(1)),
            tmeqj(vec![], mv(2), mv(3), Expr::N0),
        ],
        tmeqj(
            vec![],
            n0elim(mv(0), mv(2)),
            n0elim(mv(1), mv(3)),
            msub(mv(0), vec![mv(2)], 0),
        ),
    ));
    rs.add(rule(
        "cong-n1elim",
        vec![
            tyeqj(vec![Expr::N1], kany(0), mv(0), mv(1)),
            tmeqj(vec![], mv(2), mv(3), Expr::N1),
            tmeqj(vec![], mv(4), mv(5), msub(mv(0), vec![Expr::Star], 0)),
        ],
        tmeqj(
            vec![],
            n1elim(mv(0), mv(2), mv(4)),
            n1elim(mv(1), mv(3), mv(5)),
            msub(mv(0), vec![mv(2)], 0),
        ),
    ));
    rs.add(rule(
        "cong-listelim",
        vec![
            tyeqj(vec![list(mv(6))], kany(0), mv(0), mv(1)),
            tmeqj(vec![], mv(2), mv(3), list(mv(6))),
            tmeqj(vec![], mv(4), mv(5), msub(mv(0), vec![nil(mv(6))], 0)),
            tmeqj(
                list_step_ext(mv(6), mv(0)),
                mv(7),
                mv(8),
                list_step_ty(mv(0)),
            ),
        ],
        tmeqj(
            vec![],
            listelim(mv(0), mv(2), mv(4), mv(7)),
            listelim(mv(1), mv(3), mv(5), mv(8)),
            msub(mv(0), vec![mv(2)], 0),
        ),
    ));
    rs.add(rule(
        "cong-sumelim",
        vec![
            tyeqj(vec![sum(mv(6), mv(7))], kany(0), mv(0), mv(1)),
            tmeqj(vec![], mv(2), mv(3), sum(mv(6), mv(7))),
            tmeqj(vec![mv(6)], mv(4), mv(5), sum_left_case(mv(0), mv(7))),
            tmeqj(vec![mv(7)], mv(8), mv(9), sum_right_case(mv(0), mv(6))),
        ],
        tmeqj(
            vec![],
            sumelim(mv(0), mv(2), mv(4), mv(8)),
            sumelim(mv(1), mv(3), mv(5), mv(9)),
            msub(mv(0), vec![mv(2)], 0),
        ),
    ));
    rs.add(rule(
        "cong-sigelim",
        vec![
            tyeqj(vec![sigma(mv(6), mv(7))], kany(0), mv(0), mv(1)),
            tmeqj(vec![], mv(2), mv(3), sigma(mv(6), mv(7))),
            tmeqj(
                vec![mv(6), mv(7)],
                mv(4),
                mv(5),
                sigma_pair_case(mv(6), mv(7), mv(0)),
            ),
        ],
        tmeqj(
            vec![],
            sigelim(mv(0), mv(2), mv(4)),
            sigelim(mv(1), mv(3), mv(5)),
            msub(mv(0), vec![mv(2)], 0),
        ),
    ));
}

fn extensional_formers(rs: &mut RuleSet) {
    rs.add(rule(
        "cong-Eq",
        vec![
            tyeqj(vec![], exact(Col), mv(0), mv(1)),
            tmeqj(vec![], mv(2), mv(3), mv(0)),
            tmeqj(vec![], mv(4), mv(5), mv(0)),
        ],
        tyeqj(
            vec![],
            exact(Prop),
            eq(mv(0), mv(2), mv(4)),
            eq(mv(1), mv(3), mv(5)),
        ),
    ));
    rs.add(rule(
        "cong-Eq-s",
        vec![
            tyeqj(vec![], exact(Set), mv(0), mv(1)),
            tmeqj(vec![], mv(2), mv(3), mv(0)),
            tmeqj(vec![], mv(4), mv(5), mv(0)),
        ],
        tyeqj(
            vec![],
            exact(PropS),
            eq(mv(0), mv(2), mv(4)),
            eq(mv(1), mv(3), mv(5)),
        ),
    ));
    rs.add(rule(
        "cong-Eq-P1",
        vec![
            tmeqj(vec![], mv(0), mv(1), Expr::P1),
            tmeqj(vec![], mv(2), mv(3), Expr::P1),
        ],
        tyeqj(
            vec![],
            exact(PropS),
            eq(Expr::P1, mv(0), mv(2)),
            eq(Expr::P1, mv(1), mv(3)),
        ),
    ));
    rs.add(rule(
        "cong-Quot",
        vec![
            tyeqj(vec![], exact(Set), mv(0), mv(1)),
            tyeqj(vec![mv(0), mshift(mv(0), 1)], exact(PropS), mv(2), mv(3)),
        ],
        tyeqj(vec![], exact(Set), quot(mv(0), mv(2)), quot(mv(1), mv(3))),
    ));
    rs.add(rule(
        "cong-class",
        vec![
            tyeqj(vec![], exact(Set), quot(mv(0), mv(1)), quot(mv(2), mv(3))),
            tmeqj(vec![], mv(4), mv(5), mv(0)),
        ],
        tmeqj(
            vec![],
            qcls(quot(mv(0), mv(1)), mv(4)),
            qcls(quot(mv(2), mv(3)), mv(5)),
            quot(mv(0), mv(1)),
        ),
    ));
    rs.add(rule(
        "cong-qelim",
        vec![
            tyeqj(vec![quot(mv(6), mv(7))], kany(0), mv(0), mv(1)),
            tmeqj(vec![], mv(2), mv(3), quot(mv(6), mv(7))),
            tmeqj(
                vec![mv(6)],
                mv(4),
                mv(5),
                msub(mv(0), vec![qcls_under_1(mv(6), mv(7))], 1),
            ),
        ],
        tmeqj(
            vec![],
            qelim(mv(0), mv(2), mv(4)),
            qelim(mv(1), mv(3), mv(5)),
            msub(mv(0), vec![mv(2)], 0),
        ),
    ));
}

fn intensional_identity(rs: &mut RuleSet) {
    rs.add(rule(
        "cong-Id",
        vec![
            tyeqj(vec![], exact(Col), mv(0), mv(1)),
            tmeqj(vec![], mv(2), mv(3), mv(0)),
            tmeqj(vec![], mv(4), mv(5), mv(0)),
        ],
        tyeqj(
            vec![],
            exact(Prop),
            id(mv(0), mv(2), mv(4)),
            id(mv(1), mv(3), mv(5)),
        ),
    ));
    rs.add(rule(
        "cong-Id-s",
        vec![
            tyeqj(vec![], exact(Set), mv(0), mv(1)),
            tmeqj(vec![], mv(2), mv(3), mv(0)),
            tmeqj(vec![], mv(4), mv(5), mv(0)),
        ],
        tyeqj(
            vec![],
            exact(PropS),
            id(mv(0), mv(2), mv(4)),
            id(mv(1), mv(3), mv(5)),
        ),
    ));
}

fn proof_formers(rs: &mut RuleSet) {
    rs.add(rule(
        "cong-implam",
        vec![
            tyj(vec![], exact(Prop), imp(mv(0), mv(1))),
            tyeqj(vec![], kprop(0), mv(0), mv(2)),
            tmeqj(vec![mv(0)], mv(3), mv(4), mshift(mv(1), 1)),
        ],
        tmeqj(
            vec![],
            implam(mv(0), mv(3)),
            implam(mv(2), mv(4)),
            imp(mv(0), mv(1)),
        ),
    ));
    rs.add(rule(
        "cong-impap",
        vec![
            tmeqj(vec![], mv(0), mv(1), imp(mv(2), mv(3))),
            tmeqj(vec![], mv(4), mv(5), mv(2)),
        ],
        tmeqj(vec![], impapp(mv(0), mv(4)), impapp(mv(1), mv(5)), mv(3)),
    ));
    rs.add(rule(
        "cong-andpair",
        vec![
            tmeqj(vec![], mv(0), mv(1), mv(2)),
            tmeqj(vec![], mv(3), mv(4), mv(5)),
        ],
        tmeqj(
            vec![],
            andpair(mv(0), mv(3)),
            andpair(mv(1), mv(4)),
            and(mv(2), mv(5)),
        ),
    ));
    rs.add(rule(
        "cong-andproj-l",
        vec![tmeqj(vec![], mv(0), mv(1), and(mv(2), mv(3)))],
        tmeqj(
            vec![],
            andproj(Side::L, mv(0)),
            andproj(Side::L, mv(1)),
            mv(2),
        ),
    ));
    rs.add(rule(
        "cong-andproj-r",
        vec![tmeqj(vec![], mv(0), mv(1), and(mv(2), mv(3)))],
        tmeqj(
            vec![],
            andproj(Side::R, mv(0)),
            andproj(Side::R, mv(1)),
            mv(3),
        ),
    ));
    rs.add(rule(
        "cong-orinl",
        vec![
            tyeqj(vec![], kprop(0), mv(0), mv(1)),
            tmeqj(vec![], mv(2), mv(3), mv(4)),
        ],
        tmeqj(
            vec![],
            orinl(mv(0), mv(2)),
            orinl(mv(1), mv(3)),
            or(mv(4), mv(0)),
        ),
    ));
    rs.add(rule(
        "cong-orinr",
        vec![
            tyeqj(vec![], kprop(0), mv(0), mv(1)),
            tmeqj(vec![], mv(2), mv(3), mv(4)),
        ],
        tmeqj(
            vec![],
            orinr(mv(0), mv(2)),
            orinr(mv(1), mv(3)),
            or(mv(0), mv(4)),
        ),
    ));
    rs.add(rule(
        "cong-orelim",
        vec![
            tyeqj(vec![], exact(Prop), mv(0), mv(1)),
            tmeqj(vec![], mv(2), mv(3), or(mv(4), mv(5))),
            tmeqj(vec![mv(4)], mv(6), mv(7), mshift(mv(0), 1)),
            tmeqj(vec![mv(5)], mv(8), mv(9), mshift(mv(0), 1)),
        ],
        tmeqj(
            vec![],
            orelim(mv(0), mv(2), mv(6), mv(8)),
            orelim(mv(1), mv(3), mv(7), mv(9)),
            mv(0),
        ),
    ));
    rs.add(rule(
        "cong-botelim",
        vec![
            tyeqj(vec![], exact(Prop), mv(0), mv(1)),
            tmeqj(vec![], mv(2), mv(3), Expr::Bot),
        ],
        tmeqj(vec![], botelim(mv(0), mv(2)), botelim(mv(1), mv(3)), mv(0)),
    ));
    rs.add(rule(
        "cong-alllam",
        vec![
            tyj(vec![], exact(Prop), forall(mv(0), mv(1))),
            tyeqj(vec![], ktype(0), mv(0), mv(2)),
            tmeqj(vec![mv(0)], mv(3), mv(4), mv(1)),
        ],
        tmeqj(
            vec![],
            alllam(mv(0), mv(3)),
            alllam(mv(2), mv(4)),
            forall(mv(0), mv(1)),
        ),
    ));
    rs.add(rule(
        "cong-allap",
        vec![
            tmeqj(vec![], mv(0), mv(1), forall(mv(2), mv(3))),
            tmeqj(vec![], mv(4), mv(5), mv(2)),
        ],
        tmeqj(
            vec![],
            allapp(mv(0), mv(4)),
            allapp(mv(1), mv(5)),
            msub(mv(3), vec![mv(4)], 0),
        ),
    ));
    // Witness congruence with fixed annotations; annotation changes go
    // through conversion.
    rs.add(rule(
        "cong-expair",
        vec![
            tyj(vec![], exact(Prop), exists(mv(0), mv(1))),
            tmeqj(vec![], mv(2), mv(3), mv(0)),
            tmeqj(vec![], mv(4), mv(5), msub(mv(1), vec![mv(2)], 0)),
        ],
        tmeqj(
            vec![],
            expair(mv(0), mv(1), mv(2), mv(4)),
            expair(mv(0), mv(1), mv(3), mv(5)),
            exists(mv(0), mv(1)),
        ),
    ));
    rs.add(rule(
        "cong-exelim",
        vec![
            tyeqj(vec![], exact(Prop), mv(0), mv(1)),
            tmeqj(vec![], mv(2), mv(3), exists(mv(4), mv(5))),
            tmeqj(vec![mv(4), mv(5)], mv(6), mv(7), mshift(mv(0), 2)),
        ],
        tmeqj(
            vec![],
            exelim(mv(0), mv(2), mv(6)),
            exelim(mv(1), mv(3), mv(7)),
            mv(0),
        ),
    ));
    rs.add(rule(
        "cong-idrefl",
        vec![tmeqj(vec![], mv(0), mv(1), mv(2))],
        tmeqj(
            vec![],
            idrefl(mv(2), mv(0)),
            idrefl(mv(2), mv(1)),
            id(mv(2), mv(0), mv(0)),
        ),
    ));
    rs.add(rule(
        "cong-idelim",
        vec![
            tyeqj(vec![mv(0)], exact(Prop), mv(1), mv(2)),
            tmeqj(vec![], mv(3), mv(4), id(mv(0), mv(5), mv(6))),
            tmeqj(vec![], mv(7), mv(8), msub(mv(1), vec![mv(5)], 0)),
        ],
        tmeqj(
            vec![],
            idelim(mv(1), mv(5), mv(6), mv(3), mv(7)),
            idelim(mv(2), mv(5), mv(6), mv(4), mv(8)),
            msub(mv(1), vec![mv(6)], 0),
        ),
    ));
}
