//! Rules shared by both levels of the family: context structure, the
//! equality judgement apparatus, kind inclusions, formation of the common
//! formers, and the introduction, elimination, and conversion groups of the
//! inductive sets.
//!
//! Premise order is fixed and meaningful: motive or formation premises come
//! first, then scrutinees, then the remaining arguments. The `var` rule is
//! not a schema; the checker implements it directly because its conclusion
//! depends on a context lookup, not on premise shapes.

use super::decl::*;
use super::{KindPat, RuleSet, SideCond};
use crate::syntax::Expr;
use crate::theory::Kind::{Col, Prop, PropS, Set};

pub(super) fn add(rs: &mut RuleSet) {
    structural(rs);
    inclusions(rs);
    formations(rs);
    enumerations(rs);
    lists(rs);
    sums(rs);
    sigmas(rs);
    pis(rs);
}

fn structural(rs: &mut RuleSet) {
    // () ctx
    rs.add(axiom_rule("ctx-emp", wfj(vec![]), vec![SideCond::EmptyAmbient]));
    // G |- A : k  =>  G, x:A ctx
    rs.add(rule("ctx-ext", vec![tyj(vec![], kany(0), mv(0))], wfj(vec![mv(0)])));
    // G |- a : A,  G |- A = B : k  =>  G |- a : B
    rs.add(rule(
        "conv",
        vec![
            tmj(vec![], mv(0), mv(1)),
            tyeqj(vec![], KindPat::Any, mv(1), mv(2)),
        ],
        tmj(vec![], mv(0), mv(2)),
    ));
    // G |- a = b : A,  G |- A = B : k  =>  G |- a = b : B
    rs.add(rule(
        "conv-eq",
        vec![
            tmeqj(vec![], mv(0), mv(1), mv(2)),
            tyeqj(vec![], KindPat::Any, mv(2), mv(3)),
        ],
        tmeqj(vec![], mv(0), mv(1), mv(3)),
    ));
    rs.add(rule(
        "refl-ty",
        vec![tyj(vec![], kany(0), mv(0))],
        tyeqj(vec![], kany(0), mv(0), mv(0)),
    ));
    rs.add(rule(
        "refl-tm",
        vec![tmj(vec![], mv(0), mv(1))],
        tmeqj(vec![], mv(0), mv(0), mv(1)),
    ));
    rs.add(rule(
        "sym-ty",
        vec![tyeqj(vec![], kany(0), mv(0), mv(1))],
        tyeqj(vec![], kany(0), mv(1), mv(0)),
    ));
    rs.add(rule(
        "sym-tm",
        vec![tmeqj(vec![], mv(0), mv(1), mv(2))],
        tmeqj(vec![], mv(1), mv(0), mv(2)),
    ));
    rs.add(rule(
        "trans-ty",
        vec![
            tyeqj(vec![], kany(0), mv(0), mv(1)),
            tyeqj(vec![], kany(0), mv(1), mv(2)),
        ],
        tyeqj(vec![], kany(0), mv(0), mv(2)),
    ));
    rs.add(rule(
        "trans-tm",
        vec![
            tmeqj(vec![], mv(0), mv(1), mv(2)),
            tmeqj(vec![], mv(1), mv(3), mv(2)),
        ],
        tmeqj(vec![], mv(0), mv(3), mv(2)),
    ));
    // Equal things are things.
    rs.add(rule(
        "eq-wit-l",
        vec![tmeqj(vec![], mv(0), mv(1), mv(2))],
        tmj(vec![], mv(0), mv(2)),
    ));
    rs.add(rule(
        "eq-wit-r",
        vec![tmeqj(vec![], mv(0), mv(1), mv(2))],
        tmj(vec![], mv(1), mv(2)),
    ));
    rs.add(rule(
        "tyeq-wit-l",
        vec![tyeqj(vec![], kany(0), mv(0), mv(1))],
        tyj(vec![], kany(0), mv(0)),
    ));
    rs.add(rule(
        "tyeq-wit-r",
        vec![tyeqj(vec![], kany(0), mv(0), mv(1))],
        tyj(vec![], kany(0), mv(1)),
    ));
}

fn inclusions(rs: &mut RuleSet) {
    let steps: &[(&'static str, crate::theory::Kind, crate::theory::Kind)] = &[
        ("incl-props-prop", PropS, Prop),
        ("incl-props-set", PropS, Set),
        ("incl-prop-col", Prop, Col),
        ("incl-set-col", Set, Col),
    ];
    for &(name, from, to) in steps {
        rs.add(rule(
            name,
            vec![tyj(vec![], exact(from), mv(0))],
            tyj(vec![], exact(to), mv(0)),
        ));
    }
    for &(name, from, to) in steps {
        rs.add(rule(
            match name {
                "incl-props-prop" => "incl-props-prop-eq",
                "incl-props-set" => "incl-props-set-eq",
                "incl-prop-col" => "incl-prop-col-eq",
                _ => "incl-set-col-eq",
            },
            vec![tyeqj(vec![], exact(from), mv(0), mv(1))],
            tyeqj(vec![], exact(to), mv(0), mv(1)),
        ));
    }
}

fn formations(rs: &mut RuleSet) {
    rs.add(rule("F-N0", vec![wfj(vec![])], tyj(vec![], exact(Set), Expr::N0)));
    rs.add(rule("F-N1", vec![wfj(vec![])], tyj(vec![], exact(Set), Expr::N1)));
    rs.add(rule(
        "F-List",
        vec![tyj(vec![], exact(Set), mv(0))],
        tyj(vec![], exact(Set), list(mv(0))),
    ));
    rs.add(rule(
        "F-Sum",
        vec![tyj(vec![], exact(Set), mv(0)), tyj(vec![], exact(Set), mv(1))],
        tyj(vec![], exact(Set), sum(mv(0), mv(1))),
    ));
    rs.add(rule(
        "F-Sigma",
        vec![tyj(vec![], exact(Set), mv(0)), tyj(vec![mv(0)], exact(Set), mv(1))],
        tyj(vec![], exact(Set), sigma(mv(0), mv(1))),
    ));
    rs.add(rule(
        "F-Sigma-col",
        vec![tyj(vec![], exact(Col), mv(0)), tyj(vec![mv(0)], exact(Col), mv(1))],
        tyj(vec![], exact(Col), sigma(mv(0), mv(1))),
    ));
    // Dependent products only over sets; the codomain may be a collection.
    rs.add(rule(
        "F-Pi",
        vec![tyj(vec![], exact(Set), mv(0)), tyj(vec![mv(0)], exact(Set), mv(1))],
        tyj(vec![], exact(Set), pi(mv(0), mv(1))),
    ));
    rs.add(rule(
        "F-Pi-col",
        vec![tyj(vec![], exact(Set), mv(0)), tyj(vec![mv(0)], exact(Col), mv(1))],
        tyj(vec![], exact(Col), pi(mv(0), mv(1))),
    ));
    rs.add(rule("F-Bot", vec![wfj(vec![])], tyj(vec![], exact(PropS), Expr::Bot)));
    // Connectives are kind-polymorphic over the two proposition kinds;
    // smallness is componentwise.
    rs.add(rule(
        "F-And",
        vec![tyj(vec![], kprop(0), mv(0)), tyj(vec![], kprop(0), mv(1))],
        tyj(vec![], kprop(0), and(mv(0), mv(1))),
    ));
    rs.add(rule(
        "F-Imp",
        vec![tyj(vec![], kprop(0), mv(0)), tyj(vec![], kprop(0), mv(1))],
        tyj(vec![], kprop(0), imp(mv(0), mv(1))),
    ));
    rs.add(rule(
        "F-Or",
        vec![tyj(vec![], kprop(0), mv(0)), tyj(vec![], kprop(0), mv(1))],
        tyj(vec![], kprop(0), or(mv(0), mv(1))),
    ));
    // Quantification over a collection is a proposition; it is small only
    // when the domain is a set and the body is small.
    rs.add(rule(
        "F-All",
        vec![tyj(vec![], exact(Col), mv(0)), tyj(vec![mv(0)], exact(Prop), mv(1))],
        tyj(vec![], exact(Prop), forall(mv(0), mv(1))),
    ));
    rs.add(rule(
        "F-All-s",
        vec![tyj(vec![], exact(Set), mv(0)), tyj(vec![mv(0)], exact(PropS), mv(1))],
        tyj(vec![], exact(PropS), forall(mv(0), mv(1))),
    ));
    rs.add(rule(
        "F-Ex",
        vec![tyj(vec![], exact(Col), mv(0)), tyj(vec![mv(0)], exact(Prop), mv(1))],
        tyj(vec![], exact(Prop), exists(mv(0), mv(1))),
    ));
    rs.add(rule(
        "F-Ex-s",
        vec![tyj(vec![], exact(Set), mv(0)), tyj(vec![mv(0)], exact(PropS), mv(1))],
        tyj(vec![], exact(PropS), exists(mv(0), mv(1))),
    ));
}

/// Impredicative quantification: over any collection, with a small body,
/// the universal is small. Enabled by the resizing flag.
pub(super) fn add_impredicative(rs: &mut RuleSet) {
    rs.add(rule(
        "F-All-imp",
        vec![tyj(vec![], exact(Col), mv(0)), tyj(vec![mv(0)], exact(PropS), mv(1))],
        tyj(vec![], exact(PropS), forall(mv(0), mv(1))),
    ));
}

fn enumerations(rs: &mut RuleSet) {
    rs.add(rule("I-N1", vec![wfj(vec![])], tmj(vec![], Expr::Star, Expr::N1)));
    // ?0 motive over z:N1, ?1 scrutinee, ?2 base
    rs.add(rule(
        "E-N1",
        vec![
            tyj(vec![Expr::N1], kany(0), mv(0)),
            tmj(vec![], mv(1), Expr::N1),
            tmj(vec![], mv(2), msub(mv(0), vec![Expr::Star], 0)),
        ],
        tmj(
            vec![],
            n1elim(mv(0), mv(1), mv(2)),
            msub(mv(0), vec![mv(1)], 0),
        ),
    ));
    rs.add(rule(
        "C-N1",
        vec![
            tyj(vec![Expr::N1], kany(0), mv(0)),
            tmj(vec![], mv(1), msub(mv(0), vec![Expr::Star], 0)),
        ],
        tmeqj(
            vec![],
            n1elim(mv(0), Expr::Star, mv(1)),
            mv(1),
            msub(mv(0), vec![Expr::Star], 0),
        ),
    ));
    rs.add(rule(
        "E-N0",
        vec![tyj(vec![Expr::N0], kany(0), mv(0)), tmj(vec![], mv(1), Expr::N0)],
        tmj(vec![], n0elim(mv(0), mv(1)), msub(mv(0), vec![mv(1)], 0)),
    ));
}

/// Context extension for the list step case: tail, head, recursive value.
pub(super) fn list_step_ext(a: Expr, motive: Expr) -> Vec<Expr> {
    vec![list(a.clone()), mshift(a, 1), msub(motive, vec![var(1)], 2)]
}

/// Type of the list step body: the motive at `cons(tail, head)`.
pub(super) fn list_step_ty(motive: Expr) -> Expr {
    msub(motive, vec![cons(var(2), var(1))], 3)
}

fn lists(rs: &mut RuleSet) {
    rs.add(rule(
        "I-List-nil",
        vec![tyj(vec![], exact(Set), mv(0))],
        tmj(vec![], nil(mv(0)), list(mv(0))),
    ));
    rs.add(rule(
        "I-List-cons",
        vec![tmj(vec![], mv(0), list(mv(1))), tmj(vec![], mv(2), mv(1))],
        tmj(vec![], cons(mv(0), mv(2)), list(mv(1))),
    ));
    // ?0 element set, ?1 motive, ?2 scrutinee, ?3 base, ?4 step
    rs.add(rule(
        "E-List",
        vec![
            tyj(vec![list(mv(0))], kany(1), mv(1)),
            tmj(vec![], mv(2), list(mv(0))),
            tmj(vec![], mv(3), msub(mv(1), vec![nil(mv(0))], 0)),
            tmj(list_step_ext(mv(0), mv(1)), mv(4), list_step_ty(mv(1))),
        ],
        tmj(
            vec![],
            listelim(mv(1), mv(2), mv(3), mv(4)),
            msub(mv(1), vec![mv(2)], 0),
        ),
    ));
    rs.add(rule(
        "C-List-nil",
        vec![
            tyj(vec![list(mv(0))], kany(1), mv(1)),
            tmj(vec![], mv(2), msub(mv(1), vec![nil(mv(0))], 0)),
            tmj(list_step_ext(mv(0), mv(1)), mv(3), list_step_ty(mv(1))),
        ],
        tmeqj(
            vec![],
            listelim(mv(1), nil(mv(0)), mv(2), mv(3)),
            mv(2),
            msub(mv(1), vec![nil(mv(0))], 0),
        ),
    ));
    // ?2 tail, ?3 head, ?4 base, ?5 step; the recursive value in the result
    // is the eliminator applied to the tail.
    rs.add(rule(
        "C-List-cons",
        vec![
            tyj(vec![list(mv(0))], kany(1), mv(1)),
            tmj(vec![], mv(2), list(mv(0))),
            tmj(vec![], mv(3), mv(0)),
            tmj(vec![], mv(4), msub(mv(1), vec![nil(mv(0))], 0)),
            tmj(list_step_ext(mv(0), mv(1)), mv(5), list_step_ty(mv(1))),
        ],
        tmeqj(
            vec![],
            listelim(mv(1), cons(mv(2), mv(3)), mv(4), mv(5)),
            msub(
                mv(5),
                vec![mv(2), mv(3), listelim(mv(1), mv(2), mv(4), mv(5))],
                0,
            ),
            msub(mv(1), vec![cons(mv(2), mv(3))], 0),
        ),
    ));
}

pub(super) fn sum_left_case(motive: Expr, other: Expr) -> Expr {
    msub(motive, vec![inl(mshift(other, 1), var(0))], 1)
}

pub(super) fn sum_right_case(motive: Expr, other: Expr) -> Expr {
    msub(motive, vec![inr(mshift(other, 1), var(0))], 1)
}

fn sums(rs: &mut RuleSet) {
    rs.add(rule(
        "I-Sum-inl",
        vec![
            tyj(vec![], exact(Set), mv(0)),
            tyj(vec![], exact(Set), mv(1)),
            tmj(vec![], mv(2), mv(0)),
        ],
        tmj(vec![], inl(mv(1), mv(2)), sum(mv(0), mv(1))),
    ));
    rs.add(rule(
        "I-Sum-inr",
        vec![
            tyj(vec![], exact(Set), mv(0)),
            tyj(vec![], exact(Set), mv(1)),
            tmj(vec![], mv(2), mv(1)),
        ],
        tmj(vec![], inr(mv(0), mv(2)), sum(mv(0), mv(1))),
    ));
    // ?0 left set, ?1 right set, ?2 motive, ?3 scrutinee, ?4/?5 branches
    rs.add(rule(
        "E-Sum",
        vec![
            tyj(vec![sum(mv(0), mv(1))], kany(2), mv(2)),
            tmj(vec![], mv(3), sum(mv(0), mv(1))),
            tmj(vec![mv(0)], mv(4), sum_left_case(mv(2), mv(1))),
            tmj(vec![mv(1)], mv(5), sum_right_case(mv(2), mv(0))),
        ],
        tmj(
            vec![],
            sumelim(mv(2), mv(3), mv(4), mv(5)),
            msub(mv(2), vec![mv(3)], 0),
        ),
    ));
    rs.add(rule(
        "C-Sum-inl",
        vec![
            tyj(vec![sum(mv(0), mv(1))], kany(2), mv(2)),
            tmj(vec![], mv(3), mv(0)),
            tmj(vec![mv(0)], mv(4), sum_left_case(mv(2), mv(1))),
            tmj(vec![mv(1)], mv(5), sum_right_case(mv(2), mv(0))),
        ],
        tmeqj(
            vec![],
            sumelim(mv(2), inl(mv(1), mv(3)), mv(4), mv(5)),
            msub(mv(4), vec![mv(3)], 0),
            msub(mv(2), vec![inl(mv(1), mv(3))], 0),
        ),
    ));
    rs.add(rule(
        "C-Sum-inr",
        vec![
            tyj(vec![sum(mv(0), mv(1))], kany(2), mv(2)),
            tmj(vec![], mv(3), mv(1)),
            tmj(vec![mv(0)], mv(4), sum_left_case(mv(2), mv(1))),
            tmj(vec![mv(1)], mv(5), sum_right_case(mv(2), mv(0))),
        ],
        tmeqj(
            vec![],
            sumelim(mv(2), inr(mv(0), mv(3)), mv(4), mv(5)),
            msub(mv(5), vec![mv(3)], 0),
            msub(mv(2), vec![inr(mv(0), mv(3))], 0),
        ),
    ));
}

/// The motive applied to a pair rebuilt from the two bound components of the
/// sigma elimination body; lives two binders below the ambient context.
pub(super) fn sigma_pair_case(dom: Expr, cod: Expr, motive: Expr) -> Expr {
    msub(
        motive,
        vec![spair(mshift(dom, 2), msub(cod, vec![var(0)], 3), var(1), var(0))],
        2,
    )
}

fn sigmas(rs: &mut RuleSet) {
    // ?0 dom, ?1 cod, ?2 fst, ?3 snd; the formation premise binds both the
    // annotation components and fixes the pair's type.
    rs.add(rule(
        "I-Sigma",
        vec![
            tyj(vec![], ktype(0), sigma(mv(0), mv(1))),
            tmj(vec![], mv(2), mv(0)),
            tmj(vec![], mv(3), msub(mv(1), vec![mv(2)], 0)),
        ],
        tmj(vec![], spair(mv(0), mv(1), mv(2), mv(3)), sigma(mv(0), mv(1))),
    ));
    rs.add(rule(
        "E-Sigma",
        vec![
            tyj(vec![sigma(mv(0), mv(1))], kany(2), mv(2)),
            tmj(vec![], mv(3), sigma(mv(0), mv(1))),
            tmj(
                vec![mv(0), mv(1)],
                mv(4),
                sigma_pair_case(mv(0), mv(1), mv(2)),
            ),
        ],
        tmj(
            vec![],
            sigelim(mv(2), mv(3), mv(4)),
            msub(mv(2), vec![mv(3)], 0),
        ),
    ));
    rs.add(rule(
        "C-Sigma",
        vec![
            tyj(vec![sigma(mv(0), mv(1))], kany(2), mv(2)),
            tmj(vec![], mv(3), mv(0)),
            tmj(vec![], mv(4), msub(mv(1), vec![mv(3)], 0)),
            tmj(
                vec![mv(0), mv(1)],
                mv(5),
                sigma_pair_case(mv(0), mv(1), mv(2)),
            ),
        ],
        tmeqj(
            vec![],
            sigelim(mv(2), spair(mv(0), mv(1), mv(3), mv(4)), mv(5)),
            msub(mv(5), vec![mv(3), mv(4)], 0),
            msub(mv(2), vec![spair(mv(0), mv(1), mv(3), mv(4))], 0),
        ),
    ));
}

fn pis(rs: &mut RuleSet) {
    rs.add(rule(
        "I-Pi",
        vec![
            tyj(vec![], ktype(0), pi(mv(0), mv(1))),
            tmj(vec![mv(0)], mv(2), mv(1)),
        ],
        tmj(vec![], lam(mv(0), mv(2)), pi(mv(0), mv(1))),
    ));
    rs.add(rule(
        "E-Pi",
        vec![
            tmj(vec![], mv(0), pi(mv(1), mv(2))),
            tmj(vec![], mv(3), mv(1)),
        ],
        tmj(vec![], app(mv(0), mv(3)), msub(mv(2), vec![mv(3)], 0)),
    ));
    // ?0 dom, ?1 body, ?2 body type, ?3 argument
    rs.add(rule(
        "C-Pi",
        vec![tmj(vec![mv(0)], mv(1), mv(2)), tmj(vec![], mv(3), mv(0))],
        tmeqj(
            vec![],
            app(lam(mv(0), mv(1)), mv(3)),
            msub(mv(1), vec![mv(3)], 0),
            msub(mv(2), vec![mv(3)], 0),
        ),
    ));
}
