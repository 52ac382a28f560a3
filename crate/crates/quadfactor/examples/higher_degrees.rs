//! Past degree 6 the quadratic-factor models climb in genus, and two other
//! tools take over: a substitution q = t p^m that tames triples in
//! arithmetic progression of exponents, and for even specs the search for
//! splits f = h(x) h(-x) up to sign.
//!
//! Run with: cargo run --example higher_degrees

use num_traits::Zero;
use quadfactor::families::deg10_family;
use quadfactor::models::{hxh_reduce, hxh_witnesses_from_point, t_model, HxhReduction};
use quadfactor::rational::{is_fourth_power_of_nonzero, rat, rat_i64};
use quadfactor::search;

fn main() {
    // the arithmetic-progression substitution: (7, 6, 5) becomes a quintic
    let model = t_model(7, 1).unwrap();
    println!("(7, 6, 5) under q = t*p^2: {}", model.equation_display());
    let report = search::search_points(&model, 10).unwrap();
    for (t0, s0) in &report.points {
        for w in model.witnesses_from_point(t0, s0).unwrap() {
            if !w.witness.spec.a.is_zero() {
                println!(
                    "  t = {t0} recovers (p, q) = ({}, {}): a = {}",
                    w.p, w.q, w.witness.spec.a
                );
            }
        }
    }

    // same tool one degree up; t = 1/3 is the small point that matters
    let model = t_model(8, 1).unwrap();
    println!("\n(8, 7, 6) under q = t*p^2: {}", model.equation_display());
    for (t0, s0) in search::search_points(&model, 3).unwrap().points.iter() {
        for w in model.witnesses_from_point(t0, s0).unwrap() {
            if !w.witness.spec.a.is_zero() {
                println!(
                    "  t = {t0} recovers (p, q) = ({}, {}): a = {}",
                    w.p, w.q, w.witness.spec.a
                );
            }
        }
    }

    // even specs and h(x)h(-x) splits: (8, 4, 2) keeps a model in p itself
    match hxh_reduce(8, 4, 2).unwrap() {
        HxhReduction::ModelInP(m) => {
            println!("\n(8, 4, 2) even-split model: {}", m.equation_display())
        }
        _ => unreachable!(),
    }
    for (p0, v0) in [(2i64, 12i64), (-2, 12)] {
        for w in hxh_witnesses_from_point(8, 4, 2, &rat_i64(p0), &rat_i64(v0)).unwrap() {
            println!(
                "  (p, v) = ({p0}, {v0}): {} = ({}) * ({})",
                w.spec.render(),
                w.h.render("x"),
                w.cofactor.render("x")
            );
        }
    }

    // (8, 6, 2) has no such points at any realistic height
    if let HxhReduction::ModelInSquare(m) = hxh_reduce(8, 6, 2).unwrap() {
        let report = search::search_points(&m, 100).unwrap();
        println!(
            "\n(8, 6, 2) even-split model {}: {} points of height <= 100",
            m.equation_display(),
            report.points.len()
        );
    }

    // (10, 6, 2) reduces to a plane cubic in (P, s) with P = p^4; reducible
    // members need P to be a fourth power, and no listed point has one
    if let HxhReduction::PlaneCubic(c) = hxh_reduce(10, 6, 2).unwrap() {
        println!("\n(10, 6, 2) plane cubic: {}", c.equation_display());
        let pts = [
            (rat(12, 5), rat(7, 5)),
            (rat_i64(-4), rat_i64(3)),
            (rat_i64(-4), rat_i64(1)),
            (rat_i64(-36), rat_i64(-1)),
            (rat_i64(0), rat(1, 2)),
            (rat_i64(12), rat_i64(-1)),
        ];
        for (big_p, s) in &pts {
            assert!(c.contains(big_p, s), "listed point must lie on the cubic");
            println!(
                "  (P, s) = ({big_p}, {s}): P a fourth power of a nonzero rational: {}",
                is_fourth_power_of_nonzero(big_p)
            );
        }
    }

    // degree 10 also carries a clean closed-form family
    println!();
    for u in [rat_i64(1), rat_i64(2), rat(-1, 2)] {
        let w = deg10_family(&u).unwrap();
        println!(
            "deg-10 family at u = {u}: {} = ({}) * ({})",
            w.spec.render(),
            w.factor.render("x"),
            w.cofactor.render("x")
        );
    }
}
