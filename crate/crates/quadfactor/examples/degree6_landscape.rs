//! Degree 6 is where the machinery branches. Some exponent patterns carve
//! out honest genus-2 models, one pattern degenerates into a closed-form
//! family plus a residual curve, one is driven by a rank-1 cubic reached
//! through a quartic transport, and cubic-times-cubic splits live on their
//! own plane curve.
//!
//! Run with: cargo run --example degree6_landscape

use quadfactor::elliptic::generate_reducible;
use quadfactor::models::{
    quadratic_factor_curve, square_content_cases, two_cubics_curve, two_cubics_even_family,
};
use quadfactor::rational::{parse_rational, rat, rat_i64};
use quadfactor::search;

fn main() {
    // a regular pattern: the full genus-2 model
    let model = quadratic_factor_curve(6, 3, 2).unwrap();
    println!("(6, 3, 2): {}", model.equation_display());
    println!("  recovery: {}", model.back_sub_display());

    // (6, 4, 2) is not quadratic in q: the constraint factors, one branch is
    // the line p = 0 carrying a one-parameter family
    let case = square_content_cases(6, 4, 2).unwrap();
    let family = case.zero_branch.as_ref().unwrap();
    println!("\n(6, 4, 2): a = {} with factor x^2 + q", family.a_of_q.render("q"));
    for q in [2i64, 3, -1] {
        let w = family.instantiate(&rat_i64(q)).unwrap();
        println!(
            "  q = {q}: {} = ({}) * ({})",
            w.spec.render(),
            w.factor.render("x"),
            w.cofactor.render("x")
        );
    }
    println!("  residual branch: {}", case.residual.equation_display());

    // (6, 5, 4) has no quadratic-in-q model either; reducible members come
    // from a quartic residual whose points transport to a rank-1 cubic
    println!("\n(6, 5, 4) members through the quartic transport:");
    for g in generate_reducible((6, 5, 4), 3).unwrap() {
        let w = &g.witness;
        println!("  a = {}: factor {}", w.spec.a, w.factor.render("x"));
    }

    // height-bounded point sweeps on two more patterns
    for (n, m, k, h) in [(6u32, 5u32, 1u32, 20u64), (6, 2, 1, 10)] {
        let model = quadratic_factor_curve(n, m, k).unwrap();
        let report = search::search_points(&model, h).unwrap();
        let ps: Vec<String> = report.points.iter().map(|(p, _)| p.to_string()).collect();
        println!(
            "\n({n}, {m}, {k}) model {}, height <= {h}: p in [{}]",
            model.equation_display(),
            ps.join(", ")
        );
        for (p0, s0) in &report.points {
            for w in model.witnesses_from_point(p0, s0).unwrap() {
                if !w.is_degenerate() {
                    println!("  (p, s) = ({p0}, {s0}) gives a = {}", w.witness.spec.a);
                }
            }
        }
    }

    // cubic-times-cubic splits of x^6 + x^5 + x^4 + a: a plane curve in the
    // two free coefficients, mapped to a hyperelliptic chart
    let tc = two_cubics_curve();
    println!("\ntwo-cubics plane curve: {} = 0", tc.plane_curve.render("p", "q"));
    println!("chart: {}", tc.model.equation_display());
    let split = tc.split(&rat_i64(1), &rat_i64(1)).unwrap();
    println!(
        "(p, q) = (1, 1): {} = ({}) * ({})",
        split.f.render("x"),
        split.factor1.render("x"),
        split.factor2.render("x")
    );
    match tc.split(&rat(1, 2), &rat(3, 8)) {
        Err(e) => println!("(p, q) = (1/2, 3/8) is on the locus but off the chart: {e}"),
        Ok(_) => unreachable!(),
    }

    // the even sibling x^6 + x^4 + x^2 + a has a complete closed form
    let even = two_cubics_even_family(&parse_rational("2").unwrap()).unwrap();
    println!(
        "\neven two-cubics member at u = 2: a = {}, h = {}",
        even.a,
        even.h.render("x")
    );
}
