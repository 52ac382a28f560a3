//! For the degree-5 patterns the quadratic-factor locus is an elliptic curve.
//! When that curve has a point of infinite order, walking its multiples
//! produces infinitely many reducible quintics; when the curve has only
//! torsion, the reducible members are a short explicit list.
//!
//! Run with: cargo run --example degree5_generation

use quadfactor::elliptic::{
    certify_infinite_order, generate_reducible, phi_531, tabulated_curve, CurvePoint,
};
use quadfactor::models::quadratic_factor_curve;
use quadfactor::rational::rat_i64;
use quadfactor::search;

fn main() {
    // the (5, 3, 1) model in Weierstrass form, with its generator
    let curve = tabulated_curve(5, 3, 1).expect("tabulated");
    println!("(5, 3, 1) curve: {}", curve.equation_display());
    let gen = CurvePoint::affine(rat_i64(1), rat_i64(2));
    assert!(curve.contains(&gen));
    println!(
        "(1, 2) has infinite order: {}",
        certify_infinite_order(&curve, &gen).unwrap()
    );

    // the covering map back to the (p, q) chart of the divisibility locus,
    // undefined exactly where the chart denominator vanishes
    let (p, s) = phi_531(&gen).unwrap();
    println!("phi(1, 2) = (p, s) = ({p}, {s})");
    match phi_531(&CurvePoint::affine(rat_i64(4), rat_i64(8))) {
        Err(e) => println!("phi(4, 8): {e}"),
        Ok(_) => unreachable!(),
    }

    // stream reducible members
    println!("\nreducible (5, 3, 1) members from the generator walk:");
    for g in generate_reducible((5, 3, 1), 4).unwrap() {
        let w = &g.witness;
        println!(
            "  a = {}: factor {}, cofactor {}",
            w.spec.a,
            w.factor.render("x"),
            w.cofactor.render("x")
        );
    }

    println!("\nreducible (5, 3, 2) members:");
    for g in generate_reducible((5, 3, 2), 5).unwrap() {
        println!("  a = {}  [{}]", g.witness.spec.a, g.source_point);
    }

    // (5, 4, 3) by contrast is all torsion: x^5 + x^4 + x^3 - 1 is the only
    // member with a quadratic factor and nonzero a
    let hits = search::quadratic_factors_of(
        &quadfactor::QuadrinomialSpec::new(5, 4, 3, rat_i64(-1)).unwrap(),
    )
    .unwrap();
    for w in hits {
        println!(
            "\n(5, 4, 3) torsion member: {} = ({}) * ({})",
            w.spec.render(),
            w.factor.render("x"),
            w.cofactor.render("x")
        );
    }

    // and two patterns have no usable points at all up to a real height
    for (n, m, k) in [(5u32, 2u32, 1u32), (5, 4, 1)] {
        let model = quadratic_factor_curve(n, m, k).unwrap();
        let report = search::search_points(&model, 100).unwrap();
        println!(
            "({n}, {m}, {k}) model {}: {} points of height <= 100",
            model.equation_display(),
            report.points.len()
        );
    }
}
