//! Degree 4 is completely classified: for each exponent pattern (m, k) the
//! reducible quartics x^4 + x^m + x^k + a form a one-parameter family of
//! quadratic pairs, and full rational splits are governed by a genus-one
//! curve per pattern.
//!
//! Run with: cargo run --example degree4_families

use num_traits::Zero;
use quadfactor::families::{deg4_family, deg4_full_split_curve};
use quadfactor::rational::{is_square, parse_rational, rat_i64};
use quadfactor::search;

fn main() {
    // one member of each family
    for (m, k, p) in [(2u32, 1u32, "2"), (3, 1, "2"), (3, 2, "-1")] {
        let p = parse_rational(p).unwrap();
        let w = deg4_family(m, k, &p).expect("parameter is off the excluded line");
        println!(
            "(m, k) = ({m}, {k}), p = {}:  {} = ({}) * ({})",
            p,
            w.spec.render(),
            w.factor.render("x"),
            w.cofactor.render("x")
        );
    }

    // the (3, 1) family passes through the one quartic with a double root:
    // p = -1 gives x^4 + x^3 + x + 1 = (x + 1)^2 (x^2 - x + 1)
    let w = deg4_family(3, 1, &rat_i64(-1)).unwrap();
    println!("\nat p = -1 the (3, 1) member is {}", w.spec.render());
    for (r, mult) in search::linear_factors_of(&w.spec) {
        println!("  root x = {r} with multiplicity {mult}");
    }
    let all = search::quadratic_factors_of(&w.spec).unwrap();
    for q in &all {
        println!("  quadratic factor {}", q.factor.render("x"));
    }

    // a point on the full-split curve makes the cofactor split rationally;
    // a genuine four-linear-factors member would also need the factor's own
    // discriminant to be a square
    println!();
    for (m, k) in [(2u32, 1u32), (3, 1), (3, 2)] {
        let model = deg4_full_split_curve(m, k).unwrap();
        let report = search::search_points(&model, 30).unwrap();
        println!(
            "full-split curve for (m, k) = ({m}, {k}): {}",
            model.equation_display()
        );
        if report.points.is_empty() {
            println!("  no rational points of height <= 30");
        }
        for (p0, r0) in &report.points {
            let excluded = if (m, k) == (2, 1) {
                p0.is_zero()
            } else {
                p0 + p0 == rat_i64(1)
            };
            if excluded {
                println!("  ({p0}, {r0}): on the excluded parameter line");
                continue;
            }
            let w = deg4_family(m, k, p0).unwrap();
            let disc = &w.factor.coeff(1) * &w.factor.coeff(1) - rat_i64(4) * w.factor.coeff(0);
            println!(
                "  ({p0}, {r0}): member {} with cofactor splitting; factor disc {} is {}a square",
                w.spec.render(),
                disc,
                if is_square(&disc) { "" } else { "not " }
            );
        }
    }
}
