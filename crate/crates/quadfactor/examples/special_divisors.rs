//! Three quadratics keep coming back: x^2 - 2x + 2, x^2 + 2x + 2 and
//! x^2 + 3x + 3. Their remainder coefficients follow periodic sign patterns
//! with closed forms, which turns "when do they divide a quadrinomial" into
//! exponent bookkeeping and yields several infinite families at once.
//!
//! Run with: cargo run --example special_divisors

use quadfactor::families::{
    div22_family, redquad_corollary_check, redquad_family, scaled_member, special_an,
    Div22Case, SpecialQuadratic,
};
use quadfactor::quadrem::ab_eval;

fn main() {
    // the closed form for A_e matches the recurrence, here shown for one case
    let case = SpecialQuadratic::PlusThreeThree;
    let (p, q) = case.pq();
    println!("A_e for {} (closed form / recurrence):", case.unipoly().render("x"));
    for e in 0..=9 {
        let closed = special_an(case, e);
        let (rec, _) = ab_eval(e, &p, &q);
        assert_eq!(closed, rec);
        println!("  A_{e} = {closed}");
    }

    // each sign pattern that sums to zero is an infinite family; one member
    // from each of the five shifted-exponent cases
    println!();
    for case in Div22Case::all() {
        let (s, t) = match case {
            Div22Case::Minus22 => (1, 0),
            _ => (1, 1),
        };
        let w = div22_family(case, s, t).unwrap();
        println!(
            "{:>9}: {} = ({}) * (degree-{} cofactor)",
            case.id(),
            w.spec.render(),
            w.factor.render("x"),
            w.cofactor.degree().unwrap()
        );
    }

    // scaling roots by the base integer moves the families to exponent
    // multiples of the period; (12, 8, 4) admits both two-families at once
    println!();
    for case in [SpecialQuadratic::PlusTwoTwo, SpecialQuadratic::MinusTwoTwo] {
        let w = scaled_member(case, 0, 12, 8, 4).unwrap();
        println!(
            "{} divides {}",
            w.factor.render("x"),
            w.spec.render()
        );
    }
    let w = scaled_member(SpecialQuadratic::PlusThreeThree, 1, 18, 12, 6).unwrap();
    println!(
        "{} divides {} (roots scaled by 3)",
        w.factor.render("x"),
        w.spec.render()
    );

    // a different engine: (x^n + x^m - 1/3) always divides a trinomial-like
    // product whose cube substitution is a quadrinomial
    println!();
    let id = redquad_family(4, 1).unwrap();
    println!(
        "({}) * ({})\n  = {}",
        id.factor.render("x"),
        id.cofactor.render("x"),
        id.product.render("x")
    );
    let w = id.witness.expect("no exponent collision at (4, 1)");
    println!("so {} is reducible", w.spec.render());

    // the near-miss members x^N + x^M + x^((N+M)/3) - 1/27 resist quadratic
    // factors until the exponents themselves are divisible by 3
    for (n, m) in [(5u32, 4u32), (7, 2)] {
        let j = (n + m) / 3;
        println!(
            "x^{n} + x^{} + x^{} - 1/27 has no factor of degree <= 2: {}",
            m.max(j),
            m.min(j),
            redquad_corollary_check(n, m).unwrap()
        );
    }
}
