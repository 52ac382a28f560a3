//! The engine underneath everything else: x^n mod (x^2 + p x + q) written as
//! A_n x + B_n, with A and B satisfying a two-term recurrence. A monic
//! quadratic divides x^n + x^m + x^k + a exactly when A_n + A_m + A_k = 0 and
//! a is the matching combination of B's, so "find quadratic factors" becomes
//! "solve one polynomial system in (p, q)".
//!
//! Run with: cargo run --example remainder_recurrences

use quadfactor::quadrem::{ab_eval, ab_symbolic, derive_a, quadratic_witness};
use quadfactor::rational::{rat, rat_i64};

fn main() {
    // the symbolic pairs for small n; A_2 = -p, A_3 = p^2 - q, ...
    println!("remainders of x^n modulo x^2 + p*x + q:");
    for n in 2..=6 {
        let pair = ab_symbolic(n);
        println!(
            "  x^{n} = ({}) x + ({})",
            pair.a.render("p", "q"),
            pair.b.render("p", "q")
        );
    }

    // numeric evaluation agrees with the symbolic rows
    let (p, q) = (rat_i64(2), rat(-1, 3));
    let (a5, b5) = ab_eval(5, &p, &q);
    println!("\nat (p, q) = (2, -1/3): A_5 = {a5}, B_5 = {b5}");

    // the divisibility criterion in action: x^2 - x + 3 divides
    // x^5 + x^3 + x - 12, i.e. derive_a returns the -12
    let (p, q) = (rat_i64(-1), rat_i64(3));
    let a = derive_a(5, 3, 1, &p, &q).expect("A_5 + A_3 + A_1 vanishes here");
    println!("\nx^2 - x + 3 divides x^5 + x^3 + x + a only for a = {a}");

    let w = quadratic_witness(5, 3, 1, &p, &q)
        .expect("exponents are valid")
        .expect("the constraint holds at this (p, q)");
    println!(
        "witness: {} = ({}) * ({})",
        w.spec.render(),
        w.factor.render("x"),
        w.cofactor.render("x")
    );

    // where the constraint fails, derive_a refuses instead of guessing
    let err = derive_a(5, 3, 1, &rat_i64(1), &rat_i64(2)).unwrap_err();
    println!("\nat (p, q) = (1, 2): {err}");

    // the homogeneity that powers the scaled families:
    // A_n(t p, t^2 q) = t^(n-1) A_n(p, q)
    let t = rat(3, 2);
    let (p, q) = (rat_i64(-2), rat_i64(5));
    for n in [4u32, 7, 11] {
        let lhs = ab_eval(n, &(&t * &p), &(&t * &t * &q)).0;
        let rhs = &ab_eval(n, &p, &q).0 * &num_traits::pow(t.clone(), (n - 1) as usize);
        assert_eq!(lhs, rhs);
        println!("A_{n}(tp, t^2 q) = t^{} A_{n}(p, q) checks at t = 3/2", n - 1);
    }
}
