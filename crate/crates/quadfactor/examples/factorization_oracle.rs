//! The recurrence machinery finds linear and quadratic factors; everything
//! else in this crate is checked against a brute-force oracle that searches
//! for a factor of each degree by integer interpolation. Slow, exact, and
//! independent of the theory it verifies.
//!
//! Run with: cargo run --example factorization_oracle

use quadfactor::families::prime_constant_irreducible;
use quadfactor::rational::parse_rational;
use quadfactor::search::{kronecker_factor, min_factor_degree, OracleOutcome};
use quadfactor::QuadrinomialSpec;

fn main() {
    // a quintic with a cubic factor that no quadratic sweep can see
    let spec = QuadrinomialSpec::new(7, 5, 3, parse_rational("8").unwrap()).unwrap();
    let f = spec.to_unipoly();
    println!("f = {}", spec.render());
    println!(
        "min proper factor degree: {:?}",
        min_factor_degree(&f, 3).unwrap()
    );
    match kronecker_factor(&f, 3).unwrap() {
        OracleOutcome::Factor { factor, cofactor } => {
            println!("oracle: ({}) * ({})", factor.render("x"), cofactor.render("x"))
        }
        OracleOutcome::NoFactorUpTo(_) => unreachable!(),
    }

    // an irreducibility certificate: no factor of degree <= deg/2 means no
    // factor at all
    let spec = QuadrinomialSpec::new(6, 5, 4, parse_rational("1").unwrap()).unwrap();
    let f = spec.to_unipoly();
    match kronecker_factor(&f, 3).unwrap() {
        OracleOutcome::NoFactorUpTo(b) => {
            println!("\n{} has no factor of degree <= {b}: irreducible", spec.render())
        }
        OracleOutcome::Factor { .. } => unreachable!(),
    }

    // squarefree parts and repeated factors are visible to it too: compare
    // x^8 + x^6 + x^4 + 4, which splits into two quartics
    let spec = QuadrinomialSpec::new(8, 6, 4, parse_rational("4").unwrap()).unwrap();
    let f = spec.to_unipoly();
    match kronecker_factor(&f, 4).unwrap() {
        OracleOutcome::Factor { factor, cofactor } => println!(
            "\n{} = ({}) * ({})",
            spec.render(),
            factor.render("x"),
            cofactor.render("x")
        ),
        OracleOutcome::NoFactorUpTo(_) => unreachable!(),
    }

    // small prime constants force irreducibility across whole exponent
    // ranges; the oracle certifies each instance
    println!();
    for a in [5u32, 7] {
        let mut certified = 0;
        for n in 4..=7u32 {
            for m in 2..n {
                for k in 1..m {
                    assert!(prime_constant_irreducible(a, n, m, k).unwrap());
                    certified += 1;
                }
            }
        }
        println!("x^n + x^m + x^k + {a}: {certified} spec shapes with 4 <= n <= 7, all irreducible");
    }

    // the oracle refuses degrees it cannot finish rather than guessing;
    // QUADFACTOR_ORACLE_MAXDEG raises the cap when you have the patience
    let spec = QuadrinomialSpec::new(16, 11, 7, parse_rational("1/16").unwrap()).unwrap();
    match kronecker_factor(&spec.to_unipoly(), 8) {
        Err(e) => println!("\ndegree-16 request: {e}"),
        Ok(_) => unreachable!(),
    }
}
