//! Exact rational scalars and small integer utilities used everywhere else.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The scalar field: arbitrary-precision rationals.
pub type Rational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat_i64(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Shorthand for u/v as a rational. Panics if v == 0.
pub fn rat(u: i64, v: i64) -> Rational {
    Rational::new(BigInt::from(u), BigInt::from(v))
}

/// Parse "u", "-u", or "u/v" into a rational. Decimal points are rejected:
/// every quantity in this crate is exact.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty rational literal".into()));
    }
    if t.contains('.') {
        return Err(Error::Parse(format!(
            "decimal literals are not accepted, use a fraction: {t}"
        )));
    }
    t.parse::<Rational>()
        .map_err(|e| Error::Parse(format!("bad rational {t:?}: {e}")))
}

/// Height of a rational u/v in lowest terms: max(|u|, |v|).
pub fn height(x: &Rational) -> BigInt {
    let n = x.numer().abs();
    let d = x.denom().abs();
    if n >= d {
        n
    } else {
        d
    }
}

/// Exact integer square root: Some(r) with r >= 0 and r*r == n, when n is a
/// perfect square.
pub fn int_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    match n.sign() {
        Sign::Minus => None,
        Sign::NoSign => Some(BigInt::zero()),
        Sign::Plus => {
            let r = n.sqrt();
            if &r * &r == *n {
                Some(r)
            } else {
                None
            }
        }
    }
}

/// Exact rational square root, when one exists.
pub fn sqrt_exact(x: &Rational) -> Option<Rational> {
    let n = int_sqrt_exact(x.numer())?;
    let d = int_sqrt_exact(x.denom())?;
    Some(Rational::new(n, d))
}

pub fn is_square(x: &Rational) -> bool {
    sqrt_exact(x).is_some()
}

/// Exact integer k-th root: Some(r) with r^k == n. For even k, n must be
/// nonnegative; for odd k, negative n yields a negative root.
pub fn int_nth_root_exact(n: &BigInt, k: u32) -> Option<BigInt> {
    assert!(k >= 1);
    if n.is_negative() {
        if k % 2 == 0 {
            return None;
        }
        return int_nth_root_exact(&(-n), k).map(|r| -r);
    }
    let r = n.nth_root(k);
    if r.pow(k) == *n {
        Some(r)
    } else {
        None
    }
}

/// Exact rational k-th root, when one exists.
pub fn nth_root_exact(x: &Rational, k: u32) -> Option<Rational> {
    let n = int_nth_root_exact(x.numer(), k)?;
    let d = int_nth_root_exact(x.denom(), k)?;
    Some(Rational::new(n, d))
}

/// True when x is the fourth power of a nonzero rational.
pub fn is_fourth_power_of_nonzero(x: &Rational) -> bool {
    !x.is_zero() && nth_root_exact(x, 4).is_some()
}

/// Trial-division factorization of |n| into (prime, exponent) pairs, primes
/// ascending. `budget` caps the number of candidate divisors tried; None is
/// returned when the unfactored cofactor exceeds the square of the last
/// candidate (so primality of the remainder cannot be concluded).
pub fn try_factorize(n: &BigInt, budget: u64) -> Option<Vec<(BigInt, u32)>> {
    let mut m = n.abs();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    if m.is_zero() || m.is_one() {
        return Some(out);
    }
    let push = |p: BigInt, e: u32, out: &mut Vec<(BigInt, u32)>| {
        if e > 0 {
            out.push((p, e));
        }
    };
    let two = BigInt::from(2);
    let mut e = 0u32;
    while m.is_even() {
        m /= &two;
        e += 1;
    }
    push(two, e, &mut out);
    let mut d = BigInt::from(3);
    let mut tried = 0u64;
    while &d * &d <= m {
        if tried >= budget {
            return None;
        }
        tried += 1;
        let mut e = 0u32;
        while (&m % &d).is_zero() {
            m /= &d;
            e += 1;
        }
        push(d.clone(), e, &mut out);
        d += 2;
    }
    if !m.is_one() {
        out.push((m, 1));
    }
    Some(out)
}

/// All positive divisors of |n|, ascending, computed from a trial-division
/// factorization with the given budget. None when the budget is exhausted
/// before |n| is fully factored.
pub fn try_divisors(n: &BigInt, budget: u64) -> Option<Vec<BigInt>> {
    if n.is_zero() {
        return Some(vec![]);
    }
    let fac = try_factorize(n, budget)?;
    let mut divs = vec![BigInt::one()];
    for (p, e) in fac {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        let mut pk = BigInt::one();
        for _ in 0..=e {
            for d in &divs {
                next.push(d * &pk);
            }
            pk *= &p;
        }
        divs = next;
    }
    divs.sort();
    Some(divs)
}

/// Split n as s^2 * r with s maximal over primes below 10^4, then absorb the
/// remainder into s when it is itself a perfect square (covers contents whose
/// square part involves one large prime). Returns (s, r) with n = s^2 * r and
/// r carrying the sign of n. square_part(0) == (1, 0).
pub fn square_part(n: &BigInt) -> (BigInt, BigInt) {
    if n.is_zero() {
        return (BigInt::one(), BigInt::zero());
    }
    let negative = n.is_negative();
    let mut m = n.abs();
    let mut s = BigInt::one();
    let mut d = BigInt::from(2);
    let bound = BigInt::from(10_000);
    while d <= bound {
        let dd = &d * &d;
        if &dd > &m {
            break;
        }
        while (&m % &dd).is_zero() {
            m /= &dd;
            s *= &d;
        }
        d += 1;
    }
    if let Some(r) = int_sqrt_exact(&m) {
        s *= r;
        m = BigInt::one();
    }
    if negative {
        m = -m;
    }
    (s, m)
}

/// Render a rational the way the rest of the crate prints scalars: "u" for
/// integers, "u/v" otherwise.
pub fn render(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
