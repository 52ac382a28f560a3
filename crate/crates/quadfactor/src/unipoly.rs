//! Dense univariate polynomials over the rationals: exact division, gcd,
//! rational roots, squarefree decomposition, canonical rendering.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Divisor-enumeration budget used by the panicking root finder. Large enough
/// for every constant appearing in the shipped corpus.
pub const DEFAULT_FACTOR_BUDGET: u64 = 20_000_000;

/// Candidate pairs a rational root hunt will evaluate before giving up.
/// Coefficients that are smooth products of small primes can carry divisor
/// counts whose product explodes combinatorially; past this point the hunt
/// reports failure so callers can switch to a divisor-constrained route
/// instead of evaluating the polynomial millions of times.
pub const ROOT_CANDIDATE_CAP: u64 = 100_000;

/// Polynomial in one variable, coefficients ascending, no trailing zeros.
/// The zero polynomial is the empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    /// x
    pub fn x() -> Self {
        UniPoly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// c * x^d
    pub fn monomial(d: usize, c: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = c;
        UniPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| rational::rat_i64(c)).collect())
    }

    /// x^2 + px + q
    pub fn monic_quadratic(p: &Rational, q: &Rational) -> Self {
        UniPoly::from_coeffs(vec![q.clone(), p.clone(), Rational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Leading coefficient; None for zero.
    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by x^k.
    pub fn shift_up(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut acc = UniPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Recenter: the polynomial x ↦ p(x + c).
    pub fn shift(&self, c: &Rational) -> UniPoly {
        let x_plus_c = UniPoly::from_coeffs(vec![c.clone(), Rational::one()]);
        let mut acc = UniPoly::zero();
        for coeff in self.coeffs.iter().rev() {
            acc = &(&acc * &x_plus_c) + &UniPoly::constant(coeff.clone());
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
            .collect();
        UniPoly::from_coeffs(coeffs)
    }

    /// f(x^k)
    pub fn substitute_power(&self, k: usize) -> UniPoly {
        assert!(k >= 1);
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        UniPoly { coeffs }
    }

    /// Quotient and remainder with deg r < deg g. Errors on zero divisor.
    pub fn divrem(&self, g: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dg = g.degree().ok_or(Error::ZeroDivisor)?;
        let lead = g.leading().unwrap().clone();
        let mut r = self.coeffs.clone();
        if r.len() <= dg {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut q = vec![Rational::zero(); r.len() - dg];
        while r.len() > dg {
            let c = r.last().unwrap() / &lead;
            let pos = r.len() - 1 - dg;
            q[pos] = c.clone();
            for (i, gc) in g.coeffs.iter().enumerate() {
                let v = &r[pos + i] - gc * &c;
                r[pos + i] = v;
            }
            while r.last().map_or(false, |c| c.is_zero()) {
                r.pop();
            }
            if r.len() <= dg {
                break;
            }
        }
        Ok((UniPoly::from_coeffs(q), UniPoly::from_coeffs(r)))
    }

    /// Exact quotient. Panics if the division leaves a remainder; used only
    /// where exactness is a structural invariant.
    #[track_caller]
    pub fn div_exact(&self, g: &UniPoly) -> UniPoly {
        let (q, r) = self.divrem(g).expect("division by zero polynomial");
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, f: &UniPoly) -> bool {
        match f.divrem(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }

    /// Monic rescale. Zero stays zero.
    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => UniPoly::zero(),
            Some(l) => self.scale(&(Rational::one() / l)),
        }
    }

    /// Monic gcd via the Euclidean algorithm with per-step monic rescaling.
    /// gcd(f, 0) = monic f; both zero is an error.
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdBothZero);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// Write f = content * primitive with primitive having coprime integer
    /// coefficients and positive leading coefficient.
    pub fn primitive_integer_form(&self) -> (Rational, UniPoly) {
        if self.is_zero() {
            return (Rational::zero(), UniPoly::zero());
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| {
                let scaled = c * Rational::from_integer(lcm.clone());
                debug_assert!(scaled.is_integer());
                scaled.to_integer()
            })
            .collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = g.gcd(v);
        }
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let prim = UniPoly::from_coeffs(
            ints.iter()
                .map(|v| Rational::from_integer(v / &g))
                .collect(),
        );
        (Rational::new(g, lcm), prim)
    }

    /// Integer coefficient vector, ascending; None if any coefficient has a
    /// denominator.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// All rational roots with multiplicities, ascending by root. Panics if
    /// the divisor enumeration for the rational root theorem exceeds the
    /// default budget; use try_rational_roots to handle that case.
    pub fn rational_roots(&self) -> Vec<(Rational, u32)> {
        self.try_rational_roots(DEFAULT_FACTOR_BUDGET)
            .expect("rational root candidate enumeration exceeded its budget or candidate cap")
    }

    /// As rational_roots, returning None when the trailing or leading integer
    /// coefficient cannot be factored within `budget` trial divisions, or when
    /// the divisor-pair candidate count exceeds ROOT_CANDIDATE_CAP.
    pub fn try_rational_roots(&self, budget: u64) -> Option<Vec<(Rational, u32)>> {
        assert!(!self.is_zero(), "roots of the zero polynomial");
        let mut out: Vec<(Rational, u32)> = Vec::new();
        let mut f = self.clone();
        // strip the power of x
        let v = f.coeffs.iter().take_while(|c| c.is_zero()).count();
        if v > 0 {
            out.push((Rational::zero(), v as u32));
            f = UniPoly::from_coeffs(f.coeffs[v..].to_vec());
        }
        if f.degree() == Some(0) {
            out.sort_by(|a, b| a.0.cmp(&b.0));
            return Some(out);
        }
        let (_, prim) = f.primitive_integer_form();
        let c0 = prim.coeff(0).to_integer();
        let cd = prim.leading().unwrap().to_integer();
        let num_divs = rational::try_divisors(&c0, budget)?;
        let den_divs = rational::try_divisors(&cd, budget)?;
        if num_divs.len() as u64 * den_divs.len() as u64 > ROOT_CANDIDATE_CAP {
            return None;
        }
        let mut cands: BTreeSet<Rational> = BTreeSet::new();
        for r in &num_divs {
            for s in &den_divs {
                let c = Rational::new(r.clone(), s.clone());
                cands.insert(-&c);
                cands.insert(c);
            }
        }
        for c in cands {
            if !f.eval(&c).is_zero() {
                continue;
            }
            let lin = UniPoly::from_coeffs(vec![-&c, Rational::one()]);
            let mut mult = 0u32;
            loop {
                let (q, r) = f.divrem(&lin).unwrap();
                if !r.is_zero() {
                    break;
                }
                f = q;
                mult += 1;
            }
            out.push((c, mult));
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        Some(out)
    }

    /// Yun's squarefree decomposition: f = content * prod(f_i^i) with the f_i
    /// monic, squarefree, pairwise coprime; pairs returned with ascending
    /// exponent, degree-0 parts omitted.
    pub fn squarefree_decomposition(&self) -> (Rational, Vec<(UniPoly, u32)>) {
        assert!(!self.is_zero(), "squarefree decomposition of zero");
        let content = self.leading().unwrap().clone();
        let w = self.monic();
        if w.degree() == Some(0) {
            return (content, vec![]);
        }
        let wp = w.derivative();
        let a = w.gcd(&wp).unwrap();
        let mut b = w.div_exact(&a);
        let mut c = wp.div_exact(&a);
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        let mut i = 1u32;
        while b.degree() > Some(0) {
            let g = b.gcd(&d).unwrap();
            if g.degree() > Some(0) {
                out.push((g.clone(), i));
            }
            b = b.div_exact(&g);
            c = d.div_exact(&g);
            d = &c - &b.derivative();
            i += 1;
        }
        (content, out)
    }

    /// Canonical text form: descending powers, explicit "*", exponents with
    /// "^", unit coefficients omitted, e.g. "x^5 + x^3 + x - 12".
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if s.is_empty() {
                if c.is_negative() {
                    s.push('-');
                }
            } else if c.is_negative() {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            let mag = c.abs();
            let unit = mag.is_one();
            if d == 0 {
                s.push_str(&rational::render(&mag));
            } else {
                if !unit {
                    s.push_str(&rational::render(&mag));
                    s.push('*');
                }
                s.push_str(var);
                if d > 1 {
                    s.push_str(&format!("^{d}"));
                }
            }
        }
        s
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        UniPoly::from_coeffs(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        UniPoly::from_coeffs(coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let v = &coeffs[i + j] + a * b;
                coeffs[i + j] = v;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_i64};
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_i64(coeffs)
    }

    #[test]
    fn divrem_reconstructs() {
        let f = p(&[-12, 1, 0, 1, 0, 1]); // x^5 + x^3 + x - 12
        let g = p(&[3, -1, 1]); // x^2 - x + 3
        let (q, r) = f.divrem(&g).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, p(&[-4, -1, 1, 1]));
        assert_eq!(&(&q * &g) + &r, f);
    }

    #[test]
    fn divrem_zero_divisor_errors() {
        assert!(p(&[1, 1]).divrem(&UniPoly::zero()).is_err());
    }

    #[test]
    fn gcd_is_monic_common_divisor() {
        let a = &p(&[-1, 0, 1]) * &p(&[2, 1]); // (x^2-1)(x+2)
        let b = &p(&[-1, 1]) * &p(&[2, 1]); // (x-1)(x+2)
        let g = a.gcd(&b).unwrap();
        assert_eq!(g, p(&[-2, 1, 1])); // (x-1)(x+2), monic
        assert!(g.divides(&a) && g.divides(&b));
        assert_eq!(a.gcd(&UniPoly::zero()).unwrap(), a.monic());
        assert!(UniPoly::zero().gcd(&UniPoly::zero()).is_err());
    }

    #[test]
    fn rational_roots_with_multiplicities() {
        let f = p(&[1, 0, -7, 6]); // 6x^3 - 7x^2 + 1
        let roots = f.rational_roots();
        assert_eq!(
            roots,
            vec![(rat(-1, 3), 1), (rat(1, 2), 1), (rat_i64(1), 1)]
        );
        let g = &p(&[1, 1]) * &(&p(&[1, 1]) * &p(&[5, 0, 2])); // (x+1)^2(2x^2+5)
        assert_eq!(g.rational_roots(), vec![(rat_i64(-1), 2)]);
        let h = p(&[0, 0, 3, 3]); // 3x^2(x+1)
        assert_eq!(h.rational_roots(), vec![(rat_i64(-1), 1), (rat_i64(0), 2)]);
    }

    #[test]
    fn yun_decomposition() {
        let f = p(&[1, 1, 0, 1, 1]); // x^4+x^3+x+1 = (x+1)^2 (x^2-x+1)
        let (c, parts) = f.squarefree_decomposition();
        assert_eq!(c, rat_i64(1));
        assert_eq!(parts, vec![(p(&[1, -1, 1]), 1), (p(&[1, 1]), 2)]);

        let g = &p(&[-1, 1]).pow(3) * &p(&[2, 1]); // (x-1)^3(x+2)
        let (_, parts) = g.squarefree_decomposition();
        assert_eq!(parts, vec![(p(&[2, 1]), 1), (p(&[-1, 1]), 3)]);

        let sq = p(&[7, 0, 2]); // squarefree
        let (c, parts) = sq.squarefree_decomposition();
        assert_eq!(c, rat_i64(2));
        assert_eq!(parts, vec![(sq.monic(), 1)]);
    }

    #[test]
    fn primitive_form_and_render() {
        let f = UniPoly::from_coeffs(vec![rat(-1, 2), rat_i64(0), rat(3, 2)]);
        let (c, prim) = f.primitive_integer_form();
        assert_eq!(c, rat(1, 2));
        assert_eq!(prim, p(&[-1, 0, 3]));
        assert_eq!(p(&[-12, 1, 0, 1, 0, 1]).render("x"), "x^5 + x^3 + x - 12");
        assert_eq!(p(&[-4, 4, 0, 0, 5]).render("p"), "5*p^4 + 4*p - 4");
        assert_eq!(
            UniPoly::from_coeffs(vec![rat(-21, 16), rat(5, 2), rat_i64(-2), rat_i64(1)])
                .render("x"),
            "x^3 - 2*x^2 + 5/2*x - 21/16"
        );
        assert_eq!(UniPoly::zero().render("x"), "0");
        assert_eq!(p(&[-3]).render("x"), "-3");
    }

    #[test]
    fn substitute_power_spreads_exponents() {
        let f = p(&[4, 1, 1, 1]); // x^3+x^2+x+4
        let g = f.substitute_power(2);
        assert_eq!(g, p(&[4, 0, 1, 0, 1, 0, 1]));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn prop_divrem_identity(
            fc in prop::collection::vec(-9i64..=9, 0..7),
            gc in prop::collection::vec(-9i64..=9, 1..5),
        ) {
            let f = p(&fc);
            let g = p(&gc);
            prop_assume!(!g.is_zero());
            let (q, r) = f.divrem(&g).unwrap();
            prop_assert_eq!(&(&q * &g) + &r, f);
            if let (Some(dr), Some(dg)) = (r.degree(), g.degree()) {
                prop_assert!(dr < dg);
            }
        }

        #[test]
        fn prop_gcd_divides_both(
            fc in prop::collection::vec(-5i64..=5, 1..5),
            gc in prop::collection::vec(-5i64..=5, 1..5),
        ) {
            let f = p(&fc);
            let g = p(&gc);
            prop_assume!(!f.is_zero() || !g.is_zero());
            let d = f.gcd(&g).unwrap();
            if !f.is_zero() { prop_assert!(d.divides(&f)); }
            if !g.is_zero() { prop_assert!(d.divides(&g)); }
        }
    }
}
