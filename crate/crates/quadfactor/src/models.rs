//! Curve models whose rational points index quadratic (or higher) factors of
//! quadrinomials.
//!
//! The q-quadratic cases complete the square in F_{n,m,k}(p,q) = A_n+A_m+A_k:
//! multiplying F = 0 by 4c2 gives (2c2 q + c1)^2 = c1^2 - 4 c2 c0, so after
//! stripping square content the right side becomes the model rhs(p) and a
//! rational point (p0, s0) recovers q. Even-exponent cases instead match
//! coefficients of h(x)h(-x) against the quadrinomial and eliminate the
//! triangular prefix of the resulting system.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::quadrem::{self, validate_exponents, QuadraticWitness, QuadrinomialSpec};
use crate::rational::{self, rat_i64, Rational};
use crate::unipoly::UniPoly;

// ---------------------------------------------------------------------------
// small multivariate polynomials for coefficient-matching systems
// ---------------------------------------------------------------------------

/// Sparse polynomial in a fixed tuple of named unknowns, used only to carry
/// coefficient-matching equations. Exponent vectors are parallel to `vars`.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: &[String]) -> Self {
        MultiPoly {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[String], c: Rational) -> Self {
        let mut out = Self::zero(vars);
        if !c.is_zero() {
            out.terms.insert(vec![0; vars.len()], c);
        }
        out
    }

    pub fn var(vars: &[String], idx: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        let mut out = Self::zero(vars);
        out.terms.insert(e, Rational::one());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert_add(&mut self, key: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(Rational::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            // re-fetch the key is awkward; prune zeros lazily
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.insert_add(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.vars, other.vars);
        let mut out = Self::zero(&self.vars);
        for (k1, v1) in &self.terms {
            for (k2, v2) in &other.terms {
                let key: Vec<u32> = k1.iter().zip(k2).map(|(a, b)| a + b).collect();
                out.insert_add(key, v1 * v2);
            }
        }
        out
    }

    pub fn eval(&self, values: &[Rational]) -> Rational {
        assert_eq!(values.len(), self.vars.len());
        let mut acc = Rational::zero();
        for (k, c) in &self.terms {
            let mut term = c.clone();
            for (e, v) in k.iter().zip(values) {
                for _ in 0..*e {
                    term = term * v;
                }
            }
            acc = acc + term;
        }
        acc
    }

    /// Canonical text: terms by total degree descending, then reverse
    /// lexicographic exponent order, e.g. "p^2 - 2*q".
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        // graded order, larger degree first; ties broken so the variable
        // listed first in `vars` leads
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let (da, db) = (a.iter().sum::<u32>(), b.iter().sum::<u32>());
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        let mut s = String::new();
        for key in keys {
            let c = &self.terms[key];
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
            let mut parts: Vec<String> = Vec::new();
            let is_const = key.iter().all(|e| *e == 0);
            if !mag.is_one() || is_const {
                parts.push(rational::render(&mag));
            }
            for (e, v) in key.iter().zip(&self.vars) {
                match e {
                    0 => {}
                    1 => parts.push(v.clone()),
                    _ => parts.push(format!("{v}^{e}")),
                }
            }
            s.push_str(&parts.join("*"));
        }
        s
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// A coefficient-matching system: the named unknowns and the polynomial
/// equations (each understood as "= 0") tying them to a factorization ansatz.
#[derive(Clone, Debug)]
pub struct CoefficientSystem {
    pub unknowns: Vec<String>,
    pub equations: Vec<MultiPoly>,
    pub origin: String,
}

impl CoefficientSystem {
    pub fn residuals(&self, values: &[Rational]) -> Vec<Rational> {
        self.equations.iter().map(|e| e.eval(values)).collect()
    }

    pub fn is_solution(&self, values: &[Rational]) -> bool {
        self.residuals(&values.to_vec()).iter().all(|r| r.is_zero())
    }

    pub fn render(&self) -> String {
        self.equations
            .iter()
            .map(|e| format!("{} = 0", e.render()))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

// ---------------------------------------------------------------------------
// hyperelliptic-style models
// ---------------------------------------------------------------------------

/// How a model point recovers factorization data.
#[derive(Clone, Debug)]
pub enum BackSub {
    /// F = c2 q^2 + c1 q + c0; a point (p0, s0) gives
    /// 2 c2(p0) q + c1(p0) = ±kappa·p0^j·s0.
    QuadraticInQ {
        c2: UniPoly,
        c1: UniPoly,
        c0: UniPoly,
    },
    /// Substitution q = t p^2 for the triple (n, n-m, n-2m): a point (t0, s0)
    /// gives p^m = (±s0 - A_{n-m}(1,t0)) / (2 A_n(1,t0)).
    PowerParam { n: u32, m: u32 },
    /// Even split f = ±h(x)h(-x); recovery goes through the solved
    /// coefficient chain of h, not through a (p,q) pair.
    EvenSplit {
        m: u32,
        k: u32,
        squared_variable: bool,
    },
    /// No back-substitution attached (display-only models).
    None,
}

/// One-sided curve model y^2 = rhs(x) with exact recovery data.
#[derive(Clone, Debug)]
pub struct HyperellipticModel {
    /// quadrinomial exponents the model governs
    pub triple: (u32, u32, u32),
    /// name of the rhs variable (p, t, X, ...)
    pub variable: String,
    /// name of the square-root variable (s, v, Y, ...)
    pub lhs_variable: String,
    /// integer-coefficient right-hand side after normalization
    pub rhs: UniPoly,
    /// kappa: the integer whose square was stripped while normalizing
    pub removed_square: BigInt,
    /// j: the even variable power x^(2j) stripped while normalizing
    pub removed_var_power: u32,
    pub back_sub: BackSub,
    /// short description of how the model was built
    pub construction: String,
}

/// A model point pulled back to a verified quadratic-factor witness.
#[derive(Clone, Debug)]
pub struct ModelWitness {
    pub p: Rational,
    pub q: Rational,
    pub witness: QuadraticWitness,
}

impl ModelWitness {
    /// The constant term vanished: reducibility is trivial there.
    pub fn is_degenerate(&self) -> bool {
        self.witness.spec.a.is_zero()
    }
}

impl HyperellipticModel {
    pub fn equation_display(&self) -> String {
        format!("{}^2 = {}", self.lhs_variable, self.rhs.render(&self.variable))
    }

    /// The factor stripped from the completed square, e.g. "4" or "4*p^2".
    pub fn removed_content(&self) -> String {
        let sq = &self.removed_square * &self.removed_square;
        match (sq == BigInt::one(), self.removed_var_power) {
            (true, 0) => "1".into(),
            (false, 0) => sq.to_string(),
            (true, j) => format!("{}^{}", self.variable, 2 * j),
            (false, j) => format!("{}*{}^{}", sq, self.variable, 2 * j),
        }
    }

    pub fn back_sub_display(&self) -> String {
        match &self.back_sub {
            BackSub::QuadraticInQ { c2, c1, .. } => {
                let q = BiPoly::var_y();
                let two_c2q = &BiPoly::from_uni_x(c2).scale(&rat_i64(2)) * &q;
                let numer = &two_c2q + &BiPoly::from_uni_x(c1);
                let scale = BiPoly::monomial(
                    self.removed_var_power,
                    0,
                    Rational::from_integer(self.removed_square.clone()),
                );
                let shown = match numer.try_div_exact(&scale) {
                    Some(d) => {
                        let r = d.render(&self.variable, "q");
                        if r.starts_with('-') {
                            (&-&d).render(&self.variable, "q")
                        } else {
                            r
                        }
                    }
                    Option::None => format!(
                        "({}) / ({})",
                        numer.render(&self.variable, "q"),
                        scale.render(&self.variable, "q")
                    ),
                };
                format!("{} = ±({})", self.lhs_variable, shown)
            }
            BackSub::PowerParam { n, m } => {
                let an = a_one_t(*n).render("t");
                let anm = a_one_t(*n - *m).render("t");
                format!(
                    "{} = ±(2*({})*{} + ({})), q = t*p^2",
                    self.lhs_variable,
                    an,
                    var_power("p", *m),
                    anm
                )
            }
            BackSub::EvenSplit { m, k, .. } => {
                let (_, e1) = deg8_elimination(*m, *k);
                let inv16 = rat_i64(1) / rat_i64(16);
                let numer = (-&e1).scale(&inv16);
                format!(
                    "8*s = {} ± 2*p*{}, then h solved coefficient by coefficient",
                    numer.render("p"),
                    self.lhs_variable
                )
            }
            BackSub::None => "none".into(),
        }
    }

    pub fn json(&self) -> serde_json::Value {
        serde_json::json!({
            "variable": self.variable,
            "lhs_variable": self.lhs_variable,
            "rhs_coefficients": self.rhs.coeffs().iter().map(rational::render).collect::<Vec<_>>(),
            "equation": self.equation_display(),
            "back_sub": self.back_sub_display(),
            "removed_content": self.removed_content(),
            "exponents": [self.triple.0, self.triple.1, self.triple.2],
        })
    }

    pub fn contains(&self, x0: &Rational, y0: &Rational) -> bool {
        y0 * y0 == self.rhs.eval(x0)
    }

    /// Pull a rational point back to quadratic-factor witnesses. Both signs
    /// of the square root are expanded; duplicates are merged; degenerate
    /// (a = 0) witnesses are returned tagged, not dropped.
    pub fn witnesses_from_point(
        &self,
        x0: &Rational,
        y0: &Rational,
    ) -> Result<Vec<ModelWitness>> {
        if !self.contains(x0, y0) {
            return Err(Error::OffCurve);
        }
        let (n, m, k) = self.triple;
        let mut pairs: Vec<(Rational, Rational)> = Vec::new();
        let push = |p: Rational, q: Rational, pairs: &mut Vec<(Rational, Rational)>| {
            if !pairs.iter().any(|(pp, qq)| *pp == p && *qq == q) {
                pairs.push((p, q));
            }
        };
        match &self.back_sub {
            BackSub::QuadraticInQ { c2, c1, c0 } => {
                let p0 = x0;
                let c2v = c2.eval(p0);
                let c1v = c1.eval(p0);
                if c2v.is_zero() {
                    // the q-quadratic degenerates to a line at this p0
                    if !c1v.is_zero() {
                        let q = -c0.eval(p0) / c1v;
                        push(p0.clone(), q, &mut pairs);
                    }
                } else {
                    let mut scale = Rational::from_integer(self.removed_square.clone());
                    for _ in 0..self.removed_var_power {
                        scale = scale * p0;
                    }
                    for sigma in [1i64, -1] {
                        let val = rat_i64(sigma) * &scale * y0;
                        let q = (val - &c1v) / (rat_i64(2) * &c2v);
                        push(p0.clone(), q, &mut pairs);
                    }
                }
            }
            BackSub::PowerParam { n: nn, m: mm } => {
                let t0 = x0;
                let an = a_one_t(*nn).eval(t0);
                let anm = a_one_t(*nn - *mm).eval(t0);
                if !an.is_zero() {
                    for sigma in [1i64, -1] {
                        let pm = (rat_i64(sigma) * y0 - &anm) / (rat_i64(2) * &an);
                        let roots: Vec<Rational> = if *mm == 1 {
                            vec![pm.clone()]
                        } else {
                            match rational::nth_root_exact(&pm, *mm) {
                                Some(r) if *mm % 2 == 0 && !r.is_zero() => vec![r.clone(), -r],
                                Some(r) => vec![r],
                                Option::None => vec![],
                            }
                        };
                        for p in roots {
                            let q = t0 * &p * &p;
                            push(p, q, &mut pairs);
                        }
                    }
                }
            }
            BackSub::EvenSplit { .. } | BackSub::None => {
                return Err(Error::UnsupportedCase(
                    "this model recovers factors through the even-split chain".into(),
                ));
            }
        }
        let mut out = Vec::new();
        for (p, q) in pairs {
            let w = quadrem::quadratic_witness(n, m, k, &p, &q)?
                .expect("model point must satisfy the divisibility system");
            out.push(ModelWitness { p, q, witness: w });
        }
        Ok(out)
    }
}

/// A_e(1, t) as a univariate polynomial in t.
pub fn a_one_t(e: u32) -> UniPoly {
    if e == 0 {
        return UniPoly::zero();
    }
    let t = UniPoly::x();
    let mut prev = UniPoly::zero();
    let mut cur = UniPoly::one();
    for _ in 1..e {
        let next = &(-&cur) - &(&t * &prev);
        prev = cur;
        cur = next;
    }
    cur
}

fn var_power(var: &str, e: u32) -> String {
    if e == 1 {
        var.to_string()
    } else {
        format!("{var}^{e}")
    }
}

/// Strip x^(2j) and the square part of the integer content from an
/// integer-coefficient polynomial: delta = kappa^2 · x^(2j) · rhs.
fn normalize_completed_square(delta: &UniPoly) -> (BigInt, u32, UniPoly) {
    assert!(!delta.is_zero(), "completed square degenerated to zero");
    let coeffs = delta.coeffs();
    let tz = coeffs.iter().take_while(|c| c.is_zero()).count();
    let j = (tz / 2) as u32;
    let shifted = UniPoly::from_coeffs(coeffs[(2 * j as usize)..].to_vec());
    let ints = shifted
        .integer_coeffs()
        .expect("discriminant of integer data must have integer coefficients");
    let mut content = BigInt::zero();
    for c in &ints {
        content = num_integer::gcd(content, c.clone());
    }
    let (kappa, _) = rational::square_part(&content);
    let inv = Rational::new(BigInt::one(), &kappa * &kappa);
    (kappa, j, shifted.scale(&inv))
}

/// Complete the square in q for F_{n,m,k} when F is genuinely quadratic in q
/// with no forced content. The two families that need content or square
/// handling, (6,4,2) and (6,5,4), are served by `square_content_cases`.
pub fn quadratic_factor_curve(n: u32, m: u32, k: u32) -> Result<HyperellipticModel> {
    validate_exponents(n, m, k)?;
    if n > 8 {
        return Err(Error::UnsupportedCase(format!(
            "no quadratic-in-q model tabulated for n = {n}"
        )));
    }
    let f = quadrem::f_symbolic(n, m, k)?;
    let min_px = f.terms().map(|(key, _)| key.0).min().unwrap_or(0);
    if min_px > 0 {
        // F has a forced p-power content; the zero locus splits into p = 0
        // plus a residual handled elsewhere
        return Err(Error::NotQuadraticInQ);
    }
    if f.degree_y() != Some(2) {
        return Err(Error::NotQuadraticInQ);
    }
    let cs = f.coeffs_in_y();
    let (c0, c1, c2) = (cs[0].clone(), cs[1].clone(), cs[2].clone());
    let delta = &(&c1 * &c1) - &(&c2 * &c0).scale(&rat_i64(4));
    let (kappa, j, rhs) = normalize_completed_square(&delta);
    if j > 0 {
        // a forced even p-power inside the square: handled as a special case
        return Err(Error::NotQuadraticInQ);
    }
    Ok(HyperellipticModel {
        triple: (n, m, k),
        variable: "p".into(),
        lhs_variable: "s".into(),
        rhs,
        removed_square: kappa,
        removed_var_power: 0,
        back_sub: BackSub::QuadraticInQ { c2, c1, c0 },
        construction: format!("completed square in q of the divisibility constraint for ({n},{m},{k})"),
    })
}

/// The p = 0 component of a factored constraint locus: every q gives a
/// member, with a as a polynomial in q and factor x^2 + q.
#[derive(Clone, Debug)]
pub struct ZeroLocusFamily {
    pub triple: (u32, u32, u32),
    /// a as a polynomial in q
    pub a_of_q: UniPoly,
}

impl ZeroLocusFamily {
    pub fn instantiate(&self, q: &Rational) -> Result<QuadraticWitness> {
        let (n, m, k) = self.triple;
        let w = quadrem::quadratic_witness(n, m, k, &Rational::zero(), q)?
            .expect("the p = 0 line satisfies the divisibility system identically");
        assert_eq!(w.spec.a, self.a_of_q.eval(q));
        Ok(w)
    }
}

/// Result of the two constraint loci that are not plain q-quadratics.
#[derive(Clone, Debug)]
pub struct SquareContentCase {
    pub residual: HyperellipticModel,
    /// present for (6,4,2): the p = 0 branch is a one-parameter family
    pub zero_branch: Option<ZeroLocusFamily>,
    pub note: String,
}

pub fn square_content_cases(n: u32, m: u32, k: u32) -> Result<SquareContentCase> {
    match (n, m, k) {
        (6, 4, 2) => {
            let f = quadrem::f_symbolic(6, 4, 2)?;
            // F = -p · R: strip the forced content
            let minus_p = BiPoly::monomial(1, 0, rat_i64(-1));
            let r = f
                .try_div_exact(&minus_p)
                .expect("(6,4,2) constraint has content -p");
            let cs = r.coeffs_in_y();
            let (c0, c1, c2) = (cs[0].clone(), cs[1].clone(), cs[2].clone());
            let delta = &(&c1 * &c1) - &(&c2 * &c0).scale(&rat_i64(4));
            let (kappa, j, rhs) = normalize_completed_square(&delta);
            assert_eq!(j, 0);
            let residual = HyperellipticModel {
                triple: (6, 4, 2),
                variable: "p".into(),
                lhs_variable: "s".into(),
                rhs,
                removed_square: kappa,
                removed_var_power: 0,
                back_sub: BackSub::QuadraticInQ { c2, c1, c0 },
                construction:
                    "content -p stripped from the (6,4,2) constraint, then square completed in q"
                        .into(),
            };
            let zero_branch = ZeroLocusFamily {
                triple: (6, 4, 2),
                a_of_q: UniPoly::from_i64(&[0, 1, -1, 1]), // q^3 - q^2 + q
            };
            Ok(SquareContentCase {
                residual,
                zero_branch: Some(zero_branch),
                note: "p = 0 gives the one-parameter family a = q^3 - q^2 + q with factor x^2 + q; \
                       the residual curve's small points all have p = ±1, which force a = 0"
                    .into(),
            })
        }
        (6, 5, 4) => {
            let f = quadrem::f_symbolic(6, 5, 4)?;
            let cs = f.coeffs_in_y();
            let (c0, c1, c2) = (cs[0].clone(), cs[1].clone(), cs[2].clone());
            let delta = &(&c1 * &c1) - &(&c2 * &c0).scale(&rat_i64(4));
            let (kappa, j, rhs) = normalize_completed_square(&delta);
            assert_eq!(j, 1, "(6,5,4) square carries exactly p^2");
            let residual = HyperellipticModel {
                triple: (6, 5, 4),
                variable: "p".into(),
                lhs_variable: "s".into(),
                rhs,
                removed_square: kappa,
                removed_var_power: 1,
                back_sub: BackSub::QuadraticInQ { c2, c1, c0 },
                construction:
                    "square completed in q for (6,5,4); the forced p^2 inside the square is stripped"
                        .into(),
            };
            Ok(SquareContentCase {
                residual,
                zero_branch: None,
                note: "p = 0 forces q = 0 and lands on a = 0".into(),
            })
        }
        _ => Err(Error::UnsupportedCase(format!(
            "({n},{m},{k}) is not one of the square-content loci (6,4,2), (6,5,4)"
        ))),
    }
}

/// Model for the substitution q = t p^2 applied to x^n + x^(n-m) + x^(n-2m)
/// + a: rhs(t) = A_{n-m}(1,t)^2 - 4 A_{n-2m}(1,t) A_n(1,t).
pub fn t_model(n: u32, m: u32) -> Result<HyperellipticModel> {
    if m < 1 || n <= 2 * m {
        return Err(Error::TModelConstraint);
    }
    let an = a_one_t(n);
    let anm = a_one_t(n - m);
    let an2m = a_one_t(n - 2 * m);
    let raw = &(&anm * &anm) - &(&an2m * &an).scale(&rat_i64(4));
    let (kappa, j, rhs) = normalize_completed_square(&raw);
    assert_eq!(j, 0, "t = 0 never lies on the discriminant");
    Ok(HyperellipticModel {
        triple: (n, n - m, n - 2 * m),
        variable: "t".into(),
        lhs_variable: "s".into(),
        rhs,
        removed_square: kappa,
        removed_var_power: 0,
        back_sub: BackSub::PowerParam { n, m },
        construction: format!(
            "discriminant in {} of the divisibility constraint under q = t*p^2 for ({}, {}, {})",
            var_power("p", m),
            n,
            n - m,
            n - 2 * m
        ),
    })
}

// ---------------------------------------------------------------------------
// even splits f = ±h(x)h(-x)
// ---------------------------------------------------------------------------

const UNKNOWN_NAMES: [&str; 6] = ["p", "q", "r", "s", "t", "u"];

/// Coefficient-matching system for x^n + x^m + x^k + a = ±h(x)h(-x) with h
/// monic of degree n/2 and sign (-1)^(n/2). All exponents must be even; odd
/// coefficient equations vanish identically and are omitted.
pub fn hxh_system(n: u32, m: u32, k: u32) -> Result<CoefficientSystem> {
    validate_exponents(n, m, k)?;
    if n % 2 != 0 || m % 2 != 0 || k % 2 != 0 {
        return Err(Error::OddExponent);
    }
    let half = (n / 2) as usize;
    if half > UNKNOWN_NAMES.len() {
        return Err(Error::UnsupportedCase(format!(
            "degree {n} exceeds the tabulated unknown names"
        )));
    }
    let mut vars: Vec<String> = UNKNOWN_NAMES[..half].iter().map(|s| s.to_string()).collect();
    vars.push("a".into());
    let a_idx = vars.len() - 1;

    // h ascending in x: [unknown_(half-1), ..., unknown_0, 1]
    let mut h: Vec<MultiPoly> = Vec::with_capacity(half + 1);
    for i in 0..half {
        h.push(MultiPoly::var(&vars, half - 1 - i));
    }
    h.push(MultiPoly::constant(&vars, Rational::one()));
    // h(-x): flip odd coefficients
    let h_neg: Vec<MultiPoly> = h
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { c.neg() } else { c.clone() })
        .collect();
    // product
    let mut prod: Vec<MultiPoly> = vec![MultiPoly::zero(&vars); 2 * half + 1];
    for (i, ci) in h.iter().enumerate() {
        for (jj, cj) in h_neg.iter().enumerate() {
            prod[i + jj] = prod[i + jj].add(&ci.mul(cj));
        }
    }
    let sign_neg = half % 2 == 1; // f = (-1)^(n/2) h(x) h(-x)
    let mut equations = Vec::new();
    for d in (0..(n as usize)).rev() {
        let expansion = if sign_neg { prod[d].neg() } else { prod[d].clone() };
        let mut target = MultiPoly::zero(&vars);
        if d == m as usize || d == k as usize {
            target = MultiPoly::constant(&vars, Rational::one());
        } else if d == 0 {
            target = MultiPoly::var(&vars, a_idx);
        }
        let eq = target.sub(&expansion);
        if d % 2 == 1 {
            assert!(eq.is_zero(), "odd coefficients must cancel in h(x)h(-x)");
            continue;
        }
        equations.push(eq);
    }
    Ok(CoefficientSystem {
        unknowns: vars,
        equations,
        origin: format!(
            "x^{n} + x^{m} + x^{k} + a = {}h(x)h(-x), h monic of degree {half}",
            if sign_neg { "-" } else { "" }
        ),
    })
}

/// Shared elimination for the degree-8 even splits: returns (rhs, e1) where
/// the remaining constraint, cleared of denominators, is
/// 64 s^2 + e1(p) s + e0(p) = 0 and its discriminant is (32 p)^2 · rhs(p).
fn deg8_elimination(m: u32, k: u32) -> (UniPoly, UniPoly) {
    let eps = |d: u32| -> i64 {
        if d == m || d == k {
            1
        } else {
            0
        }
    };
    let p = BiPoly::var_x();
    let s = BiPoly::var_y();
    let p2e6 = &p.pow(2) + &BiPoly::constant(rat_i64(eps(6)));
    // numerator of 8p·r: (p^2 + e6)^2 + 8s - 4 e4
    let nr = &(&p2e6.pow(2) + &s.scale(&rat_i64(8))) - &BiPoly::constant(rat_i64(4 * eps(4)));
    // remaining equation times 64 p^2: nr^2 - 64 p^2 (p^2 + e6) s + 64 e2 p^2
    let e = &(&(&nr * &nr) - &(&(&p.pow(2) * &p2e6) * &s).scale(&rat_i64(64)))
        + &p.pow(2).scale(&rat_i64(64 * eps(2)));
    let cs = e.coeffs_in_y();
    assert_eq!(cs.len(), 3);
    let (e0, e1, e2) = (cs[0].clone(), cs[1].clone(), cs[2].clone());
    assert_eq!(e2, UniPoly::from_i64(&[64]));
    let disc = &(&e1 * &e1) - &e0.scale(&rat_i64(256));
    // disc = (32 p)^2 rhs
    let (quot, rem) = disc
        .divrem(&UniPoly::monomial(2, rat_i64(1024)))
        .expect("monomial divisor");
    assert!(rem.is_zero(), "degree-8 discriminant must carry (32p)^2");
    (quot, e1)
}

/// Replace x^2 by a fresh variable in an even polynomial.
fn even_substitute(f: &UniPoly) -> Option<UniPoly> {
    let coeffs = f.coeffs();
    if coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
        return Option::None;
    }
    Some(UniPoly::from_coeffs(
        coeffs.iter().step_by(2).cloned().collect(),
    ))
}

/// A plane curve G(x, y) = 0 kept in two named variables.
#[derive(Clone, Debug)]
pub struct PlaneCurveModel {
    pub triple: (u32, u32, u32),
    pub poly: BiPoly,
    pub var_names: (String, String),
    pub construction: String,
}

impl PlaneCurveModel {
    pub fn equation_display(&self) -> String {
        format!(
            "{} = 0",
            self.poly.render(&self.var_names.0, &self.var_names.1)
        )
    }

    pub fn contains(&self, x0: &Rational, y0: &Rational) -> bool {
        self.poly.eval(x0, y0).is_zero()
    }
}

/// The eliminated form of an even-split system.
#[derive(Clone, Debug)]
pub enum HxhReduction {
    /// (8,4,2): kept in p
    ModelInP(HyperellipticModel),
    /// (8,6,2), (8,6,4): stated in X = p^2
    ModelInSquare(HyperellipticModel),
    /// (10,6,2): cubic plane curve in (P, s) with P = p^4
    PlaneCubic(PlaneCurveModel),
}

pub fn hxh_reduce(n: u32, m: u32, k: u32) -> Result<HxhReduction> {
    // constructing the system validates exponent parity
    let _ = hxh_system(n, m, k)?;
    match (n, m, k) {
        (8, 4, 2) => {
            let (rhs, _) = deg8_elimination(4, 2);
            Ok(HxhReduction::ModelInP(HyperellipticModel {
                triple: (8, 4, 2),
                variable: "p".into(),
                lhs_variable: "v".into(),
                rhs,
                removed_square: BigInt::from(32),
                removed_var_power: 1,
                back_sub: BackSub::EvenSplit {
                    m: 4,
                    k: 2,
                    squared_variable: false,
                },
                construction:
                    "even split x^8+x^4+x^2+a = h(x)h(-x); triangular solve, then the remaining \
                     s-quadratic's discriminant over (32p)^2"
                        .into(),
            }))
        }
        (8, 6, 2) | (8, 6, 4) => {
            let (rhs_p, _) = deg8_elimination(m, k);
            let rhs = even_substitute(&rhs_p)
                .expect("degree-8 elimination is even in p for these exponents");
            Ok(HxhReduction::ModelInSquare(HyperellipticModel {
                triple: (8, m, k),
                variable: "X".into(),
                lhs_variable: "Y".into(),
                rhs,
                removed_square: BigInt::from(32),
                removed_var_power: 1,
                back_sub: BackSub::EvenSplit {
                    m,
                    k,
                    squared_variable: true,
                },
                construction: format!(
                    "even split x^8+x^{m}+x^{k}+a = h(x)h(-x); elimination as for (8,4,2), then X = p^2 \
                     (admissible X are rational squares)"
                ),
            }))
        }
        (10, 6, 2) => {
            let p = BiPoly::var_x();
            let s = BiPoly::var_y();
            let p4 = p.pow(4);
            // numerator of 8p·r
            let nr = &(&p4 + &s.scale(&rat_i64(8))) - &BiPoly::constant(rat_i64(4));
            // remaining equation 1 - s^2 + 2rt, times -512 p^4
            let g = &(&p4.scale(&rat_i64(512)) - &(&(&p4 * &s) * &s).scale(&rat_i64(512)))
                + &(&nr * &(&(&p4 * &s).scale(&rat_i64(64)) - &(&nr * &nr)));
            let cubic = -&g;
            // compress p^4 -> P
            let mut poly = BiPoly::zero();
            for (key, c) in cubic.terms() {
                assert!(key.0 % 4 == 0, "elimination must be polynomial in p^4");
                poly = &poly + &BiPoly::monomial(key.0 / 4, key.1, c.clone());
            }
            Ok(HxhReduction::PlaneCubic(PlaneCurveModel {
                triple: (10, 6, 2),
                poly,
                var_names: ("P".into(), "s".into()),
                construction:
                    "even split x^10+x^6+x^2+a = -h(x)h(-x); triangular solve, remaining equation \
                     cleared by 512 p^4 and written in P = p^4"
                        .into(),
            }))
        }
        _ => Err(Error::UnsupportedCase(format!(
            "no tabulated elimination for ({n},{m},{k})"
        ))),
    }
}

/// A verified even-split factorization f = sign · h(x) · h(-x).
#[derive(Clone, Debug)]
pub struct EvenSplitWitness {
    pub spec: QuadrinomialSpec,
    pub h: UniPoly,
    /// +1 or -1; the monic cofactor is sign · h(-x)
    pub sign: i64,
    pub cofactor: UniPoly,
}

fn alternate_signs(f: &UniPoly) -> UniPoly {
    let coeffs: Vec<Rational> = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
        .collect();
    UniPoly::from_coeffs(coeffs)
}

/// Pull a point on an even-split model back to full factorizations.
/// For the X-substituted degree-8 models, x0 must be a rational square;
/// for (10,6,2), x0 = P must be the fourth power of a nonzero rational.
/// Points that fail those arithmetic conditions yield an empty list.
pub fn hxh_witnesses_from_point(
    n: u32,
    m: u32,
    k: u32,
    x0: &Rational,
    y0: &Rational,
) -> Result<Vec<EvenSplitWitness>> {
    let reduction = hxh_reduce(n, m, k)?;
    let mut out: Vec<EvenSplitWitness> = Vec::new();
    let push = |w: EvenSplitWitness, out: &mut Vec<EvenSplitWitness>| {
        if !out.iter().any(|e| e.h == w.h) {
            out.push(w);
        }
    };
    match reduction {
        HxhReduction::ModelInP(model) | HxhReduction::ModelInSquare(model) => {
            if !model.contains(x0, y0) {
                return Err(Error::OffCurve);
            }
            let p_candidates: Vec<Rational> = match &model.back_sub {
                BackSub::EvenSplit {
                    squared_variable: false,
                    ..
                } => vec![x0.clone()],
                BackSub::EvenSplit {
                    squared_variable: true,
                    ..
                } => match rational::sqrt_exact(x0) {
                    Some(r) if !r.is_zero() => vec![r.clone(), -r],
                    _ => vec![],
                },
                _ => unreachable!(),
            };
            let (_, e1) = deg8_elimination(m, k);
            let eps = |d: u32| -> Rational {
                if d == m || d == k {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            };
            for p0 in p_candidates {
                if p0.is_zero() {
                    continue;
                }
                for sigma in [1i64, -1] {
                    // 128 s = -e1(p0) ± 32 p0 y0
                    let s_val =
                        (-e1.eval(&p0) + rat_i64(32 * sigma) * &p0 * y0) / rat_i64(128);
                    let q = (&p0 * &p0 + eps(6)) / rat_i64(2);
                    let r = ((&p0 * &p0 + eps(6)).pow(2) + rat_i64(8) * &s_val
                        - rat_i64(4) * eps(4))
                        / (rat_i64(8) * &p0);
                    let a = &s_val * &s_val;
                    let h = UniPoly::from_coeffs(vec![
                        s_val.clone(),
                        r,
                        q,
                        p0.clone(),
                        Rational::one(),
                    ]);
                    let f = &h * &alternate_signs(&h);
                    let spec = QuadrinomialSpec::new(n, m, k, a)?;
                    assert_eq!(f, spec.to_unipoly(), "even split must multiply back");
                    push(
                        EvenSplitWitness {
                            spec,
                            cofactor: alternate_signs(&h),
                            h,
                            sign: 1,
                        },
                        &mut out,
                    );
                }
            }
        }
        HxhReduction::PlaneCubic(curve) => {
            if !curve.contains(x0, y0) {
                return Err(Error::OffCurve);
            }
            let s0 = y0;
            if let Some(root) = rational::nth_root_exact(x0, 4) {
                if root.is_zero() {
                    return Ok(out);
                }
                for p0 in [root.clone(), -root] {
                    let q = &p0 * &p0 / rat_i64(2);
                    let r = (p0.pow(4) + rat_i64(8) * s0 - rat_i64(4)) / (rat_i64(8) * &p0);
                    let t = (&p0 * &p0 * s0 - &r * &r) / (rat_i64(2) * &p0);
                    let a = -(&t * &t);
                    let h = UniPoly::from_coeffs(vec![
                        t,
                        s0.clone(),
                        r,
                        q,
                        p0.clone(),
                        Rational::one(),
                    ]);
                    let minus_h_neg = -&alternate_signs(&h);
                    let f = &h * &minus_h_neg;
                    let spec = QuadrinomialSpec::new(n, m, k, a)?;
                    assert_eq!(f, spec.to_unipoly(), "even split must multiply back");
                    push(
                        EvenSplitWitness {
                            spec,
                            cofactor: minus_h_neg,
                            h,
                            sign: -1,
                        },
                        &mut out,
                    );
                }
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// x^6 + x^5 + x^4 + a as a product of two cubics
// ---------------------------------------------------------------------------

/// The two-cubics locus for x^6 + x^5 + x^4 + a: plane curve in (p, q), the
/// quintic model, and the explicit map between them.
#[derive(Clone, Debug)]
pub struct TwoCubics {
    pub system: CoefficientSystem,
    /// the plane sextic in (p, q) cutting out cubic·cubic splits
    pub plane_curve: BiPoly,
    /// Y^2 = X(4X^4 + X^3 + 6X^2 + X + 4)
    pub model: HyperellipticModel,
}

impl TwoCubics {
    /// The displayed rational map (p, q) -> (X, Y); undefined at q = 0.
    pub fn map(&self, p: &Rational, q: &Rational) -> Result<(Rational, Rational)> {
        if q.is_zero() {
            return Err(Error::MapUndefined(
                "the (X, Y) chart divides by q".into(),
            ));
        }
        let pq = |f: &BiPoly| f.eval(p, q);
        let c = two_cubics_map_numerators();
        let x = pq(&c.0) / q;
        let y = pq(&c.1) / (q * q * q);
        Ok((x, y))
    }

    /// Solve the coefficient chain at a plane-curve point, producing the two
    /// cubics and the constant a. Undefined at p = 1/2 (the chain divides by
    /// 1 - 2p).
    pub fn split(&self, p: &Rational, q: &Rational) -> Result<TwoCubicsSplit> {
        if !self.plane_curve.eval(p, q).is_zero() {
            return Err(Error::InvalidParameter(
                "point does not lie on the two-cubics locus".into(),
            ));
        }
        if *p == rat_i64(1) / rat_i64(2) {
            return Err(Error::MapUndefined("the chain divides by 1 - 2p".into()));
        }
        let s = Rational::one() - p;
        let t = p * p - p - q + Rational::one();
        let r = ((p * q) * &s + (p * p - q) * &t) / (&s - p);
        let u = -&r - q * &s - p * &t;
        let a = &r * &u;
        let factor1 = UniPoly::from_coeffs(vec![
            r.clone(),
            q.clone(),
            p.clone(),
            Rational::one(),
        ]);
        let factor2 = UniPoly::from_coeffs(vec![u, t, s, Rational::one()]);
        let f = &factor1 * &factor2;
        let spec = QuadrinomialSpec::new(6, 5, 4, a.clone())?;
        if f != spec.to_unipoly() {
            return Err(Error::InvalidParameter(
                "chain solution failed the multiply-back check".into(),
            ));
        }
        Ok(TwoCubicsSplit {
            a,
            factor1,
            factor2,
            f,
        })
    }
}

#[derive(Clone, Debug)]
pub struct TwoCubicsSplit {
    pub a: Rational,
    pub factor1: UniPoly,
    pub factor2: UniPoly,
    pub f: UniPoly,
}

fn two_cubics_plane_curve() -> BiPoly {
    // -p^2 (p^2-p+1)^2 + (p^2-p+1)(3p^2-p+1) q - (3p^2-p+2) q^2 + 2 q^3
    let p = BiPoly::var_x();
    let q = BiPoly::var_y();
    let w = &(&p.pow(2) - &p) + &BiPoly::one(); // p^2 - p + 1
    let t3 = &(&p.pow(2).scale(&rat_i64(3)) - &p) + &BiPoly::one(); // 3p^2 - p + 1
    let t3b = &(&p.pow(2).scale(&rat_i64(3)) - &p) + &BiPoly::constant(rat_i64(2)); // 3p^2 - p + 2
    let mut acc = -&(&p.pow(2) * &w.pow(2));
    acc = &acc + &(&(&w * &t3) * &q);
    acc = &acc - &(&t3b * &q.pow(2));
    &acc + &q.pow(3).scale(&rat_i64(2))
}

fn two_cubics_map_numerators() -> (BiPoly, BiPoly) {
    let p = BiPoly::var_x();
    let q = BiPoly::var_y();
    let w = &(&p.pow(2) - &p) + &BiPoly::one();
    // X = (p^2 - p + 1 - q)/q
    let xn = &w - &q;
    // Y numerator: -2(p-1)p(p^2-p+1)^2 + (p^2-p+1)(5p^2-5p+1)q - (5p^2-3p+1)q^2 + 2q^3
    let t5 = &(&p.pow(2).scale(&rat_i64(5)) - &p.scale(&rat_i64(5))) + &BiPoly::one();
    let t5b = &(&p.pow(2).scale(&rat_i64(5)) - &p.scale(&rat_i64(3))) + &BiPoly::one();
    let mut yn = -&(&(&(&p - &BiPoly::one()) * &p) * &w.pow(2)).scale(&rat_i64(2));
    yn = &yn + &(&(&w * &t5) * &q);
    yn = &yn - &(&t5b * &q.pow(2));
    yn = &yn + &q.pow(3).scale(&rat_i64(2));
    (xn, yn)
}

pub fn two_cubics_curve() -> TwoCubics {
    let vars: Vec<String> = ["p", "q", "r", "s", "t", "u"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    // (x^3 + p x^2 + q x + r)(x^3 + s x^2 + t x + u), coefficients matched
    // against x^6 + x^5 + x^4 (+ a at degree 0, which just defines a)
    let c1: Vec<MultiPoly> = vec![
        MultiPoly::var(&vars, 2),
        MultiPoly::var(&vars, 1),
        MultiPoly::var(&vars, 0),
        MultiPoly::constant(&vars, Rational::one()),
    ];
    let c2: Vec<MultiPoly> = vec![
        MultiPoly::var(&vars, 5),
        MultiPoly::var(&vars, 4),
        MultiPoly::var(&vars, 3),
        MultiPoly::constant(&vars, Rational::one()),
    ];
    let mut prod: Vec<MultiPoly> = vec![MultiPoly::zero(&vars); 7];
    for (i, a) in c1.iter().enumerate() {
        for (j, b) in c2.iter().enumerate() {
            prod[i + j] = prod[i + j].add(&a.mul(b));
        }
    }
    let mut equations = Vec::new();
    for d in (1..=5usize).rev() {
        let target = if d == 5 || d == 4 {
            MultiPoly::constant(&vars, Rational::one())
        } else {
            MultiPoly::zero(&vars)
        };
        equations.push(prod[d].sub(&target));
    }
    let system = CoefficientSystem {
        unknowns: vars,
        equations,
        origin: "x^6 + x^5 + x^4 + a = (x^3 + p x^2 + q x + r)(x^3 + s x^2 + t x + u); \
                 a is defined by the degree-0 coefficient"
            .into(),
    };
    let model = HyperellipticModel {
        triple: (6, 5, 4),
        variable: "X".into(),
        lhs_variable: "Y".into(),
        rhs: UniPoly::from_i64(&[0, 4, 1, 6, 1, 4]),
        removed_square: BigInt::one(),
        removed_var_power: 0,
        back_sub: BackSub::None,
        construction: "image of the two-cubics plane sextic under the (X, Y) chart".into(),
    };
    TwoCubics {
        system,
        plane_curve: two_cubics_plane_curve(),
        model,
    }
}

/// x^6 + x^4 + x^2 + a as a product of two cubics: the complete one-parameter
/// family. Returns a, the cubic h, and whether the member degenerates to
/// a = 0.
#[derive(Clone, Debug)]
pub struct TwoCubicsEven {
    pub a: Rational,
    pub h: UniPoly,
    pub degenerate: bool,
}

pub fn two_cubics_even_family(u: &Rational) -> Result<TwoCubicsEven> {
    if u.is_zero() {
        return Err(Error::InvalidParameter(
            "the even two-cubics family divides by u".into(),
        ));
    }
    let one = Rational::one();
    let w = (u - &one) * (u + &one) * (u * u + rat_i64(3)) / (rat_i64(8) * u);
    let a = -(&w * &w);
    let h = UniPoly::from_coeffs(vec![
        w.clone(),
        (u * u + &one) / rat_i64(2),
        u.clone(),
        one,
    ]);
    // -h(x)h(-x) = x^6 + x^4 + x^2 + a exactly
    let f = -&(&h * &alternate_signs(&h));
    let expected = &UniPoly::from_i64(&[0, 0, 1, 0, 1, 0, 1]) + &UniPoly::constant(a.clone());
    assert_eq!(f, expected, "even two-cubics identity must hold");
    Ok(TwoCubicsEven {
        degenerate: a.is_zero(),
        a,
        h,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn model_vec(model: &HyperellipticModel) -> Vec<i64> {
        model
            .rhs
            .coeffs()
            .iter()
            .map(|c| {
                assert!(c.is_integer());
                let v: BigInt = c.to_integer();
                i64::try_from(&v).unwrap()
            })
            .collect()
    }

    #[test]
    fn quadratic_models_match_tabulated_forms() {
        let m = quadratic_factor_curve(5, 2, 1).unwrap();
        assert_eq!(model_vec(&m), vec![-4, 4, 0, 0, 5]);
        assert_eq!(m.removed_square, BigInt::one());
        assert_eq!(m.equation_display(), "s^2 = 5*p^4 + 4*p - 4");

        let m = quadratic_factor_curve(5, 4, 3).unwrap();
        assert_eq!(model_vec(&m), vec![1, -4, 6, -8, 5]);

        let m = quadratic_factor_curve(6, 2, 1).unwrap();
        assert_eq!(model_vec(&m), vec![0, 3, -3, 0, 0, 0, 1]);
        assert_eq!(m.removed_square, BigInt::from(2));

        let m = quadratic_factor_curve(6, 3, 2).unwrap();
        assert_eq!(model_vec(&m), vec![1, 0, -12, 4, 0, 0, 4]);
        assert_eq!(m.equation_display(), "s^2 = 4*p^6 + 4*p^3 - 12*p^2 + 1");

        // routed away: content p, forced square, q-degree 3, out of range
        assert!(matches!(
            quadratic_factor_curve(6, 4, 2),
            Err(Error::NotQuadraticInQ)
        ));
        assert!(matches!(
            quadratic_factor_curve(6, 5, 4),
            Err(Error::NotQuadraticInQ)
        ));
        assert!(matches!(
            quadratic_factor_curve(7, 5, 3),
            Err(Error::NotQuadraticInQ)
        ));
        assert!(matches!(
            quadratic_factor_curve(9, 5, 3),
            Err(Error::UnsupportedCase(_))
        ));
    }

    #[test]
    fn model_points_recover_verified_factorizations() {
        // (5,3,1) at p = -1: s^2 = 4, the two signs give q = 3 (a = -12) and
        // q = 1 (a = 0, degenerate)
        let m = quadratic_factor_curve(5, 3, 1).unwrap();
        let ws = m.witnesses_from_point(&rat_i64(-1), &rat_i64(2)).unwrap();
        assert_eq!(ws.len(), 2);
        let nonzero: Vec<_> = ws.iter().filter(|w| !w.is_degenerate()).collect();
        assert_eq!(nonzero.len(), 1);
        assert_eq!(nonzero[0].q, rat_i64(3));
        assert_eq!(nonzero[0].witness.spec.a, rat_i64(-12));
        assert_eq!(
            nonzero[0].witness.cofactor.render("x"),
            "x^3 + x^2 - x - 4"
        );
        assert!(m
            .witnesses_from_point(&rat_i64(-1), &rat_i64(3))
            .is_err());
    }

    #[test]
    fn square_content_642() {
        let case = square_content_cases(6, 4, 2).unwrap();
        assert_eq!(model_vec(&case.residual), vec![-2, 0, 1, 0, 1]);
        assert_eq!(case.residual.removed_square, BigInt::from(2));
        let branch = case.zero_branch.unwrap();
        let w = branch.instantiate(&rat_i64(2)).unwrap();
        assert_eq!(w.spec.a, rat_i64(6)); // 8 - 4 + 2
        assert_eq!(w.factor.render("x"), "x^2 + 2");
        // residual points at p = ±1 (s = 0) force a = 0
        let ws = case
            .residual
            .witnesses_from_point(&rat_i64(1), &rat_i64(0))
            .unwrap();
        assert!(ws.iter().all(|w| w.is_degenerate()));
    }

    #[test]
    fn square_content_654() {
        let case = square_content_cases(6, 5, 4).unwrap();
        assert_eq!(model_vec(&case.residual), vec![4, -8, 9, -8, 4]);
        assert_eq!(case.residual.removed_var_power, 1);
        assert!(case.residual.contains(&rat_i64(0), &rat_i64(2)));
        // the point (3, 13): both signs give the two tabulated constants
        let ws = case
            .residual
            .witnesses_from_point(&rat_i64(3), &rat_i64(13))
            .unwrap();
        let mut a_vals: Vec<Rational> =
            ws.iter().map(|w| w.witness.spec.a.clone()).collect();
        a_vals.sort();
        assert!(a_vals.contains(&rat_i64(18)));
        assert!(a_vals.contains(&rat(-194481, 512)));
        let w18 = ws.iter().find(|w| w.witness.spec.a == rat_i64(18)).unwrap();
        assert_eq!(w18.witness.factor.render("x"), "x^2 + 3*x + 3");
        assert_eq!(
            w18.witness.cofactor.render("x"),
            "x^4 - 2*x^3 + 4*x^2 - 6*x + 6"
        );
        assert!(square_content_cases(6, 3, 1).is_err());
    }

    #[test]
    fn t_models_match_tabulated_forms() {
        let m = t_model(7, 1).unwrap();
        assert_eq!(m.triple, (7, 6, 5));
        assert_eq!(model_vec(&m), vec![-3, 24, -66, 72, -27, 4]);
        let m8 = t_model(8, 1).unwrap();
        assert_eq!(m8.triple, (8, 7, 6));
        assert_eq!(model_vec(&m8), vec![-3, 30, -111, 186, -138, 36, 1]);
        assert!(t_model(6, 3).is_err());
        assert!(t_model(5, 0).is_err());

        // for m = 1, the rhs degree lands in the genus-2 range {5, 6} only
        // at n = 7 and n = 8
        let mut genus2: Vec<u32> = Vec::new();
        for n in 3u32..=12 {
            let deg = t_model(n, 1).unwrap().rhs.degree().unwrap();
            if deg == 5 || deg == 6 {
                genus2.push(n);
            }
        }
        assert_eq!(genus2, vec![7, 8]);
    }

    #[test]
    fn t_model_point_recovers_constant() {
        // (7,6,5) at t = 1: s^2 = 4; the sign choices give p = 1 (a = 0) and
        // p = -1, which rebuilds x^7 + x^6 + x^5 - 2 = (x^2 - x + 1)(...)
        let m7 = t_model(7, 1).unwrap();
        assert!(m7.contains(&rat_i64(1), &rat_i64(2)));
        let ws = m7.witnesses_from_point(&rat_i64(1), &rat_i64(2)).unwrap();
        let hit = ws
            .iter()
            .find(|w| w.witness.spec.a == rat_i64(-2))
            .expect("t = 1 must reach a = -2");
        assert_eq!(hit.p, rat_i64(-1));
        assert_eq!(hit.witness.factor.render("x"), "x^2 - x + 1");

        // (8,7,6) at t = 1/3: rhs = 1/729 and the pair (1, 1/3) gives a = 2/81
        let m8 = t_model(8, 1).unwrap();
        assert!(m8.contains(&rat(1, 3), &rat(1, 27)));
        let ws = m8.witnesses_from_point(&rat(1, 3), &rat(1, 27)).unwrap();
        let hit = ws
            .iter()
            .find(|w| w.witness.spec.a == rat(2, 81))
            .expect("t = 1/3 must reach a = 2/81");
        assert_eq!((hit.p.clone(), hit.q.clone()), (rat_i64(1), rat(1, 3)));
        for w in &ws {
            assert_eq!(w.q, &w.p * &w.p * rat(1, 3));
            assert_eq!(
                &w.witness.factor * &w.witness.cofactor,
                w.witness.spec.to_unipoly()
            );
        }
    }

    #[test]
    fn hxh_systems_and_reductions() {
        let sys = hxh_system(8, 4, 2).unwrap();
        assert_eq!(sys.unknowns, vec!["p", "q", "r", "s", "a"]);
        assert_eq!(sys.equations.len(), 4);
        assert_eq!(sys.equations[0].render(), "p^2 - 2*q");
        // known solution p=2, q=2, r=1, s=1/2, a=1/4
        assert!(sys.is_solution(&[
            rat_i64(2),
            rat_i64(2),
            rat_i64(1),
            rat(1, 2),
            rat(1, 4)
        ]));
        assert!(!sys.is_solution(&[
            rat_i64(2),
            rat_i64(2),
            rat_i64(1),
            rat(1, 2),
            rat(1, 3)
        ]));
        assert!(matches!(hxh_system(8, 5, 2), Err(Error::OddExponent)));

        match hxh_reduce(8, 4, 2).unwrap() {
            HxhReduction::ModelInP(m) => {
                assert_eq!(model_vec(&m), vec![-16, 0, 8, 0, 0, 0, 2]);
            }
            _ => panic!("(8,4,2) stays in p"),
        }
        match hxh_reduce(8, 6, 2).unwrap() {
            HxhReduction::ModelInSquare(m) => {
                assert_eq!(model_vec(&m), vec![-18, -2, 2, 2]);
            }
            _ => panic!("(8,6,2) is stated in X"),
        }
        match hxh_reduce(8, 6, 4).unwrap() {
            HxhReduction::ModelInSquare(m) => {
                assert_eq!(model_vec(&m), vec![6, 6, 2, 2]);
            }
            _ => panic!("(8,6,4) is stated in X"),
        }
    }

    #[test]
    fn deg8_points_give_both_constants() {
        let ws = hxh_witnesses_from_point(8, 4, 2, &rat_i64(2), &rat_i64(12)).unwrap();
        let mut a_vals: Vec<Rational> = ws.iter().map(|w| w.spec.a.clone()).collect();
        a_vals.sort();
        assert_eq!(a_vals, vec![rat(1, 4), rat(625, 4)]);
        for w in &ws {
            assert_eq!(&w.h * &w.cofactor, w.spec.to_unipoly());
        }
        // x^8+x^4+x^2+1/4 = (x^4+2x^3+2x^2+x+1/2)(x^4-2x^3+2x^2-x+1/2)
        let quarter = ws.iter().find(|w| w.spec.a == rat(1, 4)).unwrap();
        assert_eq!(
            quarter.h.render("x"),
            "x^4 + 2*x^3 + 2*x^2 + x + 1/2"
        );

        // (8,6,4) via X = p^2: the curve point (1, 4) lifts to p = ±1 and
        // reproduces x^8 + x^6 + x^4 + 4
        let ws = hxh_witnesses_from_point(8, 6, 4, &rat_i64(1), &rat_i64(4)).unwrap();
        assert!(ws.iter().any(|w| w.spec.a == rat_i64(4)));
        let four = ws.iter().find(|w| w.spec.a == rat_i64(4)).unwrap();
        let g = &four.h * &four.cofactor;
        assert_eq!(g.render("x"), "x^8 + x^6 + x^4 + 4");
    }

    #[test]
    fn plane_cubic_matches_tabulated_polynomial() {
        let c = match hxh_reduce(10, 6, 2).unwrap() {
            HxhReduction::PlaneCubic(c) => c,
            _ => panic!("(10,6,2) eliminates to a plane cubic"),
        };
        // P^3 - 4(10s+3)P^2 + 16(12s^2+4s-29)P + 64(2s-1)^3
        let rendered = c.poly.render("P", "s");
        assert_eq!(
            rendered,
            "P^3 - 40*P^2*s - 12*P^2 + 192*P*s^2 + 64*P*s - 464*P + 512*s^3 - 768*s^2 + 384*s - 64"
        );
        for (pv, sv) in [
            (rat(12, 5), rat(7, 5)),
            (rat_i64(-4), rat_i64(3)),
            (rat_i64(-4), rat_i64(1)),
            (rat_i64(-36), rat_i64(-1)),
            (rat_i64(0), rat(1, 2)),
            (rat_i64(12), rat_i64(-1)),
        ] {
            assert!(c.contains(&pv, &sv), "({pv}, {sv}) missing from the cubic");
        }
    }

    #[test]
    fn deg10_chain_consistency() {
        // the chain's multiply-back residual matches the plane cubic: for any
        // (p0, s0), C(p0^4, s0) = 512 p0^4 (coeff_x2(f) - 1)
        let c = match hxh_reduce(10, 6, 2).unwrap() {
            HxhReduction::PlaneCubic(c) => c,
            _ => unreachable!(),
        };
        for (pv, sv) in [(rat_i64(1), rat_i64(2)), (rat(3, 2), rat(-1, 3)), (rat_i64(-2), rat(5, 7))] {
            let p4 = pv.pow(4);
            let q = &pv * &pv / rat_i64(2);
            let r = (pv.pow(4) + rat_i64(8) * &sv - rat_i64(4)) / (rat_i64(8) * &pv);
            let t = (&pv * &pv * &sv - &r * &r) / (rat_i64(2) * &pv);
            let h = UniPoly::from_coeffs(vec![
                t.clone(),
                sv.clone(),
                r,
                q,
                pv.clone(),
                Rational::one(),
            ]);
            let f = -&(&h * &alternate_signs(&h));
            let residual = f.coeff(2) - Rational::one();
            assert_eq!(
                c.poly.eval(&p4, &sv),
                rat_i64(512) * &p4 * residual,
                "chain residual mismatch at ({pv}, {sv})"
            );
        }
    }

    #[test]
    fn two_cubics_locus_and_map() {
        let tc = two_cubics_curve();
        assert_eq!(tc.system.equations.len(), 5);
        for (p, q) in [
            (rat_i64(0), rat_i64(0)),
            (rat_i64(1), rat_i64(1)),
            (rat(1, 2), rat(3, 8)),
        ] {
            assert!(tc.plane_curve.eval(&p, &q).is_zero());
        }
        assert_eq!(
            tc.map(&rat_i64(1), &rat_i64(1)).unwrap(),
            (rat_i64(0), rat_i64(0))
        );
        assert_eq!(
            tc.map(&rat(1, 2), &rat(3, 8)).unwrap(),
            (rat_i64(1), rat_i64(4))
        );
        assert!(tc.map(&rat_i64(0), &rat_i64(0)).is_err());
        // image points live on the model
        assert!(tc.model.contains(&rat_i64(1), &rat_i64(4)));
        assert!(tc.model.contains(&rat_i64(0), &rat_i64(0)));
        // the chain solves (1,1) into two cubics with a = 0
        let split = tc.split(&rat_i64(1), &rat_i64(1)).unwrap();
        assert!(split.a.is_zero());
        assert_eq!(&split.factor1 * &split.factor2, split.f);
        assert!(tc.split(&rat_i64(2), &rat_i64(2)).is_err());
    }

    #[test]
    fn two_cubics_locus_is_the_eliminated_equation() {
        // eliminate (r, s, t, u) from the system by the documented chain and
        // compare zero sets: the numerator of the last equation must be a
        // constant multiple of the displayed plane sextic
        let p = BiPoly::var_x();
        let q = BiPoly::var_y();
        let one = BiPoly::one();
        let s = &one - &p;
        let t = &(&(&p * &p) - &p) - &(&q - &one);
        // r (s - p) = pqs + (p^2 - q) t
        let r_num = &(&(&p * &q) * &s) + &(&(&(&p * &p) - &q) * &t);
        let s_minus_p = &s - &p;
        // remaining equation r t + q u = 0 with u (s-p) = -(r_num) - (qs + pt)(s-p):
        // clear (s-p): r_num · (t - q) - (q^2 s + p q t)(s - p)
        let n = &(&r_num * &(&t - &q))
            - &(&(&(&(&q * &q) * &s) + &(&(&p * &q) * &t)) * &s_minus_p);
        let d = two_cubics_plane_curve();
        let quot = n.try_div_exact(&d).expect("locus must divide elimination");
        assert_eq!(quot.degree_x(), Some(0));
        assert_eq!(quot.degree_y(), Some(0));
    }

    #[test]
    fn two_cubics_even_members() {
        // u = 2: w = 1·3·7/16 and a = -w^2 = -441/256
        let m = two_cubics_even_family(&rat_i64(2)).unwrap();
        assert_eq!(m.a, rat(-441, 256));
        assert_eq!(m.h.render("x"), "x^3 + 2*x^2 + 5/2*x + 21/16");
        assert!(!m.degenerate);
        let m1 = two_cubics_even_family(&rat_i64(1)).unwrap();
        assert!(m1.degenerate);
        assert!(m1.a.is_zero());
        let m3 = two_cubics_even_family(&rat_i64(3)).unwrap();
        assert!(!m3.degenerate);
        assert!(two_cubics_even_family(&rat_i64(0)).is_err());
    }

    #[test]
    fn back_sub_displays() {
        let m = quadratic_factor_curve(5, 2, 1).unwrap();
        assert_eq!(m.back_sub_display(), "s = ±(3*p^2 - 2*q)");
        let m = quadratic_factor_curve(6, 2, 1).unwrap();
        assert_eq!(m.back_sub_display(), "s = ±(2*p^3 - 3*p*q)");
        assert_eq!(m.removed_content(), "4");
        let case = square_content_cases(6, 5, 4).unwrap();
        assert_eq!(case.residual.removed_content(), "p^2");
    }
}
