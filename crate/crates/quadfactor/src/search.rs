//! Height-bounded rational point search on the curve models, exact linear and
//! quadratic factor detection for concrete quadrinomials, and a Kronecker
//! interpolation oracle whose negative certificates are exhaustive.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::models::HyperellipticModel;
use crate::quadrem::{self, QuadraticWitness, QuadrinomialSpec};
use crate::rational::{self, Rational};
use crate::unipoly::{UniPoly, DEFAULT_FACTOR_BUDGET};

/// Outcome of a height-bounded point sweep. Height of u/v in lowest terms is
/// max(|u|, v); the report never claims anything beyond its bound.
#[derive(Clone, Debug)]
pub struct SearchReport {
    pub model: String,
    pub height_bound: u64,
    /// (x, y) with y ≥ 0 representative, sorted by x
    pub points: Vec<(Rational, Rational)>,
    pub exhaustive_up_to: u64,
}

impl SearchReport {
    pub fn xs(&self) -> Vec<Rational> {
        self.points.iter().map(|(x, _)| x.clone()).collect()
    }

    pub fn json(&self) -> serde_json::Value {
        serde_json::json!({
            "model": self.model,
            "bound": self.height_bound,
            "points": self
                .points
                .iter()
                .map(|(x, y)| serde_json::json!({"x": rational::render(x), "y": rational::render(y)}))
                .collect::<Vec<_>>(),
            "complete": true,
        })
    }
}

/// Sweep x = u/v in lowest terms with 0 < v ≤ H, |u| ≤ H over y² = rhs(x).
/// Clearing v^deg turns the square test into an exact integer one.
pub fn search_points(model: &HyperellipticModel, height_bound: u64) -> Result<SearchReport> {
    assert!(height_bound >= 1, "height bound must be positive");
    let coeffs = model.rhs.integer_coeffs().ok_or_else(|| {
        Error::InvalidParameter(
            "point search expects a content-cleared right-hand side with integer coefficients"
                .into(),
        )
    })?;
    let d = coeffs.len() - 1;
    let mut points: Vec<(Rational, Rational)> = Vec::new();
    for v in 1..=height_bound {
        let vb = BigInt::from(v);
        // v^j for j = 0..=d, plus the y-denominator power
        let mut vpow = Vec::with_capacity(d + 1);
        let mut acc = BigInt::from(1);
        for _ in 0..=d {
            vpow.push(acc.clone());
            acc *= &vb;
        }
        for u in -(height_bound as i64)..=(height_bound as i64) {
            if u.unsigned_abs().gcd(&v) != 1 {
                continue;
            }
            let ub = BigInt::from(u);
            // N = Σ c_i u^i v^(d-i) = v^d · rhs(u/v), Horner in u
            let mut n = coeffs[d].clone();
            for i in (0..d).rev() {
                n = n * &ub + &coeffs[i] * &vpow[d - i];
            }
            // for odd d the cleared form needs one more factor of v to make
            // the denominator an even power
            let test = if d % 2 == 0 { n } else { n * &vb };
            if test.is_negative() {
                continue;
            }
            if let Some(root) = rational::int_sqrt_exact(&test) {
                // v^(d/2) for even d, v^((d+1)/2) for the v-adjusted odd case
                let y_den = vpow[(d + 1) / 2].clone();
                let x = Rational::new(ub, vb.clone());
                let y = Rational::new(root, y_den);
                debug_assert_eq!(&y * &y, model.rhs.eval(&x));
                points.push((x, y));
            }
        }
    }
    points.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(SearchReport {
        model: model.equation_display(),
        height_bound,
        points,
        exhaustive_up_to: height_bound,
    })
}

/// The two polynomials in (p, q) that vanish together exactly when
/// x² + px + q divides x^n + x^m + x^k + a: the A-sum, and the B-sum plus a.
fn divisibility_system(spec: &QuadrinomialSpec) -> (crate::bipoly::BiPoly, crate::bipoly::BiPoly) {
    use crate::bipoly::BiPoly;
    let (n, m, k) = spec.exponents();
    let p = BiPoly::var_x();
    let q = BiPoly::var_y();
    let mut asum = BiPoly::zero();
    let mut bsum = BiPoly::constant(spec.a.clone());
    let mut prev = BiPoly::zero();
    let mut cur = BiPoly::one();
    for e in 1..=n {
        if e == k || e == m || e == n {
            asum = &asum + &cur;
            bsum = &bsum - &(&q * &prev);
        }
        if e < n {
            let next = &-&(&p * &cur) - &(&q * &prev);
            prev = cur;
            cur = next;
        }
    }
    (asum, bsum)
}

fn verified_witnesses(
    spec: &QuadrinomialSpec,
    candidates: Vec<(Rational, Rational)>,
) -> Result<Vec<QuadraticWitness>> {
    let (n, m, k) = spec.exponents();
    let mut out: Vec<QuadraticWitness> = Vec::new();
    for (p0, q0) in candidates {
        if out.iter().any(|w| w.p == p0 && w.q == q0) {
            continue;
        }
        if let Some(w) = quadrem::quadratic_witness(n, m, k, &p0, &q0)? {
            if w.spec == *spec {
                out.push(w);
            }
        }
    }
    out.sort_by(|a, b| (&a.p, &a.q).cmp(&(&b.p, &b.q)));
    Ok(out)
}

/// Eliminate q by a resultant, extract rational p-roots, then recover q per
/// root from the gcd of the specialized system. Returns None when the
/// elimination degenerates or a root hunt exceeds its budget, so the caller
/// can fall back to the divisor-constrained route.
fn quadratics_by_elimination(
    _spec: &QuadrinomialSpec,
    f1: &crate::bipoly::BiPoly,
    f2: &crate::bipoly::BiPoly,
) -> Result<Option<Vec<(Rational, Rational)>>> {
    let res = f1.resultant_y(f2)?;
    if res.is_zero() {
        return Ok(None);
    }
    let mut p_candidates: Vec<Rational> = Vec::new();
    match res.try_rational_roots(DEFAULT_FACTOR_BUDGET) {
        None => return Ok(None),
        Some(roots) => p_candidates.extend(roots.into_iter().map(|(r, _)| r)),
    }
    // resultants can miss common roots where both leading q-coefficients
    // vanish; sweep those p too
    let lc1 = f1.coeffs_in_y().pop().expect("A-sum depends on q");
    let lc2 = f2.coeffs_in_y().pop().expect("B-sum depends on q");
    if let Ok(g) = lc1.gcd(&lc2) {
        if g.degree().unwrap_or(0) >= 1 {
            match g.try_rational_roots(DEFAULT_FACTOR_BUDGET) {
                None => return Ok(None),
                Some(roots) => p_candidates.extend(roots.into_iter().map(|(r, _)| r)),
            }
        }
    }
    let mut out = Vec::new();
    for p0 in p_candidates {
        let s1 = f1.eval_x(&p0);
        let s2 = f2.eval_x(&p0);
        // s2 has constant term a ≠ 0 in q, so it never vanishes identically
        let g = if s1.is_zero() { s2 } else { s1.gcd(&s2)? };
        if g.degree().unwrap_or(0) == 0 {
            continue;
        }
        match g.try_rational_roots(DEFAULT_FACTOR_BUDGET) {
            None => return Ok(None),
            Some(roots) => {
                for (q0, _) in roots {
                    out.push((p0.clone(), q0));
                }
            }
        }
    }
    Ok(Some(out))
}

/// Complete sweep driven by the integral structure of the factorization: for
/// a primitive integer form β·xⁿ + … + α, any monic rational quadratic factor
/// has q = w/u with u | β, w | α up to sign. Each candidate q pins p down to
/// the rational roots of a gcd in p.
fn quadratics_by_divisor_sweep(
    spec: &QuadrinomialSpec,
    f1: &crate::bipoly::BiPoly,
    f2: &crate::bipoly::BiPoly,
) -> Result<Vec<(Rational, Rational)>> {
    let (_, f_int) = spec.to_unipoly().primitive_integer_form();
    let beta = f_int.leading().expect("spec polynomial is nonzero").clone();
    let alpha = f_int.coeff(0);
    assert!(!alpha.is_zero(), "guarded by the a != 0 precondition");
    let lead_divs = rational::try_divisors(&beta.to_integer(), DEFAULT_FACTOR_BUDGET)
        .ok_or(Error::DegenerateElimination)?;
    let const_divs = rational::try_divisors(&alpha.to_integer(), DEFAULT_FACTOR_BUDGET)
        .ok_or(Error::DegenerateElimination)?;
    let mut q_candidates: std::collections::BTreeSet<Rational> = Default::default();
    for u in &lead_divs {
        for w in &const_divs {
            for signed in [w.clone(), -w] {
                q_candidates.insert(Rational::new(signed, u.clone()));
            }
        }
    }
    let mut out = Vec::new();
    for q0 in q_candidates {
        let s1 = f1.eval_y(&q0);
        let s2 = f2.eval_y(&q0);
        // the A-sum has unit leading coefficient in p, so s1 is never zero
        let g = s1.gcd(&s2)?;
        if g.degree().unwrap_or(0) == 0 {
            continue;
        }
        let roots = g
            .try_rational_roots(DEFAULT_FACTOR_BUDGET)
            .ok_or(Error::DegenerateElimination)?;
        for (p0, _) in roots {
            out.push((p0, q0.clone()));
        }
    }
    Ok(out)
}

/// All monic rational quadratic factors x² + px + q of the quadrinomial,
/// division-verified witnesses included. Complete: elimination first, with a
/// divisor-constrained sweep as the fallback (and as the first route when the
/// q-degrees make the resultant expensive).
pub fn quadratic_factors_of(spec: &QuadrinomialSpec) -> Result<Vec<QuadraticWitness>> {
    if spec.a.is_zero() {
        return Err(Error::InvalidParameter(
            "a = 0 factors are governed by the closed-form families; this sweep needs a != 0"
                .into(),
        ));
    }
    let (f1, f2) = divisibility_system(spec);
    let heavy =
        f1.degree_y().unwrap_or(0) + f2.degree_y().unwrap_or(0) > 14;
    let candidates = if heavy {
        quadratics_by_divisor_sweep(spec, &f1, &f2)?
    } else {
        match quadratics_by_elimination(spec, &f1, &f2)? {
            Some(c) => c,
            None => quadratics_by_divisor_sweep(spec, &f1, &f2)?,
        }
    };
    verified_witnesses(spec, candidates)
}

/// Rational roots of the realized quadrinomial, with multiplicity.
pub fn linear_factors_of(spec: &QuadrinomialSpec) -> Vec<(Rational, u32)> {
    spec.to_unipoly().rational_roots()
}

/// Positive outcome carries a division-verified factor; the negative
/// certificate is exhaustive for every degree up to its bound.
#[derive(Clone, Debug)]
pub enum OracleOutcome {
    Factor { factor: UniPoly, cofactor: UniPoly },
    NoFactorUpTo(u32),
}

/// Degree cap for oracle inputs; QUADFACTOR_ORACLE_MAXDEG overrides the
/// default of 14.
pub fn oracle_degree_cap() -> usize {
    std::env::var("QUADFACTOR_ORACLE_MAXDEG")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .unwrap_or(14)
}

const ORACLE_NODE_BUDGET: u64 = 10_000_000;

struct OraclePrep {
    f_int: UniPoly,
    /// evaluation abscissas, values, and positive divisor lists, ordered by
    /// ascending divisor count
    points: Vec<(i64, BigInt, Vec<BigInt>)>,
}

enum PrepOutcome {
    Ready(OraclePrep),
    RootFound(Rational),
}

fn oracle_prepare(f: &UniPoly, needed: usize) -> Result<PrepOutcome> {
    let (_, f_int) = f.primitive_integer_form();
    let coeffs = f_int
        .integer_coeffs()
        .expect("primitive form has integer coefficients");
    let mut points: Vec<(i64, BigInt, Vec<BigInt>)> = Vec::new();
    let mut xi: i64 = 0;
    while points.len() < needed {
        let xb = BigInt::from(xi);
        let mut val = BigInt::zero();
        for c in coeffs.iter().rev() {
            val = val * &xb + c;
        }
        if val.is_zero() {
            return Ok(PrepOutcome::RootFound(Rational::from_integer(xb)));
        }
        let divs = rational::try_divisors(&val, DEFAULT_FACTOR_BUDGET).ok_or_else(|| {
            Error::OracleOutOfRange(format!(
                "the value at x = {xi} resisted divisor enumeration within budget"
            ))
        })?;
        points.push((xi, val, divs));
        xi = if xi > 0 { -xi } else { -xi + 1 };
    }
    points.sort_by_key(|(_, _, d)| d.len());
    Ok(PrepOutcome::Ready(OraclePrep { f_int, points }))
}

fn lagrange_interpolate(samples: &[(i64, BigInt)]) -> UniPoly {
    let mut acc = UniPoly::zero();
    for (i, (xi, yi)) in samples.iter().enumerate() {
        let mut basis = UniPoly::constant(Rational::from_integer(yi.clone()));
        for (j, (xj, _)) in samples.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = rational::rat_i64(xi - xj);
            let lin = UniPoly::from_coeffs(vec![rational::rat_i64(-*xj), rational::rat_i64(1)]);
            basis = &basis * &lin.scale(&(rational::rat_i64(1) / denom));
        }
        acc = &acc + &basis;
    }
    acc
}

fn dfs_tuples(
    prep: &OraclePrep,
    d: usize,
    chosen: &mut Vec<BigInt>,
    nodes: &mut u64,
) -> Result<Option<UniPoly>> {
    let level = chosen.len();
    if level == d + 1 {
        let samples: Vec<(i64, BigInt)> = prep
            .points
            .iter()
            .take(d + 1)
            .map(|(x, _, _)| *x)
            .zip(chosen.iter().cloned())
            .collect();
        let g = lagrange_interpolate(&samples);
        if g.degree() == Some(d)
            && g.integer_coeffs().is_some()
            && g.divides(&prep.f_int)
        {
            return Ok(Some(g));
        }
        return Ok(None);
    }
    let (xi, _, divs) = &prep.points[level];
    for base in divs {
        let signs: &[i64] = if level == 0 { &[1] } else { &[1, -1] };
        for s in signs {
            *nodes += 1;
            if *nodes > ORACLE_NODE_BUDGET {
                return Err(Error::OracleOutOfRange(
                    "divisor tuple search exceeded its node budget".into(),
                ));
            }
            let cand = if *s == 1 { base.clone() } else { -base.clone() };
            // an integer polynomial g has (xi - xj) | g(xi) - g(xj)
            let consistent = chosen.iter().enumerate().all(|(j, prior)| {
                let (xj, _, _) = &prep.points[j];
                let gap = BigInt::from(xi - xj);
                ((&cand - prior) % gap).is_zero()
            });
            if !consistent {
                continue;
            }
            chosen.push(cand);
            if let Some(hit) = dfs_tuples(prep, d, chosen, nodes)? {
                return Ok(Some(hit));
            }
            chosen.pop();
        }
    }
    Ok(None)
}

fn oracle_checks(f: &UniPoly, max_deg: u32) -> Result<usize> {
    let deg = f.degree().ok_or_else(|| {
        Error::InvalidParameter("the zero polynomial has no factorization".into())
    })?;
    if deg > oracle_degree_cap() {
        return Err(Error::OracleOutOfRange(format!(
            "degree {} exceeds the oracle cap of {}",
            deg,
            oracle_degree_cap()
        )));
    }
    if max_deg > 7 {
        return Err(Error::OracleOutOfRange(
            "factor degrees above 7 are outside the oracle's practicality bound".into(),
        ));
    }
    Ok(deg)
}

/// Search for a factor of degree exactly d by Kronecker interpolation:
/// candidate factors are pinned by signed divisor tuples of the evaluation
/// values, with the first abscissa sign-normalized and integer-gap congruence
/// pruning. None is a proof that no degree-d rational factor exists.
pub fn kronecker_factor_of_degree(
    f: &UniPoly,
    d: u32,
) -> Result<Option<(UniPoly, UniPoly)>> {
    let deg = oracle_checks(f, d)?;
    if d as usize >= deg || d == 0 {
        return Ok(None);
    }
    match oracle_prepare(f, d as usize + 1)? {
        PrepOutcome::RootFound(r) => {
            let lin = UniPoly::from_coeffs(vec![-r, rational::rat_i64(1)]);
            if d == 1 {
                let cofactor = f.div_exact(&lin);
                return Ok(Some((lin, cofactor)));
            }
            let reduced = f.div_exact(&lin);
            // a degree-d factor either avoids this root and divides the
            // quotient (possibly being the whole quotient), or contains it
            let avoiding = if reduced.degree() == Some(d as usize) {
                Some(reduced.clone())
            } else {
                kronecker_factor_of_degree(&reduced, d)?.map(|(g, _)| g)
            };
            if let Some(g) = avoiding {
                let cof = f.div_exact(&g);
                return Ok(Some((g, cof)));
            }
            match kronecker_factor_of_degree(&reduced, d - 1)? {
                Some((h, _)) => {
                    let g = &lin * &h;
                    let cof = f.div_exact(&g);
                    Ok(Some((g, cof)))
                }
                None => Ok(None),
            }
        }
        PrepOutcome::Ready(prep) => {
            let mut nodes = 0u64;
            let mut chosen = Vec::new();
            match dfs_tuples(&prep, d as usize, &mut chosen, &mut nodes)? {
                Some(g) => {
                    let (_, g_norm) = g.primitive_integer_form();
                    let cofactor = f.div_exact(&g_norm);
                    Ok(Some((g_norm, cofactor)))
                }
                None => Ok(None),
            }
        }
    }
}

/// Classical Kronecker factor hunt: degrees ascending from 1, so a positive
/// outcome has minimal factor degree. The negative certificate covers every
/// proper factor degree ≤ max_deg (degrees beyond half the total are covered
/// by their cofactors).
pub fn kronecker_factor(f: &UniPoly, max_deg: u32) -> Result<OracleOutcome> {
    let deg = oracle_checks(f, max_deg)?;
    let effective = max_deg.min((deg / 2) as u32);
    for d in 1..=effective {
        if let Some((factor, cofactor)) = kronecker_factor_of_degree(f, d)? {
            return Ok(OracleOutcome::Factor { factor, cofactor });
        }
    }
    Ok(OracleOutcome::NoFactorUpTo(max_deg))
}

fn as_quadrinomial(f: &UniPoly) -> Option<QuadrinomialSpec> {
    let deg = f.degree()?;
    if deg < 3 {
        return None;
    }
    let nonzero: Vec<usize> = (0..=deg).filter(|&i| !f.coeff(i).is_zero()).collect();
    if nonzero.len() != 4 || nonzero[0] != 0 {
        return None;
    }
    let one = rational::rat_i64(1);
    for &i in &nonzero[1..] {
        if f.coeff(i) != one {
            return None;
        }
    }
    QuadrinomialSpec::new(
        nonzero[3] as u32,
        nonzero[2] as u32,
        nonzero[1] as u32,
        f.coeff(0).clone(),
    )
    .ok()
}

/// Smallest degree ≤ bound of a proper rational factor, or None with the
/// exhaustive guarantee. Quadrinomials route their degree-2 test through the
/// complete elimination; everything else goes to the oracle.
pub fn min_factor_degree(f: &UniPoly, bound: u32) -> Result<Option<u32>> {
    let deg = oracle_checks(f, bound.min(7))?;
    if deg < 2 {
        return Ok(None);
    }
    // a reducible polynomial has a factor of degree at most deg/2, so the
    // certified range always extends to the full bound
    let effective = bound.min((deg / 2) as u32);
    let quad = as_quadrinomial(f);
    for d in 1..=effective {
        let found = match (d, &quad) {
            (1, Some(spec)) => !linear_factors_of(spec).is_empty(),
            (2, Some(spec)) => !quadratic_factors_of(spec)?.is_empty(),
            _ => kronecker_factor_of_degree(f, d)?.is_some(),
        };
        if found {
            return Ok(Some(d));
        }
    }
    Ok(None)
}
