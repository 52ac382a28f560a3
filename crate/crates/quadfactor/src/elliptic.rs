//! Elliptic curve arithmetic over Q in long Weierstrass form, the explicit
//! birational maps from curves to the degree-5 quadratic-factor models, a
//! generic quartic-to-cubic point transport, and generators that walk
//! multiples of a base point into verified quadrinomial factorizations.
//!
//! Long form y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 is kept
//! throughout: several of the tabulated curves have a1, a3 nonzero and their
//! listed points are used verbatim.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::models::{self, HyperellipticModel, ModelWitness};
use crate::quadrem::QuadraticWitness;
use crate::rational::{self, rat_i64, Rational};
use crate::unipoly::UniPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassCurve {
    pub a1: Rational,
    pub a2: Rational,
    pub a3: Rational,
    pub a4: Rational,
    pub a6: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurvePoint {
    Infinity,
    Affine(Rational, Rational),
}

impl CurvePoint {
    pub fn affine(x: Rational, y: Rational) -> Self {
        CurvePoint::Affine(x, y)
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn xy(&self) -> Option<(&Rational, &Rational)> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine(x, y) => Some((x, y)),
        }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => write!(f, "O"),
            CurvePoint::Affine(x, y) =>

                write!(f, "({}, {})", rational::render(x), rational::render(y)),
        }
    }
}

impl WeierstrassCurve {
    pub fn new(
        a1: Rational,
        a2: Rational,
        a3: Rational,
        a4: Rational,
        a6: Rational,
    ) -> Result<Self> {
        let curve = WeierstrassCurve { a1, a2, a3, a4, a6 };
        if curve.discriminant().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(curve)
    }

    pub fn from_i64(a: [i64; 5]) -> Result<Self> {
        Self::new(
            rat_i64(a[0]),
            rat_i64(a[1]),
            rat_i64(a[2]),
            rat_i64(a[3]),
            rat_i64(a[4]),
        )
    }

    pub fn discriminant(&self) -> Rational {
        let b2 = &self.a1 * &self.a1 + rat_i64(4) * &self.a2;
        let b4 = rat_i64(2) * &self.a4 + &self.a1 * &self.a3;
        let b6 = &self.a3 * &self.a3 + rat_i64(4) * &self.a6;
        let b8 = &self.a1 * &self.a1 * &self.a6 + rat_i64(4) * &self.a2 * &self.a6
            - &self.a1 * &self.a3 * &self.a4
            + &self.a2 * &self.a3 * &self.a3
            - &self.a4 * &self.a4;
        -(&b2 * &b2) * &b8 - rat_i64(8) * (&b4 * &b4 * &b4) - rat_i64(27) * (&b6 * &b6)
            + rat_i64(9) * &b2 * &b4 * &b6
    }

    pub fn contains(&self, pt: &CurvePoint) -> bool {
        match pt {
            CurvePoint::Infinity => true,
            CurvePoint::Affine(x, y) => {
                y * y + &self.a1 * x * y + &self.a3 * y
                    == x * x * x + &self.a2 * x * x + &self.a4 * x + &self.a6
            }
        }
    }

    pub fn equation_display(&self) -> String {
        let mut lhs = String::from("y^2");
        let term = |c: &Rational, v: &str, out: &mut String| {
            if c.is_zero() {
                return;
            }
            let mag = c.abs();
            out.push_str(if c.is_negative() { " - " } else { " + " });
            if !mag.is_one() {
                out.push_str(&rational::render(&mag));
                if !v.is_empty() {
                    out.push('*');
                }
            } else if v.is_empty() {
                out.push('1');
            }
            out.push_str(v);
        };
        term(&self.a1, "x*y", &mut lhs);
        term(&self.a3, "y", &mut lhs);
        let mut rhs = String::from("x^3");
        term(&self.a2, "x^2", &mut rhs);
        term(&self.a4, "x", &mut rhs);
        term(&self.a6, "", &mut rhs);
        format!("{lhs} = {rhs}")
    }

    /// -(x, y) = (x, -y - a1 x - a3).
    pub fn negate(&self, pt: &CurvePoint) -> CurvePoint {
        match pt {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(x, y) => {
                CurvePoint::Affine(x.clone(), -y - &self.a1 * x - &self.a3)
            }
        }
    }
}

/// Chord-tangent sum on a long Weierstrass curve.
pub fn ec_add(curve: &WeierstrassCurve, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
    if !curve.contains(p) || !curve.contains(q) {
        return Err(Error::OffCurve);
    }
    let (x1, y1) = match p.xy() {
        None => return Ok(q.clone()),
        Some(v) => v,
    };
    let (x2, y2) = match q.xy() {
        None => return Ok(p.clone()),
        Some(v) => v,
    };
    let (lambda, nu) = if x1 != x2 {
        let lambda = (y2 - y1) / (x2 - x1);
        let nu = (y1 * x2 - y2 * x1) / (x2 - x1);
        (lambda, nu)
    } else if *y2 == -y1 - &curve.a1 * x1 - &curve.a3 {
        // q = -p, vertical line
        return Ok(CurvePoint::Infinity);
    } else {
        // tangent line at p = q
        let den = rat_i64(2) * y1 + &curve.a1 * x1 + &curve.a3;
        let lambda = (rat_i64(3) * x1 * x1 + rat_i64(2) * &curve.a2 * x1 + &curve.a4
            - &curve.a1 * y1)
            / &den;
        let nu = (-(x1 * x1 * x1) + &curve.a4 * x1 + rat_i64(2) * &curve.a6 - &curve.a3 * y1)
            / &den;
        (lambda, nu)
    };
    let x3 = &lambda * &lambda + &curve.a1 * &lambda - &curve.a2 - x1 - x2;
    let y3 = -(&lambda + &curve.a1) * &x3 - &nu - &curve.a3;
    Ok(CurvePoint::Affine(x3, y3))
}

/// n-fold sum; negative n goes through point negation.
pub fn ec_mul(curve: &WeierstrassCurve, n: i64, p: &CurvePoint) -> Result<CurvePoint> {
    if !curve.contains(p) {
        return Err(Error::OffCurve);
    }
    let (count, base) = if n < 0 {
        (-n, curve.negate(p))
    } else {
        (n, p.clone())
    };
    let mut acc = CurvePoint::Infinity;
    for _ in 0..count {
        acc = ec_add(curve, &acc, &base)?;
    }
    Ok(acc)
}

/// True iff n·P differs from the identity for every 1 ≤ n ≤ 12. Rational
/// torsion has order at most 12, so this certifies infinite order.
pub fn certify_infinite_order(curve: &WeierstrassCurve, p: &CurvePoint) -> Result<bool> {
    if !curve.contains(p) {
        return Err(Error::OffCurve);
    }
    let mut acc = CurvePoint::Infinity;
    for _ in 1..=12 {
        acc = ec_add(curve, &acc, p)?;
        if acc.is_infinity() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Curves tabulated for specific quadrinomial exponent triples. The degree-4
/// triples carry the curves attached to the full two-quadratics split of
/// x^4+x^m+x^k+a; (8,6,2) and (8,6,4) are stated after the substitution
/// (X, Y) -> (U/2, V/2) that clears the factor 2 from the displayed
/// equations.
pub fn tabulated_curve(n: u32, m: u32, k: u32) -> Option<WeierstrassCurve> {
    let coeffs: [i64; 5] = match (n, m, k) {
        (4, 2, 1) => [0, 1, 0, -1, -5],
        (4, 3, 1) => [1, -1, 0, 0, -5],
        (4, 3, 2) => [1, 0, 1, -1, -1],
        (5, 2, 1) => [0, 0, 1, 5, 1],
        (5, 3, 1) => [0, -1, 0, 4, 0],
        (5, 3, 2) => [0, -1, 1, -1, 1],
        (5, 4, 2) => [0, 1, 1, -2, 1],
        (5, 4, 3) => [0, 0, 1, 0, 0],
        (6, 4, 2) => [0, 1, 0, 8, 8],
        (6, 5, 4) => [1, -1, 1, -2, 0],
        (8, 6, 2) => [0, 2, 0, -4, -72],
        (8, 6, 4) => [0, 2, 0, 12, 24],
        (10, 6, 2) => [0, 1, 0, -24, 36],
        _ => return None,
    };
    Some(WeierstrassCurve::from_i64(coeffs).expect("tabulated curves are nonsingular"))
}

/// Map from the rank-1 curve attached to x^5+x^3+x+a onto its quartic model
/// s^2 = 5p^4+2p^2-3.
pub fn phi_531(pt: &CurvePoint) -> Result<(Rational, Rational)> {
    let (x, y) = pt
        .xy()
        .ok_or_else(|| Error::MapUndefined("the chart is affine".into()))?;
    let den = rat_i64(3) * x - y - rat_i64(4);
    if den.is_zero() {
        return Err(Error::MapUndefined(
            "maps to infinity of the quartic model".into(),
        ));
    }
    let p = (x + rat_i64(4) - y) / &den;
    let s = rat_i64(2)
        * (x * x * x - rat_i64(12) * x * x + rat_i64(4) * x + rat_i64(16) * y - rat_i64(16))
        / (&den * &den);
    Ok((p, s))
}

/// Map from the rank-1 curve attached to x^5+x^3+x^2+a onto its quartic
/// model s^2 = 5p^4+2p^2+4p+1.
pub fn phi_532(pt: &CurvePoint) -> Result<(Rational, Rational)> {
    let (x, y) = pt
        .xy()
        .ok_or_else(|| Error::MapUndefined("the chart is affine".into()))?;
    let den = y - x + rat_i64(1);
    if den.is_zero() {
        return Err(Error::MapUndefined(
            "maps to infinity of the quartic model".into(),
        ));
    }
    let p = (x - rat_i64(1)) / &den;
    let s = (y + x * x * x - rat_i64(3) * x * x + rat_i64(3) * x - rat_i64(1)) / (&den * &den);
    Ok((p, s))
}

/// Birational correspondence between v^2 = quartic(u), anchored at a rational
/// point (u0, e) with e ≠ 0, and a monic Weierstrass cubic. The anchor
/// becomes the cubic's point at infinity.
#[derive(Clone, Debug)]
pub struct QuarticTransport {
    pub quartic: UniPoly,
    pub u0: Rational,
    pub e: Rational,
    pub curve: WeierstrassCurve,
    mu: Rational,
    kappa: Rational,
    beta: Rational,
    gamma: Rational,
    /// coordinate scale X = c3·T, Y = c3·S with c3 = -8e
    c3: Rational,
}

impl QuarticTransport {
    pub fn new(quartic: &UniPoly, u0: &Rational, e: &Rational) -> Result<Self> {
        if quartic.degree() != Some(4) {
            return Err(Error::InvalidParameter(
                "transport needs a degree-4 right-hand side".into(),
            ));
        }
        if e.is_zero() || e * e != quartic.eval(u0) {
            return Err(Error::InvalidParameter(
                "anchor must be a rational point with nonzero second coordinate".into(),
            ));
        }
        // recenter: u = u0 + 1/U turns (u, v) into V^2 = e^2 U^4 + d U^3 +
        // c U^2 + b U + a with V = v U^2
        let shifted = quartic.shift(u0);
        let cs = shifted.coeffs();
        let (a, b, c, d) = (cs[4].clone(), cs[3].clone(), cs[2].clone(), cs[1].clone());
        // complete the square: V^2 = (eU^2 + mu U + kappa)^2 + beta U + gamma
        let mu = &d / (rat_i64(2) * e);
        let kappa = (&c - &mu * &mu) / (rat_i64(2) * e);
        let beta = &b - rat_i64(2) * &mu * &kappa;
        let gamma = &a - &kappa * &kappa;
        // with T = V - (eU^2 + mu U + kappa) and S = 4eTU + 2 mu T - beta:
        // S^2 = -8e T^3 + 4(mu^2 - 4 e kappa) T^2 + 4(2 e gamma - mu beta) T + beta^2
        let c3 = rat_i64(-8) * e;
        let a2 = rat_i64(4) * (&mu * &mu - rat_i64(4) * e * &kappa);
        let a4 = rat_i64(4) * (rat_i64(2) * e * &gamma - &mu * &beta) * &c3;
        let a6 = &beta * &beta * &c3 * &c3;
        let curve = WeierstrassCurve::new(Rational::zero(), a2, Rational::zero(), a4, a6)?;
        Ok(QuarticTransport {
            quartic: quartic.clone(),
            u0: u0.clone(),
            e: e.clone(),
            curve,
            mu,
            kappa,
            beta,
            gamma,
            c3,
        })
    }

    fn w_of(&self, u_var: &Rational) -> Rational {
        &self.e * u_var * u_var + &self.mu * u_var + &self.kappa
    }

    pub fn to_curve(&self, u: &Rational, v: &Rational) -> Result<CurvePoint> {
        if v * v != self.quartic.eval(u) {
            return Err(Error::OffCurve);
        }
        if *u == self.u0 {
            return Err(Error::MapUndefined(
                "the anchor corresponds to the point at infinity".into(),
            ));
        }
        let u_var = Rational::one() / (u - &self.u0);
        let v_var = v * &u_var * &u_var;
        let t = &v_var - &self.w_of(&u_var);
        let s = rat_i64(4) * &self.e * &t * &u_var + rat_i64(2) * &self.mu * &t - &self.beta;
        let pt = CurvePoint::Affine(&self.c3 * &t, &self.c3 * &s);
        debug_assert!(self.curve.contains(&pt));
        Ok(pt)
    }

    pub fn from_curve(&self, pt: &CurvePoint) -> Result<(Rational, Rational)> {
        let (x, y) = pt.xy().ok_or_else(|| {
            Error::MapUndefined("the point at infinity returns to the anchor".into())
        })?;
        let t = x / &self.c3;
        let s = y / &self.c3;
        let u_var = if t.is_zero() {
            // the U-quadratic degenerates to beta U + gamma = 0
            if self.beta.is_zero() {
                return Err(Error::MapUndefined("chart breaks down at T = 0".into()));
            }
            -&self.gamma / &self.beta
        } else {
            (&s - rat_i64(2) * &self.mu * &t + &self.beta)
                / (rat_i64(4) * &self.e * &t)
        };
        if u_var.is_zero() {
            return Err(Error::MapUndefined(
                "image lies over u at infinity".into(),
            ));
        }
        let u = &self.u0 + Rational::one() / &u_var;
        let v_var = &t + &self.w_of(&u_var);
        let v = &v_var / (&u_var * &u_var);
        if &v * &v != self.quartic.eval(&u) {
            return Err(Error::MapUndefined(
                "image does not return to the quartic".into(),
            ));
        }
        Ok((u, v))
    }
}

/// Walk multiples of a base point of a quartic model through the transport
/// and back, collecting distinct on-model points. `anchor` is a rational
/// model point with nonzero second coordinate; `base` is the walked point.
pub fn quartic_point_transport(
    model: &HyperellipticModel,
    anchor: (&Rational, &Rational),
    base: (&Rational, &Rational),
    count: usize,
) -> Result<Vec<(Rational, Rational)>> {
    let transport = QuarticTransport::new(&model.rhs, anchor.0, anchor.1)?;
    let start = transport.to_curve(base.0, base.1)?;
    let mut out: Vec<(Rational, Rational)> = Vec::new();
    for n in 1..=(4 * count.max(1) as i64 + 8) {
        for sgn in [1i64, -1] {
            let pt = ec_mul(&transport.curve, sgn * n, &start)?;
            let (u, v) = match transport.from_curve(&pt) {
                Ok(uv) => uv,
                Err(_) => continue,
            };
            assert!(
                v.clone() * &v == model.rhs.eval(&u),
                "transported point must satisfy the model"
            );
            if !out.iter().any(|(a, b)| *a == u && *b == v) {
                out.push((u, v));
            }
            if out.len() >= count {
                return Ok(out);
            }
        }
    }
    Ok(out)
}

/// A factorization generated by walking a curve, with the source point kept
/// for provenance.
#[derive(Clone, Debug)]
pub struct GeneratedFactorization {
    pub witness: QuadraticWitness,
    pub source_point: String,
}

impl GeneratedFactorization {
    pub fn json(&self) -> serde_json::Value {
        let spec = &self.witness.spec;
        let (n, m, k) = spec.exponents();
        serde_json::json!({
            "n": n,
            "m": m,
            "k": k,
            "a": rational::render(&spec.a),
            "factor_coeffs": self.witness.factor.coeffs().iter().map(rational::render).collect::<Vec<_>>(),
            "cofactor_coeffs": self.witness.cofactor.coeffs().iter().map(rational::render).collect::<Vec<_>>(),
            "source_point": self.source_point,
        })
    }
}

struct PhiFamily {
    triple: (u32, u32, u32),
    generator: CurvePoint,
    phi: fn(&CurvePoint) -> Result<(Rational, Rational)>,
}

/// Walk multiples of the tabulated generator for one of the infinite
/// families, returning `count` verified factorizations with pairwise
/// distinct nonzero constants. Degenerate images (a = 0, undefined charts)
/// are skipped.
pub fn generate_reducible(
    triple: (u32, u32, u32),
    count: usize,
) -> Result<Vec<GeneratedFactorization>> {
    if count == 0 {
        return Err(Error::InvalidParameter("count must be at least 1".into()));
    }
    match triple {
        (5, 3, 1) | (5, 3, 2) => {
            let family = if triple == (5, 3, 1) {
                PhiFamily {
                    triple,
                    generator: CurvePoint::affine(rat_i64(1), rat_i64(2)),
                    phi: phi_531,
                }
            } else {
                PhiFamily {
                    triple,
                    generator: CurvePoint::affine(rat_i64(1), rat_i64(0)),
                    phi: phi_532,
                }
            };
            generate_through_phi(family, count)
        }
        (6, 5, 4) => generate_through_transport(count),
        _ => Err(Error::UnsupportedCase(format!(
            "no infinite-family generator tabulated for ({}, {}, {})",
            triple.0, triple.1, triple.2
        ))),
    }
}

fn collect_new(
    witnesses: Vec<ModelWitness>,
    source: String,
    seen: &mut Vec<Rational>,
    out: &mut Vec<GeneratedFactorization>,
) {
    for w in witnesses {
        if w.is_degenerate() {
            continue;
        }
        let a = w.witness.spec.a.clone();
        if seen.contains(&a) {
            continue;
        }
        seen.push(a);
        out.push(GeneratedFactorization {
            witness: w.witness,
            source_point: source.clone(),
        });
    }
}

fn generate_through_phi(family: PhiFamily, count: usize) -> Result<Vec<GeneratedFactorization>> {
    let (n, m, k) = family.triple;
    let curve = tabulated_curve(n, m, k).expect("phi families are tabulated");
    assert!(curve.contains(&family.generator));
    let model = models::quadratic_factor_curve(n, m, k)?;
    let mut out = Vec::new();
    let mut seen: Vec<Rational> = Vec::new();
    for mult in 1..=200i64 {
        for sgn in [1i64, -1] {
            let pt = ec_mul(&curve, sgn * mult, &family.generator)?;
            let (p, s) = match (family.phi)(&pt) {
                Ok(ps) => ps,
                Err(_) => continue,
            };
            let ws = model.witnesses_from_point(&p, &s)?;
            collect_new(
                ws,
                format!("{}P = {} with P = {}", sgn * mult, pt, family.generator),
                &mut seen,
                &mut out,
            );
            if out.len() >= count {
                out.truncate(count);
                return Ok(out);
            }
        }
    }
    Ok(out)
}

fn generate_through_transport(count: usize) -> Result<Vec<GeneratedFactorization>> {
    let case = models::square_content_cases(6, 5, 4)?;
    let model = case.residual;
    // anchor and base: the model's small points; the base maps to a point of
    // infinite order on the transport cubic
    let anchor = (rat_i64(0), rat_i64(2));
    let base = (rat_i64(3), rat_i64(13));
    let transport = QuarticTransport::new(&model.rhs, &anchor.0, &anchor.1)?;
    let start = transport.to_curve(&base.0, &base.1)?;
    let mut out = Vec::new();
    let mut seen: Vec<Rational> = Vec::new();
    for mult in 1..=200i64 {
        for sgn in [1i64, -1] {
            let pt = ec_mul(&transport.curve, sgn * mult, &start)?;
            let (p, s) = match transport.from_curve(&pt) {
                Ok(uv) => uv,
                Err(_) => continue,
            };
            let ws = model.witnesses_from_point(&p, &s)?;
            collect_new(
                ws,
                format!(
                    "{}T = {} with T = transport of ({}, {})",
                    sgn * mult,
                    pt,
                    rational::render(&base.0),
                    rational::render(&base.1)
                ),
                &mut seen,
                &mut out,
            );
            if out.len() >= count {
                out.truncate(count);
                return Ok(out);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn pt(x: i64, y: i64) -> CurvePoint {
        CurvePoint::affine(rat_i64(x), rat_i64(y))
    }

    #[test]
    fn construction_rejects_singular_curves() {
        assert!(matches!(
            WeierstrassCurve::from_i64([0, 0, 0, 0, 0]),
            Err(Error::SingularCurve)
        ));
        // all tabulated curves are nonsingular and carry their listed points
        for (triple, points) in [
            ((4, 3, 1), vec![pt(2, -1)]),
            ((4, 3, 2), vec![pt(1, -1)]),
            ((5, 3, 1), vec![pt(1, 2), pt(0, 0)]),
            ((5, 3, 2), vec![pt(1, 0)]),
            ((5, 4, 3), vec![pt(0, 0), pt(0, -1)]),
            ((6, 4, 2), vec![pt(2, 6), pt(2, -6), pt(-1, 0)]),
            ((6, 5, 4), vec![pt(0, 0), pt(-1, 0), pt(3, 2)]),
            ((8, 6, 4), vec![pt(2, 8), pt(2, -8), pt(-2, 0)]),
            (
                (10, 6, 2),
                vec![pt(6, 12), pt(2, 0), pt(-6, 0), pt(0, 6), pt(3, 0)],
            ),
        ] {
            let curve = tabulated_curve(triple.0, triple.1, triple.2).unwrap();
            for p in points {
                assert!(curve.contains(&p), "{p} must lie on the {triple:?} curve");
            }
        }
        assert!(tabulated_curve(9, 9, 9).is_none());
    }

    #[test]
    fn group_law_basics() {
        let curve = tabulated_curve(5, 3, 1).unwrap();
        let p = pt(1, 2);
        let o = CurvePoint::Infinity;
        assert_eq!(ec_add(&curve, &p, &o).unwrap(), p);
        assert_eq!(ec_add(&curve, &o, &p).unwrap(), p);
        assert_eq!(
            ec_add(&curve, &p, &curve.negate(&p)).unwrap(),
            CurvePoint::Infinity
        );
        assert!(ec_add(&curve, &pt(1, 3), &p).is_err());

        // commutativity and associativity on small multiples
        let p2 = ec_mul(&curve, 2, &p).unwrap();
        let p3 = ec_mul(&curve, 3, &p).unwrap();
        assert_eq!(
            ec_add(&curve, &p2, &p3).unwrap(),
            ec_add(&curve, &p3, &p2).unwrap()
        );
        let left = ec_add(&curve, &ec_add(&curve, &p, &p2).unwrap(), &p3).unwrap();
        let right = ec_add(&curve, &p, &ec_add(&curve, &p2, &p3).unwrap()).unwrap();
        assert_eq!(left, right);
        assert_eq!(ec_mul(&curve, 6, &p).unwrap(), left);
        assert_eq!(ec_mul(&curve, 0, &p).unwrap(), CurvePoint::Infinity);
        assert_eq!(
            ec_mul(&curve, -2, &p).unwrap(),
            curve.negate(&p2)
        );
    }

    #[test]
    fn torsion_orders_match_listings() {
        // y^2 + y = x^3: (0,0) has order 3
        let curve = tabulated_curve(5, 4, 3).unwrap();
        let p = pt(0, 0);
        assert_eq!(ec_mul(&curve, 2, &p).unwrap(), pt(0, -1));
        assert_eq!(ec_mul(&curve, 3, &p).unwrap(), CurvePoint::Infinity);
        assert!(!certify_infinite_order(&curve, &p).unwrap());

        // generators of the two rank-1 production curves are non-torsion
        let c531 = tabulated_curve(5, 3, 1).unwrap();
        assert!(certify_infinite_order(&c531, &pt(1, 2)).unwrap());
        assert!(!certify_infinite_order(&c531, &pt(0, 0)).unwrap());
        let c532 = tabulated_curve(5, 3, 2).unwrap();
        assert!(certify_infinite_order(&c532, &pt(1, 0)).unwrap());
        let c654 = tabulated_curve(6, 5, 4).unwrap();
        assert!(certify_infinite_order(&c654, &pt(0, 0)).unwrap());
        assert!(!certify_infinite_order(&c654, &pt(-1, 0)).unwrap());
        assert_eq!(ec_mul(&c654, 2, &pt(0, 0)).unwrap(), pt(3, 2));
    }

    #[test]
    fn torsion_closure_of_degree10_curve() {
        let curve = tabulated_curve(10, 6, 2).unwrap();
        let pts = vec![
            CurvePoint::Infinity,
            pt(6, 12),
            pt(6, -12),
            pt(2, 0),
            pt(-6, 0),
            pt(0, 6),
            pt(0, -6),
            pt(3, 0),
        ];
        for a in &pts {
            for b in &pts {
                let sum = ec_add(&curve, a, b).unwrap();
                assert!(
                    pts.contains(&sum),
                    "{a} + {b} = {sum} escaped the torsion list"
                );
            }
        }
    }

    #[test]
    fn phi_531_images() {
        // the generator maps to p = -1, giving q = 3 and a = -12
        let (p, s) = phi_531(&pt(1, 2)).unwrap();
        assert_eq!((p.clone(), s.clone()), (rat_i64(-1), rat_i64(2)));
        let model = models::quadratic_factor_curve(5, 3, 1).unwrap();
        let ws = model.witnesses_from_point(&p, &s).unwrap();
        let hit = ws.iter().find(|w| !w.is_degenerate()).unwrap();
        assert_eq!(hit.witness.spec.a, rat_i64(-12));
        assert_eq!(hit.witness.factor.render("x"), "x^2 - x + 3");

        let (p, s) = phi_531(&pt(1, -2)).unwrap();
        assert_eq!((p, s), (rat_i64(7), rat_i64(-110)));

        // the line 3X - Y - 4 = 0 meets the curve at (4, 8)
        assert!(matches!(
            phi_531(&pt(4, 8)),
            Err(Error::MapUndefined(_))
        ));
        assert!(phi_531(&CurvePoint::Infinity).is_err());
    }

    #[test]
    fn phi_532_images() {
        // chart undefined at the generator itself; its negative covers a = 1
        assert!(phi_532(&pt(1, 0)).is_err());
        let curve = tabulated_curve(5, 3, 2).unwrap();
        let minus_p = curve.negate(&pt(1, 0));
        assert_eq!(minus_p, pt(1, -1));
        let (p, s) = phi_532(&minus_p).unwrap();
        assert_eq!((p.clone(), s.clone()), (rat_i64(0), rat_i64(-1)));
        let model = models::quadratic_factor_curve(5, 3, 2).unwrap();
        let ws = model.witnesses_from_point(&p, &s).unwrap();
        assert!(ws.iter().any(|w| w.witness.spec.a == rat_i64(1)));

        // 2P = (-1,-1) maps to (-2,-9), reaching a = 6 and a = -363
        let two_p = ec_mul(&curve, 2, &pt(1, 0)).unwrap();
        assert_eq!(two_p, pt(-1, -1));
        let (p, s) = phi_532(&two_p).unwrap();
        assert_eq!((p.clone(), s.clone()), (rat_i64(-2), rat_i64(-9)));
        let a_vals: Vec<Rational> = model
            .witnesses_from_point(&p, &s)
            .unwrap()
            .into_iter()
            .map(|w| w.witness.spec.a)
            .collect();
        assert!(a_vals.contains(&rat_i64(6)));
        assert!(a_vals.contains(&rat_i64(-363)));
    }

    #[test]
    fn phi_images_satisfy_models() {
        let m531 = models::quadratic_factor_curve(5, 3, 1).unwrap();
        let c531 = tabulated_curve(5, 3, 1).unwrap();
        let m532 = models::quadratic_factor_curve(5, 3, 2).unwrap();
        let c532 = tabulated_curve(5, 3, 2).unwrap();
        for mult in 1..=10i64 {
            for sgn in [1i64, -1] {
                let pt1 = ec_mul(&c531, sgn * mult, &pt(1, 2)).unwrap();
                if let Ok((p, s)) = phi_531(&pt1) {
                    assert!(m531.contains(&p, &s), "phi image off H at {}P", sgn * mult);
                }
                let pt2 = ec_mul(&c532, sgn * mult, &pt(1, 0)).unwrap();
                if let Ok((p, s)) = phi_532(&pt2) {
                    assert!(m532.contains(&p, &s), "phi image off H at {}P", sgn * mult);
                }
            }
        }
    }

    #[test]
    fn transport_round_trips() {
        let case = models::square_content_cases(6, 5, 4).unwrap();
        let rhs = case.residual.rhs.clone();
        let tr = QuarticTransport::new(&rhs, &rat_i64(0), &rat_i64(2)).unwrap();
        assert_eq!(
            tr.curve,
            WeierstrassCurve::from_i64([0, -24, 0, -240, 2304]).unwrap()
        );
        for (u, v) in [
            (rat_i64(3), rat_i64(13)),
            (rat_i64(3), rat_i64(-13)),
            (rat_i64(1), rat_i64(1)),
            (rat_i64(1), rat_i64(-1)),
        ] {
            let img = tr.to_curve(&u, &v).unwrap();
            assert!(tr.curve.contains(&img));
            assert_eq!(tr.from_curve(&img).unwrap(), (u, v));
        }
        // anchor goes to infinity; off-model points rejected
        assert!(tr.to_curve(&rat_i64(0), &rat_i64(2)).is_err());
        assert!(tr.to_curve(&rat_i64(3), &rat_i64(14)).is_err());
        // the transported base point has infinite order
        let start = tr.to_curve(&rat_i64(3), &rat_i64(13)).unwrap();
        assert!(certify_infinite_order(&tr.curve, &start).unwrap());

        // the public stream collects on-model points
        let stream =
            quartic_point_transport(&case.residual, (&rat_i64(0), &rat_i64(2)), (&rat_i64(3), &rat_i64(13)), 6)
                .unwrap();
        assert_eq!(stream.len(), 6);
        for (u, v) in &stream {
            assert_eq!(v * v, case.residual.rhs.eval(u));
        }
    }

    #[test]
    fn generated_families_hit_tabulated_constants() {
        let out = generate_reducible((5, 3, 1), 4).unwrap();
        assert_eq!(out.len(), 4);
        let a_vals: Vec<Rational> = out.iter().map(|g| g.witness.spec.a.clone()).collect();
        assert!(a_vals.contains(&rat_i64(-12)));
        // distinct and nonzero
        for (i, a) in a_vals.iter().enumerate() {
            assert!(!a.is_zero());
            assert!(!a_vals[..i].contains(a));
        }
        for g in &out {
            assert_eq!(
                &g.witness.factor * &g.witness.cofactor,
                g.witness.spec.to_unipoly()
            );
        }

        let out = generate_reducible((5, 3, 2), 5).unwrap();
        let a_vals: Vec<Rational> = out.iter().map(|g| g.witness.spec.a.clone()).collect();
        for want in [rat_i64(1), rat_i64(6), rat_i64(-363)] {
            assert!(a_vals.contains(&want), "missing a = {want}");
        }

        let out = generate_reducible((6, 5, 4), 4).unwrap();
        let a_vals: Vec<Rational> = out.iter().map(|g| g.witness.spec.a.clone()).collect();
        assert!(a_vals.contains(&rat_i64(18)));
        assert!(a_vals.contains(&rat(-194481, 512)));
        let eighteen = out
            .iter()
            .find(|g| g.witness.spec.a == rat_i64(18))
            .unwrap();
        assert_eq!(eighteen.witness.factor.render("x"), "x^2 + 3*x + 3");
        assert_eq!(
            eighteen.witness.cofactor.render("x"),
            "x^4 - 2*x^3 + 4*x^2 - 6*x + 6"
        );

        assert!(generate_reducible((5, 2, 1), 1).is_err());
        assert!(generate_reducible((5, 3, 1), 0).is_err());
    }

    #[test]
    fn json_shape_for_generated_factorizations() {
        let out = generate_reducible((5, 3, 1), 1).unwrap();
        let v = out[0].json();
        assert_eq!(v["n"], 5);
        assert_eq!(v["m"], 3);
        assert_eq!(v["k"], 1);
        assert!(v["a"].is_string());
        assert!(v["factor_coeffs"].is_array());
        assert!(v["cofactor_coeffs"].is_array());
        assert!(v["source_point"].is_string());
    }

    #[test]
    fn curve_equation_display() {
        let c = tabulated_curve(6, 5, 4).unwrap();
        assert_eq!(c.equation_display(), "y^2 + x*y + y = x^3 - x^2 - 2*x");
        let c = tabulated_curve(10, 6, 2).unwrap();
        assert_eq!(c.equation_display(), "y^2 = x^3 + x^2 - 24*x + 36");
    }
}
