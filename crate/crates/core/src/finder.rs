//! Invariant curves `p(t)·x − 1 = 0`.
//!
//! `x = 1/p` solves the equation iff `A = −p·(p' + B + C·p)`, so `p` divides
//! `A`. Writing `p = K·p̃` with `p̃` a normalized divisor and `m̃ = A/p̃`, the
//! condition becomes the ring identity
//!
//! ```text
//! m̃ + K·B + K²·(p̃' + p̃·C) = 0,
//! ```
//!
//! a quadratic in `K` for every coefficient. The common roots of all these
//! quadratics are the admissible constants.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::equation::AbelEquation;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::{AbelRing, CurveRing};
use crate::scalar::{roots_upto_quadratic, Field, QuadExt};

/// The curve `K·p̃(t)·x − 1 = 0` with `p̃` normalized.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantCurve<R: AbelRing> {
    pub base: R,
    pub scale: QuadExt<R::Base>,
}

impl<R: AbelRing> InvariantCurve<R> {
    pub fn new(base: R, scale: QuadExt<R::Base>) -> Self {
        InvariantCurve { base, scale }
    }

    /// `p = K·p̃` in the (possibly extended) ring.
    pub fn p(&self) -> R::Ext {
        self.base.lift().scale(&self.scale)
    }

    /// `p` in the input ring, when `K` lies in the base field.
    pub fn p_base(&self) -> Option<R> {
        self.scale.as_base().map(|k| self.base.scale(k))
    }

    pub fn is_surd(&self) -> bool {
        !self.scale.is_base()
    }

    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.base
            .cmp_canonical(&other.base)
            .then_with(|| self.scale.canonical_cmp(&other.scale))
    }

    /// `p` in the expression grammar; surd constants are printed as a
    /// `sqrt(…)` prefactor.
    pub fn render_p(&self) -> String {
        match self.p_base() {
            Some(p) => p.render(),
            None => format!("{}*({})", self.scale, self.base.render()),
        }
    }

    pub fn render(&self) -> String {
        format!("({})·x − 1 = 0", self.render_p())
    }
}

/// `K(t, x) = K₂x² + K₁x + K₀`.
#[derive(Clone, Debug, PartialEq)]
pub struct Cofactor<E> {
    pub k2: E,
    pub k1: E,
    pub k0: E,
}

/// The equation with coefficients lifted to the extension ring.
pub fn lift_equation<R: AbelRing>(eq: &AbelEquation<R>) -> AbelEquation<R::Ext> {
    AbelEquation::unchecked(eq.a.lift(), eq.b.lift(), eq.c.lift())
}

/// `c²A − (cB − (p' + pC))·p`, which vanishes exactly when `p·x + c = 0` is
/// invariant (for `c ≠ 0`).
pub fn invariance_residual<E: CurveRing>(eq: &AbelEquation<E>, p: &E, c: &E::Scalar) -> E {
    let w = p.derivative().plus(&p.times(&eq.c));
    let lhs = eq.a.scale(&(c.clone() * c.clone()));
    let rhs = eq.b.scale(c).minus(&w).times(p);
    lhs.minus(&rhs)
}

/// Whether `p·x + c = 0` is an invariant curve, with the symbolic residual.
/// A zero `c` never gives an invariant curve of this form.
pub fn verify_invariance<E: CurveRing>(eq: &AbelEquation<E>, p: &E, c: &E::Scalar) -> (bool, E) {
    let r = invariance_residual(eq, p, c);
    let ok = !c.is_zero() && !p.is_zero() && r.is_zero();
    (ok, r)
}

pub fn verify_curve<R: AbelRing>(
    eq: &AbelEquation<R>,
    curve: &InvariantCurve<R>,
) -> (bool, R::Ext) {
    let minus_one = -<R::Ext as CurveRing>::Scalar::one();
    verify_invariance(&lift_equation(eq), &curve.p(), &minus_one)
}

/// `(A, −(p' + pC), 0)` after checking invariance.
pub fn cofactor_of<R: AbelRing>(
    eq: &AbelEquation<R>,
    curve: &InvariantCurve<R>,
) -> Result<Cofactor<R::Ext>> {
    let (ok, residual) = verify_curve(eq, curve);
    if !ok {
        return Err(Error::NotInvariant(format!(
            "{} leaves residual {}",
            curve.render(),
            residual.render()
        )));
    }
    let lifted = lift_equation(eq);
    let p = curve.p();
    Ok(Cofactor {
        k2: lifted.a,
        k1: p.derivative().plus(&p.times(&lifted.c)).negated(),
        k0: <R::Ext as CurveRing>::zero(),
    })
}

/// All admissible constants `K` for the normalized divisor `p̃` of `A`.
pub fn solve_constant<R: AbelRing>(
    eq: &AbelEquation<R>,
    p_tilde: &R,
) -> Result<Vec<QuadExt<R::Base>>> {
    let m = match eq.a.exact_div(p_tilde)? {
        Some(m) => m,
        None => return Ok(Vec::new()),
    };
    let w = p_tilde.derivative().plus(&p_tilde.times(&eq.c));
    let n = [&m, &eq.b, &w]
        .iter()
        .filter_map(|x| x.degree().finite())
        .max()
        .unwrap_or(0);
    let (mv, bv, wv) = (
        m.coefficient_vector(n),
        eq.b.coefficient_vector(n),
        w.coefficient_vector(n),
    );
    let mut g: Option<Poly<R::Base>> = None;
    for j in 0..mv.len() {
        let q = Poly::new(vec![mv[j].clone(), bv[j].clone(), wv[j].clone()]);
        if q.is_zero() {
            continue;
        }
        g = Some(match g {
            None => q.monic().1,
            Some(g) => g.gcd(&q)?,
        });
        if g.as_ref().is_some_and(|g| g.is_constant()) {
            return Ok(Vec::new());
        }
    }
    let g =
        g.ok_or_else(|| Error::inconsistency("all constant equations vanish although A ≢ 0"))?;
    let roots = roots_upto_quadratic(g.coeffs(), R::real_constants_only());
    let mut out: Vec<_> = roots.into_iter().filter(|k| !k.is_zero()).collect();
    out.sort_by(|a, b| a.canonical_cmp(b));
    Ok(out)
}

/// All invariant curves `p·x − 1 = 0`, canonically ordered.
pub fn find_invariant_curves<R: AbelRing>(eq: &AbelEquation<R>) -> Result<Vec<InvariantCurve<R>>> {
    eq.validate()?;
    let candidates = eq.a.nonvanishing_divisors()?;
    let found: Vec<Result<Vec<InvariantCurve<R>>>> = candidates
        .par_iter()
        .map(|pt| {
            let ks = solve_constant(eq, pt)?;
            let mut out = Vec::with_capacity(ks.len());
            for k in ks {
                let curve = InvariantCurve::new(pt.clone(), k);
                let (ok, residual) = verify_curve(eq, &curve);
                if !ok {
                    return Err(Error::inconsistency(format!(
                        "solved constant fails verification for {}: residual {}",
                        curve.render(),
                        residual.render()
                    )));
                }
                out.push(curve);
            }
            Ok(out)
        })
        .collect();
    let mut curves = Vec::new();
    for r in found {
        curves.extend(r?);
    }
    curves.sort_by(|a, b| a.canonical_cmp(b));
    let mut radicands: Vec<&R::Base> = curves.iter().filter_map(|c| c.scale.radicand()).collect();
    radicands.dedup();
    if radicands.len() > 1 {
        return Err(Error::inconsistency(
            "curves with constants in two different quadratic extensions",
        ));
    }
    Ok(curves)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_expr;
    use crate::scalar::{Gaussian, Rational};
    use crate::trig::TrigPoly;

    fn eq_rat(a: &str, b: &str, c: &str) -> AbelEquation<Poly<Rational>> {
        AbelEquation::from_strings(a, b, c).unwrap()
    }

    fn pr(s: &str) -> Poly<Rational> {
        parse_expr(s).unwrap()
    }

    fn k(n: i64) -> QuadExt<Rational> {
        QuadExt::base(Rational::from_i64(n))
    }

    #[test]
    fn single_curve_instance() {
        let e = eq_rat("t^3+t", "-(t^2+3*t+1)", "1");
        assert_eq!(solve_constant(&e, &pr("t^2+1")).unwrap(), vec![k(1)]);
        let curves = find_invariant_curves(&e).unwrap();
        assert_eq!(curves, vec![InvariantCurve::new(pr("t^2+1"), k(1))]);
        let cof = cofactor_of(&e, &curves[0]).unwrap();
        assert_eq!(cof.k2, pr("t^3+t").lift());
        assert_eq!(cof.k1, pr("-(t^2+2*t+1)").lift());
        assert!(cof.k0.is_zero());
    }

    #[test]
    fn two_curve_instance() {
        let e = eq_rat("t^5+3*t^3+2*t", "-(2*t^3+5*t)", "t");
        let curves = find_invariant_curves(&e).unwrap();
        assert_eq!(
            curves,
            vec![
                InvariantCurve::new(pr("t^2+1"), k(1)),
                InvariantCurve::new(pr("t^2+2"), k(1))
            ]
        );
        let cof = cofactor_of(&e, &curves[0]).unwrap();
        assert_eq!(cof.k1, pr("-(t^3+3*t)").lift());
    }

    #[test]
    fn proportional_instance() {
        let e = eq_rat("2*(t^2+1)*(t+1)^2", "-3*(t+1)^2", "1");
        assert_eq!(solve_constant(&e, &pr("t^2+1")).unwrap(), vec![k(1), k(2)]);
        let curves = find_invariant_curves(&e).unwrap();
        assert_eq!(curves.len(), 2);
    }

    #[test]
    fn invariance_checks() {
        let e = eq_rat("t^3+t", "-(t^2+3*t+1)", "1");
        let m1 = -Rational::one();
        assert!(verify_invariance(&e, &pr("t^2+1"), &m1).0);
        let (ok, r) = verify_invariance(&e, &pr("t^2+2"), &m1);
        assert!(!ok && !r.is_zero());
        assert!(!verify_invariance(&e, &pr("t^2+1"), &Rational::zero()).0);
        // c = −2 describes the same curve as p/2
        assert!(verify_invariance(&e, &pr("2*t^2+2"), &Rational::from_i64(-2)).0);
        let bad = InvariantCurve::new(pr("t^2+2"), k(1));
        assert!(matches!(cofactor_of(&e, &bad), Err(Error::NotInvariant(_))));
    }

    #[test]
    fn surd_constants() {
        // A = π·p·w, B = −σ·w with σ² − 4π = 8 gives K = (σ ± √8)/2 ... roots of K² − σK + π
        let p = pr("t^2+1");
        let c = pr("1");
        let w = &p.derivative() + &(&p * &c);
        let a = (&p * &w).scale(&Rational::from_i64(-1));
        let b = w.scale(&Rational::from_i64(-2));
        // K² − 2K − 1 = 0 → K = 1 ± √2
        let e = AbelEquation::new(a, b, c).unwrap();
        let curves = find_invariant_curves(&e).unwrap();
        assert_eq!(curves.len(), 2);
        assert!(curves.iter().all(|c| c.is_surd()));
        assert!(curves.iter().all(|c| verify_curve(&e, c).0));
    }

    #[test]
    fn gaussian_and_trig_instances() {
        let e: AbelEquation<Poly<Gaussian>> =
            AbelEquation::from_strings("t^3+t", "-(t^2+3*t+1)", "1").unwrap();
        let curves = find_invariant_curves(&e).unwrap();
        assert!(curves
            .iter()
            .any(|c| c.base == parse_expr::<Poly<Gaussian>>("t^2+1").unwrap()));
        let e: AbelEquation<TrigPoly<Rational>> = AbelEquation::from_strings(
            "25/4*sin(t)+5/2*sin(2t)+1/4*sin(3t)",
            "-(sin(2t)+4*sin(t))",
            "sin(t)",
        )
        .unwrap();
        let curves = find_invariant_curves(&e).unwrap();
        let ps: Vec<String> = curves.iter().map(|c| c.render_p()).collect();
        assert_eq!(ps, vec!["cos(t) + 2", "cos(t) + 3"]);
    }
}
