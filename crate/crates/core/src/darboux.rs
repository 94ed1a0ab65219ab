//! Darboux certificates from linear dependence of cofactors.
//!
//! With `K₀ = Ax² + Bx + C` for `x = 0` and `Kᵢ = Ax² − (pᵢ' + pᵢC)x` for
//! `pᵢx − 1 = 0`, a relation `Σ αᵢKᵢ = 0` exists iff `α₀ = 0`,
//! `Σ αᵢ = 0` and `Σ αᵢ·A/pᵢ = 0`.

use std::cmp::Ordering;

use num_traits::{One, Signed};

use crate::equation::AbelEquation;
use crate::error::{Error, Result};
use crate::finder::{lift_equation, verify_curve, InvariantCurve};
use crate::linalg::nullspace;
use crate::ring::{AbelRing, CurveRing};
use crate::scalar::{Field, QuadExt, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct DarbouxCertificate<R: AbelRing> {
    /// Exponent of the curve `x = 0`; always zero for a valid certificate.
    pub alpha0: QuadExt<R::Base>,
    /// Exponents of the curves `pᵢx − 1 = 0`, in curve order.
    pub alphas: Vec<QuadExt<R::Base>>,
    pub curves: Vec<InvariantCurve<R>>,
}

/// `h(t, x) = Π (pᵢx − 1)^{αᵢ}` with the zero exponents dropped.
#[derive(Clone, Debug, PartialEq)]
pub struct FirstIntegral {
    pub factors: Vec<(String, String)>,
    pub rendered: String,
}

/// Coordinates of `A/pᵢ` for every curve, as matrix columns.
fn quotient_columns<R: AbelRing>(
    eq: &AbelEquation<R>,
    curves: &[InvariantCurve<R>],
) -> Result<(Vec<R::Ext>, Vec<Vec<QuadExt<R::Base>>>)> {
    let a = eq.a.lift();
    let mut quotients = Vec::with_capacity(curves.len());
    for c in curves {
        let q = a
            .exact_div(&c.p())?
            .ok_or_else(|| Error::NotInvariant(format!("{} does not divide A", c.render_p())))?;
        quotients.push(q);
    }
    let n = quotients
        .iter()
        .filter_map(|q| q.degree().finite())
        .max()
        .unwrap_or(0);
    let cols = quotients.iter().map(|q| q.coefficient_vector(n)).collect();
    Ok((quotients, cols))
}

/// Scale so the first nonzero entry is 1; vectors with all entries rational
/// are further scaled to coprime integers with a positive first entry.
pub fn canonical_vector<F: Field>(v: &[QuadExt<F>]) -> Vec<QuadExt<F>> {
    let Some(first) = v.iter().find(|x| !x.is_zero()).cloned() else {
        return v.to_vec();
    };
    let mut out: Vec<QuadExt<F>> = v.iter().map(|x| x.clone() / first.clone()).collect();
    let rationals: Option<Vec<Rational>> = out.iter().map(|x| x.as_rational()).collect();
    if let Some(qs) = rationals {
        let lcm = qs.iter().fold(num_bigint::BigInt::one(), |acc, q| {
            num_integer::Integer::lcm(&acc, q.denom())
        });
        let scaled: Vec<Rational> = qs
            .iter()
            .map(|q| q.clone() * Rational::from_bigint(lcm.clone()))
            .collect();
        let g = scaled.iter().fold(num_bigint::BigInt::from(0), |acc, q| {
            num_integer::Integer::gcd(&acc, q.numer())
        });
        let g = Rational::from_bigint(g.abs());
        out = scaled
            .into_iter()
            .map(|q| QuadExt::base(F::from_rational(&(q / g.clone()))))
            .collect();
    }
    out
}

fn lex_cmp<F: Field>(a: &[F], b: &[F]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.canonical_cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

/// A certificate when the cofactors `Kᵢ` of the given curves are linearly
/// dependent, `None` otherwise.
pub fn cofactor_dependence<R: AbelRing>(
    eq: &AbelEquation<R>,
    curves: &[InvariantCurve<R>],
) -> Result<Option<DarbouxCertificate<R>>> {
    if curves.is_empty() {
        return Err(Error::Precondition("at least one curve is required".into()));
    }
    for (i, c) in curves.iter().enumerate() {
        let (ok, residual) = verify_curve(eq, c);
        if !ok {
            return Err(Error::NotInvariant(format!(
                "{} leaves residual {}",
                c.render(),
                residual.render()
            )));
        }
        if curves[..i].iter().any(|d| d.p() == c.p()) {
            return Err(Error::Precondition(format!(
                "curve {} is listed twice",
                c.render()
            )));
        }
    }
    let (_, cols) = quotient_columns(eq, curves)?;
    let r = curves.len();
    let mut rows: Vec<Vec<QuadExt<R::Base>>> = (0..cols[0].len())
        .map(|j| cols.iter().map(|c| c[j].clone()).collect())
        .collect();
    rows.push(vec![QuadExt::one(); r]);
    let basis = nullspace(&rows, r);
    let Some(alphas) = basis
        .iter()
        .map(|v| canonical_vector(v))
        .min_by(|a, b| lex_cmp(a, b))
    else {
        return Ok(None);
    };
    let cert = DarbouxCertificate {
        alpha0: QuadExt::zero(),
        alphas,
        curves: curves.to_vec(),
    };
    check_certificate(eq, &cert)?;
    Ok(Some(cert))
}

/// Verify `α₀ = 0`, `Σαᵢ = 0`, `Σαᵢ·A/pᵢ = 0`, and independently
/// `Σαᵢ·(pᵢ' + pᵢC) = 0`, which is the vanishing of `Σαᵢ Kᵢ` in `x`.
pub fn check_certificate<R: AbelRing>(
    eq: &AbelEquation<R>,
    cert: &DarbouxCertificate<R>,
) -> Result<()> {
    let fail = |m: &str| Err(Error::inconsistency(format!("Darboux certificate: {m}")));
    if cert.alphas.len() != cert.curves.len() {
        return fail("exponent count differs from curve count");
    }
    if !cert.alpha0.is_zero() {
        return fail("α₀ must vanish");
    }
    if cert.alphas.iter().all(|a| a.is_zero()) {
        return fail("all exponents vanish");
    }
    let sum = cert
        .alphas
        .iter()
        .fold(QuadExt::zero(), |acc, a| acc + a.clone());
    if !sum.is_zero() {
        return fail("exponents do not sum to zero");
    }
    let (quotients, _) = quotient_columns(eq, &cert.curves)?;
    let lifted = lift_equation(eq);
    let mut first = <R::Ext as CurveRing>::zero();
    let mut second = <R::Ext as CurveRing>::zero();
    for ((a, q), c) in cert.alphas.iter().zip(&quotients).zip(&cert.curves) {
        first = first.plus(&q.scale(a));
        let p = c.p();
        second = second.plus(&p.derivative().plus(&p.times(&lifted.c)).scale(a));
    }
    if !first.is_zero() {
        return fail("Σ αᵢ·A/pᵢ ≠ 0");
    }
    if !second.is_zero() {
        return fail("Σ αᵢ·Kᵢ ≠ 0");
    }
    Ok(())
}

/// Render `x^{α₀}·Π (pᵢx − 1)^{αᵢ}` after validating the exponents.
pub fn first_integral<R: AbelRing>(
    alpha0: &QuadExt<R::Base>,
    alphas: &[QuadExt<R::Base>],
    curves: &[InvariantCurve<R>],
) -> Result<FirstIntegral> {
    if !alpha0.is_zero() {
        return Err(Error::Precondition("the exponent of x must be zero".into()));
    }
    if alphas.len() != curves.len() {
        return Err(Error::Precondition(
            "one exponent per curve is required".into(),
        ));
    }
    if alphas.iter().all(|a| a.is_zero()) {
        return Err(Error::Precondition("exponents must not all vanish".into()));
    }
    let sum = alphas
        .iter()
        .fold(QuadExt::zero(), |acc, a| acc + a.clone());
    if !sum.is_zero() {
        return Err(Error::Precondition("exponents must sum to zero".into()));
    }
    let mut factors = Vec::new();
    let mut parts = Vec::new();
    for (a, c) in alphas.iter().zip(curves) {
        if a.is_zero() {
            continue;
        }
        let base = format!("({})*x - 1", c.render_p());
        let exp = a.expr();
        parts.push(if a.is_one() {
            format!("({base})")
        } else {
            format!("({base})^({exp})")
        });
        factors.push((base, a.encode()));
    }
    Ok(FirstIntegral {
        factors,
        rendered: parts.join(" * "),
    })
}

/// The exponent construction for `r ≥ 2(n + 1)` vectors in dimension `n`:
/// a relation `λ` among the first `n + 1` vectors and `μ` among the rest
/// combine to `α = ((Σμ)·λ, −(Σλ)·μ)`. When both sums vanish, `λ` alone is
/// already balanced and is returned padded with zeros.
pub fn lambda_mu_certificate<F: Field>(vectors: &[Vec<F>]) -> Result<Vec<F>> {
    let n = vectors.first().map(Vec::len).unwrap_or(0);
    if vectors.iter().any(|v| v.len() != n) {
        return Err(Error::Precondition("vectors of unequal dimension".into()));
    }
    let r = vectors.len();
    if r < 2 * (n + 1) {
        return Err(Error::Precondition(format!(
            "{r} vectors in dimension {n}; at least {} are needed",
            2 * (n + 1)
        )));
    }
    let relation = |vs: &[Vec<F>]| -> Vec<F> {
        let rows: Vec<Vec<F>> = (0..n)
            .map(|j| vs.iter().map(|v| v[j].clone()).collect())
            .collect();
        nullspace(&rows, vs.len())
            .into_iter()
            .next()
            .expect("more vectors than the dimension")
    };
    let lambda = relation(&vectors[..n + 1]);
    let mu = relation(&vectors[n + 1..]);
    let total = |v: &[F]| v.iter().fold(F::zero(), |acc, x| acc + x.clone());
    let (sl, sm) = (total(&lambda), total(&mu));
    let mut alpha = Vec::with_capacity(r);
    if sl.is_zero() && sm.is_zero() {
        alpha.extend(lambda);
        alpha.resize(r, F::zero());
    } else {
        alpha.extend(lambda.iter().map(|l| sm.clone() * l.clone()));
        alpha.extend(mu.iter().map(|m| -(sl.clone() * m.clone())));
    }
    Ok(alpha)
}
