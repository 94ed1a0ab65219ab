//! The full analysis pipeline and its JSON report.

use serde::{Deserialize, Serialize};

use crate::classifier::{
    audit, classify_equation, integrability_threshold, AuditOutcome, BoundCase,
};
use crate::darboux::{cofactor_dependence, first_integral};
use crate::equation::{AbelEquation, DynEquation};
use crate::error::{Error, Result};
use crate::finder::{find_invariant_curves, lift_equation, verify_curve, InvariantCurve};
use crate::numeric::{
    displacement_derivative, periodic_solution_check, residual_domain, residual_sample,
    NumericEquation, TrajectoryConfig,
};
use crate::parse::parse_expr;
use crate::poly::Poly;
use crate::ring::{AbelRing, CurveRing, RingTag};
use crate::scalar::{BaseField, Field, Gaussian, QuadExt, Rational};
use crate::structure::{
    degree_laws_check, pair_identity_check, parameterize_pair, proportional_groups, S_FORMULA,
};
use crate::trig::TrigPoly;

#[derive(Clone, Debug, PartialEq)]
pub struct AnalyzeOptions {
    pub numeric: bool,
    pub samples: usize,
    pub fd_step: f64,
    pub trajectory: TrajectoryConfig,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            numeric: true,
            samples: 1000,
            fd_step: 1e-4,
            trajectory: TrajectoryConfig::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EquationEcho {
    pub ring: String,
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
    #[serde(rename = "C")]
    pub c: String,
}

/// `K = a + b·√d` with each part in the report encoding.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScaleRecord {
    pub a: String,
    pub b: String,
    pub d: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveRecord {
    /// `p` in the expression grammar, or with a `sqrt(…)` prefactor.
    pub p: String,
    /// The normalized `p̃`, parseable.
    pub base: String,
    pub scale: ScaleRecord,
    pub degree: usize,
    /// Coordinates of `p` in the standard basis: `1, t, t², …` for
    /// polynomials, `1, cos t, sin t, cos 2t, …` for trig polynomials.
    pub coefficients: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundRecord {
    pub case: String,
    pub value: u128,
    pub meaning: String,
    pub strict: bool,
    pub darboux_threshold: Option<u128>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AuditRecord {
    pub status: String,
    pub count: usize,
    pub bound: Option<u128>,
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairRecord {
    pub i: usize,
    pub j: usize,
    pub r: String,
    pub identity: String,
    pub divrem_checked: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairDegreeRecord {
    pub i: usize,
    pub j: usize,
    pub deg_p1: usize,
    pub deg_p2: usize,
    pub law: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DegreeLawRecord {
    pub regime: String,
    pub deg_a: usize,
    pub deg_c: usize,
    pub pairs: Vec<PairDegreeRecord>,
    pub common_half_degree: Option<usize>,
    pub distinct_degree_pair_is_alone: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupRecord {
    pub base: String,
    pub scales: Vec<String>,
    pub ratio: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SignVariantRecord {
    pub plus_q_prime: bool,
    pub minus_q_prime: bool,
    pub negated: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParameterizationRecord {
    pub i: usize,
    pub j: usize,
    pub q: String,
    pub s1: String,
    pub s2: String,
    pub k: String,
    pub q_hat: String,
    pub s: String,
    pub s_formula: String,
    pub sign_variants: SignVariantRecord,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DarbouxRecord {
    pub found: bool,
    pub alphas: Vec<String>,
    pub integral: Option<String>,
    pub threshold: Option<u128>,
    pub threshold_meaning: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PeriodicityRecord {
    pub curve: usize,
    pub x0: f64,
    /// `x(±2π)`, or `x₀` plus the worst segment defect, per `method`.
    pub x_return: Option<f64>,
    pub method: Option<String>,
    pub abs_error: Option<f64>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DisplacementRecord {
    pub h: f64,
    pub estimate: Option<f64>,
    pub reference: f64,
    pub relative_error: Option<f64>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericRecord {
    pub samples: usize,
    pub domain: (f64, f64),
    pub residuals: Vec<Option<f64>>,
    pub max_residual: Option<f64>,
    pub periodicity: Vec<PeriodicityRecord>,
    pub displacement: Option<DisplacementRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub equation: EquationEcho,
    pub curves: Vec<CurveRecord>,
    pub bound: BoundRecord,
    pub audit: AuditRecord,
    pub pairs: Vec<PairRecord>,
    pub degree_laws: DegreeLawRecord,
    pub proportional_groups: Vec<GroupRecord>,
    pub parameterization: Vec<ParameterizationRecord>,
    pub darboux: DarbouxRecord,
    pub numeric: Option<NumericRecord>,
    pub notes: Vec<String>,
}

/// Rings that can be analyzed end to end; the periodic ring adds the
/// trajectory-based checks.
pub trait Analyzable: AbelRing {
    fn numeric_equation(_eq: &AbelEquation<Self>) -> Option<NumericEquation> {
        None
    }
}

impl Analyzable for Poly<Rational> {}
impl Analyzable for Poly<Gaussian> {}
impl Analyzable for TrigPoly<Rational> {
    fn numeric_equation(eq: &AbelEquation<Self>) -> Option<NumericEquation> {
        Some(NumericEquation::from_exact(eq))
    }
}

fn scale_record<F: Field>(k: &QuadExt<F>) -> ScaleRecord {
    ScaleRecord {
        a: k.a.encode(),
        b: k.b.encode(),
        d: k.radicand().map(Field::encode),
    }
}

fn decode_scale<F: BaseField>(s: &ScaleRecord) -> Result<QuadExt<F>> {
    let dec = |x: &str| F::decode(x).ok_or_else(|| Error::Document(format!("bad scalar '{x}'")));
    let a = dec(&s.a)?;
    let b = dec(&s.b)?;
    match &s.d {
        None if b.is_zero() => Ok(QuadExt::base(a)),
        None => Err(Error::Document("surd part without a radicand".into())),
        Some(d) => Ok(QuadExt::surd(a, b, dec(d)?)),
    }
}

pub fn curve_record<R: AbelRing>(c: &InvariantCurve<R>) -> CurveRecord {
    let p = c.p();
    let degree = p.degree().finite().unwrap_or(0);
    CurveRecord {
        p: c.render_p(),
        base: c.base.render(),
        scale: scale_record(&c.scale),
        degree,
        coefficients: p
            .coefficient_vector(degree)
            .iter()
            .map(Field::encode)
            .collect(),
    }
}

fn require_emittable<R: AbelRing>(eq: &AbelEquation<R>, c: &InvariantCurve<R>) -> Result<()> {
    let (ok, residual) = verify_curve(eq, c);
    if !ok {
        return Err(Error::inconsistency(format!(
            "curve {} fails invariance with residual {}",
            c.render(),
            residual.render()
        )));
    }
    Ok(())
}

fn numeric_section<R: Analyzable>(
    eq: &AbelEquation<R>,
    curves: &[InvariantCurve<R>],
    opts: &AnalyzeOptions,
) -> Result<NumericRecord> {
    let domain = residual_domain(R::TAG.is_trig());
    let lifted = lift_equation(eq);
    let residuals: Vec<Option<f64>> = curves
        .iter()
        .map(|c| residual_sample(&lifted, &c.p(), opts.samples, domain).ok())
        .collect();
    let max_residual = residuals.iter().flatten().copied().reduce(f64::max);
    let mut periodicity = Vec::new();
    let mut displacement = None;
    if let Some(ne) = R::numeric_equation(eq) {
        for (idx, c) in curves.iter().enumerate() {
            let p = c.p();
            let x = |t: f64| 1.0 / p.eval_c64(num_complex::Complex64::new(t, 0.0)).re;
            let rec = match periodic_solution_check(&ne, x, &opts.trajectory) {
                Ok(chk) => PeriodicityRecord {
                    curve: idx,
                    x0: chk.x0,
                    x_return: Some(chk.x_return),
                    method: Some(chk.method.label()),
                    abs_error: Some(chk.abs_error),
                    error: None,
                },
                Err(e) => PeriodicityRecord {
                    curve: idx,
                    x0: x(0.0),
                    x_return: None,
                    method: None,
                    abs_error: None,
                    error: Some(e.to_string()),
                },
            };
            periodicity.push(rec);
        }
        let reference = (2.0 * std::f64::consts::PI * ne.c.a0).exp_m1();
        displacement = Some(
            match displacement_derivative(&ne, opts.fd_step, &opts.trajectory) {
                Ok(p) => DisplacementRecord {
                    h: p.h,
                    estimate: Some(p.estimate),
                    reference: p.reference,
                    relative_error: Some(p.relative_error),
                    error: None,
                },
                Err(Error::Precondition(m)) => return Err(Error::Precondition(m)),
                Err(e) => DisplacementRecord {
                    h: opts.fd_step,
                    estimate: None,
                    reference,
                    relative_error: None,
                    error: Some(e.to_string()),
                },
            },
        );
    }
    Ok(NumericRecord {
        samples: opts.samples,
        domain,
        residuals,
        max_residual,
        periodicity,
        displacement,
    })
}

/// Find the curves and run every structural, Darboux, bound and numeric
/// check on them. Any failed exact check aborts with an inconsistency.
pub fn analyze<R: Analyzable>(
    eq: &AbelEquation<R>,
    opts: &AnalyzeOptions,
) -> Result<AnalysisReport> {
    eq.validate()?;
    let curves = find_invariant_curves(eq)?;
    for c in &curves {
        require_emittable(eq, c)?;
    }
    let mut notes = Vec::new();
    let bound = classify_equation(eq)?;

    let mut pairs = Vec::new();
    let mut parameterization = Vec::new();
    for i in 0..curves.len() {
        for j in i + 1..curves.len() {
            let pair = pair_identity_check(eq, &curves[i], &curves[j])?;
            pairs.push(PairRecord {
                i,
                j,
                r: pair.r.render(),
                identity: "A = C*p1*p2 + r".into(),
                divrem_checked: pair.divrem_checked,
            });
            let fam = parameterize_pair(eq, &curves[i], &curves[j])?;
            parameterization.push(ParameterizationRecord {
                i,
                j,
                q: fam.q.render(),
                s1: fam.s1.render(),
                s2: fam.s2.render(),
                k: fam.k.encode(),
                q_hat: fam.q_hat.render(),
                s: fam.s.render(),
                s_formula: S_FORMULA.into(),
                sign_variants: SignVariantRecord {
                    plus_q_prime: fam.variants.plus_q_prime,
                    minus_q_prime: fam.variants.minus_q_prime,
                    negated: fam.variants.negated,
                },
            });
        }
    }
    let laws = degree_laws_check(eq, &curves)?;
    let groups = proportional_groups(eq, &curves)?;

    let threshold = integrability_threshold(&bound).ok();
    let mut darboux = DarbouxRecord {
        found: false,
        alphas: Vec::new(),
        integral: None,
        threshold: threshold.map(|t| t.0),
        threshold_meaning: threshold.map(|t| {
            serde_json::to_value(t.1)
                .ok()
                .and_then(|v| v.as_str().map(String::from))
                .unwrap_or_default()
        }),
    };
    if !curves.is_empty() {
        if let Some(cert) = cofactor_dependence(eq, &curves)? {
            let fi = first_integral(&cert.alpha0, &cert.alphas, &cert.curves)?;
            darboux.found = true;
            darboux.alphas = cert.alphas.iter().map(Field::encode).collect();
            darboux.integral = Some(fi.rendered);
        }
    }
    if bound.case == BoundCase::B21 && !darboux.found {
        if let Some(t) = bound.darboux_threshold {
            if curves.len() as u128 >= t {
                return Err(Error::inconsistency(format!(
                    "{} curves reach the integrability threshold {t} without a Darboux certificate",
                    curves.len()
                )));
            }
        }
    }

    let numeric = if opts.numeric {
        Some(numeric_section(eq, &curves, opts)?)
    } else {
        None
    };
    let d0 = numeric
        .as_ref()
        .and_then(|n| n.displacement.as_ref())
        .and_then(|d| d.estimate);
    let outcome = audit(eq, &curves, &bound, d0)?;
    let audit_rec = match &outcome {
        AuditOutcome::Pass { count, bound, .. } => AuditRecord {
            status: "pass".into(),
            count: *count,
            bound: Some(*bound),
            reason: None,
        },
        AuditOutcome::CenterPossible { count, reason } => {
            notes.push(format!("bound not audited: {reason}"));
            AuditRecord {
                status: "not auditable: center-possible".into(),
                count: *count,
                bound: None,
                reason: Some(reason.clone()),
            }
        }
    };

    if R::TAG.is_trig() && !eq.a.nonvanishing()? {
        notes.push(
            "A has real zeros: candidate divisors come from the complete factorization of A in the \
             Laurent model, so no nonvanishing divisor is missed"
                .into(),
        );
    }
    if curves.iter().any(InvariantCurve::is_surd) {
        notes.push("some curves have constants in a quadratic extension".into());
    }

    Ok(AnalysisReport {
        equation: echo(eq),
        curves: curves.iter().map(curve_record).collect(),
        bound: BoundRecord {
            case: bound.case.label().into(),
            value: bound.value,
            meaning: serde_json::to_value(bound.meaning)?
                .as_str()
                .unwrap_or_default()
                .into(),
            strict: bound.strict,
            darboux_threshold: bound.darboux_threshold,
        },
        audit: audit_rec,
        pairs,
        degree_laws: DegreeLawRecord {
            regime: laws.regime.label().into(),
            deg_a: laws.deg_a,
            deg_c: laws.deg_c,
            pairs: laws
                .pairs
                .iter()
                .map(|p| PairDegreeRecord {
                    i: p.i,
                    j: p.j,
                    deg_p1: p.deg_p1,
                    deg_p2: p.deg_p2,
                    law: p.law.into(),
                })
                .collect(),
            common_half_degree: laws.common_half_degree,
            distinct_degree_pair_is_alone: laws.distinct_degree_pair_is_alone,
        },
        proportional_groups: groups
            .iter()
            .filter(|g| g.scales.len() > 1)
            .map(|g| GroupRecord {
                base: g.base.render(),
                scales: g.scales.iter().map(Field::encode).collect(),
                ratio: g.ratio.as_ref().map(Field::encode),
            })
            .collect(),
        parameterization,
        darboux,
        numeric,
        notes,
    })
}

pub fn analyze_dyn(eq: &DynEquation, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    match eq {
        DynEquation::PolyRational(e) => analyze(e, opts),
        DynEquation::PolyGaussian(e) => analyze(e, opts),
        DynEquation::Trig(e) => analyze(e, opts),
    }
}

/// Result of checking one user-supplied curve `p(t)x − 1 = 0`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyRecord {
    pub equation: EquationEcho,
    pub p: String,
    pub invariant: bool,
    /// `A − (B − (p' + pC))·p`, zero exactly for invariant curves.
    pub residual: String,
    /// `[K₂, K₁, K₀]` of the cofactor, for invariant curves.
    pub cofactor: Option<[String; 3]>,
    pub samples: usize,
    pub max_residual_sample: Option<f64>,
    pub periodicity: Option<PeriodicityRecord>,
}

fn echo<R: AbelRing>(eq: &AbelEquation<R>) -> EquationEcho {
    EquationEcho {
        ring: R::TAG.name().into(),
        a: eq.a.render(),
        b: eq.b.render(),
        c: eq.c.render(),
    }
}

fn verify_in<R: Analyzable>(
    eq: &AbelEquation<R>,
    curve: &str,
    opts: &AnalyzeOptions,
) -> Result<VerifyRecord> {
    eq.validate()?;
    let base: R = parse_expr(curve)?;
    let c = InvariantCurve::new(base, QuadExt::one());
    let (invariant, residual) = verify_curve(eq, &c);
    let cofactor = if invariant {
        let k = crate::finder::cofactor_of(eq, &c)?;
        Some([k.k2.render(), k.k1.render(), k.k0.render()])
    } else {
        None
    };
    let (mut max_residual_sample, mut periodicity) = (None, None);
    if opts.numeric {
        let domain = residual_domain(R::TAG.is_trig());
        max_residual_sample =
            residual_sample(&lift_equation(eq), &c.p(), opts.samples, domain).ok();
        if invariant {
            if let Some(ne) = R::numeric_equation(eq) {
                let p = c.p();
                let x = |t: f64| 1.0 / p.eval_c64(num_complex::Complex64::new(t, 0.0)).re;
                periodicity = Some(match periodic_solution_check(&ne, x, &opts.trajectory) {
                    Ok(chk) => PeriodicityRecord {
                        curve: 0,
                        x0: chk.x0,
                        x_return: Some(chk.x_return),
                        method: Some(chk.method.label()),
                        abs_error: Some(chk.abs_error),
                        error: None,
                    },
                    Err(e) => PeriodicityRecord {
                        curve: 0,
                        x0: x(0.0),
                        x_return: None,
                        method: None,
                        abs_error: None,
                        error: Some(e.to_string()),
                    },
                });
            }
        }
    }
    Ok(VerifyRecord {
        equation: echo(eq),
        p: c.render_p(),
        invariant,
        residual: residual.render(),
        cofactor,
        samples: opts.samples,
        max_residual_sample,
        periodicity,
    })
}

/// Exact and numeric check of the curve `p(t)x − 1 = 0`, with `p` given in
/// the expression grammar of the equation's ring.
pub fn verify_dyn(eq: &DynEquation, curve: &str, opts: &AnalyzeOptions) -> Result<VerifyRecord> {
    match eq {
        DynEquation::PolyRational(e) => verify_in(e, curve, opts),
        DynEquation::PolyGaussian(e) => verify_in(e, curve, opts),
        DynEquation::Trig(e) => verify_in(e, curve, opts),
    }
}

/// The float model of a periodic equation; polynomial coefficients have no
/// return map.
pub fn numeric_model(eq: &DynEquation) -> Result<NumericEquation> {
    match eq {
        DynEquation::Trig(e) => {
            e.validate()?;
            Ok(NumericEquation::from_exact(e))
        }
        other => Err(Error::OutOfScope(format!(
            "the return map needs 2π-periodic coefficients, ring is {}",
            other.tag().name()
        ))),
    }
}

fn revalidate_in<R: AbelRing>(report: &AnalysisReport) -> Result<()> {
    let e = &report.equation;
    let eq: AbelEquation<R> = AbelEquation::from_strings(&e.a, &e.b, &e.c)?;
    for rec in &report.curves {
        let base: R = parse_expr(&rec.base)?;
        let curve = InvariantCurve::new(base, decode_scale(&rec.scale)?);
        require_emittable(&eq, &curve)?;
        let coeffs: Vec<String> = curve
            .p()
            .coefficient_vector(rec.degree)
            .iter()
            .map(Field::encode)
            .collect();
        if coeffs != rec.coefficients {
            return Err(Error::inconsistency(format!(
                "coefficients of {} do not match",
                rec.p
            )));
        }
    }
    Ok(())
}

impl AnalysisReport {
    pub fn ring(&self) -> Result<RingTag> {
        RingTag::parse(&self.equation.ring)
            .ok_or_else(|| Error::Document(format!("unknown ring '{}'", self.equation.ring)))
    }

    pub fn to_json_string(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let r: AnalysisReport = serde_json::from_str(text)?;
        Ok(r)
    }

    /// Re-parse the equation and every listed curve, and re-run the exact
    /// invariance check on each.
    pub fn revalidate(&self) -> Result<()> {
        match self.ring()? {
            RingTag::PolyRational => revalidate_in::<Poly<Rational>>(self),
            RingTag::PolyGaussian => revalidate_in::<Poly<Gaussian>>(self),
            RingTag::Trig => revalidate_in::<TrigPoly<Rational>>(self),
        }
    }

    /// Human-readable projection of the report.
    pub fn to_text(&self) -> String {
        let e = &self.equation;
        let mut out = format!("ring: {}\nA = {}\nB = {}\nC = {}\n", e.ring, e.a, e.b, e.c);
        out += &format!("invariant curves: {}\n", self.curves.len());
        for (i, c) in self.curves.iter().enumerate() {
            out += &format!("  [{i}] ({})*x - 1 = 0\n", c.p);
        }
        let b = &self.bound;
        out += &format!(
            "bound: case {} value {}{} ({})\n",
            b.case,
            if b.strict { "< " } else { "" },
            b.value,
            b.meaning
        );
        out += &format!("audit: {}\n", self.audit.status);
        for p in &self.pairs {
            out += &format!("pair ({}, {}): r = {}\n", p.i, p.j, p.r);
        }
        for g in &self.proportional_groups {
            out += &format!(
                "proportional: {} with K = {}\n",
                g.base,
                g.ratio.as_deref().unwrap_or("-")
            );
        }
        if self.darboux.found {
            out += &format!(
                "Darboux first integral: {}\n",
                self.darboux.integral.as_deref().unwrap_or("")
            );
        } else {
            out += "Darboux first integral: none\n";
        }
        if let Some(n) = &self.numeric {
            if let Some(m) = n.max_residual {
                out += &format!("max residual: {m:e}\n");
            }
            if let Some(d) = &n.displacement {
                if let Some(est) = d.estimate {
                    out += &format!("d'(0) ≈ {est:.8} (reference {:.8})\n", d.reference);
                }
            }
        }
        for n in &self.notes {
            out += &format!("note: {n}\n");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_curve_polynomial_report() {
        let eq =
            DynEquation::from_parts(RingTag::PolyRational, "t^5+3*t^3+2*t", "-(2*t^3+5*t)", "t")
                .unwrap();
        let r = analyze_dyn(&eq, &AnalyzeOptions::default()).unwrap();
        assert_eq!(r.curves.len(), 2);
        assert_eq!((r.bound.case.as_str(), r.bound.value), ("b21", 11));
        assert!(!r.darboux.found);
        assert_eq!(r.audit.status, "pass");
        assert_eq!(r.pairs.len(), 1);
        assert!(r.numeric.as_ref().unwrap().max_residual.unwrap() < 1e-8);
        let text = r.to_json_string().unwrap();
        let back = AnalysisReport::from_json_str(&text).unwrap();
        assert_eq!(back, r);
        back.revalidate().unwrap();
    }

    #[test]
    fn tampered_report_fails_revalidation() {
        let eq =
            DynEquation::from_parts(RingTag::PolyRational, "t^3+t", "-(t^2+3*t+1)", "1").unwrap();
        let mut r = analyze_dyn(&eq, &AnalyzeOptions::default()).unwrap();
        r.revalidate().unwrap();
        r.curves[0].base = "t^2+2".into();
        assert!(matches!(r.revalidate(), Err(Error::Inconsistency(_))));
    }

    #[test]
    fn periodic_report() {
        let eq = DynEquation::from_parts(
            RingTag::Trig,
            "25/4*sin(t)+5/2*sin(2t)+1/4*sin(3t)",
            "-(sin(2t)+4*sin(t))",
            "sin(t)",
        )
        .unwrap();
        let r = analyze_dyn(&eq, &AnalyzeOptions::default()).unwrap();
        assert_eq!((r.bound.case.as_str(), r.bound.value), ("b22", 12));
        assert_eq!(r.audit.status, "not auditable: center-possible");
        let n = r.numeric.as_ref().unwrap();
        assert!(n.periodicity.iter().all(|p| p.abs_error.unwrap() < 1e-7));
        assert!(n.displacement.as_ref().unwrap().estimate.unwrap().abs() < 1e-4);
        r.revalidate().unwrap();
    }
}
