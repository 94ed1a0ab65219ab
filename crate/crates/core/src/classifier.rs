//! Case analysis of the bound on invariant curves and the audit of found
//! curves against it.

use serde::Serialize;

use crate::equation::AbelEquation;
use crate::error::{Error, Result};
use crate::finder::InvariantCurve;
use crate::ring::{AbelRing, RingTag};
use crate::scalar::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BoundCase {
    #[serde(rename = "a")]
    A,
    #[serde(rename = "b1")]
    B1,
    #[serde(rename = "b21")]
    B21,
    #[serde(rename = "b22")]
    B22,
    #[serde(rename = "c")]
    C,
}

impl BoundCase {
    pub fn label(self) -> &'static str {
        match self {
            BoundCase::A => "a",
            BoundCase::B1 => "b1",
            BoundCase::B21 => "b21",
            BoundCase::B22 => "b22",
            BoundCase::C => "c",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BoundMeaning {
    #[serde(rename = "invariant-curves")]
    InvariantCurves,
    #[serde(rename = "rational-limit-cycles")]
    RationalLimitCycles,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ThresholdMeaning {
    /// Reaching the threshold forces a Darboux first integral.
    #[serde(rename = "integrable-if-reached")]
    IntegrableIfReached,
    /// Bound on the number of rational limit cycles.
    #[serde(rename = "limit-cycle-bound")]
    LimitCycleBound,
    /// Strict bound on invariant curves, since a center is impossible.
    #[serde(rename = "strict-curve-bound")]
    StrictCurveBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub case: BoundCase,
    pub value: u128,
    pub meaning: BoundMeaning,
    /// The count must stay strictly below `value`.
    pub strict: bool,
    pub darboux_threshold: Option<u128>,
    pub deg_a: usize,
    pub deg_b: usize,
    pub deg_c: usize,
    pub ring: RingTag,
    pub c_constant: bool,
}

/// `n choose k` in `u128`, exact for every degree the engine handles.
pub fn binomial(n: u64, k: u64) -> u128 {
    let k = k.min(n.saturating_sub(k));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub fn classify_bounds(
    deg_a: usize,
    deg_b: usize,
    deg_c: usize,
    ring: RingTag,
    c_constant: bool,
) -> Result<BoundReport> {
    if deg_a == 0 {
        return Err(Error::OutOfScope("deg A must be positive".into()));
    }
    if c_constant != (deg_c == 0) {
        return Err(Error::Precondition(format!(
            "inconsistent flags: C constant = {c_constant} but deg C = {deg_c}"
        )));
    }
    let (a, b, c) = (deg_a as i64, deg_b as i64, deg_c as i64);
    let mut report = BoundReport {
        case: BoundCase::A,
        value: 1,
        meaning: BoundMeaning::InvariantCurves,
        strict: false,
        darboux_threshold: None,
        deg_a,
        deg_b,
        deg_c,
        ring,
        c_constant,
    };
    if a - c <= 1 {
        return Ok(report);
    }
    if !ring.is_trig() || !c_constant {
        if (a - c) % 2 != 0 || a + c < 2 * b {
            report.case = BoundCase::B1;
            report.value = 2;
        } else if !ring.is_trig() {
            report.case = BoundCase::B21;
            report.value = binomial(deg_a as u64, deg_a as u64 / 2) + 1;
            report.darboux_threshold = Some((deg_a + deg_c + 4) as u128);
        } else {
            report.case = BoundCase::B22;
            report.value = (2 * deg_a + 2 * deg_c + 4) as u128;
            report.meaning = BoundMeaning::RationalLimitCycles;
            report.darboux_threshold = Some(report.value);
        }
    } else {
        report.case = BoundCase::C;
        report.value = 4 * deg_a as u128;
        report.strict = true;
        report.darboux_threshold = Some(report.value);
    }
    Ok(report)
}

pub fn classify_equation<R: AbelRing>(eq: &AbelEquation<R>) -> Result<BoundReport> {
    eq.validate()?;
    let d = |x: &R| x.degree().finite().unwrap_or(0);
    classify_bounds(d(&eq.a), d(&eq.b), d(&eq.c), R::TAG, eq.c.is_constant())
}

/// The Darboux threshold of a case and what reaching it means.
pub fn integrability_threshold(report: &BoundReport) -> Result<(u128, ThresholdMeaning)> {
    let meaning = match report.case {
        BoundCase::B21 => ThresholdMeaning::IntegrableIfReached,
        BoundCase::B22 => ThresholdMeaning::LimitCycleBound,
        BoundCase::C => ThresholdMeaning::StrictCurveBound,
        BoundCase::A | BoundCase::B1 => {
            return Err(Error::ThresholdNotApplicable(report.case.label().into()));
        }
    };
    Ok((
        report
            .darboux_threshold
            .expect("threshold set for b2x and c"),
        meaning,
    ))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status")]
pub enum AuditOutcome {
    #[serde(rename = "pass")]
    Pass {
        count: usize,
        bound: u128,
        strict: bool,
    },
    #[serde(rename = "not auditable: center-possible")]
    CenterPossible { count: usize, reason: String },
}

impl AuditOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, AuditOutcome::Pass { .. })
    }
}

/// Reference value `exp(2π·mean(C)) − 1` of the displacement derivative at 0.
pub fn displacement_reference<R: AbelRing>(eq: &AbelEquation<R>) -> Option<f64> {
    eq.c.period_mean()
        .map(|m| (2.0 * std::f64::consts::PI * m.to_c64().re).exp_m1())
}

/// Check the curve count against the bound. In case b22 the bound counts
/// limit cycles, so it is only applied when a center is excluded: the mean
/// of `C` must be nonzero, and a supplied numeric estimate of the
/// displacement derivative at 0 must agree with it in sign.
pub fn audit<R: AbelRing>(
    eq: &AbelEquation<R>,
    curves: &[InvariantCurve<R>],
    report: &BoundReport,
    numeric_d0: Option<f64>,
) -> Result<AuditOutcome> {
    let count = curves.len();
    if report.case == BoundCase::B22 {
        let mean = eq.c.period_mean();
        let exact_nonzero = mean.as_ref().is_some_and(|m| !m.is_zero());
        if !exact_nonzero {
            return Ok(AuditOutcome::CenterPossible {
                count,
                reason: "C has zero mean, so the displacement derivative at 0 vanishes".into(),
            });
        }
        if let (Some(est), Some(reference)) = (numeric_d0, displacement_reference(eq)) {
            if est == 0.0 || est.signum() != reference.signum() {
                return Ok(AuditOutcome::CenterPossible {
                    count,
                    reason: format!(
                        "numeric d'(0) = {est:e} disagrees with reference {reference:e}"
                    ),
                });
            }
        }
    }
    let ok = if report.strict {
        (count as u128) < report.value
    } else {
        count as u128 <= report.value
    };
    if !ok {
        return Err(Error::inconsistency(format!(
            "{count} invariant curves exceed the case {} bound {}{}",
            report.case.label(),
            if report.strict { "< " } else { "" },
            report.value
        )));
    }
    Ok(AuditOutcome::Pass {
        count,
        bound: report.value,
        strict: report.strict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finder::find_invariant_curves;
    use crate::poly::Poly;
    use crate::scalar::Rational;
    use crate::trig::TrigPoly;

    #[test]
    fn bound_cases_by_degree() {
        let r = classify_bounds(2, 7, 1, RingTag::PolyRational, false).unwrap();
        assert_eq!((r.case, r.value), (BoundCase::A, 1));
        let r = classify_bounds(5, 3, 1, RingTag::PolyRational, false).unwrap();
        assert_eq!(
            (r.case, r.value, r.darboux_threshold),
            (BoundCase::B21, 11, Some(10))
        );
        let r = classify_bounds(3, 2, 1, RingTag::Trig, false).unwrap();
        assert_eq!(
            (r.case, r.value, r.meaning),
            (BoundCase::B22, 12, BoundMeaning::RationalLimitCycles)
        );
        let r = classify_bounds(3, 2, 0, RingTag::Trig, true).unwrap();
        assert_eq!((r.case, r.value, r.strict), (BoundCase::C, 12, true));
        let r = classify_bounds(4, 1, 1, RingTag::PolyRational, false).unwrap();
        assert_eq!(r.case, BoundCase::B1);
        let r = classify_bounds(5, 4, 1, RingTag::PolyGaussian, false).unwrap();
        assert_eq!(r.case, BoundCase::B1);
        assert!(classify_bounds(3, 1, 1, RingTag::Trig, true).is_err());
        assert!(classify_bounds(3, 1, 0, RingTag::Trig, false).is_err());
    }

    #[test]
    fn even_degree_binomial() {
        let r = classify_bounds(4, 1, 0, RingTag::PolyRational, true).unwrap();
        assert_eq!((r.case, r.value), (BoundCase::B21, 7));
        assert_eq!(binomial(5, 3), 10);
        assert_eq!(binomial(100, 50), 100891344545564193334812497256);
    }

    #[test]
    fn thresholds() {
        let r = classify_bounds(5, 3, 1, RingTag::PolyRational, false).unwrap();
        assert_eq!(
            integrability_threshold(&r).unwrap(),
            (10, ThresholdMeaning::IntegrableIfReached)
        );
        let r = classify_bounds(2, 3, 1, RingTag::PolyRational, false).unwrap();
        assert!(matches!(
            integrability_threshold(&r),
            Err(Error::ThresholdNotApplicable(_))
        ));
    }

    #[test]
    fn audits_examples() {
        let e: AbelEquation<Poly<Rational>> =
            AbelEquation::from_strings("2*(t^2+1)*(t+1)^2", "-3*(t+1)^2", "1").unwrap();
        let cs = find_invariant_curves(&e).unwrap();
        let r = classify_equation(&e).unwrap();
        assert_eq!(r.case, BoundCase::B21);
        assert!(audit(&e, &cs, &r, None).unwrap().passed());

        let e: AbelEquation<TrigPoly<Rational>> = AbelEquation::from_strings(
            "25/4*sin(t)+5/2*sin(2t)+1/4*sin(3t)",
            "-(sin(2t)+4*sin(t))",
            "sin(t)",
        )
        .unwrap();
        let cs = find_invariant_curves(&e).unwrap();
        let r = classify_equation(&e).unwrap();
        assert_eq!((r.case, r.value), (BoundCase::B22, 12));
        assert!(matches!(
            audit(&e, &cs, &r, None).unwrap(),
            AuditOutcome::CenterPossible { .. }
        ));
    }
}
