//! Multi-curve structure: the two-curve identity, degree laws, proportional
//! classes, and the gcd parameterization of a pair.

use crate::degree::Degree;
use crate::equation::AbelEquation;
use crate::error::{Error, Result};
use crate::finder::{lift_equation, verify_curve, InvariantCurve};
use crate::ring::{AbelRing, CurveRing};
use crate::scalar::{Field, QuadExt};

/// Two distinct curves with `r = (p₂ − p₁)'·p₁·p₂ / (p₂ − p₁)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CurvePair<E: CurveRing> {
    pub p1: E,
    pub p2: E,
    pub r: E,
    /// Whether Euclidean division `A = C·p₁p₂ + r` was checked (polynomial rings).
    pub divrem_checked: bool,
}

fn require_invariant<R: AbelRing>(eq: &AbelEquation<R>, c: &InvariantCurve<R>) -> Result<()> {
    let (ok, residual) = verify_curve(eq, c);
    if ok {
        Ok(())
    } else {
        Err(Error::NotInvariant(format!(
            "{} leaves residual {}",
            c.render(),
            residual.render()
        )))
    }
}

pub fn pair_identity_check<R: AbelRing>(
    eq: &AbelEquation<R>,
    c1: &InvariantCurve<R>,
    c2: &InvariantCurve<R>,
) -> Result<CurvePair<R::Ext>> {
    let (p1, p2) = (c1.p(), c2.p());
    if p1 == p2 {
        return Err(Error::Precondition(
            "the two curves of a pair must be distinct".into(),
        ));
    }
    require_invariant(eq, c1)?;
    require_invariant(eq, c2)?;
    let lifted = lift_equation(eq);
    let d = p2.minus(&p1);
    let prod = p1.times(&p2);
    let r = d.derivative().times(&prod).exact_div(&d)?.ok_or_else(|| {
        Error::inconsistency(format!(
            "p₂ − p₁ = {} does not divide (p₂ − p₁)'·p₁·p₂",
            d.render()
        ))
    })?;
    let rebuilt = lifted.c.times(&prod).plus(&r);
    if rebuilt != lifted.a {
        return Err(Error::inconsistency(format!(
            "A ≠ C·p₁·p₂ + r for p₁ = {}, p₂ = {}",
            p1.render(),
            p2.render()
        )));
    }
    let mut divrem_checked = false;
    if let Some(qr) = lifted.a.euclidean_divrem(&prod) {
        let (quot, rem) = qr?;
        if quot != lifted.c || rem != r {
            return Err(Error::inconsistency(format!(
                "division of A by p₁p₂ gives ({}, {}), expected (C, r) = ({}, {})",
                quot.render(),
                rem.render(),
                lifted.c.render(),
                r.render()
            )));
        }
        divrem_checked = true;
    }
    let sum = c1.base.degree() + c2.base.degree();
    let (rd, sd) = (r.degree(), sum.finite().unwrap_or(0));
    let law_ok = if R::TAG.is_trig() {
        rd <= sum
    } else {
        r.is_zero() || rd == Degree::Finite(sd.saturating_sub(1))
    };
    if !law_ok {
        return Err(Error::inconsistency(format!(
            "deg r = {rd} violates the degree law for deg p₁ + deg p₂ = {sum}"
        )));
    }
    Ok(CurvePair {
        p1,
        p2,
        r,
        divrem_checked,
    })
}

/// Which degree laws apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeRegime {
    Polynomial,
    TrigNonConstantC,
    TrigConstantC,
}

impl DegreeRegime {
    pub fn of<R: AbelRing>(eq: &AbelEquation<R>) -> Self {
        match (R::TAG.is_trig(), eq.c.is_constant()) {
            (false, _) => DegreeRegime::Polynomial,
            (true, false) => DegreeRegime::TrigNonConstantC,
            (true, true) => DegreeRegime::TrigConstantC,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            DegreeRegime::Polynomial => "polynomial",
            DegreeRegime::TrigNonConstantC => "trig-nonconstant-C",
            DegreeRegime::TrigConstantC => "trig-constant-C",
        }
    }

    /// Regimes where the pair degree sum is pinned to `deg A − deg C`.
    pub fn sum_is_pinned(self) -> bool {
        self != DegreeRegime::TrigConstantC
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PairDegrees {
    pub i: usize,
    pub j: usize,
    pub deg_p1: usize,
    pub deg_p2: usize,
    /// The law checked, e.g. `"deg A - deg C = deg p1 + deg p2"`.
    pub law: &'static str,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DegreeLaws {
    pub regime: DegreeRegime,
    pub deg_a: usize,
    pub deg_c: usize,
    pub pairs: Vec<PairDegrees>,
    /// `Some(d)` when three or more curves force the common degree `d`.
    pub common_half_degree: Option<usize>,
    /// A pair of distinct degrees was found and no third curve exists.
    pub distinct_degree_pair_is_alone: Option<bool>,
}

pub fn degree_laws_check<R: AbelRing>(
    eq: &AbelEquation<R>,
    curves: &[InvariantCurve<R>],
) -> Result<DegreeLaws> {
    let regime = DegreeRegime::of(eq);
    let deg_a = eq.a.degree().finite().unwrap_or(0);
    let deg_c = eq.c.degree().finite().unwrap_or(0);
    let diff = deg_a as i64 - deg_c as i64;
    let fail = |msg: String| {
        Err(Error::inconsistency(format!(
            "degree law ({}): {msg}",
            regime.label()
        )))
    };
    let degs: Vec<usize> = curves
        .iter()
        .map(|c| c.base.degree().finite().unwrap_or(0))
        .collect();

    let mut pairs = Vec::new();
    let mut distinct_pair = false;
    for i in 0..curves.len() {
        for j in i + 1..curves.len() {
            let (d1, d2) = (degs[i], degs[j]);
            let sum = (d1 + d2) as i64;
            if diff > sum {
                return fail(format!(
                    "deg A − deg C = {diff} exceeds deg p{i} + deg p{j} = {sum}"
                ));
            }
            let law = match regime {
                DegreeRegime::Polynomial | DegreeRegime::TrigNonConstantC => {
                    if diff != sum {
                        return fail(format!(
                            "deg A − deg C = {diff} but deg p{i} + deg p{j} = {sum}"
                        ));
                    }
                    "deg A - deg C = deg p1 + deg p2"
                }
                DegreeRegime::TrigConstantC if d1 != d2 => {
                    if deg_a as i64 != sum {
                        return fail(format!("distinct degrees {d1}, {d2} but deg A = {deg_a}"));
                    }
                    "deg A = deg p1 + deg p2"
                }
                DegreeRegime::TrigConstantC => "deg A <= deg p1 + deg p2",
            };
            if d1 != d2 {
                distinct_pair = true;
            }
            pairs.push(PairDegrees {
                i,
                j,
                deg_p1: d1,
                deg_p2: d2,
                law,
            });
        }
    }

    let mut common_half_degree = None;
    let mut distinct_degree_pair_is_alone = None;
    if regime.sum_is_pinned() {
        if curves.len() >= 3 {
            if diff % 2 != 0 || degs.iter().any(|&d| d as i64 * 2 != diff) {
                return fail(format!(
                    "{} curves with degrees {degs:?} but deg A − deg C = {diff}",
                    curves.len()
                ));
            }
            common_half_degree = Some((diff / 2) as usize);
        }
        if distinct_pair {
            if curves.len() != 2 {
                return fail(format!(
                    "a pair of distinct degrees coexists with {} curves",
                    curves.len()
                ));
            }
            distinct_degree_pair_is_alone = Some(true);
        }
    }
    Ok(DegreeLaws {
        regime,
        deg_a,
        deg_c,
        pairs,
        common_half_degree,
        distinct_degree_pair_is_alone,
    })
}

/// `p₁ = q·s₁`, `p₂ = q·s₂`, `s₂ − s₁ = k·q̂`, `A = q·s₁·s₂·s`.
#[derive(Clone, Debug, PartialEq)]
pub struct ParameterizedFamily<E: CurveRing> {
    pub q: E,
    pub s1: E,
    pub s2: E,
    pub k: E::Scalar,
    pub q_hat: E,
    pub s: E,
    /// Which sign variants of the `s` identity hold on this pair.
    pub variants: SignVariants,
}

/// The identity `s = q' + q·(C + q̂'/q̂)` and its sign-flipped readings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignVariants {
    /// `s = q' + q·(C + q̂'/q̂)`
    pub plus_q_prime: bool,
    /// `s = −q' + q·(C + q̂'/q̂)`
    pub minus_q_prime: bool,
    /// `s = −(q' + q·(C + q̂'/q̂))`
    pub negated: bool,
}

pub const S_FORMULA: &str = "s = q' + q*(C + q_hat'/q_hat)";

/// Divide out of `x` every factor it shares with `q`; the cofactor left over
/// is constant iff all irreducible factors of `x` divide `q`.
pub(crate) fn strip_common<E: CurveRing>(x: &E, q: &E) -> Result<E> {
    let mut rest = x.clone();
    while !rest.is_constant() {
        let g = rest.ring_gcd(q)?;
        if g.is_constant() {
            break;
        }
        rest = rest
            .exact_div(&g)?
            .ok_or_else(|| Error::inconsistency("gcd does not divide its argument"))?;
    }
    Ok(rest)
}

pub fn parameterize_pair<R: AbelRing>(
    eq: &AbelEquation<R>,
    c1: &InvariantCurve<R>,
    c2: &InvariantCurve<R>,
) -> Result<ParameterizedFamily<R::Ext>> {
    let (p1, p2) = (c1.p(), c2.p());
    if p1 == p2 {
        return Err(Error::Precondition(
            "the two curves of a pair must be distinct".into(),
        ));
    }
    require_invariant(eq, c1)?;
    require_invariant(eq, c2)?;
    let lifted = lift_equation(eq);
    let q = p1.ring_gcd(&p2)?;
    let quot = |x: &R::Ext, d: &R::Ext, what: &str| -> Result<R::Ext> {
        x.exact_div(d)?
            .ok_or_else(|| Error::inconsistency(format!("{what} is not an exact quotient")))
    };
    let s1 = quot(&p1, &q, "p₁/q")?;
    let s2 = quot(&p2, &q, "p₂/q")?;
    let (k, q_hat) = s2.minus(&s1).normalize();
    let leftover = strip_common(&q_hat, &q)?;
    if !leftover.is_constant() {
        return Err(Error::inconsistency(format!(
            "s₂ − s₁ has the factor {} which does not divide q = {}",
            leftover.render(),
            q.render()
        )));
    }
    let s = quot(&lifted.a, &q.times(&s1).times(&s2), "A/(q·s₁·s₂)")?;
    let log_term = quot(&q.times(&q_hat.derivative()), &q_hat, "q·q̂'/q̂")?;
    let tail = q.times(&lifted.c).plus(&log_term);
    let qd = q.derivative();
    let variants = SignVariants {
        plus_q_prime: s == qd.plus(&tail),
        minus_q_prime: s == tail.minus(&qd),
        negated: s == qd.plus(&tail).negated(),
    };
    if !variants.plus_q_prime {
        return Err(Error::inconsistency(format!(
            "{S_FORMULA} fails: s = {} but q' + q·(C + q̂'/q̂) = {}",
            s.render(),
            qd.plus(&tail).render()
        )));
    }
    Ok(ParameterizedFamily {
        q,
        s1,
        s2,
        k,
        q_hat,
        s,
        variants,
    })
}

/// Curves sharing one normalized `p̃`. Two-member classes carry the ratio
/// `K` of the second constant to the first.
#[derive(Clone, Debug, PartialEq)]
pub struct ProportionalGroup<R: AbelRing> {
    pub base: R,
    pub scales: Vec<QuadExt<R::Base>>,
    pub ratio: Option<QuadExt<R::Base>>,
}

/// Partition into proportionality classes, checking for two-member classes
/// `A = K·p·(p' + pC)` and `B = −(K + 1)·(p' + pC)`.
pub fn proportional_groups<R: AbelRing>(
    eq: &AbelEquation<R>,
    curves: &[InvariantCurve<R>],
) -> Result<Vec<ProportionalGroup<R>>> {
    let mut groups: Vec<ProportionalGroup<R>> = Vec::new();
    for c in curves {
        match groups.iter_mut().find(|g| g.base == c.base) {
            Some(g) => g.scales.push(c.scale.clone()),
            None => groups.push(ProportionalGroup {
                base: c.base.clone(),
                scales: vec![c.scale.clone()],
                ratio: None,
            }),
        }
    }
    let lifted = lift_equation(eq);
    for g in &mut groups {
        match g.scales.len() {
            1 => {}
            2 => {
                let k = g.scales[1].clone() / g.scales[0].clone();
                let one = QuadExt::<R::Base>::one();
                if k.is_zero() || k == one || k == -one.clone() {
                    return Err(Error::inconsistency(format!(
                        "proportional class of {} has excluded ratio {k}",
                        g.base.render()
                    )));
                }
                let p = g.base.lift().scale(&g.scales[0]);
                let w = p.derivative().plus(&p.times(&lifted.c));
                let a_ok = lifted.a == p.times(&w).scale(&k);
                let b_ok = lifted.b == w.scale(&-(k.clone() + one));
                if !(a_ok && b_ok) {
                    return Err(Error::inconsistency(format!(
                        "proportional witnesses fail for {} with K = {k}",
                        g.base.render()
                    )));
                }
                g.ratio = Some(k);
            }
            n => {
                return Err(Error::inconsistency(format!(
                    "{n} proportional curves share {}",
                    g.base.render()
                )))
            }
        }
    }
    Ok(groups)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finder::find_invariant_curves;
    use crate::parse::parse_expr;
    use crate::poly::Poly;
    use crate::scalar::Rational;
    use crate::trig::TrigPoly;

    type P = Poly<Rational>;
    type T = TrigPoly<Rational>;

    fn pr(s: &str) -> P {
        parse_expr(s).unwrap()
    }

    fn tr(s: &str) -> T {
        parse_expr(s).unwrap()
    }

    fn k(n: i64) -> QuadExt<Rational> {
        QuadExt::base(Rational::from_i64(n))
    }

    #[test]
    fn two_curve_pair() {
        let e: AbelEquation<P> =
            AbelEquation::from_strings("t^5+3*t^3+2*t", "-(2*t^3+5*t)", "t").unwrap();
        let cs = find_invariant_curves(&e).unwrap();
        let pair = pair_identity_check(&e, &cs[0], &cs[1]).unwrap();
        assert!(pair.r.is_zero());
        assert!(pair.divrem_checked);
        let fam = parameterize_pair(&e, &cs[0], &cs[1]).unwrap();
        assert_eq!(fam.q, pr("1").lift());
        assert_eq!(fam.s1, pr("t^2+1").lift());
        assert_eq!(fam.s2, pr("t^2+2").lift());
        assert_eq!(fam.k, k(1));
        assert_eq!(fam.q_hat, pr("1").lift());
        assert_eq!(fam.s, pr("t").lift());
        let laws = degree_laws_check(&e, &cs).unwrap();
        assert_eq!(laws.pairs.len(), 1);
        assert_eq!(laws.common_half_degree, None);
        let groups = proportional_groups(&e, &cs).unwrap();
        assert_eq!(groups.len(), 2);
    }

    #[test]
    fn proportional_pair_and_sign() {
        let e: AbelEquation<P> =
            AbelEquation::from_strings("2*(t^2+1)*(t+1)^2", "-3*(t+1)^2", "1").unwrap();
        let cs = find_invariant_curves(&e).unwrap();
        let pair = pair_identity_check(&e, &cs[0], &cs[1]).unwrap();
        let p = pr("t^2+1");
        assert_eq!(pair.r, (&(&p * &p.derivative()) * &pr("2")).lift());
        let fam = parameterize_pair(&e, &cs[0], &cs[1]).unwrap();
        assert_eq!(fam.q, p.lift());
        assert_eq!(fam.s, pr("(t+1)^2").lift());
        assert!(fam.variants.plus_q_prime);
        assert!(!fam.variants.minus_q_prime);
        assert!(!fam.variants.negated);
        let groups = proportional_groups(&e, &cs).unwrap();
        assert_eq!(groups.len(), 1);
        assert_eq!(groups[0].ratio, Some(k(2)));
    }

    #[test]
    fn shared_factor_pair() {
        // q = t²+1, s₁ = t²+2, s₂ = s₁ + (t²+1): q̂ = q
        let q = pr("t^2+1");
        let s1 = pr("t^2+2");
        let s2 = &s1 + &q;
        let c = pr("t");
        let s = &(&q.derivative() + &(&q * &c)) + &q.derivative();
        let a = &(&(&q * &s1) * &s2) * &s;
        let p1 = &q * &s1;
        let b = -&(&(&a.exact_div(&p1).unwrap().unwrap() + &p1.derivative()) + &(&p1 * &c));
        let e = AbelEquation::new(a, b, c).unwrap();
        let c1 = InvariantCurve::new(p1, k(1));
        let c2 = InvariantCurve::new(&q * &s2, k(1));
        let fam = parameterize_pair(&e, &c1, &c2).unwrap();
        assert_eq!(fam.q_hat, q.lift());
        pair_identity_check(&e, &c1, &c2).unwrap();
    }

    #[test]
    fn trig_pair() {
        let e: AbelEquation<T> = AbelEquation::from_strings(
            "25/4*sin(t)+5/2*sin(2t)+1/4*sin(3t)",
            "-(sin(2t)+4*sin(t))",
            "sin(t)",
        )
        .unwrap();
        let cs = find_invariant_curves(&e).unwrap();
        let pair = pair_identity_check(&e, &cs[0], &cs[1]).unwrap();
        assert!(pair.r.is_zero());
        assert!(!pair.divrem_checked);
        let fam = parameterize_pair(&e, &cs[0], &cs[1]).unwrap();
        assert_eq!(fam.s, tr("sin(t)").lift());
        let laws = degree_laws_check(&e, &cs).unwrap();
        assert_eq!(laws.regime, DegreeRegime::TrigNonConstantC);
    }

    #[test]
    fn rejects_identical_curves() {
        let e: AbelEquation<P> = AbelEquation::from_strings("t^3+t", "-(t^2+3*t+1)", "1").unwrap();
        let cs = find_invariant_curves(&e).unwrap();
        assert!(matches!(
            pair_identity_check(&e, &cs[0], &cs[0]),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            parameterize_pair(&e, &cs[0], &cs[0]),
            Err(Error::Precondition(_))
        ));
        let laws = degree_laws_check(&e, &cs).unwrap();
        assert!(laws.pairs.is_empty());
    }

    #[test]
    fn detects_broken_degree_law() {
        let e: AbelEquation<P> =
            AbelEquation::from_strings("t^5+3*t^3+2*t", "-(2*t^3+5*t)", "t").unwrap();
        let fake = vec![
            InvariantCurve::new(pr("t^2+1"), k(1)),
            InvariantCurve::new(pr("t^4+1"), k(1)),
        ];
        assert!(matches!(
            degree_laws_check(&e, &fake),
            Err(Error::Inconsistency(_))
        ));
    }
}
