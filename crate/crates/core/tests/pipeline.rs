mod common;

use abel_core::classifier::{audit, classify_equation, AuditOutcome, BoundCase};
use abel_core::darboux::cofactor_dependence;
use abel_core::report::{analyze, AnalysisReport, AnalyzeOptions};
use abel_core::structure::{degree_laws_check, pair_identity_check};
use abel_core::{find_invariant_curves, AbelEquation, Gaussian, Poly, QuadExt, Rational, TrigPoly};
use common::{brute_force_curves, brute_force_dependence, finder_keys, unsimplified_cofactor};

type PolyQ = Poly<Rational>;

fn poly_eq(a: &str, b: &str, c: &str) -> AbelEquation<PolyQ> {
    AbelEquation::from_strings(a, b, c).unwrap()
}

fn cubic_lead() -> AbelEquation<PolyQ> {
    poly_eq("t^3+t", "-(t^2+3*t+1)", "1")
}

fn two_curves() -> AbelEquation<PolyQ> {
    poly_eq("t^5+3*t^3+2*t", "-(2*t^3+5*t)", "t")
}

fn proportional() -> AbelEquation<PolyQ> {
    poly_eq("2*(t^2+1)*(t+1)^2", "-3*(t+1)^2", "1")
}

fn trig_pair() -> AbelEquation<TrigPoly<Rational>> {
    AbelEquation::from_strings(
        "25/4*sin(t)+5/2*sin(2t)+1/4*sin(3t)",
        "-(sin(2t)+4*sin(t))",
        "sin(t)",
    )
    .unwrap()
}

#[test]
fn polynomial_examples_match_exhaustive_search() {
    for eq in [cubic_lead(), two_curves(), proportional()] {
        let found = find_invariant_curves(&eq).unwrap();
        assert_eq!(
            finder_keys(&found),
            brute_force_curves(&eq),
            "{}",
            eq.render()
        );
        for c in &found {
            assert!(
                unsimplified_cofactor(&eq, &c.p()).is_some(),
                "{}",
                c.render()
            );
        }
    }
}

#[test]
fn two_curve_example_structure() {
    let eq = two_curves();
    let found = find_invariant_curves(&eq).unwrap();
    assert_eq!(found.len(), 2);
    let bound = classify_equation(&eq).unwrap();
    assert_eq!(bound.case, BoundCase::B21);
    assert_eq!(bound.value, 11);
    assert_eq!(bound.darboux_threshold, Some(10));
    assert!(audit(&eq, &found, &bound, None).unwrap().passed());

    // A = C·p₁p₂ + r with r computed here from the curves themselves
    let pair = pair_identity_check(&eq, &found[0], &found[1]).unwrap();
    let prod = &found[0].p() * &found[1].p();
    let lifted_a = eq.a.map(|c| QuadExt::base(c.clone()));
    let lifted_c = eq.c.map(|c| QuadExt::base(c.clone()));
    assert_eq!(&(&lifted_c * &prod) + &pair.r, lifted_a);

    let laws = degree_laws_check(&eq, &found).unwrap();
    assert_eq!(laws.pairs.len(), 1);
    assert_eq!(laws.pairs[0].deg_p1 + laws.pairs[0].deg_p2, 5 - 1);

    let (dependent, _) = brute_force_dependence(&eq, &found);
    assert_eq!(
        cofactor_dependence(&eq, &found).unwrap().is_some(),
        dependent
    );
    assert!(!dependent);
}

#[test]
fn proportional_example_has_doubled_curve() {
    let found = find_invariant_curves(&proportional()).unwrap();
    assert_eq!(found.len(), 2);
    let (p, q) = (found[0].p(), found[1].p());
    let two = Poly::constant(QuadExt::base(Rational::from_i64(2)));
    assert!(
        &two * &p == q || &two * &q == p,
        "{} / {}",
        found[0].render(),
        found[1].render()
    );
}

#[test]
fn trig_example_curves_and_bound() {
    let eq = trig_pair();
    let found = find_invariant_curves(&eq).unwrap();
    assert_eq!(found.len(), 2);
    // compare against cos t + 2 and cos t + 3 by sampling
    let mut offsets: Vec<f64> = found
        .iter()
        .map(|c| {
            let p = c.p();
            let at = |t: f64| p.eval_c64(num_complex::Complex64::new(t, 0.0)).re;
            for k in 0..16 {
                let t = k as f64 * 0.41;
                assert!(
                    (at(t) - at(0.0) - (t.cos() - 1.0)).abs() < 1e-12,
                    "{}",
                    c.render()
                );
            }
            at(0.0) - 1.0
        })
        .collect();
    offsets.sort_by(f64::total_cmp);
    assert!((offsets[0] - 2.0).abs() < 1e-12 && (offsets[1] - 3.0).abs() < 1e-12);

    let bound = classify_equation(&eq).unwrap();
    assert_eq!((bound.case, bound.value), (BoundCase::B22, 12));
    // C = sin t has zero mean, so a center cannot be excluded
    assert!(matches!(
        audit(&eq, &found, &bound, None).unwrap(),
        AuditOutcome::CenterPossible { .. }
    ));
}

#[test]
fn gaussian_lift_keeps_rational_curves() {
    let eq = two_curves();
    let g: AbelEquation<Poly<Gaussian>> = AbelEquation::new(
        eq.a.map(|c| Gaussian::new(c.clone(), Rational::from_i64(0))),
        eq.b.map(|c| Gaussian::new(c.clone(), Rational::from_i64(0))),
        eq.c.map(|c| Gaussian::new(c.clone(), Rational::from_i64(0))),
    )
    .unwrap();
    let found = find_invariant_curves(&g).unwrap();
    assert!(found.len() >= 2);
    for c in &found {
        assert!(
            unsimplified_cofactor(&g, &c.p()).is_some(),
            "{}",
            c.render()
        );
    }
}

#[test]
fn reports_survive_round_trip() {
    let opts = AnalyzeOptions::default();
    let reports = [
        analyze(&two_curves(), &opts).unwrap(),
        analyze(&trig_pair(), &opts).unwrap(),
    ];
    for r in reports {
        let back = AnalysisReport::from_json_str(&r.to_json_string().unwrap()).unwrap();
        back.revalidate().unwrap();
        assert_eq!(back.curves.len(), r.curves.len());
    }
}
