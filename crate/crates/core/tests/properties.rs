use abel_core::factor::{factor_gaussian, factor_rational};
use abel_core::parse::parse_expr;
use abel_core::trig::divisor_orbits;
use abel_core::trig::laurent::{from_laurent, to_laurent};
use abel_core::{AbelRing, Gaussian, Poly, Rational, TrigPoly};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d))
}

fn gaussian() -> impl Strategy<Value = Gaussian> {
    (rational(), rational()).prop_map(|(a, b)| Gaussian::new(a, b))
}

fn poly_q(max_len: usize) -> impl Strategy<Value = Poly<Rational>> {
    prop::collection::vec(rational(), 0..=max_len).prop_map(Poly::new)
}

fn poly_g(max_len: usize) -> impl Strategy<Value = Poly<Gaussian>> {
    prop::collection::vec(gaussian(), 0..=max_len).prop_map(Poly::new)
}

fn trig(max_n: usize) -> impl Strategy<Value = TrigPoly<Rational>> {
    (
        rational(),
        prop::collection::vec((rational(), rational()), 0..=max_n),
    )
        .prop_map(|(a0, h)| TrigPoly::new(a0, h))
}

macro_rules! ring_axioms {
    ($name:ident, $strat:expr) => {
        proptest! {
            #[test]
            fn $name(a in $strat, b in $strat, c in $strat) {
                prop_assert_eq!(&a + &b, &b + &a);
                prop_assert_eq!(&a * &b, &b * &a);
                prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                prop_assert_eq!(&(&a - &b) + &b, a.clone());
                // Leibniz rule
                prop_assert_eq!((&a * &b).derivative(), &(&a.derivative() * &b) + &(&a * &b.derivative()));
            }
        }
    };
}

ring_axioms!(poly_rational_ring_axioms, poly_q(5));
ring_axioms!(poly_gaussian_ring_axioms, poly_g(4));
ring_axioms!(trig_ring_axioms, trig(3));

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn render_parse_round_trip_poly_rational(x in poly_q(7)) {
        let back: Poly<Rational> = parse_expr(&x.render()).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn render_parse_round_trip_poly_gaussian(x in poly_g(6)) {
        let back: Poly<Gaussian> = parse_expr(&x.render()).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn render_parse_round_trip_trig(x in trig(4)) {
        let back: TrigPoly<Rational> = parse_expr(&x.render()).unwrap();
        prop_assert_eq!(back, x);
    }
}

proptest! {
    #[test]
    fn laurent_model_round_trip(x in trig(4)) {
        let (p, n) = to_laurent(&x);
        prop_assert_eq!(from_laurent::<Rational>(&p, n).unwrap(), x.clone());
        // the Laurent model agrees with direct evaluation on the unit circle
        for k in 0..8 {
            let t = k as f64 * 0.77;
            let z = num_complex::Complex64::from_polar(1.0, t);
            let via = p.eval_c64(z) * z.powi(-(n as i32));
            prop_assert!((via.re - x.eval_f64(t)).abs() < 1e-9 * (1.0 + via.norm()));
            prop_assert!(via.im.abs() < 1e-9 * (1.0 + via.norm()));
        }
    }

    #[test]
    fn divrem_and_gcd(a in poly_q(7), d in poly_q(4)) {
        prop_assume!(!d.is_zero());
        let (q, r) = a.divrem(&d).unwrap();
        prop_assert_eq!(&(&q * &d) + &r, a.clone());
        prop_assert!(r.is_zero() || r.degree() < d.degree());
        prop_assume!(!a.is_zero());
        let g = a.gcd(&d).unwrap();
        prop_assert!(g.divides(&a).unwrap() && g.divides(&d).unwrap());
        let (g2, s, t) = a.xgcd(&d).unwrap();
        prop_assert_eq!(&(&s * &a) + &(&t * &d), g2.clone());
        prop_assert_eq!(g2.monic().1, g);
    }

    #[test]
    fn gaussian_divrem(a in poly_g(5), d in poly_g(3)) {
        prop_assume!(!d.is_zero());
        let (q, r) = a.divrem(&d).unwrap();
        prop_assert_eq!(&(&q * &d) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < d.degree());
    }

    #[test]
    fn rational_factorization_reconstructs(fs in prop::collection::vec(poly_q(3), 1..=3)) {
        let p = fs.iter().fold(Poly::<Rational>::one(), |acc, f| &acc * f);
        prop_assume!(!p.is_zero());
        let fact = factor_rational(&p).unwrap();
        prop_assert_eq!(fact.expand(), p.clone());
        for (f, _) in &fact.factors {
            prop_assert!(!f.is_constant());
            prop_assert_eq!(f.leading().cloned(), Some(Rational::from_i64(1)));
        }
        let nonconstant = fs.iter().filter(|f| !f.is_constant()).count();
        let total: usize = fact.factors.iter().map(|(_, m)| m).sum();
        prop_assert!(total >= nonconstant);
    }

    #[test]
    fn gaussian_factorization_reconstructs(fs in prop::collection::vec(poly_g(2), 1..=3)) {
        let p = fs.iter().fold(Poly::<Gaussian>::one(), |acc, f| &acc * f);
        prop_assume!(!p.is_zero());
        let fact = factor_gaussian(&p).unwrap();
        prop_assert_eq!(fact.expand(), p);
    }

    #[test]
    fn trig_orbit_factorization_reconstructs(a in trig(2), b in trig(1)) {
        let p = &a * &b;
        prop_assume!(!p.is_constant());
        let fact = divisor_orbits(&p).unwrap();
        prop_assert_eq!(fact.expand(), p);
    }

    #[test]
    fn nonvanishing_agrees_with_sampling(x in poly_q(6), shift in 1i64..4, sq in poly_q(2)) {
        // a sign change on a grid certifies a real zero
        let sample_sign_change = |f: &dyn Fn(f64) -> f64, lo: f64, hi: f64| {
            let n = 4000;
            let mut prev = f(lo);
            for k in 1..=n {
                let v = f(lo + (hi - lo) * k as f64 / n as f64);
                if prev == 0.0 || v == 0.0 || prev.signum() != v.signum() {
                    return true;
                }
                prev = v;
            }
            false
        };
        if !x.is_zero() {
            let f = |t: f64| x.eval_c64(num_complex::Complex64::new(t, 0.0)).re;
            if sample_sign_change(&f, -50.0, 50.0) {
                prop_assert!(!x.nonvanishing().unwrap());
            }
        }
        // s² + c with c > 0 never vanishes
        let pos = &(&sq * &sq) + &Poly::constant(Rational::from_i64(shift));
        prop_assert!(pos.nonvanishing().unwrap());
    }

    #[test]
    fn trig_nonvanishing_agrees_with_sampling(x in trig(3)) {
        prop_assume!(!x.is_zero());
        let mut sign_change = false;
        let n = 4000;
        let mut prev = x.eval_f64(0.0);
        for k in 1..=n {
            let v = x.eval_f64(2.0 * std::f64::consts::PI * k as f64 / n as f64);
            if prev == 0.0 || v == 0.0 || prev.signum() != v.signum() {
                sign_change = true;
            }
            prev = v;
        }
        let nv = x.nonvanishing().unwrap();
        if sign_change {
            prop_assert!(!nv);
        }
        // a positive minimum well above sampling error certifies no zero
        let min = (0..n).map(|k| x.eval_f64(2.0 * std::f64::consts::PI * k as f64 / n as f64).abs())
            .fold(f64::INFINITY, f64::min);
        let scale: f64 = 1.0 + x.harmonics().iter().enumerate()
            .map(|(k, (a, b))| (k as f64 + 1.0) * (a.to_f64().abs() + b.to_f64().abs())).sum::<f64>();
        if min > scale * 2.0 * std::f64::consts::PI / n as f64 {
            prop_assert!(nv);
        }
    }
}
