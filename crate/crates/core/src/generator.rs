//! Equations with prescribed invariant curves.
//!
//! Every constructor checks its result: the prescribed curves are verified
//! symbolically before the equation is returned.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::equation::AbelEquation;
use crate::error::{Error, Result};
use crate::finder::{verify_curve, InvariantCurve};
use crate::poly::Poly;
use crate::ring::{AbelRing, CurveRing, RingTag};
use crate::scalar::{Field, Gaussian, QuadExt, Rational};
use crate::structure::strip_common;
use crate::trig::TrigPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Mode {
    #[serde(rename = "single")]
    Single,
    #[serde(rename = "pair")]
    Pair,
    #[serde(rename = "proportional")]
    Proportional,
    #[serde(rename = "conjugate-surd")]
    ConjugateSurd,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Single => "single",
            Mode::Pair => "pair",
            Mode::Proportional => "proportional",
            Mode::ConjugateSurd => "conjugate-surd",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "single" => Some(Mode::Single),
            "pair" => Some(Mode::Pair),
            "proportional" => Some(Mode::Proportional),
            "conjugate-surd" => Some(Mode::ConjugateSurd),
            _ => None,
        }
    }
}

/// A generated equation with its prescribed curves, canonically ordered.
#[derive(Clone, Debug, PartialEq)]
pub struct Generated<R: AbelRing> {
    pub equation: AbelEquation<R>,
    pub curves: Vec<InvariantCurve<R>>,
    pub mode: Mode,
}

fn curve_of<R: AbelRing>(p: &R) -> InvariantCurve<R> {
    let (u, base) = p.normalize();
    InvariantCurve::new(base, QuadExt::base(u))
}

fn admissible_curve<R: AbelRing>(p: &R, what: &str) -> Result<()> {
    if p.is_constant() {
        return Err(Error::Precondition(format!(
            "{what} = {} must be non-constant",
            p.render()
        )));
    }
    if !p.nonvanishing()? {
        return Err(Error::Precondition(format!(
            "{what} = {} vanishes on the real line",
            p.render()
        )));
    }
    Ok(())
}

fn finish<R: AbelRing>(
    eq: AbelEquation<R>,
    mut curves: Vec<InvariantCurve<R>>,
    mode: Mode,
) -> Result<Generated<R>> {
    if eq.b.is_zero() {
        return Err(Error::Precondition("the construction gives B ≡ 0".into()));
    }
    eq.validate()
        .map_err(|e| Error::Precondition(e.to_string()))?;
    for c in &curves {
        let (ok, residual) = verify_curve(&eq, c);
        if !ok {
            let msg = format!(
                "{} not invariant, residual {}",
                c.render(),
                residual.render()
            );
            return Err(if mode == Mode::Pair {
                Error::inconsistency(format!("sign-resolution inconsistency: {msg}"))
            } else {
                Error::inconsistency(msg)
            });
        }
    }
    curves.sort_by(|a, b| a.canonical_cmp(b));
    curves.dedup();
    Ok(Generated {
        equation: eq,
        curves,
        mode,
    })
}

/// `A = p·m`, `B = −(m + p' + pC)`.
pub fn gen_single<R: AbelRing>(p: &R, m: &R, c: &R) -> Result<Generated<R>> {
    admissible_curve(p, "p")?;
    if m.is_zero() {
        return Err(Error::Precondition("m must be nonzero".into()));
    }
    let a = p.times(m);
    let b = m.plus(&p.derivative()).plus(&p.times(c)).negated();
    finish(
        AbelEquation::unchecked(a, b, c.clone()),
        vec![curve_of(p)],
        Mode::Single,
    )
}

/// Curves `q·s₁` and `q·s₂` with `s₂ = s₁ + k·q̂`, `A = q·s₁·s₂·s` and
/// `s = q' + q·(C + q̂'/q̂)`.
pub fn gen_pair<R: AbelRing>(q: &R, s1: &R, k: &R::Base, q_hat: &R, c: &R) -> Result<Generated<R>> {
    if k.is_zero() {
        return Err(Error::Precondition("k must be nonzero".into()));
    }
    if q.is_zero() || s1.is_zero() || q_hat.is_zero() {
        return Err(Error::Precondition("q, s₁ and q̂ must be nonzero".into()));
    }
    if !q_hat.is_constant() && !strip_common(q_hat, q)?.is_constant() {
        return Err(Error::Precondition(format!(
            "q̂ = {} has a factor not dividing q = {}",
            q_hat.render(),
            q.render()
        )));
    }
    let s2 = s1.plus(&q_hat.scale(k));
    let (p1, p2) = (q.times(s1), q.times(&s2));
    admissible_curve(&p1, "p₁")?;
    admissible_curve(&p2, "p₂")?;
    if !s1.ring_gcd(&s2)?.is_constant() {
        return Err(Error::Precondition(format!(
            "s₁ = {} and s₂ = {} are not coprime",
            s1.render(),
            s2.render()
        )));
    }
    let log_term = q
        .times(&q_hat.derivative())
        .exact_div(q_hat)?
        .ok_or_else(|| Error::Precondition("q·q̂'/q̂ is not a ring element".into()))?;
    let s = q.derivative().plus(&q.times(c)).plus(&log_term);
    if s.is_zero() {
        return Err(Error::Precondition("the construction gives s ≡ 0".into()));
    }
    let a = p1.times(&s2).times(&s);
    let m = s2.times(&s);
    let b = m.plus(&p1.derivative()).plus(&p1.times(c)).negated();
    finish(
        AbelEquation::unchecked(a, b, c.clone()),
        vec![curve_of(&p1), curve_of(&p2)],
        Mode::Pair,
    )
}

/// `A = K·p·(p' + pC)`, `B = −(K + 1)·(p' + pC)`.
pub fn gen_proportional<R: AbelRing>(p: &R, k: &R::Base, c: &R) -> Result<Generated<R>> {
    let one = R::Base::one();
    if k.is_zero() || *k == one {
        return Err(Error::Precondition("K must differ from 0 and 1".into()));
    }
    if *k == -one.clone() {
        return Err(Error::Precondition("K = −1 forces B ≡ 0".into()));
    }
    admissible_curve(p, "p")?;
    let w = p.derivative().plus(&p.times(c));
    if w.is_zero() {
        return Err(Error::Precondition("p' + pC vanishes identically".into()));
    }
    let a = p.times(&w).scale(k);
    let b = w.scale(&-(k.clone() + one));
    let kp = p.scale(k);
    finish(
        AbelEquation::unchecked(a, b, c.clone()),
        vec![curve_of(p), curve_of(&kp)],
        Mode::Proportional,
    )
}

/// `A = π·p·w`, `B = −σ·w` with `w = p' + pC`: the curves are `K·p` for the
/// two roots of `K² − σK + π`, conjugate in a quadratic extension when the
/// discriminant is not a square.
pub fn gen_conjugate_surd<R: AbelRing>(
    p: &R,
    sigma: &R::Base,
    pi: &R::Base,
    c: &R,
) -> Result<Generated<R>> {
    use crate::scalar::{roots_upto_quadratic, BaseField};
    admissible_curve(p, "p")?;
    if sigma.is_zero() || pi.is_zero() {
        return Err(Error::Precondition("σ and π must be nonzero".into()));
    }
    let disc = sigma.clone() * sigma.clone() - R::Base::from_i64(4) * pi.clone();
    if disc.sqrt_exact().is_some() {
        return Err(Error::Precondition(format!("σ² − 4π = {disc} is a square")));
    }
    let roots = roots_upto_quadratic(
        &[pi.clone(), -sigma.clone(), R::Base::one()],
        R::real_constants_only(),
    );
    if roots.len() != 2 {
        return Err(Error::Precondition(format!(
            "σ² − 4π = {disc} gives no admissible constants"
        )));
    }
    let w = p.derivative().plus(&p.times(c));
    if w.is_zero() {
        return Err(Error::Precondition("p' + pC vanishes identically".into()));
    }
    let a = p.times(&w).scale(pi);
    let b = w.scale(&-sigma.clone());
    let (u, base) = p.normalize();
    let curves = roots
        .into_iter()
        .map(|k| InvariantCurve::new(base.clone(), k * QuadExt::base(u.clone())))
        .collect();
    finish(
        AbelEquation::unchecked(a, b, c.clone()),
        curves,
        Mode::ConjugateSurd,
    )
}

// ---------------------------------------------------------------------------
// Random instances
// ---------------------------------------------------------------------------

/// Degree caps for random instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_deg_a: usize,
}

impl Caps {
    pub fn default_for(tag: RingTag) -> Self {
        Caps {
            max_deg_a: if tag.is_trig() { 4 } else { 8 },
        }
    }
}

/// Ring-specific random building blocks.
pub trait RandomRing: AbelRing {
    /// Smallest degree of a nonvanishing element.
    const MIN_NONVANISHING_DEGREE: usize;

    fn random_scalar(rng: &mut ChaCha8Rng) -> Self::Base;
    /// An element of degree exactly `deg` (any sign pattern).
    fn random_element(rng: &mut ChaCha8Rng, deg: usize) -> Self;
    /// A nonvanishing element of degree exactly `deg`, which must be at
    /// least the minimum and, for real polynomials, even.
    fn random_nonvanishing(rng: &mut ChaCha8Rng, deg: usize) -> Self;
    /// Degrees admissible for [`random_nonvanishing`](Self::random_nonvanishing) up to `max`.
    fn nonvanishing_degrees(max: usize) -> Vec<usize>;
    /// An element with a real zero at a rational point.
    fn random_vanishing_factor(rng: &mut ChaCha8Rng) -> Self;
}

fn small_rational(rng: &mut ChaCha8Rng, nonzero: bool) -> Rational {
    loop {
        let n: i64 = rng.gen_range(-5..=5);
        let d: i64 = rng.gen_range(1..=3);
        if !nonzero || n != 0 {
            return Rational::new(n, d);
        }
    }
}

/// `t² + at + b` with negative discriminant.
fn real_quadratic(rng: &mut ChaCha8Rng) -> Poly<Rational> {
    let a: i64 = rng.gen_range(-3..=3);
    let b = a * a / 4 + rng.gen_range(1..=3);
    let lead = Rational::from_i64(rng.gen_range(1..=2));
    Poly::from_i64s(&[b, a, 1]).scale(&lead)
}

impl RandomRing for Poly<Rational> {
    const MIN_NONVANISHING_DEGREE: usize = 2;

    fn random_scalar(rng: &mut ChaCha8Rng) -> Rational {
        small_rational(rng, true)
    }
    fn random_element(rng: &mut ChaCha8Rng, deg: usize) -> Self {
        let mut cs: Vec<Rational> = (0..deg).map(|_| small_rational(rng, false)).collect();
        cs.push(small_rational(rng, true));
        Poly::new(cs)
    }
    fn random_nonvanishing(rng: &mut ChaCha8Rng, deg: usize) -> Self {
        assert!(
            deg >= 2 && deg % 2 == 0,
            "real nonvanishing polynomials have even degree"
        );
        (0..deg / 2).fold(Poly::one(), |acc, _| &acc * &real_quadratic(rng))
    }
    fn nonvanishing_degrees(max: usize) -> Vec<usize> {
        (2..=max).step_by(2).collect()
    }
    fn random_vanishing_factor(rng: &mut ChaCha8Rng) -> Self {
        Poly::linear_root(small_rational(rng, false))
    }
}

impl RandomRing for Poly<Gaussian> {
    const MIN_NONVANISHING_DEGREE: usize = 1;

    fn random_scalar(rng: &mut ChaCha8Rng) -> Gaussian {
        let re = small_rational(rng, false);
        let im = if rng.gen_bool(0.5) {
            small_rational(rng, false)
        } else {
            Rational::zero()
        };
        if re.is_zero() && im.is_zero() {
            Gaussian::one()
        } else {
            Gaussian::new(re, im)
        }
    }
    fn random_element(rng: &mut ChaCha8Rng, deg: usize) -> Self {
        let mut cs: Vec<Gaussian> = (0..deg)
            .map(|_| {
                if rng.gen_bool(0.3) {
                    Gaussian::zero()
                } else {
                    Self::random_scalar(rng)
                }
            })
            .collect();
        cs.push(Self::random_scalar(rng));
        Poly::new(cs)
    }
    fn random_nonvanishing(rng: &mut ChaCha8Rng, deg: usize) -> Self {
        let mut out = Poly::one();
        let mut left = deg;
        while left > 0 {
            if left >= 2 && rng.gen_bool(0.3) {
                out = &out * &real_quadratic(rng).to_gaussian();
                left -= 2;
            } else {
                let im = small_rational(rng, true);
                let root = Gaussian::new(small_rational(rng, false), im);
                out = &out * &Poly::linear_root(root);
                left -= 1;
            }
        }
        out
    }
    fn nonvanishing_degrees(max: usize) -> Vec<usize> {
        (1..=max).collect()
    }
    fn random_vanishing_factor(rng: &mut ChaCha8Rng) -> Self {
        Poly::linear_root(Gaussian::from_rational(&small_rational(rng, false)))
    }
}

impl RandomRing for TrigPoly<Rational> {
    const MIN_NONVANISHING_DEGREE: usize = 1;

    fn random_scalar(rng: &mut ChaCha8Rng) -> Rational {
        small_rational(rng, true)
    }
    fn random_element(rng: &mut ChaCha8Rng, deg: usize) -> Self {
        let mut h: Vec<(Rational, Rational)> = (0..deg)
            .map(|_| (small_rational(rng, false), small_rational(rng, false)))
            .collect();
        if let Some(last) = h.last_mut() {
            if last.0.is_zero() && last.1.is_zero() {
                last.0 = small_rational(rng, true);
            }
        }
        let a0 = if deg == 0 {
            small_rational(rng, true)
        } else {
            small_rational(rng, false)
        };
        TrigPoly::new(a0, h)
    }
    /// A constant term dominating the harmonics, `|a₀| > Σ |aₙ| + |bₙ|`.
    fn random_nonvanishing(rng: &mut ChaCha8Rng, deg: usize) -> Self {
        let x = Self::random_element(rng, deg);
        let mass = x
            .harmonics()
            .iter()
            .fold(Rational::zero(), |acc, (a, b)| acc + a.abs() + b.abs());
        let margin = Rational::new(rng.gen_range(1..=4), 2);
        let a0 = if rng.gen_bool(0.8) {
            mass + margin
        } else {
            -(mass + margin)
        };
        TrigPoly::new(a0, x.harmonics().to_vec())
    }
    fn nonvanishing_degrees(max: usize) -> Vec<usize> {
        (1..=max).collect()
    }
    fn random_vanishing_factor(rng: &mut ChaCha8Rng) -> Self {
        // cos t − c with |c| ≤ 1, or a pure sine
        if rng.gen_bool(0.5) {
            TrigPoly::sin(1)
        } else {
            let c = Rational::new(rng.gen_range(-2..=2), 2);
            &TrigPoly::cos(1) - &TrigPoly::constant(c)
        }
    }
}

/// Proportionality ratios used by the rational-root instances.
pub const RATIO_TABLE: [(i64, i64); 8] = [
    (5, 3),
    (3, 5),
    (4, 5),
    (5, 4),
    (13, 5),
    (5, 13),
    (12, 13),
    (13, 12),
];

fn pick_degree(rng: &mut ChaCha8Rng, options: &[usize]) -> Option<usize> {
    options.choose(rng).copied()
}

fn deg<R: CurveRing>(x: &R) -> usize {
    x.degree().finite().unwrap_or(0)
}

fn try_random<R: RandomRing>(rng: &mut ChaCha8Rng, mode: Mode, caps: Caps) -> Result<Generated<R>> {
    let cap = caps.max_deg_a;
    let nv = R::nonvanishing_degrees(cap);
    let c_deg = rng.gen_range(0..=2.min(cap));
    let c = R::random_element(rng, c_deg);
    let too_big = || Error::Precondition("degree cap exceeded".into());
    let out = match mode {
        Mode::Single => {
            let dp = pick_degree(rng, &nv).ok_or_else(too_big)?;
            let dm = rng.gen_range(0..=cap - dp);
            let p = R::random_nonvanishing(rng, dp);
            let m = R::random_element(rng, dm);
            gen_single(&p, &m, &c)?
        }
        Mode::Pair => {
            let q = if rng.gen_bool(0.5) {
                R::one()
            } else {
                let dq = pick_degree(rng, &nv).ok_or_else(too_big)?;
                R::random_nonvanishing(rng, dq)
            };
            let s1 = if !q.is_constant() && rng.gen_bool(0.4) {
                R::constant(R::random_scalar(rng))
            } else {
                let d = pick_degree(rng, &nv).ok_or_else(too_big)?;
                R::random_nonvanishing(rng, d)
            };
            let q_hat = if !q.is_constant() && rng.gen_bool(0.5) {
                q.normalize().1
            } else {
                R::one()
            };
            let k = R::random_scalar(rng);
            gen_pair(&q, &s1, &k, &q_hat, &c)?
        }
        Mode::Proportional => {
            let dp = pick_degree(rng, &nv).ok_or_else(too_big)?;
            let p = R::random_nonvanishing(rng, dp);
            let (n, d) = RATIO_TABLE[rng.gen_range(0..RATIO_TABLE.len())];
            let k = R::Base::from_rational(&Rational::new(n, d));
            gen_proportional(&p, &k, &c)?
        }
        Mode::ConjugateSurd => {
            let dp = pick_degree(rng, &nv).ok_or_else(too_big)?;
            let p = R::random_nonvanishing(rng, dp);
            let a: i64 = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
            let d = [2i64, 3, 5, 6, 7][rng.gen_range(0..5)];
            let sigma = R::Base::from_i64(2 * a);
            let pi = R::Base::from_i64(a * a - d);
            gen_conjugate_surd(&p, &sigma, &pi, &c)?
        }
    };
    if deg(&out.equation.a) > cap {
        return Err(too_big());
    }
    Ok(out)
}

/// A reproducible random instance: the mode and all parameters are drawn
/// from a ChaCha8 stream seeded with `seed`, retrying up to 256 times until
/// the preconditions hold and `deg A ≤ caps.max_deg_a`.
pub fn random_instance<R: RandomRing>(seed: u64, caps: Caps) -> Result<Generated<R>> {
    random_instance_with(seed, caps, None)
}

/// As [`random_instance`] with a fixed mode.
pub fn random_instance_with<R: RandomRing>(
    seed: u64,
    caps: Caps,
    mode: Option<Mode>,
) -> Result<Generated<R>> {
    if caps.max_deg_a < R::MIN_NONVANISHING_DEGREE {
        return Err(Error::Precondition(format!(
            "degree cap {} is below the smallest curve degree {}",
            caps.max_deg_a,
            R::MIN_NONVANISHING_DEGREE
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let modes = [
        Mode::Single,
        Mode::Pair,
        Mode::Proportional,
        Mode::ConjugateSurd,
    ];
    let mut last = None;
    for _ in 0..256 {
        let m = mode.unwrap_or_else(|| *modes.choose(&mut rng).expect("nonempty"));
        match try_random::<R>(&mut rng, m, caps) {
            Ok(g) => return Ok(g),
            Err(e @ Error::Inconsistency(_)) => return Err(e),
            Err(e) => last = Some(e),
        }
    }
    Err(Error::Precondition(format!(
        "no admissible instance after 256 retries (last: {})",
        last.map(|e| e.to_string()).unwrap_or_default()
    )))
}

/// A poly-rational instance whose every solvable constant is rational: the
/// prescribed curves are built from a single curve or a proportional pair
/// with a tabulated ratio, and `A` carries extra linear factors with
/// rational roots.
pub fn rational_root_instance(seed: u64, caps: Caps) -> Result<Generated<Poly<Rational>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cap = caps.max_deg_a;
    for _ in 0..256 {
        let dc = rng.gen_range(0..=1);
        let c = Poly::<Rational>::random_element(&mut rng, dc);
        let p = Poly::<Rational>::random_nonvanishing(&mut rng, 2);
        let attempt = if rng.gen_bool(0.5) {
            let mut m = Poly::constant(small_rational(&mut rng, true));
            for _ in 0..rng.gen_range(1..=3) {
                m = &m * &Poly::<Rational>::random_vanishing_factor(&mut rng);
            }
            if rng.gen_bool(0.5) {
                m = &m * &real_quadratic(&mut rng);
            }
            gen_single(&p, &m, &c)
        } else {
            let (n, d) = RATIO_TABLE[rng.gen_range(0..RATIO_TABLE.len())];
            gen_proportional(&p, &Rational::new(n, d), &c)
        };
        match attempt {
            Ok(g) if deg(&g.equation.a) <= cap => return Ok(g),
            Ok(_) => {}
            Err(e @ Error::Inconsistency(_)) => return Err(e),
            Err(_) => {}
        }
    }
    Err(Error::Precondition(
        "no admissible rational-root instance after 256 retries".into(),
    ))
}

/// Type-erased generation for the command line.
pub fn generate_dyn(
    tag: RingTag,
    seed: u64,
    caps: Caps,
    mode: Option<Mode>,
) -> Result<(crate::equation::DynEquation, Vec<String>)> {
    fn run<R: RandomRing>(
        seed: u64,
        caps: Caps,
        mode: Option<Mode>,
    ) -> Result<(AbelEquation<R>, Vec<String>)>
    where
        crate::equation::DynEquation: From<AbelEquation<R>>,
    {
        let g = random_instance_with::<R>(seed, caps, mode)?;
        let curves = g.curves.iter().map(|c| c.render_p()).collect();
        Ok((g.equation, curves))
    }
    Ok(match tag {
        RingTag::PolyRational => {
            let (e, c) = run::<Poly<Rational>>(seed, caps, mode)?;
            (e.into(), c)
        }
        RingTag::PolyGaussian => {
            let (e, c) = run::<Poly<Gaussian>>(seed, caps, mode)?;
            (e.into(), c)
        }
        RingTag::Trig => {
            let (e, c) = run::<TrigPoly<Rational>>(seed, caps, mode)?;
            (e.into(), c)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finder::find_invariant_curves;
    use crate::parse::parse_expr;

    type P = Poly<Rational>;
    type T = TrigPoly<Rational>;

    fn pr(s: &str) -> P {
        parse_expr(s).unwrap()
    }
    fn tr(s: &str) -> T {
        parse_expr(s).unwrap()
    }

    #[test]
    fn single_examples() {
        let g = gen_single(&pr("t^2+1"), &pr("t"), &pr("1")).unwrap();
        assert_eq!(g.equation.a, pr("t^3+t"));
        assert_eq!(g.equation.b, pr("-(t^2+3*t+1)"));
        let g = gen_single(&pr("t^2+1"), &pr("t^2+1"), &pr("1")).unwrap();
        assert_eq!(g.equation.a, pr("(t^2+1)^2"));
        assert_eq!(g.equation.b, pr("-(2*t^2+2*t+2)"));
        let g = gen_single(&tr("cos(t)+2"), &tr("(cos(t)+3)*sin(t)"), &tr("sin(t)")).unwrap();
        assert_eq!(g.equation.a, tr("25/4*sin(t)+5/2*sin(2t)+1/4*sin(3t)"));
        assert_eq!(g.equation.b, tr("-(sin(2t)+4*sin(t))"));
    }

    #[test]
    fn pair_examples() {
        let one = Rational::one();
        let g = gen_pair(&pr("1"), &pr("t^2+1"), &one, &pr("1"), &pr("t")).unwrap();
        assert_eq!(g.equation.a, pr("t*(t^2+1)*(t^2+2)"));
        assert_eq!(g.equation.b, pr("-(2*t^3+5*t)"));
        let g = gen_pair(&tr("1"), &tr("cos(t)+2"), &one, &tr("1"), &tr("sin(t)")).unwrap();
        assert_eq!(g.equation.a, tr("25/4*sin(t)+5/2*sin(2t)+1/4*sin(3t)"));
        assert_eq!(g.curves.len(), 2);
        assert!(matches!(
            gen_pair(&pr("1"), &pr("t"), &one, &pr("1"), &pr("t")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn proportional_examples() {
        let g = gen_proportional(&pr("t^2+1"), &Rational::from_i64(2), &pr("1")).unwrap();
        assert_eq!(g.equation.a, pr("2*(t^2+1)*(t+1)^2"));
        assert_eq!(g.equation.b, pr("-3*(t+1)^2"));
        assert!(gen_proportional(&pr("t^2+1"), &Rational::from_i64(-1), &pr("1")).is_err());
        let g = gen_proportional(&tr("cos(t)+2"), &Rational::from_i64(2), &tr("1")).unwrap();
        let found = find_invariant_curves(&g.equation).unwrap();
        assert_eq!(found, g.curves);
    }

    #[test]
    fn conjugate_surd_mode() {
        let g = gen_conjugate_surd(
            &pr("t^2+1"),
            &Rational::from_i64(2),
            &Rational::from_i64(-1),
            &pr("1"),
        )
        .unwrap();
        assert!(g.curves.iter().all(|c| c.is_surd()));
        assert_eq!(find_invariant_curves(&g.equation).unwrap(), g.curves);
        assert!(gen_conjugate_surd(
            &pr("t^2+1"),
            &Rational::from_i64(3),
            &Rational::from_i64(2),
            &pr("1")
        )
        .is_err());
    }

    #[test]
    fn random_instances_are_deterministic_and_recovered() {
        for seed in 0..10 {
            let a = random_instance::<P>(seed, Caps::default_for(RingTag::PolyRational)).unwrap();
            let b = random_instance::<P>(seed, Caps::default_for(RingTag::PolyRational)).unwrap();
            assert_eq!(a, b);
            let found = find_invariant_curves(&a.equation).unwrap();
            assert!(a.curves.iter().all(|c| found.contains(c)), "seed {seed}");
            let t = random_instance::<T>(seed, Caps::default_for(RingTag::Trig)).unwrap();
            let found = find_invariant_curves(&t.equation).unwrap();
            assert!(
                t.curves.iter().all(|c| found.contains(c)),
                "trig seed {seed}"
            );
            let g =
                random_instance::<Poly<Gaussian>>(seed, Caps::default_for(RingTag::PolyGaussian))
                    .unwrap();
            let found = find_invariant_curves(&g.equation).unwrap();
            assert!(
                g.curves.iter().all(|c| found.contains(c)),
                "gaussian seed {seed}"
            );
        }
        assert!(random_instance::<P>(1, Caps { max_deg_a: 1 }).is_err());
    }
}
