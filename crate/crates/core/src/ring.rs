//! The coefficient rings of an Abel equation behind one interface.
//!
//! [`CurveRing`] is what the structural checks need (arithmetic, exact
//! division, gcd, normalization, coefficient vectors). [`AbelRing`] adds what
//! only input rings have: parsing atoms, real nonvanishing, divisor
//! enumeration, and a lifted ring over a quadratic extension that holds
//! curves with an irrational proportionality constant.

use std::cmp::Ordering;
use std::fmt::{Debug, Display};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::degree::Degree;
use crate::error::Result;
use crate::factor::{factor_gaussian, factor_rational};
use crate::poly::{gaussian_nonvanishing, rational_nonvanishing, Poly};
use crate::scalar::{BaseField, Field, Gaussian, QuadExt, Rational};
use crate::trig::{divisor_orbits, laurent, TrigPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingTag {
    #[serde(rename = "poly-rational")]
    PolyRational,
    #[serde(rename = "poly-gaussian")]
    PolyGaussian,
    #[serde(rename = "trig")]
    Trig,
}

impl RingTag {
    pub fn name(self) -> &'static str {
        match self {
            RingTag::PolyRational => "poly-rational",
            RingTag::PolyGaussian => "poly-gaussian",
            RingTag::Trig => "trig",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.trim() {
            "poly-rational" => Some(RingTag::PolyRational),
            "poly-gaussian" => Some(RingTag::PolyGaussian),
            "trig" => Some(RingTag::Trig),
            _ => None,
        }
    }

    pub fn is_trig(self) -> bool {
        self == RingTag::Trig
    }
}

impl Display for RingTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

pub trait CurveRing: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    type Scalar: Field;

    fn zero() -> Self;
    fn one() -> Self;
    fn constant(c: Self::Scalar) -> Self;
    fn is_zero(&self) -> bool;
    fn is_constant(&self) -> bool;
    fn degree(&self) -> Degree;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self {
        Self::zero().minus(self)
    }
    fn scale(&self, c: &Self::Scalar) -> Self;
    fn derivative(&self) -> Self;
    /// Exact quotient, `None` when `d` does not divide.
    fn exact_div(&self, d: &Self) -> Result<Option<Self>>;
    /// Normalized greatest common divisor.
    fn ring_gcd(&self, o: &Self) -> Result<Self>;
    /// Split into a unit and the canonical associate.
    fn normalize(&self) -> (Self::Scalar, Self);
    /// Coordinates in the standard basis of elements of degree ≤ `n`.
    fn coefficient_vector(&self, n: usize) -> Vec<Self::Scalar>;
    /// Euclidean division, available only in polynomial rings.
    fn euclidean_divrem(&self, _d: &Self) -> Option<Result<(Self, Self)>> {
        None
    }
    fn eval_c64(&self, t: Complex64) -> Complex64;
    fn render(&self) -> String;
    fn cmp_canonical(&self, o: &Self) -> Ordering;
}

pub trait AbelRing: CurveRing<Scalar = <Self as AbelRing>::Base> {
    type Base: BaseField;
    /// The same ring over `Base(√d)`.
    type Ext: CurveRing<Scalar = QuadExt<Self::Base>>;

    const TAG: RingTag;

    fn lift(&self) -> Self::Ext;
    /// Inverse of [`lift`](Self::lift) for elements with coefficients in the base field.
    fn unlift(e: &Self::Ext) -> Option<Self>;

    /// `i`, when the scalar field contains it.
    fn atom_i() -> Option<Self>;
    /// `t`, in polynomial rings.
    fn atom_t() -> Option<Self>;
    /// `cos(n t)` / `sin(n t)`, in the trig ring.
    fn atom_harmonic(cosine: bool, n: usize) -> Option<Self>;

    /// Whether the element has no real zero.
    fn nonvanishing(&self) -> Result<bool>;

    /// All normalized non-constant divisors that have no real zero, one per
    /// class of associates, in canonical order.
    fn nonvanishing_divisors(&self) -> Result<Vec<Self>>;

    /// Every normalized non-constant divisor, vanishing or not (exhaustive
    /// enumeration used by oracles and diagnostics).
    fn all_divisors(&self) -> Result<Vec<Self>>;

    /// Whether proportionality constants must be real numbers.
    fn real_constants_only() -> bool;

    /// Mean value over one period, in the periodic ring.
    fn period_mean(&self) -> Option<Self::Base> {
        None
    }
}

/// All products `Π fᵢ^{eᵢ}`, `0 ≤ eᵢ ≤ mᵢ`, except the empty product.
fn divisor_products<R: CurveRing>(factors: &[(R, usize)]) -> Vec<R> {
    let mut acc = vec![R::one()];
    for (f, m) in factors {
        let mut next = Vec::with_capacity(acc.len() * (m + 1));
        for d in &acc {
            let mut cur = d.clone();
            next.push(cur.clone());
            for _ in 0..*m {
                cur = cur.times(f);
                next.push(cur.clone());
            }
        }
        acc = next;
    }
    let mut out: Vec<R> = acc
        .into_iter()
        .filter(|d| !d.is_constant())
        .map(|d| d.normalize().1)
        .collect();
    out.sort_by(|a, b| a.cmp_canonical(b));
    out.dedup();
    out
}

// ---------------------------------------------------------------------------
// Polynomial rings
// ---------------------------------------------------------------------------

impl<F: Field> CurveRing for Poly<F> {
    type Scalar = F;

    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn constant(c: F) -> Self {
        Poly::constant(c)
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn is_constant(&self) -> bool {
        Poly::is_constant(self)
    }
    fn degree(&self) -> Degree {
        Poly::degree(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scale(&self, c: &F) -> Self {
        Poly::scale(self, c)
    }
    fn derivative(&self) -> Self {
        Poly::derivative(self)
    }
    fn exact_div(&self, d: &Self) -> Result<Option<Self>> {
        Poly::exact_div(self, d)
    }
    fn ring_gcd(&self, o: &Self) -> Result<Self> {
        self.gcd(o)
    }
    fn normalize(&self) -> (F, Self) {
        self.monic()
    }
    fn coefficient_vector(&self, n: usize) -> Vec<F> {
        (0..=n).map(|i| self.coeff(i)).collect()
    }
    fn euclidean_divrem(&self, d: &Self) -> Option<Result<(Self, Self)>> {
        Some(self.divrem(d))
    }
    fn eval_c64(&self, t: Complex64) -> Complex64 {
        Poly::eval_c64(self, t)
    }
    fn render(&self) -> String {
        Poly::render(self)
    }
    fn cmp_canonical(&self, o: &Self) -> Ordering {
        self.canonical_cmp(o)
    }
}

fn poly_lift<F: Field>(p: &Poly<F>) -> Poly<QuadExt<F>> {
    p.map(|c| QuadExt::base(c.clone()))
}

fn poly_unlift<F: Field>(p: &Poly<QuadExt<F>>) -> Option<Poly<F>> {
    let cs: Option<Vec<F>> = p.coeffs().iter().map(|c| c.as_base().cloned()).collect();
    cs.map(Poly::new)
}

impl AbelRing for Poly<Rational> {
    type Base = Rational;
    type Ext = Poly<QuadExt<Rational>>;
    const TAG: RingTag = RingTag::PolyRational;

    fn lift(&self) -> Self::Ext {
        poly_lift(self)
    }
    fn unlift(e: &Self::Ext) -> Option<Self> {
        poly_unlift(e)
    }
    fn atom_i() -> Option<Self> {
        None
    }
    fn atom_t() -> Option<Self> {
        Some(Poly::t())
    }
    fn atom_harmonic(_: bool, _: usize) -> Option<Self> {
        None
    }
    fn nonvanishing(&self) -> Result<bool> {
        rational_nonvanishing(self)
    }
    fn nonvanishing_divisors(&self) -> Result<Vec<Self>> {
        let fac = factor_rational(self)?;
        let mut keep = Vec::new();
        for (f, m) in fac.factors {
            if rational_nonvanishing(&f)? {
                keep.push((f, m));
            }
        }
        Ok(divisor_products(&keep))
    }
    fn all_divisors(&self) -> Result<Vec<Self>> {
        Ok(divisor_products(&factor_rational(self)?.factors))
    }
    fn real_constants_only() -> bool {
        true
    }
}

impl AbelRing for Poly<Gaussian> {
    type Base = Gaussian;
    type Ext = Poly<QuadExt<Gaussian>>;
    const TAG: RingTag = RingTag::PolyGaussian;

    fn lift(&self) -> Self::Ext {
        poly_lift(self)
    }
    fn unlift(e: &Self::Ext) -> Option<Self> {
        poly_unlift(e)
    }
    fn atom_i() -> Option<Self> {
        Some(Poly::constant(Gaussian::i()))
    }
    fn atom_t() -> Option<Self> {
        Some(Poly::t())
    }
    fn atom_harmonic(_: bool, _: usize) -> Option<Self> {
        None
    }
    fn nonvanishing(&self) -> Result<bool> {
        gaussian_nonvanishing(self)
    }
    fn nonvanishing_divisors(&self) -> Result<Vec<Self>> {
        let fac = factor_gaussian(self)?;
        let mut keep = Vec::new();
        for (f, m) in fac.factors {
            if gaussian_nonvanishing(&f)? {
                keep.push((f, m));
            }
        }
        Ok(divisor_products(&keep))
    }
    fn all_divisors(&self) -> Result<Vec<Self>> {
        Ok(divisor_products(&factor_gaussian(self)?.factors))
    }
    fn real_constants_only() -> bool {
        false
    }
}

// ---------------------------------------------------------------------------
// Trigonometric ring
// ---------------------------------------------------------------------------

impl<F: crate::scalar::RealField> CurveRing for TrigPoly<F> {
    type Scalar = F;

    fn zero() -> Self {
        TrigPoly::zero()
    }
    fn one() -> Self {
        TrigPoly::one()
    }
    fn constant(c: F) -> Self {
        TrigPoly::constant(c)
    }
    fn is_zero(&self) -> bool {
        TrigPoly::is_zero(self)
    }
    fn is_constant(&self) -> bool {
        TrigPoly::is_constant(self)
    }
    fn degree(&self) -> Degree {
        TrigPoly::degree(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scale(&self, c: &F) -> Self {
        TrigPoly::scale(self, c)
    }
    fn derivative(&self) -> Self {
        TrigPoly::derivative(self)
    }
    fn exact_div(&self, d: &Self) -> Result<Option<Self>> {
        TrigPoly::exact_div(self, d)
    }
    fn ring_gcd(&self, o: &Self) -> Result<Self> {
        self.gcd(o)
    }
    fn normalize(&self) -> (F, Self) {
        TrigPoly::normalize(self)
    }
    fn coefficient_vector(&self, n: usize) -> Vec<F> {
        TrigPoly::coefficient_vector(self, n)
    }
    fn eval_c64(&self, t: Complex64) -> Complex64 {
        TrigPoly::eval_c64(self, t)
    }
    fn render(&self) -> String {
        TrigPoly::render(self)
    }
    fn cmp_canonical(&self, o: &Self) -> Ordering {
        self.canonical_cmp(o)
    }
}

impl AbelRing for TrigPoly<Rational> {
    type Base = Rational;
    type Ext = TrigPoly<QuadExt<Rational>>;
    const TAG: RingTag = RingTag::Trig;

    fn lift(&self) -> Self::Ext {
        self.map(|c| QuadExt::base(c.clone()))
    }
    fn unlift(e: &Self::Ext) -> Option<Self> {
        let a0 = e.a0().as_base()?.clone();
        let mut h = Vec::new();
        for (a, b) in e.harmonics() {
            h.push((a.as_base()?.clone(), b.as_base()?.clone()));
        }
        Some(TrigPoly::new(a0, h))
    }
    fn atom_i() -> Option<Self> {
        None
    }
    fn atom_t() -> Option<Self> {
        None
    }
    fn atom_harmonic(cosine: bool, n: usize) -> Option<Self> {
        Some(if cosine {
            TrigPoly::cos(n)
        } else {
            TrigPoly::sin(n)
        })
    }
    fn nonvanishing(&self) -> Result<bool> {
        laurent::nonvanishing(self)
    }
    fn nonvanishing_divisors(&self) -> Result<Vec<Self>> {
        if self.is_constant() {
            return Ok(Vec::new());
        }
        let fac = divisor_orbits(self)?;
        let keep: Vec<_> = fac
            .orbits
            .into_iter()
            .filter(|o| !o.vanishing)
            .map(|o| (o.factor, o.multiplicity))
            .collect();
        Ok(divisor_products(&keep))
    }
    fn period_mean(&self) -> Option<Rational> {
        Some(self.a0().clone())
    }
    fn all_divisors(&self) -> Result<Vec<Self>> {
        if self.is_constant() {
            return Ok(Vec::new());
        }
        let fac = divisor_orbits(self)?;
        let all: Vec<_> = fac
            .orbits
            .into_iter()
            .map(|o| (o.factor, o.multiplicity))
            .collect();
        Ok(divisor_products(&all))
    }
    fn real_constants_only() -> bool {
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_enumeration_examples() {
        let a: Poly<Rational> = Poly::from_i64s(&[0, 1, 0, 1]);
        assert_eq!(
            a.nonvanishing_divisors().unwrap(),
            vec![Poly::from_i64s(&[1, 0, 1])]
        );
        let g = a.to_gaussian();
        let ds = g.nonvanishing_divisors().unwrap();
        let i = Gaussian::i();
        assert_eq!(ds.len(), 3);
        assert!(ds.contains(&Poly::linear_root(i.clone())));
        assert!(ds.contains(&Poly::linear_root(-i)));
        assert!(ds.contains(&Poly::from_i64s(&[1, 0, 1]).to_gaussian()));
        assert_eq!(a.all_divisors().unwrap().len(), 3);
    }

    #[test]
    fn trig_divisor_enumeration() {
        type T = TrigPoly<Rational>;
        let c2 = &T::cos(1) + &T::constant(Rational::from_i64(2));
        let c3 = &T::cos(1) + &T::constant(Rational::from_i64(3));
        let a = &(&T::sin(1) * &c2) * &c3;
        let ds = a.nonvanishing_divisors().unwrap();
        assert_eq!(ds, vec![c2.clone(), c3.clone(), (&c2 * &c3).normalize().1]);
    }
}
