//! Exact scalar fields.
//!
//! Three concrete fields are used throughout the crate:
//!
//! * [`Rational`] — the rationals, backing the real polynomial ring and the
//!   real trigonometric ring.
//! * [`Gaussian`] — the Gaussian rationals `re + im·i`, backing the complex
//!   polynomial ring and the Laurent model of trigonometric polynomials.
//! * [`QuadExt`] — one quadratic extension `a + b·√d` over either of the
//!   above, used when the proportionality constant of an invariant curve is
//!   irrational.
//!
//! All arithmetic is exact. Rationals are always kept in lowest terms with a
//! positive denominator (this is what `num_rational` does on construction).

use std::cmp::Ordering;
use std::fmt::{self, Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A commutative field with exact arithmetic.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn from_rational(q: &Rational) -> Self;
    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_i64(n))
    }
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
    /// Complex conjugation; the identity on real fields.
    fn conj(&self) -> Self;
    fn to_c64(&self) -> Complex64;
    /// Total order used only to make outputs canonical. It is not required
    /// to be compatible with the field operations.
    fn canonical_cmp(&self, other: &Self) -> Ordering;
    /// Report serialization: `"num/den"` for rationals, `"a/b+c/d*i"` for
    /// Gaussian rationals.
    fn encode(&self) -> String;
    /// A form accepted by the expression grammar, parenthesized when it is
    /// not a single signed literal.
    fn expr(&self) -> String;
    /// The value as a rational number, when it is one.
    fn as_rational(&self) -> Option<Rational> {
        None
    }
}

/// Base fields (not extensions) support exact square roots and the
/// normalization of radicands.
pub trait BaseField: Field {
    fn sqrt_exact(&self) -> Option<Self>;
    /// Split `self = f² · r` with `r` as small as cheaply possible
    /// (square-free for rationals of moderate size).
    fn split_radicand(&self) -> (Self, Self);
    /// Whether `√self` is a real number.
    fn has_real_sqrt(&self) -> bool;
    /// Inverse of [`Field::encode`].
    fn decode(s: &str) -> Option<Self>;
}

/// Real fields that can be complexified; required for the Laurent model of
/// trigonometric polynomials.
pub trait RealField: Field {
    type Complex: Field;
    fn complexify(&self) -> Self::Complex;
    fn from_parts(re: &Self, im: &Self) -> Self::Complex;
    fn re(c: &Self::Complex) -> Self;
    fn im(c: &Self::Complex) -> Self;
    fn to_f64(&self) -> f64 {
        self.to_c64().re
    }
}

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_i64(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn from_ratio(num: BigInt, den: BigInt) -> Self {
        Rational(BigRational::new(num, den))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn signum(&self) -> i32 {
        if self.0.is_zero() {
            0
        } else if self.0.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or_else(|| {
            // huge magnitudes: go through the float quotient of the parts
            let n = self.numer().to_f64().unwrap_or(f64::NAN);
            let d = self.denom().to_f64().unwrap_or(f64::NAN);
            n / d
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Rational::from_i64(1);
        for _ in 0..e {
            out = out * self.clone();
        }
        out
    }

    /// Parse `"n"` or `"n/d"`.
    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().ok()?;
                let d: BigInt = d.trim().parse().ok()?;
                if d.is_zero() {
                    return None;
                }
                Some(Rational::from_ratio(n, d))
            }
            None => s.parse::<BigInt>().ok().map(Rational::from_bigint),
        }
    }
}

fn is_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Split a nonzero integer as `s² · r`. Trial division is exhaustive up to
/// 10^6; beyond that a residual factor may keep a square part.
fn split_square_int(n: &BigInt) -> (BigInt, BigInt) {
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut m = n.abs();
    let mut s = BigInt::one();
    let mut r = BigInt::one();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(1_000_000);
    while &p * &p <= m && p <= limit {
        let mut e = 0u32;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        for _ in 0..e / 2 {
            s *= &p;
        }
        if e % 2 == 1 {
            r *= &p;
        }
        p += 1;
    }
    if let Some(root) = is_square(&m) {
        s *= root;
    } else {
        r *= m;
    }
    (s, r * sign)
}

impl Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

macro_rules! forward_binop {
    ($ty:ident, $trait:ident, $method:ident) => {
        impl $trait for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                $ty($trait::$method(self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Rational, Add, add);
forward_binop!(Rational, Sub, sub);
forward_binop!(Rational, Mul, mul);
forward_binop!(Rational, Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Field for Rational {
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.to_f64(), 0.0)
    }
    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }
    fn encode(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
    fn expr(&self) -> String {
        self.to_string()
    }
}

impl BaseField for Rational {
    fn decode(s: &str) -> Option<Self> {
        Rational::parse(s)
    }
    fn sqrt_exact(&self) -> Option<Self> {
        let n = is_square(self.numer())?;
        let d = is_square(self.denom())?;
        Some(Rational::from_ratio(n, d))
    }

    fn split_radicand(&self) -> (Self, Self) {
        // n/d = n·d / d²
        let nd = self.numer() * self.denom();
        let (s, r) = split_square_int(&nd);
        (
            Rational::from_ratio(s, self.denom().clone()),
            Rational::from_bigint(r),
        )
    }

    fn has_real_sqrt(&self) -> bool {
        !self.is_negative()
    }
}

impl RealField for Rational {
    type Complex = Gaussian;
    fn complexify(&self) -> Gaussian {
        Gaussian::new(self.clone(), Rational::zero())
    }
    fn from_parts(re: &Self, im: &Self) -> Gaussian {
        Gaussian::new(re.clone(), im.clone())
    }
    fn re(c: &Gaussian) -> Self {
        c.re.clone()
    }
    fn im(c: &Gaussian) -> Self {
        c.im.clone()
    }
    fn to_f64(&self) -> f64 {
        Rational::to_f64(self)
    }
}

// ---------------------------------------------------------------------------
// Gaussian rationals
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gaussian {
    pub re: Rational,
    pub im: Rational,
}

impl Gaussian {
    pub fn new(re: Rational, im: Rational) -> Self {
        Gaussian { re, im }
    }

    pub fn i() -> Self {
        Gaussian::new(Rational::zero(), Rational::one())
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn norm(&self) -> Rational {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }

    /// Parse the `"a/b+c/d*i"` report encoding.
    pub fn parse_encoded(s: &str) -> Option<Self> {
        let s = s.trim();
        let body = match s.strip_suffix("*i") {
            Some(b) => b,
            None => return Rational::parse(s).map(|r| Gaussian::new(r, Rational::zero())),
        };
        // split at the last sign that is not the leading one
        let bytes = body.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            if bytes[k] == b'+' || bytes[k] == b'-' {
                split = Some(k);
                break;
            }
        }
        let k = split?;
        let re = Rational::parse(&body[..k])?;
        let im_str = &body[k..];
        let im = Rational::parse(im_str.trim_start_matches('+'))?;
        Some(Gaussian::new(re, im))
    }
}

impl Debug for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}*i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}-{}*i", self.re, self.im.abs())
        } else {
            write!(f, "{}+{}*i", self.re, self.im)
        }
    }
}

impl Add for Gaussian {
    type Output = Gaussian;
    fn add(self, rhs: Gaussian) -> Gaussian {
        Gaussian::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for Gaussian {
    type Output = Gaussian;
    fn sub(self, rhs: Gaussian) -> Gaussian {
        Gaussian::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for Gaussian {
    type Output = Gaussian;
    fn mul(self, rhs: Gaussian) -> Gaussian {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Gaussian::new(self.re * rhs.re, Rational::zero());
        }
        let re = self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone();
        let im = self.re * rhs.im + self.im * rhs.re;
        Gaussian::new(re, im)
    }
}

impl Div for Gaussian {
    type Output = Gaussian;
    fn div(self, rhs: Gaussian) -> Gaussian {
        assert!(!Field::is_zero(&rhs), "division by zero Gaussian rational");
        if rhs.im.is_zero() {
            return Gaussian::new(self.re / rhs.re.clone(), self.im / rhs.re);
        }
        let n = rhs.norm();
        let c = Field::conj(&rhs);
        let p = self * c;
        Gaussian::new(p.re / n.clone(), p.im / n)
    }
}

impl Neg for Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian::new(-self.re, -self.im)
    }
}

impl Field for Gaussian {
    fn as_rational(&self) -> Option<Rational> {
        self.im.is_zero().then(|| self.re.clone())
    }
    fn zero() -> Self {
        Gaussian::new(Rational::zero(), Rational::zero())
    }
    fn one() -> Self {
        Gaussian::new(Rational::one(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn from_rational(q: &Rational) -> Self {
        Gaussian::new(q.clone(), Rational::zero())
    }
    fn conj(&self) -> Self {
        Gaussian::new(self.re.clone(), -self.im.clone())
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.re.cmp(&other.re).then_with(|| self.im.cmp(&other.im))
    }
    fn encode(&self) -> String {
        let sign = if self.im.is_negative() { "-" } else { "+" };
        format!("{}{}{}*i", self.re.encode(), sign, self.im.abs().encode())
    }
    fn expr(&self) -> String {
        if self.im.is_zero() {
            self.re.to_string()
        } else if self.re.is_zero() {
            format!("{}*i", self.im)
        } else {
            format!("({})", self)
        }
    }
}

impl BaseField for Gaussian {
    fn decode(s: &str) -> Option<Self> {
        Gaussian::parse_encoded(s)
    }
    fn sqrt_exact(&self) -> Option<Self> {
        if self.im.is_zero() {
            if !self.re.is_negative() {
                return self
                    .re
                    .sqrt_exact()
                    .map(|s| Gaussian::new(s, Rational::zero()));
            }
            return (-self.re.clone())
                .sqrt_exact()
                .map(|s| Gaussian::new(Rational::zero(), s));
        }
        // (a + bi)² = x + yi  ⇒  a² = (x + |z|)/2, b = y / 2a
        let modulus = self.norm().sqrt_exact()?;
        let two = Rational::from_i64(2);
        let a2 = (self.re.clone() + modulus) / two.clone();
        let a = a2.sqrt_exact()?;
        if a.is_zero() {
            return None;
        }
        let b = self.im.clone() / (two * a.clone());
        Some(Gaussian::new(a, b))
    }

    fn split_radicand(&self) -> (Self, Self) {
        if self.im.is_zero() {
            let (f, r) = self.re.split_radicand();
            return (Gaussian::from_rational(&f), Gaussian::from_rational(&r));
        }
        // z = c·(P' + iQ')/L  ⇒  √z = √(c·L·(P' + iQ')) / L, and c·L = s²·r0
        let l = self.re.denom().lcm(self.im.denom());
        let p = (self.re.clone() * Rational::from_bigint(l.clone()))
            .numer()
            .clone();
        let q = (self.im.clone() * Rational::from_bigint(l.clone()))
            .numer()
            .clone();
        let content = p.gcd(&q);
        let (s, r0) = split_square_int(&(&content * &l));
        let r = Gaussian::new(
            Rational::from_bigint(&r0 * (&p / &content)),
            Rational::from_bigint(&r0 * (&q / &content)),
        );
        let f = Gaussian::from_rational(&Rational::from_ratio(s, l));
        (f, r)
    }

    fn has_real_sqrt(&self) -> bool {
        self.im.is_zero() && !self.re.is_negative()
    }
}

// ---------------------------------------------------------------------------
// Quadratic extension
// ---------------------------------------------------------------------------

/// `a + b·√d` in a fixed extension `F(√d)`.
///
/// `d` is `None` for elements known to lie in the base field. Arithmetic
/// between elements of two *different* extensions is a logic error and
/// panics; every equation has at most one proportional pair, so at most one
/// radicand ever appears per analysis.
#[derive(Clone)]
pub struct QuadExt<F> {
    pub a: F,
    pub b: F,
    pub d: Option<F>,
}

impl<F: Field> QuadExt<F> {
    pub fn base(a: F) -> Self {
        QuadExt {
            a,
            b: F::zero(),
            d: None,
        }
    }

    pub fn surd(a: F, b: F, d: F) -> Self {
        if b.is_zero() {
            QuadExt::base(a)
        } else {
            QuadExt { a, b, d: Some(d) }
        }
    }

    pub fn is_base(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_base(&self) -> Option<&F> {
        if self.b.is_zero() {
            Some(&self.a)
        } else {
            None
        }
    }

    /// The Galois conjugate `a − b·√d`.
    pub fn galois_conj(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d.clone(),
        }
    }

    pub fn radicand(&self) -> Option<&F> {
        if self.b.is_zero() {
            None
        } else {
            self.d.as_ref()
        }
    }

    fn merged(x: &Option<F>, y: &Option<F>) -> Option<F> {
        match (x, y) {
            (None, None) => None,
            (Some(d), None) | (None, Some(d)) => Some(d.clone()),
            (Some(d1), Some(d2)) => {
                assert!(d1 == d2, "mixed quadratic extensions √{d1} and √{d2}");
                Some(d1.clone())
            }
        }
    }

    fn norm(&self) -> F {
        match &self.d {
            Some(d) => {
                self.a.clone() * self.a.clone() - self.b.clone() * self.b.clone() * d.clone()
            }
            None => self.a.clone() * self.a.clone(),
        }
    }
}

impl<F: Field> PartialEq for QuadExt<F> {
    fn eq(&self, other: &Self) -> bool {
        if self.a != other.a || self.b != other.b {
            return false;
        }
        if self.b.is_zero() {
            return true;
        }
        self.d == other.d
    }
}

impl<F: Field> Debug for QuadExt<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<F: Field> Display for QuadExt<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.radicand() {
            None => write!(f, "{}", self.a),
            Some(d) => {
                if self.a.is_zero() {
                    write!(f, "{}*sqrt({})", self.b.expr(), d.expr())
                } else {
                    write!(
                        f,
                        "({} + {}*sqrt({}))",
                        self.a.expr(),
                        self.b.expr(),
                        d.expr()
                    )
                }
            }
        }
    }
}

impl<F: Field> Add for QuadExt<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let d = Self::merged(&self.d, &rhs.d);
        QuadExt {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
            d,
        }
    }
}

impl<F: Field> Sub for QuadExt<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let d = Self::merged(&self.d, &rhs.d);
        QuadExt {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
            d,
        }
    }
}

impl<F: Field> Mul for QuadExt<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let d = Self::merged(&self.d, &rhs.d);
        if self.b.is_zero() {
            return QuadExt {
                a: self.a.clone() * rhs.a,
                b: self.a * rhs.b,
                d,
            };
        }
        if rhs.b.is_zero() {
            return QuadExt {
                a: self.a * rhs.a.clone(),
                b: self.b * rhs.a,
                d,
            };
        }
        let dd = d.clone().expect("radicand present when b is nonzero");
        QuadExt {
            a: self.a.clone() * rhs.a.clone() + self.b.clone() * rhs.b.clone() * dd,
            b: self.a * rhs.b + self.b * rhs.a,
            d,
        }
    }
}

impl<F: Field> Div for QuadExt<F> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(
            !Field::is_zero(&rhs),
            "division by zero in quadratic extension"
        );
        let n = rhs.norm();
        let num = self * rhs.galois_conj();
        QuadExt {
            a: num.a / n.clone(),
            b: num.b / n,
            d: num.d,
        }
    }
}

impl<F: Field> Neg for QuadExt<F> {
    type Output = Self;
    fn neg(self) -> Self {
        QuadExt {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl<F: Field> Field for QuadExt<F> {
    fn as_rational(&self) -> Option<Rational> {
        self.as_base().and_then(|a| a.as_rational())
    }
    fn zero() -> Self {
        QuadExt::base(F::zero())
    }
    fn one() -> Self {
        QuadExt::base(F::one())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn from_rational(q: &Rational) -> Self {
        QuadExt::base(F::from_rational(q))
    }
    /// Assumes the radicand is real, which holds for every extension built
    /// over a real ring.
    fn conj(&self) -> Self {
        QuadExt {
            a: self.a.conj(),
            b: self.b.conj(),
            d: self.d.clone(),
        }
    }
    fn to_c64(&self) -> Complex64 {
        match self.radicand() {
            None => self.a.to_c64(),
            Some(d) => self.a.to_c64() + self.b.to_c64() * d.to_c64().sqrt(),
        }
    }
    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.a
            .canonical_cmp(&other.a)
            .then_with(|| self.b.canonical_cmp(&other.b))
    }
    fn encode(&self) -> String {
        match self.radicand() {
            None => self.a.encode(),
            Some(d) => format!(
                "{}+({})*sqrt({})",
                self.a.encode(),
                self.b.encode(),
                d.encode()
            ),
        }
    }
    fn expr(&self) -> String {
        match self.radicand() {
            None => self.a.expr(),
            Some(_) => format!("{}", self),
        }
    }
}

impl RealField for QuadExt<Rational> {
    type Complex = QuadExt<Gaussian>;
    fn complexify(&self) -> QuadExt<Gaussian> {
        QuadExt {
            a: self.a.complexify(),
            b: self.b.complexify(),
            d: self.d.as_ref().map(|d| d.complexify()),
        }
    }
    fn from_parts(re: &Self, im: &Self) -> QuadExt<Gaussian> {
        re.complexify() + QuadExt::base(Gaussian::i()) * im.complexify()
    }
    fn re(c: &QuadExt<Gaussian>) -> Self {
        QuadExt {
            a: c.a.re.clone(),
            b: c.b.re.clone(),
            d: c.d.as_ref().map(|d| d.re.clone()),
        }
    }
    fn im(c: &QuadExt<Gaussian>) -> Self {
        QuadExt {
            a: c.a.im.clone(),
            b: c.b.im.clone(),
            d: c.d.as_ref().map(|d| d.re.clone()),
        }
    }
}

/// Exact roots of a monic quadratic or linear polynomial given by its
/// coefficients `[c0, c1, (1)]` (ascending). Roots outside the base field are
/// returned as surds; when `real_only` is set, surds with a negative radicand
/// are dropped.
pub fn roots_upto_quadratic<F: BaseField>(coeffs: &[F], real_only: bool) -> Vec<QuadExt<F>> {
    match coeffs.len() {
        0 | 1 => Vec::new(),
        2 => vec![QuadExt::base(-coeffs[0].clone() / coeffs[1].clone())],
        3 => {
            let lead = coeffs[2].clone();
            let beta = coeffs[1].clone() / lead.clone();
            let gamma = coeffs[0].clone() / lead;
            let two = F::from_i64(2);
            let disc = beta.clone() * beta.clone() - F::from_i64(4) * gamma;
            let half_beta = beta / two.clone();
            if let Some(s) = disc.sqrt_exact() {
                let r1 = -half_beta.clone() - s.clone() / two.clone();
                let r2 = -half_beta + s / two;
                if r1 == r2 {
                    vec![QuadExt::base(r1)]
                } else {
                    vec![QuadExt::base(r1), QuadExt::base(r2)]
                }
            } else {
                if real_only && !disc.has_real_sqrt() {
                    return Vec::new();
                }
                let (f, r) = disc.split_radicand();
                let half = f / two;
                vec![
                    QuadExt::surd(-half_beta.clone(), -half.clone(), r.clone()),
                    QuadExt::surd(-half_beta, half, r),
                ]
            }
        }
        _ => panic!("roots_upto_quadratic: degree > 2"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn rationals_are_reduced() {
        let r = q(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(r.encode(), "-3/2");
        assert_eq!(Rational::parse("-3/2"), Some(r));
        assert_eq!(Rational::parse("1/0"), None);
    }

    #[test]
    fn gaussian_arithmetic() {
        let z = Gaussian::new(q(1, 2), q(3, 1));
        let w = Gaussian::new(q(-2, 1), q(1, 3));
        let p = z.clone() * w.clone();
        assert_eq!(p.clone() / w.clone(), z);
        assert_eq!(Gaussian::i() * Gaussian::i(), -Gaussian::one());
        assert_eq!(Gaussian::parse_encoded(&z.encode()), Some(z.clone()));
        assert_eq!(Gaussian::parse_encoded(&(-z.clone()).encode()), Some(-z));
    }

    #[test]
    fn gaussian_square_roots() {
        // (2 + 3i)² = -5 + 12i
        let z = Gaussian::new(q(-5, 1), q(12, 1));
        let s = z.sqrt_exact().unwrap();
        assert_eq!(s.clone() * s, z);
        assert_eq!(
            Gaussian::new(q(-4, 9), q(0, 1)).sqrt_exact(),
            Some(Gaussian::new(q(0, 1), q(2, 3)))
        );
        assert!(Gaussian::new(q(2, 1), q(0, 1)).sqrt_exact().is_none());
        assert!(Gaussian::i().sqrt_exact().is_none());
    }

    #[test]
    fn radicand_split() {
        let (f, r) = q(12, 1).split_radicand();
        assert_eq!((f, r), (q(2, 1), q(3, 1)));
        let (f, r) = q(8, 9).split_radicand();
        assert_eq!(f.clone() * f * r.clone(), q(8, 9));
        assert_eq!(r, q(2, 1));
        let z = Gaussian::new(q(3, 2), q(1, 4));
        let (f, r) = z.split_radicand();
        assert_eq!(f.clone() * f * r, z);
    }

    #[test]
    fn surd_arithmetic_is_exact() {
        let s = QuadExt::surd(q(1, 1), q(1, 1), q(2, 1)); // 1 + √2
        let t = s.galois_conj(); // 1 − √2
        assert_eq!(s.clone() * t.clone(), QuadExt::base(q(-1, 1)));
        assert_eq!(s.clone() + t, QuadExt::base(q(2, 1)));
        let inv = s.inv();
        assert_eq!(inv * s, QuadExt::one());
    }

    #[test]
    fn quadratic_roots() {
        // K² − 3K + 2
        let r = roots_upto_quadratic(&[q(2, 1), q(-3, 1), q(1, 1)], true);
        assert_eq!(r, vec![QuadExt::base(q(1, 1)), QuadExt::base(q(2, 1))]);
        // K² − 2K − 1 → 1 ± √2
        let r = roots_upto_quadratic(&[q(-1, 1), q(-2, 1), q(1, 1)], true);
        assert_eq!(r.len(), 2);
        for k in &r {
            let v = k.clone() * k.clone() - QuadExt::base(q(2, 1)) * k.clone() - QuadExt::one();
            assert!(Field::is_zero(&v));
        }
        // K² + 1 has no real roots
        assert!(roots_upto_quadratic(&[q(1, 1), q(0, 1), q(1, 1)], true).is_empty());
        let g = [Gaussian::one(), Gaussian::zero(), Gaussian::one()];
        let r = roots_upto_quadratic(&g, false);
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|k| k.is_base()));
    }
}
