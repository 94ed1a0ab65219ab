//! Real trigonometric polynomials `a₀ + Σ aₙ cos(nt) + bₙ sin(nt)`.
//!
//! Arithmetic is done directly on Fourier coefficients. Division, gcd and
//! factorization go through the Laurent model `z^{-N} P(z)`, `z = e^{it}`,
//! see [`laurent`].

pub mod laurent;
mod orbits;

pub use orbits::{divisor_orbits, OrbitFactor, TrigFactorization};

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::poly::push_term;
use crate::scalar::RealField;

/// A real trigonometric polynomial. `harmonics[n-1] = (aₙ, bₙ)`; the last
/// pair is nonzero, or the list is empty.
#[derive(Clone, PartialEq)]
pub struct TrigPoly<F> {
    a0: F,
    harmonics: Vec<(F, F)>,
}

impl<F: RealField> TrigPoly<F> {
    pub fn new(a0: F, mut harmonics: Vec<(F, F)>) -> Self {
        while harmonics
            .last()
            .is_some_and(|(a, b)| a.is_zero() && b.is_zero())
        {
            harmonics.pop();
        }
        TrigPoly { a0, harmonics }
    }

    pub fn zero() -> Self {
        TrigPoly::constant(F::zero())
    }

    pub fn one() -> Self {
        TrigPoly::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        TrigPoly {
            a0: c,
            harmonics: Vec::new(),
        }
    }

    fn harmonic(n: usize, a: F, b: F) -> Self {
        let mut h = vec![(F::zero(), F::zero()); n];
        h[n - 1] = (a, b);
        TrigPoly::new(F::zero(), h)
    }

    /// `cos(n t)`; `n = 0` gives 1.
    pub fn cos(n: usize) -> Self {
        if n == 0 {
            return TrigPoly::one();
        }
        TrigPoly::harmonic(n, F::one(), F::zero())
    }

    /// `sin(n t)`; `n = 0` gives 0.
    pub fn sin(n: usize) -> Self {
        if n == 0 {
            return TrigPoly::zero();
        }
        TrigPoly::harmonic(n, F::zero(), F::one())
    }

    pub fn a0(&self) -> &F {
        &self.a0
    }

    pub fn harmonics(&self) -> &[(F, F)] {
        &self.harmonics
    }

    /// `(aₙ, bₙ)`, zero beyond the degree; `n = 0` gives `(a₀, 0)`.
    pub fn pair(&self, n: usize) -> (F, F) {
        if n == 0 {
            return (self.a0.clone(), F::zero());
        }
        self.harmonics
            .get(n - 1)
            .cloned()
            .unwrap_or_else(|| (F::zero(), F::zero()))
    }

    pub fn is_zero(&self) -> bool {
        self.harmonics.is_empty() && self.a0.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.harmonics.is_empty()
    }

    pub fn degree(&self) -> Degree {
        if self.is_zero() {
            Degree::NegInfinity
        } else {
            Degree::Finite(self.harmonics.len())
        }
    }

    /// Highest harmonic index, 0 for constants (including zero).
    pub fn deg0(&self) -> usize {
        self.harmonics.len()
    }

    pub fn scale(&self, c: &F) -> Self {
        TrigPoly::new(
            self.a0.clone() * c.clone(),
            self.harmonics
                .iter()
                .map(|(a, b)| (a.clone() * c.clone(), b.clone() * c.clone()))
                .collect(),
        )
    }

    pub fn derivative(&self) -> Self {
        TrigPoly::new(
            F::zero(),
            self.harmonics
                .iter()
                .enumerate()
                .map(|(i, (a, b))| {
                    let n = F::from_i64(i as i64 + 1);
                    (b.clone() * n.clone(), -(a.clone() * n))
                })
                .collect(),
        )
    }

    /// Split into unit and normalized part: the highest harmonic pair has
    /// first nonzero entry 1 (constants normalize to 1).
    pub fn normalize(&self) -> (F, Self) {
        let lead = match self.harmonics.last() {
            None => self.a0.clone(),
            Some((a, b)) => {
                if a.is_zero() {
                    b.clone()
                } else {
                    a.clone()
                }
            }
        };
        if lead.is_zero() {
            return (F::zero(), TrigPoly::zero());
        }
        (lead.clone(), self.scale(&lead.inv()))
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut out = TrigPoly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Value at `t`, possibly complex.
    pub fn eval_c64(&self, t: Complex64) -> Complex64 {
        let mut acc = self.a0.to_c64();
        for (i, (a, b)) in self.harmonics.iter().enumerate() {
            let nt = t * (i as f64 + 1.0);
            acc += a.to_c64() * nt.cos() + b.to_c64() * nt.sin();
        }
        acc
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.eval_c64(Complex64::new(t, 0.0)).re
    }

    /// Coefficients in the order `a₀, a₁, b₁, a₂, b₂, …`.
    pub fn coefficient_vector(&self, n: usize) -> Vec<F> {
        let mut v = Vec::with_capacity(2 * n + 1);
        v.push(self.a0.clone());
        for k in 1..=n {
            let (a, b) = self.pair(k);
            v.push(a);
            v.push(b);
        }
        v
    }

    pub fn map<G: RealField>(&self, f: impl Fn(&F) -> G) -> TrigPoly<G> {
        TrigPoly::new(
            f(&self.a0),
            self.harmonics.iter().map(|(a, b)| (f(a), f(b))).collect(),
        )
    }

    /// Canonical order: degree, then harmonic pairs from the top down.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for n in (0..=self.deg0()).rev() {
                let (a1, b1) = self.pair(n);
                let (a2, b2) = other.pair(n);
                let o = a1.canonical_cmp(&a2).then_with(|| b1.canonical_cmp(&b2));
                if o != Ordering::Equal {
                    return o;
                }
            }
            Ordering::Equal
        })
    }

    /// Render in the expression grammar, highest harmonic first.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (a, b)) in self.harmonics.iter().enumerate().rev() {
            let n = i + 1;
            let arg = if n == 1 {
                "t".to_string()
            } else {
                format!("{n}t")
            };
            if !a.is_zero() {
                push_term(&mut s, a, &format!("cos({arg})"));
            }
            if !b.is_zero() {
                push_term(&mut s, b, &format!("sin({arg})"));
            }
        }
        if !self.a0.is_zero() {
            push_term(&mut s, &self.a0, "");
        }
        s
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide.
    pub fn exact_div(&self, d: &Self) -> Result<Option<Self>> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        laurent::exact_div(self, d)
    }

    pub fn divides(&self, other: &Self) -> Result<bool> {
        Ok(other.exact_div(self)?.is_some())
    }

    /// Normalized common divisor of maximal degree.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        laurent::gcd(self, other)
    }
}

impl<F: RealField> fmt::Debug for TrigPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Trig({})", self.render())
    }
}

impl<F: RealField> fmt::Display for TrigPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl<'a, F: RealField> Add<&'a TrigPoly<F>> for &'a TrigPoly<F> {
    type Output = TrigPoly<F>;
    fn add(self, rhs: &TrigPoly<F>) -> TrigPoly<F> {
        let n = self.deg0().max(rhs.deg0());
        TrigPoly::new(
            self.a0.clone() + rhs.a0.clone(),
            (1..=n)
                .map(|k| {
                    let (a1, b1) = self.pair(k);
                    let (a2, b2) = rhs.pair(k);
                    (a1 + a2, b1 + b2)
                })
                .collect(),
        )
    }
}

impl<'a, F: RealField> Sub<&'a TrigPoly<F>> for &'a TrigPoly<F> {
    type Output = TrigPoly<F>;
    fn sub(self, rhs: &TrigPoly<F>) -> TrigPoly<F> {
        self + &(-rhs)
    }
}

impl<F: RealField> Neg for &TrigPoly<F> {
    type Output = TrigPoly<F>;
    fn neg(self) -> TrigPoly<F> {
        self.scale(&-F::one())
    }
}

impl<'a, F: RealField> Mul<&'a TrigPoly<F>> for &'a TrigPoly<F> {
    type Output = TrigPoly<F>;
    /// Product-to-sum on cosine and sine coefficient arrays.
    fn mul(self, rhs: &TrigPoly<F>) -> TrigPoly<F> {
        if self.is_zero() || rhs.is_zero() {
            return TrigPoly::zero();
        }
        let (n1, n2) = (self.deg0(), rhs.deg0());
        let n = n1 + n2;
        let mut ca = vec![F::zero(); n + 1];
        let mut sb = vec![F::zero(); n + 1];
        let half = F::one() / F::from_i64(2);
        let add = |v: &mut Vec<F>, i: usize, x: F| {
            let cur = std::mem::replace(&mut v[i], F::zero());
            v[i] = cur + x;
        };
        for j in 0..=n1 {
            let (aj, bj) = self.pair(j);
            for k in 0..=n2 {
                let (ak, bk) = rhs.pair(k);
                let (sum, diff) = (j + k, j.abs_diff(k));
                if !aj.is_zero() && !ak.is_zero() {
                    let x = aj.clone() * ak.clone() * half.clone();
                    add(&mut ca, sum, x.clone());
                    add(&mut ca, diff, x);
                }
                if !bj.is_zero() && !bk.is_zero() {
                    let x = bj.clone() * bk.clone() * half.clone();
                    add(&mut ca, diff, x.clone());
                    add(&mut ca, sum, -x);
                }
                // cos(jt)·sin(kt) = ½[sin((j+k)t) + sin((k−j)t)]
                if !aj.is_zero() && !bk.is_zero() {
                    let x = aj.clone() * bk.clone() * half.clone();
                    add(&mut sb, sum, x.clone());
                    match k.cmp(&j) {
                        Ordering::Greater => add(&mut sb, diff, x),
                        Ordering::Less => add(&mut sb, diff, -x),
                        Ordering::Equal => {}
                    }
                }
                if !bj.is_zero() && !ak.is_zero() {
                    let x = bj.clone() * ak.clone() * half.clone();
                    add(&mut sb, sum, x.clone());
                    match j.cmp(&k) {
                        Ordering::Greater => add(&mut sb, diff, x),
                        Ordering::Less => add(&mut sb, diff, -x),
                        Ordering::Equal => {}
                    }
                }
            }
        }
        let a0 = ca[0].clone();
        TrigPoly::new(
            a0,
            (1..=n).map(|k| (ca[k].clone(), sb[k].clone())).collect(),
        )
    }
}

macro_rules! owned_trig_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl<F: RealField> $trait for TrigPoly<F> {
            type Output = TrigPoly<F>;
            fn $method(self, rhs: TrigPoly<F>) -> TrigPoly<F> {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
owned_trig_ops!(Add add, Sub sub, Mul mul);

impl<F: RealField> Neg for TrigPoly<F> {
    type Output = TrigPoly<F>;
    fn neg(self) -> TrigPoly<F> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    type T = TrigPoly<Rational>;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn cos_plus(c: i64) -> T {
        &T::cos(1) + &T::constant(Rational::from_i64(c))
    }

    #[test]
    fn product_to_sum() {
        let p = &cos_plus(2) * &cos_plus(3);
        assert_eq!(
            p,
            T::new(q(13, 2), vec![(q(5, 1), q(0, 1)), (q(1, 2), q(0, 1))])
        );
        assert_eq!(&cos_plus(2) * &T::one(), cos_plus(2));
        let a = &p * &T::sin(1);
        let want = T::new(
            q(0, 1),
            vec![(q(0, 1), q(25, 4)), (q(0, 1), q(5, 2)), (q(0, 1), q(1, 4))],
        );
        assert_eq!(a, want);
        // sin·sin, sin·cos with unequal harmonics
        assert_eq!(
            &T::sin(1) * &T::sin(2),
            T::new(
                q(0, 1),
                vec![(q(1, 2), q(0, 1)), (q(0, 1), q(0, 1)), (q(-1, 2), q(0, 1))]
            )
        );
        assert_eq!(
            &T::sin(1) * &T::cos(1),
            T::new(q(0, 1), vec![(q(0, 1), q(0, 1)), (q(0, 1), q(1, 2))])
        );
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(cos_plus(2).derivative(), -&T::sin(1));
        assert_eq!(T::constant(q(7, 3)).derivative(), T::zero());
        assert_eq!(T::sin(2).derivative(), T::cos(2).scale(&q(2, 1)));
    }

    #[test]
    fn degree_and_normalization() {
        assert_eq!(T::zero().degree(), Degree::NegInfinity);
        assert_eq!(T::constant(q(3, 1)).degree(), Degree::Finite(0));
        let x = T::new(q(1, 1), vec![(q(0, 1), q(0, 1)), (q(0, 1), q(-2, 1))]);
        let (u, n) = x.normalize();
        assert_eq!(u, q(-2, 1));
        assert_eq!(n.pair(2), (q(0, 1), q(1, 1)));
    }

    #[test]
    fn render_examples() {
        let x = T::new(q(3, 1), vec![(q(0, 1), q(-1, 2)), (q(1, 1), q(0, 1))]);
        assert_eq!(x.render(), "cos(2t) - 1/2*sin(t) + 3");
        assert_eq!((-&T::sin(1)).render(), "-sin(t)");
    }

    #[test]
    fn evaluation_matches_product() {
        let a = T::new(q(1, 3), vec![(q(2, 1), q(-1, 5)), (q(0, 1), q(3, 7))]);
        let b = T::new(q(-2, 1), vec![(q(1, 2), q(1, 1))]);
        let p = &a * &b;
        for k in 0..17 {
            let t = k as f64 * 0.37;
            assert!((p.eval_f64(t) - a.eval_f64(t) * b.eval_f64(t)).abs() < 1e-12);
        }
    }
}
