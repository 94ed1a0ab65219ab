//! Dense univariate polynomials over an exact field.

mod sturm;

pub use sturm::{isolate_real_roots, real_root_count, sturm_sequence};

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::scalar::{Field, Gaussian, Rational};

/// Polynomial in `t` with coefficients in `F`, stored densely in ascending
/// order. The leading coefficient is nonzero unless the polynomial is zero,
/// in which case the coefficient vector is empty.
#[derive(Clone, PartialEq)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Poly::new(vec![F::zero(), F::one()])
    }

    pub fn monomial(c: F, n: usize) -> Self {
        let mut v = vec![F::zero(); n + 1];
        v[n] = c;
        Poly::new(v)
    }

    /// `(t − r)`.
    pub fn linear_root(r: F) -> Self {
        Poly::new(vec![-r, F::one()])
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Poly::new(cs.iter().map(|&c| F::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    /// Degree with the zero polynomial mapped to 0; only for sizing buffers.
    pub fn deg0(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Split into leading coefficient and monic part. The zero polynomial
    /// maps to `(0, 0)`.
    pub fn monic(&self) -> (F, Self) {
        match self.leading() {
            None => (F::zero(), Poly::zero()),
            Some(lc) if lc.is_one() => (F::one(), self.clone()),
            Some(lc) => {
                let lc = lc.clone();
                (lc.clone(), self.scale(&lc.inv()))
            }
        }
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * F::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn eval_c64(&self, t: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c.to_c64();
        }
        acc
    }

    pub fn to_c64_coeffs(&self) -> Vec<Complex64> {
        self.coeffs.iter().map(|c| c.to_c64()).collect()
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut out = Poly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Taylor shift: `p(t + c)`.
    pub fn shift(&self, c: &F) -> Self {
        let lin = Poly::new(vec![c.clone(), F::one()]);
        let mut acc = Poly::zero();
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Poly::constant(a.clone());
        }
        acc
    }

    /// Coefficientwise conjugation.
    pub fn conj(&self) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.conj()).collect())
    }

    /// `t^deg · p(1/t)`: the coefficient list reversed.
    pub fn reversed(&self) -> Self {
        let mut v = self.coeffs.clone();
        v.reverse();
        Poly::new(v)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn divrem(&self, d: &Self) -> Result<(Self, Self)> {
        let dl = d.leading().ok_or(Error::DivisionByZero)?.clone();
        let dn = d.coeffs.len();
        if self.coeffs.len() < dn {
            return Ok((Poly::zero(), self.clone()));
        }
        let inv = dl.inv();
        let mut r = self.coeffs.clone();
        let mut q = vec![F::zero(); r.len() - dn + 1];
        for k in (0..q.len()).rev() {
            let c = r[k + dn - 1].clone() * inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let v = r[k + j].clone() - c.clone() * dc.clone();
                r[k + j] = v;
            }
            q[k] = c;
        }
        r.truncate(dn - 1);
        Ok((Poly::new(q), Poly::new(r)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.divrem(d)?.1)
    }

    /// Exact quotient, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Result<Option<Self>> {
        let (q, r) = self.divrem(d)?;
        Ok(if r.is_zero() { Some(q) } else { None })
    }

    pub fn divides(&self, other: &Self) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            // keep intermediate remainders monic to curb coefficient growth
            b = r.monic().1;
        }
        Ok(a.monic().1)
    }

    /// Extended Euclid: `(g, s, t)` with `s·a + t·b = g`, `g` monic.
    pub fn xgcd(&self, other: &Self) -> Result<(Self, Self, Self)> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let lc = r0.leading().cloned().unwrap_or_else(F::one).inv();
        Ok((r0.scale(&lc), s0.scale(&lc), t0.scale(&lc)))
    }

    /// Square-free decomposition (Yun): monic `(factor, multiplicity)` pairs
    /// whose product, times the leading coefficient, is `self`.
    pub fn square_free(&self) -> Result<Vec<(Self, usize)>> {
        if self.is_zero() {
            return Err(Error::Precondition(
                "square-free decomposition of zero".into(),
            ));
        }
        let (_, f) = self.monic();
        let mut out = Vec::new();
        if f.is_constant() {
            return Ok(out);
        }
        let fp = f.derivative();
        let c = f.gcd(&fp)?;
        let mut w = f.exact_div(&c)?.expect("gcd divides");
        let mut y = fp.exact_div(&c)?.expect("gcd divides");
        let mut z = &y - &w.derivative();
        let mut i = 1;
        while !w.is_constant() {
            let g = w.gcd(&z)?;
            if !g.is_constant() {
                out.push((g.clone(), i));
            }
            w = w.exact_div(&g)?.expect("gcd divides");
            y = z.exact_div(&g)?.expect("gcd divides");
            z = &y - &w.derivative();
            i += 1;
        }
        Ok(out)
    }

    /// Canonical order: degree, then coefficients from the top down.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.coeffs.iter().rev().zip(other.coeffs.iter().rev()) {
                match a.canonical_cmp(b) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }

    /// Render in the expression grammar, e.g. `t^3 + 1/2*t - 3`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            push_term(&mut s, c, &mono);
        }
        s
    }
}

/// Append `c·mono` to a rendered sum, folding signs of real coefficients.
pub(crate) fn push_term<F: Field>(s: &mut String, c: &F, mono: &str) {
    let neg_one = -F::one();
    let text = c.expr();
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) if !text.starts_with("-(") => (true, rest.to_string()),
        _ => (false, text),
    };
    let body = if mono.is_empty() {
        body
    } else if c.is_one() || *c == neg_one {
        mono.to_string()
    } else {
        format!("{body}*{mono}")
    };
    if s.is_empty() {
        if negative {
            s.push('-');
        }
        s.push_str(&body);
    } else {
        s.push_str(if negative { " - " } else { " + " });
        s.push_str(&body);
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.render())
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl<'a, F: Field> Add<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a, F: Field> Sub<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a, F: Field> Mul<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let prod = a.clone() * b.clone();
                let cur = std::mem::replace(&mut v[i + j], F::zero());
                v[i + j] = cur + prod;
            }
        }
        Poly::new(v)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! owned_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl<F: Field> $trait for Poly<F> {
            type Output = Poly<F>;
            fn $method(self, rhs: Poly<F>) -> Poly<F> {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        -&self
    }
}

impl Poly<Gaussian> {
    /// The real polynomial, when every coefficient is real.
    pub fn to_rational(&self) -> Option<Poly<Rational>> {
        if self.coeffs.iter().all(|c| c.is_real()) {
            Some(Poly::new(
                self.coeffs.iter().map(|c| c.re.clone()).collect(),
            ))
        } else {
            None
        }
    }
}

impl Poly<Rational> {
    pub fn to_gaussian(&self) -> Poly<Gaussian> {
        self.map(Gaussian::from_rational)
    }
}

/// Whether a real polynomial has no real root (Sturm count).
pub fn rational_nonvanishing(p: &Poly<Rational>) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::Precondition(
            "nonvanishing test of the zero polynomial".into(),
        ));
    }
    Ok(real_root_count(p) == 0)
}

/// Whether a complex polynomial has no real root. A real root is a common
/// root of `p` and its conjugate, and the monic gcd of the two is real.
pub fn gaussian_nonvanishing(p: &Poly<Gaussian>) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::Precondition(
            "nonvanishing test of the zero polynomial".into(),
        ));
    }
    let g = p.gcd(&p.conj())?;
    if g.is_constant() {
        return Ok(true);
    }
    let real = g
        .to_rational()
        .ok_or_else(|| Error::inconsistency("gcd(p, conj p) is not real"))?;
    Ok(real_root_count(&real) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Poly<Rational> {
        Poly::from_i64s(cs)
    }

    #[test]
    fn divrem_examples() {
        // (t⁵+3t³+2t) / (t⁴+3t²+2) = (t, 0)
        let (q, r) = p(&[0, 2, 0, 3, 0, 1]).divrem(&p(&[2, 0, 3, 0, 1])).unwrap();
        assert_eq!((q, r), (p(&[0, 1]), Poly::zero()));
        let (q, r) = p(&[1, 0, 1]).divrem(&p(&[1, 0, 1])).unwrap();
        assert_eq!((q, r), (Poly::one(), Poly::zero()));
        // (t²+3t+1) / (t²+1) = (1, 3t)
        let (q, r) = p(&[1, 3, 1]).divrem(&p(&[1, 0, 1])).unwrap();
        assert_eq!((q, r), (Poly::one(), p(&[0, 3])));
        assert!(matches!(
            p(&[1]).divrem(&Poly::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[1, 0, 1]).gcd(&p(&[2, 0, 1])).unwrap(), Poly::one());
        assert_eq!(p(&[0, 1, 0, 1]).gcd(&p(&[1, 0, 1])).unwrap(), p(&[1, 0, 1]));
        // (t+1)²(t²+1) and (t+1)t
        let a = &p(&[1, 1]).pow(2) * &p(&[1, 0, 1]);
        let b = &p(&[1, 1]) * &p(&[0, 1]);
        assert_eq!(a.gcd(&b).unwrap(), p(&[1, 1]));
        assert!(matches!(
            Poly::<Rational>::zero().gcd(&Poly::zero()),
            Err(Error::GcdOfZeros)
        ));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[1, 0, 1]).derivative(), p(&[0, 2]));
        assert_eq!(p(&[5]).derivative(), Poly::zero());
        assert_eq!(p(&[2, 0, 3, 0, 1]).derivative(), p(&[0, 6, 0, 4]));
    }

    #[test]
    fn degree_of_zero_is_sentinel() {
        assert_eq!(Poly::<Rational>::zero().degree(), Degree::NegInfinity);
        assert_eq!(p(&[3]).degree(), Degree::Finite(0));
    }

    #[test]
    fn square_free_decomposition() {
        // (t+1)²·(t²+1)·t³
        let f = &(&p(&[1, 1]).pow(2) * &p(&[1, 0, 1])) * &p(&[0, 1]).pow(3);
        let sf = f.square_free().unwrap();
        assert_eq!(
            sf,
            vec![(p(&[1, 0, 1]), 1), (p(&[1, 1]), 2), (p(&[0, 1]), 3)]
        );
    }

    #[test]
    fn xgcd_bezout() {
        let a = p(&[1, 0, 1]);
        let b = p(&[-1, 2, 0, 1]);
        let (g, s, t) = a.xgcd(&b).unwrap();
        assert_eq!(&(&s * &a) + &(&t * &b), g);
        assert_eq!(g, Poly::one());
    }

    #[test]
    fn shift_and_render() {
        // (t+1)² evaluated at t → t+1 gives (t+2)²
        let f = p(&[1, 2, 1]);
        assert_eq!(f.shift(&Rational::from_i64(1)), p(&[4, 4, 1]));
        assert_eq!(p(&[0, 1, 0, 1]).render(), "t^3 + t");
        assert_eq!(p(&[-1, -3, -1]).render(), "-t^2 - 3*t - 1");
        let g: Poly<Gaussian> = Poly::new(vec![-Gaussian::i(), Gaussian::one()]);
        assert_eq!(g.render(), "t - 1*i");
    }

    #[test]
    fn nonvanishing_examples() {
        assert!(rational_nonvanishing(&p(&[1, 0, 1])).unwrap());
        assert!(!rational_nonvanishing(&p(&[0, 1, 0, 1])).unwrap());
        let g: Poly<Gaussian> = Poly::new(vec![-Gaussian::i(), Gaussian::one()]);
        assert!(gaussian_nonvanishing(&g).unwrap());
        let h: Poly<Gaussian> = p(&[0, 1, 0, 1]).to_gaussian();
        assert!(!gaussian_nonvanishing(&h).unwrap());
        assert!(rational_nonvanishing(&Poly::zero()).is_err());
    }
}
