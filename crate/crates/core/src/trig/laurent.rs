//! The Laurent model of a trigonometric polynomial of degree `N`:
//! `T(t) = z^{-N} P(z)` with `z = e^{it}` and `P` of degree `2N`,
//! `c_{N+k} = (aₖ − i bₖ)/2`, `c_N = a₀`, `c_{N−k} = (aₖ + i bₖ)/2`.
//!
//! Realness of `T` is exactly Hermitian symmetry of `P`:
//! `c_{N−k} = conj(c_{N+k})`, i.e. `P* = P` where `P*(z) = z^{2N} conj(P)(1/z)`.

use super::TrigPoly;
use crate::error::{Error, Result};
use crate::poly::{real_root_count, Poly};
use crate::scalar::{Field, Gaussian, Rational, RealField};

/// `(P, N)` with `T = z^{-N} P(z)`.
pub fn to_laurent<F: RealField>(t: &TrigPoly<F>) -> (Poly<F::Complex>, usize) {
    let n = t.deg0();
    let half = F::one() / F::from_i64(2);
    let mut c = vec![F::Complex::zero(); 2 * n + 1];
    c[n] = t.a0().complexify();
    for (i, (a, b)) in t.harmonics().iter().enumerate() {
        let k = i + 1;
        let ah = a.clone() * half.clone();
        let bh = b.clone() * half.clone();
        c[n + k] = F::from_parts(&ah, &-bh.clone());
        c[n - k] = F::from_parts(&ah, &bh);
    }
    (Poly::new(c), n)
}

/// Inverse of [`to_laurent`]; fails unless `P` is Hermitian about `N`.
pub fn from_laurent<F: RealField>(p: &Poly<F::Complex>, n: usize) -> Result<TrigPoly<F>> {
    if p.deg0() > 2 * n {
        return Err(Error::inconsistency(
            "Laurent polynomial exceeds its offset",
        ));
    }
    let c0 = p.coeff(n);
    if !F::im(&c0).is_zero() {
        return Err(Error::inconsistency(
            "Laurent model is not Hermitian (constant term)",
        ));
    }
    let two = F::from_i64(2);
    let mut h = Vec::with_capacity(n);
    for k in 1..=n {
        let hi = p.coeff(n + k);
        let lo = p.coeff(n - k);
        if lo != hi.conj() {
            return Err(Error::inconsistency("Laurent model is not Hermitian"));
        }
        h.push((F::re(&hi) * two.clone(), -(F::im(&hi) * two.clone())));
    }
    Ok(TrigPoly::new(F::re(&c0), h))
}

/// `P*(z) = z^{deg P} conj(P)(1/z)`: coefficients conjugated and reversed.
pub fn star<C: Field>(p: &Poly<C>) -> Poly<C> {
    p.conj().reversed()
}

/// Trig polynomial proportional to `z^{-m} g(z)` for a monic `g` of degree
/// `2m` satisfying `g* ∝ g`, normalized.
pub fn hermitian_to_trig<F: RealField>(g: &Poly<F::Complex>) -> Result<TrigPoly<F>> {
    let d = g.deg0();
    if d % 2 == 1 {
        return Err(Error::GcdAmbiguous);
    }
    if d == 0 {
        return Ok(TrigPoly::one());
    }
    let (_, g) = g.monic();
    // g* = conj(g₀)·g, so λ·g is Hermitian when λ = conj(λ)·u with u = conj(g₀)
    let u = g.coeff(0).conj();
    if star(&g) != g.scale(&u) {
        return Err(Error::inconsistency("factor is not self-reciprocal"));
    }
    let one = F::Complex::one();
    let lambda = if u == -one.clone() {
        F::from_parts(&F::zero(), &F::one())
    } else {
        one + u
    };
    let t = from_laurent::<F>(&g.scale(&lambda), d / 2)?;
    Ok(t.normalize().1)
}

pub(super) fn exact_div<F: RealField>(
    a: &TrigPoly<F>,
    d: &TrigPoly<F>,
) -> Result<Option<TrigPoly<F>>> {
    if a.is_zero() {
        return Ok(Some(TrigPoly::zero()));
    }
    if d.is_constant() {
        return Ok(Some(a.scale(&d.a0().inv())));
    }
    if d.deg0() > a.deg0() {
        return Ok(None);
    }
    let (pa, na) = to_laurent(a);
    let (pd, nd) = to_laurent(d);
    match pa.exact_div(&pd)? {
        None => Ok(None),
        Some(q) => from_laurent(&q, na - nd).map(Some),
    }
}

pub(super) fn gcd<F: RealField>(a: &TrigPoly<F>, b: &TrigPoly<F>) -> Result<TrigPoly<F>> {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => return Err(Error::GcdOfZeros),
        (true, false) => return Ok(b.normalize().1),
        (false, true) => return Ok(a.normalize().1),
        _ => {}
    }
    if a.is_constant() || b.is_constant() {
        return Ok(TrigPoly::one());
    }
    let g = to_laurent(a).0.gcd(&to_laurent(b).0)?;
    hermitian_to_trig(&g)
}

/// `T(t)·(1+u²)^N` as a real polynomial in `u = tan(t/2)`.
fn half_angle_polynomial(t: &TrigPoly<Rational>) -> Result<Poly<Rational>> {
    let (p, n) = to_laurent(t);
    let i = Gaussian::i();
    let plus: Poly<Gaussian> = Poly::new(vec![Gaussian::one(), i.clone()]);
    let minus: Poly<Gaussian> = Poly::new(vec![Gaussian::one(), -i]);
    let mut acc = Poly::zero();
    for j in 0..=2 * n {
        let c = p.coeff(j);
        if c.is_zero() {
            continue;
        }
        // z^{j−N} contributes (1+iu)^j (1−iu)^{2N−j}
        let term = &plus.pow(j) * &minus.pow(2 * n - j);
        acc = &acc + &term.scale(&c);
    }
    acc.to_rational().ok_or_else(|| {
        Error::inconsistency("half-angle image of a real trig polynomial is not real")
    })
}

/// Whether `t` has no real zero.
pub fn nonvanishing(t: &TrigPoly<Rational>) -> Result<bool> {
    if t.is_zero() {
        return Err(Error::Precondition(
            "nonvanishing test of the zero trig polynomial".into(),
        ));
    }
    if t.is_constant() {
        return Ok(true);
    }
    // t = π is the point at infinity of the half-angle substitution
    let mut at_pi = t.a0().clone();
    for (k, (a, _)) in t.harmonics().iter().enumerate() {
        if k % 2 == 0 {
            at_pi = at_pi - a.clone();
        } else {
            at_pi = at_pi + a.clone();
        }
    }
    if at_pi.is_zero() {
        return Ok(false);
    }
    Ok(real_root_count(&half_angle_polynomial(t)?) == 0)
}
