//! Factorization of trigonometric polynomials into root orbits of the
//! Laurent model under `ρ ↦ 1/ρ̄`.
//!
//! An irreducible factor `g` of `P` over `Q(i)` either pairs with a distinct
//! `g*` (roots off the unit circle, product nonvanishing) or is
//! self-reciprocal. Self-reciprocal factors of even degree are real trig
//! polynomials on their own; those of odd degree always have a root on the
//! unit circle and only combine in pairs, so they are gathered into a single
//! vanishing residual factor.

use serde::Serialize;

use super::laurent::{hermitian_to_trig, nonvanishing, star, to_laurent};
use super::TrigPoly;
use crate::error::{Error, Result};
use crate::factor::factor_gaussian;
use crate::poly::Poly;
use crate::scalar::{Gaussian, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct OrbitFactor {
    /// Normalized real trig factor generated by the orbit.
    pub factor: TrigPoly<Rational>,
    pub multiplicity: usize,
    /// Whether the factor has a real zero.
    pub vanishing: bool,
    /// Number of Laurent roots in one orbit (1, 2 or 4), counted for the
    /// irreducible Laurent factors that make up `factor`.
    pub orbit_size: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrigFactorization {
    pub unit: Rational,
    pub orbits: Vec<OrbitFactor>,
}

#[derive(Serialize)]
struct OrbitRecord {
    factor: String,
    multiplicity: usize,
    vanishing: bool,
}

impl TrigFactorization {
    pub fn expand(&self) -> TrigPoly<Rational> {
        let mut out = TrigPoly::constant(self.unit.clone());
        for o in &self.orbits {
            out = &out * &o.factor.pow(o.multiplicity);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let recs: Vec<_> = self
            .orbits
            .iter()
            .map(|o| OrbitRecord {
                factor: o.factor.render(),
                multiplicity: o.multiplicity,
                vanishing: o.vanishing,
            })
            .collect();
        serde_json::to_value(recs).expect("plain records serialize")
    }
}

fn orbit_size(g: &Poly<Gaussian>, self_reciprocal: bool) -> usize {
    // roots ρ, 1/ρ̄ and, for real-coefficient factors, ρ̄ and 1/ρ
    let real = g.to_rational().is_some();
    let base = if self_reciprocal { 1 } else { 2 };
    if real && g.deg0() > 1 {
        base * 2
    } else {
        base
    }
}

/// Complete orbit factorization of a non-constant trig polynomial.
pub fn divisor_orbits(t: &TrigPoly<Rational>) -> Result<TrigFactorization> {
    if t.is_constant() {
        return Err(Error::Precondition(
            "orbit factorization needs a non-constant trig polynomial".into(),
        ));
    }
    let (p, _) = to_laurent(t);
    let fac = factor_gaussian(&p)?;
    let mut used = vec![false; fac.factors.len()];
    let mut orbits = Vec::new();
    let mut residual: Poly<Gaussian> = Poly::one();
    let mut residual_size = 0;
    for i in 0..fac.factors.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let (g, m) = &fac.factors[i];
        let gs = star(g).monic().1;
        if &gs == g {
            if g.deg0() % 2 == 1 {
                residual = &residual * &g.pow(*m);
                residual_size = residual_size.max(orbit_size(g, true));
                continue;
            }
            let factor = hermitian_to_trig::<Rational>(g)?;
            let vanishing = !nonvanishing(&factor)?;
            orbits.push(OrbitFactor {
                factor,
                multiplicity: *m,
                vanishing,
                orbit_size: orbit_size(g, true),
            });
            continue;
        }
        let j = (0..fac.factors.len())
            .find(|&j| !used[j] && fac.factors[j].0 == gs)
            .ok_or_else(|| {
                Error::inconsistency("reciprocal partner of a Laurent factor is missing")
            })?;
        if fac.factors[j].1 != *m {
            return Err(Error::inconsistency(
                "reciprocal Laurent factors differ in multiplicity",
            ));
        }
        used[j] = true;
        let factor = hermitian_to_trig::<Rational>(&(g * &gs))?;
        orbits.push(OrbitFactor {
            factor,
            multiplicity: *m,
            vanishing: false,
            orbit_size: orbit_size(g, false),
        });
    }
    if !residual.is_constant() {
        orbits.push(OrbitFactor {
            factor: hermitian_to_trig::<Rational>(&residual)?,
            multiplicity: 1,
            vanishing: true,
            orbit_size: residual_size,
        });
    }
    orbits.sort_by(|a, b| {
        a.factor
            .canonical_cmp(&b.factor)
            .then(a.multiplicity.cmp(&b.multiplicity))
    });
    let mut rest = TrigPoly::one();
    for o in &orbits {
        rest = &rest * &o.factor.pow(o.multiplicity);
    }
    let unit = t
        .exact_div(&rest)?
        .filter(|u| u.is_constant())
        .ok_or_else(|| Error::inconsistency("orbit factors do not reproduce the input"))?;
    Ok(TrigFactorization {
        unit: unit.a0().clone(),
        orbits,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    type T = TrigPoly<Rational>;

    fn cos_plus(c: i64) -> T {
        &T::cos(1) + &T::constant(Rational::from_i64(c))
    }

    #[test]
    fn orbits_of_constructed_product() {
        let x = &(&T::sin(1) * &cos_plus(2)) * &cos_plus(3);
        let f = divisor_orbits(&x).unwrap();
        assert_eq!(f.expand(), x);
        assert_eq!(f.orbits.len(), 3);
        let vanishing: Vec<_> = f.orbits.iter().filter(|o| o.vanishing).collect();
        assert_eq!(vanishing.len(), 1);
        assert_eq!(vanishing[0].factor, T::sin(1));
        assert!(f
            .orbits
            .iter()
            .any(|o| o.factor == cos_plus(2) && !o.vanishing));
        assert!(f
            .orbits
            .iter()
            .any(|o| o.factor == cos_plus(3) && !o.vanishing));
    }

    #[test]
    fn single_orbits() {
        let f = divisor_orbits(&cos_plus(2)).unwrap();
        assert_eq!(f.orbits.len(), 1);
        assert!(!f.orbits[0].vanishing);
        let f = divisor_orbits(&cos_plus(1)).unwrap();
        assert_eq!(f.orbits.len(), 1);
        assert!(f.orbits[0].vanishing);
        assert_eq!(f.expand(), cos_plus(1));
    }

    #[test]
    fn repeated_and_complex_orbits() {
        // (2 + sin t)²·(3 + cos 2t)
        let a = &T::sin(1) + &T::constant(Rational::from_i64(2));
        let b = &T::cos(2) + &T::constant(Rational::from_i64(3));
        let x = &a.pow(2) * &b;
        let f = divisor_orbits(&x).unwrap();
        assert_eq!(f.expand(), x);
        assert!(f.orbits.iter().all(|o| !o.vanishing));
        assert!(f
            .orbits
            .iter()
            .any(|o| o.factor == a && o.multiplicity == 2));
    }
}
