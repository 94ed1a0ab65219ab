//! Factorization into irreducibles over the rationals and the Gaussian
//! rationals.
//!
//! Rational polynomials go through a square-free decomposition and a modular
//! (Zassenhaus) factorization of each square-free part. Over `Q(i)` the norm
//! method is used: shift until the norm down to `Q` is square-free, factor the
//! norm over `Q`, and recover the `Q(i)` factors as gcds.

mod integer;
mod modp;

pub use integer::{factor_squarefree_integer, primitive_part};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{Field, Gaussian, Rational};

/// Unit and monic irreducible factors with multiplicities.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization<F: Field> {
    pub unit: F,
    pub factors: Vec<(Poly<F>, usize)>,
}

impl<F: Field> Factorization<F> {
    pub fn expand(&self) -> Poly<F> {
        let mut out = Poly::constant(self.unit.clone());
        for (f, m) in &self.factors {
            out = &out * &f.pow(*m);
        }
        out
    }

    fn sort(&mut self) {
        self.factors
            .sort_by(|a, b| a.0.canonical_cmp(&b.0).then(a.1.cmp(&b.1)));
    }
}

fn nonzero<F: Field>(p: &Poly<F>) -> Result<()> {
    if p.is_zero() {
        Err(Error::Precondition(
            "factorization of the zero polynomial".into(),
        ))
    } else {
        Ok(())
    }
}

/// Irreducible factorization over `Q`.
pub fn factor_rational(p: &Poly<Rational>) -> Result<Factorization<Rational>> {
    nonzero(p)?;
    let (unit, _) = p.monic();
    let mut factors = Vec::new();
    for (sf, mult) in p.square_free()? {
        for g in factor_squarefree_integer(&primitive_part(&sf)) {
            let g = Poly::new(g.into_iter().map(Rational::from_bigint).collect())
                .monic()
                .1;
            factors.push((g, mult));
        }
    }
    let mut out = Factorization { unit, factors };
    out.sort();
    Ok(out)
}

/// Irreducible factorization over `Q(i)`.
pub fn factor_gaussian(p: &Poly<Gaussian>) -> Result<Factorization<Gaussian>> {
    nonzero(p)?;
    let (unit, _) = p.monic();
    let mut factors = Vec::new();
    for (sf, mult) in p.square_free()? {
        for g in factor_squarefree_gaussian(&sf)? {
            factors.push((g, mult));
        }
    }
    let mut out = Factorization { unit, factors };
    out.sort();
    Ok(out)
}

/// Shifts tried in order: 0, 1, −1, 2, −2, …
fn shift_sequence() -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..).flat_map(|k| [k, -k]))
}

fn factor_squarefree_gaussian(g: &Poly<Gaussian>) -> Result<Vec<Poly<Gaussian>>> {
    if g.deg0() == 1 {
        return Ok(vec![g.monic().1]);
    }
    for k in shift_sequence().take(64) {
        let shift = Gaussian::new(Rational::zero(), Rational::from_i64(-k));
        let gk = g.shift(&shift);
        let norm = (&gk * &gk.conj())
            .to_rational()
            .ok_or_else(|| Error::inconsistency("norm of a Gaussian polynomial is not real"))?;
        if !norm.gcd(&norm.derivative())?.is_constant() {
            continue;
        }
        let mut out = Vec::new();
        let unshift = Gaussian::new(Rational::zero(), Rational::from_i64(k));
        for n in factor_squarefree_integer(&primitive_part(&norm)) {
            let n: Poly<Gaussian> = Poly::new(
                n.into_iter()
                    .map(|c| Gaussian::from_rational(&Rational::from_bigint(c)))
                    .collect(),
            );
            let h = gk.gcd(&n)?;
            if !h.is_constant() {
                out.push(h.shift(&unshift).monic().1);
            }
        }
        return Ok(out);
    }
    Err(Error::inconsistency("no shift gives a square-free norm"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Poly<Rational> {
        Poly::from_i64s(cs)
    }

    #[test]
    fn rational_factorization_round_trips() {
        // 2·(t+1)²·(t²+1)·(t−1/2)
        let f =
            (&(&p(&[1, 1]).pow(2) * &p(&[1, 0, 1])) * &p(&[-1, 2])).scale(&Rational::from_i64(1));
        let fac = factor_rational(&f).unwrap();
        assert_eq!(fac.expand(), f);
        assert_eq!(fac.unit, Rational::from_i64(2));
        assert_eq!(fac.factors.len(), 3);
        assert!(fac.factors.contains(&(p(&[1, 1]), 2)));
        assert!(fac
            .factors
            .contains(&(Poly::new(vec![Rational::new(-1, 2), Rational::one()]), 1)));
    }

    #[test]
    fn gaussian_splits_sums_of_squares() {
        let f = p(&[1, 0, 1]).to_gaussian();
        let fac = factor_gaussian(&f).unwrap();
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(fac.expand(), f);
        // t²+2 stays irreducible over Q(i)
        let g = p(&[2, 0, 1]).to_gaussian();
        assert_eq!(factor_gaussian(&g).unwrap().factors.len(), 1);
        // t⁴+1 = (t²−i)(t²+i)
        let h = p(&[1, 0, 0, 0, 1]).to_gaussian();
        let fac = factor_gaussian(&h).unwrap();
        assert_eq!(fac.factors.len(), 2);
        assert!(fac.factors.iter().all(|(f, _)| f.deg0() == 2));
    }

    #[test]
    fn gaussian_with_complex_coefficients() {
        // (t − i)²·(t + 1 + 2i)·(t² + i)
        let i = Gaussian::i();
        let a: Poly<Gaussian> = Poly::linear_root(i.clone());
        let b: Poly<Gaussian> =
            Poly::linear_root(-(Gaussian::one() + Gaussian::from_i64(2) * i.clone()));
        let c: Poly<Gaussian> = Poly::new(vec![i, Gaussian::zero(), Gaussian::one()]);
        let f = &(&a.pow(2) * &b) * &c;
        let fac = factor_gaussian(&f).unwrap();
        assert_eq!(fac.expand(), f);
        assert_eq!(fac.factors.len(), 3);
        assert!(fac.factors.contains(&(a, 2)));
    }
}
