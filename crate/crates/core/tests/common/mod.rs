//! Independent oracles shared by the integration tests. They reuse only the
//! exact field and polynomial arithmetic of the engine, never its finder,
//! factor-selection, root-solving or linear-algebra code paths.

#![allow(dead_code)]

use std::collections::BTreeSet;

use abel_core::factor::factor_rational;
use abel_core::finder::lift_equation;
use abel_core::{
    AbelEquation, AbelRing, CurveRing, Field, InvariantCurve, Poly, QuadExt, Rational,
};
use num_bigint::BigInt;
use num_traits::Signed;

type Q = Rational;

fn sign_at_pos_inf(p: &Poly<Q>) -> i32 {
    p.leading().map(|c| c.signum()).unwrap_or(0)
}

fn sign_at_neg_inf(p: &Poly<Q>) -> i32 {
    let s = sign_at_pos_inf(p);
    if p.deg0() % 2 == 1 {
        -s
    } else {
        s
    }
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let nz: Vec<i32> = signs.filter(|&s| s != 0).collect();
    nz.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots, by a Sturm chain of the square-free part.
pub fn distinct_real_roots(p: &Poly<Q>) -> usize {
    if p.is_constant() {
        return 0;
    }
    let g = p.gcd(&p.derivative()).unwrap();
    let sf = p.divrem(&g).unwrap().0;
    let mut chain = vec![sf.clone(), sf.derivative()];
    loop {
        let n = chain.len();
        let r = chain[n - 2].divrem(&chain[n - 1]).unwrap().1;
        if r.is_zero() {
            break;
        }
        chain.push(r.scale(&Rational::from_i64(-1)));
    }
    let at_neg = variations(chain.iter().map(sign_at_neg_inf));
    let at_pos = variations(chain.iter().map(sign_at_pos_inf));
    at_neg - at_pos
}

/// Identity of a curve `K·p̃` independent of how `√d` is normalized:
/// `(p̃, trace of K, norm of K, K as a float rounded to 1e-9)`.
pub type CurveKey = (String, String, String, i64);

pub fn curve_key(base: &Poly<Q>, k: &QuadExt<Q>) -> CurveKey {
    let (trace, norm) = match k.radicand() {
        None => (k.a.clone() + k.a.clone(), k.a.clone() * k.a.clone()),
        Some(d) => (
            k.a.clone() + k.a.clone(),
            k.a.clone() * k.a.clone() - k.b.clone() * k.b.clone() * d.clone(),
        ),
    };
    (
        base.render(),
        trace.to_string(),
        norm.to_string(),
        (k.to_c64().re * 1e9).round() as i64,
    )
}

pub fn finder_keys(curves: &[InvariantCurve<Poly<Q>>]) -> BTreeSet<CurveKey> {
    curves
        .iter()
        .map(|c| curve_key(&c.base, &c.scale))
        .collect()
}

fn is_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Real roots of `a k² + b k + c` with `a ≠ 0` or `b ≠ 0`.
fn real_roots(a: &Q, b: &Q, c: &Q) -> Vec<QuadExt<Q>> {
    let two = Rational::from_i64(2);
    if a.is_zero() {
        if b.is_zero() {
            return Vec::new();
        }
        return vec![QuadExt::base(-c.clone() / b.clone())];
    }
    let disc = b.clone() * b.clone() - Rational::from_i64(4) * a.clone() * c.clone();
    if disc.is_negative() {
        return Vec::new();
    }
    let mid = -b.clone() / (two.clone() * a.clone());
    let half = Rational::from_i64(1) / (two * a.clone());
    // √(n/d) = √(n·d)/d
    let nd = disc.numer() * disc.denom();
    match is_square(&nd) {
        Some(r) => {
            let s = Rational::from_ratio(r, disc.denom().clone());
            let mut v = vec![QuadExt::base(mid.clone() + half.clone() * s.clone())];
            if !s.is_zero() {
                v.push(QuadExt::base(mid - half * s));
            }
            v
        }
        None => vec![
            QuadExt::surd(mid.clone(), half.clone(), disc.clone()),
            QuadExt::surd(mid, -half, disc),
        ],
    }
}

/// Every nonvanishing invariant curve `K·d·x − 1` of a poly-rational
/// equation: all monic divisors `d` of `A` from its factorization, all real
/// roots `K` of one coefficient of `(C d² + d d') K² + B d K + A = 0`, kept
/// when the whole identity holds exactly.
pub fn brute_force_curves(eq: &AbelEquation<Poly<Q>>) -> BTreeSet<CurveKey> {
    let fact = factor_rational(&eq.a).unwrap();
    let mut divisors = vec![Poly::<Q>::one()];
    for (f, m) in &fact.factors {
        let mut next = Vec::new();
        for d in &divisors {
            let mut cur = d.clone();
            for _ in 0..=*m {
                next.push(cur.clone());
                cur = &cur * f;
            }
        }
        divisors = next;
    }
    let lift = |p: &Poly<Q>| p.map(|c| QuadExt::base(c.clone()));
    let mut out = BTreeSet::new();
    for d in divisors.iter().filter(|d| !d.is_constant()) {
        if distinct_real_roots(d) > 0 {
            continue;
        }
        let q2 = &(&eq.c * &(d * d)) + &(d * &d.derivative());
        let q1 = &eq.b * d;
        let q0 = eq.a.clone();
        let n = q2.deg0().max(q1.deg0()).max(q0.deg0());
        let Some(j) = (0..=n).find(|&j| !q2.coeff(j).is_zero() || !q1.coeff(j).is_zero()) else {
            continue;
        };
        for k in real_roots(&q2.coeff(j), &q1.coeff(j), &q0.coeff(j)) {
            if k.is_zero() {
                continue;
            }
            let kk = Poly::constant(k.clone());
            let residual = &(&(&lift(&q2) * &(&kk * &kk)) + &(&lift(&q1) * &kk)) + &lift(&q0);
            if residual.is_zero() {
                out.insert(curve_key(d, &k));
            }
        }
    }
    out
}

/// Cofactor `K₂x² + K₁x + K₀` of `p·x − 1`, by long division in `x` of
/// `p'x + p·(Ax³ + Bx² + Cx)` by `p·x − 1`; `None` if the division is not
/// exact.
pub fn unsimplified_cofactor<R: AbelRing>(eq: &AbelEquation<R>, p: &R::Ext) -> Option<[R::Ext; 3]> {
    let l = lift_equation(eq);
    let n3 = p.times(&l.a);
    let n2 = p.times(&l.b);
    let n1 = p.derivative().plus(&p.times(&l.c));
    let k2 = n3.exact_div(p).ok()??;
    let k1 = n2.plus(&k2).exact_div(p).ok()??;
    let k0 = n1.plus(&k1).exact_div(p).ok()??;
    // constant term of the remainder: 0 − (−K₀)
    if !k0.is_zero() {
        return None;
    }
    Some([k2, k1, k0])
}

/// Rank of a dense matrix by plain Gaussian elimination.
pub fn rank<F: Field>(mut rows: Vec<Vec<F>>, ncols: usize) -> usize {
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = rows[rank][col].inv();
        let pivot_row: Vec<F> = rows[rank].iter().map(|x| x.clone() * inv.clone()).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = x.clone() - f.clone() * p.clone();
                }
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// Rows of `α₀·(Ax² + Bx + C) + Σ αᵢKᵢ = 0` in the unknowns
/// `(α₀, α₁, …, α_r)`, one row per power of `x` and basis coordinate.
pub fn cofactor_system<R: AbelRing>(
    eq: &AbelEquation<R>,
    curves: &[InvariantCurve<R>],
) -> Vec<Vec<QuadExt<R::Base>>> {
    let l = lift_equation(eq);
    let mut cols: Vec<[R::Ext; 3]> = vec![[l.a.clone(), l.b.clone(), l.c.clone()]];
    for c in curves {
        cols.push(unsimplified_cofactor(eq, &c.p()).expect("curve must be invariant"));
    }
    let n = cols
        .iter()
        .flat_map(|k| k.iter().filter_map(|e| e.degree().finite()))
        .max()
        .unwrap_or(0);
    let coords: Vec<[Vec<QuadExt<R::Base>>; 3]> = cols
        .iter()
        .map(|k| {
            [
                k[0].coefficient_vector(n),
                k[1].coefficient_vector(n),
                k[2].coefficient_vector(n),
            ]
        })
        .collect();
    let mut rows = Vec::new();
    for power in 0..3 {
        for idx in 0..coords[0][power].len() {
            rows.push(coords.iter().map(|c| c[power][idx].clone()).collect());
        }
    }
    rows
}

/// Whether the cofactor system has a nonzero solution, and whether every
/// solution has `α₀ = 0`.
pub fn brute_force_dependence<R: AbelRing>(
    eq: &AbelEquation<R>,
    curves: &[InvariantCurve<R>],
) -> (bool, bool) {
    let rows = cofactor_system(eq, curves);
    let ncols = curves.len() + 1;
    let r = rank(rows.clone(), ncols);
    // α₀ is forced to vanish iff adding the row e₀ does not raise the rank
    let mut with_e0 = rows;
    let mut e0 = vec![QuadExt::<R::Base>::zero(); ncols];
    e0[0] = QuadExt::one();
    with_e0.push(e0);
    let r0 = rank(with_e0, ncols);
    (r < ncols, r0 == r)
}

/// Whether `(0, α₁, …)` solves the cofactor system.
pub fn solves_system<R: AbelRing>(
    eq: &AbelEquation<R>,
    curves: &[InvariantCurve<R>],
    alphas: &[QuadExt<R::Base>],
) -> bool {
    let rows = cofactor_system(eq, curves);
    let mut v = vec![QuadExt::<R::Base>::zero()];
    v.extend(alphas.iter().cloned());
    rows.iter().all(|row| {
        row.iter()
            .zip(&v)
            .fold(QuadExt::<R::Base>::zero(), |acc, (a, b)| {
                acc + a.clone() * b.clone()
            })
            .is_zero()
    })
}
