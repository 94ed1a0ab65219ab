//! Sturm sequences for counting and isolating real roots of rational
//! polynomials.

use super::Poly;
use crate::scalar::{Field, Rational};

/// Sturm sequence of the square-free part of `p`.
pub fn sturm_sequence(p: &Poly<Rational>) -> Vec<Poly<Rational>> {
    let g = p.gcd(&p.derivative()).expect("p is nonzero");
    let sf = p.exact_div(&g).expect("nonzero gcd").expect("gcd divides");
    let mut seq = vec![sf.clone(), sf.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[n - 2].rem(&seq[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        // positive rescaling keeps signs; monic-ize by |lc| to tame growth
        let lc = r.leading().expect("nonzero").abs();
        seq.push(-&r.scale(&lc.inv()));
    }
    seq
}

fn sign_changes(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut n = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

fn changes_at(seq: &[Poly<Rational>], x: &Rational) -> usize {
    sign_changes(seq.iter().map(|p| p.eval(x).signum()))
}

fn changes_at_infinity(seq: &[Poly<Rational>], positive: bool) -> usize {
    sign_changes(seq.iter().map(|p| {
        let s = p.leading().map_or(0, |c| c.signum());
        if positive || p.deg0() % 2 == 0 {
            s
        } else {
            -s
        }
    }))
}

/// Number of distinct real roots of `p` (`p` nonzero).
pub fn real_root_count(p: &Poly<Rational>) -> usize {
    if p.is_constant() {
        return 0;
    }
    let seq = sturm_sequence(p);
    changes_at_infinity(&seq, false) - changes_at_infinity(&seq, true)
}

/// Distinct real roots in the half-open interval `(a, b]`.
pub fn root_count_in(seq: &[Poly<Rational>], a: &Rational, b: &Rational) -> usize {
    changes_at(seq, a) - changes_at(seq, b)
}

/// Disjoint intervals `(lo, hi]`, each containing exactly one real root of
/// `p`, with width at most `width`.
pub fn isolate_real_roots(p: &Poly<Rational>, width: &Rational) -> Vec<(Rational, Rational)> {
    if p.is_constant() {
        return Vec::new();
    }
    let seq = sturm_sequence(p);
    // Cauchy bound on root magnitude
    let (_, m) = p.monic();
    let mut bound = Rational::one();
    for c in &m.coeffs()[..m.deg0()] {
        bound = bound + c.abs();
    }
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let n = root_count_in(&seq, &lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 && hi.clone() - lo.clone() <= *width {
            out.push((lo, hi));
            continue;
        }
        let mid = (lo.clone() + hi.clone()) / Rational::from_i64(2);
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    out.sort();
    out
}
