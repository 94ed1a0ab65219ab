//! Factorization of square-free primitive integer polynomials: modular
//! factorization, quadratic Hensel lifting and recombination of the lifted
//! factors by trial division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{Fp, PolyP};
use crate::poly::Poly;
use crate::scalar::Rational;

/// Integer polynomial, ascending and trimmed.
pub type ZPoly = Vec<BigInt>;

const PRIMES: &[u64] = &[
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193,
    197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307,
    311, 313, 317, 331, 337, 347, 349, 353, 359, 367, 373, 379, 383, 389, 397, 401, 409, 419, 421,
    431, 433, 439, 443, 449, 457, 461, 463, 467, 479, 487, 491, 499, 503, 509, 521, 523, 541, 1009,
    2003, 4001, 8009, 16001, 32003, 65521,
];

/// How many usable primes are tried before settling on the one giving the
/// fewest modular factors.
const PRIME_TRIALS: usize = 5;

fn ztrim(mut v: ZPoly) -> ZPoly {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn zmod(a: &BigInt, m: &BigInt) -> BigInt {
    a.mod_floor(m)
}

fn symmetric(a: &BigInt, m: &BigInt) -> BigInt {
    let r = a.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn mod_poly(a: &[BigInt], m: &BigInt) -> ZPoly {
    ztrim(a.iter().map(|c| zmod(c, m)).collect())
}

fn add_m(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    ztrim(
        (0..n)
            .map(|i| zmod(&(a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)), m))
            .collect(),
    )
}

fn sub_m(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    ztrim(
        (0..n)
            .map(|i| zmod(&(a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)), m))
            .collect(),
    )
}

fn mul_m(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    mod_poly(&v, m)
}

/// Division by a monic polynomial modulo `m`.
fn divrem_monic_m(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
    debug_assert!(b.last().is_some_and(|c| c.is_one()));
    if a.len() < b.len() {
        return (Vec::new(), mod_poly(a, m));
    }
    let mut r: ZPoly = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let c = zmod(&r[k + b.len() - 1], m);
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] = zmod(&(&r[k + j] - &c * bj), m);
        }
        q[k] = c;
    }
    r.truncate(b.len() - 1);
    (ztrim(q), mod_poly(&r, m))
}

fn to_p(a: &[BigInt], fp: &Fp) -> PolyP {
    let p = BigInt::from(fp.p);
    let mut v: PolyP = a
        .iter()
        .map(|c| zmod(c, &p).to_u64().expect("reduced"))
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn from_p(a: &[u64]) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// One quadratic Hensel step: from `f ≡ g·h`, `s·g + t·h ≡ 1 (mod m)` with
/// `h` monic, to the same relations modulo `m²`.
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m: &BigInt,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let m2 = m * m;
    let e = sub_m(f, &mul_m(g, h, &m2), &m2);
    let (q, r) = divrem_monic_m(&mul_m(s, &e, &m2), h, &m2);
    let g2 = add_m(&add_m(g, &mul_m(t, &e, &m2), &m2), &mul_m(&q, g, &m2), &m2);
    let h2 = add_m(h, &r, &m2);
    let b = sub_m(
        &add_m(&mul_m(s, &g2, &m2), &mul_m(t, &h2, &m2), &m2),
        &[BigInt::one()],
        &m2,
    );
    let (c, d) = divrem_monic_m(&mul_m(s, &b, &m2), &h2, &m2);
    let s2 = sub_m(s, &d, &m2);
    let t2 = sub_m(
        &sub_m(t, &mul_m(t, &b, &m2), &m2),
        &mul_m(&c, &g2, &m2),
        &m2,
    );
    (g2, h2, s2, t2)
}

/// Lift the monic modular factors of `f` (leading coefficient `lc`, prime
/// to `p`) to monic factors modulo `p^(2^steps)`.
fn multifactor_lift(f: &[BigInt], factors: &[PolyP], fp: &Fp, steps: u32) -> (Vec<ZPoly>, BigInt) {
    let p = BigInt::from(fp.p);
    let mut modulus = p.clone();
    for _ in 0..steps {
        modulus = &modulus * &modulus;
    }
    let mut target = mod_poly(f, &modulus);
    let mut out = Vec::new();
    for (i, u) in factors.iter().enumerate() {
        if i + 1 == factors.len() {
            // the remaining target is lc·u modulo the full modulus
            let tl = target.last().cloned().unwrap_or_else(BigInt::one);
            let inv = tl.modinv(&modulus).expect("unit leading coefficient");
            out.push(mod_poly(
                &target.iter().map(|c| c * &inv).collect::<Vec<_>>(),
                &modulus,
            ));
            break;
        }
        let rest = factors[i + 1..]
            .iter()
            .fold(vec![1u64], |acc, v| fp.mul(&acc, v));
        let tl = target.last().cloned().expect("nonzero");
        let tlp = zmod(&tl, &p).to_u64().expect("reduced");
        let g0 = fp.scale(u, tlp);
        let (one, s0, t0) = fp.xgcd(&g0, &rest);
        debug_assert_eq!(one, vec![1]);
        let (mut g, mut h, mut s, mut t) = (from_p(&g0), from_p(&rest), from_p(&s0), from_p(&t0));
        let mut m = p.clone();
        for _ in 0..steps {
            let m2 = &m * &m;
            let fm = mod_poly(&target, &m2);
            let next = hensel_step(&fm, &g, &h, &s, &t, &m);
            g = next.0;
            h = next.1;
            s = next.2;
            t = next.3;
            m = m2;
        }
        let inv = g.last().expect("nonzero").modinv(&modulus).expect("unit");
        out.push(mod_poly(
            &g.iter().map(|c| c * &inv).collect::<Vec<_>>(),
            &modulus,
        ));
        target = h;
    }
    (out, modulus)
}

/// Upper bound on the coefficients of any integer factor of `f`, times two.
fn coefficient_bound(f: &[BigInt]) -> BigInt {
    let n = f.len() - 1;
    let maxc = f.iter().map(|c| c.abs()).max().expect("nonzero");
    let lc = f.last().expect("nonzero").abs();
    BigInt::from(2) * lc * (BigInt::one() << n) * BigInt::from(n + 1) * maxc
}

fn to_rational_poly(a: &[BigInt]) -> Poly<Rational> {
    Poly::new(a.iter().map(|c| Rational::from_bigint(c.clone())).collect())
}

/// Primitive integer polynomial with positive leading coefficient.
pub fn primitive_part(p: &Poly<Rational>) -> ZPoly {
    let mut l = BigInt::one();
    for c in p.coeffs() {
        l = l.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&l / c.denom()))
        .collect();
    let mut g = BigInt::zero();
    for c in &ints {
        g = g.gcd(c);
    }
    if g.is_zero() {
        return Vec::new();
    }
    if ints.last().expect("nonzero").is_negative() {
        g = -g;
    }
    ints.iter().map(|c| c / &g).collect()
}

/// Irreducible factors over Z of a primitive square-free polynomial of
/// positive degree, each primitive with positive leading coefficient.
pub fn factor_squarefree_integer(f: &[BigInt]) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n == 1 {
        return vec![f.to_vec()];
    }
    let lc = f.last().expect("nonzero").clone();
    let mut best: Option<(Fp, Vec<PolyP>)> = None;
    let mut tried = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for &p in PRIMES {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = Fp::new(p);
        let fbar = to_p(f, &fp);
        if fbar.len() != f.len() || !fp.is_squarefree(&fbar) {
            continue;
        }
        let facs = fp.factor_squarefree(&fp.monic(&fbar), &mut rng);
        if best.as_ref().map_or(true, |(_, b)| facs.len() < b.len()) {
            best = Some((fp, facs));
        }
        tried += 1;
        if tried >= PRIME_TRIALS || best.as_ref().is_some_and(|(_, b)| b.len() == 1) {
            break;
        }
    }
    let (fp, facs) = best.expect("some prime keeps a square-free polynomial square-free");
    if facs.len() == 1 {
        return vec![f.to_vec()];
    }
    let bound = coefficient_bound(f);
    let mut steps = 0;
    let mut m = BigInt::from(fp.p);
    while m <= bound {
        m = &m * &m;
        steps += 1;
    }
    let (lifted, modulus) = multifactor_lift(f, &facs, &fp, steps);
    recombine(f, lifted, &modulus)
}

/// Combine lifted modular factors into true factors, trying subsets in
/// increasing size and confirming each candidate by exact division.
fn recombine(f: &[BigInt], mut lifted: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut out = Vec::new();
    let mut current = to_rational_poly(f);
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut found = false;
        let lc = primitive_part(&current).last().expect("nonzero").clone();
        for subset in Combinations::new(lifted.len(), size) {
            let mut g: ZPoly = vec![lc.clone()];
            for &k in &subset {
                g = mul_m(&g, &lifted[k], modulus);
            }
            let g: ZPoly = g.iter().map(|c| symmetric(c, modulus)).collect();
            let gp = primitive_part(&to_rational_poly(&g));
            let cand = to_rational_poly(&gp);
            if let Ok(Some(q)) = current.exact_div(&cand) {
                out.push(gp);
                current = q;
                let mut keep = Vec::new();
                for (k, u) in lifted.into_iter().enumerate() {
                    if !subset.contains(&k) {
                        keep.push(u);
                    }
                }
                lifted = keep;
                found = true;
                break;
            }
        }
        if !found {
            size += 1;
        }
    }
    let rest = primitive_part(&current);
    if rest.len() > 1 {
        out.push(rest);
    }
    out
}

/// Lexicographic k-subsets of `0..n`.
struct Combinations {
    idx: Vec<usize>,
    n: usize,
    first: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            idx: (0..k).collect(),
            n,
            first: true,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        let k = self.idx.len();
        if k > self.n {
            return None;
        }
        if self.first {
            self.first = false;
            return Some(self.idx.clone());
        }
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return Some(self.idx.clone());
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(cs: &[i64]) -> ZPoly {
        cs.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn combinations_enumerate_all_subsets() {
        let all: Vec<_> = Combinations::new(4, 2).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1]);
        assert_eq!(all[5], vec![2, 3]);
    }

    #[test]
    fn factors_with_recombination() {
        // t⁴+1 is irreducible over Z but splits modulo every prime
        let f = z(&[1, 0, 0, 0, 1]);
        assert_eq!(factor_squarefree_integer(&f), vec![f.clone()]);
        // (2t+1)(t²+1)(3t²−5)
        let a = to_rational_poly(&z(&[1, 2]));
        let b = to_rational_poly(&z(&[1, 0, 1]));
        let c = to_rational_poly(&z(&[-5, 0, 3]));
        let f = primitive_part(&(&(&a * &b) * &c));
        let mut got = factor_squarefree_integer(&f);
        got.sort_by_key(|g| g.len());
        assert_eq!(got.len(), 3);
        assert_eq!(got[0], z(&[1, 2]));
        assert!(got.contains(&z(&[1, 0, 1])));
        assert!(got.contains(&z(&[-5, 0, 3])));
    }

    #[test]
    fn large_coefficients_need_deep_lifting() {
        // (t − 1000003)(t + 999983)(t² + 7)
        let a = to_rational_poly(&z(&[-1000003, 1]));
        let b = to_rational_poly(&z(&[999983, 1]));
        let c = to_rational_poly(&z(&[7, 0, 1]));
        let f = primitive_part(&(&(&a * &b) * &c));
        let got = factor_squarefree_integer(&f);
        assert_eq!(got.len(), 3);
        assert!(got.contains(&z(&[-1000003, 1])));
    }
}
