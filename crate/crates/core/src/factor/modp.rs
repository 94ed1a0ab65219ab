//! Polynomials over a prime field `Z/p` with word-sized `p`, and their
//! factorization by distinct-degree and equal-degree splitting.

use num_bigint::BigUint;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Arithmetic context for `Z/p`, `p` an odd prime below 2^32.
#[derive(Clone, Copy, Debug)]
pub struct Fp {
    pub p: u64,
}

/// Ascending coefficients, trimmed so the last entry is nonzero.
pub type PolyP = Vec<u64>;

fn trim(mut v: PolyP) -> PolyP {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

impl Fp {
    pub fn new(p: u64) -> Self {
        Fp { p }
    }

    fn mulm(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut r = 1u64;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mulm(r, b);
            }
            b = self.mulm(b, b);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero mod {}", self.p);
        self.pow(a, self.p - 2)
    }

    #[cfg(test)]
    pub fn add(&self, a: &[u64], b: &[u64]) -> PolyP {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % self.p)
                .collect(),
        )
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> PolyP {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| {
                    (a.get(i).copied().unwrap_or(0) + self.p - b.get(i).copied().unwrap_or(0))
                        % self.p
                })
                .collect(),
        )
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> PolyP {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut v = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                v[i + j] = (v[i + j] + self.mulm(x, y)) % self.p;
            }
        }
        trim(v)
    }

    pub fn scale(&self, a: &[u64], c: u64) -> PolyP {
        trim(a.iter().map(|&x| self.mulm(x, c)).collect())
    }

    pub fn monic(&self, a: &[u64]) -> PolyP {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => self.scale(a, self.inv(lc)),
        }
    }

    pub fn divrem(&self, a: &[u64], b: &[u64]) -> (PolyP, PolyP) {
        let lc = *b.last().expect("division by zero polynomial mod p");
        if a.len() < b.len() {
            return (Vec::new(), a.to_vec());
        }
        let inv = self.inv(lc);
        let mut r = a.to_vec();
        let mut q = vec![0u64; a.len() - b.len() + 1];
        for k in (0..q.len()).rev() {
            let c = self.mulm(r[k + b.len() - 1], inv);
            if c == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                r[k + j] = (r[k + j] + self.p - self.mulm(c, bj)) % self.p;
            }
            q[k] = c;
        }
        r.truncate(b.len() - 1);
        (trim(q), trim(r))
    }

    pub fn rem(&self, a: &[u64], b: &[u64]) -> PolyP {
        self.divrem(a, b).1
    }

    pub fn gcd(&self, a: &[u64], b: &[u64]) -> PolyP {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `(g, s, t)` with `s·a + t·b = g` monic.
    pub fn xgcd(&self, a: &[u64], b: &[u64]) -> (PolyP, PolyP, PolyP) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1): (PolyP, PolyP) = (vec![1], Vec::new());
        let (mut t0, mut t1): (PolyP, PolyP) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            let t = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = self.inv(*r0.last().expect("not both zero"));
        (
            self.scale(&r0, inv),
            self.scale(&s0, inv),
            self.scale(&t0, inv),
        )
    }

    pub fn derivative(&self, a: &[u64]) -> PolyP {
        trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| self.mulm(c, i as u64 % self.p))
                .collect(),
        )
    }

    fn powmod(&self, base: &[u64], e: &BigUint, m: &[u64]) -> PolyP {
        let mut r: PolyP = vec![1];
        let b = self.rem(base, m);
        for i in (0..e.bits()).rev() {
            r = self.rem(&self.mul(&r, &r), m);
            if e.bit(i) {
                r = self.rem(&self.mul(&r, &b), m);
            }
        }
        r
    }

    /// Distinct-degree factorization of a monic square-free polynomial.
    fn ddf(&self, f: &[u64]) -> Vec<(PolyP, usize)> {
        let mut out = Vec::new();
        let mut f = f.to_vec();
        let x: PolyP = vec![0, 1];
        let mut h = x.clone();
        let p = BigUint::from(self.p);
        let mut d = 1;
        while f.len() > 2 * d {
            h = self.powmod(&h, &p, &f);
            let g = self.gcd(&self.sub(&h, &x), &f);
            if g.len() > 1 {
                out.push((g.clone(), d));
                f = self.divrem(&f, &g).0;
                h = self.rem(&h, &f);
            }
            d += 1;
        }
        if f.len() > 1 {
            let deg = f.len() - 1;
            out.push((f, deg));
        }
        out
    }

    /// Split a product of distinct monic irreducibles of degree `d`.
    fn edf(&self, g: &[u64], d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<PolyP>) {
        let n = g.len() - 1;
        if n == d {
            out.push(g.to_vec());
            return;
        }
        let e = (BigUint::from(self.p).pow(d as u32) - 1u32) / 2u32;
        loop {
            let a: PolyP = trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if a.len() < 2 {
                continue;
            }
            let b = self.sub(&self.powmod(&a, &e, g), &[1]);
            let h = self.gcd(&b, g);
            if h.len() > 1 && h.len() < g.len() {
                let rest = self.divrem(g, &h).0;
                self.edf(&h, d, rng, out);
                self.edf(&rest, d, rng, out);
                return;
            }
        }
    }

    /// Monic irreducible factors of a monic square-free polynomial.
    pub fn factor_squarefree(&self, f: &[u64], rng: &mut ChaCha8Rng) -> Vec<PolyP> {
        let mut out = Vec::new();
        for (g, d) in self.ddf(f) {
            self.edf(&g, d, rng, &mut out);
        }
        out.sort();
        out
    }

    pub fn is_squarefree(&self, f: &[u64]) -> bool {
        let d = self.derivative(f);
        !d.is_empty() && self.gcd(f, &d).len() == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn factors_mod_small_prime() {
        let fp = Fp::new(7);
        // (t+1)(t+2)(t²+1) mod 7; t²+1 is irreducible since 7 ≡ 3 mod 4
        let f = fp.mul(&fp.mul(&[1, 1], &[2, 1]), &[1, 0, 1]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let fs = fp.factor_squarefree(&f, &mut rng);
        assert_eq!(fs, vec![vec![1, 0, 1], vec![1, 1], vec![2, 1]]);
    }

    #[test]
    fn splits_equal_degree() {
        let fp = Fp::new(13);
        // t²+1 splits mod 13 (5² = −1)
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let fs = fp.factor_squarefree(&[1, 0, 1], &mut rng);
        assert_eq!(fs, vec![vec![5, 1], vec![8, 1]]);
    }

    #[test]
    fn xgcd_identity() {
        let fp = Fp::new(11);
        let a = vec![3, 0, 1];
        let b = vec![1, 1];
        let (g, s, t) = fp.xgcd(&a, &b);
        assert_eq!(g, vec![1]);
        assert_eq!(fp.add(&fp.mul(&s, &a), &fp.mul(&t, &b)), vec![1]);
    }
}
