//! Dense univariate polynomials over a prime field `F_p`, with equal-degree
//! (Cantor–Zassenhaus) factorisation.

use num_bigint::BigUint;
use rand::Rng;

use crate::arith::{inv_mod, mul_mod};

/// Coefficients are stored lowest degree first and kept trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut out = FpPoly {
            p,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        };
        out.trim();
        out
    }

    pub fn from_signed(p: u64, coeffs: &[i64]) -> Self {
        let pi = p as i64;
        Self::new(p, coeffs.iter().map(|&c| c.rem_euclid(pi) as u64).collect())
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { p, coeffs: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.leading(), self.p);
        self.scale(inv)
    }

    pub fn scale(&self, s: u64) -> Self {
        Self::new(self.p, self.coeffs.iter().map(|&c| mul_mod(c, s, self.p)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                (a + b) % self.p
            })
            .collect();
        Self::new(self.p, c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                (a + self.p - b) % self.p
            })
            .collect();
        Self::new(self.p, c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let mut c = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = (c[i + j] + mul_mod(a, b, self.p)) % self.p;
            }
        }
        Self::new(self.p, c)
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let p = self.p;
        let mut rem = self.coeffs.clone();
        let dd = divisor.deg();
        if rem.len() <= dd {
            return (Self::zero(p), self.clone());
        }
        let inv = inv_mod(divisor.leading(), p);
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = mul_mod(rem[i], inv, p);
            if c == 0 {
                continue;
            }
            quot[i - dd] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = (rem[idx] + p - mul_mod(c, d, p)) % p;
            }
        }
        (Self::new(p, quot), Self::new(p, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^exp mod modulus`.
    pub fn pow_mod(&self, exp: &BigUint, modulus: &Self) -> Self {
        let mut acc = Self::one(self.p).rem(modulus);
        let base = self.rem(modulus);
        for i in (0..exp.bits()).rev() {
            acc = acc.mul(&acc).rem(modulus);
            if exp.bit(i) {
                acc = acc.mul(&base).rem(modulus);
            }
        }
        acc
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (mul_mod(acc, x, self.p) + c) % self.p)
    }

    /// Splits a squarefree polynomial whose irreducible factors all have degree `d`.
    /// Factors are returned monic and sorted by coefficient list.
    pub fn equal_degree_factors<R: Rng>(&self, d: usize, rng: &mut R) -> Vec<FpPoly> {
        let mut out = Vec::new();
        let mut stack = vec![self.monic()];
        while let Some(h) = stack.pop() {
            let n = h.deg();
            if n == 0 {
                continue;
            }
            if n == d {
                out.push(h);
                continue;
            }
            loop {
                let a = Self::new(self.p, (0..n).map(|_| rng.gen_range(0..self.p)).collect());
                if a.deg() == 0 {
                    continue;
                }
                let g = h.gcd(&a);
                let g = if g.deg() > 0 { g } else { h.gcd(&h.splitting_element(&a, d)) };
                let gd = g.deg();
                if gd > 0 && gd < n {
                    let (q, _) = h.div_rem(&g);
                    stack.push(g);
                    stack.push(q.monic());
                    break;
                }
            }
        }
        out.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));
        out
    }

    // a^((p^d - 1)/2) - 1 for odd p, the trace a + a^2 + ... + a^(2^(d-1)) for p = 2.
    fn splitting_element(&self, a: &Self, d: usize) -> Self {
        let p = self.p;
        if p == 2 {
            let mut t = a.rem(self);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(self);
                acc = acc.add(&t);
            }
            acc
        } else {
            let q = BigUint::from(p).pow(d as u32);
            let e = (q - 1u32) / 2u32;
            a.pow_mod(&e, self).sub(&Self::one(p))
        }
    }

    /// Distinct roots in `F_p`, ascending.
    pub fn roots<R: Rng>(&self, rng: &mut R) -> Vec<u64> {
        let p = self.p;
        if self.deg() == 0 {
            return Vec::new();
        }
        let xp = Self::x(p).pow_mod(&BigUint::from(p), self);
        let split = self.gcd(&xp.sub(&Self::x(p)));
        let mut roots: Vec<u64> = split
            .equal_degree_factors(1, rng)
            .into_iter()
            .map(|f| (p - f.coeffs[0]) % p)
            .collect();
        roots.sort_unstable();
        roots
    }
}
