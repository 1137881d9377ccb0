//! Exact arithmetic in `Q(ζ_N)` using the power basis `1, ζ, …, ζ^{φ(N)-1}`.
//!
//! Coordinates are rationals with a shared positive denominator kept in lowest
//! terms, so equal values always have identical representations. Values of
//! different conductors are combined in the field of the least common multiple.
//!
//! Coordinates are fixed-width (`i128`); arithmetic is checked and panics on
//! overflow rather than silently wrapping. Character values of desk-scale groups
//! stay many orders of magnitude below that limit.

mod field;
pub mod fpoly;
mod ideal;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use field::{cyclotomic_poly, field, CycloField};
pub use ideal::{prime_ideal, prime_ideal_with, PrimeIdealRed, Residue, DEFAULT_FACTOR_SEED};

use crate::arith::{inv_mod, lcm, mul_mod};
use crate::{Error, Result};

pub type Rational = num_rational::Ratio<i128>;

#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CycloField>,
    num: Vec<i128>,
    den: i128,
}

fn overflow() -> ! {
    panic!("cyclotomic coefficient overflow")
}

fn cmul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).unwrap_or_else(|| overflow())
}

fn cadd(a: i128, b: i128) -> i128 {
    a.checked_add(b).unwrap_or_else(|| overflow())
}

impl Cyclotomic {
    fn from_parts(field: Arc<CycloField>, num: Vec<i128>, den: i128) -> Self {
        let mut out = Cyclotomic { field, num, den };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        debug_assert_eq!(self.num.len(), self.field.phi);
        if self.den < 0 {
            self.den = -self.den;
            for c in &mut self.num {
                *c = -*c;
            }
        }
        if self.num.iter().all(|&c| c == 0) {
            self.den = 1;
            return;
        }
        if self.den == 1 {
            return;
        }
        let g = self.num.iter().fold(self.den, |g, &c| g.gcd(&c));
        if g > 1 {
            for c in &mut self.num {
                *c /= g;
            }
            self.den /= g;
        }
    }

    pub fn zero(n: u32) -> Self {
        let f = field(n);
        let phi = f.phi;
        Cyclotomic { field: f, num: vec![0; phi], den: 1 }
    }

    pub fn integer(n: u32, v: i128) -> Self {
        let mut out = Self::zero(n);
        out.num[0] = v;
        out
    }

    pub fn one(n: u32) -> Self {
        Self::integer(n, 1)
    }

    pub fn rational(n: u32, r: Rational) -> Self {
        let mut out = Self::zero(n);
        out.num[0] = *r.numer();
        out.den = *r.denom();
        out.normalize();
        out
    }

    /// `ζ_n^k`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        let f = field(n);
        let j = k.rem_euclid(n as i64) as u64;
        let num = f.power(j).iter().map(|&c| c as i128).collect();
        Cyclotomic { field: f, num, den: 1 }
    }

    /// `Σ_j sums[j] ζ_n^j`, for any number of terms.
    pub fn from_root_sum(n: u32, sums: &[i64]) -> Self {
        let f = field(n);
        let mut num = vec![0i128; f.phi];
        for (j, &c) in sums.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (acc, &b) in num.iter_mut().zip(f.power(j as u64)) {
                *acc = cadd(*acc, cmul(c as i128, b as i128));
            }
        }
        Cyclotomic { field: f, num, den: 1 }
    }

    /// Builds a value from power-basis coordinates. Longer coordinate lists are
    /// reduced modulo the cyclotomic polynomial.
    pub fn from_coords(n: u32, coords: &[Rational]) -> Self {
        let f = field(n);
        let den = coords.iter().fold(1i128, |d, c| d.lcm(c.denom()));
        let mut num = vec![0i128; f.phi];
        for (i, c) in coords.iter().enumerate() {
            let scaled = cmul(*c.numer(), den / c.denom());
            if scaled == 0 {
                continue;
            }
            if i < f.phi {
                num[i] = cadd(num[i], scaled);
            } else {
                for (acc, &b) in num.iter_mut().zip(f.power(i as u64)) {
                    *acc = cadd(*acc, cmul(scaled, b as i128));
                }
            }
        }
        Self::from_parts(f, num, den)
    }

    pub fn conductor(&self) -> u32 {
        self.field.n
    }

    /// Power-basis coordinates, length `φ(N)`.
    pub fn coords(&self) -> Vec<Rational> {
        self.num.iter().map(|&c| Rational::new(c, self.den)).collect()
    }

    pub fn coord(&self, i: usize) -> Rational {
        Rational::new(self.num[i], self.den)
    }

    pub(crate) fn numerators(&self) -> &[i128] {
        &self.num
    }

    pub(crate) fn denominator(&self) -> i128 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|&c| c == 0)
    }

    /// The value as a rational number, if it is one.
    pub fn to_rational(&self) -> Option<Rational> {
        self.num[1..]
            .iter()
            .all(|&c| c == 0)
            .then(|| Rational::new(self.num[0], self.den))
    }

    pub fn to_integer(&self) -> Option<i128> {
        self.to_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    /// True when every coordinate is an integer (i.e. the value lies in `Z[ζ_N]`).
    pub fn is_integral(&self) -> bool {
        self.den == 1
    }

    /// The same value seen in `Q(ζ_m)`; requires `N | m`.
    pub fn embed(&self, m: u32) -> Result<Self> {
        let n = self.field.n;
        if m == 0 || !m.is_multiple_of(n) {
            return Err(Error::Domain(format!("conductor {n} does not divide {m}")));
        }
        if m == n {
            return Ok(self.clone());
        }
        let step = (m / n) as u64;
        let f = field(m);
        let mut num = vec![0i128; f.phi];
        for (i, &c) in self.num.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (acc, &b) in num.iter_mut().zip(f.power(i as u64 * step)) {
                *acc = cadd(*acc, cmul(c, b as i128));
            }
        }
        Ok(Self::from_parts(f, num, self.den))
    }

    fn aligned(a: &Self, b: &Self) -> (Self, Self) {
        let (n, m) = (a.field.n, b.field.n);
        if n == m {
            return (a.clone(), b.clone());
        }
        let l = lcm(n as u64, m as u64) as u32;
        (a.embed(l).unwrap(), b.embed(l).unwrap())
    }

    /// Image under the Galois automorphism `ζ ↦ ζ^k` (`gcd(k, N) = 1`).
    pub fn galois(&self, k: i64) -> Self {
        let n = self.field.n as i64;
        let k = k.rem_euclid(n) as u64;
        let mut num = vec![0i128; self.field.phi];
        for (i, &c) in self.num.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (acc, &b) in num.iter_mut().zip(self.field.power(i as u64 * k)) {
                *acc = cadd(*acc, cmul(c, b as i128));
            }
        }
        Cyclotomic { field: self.field.clone(), num, den: self.den }
    }

    /// Complex conjugate, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    fn add_same(&self, other: &Self, sign: i128) -> Self {
        let (d1, d2) = (self.den, other.den);
        let num = if d1 == d2 {
            self.num
                .iter()
                .zip(&other.num)
                .map(|(&a, &b)| cadd(a, cmul(sign, b)))
                .collect()
        } else {
            self.num
                .iter()
                .zip(&other.num)
                .map(|(&a, &b)| cadd(cmul(a, d2), cmul(sign, cmul(b, d1))))
                .collect()
        };
        let den = if d1 == d2 { d1 } else { cmul(d1, d2) };
        Self::from_parts(self.field.clone(), num, den)
    }

    fn mul_same(&self, other: &Self) -> Self {
        let phi = self.field.phi;
        let mut prod = vec![0i128; 2 * phi - 1];
        for (i, &a) in self.num.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.num.iter().enumerate() {
                if b != 0 {
                    prod[i + j] = cadd(prod[i + j], cmul(a, b));
                }
            }
        }
        let mut num = prod[..phi].to_vec();
        for (i, &c) in prod.iter().enumerate().skip(phi) {
            if c == 0 {
                continue;
            }
            for (acc, &b) in num.iter_mut().zip(self.field.power(i as u64)) {
                if b != 0 {
                    *acc = cadd(*acc, cmul(c, b as i128));
                }
            }
        }
        Self::from_parts(self.field.clone(), num, cmul(self.den, other.den))
    }

    pub fn scale(&self, r: Rational) -> Self {
        let num = self.num.iter().map(|&c| cmul(c, *r.numer())).collect();
        Self::from_parts(self.field.clone(), num, cmul(self.den, *r.denom()))
    }

    /// Multiplicative inverse, by the extended Euclidean algorithm in `Q[x]/(Φ_N)`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let to_big = |v: &[i128]| -> Vec<BigRational> {
            v.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect()
        };
        let modulus: Vec<BigRational> =
            self.field.poly.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
        // inverse of the numerator polynomial, then multiply by the denominator
        let (g, s) = ext_gcd(to_big(&self.num), modulus);
        debug_assert_eq!(g.len(), 1);
        let g0 = g[0].clone();
        let den = BigRational::from_integer(BigInt::from(self.den));
        let mut coords = Vec::with_capacity(self.field.phi);
        for i in 0..self.field.phi {
            let c = s.get(i).cloned().unwrap_or_else(BigRational::zero) * &den / &g0;
            let n = c.numer().to_i128();
            let d = c.denom().to_i128();
            match (n, d) {
                (Some(n), Some(d)) => coords.push(Rational::new(n, d)),
                _ => return Err(Error::Domain("inverse exceeds fixed-width coordinates".into())),
            }
        }
        Ok(Self::from_coords(self.field.n, &coords))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    /// Lexicographic comparison of power-basis coordinates (after conductor alignment).
    pub fn cmp_coords(&self, other: &Self) -> Ordering {
        let (a, b) = Self::aligned(self, other);
        for (&x, &y) in a.num.iter().zip(&b.num) {
            let ord = cmul(x, b.den).cmp(&cmul(y, a.den));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        Ordering::Equal
    }

    /// Image in `F_l` under `ζ_N ↦ z`, where `z` has multiplicative order `N` mod `l`.
    /// Denominators must be invertible mod `l`.
    pub fn to_residue_mod(&self, l: u64, z: u64) -> u64 {
        let li = l as i128;
        let mut acc = 0u64;
        let mut zp = 1u64;
        for &c in &self.num {
            let cm = c.rem_euclid(li) as u64;
            acc = (acc + mul_mod(cm, zp, l)) % l;
            zp = mul_mod(zp, z, l);
        }
        let d = (self.den.rem_euclid(li)) as u64;
        mul_mod(acc, inv_mod(d, l), l)
    }

    /// `Σ_{gcd(k,N)=1} σ_k(self)`: the trace down to `Q`.
    pub fn trace(&self) -> Rational {
        let n = self.field.n as i64;
        let mut acc = Self::zero(self.field.n);
        for k in 1..=n {
            if num_integer::gcd(k, n) == 1 {
                acc = &acc + &self.galois(k);
            }
        }
        acc.to_rational().expect("trace is rational")
    }
}

// Extended Euclid in Q[x]; returns (g, s) with s·a ≡ g (mod m), g constant when coprime.
fn ext_gcd(a: Vec<BigRational>, m: Vec<BigRational>) -> (Vec<BigRational>, Vec<BigRational>) {
    fn trim(v: &mut Vec<BigRational>) {
        while v.len() > 1 && v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
    }
    fn divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut rem = a.to_vec();
        trim(&mut rem);
        let db = b.len() - 1;
        if rem.len() <= db {
            return (vec![BigRational::zero()], rem);
        }
        let mut q = vec![BigRational::zero(); rem.len() - db];
        let lead = b[db].clone();
        for i in (db..rem.len()).rev() {
            let c = &rem[i] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                rem[i - db + j] = &rem[i - db + j] - &c * bj;
            }
            q[i - db] = c;
        }
        rem.truncate(db.max(1));
        trim(&mut rem);
        (q, rem)
    }
    fn sub_mul(a: &[BigRational], q: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let mut out = a.to_vec();
        let need = q.len() + b.len() - 1;
        if out.len() < need {
            out.resize(need, BigRational::zero());
        }
        for (i, qi) in q.iter().enumerate() {
            if qi.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                out[i + j] = &out[i + j] - qi * bj;
            }
        }
        trim(&mut out);
        out
    }
    let is_zero = |v: &[BigRational]| v.iter().all(Zero::is_zero);
    let (mut r0, mut r1) = (m, a);
    trim(&mut r1);
    let (mut s0, mut s1) = (vec![BigRational::zero()], vec![BigRational::one()]);
    while !is_zero(&r1) {
        let (q, r) = divrem(&r0, &r1);
        let s = sub_mul(&s0, &q, &s1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    (r0, s0)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.field.n == other.field.n {
            self.den == other.den && self.num == other.num
        } else {
            let (a, b) = Self::aligned(self, other);
            a.den == b.den && a.num == b.num
        }
    }
}

impl Eq for Cyclotomic {}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.field.n == rhs.field.n {
            self.add_same(rhs, 1)
        } else {
            let (a, b) = Cyclotomic::aligned(self, rhs);
            a.add_same(&b, 1)
        }
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.field.n == rhs.field.n {
            self.add_same(rhs, -1)
        } else {
            let (a, b) = Cyclotomic::aligned(self, rhs);
            a.add_same(&b, -1)
        }
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.field.n == rhs.field.n {
            self.mul_same(rhs)
        } else {
            let (a, b) = Cyclotomic::aligned(self, rhs);
            a.mul_same(&b)
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            field: self.field.clone(),
            num: self.num.iter().map(|&c| -c).collect(),
            den: self.den,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({}, {})", self.field.n, self)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{r}");
        }
        let n = self.field.n;
        let mut first = true;
        for (i, c) in self.coords().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let a = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let root = match i {
                0 => String::new(),
                1 => format!("z{n}"),
                _ => format!("z{n}^{i}"),
            };
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => write!(f, "{root}")?,
                _ => write!(f, "{a}*{root}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CycloRepr {
    conductor: u32,
    coeffs: Vec<String>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut coeffs: Vec<String> =
            self.coords().iter().map(|c| format!("{}/{}", c.numer(), c.denom())).collect();
        while coeffs.last().is_some_and(|c| c.starts_with("0/")) {
            coeffs.pop();
        }
        CycloRepr { conductor: self.field.n, coeffs }.serialize(s)
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse { locus: format!("coefficient {s:?}"), message: "expected num/den".into() };
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<i128>().map_err(|_| bad())?, d.trim().parse::<i128>().map_err(|_| bad())?),
        None => (s.trim().parse::<i128>().map_err(|_| bad())?, 1),
    };
    if d == 0 {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = CycloRepr::deserialize(d)?;
        if repr.conductor == 0 {
            return Err(serde::de::Error::custom("conductor must be positive"));
        }
        let phi = crate::arith::euler_phi(repr.conductor as u64) as usize;
        if repr.coeffs.len() > phi {
            return Err(serde::de::Error::custom(format!(
                "{} coefficients exceed φ({}) = {}",
                repr.coeffs.len(),
                repr.conductor,
                phi
            )));
        }
        let coords = repr
            .coeffs
            .iter()
            .map(|c| parse_rational(c))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(Cyclotomic::from_coords(repr.conductor, &coords))
    }
}

/// `Σ w·a·b` over values of conductor `n`, reducing modulo `Φ_n` once at the end.
pub fn weighted_sum_of_products<'a, I>(n: u32, terms: I) -> Cyclotomic
where
    I: IntoIterator<Item = (i128, &'a Cyclotomic, &'a Cyclotomic)>,
{
    let f = field(n);
    let phi = f.phi;
    let mut prod = vec![0i128; 2 * phi - 1];
    let mut rest = Cyclotomic::zero(n);
    for (w, a, b) in terms {
        if w == 0 {
            continue;
        }
        if a.field.n != n || b.field.n != n || a.den != 1 || b.den != 1 {
            rest = &rest + &(a * b).scale(Rational::from_integer(w));
            continue;
        }
        for (i, &x) in a.num.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let wx = cmul(w, x);
            for (j, &y) in b.num.iter().enumerate() {
                if y != 0 {
                    prod[i + j] = cadd(prod[i + j], cmul(wx, y));
                }
            }
        }
    }
    let mut num = prod[..phi].to_vec();
    for (i, &c) in prod.iter().enumerate().skip(phi) {
        if c == 0 {
            continue;
        }
        for (acc, &b) in num.iter_mut().zip(f.power(i as u64)) {
            if b != 0 {
                *acc = cadd(*acc, cmul(c, b as i128));
            }
        }
    }
    &Cyclotomic::from_parts(f, num, 1) + &rest
}

/// `N`-th root of unity in `F_l` matching `ζ_N` under a fixed embedding.
pub fn root_image(n: u32, l: u64) -> u64 {
    crate::arith::root_of_unity_mod(n as u64, l)
}

/// Sum of the primitive `N`-th roots of unity (equals `μ(N)`).
pub fn primitive_root_sum(n: u32) -> Cyclotomic {
    let mut acc = Cyclotomic::zero(n);
    for k in 1..=n as i64 {
        if num_integer::gcd(k, n as i64) == 1 {
            acc = &acc + &Cyclotomic::root_of_unity(n, k);
        }
    }
    acc
}
