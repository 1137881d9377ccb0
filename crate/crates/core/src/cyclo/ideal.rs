use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::fpoly::FpPoly;
use super::{cyclotomic_poly, Cyclotomic};
use crate::arith::{inv_mod, is_prime, mult_order, valuation};
use crate::{Error, Result};

/// Seed for the randomised factorisation behind [`prime_ideal`]. The chosen
/// ideal does not depend on it: factors are sorted before one is picked.
pub const DEFAULT_FACTOR_SEED: u64 = 0x5eed;

/// Reduction map `Z[ζ_N] → F_{p^f}` for a maximal ideal above `p`.
///
/// Writing `N = p^k·m` with `p ∤ m`, the residue field is `F_p[x]/(g)` for an
/// irreducible factor `g` of `Φ_m` mod `p`, and `ζ_N` is sent to `x^u` with
/// `u·p^k ≡ 1 (mod m)`; the `p^k`-th roots of unity all reduce to 1.
#[derive(Clone, Debug)]
pub struct PrimeIdealRed {
    p: u64,
    conductor: u32,
    p_free: u32,
    modulus: FpPoly,
    f: usize,
    // images of ζ_N^i for i < φ(N)
    root_powers: Vec<FpPoly>,
}

/// Element of the residue field, as a polynomial reduced modulo the ideal's modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Residue(FpPoly);

impl Residue {
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn coeffs(&self) -> &[u64] {
        self.0.coeffs()
    }
}

pub fn prime_ideal(p: u64, n: u32) -> Result<PrimeIdealRed> {
    prime_ideal_with(p, n, 0, DEFAULT_FACTOR_SEED)
}

/// Like [`prime_ideal`] but picks the `choice`-th factor in sorted order.
pub fn prime_ideal_with(p: u64, n: u32, choice: usize, seed: u64) -> Result<PrimeIdealRed> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    if n == 0 {
        return Err(Error::Domain("conductor must be positive".into()));
    }
    let k = valuation(n as u64, p);
    let m = (n as u64 / p.pow(k)) as u32;
    let f = mult_order(p % m as u64, m as u64) as usize;
    let phi_m = FpPoly::from_signed(p, &cyclotomic_poly(m));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let factors = phi_m.equal_degree_factors(f, &mut rng);
    let modulus = factors.get(choice).cloned().ok_or_else(|| {
        Error::Domain(format!("only {} ideals above {p} in conductor {m}", factors.len()))
    })?;
    // ζ_N ↦ x^u with u = (p^k)^{-1} mod m
    let u = if m == 1 { 0 } else { mod_inverse(p.pow(k), m as u64) };
    let root = x_power(p, u, &modulus);
    let phi_n = super::field(n).degree();
    let mut root_powers = Vec::with_capacity(phi_n);
    let mut cur = FpPoly::one(p).rem(&modulus);
    for _ in 0..phi_n {
        root_powers.push(cur.clone());
        cur = cur.mul(&root).rem(&modulus);
    }
    Ok(PrimeIdealRed { p, conductor: n, p_free: m, modulus, f, root_powers })
}

// general modular inverse (m need not be prime)
fn mod_inverse(a: u64, m: u64) -> u64 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (m as i128, (a % m) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(m as i128) as u64
}

fn x_power(p: u64, e: u64, modulus: &FpPoly) -> FpPoly {
    FpPoly::x(p).pow_mod(&e.into(), modulus)
}

impl PrimeIdealRed {
    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// `p'`-part of the conductor.
    pub fn p_free_conductor(&self) -> u32 {
        self.p_free
    }

    pub fn modulus(&self) -> &FpPoly {
        &self.modulus
    }

    /// Residue field degree `f`; the field has `p^f` elements.
    pub fn residue_degree(&self) -> usize {
        self.f
    }

    pub fn add(&self, a: &Residue, b: &Residue) -> Residue {
        Residue(a.0.add(&b.0).rem(&self.modulus))
    }

    pub fn mul(&self, a: &Residue, b: &Residue) -> Residue {
        Residue(a.0.mul(&b.0).rem(&self.modulus))
    }

    pub fn reduce(&self, a: &Cyclotomic) -> Result<Residue> {
        let owned;
        let a = if a.conductor() == self.conductor {
            a
        } else {
            owned = a.embed(self.conductor).map_err(|_| {
                Error::Reduction(format!(
                    "value of conductor {} does not embed in conductor {}",
                    a.conductor(),
                    self.conductor
                ))
            })?;
            &owned
        };
        let p = self.p as i128;
        let den = a.denominator();
        if den % p == 0 {
            return Err(Error::Reduction(format!("denominator {den} is divisible by {p}")));
        }
        let mut acc = FpPoly::zero(self.p);
        for (c, rp) in a.numerators().iter().zip(&self.root_powers) {
            let c = c.rem_euclid(p) as u64;
            if c != 0 {
                acc = acc.add(&rp.scale(c));
            }
        }
        let dinv = inv_mod(den.rem_euclid(p) as u64, self.p);
        Ok(Residue(acc.scale(dinv).rem(&self.modulus)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ideal_examples() {
        let i = prime_ideal(2, 3).unwrap();
        assert_eq!(i.modulus().coeffs(), &[1, 1, 1]);
        assert_eq!(i.residue_degree(), 2);
        assert_eq!(prime_ideal(7, 3).unwrap().residue_degree(), 1);
        assert_eq!(prime_ideal(5, 4).unwrap().residue_degree(), 1);
        assert!(prime_ideal(4, 3).is_err());
    }

    #[test]
    fn reduction_examples() {
        let i3 = prime_ideal(3, 1).unwrap();
        assert!(i3.reduce(&Cyclotomic::integer(1, 3)).unwrap().is_zero());
        for (p, n) in [(2, 3), (5, 3), (7, 3), (3, 3)] {
            let i = prime_ideal(p, n).unwrap();
            let s = &Cyclotomic::root_of_unity(3, 1) + &Cyclotomic::root_of_unity(3, 2);
            assert_eq!(i.reduce(&s).unwrap(), i.reduce(&Cyclotomic::integer(3, -1)).unwrap());
        }
        let i2 = prime_ideal(2, 4).unwrap();
        assert_eq!(
            i2.reduce(&Cyclotomic::root_of_unity(4, 1)).unwrap(),
            i2.reduce(&Cyclotomic::one(4)).unwrap()
        );
    }

    #[test]
    fn denominators_divisible_by_p_are_rejected() {
        let i = prime_ideal(2, 1).unwrap();
        let half = Cyclotomic::rational(1, super::super::Rational::new(1, 2));
        assert!(matches!(i.reduce(&half), Err(Error::Reduction(_))));
        let third = Cyclotomic::rational(1, super::super::Rational::new(1, 3));
        assert!(i.reduce(&third).is_ok());
    }
}
